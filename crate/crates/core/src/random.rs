//! Seeded generators for small exact test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Blade, Multivector};
use crate::coeff::CMatrix;
use crate::scalar::{rat, Gaussian, Rational};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 9` and `q ∈ {1, 2, 3}`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.random_range(-9..=9), rng.random_range(1..=3))
}

/// Like [`small_rational`] but never zero.
pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

pub fn small_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Gaussian {
    Gaussian::new(small_rational(rng), small_rational(rng))
}

pub fn rational_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small_rational(rng)).collect()
}

/// Random multivector with about `terms` blades and Gaussian coefficients.
pub fn random_multivector<R: Rng + ?Sized>(rng: &mut R, dim: usize, terms: usize) -> Multivector {
    let mut m = Multivector::zero(dim);
    for _ in 0..terms {
        let blade = Blade(rng.random_range(0..(1u32 << dim)));
        m.add_term(blade, small_gaussian(rng));
    }
    m
}

/// Random word of generator indices (0-based) of length at most `max_len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_len: usize) -> Vec<usize> {
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| rng.random_range(0..dim)).collect()
}

/// Random traceless anti-hermitian `N × N` matrix.
pub fn traceless_antihermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let mut m = CMatrix::zero(n);
    let mut diag_sum = rat(0, 1);
    for i in 0..n {
        for j in (i + 1)..n {
            let z = small_gaussian(rng);
            m.set(j, i, Gaussian::new(-z.re.clone(), z.im.clone()));
            m.set(i, j, z);
        }
        if i + 1 < n {
            let d = small_rational(rng);
            diag_sum += &d;
            m.set(i, i, Gaussian::new(rat(0, 1), d));
        }
    }
    if n > 0 {
        m.set(n - 1, n - 1, Gaussian::new(rat(0, 1), -diag_sum));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coefficient;

    #[test]
    fn antihermitian_and_traceless() {
        let mut rng = rng_from_seed(3);
        for n in 1..5 {
            let x = traceless_antihermitian(&mut rng, n);
            assert_eq!(x.adjoint(), x.negate());
            assert!(num::Zero::is_zero(&x.trace()));
        }
    }

    #[test]
    fn rationals_are_small() {
        let mut rng = rng_from_seed(0);
        for _ in 0..200 {
            let r = small_rational(&mut rng);
            assert!(r.numer().magnitude() <= &9u32.into());
            assert!(*r.denom() <= 3.into());
        }
    }

    #[test]
    fn seeding_is_deterministic() {
        let a: Vec<_> = (0..5).map(|_| small_rational(&mut rng_from_seed(11))).collect();
        let b: Vec<_> = (0..5).map(|_| small_rational(&mut rng_from_seed(11))).collect();
        assert_eq!(a, b);
    }
}
