use rand::Rng;

use crate::random::small_rational;
use crate::scalar::{rat, Rational};

/// First curvature data of the metric at the origin of normal coordinates.
///
/// Only the Riemann tensor is stored; Ricci and the linear part of the
/// Christoffel symbols are derived from it.
#[derive(Clone, PartialEq, Debug)]
pub struct CurvatureJet {
    dim: usize,
    riemann: Vec<Rational>,
}

impl CurvatureJet {
    pub fn flat(dim: usize) -> Self {
        Self {
            dim,
            riemann: vec![rat(0, 1); dim.pow(4)],
        }
    }

    /// Kulkarni–Nomizu product `h ∧ k` of two symmetric matrices, which has
    /// all algebraic symmetries of a curvature tensor.
    pub fn kulkarni_nomizu(h: &[Vec<Rational>], k: &[Vec<Rational>]) -> Self {
        let dim = h.len();
        let mut out = Self::flat(dim);
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    for d in 0..dim {
                        let v = &h[a][c] * &k[b][d] + &h[b][d] * &k[a][c]
                            - &h[a][d] * &k[b][c]
                            - &h[b][c] * &k[a][d];
                        let idx = out.index(a, b, c, d);
                        out.riemann[idx] = v;
                    }
                }
            }
        }
        out
    }

    /// Random curvature tensor from two random symmetric matrices.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Self {
        let mut sym = || {
            let mut m = vec![vec![rat(0, 1); dim]; dim];
            for i in 0..dim {
                for j in i..dim {
                    let v = small_rational(rng);
                    m[i][j] = v.clone();
                    m[j][i] = v;
                }
            }
            m
        };
        let h = sym();
        let k = sym();
        Self::kulkarni_nomizu(&h, &k)
    }

    fn index(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        ((a * self.dim + b) * self.dim + c) * self.dim + d
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn riemann(&self, a: usize, b: usize, c: usize, d: usize) -> &Rational {
        &self.riemann[self.index(a, b, c, d)]
    }

    pub fn ricci(&self, a: usize, b: usize) -> Rational {
        (0..self.dim).map(|c| self.riemann(c, a, c, b).clone()).sum()
    }

    /// Coefficient of `x^d` in `Γ^a_{bc}`: `-(R_{abcd} + R_{acbd})/3`.
    pub fn gamma_linear(&self, a: usize, b: usize, c: usize, d: usize) -> Rational {
        -(self.riemann(a, b, c, d) + self.riemann(a, c, b, d)) / rat(3, 1)
    }

    /// Coefficient of `x^d` in the spin connection `ω_{jkl}` in radial gauge:
    /// `R_{kldj}/2`.
    pub fn spin_connection_linear(&self, j: usize, k: usize, l: usize, d: usize) -> Rational {
        self.riemann(k, l, d, j) / rat(2, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.riemann.iter().all(num::Zero::is_zero)
    }

    /// Pair antisymmetries, pair symmetry and the first Bianchi identity.
    pub fn has_curvature_symmetries(&self) -> bool {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let r = self.riemann(a, b, c, d);
                        if *r != -self.riemann(b, a, c, d).clone()
                            || *r != -self.riemann(a, b, d, c).clone()
                            || r != self.riemann(c, d, a, b)
                        {
                            return false;
                        }
                        let bianchi = r + self.riemann(a, c, d, b) + self.riemann(a, d, b, c);
                        if !num::Zero::is_zero(&bianchi) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::rng_from_seed;

    #[test]
    fn random_jets_have_symmetries() {
        let mut rng = rng_from_seed(5);
        for dim in 2..6 {
            let j = CurvatureJet::random(&mut rng, dim);
            assert!(j.has_curvature_symmetries());
            for a in 0..dim {
                for b in 0..dim {
                    assert_eq!(j.ricci(a, b), j.ricci(b, a));
                }
            }
        }
    }

    #[test]
    fn round_sphere_like_jet() {
        // h = k = δ/√2 gives R_abcd = δ_ac δ_bd - δ_ad δ_bc, Ric = (n-1)δ
        let dim = 4;
        let half = vec![vec![rat(0, 1); dim]; dim];
        let mut id = half.clone();
        let mut h = half;
        for i in 0..dim {
            id[i][i] = rat(1, 1);
            h[i][i] = rat(1, 2);
        }
        let j = CurvatureJet::kulkarni_nomizu(&id, &h);
        assert_eq!(*j.riemann(0, 1, 0, 1), rat(1, 1));
        assert_eq!(j.ricci(2, 2), rat(3, 1));
        assert_eq!(j.ricci(0, 1), rat(0, 1));
    }

    #[test]
    fn gamma_linear_symmetric_in_lower_indices() {
        let j = CurvatureJet::random(&mut rng_from_seed(9), 3);
        assert_eq!(j.gamma_linear(0, 1, 2, 1), j.gamma_linear(0, 2, 1, 1));
    }
}
