//! Checks that share no code with the symbolic engine: explicit gamma
//! matrices, a floating-point evaluation of the torsion functional, and
//! Monte-Carlo sphere moments.

use nalgebra::{DMatrix, SymmetricEigen};
use num::complex::Complex64;
use num::{One, Zero};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::clifford::{trace_exponent, Multivector};
use crate::coeff::{CMatrix, Coefficient};
use crate::parallel::{run_trials, Execution};
use crate::scalar::{rational_to_f64, Gaussian, Rational};
use crate::torsion::TorsionTensor;

fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (na, nb) = (a.size(), b.size());
    let mut out = CMatrix::zero(na * nb);
    for (i, j, x) in a.nonzeros() {
        for (k, l, y) in b.nonzeros() {
            out.set(i * nb + k, j * nb + l, x * y);
        }
    }
    out
}

fn pauli() -> [CMatrix; 4] {
    let g = |re: i64, im: i64| Gaussian::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()));
    let z = g(0, 0);
    [
        CMatrix::identity(2),
        CMatrix::from_dense(vec![vec![z.clone(), g(1, 0)], vec![g(1, 0), z.clone()]]),
        CMatrix::from_dense(vec![vec![z.clone(), g(0, -1)], vec![g(0, 1), z.clone()]]),
        CMatrix::from_dense(vec![vec![g(1, 0), z.clone()], vec![z, g(-1, 0)]]),
    ]
}

/// Gamma matrices from tensor products of Pauli matrices, of size `2^{⌈n/2⌉}`.
/// Odd `n` uses the representation `γ ⊕ (-γ)`.
pub fn gamma_matrices(n: usize) -> Vec<CMatrix> {
    let [id, x, y, z] = pauli();
    let k = n / 2;
    let mut gammas = Vec::with_capacity(n);
    for j in 0..k {
        for s in [&x, &y] {
            let mut m = CMatrix::identity(1);
            for slot in 0..k {
                let factor = if slot < j {
                    &z
                } else if slot == j {
                    s
                } else {
                    &id
                };
                m = kron(&m, factor);
            }
            gammas.push(m);
        }
    }
    if n % 2 == 0 {
        return gammas;
    }
    // last generator: (-i)^k γ_1 ... γ_{2k}, then double
    let mut top = CMatrix::identity(1 << k);
    for g in &gammas {
        top = top.times(g);
    }
    gammas.push(top.scale(&(-Gaussian::i()).pow(k as u32)));
    gammas.iter().map(|g| kron(&z, g)).collect()
}

/// Matrix of a multivector in the representation of [`gamma_matrices`].
pub fn represent(x: &Multivector, gammas: &[CMatrix]) -> CMatrix {
    let size = 1usize << trace_exponent(x.dim());
    let mut out = CMatrix::zero(size);
    for (blade, c) in x.terms() {
        let mut m = CMatrix::identity(size);
        for i in blade.indices() {
            m = m.times(&gammas[i]);
        }
        out = out.plus(&m.scale(c));
    }
    out
}

/// Product of the gamma matrices of a word.
pub fn word_matrix(word: &[usize], gammas: &[CMatrix], size: usize) -> CMatrix {
    word.iter().fold(CMatrix::identity(size), |m, &i| m.times(&gammas[i]))
}

fn to_dense(m: &CMatrix) -> DMatrix<Complex64> {
    let mut d = DMatrix::zeros(m.size(), m.size());
    for (i, j, v) in m.nonzeros() {
        d[(i, j)] = v.to_complex64();
    }
    d
}

/// Points `±e_i`, a spherical 3-design.
fn cross_polytope(n: usize) -> Vec<Vec<f64>> {
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        for s in [1.0, -1.0] {
            let mut p = vec![0.0; n];
            p[i] = s;
            pts.push(p);
        }
    }
    pts
}

/// Floating-point torsion functional in units of `V(S^{n-1})`.
///
/// Uses that `D_T` has constant coefficients at the point, so
/// `σ(D_T|D_T|^{-n})(ξ) = p(ξ) |p(ξ)|^{-n}` exactly. The degree `-n` part is
/// extracted from large-`λ` samples by Richardson extrapolation and averaged
/// over a spherical design, which is exact because that part restricts to a
/// quadratic polynomial on the sphere.
pub fn brute_force_torsion_functional(
    u: &[Rational],
    v: &[Rational],
    w: &[Rational],
    t: &TorsionTensor,
    n: usize,
) -> Complex64 {
    let gammas: Vec<DMatrix<Complex64>> = gamma_matrices(n).iter().map(to_dense).collect();
    let size = gammas[0].nrows();
    let slash = |c: &[f64]| {
        let mut m = DMatrix::zeros(size, size);
        for (a, g) in gammas.iter().enumerate() {
            m += g * Complex64::new(c[a], 0.0);
        }
        m
    };
    let form = |f: &[Rational]| slash(&f.iter().map(rational_to_f64).collect::<Vec<_>>());
    let p_op = form(u) * form(v) * form(w);
    let mut theta = DMatrix::zeros(size, size);
    for j in 0..n {
        for p in 0..n {
            for s in 0..n {
                let val = rational_to_f64(&t.get(j, p, s));
                if val != 0.0 {
                    theta += &gammas[j] * &gammas[p] * &gammas[s] * Complex64::new(val, 0.0);
                }
            }
        }
    }
    let zeroth = theta * Complex64::new(0.0, -1.0 / 8.0);
    let symbol = |xi: &[f64], lambda: f64| {
        let scaled: Vec<f64> = xi.iter().map(|x| x * lambda).collect();
        let p = -slash(&scaled) + &zeroth;
        let eig = SymmetricEigen::new(p.clone());
        let mut abs_pow = DMatrix::zeros(size, size);
        for (k, ev) in eig.eigenvalues.iter().enumerate() {
            let col = eig.eigenvectors.column(k);
            abs_pow += col * col.adjoint() * Complex64::new(ev.abs().powi(-(n as i32)), 0.0);
        }
        p * abs_pow
    };
    let lambda = 1.0e3;
    let mut total = Complex64::zero();
    let points = cross_polytope(n);
    for xi in &points {
        let lead = -slash(xi);
        let g = |l: f64| symbol(xi, l) * Complex64::new(l.powi(n as i32), 0.0) - &lead * Complex64::new(l, 0.0);
        // g(λ) = B + C/λ + D/λ² + ...; two Richardson steps remove C and D
        let r1 = |l: f64| g(2.0 * l) * Complex64::new(2.0, 0.0) - g(l);
        let extrapolated = (r1(2.0 * lambda) * Complex64::new(4.0, 0.0) - r1(lambda)) * Complex64::new(1.0 / 3.0, 0.0);
        total += (&p_op * extrapolated).trace();
    }
    total / points.len() as f64
}

/// Monte-Carlo estimates of `∫ ξ^α dS / V(S^{n-1})` for several monomials on
/// one shared sample of uniform points.
pub fn monte_carlo_moments(
    alphas: &[Vec<u8>],
    n: usize,
    samples: usize,
    seed: u64,
    execution: Execution,
) -> Vec<f64> {
    const CHUNK: usize = 1 << 14;
    let chunks = samples.div_ceil(CHUNK);
    let partial = run_trials(execution, seed, chunks, |c, rng| {
        let len = CHUNK.min(samples - c * CHUNK);
        let mut sums = vec![0.0; alphas.len()];
        let mut x = vec![0.0f64; n];
        for _ in 0..len {
            let mut norm2 = 0.0;
            for xi in x.iter_mut() {
                *xi = rng.sample(StandardNormal);
                norm2 += *xi * *xi;
            }
            let inv = norm2.sqrt().recip();
            for xi in x.iter_mut() {
                *xi *= inv;
            }
            for (s, alpha) in sums.iter_mut().zip(alphas) {
                *s += alpha.iter().zip(&x).map(|(&e, &xi)| xi.powi(e as i32)).product::<f64>();
            }
        }
        sums
    });
    let mut totals = vec![0.0; alphas.len()];
    for p in partial {
        for (t, s) in totals.iter_mut().zip(p) {
            *t += s;
        }
    }
    totals.iter().map(|t| t / samples as f64).collect()
}

/// Checks `γ^a γ^b + γ^b γ^a = 2δ^{ab}` for a set of matrices.
pub fn satisfies_clifford_relations(gammas: &[CMatrix]) -> bool {
    let size = gammas.first().map_or(1, CMatrix::size);
    let two = CMatrix::identity(size).scale(&Gaussian::from_int(2));
    gammas.iter().enumerate().all(|(a, ga)| {
        gammas.iter().enumerate().all(|(b, gb)| {
            let ac = ga.times(gb).plus(&gb.times(ga));
            if a == b {
                ac == two
            } else {
                ac.vanishes()
            }
        })
    })
}

/// `Tr(1)` of the oracle representation.
pub fn representation_trace_of_unit(n: usize) -> Gaussian {
    let size = gamma_matrices(n)[0].size();
    CMatrix::identity(size).trace() * Gaussian::one()
}
