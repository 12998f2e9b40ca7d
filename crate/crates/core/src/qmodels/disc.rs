use std::collections::BTreeMap;

use nalgebra::DMatrix;

/// Largest accepted change of a truncated trace between `N - 1` and `N`.
pub const CONVERGENCE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiscError {
    #[error("deformation parameter must lie in (0, 1), got {0}")]
    InvalidQ(f64),
    #[error("truncation must be at least 1")]
    InvalidTruncation,
    #[error("elements have different deformation parameters")]
    MixedQ,
    #[error("truncated trace not converged: successive values differ by {0:e}")]
    NotConverged(f64),
}

/// Real polynomial in `Y`, lowest degree first.
type Poly = Vec<f64>;

fn poly_trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0.0) {
        p.pop();
    }
    p
}

fn poly_add(a: &[f64], b: &[f64]) -> Poly {
    let mut out = vec![0.0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    poly_trim(out)
}

fn poly_mul(a: &[f64], b: &[f64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

/// `P(sY + c)`.
fn poly_affine(p: &[f64], s: f64, c: f64) -> Poly {
    let mut out: Poly = Vec::new();
    let lin = [c, s];
    for coeff in p.iter().rev() {
        out = poly_add(&poly_mul(&out, &lin), &[*coeff]);
    }
    out
}

fn poly_eval(p: &[f64], y: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * y + c)
}

/// Polynomial in `z, z*` of the quantum disc, `z* z - q² z z* = 1 - q²`,
/// stored in the normal form `Σ_{s≥0} z^s P_s(Y) + Σ_{s>0} P_{-s}(Y) z*^s`
/// with `Y = z* z`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuantumDiscElement {
    q: f64,
    terms: BTreeMap<i64, Poly>,
}

impl QuantumDiscElement {
    pub fn zero(q: f64) -> Result<Self, DiscError> {
        if !(q > 0.0 && q < 1.0) {
            return Err(DiscError::InvalidQ(q));
        }
        Ok(Self {
            q,
            terms: BTreeMap::new(),
        })
    }

    fn with_term(q: f64, shift: i64, p: Poly) -> Result<Self, DiscError> {
        let mut out = Self::zero(q)?;
        out.insert(shift, p);
        Ok(out)
    }

    pub fn one(q: f64) -> Result<Self, DiscError> {
        Self::with_term(q, 0, vec![1.0])
    }

    pub fn z(q: f64) -> Result<Self, DiscError> {
        Self::with_term(q, 1, vec![1.0])
    }

    pub fn z_star(q: f64) -> Result<Self, DiscError> {
        Self::with_term(q, -1, vec![1.0])
    }

    /// `P(z* z)` from coefficients, lowest degree first.
    pub fn polynomial_in_y(q: f64, coeffs: &[f64]) -> Result<Self, DiscError> {
        Self::with_term(q, 0, poly_trim(coeffs.to_vec()))
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    fn insert(&mut self, shift: i64, p: Poly) {
        let merged = match self.terms.get(&shift) {
            Some(existing) => poly_add(existing, &p),
            None => poly_trim(p),
        };
        if merged.is_empty() {
            self.terms.remove(&shift);
        } else {
            self.terms.insert(shift, merged);
        }
    }

    /// Coefficients of the `Y`-polynomial at a given shift.
    pub fn component(&self, shift: i64) -> &[f64] {
        self.terms.get(&shift).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, DiscError> {
        if self.q != rhs.q {
            return Err(DiscError::MixedQ);
        }
        let mut out = self.clone();
        for (s, p) in &rhs.terms {
            out.insert(*s, p.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut out = Self {
            q: self.q,
            terms: BTreeMap::new(),
        };
        for (s, p) in &self.terms {
            out.insert(*s, p.iter().map(|x| x * c).collect());
        }
        out
    }

    /// `ψ^k`: `P(Y) z = z P(ψ(Y))` with `ψ(Y) = q²Y + 1 - q²`.
    fn psi(&self, p: &[f64], k: i64) -> Poly {
        let q2 = self.q * self.q;
        let mut out = p.to_vec();
        for _ in 0..k {
            out = poly_affine(&out, q2, 1.0 - q2);
        }
        out
    }

    /// `φ^k`: `z P(Y) = P(φ(Y)) z` with `φ(Y) = (Y - 1 + q²)/q²`.
    fn phi(&self, p: &[f64], k: i64) -> Poly {
        let q2 = self.q * self.q;
        let mut out = p.to_vec();
        for _ in 0..k {
            out = poly_affine(&out, 1.0 / q2, (q2 - 1.0) / q2);
        }
        out
    }

    /// `z*^k z^k` as a polynomial in `Y`.
    fn star_then_z(&self, k: i64) -> Poly {
        let mut g = vec![1.0];
        for _ in 0..k {
            g = poly_mul(&self.psi(&g, 1), &[0.0, 1.0]);
        }
        g
    }

    /// `z^k z*^k` as a polynomial in `Y`.
    fn z_then_star(&self, k: i64) -> Poly {
        let mut h = vec![1.0];
        let q2 = self.q * self.q;
        let phi_y = [(q2 - 1.0) / q2, 1.0 / q2];
        for _ in 0..k {
            h = poly_mul(&self.phi(&h, 1), &phi_y);
        }
        h
    }

    /// Normal form of a product of two normal-form terms.
    fn term_product(&self, s: i64, p: &[f64], t: i64, r: &[f64]) -> (i64, Poly) {
        match (s >= 0, t >= 0) {
            // z^s P · z^t R = z^{s+t} P(ψ^t) R
            (true, true) => (s + t, poly_mul(&self.psi(p, t), r)),
            // P z*^a · R z*^b = P R(ψ^a) z*^{a+b}
            (false, false) => (s + t, poly_mul(p, &self.psi(r, -s))),
            // z^s (P R) z*^d
            (true, false) => {
                let d = -t;
                let m = poly_mul(p, r);
                if s >= d {
                    (s - d, poly_mul(&self.phi(&m, d), &self.z_then_star(d)))
                } else {
                    (s - d, poly_mul(&self.phi(&m, s), &self.z_then_star(s)))
                }
            }
            // P z*^c z^t R
            (false, true) => {
                let c = -s;
                if c <= t {
                    let k = t - c;
                    let g = self.psi(&self.star_then_z(c), k);
                    (k, poly_mul(&poly_mul(&self.psi(p, k), &g), r))
                } else {
                    let k = c - t;
                    let g = self.psi(&self.star_then_z(t), k);
                    (-k, poly_mul(&poly_mul(p, &g), &self.psi(r, k)))
                }
            }
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, DiscError> {
        if self.q != rhs.q {
            return Err(DiscError::MixedQ);
        }
        let mut out = Self::zero(self.q)?;
        for (s, p) in &self.terms {
            for (t, r) in &rhs.terms {
                let (shift, poly) = self.term_product(*s, p, *t, r);
                out.insert(shift, poly);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self, DiscError> {
        let mut acc = Self::one(self.q)?;
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `λ_k = 1 - q^{2(k+1)}`, the eigenvalue of `z* z` on `e_k`.
    pub fn lambda(&self, k: usize) -> f64 {
        1.0 - self.q.powi(2 * (k as i32 + 1))
    }

    /// `Σ_{k=0}^{N} ⟨e_k, π(x) e_k⟩`.
    pub fn partial_trace(&self, n: usize) -> f64 {
        let p = self.component(0);
        (0..=n).map(|k| poly_eval(p, self.lambda(k))).sum()
    }
}

/// Compression of `π(x)` to `span(e_0, ..., e_N)`, where
/// `π(z) e_k = √(1 - q^{2(k+1)}) e_{k+1}`.
pub fn disc_represent(x: &QuantumDiscElement, n: usize) -> Result<DMatrix<f64>, DiscError> {
    if n < 1 {
        return Err(DiscError::InvalidTruncation);
    }
    let dim = n + 1;
    let sqrt_lambda = |k: usize| x.lambda(k).sqrt();
    let mut m = DMatrix::zeros(dim, dim);
    for (&s, p) in &x.terms {
        for k in 0..dim {
            if s >= 0 {
                // z^s P(Y) e_k = P(λ_k) Π_{i=k}^{k+s-1} √λ_i e_{k+s}
                let target = k + s as usize;
                if target >= dim {
                    continue;
                }
                let w: f64 = (k..target).map(sqrt_lambda).product();
                m[(target, k)] += poly_eval(p, x.lambda(k)) * w;
            } else {
                // P(Y) z*^t e_k = Π_{i=k-t}^{k-1} √λ_i P(λ_{k-t}) e_{k-t}
                let t = (-s) as usize;
                if k < t {
                    continue;
                }
                let target = k - t;
                let w: f64 = (target..k).map(sqrt_lambda).product();
                m[(target, k)] += poly_eval(p, x.lambda(target)) * w;
            }
        }
    }
    Ok(m)
}

/// `τ_1(x)`: average of the circle symbol, on which `z* z ↦ 1` and the
/// shifted parts integrate to zero.
pub fn tau1(x: &QuantumDiscElement) -> f64 {
    poly_eval(x.component(0), 1.0)
}

fn regularized(x: &QuantumDiscElement, n: usize, offset: f64) -> Result<f64, DiscError> {
    if n < 1 {
        return Err(DiscError::InvalidTruncation);
    }
    let t1 = tau1(x);
    let at = |m: usize| x.partial_trace(m) - (m as f64 + offset) * t1;
    let (prev, last) = (at(n - 1), at(n));
    let change = (last - prev).abs();
    if change > CONVERGENCE_TOLERANCE {
        return Err(DiscError::NotConverged(change));
    }
    Ok(last)
}

/// `τ_0^↑(x) = lim Tr_N π(x) - (N + 3/2) τ_1(x)`.
pub fn tau0_up(x: &QuantumDiscElement, n: usize) -> Result<f64, DiscError> {
    regularized(x, n, 1.5)
}

/// `τ_0^↓(x) = lim Tr_N π(x) - (N + 1/2) τ_1(x)`.
pub fn tau0_dn(x: &QuantumDiscElement, n: usize) -> Result<f64, DiscError> {
    regularized(x, n, 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: f64 = 0.5;

    fn close(a: &DMatrix<f64>, b: &DMatrix<f64>) -> bool {
        (a - b).abs().max() < 1e-12
    }

    #[test]
    fn defining_relation_holds() {
        let z = QuantumDiscElement::z(Q).unwrap();
        let zs = QuantumDiscElement::z_star(Q).unwrap();
        let lhs = zs.mul(&z).unwrap().add(&z.mul(&zs).unwrap().scale(-Q * Q)).unwrap();
        let rhs = QuantumDiscElement::one(Q).unwrap().scale(1.0 - Q * Q);
        assert_eq!(lhs.terms.len(), 1);
        for (a, b) in lhs.component(0).iter().zip(rhs.component(0)) {
            assert!((a - b).abs() < 1e-14);
        }
        assert!(lhs.component(0).iter().skip(1).all(|c| c.abs() < 1e-14));
    }

    #[test]
    fn representation_is_multiplicative() {
        let n = 12;
        let z = QuantumDiscElement::z(Q).unwrap();
        let zs = QuantumDiscElement::z_star(Q).unwrap();
        let y = QuantumDiscElement::polynomial_in_y(Q, &[0.5, -1.0, 2.0]).unwrap();
        let a = z.mul(&y).unwrap().add(&zs.pow(2).unwrap()).unwrap();
        let b = zs.mul(&y).unwrap().add(&z.pow(3).unwrap()).unwrap().add(&y).unwrap();
        let prod = disc_represent(&a.mul(&b).unwrap(), n).unwrap();
        // compare on the top-left block where truncation does not interfere
        let big = n + 4;
        let full = disc_represent(&a, big).unwrap() * disc_represent(&b, big).unwrap();
        let block = full.view((0, 0), (n - 3, n - 3)).into_owned();
        assert!(close(&prod.view((0, 0), (n - 3, n - 3)).into_owned(), &block));
    }

    #[test]
    fn basic_representations() {
        let one = disc_represent(&QuantumDiscElement::one(Q).unwrap(), 5).unwrap();
        assert!(close(&one, &DMatrix::identity(6, 6)));
        let x = QuantumDiscElement::polynomial_in_y(Q, &[1.0, -1.0]).unwrap();
        let m = disc_represent(&x, 5).unwrap();
        for k in 0..6 {
            assert!((m[(k, k)] - Q.powi(2 * (k as i32 + 1))).abs() < 1e-15);
        }
        let z = disc_represent(&QuantumDiscElement::z(Q).unwrap(), 5).unwrap();
        assert!((z[(1, 0)] - (1.0 - Q * Q).sqrt()).abs() < 1e-15);
        assert_eq!(z[(0, 1)], 0.0);
    }

    #[test]
    fn functional_examples() {
        let n = 200;
        let one = QuantumDiscElement::one(Q).unwrap();
        assert_eq!(tau1(&one), 1.0);
        assert!((tau0_up(&one, n).unwrap() + 0.5).abs() < 1e-12);
        assert!((tau0_dn(&one, n).unwrap() - 0.5).abs() < 1e-12);
        let x = QuantumDiscElement::polynomial_in_y(Q, &[1.0, -1.0]).unwrap();
        let want = Q * Q / (1.0 - Q * Q);
        assert!(tau1(&x).abs() < 1e-15);
        assert!((tau0_up(&x, n).unwrap() - want).abs() < 1e-12);
        assert!((tau0_dn(&x, n).unwrap() - want).abs() < 1e-12);
        let z = QuantumDiscElement::z(Q).unwrap();
        assert_eq!(tau1(&z), 0.0);
        assert_eq!(tau0_up(&z, n).unwrap(), 0.0);
    }

    #[test]
    fn slow_convergence_is_reported() {
        let x = QuantumDiscElement::polynomial_in_y(0.99, &[1.0, -1.0]).unwrap();
        assert!(matches!(tau0_up(&x, 10), Err(DiscError::NotConverged(_))));
        assert_eq!(QuantumDiscElement::zero(1.0).unwrap_err(), DiscError::InvalidQ(1.0));
    }
}
