use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Arc;

use num::complex::Complex64;
use rand::Rng;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TorusError {
    #[error("elements live on different tori")]
    ShapeMismatch,
    #[error("deformation matrix must be square and antisymmetric")]
    InvalidTheta,
    #[error("element is not self-adjoint")]
    NotSelfAdjoint,
    #[error("truncation order must be at least 1")]
    InvalidOrder,
    #[error("derivation index {0} out of range")]
    IndexOutOfRange(usize),
}

/// Finite Fourier polynomial `Σ c_p U^p` in Weyl-ordered unitaries,
/// `U^p U^q = e^{-iπ p·θq} U^{p+q}`.
#[derive(Clone, PartialEq, Debug)]
pub struct TorusElement {
    theta: Arc<Vec<Vec<f64>>>,
    coeffs: BTreeMap<Vec<i64>, Complex64>,
}

impl TorusElement {
    pub fn zero(theta: Vec<Vec<f64>>) -> Result<Self, TorusError> {
        let n = theta.len();
        let antisym = theta.iter().all(|row| row.len() == n)
            && (0..n).all(|i| (0..n).all(|j| (theta[i][j] + theta[j][i]).abs() < 1e-15));
        if !antisym {
            return Err(TorusError::InvalidTheta);
        }
        Ok(Self {
            theta: Arc::new(theta),
            coeffs: BTreeMap::new(),
        })
    }

    fn empty_like(&self) -> Self {
        Self {
            theta: Arc::clone(&self.theta),
            coeffs: BTreeMap::new(),
        }
    }

    /// `c U^p` on the same torus as `self`.
    pub fn monomial_like(&self, p: Vec<i64>, c: Complex64) -> Self {
        assert_eq!(p.len(), self.dim(), "mode length mismatch");
        let mut out = self.empty_like();
        out.add_mode(p, c);
        out
    }

    pub fn one_like(&self) -> Self {
        self.monomial_like(vec![0; self.dim()], Complex64::new(1.0, 0.0))
    }

    /// Random self-adjoint element `a + a*` with `a` supported on `modes / 2`
    /// random frequencies in `[-2, 2]^n`.
    pub fn random_self_adjoint<R: Rng + ?Sized>(rng: &mut R, theta: Vec<Vec<f64>>, modes: usize) -> Result<Self, TorusError> {
        let base = Self::zero(theta)?;
        let mut a = base.clone();
        for _ in 0..modes.div_ceil(2).max(1) {
            let p: Vec<i64> = (0..base.dim()).map(|_| rng.random_range(-2..=2)).collect();
            let c = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            a.add_mode(p, c);
        }
        a.add(&a.adjoint())
    }

    pub fn dim(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[Vec<f64>] {
        &self.theta
    }

    pub fn modes(&self) -> impl Iterator<Item = (&Vec<i64>, &Complex64)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, p: &[i64]) -> Complex64 {
        self.coeffs.get(p).copied().unwrap_or_default()
    }

    fn add_mode(&mut self, p: Vec<i64>, c: Complex64) {
        let e = self.coeffs.entry(p).or_default();
        *e += c;
    }

    fn check(&self, rhs: &Self) -> Result<(), TorusError> {
        if Arc::ptr_eq(&self.theta, &rhs.theta) || self.theta == rhs.theta {
            Ok(())
        } else {
            Err(TorusError::ShapeMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, TorusError> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_mode(p.clone(), *c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.empty_like();
        for (p, c) in &self.coeffs {
            out.add_mode(p.clone(), c * s);
        }
        out
    }

    /// `e^{-iπ p·θq}`.
    fn phase(&self, p: &[i64], q: &[i64]) -> Complex64 {
        let mut s = 0.0;
        for (i, &pi) in p.iter().enumerate() {
            for (j, &qj) in q.iter().enumerate() {
                s += pi as f64 * self.theta[i][j] * qj as f64;
            }
        }
        Complex64::from_polar(1.0, -PI * s)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, TorusError> {
        self.check(rhs)?;
        let mut out = self.empty_like();
        for (p, a) in &self.coeffs {
            for (q, b) in &rhs.coeffs {
                let sum: Vec<i64> = p.iter().zip(q).map(|(x, y)| x + y).collect();
                out.add_mode(sum, a * b * self.phase(p, q));
            }
        }
        Ok(out)
    }

    /// Canonical trace: the coefficient of `U^0`.
    pub fn trace(&self) -> Complex64 {
        self.coefficient(&vec![0; self.dim()])
    }

    /// `δ_j(U^p) = i p_j U^p`.
    pub fn derive(&self, j: usize) -> Result<Self, TorusError> {
        if j >= self.dim() {
            return Err(TorusError::IndexOutOfRange(j));
        }
        let mut out = self.empty_like();
        for (p, c) in &self.coeffs {
            if p[j] != 0 {
                out.add_mode(p.clone(), c * Complex64::new(0.0, p[j] as f64));
            }
        }
        Ok(out)
    }

    /// `(c U^p)* = c̄ U^{-p}`.
    pub fn adjoint(&self) -> Self {
        let mut out = self.empty_like();
        for (p, c) in &self.coeffs {
            out.add_mode(p.iter().map(|x| -x).collect(), c.conj());
        }
        out
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.add(&self.adjoint().scale(Complex64::new(-1.0, 0.0)))
            .map(|d| d.max_abs() <= tol)
            .unwrap_or(false)
    }
}

/// Power series `Σ_{k≤K} a_k t^k` with torus coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalSeries {
    terms: Vec<TorusElement>,
}

impl FormalSeries {
    /// `exp(s t h)` truncated at order `order`.
    pub fn exp(h: &TorusElement, s: f64, order: usize) -> Result<Self, TorusError> {
        let mut terms = Vec::with_capacity(order + 1);
        let mut power = h.one_like();
        let sh = h.scale(Complex64::new(s, 0.0));
        for k in 0..=order {
            if k > 0 {
                power = power.mul(&sh)?.scale(Complex64::new(1.0 / k as f64, 0.0));
            }
            terms.push(power.clone());
        }
        Ok(Self { terms })
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &TorusElement {
        &self.terms[k]
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, TorusError> {
        let order = self.order().min(rhs.order());
        let mut terms = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.terms[0].empty_like();
            for i in 0..=k {
                acc = acc.add(&self.terms[i].mul(&rhs.terms[k - i])?)?;
            }
            terms.push(acc);
        }
        Ok(Self { terms })
    }

    pub fn derive(&self, j: usize) -> Result<Self, TorusError> {
        Ok(Self {
            terms: self.terms.iter().map(|a| a.derive(j)).collect::<Result<_, _>>()?,
        })
    }

    /// Trace of each order.
    pub fn traces(&self) -> Vec<Complex64> {
        self.terms.iter().map(TorusElement::trace).collect()
    }
}

/// Largest modulus over orders `0..=K` of `τ(k^α δ_j(k) k^β)` with `k = e^{th}`.
pub fn torus_trace_identity(h: &TorusElement, alpha: i32, beta: i32, j: usize, order: usize) -> Result<f64, TorusError> {
    if order < 1 {
        return Err(TorusError::InvalidOrder);
    }
    if !h.is_self_adjoint(1e-12) {
        return Err(TorusError::NotSelfAdjoint);
    }
    let k = FormalSeries::exp(h, 1.0, order)?;
    let dk = k.derive(j)?;
    let left = FormalSeries::exp(h, alpha as f64, order)?;
    let right = FormalSeries::exp(h, beta as f64, order)?;
    let product = left.mul(&dk)?.mul(&right)?;
    Ok(product.traces().iter().map(|c| c.norm()).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta2(t: f64) -> Vec<Vec<f64>> {
        vec![vec![0.0, t], vec![-t, 0.0]]
    }

    #[test]
    fn weyl_relation() {
        let t = 2f64.sqrt() - 1.0;
        let z = TorusElement::zero(theta2(t)).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let u1 = z.monomial_like(vec![1, 0], one);
        let u2 = z.monomial_like(vec![0, 1], one);
        let ab = u1.mul(&u2).unwrap().coefficient(&[1, 1]);
        let ba = u2.mul(&u1).unwrap().coefficient(&[1, 1]);
        assert!((ab - Complex64::from_polar(1.0, -PI * t)).norm() < 1e-14);
        assert!((ba - Complex64::from_polar(1.0, PI * t)).norm() < 1e-14);
        assert!((ab / ba - Complex64::from_polar(1.0, -2.0 * PI * t)).norm() < 1e-14);
    }

    #[test]
    fn trace_of_nonzero_modes_vanishes() {
        let z = TorusElement::zero(theta2(0.3)).unwrap();
        assert_eq!(z.monomial_like(vec![2, -1], Complex64::new(1.0, 1.0)).trace(), Complex64::default());
        assert_eq!(z.one_like().trace(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn rejects_bad_theta() {
        assert_eq!(TorusElement::zero(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap_err(), TorusError::InvalidTheta);
    }

    #[test]
    fn zero_h_gives_exact_zero() {
        let z = TorusElement::zero(theta2(0.1)).unwrap();
        assert_eq!(torus_trace_identity(&z, 1, 0, 0, 4).unwrap(), 0.0);
    }

    #[test]
    fn unitary_inverse() {
        let z = TorusElement::zero(theta2(0.7)).unwrap();
        let u = z.monomial_like(vec![3, -2], Complex64::new(1.0, 0.0));
        let p = u.mul(&u.adjoint()).unwrap();
        assert!((p.coefficient(&[0, 0]) - 1.0).norm() < 1e-14);
    }
}
