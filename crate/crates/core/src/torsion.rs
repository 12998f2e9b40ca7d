//! Torsion tensors, the Dirac operator with totally antisymmetric torsion and
//! the residue functionals built from it.
//!
//! Indices are 0-based. All values are densities at the origin of normal
//! coordinates, in units of the sphere volume `V(S^{n-1})`.

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::Rng;

use crate::clifford::{chirality, clifford_action, clifford_trace, trace_exponent, CliffordError, Multivector};
use crate::coeff::Coefficient;
use crate::random::small_rational;
use crate::residue::ResidueValue;
use crate::scalar::{rat, Gaussian, Rational};
use crate::symcalc::{
    compose_symbols, negative_power, parametrix, sphere_integrate, sqrt_symbol, CurvatureJet, HomogeneousSymbol,
    Jet, SymbolError, SymbolSum, XiMonomial, DEFAULT_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorsionError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("non-increasing index triple [{0}, {1}, {2}]")]
    NonIncreasing(usize, usize, usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension {0} is not supported here (expected {1})")]
    Dimension(usize, &'static str),
    #[error("one-form has {got} components, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("tensor is not totally antisymmetric")]
    NotTotallyAntisymmetric,
}

/// Permutation sign sorting three distinct indices, or `None` on a repeat.
fn sort_three(i: usize, j: usize, k: usize) -> Option<(i8, [usize; 3])> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut sign = 1i8;
    for a in 0..3 {
        for b in 0..2 - a {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    Some((sign, v))
}

/// Totally antisymmetric rank-3 tensor, stored on increasing triples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionTensor {
    dim: usize,
    components: BTreeMap<[usize; 3], Rational>,
}

impl TorsionTensor {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            components: BTreeMap::new(),
        }
    }

    /// Tensor with a single independent component `T_{abc} = 1`.
    pub fn unit(dim: usize, a: usize, b: usize, c: usize) -> Result<Self, TorsionError> {
        let mut t = Self::zero(dim);
        t.set(a, b, c, Rational::one())?;
        Ok(t)
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Self {
        let mut t = Self::zero(dim);
        for a in 0..dim {
            for b in a + 1..dim {
                for c in b + 1..dim {
                    t.set(a, b, c, small_rational(rng)).expect("increasing triple");
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `T_{abc}` for `a < b < c`; the rest follows by antisymmetry.
    pub fn set(&mut self, a: usize, b: usize, c: usize, value: Rational) -> Result<(), TorsionError> {
        if let Some(&index) = [a, b, c].iter().find(|&&x| x >= self.dim) {
            return Err(TorsionError::IndexOutOfRange { index, dim: self.dim });
        }
        if !(a < b && b < c) {
            return Err(TorsionError::NonIncreasing(a, b, c));
        }
        if value.is_zero() {
            self.components.remove(&[a, b, c]);
        } else {
            self.components.insert([a, b, c], value);
        }
        Ok(())
    }

    /// `T_{ijk}` for arbitrary indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        match sort_three(i, j, k) {
            None => Rational::zero(),
            Some((sign, key)) => match self.components.get(&key) {
                Some(v) if sign > 0 => v.clone(),
                Some(v) => -v.clone(),
                None => Rational::zero(),
            },
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&[usize; 3], &Rational)> {
        self.components.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        for ([a, b, c], v) in &self.components {
            out.set(*a, *b, *c, v * s).expect("valid triple");
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ([a, b, c], v) in &rhs.components {
            let sum = out.get(*a, *b, *c) + v;
            out.set(*a, *b, *c, sum).expect("valid triple");
        }
        out
    }

    pub fn to_tensor(&self) -> Tensor3 {
        let mut t = Tensor3::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    t.set(i, j, k, self.get(i, j, k));
                }
            }
        }
        t
    }
}

/// Dense rank-3 array.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let n = self.idx(i, j, k);
        self.data[n] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.dim;
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
    }

    pub fn is_totally_antisymmetric(&self) -> bool {
        self.triples().all(|(i, j, k)| {
            let v = self.get(i, j, k);
            *v == -self.get(j, i, k).clone() && *v == -self.get(i, k, j).clone()
        })
    }

    pub fn to_torsion(&self) -> Result<TorsionTensor, TorsionError> {
        if !self.is_totally_antisymmetric() {
            return Err(TorsionError::NotTotallyAntisymmetric);
        }
        let mut t = TorsionTensor::zero(self.dim);
        for (i, j, k) in self.triples() {
            if i < j && j < k {
                t.set(i, j, k, self.get(i, j, k).clone())?;
            }
        }
        Ok(t)
    }
}

/// Contorsion `τ_{ijk}`, antisymmetric in its last two indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContorsionTensor(Tensor3);

impl ContorsionTensor {
    pub fn zero(dim: usize) -> Self {
        Self(Tensor3::zero(dim))
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Self {
        let mut t = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in j + 1..dim {
                    t.set(i, j, k, small_rational(rng));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.0.get(i, j, k)
    }

    /// Sets `τ_{ijk}` and `τ_{ikj} = -τ_{ijk}`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        if j == k {
            return;
        }
        self.0.set(i, k, j, -v.clone());
        self.0.set(i, j, k, v);
    }
}

/// `τ_{ijk} = (T_{ijk} + T_{kij} + T_{kji}) / 2`, summed literally.
pub fn contorsion_from_torsion(t: &TorsionTensor) -> ContorsionTensor {
    let n = t.dim();
    let half = rat(1, 2);
    let mut out = ContorsionTensor::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = (t.get(i, j, k) + t.get(k, i, j) + t.get(k, j, i)) * &half;
                out.0.set(i, j, k, v);
            }
        }
    }
    out
}

/// `T_{ijk} = τ_{ijk} - τ_{jik}`.
pub fn torsion_from_contorsion(tau: &ContorsionTensor) -> Tensor3 {
    let n = tau.dim();
    let mut out = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set(i, j, k, tau.get(i, j, k) - tau.get(j, i, k));
            }
        }
    }
    out
}

/// Structure constants `c_{ijk}` of an orthonormal frame, `c_{ijk} = -c_{jik}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrameConnection(Tensor3);

impl FrameConnection {
    pub fn zero(dim: usize) -> Self {
        Self(Tensor3::zero(dim))
    }

    /// Sets `c_{ijk}` and `c_{jik} = -c_{ijk}`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        if i == j {
            return;
        }
        self.0.set(j, i, k, -v.clone());
        self.0.set(i, j, k, v);
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.0.get(i, j, k)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

/// `ω_{ijk} = (c_{ijk} + c_{kij} + c_{kji}) / 2`.
pub fn levi_civita_from_structure(c: &FrameConnection) -> Tensor3 {
    let n = c.dim();
    let half = rat(1, 2);
    let mut out = Tensor3::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set(i, j, k, (c.get(i, j, k) + c.get(k, i, j) + c.get(k, j, i)) * &half);
            }
        }
    }
    out
}

/// Scalar one-form components `u_a`.
pub type OneForm = Vec<Rational>;

/// Frame one-form `e^a`.
pub fn frame_form(dim: usize, a: usize) -> OneForm {
    let mut u = vec![Rational::zero(); dim];
    u[a] = Rational::one();
    u
}

/// Clifford multiplication `û = Σ u_a γ^a`.
pub fn one_form_action(u: &[Rational], dim: usize) -> Result<Multivector, TorsionError> {
    let coeffs: Vec<Gaussian> = u.iter().cloned().map(Gaussian::real).collect();
    Ok(clifford_action(&coeffs, dim)?)
}

/// `Θ = Σ_{jps} T_{jps} γ^j γ^p γ^s`, summed over all index triples.
pub fn theta(t: &TorsionTensor) -> Multivector {
    let n = t.dim();
    let mut out = Multivector::zero(n);
    for j in 0..n {
        for p in 0..n {
            for s in 0..n {
                let v = t.get(j, p, s);
                if v.is_zero() {
                    continue;
                }
                let word = Multivector::gamma(n, j)
                    .mul(&Multivector::gamma(n, p))
                    .mul(&Multivector::gamma(n, s));
                out = out.add(&word.scale(&Gaussian::real(v)));
            }
        }
    }
    out
}

/// `ξ̸ = Σ_j ξ_j γ^j` as a degree-one symbol scaled by `c`.
fn slash_xi(dim: usize, c: &Gaussian) -> HomogeneousSymbol<Gaussian> {
    let mut h = HomogeneousSymbol::zero(dim, 1);
    for j in 0..dim {
        h.add_term(XiMonomial::variable(dim, j), Jet::constant(Multivector::gamma(dim, j).scale(c)));
    }
    h
}

/// Symbol of `D_T`: `-ξ̸ - (i/8) Θ`.
pub fn dirac_symbol(t: &TorsionTensor) -> SymbolSum<Gaussian> {
    let n = t.dim();
    let zeroth = theta(t).scale(&Gaussian::new(Rational::zero(), rat(-1, 8)));
    SymbolSum::new(n, 1, SymbolSum::<Gaussian>::EXACT)
        .with_part(slash_xi(n, &Gaussian::from_int(-1)))
        .with_part(HomogeneousSymbol::radial(n, 0, zeroth))
}

/// Symbol of `D_T` with the first-order Levi-Civita term
/// `-(i/4) γ^j ω_{jkl}(x) γ^k γ^l` of the given curvature in radial gauge.
pub fn dirac_symbol_with_curvature(t: &TorsionTensor, curvature: &CurvatureJet) -> SymbolSum<Gaussian> {
    let n = t.dim();
    assert_eq!(curvature.dim(), n, "curvature dimension mismatch");
    let phase = Gaussian::new(Rational::zero(), rat(-1, 4));
    let mut jet = Jet::zero(n);
    for d in 0..n {
        let mut coeff = Multivector::zero(n);
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let w = curvature.spin_connection_linear(j, k, l, d);
                    if w.is_zero() {
                        continue;
                    }
                    let word = Multivector::gamma(n, j)
                        .mul(&Multivector::gamma(n, k))
                        .mul(&Multivector::gamma(n, l));
                    coeff = coeff.add(&word.scale(&Gaussian::real(w)));
                }
            }
        }
        jet = jet.with_linear(d, coeff.scale(&phase));
    }
    dirac_symbol(t).with_part(HomogeneousSymbol::term(XiMonomial::one(n), 0, jet))
}

/// Leading two degrees of `|D|^{-n}` from the symbol of `D`.
///
/// Even `n` uses `(D^2)^{-n/2}`; odd `n` uses `(D^2)^{-(n-1)/2}` composed
/// with the parametrix of the square root of `D^2`.
pub fn abs_inverse_power<C: Coefficient>(d: &SymbolSum<C>, n: usize) -> Result<SymbolSum<C>, TorsionError> {
    let budget = DEFAULT_BUDGET;
    let d2 = compose_symbols(d, d, budget)?;
    let m = (n / 2) as u32;
    if n % 2 == 0 {
        return Ok(negative_power(&d2, m, budget)?);
    }
    let inv_abs = parametrix(&sqrt_symbol(&d2, budget)?, budget)?;
    if m == 0 {
        return Ok(inv_abs);
    }
    Ok(compose_symbols(&negative_power(&d2, m, budget)?, &inv_abs, budget)?)
}

/// Sphere integral of `σ_{-n}(P D |D|^{-n})` for a constant zero-order `P`,
/// before any trace, in units of `V(S^{n-1})`.
pub fn residue_density<C: Coefficient>(
    p: &Multivector<C>,
    d: &SymbolSum<C>,
    n: usize,
) -> Result<Multivector<C>, TorsionError> {
    Ok(sphere_integrate(&residue_symbol(p, d, n)?, n)?)
}

/// `σ_{-n}(P D |D|^{-n})` at the origin, before sphere integration.
pub fn residue_symbol<C: Coefficient>(
    p: &Multivector<C>,
    d: &SymbolSum<C>,
    n: usize,
) -> Result<HomogeneousSymbol<C>, TorsionError> {
    let d_abs = compose_symbols(d, &abs_inverse_power(d, n)?, DEFAULT_BUDGET)?;
    Ok(d_abs.part(-(n as i32)).at_origin().left_mul(p))
}

/// `𝒲(P D |D|^{-n})`.
pub fn wodzicki_residue<C: Coefficient>(
    p: &Multivector<C>,
    d: &SymbolSum<C>,
    n: usize,
) -> Result<ResidueValue, TorsionError> {
    let density = residue_density(p, d, n)?;
    Ok(ResidueValue::new(n, clifford_trace(&density)))
}

fn check_form(u: &[Rational], n: usize) -> Result<(), TorsionError> {
    if u.len() != n {
        return Err(TorsionError::LengthMismatch {
            expected: n,
            got: u.len(),
        });
    }
    Ok(())
}

fn check_dim(t: &TorsionTensor, n: usize) -> Result<(), TorsionError> {
    if n < 2 {
        return Err(TorsionError::Dimension(n, "n ≥ 2"));
    }
    if t.dim() != n {
        return Err(TorsionError::LengthMismatch {
            expected: n,
            got: t.dim(),
        });
    }
    Ok(())
}

fn cube(u: &[Rational], v: &[Rational], w: &[Rational], n: usize) -> Result<Multivector, TorsionError> {
    for f in [u, v, w] {
        check_form(f, n)?;
    }
    Ok(one_form_action(u, n)?
        .mul(&one_form_action(v, n)?)
        .mul(&one_form_action(w, n)?))
}

/// Torsion functional `𝒯(u, v, w) = 𝒲(û v̂ ŵ D_T |D_T|^{-n})`.
pub fn torsion_functional(
    u: &[Rational],
    v: &[Rational],
    w: &[Rational],
    t: &TorsionTensor,
    n: usize,
) -> Result<ResidueValue, TorsionError> {
    check_dim(t, n)?;
    wodzicki_residue(&cube(u, v, w, n)?, &dirac_symbol(t), n)
}

/// Same as [`torsion_functional`] with a curvature jet switched on.
pub fn torsion_functional_with_curvature(
    u: &[Rational],
    v: &[Rational],
    w: &[Rational],
    t: &TorsionTensor,
    curvature: &CurvatureJet,
    n: usize,
) -> Result<ResidueValue, TorsionError> {
    check_dim(t, n)?;
    wodzicki_residue(&cube(u, v, w, n)?, &dirac_symbol_with_curvature(t, curvature), n)
}

/// `Σ_{abc} u_a v_b w_c T_{abc}`.
pub fn torsion_contraction(u: &[Rational], v: &[Rational], w: &[Rational], t: &TorsionTensor) -> Rational {
    let mut acc = Rational::zero();
    for ([a, b, c], val) in t.components() {
        let (a, b, c) = (*a, *b, *c);
        // the six orderings of an increasing triple with their signs
        let perm = u[a].clone() * &v[b] * &w[c] + u[b].clone() * &v[c] * &w[a] + u[c].clone() * &v[a] * &w[b]
            - u[b].clone() * &v[a] * &w[c]
            - u[a].clone() * &v[c] * &w[b]
            - u[c].clone() * &v[b] * &w[a];
        acc += perm * val;
    }
    acc
}

/// Closed form `-2^m i V(S^{n-1}) Σ u_a v_b w_c T_{abc}`, `m = ⌈n/2⌉`.
pub fn closed_form_torsion(
    u: &[Rational],
    v: &[Rational],
    w: &[Rational],
    t: &TorsionTensor,
    n: usize,
) -> Result<ResidueValue, TorsionError> {
    check_dim(t, n)?;
    for f in [u, v, w] {
        check_form(f, n)?;
    }
    let scale = Rational::from_integer((-(1i64 << trace_exponent(n))).into());
    let c = torsion_contraction(u, v, w, t) * scale;
    Ok(ResidueValue::new(n, Gaussian::new(Rational::zero(), c)))
}

/// `𝒯(u) = 𝒲(γ û D_T |D_T|^{-4})` in four dimensions.
pub fn chirality_functional(u: &[Rational], t: &TorsionTensor, n: usize) -> Result<ResidueValue, TorsionError> {
    if n != 4 {
        return Err(TorsionError::Dimension(n, "n = 4"));
    }
    check_dim(t, n)?;
    check_form(u, n)?;
    let p = chirality(n)?.mul(&one_form_action(u, n)?);
    wodzicki_residue(&p, &dirac_symbol(t), n)
}

/// `𝒲(P D |D|^{-n})` for the torsion-free Dirac operator.
pub fn spectral_closedness_check(p: &Multivector, n: usize) -> Result<ResidueValue, TorsionError> {
    if p.dim() != n {
        return Err(TorsionError::LengthMismatch {
            expected: n,
            got: p.dim(),
        });
    }
    wodzicki_residue(p, &dirac_symbol(&TorsionTensor::zero(n)), n)
}

/// `𝒲(P D^{-n})` for even `n` and the torsion-free Dirac operator.
pub fn inverse_power_residue(p: &Multivector, n: usize) -> Result<ResidueValue, TorsionError> {
    if n % 2 == 1 || n < 2 {
        return Err(TorsionError::Dimension(n, "even n"));
    }
    let d = dirac_symbol(&TorsionTensor::zero(n));
    let d2 = compose_symbols(&d, &d, DEFAULT_BUDGET)?;
    let c = negative_power(&d2, (n / 2) as u32, DEFAULT_BUDGET)?;
    let density = sphere_integrate(&c.part(-(n as i32)).left_mul(p), n)?;
    Ok(ResidueValue::new(n, clifford_trace(&density)))
}

/// Metric functional `𝒲(û v̂ D^{-n})`, equal to `2^m u·v V(S^{n-1})`.
pub fn metric_functional(u: &[Rational], v: &[Rational], n: usize) -> Result<ResidueValue, TorsionError> {
    check_form(u, n)?;
    check_form(v, n)?;
    inverse_power_residue(&one_form_action(u, n)?.mul(&one_form_action(v, n)?), n)
}

/// Volume functional `𝒲(f D^{-n})`, equal to `2^m f V(S^{n-1})`.
pub fn volume_functional(f: &Rational, n: usize) -> Result<ResidueValue, TorsionError> {
    if n < 2 {
        return Err(TorsionError::Dimension(n, "even n"));
    }
    inverse_power_residue(&Multivector::scalar(n, Gaussian::real(f.clone())), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn sorting_signs() {
        assert_eq!(sort_three(2, 0, 1), Some((1, [0, 1, 2])));
        assert_eq!(sort_three(1, 0, 2), Some((-1, [0, 1, 2])));
        assert_eq!(sort_three(1, 1, 2), None);
    }

    #[test]
    fn torsion_storage() {
        let mut t = TorsionTensor::zero(4);
        t.set(0, 1, 3, rat(2, 3)).unwrap();
        assert_eq!(t.get(3, 1, 0), rat(-2, 3));
        assert_eq!(t.get(1, 3, 0), rat(2, 3));
        assert_eq!(t.set(1, 1, 2, rat_int(1)), Err(TorsionError::NonIncreasing(1, 1, 2)));
        assert_eq!(t.set(2, 1, 3, rat_int(1)), Err(TorsionError::NonIncreasing(2, 1, 3)));
        assert!(matches!(t.set(0, 1, 4, rat_int(1)), Err(TorsionError::IndexOutOfRange { .. })));
        assert!(TorsionTensor::random(&mut crate::random::rng_from_seed(1), 2).is_zero());
    }

    #[test]
    fn theta_in_three_dimensions() {
        let t = TorsionTensor::unit(3, 0, 1, 2).unwrap();
        let expected = Multivector::gamma(3, 0)
            .mul(&Multivector::gamma(3, 1))
            .mul(&Multivector::gamma(3, 2))
            .scale(&Gaussian::from_int(6));
        assert_eq!(theta(&t), expected);
        let d = dirac_symbol(&t);
        let zeroth = d.part(0);
        let want = HomogeneousSymbol::radial(3, 0, expected.scale(&Gaussian::new(rat_int(0), rat(-1, 8))));
        assert!(zeroth.equivalent(&want));
    }

    #[test]
    fn flat_dirac_squares_to_laplacian() {
        let d = dirac_symbol(&TorsionTensor::zero(4));
        let d2 = compose_symbols(&d, &d, 3).unwrap();
        assert!(d2.part(2).equivalent(&HomogeneousSymbol::radial(4, 2, Multivector::one(4))));
        assert!(d2.part(1).is_zero());
        assert!(d2.part(0).is_zero());
    }

    #[test]
    fn metric_and_volume_constants() {
        let e1 = frame_form(4, 0);
        let m = metric_functional(&e1, &e1, 4).unwrap();
        assert_eq!(m, ResidueValue::new(4, Gaussian::from_int(4)));
        assert_eq!(m.pi_form(), (Gaussian::from_int(8), 2));
        assert!(metric_functional(&e1, &frame_form(4, 1), 4).unwrap().is_zero());
        assert_eq!(volume_functional(&rat_int(1), 4).unwrap(), ResidueValue::new(4, Gaussian::from_int(4)));
        assert!(volume_functional(&rat_int(1), 3).is_err());
    }

    #[test]
    fn chirality_needs_four_dimensions() {
        let t = TorsionTensor::zero(3);
        assert!(chirality_functional(&frame_form(3, 0), &t, 3).is_err());
    }
}
