//! Almost-commutative examples: the Einstein–Yang–Mills fluctuation and the
//! two-sheeted space `M × Z_2`.

use num::Zero;

use crate::clifford::{chirality, clifford_trace, Multivector};
use crate::coeff::{CMatrix, Coefficient};
use crate::residue::ResidueValue;
use crate::scalar::{Gaussian, Rational};
use crate::symcalc::{HomogeneousSymbol, Jet, SymbolSum, XiMonomial};
use crate::torsion::{
    metric_functional, one_form_action, residue_density, residue_symbol, volume_functional, OneForm, TorsionError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error("base dimension must be even, got {0}")]
    OddDimension(usize),
    #[error("expected {expected} gauge fields, got {got}")]
    FieldCount { expected: usize, got: usize },
    #[error("gauge field {0} has the wrong size")]
    FieldSize(usize),
    #[error("gauge field {0} is not anti-hermitian")]
    NotAntiHermitian(usize),
    #[error("gauge field {0} is not traceless")]
    NotTraceless(usize),
    #[error("one-forms carry different Φ")]
    MixedPhi,
    #[error("one-form has {got} components, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// `ad_X = [X, ·]` acting on `M_N(C)`, in the basis `E_{ab}` ordered as `a*N + b`.
pub fn adjoint_matrix(x: &CMatrix) -> CMatrix {
    CMatrix::left_multiplication(x).plus(&CMatrix::right_multiplication(x).negate())
}

/// Trace of `ad_X` on `M_N(C)`; always zero.
pub fn adjoint_trace(x: &CMatrix) -> Gaussian {
    adjoint_matrix(x).trace()
}

/// Gauge fields `X_a` of an `SU(N)` fluctuation of the Dirac operator on an
/// even-dimensional base.
#[derive(Clone, PartialEq, Debug)]
pub struct EymModel {
    dim: usize,
    size: usize,
    fields: Vec<CMatrix>,
}

impl EymModel {
    pub fn new(dim: usize, size: usize, fields: Vec<CMatrix>) -> Result<Self, ModelError> {
        if dim % 2 == 1 {
            return Err(ModelError::OddDimension(dim));
        }
        if fields.len() != dim {
            return Err(ModelError::FieldCount {
                expected: dim,
                got: fields.len(),
            });
        }
        for (a, x) in fields.iter().enumerate() {
            if x.size() != size {
                return Err(ModelError::FieldSize(a));
            }
            if x.adjoint() != x.negate() {
                return Err(ModelError::NotAntiHermitian(a));
            }
            if !Zero::is_zero(&x.trace()) {
                return Err(ModelError::NotTraceless(a));
            }
        }
        Ok(Self { dim, size, fields })
    }

    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, dim: usize, size: usize) -> Result<Self, ModelError> {
        let fields = (0..dim)
            .map(|_| crate::random::traceless_antihermitian(rng, size))
            .collect();
        Self::new(dim, size, fields)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn fields(&self) -> &[CMatrix] {
        &self.fields
    }

    /// Same model with every field multiplied by `s`.
    pub fn scaled(&self, s: &Gaussian) -> Self {
        Self {
            dim: self.dim,
            size: self.size,
            fields: self.fields.iter().map(|x| x.scale(s)).collect(),
        }
    }

    /// Symbol of the fluctuated Dirac operator on `L^2 ⊗ M_N(C)`:
    /// `Σ_a γ^a ⊗ (-ξ_a + i ad_{X_a})`.
    pub fn dirac_symbol(&self) -> SymbolSum<CMatrix> {
        let n = self.dim;
        let space = self.size * self.size;
        let minus_one = CMatrix::identity(space).negate();
        let mut first = HomogeneousSymbol::zero(n, 1);
        let mut zeroth = Multivector::zero(n);
        for a in 0..n {
            let g = Multivector::gamma(n, a);
            first.add_term(XiMonomial::variable(n, a), Jet::constant(g.tensor(&minus_one)));
            zeroth = zeroth.add(&g.tensor(&adjoint_matrix(&self.fields[a]).scale(&Gaussian::i())));
        }
        SymbolSum::new(n, 1, SymbolSum::<CMatrix>::EXACT)
            .with_part(first)
            .with_part(HomogeneousSymbol::radial(n, 0, zeroth))
    }

    /// `û v̂ ŵ` for one-forms with `N × N` coefficients acting by left
    /// multiplication on `M_N(C)`.
    pub fn cube(&self, u: &[CMatrix], v: &[CMatrix], w: &[CMatrix]) -> Result<Multivector<CMatrix>, ModelError> {
        let mut out = Multivector::scalar(self.dim, CMatrix::identity(self.size * self.size));
        for form in [u, v, w] {
            if form.len() != self.dim {
                return Err(ModelError::LengthMismatch {
                    expected: self.dim,
                    got: form.len(),
                });
            }
            let mut hat = Multivector::zero(self.dim);
            for (a, c) in form.iter().enumerate() {
                hat = hat.add(&Multivector::gamma(self.dim, a).tensor(&CMatrix::left_multiplication(c)));
            }
            out = out.mul(&hat);
        }
        Ok(out)
    }

    /// `σ_{-n}(û v̂ ŵ D̃ |D̃|^{-n})` at the origin, before integration and trace.
    pub fn residue_symbol(
        &self,
        u: &[CMatrix],
        v: &[CMatrix],
        w: &[CMatrix],
    ) -> Result<HomogeneousSymbol<CMatrix>, ModelError> {
        Ok(residue_symbol(&self.cube(u, v, w)?, &self.dirac_symbol(), self.dim)?)
    }

    /// Sphere integral of the residue symbol, before the trace.
    pub fn residue_density(&self, u: &[CMatrix], v: &[CMatrix], w: &[CMatrix]) -> Result<Multivector<CMatrix>, ModelError> {
        Ok(residue_density(&self.cube(u, v, w)?, &self.dirac_symbol(), self.dim)?)
    }
}

/// Torsion functional of the fluctuated Dirac operator.
pub fn eym_torsion_density(
    model: &EymModel,
    u: &[CMatrix],
    v: &[CMatrix],
    w: &[CMatrix],
) -> Result<ResidueValue, ModelError> {
    let density = model.residue_density(u, v, w)?;
    Ok(ResidueValue::new(model.dim, clifford_trace(&density)))
}

/// One-form `[[w⁺, Φ γ f⁺], [Φ̄ γ f⁻, w⁻]]` on the two-sheeted space.
#[derive(Clone, PartialEq, Debug)]
pub struct DoubledOneForm {
    pub w_plus: OneForm,
    pub w_minus: OneForm,
    pub f_plus: Rational,
    pub f_minus: Rational,
    pub phi: Gaussian,
}

impl DoubledOneForm {
    pub fn diagonal(w_plus: OneForm, w_minus: OneForm, phi: Gaussian) -> Self {
        Self {
            w_plus,
            w_minus,
            f_plus: Rational::zero(),
            f_minus: Rational::zero(),
            phi,
        }
    }

    pub fn off_diagonal(dim: usize, f_plus: Rational, f_minus: Rational, phi: Gaussian) -> Self {
        Self {
            w_plus: vec![Rational::zero(); dim],
            w_minus: vec![Rational::zero(); dim],
            f_plus,
            f_minus,
            phi,
        }
    }

    pub fn dim(&self) -> usize {
        self.w_plus.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.f_plus.is_zero() && self.f_minus.is_zero()
    }

    pub fn is_off_diagonal(&self) -> bool {
        self.w_plus.iter().chain(&self.w_minus).all(Zero::is_zero)
    }

    pub fn diagonal_part(&self) -> Self {
        Self::diagonal(self.w_plus.clone(), self.w_minus.clone(), self.phi.clone())
    }

    pub fn off_diagonal_part(&self) -> Self {
        Self::off_diagonal(self.dim(), self.f_plus.clone(), self.f_minus.clone(), self.phi.clone())
    }

    /// Clifford element with `2 × 2` block coefficients.
    pub fn action(&self) -> Result<Multivector<CMatrix>, ModelError> {
        let n = self.dim();
        if self.w_minus.len() != n {
            return Err(ModelError::LengthMismatch {
                expected: n,
                got: self.w_minus.len(),
            });
        }
        let gamma = chirality(n).map_err(TorsionError::from)?;
        let block = |a: usize, b: usize, c: Gaussian| CMatrix::unit(2, a, b).scale(&c);
        let out = one_form_action(&self.w_plus, n)?
            .tensor(&CMatrix::unit(2, 0, 0))
            .add(&one_form_action(&self.w_minus, n)?.tensor(&CMatrix::unit(2, 1, 1)))
            .add(&gamma.tensor(&block(0, 1, &self.phi * &Gaussian::real(self.f_plus.clone()))))
            .add(&gamma.tensor(&block(1, 0, &self.phi.conj() * &Gaussian::real(self.f_minus.clone()))));
        Ok(out)
    }
}

/// Dirac operator `D ⊗ 1 + γ ⊗ [[0, Φ], [Φ̄, 0]]` of the two-sheeted space,
/// with the sphere integral of `σ_{-n}(𝒟|𝒟|^{-n})` cached.
#[derive(Clone, PartialEq, Debug)]
pub struct DoubledGeometry {
    dim: usize,
    phi: Gaussian,
    kernel: Multivector<CMatrix>,
}

impl DoubledGeometry {
    pub fn new(dim: usize, phi: Gaussian) -> Result<Self, ModelError> {
        if dim % 2 == 1 || dim < 2 {
            return Err(ModelError::OddDimension(dim));
        }
        let symbol = Self::dirac_symbol(dim, &phi)?;
        let one = Multivector::scalar(dim, CMatrix::identity(2));
        let kernel = residue_density(&one, &symbol, dim)?;
        Ok(Self { dim, phi, kernel })
    }

    pub fn dirac_symbol(dim: usize, phi: &Gaussian) -> Result<SymbolSum<CMatrix>, ModelError> {
        let minus_one = CMatrix::identity(2).negate();
        let mut first = HomogeneousSymbol::zero(dim, 1);
        for a in 0..dim {
            first.add_term(
                XiMonomial::variable(dim, a),
                Jet::constant(Multivector::gamma(dim, a).tensor(&minus_one)),
            );
        }
        let mut mass = CMatrix::zero(2);
        mass.set(0, 1, phi.clone());
        mass.set(1, 0, phi.conj());
        let gamma = chirality(dim).map_err(TorsionError::from)?;
        Ok(SymbolSum::new(dim, 1, SymbolSum::<CMatrix>::EXACT)
            .with_part(first)
            .with_part(HomogeneousSymbol::radial(dim, 0, gamma.tensor(&mass))))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn phi(&self) -> &Gaussian {
        &self.phi
    }

    /// `𝒲(ω₁ ω₂ ω₃ 𝒟 |𝒟|^{-n})`.
    pub fn residue(
        &self,
        w1: &DoubledOneForm,
        w2: &DoubledOneForm,
        w3: &DoubledOneForm,
    ) -> Result<ResidueValue, ModelError> {
        for w in [w1, w2, w3] {
            if w.phi != self.phi {
                return Err(ModelError::MixedPhi);
            }
            if w.dim() != self.dim {
                return Err(ModelError::LengthMismatch {
                    expected: self.dim,
                    got: w.dim(),
                });
            }
        }
        let p = w1.action()?.mul(&w2.action()?).mul(&w3.action()?);
        Ok(ResidueValue::new(self.dim, clifford_trace(&p.mul(&self.kernel))))
    }
}

/// `𝒲(ω₁ ω₂ ω₃ 𝒟 |𝒟|^{-n})` for one-forms sharing the same `Φ`.
pub fn doubled_residue(
    w1: &DoubledOneForm,
    w2: &DoubledOneForm,
    w3: &DoubledOneForm,
    n: usize,
) -> Result<ResidueValue, ModelError> {
    if w1.phi != w2.phi || w2.phi != w3.phi {
        return Err(ModelError::MixedPhi);
    }
    DoubledGeometry::new(n, w1.phi.clone())?.residue(w1, w2, w3)
}

/// Block pattern of a triple of pure one-forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DoubledCase {
    /// Three diagonal forms.
    Ddd,
    /// Two diagonal forms followed by an off-diagonal one.
    Ddo,
    /// A diagonal form followed by two off-diagonal ones.
    Doo,
    /// Three off-diagonal forms.
    Ooo,
}

/// Value of a pure case predicted from the metric and volume functionals.
pub fn doubled_case_prediction(
    case: DoubledCase,
    w1: &DoubledOneForm,
    w2: &DoubledOneForm,
    w3: &DoubledOneForm,
    n: usize,
) -> Result<ResidueValue, ModelError> {
    let phi2 = Gaussian::real(w1.phi.norm_sqr());
    let re = |r: &Rational| Gaussian::real(r.clone());
    Ok(match case {
        DoubledCase::Ddd | DoubledCase::Doo => ResidueValue::zero(n),
        DoubledCase::Ddo => {
            let plus = metric_functional(&w1.w_plus, &w2.w_plus, n)?.scale(&re(&w3.f_plus));
            let minus = metric_functional(&w1.w_minus, &w2.w_minus, n)?.scale(&re(&w3.f_minus));
            plus.add(&minus).scale(&phi2)
        }
        DoubledCase::Ooo => {
            let f = &w1.f_plus * &w2.f_minus * &w3.f_plus + &w1.f_minus * &w2.f_plus * &w3.f_minus;
            volume_functional(&f, n)?.scale(&(&phi2 * &phi2))
        }
    })
}

/// True iff the torsion functional of the two-sheeted space vanishes on all
/// triples drawn from a basis of pure one-forms.
pub fn doubled_torsion_free_test(phi: &Gaussian, n: usize) -> Result<bool, ModelError> {
    let geometry = DoubledGeometry::new(n, phi.clone())?;
    let basis = doubled_basis(n, phi);
    for a in &basis {
        for b in &basis {
            for c in &basis {
                if !geometry.residue(a, b, c)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Basis of pure one-forms: frame forms on each sheet and the two unit
/// off-diagonal entries.
pub fn doubled_basis(n: usize, phi: &Gaussian) -> Vec<DoubledOneForm> {
    let zero = vec![Rational::zero(); n];
    let mut out = Vec::with_capacity(2 * n + 2);
    for a in 0..n {
        let e = crate::torsion::frame_form(n, a);
        out.push(DoubledOneForm::diagonal(e.clone(), zero.clone(), phi.clone()));
        out.push(DoubledOneForm::diagonal(zero.clone(), e, phi.clone()));
    }
    out.push(DoubledOneForm::off_diagonal(n, Rational::from_integer(1.into()), Rational::zero(), phi.clone()));
    out.push(DoubledOneForm::off_diagonal(n, Rational::zero(), Rational::from_integer(1.into()), phi.clone()));
    out
}
