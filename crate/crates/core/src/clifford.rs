//! Exact arithmetic in the complexified Euclidean Clifford algebra `Cl(R^n)`.
//!
//! Generators satisfy `γ^a γ^b + γ^b γ^a = 2 δ^{ab}`. Frame indices are
//! zero-based: `γ^1` of the usual notation is index `0` here. Elements are kept
//! in canonical form, a map from strictly increasing index sets (bitmasks) to
//! coefficients in a [`Coefficient`] algebra that commutes with the generators.
//!
//! The trace is normalised so that `Tr(1) = 2^m` with `m = n/2` for even `n`
//! and `m = (n+1)/2` for odd `n`. For odd `n` this is the trace of the doubled
//! representation `γ^a ↦ γ̂^a ⊕ (-γ̂^a)`, in which every non-scalar canonical
//! word, the top element included, is traceless.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use thiserror::Error;

use crate::coeff::Coefficient;
use crate::scalar::Gaussian;

/// Largest supported dimension (bitmask width).
pub const MAX_DIM: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("gamma index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("expected {expected} one-form components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("chirality element needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
}

/// A canonical basis element `γ^{a_1} ... γ^{a_k}` with `a_1 < ... < a_k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(index: usize) -> Self {
        Blade(1 << index)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Blade(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    /// Product of two canonical blades: `(sign, blade)`.
    pub fn product(self, rhs: Blade) -> (i8, Blade) {
        // Count transpositions needed to merge rhs into self.
        let mut a = self.0 >> 1;
        let mut swaps = 0;
        while a != 0 {
            swaps += (a & rhs.0).count_ones();
            a >>= 1;
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        (sign, Blade(self.0 ^ rhs.0))
    }

    /// Sign picked up under reversal `γ^{a_1}...γ^{a_k} ↦ γ^{a_k}...γ^{a_1}`.
    pub fn reversal_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("γ{}", i + 1)).collect();
        write!(f, "{}", parts.join(""))
    }
}

/// A product of generators with a scalar prefactor, in any order.
#[derive(Clone, PartialEq, Debug)]
pub struct GammaWord {
    pub indices: Vec<usize>,
    pub scalar: Gaussian,
}

impl GammaWord {
    pub fn new(indices: Vec<usize>) -> Self {
        Self {
            indices,
            scalar: Gaussian::one(),
        }
    }

    pub fn with_scalar(indices: Vec<usize>, scalar: Gaussian) -> Self {
        Self { indices, scalar }
    }
}

/// Element of `Cl(R^n) ⊗ C` for a coefficient algebra `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector<C = Gaussian> {
    dim: usize,
    terms: BTreeMap<Blade, C>,
}

fn check_dim(dim: usize) {
    assert!(dim <= MAX_DIM, "Clifford dimension {dim} exceeds {MAX_DIM}");
}

impl<C: Coefficient> Multivector<C> {
    pub fn zero(dim: usize) -> Self {
        check_dim(dim);
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: C) -> Self {
        Self::from_blade(dim, Blade::SCALAR, c)
    }

    pub fn from_blade(dim: usize, blade: Blade, c: C) -> Self {
        let mut mv = Self::zero(dim);
        mv.add_term(blade, c);
        mv
    }

    /// `c γ^a`.
    pub fn gamma_with(dim: usize, index: usize, c: C) -> Self {
        assert!(index < dim, "gamma index {index} out of range for dimension {dim}");
        Self::from_blade(dim, Blade::generator(index), c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Option<&C> {
        self.terms.get(&blade)
    }

    /// Adds `c · blade`, dropping the entry if it cancels.
    pub fn add_term(&mut self, blade: Blade, c: C) {
        if c.vanishes() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(existing) => {
                let sum = existing.plus(&c);
                if sum.vanishes() {
                    self.terms.remove(&blade);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, CliffordError> {
        self.same_dim(rhs)?;
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, CliffordError> {
        self.same_dim(rhs)?;
        let mut out = Self::zero(self.dim);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &rhs.terms {
                let (sign, blade) = ba.product(*bb);
                let c = ca.times(cb);
                out.add_term(blade, if sign < 0 { c.negate() } else { c });
            }
        }
        Ok(out)
    }

    /// Sum; panics on dimension mismatch (use [`Self::checked_add`] otherwise).
    pub fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("multivector dimension mismatch")
    }

    /// Product; panics on dimension mismatch (use [`Self::checked_mul`] otherwise).
    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("multivector dimension mismatch")
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| c.negate())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        if num::Zero::is_zero(s) {
            return Self::zero(self.dim);
        }
        self.map_coefficients(|c| c.scale(s))
    }

    /// Multiplies every coefficient on the left by `c`.
    pub fn left_coefficient_mul(&self, c: &C) -> Self {
        self.map_coefficients(|x| c.times(x))
    }

    /// Multiplies every coefficient on the right by `c`.
    pub fn right_coefficient_mul(&self, c: &C) -> Self {
        self.map_coefficients(|x| x.times(c))
    }

    fn map_coefficients(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    pub fn scalar_part(&self) -> Option<&C> {
        self.terms.get(&Blade::SCALAR)
    }

    /// Hermitian adjoint: reversal of each blade and adjoint of coefficients.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            let c = c.adjoint();
            out.add_term(*b, if b.reversal_sign() < 0 { c.negate() } else { c });
        }
        out
    }

    /// Normalised trace: `2^m` times the trace of the scalar coefficient.
    pub fn trace(&self) -> Gaussian {
        match self.scalar_part() {
            Some(c) => c.trace().scale(&crate::scalar::rat_int(trace_of_unit(self.dim))),
            None => Gaussian::zero(),
        }
    }

    fn same_dim(&self, rhs: &Self) -> Result<(), CliffordError> {
        if self.dim != rhs.dim {
            return Err(CliffordError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(())
    }
}

impl Multivector<Gaussian> {
    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Gaussian::one())
    }

    /// The generator `γ^a`.
    pub fn gamma(dim: usize, index: usize) -> Self {
        Self::gamma_with(dim, index, Gaussian::one())
    }

    /// Lifts a scalar multivector into `Cl ⊗ C` by tensoring with `unit`.
    pub fn tensor<C: Coefficient>(&self, unit: &C) -> Multivector<C> {
        let mut out = Multivector::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, unit.scale(c));
        }
        out
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Multivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                if b.0 == 0 {
                    format!("({c})")
                } else {
                    format!("({c}){b}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Tr(1) = 2^m`.
pub fn trace_of_unit(dim: usize) -> i64 {
    1 << trace_exponent(dim)
}

/// `m = n/2` for even `n`, `(n+1)/2` for odd `n`.
pub fn trace_exponent(dim: usize) -> u32 {
    dim.div_ceil(2) as u32
}

/// Reduces a word of generators to canonical form.
pub fn canonicalize(word: &GammaWord, dim: usize) -> Result<Multivector, CliffordError> {
    if dim > MAX_DIM {
        return Err(CliffordError::UnsupportedDimension(dim));
    }
    let mut blade = Blade::SCALAR;
    let mut sign = 1i8;
    for &index in &word.indices {
        if index >= dim {
            return Err(CliffordError::IndexOutOfRange { index, dim });
        }
        let (s, b) = blade.product(Blade::generator(index));
        sign *= s;
        blade = b;
    }
    let c = if sign < 0 {
        -&word.scalar
    } else {
        word.scalar.clone()
    };
    Ok(Multivector::from_blade(dim, blade, c))
}

/// Normalised trace of a scalar multivector; see the module docs.
pub fn clifford_trace<C: Coefficient>(x: &Multivector<C>) -> Gaussian {
    x.trace()
}

/// Chirality element `(-i)^{n/2} γ^1 ... γ^n`, which squares to one and is self-adjoint.
pub fn chirality(dim: usize) -> Result<Multivector, CliffordError> {
    if dim % 2 == 1 {
        return Err(CliffordError::OddDimension(dim));
    }
    if dim > MAX_DIM {
        return Err(CliffordError::UnsupportedDimension(dim));
    }
    let phase = (-Gaussian::i()).pow((dim / 2) as u32);
    let top = Blade((1u32 << dim) - 1);
    Ok(Multivector::from_blade(dim, top, phase))
}

/// Clifford multiplication by a one-form: `Σ_a u_a γ^a`.
pub fn clifford_action<C: Coefficient>(u: &[C], dim: usize) -> Result<Multivector<C>, CliffordError> {
    if u.len() != dim {
        return Err(CliffordError::LengthMismatch {
            expected: dim,
            got: u.len(),
        });
    }
    let mut out = Multivector::zero(dim);
    for (a, c) in u.iter().enumerate() {
        out.add_term(Blade::generator(a), c.clone());
    }
    Ok(out)
}
