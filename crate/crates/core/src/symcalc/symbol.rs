use std::collections::BTreeMap;
use std::fmt;

use crate::clifford::Multivector;
use crate::coeff::Coefficient;
use crate::scalar::{rat_int, Gaussian};

/// Exponents of a monomial `ξ_1^{α_1} ... ξ_n^{α_n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct XiMonomial(pub Vec<u8>);

impl XiMonomial {
    pub fn one(dim: usize) -> Self {
        XiMonomial(vec![0; dim])
    }

    pub fn variable(dim: usize, j: usize) -> Self {
        let mut e = vec![0; dim];
        e[j] = 1;
        XiMonomial(e)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        XiMonomial(exps.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        XiMonomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn times_variable(&self, j: usize) -> Self {
        let mut e = self.0.clone();
        e[j] += 1;
        XiMonomial(e)
    }

    /// `∂_{ξ_j}`: `(α_j, ξ^{α - e_j})`, or `None` when `α_j = 0`.
    pub fn derivative(&self, j: usize) -> Option<(u8, Self)> {
        let e = self.0[j];
        if e == 0 {
            return None;
        }
        let mut out = self.0.clone();
        out[j] -= 1;
        Some((e, XiMonomial(out)))
    }
}

impl fmt::Display for XiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "·")?;
            }
            first = false;
            if e == 1 {
                write!(f, "ξ{}", j + 1)?;
            } else {
                write!(f, "ξ{}^{}", j + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Coefficient of a symbol term, expanded to first order in the base point:
/// `value + Σ_k x_k linear[k]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Jet<C: Coefficient> {
    pub value: Multivector<C>,
    pub linear: BTreeMap<usize, Multivector<C>>,
}

impl<C: Coefficient> Jet<C> {
    pub fn constant(value: Multivector<C>) -> Self {
        Self {
            value,
            linear: BTreeMap::new(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::constant(Multivector::zero(dim))
    }

    pub fn with_linear(mut self, k: usize, coeff: Multivector<C>) -> Self {
        if !coeff.is_zero() {
            self.linear.insert(k, coeff);
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero() && self.linear.values().all(Multivector::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.linear.values().all(Multivector::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut linear = self.linear.clone();
        for (k, v) in &rhs.linear {
            let sum = match linear.get(k) {
                Some(existing) => existing.add(v),
                None => v.clone(),
            };
            if sum.is_zero() {
                linear.remove(k);
            } else {
                linear.insert(*k, sum);
            }
        }
        Self {
            value: self.value.add(&rhs.value),
            linear,
        }
    }

    /// Product truncated after the linear order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let value = self.value.mul(&rhs.value);
        let mut out = Self::constant(value);
        for (k, v) in &self.linear {
            out = out.add(&Self::zero(self.dim()).with_linear(*k, v.mul(&rhs.value)));
        }
        for (k, v) in &rhs.linear {
            out = out.add(&Self::zero(self.dim()).with_linear(*k, self.value.mul(v)));
        }
        out
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        Self {
            value: self.value.scale(s),
            linear: self
                .linear
                .iter()
                .map(|(k, v)| (*k, v.scale(s)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Gaussian::from_int(1))
    }

    /// `∂_{x_k}` evaluated within the jet (a constant).
    pub fn x_derivative(&self, k: usize) -> Self {
        match self.linear.get(&k) {
            Some(v) => Self::constant(v.clone()),
            None => Self::zero(self.dim()),
        }
    }

    pub fn at_origin(&self) -> Self {
        Self::constant(self.value.clone())
    }
}

/// A symbol homogeneous of a fixed degree in `ξ`: a finite sum of terms
/// `c(x) ξ^α |ξ|^{degree - |α|}`.
#[derive(Clone, PartialEq, Debug)]
pub struct HomogeneousSymbol<C: Coefficient> {
    dim: usize,
    degree: i32,
    terms: BTreeMap<XiMonomial, Jet<C>>,
}

impl<C: Coefficient> HomogeneousSymbol<C> {
    pub fn zero(dim: usize, degree: i32) -> Self {
        Self {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Single term `c(x) ξ^α |ξ|^{radial}`.
    pub fn term(monomial: XiMonomial, radial: i32, coeff: Jet<C>) -> Self {
        let dim = monomial.dim();
        let mut s = Self::zero(dim, monomial.degree() + radial);
        s.add_term(monomial, coeff);
        s
    }

    /// `|ξ|^{radial} · c`.
    pub fn radial(dim: usize, radial: i32, c: Multivector<C>) -> Self {
        Self::term(XiMonomial::one(dim), radial, Jet::constant(c))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(monomial, radial power, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&XiMonomial, i32, &Jet<C>)> {
        self.terms.iter().map(move |(m, c)| (m, self.degree - m.degree(), c))
    }

    pub fn coefficient(&self, monomial: &XiMonomial) -> Option<&Jet<C>> {
        self.terms.get(monomial)
    }

    pub fn add_term(&mut self, monomial: XiMonomial, coeff: Jet<C>) {
        assert_eq!(monomial.dim(), self.dim, "monomial dimension mismatch");
        if coeff.is_zero() {
            return;
        }
        let merged = match self.terms.get(&monomial) {
            Some(existing) => existing.add(&coeff),
            None => coeff,
        };
        if merged.is_zero() {
            self.terms.remove(&monomial);
        } else {
            self.terms.insert(monomial, merged);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree, rhs.degree, "adding symbols of different degree");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        self.map(|c| c.scale(s))
    }

    fn map(&self, f: impl Fn(&Jet<C>) -> Jet<C>) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Pointwise product (no derivative corrections).
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.degree + rhs.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    /// Multiplies by `|ξ|^r`.
    pub fn times_radial(&self, r: i32) -> Self {
        Self {
            dim: self.dim,
            degree: self.degree + r,
            terms: self.terms.clone(),
        }
    }

    /// `∂_{ξ_j}` using `∂_j |ξ|^r = r ξ_j |ξ|^{r-2}`.
    pub fn xi_derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.derivative(j) {
                out.add_term(lowered, c.scale(&Gaussian::from_int(e as i64)));
            }
            let radial = self.degree - m.degree();
            if radial != 0 {
                out.add_term(m.times_variable(j), c.scale(&Gaussian::from_int(radial as i64)));
            }
        }
        out
    }

    /// `∂_{x_k}` of the coefficients.
    pub fn x_derivative(&self, k: usize) -> Self {
        self.map(|c| c.x_derivative(k))
    }

    pub fn at_origin(&self) -> Self {
        self.map(Jet::at_origin)
    }

    pub fn is_constant_in_x(&self) -> bool {
        self.terms.values().all(Jet::is_constant)
    }

    /// Multiplies every coefficient on the left by `p`.
    pub fn left_mul(&self, p: &Multivector<C>) -> Self {
        let pj = Jet::constant(p.clone());
        self.map(|c| pj.mul(c))
    }

    /// Re-expresses the restriction to the unit sphere as homogeneous
    /// polynomials, one per parity class of `|α|`, each multiplied up by powers
    /// of `Σ ξ_i^2` to the common degree `target[parity]`.
    fn sphere_polynomials(&self, target: [i32; 2]) -> [BTreeMap<XiMonomial, Jet<C>>; 2] {
        let mut out: [BTreeMap<XiMonomial, Jet<C>>; 2] = [BTreeMap::new(), BTreeMap::new()];
        for (m, c) in &self.terms {
            let parity = (m.degree() % 2) as usize;
            let lift = ((target[parity] - m.degree()) / 2) as u32;
            for (pm, count) in radial_square_power(self.dim, lift) {
                let key = m.mul(&pm);
                let add = c.scale(&Gaussian::real(rat_int(count)));
                let merged = match out[parity].get(&key) {
                    Some(existing) => existing.add(&add),
                    None => add,
                };
                if merged.is_zero() {
                    out[parity].remove(&key);
                } else {
                    out[parity].insert(key, merged);
                }
            }
        }
        out
    }

    fn max_degree_by_parity(&self) -> [i32; 2] {
        let mut t = [0, 1];
        for m in self.terms.keys() {
            let d = m.degree();
            let p = (d % 2) as usize;
            t[p] = t[p].max(d);
        }
        t
    }

    /// True when both symbols define the same function of `(x, ξ)`, i.e. agree
    /// on the unit sphere; representations may differ through `Σ ξ_i^2 = |ξ|^2`.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.degree != other.degree || self.dim != other.dim {
            return false;
        }
        let diff = self.sub(other);
        diff.sphere_polynomials(diff.max_degree_by_parity())
            .iter()
            .all(BTreeMap::is_empty)
    }
}

/// Expansion of `(Σ_i ξ_i^2)^k` as `(monomial, multinomial count)`.
pub(crate) fn radial_square_power(dim: usize, k: u32) -> Vec<(XiMonomial, i64)> {
    let mut acc: BTreeMap<XiMonomial, i64> = BTreeMap::new();
    acc.insert(XiMonomial::one(dim), 1);
    for _ in 0..k {
        let mut next: BTreeMap<XiMonomial, i64> = BTreeMap::new();
        for (m, c) in &acc {
            for i in 0..dim {
                let mut e = m.0.clone();
                e[i] += 2;
                *next.entry(XiMonomial(e)).or_insert(0) += c;
            }
        }
        acc = next;
    }
    acc.into_iter().collect()
}

impl<C: Coefficient + fmt::Display> fmt::Display for HomogeneousSymbol<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, r, c)| {
                let radial = if r == 0 { String::new() } else { format!("|ξ|^{r}") };
                let lin = if c.is_constant() { "" } else { " + O(x)" };
                format!("[{}{}] {}{}", c.value, lin, m, radial)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Number of leading degrees of a [`SymbolSum`] that are known exactly.
/// [`SymbolSum::EXACT`] marks a symbol with no further lower-order terms.
pub type Budget = usize;

/// A classical symbol truncated to its leading homogeneous parts.
#[derive(Clone, PartialEq, Debug)]
pub struct SymbolSum<C: Coefficient> {
    dim: usize,
    lead: i32,
    budget: Budget,
    parts: BTreeMap<i32, HomogeneousSymbol<C>>,
}

impl<C: Coefficient> SymbolSum<C> {
    pub const EXACT: Budget = usize::MAX;

    pub fn new(dim: usize, lead: i32, budget: Budget) -> Self {
        assert!(budget >= 1, "budget must be at least one degree");
        Self {
            dim,
            lead,
            budget,
            parts: BTreeMap::new(),
        }
    }

    /// Zero-order symbol `p` with no lower-order terms.
    pub fn constant(p: Multivector<C>) -> Self {
        let dim = p.dim();
        let mut s = Self::new(dim, 0, Self::EXACT);
        s.insert(HomogeneousSymbol::radial(dim, 0, p));
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lead(&self) -> i32 {
        self.lead
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn is_exact(&self) -> bool {
        self.budget == Self::EXACT
    }

    /// Lowest degree whose homogeneous part is guaranteed.
    pub fn lowest_valid_degree(&self) -> i64 {
        if self.is_exact() {
            i64::MIN
        } else {
            self.lead as i64 - self.budget as i64 + 1
        }
    }

    /// Adds a homogeneous part; parts outside the budget window are dropped.
    pub fn insert(&mut self, part: HomogeneousSymbol<C>) {
        assert_eq!(part.dim(), self.dim, "symbol dimension mismatch");
        let d = part.degree();
        assert!(d <= self.lead, "part of degree {d} above the leading degree {}", self.lead);
        if (d as i64) < self.lowest_valid_degree() || part.is_zero() {
            return;
        }
        let merged = match self.parts.get(&d) {
            Some(existing) => existing.add(&part),
            None => part,
        };
        if merged.is_zero() {
            self.parts.remove(&d);
        } else {
            self.parts.insert(d, merged);
        }
    }

    pub fn with_part(mut self, part: HomogeneousSymbol<C>) -> Self {
        self.insert(part);
        self
    }

    /// Homogeneous part of degree `d` (zero when absent).
    pub fn part(&self, d: i32) -> HomogeneousSymbol<C> {
        self.parts
            .get(&d)
            .cloned()
            .unwrap_or_else(|| HomogeneousSymbol::zero(self.dim, d))
    }

    pub fn parts(&self) -> impl Iterator<Item = &HomogeneousSymbol<C>> {
        self.parts.values().rev()
    }

    /// Restricts to the top `budget` degrees.
    pub fn truncated(&self, budget: Budget) -> Self {
        let mut out = Self::new(self.dim, self.lead, budget.min(self.budget));
        for p in self.parts.values() {
            out.insert(p.clone());
        }
        out
    }

    pub fn at_origin(&self) -> Self {
        let mut out = Self::new(self.dim, self.lead, self.budget);
        for p in self.parts.values() {
            out.insert(p.at_origin());
        }
        out
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        let mut out = Self::new(self.dim, self.lead, self.budget);
        if !num::Zero::is_zero(s) {
            for p in self.parts.values() {
                out.insert(p.scale(s));
            }
        }
        out
    }

    /// Degree-wise equivalence on the common budget window.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.dim != other.dim || self.lead != other.lead {
            return false;
        }
        let low = self.lowest_valid_degree().max(other.lowest_valid_degree());
        let floor = self
            .parts
            .keys()
            .chain(other.parts.keys())
            .copied()
            .min()
            .unwrap_or(self.lead) as i64;
        let low = low.max(floor);
        (low..=self.lead as i64).all(|d| {
            let d = d as i32;
            self.part(d).equivalent(&other.part(d))
        })
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for SymbolSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.parts() {
            writeln!(f, "deg {}: {}", p.degree(), p)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(dim: usize) -> Multivector {
        Multivector::one(dim)
    }

    #[test]
    fn sum_of_squares_is_radial() {
        let dim = 3;
        let mut a = HomogeneousSymbol::zero(dim, 2);
        for j in 0..dim {
            let mut e = vec![0u8; dim];
            e[j] = 2;
            a.add_term(XiMonomial(e), Jet::constant(one(dim)));
        }
        let b = HomogeneousSymbol::radial(dim, 2, one(dim));
        assert!(a.equivalent(&b));
        assert!(!a.equivalent(&b.scale(&Gaussian::from_int(2))));
    }

    #[test]
    fn odd_and_even_parts_do_not_mix() {
        let dim = 2;
        let a = HomogeneousSymbol::term(XiMonomial::variable(dim, 0), -1, Jet::constant(one(dim)));
        let b = HomogeneousSymbol::radial(dim, 0, one(dim));
        assert!(!a.equivalent(&b));
    }

    #[test]
    fn radial_derivative() {
        // ∂_1 |ξ|^{-2} = -2 ξ_1 |ξ|^{-4}
        let dim = 2;
        let s = HomogeneousSymbol::radial(dim, -2, one(dim));
        let d = s.xi_derivative(0);
        let expected = HomogeneousSymbol::term(
            XiMonomial::variable(dim, 0),
            -4,
            Jet::constant(one(dim).scale(&Gaussian::from_int(-2))),
        );
        assert!(d.equivalent(&expected));
    }

    #[test]
    fn monomial_derivative() {
        // ∂_1 (ξ_1^2 ξ_2) = 2 ξ_1 ξ_2
        let m = XiMonomial(vec![2, 1]);
        assert_eq!(m.derivative(0), Some((2, XiMonomial(vec![1, 1]))));
        assert_eq!(XiMonomial(vec![0, 1]).derivative(0), None);
    }

    #[test]
    fn radial_square_expansion() {
        let terms = radial_square_power(2, 2);
        // (ξ1²+ξ2²)² = ξ1⁴ + 2ξ1²ξ2² + ξ2⁴
        assert_eq!(
            terms,
            vec![
                (XiMonomial(vec![0, 4]), 1),
                (XiMonomial(vec![2, 2]), 2),
                (XiMonomial(vec![4, 0]), 1)
            ]
        );
    }

    #[test]
    fn jet_product_truncates() {
        let dim = 2;
        let a = Jet::constant(one(dim)).with_linear(0, one(dim));
        let b = Jet::constant(one(dim)).with_linear(0, one(dim));
        let p = a.mul(&b);
        assert_eq!(p.value, one(dim));
        assert_eq!(p.linear.get(&0), Some(&one(dim).scale(&Gaussian::from_int(2))));
    }

    #[test]
    fn insert_respects_budget() {
        let dim = 2;
        let mut s: SymbolSum<Gaussian> = SymbolSum::new(dim, 1, 2);
        s.insert(HomogeneousSymbol::radial(dim, -1, one(dim)));
        assert!(s.part(-1).is_zero());
        s.insert(HomogeneousSymbol::radial(dim, 0, one(dim)));
        assert!(!s.part(0).is_zero());
    }
}
