use super::compose::compose_window;
use super::symbol::{Budget, HomogeneousSymbol, SymbolSum};
use super::{compose_symbols, SymbolError};
use crate::clifford::Multivector;
use crate::coeff::Coefficient;
use crate::scalar::Gaussian;

/// Checks that the leading part is `|ξ|^r` times the unit and returns the unit.
fn leading_unit<C: Coefficient>(a: &SymbolSum<C>) -> Result<Multivector<C>, SymbolError> {
    let lead = a.part(a.lead());
    if !lead.is_constant_in_x() {
        return Err(SymbolError::NonInvertibleLeading);
    }
    let sample = lead
        .terms()
        .flat_map(|(_, _, c)| c.value.terms().map(|(_, v)| v.identity_like()).collect::<Vec<_>>())
        .next()
        .ok_or(SymbolError::NonInvertibleLeading)?;
    let unit = Multivector::scalar(a.dim(), sample);
    if lead.equivalent(&HomogeneousSymbol::radial(a.dim(), a.lead(), unit.clone())) {
        Ok(unit)
    } else {
        Err(SymbolError::NonInvertibleLeading)
    }
}

fn check_budget<C: Coefficient>(a: &SymbolSum<C>, budget: Budget) -> Result<(), SymbolError> {
    if budget > a.budget() {
        return Err(SymbolError::InsufficientBudget {
            requested: budget,
            available: a.budget(),
        });
    }
    Ok(())
}

/// Degree-`degree` part of `a ∘ b`.
fn composed_part<C: Coefficient>(a: &SymbolSum<C>, b: &SymbolSum<C>, degree: i32) -> HomogeneousSymbol<C> {
    compose_window(a, b, degree as i64)
        .into_iter()
        .filter(|p| p.degree() == degree)
        .fold(HomogeneousSymbol::zero(a.dim(), degree), |acc, p| acc.add(&p))
}

fn extended<C: Coefficient>(s: &SymbolSum<C>, budget: Budget, part: HomogeneousSymbol<C>) -> SymbolSum<C> {
    let mut out = SymbolSum::new(s.dim(), s.lead(), budget);
    for p in s.parts() {
        out.insert(p.clone());
    }
    out.insert(part);
    out
}

/// Symbol `b` with `b ∘ a = 1` on the top `budget` degrees, for `a` with
/// leading part `|ξ|^r · 1`.
pub fn parametrix<C: Coefficient>(a: &SymbolSum<C>, budget: Budget) -> Result<SymbolSum<C>, SymbolError> {
    check_budget(a, budget)?;
    let unit = leading_unit(a)?;
    let (dim, r) = (a.dim(), a.lead());
    let mut b = SymbolSum::new(dim, -r, 1).with_part(HomogeneousSymbol::radial(dim, -r, unit));
    for k in 1..budget {
        let k = k as i32;
        let residual = composed_part(&b, a, -k);
        b = extended(&b, k as usize + 1, residual.times_radial(-r).neg());
    }
    Ok(b)
}

/// Leading `budget` degrees of the symbol of `A^{-m}`, by repeated composition
/// of the parametrix.
pub fn negative_power<C: Coefficient>(
    a: &SymbolSum<C>,
    m: u32,
    budget: Budget,
) -> Result<SymbolSum<C>, SymbolError> {
    if m == 0 {
        return Err(SymbolError::InvalidPower(m));
    }
    let p = parametrix(a, budget)?;
    let mut acc = p.clone();
    for _ in 1..m {
        acc = compose_symbols(&acc, &p, budget)?;
    }
    Ok(acc)
}

/// Symbol `s` with `s ∘ s = a` on the top `budget` degrees, for `a` with
/// leading part `|ξ|^{2k} · 1`.
pub fn sqrt_symbol<C: Coefficient>(a: &SymbolSum<C>, budget: Budget) -> Result<SymbolSum<C>, SymbolError> {
    check_budget(a, budget)?;
    let r = a.lead();
    if r % 2 != 0 {
        return Err(SymbolError::OddLeadingDegree(r));
    }
    let unit = leading_unit(a)?;
    let dim = a.dim();
    let half = Gaussian::from_ratio(1, 2);
    let mut s = SymbolSum::new(dim, r / 2, 1).with_part(HomogeneousSymbol::radial(dim, r / 2, unit));
    for k in 1..budget {
        let k = k as i32;
        let residual = composed_part(&s, &s, r - k);
        let next = a.part(r - k).sub(&residual).scale(&half).times_radial(-r / 2);
        s = extended(&s, k as usize + 1, next);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcalc::{Jet, XiMonomial};

    fn laplacian_like(dim: usize, first: HomogeneousSymbol<Gaussian>) -> SymbolSum<Gaussian> {
        SymbolSum::new(dim, 2, SymbolSum::<Gaussian>::EXACT)
            .with_part(HomogeneousSymbol::radial(dim, 2, Multivector::one(dim)))
            .with_part(first)
    }

    fn first_order(dim: usize) -> HomogeneousSymbol<Gaussian> {
        let mut h = HomogeneousSymbol::zero(dim, 1);
        h.add_term(
            XiMonomial::variable(dim, 0),
            Jet::constant(Multivector::gamma(dim, 1).scale(&Gaussian::i())),
        );
        h.add_term(
            XiMonomial::variable(dim, 1),
            Jet::constant(Multivector::gamma(dim, 0).scale(&Gaussian::from_int(3))),
        );
        h
    }

    #[test]
    fn parametrix_of_pure_radial() {
        let dim = 3;
        let a = laplacian_like(dim, HomogeneousSymbol::zero(dim, 1));
        let b = parametrix(&a, 2).unwrap();
        assert!(b.part(-2).equivalent(&HomogeneousSymbol::radial(dim, -2, Multivector::one(dim))));
        assert!(b.part(-3).is_zero());
    }

    #[test]
    fn parametrix_inverts_both_sides() {
        let dim = 4;
        let a = laplacian_like(dim, first_order(dim));
        let b = parametrix(&a, 3).unwrap();
        let one = SymbolSum::constant(Multivector::one(dim));
        for (l, r) in [(&b, &a), (&a, &b)] {
            let p = compose_symbols(l, r, 3).unwrap();
            assert!(p.equivalent(&one.truncated(3)), "{p}");
        }
    }

    #[test]
    fn second_parametrix_symbol_is_sandwich() {
        let dim = 4;
        let a1 = first_order(dim);
        let a = laplacian_like(dim, a1.clone());
        let b = parametrix(&a, 2).unwrap();
        let expected = a1.times_radial(-4).neg();
        assert!(b.part(-3).equivalent(&expected));
    }

    #[test]
    fn sqrt_squares_back() {
        let dim = 3;
        let a = laplacian_like(dim, first_order(dim));
        let s = sqrt_symbol(&a, 3).unwrap();
        let sq = compose_symbols(&s, &s, 3).unwrap();
        assert!(sq.equivalent(&a.truncated(3)));
        assert!(s.part(1).equivalent(&HomogeneousSymbol::radial(dim, 1, Multivector::one(dim))));
    }

    #[test]
    fn power_zero_is_rejected() {
        let dim = 2;
        let a = laplacian_like(dim, HomogeneousSymbol::zero(dim, 1));
        assert_eq!(negative_power(&a, 0, 2).unwrap_err(), SymbolError::InvalidPower(0));
    }

    #[test]
    fn non_scalar_leading_is_rejected() {
        let dim = 2;
        let a = SymbolSum::new(dim, 2, SymbolSum::<Gaussian>::EXACT)
            .with_part(HomogeneousSymbol::radial(dim, 2, Multivector::gamma(dim, 0)));
        assert_eq!(parametrix(&a, 2).unwrap_err(), SymbolError::NonInvertibleLeading);
    }
}
