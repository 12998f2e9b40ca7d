use super::symbol::{Budget, HomogeneousSymbol, SymbolSum};
use super::SymbolError;
use crate::coeff::Coefficient;
use crate::scalar::Gaussian;

/// Top `budget` degrees of `σ(AB) = Σ_{|α|≤1} ∂_ξ^α a · (-i ∂_x)^α b`.
pub fn compose_symbols<C: Coefficient>(
    a: &SymbolSum<C>,
    b: &SymbolSum<C>,
    budget: Budget,
) -> Result<SymbolSum<C>, SymbolError> {
    if a.dim() != b.dim() {
        return Err(SymbolError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let available = a.budget().min(b.budget());
    if budget > available {
        return Err(SymbolError::InsufficientBudget {
            requested: budget,
            available,
        });
    }
    let mut out = SymbolSum::new(a.dim(), a.lead() + b.lead(), budget);
    for part in compose_window(a, b, out.lowest_valid_degree()) {
        out.insert(part);
    }
    Ok(out)
}

/// All homogeneous contributions of `a ∘ b` of degree at least `lowest`,
/// without any validity bookkeeping.
pub(crate) fn compose_window<C: Coefficient>(
    a: &SymbolSum<C>,
    b: &SymbolSum<C>,
    lowest: i64,
) -> Vec<HomogeneousSymbol<C>> {
    let minus_i = -Gaussian::i();
    let mut out = Vec::new();
    for pa in a.parts() {
        for pb in b.parts() {
            let d = (pa.degree() + pb.degree()) as i64;
            if d >= lowest {
                out.push(pa.mul(pb));
            }
            if d > lowest && !pb.is_constant_in_x() {
                for j in 0..a.dim() {
                    let db = pb.x_derivative(j);
                    if db.is_zero() {
                        continue;
                    }
                    let da = pa.xi_derivative(j);
                    if da.is_zero() {
                        continue;
                    }
                    out.push(da.mul(&db).scale(&minus_i));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Multivector;
    use crate::symcalc::{Jet, XiMonomial};

    #[test]
    fn radial_powers_multiply() {
        let dim = 3;
        let s = SymbolSum::new(dim, -2, SymbolSum::<Gaussian>::EXACT)
            .with_part(HomogeneousSymbol::radial(dim, -2, Multivector::one(dim)));
        let c = compose_symbols(&s, &s, 2).unwrap();
        assert!(c.part(-4).equivalent(&HomogeneousSymbol::radial(dim, -4, Multivector::one(dim))));
        assert!(c.part(-5).is_zero());
    }

    #[test]
    fn x_dependence_produces_correction() {
        // a = x_1 (as a jet), b = ξ_1: a∘b = x_1 ξ_1 ; b∘a = x_1 ξ_1 - i
        let dim = 2;
        let one = Multivector::one(dim);
        let a = SymbolSum::new(dim, 0, SymbolSum::<Gaussian>::EXACT).with_part(HomogeneousSymbol::term(
            XiMonomial::one(dim),
            0,
            Jet::zero(dim).with_linear(0, one.clone()),
        ));
        let b = SymbolSum::new(dim, 1, SymbolSum::<Gaussian>::EXACT).with_part(HomogeneousSymbol::term(
            XiMonomial::variable(dim, 0),
            0,
            Jet::constant(one.clone()),
        ));
        let ab = compose_symbols(&a, &b, 2).unwrap();
        assert!(ab.part(0).is_zero());
        let ba = compose_symbols(&b, &a, 2).unwrap();
        let expected = HomogeneousSymbol::radial(dim, 0, one.scale(&-Gaussian::i()));
        assert!(ba.part(0).equivalent(&expected));
    }

    #[test]
    fn rejects_excess_budget() {
        let dim = 2;
        let s = SymbolSum::new(dim, 0, 1).with_part(HomogeneousSymbol::radial(dim, 0, Multivector::one(dim)));
        assert!(matches!(
            compose_symbols(&s, &s, 2),
            Err(SymbolError::InsufficientBudget { requested: 2, available: 1 })
        ));
    }
}
