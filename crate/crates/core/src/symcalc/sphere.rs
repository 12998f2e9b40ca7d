use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::symbol::HomogeneousSymbol;
use super::SymbolError;
use crate::clifford::Multivector;
use crate::coeff::Coefficient;
use crate::scalar::{rat_int, rational_to_f64, Gaussian, Rational};

/// `∫_{S^{n-1}} ξ^α dS` divided by the sphere volume; `n` is `alpha.len()`.
///
/// Zero unless every exponent is even, otherwise
/// `Π (α_i - 1)!! / (n (n+2) ... (n + |α| - 2))`.
pub fn moment(alpha: &[u8]) -> Rational {
    if alpha.iter().any(|e| e % 2 == 1) {
        return Rational::zero();
    }
    let n = alpha.len() as i64;
    let mut num = Rational::one();
    for &e in alpha {
        let mut k = e as i64 - 1;
        while k > 1 {
            num *= rat_int(k);
            k -= 2;
        }
    }
    let half: i64 = alpha.iter().map(|&e| e as i64).sum::<i64>() / 2;
    let mut den = Rational::one();
    for j in 0..half {
        den *= rat_int(n + 2 * j);
    }
    num / den
}

/// Integral over the unit sphere of a degree `-n` symbol at `x = 0`, in units
/// of the sphere volume.
pub fn sphere_integrate<C: Coefficient>(
    s: &HomogeneousSymbol<C>,
    n: usize,
) -> Result<Multivector<C>, SymbolError> {
    if s.degree() != -(n as i32) {
        return Err(SymbolError::DegreeMismatch {
            expected: -(n as i32),
            got: s.degree(),
        });
    }
    if s.dim() != n {
        return Err(SymbolError::DimensionMismatch { left: s.dim(), right: n });
    }
    let mut acc = Multivector::zero(n);
    for (m, _, c) in s.terms() {
        let w = moment(&m.0);
        if !w.is_zero() {
            acc = acc.add(&c.value.scale(&Gaussian::real(w)));
        }
    }
    Ok(acc)
}

/// Exact `rational · π^{pi_power}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SphereVolume {
    pub rational: (i64, i64),
    pub pi_power: u32,
}

impl SphereVolume {
    pub fn coefficient(&self) -> Rational {
        crate::scalar::rat(self.rational.0, self.rational.1)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coefficient()) * std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

impl fmt::Display for SphereVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coefficient();
        let pi = match self.pi_power {
            0 => String::new(),
            1 => "π".to_string(),
            p => format!("π^{p}"),
        };
        if c.is_one() && !pi.is_empty() {
            write!(f, "{pi}")
        } else if c.is_integer() {
            write!(f, "{c}{pi}")
        } else {
            write!(f, "({c}){pi}")
        }
    }
}

/// Volume of the unit sphere `S^{n-1} ⊂ ℝ^n`, `2π^{n/2}/Γ(n/2)`.
pub fn sphere_volume(n: usize) -> SphereVolume {
    assert!(n >= 1, "sphere volume needs n ≥ 1");
    let k = (n / 2) as i64;
    let fact = |m: i64| (1..=m).product::<i64>();
    if n % 2 == 0 {
        // 2π^k/(k-1)!
        let r = crate::scalar::rat(2, fact(k - 1));
        SphereVolume {
            rational: to_pair(&r),
            pi_power: k as u32,
        }
    } else {
        // 2·4^k·k!·π^k/(2k)!
        let r = crate::scalar::rat(2 * 4i64.pow(k as u32) * fact(k), fact(2 * k));
        SphereVolume {
            rational: to_pair(&r),
            pi_power: k as u32,
        }
    }
}

fn to_pair(r: &Rational) -> (i64, i64) {
    use num::ToPrimitive;
    (
        r.numer().to_i64().expect("sphere volume numerator fits in i64"),
        r.denom().to_i64().expect("sphere volume denominator fits in i64"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn volumes() {
        assert_eq!(sphere_volume(2).to_string(), "2π");
        assert_eq!(sphere_volume(3).to_string(), "4π");
        assert_eq!(sphere_volume(4).to_string(), "2π^2");
        assert_eq!(sphere_volume(5).to_string(), "(8/3)π^2");
        assert_eq!(sphere_volume(6).to_string(), "π^3");
        assert!((sphere_volume(7).to_f64() - 16.0 * std::f64::consts::PI.powi(3) / 15.0).abs() < 1e-12);
    }

    #[test]
    fn low_moments() {
        assert_eq!(moment(&[1, 0, 0]), Rational::zero());
        assert_eq!(moment(&[2, 0, 0]), rat(1, 3));
        assert_eq!(moment(&[0, 0, 0, 0]), Rational::one());
        assert_eq!(moment(&[2, 2, 0, 0]), rat(1, 24));
        assert_eq!(moment(&[4, 0, 0, 0]), rat(3, 24));
    }

    #[test]
    fn moments_sum_to_lower_moment() {
        // Σ_i ∫ ξ_i² ξ^α = ∫ ξ^α on the sphere
        let alpha = [2u8, 0, 4, 2, 0];
        let mut total = Rational::zero();
        for i in 0..alpha.len() {
            let mut a = alpha;
            a[i] += 2;
            total += moment(&a);
        }
        assert_eq!(total, moment(&alpha));
    }

    #[test]
    fn rejects_wrong_degree() {
        let s = HomogeneousSymbol::radial(3, -2, Multivector::one(3));
        assert_eq!(
            sphere_integrate(&s, 3).unwrap_err(),
            SymbolError::DegreeMismatch { expected: -3, got: -2 }
        );
    }
}
