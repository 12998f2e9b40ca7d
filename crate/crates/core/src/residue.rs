//! Exact residue values in units of the sphere volume.

use std::fmt;

use num::complex::Complex64;
use num::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scalar::{Gaussian, Rational};
use crate::symcalc::{sphere_volume, SphereVolume};

/// `multiplier · V(S^{n-1})` with an exact Gaussian-rational multiplier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueValue {
    dim: usize,
    multiplier: Gaussian,
}

impl ResidueValue {
    pub fn new(dim: usize, multiplier: Gaussian) -> Self {
        Self { dim, multiplier }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(dim, Gaussian::zero())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn multiplier(&self) -> &Gaussian {
        &self.multiplier
    }

    pub fn is_zero(&self) -> bool {
        self.multiplier.is_zero()
    }

    pub fn volume(&self) -> SphereVolume {
        sphere_volume(self.dim)
    }

    /// The value with the sphere volume expanded: `(coefficient, π power)`.
    pub fn pi_form(&self) -> (Gaussian, u32) {
        let v = self.volume();
        (self.multiplier.scale(&v.coefficient()), v.pi_power)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.multiplier.to_complex64() * self.volume().to_f64()
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        Self::new(self.dim, &self.multiplier * s)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "residues of different dimension");
        Self::new(self.dim, &self.multiplier + &rhs.multiplier)
    }

    /// Serializable form with the sphere volume kept as a unit.
    pub fn exact(&self) -> ExactScalar {
        ExactScalar {
            value: self.multiplier.clone(),
            volume_power: 1,
            pi_power: 0,
        }
    }

    /// Serializable form with the sphere volume expanded into powers of π.
    pub fn exact_in_pi(&self) -> ExactScalar {
        let (value, pi_power) = self.pi_form();
        ExactScalar {
            value,
            volume_power: 0,
            pi_power,
        }
    }
}

impl fmt::Display for ResidueValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sphere = format!("V(S^{})", self.dim - 1);
        if self.multiplier == Gaussian::from_int(1) {
            write!(f, "{sphere}")
        } else if self.multiplier.re.is_zero() || self.multiplier.im.is_zero() {
            write!(f, "{}·{sphere}", self.multiplier)
        } else {
            write!(f, "({})·{sphere}", self.multiplier)
        }
    }
}

/// `value · V^{volume_power} · π^{pi_power}`, serialized as
/// `{"re": [num, den], "im": [num, den], "Vpow": k, "piPow": p}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactScalar {
    pub value: Gaussian,
    pub volume_power: u32,
    pub pi_power: u32,
}

/// Numerator and denominator as JSON integers when they fit, strings otherwise.
fn rational_pair(r: &Rational) -> serde_pair::Pair {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => serde_pair::Pair::Small(n, d),
        _ => serde_pair::Pair::Big(r.numer().to_string(), r.denom().to_string()),
    }
}

mod serde_pair {
    use serde::Serialize;

    #[derive(Serialize)]
    #[serde(untagged)]
    pub enum Pair {
        Small(i64, i64),
        Big(String, String),
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExactScalar", 4)?;
        s.serialize_field("re", &rational_pair(&self.value.re))?;
        s.serialize_field("im", &rational_pair(&self.value.im))?;
        s.serialize_field("Vpow", &self.volume_power)?;
        s.serialize_field("piPow", &self.pi_power)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn pi_form_of_four_dimensional_value() {
        let r = ResidueValue::new(4, Gaussian::new(rat_int(0), rat_int(-4)));
        let (c, p) = r.pi_form();
        assert_eq!(c, Gaussian::new(rat_int(0), rat_int(-8)));
        assert_eq!(p, 2);
        assert!((r.to_complex().im + 8.0 * std::f64::consts::PI.powi(2)).abs() < 1e-12);
        assert_eq!(r.to_string(), "-4i·V(S^3)");
    }

    #[test]
    fn display_of_mixed_multiplier() {
        let r = ResidueValue::new(3, Gaussian::new(rat(1, 2), rat_int(-1)));
        assert_eq!(r.to_string(), "(1/2-i)·V(S^2)");
        assert_eq!(ResidueValue::zero(3).to_string(), "0");
    }
}
