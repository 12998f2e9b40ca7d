use super::disc::{tau0_dn, tau0_up, tau1, DiscError, QuantumDiscElement};

/// `|τ_0^↑(x) - τ_0^↓(x) + τ_1(x)|` at truncation `N`.
pub fn suq2_residue_cancellation(x: &QuantumDiscElement, n: usize) -> Result<f64, DiscError> {
    Ok((tau0_up(x, n)? - tau0_dn(x, n)? + tau1(x)).abs())
}

/// `(τ_1 ⊗ (τ_0^↑ - τ_0^↓) + (τ_0^↓ - τ_0^↑) ⊗ τ_1)(x ⊗ y)`.
pub fn paired_combination(x: &QuantumDiscElement, y: &QuantumDiscElement, n: usize) -> Result<f64, DiscError> {
    let delta = |a: &QuantumDiscElement| -> Result<f64, DiscError> { Ok(tau0_up(a, n)? - tau0_dn(a, n)?) };
    Ok(tau1(x) * delta(y)? - delta(x)? * tau1(y))
}

/// Spectrum of the isospectral Dirac operator on `SU_q(2)`: eigenvalues
/// `2j + 3/2` with multiplicity `(2j+1)(2j+2)` and `-(2j + 1/2)` with
/// multiplicity `(2j+1)(2j)`, for `j = 0, 1/2, 1, ...`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Suq2DiracSpec;

impl Suq2DiracSpec {
    pub fn up(&self, two_j: u32) -> (f64, f64) {
        let j2 = two_j as f64;
        (j2 + 1.5, (j2 + 1.0) * (j2 + 2.0))
    }

    pub fn down(&self, two_j: u32) -> (f64, f64) {
        let j2 = two_j as f64;
        (-(j2 + 0.5), (j2 + 1.0) * j2)
    }

    /// `Σ_{j ≤ j_max} mult · |λ|^{-s}` over both branches.
    pub fn zeta_partial_sum(&self, s: f64, j_max: f64) -> f64 {
        let top = (2.0 * j_max).floor() as u32;
        (0..=top)
            .map(|two_j| {
                let (lu, mu) = self.up(two_j);
                let (ld, md) = self.down(two_j);
                mu * lu.abs().powf(-s) + md * ld.abs().powf(-s)
            })
            .sum()
    }

    /// Share of the partial sum contributed by `j ∈ (j_max/2, j_max]`.
    /// Small when `ζ(s)` converges, bounded away from zero when it diverges.
    pub fn zeta_tail_fraction(&self, s: f64, j_max: f64) -> f64 {
        let full = self.zeta_partial_sum(s, j_max);
        let half = self.zeta_partial_sum(s, j_max / 2.0);
        (full - half) / full
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_cancels_exactly() {
        let one = QuantumDiscElement::one(0.5).unwrap();
        assert_eq!(suq2_residue_cancellation(&one, 10).unwrap(), 0.0);
    }

    #[test]
    fn spectrum_values() {
        let d = Suq2DiracSpec;
        assert_eq!(d.up(0), (1.5, 2.0));
        assert_eq!(d.down(0), (-0.5, 0.0));
        assert_eq!(d.down(1), (-1.5, 2.0));
        assert_eq!(d.up(1), (2.5, 6.0));
    }

    #[test]
    fn summability_threshold() {
        let d = Suq2DiracSpec;
        assert!(d.zeta_tail_fraction(3.5, 200.0) < 0.05);
        assert!(d.zeta_tail_fraction(2.5, 200.0) > 0.2);
        assert!(d.zeta_partial_sum(3.5, 200.0).is_finite());
    }
}
