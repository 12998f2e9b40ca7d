use spectral_torsion::clifford::{chirality, trace_exponent, Multivector};
use spectral_torsion::random::{rational_vector, rng_from_seed};
use spectral_torsion::scalar::{rat, rat_int, Gaussian, Rational};
use spectral_torsion::symcalc::{compose_symbols, negative_power, parametrix, sqrt_symbol, HomogeneousSymbol, Jet, XiMonomial};
use spectral_torsion::torsion::*;
use spectral_torsion::ResidueValue;

fn imaginary(n: usize, im: Rational) -> ResidueValue {
    ResidueValue::new(n, Gaussian::new(rat_int(0), im))
}

/// `(i/8) T_abc (γ^j γ^a γ^b γ^c + γ^a γ^b γ^c γ^j) ξ_j`, the first-order part of `D_T²`.
fn first_order_of_square(t: &TorsionTensor, scale: Gaussian) -> HomogeneousSymbol<Gaussian> {
    let n = t.dim();
    let th = theta(t);
    let mut h = HomogeneousSymbol::zero(n, 1);
    for j in 0..n {
        let g = Multivector::gamma(n, j);
        let c = g.mul(&th).add(&th.mul(&g)).scale(&scale);
        h.add_term(XiMonomial::variable(n, j), Jet::constant(c));
    }
    h
}

#[test]
fn dirac_square_first_order_symbol() {
    let t = TorsionTensor::random(&mut rng_from_seed(4), 4);
    let d = dirac_symbol(&t);
    let d2 = compose_symbols(&d, &d, 2).unwrap();
    let expected = first_order_of_square(&t, Gaussian::new(rat_int(0), rat(1, 8)));
    assert!(d2.part(1).equivalent(&expected));
    assert!(d2.part(2).equivalent(&HomogeneousSymbol::radial(4, 2, Multivector::one(4))));
}

#[test]
fn parametrix_second_symbol_for_torsion_input() {
    // with a₁ = -(i/8)(...)ξ_j the parametrix gives b₃ = +(i/8)|ξ|^{-4}(...)ξ_j
    let n = 4;
    let t = TorsionTensor::random(&mut rng_from_seed(8), n);
    let a1 = first_order_of_square(&t, Gaussian::new(rat_int(0), rat(-1, 8)));
    let a = spectral_torsion::symcalc::SymbolSum::new(n, 2, usize::MAX)
        .with_part(HomogeneousSymbol::radial(n, 2, Multivector::one(n)))
        .with_part(a1);
    let b = parametrix(&a, 2).unwrap();
    let expected = first_order_of_square(&t, Gaussian::new(rat_int(0), rat(1, 8))).times_radial(-4);
    assert!(b.part(-3).equivalent(&expected));
    for m in 1..4u32 {
        let c = negative_power(&a, m, 2).unwrap();
        let want = expected.scale(&Gaussian::from_int(m as i64)).times_radial(-2 * (m as i32 - 1));
        assert!(c.part(-2 * m as i32 - 1).equivalent(&want), "m = {m}");
    }
}

#[test]
fn odd_square_root_second_symbol() {
    let n = 3;
    let t = TorsionTensor::unit(n, 0, 1, 2).unwrap();
    let d = dirac_symbol(&t);
    let d2 = compose_symbols(&d, &d, 2).unwrap();
    let s = sqrt_symbol(&d2, 2).unwrap();
    let half_a1 = first_order_of_square(&t, Gaussian::new(rat_int(0), rat(1, 16))).times_radial(-1);
    assert!(s.part(0).equivalent(&half_a1));
    let back = compose_symbols(&s, &s, 2).unwrap();
    assert!(back.equivalent(&d2.truncated(2)));
}

#[test]
fn frame_values_by_dimension() {
    // pipeline value for u=e¹, v=e², w=e³, T_123 = 1 is -(3/2)·2^m i
    for n in 3..=6 {
        let t = TorsionTensor::unit(n, 0, 1, 2).unwrap();
        let (u, v, w) = (frame_form(n, 0), frame_form(n, 1), frame_form(n, 2));
        let got = torsion_functional(&u, &v, &w, &t, n).unwrap();
        let m = trace_exponent(n);
        let want = imaginary(n, rat(-3 * (1 << m), 2));
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn pipeline_is_uniform_multiple_of_contraction() {
    let mut rng = rng_from_seed(21);
    for n in [3, 4, 5] {
        for _ in 0..3 {
            let t = TorsionTensor::random(&mut rng, n);
            let u = rational_vector(&mut rng, n);
            let v = rational_vector(&mut rng, n);
            let w = rational_vector(&mut rng, n);
            let got = torsion_functional(&u, &v, &w, &t, n).unwrap();
            let closed = closed_form_torsion(&u, &v, &w, &t, n).unwrap();
            assert_eq!(got, closed.scale(&Gaussian::from_ratio(3, 2)));
        }
    }
}

#[test]
fn closed_form_anchors() {
    let n = 4;
    let t = TorsionTensor::unit(n, 0, 1, 2).unwrap();
    let (u, v, w) = (frame_form(n, 0), frame_form(n, 1), frame_form(n, 2));
    let c = closed_form_torsion(&u, &v, &w, &t, n).unwrap();
    assert_eq!(c, imaginary(4, rat_int(-4)));
    assert_eq!(c.pi_form(), (Gaussian::new(rat_int(0), rat_int(-8)), 2));
    let t3 = TorsionTensor::unit(3, 0, 1, 2).unwrap();
    let c3 = closed_form_torsion(&frame_form(3, 0), &frame_form(3, 1), &frame_form(3, 2), &t3, 3).unwrap();
    assert_eq!(c3.pi_form(), (Gaussian::new(rat_int(0), rat_int(-16)), 1));
    // u = v = e¹ contracts to zero
    assert!(closed_form_torsion(&frame_form(3, 0), &frame_form(3, 0), &frame_form(3, 2), &t3, 3)
        .unwrap()
        .is_zero());
}

#[test]
fn torsion_free_vanishes() {
    for n in 2..=5 {
        let t = TorsionTensor::zero(n);
        for a in 0..n {
            for b in 0..n {
                let r = torsion_functional(&frame_form(n, a), &frame_form(n, b), &frame_form(n, (a + b) % n), &t, n);
                assert!(r.unwrap().is_zero());
            }
        }
    }
}

#[test]
fn contorsion_examples() {
    let t = TorsionTensor::unit(3, 0, 1, 2).unwrap();
    let tau = contorsion_from_torsion(&t);
    assert_eq!(*tau.get(0, 1, 2), rat(1, 2));
    assert_eq!(torsion_from_contorsion(&tau).to_torsion().unwrap(), t);
    assert!(contorsion_from_torsion(&TorsionTensor::zero(3)).get(0, 1, 2) == &rat_int(0));
    assert!(torsion_from_contorsion(&ContorsionTensor::zero(4)).is_zero());
}

#[test]
fn torsion_from_random_contorsion_is_antisymmetric_in_first_pair() {
    let mut rng = rng_from_seed(2);
    let tau = ContorsionTensor::random(&mut rng, 4);
    let t = torsion_from_contorsion(&tau);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                assert_eq!(*t.get(i, j, k), -t.get(j, i, k).clone());
            }
        }
    }
}

#[test]
fn levi_civita_examples() {
    let mut c = FrameConnection::zero(3);
    c.set(0, 1, 2, rat_int(1));
    let w = levi_civita_from_structure(&c);
    assert_eq!(*w.get(0, 1, 2), rat(1, 2));
    assert!(levi_civita_from_structure(&FrameConnection::zero(3)).is_zero());
}

#[test]
fn chirality_functional_examples() {
    let n = 4;
    let t = TorsionTensor::unit(n, 0, 1, 2).unwrap();
    assert!(chirality_functional(&frame_form(n, 3), &TorsionTensor::zero(n), n).unwrap().is_zero());
    assert!(chirality_functional(&frame_form(n, 0), &t, n).unwrap().is_zero());
    let got = chirality_functional(&frame_form(n, 3), &t, n).unwrap();
    assert!(!got.is_zero());
    // independent: (i/4) Tr(γ γ^4 Θ) with Θ = 6 γ^1γ^2γ^3
    let th = theta(&t);
    let direct = chirality(n).unwrap().mul(&Multivector::gamma(n, 3)).mul(&th).trace();
    let expected = &direct * &Gaussian::new(rat_int(0), rat(1, 4));
    assert_eq!(*got.multiplier(), expected);
}

#[test]
fn spectral_closedness_for_simple_operators() {
    for n in [3, 4] {
        assert!(spectral_closedness_check(&Multivector::one(n), n).unwrap().is_zero());
        let p = Multivector::gamma(n, 0).mul(&Multivector::gamma(n, 1));
        assert!(spectral_closedness_check(&p, n).unwrap().is_zero());
    }
}
