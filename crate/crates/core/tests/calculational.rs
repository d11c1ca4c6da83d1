use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use proptest::prelude::*;
use sglab_core::quantum::{
    dagger, nm, np, probability, rotation_operator, sn, sx, sy, sz, time_ev, xm, xp, ym, yp, zm,
    zp, Bra, Dagger, Ket, Operator, Value, C,
};

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// `exp(−i t H)` for a 2×2 Hermitian `H = h0 I + h·σ`, in closed form.
fn exact_propagator(h: &Operator, t: f64) -> Operator {
    let h0 = (h.get(0, 0).re + h.get(1, 1).re) / 2.0;
    let hz = (h.get(0, 0).re - h.get(1, 1).re) / 2.0;
    let hx = h.get(0, 1).re;
    let hy = -h.get(0, 1).im;
    let len = (hx * hx + hy * hy + hz * hz).sqrt();
    let phase = C::from_polar(1.0, -h0 * t);
    if len == 0.0 {
        return phase * Operator::identity();
    }
    let (s, co) = (len * t).sin_cos();
    let n = Operator::new([[c(hz, 0.0), c(hx, -hy)], [c(hx, hy), c(-hz, 0.0)]]);
    phase * (c(co, 0.0) * Operator::identity() + c(0.0, -s / len) * n)
}

fn evolve(h: &Operator, psi: Ket, total: f64, steps: usize) -> Ket {
    let dt = total / steps as f64;
    (0..steps).fold(psi, |k, _| time_ev(dt, h, &k).unwrap())
}

#[test]
fn dirac_product_examples() {
    assert_eq!(dagger(&zp()) * zp(), c(1.0, 0.0));
    assert!(((dagger(&xp()) * zp()) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    // ⟨y−| = (1/√2, +i/√2), |x+⟩ = (1/√2, 1/√2)
    assert!(((dagger(&ym()) * xp()) - c(0.5, 0.5)).norm() < 1e-15);
    let left = (xp() * dagger(&xp())) * yp();
    let right = xp() * (dagger(&xp()) * yp());
    assert!(left.max_abs_diff(&right) < 1e-12);
    // ⟨z−|σy|y+⟩ = i·(1/√2)
    let bracket = dagger(&zm()) * sy() * yp();
    assert!((bracket - c(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);
}

#[test]
fn dagger_examples() {
    assert_eq!(c(3.0, 4.0).dagger(), c(3.0, -4.0));
    assert_eq!(yp().dagger().dagger(), yp());
    let b = yp().dagger();
    assert_eq!(b.amps(), [c(FRAC_1_SQRT_2, 0.0), c(0.0, -FRAC_1_SQRT_2)]);
}

#[test]
fn standard_state_examples() {
    assert!(np(FRAC_PI_2, 0.0).max_abs_diff(&xp()) < 1e-15);
    assert!(nm(FRAC_PI_2, FRAC_PI_2).max_abs_diff(&ym()) < 1e-15);
    assert_eq!(sn(0.0, 0.0), sz());
    assert_eq!(sx() * zp(), zm());
    assert!(nm(FRAC_PI_2, 0.0).max_abs_diff(&xm()) < 1e-15);
}

#[test]
fn rotation_about_y_carries_z_up_to_x_up() {
    let k = rotation_operator(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2) * zp();
    assert!((probability(&xp(), &k).unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn quarter_period_under_sigma_x_flips_the_spin() {
    let n = 100;
    let out = evolve(&sx(), zp(), FRAC_PI_2, n);
    let exact = exact_propagator(&sx(), FRAC_PI_2) * zp();
    // exp(−i π/2 σx)|z+⟩ = −i|z−⟩
    assert!(exact.max_abs_diff(&(c(0.0, -1.0) * zm())) < 1e-15);
    assert!((probability(&zm(), &out).unwrap() - 1.0).abs() < 5e-5);
}

#[test]
fn cayley_step_is_second_order() {
    let h = c(0.3, 0.0) * Operator::identity() + sn(1.0, 2.0) + c(0.5, 0.0) * sz();
    let psi = np(0.7, -0.4);
    let total = 1.0;
    let exact = exact_propagator(&h, total) * psi;
    let coarse = evolve(&h, psi, total, 100).max_abs_diff(&exact);
    let fine = evolve(&h, psi, total, 200).max_abs_diff(&exact);
    let ratio = coarse / fine;
    assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
}

fn unit() -> impl Strategy<Value = f64> {
    -1.0..=1.0f64
}

fn scalar() -> impl Strategy<Value = C> {
    (unit(), unit()).prop_map(|(re, im)| c(re, im))
}

fn ket() -> impl Strategy<Value = Ket> {
    (scalar(), scalar()).prop_map(|(a, b)| Ket::new(a, b))
}

fn bra() -> impl Strategy<Value = Bra> {
    (scalar(), scalar()).prop_map(|(a, b)| Bra::new(a, b))
}

fn operator() -> impl Strategy<Value = Operator> {
    (scalar(), scalar(), scalar(), scalar())
        .prop_map(|(a, b, d, e)| Operator::new([[a, b], [d, e]]))
}

fn value() -> impl Strategy<Value = Value> {
    prop_oneof![
        scalar().prop_map(Value::Scalar),
        ket().prop_map(Value::Ket),
        bra().prop_map(Value::Bra),
        operator().prop_map(Value::Operator),
    ]
}

fn angle() -> impl Strategy<Value = f64> {
    -2.0 * PI..=2.0 * PI
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn dirac_product_is_associative(a in value(), b in value(), d in value()) {
        let left = a.dirac(b).and_then(|ab| ab.dirac(d));
        let right = b.dirac(d).and_then(|bd| a.dirac(bd));
        if let (Ok(l), Ok(r)) = (left, right) {
            prop_assert!(l.max_abs_diff(&r).unwrap() <= 1e-10);
        }
    }

    #[test]
    fn dagger_reverses_products(a in value(), b in value()) {
        prop_assert_eq!(a.dagger().dagger(), a);
        if let Ok(ab) = a.dirac(b) {
            let reversed = b.dagger().dirac(a.dagger()).unwrap();
            prop_assert!(ab.dagger().max_abs_diff(&reversed).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn sn_eigenstates(theta in angle(), phi in angle()) {
        let s = sn(theta, phi);
        prop_assert!((s * np(theta, phi)).max_abs_diff(&np(theta, phi)) <= 1e-10);
        prop_assert!((s * nm(theta, phi)).max_abs_diff(&-nm(theta, phi)) <= 1e-10);
        prop_assert!((s * s).max_abs_diff(&Operator::identity()) <= 1e-10);
        prop_assert!(s.trace().norm() <= 1e-10);
        prop_assert!(s.is_hermitian(1e-12));
        // eigenvalues of a traceless 2×2: ±√(−det)
        prop_assert!((s.determinant() + c(1.0, 0.0)).norm() <= 1e-10);
    }

    #[test]
    fn probability_of_n_up_from_z_up(theta in angle(), phi in angle()) {
        let p = probability(&np(theta, phi), &zp()).unwrap();
        prop_assert!((p - (theta / 2.0).cos().powi(2)).abs() <= 1e-10);
    }

    #[test]
    fn rotations_form_a_one_parameter_group(
        theta in angle(), phi in angle(), w1 in angle(), w2 in angle()
    ) {
        let product = rotation_operator(theta, phi, w1) * rotation_operator(theta, phi, w2);
        prop_assert!(product.max_abs_diff(&rotation_operator(theta, phi, w1 + w2)) <= 1e-10);
        let u = rotation_operator(theta, phi, w1);
        prop_assert!((u.dagger() * u).max_abs_diff(&Operator::identity()) <= 1e-12);
    }

    #[test]
    fn time_ev_preserves_norm(
        theta in angle(), phi in angle(), shift in unit(), dt in 1e-3..2.0f64, psi in ket()
    ) {
        let h = sn(theta, phi) + c(shift, 0.0) * Operator::identity();
        let out = time_ev(dt, &h, &psi).unwrap();
        prop_assert!((out.norm() - psi.norm()).abs() <= 1e-12);
    }
}
