//! Frozen-value regressions through the public API. The literals were
//! produced by independent routes (digamma/polygamma closed forms, the
//! shift recurrence telescoped from distant arguments, and cross-checked
//! series) before the jet engine existed, and must never drift.

use proptest::prelude::*;
use rug::Float;
use stieltjes_core::{gamma_by_method, BigReal, Method, Zeta};

fn assert_near(got: &BigReal, lit: &str, tol: f64) {
    let want = Float::with_val(got.prec(), Float::parse(lit).unwrap());
    let diff = Float::with_val(got.prec(), got.value() - &want).abs();
    assert!(diff.to_f64() <= tol, "got {got}, want {lit}, diff {:.3e}", diff.to_f64());
}

#[test]
fn stieltjes_constants_match_frozen_oracles() {
    let z = Zeta::new(40);
    let cases: [(usize, f64, &str); 8] = [
        (1, 1.0, "-0.0728158454836767248605863758749013191377"),
        (2, 1.0, "-0.0096903631928723184845303860352125293590"),
        (3, 1.0, "0.0020538344203033458661600465427533842857"),
        (1, 0.75, "-0.3912989024045497742398741921892963714503"),
        (3, 0.75, "-0.0276661223223528500842944829407048242418"),
        (1, 1.5, "0.0328346803149491011257770737382887325597"),
        (2, 1.5, "0.0079584473838878620875060096704507107214"),
        (1, 3.0, "-0.4193894357636493795692024366039896031754"),
    ];
    for (k, a, lit) in cases {
        assert_near(&z.stieltjes(k, &z.real(a)).unwrap(), lit, 1e-36);
    }
    let half = z.real(0.5);
    assert_near(&z.stieltjes(1, &half).unwrap(), "-1.3534596808049415177086871691780644035912", 1e-36);
}

#[test]
fn gamma_zero_is_negated_digamma() {
    let z = Zeta::new(35);
    // psi(1) = -gamma, psi(1/2) = -gamma - 2 ln 2, psi(2) = 1 - gamma
    let g = stieltjes_core::specfun::euler_gamma(z.prec());
    let two_ln2 = BigReal::ln2(z.prec()).mul_i64(2);
    let cases = [
        (z.real(1.0), g.clone()),
        (z.real(0.5), g.add(&two_ln2)),
        (z.real(2.0), g.sub(&BigReal::one(z.prec()))),
    ];
    for (a, want) in cases {
        let got = z.stieltjes(0, &a).unwrap();
        assert!(got.sub(&want).abs_f().to_f64() < 1e-33, "a = {a}");
    }
}

#[test]
fn every_method_hits_the_gamma6_oracle() {
    let z = Zeta::new(40);
    let a = z.real(3.0);
    for m in [
        Method::EulerMaclaurin,
        Method::TaylorShift,
        Method::CascadeWhole,
        Method::CascadeHalf,
        Method::CascadeHalfAlt,
        Method::TailZeta,
    ] {
        let got = gamma_by_method(&z, m, 6, &a).unwrap();
        assert_near(&got.value, "-0.0556914787616039954458459722397804569392", 1e-33);
        assert!(got.terms > 0, "{m} reported no work");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    // gamma_k(a+1) = gamma_k(a) - ln^k(a)/a at random rational a
    #[test]
    fn shift_recurrence_holds(num in 3i64..40, k in 0usize..3) {
        let z = Zeta::new(25);
        let a = z.real_from_rational(num, 10);
        let a1 = z.real_from_rational(num + 10, 10);
        let lhs = z.stieltjes(k, &a1).unwrap();
        let rhs = z.stieltjes(k, &a).unwrap().sub(&a.ln().powi(k as i32).div(&a));
        prop_assert!(lhs.sub(&rhs).abs_f().to_f64() < 1e-20);
    }
}
