//! Identity-driven validation suites. Every representation and closed form
//! the library exposes is an addressable check that measures its defect
//! against an independent route at the requested working precision; a suite
//! passes only if every check does.

use crate::error::{Error, Result};
use crate::hurwitz::{zeta_deriv_at_zero, Zeta};
use crate::lerch;
use crate::mp::quad::{tanh_sinh, QuadOpts};
use crate::mp::real::{eps_for_digits, BigReal};
use crate::ser;
use crate::specfun;
use crate::stieltjes::{self, Method};
use rug::Float;

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn close(id: impl Into<String>, got: &BigReal, want: &BigReal, digits_req: i64) -> Check {
        let diff = got.sub(want).abs_f();
        let tol = tol_digits(digits_req);
        Check {
            id: id.into(),
            pass: diff <= tol,
            detail: format!("|diff| = {:.3e} (tol {:.1e})", diff, tol),
        }
    }

    fn property(id: impl Into<String>, pass: bool, detail: String) -> Check {
        Check { id: id.into(), pass, detail }
    }
}

fn tol_digits(d: i64) -> Float {
    Float::with_val(64, -d).exp10()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Shift,
    Cascade,
    ExpSeries,
    Ser,
    Lerch,
    Bounds,
    Moments,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Shift,
        Suite::Cascade,
        Suite::ExpSeries,
        Suite::Ser,
        Suite::Lerch,
        Suite::Bounds,
        Suite::Moments,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Shift => "shift",
            Suite::Cascade => "cascade",
            Suite::ExpSeries => "exp-series",
            Suite::Ser => "ser",
            Suite::Lerch => "lerch",
            Suite::Bounds => "bounds",
            Suite::Moments => "moments",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        match s {
            "all" => Some(Suite::All),
            "shift" | "addition" => Some(Suite::Shift),
            "cascade" => Some(Suite::Cascade),
            "exp-series" => Some(Suite::ExpSeries),
            "ser" => Some(Suite::Ser),
            "lerch" => Some(Suite::Lerch),
            "bounds" => Some(Suite::Bounds),
            "moments" => Some(Suite::Moments),
            _ => None,
        }
    }
}

pub fn run_suite(suite: Suite, digits: usize) -> Result<Vec<Check>> {
    let mut checks = match suite {
        Suite::All => {
            let mut v = Vec::new();
            for s in Suite::ALL {
                v.extend(run_suite(s, digits)?);
            }
            v
        }
        Suite::Shift => shift_suite(digits)?,
        Suite::Cascade => cascade_suite(digits)?,
        Suite::ExpSeries => exp_series_suite(digits)?,
        Suite::Ser => ser_suite(digits)?,
        Suite::Lerch => lerch_suite(digits)?,
        Suite::Bounds => bounds_suite(digits)?,
        Suite::Moments => moments_suite(digits)?,
    };
    checks.sort_by(|x, y| x.id.cmp(&y.id));
    Ok(checks)
}

/// gamma_k(a+1) = gamma_k(a) - ln^k(a)/a, plus the addition series both as
/// a standalone shift and as the method route.
fn shift_suite(digits: usize) -> Result<Vec<Check>> {
    let z = Zeta::new(digits);
    let d = digits as i64 - 6;
    let mut out = Vec::new();
    let a = z.real_from_rational(3, 4);
    let a1 = z.real_from_rational(7, 4);
    let lna = a.ln();
    for k in 1..=2usize {
        let lhs = z.stieltjes(k, &a1)?;
        let rhs = z.stieltjes(k, &a)?.sub(&lna.powi(k as i32).div(&a));
        out.push(Check::close(format!("shift-recurrence-k{k}"), &lhs, &rhs, d));
    }
    let b = z.real(0.25);
    let got = stieltjes::gamma_wilton_shift(&z, 1, &z.real(2.0), &b)?;
    let want = z.stieltjes(1, &z.real(2.25))?;
    out.push(Check::close("shift-series-k1", &got, &want, d));
    let route = stieltjes::gamma_by_method(&z, Method::TaylorShift, 2, &z.real(1.5))?;
    out.push(Check::close("shift-route-k2", &route.value, &z.stieltjes(2, &z.real(1.5))?, d));
    Ok(out)
}

/// The three cascade series, the partitioned tail form, and the large-a
/// asymptotic series against the Euler-Maclaurin reference.
fn cascade_suite(digits: usize) -> Result<Vec<Check>> {
    let z = Zeta::new(digits);
    let d = digits as i64 - 6;
    let mut out = Vec::new();
    let mid = z.real(1.5);
    for (m, id) in [
        (Method::CascadeWhole, "cascade-whole-k3"),
        (Method::CascadeHalf, "cascade-half-k3"),
        (Method::CascadeHalfAlt, "cascade-half-alt-k3"),
    ] {
        let got = stieltjes::gamma_by_method(&z, m, 3, &mid)?;
        out.push(Check::close(id, &got.value, &z.stieltjes(3, &mid)?, d));
    }
    let w = stieltjes::gamma_by_method(&z, Method::CascadeWhole, 0, &z.real(3.0))?;
    let psi = specfun::digamma(&z.real(3.0))?.neg();
    out.push(Check::close("cascade-whole-k0-digamma", &w.value, &psi, d));
    let t = stieltjes::gamma_by_method(&z, Method::TailZeta, 2, &z.real(0.75))?;
    out.push(Check::close("cascade-tail-zeta-k2", &t.value, &z.stieltjes(2, &z.real(0.75))?, d));
    let big = z.real(30.0);
    let asym = stieltjes::gamma_by_method(&z, Method::Asymptotic, 2, &big)?;
    let d_asym = d.min((2.0 * std::f64::consts::PI * 30.0 / std::f64::consts::LN_10) as i64 - 4);
    out.push(Check::close("cascade-asymptotic-k2", &asym.value, &z.stieltjes(2, &big)?, d_asym));
    Ok(out)
}

const CORRECTION: &str = "0.0230957089661210338143102479064952916219321272";

fn exp_series_suite(digits: usize) -> Result<Vec<Check>> {
    let z = Zeta::new(digits);
    let d = digits as i64 - 6;
    let mut out = Vec::new();
    let e = stieltjes::exp_series_euler(digits)?;
    let half = specfun::euler_gamma(z.prec()).div_u64(2);
    out.push(Check::close("exp-series-euler-half", &e.gamma_half, &half, d));
    let lit = BigReal::from_float(Float::with_val(z.prec(), Float::parse(CORRECTION).unwrap()));
    out.push(Check::close("exp-series-correction", &e.correction, &lit, d.min(44)));
    out.push(Check::property(
        "exp-series-term-counts",
        e.erfc_terms <= 12 && e.ei_terms <= 12,
        format!("erfc terms {} / ei terms {} (cap 12)", e.erfc_terms, e.ei_terms),
    ));
    let g1 = stieltjes::gamma1_exp_series(digits)?;
    out.push(Check::close("exp-series-gamma1", &g1.value, &z.stieltjes(1, &z.real(1.0))?, d));
    Ok(out)
}

fn ser_suite(digits: usize) -> Result<Vec<Check>> {
    let z = Zeta::new(digits);
    let d = digits as i64 - 6;
    let prec = z.prec();
    let mut out = Vec::new();
    let s0 = ser::ser_gamma(0, 24, digits)?;
    out.push(Check::close("ser-euler-gamma", &s0.value, &specfun::euler_gamma(prec), d));
    let s1 = ser::ser_gamma(1, 24, digits)?;
    out.push(Check::close("ser-gamma1", &s1.value, &z.stieltjes(1, &z.real(1.0))?, d));
    for n in [1usize, 5, 10] {
        let got = ser::knessl_p_integral(n as u64, digits)?;
        let want = BigReal::from_rational(&ser::gregory(n), prec);
        out.push(Check::close(format!("ser-knessl-n{n}"), &got, &want, d));
    }
    let n = 10_000u64;
    let int = ser::knessl_p_integral(n, 20)?;
    let asy = ser::knessl_p_asymptotic(n, int.prec());
    let lnn = (n as f64).ln();
    let rel = int.sub(&asy).abs_f().to_f64() / int.abs_f().to_f64();
    let next = 25.0 / (lnn * lnn * lnn);
    out.push(Check::property(
        "ser-knessl-asymptotic",
        rel <= next,
        format!("relative gap {rel:.3e} vs next-order allowance {next:.3e}"),
    ));
    let eu = ser::euler_gamma_integral(digits)?;
    out.push(Check::close("ser-euler-integral", &eu, &specfun::euler_gamma(prec), d));
    Ok(out)
}

fn lerch_suite(digits: usize) -> Result<Vec<Check>> {
    let z = Zeta::new(digits);
    let d = digits as i64 - 8;
    let prec = z.prec();
    let mut out = Vec::new();
    let (lhs, rhs) = lerch::digamma_reflection(&z, 1, 2)?;
    let closed = specfun::euler_gamma(prec)
        .sub(&BigReal::pi(prec).ln())
        .add(&BigReal::ln2(prec).mul_i64(2));
    out.push(Check::close("lerch-reflection-digamma-half-closed", &lhs, &closed, d));
    out.push(Check::close("lerch-reflection-digamma-half", &lhs, &rhs, d));
    let (l3, r3) = lerch::digamma_reflection(&z, 1, 3)?;
    out.push(Check::close("lerch-reflection-digamma-third", &l3, &r3, d));
    let (g3l, g3r) = lerch::gamma1_reflection(&z, 1, 3)?;
    out.push(Check::close("lerch-reflection-gamma1-third", &g3l, &g3r, d));
    let (g4l, g4r) = lerch::gamma1_reflection(&z, 1, 4)?;
    out.push(Check::close("lerch-reflection-gamma1-quarter", &g4l, &g4r, d));
    let pi = BigReal::pi(prec);
    let l4 = lerch::dirichlet_l_jet(&z, &[1, 0, -1, 0], 0)?;
    out.push(Check::close("lerch-dirichlet-mod4", l4.coeff(0), &pi.div_u64(4), d));
    let l3j = lerch::dirichlet_l_jet(&z, &[1, -1, 0], 0)?;
    let want = pi.div(&BigReal::from_u64(27, prec).sqrt());
    out.push(Check::close("lerch-dirichlet-mod3", l3j.coeff(0), &want, d));
    let (shifted, _) = lerch::lerch_shift(&z, 1, 3, &z.real(1.0), &z.real(0.25), 2)?;
    let direct = lerch::lerch_jet(&z, 1, 3, &z.real(1.25), 2)?;
    let mut worst = Float::with_val(32, 0);
    for n in 0..=2usize {
        worst = worst
            .max(&shifted.re.coeff(n).sub(direct.re.coeff(n)).abs_f())
            .max(&shifted.im.coeff(n).sub(direct.im.coeff(n)).abs_f());
    }
    out.push(Check::property(
        "lerch-klusch-shift",
        worst <= tol_digits(d),
        format!("worst coefficient |diff| = {:.3e} (tol {:.1e})", worst, tol_digits(d)),
    ));
    Ok(out)
}

fn bounds_suite(digits: usize) -> Result<Vec<Check>> {
    let rows = stieltjes::bounds_report(digits, 30)?;
    let mut ok_f = true;
    let mut ok_z = true;
    let mut margin_f = f64::INFINITY;
    let mut margin_z = f64::INFINITY;
    for r in &rows {
        ok_f &= r.ok_factorial;
        ok_z &= r.ok_zw;
        let c = r.c_abs.abs_f().to_f64();
        if c > 0.0 {
            margin_f = margin_f.min(r.bound_factorial.abs_f().to_f64() / c);
            margin_z = margin_z.min(r.bound_zw.abs_f().to_f64() / c);
        }
    }
    Ok(vec![
        Check::property(
            "bounds-factorial-grid",
            ok_f,
            format!("{} rows, min bound/|C_n| = {margin_f:.3}", rows.len()),
        ),
        Check::property(
            "bounds-zhang-williams-grid",
            ok_z,
            format!("{} rows, min bound/|C_n| = {margin_z:.3}", rows.len()),
        ),
    ])
}

/// sum_{k>=j} gamma_k(a) x^k/(k-j)! evaluated adaptively: the Laurent jet
/// order doubles until a run of terms falls below the target epsilon.
/// Returns the sum and the number of terms taken.
pub fn gamma_series(
    z: &Zeta,
    a: &BigReal,
    x: &BigReal,
    j: usize,
    digits: usize,
) -> Result<(BigReal, usize)> {
    let eps = eps_for_digits(digits + 5);
    let mut order = (digits / 2).max(16) + j;
    loop {
        let g = z.laurent(a, order)?;
        let mut sum = BigReal::zero(z.prec());
        let mut w = x.powi(j as i32);
        let mut run = 0usize;
        for k in j..=order {
            let term = g.gamma(k).mul(&w);
            sum = sum.add(&term);
            w = w.mul(x).div_u64((k + 1 - j) as u64);
            let small = term.abs_f() <= sum.abs_f().max(&Float::with_val(32, 1)) * eps.clone();
            run = if small { run + 1 } else { 0 };
            if run >= 3 {
                return Ok((sum, k + 1 - j));
            }
        }
        order *= 2;
        if order > 4096 {
            return Err(Error::no_conv("gamma_series", "jet order cap 4096 reached"));
        }
    }
}

/// Integral and resummation identities that tie the Laurent coefficients at
/// s = 1 to the zeta function on the line of symmetry and at s = 0:
/// int_1^2 gamma_k(a) da = 0, int_0^1 zeta^(j)(s, a) da = 0 for Re s < 1,
/// and sum_{k>=j} gamma_k(a) x^k/(k-j)! = (-1)^j [x^j zeta^(j)(1-x, a) + j!/x].
fn moments_suite(digits: usize) -> Result<Vec<Check>> {
    let z = Zeta::new(digits);
    let d = digits as i64 - 8;
    let prec = z.prec();
    let mut out = Vec::new();
    let one = BigReal::one(prec);
    let two = BigReal::from_u64(2, prec);
    let zero = BigReal::zero(prec);
    let eps = eps_for_digits(digits);
    let fact = |m: usize| crate::combinatorics::factorial(m as u32);

    for k in 0..=2usize {
        let opts = QuadOpts::new("moment-gamma", eps.clone());
        let q = tanh_sinh(&one, &two, &opts, |x, _, _| {
            let jet = z.jet(&one, x, 2)?;
            let mut v = jet.reg.coeff(k).mul(&BigReal::from_integer(&fact(k), prec));
            if k % 2 == 1 {
                v = v.neg();
            }
            Ok(v)
        })?;
        out.push(Check::close(format!("moment-gamma-k{k}"), &q.value, &zero, d));
    }

    for (s0, tag) in [(zero.clone(), "s0"), (one.div_u64(2), "shalf")] {
        for j in 0..=2usize {
            let opts = QuadOpts::new("moment-zeta", eps.clone());
            let q = tanh_sinh(&zero, &one, &opts, |x, _, _| {
                let jet = z.jet(&s0, x, 2)?;
                Ok(jet.reg.coeff(j).mul(&BigReal::from_integer(&fact(j), prec)))
            })?;
            out.push(Check::close(format!("moment-zeta-{tag}-j{j}"), &q.value, &zero, d));
        }
    }

    let a = z.real_from_rational(7, 10);
    let half = one.div_u64(2);
    for j in 0..=2usize {
        let (lhs, _) = gamma_series(&z, &a, &half, j, digits)?;
        let zj = z.jet(&half, &a, j)?;
        let mut rhs = zj
            .reg
            .coeff(j)
            .mul(&BigReal::from_integer(&fact(j), prec))
            .mul(&half.powi(j as i32))
            .add(&BigReal::from_integer(&fact(j), prec).mul_i64(2));
        if j % 2 == 1 {
            rhs = rhs.neg();
        }
        out.push(Check::close(format!("resum-half-j{j}"), &lhs, &rhs, d));
    }

    for (num, den, tag) in [(1i64, 2u64, "half"), (1, 1, "one")] {
        let a = z.real_from_rational(num, den);
        for j in 0..=2usize {
            let (lhs, _) = gamma_series(&z, &a, &one, j, digits)?;
            let zd = match j {
                0 => half.sub(&a),
                1 => specfun::lngamma(&a)?.sub(&BigReal::pi(prec).mul_i64(2).ln().div_u64(2)),
                _ => zeta_deriv_at_zero(j, &a, digits)?,
            };
            let mut rhs = zd.add(&BigReal::from_integer(&fact(j), prec));
            if j % 2 == 1 {
                rhs = rhs.neg();
            }
            out.push(Check::close(format!("laurent-sum-{tag}-j{j}"), &lhs, &rhs, d));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        assert_eq!(Suite::from_name("all"), Some(Suite::All));
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("addition"), Some(Suite::Shift));
        assert!(Suite::from_name("nope").is_none());
    }

    #[test]
    fn gamma_series_recovers_zeta_at_zero() {
        let z = Zeta::new(30);
        let a = z.real(1.0);
        let one = BigReal::one(z.prec());
        let (s, terms) = gamma_series(&z, &a, &one, 0, 25).unwrap();
        // sum_k gamma_k(1)/k! = zeta(0) + 1 = 1/2
        assert!(s.sub(&one.div_u64(2)).abs_f().to_f64() < 1e-23, "{s}");
        assert!(terms > 20 && terms < 120, "{terms}");
    }

    #[test]
    fn shift_and_cascade_suites_pass() {
        for c in run_suite(Suite::Shift, 30).unwrap() {
            assert!(c.pass, "{}: {}", c.id, c.detail);
        }
        for c in run_suite(Suite::Cascade, 30).unwrap() {
            assert!(c.pass, "{}: {}", c.id, c.detail);
        }
    }

    #[test]
    fn checks_are_sorted_and_distinct() {
        let v = run_suite(Suite::ExpSeries, 25).unwrap();
        let ids: Vec<_> = v.iter().map(|c| c.id.clone()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }
}
