use crate::combinatorics::{bernoulli, factorial};
use crate::error::{Error, Result};
use crate::mp::real::{eps_for_digits, BigReal};
use rug::float::Constant;

use rug::{Float, Integer};

fn digits_for_bits(bits: u32) -> usize {
    (f64::from(bits) / std::f64::consts::LOG2_10).ceil() as usize
}

/// Euler's constant from the digamma route (the MPFR builtin stays free as an
/// independent cross-check).
pub fn euler_gamma(prec: u32) -> BigReal {
    polygamma(0, &BigReal::one(prec)).expect("digamma(1) is regular").neg()
}

/// psi^(m)(x) for x > 0 by pushing the argument up with the shift recurrence
/// until the Bernoulli asymptotic series converges below target precision.
pub fn polygamma(m: u32, x: &BigReal) -> Result<BigReal> {
    if !x.is_finite() || x.cmp_i64(0) != std::cmp::Ordering::Greater {
        return Err(Error::domain("polygamma", "argument must be positive"));
    }
    let prec = x.prec();
    let digits = digits_for_bits(prec);
    let eps = eps_for_digits(digits + 2);
    let mut target = (0.37 * digits as f64 + 3.0).max(10.0);
    for _ in 0..4 {
        let shift = (target - x.to_f64()).max(0.0).ceil() as u64;
        let y = x + &BigReal::from_u64(shift, prec);
        if let Some(asym) = polygamma_asymptotic(m, &y, &eps) {
            // psi^(m)(x) = psi^(m)(y) - sum_{i<shift} (-1)^m m! / (x+i)^{m+1}
            let mfact = BigReal::from_integer(&factorial(m), prec);
            let mut acc = asym;
            for i in 0..shift {
                let base = x + &BigReal::from_u64(i, prec);
                let mut term = mfact.div(&base.powi(m as i32 + 1));
                if m % 2 == 1 {
                    term = term.neg();
                }
                acc = &acc - &term;
            }
            return Ok(acc);
        }
        target *= 2.0;
    }
    Err(Error::no_conv("polygamma", "asymptotic series failed to converge"))
}

/// The large-argument expansion; None if the terms bottom out above eps so
/// the caller can retry farther out.
fn polygamma_asymptotic(m: u32, y: &BigReal, eps: &Float) -> Option<BigReal> {
    let prec = y.prec();
    let y2 = y.mul(y);
    let mut acc;
    let mut ypow; // y^{-(2k+m)} tracker entering the k-th correction
    if m == 0 {
        acc = &y.ln() - &y.mul_i64(2).recip();
        ypow = y2.recip();
    } else {
        let fm1 = BigReal::from_integer(&factorial(m - 1), prec);
        let lead = fm1.div(&y.powi(m as i32));
        let next = lead.mul_i64(m as i64).div(&y.mul_i64(2));
        acc = &lead + &next;
        ypow = y.powi(-(m as i32 + 2));
    }
    let mut prev_mag = Float::with_val(32, f64::INFINITY);
    let mut k = 1usize;
    let mut converged = false;
    loop {
        let coeff = if m == 0 {
            let mut q = bernoulli(2 * k);
            q /= Integer::from(2 * k);
            q
        } else {
            let mut q = bernoulli(2 * k);
            q *= factorial(2 * k as u32 + m - 1);
            q /= factorial(2 * k as u32);
            q
        };
        let term = BigReal::from_rational(&coeff, prec).mul(&ypow);
        let mag = term.abs_f();
        if mag > prev_mag {
            // divergence onset before reaching the target: move farther out
            return None;
        }
        acc = if m == 0 { &acc - &term } else { &acc + &term };
        let scale = acc.abs_f() * eps.clone();
        if mag <= scale {
            acc.add_err(&mag);
            converged = true;
            break;
        }
        prev_mag = mag;
        ypow = ypow.div(&y2);
        k += 1;
        if k > 4 * digits_for_bits(prec) + 40 {
            break;
        }
    }
    if !converged {
        return None;
    }
    if m >= 1 && m % 2 == 0 {
        acc = acc.neg();
    }
    Some(acc)
}

pub fn digamma(x: &BigReal) -> Result<BigReal> {
    polygamma(0, x)
}

pub fn lngamma(x: &BigReal) -> Result<BigReal> {
    if x.cmp_i64(0) != std::cmp::Ordering::Greater {
        return Err(Error::domain("lngamma", "argument must be positive"));
    }
    let val = x.value().clone().ln_gamma();
    let dbound = Float::with_val(53, x.value()).digamma().abs();
    Ok(unary_wrap(x, val, dbound))
}

pub fn gamma(x: &BigReal) -> Result<BigReal> {
    if x.cmp_i64(0) != std::cmp::Ordering::Greater {
        return Err(Error::domain("gamma", "argument must be positive"));
    }
    let val = x.value().clone().gamma();
    let psi = Float::with_val(53, x.value()).digamma();
    let dbound = Float::with_val(53, &val * &psi).abs();
    Ok(unary_wrap(x, val, dbound))
}

pub fn erf(x: &BigReal) -> BigReal {
    unary_wrap(x, x.value().clone().erf(), Float::with_val(32, 1.13))
}

pub fn erfc(x: &BigReal) -> BigReal {
    unary_wrap(x, x.value().clone().erfc(), Float::with_val(32, 1.13))
}

/// Exponential integral Ei(x); for x < 0 this equals -E_1(-x) = -GammaU(0,-x).
pub fn ei(x: &BigReal) -> Result<BigReal> {
    if x.is_zero() {
        return Err(Error::domain("ei", "logarithmic singularity at 0"));
    }
    let val = x.value().clone().eint();
    let dbound = {
        let xf = Float::with_val(53, x.value());
        Float::with_val(53, xf.exp_ref()) / Float::with_val(53, x.value()).abs()
    };
    Ok(unary_wrap(x, val, dbound))
}

fn finite_err(f: Float) -> Float {
    if f.is_finite() { f } else { Float::with_val(32, f64::MAX) }
}

fn unary_wrap(x: &BigReal, val: Float, deriv_bound: Float) -> BigReal {
    let extra = finite_err(Float::with_val(32, x.err() * &deriv_bound).abs());
    let mut out = BigReal::from_float(val);
    out.add_err(&extra);
    out
}

/// Upper incomplete gamma GammaU(alpha, x) for x > 0 (alpha may be zero, where
/// it reduces to E_1(x)).
pub fn gamma_upper(alpha: &BigReal, x: &BigReal) -> Result<BigReal> {
    if x.cmp_i64(0) != std::cmp::Ordering::Greater {
        return Err(Error::domain("gamma_upper", "x must be positive"));
    }
    let prec = alpha.prec().max(x.prec());
    let val = Float::with_val(prec, alpha.value()).gamma_inc(x.value());
    // d/dx = -x^{alpha-1} e^{-x}; soft bound for the alpha sensitivity
    let xf = x.to_f64();
    let dx = (xf.ln() * (alpha.to_f64() - 1.0) - xf).exp();
    let dalpha = (val.to_f64().abs() + 1.0) * (xf.ln().abs() + 2.0);
    let extra = finite_err(
        (Float::with_val(32, x.err()) * dx + Float::with_val(32, alpha.err()) * dalpha).abs(),
    );
    let mut out = BigReal::from_float(val);
    out.add_err(&extra);
    Ok(out)
}

/// Generalized hypergeometric pFq by direct summation. Negative arguments
/// cancel catastrophically, so the working precision is padded by the hump
/// height ~e^{|x|} before rounding back.
pub fn pfq(num: &[BigReal], den: &[BigReal], x: &BigReal) -> Result<BigReal> {
    let prec = x.prec();
    let xf = x.to_f64();
    let guard = if xf < 0.0 {
        (1.5 * xf.abs() * std::f64::consts::LOG2_E).ceil() as u32 + 16
    } else {
        16
    };
    let wp = prec + guard;
    let xw = Float::with_val(wp, x.value());
    let mut term = Float::with_val(wp, 1);
    let mut acc = Float::with_val(wp, 1);
    let mut max_mag = Float::with_val(32, 1);
    let tol = eps_for_digits(digits_for_bits(prec) + 6);
    let min_terms = (2.0 * xf.abs()).ceil() as usize + 4;
    let mut stable = 0u32;
    for k in 0..200_000usize {
        let mut factor = Float::with_val(wp, &xw / (k as u32 + 1));
        for a in num {
            factor *= Float::with_val(wp, a.value() + k as u32);
        }
        for b in den {
            let bk = Float::with_val(wp, b.value() + k as u32);
            if bk.is_zero() {
                return Err(Error::domain("pfq", "lower parameter hits a nonpositive integer"));
            }
            factor /= bk;
        }
        term *= factor;
        if !term.is_finite() {
            return Err(Error::NonFinite { op: "pfq", index: k });
        }
        acc += &term;
        let mag = Float::with_val(32, term.abs_ref());
        if mag > max_mag {
            max_mag = mag.clone();
        }
        let scale = Float::with_val(32, acc.abs_ref()).max(&Float::with_val(32, 1)) * tol.clone();
        stable = if mag <= scale { stable + 1 } else { 0 };
        if stable >= 3 && k + 1 >= min_terms {
            let mut out = BigReal::from_float(Float::with_val(prec, acc));
            // cancellation: the hump's rounding noise survives at 2^-wp
            let cancel = max_mag >> (wp - 8);
            out.add_err(&cancel);
            out.add_err(&mag);
            return Ok(out);
        }
    }
    Err(Error::no_conv("pfq", "series did not stabilize"))
}

/// d/dalpha GammaU(alpha, x).
pub fn gamma_upper_dalpha(alpha: &BigReal, x: &BigReal) -> Result<BigReal> {
    if x.cmp_i64(0) != std::cmp::Ordering::Greater {
        return Err(Error::domain("gamma_upper_dalpha", "x must be positive"));
    }
    let prec = alpha.prec().max(x.prec());
    let lnx = x.ln();
    if alpha.is_zero() {
        // gamma^2/2 + pi^2/12 - ln^2 x / 2 - x 3F3(1,1,1;2,2,2;-x)
        //   + (gamma + GammaU(0,x) + ln x) ln x
        let g = euler_gamma(prec);
        let pi = BigReal::pi(prec);
        let one = BigReal::one(prec);
        let ones = [one.clone(), one.clone(), one.clone()];
        let two = BigReal::from_u64(2, prec);
        let twos = [two.clone(), two.clone(), two];
        let f33 = pfq(&ones, &twos, &x.neg())?;
        let e1 = gamma_upper(&BigReal::zero(prec), x)?;
        let mut acc = g.mul(&g).div_u64(2);
        acc = &acc + &pi.mul(&pi).div_u64(12);
        acc = &acc - &lnx.mul(&lnx).div_u64(2);
        acc = &acc - &x.mul(&f33);
        acc = &acc + &(&(&g + &e1) + &lnx).mul(&lnx);
        return Ok(acc);
    }
    if alpha.cmp_i64(0) == std::cmp::Ordering::Less {
        return Err(Error::domain("gamma_upper_dalpha", "alpha must be nonnegative"));
    }
    // Gamma(alpha) psi(alpha) + (x^alpha/alpha^2)
    //   [ -alpha ln x 1F1(alpha; alpha+1; -x) + 2F2(alpha,alpha;alpha+1,alpha+1;-x) ]
    let ga = gamma(alpha)?;
    let psi = digamma(alpha)?;
    let ap1 = alpha + &BigReal::one(prec);
    let f11 = pfq(&[alpha.clone()], &[ap1.clone()], &x.neg())?;
    let f22 = pfq(&[alpha.clone(), alpha.clone()], &[ap1.clone(), ap1], &x.neg())?;
    let xa = x.pow(alpha);
    let bracket = &f22 - &alpha.mul(&lnx).mul(&f11);
    Ok(&ga.mul(&psi) + &xa.div(&alpha.mul(alpha)).mul(&bracket))
}

/// Jacobi theta_3(q) = 1 + 2 sum q^{n^2} for 0 < q < 1.
pub fn theta3(q: &BigReal) -> Result<BigReal> {
    if q.cmp_i64(0) != std::cmp::Ordering::Greater || q.cmp_i64(1) != std::cmp::Ordering::Less {
        return Err(Error::domain("theta3", "q must lie in (0, 1)"));
    }
    let prec = q.prec();
    let eps = eps_for_digits(digits_for_bits(prec) + 2);
    let mut acc = BigReal::one(prec);
    let mut n = 1u64;
    loop {
        let term = q.powi((n * n) as i32).mul_i64(2);
        let mag = term.abs_f();
        acc = &acc + &term;
        if mag <= acc.abs_f() * eps.clone() {
            acc.add_err(&mag);
            return Ok(acc);
        }
        n += 1;
        if n > 10_000 {
            return Err(Error::no_conv("theta3", "q too close to 1"));
        }
    }
}

/// Periodized first Bernoulli polynomial P1(x) = {x} - 1/2.
pub fn p1(x: &BigReal) -> BigReal {
    let frac = x - &x.floor();
    &frac - &BigReal::from_rational(&rug::Rational::from((1, 2)), x.prec())
}

pub fn mpfr_euler(prec: u32) -> Float {
    Float::with_val(prec, Constant::Euler)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::real::bits_for_digits;
    use proptest::prelude::*;
    use rug::ops::Pow;

    fn assert_digits(got: &BigReal, want: &Float, digits: i32, label: &str) {
        let diff = (got.value().clone() - want).abs();
        let tol = Float::with_val(53, 10).pow(-digits);
        assert!(diff < tol, "{label}: got {} want {} (diff {:.3e})", got, want, diff.to_f64());
    }

    #[test]
    fn digamma_one_is_minus_euler() {
        let p = bits_for_digits(60);
        let g = polygamma(0, &BigReal::one(p)).unwrap();
        let want = -mpfr_euler(p);
        assert_digits(&g, &want, 58, "psi(1)");
    }

    #[test]
    fn digamma_half_closed_form() {
        let p = bits_for_digits(50);
        let half = BigReal::from_rational(&rug::Rational::from((1, 2)), p);
        let got = digamma(&half).unwrap();
        let want = -mpfr_euler(p) - 2u32 * Float::with_val(p, Constant::Log2);
        assert_digits(&got, &want, 48, "psi(1/2)");
    }

    #[test]
    fn trigamma_and_tetragamma_at_one() {
        let p = bits_for_digits(50);
        let one = BigReal::one(p);
        let t = polygamma(1, &one).unwrap();
        let want = Float::with_val(p, Constant::Pi).square() / 6u32;
        assert_digits(&t, &want, 48, "psi'(1)");
        let t2 = polygamma(2, &one).unwrap();
        let want2 = -2i32 * Float::with_val(p, Float::zeta_u(3));
        assert_digits(&t2, &want2, 48, "psi''(1)");
        let th = polygamma(1, &BigReal::from_f64(0.5, p)).unwrap();
        let wanth = Float::with_val(p, Constant::Pi).square() / 2u32;
        assert_digits(&th, &wanth, 48, "psi'(1/2)");
    }

    #[test]
    fn ei_negative_matches_e1() {
        let p = bits_for_digits(40);
        for xf in [1.0, 5.5, 0.25] {
            let x = BigReal::from_f64(xf, p);
            let a = ei(&x.neg()).unwrap();
            let b = gamma_upper(&BigReal::zero(p), &x).unwrap().neg();
            assert_digits(&a, b.value(), 38, "Ei(-x) = -E1(x)");
        }
    }

    #[test]
    fn gamma_upper_half_is_erfc() {
        let p = bits_for_digits(40);
        let x = BigReal::from_f64(2.25, p);
        let a = gamma_upper(&BigReal::from_f64(0.5, p), &x).unwrap();
        let spi = Float::with_val(p, Constant::Pi).sqrt();
        let want = spi * x.sqrt().value().clone().erfc();
        assert_digits(&a, &want, 38, "GammaU(1/2,x)");
    }

    #[test]
    fn pfq_closed_forms() {
        let p = bits_for_digits(40);
        for xf in [5.0f64, -5.0, -50.0] {
            let x = BigReal::from_f64(xf, p);
            let f = pfq(&[BigReal::one(p)], &[BigReal::from_u64(2, p)], &x).unwrap();
            let want = Float::with_val(p, x.value().clone().exp_m1() / x.value());
            assert_digits(&f, &want, 36, "1F1(1;2;x)");
        }
    }

    #[test]
    fn pfq_ein_identity_ties_routes_together() {
        // x 2F2(1,1;2,2;-x) = gamma + ln x + GammaU(0, x)
        let p = bits_for_digits(45);
        let x = BigReal::from_u64(3, p);
        let one = BigReal::one(p);
        let two = BigReal::from_u64(2, p);
        let lhs = x.mul(
            &pfq(&[one.clone(), one], &[two.clone(), two], &x.neg()).unwrap(),
        );
        let rhs = &(&euler_gamma(p) + &x.ln()) + &gamma_upper(&BigReal::zero(p), &x).unwrap();
        assert_digits(&lhs, rhs.value(), 42, "Ein");
    }

    #[test]
    fn dalpha_matches_finite_difference() {
        let p = bits_for_digits(90);
        let h = Float::with_val(p, 10).pow(-25i32);
        for (af, xf) in [(0.0, 2.0), (0.0, std::f64::consts::PI), (1.0 / 3.0, 2.0)] {
            let alpha = if af == 0.0 {
                BigReal::zero(p)
            } else {
                BigReal::from_rational(&rug::Rational::from((1, 3)), p)
            };
            let x = BigReal::from_f64(xf, p);
            let got = gamma_upper_dalpha(&alpha, &x).unwrap();
            // forward difference at alpha = 0 keeps gamma_inc on alpha >= 0
            let up = Float::with_val(p, alpha.value() + &h).gamma_inc(x.value());
            let dn = if af == 0.0 {
                Float::with_val(p, alpha.value()).gamma_inc(x.value())
            } else {
                Float::with_val(p, alpha.value() - &h).gamma_inc(x.value())
            };
            let denom = if af == 0.0 { h.clone() } else { 2u32 * h.clone() };
            let fd = Float::with_val(p, (up - dn) / denom);
            assert_digits(&got, &fd, 20, "dGammaU/dalpha");
        }
    }

    #[test]
    fn theta3_lemniscatic_value() {
        let p = bits_for_digits(40);
        let q = BigReal::pi(p).neg().exp();
        let got = theta3(&q).unwrap();
        let pi4 = Float::with_val(p, Constant::Pi).root(4);
        let want = pi4 / Float::with_val(p, 0.75).gamma();
        assert_digits(&got, &want, 38, "theta3(e^-pi)");
    }

    #[test]
    fn p1_sawtooth() {
        let p = 128;
        let a = p1(&BigReal::from_f64(2.75, p));
        assert!((a.to_f64() - 0.25).abs() < 1e-30);
        let b = p1(&BigReal::from_f64(-0.25, p));
        assert!((b.to_f64() - 0.25).abs() < 1e-30);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn digamma_matches_mpfr(xs in 0.05f64..40.0) {
            let p = bits_for_digits(45);
            let x = BigReal::from_f64(xs, p);
            let got = digamma(&x).unwrap();
            let want = Float::with_val(p, x.value()).digamma();
            let diff = (got.value().clone() - want).abs();
            prop_assert!(diff.to_f64() < 1e-40);
        }

        #[test]
        fn polygamma_shift_recurrence(xs in 0.1f64..8.0, m in 0u32..4) {
            let p = bits_for_digits(35);
            let x = BigReal::from_f64(xs, p);
            let xp1 = &x + &BigReal::one(p);
            let lhs = polygamma(m, &xp1).unwrap();
            let rhs = polygamma(m, &x).unwrap();
            let step = BigReal::from_integer(&factorial(m), p)
                .div(&x.powi(m as i32 + 1));
            let expect = if m % 2 == 0 { &rhs + &step } else { &rhs - &step };
            let diff = (lhs.value().clone() - expect.value().clone()).abs();
            let scale = 1.0 + step.to_f64().abs();
            prop_assert!(diff.to_f64() < 1e-28 * scale);
        }
    }
}
