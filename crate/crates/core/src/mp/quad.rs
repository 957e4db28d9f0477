use super::real::BigReal;
use crate::error::{Error, Result};
use rug::Float;

/// Double-exponential quadrature: tanh-sinh on finite intervals plus the
/// exp-sinh and sinh-sinh variants for half-line and whole-line integrals.
/// Levels halve the step and reuse previous nodes; convergence is judged by
/// the change between consecutive levels.
#[derive(Clone, Debug)]
pub struct QuadOpts {
    pub op: &'static str,
    /// Relative tolerance on the level-to-level change.
    pub eps: Float,
    /// Absolute floor so integrals near zero can still converge.
    pub abs_floor: Float,
    pub max_level: u32,
}

impl QuadOpts {
    pub fn new(op: &'static str, eps: Float) -> Self {
        let abs_floor = eps.clone();
        QuadOpts { op, eps, abs_floor, max_level: 13 }
    }

    pub fn with_abs_floor(mut self, f: Float) -> Self {
        self.abs_floor = f;
        self
    }
}

#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: BigReal,
    pub levels: u32,
    pub evals: usize,
}

fn cosh_sinh(t: &BigReal) -> (BigReal, BigReal) {
    let et = t.exp();
    let emt = et.recip();
    let two = &et + &emt;
    let diff = &et - &emt;
    (two.div_u64(2), diff.div_u64(2))
}

/// Generic level-doubling driver. `node(t)` returns the already-weighted
/// contribution w(t)*f(x(t)).
fn de_levels(
    prec: u32,
    opts: &QuadOpts,
    mut node: impl FnMut(&BigReal) -> Result<BigReal>,
) -> Result<QuadResult> {
    // The mapped weight decays at least like e^{-u} with u = (pi/2) sinh t
    // (the slowest case is sinh-sinh against an O(1/x^2) integrand), so nodes
    // past e^{-u} = 2^{-(prec+64)} sit below one ulp of the working
    // precision; the small-term break exits far earlier when the integrand
    // decays faster.
    let u_max = f64::from(prec + 64) * std::f64::consts::LN_2;
    let t_max = (2.0 * u_max / std::f64::consts::PI).asinh();
    let mut evals = 0usize;
    let mut sum = BigReal::zero(prec); // sum of node values, step factored out
    let mut prev: Option<BigReal> = None;
    // Largest |t| where any level saw a non-negligible term; integrands whose
    // mass sits past a dead zone (sharply peaked after the u-map) must not be
    // cut off before the scan clears that point again.
    let mut t_live = 0f64;
    for level in 0..=opts.max_level {
        let h = Float::with_val(prec, 1) >> level;
        let hb = BigReal::from_float(h.clone());
        let j_max = (t_max / h.to_f64()).ceil() as i64;
        let mut small_run = 0u32;
        let mut j: i64 = if level == 0 { 0 } else { 1 };
        let stride = if level == 0 { 1 } else { 2 };
        while j <= j_max {
            let t = hb.mul_i64(j);
            let mut term = node(&t)?;
            if j > 0 {
                let tm = hb.mul_i64(-j);
                term = &term + &node(&tm)?;
                evals += 1;
            }
            evals += 1;
            if !term.is_finite() {
                return Err(Error::NonFinite { op: opts.op, index: evals });
            }
            sum = &sum + &term;
            let tiny = term.abs_f() * h.to_f64()
                <= opts.abs_floor.clone() * Float::with_val(32, 1e-4);
            let tf = j as f64 * h.to_f64();
            if !tiny {
                t_live = t_live.max(tf);
            }
            small_run = if tiny { small_run + 1 } else { 0 };
            if small_run >= 2 && tf > (t_live + 0.5).max(3.0) {
                break;
            }
            j += stride;
        }
        let estimate = sum.mul(&hb);
        if let Some(p) = &prev {
            let diff = (&estimate - p).abs_f();
            let tol_rel = estimate.abs_f() * opts.eps.clone();
            let tol = if tol_rel > opts.abs_floor { tol_rel } else { opts.abs_floor.clone() };
            if diff <= tol {
                let mut value = estimate;
                value.add_err(&diff);
                return Ok(QuadResult { value, levels: level, evals });
            }
        }
        prev = Some(estimate);
    }
    Err(Error::no_conv(
        opts.op,
        format!("quadrature level cap {} reached", opts.max_level),
    ))
}

/// Integrates f over [a, b]. The integrand receives (x, x-a, b-x) with the
/// endpoint offsets computed free of cancellation, so integrable endpoint
/// singularities resolve at full precision.
pub fn tanh_sinh(
    a: &BigReal,
    b: &BigReal,
    opts: &QuadOpts,
    mut f: impl FnMut(&BigReal, &BigReal, &BigReal) -> Result<BigReal>,
) -> Result<QuadResult> {
    let prec = a.prec().max(b.prec());
    let rad = (b - a).div_u64(2);
    let half_pi = BigReal::pi(prec).div_u64(2);
    let one = BigReal::one(prec);
    de_levels(prec, opts, |t| {
        let (ch, sh) = cosh_sinh(t);
        let u = half_pi.mul(&sh);
        let e2u = u.mul_i64(2).exp();
        // 1 - tanh(u) = 2/(e^{2u}+1); 1 + tanh(u) = 2 e^{2u}/(e^{2u}+1)
        let denom = &e2u + &one;
        let off_b = rad.mul_i64(2).div(&denom);
        let off_a = off_b.mul(&e2u);
        let x = if t.is_sign_negative() { a + &off_a } else { b - &off_b };
        // dx/dt = rad (pi/2) cosh t sech^2 u, and sech^2 u = off_a off_b / rad^2
        let w = half_pi.mul(&ch).mul(&off_a).mul(&off_b).div(&rad);
        Ok(w.mul(&f(&x, &off_a, &off_b)?))
    })
}

/// Integrates f over (0, inf) via x = exp((pi/2) sinh t). The integrand must
/// decay at infinity faster than any power recovers the double-exponential
/// weight growth (exponential decay is ample).
pub fn exp_sinh(
    prec: u32,
    opts: &QuadOpts,
    mut f: impl FnMut(&BigReal) -> Result<BigReal>,
) -> Result<QuadResult> {
    let half_pi = BigReal::pi(prec).div_u64(2);
    de_levels(prec, opts, |t| {
        let (ch, sh) = cosh_sinh(t);
        let x = half_pi.mul(&sh).exp();
        let w = half_pi.mul(&ch).mul(&x);
        Ok(w.mul(&f(&x)?))
    })
}

/// Integrates f over (-inf, inf) via x = sinh((pi/2) sinh t). Needs only
/// algebraic decay O(|x|^{-1-eps}) of the integrand.
pub fn sinh_sinh(
    prec: u32,
    opts: &QuadOpts,
    mut f: impl FnMut(&BigReal) -> Result<BigReal>,
) -> Result<QuadResult> {
    let half_pi = BigReal::pi(prec).div_u64(2);
    de_levels(prec, opts, |t| {
        let (ch, sh) = cosh_sinh(t);
        let u = half_pi.mul(&sh);
        let (chu, shu) = cosh_sinh(&u);
        let w = half_pi.mul(&ch).mul(&chu);
        Ok(w.mul(&f(&shu)?))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::real::{bits_for_digits, eps_for_digits};

    fn opts(digits: usize) -> QuadOpts {
        QuadOpts::new("test", eps_for_digits(digits))
    }

    #[test]
    fn inverse_sqrt_endpoint_singularity() {
        let d = 30;
        let p = bits_for_digits(d);
        let a = BigReal::zero(p);
        let b = BigReal::one(p);
        let r = tanh_sinh(&a, &b, &opts(d), |_, oa, _| Ok(oa.sqrt().recip())).unwrap();
        let diff = (r.value.value().clone() - Float::with_val(p, 2)).abs();
        assert!(diff.to_f64() < 1e-28, "got {}", r.value.value());
    }

    #[test]
    fn beta_like_double_singularity() {
        // int_0^1 dx / sqrt(x(1-x)) = pi
        let d = 30;
        let p = bits_for_digits(d);
        let a = BigReal::zero(p);
        let b = BigReal::one(p);
        let r = tanh_sinh(&a, &b, &opts(d), |_, oa, ob| {
            Ok(oa.mul(ob).sqrt().recip())
        })
        .unwrap();
        let pi = Float::with_val(p, rug::float::Constant::Pi);
        let diff = (r.value.value().clone() - pi).abs();
        assert!(diff.to_f64() < 1e-28, "got {}", r.value.value());
    }

    #[test]
    fn log_singularity() {
        // int_0^1 ln(1/x) dx = 1
        let d = 25;
        let p = bits_for_digits(d);
        let a = BigReal::zero(p);
        let b = BigReal::one(p);
        let r = tanh_sinh(&a, &b, &opts(d), |_, oa, _| Ok(oa.ln().neg())).unwrap();
        let diff = (r.value.value().clone() - 1u32).abs();
        assert!(diff.to_f64() < 1e-23);
    }

    #[test]
    fn half_line_gaussian() {
        // int_0^inf e^{-x^2} dx = sqrt(pi)/2
        let d = 30;
        let p = bits_for_digits(d);
        let r = exp_sinh(p, &opts(d), |x| Ok(x.mul(x).neg().exp())).unwrap();
        let target = Float::with_val(p, rug::float::Constant::Pi).sqrt() / 2u32;
        let diff = (r.value.value().clone() - target).abs();
        assert!(diff.to_f64() < 1e-28, "got {}", r.value.value());
    }

    #[test]
    fn whole_line_lorentzian() {
        // int dx/(x^2 + pi^2) = 1
        let d = 30;
        let p = bits_for_digits(d);
        let pi2 = BigReal::pi(p).powi(2);
        let r = sinh_sinh(p, &opts(d), |x| Ok((&x.powi(2) + &pi2).recip())).unwrap();
        let diff = (r.value.value().clone() - 1u32).abs();
        assert!(diff.to_f64() < 1e-28, "got {}", r.value.value());
    }

    #[test]
    fn error_bound_covers_true_error() {
        let d = 20;
        let p = bits_for_digits(d);
        let a = BigReal::zero(p);
        let b = BigReal::one(p);
        let r = tanh_sinh(&a, &b, &opts(d), |x, _, _| Ok(x.powi(3))).unwrap();
        let diff = (r.value.value().clone() - Float::with_val(p, 0.25)).abs();
        assert!(diff <= r.value.err().clone() + Float::with_val(32, 1e-25));
    }
}
