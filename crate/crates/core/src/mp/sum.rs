use super::jet::Jet;
use super::real::BigReal;
use crate::error::{Error, Result};
use rug::Float;

/// Anything the convergence-controlled driver can accumulate.
pub trait Summand: Clone {
    fn accumulate(&mut self, term: &Self);
    fn term_mag(term: &Self) -> Float;
    fn mag(&self) -> Float;
    fn is_finite(&self) -> bool;
    fn widen_err(&mut self, extra: &Float);
}

impl Summand for BigReal {
    fn accumulate(&mut self, term: &Self) {
        *self = &*self + term;
    }
    fn term_mag(term: &Self) -> Float {
        term.abs_f()
    }
    fn mag(&self) -> Float {
        self.abs_f()
    }
    fn is_finite(&self) -> bool {
        BigReal::is_finite(self)
    }
    fn widen_err(&mut self, extra: &Float) {
        self.add_err(extra);
    }
}

impl Summand for Jet {
    fn accumulate(&mut self, term: &Self) {
        self.add_assign(term);
    }
    fn term_mag(term: &Self) -> Float {
        term.max_abs_coeff()
    }
    fn mag(&self) -> Float {
        self.max_abs_coeff()
    }
    fn is_finite(&self) -> bool {
        Jet::is_finite(self)
    }
    fn widen_err(&mut self, extra: &Float) {
        self.add_err_all(extra);
    }
}

#[derive(Clone, Debug)]
pub struct SumOpts {
    pub op: &'static str,
    /// Relative threshold: converged once `window` consecutive terms satisfy
    /// |term| <= eps * |sum|.
    pub eps: Float,
    pub min_terms: usize,
    pub max_terms: usize,
    pub window: usize,
}

impl SumOpts {
    pub fn new(op: &'static str, eps: Float) -> Self {
        SumOpts { op, eps, min_terms: 4, max_terms: 200_000, window: 3 }
    }
}

#[derive(Clone, Debug)]
pub struct SumReport {
    pub terms: usize,
    /// Magnitude of the largest term in the final stability window; folded
    /// into the result's error bound as a tail estimate.
    pub tail: Float,
}

/// Adds term(0), term(1), ... to `init` until the terms stay negligible
/// relative to the running sum for a full stability window.
pub fn sum_series<T: Summand>(
    init: T,
    opts: &SumOpts,
    mut term: impl FnMut(usize) -> Result<T>,
) -> Result<(T, SumReport)> {
    let mut s = init;
    let mut recent: Vec<Float> = Vec::with_capacity(opts.window);
    let mut n = 0usize;
    loop {
        if n >= opts.max_terms {
            return Err(Error::no_conv(
                opts.op,
                format!("no convergence after {} terms", opts.max_terms),
            ));
        }
        let t = term(n)?;
        if !t.is_finite() {
            return Err(Error::NonFinite { op: opts.op, index: n });
        }
        s.accumulate(&t);
        if recent.len() == opts.window {
            recent.remove(0);
        }
        recent.push(T::term_mag(&t));
        n += 1;
        if n >= opts.min_terms && recent.len() == opts.window {
            let scale = s.mag() * opts.eps.clone();
            // <= (not <) so an identically-zero tail converges even when the
            // accumulated sum itself is zero.
            if recent.iter().all(|d| *d <= scale) {
                break;
            }
        }
    }
    let mut tail = recent[0].clone();
    for d in &recent[1..] {
        if *d > tail {
            tail = d.clone();
        }
    }
    s.widen_err(&tail);
    Ok((s, SumReport { terms: n, tail }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::real::{bits_for_digits, eps_for_digits};

    #[test]
    fn geometric_series_sums_to_closed_form() {
        let p = bits_for_digits(30);
        let opts = SumOpts::new("geometric", eps_for_digits(32));
        let half = BigReal::from_f64(0.5, p);
        let (s, rep) = sum_series(BigReal::zero(p), &opts, |n| {
            Ok(half.powi(n as i32))
        })
        .unwrap();
        let diff = (s.value().clone() - Float::with_val(p, 2)).abs();
        assert!(diff.to_f64() < 1e-29);
        assert!(rep.terms > 90 && rep.terms < 150);
        assert!(s.err().clone() >= rep.tail);
    }

    #[test]
    fn divergent_series_errors_out() {
        let p = 64;
        let mut opts = SumOpts::new("harmonic", eps_for_digits(10));
        opts.max_terms = 500;
        let r = sum_series(BigReal::zero(p), &opts, |n| {
            Ok(BigReal::one(p).div_u64(n as u64 + 1))
        });
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn zero_series_converges_immediately() {
        let p = 64;
        let opts = SumOpts::new("zeros", eps_for_digits(10));
        let (s, rep) = sum_series(BigReal::zero(p), &opts, |_| Ok(BigReal::zero(p))).unwrap();
        assert!(s.is_zero());
        assert_eq!(rep.terms, 4);
    }

    #[test]
    fn nonfinite_term_is_hard_error() {
        let p = 64;
        let opts = SumOpts::new("bad", eps_for_digits(10));
        let r = sum_series(BigReal::zero(p), &opts, |n| {
            if n == 2 {
                Ok(BigReal::from_f64(f64::NAN, p))
            } else {
                Ok(BigReal::one(p))
            }
        });
        assert!(matches!(r, Err(Error::NonFinite { index: 2, .. })));
    }

    #[test]
    fn jet_series_accumulates_coefficientwise() {
        // sum_n (x^n jet at order 1 around x=1/3): value 1/(1-x)=3/2, deriv 1/(1-x)^2=9/4
        let p = bits_for_digits(25);
        let opts = SumOpts::new("jet_geom", eps_for_digits(28));
        let x = Jet::variable(BigReal::from_f64(1.0 / 3.0, p), 1);
        let (s, _) = sum_series(Jet::zero(1, p), &opts, |n| Ok(x.powi(n as u32))).unwrap();
        assert!((s.coeff(0).to_f64() - 1.5).abs() < 1e-24);
        assert!((s.coeff(1).to_f64() - 2.25).abs() < 1e-24);
    }
}
