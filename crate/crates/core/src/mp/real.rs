use rug::float::{Constant, Round};
use rug::ops::{AssignRound, Pow};
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;

/// Bits used for the running error bound. The bound only needs a couple of
/// significant digits but a huge exponent range (bounds like 1e-900 must not
/// underflow), so a tiny MPFR float is the right carrier.
const ERR_PREC: u32 = 32;

/// Decimal digits -> working precision in bits, with guard bits on top.
pub fn bits_for_digits(digits: usize) -> u32 {
    let d = digits as f64;
    (d * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

/// Absolute tolerance 10^-digits as a low-precision float.
pub fn eps_for_digits(digits: usize) -> Float {
    Float::with_val(ERR_PREC, 10).pow(-(digits as i32))
}

pub(crate) fn err_zero() -> Float {
    Float::with_val(ERR_PREC, 0)
}

/// |src| rounded into the error precision. Error arithmetic is done at
/// ERR_PREC with generous safety factors elsewhere, so nearest rounding of
/// the 32-bit carrier is fine.
pub(crate) fn eabs<T>(src: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val(ERR_PREC, src).abs()
}

/// One ulp of `v` at its own precision (0 for an exact zero).
pub(crate) fn ulp(v: &Float) -> Float {
    if v.is_zero() || !v.is_finite() {
        return err_zero();
    }
    let p = v.prec();
    let mut u = eabs(&*v.as_abs());
    u >>= p - 1;
    u
}

/// Arbitrary-precision real with a tracked absolute error bound.
///
/// The bound is a soft estimate, not a rigorous enclosure: arithmetic
/// propagates first-order interval bounds plus rounding ulps, and series /
/// quadrature routines fold their truncation estimates in on top.
#[derive(Clone)]
pub struct BigReal {
    val: Float,
    err: Float,
}

impl BigReal {
    pub fn zero(prec: u32) -> Self {
        BigReal { val: Float::new(prec), err: err_zero() }
    }

    pub fn one(prec: u32) -> Self {
        BigReal { val: Float::with_val(prec, 1), err: err_zero() }
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        Self::from_float(Float::with_val(prec, v))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_float(Float::with_val(prec, v))
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        Self::from_float(Float::with_val(prec, v))
    }

    pub fn from_integer(v: &Integer, prec: u32) -> Self {
        Self::from_float(Float::with_val(prec, v))
    }

    pub fn from_rational(v: &Rational, prec: u32) -> Self {
        Self::from_float(Float::with_val(prec, v))
    }

    /// Wraps a float, charging one representation ulp.
    pub fn from_float(val: Float) -> Self {
        let err = ulp(&val);
        BigReal { val, err }
    }

    pub fn pi(prec: u32) -> Self {
        Self::from_float(Float::with_val(prec, Constant::Pi))
    }

    pub fn ln2(prec: u32) -> Self {
        Self::from_float(Float::with_val(prec, Constant::Log2))
    }

    pub fn prec(&self) -> u32 {
        self.val.prec()
    }

    pub fn value(&self) -> &Float {
        &self.val
    }

    pub fn err(&self) -> &Float {
        &self.err
    }

    pub fn to_f64(&self) -> f64 {
        self.val.to_f64()
    }

    pub fn is_finite(&self) -> bool {
        self.val.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.val.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.val.is_sign_negative() && !self.val.is_zero()
    }

    /// |value| as a low-precision float (for convergence checks).
    pub fn abs_f(&self) -> Float {
        eabs(&*self.val.as_abs())
    }

    pub fn set_err(&mut self, err: Float) {
        self.err = err;
    }

    pub fn add_err(&mut self, extra: &Float) {
        self.err = eabs(&self.err + extra);
    }

    pub fn with_err(mut self, err: Float) -> Self {
        self.err = err;
        self
    }

    /// Clears the tracked error (use when a value is exact by construction).
    pub fn assume_exact(mut self) -> Self {
        self.err = err_zero();
        self
    }

    pub fn round_to(&self, prec: u32) -> BigReal {
        let val = Float::with_val(prec, &self.val);
        let err = eabs(&self.err + ulp(&val));
        BigReal { val, err }
    }

    fn unary(&self, val: Float, deriv_bound: Float) -> BigReal {
        let err = eabs(Float::with_val(ERR_PREC, &self.err * &deriv_bound) + ulp(&val));
        BigReal { val, err }
    }

    pub fn neg(&self) -> BigReal {
        BigReal { val: Float::with_val(self.prec(), -&self.val), err: self.err.clone() }
    }

    pub fn abs(&self) -> BigReal {
        BigReal { val: self.val.clone().abs(), err: self.err.clone() }
    }

    pub fn floor(&self) -> BigReal {
        // The bound does not model crossing an integer; callers near a jump
        // must handle that themselves.
        BigReal { val: self.val.clone().floor(), err: self.err.clone() }
    }

    pub fn recip(&self) -> BigReal {
        let val = Float::with_val(self.prec(), self.val.recip_ref());
        let d = eabs(&val * &val);
        self.unary(val, d)
    }

    pub fn sqrt(&self) -> BigReal {
        let val = self.val.clone().sqrt();
        let d = if val.is_zero() { err_zero() } else { eabs(val.recip_ref()) >> 1 };
        self.unary(val, d)
    }

    pub fn exp(&self) -> BigReal {
        let val = self.val.clone().exp();
        let d = eabs(&*val.as_abs()) * 1.001f64;
        self.unary(val, d)
    }

    pub fn expm1(&self) -> BigReal {
        let val = self.val.clone().exp_m1();
        let d = eabs(self.val.exp_ref());
        self.unary(val, d)
    }

    pub fn ln(&self) -> BigReal {
        let val = self.val.clone().ln();
        let d = eabs(self.val.recip_ref());
        self.unary(val, d)
    }

    pub fn ln1p(&self) -> BigReal {
        let val = self.val.clone().ln_1p();
        let d = eabs((Float::with_val(ERR_PREC, &self.val + 1u32)).recip_ref());
        self.unary(val, d)
    }

    pub fn atan(&self) -> BigReal {
        let val = self.val.clone().atan();
        // |atan'| <= 1
        self.unary(val, Float::with_val(ERR_PREC, 1))
    }

    pub fn sin(&self) -> BigReal {
        let val = self.val.clone().sin();
        self.unary(val, Float::with_val(ERR_PREC, 1))
    }

    pub fn cos(&self) -> BigReal {
        let val = self.val.clone().cos();
        self.unary(val, Float::with_val(ERR_PREC, 1))
    }

    pub fn powi(&self, k: i32) -> BigReal {
        if k == 0 {
            return BigReal::one(self.prec());
        }
        let val = Float::with_val(self.prec(), (&self.val).pow(k));
        let d = if self.val.is_zero() {
            err_zero()
        } else {
            eabs(Float::with_val(ERR_PREC, &val / &self.val) * k)
        };
        self.unary(val, d)
    }

    /// Real power x^y for x > 0; errors of both operands are propagated.
    pub fn pow(&self, y: &BigReal) -> BigReal {
        let prec = self.prec().max(y.prec());
        let val = Float::with_val(prec, (&self.val).pow(&y.val));
        let dx = eabs(Float::with_val(ERR_PREC, &val / &self.val) * &y.val);
        let lnx = Float::with_val(ERR_PREC, self.val.ln_ref());
        let dy = eabs(Float::with_val(ERR_PREC, &val * &lnx));
        let err = eabs(
            Float::with_val(ERR_PREC, &self.err * &dx)
                + Float::with_val(ERR_PREC, &y.err * &dy)
                + ulp(&val),
        );
        BigReal { val, err }
    }

    pub fn mul_i64(&self, k: i64) -> BigReal {
        let val = Float::with_val(self.prec(), &self.val * k);
        let err = eabs(Float::with_val(ERR_PREC, &self.err * k).abs() + ulp(&val));
        BigReal { val, err }
    }

    pub fn div_u64(&self, k: u64) -> BigReal {
        let val = Float::with_val(self.prec(), &self.val / k);
        let err = eabs(Float::with_val(ERR_PREC, &self.err / k) + ulp(&val));
        BigReal { val, err }
    }

    /// Exact scaling by 2^k.
    pub fn shl(&self, k: i32) -> BigReal {
        let val = self.val.clone() << k;
        let err = self.err.clone() << k;
        BigReal { val, err }
    }

    pub fn cmp_value(&self, other: &BigReal) -> Ordering {
        self.val.partial_cmp(&other.val).unwrap_or(Ordering::Equal)
    }

    pub fn cmp_i64(&self, k: i64) -> Ordering {
        self.val.partial_cmp(&k).unwrap_or(Ordering::Equal)
    }

    /// Formats the value with exactly `digits` significant decimal digits.
    ///
    /// Output is positional ("0.00123", "123.4") when the exponent is small
    /// and scientific ("1.234e-12") otherwise; the mapping is deterministic
    /// so repeated runs are bit-identical.
    pub fn to_decimal(&self, digits: usize) -> String {
        assert!(digits > 0);
        if !self.val.is_finite() {
            return self.val.to_string();
        }
        if self.val.is_zero() {
            return "0".to_string();
        }
        let (neg, mantissa, exp) = self.val.to_sign_string_exp(10, Some(digits));
        let exp = exp.expect("finite nonzero float has an exponent");
        // value = ±0.mantissa * 10^exp, mantissa holding `digits` digits
        let sign = if neg { "-" } else { "" };
        let d = mantissa.as_str();
        if exp >= 1 && (exp as usize) <= digits {
            let k = exp as usize;
            if k == digits {
                format!("{sign}{d}")
            } else {
                format!("{sign}{}.{}", &d[..k], &d[k..])
            }
        } else if exp <= 0 && exp >= -4 {
            let zeros = "0".repeat((-exp) as usize);
            format!("{sign}0.{zeros}{d}")
        } else {
            let rest = &d[1..];
            if rest.is_empty() {
                format!("{sign}{}e{}", &d[..1], exp - 1)
            } else {
                format!("{sign}{}.{}e{}", &d[..1], rest, exp - 1)
            }
        }
    }

    /// Number of correct decimal digits suggested by the tracked error bound.
    pub fn err_digits(&self) -> f64 {
        if self.err.is_zero() {
            return f64::INFINITY;
        }
        if self.val.is_zero() {
            return -self.err.to_f64().log10();
        }
        let rel = Float::with_val(ERR_PREC, &self.err / &*self.val.as_abs());
        -rel.to_f64().log10()
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (±{:.2e})", self.to_decimal(20), self.err.to_f64())
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(20))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                BigReal::$method(self, rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl BigReal {
    pub fn add(&self, rhs: &BigReal) -> BigReal {
        let prec = self.prec().max(rhs.prec());
        let val = Float::with_val(prec, &self.val + &rhs.val);
        let err = eabs(Float::with_val(ERR_PREC, &self.err + &rhs.err) + ulp(&val));
        BigReal { val, err }
    }

    pub fn sub(&self, rhs: &BigReal) -> BigReal {
        let prec = self.prec().max(rhs.prec());
        let val = Float::with_val(prec, &self.val - &rhs.val);
        let err = eabs(Float::with_val(ERR_PREC, &self.err + &rhs.err) + ulp(&val));
        BigReal { val, err }
    }

    pub fn mul(&self, rhs: &BigReal) -> BigReal {
        let prec = self.prec().max(rhs.prec());
        let val = Float::with_val(prec, &self.val * &rhs.val);
        let ea = eabs(&*rhs.val.as_abs()) * &self.err;
        let eb = eabs(&*self.val.as_abs()) * &rhs.err;
        let ee = Float::with_val(ERR_PREC, &self.err * &rhs.err);
        let err = eabs(ea + eb + ee + ulp(&val));
        BigReal { val, err }
    }

    pub fn div(&self, rhs: &BigReal) -> BigReal {
        let prec = self.prec().max(rhs.prec());
        let val = Float::with_val(prec, &self.val / &rhs.val);
        // (e_a + |a/b| e_b) / |b|
        let babs = eabs(&*rhs.val.as_abs());
        let num = eabs(&*val.as_abs()) * &rhs.err + &self.err;
        let err = eabs(Float::with_val(ERR_PREC, num / babs) + ulp(&val));
        BigReal { val, err }
    }
}

impl std::ops::Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::neg(self)
    }
}
