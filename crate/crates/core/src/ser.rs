//! Ser's logarithmic series for the Stieltjes constants: exact rational
//! polynomial weights (absolute Gregory coefficients at y = 1), the
//! closed-form tail summands, and a zeta-jet resummation that turns the
//! harmonically slow tail into a geometric one. Knessl's integral and
//! asymptotic forms of the weights round out the module.

use crate::combinatorics::{factorial, stirling1};
use crate::error::{Error, Result};
use crate::hurwitz::Zeta;
use crate::mp::quad::{sinh_sinh, QuadOpts};
use crate::mp::real::{bits_for_digits, eps_for_digits, BigReal};
use crate::mp::sum::{sum_series, SumOpts};
use crate::specfun;
use rug::{Integer, Rational};
use std::cmp::Ordering;

/// Coefficients c_k of P_{n+1}(y) = sum_k c_k y^{k+1}
/// = (-1)^{n+1} int_0^y binom(x, n) dx, so c_k = (-1)^{n+1} s(n,k)/(n!(k+1))
/// with s the signed Stirling numbers of the first kind.
pub fn ser_polynomial(n: usize) -> Vec<Rational> {
    let nf = factorial(n as u32);
    (0..=n)
        .map(|k| {
            let mut c = Rational::from((stirling1(n, k), nf.clone() * (k as u32 + 1)));
            if n % 2 == 0 {
                c = -c;
            }
            c
        })
        .collect()
}

/// p_{n+1} = P_{n+1}(1), the absolute Gregory coefficient |G_n|; n >= 1.
pub fn gregory(n: usize) -> Rational {
    let mut s = Rational::new();
    for c in ser_polynomial(n) {
        s += c;
    }
    s
}

/// m-th summand of gamma_k minus its n-th logarithmic partial sum:
/// I_{k,m} = ln^k m / m - [ln^{k+1}(m+1) - ln^{k+1} m]/(k+1).
pub fn ser_tail_term(k: usize, m: u64, prec: u32) -> BigReal {
    let lm = BigReal::from_u64(m, prec).ln();
    let lm1 = BigReal::from_u64(m + 1, prec).ln();
    lm.powi(k as i32).div_u64(m).sub(
        &lm1.powi(k as i32 + 1)
            .sub(&lm.powi(k as i32 + 1))
            .div_u64(k as u64 + 1),
    )
}

/// I_{k,m} expanded in powers of 1/m:
/// sum_{i>=1} (1/((i+1) m^{i+1})) [(-1)^{i+1} ln^k m
///   - (1/i!) sum_{j<k} (k!/(k-j-1)!) s(i+1, j+2) ln^{k-j-1} m].
pub fn ser_tail_term_series(k: usize, m: u64, digits: usize) -> Result<BigReal> {
    if m < 2 {
        return Err(Error::domain("ser_tail_term_series", "requires m >= 2"));
    }
    let prec = bits_for_digits(digits + 8);
    let lpow: Vec<BigReal> = {
        let lm = BigReal::from_u64(m, prec).ln();
        (0..=k as i32).map(|p| lm.powi(p)).collect()
    };
    let kf = factorial(k as u32);
    let minv = BigReal::from_u64(m, prec).recip();
    let mut mp = BigReal::one(prec);
    let opts = SumOpts::new("ser_tail_term_series", eps_for_digits(digits + 2));
    let (s, _) = sum_series(BigReal::zero(prec), &opts, |idx| {
        let i = idx + 1;
        mp = mp.mul(&minv);
        let mut br = if i % 2 == 1 { lpow[k].clone() } else { lpow[k].neg() };
        let ifact = factorial(i as u32);
        for j in 0..k {
            let w = Rational::from((
                Integer::from(&kf / &factorial((k - j - 1) as u32)) * stirling1(i + 1, j + 2),
                ifact.clone(),
            ));
            br = br.sub(&BigReal::from_rational(&w, prec).mul(&lpow[k - j - 1]));
        }
        Ok(br.mul(&mp).mul(&minv).div_u64(i as u64 + 1))
    })?;
    Ok(s)
}

#[derive(Clone, Debug)]
pub struct SerGamma {
    pub value: BigReal,
    pub partial: BigReal,
    pub remainder: BigReal,
    pub tail_terms: usize,
}

/// gamma_k as logarithmic partial sum plus resummed tail. The partial sum is
/// D_n = sum_{m<=n} ln^k m / m - ln^{k+1}(n+1)/(k+1); summing the 1/m
/// expansion of the remaining I_{k,m} over m > n first turns each power of
/// ln^p m / m^{i+1} into a zeta-jet tail T_p(i) = (-1)^p zeta^(p)(i+1, n+1),
/// leaving a series geometric in 1/(n+1).
pub fn ser_gamma(k: usize, n: u64, digits: usize) -> Result<SerGamma> {
    if n == 0 {
        return Err(Error::domain("ser_gamma", "requires n >= 1"));
    }
    let z = Zeta::new(digits);
    let prec = z.prec();
    let mut partial = BigReal::zero(prec);
    for m in 1..=n {
        partial = partial.add(&BigReal::from_u64(m, prec).ln().powi(k as i32).div_u64(m));
    }
    partial = partial
        .sub(&BigReal::from_u64(n + 1, prec).ln().powi(k as i32 + 1).div_u64(k as u64 + 1));
    let a_tail = BigReal::from_u64(n + 1, prec);
    let kf = factorial(k as u32);
    let opts = SumOpts::new("ser_gamma", eps_for_digits(digits + 4));
    let (remainder, rep) = sum_series(BigReal::zero(prec), &opts, |idx| {
        let i = idx + 1;
        let jet = z.jet(&BigReal::from_u64(i as u64 + 1, prec), &a_tail, k)?;
        let t = |p: usize| {
            let v = jet.reg.coeff(p).mul(&BigReal::from_integer(&factorial(p as u32), prec));
            if p % 2 == 1 {
                v.neg()
            } else {
                v
            }
        };
        let mut term = if i % 2 == 1 { t(k) } else { t(k).neg() };
        let ifact = factorial(i as u32);
        for j in 0..k {
            let w = Rational::from((
                Integer::from(&kf / &factorial((k - j - 1) as u32)) * stirling1(i + 1, j + 2),
                ifact.clone(),
            ));
            term = term.sub(&BigReal::from_rational(&w, prec).mul(&t(k - j - 1)));
        }
        Ok(term.div_u64(i as u64 + 1))
    })?;
    Ok(SerGamma { value: partial.add(&remainder), partial, remainder, tail_terms: rep.terms })
}

/// ln(1 + e^z) without overflow on either side.
fn softplus(z: &BigReal) -> BigReal {
    if z.is_sign_negative() {
        z.exp().ln1p()
    } else {
        z.add(&z.neg().exp().ln1p())
    }
}

/// Knessl's integral for the Ser weights:
/// p_{n+1} = int_0^inf du / ((1+u)^n (ln^2 u + pi^2)), n >= 1, evaluated on
/// the whole line after u = e^z with the integrand kept in log space so the
/// (1+u)^n factor can never overflow.
pub fn knessl_p_integral(n: u64, digits: usize) -> Result<BigReal> {
    if n == 0 {
        return Err(Error::domain("knessl_p_integral", "requires n >= 1"));
    }
    let prec = bits_for_digits(digits + 8);
    let pi2 = BigReal::pi(prec).powi(2);
    let opts = QuadOpts::new("knessl_p_integral", eps_for_digits(digits + 4));
    let r = sinh_sinh(prec, &opts, |z| {
        let e = z.sub(&softplus(z).mul_i64(n as i64)).exp();
        Ok(e.div(&z.powi(2).add(&pi2)))
    })?;
    Ok(r.value)
}

/// Large-n form p_{n+1} ~ (1/(n ln^2 n)) (1 - 2 gamma / ln n
/// + (3 gamma^2 - pi^2/2) / ln^2 n).
pub fn knessl_p_asymptotic(n: u64, prec: u32) -> BigReal {
    let g = specfun::euler_gamma(prec);
    let ln_n = BigReal::from_u64(n, prec).ln();
    let a1 = g.mul_i64(-2);
    let a2 = g.mul(&g).mul_i64(3).sub(&BigReal::pi(prec).powi(2).div_u64(2));
    BigReal::one(prec)
        .add(&a1.div(&ln_n))
        .add(&a2.div(&ln_n.powi(2)))
        .div(&ln_n.powi(2).mul_i64(n as i64))
}

/// gamma = int_{-inf}^{inf} e^z ln(1 + e^{-z}) / (z^2 + pi^2) dz, the n-sum
/// of Knessl's weight integrals in closed form.
pub fn euler_gamma_integral(digits: usize) -> Result<BigReal> {
    let prec = bits_for_digits(digits + 8);
    let pi2 = BigReal::pi(prec).powi(2);
    let opts = QuadOpts::new("euler_gamma_integral", eps_for_digits(digits + 4));
    let r = sinh_sinh(prec, &opts, |z| {
        let num = if z.cmp_i64(0) == Ordering::Greater {
            // e^z ln(1 + e^{-z}) = ln1p(w)/w at w = e^{-z}, which tends to 1
            let w = z.neg().exp();
            if w.is_zero() {
                BigReal::one(prec)
            } else {
                w.ln1p().div(&w)
            }
        } else {
            z.exp().mul(&z.neg().add(&z.exp().ln1p()))
        };
        Ok(num.div(&z.powi(2).add(&pi2)))
    })?;
    Ok(r.value)
}
