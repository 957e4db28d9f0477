//! Stieltjes constants through every series route the crate knows: shifted
//! Taylor expansions, zeta-value cascades, an exact tail-resummed form, the
//! large-a asymptotic series, exponentially convergent incomplete-gamma
//! series, derivative formulas, and magnitude bounds. Each route reduces to
//! jet arithmetic about s = 1, so a single cross-table can compare them all
//! against the Euler-Maclaurin reference at matched precision.

use crate::combinatorics::{bernoulli, factorial, poch_jet};
use crate::error::{Error, Result};
use crate::hurwitz::{aux_constants, neg_pow_jet, Zeta};
use crate::mp::jet::Jet;
use crate::mp::real::{bits_for_digits, eps_for_digits, BigReal};
use crate::mp::sum::{sum_series, SumOpts};
use crate::specfun;
use rug::Float;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    EulerMaclaurin,
    TaylorShift,
    CascadeWhole,
    CascadeHalf,
    CascadeHalfAlt,
    TailZeta,
    Asymptotic,
    ExpSeries,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::EulerMaclaurin,
        Method::TaylorShift,
        Method::CascadeWhole,
        Method::CascadeHalf,
        Method::CascadeHalfAlt,
        Method::TailZeta,
        Method::Asymptotic,
        Method::ExpSeries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::EulerMaclaurin => "euler-maclaurin",
            Method::TaylorShift => "taylor-shift",
            Method::CascadeWhole => "cascade-whole",
            Method::CascadeHalf => "cascade-half",
            Method::CascadeHalfAlt => "cascade-half-alt",
            Method::TailZeta => "tail-zeta",
            Method::Asymptotic => "asymptotic",
            Method::ExpSeries => "exp-series",
        }
    }

    pub fn from_name(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == s)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct StieltjesValue {
    pub k: usize,
    pub method: Method,
    pub value: BigReal,
    pub terms: usize,
}

/// gamma_k = (-1)^k k! * (coefficient of t^k in the regular part at s = 1+t).
fn reg_to_gamma(k: usize, reg: &Jet) -> BigReal {
    let mut g = reg.coeff(k).mul(&BigReal::from_integer(&factorial(k as u32), reg.prec()));
    if k % 2 == 1 {
        g = g.neg();
    }
    g
}

/// Regular part of x^{-t}/t = 1/t + sum_m (-ln x)^{m+1} t^m / (m+1)!.
fn pole_split_reg(x: &BigReal, order: usize) -> Jet {
    let l = x.ln().neg();
    let mut c = Vec::with_capacity(order + 1);
    let mut p = l.clone();
    for m in 0..=order {
        c.push(p.clone());
        p = p.mul(&l).div_u64(m as u64 + 2);
    }
    Jet::from_coeffs(c)
}

/// Wilton's addition series zeta(s, a+b) = zeta(s, a)
/// + sum_{j>=1} ((-b)^j / j!) (s)_j zeta(s+j, a), valid for |b| < a.
/// Returns the regular jet at s = 1 + t (the pole passes through unchanged).
fn wilton_reg(z: &Zeta, order: usize, a: &BigReal, b: &BigReal) -> Result<(Jet, usize)> {
    let prec = z.prec();
    if b.abs().cmp_value(&a.abs()) != Ordering::Less {
        return Err(Error::domain("wilton_shift", "requires |b| < |a|"));
    }
    let one = BigReal::one(prec);
    let base = z.jet(&one, a, order)?;
    let neg_b = b.neg();
    let mut w = BigReal::one(prec);
    let mut poch = Jet::constant(one, order);
    let opts = SumOpts::new("wilton_shift", eps_for_digits(z.digits()));
    let (reg, rep) = sum_series(base.reg, &opts, |idx| {
        let j = idx as u64 + 1;
        w = w.mul(&neg_b).div_u64(j);
        poch = poch.mul_affine(&BigReal::from_u64(j, prec));
        let zj = z.jet(&BigReal::from_u64(j + 1, prec), a, order)?;
        Ok(poch.mul(&zj.reg).scale(&w))
    })?;
    Ok((reg, rep.terms))
}

/// sum_{k>=1} weight(k) (s)_{stride k} zeta(s + stride k, a) as a jet at
/// s = 1 + t. The Pochhammer factor grows incrementally, relying on the sum
/// driver calling the term closure with consecutive indices.
fn zeta_family(
    z: &Zeta,
    order: usize,
    a: &BigReal,
    stride: usize,
    opts: &SumOpts,
    mut weight: impl FnMut(usize) -> BigReal,
) -> Result<(Jet, usize)> {
    let prec = z.prec();
    let mut poch = Jet::constant(BigReal::one(prec), order);
    let mut j = 0u64;
    let (s, rep) = sum_series(Jet::zero(order, prec), opts, |idx| {
        let k = idx + 1;
        while j < (stride * k) as u64 {
            j += 1;
            poch = poch.mul_affine(&BigReal::from_u64(j, prec));
        }
        let zj = z.jet(&BigReal::from_u64(j + 1, prec), a, order)?;
        Ok(poch.mul(&zj.reg).scale(&weight(k)))
    })?;
    Ok((s, rep.terms))
}

/// zeta(s,a) ~ a^{1-s}/(s-1) + a^{-s}/2 + sum_r B_{2r}/(2r)! (s)_{2r-1}
/// a^{1-s-2r}, truncated at the smallest term; the omitted term is charged
/// to every coefficient, so small a reports its accuracy floor honestly.
fn asymptotic_reg(z: &Zeta, order: usize, a: &BigReal) -> Result<(Jet, usize)> {
    let prec = z.prec();
    if a.cmp_i64(0) != Ordering::Greater {
        return Err(Error::domain("asymptotic", "requires a > 0"));
    }
    let one = BigReal::one(prec);
    let eps = eps_for_digits(z.digits() + 6);
    let mut reg = pole_split_reg(a, order);
    reg.add_assign(&neg_pow_jet(a, &one, order).scale(&one.div_u64(2)));
    let e_jet = neg_pow_jet(a, &BigReal::zero(prec), order);
    let a2_inv = a.powi(-2);
    let mut poch = Jet::variable(one.clone(), order);
    let mut inv_fact = one.div_u64(2);
    let mut apow = a2_inv.clone();
    let mut prev = Float::with_val(32, f64::INFINITY);
    let mut r = 1usize;
    loop {
        let v = BigReal::from_rational(&bernoulli(2 * r), prec).mul(&inv_fact).mul(&apow);
        let term = poch.mul(&e_jet).scale(&v);
        let mag = term.max_abs_coeff();
        if mag <= eps || mag >= prev || r > 800 {
            let full = mag <= eps;
            let mut rem = mag;
            rem <<= 1;
            reg.add_err_all(&rem);
            return Ok((reg, if full { r } else { r - 1 }));
        }
        reg.add_assign(&term);
        prev = mag;
        poch = poch
            .mul_affine(&BigReal::from_u64(2 * r as u64, prec))
            .mul_affine(&BigReal::from_u64(2 * r as u64 + 1, prec));
        inv_fact = inv_fact.div_u64((2 * r as u64 + 1) * (2 * r as u64 + 2));
        apow = apow.mul(&a2_inv);
        r += 1;
    }
}

fn method_reg_jet(z: &Zeta, method: Method, order: usize, a: &BigReal) -> Result<(Jet, usize)> {
    let prec = z.prec();
    let one = BigReal::one(prec);
    match method {
        Method::EulerMaclaurin => {
            let zj = z.jet(&one, a, order)?;
            Ok((zj.reg, zj.n_used + zj.m_used))
        }
        // Expand at a + 1 and shift back by b = -1; |b| < a + 1 holds for
        // every a > 0, unlike the upward shift.
        Method::TaylorShift => wilton_reg(z, order, &(a + &one), &one.neg()),
        Method::CascadeWhole => {
            let x = a - &one;
            if x.cmp_i64(0) != Ordering::Greater {
                return Err(Error::domain("cascade_whole", "requires a > 1"));
            }
            // zeta(s,a) = (a-1)^{1-s}/(s-1) - sum_k (s)_k zeta(s+k,a)/(k+1)!
            let mut reg = pole_split_reg(&x, order);
            let opts = SumOpts::new("cascade_whole", eps_for_digits(z.digits()));
            let mut w = BigReal::from_i64(-1, prec);
            let (fam, terms) = zeta_family(z, order, a, 1, &opts, |k| {
                w = w.div_u64(k as u64 + 1);
                w.clone()
            })?;
            reg.add_assign(&fam);
            Ok((reg, terms))
        }
        Method::CascadeHalf => {
            let x = a - &one.div_u64(2);
            if x.cmp_i64(0) != Ordering::Greater {
                return Err(Error::domain("cascade_half", "requires a > 1/2"));
            }
            // zeta(s,a) = (a-1/2)^{1-s}/(s-1)
            //           - sum_k (s)_{2k} zeta(s+2k,a)/(4^k (2k+1)!)
            let mut reg = pole_split_reg(&x, order);
            let opts = SumOpts::new("cascade_half", eps_for_digits(z.digits()));
            let mut w = BigReal::from_i64(-1, prec);
            let (fam, terms) = zeta_family(z, order, a, 2, &opts, |k| {
                let k = k as u64;
                w = w.div_u64(4 * 2 * k * (2 * k + 1));
                w.clone()
            })?;
            reg.add_assign(&fam);
            Ok((reg, terms))
        }
        Method::CascadeHalfAlt => {
            let x = a - &one.div_u64(2);
            if x.cmp_i64(0) != Ordering::Greater {
                return Err(Error::domain("cascade_half_alt", "requires a > 1/2"));
            }
            // zeta(s,a) = (a-1/2)^{1-s}/(s-1)
            //           + sum_k (-1)^k (s)_{2k} zeta(s+2k,a)/(4^k (2k+1)!)
            //           - 2 sum_k (s)_{4k} zeta(s+4k,a)/(16^k (4k+1)!)
            let mut reg = pole_split_reg(&x, order);
            let opts = SumOpts::new("cascade_half_alt", eps_for_digits(z.digits()));
            let mut wa = BigReal::one(prec);
            let (fam_a, ta) = zeta_family(z, order, a, 2, &opts, |k| {
                let k = k as u64;
                wa = wa.div_u64(4 * 2 * k * (2 * k + 1)).neg();
                wa.clone()
            })?;
            reg.add_assign(&fam_a);
            let mut wb = BigReal::from_i64(-2, prec);
            let (fam_b, tb) = zeta_family(z, order, a, 4, &opts, |k| {
                let k = k as u64;
                wb = wb.div_u64(16 * (4 * k - 2) * (4 * k - 1)).div_u64(4 * k * (4 * k + 1));
                wb.clone()
            })?;
            reg.add_assign(&fam_b);
            Ok((reg, ta + tb))
        }
        Method::TailZeta => {
            // Exact for every block size N:
            // zeta(s,a) = sum_{n<=N} (n+a)^{-s} + (N+a)^{1-s}/(s-1)
            //           - sum_r (s)_r zeta(s+r, a+N+1)/(r+1)!
            let nn = 10 + z.digits() / 4;
            let mut reg = Jet::zero(order, prec);
            for n in 0..=nn {
                let base = a + &BigReal::from_u64(n as u64, prec);
                reg.add_assign(&neg_pow_jet(&base, &one, order));
            }
            reg.add_assign(&pole_split_reg(&(a + &BigReal::from_u64(nn as u64, prec)), order));
            let a_tail = a + &BigReal::from_u64(nn as u64 + 1, prec);
            let opts = SumOpts::new("tail_zeta", eps_for_digits(z.digits()));
            let mut w = BigReal::from_i64(-1, prec);
            let (fam, terms) = zeta_family(z, order, &a_tail, 1, &opts, |k| {
                w = w.div_u64(k as u64 + 1);
                w.clone()
            })?;
            reg.add_assign(&fam);
            Ok((reg, nn + 1 + terms))
        }
        Method::Asymptotic => asymptotic_reg(z, order, a),
        Method::ExpSeries => {
            Err(Error::domain("exp_series", "no jet form; only k <= 1 at a = 1"))
        }
    }
}

pub fn gamma_by_method(z: &Zeta, method: Method, k: usize, a: &BigReal) -> Result<StieltjesValue> {
    if method == Method::ExpSeries {
        if a.cmp_i64(1) != Ordering::Equal {
            return Err(Error::domain("exp_series", "only defined at a = 1"));
        }
        return match k {
            0 => {
                let e = exp_series_euler(z.digits())?;
                Ok(StieltjesValue {
                    k,
                    method,
                    value: e.gamma_half.mul_i64(2),
                    terms: e.erfc_terms + e.ei_terms,
                })
            }
            1 => gamma1_exp_series(z.digits()),
            _ => Err(Error::domain("exp_series", "only k <= 1 is available")),
        };
    }
    let (reg, terms) = method_reg_jet(z, method, k, a)?;
    Ok(StieltjesValue { k, method, value: reg_to_gamma(k, &reg), terms })
}

/// gamma_0 .. gamma_order from a single jet evaluation of the method.
pub fn gamma_profile(
    z: &Zeta,
    method: Method,
    order: usize,
    a: &BigReal,
) -> Result<Vec<StieltjesValue>> {
    let (reg, terms) = method_reg_jet(z, method, order, a)?;
    Ok((0..=order)
        .map(|k| StieltjesValue { k, method, value: reg_to_gamma(k, &reg), terms })
        .collect())
}

/// Jet-capable methods expected to reach full working precision at this a.
pub fn methods_for(a: &BigReal, digits: usize) -> Vec<Method> {
    let af = a.to_f64();
    let mut v = vec![Method::EulerMaclaurin, Method::TaylorShift, Method::TailZeta];
    if af > 1.1 {
        v.push(Method::CascadeWhole);
    }
    if af > 0.6 {
        v.push(Method::CascadeHalf);
        v.push(Method::CascadeHalfAlt);
    }
    // optimal truncation bottoms out near e^{-2 pi a}
    if 2.7 * af > (digits + 4) as f64 {
        v.push(Method::Asymptotic);
    }
    v
}

/// gamma_k(a + b) through the addition series, |b| < a.
pub fn gamma_wilton_shift(z: &Zeta, k: usize, a: &BigReal, b: &BigReal) -> Result<BigReal> {
    let (reg, _) = wilton_reg(z, k, a, b)?;
    Ok(reg_to_gamma(k, &reg))
}

/// j-th derivative of gamma_ell with respect to a:
/// d^j/da^j zeta(s,a) = (-1)^j (s)_j zeta(s+j, a), so for j >= 1 the jet
/// (s)_j zeta(s+j, a) at s = 1+t holds every gamma_ell^(j).
pub fn gamma_deriv(z: &Zeta, ell: usize, j: usize, a: &BigReal) -> Result<BigReal> {
    if j == 0 {
        return z.stieltjes(ell, a);
    }
    let prec = z.prec();
    let poch = poch_jet(&BigReal::one(prec), j, ell);
    let zj = z.jet(&BigReal::from_u64(j as u64 + 1, prec), a, ell)?;
    let mut g = reg_to_gamma(ell, &poch.mul(&zj.reg));
    if j % 2 == 1 {
        g = g.neg();
    }
    Ok(g)
}

/// gamma_1'(1) = zeta(2) [gamma + ln(2 pi) + 12 zeta'(-1)], a closed form
/// independent of the derivative jet at s = 2.
pub fn gamma1_prime_closed(digits: usize) -> Result<BigReal> {
    let z = Zeta::new(digits);
    let prec = z.prec();
    let aux = aux_constants(&z)?;
    let pi = BigReal::pi(prec);
    let zeta2 = pi.mul(&pi).div_u64(6);
    let s = specfun::euler_gamma(prec)
        .add(&pi.mul_i64(2).ln())
        .add(&aux.zeta_prime_minus_1.mul_i64(12));
    Ok(zeta2.mul(&s))
}

#[derive(Clone, Debug)]
pub struct Gamma1Max {
    pub a_star: BigReal,
    pub gamma1: BigReal,
    pub iterations: usize,
}

/// Locates the unique maximum of gamma_1(a): bisection on
/// gamma_1'(a) = zeta'(2,a) + zeta(2,a) into Newton's basin, then Newton
/// steps with gamma_1''(a) = -[2 zeta'(3,a) + 3 zeta(3,a)].
pub fn find_gamma1_max(digits: usize) -> Result<Gamma1Max> {
    let z = Zeta::new(digits + 5);
    let prec = z.prec();
    let two = BigReal::from_u64(2, prec);
    let three = BigReal::from_u64(3, prec);
    let g1p = |x: &BigReal| -> Result<BigReal> {
        let j = z.jet(&two, x, 1)?;
        Ok(j.reg.coeff(1).add(j.reg.coeff(0)))
    };
    let g1pp = |x: &BigReal| -> Result<BigReal> {
        let j = z.jet(&three, x, 1)?;
        Ok(j.reg.coeff(1).mul_i64(2).add(&j.reg.coeff(0).mul_i64(3)).neg())
    };
    let mut lo = BigReal::one(prec);
    let mut hi = two.clone();
    for _ in 0..25 {
        let mid = lo.add(&hi).div_u64(2);
        if g1p(&mid)?.is_sign_negative() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut x = lo.add(&hi).div_u64(2);
    let tol = eps_for_digits(digits + 2);
    let mut iterations = 25;
    for _ in 0..60 {
        let step = g1p(&x)?.div(&g1pp(&x)?);
        x = x.sub(&step);
        iterations += 1;
        let rel = step.abs_f() / x.abs_f();
        if rel < tol {
            let gamma1 = z.stieltjes(1, &x)?;
            return Ok(Gamma1Max { a_star: x, gamma1, iterations });
        }
    }
    Err(Error::no_conv("gamma1_max", "Newton iteration failed to settle"))
}

#[derive(Clone, Debug)]
pub struct ExpSeriesEuler {
    pub gamma_half: BigReal,
    /// The pair of exponentially small sums added to ln(4 pi)/2 - 1.
    pub correction: BigReal,
    pub erfc_terms: usize,
    pub ei_terms: usize,
}

/// gamma/2 = sum_n erfc(sqrt(pi) n)/n - sum_n Ei(-pi n^2) - 1 + ln(4 pi)/2,
/// with summands falling off like e^{-pi n^2}.
pub fn exp_series_euler(digits: usize) -> Result<ExpSeriesEuler> {
    let prec = bits_for_digits(digits + 10);
    let pi = BigReal::pi(prec);
    let sqrt_pi = pi.sqrt();
    let zero = BigReal::zero(prec);
    let opts = SumOpts::new("exp_series_euler", eps_for_digits(digits + 4));
    let (c_erfc, r1) = sum_series(zero.clone(), &opts, |i| {
        let n = i as u64 + 1;
        Ok(specfun::erfc(&sqrt_pi.mul(&BigReal::from_u64(n, prec))).div_u64(n))
    })?;
    let (c_ei, r2) = sum_series(zero, &opts, |i| {
        let n = (i + 1) as i64;
        specfun::ei(&pi.mul_i64(n * n).neg())
    })?;
    let correction = c_erfc.sub(&c_ei);
    let gamma_half =
        correction.sub(&BigReal::one(prec)).add(&pi.mul_i64(4).ln().div_u64(2));
    Ok(ExpSeriesEuler { gamma_half, correction, erfc_terms: r1.terms, ei_terms: r2.terms })
}

/// gamma_1 from the incomplete-gamma expansion of the completed zeta
/// function: hypergeometric 2F2/3F3 summands with e^{-pi n^2} decay.
pub fn gamma1_exp_series(digits: usize) -> Result<StieltjesValue> {
    let prec = bits_for_digits(digits + 14);
    let pi = BigReal::pi(prec);
    let one = BigReal::one(prec);
    let half = one.div_u64(2);
    let three_half = BigReal::from_u64(3, prec).div_u64(2);
    let g = specfun::euler_gamma(prec);
    let psi_half = g.neg().sub(&BigReal::ln2(prec).mul_i64(2));
    let ln_pi = pi.ln();
    let opts = SumOpts::new("gamma1_exp_series", eps_for_digits(digits + 4));

    // sum_n (1/n) [4n 2F2(1/2,1/2;3/2,3/2;-n^2 pi) + psi(1/2) - 2 ln n
    //              - erf(n sqrt(pi)) ln pi]
    let (s1, r1) = sum_series(BigReal::zero(prec), &opts, |i| {
        let n = i as u64 + 1;
        let nb = BigReal::from_u64(n, prec);
        let x = pi.mul_i64((n * n) as i64).neg();
        let f22 = specfun::pfq(
            &[half.clone(), half.clone()],
            &[three_half.clone(), three_half.clone()],
            &x,
        )?;
        let bracket = f22
            .mul(&nb)
            .mul_i64(4)
            .add(&psi_half)
            .sub(&nb.ln().mul_i64(2))
            .sub(&specfun::erf(&nb.mul(&pi.sqrt())).mul(&ln_pi));
        Ok(bracket.div_u64(n))
    })?;

    // sum_n [gamma^2/4 + pi^2/24 - (n^2 pi / 2) 3F3(1,1,1;2,2,2;-n^2 pi)
    //        + (1/4) ln(n^2 pi)(2 gamma + ln(n^2 pi)) + (ln pi / 2) Ei(-n^2 pi)]
    let g2_pi2 = g.mul(&g).div_u64(4).add(&pi.mul(&pi).div_u64(24));
    let (s2, r2) = sum_series(BigReal::zero(prec), &opts, |i| {
        let n = (i + 1) as i64;
        let n2pi = pi.mul_i64(n * n);
        let f33 = specfun::pfq(
            &[one.clone(), one.clone(), one.clone()],
            &[
                BigReal::from_u64(2, prec),
                BigReal::from_u64(2, prec),
                BigReal::from_u64(2, prec),
            ],
            &n2pi.neg(),
        )?;
        let lx = n2pi.ln();
        Ok(g2_pi2
            .sub(&n2pi.mul(&f33).div_u64(2))
            .add(&lx.mul(&g.mul_i64(2).add(&lx)).div_u64(4))
            .add(&ln_pi.mul(&specfun::ei(&n2pi.neg())?).div_u64(2)))
    })?;

    let value = pi
        .mul(&pi)
        .div_u64(16)
        .add(&g.div_u64(2).mul(&psi_half))
        .add(&psi_half.mul(&psi_half).div_u64(8))
        .sub(&one)
        .add(&ln_pi.div_u64(2))
        .sub(&ln_pi.mul(&ln_pi).div_u64(8))
        .sub(&s1.div_u64(2))
        .add(&s2);
    Ok(StieltjesValue { k: 1, method: Method::ExpSeries, value, terms: r1.terms + r2.terms })
}

#[derive(Clone, Debug)]
pub struct BoundRow {
    pub n: usize,
    /// a = a_tenths / 10
    pub a_tenths: usize,
    pub c_abs: BigReal,
    /// e n! / (sqrt(n) 2^n)
    pub bound_factorial: BigReal,
    /// e n^n / (2e)^n, the sharper constant behind the factorial form
    pub bound_power: BigReal,
    /// [3 + (-1)^n] (2n)! / (n^{n+1} (2 pi)^n)
    pub bound_zw: BigReal,
    pub ok_factorial: bool,
    pub ok_zw: bool,
}

/// |C_n(a)| = |gamma_n(a) - ln^n(a)/a| = |gamma_n(a+1)| on 0 < a <= 1,
/// checked against the classical magnitude bounds.
pub fn bounds_report(digits: usize, n_max: usize) -> Result<Vec<BoundRow>> {
    // the tracked error of an order-n jet coefficient inflates by roughly a
    // factor 10^n (Bernoulli-tail cancellation), so certify the comparisons
    // with n_max extra guard digits regardless of the requested display digits
    let z = Zeta::new(digits.max(n_max + 4));
    let prec = z.prec();
    let e = BigReal::one(prec).exp();
    let two_pi = BigReal::pi(prec).mul_i64(2);
    let two_e = e.mul_i64(2);
    let mut rows = Vec::with_capacity(10 * n_max);
    for tenths in 1..=10usize {
        let a = z.real_from_rational(tenths as i64, 10);
        let le = z.laurent(&a.add(&BigReal::one(prec)), n_max)?;
        for n in 1..=n_max {
            let c_abs = le.gamma(n).abs();
            let nb = BigReal::from_u64(n as u64, prec);
            let bound_factorial = e
                .mul(&BigReal::from_integer(&factorial(n as u32), prec))
                .div(&nb.sqrt())
                .shl(-(n as i32));
            let bound_power = e.mul(&nb.div(&two_e).powi(n as i32));
            let bound_zw = BigReal::from_integer(&factorial(2 * n as u32), prec)
                .mul_i64(if n % 2 == 0 { 4 } else { 2 })
                .div(&nb.powi(n as i32 + 1))
                .div(&two_pi.powi(n as i32));
            let hi = c_abs.abs_f() + c_abs.err().clone();
            let ok_factorial = hi <= *bound_factorial.value();
            let ok_zw = hi <= *bound_zw.value();
            rows.push(BoundRow {
                n,
                a_tenths: tenths,
                c_abs,
                bound_factorial,
                bound_power,
                bound_zw,
                ok_factorial,
                ok_zw,
            });
        }
    }
    Ok(rows)
}
