//! Lerch zeta function at rational phase, reduced to weighted Hurwitz zeta
//! jets: L(p/q, s, a) = q^{-s} sum_r e^{2 pi i p r / q} zeta(s, (a+r)/q).
//! For non-integral phase the pole residues cancel and L is regular at
//! s = 1, where its Taylor coefficients generalize the Stieltjes constants;
//! the same decomposition at s = 0 yields polylogarithm derivatives and the
//! digamma/gamma_1 reflection identities, and at integral weights it sums
//! Dirichlet L-series.

use crate::combinatorics::poch_jet;
use crate::error::{Error, Result};
use crate::hurwitz::{neg_pow_jet, Zeta};
use crate::mp::jet::Jet;
use crate::mp::real::{eps_for_digits, BigReal};
use crate::mp::sum::{sum_series, SumOpts, Summand};
use crate::specfun;
use rug::Float;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct LerchJet {
    pub re: Jet,
    pub im: Jet,
}

impl Summand for LerchJet {
    fn accumulate(&mut self, term: &Self) {
        self.re.add_assign(&term.re);
        self.im.add_assign(&term.im);
    }
    fn term_mag(term: &Self) -> Float {
        term.re.max_abs_coeff().max(&term.im.max_abs_coeff())
    }
    fn mag(&self) -> Float {
        self.re.max_abs_coeff().max(&self.im.max_abs_coeff())
    }
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn widen_err(&mut self, extra: &Float) {
        self.re.add_err_all(extra);
        self.im.add_err_all(extra);
    }
}

/// Jet of L(p/q, s0 + t, a). At s0 = 1 the zeta poles carry weights summing
/// to zero for non-integral p/q; the numeric residue defect is charged to
/// the error bounds instead of being forgotten.
pub fn lerch_jet_at(
    z: &Zeta,
    p: i64,
    q: u64,
    s0: &BigReal,
    a: &BigReal,
    order: usize,
) -> Result<LerchJet> {
    if q == 0 {
        return Err(Error::domain("lerch", "phase denominator must be positive"));
    }
    let prec = z.prec();
    let pm = p.rem_euclid(q as i64) as u64;
    let at_pole = s0.cmp_i64(1) == Ordering::Equal;
    if at_pole && pm == 0 {
        return Err(Error::domain("lerch", "integral phase is singular at s = 1"));
    }
    let two_pi = BigReal::pi(prec).mul_i64(2);
    let mut re = Jet::zero(order, prec);
    let mut im = Jet::zero(order, prec);
    let mut res_re = BigReal::zero(prec);
    let mut res_im = BigReal::zero(prec);
    for r in 0..q {
        let frac = ((pm as u128 * r as u128) % q as u128) as i64;
        let theta = two_pi.mul(&z.real_from_rational(frac, q));
        let (c, s) = (theta.cos(), theta.sin());
        let ar = a.add(&BigReal::from_u64(r, prec)).div_u64(q);
        let zj = z.jet(s0, &ar, order)?;
        re.add_assign(&zj.reg.scale(&c));
        im.add_assign(&zj.reg.scale(&s));
        if at_pole {
            res_re = res_re.add(&c);
            res_im = res_im.add(&s);
        }
    }
    let qjet = neg_pow_jet(&BigReal::from_u64(q, prec), s0, order);
    let mut out = LerchJet { re: re.mul(&qjet), im: im.mul(&qjet) };
    if at_pole {
        // sum_r e^{2 pi i p r / q} = 0 exactly; charge the rounding residue
        let slack = res_re.abs_f() + res_im.abs_f();
        out.widen_err(&slack);
    }
    Ok(out)
}

pub fn lerch_jet(z: &Zeta, p: i64, q: u64, a: &BigReal, order: usize) -> Result<LerchJet> {
    lerch_jet_at(z, p, q, &BigReal::one(z.prec()), a, order)
}

/// Taylor coefficients at s = 1: L(x, s, a) = sum_n ((-1)^n / n!)
/// ell_n(x, a) (s-1)^n. Returns (re, im) of ell_n.
pub fn lerch_ell(z: &Zeta, p: i64, q: u64, a: &BigReal, n: usize) -> Result<(BigReal, BigReal)> {
    let lj = lerch_jet(z, p, q, a, n)?;
    Ok((ell_coeff(&lj.re, n), ell_coeff(&lj.im, n)))
}

fn ell_coeff(jet: &Jet, n: usize) -> BigReal {
    let f = BigReal::from_integer(&crate::combinatorics::factorial(n as u32), jet.prec());
    let v = jet.coeff(n).mul(&f);
    if n % 2 == 1 {
        v.neg()
    } else {
        v
    }
}

/// k-th derivative in a: d^k/da^k L(x,s,a) = (-1)^k (s)_k L(x, s+k, a),
/// expanded at s = 1. Returns (re, im) of ell_n^(k).
pub fn lerch_ell_deriv(
    z: &Zeta,
    p: i64,
    q: u64,
    a: &BigReal,
    n: usize,
    k: usize,
) -> Result<(BigReal, BigReal)> {
    if k == 0 {
        return lerch_ell(z, p, q, a, n);
    }
    let prec = z.prec();
    let s0 = BigReal::from_u64(k as u64 + 1, prec);
    let lj = lerch_jet_at(z, p, q, &s0, a, n)?;
    let poch = poch_jet(&BigReal::one(prec), k, n);
    let (re, im) = (poch.mul(&lj.re), poch.mul(&lj.im));
    let (mut vr, mut vi) = (ell_coeff(&re, n), ell_coeff(&im, n));
    if k % 2 == 1 {
        vr = vr.neg();
        vi = vi.neg();
    }
    Ok((vr, vi))
}

/// Klusch's addition series L(x, s, a+xi) = sum_k ((-xi)^k / k!) (s)_k
/// L(x, s+k, a), |xi| < a, as a jet at s = 1.
pub fn lerch_shift(
    z: &Zeta,
    p: i64,
    q: u64,
    a: &BigReal,
    xi: &BigReal,
    order: usize,
) -> Result<(LerchJet, usize)> {
    if xi.abs().cmp_value(&a.abs()) != Ordering::Less {
        return Err(Error::domain("lerch_shift", "requires |xi| < a"));
    }
    let prec = z.prec();
    let base = lerch_jet(z, p, q, a, order)?;
    let neg_xi = xi.neg();
    let mut w = BigReal::one(prec);
    let mut poch = Jet::constant(BigReal::one(prec), order);
    let opts = SumOpts::new("lerch_shift", eps_for_digits(z.digits()));
    let (sum, rep) = sum_series(base, &opts, |idx| {
        let k = idx as u64 + 1;
        w = w.mul(&neg_xi).div_u64(k);
        poch = poch.mul_affine(&BigReal::from_u64(k, prec));
        let lk = lerch_jet_at(z, p, q, &BigReal::from_u64(k + 1, prec), a, order)?;
        Ok(LerchJet { re: poch.mul(&lk.re).scale(&w), im: poch.mul(&lk.im).scale(&w) })
    })?;
    Ok((sum, rep.terms))
}

/// Dirichlet L-series for a real character given by one period:
/// L(s, chi) = m^{-s} sum_{k=1}^m chi(k) zeta(s, k/m), as a jet at s = 1.
/// The character values must sum to zero (non-principal).
pub fn dirichlet_l_jet(z: &Zeta, chi: &[i64], order: usize) -> Result<Jet> {
    let m = chi.len() as u64;
    if m == 0 || chi.iter().sum::<i64>() != 0 {
        return Err(Error::domain("dirichlet_l", "period must sum to zero"));
    }
    let prec = z.prec();
    let one = BigReal::one(prec);
    let mut acc = Jet::zero(order, prec);
    for (i, &c) in chi.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let zj = z.jet(&one, &z.real_from_rational(i as i64 + 1, m), order)?;
        acc.add_assign(&zj.reg.scale(&BigReal::from_i64(c, prec)));
    }
    Ok(acc.mul(&neg_pow_jet(&BigReal::from_u64(m, prec), &one, order)))
}

/// S_j = d^j/ds^j [Li_s(e^{2 pi i p/q}) + Li_s(e^{-2 pi i p/q})] at s = 0,
/// for j = 0..=order, from the phase-conjugate pair (twice the real part).
pub fn li_pair_derivs(z: &Zeta, p: i64, q: u64, order: usize) -> Result<Vec<BigReal>> {
    if q == 0 || p.rem_euclid(q as i64) == 0 {
        return Err(Error::domain("li_pair", "phase must be non-integral"));
    }
    let prec = z.prec();
    // Li_s(e^{2 pi i p/q}) = q^{-s} sum_{r=1}^q e^{2 pi i p r/q} zeta(s, r/q),
    // regular at s = 0
    let two_pi = BigReal::pi(prec).mul_i64(2);
    let zero = BigReal::zero(prec);
    let pm = p.rem_euclid(q as i64) as u64;
    let mut re = Jet::zero(order, prec);
    for r in 1..=q {
        let frac = ((pm as u128 * r as u128) % q as u128) as i64;
        let c = two_pi.mul(&z.real_from_rational(frac, q)).cos();
        let zj = z.jet(&zero, &z.real_from_rational(r as i64, q), order)?;
        re.add_assign(&zj.reg.scale(&c));
    }
    let pair = re.mul(&neg_pow_jet(&BigReal::from_u64(q, prec), &zero, order));
    let mut fact = BigReal::one(prec);
    Ok((0..=order)
        .map(|j| {
            if j > 1 {
                fact = fact.mul_i64(j as i64);
            }
            pair.coeff(j).mul(&fact).mul_i64(2)
        })
        .collect())
}

/// Both sides of the digamma reflection at a = p/q:
/// -ln pi + psi(1/2) - pi cot(pi a) - 2 psi(a) = gamma + ln pi + 2 S_1.
pub fn digamma_reflection(z: &Zeta, p: i64, q: u64) -> Result<(BigReal, BigReal)> {
    let prec = z.prec();
    let pi = BigReal::pi(prec);
    let ln_pi = pi.ln();
    let g = specfun::euler_gamma(prec);
    let a = z.real_from_rational(p, q);
    let theta = pi.mul(&a);
    let cot = theta.cos().div(&theta.sin());
    let psi_half = g.neg().sub(&BigReal::ln2(prec).mul_i64(2));
    let lhs = ln_pi
        .neg()
        .add(&psi_half)
        .sub(&pi.mul(&cot))
        .sub(&specfun::digamma(&a)?.mul_i64(2));
    let s = li_pair_derivs(z, p, q, 1)?;
    let rhs = g.add(&ln_pi).add(&s[1].mul_i64(2));
    Ok((lhs, rhs))
}

/// Both sides of the gamma_1 reflection at a = p/q:
/// gamma_1(a) + gamma_1(1-a) versus the closed form in psi values and the
/// polylogarithm derivatives S_1, S_2 at s = 0.
pub fn gamma1_reflection(z: &Zeta, p: i64, q: u64) -> Result<(BigReal, BigReal)> {
    let prec = z.prec();
    let pi = BigReal::pi(prec);
    let ln_pi = pi.ln();
    let g = specfun::euler_gamma(prec);
    let a = z.real_from_rational(p, q);
    let a1 = z.real_from_rational(q as i64 - p, q);
    let lhs = z.stieltjes(1, &a)?.add(&z.stieltjes(1, &a1)?);
    let psi_half = g.neg().sub(&BigReal::ln2(prec).mul_i64(2));
    let psi_sum = specfun::digamma(&a)?.add(&specfun::digamma(&a1)?);
    let g_lnpi = g.add(&ln_pi);
    let s = li_pair_derivs(z, p, q, 2)?;
    let rhs = pi
        .mul(&pi)
        .div_u64(12)
        .add(&ln_pi.mul(&ln_pi).div_u64(4))
        .sub(&ln_pi.mul(&psi_half).div_u64(2))
        .add(&psi_half.mul(&psi_half).div_u64(4))
        .add(&ln_pi.sub(&psi_half).mul(&psi_sum).div_u64(2))
        .sub(&g_lnpi.mul(&g_lnpi).div_u64(4))
        .sub(&g_lnpi.mul(&s[1]))
        .add(&s[2]);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn df(x: &BigReal, y: &BigReal) -> f64 {
        x.sub(y).abs_f().to_f64()
    }

    #[test]
    fn alternating_zeta_matches_eta_expansion() {
        // L(1/2, s, 1) = eta(s) = (1 - 2^{1-s}) zeta(s)
        let z = Zeta::new(40);
        let prec = z.prec();
        let lj = lerch_jet(&z, 1, 2, &BigReal::one(prec), 3).unwrap();
        assert!(lj.im.max_abs_coeff().to_f64() < 1e-38);
        let l2 = BigReal::ln2(prec);
        let gam = z.laurent(&BigReal::one(prec), 4).unwrap();
        // (ln2 t - ln^2 2 t^2/2 + ...) (1/t + gamma - gamma_1 t + ...)
        let f = |m: usize| {
            let mut v = l2.powi(m as i32).div(&BigReal::from_integer(
                &crate::combinatorics::factorial(m as u32),
                prec,
            ));
            if m % 2 == 0 {
                v = v.neg();
            }
            v
        };
        for n in 0..=3usize {
            let mut want = f(n + 1); // pole term 1/t
            for m in 1..=n {
                let mut gk = gam.gamma(n - m).div(&BigReal::from_integer(
                    &crate::combinatorics::factorial((n - m) as u32),
                    prec,
                ));
                if (n - m) % 2 == 1 {
                    gk = gk.neg();
                }
                want = want.add(&f(m).mul(&gk));
            }
            assert!(df(lj.re.coeff(n), &want) < 1e-36, "coeff {n}");
        }
    }

    #[test]
    fn ell_closed_forms_at_half_phase() {
        let z = Zeta::new(40);
        let prec = z.prec();
        let a = z.real(0.75);
        let ah = a.div_u64(2);
        let bh = a.add(&BigReal::one(prec)).div_u64(2);
        let l2 = BigReal::ln2(prec);
        let dpsi = specfun::digamma(&bh).unwrap().sub(&specfun::digamma(&ah).unwrap());
        let (e0, i0) = lerch_ell(&z, 1, 2, &a, 0).unwrap();
        assert!(i0.abs_f().to_f64() < 1e-37);
        assert!(df(&e0, &dpsi.div_u64(2)) < 1e-36);
        let dg1 = z.stieltjes(1, &ah).unwrap().sub(&z.stieltjes(1, &bh).unwrap());
        let (e1, _) = lerch_ell(&z, 1, 2, &a, 1).unwrap();
        let want1 = l2.mul(&dpsi).add(&dg1).div_u64(2);
        assert!(df(&e1, &want1) < 1e-36, "{e1} vs {want1}");
        let dg2 = z.stieltjes(2, &ah).unwrap().sub(&z.stieltjes(2, &bh).unwrap());
        let (e2, _) = lerch_ell(&z, 1, 2, &a, 2).unwrap();
        let want2 = l2.mul(&l2).mul(&dpsi).add(&l2.mul(&dg1).mul_i64(2)).add(&dg2).div_u64(2);
        assert!(df(&e2, &want2) < 1e-35, "{e2} vs {want2}");
    }

    #[test]
    fn quarter_phase_has_genuine_imaginary_part() {
        // L(1/4, s, a) = 4^{-s}{zeta(s,a/4) - zeta(s,(a+2)/4)
        //                + i [zeta(s,(a+1)/4) - zeta(s,(a+3)/4)]}
        let z = Zeta::new(35);
        let prec = z.prec();
        let a = z.real(1.0);
        let lj = lerch_jet(&z, 1, 4, &a, 1).unwrap();
        let quarter = |k: i64| z.jet(&BigReal::one(prec), &z.real_from_rational(k, 4), 1).unwrap();
        let re_want = quarter(1).reg.sub(&quarter(3).reg);
        let im_want = quarter(2).reg.sub(&quarter(4).reg);
        let qjet = neg_pow_jet(&BigReal::from_u64(4, prec), &BigReal::one(prec), 1);
        let re_want = re_want.mul(&qjet);
        let im_want = im_want.mul(&qjet);
        for n in 0..=1usize {
            assert!(df(lj.re.coeff(n), re_want.coeff(n)) < 1e-33);
            assert!(df(lj.im.coeff(n), im_want.coeff(n)) < 1e-33);
        }
        assert!(lj.im.coeff(0).abs_f().to_f64() > 0.1);
    }

    #[test]
    fn klusch_shift_agrees_with_direct() {
        let z = Zeta::new(35);
        let a = z.real(1.0);
        let xi = z.real(0.25);
        let (shifted, terms) = lerch_shift(&z, 1, 3, &a, &xi, 2).unwrap();
        let direct = lerch_jet(&z, 1, 3, &z.real(1.25), 2).unwrap();
        for n in 0..=2usize {
            assert!(df(shifted.re.coeff(n), direct.re.coeff(n)) < 1e-32, "re {n}");
            assert!(df(shifted.im.coeff(n), direct.im.coeff(n)) < 1e-32, "im {n}");
        }
        assert!(terms > 10);
    }

    #[test]
    fn ell_derivative_matches_polygamma() {
        // ell_0'(1/2, a) = (1/4)[psi'((1+a)/2) - psi'(a/2)]
        let z = Zeta::new(35);
        let a = z.real(1.5);
        let (d, di) = lerch_ell_deriv(&z, 1, 2, &a, 0, 1).unwrap();
        let want = specfun::polygamma(1, &z.real(1.25))
            .unwrap()
            .sub(&specfun::polygamma(1, &z.real(0.75)).unwrap())
            .div_u64(4);
        assert!(di.abs_f().to_f64() < 1e-32);
        assert!(df(&d, &want) < 1e-32, "{d} vs {want}");
    }

    #[test]
    fn dirichlet_l_values() {
        let z = Zeta::new(40);
        let prec = z.prec();
        let pi = BigReal::pi(prec);
        let l4 = dirichlet_l_jet(&z, &[1, 0, -1, 0], 1).unwrap();
        assert!(df(l4.coeff(0), &pi.div_u64(4)) < 1e-38);
        let l3 = dirichlet_l_jet(&z, &[1, -1, 0], 1).unwrap();
        let want = pi.div(&BigReal::from_u64(27, prec).sqrt());
        assert!(df(l3.coeff(0), &want) < 1e-38);
        assert!(dirichlet_l_jet(&z, &[1, 1], 1).is_err());
    }

    #[test]
    fn digamma_reflection_identity() {
        let z = Zeta::new(40);
        let (lhs, rhs) = digamma_reflection(&z, 1, 2).unwrap();
        // at a = 1/2 both sides reduce to gamma - ln pi + 2 ln 2
        let prec = z.prec();
        let closed = specfun::euler_gamma(prec)
            .sub(&BigReal::pi(prec).ln())
            .add(&BigReal::ln2(prec).mul_i64(2));
        assert!(df(&lhs, &closed) < 1e-36);
        assert!(df(&rhs, &closed) < 1e-36, "{rhs} vs {closed}");
        let (l3, r3) = digamma_reflection(&z, 1, 3).unwrap();
        assert!(df(&l3, &r3) < 1e-34, "{l3} vs {r3}");
    }

    #[test]
    fn gamma1_reflection_identity() {
        let z = Zeta::new(40);
        let (lhs, rhs) = gamma1_reflection(&z, 1, 3).unwrap();
        assert!(df(&lhs, &rhs) < 1e-32, "{lhs} vs {rhs}");
        let (l4, r4) = gamma1_reflection(&z, 1, 4).unwrap();
        assert!(df(&l4, &r4) < 1e-32, "{l4} vs {r4}");
    }
}
