use crate::combinatorics::{bernoulli, factorial};
use crate::error::{Error, Result};
use crate::mp::jet::Jet;
use crate::mp::quad::{tanh_sinh, QuadOpts};
use crate::mp::real::{bits_for_digits, eps_for_digits, BigReal};
use rug::Float;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;

/// Truncated expansion of zeta(s0 + t, a) in t. When s0 = 1 the simple pole
/// is split off: zeta = pole/t + sum reg[m] t^m.
#[derive(Clone, Debug)]
pub struct ZetaJet {
    pub pole: Option<BigReal>,
    pub reg: Jet,
    pub n_used: usize,
    pub m_used: usize,
}

/// zeta(s, a) = 1/(s-1) + sum_k (-1)^k gamma_k(a) (s-1)^k / k!
#[derive(Clone, Debug)]
pub struct LaurentExpansion {
    pub a: BigReal,
    pub pole: BigReal,
    gammas: Vec<BigReal>,
    pub n_used: usize,
    pub m_used: usize,
}

impl LaurentExpansion {
    pub fn gamma(&self, k: usize) -> &BigReal {
        &self.gammas[k]
    }

    pub fn gammas(&self) -> &[BigReal] {
        &self.gammas
    }
}

type CacheKey = (String, String, usize, u32);

/// Euler-Maclaurin evaluator for Hurwitz zeta jets; the reference every
/// other representation in this crate is validated against.
pub struct Zeta {
    digits: usize,
    prec: u32,
    cache: Mutex<HashMap<CacheKey, ZetaJet>>,
}

impl Zeta {
    pub fn new(digits: usize) -> Self {
        let prec = bits_for_digits(digits + 10);
        Zeta { digits, prec, cache: Mutex::new(HashMap::new()) }
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn real(&self, v: f64) -> BigReal {
        BigReal::from_f64(v, self.prec)
    }

    pub fn real_from_rational(&self, num: i64, den: u64) -> BigReal {
        BigReal::from_rational(&rug::Rational::from((num, den)), self.prec)
    }

    /// zeta(s0 + t, a) to the given jet order, memoized.
    pub fn jet(&self, s0: &BigReal, a: &BigReal, order: usize) -> Result<ZetaJet> {
        if a.cmp_i64(0) != Ordering::Greater {
            return Err(Error::domain("zeta", "a must be positive"));
        }
        let key: CacheKey = (
            s0.to_decimal(self.digits + 10),
            a.to_decimal(self.digits + 10),
            order,
            self.prec,
        );
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let z = self.em_jet(s0, a, order)?;
        self.cache.lock().unwrap().insert(key, z.clone());
        Ok(z)
    }

    pub fn value(&self, s0: &BigReal, a: &BigReal) -> Result<BigReal> {
        let z = self.jet(s0, a, 0)?;
        if z.pole.is_some() {
            return Err(Error::DegeneratePole);
        }
        Ok(z.reg.coeff(0).clone())
    }

    /// Laurent data of zeta(s, a) about s = 1: gamma_k(a) for k = 0..=order.
    pub fn laurent(&self, a: &BigReal, order: usize) -> Result<LaurentExpansion> {
        let one = BigReal::one(self.prec);
        let z = self.jet(&one, a, order)?;
        let pole = z.pole.clone().expect("s0 = 1 always carries the pole");
        let mut gammas = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut g = z.reg.coeff(k).mul(&BigReal::from_integer(&factorial(k as u32), self.prec));
            if k % 2 == 1 {
                g = g.neg();
            }
            gammas.push(g);
        }
        Ok(LaurentExpansion { a: a.clone(), pole, gammas, n_used: z.n_used, m_used: z.m_used })
    }

    pub fn stieltjes(&self, k: usize, a: &BigReal) -> Result<BigReal> {
        Ok(self.laurent(a, k)?.gamma(k).clone())
    }

    fn em_jet(&self, s0: &BigReal, a: &BigReal, order: usize) -> Result<ZetaJet> {
        let eps = eps_for_digits(self.digits + 6);
        let s0_mag = s0.to_f64().abs();
        let mut n_terms = ((0.40 * (self.digits + 6) as f64).ceil() as usize).max(8);
        let deficit = (s0_mag + 4.0 - a.to_f64()).max(0.0) as usize;
        n_terms = n_terms.max(deficit);
        for _ in 0..8 {
            if let Some(z) = self.try_em(s0, a, order, n_terms, &eps)? {
                return Ok(z);
            }
            n_terms *= 2;
        }
        Err(Error::no_conv("zeta_em", "correction series kept diverging"))
    }

    fn try_em(
        &self,
        s0: &BigReal,
        a: &BigReal,
        order: usize,
        n_terms: usize,
        eps: &Float,
    ) -> Result<Option<ZetaJet>> {
        let prec = self.prec;
        let s0_is_one = s0.cmp_i64(1) == Ordering::Equal;
        let mut reg = Jet::zero(order, prec);
        // direct block sum_{n<N} (n+a)^{-s}
        for n in 0..n_terms {
            let base = a + &BigReal::from_u64(n as u64, prec);
            reg.add_assign(&neg_pow_jet(&base, s0, order));
        }
        let nb = a + &BigReal::from_u64(n_terms as u64, prec);
        let lnb = nb.ln();
        let e_jet = exp_neg_t_jet(&lnb, order); // e^{-t ln(N+a)}
        let nb_pow_ms0 = nb.pow(&s0.neg()); // (N+a)^{-s0}
        // half term (1/2)(N+a)^{-s}
        reg.add_assign(&e_jet.scale(&nb_pow_ms0.div_u64(2)));
        // boundary term (N+a)^{1-s}/(s-1)
        let pole;
        if s0_is_one {
            // (N+a)^{-t}/t = 1/t + sum_m (-ln(N+a))^{m+1} t^m/(m+1)!
            pole = Some(BigReal::one(prec));
            let neg_l = lnb.neg();
            let mut c = neg_l.clone();
            for m in 0..=order {
                *reg.coeff_mut(m) = reg.coeff(m) + &c;
                c = c.mul(&neg_l).div_u64(m as u64 + 2);
            }
        } else {
            pole = None;
            let sm1 = s0 - &BigReal::one(prec);
            let u = neg_pow_jet(&nb, &sm1, order); // (N+a)^{1-s0} e^{-tL}
            let mut q_prev = BigReal::zero(prec);
            for m in 0..=order {
                let q = (u.coeff(m) - &q_prev).div(&sm1);
                *reg.coeff_mut(m) = reg.coeff(m) + &q;
                q_prev = q;
            }
        }
        // Bernoulli corrections B_{2r}/(2r)! (s)_{2r-1} (N+a)^{-s-2r+1}
        let nb2_inv = nb.mul(&nb).recip();
        let mut v = nb_pow_ms0.div(&nb); // (N+a)^{-s0-1}
        let mut poch = Jet::variable(s0.clone(), order); // (s)_1
        let mut prev_mag = Float::with_val(32, f64::INFINITY);
        let mut r = 1usize;
        loop {
            let coeff = {
                let mut q = bernoulli(2 * r);
                q /= factorial(2 * r as u32);
                BigReal::from_rational(&q, prec)
            };
            let term = poch.mul(&e_jet).scale(&coeff.mul(&v));
            let mag = term.max_abs_coeff();
            if mag <= *eps {
                // remainder soft bound: twice the first omitted correction
                let mut rem = mag;
                rem <<= 1;
                reg.add_err_all(&rem);
                return Ok(Some(ZetaJet { pole, reg, n_used: n_terms, m_used: r - 1 }));
            }
            if mag >= prev_mag || r > 1200 {
                return Ok(None); // asymptotic floor above target: need larger N
            }
            reg.add_assign(&term);
            prev_mag = mag;
            // (s)_{2r-1} -> (s)_{2r+1}
            let f1 = s0 + &BigReal::from_u64(2 * r as u64 - 1, prec);
            let f2 = s0 + &BigReal::from_u64(2 * r as u64, prec);
            poch = poch.mul_affine(&f1).mul_affine(&f2);
            v = v.mul(&nb2_inv);
            r += 1;
        }
    }
}

/// base^{-s0-t} as a jet: base^{-s0} * sum (-ln base)^m t^m / m!
pub(crate) fn neg_pow_jet(base: &BigReal, s0: &BigReal, order: usize) -> Jet {
    let p0 = base.pow(&s0.neg());
    let neg_l = base.ln().neg();
    let mut c = Vec::with_capacity(order + 1);
    c.push(p0);
    for m in 1..=order {
        let next = c[m - 1].mul(&neg_l).div_u64(m as u64);
        c.push(next);
    }
    Jet::from_coeffs(c)
}

/// e^{-tL} as a jet: coeff_m = (-L)^m / m!
fn exp_neg_t_jet(l: &BigReal, order: usize) -> Jet {
    let neg_l = l.neg();
    let mut c = Vec::with_capacity(order + 1);
    c.push(BigReal::one(l.prec()));
    for m in 1..=order {
        let next = c[m - 1].mul(&neg_l).div_u64(m as u64);
        c.push(next);
    }
    Jet::from_coeffs(c)
}

/// zeta^(j)(0, a) by the integral representation
///   zeta(s,a) = a^{1-s}/(s-1) + a^{-s}/2 - s int_a^inf P1(x-a) x^{-s-1} dx,
/// evaluated with panel quadrature plus an Euler-Maclaurin tail. Shares no
/// code with the jet engine's zeta path, so it serves as an independent
/// check on zeta derivatives at s = 0.
pub fn zeta_deriv_at_zero(j: usize, a: &BigReal, digits: usize) -> Result<BigReal> {
    if a.cmp_i64(0) != Ordering::Greater {
        return Err(Error::domain("zeta_deriv_at_zero", "a must be positive"));
    }
    let prec = bits_for_digits(digits + 8);
    let a = a.round_to(prec);
    let lna = a.ln();
    // polynomial block: a sum_{k<=j} (j!/k!) (-1)^{k+1} ln^k a  +  (-1)^j ln^j a / 2
    let mut poly = BigReal::zero(prec);
    let mut lnpow = BigReal::one(prec);
    for k in 0..=j {
        let mut q = rug::Rational::from(factorial(j as u32));
        q /= factorial(k as u32);
        let mut term = BigReal::from_rational(&q, prec).mul(&lnpow);
        if k % 2 == 0 {
            term = term.neg();
        }
        poly = &poly + &term;
        lnpow = lnpow.mul(&lna);
    }
    let mut acc = a.mul(&poly);
    let mut half = lna.powi(j as i32).div_u64(2);
    if j % 2 == 1 {
        half = half.neg();
    }
    acc = &acc + &half;
    if j == 0 {
        return Ok(acc);
    }
    // integral block: (-1)^j j int_a^inf (ln^{j-1} x / x) P1(x-a) dx
    let integral = p1_log_integral(j - 1, &a, digits)?;
    let mut tail = integral.mul_i64(j as i64);
    if j % 2 == 1 {
        tail = tail.neg();
    }
    Ok(&acc + &tail)
}

/// int_a^inf (ln^p x / x) P1(x - a) dx: unit panels to x = a + M, then the
/// Bernoulli tail -sum_r B_{2r}/(2r)! g^{(2r-2)}(a+M) with derivatives taken
/// from an x-jet of g.
fn p1_log_integral(p: usize, a: &BigReal, digits: usize) -> Result<BigReal> {
    let prec = a.prec();
    let eps = eps_for_digits(digits + 6);
    let panels = ((0.62 * (digits + 8) as f64).ceil() as usize).max(12);
    let qopts = QuadOpts::new("p1_log_integral", Float::with_val(32, &eps))
        .with_abs_floor(Float::with_val(32, &eps));
    let g = |x: &BigReal| -> BigReal { x.ln().powi(p as i32).div(x) };
    let mut acc = BigReal::zero(prec);
    for m in 0..panels {
        let left = a + &BigReal::from_u64(m as u64, prec);
        let right = a + &BigReal::from_u64(m as u64 + 1, prec);
        let r = tanh_sinh(&left, &right, &qopts, |x, off_a, _| {
            let p1v = off_a - &BigReal::from_rational(&rug::Rational::from((1, 2)), prec);
            Ok(g(x).mul(&p1v))
        })?;
        acc = &acc + &r.value;
    }
    // tail at A = a + panels
    let big_a = a + &BigReal::from_u64(panels as u64, prec);
    let order_cap = 2 * digits + 40;
    let gjet = {
        let xj = Jet::variable(big_a.clone(), order_cap);
        let lj = xj.ln()?;
        lj.powi(p as u32).div(&xj)?
    };
    let mut prev_mag = Float::with_val(32, f64::INFINITY);
    let mut r = 1usize;
    loop {
        if 2 * r - 2 > order_cap {
            return Err(Error::no_conv("p1_log_integral", "tail series exhausted jet order"));
        }
        // g^{(2r-2)}(A) = (2r-2)! coeff_{2r-2}
        let coeff = {
            let mut q = bernoulli(2 * r);
            q /= factorial(2 * r as u32);
            q *= factorial(2 * r as u32 - 2);
            BigReal::from_rational(&q, prec)
        };
        let term = coeff.mul(gjet.coeff(2 * r - 2)).neg();
        let mag = term.abs_f();
        if mag <= eps {
            acc.add_err(&mag);
            return Ok(acc);
        }
        if mag >= prev_mag {
            return Err(Error::no_conv("p1_log_integral", "tail series diverged early"));
        }
        acc = &acc + &term;
        prev_mag = mag;
        r += 1;
    }
}

/// zeta'(2), zeta'(-1) and Glaisher's ln A straight from jets away from the
/// pole.
pub struct AuxConstants {
    pub zeta_prime_2: BigReal,
    pub zeta_prime_minus_1: BigReal,
    pub ln_glaisher: BigReal,
}

pub fn aux_constants(z: &Zeta) -> Result<AuxConstants> {
    let one = BigReal::one(z.prec());
    let at2 = z.jet(&BigReal::from_u64(2, z.prec()), &one, 1)?;
    let atm1 = z.jet(&BigReal::from_i64(-1, z.prec()), &one, 1)?;
    let zp2 = at2.reg.coeff(1).clone();
    let zpm1 = atm1.reg.coeff(1).clone();
    let ln_glaisher = &BigReal::from_rational(&rug::Rational::from((1, 12)), z.prec()) - &zpm1;
    Ok(AuxConstants { zeta_prime_2: zp2, zeta_prime_minus_1: zpm1, ln_glaisher })
}

/// gamma_k(a) by Hermite's integral
///   gamma_k(a) = ln^k a/(2a) - ln^{k+1} a/(k+1)
///     + (2/a) Re int_0^inf (y/a - i) ln^k(a - iy) / ((1+y^2/a^2)(e^{2 pi y}-1)) dy,
/// an integral route fully outside the Euler-Maclaurin code path.
pub fn hermite_stieltjes(k: usize, a: &BigReal, digits: usize) -> Result<BigReal> {
    if a.cmp_i64(0) != Ordering::Greater {
        return Err(Error::domain("hermite", "a must be positive"));
    }
    let prec = bits_for_digits(digits + 10);
    let a = a.round_to(prec);
    let lna = a.ln();
    let mut acc = lna.powi(k as i32).div(&a.mul_i64(2));
    acc = &acc - &lna.powi(k as i32 + 1).div_u64(k as u64 + 1);
    // truncate where e^{-2 pi y} is exhausted
    let t_cut = (digits + 8) as f64 * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI);
    let upper = BigReal::from_f64(t_cut + 1.0, prec);
    let eps = eps_for_digits(digits + 6);
    let qopts = QuadOpts::new("hermite", Float::with_val(32, &eps))
        .with_abs_floor(Float::with_val(32, &eps));
    let two_pi = BigReal::pi(prec).mul_i64(2);
    let r = tanh_sinh(&BigReal::zero(prec), &upper, &qopts, |y, _, _| {
        // ln(a - iy) = u + iv
        let u = (&a.mul(&a) + &y.mul(y)).ln().div_u64(2);
        let v = y.div(&a).atan().neg();
        // (re, im) = (u + iv)^k
        let mut re = BigReal::one(prec);
        let mut im = BigReal::zero(prec);
        for _ in 0..k {
            let nre = &re.mul(&u) - &im.mul(&v);
            let nim = &re.mul(&v) + &im.mul(&u);
            re = nre;
            im = nim;
        }
        let numer = &y.div(&a).mul(&re) + &im;
        let denom = (&BigReal::one(prec) + &y.div(&a).powi(2)).mul(&two_pi.mul(y).expm1());
        Ok(numer.div(&denom))
    })?;
    let integral = r.value;
    // discarded tail is below e^{-2 pi upper}
    let tail = Float::with_val(32, (-2.0 * std::f64::consts::PI * (t_cut + 1.0)).exp());
    let mut out = &acc + &integral.mul(&BigReal::from_u64(2, prec).div(&a));
    out.add_err(&tail);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{digamma, lngamma, mpfr_euler};
    use proptest::prelude::*;
    use rug::float::Constant;

    fn assert_close(got: &BigReal, want: &Float, tol: f64, label: &str) {
        let diff = (got.value().clone() - want).abs();
        assert!(
            diff.to_f64() < tol,
            "{label}: got {} want {:.30e} diff {:.3e}",
            got,
            want.to_f64(),
            diff.to_f64()
        );
    }

    #[test]
    fn gamma0_at_one_is_euler() {
        let z = Zeta::new(50);
        let g = z.stieltjes(0, &BigReal::one(z.prec())).unwrap();
        assert_close(&g, &mpfr_euler(z.prec()), 1e-48, "gamma_0(1)");
    }

    #[test]
    fn gamma1_gamma2_at_one_reference_values() {
        // frozen from the literature
        let z = Zeta::new(45);
        let one = BigReal::one(z.prec());
        let l = z.laurent(&one, 2).unwrap();
        let g1 = Float::with_val(
            z.prec(),
            Float::parse("-0.0728158454836767248605863758749013191377363383").unwrap(),
        );
        assert_close(l.gamma(1), &g1, 1e-40, "gamma_1(1)");
        let g2 = Float::with_val(
            z.prec(),
            Float::parse("-0.0096903631928723184845303860352125293590658061").unwrap(),
        );
        assert_close(l.gamma(2), &g2, 1e-40, "gamma_2(1)");
    }

    #[test]
    fn gamma0_is_minus_digamma() {
        let z = Zeta::new(40);
        for af in [0.25f64, 0.5, 1.5, 3.25, 10.0] {
            let a = z.real(af);
            let g = z.stieltjes(0, &a).unwrap();
            let want = -Float::with_val(z.prec(), a.value()).digamma();
            assert_close(&g, &want, 1e-38, "gamma_0(a) vs MPFR");
            let own = digamma(&a).unwrap().neg();
            assert_close(&g, own.value(), 1e-38, "gamma_0(a) vs own digamma");
        }
    }

    #[test]
    fn plain_jets_hit_special_values() {
        let z = Zeta::new(40);
        let one = BigReal::one(z.prec());
        // zeta(2) = pi^2/6
        let v = z.value(&BigReal::from_u64(2, z.prec()), &one).unwrap();
        let want = Float::with_val(z.prec(), Constant::Pi).square() / 6u32;
        assert_close(&v, &want, 1e-38, "zeta(2)");
        // zeta(0, a) = 1/2 - a
        let a = z.real(0.7);
        let v0 = z.value(&BigReal::zero(z.prec()), &a).unwrap();
        let w0 = Float::with_val(z.prec(), 0.5) - a.value();
        assert_close(&v0, &w0, 1e-38, "zeta(0,a)");
        // zeta(-1) = -1/12
        let vm = z.value(&BigReal::from_i64(-1, z.prec()), &one).unwrap();
        let wm = Float::with_val(z.prec(), 1) / -12i32;
        assert_close(&vm, &wm, 1e-38, "zeta(-1)");
        // zeta'(0) = -ln(2 pi)/2
        let j = z.jet(&BigReal::zero(z.prec()), &one, 1).unwrap();
        let w = -(2u32 * Float::with_val(z.prec(), Constant::Pi)).ln() / 2u32;
        assert_close(j.reg.coeff(1), &w, 1e-38, "zeta'(0)");
    }

    #[test]
    fn laurent_pole_is_exactly_one() {
        let z = Zeta::new(30);
        let l = z.laurent(&z.real(2.5), 1).unwrap();
        assert!((l.pole.to_f64() - 1.0).abs() < 1e-25);
        assert!(l.pole.err().to_f64() < 1e-25);
    }

    #[test]
    fn zeta_deriv_at_zero_matches_lngamma() {
        // zeta'(0, a) = ln Gamma(a) - ln(2 pi)/2
        for (af, digits) in [(1.0, 40), (2.7, 40), (1.0 / 3.0, 35)] {
            let prec = bits_for_digits(digits + 8);
            let a = BigReal::from_f64(af, prec);
            let got = zeta_deriv_at_zero(1, &a, digits).unwrap();
            let want = lngamma(&a).unwrap().value().clone()
                - (2u32 * Float::with_val(prec, Constant::Pi)).ln() / 2u32;
            assert_close(&got, &want, 10f64.powi(-(digits as i32 - 3)), "zeta'(0,a)");
        }
    }

    #[test]
    fn zeta_deriv_at_zero_matches_jets() {
        // the quadrature route against the Euler-Maclaurin jet at s0 = 0
        let digits = 35;
        let z = Zeta::new(digits);
        let a = z.real(1.25);
        let jet = z.jet(&BigReal::zero(z.prec()), &a, 3).unwrap();
        for j in [0usize, 2, 3] {
            let got = zeta_deriv_at_zero(j, &a, digits).unwrap();
            let want = jet.reg.coeff(j).mul(&BigReal::from_integer(&factorial(j as u32), z.prec()));
            assert_close(&got, want.value(), 1e-31, "zeta^(j)(0,a)");
        }
    }

    #[test]
    fn aux_constants_identity() {
        // zeta'(2) = zeta(2) (gamma + ln 2 pi - 1 + 12 zeta'(-1))
        let z = Zeta::new(45);
        let aux = aux_constants(&z).unwrap();
        assert_close(
            &aux.zeta_prime_2,
            &Float::with_val(z.prec(), Float::parse("-0.93754825431584375370").unwrap()),
            1e-15,
            "zeta'(2) literal",
        );
        assert_close(
            &aux.zeta_prime_minus_1,
            &Float::with_val(z.prec(), Float::parse("-0.16542114370045092921").unwrap()),
            1e-15,
            "zeta'(-1) literal",
        );
        let pi = Float::with_val(z.prec(), Constant::Pi);
        let zeta2 = pi.clone().square() / 6u32;
        let rhs = zeta2
            * (mpfr_euler(z.prec()) + (2u32 * pi).ln() - 1u32
                + 12u32 * aux.zeta_prime_minus_1.value().clone());
        assert_close(&aux.zeta_prime_2, &rhs, 1e-42, "zeta'(2) identity");
    }

    #[test]
    fn hermite_route_agrees_with_jets() {
        let digits = 35;
        let z = Zeta::new(digits);
        for (k, af) in [(0usize, 1.3f64), (1, 1.0), (3, 2.5)] {
            let a = z.real(af);
            let em = z.stieltjes(k, &a).unwrap();
            let he = hermite_stieltjes(k, &a, digits).unwrap();
            let diff = (em.value().clone() - he.value().clone()).abs();
            let budget = Float::with_val(32, em.err() + he.err()) + Float::with_val(32, 1e-33);
            assert!(
                diff <= budget,
                "k={k} a={af}: diff {:.3e} budget {:.3e}",
                diff.to_f64(),
                budget.to_f64()
            );
        }
    }

    #[test]
    fn errors_cover_precision_escalation() {
        let lo = Zeta::new(30);
        let hi = Zeta::new(50);
        let a_lo = lo.real(0.75);
        let a_hi = hi.real(0.75);
        for k in 0..=4usize {
            let g_lo = lo.stieltjes(k, &a_lo).unwrap();
            let g_hi = hi.stieltjes(k, &a_hi).unwrap();
            let diff = (g_lo.value().clone() - g_hi.value().clone()).abs();
            let budget = Float::with_val(32, g_lo.err() + g_hi.err());
            assert!(diff <= budget, "k={k}: diff {:.3e} vs err {:.3e}", diff.to_f64(), budget.to_f64());
        }
    }

    #[test]
    fn domain_errors() {
        let z = Zeta::new(20);
        assert!(matches!(
            z.stieltjes(0, &z.real(-1.0)),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            z.stieltjes(0, &BigReal::zero(z.prec())),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            z.value(&BigReal::one(z.prec()), &z.real(2.0)),
            Err(Error::DegeneratePole)
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]

        #[test]
        fn shift_identity(af in 0.3f64..4.0, k in 0usize..4) {
            // gamma_k(a+1) = gamma_k(a) - ln^k(a)/a
            let z = Zeta::new(35);
            let a = z.real(af);
            let ap1 = &a + &BigReal::one(z.prec());
            let lhs = z.stieltjes(k, &ap1).unwrap();
            let rhs = &z.stieltjes(k, &a).unwrap() - &a.ln().powi(k as i32).div(&a);
            let diff = (lhs.value().clone() - rhs.value().clone()).abs();
            prop_assert!(diff.to_f64() < 1e-30, "diff {:.3e}", diff.to_f64());
        }
    }
}
