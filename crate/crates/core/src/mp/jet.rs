use super::real::BigReal;
use crate::error::{Error, Result};
use rug::Float;

/// Truncated Taylor expansion in a single variable t about an implicit
/// center: coeff[m] multiplies t^m. All arithmetic truncates at the common
/// order, so coefficient m of any product depends only on inputs up to m.
#[derive(Clone, Debug)]
pub struct Jet {
    c: Vec<BigReal>,
}

impl Jet {
    pub fn from_coeffs(c: Vec<BigReal>) -> Self {
        assert!(!c.is_empty());
        Jet { c }
    }

    pub fn zero(order: usize, prec: u32) -> Self {
        Jet { c: vec![BigReal::zero(prec); order + 1] }
    }

    pub fn constant(x: BigReal, order: usize) -> Self {
        let prec = x.prec();
        let mut c = vec![BigReal::zero(prec); order + 1];
        c[0] = x;
        Jet { c }
    }

    /// x0 + t, the evaluation-variable jet.
    pub fn variable(x0: BigReal, order: usize) -> Self {
        let prec = x0.prec();
        let mut c = vec![BigReal::zero(prec); order + 1];
        if order >= 1 {
            c[1] = BigReal::one(prec);
        }
        c[0] = x0;
        Jet { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn prec(&self) -> u32 {
        self.c[0].prec()
    }

    pub fn coeff(&self, m: usize) -> &BigReal {
        &self.c[m]
    }

    pub fn coeffs(&self) -> &[BigReal] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<BigReal> {
        self.c
    }

    pub fn coeff_mut(&mut self, m: usize) -> &mut BigReal {
        &mut self.c[m]
    }

    pub fn truncate(&self, order: usize) -> Jet {
        assert!(order <= self.order());
        Jet { c: self.c[..=order].to_vec() }
    }

    pub fn max_abs_coeff(&self) -> Float {
        let mut m = self.c[0].abs_f();
        for x in &self.c[1..] {
            let a = x.abs_f();
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }

    pub fn add(&self, rhs: &Jet) -> Jet {
        assert_eq!(self.order(), rhs.order());
        Jet { c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, rhs: &Jet) -> Jet {
        assert_eq!(self.order(), rhs.order());
        Jet { c: self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Jet {
        Jet { c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, k: &BigReal) -> Jet {
        Jet { c: self.c.iter().map(|a| a * k).collect() }
    }

    pub fn add_assign(&mut self, rhs: &Jet) {
        assert_eq!(self.order(), rhs.order());
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a = &*a + b;
        }
    }

    pub fn mul(&self, rhs: &Jet) -> Jet {
        assert_eq!(self.order(), rhs.order());
        let n = self.c.len();
        let prec = self.prec().max(rhs.prec());
        let mut out = vec![BigReal::zero(prec); n];
        for (m, o) in out.iter_mut().enumerate() {
            let mut acc = BigReal::zero(prec);
            for i in 0..=m {
                acc = &acc + &(&self.c[i] * &rhs.c[m - i]);
            }
            *o = acc;
        }
        Jet { c: out }
    }

    /// self * (k + t) in O(order) — the building block for pochhammer jets.
    pub fn mul_affine(&self, k: &BigReal) -> Jet {
        let n = self.c.len();
        let mut out = Vec::with_capacity(n);
        out.push(&self.c[0] * k);
        for m in 1..n {
            out.push(&(&self.c[m] * k) + &self.c[m - 1]);
        }
        Jet { c: out }
    }

    pub fn recip(&self) -> Result<Jet> {
        if self.c[0].is_zero() {
            return Err(Error::DegeneratePole);
        }
        let n = self.c.len();
        let mut r = Vec::with_capacity(n);
        r.push(self.c[0].recip());
        for m in 1..n {
            let mut acc = BigReal::zero(self.prec());
            for i in 1..=m {
                acc = &acc + &(&self.c[i] * &r[m - i]);
            }
            r.push(&acc.neg() / &self.c[0]);
        }
        Ok(Jet { c: r })
    }

    pub fn div(&self, rhs: &Jet) -> Result<Jet> {
        if rhs.c[0].is_zero() {
            return Err(Error::DegeneratePole);
        }
        assert_eq!(self.order(), rhs.order());
        let n = self.c.len();
        let mut q: Vec<BigReal> = Vec::with_capacity(n);
        for m in 0..n {
            let mut acc = self.c[m].clone();
            for i in 1..=m {
                acc = &acc - &(&rhs.c[i] * &q[m - i]);
            }
            q.push(&acc / &rhs.c[0]);
        }
        Ok(Jet { c: q })
    }

    pub fn exp(&self) -> Jet {
        let n = self.c.len();
        let mut e = Vec::with_capacity(n);
        e.push(self.c[0].exp());
        for m in 1..n {
            // e_m = (1/m) sum_{i=1..m} i c_i e_{m-i}
            let mut acc = BigReal::zero(self.prec());
            for i in 1..=m {
                acc = &acc + &self.c[i].mul_i64(i as i64).mul(&e[m - i]);
            }
            e.push(acc.div_u64(m as u64));
        }
        Jet { c: e }
    }

    pub fn ln(&self) -> Result<Jet> {
        if self.c[0].is_zero() || self.c[0].is_sign_negative() {
            return Err(Error::domain("jet_ln", "constant term must be positive"));
        }
        let n = self.c.len();
        let mut g = Vec::with_capacity(n);
        g.push(self.c[0].ln());
        for m in 1..n {
            // g_m = (c_m - (1/m) sum_{i=1..m-1} i g_i c_{m-i}) / c_0
            let mut acc = BigReal::zero(self.prec());
            for i in 1..m {
                acc = &acc + &g[i].mul_i64(i as i64).mul(&self.c[m - i]);
            }
            let num = &self.c[m] - &acc.div_u64(m as u64);
            g.push(&num / &self.c[0]);
        }
        Ok(Jet { c: g })
    }

    pub fn pow_real(&self, alpha: &BigReal) -> Result<Jet> {
        Ok(self.ln()?.scale(alpha).exp())
    }

    pub fn powi(&self, k: u32) -> Jet {
        let mut acc = Jet::constant(BigReal::one(self.prec()), self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Widens by appending zero coefficients up to `order`.
    pub fn extend_to(&self, order: usize) -> Jet {
        let mut c = self.c.clone();
        while c.len() <= order {
            c.push(BigReal::zero(self.prec()));
        }
        Jet { c }
    }

    /// t * self: shifts coefficients up, dropping the top one.
    pub fn shift_up(&self) -> Jet {
        let mut c = Vec::with_capacity(self.c.len());
        c.push(BigReal::zero(self.prec()));
        c.extend_from_slice(&self.c[..self.c.len() - 1]);
        Jet { c }
    }

    /// Adds `extra` to every coefficient's error bound.
    pub fn add_err_all(&mut self, extra: &Float) {
        for x in &mut self.c {
            x.add_err(extra);
        }
    }
}

/// Splits 1/j for a jet with vanishing constant term into (pole, regular):
/// 1/(c1 t + c2 t^2 + ...) = pole/t + R(t), with R of order one less.
pub fn jet_reciprocal_pole(j: &Jet) -> Result<(BigReal, Jet)> {
    if !j.c[0].is_zero() {
        return Err(Error::domain("jet_reciprocal_pole", "constant term must vanish"));
    }
    if j.order() < 2 || j.c[1].is_zero() {
        return Err(Error::DegeneratePole);
    }
    // 1/j = (1/c1) * (1/t) * 1/(1 + (c2/c1) t + ...)
    let inner = Jet::from_coeffs(
        (0..j.order()).map(|m| &j.c[m + 1] / &j.c[1]).collect::<Vec<_>>(),
    );
    let r = inner.recip()?;
    let pole = j.c[1].recip();
    let reg = Jet::from_coeffs(
        (1..=r.order()).map(|m| r.coeff(m) / &j.c[1]).collect::<Vec<_>>(),
    );
    Ok((pole, reg))
}
