use crate::error::{Error, Result};
use crate::mp::jet::Jet;
use crate::mp::real::BigReal;
use rug::{Integer, Rational};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::{Mutex, OnceLock};

pub fn factorial(n: u32) -> Integer {
    Integer::factorial(n).into()
}

pub fn binomial(n: u32, k: u32) -> Integer {
    Integer::binomial_u(n, k).into()
}

/// H_n as an exact rational.
pub fn harmonic(n: u64) -> Rational {
    let mut h = Rational::new();
    for k in 1..=n {
        h += Rational::from((1u64, k));
    }
    h
}

struct Tables {
    // bernoulli[m] = B_m with B_1 = -1/2
    bernoulli: Vec<Rational>,
    // stirling[n][k] = signed first-kind s(n, k), row n has n+1 entries
    stirling: Vec<Vec<Integer>>,
}

impl Tables {
    fn new() -> Self {
        Tables {
            bernoulli: vec![Rational::from(1)],
            stirling: vec![vec![Integer::from(1)]],
        }
    }

    fn grow_bernoulli(&mut self, m: usize) {
        while self.bernoulli.len() <= m {
            let n = self.bernoulli.len();
            if n > 1 && n % 2 == 1 {
                self.bernoulli.push(Rational::new());
                continue;
            }
            // B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
            let mut acc = Rational::new();
            for (j, bj) in self.bernoulli.iter().enumerate() {
                if bj.cmp0() != std::cmp::Ordering::Equal {
                    acc += Rational::from((binomial(n as u32 + 1, j as u32), Integer::from(1)))
                        * bj;
                }
            }
            acc /= -Rational::from(n as u32 + 1);
            self.bernoulli.push(acc);
        }
    }

    fn grow_stirling(&mut self, n: usize) {
        while self.stirling.len() <= n {
            let m = self.stirling.len(); // building row m from row m-1
            let prev = &self.stirling[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            for k in 0..=m {
                // s(m, k) = s(m-1, k-1) - (m-1) s(m-1, k)
                let mut v = if k > 0 { prev[k - 1].clone() } else { Integer::new() };
                if k < m {
                    v -= Integer::from(m as u32 - 1) * &prev[k];
                }
                row.push(v);
            }
            self.stirling.push(row);
        }
    }

    fn write(&self, w: &mut impl Write) -> std::io::Result<()> {
        writeln!(w, "stieltjes-tables 1")?;
        writeln!(w, "bernoulli {}", self.bernoulli.len())?;
        for b in &self.bernoulli {
            writeln!(w, "{b}")?;
        }
        writeln!(w, "stirling {}", self.stirling.len())?;
        for row in &self.stirling {
            let parts: Vec<String> = row.iter().map(Integer::to_string).collect();
            writeln!(w, "{}", parts.join(" "))?;
        }
        Ok(())
    }

    fn read(r: impl BufRead, path: &Path) -> Result<Tables> {
        let corrupt = |msg: &str| Error::CacheCorrupt {
            path: path.display().to_string(),
            msg: msg.to_string(),
        };
        let mut lines = r.lines();
        let mut next = || -> Result<String> {
            lines
                .next()
                .ok_or_else(|| corrupt("unexpected end of file"))?
                .map_err(|e| corrupt(&e.to_string()))
        };
        if next()? != "stieltjes-tables 1" {
            return Err(corrupt("unknown header"));
        }
        let bline = next()?;
        let bcount: usize = bline
            .strip_prefix("bernoulli ")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| corrupt("bad bernoulli count"))?;
        let mut bernoulli = Vec::with_capacity(bcount);
        for _ in 0..bcount {
            let v: Rational =
                next()?.parse().map_err(|_| corrupt("bad bernoulli entry"))?;
            bernoulli.push(v);
        }
        let sline = next()?;
        let scount: usize = sline
            .strip_prefix("stirling ")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| corrupt("bad stirling count"))?;
        let mut stirling = Vec::with_capacity(scount);
        for n in 0..scount {
            let line = next()?;
            let row: Vec<Integer> = line
                .split(' ')
                .map(|t| t.parse::<Integer>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| corrupt("bad stirling entry"))?;
            if row.len() != n + 1 {
                return Err(corrupt("stirling row length mismatch"));
            }
            stirling.push(row);
        }
        if bernoulli.is_empty() || stirling.is_empty() {
            return Err(corrupt("empty tables"));
        }
        let t = Tables { bernoulli, stirling };
        t.check_invariants().map_err(|msg| corrupt(&msg))?;
        Ok(t)
    }

    /// Cheap integrity checks: the defining recurrence on the last even
    /// Bernoulli index and the row-sum identities of the Stirling triangle.
    fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.bernoulli[0] != 1u32 {
            return Err("B_0 != 1".into());
        }
        let mut n = self.bernoulli.len() - 1;
        if n % 2 == 1 {
            n = n.saturating_sub(1);
        }
        if n >= 2 {
            let mut acc = Rational::new();
            for (j, bj) in self.bernoulli.iter().take(n).enumerate() {
                acc += Rational::from((binomial(n as u32 + 1, j as u32), Integer::from(1))) * bj;
            }
            acc /= -Rational::from(n as u32 + 1);
            if acc != self.bernoulli[n] {
                return Err(format!("B_{n} fails its recurrence"));
            }
        }
        let last = self.stirling.len() - 1;
        if last >= 2 {
            let row = &self.stirling[last];
            let sum: Integer = row.iter().sum();
            if sum != 0u32 {
                return Err(format!("stirling row {last} sum != 0"));
            }
            let abs_sum: Integer = row.iter().map(|v| v.clone().abs()).sum();
            if abs_sum != factorial(last as u32) {
                return Err(format!("stirling row {last} |sum| != {last}!"));
            }
        }
        Ok(())
    }
}

fn tables() -> &'static Mutex<Tables> {
    static T: OnceLock<Mutex<Tables>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(Tables::new()))
}

pub fn bernoulli(m: usize) -> Rational {
    let mut t = tables().lock().unwrap();
    t.grow_bernoulli(m);
    t.bernoulli[m].clone()
}

/// Signed Stirling number of the first kind s(n, k).
pub fn stirling1(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::new();
    }
    let mut t = tables().lock().unwrap();
    t.grow_stirling(n);
    t.stirling[n][k].clone()
}

pub fn stirling_row(n: usize) -> Vec<Integer> {
    let mut t = tables().lock().unwrap();
    t.grow_stirling(n);
    t.stirling[n].clone()
}

/// Precomputes tables up to the given sizes (for cache seeding).
pub fn seed_tables(bernoulli_to: usize, stirling_to: usize) {
    let mut t = tables().lock().unwrap();
    t.grow_bernoulli(bernoulli_to);
    t.grow_stirling(stirling_to);
}

pub fn save_tables(path: &Path) -> Result<()> {
    let t = tables().lock().unwrap();
    let file = std::fs::File::create(path).map_err(|e| Error::CacheCorrupt {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let mut w = BufWriter::new(file);
    t.write(&mut w).map_err(|e| Error::CacheCorrupt {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// Loads previously saved tables, keeping whichever side is larger.
pub fn load_tables(path: &Path) -> Result<()> {
    let file = std::fs::File::open(path).map_err(|e| Error::CacheCorrupt {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let loaded = Tables::read(BufReader::new(file), path)?;
    let mut t = tables().lock().unwrap();
    if loaded.bernoulli.len() > t.bernoulli.len() {
        t.bernoulli = loaded.bernoulli;
    }
    if loaded.stirling.len() > t.stirling.len() {
        t.stirling = loaded.stirling;
    }
    Ok(())
}

/// Rising factorial (s0 + t)(s0 + 1 + t)...(s0 + j - 1 + t) as a jet in t.
pub fn poch_jet(s0: &BigReal, j: usize, order: usize) -> Jet {
    let prec = s0.prec();
    let mut acc = Jet::constant(BigReal::one(prec), order);
    for i in 0..j {
        let c = s0 + &BigReal::from_u64(i as u64, prec);
        acc = acc.mul_affine(&c);
    }
    acc
}

/// The same rising factorial at s0 = 1, with exact integer coefficients
/// (-1)^{j+i} s(j+1, i+1) taken from the Stirling triangle.
pub fn poch_jet_exact_at_one(j: usize, order: usize, prec: u32) -> Jet {
    let row = stirling_row(j + 1);
    let mut c = Vec::with_capacity(order + 1);
    for i in 0..=order {
        if i > j {
            c.push(BigReal::zero(prec));
            continue;
        }
        let mut v = row[i + 1].clone();
        if (j + i) % 2 == 1 {
            v = -v;
        }
        c.push(BigReal::from_integer(&v, prec));
    }
    Jet::from_coeffs(c)
}
