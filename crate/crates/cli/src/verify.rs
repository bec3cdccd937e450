//! The `verify` command: invariant suites over the model and the engine.

use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use ordconf::checks;
use ordconf::partitions::oyster_lower_bound;
use ordconf::poly::binomial;
use ordconf::{ComplexKind, Engine, RingPresentation};

use crate::CliError;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// n ≤ 4, r ≤ 5; seconds.
    Quick,
    /// n ≤ 7, r ≤ 8; minutes.
    Full,
}

struct Bounds {
    d_squared_full: usize,
    d_squared_quotient: usize,
    functoriality: usize,
    basis: usize,
    rational_full: usize,
    rational_quotient: usize,
    strictness: usize,
    oyster: usize,
}

impl Level {
    fn bounds(self) -> Bounds {
        match self {
            Level::Quick => Bounds {
                d_squared_full: 4,
                d_squared_quotient: 5,
                functoriality: 3,
                basis: 4,
                rational_full: 3,
                rational_quotient: 4,
                strictness: 4,
                oyster: 5,
            },
            Level::Full => Bounds {
                d_squared_full: 6,
                d_squared_quotient: 8,
                functoriality: 4,
                basis: 7,
                rational_full: 4,
                rational_quotient: 5,
                strictness: 7,
                oyster: 8,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn record(
    results: &mut Vec<CheckResult>,
    out: &mut dyn Write,
    name: &str,
    r: Result<String, String>,
    t: Instant,
) {
    let (ok, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    let _ = writeln!(
        out,
        "{} {name}: {detail} ({:.1}s)",
        if ok { "PASS" } else { "FAIL" },
        t.elapsed().as_secs_f64()
    );
    results.push(CheckResult {
        name: name.to_string(),
        ok,
        detail,
    });
}

/// Runs every suite that applies to the engine's ring.
pub fn run_checks(engine: &Engine, level: Level, out: &mut dyn Write) -> Vec<CheckResult> {
    let b = level.bounds();
    let ring = engine.ring();
    let zero_euler = ring.euler_characteristic() == 0;
    let elliptic = *ring == RingPresentation::elliptic_curve();
    let mut res = Vec::new();

    let t = Instant::now();
    let r = (2..=b.d_squared_full)
        .map(|n| checks::check_d_squared(ring, ComplexKind::Full, n))
        .sum::<Result<usize, String>>()
        .map(|k| format!("{k} composable pairs, n ≤ {}", b.d_squared_full));
    record(&mut res, out, "d∘d = 0 (full)", r, t);

    if zero_euler {
        let t = Instant::now();
        let r = (2..=b.d_squared_quotient)
            .map(|n| checks::check_d_squared(ring, ComplexKind::Quotient, n))
            .sum::<Result<usize, String>>()
            .map(|k| format!("{k} composable pairs, r ≤ {}", b.d_squared_quotient));
        record(&mut res, out, "d∘d = 0 (full-support quotient)", r, t);

        let t = Instant::now();
        let mut total = Ok(0usize);
        'outer: for n in 1..=b.functoriality {
            for m in 1..=b.functoriality {
                match checks::check_functoriality(ring, n, m) {
                    Ok(k) => *total.as_mut().unwrap() += k,
                    Err(e) => {
                        total = Err(e);
                        break 'outer;
                    }
                }
            }
        }
        let r = total.map(|k| format!("{k} (map, monomial) pairs, n,m ≤ {}", b.functoriality));
        record(&mut res, out, "f_* commutes with d", r, t);
    }

    let t = Instant::now();
    let r = (0..=b.basis)
        .map(|n| checks::check_basis_dims(ring, n))
        .sum::<Result<usize, String>>()
        .map(|k| format!("{k} bidegrees, n ≤ {}", b.basis));
    record(&mut res, out, "basis = labelled partitions", r, t);

    let t = Instant::now();
    let mut r = (2..=b.rational_full)
        .map(|n| checks::check_modular_vs_rational(ring, ComplexKind::Full, n))
        .sum::<Result<usize, String>>();
    if zero_euler {
        r = r.and_then(|k| {
            (2..=b.rational_quotient)
                .map(|n| checks::check_modular_vs_rational(ring, ComplexKind::Quotient, n))
                .sum::<Result<usize, String>>()
                .map(|j| j + k)
        });
    }
    let r = r.map(|k| format!("{k} matrices"));
    record(&mut res, out, "modular = rational ranks", r, t);

    if zero_euler {
        let t = Instant::now();
        let mut r = Ok(0usize);
        let mut certified = true;
        for n in 0..=b.strictness {
            match engine.verify_strictness(n) {
                Ok(rep) if rep.ok() => {
                    certified &= rep.certified;
                    *r.as_mut().unwrap() += rep.checked;
                }
                Ok(rep) => {
                    let m = &rep.mismatches[0];
                    r = Err(format!(
                        "n = {n}, (p,q) = ({},{}): full {} vs assembled {} from {:?}",
                        m.p, m.q, m.full, m.assembled, m.coefficients
                    ));
                    break;
                }
                Err(e) => {
                    r = Err(format!("n = {n}: {e}"));
                    break;
                }
            }
        }
        let r = r.map(|k| format!("{k} bidegrees, n ≤ {}", b.strictness));
        record(&mut res, out, "strictness Σ a_i C(n,i) = dim H", r, t);

        let t = Instant::now();
        let r = if certified {
            Ok("every rank confirmed by two primes".to_string())
        } else {
            Err("some rank lacks two-prime agreement".to_string())
        };
        record(&mut res, out, "prime consensus", r, t);
    }

    if elliptic {
        let t = Instant::now();
        let r = oyster_checks(engine, b.oyster);
        record(&mut res, out, "oyster lower bounds", r, t);

        let t = Instant::now();
        let r = vanishing_checks(engine, b.strictness);
        record(&mut res, out, "vanishing", r, t);
    }

    let t = Instant::now();
    let bad = engine.cache_inconsistencies();
    let r = if bad.is_empty() {
        Ok(format!("{} cached pieces", engine.cache_entries().len()))
    } else {
        Err(bad.join("; "))
    };
    record(&mut res, out, "cache consistency", r, t);
    res
}

/// Oyster bounds against top graded coefficients `a_{p+2q}^{p,q}`, with the
/// equality cases `(1,1)`, `(2,1)`, `(2,2)`, `(2,3)`.
pub fn oyster_checks(engine: &Engine, rmax: usize) -> Result<String, String> {
    let mut count = 0;
    for q in 1..=rmax / 2 {
        for p in 0..=rmax - 2 * q {
            let a = engine
                .bigraded_dim(ComplexKind::Quotient, p + 2 * q, p, q)
                .map_err(|e| e.to_string())?;
            let bound = oyster_lower_bound(p, q).dim_at_r;
            let equal = matches!((p, q), (1, 1) | (2, 1) | (2, 2) | (2, 3));
            if bound > a || (equal && bound != a) {
                return Err(format!("(p,q) = ({p},{q}): bound {bound}, a = {a}"));
            }
            if p == 2 && bound < binomial(2 * q as u64 + 1, q as u64 - 1) {
                return Err(format!("(2,{q}): bound {bound} below C(2q+1,q-1)"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} bidegrees with p + 2q ≤ {rmax}"))
}

/// `H^{0,q} = 0` for `q > 0` and `H^k = 0` for `k > n + 1`.
pub fn vanishing_checks(engine: &Engine, nmax: usize) -> Result<String, String> {
    for n in 1..=nmax {
        let t = engine.cohom_dims(n).map_err(|e| e.to_string())?;
        for (&(p, q), &v) in &t.dims {
            if (p == 0 && q > 0) || p + q > n + 1 {
                return Err(format!("n = {n}: H^{{{p},{q}}} = {v}"));
            }
        }
    }
    Ok(format!("n ≤ {nmax}"))
}

pub fn cmd_verify(engine: &Engine, level: Level, out: &mut dyn Write) -> Result<(), CliError> {
    let results = run_checks(engine, level, out);
    let failed: Vec<&str> = results
        .iter()
        .filter(|r| !r.ok)
        .map(|r| r.name.as_str())
        .collect();
    if failed.is_empty() {
        writeln!(out, "all {} checks passed", results.len())?;
        Ok(())
    } else {
        Err(CliError::Verify(failed.join(", ")))
    }
}
