//! Table of published check values and the runner that compares against it.
//!
//! One record per line: `<fn> <args...> <expected-re> <expected-im>`.
//! Blank lines and lines starting with `#` are skipped; text after a later
//! `#` becomes the record's note.

use std::fmt;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::literal::parse_complex;
use crate::symmetric::{rc, rd, rf, rg, rj, rj_unchecked};
use crate::tolerance::{EvalResult, Tolerance};
use crate::verify::oracle::Integrand;

const BUILTIN: &str = include_str!("../../data/check_values.txt");

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub integrand: Integrand,
    pub args: Vec<Complex>,
    pub expected: Complex,
    pub note: String,
    pub line: usize,
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.integrand)?;
        for (k, a) in self.args.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (body, note) = match raw.split_once('#') {
            Some((b, n)) => (b, n.trim()),
            None => (raw, ""),
        };
        let fields: Vec<&str> = body.split_whitespace().collect();
        let Some((&name, rest)) = fields.split_first() else {
            continue;
        };
        let bad = |msg: String| Error::Corpus { line, msg };
        let integrand: Integrand = name.parse().map_err(bad)?;
        let arity = integrand.arity();
        if rest.len() != arity + 2 {
            return Err(bad(format!(
                "{name} needs {arity} arguments plus two expected components, found {} fields",
                rest.len()
            )));
        }
        let args = rest[..arity]
            .iter()
            .map(|s| parse_complex(s).map_err(|e| bad(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let component = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| bad(format!("bad expected component {s:?}")))
        };
        let expected = Complex::new(component(rest[arity])?, component(rest[arity + 1])?);
        out.push(CheckRecord {
            integrand,
            args,
            expected,
            note: note.to_string(),
            line,
        });
    }
    Ok(out)
}

/// The bundled table of published values.
pub fn builtin_corpus() -> Vec<CheckRecord> {
    parse_corpus(BUILTIN).expect("bundled corpus parses")
}

/// Evaluates an integral by name with the strict entry points.
pub fn library_eval(kind: Integrand, args: &[Complex], r: Tolerance) -> Result<EvalResult> {
    if args.len() != kind.arity() {
        return Err(Error::domain(
            "library_eval",
            format!("{kind} takes {} arguments", kind.arity()),
        ));
    }
    match kind {
        Integrand::Rf => rf(args[0], args[1], args[2], r),
        Integrand::Rc => rc(args[0], args[1], r),
        Integrand::Rj => rj(args[0], args[1], args[2], args[3], r),
        Integrand::Rd => rd(args[0], args[1], args[2], r),
        Integrand::Rg => rg(args[0], args[1], args[2], r),
    }
}

/// Like [`library_eval`], but an `rj` call rejected only for admissibility
/// is retried through the override.
pub fn library_eval_with_override(
    kind: Integrand,
    args: &[Complex],
    r: Tolerance,
) -> Result<EvalResult> {
    match library_eval(kind, args, r) {
        Err(Error::Domain { func: "rj", .. }) if kind == Integrand::Rj => {
            rj_unchecked(args[0], args[1], args[2], args[3], r)
        }
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusOutcome {
    pub record: CheckRecord,
    pub computed: Result<Complex>,
    pub rel_dev: f64,
    pub overridden: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusReport {
    pub r: f64,
    pub tolerance: f64,
    pub outcomes: Vec<CorpusOutcome>,
}

impl CorpusReport {
    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn max_rel_dev(&self) -> f64 {
        self.outcomes.iter().map(|o| o.rel_dev).fold(0.0, f64::max)
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = if o.passed { "ok  " } else { "FAIL" };
            let flag = if o.overridden { " [override]" } else { "" };
            match &o.computed {
                Ok(v) => writeln!(f, "{status} {} = {v:.14} (rel dev {:.1e}){flag}", o.record, o.rel_dev)?,
                Err(e) => writeln!(f, "{status} {}: {e}", o.record)?,
            }
        }
        write!(
            f,
            "corpus: {} entries, {} failures, max rel dev {:.2e} (r = {:e}, tolerance {:e})",
            self.outcomes.len(),
            self.failures(),
            self.max_rel_dev(),
            self.r,
            self.tolerance
        )
    }
}

/// Compares each record against the library at tolerance `r`; an entry fails
/// when its relative deviation exceeds `tolerance`.
pub fn check_corpus(records: &[CheckRecord], r: Tolerance, tolerance: f64) -> CorpusReport {
    let outcomes = records
        .iter()
        .map(|rec| {
            let res = library_eval_with_override(rec.integrand, &rec.args, r);
            let overridden = res.as_ref().is_ok_and(|e| e.unchecked);
            let computed = res.map(|e| e.value);
            let rel_dev = match &computed {
                Ok(v) => (v - rec.expected).norm() / rec.expected.norm(),
                Err(_) => f64::INFINITY,
            };
            CorpusOutcome {
                record: rec.clone(),
                passed: rel_dev <= tolerance,
                computed,
                rel_dev,
                overridden,
            }
        })
        .collect();
    CorpusReport {
        r: r.value(),
        tolerance,
        outcomes,
    }
}

/// The bundled corpus at tolerance `r`, accepting deviations up to `10 r`.
pub fn run_check_corpus(r: Tolerance) -> CorpusReport {
    check_corpus(&builtin_corpus(), r, 10.0 * r.value())
}
