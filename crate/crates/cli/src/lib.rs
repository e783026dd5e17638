//! Command-line front end: `eval`, `selftest` and `quartic`.

use std::io::Write;
use std::path::PathBuf;

use carlson::agm::{complete_rf_rg, rd_complete};
use carlson::classical::{
    cel, complete_k_e, el1, el2, el3, heuman_lambda, inverse_via_rc, jacobi_zeta, legendre_d,
    legendre_e, legendre_f, legendre_pi, InverseKind,
};
use carlson::literal::{format_complex, format_exact, parse_complex};
use carlson::quartic::{eval_quartic_detailed, QuadraticCoeffs, QuarticSpec, UpperLimit};
use carlson::symmetric::rj_admissibility;
use carlson::verify::{check_corpus, parse_corpus, run_check_corpus, run_consistency_suite};
use carlson::{rc, rd, rf, rg, rj, rj_unchecked, Complex, Tolerance};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

/// Significant digits in plain output.
pub const DIGITS: usize = 15;

#[derive(Debug, Parser)]
#[command(name = "carlson", version, about = "Carlson symmetric elliptic integrals")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Relative error tolerance.
    #[arg(long = "rel-err", global = true, default_value_t = carlson::tolerance::DEFAULT_REL_ERR)]
    pub rel_err: f64,
    /// Print `{"re", "im", "n_iter", "r"}` as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print the value in a form that parses back to the same bits.
    #[arg(long, global = true)]
    pub exact: bool,
    /// Evaluate rj outside its admissible argument sets.
    #[arg(long, global = true)]
    pub unchecked: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function; `carlson eval list` shows the names.
    Eval {
        function: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Run the check-value table and the consistency identities.
    Selftest {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Check-value table to use instead of the bundled one.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Integral of 1/sqrt(q1 q2) over [y, x], q = f + 2 g t + h t^2; x may be `inf`.
    #[command(allow_negative_numbers = true)]
    Quartic {
        f1: f64,
        g1: f64,
        h1: f64,
        f2: f64,
        g2: f64,
        h2: f64,
        y: f64,
        x: String,
    },
}

/// Why a command did not succeed; each maps to an exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Malformed invocation: exit 2.
    Usage(String),
    /// Precondition violated or a self-test failed: exit 1.
    Failed(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Failed(_) => 1,
        }
    }
}

impl From<carlson::Error> for Failure {
    fn from(e: carlson::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Complex,
    Real,
}

/// A named entry of the `eval` registry.
#[derive(Debug, Clone, Copy)]
pub struct FunctionInfo {
    pub name: &'static str,
    pub params: &'static [(&'static str, Param)],
    pub summary: &'static str,
}

use Param::{Complex as C, Real as F};

pub const REGISTRY: &[FunctionInfo] = &[
    FunctionInfo { name: "rf", params: &[("x", C), ("y", C), ("z", C)], summary: "R_F, first kind" },
    FunctionInfo { name: "rc", params: &[("x", C), ("y", C)], summary: "R_C = R_F(x, y, y)" },
    FunctionInfo { name: "rj", params: &[("x", C), ("y", C), ("z", C), ("p", C)], summary: "R_J, third kind" },
    FunctionInfo { name: "rd", params: &[("x", C), ("y", C), ("z", C)], summary: "R_D = R_J(x, y, z, z)" },
    FunctionInfo { name: "rg", params: &[("x", C), ("y", C), ("z", C)], summary: "R_G, second kind" },
    FunctionInfo { name: "rf0", params: &[("x", C), ("y", C)], summary: "R_F(x, y, 0) by the AGM" },
    FunctionInfo { name: "rg0", params: &[("x", C), ("y", C)], summary: "R_G(x, y, 0) by the AGM" },
    FunctionInfo { name: "rd0", params: &[("y", C), ("z", C)], summary: "R_D(0, y, z) by the AGM" },
    FunctionInfo { name: "K", params: &[("k", C)], summary: "complete integral of the first kind" },
    FunctionInfo { name: "E", params: &[("k", C)], summary: "complete integral of the second kind" },
    FunctionInfo { name: "F", params: &[("phi", F), ("k", C)], summary: "incomplete first kind" },
    FunctionInfo { name: "Einc", params: &[("phi", F), ("k", C)], summary: "incomplete second kind" },
    FunctionInfo { name: "Pi", params: &[("phi", F), ("k", C), ("n", F)], summary: "incomplete third kind" },
    FunctionInfo { name: "D", params: &[("phi", F), ("k", C)], summary: "(F - E) / k^2" },
    FunctionInfo { name: "zeta", params: &[("beta", F), ("k", C)], summary: "Jacobi zeta" },
    FunctionInfo { name: "lambda0", params: &[("beta", F), ("k", C)], summary: "Heuman lambda" },
    FunctionInfo { name: "el1", params: &[("x", F), ("kc", C)], summary: "Bulirsch el1" },
    FunctionInfo { name: "el2", params: &[("x", F), ("kc", C), ("a", C), ("b", C)], summary: "Bulirsch el2" },
    FunctionInfo { name: "el3", params: &[("x", F), ("kc", C), ("p", C)], summary: "Bulirsch el3" },
    FunctionInfo { name: "cel", params: &[("kc", C), ("p", C), ("a", C), ("b", C)], summary: "Bulirsch cel" },
    FunctionInfo { name: "ln", params: &[("x", C), ("y", C)], summary: "ln(x/y)" },
    FunctionInfo { name: "atan", params: &[("x", C), ("y", C)], summary: "arctan(x/y)" },
    FunctionInfo { name: "atanh", params: &[("x", C), ("y", C)], summary: "arctanh(x/y)" },
    FunctionInfo { name: "asin", params: &[("x", C), ("y", C)], summary: "arcsin(x/y)" },
    FunctionInfo { name: "asinh", params: &[("x", C), ("y", C)], summary: "arcsinh(x/y)" },
    FunctionInfo { name: "acos", params: &[("x", C), ("y", C)], summary: "arccos(x/y)" },
    FunctionInfo { name: "acosh", params: &[("x", C), ("y", C)], summary: "arccosh(x/y)" },
];

pub fn lookup(name: &str) -> Option<&'static FunctionInfo> {
    REGISTRY.iter().find(|f| f.name == name)
}

/// A value ready for printing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex,
    pub n_iter: Option<u32>,
    pub r: f64,
    pub unchecked: bool,
}

#[derive(Serialize)]
struct JsonValue {
    re: f64,
    im: f64,
    n_iter: Option<u32>,
    r: f64,
}

pub fn render(e: &Evaluation, opts: &GlobalOpts) -> String {
    if opts.json {
        serde_json::to_string(&JsonValue {
            re: e.value.re,
            im: e.value.im,
            n_iter: e.n_iter,
            r: e.r,
        })
        .expect("plain struct serializes")
    } else if opts.exact {
        format_exact(e.value)
    } else {
        format_complex(e.value, DIGITS)
    }
}

fn parse_args(info: &FunctionInfo, raw: &[String]) -> Result<Vec<Complex>, Failure> {
    if raw.len() != info.params.len() {
        let names: Vec<&str> = info.params.iter().map(|p| p.0).collect();
        return Err(Failure::Usage(format!(
            "{} takes {} argument(s) ({}), got {}",
            info.name,
            names.len(),
            names.join(" "),
            raw.len()
        )));
    }
    raw.iter()
        .zip(info.params)
        .map(|(text, &(name, kind))| {
            let z = parse_complex(text).map_err(|e| Failure::Usage(e.to_string()))?;
            if kind == Param::Real && z.im != 0.0 {
                return Err(Failure::Usage(format!("{name} must be real, got {text}")));
            }
            Ok(z)
        })
        .collect()
}

/// Evaluates registry function `name` on argument literals.
pub fn evaluate(name: &str, raw: &[String], opts: &GlobalOpts) -> Result<Evaluation, Failure> {
    let info = lookup(name).ok_or_else(|| {
        Failure::Usage(format!("unknown function {name:?}; try `carlson eval list`"))
    })?;
    let a = parse_args(info, raw)?;
    let r = Tolerance::new(opts.rel_err).map_err(|e| Failure::Usage(e.to_string()))?;
    let plain = |value: Complex| Evaluation {
        value,
        n_iter: None,
        r: r.value(),
        unchecked: false,
    };
    let full = |res: carlson::EvalResult| Evaluation {
        value: res.value,
        n_iter: Some(res.n_iterations),
        r: r.value(),
        unchecked: res.unchecked,
    };
    let out = match name {
        "rf" => full(rf(a[0], a[1], a[2], r)?),
        "rc" => full(rc(a[0], a[1], r)?),
        "rj" if opts.unchecked => full(rj_unchecked(a[0], a[1], a[2], a[3], r)?),
        "rj" => full(rj(a[0], a[1], a[2], a[3], r)?),
        "rd" => full(rd(a[0], a[1], a[2], r)?),
        "rg" => full(rg(a[0], a[1], a[2], r)?),
        "rf0" | "rg0" => {
            let c = complete_rf_rg(a[0], a[1], r)?;
            Evaluation {
                n_iter: Some(c.n_iterations),
                ..plain(if name == "rf0" { c.rf0 } else { c.rg0 })
            }
        }
        "rd0" => plain(rd_complete(a[0], a[1], r)?),
        "K" => plain(complete_k_e(a[0], r)?.k),
        "E" => plain(complete_k_e(a[0], r)?.e),
        "F" => plain(legendre_f(a[0].re, a[1], r)?),
        "Einc" => plain(legendre_e(a[0].re, a[1], r)?),
        "Pi" => plain(legendre_pi(a[0].re, a[1], a[2].re, r)?),
        "D" => plain(legendre_d(a[0].re, a[1], r)?),
        "zeta" => plain(jacobi_zeta(a[0].re, a[1], r)?),
        "lambda0" => plain(heuman_lambda(a[0].re, a[1], r)?),
        "el1" => plain(el1(a[0].re, a[1], r)?),
        "el2" => plain(el2(a[0].re, a[1], a[2], a[3], r)?),
        "el3" => plain(el3(a[0].re, a[1], a[2], r)?),
        "cel" => plain(cel(a[0], a[1], a[2], a[3], r)?),
        _ => {
            let kind: InverseKind = name.parse().map_err(Failure::Usage)?;
            plain(inverse_via_rc(kind, a[0], a[1], r)?)
        }
    };
    Ok(out)
}

fn parse_upper(text: &str) -> Result<UpperLimit, Failure> {
    match text.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" | "+infinity" => Ok(UpperLimit::Infinity),
        _ => {
            let z = parse_complex(text).map_err(|e| Failure::Usage(e.to_string()))?;
            if z.im != 0.0 {
                return Err(Failure::Usage(format!("upper limit must be real, got {text}")));
            }
            Ok(UpperLimit::Finite(z.re))
        }
    }
}

fn selftest(
    out: &mut dyn Write,
    r: Tolerance,
    trials: usize,
    seed: u64,
    corpus: Option<&PathBuf>,
) -> Result<(), Failure> {
    let report = match corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let records = parse_corpus(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            check_corpus(&records, r, 10.0 * r.value())
        }
        None => run_check_corpus(r),
    };
    let _ = writeln!(out, "{report}");
    let consistency = run_consistency_suite(seed, trials, r);
    let _ = writeln!(out, "{consistency}");
    if report.passed() && consistency.passed() {
        let _ = writeln!(out, "selftest: ok");
        Ok(())
    } else {
        Err(Failure::Failed("selftest: failures found".into()))
    }
}

fn list(out: &mut dyn Write) {
    for f in REGISTRY {
        let params: Vec<&str> = f.params.iter().map(|p| p.0).collect();
        let _ = writeln!(out, "{:<8} {:<14} {}", f.name, params.join(" "), f.summary);
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Eval { function, args } if function == "list" && args.is_empty() => {
            list(out);
            Ok(())
        }
        Command::Eval { function, args } => {
            let e = evaluate(function, args, &cli.opts)?;
            if function == "rj" && e.unchecked {
                let a: Vec<Complex> = args.iter().filter_map(|s| parse_complex(s).ok()).collect();
                if rj_admissibility(a[0], a[1], a[2], a[3]).is_none() {
                    let _ = writeln!(err, "warning: rj evaluated outside its admissible arguments");
                }
            }
            let _ = writeln!(out, "{}", render(&e, &cli.opts));
            Ok(())
        }
        Command::Selftest { trials, seed, corpus } => {
            if *trials == 0 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let r = Tolerance::new(cli.opts.rel_err).map_err(|e| Failure::Usage(e.to_string()))?;
            selftest(out, r, *trials, *seed, corpus.as_ref())
        }
        Command::Quartic { f1, g1, h1, f2, g2, h2, y, x } => {
            let r = Tolerance::new(cli.opts.rel_err).map_err(|e| Failure::Usage(e.to_string()))?;
            let spec = QuarticSpec {
                q1: QuadraticCoeffs::new(*f1, *g1, *h1),
                q2: QuadraticCoeffs::new(*f2, *g2, *h2),
                y: *y,
                x: parse_upper(x)?,
            };
            let v = eval_quartic_detailed(&spec, r)?;
            let e = Evaluation {
                value: Complex::new(v.value.re, 0.0),
                n_iter: None,
                r: r.value(),
                unchecked: false,
            };
            let _ = writeln!(out, "{}", render(&e, &cli.opts));
            Ok(())
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code: 0 on success, 1 on a domain error or failed self-test, 2 on a usage
/// error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let (Failure::Usage(msg) | Failure::Failed(msg)) = &f;
            let _ = writeln!(err, "error: {msg}");
            f.exit_code()
        }
    }
}
