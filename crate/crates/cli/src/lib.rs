//! `gpi-lab`: exact Gaussian moments, identity checks, inequality checks and
//! seeded randomized sweeps from the command line.
//!
//! Exit codes: `0` when every check holds, `1` when some verdict is false,
//! `2` on usage or input errors. All rationals are printed as `p/q` strings.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gpi_core::exact::rational::{self, Rational};
use gpi_core::identities::{build_polynomial_l, run_suite, SuiteRanges};
use gpi_core::moment::pairing_oracle::pairing_moment;
use gpi_core::special::{contiguous_check, hyp2f1_terminating, pfaff_check, ContiguousRelation, HypergeometricParams};
use gpi_core::verifier::{self, DegenerateTriple};
use gpi_core::{gaussian_moment, CovarianceMatrix, ExponentVector, InequalityVerdict};
use serde::Serialize;
use serde_json::json;

mod sweep;

pub use sweep::{run_sweep, OutputFormat, SweepConfig, SweepRecord, SweepReport};

/// Largest total degree accepted by `moment --oracle`; the pairing count grows
/// like `(k-1)!!`.
const ORACLE_MAX_DEGREE: u64 = 16;

#[derive(Debug, Parser)]
#[command(name = "gpi-lab", version, about = "Exact Gaussian moment and product-inequality checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mixed moment E[prod X_i^k_i] of a centered Gaussian vector.
    Moment {
        /// Covariance file: {"dim": d, "entries": [["p/q", ...], ...]}.
        #[arg(long)]
        cov: PathBuf,
        /// Comma-separated exponents, one per coordinate.
        #[arg(long)]
        exps: String,
        /// Also evaluate by brute-force pairing enumeration and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the combinatorial identity suite.
    Identities {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, default_value_t = 8)]
        r_max: u32,
        #[arg(long, default_value_t = 20)]
        l_max: u32,
    },
    /// Check one claim at one parameter point.
    Check(CheckArgs),
    /// Coefficients of G, H, B (in the variance ratio) or of L.
    Poly {
        #[arg(long, value_enum)]
        which: PolyKind,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Evaluate a terminating 2F1 and optionally validate a transformation.
    Hyp {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        z: Rational,
        #[arg(long)]
        pfaff: bool,
        #[arg(long, value_parser = parse_relation)]
        contiguous: Option<ContiguousRelation>,
    },
    /// Seeded sweep of the three-dimensional inequality over random covariances.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        q: i64,
        #[arg(long, default_value_t = 2)]
        m_max: u32,
        #[arg(long, default_value_t = 2)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Draw diagonal covariances only.
        #[arg(long)]
        diagonal: bool,
    },
    /// Reproduce the failure of the split product bound.
    Counterexample,
}

#[derive(Debug, clap::Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    claim: Claim,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    a2: Rational,
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    b2: Rational,
    #[arg(long)]
    cov: Option<PathBuf>,
    /// `E[XZ]` of a degenerate triple.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    sigma2: Rational,
    /// Width of the isolating interval of the stationary point.
    #[arg(long, value_parser = parse_rational, default_value = "1/1048576")]
    width: Rational,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Claim {
    #[value(name = "prop21")]
    IndependentSum,
    #[value(name = "thm22")]
    DifferenceOfSquares,
    #[value(name = "cor23")]
    EqualVariancePair,
    #[value(name = "lemma29")]
    Bridge,
    #[value(name = "lemma210")]
    StationaryAgreement,
    #[value(name = "lemma31")]
    DegenerateTriple,
    #[value(name = "thm32")]
    ThreeDim,
    #[value(name = "main")]
    Main,
}

impl Claim {
    fn token(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyKind {
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
    #[value(name = "B")]
    B,
    #[value(name = "L")]
    L,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_relation(s: &str) -> Result<ContiguousRelation, String> {
    s.parse().map_err(|e: gpi_core::Error| e.to_string())
}

/// Outcome of a subcommand that got as far as producing a report.
struct Report {
    body: String,
    ok: bool,
}

impl Report {
    fn json<T: Serialize>(value: &T, ok: bool) -> Result<Self, String> {
        let body = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        Ok(Report { body: body + "\n", ok })
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok(report) => {
            if let Err(e) = out.write_all(report.body.as_bytes()) {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_cov(path: &Path) -> Result<CovarianceMatrix, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    CovarianceMatrix::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn core<T>(r: gpi_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn execute(command: Command, err: &mut dyn Write) -> Result<Report, String> {
    match command {
        Command::Moment { cov, exps, oracle } => {
            let cov = read_cov(&cov)?;
            let k = core(ExponentVector::parse_list(&exps))?;
            let value = core(gaussian_moment(&cov, &k))?;
            let mut ok = true;
            if oracle {
                if k.total_degree() > ORACLE_MAX_DEGREE {
                    return Err(format!("--oracle supports total degree <= {ORACLE_MAX_DEGREE}"));
                }
                let check = pairing_moment(&cov, &k);
                if check != value {
                    let _ = writeln!(err, "oracle mismatch: engine {value}, pairings {check}");
                    ok = false;
                }
            }
            Ok(Report { body: format!("{}\n", rational::render(&value)), ok })
        }
        Command::Identities { n_max, r_max, l_max } => {
            let ranges = SuiteRanges { n_max, r_max, l_max, ..SuiteRanges::default() };
            let verdicts = core(run_suite(&ranges))?;
            let holding = verdicts.iter().filter(|v| v.holds).count();
            let ok = holding == verdicts.len();
            let summary = json!({ "total": verdicts.len(), "holds": holding });
            Report::json(&json!({ "verdicts": verdicts, "summary": summary }), ok)
        }
        Command::Check(args) => check(args),
        Command::Poly { which, m, n, r } => {
            let body = match which {
                PolyKind::L => {
                    let l = core(build_polynomial_l(r))?;
                    json!({ "which": "L", "r": r, "coeffs": render_all(l.coeffs()) })
                }
                _ => {
                    let set = core(verifier::build_gamma_polynomials(m, n, r))?;
                    let (name, p) = match which {
                        PolyKind::G => ("G", &set.g),
                        PolyKind::H => ("H", &set.h),
                        _ => ("B", &set.b),
                    };
                    json!({ "which": name, "m": m, "n": n, "r": r, "coeffs": render_all(p.coeffs()) })
                }
            };
            Report::json(&body, true)
        }
        Command::Hyp { a, b, c, z, pfaff, contiguous } => {
            let p = HypergeometricParams::new(a, b, c, z);
            let value = core(hyp2f1_terminating(&p))?;
            let mut body = json!({
                "a": rational::render(&p.a),
                "b": rational::render(&p.b),
                "c": rational::render(&p.c),
                "z": rational::render(&p.z),
                "value": rational::render(&value),
            });
            let mut ok = true;
            if pfaff {
                let holds = core(pfaff_check(&p))?;
                body["pfaff"] = json!(holds);
                ok &= holds;
            }
            if let Some(rel) = contiguous {
                let holds = core(contiguous_check(rel, &p))?;
                body["contiguous"] = json!({ "relation": rel.to_string(), "holds": holds });
                ok &= holds;
            }
            Report::json(&body, ok)
        }
        Command::Sweep { seed, count, dim, q, m_max, n_max, format, out, diagonal } => {
            let config = SweepConfig { seed, count, dim, q, m_max, n_max, format, diagonal };
            let threads = match std::env::var("GPI_LAB_THREADS") {
                Ok(s) => Some(
                    s.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&t| t > 0)
                        .ok_or_else(|| format!("GPI_LAB_THREADS must be a positive integer, got {s:?}"))?,
                ),
                Err(_) => None,
            };
            let report = run_sweep(&config, threads)?;
            let body = report.render(format)?;
            let s = &report.summary;
            let _ = writeln!(
                err,
                "sweep: {} records, {} hold, {} equalities, {} refuted",
                s.records, s.holds, s.equalities, s.refuted
            );
            let ok = s.refuted == 0;
            match out {
                Some(path) => {
                    fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
                    Ok(Report { body: String::new(), ok })
                }
                None => Ok(Report { body, ok }),
            }
        }
        Command::Counterexample => {
            let c = core(verifier::split_bound_counterexample())?;
            let refuted = c.refuted;
            Report::json(&c, refuted)
        }
    }
}

fn render_all(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(rational::render).collect()
}

fn inequality(v: InequalityVerdict) -> Result<Report, String> {
    let ok = v.confirms();
    Report::json(&v, ok)
}

fn check(args: CheckArgs) -> Result<Report, String> {
    let CheckArgs { claim, m, n, r, a2, b2, cov, a, sigma2, width } = args;
    let need_cov = || -> Result<CovarianceMatrix, String> {
        let path = cov.as_ref().ok_or_else(|| format!("--claim {} needs --cov", claim.token()))?;
        read_cov(path)
    };
    match claim {
        Claim::IndependentSum => inequality(core(verifier::check_independent_sum(m, n, r, &a2, &b2))?),
        Claim::DifferenceOfSquares => inequality(core(verifier::check_difference_of_squares(m, n, r, &a2, &b2))?),
        Claim::EqualVariancePair => inequality(core(verifier::check_equal_variance_pair(m, n, r, &need_cov()?))?),
        Claim::ThreeDim => inequality(core(verifier::check_three_dim(m, n, &need_cov()?))?),
        Claim::Main => inequality(core(verifier::check_product_inequality(m, &need_cov()?))?),
        Claim::DegenerateTriple => {
            let a = a.ok_or("--claim lemma31 needs --a")?;
            let triple = core(DegenerateTriple::from_a(a, sigma2))?;
            inequality(core(verifier::check_degenerate_triple(m, n, &triple))?)
        }
        Claim::Bridge => {
            let verdicts = core(verifier::check_moment_hypergeometric_bridge(m, n, r))?;
            let ok = verdicts.iter().all(|v| v.holds);
            Report::json(&verdicts, ok)
        }
        Claim::StationaryAgreement => {
            let v = core(verifier::check_stationary_agreement(m, n, r, &width))?;
            let ok = v.holds;
            Report::json(&v, ok)
        }
    }
}
