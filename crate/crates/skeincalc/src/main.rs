//! Batch command-line front end. JSON on stdout, diagnostics on stderr.
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use clap::{Parser, Subcommand};
use skeincalc::certificate::Certificate;
use skeincalc::error::Error;
use skeincalc::identities::{sweep, Identity, ALL_IDENTITIES};
use skeincalc::json;
use skeincalc::relators::{relator, Family, RelatorId, SurgeryParams};
use skeincalc::skein::SkeinElement;
use skeincalc::{enumerate_basis, eta_elem, generators, DEFAULT_MAX_TERMS};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "skeincalc",
    version,
    about = "Exact skein-module computations for the Seifert manifolds D2(k1,k2) and S2(k1,k2,k3)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print one relator as an element of the free module.
    Relator {
        /// Curve pair: 12, 13 or 23.
        #[arg(long)]
        family: u8,
        /// Slide indices n1 n2 n3.
        #[arg(long, num_args = 3, allow_negative_numbers = true)]
        n: Vec<i64>,
        /// Surgery coefficients k1 k2 [k3]; k3 is required for 13 and 23.
        #[arg(long, num_args = 2..=3, allow_negative_numbers = true)]
        k: Vec<i64>,
    },
    /// Sweep one identity (or `all`) and exit 0 iff every instance is zero.
    Verify {
        /// Identity name, or `all` for the whole suite at default ranges.
        #[arg(long)]
        identity: String,
        /// Range override `key=lo:hi`; may repeat. Only with a single identity.
        #[arg(long = "range", value_name = "KEY=LO:HI")]
        ranges: Vec<String>,
        /// Print the JSON sweep report(s) to stdout.
        #[arg(long)]
        report: bool,
        /// Worker threads for the sweep.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Reduce onto the two-handle staircase basis.
    #[command(name = "reduce-d2")]
    ReduceD2 {
        #[arg(long, num_args = 2)]
        k: Vec<i64>,
        /// Input element (JSON file).
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the balancing certificate here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Reduce into the three-handle generator box.
    #[command(name = "reduce-s2")]
    ReduceS2 {
        #[arg(long, num_args = 3)]
        k: Vec<i64>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// List staircase-basis monomials with l3 <= n3-max.
    Basis {
        #[arg(long, num_args = 2)]
        k: Vec<i64>,
        #[arg(long = "n3-max", allow_negative_numbers = true)]
        n3_max: i64,
    },
    /// List the generator box monomials.
    Generators {
        #[arg(long, num_args = 3)]
        k: Vec<i64>,
    },
    /// Evaluate the root-of-unity homomorphism on an element.
    Eta {
        #[arg(long, num_args = 3)]
        k: Vec<i64>,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Re-verify a certificate against an input/output pair.
    #[command(name = "check-cert")]
    CheckCert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
}

enum AppError {
    /// Bad flags, unreadable files, malformed input: exit 2.
    Usage(String),
    /// A verification failed (nonzero residual, unbalanced certificate): exit 1.
    Verification(String),
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Usage(e.to_string())
    }
}

fn read_element(path: &Path) -> Result<SkeinElement, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?;
    json::skein_from_str(&text).map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))
}

fn max_terms_from_env() -> Result<usize, AppError> {
    match std::env::var("SKEINCALC_MAX_TERMS") {
        Ok(s) => s
            .parse::<usize>()
            .map_err(|_| AppError::Usage(format!("SKEINCALC_MAX_TERMS=`{s}` is not a size"))),
        Err(_) => Ok(DEFAULT_MAX_TERMS),
    }
}

fn parse_range(spec: &str) -> Result<(String, (i64, i64)), AppError> {
    let bad = || AppError::Usage(format!("--range `{spec}`: expected key=lo:hi"));
    let (key, rest) = spec.split_once('=').ok_or_else(bad)?;
    let (lo, hi) = rest.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.parse().map_err(|_| bad())?;
    let hi: i64 = hi.parse().map_err(|_| bad())?;
    Ok((key.to_string(), (lo, hi)))
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.cmd {
        Cmd::Relator { family, n, k } => {
            let family = Family::from_code(family)
                .ok_or_else(|| AppError::Usage("--family must be 12, 13 or 23".to_string()))?;
            let params = match k.as_slice() {
                [k1, k2] => SurgeryParams::d2(*k1, *k2),
                [k1, k2, k3] => SurgeryParams::s2(*k1, *k2, *k3),
                _ => unreachable!("clap enforces arity"),
            };
            let id = RelatorId::new(family, [n[0], n[1], n[2]], params);
            let e = relator(&id)?;
            println!("{}", json::skein_to_json(&e));
            Ok(())
        }

        Cmd::Verify {
            identity,
            ranges,
            report,
            jobs,
        } => {
            if jobs == 0 {
                return Err(AppError::Usage("--jobs must be at least 1".into()));
            }
            let mut range_map: BTreeMap<String, (i64, i64)> = BTreeMap::new();
            for spec in &ranges {
                let (key, bounds) = parse_range(spec)?;
                range_map.insert(key, bounds);
            }
            let targets: Vec<Identity> = if identity == "all" {
                if !range_map.is_empty() {
                    return Err(AppError::Usage(
                        "--range needs a single --identity, not `all`".into(),
                    ));
                }
                ALL_IDENTITIES.to_vec()
            } else {
                vec![Identity::from_name(&identity)
                    .ok_or_else(|| AppError::Usage(format!("unknown identity `{identity}`")))?]
            };
            let mut failures = 0usize;
            for id in targets {
                let rep = sweep(id, &range_map, jobs)?;
                if report {
                    println!("{}", json::sweep_report_to_json(&rep));
                }
                eprintln!(
                    "{}: {} checked, {} skipped, {} failures",
                    rep.identity,
                    rep.checked,
                    rep.skipped,
                    rep.failures.len()
                );
                failures += rep.failures.len();
            }
            if failures > 0 {
                Err(AppError::Verification(format!(
                    "{failures} identity instance(s) had nonzero residuals"
                )))
            } else {
                Ok(())
            }
        }

        Cmd::ReduceD2 { k, input, cert } => {
            let e = read_element(&input)?;
            let max_terms = max_terms_from_env()?;
            let (normal, certificate) =
                skeincalc::reduce_d2::reduce_d2_with_limit(&e, k[0], k[1], max_terms)?;
            println!("{}", json::skein_to_json(&normal));
            write_cert(cert.as_deref(), &certificate)?;
            Ok(())
        }

        Cmd::ReduceS2 { k, input, cert } => {
            let e = read_element(&input)?;
            let max_terms = max_terms_from_env()?;
            let (rep, certificate) =
                skeincalc::reduce_s2::reduce_s2_with_limit(&e, [k[0], k[1], k[2]], max_terms)?;
            println!("{}", json::skein_to_json(&rep.elem));
            write_cert(cert.as_deref(), &certificate)?;
            Ok(())
        }

        Cmd::Basis { k, n3_max } => {
            let (k1, k2) = (k[0], k[1]);
            if k1 < 1 || k2 < k1 {
                return Err(AppError::Usage(format!(
                    "basis needs k2 >= k1 >= 1, got ({k1},{k2})"
                )));
            }
            println!(
                "{}",
                json::monomials_to_json(&enumerate_basis(k1, k2, n3_max))
            );
            Ok(())
        }

        Cmd::Generators { k } => {
            let k = [k[0], k[1], k[2]];
            if k.iter().any(|&ki| ki < 2) {
                return Err(AppError::Usage(format!(
                    "generators needs k_i >= 2, got {k:?}"
                )));
            }
            println!("{}", json::monomials_to_json(&generators(k)));
            Ok(())
        }

        Cmd::Eta { k, input } => {
            let e = read_element(&input)?;
            let value = eta_elem(&e, [k[0], k[1], k[2]]);
            println!("{}", json::eisenstein_to_json(&value));
            Ok(())
        }

        Cmd::CheckCert { input, out, cert } => {
            let e = read_element(&input)?;
            let o = read_element(&out)?;
            let text = std::fs::read_to_string(&cert)
                .map_err(|err| AppError::Usage(format!("{}: {err}", cert.display())))?;
            let certificate = json::certificate_from_str(&text)
                .map_err(|err| AppError::Usage(format!("{}: {err}", cert.display())))?;
            let balanced = certificate.verify(&e, &o)?;
            println!("{{\"balanced\":{balanced}}}");
            if balanced {
                Ok(())
            } else {
                Err(AppError::Verification(
                    "certificate does not balance the input/output pair".into(),
                ))
            }
        }
    }
}

fn write_cert(path: Option<&Path>, cert: &Certificate) -> Result<(), AppError> {
    if let Some(path) = path {
        std::fs::write(path, json::certificate_to_json(cert) + "\n")
            .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
