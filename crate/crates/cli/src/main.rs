//! `interlace`: classify polynomials, dump minors and continued fractions,
//! generate test families and run batch verification.
//!
//! Exit codes: 0 decisive, 1 usage, parse or IO error, 2 boundary or
//! indeterminate result.

mod batch;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use interlace_core::criteria::{classify, duality_argument_check, rhp_unit_disc_probe};
use interlace_core::error::Error;
use interlace_core::generate::{binomial_dual, binomial_dual_roots, random_si, random_stable};
use interlace_core::hankel::{associated_phi, phi_hankel, r_hankel, shares_roots_with_reflection};
use interlace_core::hurwitz::{has_zero_minor, leading_minors};
use interlace_core::poly::{parse_rational, to_f64, Polynomial, Rational};
use interlace_core::roots::{isolate_real_roots, refine, si_oracle};
use interlace_core::stieltjes::{cf_coeffs_from_minors, cf_expand};
use interlace_core::transform::{dual, dual_via_rotation, from_roots, tridiagonal_char_poly, TridiagonalSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const DEFAULT_WIDTH: &str = "1e-12";

#[derive(Parser)]
#[command(name = "interlace", version, about = "Self-interlacing and Hurwitz stability of real polynomials")]
struct Cli {
    /// Emit JSON (the only output format; accepted for compatibility)
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyArg {
    /// Coefficients from the leading one down, e.g. "1 -2 -5 6". Read from stdin when omitted.
    #[arg(allow_hyphen_values = true, num_args = 0..)]
    poly: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every criterion and both oracles
    Classify {
        /// Also run the duality residual check at this width
        #[arg(long)]
        width: Option<String>,
        /// Also probe |R| on this many right half-plane points when the polynomial is stable
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Hurwitz minors and Hankel minors of R and Φ
    Minors {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Stieltjes continued fraction of Φ by expansion and by minors
    Cf {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// The dual polynomial
    Dual {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Isolating intervals of the real roots and the self-interlacing verdict
    Roots {
        /// Refinement width, a rational such as 1/1000 or 1e-12
        #[arg(long, default_value = DEFAULT_WIDTH)]
        width: String,
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Generate polynomials
    Generate {
        #[command(subcommand)]
        mode: GenerateMode,
    },
    /// Run the identity suite and classification on every line of a file
    VerifyBatch {
        input: PathBuf,
        /// Write the JSON result here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Random general minors per polynomial beyond all minors of order <= 3
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GenerateMode {
    /// leading * prod (z - root)
    FromRoots {
        #[arg(long, default_value = "1")]
        leading: String,
        #[arg(allow_hyphen_values = true, required = true)]
        roots: Vec<String>,
    },
    /// Characteristic polynomial of the tridiagonal matrix with entries b_1..b_n
    Tridiagonal {
        #[arg(allow_hyphen_values = true, required = true)]
        b: Vec<String>,
    },
    /// dual((z + a)^n) with its closed-form roots
    BinomialDual {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
    },
    /// Random self-interlacing polynomials of kind I
    RandomSi {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Random Hurwitz stable polynomials
    RandomStable {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

/// A failed command: exit code plus the JSON body to print.
struct Failure {
    code: u8,
    body: Value,
}

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Failure { code: 1, body: json!({ "error": msg.to_string() }) }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e)
    }
}

type Outcome = Result<(Value, u8), Failure>;

fn read_poly(arg: &PolyArg) -> Result<Polynomial, Failure> {
    let text = if arg.poly.is_empty() {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(Failure::usage)?;
        buf
    } else {
        arg.poly.join(" ")
    };
    Ok(text.trim().parse()?)
}

/// A rational, or `Ne-K` / `Ne+K` with integer `N`.
fn parse_width(text: &str) -> Result<Rational, Failure> {
    let value = match text.split_once(['e', 'E']) {
        Some((mantissa, exp)) => {
            let m = parse_rational(mantissa)?;
            let e: i32 = exp.parse().map_err(|_| Failure::usage(format!("bad exponent in `{text}`")))?;
            let ten = Rational::from_integer(10.into());
            let scale = (0..e.unsigned_abs()).fold(Rational::from_integer(1.into()), |acc, _| acc * &ten);
            if e < 0 {
                m / scale
            } else {
                m * scale
            }
        }
        None => parse_rational(text)?,
    };
    if value <= Rational::from_integer(0.into()) {
        return Err(Failure::usage("width must be positive"));
    }
    Ok(value)
}

fn parse_list(items: &[String]) -> Result<Vec<Rational>, Failure> {
    items
        .iter()
        .flat_map(|s| s.split_whitespace())
        .map(|t| parse_rational(t).map_err(Failure::from))
        .collect()
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn cmd_classify(poly: &PolyArg, width: Option<&str>, samples: Option<usize>) -> Outcome {
    let p = read_poly(poly)?;
    let report = classify(&p)?;
    let code = if report.is_decisive() { 0 } else { 2 };
    let mut out = serde_json::to_value(&report).expect("report serializes");
    if let Some(w) = width {
        let w = parse_width(w)?;
        out["duality_argument"] = match duality_argument_check(&p, &w) {
            Ok(r) => serde_json::to_value(r).expect("report serializes"),
            Err(e) => json!({ "skipped": e.to_string() }),
        };
    }
    if let Some(n) = samples {
        if report.stable {
            out["disc_probe"] = serde_json::to_value(rhp_unit_disc_probe(&p, n)?).expect("probe serializes");
        }
    }
    Ok((out, code))
}

fn cmd_minors(poly: &PolyArg) -> Outcome {
    let p = read_poly(poly)?;
    let deltas = leading_minors(&p)?;
    let r = r_hankel(&p)?;
    let phi = phi_hankel(&p)?;
    let mut notes = Vec::new();
    if has_zero_minor(&deltas) {
        notes.push("a Hurwitz minor vanishes");
    }
    if shares_roots_with_reflection(&p) {
        notes.push("p and p(-z) share roots; the Hankel minors of R lose rank");
    }
    Ok((
        json!({
            "input": p.to_text(),
            "delta": strings(&deltas),
            "D_R": strings(&r.d),
            "D_phi": strings(&phi.d),
            "Dhat_phi": strings(&phi.dhat),
            "notes": notes,
        }),
        0,
    ))
}

fn cmd_cf(poly: &PolyArg) -> Outcome {
    let p = read_poly(poly)?;
    let expansion = match cf_expand(&associated_phi(&p)?) {
        Ok(cf) => cf,
        Err(Error::NoStieltjesExpansion { step }) => {
            let body = json!({ "input": p.to_text(), "error": "no expansion", "step": step });
            return Ok((body, 2));
        }
        Err(e) => return Err(e.into()),
    };
    let from_minors = cf_coeffs_from_minors(&p).ok();
    let agree = from_minors.as_ref() == Some(&expansion);
    Ok((
        json!({
            "input": p.to_text(),
            "expansion": expansion,
            "from_minors": from_minors,
            "agree": agree,
        }),
        0,
    ))
}

fn cmd_dual(poly: &PolyArg) -> Outcome {
    let p = read_poly(poly)?;
    let q = dual(&p);
    let rotated = dual_via_rotation(&p);
    Ok((json!({ "input": p.to_text(), "dual": q.to_text(), "agree": q == rotated }), 0))
}

fn cmd_roots(poly: &PolyArg, width: &str) -> Outcome {
    let p = read_poly(poly)?;
    let w = parse_width(width)?;
    let roots: Vec<Value> = isolate_real_roots(&p)?
        .iter()
        .map(|iv| {
            let iv = refine(&p, iv, &w);
            json!({ "lo": iv.lo.to_string(), "hi": iv.hi.to_string(), "approx": to_f64(&iv.midpoint()) })
        })
        .collect();
    let verdict = si_oracle(&p)?;
    let code = if verdict.indeterminate { 2 } else { 0 };
    Ok((
        json!({
            "input": p.to_text(),
            "width": w.to_string(),
            "roots": roots,
            "si": verdict.kind,
            "reason": verdict.reason,
            "indeterminate": verdict.indeterminate,
        }),
        code,
    ))
}

fn cmd_generate(mode: &GenerateMode) -> Outcome {
    let out = match mode {
        GenerateMode::FromRoots { leading, roots } => {
            let p = from_roots(&parse_list(roots)?, &parse_rational(leading)?);
            json!({ "mode": "from-roots", "polynomial": p.to_text() })
        }
        GenerateMode::Tridiagonal { b } => {
            let spec = TridiagonalSpec::new(parse_list(b)?)?;
            let p = tridiagonal_char_poly(&spec);
            json!({ "mode": "tridiagonal", "polynomial": p.to_text() })
        }
        GenerateMode::BinomialDual { n, a } => {
            let a = parse_rational(a)?;
            let q = binomial_dual(*n, &a)?;
            json!({
                "mode": "binomial-dual",
                "polynomial": q.to_text(),
                "expected_roots": binomial_dual_roots(*n, &a),
            })
        }
        GenerateMode::RandomSi { degree, seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let ps = (0..*count).map(|_| random_si(&mut rng, *degree).map(|p| p.to_text())).collect::<Result<Vec<_>, _>>()?;
            json!({ "mode": "random-si", "seed": seed, "polynomials": ps })
        }
        GenerateMode::RandomStable { degree, seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let ps = (0..*count).map(|_| random_stable(&mut rng, *degree).map(|p| p.to_text())).collect::<Result<Vec<_>, _>>()?;
            json!({ "mode": "random-stable", "seed": seed, "polynomials": ps })
        }
    };
    Ok((out, 0))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify { width, samples, poly } => cmd_classify(poly, width.as_deref(), *samples),
        Command::Minors { poly } => cmd_minors(poly),
        Command::Cf { poly } => cmd_cf(poly),
        Command::Dual { poly } => cmd_dual(poly),
        Command::Roots { width, poly } => cmd_roots(poly, width),
        Command::Generate { mode } => cmd_generate(mode),
        Command::VerifyBatch { input, output, budget, seed } => {
            batch::run(input, output.as_deref(), *budget, *seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let (body, code) = match run(&cli) {
        Ok(ok) => ok,
        Err(f) => (f.body, f.code),
    };
    if !body.is_null() {
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&body).expect("json serializes"));
    }
    ExitCode::from(code)
}
