//! `m0a`: command-line front end for the divisor calculator and certifier.
//!
//! Exit codes: 0 on success, 1 on invalid input, 2 when a certificate is not
//! strictly positive or a fixture fails.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use m0a::certify::{Certifier, Perturbation, Verdict};
use m0a::classes::{log_canonical_class, DivisorClass, WeightVector};
use m0a::family::FamilyModel;
use m0a::morphism::{pullback_reduction, pullback_replacement, pushforward_reduction};
use m0a::positivity::{ample_interval, c0_lower, g_series, threshold_c, CoefficientVector};
use m0a::rational::{self, Rational};
use m0a::{fixtures, Error};

#[derive(Parser)]
#[command(name = "m0a", version, about = "Exact divisor classes and positivity certificates on weighted M_{0,n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build or transport divisor classes.
    Class {
        #[command(subcommand)]
        op: ClassOp,
    },
    /// Work with a family file.
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
    /// Certify positivity of D_k(c).
    Certify(CertifyArgs),
    /// Tabulate the c-thresholds for one k.
    Thresholds(ThresholdArgs),
    /// Recompute the worked test curves and identities.
    Fixtures,
}

#[derive(Args)]
struct Weights {
    #[arg(long)]
    n: i64,
    #[arg(long, default_value_t = 0)]
    m: i64,
    #[arg(long)]
    k: i64,
}

impl Weights {
    fn build(&self) -> Result<WeightVector, Error> {
        WeightVector::new(self.n, self.m, self.k)
    }
}

#[derive(Args)]
struct ClassInput {
    /// Read the class record from this file instead of stdin.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Use D_k(c) on the given weights as the input class.
    #[arg(long, requires = "c")]
    dk: bool,
    #[arg(long, value_parser = parse_rational)]
    c: Option<Rational>,
}

#[derive(Subcommand)]
enum ClassOp {
    /// D_k(c) = c psi_sigma + (2c-1) delta_s + psi_tau - delta.
    Dk {
        #[command(flatten)]
        weights: Weights,
        #[arg(long, value_parser = parse_rational)]
        c: Rational,
        #[arg(long)]
        json: bool,
    },
    /// K + alpha Delta on the unweighted space and its normalization.
    Logcanonical {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long)]
        json: bool,
    },
    /// Push a class on M_{0,n+m} forward to (n,m,k).
    Push {
        #[command(flatten)]
        weights: Weights,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Pull a class on (n,m,k) back to (n,m,k-1).
    PullReduction {
        #[command(flatten)]
        weights: Weights,
        #[command(flatten)]
        input: ClassInput,
        #[arg(long)]
        json: bool,
    },
    /// Pull a class on (n,m,k) back to (n-k,m+1,k).
    PullReplacement {
        #[command(flatten)]
        weights: Weights,
        #[command(flatten)]
        input: ClassInput,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FamilyOp {
    /// List every violated invariant.
    Validate { file: PathBuf },
    /// Tautological degrees and boundary node counts.
    Intersect {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Degree of a class on the family.
    Eval {
        file: PathBuf,
        #[arg(long, requires = "c", conflicts_with = "class_file")]
        dk: bool,
        #[arg(long, value_parser = parse_rational)]
        c: Option<Rational>,
        #[arg(long)]
        class_file: Option<PathBuf>,
    },
    /// F_Delta, F_sigma, F_tau, F_sigma_tau at every level.
    Fvalues { file: PathBuf },
    /// G(i) for the combination with parameters (a, b).
    Gseries {
        file: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        a: Rational,
        #[arg(long, value_parser = parse_rational, default_value = "0")]
        b: Rational,
    },
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    weights: Weights,
    #[arg(long, value_parser = parse_rational)]
    c: Rational,
    /// Boundary perturbation `i,j=p/q`; repeatable.
    #[arg(long = "eps")]
    eps: Vec<String>,
    /// Only check generically smooth families of the top space.
    #[arg(long)]
    generic_only: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ThresholdArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, default_value_t = 10)]
    nmax: u32,
    #[arg(long, default_value_t = 3)]
    mmax: u32,
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    rational::parse(text).map_err(|e| e.to_string())
}

enum Failure {
    Input(String),
    Certificate,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_text(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_class(path: Option<&PathBuf>) -> Result<DivisorClass, Failure> {
    Ok(read_text(path)?.parse::<DivisorClass>()?)
}

fn read_family(path: &PathBuf) -> Result<FamilyModel, Failure> {
    Ok(FamilyModel::from_toml_str(&read_text(Some(path))?)?)
}

fn print_class(cls: &DivisorClass, json: bool) {
    if json {
        println!("{}", cls.to_json());
    } else {
        print!("{}", cls.to_record());
    }
}

fn input_class(weights: &WeightVector, input: &ClassInput) -> Result<DivisorClass, Failure> {
    let cls = if input.dk {
        DivisorClass::dk(*weights, input.c.as_ref().expect("clap enforces --c"))
    } else {
        read_class(input.input.as_ref())?
    };
    if cls.ambient() != weights {
        return Err(Error::AmbientMismatch(cls.ambient().to_string(), weights.to_string()).into());
    }
    Ok(cls)
}

fn run_class(op: ClassOp) -> Outcome {
    match op {
        ClassOp::Dk { weights, c, json } => print_class(&DivisorClass::dk(weights.build()?, &c), json),
        ClassOp::Logcanonical { n, alpha, json } => {
            let lc = log_canonical_class(n, &alpha)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "class": lc.class.to_json(),
                        "c": lc.c.to_string(),
                        "normalized": lc.normalized.to_json(),
                    })
                );
            } else {
                print!("{}", lc.class.to_record());
                println!("# c={}", lc.c);
                for line in lc.normalized.to_record().lines() {
                    println!("# normalized {line}");
                }
            }
        }
        ClassOp::Push { weights, input, json } => {
            let cls = read_class(input.as_ref())?;
            print_class(&pushforward_reduction(&cls, weights.build()?)?, json);
        }
        ClassOp::PullReduction { weights, input, json } => {
            let cls = input_class(&weights.build()?, &input)?;
            print_class(&pullback_reduction(&cls)?, json);
        }
        ClassOp::PullReplacement { weights, input, json } => {
            let cls = input_class(&weights.build()?, &input)?;
            print_class(&pullback_replacement(&cls)?, json);
        }
    }
    Ok(())
}

fn valid_family(path: &PathBuf) -> Result<FamilyModel, Failure> {
    let family = read_family(path)?;
    let violations = family.validate();
    if violations.is_empty() {
        return Ok(family);
    }
    for v in &violations {
        eprintln!("{v}");
    }
    Err(Failure::Input(format!("{} violation(s)", violations.len())))
}

fn run_family(op: FamilyOp) -> Outcome {
    match op {
        FamilyOp::Validate { file } => {
            valid_family(&file)?;
            println!("valid");
        }
        FamilyOp::Intersect { file, json } => {
            let r = valid_family(&file)?.intersection_numbers()?;
            if json {
                let counts: serde_json::Map<String, serde_json::Value> = r
                    .boundary_counts
                    .iter()
                    .map(|(k, v)| (k.to_string(), serde_json::Value::from(*v)))
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "psi_sigma_B": r.psi_sigma_b.to_string(),
                        "psi_tau_B": r.psi_tau_b.to_string(),
                        "delta_s_B": r.delta_s_b.to_string(),
                        "delta_B": r.delta_b.to_string(),
                        "boundary_counts": counts,
                    })
                );
            } else {
                println!("psi_sigma_B\tpsi_tau_B\tdelta_s_B\tdelta_B");
                println!("{}\t{}\t{}\t{}", r.psi_sigma_b, r.psi_tau_b, r.delta_s_b, r.delta_b);
                for (key, count) in &r.boundary_counts {
                    println!("boundary[{key}]\t{count}");
                }
            }
        }
        FamilyOp::Eval { file, dk, c, class_file } => {
            let family = valid_family(&file)?;
            let cls = if dk {
                DivisorClass::dk(*family.weights(), c.as_ref().expect("clap enforces --c"))
            } else {
                let path = class_file
                    .ok_or_else(|| Failure::Input("give --dk --c or --class-file".to_string()))?;
                read_class(Some(&path))?
            };
            println!("{}", family.evaluate_class(&cls)?);
        }
        FamilyOp::Fvalues { file } => {
            let series = valid_family(&file)?.f_series()?;
            println!("i\tF_delta\tF_sigma\tF_tau\tF_sigma_tau");
            for (i, f) in series.iter().enumerate() {
                println!("{i}\t{}\t{}\t{}\t{}", f.delta, f.sigma, f.tau, f.sigma_tau);
            }
        }
        FamilyOp::Gseries { file, a, b } => {
            let family = valid_family(&file)?;
            let coeffs = CoefficientVector::from_ab(family.weights().m(), &a, &b)?;
            println!("i\tG");
            for (i, g) in g_series(&family, &coeffs)?.iter().enumerate() {
                println!("{i}\t{g}");
            }
        }
    }
    Ok(())
}

fn run_certify(args: CertifyArgs) -> Outcome {
    let w = args.weights.build()?;
    let mut eps = Perturbation::default();
    for entry in &args.eps {
        let (key, value) = Perturbation::parse_entry(entry)?;
        eps.entries.insert(key, value);
    }
    let mut certifier = Certifier::new();
    let cert = if args.generic_only {
        if !eps.is_zero() {
            return Err(Failure::Input("--eps is not used with --generic-only".to_string()));
        }
        certifier.certify_generic(&w, &args.c)
    } else {
        certifier.perturbed_certify(&w, &args.c, &eps)?
    };
    if args.json {
        println!("{}", cert.to_json());
    } else {
        print!("{}", cert.report());
    }
    if cert.verdict == Verdict::StrictlyPositive {
        Ok(())
    } else {
        Err(Failure::Certificate)
    }
}

fn run_thresholds(args: ThresholdArgs) -> Outcome {
    if args.k == 0 {
        return Err(Failure::Input("k must be at least 1".to_string()));
    }
    println!("ample_interval\tk={}\t{}", args.k, ample_interval(args.k));
    println!("n\tm\tcase\tc\tc0\tstrict");
    for n in 0..=args.nmax {
        for m in 0..=args.mmax {
            let Ok(w) = WeightVector::new(n.into(), m.into(), args.k.into()) else {
                continue;
            };
            let t = threshold_c(&w);
            let c0 = c0_lower(&w);
            println!(
                "{n}\t{m}\t{}\t{}\t{}\t{}",
                t.case,
                t.value,
                c0.c0,
                if c0.strict { "strict" } else { "not_strict" }
            );
        }
    }
    Ok(())
}

fn run_fixtures() -> Outcome {
    let all = fixtures::all()?;
    for f in &all {
        println!("{}", f.line());
    }
    if all.iter().all(|f| f.pass) {
        Ok(())
    } else {
        Err(Failure::Certificate)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Class { op } => run_class(op),
        Command::Family { op } => run_family(op),
        Command::Certify(args) => run_certify(args),
        Command::Thresholds(args) => run_thresholds(args),
        Command::Fixtures => run_fixtures(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Certificate) => ExitCode::from(2),
    }
}
