use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bt_core::annihilator::{etl_dim, etl_dim_alpha, ptl_dim, verify_predicted_basis, AnnihilatorReport};
use bt_core::bt_algebra::{ElementJson, SAlgebra, Tables};
use bt_core::cellular::{Cellular, Flavor};
use bt_core::set_partitions::bell;
use bt_core::tableaux::{enumerate_l, types};
use bt_core::tensor::{Letter, TensorSpace};
use bt_core::verify::{run_suite, Check, SuiteConfig};
use bt_core::{BtError, EvalPoint, LaurentRing, PrimeField, Ring};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

const COMBINATORIAL_LIMIT: usize = 5;
const MATRIX_LIMIT: usize = 4;

#[derive(Parser)]
#[command(name = "btalg", version, about = "Computations in the braids-and-ties algebra E_n(q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of a table
    #[arg(long, global = true)]
    json: bool,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Lift the desk-scale guards on n
    #[arg(long, global = true)]
    force: bool,
    /// Primes for the evaluation points; q0 is drawn from --seed
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Vec<u64>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// dim E_n(q) and its blocks E_n^alpha(q)
    Dim {
        #[arg(long)]
        n: usize,
    },
    /// Run the named property checks
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        /// Number of colors; defaults to N
        #[arg(long)]
        r: Option<usize>,
        /// Multiply every g_i by this scalar first (a deliberately wrong coefficient)
        #[arg(long, hide = true, default_value_t = 1)]
        corrupt_g: i64,
    },
    /// Annihilator of the tensor space: predicted vs brute force
    Annihilator {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<usize>>,
    },
    /// dim PTL_n(q)
    Ptl {
        #[arg(long)]
        n: usize,
    },
    /// dim ETL_{n,N}(q)
    Etl {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Dump a cellular basis of E_n^alpha(q)
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
        #[arg(long, value_enum, default_value_t = FlavorArg::M)]
        flavor: FlavorArg,
    },
    /// Read two elements as JSON on stdin, print their product
    Multiply,
    /// Matrix of one generator on V^⊗n as JSON lines of (row, col, coeff)
    Action {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        r: usize,
        /// g1, e2, ginv3, ...
        #[arg(long)]
        generator: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    M,
    N,
}

enum Failure {
    Config(String),
    Verification,
}

impl From<BtError> for Failure {
    fn from(e: BtError) -> Self {
        Failure::Config(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = run(&cli, &mut out);
    if let Err(e) = emit(&cli.common, &out) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(common: &Common, out: &str) -> std::io::Result<()> {
    match &common.output {
        Some(p) => std::fs::write(p, out),
        None => std::io::stdout().write_all(out.as_bytes()),
    }
}

fn guard(n: usize, limit: usize, force: bool) -> Res<()> {
    if n == 0 {
        return Err(Failure::Config("n must be at least 1".into()));
    }
    if n > limit && !force {
        return Err(Failure::Config(format!("n = {n} exceeds the limit {limit} for this command; pass --force to run anyway")));
    }
    Ok(())
}

fn check_alpha(n: usize, alpha: &[usize]) -> Res<()> {
    let ok = alpha.iter().sum::<usize>() == n && alpha.iter().all(|&a| a > 0) && alpha.windows(2).all(|w| w[0] >= w[1]);
    if ok {
        Ok(())
    } else {
        Err(Failure::Config(format!("alpha {alpha:?} is not a partition of {n}")))
    }
}

fn points(common: &Common) -> Res<Vec<EvalPoint>> {
    if common.primes.is_empty() {
        return Ok(EvalPoint::default_points());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
    common
        .primes
        .iter()
        .map(|&p| {
            if p < 5 {
                return Err(Failure::Config(format!("prime {p} is too small")));
            }
            let q0 = rng.gen_range(2..p - 1) as i64;
            PrimeField::new(p, q0)?;
            Ok(EvalPoint::Prime { p, q0 })
        })
        .collect()
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli, out: &mut String) -> Res<()> {
    let c = &cli.common;
    match &cli.command {
        Command::Dim { n } => dim(c, *n, out),
        Command::Verify { n, big_n, r, corrupt_g } => verify(c, *n, *big_n, r.unwrap_or(*big_n), *corrupt_g, out),
        Command::Annihilator { n, big_n, alpha } => annihilator(c, *n, *big_n, alpha.as_deref(), out),
        Command::Ptl { n } => {
            guard(*n, COMBINATORIAL_LIMIT, c.force)?;
            let d = ptl_dim(*n);
            out.push_str(&if c.json { json(&serde_json::json!({"n": n, "ptl_dim": d})) } else { format!("dim PTL_{n} = {d}\n") });
            Ok(())
        }
        Command::Etl { n, big_n } => {
            guard(*n, COMBINATORIAL_LIMIT, c.force)?;
            if *big_n == 0 {
                return Err(Failure::Config("N must be at least 1".into()));
            }
            let d = etl_dim(*n, *big_n);
            out.push_str(&if c.json { json(&serde_json::json!({"n": n, "N": big_n, "etl_dim": d})) } else { format!("dim ETL_{{{n},{big_n}}} = {d}\n") });
            Ok(())
        }
        Command::Basis { n, alpha, flavor } => basis(c, *n, alpha, *flavor, out),
        Command::Multiply => multiply(c, out),
        Command::Action { n, big_n, r, generator } => action(c, *n, *big_n, *r, generator, out),
    }
}

#[derive(Serialize)]
struct DimRow {
    alpha: Vec<usize>,
    dim: usize,
    cellular_count: usize,
}

fn dim(c: &Common, n: usize, out: &mut String) -> Res<()> {
    guard(n, COMBINATORIAL_LIMIT, c.force)?;
    let total = Tables::shared(n).dim();
    let fact: usize = (1..=n).product();
    let rows: Vec<DimRow> = types(n)
        .into_iter()
        .map(|alpha| {
            let blocks = bt_core::set_partitions::enumerate_of_type(&alpha).len();
            let cellular_count = etl_dim_alpha(n, &alpha);
            DimRow { alpha, dim: blocks * fact, cellular_count }
        })
        .collect();
    if c.json {
        out.push_str(&json(&serde_json::json!({"n": n, "bell": bell(n), "dim": total, "blocks": rows})));
    } else {
        out.push_str(&format!("dim E_{n} = b_{n} * {n}! = {} * {fact} = {total}\n", bell(n)));
        out.push_str(&format!("{:<16} {:>8} {:>14}\n", "alpha", "dim", "sum |Std|^2"));
        for r in &rows {
            out.push_str(&format!("{:<16} {:>8} {:>14}\n", format!("{:?}", r.alpha), r.dim, r.cellular_count));
        }
    }
    Ok(())
}

fn verify(c: &Common, n: usize, big_n: usize, r: usize, corrupt_g: i64, out: &mut String) -> Res<()> {
    guard(n, MATRIX_LIMIT, c.force)?;
    let cfg = SuiteConfig { n, big_n, r, g_scale: corrupt_g };
    let checks: Vec<Check> = run_suite(&cfg)?;
    if c.json {
        out.push_str(&json(&serde_json::json!({"n": n, "N": big_n, "r": r, "checks": checks})));
    } else {
        for ch in &checks {
            let status = if ch.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}", ch.name));
            if !ch.passed {
                out.push_str(&format!(": {}", ch.detail));
            }
            out.push('\n');
        }
    }
    if checks.iter().all(|ch| ch.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn annihilator(c: &Common, n: usize, big_n: usize, alpha: Option<&[usize]>, out: &mut String) -> Res<()> {
    guard(n, MATRIX_LIMIT, c.force)?;
    if big_n == 0 {
        return Err(Failure::Config("N must be at least 1".into()));
    }
    let alphas = match alpha {
        Some(a) => {
            check_alpha(n, a)?;
            vec![a.to_vec()]
        }
        None => types(n),
    };
    let pts = points(c)?;
    let reports: Vec<AnnihilatorReport> = alphas.iter().map(|a| verify_predicted_basis(n, big_n, a, &pts)).collect::<bt_core::Result<_>>()?;
    if c.json {
        out.push_str(&json(&reports));
    } else {
        out.push_str(&format!("{:<16} {:>10} {:>11}  match\n", "alpha", "predicted", "bruteforce"));
        for r in &reports {
            out.push_str(&format!("{:<16} {:>10} {:>11}  {}\n", format!("{:?}", r.alpha), r.predicted, r.bruteforce, r.matched));
        }
        let total: usize = reports.iter().map(|r| r.predicted).sum();
        out.push_str(&format!("total predicted {total}; points: {}\n", pts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")));
    }
    if reports.iter().all(|r| r.matched) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct BasisRecord {
    #[serde(rename = "Lam")]
    lam: bt_core::tableaux::LambdaPair,
    s: bt_core::tableaux::LambdaTableau,
    t: bt_core::tableaux::LambdaTableau,
    element: ElementJson,
}

fn basis(c: &Common, n: usize, alpha: &[usize], flavor: FlavorArg, out: &mut String) -> Res<()> {
    guard(n, MATRIX_LIMIT, c.force)?;
    check_alpha(n, alpha)?;
    let flavor = match flavor {
        FlavorArg::M => Flavor::M,
        FlavorArg::N => Flavor::N,
    };
    let cell = Cellular::new(SAlgebra::generic(n));
    let elems = cell.basis(alpha, flavor)?;
    let alg = cell.algebra();
    if c.json {
        let recs: Vec<BasisRecord> =
            elems.into_iter().map(|e| BasisRecord { element: alg.to_json(&e.element), lam: e.lam, s: e.s, t: e.t }).collect();
        out.push_str(&json(&recs));
    } else {
        for lam in enumerate_l(alpha) {
            let k = elems.iter().filter(|e| e.lam == lam).count();
            out.push_str(&format!("{lam:?}: {k} elements\n"));
        }
        out.push_str(&format!("total {} (use --json for the elements)\n", elems.len()));
    }
    Ok(())
}

fn multiply(c: &Common, out: &mut String) -> Res<()> {
    let mut input = String::new();
    std::io::stdin().read_to_string(&mut input).map_err(|e| Failure::Config(e.to_string()))?;
    let parsed: Vec<ElementJson> = serde_json::Deserializer::from_str(&input)
        .into_iter::<ElementJson>()
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Failure::Config(format!("bad element JSON: {e}")))?;
    let [a, b] = parsed.as_slice() else {
        return Err(Failure::Config(format!("expected two elements on stdin, got {}", parsed.len())));
    };
    if a.n != b.n {
        return Err(BtError::SizeMismatch(a.n, b.n).into());
    }
    guard(a.n, COMBINATORIAL_LIMIT, c.force)?;
    let alg = SAlgebra::generic(a.n);
    let x = alg.from_json(a)?;
    let y = alg.from_json(b)?;
    let p = alg.to_json(&alg.mul(&x, &y));
    out.push_str(&if c.json { serde_json::to_string(&p).expect("serializable") + "\n" } else { json(&p) });
    Ok(())
}

fn parse_generator(s: &str, n: usize) -> Res<Letter> {
    let bad = || Failure::Config(format!("generator must be g<i>, e<i> or ginv<i> with 1 <= i < {n}: {s}"));
    let (ctor, idx): (fn(usize) -> Letter, &str) = if let Some(rest) = s.strip_prefix("ginv") {
        (Letter::GInv, rest)
    } else if let Some(rest) = s.strip_prefix('g') {
        (Letter::G, rest)
    } else if let Some(rest) = s.strip_prefix('e') {
        (Letter::E, rest)
    } else {
        return Err(bad());
    };
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 || i >= n {
        return Err(bad());
    }
    Ok(ctor(i))
}

fn action(c: &Common, n: usize, big_n: usize, r: usize, generator: &str, out: &mut String) -> Res<()> {
    guard(n, MATRIX_LIMIT, c.force)?;
    let letter = parse_generator(generator, n)?;
    let sp = TensorSpace::new(n, big_n, r, LaurentRing)?;
    for k in sp.basis() {
        for (col, coeff) in sp.act_word(&sp.basis_vector(k), &[letter])? {
            debug_assert!(!LaurentRing.is_zero(&coeff));
            out.push_str(&serde_json::to_string(&serde_json::json!({"row": k, "col": col, "coeff": coeff})).expect("serializable"));
            out.push('\n');
        }
    }
    Ok(())
}
