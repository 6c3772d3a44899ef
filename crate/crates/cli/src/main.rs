use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use torcert::certify::{certify_case, lesst_precondition, CaseParams, CertifyConfig, DegreeSpec, Mode, Polarity};
use torcert::constraints::{
    check_type_uniformity, detect_s_cycles, lemma_3v_check, negative_size_bound, positive_size_bound,
    ConstraintVerdict,
};
use torcert::graph::{parse_graph, EmbeddedGraph, Sign};
use torcert::homology::{klein_scan, solve_klein_slopes, KleinSolution};
use torcert::perms::InducedPermutation;
use torcert::verify::{verify_all, VerifyOptions};
use torcert::CertifyError;

const EXIT_VIOLATION: u8 = 1;
const EXIT_SCALE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "torcert", version, about = "Certify cases of the intersection graph analysis for toroidal surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search one (s, t, Δ) case and print its certificate
    Certify(CertifyArgs),
    /// Run one constraint checker
    Lemma(LemmaArgs),
    /// Print an induced permutation and its orbits
    Perm {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
        /// +1 or -1
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
    },
    /// Boundary slopes of Klein bottles in the exceptional gluings
    Klein {
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// Report every m in 0..=MAX
        #[arg(long, value_name = "MAX")]
        scan: Option<i64>,
    },
    /// Run the whole acceptance suite
    VerifyAll(VerifyArgs),
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    delta: u32,
    /// auto, enumerate or count
    #[arg(long, default_value = "auto")]
    mode: Mode,
    /// polarized or neutral; both are searched when omitted
    #[arg(long)]
    s_polarity: Option<Polarity>,
    #[arg(long)]
    t_polarity: Option<Polarity>,
    /// Write the certificate here ('-' for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct LemmaArgs {
    /// reduced-torus-degrees, size-forcing, s-cycles, uniform-vertex-type,
    /// family-sizes or torus
    name: String,
    /// Graph file in the text format
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, default_value_t = 6)]
    delta: u32,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    workers: Option<usize>,
    /// Write the machine-readable summary here ('-' for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Comma-separated criterion numbers to run
    #[arg(long, value_delimiter = ',')]
    only: Vec<u8>,
    /// Disable a search stage to check that the suite notices
    #[arg(long, value_name = "STAGE")]
    inject_fault: Option<String>,
}

/// A failure carrying its exit code.
struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

impl From<CertifyError> for Failure {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::ScaleLimit { .. } => Failure(EXIT_SCALE, e.to_string()),
            _ => usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Certify(a) => certify(a),
        Command::Lemma(a) => lemma(a),
        Command::Perm { n, alpha, epsilon } => perm(n, alpha, &epsilon),
        Command::Klein { m, scan } => klein(m, scan),
        Command::VerifyAll(a) => verify(a),
    }
}

fn env_cap(var: &str, default: u32, minimum: u32) -> Result<u32, Failure> {
    let Ok(raw) = std::env::var(var) else {
        return Ok(default);
    };
    let cap: u32 = raw.parse().map_err(|_| usage(format!("{var}={raw} is not a number")))?;
    if cap < minimum {
        return Err(usage(format!("{var}={cap} is below the smallest supported cap {minimum}")));
    }
    Ok(cap)
}

fn config(workers: Option<usize>) -> Result<CertifyConfig, Failure> {
    let workers = match workers {
        Some(0) => return Err(usage("--workers must be at least 1")),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    Ok(CertifyConfig {
        max_s: env_cap("TORCERT_MAX_S", CertifyConfig::DEFAULT_MAX_S, CertifyConfig::DEFAULT_MAX_S)?,
        max_t: env_cap("TORCERT_MAX_T", CertifyConfig::DEFAULT_MAX_T, CertifyConfig::DEFAULT_MAX_T)?,
        workers,
        disabled_stages: Vec::new(),
    })
}

fn write_output(path: &Path, text: &str) -> Result<(), Failure> {
    if path == Path::new("-") {
        println!("{text}");
        Ok(())
    } else {
        std::fs::write(path, format!("{text}\n")).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
    }
}

fn certify(a: CertifyArgs) -> Result<u8, Failure> {
    let cfg = config(a.workers)?;
    let params = CaseParams::new(a.s, a.t, a.delta).with_polarities(a.s_polarity, a.t_polarity);
    let cert = certify_case(&params, a.mode, &cfg)?;
    match &a.json {
        Some(p) if p == Path::new("-") => write_output(p, &cert.to_json())?,
        Some(p) => {
            write_output(p, &cert.to_json())?;
            print!("{}", cert.render_table());
        }
        None => print!("{}", cert.render_table()),
    }
    Ok(0)
}

fn read_graph(path: &Path) -> Result<EmbeddedGraph, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&src).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn need_input(a: &LemmaArgs) -> Result<EmbeddedGraph, Failure> {
    let path = a.input.as_deref().ok_or_else(|| usage(format!("lemma {} needs --input", a.name)))?;
    read_graph(path)
}

fn report(verdicts: &[ConstraintVerdict]) -> u8 {
    for v in verdicts {
        match &v.witness {
            None => println!("{}: satisfied", v.name),
            Some(w) => println!("{}: violated: {w}", v.name),
        }
    }
    if verdicts.iter().all(|v| v.satisfied) {
        0
    } else {
        EXIT_VIOLATION
    }
}

fn lemma(a: LemmaArgs) -> Result<u8, Failure> {
    match a.name.as_str() {
        "reduced-torus-degrees" => {
            if a.input.is_some() {
                let g = need_input(&a)?;
                let v = lemma_3v_check(&g).map_err(|e| usage(e.to_string()))?;
                return Ok(report(&[v]));
            }
            // Without a graph, check every reduced torus graph up to the
            // acceptance bounds.
            let mut verdicts = Vec::new();
            let mut count = 0;
            for n in 1..=3 {
                let maps = torcert::certify::enumerate_reduced_graphs(n, &DegreeSpec::UpToEdges(12), 3)?;
                count += maps.len();
                for m in maps {
                    let g = EmbeddedGraph::from_rotation(m, &vec![Sign::Plus; n]);
                    let v = lemma_3v_check(&g).map_err(|e| usage(e.to_string()))?;
                    if !v.satisfied {
                        verdicts.push(v);
                    }
                }
            }
            println!("checked {count} reduced torus graphs with at most 3 vertices and 12 edges");
            if verdicts.is_empty() {
                verdicts.push(ConstraintVerdict::satisfied("reduced-torus-degrees"));
            }
            Ok(report(&verdicts))
        }
        "size-forcing" => {
            let t = a.t.ok_or_else(|| usage("lemma size-forcing needs --t"))?;
            Ok(report(&[lesst_precondition(t, a.delta)]))
        }
        "s-cycles" => {
            let g = need_input(&a)?;
            let cycles = detect_s_cycles(&g);
            for c in &cycles {
                println!("face {} darts {:?} type {{{}, {}}}", c.face, c.darts, c.string, c.string + 1);
            }
            println!("{} S-cycle(s)", cycles.len());
            Ok(0)
        }
        "uniform-vertex-type" => Ok(report(&[check_type_uniformity(&need_input(&a)?)])),
        "family-sizes" => {
            let g = need_input(&a)?;
            let n = g
                .frame()
                .map(|f| f.modulus)
                .ok_or_else(|| usage("family-sizes needs a labeled graph"))?;
            let verdicts: Vec<ConstraintVerdict> = g
                .parallel_families()
                .iter()
                .map(|f| {
                    if f.sign.is_plus() {
                        positive_size_bound(n).check_family(f, &g)
                    } else {
                        negative_size_bound(n, true).check(f.edges.len() as u32, a.delta)
                    }
                })
                .collect();
            Ok(report(&verdicts))
        }
        "torus" => {
            let g = need_input(&a)?;
            let v = ConstraintVerdict::from_witness("torus", g.check_torus().err().map(|e| e.to_string()));
            Ok(report(&[v]))
        }
        other => Err(usage(format!(
            "unknown lemma '{other}' (expected reduced-torus-degrees, size-forcing, s-cycles, \
             uniform-vertex-type, family-sizes or torus)"
        ))),
    }
}

fn perm(n: u32, alpha: i64, epsilon: &str) -> Result<u8, Failure> {
    let eps = match epsilon {
        "+1" | "1" | "+" => Sign::Plus,
        "-1" | "-" => Sign::Minus,
        _ => return Err(usage(format!("--epsilon must be +1 or -1, got '{epsilon}'"))),
    };
    let p = InducedPermutation::new(n, alpha, eps).map_err(|e| usage(e.to_string()))?;
    let op = if eps.to_int() > 0 { '-' } else { '+' };
    println!("σ(x) = {} {op} x mod {n}", p.alpha());
    let table: Vec<String> = p.table().iter().enumerate().map(|(i, y)| format!("{}→{y}", i + 1)).collect();
    println!("table: {}", table.join(" "));
    let dec = p.orbits();
    for o in &dec.orbits {
        println!("orbit: {o:?}");
    }
    println!("orbits: {} (closed form {})", dec.count, p.formula_orbit_count());
    println!("identity: {}", p.is_identity());
    println!("fixed points: {:?}", p.fixed_points());
    println!("parity obstructed: {}", p.parity_obstructed());
    Ok(0)
}

fn klein_line(m: i64, s: Option<KleinSolution>) -> String {
    match s {
        Some(s) => format!(
            "m = {m}: q = {}, α = μ0 + ({})λ0, distance {}, ∂₁Q = {}μ1 + {}λ1",
            s.q, s.b0, s.distance, s.q, s.b1
        ),
        None => format!("m = {m}: none"),
    }
}

fn klein(m: Option<i64>, scan: Option<i64>) -> Result<u8, Failure> {
    match (m, scan) {
        (Some(m), None) => println!("{}", klein_line(m, solve_klein_slopes(m))),
        (None, Some(max)) if max >= 0 => {
            for (m, s) in klein_scan(max) {
                println!("{}", klein_line(m, s));
            }
        }
        (None, Some(_)) => return Err(usage("--scan needs a nonnegative bound")),
        _ => return Err(usage("klein needs exactly one of --m and --scan")),
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    let mut cfg = config(a.workers)?;
    if let Some(stage) = a.inject_fault {
        eprintln!("fault injection: stage '{stage}' disabled");
        cfg.disabled_stages.push(stage);
    }
    if let Some(bad) = a.only.iter().find(|&&c| !(1..=8).contains(&c)) {
        return Err(usage(format!("--only: no criterion {bad}")));
    }
    let opts = VerifyOptions {
        config: cfg,
        only: a.only,
        ..VerifyOptions::default()
    };
    let quiet = a.json.as_deref() == Some(Path::new("-"));
    let start = Instant::now();
    let report = verify_all(&opts, |r| {
        if !quiet {
            println!("{}", r.line());
        }
    });
    if !quiet {
        let failed = report.criteria.iter().filter(|c| !c.passed).count();
        println!(
            "{} of {} criteria passed in {:.1} s",
            report.criteria.len() - failed,
            report.criteria.len(),
            start.elapsed().as_secs_f64()
        );
    }
    if let Some(p) = &a.json {
        write_output(p, &report.to_json())?;
    }
    Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
}
