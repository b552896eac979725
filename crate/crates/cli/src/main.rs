use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use bimcat_core::{
    check_axioms_with, decide, distortion, free_nfold_enumerate, laplaza_axioms, mon_hom_exists,
    monoidal_axioms, normal_form_with, parse_term, reduce, verify_matrix_axioms, AxiomConfig,
    AxiomReport, Bimonoidal, DistortionMode, EdgeKind, Flavor, MatConfig, MatReport, MonObject,
    Path, ReductionKind, Strategy, StructuralKind,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Coherence tools for bimonoidal categories.
#[derive(Parser, Debug)]
#[command(name = "bimcat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a term and print the reduction path.
    Reduce(ReduceArgs),
    /// Print the distortion of a path file.
    Distort {
        #[arg(long, value_enum, default_value_t = Mode::Sym)]
        mode: Mode,
        /// Path file, or `-` for standard input.
        path: PathBuf,
    },
    /// Decide whether two parallel paths commute.
    Check {
        #[arg(long, value_enum, default_value_t = Mode::Sym)]
        mode: Mode,
        p: PathBuf,
        q: PathBuf,
    },
    /// Objects and morphisms of the free n-fold monoidal category.
    Mon {
        #[arg(long)]
        n: usize,
        #[command(subcommand)]
        command: MonCommand,
    },
    /// Run the axiom verifiers.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Print edge catalogs, axiom lists and matrix structure cells.
    Explain(ExplainArgs),
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Graph flavor used by `nf`.
    #[arg(long, value_enum, default_value_t = Mode::Sym)]
    mode: Mode,
    /// Pick redexes at random from this seed instead of innermost-leftmost.
    #[arg(long)]
    seed: Option<u64>,
    term: String,
}

#[derive(Subcommand, Debug)]
enum MonCommand {
    /// Exit 0 if a morphism A -> B exists, 2 otherwise.
    Hom { a: String, b: String },
    /// List the objects with labels 1..k.
    Enumerate {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Bicategory axioms of the matrix construction on seeded samples.
    Mat {
        #[arg(long, value_enum, default_value_t = MatTarget::Sigma)]
        target: MatTarget,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 2)]
        max_entry: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip one additive-symmetry step in every associator entry.
        #[arg(long)]
        corrupt_associator: bool,
    },
    /// Laplaza and monoidal axioms of a concrete target.
    Axioms {
        #[arg(long, value_enum, default_value_t = AxiomTarget::Sigma)]
        target: AxiomTarget,
        #[arg(long, default_value_t = 2)]
        bound: usize,
        /// Random naturality squares per structure family.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct ExplainArgs {
    #[arg(value_enum, default_value_t = Topic::All)]
    topic: Topic,
    #[arg(long, value_enum, default_value_t = Mode::Sym)]
    mode: Mode,
    /// Write each axiom as `<name>.lhs.path` and `<name>.rhs.path` into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Sym,
    Ns,
    Br,
}

impl Mode {
    fn flavor(self) -> Flavor {
        match self {
            Mode::Sym => Flavor::Symmetric,
            Mode::Ns => Flavor::Nonsymmetric,
            Mode::Br => Flavor::Braided,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Zero,
    Delta,
    One,
    Nf,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MatTarget {
    Sigma,
    Dist,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AxiomTarget {
    Sigma,
    SigmaPrime,
    Dist,
    Dad,
    Dbr,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Topic {
    All,
    Edges,
    Axioms,
    Structural,
}

type Outcome = Result<(String, ExitCode), String>;

fn ok(out: String) -> Outcome {
    Ok((out, ExitCode::SUCCESS))
}

fn negative(out: String) -> Outcome {
    Ok((out, ExitCode::from(2)))
}

fn read_path(file: &FsPath) -> Result<Path, String> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?
    };
    Path::parse(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn run_reduce(args: &ReduceArgs) -> Outcome {
    let t = parse_term(&args.term).map_err(|e| e.to_string())?;
    let strategy = args
        .seed
        .map_or(Strategy::InnermostLeftmost, Strategy::Random);
    let kind = match args.kind {
        Kind::Nf => None,
        Kind::Zero => Some(ReductionKind::Zero),
        Kind::Delta => Some(ReductionKind::Delta),
        Kind::One => Some(ReductionKind::One),
    };
    let path = match kind {
        None => normal_form_with(&t, args.mode.flavor()).1,
        Some(kind) => reduce(&t, kind, strategy).map_err(|e| e.to_string())?,
    };
    let mut out = String::new();
    if let Some(seed) = args.seed {
        writeln!(out, "# seed: {seed}").unwrap();
    }
    out.push_str(&path.to_text());
    writeln!(out, "codomain: {}", path.codomain()).unwrap();
    ok(out)
}

fn run_distort(mode: Mode, file: &FsPath) -> Outcome {
    let p = read_path(file)?;
    p.check_flavor(mode.flavor()).map_err(|e| e.to_string())?;
    let d = distortion(&p, DistortionMode::for_flavor(mode.flavor())).map_err(|e| e.to_string())?;
    ok(format!("{d}\n"))
}

fn run_check(mode: Mode, p: &FsPath, q: &FsPath) -> Outcome {
    let (p, q) = (read_path(p)?, read_path(q)?);
    let v = decide(&p, &q, mode.flavor()).map_err(|e| e.to_string())?;
    let out = format!("{v}\n");
    if v.commutes() {
        ok(out)
    } else {
        negative(out)
    }
}

fn run_mon(n: usize, cmd: &MonCommand) -> Outcome {
    match cmd {
        MonCommand::Hom { a, b } => {
            let a = MonObject::parse(n, a).map_err(|e| e.to_string())?;
            let b = MonObject::parse(n, b).map_err(|e| e.to_string())?;
            if mon_hom_exists(&a, &b).map_err(|e| e.to_string())? {
                ok(format!("morphism {a} -> {b}\n"))
            } else {
                negative(format!("no morphism {a} -> {b}\n"))
            }
        }
        MonCommand::Enumerate { k } => {
            let mut out = String::new();
            for obj in free_nfold_enumerate(n, *k) {
                writeln!(out, "{obj}").unwrap();
            }
            ok(out)
        }
    }
}

fn mat_lines(r: &MatReport) -> Outcome {
    let mut out = format!("# target: {}\n# seed: {}\n", r.target, r.seed);
    for c in &r.checks {
        writeln!(out, "{c}").unwrap();
    }
    for (axiom, (pass, fail)) in r.counts() {
        writeln!(out, "# {axiom}: {pass} passed, {fail} failed").unwrap();
    }
    if r.passed() {
        ok(out)
    } else {
        negative(out)
    }
}

fn axiom_lines(r: &AxiomReport, seed: u64) -> Outcome {
    let mut out = format!("# target: {}\n# seed: {seed}\n", r.target);
    for (axiom, n) in &r.instances {
        let failed: Vec<_> = r.failures.iter().filter(|f| &f.axiom == axiom).collect();
        if failed.is_empty() {
            writeln!(out, "PASS axiom={axiom} instances={n}").unwrap();
        }
        for f in failed {
            writeln!(out, "FAIL axiom={axiom} instance={}", f.instance).unwrap();
        }
    }
    if r.passed() {
        ok(out)
    } else {
        negative(out)
    }
}

fn check_target<T: Bimonoidal>(target: &T, cfg: &AxiomConfig) -> Outcome {
    axiom_lines(&check_axioms_with(target, cfg), cfg.seed)
}

fn run_verify(cmd: &VerifyCommand) -> Outcome {
    match *cmd {
        VerifyCommand::Mat {
            target,
            max_dim,
            max_entry,
            samples,
            seed,
            corrupt_associator,
        } => {
            let cfg = MatConfig {
                max_dim,
                max_entry,
                samples,
                seed,
                corrupt_associator,
            };
            let r = match target {
                MatTarget::Sigma => verify_matrix_axioms(&bimcat_core::sigma_target(), &cfg),
                MatTarget::Dist => verify_matrix_axioms(&bimcat_core::d_target(), &cfg),
            }
            .map_err(|e| e.to_string())?;
            mat_lines(&r)
        }
        VerifyCommand::Axioms {
            target,
            bound,
            samples,
            seed,
        } => {
            let cfg = AxiomConfig {
                bound,
                naturality_samples: samples,
                seed,
            };
            match target {
                AxiomTarget::Sigma => check_target(&bimcat_core::sigma_target(), &cfg),
                AxiomTarget::SigmaPrime => check_target(&bimcat_core::sigma_prime_target(), &cfg),
                AxiomTarget::Dist => check_target(&bimcat_core::d_target(), &cfg),
                AxiomTarget::Dad => check_target(&bimcat_core::dad_target(), &cfg),
                AxiomTarget::Dbr => check_target(&bimcat_core::dbr_target(), &cfg),
            }
        }
    }
}

fn file_stem(name: &str) -> String {
    name.replace('\'', "-prime")
}

fn run_explain(args: &ExplainArgs) -> Outcome {
    let flavor = args.mode.flavor();
    let mut out = String::new();
    let all = args.topic == Topic::All;
    if all || args.topic == Topic::Edges {
        writeln!(out, "# edges ({flavor})").unwrap();
        for k in EdgeKind::ALL {
            if flavor == Flavor::Nonsymmetric && k == EdgeKind::ZetaTens {
                continue;
            }
            let inv = if k.is_delta() {
                "forward only"
            } else {
                "invertible"
            };
            writeln!(out, "{:<10} {:<28} {inv}", k.name(), k.shape()).unwrap();
        }
    }
    if all || args.topic == Topic::Axioms {
        let axioms: Vec<_> = laplaza_axioms(flavor)
            .into_iter()
            .chain(monoidal_axioms(flavor))
            .collect();
        writeln!(out, "# axioms ({flavor}): {}", axioms.len()).unwrap();
        for a in &axioms {
            writeln!(
                out,
                "{:<20} {} -> {}  ({} vs {} edges)",
                a.name,
                a.lhs.domain(),
                a.lhs.codomain(),
                a.lhs.edges().len(),
                a.rhs.edges().len()
            )
            .unwrap();
        }
        if let Some(dir) = &args.out {
            std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for a in &axioms {
                for (side, p) in [("lhs", &a.lhs), ("rhs", &a.rhs)] {
                    let file = dir.join(format!("{}.{side}.path", file_stem(&a.name)));
                    std::fs::write(&file, p.to_text())
                        .map_err(|e| format!("{}: {e}", file.display()))?;
                }
            }
        }
    }
    if all || args.topic == Topic::Structural {
        writeln!(out, "# matrix structure cells").unwrap();
        for k in StructuralKind::ALL {
            writeln!(out, "{:<8} {}", k.name(), k.describe()).unwrap();
        }
    }
    ok(out)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Reduce(args) => run_reduce(args),
        Command::Distort { mode, path } => run_distort(*mode, path),
        Command::Check { mode, p, q } => run_check(*mode, p, q),
        Command::Mon { n, command } => run_mon(*n, command),
        Command::Verify { command } => run_verify(command),
        Command::Explain(args) => run_explain(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
