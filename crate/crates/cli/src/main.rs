//! Command-line front end: validation, generation, representation
//! verification, rough approximation queries, identity checking, and the
//! property suites.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use lgc_core::canonical::{canonical_frame, verify_embedding, verify_finite_iso};
use lgc_core::doc::{self, Object};
use lgc_core::frame::ComplexAlgebra;
use lgc_core::gen::{self, InstanceSpec, Kind};
use lgc_core::spatial::{build_spatial_frame, frames_agree, verify_representation};
use lgc_core::suite::{run_suite, SuiteName};
use lgc_core::term::{check_identity, parse_identity, Verdict};
use lgc_core::{GaloisPair, Signature, Subset};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lgc",
    version,
    about = "Finite lattices with Galois connections: validate, generate, represent, check"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect a document's type and run all invariant checks
    Validate {
        file: PathBuf,
    },
    /// Generate a seeded random instance document
    Gen {
        /// poset, lattice, frame, or algebra
        #[arg(long)]
        kind: String,
        /// Point count (for lattices and algebras: the underlying poset)
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability in [0, 1]
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        /// BDLGC, HGC, or HBGC (algebras only)
        #[arg(long, default_value = "HBGC")]
        signature: String,
        /// Write the document here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the canonical frame of an algebra document
    Canonical {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the complex algebra of a frame: carrier and operation tables
    Complex {
        file: PathBuf,
        #[arg(long, default_value = "HBGC")]
        signature: String,
    },
    /// Verify the representation theorems on an algebra and print the report
    Represent {
        file: PathBuf,
        /// canonical or spatial
        #[arg(long)]
        method: String,
    },
    /// Evaluate a rough approximation over a frame's relation
    Approx {
        file: PathBuf,
        /// Comma-separated element names (empty for the empty set)
        #[arg(long)]
        set: String,
        /// upper or lower
        #[arg(long)]
        op: String,
    },
    /// Check an identity exhaustively against an algebra
    Check {
        file: PathBuf,
        /// e.g. "f(g(f(x))) = f(x)"
        #[arg(long)]
        identity: String,
    },
    /// Run a named property suite over generated instances
    Suite {
        /// One of: galois-laws, rough-adjunction, frame-closure,
        /// canonical-iso, spatial-iso, star-equivalence,
        /// topology-roundtrip, rauszer-agreement, identity-corpus
        name: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        size: usize,
        /// Machine-readable summary
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn read_object(path: &Path) -> Result<Object> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    doc::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_algebra(path: &Path) -> Result<(GaloisPair, Signature)> {
    match read_object(path)? {
        Object::Algebra { pair, signature } => Ok((pair, signature)),
        other => bail!("{} holds a {} document, expected an algebra", path.display(), other.type_tag()),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Gen { kind, size, seed, density, signature, output } => {
            generate(&kind, size, seed, density, &signature, output.as_deref())
        }
        Command::Canonical { file, output } => canonical(&file, output.as_deref()),
        Command::Complex { file, signature } => complex(&file, &signature),
        Command::Represent { file, method } => represent(&file, &method),
        Command::Approx { file, set, op } => approx(&file, &set, &op),
        Command::Check { file, identity } => check(&file, &identity),
        Command::Suite { name, count, seed, size, json } => {
            suite(&name, count, seed, size, json)
        }
    }
}

fn validate(file: &Path) -> Result<ExitCode> {
    // Parsing re-validates every axiom of the detected type; what follows
    // reports the structure found.
    match read_object(file)? {
        Object::Poset(q) => {
            println!("poset: {} elements, quasiorder axioms and antisymmetry hold", q.len());
        }
        Object::Lattice(l) => {
            let p = l.profile();
            println!(
                "lattice: {} elements, distributive={}, heyting={}, heyting-brouwer={}, \
                 spatial={}, weakly-atomic={}, jid={}, mid={}",
                l.len(),
                p.distributive,
                p.heyting,
                p.heyting_brouwer,
                p.spatial,
                p.weakly_atomic,
                p.jid,
                p.mid
            );
        }
        Object::Frame(f) => {
            println!(
                "frame: {} points, {} relation pairs, compatibility condition holds",
                f.len(),
                f.relation_pairs().len()
            );
        }
        Object::Algebra { pair, signature } => {
            let l = pair.lattice();
            // The adjunction was validated on parse; re-validate through the
            // order-theoretic characterization as well.
            GaloisPair::validate_by_characterization(
                l.clone(),
                pair.f().to_vec(),
                pair.g().to_vec(),
            )
            .map_err(|e| anyhow!("characterization check failed: {e}"))?;
            if signature.has_implication() && !l.is_heyting() {
                bail!("algebra is tagged {signature} but the lattice is not a Heyting algebra");
            }
            if signature.has_coimplication() && !l.is_heyting_brouwer() {
                bail!("algebra is tagged {signature} but co-implication is partial");
            }
            println!(
                "algebra ({signature}): {} elements, adjunction and characterization agree",
                l.len()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn generate(
    kind: &str,
    size: usize,
    seed: u64,
    density: f64,
    signature: &str,
    output: Option<&Path>,
) -> Result<ExitCode> {
    let kind: Kind = kind.parse()?;
    let signature: Signature = signature.parse().map_err(|e: String| anyhow!(e))?;
    let spec = InstanceSpec { kind, size, seed, density, signature };
    let object = match kind {
        Kind::Poset => Object::Poset(gen::gen_poset(&spec)?),
        Kind::Lattice => Object::Lattice(gen::gen_lattice(&spec)?),
        Kind::Frame => Object::Frame(gen::gen_frame(&spec)?),
        Kind::Algebra => Object::Algebra { pair: gen::gen_algebra(&spec)?, signature },
    };
    emit(&doc::serialize(&object), output)?;
    Ok(ExitCode::SUCCESS)
}

fn canonical(file: &Path, output: Option<&Path>) -> Result<ExitCode> {
    let (pair, _) = read_algebra(file)?;
    let frame = canonical_frame(&pair)?.into_frame();
    emit(&doc::serialize(&Object::Frame(frame)), output)?;
    Ok(ExitCode::SUCCESS)
}

fn complex(file: &Path, signature: &str) -> Result<ExitCode> {
    let signature: Signature = signature.parse().map_err(|e: String| anyhow!(e))?;
    let frame = match read_object(file)? {
        Object::Frame(f) => f,
        other => bail!("{} holds a {} document, expected a frame", file.display(), other.type_tag()),
    };
    let algebra = ComplexAlgebra::build(frame, signature)?;
    let names = algebra.frame().order().carrier().to_vec();
    let n = algebra.len();
    println!("complex algebra ({signature}) on {} points: {} up-sets", names.len(), n);
    println!("carrier:");
    for i in 0..n {
        println!("  {i}: {}", algebra.set_of(i).render(&names));
    }
    let table = |label: &str, op: &dyn Fn(usize, usize) -> usize| {
        println!("{label}:");
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| op(i, j).to_string()).collect();
            println!("  {i}: [{}]", row.join(" "));
        }
    };
    table("join", &|i, j| algebra.lattice().join(i, j));
    table("meet", &|i, j| algebra.lattice().meet(i, j));
    if signature.has_implication() {
        table("imp", &|i, j| algebra.implication_elem(i, j).expect("signature checked"));
    }
    if signature.has_coimplication() {
        table("coimp", &|i, j| algebra.coimplication_elem(i, j).expect("signature checked"));
    }
    let upper: Vec<String> = (0..n).map(|i| algebra.upper_elem(i).to_string()).collect();
    let lower: Vec<String> = (0..n).map(|i| algebra.lower_elem(i).to_string()).collect();
    println!("upper: [{}]", upper.join(" "));
    println!("lower: [{}]", lower.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn represent(file: &Path, method: &str) -> Result<ExitCode> {
    let (pair, signature) = read_algebra(file)?;
    let ok = match method {
        "canonical" => {
            let report = verify_embedding(&pair, signature)?;
            print!("{report}");
            let iso = verify_finite_iso(&pair, signature)?;
            println!("  {:<24} {}", "finite-isomorphism", if iso { "ok" } else { "FAIL" });
            report.all_passed() && iso
        }
        "spatial" => {
            let report = verify_representation(&pair, signature)?;
            print!("{report}");
            let frame = build_spatial_frame(&pair)?;
            println!(
                "  spatial frame: {} join-irreducible points, compatibility holds",
                frame.len()
            );
            let agree = frames_agree(&pair)?;
            println!("  {:<24} {}", "frames-agree", if agree { "ok" } else { "FAIL" });
            report.all_passed() && agree
        }
        other => bail!("unknown method '{other}', expected canonical or spatial"),
    };
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn approx(file: &Path, set: &str, op: &str) -> Result<ExitCode> {
    let frame = match read_object(file)? {
        Object::Frame(f) => f,
        other => bail!("{} holds a {} document, expected a frame", file.display(), other.type_tag()),
    };
    let space = frame.approximation_space();
    let subset = parse_element_set(space.universe(), set)?;
    let result = match op {
        "upper" => space.upper(subset),
        "lower" => space.lower(subset),
        other => bail!("unknown operation '{other}', expected upper or lower"),
    };
    println!("{}", result.render(space.universe()));
    Ok(ExitCode::SUCCESS)
}

/// Parses a comma-separated element list by longest-name matching, so
/// carrier names that themselves contain commas (canonical frame points
/// like `^{a,b}`) still resolve.
fn parse_element_set(universe: &[String], text: &str) -> Result<Subset> {
    let mut subset = Subset::empty(universe.len());
    let mut rest = text.trim();
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for (i, name) in universe.iter().enumerate() {
            if rest.starts_with(name.as_str())
                && best.is_none_or(|b| name.len() > universe[b].len())
            {
                best = Some(i);
            }
        }
        let Some(i) = best else { bail!("unknown element at '{rest}'") };
        subset.insert(i);
        rest = rest[universe[i].len()..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        } else if !rest.is_empty() {
            bail!("expected ',' before '{rest}'");
        }
    }
    Ok(subset)
}

fn check(file: &Path, identity: &str) -> Result<ExitCode> {
    let (pair, signature) = read_algebra(file)?;
    let id = parse_identity(identity)?;
    match check_identity(&id, &pair, signature)? {
        Verdict::Valid => {
            println!("valid: {id}");
            Ok(ExitCode::SUCCESS)
        }
        Verdict::Counterexample(ce) => {
            println!("counterexample: {ce}");
            Ok(ExitCode::FAILURE)
        }
    }
}

fn suite(name: &str, count: usize, seed: u64, size: usize, json: bool) -> Result<ExitCode> {
    let name: SuiteName = name.parse()?;
    let summary = run_suite(name, count, seed, size)?;
    if json {
        println!("{}", serde_json_string(&summary.to_json()));
    } else {
        println!("{summary}");
    }
    Ok(if summary.all_passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn serde_json_string(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("summary serializes")
}
