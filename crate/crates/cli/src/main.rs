//! `affinv`: enumeration, counting, atom posets, covers and exhaustive checks
//! for involutions in affine symmetric groups.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use affinv_core::atoms::{atom_poset, atoms_bruteforce};
use affinv_core::bruhat_inv::{
    covering_property_at, covers_up_inv, hat_increment_ok, increment_hypothesis, pattern, tau,
};
use affinv_core::genfunc::{count_rows, counts_csv, series_closed_form};
use affinv_core::involution::{standardize, Involutions};
use affinv_core::io::{parse_involution, parse_permutation};
use affinv_core::render::winding_svg;
use affinv_core::verify::{self, CheckReport};
use affinv_core::{AffineInvolution, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const INPUT_HELP: &str = "Involutions are given as a window \"[a1,...,an]\", a cycle list \"(a,b)(c,d)\" \
(optionally \"[cycles (a,b),(c,d)]\", weights as \"(a,b:w)\" where accepted), \"id\", or a JSON record \
{\"n\":..,\"window\":[..]} / {\"n\":..,\"cycles\":[[a,b],..]}. Cycle lists need --n.\n\n\
Exit status: 0 success, 1 a check found violations, 2 invalid input, 3 a resource bound was exceeded.\n\
AFFINV_THREADS caps the number of worker threads.";

#[derive(Parser)]
#[command(name = "affinv", version, about = "Involutions in affine symmetric groups", after_help = INPUT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Target {
    /// The involution z (see the input grammar below).
    #[arg(long)]
    z: String,
    /// Rank n; required for cycle lists.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Clone)]
struct Output {
    /// Emit JSON lines instead of text.
    #[arg(long)]
    json: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List involutions with ℓ̂(z) ≤ max-hat.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_hat: u64,
        /// Stop with status 3 after this many involutions.
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
        #[command(flatten)]
        output: Output,
    },
    /// List the atoms of z.
    Atoms {
        #[command(flatten)]
        target: Target,
        /// Also compare with the brute-force atom set.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// The atom poset of z: summary, DOT or JSON.
    Poset {
        #[command(flatten)]
        target: Target,
        /// Emit a Graphviz DOT digraph.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Upper covers of y among involutions, with witnessing pairs.
    Covers {
        #[command(flatten)]
        target: Target,
        /// Also run the covering-property check at y.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Coefficient table (n, m, k, N, N̂) as CSV.
    Counts {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        max_m: u64,
        /// CSV output (the default).
        #[arg(long)]
        csv: bool,
        /// Print the truncated series Ĩ_n(q,x) with this q-degree cap instead.
        #[arg(long)]
        cap: Option<u32>,
        /// Cross-check every count against enumeration.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run exhaustive consistency checks.
    Verify {
        mode: Mode,
        /// Largest rank checked; ranks 2..=n are swept.
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_hat: u64,
        #[arg(long, default_value_t = 4)]
        max_weight: u64,
        /// Series truncation degree.
        #[arg(long, default_value_t = 12)]
        cap: u32,
        /// Bound on ℓ̂(z)·n for the lattice sweep.
        #[arg(long, default_value_t = 30)]
        max_product: u64,
        /// Seed for randomized choices.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Standardise w to the residues of a set E.
    Standardize {
        /// A permutation window or involution.
        #[arg(long)]
        w: String,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated elements of E.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        e: Vec<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// The covering transformation τ_ij(y).
    Tau {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Winding diagram of z as arc data or SVG.
    Winding {
        #[command(flatten)]
        target: Target,
        /// Emit SVG.
        #[arg(long, conflicts_with = "json")]
        svg: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Counts,
    Series,
    Bijection,
    Pi,
    Atoms,
    Criteria,
    Covers,
    CoveringProperty,
    Lattice,
    All,
}

enum Failure {
    Input(String),
    Resource(String),
    Violations(u64),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn emit(output: &Output, text: &str) -> CliResult {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn target(t: &Target) -> Result<AffineInvolution, Failure> {
    Ok(parse_involution(&t.z, t.n)?)
}

fn involution_json(z: &AffineInvolution) -> serde_json::Value {
    json!({
        "n": z.n(),
        "window": z.window(),
        "cycles": z.canonical_cycles(),
        "length": z.length(),
        "absolute_length": z.absolute_length(),
        "hat_length": z.hat_length(),
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Enumerate { n, max_hat, limit, output } => {
            if n == 0 {
                return Err(Failure::Input("n must be positive".into()));
            }
            let mut out = Vec::new();
            for z in Involutions::new(n, max_hat) {
                if out.len() == limit {
                    return Err(Failure::Resource(format!("more than --limit {limit} involutions")));
                }
                out.push(if output.json {
                    involution_json(&z).to_string()
                } else {
                    format!("{z}\tℓ={}\tℓ′={}\tℓ̂={}", z.length(), z.absolute_length(), z.hat_length())
                });
            }
            emit(&output, &lines(out))
        }
        Command::Atoms { target: t, check, output } => {
            let z = target(&t)?;
            let poset = atom_poset(&z)?;
            let mut atoms = poset.atoms.clone();
            atoms.sort();
            if check {
                let mut brute = atoms_bruteforce(&z)?;
                brute.sort();
                if brute != atoms {
                    eprintln!("atom set differs from brute force: {} vs {}", atoms.len(), brute.len());
                    return Err(Failure::Violations(1));
                }
            }
            let text = if output.json {
                lines(atoms.iter().map(|w| serde_json::to_string(w).expect("serialisable")))
            } else {
                lines(atoms.iter().map(|w| w.to_string()))
            };
            emit(&output, &text)
        }
        Command::Poset { target: t, dot, output } => {
            let z = target(&t)?;
            let p = atom_poset(&z)?;
            let text = if dot {
                p.to_dot()
            } else if output.json {
                serde_json::to_string(&p.record()).expect("serialisable") + "\n"
            } else {
                let mut s = format!("z = {z}\natoms = {}\nlevels = {:?}\n", p.len(), p.level_sizes());
                if let (Some(b), Some(top)) = (p.bottom(), p.top()) {
                    s += &format!("bottom = {}\ntop = {}\n", p.atoms[b], p.atoms[top]);
                }
                s += &format!("lattice = {}\n", p.is_lattice());
                if p.len() <= verify::MOBIUS_MAX_NODES {
                    s += &format!("mobius values = {:?}\n", p.mobius_values());
                }
                s
            };
            emit(&output, &text)
        }
        Command::Covers { target: t, check, output } => {
            let y = target(&t)?;
            let covers = covers_up_inv(&y);
            let text = lines(covers.iter().map(|c| {
                if output.json {
                    serde_json::to_string(c).expect("serialisable")
                } else {
                    format!(
                        "{}\tt=({},{})\tpattern={}\thypothesis={:?}",
                        c.z,
                        c.i,
                        c.j,
                        c.pattern.as_str(),
                        c.hypothesis
                    )
                }
            }));
            emit(&output, &text)?;
            if check {
                let (_, violations) = covering_property_at(&y)?;
                for v in &violations {
                    eprintln!("violation: y={} t=({},{}) targets {:?}", v.y, v.i, v.j, v.targets);
                }
                if !violations.is_empty() {
                    return Err(Failure::Violations(violations.len() as u64));
                }
            }
            Ok(())
        }
        Command::Counts { n, max_m, csv: _, cap, check, output } => {
            if n == 0 {
                return Err(Failure::Input("n must be positive".into()));
            }
            let text = match cap {
                Some(cap) => {
                    let s = series_closed_form(n, cap);
                    if output.json {
                        lines(s.terms().map(|((d, e), c)| json!({"q": d, "x": e, "coeff": c.to_string()}).to_string()))
                    } else {
                        lines(s.terms().map(|((d, e), c)| format!("{d},{e},{c}")))
                    }
                }
                None if output.json => {
                    lines(count_rows(n, max_m).iter().map(|r| serde_json::to_string(r).expect("serialisable")))
                }
                None => counts_csv(n, max_m),
            };
            emit(&output, &text)?;
            if check {
                let r = verify::verify_counts(n, max_m);
                eprintln!("{}", r.summary());
                if !r.passed() {
                    return Err(Failure::Violations(r.failed));
                }
            }
            Ok(())
        }
        Command::Verify { mode, n, max_hat, max_weight, cap, max_product, seed, output } => {
            verify_cmd(mode, n, max_hat, max_weight, cap, max_product, seed, &output)
        }
        Command::Standardize { w, n, e, output } => {
            let w = parse_permutation(&w, n).or_else(|_| parse_involution(&w, n).map(|z| z.perm().clone()))?;
            let s = standardize(&w, &e)?;
            let text =
                if output.json { serde_json::to_string(&s).expect("serialisable") + "\n" } else { format!("{s}\n") };
            emit(&output, &text)
        }
        Command::Tau { target: t, i, j, output } => {
            let y = target(&t)?;
            let (i, j) = (i.min(j), i.max(j));
            let z = tau(&y, i, j)?;
            let pat = pattern(&y, i, j)?;
            let hyp = increment_hypothesis(&y, i, j)?;
            let inc = if z == y { None } else { hat_increment_ok(&y, i, j).ok() };
            let text = if output.json {
                json!({
                    "y": y, "t": [i, j], "z": z, "pattern": pat.as_str(),
                    "hypothesis": hyp, "increment": inc,
                })
                .to_string()
                    + "\n"
            } else {
                format!(
                    "τ_({i},{j})({y}) = {z}\npattern = {}\nhypothesis = {}\nℓ̂ increment = {}\n",
                    pat.as_str(),
                    hyp.map_or("none".to_string(), |h| format!("{h:?}")),
                    inc.map_or("n/a".to_string(), |b| b.to_string()),
                )
            };
            emit(&output, &text)
        }
        Command::Winding { target: t, svg, output } => {
            let z = target(&t)?;
            let text = if svg {
                winding_svg(&z)
            } else if output.json {
                lines(z.winding_edges().iter().map(|e| serde_json::to_string(e).expect("serialisable")))
            } else {
                lines(z.winding_edges().iter().map(|e| format!("{} -- {}\twinding {}", e.source, e.target, e.label)))
            };
            emit(&output, &text)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    mode: Mode,
    n: usize,
    max_hat: u64,
    max_weight: u64,
    cap: u32,
    max_product: u64,
    seed: u64,
    output: &Output,
) -> CliResult {
    let want = |m: Mode| mode == m || mode == Mode::All;
    let ranks = 2..=n.max(2);
    let mut reports: Vec<CheckReport> = Vec::new();
    if want(Mode::Counts) {
        reports.extend(ranks.clone().map(|k| verify::verify_counts(k, cap as u64)));
    }
    if want(Mode::Series) {
        reports.push(verify::verify_series(n.max(2), cap));
    }
    if want(Mode::Bijection) {
        for k in ranks.clone() {
            reports.push(verify::verify_bijection(k, max_hat, max_weight, seed)?);
        }
    }
    if want(Mode::Pi) {
        reports.extend(ranks.clone().map(|k| verify::verify_pi(k, max_hat, max_weight)));
    }
    if want(Mode::Atoms) {
        for k in ranks.clone() {
            reports.push(verify::verify_atoms(k, max_hat, seed)?);
        }
    }
    if want(Mode::Criteria) {
        for k in ranks.clone() {
            reports.push(verify::verify_criteria(k, max_hat)?);
        }
    }
    if want(Mode::Covers) {
        reports.extend(ranks.clone().map(|k| verify::verify_covers(k, max_hat)));
    }
    if want(Mode::CoveringProperty) {
        for k in ranks.clone() {
            reports.push(verify::verify_covering(k, max_hat)?);
        }
    }
    let mut text = String::new();
    for r in &reports {
        text += &if output.json { serde_json::to_string(r).expect("serialisable") } else { r.summary() };
        text.push('\n');
        if !output.json {
            for s in r.samples.iter().skip(1) {
                text += &format!("    {s}\n");
            }
        }
    }
    if want(Mode::Lattice) {
        // The lattice property is conjectural: counterexamples are reported
        // but do not change the exit status.
        let l = verify::verify_lattice(max_product)?;
        text += &if output.json {
            serde_json::to_string(&l).expect("serialisable")
        } else {
            format!(
                "{} lattice ℓ̂·n≤{max_product}: {} involutions, largest poset {}, {} not lattices, {} with Möbius values outside {{-1,0,1}}, {} too large for Möbius",
                if l.all_hold() { "PASS" } else { "REPORT" },
                l.involutions,
                l.largest_poset,
                l.not_lattice.len(),
                l.mobius_outside_unit.len(),
                l.mobius_skipped
            )
        };
        text.push('\n');
        if !output.json {
            for z in l.not_lattice.iter().chain(&l.mobius_outside_unit) {
                text += &format!("    {z}\n");
            }
        }
    }
    emit(output, &text)?;
    let failed: u64 = reports.iter().map(|r| r.failed).sum();
    if failed > 0 {
        return Err(Failure::Violations(failed));
    }
    Ok(())
}

fn init_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("AFFINV_THREADS") {
        let k: usize = v.parse().map_err(|_| Failure::Input(format!("AFFINV_THREADS={v:?} is not a number")))?;
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().map_err(|e| Failure::Input(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(k)) => {
            eprintln!("{k} violation(s)");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("resource bound exceeded: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(1)
        }
    }
}
