//! The `fpsoft` command line: every command reads a document in the text
//! grammar and answers one question about it.
//!
//! Exit codes: 0 when the answer is "valid", "yes", "pass" or a computed
//! set; 1 for a violation, a "no", a counterexample or a semantic error;
//! 2 for usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fpsoft_core::compactness::check_compactness;
use fpsoft_core::laws::{registry, run_law, LawSpec};
use fpsoft_core::text::format_set;
use fpsoft_core::{continuity_failure, CoverFamily, Document, Error, FpSoftPoint, FpSoftSet, Grade, QTarget, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "fpsoft",
    version,
    about = "Exact FP-soft sets, mappings and finite FP-soft topologies"
)]
pub struct Cli {
    /// Document in the fpsoft text grammar.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Worker threads for law scans. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the topology axioms.
    Validate {
        #[arg(long)]
        topology: String,
    },
    /// Closure of a set.
    Closure(Query),
    /// Interior of a set.
    Interior(Query),
    /// Whether a set is a Q-neighbourhood of a point.
    Qnbd {
        #[arg(long)]
        topology: String,
        #[arg(long)]
        set: String,
        /// `e:P/Q:{x1 x2}`
        #[arg(long)]
        point: String,
    },
    /// Whether some open sets form a base.
    Base {
        #[arg(long)]
        topology: String,
        #[arg(long, num_args = 1.., required = true)]
        base: Vec<String>,
    },
    /// Whether a mapping is continuous.
    Continuity {
        #[arg(long)]
        mapping: String,
        #[arg(long)]
        source_topology: String,
        #[arg(long)]
        target_topology: String,
    },
    /// Minimum-size subcover of a cover.
    Subcover {
        #[arg(long)]
        cover: String,
        /// Use the fast greedy search instead; the result may not be minimal.
        #[arg(long)]
        greedy: bool,
    },
    /// Compactness report of a topology.
    Compactness {
        #[arg(long)]
        topology: String,
    },
    /// Run laws from the registry exhaustively.
    Laws(LawsArgs),
}

#[derive(Debug, Args)]
struct Query {
    #[arg(long)]
    topology: String,
    #[arg(long)]
    set: String,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["law", "all", "list"])))]
struct LawsArgs {
    #[arg(long)]
    law: Option<String>,
    /// Run every law at its default sizes.
    #[arg(long)]
    all: bool,
    /// List the registry.
    #[arg(long)]
    list: bool,
    #[arg(long, requires = "law")]
    universe: Option<usize>,
    #[arg(long, requires = "law")]
    parameters: Option<usize>,
    #[arg(long, requires = "law")]
    resolution: Option<u32>,
}

/// Why a command could not answer.
#[derive(Debug)]
enum Failure {
    Core(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => e.fmt(f),
            Failure::Input(message) => f.write_str(message),
        }
    }
}

/// What a command printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(cli)
}

fn execute(cli: Cli) -> Outcome {
    let jobs = cli.jobs as usize;
    if let Command::Laws(args) = &cli.command {
        return laws(args, jobs);
    }
    let Some(path) = &cli.input else {
        return Outcome {
            code: 2,
            stdout: String::new(),
            stderr: "error: --input FILE is required for this command\n".into(),
        };
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::error(format!("cannot read {}: {e}", path.display())),
    };
    let doc = match Document::parse(&text) {
        Ok(d) => d,
        Err(e) => return Outcome::error(e),
    };
    match command(&doc, &cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(e),
    }
}

fn command(doc: &Document, command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { topology } => validate(doc, topology),
        Command::Closure(q) => operator(doc, q, "closure"),
        Command::Interior(q) => operator(doc, q, "interior"),
        Command::Qnbd { topology, set, point } => {
            let t = doc.topology(topology)?;
            let pt = parse_point(t.context(), point)?;
            let yes = t.is_qnbd(doc.set(set)?, QTarget::Point(&pt))?;
            Ok(Outcome::verdict(yes, format!("{}\n", if yes { "yes" } else { "no" })))
        }
        Command::Base { topology, base } => {
            let t = doc.topology(topology)?;
            let sets: Vec<FpSoftSet> = base.iter().map(|n| doc.set(n).cloned()).collect::<Result<_, _>>()?;
            match t.base_failure(&sets) {
                Ok(None) => Ok(Outcome::ok("yes\n".into())),
                Ok(Some(i)) => {
                    let name = open_name(doc, topology, &t.opens()[i])?;
                    Ok(Outcome::verdict(
                        false,
                        format!("no: {name} is not a union of base members\n"),
                    ))
                }
                Err(Error::NotOpen(i)) => Err(Failure::Input(format!("base member {} is not open", base[i]))),
                Err(e) => Err(e.into()),
            }
        }
        Command::Continuity {
            mapping,
            source_topology,
            target_topology,
        } => {
            let m = doc.mapping(mapping)?;
            let (t1, t2) = (doc.topology(source_topology)?, doc.topology(target_topology)?);
            let failure = continuity_failure(m, &t1, &t2)?;
            let mut out = String::new();
            match failure {
                None => out.push_str("yes\n"),
                Some(i) => {
                    let name = open_name(doc, target_topology, &t2.opens()[i])?;
                    writeln!(out, "no: preimage of {name} is not open in {source_topology}").unwrap();
                }
            }
            for name in doc.topology_members(target_topology)? {
                let pre = m.preimage(doc.set(name)?)?;
                writeln!(out, "{}", format_set(&format!("preimage_{name}"), None, &pre)).unwrap();
            }
            Ok(Outcome::verdict(failure.is_none(), out))
        }
        Command::Subcover { cover, greedy } => {
            let c = doc.cover(cover)?;
            let members: Vec<FpSoftSet> = c
                .members
                .iter()
                .map(|n| doc.set(n).cloned())
                .collect::<Result<_, _>>()?;
            let target = c.of.as_ref().map(|n| doc.set(n).cloned()).transpose()?;
            let ctx = members[0].context().clone();
            let family = CoverFamily::new(&ctx, members, target)?;
            let (found, label) = if *greedy {
                (family.greedy_subcover(), "approximate subcover")
            } else {
                (family.minimal_subcover()?, "minimal subcover")
            };
            Ok(match found {
                None => Outcome::verdict(false, "not a cover\n".into()),
                Some(picks) => {
                    let names: Vec<&str> = picks.iter().map(|&i| c.members[i].as_str()).collect();
                    Outcome::ok(format!("{label}: {}\n", names.join(" ")))
                }
            })
        }
        Command::Compactness { topology } => {
            let report = check_compactness(&doc.topology(topology)?)?;
            let mut out = format!(
                "compact: {}\nfip_equivalence_verified: {}\njustification: {}\n",
                report.compact, report.fip_equivalence_verified, report.justification
            );
            if let Some(n) = report.open_covers {
                writeln!(out, "open covers of the universal set: {n}").unwrap();
            }
            Ok(Outcome::verdict(report.compact && report.fip_equivalence_verified, out))
        }
        Command::Laws(_) => unreachable!("handled before reading input"),
    }
}

fn validate(doc: &Document, topology: &str) -> Result<Outcome, Failure> {
    match doc.topology(topology) {
        Ok(t) => Ok(Outcome::ok(format!("valid: {} open sets\n", t.len()))),
        Err(Error::Violation(report)) => {
            let members = doc.topology_members(topology)?;
            let mut out = String::new();
            for v in &report.violations {
                writeln!(out, "{}", v.describe(|i| members[i].clone())).unwrap();
            }
            Ok(Outcome::verdict(false, out))
        }
        Err(e) => Err(e.into()),
    }
}

fn operator(doc: &Document, q: &Query, which: &str) -> Result<Outcome, Failure> {
    let t = doc.topology(&q.topology)?;
    let set = doc.set(&q.set)?;
    let result = if which == "closure" {
        t.closure(set)?
    } else {
        t.interior(set)?
    };
    let space = doc.sets[&q.set].space.as_deref();
    Ok(Outcome::ok(format!(
        "{}\n",
        format_set(&format!("{which}_{}", q.set), space, &result)
    )))
}

/// First member of the named topology equal to `set`.
fn open_name(doc: &Document, topology: &str, set: &FpSoftSet) -> Result<String, Error> {
    let members = doc.topology_members(topology)?;
    Ok(members
        .iter()
        .find(|n| doc.sets[n.as_str()].set == *set)
        .cloned()
        .unwrap_or_else(|| "an open set".into()))
}

/// `e1:1/2:{x1 x3}`; elements may also be separated by commas.
fn parse_point(ctx: &fpsoft_core::Context, text: &str) -> Result<FpSoftPoint, Failure> {
    let bad = || Failure::Input(format!("point `{text}` is not of the form e:P/Q:{{x ...}}"));
    let mut parts = text.splitn(3, ':');
    let (e, grade, crisp) = (
        parts.next().ok_or_else(bad)?,
        parts.next().ok_or_else(bad)?,
        parts.next().ok_or_else(bad)?,
    );
    let parameter = ctx.parameter_index(e.trim())?;
    let (p, q) = grade.trim().split_once('/').ok_or_else(bad)?;
    let (p, q): (i64, i64) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
    if q <= 0 || p < 0 {
        return Err(bad());
    }
    let alpha = Grade::new(Rational::new(p, q))?;
    let inner = crisp
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(bad)?;
    let crisp = ctx.subset(
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty()),
    )?;
    Ok(FpSoftPoint::new(ctx.clone(), parameter, alpha, crisp)?)
}

fn laws(args: &LawsArgs, jobs: usize) -> Outcome {
    if args.list {
        let mut out = String::new();
        for law in registry() {
            let s = law.default_spec;
            writeln!(
                out,
                "{}\t{:?}\t{} {} {}\t{}",
                law.id, law.expectation, s.universe, s.parameters, s.resolution, law.statement
            )
            .unwrap();
        }
        return Outcome::ok(out);
    }
    if args.all {
        let mut out = String::new();
        let mut as_expected = 0;
        for law in registry() {
            match run_law(law.id, None, jobs) {
                Ok(report) => {
                    let fine = report.matches_expectation();
                    as_expected += usize::from(fine);
                    let note = match (fine, report.passed()) {
                        (true, false) => " (expected)",
                        (false, _) => " (UNEXPECTED)",
                        _ => "",
                    };
                    writeln!(out, "{} [{}] {}{note}", law.id, report.spec, report.summary()).unwrap();
                }
                Err(e) => writeln!(out, "{} error: {e}", law.id).unwrap(),
            }
        }
        let total = registry().len();
        writeln!(out, "{as_expected} of {total} laws as expected").unwrap();
        return Outcome::verdict(as_expected == total, out);
    }
    let id = args.law.as_deref().expect("clap requires one of --law, --all, --list");
    let spec = match fpsoft_core::laws::find_law(id) {
        Ok(law) => LawSpec {
            universe: args.universe.unwrap_or(law.default_spec.universe),
            parameters: args.parameters.unwrap_or(law.default_spec.parameters),
            resolution: args.resolution.unwrap_or(law.default_spec.resolution),
        },
        Err(e) => return Outcome::error(e),
    };
    match run_law(id, Some(spec), jobs) {
        Ok(report) => Outcome::verdict(report.passed(), report.to_string()),
        Err(e) => Outcome::error(e),
    }
}
