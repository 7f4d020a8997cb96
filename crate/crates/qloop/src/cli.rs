use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use qloop_core::harness::{self, HarnessConfig, Status};
use qloop_core::identities::{check_identity, classify, Family, IdentityId, IdentityReport, Label};
use qloop_core::morphisms::{are_isomorphic_with_budget, are_isotopic_with, IsotopyStrategy, DEFAULT_BUDGET};
use qloop_core::structure::{center, center_rank};
use qloop_core::transforms::{apply_isotopism, left_derivative, parastrophe, principal_isotope, right_derivative};
use qloop_core::{catalog, FiniteMagma, IsotopismTriple, MorphismResult, Permutation};
use serde::Serialize;

use crate::formats::{parse_permutation, parse_table, render_table, ParseError, TableDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{source_name}: {error}")]
    Parse { source_name: String, error: ParseError },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] qloop_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(qloop_core::Error::Budget(_)) => EXIT_UNKNOWN,
            CliError::Core(qloop_core::Error::Hypothesis(_) | qloop_core::Error::Internal(_)) => EXIT_FAILS,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult = Result<i32, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "qloop",
    version,
    about = "Cayley tables of quasigroups and loops: central identities, isotopes, isotopy"
)]
pub struct Cli {
    /// Emit a single JSON document on standard output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Lc,
    Rc,
    C,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    Triple,
    Principal,
}

/// TABLE arguments are file paths, `-` for standard input, or `catalog:<name>`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a table and report latinity and identity elements.
    Validate { table: String },
    /// Check identities; with --require, exit 1 when a required one fails.
    Identities {
        table: String,
        #[arg(long, value_enum, default_value = "all")]
        family: FamilyArg,
        /// Identity that must hold (repeatable), e.g. LC2 or central-square.
        #[arg(long)]
        require: Vec<String>,
    },
    /// Structural labels: quasigroup, loop, LC-loop, C-loop, group, ...
    Classify { table: String },
    /// The isotope M(A, B, C), where xA ∘ yB = (x·y)C.
    Isotope {
        table: String,
        /// Named triple: construction1 or construction2, optionally prefixed by `catalog:`.
        #[arg(long, conflicts_with_all = ["a", "b", "c"])]
        triple: Option<String>,
        /// Permutation in image ("3 1 2") or cycle ("(1 3 2)") notation; default identity.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// The f,g-principal isotope x∘y = (x/g)·(f\y) of a loop.
    Principal {
        table: String,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
    },
    /// Left derivative a\((a·x)·y) or right derivative (x·(y·a))/a.
    Derivative {
        table: String,
        #[arg(long)]
        at: usize,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// The parastrophe: y∗x = x·y.
    Parastrophe { table: String },
    /// Decide isomorphism; exit 1 when none exists, 3 when the budget runs out.
    Isomorphic {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Decide isotopy; exit 1 when none exists, 3 when the budget runs out.
    Isotopic {
        left: String,
        right: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value = "triple")]
        strategy: StrategyArg,
    },
    /// Center of a loop.
    Center { table: String },
    /// Rank of the center of a loop, with a minimal generating set.
    Rank { table: String },
    /// List embedded tables, or print one.
    Catalog { name: Option<String> },
    /// Run every theorem check and report.
    VerifyPaper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = harness::DEFAULT_MAX_ORDER as u64, value_parser = clap::value_parser!(u64).range(1..=6))]
        max_order: u64,
    },
}

/// Parses `args` (program name first) and runs the command. Returns the
/// exit code; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "qloop: {e}");
            e.exit_code()
        }
    }
}

fn load_table(arg: &str) -> Result<FiniteMagma, CliError> {
    if let Some(name) = arg.strip_prefix("catalog:") {
        return catalog::by_name(name).ok_or_else(|| {
            CliError::Usage(format!("unknown catalog table {name:?}; known: {}", catalog::names().join(", ")))
        });
    }
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")))?
    };
    parse_table(&text).map_err(|error| CliError::Parse { source_name: arg.to_string(), error })
}

fn load_perm(arg: &Option<String>, n: usize, which: &str) -> Result<Permutation, CliError> {
    match arg {
        None => Ok(Permutation::identity(n)),
        Some(s) => {
            parse_permutation(s, n).map_err(|error| CliError::Parse { source_name: format!("--{which}"), error })
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string(value).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn emit_table(out: &mut dyn Write, json: bool, m: &FiniteMagma, symbol: &str) -> CliResult {
    if json {
        emit_json(out, &TableDoc::new(m))?;
    } else {
        write!(out, "{}", render_table(m, symbol))?;
    }
    Ok(EXIT_OK)
}

fn list(v: &[usize]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    }
}

#[derive(Serialize)]
struct Validation<'a> {
    order: usize,
    latin: bool,
    commutative: bool,
    left_identities: &'a [usize],
    right_identities: &'a [usize],
    identity: Option<usize>,
    is_loop: bool,
}

#[derive(Serialize)]
struct IdentitiesDoc {
    reports: Vec<IdentityReport>,
    required_failing: Vec<IdentityId>,
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let json = cli.json;
    match &cli.command {
        Command::Validate { table } => {
            let m = load_table(table)?;
            let v = Validation {
                order: m.order(),
                latin: m.is_latin(),
                commutative: m.is_commutative(),
                left_identities: m.left_identities(),
                right_identities: m.right_identities(),
                identity: m.identity(),
                is_loop: m.is_loop(),
            };
            if json {
                emit_json(out, &v)?;
            } else {
                writeln!(out, "order: {}", v.order)?;
                writeln!(out, "latin: {}", v.latin)?;
                writeln!(out, "commutative: {}", v.commutative)?;
                writeln!(out, "left identities: {}", list(v.left_identities))?;
                writeln!(out, "right identities: {}", list(v.right_identities))?;
                writeln!(out, "identity: {}", v.identity.map_or("none".into(), |e| e.to_string()))?;
            }
            Ok(if v.latin { EXIT_OK } else { EXIT_FAILS })
        }
        Command::Identities { table, family, require } => {
            let m = load_table(table)?;
            let family = match family {
                FamilyArg::Lc => Family::Lc,
                FamilyArg::Rc => Family::Rc,
                FamilyArg::C => Family::C,
                FamilyArg::All => Family::All,
            };
            let mut ids: Vec<IdentityId> = IdentityId::family(family).to_vec();
            let mut required = Vec::new();
            for r in require {
                let id = IdentityId::from_name(r).ok_or_else(|| {
                    let known: Vec<&str> = IdentityId::ALL.iter().map(|i| i.name()).collect();
                    CliError::Usage(format!("unknown identity {r:?}; known: {}", known.join(", ")))
                })?;
                if !ids.contains(&id) {
                    ids.push(id);
                }
                required.push(id);
            }
            let reports: Vec<IdentityReport> = ids.iter().map(|&id| check_identity(&m, id)).collect();
            let failing: Vec<IdentityId> =
                required.iter().copied().filter(|id| reports.iter().any(|r| r.identity == *id && !r.holds)).collect();
            if json {
                emit_json(out, &IdentitiesDoc { reports, required_failing: failing.clone() })?;
            } else {
                for r in &reports {
                    match &r.witness {
                        None => writeln!(out, "{:<18} holds", r.identity.name())?,
                        Some(w) => {
                            let z = w.z.map_or(String::new(), |z| format!(", z={z}"));
                            writeln!(
                                out,
                                "{:<18} fails at x={}, y={}{z}: {} != {}",
                                r.identity.name(),
                                w.x,
                                w.y,
                                w.lhs,
                                w.rhs
                            )?
                        }
                    }
                }
            }
            Ok(if failing.is_empty() { EXIT_OK } else { EXIT_FAILS })
        }
        Command::Classify { table } => {
            let m = load_table(table)?;
            let c = classify(&m);
            if json {
                emit_json(out, &c)?;
            } else {
                let labels: Vec<&str> = c.labels.iter().map(|l: &Label| l.as_str()).collect();
                writeln!(out, "labels: {}", labels.join(", "))?;
                writeln!(out, "left identities: {}", list(&c.left_identities))?;
                writeln!(out, "right identities: {}", list(&c.right_identities))?;
            }
            Ok(EXIT_OK)
        }
        Command::Isotope { table, triple, a, b, c } => {
            let m = load_table(table)?;
            let n = m.order();
            let t = match triple {
                Some(name) => {
                    let key = name.strip_prefix("catalog:").unwrap_or(name);
                    catalog::triple_by_name(key).ok_or_else(|| {
                        CliError::Usage(format!("unknown triple {name:?}; known: construction1, construction2"))
                    })?
                }
                None => IsotopismTriple::new(load_perm(a, n, "a")?, load_perm(b, n, "b")?, load_perm(c, n, "c")?)?,
            };
            let iso = apply_isotopism(&m, &t)?;
            emit_table(out, json, &iso, "∘")
        }
        Command::Principal { table, f, g } => {
            let m = load_table(table)?;
            emit_table(out, json, &principal_isotope(&m, *f, *g)?, "∘")
        }
        Command::Derivative { table, at, side } => {
            let m = load_table(table)?;
            let d = match side {
                SideArg::Left => left_derivative(&m, *at)?,
                SideArg::Right => right_derivative(&m, *at)?,
            };
            emit_table(out, json, &d, "∘")
        }
        Command::Parastrophe { table } => {
            let m = load_table(table)?;
            if !m.is_latin() {
                return Err(qloop_core::Error::Structure("parastrophe requires a quasigroup".into()).into());
            }
            emit_table(out, json, &parastrophe(&m), "*")
        }
        Command::Isomorphic { left, right, budget } => {
            let (l, r) = (load_table(left)?, load_table(right)?);
            report_morphism(out, json, &are_isomorphic_with_budget(&l, &r, *budget), "isomorphic")
        }
        Command::Isotopic { left, right, budget, strategy } => {
            let (l, r) = (load_table(left)?, load_table(right)?);
            let s = match strategy {
                StrategyArg::Triple => IsotopyStrategy::TripleSearch,
                StrategyArg::Principal => IsotopyStrategy::PrincipalIsotopes,
            };
            report_morphism(out, json, &are_isotopic_with(&l, &r, *budget, s)?, "isotopic")
        }
        Command::Center { table } => {
            let m = load_table(table)?;
            let z = center(&m)?;
            if json {
                emit_json(out, &z)?;
            } else {
                writeln!(out, "center: {{{}}} (size {})", list(&z.elements), z.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Rank { table } => {
            let m = load_table(table)?;
            let r = center_rank(&m)?;
            if json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "rank: {}", r.rank)?;
                writeln!(out, "generators: {}", list(&r.generators))?;
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { name } => match name {
            None => {
                let names = catalog::names();
                if json {
                    emit_json(out, &names)?;
                } else {
                    for n in names {
                        writeln!(out, "{n}")?;
                    }
                }
                Ok(EXIT_OK)
            }
            Some(name) => {
                let key = name.strip_prefix("catalog:").unwrap_or(name);
                let m = load_table(&format!("catalog:{key}"))?;
                emit_table(out, json, &m, "·")
            }
        },
        Command::VerifyPaper { seed, max_order } => {
            let config = HarnessConfig { seed: *seed, max_order: *max_order as usize };
            let checks = harness::verify_paper(&config);
            if json {
                emit_json(out, &checks)?;
            } else {
                for c in &checks {
                    writeln!(out, "{c}")?;
                }
                let count = |s| checks.iter().filter(|c| c.status == s).count();
                writeln!(
                    out,
                    "\n{} checks: {} verified, {} refuted, {} deviations from the paper, {} vacuous (seed {seed})",
                    checks.len(),
                    count(Status::Verified),
                    count(Status::RefutedWithWitness),
                    count(Status::DeviationFromPaper),
                    count(Status::HypothesisNeverSatisfied),
                )?;
            }
            let refuted = checks.iter().any(|c| c.status == Status::RefutedWithWitness);
            Ok(if refuted { EXIT_FAILS } else { EXIT_OK })
        }
    }
}

fn report_morphism(out: &mut dyn Write, json: bool, r: &MorphismResult, relation: &str) -> CliResult {
    if json {
        emit_json(out, r)?;
    } else {
        match r.related {
            Some(true) => {
                writeln!(out, "{relation}")?;
                if let Some(p) = r.isomorphism() {
                    writeln!(out, "witness: {p}")?;
                }
                if let Some(t) = r.isotopism() {
                    writeln!(out, "witness: {t}")?;
                }
            }
            Some(false) => writeln!(out, "not {relation}")?,
            None => writeln!(out, "unknown: budget exhausted")?,
        }
        writeln!(out, "nodes explored: {}", r.nodes_explored)?;
    }
    Ok(match r.related {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_FAILS,
        None => EXIT_UNKNOWN,
    })
}
