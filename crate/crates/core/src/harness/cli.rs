//! The `isosub` command line. [`run`] does all the work and returns the
//! output and exit status, so the binary is a thin shell around it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use super::cache::LatticeCache;
use super::literal::{format_generators, group_literal, parse_group_literal, parse_subgroup};
use super::suites::{run_suite, SuiteOptions, SUITES};
use crate::error::{Error, Result};
use crate::goursat::goursat_subgroups;
use crate::group::{make_group, AbelianGroup, Limits};
use crate::isolation::{is_isolated, Method};
use crate::lattice::{all_subgroups, subgroups_of_order, SubgroupLattice};
use crate::psi::{psi_brute, psi_closed};
use crate::snf::{presentation_matrix, quotient_type, smith_normal_form};
use crate::subgroup::Subgroup;

#[derive(Debug, Parser)]
#[command(
    name = "isosub",
    version,
    about = "Sums of element orders and isolated subgroups of finite abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ψ(G), the sum of element orders.
    Psi {
        literal: String,
        /// Also sum element orders directly and compare.
        #[arg(long)]
        brute: bool,
        /// Largest order allowed for element enumeration.
        #[arg(long, value_name = "N")]
        bound: Option<u64>,
    },
    /// List subgroups.
    Subgroups {
        literal: String,
        /// Only subgroups of this order.
        #[arg(long, value_name = "N")]
        order: Option<u64>,
        #[arg(long, value_enum, default_value_t = BackendArg::Join)]
        backend: BackendArg,
        /// Largest order allowed for lattice enumeration.
        #[arg(long, value_name = "N")]
        bound: Option<u64>,
    },
    /// List isolated subgroups.
    Isolated {
        literal: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        /// Largest order allowed for lattice enumeration.
        #[arg(long, value_name = "N")]
        bound: Option<u64>,
    },
    /// Invariants of G/H.
    Quotient {
        literal: String,
        /// Generators in the canonical layout, e.g. "(1,2);(0,2)".
        #[arg(long, value_name = "GENS", allow_hyphen_values = true)]
        subgroup: String,
    },
    /// Run a verification suite.
    Verify {
        /// One of the suite names listed by `verify --help`.
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Write the JSON report here.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        order_max: Option<u64>,
        /// Suite parameter, repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_param)]
        params: Vec<(String, u64)>,
        /// Directory for cached lattices.
        #[arg(long, value_name = "DIR")]
        cache_dir: Option<PathBuf>,
        /// Recompute cached lattices and require an exact match.
        #[arg(long, requires = "cache_dir")]
        verify_cache: bool,
        /// Failing cases to print.
        #[arg(long, value_name = "N", default_value_t = 20)]
        show_failures: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Join,
    Goursat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Psi,
    Structural,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => Method::Definition,
            MethodArg::Psi => Method::PsiCriterion,
            MethodArg::Structural => Method::Structural,
        }
    }
}

fn parse_param(s: &str) -> std::result::Result<(String, u64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got `{s}`"))?;
    let v = v
        .parse()
        .map_err(|_| format!("`{v}` is not a nonnegative integer"))?;
    Ok((k.to_string(), v))
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and executes the command.
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
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    let mut out = String::new();
    match execute(cli.command, &mut out) {
        Ok(code) => Outcome {
            stdout: out,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: out,
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

fn limits_for(bound: Option<u64>) -> Limits {
    match bound {
        Some(b) => Limits::default().with_lattice_max(b),
        None => Limits::default(),
    }
}

fn layout(g: &AbelianGroup) -> String {
    if g.is_trivial() {
        return "trivial group".into();
    }
    g.moduli()
        .iter()
        .map(|m| format!("Z_{m}"))
        .collect::<Vec<_>>()
        .join(" x ")
}

fn echo_group(out: &mut String, g: &AbelianGroup) {
    let _ = writeln!(out, "group   {}", layout(g));
}

fn describe(h: &Subgroup) -> String {
    let gens = format_generators(&h.canonical_generators());
    format!("order {:>5}  <{}>", h.order(), gens)
}

fn execute(command: Command, out: &mut String) -> Result<i32> {
    match command {
        Command::Psi {
            literal,
            brute,
            bound,
        } => {
            let g = parse_group_literal(&literal)?;
            echo_group(out, &g);
            let closed = psi_closed(&g)?;
            let _ = writeln!(out, "psi     {closed}");
            if brute {
                let direct = psi_brute(
                    &g,
                    &limits_for(bound).with_enumeration_max(bound.unwrap_or(1024)),
                )?;
                let _ = writeln!(out, "brute   {direct}");
                if direct != closed {
                    let _ = writeln!(out, "MISMATCH");
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Subgroups {
            literal,
            order,
            backend,
            bound,
        } => {
            let g = parse_group_literal(&literal)?;
            echo_group(out, &g);
            let limits = limits_for(bound);
            let lattice = match backend {
                BackendArg::Join => all_subgroups(&g, &limits)?,
                BackendArg::Goursat => goursat_split(&g, &limits)?,
            };
            let list = match order {
                Some(n) => subgroups_of_order(&lattice, n),
                None => lattice.subgroups.clone(),
            };
            let _ = writeln!(out, "backend {}", lattice.backend.name());
            let _ = writeln!(out, "count   {}", list.len());
            for h in &list {
                let _ = writeln!(out, "  {}", describe(h));
            }
            Ok(0)
        }
        Command::Isolated {
            literal,
            method,
            bound,
        } => {
            let g = parse_group_literal(&literal)?;
            echo_group(out, &g);
            let limits = limits_for(bound);
            let method = Method::from(method);
            let mut isolated = Vec::new();
            for h in all_subgroups(&g, &limits)?.subgroups {
                if is_isolated(&g, &h, method, &limits)?.isolated {
                    isolated.push(h);
                }
            }
            let _ = writeln!(out, "method  {}", method.name());
            let _ = writeln!(out, "count   {}", isolated.len());
            for h in &isolated {
                let _ = writeln!(out, "  {}", describe(h));
            }
            Ok(0)
        }
        Command::Quotient { literal, subgroup } => {
            let g = parse_group_literal(&literal)?;
            echo_group(out, &g);
            let h = parse_subgroup(&g, &subgroup)?;
            let q = quotient_type(&g, &h)?;
            let factors: Vec<String> = smith_normal_form(&presentation_matrix(&g, &h)?)?
                .into_iter()
                .filter(|&d| d != 1)
                .map(|d| d.to_string())
                .collect();
            let _ = writeln!(out, "H       {}", describe(&h));
            let _ = writeln!(out, "G/H     {}", layout(&q));
            let _ = writeln!(out, "order   {}", q.order());
            let _ = writeln!(out, "invariant factors  [{}]", factors.join(", "));
            Ok(0)
        }
        Command::Verify {
            suite,
            json,
            order_max,
            params,
            cache_dir,
            verify_cache,
            show_failures,
        } => {
            let mut map: BTreeMap<String, u64> = params.into_iter().collect();
            if let Some(n) = order_max {
                map.insert("order_max".into(), n);
            }
            let cache = cache_dir.map(LatticeCache::open).transpose()?;
            let opts = SuiteOptions {
                params: map,
                cache,
                verify_cache,
            };
            let report = run_suite(&suite, &opts)?;
            if let Some(path) = json {
                std::fs::write(&path, report.to_json())
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            out.push_str(&report.to_table(show_failures));
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

/// Goursat lattice of `G`, split as its first cyclic component times the rest.
fn goursat_split(g: &AbelianGroup, limits: &Limits) -> Result<SubgroupLattice> {
    let moduli = g.moduli();
    let (first, rest) = moduli.split_at(moduli.len().min(1));
    let lattice = goursat_subgroups(&make_group(first)?, &make_group(rest)?, limits)?;
    debug_assert_eq!(group_literal(&lattice.parent), group_literal(g));
    Ok(lattice)
}
