//! The `zforce` command line, kept in the library so it can be driven
//! in-process with captured streams.
//!
//! Exit status: `0` on success, `1` on domain errors and failed checks,
//! `2` on usage errors.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{self, Catalog, CATALOG_MAX_N};
use crate::clutter::Clutter;
use crate::constructions::Construction;
use crate::error::Error;
use crate::families::{
    duality_report, minimal_forcing_family_with, minimal_immune_family_direct_with,
    minimal_immune_family_with, SearchOptions, DEFAULT_SEARCH_BOUND, MAX_SEARCH_BOUND,
};
use crate::forcing::{self, Rule};
use crate::format;
use crate::hypergraph::Hypergraph;
use crate::reference::{check_against_reference, ReferenceTables};
use crate::vertex_set::VertexSet;

/// Overrides the exhaustive-search guard when set.
pub const SEARCH_BOUND_ENV: &str = "ZF_SEARCH_BOUND";

#[derive(Debug, Parser)]
#[command(
    name = "zforce",
    version,
    about = "Zero forcing on graphs and hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file (text or JSON); stdin when omitted or `-`.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RuleArg {
    /// r0 (graphs only), r1 or r2.
    #[arg(long, short)]
    rule: Rule,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Worker threads for exhaustive scans; output does not depend on it.
    #[arg(long, short, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Raise the search guard to its ceiling.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Close a black set under a rule and print the firing trace.
    Closure {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        rule: RuleArg,
        /// Initially black vertices, comma-separated.
        #[arg(long, short)]
        black: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a vertex set is forcing.
    CheckForcing {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        rule: RuleArg,
        #[arg(long, short)]
        set: String,
    },
    /// Decide whether a vertex set is immune, operationally and from
    /// neighbourhoods.
    CheckImmune {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        rule: RuleArg,
        #[arg(long, short)]
        set: String,
    },
    /// Print the Σ1 and Σ2 edge sets of an edge relative to a vertex set.
    Sigma {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short)]
        x: String,
        /// An edge of the input, comma-separated.
        #[arg(long, short)]
        edge: String,
    },
    /// Size of a smallest forcing set.
    ForcingNumber {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        rule: RuleArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Minimal forcing and minimal immune families.
    Families {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        rule: RuleArg,
        #[command(flatten)]
        search: SearchArgs,
        /// Enumerate immune sets directly instead of taking the transversal.
        #[arg(long)]
        direct: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimal transversal of a clutter read from the input.
    Transversal {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build a named hypergraph.
    Construct {
        /// complete, r1-forcing, r1-immune, r2-forcing, r2-immune,
        /// graph-forcing or graph-immune.
        name: Construction,
        #[arg(long, short)]
        n: usize,
        #[arg(long, short)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// List covering clutters up to isomorphism.
    Catalog {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Regenerate the census and its realization map.
    Tables {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Print family edge lists instead of class indices.
        #[arg(long)]
        inline: bool,
        #[arg(long)]
        json: bool,
        /// Compare against the shipped reference tables.
        #[arg(long, alias = "paper-check")]
        reference_check: bool,
        #[arg(long, short, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Check transversal duality, and optionally that a family is uniform.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        rule: RuleArg,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_name = "K")]
        expect_forcing_uniform: Option<usize>,
        #[arg(long, value_name = "K")]
        expect_immune_uniform: Option<usize>,
    },
}

/// Status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(Error),
    Io(String),
    /// A check ran and reported failures; stdout is still printed.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    search_bound_env: Option<String>,
    out: String,
}

impl Context<'_> {
    fn read_input(&mut self, input: &InputArgs) -> Result<String, Failure> {
        let mut text = String::new();
        match input.input.as_deref() {
            None => self.stdin.read_to_string(&mut text).map(|_| ()),
            Some(p) if p.as_os_str() == "-" => self.stdin.read_to_string(&mut text).map(|_| ()),
            Some(p) => std::fs::read_to_string(p).map(|t| text = t),
        }
        .map_err(|e| Failure::Io(e.to_string()))?;
        Ok(text)
    }

    fn hypergraph(&mut self, input: &InputArgs) -> Result<Hypergraph, Failure> {
        Ok(format::parse_hypergraph(&self.read_input(input)?)?)
    }

    fn search(&self, args: &SearchArgs) -> Result<SearchOptions, Failure> {
        let bound = match &self.search_bound_env {
            Some(raw) => raw.trim().parse::<usize>().map_err(|_| {
                Failure::Io(format!("{SEARCH_BOUND_ENV}=`{raw}` is not a vertex count"))
            })?,
            None if args.allow_large => MAX_SEARCH_BOUND,
            None => DEFAULT_SEARCH_BOUND,
        };
        Ok(SearchOptions {
            bound,
            jobs: args.jobs as usize,
        })
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_env(args, stdin, std::env::var(SEARCH_BOUND_ENV).ok())
}

/// [`run`] with the search-bound override passed explicitly.
pub fn run_with_env<I, T>(
    args: I,
    stdin: &mut dyn Read,
    search_bound_env: Option<String>,
) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if status == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome {
                status,
                stdout,
                stderr,
            };
        }
    };
    let mut ctx = Context {
        stdin,
        search_bound_env,
        out: String::new(),
    };
    let result = dispatch(cli.command, &mut ctx);
    let (status, stderr) = match result {
        Ok(()) => (0, String::new()),
        Err(Failure::Domain(e)) => (1, format!("error: {}: {e}\n", e.name())),
        Err(Failure::Io(msg)) => (1, format!("error: Io: {msg}\n")),
        Err(Failure::Check(msg)) => (1, format!("error: CheckFailed: {msg}\n")),
    };
    Outcome {
        status,
        stdout: ctx.out,
        stderr,
    }
}

fn members_block(ctx: &mut Context<'_>, title: &str, c: &Clutter) {
    ctx.line(format!("{title}:"));
    for m in c.members() {
        ctx.line(m.to_string());
    }
}

fn json_sets(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn dispatch(command: Command, ctx: &mut Context<'_>) -> Result<(), Failure> {
    match command {
        Command::Closure {
            input,
            rule,
            black,
            json,
        } => {
            let h = ctx.hypergraph(&input)?;
            let b = format::parse_vertex_list(&black, h.n())?;
            let (closed, trace) = forcing::closure(&h, rule.rule, b)?;
            if json {
                #[derive(Serialize)]
                struct ClosureJson<'a> {
                    rule: Rule,
                    black: VertexSet,
                    closure: VertexSet,
                    trace: &'a [forcing::ForcingStep],
                }
                ctx.line(to_json(&ClosureJson {
                    rule: rule.rule,
                    black: b,
                    closure: closed,
                    trace: trace.steps(),
                }));
            } else {
                ctx.line(format!("closure: {closed}"));
                ctx.line(format!("steps: {}", trace.len()));
                for (i, s) in trace.steps().iter().enumerate() {
                    ctx.line(format!(
                        "{}: edge {{{}}} trigger {{{}}} blackens {{{}}}",
                        i + 1,
                        s.edge,
                        s.trigger,
                        s.newly_black
                    ));
                }
            }
        }
        Command::CheckForcing { input, rule, set } => {
            let h = ctx.hypergraph(&input)?;
            let s = format::parse_vertex_list(&set, h.n())?;
            let yes = forcing::is_forcing(&h, rule.rule, s)?;
            ctx.line(format!("forcing: {yes}"));
        }
        Command::CheckImmune { input, rule, set } => {
            let h = ctx.hypergraph(&input)?;
            let s = format::parse_vertex_list(&set, h.n())?;
            let operational = forcing::is_immune(&h, rule.rule, s)?;
            let nbhd = forcing::is_immune_nbhd(&h, rule.rule, s)?;
            ctx.line(format!("immune: {operational}"));
            ctx.line(format!("immune (neighbourhood): {nbhd}"));
        }
        Command::Sigma { input, x, edge } => {
            let h = ctx.hypergraph(&input)?;
            let x = format::parse_vertex_list(&x, h.n())?;
            let a = format::parse_vertex_list(&edge, h.n())?;
            for (title, sets) in [
                ("sigma1", forcing::sigma1(&h, x, a)?),
                ("sigma2", forcing::sigma2(&h, x, a)?),
            ] {
                ctx.line(format!("{title}: {}", sets.len()));
                for s in sets {
                    ctx.line(s.to_string());
                }
            }
        }
        Command::ForcingNumber {
            input,
            rule,
            search,
        } => {
            let h = ctx.hypergraph(&input)?;
            let opts = ctx.search(&search)?;
            let k = forcing::forcing_number_bounded(&h, rule.rule, opts.bound)?;
            ctx.line(format!("forcing number: {k}"));
        }
        Command::Families {
            input,
            rule,
            search,
            direct,
            json,
        } => {
            let h = ctx.hypergraph(&input)?;
            let opts = ctx.search(&search)?;
            let forcing = minimal_forcing_family_with(&h, rule.rule, &opts)?;
            let immune = if direct {
                minimal_immune_family_direct_with(&h, rule.rule, &opts)?
            } else {
                minimal_immune_family_with(&h, rule.rule, &opts)?
            };
            if json {
                #[derive(Serialize)]
                struct FamiliesJson {
                    rule: Rule,
                    vertices: usize,
                    forcing: Vec<Vec<usize>>,
                    immune: Vec<Vec<usize>>,
                }
                ctx.line(to_json(&FamiliesJson {
                    rule: rule.rule,
                    vertices: h.n(),
                    forcing: json_sets(forcing.members()),
                    immune: json_sets(immune.members()),
                }));
            } else {
                members_block(ctx, "forcing", &forcing);
                members_block(ctx, "immune", &immune);
            }
        }
        Command::Transversal { input, json } => {
            let c = format::parse_clutter(&ctx.read_input(&input)?)?;
            let tr = c.transversal()?;
            if json {
                ctx.line(format::to_json(tr.n(), tr.members()));
            } else {
                ctx.out.push_str(&format::clutter_to_text(&tr));
            }
        }
        Command::Construct { name, n, k, json } => {
            let h = name.build(n, k)?;
            if json {
                ctx.line(format::to_json(h.n(), h.edges()));
            } else {
                ctx.out.push_str(&format::hypergraph_to_text(&h));
            }
        }
        Command::Catalog { n_max } => {
            let catalog = Catalog::build(n_max)?;
            ctx.line("index\tedges");
            for (idx, h) in catalog.classes() {
                ctx.line(format!("{idx}\t{}", catalog::inline_edges(h.edges())));
            }
        }
        Command::Tables {
            n_max,
            inline,
            json,
            reference_check,
            jobs,
        } => {
            if n_max > CATALOG_MAX_N {
                return Err(Error::GroundSetTooLarge {
                    n: n_max,
                    max: CATALOG_MAX_N,
                }
                .into());
            }
            let catalog = Catalog::build(n_max)?;
            let table1 = catalog::table1_for(&catalog, jobs as usize)?;
            let table2 = catalog::invert_table1(&table1);
            if reference_check {
                let check = check_against_reference(
                    &ReferenceTables::shipped(),
                    &catalog,
                    &table1,
                    &table2,
                )?;
                ctx.out.push_str(&check.report());
                let failed = check.failures().count();
                let total = check.lines.len();
                ctx.line(format!("{} of {total} checks passed", total - failed));
                if failed > 0 {
                    return Err(Failure::Check(format!("{failed} reference checks failed")));
                }
            } else if json {
                #[derive(Serialize)]
                struct TablesJson {
                    table1: Vec<catalog::Table1Json>,
                    table2: Vec<catalog::RealizationRow>,
                }
                ctx.line(to_json(&TablesJson {
                    table1: catalog::table1_json(&table1),
                    table2,
                }));
            } else {
                ctx.out.push_str(&catalog::table1_tsv(&table1, inline));
                ctx.line("");
                ctx.out.push_str(&catalog::table2_tsv(&table2));
            }
        }
        Command::Verify {
            input,
            rule,
            search,
            expect_forcing_uniform,
            expect_immune_uniform,
        } => {
            let h = ctx.hypergraph(&input)?;
            let opts = ctx.search(&search)?;
            let report = duality_report(&h, rule.rule, &opts)?;
            let mut all = report.holds();
            ctx.line(format!("rule: {}", rule.rule));
            ctx.line(format!(
                "{}\tTr(forcing) = immune",
                pass(report.tr_forcing_is_immune)
            ));
            ctx.line(format!(
                "{}\tTr(immune) = forcing",
                pass(report.tr_immune_is_forcing)
            ));
            for (label, expected, family) in [
                ("forcing", expect_forcing_uniform, &report.forcing),
                ("immune", expect_immune_uniform, &report.immune),
            ] {
                if let Some(k) = expected {
                    let ok = Clutter::uniform(h.n(), k)? == *family;
                    all &= ok;
                    let mut msg = format!("{}\t{label} = U({k},{})", pass(ok), h.n());
                    if !ok {
                        let _ = write!(msg, "\tgot {} members", family.len());
                    }
                    ctx.line(msg);
                }
            }
            if !all {
                return Err(Failure::Check("verification failed".into()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = "n 4\ne 1 2 3\ne 1 2 4\ne 1 3 4\n";

    fn run_str(args: &[&str], stdin: &str) -> Outcome {
        let argv = std::iter::once("zforce").chain(args.iter().copied());
        run_with_env(argv, &mut stdin.as_bytes(), None)
    }

    #[test]
    fn closure_without_firing_has_an_empty_trace() {
        let o = run_str(&["closure", "--rule", "r2", "--black", "1,2"], WORKED);
        assert_eq!(o.status, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "closure: 1 2\nsteps: 0\n");
    }

    #[test]
    fn closure_trace_lists_steps() {
        let o = run_str(&["closure", "--rule", "r1", "--black", "1,2"], WORKED);
        assert_eq!(o.status, 0);
        assert!(o.stdout.starts_with("closure: 1 2 3 4\n"));
    }

    #[test]
    fn families_text() {
        let o = run_str(&["families", "--rule", "r1"], WORKED);
        assert_eq!(
            o.stdout,
            "forcing:\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\nimmune:\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n"
        );
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(
            run_str(&["closure", "--rule", "r7", "--black", "1"], WORKED).status,
            2
        );
        assert_eq!(run_str(&["bogus"], "").status, 2);
        let o = run_str(&["closure", "--rule", "r0", "--black", "1"], WORKED);
        assert_eq!(o.status, 1);
        assert!(o.stderr.contains("RuleNotApplicable"), "{}", o.stderr);
        let o = run_str(&["construct", "graph-immune", "--n", "5", "--k", "3"], "");
        assert_eq!(o.status, 1);
        assert!(o.stderr.contains("NotRealizable"));
        let o = run_str(&["families", "--rule", "r1"], "n 3\ne 1 2\ne 1 2 3\n");
        assert!(o.stderr.contains("NotAClutter"));
    }

    #[test]
    fn search_bound_override() {
        let h = "n 13\ne 1 2\n";
        let argv = ["zforce", "forcing-number", "--rule", "r1"];
        let o = run_with_env(argv, &mut h.as_bytes(), None);
        assert!(o.stderr.contains("SearchBoundExceeded"));
        let o = run_with_env(argv, &mut h.as_bytes(), Some("13".into()));
        assert_eq!(o.stdout, "forcing number: 12\n");
        let o = run_with_env(
            ["zforce", "forcing-number", "--rule", "r1", "--allow-large"],
            &mut h.as_bytes(),
            None,
        );
        assert_eq!(o.status, 0);
    }

    #[test]
    fn help_exits_zero() {
        let o = run_str(&["--help"], "");
        assert_eq!(o.status, 0);
        assert!(o.stdout.contains("families"));
    }
}
