//! Argument handling and output for the `mobius` binary.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mobius_core::resolver::format_coords;
use mobius_core::theorems::PossibilityResult;
use mobius_core::{
    compare_fixture, emit_table, is_resolving, load_fixture, metric_dimension, representation, run_sweep,
    shipped_fixture, validate_formulas, verify_with_matrix, DistanceMatrix, Ladder, LadderSpec, Resolution,
    SweepConfig,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mobius", version, about = "Generalized Möbius ladders and their metric dimension")]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LadderArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

impl LadderArgs {
    fn spec(&self) -> anyhow::Result<LadderSpec> {
        Ok(LadderSpec::new(self.m, self.n)?)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit the ladder as an edge list or DOT graph.
    Build {
        #[command(flatten)]
        ladder: LadderArgs,
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
    },
    /// Emit the all-pairs distance table.
    Dist {
        #[command(flatten)]
        ladder: LadderArgs,
        /// Maximum columns per sub-table (text format).
        #[arg(long)]
        split: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Test whether a landmark set resolves the ladder.
    Resolve {
        #[command(flatten)]
        ladder: LadderArgs,
        /// Comma-separated labels: `1:1,1:4,6:1`, `v1_1,...` or `v11,...`.
        #[arg(long)]
        set: String,
    },
    /// Exact metric dimension by exhaustive search.
    Dimension {
        #[command(flatten)]
        ladder: LadderArgs,
        /// Largest cardinality to try; defaults to the greedy bound.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Check the closed-form corner distances against the distance table.
    Formulas {
        #[command(flatten)]
        ladder: LadderArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Check the dimension claim and its collision families for one ladder.
    Theorems {
        #[command(flatten)]
        ladder: LadderArgs,
    },
    /// Verify the claims over a range of ladders.
    Sweep {
        /// Range of m, e.g. `3..14` (inclusive) or a single value.
        #[arg(long, default_value = "3..14")]
        m: String,
        /// Range of n, e.g. `2..5` (inclusive) or a single value.
        #[arg(long, default_value = "2..5")]
        n: String,
        /// Skip ladders with more vertices than this.
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Compare a transcribed distance table with the computed one.
    Errata {
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Fixture CSV; defaults to the shipped transcription for (m, n).
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
}

fn parse_range(text: &str) -> anyhow::Result<RangeInclusive<usize>> {
    let text = text.trim();
    let parse = |s: &str| s.trim().parse::<usize>().with_context(|| format!("bad range bound `{s}`"));
    if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (parse(a)?, parse(b)?);
        if a > b {
            bail!("empty range `{text}`");
        }
        Ok(a..=b)
    } else {
        let v = parse(text)?;
        Ok(v..=v)
    }
}

fn matrix_for(spec: LadderSpec) -> DistanceMatrix {
    DistanceMatrix::all_pairs(&Ladder::build(spec))
}

fn describe_possibility(spec: &LadderSpec, r: &PossibilityResult) -> String {
    let mut line = format!(
        "  drop {:<6} W = {{{}}}: {} claimed pairs, {} failed, {}",
        spec.label(r.claim.dropped.vertex(spec)),
        spec.labels(&r.claim.landmarks).join(", "),
        r.claim.pairs.len(),
        r.failures.len(),
        match &r.resolution {
            Resolution::Resolving => "RESOLVES".to_string(),
            Resolution::Collision(w) => format!("does not resolve ({})", w.describe(spec)),
        }
    );
    if r.other_collisions > 0 {
        line.push_str(&format!(", {} further collisions", r.other_collisions));
    }
    line.push('\n');
    for f in &r.failures {
        line.push_str(&format!(
            "    pair {} {} differs: {} vs {}\n",
            spec.label(f.a),
            spec.label(f.b),
            format_coords(&f.coords_a),
            format_coords(&f.coords_b)
        ));
    }
    line
}

fn execute(command: Command) -> anyhow::Result<(String, i32)> {
    let mut status = EXIT_OK;
    let text = match command {
        Command::Build { ladder, format } => {
            let g = Ladder::build(ladder.spec()?);
            match format {
                GraphFormat::Edges => g.to_edge_list(),
                GraphFormat::Dot => g.to_dot(),
            }
        }
        Command::Dist { ladder, split, format } => {
            let matrix = matrix_for(ladder.spec()?);
            match format {
                TableFormat::Csv => matrix.to_csv(),
                TableFormat::Text => emit_table(&matrix, split.unwrap_or(matrix.side()))?,
            }
        }
        Command::Resolve { ladder, set } => {
            let spec = ladder.spec()?;
            let landmarks = spec.parse_set(&set)?;
            let matrix = matrix_for(spec);
            let mut out = format!("ladder = {spec}\nset = {{{}}}\n", spec.labels(&landmarks).join(", "));
            match is_resolving(&matrix, &landmarks)? {
                Resolution::Resolving => {
                    out.push_str("resolving: true\n");
                    for v in spec.vertices() {
                        let r = representation(&matrix, v, &landmarks)?;
                        out.push_str(&format!("  {} {}\n", spec.label(v), format_coords(&r.coords)));
                    }
                }
                Resolution::Collision(w) => {
                    out.push_str("resolving: false\n");
                    out.push_str(&format!("witness: {}\n", w.describe(&spec)));
                }
            }
            out
        }
        Command::Dimension { ladder, budget, format } => {
            let report = metric_dimension(&matrix_for(ladder.spec()?), budget)?;
            match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Kv => report.to_key_values(),
            }
        }
        Command::Formulas { ladder, format } => {
            let report = validate_formulas(ladder.spec()?)?;
            if !report.is_clean() {
                status = EXIT_COUNTEREXAMPLE;
            }
            match format {
                TableFormat::Text => report.to_text(),
                TableFormat::Csv => report.to_csv(),
            }
        }
        Command::Theorems { ladder } => {
            let spec = ladder.spec()?;
            let verdict = verify_with_matrix(&matrix_for(spec))?;
            let claim = &verdict.claim;
            let mut out = format!("ladder = {spec}\n");
            match claim.family {
                None => out.push_str("claim: none (neither parameter family applies)\n"),
                Some(family) => {
                    out.push_str(&format!("claim: {family} family, dimension {}\n", family.predicted_dimension()));
                    out.push_str(&format!("candidate = {{{}}}\n", spec.labels(&claim.candidate).join(", ")));
                    out.push_str(&format!("candidate resolves: {}\n", verdict.candidate_resolves));
                }
            }
            out.push_str(&format!(
                "exact dimension = {}\nbasis = {{{}}}\n",
                verdict.exact_dimension.map_or("undecided".into(), |d| d.to_string()),
                spec.labels(&verdict.basis).join(", ")
            ));
            if claim.family.is_some() {
                out.push_str("collision families:\n");
                for r in &verdict.possibility_results {
                    out.push_str(&describe_possibility(&spec, r));
                }
                out.push_str(&format!("formula mismatches: {}\n", verdict.formula_mismatches.unwrap_or(0)));
                if verdict.is_counterexample() {
                    status = EXIT_COUNTEREXAMPLE;
                    out.push_str("verdict: COUNTEREXAMPLE\n");
                } else {
                    out.push_str("verdict: confirmed\n");
                }
            }
            out
        }
        Command::Sweep { m, n, max_vertices, format } => {
            let config = SweepConfig { m: parse_range(&m)?, n: parse_range(&n)?, max_vertices };
            let report = run_sweep(&config)?;
            if !report.counterexamples().is_empty() {
                status = EXIT_COUNTEREXAMPLE;
            }
            match format {
                TableFormat::Text => report.to_text(),
                TableFormat::Csv => report.to_csv(),
            }
        }
        Command::Errata { m, n, fixture, format } => {
            let requested = match (m, n) {
                (Some(m), Some(n)) => Some(LadderSpec::new(m, n)?),
                (None, None) => None,
                _ => bail!("--m and --n must be given together"),
            };
            let fixture = match (fixture, requested) {
                (Some(path), _) => load_fixture(&path)?,
                (None, Some(spec)) => {
                    shipped_fixture(spec).with_context(|| format!("no shipped fixture for {spec}; pass --fixture"))?
                }
                (None, None) => bail!("give --m and --n, or --fixture"),
            };
            if let Some(spec) = requested {
                if spec != fixture.spec {
                    bail!("fixture is for {} but {spec} was requested", fixture.spec);
                }
            }
            let report = compare_fixture(&fixture, &matrix_for(fixture.spec))?;
            match format {
                TableFormat::Text => report.to_text(),
                TableFormat::Csv => report.to_csv(),
            }
        }
    };
    Ok((text, status))
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit status: 0 success, 1 usage or input error, 2 counterexample.
pub fn cli_main<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((text, status)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
                None => stdout.write_all(text.as_bytes()).context("writing stdout"),
            };
            match written {
                Ok(()) => status,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e:#}");
                    EXIT_INPUT
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..14").unwrap(), 3..=14);
        assert_eq!(parse_range("3..=14").unwrap(), 3..=14);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("a..3").is_err());
    }
}
