//! Command-line frontend: computes integral homology of state spaces,
//! elementary nets, prefix-closed trace languages, and independence
//! tori from JSON input files.
//!
//! Exit codes: 0 success, 1 internal error, 2 parse error, 3 validation
//! failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use trace_homology_cli::pipeline::{analyze, independence_summary, Analysis};
use trace_homology_cli::{input, Failure};

#[derive(Parser)]
#[command(
    name = "trace-homology",
    version,
    about = "Integral homology of state spaces, elementary nets, trace languages, and independence tori"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homology of a state space (reachable-cell complex by default)
    Statespace {
        /// State space file (JSON)
        file: PathBuf,
        /// Totalize with the sink state and use the augmented complex
        #[arg(long)]
        augmented: bool,
        /// Skip the commutation check of independent generators
        #[arg(long)]
        no_validate: bool,
        /// Restrict to the states reachable from this state first
        #[arg(long, value_name = "STATE")]
        initial: Option<String>,
        /// Dump boundary matrices (aligned grid and triplets)
        #[arg(long)]
        dump_matrices: bool,
        /// Dump cells and face tables (text output only)
        #[arg(long, conflicts_with = "json")]
        dump_cells: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Homology of an elementary net over its reachable markings
    Petri {
        /// Net file (JSON)
        file: PathBuf,
        /// Use all 2^B markings instead of the reachable ones
        #[arg(long)]
        all_markings: bool,
        /// Totalize with the sink state and use the augmented complex
        #[arg(long)]
        augmented: bool,
        /// Dump boundary matrices (aligned grid and triplets)
        #[arg(long)]
        dump_matrices: bool,
        /// Dump cells and face tables (text output only)
        #[arg(long, conflicts_with = "json")]
        dump_cells: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Homology of a prefix-closed trace language (augmented complex)
    Tracelang {
        /// Language file (JSON)
        file: PathBuf,
        /// Reject input that is not already prefix closed
        #[arg(long)]
        no_prefix_close: bool,
        /// Dump boundary matrices (aligned grid and triplets)
        #[arg(long)]
        dump_matrices: bool,
        /// Dump cells and face tables (text output only)
        #[arg(long, conflicts_with = "json")]
        dump_cells: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Homology of the generalized torus of an independence graph
    Torus {
        /// Graph file (JSON), or an inline JSON object
        graph: String,
        /// Dump boundary matrices (aligned grid and triplets)
        #[arg(long)]
        dump_matrices: bool,
        /// Dump cells and face tables (text output only)
        #[arg(long, conflicts_with = "json")]
        dump_cells: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(failure)) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
        Err(_) => {
            eprintln!("error: internal failure");
            ExitCode::from(1)
        }
    }
}

struct OutputFlags {
    json: bool,
    dump_cells: bool,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let started = Instant::now();
    let (analysis, flags) = match cli.command {
        Command::Statespace {
            file,
            augmented,
            no_validate,
            initial,
            dump_matrices,
            dump_cells,
            json,
        } => (
            cmd_statespace(&file, augmented, no_validate, initial, dump_matrices)?,
            OutputFlags { json, dump_cells },
        ),
        Command::Petri {
            file,
            all_markings,
            augmented,
            dump_matrices,
            dump_cells,
            json,
        } => (
            cmd_petri(&file, all_markings, augmented, dump_matrices)?,
            OutputFlags { json, dump_cells },
        ),
        Command::Tracelang {
            file,
            no_prefix_close,
            dump_matrices,
            dump_cells,
            json,
        } => (
            cmd_tracelang(&file, no_prefix_close, dump_matrices)?,
            OutputFlags { json, dump_cells },
        ),
        Command::Torus {
            graph,
            dump_matrices,
            dump_cells,
            json,
        } => (
            cmd_torus(&graph, dump_matrices)?,
            OutputFlags { json, dump_cells },
        ),
    };

    if flags.json {
        print!("{}", analysis.report.to_json());
    } else {
        if flags.dump_cells {
            print!("{}", analysis.complex.dump());
        }
        print!(
            "{}",
            analysis.report.to_text(&analysis.complex, &analysis.chain)
        );
        eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    }
    Ok(())
}

fn validate_or_fail(space: &trace_homology::StateSpace) -> Result<String, Failure> {
    let report = space.validate_action();
    if report.is_valid() {
        Ok(format!(
            "commutation check: OK ({} states x {} independent pairs)",
            space.state_count(),
            space.monoid().independence().len()
        ))
    } else {
        let lines: Vec<String> = report
            .violations
            .iter()
            .map(|v| v.describe(space))
            .collect();
        Err(Failure::Validation(format!(
            "independent generators do not commute:\n  {}",
            lines.join("\n  ")
        )))
    }
}

fn cmd_statespace(
    file: &std::path::Path,
    augmented: bool,
    no_validate: bool,
    initial: Option<String>,
    dump_matrices: bool,
) -> Result<Analysis, Failure> {
    let mut space = input::load_state_space(file)?;
    let mut diagnostics = vec![format!(
        "input: {} states, {} generators, {} transitions, independence {}",
        space.state_count(),
        space.monoid().alphabet().len(),
        space.transition_count(),
        independence_summary(space.monoid()),
    )];

    if no_validate {
        diagnostics.push(
            "commutation check skipped (--no-validate): homology is only meaningful when \
             independent generators commute"
                .to_string(),
        );
    } else {
        diagnostics.push(validate_or_fail(&space)?);
    }

    if let Some(s0) = initial {
        space = space
            .reachable_from(&s0)
            .map_err(|e| Failure::Parse(e.to_string()))?;
        diagnostics.push(format!(
            "restricted to {} state(s) reachable from {s0}",
            space.state_count()
        ));
    }

    let monoid = space.monoid().clone();
    let complex = if augmented {
        diagnostics.push("complex: augmented (sink state adjoined)".to_string());
        let aug = space.augment().map_err(|e| Failure::Parse(e.to_string()))?;
        trace_homology::state_complex_augmented(&aug)
    } else {
        diagnostics.push("complex: reachable cells of the partial action".to_string());
        trace_homology::state_complex_reachable(&space)
    };
    analyze(
        "statespace",
        &monoid,
        complex,
        diagnostics,
        dump_matrices,
        !no_validate,
    )
}

fn cmd_petri(
    file: &std::path::Path,
    all_markings: bool,
    augmented: bool,
    dump_matrices: bool,
) -> Result<Analysis, Failure> {
    let net = input::load_net(file)?;
    if all_markings && net.condition_count() > 20 {
        return Err(Failure::Parse(format!(
            "--all-markings enumerates 2^{} markings; at most 20 conditions are supported",
            net.condition_count()
        )));
    }
    let monoid = net.monoid();
    let mut diagnostics = vec![
        format!(
            "input: {} conditions, {} events, initial marking {}",
            net.condition_count(),
            net.event_count(),
            net.marking_name(net.initial_marking()),
        ),
        format!("derived independence: {}", independence_summary(&monoid)),
    ];
    for e in net.never_enabled_events() {
        diagnostics.push(format!(
            "warning: event `{}` has overlapping pre and post sets and can never fire",
            net.event_name(e)
        ));
    }

    let space = net.to_state_space(!all_markings);
    diagnostics.push(if all_markings {
        format!("markings: all {} subsets", space.state_count())
    } else {
        format!(
            "markings: {} reachable from the initial one",
            space.state_count()
        )
    });
    match validate_or_fail(&space) {
        Ok(line) => diagnostics.push(line),
        Err(f) => {
            return Err(Failure::Internal(format!(
                "net-derived action failed the commutation check: {}",
                f.message()
            )))
        }
    }

    let complex = if augmented {
        diagnostics.push("complex: augmented (sink state adjoined)".to_string());
        let aug = space
            .augment()
            .map_err(|e| Failure::Internal(e.to_string()))?;
        trace_homology::state_complex_augmented(&aug)
    } else {
        diagnostics.push("complex: reachable cells of the partial action".to_string());
        trace_homology::state_complex_reachable(&space)
    };
    analyze("petri", &monoid, complex, diagnostics, dump_matrices, true)
}

fn cmd_tracelang(
    file: &std::path::Path,
    no_prefix_close: bool,
    dump_matrices: bool,
) -> Result<Analysis, Failure> {
    let (language, merged) = input::load_language(file)?;
    let mut diagnostics = vec![format!(
        "input: {} trace(s), {} generators, independence {}",
        language.len(),
        language.monoid().alphabet().len(),
        independence_summary(language.monoid()),
    )];
    if merged > 0 {
        diagnostics.push(format!(
            "{merged} input word(s) merged into already-listed traces"
        ));
    }

    let language = if no_prefix_close {
        if let Some(witness) = language.missing_prefix() {
            return Err(Failure::Validation(format!(
                "language is not prefix closed: missing prefix `{}`",
                language.monoid().display_trace(&witness)
            )));
        }
        diagnostics.push("prefix closure: input verified closed".to_string());
        language
    } else {
        let closed = language.prefix_closure();
        let added = closed.len() - language.len();
        diagnostics.push(if added == 0 {
            "prefix closure: input already closed".to_string()
        } else {
            format!("prefix closure added {added} trace(s)")
        });
        closed
    };

    let monoid = language.monoid().clone();
    let space = language
        .to_state_space()
        .map_err(|e| Failure::Parse(e.to_string()))?;
    match validate_or_fail(&space) {
        Ok(line) => diagnostics.push(line),
        Err(f) => {
            return Err(Failure::Internal(format!(
                "language-induced action failed the commutation check: {}",
                f.message()
            )))
        }
    }
    diagnostics.push("complex: augmented (sink state adjoined)".to_string());
    let aug = space
        .augment()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    let complex = trace_homology::state_complex_augmented(&aug);
    analyze(
        "tracelang",
        &monoid,
        complex,
        diagnostics,
        dump_matrices,
        true,
    )
}

fn cmd_torus(graph: &str, dump_matrices: bool) -> Result<Analysis, Failure> {
    let monoid = input::load_graph(graph)?;
    let diagnostics = vec![format!(
        "input: {} vertices, independence {}",
        monoid.alphabet().len(),
        independence_summary(&monoid),
    )];
    let complex = trace_homology::torus(&monoid);
    analyze("torus", &monoid, complex, diagnostics, dump_matrices, true)
}
