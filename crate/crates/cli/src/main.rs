use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chardeg::constructions::{parse_recipes, shipped_recipes, Recipe};
use chardeg::diameter3::Diameter3Mode;
use chardeg::enumeration::enumerate;
use chardeg::kb::{kb_seed_builtin, shipped_external, Kb};
use chardeg::pipeline::{classify_order, explain, render_filter, render_summary, write_report, PipelineConfig, PipelineError, ReportFormat, Stage};
use chardeg::{encode_graph6, Status};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chardeg", version, about = "Enumerate and classify candidate prime character degree graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream one graph6 line per isomorphism class of the given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        connected_only: bool,
        /// Write to this file instead of stdout.
        #[arg(long)]
        graph6_out: Option<PathBuf>,
    },
    /// Run the classification pipeline for one order.
    Classify {
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Seed file or directory of `*.kb` files, merged over the builtin seed.
        /// Defaults to the bundled literature and catalog seeds.
        #[arg(long)]
        kb: Vec<PathBuf>,
        /// Skip the builtin seed.
        #[arg(long)]
        no_builtin: bool,
        /// Recipe file; defaults to the bundled recipes.
        #[arg(long)]
        recipes: Option<PathBuf>,
        /// Output directory for the summary, the order KB and the listing.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Print the verdict log of this graph (graph6, any labeling).
        #[arg(long)]
        explain: Option<String>,
        #[arg(long, value_enum, default_value_t = StageArg::Full)]
        stage: StageArg,
        /// Count only the least-growth labelings in the diameter-3 test.
        #[arg(long)]
        strict_diameter3: bool,
        #[arg(long)]
        skip_primality: bool,
        #[arg(long)]
        no_admissibility: bool,
    },
    /// Check every recipe's factor product and print its rendered graph.
    VerifyConstructions {
        #[arg(long)]
        recipes: Option<PathBuf>,
        #[arg(long)]
        skip_primality: bool,
    },
    /// Knowledge base maintenance.
    Kb {
        #[command(subcommand)]
        action: KbAction,
    },
}

#[derive(Subcommand)]
enum KbAction {
    /// Report records that are malformed or contradict the filters.
    Validate { path: PathBuf },
    /// Print the builtin seed merged with the given files, optionally closed under joins.
    Export {
        path: Vec<PathBuf>,
        #[arg(long)]
        no_builtin: bool,
        /// Add joins of occurring records up to this order.
        #[arg(long)]
        close: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List keys whose status differs.
    Diff { left: PathBuf, right: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Txt,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum StageArg {
    Filter,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            if let Some(alarm @ PipelineError::SoundnessAlarm { .. }) = err.downcast_ref::<PipelineError>() {
                eprintln!("soundness alarm: {alarm}");
                return ExitCode::from(2);
            }
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate { order, connected_only, graph6_out } => {
            let stream = enumerate(order)?;
            let mut out: Box<dyn Write> = match &graph6_out {
                Some(path) => Box::new(BufWriter::new(
                    fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
                )),
                None => Box::new(BufWriter::new(io::stdout().lock())),
            };
            let mut count = 0usize;
            for g in stream.filter(|g| !connected_only || g.is_connected()) {
                writeln!(out, "{}", encode_graph6(&g))?;
                count += 1;
            }
            out.flush()?;
            eprintln!("{count} graphs");
        }
        Command::Classify {
            order,
            kb,
            no_builtin,
            recipes,
            out,
            format,
            explain: explain_key,
            stage,
            strict_diameter3,
            skip_primality,
            no_admissibility,
        } => {
            let seeds = load_kb(&kb, no_builtin, shipped_external())?;
            let recipes = load_recipes(recipes.as_deref())?;
            let config = PipelineConfig {
                stage: match stage {
                    StageArg::Filter => Stage::Filter,
                    StageArg::Full => Stage::Full,
                },
                diameter3_mode: if strict_diameter3 { Diameter3Mode::Strict } else { Diameter3Mode::AnyLabeling },
                check_primality: !skip_primality,
                admissibility: !no_admissibility,
            };
            let report = classify_order(order, &seeds, &recipes, config)?;
            if config.stage == Stage::Filter {
                print!("{}", render_filter(&report));
            } else {
                print!("{}", render_summary(&report));
            }
            if let Some(dir) = out {
                let format = match format {
                    Format::Csv => ReportFormat::Csv,
                    Format::Txt => ReportFormat::Txt,
                    Format::Dot => ReportFormat::Dot,
                };
                let written = write_report(&report, &dir, format).with_context(|| format!("writing {}", dir.display()))?;
                eprintln!("wrote {} files to {}", written.len(), dir.display());
            }
            if let Some(g6) = explain_key {
                match explain(&report, &g6) {
                    Some(text) => print!("{text}"),
                    None => bail!("{g6:?} is not a graph of order {order}"),
                }
            }
        }
        Command::VerifyConstructions { recipes, skip_primality } => {
            let recipes = load_recipes(recipes.as_deref())?;
            let mut failed = 0;
            for r in &recipes {
                match r.render(!skip_primality) {
                    Ok(rendered) => println!(
                        "{} {} OK {} vertices graph6 {} labels {}",
                        r.kind_name(),
                        r.name,
                        rendered.graph.order(),
                        encode_graph6(&rendered.graph),
                        rendered.labels.join(",")
                    ),
                    Err(e) => {
                        failed += 1;
                        println!("{} {} FAIL {e}", r.kind_name(), r.name);
                    }
                }
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Kb { action } => return kb_command(action),
    }
    Ok(ExitCode::SUCCESS)
}

fn kb_command(action: KbAction) -> Result<ExitCode> {
    match action {
        KbAction::Validate { path } => {
            let kb = Kb::load_path(&path)?;
            let issues = kb.validate();
            for i in &issues {
                println!("{} {}", i.graph6, i.message);
            }
            let occurs = kb.records().filter(|r| r.status == Status::Occurs).count();
            let not = kb.records().filter(|r| r.status == Status::NotOccurs).count();
            println!("{} records ({occurs} occurs, {not} not), {} issues", kb.len(), issues.len());
            if !issues.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        KbAction::Export { path, no_builtin, close, out } => {
            let mut kb = load_kb(&path, no_builtin, Kb::new())?;
            if let Some(n) = close {
                kb.close_under_joins(n);
            }
            match out {
                Some(file) => kb.store(&file)?,
                None => print!("{}", kb.to_text()),
            }
        }
        KbAction::Diff { left, right } => {
            let (a, b) = (Kb::load_path(&left)?, Kb::load_path(&right)?);
            let show = |s: Option<Status>| s.map_or("-".to_string(), |s| s.to_string());
            let diffs = a.diff(&b);
            for d in &diffs {
                println!("{} {} {}", d.graph6, show(d.left), show(d.right));
            }
            eprintln!("{} differences", diffs.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Builtin seed (unless skipped) merged with every path, or with `fallback` when none is given.
fn load_kb(paths: &[PathBuf], no_builtin: bool, fallback: Kb) -> Result<Kb> {
    let mut kb = if no_builtin { Kb::new() } else { kb_seed_builtin() };
    if paths.is_empty() {
        kb.merge(&fallback)?;
    }
    for p in paths {
        let overlay = Kb::load_path(p).with_context(|| format!("loading {}", p.display()))?;
        kb.merge(&overlay)?;
    }
    Ok(kb)
}

fn load_recipes(path: Option<&Path>) -> Result<Vec<Recipe>> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(parse_recipes(&text)?)
        }
        None => Ok(shipped_recipes()),
    }
}
