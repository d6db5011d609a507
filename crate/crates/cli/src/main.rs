//! `amrkit` command-line tool.
//!
//! Exit codes: 0 on success, 1 when data fails a check (invalid entries, a
//! score under `--min-f1`), 2 on usage or input errors.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use amrkit::corpus::{
    filter_corpus, read_amr_file, sample_corpus, split_corpus, top_node_stats, write_amr_file,
    CorpusEntry, GraphOutput,
};
use amrkit::penman::CanonicalOptions;
use amrkit::smatch::{score_corpus, Aggregation, CorpusScore, MatchConfig, SmatchScore};
use amrkit::validator::{FrameLexicon, UnknownFramePolicy, ValidationPolicy};
use amrkit::AmrGraph;
use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "amrkit",
    version,
    about = "AMR corpus toolkit: canonicalize, validate, score, split"
)]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<NonZeroUsize>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rewrite every graph on one line in depth-first order.
    Canonicalize {
        input: PathBuf,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
        /// Keep `:wiki` edges.
        #[arg(long)]
        keep_wiki: bool,
    },
    /// Check graphs against the `and` arity rule and a frame lexicon.
    Validate {
        input: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        /// Report frames missing from the lexicon instead of skipping them.
        #[arg(long)]
        flag_unknown_frames: bool,
        #[arg(long)]
        no_and_check: bool,
        #[arg(long)]
        no_frame_check: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write entries that passed to this file.
        #[arg(long)]
        kept_out: Option<PathBuf>,
    },
    /// Smatch scores of predicted graphs against gold graphs.
    Score {
        pred: PathBuf,
        gold: PathBuf,
        #[arg(long, default_value_t = NonZeroUsize::new(4).unwrap())]
        restarts: NonZeroUsize,
        #[arg(long, default_value_t = 8)]
        exact_threshold: usize,
        /// Leave out the root triple.
        #[arg(long)]
        no_top: bool,
        /// Headline figure averages per-pair scores instead of summing counts.
        #[arg(long = "macro")]
        macro_avg: bool,
        /// Exit 1 when the headline F1 is below this value.
        #[arg(long)]
        min_f1: Option<f64>,
    },
    /// Most frequent root concepts.
    Stats {
        input: PathBuf,
        #[arg(short, default_value_t = 15)]
        k: usize,
    },
    /// Seeded train/test split.
    Split {
        input: PathBuf,
        #[arg(long)]
        test_size: usize,
        #[arg(long)]
        train_out: PathBuf,
        #[arg(long)]
        test_out: PathBuf,
    },
    /// Seeded sample without replacement; smaller samples are prefixes of
    /// larger ones.
    Sample {
        input: PathBuf,
        #[arg(short)]
        n: usize,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
}

/// Data-level failure: reported, exit code 1.
struct Failed;

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn open_input(path: &Path) -> Result<Box<dyn BufRead>> {
    if is_stdio(path) {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(file)))
}

fn create_output(path: &Path) -> Result<Box<dyn Write>> {
    if is_stdio(path) {
        return Ok(Box::new(BufWriter::new(io::stdout())));
    }
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(Box::new(BufWriter::new(file)))
}

fn read_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    read_amr_file(open_input(path)?)
        .with_context(|| format!("cannot read corpus {}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut out = create_output(path)?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn write_corpus(path: &Path, entries: &[CorpusEntry]) -> Result<()> {
    let out = create_output(path)?;
    write_amr_file(out, entries, GraphOutput::Verbatim)
        .with_context(|| format!("cannot write {}", path.display()))
}

fn parse_failure(entry: &CorpusEntry) -> Option<String> {
    let d = entry.graph.as_ref().err()?;
    Some(format!(
        "{}: line {}, column {}: {} [{}]",
        entry.id,
        entry.diagnostic_line(d),
        d.column,
        d.message,
        d.code
    ))
}

fn canonicalize(input: &Path, output: &Path, keep_wiki: bool) -> Result<()> {
    let entries = read_corpus(input)?;
    let errors: Vec<String> = entries.iter().filter_map(parse_failure).collect();
    if !errors.is_empty() {
        bail!(
            "{} graph(s) failed to parse\n{}",
            errors.len(),
            errors.join("\n")
        );
    }
    let options = CanonicalOptions {
        strip_wiki: !keep_wiki,
    };
    write_amr_file(
        create_output(output)?,
        &entries,
        GraphOutput::Canonical(options),
    )?;
    Ok(())
}

struct ValidateArgs<'a> {
    input: &'a Path,
    lexicon: &'a Path,
    policy: ValidationPolicy,
    report: Option<&'a Path>,
    kept_out: Option<&'a Path>,
}

fn validate(args: ValidateArgs, format: Format) -> Result<Result<(), Failed>> {
    let lexicon_name = args.lexicon.display().to_string();
    let lexicon = FrameLexicon::load(open_input(args.lexicon)?, lexicon_name.clone())
        .with_context(|| format!("cannot load lexicon {lexicon_name}"))?;
    let entries = read_corpus(args.input)?;
    let outcome = filter_corpus(entries, &lexicon, args.policy);
    let report = outcome.report();
    let text = match format {
        Format::Tsv => report.to_tsv(),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    write_text(args.report.unwrap_or(Path::new("-")), &text)?;
    if let Some(path) = args.kept_out {
        write_corpus(path, &outcome.kept)?;
    }
    eprintln!(
        "kept {} of {}, discarded {}",
        report.kept, report.total, report.discarded
    );
    Ok(if report.discarded == 0 {
        Ok(())
    } else {
        Err(Failed)
    })
}

/// Pairs predictions with gold entries, by id when both files carry ids,
/// otherwise by position.
fn align<'a>(
    preds: &'a [CorpusEntry],
    golds: &'a [CorpusEntry],
) -> Result<Vec<(&'a CorpusEntry, &'a CorpusEntry)>> {
    let by_id = preds.iter().chain(golds).all(|e| e.explicit_id);
    if !by_id {
        if preds.len() != golds.len() {
            bail!(
                "{} predictions for {} gold graphs",
                preds.len(),
                golds.len()
            );
        }
        return Ok(preds.iter().zip(golds).collect());
    }
    let index: std::collections::HashMap<&str, &CorpusEntry> =
        preds.iter().map(|e| (e.id.as_str(), e)).collect();
    let mut pairs = Vec::with_capacity(golds.len());
    for g in golds {
        let p = index
            .get(g.id.as_str())
            .ok_or_else(|| anyhow!("no prediction for gold id {}", g.id))?;
        pairs.push((*p, g));
    }
    let gold_ids: std::collections::HashSet<&str> = golds.iter().map(|e| e.id.as_str()).collect();
    if let Some(extra) = preds.iter().find(|p| !gold_ids.contains(p.id.as_str())) {
        bail!("prediction {} has no gold graph", extra.id);
    }
    Ok(pairs)
}

#[derive(Serialize)]
struct PairRow<'a> {
    id: &'a str,
    #[serde(flatten)]
    score: &'a SmatchScore,
}

#[derive(Serialize)]
struct ScoreReport<'a> {
    aggregation: &'static str,
    precision: f64,
    recall: f64,
    f1: f64,
    micro: &'a SmatchScore,
    #[serde(rename = "macro")]
    macro_avg: &'a amrkit::smatch::MacroScore,
    pairs: Vec<PairRow<'a>>,
}

fn score_tsv(ids: &[&str], score: &CorpusScore, aggregation: Aggregation) -> String {
    let mut out = String::from("id\tmatched\tpred_total\tgold_total\tp\tr\tf1\n");
    let row = |out: &mut String, id: &str, s: &SmatchScore, (p, r, f): (f64, f64, f64)| {
        writeln!(
            out,
            "{id}\t{}\t{}\t{}\t{p:.4}\t{r:.4}\t{f:.4}",
            s.matched, s.pred_total, s.gold_total
        )
        .expect("string write");
    };
    for (id, s) in ids.iter().zip(&score.pairs) {
        row(&mut out, id, s, (s.precision, s.recall, s.f1));
    }
    let label = match aggregation {
        Aggregation::Micro => "corpus",
        Aggregation::Macro => "corpus-macro",
    };
    row(&mut out, label, &score.micro, score.headline(aggregation));
    out
}

fn score(
    pred: &Path,
    gold: &Path,
    config: MatchConfig,
    aggregation: Aggregation,
    min_f1: Option<f64>,
    format: Format,
) -> Result<Result<(), Failed>> {
    let preds = read_corpus(pred)?;
    let golds = read_corpus(gold)?;
    if let Some(bad) = golds.iter().find(|g| g.graph.is_err()) {
        bail!(
            "gold graph does not parse: {}",
            parse_failure(bad).unwrap_or_default()
        );
    }
    let pairs = align(&preds, &golds)?;
    let pred_graphs: Vec<Option<&AmrGraph>> = pairs.iter().map(|(p, _)| p.parsed()).collect();
    let gold_graphs: Vec<&AmrGraph> = pairs
        .iter()
        .map(|(_, g)| g.parsed().expect("checked above"))
        .collect();
    for (p, _) in &pairs {
        if let Some(msg) = parse_failure(p) {
            eprintln!("prediction scored as empty: {msg}");
        }
    }
    let result = score_corpus(&pred_graphs, &gold_graphs, &config)?;
    let ids: Vec<&str> = pairs.iter().map(|(_, g)| g.id.as_str()).collect();
    let (precision, recall, f1) = result.headline(aggregation);
    let text = match format {
        Format::Tsv => score_tsv(&ids, &result, aggregation),
        Format::Json => {
            let report = ScoreReport {
                aggregation: match aggregation {
                    Aggregation::Micro => "micro",
                    Aggregation::Macro => "macro",
                },
                precision,
                recall,
                f1,
                micro: &result.micro,
                macro_avg: &result.macro_avg,
                pairs: ids
                    .iter()
                    .zip(&result.pairs)
                    .map(|(id, score)| PairRow { id, score })
                    .collect(),
            };
            serde_json::to_string_pretty(&report)? + "\n"
        }
    };
    write_text(Path::new("-"), &text)?;
    match min_f1 {
        Some(min) if f1 < min => {
            eprintln!("F1 {f1:.4} is below --min-f1 {min}");
            Ok(Err(Failed))
        }
        _ => Ok(Ok(())),
    }
}

fn stats(input: &Path, k: usize, format: Format) -> Result<()> {
    let entries = read_corpus(input)?;
    let table = top_node_stats(&entries, k);
    let text = match format {
        Format::Tsv => table.to_table(),
        Format::Json => serde_json::to_string_pretty(&table)? + "\n",
    };
    write_text(Path::new("-"), &text)?;
    if table.skipped > 0 {
        eprintln!("skipped {} unparseable graph(s)", table.skipped);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Result<(), Failed>> {
    let format = cli.format;
    let seed = cli.seed;
    match cli.command {
        Command::Canonicalize {
            input,
            output,
            keep_wiki,
        } => canonicalize(&input, &output, keep_wiki).map(Ok),
        Command::Validate {
            input,
            lexicon,
            flag_unknown_frames,
            no_and_check,
            no_frame_check,
            report,
            kept_out,
        } => {
            let policy = ValidationPolicy {
                unknown_frames: if flag_unknown_frames {
                    UnknownFramePolicy::Flag
                } else {
                    UnknownFramePolicy::Ignore
                },
                and_arity: !no_and_check,
                frame_args: !no_frame_check,
            };
            let args = ValidateArgs {
                input: &input,
                lexicon: &lexicon,
                policy,
                report: report.as_deref(),
                kept_out: kept_out.as_deref(),
            };
            validate(args, format)
        }
        Command::Score {
            pred,
            gold,
            restarts,
            exact_threshold,
            no_top,
            macro_avg,
            min_f1,
        } => {
            let config = MatchConfig {
                restarts,
                seed,
                include_top: !no_top,
                exact_threshold,
            };
            let aggregation = if macro_avg {
                Aggregation::Macro
            } else {
                Aggregation::Micro
            };
            score(&pred, &gold, config, aggregation, min_f1, format)
        }
        Command::Stats { input, k } => stats(&input, k, format).map(Ok),
        Command::Split {
            input,
            test_size,
            train_out,
            test_out,
        } => {
            let (train, test) = split_corpus(read_corpus(&input)?, test_size, seed)?;
            write_corpus(&train_out, &train)?;
            write_corpus(&test_out, &test)?;
            eprintln!("train {} test {}", train.len(), test.len());
            Ok(Ok(()))
        }
        Command::Sample { input, n, output } => {
            let sample = sample_corpus(&read_corpus(&input)?, n, seed)?;
            write_corpus(&output, &sample)?;
            Ok(Ok(()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.map_or(0, NonZeroUsize::get))
        .build();
    let pool = match pool {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
