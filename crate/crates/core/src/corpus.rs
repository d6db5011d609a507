//! AMR corpus files, the filter-and-split pipeline, and top-node statistics.
//!
//! Files follow the usual AMR release layout: blank-line separated records,
//! each a block of `# ::key value` metadata lines followed by a PENMAN graph.
//!
//! ```text
//! # ::id ex1
//! # ::snt The Hungarian boy wants to go
//! (w / want-01 ...)
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::AmrGraph;
use crate::penman::{self, CanonicalOptions, ParseDiagnostic};
use crate::validator::{self, FrameLexicon, Rule, ValidationPolicy, ValidationReport, Violation};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("record starting at line {line} has no graph")]
    MissingGraph { line: usize },
    #[error("duplicate id {id:?} on lines {first_line} and {second_line}")]
    DuplicateId {
        id: String,
        first_line: usize,
        second_line: usize,
    },
    #[error("entry {id} cannot be written canonically: {diagnostic}")]
    NotCanonical {
        id: String,
        diagnostic: ParseDiagnostic,
    },
    #[error("requested {requested} entries but the corpus has {available}")]
    TooLarge { requested: usize, available: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    /// False when the record carried no `::id` and `id` was derived from its
    /// position (`#1`, `#2`, ...).
    pub explicit_id: bool,
    pub snt: Option<String>,
    /// Remaining metadata in file order.
    pub extra_meta: Vec<(String, String)>,
    /// The PENMAN block exactly as read, without the trailing newline.
    pub graph_text: String,
    pub graph: Result<AmrGraph, ParseDiagnostic>,
    /// 1-based line of the record's first line, 0 for entries not read from
    /// a file.
    pub line: usize,
    /// 1-based line where the PENMAN block starts.
    pub graph_line: usize,
}

impl CorpusEntry {
    pub fn new(id: impl Into<String>, snt: Option<String>, graph_text: impl Into<String>) -> Self {
        let graph_text = graph_text.into();
        let graph = penman::parse(&graph_text);
        CorpusEntry {
            id: id.into(),
            explicit_id: true,
            snt,
            extra_meta: Vec::new(),
            graph_text,
            graph,
            line: 0,
            graph_line: 0,
        }
    }

    pub fn parsed(&self) -> Option<&AmrGraph> {
        self.graph.as_ref().ok()
    }

    /// Line of a parse error within the file, when the entry came from one.
    pub fn diagnostic_line(&self, diagnostic: &ParseDiagnostic) -> usize {
        if self.graph_line == 0 {
            diagnostic.line
        } else {
            self.graph_line + diagnostic.line - 1
        }
    }
}

/// Splits a `# ::a x ::b y` line into key/value pairs. `::snt` and `::tok`
/// swallow the rest of the line. Returns `None` for plain comments.
fn parse_meta_line(line: &str) -> Option<Vec<(String, String)>> {
    let body = line.trim_start().strip_prefix('#')?.trim_start();
    if !body.starts_with("::") {
        return None;
    }
    let mut starts: Vec<usize> = Vec::new();
    for (i, _) in body.match_indices("::") {
        let at_boundary = i == 0 || body[..i].ends_with(char::is_whitespace);
        let adjacent = starts.last().is_some_and(|&s| i < s + 2);
        if at_boundary && !adjacent {
            starts.push(i);
        }
    }
    let mut out = Vec::new();
    let mut idx = 0;
    while idx < starts.len() {
        let seg_start = starts[idx] + 2;
        let key_end = body[seg_start..]
            .find(char::is_whitespace)
            .map_or(body.len(), |k| seg_start + k);
        let key = &body[seg_start..key_end];
        let swallow = matches!(key, "snt" | "tok");
        let seg_end = if swallow {
            idx = starts.len();
            body.len()
        } else {
            idx += 1;
            starts.get(idx).copied().unwrap_or(body.len())
        };
        let value = body[key_end.min(seg_end)..seg_end].trim();
        out.push((key.to_string(), value.to_string()));
    }
    Some(out)
}

struct RawRecord {
    line: usize,
    meta: Vec<(String, String)>,
    graph_line: usize,
    graph_lines: Vec<String>,
}

/// Reads every record. Graphs are parsed in parallel; parse failures are
/// kept on the entry rather than aborting the read.
pub fn read_amr_file(reader: impl BufRead) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut records = Vec::new();
    let mut current: Option<RawRecord> = None;
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let mut line = line?;
        if line.ends_with('\r') {
            line.pop();
        }
        if line.trim().is_empty() {
            if let Some(rec) = current.take() {
                records.push(rec);
            }
            continue;
        }
        let rec = current.get_or_insert_with(|| RawRecord {
            line: line_no,
            meta: Vec::new(),
            graph_line: 0,
            graph_lines: Vec::new(),
        });
        if rec.graph_lines.is_empty() && line.trim_start().starts_with('#') {
            if let Some(pairs) = parse_meta_line(&line) {
                rec.meta.extend(pairs);
            }
            continue;
        }
        if rec.graph_lines.is_empty() {
            rec.graph_line = line_no;
        }
        rec.graph_lines.push(line);
    }
    records.extend(current);

    if let Some(rec) = records.iter().find(|r| r.graph_lines.is_empty()) {
        return Err(CorpusError::MissingGraph { line: rec.line });
    }

    let entries: Vec<CorpusEntry> = records
        .into_par_iter()
        .enumerate()
        .map(|(n, rec)| {
            let mut id = None;
            let mut snt = None;
            let mut extra_meta = Vec::new();
            for (k, v) in rec.meta {
                match k.as_str() {
                    "id" if id.is_none() => id = Some(v),
                    "snt" if snt.is_none() => snt = Some(v),
                    _ => extra_meta.push((k, v)),
                }
            }
            let graph_text = rec.graph_lines.join("\n");
            let graph = penman::parse(&graph_text);
            CorpusEntry {
                explicit_id: id.is_some(),
                id: id.unwrap_or_else(|| format!("#{}", n + 1)),
                snt,
                extra_meta,
                graph_text,
                graph,
                line: rec.line,
                graph_line: rec.graph_line,
            }
        })
        .collect();

    let mut seen: HashMap<&str, usize> = HashMap::new();
    for e in &entries {
        if let Some(&first) = seen.get(e.id.as_str()) {
            return Err(CorpusError::DuplicateId {
                id: e.id.clone(),
                first_line: first,
                second_line: e.line,
            });
        }
        seen.insert(&e.id, e.line);
    }
    Ok(entries)
}

pub fn read_amr_str(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    read_amr_file(text.as_bytes())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphOutput {
    /// Graph blocks exactly as read.
    Verbatim,
    /// Graph blocks replaced by their canonical single-line form.
    Canonical(CanonicalOptions),
}

fn render_entry(entry: &CorpusEntry, output: GraphOutput) -> Result<String, CorpusError> {
    let mut out = String::new();
    if entry.explicit_id {
        writeln!(out, "# ::id {}", entry.id).expect("string write");
    }
    if let Some(snt) = &entry.snt {
        writeln!(out, "# ::snt {snt}").expect("string write");
    }
    for (k, v) in &entry.extra_meta {
        writeln!(out, "# ::{k} {v}").expect("string write");
    }
    match output {
        GraphOutput::Verbatim => out.push_str(&entry.graph_text),
        GraphOutput::Canonical(options) => {
            let graph = entry
                .graph
                .as_ref()
                .map_err(|d| CorpusError::NotCanonical {
                    id: entry.id.clone(),
                    diagnostic: d.clone(),
                })?;
            let graph = if options.strip_wiki {
                penman::strip_wiki(graph)
            } else {
                graph.clone()
            };
            out.push_str(&penman::serialize_canonical(&graph));
        }
    }
    out.push('\n');
    Ok(out)
}

/// Writes records separated by blank lines. Nothing is written if any entry
/// fails to render.
pub fn write_amr_file(
    mut writer: impl Write,
    entries: &[CorpusEntry],
    output: GraphOutput,
) -> Result<(), CorpusError> {
    let blocks = entries
        .par_iter()
        .map(|e| render_entry(e, output))
        .collect::<Result<Vec<_>, _>>()?;
    for (i, block) in blocks.iter().enumerate() {
        if i > 0 {
            writer.write_all(b"\n")?;
        }
        writer.write_all(block.as_bytes())?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_amr_string(
    entries: &[CorpusEntry],
    output: GraphOutput,
) -> Result<String, CorpusError> {
    let mut buf = Vec::new();
    write_amr_file(&mut buf, entries, output)?;
    Ok(String::from_utf8(buf).expect("entries are UTF-8"))
}

#[derive(Debug, Clone)]
pub struct FilterOutcome {
    pub kept: Vec<CorpusEntry>,
    pub discarded: Vec<(CorpusEntry, ValidationReport)>,
}

impl FilterOutcome {
    pub fn kept_n(&self) -> usize {
        self.kept.len()
    }

    pub fn discarded_n(&self) -> usize {
        self.discarded.len()
    }

    pub fn report(&self) -> FilterReport {
        let mut by_rule: BTreeMap<String, usize> = BTreeMap::new();
        for (_, report) in &self.discarded {
            for v in &report.violations {
                *by_rule.entry(v.rule.to_string()).or_default() += 1;
            }
        }
        FilterReport {
            total: self.kept_n() + self.discarded_n(),
            kept: self.kept_n(),
            discarded: self.discarded_n(),
            violations_by_rule: by_rule,
            discarded_entries: self.discarded.iter().map(|(_, r)| r.clone()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub total: usize,
    pub kept: usize,
    pub discarded: usize,
    pub violations_by_rule: BTreeMap<String, usize>,
    pub discarded_entries: Vec<ValidationReport>,
}

impl FilterReport {
    /// One row per violation: `id, rule, node, detail`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("id\trule\tnode\tdetail\n");
        for r in &self.discarded_entries {
            for v in &r.violations {
                let detail = v.detail.replace(['\t', '\n'], " ");
                writeln!(out, "{}\t{}\t{}\t{}", r.graph_id, v.rule, v.node, detail)
                    .expect("string write");
            }
        }
        out
    }
}

/// Validates every entry; entries that fail to parse are discarded with a
/// structural violation. Input order is kept on both sides.
pub fn filter_corpus(
    entries: Vec<CorpusEntry>,
    lexicon: &FrameLexicon,
    policy: ValidationPolicy,
) -> FilterOutcome {
    let judged: Vec<(CorpusEntry, ValidationReport)> = entries
        .into_par_iter()
        .map(|e| {
            let report = match &e.graph {
                Ok(g) => validator::validate(&e.id, g, lexicon, policy),
                Err(d) => ValidationReport::failed(
                    e.id.clone(),
                    Violation {
                        rule: Rule::Structural,
                        node: String::new(),
                        detail: format!("parse error: {d}"),
                    },
                ),
            };
            (e, report)
        })
        .collect();
    let mut kept = Vec::new();
    let mut discarded = Vec::new();
    for (e, report) in judged {
        if report.passed {
            kept.push(e);
        } else {
            discarded.push((e, report));
        }
    }
    FilterOutcome { kept, discarded }
}

fn permutation(len: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..len).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order
}

/// Shuffles with `seed` and returns `(train, test)`, where `test` holds the
/// first `test_size` entries of the shuffled order.
pub fn split_corpus(
    entries: Vec<CorpusEntry>,
    test_size: usize,
    seed: u64,
) -> Result<(Vec<CorpusEntry>, Vec<CorpusEntry>), CorpusError> {
    if test_size > entries.len() {
        return Err(CorpusError::TooLarge {
            requested: test_size,
            available: entries.len(),
        });
    }
    let order = permutation(entries.len(), seed);
    let mut slots: Vec<Option<CorpusEntry>> = entries.into_iter().map(Some).collect();
    let mut shuffled = order
        .into_iter()
        .map(|i| slots[i].take().expect("permutation"));
    let test: Vec<CorpusEntry> = shuffled.by_ref().take(test_size).collect();
    let train: Vec<CorpusEntry> = shuffled.collect();
    Ok((train, test))
}

/// The first `n` entries of the seeded shuffle. For a fixed seed a smaller
/// sample is always a prefix of a larger one.
pub fn sample_corpus(
    entries: &[CorpusEntry],
    n: usize,
    seed: u64,
) -> Result<Vec<CorpusEntry>, CorpusError> {
    if n > entries.len() {
        return Err(CorpusError::TooLarge {
            requested: n,
            available: entries.len(),
        });
    }
    Ok(permutation(entries.len(), seed)
        .into_iter()
        .take(n)
        .map(|i| entries[i].clone())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeFrequencyTable {
    /// `(concept, count)`, most frequent first, ties in lexicographic order.
    pub rows: Vec<(String, usize)>,
    pub parsed: usize,
    pub skipped: usize,
}

impl NodeFrequencyTable {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("node\tcount\n");
        for (c, n) in &self.rows {
            writeln!(out, "{c}\t{n}").expect("string write");
        }
        out
    }

    /// Two aligned columns; counts of 100 or more are shown in thousands
    /// (`7.0k`).
    pub fn to_table(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|(c, _)| c.len())
            .max()
            .unwrap_or(0)
            .max(4);
        let mut out = format!("{:<width$}  #\n", "node");
        for (c, n) in &self.rows {
            writeln!(out, "{c:<width$}  {}", compact_count(*n)).expect("string write");
        }
        out
    }
}

pub fn compact_count(n: usize) -> String {
    if n >= 100 {
        format!("{:.1}k", n as f64 / 1000.0)
    } else {
        n.to_string()
    }
}

/// Frequencies of root concepts over parseable entries, truncated to `k`.
pub fn top_node_stats(entries: &[CorpusEntry], k: usize) -> NodeFrequencyTable {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    let mut skipped = 0;
    for e in entries {
        match &e.graph {
            Ok(g) => *counts.entry(g.top_concept().as_str()).or_default() += 1,
            Err(_) => skipped += 1,
        }
    }
    let mut rows: Vec<(String, usize)> = counts
        .into_iter()
        .map(|(c, n)| (c.to_string(), n))
        .collect();
    rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    rows.truncate(k);
    NodeFrequencyTable {
        rows,
        parsed: entries.len() - skipped,
        skipped,
    }
}
