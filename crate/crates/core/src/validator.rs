//! Quality filters for silver AMR graphs.
//!
//! Three rule families are checked: structural well-formedness, the arity
//! of `and` nodes (at least two `:opN` operands), and the core arguments of
//! sense-numbered frames against a [`FrameLexicon`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::BufRead;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{is_frame_label, AmrGraph, Target, Variable};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: expected `frame<TAB>ROLE[,ROLE...]`")]
    MissingTab { line: usize },
    #[error("line {line}: {frame:?} is not a frame id of the form lemma-NN")]
    BadFrameId { line: usize, frame: String },
    #[error("line {line}: bad role {token:?} (expected ARG0..ARG6)")]
    BadRole { line: usize, token: String },
    #[error("line {line}: frame {frame} has no roles (use `-` for a zero-argument frame)")]
    NoRoles { line: usize, frame: String },
    #[error("line {line}: frame {frame} already defined on line {first}")]
    DuplicateFrame {
        frame: String,
        first: usize,
        line: usize,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameEntry {
    pub frame_id: String,
    /// Core roles in `:ARGn` form.
    pub allowed_args: BTreeSet<String>,
}

/// Permitted core arguments per frame.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrameLexicon {
    entries: BTreeMap<String, FrameEntry>,
    pub source_name: String,
}

impl FrameLexicon {
    pub fn new(source_name: impl Into<String>) -> Self {
        FrameLexicon {
            entries: BTreeMap::new(),
            source_name: source_name.into(),
        }
    }

    /// Reads the two-column format: `frame_id<TAB>ARG0,ARG1`. Roles may be
    /// written with or without the leading colon; `-` marks a frame with no
    /// core arguments. Blank lines and `#` comments are skipped.
    pub fn load(
        reader: impl BufRead,
        source_name: impl Into<String>,
    ) -> Result<Self, LexiconError> {
        let mut lexicon = FrameLexicon::new(source_name);
        let mut first_seen: BTreeMap<String, usize> = BTreeMap::new();
        for (i, line) in reader.lines().enumerate() {
            let line_no = i + 1;
            let line = line?;
            let trimmed = line.trim_end_matches(['\r', '\n']);
            if trimmed.trim().is_empty() || trimmed.trim_start().starts_with('#') {
                continue;
            }
            let (frame, roles) = trimmed
                .split_once('\t')
                .ok_or(LexiconError::MissingTab { line: line_no })?;
            let frame = frame.trim();
            if !is_frame_label(frame) || frame.chars().any(char::is_whitespace) {
                return Err(LexiconError::BadFrameId {
                    line: line_no,
                    frame: frame.to_string(),
                });
            }
            let roles = roles.trim();
            let mut allowed = BTreeSet::new();
            if roles != "-" {
                for token in roles.split(',').map(str::trim) {
                    allowed.insert(parse_core_role(token).ok_or_else(|| {
                        LexiconError::BadRole {
                            line: line_no,
                            token: token.to_string(),
                        }
                    })?);
                }
                if allowed.is_empty() {
                    return Err(LexiconError::NoRoles {
                        line: line_no,
                        frame: frame.to_string(),
                    });
                }
            }
            if let Some(&first) = first_seen.get(frame) {
                return Err(LexiconError::DuplicateFrame {
                    frame: frame.to_string(),
                    first,
                    line: line_no,
                });
            }
            first_seen.insert(frame.to_string(), line_no);
            lexicon.entries.insert(
                frame.to_string(),
                FrameEntry {
                    frame_id: frame.to_string(),
                    allowed_args: allowed,
                },
            );
        }
        Ok(lexicon)
    }

    pub fn from_str(text: &str, source_name: impl Into<String>) -> Result<Self, LexiconError> {
        Self::load(text.as_bytes(), source_name)
    }

    /// Adds or replaces an entry. Roles are given as `ARGn` or `:ARGn`.
    pub fn insert<'a>(&mut self, frame_id: &str, roles: impl IntoIterator<Item = &'a str>) {
        let allowed_args = roles.into_iter().filter_map(parse_core_role).collect();
        self.entries.insert(
            frame_id.to_string(),
            FrameEntry {
                frame_id: frame_id.to_string(),
                allowed_args,
            },
        );
    }

    pub fn get(&self, frame_id: &str) -> Option<&FrameEntry> {
        self.entries.get(frame_id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The frame lexicon bundled with the crate.
pub const SAMPLE_LEXICON: &str = include_str!("../data/frames.tsv");

pub fn sample_lexicon() -> FrameLexicon {
    FrameLexicon::from_str(SAMPLE_LEXICON, "sample").expect("bundled lexicon is well formed")
}

fn parse_core_role(token: &str) -> Option<String> {
    let bare = token.strip_prefix(':').unwrap_or(token);
    let n = bare.strip_prefix("ARG")?;
    match n.as_bytes() {
        [d @ b'0'..=b'6'] => Some(format!(":ARG{}", *d as char)),
        _ => None,
    }
}

/// `:ARG3` → `(":ARG3", false)`, `:ARG3-of` → `(":ARG3", true)`.
fn core_arg(role: &str) -> Option<(&str, bool)> {
    let (base, inverse) = match role.strip_suffix("-of") {
        Some(base) => (base, true),
        None => (role, false),
    };
    let digits = base.strip_prefix(":ARG")?;
    if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
        Some((base, inverse))
    } else {
        None
    }
}

fn is_op_role(role: &str) -> bool {
    role.strip_prefix(":op")
        .is_some_and(|n| !n.is_empty() && n.bytes().all(|b| b.is_ascii_digit()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    AndArity,
    UnknownFrame,
    IllegalArg,
    Structural,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::AndArity => "and-arity",
            Rule::UnknownFrame => "unknown-frame",
            Rule::IllegalArg => "illegal-arg",
            Rule::Structural => "structural",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    /// Offending variable; empty for failures with no graph to point into.
    pub node: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum UnknownFramePolicy {
    #[default]
    Ignore,
    Flag,
}

/// Which rules run. Every rule is on by default; unknown frames are
/// ignored unless asked otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValidationPolicy {
    pub unknown_frames: UnknownFramePolicy,
    pub and_arity: bool,
    pub frame_args: bool,
}

impl Default for ValidationPolicy {
    fn default() -> Self {
        ValidationPolicy {
            unknown_frames: UnknownFramePolicy::Ignore,
            and_arity: true,
            frame_args: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub graph_id: String,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl ValidationReport {
    pub fn failed(graph_id: impl Into<String>, violation: Violation) -> Self {
        ValidationReport {
            graph_id: graph_id.into(),
            violations: vec![violation],
            passed: false,
        }
    }
}

fn violation(rule: Rule, node: &Variable, detail: String) -> Violation {
    Violation {
        rule,
        node: node.as_str().to_string(),
        detail,
    }
}

/// One violation per `and` node with fewer than two `:opN` out-edges.
pub fn check_and_operands(graph: &AmrGraph) -> Vec<Violation> {
    graph
        .instances()
        .filter(|(_, c)| c.as_str() == "and")
        .filter_map(|(var, _)| {
            let ops = graph
                .edges_from(var)
                .filter(|e| is_op_role(e.role.as_str()))
                .count();
            (ops < 2).then(|| {
                violation(
                    Rule::AndArity,
                    var,
                    format!("'and' has {ops} operand(s), at least 2 required"),
                )
            })
        })
        .collect()
}

/// Checks the core `:ARGn` roles of every frame node against the lexicon.
/// Outgoing `:ARGn` edges and incoming `:ARGn-of` edges both count as
/// arguments of the frame.
pub fn check_frame_args(
    graph: &AmrGraph,
    lexicon: &FrameLexicon,
    unknown_frames: UnknownFramePolicy,
) -> Vec<Violation> {
    let mut out = Vec::new();
    for (var, concept) in graph.instances() {
        if !concept.is_frame() {
            continue;
        }
        let Some(entry) = lexicon.get(concept.as_str()) else {
            if unknown_frames == UnknownFramePolicy::Flag {
                out.push(violation(
                    Rule::UnknownFrame,
                    var,
                    format!("frame {concept} is not in lexicon {}", lexicon.source_name),
                ));
            }
            continue;
        };
        let outgoing = graph
            .edges_from(var)
            .filter_map(|e| core_arg(e.role.as_str()).filter(|(_, inv)| !inv));
        let incoming = graph.edges().iter().filter_map(|e| match &e.target {
            Target::Variable(t) if t == var => core_arg(e.role.as_str()).filter(|(_, inv)| *inv),
            _ => None,
        });
        for (arg, inverse) in outgoing.chain(incoming) {
            if !entry.allowed_args.contains(arg) {
                let how = if inverse { " (via inverse role)" } else { "" };
                out.push(violation(
                    Rule::IllegalArg,
                    var,
                    format!("{concept} does not take {arg}{how}"),
                ));
            }
        }
    }
    out
}

/// Re-derives the construction invariants. Graphs built through
/// [`AmrGraph::new`] always pass.
fn check_structure(graph: &AmrGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for var in graph.variables() {
        if !seen.insert(var) {
            out.push(violation(Rule::Structural, var, "defined twice".into()));
        }
    }
    let reachable = graph.retain_edges(|_| true);
    for var in graph.variables() {
        if reachable.concept(var).is_none() {
            out.push(violation(
                Rule::Structural,
                var,
                "unreachable from root".into(),
            ));
        }
    }
    out
}

/// Runs every rule enabled by `policy`. Violations are ordered by node
/// (depth-first position in the graph), then rule, then detail.
pub fn validate(
    graph_id: &str,
    graph: &AmrGraph,
    lexicon: &FrameLexicon,
    policy: ValidationPolicy,
) -> ValidationReport {
    let mut violations = check_structure(graph);
    if policy.and_arity {
        violations.extend(check_and_operands(graph));
    }
    if policy.frame_args {
        violations.extend(check_frame_args(graph, lexicon, policy.unknown_frames));
    }
    let position = |node: &str| {
        graph
            .variables()
            .position(|v| v.as_str() == node)
            .unwrap_or(usize::MAX)
    };
    violations.sort_by(|a, b| {
        (position(&a.node), a.rule, &a.detail).cmp(&(position(&b.node), b.rule, &b.detail))
    });
    ValidationReport {
        graph_id: graph_id.to_string(),
        passed: violations.is_empty(),
        violations,
    }
}
