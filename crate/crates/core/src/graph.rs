//! Rooted, labeled AMR graphs and their decomposition into triples.
//!
//! An [`AmrGraph`] can only be obtained through [`AmrGraph::new`] (or the
//! [`GraphBuilder`] wrapper), which checks every structural invariant. Edges
//! are stored in depth-first surface order: the order in which a PENMAN
//! writer starting at the root would emit them, expanding each variable at
//! its first encounter.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

/// Characters with structural meaning in PENMAN.
fn is_structural(c: char) -> bool {
    c.is_whitespace() || matches!(c, '(' | ')' | '/' | ':' | '"')
}

fn is_plain_token(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(is_structural)
}

/// Errors raised while constructing graph values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid variable name {0:?}")]
    InvalidVariable(String),
    #[error("invalid concept label {0:?}")]
    InvalidConcept(String),
    #[error("invalid role {0:?}")]
    InvalidRole(String),
    #[error("invalid constant {0:?}")]
    InvalidConstant(String),
    #[error("variable {0} is defined more than once")]
    DuplicateInstance(Variable),
    #[error("variable {0} is used but never defined")]
    UndefinedVariable(Variable),
    #[error("root variable {0} has no instance")]
    UndefinedRoot(Variable),
    #[error("variable {0} is not reachable from the root")]
    Unreachable(Variable),
    #[error("symbol constant {0:?} collides with a variable name")]
    AmbiguousConstant(String),
}

/// A node identifier such as `w`, `b` or `g2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(String);

impl Variable {
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if is_plain_token(&name) {
            Ok(Variable(name))
        } else {
            Err(GraphError::InvalidVariable(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Variable {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A node label: either a frame (`want-01`) or a plain concept (`boy`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Concept(String);

impl Concept {
    pub fn new(label: impl Into<String>) -> Result<Self, GraphError> {
        let label = label.into();
        if is_plain_token(&label) {
            Ok(Concept(label))
        } else {
            Err(GraphError::InvalidConcept(label))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// True for sense-numbered predicates, `<lemma>-<two digits>`.
    pub fn is_frame(&self) -> bool {
        is_frame_label(&self.0)
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_frame_label(label: &str) -> bool {
    match label.rsplit_once('-') {
        Some((lemma, sense)) => {
            !lemma.is_empty() && sense.len() == 2 && sense.bytes().all(|b| b.is_ascii_digit())
        }
        None => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstantKind {
    QuotedString,
    Number,
    Symbol,
}

/// A leaf value. Quoted strings keep their interior exactly as written,
/// escapes included.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constant {
    kind: ConstantKind,
    value: String,
}

impl Constant {
    /// A quoted string; `value` is the text between the quotes.
    pub fn quoted(value: impl Into<String>) -> Result<Self, GraphError> {
        let value = value.into();
        let mut escaped = false;
        for c in value.chars() {
            match c {
                _ if escaped => escaped = false,
                '\\' => escaped = true,
                '"' => return Err(GraphError::InvalidConstant(value)),
                _ => {}
            }
        }
        if escaped {
            return Err(GraphError::InvalidConstant(value));
        }
        Ok(Constant {
            kind: ConstantKind::QuotedString,
            value,
        })
    }

    /// An unquoted token, typed as a number when it reads as one.
    pub fn bare(token: impl Into<String>) -> Result<Self, GraphError> {
        let token = token.into();
        if !is_plain_token(&token) {
            return Err(GraphError::InvalidConstant(token));
        }
        let kind = if looks_numeric(&token) {
            ConstantKind::Number
        } else {
            ConstantKind::Symbol
        };
        Ok(Constant { kind, value: token })
    }

    pub fn kind(&self) -> ConstantKind {
        self.kind
    }

    /// The constant without surrounding quotes.
    pub fn value(&self) -> &str {
        &self.value
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ConstantKind::QuotedString => write!(f, "\"{}\"", self.value),
            _ => f.write_str(&self.value),
        }
    }
}

fn looks_numeric(s: &str) -> bool {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], Some(&body[i + 1..])),
        None => (body, None),
    };
    let (int, frac) = match mantissa.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (mantissa, None),
    };
    let digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    let mantissa_ok = match frac {
        Some(f) => digits(int) && digits(f) && !(int.is_empty() && f.is_empty()),
        None => !int.is_empty() && digits(int),
    };
    let exponent_ok = match exponent {
        Some(e) => {
            let e = e.strip_prefix(['-', '+']).unwrap_or(e);
            !e.is_empty() && digits(e)
        }
        None => true,
    };
    mantissa_ok && exponent_ok
}

/// An edge label such as `:ARG0`, `:mod` or `:ARG1-of`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Role(String);

impl Role {
    pub fn new(label: impl Into<String>) -> Result<Self, GraphError> {
        let label = label.into();
        match label.strip_prefix(':') {
            Some(rest) if is_plain_token(rest) => Ok(Role(label)),
            _ => Err(GraphError::InvalidRole(label)),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `:ARG0-of` style roles. `:consist-of` is an ordinary role.
    pub fn is_inverse(&self) -> bool {
        self.0.len() > ":-of".len() && self.0.ends_with("-of") && self.0 != ":consist-of"
    }

    /// The forward form of an inverse role, otherwise the role itself.
    pub fn normalized(&self) -> &str {
        if self.is_inverse() {
            &self.0[..self.0.len() - 3]
        } else {
            &self.0
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Target {
    Variable(Variable),
    Constant(Constant),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: Variable,
    pub role: Role,
    pub target: Target,
    /// Position among the edges of `source`, in surface order.
    pub order_index: usize,
}

/// A rooted, connected AMR graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmrGraph {
    root: Variable,
    instances: IndexMap<Variable, Concept>,
    edges: Vec<Edge>,
    // edge indices per variable (by instance index), in order_index order
    outgoing: Vec<Vec<usize>>,
}

impl AmrGraph {
    /// Validates and normalizes a graph.
    ///
    /// Edges under each source are ordered by `order_index` (ties keep input
    /// order) and renumbered densely from zero. Instances and edges are
    /// reordered into depth-first surface order from the root.
    pub fn new(
        root: Variable,
        instances: impl IntoIterator<Item = (Variable, Concept)>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let mut defined: IndexMap<Variable, Concept> = IndexMap::new();
        for (var, concept) in instances {
            if defined.contains_key(&var) {
                return Err(GraphError::DuplicateInstance(var));
            }
            defined.insert(var, concept);
        }
        let root_idx = defined
            .get_index_of(&root)
            .ok_or_else(|| GraphError::UndefinedRoot(root.clone()))?;

        let edges: Vec<Edge> = edges.into_iter().collect();
        let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); defined.len()];
        for (i, edge) in edges.iter().enumerate() {
            let src = defined
                .get_index_of(&edge.source)
                .ok_or_else(|| GraphError::UndefinedVariable(edge.source.clone()))?;
            match &edge.target {
                Target::Variable(v) if !defined.contains_key(v) => {
                    return Err(GraphError::UndefinedVariable(v.clone()));
                }
                Target::Constant(c)
                    if c.kind != ConstantKind::QuotedString
                        && defined.contains_key(c.value.as_str()) =>
                {
                    return Err(GraphError::AmbiguousConstant(c.value.clone()));
                }
                _ => {}
            }
            by_source[src].push(i);
        }
        for list in &mut by_source {
            list.sort_by_key(|&i| edges[i].order_index);
        }

        // Depth-first walk, expanding each variable at first encounter.
        let mut expanded = vec![false; defined.len()];
        let mut var_order = vec![root_idx];
        let mut edge_order = Vec::with_capacity(edges.len());
        let mut stack = vec![(root_idx, 0usize)];
        expanded[root_idx] = true;
        while let Some(top) = stack.last_mut() {
            let (var, cursor) = *top;
            if cursor == by_source[var].len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let e = by_source[var][cursor];
            edge_order.push((e, cursor));
            if let Target::Variable(t) = &edges[e].target {
                let t = defined.get_index_of(t).expect("checked above");
                if !expanded[t] {
                    expanded[t] = true;
                    var_order.push(t);
                    stack.push((t, 0));
                }
            }
        }
        if let Some(i) = expanded.iter().position(|&seen| !seen) {
            let var = defined.get_index(i).expect("in range").0.clone();
            return Err(GraphError::Unreachable(var));
        }

        let mut instances = IndexMap::with_capacity(defined.len());
        for &i in &var_order {
            let (v, c) = defined.get_index(i).expect("in range");
            instances.insert(v.clone(), c.clone());
        }
        let mut slots: Vec<Option<Edge>> = edges.into_iter().map(Some).collect();
        let mut ordered = Vec::with_capacity(slots.len());
        let mut outgoing = vec![Vec::new(); instances.len()];
        for (e, rank) in edge_order {
            let mut edge = slots[e].take().expect("each edge visited once");
            edge.order_index = rank;
            let src = instances.get_index_of(&edge.source).expect("defined");
            outgoing[src].push(ordered.len());
            ordered.push(edge);
        }

        Ok(AmrGraph {
            root,
            instances,
            edges: ordered,
            outgoing,
        })
    }

    pub fn builder(root: &str) -> GraphBuilder {
        GraphBuilder::new(root)
    }

    pub fn root(&self) -> &Variable {
        &self.root
    }

    /// Variables with their concepts, in depth-first order from the root.
    pub fn instances(&self) -> impl Iterator<Item = (&Variable, &Concept)> + '_ {
        self.instances.iter()
    }

    pub fn variables(&self) -> impl Iterator<Item = &Variable> + '_ {
        self.instances.keys()
    }

    pub fn concept(&self, var: &Variable) -> Option<&Concept> {
        self.instances.get(var)
    }

    pub fn variable_count(&self) -> usize {
        self.instances.len()
    }

    pub(crate) fn variable_index(&self, var: &Variable) -> Option<usize> {
        self.instances.get_index_of(var)
    }

    /// All edges, in depth-first surface order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges leaving `var`, in `order_index` order.
    pub fn edges_from<'a>(&'a self, var: &Variable) -> impl Iterator<Item = &'a Edge> + 'a {
        let list: &[usize] = match self.instances.get_index_of(var) {
            Some(i) => &self.outgoing[i],
            None => &[],
        };
        list.iter().map(move |&e| &self.edges[e])
    }

    pub fn top_concept(&self) -> &Concept {
        &self.instances[&self.root]
    }

    /// Variables targeted by more than one edge, or targeted at all while
    /// being the root.
    pub fn reentrant_variables(&self) -> BTreeSet<Variable> {
        let mut counts: HashMap<&Variable, usize> = HashMap::new();
        for edge in &self.edges {
            if let Target::Variable(v) = &edge.target {
                *counts.entry(v).or_default() += 1;
            }
        }
        counts
            .into_iter()
            .filter(|(v, n)| *n > 1 || **v == self.root)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// Keeps the edges accepted by `keep`, then drops whatever became
    /// unreachable from the root.
    pub fn retain_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> AmrGraph {
        let kept: Vec<&Edge> = self.edges.iter().filter(|e| keep(e)).collect();
        let mut reachable = vec![false; self.instances.len()];
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); self.instances.len()];
        for edge in &kept {
            if let Target::Variable(t) = &edge.target {
                let s = self.instances.get_index_of(&edge.source).expect("valid");
                adjacency[s].push(self.instances.get_index_of(t).expect("valid"));
            }
        }
        let root = self.instances.get_index_of(&self.root).expect("valid");
        let mut stack = vec![root];
        reachable[root] = true;
        while let Some(v) = stack.pop() {
            for &t in &adjacency[v] {
                if !reachable[t] {
                    reachable[t] = true;
                    stack.push(t);
                }
            }
        }
        let alive = |v: &Variable| reachable[self.instances.get_index_of(v).expect("valid")];
        let instances = self
            .instances
            .iter()
            .filter(|(v, _)| alive(v))
            .map(|(v, c)| (v.clone(), c.clone()));
        let edges = kept
            .into_iter()
            .filter(|e| alive(&e.source))
            .cloned()
            .collect::<Vec<_>>();
        AmrGraph::new(self.root.clone(), instances, edges)
            .expect("pruning a valid graph keeps it valid")
    }

    /// Smatch-style triples; see [`triples`].
    pub fn triples(&self, include_top: bool) -> Vec<Triple> {
        triples(self, include_top)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleKind {
    Instance,
    Attribute,
    Relation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TripleTarget {
    Concept(Concept),
    Constant(Constant),
    Variable(Variable),
}

/// An atomic `(source, label, target)` fact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    pub kind: TripleKind,
    pub source: Variable,
    pub label: String,
    pub target: TripleTarget,
}

pub const INSTANCE_LABEL: &str = "instance";
pub const TOP_LABEL: &str = ":top";
pub const TOP_VALUE: &str = "<TOP>";

/// Decomposes a graph into triples: the optional root marker first, then one
/// instance triple per variable, then one triple per edge in edge order.
///
/// Inverse roles between variables are read in their forward direction, so
/// `(b :ARG0-of g)` yields the relation triple `(g, :ARG0, b)`.
pub fn triples(graph: &AmrGraph, include_top: bool) -> Vec<Triple> {
    let mut out = Vec::with_capacity(graph.instances.len() + graph.edges.len() + 1);
    if include_top {
        out.push(Triple {
            kind: TripleKind::Attribute,
            source: graph.root.clone(),
            label: TOP_LABEL.to_string(),
            target: TripleTarget::Constant(Constant {
                kind: ConstantKind::Symbol,
                value: TOP_VALUE.to_string(),
            }),
        });
    }
    for (var, concept) in &graph.instances {
        out.push(Triple {
            kind: TripleKind::Instance,
            source: var.clone(),
            label: INSTANCE_LABEL.to_string(),
            target: TripleTarget::Concept(concept.clone()),
        });
    }
    for edge in &graph.edges {
        out.push(match &edge.target {
            Target::Constant(c) => Triple {
                kind: TripleKind::Attribute,
                source: edge.source.clone(),
                label: edge.role.as_str().to_string(),
                target: TripleTarget::Constant(c.clone()),
            },
            Target::Variable(t) if edge.role.is_inverse() => Triple {
                kind: TripleKind::Relation,
                source: t.clone(),
                label: edge.role.normalized().to_string(),
                target: TripleTarget::Variable(edge.source.clone()),
            },
            Target::Variable(t) => Triple {
                kind: TripleKind::Relation,
                source: edge.source.clone(),
                label: edge.role.as_str().to_string(),
                target: TripleTarget::Variable(t.clone()),
            },
        });
    }
    out
}

enum RawTarget {
    Variable(String),
    Constant(Constant),
}

/// String-based convenience wrapper around [`AmrGraph::new`]. Edge order
/// under each source follows call order.
pub struct GraphBuilder {
    root: String,
    instances: Vec<(String, String)>,
    edges: Vec<(String, String, RawTarget)>,
}

impl GraphBuilder {
    pub fn new(root: &str) -> Self {
        GraphBuilder {
            root: root.to_string(),
            instances: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn instance(mut self, var: &str, concept: &str) -> Self {
        self.instances.push((var.to_string(), concept.to_string()));
        self
    }

    pub fn relation(mut self, source: &str, role: &str, target: &str) -> Self {
        self.edges.push((
            source.to_string(),
            role.to_string(),
            RawTarget::Variable(target.to_string()),
        ));
        self
    }

    pub fn attribute(mut self, source: &str, role: &str, value: Constant) -> Self {
        self.edges.push((
            source.to_string(),
            role.to_string(),
            RawTarget::Constant(value),
        ));
        self
    }

    pub fn build(self) -> Result<AmrGraph, GraphError> {
        let instances = self
            .instances
            .into_iter()
            .map(|(v, c)| Ok((Variable::new(v)?, Concept::new(c)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        let mut per_source: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (source, role, target) in self.edges {
            let slot = per_source.entry(source.clone()).or_default();
            let order_index = *slot;
            *slot += 1;
            edges.push(Edge {
                source: Variable::new(source)?,
                role: Role::new(role)?,
                target: match target {
                    RawTarget::Variable(v) => Target::Variable(Variable::new(v)?),
                    RawTarget::Constant(c) => Target::Constant(c),
                },
                order_index,
            });
        }
        AmrGraph::new(Variable::new(self.root)?, instances, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn want_go(with_wiki: bool) -> AmrGraph {
        let mut b = AmrGraph::builder("w")
            .instance("w", "want-01")
            .instance("b", "boy")
            .instance("c", "country")
            .instance("n", "name")
            .instance("g", "go-01")
            .relation("w", ":ARG0", "b")
            .relation("b", ":mod", "c");
        if with_wiki {
            b = b.attribute("c", ":wiki", Constant::quoted("Hungary").unwrap());
        }
        b.relation("c", ":name", "n")
            .attribute("n", ":op1", Constant::quoted("Hungary").unwrap())
            .relation("w", ":ARG1", "g")
            .relation("g", ":ARG0", "b")
            .build()
            .unwrap()
    }

    fn count(ts: &[Triple], kind: TripleKind) -> usize {
        ts.iter().filter(|t| t.kind == kind).count()
    }

    #[test]
    fn want_go_triples_with_top() {
        let ts = want_go(false).triples(true);
        assert_eq!(ts.len(), 12);
        assert_eq!(count(&ts, TripleKind::Instance), 5);
        assert_eq!(count(&ts, TripleKind::Relation), 5);
        // op1 plus the root marker
        assert_eq!(count(&ts, TripleKind::Attribute), 2);
        let rel: Vec<_> = ts
            .iter()
            .filter(|t| t.kind == TripleKind::Relation)
            .map(|t| match &t.target {
                TripleTarget::Variable(v) => format!("{} {} {}", t.source, t.label, v),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            rel,
            [
                "w :ARG0 b",
                "b :mod c",
                "c :name n",
                "w :ARG1 g",
                "g :ARG0 b"
            ]
        );
    }

    #[test]
    fn wiki_adds_one_attribute() {
        let ts = want_go(true).triples(false);
        // 5 instances + 7 edges; the root marker is off
        assert_eq!(ts.len(), 12);
        assert_eq!(want_go(false).triples(false).len(), 11);
        assert!(ts.iter().any(|t| t.label == ":wiki"
            && t.source.as_str() == "c"
            && t.target == TripleTarget::Constant(Constant::quoted("Hungary").unwrap())));
    }

    #[test]
    fn single_node() {
        let g = AmrGraph::builder("a")
            .instance("a", "answer")
            .build()
            .unwrap();
        let ts = g.triples(false);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].kind, TripleKind::Instance);
        assert!(g.reentrant_variables().is_empty());
    }

    #[test]
    fn top_concepts() {
        assert_eq!(want_go(false).top_concept().as_str(), "want-01");
        let and = AmrGraph::builder("a")
            .instance("a", "and")
            .instance("x", "run-01")
            .instance("y", "walk-01")
            .relation("a", ":op1", "x")
            .relation("a", ":op2", "y")
            .build()
            .unwrap();
        assert_eq!(and.top_concept().as_str(), "and");
    }

    #[test]
    fn reentrancy() {
        let r = want_go(false).reentrant_variables();
        assert_eq!(r.into_iter().map(|v| v.0).collect::<Vec<_>>(), ["b"]);
        let chain = AmrGraph::builder("a")
            .instance("a", "a1")
            .instance("b", "b1")
            .instance("c", "c1")
            .relation("a", ":ARG0", "b")
            .relation("b", ":ARG0", "c")
            .build()
            .unwrap();
        assert!(chain.reentrant_variables().is_empty());
        let cyc = AmrGraph::builder("a")
            .instance("a", "a1")
            .instance("b", "b1")
            .relation("a", ":ARG0", "b")
            .relation("b", ":ARG1", "a")
            .build()
            .unwrap();
        assert_eq!(cyc.reentrant_variables().len(), 1);
    }

    #[test]
    fn inverse_roles_read_forward() {
        let g = AmrGraph::builder("b")
            .instance("b", "boy")
            .instance("g", "go-01")
            .relation("b", ":ARG0-of", "g")
            .build()
            .unwrap();
        let t = &g.triples(false)[2];
        assert_eq!(t.source.as_str(), "g");
        assert_eq!(t.label, ":ARG0");
        assert_eq!(
            t.target,
            TripleTarget::Variable(Variable::new("b").unwrap())
        );
        assert!(!Role::new(":consist-of").unwrap().is_inverse());
    }

    #[test]
    fn construction_rejects_bad_graphs() {
        let dup = AmrGraph::builder("a")
            .instance("a", "x")
            .instance("a", "y")
            .build();
        assert!(matches!(dup, Err(GraphError::DuplicateInstance(_))));
        let undefined = AmrGraph::builder("a")
            .instance("a", "x")
            .relation("a", ":ARG0", "q")
            .build();
        assert!(matches!(undefined, Err(GraphError::UndefinedVariable(_))));
        let island = AmrGraph::builder("a")
            .instance("a", "x")
            .instance("b", "y")
            .build();
        assert!(matches!(island, Err(GraphError::Unreachable(_))));
        let no_root = AmrGraph::builder("r").instance("a", "x").build();
        assert!(matches!(no_root, Err(GraphError::UndefinedRoot(_))));
        let ambiguous = AmrGraph::builder("a")
            .instance("a", "x")
            .attribute("a", ":mod", Constant::bare("a").unwrap())
            .build();
        assert!(matches!(ambiguous, Err(GraphError::AmbiguousConstant(_))));
        assert!(Variable::new("a b").is_err());
        assert!(Variable::new("").is_err());
        assert!(Concept::new("x/y").is_err());
        assert!(Role::new("ARG0").is_err());
        assert!(Role::new(":").is_err());
        assert!(Constant::quoted("say \"hi\"").is_err());
        assert!(Constant::quoted(r#"say \"hi\""#).is_ok());
    }

    #[test]
    fn frames_and_numbers() {
        for (label, frame) in [
            ("want-01", true),
            ("have-concession-91", true),
            ("boy", false),
            ("-01", false),
            ("go-1", false),
            ("date-entity", false),
        ] {
            assert_eq!(Concept::new(label).unwrap().is_frame(), frame, "{label}");
        }
        for (tok, kind) in [
            ("-", ConstantKind::Symbol),
            ("+", ConstantKind::Symbol),
            ("12", ConstantKind::Number),
            ("-3.5", ConstantKind::Number),
            ("1e6", ConstantKind::Number),
            (".5", ConstantKind::Number),
            ("interrogative", ConstantKind::Symbol),
            ("1.", ConstantKind::Number),
            ("e5", ConstantKind::Symbol),
        ] {
            assert_eq!(Constant::bare(tok).unwrap().kind(), kind, "{tok}");
        }
    }

    #[test]
    fn edge_order_is_depth_first_and_dense() {
        // `b` is referenced before its defining subtree; normalization moves
        // the expansion to the first encounter.
        let g = AmrGraph::new(
            Variable::new("a").unwrap(),
            [
                (Variable::new("a").unwrap(), Concept::new("x").unwrap()),
                (Variable::new("b").unwrap(), Concept::new("y").unwrap()),
            ],
            [
                Edge {
                    source: Variable::new("a").unwrap(),
                    role: Role::new(":ARG1").unwrap(),
                    target: Target::Variable(Variable::new("b").unwrap()),
                    order_index: 7,
                },
                Edge {
                    source: Variable::new("a").unwrap(),
                    role: Role::new(":ARG0").unwrap(),
                    target: Target::Variable(Variable::new("b").unwrap()),
                    order_index: 3,
                },
            ],
        )
        .unwrap();
        let roles: Vec<_> = g
            .edges()
            .iter()
            .map(|e| (e.role.as_str(), e.order_index))
            .collect();
        assert_eq!(roles, [(":ARG0", 0), (":ARG1", 1)]);
        assert_eq!(
            triples(&g, false).len(),
            g.variable_count() + g.edges().len()
        );
    }

    #[test]
    fn retain_prunes_unreachable() {
        let g = want_go(false).retain_edges(|e| e.role.as_str() != ":mod");
        assert_eq!(g.variable_count(), 3);
        assert_eq!(g.edges().len(), 3);
    }
}
