//! PENMAN notation: parsing, wiki stripping and the single-line canonical
//! form.
//!
//! The canonical form is a depth-first serialization on one line where
//! every token, including each parenthesis, is separated by exactly one
//! space:
//!
//! ```text
//! ( w / want-01 :ARG0 ( b / boy ) :ARG1 ( g / go-01 :ARG0 b ) )
//! ```

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{AmrGraph, Concept, Constant, Edge, Role, Target, Variable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagnosticCode {
    UnbalancedParen,
    MissingConcept,
    DuplicateVariable,
    UndefinedVariable,
    EmptyRole,
    MalformedToken,
}

impl fmt::Display for DiagnosticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DiagnosticCode::UnbalancedParen => "unbalanced-paren",
            DiagnosticCode::MissingConcept => "missing-concept",
            DiagnosticCode::DuplicateVariable => "duplicate-variable",
            DiagnosticCode::UndefinedVariable => "undefined-variable",
            DiagnosticCode::EmptyRole => "empty-role",
            DiagnosticCode::MalformedToken => "malformed-token",
        };
        f.write_str(name)
    }
}

/// A parse failure with its location. `offset` is a byte offset into the
/// input and never exceeds its length; `line` and `column` are 1-based,
/// columns counted in characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message} [{code}]")]
pub struct ParseDiagnostic {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub code: DiagnosticCode,
    pub message: String,
}

impl ParseDiagnostic {
    fn at(text: &str, offset: usize, code: DiagnosticCode, message: impl Into<String>) -> Self {
        let offset = offset.min(text.len());
        let before = &text[..offset];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        let column = before[line_start..].chars().count() + 1;
        ParseDiagnostic {
            offset,
            line,
            column,
            code,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Open,
    Close,
    Slash,
    Role(&'a str),
    Quoted(&'a str),
    Symbol(&'a str),
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Open => "'('".into(),
            Tok::Close => "')'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Role(r) => format!("role {r}"),
            Tok::Quoted(q) => format!("string \"{q}\""),
            Tok::Symbol(s) => format!("{s:?}"),
        }
    }
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || matches!(c, '(' | ')' | '"' | '/')
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseDiagnostic> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        match c {
            _ if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                tokens.push((start, Tok::Open));
            }
            ')' => {
                chars.next();
                tokens.push((start, Tok::Close));
            }
            '/' => {
                chars.next();
                tokens.push((start, Tok::Slash));
            }
            '"' => {
                chars.next();
                let mut escaped = false;
                let mut end = None;
                for (i, c) in chars.by_ref() {
                    match c {
                        _ if escaped => escaped = false,
                        '\\' => escaped = true,
                        '"' => {
                            end = Some(i);
                            break;
                        }
                        _ => {}
                    }
                }
                let end = end.ok_or_else(|| {
                    ParseDiagnostic::at(
                        text,
                        start,
                        DiagnosticCode::MalformedToken,
                        "unterminated string",
                    )
                })?;
                tokens.push((start, Tok::Quoted(&text[start + 1..end])));
            }
            _ => {
                let mut end = text.len();
                chars.next();
                while let Some(&(i, c)) = chars.peek() {
                    if is_delimiter(c) {
                        end = i;
                        break;
                    }
                    chars.next();
                }
                let word = &text[start..end];
                if word.starts_with('#') {
                    return Err(ParseDiagnostic::at(
                        text,
                        start,
                        DiagnosticCode::MalformedToken,
                        "comment and metadata lines are not part of PENMAN",
                    ));
                }
                if c == ':' {
                    if word.len() == 1 {
                        return Err(ParseDiagnostic::at(
                            text,
                            start,
                            DiagnosticCode::EmptyRole,
                            "role has no name",
                        ));
                    }
                    tokens.push((start, Tok::Role(word)));
                } else {
                    tokens.push((start, Tok::Symbol(word)));
                }
            }
        }
    }
    Ok(tokens)
}

/// Bare tokens of this shape are treated as variable references: a letter
/// optionally followed by digits (`b`, `g2`, `x13`).
fn variable_shaped(token: &str) -> bool {
    let mut bytes = token.bytes();
    matches!(bytes.next(), Some(b) if b.is_ascii_lowercase()) && bytes.all(|b| b.is_ascii_digit())
}

enum PendingTarget<'a> {
    Node(&'a str),
    Quoted(&'a str),
    Bare(&'a str),
}

struct PendingEdge<'a> {
    source: &'a str,
    role: &'a str,
    role_offset: usize,
    target: PendingTarget<'a>,
    target_offset: usize,
    order_index: usize,
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<(usize, Tok<'a>)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<(usize, Tok<'a>)> {
        self.tokens.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, Tok<'a>)> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn err(&self, offset: usize, code: DiagnosticCode, msg: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic::at(self.text, offset, code, msg)
    }

    fn eof_offset(&self) -> usize {
        self.text.len()
    }

    /// Reads `var / concept` after an opening parenthesis.
    fn node_head(&mut self, open_at: usize) -> Result<(usize, &'a str, &'a str), ParseDiagnostic> {
        let (var_at, var) = match self.next() {
            Some((at, Tok::Symbol(v))) => (at, v),
            Some((at, tok)) => {
                return Err(self.err(
                    at,
                    DiagnosticCode::MalformedToken,
                    format!("expected a variable after '(', found {}", tok.describe()),
                ))
            }
            None => {
                return Err(self.err(
                    self.eof_offset(),
                    DiagnosticCode::UnbalancedParen,
                    format!("input ends inside the node opened at byte {open_at}"),
                ))
            }
        };
        if Variable::new(var).is_err() {
            return Err(self.err(
                var_at,
                DiagnosticCode::MalformedToken,
                format!("invalid variable {var:?}"),
            ));
        }
        match self.next() {
            Some((_, Tok::Slash)) => {}
            Some((at, _)) => {
                return Err(self.err(
                    at,
                    DiagnosticCode::MissingConcept,
                    format!("node {var} has no concept"),
                ))
            }
            None => {
                return Err(self.err(
                    self.eof_offset(),
                    DiagnosticCode::MissingConcept,
                    format!("node {var} has no concept"),
                ))
            }
        }
        match self.next() {
            Some((at, Tok::Symbol(c))) => {
                if Concept::new(c).is_err() {
                    return Err(self.err(
                        at,
                        DiagnosticCode::MalformedToken,
                        format!("invalid concept {c:?}"),
                    ));
                }
                Ok((var_at, var, c))
            }
            Some((at, _)) => Err(self.err(
                at,
                DiagnosticCode::MissingConcept,
                format!("node {var} has no concept after '/'"),
            )),
            None => Err(self.err(
                self.eof_offset(),
                DiagnosticCode::MissingConcept,
                format!("node {var} has no concept after '/'"),
            )),
        }
    }

    fn parse(mut self) -> Result<AmrGraph, ParseDiagnostic> {
        let open_at = match self.next() {
            Some((at, Tok::Open)) => at,
            Some((at, Tok::Close)) => {
                return Err(self.err(at, DiagnosticCode::UnbalancedParen, "unexpected ')'"))
            }
            Some((at, tok)) => {
                return Err(self.err(
                    at,
                    DiagnosticCode::MalformedToken,
                    format!("expected '(', found {}", tok.describe()),
                ))
            }
            None => return Err(self.err(0, DiagnosticCode::MalformedToken, "empty input")),
        };

        let mut defined: HashMap<&'a str, usize> = HashMap::new();
        let mut instances: Vec<(&'a str, &'a str)> = Vec::new();
        let mut edges: Vec<PendingEdge<'a>> = Vec::new();
        // (variable, opening offset, edges emitted so far)
        let mut stack: Vec<(&'a str, usize, usize)> = Vec::new();

        let (var_at, root, concept) = self.node_head(open_at)?;
        defined.insert(root, var_at);
        instances.push((root, concept));
        stack.push((root, open_at, 0));

        while let Some(&(current, opened, _)) = stack.last() {
            match self.next() {
                Some((_, Tok::Close)) => {
                    stack.pop();
                }
                Some((role_at, Tok::Role(role))) => {
                    if Role::new(role).is_err() {
                        return Err(self.err(
                            role_at,
                            DiagnosticCode::MalformedToken,
                            format!("invalid role {role:?}"),
                        ));
                    }
                    let (target_offset, target) = match self.next() {
                        Some((at, Tok::Open)) => {
                            let (var_at, var, concept) = self.node_head(at)?;
                            if let Some(&first) = defined.get(var) {
                                let first = ParseDiagnostic::at(
                                    self.text,
                                    first,
                                    DiagnosticCode::DuplicateVariable,
                                    "",
                                );
                                return Err(self.err(
                                    var_at,
                                    DiagnosticCode::DuplicateVariable,
                                    format!(
                                        "variable {var} is already defined at line {}, column {}",
                                        first.line, first.column
                                    ),
                                ));
                            }
                            defined.insert(var, var_at);
                            instances.push((var, concept));
                            (at, PendingTarget::Node(var))
                        }
                        Some((at, Tok::Quoted(q))) => (at, PendingTarget::Quoted(q)),
                        Some((at, Tok::Symbol(s))) => (at, PendingTarget::Bare(s)),
                        Some((at, tok)) => {
                            return Err(self.err(
                                at,
                                DiagnosticCode::MalformedToken,
                                format!("role {role} has no target, found {}", tok.describe()),
                            ))
                        }
                        None => {
                            return Err(self.err(
                                self.eof_offset(),
                                DiagnosticCode::UnbalancedParen,
                                format!("input ends after role {role}"),
                            ))
                        }
                    };
                    let top = stack.last_mut().expect("non-empty");
                    let is_node = matches!(target, PendingTarget::Node(_));
                    edges.push(PendingEdge {
                        source: current,
                        role,
                        role_offset: role_at,
                        target,
                        target_offset,
                        order_index: top.2,
                    });
                    top.2 += 1;
                    if let (true, PendingTarget::Node(var)) =
                        (is_node, &edges.last().expect("just pushed").target)
                    {
                        stack.push((var, target_offset, 0));
                    }
                }
                Some((at, tok)) => {
                    return Err(self.err(
                        at,
                        DiagnosticCode::MalformedToken,
                        format!("expected a role or ')', found {}", tok.describe()),
                    ))
                }
                None => {
                    let start =
                        ParseDiagnostic::at(self.text, opened, DiagnosticCode::UnbalancedParen, "");
                    return Err(self.err(
                        self.eof_offset(),
                        DiagnosticCode::UnbalancedParen,
                        format!(
                            "missing ')' for node {current} opened at line {}, column {}",
                            start.line, start.column
                        ),
                    ));
                }
            }
        }

        match self.next() {
            None => {}
            Some((at, Tok::Close)) => {
                return Err(self.err(at, DiagnosticCode::UnbalancedParen, "unexpected ')'"))
            }
            Some((at, tok)) => {
                return Err(self.err(
                    at,
                    DiagnosticCode::MalformedToken,
                    format!("unexpected {} after the end of the graph", tok.describe()),
                ))
            }
        }

        self.assemble(root, instances, edges, &defined)
    }

    fn assemble(
        &self,
        root: &str,
        instances: Vec<(&str, &str)>,
        edges: Vec<PendingEdge<'_>>,
        defined: &HashMap<&str, usize>,
    ) -> Result<AmrGraph, ParseDiagnostic> {
        let mut built = Vec::with_capacity(edges.len());
        for e in edges {
            let target = match e.target {
                PendingTarget::Node(v) => Target::Variable(self.variable(v, e.target_offset)?),
                PendingTarget::Quoted(q) => {
                    Target::Constant(Constant::quoted(q).map_err(|_| {
                        self.err(
                            e.target_offset,
                            DiagnosticCode::MalformedToken,
                            "invalid string",
                        )
                    })?)
                }
                PendingTarget::Bare(s) if defined.contains_key(s) => {
                    Target::Variable(self.variable(s, e.target_offset)?)
                }
                PendingTarget::Bare(s) if variable_shaped(s) => {
                    return Err(self.err(
                        e.target_offset,
                        DiagnosticCode::UndefinedVariable,
                        format!("variable {s} is never defined"),
                    ))
                }
                PendingTarget::Bare(s) => Target::Constant(Constant::bare(s).map_err(|_| {
                    self.err(
                        e.target_offset,
                        DiagnosticCode::MalformedToken,
                        format!("invalid constant {s:?}"),
                    )
                })?),
            };
            built.push(Edge {
                source: self.variable(e.source, e.role_offset)?,
                role: Role::new(e.role).map_err(|_| {
                    self.err(
                        e.role_offset,
                        DiagnosticCode::MalformedToken,
                        "invalid role",
                    )
                })?,
                target,
                order_index: e.order_index,
            });
        }
        let instances = instances
            .into_iter()
            .map(|(v, c)| {
                let concept = Concept::new(c).map_err(|_| {
                    self.err(
                        defined[v],
                        DiagnosticCode::MalformedToken,
                        "invalid concept",
                    )
                })?;
                Ok((self.variable(v, defined[v])?, concept))
            })
            .collect::<Result<Vec<_>, ParseDiagnostic>>()?;
        AmrGraph::new(self.variable(root, 0)?, instances, built)
            .map_err(|e| self.err(0, DiagnosticCode::MalformedToken, e.to_string()))
    }

    fn variable(&self, name: &str, offset: usize) -> Result<Variable, ParseDiagnostic> {
        Variable::new(name).map_err(|_| {
            self.err(
                offset,
                DiagnosticCode::MalformedToken,
                format!("invalid variable {name:?}"),
            )
        })
    }
}

/// Parses one PENMAN graph. Line breaks and indentation are insignificant
/// outside quoted strings.
pub fn parse(text: &str) -> Result<AmrGraph, ParseDiagnostic> {
    let tokens = tokenize(text)?;
    Parser {
        text,
        tokens,
        pos: 0,
    }
    .parse()
}

/// Removes every `:wiki` edge, plus any subgraph that only such an edge
/// kept reachable.
pub fn strip_wiki(graph: &AmrGraph) -> AmrGraph {
    graph.retain_edges(|e| e.role.as_str() != ":wiki")
}

/// The single-line depth-first form. Variables are expanded at their first
/// encounter; later mentions are written bare.
pub fn serialize_canonical(graph: &AmrGraph) -> String {
    let mut out = String::new();
    let mut push = |tok: &str| {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(tok);
    };
    let mut expanded = vec![false; graph.variable_count()];
    let open = |var: &Variable, expanded: &mut Vec<bool>, push: &mut dyn FnMut(&str)| {
        expanded[graph.variable_index(var).expect("valid")] = true;
        push("(");
        push(var.as_str());
        push("/");
        push(graph.concept(var).expect("valid").as_str());
    };

    let mut stack: Vec<(&Variable, Vec<&Edge>, usize)> = Vec::new();
    open(graph.root(), &mut expanded, &mut push);
    stack.push((graph.root(), graph.edges_from(graph.root()).collect(), 0));
    while let Some(top) = stack.last_mut() {
        if top.2 == top.1.len() {
            push(")");
            stack.pop();
            continue;
        }
        let edge = top.1[top.2];
        top.2 += 1;
        push(edge.role.as_str());
        match &edge.target {
            Target::Constant(c) => push(&c.to_string()),
            Target::Variable(v) => {
                if expanded[graph.variable_index(v).expect("valid")] {
                    push(v.as_str());
                } else {
                    open(v, &mut expanded, &mut push);
                    stack.push((v, graph.edges_from(v).collect(), 0));
                }
            }
        }
    }
    out
}

impl fmt::Display for AmrGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_canonical(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalOptions {
    pub strip_wiki: bool,
}

impl Default for CanonicalOptions {
    fn default() -> Self {
        CanonicalOptions { strip_wiki: true }
    }
}

/// Parse, drop wiki links, and serialize on one line.
pub fn canonicalize(text: &str) -> Result<String, ParseDiagnostic> {
    canonicalize_with(text, CanonicalOptions::default())
}

pub fn canonicalize_with(text: &str, options: CanonicalOptions) -> Result<String, ParseDiagnostic> {
    let graph = parse(text)?;
    let graph = if options.strip_wiki {
        strip_wiki(&graph)
    } else {
        graph
    };
    Ok(serialize_canonical(&graph))
}

#[cfg(test)]
mod tests {
    use super::*;

    const WANT_GO: &str = r#"(w / want-01
   :ARG0 (b / boy
        :mod (c / country
            :wiki "Hungary"
            :name (n / name
                :op1 "Hungary")))
   :ARG1 (g / go-01
        :ARG0 b))"#;

    const WANT_GO_CANONICAL: &str = r#"( w / want-01 :ARG0 ( b / boy :mod ( c / country :name ( n / name :op1 "Hungary" ) ) ) :ARG1 ( g / go-01 :ARG0 b ) )"#;

    #[test]
    fn parses_want_go() {
        let g = parse(WANT_GO).unwrap();
        assert_eq!(g.root().as_str(), "w");
        assert_eq!(g.variable_count(), 5);
        // ARG0, mod, wiki, name, op1, ARG1 and the reentrant ARG0 of g
        assert_eq!(g.edges().len(), 7);
    }

    #[test]
    fn example_canonical() {
        assert_eq!(canonicalize(WANT_GO).unwrap(), WANT_GO_CANONICAL);
        assert_eq!(canonicalize(WANT_GO_CANONICAL).unwrap(), WANT_GO_CANONICAL);
    }

    #[test]
    fn strip_wiki_removes_one_edge() {
        let g = parse(WANT_GO).unwrap();
        let s = strip_wiki(&g);
        assert_eq!(s.edges().len(), 6);
        assert!(s.edges().iter().all(|e| e.role.as_str() != ":wiki"));
        let plain = parse("(a / answer)").unwrap();
        assert_eq!(strip_wiki(&plain), plain);
    }

    #[test]
    fn strip_wiki_under_two_nodes() {
        let g = parse(
            r#"(a / and :op1 (c / city :wiki "Paris" :name (n / name :op1 "Paris"))
                :op2 (d / city :wiki "Rome" :name (m / name :op1 "Rome")))"#,
        )
        .unwrap();
        let s = strip_wiki(&g);
        let mut before: Vec<String> = g
            .edges()
            .iter()
            .filter(|e| e.role.as_str() != ":wiki")
            .map(|e| format!("{} {} {:?}", e.source, e.role, e.target))
            .collect();
        let mut after: Vec<String> = s
            .edges()
            .iter()
            .map(|e| format!("{} {} {:?}", e.source, e.role, e.target))
            .collect();
        before.sort();
        after.sort();
        assert_eq!(g.edges().len(), 8);
        assert_eq!(before, after);
    }

    #[test]
    fn wiki_subgraph_pruned_only_when_unreachable() {
        let g = parse("(a / x :wiki (w / page) :ARG0 (b / y :mod w))").unwrap();
        let s = strip_wiki(&g);
        // `w` is still reachable through :mod
        assert_eq!(s.variable_count(), 3);
        let g = parse("(a / x :wiki (w / page :mod (z / q)) :ARG0 (b / y))").unwrap();
        let s = strip_wiki(&g);
        assert_eq!(s.variable_count(), 2);
        assert_eq!(serialize_canonical(&s), "( a / x :ARG0 ( b / y ) )");
    }

    #[test]
    fn minimal_and_spacing() {
        assert_eq!(canonicalize("( a / answer )").unwrap(), "( a / answer )");
        assert_eq!(canonicalize("(a/answer)").unwrap(), "( a / answer )");
        let messy = "(w\t/  want-01\n\n :ARG0   (b /boy)\t)";
        assert_eq!(
            canonicalize(messy).unwrap(),
            canonicalize("(w / want-01 :ARG0 (b / boy))").unwrap()
        );
    }

    #[test]
    fn quoted_strings_are_verbatim() {
        let out =
            canonicalize(r#"(c / city :name (n / name :op1 "New York" :op2 "a (b)  c"))"#).unwrap();
        assert!(out.contains(r#""New York""#));
        assert!(out.contains(r#""a (b)  c""#));
    }

    #[test]
    fn bare_tokens() {
        let g =
            parse("(r / run-01 :polarity - :mode interrogative :quant 3 :ARG0 (b / boy) :ARG1 b)")
                .unwrap();
        assert_eq!(g.variable_count(), 2);
        assert_eq!(g.reentrant_variables().len(), 1);
        assert_eq!(
            g.edges()
                .iter()
                .filter(|e| matches!(e.target, Target::Constant(_)))
                .count(),
            3
        );
    }

    #[test]
    fn forward_reference_moves_expansion() {
        let out = canonicalize("(a / x :ARG0 b :ARG1 (b / y))").unwrap();
        assert_eq!(out, "( a / x :ARG0 ( b / y ) :ARG1 b )");
    }

    #[test]
    fn inverse_roles_kept() {
        let text = "( b / boy :ARG0-of ( g / go-01 ) )";
        assert_eq!(canonicalize(text).unwrap(), text);
    }

    fn code(text: &str) -> (DiagnosticCode, usize, usize, usize) {
        let d = parse(text).unwrap_err();
        assert!(d.offset <= text.len());
        (d.code, d.offset, d.line, d.column)
    }

    #[test]
    fn duplicate_variable_points_at_second_definition() {
        let text = "(w / want-01 :ARG0 (w / boy))";
        assert_eq!(code(text), (DiagnosticCode::DuplicateVariable, 20, 1, 21));
    }

    #[test]
    fn diagnostics() {
        assert_eq!(
            code("(a / and :op1 (b / x)").0,
            DiagnosticCode::UnbalancedParen
        );
        let (c, off, line, col) = code("(a / x\n  :ARG0 (b / y)))");
        assert_eq!(
            (c, off, line, col),
            (DiagnosticCode::UnbalancedParen, 23, 2, 17)
        );
        assert_eq!(code("(a)").0, DiagnosticCode::MissingConcept);
        assert_eq!(code("(a / )").0, DiagnosticCode::MissingConcept);
        assert_eq!(code("(a :ARG0 (b / c))").0, DiagnosticCode::MissingConcept);
        assert_eq!(code("(a / x :ARG0 q)").0, DiagnosticCode::UndefinedVariable);
        assert_eq!(code("(a / x : (b / y))").0, DiagnosticCode::EmptyRole);
        assert_eq!(code("(a / x :ARG0)").0, DiagnosticCode::MalformedToken);
        assert_eq!(code("(a / x :op1 \"open").0, DiagnosticCode::MalformedToken);
        assert_eq!(code("# ::id 1\n(a / x)").0, DiagnosticCode::MalformedToken);
        assert_eq!(code("").0, DiagnosticCode::MalformedToken);
        assert_eq!(code("(a / x) (b / y)").0, DiagnosticCode::MalformedToken);
        assert_eq!(code("(a / x y)").0, DiagnosticCode::MalformedToken);
    }

    #[test]
    fn unicode_columns() {
        let text = "(é / fő :ARG0 q)";
        let d = parse(text).unwrap_err();
        assert_eq!(d.code, DiagnosticCode::UndefinedVariable);
        assert_eq!(d.column, 15);
        assert_eq!(&text[d.offset..], "q)");
    }
}
