//! Synthetic graphs and corpora with known properties.
//!
//! Used by the property tests and the pipeline checks: random graphs with
//! reentrancy and awkward constants, perturbed copies for scoring, silver
//! corpora with a planted number of defective records, and corpora whose
//! top-node distribution is fixed in advance.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{AmrGraph, Concept, Constant, Edge, GraphError, Role, Target, Variable};
use crate::penman::serialize_canonical;

const CONCEPTS: &[&str] = &[
    "want-01",
    "go-01",
    "boy",
    "girl",
    "and",
    "say-01",
    "name",
    "country",
    "city",
    "contrast-01",
    "possible-01",
    "person",
    "think-01",
    "date-entity",
    "multi-sentence",
    "run-01",
    "walk-01",
    "cause-01",
    "thing",
    "have-concession-91",
];

const RELATION_ROLES: &[&str] = &[
    ":ARG0",
    ":ARG1",
    ":ARG2",
    ":mod",
    ":op1",
    ":op2",
    ":time",
    ":location",
    ":ARG0-of",
    ":ARG1-of",
    ":poss",
    ":name",
    ":consist-of",
    ":domain",
    ":manner",
];

const ATTRIBUTE_ROLES: &[&str] = &[
    ":op1",
    ":polarity",
    ":quant",
    ":mode",
    ":value",
    ":wiki",
    ":year",
];

const SYMBOLS: &[&str] = &["-", "+", "interrogative", "imperative", "expressive"];

const PAYLOAD_PIECES: &[&str] = &[
    "a", "b", "X", "1", " ", "  ", "(", ")", "/", ":", "é", "\\\"", "\\\\", "\t", "-", "New",
    "York",
];

fn variable_name(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    let letter = letters[i % letters.len()] as char;
    match i / letters.len() {
        0 => letter.to_string(),
        n => format!("{letter}{n}"),
    }
}

fn random_constant(rng: &mut impl Rng) -> Constant {
    match rng.gen_range(0..4) {
        0 | 1 => {
            let len = rng.gen_range(0..8);
            let payload: String = (0..len)
                .map(|_| *PAYLOAD_PIECES.choose(rng).expect("non-empty"))
                .collect();
            Constant::quoted(payload).expect("pieces keep quotes escaped")
        }
        2 => Constant::bare(rng.gen_range(-50i32..3000).to_string()).expect("number"),
        _ => Constant::bare(*SYMBOLS.choose(rng).expect("non-empty")).expect("symbol"),
    }
}

/// A random valid graph with `1..=max_vars` variables: a spanning tree plus
/// extra edges (reentrancy, cycles, self loops), inverse roles and
/// constants of every kind. Edge order under each source is random.
pub fn random_graph(rng: &mut impl Rng, max_vars: usize) -> AmrGraph {
    let n = rng.gen_range(1..=max_vars.max(1));
    let mut names: Vec<usize> = (0..n * 3).collect();
    names.shuffle(rng);
    let vars: Vec<Variable> = names[..n]
        .iter()
        .map(|&i| Variable::new(variable_name(i)).expect("valid name"))
        .collect();
    let instances: Vec<(Variable, Concept)> = vars
        .iter()
        .map(|v| {
            let c = CONCEPTS.choose(rng).expect("non-empty");
            (v.clone(), Concept::new(*c).expect("valid concept"))
        })
        .collect();

    let relation = |rng: &mut dyn rand::RngCore, s: usize, t: usize| Edge {
        source: vars[s].clone(),
        role: Role::new(*RELATION_ROLES.choose(rng).expect("non-empty")).expect("valid role"),
        target: Target::Variable(vars[t].clone()),
        order_index: 0,
    };
    let mut edges = Vec::new();
    for child in 1..n {
        let parent = rng.gen_range(0..child);
        edges.push(relation(rng, parent, child));
    }
    for _ in 0..rng.gen_range(0..=n / 2 + 1) {
        if n > 1 || rng.gen_bool(0.3) {
            let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
            edges.push(relation(rng, s, t));
        }
    }
    for _ in 0..rng.gen_range(0..=3) {
        edges.push(Edge {
            source: vars[rng.gen_range(0..n)].clone(),
            role: Role::new(*ATTRIBUTE_ROLES.choose(rng).expect("non-empty")).expect("valid role"),
            target: Target::Constant(random_constant(rng)),
            order_index: 0,
        });
    }
    edges.shuffle(rng);
    for (i, e) in edges.iter_mut().enumerate() {
        e.order_index = i;
    }
    AmrGraph::new(vars[0].clone(), instances, edges).expect("generator builds valid graphs")
}

/// Rebuilds `graph` with every variable renamed through `rename`, which
/// must be injective.
pub fn rename_variables(
    graph: &AmrGraph,
    rename: impl Fn(&Variable) -> Variable,
) -> Result<AmrGraph, GraphError> {
    let instances: Vec<_> = graph
        .instances()
        .map(|(v, c)| (rename(v), c.clone()))
        .collect();
    let edges: Vec<_> = graph
        .edges()
        .iter()
        .map(|e| Edge {
            source: rename(&e.source),
            role: e.role.clone(),
            target: match &e.target {
                Target::Variable(v) => Target::Variable(rename(v)),
                t => t.clone(),
            },
            order_index: e.order_index,
        })
        .collect();
    AmrGraph::new(rename(graph.root()), instances, edges)
}

/// Renames every variable to a fresh shuffled name (`p0`, `p1`, ... in
/// random order).
pub fn shuffle_names(rng: &mut impl Rng, graph: &AmrGraph) -> AmrGraph {
    let mut fresh: Vec<usize> = (0..graph.variable_count()).collect();
    fresh.shuffle(rng);
    let order: Vec<&Variable> = graph.variables().collect();
    rename_variables(graph, |v| {
        let i = order.iter().position(|o| *o == v).expect("known variable");
        Variable::new(format!("p{}", fresh[i])).expect("valid")
    })
    .expect("renaming is a bijection")
}

/// A damaged copy of `graph`: some concepts replaced, some edges dropped or
/// relabelled, some attributes added. Never fails; damage that would
/// disconnect the graph prunes the detached part instead.
pub fn perturb(rng: &mut impl Rng, graph: &AmrGraph) -> AmrGraph {
    let mut instances: Vec<(Variable, Concept)> = graph
        .instances()
        .map(|(v, c)| (v.clone(), c.clone()))
        .collect();
    let mut edges: Vec<Edge> = graph.edges().to_vec();
    for _ in 0..rng.gen_range(1..=3) {
        match rng.gen_range(0..4) {
            0 => {
                let i = rng.gen_range(0..instances.len());
                instances[i].1 =
                    Concept::new(*CONCEPTS.choose(rng).expect("non-empty")).expect("valid");
            }
            1 if !edges.is_empty() => {
                let i = rng.gen_range(0..edges.len());
                edges[i].role =
                    Role::new(*RELATION_ROLES.choose(rng).expect("non-empty")).expect("valid");
                if matches!(edges[i].target, Target::Constant(_)) {
                    edges[i].role =
                        Role::new(*ATTRIBUTE_ROLES.choose(rng).expect("non-empty")).expect("valid");
                }
            }
            2 => {
                let source = instances[rng.gen_range(0..instances.len())].0.clone();
                edges.push(Edge {
                    source,
                    role: Role::new(*ATTRIBUTE_ROLES.choose(rng).expect("non-empty"))
                        .expect("valid"),
                    target: Target::Constant(random_constant(rng)),
                    order_index: usize::MAX,
                });
            }
            _ if !edges.is_empty() => {
                edges.remove(rng.gen_range(0..edges.len()));
            }
            _ => {}
        }
    }
    let root = graph.root().clone();
    let draft = AmrGraph::new(root.clone(), instances.clone(), edges.clone());
    match draft {
        Ok(g) => g,
        Err(_) => {
            // Attach the same edges to a graph that keeps every node, then prune.
            let all = AmrGraph::new(
                root.clone(),
                instances.clone(),
                edges
                    .iter()
                    .cloned()
                    .chain(instances.iter().map(|(v, _)| Edge {
                        source: root.clone(),
                        role: Role::new(":scaffold").expect("valid"),
                        target: Target::Variable(v.clone()),
                        order_index: usize::MAX,
                    })),
            )
            .expect("scaffolded graph is connected");
            all.retain_edges(|e| e.role.as_str() != ":scaffold")
        }
    }
}

/// Frames used for clean silver graphs. Every role listed here is accepted
/// by the bundled sample lexicon.
const SILVER_FRAMES: &[(&str, &[&str])] = &[
    ("say-01", &[":ARG0", ":ARG1", ":ARG2"]),
    ("want-01", &[":ARG0", ":ARG1"]),
    ("go-01", &[":ARG0", ":ARG4"]),
    ("think-01", &[":ARG0", ":ARG1"]),
    ("win-01", &[":ARG0", ":ARG1"]),
    ("announce-01", &[":ARG0", ":ARG1"]),
    ("cause-01", &[":ARG0", ":ARG1"]),
    ("possible-01", &[":ARG1"]),
    ("contrast-01", &[":ARG1", ":ARG2"]),
    ("decide-01", &[":ARG0", ":ARG1"]),
    ("report-01", &[":ARG0", ":ARG1"]),
];

const ENTITIES: &[&str] = &[
    "person",
    "country",
    "city",
    "team",
    "government",
    "company",
    "boy",
    "girl",
    "thing",
    "police",
];

const NAMES: &[&str] = &[
    "Hungary",
    "Budapest",
    "New York",
    "Anna Kovács",
    "Ferencváros",
    "EU",
];

/// Builds clean silver-style graphs node by node.
struct SilverGen<'r, R: Rng> {
    rng: &'r mut R,
    instances: Vec<(Variable, Concept)>,
    edges: Vec<Edge>,
    used: HashSet<String>,
    entities: Vec<Variable>,
}

impl<'r, R: Rng> SilverGen<'r, R> {
    fn new(rng: &'r mut R) -> Self {
        SilverGen {
            rng,
            instances: Vec::new(),
            edges: Vec::new(),
            used: HashSet::new(),
            entities: Vec::new(),
        }
    }

    fn define(&mut self, concept: &str) -> Variable {
        let first = concept
            .chars()
            .next()
            .filter(char::is_ascii_lowercase)
            .unwrap_or('x');
        let mut name = first.to_string();
        let mut n = 1;
        while self.used.contains(&name) {
            n += 1;
            name = format!("{first}{n}");
        }
        self.used.insert(name.clone());
        let var = Variable::new(name).expect("valid");
        self.instances
            .push((var.clone(), Concept::new(concept).expect("valid")));
        var
    }

    fn link(&mut self, source: &Variable, role: &str, target: Target) {
        let order_index = self.edges.len();
        self.edges.push(Edge {
            source: source.clone(),
            role: Role::new(role).expect("valid"),
            target,
            order_index,
        });
    }

    fn entity(&mut self) -> Variable {
        if !self.entities.is_empty() && self.rng.gen_bool(0.15) {
            let i = self.rng.gen_range(0..self.entities.len());
            return self.entities[i].clone();
        }
        let concept = *ENTITIES.choose(self.rng).expect("non-empty");
        let var = self.define(concept);
        if matches!(concept, "person" | "country" | "city" | "team" | "company")
            && self.rng.gen_bool(0.5)
        {
            let name = self.define("name");
            let text = *NAMES.choose(self.rng).expect("non-empty");
            self.link(
                &name,
                ":op1",
                Target::Constant(Constant::quoted(text).expect("valid")),
            );
            self.link(&var, ":name", Target::Variable(name));
        }
        self.entities.push(var.clone());
        var
    }

    fn node(&mut self, depth: usize) -> Variable {
        let roll: f64 = self.rng.gen();
        if depth >= 3 || roll < 0.35 {
            self.entity()
        } else if roll < 0.5 {
            let operands = self.rng.gen_range(2..=3);
            self.and_node(depth, operands)
        } else {
            self.frame(depth)
        }
    }

    fn and_node(&mut self, depth: usize, operands: usize) -> Variable {
        let var = self.define("and");
        for i in 1..=operands {
            let child = self.node(depth + 1);
            self.link(&var, &format!(":op{i}"), Target::Variable(child));
        }
        var
    }

    fn frame(&mut self, depth: usize) -> Variable {
        let &(frame, roles) = SILVER_FRAMES.choose(self.rng).expect("non-empty");
        let var = self.define(frame);
        let mut any = false;
        for role in roles {
            if !any || self.rng.gen_bool(0.6) {
                let child = self.node(depth + 1);
                self.link(&var, role, Target::Variable(child));
                any = true;
            }
        }
        if self.rng.gen_bool(0.1) {
            self.link(
                &var,
                ":polarity",
                Target::Constant(Constant::bare("-").expect("valid")),
            );
        }
        var
    }

    fn finish(self, root: Variable) -> AmrGraph {
        AmrGraph::new(root, self.instances, self.edges).expect("generator builds valid graphs")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    /// An `and` node with a single operand.
    AndArity,
    /// A `want-01` node carrying `:ARG5`.
    IllegalArg,
    /// A graph whose closing parenthesis is missing.
    Unbalanced,
}

/// A clean graph: valid under the bundled sample lexicon, every `and` with
/// at least two operands.
pub fn silver_graph(rng: &mut impl Rng) -> AmrGraph {
    let mut gen = SilverGen::new(rng);
    let root = gen.frame(0);
    gen.finish(root)
}

/// PENMAN text of a graph with `defect` planted.
pub fn defective_text(rng: &mut impl Rng, defect: Defect) -> String {
    let mut gen = SilverGen::new(rng);
    let root = match defect {
        Defect::AndArity => gen.and_node(0, 1),
        Defect::IllegalArg => {
            let want = gen.define("want-01");
            let who = gen.entity();
            gen.link(&want, ":ARG0", Target::Variable(who));
            let what = gen.node(1);
            gen.link(&want, ":ARG5", Target::Variable(what));
            want
        }
        Defect::Unbalanced => gen.frame(0),
    };
    let text = serialize_canonical(&gen.finish(root));
    match defect {
        Defect::Unbalanced => text[..text.len() - 2].to_string(),
        _ => text,
    }
}

#[derive(Debug, Clone)]
pub struct PlantedCorpus {
    /// Corpus file contents.
    pub text: String,
    pub defective_ids: BTreeSet<String>,
}

/// A corpus of `total` records, exactly `defective` of which carry one of
/// the [`Defect`]s (cycled in order), at random positions.
pub fn silver_corpus(total: usize, defective: usize, seed: u64) -> PlantedCorpus {
    assert!(defective <= total, "more defects than records");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slots: Vec<Option<Defect>> = (0..total)
        .map(|i| {
            (i < defective)
                .then(|| [Defect::AndArity, Defect::IllegalArg, Defect::Unbalanced][i % 3])
        })
        .collect();
    slots.shuffle(&mut rng);
    let mut text = String::new();
    let mut defective_ids = BTreeSet::new();
    for (i, slot) in slots.into_iter().enumerate() {
        let id = format!("silver.{i:06}");
        let graph = match slot {
            Some(defect) => {
                defective_ids.insert(id.clone());
                defective_text(&mut rng, defect)
            }
            None => serialize_canonical(&silver_graph(&mut rng)),
        };
        writeln!(
            text,
            "# ::id {id}\n# ::snt synthetic sentence {i}\n{graph}\n"
        )
        .expect("string write");
    }
    PlantedCorpus {
        text,
        defective_ids,
    }
}

/// A corpus where the root concept `c` occurs exactly `n` times for every
/// `(c, n)` in `counts`. Record order is shuffled with `seed`.
pub fn top_node_corpus(counts: &[(&str, usize)], seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tops: Vec<&str> = counts
        .iter()
        .flat_map(|&(c, n)| std::iter::repeat_n(c, n))
        .collect();
    tops.shuffle(&mut rng);
    let mut text = String::new();
    for (i, top) in tops.into_iter().enumerate() {
        let mut gen = SilverGen::new(&mut rng);
        let root = gen.define(top);
        let roles: &[&str] = match top {
            "and" => &[":op1", ":op2"],
            "multi-sentence" => &[":snt1", ":snt2"],
            _ if Concept::new(top).expect("valid").is_frame() => &[":ARG0", ":ARG1"],
            _ => &[":mod"],
        };
        for role in roles {
            let child = gen.node(1);
            gen.link(&root, role, Target::Variable(child));
        }
        let graph = serialize_canonical(&gen.finish(root));
        writeln!(text, "# ::id top.{i:06}\n{graph}\n").expect("string write");
    }
    text
}
