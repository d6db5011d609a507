//! Smatch: triple overlap between a predicted and a gold AMR under the best
//! variable mapping.
//!
//! Two searches are provided. [`match_exact`] enumerates injective mappings
//! with branch-and-bound and is used for small graphs; [`match_hillclimb`]
//! is the usual greedy local search with restarts.
//!
//! The optimizers work on a decomposed score: per-variable weights for
//! instance and attribute triples (and the root marker), plus one term per
//! group of identical relation triples. [`matched_triples`] recounts from the
//! raw triples instead, so the two can be compared.

use std::collections::{BTreeMap, HashMap};
use std::num::NonZeroUsize;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{triples, AmrGraph, TripleKind, TripleTarget, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmatchError {
    #[error("mapping is not injective: {0} is the image of more than one variable")]
    NotInjective(Variable),
    #[error("exact search limited to {threshold} variables, smaller graph has {size}")]
    TooLargeForExact { threshold: usize, size: usize },
    #[error("{preds} predictions for {golds} gold graphs")]
    LengthMismatch { preds: usize, golds: usize },
}

/// Partial injective map from predicted variables to gold variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VarMapping {
    pairs: BTreeMap<Variable, Variable>,
}

impl VarMapping {
    pub fn new(pairs: impl IntoIterator<Item = (Variable, Variable)>) -> Result<Self, SmatchError> {
        let pairs: BTreeMap<Variable, Variable> = pairs.into_iter().collect();
        let mut images: Vec<&Variable> = pairs.values().collect();
        images.sort();
        if let Some(w) = images.windows(2).find(|w| w[0] == w[1]) {
            return Err(SmatchError::NotInjective(w[0].clone()));
        }
        Ok(VarMapping { pairs })
    }

    pub fn get(&self, pred: &Variable) -> Option<&Variable> {
        self.pairs.get(pred)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &Variable)> + '_ {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmatchScore {
    pub matched: usize,
    pub pred_total: usize,
    pub gold_total: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl SmatchScore {
    pub fn from_counts(matched: usize, pred_total: usize, gold_total: usize) -> Self {
        debug_assert!(matched <= pred_total.min(gold_total));
        let ratio = |n: usize, d: usize| if d == 0 { 0.0 } else { n as f64 / d as f64 };
        let precision = ratio(matched, pred_total);
        let recall = ratio(matched, gold_total);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        SmatchScore {
            matched,
            pred_total,
            gold_total,
            precision,
            recall,
            f1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchConfig {
    pub restarts: NonZeroUsize,
    pub seed: u64,
    pub include_top: bool,
    /// Largest variable count for which [`score_pair`] searches exhaustively.
    pub exact_threshold: usize,
}

impl Default for MatchConfig {
    fn default() -> Self {
        MatchConfig {
            restarts: NonZeroUsize::new(4).expect("non-zero"),
            seed: 0,
            include_top: true,
            exact_threshold: 8,
        }
    }
}

/// Comparable form of a triple target. Constants compare by their text
/// without quotes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Key {
    Concept(String),
    Constant(String),
    Variable(String),
}

fn triple_key(target: &TripleTarget) -> Key {
    match target {
        TripleTarget::Concept(c) => Key::Concept(c.as_str().to_string()),
        TripleTarget::Constant(c) => Key::Constant(c.value().to_string()),
        TripleTarget::Variable(v) => Key::Variable(v.as_str().to_string()),
    }
}

/// Counts predicted triples that, with variables renamed through `mapping`,
/// equal a distinct gold triple. Triples touching an unmapped variable never
/// match.
pub fn matched_triples(
    pred: &AmrGraph,
    gold: &AmrGraph,
    mapping: &VarMapping,
    include_top: bool,
) -> usize {
    let mut pool: HashMap<(TripleKind, String, String, Key), usize> = HashMap::new();
    for t in triples(gold, include_top) {
        *pool
            .entry((
                t.kind,
                t.source.as_str().to_string(),
                t.label,
                triple_key(&t.target),
            ))
            .or_default() += 1;
    }
    let mut matched = 0;
    for t in triples(pred, include_top) {
        let Some(source) = mapping.get(&t.source) else {
            continue;
        };
        let target = match &t.target {
            TripleTarget::Variable(v) => match mapping.get(v) {
                Some(g) => Key::Variable(g.as_str().to_string()),
                None => continue,
            },
            other => triple_key(other),
        };
        if let Some(n) = pool.get_mut(&(t.kind, source.as_str().to_string(), t.label, target)) {
            if *n > 0 {
                *n -= 1;
                matched += 1;
            }
        }
    }
    matched
}

/// Decomposed matching problem between a "left" and a "right" graph. The
/// score is symmetric, so either graph may play the predicted role.
struct Problem {
    n_left: usize,
    n_right: usize,
    /// `unary[l * n_right + r]`: instance, attribute and root-marker triples
    /// matched when `l` maps to `r`.
    unary: Vec<u32>,
    best_unary: Vec<u32>,
    groups: Vec<RelGroup>,
    right_rel: HashMap<(usize, u32, usize), u32>,
    incident: Vec<Vec<usize>>,
}

struct RelGroup {
    from: usize,
    to: usize,
    label: u32,
    count: u32,
}

type UnaryKey = (String, Key);

struct Decomposed {
    unary: Vec<HashMap<UnaryKey, u32>>,
    relations: HashMap<(usize, u32, usize), u32>,
}

fn decompose(graph: &AmrGraph, include_top: bool, labels: &mut HashMap<String, u32>) -> Decomposed {
    let n = graph.variable_count();
    let mut unary = vec![HashMap::new(); n];
    let mut relations = HashMap::new();
    let index = |v: &Variable| {
        graph
            .variable_index(v)
            .expect("triples use defined variables")
    };
    for t in triples(graph, include_top) {
        let s = index(&t.source);
        match (t.kind, &t.target) {
            (TripleKind::Relation, TripleTarget::Variable(v)) => {
                let next = labels.len() as u32;
                let label = *labels.entry(t.label).or_insert(next);
                *relations.entry((s, label, index(v))).or_insert(0) += 1;
            }
            _ => {
                *unary[s]
                    .entry((t.label, triple_key(&t.target)))
                    .or_insert(0) += 1;
            }
        }
    }
    Decomposed { unary, relations }
}

/// Up to two `(left, new image)` reassignments applied together.
type Move = [(usize, Option<usize>); 2];

impl Problem {
    fn new(left: &AmrGraph, right: &AmrGraph, include_top: bool) -> Self {
        let mut labels = HashMap::new();
        let l = decompose(left, include_top, &mut labels);
        let r = decompose(right, include_top, &mut labels);
        let n_left = l.unary.len();
        let n_right = r.unary.len();
        let mut unary = vec![0u32; n_left * n_right];
        for (i, lu) in l.unary.iter().enumerate() {
            for (j, ru) in r.unary.iter().enumerate() {
                unary[i * n_right + j] = lu
                    .iter()
                    .map(|(k, &c)| ru.get(k).map_or(0, |&d| c.min(d)))
                    .sum();
            }
        }
        let best_unary = (0..n_left)
            .map(|i| {
                unary[i * n_right..(i + 1) * n_right]
                    .iter()
                    .copied()
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut groups: Vec<RelGroup> = l
            .relations
            .into_iter()
            .map(|((from, label, to), count)| RelGroup {
                from,
                to,
                label,
                count,
            })
            .collect();
        groups.sort_by_key(|g| (g.from, g.label, g.to));
        let mut incident = vec![Vec::new(); n_left];
        for (gi, g) in groups.iter().enumerate() {
            incident[g.from].push(gi);
            if g.to != g.from {
                incident[g.to].push(gi);
            }
        }
        Problem {
            n_left,
            n_right,
            unary,
            best_unary,
            groups,
            right_rel: r.relations,
            incident,
        }
    }

    fn unary(&self, l: usize, r: Option<usize>) -> u32 {
        r.map_or(0, |r| self.unary[l * self.n_right + r])
    }

    fn group_score(&self, g: &RelGroup, map: &[Option<usize>]) -> u32 {
        match (map[g.from], map[g.to]) {
            (Some(a), Some(b)) => self
                .right_rel
                .get(&(a, g.label, b))
                .map_or(0, |&d| g.count.min(d)),
            _ => 0,
        }
    }

    fn score(&self, map: &[Option<usize>]) -> u32 {
        let unary: u32 = (0..self.n_left).map(|l| self.unary(l, map[l])).sum();
        unary
            + self
                .groups
                .iter()
                .map(|g| self.group_score(g, map))
                .sum::<u32>()
    }

    /// Score change when the variables in `changed` take the values in
    /// `after` (all other variables keep their values in `map`).
    fn delta(
        &self,
        map: &mut [Option<usize>],
        changed: &[(usize, Option<usize>)],
        scratch: &mut Vec<usize>,
    ) -> i64 {
        scratch.clear();
        for &(l, _) in changed {
            scratch.extend_from_slice(&self.incident[l]);
        }
        scratch.sort_unstable();
        scratch.dedup();
        let mut before: i64 = changed
            .iter()
            .map(|&(l, _)| self.unary(l, map[l]) as i64)
            .sum();
        before += scratch
            .iter()
            .map(|&g| self.group_score(&self.groups[g], map) as i64)
            .sum::<i64>();
        let saved: Vec<Option<usize>> = changed.iter().map(|&(l, _)| map[l]).collect();
        for &(l, r) in changed {
            map[l] = r;
        }
        let mut after: i64 = changed.iter().map(|&(l, r)| self.unary(l, r) as i64).sum();
        after += scratch
            .iter()
            .map(|&g| self.group_score(&self.groups[g], map) as i64)
            .sum::<i64>();
        for (&(l, _), old) in changed.iter().zip(saved) {
            map[l] = old;
        }
        after - before
    }

    /// Steepest-ascent climb from `map`. Moves: point one left variable at a
    /// free right variable, or exchange the images of two left variables.
    /// Ties go to the first move in enumeration order.
    fn climb(&self, map: &mut [Option<usize>]) -> u32 {
        let mut owner = vec![None; self.n_right];
        for (l, r) in map.iter().enumerate() {
            if let Some(r) = r {
                owner[*r] = Some(l);
            }
        }
        let mut scratch = Vec::new();
        loop {
            let mut best: Option<(i64, Move, usize)> = None;
            for l in 0..self.n_left {
                for r in (0..self.n_right).filter(|&r| owner[r].is_none()) {
                    let mv = [(l, Some(r)), (l, Some(r))];
                    let d = self.delta(map, &mv[..1], &mut scratch);
                    if d > best.as_ref().map_or(0, |b| b.0) {
                        best = Some((d, mv, 1));
                    }
                }
            }
            for a in 0..self.n_left {
                for b in a + 1..self.n_left {
                    if map[a] == map[b] {
                        continue;
                    }
                    let mv = [(a, map[b]), (b, map[a])];
                    let d = self.delta(map, &mv, &mut scratch);
                    if d > best.as_ref().map_or(0, |b| b.0) {
                        best = Some((d, mv, 2));
                    }
                }
            }
            let Some((_, mv, n)) = best else { break };
            for &(l, _) in &mv[..n] {
                if let Some(r) = map[l] {
                    owner[r] = None;
                }
            }
            for &(l, r) in &mv[..n] {
                map[l] = r;
            }
            for &(l, r) in &mv[..n] {
                if let Some(r) = r {
                    owner[r] = Some(l);
                }
            }
        }
        self.score(map)
    }

    /// Exhaustive branch-and-bound over injective maps of every left
    /// variable. Requires `n_left <= n_right`.
    fn exact(&self) -> (Vec<Option<usize>>, u32) {
        debug_assert!(self.n_left <= self.n_right);
        let mut map = vec![None; self.n_left];
        let mut used = vec![false; self.n_right];
        let mut best = (map.clone(), 0u32);
        let mut found = false;
        self.branch(0, &mut map, &mut used, &mut best, &mut found);
        best
    }

    fn bound(&self, depth: usize, map: &[Option<usize>]) -> u32 {
        let mut total: u32 = (0..depth).map(|l| self.unary(l, map[l])).sum();
        total += self.best_unary[depth..].iter().sum::<u32>();
        for g in &self.groups {
            total += if g.from < depth && g.to < depth {
                self.group_score(g, map)
            } else {
                g.count
            };
        }
        total
    }

    fn branch(
        &self,
        depth: usize,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        best: &mut (Vec<Option<usize>>, u32),
        found: &mut bool,
    ) {
        if *found && self.bound(depth, map) <= best.1 {
            return;
        }
        if depth == self.n_left {
            let s = self.score(map);
            if !*found || s > best.1 {
                *best = (map.clone(), s);
                *found = true;
            }
            return;
        }
        for r in 0..self.n_right {
            if used[r] {
                continue;
            }
            used[r] = true;
            map[depth] = Some(r);
            self.branch(depth + 1, map, used, best, found);
            map[depth] = None;
            used[r] = false;
        }
    }
}

fn to_mapping(pred: &AmrGraph, gold: &AmrGraph, map: &[Option<usize>]) -> VarMapping {
    let pv: Vec<&Variable> = pred.variables().collect();
    let gv: Vec<&Variable> = gold.variables().collect();
    VarMapping {
        pairs: map
            .iter()
            .enumerate()
            .filter_map(|(p, g)| g.map(|g| (pv[p].clone(), gv[g].clone())))
            .collect(),
    }
}

/// Optimal mapping by exhaustive search over the smaller graph's variables.
pub fn match_exact(
    pred: &AmrGraph,
    gold: &AmrGraph,
    config: &MatchConfig,
) -> Result<(VarMapping, usize), SmatchError> {
    let size = pred.variable_count().min(gold.variable_count());
    if size > config.exact_threshold {
        return Err(SmatchError::TooLargeForExact {
            threshold: config.exact_threshold,
            size,
        });
    }
    if pred.variable_count() <= gold.variable_count() {
        let problem = Problem::new(pred, gold, config.include_top);
        let (map, score) = problem.exact();
        Ok((to_mapping(pred, gold, &map), score as usize))
    } else {
        let problem = Problem::new(gold, pred, config.include_top);
        let (gold_to_pred, score) = problem.exact();
        let mut map = vec![None; pred.variable_count()];
        for (g, p) in gold_to_pred.into_iter().enumerate() {
            if let Some(p) = p {
                map[p] = Some(g);
            }
        }
        Ok((to_mapping(pred, gold, &map), score as usize))
    }
}

/// Hill-climbing with restarts. The first climb starts from a greedy
/// concept-matching seed, later ones from random injective maps drawn from
/// `config.seed`.
pub fn match_hillclimb(
    pred: &AmrGraph,
    gold: &AmrGraph,
    config: &MatchConfig,
) -> (VarMapping, usize) {
    let problem = Problem::new(pred, gold, config.include_top);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pred_concepts: Vec<_> = pred.instances().map(|(_, c)| c).collect();
    let gold_concepts: Vec<_> = gold.instances().map(|(_, c)| c).collect();

    let mut best: Option<(Vec<Option<usize>>, u32)> = None;
    for restart in 0..config.restarts.get() {
        let mut map = vec![None; problem.n_left];
        if restart == 0 {
            let mut taken = vec![false; problem.n_right];
            for (p, concept) in pred_concepts.iter().enumerate() {
                if let Some(g) =
                    (0..problem.n_right).find(|&g| !taken[g] && gold_concepts[g] == *concept)
                {
                    taken[g] = true;
                    map[p] = Some(g);
                }
            }
        } else {
            let mut targets: Vec<usize> = (0..problem.n_right).collect();
            targets.shuffle(&mut rng);
            for (slot, g) in map.iter_mut().zip(targets) {
                *slot = Some(g);
            }
            // with more predicted than gold variables, choose which go unmapped
            if problem.n_left > problem.n_right {
                map.shuffle(&mut rng);
            }
        }
        let score = problem.climb(&mut map);
        if best.as_ref().is_none_or(|b| score > b.1) {
            best = Some((map, score));
        }
    }
    let (map, score) = best.expect("at least one restart");
    (to_mapping(pred, gold, &map), score as usize)
}

fn totals(pred: &AmrGraph, gold: &AmrGraph, include_top: bool) -> (usize, usize) {
    let extra = usize::from(include_top);
    (
        pred.variable_count() + pred.edges().len() + extra,
        gold.variable_count() + gold.edges().len() + extra,
    )
}

/// Exact search when both graphs are within `exact_threshold`, hill-climbing
/// otherwise.
pub fn score_pair(pred: &AmrGraph, gold: &AmrGraph, config: &MatchConfig) -> SmatchScore {
    let matched = if pred.variable_count().max(gold.variable_count()) <= config.exact_threshold {
        match_exact(pred, gold, config).expect("within threshold").1
    } else {
        match_hillclimb(pred, gold, config).1
    };
    let (p, g) = totals(pred, gold, config.include_top);
    SmatchScore::from_counts(matched, p, g)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Aggregation {
    /// Sum triple counts over the corpus, then compute P/R/F1 once.
    #[default]
    Micro,
    /// Average the per-pair P/R/F1.
    Macro,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MacroScore {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusScore {
    pub pairs: Vec<SmatchScore>,
    pub micro: SmatchScore,
    #[serde(rename = "macro")]
    pub macro_avg: MacroScore,
}

impl CorpusScore {
    pub fn headline(&self, aggregation: Aggregation) -> (f64, f64, f64) {
        match aggregation {
            Aggregation::Micro => (self.micro.precision, self.micro.recall, self.micro.f1),
            Aggregation::Macro => (
                self.macro_avg.precision,
                self.macro_avg.recall,
                self.macro_avg.f1,
            ),
        }
    }
}

/// Scores aligned predictions against gold graphs. `None` stands for a
/// prediction that failed to parse: it contributes no predicted triples and
/// no matches, but its gold triples still count towards recall.
///
/// Pairs are scored in parallel; pair `i` uses seed `config.seed ^ i`, so
/// the result does not depend on the number of worker threads.
pub fn score_corpus(
    preds: &[Option<&AmrGraph>],
    golds: &[&AmrGraph],
    config: &MatchConfig,
) -> Result<CorpusScore, SmatchError> {
    if preds.len() != golds.len() {
        return Err(SmatchError::LengthMismatch {
            preds: preds.len(),
            golds: golds.len(),
        });
    }
    let pairs: Vec<SmatchScore> = preds
        .par_iter()
        .zip(golds.par_iter())
        .enumerate()
        .map(|(i, (pred, gold))| {
            let config = MatchConfig {
                seed: config.seed ^ i as u64,
                ..*config
            };
            match pred {
                Some(pred) => score_pair(pred, gold, &config),
                None => {
                    let (_, g) = totals(gold, gold, config.include_top);
                    SmatchScore::from_counts(0, 0, g)
                }
            }
        })
        .collect();
    let sum = |f: fn(&SmatchScore) -> usize| pairs.iter().map(f).sum::<usize>();
    let micro = SmatchScore::from_counts(
        sum(|s| s.matched),
        sum(|s| s.pred_total),
        sum(|s| s.gold_total),
    );
    let n = pairs.len().max(1) as f64;
    let mean = |f: fn(&SmatchScore) -> f64| pairs.iter().map(f).sum::<f64>() / n;
    let macro_avg = MacroScore {
        precision: mean(|s| s.precision),
        recall: mean(|s| s.recall),
        f1: mean(|s| s.f1),
    };
    Ok(CorpusScore {
        pairs,
        micro,
        macro_avg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::penman::parse;

    const FIG1: &str = r#"(w / want-01 :ARG0 (b / boy :mod (c / country :name (n / name :op1 "Hungary"))) :ARG1 (g / go-01 :ARG0 b))"#;
    const FIG1_RENAMED: &str = r#"(x0 / want-01 :ARG0 (x1 / boy :mod (x2 / country :name (x3 / name :op1 "Hungary"))) :ARG1 (x4 / go-01 :ARG0 x1))"#;
    // The example graph without w's :ARG1; g stays attached through the inverse role.
    const FIG1_NO_ARG1: &str = r#"(w / want-01 :ARG0 (b / boy :mod (c / country :name (n / name :op1 "Hungary")) :ARG0-of (g / go-01)))"#;

    fn var(s: &str) -> Variable {
        Variable::new(s).unwrap()
    }

    fn identity(g: &AmrGraph) -> VarMapping {
        VarMapping::new(g.variables().map(|v| (v.clone(), v.clone()))).unwrap()
    }

    #[test]
    fn mapping_must_be_injective() {
        let err = VarMapping::new([(var("a"), var("x")), (var("b"), var("x"))]).unwrap_err();
        assert_eq!(err, SmatchError::NotInjective(var("x")));
    }

    #[test]
    fn identity_matches_everything() {
        let g = parse(FIG1).unwrap();
        assert_eq!(matched_triples(&g, &g, &identity(&g), true), 12);
        assert_eq!(matched_triples(&g, &g, &identity(&g), false), 11);
        assert_eq!(matched_triples(&g, &g, &VarMapping::default(), true), 0);
    }

    #[test]
    fn renamed_want_go() {
        let gold = parse(FIG1).unwrap();
        let pred = parse(FIG1_RENAMED).unwrap();
        let m = VarMapping::new(
            ["x0", "x1", "x2", "x3", "x4"]
                .iter()
                .zip(["w", "b", "c", "n", "g"])
                .map(|(p, g)| (var(p), var(g))),
        )
        .unwrap();
        assert_eq!(matched_triples(&pred, &gold, &m, true), 12);
        let cfg = MatchConfig::default();
        assert_eq!(match_exact(&pred, &gold, &cfg).unwrap().1, 12);
        assert_eq!(match_hillclimb(&pred, &gold, &cfg).1, 12);
    }

    #[test]
    fn deleted_arg1() {
        let gold = parse(FIG1).unwrap();
        let pred = parse(FIG1_NO_ARG1).unwrap();
        assert_eq!(pred.triples(true).len(), 11);
        assert_eq!(matched_triples(&pred, &gold, &identity(&pred), true), 11);
        let cfg = MatchConfig::default();
        let (m, n) = match_exact(&pred, &gold, &cfg).unwrap();
        assert_eq!(n, 11);
        assert_eq!(matched_triples(&pred, &gold, &m, true), 11);
        let s = score_pair(&pred, &gold, &cfg);
        assert_eq!((s.matched, s.pred_total, s.gold_total), (11, 11, 12));
        assert_eq!(s.precision, 1.0);
        assert!((s.recall - 11.0 / 12.0).abs() < 1e-12);
        assert!((s.f1 - 22.0 / 23.0).abs() < 1e-12);
    }

    #[test]
    fn boy_vs_girl() {
        let a = parse("( a / boy )").unwrap();
        let b = parse("( b / girl )").unwrap();
        let on = MatchConfig::default();
        let off = MatchConfig {
            include_top: false,
            ..on
        };
        assert_eq!(match_exact(&a, &b, &on).unwrap().1, 1);
        assert_eq!(match_exact(&a, &b, &off).unwrap().1, 0);
        let girl = parse(&FIG1.replace("boy", "girl")).unwrap();
        assert_eq!(
            match_exact(&girl, &parse(FIG1).unwrap(), &on).unwrap().1,
            11
        );
    }

    #[test]
    fn exact_rejects_large_inputs() {
        let g = parse(FIG1).unwrap();
        let cfg = MatchConfig {
            exact_threshold: 4,
            ..MatchConfig::default()
        };
        assert_eq!(
            match_exact(&g, &g, &cfg).unwrap_err(),
            SmatchError::TooLargeForExact {
                threshold: 4,
                size: 5
            }
        );
        // score_pair falls back to hill-climbing
        assert_eq!(score_pair(&g, &g, &cfg).f1, 1.0);
    }

    #[test]
    fn exact_handles_more_pred_than_gold() {
        let gold = parse("(a / and :op1 (b / boy))").unwrap();
        let pred = parse("(x / and :op1 (y / girl) :op2 (z / boy))").unwrap();
        let cfg = MatchConfig::default();
        let (m, n) = match_exact(&pred, &gold, &cfg).unwrap();
        // top, and-instance, boy-instance; op1 target differs
        assert_eq!(n, 3);
        assert_eq!(matched_triples(&pred, &gold, &m, true), 3);
        assert_eq!(match_hillclimb(&pred, &gold, &cfg).1, 3);
    }

    #[test]
    fn self_score_is_perfect() {
        let g = parse(FIG1).unwrap();
        let s = score_pair(&g, &g, &MatchConfig::default());
        assert_eq!((s.precision, s.recall, s.f1), (1.0, 1.0, 1.0));
    }

    #[test]
    fn score_formula_edge_cases() {
        let z = SmatchScore::from_counts(0, 0, 0);
        assert_eq!((z.precision, z.recall, z.f1), (0.0, 0.0, 0.0));
        let s = SmatchScore::from_counts(0, 0, 12);
        assert_eq!(s.f1, 0.0);
    }

    #[test]
    fn corpus_micro_average() {
        let gold = parse(FIG1).unwrap();
        let damaged = parse(FIG1_NO_ARG1).unwrap();
        let cfg = MatchConfig::default();
        let c = score_corpus(&[Some(&gold), Some(&damaged)], &[&gold, &gold], &cfg).unwrap();
        assert_eq!(
            (c.micro.matched, c.micro.pred_total, c.micro.gold_total),
            (23, 23, 24)
        );
        assert!((c.micro.f1 - 46.0 / 47.0).abs() < 1e-12);
        let same = score_corpus(&[Some(&gold), Some(&gold)], &[&gold, &gold], &cfg).unwrap();
        assert_eq!(same.micro.f1, 1.0);
        let failed = score_corpus(&[Some(&gold), None], &[&gold, &gold], &cfg).unwrap();
        assert_eq!(
            (
                failed.micro.matched,
                failed.micro.pred_total,
                failed.micro.gold_total
            ),
            (12, 12, 24)
        );
        assert_eq!(failed.pairs[1].recall, 0.0);
        assert!(matches!(
            score_corpus(&[None], &[&gold, &gold], &cfg),
            Err(SmatchError::LengthMismatch { preds: 1, golds: 2 })
        ));
        let (p, r, f) = failed.headline(Aggregation::Macro);
        assert_eq!((p, r, f), (0.5, 0.5, 0.5));
    }
}
