use std::collections::{BTreeMap, BTreeSet};

use amrkit::corpus::{
    filter_corpus, read_amr_str, sample_corpus, split_corpus, top_node_stats, write_amr_string,
    CorpusEntry, GraphOutput,
};
use amrkit::penman::CanonicalOptions;
use amrkit::synth::{random_graph, silver_corpus, silver_graph, top_node_corpus};
use amrkit::validator::{
    check_and_operands, check_frame_args, sample_lexicon, validate, FrameLexicon, Rule,
    UnknownFramePolicy, ValidationPolicy,
};
use amrkit::{AmrGraph, Target};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ids(entries: &[CorpusEntry]) -> Vec<String> {
    entries.iter().map(|e| e.id.clone()).collect()
}

fn planted(total: usize, defective: usize, seed: u64) -> (Vec<CorpusEntry>, BTreeSet<String>) {
    let corpus = silver_corpus(total, defective, seed);
    (read_amr_str(&corpus.text).unwrap(), corpus.defective_ids)
}

/// `and` nodes with fewer than two `:opN` children, counted from the edges.
fn short_ands(g: &AmrGraph) -> BTreeSet<String> {
    g.instances()
        .filter(|(_, c)| c.as_str() == "and")
        .filter(|(v, _)| {
            let ops = g
                .edges()
                .iter()
                .filter(|e| &e.source == *v)
                .filter(|e| {
                    let r = e.role.as_str();
                    r.len() > 3
                        && r.starts_with(":op")
                        && r[3..].chars().all(|c| c.is_ascii_digit())
                })
                .count();
            ops < 2
        })
        .map(|(v, _)| v.as_str().to_string())
        .collect()
}

/// `and` graphs built by hand with a chosen operand count.
fn and_graph(operands: usize, extra_roles: usize) -> AmrGraph {
    let mut b = AmrGraph::builder("a").instance("a", "and");
    for i in 0..operands {
        let v = format!("x{i}");
        b = b
            .instance(&v, "thing")
            .relation("a", &format!(":op{}", i + 1), &v);
    }
    for i in 0..extra_roles {
        let v = format!("y{i}");
        b = b.instance(&v, "thing").relation("a", ":mod", &v);
    }
    b.build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn and_arity_matches_recount(seed in any::<u64>()) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), 12);
        let flagged: BTreeSet<String> = check_and_operands(&g).into_iter().map(|v| v.node).collect();
        prop_assert_eq!(flagged, short_ands(&g));
    }

    #[test]
    fn and_arity_threshold(operands in 0usize..5, extra in 0usize..3) {
        let g = and_graph(operands, extra);
        prop_assert_eq!(check_and_operands(&g).len(), usize::from(operands < 2));
    }

    #[test]
    fn wider_lexicon_never_adds_violations(seed in any::<u64>(), widen in prop::collection::vec(0usize..6, 1..6)) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), 10);
        let narrow = sample_lexicon();
        let mut wide = sample_lexicon();
        let frames: Vec<String> = g
            .instances()
            .filter(|(_, c)| c.is_frame())
            .map(|(_, c)| c.as_str().to_string())
            .collect();
        for (i, frame) in frames.iter().enumerate() {
            let Some(entry) = wide.get(frame) else { continue };
            let mut roles: Vec<String> = entry.allowed_args.iter().cloned().collect();
            roles.push(format!(":ARG{}", widen[i % widen.len()]));
            wide.insert(frame, roles.iter().map(String::as_str));
        }
        for policy in [UnknownFramePolicy::Ignore, UnknownFramePolicy::Flag] {
            let before: BTreeSet<_> = check_frame_args(&g, &narrow, policy)
                .into_iter()
                .map(|v| (v.rule, v.node, v.detail))
                .collect();
            let after: BTreeSet<_> = check_frame_args(&g, &wide, policy)
                .into_iter()
                .map(|v| (v.rule, v.node, v.detail))
                .collect();
            let before_nodes: BTreeSet<_> = before.iter().map(|(r, n, _)| (*r, n.clone())).collect();
            for (r, n, _) in &after {
                prop_assert!(before_nodes.contains(&(*r, n.clone())));
            }
            prop_assert!(after.len() <= before.len());
        }
    }

    #[test]
    fn filter_partitions_the_corpus(seed in any::<u64>(), total in 1usize..80, bad in 0usize..30) {
        let bad = bad.min(total);
        let (entries, defective) = planted(total, bad, seed);
        let input = ids(&entries);
        let outcome = filter_corpus(entries, &sample_lexicon(), ValidationPolicy::default());
        prop_assert_eq!(outcome.kept_n() + outcome.discarded_n(), total);
        let kept: BTreeSet<String> = outcome.kept.iter().map(|e| e.id.clone()).collect();
        let dropped: BTreeSet<String> = outcome.discarded.iter().map(|(e, _)| e.id.clone()).collect();
        prop_assert!(kept.is_disjoint(&dropped));
        prop_assert_eq!(&dropped, &defective);
        // both sides keep input order
        let mut merged = ids(&outcome.kept);
        merged.extend(dropped.iter().cloned());
        merged.sort();
        let mut sorted_input = input.clone();
        sorted_input.sort();
        prop_assert_eq!(merged, sorted_input);
        let kept_order: Vec<_> = input.iter().filter(|i| kept.contains(*i)).cloned().collect();
        prop_assert_eq!(ids(&outcome.kept), kept_order);
        let report = outcome.report();
        prop_assert_eq!(report.total, total);
        prop_assert_eq!(report.violations_by_rule.values().sum::<usize>() >= bad, true);
    }

    #[test]
    fn split_partitions_the_corpus(seed in any::<u64>(), total in 0usize..60, frac in 0.0f64..=1.0) {
        let (entries, _) = planted(total, 0, seed);
        let test_size = (total as f64 * frac) as usize;
        let (train, test) = split_corpus(entries.clone(), test_size, seed).unwrap();
        prop_assert_eq!(test.len(), test_size);
        prop_assert_eq!(train.len() + test.len(), total);
        let mut all = ids(&train);
        all.extend(ids(&test));
        all.sort();
        prop_assert_eq!(all, ids(&entries));
        let (train2, test2) = split_corpus(entries, test_size, seed).unwrap();
        prop_assert_eq!(ids(&train2), ids(&train));
        prop_assert_eq!(ids(&test2), ids(&test));
    }

    #[test]
    fn samples_are_prefixes(seed in any::<u64>(), total in 1usize..60, a in 0usize..60, b in 0usize..60) {
        let (entries, _) = planted(total, 0, seed);
        let (small, large) = (a.min(b).min(total), a.max(b).min(total));
        let s = sample_corpus(&entries, small, seed).unwrap();
        let l = sample_corpus(&entries, large, seed).unwrap();
        prop_assert_eq!(ids(&s), ids(&l)[..small].to_vec());
        let unique: BTreeSet<String> = ids(&l).into_iter().collect();
        prop_assert_eq!(unique.len(), large);
        prop_assert!(sample_corpus(&entries, total + 1, seed).is_err());
    }

    #[test]
    fn stats_conserve_counts(seed in any::<u64>(), counts in prop::collection::vec(0usize..40, 1..8), bad in 0usize..10) {
        let names = ["and", "say-01", "contrast-01", "person", "possible-01", "cause-01", "state-01", "know-01"];
        let plan: Vec<(&str, usize)> = names.iter().copied().zip(counts.iter().copied()).collect();
        let mut text = top_node_corpus(&plan, seed);
        for i in 0..bad {
            text.push_str(&format!("# ::id broken.{i}\n(x / broken :ARG0 (y / y)\n\n"));
        }
        let entries = read_amr_str(&text).unwrap();
        let table = top_node_stats(&entries, usize::MAX);
        prop_assert_eq!(table.skipped, bad);
        prop_assert_eq!(table.parsed + table.skipped, entries.len());
        prop_assert_eq!(table.rows.iter().map(|r| r.1).sum::<usize>(), table.parsed);
        let got: BTreeMap<&str, usize> = table.rows.iter().map(|(c, n)| (c.as_str(), *n)).collect();
        let want: BTreeMap<&str, usize> = plan.iter().copied().filter(|p| p.1 > 0).collect();
        prop_assert_eq!(got, want);
        prop_assert!(table.rows.windows(2).all(|w| w[0].1 > w[1].1 || (w[0].1 == w[1].1 && w[0].0 < w[1].0)));
        let top3 = top_node_stats(&entries, 3);
        prop_assert_eq!(&top3.rows[..], &table.rows[..table.rows.len().min(3)]);
    }

    #[test]
    fn corpus_text_round_trips(seed in any::<u64>(), total in 1usize..30) {
        let (entries, _) = planted(total, total / 3, seed);
        let text = write_amr_string(&entries, GraphOutput::Verbatim).unwrap();
        let again = read_amr_str(&text).unwrap();
        prop_assert_eq!(ids(&again), ids(&entries));
        for (a, b) in again.iter().zip(&entries) {
            prop_assert_eq!(&a.graph_text, &b.graph_text);
            prop_assert_eq!(&a.snt, &b.snt);
        }
    }
}

#[test]
fn clean_silver_graphs_pass() {
    let lex = sample_lexicon();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let policy = ValidationPolicy {
        unknown_frames: UnknownFramePolicy::Flag,
        ..ValidationPolicy::default()
    };
    for i in 0..500 {
        let g = silver_graph(&mut rng);
        let report = validate(&i.to_string(), &g, &lex, policy);
        assert!(report.passed, "{g}\n{:?}", report.violations);
    }
}

#[test]
fn inverse_arguments_count_for_the_frame() {
    let lex = FrameLexicon::from_str("go-01\tARG0\n", "test").unwrap();
    let g = amrkit::parse("(b / boy :ARG1-of (g / go-01))").unwrap();
    let v = check_frame_args(&g, &lex, UnknownFramePolicy::Ignore);
    assert_eq!(v.len(), 1);
    assert_eq!((v[0].rule, v[0].node.as_str()), (Rule::IllegalArg, "g"));
    let ok = amrkit::parse("(b / boy :ARG0-of (g / go-01))").unwrap();
    assert!(check_frame_args(&ok, &lex, UnknownFramePolicy::Ignore).is_empty());
}

#[test]
fn canonical_output_rewrites_graphs_only() {
    let text = "# ::id a\n# ::snt Hi there.\n(w / want-01\n  :ARG0 (b / boy :wiki -))\n\n";
    let entries = read_amr_str(text).unwrap();
    let out = write_amr_string(
        &entries,
        GraphOutput::Canonical(CanonicalOptions::default()),
    )
    .unwrap();
    assert!(out.contains("# ::id a\n"));
    assert!(out.contains("# ::snt Hi there.\n"));
    assert!(out.contains("( w / want-01 :ARG0 ( b / boy ) )\n"));
    let parsed = &read_amr_str(&out).unwrap()[0];
    match &parsed.parsed().unwrap().edges()[0].target {
        Target::Variable(v) => assert_eq!(v.as_str(), "b"),
        t => panic!("{t:?}"),
    }
}
