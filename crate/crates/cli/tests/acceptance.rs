//! End-to-end acceptance suite. Each test is one shipped guarantee and
//! prints its own pass/fail line through the harness:
//!
//!  1. augmented complex of the shipped commuting-pair space,
//!  2. reachable complex of the same space,
//!  3. the shipped producers/join net end to end,
//!  4. clique counts of the shipped five-vertex graph,
//!  5. torus homology equals clique counts, exhaustively to five vertices,
//!  6. homology vanishes above the maximum clique size,
//!  7. face identities and boundary-squared-zero on derived complexes,
//!  8. randomized Smith-form verification against elimination oracles,
//!  9. homology consequences for random prefix-closed languages,
//! 10. byte-identical reports and alphabet-order invariance.

mod common;

use std::path::PathBuf;
use std::process::Command;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use trace_homology::petri::{CeNet, EventDef};
use trace_homology::trace::TraceMonoid;
use trace_homology::{
    chain_complex, smith_normal_form, state_complex_augmented, state_complex_reachable, torus, Int,
    IntChainComplex,
};
use trace_homology_cli::report::AnalysisReport;

fn data(file: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(file);
    path.to_str().unwrap().to_string()
}

fn run_cli(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_trace-homology"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        out.status.code().unwrap_or(-1),
    )
}

fn report_for(args: &[&str]) -> AnalysisReport {
    let mut with_json: Vec<&str> = args.to_vec();
    with_json.push("--json");
    let (stdout, stderr, code) = run_cli(&with_json);
    assert_eq!(code, 0, "CLI failed: {stderr}");
    AnalysisReport::from_json(&stdout).expect("report parses")
}

fn betti_sequence(report: &AnalysisReport) -> Vec<usize> {
    report
        .homology
        .iter()
        .map(|h| {
            assert!(h.torsion.is_empty(), "unexpected torsion {:?}", h.torsion);
            h.betti
        })
        .collect()
}

#[test]
fn criterion_1_augmented_commuting_pair_example() {
    let report = report_for(&[
        "statespace",
        &data("statespace-commuting-pair.json"),
        "--augmented",
    ]);
    assert_eq!(report.cells, vec![3, 6, 3]);
    assert_eq!(betti_sequence(&report), vec![1, 2, 1]);

    // Degrees above the top are the zero group.
    let space = trace_homology_cli::input::load_state_space(std::path::Path::new(&data(
        "statespace-commuting-pair.json",
    )))
    .unwrap();
    let complex = state_complex_augmented(&space.augment().unwrap());
    let chain: IntChainComplex = chain_complex::<Int>(&complex);
    for n in 3..8 {
        assert!(chain.homology(n).is_zero());
    }
}

#[test]
fn criterion_2_reachable_commuting_pair_example() {
    let report = report_for(&["statespace", &data("statespace-commuting-pair.json")]);
    assert_eq!(report.cells, vec![2, 3, 1]);
    assert_eq!(betti_sequence(&report), vec![1, 1, 0]);

    let space = trace_homology_cli::input::load_state_space(std::path::Path::new(&data(
        "statespace-commuting-pair.json",
    )))
    .unwrap();
    let chain: IntChainComplex = chain_complex::<Int>(&state_complex_reachable(&space));
    for n in 2..8 {
        assert!(chain.homology(n).is_zero());
    }
}

#[test]
fn criterion_3_net_example_end_to_end() {
    let report = report_for(&["petri", &data("net-producers-join.json"), "--dump-matrices"]);
    assert!(report
        .diagnostics
        .iter()
        .any(|d| d == "derived independence: {a,b}"));
    assert!(report
        .diagnostics
        .iter()
        .any(|d| d == "markings: 4 reachable from the initial one"));
    assert_eq!(report.cells, vec![4, 5, 1]);
    assert_eq!(betti_sequence(&report), vec![1, 1, 0]);

    let dumps = report.matrices.as_ref().expect("matrices requested");
    let d2 = dumps.iter().find(|d| d.degree == 2).expect("d_2 present");
    assert_eq!(
        d2.row_basis,
        vec!["({},a)", "({},b)", "({p},b)", "({q},a)", "({p,q},c)"]
    );
    assert_eq!(d2.col_basis, vec!["({},a,b)"]);
    // The printed column follows the firing rule: (-1, +1, -1, +1, 0).
    assert_eq!(
        d2.entries,
        vec![
            (0, 0, "-1".to_string()),
            (1, 0, "1".to_string()),
            (2, 0, "-1".to_string()),
            (3, 0, "1".to_string()),
        ]
    );
}

#[test]
fn criterion_4_clique_counts_of_five_vertex_graph() {
    let report = report_for(&["torus", &data("graph-triangle-tail.json")]);
    assert_eq!(report.p, vec![1, 5, 4, 1]);
    assert_eq!(report.cells, vec![1, 5, 4, 1]);
}

#[test]
fn criterion_5_torus_homology_equals_clique_counts_exhaustively() {
    let mut cases = 0usize;
    for vertex_count in 0..=5usize {
        let names = gen_names(vertex_count);
        let all_edges: Vec<(usize, usize)> = (0..vertex_count)
            .flat_map(|i| (i + 1..vertex_count).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..(1 << all_edges.len()) {
            let pairs: Vec<(String, String)> = all_edges
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
                .collect();
            let m = TraceMonoid::from_names(&names, &pairs).unwrap();
            let t = torus(&m);
            assert!(t.validate().is_valid());
            let chain: IntChainComplex = chain_complex::<Int>(&t);
            assert!(chain.boundary_squares_to_zero());
            let p = brute_clique_counts(&m);
            let h = chain.homology_all();
            assert_eq!(h.len(), p.len());
            for (n, group) in h.iter().enumerate() {
                assert_eq!(group.betti, p[n], "degree {n} of edge mask {mask:b}");
                assert!(group.torsion.is_empty());
            }
            cases += 1;
        }
    }
    assert!(cases >= 200, "only {cases} cases covered");
}

#[test]
fn criterion_6_homology_vanishes_above_max_clique_size() {
    let mut rng = StdRng::seed_from_u64(106);
    let mut probe_hits = 0usize;
    for round in 0..200 {
        let m = random_monoid(&mut rng, 5, 0.5);
        let space = random_valid_space(&mut rng, &m, 16, 0.55);
        let top = m.cliques().max_degree();
        let aug = state_complex_augmented(&space.augment().unwrap());
        let chain: IntChainComplex = chain_complex::<Int>(&aug);
        let h = chain.homology_all();
        for k in top + 1..top + 4 {
            assert_eq!(chain.rank(k), 0, "cells exist above the clique bound");
            assert!(chain.homology(k).is_zero(), "round {round}, degree {k}");
        }
        // Freeness probe for degree one, logged but not assumed.
        if let Some(h1) = h.get(1) {
            if !h1.torsion.is_empty() {
                probe_hits += 1;
                eprintln!("TORSION IN H_1 of an augmented state complex (round {round}): {h1}");
                eprintln!("reproducer: {space:?}");
            }
        }
    }
    if probe_hits > 0 {
        eprintln!("degree-one torsion probe: {probe_hits} hits logged above");
    }
}

fn random_net(rng: &mut StdRng, max_conditions: usize, max_events: usize) -> CeNet {
    let b = rng.random_range(1..=max_conditions);
    let e = rng.random_range(1..=max_events);
    let conditions: Vec<String> = (0..b).map(|i| format!("c{i}")).collect();
    let events: Vec<EventDef> = gen_names(e)
        .into_iter()
        .map(|name| {
            let draw = |rng: &mut StdRng| -> Vec<String> {
                conditions
                    .iter()
                    .filter(|_| rng.random_bool(0.3))
                    .cloned()
                    .collect()
            };
            EventDef {
                name,
                pre: draw(rng),
                post: draw(rng),
            }
        })
        .collect();
    let initial: Vec<String> = conditions
        .iter()
        .filter(|_| rng.random_bool(0.4))
        .cloned()
        .collect();
    CeNet::new(&conditions, &events, &initial).unwrap()
}

#[test]
fn criterion_7_face_identities_and_boundary_squared_zero() {
    // The shipped reference inputs.
    let space = trace_homology_cli::input::load_state_space(std::path::Path::new(&data(
        "statespace-commuting-pair.json",
    )))
    .unwrap();
    let net_space =
        trace_homology_cli::input::load_net(std::path::Path::new(&data("net-producers-join.json")))
            .unwrap()
            .to_state_space(true);
    let graph = trace_homology_cli::input::load_graph(&data("graph-triangle-tail.json")).unwrap();
    let mut complexes = vec![
        state_complex_augmented(&space.augment().unwrap()),
        state_complex_reachable(&space),
        state_complex_reachable(&net_space),
        state_complex_augmented(&net_space.augment().unwrap()),
        torus(&graph),
    ];

    // Plus 200 random net-derived spaces.
    let mut rng = StdRng::seed_from_u64(107);
    for _ in 0..200 {
        let net = random_net(&mut rng, 8, 5);
        let derived = net.to_state_space(true);
        assert!(derived.validate_action().is_valid());
        complexes.push(state_complex_reachable(&derived));
        complexes.push(state_complex_augmented(&derived.augment().unwrap()));
    }

    for (i, complex) in complexes.iter().enumerate() {
        assert!(complex.validate().is_valid(), "complex {i}");
        let chain: IntChainComplex = chain_complex::<Int>(complex);
        assert!(chain.boundary_squares_to_zero(), "complex {i}");
    }
}

#[test]
fn criterion_8_smith_form_randomized_verification() {
    // Frozen reference value first.
    let fixed = trace_homology::IntegerMatrix::<Int>::from_dense(&[
        vec![Int::from(2), Int::from(4)],
        vec![Int::from(6), Int::from(8)],
    ]);
    let snf = smith_normal_form(&fixed, false);
    assert_eq!(snf.diagonal, vec![Int::from(2), Int::from(4)]);

    let mut rng = StdRng::seed_from_u64(108);
    for round in 0..1000 {
        let a = random_matrix(&mut rng, 12, 12, 0.45);
        let snf = smith_normal_form(&a, true);
        assert_eq!(snf.rank, bareiss_rank(&a), "round {round}: rank oracle");
        assert_eq!(snf.diagonal.len(), snf.rank);
        for d in &snf.diagonal {
            assert!(*d > Int::from(0));
        }
        for pair in snf.diagonal.windows(2) {
            assert!(
                (&pair[1] % &pair[0]).is_zero(),
                "round {round}: divisibility {:?}",
                snf.diagonal
            );
        }
        let t = snf.transforms.as_ref().unwrap();
        assert!(is_unimodular(&t.left), "round {round}: left transform");
        assert!(is_unimodular(&t.right), "round {round}: right transform");
        assert_eq!(
            t.left.mul(&a).mul(&t.right),
            snf.diagonal_matrix(a.rows(), a.cols()),
            "round {round}: product"
        );
    }
}

fn language_homology(l: &trace_homology::TraceLanguage) -> Vec<trace_homology::IntHomologyGroup> {
    let space = l.to_state_space().unwrap();
    let aug = space.augment().unwrap();
    let chain: IntChainComplex = chain_complex::<Int>(&state_complex_augmented(&aug));
    chain.homology_all()
}

#[test]
fn criterion_9_language_homology_consequences() {
    let mut rng = StdRng::seed_from_u64(109);
    let mut runs = 0usize;

    // (a) Fully independent alphabets: degree n >= 1 homology is free of
    // rank p_n.
    for _ in 0..34 {
        let n = rng.random_range(1..=3usize);
        let names = gen_names(n);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
        let m = TraceMonoid::from_names(&names, &pairs).unwrap();
        let lang = random_language(&mut rng, &m, 64, 4, 4);
        let p = m.cliques().counts();
        let h = language_homology(&lang);
        for (deg, group) in h.iter().enumerate().skip(1) {
            assert_eq!(
                group.betti,
                p.get(deg).copied().unwrap_or(0),
                "degree {deg}"
            );
            assert!(group.torsion.is_empty(), "torsion in degree {deg}: {group}");
        }
        runs += 1;
    }

    // (b) Free alphabets: homology vanishes in degrees >= 2.
    for _ in 0..33 {
        let n = rng.random_range(1..=3usize);
        let m = TraceMonoid::from_names(&gen_names(n), &[] as &[(&str, &str)]).unwrap();
        let lang = random_language(&mut rng, &m, 64, 4, 4);
        let h = language_homology(&lang);
        for (deg, group) in h.iter().enumerate().skip(2) {
            assert!(group.is_zero(), "degree {deg} is {group}");
        }
        if let Some(h1) = h.get(1) {
            assert!(h1.torsion.is_empty(), "torsion in degree 1: {h1}");
        }
        runs += 1;
    }

    // (c) Mixed alphabets: degree-one homology of a prefix-closed
    // language is torsion free in every run.
    for round in 0..33 {
        let m = random_monoid(&mut rng, 3, 0.5);
        let lang = random_language(&mut rng, &m, 64, 4, 4);
        let h = language_homology(&lang);
        if let Some(h1) = h.get(1) {
            assert!(
                h1.torsion.is_empty(),
                "round {round}: torsion {h1}; reproducer: language {:?} over {:?} with pairs {:?}",
                lang.members()
                    .iter()
                    .map(|t| lang.monoid().display_trace(t))
                    .collect::<Vec<_>>(),
                lang.monoid().alphabet().names(),
                lang.monoid().independence().pairs().collect::<Vec<_>>()
            );
        }
        runs += 1;
    }
    assert!(runs >= 100);
}

#[test]
fn criterion_10_deterministic_reports_and_order_invariance() {
    // Byte-identical reruns on every shipped input, text and JSON.
    let runs: Vec<Vec<String>> = vec![
        vec!["statespace".into(), data("statespace-commuting-pair.json")],
        vec![
            "statespace".into(),
            data("statespace-commuting-pair.json"),
            "--augmented".into(),
            "--dump-matrices".into(),
        ],
        vec![
            "statespace".into(),
            data("statespace-diamond.json"),
            "--initial".into(),
            "s0".into(),
        ],
        vec![
            "petri".into(),
            data("net-producers-join.json"),
            "--dump-matrices".into(),
        ],
        vec![
            "petri".into(),
            data("net-producers-join.json"),
            "--all-markings".into(),
            "--augmented".into(),
        ],
        vec!["tracelang".into(), data("lang-square.json")],
        vec!["tracelang".into(), data("lang-unit.json")],
        vec!["torus".into(), data("graph-triangle-tail.json")],
    ];
    for args in &runs {
        for json in [false, true] {
            let mut argv: Vec<&str> = args.iter().map(String::as_str).collect();
            if json {
                argv.push("--json");
            }
            let (first, _, code1) = run_cli(&argv);
            let (second, _, code2) = run_cli(&argv);
            assert_eq!((code1, code2), (0, 0), "run failed: {argv:?}");
            assert_eq!(first, second, "non-deterministic output for {argv:?}");
            if json {
                // Parsing and re-serializing reproduces the bytes.
                let parsed = AnalysisReport::from_json(&first).unwrap();
                assert_eq!(parsed.to_json(), first, "round trip differs for {argv:?}");
            }
        }
    }

    // Alphabet-order invariance of per-degree homology.
    let mut rng = StdRng::seed_from_u64(110);
    for round in 0..50 {
        let m = random_monoid(&mut rng, 4, 0.6);
        let space = random_valid_space(&mut rng, &m, 7, 0.55);

        let n = m.alphabet().len();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let names: Vec<String> = perm
            .iter()
            .map(|&i| m.alphabet().names()[i].clone())
            .collect();
        let pairs: Vec<(String, String)> = m
            .independence()
            .pairs()
            .map(|(a, b)| {
                (
                    m.alphabet().name(a).to_string(),
                    m.alphabet().name(b).to_string(),
                )
            })
            .collect();
        let permuted_monoid = TraceMonoid::from_names(&names, &pairs).unwrap();
        let mut triples = Vec::new();
        for s in 0..space.state_count() {
            for g in m.alphabet().generators() {
                if let Some(t) = space.act_gen(s, g) {
                    triples.push((
                        space.state_name(s).to_string(),
                        m.alphabet().name(g).to_string(),
                        space.state_name(t).to_string(),
                    ));
                }
            }
        }
        let shuffled =
            trace_homology::StateSpace::new(permuted_monoid, space.state_names(), &triples, None)
                .unwrap();

        let h1: IntChainComplex = chain_complex::<Int>(&state_complex_reachable(&space));
        let h2: IntChainComplex = chain_complex::<Int>(&state_complex_reachable(&shuffled));
        assert_eq!(
            h1.homology_all(),
            h2.homology_all(),
            "round {round}: reachable homology changed under alphabet permutation"
        );

        let a1: IntChainComplex =
            chain_complex::<Int>(&state_complex_augmented(&space.augment().unwrap()));
        let a2: IntChainComplex =
            chain_complex::<Int>(&state_complex_augmented(&shuffled.augment().unwrap()));
        assert_eq!(
            a1.homology_all(),
            a2.homology_all(),
            "round {round}: augmented homology changed under alphabet permutation"
        );
    }
}
