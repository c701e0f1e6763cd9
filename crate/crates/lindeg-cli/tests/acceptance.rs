//! Acceptance suite: every headline guarantee of the library, one test
//! per criterion, each at its stated tolerance and time budget. All
//! arithmetic is exact, so every comparison below is exact equality.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use lindeg_core::fan::{
    compile_system, enumerate_prevariety, poset_scan, EnumerationOptions, FanSummary,
};
use lindeg_core::matroid::PlueckerVector;
use lindeg_core::relations::{ld_flag_dressian_member, DegenerationType, PairMode};
use lindeg_core::sets::{subsets, Subset};
use lindeg_core::{corpus, io};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lindeg"))
}

/// Parses the text output of the relations subcommand into a set of
/// relations, each a set of monomial strings.
fn relation_set(stdout: &str) -> BTreeSet<BTreeSet<String>> {
    stdout
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('(') && !l.trim().is_empty())
        .map(|l| l.split(" (+) ").map(str::to_string).collect())
        .collect()
}

fn monomial_set(terms: &[(&str, &str)]) -> BTreeSet<String> {
    terms
        .iter()
        .map(|(a, b)| format!("p_{{{a}}}*p_{{{b}}}"))
        .collect()
}

#[test]
fn criterion_1_relation_golden_files() {
    let start = Instant::now();

    // The four linear degenerate relations of the S = {1} example.
    let out = binary()
        .args(["relations", "--ranks", "1,2", "--set", "{1}", "--n", "4"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let got = relation_set(&String::from_utf8(out.stdout).unwrap());
    let expected: BTreeSet<BTreeSet<String>> = [
        monomial_set(&[("3", "1,2"), ("2", "1,3")]),
        monomial_set(&[("4", "1,2"), ("2", "1,4")]),
        monomial_set(&[("4", "1,3"), ("3", "1,4")]),
        monomial_set(&[("4", "2,3"), ("3", "2,4"), ("2", "3,4")]),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expected, "S={{1}} listing");

    // The four undegenerate incidence relations plus the three-term
    // Grassmann relation.
    let out = binary()
        .args(["relations", "--ranks", "1,2", "--n", "4", "--with-grassmann"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let got = relation_set(&String::from_utf8(out.stdout).unwrap());
    let expected: BTreeSet<BTreeSet<String>> = [
        monomial_set(&[("1", "2,3"), ("2", "1,3"), ("3", "1,2")]),
        monomial_set(&[("4", "1,2"), ("2", "1,4"), ("1", "2,4")]),
        monomial_set(&[("4", "1,3"), ("1", "3,4"), ("3", "1,4")]),
        monomial_set(&[("4", "2,3"), ("2", "3,4"), ("3", "2,4")]),
        monomial_set(&[("1,2", "3,4"), ("1,3", "2,4"), ("1,4", "2,3")]),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expected, "S=∅ listing with Grassmann block");

    assert!(start.elapsed() < Duration::from_secs(1), "budget exceeded");
    println!("[acceptance] criterion 1 (relation golden files): PASS");
}

fn counterexample_vectors() -> (PlueckerVector, PlueckerVector) {
    let q = PlueckerVector::from_dense(4, 1, &[Some(0), Some(0), Some(0), Some(0)]).unwrap();
    let p = PlueckerVector::from_dense(
        4,
        2,
        &[Some(1), Some(1), Some(0), Some(2), Some(0), Some(0)],
    )
    .unwrap();
    (q, p)
}

#[test]
fn criterion_2_counterexample_reproduction() {
    let start = Instant::now();
    let (q, p) = counterexample_vectors();
    let cands = [q, p];

    let fldr = DegenerationType::new(4, vec![1, 2], vec![Subset::empty()]).unwrap();
    assert!(
        ld_flag_dressian_member(&cands, &fldr, PairMode::AllPairs)
            .unwrap()
            .member,
        "((0,0,0,0),(1,1,0,2,0,0)) must lie in FlDr(1,2;4)"
    );

    let lfldr = DegenerationType::new(4, vec![1, 2], vec![Subset::new(vec![1])]).unwrap();
    let report = ld_flag_dressian_member(&cands, &lfldr, PairMode::AllPairs).unwrap();
    assert!(!report.member, "must fall outside LFlDr((1,2),{{1}};4)");
    let first = &report.failures[0].relation;
    let got: BTreeSet<String> = first
        .terms
        .iter()
        .map(|(a, b)| format!("p_{{{}}}*p_{{{}}}", a.label(), b.label()))
        .collect();
    assert_eq!(
        got,
        monomial_set(&[("4", "1,2"), ("2", "1,4")]),
        "first failing relation must be p₄p₁₂ ⊕ p₂p₁₄"
    );

    assert!(start.elapsed() < Duration::from_secs(1), "budget exceeded");
    println!("[acceptance] criterion 2 (counterexample reproduction): PASS");
}

fn run_fan(ranks: Vec<usize>, sets: Vec<Subset>, n: usize) -> FanSummary {
    let dt = DegenerationType::new(n, ranks, sets).unwrap();
    let sys = compile_system(&dt).unwrap();
    enumerate_prevariety(&sys, &EnumerationOptions::default())
        .unwrap()
        .summary
}

/// (name, ranks, degeneration sets, expected f-vector, expected
/// lineality, time budget in seconds)
type FanCase = (&'static str, Vec<usize>, Vec<Subset>, Vec<usize>, usize, u64);

#[test]
fn criterion_3_fan_f_vectors_and_lineality() {
    let cases: Vec<FanCase> = vec![
        ("FlDr(1,2;4)", vec![1, 2], vec![Subset::empty()], vec![1, 10, 15], 3, 30),
        (
            "LFlDr((1,2),{1};4)",
            vec![1, 2],
            vec![Subset::new(vec![1])],
            vec![1, 3],
            4,
            30,
        ),
        (
            "LFlDr((1,2,3),({1},{1});4)",
            vec![1, 2, 3],
            vec![Subset::new(vec![1]), Subset::new(vec![1])],
            vec![1, 3],
            5,
            30,
        ),
        (
            "FlDr((1,2,3);4)",
            vec![1, 2, 3],
            vec![Subset::empty(), Subset::empty()],
            vec![1, 20, 79, 78],
            3,
            600,
        ),
    ];
    for (name, ranks, sets, f_vector, lineality, budget_secs) in cases {
        let start = Instant::now();
        let summary = run_fan(ranks, sets, 4);
        assert_eq!(summary.f_vector, f_vector, "{name} f-vector");
        assert_eq!(summary.lineality_dim, Some(lineality), "{name} lineality");
        assert!(
            start.elapsed() < Duration::from_secs(budget_secs),
            "{name} exceeded its {budget_secs}s budget"
        );
        println!(
            "[acceptance] criterion 3 ({name}): PASS ({} faces, {:?})",
            summary.f_vector.iter().sum::<usize>(),
            start.elapsed()
        );
    }
}

#[test]
fn criterion_4_theorem_a_property_suite() {
    let start = Instant::now();
    let report = corpus::run_theorem_a_suite(5, 1000, 20240 + 4).unwrap();
    assert_eq!(report.cases, 1000);
    assert!(report.passed(), "failures: {:?}", report.failures);
    assert!(start.elapsed() < Duration::from_secs(300), "budget exceeded");
    println!(
        "[acceptance] criterion 4 (theorem A agreement, {}): PASS ({:?})",
        report.name,
        start.elapsed()
    );
}

#[test]
fn criterion_5_projection_proposition_suite() {
    let start = Instant::now();
    let report = corpus::run_projection_suite(5, 200, 20240 + 5).unwrap();
    assert!(report.cases > 0);
    assert!(report.passed(), "failures: {:?}", report.failures);
    assert!(start.elapsed() < Duration::from_secs(300), "budget exceeded");
    println!(
        "[acceptance] criterion 5 (projection proposition, {}): PASS ({:?})",
        report.name,
        start.elapsed()
    );
}

#[test]
fn criterion_6_theorem_b_constructive_suite() {
    let start = Instant::now();
    let report = corpus::run_realization_suite(5, 200, 20240 + 6).unwrap();
    assert_eq!(report.cases, 200);
    assert!(report.passed(), "failures: {:?}", report.failures);
    assert!(start.elapsed() < Duration::from_secs(300), "budget exceeded");
    println!(
        "[acceptance] criterion 6 (constructive realizability, {}): PASS ({:?})",
        report.name,
        start.elapsed()
    );
}

#[test]
fn criterion_7_homogeneity_lemma() {
    // Containment is asserted inside every enumeration run; equality
    // must hold on the four fan instances of criterion 3.
    let instances: Vec<(Vec<usize>, Vec<Subset>)> = vec![
        (vec![1, 2], vec![Subset::empty()]),
        (vec![1, 2], vec![Subset::new(vec![1])]),
        (vec![1, 2, 3], vec![Subset::new(vec![1]), Subset::new(vec![1])]),
        (vec![1, 2, 3], vec![Subset::empty(), Subset::empty()]),
    ];
    for (ranks, sets) in instances {
        let summary = run_fan(ranks.clone(), sets, 4);
        assert!(summary.homogeneity_within_lineality);
        assert!(
            summary.homogeneity_equals_lineality,
            "homogeneity {} vs lineality {:?} for ranks {ranks:?}",
            summary.homogeneity_dim, summary.lineality_dim
        );
    }
    println!("[acceptance] criterion 7 (homogeneity lemma): PASS");
}

#[test]
fn criterion_8_dressian_exchange_oracle() {
    let start = Instant::now();
    let report = corpus::run_exchange_oracle_suite().unwrap();
    assert_eq!(report.cases, 728, "3^6 − 1 valuations with a finite entry");
    assert!(report.passed(), "failures: {:?}", report.failures);
    assert!(start.elapsed() < Duration::from_secs(10), "budget exceeded");
    println!("[acceptance] criterion 8 (Dressian/exchange oracle): PASS");
}

#[test]
fn criterion_9_poset_corollaries() {
    let start = Instant::now();
    // All 2^4 degeneration sets and every cover above each.
    let mut covers = Vec::new();
    for k in 0..=4usize {
        for s in subsets(4, k) {
            for e in (1..=4).filter(|&e| !s.contains(e)) {
                covers.push((s.clone(), s.with(e)));
            }
        }
    }
    assert_eq!(covers.len(), 32);
    let report = poset_scan((1, 2), 4, &covers, 100, 20240 + 9).unwrap();
    for c in &report.covers {
        assert!(c.homogeneity_contained, "homogeneity escape at S={}", c.set);
        assert_eq!(
            c.boundary_transfers, c.boundary_samples,
            "boundary transfer failed along S={} + {}",
            c.set, c.added
        );
    }
    assert!(report.bottom_agrees && report.top_agrees);
    assert!(start.elapsed() < Duration::from_secs(120), "budget exceeded");
    println!(
        "[acceptance] criterion 9 (poset corollaries, 32 covers × 100 samples): PASS ({:?})",
        start.elapsed()
    );
}

#[test]
fn cli_outputs_are_deterministic() {
    // Identical invocations must produce byte-identical JSON.
    let run = || {
        binary()
            .args(["fan", "--ranks", "1,2", "--sets", "{1}", "--n", "4"])
            .output()
            .expect("binary runs")
            .stdout
    };
    assert_eq!(run(), run());

    let realize = || {
        binary()
            .args(["realize", "--ranks", "1,2", "--n", "4", "--seed", "5"])
            .output()
            .expect("binary runs")
            .stdout
    };
    assert_eq!(realize(), realize());
    let _ = io::parse_ranks("1,2").unwrap();
}
