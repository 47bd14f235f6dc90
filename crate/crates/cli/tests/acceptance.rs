//! End-to-end acceptance checks for the whole toolchain, one numbered
//! criterion per test. Each test prints a single `criterion N PASS/FAIL`
//! line (visible with `--nocapture`) before asserting, so a red run still
//! shows exactly which guarantees held.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use pathroid_core::verify::{run_suite, SweepOptions, SweepReport};
use pathroid_core::{
    arrange, closed_form_dstab, depth_of_quotient, depth_profile, is_valid_arrangement, path_ideal,
    ColorCounts, DstabPrediction, Monomial, MonomialIdeal, PartitionSpec,
};

fn report(n: usize, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n} {verdict}: {detail}");
    assert!(ok, "criterion {n}: {detail}");
}

fn opts() -> SweepOptions {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    SweepOptions::new().with_workers(workers)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn suite(name: &str) -> (SweepReport, Duration) {
    let (outcome, elapsed) = timed(|| run_suite(name, &opts()));
    let report = outcome.unwrap_or_else(|e| panic!("suite {name} errored: {e}"));
    (report, elapsed)
}

fn suite_detail(report: &SweepReport, elapsed: Duration) -> String {
    if report.passed() {
        format!(
            "{} instances, 0 failures, {:.2}s",
            report.instances_checked(),
            elapsed.as_secs_f64()
        )
    } else {
        let first = &report.failures()[0];
        format!(
            "{} instances, {} failures, first at `{}`: expected {}, got {}",
            report.instances_checked(),
            report.failures().len(),
            first.instance,
            first.expected,
            first.actual
        )
    }
}

fn multipartite_ideal(sizes: &[usize], t: usize) -> MonomialIdeal {
    let spec = PartitionSpec::new(sizes.to_vec()).unwrap();
    path_ideal(&spec.complete_multipartite(), t).unwrap()
}

#[test]
fn criterion_01_pinned_generator_listing() {
    let exe = env!("CARGO_BIN_EXE_pathroid");
    let (output, elapsed) = timed(|| {
        Command::new(exe)
            .args(["gens", "--partition", "1,2,3", "--t", "4"])
            .output()
            .expect("spawn pathroid")
    });
    let stdout = String::from_utf8(output.stdout).unwrap();
    let got: BTreeSet<&str> = stdout.lines().collect();
    let expected: BTreeSet<&str> = [
        "x1x2x3x4", "x1x2x3x5", "x1x2x3x6", "x1x2x4x5", "x1x2x4x6", "x1x2x5x6", "x1x3x4x5",
        "x1x3x4x6", "x1x3x5x6", "x2x3x4x5", "x2x3x4x6", "x2x3x5x6",
    ]
    .into_iter()
    .collect();
    let ok = output.status.success() && got == expected && elapsed < Duration::from_secs(1);
    report(
        1,
        ok,
        &format!(
            "12 pinned generators for blocks 1,2,3 at t = 4, {:.0} ms",
            elapsed.as_secs_f64() * 1000.0
        ),
    );
}

#[test]
fn criterion_02_path_ideals_of_multipartite_graphs_are_matroidal() {
    let (rep, elapsed) = suite("path-matroidality");
    let ok = rep.passed() && elapsed < Duration::from_secs(60);
    report(2, ok, &suite_detail(&rep, elapsed));
}

#[test]
fn criterion_03_edge_matroidality_characterizes_multipartite_graphs() {
    let (rep, elapsed) = suite("edge-matroidality");
    let ok = rep.passed() && elapsed < Duration::from_secs(120);
    report(3, ok, &suite_detail(&rep, elapsed));
}

#[test]
fn criterion_04_cohen_macaulay_classification_matches_veronese_recognition() {
    let (rep, elapsed) = suite("cohen-macaulay");
    report(4, rep.passed(), &suite_detail(&rep, elapsed));
}

#[test]
fn criterion_05_arrangements_exist_exactly_below_the_majority_threshold() {
    let (rep, elapsed) = suite("arrangement");
    let counts = ColorCounts::new(vec![5, 3, 2, 2]).unwrap();
    let seq = arrange(&counts);
    let direct = match &seq {
        Some(s) => s.len() == 12 && is_valid_arrangement(&counts, s),
        None => false,
    };
    let ok = rep.passed() && direct;
    report(
        5,
        ok,
        &format!(
            "{}; counts 5,3,2,2 arranged over 12 slots: {direct}",
            suite_detail(&rep, elapsed)
        ),
    );
}

#[test]
fn criterion_06_bipartite_depth_of_powers_follows_the_piecewise_linear_law() {
    let start = Instant::now();
    let (rep, elapsed) = suite("bipartite-depth");

    // Two pinned instances checked power by power against the law
    // depth = p + max(0, k(ceil(t/2) - q) + q - 1), with stabilization
    // at ceil((q - 1) / (q - ceil(t/2))).
    let mut pinned_ok = true;
    let mut notes = Vec::new();
    for (p, q, t) in [(2usize, 4usize, 4usize), (1, 3, 3)] {
        let ideal = multipartite_ideal(&[p, q], t);
        let half = t.div_ceil(2);
        let expected_dstab = (q - 1).div_ceil(q - half);
        let law =
            |k: usize| p + (k as i64 * (half as i64 - q as i64) + q as i64 - 1).max(0) as usize;
        let mut depths = Vec::new();
        for k in 1..=expected_dstab + 1 {
            let depth = depth_of_quotient(&ideal.power(k as u64).unwrap()).unwrap();
            depths.push(depth);
            pinned_ok &= depth == law(k);
        }
        let profile = depth_profile(&ideal, expected_dstab + 1).unwrap();
        pinned_ok &= profile.dstab() == Some(expected_dstab);
        notes.push(format!(
            "({p},{q}) t={t}: depths {depths:?}, dstab {expected_dstab}"
        ));
    }

    let ok = rep.passed() && pinned_ok && start.elapsed() < Duration::from_secs(300);
    report(
        6,
        ok,
        &format!("{}; {}", suite_detail(&rep, elapsed), notes.join("; ")),
    );
}

#[test]
fn criterion_07_k222_stabilizes_at_two_with_limit_depth_zero() {
    let spec = PartitionSpec::new(vec![2, 2, 2]).unwrap();
    let predicted = closed_form_dstab(&spec, 3).unwrap();
    let ideal = path_ideal(&spec.complete_multipartite(), 3).unwrap();
    let profile = depth_profile(&ideal, 6).unwrap();
    let ok = predicted == DstabPrediction::Exact { value: 2 }
        && profile.dstab() == Some(2)
        && profile.limit() == 0
        && profile.depths() == [2, 0];
    report(
        7,
        ok,
        &format!(
            "predicted {predicted:?}, measured depths {:?}, limit {}",
            profile.depths(),
            profile.limit()
        ),
    );
}

#[test]
fn criterion_08_small_tripartite_triples_drop_to_depth_zero_at_the_square() {
    let mut ok = true;
    let mut notes = Vec::new();
    for sizes in [[1usize, 1, 3], [1, 2, 2]] {
        let ideal = multipartite_ideal(&sizes, 3);
        let depth1 = depth_of_quotient(&ideal).unwrap();
        let depth2 = depth_of_quotient(&ideal.power(2).unwrap()).unwrap();
        let profile = depth_profile(&ideal, 6).unwrap();
        ok &= depth1 == 2 && depth2 == 0 && profile.dstab() == Some(2);
        notes.push(format!("{sizes:?}: depth {depth1} then {depth2}"));
    }

    // The square of the triple ideal on blocks 1,1,3, divided by the full
    // squarefree product, is the whole maximal ideal.
    let ideal = multipartite_ideal(&[1, 1, 3], 3);
    let square = ideal.power(2).unwrap();
    let product = Monomial::squarefree(&[0, 1, 2, 3, 4], 5).unwrap();
    let divisor = MonomialIdeal::new(5, vec![product]).unwrap();
    let colon = square.colon(&divisor).unwrap();
    let colon_ok = colon == MonomialIdeal::maximal(5);
    ok &= colon_ok;
    notes.push(format!("colon by x1..x5 is maximal: {colon_ok}"));

    report(8, ok, &notes.join("; "));
}

#[test]
fn criterion_09_spread_and_stabilization_laws_hold_across_the_desk() {
    let (rep, elapsed) = suite("dstab-closed-form");
    report(9, rep.passed(), &suite_detail(&rep, elapsed));
}

#[test]
fn criterion_10_fiber_decompositions_form_chains_and_reassemble() {
    let (rep, elapsed) = suite("fiber-chains");
    report(10, rep.passed(), &suite_detail(&rep, elapsed));
}

#[test]
fn criterion_11_reconstruction_from_the_printed_generators() {
    let (rep, elapsed) = suite("reconstruction");
    let ok = rep.passed() && elapsed < Duration::from_secs(60);
    report(11, ok, &suite_detail(&rep, elapsed));
}

#[test]
fn criterion_12_resolution_depth_and_persistence_oracles_agree() {
    let (oracles, t1) = suite("oracles");
    let (persistence, t2) = suite("persistence");
    let ok = oracles.passed() && persistence.passed();
    report(
        12,
        ok,
        &format!(
            "oracles: {}; persistence: {}",
            suite_detail(&oracles, t1),
            suite_detail(&persistence, t2)
        ),
    );
}
