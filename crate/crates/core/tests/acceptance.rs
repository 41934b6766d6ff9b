//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use affinv_core::atoms::{alpha_max, alpha_min, atom_poset, atoms_bruteforce, cycle_removal, rank_a};
use affinv_core::bruhat_inv::tau;
use affinv_core::genfunc::count_nhat;
use affinv_core::involution::{involutions_by_hat, standardize};
use affinv_core::verify::{self, CheckReport};
use affinv_core::weighted::{alpha_left, alpha_right, WeightedInvolution};
use affinv_core::{AffineInvolution, AffinePermutation};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: Vec<CheckReport>, started: Instant, budget: Duration) -> Self {
        let checked: u64 = reports.iter().map(|r| r.checked).sum();
        let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
        let elapsed = started.elapsed();
        let mut detail = format!("{checked} checks in {elapsed:.2?}");
        for r in &failed {
            detail.push_str(&format!("; {}", r.summary()));
        }
        if elapsed > budget {
            detail.push_str(&format!("; over the {budget:?} budget"));
        }
        Outcome { passed: failed.is_empty() && elapsed <= budget, detail }
    }
}

fn inv(n: usize, cycles: &[(i64, i64)]) -> AffineInvolution {
    AffineInvolution::from_cycles(n, cycles).unwrap()
}

fn windows(ws: &[AffinePermutation]) -> BTreeSet<Vec<i64>> {
    ws.iter().map(|w| w.window().to_vec()).collect()
}

fn counting_identity() -> Outcome {
    let t = Instant::now();
    let reports = (2..=5).map(|n| verify::verify_counts(n, 10)).collect();
    Outcome::from_reports(reports, t, Duration::from_secs(60))
}

fn sequence_fixtures() -> Outcome {
    let t = Instant::now();
    let diag = [0u64, 2, 3, 10, 25, 71, 196, 554, 1569];
    let double = [0u64, 2, 3, 18, 50, 215, 735, 2898];
    let mut r = CheckReport::new("fixtures");
    for (k, &want) in diag.iter().enumerate() {
        let n = k + 1;
        r.record(count_nhat(n, n as u64) == want, || format!("N̂_{n}({n}) = {}", count_nhat(n, n as u64)));
    }
    for (k, &want) in double.iter().enumerate() {
        let n = k + 1;
        let m = 2 * n as u64;
        r.record(count_nhat(n, m) == want, || format!("N̂_{n}({m}) = {}", count_nhat(n, m)));
    }
    // Enumeration agrees with the fixtures where it is cheap.
    for n in 1..=6usize {
        let by = involutions_by_hat(n, 2 * n as u64);
        let count = |h: u64| by.get(&h).map_or(0, |v| v.len() as u64);
        r.record(count(n as u64) == diag[n - 1], || format!("enumerated N̂_{n}({n}) = {}", count(n as u64)));
        r.record(count(2 * n as u64) == double[n - 1], || {
            format!("enumerated N̂_{n}({}) = {}", 2 * n, count(2 * n as u64))
        });
    }
    Outcome::from_reports(vec![r], t, Duration::MAX)
}

fn bijection_round_trip() -> Outcome {
    let t = Instant::now();
    let reports = (1..=5).map(|n| verify::verify_bijection(n, 7, 5, 0x5eed).unwrap()).collect();
    Outcome::from_reports(reports, t, Duration::from_secs(120))
}

fn worked_examples() -> Outcome {
    let t = Instant::now();
    let mut r = CheckReport::new("worked examples");
    let z = inv(4, &[(1, 8), (2, 7)]);
    let unweighted = WeightedInvolution::unweighted(z.clone());
    let lr = unweighted.lambda_right().unwrap();
    let ll = unweighted.lambda_left().unwrap();
    r.record(lr.edges() == vec![(1, 2), (3, 4)], || format!("λ_R = {lr}"));
    r.record(ll.edges() == vec![(1, 4), (3, 2)], || format!("λ_L = {ll}"));
    r.record(alpha_right(&z).window() == [3, 5, 2, 0], || format!("α_R = {}", alpha_right(&z)));
    r.record(alpha_left(&z).window() == [5, 3, 0, 2], || format!("α_L = {}", alpha_left(&z)));
    r.record(alpha_min(&z).window() == [4, 6, 1, -1], || format!("α_min = {}", alpha_min(&z)));
    r.record(alpha_max(&z).window() == [6, 4, -1, 1], || format!("α_max = {}", alpha_max(&z)));

    let thetas = [
        WeightedInvolution::new(inv(5, &[(1, 2), (3, 10)]), &[(1, 2, 2), (3, 10, 3)]).unwrap(),
        WeightedInvolution::new(inv(5, &[(0, 2), (3, 11)]), &[(3, 11, 2), (5, 7, 2)]).unwrap(),
        WeightedInvolution::new(inv(5, &[(0, 3), (2, 11)]), &[(2, 11, 2), (5, 8, 1)]).unwrap(),
    ];
    let target = inv(5, &[(1, 13), (5, 9)]);
    for th in &thetas {
        let w = th.omega_right().0;
        r.record(w == target, || format!("ω_R({th}) = {w}"));
    }
    r.record(thetas[0].pi_right(5) == thetas[1], || "θ₁π₅ ≠ θ₂".into());
    r.record(thetas[1].pi_right(2) == thetas[2], || "θ₂π₂ ≠ θ₃".into());

    let t05 = AffineInvolution::new(AffinePermutation::from_exact_window(4, vec![-4, 2, 3, 9]).unwrap()).unwrap();
    let got = windows(&atom_poset(&t05).unwrap().atoms);
    let want: BTreeSet<Vec<i64>> = [[1, 2, 3, 4], [2, 1, 3, 4], [3, 2, 1, 4]]
        .iter()
        .map(|w| AffinePermutation::from_word(4, w).unwrap().window().to_vec())
        .collect();
    r.record(got == want, || format!("A(t_(0,5)) = {got:?}"));

    let w0 = AffineInvolution::new(AffinePermutation::from_exact_window(4, vec![4, 3, 2, 1]).unwrap()).unwrap();
    let got = windows(&atom_poset(&w0).unwrap().atoms);
    let want: BTreeSet<Vec<i64>> = [vec![4, 2, 1, 3], vec![3, 4, 1, 2], vec![2, 4, 3, 1]].into_iter().collect();
    r.record(got == want, || format!("A(4321) = {got:?}"));

    let y = inv(8, &[(1, 3), (2, 12), (6, 8)]);
    let s = standardize(y.perm(), &[2, 4, 6, 7, 8]).unwrap();
    r.record(&s == inv(5, &[(1, 7), (3, 5)]).perm(), || format!("standardisation gives {s}"));

    let y = inv(7, &[(1, 3), (5, 7)]);
    r.record(tau(&y, 1, 4).unwrap() == inv(7, &[(1, 4), (5, 7)]), || "τ_(1,4) example".into());
    r.record(tau(&y, 1, 14).unwrap() == inv(7, &[(1, 14)]), || "τ_(1,14) example".into());

    let w = AffinePermutation::from_window(4, &[3, 4, -3, -2]).unwrap();
    let cr = cycle_removal(&w).unwrap();
    r.record(cr.sorted_pairs() == vec![(1, 8), (2, 7)] && cr.fixed.is_empty(), || format!("cycle removal: {cr:?}"));

    let z8 = inv(8, &[(1, 12), (7, 10), (3, 6)]);
    let labels: Vec<(i64, i64, i64)> = z8.winding_edges().iter().map(|e| (e.source, e.target, e.label)).collect();
    r.record(z8.length() == 25 && z8.absolute_length() == 3, || {
        format!("ℓ = {}, ℓ′ = {}", z8.length(), z8.absolute_length())
    });
    r.record(labels == vec![(1, 4, 1), (2, 7, -1), (3, 6, 0)], || format!("winding labels {labels:?}"));
    Outcome::from_reports(vec![r], t, Duration::MAX)
}

fn atom_poset_structure() -> Outcome {
    let t = Instant::now();
    let mut r = CheckReport::new("six-cycle poset");
    let z = inv(6, &[(1, 12), (2, 11), (3, 4)]);
    let p = atom_poset(&z).unwrap();
    r.record(p.len() == 29, || format!("{} atoms", p.len()));
    r.record(p.level_sizes() == vec![1, 2, 3, 3, 4, 3, 4, 3, 3, 2, 1], || format!("levels {:?}", p.level_sizes()));
    let bottom = p.bottom().map(|b| p.atoms[b].window().to_vec());
    let top = p.top().map(|b| p.atoms[b].window().to_vec());
    r.record(bottom == Some(vec![4, 6, 8, 7, -1, -3]), || format!("bottom {bottom:?}"));
    r.record(top == Some(vec![10, 8, 0, -1, 1, 3]), || format!("top {top:?}"));
    r.record(p.extremes_match(), || "extremes are not α_min, α_max".into());
    let top_rank = rank_a(&alpha_max(&z), &z).unwrap();
    r.record(top_rank == 10, || format!("rank_A(α_max) = {top_rank}"));
    let brute = windows(&atoms_bruteforce(&z).unwrap());
    r.record(brute == windows(&p.atoms), || "poset differs from brute force".into());
    let mut reports = vec![r];
    for n in 1..=4 {
        reports.push(verify::verify_atoms(n, 5, 0x5eed).unwrap());
    }
    Outcome::from_reports(reports, t, Duration::from_secs(300))
}

fn membership_criteria() -> Outcome {
    let t = Instant::now();
    let reports = (1..=4).map(|n| verify::verify_criteria(n, 4).unwrap()).collect();
    Outcome::from_reports(reports, t, Duration::MAX)
}

fn operator_algebra() -> Outcome {
    let t = Instant::now();
    let mut reports: Vec<CheckReport> = (1..=4).map(|n| verify::verify_pi(n, 4, 4)).collect();
    reports.push(verify::verify_rank_two_counterexample());
    Outcome::from_reports(reports, t, Duration::MAX)
}

fn cover_classification() -> Outcome {
    let t = Instant::now();
    let reports = (1..=4).map(|n| verify::verify_covers(n, 4)).collect();
    Outcome::from_reports(reports, t, Duration::from_secs(300))
}

fn covering_property() -> Outcome {
    let t = Instant::now();
    let reports = (2..=4).map(|n| verify::verify_covering(n, 4).unwrap()).collect();
    Outcome::from_reports(reports, t, Duration::MAX)
}

fn lattice_replication() -> Outcome {
    let t = Instant::now();
    let l = verify::verify_lattice(30).unwrap();
    let elapsed = t.elapsed();
    let mut detail = format!(
        "{} involutions, largest poset {}, {} not lattices, {} with Möbius values outside {{-1,0,1}}, in {elapsed:.2?}",
        l.involutions,
        l.largest_poset,
        l.not_lattice.len(),
        l.mobius_outside_unit.len()
    );
    for z in l.not_lattice.iter().chain(&l.mobius_outside_unit).take(5) {
        detail.push_str(&format!("; {z}"));
    }
    // Counterexamples would be reported here rather than failing the suite.
    if !l.all_hold() {
        detail.push_str(" (reported, not fatal)");
    }
    Outcome { passed: l.all_hold() && elapsed <= Duration::from_secs(600), detail }
}

fn series_identities() -> Outcome {
    let t = Instant::now();
    Outcome::from_reports(vec![verify::verify_series(8, 12)], t, Duration::MAX)
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("counting identity", counting_identity),
        ("sequence fixtures", sequence_fixtures),
        ("bijection round trip", bijection_round_trip),
        ("worked examples", worked_examples),
        ("atom poset", atom_poset_structure),
        ("membership criteria", membership_criteria),
        ("operator algebra", operator_algebra),
        ("cover classification", cover_classification),
        ("covering property", covering_property),
        ("lattice replication", lattice_replication),
        ("series identities", series_identities),
    ];
    let mut fatal = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {name}: {}", k + 1, o.detail);
        // Criterion 10 concerns a conjecture and is never fatal.
        if !o.passed && k + 1 != 10 {
            fatal.push(k + 1);
        }
    }
    assert!(fatal.is_empty(), "failed criteria: {fatal:?}");
}
