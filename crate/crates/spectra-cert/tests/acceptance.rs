//! Acceptance gate: one pass/fail line per criterion, all criteria asserted
//! at the end. The continuum and all-n statements are not machine-checkable;
//! the grids and enumeration caps exercised here are the declared desk-scale
//! substitute, stated explicitly in each line.

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectra_cert::config::CampaignConfig;
use spectra_cert::report::VerificationReport;
use spectra_cert::suites;

use spectra_core::enumerate::{enumerate_connected, GraphClass};
use spectra_core::exact::rat_to_f64;
use spectra_core::graph::{
    apply_tree_shift, bipartition_of, find_tree_shift, make_family, Family, Graph,
};
use spectra_core::matching::{gram_charpoly_auto, matching_poly, one_shift_difference, path_poly};
use spectra_core::poly::{rat, Rat};
use spectra_core::spectral::{e2_exact, e4_exact, stoploss, trace_power_exact};

struct Gate {
    lines: Vec<String>,
    all_pass: bool,
}

impl Gate {
    fn new() -> Gate {
        Gate {
            lines: Vec::new(),
            all_pass: true,
        }
    }

    fn record(&mut self, idx: usize, pass: bool, detail: &str) {
        let line = format!(
            "criterion {idx}: {} — {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
        println!("{line}");
        self.lines.push(line);
        self.all_pass &= pass;
    }

    fn record_report(&mut self, idx: usize, r: &VerificationReport, extra: &str) {
        let detail = format!(
            "{} ({} instances, {} failures, {} near-equalities rechecked{})",
            r.suite,
            r.instances,
            r.failures.len(),
            r.near_equalities.len(),
            extra
        );
        self.record(idx, r.passed(), &detail);
    }
}

#[test]
fn acceptance() {
    let cfg = CampaignConfig::default();
    let mut gate = Gate::new();

    // 1. Main comparison over all connected graphs n ≤ 8 on the p-grid,
    // with strict uniqueness separation for p > 2.
    let t0 = Instant::now();
    let n8 = enumerate_connected(8, GraphClass::All)
        .expect("enumeration")
        .len();
    let main = suites::main_theorem::verify_main_theorem(&cfg).expect("main suite");
    let within_budget = t0.elapsed().as_secs() <= 15 * 60;
    gate.record(
        1,
        main.passed() && n8 == 11117 && within_budget,
        &format!(
            "energy minimality on all connected graphs n<=8 ({n8} classes at n=8), \
             9-point p-grid, unique minimizer separation > 1e-6; {} instances, \
             {} failures, {:.1}s (budget 900s)",
            main.instances,
            main.failures.len(),
            t0.elapsed().as_secs_f64()
        ),
    );

    // 2. Exact closed-walk anchors on all connected graphs n ≤ 8; the
    // stop-loss cross-check 2·S₀ applies on the bipartite members, where
    // the μ-values are defined.
    gate.record(2, exact_anchors(), "E2 = 2m and E4 = 2m + 4*sum C(d,2) + 8*C4 exactly on all connected n<=8; E4 = 2*S0 within 1e-8 on the bipartite members");

    // 3. Matching-polynomial oracle.
    gate.record(3, matching_oracle(), "gram factorization == matching polynomial exactly (trees n<=10, 100 seeded rational-weighted forests); coefficientwise path domination n<=12; every pendant-arm shift difference is x^2*Q with Q >= 0, n<=11");

    // 4. Stop-loss suite: bipartite n ≤ 9 on the t-grid, splicing bound to
    // a,b ≤ 40, cycles to C60 with weak-majorization partial sums.
    let sl = suites::stoploss::verify_stoploss(&cfg).expect("stoploss suite");
    gate.record_report(4, &sl, "; bipartite n<=9, splice a,b<=40, cycles<=C60 at 1e-9");

    // 5. Exact scalar Bernstein certificate suites, zero tolerance, ≤ 1 min.
    let t5 = Instant::now();
    let bern = suites::certificates::verify_bernstein(&cfg).expect("bernstein suite");
    let in_time = t5.elapsed().as_secs() <= 60;
    gate.record(
        5,
        bern.passed() && in_time,
        &format!(
            "exact envelope/moment/line-model certificates: {} instances, {} failures, {:.2}s (budget 60s)",
            bern.instances,
            bern.failures.len(),
            t5.elapsed().as_secs_f64()
        ),
    );

    // 6. Interval certification at 256 bits: 5 strips + 15 boxes, positive
    // margins, depth ≤ 20, logged margins reproduced to ≥ 6 significant
    // digits, ≤ 2 min.
    gate.record(6, interval_certification(&cfg), "256-bit ball certification: 5 strips + 15 boxes, min_margin > 0, max_depth <= 20, reference margins to >= 6 significant digits, under 120s");

    // 7. Exact domination certificates for r ≥ 1, r+2 ≤ d ≤ 40.
    let dom = suites::certificates::verify_domination(&cfg).expect("domination suite");
    gate.record_report(
        7,
        &dom,
        "; zero tolerance, equality points at d=3 detected as exact zeros",
    );

    // 8. Applications: positive energies, L/Q functional comparisons,
    // edge-count and line-graph suites with the shift identity.
    let apps = suites::applications::verify_applications(&cfg).expect("applications suite");
    gate.record_report(
        8,
        &apps,
        "; n<=8 graphs, |E|<=10 edge suites, shift identity within 1e-8",
    );

    // 9. Standalone property suites.
    let props = suites::properties::verify_properties(&cfg).expect("properties suite");
    gate.record_report(
        9,
        &props,
        "; Mellin 1e-6, rank-one 1e-8 x100, interlacing, path spectra 1e-10 to m=50",
    );

    assert!(gate.all_pass, "acceptance gate failed:\n{}", gate.lines.join("\n"));
}

/// Criterion 2 body.
fn exact_anchors() -> bool {
    for n in 1..=8usize {
        let graphs = match enumerate_connected(n, GraphClass::All) {
            Ok(g) => g,
            Err(_) => return false,
        };
        for g in &graphs {
            if trace_power_exact(g, 2) != e2_exact(g) {
                return false;
            }
            let e4 = e4_exact(g);
            if trace_power_exact(g, 4) != e4 {
                return false;
            }
            if bipartition_of(g).is_some() {
                let s0 = match stoploss(g, 0.0) {
                    Ok(e) => e,
                    Err(_) => return false,
                };
                let e4f: f64 = rat_to_f64(&Rat::from(e4));
                if (2.0 * s0.value - e4f).abs() > 1e-8 + 2.0 * s0.err {
                    return false;
                }
            }
        }
    }
    true
}

/// Criterion 3 body.
fn matching_oracle() -> bool {
    // Exact forest determinant identity on all trees n ≤ 10.
    for n in 1..=10usize {
        let trees = match enumerate_connected(n, GraphClass::Trees) {
            Ok(t) => t,
            Err(_) => return false,
        };
        for t in &trees {
            match gram_charpoly_auto(t) {
                Ok(p) => {
                    if p != matching_poly(t) {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
    }
    // ... and on 100 seeded random rational-weighted forests.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for _ in 0..100 {
        let n = rng.gen_range(2..=9usize);
        let mut edges = Vec::new();
        let mut weights = std::collections::BTreeMap::new();
        for v in 1..n {
            // Forests, not necessarily connected or spanning.
            if rng.gen_bool(0.75) {
                let u = rng.gen_range(0..v);
                edges.push((u, v));
                weights.insert((u, v), rat(rng.gen_range(1..=5i64), rng.gen_range(1..=5i64)));
            }
        }
        let f = match Graph::new(n, edges).and_then(|g| g.with_weights(weights)) {
            Ok(f) => f,
            Err(_) => return false,
        };
        match gram_charpoly_auto(&f) {
            Ok(p) => {
                if p != matching_poly(&f) {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    // Coefficientwise domination by the path polynomial, trees n ≤ 12.
    for n in 1..=12usize {
        let trees = match enumerate_connected(n, GraphClass::Trees) {
            Ok(t) => t,
            Err(_) => return false,
        };
        let hp = path_poly(n as i64);
        for t in &trees {
            if !matching_poly(t).le_coeffwise(&hp) {
                return false;
            }
        }
    }
    // Every pendant-arm shift along the chain from any tree to its path:
    // M_{T'} − M_T = x²·Q with Q ≥ 0 coefficientwise.
    for n in 1..=11usize {
        let trees = match enumerate_connected(n, GraphClass::Trees) {
            Ok(t) => t,
            Err(_) => return false,
        };
        for t in &trees {
            let mut cur = t.clone();
            loop {
                let step = match find_tree_shift(&cur) {
                    Ok(Some(s)) => s,
                    Ok(None) => break,
                    Err(_) => return false,
                };
                let diff = match one_shift_difference(&cur, &step) {
                    Ok(d) => d,
                    Err(_) => return false,
                };
                if !diff.coeff(0).is_zero() || !diff.coeff(1).is_zero() {
                    return false;
                }
                if !diff.shift_down(2).all_coeffs_nonneg() {
                    return false;
                }
                cur = match apply_tree_shift(&cur, &step) {
                    Ok(c) => c,
                    Err(_) => return false,
                };
            }
            // The shift chain must terminate at the path.
            if cur.degrees().iter().any(|&d| d > 2) {
                return false;
            }
        }
    }
    // One-shift difference is zero exactly when the tree is already a path.
    let p5 = make_family(&Family::Path(5)).expect("path");
    matches!(find_tree_shift(&p5), Ok(None))
}

/// Criterion 6 body.
fn interval_certification(cfg: &CampaignConfig) -> bool {
    const REFERENCE: [(&str, f64); 20] = [
        ("strip p=2", 0.2091836844141283218430),
        ("strip p=3", 0.1756604797106717694729),
        ("strip p=4", 0.002575662253562486996432),
        ("strip p=5", 0.02292789726217865255910),
        ("strip p=6", 0.01721408853350556955998),
        ("box p=2 q=2", 0.6508904537194193263616),
        ("box p=2 q=3", 0.6508904537194193263616),
        ("box p=2 q=4", 0.1397628182879857505511),
        ("box p=2 q=5", 0.1605815467508651960086),
        ("box p=2 q=6", 0.3478598236135151222984),
        ("box p=3 q=3", 0.1630188627846423176924),
        ("box p=3 q=4", 0.04679417034387588500977),
        ("box p=3 q=5", 0.03867331643307991465225),
        ("box p=3 q=6", 0.01218875666856765747070),
        ("box p=4 q=4", 0.02162922464482017427023),
        ("box p=4 q=5", 0.01281017241910717727167),
        ("box p=4 q=6", 0.01309793728482616588252),
        ("box p=5 q=5", 0.06549360929678128259141),
        ("box p=5 q=6", 0.2281424839653801320633),
        ("box p=6 q=6", 0.04313603171528256053184),
    ];
    let t0 = Instant::now();
    let (report, _) = match suites::certificates::verify_interval(cfg) {
        Ok(r) => r,
        Err(_) => return false,
    };
    if !report.passed() || t0.elapsed().as_secs() > 120 {
        return false;
    }
    let summaries = match spectra_core::splice_cert::full_suite(cfg.prec, cfg.max_depth) {
        Ok(s) => s,
        Err(_) => return false,
    };
    if summaries.len() != REFERENCE.len() {
        return false;
    }
    for (s, (label, reference)) in summaries.iter().zip(REFERENCE.iter()) {
        let margin = rat_to_f64(&s.min_margin);
        if s.label != *label
            || margin <= 0.0
            || s.max_depth > 20
            || (margin / reference - 1.0).abs() >= 5e-7
        {
            return false;
        }
    }
    true
}
