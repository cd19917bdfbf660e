//! Standalone property suites: the Mellin representation of μ-power sums,
//! self-consistency of the rank-one stop-loss trace formula, interlacing of
//! every computed spectral-shift interval set, and the closed-form path
//! spectrum against the dense eigensolver.

use spectra_core::graph::{make_family, Family};
use spectra_core::spectral::{
    adjacency_spectrum, mellin_check, rank_one_gain, shift_intervals,
};

use crate::config::CampaignConfig;
use crate::report::{Failure, VerificationReport};
use crate::util::{path_eigs, Outcome};

pub fn verify_properties(cfg: &CampaignConfig) -> anyhow::Result<VerificationReport> {
    let start = std::time::Instant::now();
    let mut report = VerificationReport::new("properties", serde_json::to_value(cfg)?);
    report
        .notes
        .push("numerical self-consistency suites with explicit tolerances".into());

    let mut outcome = mellin_grid()?;
    outcome = outcome.merge(rank_one_updates()?);
    outcome = outcome.merge(path_spectra());

    report.instances = outcome.instances;
    report.failures = outcome.failures;
    report.near_equalities = outcome.near;
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Σμ^α = c_α ∫₀^∞ R₁(x)x^{−α−1}dx to 1e−6 on a 5 × 5 (graph, α) grid.
fn mellin_grid() -> anyhow::Result<Outcome> {
    let mut out = Outcome::default();
    let graphs = [
        ("P_5", make_family(&Family::Path(5))),
        ("P_8", make_family(&Family::Path(8))),
        ("C_6", make_family(&Family::Cycle(6))),
        ("K_{1,4}", make_family(&Family::Star(5))),
        ("K_{2,3}", make_family(&Family::CompleteBipartite(2, 3))),
    ];
    for (name, g) in &graphs {
        let g = g.as_ref().map_err(|e| anyhow::anyhow!("{e}"))?;
        for alpha in [1.1, 1.3, 1.5, 1.7, 1.9] {
            let rep = mellin_check(g, alpha, 1e-6).map_err(|e| anyhow::anyhow!("{e}"))?;
            out.instances += 1;
            if !rep.pass {
                out.failures.push(Failure {
                    graph6: name.to_string(),
                    param: format!("mellin alpha={alpha}"),
                    lhs: rep.lhs,
                    rhs: rep.rhs,
                    margin: -rep.abs_err,
                });
            }
        }
    }
    Ok(out)
}

/// Deterministic xorshift generator for reproducible pseudo-random updates.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

/// 100 random PSD rank-one updates: the stop-loss gain evaluated from the
/// two spectra, from the shift intervals, and from the homotopy quadrature
/// must agree to 1e−8; the shift intervals must interlace.
fn rank_one_updates() -> anyhow::Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = XorShift(0x9E3779B97F4A7C15);
    for case in 0..100usize {
        let n = 2 + (case % 5);
        // M₀ = GᵀG is positive semidefinite by construction.
        let gmat: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.int(-2, 2)).collect())
            .collect();
        let mut m0 = vec![vec![0.0f64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let s: i64 = gmat.iter().map(|row| row[i] * row[j]).sum();
                m0[i][j] = s as f64;
            }
        }
        let b: Vec<f64> = (0..n).map(|_| rng.int(0, 1) as f64).collect();
        let t = rng.int(0, 8) as f64 / 2.0;
        let rep = rank_one_gain(&m0, &b, t, 1e-11).map_err(|e| anyhow::anyhow!("{e}"))?;
        out.instances += 1;
        if rep.max_discrepancy > 1e-8 {
            out.failures.push(Failure {
                graph6: format!("update#{case}"),
                param: format!("rank-one t={t}"),
                lhs: rep.gain,
                rhs: rep.via_intervals,
                margin: -rep.max_discrepancy,
            });
        }
        // Interlacing: the computed intervals are disjoint in the sorted
        // order (β_{i+1} ≤ α_i up to the certified error).
        let set = shift_intervals(&m0, &b, 1e-11).map_err(|e| anyhow::anyhow!("{e}"))?;
        out.instances += 1;
        let interlaces = set
            .intervals
            .windows(2)
            .all(|w| w[1].1 <= w[0].0 + 2.0 * set.err + 1e-12);
        if !interlaces {
            out.failures.push(Failure {
                graph6: format!("update#{case}"),
                param: "interlacing".into(),
                lhs: 0.0,
                rhs: 0.0,
                margin: -1.0,
            });
        }
    }
    Ok(out)
}

/// Closed-form path spectrum 2cos(kπ/(m+1)) against the dense eigensolver
/// to 1e−10, up to m = 50.
fn path_spectra() -> Outcome {
    let mut out = Outcome::default();
    for m in 1..=50usize {
        let g = make_family(&Family::Path(m)).expect("path");
        let eig = adjacency_spectrum(&g, 1e-12).expect("eigensolver converges");
        let mut closed = path_eigs(m);
        closed.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let worst = eig
            .values
            .iter()
            .zip(&closed)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        out.instances += 1;
        if worst > 1e-10 {
            out.failures.push(Failure {
                graph6: format!("P_{m}"),
                param: "path-spectrum".into(),
                lhs: worst,
                rhs: 1e-10,
                margin: 1e-10 - worst,
            });
        }
    }
    out
}
