//! Campaign configuration: grids, enumeration caps, tolerance policy,
//! parallelism and suite selection, loaded from JSON.

use serde::{Deserialize, Serialize};
use spectra_core::enumerate::GraphClass;

/// Rational grid point serialized as `[numerator, denominator]`.
pub type RatPair = (i64, i64);

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CampaignConfig {
    /// Cap for the all-connected-graphs campaigns.
    pub n_max_all: usize,
    /// Cap for the connected-bipartite campaigns.
    pub n_max_bipartite: usize,
    /// Cap for tree campaigns.
    pub n_max_trees: usize,
    /// Edge cap for the edge-count (signless Laplacian / line graph) suites.
    pub m_max_edges: usize,
    /// Exponent grid for energy comparisons.
    pub p_grid: Vec<f64>,
    /// Threshold grid for stop-loss comparisons.
    pub t_grid: Vec<f64>,
    /// Positive rational arguments for the R₁ functional.
    pub x_grid: Vec<RatPair>,
    /// Margin policy multiplier: LHS ≥ RHS passes iff LHS − RHS ≥ −κ·err.
    pub kappa: f64,
    /// Worker threads; `None` means the SPECTRA_CERT_THREADS env var or
    /// all available cores.
    pub threads: Option<usize>,
    /// Suites to run, in this order. Known names: main, stoploss, r1,
    /// deletion, bernstein, interval, domination, applications, properties.
    pub suites: Vec<String>,
    /// Maximum degree for the exact domination certificates.
    pub d_max: i64,
    /// Working precision (bits) for the interval certification suite.
    pub prec: u32,
    /// Bisection depth limit for the interval certification suite.
    pub max_depth: usize,
    /// Report output directory; `None` writes to the current directory.
    pub output_dir: Option<String>,
    /// Report format: json (canonical), csv, or md.
    pub format: String,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        let mut t_grid = Vec::new();
        let mut t = 0.0;
        while t <= 5.0 + 1e-12 {
            t_grid.push(t);
            t += 0.25;
        }
        CampaignConfig {
            n_max_all: 8,
            n_max_bipartite: 9,
            n_max_trees: 12,
            m_max_edges: 10,
            p_grid: vec![2.0, 2.1, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 6.5],
            t_grid,
            x_grid: vec![(1, 16), (1, 4), (1, 1), (4, 1), (16, 1)],
            kappa: 4.0,
            threads: None,
            suites: vec![
                "main".into(),
                "stoploss".into(),
                "r1".into(),
                "deletion".into(),
                "bernstein".into(),
                "interval".into(),
                "domination".into(),
                "applications".into(),
                "properties".into(),
            ],
            d_max: 40,
            prec: 256,
            max_depth: 20,
            output_dir: None,
            format: "json".into(),
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        for (name, grid) in [("p_grid", &self.p_grid), ("t_grid", &self.t_grid)] {
            if grid.is_empty() {
                anyhow::bail!("{name} must be non-empty");
            }
            if grid.windows(2).any(|w| w[0] >= w[1]) {
                anyhow::bail!("{name} must be strictly increasing");
            }
        }
        if self.x_grid.is_empty() {
            anyhow::bail!("x_grid must be non-empty");
        }
        if self.x_grid.iter().any(|&(n, d)| n <= 0 || d <= 0) {
            anyhow::bail!("x_grid entries must be positive rationals");
        }
        if self.p_grid[0] < 2.0 {
            anyhow::bail!("p_grid must lie in [2, ∞)");
        }
        if self.t_grid[0] < 0.0 || *self.t_grid.last().unwrap() > 5.0 {
            anyhow::bail!("t_grid must lie in [0, 5]");
        }
        let caps = [
            ("n_max_all", self.n_max_all, GraphClass::All.cap()),
            (
                "n_max_bipartite",
                self.n_max_bipartite,
                GraphClass::Bipartite.cap(),
            ),
            ("n_max_trees", self.n_max_trees, GraphClass::Trees.cap()),
        ];
        for (name, val, cap) in caps {
            if val == 0 || val > cap {
                anyhow::bail!("{name} must lie in 1..={cap}, got {val}");
            }
        }
        if self.kappa <= 0.0 {
            anyhow::bail!("kappa must be positive");
        }
        if self.d_max < 3 || self.d_max > 40 {
            anyhow::bail!("d_max must lie in 3..=40");
        }
        if !matches!(self.format.as_str(), "json" | "csv" | "md") {
            anyhow::bail!("format must be one of json, csv, md");
        }
        Ok(())
    }

    pub fn from_file(path: &str) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read config {path}: {e}"))?;
        let cfg: CampaignConfig = serde_json::from_str(&text)
            .map_err(|e| anyhow::anyhow!("config parse error in {path} at line {}: {e}", e.line()))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Install the global worker pool. Resolution order: explicit config value,
/// then SPECTRA_CERT_THREADS, then all cores. Safe to call more than once
/// (later calls are ignored by rayon).
pub fn install_threads(cfg: &CampaignConfig) {
    let from_env = std::env::var("SPECTRA_CERT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    if let Some(n) = cfg.threads.or(from_env) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}
