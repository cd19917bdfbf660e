//! Command-line entry point for the verification harness.

use clap::{Parser, Subcommand};

use spectra_cert::config::{install_threads, CampaignConfig};
use spectra_cert::run_suite;

#[derive(Parser)]
#[command(name = "spectra-cert", about = "Certified spectral-comparison verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification campaign from a JSON config file.
    Run {
        #[arg(long)]
        config: Option<String>,
    },
    /// Print the adjacency spectrum and p-energy of one graph.
    Spectra {
        #[arg(long)]
        graph6: String,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
    /// Run the exact scalar Bernstein certificate suites.
    CertifyBernstein,
    /// Run the ball-arithmetic interval certification suite.
    CertifyInterval {
        #[arg(long, default_value_t = 256)]
        prec: u32,
    },
    /// Run the exact piecewise domination certificates.
    CertifyDomination {
        #[arg(long, default_value_t = 40)]
        dmax: i64,
    },
    /// Enumerate connected graphs of one class, up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        class: String,
        #[arg(long, default_value = "graph6")]
        format: String,
    },
}

fn main() {
    if let Err(e) = dispatch() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn dispatch() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config } => {
            let cfg = match config {
                Some(path) => CampaignConfig::from_file(&path)?,
                None => CampaignConfig::default(),
            };
            run_campaign(&cfg)
        }
        Command::Spectra { graph6, p } => spectra_one(&graph6, p),
        Command::CertifyBernstein => single_suite("bernstein", CampaignConfig::default()),
        Command::CertifyInterval { prec } => {
            let mut cfg = CampaignConfig::default();
            cfg.prec = prec;
            single_suite("interval", cfg)
        }
        Command::CertifyDomination { dmax } => {
            let mut cfg = CampaignConfig::default();
            cfg.d_max = dmax;
            cfg.validate()?;
            single_suite("domination", cfg)
        }
        Command::Enumerate { n, class, format } => enumerate(n, &class, &format),
    }
}

fn run_campaign(cfg: &CampaignConfig) -> anyhow::Result<()> {
    install_threads(cfg);
    let mut all_pass = true;
    for name in &cfg.suites {
        let (report, lines) = run_suite(name, cfg)?;
        for line in &lines {
            println!("{line}");
        }
        println!("{}", report.summary_line());
        if let Some(dir) = &cfg.output_dir {
            std::fs::create_dir_all(dir)?;
            let ext = if cfg.format == "md" { "md" } else { &cfg.format };
            let path = format!("{dir}/{name}.{ext}");
            std::fs::write(&path, report.render(&cfg.format))?;
        }
        all_pass &= report.passed();
    }
    if !all_pass {
        std::process::exit(1);
    }
    Ok(())
}

fn single_suite(name: &str, cfg: CampaignConfig) -> anyhow::Result<()> {
    install_threads(&cfg);
    let (report, lines) = run_suite(name, &cfg)?;
    for line in &lines {
        println!("{line}");
    }
    println!("{}", report.summary_line());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}

fn spectra_one(g6: &str, p: f64) -> anyhow::Result<()> {
    if p < 2.0 {
        anyhow::bail!("p must lie in [2, ∞)");
    }
    let g = spectra_core::graph6::from_graph6(g6).map_err(|e| anyhow::anyhow!("{e}"))?;
    let eig =
        spectra_core::spectral::adjacency_spectrum(&g, 1e-12).map_err(|e| anyhow::anyhow!("{e}"))?;
    println!("n={} m={}", g.n(), g.m());
    let values: Vec<String> = eig.values.iter().map(|v| format!("{v:.12}")).collect();
    println!("spectrum: [{}]", values.join(", "));
    let (energy, err) = spectra_cert::util::p_energy_from(&eig.values, eig.err, p);
    println!("E_{p}(G) = {energy:.12} (err <= {err:.3e})");
    Ok(())
}

fn enumerate(n: usize, class: &str, format: &str) -> anyhow::Result<()> {
    use spectra_core::enumerate::{enumerate_connected, GraphClass};
    let class = match class {
        "all" => GraphClass::All,
        "trees" => GraphClass::Trees,
        "bipartite" => GraphClass::Bipartite,
        other => anyhow::bail!("unknown class '{other}' (expected all, trees, bipartite)"),
    };
    if n == 0 || n > class.cap() {
        anyhow::bail!("n must lie in 1..={}", class.cap());
    }
    let graphs = enumerate_connected(n, class).map_err(|e| anyhow::anyhow!("{e}"))?;
    for g in &graphs {
        match format {
            "graph6" => println!("{}", spectra_core::graph6::to_graph6(g).map_err(|e| anyhow::anyhow!("{e}"))?),
            "edges" => println!("{}", spectra_core::graph6::to_edge_list(g)),
            other => anyhow::bail!("unknown format '{other}' (expected graph6, edges)"),
        }
    }
    Ok(())
}
