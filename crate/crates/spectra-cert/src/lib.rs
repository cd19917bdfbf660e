//! Verification harness for the certified spectral toolkit: campaign
//! configuration, suite runners, and machine-readable reports.

pub mod config;
pub mod report;
pub mod suites;
pub mod util;

use config::CampaignConfig;
use report::VerificationReport;

/// Run one named suite. `certify-interval` log lines, when produced, are
/// returned alongside the report.
pub fn run_suite(
    name: &str,
    cfg: &CampaignConfig,
) -> anyhow::Result<(VerificationReport, Vec<String>)> {
    let plain = |r: VerificationReport| (r, Vec::new());
    Ok(match name {
        "main" => plain(suites::main_theorem::verify_main_theorem(cfg)?),
        "stoploss" => plain(suites::stoploss::verify_stoploss(cfg)?),
        "r1" => plain(suites::r1::verify_r1(cfg)?),
        "deletion" => plain(suites::deletion::verify_deletion_theory(cfg)?),
        "bernstein" => plain(suites::certificates::verify_bernstein(cfg)?),
        "interval" => suites::certificates::verify_interval(cfg)?,
        "domination" => plain(suites::certificates::verify_domination(cfg)?),
        "applications" => plain(suites::applications::verify_applications(cfg)?),
        "properties" => plain(suites::properties::verify_properties(cfg)?),
        other => anyhow::bail!("unknown suite '{other}'"),
    })
}
