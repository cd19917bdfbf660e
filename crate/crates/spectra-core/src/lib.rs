//! Certified computational toolkit for spectral graph functionals:
//! p-energies, matching generating polynomials, stop-loss comparisons,
//! rank-one spectral-shift calculus, exact Bernstein positivity
//! certificates, and rigorous ball-arithmetic certification.

pub mod ball;
pub mod bernstein;
pub mod canon;
pub mod domination;
pub mod eig;
pub mod enumerate;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod poly;
pub mod spectral;
pub mod splice_cert;

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("accuracy target {target:e} not reached (achieved {achieved:e})")]
    Accuracy { target: f64, achieved: f64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("certification failure: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
