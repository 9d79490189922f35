use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no perfect-square root: the k-discriminant has no real solution")]
    NoPerfectSquare,

    #[error("no negative-derivative branch: no admissible tau(s) with tau' < 0")]
    NoAdmissibleBranch,

    #[error("unsupported problem form: {0}")]
    UnsupportedForm(String),

    #[error("no bound spectrum at l = {l}: eps3 = {eps3} <= 0")]
    NoBoundSpectrum { l: u32, eps3: f64 },

    #[error("state (n = {n}, l = {l}) is not bound; {}", match .n_max {
        Some(m) => format!("n_max = {m}"),
        None => "no bound state at this l".to_string(),
    })]
    StateNotBound { n: u32, l: u32, n_max: Option<u32> },

    #[error("level (n = {n}, l = {l}) not bound numerically in (-D, 0)")]
    NotBoundNumerically { n: u32, l: u32 },

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;
