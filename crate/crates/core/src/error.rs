use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid instance: k={k}, n={n} (both must be at least 1)")]
    InvalidSpec { k: usize, n: usize },
    #[error("k={k} has fewer than two parts; the graph has no edges")]
    TooFewParts { k: usize },
    #[error("K_{n}^{k} is not interval colorable (n*k is odd)")]
    NotIntervalColorable { k: usize, n: usize },
    #[error("construction requires an even number of parts, got k={k}")]
    OddK { k: usize },
    #[error("circle-method factorization requires an even vertex count, got m={m}")]
    OddM { m: usize },
    #[error("color array has length {found}, instance has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("color {color} is outside 1..={t}")]
    ColorOutOfRange { color: u32, t: u32 },
    #[error("base coloring is not a verified interval coloring: {0}")]
    InvalidBase(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("input is not a verified interval coloring")]
    NotVerified,
    #[error("coloring already uses the minimum t={t} colors")]
    AlreadyMinimal { t: u32 },
    #[error("interval check on an empty set")]
    EmptySet,
    #[error("t={t} is below the maximum degree {delta}")]
    BadT { t: u32, delta: u32 },
    #[error("graph has no interval coloring")]
    NotColorable,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("t={t} exceeds the solver limit of {max} colors")]
    TooManyColors { t: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
