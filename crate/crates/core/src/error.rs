use thiserror::Error;

/// Errors raised by library operations.
///
/// Every variant except `Io`, `Csv` and `Json` is a precondition violation:
/// the caller asked for something the operation does not define.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for family `{family}`: {reason}")]
    FamilyParameter { family: String, reason: String },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("{what} is capped at n <= {cap}, graph has {n} vertices")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("graph has no edges")]
    Edgeless,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(usize),
    #[error("vertex {0} does not have degree 1")]
    NotLeaf(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad input rather than the environment.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Csv(_) | Error::Json(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}
