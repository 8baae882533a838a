use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("components sum to {0:e}, expected zero")]
    SumNotZero(f64),
    #[error("spectrum is not in descending order")]
    Unsorted,
    #[error("point is not normalized (squared norm {0})")]
    NotNormalized(f64),
    #[error("configuration has {config} points but there are {weights} weights")]
    LengthMismatch { config: usize, weights: usize },
    #[error("expected 2 or 3 weights, got {0}")]
    UnsupportedLength(usize),
    #[error("weight {0} is zero")]
    ZeroWeight(usize),
    #[error("two weights coincide; the fixed point b lies on a chamber wall")]
    CoincidentWeights,
    #[error("fixed point c{0} lies on a chamber wall")]
    OnWall(usize),
    #[error("weights sum to zero; the fixed point a is the origin")]
    ZeroSum,
    #[error("slice form at {0} is degenerate")]
    DegenerateForm(&'static str),
    #[error("every weight is zero")]
    AllWeightsDegenerate,
    #[error("no prediction available for these weights")]
    PredictionUnavailable,
    #[error("no realization found within budget (best distance {best:e})")]
    NotFound { best: f64 },
    #[error("target spectrum lies outside the predicted polytope")]
    OutsidePolytope,
}

pub type Result<T> = std::result::Result<T, Error>;
