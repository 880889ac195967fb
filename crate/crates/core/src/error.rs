use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("invalid weight syntax `{0}`")]
    WeightSyntax(String),

    #[error("invalid root system label `{0}`")]
    LabelSyntax(String),

    #[error("root system does not fit: offset {offset} + size {size} exceeds ambient rank {ambient}")]
    AmbientTooSmall {
        offset: usize,
        size: usize,
        ambient: usize,
    },

    #[error("reflection in {0:?} is not an integral lattice map")]
    NonLatticeReflection(Vec<i64>),

    #[error("weight {weight:?} is not dominant integral for {what}")]
    NotDominant { weight: Vec<i64>, what: String },

    #[error("group does not contain the reflection along {0:?}")]
    MissingReflection(Vec<i64>),

    #[error("inadmissible weight {weight:?}: {reason}")]
    Inadmissible { weight: Vec<i64>, reason: String },

    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),

    #[error("division is not exact")]
    InexactDivision,

    #[error("irreducibility scheme inapplicable: {0}")]
    SchemeInapplicable(String),

    #[error("invalid group description `{0}`")]
    GroupSyntax(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("negative coefficient {coeff} at weight {weight:?} while branching")]
    NegativeBranching { weight: Vec<i64>, coeff: i64 },

    #[error("cutoff must be positive")]
    NonPositiveCutoff,

    #[error("cutoff mismatch: {0} vs {1}")]
    CutoffMismatch(String, String),

    #[error("invalid affine root system: {0}")]
    InvalidAffine(String),

    #[error("invalid catalog selector `{0}`")]
    SelectorSyntax(String),

    #[error("density forms disagree at {theta:?}: product {product}, character {character}")]
    DensityMismatch {
        theta: Vec<f64>,
        product: f64,
        character: f64,
    },

    #[error("dimension check failed: {0}")]
    DimensionCheck(String),

    #[error("invalid rational `{0}`")]
    RationalSyntax(String),

    #[error("invalid polynomial `{0}`")]
    PolynomialSyntax(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
