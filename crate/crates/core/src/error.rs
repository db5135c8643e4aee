use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("Cartan matrix is not of finite type (symmetrization is not positive definite)")]
    NotFiniteType,
    #[error("Cartan matrix is decomposable; only simple types are supported")]
    Decomposable,
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has length {got}, expected rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("characters live on different root systems ({0} vs {1})")]
    RootSystemMismatch(String, String),
    #[error("not a character of a representation: {0}")]
    NotACharacter(String),
    #[error("character is not self-dual")]
    NotSelfDual,
    #[error("nonzero weight {0} pairs to zero with the distinguished coweight")]
    ZeroPairing(String),
    #[error("distinguished coweight must have positive coefficients")]
    BadCoweight,
    #[error("highest weight Lambda = {0}/2 is not integral")]
    NonIntegralLambda(String),
    #[error("weight multiset of size {size} exceeds the cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("restriction image of {0} is not integral")]
    NonIntegralImage(String),
    #[error("embedding data is inconsistent: {0}")]
    BadEmbedding(String),
    #[error("bad rank {0}")]
    BadRank(usize),
    #[error("unsupported embedding kind: {0}")]
    UnsupportedKind(String),
    #[error("restricted adjoint does not decompose as stated: {0}")]
    DecompositionMismatch(String),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("affine weight is not dominant: {0}")]
    NotDominantAffine(String),
    #[error("level must be positive, got {0}")]
    LevelNotPositive(i64),
    #[error("rank {rank} exceeds the affine rank gate {gate}; pass allow_large to override")]
    RankGate { rank: usize, gate: usize },
    #[error("non-integral affine top weight or level: {0}")]
    NonIntegralNu(String),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("root system {0} is simply laced")]
    SimplyLaced(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
