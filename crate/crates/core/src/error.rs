use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a bijection: window residues mod {n} are not distinct")]
    NotBijective { n: usize },

    #[error("sum condition violated: sum of f(i) - i is {sum}, expected k*n = {expected}")]
    SumCondition { sum: i64, expected: i64 },

    #[error("bound condition violated: f({i}) = {value} is outside [{i}, {}]", i + n)]
    Unbounded { i: i64, value: i64, n: i64 },

    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("period mismatch: expected n = {expected}, got {got}")]
    PeriodMismatch { expected: usize, got: usize },

    #[error("(k, n) mismatch: ({k1}, {n1}) vs ({k2}, {n2})")]
    ShapeMismatch {
        k1: usize,
        n1: usize,
        k2: usize,
        n2: usize,
    },

    #[error("generator index {i} out of range for n = {n}")]
    GeneratorOutOfRange { i: usize, n: usize },

    #[error("cyclic subset must be proper; got all {n} residues")]
    FullCyclicSubset { n: usize },

    #[error("symmetric function is not homogeneous")]
    NotHomogeneous,

    #[error("expected a symmetric function in the {expected} basis")]
    WrongBasis { expected: &'static str },

    #[error("need n > k + m, got k = {k}, n = {n}, m = {m}")]
    BadTruncation { k: usize, n: usize, m: usize },

    #[error("degree mismatch: {0} + {1} != {2}")]
    DegreeMismatch(usize, usize, usize),

    #[error("invalid Schubert index {0:?} for k = {1}, n = {2}")]
    BadSchubertIndex(Vec<usize>, usize, usize),

    #[error("cell dimension {dim} differs from k*m = {km}")]
    NotTopDimensional { dim: usize, km: usize },

    #[error("no kinematical support for {0}")]
    NoSupport(String),

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("not a positive Z: maximal minor on rows {rows:?} is {value}")]
    NotPositive { rows: Vec<usize>, value: String },

    #[error("rank deficient: expected rank {expected}, got {got}")]
    RankDeficient { expected: usize, got: usize },

    #[error("point lies in the exceptional locus: rank(X Z) = {rank} < k = {k}")]
    ExceptionalLocus { rank: usize, k: usize },

    #[error("cell sampler failed for {0}")]
    SamplerFailure(String),
}
