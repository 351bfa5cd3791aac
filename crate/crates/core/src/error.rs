use alloc::string::String;

/// Every failure the library reports.
///
/// Variants carry the witnessing indices so callers (and the CLI) can print
/// a concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("generator {generator} is not a permutation of 0..{degree}")]
    InvalidPermutation { generator: usize, degree: usize },
    #[error("group order exceeds the configured bound {bound}")]
    OrderBoundExceeded { bound: usize },
    #[error("map is not a homomorphism at ({x}, {y})")]
    NotHomomorphism { x: usize, y: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("could not lift character values from the prime field")]
    LiftFailure,
    #[error("random splitting of an isotypic block failed after {attempts} attempts")]
    SplitFailure { attempts: usize },
    #[error("equivariance fails: gamma(g.h) != g gamma(h) g^-1 for g = {g}, h = {h}")]
    EquivarianceViolation { g: usize, h: usize },
    #[error("Peiffer identity fails: gamma(h).n != h n h^-1 for h = {h}, n = {n}")]
    PeifferViolation { h: usize, n: usize },
    #[error("subgroup is not normal: {g} {h} {g}^-1 leaves the subgroup")]
    NotNormal { g: usize, h: usize },
    #[error("elements belong to different crossed modules")]
    XmodMismatch,
    #[error("problem size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("invalid simple label ({orbit_rep}, {irrep})")]
    InvalidLabel { orbit_rep: usize, irrep: usize },
    #[error("modules use different scalar backends")]
    BackendMismatch,
    #[error("trace at (m = {m}, g = {g}) is not close to a cyclotomic integer")]
    SnapFailure { m: usize, g: usize },
    #[error("multiplicity of ({orbit_rep}, {irrep}) is not a nonnegative integer")]
    NonIntegerMultiplicity { orbit_rep: usize, irrep: usize },
    #[error("the given subspace is not a submodule")]
    NotSubmodule,
    #[error("fusion coefficient is not a nonnegative integer")]
    NonInteger,
    #[error("fusion methods disagree: {0}")]
    MethodMismatch(String),
    #[error(
        "type mismatch in slice {slice} at position {position}: expected {expected}, found {found}"
    )]
    TypeMismatch {
        slice: usize,
        position: usize,
        expected: String,
        found: String,
    },
    #[error("color cannot be resolved: {0}")]
    UnresolvedColor(String),
    #[error("element {element} is not a valid ribbon choice")]
    InvalidRibbonChoice { element: usize },
    #[error("invalid braid: {0}")]
    InvalidBraid(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
