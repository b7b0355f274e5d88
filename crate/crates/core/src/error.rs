use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("element {element} does not belong to {group}")]
    ElementMismatch { element: String, group: String },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("element {0} is not reachable from the identity with the given generators")]
    Unreachable(String),
    #[error("{0} is not supported by the root-space pipeline")]
    UnsupportedFamily(String),
    #[error("action is not transitive: {unreached} of {total} points unreached from the base")]
    NotTransitive { unreached: usize, total: usize },
    #[error("poset invariant violated: {0}")]
    PosetInvariant(String),
    #[error("interval bounds are not comparable: {lo} is not below {hi}")]
    NotComparable { lo: String, hi: String },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not modular (coset {witness} has no minimum)")]
    NotModular { witness: String },
    #[error("subgroup carries no designated Coxeter structure")]
    MissingStructure,
    #[error("not a reflection subgroup: {0}")]
    NotReflectionSubgroup(String),
    #[error("subgroup is not parabolic")]
    NotParabolic,
    #[error("flat is not an element of the lattice")]
    FlatNotInLattice,
    #[error("{0} is not a simple reflection of the group")]
    NotSimpleReflection(String),
    #[error("element is not in the alternating subgroup")]
    NotEven,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
