use alloc::string::String;

/// Errors raised by the group-theoretic routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order {order} exceeds the element-enumeration cap {cap}")]
    EnumerationCap { order: u128, cap: usize },
    #[error("group order {order} exceeds the lattice guard {guard}; raise it with --max-order or --allow-heavy")]
    LatticeGuard { order: usize, guard: usize },
    #[error("element is not contained in the group")]
    NotInGroup,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is not transitive; intransitive inputs are unsupported")]
    NotTransitive,
    #[error("central product: {0}")]
    CentralProduct(String),
    #[error("group has {0} minimal normal subgroups; a unique one is required")]
    NotMonolithic(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("submodule search space {size} exceeds cap {cap}")]
    ModuleCap { size: u64, cap: u64 },
    #[error("computation cancelled")]
    Cancelled,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
