use thiserror::Error;

use crate::subset::{show, Mask};

/// A single failed rank-function axiom with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("NonZeroEmptySet: rk({{}}) must be 0")]
    NonZeroEmptySet,
    #[error("NotMonotone: rk({}) > rk({})", show(*.0), show(*.1))]
    NotMonotone(Mask, Mask),
    #[error("NotSubmodular: A={} B={}", show(*.0), show(*.1))]
    NotSubmodular(Mask, Mask),
    #[error("SingletonRankExceedsOne: element {0}")]
    SingletonRankExceedsOne(usize),
    #[error("InfiniteValueOutsideMegamatroid: rk({}) = inf", show(*.0))]
    InfiniteValueOutsideMegamatroid(Mask),
    #[error("InfiniteFullRank: the rank of the ground set must be finite")]
    InfiniteFullRank,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} values for d={d}, got {got}")]
    WrongLength { d: usize, expected: usize, got: usize },
    #[error("ground set size {0} exceeds the supported maximum")]
    DimensionTooLarge(usize),
    #[error("invalid rank function: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("ContractInfiniteRank: rk({}) = inf", show(*.0))]
    ContractInfiniteRank(Mask),
    #[error("InfiniteChainRank: rk({}) = inf", show(*.0))]
    InfiniteChainRank(Mask),
    #[error("{} is not a subset of the ground set", show(*.0))]
    NotASubset(Mask),
    #[error("SizeLimitExceeded: {what} supports {limit}")]
    SizeLimitExceeded { what: &'static str, limit: &'static str },
    #[error("permutation is not a bijection of 1..{0}")]
    BadPermutation(usize),
    #[error("MalformedSequence: {0}")]
    MalformedSequence(String),
    #[error("UndefinedForSize: {0}")]
    UndefinedForSize(String),
    #[error("malformed chain scheme: {0}")]
    MalformedScheme(String),
    #[error("EmptyPolytope: the chain scheme has no points")]
    EmptyPolytope,
    #[error("BlockSizeMismatch: {0}")]
    BlockSizeMismatch(String),
    #[error("class mismatch: {0}")]
    ClassMismatch(String),
    #[error("ContainmentViolated: piece {piece} has rk({}) above the target", show(*.set))]
    ContainmentViolated { piece: usize, set: Mask },
    #[error("CoverGap: point {0} lies in the target but in no piece")]
    CoverGap(String),
    #[error("OverlapInterior: pieces {i} and {j} share the interior point {point}")]
    OverlapInterior { i: usize, j: usize, point: String },
    #[error("IntersectionMismatch: intersection {} disagrees at {point}", show_index(*.set))]
    IntersectionMismatch { set: Mask, point: String },
    #[error("IntersectionRequired: intersection {} is not a base polytope ({reason}); supply it explicitly", show_index(*.set))]
    IntersectionRequired { set: Mask, reason: String },
    #[error("NonIntegralResult: {0}")]
    NonIntegralResult(String),
    #[error("ConstantTermNonzero")]
    ConstantTermNonzero,
    #[error("NotLyndon: {0}")]
    NotLyndon(String),
    #[error("ModeDisagreement: {0}")]
    ModeDisagreement(String),
    #[error("grid unsupported: {0}")]
    GridUnsupported(String),
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("parse error: {0}")]
    Parse(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

fn show_index(set: Mask) -> String {
    show(set)
}

pub type Result<T> = std::result::Result<T, Error>;
