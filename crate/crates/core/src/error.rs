//! Error types shared across the crate.

use crate::set::ElementSet;
use thiserror::Error;

/// Violation witness produced by the matroid axiom checker.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("the empty set is not in the family")]
    EmptyMissing,
    #[error("family is not downward closed: {superset} is present but {missing} is not")]
    NotDownwardClosed {
        superset: ElementSet,
        missing: ElementSet,
    },
    #[error("exchange fails for {smaller} and {larger}: no element of the larger set extends the smaller")]
    ExchangeFails {
        smaller: ElementSet,
        larger: ElementSet,
    },
}

/// Violation witness for the circuit axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitViolation {
    #[error("the empty set cannot be a circuit")]
    EmptyCircuit,
    #[error("circuit family is not an antichain: {inner} is contained in {outer}")]
    NotAntichain { inner: ElementSet, outer: ElementSet },
    #[error("circuit elimination fails for C1={c1}, C2={c2}, x={x}: no circuit inside their union avoids x")]
    EliminationFails {
        c1: ElementSet,
        c2: ElementSet,
        x: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set of size {0} exceeds the supported maximum of {max}", max = crate::set::MAX_GROUND)]
    GroundTooLarge(usize),
    #[error("explicit independent-set families are limited to ground sets of size {limit}, got {got}")]
    ExplicitTooLarge { got: usize, limit: usize },
    #[error("realization provides {got} ground elements but the declared ground size is {expected}")]
    GroundSizeMismatch { expected: usize, got: usize },
    #[error("uniform matroid rank {k} exceeds ground size {n}")]
    RankExceedsGround { k: usize, n: usize },
    #[error("partition blocks {a} and {b} overlap")]
    OverlappingBlocks { a: ElementSet, b: ElementSet },
    #[error("element {element} is outside the ground set of size {ground}")]
    ElementOutOfRange { element: usize, ground: usize },
    #[error("graph vertex {vertex} is outside 0..{vertices}")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("{0} is not prime")]
    NonPrimeModulus(u64),
    #[error("matrix columns have differing lengths ({first} vs {other})")]
    ColumnLengthMismatch { first: usize, other: usize },
    #[error("independence axioms violated: {0}")]
    Axiom(#[from] AxiomViolation),
    #[error("circuit axioms violated: {0}")]
    Circuit(#[from] CircuitViolation),
    #[error("set {set} is not contained in the ground set of size {ground}")]
    NotASubset { set: ElementSet, ground: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("ground set of size {0} exceeds the supported maximum of {max}", max = crate::set::MAX_GROUND)]
    GroundTooLarge(usize),
    #[error("edge {edge} is not contained in the ground set of size {ground}")]
    EdgeOutOfRange { edge: ElementSet, ground: usize },
    #[error("edge {0} is not present")]
    MissingEdge(ElementSet),
    #[error("hypergraphs have differing ground sizes ({0} vs {1})")]
    GroundMismatch(usize, usize),
    #[error("set {set} is not contained in the ground set of size {ground}")]
    NotASubset { set: ElementSet, ground: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex has more than {limit} faces; refusing to enumerate")]
    TooManyFaces { limit: usize },
    #[error("facet {facet} is not contained in the ground set of size {ground}")]
    FacetOutOfRange { facet: ElementSet, ground: usize },
    #[error("ground set of size {0} exceeds the supported maximum of {max}", max = crate::set::MAX_GROUND)]
    GroundTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("matroids live on differing ground sets ({0} vs {1})")]
    GroundMismatch(usize, usize),
    #[error("set {index} ({set}) is not independent in matroid {matroid}")]
    DependentSet {
        /// 1-based index of the offending set.
        index: usize,
        set: ElementSet,
        /// "M" or "N".
        matroid: char,
    },
    #[error("set {index} ({set}) is not contained in the ground set of size {ground}")]
    SetOutOfRange {
        index: usize,
        set: ElementSet,
        ground: usize,
    },
    #[error("total candidate count {total} exceeds the exact-search limit {limit}")]
    ScaleLimit { total: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("endpoint {vertex} is outside side {side} of size {size}")]
    EndpointOutOfRange {
        vertex: usize,
        side: char,
        size: usize,
    },
    #[error("edge set {0} is not a matching: two edges share a vertex")]
    NotAMatching(ElementSet),
    #[error("edge id {edge} is outside the graph's {count} edges")]
    EdgeIdOutOfRange { edge: usize, count: usize },
    #[error("column {column} does not contain each of 1..={n} exactly once")]
    ColumnNotPermutation { column: usize, n: usize },
    #[error("matrix must have {expected} columns, got {got}")]
    WrongColumnCount { expected: usize, got: usize },
    #[error("matrix must have positive dimensions")]
    EmptyMatrix,
    #[error("entry at row {row}, column {column} is outside the matroid ground set")]
    EntryOutOfRange { row: usize, column: usize },
    #[error("columns {0:?} are not independent sets of the lifted matroid")]
    DependentColumns(Vec<usize>),
    #[error("tightness family requires n >= 2, got {0}")]
    NTooSmall(usize),
    #[error("complete bipartite family requires even n, got {0}")]
    OddN(usize),
    #[error("selection is inconsistent with the matrix: {0}")]
    InconsistentSelection(String),
}
