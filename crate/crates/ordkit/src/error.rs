//! Crate-wide error type.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Closing the input pairs produced `x <= y <= x` for distinct `x`, `y`.
    #[error("order closure identifies distinct elements {0:?} and {1:?}")]
    Cycle(String, String),

    #[error("duplicate element identifier {0:?}")]
    DuplicateElement(String),

    #[error("unknown element identifier {0:?}")]
    UnknownElement(String),

    /// The assignment would send a related pair to an unrelated one.
    #[error("assignment is not monotone: {x:?} <= {y:?} but {fx:?} !<= {fy:?}")]
    NotMonotone {
        x: String,
        y: String,
        fx: String,
        fy: String,
    },

    #[error("domain/codomain mismatch: {0}")]
    TypeMismatch(String),

    #[error("{what} needs {size} but the cap is {cap}")]
    SizeLimit { what: String, size: u64, cap: u64 },

    /// A relation misses the totality condition at `element`.
    #[error("relation is not total: no pair for {element:?}")]
    NotTotal { element: String },

    /// Witness: `(x, y)` and `(x2, y2)` are related pairs with `x <= x2`
    /// but `y !<= y2`.
    #[error("relation is not order-preserving: ({x:?},{y:?}) and ({x2:?},{y2:?}) with {x:?} <= {x2:?} but {y:?} !<= {y2:?}")]
    NotOrderPreserving {
        x: String,
        y: String,
        x2: String,
        y2: String,
    },

    #[error("not a congruence ({axiom}): witness {witness:?}")]
    NotACongruence {
        axiom: CongruenceAxiom,
        witness: (String, String),
    },

    #[error("square is not a pullback: {0}")]
    NotAPullback(String),

    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("unknown symbol {name:?} at {line}:{col}")]
    UnknownSymbol {
        name: String,
        line: usize,
        col: usize,
    },

    #[error("sort mismatch: {0}")]
    SortMismatch(String),

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("signature error: {0}")]
    Signature(String),

    /// The input does not satisfy a hypothesis the check requires.
    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Which congruence axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceAxiom {
    ContainsOrder,
    Transitive,
}

impl std::fmt::Display for CongruenceAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CongruenceAxiom::ContainsOrder => write!(f, "must contain the order"),
            CongruenceAxiom::Transitive => write!(f, "must be transitive"),
        }
    }
}
