use alloc::string::String;
use core::fmt;

/// Errors surfaced by diagram construction, enumeration and the numeric
/// kernels. Preconditions are reported with the binding constraint rather
/// than silently weakened.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    EmptyAlphabet,
    UnknownLetter { rule: String, letter: String },
    EmptyRuleWord { letter: String },
    InvalidVertex { id: u32, count: usize },
    InvalidEdge { id: u32, count: usize },
    /// Edge at the given path position does not compose with its predecessor.
    NotComposable { position: usize },
    BadTelescope { k: u32 },
    AdjacencyOverflow,
    /// An enumeration would visit more paths than the configured cap.
    EnumerationCap { needed: u128, cap: usize },
    NotPrimitive,
    NoConvergence { iterations: usize },
    DegenerateLambda { lambda: f64 },
    DeadEnd { vertex: u32 },
    NoCycle { vertex: u32 },
    /// Prefix agreement reached the depth budget without a proof of equality.
    UndecidableAtDepth { depth: usize },
    EmptyPath,
    BadParameter { what: &'static str },
    MissingLabel { edge: u32 },
    NotInjective,
    SingleEdge,
    PlanCapExceeded { k_cap: u32, best_n: u32 },
    /// A strict inequality required by an embedding theorem fails.
    Precondition { constraint: String },
    ZeroDistancePair,
    /// The level-sum ratio cannot classify a probe at the requested width.
    NotSeparated { width: f64 },
    UnboundedRegime { s: f64, threshold: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyAlphabet => write!(f, "substitution alphabet is empty"),
            Error::UnknownLetter { rule, letter } => {
                write!(f, "rule for '{rule}' uses letter '{letter}' not in the alphabet")
            }
            Error::EmptyRuleWord { letter } => {
                write!(f, "substitution rule for '{letter}' is empty")
            }
            Error::InvalidVertex { id, count } => {
                write!(f, "vertex id {id} out of range (diagram has {count} vertices)")
            }
            Error::InvalidEdge { id, count } => {
                write!(f, "edge id {id} out of range (diagram has {count} edges)")
            }
            Error::NotComposable { position } => {
                write!(f, "path edge at position {position} does not compose")
            }
            Error::BadTelescope { k } => write!(f, "telescoping exponent must be >= 1, got {k}"),
            Error::AdjacencyOverflow => write!(f, "adjacency entries overflow u64"),
            Error::EnumerationCap { needed, cap } => {
                write!(f, "enumeration needs {needed} paths, above the cap of {cap}")
            }
            Error::NotPrimitive => write!(f, "adjacency matrix is not primitive"),
            Error::NoConvergence { iterations } => {
                write!(f, "power iteration did not converge within {iterations} iterations")
            }
            Error::DegenerateLambda { lambda } => {
                write!(f, "Perron eigenvalue {lambda} <= 1: path space is not a Cantor set")
            }
            Error::DeadEnd { vertex } => write!(f, "vertex {vertex} has no outgoing edges"),
            Error::NoCycle { vertex } => write!(f, "no cycle through vertex {vertex}"),
            Error::UndecidableAtDepth { depth } => {
                write!(f, "specs agree to depth {depth} without a proof of equality")
            }
            Error::EmptyPath => write!(f, "operation requires a nonempty path"),
            Error::BadParameter { what } => write!(f, "invalid parameter: {what}"),
            Error::MissingLabel { edge } => write!(f, "no label for edge {edge}"),
            Error::NotInjective => write!(f, "edge labeling is not injective"),
            Error::SingleEdge => {
                write!(f, "labeling has a single edge: delta_min is undefined")
            }
            Error::PlanCapExceeded { k_cap, best_n } => {
                write!(f, "no telescoping k <= {k_cap} reaches the target dimension (best n = {best_n})")
            }
            Error::Precondition { constraint } => {
                write!(f, "precondition not satisfied: {constraint}")
            }
            Error::ZeroDistancePair => write!(f, "sampled a zero-distance pair"),
            Error::NotSeparated { width } => {
                write!(f, "depth too small to separate the abscissa below width {width}")
            }
            Error::UnboundedRegime { s, threshold } => {
                write!(f, "s = {s} is in the unbounded regime (requires s > {threshold})")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
