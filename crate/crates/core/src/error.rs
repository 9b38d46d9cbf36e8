use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input at line {line}: {message}")]
    MalformedInput { line: usize, message: String },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {vertex} out of range for a tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("k = {k} out of range for a tree on {n} vertices (need 2 <= k <= n)")]
    KOutOfRange { k: usize, n: usize },

    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("Prufer entry {entry} out of range for n = {n}")]
    EntryOutOfRange { entry: usize, n: usize },

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Shared validation for the subset size `k`.
///
/// The single-vertex tree accepts any `k >= 2` so that every index on it is
/// the empty sum.
pub(crate) fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 2 || (k > n && n > 1) {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(())
}
