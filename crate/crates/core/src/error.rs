use alloc::string::String;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex id {id} out of range for {n} vertices")]
    OutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not a {k}-tree: {reason}")]
    NotKTree { k: usize, reason: String },
    #[error("graph has {n} vertices, need at least {need}")]
    TooSmall { n: usize, need: usize },
    #[error("k = {k} is below the minimum {min} for this routine")]
    KTooSmall { k: usize, min: usize },
    #[error("root is not a clique")]
    RootNotClique,
    #[error("apex {0} is not adjacent to every root vertex")]
    ApexNotCommonNeighbor(usize),
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    NotProper(usize, usize),
    #[error("coloring has {got} entries, graph has {n} vertices")]
    SizeMismatch { got: usize, n: usize },
    #[error("color {color} at vertex {v} is outside the palette 1..={palette}")]
    ColorOutOfPalette { v: usize, color: u32, palette: u32 },
    #[error("no case applies: {0}")]
    CaseDispatchExhausted(String),
    #[error("no unavoidable configuration found: {0}")]
    NotFound(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that contradict a proven statement, i.e. bugs.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::CaseDispatchExhausted(_) | Error::NotFound(_)
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! internal {
    ($($arg:tt)*) => {
        $crate::error::Error::Internal(alloc::format!($($arg)*))
    };
}
pub(crate) use internal;
