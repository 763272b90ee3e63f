//! Shared error carriers.

/// Two objects that should live in the same ambient dimension do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("dimension mismatch: {left} vs {right}")]
pub struct DimMismatch {
    pub left: usize,
    pub right: usize,
}

impl DimMismatch {
    pub fn check(left: usize, right: usize) -> Result<(), DimMismatch> {
        if left == right {
            Ok(())
        } else {
            Err(DimMismatch { left, right })
        }
    }
}
