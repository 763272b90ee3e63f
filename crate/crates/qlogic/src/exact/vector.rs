use std::fmt;
use std::str::FromStr;

use super::scalar::{ComplexRational, LiteralError};
use crate::error::DimMismatch;

/// A vector in ℂ^d with Gaussian-rational components. `d ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    components: Vec<ComplexRational>,
}

impl Vector {
    /// Panics on an empty component list; dimension zero spaces are not modelled.
    pub fn new(components: Vec<ComplexRational>) -> Self {
        assert!(!components.is_empty(), "vectors need dimension >= 1");
        Vector { components }
    }

    pub fn zero(dim: usize) -> Self {
        Vector::new(vec![ComplexRational::zero(); dim])
    }

    /// Standard basis vector e_k (zero-indexed).
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index out of range");
        let mut components = vec![ComplexRational::zero(); dim];
        components[k] = ComplexRational::one();
        Vector::new(components)
    }

    /// Convenience constructor from integer components.
    pub fn from_ints(components: &[i64]) -> Self {
        Vector::new(components.iter().map(|&n| ComplexRational::from_int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, k: usize) -> &ComplexRational {
        &self.components[k]
    }

    pub fn components(&self) -> &[ComplexRational] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ComplexRational::is_zero)
    }

    pub fn conj(&self) -> Self {
        Vector::new(self.components.iter().map(ComplexRational::conj).collect())
    }

    pub fn scale(&self, by: &ComplexRational) -> Self {
        Vector::new(self.components.iter().map(|c| c * by).collect())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, DimMismatch> {
        DimMismatch::check(self.dim(), other.dim())?;
        Ok(Vector::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector, DimMismatch> {
        DimMismatch::check(self.dim(), other.dim())?;
        Ok(Vector::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }
}

/// Hermitian inner product ⟨x,y⟩ = Σ conj(x_k)·y_k.
///
/// Conjugate-linear in the FIRST argument (physics convention, used
/// consistently across the crate). Only orthogonality ⟨x,y⟩ = 0 matters to
/// the lattice constructions, which is convention-independent.
pub fn inner_product(x: &Vector, y: &Vector) -> Result<ComplexRational, DimMismatch> {
    DimMismatch::check(x.dim(), y.dim())?;
    let mut acc = ComplexRational::zero();
    for (a, b) in x.components.iter().zip(&y.components) {
        acc = &acc + &(&a.conj() * b);
    }
    Ok(acc)
}

/// Vector literal: `(c, c, ...)` with scalar literals as in [`ComplexRational`],
/// e.g. `(1/1+0/1i, 0/1-2/3i)`. Whitespace is insignificant.
impl FromStr for Vector {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| LiteralError {
                text: s.to_string(),
                reason: "vector literals are parenthesized".to_string(),
            })?;
        let mut components = Vec::new();
        for part in inner.split(',') {
            components.push(part.parse::<ComplexRational>()?);
        }
        if components.is_empty() {
            return Err(LiteralError {
                text: s.to_string(),
                reason: "empty vector".to_string(),
            });
        }
        Ok(Vector::new(components))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
