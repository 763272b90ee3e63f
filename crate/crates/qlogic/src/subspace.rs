//! The lattice L(H) of linear subspaces of ℂ^d.
//!
//! Order is inclusion, meet is intersection, join is the linear span of the
//! union, and negation is the orthocomplement. Every `Subspace` is stored in
//! canonical form (the reduced row-echelon basis of its generators), so two
//! subspaces are equal exactly when their representations are identical.
//!
//! The lattice is orthocomplemented and orthomodular but NOT distributive in
//! dimension ≥ 2; [`distributivity_witness`] produces a concrete failing
//! triple for the meet-over-join law.

use std::fmt;

use crate::error::DimMismatch;
use crate::exact::{orth_complement_basis, Matrix, Vector};

/// A linear subspace of ℂ^d in canonical (rref) form.
///
/// In finite dimension every subspace is closed, so these are exactly the
/// elements of the quantum propositional lattice over ℂ^d. The zero subspace
/// has an empty basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

/// Requested witness cannot exist: L(ℂ^1) is a distributive chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("no distributivity failure in dimension {0}: the lattice is a chain")]
pub struct WitnessDimension(pub usize);

impl Subspace {
    /// The span of the given generators, canonicalized. Generators may be
    /// linearly dependent or zero; the empty list gives the zero subspace.
    pub fn span(ambient_dim: usize, generators: &[Vector]) -> Result<Self, DimMismatch> {
        assert!(ambient_dim >= 1, "ambient dimension must be positive");
        for g in generators {
            DimMismatch::check(ambient_dim, g.dim())?;
        }
        if generators.is_empty() || generators.iter().all(Vector::is_zero) {
            return Ok(Subspace { ambient_dim, basis: Vec::new() });
        }
        let basis = Matrix::from_rows(generators)?.row_space_basis();
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim >= 1);
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|k| Vector::basis(ambient_dim, k)).collect();
        Subspace { ambient_dim, basis }
    }

    /// The line ℂ·v. Errors on dimension mismatch; the zero vector gives the
    /// zero subspace.
    pub fn line(ambient_dim: usize, v: &Vector) -> Result<Self, DimMismatch> {
        Subspace::span(ambient_dim, std::slice::from_ref(v))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the subspace itself (its basis size).
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// Membership of a single vector. The zero vector belongs to every subspace.
    pub fn contains_vector(&self, v: &Vector) -> Result<bool, DimMismatch> {
        DimMismatch::check(self.ambient_dim, v.dim())?;
        if v.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        let mut rows = self.basis.clone();
        rows.push(v.clone());
        Ok(Matrix::from_rows(&rows)?.rank() == self.dim())
    }

    /// Inclusion order: self ≤ other iff self ⊆ other, decided by rank.
    pub fn leq(&self, other: &Subspace) -> Result<bool, DimMismatch> {
        DimMismatch::check(self.ambient_dim, other.ambient_dim)?;
        if self.is_zero() {
            return Ok(true);
        }
        let mut rows = other.basis.clone();
        rows.extend(self.basis.iter().cloned());
        Ok(Matrix::from_rows(&rows)?.rank() == other.dim())
    }

    /// Least upper bound: in finite dimension the join is the linear span of
    /// the union of bases.
    pub fn join(&self, other: &Subspace) -> Result<Subspace, DimMismatch> {
        DimMismatch::check(self.ambient_dim, other.ambient_dim)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &gens)
    }

    /// Greatest lower bound: the intersection, computed as the kernel of the
    /// stacked orthocomplement generators of both arguments.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace, DimMismatch> {
        DimMismatch::check(self.ambient_dim, other.ambient_dim)?;
        let mut normals = self.ortho().basis;
        normals.extend(other.ortho().basis);
        let basis = orth_complement_basis(&normals, self.ambient_dim)?;
        Subspace::span(self.ambient_dim, &basis)
    }

    /// Orthocomplement K^⊥: all vectors orthogonal to K. Satisfies
    /// K ∨ K^⊥ = full and K ∧ K^⊥ = zero.
    pub fn ortho(&self) -> Subspace {
        let basis = orth_complement_basis(&self.basis, self.ambient_dim)
            .expect("basis dims are consistent by construction");
        Subspace::span(self.ambient_dim, &basis).expect("complement basis dims consistent")
    }

    /// n-ary join; the empty family joins to the zero subspace.
    pub fn join_all<'a>(
        ambient_dim: usize,
        items: impl IntoIterator<Item = &'a Subspace>,
    ) -> Result<Subspace, DimMismatch> {
        let mut acc = Subspace::zero(ambient_dim);
        for s in items {
            acc = acc.join(s)?;
        }
        Ok(acc)
    }

    /// n-ary meet; the empty family meets to the full space.
    pub fn meet_all<'a>(
        ambient_dim: usize,
        items: impl IntoIterator<Item = &'a Subspace>,
    ) -> Result<Subspace, DimMismatch> {
        let mut acc = Subspace::full(ambient_dim);
        for s in items {
            acc = acc.meet(s)?;
        }
        Ok(acc)
    }
}

/// A triple (K1, K2, K3) with K1 ∧ (K2 ∨ K3) ≠ (K1 ∧ K2) ∨ (K1 ∧ K3),
/// witnessing that L(ℂ^d) is not distributive for d ≥ 2.
///
/// The construction embeds the planar triple span{e1}, span{e2}, span{e1+e2}:
/// the left side evaluates to span{e1}, the right side to the zero subspace.
pub fn distributivity_witness(
    dim: usize,
) -> Result<(Subspace, Subspace, Subspace), WitnessDimension> {
    if dim < 2 {
        return Err(WitnessDimension(dim));
    }
    let e1 = Vector::basis(dim, 0);
    let e2 = Vector::basis(dim, 1);
    let diag = e1.add(&e2).expect("equal dims");
    let k1 = Subspace::line(dim, &e1).expect("dim checked");
    let k2 = Subspace::line(dim, &e2).expect("dim checked");
    let k3 = Subspace::line(dim, &diag).expect("dim checked");
    debug_assert!({
        let lhs = k1.meet(&k2.join(&k3).unwrap()).unwrap();
        let rhs = k1.meet(&k2).unwrap().join(&k1.meet(&k3).unwrap()).unwrap();
        lhs != rhs
    });
    Ok((k1, k2, k3))
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span(")?;
        for (k, v) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(dim: usize, ints: &[i64]) -> Subspace {
        Subspace::line(dim, &Vector::from_ints(ints)).unwrap()
    }

    #[test]
    fn order_examples() {
        let zero = Subspace::zero(3);
        let e1 = line(3, &[1, 0, 0]);
        let plane = Subspace::span(3, &[Vector::basis(3, 0), Vector::basis(3, 1)]).unwrap();
        assert!(zero.leq(&e1).unwrap());
        assert!(zero.leq(&plane).unwrap());
        assert!(e1.leq(&plane).unwrap());
        assert!(!line(2, &[1, 0]).leq(&line(2, &[0, 1])).unwrap());
        assert!(e1.leq(&line(2, &[1, 0])).is_err());
    }

    #[test]
    fn meet_examples() {
        let e1 = line(2, &[1, 0]);
        let e2 = line(2, &[0, 1]);
        assert!(e1.meet(&e2).unwrap().is_zero());

        let p12 = Subspace::span(3, &[Vector::basis(3, 0), Vector::basis(3, 1)]).unwrap();
        let p23 = Subspace::span(3, &[Vector::basis(3, 1), Vector::basis(3, 2)]).unwrap();
        assert_eq!(p12.meet(&p23).unwrap(), line(3, &[0, 1, 0]));

        assert_eq!(p12.meet(&p12).unwrap(), p12);
    }

    #[test]
    fn join_examples() {
        let e1 = line(2, &[1, 0]);
        let e2 = line(2, &[0, 1]);
        assert!(e1.join(&e2).unwrap().is_full());
        assert_eq!(e1.join(&Subspace::zero(2)).unwrap(), e1);

        let diag = line(3, &[1, 1, 0]);
        let expected = Subspace::span(3, &[Vector::basis(3, 0), Vector::basis(3, 1)]).unwrap();
        assert_eq!(line(3, &[1, 0, 0]).join(&diag).unwrap(), expected);
    }

    #[test]
    fn ortho_examples() {
        assert_eq!(line(2, &[1, 0]).ortho(), line(2, &[0, 1]));
        assert!(Subspace::zero(2).ortho().is_full());
        assert!(Subspace::full(2).ortho().is_zero());

        let k: Subspace =
            Subspace::line(2, &"(1, i)".parse::<Vector>().unwrap()).unwrap();
        let perp = k.ortho();
        assert_eq!(perp.dim(), 1);
        assert!(k.join(&perp).unwrap().is_full());
        assert!(k.meet(&perp).unwrap().is_zero());
    }

    #[test]
    fn witness_fails_distributivity() {
        for dim in [2, 3] {
            let (k1, k2, k3) = distributivity_witness(dim).unwrap();
            let lhs = k1.meet(&k2.join(&k3).unwrap()).unwrap();
            let rhs = k1.meet(&k2).unwrap().join(&k1.meet(&k3).unwrap()).unwrap();
            assert_ne!(lhs, rhs);
            assert_eq!(lhs, k1);
            assert!(rhs.is_zero());
        }
        assert_eq!(distributivity_witness(1), Err(WitnessDimension(1)));
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(2, &[Vector::from_ints(&[1, 1]), Vector::from_ints(&[2, 2])])
            .unwrap();
        let b = Subspace::span(2, &[Vector::from_ints(&[3, 3])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
    }
}
