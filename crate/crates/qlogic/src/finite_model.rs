//! Brute-force finite models of the ray-set algebra.
//!
//! Replace R(H) by a small fixed universe U of rays. Subsets of U form a
//! finite Boolean algebra in which `~` can be computed literally — filter U
//! by orthogonality — and the implication of the weak-Heyting structure can
//! be evaluated both ways:
//!
//! * the atom-by-atom definition, a meet of `~~(~s ∨ (s ∧ S2))` over the
//!   rays s of S1, and
//! * the closed form `~(S1 ∖ S2)` used by [`crate::rayset::RaySet::implies`].
//!
//! Because everything is a bitmask, exhaustive comparison over ALL pairs of
//! subsets of U is feasible. This module deliberately does not touch the
//! symbolic cell machinery: it is the independent oracle the closed form is
//! gated on.

use crate::error::DimMismatch;
use crate::exact::{inner_product, Vector};
use crate::rayset::Ray;

/// A subset of the universe, one bit per ray.
pub type Mask = u32;

/// A finite ray universe with its orthogonality table.
pub struct FiniteModel {
    rays: Vec<Ray>,
    /// orth[i] = mask of rays orthogonal to ray i.
    orth: Vec<Mask>,
}

/// Universes are capped so that exhaustive subset enumeration stays cheap.
pub const MAX_UNIVERSE: usize = 16;

impl FiniteModel {
    /// Build from representative vectors; duplicates (as rays) are rejected
    /// by panic since a fixed universe is always hand-picked.
    pub fn new(vectors: &[Vector]) -> Result<FiniteModel, DimMismatch> {
        assert!(!vectors.is_empty() && vectors.len() <= MAX_UNIVERSE);
        let dim = vectors[0].dim();
        let rays: Vec<Ray> = vectors
            .iter()
            .map(|v| {
                DimMismatch::check(dim, v.dim())?;
                Ok(Ray::new(v).expect("universe vectors are nonzero"))
            })
            .collect::<Result<_, DimMismatch>>()?;
        for (i, r) in rays.iter().enumerate() {
            assert!(
                !rays[..i].contains(r),
                "universe contains a duplicate ray: {r}"
            );
        }
        let orth = rays
            .iter()
            .map(|a| {
                let mut mask: Mask = 0;
                for (j, b) in rays.iter().enumerate() {
                    let ip = inner_product(a.representative(), b.representative())
                        .expect("uniform dims");
                    if ip.is_zero() {
                        mask |= 1 << j;
                    }
                }
                mask
            })
            .collect();
        Ok(FiniteModel { rays, orth })
    }

    /// The universe used for d = 2: all six rays through vectors with
    /// components in {0, ±1, ±i}.
    pub fn standard_d2() -> FiniteModel {
        let vs: Vec<Vector> = ["(0,1)", "(1,0)", "(1,1)", "(1,-1)", "(1,i)", "(1,-i)"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        FiniteModel::new(&vs).expect("fixed universe is well-formed")
    }

    /// A twelve-ray universe for d = 3 drawn from the {0, ±1, ±i} grid.
    pub fn standard_d3() -> FiniteModel {
        let vs: Vec<Vector> = [
            "(1,0,0)",
            "(0,1,0)",
            "(0,0,1)",
            "(1,1,0)",
            "(1,-1,0)",
            "(1,0,1)",
            "(1,0,-1)",
            "(0,1,1)",
            "(0,1,-1)",
            "(1,i,0)",
            "(1,0,i)",
            "(1,1,1)",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        FiniteModel::new(&vs).expect("fixed universe is well-formed")
    }

    pub fn size(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    /// Mask with every universe ray present (the model's ⊤).
    pub fn full(&self) -> Mask {
        if self.rays.len() == Mask::BITS as usize {
            Mask::MAX
        } else {
            (1 << self.rays.len()) - 1
        }
    }

    /// Pseudo-negation by literal orthogonality filtering:
    /// ~S = {u ∈ U : u ⊥ s for all s ∈ S}. ~∅ = U vacuously.
    pub fn tilde(&self, s: Mask) -> Mask {
        let mut acc = self.full();
        let mut rest = s;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc &= self.orth[i];
        }
        acc
    }

    /// The closed-form implication `~(S1 ∖ S2)`.
    pub fn implies_closed(&self, s1: Mask, s2: Mask) -> Mask {
        self.tilde(s1 & !s2 & self.full())
    }

    /// The literal atom-by-atom implication: ⊤ for S1 = ⊥, otherwise the
    /// meet over the rays s of S1 of `~~(~s ∨ (s ∧ S2))`.
    pub fn implies_atomwise(&self, s1: Mask, s2: Mask) -> Mask {
        if s1 == 0 {
            return self.full();
        }
        let mut acc = self.full();
        let mut rest = s1;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let s: Mask = 1 << i;
            let factor = self.tilde(self.tilde(self.orth[i] | (s & s2)));
            acc &= factor;
        }
        acc
    }
}
