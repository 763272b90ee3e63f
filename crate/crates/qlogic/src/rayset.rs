//! The power-set algebra of the ray space R(H), in finite symbolic form.
//!
//! A *ray* is a one-dimensional subspace of ℂ^d; R(H) is the set of all of
//! them. Propositions on this side are arbitrary-looking subsets S ⊆ R(H),
//! but every set the constructions here ever produce is a finite union of
//! *cells* "subspace minus finitely many subspaces". That family is closed
//! under union, intersection, classical complement, the pseudo-negation `~`
//! and the implication `→`, and has decidable emptiness and equality — which
//! is what makes the whole algebra computable.
//!
//! Emptiness hinges on one fact about infinite fields: a complex subspace is
//! never the union of finitely many proper subspaces. So a cell K ∖ {A_i}
//! is empty exactly when K = 0 or some hole A_i is all of K, and a nonempty
//! cell spans all of K.
//!
//! The interesting structure sits on top of the plain set algebra:
//!
//! * [`RaySet::pseudo_neg`]: `~S` = rays orthogonal to every ray of S. It
//!   behaves intuitionistically: S ∨ ~S can fall short of ⊤, double negation
//!   `~~S` recovers the ray set of the subspace spanned by S, and only one
//!   De Morgan law is an equality.
//! * [`RaySet::implies`]: `S1 → S2 = ~(S1 ∖ S2)`, a weak-Heyting implication
//!   with `S → ⊥ = ~S`. The [`crate::finite_model`] module provides the
//!   independent atom-by-atom oracle this closed form is validated against.

use std::fmt;

use crate::error::DimMismatch;
use crate::exact::{ComplexRational, Vector};
use crate::subspace::Subspace;

/// A point of the ray space: the line ℂ·ψ for some ψ ≠ 0, stored as the
/// representative with first nonzero component scaled to 1, so ray equality
/// is plain structural equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray {
    representative: Vector,
}

/// The zero vector spans no ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("the zero vector does not represent a ray")]
pub struct ZeroVector;

impl Ray {
    pub fn new(v: &Vector) -> Result<Ray, ZeroVector> {
        let lead = v.components().iter().find(|c| !c.is_zero()).ok_or(ZeroVector)?;
        Ok(Ray { representative: v.scale(&lead.recip()) })
    }

    pub fn ambient_dim(&self) -> usize {
        self.representative.dim()
    }

    pub fn representative(&self) -> &Vector {
        &self.representative
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// One cell: the rays of `base` minus those of the `holes`.
///
/// Normal form maintained by construction: every hole is intersected into
/// the base, holes equal to the base empty the cell (handled by the
/// constructor), holes contained in other holes are dropped, and holes are
/// sorted. A stored cell is always nonempty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    base: Subspace,
    holes: Vec<Subspace>,
}

impl Cell {
    /// Normalize; `None` means the cell denotes no rays at all.
    fn normalized(base: Subspace, holes: Vec<Subspace>) -> Option<Cell> {
        if base.is_zero() {
            return None;
        }
        let mut cut: Vec<Subspace> = Vec::new();
        for h in holes {
            let h = h.meet(&base).expect("hole dims match base");
            if h.is_zero() {
                continue; // excludes only the zero vector, i.e. no rays
            }
            if h.dim() == base.dim() {
                return None; // hole covers the whole base
            }
            cut.push(h);
        }
        cut.sort();
        cut.dedup();
        // Keep only maximal holes.
        let mut maximal: Vec<Subspace> = Vec::new();
        'outer: for (i, h) in cut.iter().enumerate() {
            for (j, other) in cut.iter().enumerate() {
                if i != j && h.leq(other).expect("same ambient dim") {
                    continue 'outer;
                }
            }
            maximal.push(h.clone());
        }
        Some(Cell { base, holes: maximal })
    }

    pub fn base(&self) -> &Subspace {
        &self.base
    }

    pub fn holes(&self) -> &[Subspace] {
        &self.holes
    }

    fn contains_vector(&self, v: &Vector) -> Result<bool, DimMismatch> {
        Ok(self.base.contains_vector(v)?
            && !self
                .holes
                .iter()
                .any(|h| h.contains_vector(v).expect("dims checked")))
    }

    /// A vector inside the cell. Tries v_t = Σ tᶦ·bᵢ over the basis of the
    /// base for t = 0, 1, 2, …; each proper hole can absorb at most
    /// dim(base) − 1 of these (Vandermonde), so the search terminates.
    fn sample_vector(&self) -> Vector {
        let basis = self.base.basis();
        let dim = self.base.ambient_dim();
        let bound = (self.holes.len() * self.base.dim() + 1) as i64;
        for t in 0..=bound {
            let mut v = Vector::zero(dim);
            let mut weight = ComplexRational::one();
            let t_scalar = ComplexRational::from_int(t);
            for b in basis {
                v = v.add(&b.scale(&weight)).expect("same dim");
                weight = &weight * &t_scalar;
            }
            if !self.holes.iter().any(|h| h.contains_vector(&v).expect("dims")) {
                return v;
            }
        }
        unreachable!("a nonempty cell always yields a sample within the bound")
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.holes.is_empty() {
            write!(f, " \\ {{ ")?;
            for (k, h) in self.holes.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", h)?;
            }
            write!(f, " }}")?;
        }
        Ok(())
    }
}

/// A finite union of cells, denoting a subset of R(H). The empty union is ∅.
///
/// The representation is not unique; use [`RaySet::equals`] for semantic
/// equality (syntactic `==` is only used internally for deduplication).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RaySet {
    ambient_dim: usize,
    cells: Vec<Cell>,
}

impl RaySet {
    fn collect(ambient_dim: usize, raw: Vec<(Subspace, Vec<Subspace>)>) -> RaySet {
        let mut cells: Vec<Cell> = raw
            .into_iter()
            .filter_map(|(base, holes)| Cell::normalized(base, holes))
            .collect();
        cells.sort();
        cells.dedup();
        RaySet { ambient_dim, cells }
    }

    /// Build from explicit (base, holes) cells, normalizing along the way.
    pub fn from_cells(
        ambient_dim: usize,
        cells: Vec<(Subspace, Vec<Subspace>)>,
    ) -> Result<RaySet, DimMismatch> {
        for (base, holes) in &cells {
            DimMismatch::check(ambient_dim, base.ambient_dim())?;
            for h in holes {
                DimMismatch::check(ambient_dim, h.ambient_dim())?;
            }
        }
        Ok(RaySet::collect(ambient_dim, cells))
    }

    /// ∅, the bottom element.
    pub fn empty(ambient_dim: usize) -> RaySet {
        RaySet { ambient_dim, cells: Vec::new() }
    }

    /// R(H), the top element.
    pub fn top(ambient_dim: usize) -> RaySet {
        embed_r(&Subspace::full(ambient_dim))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Ray membership: the representative lies in some cell's base and in
    /// none of that cell's holes.
    pub fn contains(&self, ray: &Ray) -> Result<bool, DimMismatch> {
        DimMismatch::check(self.ambient_dim, ray.ambient_dim())?;
        for cell in &self.cells {
            if cell.contains_vector(ray.representative())? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn union(&self, other: &RaySet) -> Result<RaySet, DimMismatch> {
        DimMismatch::check(self.ambient_dim, other.ambient_dim)?;
        let raw = self
            .cells
            .iter()
            .chain(&other.cells)
            .map(|c| (c.base.clone(), c.holes.clone()))
            .collect();
        Ok(RaySet::collect(self.ambient_dim, raw))
    }

    /// Cell-by-cell: (K ∖ A) ∩ (K′ ∖ A′) = (K ∧ K′) ∖ (A ∪ A′).
    pub fn intersect(&self, other: &RaySet) -> Result<RaySet, DimMismatch> {
        DimMismatch::check(self.ambient_dim, other.ambient_dim)?;
        let mut raw = Vec::new();
        for a in &self.cells {
            for b in &other.cells {
                let base = a.base.meet(&b.base)?;
                let mut holes = a.holes.clone();
                holes.extend(b.holes.iter().cloned());
                raw.push((base, holes));
            }
        }
        Ok(RaySet::collect(self.ambient_dim, raw))
    }

    /// Classical complement within R(H). The complement of one cell K ∖ A is
    /// (H ∖ K) ∪ ⋃_{a ∈ A} r(a); complements of the cells are then
    /// intersected. An empty union complements to ⊤.
    pub fn complement(&self) -> RaySet {
        let mut acc = RaySet::top(self.ambient_dim);
        for cell in &self.cells {
            let mut raw = vec![(Subspace::full(self.ambient_dim), vec![cell.base.clone()])];
            for h in &cell.holes {
                raw.push((h.clone(), Vec::new()));
            }
            let cell_complement = RaySet::collect(self.ambient_dim, raw);
            acc = acc.intersect(&cell_complement).expect("same ambient dim");
        }
        acc
    }

    /// Set difference `self ∖ other`.
    pub fn difference(&self, other: &RaySet) -> Result<RaySet, DimMismatch> {
        DimMismatch::check(self.ambient_dim, other.ambient_dim)?;
        self.intersect(&other.complement())
    }

    /// Normal form keeps only nonempty cells, so emptiness is structural.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Inclusion S1 ⊆ S2, decided as emptiness of S1 ∖ S2.
    pub fn leq(&self, other: &RaySet) -> Result<bool, DimMismatch> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Semantic equality: the symmetric difference is empty.
    pub fn equals(&self, other: &RaySet) -> Result<bool, DimMismatch> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    /// The subspace spanned by all rays of the set. A nonempty cell spans
    /// its whole base, so this is the join of the cell bases; span(∅) = 0.
    pub fn span_of(&self) -> Subspace {
        Subspace::join_all(self.ambient_dim, self.cells.iter().map(Cell::base))
            .expect("cells share the ambient dim")
    }

    /// Pseudo-negation `~S`: the rays orthogonal to every ray of S, i.e.
    /// r(span(S)^⊥). In particular ~∅ = ⊤ (vacuous orthogonality) and ~⊤ = ∅.
    pub fn pseudo_neg(&self) -> RaySet {
        embed_r(&self.span_of().ortho())
    }

    /// Weak-Heyting implication `S1 → S2 = ~(S1 ∖ S2)`.
    ///
    /// This closed form agrees with the atom-by-atom meet
    /// ⋀_{rays s ≤ S1} ~~(~s ∨ (s ∧ S2)): a factor with s ≤ S2 is ⊤, a
    /// factor with s ⊄ S2 reduces to ~s, and the meet of ~s over the rays of
    /// S1 ∖ S2 is ~(S1 ∖ S2) by the De Morgan equality. [`crate::finite_model`]
    /// checks that reduction exhaustively on finite ray universes.
    pub fn implies(&self, other: &RaySet) -> Result<RaySet, DimMismatch> {
        Ok(self.difference(other)?.pseudo_neg())
    }

    /// A ray belonging to the set, when one exists.
    pub fn sample_ray(&self) -> Option<Ray> {
        self.cells
            .first()
            .map(|c| Ray::new(&c.sample_vector()).expect("sample vectors are nonzero"))
    }

    /// One witness ray per cell; empty exactly when the set is empty.
    pub fn sample_rays(&self) -> Vec<Ray> {
        self.cells
            .iter()
            .map(|c| Ray::new(&c.sample_vector()).expect("sample vectors are nonzero"))
            .collect()
    }

    /// All rays of `k` lie inside `self`. This is membership in the
    /// distributive ideal f(S) = {K : r(K) ⊆ S}, represented intensionally
    /// because the ideal itself is infinite.
    pub fn f_contains(&self, k: &Subspace) -> Result<bool, DimMismatch> {
        DimMismatch::check(self.ambient_dim, k.ambient_dim())?;
        embed_r(k).leq(self)
    }
}

/// The embedding r: L(H) → P(R(H)), K ↦ {rays of K}. r(0) = ∅.
pub fn embed_r(k: &Subspace) -> RaySet {
    RaySet::collect(k.ambient_dim(), vec![(k.clone(), Vec::new())])
}

/// The inverse map g on finitely generated ideals: the union of the rays of
/// the generators. Downward closure adds no rays, so generators suffice.
pub fn g_of_generators(ambient_dim: usize, ks: &[Subspace]) -> Result<RaySet, DimMismatch> {
    let mut acc = RaySet::empty(ambient_dim);
    for k in ks {
        DimMismatch::check(ambient_dim, k.ambient_dim())?;
        acc = acc.union(&embed_r(k))?;
    }
    Ok(acc)
}

/// Does the family have a distributive join, i.e. (⋁K) ∧ K′ = ⋁(K ∧ K′) for
/// EVERY subspace K′? Equivalent to: every ray of the join already lies in
/// some member (probe with K′ ranging over rays), which is decidable as
/// emptiness of r(⋁K) ∖ ⋃ r(K_i). For finite families over ℂ this forces the
/// join to be a member (or zero) — the nontrivial distributive joins of L(H)
/// are all infinite families.
pub fn has_distributive_join(ambient_dim: usize, ks: &[Subspace]) -> Result<bool, DimMismatch> {
    let join = Subspace::join_all(ambient_dim, ks.iter())?;
    let union = g_of_generators(ambient_dim, ks)?;
    embed_r(&join).leq(&union)
}

impl fmt::Display for RaySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return write!(f, "empty");
        }
        for (k, cell) in self.cells.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{}", cell)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RaySet {
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

    fn ray(ints: &[i64]) -> Ray {
        Ray::new(&Vector::from_ints(ints)).unwrap()
    }

    #[test]
    fn ray_normalization() {
        assert_eq!(ray(&[2, 4]), ray(&[1, 2]));
        assert_eq!(ray(&[0, 3]), ray(&[0, 1]));
        assert!(Ray::new(&Vector::zero(2)).is_err());
    }

    #[test]
    fn embed_r_examples() {
        assert!(embed_r(&Subspace::zero(2)).is_empty());
        assert!(embed_r(&Subspace::full(2)).equals(&RaySet::top(2)).unwrap());
        let plane = Subspace::span(3, &[Vector::basis(3, 0), Vector::basis(3, 1)]).unwrap();
        assert!(embed_r(&plane).contains(&ray(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn contains_examples() {
        assert!(RaySet::top(2).contains(&ray(&[5, -3])).unwrap());
        let punctured = RaySet::from_cells(2, vec![(Subspace::full(2), vec![line(2, &[1, 0])])])
            .unwrap();
        assert!(punctured.contains(&ray(&[0, 1])).unwrap());
        assert!(!punctured.contains(&ray(&[1, 0])).unwrap());
        assert!(!embed_r(&line(2, &[1, 0])).contains(&ray(&[1, 1])).unwrap());
    }

    #[test]
    fn union_intersect_identities() {
        let s = embed_r(&line(2, &[1, 1]));
        assert!(s.union(&RaySet::empty(2)).unwrap().equals(&s).unwrap());
        assert!(s.intersect(&RaySet::top(2)).unwrap().equals(&s).unwrap());
        assert!(RaySet::empty(2).complement().equals(&RaySet::top(2)).unwrap());
    }

    #[test]
    fn intersect_with_complement_leaves_punctured_plane() {
        let plane = Subspace::span(3, &[Vector::basis(3, 0), Vector::basis(3, 1)]).unwrap();
        let e1 = line(3, &[1, 0, 0]);
        let got = embed_r(&plane)
            .intersect(&embed_r(&e1).complement())
            .unwrap();
        let expected = RaySet::from_cells(3, vec![(plane, vec![e1])]).unwrap();
        assert!(got.equals(&expected).unwrap());
        assert!(got.contains(&ray(&[0, 1, 0])).unwrap());
        assert!(got.contains(&ray(&[1, 1, 0])).unwrap());
        assert!(!got.contains(&ray(&[1, 0, 0])).unwrap());
        assert!(!got.contains(&ray(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn emptiness_examples() {
        let l = line(2, &[1, 0]);
        let degenerate = RaySet::from_cells(2, vec![(l.clone(), vec![l.clone()])]).unwrap();
        assert!(degenerate.is_empty());

        let punctured =
            RaySet::from_cells(2, vec![(Subspace::full(2), vec![l.clone()])]).unwrap();
        assert!(!punctured.is_empty());
        let witness = punctured.sample_ray().unwrap();
        assert!(punctured.contains(&witness).unwrap());

        let s = embed_r(&l);
        assert!(s.union(&s).unwrap().equals(&s).unwrap());
    }

    #[test]
    fn span_examples() {
        let k = line(2, &[1, 1]);
        assert_eq!(embed_r(&k).span_of(), k);

        let two_lines = embed_r(&line(2, &[1, 0]))
            .union(&embed_r(&line(2, &[0, 1])))
            .unwrap();
        assert!(two_lines.span_of().is_full());

        let punctured =
            RaySet::from_cells(2, vec![(Subspace::full(2), vec![line(2, &[1, 0])])]).unwrap();
        assert!(punctured.span_of().is_full());

        assert!(RaySet::empty(2).span_of().is_zero());
    }

    #[test]
    fn pseudo_neg_examples() {
        assert!(RaySet::empty(2)
            .pseudo_neg()
            .equals(&RaySet::top(2))
            .unwrap());
        assert!(RaySet::top(2).pseudo_neg().is_empty());

        let e1 = line(2, &[1, 0]);
        let e2 = line(2, &[0, 1]);
        assert!(embed_r(&e1).pseudo_neg().equals(&embed_r(&e2)).unwrap());

        let both = embed_r(&e1).union(&embed_r(&e2)).unwrap();
        assert!(both.pseudo_neg().is_empty());
    }

    #[test]
    fn implies_examples() {
        let e1 = embed_r(&line(2, &[1, 0]));
        let e2 = embed_r(&line(2, &[0, 1]));

        // S -> S = top
        let punctured =
            RaySet::from_cells(2, vec![(Subspace::full(2), vec![line(2, &[1, 1])])]).unwrap();
        for s in [&e1, &e2, &punctured, &RaySet::empty(2), &RaySet::top(2)] {
            assert!(s.implies(s).unwrap().equals(&RaySet::top(2)).unwrap());
        }

        // S -> bot = ~S
        for s in [&e1, &e2, &punctured] {
            assert!(s
                .implies(&RaySet::empty(2))
                .unwrap()
                .equals(&s.pseudo_neg())
                .unwrap());
        }

        // r(e1) -> r(e2) = r(e2) = ~r(e1) in C^2.
        let imp = e1.implies(&e2).unwrap();
        assert!(imp.equals(&e2).unwrap());
        assert!(imp.equals(&e1.pseudo_neg()).unwrap());
    }

    #[test]
    fn f_contains_examples() {
        let top = RaySet::top(2);
        for k in [Subspace::zero(2), line(2, &[1, 2]), Subspace::full(2)] {
            assert!(top.f_contains(&k).unwrap());
        }

        let bot = RaySet::empty(2);
        assert!(bot.f_contains(&Subspace::zero(2)).unwrap());
        assert!(!bot.f_contains(&line(2, &[1, 0])).unwrap());

        // f of a singleton contains exactly 0 and the ray's line.
        let psi = line(2, &[1, 1]);
        let singleton = embed_r(&psi);
        assert!(singleton.f_contains(&psi).unwrap());
        assert!(singleton.f_contains(&Subspace::zero(2)).unwrap());
        assert!(!singleton.f_contains(&Subspace::full(2)).unwrap());
        assert!(!singleton.f_contains(&line(2, &[1, 0])).unwrap());
    }

    #[test]
    fn g_examples() {
        assert!(g_of_generators(2, &[Subspace::zero(2)]).unwrap().is_empty());

        let k = line(2, &[1, 3]);
        assert!(g_of_generators(2, std::slice::from_ref(&k))
            .unwrap()
            .equals(&embed_r(&k))
            .unwrap());

        let e1 = line(2, &[1, 0]);
        let e2 = line(2, &[0, 1]);
        let g = g_of_generators(2, &[e1.clone(), e2.clone()]).unwrap();
        let expected = embed_r(&e1).union(&embed_r(&e2)).unwrap();
        assert!(g.equals(&expected).unwrap());
    }

    #[test]
    fn distributive_joins_are_trivial_for_finite_families() {
        let e1 = line(2, &[1, 0]);
        let e2 = line(2, &[0, 1]);
        // Join of two distinct lines is the plane: not a member, not distributive.
        assert!(!has_distributive_join(2, &[e1.clone(), e2.clone()]).unwrap());
        // Adding the join as a member makes it distributive.
        assert!(has_distributive_join(2, &[e1.clone(), e2, Subspace::full(2)]).unwrap());
        // Chains are distributive.
        assert!(has_distributive_join(2, &[Subspace::zero(2), e1]).unwrap());
        assert!(has_distributive_join(2, &[]).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(RaySet::empty(2).to_string(), "empty");
        let punctured =
            RaySet::from_cells(2, vec![(Subspace::full(2), vec![line(2, &[1, 0])])]).unwrap();
        let text = punctured.to_string();
        assert!(text.contains("\\"), "cell with a hole prints the hole: {text}");
    }
}
