//! Property tests for the lattice and ray-set algebras.
//!
//! The ray-set checks lean on two independent oracles: pointwise membership
//! of sampled rays (the set operations must be homomorphic on `contains`),
//! and exact semantic equality through the symmetric difference.

use proptest::prelude::*;

use qlogic::exact::{ComplexRational, Vector};
use qlogic::rayset::{embed_r, Ray, RaySet};
use qlogic::subspace::Subspace;

fn scalar() -> impl Strategy<Value = ComplexRational> {
    prop_oneof![
        Just(ComplexRational::zero()),
        Just(ComplexRational::one()),
        Just(-ComplexRational::one()),
        Just(ComplexRational::i()),
        Just(-ComplexRational::i()),
        Just(ComplexRational::from_parts(1, 1, 1, 1)),
        Just(ComplexRational::from_ratio(1, 2)),
        Just(ComplexRational::from_int(2)),
    ]
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(scalar(), dim).prop_map(Vector::new)
}

fn subspace(dim: usize) -> impl Strategy<Value = Subspace> {
    proptest::collection::vec(vector(dim), 0..=dim)
        .prop_map(move |gens| Subspace::span(dim, &gens).unwrap())
}

fn rayset(dim: usize) -> BoxedStrategy<RaySet> {
    let leaf = prop_oneof![
        8 => subspace(dim).prop_map(|k| embed_r(&k)),
        1 => Just(RaySet::empty(dim)),
        1 => Just(RaySet::top(dim)),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.union(&b).unwrap()),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.intersect(&b).unwrap()),
            inner.clone().prop_map(|a| a.complement()),
            inner.clone().prop_map(|a| a.pseudo_neg()),
        ]
    })
    .boxed()
}

/// Rays to probe membership with, covering axes and mixed directions.
fn probe_rays(dim: usize) -> Vec<Ray> {
    let mut out = Vec::new();
    for k in 0..dim {
        out.push(Ray::new(&Vector::basis(dim, k)).unwrap());
    }
    let mut mixed = vec![ComplexRational::one(); dim];
    mixed[dim - 1] = ComplexRational::i();
    out.push(Ray::new(&Vector::new(mixed)).unwrap());
    out.push(Ray::new(&Vector::new(vec![ComplexRational::one(); dim])).unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // ---- L(H) lattice laws ------------------------------------------------

    #[test]
    fn lattice_laws_hold(a in subspace(3), b in subspace(3), c in subspace(3)) {
        let meet = |x: &Subspace, y: &Subspace| x.meet(y).unwrap();
        let join = |x: &Subspace, y: &Subspace| x.join(y).unwrap();

        prop_assert_eq!(meet(&a, &b), meet(&b, &a));
        prop_assert_eq!(join(&a, &b), join(&b, &a));
        prop_assert_eq!(meet(&a, &meet(&b, &c)), meet(&meet(&a, &b), &c));
        prop_assert_eq!(join(&a, &join(&b, &c)), join(&join(&a, &b), &c));
        prop_assert_eq!(meet(&a, &a), a.clone());
        prop_assert_eq!(join(&a, &a), a.clone());
        prop_assert_eq!(meet(&a, &join(&a, &b)), a.clone());
        prop_assert_eq!(join(&a, &meet(&a, &b)), a.clone());
    }

    #[test]
    fn ortho_laws_hold(a in subspace(3), b in subspace(3)) {
        prop_assert_eq!(a.ortho().ortho(), a.clone());
        // De Morgan for the orthocomplement.
        prop_assert_eq!(
            a.join(&b).unwrap().ortho(),
            a.ortho().meet(&b.ortho()).unwrap()
        );
        // Complement laws.
        prop_assert!(a.join(&a.ortho()).unwrap().is_full());
        prop_assert!(a.meet(&a.ortho()).unwrap().is_zero());
    }

    #[test]
    fn orthomodularity(whole in subspace(3), part in subspace(3)) {
        // k1 = whole ∧ part ≤ k2 = whole.
        let k1 = whole.meet(&part).unwrap();
        let k2 = whole;
        prop_assert!(k1.leq(&k2).unwrap());
        let rebuilt = k1.join(&k2.meet(&k1.ortho()).unwrap()).unwrap();
        prop_assert_eq!(rebuilt, k2);
    }

    #[test]
    fn dimension_formula_for_commuting_pairs(mask1 in 0u8..8, mask2 in 0u8..8) {
        // Subspaces spanned by standard basis vectors always commute.
        let pick = |mask: u8| {
            let gens: Vec<Vector> = (0..3)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| Vector::basis(3, k))
                .collect();
            Subspace::span(3, &gens).unwrap()
        };
        let (k1, k2) = (pick(mask1), pick(mask2));
        prop_assert_eq!(
            k1.dim() + k2.dim(),
            k1.join(&k2).unwrap().dim() + k1.meet(&k2).unwrap().dim()
        );
    }

    // ---- Ray-set algebra vs pointwise membership --------------------------

    #[test]
    fn set_operations_are_pointwise(s1 in rayset(3), s2 in rayset(3)) {
        let mut rays = probe_rays(3);
        rays.extend(s1.sample_rays());
        rays.extend(s2.sample_rays());
        let union = s1.union(&s2).unwrap();
        let meet = s1.intersect(&s2).unwrap();
        let diff = s1.difference(&s2).unwrap();
        let comp = s1.complement();
        for ray in &rays {
            let (in1, in2) = (s1.contains(ray).unwrap(), s2.contains(ray).unwrap());
            prop_assert_eq!(union.contains(ray).unwrap(), in1 || in2);
            prop_assert_eq!(meet.contains(ray).unwrap(), in1 && in2);
            prop_assert_eq!(diff.contains(ray).unwrap(), in1 && !in2);
            prop_assert_eq!(comp.contains(ray).unwrap(), !in1);
        }
    }

    #[test]
    fn equality_and_order_are_semantic(s1 in rayset(2), s2 in rayset(2)) {
        if s1.leq(&s2).unwrap() {
            for ray in s1.sample_rays() {
                prop_assert!(s2.contains(&ray).unwrap());
            }
        } else {
            // A concrete witness of non-inclusion must exist.
            let witness = s1.difference(&s2).unwrap().sample_ray().unwrap();
            prop_assert!(s1.contains(&witness).unwrap());
            prop_assert!(!s2.contains(&witness).unwrap());
        }
        prop_assert_eq!(
            s1.equals(&s2).unwrap(),
            s1.leq(&s2).unwrap() && s2.leq(&s1).unwrap()
        );
    }

    // ---- Pseudo-negation signatures ---------------------------------------

    #[test]
    fn pseudo_neg_of_embedding_is_embedding_of_ortho(k in subspace(3)) {
        prop_assert!(embed_r(&k)
            .pseudo_neg()
            .equals(&embed_r(&k.ortho()))
            .unwrap());
    }

    #[test]
    fn de_morgan_equality_always(s1 in rayset(3), s2 in rayset(3)) {
        let lhs = s1.pseudo_neg().intersect(&s2.pseudo_neg()).unwrap();
        let rhs = s1.union(&s2).unwrap().pseudo_neg();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn de_morgan_other_direction_inequality(s1 in rayset(3), s2 in rayset(3)) {
        let lhs = s1.pseudo_neg().union(&s2.pseudo_neg()).unwrap();
        let rhs = s1.intersect(&s2).unwrap().pseudo_neg();
        prop_assert!(lhs.leq(&rhs).unwrap());
    }

    #[test]
    fn excluded_middle_iff_trivial(s in rayset(3)) {
        let lem = s.union(&s.pseudo_neg()).unwrap();
        let trivial = s.is_empty() || s.equals(&RaySet::top(3)).unwrap();
        prop_assert_eq!(lem.equals(&RaySet::top(3)).unwrap(), trivial);
        // The doubly negated disjunction is always top.
        prop_assert!(lem.pseudo_neg().pseudo_neg().equals(&RaySet::top(3)).unwrap());
    }

    #[test]
    fn negated_excluded_middle_iff_degenerate_span(s in rayset(3)) {
        // ~S ∨ ~~S = ⊤ exactly when span(S) is 0 or the whole space; on
        // embedded subspaces that reduces to S ∈ {∅, ⊤}.
        let lem = s.pseudo_neg().union(&s.pseudo_neg().pseudo_neg()).unwrap();
        let degenerate = s.span_of().is_zero() || s.span_of().is_full();
        prop_assert_eq!(lem.equals(&RaySet::top(3)).unwrap(), degenerate);
    }

    #[test]
    fn span_identity(ks in proptest::collection::vec(subspace(3), 1..4)) {
        let union = qlogic::rayset::g_of_generators(3, &ks).unwrap();
        let double_neg = union.pseudo_neg().pseudo_neg();
        let joined = Subspace::join_all(3, ks.iter()).unwrap();
        prop_assert!(double_neg.equals(&embed_r(&joined)).unwrap());
    }

    #[test]
    fn double_pseudo_neg_is_span_closure(s in rayset(3)) {
        prop_assert!(s
            .pseudo_neg()
            .pseudo_neg()
            .equals(&embed_r(&s.span_of()))
            .unwrap());
        // Hence S ≤ ~~S and ~~~S = ~S.
        prop_assert!(s.leq(&s.pseudo_neg().pseudo_neg()).unwrap());
        prop_assert!(s
            .pseudo_neg()
            .pseudo_neg()
            .pseudo_neg()
            .equals(&s.pseudo_neg())
            .unwrap());
    }
}

mod fixed_witnesses {
    use super::*;

    /// ~S ∨ ~~S reaches ⊤ on a set that is neither ∅ nor ⊤: two orthogonal
    /// lines span the plane, so the iff above cannot be strengthened to
    /// "S ∈ {∅, ⊤}" for general ray sets (it can on embedded subspaces).
    #[test]
    fn negated_excluded_middle_boundary_case() {
        let e1 = Subspace::line(2, &Vector::basis(2, 0)).unwrap();
        let e2 = Subspace::line(2, &Vector::basis(2, 1)).unwrap();
        let s = embed_r(&e1).union(&embed_r(&e2)).unwrap();
        assert!(!s.is_empty());
        assert!(!s.equals(&RaySet::top(2)).unwrap());
        let lem = s.pseudo_neg().union(&s.pseudo_neg().pseudo_neg()).unwrap();
        assert!(lem.equals(&RaySet::top(2)).unwrap());
    }

    /// On the image of r the two excluded-middle style laws degenerate
    /// together: for S = r(K), both S ∨ ~S = ⊤ and ~S ∨ ~~S = ⊤ hold
    /// exactly when K ∈ {0, H}.
    #[test]
    fn excluded_middle_on_embedded_subspaces() {
        let lines = [
            Subspace::zero(2),
            Subspace::line(2, &Vector::basis(2, 0)).unwrap(),
            Subspace::line(2, &Vector::from_ints(&[1, 1])).unwrap(),
            Subspace::full(2),
        ];
        for k in &lines {
            let s = embed_r(k);
            let trivial = k.is_zero() || k.is_full();
            let lem = s.union(&s.pseudo_neg()).unwrap();
            let lem2 = s.pseudo_neg().union(&s.pseudo_neg().pseudo_neg()).unwrap();
            assert_eq!(lem.equals(&RaySet::top(2)).unwrap(), trivial, "{k}");
            assert_eq!(lem2.equals(&RaySet::top(2)).unwrap(), trivial, "{k}");
        }
    }

    /// Strictness of the one-directional De Morgan law in ℂ²: two distinct
    /// lines intersect in no ray, so the right side is ⊤ while the left side
    /// is only two rays.
    #[test]
    fn de_morgan_strictness_witness() {
        let s1 = embed_r(&Subspace::line(2, &Vector::basis(2, 0)).unwrap());
        let s2 = embed_r(&Subspace::line(2, &Vector::from_ints(&[1, 1])).unwrap());
        let lhs = s1.pseudo_neg().union(&s2.pseudo_neg()).unwrap();
        let rhs = s1.intersect(&s2).unwrap().pseudo_neg();
        assert!(lhs.leq(&rhs).unwrap());
        assert!(!lhs.equals(&rhs).unwrap());
        assert!(rhs.equals(&RaySet::top(2)).unwrap());
    }
}
