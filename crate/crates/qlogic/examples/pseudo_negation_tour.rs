//! The ray-set algebra and its pseudo-negation `~`.
//!
//! Ray sets are subsets of the space of one-dimensional subspaces of ℂ^d,
//! represented exactly as finite unions of "subspace minus subspaces" cells.
//! `~S` collects the rays orthogonal to everything in S. The tour walks
//! through the signatures that make `~` intuitionistic rather than
//! classical:
//!
//! * S ∨ ~S can miss rays (no excluded middle), yet ~~(S ∨ ~S) is always ⊤;
//! * only one De Morgan law is an equality, the other is one-directional
//!   and strictly so;
//! * double pseudo-negation closes a set to the rays of its linear span.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example pseudo_negation_tour
//! ```

use qlogic::exact::Vector;
use qlogic::rayset::{embed_r, Ray, RaySet};
use qlogic::subspace::Subspace;

fn main() {
    let dim = 2;
    let e1 = Subspace::line(dim, &Vector::basis(dim, 0)).unwrap();
    let e2 = Subspace::line(dim, &Vector::basis(dim, 1)).unwrap();
    let top = RaySet::top(dim);

    let s = embed_r(&e1);
    println!("S={s}");
    println!("~S={}", s.pseudo_neg());
    println!("~~S={}", s.pseudo_neg().pseudo_neg());

    // Excluded middle fails: the diagonal ray is in neither S nor ~S.
    let lem = s.union(&s.pseudo_neg()).unwrap();
    let diagonal = Ray::new(&Vector::from_ints(&[1, 1])).unwrap();
    println!("S_or_notS={lem}");
    println!("S_or_notS_is_top={}", lem.equals(&top).unwrap());
    println!("diagonal_in_S_or_notS={}", lem.contains(&diagonal).unwrap());
    println!(
        "double_neg_of_lem_is_top={}",
        lem.pseudo_neg().pseudo_neg().equals(&top).unwrap()
    );

    // De Morgan: equality one way, strict inequality the other.
    let s1 = embed_r(&e1);
    let s2 = embed_r(&Subspace::line(dim, &Vector::from_ints(&[1, 1])).unwrap());
    let de_morgan_eq = s1
        .pseudo_neg()
        .intersect(&s2.pseudo_neg())
        .unwrap()
        .equals(&s1.union(&s2).unwrap().pseudo_neg())
        .unwrap();
    println!("de_morgan_equality={de_morgan_eq}");

    let weaker = s1.pseudo_neg().union(&s2.pseudo_neg()).unwrap();
    let stronger = s1.intersect(&s2).unwrap().pseudo_neg();
    println!(
        "one_direction_holds={} strict={}",
        weaker.leq(&stronger).unwrap(),
        !weaker.equals(&stronger).unwrap()
    );

    // Span identity: ~~ of a union of embedded subspaces is the embedded join.
    let union = embed_r(&e1).union(&embed_r(&e2)).unwrap();
    let closed = union.pseudo_neg().pseudo_neg();
    println!("union={union}");
    println!("span_closure={closed}");
    println!(
        "span_closure_is_r_of_join={}",
        closed.equals(&embed_r(&e1.join(&e2).unwrap())).unwrap()
    );

    // A punctured plane: cells can subtract subspaces.
    let punctured = RaySet::from_cells(dim, vec![(Subspace::full(dim), vec![e1])]).unwrap();
    println!("punctured={punctured}");
    println!("punctured_span={}", punctured.span_of());
    println!("punctured_pseudo_neg={}", punctured.pseudo_neg());
}
