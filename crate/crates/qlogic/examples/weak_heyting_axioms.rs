//! The weak-Heyting implication and its four axioms, on random instances.
//!
//! `S1 → S2 = ~(S1 ∖ S2)` equips the ray-set lattice with an implication
//! that satisfies, with exact equality:
//!
//! 1. S → S = ⊤
//! 2. S1 → (S2 ∧ S3) = (S1 → S2) ∧ (S1 → S3)
//! 3. (S1 ∨ S2) → S3 = (S1 → S3) ∧ (S2 → S3)
//! 4. (S1 → S2) ∧ (S2 → S3) ≤ S1 → S3
//!
//! together with S → ⊥ = ~S. It is NOT a relative pseudo-complement: the
//! adjunction direction S3 ∧ S1 ≤ S2 ⇏ S3 ≤ S1 → S2 fails, which the demo
//! exhibits concretely.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example weak_heyting_axioms
//! ```

use qlogic::exact::Vector;
use qlogic::rayset::{embed_r, RaySet};
use qlogic::subspace::Subspace;
use qlogic::suite::weak_heyting_suite;

fn main() {
    for dim in [2, 3, 4] {
        let report = weak_heyting_suite(dim, 200, 0xA51);
        println!(
            "dim={dim} trials={} axioms={}/4 bottom_law={}",
            report.trials,
            report.axioms_passed(),
            if report.bottom_law_holds() { "hold" } else { "FAIL" },
        );
    }

    // One worked instance in the plane.
    let dim = 2;
    let s1 = embed_r(&Subspace::line(dim, &Vector::basis(dim, 0)).unwrap());
    let s2 = embed_r(&Subspace::line(dim, &Vector::basis(dim, 1)).unwrap());
    let imp = s1.implies(&s2).unwrap();
    println!("s1={s1}");
    println!("s2={s2}");
    println!("s1_implies_s2={imp}");
    println!(
        "implies_to_bottom_is_pseudo_neg={}",
        s1.implies(&RaySet::empty(dim))
            .unwrap()
            .equals(&s1.pseudo_neg())
            .unwrap()
    );

    // Not a Heyting adjunction. Take S3 = the diagonal line: S3 ∧ S1 = ∅ ≤ S2,
    // so a relative pseudo-complement would force S3 ≤ S1 → S2; but
    // S1 → S2 = ~S1 = S2 and the diagonal is not in S2.
    let s3 = embed_r(&Subspace::line(dim, &Vector::from_ints(&[1, 1])).unwrap());
    let meets_into = s3.intersect(&s1).unwrap().leq(&s2).unwrap();
    let below_arrow = s3.leq(&s1.implies(&s2).unwrap()).unwrap();
    println!("adjunction_premise={meets_into}");
    println!("adjunction_conclusion={below_arrow}");
    println!("is_relative_pseudo_complement={}", !(meets_into && !below_arrow));
}
