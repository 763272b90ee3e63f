//! Validating the implication's closed form against its definition.
//!
//! The implication is defined atom by atom: for S1 ≠ ⊥,
//!
//! ```text
//! S1 → S2  =  ⋀ { ~~(~s ∨ (s ∧ S2))  :  rays s ≤ S1 }
//! ```
//!
//! The implementation uses the finite closed form `~(S1 ∖ S2)` instead —
//! a derived reduction, not a definition, so it is gated on an independent
//! oracle: replace the ray space by a small fixed universe U, compute `~` by
//! literal orthogonality filtering over U, and compare both formulas on
//! EVERY pair of subsets of U. Bitmask arithmetic makes the exhaustive
//! comparison cheap.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example implication_oracle
//! ```

use qlogic::finite_model::FiniteModel;

fn main() {
    for (model, label) in [
        (FiniteModel::standard_d2(), "d=2"),
        (FiniteModel::standard_d3(), "d=3"),
    ] {
        let full = model.full();
        let universe = model.size();
        let mut disagreements = 0u64;
        for s1 in 0..=full {
            for s2 in 0..=full {
                if model.implies_closed(s1, s2) != model.implies_atomwise(s1, s2) {
                    disagreements += 1;
                }
            }
        }
        let pairs = (full as u64 + 1) * (full as u64 + 1);
        println!("{label} universe={universe} pairs={pairs} disagreements={disagreements}");
    }

    // A few spot values in the d=2 model, printed as bitmasks.
    let model = FiniteModel::standard_d2();
    for (i, ray) in model.rays().iter().enumerate() {
        println!("ray[{i}]={ray} orthogonal_mask={:#08b}", model.tilde(1 << i));
    }
    let s1 = 0b000011; // rays 0 and 1: the two axes
    let s2 = 0b000001;
    println!(
        "implies({s1:#08b}, {s2:#08b}) = {:#08b}",
        model.implies_closed(s1, s2)
    );
}
