//! Bruns–Lakser completion of finite lattices, and the Boolean collapse.
//!
//! The "Chinese lantern" MO_n (bottom, top, n orthocomplementary atom pairs)
//! is the finite analogue of the quantum lattice of ℂ²: non-distributive as
//! soon as n ≥ 2. Completing it by distributive ideals produces the Boolean
//! algebra 2^(2n) — the new disjunctions are classical, not intuitionistic,
//! and the Heyting negation of the completion is strictly weaker than the
//! embedded orthocomplement at every atom.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example ideal_completion
//! ```

use qlogic::ideal::{DiCompletion, FiniteLattice, IdealSet};

fn main() {
    for pairs in 1..=3 {
        let l = FiniteLattice::mo(pairs);
        let di = DiCompletion::new(&l).unwrap();
        println!(
            "MO{pairs}: elements={} ideals={} distributive={} boolean={}",
            l.n(),
            di.count(),
            di.is_distributive(),
            di.is_boolean()
        );
    }

    // The two negations on MO2, atom by atom. Elements: 0=bottom,
    // 1,2 = first atom pair, 3,4 = second pair, 5 = top.
    let l = FiniteLattice::mo(2);
    let di = DiCompletion::new(&l).unwrap();
    for atom in 1..=4usize {
        let down_not = l.down(l.ortho(atom).unwrap());
        let not_down = di.neg(&l.down(atom));
        println!(
            "atom={atom} down_ortho={down_not:?} heyting_neg={not_down:?} strict={}",
            down_not != not_down
        );
    }

    // Condition 2 in action: which subsets of MO2 have distributive joins?
    let samples: [(&str, IdealSet); 3] = [
        ("one atom pair {a,a'}", IdealSet::from_members(&[1, 2])),
        ("two unrelated atoms {a,b}", IdealSet::from_members(&[1, 3])),
        ("all four atoms", IdealSet::from_members(&[1, 2, 3, 4])),
    ];
    for (label, subset) in samples {
        println!(
            "distributive_join[{label}]={}",
            l.is_distributive_join(&subset).unwrap()
        );
    }

    // Hence {0} ∪ atoms is NOT an ideal (the all-atoms join drags top in),
    // while dropping any atom yields one.
    println!(
        "all_atoms_downset_is_ideal={}",
        l.is_distributive_ideal(&IdealSet::from_members(&[0, 1, 2, 3, 4]))
    );
    println!(
        "three_atoms_downset_is_ideal={}",
        l.is_distributive_ideal(&IdealSet::from_members(&[0, 1, 2, 3]))
    );

    // A distributive lattice is its own completion: the four-element square.
    let square = FiniteLattice::boolean(2);
    let di = DiCompletion::new(&square).unwrap();
    println!(
        "bool2: elements={} ideals={} (completion adds nothing)",
        square.n(),
        di.count()
    );
}
