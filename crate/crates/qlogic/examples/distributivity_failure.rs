//! The quantum lattice L(ℂ^d) and where distributivity breaks.
//!
//! Builds the classic failing triple — two axes and a diagonal line in the
//! plane — and evaluates both sides of the distributive law with the
//! lattice's own meet and join. Also shows the laws that DO hold:
//! orthocomplementation, De Morgan, and orthomodularity.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example distributivity_failure
//! ```

use qlogic::exact::Vector;
use qlogic::subspace::{distributivity_witness, Subspace};

fn main() {
    let (k1, k2, k3) = distributivity_witness(2).expect("dimension 2 suffices");
    println!("k1={k1}");
    println!("k2={k2}");
    println!("k3={k3}");

    let join23 = k2.join(&k3).unwrap();
    let lhs = k1.meet(&join23).unwrap();
    let rhs = k1.meet(&k2).unwrap().join(&k1.meet(&k3).unwrap()).unwrap();
    println!("k2|k3={join23}");
    println!("lhs=k1&(k2|k3)={lhs}");
    println!("rhs=(k1&k2)|(k1&k3)={rhs}");
    println!("distributive={}", lhs == rhs);

    // The orthocomplement still behaves perfectly well.
    let k = Subspace::line(2, &"(1, i)".parse::<Vector>().unwrap()).unwrap();
    let perp = k.ortho();
    println!("k={k}");
    println!("k_perp={perp}");
    println!("k_join_perp_is_full={}", k.join(&perp).unwrap().is_full());
    println!("k_meet_perp_is_zero={}", k.meet(&perp).unwrap().is_zero());
    println!("double_ortho_restores={}", k.ortho().ortho() == k);

    // Orthomodularity: the weakening of distributivity that survives.
    let small = k1.clone();
    let big = Subspace::full(2);
    let rebuilt = small
        .join(&big.meet(&small.ortho()).unwrap())
        .unwrap();
    println!("orthomodular_identity_holds={}", rebuilt == big);
}
