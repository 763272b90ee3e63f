//! The maps tying ray sets to ideals of subspaces: r, f and g.
//!
//! * `r(K)` embeds a subspace as its set of rays.
//! * `f(S) = {K : r(K) ⊆ S}` sends a ray set to a distributive ideal of
//!   subspaces — infinite, so it is represented intensionally by the
//!   membership test `f_contains`.
//! * `g` unions the rays of an ideal's members; on finitely generated
//!   ideals the generators suffice.
//!
//! The roundtrip g(f(S)) = S is what makes the completion of the quantum
//! lattice a power set — Boolean — rather than a proper Heyting algebra.
//! The example replays the proof steps on concrete sets, plus the ideal
//! conditions (downward closure, distributive-join closure) for f(S).
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example embedding_roundtrip
//! ```

use qlogic::exact::Vector;
use qlogic::rayset::{embed_r, g_of_generators, has_distributive_join, RaySet};
use qlogic::subspace::Subspace;
use qlogic::suite::iso_suite;

fn main() {
    let dim = 3;
    let e1 = Subspace::line(dim, &Vector::basis(dim, 0)).unwrap();
    let e2 = Subspace::line(dim, &Vector::basis(dim, 1)).unwrap();
    let plane = e1.join(&e2).unwrap();

    // f on the three canonical ray sets.
    let top = RaySet::top(dim);
    let bot = RaySet::empty(dim);
    println!("f(top)_contains_full={}", top.f_contains(&Subspace::full(dim)).unwrap());
    println!("f(bot)_contains_zero={}", bot.f_contains(&Subspace::zero(dim)).unwrap());
    println!("f(bot)_contains_line={}", bot.f_contains(&e1).unwrap());

    // f of a singleton ray set is the principal ideal of the ray's line.
    let singleton = embed_r(&e1);
    println!("f(r(e1))_contains_e1={}", singleton.f_contains(&e1).unwrap());
    println!("f(r(e1))_contains_plane={}", singleton.f_contains(&plane).unwrap());

    // g(f(S)) = S for a union of embedded subspaces: probe f with the
    // generators, some unrelated subspaces, and a sampled ray per cell.
    let s = embed_r(&e1).union(&embed_r(&e2)).unwrap();
    let mut probes = vec![
        e1.clone(),
        e2.clone(),
        plane.clone(),
        Subspace::full(dim),
        Subspace::line(dim, &Vector::from_ints(&[1, 1, 1])).unwrap(),
    ];
    for ray in s.sample_rays() {
        probes.push(Subspace::line(dim, ray.representative()).unwrap());
    }
    let accepted: Vec<Subspace> = probes
        .iter()
        .filter(|k| s.f_contains(k).unwrap())
        .cloned()
        .collect();
    println!("probes={} accepted={}", probes.len(), accepted.len());
    let rebuilt = g_of_generators(dim, &accepted).unwrap();
    println!("g_of_accepted_equals_S={}", rebuilt.equals(&s).unwrap());

    // Ideal condition 2 hinges on distributive joins, and for finite
    // families those are exactly the ones whose join is already a member.
    println!(
        "family_without_join_distributive={}",
        has_distributive_join(dim, &[e1.clone(), e2.clone()]).unwrap()
    );
    println!(
        "family_with_join_distributive={}",
        has_distributive_join(dim, &[e1, e2, plane]).unwrap()
    );

    // The randomized property run over all of the above.
    for dim in [2, 3] {
        let report = iso_suite(dim, 120, 0xF0);
        println!(
            "iso_suite dim={dim} trials={} ok={}",
            report.trials,
            report.all_hold()
        );
    }
}
