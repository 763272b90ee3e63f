//! Every classical probability model satisfies the inequality — exactly.
//!
//! A classical model here is a probability distribution over the 16
//! deterministic truth assignments to (A1, A2, B1, B2). Event probabilities
//! are exact rationals, so the inequality check involves no tolerance at
//! all. The sweep covers the 16 vertices of the polytope, the uniform
//! distribution, and a seeded batch of random rational models.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example classical_models
//! ```

use rand::SeedableRng;

use qlogic::bell::{classical_satisfies, ClassicalModel};

fn main() {
    let mut satisfied = 0usize;
    for idx in 0..16u32 {
        let model = ClassicalModel::vertex(
            idx >> 3 & 1 == 1,
            idx >> 2 & 1 == 1,
            idx >> 1 & 1 == 1,
            idx & 1 == 1,
        );
        if classical_satisfies(&model) {
            satisfied += 1;
        }
    }
    println!("vertices_checked=16 vertices_satisfying={satisfied}");

    let uniform = ClassicalModel::uniform();
    let (lhs, rhs) = uniform.bell_sides_exact();
    println!("uniform_lhs={lhs} uniform_rhs={rhs} satisfied={}", lhs <= rhs);

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC1A55);
    let sweep = 2000;
    let mut violations = 0usize;
    let mut tight = None;
    for _ in 0..sweep {
        let model = ClassicalModel::random(&mut rng);
        let (lhs, rhs) = model.bell_sides_exact();
        if lhs > rhs {
            violations += 1;
        }
        let slack = &rhs - &lhs;
        if tight.as_ref().map_or(true, |t| &slack < t) {
            tight = Some(slack);
        }
    }
    println!("random_models={sweep} violations={violations}");
    println!("smallest_slack={}", tight.unwrap());
}
