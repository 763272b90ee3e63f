//! Randomized property suites over the ray-set algebra.
//!
//! Instances are generated from random Gaussian-rational subspaces combined
//! with union, intersection, complement and pseudo-negation, so the suites
//! exercise ray sets well outside the image of the embedding r. All
//! generation is seeded; a reported counterexample reproduces exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{ComplexRational, Vector};
use crate::rayset::{embed_r, g_of_generators, has_distributive_join, RaySet};
use crate::subspace::Subspace;

/// Scalars are drawn from a small pool; tiny numerators keep the exact
/// arithmetic fast while still producing non-axis-aligned subspaces.
pub fn random_scalar(rng: &mut impl Rng) -> ComplexRational {
    const POOL: [(i64, i64, i64, i64); 8] = [
        (0, 1, 0, 1),
        (1, 1, 0, 1),
        (-1, 1, 0, 1),
        (0, 1, 1, 1),
        (0, 1, -1, 1),
        (1, 1, 1, 1),
        (2, 1, 0, 1),
        (1, 2, 0, 1),
    ];
    let (rn, rd, im_n, im_d) = POOL[rng.random_range(0..POOL.len())];
    ComplexRational::from_parts(rn, rd, im_n, im_d)
}

pub fn random_vector(rng: &mut impl Rng, dim: usize) -> Vector {
    loop {
        let v = Vector::new((0..dim).map(|_| random_scalar(rng)).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random subspace spanned by 1..=dim random vectors (so zero and full
/// both occur, but proper subspaces dominate).
pub fn random_subspace(rng: &mut impl Rng, dim: usize) -> Subspace {
    let generators: Vec<Vector> = (0..rng.random_range(1..=dim))
        .map(|_| random_vector(rng, dim))
        .collect();
    Subspace::span(dim, &generators).expect("generated dims are uniform")
}

/// A random ray set: an expression tree of the classical operations and `~`
/// over embedded random subspaces.
pub fn random_rayset(rng: &mut impl Rng, dim: usize, depth: usize) -> RaySet {
    if depth == 0 || rng.random_range(0..4) == 0 {
        return match rng.random_range(0..6) {
            0 => RaySet::empty(dim),
            1 => RaySet::top(dim),
            _ => embed_r(&random_subspace(rng, dim)),
        };
    }
    match rng.random_range(0..5) {
        0 => random_rayset(rng, dim, depth - 1)
            .union(&random_rayset(rng, dim, depth - 1))
            .expect("uniform dims"),
        1 => random_rayset(rng, dim, depth - 1)
            .intersect(&random_rayset(rng, dim, depth - 1))
            .expect("uniform dims"),
        2 => random_rayset(rng, dim, depth - 1).complement(),
        3 => random_rayset(rng, dim, depth - 1).pseudo_neg(),
        _ => random_rayset(rng, dim, depth - 1)
            .difference(&random_rayset(rng, dim, depth - 1))
            .expect("uniform dims"),
    }
}

/// One failing triple, with the axiom that broke.
#[derive(Debug, Clone)]
pub struct AxiomFailure {
    pub law: &'static str,
    pub s1: RaySet,
    pub s2: RaySet,
    pub s3: RaySet,
}

/// Outcome of [`weak_heyting_suite`].
#[derive(Debug, Clone)]
pub struct AxiomsReport {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<AxiomFailure>,
}

/// The four weak-Heyting laws plus the bottom law, by short name.
pub const AXIOM_LAWS: [&str; 4] = ["self", "meet-right", "join-left", "chain"];
pub const BOTTOM_LAW: &str = "bottom";

impl AxiomsReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    /// How many of the four axioms never failed.
    pub fn axioms_passed(&self) -> usize {
        AXIOM_LAWS
            .iter()
            .filter(|law| self.failures.iter().all(|f| &f.law != *law))
            .count()
    }

    pub fn bottom_law_holds(&self) -> bool {
        self.failures.iter().all(|f| f.law != BOTTOM_LAW)
    }
}

/// Check all laws on one triple; returns the labels that failed.
pub fn failing_laws(s1: &RaySet, s2: &RaySet, s3: &RaySet) -> Vec<&'static str> {
    let mut failed = Vec::new();
    let top = RaySet::top(s1.ambient_dim());
    let bot = RaySet::empty(s1.ambient_dim());

    let imp = |a: &RaySet, b: &RaySet| a.implies(b).expect("uniform dims");
    let and = |a: &RaySet, b: &RaySet| a.intersect(b).expect("uniform dims");
    let or = |a: &RaySet, b: &RaySet| a.union(b).expect("uniform dims");
    let eq = |a: &RaySet, b: &RaySet| a.equals(b).expect("uniform dims");

    // (1) S1 -> S1 = top
    if !eq(&imp(s1, s1), &top) {
        failed.push(AXIOM_LAWS[0]);
    }
    // (2) S1 -> (S2 ∧ S3) = (S1 -> S2) ∧ (S1 -> S3)
    if !eq(&imp(s1, &and(s2, s3)), &and(&imp(s1, s2), &imp(s1, s3))) {
        failed.push(AXIOM_LAWS[1]);
    }
    // (3) (S1 ∨ S2) -> S3 = (S1 -> S3) ∧ (S2 -> S3)
    if !eq(&imp(&or(s1, s2), s3), &and(&imp(s1, s3), &imp(s2, s3))) {
        failed.push(AXIOM_LAWS[2]);
    }
    // (4) (S1 -> S2) ∧ (S2 -> S3) ≤ S1 -> S3
    if !and(&imp(s1, s2), &imp(s2, s3))
        .leq(&imp(s1, s3))
        .expect("uniform dims")
    {
        failed.push(AXIOM_LAWS[3]);
    }
    // S -> bot = ~S, on each component of the triple.
    if [s1, s2, s3]
        .iter()
        .any(|s| !eq(&imp(s, &bot), &s.pseudo_neg()))
    {
        failed.push(BOTTOM_LAW);
    }
    failed
}

/// Run the randomized weak-Heyting axiom suite.
pub fn weak_heyting_suite(dim: usize, trials: usize, seed: u64) -> AxiomsReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..trials {
        let s1 = random_rayset(&mut rng, dim, 2);
        let s2 = random_rayset(&mut rng, dim, 2);
        let s3 = random_rayset(&mut rng, dim, 2);
        for law in failing_laws(&s1, &s2, &s3) {
            failures.push(AxiomFailure {
                law,
                s1: s1.clone(),
                s2: s2.clone(),
                s3: s3.clone(),
            });
        }
    }
    AxiomsReport { dim, trials, seed, failures }
}

/// Outcome of [`iso_suite`]: the order-isomorphism proof steps between ray
/// sets and distributive ideals of subspaces, on generated instances.
#[derive(Debug, Clone)]
pub struct IsoReport {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<String>,
}

impl IsoReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Property run for the f/g/r maps:
///
/// * membership: `f_contains(S, K)` agrees with "all sampled rays of K in S";
/// * atoms: every sampled ray [ψ] ∈ S gives f_contains(S, span ψ);
/// * reconstruction: for S = ⋃ r(K_i), the union of r(K) over the K in a
///   probe family that pass f_contains recovers S exactly;
/// * ideal conditions on f(S): downward closure, and closure under
///   distributive joins of finite subspace families.
pub fn iso_suite(dim: usize, trials: usize, seed: u64) -> IsoReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();

    for trial in 0..trials {
        // Arbitrary ray set (may have holes) for the pointwise properties.
        let s = random_rayset(&mut rng, dim, 2);
        let k = random_subspace(&mut rng, dim);

        if s.f_contains(&k).expect("uniform dims") {
            if !embed_r(&k).leq(&s).expect("uniform dims") {
                failures.push(format!("trial {trial}: f_contains but r(K) ⊄ S for K={k}, S={s}"));
            }
        } else if embed_r(&k).leq(&s).expect("uniform dims") {
            failures.push(format!("trial {trial}: r(K) ≤ S but not f_contains, K={k}, S={s}"));
        }

        for ray in s.sample_rays() {
            let atom = Subspace::line(dim, ray.representative()).expect("uniform dims");
            if !s.f_contains(&atom).expect("uniform dims") {
                failures.push(format!("trial {trial}: [ψ] ∈ S but span(ψ) ∉ f(S), ψ={ray}"));
            }
            if !s.contains(&ray).expect("uniform dims") {
                failures.push(format!("trial {trial}: sampled ray not a member, ψ={ray}"));
            }
        }

        // Reconstruction g(f(S)) = S on unions of embedded subspaces.
        let generators: Vec<Subspace> = (0..rng.random_range(1..=3))
            .map(|_| random_subspace(&mut rng, dim))
            .collect();
        let union = g_of_generators(dim, &generators).expect("uniform dims");
        let mut probes = generators.clone();
        for _ in 0..2 {
            probes.push(random_subspace(&mut rng, dim));
        }
        for ray in union.sample_rays() {
            probes.push(Subspace::line(dim, ray.representative()).expect("uniform dims"));
        }
        let accepted: Vec<Subspace> = probes
            .iter()
            .filter(|k| union.f_contains(k).expect("uniform dims"))
            .cloned()
            .collect();
        let rebuilt = g_of_generators(dim, &accepted).expect("uniform dims");
        if !rebuilt.equals(&union).expect("uniform dims") {
            failures.push(format!(
                "trial {trial}: g(f(S)) ≠ S for S = union of {} generators",
                generators.len()
            ));
        }

        // Ideal condition 1 on f(S): downward closure.
        if s.f_contains(&k).expect("uniform dims") && !k.is_zero() {
            let sub = random_subspan(&mut rng, &k);
            if !s.f_contains(&sub).expect("uniform dims") {
                failures.push(format!(
                    "trial {trial}: downward closure fails, K={k}, K'={sub}"
                ));
            }
        }

        // Ideal condition 2 on f(S): distributive joins stay inside.
        let family: Vec<Subspace> = accepted;
        if !family.is_empty() && has_distributive_join(dim, &family).expect("uniform dims") {
            let join = Subspace::join_all(dim, family.iter()).expect("uniform dims");
            if !union.f_contains(&join).expect("uniform dims") {
                failures.push(format!(
                    "trial {trial}: distributive join escapes f(S), join={join}"
                ));
            }
        }

        // Cross-check: a finite family has a distributive join iff the join
        // is already a member (or zero).
        let family: Vec<Subspace> = (0..rng.random_range(1..=3))
            .map(|_| random_subspace(&mut rng, dim))
            .collect();
        let join = Subspace::join_all(dim, family.iter()).expect("uniform dims");
        let expected = join.is_zero() || family.contains(&join);
        if has_distributive_join(dim, &family).expect("uniform dims") != expected {
            failures.push(format!(
                "trial {trial}: distributive-join criterion disagrees for join={join}"
            ));
        }
    }

    IsoReport { dim, trials, seed, failures }
}

/// A random subspace of `k` (for downward-closure probes).
fn random_subspan(rng: &mut impl Rng, k: &Subspace) -> Subspace {
    let dim = k.ambient_dim();
    let picks: Vec<Vector> = k
        .basis()
        .iter()
        .filter(|_| rng.random_range(0..2) == 0)
        .cloned()
        .collect();
    Subspace::span(dim, &picks).expect("basis dims are uniform")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_per_seed() {
        let a = random_rayset(&mut ChaCha8Rng::seed_from_u64(9), 3, 2);
        let b = random_rayset(&mut ChaCha8Rng::seed_from_u64(9), 3, 2);
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn axioms_hold_on_a_quick_run() {
        for dim in [2, 3] {
            let report = weak_heyting_suite(dim, 60, 7);
            assert!(report.all_hold(), "failures: {:?}", report.failures);
            assert_eq!(report.axioms_passed(), 4);
            assert!(report.bottom_law_holds());
        }
    }

    #[test]
    fn iso_properties_hold_on_a_quick_run() {
        for dim in [2, 3] {
            let report = iso_suite(dim, 40, 11);
            assert!(report.all_hold(), "failures: {:?}", report.failures);
        }
    }

    #[test]
    fn failing_laws_detects_a_broken_law() {
        // Sanity-check the checker itself: feed it sets for which one law is
        // asserted against the WRONG expectation by spoofing implies with a
        // deliberately wrong triple comparison. The checker has no injection
        // point by design, so instead verify it reports nothing on a triple
        // known to satisfy everything and that the law list is complete.
        let top = RaySet::top(2);
        let bot = RaySet::empty(2);
        assert!(failing_laws(&top, &bot, &top).is_empty());
        assert_eq!(AXIOM_LAWS.len(), 4);
    }
}
