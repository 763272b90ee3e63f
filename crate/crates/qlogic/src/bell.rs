//! Born-rule probabilities and the Bell-type inequality.
//!
//! Any probability function P on sentences obeying classical logic, monotone
//! under implication and subadditive under disjunction, satisfies
//!
//! ```text
//! P(A1 ∧ B1) ≤ P(A1 ∧ B2) + P(A2 ∧ B1) + P(¬A2 ∧ ¬B2)     (*)
//! ```
//!
//! for any four events. [`ClassicalModel`] represents such a P as a
//! distribution over the 16 deterministic outcome assignments and checks (*)
//! in exact rational arithmetic. The quantum side computes Born values
//! ⟨ψ|P_a ⊗ P_b|ψ⟩ for spin measurements on the singlet state and violates
//! (*) at suitable angles — which is precisely why no probability function
//! on the Boolean completion of the quantum lattice can reproduce the Born
//! rule.
//!
//! This module is the only floating-point corner of the crate (trigonometry
//! forces it); algebraic identities are held to [`ALGEBRAIC_TOL`], derived
//! margins to [`MARGIN_TOL`]. "A1" denotes the +1 outcome along axis a1 and
//! "¬A2" the −1 outcome along a2.

use num::complex::Complex64;
use num::{BigRational, Signed, Zero};

use crate::error::DimMismatch;

/// Tolerance for algebraic identities (norms, Hermiticity, completeness).
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Tolerance for derived quantities such as inequality margins.
pub const MARGIN_TOL: f64 = 1e-9;

/// Bell-module validation failure.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BellError {
    #[error(transparent)]
    Dim(#[from] DimMismatch),
    #[error("direction has norm {norm}, expected a unit vector")]
    NonUnitDirection { norm: f64 },
    #[error("state vector has squared norm {norm_sqr}, expected 1")]
    NotNormalized { norm_sqr: f64 },
    #[error("matrix is not a projector: {reason}")]
    NotAProjector { reason: String },
    #[error("invalid classical model: {reason}")]
    InvalidWeights { reason: String },
    #[error("scan resolution {0} is below the minimum of 4")]
    ResolutionTooCoarse(usize),
}

/// A unit state vector in ℂ^d.
#[derive(Debug, Clone)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<StateVector, BellError> {
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > ALGEBRAIC_TOL {
            return Err(BellError::NotNormalized { norm_sqr });
        }
        Ok(StateVector { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }
}

/// An orthogonal projector on ℂ^d: Hermitian and idempotent within tolerance.
#[derive(Debug, Clone)]
pub struct Projector {
    dim: usize,
    entries: Vec<Complex64>, // row-major dim×dim
}

impl Projector {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Projector, BellError> {
        assert_eq!(entries.len(), dim * dim, "projector entries must be dim×dim");
        let at = |r: usize, c: usize| entries[r * dim + c];
        for r in 0..dim {
            for c in 0..dim {
                if (at(r, c) - at(c, r).conj()).norm() > ALGEBRAIC_TOL {
                    return Err(BellError::NotAProjector {
                        reason: format!("not Hermitian at ({r},{c})"),
                    });
                }
            }
        }
        // P² = P, with the slightly looser tolerance squaring warrants.
        for r in 0..dim {
            for c in 0..dim {
                let mut acc = Complex64::ZERO;
                for k in 0..dim {
                    acc += at(r, k) * at(k, c);
                }
                if (acc - at(r, c)).norm() > 1e-10 {
                    return Err(BellError::NotAProjector {
                        reason: format!("not idempotent at ({r},{c})"),
                    });
                }
            }
        }
        Ok(Projector { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.dim + c]
    }

    /// Kronecker product, acting on the tensor-product space.
    pub fn kron(&self, other: &Projector) -> Projector {
        let dim = self.dim * other.dim;
        let mut entries = vec![Complex64::ZERO; dim * dim];
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        let r = r1 * other.dim + r2;
                        let c = c1 * other.dim + c2;
                        entries[r * dim + c] = self.at(r1, c1) * other.at(r2, c2);
                    }
                }
            }
        }
        Projector { dim, entries }
    }
}

/// A measurement axis: a unit vector in ℝ³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    x: f64,
    y: f64,
    z: f64,
}

impl Direction {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Direction, BellError> {
        let norm = (x * x + y * y + z * z).sqrt();
        if (norm - 1.0).abs() > ALGEBRAIC_TOL {
            return Err(BellError::NonUnitDirection { norm });
        }
        Ok(Direction { x, y, z })
    }

    /// Axis in the x–z plane at `angle` radians from +z. This is the plane
    /// the violation scan works in; one plane suffices for the maximal
    /// violation of the inequality, since only pairwise angles enter the
    /// singlet correlations.
    pub fn planar(angle: f64) -> Direction {
        Direction { x: angle.sin(), y: 0.0, z: angle.cos() }
    }

    pub fn components(&self) -> (f64, f64, f64) {
        (self.x, self.y, self.z)
    }

    /// Angle between two axes, in radians.
    pub fn angle_to(&self, other: &Direction) -> f64 {
        self.dot(other).clamp(-1.0, 1.0).acos()
    }

    pub fn dot(&self, other: &Direction) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }
}

/// Outcome sign of a two-valued spin measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(&self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Which of an experimenter's two measurement settings is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Setting {
    One,
    Two,
}

/// The four measurement axes of the inequality: two per side.
#[derive(Debug, Clone, Copy)]
pub struct BellConfig {
    pub a1: Direction,
    pub a2: Direction,
    pub b1: Direction,
    pub b2: Direction,
}

impl BellConfig {
    /// All four axes in the x–z plane, angles in radians.
    pub fn planar(a1: f64, a2: f64, b1: f64, b2: f64) -> BellConfig {
        BellConfig {
            a1: Direction::planar(a1),
            a2: Direction::planar(a2),
            b1: Direction::planar(b1),
            b2: Direction::planar(b2),
        }
    }

    fn axis_a(&self, s: Setting) -> &Direction {
        match s {
            Setting::One => &self.a1,
            Setting::Two => &self.a2,
        }
    }

    fn axis_b(&self, s: Setting) -> &Direction {
        match s {
            Setting::One => &self.b1,
            Setting::Two => &self.b2,
        }
    }
}

/// Spin projector (I ± n·σ)/2 onto the `sign` outcome along axis `n`.
pub fn spin_projector(n: &Direction, sign: Sign) -> Projector {
    let s = sign.factor();
    let (x, y, z) = n.components();
    let half = 0.5;
    let entries = vec![
        Complex64::new(half * (1.0 + s * z), 0.0),
        Complex64::new(half * s * x, -half * s * y),
        Complex64::new(half * s * x, half * s * y),
        Complex64::new(half * (1.0 - s * z), 0.0),
    ];
    Projector::new(2, entries).expect("(I ± n·σ)/2 is a projector for unit n")
}

/// Born value ⟨ψ|P|ψ⟩ — the probability of the outcome projected by P.
pub fn born_prob(psi: &StateVector, p: &Projector) -> Result<f64, BellError> {
    DimMismatch::check(psi.dim(), p.dim())?;
    let mut acc = Complex64::ZERO;
    for r in 0..p.dim() {
        for c in 0..p.dim() {
            acc += psi.amplitudes[r].conj() * p.at(r, c) * psi.amplitudes[c];
        }
    }
    debug_assert!(acc.im.abs() < ALGEBRAIC_TOL, "Born values are real");
    Ok(acc.re)
}

/// The singlet state (|01⟩ − |10⟩)/√2 on ℂ²⊗ℂ².
pub fn singlet() -> StateVector {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    StateVector::new(vec![
        Complex64::ZERO,
        Complex64::new(r, 0.0),
        Complex64::new(-r, 0.0),
        Complex64::ZERO,
    ])
    .expect("singlet is normalized")
}

/// Joint outcome probability ⟨ψ|P_sa^na ⊗ P_sb^nb|ψ⟩ for a two-qubit state,
/// computed from the tensor product. For the singlet this equals
/// (1 − sa·sb·cosθ)/4 with θ the angle between the axes; that closed form is
/// the test oracle, not the implementation.
pub fn joint_prob(
    psi: &StateVector,
    na: &Direction,
    sa: Sign,
    nb: &Direction,
    sb: Sign,
) -> Result<f64, BellError> {
    DimMismatch::check(psi.dim(), 4)?;
    let p = spin_projector(na, sa).kron(&spin_projector(nb, sb));
    born_prob(psi, &p)
}

/// Anything that can answer "probability that setting `a` yields `sa` and
/// setting `b` yields `sb`": singlet Born values or a classical model.
pub trait JointSource {
    fn joint(&self, a: Setting, sa: Sign, b: Setting, sb: Sign) -> f64;
}

/// Born-rule joint probabilities of the singlet at fixed axes.
pub struct SingletSource {
    config: BellConfig,
}

impl SingletSource {
    pub fn new(config: BellConfig) -> SingletSource {
        SingletSource { config }
    }
}

impl JointSource for SingletSource {
    fn joint(&self, a: Setting, sa: Sign, b: Setting, sb: Sign) -> f64 {
        joint_prob(
            &singlet(),
            self.config.axis_a(a),
            sa,
            self.config.axis_b(b),
            sb,
        )
        .expect("singlet lives on C^4")
    }
}

/// The two sides of the inequality (*).
#[derive(Debug, Clone, Copy)]
pub struct BellSides {
    pub lhs: f64,
    pub rhs: f64,
}

impl BellSides {
    pub fn margin(&self) -> f64 {
        self.lhs - self.rhs
    }
}

/// Evaluate both sides of (*): lhs = P(A1∧B1),
/// rhs = P(A1∧B2) + P(A2∧B1) + P(¬A2∧¬B2).
pub fn bell_sides(source: &impl JointSource) -> BellSides {
    use Setting::{One, Two};
    use Sign::{Minus, Plus};
    let lhs = source.joint(One, Plus, One, Plus);
    let rhs = source.joint(One, Plus, Two, Plus)
        + source.joint(Two, Plus, One, Plus)
        + source.joint(Two, Minus, Two, Minus);
    BellSides { lhs, rhs }
}

/// A classical probability model: exact rational weights over the 16
/// deterministic assignments of (A1, A2, B1, B2) ∈ {true, false}⁴.
///
/// Atom index bit layout: bit 3 = A1, bit 2 = A2, bit 1 = B1, bit 0 = B2,
/// with 1 = the positive outcome.
#[derive(Debug, Clone)]
pub struct ClassicalModel {
    weights: Vec<BigRational>,
}

impl ClassicalModel {
    pub fn new(weights: Vec<BigRational>) -> Result<ClassicalModel, BellError> {
        if weights.len() != 16 {
            return Err(BellError::InvalidWeights {
                reason: format!("{} weights, expected 16", weights.len()),
            });
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(BellError::InvalidWeights {
                reason: "negative weight".into(),
            });
        }
        let total: BigRational = weights.iter().cloned().sum();
        if total != BigRational::from_integer(1.into()) {
            return Err(BellError::InvalidWeights {
                reason: format!("weights sum to {total}, expected 1"),
            });
        }
        Ok(ClassicalModel { weights })
    }

    /// The deterministic model concentrated on one assignment.
    pub fn vertex(a1: bool, a2: bool, b1: bool, b2: bool) -> ClassicalModel {
        let mut weights = vec![BigRational::zero(); 16];
        let idx = (a1 as usize) << 3 | (a2 as usize) << 2 | (b1 as usize) << 1 | b2 as usize;
        weights[idx] = BigRational::from_integer(1.into());
        ClassicalModel { weights }
    }

    pub fn uniform() -> ClassicalModel {
        let w = BigRational::new(1.into(), 16.into());
        ClassicalModel { weights: vec![w; 16] }
    }

    /// Random rational model: integer numerators 0..1000 normalized by
    /// their exact sum.
    pub fn random(rng: &mut impl rand::Rng) -> ClassicalModel {
        loop {
            let numerators: Vec<i64> = (0..16).map(|_| rng.random_range(0..1000)).collect();
            let total: i64 = numerators.iter().sum();
            if total == 0 {
                continue;
            }
            let weights = numerators
                .into_iter()
                .map(|n| BigRational::new(n.into(), total.into()))
                .collect();
            return ClassicalModel { weights };
        }
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    /// Exact probability that setting `a` gives `sa` and `b` gives `sb`.
    pub fn joint_exact(&self, a: Setting, sa: Sign, b: Setting, sb: Sign) -> BigRational {
        let a_bit = match a {
            Setting::One => 3,
            Setting::Two => 2,
        };
        let b_bit = match b {
            Setting::One => 1,
            Setting::Two => 0,
        };
        let a_want = sa == Sign::Plus;
        let b_want = sb == Sign::Plus;
        let mut acc = BigRational::zero();
        for (idx, w) in self.weights.iter().enumerate() {
            if (idx >> a_bit & 1 == 1) == a_want && (idx >> b_bit & 1 == 1) == b_want {
                acc += w;
            }
        }
        acc
    }

    /// Both sides of (*) in exact arithmetic.
    pub fn bell_sides_exact(&self) -> (BigRational, BigRational) {
        use Setting::{One, Two};
        use Sign::{Minus, Plus};
        let lhs = self.joint_exact(One, Plus, One, Plus);
        let rhs = self.joint_exact(One, Plus, Two, Plus)
            + self.joint_exact(Two, Plus, One, Plus)
            + self.joint_exact(Two, Minus, Two, Minus);
        (lhs, rhs)
    }
}

impl JointSource for ClassicalModel {
    fn joint(&self, a: Setting, sa: Sign, b: Setting, sb: Sign) -> f64 {
        let q = self.joint_exact(a, sa, b, sb);
        let n = q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
        let d = q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
        n / d
    }
}

/// Does the model satisfy (*)? Exact; true for every classical model.
pub fn classical_satisfies(model: &ClassicalModel) -> bool {
    let (lhs, rhs) = model.bell_sides_exact();
    lhs <= rhs
}

/// Result of a violation scan: the best planar configuration found.
#[derive(Debug, Clone, Copy)]
pub struct ScanResult {
    pub config: BellConfig,
    pub angles: [f64; 4],
    pub sides: BellSides,
}

/// Grid-search planar axes maximizing lhs − rhs for the singlet.
///
/// Angles range over `resolution` steps of π/resolution in [0, π); a1 is
/// pinned to 0 since rotating all four axes together leaves every pairwise
/// angle — hence both sides — unchanged.
pub fn scan_violation(resolution: usize) -> Result<ScanResult, BellError> {
    if resolution < 4 {
        return Err(BellError::ResolutionTooCoarse(resolution));
    }
    let step = std::f64::consts::PI / resolution as f64;
    let mut best: Option<ScanResult> = None;
    for ia2 in 0..resolution {
        for ib1 in 0..resolution {
            for ib2 in 0..resolution {
                let angles = [0.0, ia2 as f64 * step, ib1 as f64 * step, ib2 as f64 * step];
                let config = BellConfig::planar(angles[0], angles[1], angles[2], angles[3]);
                let sides = bell_sides(&SingletSource::new(config));
                if best
                    .as_ref()
                    .map_or(true, |b| sides.margin() > b.sides.margin())
                {
                    best = Some(ScanResult { config, angles, sides });
                }
            }
        }
    }
    Ok(best.expect("resolution ≥ 4 scans a nonempty grid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn spin_projector_examples() {
        let z = Direction::new(0.0, 0.0, 1.0).unwrap();
        let p = spin_projector(&z, Sign::Plus);
        assert!(close(p.at(0, 0).re, 1.0, ALGEBRAIC_TOL));
        assert!(close(p.at(1, 1).re, 0.0, ALGEBRAIC_TOL));

        let x = Direction::new(1.0, 0.0, 0.0).unwrap();
        let p = spin_projector(&x, Sign::Plus);
        for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!(close(p.at(r, c).re, 0.5, ALGEBRAIC_TOL));
            assert!(close(p.at(r, c).im, 0.0, ALGEBRAIC_TOL));
        }
    }

    #[test]
    fn spin_projectors_complement_to_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let v: (f64, f64, f64) = (
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            let norm = (v.0 * v.0 + v.1 * v.1 + v.2 * v.2).sqrt();
            if norm < 1e-3 {
                continue;
            }
            let n = Direction::new(v.0 / norm, v.1 / norm, v.2 / norm).unwrap();
            let plus = spin_projector(&n, Sign::Plus);
            let minus = spin_projector(&n, Sign::Minus);
            for r in 0..2 {
                for c in 0..2 {
                    let sum = plus.at(r, c) + minus.at(r, c);
                    let expected = if r == c { 1.0 } else { 0.0 };
                    assert!(close(sum.re, expected, ALGEBRAIC_TOL));
                    assert!(close(sum.im, 0.0, ALGEBRAIC_TOL));
                }
            }
        }
    }

    #[test]
    fn direction_requires_unit_norm() {
        assert!(Direction::new(1.0, 1.0, 0.0).is_err());
        assert!(Direction::new(0.6, 0.0, 0.8).is_ok());
    }

    #[test]
    fn born_prob_examples() {
        let e1 = StateVector::new(vec![Complex64::ONE, Complex64::ZERO]).unwrap();
        let p0 = Projector::new(
            2,
            vec![Complex64::ONE, Complex64::ZERO, Complex64::ZERO, Complex64::ZERO],
        )
        .unwrap();
        let p1 = Projector::new(
            2,
            vec![Complex64::ZERO, Complex64::ZERO, Complex64::ZERO, Complex64::ONE],
        )
        .unwrap();
        assert!(close(born_prob(&e1, &p0).unwrap(), 1.0, ALGEBRAIC_TOL));
        assert!(close(born_prob(&e1, &p1).unwrap(), 0.0, ALGEBRAIC_TOL));

        let r = std::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::new(vec![Complex64::new(r, 0.0), Complex64::new(r, 0.0)]).unwrap();
        assert!(close(born_prob(&plus, &p0).unwrap(), 0.5, ALGEBRAIC_TOL));

        let psi4 = singlet();
        assert!(born_prob(&psi4, &p0).is_err());
    }

    #[test]
    fn projector_constructor_rejects_non_projectors() {
        // Not Hermitian.
        assert!(Projector::new(
            2,
            vec![Complex64::ONE, Complex64::ONE, Complex64::ZERO, Complex64::ZERO]
        )
        .is_err());
        // Hermitian but not idempotent.
        assert!(Projector::new(
            2,
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO
            ]
        )
        .is_err());
    }

    #[test]
    fn state_vector_requires_normalization() {
        assert!(StateVector::new(vec![Complex64::ONE, Complex64::ONE]).is_err());
    }

    #[test]
    fn singlet_properties() {
        let psi = singlet();
        let norm: f64 = psi.amplitudes().iter().map(|a| a.norm_sqr()).sum();
        assert!(close(norm, 1.0, ALGEBRAIC_TOL));

        // Perfect anticorrelation at equal axes.
        let z = Direction::planar(0.0);
        assert!(close(
            joint_prob(&psi, &z, Sign::Plus, &z, Sign::Plus).unwrap(),
            0.0,
            ALGEBRAIC_TOL
        ));

        // Single-side marginal is 1/2 for any axis: sum over partner outcomes.
        for angle in [0.0, 0.3, 1.2, 2.8] {
            let n = Direction::planar(angle);
            let marginal = joint_prob(&psi, &n, Sign::Plus, &z, Sign::Plus).unwrap()
                + joint_prob(&psi, &n, Sign::Plus, &z, Sign::Minus).unwrap();
            assert!(close(marginal, 0.5, ALGEBRAIC_TOL));
        }
    }

    #[test]
    fn joint_prob_matches_closed_form() {
        let psi = singlet();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let ta = rng.random_range(0.0..std::f64::consts::TAU);
            let tb = rng.random_range(0.0..std::f64::consts::TAU);
            let (na, nb) = (Direction::planar(ta), Direction::planar(tb));
            let theta = na.angle_to(&nb);
            for (sa, sb) in [
                (Sign::Plus, Sign::Plus),
                (Sign::Plus, Sign::Minus),
                (Sign::Minus, Sign::Plus),
                (Sign::Minus, Sign::Minus),
            ] {
                let computed = joint_prob(&psi, &na, sa, &nb, sb).unwrap();
                let oracle = (1.0 - sa.factor() * sb.factor() * theta.cos()) / 4.0;
                assert!(
                    close(computed, oracle, ALGEBRAIC_TOL),
                    "tensor {computed} vs closed form {oracle}"
                );
            }
        }
    }

    #[test]
    fn pvm_completeness() {
        let psi = singlet();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for _ in 0..50 {
            let na = Direction::planar(rng.random_range(0.0..std::f64::consts::TAU));
            let nb = Direction::planar(rng.random_range(0.0..std::f64::consts::TAU));
            let mut total = 0.0;
            for sa in [Sign::Plus, Sign::Minus] {
                for sb in [Sign::Plus, Sign::Minus] {
                    let p = joint_prob(&psi, &na, sa, &nb, sb).unwrap();
                    assert!((-ALGEBRAIC_TOL..=1.0 + ALGEBRAIC_TOL).contains(&p));
                    total += p;
                }
            }
            assert!(close(total, 1.0, ALGEBRAIC_TOL));
        }
    }

    #[test]
    fn singlet_violates_at_standard_angles() {
        let deg = std::f64::consts::PI / 180.0;
        let config = BellConfig::planar(0.0, 60.0 * deg, 90.0 * deg, 30.0 * deg);
        let sides = bell_sides(&SingletSource::new(config));
        assert!(close(sides.lhs, 0.25, 1e-9));
        assert!(close(sides.rhs, 3.0 * (1.0 - (30.0 * deg).cos()) / 4.0, 1e-9));
        assert!(sides.margin() > 0.149);
    }

    #[test]
    fn singlet_satisfies_at_equal_axes() {
        let config = BellConfig::planar(0.7, 0.7, 0.7, 0.7);
        let sides = bell_sides(&SingletSource::new(config));
        assert!(close(sides.lhs, 0.0, ALGEBRAIC_TOL));
        assert!(sides.lhs <= sides.rhs + MARGIN_TOL);
    }

    #[test]
    fn classical_vertices_satisfy() {
        for idx in 0..16u32 {
            let model = ClassicalModel::vertex(
                idx >> 3 & 1 == 1,
                idx >> 2 & 1 == 1,
                idx >> 1 & 1 == 1,
                idx & 1 == 1,
            );
            assert!(classical_satisfies(&model), "vertex {idx} violates");
        }
        assert!(classical_satisfies(&ClassicalModel::uniform()));
    }

    #[test]
    fn random_classical_models_satisfy() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let model = ClassicalModel::random(&mut rng);
            assert!(classical_satisfies(&model));
        }
    }

    #[test]
    fn classical_model_validation() {
        assert!(ClassicalModel::new(vec![BigRational::zero(); 15]).is_err());
        let mut w = vec![BigRational::zero(); 16];
        w[0] = BigRational::from_integer(2.into());
        assert!(ClassicalModel::new(w).is_err());
    }

    #[test]
    fn scan_finds_violation_and_is_consistent() {
        assert!(matches!(
            scan_violation(3),
            Err(BellError::ResolutionTooCoarse(3))
        ));

        let result = scan_violation(36).unwrap();
        let recomputed = bell_sides(&SingletSource::new(result.config));
        assert!(close(result.sides.lhs, recomputed.lhs, ALGEBRAIC_TOL));
        assert!(close(result.sides.rhs, recomputed.rhs, ALGEBRAIC_TOL));
        // 5° steps already include the 0/60/90/30 configuration.
        assert!(result.sides.margin() >= 0.149);
    }
}
