//! Born values of the spin singlet versus the classical inequality.
//!
//! Any classical probability assignment obeys
//! P(A1∧B1) ≤ P(A1∧B2) + P(A2∧B1) + P(¬A2∧¬B2). For the singlet state,
//! joint outcome probabilities follow the Born rule ⟨ψ|P_a ⊗ P_b|ψ⟩,
//! which at planar angles (0°, 60°, 90°, 30°) gives
//! lhs = 0.25 > 0.1005 ≈ rhs. No classical model reproduces these numbers —
//! and therefore no Born-compatible probability function exists on the
//! Boolean completion of the quantum lattice.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example bell_violation
//! ```

use qlogic::bell::{
    bell_sides, joint_prob, scan_violation, singlet, BellConfig, Sign, SingletSource,
};

fn main() {
    let deg = std::f64::consts::PI / 180.0;

    // Perfect anticorrelation at equal axes: the singlet signature.
    let psi = singlet();
    let same = joint_prob(
        &psi,
        &qlogic::bell::Direction::planar(0.0),
        Sign::Plus,
        &qlogic::bell::Direction::planar(0.0),
        Sign::Plus,
    )
    .unwrap();
    println!("joint_prob_same_axis_plus_plus={same:.12}");

    // The violating configuration.
    let config = BellConfig::planar(0.0, 60.0 * deg, 90.0 * deg, 30.0 * deg);
    let sides = bell_sides(&SingletSource::new(config));
    println!("angles_deg=0,60,90,30");
    println!("lhs={:.7}", sides.lhs);
    println!("rhs={:.7}", sides.rhs);
    println!("margin={:.7}", sides.margin());
    println!("violated={}", sides.margin() > 0.0);

    // Closed form cross-check: each joint value is (1 - sa*sb*cos θ)/4.
    let theta = config.a1.angle_to(&config.b1);
    let closed = (1.0 - theta.cos()) / 4.0;
    println!("closed_form_lhs={closed:.12}");

    // A coarse grid scan finds the same neighbourhood.
    let result = scan_violation(36).unwrap();
    let degs: Vec<String> = result.angles.iter().map(|a| format!("{:.0}", a.to_degrees())).collect();
    println!(
        "scan_resolution=36 best_angles_deg={} best_margin={:.7}",
        degs.join(","),
        result.sides.margin()
    );
}
