//! The exact arithmetic everything else stands on.
//!
//! Scalars are Gaussian rationals a + b·i with exact rational parts, so
//! row reduction, kernels and orthogonal complements have no tolerances:
//! a subspace equality is a plain comparison of canonical matrices.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example exact_linear_algebra
//! ```

use qlogic::exact::{inner_product, orth_complement_basis, ComplexRational, Matrix, Vector};

fn main() {
    // The inner product conjugates its FIRST argument.
    let x: Vector = "(1, i)".parse().unwrap();
    println!("x={x}");
    println!("<x,x>={}", inner_product(&x, &x).unwrap());
    let y: Vector = "(i, 0)".parse().unwrap();
    let z: Vector = "(1, 0)".parse().unwrap();
    println!("<({y}),({z})>={}", inner_product(&y, &z).unwrap());

    // Row reduction with exact pivots.
    let m = Matrix::from_rows(&[
        "(1, 2, 1)".parse().unwrap(),
        "(2, 4, 2)".parse().unwrap(),
        "(0, 1, 1)".parse().unwrap(),
    ])
    .unwrap();
    println!("rref={:?}", m.rref());
    println!("rank={} kernel_dim={}", m.rank(), m.kernel_basis().len());

    // Orthogonal complement via the conjugated kernel.
    let comp = orth_complement_basis(&[x.clone()], 2).unwrap();
    for v in &comp {
        println!(
            "complement_vector={v} inner_product={}",
            inner_product(&x, v).unwrap()
        );
    }

    // Exactness in one line: (a + b) - b == a for awkward fractions.
    let a = ComplexRational::from_parts(1, 3, -2, 7);
    let b = ComplexRational::from_parts(5, 11, 1, 13);
    println!("a={a}");
    println!("roundtrip_exact={}", &(&a + &b) - &b == a);

    // The vector literal format round-trips.
    let v: Vector = "(1/1+0/1i, 0/1-2/3i)".parse().unwrap();
    println!("literal={v}");
    println!("reparsed_equal={}", v.to_string().parse::<Vector>().unwrap() == v);
}
