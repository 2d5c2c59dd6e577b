//! Solve a spherical tetrahedron: dihedral angles to edge lengths through
//! the cofactor cosine law, the tetrahedral sine laws, the four conserved
//! quantities, and the two-stage route through link triangles.
//!
//! ```bash
//! cargo run --example solve_tetrahedron
//! ```

use sphertop::tetra::{
    admissible, link_triangle, psi, sine_law_residuals, tetra_invariants, two_stage_solve,
    CosSextuple,
};

fn main() {
    // all six dihedral angles 2pi/3
    let x = CosSextuple([-0.5; 6]);
    println!("dihedral cosines: {:?}", x.0);
    println!(
        "admissible (Gram matrix positive definite): {}",
        admissible(&x)
    );

    let y = psi(&x).unwrap();
    println!("edge cosines:     {:?}", y.0);
    println!(
        "edge lengths:     {:?}",
        y.0.iter().map(|v| v.acos()).collect::<Vec<_>>()
    );

    // four conserved quantities of the induced dynamics
    let inv = tetra_invariants(&x);
    println!(
        "integrals: r1 = {:.6}, r2 = {:.6}, s1 = {:.6}, s2 = {:.6}",
        inv.r1, inv.r2, inv.s1, inv.s2
    );

    // the sine laws pin the common ratio d/gamma = gamma'/d'
    let res = sine_law_residuals(&x, &y).unwrap();
    println!(
        "sine-law residuals: products {:.3e}, cross-cosines {:.3e}, dual gap {:.3e}",
        res.sine, res.cross, res.dual_gap
    );

    // link triangles: angles are the dihedral angles at the edges through
    // the vertex, sides are the planar angles of the opposite face
    for m in 0..4 {
        let lk = link_triangle(&x, m).unwrap();
        println!(
            "link of vertex {m}: planar cosines {:?} (valid side data: {})",
            lk.planar_cosines.0,
            lk.planar_cosines.in_tau_star()
        );
    }

    // the same solve by two rounds of the triangle law; every edge is
    // produced twice and the two computations agree
    let ts = two_stage_solve(&x).unwrap();
    let gap = (0..6)
        .map(|s| (ts.value.0[s] - y.0[s]).abs())
        .fold(0.0, f64::max);
    println!(
        "two-stage solve: internal discrepancy {:.3e}, gap to direct solve {:.3e}",
        ts.discrepancy, gap
    );
}
