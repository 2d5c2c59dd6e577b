//! Solve a spherical triangle: from the three angles to the three sides
//! via the cosine law, with the Gram-matrix machinery behind it.
//!
//! ```bash
//! cargo run --example solve_triangle
//! ```

use sphertop::gram::{self, GramKind, GramMatrix};
use sphertop::triangle::{self, CosTriple};

fn main() {
    // an equilateral triangle with angles 2pi/3
    let angles = [2.0 * std::f64::consts::PI / 3.0; 3];
    let x = CosTriple::from_angles(angles);
    println!("angles:        {:?}", angles);
    println!("angle cosines: {:?}", x.0);
    println!("in the angle domain: {}", x.in_tau());

    // the map phi sends angle cosines to side cosines
    let y = triangle::phi(&x).unwrap();
    println!("side cosines:  {:?}", y.0);
    println!("sides:         {:?}", y.angles());

    // the same map through the generic Gram-matrix route
    let g = GramMatrix::from_cosines(GramKind::Angles, &x.0).unwrap();
    println!("Gram matrix valid (triangle exists): {}", g.is_valid());
    let dual = gram::cosine_law_dual(&g).unwrap();
    let gap = (0..3).map(|i| (y.0[i] - dual[i]).abs()).fold(0.0, f64::max);
    println!("cofactor route vs rational formula: max gap {gap:.3e}");

    // the sine law ties both determinant shapes together
    let inv = triangle::invariants(&x);
    println!("d = {:.6}, gamma^2 = {:.6}", inv.d, inv.gamma2);
    println!(
        "sine-law ratio sin(l)/sin(a) = sqrt(d)/gamma = {:.12}",
        (inv.d / inv.gamma2).sqrt()
    );
    println!(
        "sine-law residual at this point: {:.3e}",
        triangle::sine_law_residual(&x).unwrap()
    );

    // duality: the length Gram matrix is D G^{-1} D
    let gp = gram::dual_gram(&g).unwrap();
    println!(
        "duality residual |G' - D G^-1 D|: {:.3e}",
        gram::duality_residual(&g, &gp).unwrap()
    );

    // realize the triangle and its polar on the sphere
    let r = gram::realize_vertices(&gp).unwrap();
    println!("vertex coordinates (columns):");
    for row in 0..3 {
        println!(
            "  [{:+.6} {:+.6} {:+.6}]",
            r.v[row][0], r.v[row][1], r.v[row][2]
        );
    }
    println!("pairing <v_i*, v_i> = {:?}", &r.dscale[..3]);
}
