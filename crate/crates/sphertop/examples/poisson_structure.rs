//! The family of invariant Poisson brackets of the triangle map:
//! {x_i, x_j} = C_i x_k (1-x_j^2) - C_j x_k (1-x_i^2) for arbitrary
//! constants C. Every member satisfies the Jacobi identity, and the map
//! transforms the bracket into itself, making the dynamics bi-Hamiltonian.
//!
//! ```bash
//! cargo run --example poisson_structure
//! ```

use sphertop::numutil::SplitMix64;
use sphertop::triangle::{
    jacobi_residual, poisson_bracket, poisson_map_residual, CosTriple, PoissonCoeffs,
};

fn main() {
    let x = CosTriple([-0.3, 0.2, -0.4]);
    let c = PoissonCoeffs([1.0, -0.5, 0.25]);

    let p = poisson_bracket(&c, &x);
    println!("bracket matrix at x = {:?}:", x.0);
    for row in p {
        println!("  [{:+.6} {:+.6} {:+.6}]", row[0], row[1], row[2]);
    }

    println!(
        "Jacobi identity (exact polynomial cyclic sum): {:.3e}",
        jacobi_residual(&c, &x)
    );
    println!(
        "map-invariance |J P J^T - P(phi(x))|: {:.3e}",
        poisson_map_residual(&c, &x).unwrap()
    );

    // the whole pencil: random coefficients, random points
    let mut rng = SplitMix64::new(99);
    let mut worst_jacobi: f64 = 0.0;
    let mut worst_map: f64 = 0.0;
    let mut tried = 0;
    while tried < 200 {
        let x = CosTriple([
            rng.next_in(-0.5, 0.5),
            rng.next_in(-0.5, 0.5),
            rng.next_in(-0.5, 0.5),
        ]);
        if !x.in_tau() {
            continue;
        }
        tried += 1;
        let c = PoissonCoeffs([
            rng.next_in(-1.0, 1.0),
            rng.next_in(-1.0, 1.0),
            rng.next_in(-1.0, 1.0),
        ]);
        worst_jacobi = worst_jacobi.max(jacobi_residual(&c, &x));
        worst_map = worst_map.max(poisson_map_residual(&c, &x).unwrap());
    }
    println!("over {tried} random members and points:");
    println!("  worst Jacobi residual:   {worst_jacobi:.3e}");
    println!("  worst map-invariance:    {worst_map:.3e}");
}
