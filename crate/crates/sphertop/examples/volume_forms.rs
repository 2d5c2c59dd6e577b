//! Invariant volume forms: the Jacobian determinant of each cosine-law
//! map equals the ratio density(output)/density(input) for a whole family
//! of densities, so the maps preserve the measure dx/density.
//!
//! For the triangle map the determinant is d'/gamma^2; for the
//! tetrahedral map it factorizes as (gamma'/d')^5.
//!
//! ```bash
//! cargo run --example volume_forms
//! ```

use sphertop::numutil::{fd_jacobian, sample_domain, SampleConfig, SampleDomain};
use sphertop::tetra::{self, CosSextuple};
use sphertop::triangle::{self, CosTriple};

fn main() {
    // triangle side
    let x = CosTriple([-0.5; 3]);
    let (jac, det) = triangle::jacobian_phi(&x).unwrap();
    println!("triangle Jacobian at the symmetric point:");
    for row in jac {
        println!("  [{:+.6} {:+.6} {:+.6}]", row[0], row[1], row[2]);
    }
    println!(
        "det = {det:.12} (closed form 1024/729 = {:.12})",
        1024.0 / 729.0
    );

    let y = triangle::phi(&x).unwrap();
    let fx = triangle::volume_densities(&x);
    let fy = triangle::volume_densities(&y);
    println!("density ratios vs det (all six densities):");
    for i in 0..6 {
        println!("  {:.12}", fy[i] / fx[i]);
    }

    // cross-check against central differences
    let fd = fd_jacobian(
        |v| triangle::phi(&CosTriple([v[0], v[1], v[2]])).map(|p| p.0.to_vec()),
        &x.0,
        1e-6,
    )
    .unwrap();
    let gap = (0..3)
        .flat_map(|r| (0..3).map(move |c| (r, c)))
        .map(|(r, c)| (jac[r][c] - fd[r][c]).abs())
        .fold(0.0, f64::max);
    println!("closed form vs finite differences: {gap:.3e}");

    // tetrahedron side
    let pts = sample_domain(&SampleConfig {
        seed: 5,
        count: 5,
        domain: SampleDomain::TetraAdmissible,
        amplitude: 0.3,
    })
    .unwrap();
    println!("\ntetrahedral determinant factorization on random data:");
    for p in pts {
        let x = CosSextuple([p[0], p[1], p[2], p[3], p[4], p[5]]);
        let (_, det) = tetra::jacobian_psi(&x).unwrap();
        let y = tetra::psi(&x).unwrap();
        let r = tetra::gamma_over_d_dual(&y).unwrap();
        println!(
            "  det = {det:+.12e}   (gamma'/d')^5 = {:+.12e}   rel gap {:.3e}",
            r.powi(5),
            (det - r.powi(5)).abs() / det.abs()
        );
    }
}
