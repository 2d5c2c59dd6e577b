//! Iterate the triangle maps and watch their conserved quantities.
//!
//! The quantities E_ij = (1-x_i^2)/(1-x_j^2) are exact integrals of the
//! cosine-law map and of its birational second iterate. Generic orbits
//! leave the cosine cube after a few steps (the underlying flow blows up
//! in finite time); the symmetric family survives forever and follows the
//! closed forms a_n = -1/(n+2) resp. -1/(2n+2).
//!
//! ```bash
//! cargo run --example orbit_invariants
//! ```

use sphertop::numutil::{sample_domain, SampleConfig, SampleDomain};
use sphertop::triangle::{orbit, CosTriple, TriangleMap};

fn main() {
    // the symmetric orbit: full thousand steps, zero drift
    let sym = orbit(TriangleMap::Phi, &CosTriple([-0.5; 3]), 1000);
    println!(
        "symmetric phi orbit: {} steps, invariant drift {:.3e}",
        sym.steps(),
        sym.invariant_drift()
    );
    println!(
        "  a_5  = {:+.12} (closed form {:+.12})",
        sym.points[5][0],
        -1.0 / 7.0
    );
    println!(
        "  a_20 = {:+.12} (closed form {:+.12})",
        sym.points[20][0],
        -1.0 / 22.0
    );

    let hk = orbit(TriangleMap::Hk, &CosTriple([-0.5; 3]), 1000);
    println!(
        "symmetric second-iterate orbit: {} steps, drift {:.3e}",
        hk.steps(),
        hk.invariant_drift()
    );

    // generic orbits: early exit is the normal outcome
    let pts = sample_domain(&SampleConfig {
        seed: 2024,
        count: 8,
        domain: SampleDomain::Tau3,
        amplitude: 0.5,
    })
    .unwrap();
    println!("\ngeneric orbits (requested 1000 steps):");
    for p in pts {
        let x0 = CosTriple([p[0], p[1], p[2]]);
        let orb = orbit(TriangleMap::Phi, &x0, 1000);
        let reason = orb
            .exit
            .as_ref()
            .map(|e| format!("left the domain at step {}", e.step))
            .unwrap_or_else(|| "survived".into());
        println!(
            "  x0 = [{:+.3} {:+.3} {:+.3}]  steps {:4}  drift {:.3e}  ({reason})",
            x0.0[0],
            x0.0[1],
            x0.0[2],
            orb.steps(),
            orb.invariant_drift()
        );
    }

    // CSV export, 17 significant digits per value
    let short = orbit(TriangleMap::Hk, &CosTriple([-0.5; 3]), 3);
    println!("\nCSV of the first second-iterate steps:");
    print!(
        "{}",
        short.to_csv(&["x1", "x2", "x3"], &["E12", "E13", "E23"])
    );
}
