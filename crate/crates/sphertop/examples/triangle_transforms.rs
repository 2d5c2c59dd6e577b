//! The triangle-to-triangle transformations and their algebra: the switch
//! (new angles are the old sides), the polar triangle, the side flip and
//! the angle flip.
//!
//! The side flip and the polarity are involutions; the switch is their
//! composition, and iterating it twice steps the birational second
//! iterate of the cosine-law map.
//!
//! ```bash
//! cargo run --example triangle_transforms
//! ```

use sphertop::triangle::{hk_step, jonas_invariants, transform, CosTriple, Transform};

fn max_gap(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max)
}

fn main() {
    let x = CosTriple([-0.5, -0.4, -0.45]);
    println!("angle cosines of the starting triangle: {:?}", x.0);

    let switch = transform(Transform::Switch, &x).unwrap();
    let polar = transform(Transform::Polar, &x).unwrap();
    let flip = transform(Transform::SideFlip, &x).unwrap();
    println!("switch:    {:?}", switch.0);
    println!("polar:     {:?}", polar.0);
    println!("side flip: {:?}", flip.0);

    // switch = polar after side flip
    let pf = transform(Transform::Polar, &flip).unwrap();
    println!("S = P.F residual: {:.3e}", max_gap(&switch.0, &pf.0));

    // both factors are involutions
    let ff = transform(Transform::SideFlip, &flip).unwrap();
    println!("F.F = id residual: {:.3e}", max_gap(&ff.0, &x.0));
    let pp = transform(Transform::Polar, &polar).unwrap();
    println!("P.P = id residual: {:.3e}", max_gap(&pp.0, &x.0));

    // the side flip conserves sin^2 of every side
    let before = jonas_invariants(&x);
    let after = jonas_invariants(&flip);
    println!("sin^2(l_i) before flip: {before:?}");
    println!("sin^2(l_i) after flip:  {after:?}");

    // two switches = one step of the explicit birational map
    let s2 = transform(Transform::Switch, &switch).unwrap();
    let t = hk_step(&x).unwrap();
    println!("S.S vs second iterate: {:.3e}", max_gap(&s2.0, &t.0));

    // the angle flip acts on side cosines and solves
    // xbar_i + x_i + xbar_j x_k + x_j xbar_k = 0
    let y = sphertop::triangle::phi(&x).unwrap();
    let bar = transform(Transform::AngleFlip, &y).unwrap();
    let mut residual: f64 = 0.0;
    for i in 0..3 {
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        residual = residual.max((bar.0[i] + y.0[i] + bar.0[j] * y.0[k] + y.0[j] * bar.0[k]).abs());
    }
    println!("angle-flip implicit relation residual: {residual:.3e}");

    // the switch does not exist for every triangle
    let narrow = CosTriple([0.4, 0.4, 0.4]);
    match transform(Transform::Switch, &narrow) {
        Err(e) => println!("switch of a narrow triangle: {e}"),
        Ok(_) => unreachable!(),
    }
}
