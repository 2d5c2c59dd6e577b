//! Triangle dynamics: the cosine-law map `phi` and its inverse, the scaled
//! map `phi_eps`, conserved quantities, the second iterate as a birational
//! map, triangle-to-triangle transformations (switch, polar, side flip,
//! angle flip), the closed-form Jacobian with its invariant densities, and
//! the family of invariant Poisson brackets.
//!
//! Phase space is the cosine cube: `x_i = cos(alpha_i)` with the
//! single-index labelling `alpha_1 = alpha_23`, `alpha_2 = alpha_13`,
//! `alpha_3 = alpha_12` (and likewise `ell_i` for sides). A spherical
//! triangle exists iff the angles lie in the tetrahedron-shaped domain
//! `tau` (see [`CosTriple::in_tau`]).

use crate::error::{Error, Result};
use crate::orbit::{Orbit, OrbitExit};
use crate::tol;
use std::f64::consts::PI;

/// A point of the triangle phase space: three cosines in (-1, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosTriple(pub [f64; 3]);

impl CosTriple {
    pub fn from_angles(a: [f64; 3]) -> CosTriple {
        CosTriple([a[0].cos(), a[1].cos(), a[2].cos()])
    }

    pub fn angles(&self) -> [f64; 3] {
        [self.0[0].acos(), self.0[1].acos(), self.0[2].acos()]
    }

    /// Membership in the angle domain: `alpha = arccos(x)` satisfies
    /// `alpha_1 + alpha_2 + alpha_3 > pi` and
    /// `-alpha_i + alpha_j + alpha_k < pi` for every i. Decided in angle
    /// space; equivalent to `d(x) > 0` inside the open cube.
    pub fn in_tau(&self) -> bool {
        if !self.0.iter().all(|v| v.abs() < 1.0) {
            return false;
        }
        let a = self.angles();
        if a[0] + a[1] + a[2] <= PI {
            return false;
        }
        (0..3).all(|i| {
            let (j, k) = others(i);
            -a[i] + a[j] + a[k] < PI
        })
    }

    /// Membership in the side domain: `ell = arccos(x)` satisfies
    /// `ell_1 + ell_2 + ell_3 < 2 pi` and `-ell_i + ell_j + ell_k > 0`.
    pub fn in_tau_star(&self) -> bool {
        if !self.0.iter().all(|v| v.abs() < 1.0) {
            return false;
        }
        let l = self.angles();
        if l[0] + l[1] + l[2] >= 2.0 * PI {
            return false;
        }
        (0..3).all(|i| {
            let (j, k) = others(i);
            -l[i] + l[j] + l[k] > 0.0
        })
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn check_cube(x: &CosTriple) -> Result<()> {
    if let Some(bad) = x.0.iter().find(|v| v.abs() >= 1.0 || !v.is_finite()) {
        return Err(Error::Domain(format!("cosine {bad} outside (-1, 1)")));
    }
    Ok(())
}

/// Gram determinant `d = 1 - x1^2 - x2^2 - x3^2 - 2 x1 x2 x3`; positive
/// exactly on `tau` inside the open cube.
pub fn d_value(x: &CosTriple) -> f64 {
    let [a, b, c] = x.0;
    1.0 - a * a - b * b - c * c - 2.0 * a * b * c
}

/// Dual determinant shape `d' = 1 - y1^2 - y2^2 - y3^2 + 2 y1 y2 y3`,
/// evaluated on side cosines.
pub fn d_dual_value(y: &CosTriple) -> f64 {
    let [a, b, c] = y.0;
    1.0 - a * a - b * b - c * c + 2.0 * a * b * c
}

/// `gamma^2 = (1-x1^2)(1-x2^2)(1-x3^2)`.
pub fn gamma2(x: &CosTriple) -> f64 {
    x.0.iter().map(|v| 1.0 - v * v).product()
}

/// Angle cosines to side cosines:
/// `y_i = (x_i + x_j x_k) / sqrt((1-x_j^2)(1-x_k^2))`.
///
/// The algebra is defined on the whole open cube; callers that need the
/// geometric guarantee (output in `tau*`) check [`CosTriple::in_tau`] on
/// the input themselves.
pub fn phi(x: &CosTriple) -> Result<CosTriple> {
    check_cube(x)?;
    let mut y = [0.0; 3];
    for i in 0..3 {
        let (j, k) = others(i);
        let rj = 1.0 - x.0[j] * x.0[j];
        let rk = 1.0 - x.0[k] * x.0[k];
        y[i] = (x.0[i] + x.0[j] * x.0[k]) / (rj.sqrt() * rk.sqrt());
    }
    Ok(CosTriple(y))
}

/// Side cosines to angle cosines:
/// `x_i = (y_i - y_j y_k) / sqrt((1-y_j^2)(1-y_k^2))`.
/// Related to [`phi`] by conjugation with `i(x) = -x`.
pub fn phi_inv(y: &CosTriple) -> Result<CosTriple> {
    check_cube(y)?;
    let mut x = [0.0; 3];
    for i in 0..3 {
        let (j, k) = others(i);
        let rj = 1.0 - y.0[j] * y.0[j];
        let rk = 1.0 - y.0[k] * y.0[k];
        x[i] = (y.0[i] - y.0[j] * y.0[k]) / (rj.sqrt() * rk.sqrt());
    }
    Ok(CosTriple(x))
}

/// The scaled map
/// `y_i = (x_i + eps x_j x_k) / sqrt((1-eps^2 x_j^2)(1-eps^2 x_k^2))`;
/// equals `phi(eps x)/eps` and reduces to the identity at `eps = 0`.
pub fn phi_eps(x: &CosTriple, eps: f64) -> Result<CosTriple> {
    if let Some(bad) = x.0.iter().find(|v| (eps * **v).abs() >= 1.0) {
        return Err(Error::Domain(format!(
            "scaled cosine {} outside (-1, 1)",
            eps * bad
        )));
    }
    let mut y = [0.0; 3];
    for i in 0..3 {
        let (j, k) = others(i);
        let rj = 1.0 - eps * eps * x.0[j] * x.0[j];
        let rk = 1.0 - eps * eps * x.0[k] * x.0[k];
        y[i] = (x.0[i] + eps * x.0[j] * x.0[k]) / (rj.sqrt() * rk.sqrt());
    }
    Ok(CosTriple(y))
}

/// Conserved quantities and the two determinant shapes at a point.
#[derive(Debug, Clone, Copy)]
pub struct TriangleInvariants {
    /// `E_12, E_13, E_23` with `E_ij = (1-x_i^2)/(1-x_j^2)`.
    pub e: [f64; 3],
    pub d: f64,
    pub gamma2: f64,
}

pub fn invariants(x: &CosTriple) -> TriangleInvariants {
    let q: Vec<f64> = x.0.iter().map(|v| 1.0 - v * v).collect();
    TriangleInvariants {
        e: [q[0] / q[1], q[0] / q[2], q[1] / q[2]],
        d: d_value(x),
        gamma2: gamma2(x),
    }
}

/// Residual of the sine law at `x`: the maximum over i of
/// `|d - (1-y_i^2)(1-x_j^2)(1-x_k^2)|` and of the deviation of
/// `(1-y_i^2)/(1-x_i^2)` from `d/gamma^2`, with `y = phi(x)`.
pub fn sine_law_residual(x: &CosTriple) -> Result<f64> {
    let y = phi(x)?;
    let d = d_value(x);
    let g2 = gamma2(x);
    let mut res: f64 = 0.0;
    for i in 0..3 {
        let (j, k) = others(i);
        let qi = 1.0 - y.0[i] * y.0[i];
        res = res.max((d - qi * (1.0 - x.0[j] * x.0[j]) * (1.0 - x.0[k] * x.0[k])).abs());
        res = res.max((qi / (1.0 - x.0[i] * x.0[i]) - d / g2).abs());
    }
    Ok(res)
}

/// Denominator of the second-iterate map; coincides with `d(x)`.
pub fn hk_denominator(x: &CosTriple) -> f64 {
    d_value(x)
}

/// The second iterate of `phi` as an explicit birational map:
/// `x~_i = (x_i + 2 x_j x_k + x_i(-x_i^2 + x_j^2 + x_k^2)) / d(x)`.
/// Solves the implicit system `x~_i - x_i = x~_j x_k + x_j x~_k`.
pub fn hk_step(x: &CosTriple) -> Result<CosTriple> {
    let den = hk_denominator(x);
    if den.abs() <= tol::SINGULAR_DENOMINATOR {
        return Err(Error::Singular(format!("second-iterate denominator {den}")));
    }
    let [a, b, c] = x.0;
    Ok(CosTriple([
        (a + 2.0 * b * c + a * (-a * a + b * b + c * c)) / den,
        (b + 2.0 * a * c + b * (-b * b + a * a + c * c)) / den,
        (c + 2.0 * a * b + c * (-c * c + a * a + b * b)) / den,
    ]))
}

/// Residual of the implicit second-iterate system at `(x, xt)`.
pub fn hk_implicit_residual(x: &CosTriple, xt: &CosTriple) -> f64 {
    let mut res: f64 = 0.0;
    for i in 0..3 {
        let (j, k) = others(i);
        res = res.max((xt.0[i] - x.0[i] - xt.0[j] * x.0[k] - x.0[j] * xt.0[k]).abs());
    }
    res
}

/// The birational involution relating a triangle to its side flip:
/// `jonas(x) = -hk_step(x)`.
pub fn jonas(x: &CosTriple) -> Result<CosTriple> {
    let t = hk_step(x)?;
    Ok(CosTriple([-t.0[0], -t.0[1], -t.0[2]]))
}

/// Quantities `sin^2(ell_i) = d / ((1-x_j^2)(1-x_k^2))`, conserved by the
/// side flip.
pub fn jonas_invariants(x: &CosTriple) -> [f64; 3] {
    let d = d_value(x);
    let mut out = [0.0; 3];
    for i in 0..3 {
        let (j, k) = others(i);
        out[i] = d / ((1.0 - x.0[j] * x.0[j]) * (1.0 - x.0[k] * x.0[k]));
    }
    out
}

/// Triangle-to-triangle transformations on cosine data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// Angles of the new triangle are the sides of the old one. In angle
    /// cosines this is exactly `phi`; the sides of the switched triangle
    /// are then given by [`hk_step`], so iterating the switch twice steps
    /// the birational second-iterate map.
    Switch,
    /// Polar triangle, `alpha* = pi - ell`: returns `-phi(x)`.
    Polar,
    /// Side flip `ell -> pi - ell`: the angle cosines of the flipped
    /// triangle are `jonas(x)`.
    SideFlip,
    /// Angle flip `alpha -> pi - alpha`, acting on *side* cosines: the
    /// conjugate involution `-jonas(-x)`, the unique solution of
    /// `xbar_i + x_i + xbar_j x_k + x_j xbar_k = 0`.
    AngleFlip,
    /// Alias for [`Transform::SideFlip`] under its classical name.
    Jonas,
}

/// Apply a triangle transformation.
///
/// Inputs are angle cosines in `tau` for `Switch`, `Polar`, `SideFlip` and
/// `Jonas`, and side cosines in `tau*` for `AngleFlip`. When the
/// transformed triangle does not exist (the flip or switch leaves the
/// triangle domain) an [`Error::Existence`] is returned.
pub fn transform(kind: Transform, x: &CosTriple) -> Result<CosTriple> {
    match kind {
        Transform::Switch => {
            if !x.in_tau() {
                return Err(Error::Domain("switch input must lie in tau".into()));
            }
            let y = phi(x)?;
            if !y.in_tau() {
                return Err(Error::Existence(
                    "sides of the input are not valid angles (ell not in T)".into(),
                ));
            }
            Ok(y)
        }
        Transform::Polar => {
            if !x.in_tau() {
                return Err(Error::Domain("polar input must lie in tau".into()));
            }
            let y = phi(x)?;
            Ok(CosTriple([-y.0[0], -y.0[1], -y.0[2]]))
        }
        Transform::SideFlip | Transform::Jonas => {
            if !x.in_tau() {
                return Err(Error::Domain("side-flip input must lie in tau".into()));
            }
            let out = jonas(x)?;
            if !out.in_tau() {
                return Err(Error::Existence(
                    "side-flipped triangle does not exist (pi - ell not in T*)".into(),
                ));
            }
            Ok(out)
        }
        Transform::AngleFlip => {
            if !x.in_tau_star() {
                return Err(Error::Domain(
                    "angle-flip input must be side cosines in tau*".into(),
                ));
            }
            let neg = CosTriple([-x.0[0], -x.0[1], -x.0[2]]);
            let j = jonas(&neg)?;
            let out = CosTriple([-j.0[0], -j.0[1], -j.0[2]]);
            if !out.in_tau_star() {
                return Err(Error::Existence(
                    "angle-flipped triangle does not exist (pi - alpha not in T)".into(),
                ));
            }
            Ok(out)
        }
    }
}

/// Closed-form Jacobian of `phi` and its determinant.
///
/// `dy_i/dx_i = 1 / sqrt((1-x_j^2)(1-x_k^2))`,
/// `dy_i/dx_j = (x_k + x_i x_j) / ((1-x_j^2)^{3/2} (1-x_k^2)^{1/2})`,
/// `det = d' / gamma^2 = (1-y_j^2)(1-y_k^2) / ((1-x_j^2)(1-x_k^2))`.
pub fn jacobian_phi(x: &CosTriple) -> Result<([[f64; 3]; 3], f64)> {
    if !x.in_tau() {
        return Err(Error::Domain(
            "Jacobian of phi requested outside tau".into(),
        ));
    }
    let q: Vec<f64> = x.0.iter().map(|v| 1.0 - v * v).collect();
    let s: Vec<f64> = q.iter().map(|v| v.sqrt()).collect();
    let mut j = [[0.0; 3]; 3];
    for i in 0..3 {
        let (a, b) = others(i);
        j[i][i] = 1.0 / (s[a] * s[b]);
        j[i][a] = (x.0[b] + x.0[i] * x.0[a]) / (q[a] * s[a] * s[b]);
        j[i][b] = (x.0[a] + x.0[i] * x.0[b]) / (q[b] * s[b] * s[a]);
    }
    let det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1])
        - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0])
        + j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    Ok((j, det))
}

/// The invariant densities of Theorem-style volume forms: for each i,
/// `(1-x_j^2)(1-x_k^2)` and `(1-x_i^2)^2`. The Jacobian determinant of
/// `phi` equals `density(phi(x)) / density(x)` for every one of them.
pub fn volume_densities(x: &CosTriple) -> [f64; 6] {
    let q: Vec<f64> = x.0.iter().map(|v| 1.0 - v * v).collect();
    [
        q[1] * q[2],
        q[0] * q[2],
        q[0] * q[1],
        q[0] * q[0],
        q[1] * q[1],
        q[2] * q[2],
    ]
}

/// Coefficients of the Poisson pencil.
#[derive(Debug, Clone, Copy)]
pub struct PoissonCoeffs(pub [f64; 3]);

/// The invariant bracket `{x_i, x_j} = C_i x_k (1-x_j^2) - C_j x_k (1-x_i^2)`
/// as an antisymmetric matrix.
pub fn poisson_bracket(c: &PoissonCoeffs, x: &CosTriple) -> [[f64; 3]; 3] {
    let mut p = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in (i + 1)..3 {
            let k = 3 - i - j;
            let v = c.0[i] * x.0[k] * (1.0 - x.0[j] * x.0[j])
                - c.0[j] * x.0[k] * (1.0 - x.0[i] * x.0[i]);
            p[i][j] = v;
            p[j][i] = -v;
        }
    }
    p
}

/// Exact polynomial evaluation of the cyclic Jacobi sum
/// `sum_l P_li d_l P_jk + P_lj d_l P_ki + P_lk d_l P_ij` at `(i,j,k) =
/// (1,2,3)`. Identically zero; the returned value is pure roundoff.
pub fn jacobi_residual(c: &PoissonCoeffs, x: &CosTriple) -> f64 {
    let p = poisson_bracket(c, x);
    // d/dx_l of P_ij, closed form of the cubic entries
    let dp = |i: usize, j: usize, l: usize| -> f64 {
        // P_ij = C_i x_k (1 - x_j^2) - C_j x_k (1 - x_i^2), k the third index
        let k = 3 - i - j;
        if l == k {
            c.0[i] * (1.0 - x.0[j] * x.0[j]) - c.0[j] * (1.0 - x.0[i] * x.0[i])
        } else if l == j {
            -2.0 * c.0[i] * x.0[k] * x.0[j]
        } else {
            2.0 * c.0[j] * x.0[k] * x.0[i]
        }
    };
    let dp_signed = |i: usize, j: usize, l: usize| -> f64 {
        if i < j {
            dp(i, j, l)
        } else {
            -dp(j, i, l)
        }
    };
    let mut s = 0.0;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        for l in 0..3 {
            s += p[l][i] * dp_signed(j, k, l);
        }
    }
    s.abs()
}

/// `|| J P(x) J^T - P(phi(x)) ||_max`: the bracket is mapped to itself by
/// `phi`.
pub fn poisson_map_residual(c: &PoissonCoeffs, x: &CosTriple) -> Result<f64> {
    let (j, _) = jacobian_phi(x)?;
    let p = poisson_bracket(c, x);
    let y = phi(x)?;
    let py = poisson_bracket(c, &y);
    let jp = crate::numutil::matmul(&j, &p);
    let jpjt = crate::numutil::matmul(&jp, &crate::numutil::transpose(&j));
    Ok(crate::numutil::max_abs_diff(&jpjt, &py))
}

/// Maps whose orbits the library iterates in the triangle phase space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleMap {
    Phi,
    Hk,
    Jonas,
}

/// Iterate `map` for up to `steps` steps, recording the point and the
/// conserved quantities `E_12, E_13, E_23` at every step. An iterate that
/// leaves the open cosine cube ends the orbit with a recorded reason (the
/// birational maps stay evaluable there, but the phase space does not):
/// the dynamics of this family genuinely exits the cube for most initial
/// data, so early exit is an expected outcome, not a failure.
pub fn orbit(map: TriangleMap, x0: &CosTriple, steps: usize) -> Orbit<3> {
    let mut points = vec![x0.0];
    let mut inv = vec![invariants(x0).e.to_vec()];
    let mut x = *x0;
    let mut exit = None;
    for n in 0..steps {
        let next = match map {
            TriangleMap::Phi => phi(&x),
            TriangleMap::Hk => hk_step(&x),
            TriangleMap::Jonas => jonas(&x),
        };
        let next = next.and_then(|p| {
            if p.0.iter().all(|v| v.abs() < 1.0) {
                Ok(p)
            } else {
                Err(Error::Domain("iterate left the open cube".into()))
            }
        });
        match next {
            Ok(p) => {
                points.push(p.0);
                inv.push(invariants(&p).e.to_vec());
                x = p;
            }
            Err(e) => {
                exit = Some(OrbitExit { step: n, reason: e });
                break;
            }
        }
    }
    Orbit {
        points,
        invariants: inv,
        exit,
    }
}
