//! Tetrahedron dynamics: the cosine-law map `psi` on dihedral-angle
//! cosines, its four conserved quantities, the tetrahedral sine laws,
//! link-triangle extraction and the two-stage solve, the closed-form 6x6
//! Jacobian with its determinant factorization and invariant densities,
//! and the symmetry of the side-by-angle derivative matrix.
//!
//! Phase space is indexed by the six vertex pairs in the fixed order
//! `12, 13, 23, 14, 24, 34`; `x_ij = cos(alpha_ij)` is the cosine of the
//! dihedral angle along the edge joining the *other two* vertices, and
//! `y_ij = cos(ell_ij)` the cosine of the edge length between vertices
//! `i` and `j`. A tetrahedron exists iff the 4x4 angle Gram matrix is
//! positive definite.

use crate::error::{Error, Result};
use crate::gram::{GramKind, GramMatrix};
use crate::orbit::{Orbit, OrbitExit};
use crate::triangle::{phi, CosTriple};
use crate::{numutil, tol};

/// Index pairs in crate order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];

/// `COMPLEMENT[a]` is the index of the pair complementary to `PAIRS[a]`.
pub const COMPLEMENT: [usize; 6] = [5, 4, 3, 2, 1, 0];

/// Slot of the unordered pair {i, j} in [`PAIRS`].
pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        (0, 3) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!("pair ({i}, {j}) out of range"),
    }
}

/// A point of the tetrahedron phase space: six cosines in (-1, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosSextuple(pub [f64; 6]);

impl CosSextuple {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[pair_index(i, j)]
    }

    pub fn from_angles(a: [f64; 6]) -> CosSextuple {
        let mut x = [0.0; 6];
        for (s, v) in x.iter_mut().zip(a.iter()) {
            *s = v.cos();
        }
        CosSextuple(x)
    }
}

fn check_cube(x: &CosSextuple) -> Result<()> {
    if let Some(bad) = x.0.iter().find(|v| v.abs() >= 1.0 || !v.is_finite()) {
        return Err(Error::Domain(format!("cosine {bad} outside (-1, 1)")));
    }
    Ok(())
}

/// Existence certificate: the 4x4 angle Gram matrix of `x` is positive
/// definite.
pub fn admissible(x: &CosSextuple) -> bool {
    x.0.iter().all(|v| v.abs() < 1.0)
        && GramMatrix::from_cosines(GramKind::Angles, &x.0)
            .map(|g| g.is_valid())
            .unwrap_or(false)
}

/// Diagonal cofactors of the angle Gram matrix as explicit polynomials:
/// `g_ii = 1 - (x_jk^2 + x_jm^2 + x_km^2) - 2 x_jk x_jm x_km`.
pub fn cofactor_diag(x: &CosSextuple) -> [f64; 4] {
    let mut g = [0.0; 4];
    for (i, gi) in g.iter_mut().enumerate() {
        let rest: Vec<usize> = (0..4).filter(|&t| t != i).collect();
        let a = x.get(rest[0], rest[1]);
        let b = x.get(rest[0], rest[2]);
        let c = x.get(rest[1], rest[2]);
        *gi = 1.0 - (a * a + b * b + c * c) - 2.0 * a * b * c;
    }
    g
}

/// Off-diagonal cofactors of the angle Gram matrix as explicit polynomials:
/// `g_ij = x_ij + x_ik x_jk + x_im x_jm
///         + x_km (x_ik x_jm + x_im x_jk - x_ij x_km)`.
pub fn cofactor_offdiag(x: &CosSextuple) -> [f64; 6] {
    let mut g = [0.0; 6];
    for (s, &(i, j)) in PAIRS.iter().enumerate() {
        let rest: Vec<usize> = (0..4).filter(|&t| t != i && t != j).collect();
        let (k, m) = (rest[0], rest[1]);
        g[s] = x.get(i, j)
            + x.get(i, k) * x.get(j, k)
            + x.get(i, m) * x.get(j, m)
            + x.get(k, m)
                * (x.get(i, k) * x.get(j, m) + x.get(i, m) * x.get(j, k)
                    - x.get(i, j) * x.get(k, m));
    }
    g
}

/// The cosine law for tetrahedra: `y_ij = g_ij / sqrt(g_ii g_jj)` with the
/// explicit cofactor polynomials. Agrees with the generic cofactor route in
/// [`crate::gram::cosine_law_dual`]; the two code paths are kept separate
/// on purpose so they can be checked against each other.
pub fn psi(x: &CosSextuple) -> Result<CosSextuple> {
    check_cube(x)?;
    let gd = cofactor_diag(x);
    for (i, &g) in gd.iter().enumerate() {
        if g <= tol::DEGENERATE_COFACTOR {
            return Err(Error::Degenerate(format!(
                "diagonal cofactor g_{i}{i} = {g} at the boundary of existence"
            )));
        }
    }
    let go = cofactor_offdiag(x);
    let s: Vec<f64> = gd.iter().map(|v| v.sqrt()).collect();
    let mut y = [0.0; 6];
    for (slot, &(i, j)) in PAIRS.iter().enumerate() {
        y[slot] = go[slot] / (s[i] * s[j]);
    }
    Ok(CosSextuple(y))
}

/// The four conserved quantities of `psi`, relative to the (12, 34)
/// pairing:
/// `r1 = (1-x13^2)(1-x24^2) / ((1-x12^2)(1-x34^2))`,
/// `r2 = (1-x23^2)(1-x14^2) / ((1-x12^2)(1-x34^2))`,
/// `s1 = (x12 x34 - x13 x24) / sqrt((1-x12^2)(1-x34^2))`,
/// `s2 = (x13 x24 - x23 x14) / sqrt((1-x12^2)(1-x34^2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetraInvariants {
    pub r1: f64,
    pub r2: f64,
    pub s1: f64,
    pub s2: f64,
}

impl TetraInvariants {
    pub fn to_vec(self) -> Vec<f64> {
        vec![self.r1, self.r2, self.s1, self.s2]
    }
}

pub fn tetra_invariants(x: &CosSextuple) -> TetraInvariants {
    let q: Vec<f64> = x.0.iter().map(|v| 1.0 - v * v).collect();
    let base = q[0] * q[5];
    let scale = base.sqrt();
    TetraInvariants {
        r1: q[1] * q[4] / base,
        r2: q[2] * q[3] / base,
        s1: (x.0[0] * x.0[5] - x.0[1] * x.0[4]) / scale,
        s2: (x.0[1] * x.0[4] - x.0[2] * x.0[3]) / scale,
    }
}

/// Reference value `d / gamma = gamma' / d'` of the tetrahedral sine laws,
/// together with both sides so the equality itself can be tested.
#[derive(Debug, Clone, Copy)]
pub struct SineLawResiduals {
    /// Deviation of the three ratios
    /// `sin l_ij sin l_km / (sin a_ij sin a_km)` from `d/gamma`.
    pub sine: f64,
    /// Deviation of the three cross-cosine ratios from `d/gamma`, measured
    /// in cross-multiplied form `|num - (d/gamma) den|` so that vanishing
    /// denominators (legitimate on a codimension-one set) stay finite.
    pub cross: f64,
    /// `|d/gamma - gamma'/d'|`.
    pub dual_gap: f64,
}

impl SineLawResiduals {
    pub fn max(&self) -> f64 {
        self.sine.max(self.cross).max(self.dual_gap)
    }
}

/// Residuals of the two tetrahedral sine laws for `y = psi(x)`.
pub fn sine_law_residuals(x: &CosSextuple, y: &CosSextuple) -> Result<SineLawResiduals> {
    let g = GramMatrix::from_cosines(GramKind::Angles, &x.0)?;
    let bg = crate::gram::cofactors(&g);
    let gp = GramMatrix::from_cosines(GramKind::Lengths, &y.0)?;
    let bp = crate::gram::cofactors(&gp);
    let gamma = (0..4).map(|i| bg.cof[i][i]).product::<f64>();
    let gammap = (0..4).map(|i| bp.cof[i][i]).product::<f64>();
    if gamma <= 0.0 || gammap <= 0.0 {
        return Err(Error::Degenerate(
            "negative diagonal cofactor product".into(),
        ));
    }
    let r_ref = bg.det / gamma.sqrt();
    let dual = gammap.sqrt() / bp.det;

    let sin = |v: f64| -> Result<f64> {
        let s = (1.0 - v * v).sqrt();
        if s < tol::DEGENERATE_COFACTOR {
            return Err(Error::Degenerate(format!("sine factor {s} too small")));
        }
        Ok(s)
    };
    let mut sine: f64 = 0.0;
    for a in 0..3 {
        let b = COMPLEMENT[a];
        let num = sin(y.0[a])? * sin(y.0[b])?;
        let den = sin(x.0[a])? * sin(x.0[b])?;
        sine = sine.max((num / den - r_ref).abs());
    }
    // cross-cosine law on the three cyclic differences
    let cx =
        |t: &CosSextuple, a: usize, b: usize, c: usize, d: usize| t.0[a] * t.0[b] - t.0[c] * t.0[d];
    let mut cross: f64 = 0.0;
    for (a, b, c, d) in [(0, 5, 1, 4), (1, 4, 3, 2), (3, 2, 0, 5)] {
        let num = cx(y, a, b, c, d);
        let den = cx(x, a, b, c, d);
        cross = cross.max((num - r_ref * den).abs() / den.abs().max(1.0));
    }
    Ok(SineLawResiduals {
        sine,
        cross,
        dual_gap: (r_ref - dual).abs(),
    })
}

/// The link triangle of vertex `m`: the spherical triangle cut out by the
/// great sphere polar to `m`. Its angles are the dihedral angles at the
/// edges through `m`; its sides are the planar angles of the opposite
/// face, obtained by one application of the triangle cosine law.
#[derive(Debug, Clone, Copy)]
pub struct LinkTriangle {
    pub vertex: usize,
    /// Cosines of the planar angles, ordered by the pairs
    /// `(i,j), (i,k), (j,k)` with `i < j < k` the complement of `vertex`.
    pub planar_cosines: CosTriple,
}

pub fn link_triangle(x: &CosSextuple, m: usize) -> Result<LinkTriangle> {
    if m > 3 {
        return Err(Error::Dimension {
            expected: 3,
            got: m,
        });
    }
    let rest: Vec<usize> = (0..4).filter(|&t| t != m).collect();
    let trip = CosTriple([
        x.get(rest[0], rest[1]),
        x.get(rest[0], rest[2]),
        x.get(rest[1], rest[2]),
    ]);
    Ok(LinkTriangle {
        vertex: m,
        planar_cosines: phi(&trip)?,
    })
}

/// Result of the two-stage (link triangles, then faces) evaluation of the
/// tetrahedral cosine law.
#[derive(Debug, Clone, Copy)]
pub struct TwoStageSolve {
    pub value: CosSextuple,
    /// Largest difference between the two independent computations of any
    /// edge cosine; each edge is shared by two faces.
    pub discrepancy: f64,
}

/// Solve the tetrahedron by two rounds of the triangle cosine law: first
/// every link triangle (planar angles from dihedral angles), then every
/// face triangle (edge lengths from planar angles). Every edge length is
/// produced twice and must agree; the final values agree with [`psi`].
pub fn two_stage_solve(x: &CosSextuple) -> Result<TwoStageSolve> {
    check_cube(x)?;
    // planar[m][slot of pair within complement of m]
    let mut planar = [[0.0; 6]; 4];
    for m in 0..4 {
        let lk = link_triangle(x, m)?;
        let rest: Vec<usize> = (0..4).filter(|&t| t != m).collect();
        planar[m][pair_index(rest[0], rest[1])] = lk.planar_cosines.0[0];
        planar[m][pair_index(rest[0], rest[2])] = lk.planar_cosines.0[1];
        planar[m][pair_index(rest[1], rest[2])] = lk.planar_cosines.0[2];
    }
    let mut value = [f64::NAN; 6];
    let mut discrepancy: f64 = 0.0;
    for m in 0..4 {
        // face spanned by the complement of m; the planar angle opposite
        // edge (u, v) inside this face carries the superscript of the
        // third face vertex
        let f: Vec<usize> = (0..4).filter(|&t| t != m).collect();
        let (i, j, k) = (f[0], f[1], f[2]);
        let trip = CosTriple([
            planar[k][pair_index(i, j)],
            planar[j][pair_index(i, k)],
            planar[i][pair_index(j, k)],
        ]);
        let out = phi(&trip)?;
        for (slot, &(u, v)) in [(i, j), (i, k), (j, k)].iter().enumerate() {
            let idx = pair_index(u, v);
            if value[idx].is_nan() {
                value[idx] = out.0[slot];
            } else {
                discrepancy = discrepancy.max((value[idx] - out.0[slot]).abs());
            }
        }
    }
    if discrepancy > 1e-8 {
        return Err(Error::Consistency(format!(
            "the two computations of an edge cosine differ by {discrepancy}"
        )));
    }
    Ok(TwoStageSolve {
        value: CosSextuple(value),
        discrepancy,
    })
}

/// Closed-form Jacobian of `psi` in the fixed pair order, and its
/// determinant. With `(k, m)` the complement of `(i, j)`:
///
/// `dy_ij/dx_ij = (1-x_km^2)/sqrt(g_ii g_jj)`,
/// `dy_ij/dx_ik = dy_ij/dx_ij * y_jk * sqrt(g_kk/g_jj)`,
/// `dy_ij/dx_km = dy_ij/dx_ij * p_km^ij * sqrt(g_kk g_mm/(g_ii g_jj))`,
///
/// where `p_km^ij = (y_ik y_jm + y_im y_jk - y_ij y_ik y_im
/// - y_ij y_jk y_jm)/(1 - y_ij^2)`. The determinant factorizes as
/// `(gamma'/d')^5`.
pub fn jacobian_psi(x: &CosSextuple) -> Result<([[f64; 6]; 6], f64)> {
    let y = psi(x)?;
    let g = cofactor_diag(x);
    let mut jac = [[0.0; 6]; 6];
    for (row, &(i, j)) in PAIRS.iter().enumerate() {
        let rest: Vec<usize> = (0..4).filter(|&t| t != i && t != j).collect();
        let (k, m) = (rest[0], rest[1]);
        let base = (1.0 - x.get(k, m) * x.get(k, m)) / (g[i].sqrt() * g[j].sqrt());
        for (col, &(a, b)) in PAIRS.iter().enumerate() {
            if (a, b) == (i, j) {
                jac[row][col] = base;
            } else if col == COMPLEMENT[row] {
                let yij = y.get(i, j);
                let p = (y.get(i, k) * y.get(j, m) + y.get(i, m) * y.get(j, k)
                    - yij * y.get(i, k) * y.get(i, m)
                    - yij * y.get(j, k) * y.get(j, m))
                    / (1.0 - yij * yij);
                jac[row][col] = base * p * (g[k] * g[m] / (g[i] * g[j])).sqrt();
            } else {
                // (a, b) shares exactly one vertex with (i, j)
                let (shared, fresh) = if a == i || a == j { (a, b) } else { (b, a) };
                let other = if shared == i { j } else { i };
                jac[row][col] = base * y.get(other, fresh) * (g[fresh] / g[other]).sqrt();
            }
        }
    }
    let det = numutil::det(&jac);
    Ok((jac, det))
}

/// `gamma' / d'` computed from the length Gram matrix of `y = psi(x)`:
/// the common value of the sine-law ratios and the fifth root of the
/// Jacobian determinant.
pub fn gamma_over_d_dual(y: &CosSextuple) -> Result<f64> {
    let gp = GramMatrix::from_cosines(GramKind::Lengths, &y.0)?;
    let b = crate::gram::cofactors(&gp);
    let prod = (0..4).map(|i| b.cof[i][i]).product::<f64>();
    if prod <= 0.0 || b.det.abs() <= tol::DEGENERATE_COFACTOR {
        return Err(Error::Degenerate(
            "dual Gram matrix at the boundary of existence".into(),
        ));
    }
    Ok(prod.sqrt() / b.det)
}

/// The three invariant densities `((1-x_ij^2)(1-x_km^2))^{5/2}`, one per
/// complementary pairing. `det(jacobian_psi)` equals
/// `density(psi(x))/density(x)` for each.
pub fn volume_densities(x: &CosSextuple) -> [f64; 3] {
    let q: Vec<f64> = x.0.iter().map(|v| 1.0 - v * v).collect();
    [
        (q[0] * q[5]).powf(2.5),
        (q[1] * q[4]).powf(2.5),
        (q[2] * q[3]).powf(2.5),
    ]
}

/// Relative residual of the cofactor-product identity
/// `(g'_11 g'_22 g'_33 g'_44)^{3/2} / (g_11 g_22 g_33 g_44)^{3/2}
///  = prod (1-y_ij^2)^2 / prod (1-x_km^2)^2`.
pub fn ggs_residual(x: &CosSextuple) -> Result<f64> {
    let y = psi(x)?;
    let g = cofactor_diag(x);
    // The length Gram matrix (+y off-diagonal) has the same cofactors as
    // the angle-form polynomials evaluated at -y.
    let neg = CosSextuple([-y.0[0], -y.0[1], -y.0[2], -y.0[3], -y.0[4], -y.0[5]]);
    let gp = cofactor_diag(&neg);
    let num: f64 = gp.iter().product();
    let den: f64 = g.iter().product();
    if num <= 0.0 || den <= 0.0 {
        return Err(Error::Degenerate("cofactor product not positive".into()));
    }
    let lhs = num.powf(1.5) / den.powf(1.5);
    let mut rhs = 1.0;
    for s in 0..6 {
        let qy = 1.0 - y.0[s] * y.0[s];
        let qx = 1.0 - x.0[s] * x.0[s];
        rhs *= (qy * qy) / (qx * qx);
    }
    Ok((lhs - rhs).abs() / lhs.abs())
}

/// Symmetry defect of the matrix `H[(ij)][(i'j')] = d ell_km / d alpha_i'j'`
/// (`(km)` complementary to `(ij)`), assembled from the closed-form
/// Jacobian by the chain rule through `x = cos(alpha)`, `ell = arccos(y)`.
/// `H` is twice the Hessian of the volume of the tetrahedron as a function
/// of its dihedral angles, hence symmetric.
pub fn schlafli_symmetry_residual(alpha: &[f64; 6]) -> Result<f64> {
    let x = CosSextuple::from_angles(*alpha);
    if !admissible(&x) {
        return Err(Error::Domain(
            "dihedral angles do not describe a spherical tetrahedron".into(),
        ));
    }
    let (jac, _) = jacobian_psi(&x)?;
    let y = psi(&x)?;
    let mut h = [[0.0; 6]; 6];
    for a in 0..6 {
        let sin_l = (1.0 - y.0[COMPLEMENT[a]] * y.0[COMPLEMENT[a]]).sqrt();
        if sin_l < tol::DEGENERATE_COFACTOR {
            return Err(Error::Degenerate(format!("sin(ell) = {sin_l} too small")));
        }
        for b in 0..6 {
            h[a][b] = alpha[b].sin() * jac[COMPLEMENT[a]][b] / sin_l;
        }
    }
    let mut res: f64 = 0.0;
    for a in 0..6 {
        for b in (a + 1)..6 {
            res = res.max((h[a][b] - h[b][a]).abs());
        }
    }
    Ok(res)
}

/// Iterate `psi`, recording the four conserved quantities per step. Stops
/// early (with the reason) when an iterate leaves the real domain, which
/// generic initial data eventually does.
pub fn orbit(x0: &CosSextuple, steps: usize) -> Orbit<6> {
    let mut points = vec![x0.0];
    let mut inv = vec![tetra_invariants(x0).to_vec()];
    let mut x = *x0;
    let mut exit = None;
    for n in 0..steps {
        match psi(&x).and_then(|p| {
            if p.0.iter().all(|v| v.abs() < 1.0) {
                Ok(p)
            } else {
                Err(Error::Domain("iterate left the open cube".into()))
            }
        }) {
            Ok(p) => {
                points.push(p.0);
                inv.push(tetra_invariants(&p).to_vec());
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
