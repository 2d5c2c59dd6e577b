//! Gram matrices of spherical simplices (n = 3, 4): construction,
//! validation, cofactors, the generic cofactor cosine law and vertex
//! realization.
//!
//! Conventions, fixed once for the whole crate:
//! * an *angle* Gram matrix stores `-cos(alpha_ij)` off the diagonal,
//! * a *length* Gram matrix stores `+cos(ell_ij)`,
//! * off-diagonal data is ordered by index pairs `12, 13, 23` (n = 3) or
//!   `12, 13, 23, 14, 24, 34` (n = 4),
//! * a simplex exists iff its Gram matrix is symmetric, positive definite
//!   and has unit diagonal.
//!
//! The two kinds are related by `G' = D G^{-1} D` with a positive diagonal
//! `D`; the cosine law is the entrywise form of that relation.

use crate::error::{Error, Result};
use crate::tol;

/// Whether a Gram matrix was built from angle data or from length data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramKind {
    Angles,
    Lengths,
}

impl GramKind {
    /// The kind produced by one application of the cosine law.
    pub fn dual(self) -> GramKind {
        match self {
            GramKind::Angles => GramKind::Lengths,
            GramKind::Lengths => GramKind::Angles,
        }
    }
}

/// Index pairs (i, j), i < j, for an n x n symmetric matrix, in the fixed
/// crate-wide order.
pub fn pairs(n: usize) -> &'static [(usize, usize)] {
    match n {
        3 => &[(0, 1), (0, 2), (1, 2)],
        4 => &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)],
        _ => unreachable!("only n = 3, 4 are constructible"),
    }
}

/// Symmetric unit-diagonal matrix of pairwise cosines. Stored as a fixed
/// 4x4 block; only the leading `n` rows/columns are meaningful.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    kind: GramKind,
    n: usize,
    m: [[f64; 4]; 4],
}

impl GramMatrix {
    /// Build a Gram matrix from raw cosines (`c.len()` must be 3 or 6).
    /// Angle data enters with a minus sign, length data with a plus sign;
    /// the caller always passes plain cosines and the kind tag.
    pub fn from_cosines(kind: GramKind, c: &[f64]) -> Result<GramMatrix> {
        let n = match c.len() {
            3 => 3,
            6 => 4,
            other => {
                return Err(Error::Dimension {
                    expected: 3,
                    got: other,
                })
            }
        };
        if let Some(bad) = c.iter().find(|v| v.abs() > 1.0 || !v.is_finite()) {
            return Err(Error::Domain(format!("cosine {bad} outside [-1, 1]")));
        }
        let sign = match kind {
            GramKind::Angles => -1.0,
            GramKind::Lengths => 1.0,
        };
        let mut m = [[0.0; 4]; 4];
        for i in 0..n {
            m[i][i] = 1.0;
        }
        for (&(i, j), &v) in pairs(n).iter().zip(c.iter()) {
            m[i][j] = sign * v;
            m[j][i] = sign * v;
        }
        Ok(GramMatrix { kind, n, m })
    }

    pub fn kind(&self) -> GramKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    /// The raw cosines this matrix was built from, in pair order.
    pub fn cosines(&self) -> Vec<f64> {
        let sign = match self.kind {
            GramKind::Angles => -1.0,
            GramKind::Lengths => 1.0,
        };
        pairs(self.n)
            .iter()
            .map(|&(i, j)| sign * self.m[i][j])
            .collect()
    }

    /// Leading principal minors, sizes 1..=n.
    pub fn leading_minors(&self) -> Vec<f64> {
        (1..=self.n).map(|k| self.minor_det(k)).collect()
    }

    fn minor_det(&self, k: usize) -> f64 {
        match k {
            1 => self.m[0][0],
            2 => self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0],
            3 => det3(&[
                [self.m[0][0], self.m[0][1], self.m[0][2]],
                [self.m[1][0], self.m[1][1], self.m[1][2]],
                [self.m[2][0], self.m[2][1], self.m[2][2]],
            ]),
            4 => {
                // expansion along the first row with 3x3 minors
                let mut d = 0.0;
                let mut sign = 1.0;
                for c in 0..4 {
                    d += sign * self.m[0][c] * self.minor3(0, c);
                    sign = -sign;
                }
                d
            }
            _ => unreachable!(),
        }
    }

    /// 3x3 minor of the 4x4 block with row `r` and column `c` deleted.
    fn minor3(&self, r: usize, c: usize) -> f64 {
        let rows: Vec<usize> = (0..4).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
        let mut s = [[0.0; 3]; 3];
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                s[a][b] = self.m[i][j];
            }
        }
        det3(&s)
    }

    /// Positive definiteness via leading principal minors, all above
    /// [`tol::POSDEF_MIN_MINOR`]. This is the existence certificate for the
    /// simplex the cosines describe.
    pub fn is_valid(&self) -> bool {
        self.leading_minors()
            .iter()
            .all(|&d| d > tol::POSDEF_MIN_MINOR)
    }
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a * d - b * c
}

/// Cofactors `g_ij` and determinant of a Gram matrix, by explicit
/// closed-form expansion (exact structure for n <= 4, no elimination).
#[derive(Debug, Clone)]
pub struct CofactorBundle {
    pub n: usize,
    pub cof: [[f64; 4]; 4],
    pub det: f64,
}

impl CofactorBundle {
    /// Determinant recomputed by cofactor expansion along `row`; must agree
    /// with `self.det` for every row.
    pub fn det_along_row(&self, g: &GramMatrix, row: usize) -> f64 {
        (0..self.n)
            .map(|c| g.entry(row, c) * self.cof[row][c])
            .sum()
    }
}

/// Cofactor matrix and determinant. Works for invalid matrices too; the
/// caller decides what validity means for its use.
pub fn cofactors(g: &GramMatrix) -> CofactorBundle {
    let mut cof = [[0.0; 4]; 4];
    match g.n {
        3 => {
            for r in 0..3 {
                for c in 0..3 {
                    let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
                    let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
                    let minor = det2(
                        g.m[rows[0]][cols[0]],
                        g.m[rows[0]][cols[1]],
                        g.m[rows[1]][cols[0]],
                        g.m[rows[1]][cols[1]],
                    );
                    cof[r][c] = if (r + c) % 2 == 0 { minor } else { -minor };
                }
            }
        }
        4 => {
            for r in 0..4 {
                for c in 0..4 {
                    let minor = g.minor3(r, c);
                    cof[r][c] = if (r + c) % 2 == 0 { minor } else { -minor };
                }
            }
        }
        _ => unreachable!(),
    }
    let det = (0..g.n).map(|c| g.m[0][c] * cof[0][c]).sum();
    CofactorBundle { n: g.n, cof, det }
}

/// The cofactor cosine law: dual cosines `g_ij / sqrt(g_ii g_jj)` read with
/// the sign convention of the dual kind. Applied to an angle Gram matrix it
/// returns the cosines of the side lengths; applied to a length Gram matrix
/// it returns the cosines of the dihedral angles.
pub fn cosine_law_dual(g: &GramMatrix) -> Result<Vec<f64>> {
    let b = cofactors(g);
    for i in 0..g.n {
        if b.cof[i][i] <= tol::DEGENERATE_COFACTOR {
            return Err(Error::Degenerate(format!(
                "diagonal cofactor g_{i}{i} = {} at the boundary of existence",
                b.cof[i][i]
            )));
        }
    }
    // Entries of the dual Gram matrix; converting entries to cosines flips
    // the sign exactly when the dual matrix is of angle kind.
    let sign = match g.kind.dual() {
        GramKind::Angles => -1.0,
        GramKind::Lengths => 1.0,
    };
    Ok(pairs(g.n)
        .iter()
        .map(|&(i, j)| sign * b.cof[i][j] / (b.cof[i][i].sqrt() * b.cof[j][j].sqrt()))
        .collect())
}

/// The dual Gram matrix itself (opposite kind, dual cosines).
pub fn dual_gram(g: &GramMatrix) -> Result<GramMatrix> {
    GramMatrix::from_cosines(g.kind.dual(), &cosine_law_dual(g)?)
}

/// Max-entry residual of `Gp - D G^{-1} D`, with `D_ii = sqrt(det G / g_ii)`
/// recovered from the cofactors of `G`. Near zero exactly when `Gp` is the
/// dual of `G`.
pub fn duality_residual(g: &GramMatrix, gp: &GramMatrix) -> Result<f64> {
    if g.n != gp.n {
        return Err(Error::Dimension {
            expected: g.n,
            got: gp.n,
        });
    }
    if !g.is_valid() || !gp.is_valid() {
        return Err(Error::Domain(
            "duality residual needs two valid Gram matrices".into(),
        ));
    }
    let b = cofactors(g);
    for i in 0..g.n {
        if b.cof[i][i] <= tol::DEGENERATE_COFACTOR {
            return Err(Error::Degenerate(format!(
                "diagonal cofactor g_{i}{i} too small"
            )));
        }
    }
    let d: Vec<f64> = (0..g.n).map(|i| (b.det / b.cof[i][i]).sqrt()).collect();
    let mut res: f64 = 0.0;
    for i in 0..g.n {
        for j in 0..g.n {
            // (G^{-1})_ij = g_ij / det for a symmetric matrix
            let rhs = d[i] * (b.cof[i][j] / b.det) * d[j];
            res = res.max((gp.entry(i, j) - rhs).abs());
        }
    }
    Ok(res)
}

/// Unit vertex vectors `v_i` (columns of `V`), polar vertices `v_i*`
/// (columns of `W`) and the positive diagonal pairing `D = V^T W`.
#[derive(Debug, Clone)]
pub struct VertexRealization {
    pub n: usize,
    /// Columns are the simplex vertices; `V^T V` reproduces the input Gram.
    pub v: [[f64; 4]; 4],
    /// Columns are the polar vertices; `W^T W` reproduces the dual Gram.
    pub w: [[f64; 4]; 4],
    /// Diagonal of `V^T W`.
    pub dscale: [f64; 4],
}

impl VertexRealization {
    /// `V^T V` (or `W^T W` for `of_w`), for reconstruction checks.
    pub fn gram_of(&self, of_w: bool) -> [[f64; 4]; 4] {
        let cols = if of_w { &self.w } else { &self.v };
        let mut out = [[0.0; 4]; 4];
        for i in 0..self.n {
            for j in 0..self.n {
                out[i][j] = (0..self.n).map(|k| cols[k][i] * cols[k][j]).sum();
            }
        }
        out
    }

    /// `V^T W`, diagonal with positive entries up to roundoff.
    pub fn pairing(&self) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for i in 0..self.n {
            for j in 0..self.n {
                out[i][j] = (0..self.n).map(|k| self.v[k][i] * self.w[k][j]).sum();
            }
        }
        out
    }
}

/// Realize the simplex with Gram matrix `gp`: `V` is the transposed
/// Cholesky factor (so `V^T V = gp` and the vertex coordinates are
/// triangular), and column `i` of `W` is the unit vector orthogonal to all
/// `v_j`, `j != i`, with positive pairing against `v_i`.
pub fn realize_vertices(gp: &GramMatrix) -> Result<VertexRealization> {
    let n = gp.n;
    // lower-triangular L with L L^T = gp
    let mut l = [[0.0; 4]; 4];
    for j in 0..n {
        let mut pivot = gp.entry(j, j);
        for k in 0..j {
            pivot -= l[j][k] * l[j][k];
        }
        if pivot <= tol::CHOLESKY_MIN_PIVOT {
            return Err(Error::Degenerate(format!(
                "Cholesky pivot {pivot} at column {j}"
            )));
        }
        l[j][j] = pivot.sqrt();
        for i in j + 1..n {
            let mut s = gp.entry(i, j);
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            l[i][j] = s / l[j][j];
        }
    }
    // V = L^T: column i of V is row i of L
    let mut v = [[0.0; 4]; 4];
    for r in 0..n {
        for c in 0..n {
            v[r][c] = l[c][r];
        }
    }
    // column i of W: solve L u = e_i (forward substitution), normalize.
    let mut w = [[0.0; 4]; 4];
    let mut dscale = [0.0; 4];
    for i in 0..n {
        let mut u = [0.0; 4];
        for r in 0..n {
            let mut s = if r == i { 1.0 } else { 0.0 };
            for k in 0..r {
                s -= l[r][k] * u[k];
            }
            u[r] = s / l[r][r];
        }
        let norm = (0..n).map(|k| u[k] * u[k]).sum::<f64>().sqrt();
        for r in 0..n {
            w[r][i] = u[r] / norm;
        }
        // <v_i*, v_i> = 1 / |u|
        dscale[i] = 1.0 / norm;
    }
    Ok(VertexRealization { n, v, w, dscale })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric_triangle() -> GramMatrix {
        GramMatrix::from_cosines(GramKind::Angles, &[-0.5, -0.5, -0.5]).unwrap()
    }

    #[test]
    fn right_angled_triangle_is_identity() {
        let g = GramMatrix::from_cosines(GramKind::Angles, &[0.0, 0.0, 0.0]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.entry(i, j), if i == j { 1.0 } else { 0.0 });
            }
        }
        assert!(g.is_valid());
        assert_eq!(cosine_law_dual(&g).unwrap(), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn symmetric_triangle_gram() {
        // angle cosines -1/2 -> off-diagonal entries +1/2,
        // eigenvalues {2, 1/2, 1/2}, so valid
        let g = symmetric_triangle();
        assert_eq!(g.entry(0, 1), 0.5);
        assert!(g.is_valid());
        let minors = g.leading_minors();
        assert!((minors[2] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_euclidean_tetrahedron_is_invalid() {
        // all six angle cosines 1/3: off-diagonal -1/3, eigenvalues
        // {0, 4/3, 4/3, 4/3}, determinant 0
        let g = GramMatrix::from_cosines(
            GramKind::Angles,
            &[
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
            ],
        )
        .unwrap();
        let minors = g.leading_minors();
        assert!(minors[3].abs() < 1e-15);
        assert!(!g.is_valid());
    }

    #[test]
    fn out_of_range_cosine_rejected() {
        assert!(matches!(
            GramMatrix::from_cosines(GramKind::Angles, &[1.5, 0.0, 0.0]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cofactors_of_identity() {
        let g = GramMatrix::from_cosines(GramKind::Angles, &[0.0, 0.0, 0.0]).unwrap();
        let b = cofactors(&g);
        assert_eq!(b.det, 1.0);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.cof[i][j], if i == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn cofactors_symmetric_triangle_by_hand() {
        // off-diagonal 1/2: g_ii = 3/4, g_ij = -1/4, det = 1/2
        let b = cofactors(&symmetric_triangle());
        for i in 0..3 {
            assert!((b.cof[i][i] - 0.75).abs() < 1e-15);
            for j in 0..3 {
                if i != j {
                    assert!((b.cof[i][j] + 0.25).abs() < 1e-15);
                }
            }
        }
        assert!((b.det - 0.5).abs() < 1e-15);
    }

    /// Test-only oracle: inverse by Gaussian elimination with partial
    /// pivoting, independent of the closed-form cofactor expansion.
    fn lu_inverse_4(m: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
        let mut a = *m;
        let mut inv = [[0.0; 4]; 4];
        for (i, row) in inv.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        for col in 0..4 {
            let mut piv = col;
            for r in col + 1..4 {
                if a[r][col].abs() > a[piv][col].abs() {
                    piv = r;
                }
            }
            a.swap(piv, col);
            inv.swap(piv, col);
            let p = a[col][col];
            for c in 0..4 {
                a[col][c] /= p;
                inv[col][c] /= p;
            }
            for r in 0..4 {
                if r != col {
                    let f = a[r][col];
                    for c in 0..4 {
                        a[r][c] -= f * a[col][c];
                        inv[r][c] -= f * inv[col][c];
                    }
                }
            }
        }
        inv
    }

    #[test]
    fn cofactors_match_lu_adjugate_oracle() {
        // adj(G) = G^{-1} det(G) from an elimination-based inverse
        let mut rng = crate::numutil::SplitMix64::new(163);
        let mut tested = 0;
        while tested < 50 {
            let c: Vec<f64> = (0..6).map(|_| rng.next_in(-0.3, 0.3)).collect();
            let g = GramMatrix::from_cosines(GramKind::Angles, &c).unwrap();
            if !g.is_valid() {
                continue;
            }
            tested += 1;
            let b = cofactors(&g);
            let inv = lu_inverse_4(&g.m);
            let mut max_cof: f64 = 0.0;
            for i in 0..4 {
                for j in 0..4 {
                    max_cof = max_cof.max(b.cof[i][j].abs());
                }
            }
            for i in 0..4 {
                for j in 0..4 {
                    // cofactor matrix of a symmetric matrix is its adjugate
                    let adj = inv[i][j] * b.det;
                    assert!(
                        (b.cof[i][j] - adj).abs() <= 1e-11 * max_cof.max(1.0),
                        "cofactor ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn adjugate_identity_holds() {
        // G * adj(G) = det(G) * I entrywise
        let mut rng = crate::numutil::SplitMix64::new(167);
        for _ in 0..50 {
            let c: Vec<f64> = (0..6).map(|_| rng.next_in(-0.3, 0.3)).collect();
            let g = GramMatrix::from_cosines(GramKind::Angles, &c).unwrap();
            let b = cofactors(&g);
            let mut max_cof: f64 = 0.0;
            for i in 0..4 {
                for j in 0..4 {
                    max_cof = max_cof.max(b.cof[i][j].abs());
                }
            }
            for i in 0..4 {
                for j in 0..4 {
                    let entry: f64 = (0..4).map(|k| g.entry(i, k) * b.cof[j][k]).sum();
                    let expect = if i == j { b.det } else { 0.0 };
                    assert!((entry - expect).abs() <= 1e-12 * max_cof.max(1.0));
                }
            }
        }
    }

    #[test]
    fn realized_columns_have_unit_norm() {
        let gp = GramMatrix::from_cosines(GramKind::Lengths, &[-0.2, 0.15, -0.1, 0.05, -0.25, 0.1])
            .unwrap();
        assert!(gp.is_valid());
        let r = realize_vertices(&gp).unwrap();
        for col in 0..4 {
            let nv: f64 = (0..4).map(|row| r.v[row][col] * r.v[row][col]).sum();
            let nw: f64 = (0..4).map(|row| r.w[row][col] * r.w[row][col]).sum();
            assert!((nv.sqrt() - 1.0).abs() <= 1e-13);
            assert!((nw.sqrt() - 1.0).abs() <= 1e-13);
        }
    }

    #[test]
    fn det_consistent_along_every_row() {
        let g = GramMatrix::from_cosines(GramKind::Angles, &[-0.2, 0.1, -0.35, 0.05, -0.15, 0.25])
            .unwrap();
        let b = cofactors(&g);
        for r in 0..4 {
            let d = b.det_along_row(&g, r);
            assert!((d - b.det).abs() <= 1e-13 * b.det.abs().max(1.0));
        }
    }

    #[test]
    fn dual_of_symmetric_triangle() {
        let y = cosine_law_dual(&symmetric_triangle()).unwrap();
        for v in y {
            assert!((v + 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn dual_of_symmetric_tetrahedron() {
        // all angle cosines -1/2: g_ij = c(1+c)^2 = -1/8,
        // g_ii = (1+c)^2 (1-2c) = 1/2, dual cosines -1/4
        let g = GramMatrix::from_cosines(GramKind::Angles, &[-0.5; 6]).unwrap();
        let b = cofactors(&g);
        assert!((b.cof[0][0] - 0.5).abs() < 1e-15);
        assert!((b.cof[0][1] + 0.125).abs() < 1e-15);
        let y = cosine_law_dual(&g).unwrap();
        for v in y {
            assert!((v + 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn length_gram_dual_has_angle_sign() {
        // dual of the dual recovers the original angle cosines
        let g = symmetric_triangle();
        let gp = dual_gram(&g).unwrap();
        assert_eq!(gp.kind(), GramKind::Lengths);
        let back = cosine_law_dual(&gp).unwrap();
        for v in back {
            assert!((v + 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn duality_residual_identity_and_symmetric() {
        let id = GramMatrix::from_cosines(GramKind::Angles, &[0.0, 0.0, 0.0]).unwrap();
        let idp = GramMatrix::from_cosines(GramKind::Lengths, &[0.0, 0.0, 0.0]).unwrap();
        assert_eq!(duality_residual(&id, &idp).unwrap(), 0.0);

        let g = symmetric_triangle();
        let gp = dual_gram(&g).unwrap();
        assert!(duality_residual(&g, &gp).unwrap() <= 1e-13);
    }

    #[test]
    fn realize_identity() {
        let id = GramMatrix::from_cosines(GramKind::Lengths, &[0.0, 0.0, 0.0]).unwrap();
        let r = realize_vertices(&id).unwrap();
        for i in 0..3 {
            assert!((r.dscale[i] - 1.0).abs() < 1e-15);
            for j in 0..3 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((r.v[i][j] - e).abs() < 1e-15);
                assert!((r.w[i][j] - e).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn realize_symmetric_triangle() {
        // length Gram with off-diagonal -1/3: the triangle has angle
        // cosines -1/2, so the polar Gram W^T W = (-cos alpha) has
        // off-diagonal +1/2 (the polar triangle's sides are pi/3)
        let gp = GramMatrix::from_cosines(GramKind::Lengths, &[-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0])
            .unwrap();
        let r = realize_vertices(&gp).unwrap();
        let vtv = r.gram_of(false);
        for &(i, j) in pairs(3) {
            assert!((vtv[i][j] + 1.0 / 3.0).abs() < 1e-14);
        }
        let wtw = r.gram_of(true);
        let g = dual_gram(&gp).unwrap();
        for &(i, j) in pairs(3) {
            assert!((wtw[i][j] - 0.5).abs() < 1e-14);
            assert!((wtw[i][j] - g.entry(i, j)).abs() < 1e-14);
        }
        let p = r.pairing();
        for i in 0..3 {
            assert!(p[i][i] > 0.0);
            for j in 0..3 {
                if i != j {
                    assert!(p[i][j].abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn realize_degenerate_rejected() {
        let g = GramMatrix::from_cosines(
            GramKind::Angles,
            &[
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
                1.0 / 3.0,
            ],
        )
        .unwrap();
        assert!(matches!(realize_vertices(&g), Err(Error::Degenerate(_))));
    }
}
