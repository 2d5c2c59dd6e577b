//! Shared numerical plumbing: a portable PRNG, rejection sampling of the
//! geometric domains, finite differences, small dense determinants and the
//! residual reports emitted by verification runs.

use crate::error::{Error, Result};
use crate::{tetra, tol, triangle};
use serde::Serialize;

/// SplitMix64 (Steele, Lea and Flood's published mixer). Chosen because the
/// algorithm is short enough to pin in documentation: the same seed must
/// reproduce the same samples on any platform or in any reimplementation.
///
/// state update: `s += 0x9E3779B97F4A7C15`;
/// output: `z = s; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
/// z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Independent stream `index` derived from `seed`: the stream origin is
    /// `seed + index * 0xA3EC647659359ACD` (wrapping). Distinct indices give
    /// origins far apart on the SplitMix64 counter sequence.
    pub fn stream(seed: u64, index: u64) -> Self {
        Self {
            state: seed.wrapping_add(index.wrapping_mul(0xA3EC_6476_5935_9ACD)),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform in [lo, hi).
    pub fn next_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// Domains the sampler can draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleDomain {
    /// Angle-cosine triples of genuine spherical triangles.
    Tau3,
    /// Dihedral-cosine sextuples with positive definite 4x4 Gram matrix.
    TetraAdmissible,
    /// No geometric constraint, just `|x| <= amplitude` in the given
    /// dimension (used to explore the algebraic domain of the lattice maps).
    LaxReal(usize),
}

impl SampleDomain {
    pub fn dim(&self) -> usize {
        match self {
            SampleDomain::Tau3 => 3,
            SampleDomain::TetraAdmissible => 6,
            SampleDomain::LaxReal(d) => *d,
        }
    }

    /// The predicate a sample must satisfy; exposed so tests can recheck
    /// emitted samples independently of the sampler.
    pub fn accepts(&self, x: &[f64]) -> bool {
        match self {
            SampleDomain::Tau3 => triangle::CosTriple([x[0], x[1], x[2]]).in_tau(),
            SampleDomain::TetraAdmissible => {
                tetra::admissible(&tetra::CosSextuple([x[0], x[1], x[2], x[3], x[4], x[5]]))
            }
            SampleDomain::LaxReal(_) => x.iter().all(|v| v.abs() < 1.0),
        }
    }
}

/// Configuration of one sampling run.
#[derive(Debug, Clone)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub domain: SampleDomain,
    /// Cap on |x| per coordinate, in [0, 1].
    pub amplitude: f64,
}

/// Rejection sampling from the uniform cube `[-amplitude, amplitude]^dim`.
/// Deterministic for a fixed seed. Fails with [`Error::Sampling`] if the
/// acceptance rate over the proposal budget is hopeless.
pub fn sample_domain(cfg: &SampleConfig) -> Result<Vec<Vec<f64>>> {
    if !(0.0..=1.0).contains(&cfg.amplitude) {
        return Err(Error::Domain(format!(
            "amplitude {} outside [0, 1]",
            cfg.amplitude
        )));
    }
    let dim = cfg.domain.dim();
    let mut rng = SplitMix64::new(cfg.seed);
    let mut out = Vec::with_capacity(cfg.count);
    let mut proposals: u64 = 0;
    while out.len() < cfg.count {
        let x: Vec<f64> = (0..dim)
            .map(|_| rng.next_in(-cfg.amplitude, cfg.amplitude))
            .collect();
        proposals += 1;
        if cfg.domain.accepts(&x) {
            out.push(x);
        }
        if proposals >= tol::MAX_PROPOSALS
            && (out.len() as f64) < tol::MIN_ACCEPTANCE_RATE * proposals as f64
        {
            return Err(Error::Sampling {
                min_rate: tol::MIN_ACCEPTANCE_RATE,
                proposals,
            });
        }
    }
    Ok(out)
}

/// Central-difference Jacobian of `f` at `x`, entry error O(h^2).
/// `f`'s own errors propagate.
pub fn fd_jacobian<F>(f: F, x: &[f64], h: f64) -> Result<Vec<Vec<f64>>>
where
    F: Fn(&[f64]) -> Result<Vec<f64>>,
{
    let n = x.len();
    let mut cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut rows = 0usize;
    for c in 0..n {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[c] += h;
        xm[c] -= h;
        let fp = f(&xp)?;
        let fm = f(&xm)?;
        rows = fp.len();
        cols.push(
            fp.iter()
                .zip(fm.iter())
                .map(|(p, m)| (p - m) / (2.0 * h))
                .collect(),
        );
    }
    Ok((0..rows)
        .map(|r| (0..n).map(|c| cols[c][r]).collect())
        .collect())
}

/// Determinant of a small dense matrix by Gaussian elimination with
/// partial pivoting. Sizes here are 3..6, so no blocking is needed.
pub fn det<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    let mut a = *m;
    let mut sign = 1.0;
    let mut d = 1.0;
    for col in 0..N {
        let mut piv = col;
        for r in col + 1..N {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            a.swap(piv, col);
            sign = -sign;
        }
        d *= a[col][col];
        for r in col + 1..N {
            let factor = a[r][col] / a[col][col];
            for c in col..N {
                a[r][c] -= factor * a[col][c];
            }
        }
    }
    sign * d
}

/// `a * b` for small square matrices.
pub fn matmul<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            let mut s = 0.0;
            for k in 0..N {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn transpose<const N: usize>(a: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut out = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// Largest |entry| of `a - b`.
pub fn max_abs_diff<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..N {
        for j in 0..N {
            m = m.max((a[i][j] - b[i][j]).abs());
        }
    }
    m
}

/// One failed sample inside a [`Report`].
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub input: Vec<f64>,
    pub residual: f64,
}

/// Residual summary of one verification suite. `max >= mean >= 0` by
/// construction; `failures` lists the samples whose residual exceeded the
/// tolerance they were recorded against.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    sum: f64,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            samples: 0,
            max_residual: 0.0,
            mean_residual: 0.0,
            failures: Vec::new(),
            sum: 0.0,
        }
    }

    /// Record one sample's residual against `tolerance`.
    pub fn record(&mut self, input: &[f64], residual: f64, tolerance: f64) {
        self.samples += 1;
        self.sum += residual;
        self.max_residual = self.max_residual.max(residual);
        self.mean_residual = self.sum / self.samples as f64;
        // negated form so NaN residuals count as failures
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(residual <= tolerance) {
            self.failures.push(Failure {
                input: input.to_vec(),
                residual,
            });
        }
    }

    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}
