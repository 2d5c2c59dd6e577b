//! Orbit storage: a sequence of phase-space points with the conserved
//! quantities evaluated at every step, plus the reason the iteration
//! stopped if it left the real domain before the requested length.

use crate::error::Error;

/// Why and where an orbit stopped early.
#[derive(Debug, Clone)]
pub struct OrbitExit {
    /// Index of the step that could not be taken (the orbit holds
    /// `step + 1` points).
    pub step: usize,
    pub reason: Error,
}

/// An orbit in an `N`-dimensional cosine phase space.
#[derive(Debug, Clone)]
pub struct Orbit<const N: usize> {
    pub points: Vec<[f64; N]>,
    /// One vector of invariant values per recorded point.
    pub invariants: Vec<Vec<f64>>,
    pub exit: Option<OrbitExit>,
}

impl<const N: usize> Orbit<N> {
    /// Number of completed steps.
    pub fn steps(&self) -> usize {
        self.points.len() - 1
    }

    /// Largest deviation of any invariant from its initial value over the
    /// whole recorded orbit.
    pub fn invariant_drift(&self) -> f64 {
        let first = &self.invariants[0];
        self.invariants
            .iter()
            .flat_map(|row| row.iter().zip(first.iter()).map(|(v, v0)| (v - v0).abs()))
            .fold(0.0, f64::max)
    }

    /// CSV rows: `step, <state components>, <invariants suffixed _inv>`,
    /// every number printed with 17 significant digits so the text
    /// round-trips through f64 exactly.
    pub fn to_csv(&self, state_names: &[&str], invariant_names: &[&str]) -> String {
        let mut out = String::from("step");
        for n in state_names {
            out.push(',');
            out.push_str(n);
        }
        for n in invariant_names {
            out.push(',');
            out.push_str(n);
            out.push_str("_inv");
        }
        out.push('\n');
        for (s, (p, iv)) in self.points.iter().zip(self.invariants.iter()).enumerate() {
            out.push_str(&s.to_string());
            for v in p.iter().chain(iv.iter()) {
                out.push(',');
                out.push_str(&format!("{v:.16e}"));
            }
            out.push('\n');
        }
        out
    }
}
