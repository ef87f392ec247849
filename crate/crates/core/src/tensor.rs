//! Numerical side: adjacency tensor action, Perron root, similarity certificates.
//!
//! The adjacency tensor has entry `1/(m-1)!` on every ordering of every edge.
//! It is never materialized; everything streams over the edge list.

use std::f64::consts::TAU;
use std::ops::{AddAssign, Mul};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::symmetry::Coloring;

/// `(A x^{m-1})_i = Σ_{e ∋ i} Π_{j ∈ e, j ≠ i} x_j`.
///
/// Vertex `v` reads `x[v - 1]`.
pub fn apply_adjacency<T>(g: &Hypergraph, x: &[T]) -> Result<Vec<T>>
where
    T: Copy + Zero + One + Mul<Output = T> + AddAssign,
{
    if x.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch { expected: g.vertex_count(), found: x.len() });
    }
    let m = g.uniformity();
    let mut y = vec![T::zero(); x.len()];
    let mut prefix = vec![T::one(); m + 1];
    for e in g.edges() {
        for (i, &v) in e.iter().enumerate() {
            prefix[i + 1] = prefix[i] * x[v - 1];
        }
        let mut suffix = T::one();
        for (i, &v) in e.iter().enumerate().rev() {
            y[v - 1] += prefix[i] * suffix;
            suffix = suffix * x[v - 1];
        }
    }
    Ok(y)
}

/// Result of the power iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEstimate {
    /// Midpoint of the final Collatz-Wielandt bracket.
    pub rho: f64,
    /// Positive eigenvector estimate with unit Euclidean norm.
    pub eigenvector: Vec<f64>,
    pub iterations: usize,
    /// Width of the final bracket.
    pub residual: f64,
    pub lower: f64,
    pub upper: f64,
    /// `(min, max)` Collatz-Wielandt ratios at every step, starting with the
    /// all-ones vector.
    pub brackets: Vec<(f64, f64)>,
}

/// Perron root `ρ(G)` of a connected hypergraph.
///
/// Runs the nonnegative-tensor power method on `A + I` from the all-ones
/// vector: `x ← normalize((A x^{m-1} + x^{[m-1]})^{[1/(m-1)]})`. The shift
/// keeps the iteration convergent on "bipartite" hypergraphs and leaves the
/// ratios `r_i = (A x^{m-1})_i / x_i^{m-1}` offset by exactly 1, so
/// `min r ≤ ρ ≤ max r` holds at every step and the bracket only tightens.
pub fn power_iteration_rho(g: &Hypergraph, tolerance: f64, max_iterations: usize) -> Result<SpectralEstimate> {
    g.require_connected()?;
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tolerance}")));
    }
    let exponent = (g.uniformity() - 1) as i32;
    let n = g.vertex_count();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut brackets: Vec<(f64, f64)> = Vec::new();

    let mut iterations = 0;
    loop {
        let y = apply_adjacency(g, &x)?;
        let powered: Vec<f64> = x.iter().map(|v| v.powi(exponent)).collect();
        let (lower, upper) = y
            .iter()
            .zip(&powered)
            .map(|(yi, pi)| yi / pi)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r), hi.max(r)));

        if let Some(&(prev_lo, prev_hi)) = brackets.last() {
            let slack = 1e-12 * prev_hi.abs().max(1.0);
            if lower < prev_lo - slack || upper > prev_hi + slack {
                return Err(Error::Consistency(format!(
                    "bracket widened at step {iterations}: [{prev_lo}, {prev_hi}] -> [{lower}, {upper}]"
                )));
            }
        }
        brackets.push((lower, upper));

        if upper - lower <= tolerance {
            return Ok(SpectralEstimate {
                rho: 0.5 * (lower + upper),
                eigenvector: x,
                iterations,
                residual: upper - lower,
                lower,
                upper,
                brackets,
            });
        }
        if iterations >= max_iterations {
            return Err(Error::NonConvergence { iterations, lower, upper });
        }

        let root = 1.0 / f64::from(exponent);
        let next: Vec<f64> = y.iter().zip(&powered).map(|(yi, pi)| (yi + pi).powf(root)).collect();
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        x = next.into_iter().map(|v| v / norm).collect();
        if x.iter().any(|&v| v.is_nan() || v <= 0.0) {
            return Err(Error::Consistency("iterate lost strict positivity".into()));
        }
        iterations += 1;
    }
}

/// Numerical check that `A = e^{-i2π/ℓ} D^{-(m-1)} A D` with
/// `D = diag(exp(i2πφ(v)/m))`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityCertificate {
    pub modulus: u64,
    pub phases: Vec<Complex64>,
    pub rotation: Complex64,
    /// Largest entrywise deviation of `e^{-i2π/ℓ} D^{-(m-1)} A D` from `A`,
    /// relative to the entry.
    pub max_deviation: f64,
}

impl SimilarityCertificate {
    pub const THRESHOLD: f64 = 1e-12;

    pub fn holds(&self) -> bool {
        self.max_deviation <= Self::THRESHOLD
    }
}

pub fn verify_similarity(g: &Hypergraph, phi: &Coloring, ell: u64) -> Result<SimilarityCertificate> {
    let m = g.uniformity() as u64;
    if phi.modulus() != m {
        return Err(Error::ModulusMismatch { left: m, right: phi.modulus() });
    }
    if phi.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch { expected: g.vertex_count(), found: phi.len() });
    }
    if ell == 0 || !m.is_multiple_of(ell) {
        return Err(Error::NotDivisor { ell, modulus: m });
    }

    let phases: Vec<Complex64> =
        phi.values().iter().map(|&c| Complex64::from_polar(1.0, TAU * c as f64 / m as f64)).collect();
    let rotation = Complex64::from_polar(1.0, TAU / ell as f64);
    let unrotate = rotation.conj();
    let exponent = (m - 1) as i32;

    let mut max_deviation: f64 = 0.0;
    for e in g.edges() {
        for &lead in e {
            let scale = phases[lead - 1].powi(-exponent);
            let rest = e
                .iter()
                .filter(|&&j| j != lead)
                .fold(Complex64::new(1.0, 0.0), |acc, &j| acc * phases[j - 1]);
            let deviation = (unrotate * scale * rest - 1.0).norm();
            max_deviation = max_deviation.max(deviation);
        }
    }
    Ok(SimilarityCertificate { modulus: m, phases, rotation, max_deviation })
}

/// Candidate eigenpair `(ρ e^{i2π/ℓ}, D x)` obtained by rotating a Perron pair
/// with the phases of an `(m, ℓ)`-coloring.
pub fn rotated_eigenpair(
    estimate: &SpectralEstimate,
    certificate: &SimilarityCertificate,
) -> (Complex64, Vec<Complex64>) {
    let lambda = certificate.rotation * estimate.rho;
    let vector = estimate.eigenvector.iter().zip(&certificate.phases).map(|(&x, &d)| d * x).collect();
    (lambda, vector)
}

/// `max_i |(A x^{m-1})_i - λ x_i^{m-1}|`.
pub fn eigen_residual(g: &Hypergraph, lambda: Complex64, x: &[Complex64]) -> Result<f64> {
    let y = apply_adjacency(g, x)?;
    let exponent = (g.uniformity() - 1) as i32;
    Ok(y.iter().zip(x).map(|(yi, xi)| (yi - lambda * xi.powi(exponent)).norm()).fold(0.0, f64::max))
}

/// The `d = lcm(s, c)` points `ρ e^{i2πq/d}` that are eigenvalues of
/// `G^{m,s}` when `ρ = ρ(G^{m,s})` and `c = c(G)`.
pub fn guaranteed_circle_points(rho: f64, c_base: u64, s: u64) -> Vec<Complex64> {
    let d = c_base.max(1).lcm(&s.max(1));
    (0..d).map(|q| Complex64::from_polar(rho, TAU * q as f64 / d as f64)).collect()
}
