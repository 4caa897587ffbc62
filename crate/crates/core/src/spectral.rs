//! Certified spectral-radius computation.
//!
//! For a connected graph the power iteration runs on the shifted matrix
//! `A + I` (primitive even for bipartite graphs, same Perron vector), and
//! every iterate yields the two-sided quotient enclosure
//! `min_v (Ax)_v / x_v  <=  rho(A)  <=  max_v (Ax)_v / x_v`
//! for the current positive vector `x`. The returned interval is the last
//! enclosure widened by 4 ulps on each side to absorb rounding in the
//! quotients, so the certificate does not rest on convergence heuristics.

use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: u64 = 1_000_000;

/// Componentwise slack used when classifying certificate comparisons;
/// relative to the magnitude of the compared values.
pub const CERT_SLACK: f64 = 1e-8;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("graph is disconnected; split into components before calling")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("vector length {got} does not match graph order {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("invalid order: {op} requires {requirement}, got {got}")]
    InvalidOrder {
        op: &'static str,
        requirement: &'static str,
        got: usize,
    },
}

/// A certified enclosure of the spectral radius together with the Perron
/// vector under max-entry-1 normalization.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    pub rho_lo: f64,
    pub rho_hi: f64,
    /// Positive vector with maximum entry exactly 1.
    pub vector: Vec<f64>,
    pub iterations: u64,
    /// Infinity norm of `A x - rho_mid x` for the returned vector.
    pub residual: f64,
    /// False when the iteration cap was reached before the enclosure width
    /// dropped below the requested tolerance.
    pub converged: bool,
}

impl SpectralResult {
    pub fn width(&self) -> f64 {
        self.rho_hi - self.rho_lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.rho_lo + self.rho_hi)
    }

    /// The Perron vector rescaled to unit 2-norm.
    pub fn principal_vector(&self) -> Vec<f64> {
        let norm = self.vector.iter().map(|x| x * x).sum::<f64>().sqrt();
        self.vector.iter().map(|x| x / norm).collect()
    }
}

fn widen_down(x: f64, ulps: u32) -> f64 {
    let mut y = x;
    for _ in 0..ulps {
        y = y.next_down();
    }
    y
}

fn widen_up(x: f64, ulps: u32) -> f64 {
    let mut y = x;
    for _ in 0..ulps {
        y = y.next_up();
    }
    y
}

fn multiply_adjacency(g: &Graph, x: &[f64], out: &mut [f64]) {
    for v in 0..g.order() {
        out[v] = g.neighbors(v).iter().map(|&w| x[w]).sum();
    }
}

/// Certified spectral radius of a connected graph: the true Perron root lies
/// in `[rho_lo, rho_hi]` by the quotient enclosure, and the width is at most
/// `tol` unless the iteration cap was hit (`converged == false`).
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }

    let mut x = vec![1.0f64; n];
    let mut ax = vec![0.0f64; n];
    let mut iterations = 0u64;
    let (mut rho_lo, mut rho_hi);
    let mut converged;
    loop {
        multiply_adjacency(g, &x, &mut ax);
        iterations += 1;
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in 0..n {
            // quotient of the shifted matrix, minus the shift
            let q = (ax[v] + x[v]) / x[v] - 1.0;
            lo = lo.min(q);
            hi = hi.max(q);
        }
        rho_lo = widen_down(lo, 4);
        rho_hi = widen_up(hi, 4);
        converged = rho_hi - rho_lo <= tol;
        if converged || iterations >= MAX_ITERATIONS {
            break;
        }
        let mut max = 0.0f64;
        for v in 0..n {
            ax[v] += x[v];
            max = max.max(ax[v]);
        }
        for v in 0..n {
            x[v] = ax[v] / max;
        }
    }

    // exact max-entry-1 normalization of the final vector
    let max = x.iter().copied().fold(0.0f64, f64::max);
    for v in 0..n {
        x[v] /= max;
    }
    multiply_adjacency(g, &x, &mut ax);
    let mid = 0.5 * (rho_lo + rho_hi);
    let residual = (0..n)
        .map(|v| (ax[v] - mid * x[v]).abs())
        .fold(0.0f64, f64::max);

    Ok(SpectralResult {
        rho_lo,
        rho_hi,
        vector: x,
        iterations,
        residual,
        converged,
    })
}

/// Perron vector with maximum entry exactly 1.
pub fn normalized_eigenvector(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    Ok(spectral_radius(g, DEFAULT_TOL)?.vector)
}

/// Perron vector with unit 2-norm.
pub fn principal_eigenvector(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    Ok(spectral_radius(g, DEFAULT_TOL)?.principal_vector())
}

/// `x^T A x / x^T x`, with the quadratic form counting each edge twice:
/// `x^T A x = 2 * sum over edges uv of x_u x_v`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != g.order() {
        return Err(SpectralError::DimensionMismatch {
            expected: g.order(),
            got: x.len(),
        });
    }
    let den: f64 = x.iter().map(|v| v * v).sum();
    if den == 0.0 {
        return Err(SpectralError::ZeroVector);
    }
    let num: f64 = 2.0 * g.edges().map(|(u, v)| x[u] * x[v]).sum::<f64>();
    Ok(num / den)
}

/// Inequality direction of a polynomial certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `f(A) Y <= r Y` certifies `f(rho) <= r`.
    UpperBound,
    /// `f(A) Y >= r Y` certifies `f(rho) >= r`.
    LowerBound,
}

/// A polynomial test `f(A) Y` versus `r Y` with a nonnegative nonzero vector.
#[derive(Debug, Clone)]
pub struct PolyCertificate {
    /// Coefficients `c_0 + c_1 x + ... + c_d x^d`.
    pub coefficients: Vec<f64>,
    pub test_vector: Vec<f64>,
    pub bound: f64,
    pub direction: Direction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateOutcome {
    /// The componentwise inequality holds (within slack), certifying the
    /// stated bound on `f(rho)`.
    pub holds: bool,
    /// Some component is strict beyond the slack, certifying the strict
    /// bound on `f(rho)`.
    pub strict_component: bool,
    /// Every component is an equality within slack.
    pub equality_everywhere: bool,
}

pub fn check_poly_certificate(
    g: &Graph,
    cert: &PolyCertificate,
) -> Result<CertificateOutcome, SpectralError> {
    check_poly_certificate_with_slack(g, cert, CERT_SLACK)
}

/// Evaluates `f(A) Y` by repeated multiply-accumulate on vectors (never
/// forming `f(A)`) and classifies it against `r Y` componentwise. `slack`
/// scales with the magnitude of the compared values; strictness is only
/// reported when resolved beyond it.
pub fn check_poly_certificate_with_slack(
    g: &Graph,
    cert: &PolyCertificate,
    slack: f64,
) -> Result<CertificateOutcome, SpectralError> {
    let n = g.order();
    if cert.test_vector.len() != n {
        return Err(SpectralError::DimensionMismatch {
            expected: n,
            got: cert.test_vector.len(),
        });
    }
    if cert.coefficients.is_empty() {
        return Err(SpectralError::InvalidCertificate(
            "polynomial has no coefficients".into(),
        ));
    }
    let y = &cert.test_vector;
    if y.iter().any(|&v| v < 0.0 || !v.is_finite()) {
        return Err(SpectralError::InvalidCertificate(
            "test vector must be nonnegative and finite".into(),
        ));
    }
    if y.iter().all(|&v| v == 0.0) {
        return Err(SpectralError::ZeroVector);
    }

    // Horner: value = c_d Y; value = A value + c_k Y
    let mut value: Vec<f64> = y
        .iter()
        .map(|&v| v * cert.coefficients[cert.coefficients.len() - 1])
        .collect();
    let mut scratch = vec![0.0f64; n];
    for &c in cert.coefficients.iter().rev().skip(1) {
        multiply_adjacency(g, &value, &mut scratch);
        for v in 0..n {
            value[v] = scratch[v] + c * y[v];
        }
    }

    let scale = value
        .iter()
        .map(|v| v.abs())
        .chain(y.iter().map(|&v| (cert.bound * v).abs()))
        .fold(1.0f64, f64::max);
    let eps = slack * scale;

    let mut holds = true;
    let mut strict = false;
    let mut equality = true;
    for v in 0..n {
        let lhs = value[v];
        let rhs = cert.bound * y[v];
        let diff = match cert.direction {
            Direction::UpperBound => rhs - lhs,
            Direction::LowerBound => lhs - rhs,
        };
        if diff < -eps {
            holds = false;
        }
        if diff > eps {
            strict = true;
        }
        if diff.abs() > eps {
            equality = false;
        }
    }
    Ok(CertificateOutcome {
        holds,
        strict_component: holds && strict,
        equality_everywhere: holds && equality,
    })
}

/// Larger root of the 2x2 quotient over the partition {two joined vertices},
/// {cycle vertices}: `3/2 + sqrt(2n - 15/4)`. This is the spectral radius of
/// `phi(n)` for `n >= 5`.
pub fn quotient_rho_phi(n: usize) -> Result<f64, SpectralError> {
    if n < 5 {
        return Err(SpectralError::InvalidOrder {
            op: "quotient_rho_phi",
            requirement: "n >= 5",
            got: n,
        });
    }
    Ok(1.5 + (2.0 * n as f64 - 3.75).sqrt())
}

/// Closed-form lower bound for the spectral radius of `cal_h(n)`:
/// `3/2 + s - 2 / (2n - 15/4 - s/2)` with `s = sqrt(2n - 15/4)`. Strictly
/// increasing in `n`.
pub fn h_lower_bound(n: usize) -> Result<f64, SpectralError> {
    if n < 5 {
        return Err(SpectralError::InvalidOrder {
            op: "h_lower_bound",
            requirement: "n >= 5",
            got: n,
        });
    }
    let t = 2.0 * n as f64 - 3.75;
    let s = t.sqrt();
    Ok(1.5 + s - 2.0 / (t - 0.5 * s))
}
