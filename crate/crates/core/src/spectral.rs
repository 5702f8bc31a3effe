//! Floating-point Laplacian spectra and the eigenvalue formulas for tree
//! counts of plain graphs, joins and Cartesian products.
//!
//! Values here are advisory: every inequality verdict in [`crate::bounds`]
//! is decided in exact arithmetic.

use crate::count::laplacian;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matrix::DenseMatrix;

/// Sweep cap for the Jacobi iteration. Cyclic Jacobi converges
/// quadratically, desk-scale matrices settle in well under 20 sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues sorted nondecreasing, with the tolerance they were computed at.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Sorts `values` nondecreasing.
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values, tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Values sorted nonincreasing.
    pub fn descending(&self) -> Vec<f64> {
        self.values.iter().rev().copied().collect()
    }

    /// Product of all values except the smallest.
    pub fn tail_product(&self) -> f64 {
        self.values.iter().skip(1).product()
    }

    /// Checks the properties every Laplacian spectrum of a graph on `n`
    /// vertices with maximal multiplicity `delta` and degree sum `trace`
    /// must have: smallest value 0, all values in `[0, n*delta]`, and
    /// the sum equal to the trace.
    pub fn is_consistent_laplacian(&self, delta: u32, trace: f64) -> bool {
        let n = self.values.len();
        let tol = self.tol;
        let upper = n as f64 * f64::from(delta);
        let monotone = self.values.windows(2).all(|w| w[0] <= w[1] + tol);
        let first_zero = self.values.first().is_some_and(|v| v.abs() <= tol);
        let in_range = self.values.iter().all(|&v| v >= -tol && v <= upper + tol);
        let trace_ok = (self.sum() - trace).abs() <= n as f64 * tol;
        monotone && first_zero && in_range && trace_ok
    }

    /// Largest elementwise distance to `other`, or `None` on a length mismatch.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// Default comparison tolerance `1e-10 * max(1, n * delta)`.
pub fn default_tolerance(n: usize, delta: u32) -> f64 {
    1e-10 * (n as f64 * f64::from(delta)).max(1.0)
}

/// [`default_tolerance`] for `g`, taking `delta = 1` on edgeless graphs.
pub fn default_tolerance_for(g: &Multigraph) -> f64 {
    default_tolerance(g.vertex_count(), g.max_multiplicity().unwrap_or(1))
}

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Iterates until every off-diagonal entry is below both `tol` and
/// `f64::EPSILON` times the Frobenius norm. Entries that no longer change
/// either adjacent diagonal entry are dropped to zero after a few sweeps.
pub fn symmetric_eigenvalues(m: &DenseMatrix<f64>, tol: f64) -> Result<Spectrum> {
    let n = m.ensure_square()?;
    for i in 0..n {
        for j in i + 1..n {
            if (m[(i, j)] - m[(j, i)]).abs() > tol {
                return Err(Error::NotSymmetric { i, j });
            }
        }
    }
    let mut a = DenseMatrix::from_fn(n, n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let norm = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| a[(i, j)] * a[(i, j)])
        .sum::<f64>()
        .sqrt();
    let target = tol.min(f64::EPSILON * norm);

    let mut sweep = 0;
    loop {
        let off = max_off_diagonal(&a);
        if off <= target {
            break;
        }
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps: sweep,
                off_diagonal: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[(p, p)], a[(q, q)]);
                let g = 100.0 * apq.abs();
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for r in (0..n).filter(|&r| r != p && r != q) {
                    let (arp, arq) = (a[(r, p)], a[(r, q)]);
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[(r, p)] = new_rp;
                    a[(p, r)] = new_rp;
                    a[(r, q)] = new_rq;
                    a[(q, r)] = new_rq;
                }
            }
        }
        sweep += 1;
    }
    Ok(Spectrum::new(a.diagonal(), tol))
}

fn max_off_diagonal(a: &DenseMatrix<f64>) -> f64 {
    let n = a.rows();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| a[(i, j)].abs())
        .fold(0.0, f64::max)
}

/// Laplacian spectrum of `g`. Eigenvalues within `tol` of zero are reported
/// as exactly zero.
pub fn laplacian_spectrum(g: &Multigraph, tol: f64) -> Result<Spectrum> {
    let spectrum = symmetric_eigenvalues(&laplacian(g).to_f64(), tol)?;
    let values = spectrum
        .values
        .into_iter()
        .map(|v| if v.abs() <= tol { 0.0 } else { v })
        .collect();
    Ok(Spectrum::new(values, tol))
}

/// Spanning-tree count as the product of the nonzero-indexed Laplacian
/// eigenvalues divided by `n`.
pub fn tau_spectral(g: &Multigraph, tol: f64) -> Result<f64> {
    let spectrum = laplacian_spectrum(g, tol)?;
    Ok(spectrum.tail_product() / g.vertex_count() as f64)
}

/// Tree count of the join of `parts` from the parts' spectra:
/// `v^(k-2) * prod_i prod_{j>=2} (v - v_i + mu_j^i)` where `v` is the total
/// vertex count and `k` the number of parts.
pub fn join_spectrum_tau(parts: &[Multigraph], tol: f64) -> Result<f64> {
    if parts.len() < 2 {
        return Err(Error::TooFewParts(parts.len()));
    }
    let v: usize = parts.iter().map(Multigraph::vertex_count).sum();
    let mut tau = (v as f64).powi(parts.len() as i32 - 2);
    for part in parts {
        let shift = (v - part.vertex_count()) as f64;
        let spectrum = laplacian_spectrum(part, tol)?;
        tau *= spectrum
            .values()
            .iter()
            .skip(1)
            .map(|mu| shift + mu)
            .product::<f64>();
    }
    Ok(tau)
}

/// Laplacian spectrum of a Cartesian product: all pairwise sums.
pub fn product_spectrum(g: &Spectrum, h: &Spectrum) -> Spectrum {
    let values = g
        .values
        .iter()
        .flat_map(|a| h.values.iter().map(move |b| a + b))
        .collect();
    Spectrum::new(values, g.tol.max(h.tol))
}

/// Tree count of `G x H` from the factor spectra:
/// `tau(G) * tau(H) * prod_{i>=2, j>=2} (lambda_i + mu_j)`.
pub fn product_spectrum_tau(g: &Spectrum, h: &Spectrum) -> f64 {
    let tau_g = g.tail_product() / g.len() as f64;
    let tau_h = h.tail_product() / h.len() as f64;
    let cross: f64 = g.values[1..]
        .iter()
        .flat_map(|a| h.values[1..].iter().map(move |b| a + b))
        .product();
    tau_g * tau_h * cross
}
