//! Majorization witnesses and instance checks of the Karamata product form
//! and the Schur eigenvalue/diagonal relation.

use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectral::symmetric_eigenvalues;

/// Outcome of comparing two sequences for majorization `x ≻ y`.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationWitness {
    pub holds: bool,
    /// `sum(x[..=k]) - sum(y[..=k])` for each `k`, both sorted nonincreasing.
    /// The last entry is the total gap.
    pub prefix_gaps: Vec<f64>,
    pub total_gap: f64,
    /// First 0-based index whose gap violates the relation.
    pub first_violation: Option<usize>,
    /// Whether either input had to be reordered.
    pub sorted: bool,
}

impl MajorizationWitness {
    /// Largest absolute prefix gap.
    pub fn max_abs_gap(&self) -> f64 {
        self.prefix_gaps.iter().fold(0.0, |m, g| m.max(g.abs()))
    }
}

/// Tolerance for majorization on floating-point data:
/// `1e-8 * max(1, |sum(x)|)`.
pub fn float_tolerance(x: &[f64]) -> f64 {
    1e-8 * x.iter().sum::<f64>().abs().max(1.0)
}

fn sorted_descending(v: &[f64]) -> (Vec<f64>, bool) {
    let mut s = v.to_vec();
    s.sort_by(|a, b| b.total_cmp(a));
    let changed = s != v;
    (s, changed)
}

/// Tests `x ≻ y`: after sorting both nonincreasing, every prefix sum of `x`
/// dominates that of `y` and the totals agree, each within `tol`.
///
/// With `tol = 0` on integer-valued data the comparison is exact as long as
/// the partial sums stay below 2^53.
pub fn majorizes(x: &[f64], y: &[f64], tol: f64) -> Result<MajorizationWitness> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let (xs, x_sorted) = sorted_descending(x);
    let (ys, y_sorted) = sorted_descending(y);
    let mut gaps = Vec::with_capacity(xs.len());
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        gaps.push(sx - sy);
    }
    let total_gap = gaps.last().copied().unwrap_or(0.0);
    let first_violation = gaps
        .iter()
        .position(|&g| g < -tol)
        .or_else(|| (total_gap.abs() > tol).then(|| gaps.len() - 1));
    Ok(MajorizationWitness {
        holds: first_violation.is_none(),
        prefix_gaps: gaps,
        total_gap,
        first_violation,
        sorted: x_sorted || y_sorted,
    })
}

/// Instance check of the product form of Karamata's inequality: for
/// positive `x ≻ y`, `prod(x) <= prod(y)`.
///
/// Products are compared through logarithms with relative slack `tol`.
/// Fails when the inputs are not positive or `x` does not majorize `y`
/// within `tol`.
pub fn karamata_product_check(x: &[f64], y: &[f64], tol: f64) -> Result<bool> {
    if x.iter().chain(y).any(|&v| v <= 0.0 || v.is_nan()) {
        return Err(Error::NonPositive);
    }
    if !majorizes(x, y, tol)?.holds {
        return Err(Error::NotMajorizing);
    }
    let log_x: f64 = x.iter().map(|v| v.ln()).sum();
    let log_y: f64 = y.iter().map(|v| v.ln()).sum();
    Ok(log_x <= log_y + tol)
}

/// Checks that the eigenvalues of a symmetric matrix majorize its diagonal.
pub fn verify_schur(m: &DenseMatrix<f64>, tol: f64) -> Result<MajorizationWitness> {
    let eigenvalues = symmetric_eigenvalues(m, tol)?;
    majorizes(&eigenvalues.descending(), &m.diagonal(), tol)
}

/// Builds `x ≻ y` from positive `y` by `steps` transfers, each moving mass
/// from an entry to one at least as large. Entries stay above half their
/// starting value, so the result is positive.
pub fn spread_by_transfers<R: Rng + ?Sized>(y: &[f64], steps: usize, rng: &mut R) -> Vec<f64> {
    let mut x = y.to_vec();
    if x.len() < 2 {
        return x;
    }
    let floor: Vec<f64> = y.iter().map(|v| v / 2.0).collect();
    for _ in 0..steps {
        let i = rng.random_range(0..x.len());
        let j = rng.random_range(0..x.len());
        if i == j {
            continue;
        }
        let (rich, poor) = if x[i] >= x[j] { (i, j) } else { (j, i) };
        let room = x[poor] - floor[poor];
        if room <= 0.0 {
            continue;
        }
        let eps = rng.random_range(0.0..1.0) * room;
        x[poor] -= eps;
        x[rich] += eps;
    }
    x
}
