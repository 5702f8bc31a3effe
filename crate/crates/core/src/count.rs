//! Laplacian construction and exact spanning-tree counts.
//!
//! [`tau_exact`] evaluates a Kirchhoff cofactor with fraction-free integer
//! elimination. [`tau_brute_force`] enumerates edge subsets and shares no
//! code with it, so the two serve as mutual oracles.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matrix::DenseMatrix;

/// Default cap on the number of edge instances enumerated by
/// [`tau_brute_force`].
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 24;

/// Laplacian `D - A` of a multigraph with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix(DenseMatrix<BigInt>);

impl LaplacianMatrix {
    pub fn dimension(&self) -> usize {
        self.0.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[(i, j)]
    }

    pub fn as_matrix(&self) -> &DenseMatrix<BigInt> {
        &self.0
    }

    /// Real-valued copy, for the eigensolver.
    pub fn to_f64(&self) -> DenseMatrix<f64> {
        use num_traits::ToPrimitive;
        self.0
            .map(|x| x.to_f64().expect("Laplacian entry fits in f64"))
    }

    /// Trace, i.e. the sum of the degrees.
    pub fn trace(&self) -> BigInt {
        self.0.diagonal().into_iter().sum()
    }

    /// Signed cofactor `(-1)^(i+j) det(L without row i and column j)`.
    pub fn cofactor(&self, i: usize, j: usize) -> BigInt {
        let minor = determinant_exact(&self.0.minor(i, j)).expect("minor is square");
        if (i + j).is_multiple_of(2) {
            minor
        } else {
            -minor
        }
    }
}

/// Number of spanning trees. Parallel edges yield distinct trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCount(BigUint);

impl TreeCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<u64> for TreeCount {
    fn from(v: u64) -> Self {
        TreeCount(BigUint::from(v))
    }
}

impl From<BigUint> for TreeCount {
    fn from(v: BigUint) -> Self {
        TreeCount(v)
    }
}

impl PartialEq<u64> for TreeCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for TreeCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn laplacian(g: &Multigraph) -> LaplacianMatrix {
    let n = g.vertex_count();
    LaplacianMatrix(DenseMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::from(g.degree(i))
        } else {
            -BigInt::from(g.multiplicity(i, j))
        }
    }))
}

/// Determinant by Bareiss fraction-free elimination. Every division in the
/// elimination is exact. The empty matrix has determinant 1.
pub fn determinant_exact(m: &DenseMatrix<BigInt>) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                debug_assert!((&t % &prev).is_zero());
                a[(i, j)] = t / &prev;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

/// Spanning-tree count as the (1,1) cofactor of the Laplacian.
pub fn tau_exact(g: &Multigraph) -> TreeCount {
    if g.vertex_count() == 1 {
        return TreeCount::from(1);
    }
    let det = laplacian(g).cofactor(0, 0);
    debug_assert!(!det.is_negative(), "Laplacian minors are nonnegative");
    TreeCount(det.into_parts().1)
}

/// Spanning-tree count by exhaustive enumeration, limited to
/// [`DEFAULT_BRUTE_FORCE_LIMIT`] edge instances.
pub fn tau_brute_force(g: &Multigraph) -> Result<TreeCount> {
    tau_brute_force_with_limit(g, DEFAULT_BRUTE_FORCE_LIMIT)
}

/// Spanning-tree count by enumerating `(n-1)`-subsets of edge instances.
///
/// Each multi-edge of multiplicity `m` expands into `m` distinguishable
/// instances. Subsets are built incrementally and an instance closing a
/// cycle is never taken, so every complete subset is a spanning tree.
pub fn tau_brute_force_with_limit(g: &Multigraph, limit: usize) -> Result<TreeCount> {
    let instances: Vec<(usize, usize)> = g
        .pairs()
        .flat_map(|(u, v, m)| std::iter::repeat_n((u, v), m as usize))
        .collect();
    if instances.len() > limit {
        return Err(Error::SizeLimit {
            edges: instances.len(),
            limit,
        });
    }
    let n = g.vertex_count();
    let mut component: Vec<usize> = (0..n).collect();
    let count = extend_forest(&instances, 0, n - 1, &mut component);
    Ok(TreeCount::from(count))
}

fn extend_forest(
    instances: &[(usize, usize)],
    start: usize,
    needed: usize,
    component: &mut [usize],
) -> u64 {
    if needed == 0 {
        return 1;
    }
    let mut total = 0;
    for idx in start..instances.len() {
        if instances.len() - idx < needed {
            break;
        }
        let (u, v) = instances[idx];
        let (cu, cv) = (component[u], component[v]);
        if cu == cv {
            continue;
        }
        let merged: Vec<usize> = (0..component.len())
            .filter(|&w| component[w] == cv)
            .collect();
        for &w in &merged {
            component[w] = cu;
        }
        total += extend_forest(instances, idx + 1, needed - 1, component);
        for &w in &merged {
            component[w] = cv;
        }
    }
    total
}
