//! Degree-based upper bounds on the number of spanning trees, evaluated as
//! exact rational comparisons, plus the majorization step behind them.
//!
//! * general multigraphs: `tau(G) <= prod(delta + d_i) / (delta * n^2)`,
//!   where `delta` is the maximal multiplicity (simple graphs: `delta = 1`);
//!   equality exactly on complete multigraphs with every multiplicity equal
//!   to `delta`;
//! * joins `G_1 ∇ ... ∇ G_k` on `v` vertices:
//!   `tau <= v^(k-2) * prod_u d(u) / prod_i (v - v_i)`, with equality iff
//!   every part is edgeless;
//! * Cartesian products with `G` connected and `H` free of isolated
//!   vertices: `tau(G x H) <= tau(H) * prod_{u,v} (d_G(u) + d_H(v)) / (m * prod_v d_H(v))`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::count::{tau_exact, TreeCount};
use crate::error::Result;
use crate::graph::Multigraph;
use crate::majorization::{majorizes, MajorizationWitness};
use crate::rational::ExactRational;
use crate::spectral::laplacian_spectrum;

pub const CONNECTED: &str = "connected";
pub const NO_ISOLATED_VERTICES: &str = "no-isolated-vertices";
pub const SIMPLE: &str = "simple";

/// Result of checking one bound on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub tau: TreeCount,
    /// Right-hand side. `None` when its denominator vanishes, which only
    /// happens for Cartesian products whose second factor has an isolated
    /// vertex.
    pub bound: Option<ExactRational>,
    /// `den * tau <= num`, compared in integers.
    pub holds: bool,
    /// `den * tau == num`.
    pub equality: bool,
    pub preconditions: BTreeMap<&'static str, bool>,
}

impl BoundReport {
    fn from_parts(
        tau: TreeCount,
        numerator: BigInt,
        denominator: BigInt,
        preconditions: BTreeMap<&'static str, bool>,
    ) -> Self {
        let scaled = &denominator * tau.to_bigint();
        BoundReport {
            holds: scaled <= numerator,
            equality: scaled == numerator && denominator != BigInt::ZERO,
            bound: ExactRational::new(numerator, denominator),
            tau,
            preconditions,
        }
    }

    /// True when every recorded precondition is satisfied, i.e. the
    /// bound actually asserts `holds`.
    pub fn preconditions_met(&self) -> bool {
        self.preconditions.values().all(|&v| v)
    }

    /// `tau / bound` as a float; `0` when the bound is zero or unbounded.
    pub fn ratio(&self) -> f64 {
        match &self.bound {
            Some(b) if b.numer() != &BigInt::ZERO => {
                let tau = ExactRational::from_integer(self.tau.to_bigint());
                ExactRational::from(tau.as_ratio() / b.as_ratio()).to_f64()
            }
            _ => 0.0,
        }
    }
}

/// `(n*delta, mu_n, ..., mu_2)` majorizes `(delta + d_n, ..., delta + d_1)`,
/// the key step behind the degree bound.
pub fn verify_main_majorization(g: &Multigraph, tol: f64) -> Result<MajorizationWitness> {
    let delta = g.max_multiplicity()?;
    let n = g.vertex_count();
    let spectrum = laplacian_spectrum(g, tol)?;
    let mut x = vec![n as f64 * f64::from(delta)];
    x.extend(spectrum.descending().into_iter().take(n - 1));
    let y: Vec<f64> = g
        .degree_sequence()
        .as_slice()
        .iter()
        .rev()
        .map(|&d| (d + u64::from(delta)) as f64)
        .collect();
    majorizes(&x, &y, tol)
}

fn degree_bound_parts(g: &Multigraph) -> Result<(BigInt, BigInt)> {
    let delta = u64::from(g.max_multiplicity()?);
    let n = g.vertex_count() as u64;
    let numerator = g
        .degrees()
        .into_iter()
        .map(|d| BigInt::from(d + delta))
        .product();
    Ok((numerator, BigInt::from(delta) * BigInt::from(n * n)))
}

/// `prod(delta + d_i) / (delta * n^2)` with `delta` the maximal multiplicity.
pub fn degree_bound(g: &Multigraph) -> Result<ExactRational> {
    let (num, den) = degree_bound_parts(g)?;
    Ok(ExactRational::new(num, den).expect("delta * n^2 is positive"))
}

/// Compares `tau(G)` against [`degree_bound`].
pub fn check_degree_bound(g: &Multigraph) -> Result<BoundReport> {
    let (num, den) = degree_bound_parts(g)?;
    let preconditions = BTreeMap::from([(CONNECTED, g.is_connected()), (SIMPLE, g.is_simple())]);
    Ok(BoundReport::from_parts(
        tau_exact(g),
        num,
        den,
        preconditions,
    ))
}

/// Every pair of distinct vertices carries the maximal multiplicity.
pub fn is_uniform_complete(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    let Ok(delta) = g.max_multiplicity() else {
        return false;
    };
    n >= 2 && (0..n).all(|u| (u + 1..n).all(|v| g.multiplicity(u, v) == delta))
}

/// Structural equality predicate for [`join_bound`]: all parts edgeless,
/// i.e. the join is a complete multipartite graph.
pub fn join_equality_expected(parts: &[Multigraph]) -> bool {
    parts.iter().all(|p| !p.has_edges())
}

/// Checks the join bound on `G = parts[0] ∇ ... ∇ parts[k-1]`.
pub fn join_bound(parts: &[Multigraph]) -> Result<BoundReport> {
    let joined = Multigraph::join(parts)?;
    let v = joined.vertex_count();
    let exponent = parts.len() - 2;
    let degrees: BigInt = joined.degrees().into_iter().map(BigInt::from).product();
    let numerator = Pow::pow(BigInt::from(v), exponent) * degrees;
    let denominator: BigInt = parts
        .iter()
        .map(|p| BigInt::from(v - p.vertex_count()))
        .product();
    let preconditions = BTreeMap::from([
        (CONNECTED, joined.is_connected()),
        (SIMPLE, parts.iter().all(Multigraph::is_simple)),
    ]);
    Ok(BoundReport::from_parts(
        tau_exact(&joined),
        numerator,
        denominator,
        preconditions,
    ))
}

/// Checks the Cartesian product bound on `G x H`. The verdict is only
/// asserted when `G` is connected and `H` has no isolated vertex; both are
/// recorded in the report's preconditions.
pub fn cartesian_bound(g: &Multigraph, h: &Multigraph) -> Result<BoundReport> {
    let product = Multigraph::cartesian_product(g, h)?;
    let (dg, dh) = (g.degrees(), h.degrees());
    let tau_h = tau_exact(h).to_bigint();
    let pair_product: BigInt = dg
        .iter()
        .flat_map(|&a| dh.iter().map(move |&b| BigInt::from(a + b)))
        .product();
    let numerator = tau_h * pair_product;
    let denominator = dh.iter().fold(BigInt::from(g.vertex_count()), |acc, &d| {
        acc * BigInt::from(d)
    });
    let preconditions = BTreeMap::from([
        (CONNECTED, g.is_connected()),
        (NO_ISOLATED_VERTICES, !h.has_isolated_vertex()),
    ]);
    Ok(BoundReport::from_parts(
        tau_exact(&product),
        numerator,
        denominator,
        preconditions,
    ))
}
