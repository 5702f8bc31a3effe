//! Loopless undirected multigraphs stored as a dense multiplicity matrix,
//! together with the constructions used by the bounds: complement relative
//! to a multiplicity level, join, and Cartesian product.
//!
//! Vertices are 0-based in this API. The edge-list text format uses 1-based
//! labels.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// A loopless undirected multigraph on `n >= 1` vertices.
///
/// `multiplicity(i, j)` is the number of parallel edges between `i` and `j`.
/// The matrix is symmetric with a zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

/// Vertex degrees sorted nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl Multigraph {
    /// Graph on `n` vertices without edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        Ok(Multigraph {
            n,
            mult: vec![0; n * n],
        })
    }

    /// Builds a graph from 0-based `(u, v, multiplicity)` triples; repeated
    /// pairs accumulate.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for &(u, v, m) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.add(u, v, m);
        }
        Ok(g)
    }

    /// Builds a graph from a full multiplicity matrix, checking symmetry and
    /// the zero diagonal.
    pub fn from_matrix(rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = DenseMatrix::from_rows(rows)?;
        let n = m.ensure_square()?;
        let mut g = Self::edgeless(n)?;
        for i in 0..n {
            if m[(i, i)] != 0 {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            for j in 0..n {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::InvalidGraph(format!(
                        "multiplicity matrix not symmetric at ({i}, {j})"
                    )));
                }
                g.mult[i * n + j] = m[(i, j)];
            }
        }
        Ok(g)
    }

    fn add(&mut self, u: usize, v: usize, m: u32) {
        let n = self.n;
        self.mult[u * n + v] += m;
        self.mult[v * n + u] += m;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    /// Sum of all edge multiplicities.
    pub fn edge_count(&self) -> u64 {
        self.pairs().map(|(_, _, m)| u64::from(m)).sum()
    }

    /// Iterates over vertex pairs `u < v` with nonzero multiplicity.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                let m = self.multiplicity(u, v);
                (m > 0).then_some((u, v, m))
            })
        })
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.mult[v * self.n..(v + 1) * self.n]
            .iter()
            .map(|&m| u64::from(m))
            .sum()
    }

    /// Degrees in vertex order (unsorted).
    pub fn degrees(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable();
        DegreeSequence(d)
    }

    /// Maximal edge multiplicity. Fails on edgeless graphs.
    pub fn max_multiplicity(&self) -> Result<u32> {
        match self.mult.iter().copied().max() {
            Some(m) if m > 0 => Ok(m),
            _ => Err(Error::EmptyGraph),
        }
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn has_edges(&self) -> bool {
        self.mult.iter().any(|&m| m > 0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    /// Connectivity of the underlying simple graph. A single vertex is connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for (v, flag) in seen.iter_mut().enumerate() {
                if !*flag && self.multiplicity(u, v) > 0 {
                    *flag = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Complement relative to level `delta`: every pair `i != j` gets
    /// multiplicity `delta - mult[i][j]`. `delta = 1` is the ordinary
    /// complement of a simple graph.
    pub fn complement(&self, delta: u32) -> Result<Self> {
        if delta == 0 {
            return Err(Error::DeltaTooSmall { delta, max: 0 });
        }
        let max = self.mult.iter().copied().max().unwrap_or(0);
        if max > delta {
            return Err(Error::DeltaTooSmall { delta, max });
        }
        let n = self.n;
        let mult = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    0
                } else {
                    delta - self.mult[k]
                }
            })
            .collect();
        Ok(Multigraph { n, mult })
    }

    /// Disjoint union of `parts` (concatenated in order) plus one edge between
    /// every pair of vertices lying in different parts.
    pub fn join(parts: &[Multigraph]) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::TooFewParts(parts.len()));
        }
        let n: usize = parts.iter().map(Multigraph::vertex_count).sum();
        let mut owner = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(parts.len());
        for (p, part) in parts.iter().enumerate() {
            offsets.push(owner.len());
            owner.extend(std::iter::repeat_n(p, part.n));
        }
        let mut g = Self::edgeless(n)?;
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                g.mult[u * n + v] = if owner[u] == owner[v] {
                    let off = offsets[owner[u]];
                    parts[owner[u]].multiplicity(u - off, v - off)
                } else {
                    1
                };
            }
        }
        Ok(g)
    }

    /// Cartesian product of two simple graphs. Vertex `(i, j)` gets index
    /// `i * h.vertex_count() + j`.
    pub fn cartesian_product(g: &Multigraph, h: &Multigraph) -> Result<Self> {
        if !g.is_simple() || !h.is_simple() {
            return Err(Error::NotSimple);
        }
        let (m, k) = (g.n, h.n);
        let mut edges = Vec::new();
        for i in 0..m {
            for (a, b, _) in h.pairs() {
                edges.push((i * k + a, i * k + b, 1));
            }
        }
        for j in 0..k {
            for (a, b, _) in g.pairs() {
                edges.push((a * k + j, b * k + j, 1));
            }
        }
        Self::from_edges(m * k, &edges)
    }

    /// Multiplicity matrix as nested rows.
    pub fn to_matrix(&self) -> Vec<Vec<u32>> {
        self.mult.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    /// Serializes into the edge-list text format (1-based labels).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.n).unwrap();
        for (u, v, m) in self.pairs() {
            if m == 1 {
                writeln!(out, "{} {}", u + 1, v + 1).unwrap();
            } else {
                writeln!(out, "{} {} {}", u + 1, v + 1, m).unwrap();
            }
        }
        out
    }

    /// Parses the edge-list text format.
    ///
    /// Lines starting with `#` and blank lines are ignored. The first
    /// remaining line holds the vertex count; every following line is `u v`
    /// or `u v m` with 1-based endpoints and multiplicity `m >= 1`.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: first,
            message: format!("expected a vertex count, found {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line: first,
                message: "vertex count must be positive".into(),
            });
        }

        let mut g = Self::edgeless(n)?;
        for (line, content) in lines {
            let fields: Vec<&str> = content.split_whitespace().collect();
            if !(2..=3).contains(&fields.len()) {
                return Err(Error::Parse {
                    line,
                    message: format!("expected \"u v\" or \"u v m\", found {content:?}"),
                });
            }
            let number = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("not a nonnegative integer: {s:?}"),
                })
            };
            let u = number(fields[0])?;
            let v = number(fields[1])?;
            let m = match fields.get(2) {
                Some(s) => number(s)?,
                None => 1,
            };
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop { line, vertex: u });
            }
            if m == 0 {
                return Err(Error::Parse {
                    line,
                    message: "multiplicity must be at least 1".into(),
                });
            }
            let m = u32::try_from(m).map_err(|_| Error::Parse {
                line,
                message: "multiplicity too large".into(),
            })?;
            g.add(u - 1, v - 1, m);
        }
        Ok(g)
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_edge_list(s)
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Multigraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v, 1)))
            .collect();
        Multigraph::from_edges(n, &edges).unwrap()
    }

    fn p3() -> Multigraph {
        Multigraph::from_edges(3, &[(0, 1, 1), (1, 2, 1)]).unwrap()
    }

    fn double_k2() -> Multigraph {
        Multigraph::from_edges(2, &[(0, 1, 2)]).unwrap()
    }

    #[test]
    fn parses_path() {
        let g: Multigraph = "3\n1 2\n2 3".parse().unwrap();
        assert_eq!(g, p3());
        assert_eq!(g.multiplicity(0, 1), 1);
        assert_eq!(g.multiplicity(2, 1), 1);
        assert_eq!(g.multiplicity(0, 2), 0);
    }

    #[test]
    fn parses_multiplicity_and_accumulates() {
        assert_eq!(Multigraph::from_edge_list("2\n1 2 2").unwrap(), double_k2());
        let g = Multigraph::from_edge_list("# comment\r\n2\r\n1 2\r\n\r\n2 1\r\n").unwrap();
        assert_eq!(g, double_k2());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Multigraph::from_edge_list("2\n1 1"),
            Err(Error::Loop { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("2\n1 3"),
            Err(Error::VertexRange {
                vertex: 3,
                n: 2,
                ..
            })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("2\n0 1"),
            Err(Error::VertexRange { vertex: 0, .. })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Multigraph::from_edge_list(""),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("0"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("3\n1 2 0"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("3\n1 2 3 4"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Multigraph::from_edge_list("3\n1 -2"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn from_matrix_checks_invariants() {
        assert!(Multigraph::from_matrix(vec![vec![0, 1], vec![0, 0]]).is_err());
        assert!(Multigraph::from_matrix(vec![vec![1, 0], vec![0, 0]]).is_err());
        assert!(Multigraph::from_matrix(vec![]).is_err());
        let g = Multigraph::from_matrix(vec![vec![0, 2], vec![2, 0]]).unwrap();
        assert_eq!(g, double_k2());
        assert_eq!(g.to_matrix(), vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(p3().degree_sequence().as_slice(), &[1, 1, 2]);
        assert_eq!(k(3).degree_sequence().as_slice(), &[2, 2, 2]);
        assert_eq!(double_k2().degree_sequence().as_slice(), &[2, 2]);
        assert_eq!(
            double_k2().degree_sequence().sum(),
            2 * double_k2().edge_count()
        );
    }

    #[test]
    fn max_multiplicity() {
        assert_eq!(k(3).max_multiplicity(), Ok(1));
        assert_eq!(double_k2().max_multiplicity(), Ok(2));
        assert_eq!(
            Multigraph::edgeless(3).unwrap().max_multiplicity(),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn connectivity() {
        assert!(p3().is_connected());
        let k2_plus_k1 = Multigraph::from_edges(3, &[(0, 1, 1)]).unwrap();
        assert!(!k2_plus_k1.is_connected());
        assert!(Multigraph::edgeless(1).unwrap().is_connected());
    }

    #[test]
    fn complements() {
        assert_eq!(
            k(3).complement(1).unwrap(),
            Multigraph::edgeless(3).unwrap()
        );
        let expected = Multigraph::from_edges(3, &[(0, 2, 1)]).unwrap();
        assert_eq!(p3().complement(1).unwrap(), expected);
        assert_eq!(
            double_k2().complement(2).unwrap(),
            Multigraph::edgeless(2).unwrap()
        );
        assert_eq!(
            double_k2().complement(1),
            Err(Error::DeltaTooSmall { delta: 1, max: 2 })
        );
        assert_eq!(
            Multigraph::edgeless(3).unwrap().complement(1).unwrap(),
            k(3)
        );
    }

    #[test]
    fn joins() {
        let e2 = Multigraph::edgeless(2).unwrap();
        let k1 = Multigraph::edgeless(1).unwrap();
        let c4 = Multigraph::from_edges(4, &[(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)]).unwrap();
        assert_eq!(Multigraph::join(&[e2.clone(), e2]).unwrap(), c4);
        assert_eq!(Multigraph::join(&[k1.clone(), k1.clone()]).unwrap(), k(2));
        assert_eq!(
            Multigraph::join(&[k1.clone(), k1.clone(), k1.clone()]).unwrap(),
            k(3)
        );
        assert_eq!(Multigraph::join(&[k1]), Err(Error::TooFewParts(1)));
        // multigraph parts keep their multiplicities, cross edges are simple
        let j = Multigraph::join(&[double_k2(), Multigraph::edgeless(1).unwrap()]).unwrap();
        assert_eq!(j.multiplicity(0, 1), 2);
        assert_eq!(j.multiplicity(0, 2), 1);
    }

    #[test]
    fn cartesian_products() {
        let k2 = k(2);
        let c4 = Multigraph::cartesian_product(&k2, &k2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert!(c4.is_connected());

        let grid = Multigraph::cartesian_product(&k2, &p3()).unwrap();
        assert_eq!(grid.vertex_count(), 6);
        assert_eq!(grid.edge_count(), 7);
        assert_eq!(grid.multiplicity(0, 1), 1);
        assert_eq!(grid.multiplicity(1, 2), 1);
        assert_eq!(grid.multiplicity(0, 3), 1);
        assert_eq!(grid.multiplicity(0, 2), 0);

        let k1 = Multigraph::edgeless(1).unwrap();
        assert_eq!(Multigraph::cartesian_product(&p3(), &k1).unwrap(), p3());
        assert_eq!(
            Multigraph::cartesian_product(&double_k2(), &k2),
            Err(Error::NotSimple)
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Multigraph::from_edges(4, &[(0, 1, 3), (1, 2, 1), (0, 3, 2)]).unwrap();
        assert_eq!(Multigraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
