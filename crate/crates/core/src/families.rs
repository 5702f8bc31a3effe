//! Standard graph families, seeded random generators and exhaustive
//! enumeration of small graphs.

use rand::Rng;

use crate::graph::Multigraph;

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn build(n: usize, edges: &[(usize, usize, u32)]) -> Multigraph {
    Multigraph::from_edges(n, edges).expect("generated edges are valid")
}

/// Complete multigraph on `n >= 1` vertices with every multiplicity `delta`.
pub fn complete(n: usize, delta: u32) -> Multigraph {
    let edges: Vec<_> = pairs(n).map(|(u, v)| (u, v, delta)).collect();
    build(n, &edges)
}

/// Path on `n >= 1` vertices.
pub fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v, 1)).collect();
    build(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n, 1)).collect();
    build(n, &edges)
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(sizes: &[usize]) -> Multigraph {
    let n: usize = sizes.iter().sum();
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let edges: Vec<_> = pairs(n)
        .filter(|&(u, v)| part[u] != part[v])
        .map(|(u, v)| (u, v, 1))
        .collect();
    build(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    complete_multipartite(&[a, b])
}

/// Multiplies every multiplicity of `g` by `factor >= 1`.
pub fn scaled(g: &Multigraph, factor: u32) -> Multigraph {
    let edges: Vec<_> = g.pairs().map(|(u, v, m)| (u, v, m * factor)).collect();
    build(g.vertex_count(), &edges)
}

/// Erdős–Rényi graph: each pair is an edge with probability `p`.
pub fn random_simple<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Multigraph {
    let edges: Vec<_> = pairs(n)
        .filter(|_| rng.random_bool(p))
        .map(|(u, v)| (u, v, 1))
        .collect();
    build(n, &edges)
}

/// Each pair gets a multiplicity drawn uniformly from `0..=max_multiplicity`.
pub fn random_multigraph<R: Rng + ?Sized>(
    n: usize,
    max_multiplicity: u32,
    rng: &mut R,
) -> Multigraph {
    let edges: Vec<_> = pairs(n)
        .map(|(u, v)| (u, v, rng.random_range(0..=max_multiplicity)))
        .filter(|&(_, _, m)| m > 0)
        .collect();
    build(n, &edges)
}

/// Redraws [`random_simple`] until the graph is connected.
pub fn random_connected_simple<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Multigraph {
    loop {
        let g = random_simple(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// All labelled simple graphs on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = Multigraph> {
    let slots: Vec<_> = pairs(n).collect();
    assert!(slots.len() < 32, "too many vertices to enumerate");
    (0u32..1 << slots.len()).map(move |mask| {
        let edges: Vec<_> = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &(u, v))| (u, v, 1))
            .collect();
        build(n, &edges)
    })
}

/// All labelled multigraphs on `n` vertices with multiplicities in
/// `0..=max_multiplicity`.
pub fn all_multigraphs(n: usize, max_multiplicity: u32) -> impl Iterator<Item = Multigraph> {
    let slots: Vec<_> = pairs(n).collect();
    let base = u64::from(max_multiplicity) + 1;
    let total = base.pow(slots.len() as u32);
    (0..total).map(move |mut code| {
        let mut edges = Vec::new();
        for &(u, v) in &slots {
            let m = (code % base) as u32;
            code /= base;
            if m > 0 {
                edges.push((u, v, m));
            }
        }
        build(n, &edges)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::tau_exact;

    #[test]
    fn family_shapes() {
        assert_eq!(complete(4, 1).edge_count(), 6);
        assert_eq!(complete(3, 2).max_multiplicity(), Ok(2));
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(5).degrees(), vec![2; 5]);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(complete_multipartite(&[1, 1, 2]).edge_count(), 5);
        assert_eq!(tau_exact(&complete_bipartite(3, 3)), 81);
        assert_eq!(scaled(&path(3), 3).multiplicity(0, 1), 3);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_simple_graphs(4).count(), 64);
        assert_eq!(
            all_simple_graphs(4)
                .filter(Multigraph::is_connected)
                .count(),
            38
        );
        assert_eq!(all_multigraphs(3, 2).count(), 27);
        assert_eq!(all_simple_graphs(1).count(), 1);
    }
}
