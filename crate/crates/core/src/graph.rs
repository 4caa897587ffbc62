//! Undirected simple graphs with sorted adjacency lists, plus the named
//! constructions used throughout the crate.
//!
//! Graphs are immutable values: every edit (`add_edge`, `remove_edge`,
//! `delete_vertex`) returns a new graph and leaves the input untouched, so
//! graphs can be shared freely across parallel workers.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid order: {op} requires {requirement}, got {got}")]
    InvalidOrder {
        op: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(usize),
    #[error("edge ({0}, {1}) is already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
}

/// An undirected simple graph on vertices `0..n`.
///
/// Invariants, enforced on every construction path:
/// - neighbor lists are strictly increasing (no loops, no multi-edges),
/// - adjacency is symmetric,
/// - the cached edge count `m` equals half the degree sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Loops are rejected, duplicate edges
    /// (in either orientation) are rejected, endpoints must be `< n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        debug_assert!(g.check_invariants().is_ok());
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Iterates over edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// True iff `v` is adjacent to every other vertex.
    pub fn is_dominating(&self, v: usize) -> bool {
        self.n >= 1 && self.degree(v) == self.n - 1
    }

    pub fn dominating_vertices(&self) -> Vec<usize> {
        self.vertices().filter(|&v| self.is_dominating(v)).collect()
    }

    /// Number of edges inside the open neighborhood of `v`.
    pub fn neighborhood_edge_count(&self, v: usize) -> usize {
        let nb = &self.adj[v];
        nb.iter()
            .map(|&u| self.adj[u].iter().filter(|w| nb.binary_search(w).is_ok()).count())
            .sum::<usize>()
            / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => self.adj[u].insert(pos, v),
        }
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        Ok(())
    }

    /// Returns a new graph with the edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Returns a new graph with the edge `{u, v}` removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let mut g = self.clone();
        match g.adj[u].binary_search(&v) {
            Ok(pos) => g.adj[u].remove(pos),
            Err(_) => return Err(GraphError::MissingEdge(u.min(v), u.max(v))),
        };
        let pos = g.adj[v].binary_search(&u).unwrap();
        g.adj[v].remove(pos);
        g.m -= 1;
        Ok(g)
    }

    /// Returns the graph with vertex `v` (and its incident edges) deleted;
    /// vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph::from_edges(self.n - 1, &edges)
    }

    /// Subgraph induced by `keep` (in the given order; `keep[i]` becomes vertex `i`).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &v in keep {
            for &w in &self.adj[v] {
                if v < w && index[w] != usize::MAX {
                    edges.push((index[v], index[w]));
                }
            }
        }
        Graph::from_edges(keep.len(), &edges)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            stack.push(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Validates all representation invariants. Constructors uphold these by
    /// construction; this is the assertion hook for tests.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.adj.len() != self.n {
            return Err("adjacency length differs from order".into());
        }
        let mut degree_sum = 0;
        for (v, nb) in self.adj.iter().enumerate() {
            degree_sum += nb.len();
            for pair in nb.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(format!("neighbor list of {v} is not strictly increasing"));
                }
            }
            for &w in nb {
                if w == v {
                    return Err(format!("loop at vertex {v}"));
                }
                if w >= self.n {
                    return Err(format!("neighbor {w} of {v} out of range"));
                }
                if self.adj[w].binary_search(&v).is_err() {
                    return Err(format!("asymmetric edge ({v}, {w})"));
                }
            }
        }
        if degree_sum != 2 * self.m {
            return Err(format!(
                "cached edge count {} differs from degree sum / 2 = {}",
                self.m,
                degree_sum / 2
            ));
        }
        Ok(())
    }
}

/// Path on `k` vertices (`k - 1` edges, vertices consecutively adjacent).
pub fn path_graph(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::InvalidOrder {
            op: "path_graph",
            requirement: "k >= 1",
            got: k,
        });
    }
    let edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(k, &edges)
}

/// Cycle on `k >= 3` vertices.
pub fn cycle_graph(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::InvalidOrder {
            op: "cycle_graph",
            requirement: "k >= 3",
            got: k,
        });
    }
    let mut edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
    edges.push((k - 1, 0));
    Graph::from_edges(k, &edges)
}

/// Complete graph on `k >= 1` vertices.
pub fn complete_graph(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::InvalidOrder {
            op: "complete_graph",
            requirement: "k >= 1",
            got: k,
        });
    }
    let mut edges = Vec::with_capacity(k * (k - 1) / 2);
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    Graph::from_edges(k, &edges)
}

/// Complete bipartite graph with parts of size `s` and `t` (both positive);
/// the first part occupies vertices `0..s`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, GraphError> {
    if s < 1 || t < 1 {
        return Err(GraphError::InvalidOrder {
            op: "complete_bipartite",
            requirement: "s, t >= 1",
            got: s.min(t),
        });
    }
    let mut edges = Vec::with_capacity(s * t);
    for u in 0..s {
        for v in s..s + t {
            edges.push((u, v));
        }
    }
    Graph::from_edges(s + t, &edges)
}

/// Join of two graphs: disjoint union plus every cross edge. `g`'s vertices
/// come first, so vertex `i` of `h` becomes `g.order() + i`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let ng = g.order();
    let n = ng + h.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (ng + u, ng + v)));
    for u in 0..ng {
        for v in ng..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("join of valid graphs is valid")
}

/// Join of a single edge `{0, 1}` with the cycle `2, 3, ..., n-1`; has
/// `3n - 5` edges and is never planar.
pub fn phi(n: usize) -> Result<Graph, GraphError> {
    if n < 5 {
        return Err(GraphError::InvalidOrder {
            op: "phi",
            requirement: "n >= 5",
            got: n,
        });
    }
    Ok(join(&path_graph(2)?, &cycle_graph(n - 2)?))
}

/// `phi(n)` with the cycle edge `{2, n-1}` removed: a maximal planar graph
/// with `3n - 6` edges, isomorphic to `fan_apex(n)`.
pub fn cal_h(n: usize) -> Result<Graph, GraphError> {
    if n < 5 {
        return Err(GraphError::InvalidOrder {
            op: "cal_h",
            requirement: "n >= 5",
            got: n,
        });
    }
    phi(n)?.remove_edge(2, n - 1)
}

/// Join of a single edge `{0, 1}` with the path `2, 3, ..., n-1`. Both
/// vertices 0 and 1 dominate.
pub fn fan_apex(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidOrder {
            op: "fan_apex",
            requirement: "n >= 4",
            got: n,
        });
    }
    Ok(join(&path_graph(2)?, &path_graph(n - 2)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_shapes() {
        let p1 = path_graph(1).unwrap();
        assert_eq!((p1.order(), p1.edge_count()), (1, 0));
        let p2 = path_graph(2).unwrap();
        assert_eq!((p2.order(), p2.edge_count()), (2, 1));
        let p5 = path_graph(5).unwrap();
        assert_eq!(p5.edge_count(), 4);
        assert_eq!(p5.degree_sequence(), vec![2, 2, 2, 1, 1]);
        assert_eq!(path_graph(0).unwrap_err(), GraphError::InvalidOrder {
            op: "path_graph",
            requirement: "k >= 1",
            got: 0,
        });
    }

    #[test]
    fn cycle_graph_shapes() {
        let c3 = cycle_graph(3).unwrap();
        assert_eq!(c3.edge_count(), 3);
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.bipartition().is_some());
        assert!(cycle_graph(3).unwrap().bipartition().is_none());
        let c6 = cycle_graph(6).unwrap();
        assert!(c6.vertices().all(|v| c6.degree(v) == 2));
        assert!(c6.is_connected());
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete_graph(5).unwrap().edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).unwrap().edge_count(), 9);
        let star = complete_bipartite(1, 4).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(0), 4);
        assert!(complete_graph(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn join_counts() {
        let k1 = complete_graph(1).unwrap();
        let k2 = join(&k1, &k1);
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));

        // P2 joined with C3 is K5
        let g = join(&path_graph(2).unwrap(), &cycle_graph(3).unwrap());
        assert_eq!(g, complete_graph(5).unwrap());

        let c4 = cycle_graph(4).unwrap();
        assert_eq!(join(&c4, &c4).edge_count(), 4 + 4 + 16);
    }

    #[test]
    fn phi_and_h_shapes() {
        assert_eq!(phi(5).unwrap(), complete_graph(5).unwrap());
        assert_eq!(phi(6).unwrap().edge_count(), 13);
        assert_eq!(phi(10).unwrap().edge_count(), 25);
        assert!(phi(4).is_err());

        let h5 = cal_h(5).unwrap();
        assert_eq!(h5.edge_count(), 9); // K5 minus an edge
        assert!(!h5.has_edge(2, 4));
        for n in 5..=20 {
            assert_eq!(cal_h(n).unwrap().edge_count(), 3 * n - 6);
        }
        assert!(cal_h(4).is_err());
    }

    #[test]
    fn fan_apex_shapes() {
        assert_eq!(fan_apex(4).unwrap(), complete_graph(4).unwrap());
        let f5 = fan_apex(5).unwrap();
        assert_eq!(f5.edge_count(), 9);
        let f8 = fan_apex(8).unwrap();
        assert_eq!(f8.degree_sequence(), vec![7, 7, 4, 4, 4, 4, 3, 3]);
        assert!(f8.is_dominating(0) && f8.is_dominating(1));
        assert!(fan_apex(3).is_err());
    }

    #[test]
    fn edge_edits() {
        let p3 = path_graph(3).unwrap();
        let c3 = p3.add_edge(0, 2).unwrap();
        assert_eq!(c3, cycle_graph(3).unwrap());
        let back = c3.remove_edge(0, 2).unwrap();
        assert_eq!(back, p3);

        assert_eq!(p3.add_edge(1, 1).unwrap_err(), GraphError::LoopEdge(1));
        assert_eq!(p3.add_edge(0, 1).unwrap_err(), GraphError::DuplicateEdge(0, 1));
        assert_eq!(p3.remove_edge(0, 2).unwrap_err(), GraphError::MissingEdge(0, 2));
        assert_eq!(
            p3.add_edge(0, 7).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 7, order: 3 }
        );
        // original untouched
        assert_eq!(p3.edge_count(), 2);
    }

    #[test]
    fn vertex_deletion() {
        let c5 = cycle_graph(5).unwrap();
        let p4 = c5.delete_vertex(0).unwrap();
        assert_eq!(p4.order(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_connected());
    }

    #[test]
    fn constructor_invariants() {
        for g in [
            path_graph(7).unwrap(),
            cycle_graph(9).unwrap(),
            complete_graph(6).unwrap(),
            complete_bipartite(2, 5).unwrap(),
            phi(8).unwrap(),
            cal_h(8).unwrap(),
            fan_apex(8).unwrap(),
        ] {
            g.check_invariants().unwrap();
        }
    }

    #[test]
    fn neighborhood_edges() {
        // In cal_h(n) vertex 0 dominates; its open neighborhood carries all
        // remaining edges: m - (n - 1) = 2n - 5.
        for n in 5..=12 {
            let h = cal_h(n).unwrap();
            assert_eq!(h.neighborhood_edge_count(0), 2 * n - 5);
        }
    }
}
