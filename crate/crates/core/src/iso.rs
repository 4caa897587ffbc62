//! Exact canonical labeling for small graphs (n <= 32) via equitable
//! refinement plus individualization search, with orbit pruning from
//! discovered automorphisms. The canonical form is the lexicographically
//! smallest graph6 string over all relabelings, so
//! `canonical_form(G) == canonical_form(H)` iff G and H are isomorphic.

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::graph6_encode;

/// Orders above this are rejected; the search is exact, not engineered for
/// large graphs.
pub const MAX_CANON_ORDER: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsoError {
    #[error("order {0} exceeds the canonical-labeling limit {MAX_CANON_ORDER}")]
    OrderTooLarge(usize),
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Refines an ordered partition to equitability: every vertex in a cell has
/// the same number of neighbors in every cell. Subcells are ordered by their
/// neighbor-count signature, which keeps the search deterministic.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    loop {
        let mut cell_id = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_id[v] = i;
            }
        }
        let k = cells.len();
        let signature = |v: usize| {
            let mut sig = vec![0u32; k];
            for &w in g.neighbors(v) {
                sig[cell_id[w]] += 1;
            }
            sig
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(k);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut run: Vec<usize> = vec![keyed[0].1];
            for pair in keyed.windows(2) {
                if pair[0].0 == pair[1].0 {
                    run.push(pair[1].1);
                } else {
                    next.push(std::mem::replace(&mut run, vec![pair[1].1]));
                }
            }
            next.push(run);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<(String, Vec<usize>)>,
    orbits: UnionFind,
}

impl CanonSearch<'_> {
    fn leaf_string(&self, labeling: &[usize]) -> String {
        // labeling[i] = original vertex placed at canonical position i
        let mut perm = vec![0usize; labeling.len()];
        for (pos, &v) in labeling.iter().enumerate() {
            perm[v] = pos;
        }
        let relabeled = self.g.relabel(&perm).expect("labeling is a permutation");
        graph6_encode(&relabeled).expect("order already bounded")
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);

        let Some(target) = target else {
            let labeling: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let s = self.leaf_string(&labeling);
            match &self.best {
                Some((best_s, best_lab)) if *best_s == s => {
                    // Two labelings with the same image compose to an automorphism.
                    let pairs: Vec<(usize, usize)> = best_lab
                        .iter()
                        .zip(labeling.iter())
                        .map(|(&a, &b)| (a, b))
                        .collect();
                    for (a, b) in pairs {
                        self.orbits.union(a, b);
                    }
                }
                Some((best_s, _)) if *best_s < s => {}
                _ => self.best = Some((s, labeling)),
            }
            return;
        };

        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if tried.iter().any(|&u| self.orbits.find(u) == self.orbits.find(v)) {
                continue;
            }
            tried.push(v);
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            self.descend(refine(self.g, child));
        }
    }
}

/// Canonical text key: the smallest graph6 string over all vertex relabelings.
pub fn canonical_form(g: &Graph) -> Result<String, IsoError> {
    Ok(canonical_search(g)?.0)
}

/// The permutation sending each original vertex to its canonical position.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, IsoError> {
    let (_, labeling) = canonical_search(g)?;
    let mut perm = vec![0usize; g.order()];
    for (pos, &v) in labeling.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

fn canonical_search(g: &Graph) -> Result<(String, Vec<usize>), IsoError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(IsoError::OrderTooLarge(n));
    }
    if n == 0 {
        return Ok((graph6_encode(g).expect("empty graph encodes"), Vec::new()));
    }
    let mut search = CanonSearch {
        g,
        best: None,
        orbits: UnionFind::new(n),
    };
    let initial = refine(g, vec![(0..n).collect()]);
    search.descend(initial);
    Ok(search.best.expect("search visits at least one leaf"))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, IsoError> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        // still enforce the capability bound so the contract is uniform
        if g.order().max(h.order()) > MAX_CANON_ORDER {
            return Err(IsoError::OrderTooLarge(g.order().max(h.order())));
        }
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        if g.order() > MAX_CANON_ORDER {
            return Err(IsoError::OrderTooLarge(g.order()));
        }
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cal_h, complete_graph, cycle_graph, fan_apex, path_graph, phi, Graph};

    #[test]
    fn relabeling_invariance() {
        let g = fan_apex(7).unwrap();
        let key = canonical_form(&g).unwrap();
        let rotated: Vec<usize> = (0..7).map(|v| (v + 3) % 7).collect();
        assert_eq!(canonical_form(&g.relabel(&rotated).unwrap()).unwrap(), key);
    }

    #[test]
    fn constructions_compare_as_expected() {
        assert!(is_isomorphic(&cal_h(9).unwrap(), &fan_apex(9).unwrap()).unwrap());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_isomorphic(&cycle_graph(4).unwrap(), &two_k2).unwrap());
        assert!(!is_isomorphic(&phi(7).unwrap(), &cal_h(7).unwrap()).unwrap());
    }

    #[test]
    fn complete_graph_canonical_is_itself() {
        let k6 = complete_graph(6).unwrap();
        let key = canonical_form(&k6).unwrap();
        assert_eq!(key, crate::graph6::graph6_encode(&k6).unwrap());
    }

    #[test]
    fn canonical_labeling_reproduces_key() {
        let g = cal_h(8).unwrap();
        let perm = canonical_labeling(&g).unwrap();
        let relabeled = g.relabel(&perm).unwrap();
        assert_eq!(
            crate::graph6::graph6_encode(&relabeled).unwrap(),
            canonical_form(&g).unwrap()
        );
    }

    #[test]
    fn order_limit_is_enforced() {
        let big = path_graph(33).unwrap();
        assert_eq!(canonical_form(&big).unwrap_err(), IsoError::OrderTooLarge(33));
    }

    #[test]
    fn highly_symmetric_inputs_terminate() {
        // orbit pruning keeps complete graphs and cycles from exploding
        canonical_form(&complete_graph(12).unwrap()).unwrap();
        canonical_form(&cycle_graph(16).unwrap()).unwrap();
    }
}
