//! Subdivision certificates for nonplanarity.
//!
//! Extraction deletes edges greedily while the graph stays nonplanar; since
//! planarity is subgraph-monotone a single pass leaves an edge-minimal
//! nonplanar graph, which is exactly a subdivision of K5 or K3,3 (plus
//! isolated vertices). Branch vertices and subdivided paths are then read off
//! the degrees.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::planarity::embed::planar_rotation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5Subdivision,
    K33Subdivision,
}

/// A subdivision of K5 or K3,3 inside the input graph: `branch_vertices` are
/// the subdivision's degree-3+ vertices, `paths` the internally disjoint
/// branch-to-branch paths (each listed once, endpoints included).
#[derive(Debug, Clone)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

pub(crate) fn extract_kuratowski(g: &Graph) -> KuratowskiWitness {
    debug_assert!(planar_rotation(g).is_none(), "witness requested for a planar graph");
    let mut core = g.clone();
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let candidate = core.remove_edge(u, v).expect("edge present");
        if planar_rotation(&candidate).is_none() {
            core = candidate;
        }
    }
    witness_from_subdivision(&core)
}

fn witness_from_subdivision(core: &Graph) -> KuratowskiWitness {
    let branch_vertices: Vec<usize> = core
        .vertices()
        .filter(|&v| core.degree(v) >= 3)
        .collect();

    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    for &b in &branch_vertices {
        for &first in core.neighbors(b) {
            if used.contains(&(b, first)) {
                continue;
            }
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while core.degree(cur) == 2 {
                let step = core.neighbors(cur).iter().copied().find(|&w| w != prev);
                let next = step.expect("degree-2 vertex continues the path");
                path.push(next);
                prev = cur;
                cur = next;
            }
            used.insert((b, first));
            used.insert((cur, prev));
            paths.push(path);
        }
    }

    let kind = match branch_vertices.len() {
        5 => KuratowskiKind::K5Subdivision,
        6 => KuratowskiKind::K33Subdivision,
        other => unreachable!("edge-minimal nonplanar core has 5 or 6 branch vertices, got {other}"),
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        paths,
    }
}

impl KuratowskiWitness {
    /// Confirms that the witness is a genuine K5 or K3,3 subdivision of `g`:
    /// every path lies in `g`, paths are internally disjoint, and the
    /// branch-vertex link structure matches the claimed pattern.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let branch: HashSet<usize> = self.branch_vertices.iter().copied().collect();
        if branch.len() != self.branch_vertices.len() {
            return Err("repeated branch vertex".into());
        }
        let expected_paths = match self.kind {
            KuratowskiKind::K5Subdivision => {
                if branch.len() != 5 {
                    return Err("K5 subdivision needs 5 branch vertices".into());
                }
                10
            }
            KuratowskiKind::K33Subdivision => {
                if branch.len() != 6 {
                    return Err("K3,3 subdivision needs 6 branch vertices".into());
                }
                9
            }
        };
        if self.paths.len() != expected_paths {
            return Err(format!(
                "expected {expected_paths} paths, found {}",
                self.paths.len()
            ));
        }

        let mut interior_seen: HashSet<usize> = HashSet::new();
        let mut links: HashSet<(usize, usize)> = HashSet::new();
        for path in &self.paths {
            if path.len() < 2 {
                return Err("path with fewer than two vertices".into());
            }
            let (a, b) = (path[0], *path.last().expect("nonempty"));
            if !branch.contains(&a) || !branch.contains(&b) || a == b {
                return Err("path endpoints must be distinct branch vertices".into());
            }
            for pair in path.windows(2) {
                if !g.has_edge(pair[0], pair[1]) {
                    return Err(format!("({}, {}) is not an edge", pair[0], pair[1]));
                }
            }
            for &v in &path[1..path.len() - 1] {
                if branch.contains(&v) || !interior_seen.insert(v) {
                    return Err(format!("interior vertex {v} reused or is a branch vertex"));
                }
            }
            if !links.insert((a.min(b), a.max(b))) {
                return Err(format!("duplicate path between {a} and {b}"));
            }
        }

        match self.kind {
            KuratowskiKind::K5Subdivision => {
                for (i, &a) in self.branch_vertices.iter().enumerate() {
                    for &b in &self.branch_vertices[i + 1..] {
                        if !links.contains(&(a.min(b), a.max(b))) {
                            return Err(format!("missing K5 path between {a} and {b}"));
                        }
                    }
                }
            }
            KuratowskiKind::K33Subdivision => {
                // one side: the first branch vertex plus the two it is not linked to
                let v0 = self.branch_vertices[0];
                let side: Vec<usize> = self
                    .branch_vertices
                    .iter()
                    .copied()
                    .filter(|&b| b == v0 || !links.contains(&(v0.min(b), v0.max(b))))
                    .collect();
                if side.len() != 3 {
                    return Err("branch links do not split 3 + 3".into());
                }
                for &a in &self.branch_vertices {
                    for &b in &self.branch_vertices {
                        if a >= b {
                            continue;
                        }
                        let same_side = side.contains(&a) == side.contains(&b);
                        let linked = links.contains(&(a, b));
                        if same_side && linked {
                            return Err(format!("{a} and {b} on one side but linked"));
                        }
                        if !same_side && !linked {
                            return Err(format!("{a} and {b} on opposite sides but unlinked"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
