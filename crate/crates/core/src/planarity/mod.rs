//! Planarity and outerplanarity decisions with checkable witnesses on both
//! branches: a combinatorial embedding (rotation system plus traced faces)
//! for planar inputs, a Kuratowski subdivision otherwise.

mod embed;
mod kuratowski;

pub use kuratowski::{KuratowskiKind, KuratowskiWitness};

use thiserror::Error;

use crate::graph::{complete_graph, join, Graph};
use embed::{planar_rotation, trace_faces};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlanarityError {
    #[error("invalid order: {op} requires {requirement}, got {got}")]
    InvalidOrder {
        op: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("{op} requires a maximal planar graph")]
    NotMaximalPlanar { op: &'static str },
    #[error("malformed embedding: {0}")]
    MalformedEmbedding(String),
    #[error("embedding structure violation (this is a bug): {0}")]
    StructureViolation(String),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// A combinatorial planar embedding: cyclic neighbor order per vertex plus
/// the face circuits traced from it.
///
/// `face_count` follows the drawn-in-one-plane convention `1 + c - n + m`
/// (`c` = number of components), so `n - m + face_count = 2` for connected
/// graphs. For disconnected graphs the traced circuit list contains one outer
/// circuit per edge-bearing component; geometrically these bound the single
/// shared outer face, hence `faces().len() >= face_count`.
#[derive(Debug, Clone)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    face_count: usize,
}

impl Embedding {
    /// Validates a rotation system against `g` and traces its faces. Fails if
    /// some rotation is not a permutation of the vertex's neighbors, or if
    /// the traced face counts violate Euler's formula on some component
    /// (i.e. the rotation system is not planar).
    pub fn from_rotation(g: &Graph, rotation: Vec<Vec<usize>>) -> Result<Self, PlanarityError> {
        let faces = trace_faces(g, &rotation).map_err(PlanarityError::MalformedEmbedding)?;
        let components = g.components();

        let mut comp_id = vec![usize::MAX; g.order()];
        for (i, comp) in components.iter().enumerate() {
            for &v in comp {
                comp_id[v] = i;
            }
        }
        let mut traced_per_comp = vec![0usize; components.len()];
        for face in &faces {
            traced_per_comp[comp_id[face[0]]] += 1;
        }
        for (i, comp) in components.iter().enumerate() {
            let n_c = comp.len();
            let m_c: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            let expected = if m_c == 0 { 0 } else { 2 + m_c - n_c };
            if traced_per_comp[i] != expected {
                return Err(PlanarityError::MalformedEmbedding(format!(
                    "component {i}: traced {} faces, Euler requires {expected}",
                    traced_per_comp[i]
                )));
            }
        }

        let face_count = 1 + components.len() + g.edge_count() - g.order();
        Ok(Embedding {
            rotation,
            faces,
            face_count,
        })
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Face boundary circuits. Every edge occurs in exactly two circuit
    /// slots; a bridge occurs twice in the same circuit.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    /// Plain-text form, one vertex per line: `v: w1 w2 ...` with the
    /// neighbors in clockwise order.
    pub fn to_rotation_text(&self) -> String {
        let mut out = String::new();
        for (v, cycle) in self.rotation.iter().enumerate() {
            out.push_str(&v.to_string());
            out.push(':');
            for w in cycle {
                out.push(' ');
                out.push_str(&w.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the `to_rotation_text` form and revalidates it against `g`.
    pub fn parse_rotation_text(g: &Graph, text: &str) -> Result<Self, PlanarityError> {
        let mut rotation = vec![Vec::new(); g.order()];
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or_else(|| {
                PlanarityError::MalformedEmbedding(format!("missing ':' in line {line:?}"))
            })?;
            let v: usize = head.trim().parse().map_err(|_| {
                PlanarityError::MalformedEmbedding(format!("bad vertex id {head:?}"))
            })?;
            if v >= g.order() {
                return Err(PlanarityError::VertexOutOfRange {
                    vertex: v,
                    order: g.order(),
                });
            }
            for token in tail.split_whitespace() {
                let w: usize = token.parse().map_err(|_| {
                    PlanarityError::MalformedEmbedding(format!("bad neighbor id {token:?}"))
                })?;
                rotation[v].push(w);
            }
        }
        Embedding::from_rotation(g, rotation)
    }
}

/// Outcome of `test_planarity`: exactly one of the two witnesses.
#[derive(Debug, Clone)]
pub enum PlanarityResult {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl PlanarityResult {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            PlanarityResult::Planar(e) => Some(e),
            PlanarityResult::NonPlanar(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&KuratowskiWitness> {
        match self {
            PlanarityResult::Planar(_) => None,
            PlanarityResult::NonPlanar(w) => Some(w),
        }
    }

    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Planar(_))
    }
}

/// Decides planarity, producing an embedding or a Kuratowski subdivision.
/// Total over all simple graphs.
pub fn test_planarity(g: &Graph) -> PlanarityResult {
    match planar_rotation(g) {
        Some(rotation) => {
            let embedding = Embedding::from_rotation(g, rotation)
                .expect("constructed rotation systems validate");
            PlanarityResult::Planar(embedding)
        }
        None => PlanarityResult::NonPlanar(kuratowski::extract_kuratowski(g)),
    }
}

/// Planarity without witness construction (cheaper on the nonplanar branch).
pub fn is_planar(g: &Graph) -> bool {
    planar_rotation(g).is_some()
}

/// True iff `g` is planar with `m = 3n - 6` (every face of every embedding a
/// triangle). Requires `n >= 3`.
pub fn is_maximal_planar(g: &Graph) -> Result<bool, PlanarityError> {
    let n = g.order();
    if n < 3 {
        return Err(PlanarityError::InvalidOrder {
            op: "is_maximal_planar",
            requirement: "n >= 3",
            got: n,
        });
    }
    Ok(g.edge_count() == 3 * n - 6 && is_planar(g))
}

/// A graph is outerplanar iff adding an apex adjacent to everything leaves it
/// planar.
pub fn is_outerplanar(g: &Graph) -> bool {
    is_planar(&join(&complete_graph(1).expect("K1"), g))
}

pub fn is_maximal_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.edge_count() == 2 * n - 3 && is_outerplanar(g)
}

/// The cyclic order of `N(v)` in which consecutive vertices are adjacent,
/// covering all of `N(v)`; for a maximal planar graph this is the link cycle
/// of `v`, and for a dominating vertex a Hamilton cycle of `G - v`.
pub fn neighbor_link_cycle(g: &Graph, v: usize) -> Result<Vec<usize>, PlanarityError> {
    let n = g.order();
    if v >= n {
        return Err(PlanarityError::VertexOutOfRange { vertex: v, order: n });
    }
    if n < 4 {
        return Err(PlanarityError::InvalidOrder {
            op: "neighbor_link_cycle",
            requirement: "n >= 4",
            got: n,
        });
    }
    if !is_maximal_planar(g)? {
        return Err(PlanarityError::NotMaximalPlanar {
            op: "neighbor_link_cycle",
        });
    }
    let rotation = planar_rotation(g).expect("maximal planar graphs embed");
    let cycle = rotation[v].clone();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !g.has_edge(a, b) {
            return Err(PlanarityError::StructureViolation(format!(
                "rotation neighbors {a} and {b} of {v} are not adjacent"
            )));
        }
    }
    Ok(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cal_h, complete_bipartite, complete_graph, cycle_graph, fan_apex, path_graph, phi};

    #[test]
    fn k5_and_k33_produce_witnesses() {
        let k5 = complete_graph(5).unwrap();
        let result = test_planarity(&k5);
        let w = result.witness().expect("K5 is nonplanar");
        assert_eq!(w.kind, KuratowskiKind::K5Subdivision);
        w.validate(&k5).unwrap();

        let k33 = complete_bipartite(3, 3).unwrap();
        let w = test_planarity(&k33);
        let w = w.witness().expect("K3,3 is nonplanar");
        assert_eq!(w.kind, KuratowskiKind::K33Subdivision);
        w.validate(&k33).unwrap();
    }

    #[test]
    fn k4_embeds_with_four_triangles() {
        let k4 = complete_graph(4).unwrap();
        let result = test_planarity(&k4);
        let emb = result.embedding().expect("K4 is planar");
        assert_eq!(emb.face_count(), 4);
        assert!(emb.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn nine_edge_five_vertex_maximal_example() {
        // K5 minus one edge: 5 vertices, 9 edges, 6 faces
        let g = cal_h(5).unwrap();
        let emb = test_planarity(&g);
        let emb = emb.embedding().expect("planar");
        assert_eq!(emb.face_count(), 6);
    }

    #[test]
    fn triangulations_have_triangular_faces() {
        for n in [12usize, 20] {
            let h = cal_h(n).unwrap();
            let result = test_planarity(&h);
            let emb = result.embedding().expect("cal_h is planar");
            assert_eq!(emb.face_count(), 2 * n - 4);
            assert!(emb.faces().iter().all(|f| f.len() == 3));
        }
    }

    #[test]
    fn phi_is_never_planar() {
        for n in 5..=12 {
            let g = phi(n).unwrap();
            assert!(!is_planar(&g));
            let w = test_planarity(&g);
            w.witness().unwrap().validate(&g).unwrap();
        }
    }

    #[test]
    fn maximality_predicates() {
        assert!(is_maximal_planar(&cal_h(10).unwrap()).unwrap());
        assert!(!is_maximal_planar(&cycle_graph(6).unwrap()).unwrap());
        assert!(!is_maximal_planar(&phi(6).unwrap()).unwrap());
        assert!(is_maximal_planar(&path_graph(2).unwrap()).is_err());
    }

    #[test]
    fn outerplanarity_predicates() {
        // fan: apex joined to a path, maximal outerplanar on 7 vertices
        let fan = join(&complete_graph(1).unwrap(), &path_graph(6).unwrap());
        assert!(is_outerplanar(&fan));
        assert!(is_maximal_outerplanar(&fan));
        assert_eq!(fan.edge_count(), 2 * fan.order() - 3);

        assert!(!is_outerplanar(&complete_graph(4).unwrap()));
        let c5 = cycle_graph(5).unwrap();
        assert!(is_outerplanar(&c5));
        assert!(!is_maximal_outerplanar(&c5));
    }

    #[test]
    fn link_cycles() {
        let k4 = complete_graph(4).unwrap();
        let cycle = neighbor_link_cycle(&k4, 0).unwrap();
        assert_eq!(cycle.len(), 3);

        // wheel: hub joined to C5
        let wheel = join(&complete_graph(1).unwrap(), &cycle_graph(5).unwrap());
        let cycle = neighbor_link_cycle(&wheel, 0).unwrap();
        assert_eq!(cycle.len(), 5);

        let h8 = cal_h(8).unwrap();
        let cycle = neighbor_link_cycle(&h8, 0).unwrap();
        assert_eq!(cycle.len(), 7);
        // Hamilton cycle of G - v: all other vertices, consecutive ones adjacent
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (1..8).collect::<Vec<_>>());

        assert_eq!(
            neighbor_link_cycle(&cycle_graph(6).unwrap(), 0).unwrap_err(),
            PlanarityError::NotMaximalPlanar {
                op: "neighbor_link_cycle"
            }
        );
    }

    #[test]
    fn embeddings_round_trip_through_text() {
        let g = fan_apex(7).unwrap();
        let emb = match test_planarity(&g) {
            PlanarityResult::Planar(e) => e,
            PlanarityResult::NonPlanar(_) => panic!("fan_apex is planar"),
        };
        let text = emb.to_rotation_text();
        let parsed = Embedding::parse_rotation_text(&g, &text).unwrap();
        assert_eq!(parsed.rotation(), emb.rotation());
        assert_eq!(parsed.face_count(), emb.face_count());
    }

    #[test]
    fn disconnected_euler_convention() {
        // two triangles: c = 2, f = 1 + 2 - 6 + 6 = 3
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let emb = test_planarity(&g);
        let emb = emb.embedding().unwrap();
        assert_eq!(emb.face_count(), 3);
        assert_eq!(emb.faces().len(), 4); // each triangle traces two circuits

        // bridge graph: P3, bridge edges appear twice in one circuit
        let p3 = path_graph(3).unwrap();
        let emb = test_planarity(&p3);
        let emb = emb.embedding().unwrap();
        assert_eq!(emb.face_count(), 1);
        assert_eq!(emb.faces().len(), 1);
        assert_eq!(emb.faces()[0].len(), 4);
    }

    #[test]
    fn malformed_rotation_is_rejected() {
        let c4 = cycle_graph(4).unwrap();
        // swap a neighbor for a non-neighbor
        let bad = vec![vec![1, 2], vec![0, 2], vec![1, 3], vec![2, 0]];
        assert!(matches!(
            Embedding::from_rotation(&c4, bad),
            Err(PlanarityError::MalformedEmbedding(_))
        ));
    }
}
