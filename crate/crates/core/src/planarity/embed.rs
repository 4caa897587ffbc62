//! Embedding construction: biconnected blocks are embedded independently by
//! incremental path addition (fragments into admissible faces), then block
//! rotations are concatenated at cut vertices. Orders here are small, so the
//! quadratic fragment recomputation is deliberate; each step is checkable.

use std::collections::{HashMap, HashSet};

use crate::graph::Graph;

/// Produces a rotation system witnessing planarity, or `None` when the graph
/// is not planar.
pub(crate) fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut local = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let local_edges: Vec<(usize, usize)> = block
            .iter()
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        let block_graph = Graph::from_edges(verts.len(), &local_edges)
            .expect("block edges form a simple graph");
        let faces = embed_biconnected(&block_graph)?;
        for (v_local, cycle) in rotation_from_faces(&block_graph, &faces) {
            rotation[verts[v_local]].extend(cycle.into_iter().map(|w| verts[w]));
        }
    }
    Some(rotation)
}

/// Biconnected components as edge lists (single edges are bridge blocks).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut num = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut counter = 0usize;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    struct Frame {
        v: usize,
        parent: usize,
        next: usize,
    }

    for root in 0..n {
        if num[root] != usize::MAX {
            continue;
        }
        num[root] = counter;
        low[root] = counter;
        counter += 1;
        let mut stack = vec![Frame {
            v: root,
            parent: usize::MAX,
            next: 0,
        }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.next < g.degree(v) {
                let w = g.neighbors(v)[frame.next];
                frame.next += 1;
                if w == frame.parent {
                    continue;
                }
                if num[w] == usize::MAX {
                    edge_stack.push((v, w));
                    num[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if num[w] < num[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(num[w]);
                }
            } else {
                stack.pop();
                if let Some(parent_frame) = stack.last() {
                    let u = parent_frame.v;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= num[u] {
                        let mut block = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            edge_stack.pop();
                            block.push((a, b));
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        if !block.is_empty() {
                            out.push(block);
                        }
                    }
                }
            }
        }
    }
    out
}

struct Fragment {
    attachments: Vec<usize>,
    component: Option<Vec<usize>>, // None for a chord between embedded vertices
}

/// Path-addition embedding of a 2-connected graph (local labels). Returns the
/// face circuits, or `None` when some fragment has no admissible face.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let m = g.edge_count();
    debug_assert!(n >= 3, "blocks with >= 2 edges have >= 3 vertices");
    if m > 3 * n - 6 {
        return None;
    }

    let cycle = initial_cycle(g);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut in_h = vec![false; n];
    for &v in &cycle {
        in_h[v] = true;
    }
    let mut edges_in_h: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        edges_in_h.insert((a.min(b), a.max(b)));
    }

    while edges_in_h.len() < m {
        let fragments = find_fragments(g, &in_h, &edges_in_h);
        debug_assert!(!fragments.is_empty());

        let mut choice: Option<(usize, usize)> = None;
        let mut fewest = usize::MAX;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if admissible.len() < fewest {
                fewest = admissible.len();
                choice = Some((fi, admissible[0]));
                if fewest == 1 {
                    break;
                }
            }
        }
        let (fi, face_idx) = choice.expect("nonempty fragment list");
        let path = fragment_path(g, &fragments[fi], &in_h);
        split_face(&mut faces, face_idx, &path);
        for window in path.windows(2) {
            let (a, b) = (window[0], window[1]);
            edges_in_h.insert((a.min(b), a.max(b)));
        }
        for &v in &path[1..path.len() - 1] {
            in_h[v] = true;
        }
    }
    Some(faces)
}

/// Any cycle, as the first back edge closed through the DFS tree. The first
/// back edge seen anywhere necessarily points at an ancestor, so its cycle
/// closes along tree parents.
fn initial_cycle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut frames: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(&mut (v, ref mut next)) = frames.last_mut() {
        if *next == g.degree(v) {
            frames.pop();
            continue;
        }
        let w = g.neighbors(v)[*next];
        *next += 1;
        if !visited[w] {
            visited[w] = true;
            parent[w] = v;
            frames.push((w, 0));
        } else if w != parent[v] {
            let mut path = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return path;
        }
    }
    unreachable!("2-connected graphs contain a cycle")
}

fn find_fragments(g: &Graph, in_h: &[bool], edges_in_h: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = g.order();
    let mut fragments = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !edges_in_h.contains(&(u, v)) {
            fragments.push(Fragment {
                attachments: vec![u, v],
                component: None,
            });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = vec![s];
        let mut attachments = HashSet::new();
        while let Some(v) = queue.pop() {
            for &w in g.neighbors(v) {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push(w);
                }
            }
        }
        let mut attachments: Vec<usize> = attachments.into_iter().collect();
        attachments.sort_unstable();
        debug_assert!(attachments.len() >= 2, "2-connectivity gives >= 2 attachments");
        fragments.push(Fragment {
            attachments,
            component: Some(comp),
        });
    }
    fragments
}

/// A path through the fragment between two distinct attachment vertices,
/// interior strictly outside the embedded subgraph.
fn fragment_path(g: &Graph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    let Some(comp) = &frag.component else {
        return frag.attachments.clone();
    };
    let comp_set: HashSet<usize> = comp.iter().copied().collect();
    let a = frag.attachments[0];
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &x in g.neighbors(a) {
        if comp_set.contains(&x) && !parent.contains_key(&x) {
            parent.insert(x, a);
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &w in g.neighbors(x) {
            if in_h[w] {
                if w != a {
                    let mut path = vec![w, x];
                    let mut cur = x;
                    while cur != a {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return path;
                }
            } else if comp_set.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, x);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment connects at least two attachments")
}

/// Splits `faces[face_idx]` along `path` (endpoints on the face boundary).
fn split_face(faces: &mut Vec<Vec<usize>>, face_idx: usize, path: &[usize]) {
    let face = faces.remove(face_idx);
    let (a, b) = (path[0], *path.last().expect("paths have two endpoints"));
    let i = face.iter().position(|&v| v == a).expect("endpoint on face");
    let rotated: Vec<usize> = face[i..].iter().chain(face[..i].iter()).copied().collect();
    let j = rotated.iter().position(|&v| v == b).expect("endpoint on face");
    let interior = &path[1..path.len() - 1];

    // a .. b along the boundary, then back through the reversed interior
    let mut face_a: Vec<usize> = rotated[..=j].to_vec();
    face_a.extend(interior.iter().rev());
    // b .. around to a, then forward through the interior
    let mut face_b: Vec<usize> = rotated[j..].to_vec();
    face_b.push(a);
    face_b.extend(interior.iter());

    faces.push(face_a);
    faces.push(face_b);
}

/// Recovers the rotation at each vertex of a 2-connected embedded block from
/// its face circuits: along a face `.., u, v, w, ..` the successor of `u` in
/// the rotation at `v` is `w`; for a planar block this closes a single cycle.
fn rotation_from_faces(g: &Graph, faces: &[Vec<usize>]) -> Vec<(usize, Vec<usize>)> {
    let n = g.order();
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for face in faces {
        let len = face.len();
        for i in 0..len {
            let u = face[i];
            let v = face[(i + 1) % len];
            let w = face[(i + 2) % len];
            succ[v].insert(u, w);
        }
    }
    (0..n)
        .map(|v| {
            let first = g.neighbors(v)[0];
            let mut cycle = vec![first];
            let mut cur = first;
            loop {
                let next = succ[v][&cur];
                if next == first {
                    break;
                }
                cycle.push(next);
                cur = next;
            }
            debug_assert_eq!(cycle.len(), g.degree(v), "rotation covers all neighbors");
            (v, cycle)
        })
        .collect()
}

/// Traces the face circuits of a rotation system. Fails when some rotation
/// list is not a permutation of the vertex's neighbors.
pub(crate) fn trace_faces(g: &Graph, rotation: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, String> {
    let n = g.order();
    if rotation.len() != n {
        return Err(format!(
            "rotation has {} lists for a graph of order {n}",
            rotation.len()
        ));
    }
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for v in 0..n {
        let mut sorted: Vec<usize> = rotation[v].clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(format!(
                "rotation at vertex {v} is not a permutation of its neighbors"
            ));
        }
        for (i, &u) in rotation[v].iter().enumerate() {
            pos[v].insert(u, i);
        }
    }

    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = Vec::new();
    for start_v in 0..n {
        for &start_w in &rotation[start_v] {
            if visited.contains(&(start_v, start_w)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut v) = (start_v, start_w);
            loop {
                visited.insert((u, v));
                face.push(u);
                let i = pos[v][&u];
                let next = rotation[v][(i + 1) % rotation[v].len()];
                (u, v) = (v, next);
                if (u, v) == (start_v, start_w) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    Ok(faces)
}
