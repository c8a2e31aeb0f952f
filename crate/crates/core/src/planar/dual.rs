use super::{HamiltonCycle, PlaneGraph, Side, Split};
use crate::tree::WeightedTree;

/// Dual tree of the faces on one side of the Hamilton cycle.
///
/// Dual vertex `x` is a face of length `weight(x) + 2`. Dual edges cross the
/// chords of that side.
#[derive(Debug, Clone)]
pub struct DualTree {
    pub side: Side,
    pub tree: WeightedTree,
    /// Primal face index of each dual vertex.
    pub face: Vec<usize>,
    /// For each dual vertex, its boundary darts as `(tail, head, dual vertex across)`,
    /// in face-walk order. The third entry is `None` for Hamilton cycle darts.
    pub boundary: Vec<Vec<(usize, usize, Option<usize>)>>,
    /// Chord crossed by each dual edge, parallel to the tree's adjacency lists.
    pub chord: Vec<Vec<(usize, usize)>>,
}

impl DualTree {
    pub fn len(&self) -> usize {
        self.face.len()
    }

    pub fn is_empty(&self) -> bool {
        self.face.is_empty()
    }

    /// Vertex cycle of the face behind dual vertex `x`.
    pub fn face_vertices(&self, x: usize) -> Vec<usize> {
        self.boundary[x].iter().map(|&(t, _, _)| t).collect()
    }
}

/// Builds the dual tree of `side`. Panics if the faces of that side do not
/// form a tree of total weight `n - 2`, which cannot happen for a valid split.
pub fn build_dual_tree(graph: &PlaneGraph, ham: &HamiltonCycle, split: &Split, side: Side) -> DualTree {
    let faces = &split.faces;
    let mut index = vec![usize::MAX; faces.len()];
    let mut face = Vec::new();
    for (f, &s) in split.face_side.iter().enumerate() {
        if s == side {
            index[f] = face.len();
            face.push(f);
        }
    }
    let mut weights = Vec::with_capacity(face.len());
    let mut boundary = Vec::with_capacity(face.len());
    let mut adjacency = Vec::with_capacity(face.len());
    let mut chord = Vec::with_capacity(face.len());
    for &f in &face {
        let walk = faces.walk(f);
        weights.push(walk.len() as u64 - 2);
        let mut bd = Vec::with_capacity(walk.len());
        let mut adj = Vec::new();
        let mut ch = Vec::new();
        for &d in walk {
            let (t, h) = (graph.tail(d), graph.head(d));
            if ham.is_cycle_edge(t, h) {
                bd.push((t, h, None));
            } else {
                let y = index[faces.face_of(graph.twin(d))];
                debug_assert_ne!(y, usize::MAX);
                bd.push((t, h, Some(y)));
                adj.push(y);
                ch.push((t.min(h), t.max(h)));
            }
        }
        boundary.push(bd);
        adjacency.push(adj);
        chord.push(ch);
    }
    let tree = WeightedTree::new(weights, adjacency).expect("faces on one side of a Hamilton cycle form a tree");
    assert_eq!(tree.total_weight(), graph.len() as u64 - 2, "dual weights must sum to n - 2");
    DualTree { side, tree, face, boundary, chord }
}

/// Boundary cycle of the union of the faces in `subset`, a connected set of
/// dual vertices. Its length is the subset weight plus two.
///
/// Panics if the boundary is not a single simple cycle of that length.
pub fn subtree_to_cycle(dual: &DualTree, subset: &[usize]) -> Vec<usize> {
    let mut member = vec![false; dual.len()];
    for &x in subset {
        member[x] = true;
    }
    let mut succ: Vec<(usize, usize)> = Vec::new();
    for &x in subset {
        for &(t, h, across) in &dual.boundary[x] {
            if across.is_none_or(|y| !member[y]) {
                succ.push((t, h));
            }
        }
    }
    let expected = dual.tree.subset_weight(subset) as usize + 2;
    assert_eq!(succ.len(), expected, "boundary has the wrong number of edges");
    let n_max = succ.iter().map(|&(t, h)| t.max(h)).max().unwrap_or(0) + 1;
    let mut next = vec![usize::MAX; n_max];
    for &(t, h) in &succ {
        assert_eq!(next[t], usize::MAX, "boundary visits vertex {t} twice");
        next[t] = h;
    }
    let start = succ[0].0;
    let mut cycle = vec![start];
    let mut v = next[start];
    while v != start {
        assert!(cycle.len() < expected, "boundary is not a single cycle");
        cycle.push(v);
        v = next[v];
    }
    assert_eq!(cycle.len(), expected, "boundary is not a single cycle");
    cycle
}
