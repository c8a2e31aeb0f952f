use super::PlaneGraph;

/// Dart index, see [`PlaneGraph::dart`].
pub type Dart = usize;

/// Faces of the embedding as closed dart walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    walks: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn walk(&self, f: usize) -> &[Dart] {
        &self.walks[f]
    }

    pub fn walks(&self) -> &[Vec<Dart>] {
        &self.walks
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Vertex sequence of face `f` (the tail of each dart).
    pub fn vertices(&self, graph: &PlaneGraph, f: usize) -> Vec<usize> {
        self.walks[f].iter().map(|&d| graph.tail(d)).collect()
    }
}

/// Traces every face by [`PlaneGraph::face_next`]. The graph constructor has
/// already checked Euler's formula on the result.
pub fn trace_faces(graph: &PlaneGraph) -> Faces {
    let mut face_of = vec![usize::MAX; graph.dart_count()];
    let mut walks = Vec::new();
    for d0 in 0..graph.dart_count() {
        if face_of[d0] != usize::MAX {
            continue;
        }
        let f = walks.len();
        let mut walk = Vec::new();
        let mut d = d0;
        while face_of[d] == usize::MAX {
            face_of[d] = f;
            walk.push(d);
            d = graph.face_next(d);
        }
        debug_assert_eq!(d, d0);
        walks.push(walk);
    }
    debug_assert_eq!(walks.len(), graph.face_count());
    Faces { walks, face_of }
}

/// Number of face orbits, without materialising them.
pub(super) fn count_faces(graph: &PlaneGraph) -> usize {
    let mut seen = vec![false; graph.dart_count()];
    let mut count = 0;
    for d0 in 0..graph.dart_count() {
        if seen[d0] {
            continue;
        }
        count += 1;
        let mut d = d0;
        while !seen[d] {
            seen[d] = true;
            d = graph.face_next(d);
        }
    }
    count
}
