use super::{trace_faces, Faces, HamiltonCycle, PlanarError, PlaneGraph};

/// One of the two open regions bounded by the Hamilton cycle.
///
/// At a vertex `v` with cycle neighbors `prev` and `next`, `Left` holds the
/// rotation entries strictly after `next` and before `prev`; `Right` holds
/// those strictly after `prev` and before `next`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Chords and faces of the graph sorted by side of the Hamilton cycle.
#[derive(Debug, Clone)]
pub struct Split {
    pub faces: Faces,
    /// Side of every face.
    pub face_side: Vec<Side>,
    /// Chords as `(min, max)` in first-seen order, per side.
    pub left_chords: Vec<(usize, usize)>,
    pub right_chords: Vec<(usize, usize)>,
    /// The side with more chords; ties go to the side of the first chord.
    pub interior: Side,
}

impl Split {
    pub fn exterior(&self) -> Side {
        self.interior.other()
    }

    pub fn chords(&self, side: Side) -> &[(usize, usize)] {
        match side {
            Side::Left => &self.left_chords,
            Side::Right => &self.right_chords,
        }
    }

    /// Edge count of the cycle plus the chords of `side`.
    pub fn edge_count(&self, n: usize, side: Side) -> usize {
        n + self.chords(side).len()
    }
}

/// Side of the face that owns dart `(v, slot)`: that face occupies the
/// corner between rotation entries `slot - 1` and `slot` at `v`.
fn corner_side(graph: &PlaneGraph, ham: &HamiltonCycle, v: usize, slot: usize) -> Side {
    let rot = graph.neighbors(v);
    let d = rot.len();
    let p_prev = rot.iter().position(|&u| u == ham.prev(v)).expect("cycle edge in rotation");
    let p_next = rot.iter().position(|&u| u == ham.next(v)).expect("cycle edge in rotation");
    let span = (p_next + d - p_prev) % d;
    let off = (slot + d - p_prev) % d;
    if off >= 1 && off <= span {
        Side::Right
    } else {
        Side::Left
    }
}

/// Sorts chords and faces by side, checking that every face lies on one side only.
pub fn split_by_hamilton(graph: &PlaneGraph, ham: &HamiltonCycle) -> Result<Split, PlanarError> {
    let n = graph.len();
    if ham.len() != n {
        return Err(PlanarError::NotHamiltonian("cycle belongs to a different graph".into()));
    }
    let faces = trace_faces(graph);
    let mut face_side: Vec<Option<Side>> = vec![None; faces.len()];
    for v in 0..n {
        for slot in 0..graph.degree(v) {
            let d = graph.dart(v, slot);
            let s = corner_side(graph, ham, v, slot);
            let f = faces.face_of(d);
            match face_side[f] {
                None => face_side[f] = Some(s),
                Some(t) if t != s => {
                    return Err(PlanarError::InconsistentSplit(format!("face through vertex {v} meets both sides")))
                }
                _ => {}
            }
        }
    }
    let face_side: Vec<Side> = face_side.into_iter().map(|s| s.expect("every face has a dart")).collect();

    let mut left_chords = Vec::new();
    let mut right_chords = Vec::new();
    let mut first = None;
    for v in 0..n {
        for (slot, &u) in graph.neighbors(v).iter().enumerate() {
            if ham.is_cycle_edge(v, u) {
                continue;
            }
            let here = face_side[faces.face_of(graph.dart(v, slot))];
            let t = graph.twin(graph.dart(v, slot));
            let there = face_side[faces.face_of(t)];
            if here != there {
                return Err(PlanarError::InconsistentSplit(format!("chord {v}-{u} separates the two sides")));
            }
            if v < u {
                first.get_or_insert(here);
                match here {
                    Side::Left => left_chords.push((v, u)),
                    Side::Right => right_chords.push((v, u)),
                }
            }
        }
    }
    let interior = match left_chords.len().cmp(&right_chords.len()) {
        std::cmp::Ordering::Greater => Side::Left,
        std::cmp::Ordering::Less => Side::Right,
        std::cmp::Ordering::Equal => first.unwrap_or(Side::Left),
    };
    Ok(Split { faces, face_side, left_chords, right_chords, interior })
}
