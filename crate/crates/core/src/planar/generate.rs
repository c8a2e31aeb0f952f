//! Plane hamiltonian instance generators. Every generator goes through
//! [`embed_hamiltonian`], so each output has passed the Euler check.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{HamiltonCycle, PlanarError, PlaneGraph};

/// Embeds a graph that is planar with the Hamilton cycle `ham` drawn as a circle.
///
/// Chords are 2-colored by the crossing relation; color 0 goes inside the
/// circle. At each vertex the rotation is: next on the cycle, inside chords,
/// previous on the cycle, outside chords.
pub fn embed_hamiltonian(
    n: usize,
    edges: &[(usize, usize)],
    ham: &[usize],
) -> Result<(PlaneGraph, HamiltonCycle), PlanarError> {
    if n < 3 {
        return Err(PlanarError::TooSmall(n));
    }
    let mut pos = vec![usize::MAX; n];
    if ham.len() != n {
        return Err(PlanarError::NotHamiltonian(format!("{} vertices listed, graph has {n}", ham.len())));
    }
    for (i, &v) in ham.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(PlanarError::NotHamiltonian(format!("vertex {v} out of range or repeated")));
        }
        pos[v] = i;
    }
    let mut set = BTreeSet::new();
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(PlanarError::NeighborOutOfRange { vertex: u.min(v), neighbor: u.max(v) });
        }
        if u == v || !set.insert((pos[u].min(pos[v]), pos[u].max(pos[v]))) {
            return Err(PlanarError::RepeatedNeighbor { vertex: u, neighbor: v });
        }
    }
    for i in 0..n {
        let e = (i.min((i + 1) % n), i.max((i + 1) % n));
        if !set.remove(&e) {
            return Err(PlanarError::NotHamiltonian(format!("{} and {} are not adjacent", ham[e.0], ham[e.1])));
        }
    }
    let chords: Vec<(usize, usize)> = set.into_iter().collect();
    let color = color_chords(&chords)?;

    // Rotation over positions, relabelled to vertex ids at the end.
    let mut inside: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut outside: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, &(a, b)) in chords.iter().enumerate() {
        let side = if color[c] == 0 { &mut inside } else { &mut outside };
        side[a].push(b);
        side[b].push(a);
    }
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        let off = |j: usize| (j + n - i) % n;
        let mut rot = vec![(i + 1) % n];
        let mut ins = std::mem::take(&mut inside[i]);
        ins.sort_by_key(|&j| off(j));
        rot.extend(ins);
        rot.push((i + n - 1) % n);
        let mut outs = std::mem::take(&mut outside[i]);
        outs.sort_by_key(|&j| std::cmp::Reverse(off(j)));
        rot.extend(outs);
        adjacency[ham[i]] = rot.into_iter().map(|j| ham[j]).collect();
    }
    let graph = PlaneGraph::new(adjacency)?;
    let cycle = HamiltonCycle::new(&graph, ham.to_vec())?;
    Ok((graph, cycle))
}

/// Proper 2-coloring of the chords' crossing graph.
fn color_chords(chords: &[(usize, usize)]) -> Result<Vec<u8>, PlanarError> {
    let cross = |(a, b): (usize, usize), (c, d): (usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    let mut color = vec![u8::MAX; chords.len()];
    for s in 0..chords.len() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..chords.len() {
                if y != x && cross(chords[x], chords[y]) {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return Err(PlanarError::CrossingChords);
                    }
                }
            }
        }
    }
    Ok(color)
}

/// `C_n^2` with Hamilton cycle `0 1 ... n-1`, for even `n >= 6`.
pub fn square_cycle(n: usize) -> Result<(PlaneGraph, HamiltonCycle), PlanarError> {
    if n < 6 || n % 2 == 1 {
        return Err(PlanarError::BadParams(format!("square-cycle needs even n >= 6, got {n}")));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, (i + 2) % n)));
    embed_hamiltonian(n, &edges, &(0..n).collect::<Vec<_>>())
}

/// The octahedron, drawn as `C_6^2`.
pub fn octahedron() -> (PlaneGraph, HamiltonCycle) {
    square_cycle(6).expect("C_6^2 is plane")
}

/// `C_n^2` with the inner polygon `0 2 4 ... n-2` randomly triangulated, for even `n >= 8`.
/// The side holding the even chords has more than `3n/2` edges.
pub fn dense_square_cycle(n: usize, seed: u64) -> Result<(PlaneGraph, HamiltonCycle), PlanarError> {
    if n < 8 || n % 2 == 1 {
        return Err(PlanarError::BadParams(format!("dense square-cycle needs even n >= 8, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, (i + 2) % n)));
    triangulate((0..n).step_by(2).collect(), &mut rng, &mut edges);
    embed_hamiltonian(n, &edges, &(0..n).collect::<Vec<_>>())
}

/// Ring of `p` octahedra, each missing one edge, joined through the two
/// vertices that lost it. 4-regular on `6p` vertices; `p = 1` is the octahedron.
/// Its cycle lengths are `3..=6` and `3p..=6p`.
pub fn malkevitch(p: usize) -> Result<(PlaneGraph, HamiltonCycle), PlanarError> {
    if p == 0 || p > 1 << 20 {
        return Err(PlanarError::BadParams(format!("malkevitch needs p >= 1, got {p}")));
    }
    // Block vertices 0..6; the missing octahedron edges are 02, 13, 45, and 01 is removed.
    const BLOCK: [(usize, usize); 11] =
        [(0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)];
    const WALK: [usize; 6] = [0, 4, 3, 5, 2, 1];
    let n = 6 * p;
    let mut edges = Vec::with_capacity(12 * p);
    let mut ham = Vec::with_capacity(n);
    for b in 0..p {
        let o = 6 * b;
        edges.extend(BLOCK.iter().map(|&(u, v)| (o + u, o + v)));
        edges.push((o + 1, (o + 6) % n));
        ham.extend(WALK.iter().map(|&v| o + v));
    }
    embed_hamiltonian(n, &edges, &ham)
}

/// Medial graph of the `t`-prism: 4-regular, 3-connected, `3t` vertices,
/// faces of length 3, 4 and `t`.
///
/// Vertices `0..t` are the outer rim edges, `t..2t` the inner rim edges and
/// `2t..3t` the spokes of the prism.
pub fn medial_prism(t: usize) -> Result<(PlaneGraph, HamiltonCycle), PlanarError> {
    if !(3..=1 << 20).contains(&t) {
        return Err(PlanarError::BadParams(format!("medial prism needs t >= 3, got {t}")));
    }
    let (a, b, s) = (|i: usize| i % t, |i: usize| t + i % t, |i: usize| 2 * t + i % t);
    let mut edges = Vec::with_capacity(6 * t);
    for i in 0..t {
        edges.extend([(a(i), a(i + 1)), (b(i), b(i + 1)), (a(i), s(i + 1)), (s(i + 1), b(i)), (b(i), s(i)), (s(i), a(i))]);
    }
    let mut ham: Vec<usize> = (1..t).map(a).collect();
    ham.extend([a(0), s(0), b(0)]);
    for i in (1..t).rev() {
        ham.extend([b(i), s(i)]);
    }
    embed_hamiltonian(3 * t, &edges, &ham)
}

/// Random plane hamiltonian graph on `n >= 4` vertices: both sides of the
/// cycle randomly triangulated, then each chord kept with probability
/// `keep_percent / 100`. Vertex labels along the cycle are shuffled.
pub fn random_plane_hamiltonian(
    n: usize,
    keep_percent: u32,
    seed: u64,
) -> Result<(PlaneGraph, HamiltonCycle), PlanarError> {
    if !(4..=1 << 20).contains(&n) || keep_percent > 100 {
        return Err(PlanarError::BadParams(format!("random plane graph needs n >= 4 and keep <= 100, got {n}, {keep_percent}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chords = Vec::new();
    triangulate((0..n).collect(), &mut rng, &mut chords);
    let mut outer = Vec::new();
    triangulate((0..n).collect(), &mut rng, &mut outer);
    let mut seen: BTreeSet<(usize, usize)> = chords.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    chords.extend(outer.into_iter().filter(|&(u, v)| seen.insert((u.min(v), u.max(v)))));
    chords.retain(|_| rng.gen_range(0..100) < keep_percent);

    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let mut edges: Vec<_> = (0..n).map(|i| (labels[i], labels[(i + 1) % n])).collect();
    edges.extend(chords.into_iter().map(|(u, v)| (labels[u], labels[v])));
    embed_hamiltonian(n, &edges, &labels)
}

/// Appends the diagonals of a random triangulation of the convex polygon `poly`.
fn triangulate(poly: Vec<usize>, rng: &mut ChaCha8Rng, out: &mut Vec<(usize, usize)>) {
    let mut stack = vec![poly];
    while let Some(p) = stack.pop() {
        let k = p.len();
        if k < 4 {
            continue;
        }
        // Triangle on the side p[0] p[k-1] with a random apex.
        let j = rng.gen_range(1..k - 1);
        if j > 1 {
            out.push((p[0], p[j]));
        }
        if j < k - 2 {
            out.push((p[j], p[k - 1]));
        }
        stack.push(p[..=j].to_vec());
        stack.push(p[j..].to_vec());
    }
}
