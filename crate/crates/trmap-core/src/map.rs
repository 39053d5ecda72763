//! Rooted planar maps as half-edge rotation systems.
//!
//! A map is a pair of permutations on half-edge identifiers `0..H`:
//! `vertex_next` (the counterclockwise successor around each vertex) and
//! `edge_pair` (the involution matching the two halves of each edge). The
//! involution has exactly one fixed point, the dangling root half-edge, so
//! `H` is odd and the zero-edge map is representable.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Half-edge identifier.
pub type HalfEdge = usize;

/// The gap between a half-edge and its counterclockwise successor around
/// their common vertex. Corners are addressed by the preceding half-edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Corner {
    pub after: HalfEdge,
}

impl Corner {
    pub fn vertex(self, m: &RootedMap) -> usize {
        m.vertex_of(self.after)
    }

    /// The half-edge closing the corner, `vertex_next(after)`.
    pub fn next_half_edge(self, m: &RootedMap) -> HalfEdge {
        m.vertex_next(self.after)
    }
}

/// Violations reported by map validation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapError {
    /// `vertex_next` and `edge_pair` must have equal odd length.
    BadArity,
    /// `vertex_next` is not a permutation of `0..H`.
    NotPermutation,
    /// `edge_pair` is not an involution of `0..H`.
    NotInvolution,
    /// The root must be the unique fixed point of `edge_pair`.
    BadRoot,
    /// Not all half-edges are reachable from the root.
    Disconnected,
    /// Euler characteristic differs from 2 (the map is not planar).
    GenusViolation { euler: i64 },
    /// The distinguished edge set is not a spanning tree.
    NotSpanningTree,
    /// Some edge does not carry exactly one head, or the root is a tail.
    BadOrientation,
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::BadArity => write!(f, "permutation arrays must have equal odd length"),
            MapError::NotPermutation => write!(f, "vertex_next is not a permutation"),
            MapError::NotInvolution => write!(f, "edge_pair is not an involution"),
            MapError::BadRoot => write!(f, "root is not the unique fixed point of edge_pair"),
            MapError::Disconnected => write!(f, "map is not connected"),
            MapError::GenusViolation { euler } => {
                write!(f, "Euler characteristic {euler}, expected 2")
            }
            MapError::NotSpanningTree => write!(f, "edge set is not a spanning tree"),
            MapError::BadOrientation => write!(f, "orientation must mark one head per edge"),
        }
    }
}

impl core::error::Error for MapError {}

/// A rooted planar map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedMap {
    vertex_next: Vec<HalfEdge>,
    edge_pair: Vec<HalfEdge>,
    root: HalfEdge,
    vertex_of: Vec<usize>,
    num_vertices: usize,
    num_faces: usize,
}

impl RootedMap {
    /// Validates and freezes a rotation system; see [`MapError`] for the
    /// enforced invariants, including genus 0.
    pub fn new(
        vertex_next: Vec<HalfEdge>,
        edge_pair: Vec<HalfEdge>,
        root: HalfEdge,
    ) -> Result<RootedMap, MapError> {
        let h = vertex_next.len();
        if h == 0 || h.is_multiple_of(2) || edge_pair.len() != h {
            return Err(MapError::BadArity);
        }
        if !is_permutation(&vertex_next) {
            return Err(MapError::NotPermutation);
        }
        if !is_permutation(&edge_pair) || (0..h).any(|x| edge_pair[edge_pair[x]] != x) {
            return Err(MapError::NotInvolution);
        }
        let fixed: Vec<usize> = (0..h).filter(|&x| edge_pair[x] == x).collect();
        if root >= h || fixed != [root] {
            return Err(MapError::BadRoot);
        }

        // Orbit of {vertex_next, edge_pair} from the root.
        let mut seen = vec![false; h];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(x) = stack.pop() {
            for y in [vertex_next[x], edge_pair[x]] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(MapError::Disconnected);
        }

        let (vertex_of, num_vertices) = cycle_labels(&vertex_next);
        let face_perm: Vec<usize> = (0..h).map(|x| vertex_next[edge_pair[x]]).collect();
        let (_, num_faces) = cycle_labels(&face_perm);
        let edges = (h - 1) / 2;
        let euler = num_vertices as i64 - edges as i64 + num_faces as i64;
        if euler != 2 {
            return Err(MapError::GenusViolation { euler });
        }

        Ok(RootedMap {
            vertex_next,
            edge_pair,
            root,
            vertex_of,
            num_vertices,
            num_faces,
        })
    }

    /// The map with one vertex and only the root half-edge.
    pub fn trivial() -> RootedMap {
        RootedMap::new(vec![0], vec![0], 0).expect("the one-half-edge map is valid")
    }

    pub fn half_edge_count(&self) -> usize {
        self.vertex_next.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        (self.half_edge_count() - 1) / 2
    }

    pub fn root(&self) -> HalfEdge {
        self.root
    }

    pub fn vertex_next(&self, h: HalfEdge) -> HalfEdge {
        self.vertex_next[h]
    }

    /// Counterclockwise predecessor around the vertex.
    pub fn vertex_prev(&self, h: HalfEdge) -> HalfEdge {
        let mut x = h;
        while self.vertex_next[x] != h {
            x = self.vertex_next[x];
        }
        x
    }

    pub fn edge_pair(&self, h: HalfEdge) -> HalfEdge {
        self.edge_pair[h]
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        self.vertex_of[h]
    }

    pub fn vertex_count(&self) -> usize {
        self.num_vertices
    }

    pub fn face_count(&self) -> usize {
        self.num_faces
    }

    /// The root-vertex.
    pub fn root_vertex(&self) -> usize {
        self.vertex_of[self.root]
    }

    /// Non-root half-edges paired into edges, each edge once, by minimum
    /// half-edge.
    pub fn edges(&self) -> Vec<(HalfEdge, HalfEdge)> {
        (0..self.half_edge_count())
            .filter(|&x| x != self.root && x < self.edge_pair[x])
            .map(|x| (x, self.edge_pair[x]))
            .collect()
    }

    /// Labels invariant under half-edge relabeling: breadth-first search
    /// from the root along the vertex walk and the edge involution, then
    /// the two permutation tables under the induced labels. Two rooted
    /// maps are equal as rooted maps iff these sequences are equal.
    pub fn canonical_form(&self) -> Vec<usize> {
        let order = self.traversal_order();
        let h = self.half_edge_count();
        let mut label = vec![0usize; h];
        for (i, &x) in order.iter().enumerate() {
            label[x] = i;
        }
        let mut out = Vec::with_capacity(2 * h);
        for &x in &order {
            out.push(label[self.vertex_next[x]]);
        }
        for &x in &order {
            out.push(label[self.edge_pair[x]]);
        }
        out
    }

    /// First-visit order of the canonical traversal.
    fn traversal_order(&self) -> Vec<HalfEdge> {
        let h = self.half_edge_count();
        let mut seen = vec![false; h];
        let mut order = Vec::with_capacity(h);
        seen[self.root] = true;
        order.push(self.root);
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for y in [self.vertex_next[x], self.edge_pair[x]] {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
        order
    }

    /// The same map under a relabeling of half-edges; `perm[old] = new`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<RootedMap, MapError> {
        let h = self.half_edge_count();
        if perm.len() != h || !is_permutation(perm) {
            return Err(MapError::NotPermutation);
        }
        let mut vertex_next = vec![0; h];
        let mut edge_pair = vec![0; h];
        for x in 0..h {
            vertex_next[perm[x]] = perm[self.vertex_next[x]];
            edge_pair[perm[x]] = perm[self.edge_pair[x]];
        }
        RootedMap::new(vertex_next, edge_pair, perm[self.root])
    }
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Labels each position by its cycle, in order of first appearance;
/// returns the labels and the cycle count.
fn cycle_labels(perm: &[usize]) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while label[x] == usize::MAX {
            label[x] = count;
            x = perm[x];
        }
        count += 1;
    }
    (label, count)
}

/// One step of the tour of a spanning tree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TourEvent {
    /// A tree half-edge is followed.
    Follow(HalfEdge),
    /// A non-tree half-edge is crossed.
    Cross(HalfEdge),
}

impl TourEvent {
    pub fn half_edge(self) -> HalfEdge {
        match self {
            TourEvent::Follow(h) | TourEvent::Cross(h) => h,
        }
    }
}

/// A rooted map with a distinguished spanning tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeRootedMap {
    map: RootedMap,
    in_tree: Vec<bool>,
}

impl TreeRootedMap {
    /// `in_tree` marks both halves of each tree edge and not the root.
    pub fn new(map: RootedMap, in_tree: Vec<bool>) -> Result<TreeRootedMap, MapError> {
        if in_tree.len() != map.half_edge_count() || !is_spanning_tree(&map, &in_tree) {
            return Err(MapError::NotSpanningTree);
        }
        Ok(TreeRootedMap { map, in_tree })
    }

    pub fn map(&self) -> &RootedMap {
        &self.map
    }

    pub fn size(&self) -> usize {
        self.map.size()
    }

    pub fn is_tree_edge(&self, h: HalfEdge) -> bool {
        self.in_tree[h]
    }

    pub fn tree_flags(&self) -> &[bool] {
        &self.in_tree
    }

    pub fn tree_edge_count(&self) -> usize {
        self.in_tree.iter().filter(|&&t| t).count() / 2
    }

    /// The counterclockwise tour of the spanning tree, from the root back
    /// to the root. Each non-root half-edge produces exactly one event:
    /// after following a tree half-edge `h` the walk continues at
    /// `vertex_next(edge_pair(h))`, after crossing a non-tree half-edge it
    /// continues at `vertex_next(h)`.
    pub fn tour(&self) -> Vec<TourEvent> {
        let m = &self.map;
        let mut events = Vec::with_capacity(m.half_edge_count() - 1);
        let mut pos = m.root();
        loop {
            let h = m.vertex_next(pos);
            if h == m.root() {
                break;
            }
            if self.in_tree[h] {
                events.push(TourEvent::Follow(h));
                pos = m.edge_pair(h);
            } else {
                events.push(TourEvent::Cross(h));
                pos = h;
            }
        }
        debug_assert_eq!(events.len(), 2 * self.size());
        events
    }

    /// Canonical labels of the map extended with the tree indicator.
    pub fn canonical_form(&self) -> Vec<usize> {
        let mut out = self.map.canonical_form();
        for &x in &self.map.traversal_order() {
            out.push(self.in_tree[x] as usize);
        }
        out
    }
}

/// A rooted map with one head per edge; the root is a head.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedMap {
    map: RootedMap,
    is_head: Vec<bool>,
}

impl OrientedMap {
    pub fn new(map: RootedMap, is_head: Vec<bool>) -> Result<OrientedMap, MapError> {
        if is_head.len() != map.half_edge_count() || !is_head[map.root()] {
            return Err(MapError::BadOrientation);
        }
        for (h1, h2) in map.edges() {
            if is_head[h1] == is_head[h2] {
                return Err(MapError::BadOrientation);
            }
        }
        Ok(OrientedMap { map, is_head })
    }

    pub fn map(&self) -> &RootedMap {
        &self.map
    }

    pub fn size(&self) -> usize {
        self.map.size()
    }

    pub fn is_head(&self, h: HalfEdge) -> bool {
        self.is_head[h]
    }

    pub fn head_flags(&self) -> &[bool] {
        &self.is_head
    }

    /// Heads incident to a vertex, in rotation order from an arbitrary
    /// starting point.
    pub fn heads_at(&self, vertex: usize) -> Vec<HalfEdge> {
        (0..self.map.half_edge_count())
            .filter(|&h| self.map.vertex_of(h) == vertex && self.is_head[h])
            .collect()
    }

    /// Canonical labels of the map extended with the head indicator.
    pub fn canonical_form(&self) -> Vec<usize> {
        let mut out = self.map.canonical_form();
        for &x in &self.map.traversal_order() {
            out.push(self.is_head[x] as usize);
        }
        out
    }
}

/// Does `in_tree` mark a spanning tree of `m`?
pub fn is_spanning_tree(m: &RootedMap, in_tree: &[bool]) -> bool {
    if in_tree.len() != m.half_edge_count() || in_tree[m.root()] {
        return false;
    }
    let mut edge_count = 0;
    for (h1, h2) in m.edges() {
        if in_tree[h1] != in_tree[h2] {
            return false;
        }
        if in_tree[h1] {
            edge_count += 1;
        }
    }
    if edge_count + 1 != m.vertex_count() {
        return false;
    }
    // Connectivity over vertices through tree edges.
    let mut seen = vec![false; m.vertex_count()];
    let mut stack = vec![m.root_vertex()];
    seen[m.root_vertex()] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for (h, &tree) in in_tree.iter().enumerate() {
            if tree && m.vertex_of(h) == v {
                let w = m.vertex_of(m.edge_pair(h));
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
    }
    reached == m.vertex_count()
}

/// All spanning trees of `m`, as tree-rooted maps, in edge-subset order.
pub fn spanning_trees(m: &RootedMap) -> Vec<TreeRootedMap> {
    let edges = m.edges();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let mut in_tree = vec![false; m.half_edge_count()];
        for (i, &(h1, h2)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                in_tree[h1] = true;
                in_tree[h2] = true;
            }
        }
        if is_spanning_tree(m, &in_tree) {
            out.push(TreeRootedMap {
                map: m.clone(),
                in_tree,
            });
        }
    }
    out
}

/// All `2^E` orientations of `m` (the root is always a head).
pub fn orientations(m: &RootedMap) -> Vec<OrientedMap> {
    let edges = m.edges();
    let mut out = Vec::with_capacity(1 << edges.len());
    for mask in 0u64..(1u64 << edges.len()) {
        let mut is_head = vec![false; m.half_edge_count()];
        is_head[m.root()] = true;
        for (i, &(h1, h2)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                is_head[h1] = true;
            } else {
                is_head[h2] = true;
            }
        }
        out.push(OrientedMap {
            map: m.clone(),
            is_head,
        });
    }
    out
}

/// The map with two vertices joined by one edge, rooted at the first.
/// Half-edges: root 0, then the edge pair (1, 2).
pub fn link_map() -> RootedMap {
    RootedMap::new(vec![1, 0, 2], vec![0, 2, 1], 0).expect("link map is valid")
}

/// The map with one vertex and one loop; the rotation is root, then the
/// two loop halves.
pub fn loop_map() -> RootedMap {
    RootedMap::new(vec![1, 2, 0], vec![0, 2, 1], 0).expect("loop map is valid")
}
