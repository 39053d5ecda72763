//! Prefix-maps, prefix-forests and partition-trees: the executable form of
//! the machinery proving that the vertex-explosion bijection and the
//! Cori–Dulucq–Viennot construction are isomorphic.
//!
//! A prefix-shuffle `w` encodes a partially built tree-oriented map `M_w`
//! with some dangling heads in the root-face and an active edge path. Its
//! explosion without the active tails is a forest matching `λ0(w)`; the
//! dual of its black/white face structure is a bicolored tree matching
//! `θ∘λ1(w)`. Both statements, and the one-letter evolution lemmas behind
//! them, are verified here as black-box structural equalities.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::catalan::{theta_with_leaves, PlaneTree, Side};
use crate::cdv::{lambda0, lambda1, TreeSequence};
use crate::map::{HalfEdge, OrientedMap, RootedMap};
use crate::orientation::delta;
use crate::walsh_lehman::xi_inv;
use crate::words::{Letter, ParenShuffle, PrefixShuffle};

/// The prefix-map `M_w`: the spanning tree of `w_a^+` oriented from the
/// root to the leaves, chords for the paired `b`/`b̄` letters, one dangling
/// head per unpaired `b`, and the unpaired-`a` edges marked active.
///
/// Dangling heads are extra fixed points of the pairing, so a prefix-map
/// is not a [`RootedMap`] unless it is complete.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefixMap {
    sigma: Vec<HalfEdge>,
    alpha: Vec<HalfEdge>,
    is_head: Vec<bool>,
    in_tree: Vec<bool>,
    active: Vec<bool>,
    /// Dangling heads in appearance order around the tree.
    dangling: Vec<HalfEdge>,
    /// The root, then the heads of active edges in path order.
    rooting_heads: Vec<HalfEdge>,
    vertex_of: Vec<usize>,
    num_vertices: usize,
}

impl PrefixMap {
    pub fn half_edge_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn root(&self) -> HalfEdge {
        0
    }

    pub fn vertex_next(&self, h: HalfEdge) -> HalfEdge {
        self.sigma[h]
    }

    pub fn edge_pair(&self, h: HalfEdge) -> HalfEdge {
        self.alpha[h]
    }

    pub fn is_head(&self, h: HalfEdge) -> bool {
        self.is_head[h]
    }

    pub fn is_tree_half(&self, h: HalfEdge) -> bool {
        self.in_tree[h]
    }

    pub fn is_active_half(&self, h: HalfEdge) -> bool {
        self.active[h]
    }

    pub fn is_dangling(&self, h: HalfEdge) -> bool {
        h != 0 && self.alpha[h] == h
    }

    pub fn dangling_heads(&self) -> &[HalfEdge] {
        &self.dangling
    }

    pub fn rooting_heads(&self) -> &[HalfEdge] {
        &self.rooting_heads
    }

    /// Rooting vertices: the root-vertex, then the ends of active edges in
    /// path order.
    pub fn rooting_vertices(&self) -> Vec<usize> {
        self.rooting_heads.iter().map(|&h| self.vertex_of[h]).collect()
    }

    pub fn active_edge_count(&self) -> usize {
        self.rooting_heads.len() - 1
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        self.vertex_of[h]
    }

    pub fn vertex_count(&self) -> usize {
        self.num_vertices
    }

    pub fn is_complete(&self) -> bool {
        self.dangling.is_empty() && self.active_edge_count() == 0
    }

    /// The underlying tree-oriented map, when `w` is a parenthesis-shuffle.
    pub fn to_oriented_map(&self) -> Option<OrientedMap> {
        if !self.is_complete() {
            return None;
        }
        let map = RootedMap::new(self.sigma.clone(), self.alpha.clone(), 0)
            .expect("a complete prefix-map is a rooted map");
        Some(OrientedMap::new(map, self.is_head.clone()).expect("one head per edge"))
    }

    /// Half-edges in tour order, the root first. The tour follows tree
    /// borders and crosses everything else, so every half-edge shows up
    /// exactly once.
    fn tour_order(&self) -> Vec<HalfEdge> {
        let mut order = vec![0];
        let mut pos = 0;
        loop {
            let h = self.sigma[pos];
            if h == 0 {
                break;
            }
            order.push(h);
            pos = if self.in_tree[h] { self.alpha[h] } else { h };
        }
        debug_assert_eq!(order.len(), self.half_edge_count());
        order
    }

    /// Structure under tour-order relabeling: permutations, flags, and the
    /// dangling/rooting sequences. Two prefix-maps are structurally equal
    /// iff these agree.
    pub fn canonical_form(&self) -> Vec<usize> {
        let order = self.tour_order();
        let mut label = vec![0usize; self.half_edge_count()];
        for (i, &h) in order.iter().enumerate() {
            label[h] = i;
        }
        let mut out = Vec::new();
        for &h in &order {
            out.push(label[self.sigma[h]]);
        }
        for &h in &order {
            out.push(label[self.alpha[h]]);
        }
        for &h in &order {
            out.push(
                (self.is_head[h] as usize)
                    | (self.in_tree[h] as usize) << 1
                    | (self.active[h] as usize) << 2,
            );
        }
        out.push(self.dangling.len());
        out.extend(self.dangling.iter().map(|&h| label[h]));
        out.push(self.rooting_heads.len());
        out.extend(self.rooting_heads.iter().map(|&h| label[h]));
        out
    }

    fn vertex_prev(&self, h: HalfEdge) -> HalfEdge {
        let mut x = h;
        while self.sigma[x] != h {
            x = self.sigma[x];
        }
        x
    }

    /// The corner at the left of the last rooting head, where the next
    /// letter of the word would act: addressed by its preceding half-edge.
    fn growth_corner(&self) -> HalfEdge {
        self.vertex_prev(*self.rooting_heads.last().expect("root is always rooting"))
    }

    fn recompute_vertices(&mut self) {
        let mut label = vec![usize::MAX; self.sigma.len()];
        let mut count = 0;
        for start in 0..self.sigma.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while label[x] == usize::MAX {
                label[x] = count;
                x = self.sigma[x];
            }
            count += 1;
        }
        self.vertex_of = label;
        self.num_vertices = count;
    }
}

/// Builds the prefix-map of `w`: first the tree of `w_a^+`, then one more
/// tour of it inserting heads for the letters `b` and tails for the
/// letters `b̄`, paired letters connected.
pub fn build_prefix_map(w: &PrefixShuffle) -> PrefixMap {
    // Phase 1: the tree of w_a^+, its open edges being the active path.
    let mut pm = PrefixMap {
        sigma: vec![0],
        alpha: vec![0],
        is_head: vec![true],
        in_tree: vec![false],
        active: vec![false],
        dangling: Vec::new(),
        rooting_heads: vec![0],
        vertex_of: Vec::new(),
        num_vertices: 0,
    };
    let mut pos = 0;
    let mut open_edges = Vec::new();
    for &letter in w.word().subword_a().letters() {
        match letter {
            Letter::AOpen => {
                let x = pm.sigma.len();
                let y = x + 1;
                pm.sigma.push(pm.sigma[pos]);
                pm.sigma[pos] = x;
                pm.sigma.push(y);
                pm.alpha.push(y);
                pm.alpha.push(x);
                pm.is_head.push(false);
                pm.is_head.push(true);
                pm.in_tree.push(true);
                pm.in_tree.push(true);
                pm.active.push(false);
                pm.active.push(false);
                open_edges.push(x);
                pos = y;
            }
            Letter::AClose => {
                let x = open_edges.pop().expect("prefix-shuffle a-balance");
                pos = x;
            }
            _ => unreachable!("subword_a contains only a-family letters"),
        }
    }
    for &x in &open_edges {
        pm.active[x] = true;
        pm.active[pm.alpha[x]] = true;
        pm.rooting_heads.push(pm.alpha[x]);
    }

    // Phase 2: re-tour the tree, reading the full word and inserting the
    // b-family half-edges at the current corner.
    let mut pos = 0;
    let mut open_heads = Vec::new();
    for &letter in w.letters() {
        match letter {
            Letter::AOpen | Letter::AClose => {
                let h = pm.sigma[pos];
                debug_assert!(pm.in_tree[h]);
                debug_assert_eq!(pm.is_head[h], letter == Letter::AClose);
                pos = pm.alpha[h];
            }
            Letter::BOpen => {
                let z = pm.sigma.len();
                pm.sigma.push(pm.sigma[pos]);
                pm.sigma[pos] = z;
                pm.alpha.push(z);
                pm.is_head.push(true);
                pm.in_tree.push(false);
                pm.active.push(false);
                open_heads.push(z);
                pos = z;
            }
            Letter::BClose => {
                let z = pm.sigma.len();
                pm.sigma.push(pm.sigma[pos]);
                pm.sigma[pos] = z;
                let head = open_heads.pop().expect("prefix-shuffle b-balance");
                pm.alpha.push(head);
                pm.alpha[head] = z;
                pm.is_head.push(false);
                pm.in_tree.push(false);
                pm.active.push(false);
                pos = z;
            }
        }
    }
    pm.dangling = open_heads;
    pm.recompute_vertices();

    debug_assert_eq!(pm.dangling.len(), w.open_b());
    debug_assert_eq!(pm.active_edge_count(), w.open_a());
    pm
}

/// Applies the one-letter evolution rule to `pm` directly: add an active
/// edge, add a dangling head, inactivate the last active edge, or connect
/// the last dangling head — always in the corner at the left of the last
/// rooting head.
pub fn apply_evolution_rule(pm: &PrefixMap, letter: Letter) -> PrefixMap {
    let mut next = pm.clone();
    let corner = pm.growth_corner();
    match letter {
        Letter::AOpen => {
            let x = next.sigma.len();
            let y = x + 1;
            next.sigma.push(next.sigma[corner]);
            next.sigma[corner] = x;
            next.sigma.push(y);
            next.alpha.push(y);
            next.alpha.push(x);
            next.is_head.push(false);
            next.is_head.push(true);
            next.in_tree.push(true);
            next.in_tree.push(true);
            next.active.push(true);
            next.active.push(true);
            next.rooting_heads.push(y);
        }
        Letter::BOpen => {
            let z = next.sigma.len();
            next.sigma.push(next.sigma[corner]);
            next.sigma[corner] = z;
            next.alpha.push(z);
            next.is_head.push(true);
            next.in_tree.push(false);
            next.active.push(false);
            next.dangling.push(z);
        }
        Letter::AClose => {
            let head = next.rooting_heads.pop().expect("an active edge to close");
            assert_ne!(head, 0, "ā without an open a");
            next.active[head] = false;
            let tail = next.alpha[head];
            next.active[tail] = false;
        }
        Letter::BClose => {
            let z = next.sigma.len();
            next.sigma.push(next.sigma[corner]);
            next.sigma[corner] = z;
            let head = next.dangling.pop().expect("a dangling head to connect");
            next.alpha.push(head);
            next.alpha[head] = z;
            next.is_head.push(false);
            next.in_tree.push(false);
            next.active.push(false);
        }
    }
    next.recompute_vertices();
    next
}

/// Black-box check of the prefix-map evolution lemma: building `wα` from
/// scratch agrees with transforming `M_w` by the one-letter rule.
pub fn prefix_map_evolution_check(w: &PrefixShuffle, letter: Letter) -> bool {
    match w.extended(letter) {
        Some(next) => {
            build_prefix_map(&next).canonical_form()
                == apply_evolution_rule(&build_prefix_map(w), letter).canonical_form()
        }
        // Not a prefix-shuffle: nothing to check.
        None => true,
    }
}

/// The prefix-forest `F_w`: delete the tails of active edges, then explode.
/// One tree per dangling head and one per rooting head.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefixForest {
    /// Trees rooted on the dangling heads `h_1..h_k`, in order.
    pub dangling_trees: Vec<PlaneTree>,
    /// Trees rooted on the rooting heads `h_1'..h_l'`, in order (the root
    /// half-edge first).
    pub rooting_trees: Vec<PlaneTree>,
}

/// Explodes the prefix-map without the active tails.
pub fn prefix_forest(pm: &PrefixMap) -> PrefixForest {
    let deleted: Vec<bool> = (0..pm.half_edge_count())
        .map(|h| pm.active[h] && !pm.is_head[h])
        .collect();
    let mut covered = 0;
    let mut grow = |root_head: HalfEdge| {
        let t = explode_at(pm, root_head, &deleted);
        covered += t.vertex_count();
        t
    };
    let dangling_trees = pm.dangling.iter().map(|&h| grow(h)).collect();
    let rooting_trees = pm.rooting_heads.iter().map(|&h| grow(h)).collect();
    // Every head anchors exactly one exploded vertex of the forest.
    debug_assert_eq!(covered, pm.is_head.iter().filter(|&&b| b).count());
    PrefixForest {
        dangling_trees,
        rooting_trees,
    }
}

/// The exploded vertex anchored at head `h`, skipping deleted tails.
fn explode_at(pm: &PrefixMap, h: HalfEdge, deleted: &[bool]) -> PlaneTree {
    let mut run = Vec::new();
    let mut x = pm.vertex_prev(h);
    while !pm.is_head[x] {
        if !deleted[x] {
            run.push(x);
        }
        x = pm.vertex_prev(x);
    }
    run.reverse();
    let children = run
        .into_iter()
        .map(|t| explode_at(pm, pm.alpha[t], deleted))
        .collect();
    PlaneTree::new(children)
}

/// The proposition tying `λ0` to prefix-forests: `λ0(w)` is the
/// tree-sequence `u t_1 u … u t_k u t_l' v … v t_1' v`.
pub fn check_prop_lambda0(w: &PrefixShuffle) -> bool {
    let forest = prefix_forest(&build_prefix_map(w));
    lambda0(w) == TreeSequence::from_forest(&forest.dangling_trees, &forest.rooting_trees)
}

/// Vertex color of a partition-tree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Color {
    /// Faces of `M★_w` coming from faces of `M_w`, plus `v_0..v_k`.
    White,
    /// Faces coming from vertices of `M_w`.
    Black,
}

/// The partition-tree `P_w`: a plane tree with bicolored vertices and
/// activity marks. Vertices are indexed in first-visit order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionTree {
    pub tree: PlaneTree,
    pub colors: Vec<Color>,
    pub active: Vec<bool>,
    /// Active white vertices `v_0, v_1, …, v_k`, in order.
    pub white_order: Vec<usize>,
    /// Active black vertices in rooting-vertex order, the root-vertex
    /// first.
    pub black_order: Vec<usize>,
}

/// Identities of the partition-tree vertices during construction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum PNode {
    /// The exterior vertex in the root-face.
    V0,
    /// The extra root-face vertex of dangling head `h_j` (1-based).
    Dangling(usize),
    /// The vertex of a non-root face of `M_w`.
    Face(usize),
    /// The vertex of a (black) cell, one per vertex of `M_w`.
    Black(usize),
}

/// Builds the partition-tree of `w` from the faces of the exploded map:
/// one vertex per face of `M★_w` plus one per dangling head, with one
/// edge per head of `M_w` (the dual of the permeable edge at that head's
/// first corner).
pub fn partition_tree(w: &PrefixShuffle) -> PartitionTree {
    let pm = build_prefix_map(w);
    let h_count = pm.half_edge_count();

    // Faces of M_w: orbits of x ↦ σ(α(x)); dangling heads are fixed by α.
    let mut face_of = vec![usize::MAX; h_count];
    let mut face_count = 0;
    for start in 0..h_count {
        if face_of[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while face_of[x] == usize::MAX {
            face_of[x] = face_count;
            x = pm.sigma[pm.alpha[x]];
        }
        face_count += 1;
    }
    let root_face = face_of[0];

    // The border of the root-face, walked from the root.
    let mut root_walk = Vec::new();
    let mut rf_index = vec![usize::MAX; h_count];
    {
        let mut x = 0;
        loop {
            rf_index[x] = root_walk.len();
            root_walk.push(x);
            x = pm.sigma[pm.alpha[x]];
            if x == 0 {
                break;
            }
        }
    }

    // Dangling heads around the root-face appear in their tour order.
    let rf_dangling: Vec<HalfEdge> = root_walk
        .iter()
        .copied()
        .filter(|&x| pm.is_dangling(x))
        .collect();
    debug_assert_eq!(rf_dangling, pm.dangling, "root-face order equals tour order");
    let dangling_index_of: BTreeMap<HalfEdge, usize> = pm
        .dangling
        .iter()
        .enumerate()
        .map(|(i, &h)| (h, i + 1))
        .collect();

    // The white vertex owning the corner at the right of head `h`: the
    // corner lies in face_of(α(h)); inside the root-face it belongs to the
    // last dangling head walked before it, or to v0.
    let white_at_corner = |h: HalfEdge| -> PNode {
        let f = face_of[pm.edge_pair(h)];
        if f != root_face {
            return PNode::Face(f);
        }
        let corner_pos = rf_index[pm.edge_pair(h)];
        let mut owner = PNode::V0;
        for (j, &d) in pm.dangling.iter().enumerate() {
            if rf_index[d] <= corner_pos {
                owner = PNode::Dangling(j + 1);
            }
        }
        owner
    };

    // Anchor head of each node: the head whose dual edge goes up to the
    // father. Faces are anchored on the chord head first entering them.
    let mut face_anchor: BTreeMap<usize, HalfEdge> = BTreeMap::new();
    for x in 0..h_count {
        if pm.is_head(x) && !pm.is_tree_half(x) && !pm.is_dangling(x) && x != 0 {
            let f = face_of[pm.sigma[x]];
            debug_assert_ne!(f, root_face, "chords enter non-root faces");
            let previous = face_anchor.insert(f, x);
            debug_assert!(previous.is_none(), "one entering head per face");
        }
    }

    // Walk order inside each non-root face, for sorting children.
    let mut face_walk_pos: Vec<usize> = vec![0; h_count];
    let mut face_members: BTreeMap<usize, Vec<HalfEdge>> = BTreeMap::new();
    for (x, &f) in face_of.iter().enumerate() {
        face_members.entry(f).or_default().push(x);
    }
    for (&f, members) in &face_members {
        if f == root_face {
            continue;
        }
        let mut x = members[0];
        let mut pos = 0;
        loop {
            face_walk_pos[x] = pos;
            pos += 1;
            x = pm.sigma[pm.alpha[x]];
            if x == members[0] {
                break;
            }
        }
    }

    // Rotation position of each head around its vertex, counted from the
    // vertex's tree head (or the root).
    let mut head_rotation_pos = vec![0usize; h_count];
    let mut tree_head_of_vertex = vec![usize::MAX; pm.vertex_count()];
    for x in 0..h_count {
        if (pm.is_tree_half(x) && pm.is_head(x)) || x == 0 {
            debug_assert_eq!(tree_head_of_vertex[pm.vertex_of(x)], usize::MAX);
            tree_head_of_vertex[pm.vertex_of(x)] = x;
        }
    }
    for &anchor in &tree_head_of_vertex {
        debug_assert_ne!(anchor, usize::MAX, "every vertex has a tree head");
        let mut x = anchor;
        let mut pos = 0;
        loop {
            head_rotation_pos[x] = pos;
            pos += 1;
            x = pm.sigma[x];
            if x == anchor {
                break;
            }
        }
    }

    // One dual edge per head: (parent, sort key at the parent, child).
    let mut children: BTreeMap<PNode, Vec<(usize, PNode)>> = BTreeMap::new();
    for x in 0..h_count {
        if !pm.is_head(x) {
            continue;
        }
        let (parent, key, child) = if pm.is_tree_half(x) || x == 0 {
            // Upward edge of a black vertex. Around a white vertex the dual
            // rotation runs against the face walk, so corners are keyed in
            // decreasing border position; the root corner, at position 0,
            // then comes last of the root-face children.
            let parent = white_at_corner(x);
            let key = match parent {
                PNode::Face(f) => {
                    let anchor = face_walk_pos[pm.edge_pair(face_anchor[&f])];
                    let len = face_members[&f].len();
                    (anchor + len - face_walk_pos[pm.edge_pair(x)]) % len
                }
                _ => usize::MAX - rf_index[pm.edge_pair(x)],
            };
            (parent, key, PNode::Black(pm.vertex_of(x)))
        } else if pm.is_dangling(x) {
            let parent = PNode::Black(pm.vertex_of(x));
            (parent, head_rotation_pos[x], PNode::Dangling(dangling_index_of[&x]))
        } else {
            let parent = PNode::Black(pm.vertex_of(x));
            (parent, head_rotation_pos[x], PNode::Face(face_of[pm.sigma[x]]))
        };
        children.entry(parent).or_default().push((key, child));
    }
    for list in children.values_mut() {
        list.sort_unstable();
    }

    // Assemble the tree from v0, assigning first-visit indices.
    let rooting_vertices = pm.rooting_vertices();
    let mut colors = Vec::new();
    let mut active = Vec::new();
    let mut white_slots = vec![usize::MAX; pm.dangling.len() + 1];
    let mut black_slots = vec![usize::MAX; rooting_vertices.len()];
    let tree = assemble(
        PNode::V0,
        &children,
        &rooting_vertices,
        &mut colors,
        &mut active,
        &mut white_slots,
        &mut black_slots,
    );
    debug_assert_eq!(colors.len(), pm.is_head.iter().filter(|&&b| b).count() + 1);
    debug_assert!(white_slots.iter().all(|&s| s != usize::MAX));
    debug_assert!(black_slots.iter().all(|&s| s != usize::MAX));

    PartitionTree {
        tree,
        colors,
        active,
        white_order: white_slots,
        black_order: black_slots,
    }
}

fn assemble(
    node: PNode,
    children: &BTreeMap<PNode, Vec<(usize, PNode)>>,
    rooting_vertices: &[usize],
    colors: &mut Vec<Color>,
    active: &mut Vec<bool>,
    white_slots: &mut [usize],
    black_slots: &mut [usize],
) -> PlaneTree {
    let index = colors.len();
    match node {
        PNode::V0 => {
            colors.push(Color::White);
            active.push(true);
            white_slots[0] = index;
        }
        PNode::Dangling(j) => {
            colors.push(Color::White);
            active.push(true);
            white_slots[j] = index;
        }
        PNode::Face(_) => {
            colors.push(Color::White);
            active.push(false);
        }
        PNode::Black(v) => {
            colors.push(Color::Black);
            let slot = rooting_vertices.iter().position(|&r| r == v);
            active.push(slot.is_some());
            if let Some(s) = slot {
                black_slots[s] = index;
            }
        }
    }
    let kids = children.get(&node).map(Vec::as_slice).unwrap_or(&[]);
    let subtrees = kids
        .iter()
        .map(|&(_, child)| {
            assemble(
                child,
                children,
                rooting_vertices,
                colors,
                active,
                white_slots,
                black_slots,
            )
        })
        .collect();
    PlaneTree::new(subtrees)
}

/// The tree `θ∘λ1(w)` carried into the partition-tree attribute space:
/// left vertices as white, right vertices as black, activities from the
/// leaves, white order by leaf order and black order reversed.
pub fn theta_lambda1_tree(w: &PrefixShuffle) -> PartitionTree {
    let b = lambda1(w);
    let leaves = b.leaves();
    let (tree, tags) = theta_with_leaves(&b);
    let colors: Vec<Color> = tags
        .iter()
        .map(|&l| match leaves[l].side {
            Side::Left => Color::White,
            Side::Right => Color::Black,
        })
        .collect();
    let active: Vec<bool> = tags.iter().map(|&l| leaves[l].active).collect();

    let mut whites: Vec<(usize, usize)> = Vec::new();
    let mut blacks: Vec<(usize, usize)> = Vec::new();
    for (i, &l) in tags.iter().enumerate() {
        if !leaves[l].active {
            continue;
        }
        match leaves[l].side {
            Side::Left => whites.push((l, i)),
            Side::Right => blacks.push((l, i)),
        }
    }
    whites.sort_unstable();
    blacks.sort_unstable();
    blacks.reverse();
    PartitionTree {
        tree,
        colors,
        active,
        white_order: whites.into_iter().map(|(_, i)| i).collect(),
        black_order: blacks.into_iter().map(|(_, i)| i).collect(),
    }
}

/// The proposition tying `λ1` to partition-trees: `P_w = θ∘λ1(w)`,
/// including colors against sides, activities, and the equal/inverse
/// order correspondence.
pub fn check_prop_lambda1(w: &PrefixShuffle) -> bool {
    partition_tree(w) == theta_lambda1_tree(w)
}

/// Attributed tree used to apply the evolution rules structurally.
#[derive(Clone, PartialEq, Eq, Debug)]
struct AttrTree {
    white: bool,
    active: bool,
    white_rank: Option<usize>,
    black_rank: Option<usize>,
    children: Vec<AttrTree>,
}

fn to_attr(p: &PartitionTree) -> AttrTree {
    fn rec(p: &PartitionTree, t: &PlaneTree, index: &mut usize) -> AttrTree {
        let i = *index;
        *index += 1;
        let children = t.children().iter().map(|c| rec(p, c, index)).collect();
        AttrTree {
            white: p.colors[i] == Color::White,
            active: p.active[i],
            white_rank: p.white_order.iter().position(|&v| v == i),
            black_rank: p.black_order.iter().position(|&v| v == i),
            children,
        }
    }
    let mut index = 0;
    rec(p, &p.tree, &mut index)
}

fn from_attr(a: &AttrTree) -> PartitionTree {
    fn rec(
        a: &AttrTree,
        colors: &mut Vec<Color>,
        active: &mut Vec<bool>,
        whites: &mut Vec<(usize, usize)>,
        blacks: &mut Vec<(usize, usize)>,
    ) -> PlaneTree {
        let i = colors.len();
        colors.push(if a.white { Color::White } else { Color::Black });
        active.push(a.active);
        if let Some(r) = a.white_rank {
            whites.push((r, i));
        }
        if let Some(r) = a.black_rank {
            blacks.push((r, i));
        }
        PlaneTree::new(a.children.iter().map(|c| rec(c, colors, active, whites, blacks)).collect())
    }
    let mut colors = Vec::new();
    let mut active = Vec::new();
    let mut whites = Vec::new();
    let mut blacks = Vec::new();
    let tree = rec(a, &mut colors, &mut active, &mut whites, &mut blacks);
    whites.sort_unstable();
    blacks.sort_unstable();
    PartitionTree {
        tree,
        colors,
        active,
        white_order: whites.into_iter().map(|(_, i)| i).collect(),
        black_order: blacks.into_iter().map(|(_, i)| i).collect(),
    }
}

/// One evolution step on a partition-tree (equivalently on `θ∘λ1`):
/// `a` adds a black leaf as the leftmost son of the last active white;
/// `b` adds a white leaf as the rightmost son of the last active black;
/// `ā` and `b̄` inactivate the last active black resp. white vertex.
fn evolve(p: &PartitionTree, letter: Letter) -> Option<PartitionTree> {
    let mut attr = to_attr(p);
    let max_white = p.white_order.len().checked_sub(1)?;
    let max_black = p.black_order.len().checked_sub(1)?;
    let changed = match letter {
        Letter::AOpen => with_rank(&mut attr, false, max_white, &mut |v| {
            v.children.insert(
                0,
                AttrTree {
                    white: false,
                    active: true,
                    white_rank: None,
                    black_rank: Some(max_black + 1),
                    children: Vec::new(),
                },
            );
        }),
        Letter::BOpen => with_rank(&mut attr, true, max_black, &mut |v| {
            v.children.push(AttrTree {
                white: true,
                active: true,
                white_rank: Some(max_white + 1),
                black_rank: None,
                children: Vec::new(),
            });
        }),
        Letter::AClose => {
            if max_black == 0 {
                return None;
            }
            with_rank(&mut attr, true, max_black, &mut |v| {
                v.active = false;
                v.black_rank = None;
            })
        }
        Letter::BClose => {
            if max_white == 0 {
                return None;
            }
            with_rank(&mut attr, false, max_white, &mut |v| {
                v.active = false;
                v.white_rank = None;
            })
        }
    };
    changed.then(|| from_attr(&attr))
}

/// Finds the vertex with the given white rank (`black` false) or black
/// rank (`black` true) and applies `f`; reports whether it was found.
fn with_rank(t: &mut AttrTree, black: bool, rank: usize, f: &mut dyn FnMut(&mut AttrTree)) -> bool {
    let matches = if black {
        t.black_rank == Some(rank)
    } else {
        t.white_rank == Some(rank)
    };
    if matches {
        f(t);
        return true;
    }
    for c in &mut t.children {
        if with_rank(c, black, rank, f) {
            return true;
        }
    }
    false
}

/// Black-box check of the partition-tree evolution lemma.
pub fn partition_evolution_check(w: &PrefixShuffle, letter: Letter) -> bool {
    match w.extended(letter) {
        Some(next) => evolve(&partition_tree(w), letter)
            .is_some_and(|expected| expected == partition_tree(&next)),
        None => true,
    }
}

/// Black-box check of the `θ∘λ1` evolution lemma.
pub fn theta_lambda1_evolution_check(w: &PrefixShuffle, letter: Letter) -> bool {
    match w.extended(letter) {
        Some(next) => evolve(&theta_lambda1_tree(w), letter)
            .is_some_and(|expected| expected == theta_lambda1_tree(&next)),
        None => true,
    }
}

/// For a complete shuffle, the prefix-map is `δ(Ξ⁻¹(w))`.
pub fn complete_prefix_map_matches_delta(w: &ParenShuffle) -> bool {
    let pm = build_prefix_map(w.as_prefix());
    match pm.to_oriented_map() {
        Some(om) => om.canonical_form() == delta(&xi_inv(w)).canonical_form(),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::catalan::{theta, upsilon};
    use crate::cdv::lambda0_prime;
    use crate::explosion::big_phi;
    use crate::words::{enumerate_paren_shuffles, enumerate_prefix_shuffles};

    fn prefix(s: &str) -> PrefixShuffle {
        s.parse().unwrap()
    }

    #[test]
    fn empty_prefix_map_is_trivial() {
        let pm = build_prefix_map(&PrefixShuffle::empty());
        assert_eq!(pm.half_edge_count(), 1);
        assert_eq!(pm.dangling_heads().len(), 0);
        assert_eq!(pm.active_edge_count(), 0);
        assert!(pm.is_complete());
    }

    #[test]
    fn figure_prefix_map_counts() {
        // The eleven-letter word b a b ā a b̄ a b̄ ā a b: one unmatched b,
        // two unmatched a.
        let pm = build_prefix_map(&prefix("babAaBaBAab"));
        assert_eq!(pm.dangling_heads().len(), 1);
        assert_eq!(pm.active_edge_count(), 2);
        assert_eq!(pm.vertex_count(), 5);
        // Active edges form the path from the root to the last rooting
        // vertex.
        let rooting = pm.rooting_vertices();
        assert_eq!(rooting.len(), 3);
        assert_eq!(rooting[0], pm.vertex_of(0));
        // Its forest: one tree per dangling head plus one per rooting head.
        let forest = prefix_forest(&pm);
        assert_eq!(forest.dangling_trees.len(), 1);
        assert_eq!(forest.rooting_trees.len(), 3);
    }

    #[test]
    fn complete_prefix_maps_match_delta() {
        for n in 0..=4 {
            for w in enumerate_paren_shuffles(n) {
                assert!(complete_prefix_map_matches_delta(&w), "on {w}");
            }
        }
    }

    #[test]
    fn prefix_map_evolution_exhaustive() {
        for len in 0..=6 {
            for w in enumerate_prefix_shuffles(len) {
                for letter in Letter::ALL {
                    assert!(prefix_map_evolution_check(&w, letter), "{w} + {letter:?}");
                }
            }
        }
    }

    #[test]
    fn forest_of_empty_word_is_a_single_trivial_tree() {
        let forest = prefix_forest(&build_prefix_map(&PrefixShuffle::empty()));
        assert_eq!(forest.dangling_trees.len(), 0);
        assert_eq!(forest.rooting_trees, alloc::vec![PlaneTree::leaf()]);
    }

    #[test]
    fn forest_of_complete_word_is_phi0() {
        for n in 0..=4 {
            for w in enumerate_paren_shuffles(n) {
                let forest = prefix_forest(&build_prefix_map(w.as_prefix()));
                assert!(forest.dangling_trees.is_empty());
                assert_eq!(forest.rooting_trees.len(), 1);
                let (t, _) = big_phi(&xi_inv(&w));
                assert_eq!(forest.rooting_trees[0], t, "on {w}");
            }
        }
    }

    #[test]
    fn prop_lambda0_exhaustive() {
        for len in 0..=8 {
            for w in enumerate_prefix_shuffles(len) {
                assert!(check_prop_lambda0(&w), "on {w}");
            }
        }
    }

    #[test]
    fn prop_lambda0_on_figure_word() {
        assert!(check_prop_lambda0(&prefix("baAaBA")));
        let forest = prefix_forest(&build_prefix_map(&prefix("baAaBA")));
        assert_eq!(
            forest.rooting_trees[0],
            lambda0_prime(&"baAaBA".parse().unwrap())
        );
    }

    #[test]
    fn partition_tree_of_empty_word() {
        // One edge: an active white root-vertex and an active black vertex.
        let p = partition_tree(&PrefixShuffle::empty());
        assert_eq!(p.tree.to_word().to_string(), "aA");
        assert_eq!(p.colors, alloc::vec![Color::White, Color::Black]);
        assert_eq!(p.active, alloc::vec![true, true]);
        assert_eq!(p.white_order, alloc::vec![0]);
        assert_eq!(p.black_order, alloc::vec![1]);
    }

    #[test]
    fn partition_tree_matches_theta_lambda1_exhaustive() {
        for len in 0..=8 {
            for w in enumerate_prefix_shuffles(len) {
                assert!(check_prop_lambda1(&w), "on {w}");
            }
        }
    }

    #[test]
    fn partition_tree_of_figure_word() {
        // P_w for the eight-letter word with three unmatched letters.
        let w = prefix("baaBbbAa");
        let p = partition_tree(&w);
        assert_eq!(p.white_order.len(), 3, "v0 plus two dangling heads");
        assert_eq!(p.black_order.len(), 3, "root plus two active edges");
        assert_eq!(p.tree.vertex_count(), 8);
        assert_eq!(p, theta_lambda1_tree(&w));
    }

    #[test]
    fn partition_tree_of_complete_word_is_upsilon_of_phi1() {
        for n in 0..=4 {
            for w in enumerate_paren_shuffles(n) {
                let p = partition_tree(w.as_prefix());
                let (_, partition) = big_phi(&xi_inv(&w));
                assert_eq!(p.tree, upsilon(&partition), "on {w}");
                // Finalization: only the exterior white vertex and the
                // root-vertex black stay active.
                assert_eq!(p.white_order.len(), 1);
                assert_eq!(p.black_order.len(), 1);
            }
        }
    }

    #[test]
    fn evolution_lemmas_exhaustive() {
        for len in 0..=6 {
            for w in enumerate_prefix_shuffles(len) {
                for letter in Letter::ALL {
                    assert!(partition_evolution_check(&w, letter), "P: {w} + {letter:?}");
                    assert!(
                        theta_lambda1_evolution_check(&w, letter),
                        "θλ1: {w} + {letter:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn figure_evolution_sequence() {
        // The partition-tree evolution from baab̄b onward, one letter at a
        // time.
        let base = "baaBb";
        let extension = "bAaB";
        let mut w = prefix(base);
        for c in extension.chars() {
            let letter = Letter::from_ascii(c).unwrap();
            assert!(partition_evolution_check(&w, letter), "{w} + {c}");
            w = w.extended(letter).unwrap();
        }
        assert_eq!(w.to_string(), "baaBbbAaB");
    }

    #[test]
    fn theta_side_of_empty_word() {
        let p = theta_lambda1_tree(&PrefixShuffle::empty());
        assert_eq!(p.tree, theta(&crate::catalan::BinaryTree::b1()));
        assert_eq!(p.colors, alloc::vec![Color::White, Color::Black]);
        assert_eq!(p.active, alloc::vec![true, true]);
    }
}
