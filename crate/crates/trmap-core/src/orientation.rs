//! Tree-orientations: the mapping `δ` from spanning trees to orientations,
//! the recovery procedure `γ`, and positive-cycle detection.
//!
//! An orientation is a tree-orientation when every vertex is reachable
//! from the root by a directed path and no directed simple cycle has the
//! root in its exterior (right) region.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::map::{HalfEdge, OrientedMap, TourEvent, TreeRootedMap};

/// Error raised when `γ` is fed an orientation that is not a
/// tree-orientation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NonTreeOrientation;

impl fmt::Display for NonTreeOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "orientation is not a tree-orientation")
    }
}

impl core::error::Error for NonTreeOrientation {}

/// `δ`: orient the tree edges from the root to the leaves and every chord
/// so that its head precedes its tail around the tree. The root is a head.
pub fn delta(mt: &TreeRootedMap) -> OrientedMap {
    let m = mt.map();
    let mut is_head = vec![false; m.half_edge_count()];
    is_head[m.root()] = true;
    let mut done = vec![false; m.half_edge_count()];
    for event in mt.tour() {
        let h = event.half_edge();
        let first = !done[m.edge_pair(h)];
        done[h] = true;
        if first {
            match event {
                // First visit of a tree edge goes down: the far half is the
                // child side, hence the head.
                TourEvent::Follow(h) => is_head[m.edge_pair(h)] = true,
                // A chord's head is the half crossed first.
                TourEvent::Cross(h) => is_head[h] = true,
            }
        }
    }
    OrientedMap::new(mt.map().clone(), is_head).expect("δ marks one head per edge")
}

/// Procedure `γ`: tour the growing submap from the root; when the tail of
/// an edge is encountered and its head has not been encountered yet, add
/// the edge to the tree.
///
/// On tree-orientations this recovers the unique spanning tree with
/// `δ(γ(om)) = om`. Any violation — the submap stops being a tree, the
/// walk overruns its step budget, or the result does not span — reports
/// [`NonTreeOrientation`].
pub fn gamma(om: &OrientedMap) -> Result<TreeRootedMap, NonTreeOrientation> {
    let m = om.map();
    let h = m.half_edge_count();
    let mut in_tree = vec![false; h];
    let mut encountered = vec![false; h];
    let mut vertex_in_tree = vec![false; m.vertex_count()];
    vertex_in_tree[m.root_vertex()] = true;

    let mut pos = m.root();
    let mut steps = 0;
    loop {
        steps += 1;
        if steps > 2 * h {
            return Err(NonTreeOrientation);
        }
        let x = m.vertex_next(pos);
        if x == m.root() {
            break;
        }
        if encountered[x] {
            // The same border would be followed twice: the walk is stuck in
            // a cycle of the would-be tree.
            return Err(NonTreeOrientation);
        }
        encountered[x] = true;
        let mate = m.edge_pair(x);
        if !om.is_head(x) && !encountered[mate] && !in_tree[x] {
            let end = m.vertex_of(mate);
            if vertex_in_tree[end] {
                // Adding the edge would close a cycle: the submap must stay
                // a tree at every stage.
                return Err(NonTreeOrientation);
            }
            vertex_in_tree[end] = true;
            in_tree[x] = true;
            in_tree[mate] = true;
        }
        pos = if in_tree[x] { mate } else { x };
    }

    if vertex_in_tree.iter().any(|&v| !v) {
        return Err(NonTreeOrientation);
    }
    TreeRootedMap::new(m.clone(), in_tree).map_err(|_| NonTreeOrientation)
}

/// A directed simple cycle, listed as its tail half-edges in traversal
/// order.
pub type DirectedCycle = Vec<HalfEdge>;

/// All directed simple cycles whose interior (left) region does not
/// contain the root, i.e. the positive cycles.
///
/// Cycles are enumerated by brute force, each anchored at its minimum
/// vertex; interiority is decided by a combinatorial flood fill blocked at
/// the cycle.
pub fn positive_cycles(om: &OrientedMap) -> Vec<DirectedCycle> {
    simple_directed_cycles(om)
        .into_iter()
        .filter(|cycle| !interior_half_edges(om, cycle).contains(&om.map().root()))
        .collect()
}

/// Is `om` a tree-orientation: all vertices reachable from the root by
/// directed paths, and no positive cycle?
pub fn is_tree_orientation(om: &OrientedMap) -> bool {
    all_reachable(om) && positive_cycles(om).is_empty()
}

/// Brute-force oracle: a tree-orientation is exactly an orientation of the
/// form `δ(M_T)` for some spanning tree `T`. Kept as an independent
/// implementation to cross-validate [`is_tree_orientation`].
pub fn tree_orientation_oracle(om: &OrientedMap) -> bool {
    crate::map::spanning_trees(om.map())
        .iter()
        .any(|mt| delta(mt).head_flags() == om.head_flags())
}

fn all_reachable(om: &OrientedMap) -> bool {
    let m = om.map();
    let mut seen = vec![false; m.vertex_count()];
    let mut stack = vec![m.root_vertex()];
    seen[m.root_vertex()] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for (h1, h2) in m.edges() {
            let (tail, head) = if om.is_head(h1) { (h2, h1) } else { (h1, h2) };
            if m.vertex_of(tail) == v && !seen[m.vertex_of(head)] {
                seen[m.vertex_of(head)] = true;
                reached += 1;
                stack.push(m.vertex_of(head));
            }
        }
    }
    reached == m.vertex_count()
}

/// All directed simple cycles (distinct vertices), each anchored at its
/// minimum vertex, as sequences of tail half-edges.
fn simple_directed_cycles(om: &OrientedMap) -> Vec<DirectedCycle> {
    let m = om.map();
    // Outgoing tails per vertex.
    let mut tails_at = vec![Vec::new(); m.vertex_count()];
    for (h1, h2) in m.edges() {
        let tail = if om.is_head(h1) { h2 } else { h1 };
        tails_at[m.vertex_of(tail)].push(tail);
    }

    let mut cycles = Vec::new();
    for start in 0..m.vertex_count() {
        let mut path = Vec::new();
        let mut on_path = vec![false; m.vertex_count()];
        dfs(om, &tails_at, start, start, &mut path, &mut on_path, &mut cycles);
    }
    return cycles;

    fn dfs(
        om: &OrientedMap,
        tails_at: &[Vec<HalfEdge>],
        start: usize,
        v: usize,
        path: &mut Vec<HalfEdge>,
        on_path: &mut [bool],
        cycles: &mut Vec<DirectedCycle>,
    ) {
        on_path[v] = true;
        for &t in &tails_at[v] {
            let w = om.map().vertex_of(om.map().edge_pair(t));
            if w == start {
                path.push(t);
                cycles.push(path.clone());
                path.pop();
            } else if w > start && !on_path[w] {
                path.push(t);
                dfs(om, tails_at, start, w, path, on_path, cycles);
                path.pop();
            }
        }
        on_path[v] = false;
    }
}

/// The half-edges strictly inside (left of) a directed simple cycle:
/// flood fill over vertex rotations and edge pairs, blocked at the cycle.
fn interior_half_edges(om: &OrientedMap, cycle: &[HalfEdge]) -> alloc::collections::BTreeSet<HalfEdge> {
    let m = om.map();
    let h = m.half_edge_count();
    let mut on_cycle = vec![false; h];
    for &t in cycle {
        on_cycle[t] = true;
        on_cycle[m.edge_pair(t)] = true;
    }

    // Seeds: at each cycle vertex, the rotation arc from the outgoing tail
    // (exclusive) to the incoming head (exclusive) lies on the left.
    let mut interior = alloc::collections::BTreeSet::new();
    let k = cycle.len();
    for i in 0..k {
        let out_tail = cycle[i];
        let in_head = m.edge_pair(cycle[(i + k - 1) % k]);
        debug_assert_eq!(m.vertex_of(out_tail), m.vertex_of(in_head));
        let mut x = m.vertex_next(out_tail);
        while x != in_head {
            debug_assert!(!on_cycle[x], "simple cycles meet a vertex in two half-edges");
            interior.insert(x);
            x = m.vertex_next(x);
        }
    }

    // Closure: same-region moves along edges and within rotation arcs.
    let mut stack: Vec<HalfEdge> = interior.iter().copied().collect();
    while let Some(x) = stack.pop() {
        let mut neighbors = vec![m.edge_pair(x)];
        let next = m.vertex_next(x);
        if !on_cycle[next] {
            neighbors.push(next);
        }
        let prev = m.vertex_prev(x);
        if !on_cycle[prev] {
            neighbors.push(prev);
        }
        for y in neighbors {
            if !on_cycle[y] && interior.insert(y) {
                stack.push(y);
            }
        }
    }
    interior
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{link_map, loop_map, orientations, spanning_trees, OrientedMap};
    use crate::walsh_lehman::{enumerate_maps, enumerate_tree_rooted_maps, xi_inv};

    #[test]
    fn delta_on_link_and_loop() {
        let link = TreeRootedMap::new(link_map(), vec![false, true, true]).unwrap();
        let o = delta(&link);
        // The edge points from the root-vertex to the other vertex.
        assert!(o.is_head(2) && !o.is_head(1));

        let lp = TreeRootedMap::new(loop_map(), vec![false, false, false]).unwrap();
        let o = delta(&lp);
        // The head is the loop half met first in the tour.
        assert!(o.is_head(1) && !o.is_head(2));
    }

    #[test]
    fn reversed_loop_has_a_positive_cycle() {
        let om = OrientedMap::new(loop_map(), vec![true, false, true]).unwrap();
        assert_eq!(positive_cycles(&om).len(), 1);
        assert!(!is_tree_orientation(&om));

        let delta_image = OrientedMap::new(loop_map(), vec![true, true, false]).unwrap();
        assert!(positive_cycles(&delta_image).is_empty());
        assert!(is_tree_orientation(&delta_image));
    }

    #[test]
    fn acyclic_orientations_have_no_positive_cycles() {
        let om = OrientedMap::new(link_map(), vec![true, false, true]).unwrap();
        assert!(positive_cycles(&om).is_empty());
        let om = OrientedMap::new(link_map(), vec![true, true, false]).unwrap();
        assert!(positive_cycles(&om).is_empty());
    }

    #[test]
    fn gamma_on_trivial_map() {
        let om = OrientedMap::new(crate::map::RootedMap::trivial(), vec![true]).unwrap();
        let mt = gamma(&om).unwrap();
        assert_eq!(mt.tree_edge_count(), 0);
    }

    #[test]
    fn gamma_rejects_non_tree_orientations() {
        let om = OrientedMap::new(loop_map(), vec![true, false, true]).unwrap();
        assert_eq!(gamma(&om), Err(NonTreeOrientation));
    }

    #[test]
    fn round_trips_small() {
        for n in 0..=3 {
            for mt in enumerate_tree_rooted_maps(n) {
                let om = delta(&mt);
                assert!(is_tree_orientation(&om), "δ images are tree-oriented");
                assert!(positive_cycles(&om).is_empty());
                let back = gamma(&om).unwrap();
                assert_eq!(back.canonical_form(), mt.canonical_form());
                assert_eq!(delta(&back).canonical_form(), om.canonical_form());
            }
        }
    }

    #[test]
    fn orientation_counts_match_spanning_tree_counts() {
        for n in 0..=4 {
            for m in enumerate_maps(n) {
                let trees = spanning_trees(&m).len();
                let tree_oriented = orientations(&m)
                    .iter()
                    .filter(|om| is_tree_orientation(om))
                    .count();
                assert_eq!(trees, tree_oriented);
            }
        }
    }

    #[test]
    fn oracle_agreement_exhaustive() {
        for n in 0..=3 {
            for m in enumerate_maps(n) {
                for om in orientations(&m) {
                    assert_eq!(
                        is_tree_orientation(&om),
                        tree_orientation_oracle(&om),
                        "map {:?} heads {:?}",
                        m.canonical_form(),
                        om.head_flags()
                    );
                }
            }
        }
    }

    #[test]
    fn fig_18_word_delta_matches_prefix_convention() {
        let mt = xi_inv(&"baAaBA".parse().unwrap());
        let om = delta(&mt);
        assert!(is_tree_orientation(&om));
        // One head per edge plus the root.
        let heads = om.head_flags().iter().filter(|&&b| b).count();
        assert_eq!(heads, mt.size() + 1);
    }
}
