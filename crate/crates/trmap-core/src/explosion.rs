//! The vertex explosion `φ = (φ0, φ1)`, its inverse `ψ`, and the composite
//! bijection `Φ = φ ∘ δ` from tree-rooted maps onto pairs made of a plane
//! tree of size `n` and a non-crossing partition of size `n + 1`.
//!
//! Exploding a tree-oriented map splits every vertex into one vertex per
//! incident head; each tail stays attached to the first head encountered
//! counterclockwise from it. The result is a tree, and grouping its
//! vertices by common origin gives a non-crossing partition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::catalan::{NonCrossingPartition, PlaneTree};
use crate::map::{HalfEdge, OrientedMap, RootedMap, TreeRootedMap};
use crate::orientation::{delta, gamma, is_tree_orientation, NonTreeOrientation};

/// Errors raised by the explosion mappings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExplosionError {
    /// `φ` requires a tree-orientation.
    NotTreeOriented,
    /// `ψ` requires a partition of size `size(tree) + 1`.
    SizeMismatch,
}

impl fmt::Display for ExplosionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExplosionError::NotTreeOriented => write!(f, "orientation is not a tree-orientation"),
            ExplosionError::SizeMismatch => {
                write!(f, "partition size must be the tree size plus one")
            }
        }
    }
}

impl core::error::Error for ExplosionError {}

impl From<NonTreeOrientation> for ExplosionError {
    fn from(_: NonTreeOrientation) -> Self {
        ExplosionError::NotTreeOriented
    }
}

/// `φ`: explode a tree-oriented map into a plane tree (φ0) and the
/// non-crossing partition of the tree's vertices by common origin (φ1).
///
/// Tree vertices are indexed 1-based in the order their first corners
/// appear around the tree, which is the first-visit order of the tour.
pub fn phi(om: &OrientedMap) -> Result<(PlaneTree, NonCrossingPartition), ExplosionError> {
    if !is_tree_orientation(om) {
        return Err(ExplosionError::NotTreeOriented);
    }
    let (tree, origins) = explode(om, &[]);
    debug_assert_eq!(tree.size(), om.size());
    let partition = NonCrossingPartition::from_raw_labels(origins)
        .expect("the origin grouping of a tree-oriented map is non-crossing");
    Ok((tree, partition))
}

/// The exploded tree below the root half-edge, with the origin vertex of
/// each exploded vertex in first-visit order. `deleted` marks tail
/// half-edges to leave out of the rotations (used for prefix-forests;
/// empty for `φ`).
pub(crate) fn explode(om: &OrientedMap, deleted: &[HalfEdge]) -> (PlaneTree, Vec<usize>) {
    let mut skip = vec![false; om.map().half_edge_count()];
    for &h in deleted {
        skip[h] = true;
    }
    let mut origins = Vec::new();
    let tree = explode_from(om, om.map().root(), &skip, &mut origins);
    (tree, origins)
}

/// The exploded vertex anchored at head `h`: its children are the tails
/// whose first counterclockwise head is `h`, in rotation order.
pub(crate) fn explode_from(
    om: &OrientedMap,
    h: HalfEdge,
    skip: &[bool],
    origins: &mut Vec<usize>,
) -> PlaneTree {
    let m = om.map();
    origins.push(m.vertex_of(h));
    assert!(
        origins.len() <= m.half_edge_count(),
        "explosion of a non-tree-oriented map would loop"
    );
    // The run of tails immediately preceding h counterclockwise; h itself
    // is a head, so the backwards walk terminates.
    let mut run = Vec::new();
    let mut x = m.vertex_prev(h);
    while !om.is_head(x) {
        if !skip[x] {
            run.push(x);
        }
        x = m.vertex_prev(x);
    }
    run.reverse();
    let children = run
        .into_iter()
        .map(|t| explode_from(om, m.edge_pair(t), skip, origins))
        .collect();
    PlaneTree::new(children)
}

/// `ψ`: rebuild the tree-oriented map from a tree and a non-crossing
/// partition of its vertex set (in first-visit order, 1-based).
///
/// The tree is oriented from the root to the leaves and the vertices of
/// each part are merged at their first corners: the merged rotation
/// concatenates, over part members in decreasing ground-set order, each
/// member's rotation read counterclockwise from just after its head, the
/// head closing the block. (The decreasing order is forced; concatenating
/// increasingly already fails to invert `φ` at size 2.)
pub fn psi(
    tree: &PlaneTree,
    partition: &NonCrossingPartition,
) -> Result<OrientedMap, ExplosionError> {
    if partition.size() != tree.size() + 1 {
        return Err(ExplosionError::SizeMismatch);
    }
    let realized = realize_oriented_tree(tree);
    let h = 2 * tree.size() + 1;

    let mut sigma = vec![0usize; h];
    for part in partition.parts() {
        // Concatenated blocks: [tails..., head] per member.
        let mut merged: Vec<HalfEdge> = Vec::new();
        for &v in part.iter().rev() {
            let rot = &realized.rotations[v - 1];
            merged.extend_from_slice(&rot[1..]);
            merged.push(rot[0]);
        }
        for i in 0..merged.len() {
            sigma[merged[i]] = merged[(i + 1) % merged.len()];
        }
    }

    let map = RootedMap::new(sigma, realized.alpha, 0)
        .expect("merging at first corners of a non-crossing partition stays planar");
    Ok(OrientedMap::new(map, realized.is_head).expect("one head per edge"))
}

struct RealizedTree {
    /// Rotation per vertex in first-visit order, head first.
    rotations: Vec<Vec<HalfEdge>>,
    alpha: Vec<HalfEdge>,
    is_head: Vec<bool>,
}

/// Assigns half-edge identifiers to a plane tree: the root is 0 and edge
/// `k` in first-visit order has tail `2k+1` and head `2k+2`.
fn realize_oriented_tree(tree: &PlaneTree) -> RealizedTree {
    let n = tree.size();
    let h = 2 * n + 1;
    let mut alpha = Vec::with_capacity(h);
    alpha.push(0);
    for k in 0..n {
        alpha.push(2 * k + 2);
        alpha.push(2 * k + 1);
    }
    let mut is_head = vec![false; h];
    is_head[0] = true;
    for k in 0..n {
        is_head[2 * k + 2] = true;
    }

    fn build(
        t: &PlaneTree,
        my_head: HalfEdge,
        next_edge: &mut usize,
        rotations: &mut Vec<Vec<HalfEdge>>,
    ) {
        let slot = rotations.len();
        rotations.push(vec![my_head]);
        for child in t.children() {
            let k = *next_edge;
            *next_edge += 1;
            rotations[slot].push(2 * k + 1);
            build(child, 2 * k + 2, next_edge, rotations);
        }
    }

    let mut rotations = Vec::with_capacity(n + 1);
    let mut next_edge = 0usize;
    build(tree, 0, &mut next_edge, &mut rotations);

    RealizedTree {
        rotations,
        alpha,
        is_head,
    }
}

/// `Φ = φ ∘ δ`, from tree-rooted maps of size `n` onto pairs made of a
/// tree of size `n` and a non-crossing partition of size `n + 1`.
pub fn big_phi(mt: &TreeRootedMap) -> (PlaneTree, NonCrossingPartition) {
    phi(&delta(mt)).expect("δ images are tree-oriented")
}

/// `Φ⁻¹ = γ ∘ ψ`.
pub fn big_phi_inv(
    tree: &PlaneTree,
    partition: &NonCrossingPartition,
) -> Result<TreeRootedMap, ExplosionError> {
    let om = psi(tree, partition)?;
    gamma(&om).map_err(ExplosionError::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::format;
    use crate::catalan::{enumerate_ncps, enumerate_trees, upsilon_inv};
    use crate::map::{link_map, loop_map};
    use crate::walsh_lehman::enumerate_tree_rooted_maps;

    fn ncp(n: usize, parts: &[&[usize]]) -> NonCrossingPartition {
        NonCrossingPartition::from_parts(n, &parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn tree(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    #[test]
    fn phi_on_loop_and_link() {
        let lp = TreeRootedMap::new(loop_map(), vec![false, false, false]).unwrap();
        let (t, p) = phi(&delta(&lp)).unwrap();
        assert_eq!(t, tree("aA"));
        assert_eq!(p, ncp(2, &[&[1, 2]]));

        let link = TreeRootedMap::new(link_map(), vec![false, true, true]).unwrap();
        let (t, p) = phi(&delta(&link)).unwrap();
        assert_eq!(t, tree("aA"));
        assert_eq!(p, ncp(2, &[&[1], &[2]]));
    }

    #[test]
    fn phi_rejects_non_tree_orientations() {
        let om = OrientedMap::new(loop_map(), vec![true, false, true]).unwrap();
        assert_eq!(phi(&om), Err(ExplosionError::NotTreeOriented));
    }

    #[test]
    fn phi_tree_has_one_head_per_vertex() {
        for mt in enumerate_tree_rooted_maps(3) {
            let om = delta(&mt);
            let (t, p) = phi(&om).unwrap();
            // n + 1 exploded vertices from n + 1 heads.
            assert_eq!(t.vertex_count(), mt.size() + 1);
            assert_eq!(p.size(), mt.size() + 1);
        }
    }

    #[test]
    fn psi_inverts_the_examples() {
        let lp = delta(&TreeRootedMap::new(loop_map(), vec![false, false, false]).unwrap());
        let om = psi(&tree("aA"), &ncp(2, &[&[1, 2]])).unwrap();
        assert_eq!(om.canonical_form(), lp.canonical_form());

        let link = delta(&TreeRootedMap::new(link_map(), vec![false, true, true]).unwrap());
        let om = psi(&tree("aA"), &ncp(2, &[&[1], &[2]])).unwrap();
        assert_eq!(om.canonical_form(), link.canonical_form());

        assert_eq!(
            psi(&tree("aA"), &ncp(1, &[&[1]])).unwrap_err(),
            ExplosionError::SizeMismatch
        );
    }

    #[test]
    fn psi_phi_round_trips_exhaustive() {
        for n in 0..=3 {
            for mt in enumerate_tree_rooted_maps(n) {
                let om = delta(&mt);
                let (t, p) = phi(&om).unwrap();
                let back = psi(&t, &p).unwrap();
                assert_eq!(back.canonical_form(), om.canonical_form(), "ψ∘φ at {n}");
            }
            for t in enumerate_trees(n) {
                for p in enumerate_ncps(n + 1) {
                    let om = psi(&t, &p).unwrap();
                    assert!(is_tree_orientation(&om), "ψ output tree-oriented");
                    let (t2, p2) = phi(&om).unwrap();
                    assert_eq!((&t2, &p2), (&t, &p), "φ∘ψ at {n}");
                }
            }
        }
    }

    #[test]
    fn big_phi_is_a_bijection_small() {
        for n in 0..=3 {
            let mut images = BTreeSet::new();
            for mt in enumerate_tree_rooted_maps(n) {
                let (t, p) = big_phi(&mt);
                assert_eq!(t.size(), n);
                assert_eq!(p.size(), n + 1);
                images.insert(format!("{t}|{p}"));
                let back = big_phi_inv(&t, &p).unwrap();
                assert_eq!(back.canonical_form(), mt.canonical_form());
            }
            // Full cardinality means every (tree, partition) pair is hit.
            let pairs = enumerate_trees(n).len() * enumerate_ncps(n + 1).len();
            assert_eq!(images.len(), pairs, "n = {n}");
        }
    }

    #[test]
    fn upsilon_of_phi_partition_round_trips() {
        // φ1 values feed Υ in the partition-tree machinery; check the
        // composition is consistent on real partitions.
        for mt in enumerate_tree_rooted_maps(2) {
            let (_, p) = big_phi(&mt);
            let t = crate::catalan::upsilon(&p);
            assert_eq!(t.size(), p.size());
            assert_eq!(upsilon_inv(&t), p);
        }
    }
}
