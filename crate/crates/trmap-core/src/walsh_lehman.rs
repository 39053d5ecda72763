//! The encoding `Ξ` between tree-rooted maps and parenthesis-shuffles.
//!
//! Touring the spanning tree and writing `a`/`ā` for the two visits of a
//! tree edge and `b`/`b̄` for the two crossings of a chord yields a
//! parenthesis-shuffle; `Ξ⁻¹` rebuilds the map by replaying the word as a
//! synthetic tour, inserting half-edges at the current corner and closing
//! chords by last-open-first-closed matching.

use alloc::vec;
use alloc::vec::Vec;

use crate::map::{RootedMap, TourEvent, TreeRootedMap};
use crate::words::{enumerate_paren_shuffles, Letter, ParenShuffle, ShuffleWord};

/// Encodes a tree-rooted map as the parenthesis-shuffle read along the
/// tour of its spanning tree. The result has size `n` and `|w|_a` equals
/// the number of tree edges.
pub fn xi(mt: &TreeRootedMap) -> ParenShuffle {
    let m = mt.map();
    let mut done = vec![false; m.half_edge_count()];
    let mut letters = Vec::with_capacity(2 * mt.size());
    for event in mt.tour() {
        let h = event.half_edge();
        let first = !done[m.edge_pair(h)];
        done[h] = true;
        letters.push(match (event, first) {
            (TourEvent::Follow(_), true) => Letter::AOpen,
            (TourEvent::Follow(_), false) => Letter::AClose,
            (TourEvent::Cross(_), true) => Letter::BOpen,
            (TourEvent::Cross(_), false) => Letter::BClose,
        });
    }
    ParenShuffle::new(ShuffleWord::new(letters)).expect("a tour reads as a parenthesis-shuffle")
}

/// Decodes a parenthesis-shuffle into the unique tree-rooted map whose
/// tour reads back the word.
///
/// The word is replayed as a tour of the growing map: `a` opens a new tree
/// edge at the current corner, `ā` follows it back, `b` inserts a dangling
/// head, `b̄` inserts a tail and connects it to the last open head (stack
/// matching realizes the unique planar connection).
pub fn xi_inv(w: &ParenShuffle) -> TreeRootedMap {
    let mut sigma: Vec<usize> = vec![0];
    let mut alpha: Vec<usize> = vec![0];
    let mut in_tree: Vec<bool> = vec![false];
    let mut pos = 0usize; // the corner after `pos` is the insertion point
    let mut open_tree: Vec<usize> = Vec::new();
    let mut open_heads: Vec<usize> = Vec::new();

    for &letter in w.letters() {
        match letter {
            Letter::AOpen => {
                let x = sigma.len(); // tail, at the current vertex
                let y = x + 1; // head, at a fresh vertex
                sigma.push(sigma[pos]);
                sigma[pos] = x;
                sigma.push(y);
                alpha.push(y);
                alpha.push(x);
                in_tree.push(true);
                in_tree.push(true);
                open_tree.push(x);
                pos = y;
            }
            Letter::AClose => {
                let x = open_tree.pop().expect("balanced a-subword");
                debug_assert_eq!(sigma[pos], alpha[x], "tour must be back at the child head");
                pos = x;
            }
            Letter::BOpen => {
                let x = sigma.len();
                sigma.push(sigma[pos]);
                sigma[pos] = x;
                alpha.push(x); // dangling until its b̄ arrives
                in_tree.push(false);
                open_heads.push(x);
                pos = x;
            }
            Letter::BClose => {
                let x = sigma.len();
                sigma.push(sigma[pos]);
                sigma[pos] = x;
                let head = open_heads.pop().expect("balanced b-subword");
                alpha.push(head);
                alpha[head] = x;
                in_tree.push(false);
                pos = x;
            }
        }
    }
    debug_assert!(open_tree.is_empty() && open_heads.is_empty());
    debug_assert_eq!(sigma[pos], 0, "tour must end at the root");

    let map = RootedMap::new(sigma, alpha, 0).expect("decoded rotation system is a planar map");
    TreeRootedMap::new(map, in_tree).expect("decoded a-edges form a spanning tree")
}

/// All tree-rooted maps of size `n`, via `Ξ⁻¹` over the shuffle stream;
/// the order matches the lexicographic word order.
pub fn enumerate_tree_rooted_maps(n: usize) -> Vec<TreeRootedMap> {
    enumerate_paren_shuffles(n).map(|w| xi_inv(&w)).collect()
}

/// All rooted maps of size `n`: the underlying maps of `Ξ⁻¹`, deduplicated
/// by canonical form, in first-appearance order.
pub fn enumerate_maps(n: usize) -> Vec<RootedMap> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mt in enumerate_tree_rooted_maps(n) {
        let form = mt.map().canonical_form();
        if seen.insert(form) {
            out.push(mt.map().clone());
        }
    }
    out
}
