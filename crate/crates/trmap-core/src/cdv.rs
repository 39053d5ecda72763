//! The Cori–Dulucq–Viennot construction: the grafting `σ`, the leaf code
//! `λ0` (tree-sequences), the tree code `λ1` (binary trees with active
//! leaves), the mapping `Λ = (λ0', λ1')` on parenthesis-shuffles, and the
//! inverse `Λ⁻¹` by reverse rule application.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::catalan::{BinaryTree, LeafInfo, PlaneTree, Side};
use crate::words::{Letter, ParenShuffle, PrefixShuffle, ShuffleWord};

/// Errors raised by the inverse constructions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CdvError {
    /// `σ⁻¹` is only defined on trees with at least one edge.
    EmptyTree,
    /// The pair is not in the image of `Λ`.
    InvalidPair,
}

impl fmt::Display for CdvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CdvError::EmptyTree => write!(f, "σ⁻¹ requires a tree with at least one edge"),
            CdvError::InvalidPair => write!(f, "pair is not the image of a parenthesis-shuffle"),
        }
    }
}

impl core::error::Error for CdvError {}

/// `σ`: graft `t1` below a new last child edge of `t2`'s root. The result
/// has size `size(t1) + size(t2) + 1`.
pub fn sigma(t1: &PlaneTree, t2: &PlaneTree) -> PlaneTree {
    let mut children = t2.children().to_vec();
    children.push(t1.clone());
    PlaneTree::new(children)
}

/// The unique preimage under `σ` of a tree with at least one edge.
pub fn sigma_inv(t: &PlaneTree) -> Result<(PlaneTree, PlaneTree), CdvError> {
    let mut children = t.children().to_vec();
    let t1 = children.pop().ok_or(CdvError::EmptyTree)?;
    Ok((t1, PlaneTree::new(children)))
}

/// One item of a tree-sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TreeSeqItem {
    U,
    V,
    Tree(PlaneTree),
}

/// A word `u t1 u … t_i v … t_k v` alternating letters and trees: it
/// starts with `u`, ends with `v`, every `u` precedes every `v`, and
/// exactly one tree sits between consecutive letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeSequence {
    items: Vec<TreeSeqItem>,
}

impl TreeSequence {
    pub fn items(&self) -> &[TreeSeqItem] {
        &self.items
    }

    /// The initial sequence `u τ v`.
    pub fn initial() -> TreeSequence {
        TreeSequence {
            items: vec![
                TreeSeqItem::U,
                TreeSeqItem::Tree(PlaneTree::leaf()),
                TreeSeqItem::V,
            ],
        }
    }

    /// Builds `u t1 u … u t_k u t_l' v … v t_1' v` from the dangling-head
    /// trees `t_1..t_k` and the rooting-head trees `t_1'..t_l'`.
    pub fn from_forest(dangling: &[PlaneTree], rooting: &[PlaneTree]) -> TreeSequence {
        let mut items = Vec::with_capacity(2 * (dangling.len() + rooting.len()) + 1);
        for t in dangling {
            items.push(TreeSeqItem::U);
            items.push(TreeSeqItem::Tree(t.clone()));
        }
        items.push(TreeSeqItem::U);
        for t in rooting.iter().rev() {
            items.push(TreeSeqItem::Tree(t.clone()));
            items.push(TreeSeqItem::V);
        }
        TreeSequence { items }
    }

    pub fn count_u(&self) -> usize {
        self.items.iter().filter(|i| matches!(i, TreeSeqItem::U)).count()
    }

    pub fn count_v(&self) -> usize {
        self.items.iter().filter(|i| matches!(i, TreeSeqItem::V)).count()
    }

    /// The trees in order.
    pub fn trees(&self) -> Vec<&PlaneTree> {
        self.items
            .iter()
            .filter_map(|i| match i {
                TreeSeqItem::Tree(t) => Some(t),
                _ => None,
            })
            .collect()
    }

    /// Total number of edges over all trees.
    pub fn total_edges(&self) -> usize {
        self.trees().iter().map(|t| t.size()).sum()
    }

    fn last_u(&self) -> usize {
        self.items
            .iter()
            .rposition(|i| matches!(i, TreeSeqItem::U))
            .expect("a tree-sequence contains at least one u")
    }

    fn first_v(&self) -> usize {
        self.items
            .iter()
            .position(|i| matches!(i, TreeSeqItem::V))
            .expect("a tree-sequence contains at least one v")
    }

    fn tree_at(&self, index: usize) -> &PlaneTree {
        match &self.items[index] {
            TreeSeqItem::Tree(t) => t,
            _ => panic!("letters and trees must alternate"),
        }
    }

    /// Applies one λ0 rewriting step.
    fn apply(&mut self, letter: Letter) {
        match letter {
            Letter::AOpen => {
                let iu = self.last_u();
                self.items.splice(
                    iu..=iu,
                    [
                        TreeSeqItem::U,
                        TreeSeqItem::Tree(PlaneTree::leaf()),
                        TreeSeqItem::V,
                    ],
                );
            }
            Letter::BOpen => {
                let iv = self.first_v();
                self.items.splice(
                    iv..=iv,
                    [
                        TreeSeqItem::U,
                        TreeSeqItem::Tree(PlaneTree::leaf()),
                        TreeSeqItem::V,
                    ],
                );
            }
            Letter::AClose => {
                let iv = self.first_v();
                let merged = sigma(self.tree_at(iv - 1), self.tree_at(iv + 1));
                self.items
                    .splice(iv - 1..=iv + 1, [TreeSeqItem::Tree(merged)]);
            }
            Letter::BClose => {
                let iu = self.last_u();
                let merged = sigma(self.tree_at(iu - 1), self.tree_at(iu + 1));
                self.items
                    .splice(iu - 1..=iu + 1, [TreeSeqItem::Tree(merged)]);
            }
        }
    }
}

impl fmt::Display for TreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            match item {
                TreeSeqItem::U => write!(f, "u")?,
                TreeSeqItem::V => write!(f, "v")?,
                TreeSeqItem::Tree(t) => write!(f, "({t})")?,
            }
        }
        Ok(())
    }
}

/// `λ0`: the leaf code of a prefix-shuffle. The result has
/// `|w|_b - |w|_b̄ + 1` letters `u` and `|w|_a - |w|_ā + 1` letters `v`,
/// and its trees carry `|w|_ā + |w|_b̄` edges in total.
pub fn lambda0(w: &PrefixShuffle) -> TreeSequence {
    let mut seq = TreeSequence::initial();
    for &letter in w.letters() {
        seq.apply(letter);
    }
    seq
}

/// `λ0'`: the unique tree in `λ0(w) = u T v` for a parenthesis-shuffle.
pub fn lambda0_prime(w: &ParenShuffle) -> PlaneTree {
    let seq = lambda0(w.as_prefix());
    assert_eq!(
        (seq.count_u(), seq.count_v()),
        (1, 1),
        "complete shuffles leave a single u and a single v"
    );
    seq.tree_at(1).clone()
}

/// `λ1`: the tree code of a prefix-shuffle, a binary tree with
/// `|w|_a + |w|_b + 1` nodes, `|w|_a - |w|_ā + 1` active right leaves and
/// `|w|_b - |w|_b̄ + 1` active left leaves, the active left leaves all
/// preceding the active right leaves.
pub fn lambda1(w: &PrefixShuffle) -> BinaryTree {
    let mut b = BinaryTree::b1();
    for &letter in w.letters() {
        b = lambda1_step(&b, letter);
    }
    b
}

fn lambda1_step(b: &BinaryTree, letter: Letter) -> BinaryTree {
    let leaves = b.leaves();
    match letter {
        Letter::AOpen => {
            let target = last_active(&leaves, Side::Left).expect("an active left leaf exists");
            b.with_leaf_replaced(target, &BinaryTree::b1())
        }
        Letter::BOpen => {
            let target = first_active(&leaves, Side::Right).expect("an active right leaf exists");
            b.with_leaf_replaced(target, &BinaryTree::b1())
        }
        Letter::AClose => {
            let target = first_active(&leaves, Side::Right).expect("an active right leaf exists");
            b.with_leaf_activity(target, false)
        }
        Letter::BClose => {
            let target = last_active(&leaves, Side::Left).expect("an active left leaf exists");
            b.with_leaf_activity(target, false)
        }
    }
}

fn first_active(leaves: &[LeafInfo], side: Side) -> Option<usize> {
    leaves.iter().position(|l| l.active && l.side == side)
}

fn last_active(leaves: &[LeafInfo], side: Side) -> Option<usize> {
    leaves.iter().rposition(|l| l.active && l.side == side)
}

/// `λ1'`: `λ1(w)` with its two remaining active leaves (the first left
/// leaf and the last right leaf) inactivated.
pub fn lambda1_prime(w: &ParenShuffle) -> BinaryTree {
    let b = lambda1(w.as_prefix());
    debug_assert_eq!(
        b.leaves().iter().filter(|l| l.active).count(),
        2,
        "complete shuffles leave exactly two active leaves"
    );
    b.inactivated()
}

/// `Λ`: the pair `(λ0'(w), λ1'(w))`, a tree of size `n` and a binary tree
/// of size `n + 1`.
pub fn lambda(w: &ParenShuffle) -> (PlaneTree, BinaryTree) {
    (lambda0_prime(w), lambda1_prime(w))
}

/// `Λ⁻¹`: peel the pair letter by letter, right to left.
///
/// Accepts a tree of size `n` and an all-inactive binary tree of size
/// `n + 1`; any state that violates the validity conditions of the pair
/// reports `InvalidPair`.
pub fn lambda_inv(tree: &PlaneTree, btree: &BinaryTree) -> Result<ParenShuffle, CdvError> {
    if btree.size() != tree.size() + 1 || btree.leaves().iter().any(|l| l.active) {
        return Err(CdvError::InvalidPair);
    }
    // Restore the activity of λ1: the first left leaf and the last right
    // leaf of a complete shuffle's code are active.
    let leaves = btree.leaves();
    let first_left = first_leaf_of_side(&leaves, Side::Left).ok_or(CdvError::InvalidPair)?;
    let last_right = last_leaf_of_side(&leaves, Side::Right).ok_or(CdvError::InvalidPair)?;
    let mut b = btree
        .with_leaf_activity(first_left, true)
        .with_leaf_activity(last_right, true);
    let mut seq = TreeSequence {
        items: vec![
            TreeSeqItem::U,
            TreeSeqItem::Tree(tree.clone()),
            TreeSeqItem::V,
        ],
    };

    let mut reversed = Vec::new();
    loop {
        if !pair_is_valid(&seq, &b) {
            return Err(CdvError::InvalidPair);
        }
        if seq == TreeSequence::initial() {
            if b != BinaryTree::b1() {
                return Err(CdvError::InvalidPair);
            }
            break;
        }
        let (next_b, next_seq, letter) = peel(&seq, &b)?;
        b = next_b;
        seq = next_seq;
        reversed.push(letter);
    }

    reversed.reverse();
    ParenShuffle::new(ShuffleWord::new(reversed)).map_err(|_| CdvError::InvalidPair)
}

fn first_leaf_of_side(leaves: &[LeafInfo], side: Side) -> Option<usize> {
    leaves.iter().position(|l| l.side == side)
}

fn last_leaf_of_side(leaves: &[LeafInfo], side: Side) -> Option<usize> {
    leaves.iter().rposition(|l| l.side == side)
}

/// Undoes the last rewriting step of `(λ0, λ1)`.
fn peel(
    seq: &TreeSequence,
    b: &BinaryTree,
) -> Result<(BinaryTree, TreeSequence, Letter), CdvError> {
    let iu = seq.last_u();
    let iv = seq.first_v();
    if iv != iu + 2 {
        return Err(CdvError::InvalidPair);
    }
    let middle = seq.tree_at(iu + 1);

    if middle.size() == 0 {
        // The last letter opened: the sequence shows `u τ v` and the code
        // shows two active sibling leaves.
        let (b2, side) = collapse_active_siblings(b).ok_or(CdvError::InvalidPair)?;
        let mut items = seq.items().to_vec();
        let (letter, keep) = match side {
            Side::Left => (Letter::AOpen, TreeSeqItem::U),
            Side::Right => (Letter::BOpen, TreeSeqItem::V),
        };
        items.splice(iu..=iu + 2, [keep]);
        Ok((b2, TreeSequence { items }, letter))
    } else {
        // The last letter closed: split the middle tree by σ⁻¹ and
        // reactivate the leaf its first factor points at.
        let (t1, t2) = sigma_inv(middle)?;
        let leaves = b.leaves();
        let anchor = last_active(&leaves, Side::Left).ok_or(CdvError::InvalidPair)?;
        let target = anchor + t1.size() + 1;
        let first_right = first_active(&leaves, Side::Right).ok_or(CdvError::InvalidPair)?;
        if target >= leaves.len() || leaves[target].active || target >= first_right {
            return Err(CdvError::InvalidPair);
        }
        let b2 = b.with_leaf_activity(target, true);
        let (letter, keep) = match leaves[target].side {
            Side::Right => (Letter::AClose, TreeSeqItem::V),
            Side::Left => (Letter::BClose, TreeSeqItem::U),
        };
        let mut items = seq.items().to_vec();
        items.splice(
            iu + 1..=iu + 1,
            [TreeSeqItem::Tree(t1), keep, TreeSeqItem::Tree(t2)],
        );
        Ok((b2, TreeSequence { items }, letter))
    }
}

/// Deletes the active sibling pair (last active left, first active right)
/// and makes their father an active leaf; returns the father's side.
/// `None` when no such siblings exist or the father is the root-vertex.
fn collapse_active_siblings(b: &BinaryTree) -> Option<(BinaryTree, Side)> {
    fn rec(t: &BinaryTree, pos: Option<Side>, counter: &mut usize) -> Option<(BinaryTree, Side)> {
        match t {
            BinaryTree::Leaf { .. } => {
                *counter += 1;
                None
            }
            BinaryTree::Node(l, r) => {
                if let (BinaryTree::Leaf { active: true }, BinaryTree::Leaf { active: true }) =
                    (l.as_ref(), r.as_ref())
                {
                    // Candidate pair; the caller checks it is the right one
                    // through the validity conditions.
                    *counter += 2;
                    return pos.map(|side| (BinaryTree::leaf(true), side));
                }
                if let Some((nl, side)) = rec(l, Some(Side::Left), counter) {
                    return Some((BinaryTree::node(nl, r.as_ref().clone()), side));
                }
                rec(r, Some(Side::Right), counter).map(|(nr, side)| {
                    (BinaryTree::node(l.as_ref().clone(), nr), side)
                })
            }
        }
    }
    let mut counter = 0;
    rec(b, None, &mut counter)
}

/// The three conditions characterizing the image of `(λ0, λ1)`:
/// active left leaves precede active right leaves; the `u`/`v` counts
/// match the active left/right counts; and the tree between consecutive
/// letters has as many edges as there are inactive leaves between the
/// corresponding active leaves.
pub fn pair_is_valid(seq: &TreeSequence, b: &BinaryTree) -> bool {
    let leaves = b.leaves();
    let lefts: Vec<usize> = (0..leaves.len())
        .filter(|&i| leaves[i].active && leaves[i].side == Side::Left)
        .collect();
    let rights: Vec<usize> = (0..leaves.len())
        .filter(|&i| leaves[i].active && leaves[i].side == Side::Right)
        .collect();
    if let (Some(&last_l), Some(&first_r)) = (lefts.last(), rights.first()) {
        if last_l > first_r {
            return false;
        }
    }
    if lefts.len() != seq.count_u() || rights.len() != seq.count_v() {
        return false;
    }
    // Gap sizes between consecutive active leaves against tree sizes.
    let actives: Vec<usize> = (0..leaves.len()).filter(|&i| leaves[i].active).collect();
    let trees = seq.trees();
    if actives.len() != trees.len() + 1 {
        return false;
    }
    for (i, t) in trees.iter().enumerate() {
        let inactive_between = actives[i + 1] - actives[i] - 1;
        if inactive_between != t.size() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::format;
    use alloc::string::ToString;
    use crate::catalan::{enumerate_binary_trees, enumerate_trees};
    use crate::words::{enumerate_paren_shuffles, enumerate_prefix_shuffles};

    fn prefix(s: &str) -> PrefixShuffle {
        s.parse().unwrap()
    }

    fn shuffle(s: &str) -> ParenShuffle {
        s.parse().unwrap()
    }

    fn tree(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&PlaneTree::leaf(), &PlaneTree::leaf()), tree("aA"));
        assert_eq!(sigma(&tree("aA"), &tree("aA")), tree("aAaaAA"));
        // The recorded grafting convention on two named size-2 trees: the
        // path aaAA hangs below a new last child of the root of the
        // two-child tree aAaA.
        assert_eq!(sigma(&tree("aaAA"), &tree("aAaA")), tree("aAaAaaaAAA"));
        assert_eq!(sigma_inv(&PlaneTree::leaf()).unwrap_err(), CdvError::EmptyTree);
    }

    #[test]
    fn sigma_size_contract_and_inverse_exhaustive() {
        for s1 in 0..=3 {
            for t1 in enumerate_trees(s1) {
                for s2 in 0..=3 {
                    for t2 in enumerate_trees(s2) {
                        let merged = sigma(&t1, &t2);
                        assert_eq!(merged.size(), s1 + s2 + 1);
                        assert_eq!(sigma_inv(&merged).unwrap(), (t1.clone(), t2.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn lambda0_stages_of_the_figure_word() {
        let word = "baAaBA";
        let expected = [
            "u()v",
            "u()u()v",
            "u()u()v()v",
            "u()u(aA)v",
            "u()u()v(aA)v",
            "u(aA)v(aA)v",
            "u(aAaaAA)v",
        ];
        for (len, want) in expected.iter().enumerate() {
            let seq = lambda0(&prefix(&word[..len]));
            assert_eq!(seq.to_string(), *want, "stage {len}");
        }
    }

    #[test]
    fn lambda0_letter_counts_and_edge_law() {
        for len in 0..=8 {
            for w in enumerate_prefix_shuffles(len) {
                let seq = lambda0(&w);
                assert_eq!(seq.count_u(), w.open_b() + 1);
                assert_eq!(seq.count_v(), w.open_a() + 1);
                assert_eq!(
                    seq.total_edges(),
                    w.count(Letter::AClose) + w.count(Letter::BClose)
                );
            }
        }
    }

    #[test]
    fn lambda0_prime_examples() {
        assert_eq!(lambda0_prime(&shuffle("aA")), tree("aA"));
        assert_eq!(lambda0_prime(&shuffle("bB")), tree("aA"));
        assert_eq!(lambda0_prime(&ParenShuffle::empty()), PlaneTree::leaf());
        for n in 0..=4 {
            for w in enumerate_paren_shuffles(n) {
                assert_eq!(lambda0_prime(&w).size(), n);
            }
        }
    }

    #[test]
    fn lambda1_stages_of_the_figure_word() {
        let word = "baAaBA";
        let expected = [
            "NLaRa",
            "NLaNLaRa",
            "NLaNNLaRaRa",
            "NLaNNLaRiRa",
            "NLaNNNLaRaRiRa",
            "NLaNNNLiRaRiRa",
            "NLaNNNLiRiRiRa",
        ];
        for (len, want) in expected.iter().enumerate() {
            let b = lambda1(&prefix(&word[..len]));
            assert_eq!(b.to_string(), *want, "stage {len}");
        }
        assert_eq!(lambda1_prime(&shuffle(word)).to_string(), "NLiNNNLiRiRiRi");
        assert_eq!(lambda1_prime(&shuffle(word)).size(), 4);
    }

    #[test]
    fn lambda1_invariant_counts() {
        for len in 0..=8 {
            for w in enumerate_prefix_shuffles(len) {
                let b = lambda1(&w);
                let leaves = b.leaves();
                assert_eq!(
                    b.size(),
                    w.count(Letter::AOpen) + w.count(Letter::BOpen) + 1
                );
                let active_right = leaves
                    .iter()
                    .filter(|l| l.active && l.side == Side::Right)
                    .count();
                let active_left = leaves
                    .iter()
                    .filter(|l| l.active && l.side == Side::Left)
                    .count();
                assert_eq!(active_right, w.open_a() + 1);
                assert_eq!(active_left, w.open_b() + 1);
                assert!(pair_is_valid(&lambda0(&w), &b), "validity on {w}");
            }
        }
    }

    #[test]
    fn lambda1_prime_examples() {
        let b = lambda1_prime(&shuffle("aA"));
        assert_eq!(b.to_string(), "NNLiRiRi");
        assert_eq!(b.size(), 2);
        assert_eq!(
            lambda1_prime(&ParenShuffle::empty()).to_string(),
            "NLiRi"
        );
        for n in 0..=4 {
            for w in enumerate_paren_shuffles(n) {
                assert_eq!(lambda1_prime(&w).size(), n + 1);
            }
        }
    }

    #[test]
    fn lambda_inv_round_trip_exhaustive() {
        for n in 0..=4 {
            for w in enumerate_paren_shuffles(n) {
                let (t, b) = lambda(&w);
                let back = lambda_inv(&t, &b).unwrap();
                assert_eq!(back, w, "Λ⁻¹∘Λ on {w}");
            }
        }
    }

    #[test]
    fn lambda_is_injective_small() {
        for n in 0..=4 {
            let mut seen = BTreeSet::new();
            for w in enumerate_paren_shuffles(n) {
                let (t, b) = lambda(&w);
                assert!(seen.insert(format!("{t}|{b}")), "collision at {w}");
            }
        }
    }

    #[test]
    fn lambda_is_onto_pairs_small() {
        for n in 0..=4 {
            let trees = enumerate_trees(n);
            let btrees = enumerate_binary_trees(n + 1);
            let mut hits = 0;
            for t in &trees {
                for b in &btrees {
                    if let Ok(w) = lambda_inv(t, b) {
                        assert_eq!(lambda(&w), (t.clone(), b.clone()));
                        hits += 1;
                    }
                }
            }
            assert_eq!(hits, trees.len() * btrees.len(), "n = {n}");
        }
    }

    #[test]
    fn lambda_inv_rejects_garbage() {
        // Size mismatch.
        assert_eq!(
            lambda_inv(&tree("aA"), &BinaryTree::leaf(false)).unwrap_err(),
            CdvError::InvalidPair
        );
        // Active leaves in the input.
        assert_eq!(
            lambda_inv(&PlaneTree::leaf(), &BinaryTree::b1()).unwrap_err(),
            CdvError::InvalidPair
        );
    }

    #[test]
    fn two_size_one_shuffles_have_distinct_pairs() {
        let pa = lambda(&shuffle("aA"));
        let pb = lambda(&shuffle("bB"));
        assert_ne!(pa, pb);
        assert_eq!(pa.0, pb.0, "both trees are the single edge");
    }
}
