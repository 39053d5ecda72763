//! The three Catalan-family codomains — plane trees, binary trees with
//! leaf activities, non-crossing partitions — together with the classical
//! tree/word bijection, the partition/tree bijection `Υ`, and the
//! contraction `θ` from binary trees onto plane trees.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::words::{is_paren_system, Letter, ShuffleWord, WordError};

/// A planted plane tree, stored as the ordered list of root subtrees.
///
/// The children order is the order in which the counterclockwise tour of
/// the tree first follows the corresponding edges. The size of a tree is
/// its number of edges; `PlaneTree::leaf()` is the zero-edge tree `τ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn new(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    /// The tree `τ` reduced to a root and a vertex.
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.children.iter().map(|c| c.size() + 1).sum()
    }

    /// Number of vertices, always `size() + 1`.
    pub fn vertex_count(&self) -> usize {
        self.size() + 1
    }

    /// The balanced parenthesis word read along the tour: `a` the first
    /// time an edge is followed, `ā` the second time.
    pub fn to_word(&self) -> ShuffleWord {
        let mut letters = Vec::with_capacity(2 * self.size());
        fn rec(t: &PlaneTree, out: &mut Vec<Letter>) {
            for c in &t.children {
                out.push(Letter::AOpen);
                rec(c, out);
                out.push(Letter::AClose);
            }
        }
        rec(self, &mut letters);
        ShuffleWord::new(letters)
    }

    /// Rebuilds a tree from a parenthesis system; rejects non-systems.
    pub fn from_word(w: &ShuffleWord) -> Result<PlaneTree, WordError> {
        if !is_paren_system(w)? {
            return Err(WordError::NotParenShuffle);
        }
        let mut stack = vec![PlaneTree::leaf()];
        for &l in w.letters() {
            match l {
                Letter::AOpen => stack.push(PlaneTree::leaf()),
                Letter::AClose => {
                    let done = stack.pop().expect("balanced word");
                    stack
                        .last_mut()
                        .expect("balanced word")
                        .children
                        .push(done);
                }
                _ => unreachable!("alphabet checked by is_paren_system"),
            }
        }
        debug_assert_eq!(stack.len(), 1);
        Ok(stack.pop().expect("root"))
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

impl FromStr for PlaneTree {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        PlaneTree::from_word(&s.parse()?)
    }
}

/// A set partition of `{1..n}` with no interleaved pair of parts.
///
/// Stored as a normalized part index per element; parts are numbered by
/// their minimum element, so equality is equality of partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NonCrossingPartition {
    part_of: Vec<usize>,
}

/// Errors raised by partition construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionError {
    /// The parts do not cover `{1..n}` exactly once.
    NotAPartition,
    /// Elements `a < b < c < d` with `a ~ c`, `b ~ d`, `a ≁ b`.
    Crossing,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotAPartition => write!(f, "parts do not cover the ground set"),
            PartitionError::Crossing => write!(f, "partition has crossing parts"),
        }
    }
}

impl core::error::Error for PartitionError {}

impl NonCrossingPartition {
    /// Builds a partition of `{1..n}` from its parts (1-based elements).
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let mut part_of = vec![usize::MAX; n];
        for (id, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(PartitionError::NotAPartition);
            }
            for &e in part {
                if e == 0 || e > n || part_of[e - 1] != usize::MAX {
                    return Err(PartitionError::NotAPartition);
                }
                part_of[e - 1] = id;
            }
        }
        if part_of.contains(&usize::MAX) {
            return Err(PartitionError::NotAPartition);
        }
        Self::from_raw_labels(part_of)
    }

    /// Builds a partition from an arbitrary label per element (0-based
    /// positions), normalizing part numbers.
    pub fn from_raw_labels(labels: Vec<usize>) -> Result<Self, PartitionError> {
        let p = NonCrossingPartition {
            part_of: normalize_labels(labels),
        };
        if p.has_crossing() {
            return Err(PartitionError::Crossing);
        }
        Ok(p)
    }

    /// Ground set size.
    pub fn size(&self) -> usize {
        self.part_of.len()
    }

    /// Normalized part index of a 1-based element.
    pub fn part_of(&self, element: usize) -> usize {
        self.part_of[element - 1]
    }

    pub fn same_part(&self, e1: usize, e2: usize) -> bool {
        self.part_of(e1) == self.part_of(e2)
    }

    pub fn part_count(&self) -> usize {
        self.part_of.iter().max().map_or(0, |&m| m + 1)
    }

    /// Parts listed by minimum element, elements ascending.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.part_count()];
        for (i, &p) in self.part_of.iter().enumerate() {
            parts[p].push(i + 1);
        }
        parts
    }

    fn has_crossing(&self) -> bool {
        // Arcs join consecutive elements of a part; two arcs cross iff
        // they interleave strictly.
        let mut arcs = Vec::new();
        let mut last_seen = vec![usize::MAX; self.part_count()];
        for (i, &p) in self.part_of.iter().enumerate() {
            if last_seen[p] != usize::MAX {
                arcs.push((last_seen[p], i));
            }
            last_seen[p] = i;
        }
        for (i, &(a, c)) in arcs.iter().enumerate() {
            for &(b, d) in &arcs[i + 1..] {
                if (a < b && b < c && c < d) || (b < a && a < d && d < c) {
                    return true;
                }
            }
        }
        false
    }
}

fn normalize_labels(labels: Vec<usize>) -> Vec<usize> {
    let mut rename: Vec<Option<usize>> = vec![None; labels.len().max(labels.iter().map(|&l| l + 1).max().unwrap_or(0))];
    let mut next = 0;
    let mut out = Vec::with_capacity(labels.len());
    for l in labels {
        let id = *rename[l].get_or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
        out.push(id);
    }
    out
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for part in self.parts() {
            write!(f, "{{")?;
            for (i, e) in part.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// The bijection `Υ` from non-crossing partitions of size `n` onto plane
/// trees of size `n`.
///
/// Parts correspond to odd-depth vertices: the part of an odd vertex is
/// made of its parent edge (the minimum) and its child edges. Element
/// indices follow the half-plane cell picture read left to right, which in
/// tree terms makes sibling subtrees enumerate right to left; see
/// [`upsilon_inv`] for the inverse reading.
pub fn upsilon(p: &NonCrossingPartition) -> PlaneTree {
    let parts = p.parts();
    PlaneTree::new(build_even(&parts.iter().collect::<Vec<_>>()))
}

/// Children (in tour order) of an even-depth vertex covering `parts`.
fn build_even(parts: &[&Vec<usize>]) -> Vec<PlaneTree> {
    // Split into groups: a leading part and the parts nested in its span.
    let mut groups: Vec<(&Vec<usize>, &[&Vec<usize>])> = Vec::new();
    let mut rest = parts;
    while let Some((leader, tail)) = rest.split_first() {
        let span_end = *leader.last().expect("parts are non-empty");
        let nested = tail
            .iter()
            .take_while(|p| p[0] < span_end)
            .count();
        groups.push((leader, &tail[..nested]));
        rest = &tail[nested..];
    }
    groups
        .iter()
        .rev()
        .map(|(leader, nested)| build_odd(leader, nested))
        .collect()
}

/// The odd-depth vertex of one part, with its pockets.
fn build_odd(part: &[usize], nested: &[&Vec<usize>]) -> PlaneTree {
    let mut children = Vec::with_capacity(part.len().saturating_sub(1));
    for j in (1..part.len()).rev() {
        let lo = part[j - 1];
        let hi = part[j];
        let inside: Vec<&Vec<usize>> = nested
            .iter()
            .filter(|p| p[0] > lo && p[0] < hi)
            .copied()
            .collect();
        children.push(PlaneTree::new(build_even(&inside)));
    }
    PlaneTree::new(children)
}

/// The inverse bijection `Υ⁻¹` from plane trees onto non-crossing
/// partitions: group the edges by their odd-depth endpoint and index them
/// by the left-to-right order of the cell picture.
pub fn upsilon_inv(t: &PlaneTree) -> NonCrossingPartition {
    let mut labels = Vec::with_capacity(t.size());
    let mut next_part = 0;
    visit_even(t, &mut labels, &mut next_part);

    fn visit_even(u: &PlaneTree, labels: &mut Vec<usize>, next_part: &mut usize) {
        for v in u.children.iter().rev() {
            let part = *next_part;
            *next_part += 1;
            visit_odd(v, part, labels, next_part);
        }
    }

    fn visit_odd(v: &PlaneTree, part: usize, labels: &mut Vec<usize>, next_part: &mut usize) {
        labels.push(part); // the parent edge of v, smallest element of the part
        for pocket in v.children.iter().rev() {
            visit_even(pocket, labels, next_part);
            labels.push(part); // the child edge closing this pocket
        }
    }

    NonCrossingPartition::from_raw_labels(labels)
        .expect("the odd-endpoint grouping of a plane tree is non-crossing")
}

/// Which child slot a binary-tree vertex occupies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Position {
    RootVertex,
    Son(Side),
}

/// A binary tree: every vertex is a node with exactly two sons or a leaf.
/// Leaves carry an activity flag; the size is the number of nodes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BinaryTree {
    Leaf { active: bool },
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

/// Appearance-order description of one leaf.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LeafInfo {
    pub active: bool,
    /// Side of the leaf relative to its father; a bare root leaf counts as
    /// left.
    pub side: Side,
}

impl BinaryTree {
    pub fn leaf(active: bool) -> Self {
        BinaryTree::Leaf { active }
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// The binary tree `B1`: one node and two active leaves.
    pub fn b1() -> Self {
        BinaryTree::node(BinaryTree::leaf(true), BinaryTree::leaf(true))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf { .. } => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Leaves in their order of appearance around the tree.
    pub fn leaves(&self) -> Vec<LeafInfo> {
        let mut out = Vec::new();
        fn rec(t: &BinaryTree, pos: Position, out: &mut Vec<LeafInfo>) {
            match t {
                BinaryTree::Leaf { active } => out.push(LeafInfo {
                    active: *active,
                    side: match pos {
                        Position::Son(s) => s,
                        Position::RootVertex => Side::Left,
                    },
                }),
                BinaryTree::Node(l, r) => {
                    rec(l, Position::Son(Side::Left), out);
                    rec(r, Position::Son(Side::Right), out);
                }
            }
        }
        rec(self, Position::RootVertex, &mut out);
        out
    }

    /// Rebuilds the tree with leaf number `index` (appearance order)
    /// replaced by `subtree`.
    pub fn with_leaf_replaced(&self, index: usize, subtree: &BinaryTree) -> BinaryTree {
        let mut counter = 0;
        let out = self.replace_rec(index, subtree, &mut counter);
        assert!(counter > index, "leaf index out of range");
        out
    }

    fn replace_rec(&self, index: usize, subtree: &BinaryTree, counter: &mut usize) -> BinaryTree {
        match self {
            BinaryTree::Leaf { .. } => {
                let here = *counter;
                *counter += 1;
                if here == index {
                    subtree.clone()
                } else {
                    self.clone()
                }
            }
            BinaryTree::Node(l, r) => {
                let l2 = l.replace_rec(index, subtree, counter);
                let r2 = r.replace_rec(index, subtree, counter);
                BinaryTree::node(l2, r2)
            }
        }
    }

    /// Rebuilds the tree with the activity of leaf `index` set to `active`.
    pub fn with_leaf_activity(&self, index: usize, active: bool) -> BinaryTree {
        self.with_leaf_replaced(index, &BinaryTree::leaf(active))
    }

    /// All leaves inactivated.
    pub fn inactivated(&self) -> BinaryTree {
        match self {
            BinaryTree::Leaf { .. } => BinaryTree::leaf(false),
            BinaryTree::Node(l, r) => BinaryTree::node(l.inactivated(), r.inactivated()),
        }
    }

    /// Branching flags of the edges in preorder (parent edge before the
    /// subtree below it, left before right).
    ///
    /// An edge is branching when one endpoint is a right son and the other
    /// is a left son or the root-vertex; exactly one child edge of every
    /// node is branching.
    pub fn branching_edges(&self) -> Vec<bool> {
        let mut out = Vec::new();
        fn rec(t: &BinaryTree, pos: Position, out: &mut Vec<bool>) {
            if let BinaryTree::Node(l, r) = t {
                out.push(is_branching(pos, Side::Left));
                rec(l, Position::Son(Side::Left), out);
                out.push(is_branching(pos, Side::Right));
                rec(r, Position::Son(Side::Right), out);
            }
        }
        rec(self, Position::RootVertex, &mut out);
        out
    }

    /// The preorder serialization over `{N, La, Li, Ra, Ri}`; a bare root
    /// leaf serializes as a left leaf.
    pub fn to_preorder_string(&self) -> String {
        let mut s = String::new();
        fn rec(t: &BinaryTree, pos: Position, s: &mut String) {
            match t {
                BinaryTree::Leaf { active } => {
                    s.push(match pos {
                        Position::Son(Side::Right) => 'R',
                        _ => 'L',
                    });
                    s.push(if *active { 'a' } else { 'i' });
                }
                BinaryTree::Node(l, r) => {
                    s.push('N');
                    rec(l, Position::Son(Side::Left), s);
                    rec(r, Position::Son(Side::Right), s);
                }
            }
        }
        rec(self, Position::RootVertex, &mut s);
        s
    }

    pub fn from_preorder_str(s: &str) -> Result<BinaryTree, WordError> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let t = parse_bin(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(WordError::InvalidAlphabet {
                position: pos,
                found: chars[pos],
            });
        }
        Ok(t)
    }
}

fn is_branching(parent: Position, child_side: Side) -> bool {
    match child_side {
        // A right son branches off a left son or the root-vertex.
        Side::Right => matches!(parent, Position::RootVertex | Position::Son(Side::Left)),
        // A left son branches off a right son.
        Side::Left => matches!(parent, Position::Son(Side::Right)),
    }
}

fn parse_bin(chars: &[char], pos: &mut usize) -> Result<BinaryTree, WordError> {
    let err = |position: usize, found: char| WordError::InvalidAlphabet { position, found };
    match chars.get(*pos) {
        Some('N') => {
            *pos += 1;
            let l = parse_bin(chars, pos)?;
            let r = parse_bin(chars, pos)?;
            Ok(BinaryTree::node(l, r))
        }
        Some(&c @ ('L' | 'R')) => {
            *pos += 1;
            match chars.get(*pos) {
                Some('a') => {
                    *pos += 1;
                    Ok(BinaryTree::leaf(true))
                }
                Some('i') => {
                    *pos += 1;
                    Ok(BinaryTree::leaf(false))
                }
                Some(&d) => Err(err(*pos, d)),
                None => Err(err(*pos, c)),
            }
        }
        Some(&c) => Err(err(*pos, c)),
        None => Err(WordError::NotParenShuffle),
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_preorder_string())
    }
}

impl FromStr for BinaryTree {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        BinaryTree::from_preorder_str(s)
    }
}

/// `θ`: contract every non-branching edge of a binary tree. The result has
/// exactly `size(B)` edges. Leaf activities are ignored.
pub fn theta(b: &BinaryTree) -> PlaneTree {
    theta_with_leaves(b).0
}

/// `θ` together with the leaf/vertex correspondence: entry `i` of the
/// returned vector is the appearance index of the unique leaf in the
/// cluster contracted onto tree vertex `i` (vertices in first-visit
/// order). The root-vertex corresponds to the first left leaf.
pub fn theta_with_leaves(b: &BinaryTree) -> (PlaneTree, Vec<usize>) {
    struct Tagged {
        children: Vec<Tagged>,
        leaf: usize,
    }

    // Returns the contracted subtrees hanging off v's cluster below v, and
    // the leaf ending the non-branching chain downward from v.
    fn walk(v: &BinaryTree, pos: Position, next_leaf: &mut usize) -> (Vec<Tagged>, usize) {
        match v {
            BinaryTree::Leaf { .. } => {
                let id = *next_leaf;
                *next_leaf += 1;
                (Vec::new(), id)
            }
            BinaryTree::Node(l, r) => {
                let (lch, lleaf) = walk(l, Position::Son(Side::Left), next_leaf);
                let (rch, rleaf) = walk(r, Position::Son(Side::Right), next_leaf);
                if is_branching(pos, Side::Left) {
                    // Right edge continues the cluster.
                    let mut children = vec![Tagged {
                        children: lch,
                        leaf: lleaf,
                    }];
                    children.extend(rch);
                    (children, rleaf)
                } else {
                    let mut children = lch;
                    children.push(Tagged {
                        children: rch,
                        leaf: rleaf,
                    });
                    (children, lleaf)
                }
            }
        }
    }

    let mut next_leaf = 0;
    let (children, root_leaf) = walk(b, Position::RootVertex, &mut next_leaf);
    let root = Tagged {
        children,
        leaf: root_leaf,
    };

    fn flatten(t: &Tagged, tree: &mut PlaneTree, tags: &mut Vec<usize>) {
        tags.push(t.leaf);
        for c in &t.children {
            let mut sub = PlaneTree::leaf();
            flatten(c, &mut sub, tags);
            tree.children.push(sub);
        }
    }

    let mut tree = PlaneTree::leaf();
    let mut tags = Vec::new();
    flatten(&root, &mut tree, &mut tags);
    (tree, tags)
}

/// `Θ = Υ⁻¹ ∘ θ`, from binary trees of size `n` onto non-crossing
/// partitions of size `n`.
pub fn big_theta(b: &BinaryTree) -> NonCrossingPartition {
    upsilon_inv(&theta(b))
}

/// All plane trees with `n` edges, `Cat(n)` of them, in a fixed order.
pub fn enumerate_trees(n: usize) -> Vec<PlaneTree> {
    enumerate_children_lists(n)
        .into_iter()
        .map(PlaneTree::new)
        .collect()
}

fn enumerate_children_lists(budget: usize) -> Vec<Vec<PlaneTree>> {
    if budget == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first_size in 0..budget {
        for first in enumerate_trees(first_size) {
            for mut rest in enumerate_children_lists(budget - 1 - first_size) {
                rest.insert(0, first.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// All binary trees with `n` nodes, leaves inactive, `Cat(n)` of them.
pub fn enumerate_binary_trees(n: usize) -> Vec<BinaryTree> {
    if n == 0 {
        return vec![BinaryTree::leaf(false)];
    }
    let mut out = Vec::new();
    for left_size in 0..n {
        for l in enumerate_binary_trees(left_size) {
            for r in enumerate_binary_trees(n - 1 - left_size) {
                out.push(BinaryTree::node(l.clone(), r));
            }
        }
    }
    out
}

/// All non-crossing partitions of `{1..n}`, generated independently of the
/// tree bijection: all set partitions in restricted-growth order, filtered
/// by the crossing test.
pub fn enumerate_ncps(n: usize) -> Vec<NonCrossingPartition> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(labels: &mut Vec<usize>, i: usize, max_used: usize, out: &mut Vec<NonCrossingPartition>) {
        let n = labels.len();
        if i == n {
            if let Ok(p) = NonCrossingPartition::from_raw_labels(labels.clone()) {
                out.push(p);
            }
            return;
        }
        for label in 0..=max_used + 1 {
            labels[i] = label;
            rec(labels, i + 1, max_used.max(label), out);
        }
    }
    if n == 0 {
        out.push(NonCrossingPartition { part_of: Vec::new() });
    } else {
        rec(&mut labels, 1, 0, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn tree(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    fn ncp(n: usize, parts: &[&[usize]]) -> NonCrossingPartition {
        NonCrossingPartition::from_parts(n, &parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn word_round_trip_examples() {
        assert_eq!(PlaneTree::leaf().to_word().to_string(), "");
        assert_eq!(tree("aA").size(), 1);
        assert_eq!(tree("aA"), PlaneTree::new(vec![PlaneTree::leaf()]));
        assert!("aAA".parse::<PlaneTree>().is_err());
        assert!("ab".parse::<PlaneTree>().is_err());
    }

    #[test]
    fn word_round_trip_exhaustive_size_4() {
        let trees = enumerate_trees(4);
        assert_eq!(trees.len(), 14);
        for t in &trees {
            assert_eq!(&PlaneTree::from_word(&t.to_word()).unwrap(), t);
        }
    }

    #[test]
    fn enumeration_counts() {
        for (n, cat) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            assert_eq!(enumerate_trees(n).len(), cat);
            assert_eq!(enumerate_binary_trees(n).len(), cat);
            assert_eq!(enumerate_ncps(n).len(), cat);
        }
    }

    #[test]
    fn noncrossing_validation() {
        assert!(NonCrossingPartition::from_parts(4, &[vec![1, 3], vec![2, 4]]).is_err());
        assert!(NonCrossingPartition::from_parts(4, &[vec![1, 4], vec![2, 3]]).is_ok());
        assert!(NonCrossingPartition::from_parts(3, &[vec![1], vec![2]]).is_err());
        assert!(NonCrossingPartition::from_parts(3, &[vec![1, 1], vec![2, 3]]).is_err());
    }

    #[test]
    fn upsilon_small_fixtures() {
        // The unique objects at sizes 1 and 2.
        assert_eq!(upsilon_inv(&tree("aA")), ncp(1, &[&[1]]));
        assert_eq!(upsilon_inv(&tree("aaAA")), ncp(2, &[&[1, 2]]));
        assert_eq!(upsilon_inv(&tree("aAaA")), ncp(2, &[&[1], &[2]]));
        assert_eq!(upsilon(&ncp(2, &[&[1, 2]])), tree("aaAA"));
        assert_eq!(upsilon(&ncp(2, &[&[1], &[2]])), tree("aAaA"));
        assert_eq!(upsilon(&NonCrossingPartition::from_parts(0, &[]).unwrap()), PlaneTree::leaf());
    }

    #[test]
    fn upsilon_size_8_cell_picture() {
        // The partition with non-trivial parts {1,4,5} and {6,8}; the other
        // elements are singletons. Its tree has the two top-level parts as
        // the odd vertices closest to the root.
        let p = ncp(8, &[&[1, 4, 5], &[2], &[3], &[6, 8], &[7]]);
        let t = upsilon(&p);
        assert_eq!(t.size(), 8);
        assert_eq!(t.to_word().to_string(), "aaaAAAaaAaaAaAAA");
        assert_eq!(upsilon_inv(&t), p);
    }

    #[test]
    fn upsilon_round_trip_exhaustive() {
        for n in 0..=6 {
            for t in enumerate_trees(n) {
                let p = upsilon_inv(&t);
                assert_eq!(p.size(), n);
                assert_eq!(upsilon(&p), t, "tree {t}");
            }
            for p in enumerate_ncps(n) {
                assert_eq!(upsilon_inv(&upsilon(&p)), p, "partition {p}");
            }
        }
    }

    #[test]
    fn branching_edges_of_b1() {
        // Left edge first, then right edge: only the right edge branches.
        assert_eq!(BinaryTree::b1().branching_edges(), vec![false, true]);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&BinaryTree::b1()), tree("aA"));
        assert_eq!(theta(&BinaryTree::leaf(false)), PlaneTree::leaf());

        // The binary tree λ1'("aA"): a node whose left son is a node.
        let left_heavy = BinaryTree::node(BinaryTree::b1(), BinaryTree::leaf(true)).inactivated();
        assert_eq!(theta(&left_heavy), tree("aAaA"));
        assert_eq!(big_theta(&left_heavy), ncp(2, &[&[1], &[2]]));

        // The binary tree λ1'("bB"): a node whose right son is a node.
        let right_heavy = BinaryTree::node(BinaryTree::leaf(true), BinaryTree::b1()).inactivated();
        assert_eq!(theta(&right_heavy), tree("aaAA"));
        assert_eq!(big_theta(&right_heavy), ncp(2, &[&[1, 2]]));

        assert_eq!(big_theta(&BinaryTree::b1()), ncp(1, &[&[1]]));
    }

    #[test]
    fn theta_edge_count_and_bijectivity() {
        use std::collections::BTreeSet;
        for n in 0..=6 {
            let mut images = BTreeSet::new();
            for b in enumerate_binary_trees(n) {
                let t = theta(&b);
                assert_eq!(t.size(), n, "θ must preserve size on {b}");
                images.insert(big_theta(&b).parts());
            }
            // Injective with full image: as many distinct partitions as trees.
            assert_eq!(images.len(), enumerate_ncps(n).len(), "n = {n}");
        }
    }

    #[test]
    fn theta_leaf_correspondence() {
        // One vertex per cluster, tagged by its unique leaf; the root
        // cluster ends at the first (leftmost) leaf.
        let (t, tags) = theta_with_leaves(&BinaryTree::b1());
        assert_eq!(t, tree("aA"));
        assert_eq!(tags, vec![0, 1]);

        for b in enumerate_binary_trees(4) {
            let (t, tags) = theta_with_leaves(&b);
            assert_eq!(tags.len(), t.vertex_count());
            let mut sorted = tags.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), tags.len(), "tags must be distinct");
            assert_eq!(tags[0], 0, "root vertex is the first left leaf");
        }
    }

    #[test]
    fn binary_tree_serialization() {
        let b = BinaryTree::b1();
        assert_eq!(b.to_string(), "NLaRa");
        assert_eq!("NLaRa".parse::<BinaryTree>().unwrap(), b);
        let b2 = BinaryTree::node(BinaryTree::leaf(false), BinaryTree::b1());
        assert_eq!(b2.to_string(), "NLiNLaRa");
        assert!("NLa".parse::<BinaryTree>().is_err());
        assert!("NLaRaX".parse::<BinaryTree>().is_err());
    }

    proptest! {
        #[test]
        fn upsilon_outputs_are_noncrossing(n in 0usize..6, skip in 0usize..42) {
            let trees = enumerate_trees(n);
            let t = &trees[skip % trees.len()];
            // from_raw_labels inside upsilon_inv already rejects crossings;
            // re-validate through the public constructor.
            let p = upsilon_inv(t);
            prop_assert!(NonCrossingPartition::from_parts(p.size(), &p.parts()).is_ok());
        }

        #[test]
        fn binary_serialization_round_trip(n in 0usize..6, skip in 0usize..42) {
            let bs = enumerate_binary_trees(n);
            let b = &bs[skip % bs.len()];
            prop_assert_eq!(&BinaryTree::from_preorder_str(&b.to_preorder_string()).unwrap(), b);
        }
    }
}
