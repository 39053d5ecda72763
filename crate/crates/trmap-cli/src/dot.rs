//! DOT renderers. Output is deterministic: vertices and edges are emitted
//! in identifier order, so repeated runs are byte-identical.

use std::fmt::Write;

use trmap_core::catalan::{BinaryTree, NonCrossingPartition, PlaneTree};
use trmap_core::map::{RootedMap, TreeRootedMap};
use trmap_core::orientation::delta;

/// A rooted map: vertices, undirected edges labeled by their half-edge
/// pairs, and the root as an arrow into the root-vertex.
pub fn map_dot(m: &RootedMap) -> String {
    let mut out = String::new();
    out.push_str("digraph map {\n");
    push_map_vertices(&mut out, m);
    for (h1, h2) in m.edges() {
        let _ = writeln!(
            out,
            "  v{} -> v{} [dir=none, label=\"{}|{}\"];",
            m.vertex_of(h1),
            m.vertex_of(h2),
            h1,
            h2
        );
    }
    out.push_str("}\n");
    out
}

/// A tree-rooted map: spanning-tree edges bold, every edge carrying the
/// arrowhead of its tree-orientation.
pub fn tree_rooted_map_dot(mt: &TreeRootedMap) -> String {
    let m = mt.map();
    let om = delta(mt);
    let mut out = String::new();
    out.push_str("digraph map {\n");
    push_map_vertices(&mut out, m);
    for (h1, h2) in m.edges() {
        let (tail, head) = if om.is_head(h1) { (h2, h1) } else { (h1, h2) };
        let style = if mt.is_tree_edge(h1) { ", penwidth=2" } else { "" };
        let _ = writeln!(
            out,
            "  v{} -> v{} [label=\"{}|{}\"{}];",
            m.vertex_of(tail),
            m.vertex_of(head),
            h1,
            h2,
            style
        );
    }
    out.push_str("}\n");
    out
}

fn push_map_vertices(out: &mut String, m: &RootedMap) {
    out.push_str("  root [shape=none, label=\"\", width=0];\n");
    for v in 0..m.vertex_count() {
        let _ = writeln!(out, "  v{v} [shape=circle, label=\"{v}\"];");
    }
    let _ = writeln!(out, "  root -> v{};", m.root_vertex());
}

/// A plane tree, the root marked by an arrow.
pub fn plane_tree_dot(t: &PlaneTree) -> String {
    let mut out = String::new();
    out.push_str("digraph tree {\n");
    out.push_str("  root [shape=none, label=\"\", width=0];\n");
    let mut next = 0usize;
    fn rec(t: &PlaneTree, me: usize, next: &mut usize, out: &mut String) {
        let _ = writeln!(out, "  v{me} [shape=circle, label=\"\"];");
        for child in t.children() {
            *next += 1;
            let id = *next;
            let _ = writeln!(out, "  v{me} -> v{id} [dir=none];");
            rec(child, id, next, out);
        }
    }
    rec(t, 0, &mut next, &mut out);
    out.push_str("  root -> v0;\n");
    out.push_str("}\n");
    out
}

/// A binary tree with activity shapes: active leaves as circles, inactive
/// leaves as squares, nodes as points.
pub fn binary_tree_dot(b: &BinaryTree) -> String {
    let mut out = String::new();
    out.push_str("digraph binary {\n");
    out.push_str("  root [shape=none, label=\"\", width=0];\n");
    let mut next = 0usize;
    fn rec(b: &BinaryTree, me: usize, next: &mut usize, out: &mut String) {
        match b {
            BinaryTree::Leaf { active } => {
                let shape = if *active { "circle" } else { "square" };
                let _ = writeln!(out, "  v{me} [shape={shape}, label=\"\"];");
            }
            BinaryTree::Node(l, r) => {
                let _ = writeln!(out, "  v{me} [shape=point];");
                for child in [l.as_ref(), r.as_ref()] {
                    *next += 1;
                    let id = *next;
                    let _ = writeln!(out, "  v{me} -> v{id} [dir=none];");
                    rec(child, id, next, out);
                }
            }
        }
    }
    rec(b, 0, &mut next, &mut out);
    out.push_str("  root -> v0;\n");
    out.push_str("}\n");
    out
}

/// A non-crossing partition as an arc diagram: the ground set on one rank,
/// arcs joining consecutive elements of each part.
pub fn ncp_dot(p: &NonCrossingPartition) -> String {
    let mut out = String::new();
    out.push_str("graph ncp {\n  rankdir=LR;\n  { rank=same;");
    for e in 1..=p.size() {
        let _ = write!(out, " e{e};");
    }
    out.push_str(" }\n");
    for e in 1..p.size() {
        let _ = writeln!(out, "  e{} -- e{} [style=invis];", e, e + 1);
    }
    for part in p.parts() {
        for pair in part.windows(2) {
            let _ = writeln!(out, "  e{} -- e{} [constraint=false];", pair[0], pair[1]);
        }
    }
    for e in 1..=p.size() {
        let _ = writeln!(out, "  e{e} [shape=circle, label=\"{e}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trmap_core::map::loop_map;
    use trmap_core::walsh_lehman::xi_inv;

    #[test]
    fn loop_map_dot_shape() {
        let dot = map_dot(&loop_map());
        assert!(dot.contains("root -> v0"));
        assert_eq!(dot.matches("v0 -> v0").count(), 1, "one loop edge");
    }

    #[test]
    fn dot_is_deterministic() {
        let mt = xi_inv(&"baAaBA".parse().unwrap());
        assert_eq!(tree_rooted_map_dot(&mt), tree_rooted_map_dot(&mt));
        let p = NonCrossingPartition::from_parts(3, &[vec![1, 3], vec![2]]).unwrap();
        assert_eq!(ncp_dot(&p), ncp_dot(&p));
        assert!(ncp_dot(&p).contains("e1 -- e3 [constraint=false]"));
    }

    #[test]
    fn binary_tree_shapes() {
        let dot = binary_tree_dot(&BinaryTree::b1());
        assert_eq!(dot.matches("shape=circle").count(), 2);
        let dot = binary_tree_dot(&BinaryTree::b1().inactivated());
        assert_eq!(dot.matches("shape=square").count(), 2);
    }
}
