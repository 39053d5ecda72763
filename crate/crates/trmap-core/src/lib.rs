//! Tree-rooted planar maps and the Catalan-family bijections.
//!
//! A tree-rooted map is a rooted planar map with a distinguished spanning
//! tree. There are `Cat(n) * Cat(n+1)` of them with `n` edges, and this crate
//! implements, end to end, the bijections that explain the formula:
//!
//! * [`walsh_lehman`] — the classical encoding of tree-rooted maps by
//!   shuffles of two parenthesis systems,
//! * [`orientation`] — the equivalence between spanning trees and
//!   tree-orientations (orientations without positive cycle),
//! * [`explosion`] — the vertex-explosion bijection onto pairs made of a
//!   plane tree and a non-crossing partition,
//! * [`cdv`] — the recursive Cori–Dulucq–Viennot construction on shuffles,
//!   producing a plane tree and a binary tree,
//! * [`prefix`] — the prefix-map machinery that proves the two
//!   constructions are isomorphic, in executable form.
//!
//! Everything is exact and exhaustive at small sizes; see the `trmap-cli`
//! companion crate for the command-line front end and file formats.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalan;
pub mod cdv;
pub mod explosion;
pub mod map;
pub mod orientation;
pub mod prefix;
pub mod walsh_lehman;
pub mod words;

pub use catalan::{BinaryTree, NonCrossingPartition, PlaneTree};
pub use map::{OrientedMap, RootedMap, TreeRootedMap};
pub use words::{LatticeWalk, ParenShuffle, PrefixShuffle, ShuffleWord};
