//! IO companion to `trmap-core`: JSON and DOT serializations of maps,
//! trees and partitions, plus the exhaustive verification suites behind
//! `trmap verify`.

pub mod dot;
pub mod json;
pub mod suites;
