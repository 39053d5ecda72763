use std::io::{self, BufRead, Read, Write};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use trmap_cli::{dot, json, suites};
use trmap_core::catalan::{
    big_theta, enumerate_binary_trees, enumerate_ncps, enumerate_trees, BinaryTree,
    NonCrossingPartition, PlaneTree,
};
use trmap_core::cdv::{lambda, lambda_inv};
use trmap_core::explosion::{big_phi, big_phi_inv};
use trmap_core::walsh_lehman::{enumerate_tree_rooted_maps, xi, xi_inv};
use trmap_core::words::{enumerate_paren_shuffles, LatticeWalk, ParenShuffle};

/// Tree-rooted planar maps, parenthesis-shuffles, and the bijections
/// between them.
#[derive(Parser)]
#[command(name = "trmap", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every object of one kind and size to stdout, one per line.
    Gen {
        kind: GenKind,
        /// Object size (edges, nodes, or ground-set size).
        #[arg(short)]
        n: usize,
    },
    /// Convert stdin lines between representations.
    Convert {
        #[arg(long)]
        from: Repr,
        #[arg(long)]
        to: Repr,
    },
    /// Run exhaustive verification suites and report one line per check.
    Verify {
        /// Exhaustive depth cap (sizes up to n; prefix lengths up to 2n).
        #[arg(short, default_value_t = 4)]
        n: usize,
        /// counts, xi, orientation, explosion, cdv, isomorphism, prefix, or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Render one object from stdin as DOT.
    Render {
        #[arg(long)]
        kind: RenderKind,
        #[arg(long, default_value = "dot")]
        format: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Parenthesis-shuffles, lexicographically.
    Shuffles,
    /// Tree-rooted maps (map JSON with a "tree" field), in shuffle order.
    Maps,
    /// Plane trees as balanced words.
    Trees,
    /// Non-crossing partitions as JSON parts arrays.
    Ncps,
    /// Binary trees as preorder words, leaves inactive.
    BinaryTrees,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Repr {
    /// Word over aAbB.
    Shuffle,
    /// Map JSON (tree-rooted when it carries a "tree" field).
    Map,
    /// {"tree", "partition"} JSON: the image of the explosion bijection.
    Pair,
    /// {"tree", "binary"} JSON: the image of the leaf/tree codes.
    PairCdv,
    /// Word over NSEW.
    Walk,
    /// Preorder word over N, La, Li, Ra, Ri.
    BinaryTree,
    /// JSON array of parts.
    Ncp,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Map,
    Tree,
    BinaryTree,
    Ncp,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen { kind, n } => {
            gen(kind, n, &mut out)?;
            Ok(0)
        }
        Command::Convert { from, to } => {
            let stdin = io::stdin();
            for (index, line) in stdin.lock().lines().enumerate() {
                let line = line.context("reading stdin")?;
                if line.trim().is_empty() {
                    continue;
                }
                let converted = convert(from, to, line.trim())
                    .with_context(|| format!("line {}", index + 1))?;
                writeln!(out, "{converted}")?;
            }
            Ok(0)
        }
        Command::Verify { n, suite } => {
            if n == 0 {
                bail!("-n must be at least 1");
            }
            let checks = suites::run_suite(&suite, n)
                .ok_or_else(|| anyhow!("unknown suite {suite:?}"))?;
            let mut all_pass = true;
            for check in &checks {
                writeln!(out, "{}", check.line())?;
                all_pass &= check.pass;
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Render { kind, format } => {
            if format != "dot" {
                bail!("unsupported format {format:?}");
            }
            let mut input = String::new();
            io::stdin().read_to_string(&mut input)?;
            write!(out, "{}", render(kind, input.trim())?)?;
            Ok(0)
        }
    }
}

fn gen(kind: GenKind, n: usize, out: &mut impl Write) -> Result<()> {
    match kind {
        GenKind::Shuffles => {
            for w in enumerate_paren_shuffles(n) {
                writeln!(out, "{w}")?;
            }
        }
        GenKind::Maps => {
            for mt in enumerate_tree_rooted_maps(n) {
                let json = json::MapJson::from_tree_rooted(&mt);
                writeln!(out, "{}", serde_json::to_string(&json)?)?;
            }
        }
        GenKind::Trees => {
            for t in enumerate_trees(n) {
                writeln!(out, "{t}")?;
            }
        }
        GenKind::Ncps => {
            for p in enumerate_ncps(n) {
                writeln!(out, "{}", serde_json::to_string(&p.parts())?)?;
            }
        }
        GenKind::BinaryTrees => {
            for b in enumerate_binary_trees(n) {
                writeln!(out, "{b}")?;
            }
        }
    }
    Ok(())
}

fn convert(from: Repr, to: Repr, line: &str) -> Result<String> {
    match (from, to) {
        (Repr::Shuffle, Repr::Map) => {
            let w: ParenShuffle = line.parse().map_err(|e| anyhow!("bad shuffle: {e}"))?;
            let json = json::MapJson::from_tree_rooted(&xi_inv(&w));
            Ok(serde_json::to_string(&json)?)
        }
        (Repr::Map, Repr::Shuffle) => {
            let json: json::MapJson = json::parse_line(line)?;
            Ok(xi(&json.to_tree_rooted()?).to_string())
        }
        (Repr::Map, Repr::Pair) => {
            let json: json::MapJson = json::parse_line(line)?;
            let (t, p) = big_phi(&json.to_tree_rooted()?);
            Ok(serde_json::to_string(&json::PairJson::from_pair(&t, &p))?)
        }
        (Repr::Pair, Repr::Map) => {
            let pair: json::PairJson = json::parse_line(line)?;
            let (t, p) = pair.to_pair()?;
            let mt = big_phi_inv(&t, &p).map_err(|e| anyhow!("Φ⁻¹ failed: {e}"))?;
            Ok(serde_json::to_string(&json::MapJson::from_tree_rooted(
                &mt,
            ))?)
        }
        (Repr::Shuffle, Repr::PairCdv) => {
            let w: ParenShuffle = line.parse().map_err(|e| anyhow!("bad shuffle: {e}"))?;
            let (t, b) = lambda(&w);
            Ok(serde_json::to_string(&json::CdvPairJson::from_pair(
                &t, &b,
            ))?)
        }
        (Repr::PairCdv, Repr::Shuffle) => {
            let pair: json::CdvPairJson = json::parse_line(line)?;
            let (t, b) = pair.to_pair()?;
            let w = lambda_inv(&t, &b).map_err(|e| anyhow!("Λ⁻¹ failed: {e}"))?;
            Ok(w.to_string())
        }
        (Repr::Shuffle, Repr::Walk) => {
            let w: ParenShuffle = line.parse().map_err(|e| anyhow!("bad shuffle: {e}"))?;
            Ok(w.to_walk().to_string())
        }
        (Repr::Walk, Repr::Shuffle) => {
            let walk: LatticeWalk = line.parse().map_err(|e| anyhow!("bad walk: {e}"))?;
            let w = ParenShuffle::from_walk(&walk).map_err(|e| anyhow!("open walk: {e}"))?;
            Ok(w.to_string())
        }
        (Repr::BinaryTree, Repr::Ncp) => {
            let b: BinaryTree = line.parse().map_err(|e| anyhow!("bad binary tree: {e}"))?;
            Ok(serde_json::to_string(&big_theta(&b).parts())?)
        }
        _ => bail!("unsupported conversion route"),
    }
}

fn render(kind: RenderKind, input: &str) -> Result<String> {
    Ok(match kind {
        RenderKind::Map => {
            let json: json::MapJson = json::parse_line(input)?;
            if json.tree.is_some() {
                dot::tree_rooted_map_dot(&json.to_tree_rooted()?)
            } else {
                dot::map_dot(&json.to_map()?)
            }
        }
        RenderKind::Tree => {
            let t: PlaneTree = input.parse().map_err(|e| anyhow!("bad tree word: {e}"))?;
            dot::plane_tree_dot(&t)
        }
        RenderKind::BinaryTree => {
            let b: BinaryTree = input.parse().map_err(|e| anyhow!("bad binary tree: {e}"))?;
            dot::binary_tree_dot(&b)
        }
        RenderKind::Ncp => {
            let parts: Vec<Vec<usize>> = json::parse_line(input)?;
            let n = parts.iter().map(|p| p.len()).sum();
            let p = NonCrossingPartition::from_parts(n, &parts)
                .map_err(|e| anyhow!("bad partition: {e}"))?;
            dot::ncp_dot(&p)
        }
    })
}
