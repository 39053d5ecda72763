//! JSON wire formats.
//!
//! Maps: `{"h": H, "sigma": [...], "alpha": [...], "root": id}` with an
//! optional `"tree"` array (the smaller half-edge of each spanning-tree
//! edge) when the map carries one. Explosion pairs:
//! `{"tree": word, "partition": [[...], ...]}`. CDV pairs:
//! `{"tree": word, "binary": preorder word}`.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use trmap_core::catalan::{BinaryTree, NonCrossingPartition, PlaneTree};
use trmap_core::map::{RootedMap, TreeRootedMap};

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct MapJson {
    pub h: usize,
    pub sigma: Vec<usize>,
    pub alpha: Vec<usize>,
    pub root: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<Vec<usize>>,
}

impl MapJson {
    pub fn from_map(m: &RootedMap) -> MapJson {
        MapJson {
            h: m.half_edge_count(),
            sigma: (0..m.half_edge_count()).map(|x| m.vertex_next(x)).collect(),
            alpha: (0..m.half_edge_count()).map(|x| m.edge_pair(x)).collect(),
            root: m.root(),
            tree: None,
        }
    }

    pub fn from_tree_rooted(mt: &TreeRootedMap) -> MapJson {
        let mut json = MapJson::from_map(mt.map());
        let tree: Vec<usize> = mt
            .map()
            .edges()
            .into_iter()
            .filter(|&(h1, _)| mt.is_tree_edge(h1))
            .map(|(h1, _)| h1)
            .collect();
        json.tree = Some(tree);
        json
    }

    pub fn to_map(&self) -> Result<RootedMap> {
        if self.sigma.len() != self.h || self.alpha.len() != self.h {
            bail!("h does not match the permutation arrays");
        }
        RootedMap::new(self.sigma.clone(), self.alpha.clone(), self.root)
            .map_err(|e| anyhow!("invalid map: {e}"))
    }

    pub fn to_tree_rooted(&self) -> Result<TreeRootedMap> {
        let map = self.to_map()?;
        let tree = self
            .tree
            .as_ref()
            .ok_or_else(|| anyhow!("map JSON carries no \"tree\" field"))?;
        let mut in_tree = vec![false; map.half_edge_count()];
        for &h in tree {
            if h >= map.half_edge_count() || h == map.root() {
                bail!("tree edge {h} out of range");
            }
            in_tree[h] = true;
            in_tree[map.edge_pair(h)] = true;
        }
        TreeRootedMap::new(map, in_tree).map_err(|e| anyhow!("invalid spanning tree: {e}"))
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PairJson {
    pub tree: String,
    pub partition: Vec<Vec<usize>>,
}

impl PairJson {
    pub fn from_pair(tree: &PlaneTree, partition: &NonCrossingPartition) -> PairJson {
        PairJson {
            tree: tree.to_word().to_string(),
            partition: partition.parts(),
        }
    }

    pub fn to_pair(&self) -> Result<(PlaneTree, NonCrossingPartition)> {
        let tree: PlaneTree = self.tree.parse().map_err(|e| anyhow!("bad tree word: {e}"))?;
        let n = self.partition.iter().map(|p| p.len()).sum();
        let partition = NonCrossingPartition::from_parts(n, &self.partition)
            .map_err(|e| anyhow!("bad partition: {e}"))?;
        Ok((tree, partition))
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct CdvPairJson {
    pub tree: String,
    pub binary: String,
}

impl CdvPairJson {
    pub fn from_pair(tree: &PlaneTree, binary: &BinaryTree) -> CdvPairJson {
        CdvPairJson {
            tree: tree.to_word().to_string(),
            binary: binary.to_preorder_string(),
        }
    }

    pub fn to_pair(&self) -> Result<(PlaneTree, BinaryTree)> {
        let tree: PlaneTree = self.tree.parse().map_err(|e| anyhow!("bad tree word: {e}"))?;
        let binary: BinaryTree = self
            .binary
            .parse()
            .map_err(|e| anyhow!("bad binary tree word: {e}"))?;
        Ok((tree, binary))
    }
}

pub fn parse_line<T: for<'de> Deserialize<'de>>(line: &str) -> Result<T> {
    serde_json::from_str(line).context("malformed JSON input")
}

#[cfg(test)]
mod tests {
    use super::*;
    use trmap_core::walsh_lehman::{xi, xi_inv};

    #[test]
    fn map_json_round_trip() {
        let mt = xi_inv(&"baAaBA".parse().unwrap());
        let json = MapJson::from_tree_rooted(&mt);
        let line = serde_json::to_string(&json).unwrap();
        let back: MapJson = parse_line(&line).unwrap();
        let mt2 = back.to_tree_rooted().unwrap();
        assert_eq!(mt2.canonical_form(), mt.canonical_form());
        assert_eq!(xi(&mt2).to_string(), "baAaBA");
    }

    #[test]
    fn map_json_rejects_bad_input() {
        let bad: MapJson = parse_line(r#"{"h":3,"sigma":[1,2,0],"alpha":[0,1,2],"root":0}"#).unwrap();
        assert!(bad.to_map().is_err());
        let no_tree: MapJson =
            parse_line(r#"{"h":1,"sigma":[0],"alpha":[0],"root":0}"#).unwrap();
        assert!(no_tree.to_map().is_ok());
        assert!(no_tree.to_tree_rooted().is_err());
    }

    #[test]
    fn pair_json_round_trip() {
        let pair = PairJson {
            tree: "aA".into(),
            partition: vec![vec![1, 2]],
        };
        let (t, p) = pair.to_pair().unwrap();
        let again = PairJson::from_pair(&t, &p);
        assert_eq!(again.tree, "aA");
        assert_eq!(again.partition, vec![vec![1, 2]]);
    }
}
