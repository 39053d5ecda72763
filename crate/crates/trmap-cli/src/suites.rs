//! Exhaustive verification suites.
//!
//! Each check sweeps a family of objects, stops at the first
//! counterexample, and reports one pass/fail line. The `acceptance`
//! function runs every criterion at its pinned bound; `run_suite` drives
//! the same checks from the command line with a configurable depth cap.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use trmap_core::catalan::{big_theta, enumerate_ncps, enumerate_trees};
use trmap_core::cdv::{lambda, lambda0_prime, lambda1_prime, lambda_inv};
use trmap_core::explosion::{big_phi, big_phi_inv, phi, psi};
use trmap_core::map::{orientations, spanning_trees};
use trmap_core::orientation::{delta, gamma, is_tree_orientation, tree_orientation_oracle};
use trmap_core::prefix::{
    check_prop_lambda0, check_prop_lambda1, complete_prefix_map_matches_delta,
    partition_evolution_check, prefix_map_evolution_check, theta_lambda1_evolution_check,
};
use trmap_core::walsh_lehman::{enumerate_maps, enumerate_tree_rooted_maps, xi, xi_inv};
use trmap_core::words::{
    classify, count_paren_shuffles, count_paren_shuffles_product, enumerate_paren_shuffles,
    enumerate_prefix_shuffles, LatticeWalk, Letter, ParenShuffle, WordClass,
};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &str, result: Result<String, String>) -> Check {
        match result {
            Ok(detail) => Check {
                name: name.into(),
                pass: true,
                detail,
            },
            Err(detail) => Check {
                name: name.into(),
                pass: false,
                detail,
            },
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {}: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

/// Number of distinct tree-rooted maps per size against both counting
/// formulas and the expected values, for sizes `0..=n`.
pub fn counting_check(n: usize, expected: &[u64]) -> Check {
    let result = (|| {
        let mut counts = Vec::new();
        for size in 0..=n {
            let mut forms = BTreeSet::new();
            for w in enumerate_paren_shuffles(size) {
                forms.insert(xi_inv(&w).canonical_form());
            }
            let distinct = BigUint::from(forms.len());
            let by_product = count_paren_shuffles_product(size);
            if distinct != by_product {
                return Err(format!(
                    "size {size}: {distinct} distinct tree-rooted maps, Cat(n)Cat(n+1) = {by_product}"
                ));
            }
            if let Some(&want) = expected.get(size) {
                if distinct != BigUint::from(want) {
                    return Err(format!("size {size}: got {distinct}, expected {want}"));
                }
            }
            counts.push(forms.len().to_string());
        }
        Ok(format!("tree-rooted maps by size: {}", counts.join(", ")))
    })();
    Check::from_result("counting", result)
}

/// `Σ_k C(2n,2k) Cat(k) Cat(n-k) = Cat(n) Cat(n+1)` for `n ≤ bound`.
pub fn chu_vandermonde_check(bound: usize) -> Check {
    let result = (|| {
        for n in 0..=bound {
            let by_sum = count_paren_shuffles(n);
            let by_product = count_paren_shuffles_product(n);
            if by_sum != by_product {
                return Err(format!("n = {n}: sum {by_sum} != product {by_product}"));
            }
        }
        Ok(format!("both formulas agree for n <= {bound}"))
    })();
    Check::from_result("chu-vandermonde", result)
}

/// `Ξ∘Ξ⁻¹ = id` on shuffles of size `≤ n`.
pub fn xi_round_trip_check(n: usize) -> Check {
    let result = exhaustive_words(n, |w| {
        let back = xi(&xi_inv(w));
        (back == *w).then_some(()).ok_or_else(|| format!("{w} -> {back}"))
    });
    Check::from_result("xi-of-xi-inv", result)
}

/// `Ξ⁻¹∘Ξ = id` on every spanning tree of every map of size `≤ n`.
pub fn xi_inv_round_trip_check(n: usize) -> Check {
    let result = (|| {
        for size in 0..=n {
            for m in enumerate_maps(size) {
                for mt in spanning_trees(&m) {
                    let back = xi_inv(&xi(&mt));
                    if back.canonical_form() != mt.canonical_form() {
                        return Err(format!("map of size {size}, word {}", xi(&mt)));
                    }
                }
            }
        }
        Ok(format!("all tree-rooted maps of size <= {n}"))
    })();
    Check::from_result("xi-inv-of-xi", result)
}

/// `γ∘δ = id` and `δ∘γ = id` over all tree-rooted maps of size `≤ n`.
pub fn orientation_round_trip_check(n: usize) -> Check {
    let result = exhaustive_words(n, |w| {
        let mt = xi_inv(w);
        let om = delta(&mt);
        if !is_tree_orientation(&om) {
            return Err(format!("δ image of {w} is not tree-oriented"));
        }
        let back = gamma(&om).map_err(|e| format!("γ failed on δ image of {w}: {e}"))?;
        if back.canonical_form() != mt.canonical_form() {
            return Err(format!("γ∘δ != id on {w}"));
        }
        if delta(&back).canonical_form() != om.canonical_form() {
            return Err(format!("δ∘γ != id on {w}"));
        }
        Ok(())
    });
    Check::from_result("gamma-delta", result)
}

/// `is_tree_orientation` against the spanning-tree brute-force oracle on
/// every orientation of every map of size `≤ n`.
pub fn orientation_oracle_check(n: usize) -> Check {
    let result = (|| {
        for size in 0..=n {
            for m in enumerate_maps(size) {
                let tree_count = spanning_trees(&m).len();
                let mut oriented_count = 0;
                for om in orientations(&m) {
                    let fast = is_tree_orientation(&om);
                    if fast != tree_orientation_oracle(&om) {
                        return Err(format!(
                            "disagreement on a size-{size} map, heads {:?}",
                            om.head_flags()
                        ));
                    }
                    if fast {
                        oriented_count += 1;
                    }
                }
                if oriented_count != tree_count {
                    return Err(format!(
                        "size-{size} map: {oriented_count} tree-orientations vs {tree_count} spanning trees"
                    ));
                }
            }
        }
        Ok(format!(
            "oracle agreement on every orientation of every map of size <= {n}"
        ))
    })();
    Check::from_result("orientation-oracle", result)
}

/// `ψ∘φ = id` on tree-oriented maps of size `≤ n`.
pub fn psi_phi_check(n: usize) -> Check {
    let result = exhaustive_words(n, |w| {
        let om = delta(&xi_inv(w));
        let (t, p) = phi(&om).map_err(|e| format!("φ failed on {w}: {e}"))?;
        let back = psi(&t, &p).map_err(|e| format!("ψ failed on φ({w}): {e}"))?;
        (back.canonical_form() == om.canonical_form())
            .then_some(())
            .ok_or_else(|| format!("ψ∘φ != id on {w}"))
    });
    Check::from_result("psi-of-phi", result)
}

/// `φ∘ψ = id` on every pair of a tree of size `n` and a partition of size
/// `n + 1`, for `n ≤ bound`.
pub fn phi_psi_check(bound: usize) -> Check {
    let result = (|| {
        for n in 0..=bound {
            for t in enumerate_trees(n) {
                for p in enumerate_ncps(n + 1) {
                    let om = psi(&t, &p).map_err(|e| format!("ψ failed on ({t}, {p}): {e}"))?;
                    let (t2, p2) = phi(&om).map_err(|e| format!("φ failed on ψ({t}, {p}): {e}"))?;
                    if t2 != t || p2 != p {
                        return Err(format!("φ∘ψ != id on ({t}, {p})"));
                    }
                }
            }
        }
        Ok(format!("all pairs with tree size <= {bound}"))
    })();
    Check::from_result("phi-of-psi", result)
}

/// `Φ` is a bijection onto trees × partitions for sizes `≤ bound`: full
/// image cardinality, no collisions, and `Φ⁻¹∘Φ = id`.
pub fn big_phi_bijection_check(bound: usize) -> Check {
    let result = (|| {
        for n in 0..=bound {
            let mut images = BTreeSet::new();
            let mut total = 0usize;
            for mt in enumerate_tree_rooted_maps(n) {
                let (t, p) = big_phi(&mt);
                if t.size() != n || p.size() != n + 1 {
                    return Err(format!("size contract broken at {}", xi(&mt)));
                }
                let back = big_phi_inv(&t, &p).map_err(|e| format!("Φ⁻¹ failed: {e}"))?;
                if back.canonical_form() != mt.canonical_form() {
                    return Err(format!("Φ⁻¹∘Φ != id on {}", xi(&mt)));
                }
                images.insert(format!("{t}|{p}"));
                total += 1;
            }
            let pairs = enumerate_trees(n).len() * enumerate_ncps(n + 1).len();
            if images.len() != total || images.len() != pairs {
                return Err(format!(
                    "size {n}: {total} maps, {} distinct images, {pairs} pairs",
                    images.len()
                ));
            }
        }
        Ok(format!("bijective onto trees(n) x ncps(n+1) for n <= {bound}"))
    })();
    Check::from_result("big-phi-bijection", result)
}

/// `Λ⁻¹∘Λ = id` on shuffles of size `≤ n`, plus bijectivity of `Λ`: the
/// images are pairwise distinct and as numerous as the pairs made of a
/// tree of size `n` and a binary tree of size `n + 1`.
pub fn lambda_round_trip_check(n: usize) -> Check {
    let result = (|| {
        for size in 0..=n {
            let mut images = BTreeSet::new();
            for w in enumerate_paren_shuffles(size) {
                let (t, b) = lambda(&w);
                let back =
                    lambda_inv(&t, &b).map_err(|e| format!("Λ⁻¹ failed on Λ({w}): {e}"))?;
                if back != w {
                    return Err(format!("Λ⁻¹∘Λ != id on {w}"));
                }
                if !images.insert(format!("{t}|{b}")) {
                    return Err(format!("Λ collision at {w}"));
                }
            }
            // Both pair components are counted by Catalan numbers, so a
            // full-cardinality injective image is onto.
            if BigUint::from(images.len()) != count_paren_shuffles_product(size) {
                return Err(format!(
                    "size {size}: {} distinct images, want Cat(n)Cat(n+1)",
                    images.len()
                ));
            }
        }
        Ok(format!("bijective on all shuffles of size <= {n}"))
    })();
    Check::from_result("lambda-round-trip", result)
}

/// The isomorphism theorem: `φ0(δ(Ξ⁻¹(w))) = λ0'(w)` and
/// `φ1(δ(Ξ⁻¹(w))) = Θ(λ1'(w))` for every shuffle of size `≤ n`.
pub fn isomorphism_check(n: usize) -> Check {
    let result = exhaustive_words(n, |w| {
        let (t, p) = big_phi(&xi_inv(w));
        if t != lambda0_prime(w) {
            return Err(format!("φ0 != λ0' on {w}"));
        }
        if p != big_theta(&lambda1_prime(w)) {
            return Err(format!("φ1 != Θ∘λ1' on {w}"));
        }
        Ok(())
    });
    Check::from_result("isomorphism", result)
}

/// Prefix-map agreement and the two structural propositions over all
/// prefix-shuffles of length `≤ len`.
pub fn prefix_propositions_check(len: usize) -> Check {
    let result = (|| {
        for l in 0..=len {
            for w in enumerate_prefix_shuffles(l) {
                if !check_prop_lambda0(&w) {
                    return Err(format!("λ0 proposition fails on {w}"));
                }
                if !check_prop_lambda1(&w) {
                    return Err(format!("λ1 proposition fails on {w}"));
                }
            }
        }
        for n in 0..=len / 2 {
            for w in enumerate_paren_shuffles(n) {
                if !complete_prefix_map_matches_delta(&w) {
                    return Err(format!("M_w != δ(Ξ⁻¹(w)) on {w}"));
                }
            }
        }
        Ok(format!("both propositions on all prefix-shuffles of length <= {len}"))
    })();
    Check::from_result("prefix-propositions", result)
}

/// The three evolution lemmas as black-box diffs for `|w| ≤ len`.
pub fn evolution_check(len: usize) -> Check {
    let result = (|| {
        for l in 0..=len {
            for w in enumerate_prefix_shuffles(l) {
                for letter in Letter::ALL {
                    if !prefix_map_evolution_check(&w, letter) {
                        return Err(format!("prefix-map evolution fails on {w} + {letter:?}"));
                    }
                    if !partition_evolution_check(&w, letter) {
                        return Err(format!("partition-tree evolution fails on {w} + {letter:?}"));
                    }
                    if !theta_lambda1_evolution_check(&w, letter) {
                        return Err(format!("θ∘λ1 evolution fails on {w} + {letter:?}"));
                    }
                }
            }
        }
        Ok(format!("all three lemmas for |w| <= {len}"))
    })();
    Check::from_result("evolution-lemmas", result)
}

/// The pinned word fixtures.
pub fn fixtures_check() -> Check {
    let result = (|| {
        let w: trmap_core::words::ShuffleWord =
            "abaBAbaABA".parse().map_err(|e| format!("parse: {e}"))?;
        if classify(&w) != WordClass::Complete {
            return Err("abaBAbaABA must classify Complete".into());
        }

        let walk_word: ParenShuffle = "abbAbaaBBAAB".parse().map_err(|e| format!("parse: {e}"))?;
        let walk = walk_word.to_walk();
        if walk.to_string() != "NEESENNWWSSW" {
            return Err(format!("unexpected walk {walk}"));
        }
        let back = ParenShuffle::from_walk(&walk).map_err(|e| format!("from_walk: {e}"))?;
        if back != walk_word {
            return Err("walk round trip is not the identity".into());
        }
        let reparsed: LatticeWalk = walk.to_string().parse().map_err(|e| format!("{e}"))?;
        if reparsed != walk {
            return Err("walk text round trip failed".into());
        }

        let w: ParenShuffle = "baAaBA".parse().map_err(|e| format!("parse: {e}"))?;
        let t = lambda0_prime(&w);
        if t.size() != 3 {
            return Err(format!("λ0'(baAaBA) has {} edges, want 3", t.size()));
        }
        let b = lambda1_prime(&w);
        if b.size() != 4 {
            return Err(format!("λ1'(baAaBA) has {} nodes, want 4", b.size()));
        }
        let (t2, p2) = big_phi(&xi_inv(&w));
        if t2 != t || p2 != big_theta(&b) {
            return Err("the baAaBA pipeline breaks the isomorphism".into());
        }
        Ok("abaBAbaABA, abbAbaaBBAAB and baAaBA all behave as pinned".into())
    })();
    Check::from_result("fixtures", result)
}

fn exhaustive_words<F>(n: usize, mut per_word: F) -> Result<String, String>
where
    F: FnMut(&ParenShuffle) -> Result<(), String>,
{
    for size in 0..=n {
        for w in enumerate_paren_shuffles(size) {
            per_word(&w)?;
        }
    }
    Ok(format!("all shuffles of size <= {n}"))
}

const EXPECTED_COUNTS: [u64; 7] = [1, 2, 10, 70, 588, 5544, 56628];

/// The named suites of `trmap verify`, capped at size `n`.
pub fn run_suite(suite: &str, n: usize) -> Option<Vec<Check>> {
    let checks = match suite {
        "counts" => vec![
            counting_check(n, &EXPECTED_COUNTS),
            chu_vandermonde_check(n.max(10)),
        ],
        "xi" => vec![xi_round_trip_check(n), xi_inv_round_trip_check(n.min(4))],
        "orientation" => vec![
            orientation_round_trip_check(n),
            orientation_oracle_check(n.min(3)),
        ],
        "explosion" => vec![
            psi_phi_check(n),
            phi_psi_check(n.min(4)),
            big_phi_bijection_check(n.min(4)),
        ],
        "cdv" => vec![lambda_round_trip_check(n)],
        "isomorphism" => vec![isomorphism_check(n)],
        "prefix" => vec![
            prefix_propositions_check(2 * n),
            evolution_check(2 * n - 1),
        ],
        "all" => {
            let mut all = Vec::new();
            for s in [
                "counts",
                "xi",
                "orientation",
                "explosion",
                "cdv",
                "isomorphism",
                "prefix",
            ] {
                all.extend(run_suite(s, n).expect("known suite"));
            }
            all.push(fixtures_check());
            all
        }
        _ => return None,
    };
    Some(checks)
}

/// Every acceptance criterion at its pinned bound, in order.
pub fn acceptance() -> Vec<(String, Check)> {
    vec![
        (
            "counting theorem, n <= 6".into(),
            counting_check(6, &EXPECTED_COUNTS),
        ),
        ("Chu-Vandermonde, n <= 10".into(), chu_vandermonde_check(10)),
        ("round trip xi, n <= 5".into(), xi_round_trip_check(5)),
        (
            "round trip xi-inv over enumerated maps, n <= 4".into(),
            xi_inv_round_trip_check(4),
        ),
        (
            "round trips gamma/delta, n <= 5".into(),
            orientation_round_trip_check(5),
        ),
        ("round trip psi of phi, n <= 5".into(), psi_phi_check(5)),
        (
            "round trip phi of psi over pairs, n <= 4".into(),
            phi_psi_check(4),
        ),
        (
            "round trip lambda, n <= 5".into(),
            lambda_round_trip_check(5),
        ),
        (
            "main bijection onto pairs, n <= 4".into(),
            big_phi_bijection_check(4),
        ),
        ("isomorphism theorem, n <= 5".into(), isomorphism_check(5)),
        (
            "structural propositions, |w| <= 8".into(),
            prefix_propositions_check(8),
        ),
        ("evolution lemmas, |w| <= 7".into(), evolution_check(7)),
        ("paper fixtures".into(), fixtures_check()),
        (
            "orientation oracle, n <= 3".into(),
            orientation_oracle_check(3),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_expectations_report_a_counterexample() {
        // Harness sanity: wrong expected values must FAIL with the size
        // and the offending numbers in the detail line.
        let check = counting_check(2, &[1, 2, 11]);
        assert!(!check.pass);
        assert!(check.detail.contains("size 2"), "detail: {}", check.detail);
        assert!(check.line().starts_with("FAIL counting"));

        let ok = counting_check(2, &[1, 2, 10]);
        assert!(ok.pass);
    }

    #[test]
    fn small_suites_pass() {
        for suite in ["counts", "xi", "orientation", "explosion", "cdv", "isomorphism"] {
            for check in run_suite(suite, 2).unwrap() {
                assert!(check.pass, "{}", check.line());
            }
        }
        for check in run_suite("prefix", 2).unwrap() {
            assert!(check.pass, "{}", check.line());
        }
        assert!(run_suite("bogus", 2).is_none());
    }
}
