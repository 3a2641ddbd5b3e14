//! Closed-form MS-numbers for standard graph families.
//!
//! These formulas use only binomial sums and powers of two, so comparing
//! them with [`crate::graphstate::ms_number`] is a genuine second
//! computation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `C(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `w(K_n) = Σ_{i=0}^{⌊(n-1)/4⌋} C(n+1, 4i+3)`.
pub fn w_complete(n: usize) -> Result<BigUint> {
    require(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    Ok((0..=(n - 1) / 4).map(|i| binomial(n + 1, 4 * i + 3)).sum())
}

pub fn w_path(n: usize) -> Result<BigUint> {
    require(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    let correction = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    Ok(pow2(n - 1) - pow2(correction))
}

/// Defined for `n >= 3`; `C_2` would need a double edge.
pub fn w_cycle(n: usize) -> Result<BigUint> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    if n % 2 == 1 {
        Ok(pow2(n - 1))
    } else {
        Ok(pow2(n - 1) - pow2(n / 2))
    }
}

pub fn w_star(n: usize) -> Result<BigUint> {
    require(n >= 2, || format!("star needs n >= 2, got {n}"))?;
    Ok(pow2(n - 2))
}

pub fn w_complete_bipartite(p: usize, q: usize) -> Result<BigUint> {
    require(p >= 1 && q >= 1, || {
        format!("K_(p,q) needs p, q >= 1, got ({p}, {q})")
    })?;
    Ok(pow2(p + q - 2))
}

/// `w(K_4 ∪ K̄_(n-4)) = 2^(n-1) + 2^(n-3)`, the largest MS-number of order `n`.
pub fn w_qmax(n: usize) -> Result<BigUint> {
    require(n >= 4, || format!("Q_n needs n >= 4, got {n}"))?;
    Ok(pow2(n - 1) + pow2(n - 3))
}

/// `w(T) = 2^(n-1) (1 - 2^(-τ))` with `τ` the vertex cover number.
pub fn w_tree(t: &Graph) -> Result<BigUint> {
    let tau = t.tree_vertex_cover_number()?;
    let n = t.order();
    Ok(pow2(n - 1) - pow2(n - 1 - tau))
}

/// `w(G1 ∪ G2) = w1 (2^n2 - w2) + (2^n1 - w1) w2`.
pub fn union_weight(w1: &BigUint, n1: usize, w2: &BigUint, n2: usize) -> Result<BigUint> {
    let (full1, full2) = (pow2(n1), pow2(n2));
    require(*w1 <= full1, || format!("w1 = {w1} exceeds 2^{n1}"))?;
    require(*w2 <= full2, || format!("w2 = {w2} exceeds 2^{n2}"))?;
    Ok(w1 * (&full2 - w2) + (&full1 - w1) * w2)
}

/// Folds [`union_weight`] over `(w_i, n_i)` parts, right to left.
pub fn union_weight_many(parts: &[(BigUint, usize)]) -> Result<BigUint> {
    let mut acc = (BigUint::zero(), 0usize);
    for (w, n) in parts.iter().rev() {
        acc = (union_weight(w, *n, &acc.0, acc.1)?, n + acc.1);
    }
    Ok(acc.0)
}

pub fn make_complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid edges")
}

pub fn make_path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid edges")
}

pub fn make_cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid edges")
}

/// Centre is vertex 0.
pub fn make_star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("valid edges")
}

/// Sides `0..p` and `p..p+q`.
pub fn make_complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::from_edges(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
        .expect("valid edges")
}

/// `K_4 ∪ K̄_(n-4)`.
pub fn make_qn(n: usize) -> Graph {
    assert!(n >= 4, "Q_n needs n >= 4");
    make_complete(4).disjoint_union(&Graph::empty(n - 4))
}

/// A family member together with its closed-form MS-number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Qmax(usize),
    Tree(Graph),
}

impl FamilySpec {
    pub fn weight(&self) -> Result<BigUint> {
        match self {
            FamilySpec::Complete(n) => w_complete(*n),
            FamilySpec::Path(n) => w_path(*n),
            FamilySpec::Cycle(n) => w_cycle(*n),
            FamilySpec::Star(n) => w_star(*n),
            FamilySpec::CompleteBipartite(p, q) => w_complete_bipartite(*p, *q),
            FamilySpec::Qmax(n) => w_qmax(*n),
            FamilySpec::Tree(t) => w_tree(t),
        }
    }

    /// The constructed graph; parameters are validated as in [`Self::weight`].
    pub fn graph(&self) -> Result<Graph> {
        self.weight()?;
        Ok(match self {
            FamilySpec::Complete(n) => make_complete(*n),
            FamilySpec::Path(n) => make_path(*n),
            FamilySpec::Cycle(n) => make_cycle(*n),
            FamilySpec::Star(n) => make_star(*n),
            FamilySpec::CompleteBipartite(p, q) => make_complete_bipartite(*p, *q),
            FamilySpec::Qmax(n) => make_qn(*n),
            FamilySpec::Tree(t) => t.clone(),
        })
    }

    /// Builds a numeric family from its name and parameters. `tree` cannot be
    /// built this way since it needs a graph.
    pub fn from_name(name: &str, params: &[usize]) -> Result<FamilySpec> {
        let family: Family = name.parse()?;
        let arity = if family == Family::CompleteBipartite {
            2
        } else {
            1
        };
        if family == Family::Tree {
            return Err(Error::InvalidParameter(
                "the tree family takes a graph, not numbers".into(),
            ));
        }
        if params.len() != arity {
            return Err(Error::InvalidParameter(format!(
                "{name} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(match family {
            Family::Complete => FamilySpec::Complete(params[0]),
            Family::Path => FamilySpec::Path(params[0]),
            Family::Cycle => FamilySpec::Cycle(params[0]),
            Family::Star => FamilySpec::Star(params[0]),
            Family::CompleteBipartite => FamilySpec::CompleteBipartite(params[0], params[1]),
            Family::Qmax => FamilySpec::Qmax(params[0]),
            Family::Tree => unreachable!(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    Qmax,
    Tree,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s {
            "complete" => Family::Complete,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "star" => Family::Star,
            "complete-bipartite" | "complete_bipartite" => Family::CompleteBipartite,
            "qmax" => Family::Qmax,
            "tree" => Family::Tree,
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Qmax => "qmax",
            Family::Tree => "tree",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::random_tree;
    use crate::graphstate::ms_number;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), big(10));
        assert_eq!(binomial(2, 3), big(0));
        assert_eq!(binomial(60, 30), big(118_264_581_564_861_424));
    }

    #[test]
    fn documented_values() {
        assert_eq!(w_complete(3).unwrap(), big(4));
        assert_eq!(w_complete(4).unwrap(), big(10));
        assert_eq!(w_complete(1).unwrap(), big(0));
        assert_eq!(w_path(2).unwrap(), big(1));
        assert_eq!(w_path(4).unwrap(), big(6));
        assert_eq!(w_path(5).unwrap(), big(12));
        assert_eq!(w_cycle(3).unwrap(), big(4));
        assert_eq!(w_cycle(4).unwrap(), big(4));
        assert_eq!(w_cycle(5).unwrap(), big(16));
        assert_eq!(w_star(2).unwrap(), big(1));
        assert_eq!(w_star(5).unwrap(), big(8));
        assert_eq!(w_star(3).unwrap(), w_path(3).unwrap());
        assert_eq!(w_complete_bipartite(1, 1).unwrap(), big(1));
        assert_eq!(w_complete_bipartite(2, 2).unwrap(), big(4));
        assert_eq!(w_complete_bipartite(1, 6).unwrap(), w_star(7).unwrap());
        assert_eq!(w_qmax(4).unwrap(), big(10));
        assert_eq!(w_qmax(5).unwrap(), big(20));
        assert_eq!(w_qmax(6).unwrap(), big(40));
        assert_eq!(w_tree(&make_path(2)).unwrap(), big(1));
        assert_eq!(w_tree(&make_star(5)).unwrap(), big(8));
        assert_eq!(w_tree(&make_path(5)).unwrap(), big(12));
    }

    #[test]
    fn parameter_errors() {
        assert!(w_complete(0).is_err());
        assert!(w_path(0).is_err());
        assert!(w_cycle(2).is_err());
        assert!(w_star(1).is_err());
        assert!(w_complete_bipartite(0, 3).is_err());
        assert!(w_qmax(3).is_err());
        assert!(w_tree(&make_cycle(4)).is_err());
    }

    #[test]
    fn union_examples() {
        assert_eq!(union_weight(&big(0), 3, &big(5), 4).unwrap(), big(8 * 5));
        assert_eq!(union_weight(&big(4), 3, &big(1), 2).unwrap(), big(16));
        assert_eq!(union_weight(&big(7), 4, &big(0), 0).unwrap(), big(7));
        assert!(union_weight(&big(9), 3, &big(0), 1).is_err());
    }

    #[test]
    fn union_brute_force_k3_p2() {
        // Count x in {0,1}^5 where f_K3(x1..x3) + x4 x5 = 1.
        let count = (0u32..32)
            .filter(|x| {
                let b = |i: u32| x >> i & 1;
                let k3 = b(0) & b(1) ^ b(0) & b(2) ^ b(1) & b(2);
                (k3 ^ (b(3) & b(4))) == 1
            })
            .count();
        assert_eq!(count, 16);
        let u = make_complete(3).disjoint_union(&make_path(2));
        assert_eq!(ms_number(&u), big(16));
    }

    #[test]
    fn complete_weights_even_from_three() {
        for n in 3..=40 {
            assert_eq!(w_complete(n).unwrap() % 2u32, big(0));
        }
    }

    #[test]
    fn families_match_general_algorithm() {
        for n in 1..=16 {
            assert_eq!(
                w_complete(n).unwrap(),
                ms_number(&make_complete(n)),
                "K_{n}"
            );
            assert_eq!(w_path(n).unwrap(), ms_number(&make_path(n)), "P_{n}");
        }
        for n in 3..=16 {
            assert_eq!(w_cycle(n).unwrap(), ms_number(&make_cycle(n)), "C_{n}");
        }
        for n in 2..=16 {
            assert_eq!(w_star(n).unwrap(), ms_number(&make_star(n)), "S_{n}");
        }
        for n in 4..=16 {
            assert_eq!(w_qmax(n).unwrap(), ms_number(&make_qn(n)), "Q_{n}");
        }
        for p in 1..16 {
            for q in 1..=16 - p {
                let g = make_complete_bipartite(p, q);
                assert_eq!(w_complete_bipartite(p, q).unwrap(), ms_number(&g));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in 1..=16 {
            let t = random_tree(&mut rng, n);
            assert_eq!(w_tree(&t).unwrap(), ms_number(&t));
        }
    }

    #[test]
    fn family_spec_dispatch() {
        let spec = FamilySpec::from_name("complete", &[3]).unwrap();
        assert_eq!(spec.weight().unwrap(), big(4));
        assert_eq!(spec.graph().unwrap(), make_complete(3));
        let spec = FamilySpec::from_name("complete-bipartite", &[2, 3]).unwrap();
        assert_eq!(spec.weight().unwrap(), big(8));
        assert!(FamilySpec::from_name("complete", &[1, 2]).is_err());
        assert!(FamilySpec::from_name("tree", &[3]).is_err());
        assert!(FamilySpec::from_name("wheel", &[3]).is_err());
        assert!(FamilySpec::Cycle(2).graph().is_err());
        let t = FamilySpec::Tree(make_star(4));
        assert_eq!(t.weight().unwrap(), big(4));
    }

    #[test]
    fn union_many_matches_pairwise() {
        let parts = vec![(big(4), 3), (big(1), 2), (big(0), 2)];
        let expect = union_weight(
            &big(4),
            3,
            &union_weight(&big(1), 2, &big(0), 2).unwrap(),
            4,
        )
        .unwrap();
        assert_eq!(union_weight_many(&parts).unwrap(), expect);
        assert_eq!(union_weight_many(&[]).unwrap(), big(0));
    }
}
