//! Instance families where exactly one hypothesis fails and no subtree of
//! the target weight exists, plus a seeded random tree generator.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ConditionFlag, TreeError, WeightedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TightFamily {
    /// Star of order `2p`, center weight 1, leaves weight 2; `k = 2p`, `g = 1`.
    StarGh,
    /// Path of order `p + 2q`: `q` twos, `p` ones, `q` twos; `k = p + 2q + 1`, `g = 1`.
    PathLower,
    /// Path of order `2p + 3` with middle weight `p + 2` flanked by twos; `k = p + 3`, `g = 1`.
    PathUpper,
    /// Star of order `p + 1`, center weight `q + 1`, unit leaves; `k = q`, `g = 2`.
    StarCap,
}

impl TightFamily {
    pub const ALL: [TightFamily; 4] =
        [TightFamily::StarGh, TightFamily::PathLower, TightFamily::PathUpper, TightFamily::StarCap];

    /// The single hypothesis this family violates.
    pub fn violated(self) -> ConditionFlag {
        match self {
            TightFamily::StarGh => ConditionFlag::Slack,
            TightFamily::PathLower => ConditionFlag::Lower,
            TightFamily::PathUpper => ConditionFlag::Upper,
            TightFamily::StarCap => ConditionFlag::Cap,
        }
    }

    pub fn uses_q(self) -> bool {
        matches!(self, TightFamily::PathLower | TightFamily::StarCap)
    }

    pub fn name(self) -> &'static str {
        match self {
            TightFamily::StarGh => "star_gh",
            TightFamily::PathLower => "path_lower",
            TightFamily::PathUpper => "path_upper",
            TightFamily::StarCap => "star_cap",
        }
    }

    pub fn generate(self, p: u64, q: Option<u64>) -> Result<TightInstance, TreeError> {
        if p <= 1 {
            return Err(TreeError::BadFamilyParams(format!("{}: need p > 1, got {p}", self.name())));
        }
        if p > 1 << 24 {
            return Err(TreeError::BadFamilyParams(format!("{}: p = {p} is too large", self.name())));
        }
        let need_q = || {
            q.ok_or_else(|| TreeError::BadFamilyParams(format!("{}: parameter q is required", self.name())))
        };
        let (tree, k, g) = match self {
            TightFamily::StarGh => {
                let leaves = vec![2; (2 * p - 1) as usize];
                (WeightedTree::star(1, &leaves)?, 2 * p, 1)
            }
            TightFamily::PathLower => {
                let q = need_q()?;
                if !(1..=1 << 24).contains(&q) {
                    return Err(TreeError::BadFamilyParams(format!("path_lower: need q >= 1, got {q}")));
                }
                let mut w = vec![2; q as usize];
                w.extend(std::iter::repeat_n(1, p as usize));
                w.extend(std::iter::repeat_n(2, q as usize));
                (WeightedTree::path(w)?, p + 2 * q + 1, 1)
            }
            TightFamily::PathUpper => {
                // v_1 .. v_{2p+3}; v_{p+2} heavy, v_{p+1} and v_{p+3} weigh 2.
                let mut w = vec![1; (2 * p + 3) as usize];
                w[p as usize] = 2;
                w[p as usize + 1] = p + 2;
                w[p as usize + 2] = 2;
                (WeightedTree::path(w)?, p + 3, 1)
            }
            TightFamily::StarCap => {
                let q = need_q()?;
                if !(2 < q && q < p + 2) {
                    return Err(TreeError::BadFamilyParams(format!("star_cap: need 2 < q < p + 2, got q = {q}")));
                }
                (WeightedTree::star(q + 1, &vec![1; p as usize])?, q, 2)
            }
        };
        Ok(TightInstance { family: self, p, q: if self.uses_q() { q } else { None }, tree, k, g })
    }
}

impl fmt::Display for TightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TightFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('-', "_").as_str() {
            "star_gh" | "tight_star" => Ok(TightFamily::StarGh),
            "path_lower" | "tight_path_lower" => Ok(TightFamily::PathLower),
            "path_upper" | "tight_path_upper" => Ok(TightFamily::PathUpper),
            "star_cap" | "tight_star_cap" => Ok(TightFamily::StarCap),
            other => Err(format!("unknown tight family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightInstance {
    pub family: TightFamily,
    pub p: u64,
    pub q: Option<u64>,
    pub tree: WeightedTree,
    pub k: u64,
    pub g: u64,
}

/// Uniform random recursive tree on `n` vertices with weights in `1..=max_weight`.
/// Rotation orders are shuffled. Identical arguments give identical trees.
pub fn random_tree(n: usize, max_weight: u64, seed: u64) -> Result<WeightedTree, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    if max_weight == 0 {
        return Err(TreeError::BadFamilyParams("max weight must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
    let mut adjacency = vec![Vec::new(); n];
    for v in 1..n {
        let p = rng.gen_range(0..v);
        adjacency[v].push(p);
        adjacency[p].push(v);
    }
    for nbrs in adjacency.iter_mut() {
        nbrs.shuffle(&mut rng);
    }
    WeightedTree::new(weights, adjacency)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{check_conditions, oracle_subtree_weights};

    #[test]
    fn star_gh_p4() {
        let inst = TightFamily::StarGh.generate(4, None).unwrap();
        assert_eq!((inst.tree.len(), inst.k, inst.g), (8, 8, 1));
        assert!(!oracle_subtree_weights(&inst.tree).unwrap().contains(&8));
    }

    #[test]
    fn path_lower_p2_q1() {
        let inst = TightFamily::PathLower.generate(2, Some(1)).unwrap();
        assert_eq!(inst.tree.weights(), &[2, 1, 1, 2]);
        assert_eq!((inst.k, inst.g), (5, 1));
        let r = check_conditions(&inst.tree, inst.k, inst.g);
        assert_eq!(r.h, 2);
        // N2 = 2k - 4g - h + 2
        assert_eq!(r.n2 as i128, 2 * 5 - 4 - r.h + 2);
        assert!(!oracle_subtree_weights(&inst.tree).unwrap().contains(&5));
    }

    #[test]
    fn path_upper_p2() {
        let inst = TightFamily::PathUpper.generate(2, None).unwrap();
        assert_eq!(inst.tree.weights(), &[1, 1, 2, 4, 2, 1, 1]);
        assert_eq!((inst.k, inst.g), (5, 1));
        assert_eq!(check_conditions(&inst.tree, 5, 1).failed(), vec![ConditionFlag::Upper]);
    }

    #[test]
    fn star_cap_p4_q3() {
        let inst = TightFamily::StarCap.generate(4, Some(3)).unwrap();
        assert_eq!(inst.tree.len(), 5);
        assert_eq!(inst.tree.weight(0), 4);
        assert_eq!((inst.k, inst.g), (3, 2));
        let w = oracle_subtree_weights(&inst.tree).unwrap();
        assert!(!w.contains(&2) && !w.contains(&3));
    }

    #[test]
    fn parameter_checks() {
        assert!(TightFamily::StarGh.generate(1, None).is_err());
        assert!(TightFamily::PathLower.generate(3, None).is_err());
        assert!(TightFamily::PathLower.generate(3, Some(0)).is_err());
        assert!(TightFamily::StarCap.generate(4, Some(2)).is_err());
        assert!(TightFamily::StarCap.generate(4, Some(6)).is_err());
        assert!(TightFamily::StarCap.generate(4, Some(5)).is_ok());
    }

    #[test]
    fn names_parse_back() {
        for f in TightFamily::ALL {
            assert_eq!(f.name().parse::<TightFamily>().unwrap(), f);
        }
        assert_eq!("tight-star".parse::<TightFamily>().unwrap(), TightFamily::StarGh);
    }

    #[test]
    fn random_tree_is_deterministic() {
        let a = random_tree(30, 6, 7).unwrap();
        let b = random_tree(30, 6, 7).unwrap();
        let c = random_tree(30, 6, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.weights().iter().all(|&w| (1..=6).contains(&w)));
    }
}
