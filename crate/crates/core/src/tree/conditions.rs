use std::fmt;

use super::WeightedTree;

/// Target `k` and slack `g`; the search accepts any weight in `[k - g + 1, k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub k: u64,
    pub g: u64,
}

impl SearchParams {
    pub fn new(k: u64, g: u64) -> Self {
        Self { k, g }
    }

    /// Smallest accepted weight, clamped to 1 since every subtree weighs at least 1.
    pub fn lower(&self) -> u64 {
        self.k.saturating_sub(self.g) + 1
    }

    pub fn accepts(&self, weight: u64) -> bool {
        self.lower() <= weight && weight <= self.k
    }

    /// `N2`, the total weight of `tree`.
    pub fn n2(tree: &WeightedTree) -> i128 {
        tree.total_weight() as i128
    }

    /// Surplus `h = 2 N1 - N2`; negative when the average weight exceeds 2.
    pub fn h(tree: &WeightedTree) -> i128 {
        2 * tree.len() as i128 - tree.total_weight() as i128
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionFlag {
    /// `1 <= k <= N2`
    Range,
    /// `g + h > 2`
    Slack,
    /// `2k - 4g - h + 3 <= N2`
    Lower,
    /// `N2 <= 2k + g + h - 2`
    Upper,
    /// `c(v) <= k` for every vertex
    Cap,
}

impl ConditionFlag {
    pub const ALL: [ConditionFlag; 5] =
        [ConditionFlag::Range, ConditionFlag::Slack, ConditionFlag::Lower, ConditionFlag::Upper, ConditionFlag::Cap];

    pub fn name(self) -> &'static str {
        match self {
            ConditionFlag::Range => "range_ok",
            ConditionFlag::Slack => "slack_ok",
            ConditionFlag::Lower => "lower_ok",
            ConditionFlag::Upper => "upper_ok",
            ConditionFlag::Cap => "cap_ok",
        }
    }
}

/// Outcome of checking the hypotheses under which a subtree of weight in
/// `[k - g + 1, k]` is guaranteed to exist and be found by the Euler-tour search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    pub n1: usize,
    pub n2: u64,
    pub h: i128,
    pub k: u64,
    pub g: u64,
    pub range_ok: bool,
    pub slack_ok: bool,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub cap_ok: bool,
    pub overall: bool,
}

impl ConditionReport {
    pub fn flag(&self, flag: ConditionFlag) -> bool {
        match flag {
            ConditionFlag::Range => self.range_ok,
            ConditionFlag::Slack => self.slack_ok,
            ConditionFlag::Lower => self.lower_ok,
            ConditionFlag::Upper => self.upper_ok,
            ConditionFlag::Cap => self.cap_ok,
        }
    }

    pub fn failed(&self) -> Vec<ConditionFlag> {
        ConditionFlag::ALL.into_iter().filter(|&f| !self.flag(f)).collect()
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N1={} N2={} h={} k={} g={}", self.n1, self.n2, self.h, self.k, self.g)?;
        for flag in ConditionFlag::ALL {
            write!(f, " {}={}", flag.name(), self.flag(flag))?;
        }
        write!(f, " overall={}", self.overall)
    }
}

/// Evaluates each hypothesis exactly as an integer inequality.
///
/// Depends only on `N1`, the weight multiset, `k` and `g`.
pub fn check_conditions(tree: &WeightedTree, k: u64, g: u64) -> ConditionReport {
    let n2 = SearchParams::n2(tree);
    let h = SearchParams::h(tree);
    let (ki, gi) = (k as i128, g as i128);
    let range_ok = 1 <= ki && ki <= n2;
    let slack_ok = gi + h > 2;
    let lower_ok = 2 * ki - 4 * gi - h + 3 <= n2;
    let upper_ok = n2 <= 2 * ki + gi + h - 2;
    let cap_ok = tree.max_weight() <= k;
    ConditionReport {
        n1: tree.len(),
        n2: tree.total_weight(),
        h,
        k,
        g,
        range_ok,
        slack_ok,
        lower_ok,
        upper_ok,
        cap_ok,
        overall: range_ok && slack_ok && lower_ok && upper_ok && cap_ok,
    }
}
