//! Ground-set combinatorics: subsets as integer bitmasks, partition
//! enumeration, and the optimal-partition dynamic program shared by the
//! rest of the crate.
//!
//! Atom `i` of a ground set corresponds to bit `i` of a [`Subset`], so
//! disjointness, union and containment are single machine operations, and
//! a table indexed by subsets is a flat `Vec` of length `2^n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on atom count. Subset tables are `2^n` entries and the
/// partition DP does `3^n` work, so 16 is the desk-scale ceiling.
pub const MAX_ATOMS: usize = 16;

/// Cap for materializing all partitions of a carrier at once
/// (Bell(12) ~ 4.2e6). The visitor API has no cap.
const ENUMERATION_CAP: usize = 12;

/// An index set over the atoms of a ground set, encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.atoms() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    /// All atoms of an `n`-atom ground set.
    pub fn full(n: usize) -> Subset {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, atom: usize) -> bool {
        self.0 >> atom & 1 == 1
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest set atom, if any.
    pub fn lowest_atom(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate over set atoms in increasing order.
    pub fn atoms(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

/// A finite ground set of `n` atoms, optionally labeled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSet {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<GroundSet> {
        if n == 0 || n > MAX_ATOMS {
            return Err(Error::BadGroundSize { got: n, max: MAX_ATOMS });
        }
        Ok(GroundSet { n, labels: None })
    }

    pub fn with_labels(n: usize, labels: Vec<String>) -> Result<GroundSet> {
        let mut g = GroundSet::new(n)?;
        if labels.len() != n {
            return Err(Error::InvalidParam {
                name: "labels",
                reason: format!("{} labels for {} atoms", labels.len(), n),
            });
        }
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of subsets, `2^n`.
    pub fn table_size(&self) -> usize {
        1 << self.n
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange { bits: s.0, n: self.n })
        }
    }
}

/// A partition of a carrier subset into pairwise-disjoint nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    carrier: Subset,
    blocks: Vec<Subset>,
}

impl Partition {
    pub fn new(carrier: Subset, blocks: Vec<Subset>) -> Result<Partition> {
        let mut seen = Subset::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::BadPartition { reason: "empty block".into() });
            }
            if !seen.is_disjoint(b) {
                return Err(Error::BadPartition {
                    reason: format!("block {b:?} overlaps earlier blocks"),
                });
            }
            seen = seen.union(b);
        }
        if seen != carrier {
            return Err(Error::BadPartition {
                reason: format!("blocks cover {seen:?}, carrier is {carrier:?}"),
            });
        }
        Ok(Partition { carrier, blocks })
    }

    pub fn carrier(&self) -> Subset {
        self.carrier
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }
}

/// All `2^n` subsets of the ground set, in ascending canonical encoding.
pub fn enumerate_subsets(g: &GroundSet) -> impl Iterator<Item = Subset> {
    (0..g.table_size() as u32).map(Subset)
}

/// Iterate over the submasks of `mask`, including the empty set, in
/// descending numeric order.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut cur = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            cur = (cur - 1) & mask;
        }
        Some(out)
    })
}

fn visit_partitions(rest: Subset, acc: &mut Vec<Subset>, f: &mut impl FnMut(&[Subset])) {
    let Some(low) = rest.lowest_atom() else {
        f(acc);
        return;
    };
    // Anchor the next block at the lowest remaining atom so each partition
    // is produced exactly once.
    let low_bit = Subset::singleton(low);
    let others = rest.difference(low_bit);
    for sub in submasks(others.0) {
        let block = Subset(sub).union(low_bit);
        acc.push(block);
        visit_partitions(rest.difference(block), acc, f);
        acc.pop();
    }
}

/// Visit every partition of `carrier` exactly once.
pub fn for_each_partition(carrier: Subset, mut f: impl FnMut(&[Subset])) -> Result<()> {
    if carrier.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let mut acc = Vec::with_capacity(carrier.len());
    visit_partitions(carrier, &mut acc, &mut f);
    Ok(())
}

/// Materialize every partition of `carrier`. The count equals the Bell
/// number of `|carrier|`.
pub fn enumerate_partitions(carrier: Subset) -> Result<Vec<Partition>> {
    if carrier.len() > ENUMERATION_CAP {
        return Err(Error::TooManyAtoms { got: carrier.len(), max: ENUMERATION_CAP });
    }
    let mut out = Vec::new();
    for_each_partition(carrier, |blocks| {
        out.push(Partition { carrier, blocks: blocks.to_vec() });
    })?;
    Ok(out)
}

/// Visit every unordered pair of disjoint nonempty subsets exactly once.
/// Total work is on the order of `3^n`.
pub fn for_each_disjoint_pair(n: usize, mut f: impl FnMut(Subset, Subset)) {
    let full = Subset::full(n);
    for a in 1..=full.0 {
        let complement = full.0 & !a;
        for b in submasks(complement) {
            if b > a {
                f(Subset(a), Subset(b));
            }
        }
    }
}

/// Direction of the optimal-partition search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptMode {
    Max,
    Min,
}

impl OptMode {
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            OptMode::Max => a > b,
            OptMode::Min => a < b,
        }
    }

    fn worst(self) -> f64 {
        match self {
            OptMode::Max => f64::NEG_INFINITY,
            OptMode::Min => f64::INFINITY,
        }
    }
}

/// Optimum of `sum over blocks of block_score(block)` over all partitions
/// of `carrier`, with a partition achieving it.
///
/// DP over submasks: each subproblem's first block is anchored at the
/// lowest set atom, for `3^n` total work.
pub fn best_partition(
    carrier: Subset,
    block_score: impl Fn(Subset) -> f64,
    mode: OptMode,
) -> Result<(f64, Partition)> {
    if carrier.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let table = 1usize << (32 - carrier.0.leading_zeros()).max(1);
    let mut dp = vec![mode.worst(); table.max(carrier.0 as usize + 1)];
    let mut choice = vec![0u32; dp.len()];
    dp[0] = 0.0;

    // Ascending numeric order visits every S after all of its subsets.
    for s in 1..=carrier.0 {
        if s & !carrier.0 != 0 {
            continue;
        }
        let low = 1u32 << s.trailing_zeros();
        let others = s & !low;
        for sub in submasks(others) {
            let block = sub | low;
            let score = block_score(Subset(block));
            if !score.is_finite() {
                return Err(Error::NonFiniteScore { subset: block });
            }
            let cand = score + dp[(s & !block) as usize];
            if mode.better(cand, dp[s as usize]) {
                dp[s as usize] = cand;
                choice[s as usize] = block;
            }
        }
    }

    let mut blocks = Vec::new();
    let mut s = carrier.0;
    while s != 0 {
        let block = choice[s as usize];
        blocks.push(Subset(block));
        s &= !block;
    }
    let value = dp[carrier.0 as usize];
    Ok((value, Partition { carrier, blocks }))
}

/// Partition-envelope table: for every subset `S` of the `n`-atom ground
/// set, the optimum of `sum block_score(block)` over all partitions of
/// `S`, with the empty set mapped to zero. One `3^n` pass covers all
/// carriers at once.
pub fn partition_envelope_table(
    n: usize,
    block_score: impl Fn(Subset) -> f64,
    mode: OptMode,
) -> Result<Vec<f64>> {
    let size = 1usize << n;
    let mut dp = vec![0.0f64; size];
    for s in 1..size as u32 {
        let low = 1u32 << s.trailing_zeros();
        let others = s & !low;
        let mut best = mode.worst();
        for sub in submasks(others) {
            let block = sub | low;
            let score = block_score(Subset(block));
            if !score.is_finite() {
                return Err(Error::NonFiniteScore { subset: block });
            }
            let cand = score + dp[(s & !block) as usize];
            if mode.better(cand, best) {
                best = cand;
            }
        }
        dp[s as usize] = best;
    }
    Ok(dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Independent Bell-number oracle via the Bell triangle.
    fn bell(k: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 1..=k {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let prev = *next.last().unwrap();
                next.push(prev + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn subset_enumeration_counts() {
        for (n, want) in [(1usize, 2usize), (3, 8), (4, 16)] {
            let g = GroundSet::new(n).unwrap();
            let all: Vec<Subset> = enumerate_subsets(&g).collect();
            assert_eq!(all.len(), want);
            let mut seen = std::collections::HashSet::new();
            for s in &all {
                assert!(seen.insert(s.0), "duplicate subset");
                assert!(s.is_subset_of(g.full()));
            }
        }
        let g = GroundSet::new(1).unwrap();
        let all: Vec<Subset> = enumerate_subsets(&g).collect();
        assert_eq!(all, vec![Subset::EMPTY, Subset::singleton(0)]);
    }

    #[test]
    fn ground_set_size_limits() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(17).is_err());
        assert!(GroundSet::new(16).is_ok());
    }

    #[test]
    fn partition_counts_match_bell_numbers() {
        // |carrier| = 4 -> 15 and |carrier| = 5 -> 52, plus the Bell
        // triangle cross-check up to 6 atoms.
        assert_eq!(enumerate_partitions(Subset::full(4)).unwrap().len(), 15);
        assert_eq!(enumerate_partitions(Subset::full(5)).unwrap().len(), 52);
        assert_eq!(enumerate_partitions(Subset::singleton(2)).unwrap().len(), 1);
        for k in 1..=6 {
            let parts = enumerate_partitions(Subset::full(k)).unwrap();
            assert_eq!(parts.len() as u64, bell(k), "Bell({k})");
            let mut seen = std::collections::HashSet::new();
            for p in &parts {
                let mut blocks: Vec<u32> = p.blocks().iter().map(|b| b.0).collect();
                blocks.sort_unstable();
                assert!(seen.insert(blocks), "duplicate partition");
            }
        }
    }

    #[test]
    fn partition_enumeration_rejects_empty_carrier() {
        assert!(matches!(enumerate_partitions(Subset::EMPTY), Err(Error::EmptyCarrier)));
        assert!(matches!(
            for_each_partition(Subset::EMPTY, |_| {}),
            Err(Error::EmptyCarrier)
        ));
    }

    #[test]
    fn best_partition_additive_scores_tie() {
        let w = [0.3, 1.2, 0.8, 2.5];
        let score = |s: Subset| s.atoms().map(|i| w[i]).sum::<f64>();
        let carrier = Subset::full(4);
        let total: f64 = w.iter().sum();
        for mode in [OptMode::Max, OptMode::Min] {
            let (v, p) = best_partition(carrier, score, mode).unwrap();
            assert!((v - total).abs() < 1e-12);
            assert_eq!(
                p.blocks().iter().fold(Subset::EMPTY, |a, &b| a.union(b)),
                carrier
            );
        }
    }

    #[test]
    fn best_partition_constant_scores_prefer_singletons() {
        let (v, p) = best_partition(Subset::full(4), |_| 1.0, OptMode::Max).unwrap();
        assert_eq!(v, 4.0);
        assert_eq!(p.blocks().len(), 4);
    }

    #[test]
    fn best_partition_matches_exhaustive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5usize {
            for _ in 0..20 {
                let scores: Vec<f64> = (0..1usize << n).map(|_| rng.gen_range(-2.0..2.0)).collect();
                let score = |s: Subset| scores[s.0 as usize];
                let carrier = Subset::full(n);
                for mode in [OptMode::Max, OptMode::Min] {
                    let mut brute = mode.worst();
                    for_each_partition(carrier, |blocks| {
                        let v: f64 = blocks.iter().map(|&b| score(b)).sum();
                        if mode.better(v, brute) {
                            brute = v;
                        }
                    })
                    .unwrap();
                    let (dp, part) = best_partition(carrier, score, mode).unwrap();
                    assert!((dp - brute).abs() < 1e-12, "n={n} {mode:?}: {dp} vs {brute}");
                    let achieved: f64 = part.blocks().iter().map(|&b| score(b)).sum();
                    assert!((achieved - dp).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn best_partition_invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 5usize;
        for _ in 0..10 {
            let scores: Vec<f64> = (0..1usize << n).map(|_| rng.gen_range(0.0..3.0)).collect();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let relabel = |s: Subset| {
                let mut out = 0u32;
                for i in s.atoms() {
                    out |= 1 << perm[i];
                }
                Subset(out)
            };
            let inverse: Vec<usize> = {
                let mut inv = vec![0; n];
                for (i, &pi) in perm.iter().enumerate() {
                    inv[pi] = i;
                }
                inv
            };
            let unrelabel = |s: Subset| {
                let mut out = 0u32;
                for i in s.atoms() {
                    out |= 1 << inverse[i];
                }
                Subset(out)
            };
            let permuted_score = |s: Subset| scores[unrelabel(s).0 as usize];
            let (v0, _) = best_partition(Subset::full(n), |s| scores[s.0 as usize], OptMode::Max).unwrap();
            let (v1, _) = best_partition(Subset::full(n), permuted_score, OptMode::Max).unwrap();
            assert!((v0 - v1).abs() < 1e-12);
            let _ = relabel; // direction used implicitly through its inverse
        }
    }

    #[test]
    fn best_partition_rejects_non_finite_scores() {
        let score = |s: Subset| if s.len() == 2 { f64::NAN } else { 1.0 };
        assert!(matches!(
            best_partition(Subset::full(3), score, OptMode::Max),
            Err(Error::NonFiniteScore { .. })
        ));
    }

    #[test]
    fn envelope_table_matches_per_carrier_dp() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 5usize;
        let scores: Vec<f64> = (0..1usize << n).map(|_| rng.gen_range(-1.0..2.0)).collect();
        for mode in [OptMode::Max, OptMode::Min] {
            let table = partition_envelope_table(n, |s| scores[s.0 as usize], mode).unwrap();
            assert_eq!(table[0], 0.0);
            for s in 1..1u32 << n {
                let (v, _) = best_partition(Subset(s), |b| scores[b.0 as usize], mode).unwrap();
                assert!((table[s as usize] - v).abs() < 1e-12);
            }
        }
    }
}
