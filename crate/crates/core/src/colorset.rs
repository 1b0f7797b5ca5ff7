//! Subsets of the connection indices and groups of them under symmetric
//! difference.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A subset `I` of `{0, .., rank}`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorSet {
    bits: u32,
    rank: usize,
}

impl ColorSet {
    pub const MAX_RANK: usize = 30;

    pub fn from_bits(bits: u32, rank: usize) -> Result<Self> {
        if rank > Self::MAX_RANK || bits >> (rank + 1) != 0 {
            return Err(Error::ColorSetOutOfRange(rank));
        }
        Ok(Self { bits, rank })
    }

    pub fn empty(rank: usize) -> Self {
        Self { bits: 0, rank }
    }

    /// `R = {0, .., rank}`.
    pub fn full(rank: usize) -> Self {
        Self {
            bits: (1u32 << (rank + 1)) - 1,
            rank,
        }
    }

    pub fn from_indices(indices: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i > rank {
                return Err(Error::ColorSetOutOfRange(rank));
            }
            bits |= 1 << i;
        }
        Self::from_bits(bits, rank)
    }

    pub fn singleton(i: usize, rank: usize) -> Self {
        assert!(i <= rank);
        Self { bits: 1 << i, rank }
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i <= self.rank && self.bits >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.rank)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.rank).filter(|&i| self.contains(i))
    }

    /// `I Δ J`.
    pub fn sym_diff(&self, other: &ColorSet) -> ColorSet {
        debug_assert_eq!(self.rank, other.rank);
        Self {
            bits: self.bits ^ other.bits,
            rank: self.rank,
        }
    }

    /// `R \ I`.
    pub fn complement(&self) -> ColorSet {
        self.sym_diff(&Self::full(self.rank))
    }

    /// `{rank - i : i in I}`, the index reversal used by the dual.
    pub fn reversed(&self) -> ColorSet {
        let bits = self
            .indices()
            .fold(0u32, |acc, i| acc | 1 << (self.rank - i));
        Self {
            bits,
            rank: self.rank,
        }
    }

    /// All `2^(rank+1)` subsets in bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = ColorSet> {
        (0..1u32 << (rank + 1)).map(move |bits| ColorSet { bits, rank })
    }

    /// Parses the digit syntax: `02` is `{0, 2}`, `e` is the empty set.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Self::empty(rank));
        }
        let bad = || Error::BadParameters(alloc::format!("color set {s:?} for rank {rank}"));
        if s.is_empty() || rank > 9 {
            return Err(bad());
        }
        let mut bits = 0u32;
        for c in s.chars() {
            let d = c.to_digit(10).ok_or_else(bad)? as usize;
            if d > rank || bits >> d & 1 == 1 {
                return Err(bad());
            }
            bits |= 1 << d;
        }
        Ok(Self { bits, rank })
    }

}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("e");
        }
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl PartialOrd for ColorSet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Size first, then the index sequence (the digit string for ranks below 10).
impl Ord for ColorSet {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

/// A subgroup of the power set of `{0, .., rank}` under `Δ`: the sets `I` for
/// which a map is `I`-colorable, or a target group for a construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringGroup {
    rank: usize,
    // sorted
    members: Vec<ColorSet>,
}

impl ColoringGroup {
    /// Checks the subgroup invariants: contains `∅`, closed under `Δ`, and
    /// (following from those) has power-of-two size.
    pub fn new(rank: usize, mut members: Vec<ColorSet>) -> Result<Self> {
        if members.iter().any(|m| m.rank != rank) {
            return Err(Error::ColorSetOutOfRange(rank));
        }
        members.sort();
        members.dedup();
        if !members.contains(&ColorSet::empty(rank)) {
            return Err(Error::NotASubgroup("missing the empty set".into()));
        }
        for a in &members {
            for b in &members {
                if members.binary_search(&a.sym_diff(b)).is_err() {
                    return Err(Error::NotASubgroup(alloc::format!(
                        "{a} Δ {b} is missing"
                    )));
                }
            }
        }
        debug_assert!(members.len().is_power_of_two());
        Ok(Self { rank, members })
    }

    pub fn trivial(rank: usize) -> Self {
        Self {
            rank,
            members: alloc::vec![ColorSet::empty(rank)],
        }
    }

    /// The whole power set.
    pub fn full(rank: usize) -> Self {
        let mut members: Vec<_> = ColorSet::all(rank).collect();
        members.sort();
        Self { rank, members }
    }

    /// Closure of `generators` under `Δ`.
    pub fn generated_by(rank: usize, generators: &[ColorSet]) -> Self {
        let mut bits: Vec<u32> = alloc::vec![0];
        for g in generators {
            debug_assert_eq!(g.rank, rank);
            if bits.contains(&g.bits) {
                continue;
            }
            let extra: Vec<u32> = bits.iter().map(|b| b ^ g.bits).collect();
            bits.extend(extra);
        }
        let mut members: Vec<ColorSet> = bits.into_iter().map(|bits| ColorSet { bits, rank }).collect();
        members.sort();
        Self { rank, members }
    }

    /// `⟨self, extra⟩`.
    pub fn extended_by(&self, extra: &ColorSet) -> Self {
        let mut gens = self.members.clone();
        gens.push(*extra);
        Self::generated_by(self.rank, &gens)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn members(&self) -> &[ColorSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, set: &ColorSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &ColoringGroup) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    pub fn intersection(&self, other: &ColoringGroup) -> ColoringGroup {
        Self {
            rank: self.rank,
            members: self
                .members
                .iter()
                .copied()
                .filter(|m| other.contains(m))
                .collect(),
        }
    }

    /// Contains `R`; such groups only occur on orientable surfaces.
    pub fn is_orientable(&self) -> bool {
        self.contains(&ColorSet::full(self.rank))
    }

    /// Parses comma-separated color sets, e.g. `e,0,12,012`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let members = s
            .split(',')
            .map(|t| ColorSet::parse(t, rank))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, members)
    }

    /// Every subgroup of the power set of `{0, .., rank}`, ordered by size and
    /// then by member list. Built by closing each known subgroup under one
    /// more generator until nothing new appears.
    pub fn all_subgroups(rank: usize) -> Vec<ColoringGroup> {
        assert!(rank <= 4, "subgroup enumeration is limited to rank <= 4");
        let mut found = alloc::vec![Self::trivial(rank)];
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for g in ColorSet::all(rank) {
                    if h.contains(&g) {
                        continue;
                    }
                    let bigger = h.extended_by(&g);
                    if !found.contains(&bigger) {
                        found.push(bigger.clone());
                        next.push(bigger);
                    }
                }
            }
            frontier = next;
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
        found
    }
}

impl fmt::Display for ColoringGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
