//! Flag systems: validation, cells, surfaces, words, isomorphisms and covers.

use alloc::{collections::VecDeque, vec, vec::Vec};
use core::fmt;

use crate::{
    coloring::find_coloring,
    colorset::ColorSet,
    parity::UnionFind,
    Error, Result,
};

/// A map (rank 2) or maniplex (rank `n`): `n + 1` fixed-point-free involutions
/// on the flags `0..N`, far-apart ones commuting and disjoint, acting
/// transitively.
///
/// Values can only be obtained through [`FlagSystem::new`], which checks all
/// of that; they are immutable afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagSystem {
    rank: usize,
    flag_count: usize,
    // r_i(f) lives at conn[i * flag_count + f]
    conn: Vec<usize>,
}

impl fmt::Debug for FlagSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagSystem")
            .field("rank", &self.rank)
            .field("flags", &self.flag_count)
            .finish()
    }
}

impl FlagSystem {
    /// Validate raw connection arrays.
    ///
    /// Checks run in this order: array shape and range, then each `r_i` being
    /// a fixed-point-free involution, then transitivity, then commuting and
    /// disjointness of `r_i, r_j` for `j >= i + 2`.
    pub fn new(rank: usize, connections: Vec<Vec<usize>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Empty);
        }
        if connections.len() != rank + 1 {
            return Err(Error::ConnectionCount {
                rank,
                expected: rank + 1,
                found: connections.len(),
            });
        }
        let n = connections[0].len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut conn = Vec::with_capacity((rank + 1) * n);
        for (i, r) in connections.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::BadLength {
                    connection: i,
                    expected: n,
                    found: r.len(),
                });
            }
            if let Some((f, &v)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::OutOfRange {
                    connection: i,
                    flag: f,
                    value: v,
                });
            }
            conn.extend(r);
        }
        let sys = Self {
            rank,
            flag_count: n,
            conn,
        };
        sys.check()?;
        Ok(sys)
    }

    fn check(&self) -> Result<()> {
        let n = self.flag_count;
        for i in 0..=self.rank {
            for f in 0..n {
                let g = self.r(i, f);
                if g == f {
                    return Err(Error::FixedPoint(i, f));
                }
                if self.r(i, g) != f {
                    return Err(Error::NotInvolution(i, f));
                }
            }
        }
        let components = self.component_count();
        if components != 1 {
            return Err(Error::Disconnected(components));
        }
        for i in 0..=self.rank {
            for j in i + 2..=self.rank {
                for f in 0..n {
                    if self.r(i, f) == self.r(j, f) {
                        return Err(Error::NotDisjoint(i, j, f));
                    }
                    if self.r(i, self.r(j, f)) != self.r(j, self.r(i, f)) {
                        return Err(Error::NonCommuting(i, j, f));
                    }
                }
            }
        }
        Ok(())
    }

    fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.flag_count);
        for i in 0..=self.rank {
            for f in 0..self.flag_count {
                uf.union(f, self.r(i, f));
            }
        }
        uf.labels().1
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn flag_count(&self) -> usize {
        self.flag_count
    }

    /// `f · r_i`.
    #[inline]
    pub fn r(&self, i: usize, f: usize) -> usize {
        self.conn[i * self.flag_count + f]
    }

    /// The array of connection `i`.
    pub fn connection(&self, i: usize) -> &[usize] {
        &self.conn[i * self.flag_count..(i + 1) * self.flag_count]
    }

    pub fn connections(&self) -> Vec<Vec<usize>> {
        (0..=self.rank).map(|i| self.connection(i).to_vec()).collect()
    }

    /// Set `{0, .., rank}`.
    pub fn full_set(&self) -> ColorSet {
        ColorSet::full(self.rank)
    }

    /// For every flag, the index of its `i`-cell; cells are numbered by their
    /// smallest flag. Also returns the number of cells.
    pub fn cell_labels(&self, dim: usize) -> (Vec<usize>, usize) {
        assert!(dim <= self.rank, "cell dimension {dim} above rank");
        let mut uf = UnionFind::new(self.flag_count);
        for j in (0..=self.rank).filter(|&j| j != dim) {
            for f in 0..self.flag_count {
                uf.union(f, self.r(j, f));
            }
        }
        uf.labels()
    }

    /// The `i`-faces: orbits of the connections other than `r_i`.
    pub fn cells(&self, dim: usize) -> Vec<Cell> {
        let (labels, count) = self.cell_labels(dim);
        let mut cells: Vec<Cell> = (0..count)
            .map(|_| Cell {
                dimension: dim,
                flags: Vec::new(),
            })
            .collect();
        for (f, &c) in labels.iter().enumerate() {
            cells[c].flags.push(f);
        }
        cells
    }

    /// The `dim`-face containing flag `f`.
    pub fn cell_containing(&self, dim: usize, f: usize) -> Result<Cell> {
        if f >= self.flag_count {
            return Err(Error::FlagOutOfRange(f));
        }
        let (labels, _) = self.cell_labels(dim);
        Ok(Cell {
            dimension: dim,
            flags: (0..self.flag_count).filter(|&g| labels[g] == labels[f]).collect(),
        })
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.cell_labels(dim).1
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> Result<i64> {
        self.require_rank_two()?;
        Ok(self.cell_count(0) as i64 - self.cell_count(1) as i64 + self.cell_count(2) as i64)
    }

    pub fn surface_signature(&self) -> Result<SurfaceSignature> {
        let chi = self.euler_characteristic()?;
        let orientable = find_coloring(self, &self.full_set()).is_some();
        SurfaceSignature::from_parts(orientable, chi)
    }

    pub(crate) fn require_rank_two(&self) -> Result<()> {
        if self.rank != 2 {
            return Err(Error::RankNotTwo(self.rank));
        }
        Ok(())
    }

    /// `f · r_{i1} · ... · r_{ik}`, applied left to right.
    pub fn apply_word(&self, f: usize, word: &FlagWord) -> Result<usize> {
        if f >= self.flag_count {
            return Err(Error::FlagOutOfRange(f));
        }
        if let Some(&bad) = word.letters().iter().find(|&&l| l > self.rank) {
            return Err(Error::BadLetter(bad));
        }
        Ok(word.letters().iter().fold(f, |g, &i| self.r(i, g)))
    }

    /// Extend `base -> image` to a map `self -> other` commuting with the
    /// connections, if one exists.
    fn transport(&self, other: &FlagSystem, base: usize, image: usize) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.flag_count];
        map[base] = image;
        let mut queue = VecDeque::from([base]);
        while let Some(f) = queue.pop_front() {
            let g = map[f];
            for i in 0..=self.rank {
                let (f2, g2) = (self.r(i, f), other.r(i, g));
                if map[f2] == usize::MAX {
                    map[f2] = g2;
                    queue.push_back(f2);
                } else if map[f2] != g2 {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// A flag bijection `phi` with `phi(f r_i) = phi(f) s_i`, if the two systems
    /// are isomorphic.
    ///
    /// Flag 0 is sent to each candidate in turn and the map is extended
    /// breadth-first; by transitivity each candidate gives at most one map.
    pub fn isomorphism_to(&self, other: &FlagSystem) -> Result<Option<Vec<usize>>> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.flag_count != other.flag_count {
            return Ok(None);
        }
        let profile = self.local_profile(0);
        Ok((0..other.flag_count)
            .filter(|&g| other.local_profile(g) == profile)
            .find_map(|g| self.transport(other, 0, g)))
    }

    pub fn is_isomorphic(&self, other: &FlagSystem) -> Result<bool> {
        Ok(self.isomorphism_to(other)?.is_some())
    }

    // Cheap invariant of a flag that any isomorphism preserves: the orbit
    // lengths of r_i r_{i+1}.
    fn local_profile(&self, f: usize) -> Vec<usize> {
        (0..self.rank)
            .map(|i| {
                let mut g = f;
                let mut len = 0;
                loop {
                    g = self.r(i + 1, self.r(i, g));
                    len += 1;
                    if g == f {
                        break len;
                    }
                }
            })
            .collect()
    }

    /// All flag permutations commuting with every connection (the covering
    /// transformations), identity first, in order of the image of flag 0.
    pub fn deck_transformations(&self) -> Vec<Vec<usize>> {
        let profile = self.local_profile(0);
        (0..self.flag_count)
            .filter(|&g| self.local_profile(g) == profile)
            .filter_map(|g| self.transport(self, 0, g))
            .collect()
    }

    /// If `phi` is a projection of `self` onto `base` (commutes with the
    /// connections), the number of sheets.
    pub fn projection_degree(&self, base: &FlagSystem, phi: &[usize]) -> Result<Option<usize>> {
        if self.rank != base.rank {
            return Err(Error::RankMismatch(self.rank, base.rank));
        }
        if phi.len() != self.flag_count || phi.iter().any(|&g| g >= base.flag_count) {
            return Err(Error::BadFlagMap);
        }
        for i in 0..=self.rank {
            for f in 0..self.flag_count {
                if phi[self.r(i, f)] != base.r(i, phi[f]) {
                    return Ok(None);
                }
            }
        }
        let mut fiber = vec![0usize; base.flag_count];
        for &g in phi {
            fiber[g] += 1;
        }
        let k = fiber[0];
        // transitivity of the base forces constant fibers; checked anyway
        if fiber.iter().any(|&c| c != k) {
            return Ok(None);
        }
        Ok(Some(k))
    }

    /// Flag system with flags renumbered: flag `f` becomes `perm[f]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FlagSystem> {
        let n = self.flag_count;
        if perm.len() != n {
            return Err(Error::BadFlagMap);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || core::mem::replace(&mut seen[p], true) {
                return Err(Error::BadFlagMap);
            }
        }
        let conns = (0..=self.rank)
            .map(|i| {
                let mut r = vec![0; n];
                for f in 0..n {
                    r[perm[f]] = perm[self.r(i, f)];
                }
                r
            })
            .collect();
        FlagSystem::new(self.rank, conns)
    }
}

/// Free-function form of [`FlagSystem::projection_degree`]: `Some(k)` when
/// `phi` is a `k`-fold projection from `cover` onto `base`.
pub fn check_projection(cover: &FlagSystem, base: &FlagSystem, phi: &[usize]) -> Result<Option<usize>> {
    cover.projection_degree(base, phi)
}

/// One `i`-face: an orbit of the connections other than `r_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub dimension: usize,
    /// Sorted flag indices.
    pub flags: Vec<usize>,
}

impl Cell {
    /// Number of sides (faces) or incident edge-ends (vertices) of a rank-2 cell.
    pub fn degree(&self) -> usize {
        self.flags.len() / 2
    }

    pub fn contains(&self, f: usize) -> bool {
        self.flags.binary_search(&f).is_ok()
    }

    pub fn representative(&self) -> usize {
        self.flags[0]
    }
}

/// Closed surface type of a rank-2 map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceSignature {
    pub orientable: bool,
    /// Orientable genus, or number of crosscaps when non-orientable.
    pub genus: u32,
    pub euler_characteristic: i64,
}

impl SurfaceSignature {
    pub fn orientable(genus: u32) -> Self {
        Self {
            orientable: true,
            genus,
            euler_characteristic: 2 - 2 * genus as i64,
        }
    }

    /// Non-orientable surface with `genus >= 1` crosscaps.
    pub fn non_orientable(genus: u32) -> Self {
        assert!(genus >= 1, "non-orientable genus starts at 1");
        Self {
            orientable: false,
            genus,
            euler_characteristic: 2 - genus as i64,
        }
    }

    pub fn sphere() -> Self {
        Self::orientable(0)
    }

    pub fn projective_plane() -> Self {
        Self::non_orientable(1)
    }

    pub fn from_parts(orientable: bool, chi: i64) -> Result<Self> {
        if orientable {
            if chi > 2 || chi % 2 != 0 {
                return Err(Error::OddCharacteristicOrientable(chi));
            }
            Ok(Self::orientable(((2 - chi) / 2) as u32))
        } else {
            if chi > 1 {
                return Err(Error::ImpossibleCharacteristic(chi));
            }
            Ok(Self::non_orientable((2 - chi) as u32))
        }
    }
}

/// `o<g>` or `n<k>`.
impl fmt::Display for SurfaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.orientable { 'o' } else { 'n' };
        write!(f, "{tag}{}", self.genus)
    }
}

impl core::str::FromStr for SurfaceSignature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParameters(alloc::format!("surface {s:?}, expected o<g> or n<k>"));
        let (kind, num) = s.split_at_checked(1).ok_or_else(bad)?;
        let genus: u32 = num.parse().map_err(|_| bad())?;
        match kind {
            "o" => Ok(Self::orientable(genus)),
            "n" if genus >= 1 => Ok(Self::non_orientable(genus)),
            _ => Err(bad()),
        }
    }
}

/// A word in the connection indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlagWord(Vec<usize>);

impl FlagWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses whitespace-separated indices, or a bare digit string.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadParameters(alloc::format!("flag word {s:?}"));
        let letters = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(FlagWord(letters))
    }
}

impl FromIterator<usize> for FlagWord {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}
