//! Verification grid: rational points of the (hyper)simplex, reduced to the
//! cells of the arrangement of integral hyperplanes `Σ_{i∈A} y_i = k`.
//!
//! Every indicator handled here is constant on such cells, so each distinct
//! cell is evaluated once. A cell is stored as its signature: for every
//! subset `A` the code `2k` when `Σ_A y = k` exactly and `2⌊Σ_A y⌋ + 1`
//! otherwise. Each grid point also contributes a copy moved by an
//! infinitesimal `ε·w`, `w = (1, …, d)` centered, which resolves the exact
//! ties by the sign of `Σ_{i∈A} w_i`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::chain::ChainScheme;
use crate::error::{Error, Result};
use crate::par;
use crate::rankfn::{Class, RankFunction, INF};
use crate::subset::{full, permutations, permute, Mask};

type Key = [u64; 4];

/// A grid point `num / denom`, optionally with the `ε·w` offset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridPoint {
    pub num: Vec<u32>,
    pub denom: u32,
    pub perturbed: bool,
}

impl GridPoint {
    /// Coordinates without the infinitesimal offset.
    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|&n| BigRational::new(BigInt::from(n), BigInt::from(self.denom)))
            .collect()
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .num
            .iter()
            .map(|&n| {
                let g = n.gcd(&self.denom);
                if n == 0 {
                    "0".into()
                } else if g == self.denom {
                    (n / g).to_string()
                } else {
                    format!("{}/{}", n / g, self.denom / g)
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))?;
        if self.perturbed {
            write!(f, "+eps*w")?;
        }
        Ok(())
    }
}

/// One cell of the arrangement with a representative point.
#[derive(Clone, Debug)]
pub struct Cell {
    key: Key,
    witness: GridPoint,
}

impl Cell {
    /// Signature code of `Σ_{i∈A} y_i`.
    #[inline]
    pub fn code(&self, a: Mask) -> i64 {
        let a = a as usize;
        ((self.key[a >> 4] >> ((a & 15) * 4)) & 15) as i64 - 1
    }

    /// `Σ_{i∈A} y_i ≤ b`.
    #[inline]
    pub fn sum_le(&self, a: Mask, b: i64) -> bool {
        self.code(a) <= 2 * b
    }

    pub fn witness(&self) -> &GridPoint {
        &self.witness
    }

    /// Indicator of `Q(rk)`.
    pub fn in_base_polytope(&self, rk: &RankFunction) -> bool {
        let top = full(rk.d());
        self.code(top) == 2 * rk.rank()
            && (0..=top).all(|a| rk.rk(a) == INF || self.sum_le(a, rk.rk(a)))
    }

    /// Indicator of the cone of `key`, from its raw inequalities and the
    /// simplex bounds of its class.
    pub fn in_cone(&self, key: &ChainScheme) -> bool {
        let d = key.d();
        if self.code(full(d)) != 2 * key.rank() {
            return false;
        }
        let matroid = key.class() == Class::Matroid;
        for i in 0..d {
            let c = self.code(1 << i);
            if c < 0 || (matroid && c > 2) {
                return false;
            }
        }
        key.chain().iter().zip(key.ranks()).all(|(&x, &r)| self.sum_le(x, r))
    }
}

/// The distinct cells met by a grid of denominator `denom`.
#[derive(Clone, Debug)]
pub struct VerificationGrid {
    d: usize,
    r: i64,
    class: Class,
    denom: u32,
    points: u64,
    cells: Vec<Cell>,
}

/// `2·lcm(1..d) + 1`.
pub fn default_denominator(d: usize) -> u32 {
    2 * (1..=d.max(1) as u32).fold(1, |l, k| l.lcm(&k)) + 1
}

struct Walk {
    d: usize,
    bound: u32,
    total: u32,
    code_tab: Vec<u8>,
}

impl Walk {
    /// Signature of a point from its subset sums, nibbles hold `code + 1`.
    fn key(&self, sums: &[u32]) -> Key {
        let mut key = [0u64; 4];
        for (a, &s) in sums.iter().enumerate() {
            key[a >> 4] |= (self.code_tab[s as usize] as u64) << ((a & 15) * 4);
        }
        key
    }

    /// Nonincreasing numerators `n_1 ≥ … ≥ n_d`; one witness per signature.
    fn descend(
        &self,
        i: usize,
        placed: u32,
        sums: &mut Vec<u32>,
        num: &mut Vec<u32>,
        out: &mut HashMap<Key, Vec<u32>>,
        last: &mut Key,
    ) {
        let rest = self.total - placed;
        let span = 1usize << i;
        let prev = num.last().copied().unwrap_or(self.bound);
        let slots = (self.d - i) as u32;
        let (lo, hi) = if slots == 1 { (rest, rest) } else { (rest.div_ceil(slots), rest.min(prev)) };
        if lo > hi.min(prev) {
            return;
        }
        for v in lo..=hi.min(prev) {
            num.push(v);
            for a in 0..span {
                sums[span + a] = sums[a] + v;
            }
            if slots == 1 {
                let key = self.key(sums);
                if key != *last {
                    *last = key;
                    out.entry(key).or_insert_with(|| num.clone());
                }
            } else {
                self.descend(i + 1, placed + v, sums, num, out, last);
            }
            num.pop();
        }
    }
}

#[inline]
fn nibble(key: &Key, a: usize) -> u8 {
    ((key[a >> 4] >> ((a & 15) * 4)) & 15) as u8
}

impl VerificationGrid {
    /// Enumerate the grid of denominator `denom` in `Δ_(P)M(d, r)`.
    pub fn build(d: usize, r: i64, class: Class, denom: u32) -> Result<Self> {
        if class == Class::Megamatroid {
            return Err(Error::GridUnsupported("only M and PM simplices are gridded".into()));
        }
        if d > 6 || !(0..=6).contains(&r) || denom == 0 {
            return Err(Error::GridUnsupported("the grid supports d <= 6, 0 <= r <= 6".into()));
        }
        let matroid = class == Class::Matroid;
        let mut grid = VerificationGrid { d, r, class, denom, points: 0, cells: vec![] };
        if (matroid && r > d as i64) || (d == 0 && r != 0) {
            return Ok(grid);
        }
        let bound = if matroid { denom } else { r as u32 * denom };
        let total = r as u32 * denom;
        let code_tab = (0..=total as usize)
            .map(|s| {
                let (q, m) = (s / denom as usize, s % denom as usize);
                (2 * q + usize::from(m != 0) + 1) as u8
            })
            .collect();
        let walk = Walk { d, bound, total, code_tab };
        let w_sign: Vec<i8> = (0..=full(d))
            .map(|a| {
                let s: i64 = crate::subset::elements(a).map(|i| 2 * i as i64 + 1 - d as i64).sum();
                s.signum() as i8
            })
            .collect();

        // Signatures of sorted points; σ(y) has the permuted signature, so the
        // rest of the grid follows by relabeling.
        let firsts: Vec<u32> = if d == 0 { vec![] } else { (total.div_ceil(d as u32)..=bound.min(total)).collect() };
        let parts = par::map(&firsts, |&v| {
            let mut out = HashMap::new();
            let mut sums = vec![0u32; 1 << d];
            sums[1] = v;
            let mut num = vec![v];
            let mut last = [u64::MAX; 4];
            if d == 1 {
                out.insert(walk.key(&sums), num);
            } else {
                walk.descend(1, v, &mut sums, &mut num, &mut out, &mut last);
            }
            out
        });
        let mut sorted: HashMap<Key, Vec<u32>> = HashMap::new();
        if d == 0 {
            sorted.insert(walk.key(&[0]), vec![]);
        }
        for part in parts {
            for (k, p) in part {
                sorted.entry(k).or_insert(p);
            }
        }
        let mut sorted: Vec<(Key, Vec<u32>)> = sorted.into_iter().collect();
        sorted.sort();

        // Each relabeled signature and its ε-shift; ties are the even codes,
        // i.e. odd nibbles, and are broken by the sign of Σ_A w.
        let perms = permutations(d);
        let images = par::map(&sorted, |(key, num)| {
            let mut out = Vec::with_capacity(2 * perms.len());
            for perm in &perms {
                let mut pk = [0u64; 4];
                let mut shifted = [0u64; 4];
                for a in 0..=full(d) {
                    let b = permute(a, perm) as usize;
                    let c = nibble(key, a as usize);
                    let pc = if c & 1 == 1 { (c as i8 + w_sign[b]) as u8 } else { c };
                    pk[b >> 4] |= (c as u64) << ((b & 15) * 4);
                    shifted[b >> 4] |= (pc as u64) << ((b & 15) * 4);
                }
                let mut pnum = vec![0u32; d];
                for (i, &n) in num.iter().enumerate() {
                    pnum[perm[i]] = n;
                }
                out.push((pk, GridPoint { num: pnum.clone(), denom, perturbed: false }));
                if shifted != pk {
                    out.push((shifted, GridPoint { num: pnum, denom, perturbed: true }));
                }
            }
            out
        });
        let mut merged: HashMap<Key, GridPoint> = HashMap::new();
        for part in images {
            for (k, p) in part {
                merged.entry(k).or_insert(p);
            }
        }
        grid.points = count_points(d, bound, total);
        let mut cells: Vec<Cell> =
            merged.into_iter().map(|(key, witness)| Cell { key, witness }).collect();
        cells.sort_by_key(|a| a.key);
        grid.cells = cells;
        Ok(grid)
    }

    /// Grid with the default denominator.
    pub fn standard(d: usize, r: i64, class: Class) -> Result<Self> {
        Self::build(d, r, class, default_denominator(d))
    }

    /// Shared standard grid, built once per process.
    pub fn cached(d: usize, r: i64, class: Class) -> Result<Arc<Self>> {
        type Cache = Mutex<HashMap<(usize, i64, Class), Arc<VerificationGrid>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().unwrap().get(&(d, r, class)) {
            return Ok(g.clone());
        }
        let g = Arc::new(Self::standard(d, r, class)?);
        Ok(cache.lock().unwrap().entry((d, r, class)).or_insert(g).clone())
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn class(&self) -> Class {
        self.class
    }

    /// Number of unperturbed grid points.
    pub fn points(&self) -> u64 {
        self.points
    }

    /// Whether the cone indicators of `keys` are linearly independent as
    /// functions on the cells; with all of `P(d, r)` as `keys` this certifies
    /// that equality on the grid implies equality of valuations.
    pub fn separates(&self, keys: &[ChainScheme]) -> bool {
        let words = keys.len().div_ceil(64);
        let rows = par::map(&self.cells, |c| {
            let mut bits = vec![0u64; words];
            for (j, k) in keys.iter().enumerate() {
                if c.in_cone(k) {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        });
        let mut distinct: Vec<Vec<u64>> = rows;
        distinct.sort();
        distinct.dedup();
        let mut space = crate::matrix::RowSpace::new();
        for row in &distinct {
            let entries = (0..keys.len())
                .filter(|&j| row[j / 64] >> (j % 64) & 1 == 1)
                .map(|j| (j, BigInt::from(1)));
            space.insert(entries);
            if space.rank() == keys.len() {
                return true;
            }
        }
        space.rank() == keys.len()
    }
}

/// Lattice points `n ∈ [0, bound]^d` with `Σ n = total`.
fn count_points(d: usize, bound: u32, total: u32) -> u64 {
    let mut ways = vec![0u64; total as usize + 1];
    ways[0] = 1;
    for _ in 0..d {
        let mut next = vec![0u64; total as usize + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for v in 0..=bound as usize {
                if s + v > total as usize {
                    break;
                }
                next[s + v] += w;
            }
        }
        ways = next;
    }
    ways[total as usize]
}

/// Cone-membership patterns of every cell against a fixed key list, for
/// repeated evaluation of expansions over the same `(d, r, class)`.
pub struct CellTable<'g> {
    grid: &'g VerificationGrid,
    keys: Vec<ChainScheme>,
    index: HashMap<ChainScheme, usize>,
    members: Vec<Vec<u32>>,
}

impl<'g> CellTable<'g> {
    pub fn new(grid: &'g VerificationGrid, keys: Vec<ChainScheme>) -> Self {
        let members = par::map(&grid.cells, |c| {
            keys.iter()
                .enumerate()
                .filter(|(_, k)| c.in_cone(k))
                .map(|(j, _)| j as u32)
                .collect()
        });
        let index = keys.iter().cloned().enumerate().map(|(j, k)| (k, j)).collect();
        CellTable { grid, keys, index, members }
    }

    pub fn keys(&self) -> &[ChainScheme] {
        &self.keys
    }

    /// First cell where `Σ coeff·[cone] ≠ [Q(rk)]`, if any.
    pub fn first_mismatch(
        &self,
        coeffs: &[(ChainScheme, i64)],
        rk: &RankFunction,
    ) -> Option<GridPoint> {
        let mut dense = vec![0i64; self.keys.len()];
        for (k, c) in coeffs {
            match self.index.get(k) {
                Some(&j) => dense[j] += c,
                None => return self.grid.cells.first().map(|c| c.witness.clone()),
            }
        }
        let cells = &self.grid.cells;
        let idx: Vec<usize> = (0..cells.len()).collect();
        par::find_first(&idx, |&i| {
            let lhs: i64 = self.members[i].iter().map(|&j| dense[j as usize]).sum();
            (lhs != i64::from(cells[i].in_base_polytope(rk))).then(|| cells[i].witness.clone())
        })
        .map(|(_, w)| w)
    }
}
