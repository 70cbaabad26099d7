//! Exact integer linear algebra.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = ExactMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m.data[i * cols + j] = v.clone().into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    ///
    /// Pivots are the first nonzero entry in each column, so the result
    /// and the elimination path are fully deterministic.
    pub fn rank(&self) -> usize {
        let (n, m) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> =
            (0..n).map(|i| self.data[i * m..(i + 1) * m].to_vec()).collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..m {
            if rank == n {
                break;
            }
            let Some(p) = (rank..n).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let (top, rest) = a.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            let pivot = pivot_row[col].clone();
            for row in rest.iter_mut() {
                let factor = row[col].clone();
                for j in col + 1..m {
                    let v = &pivot * &row[j] - &factor * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

/// Convenience wrapper: rank of a row-major integer matrix.
pub fn exact_rank<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(rows).rank()
}

type SparseRow = Vec<(usize, BigInt)>;

/// Row space built one sparse integer row at a time.
///
/// Rows are kept in echelon form keyed by leading column, each divided by
/// its content so entries stay small. Suited to tall sparse systems where
/// most incoming rows are dependent.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Add a row given as `(column, value)` pairs; returns true if it
    /// enlarged the span.
    pub fn insert<I>(&mut self, entries: I) -> bool
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut row: SparseRow = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        row.sort_by_key(|e| e.0);
        normalize(&mut row);
        while let Some((lead, _)) = row.first() {
            match self.pivots.get(lead) {
                None => {
                    let lead = *lead;
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    row = eliminate(&row, p);
                    normalize(&mut row);
                }
            }
        }
        false
    }
}

/// `a * p0 - p * a0` scaled by the lcm of the leading entries.
fn eliminate(a: &SparseRow, p: &SparseRow) -> SparseRow {
    let (a0, p0) = (&a[0].1, &p[0].1);
    let g = a0.gcd(p0);
    let (ma, mp) = (p0 / &g, a0 / &g);
    let mut out = Vec::with_capacity(a.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < a.len() || j < p.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cp = p.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ca < cp {
            i += 1;
            (ca, &a[i - 1].1 * &ma)
        } else if cp < ca {
            j += 1;
            (cp, -(&p[j - 1].1 * &mp))
        } else {
            i += 1;
            j += 1;
            (ca, &a[i - 1].1 * &ma - &p[j - 1].1 * &mp)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let neg = first.1.is_negative();
    if !g.is_one() || neg {
        let g = if neg { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}
