//! Checking that pieces `Π_1, …, Π_n` decompose a base polytope `Π`.
//!
//! A decomposition is accepted when every piece lies in `Π`, the pieces
//! cover `Π`, each intersection `Π_I` is the base polytope of the supplied
//! or computed rank function `rk_I`, and any two pieces meet inside a proper
//! face of both. Indicators are compared on the cells of the verification
//! grid.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grid::{Cell, VerificationGrid};
use crate::rankfn::{subset_sums, Class, RankFunction};
use crate::subset::{card, elements, full, Mask};

/// Largest ground set the checker accepts.
pub const MAX_DECOMPOSITION_D: usize = 5;
const MAX_PIECES: usize = 8;

/// An accepted decomposition with all its intersections. Index sets `I` are
/// masks over piece positions; `None` marks an empty intersection.
#[derive(Clone, Debug)]
pub struct ValidDecomposition {
    pub target: RankFunction,
    pub pieces: Vec<RankFunction>,
    pub intersections: BTreeMap<Mask, Option<RankFunction>>,
}

impl ValidDecomposition {
    /// The terms of `Σ_I (−1)^{|I|} ⟨rk_I⟩`, with `rk_∅` the target.
    pub fn signed_terms(&self) -> Vec<(i64, &RankFunction)> {
        let mut out = vec![(1, &self.target)];
        out.extend(self.pieces.iter().map(|p| (-1, p)));
        for (&set, rk) in &self.intersections {
            if let Some(rk) = rk {
                out.push((if card(set).is_multiple_of(2) { 1 } else { -1 }, rk));
            }
        }
        out
    }
}

/// Integer points of `Q(rk)`.
pub fn lattice_points(rk: &RankFunction) -> Vec<Vec<i64>> {
    let d = rk.d();
    let r = rk.rank();
    let caps: Vec<i64> = (0..d).map(|i| rk.rk(1 << i).min(r)).collect();
    let mut out = Vec::new();
    let mut y = vec![0i64; d];
    fn walk(i: usize, left: i64, caps: &[i64], y: &mut Vec<i64>, rk: &RankFunction, out: &mut Vec<Vec<i64>>) {
        if i == caps.len() {
            if left == 0 && fits(rk, y) {
                out.push(y.clone());
            }
            return;
        }
        for v in 0..=caps[i].min(left) {
            y[i] = v;
            walk(i + 1, left - v, caps, y, rk, out);
        }
        y[i] = 0;
    }
    if r >= 0 {
        walk(0, r, &caps, &mut y, rk, &mut out);
    }
    out
}

fn fits(rk: &RankFunction, y: &[i64]) -> bool {
    (0..=full(rk.d())).all(|a| elements(a).map(|i| y[i]).sum::<i64>() <= rk.rk(a))
}

/// `rk(A) = max Σ_{i∈A} y_i` over the points, validated in `class`.
pub fn rank_from_points(d: usize, class: Class, points: &[Vec<i64>]) -> Result<Option<RankFunction>> {
    if points.is_empty() {
        return Ok(None);
    }
    RankFunction::from_fn(d, class, |a| {
        points.iter().map(|y| elements(a).map(|i| y[i]).sum::<i64>()).max().unwrap()
    })
    .map(Some)
}

/// The two halves of `Q(rk)` cut by `Σ_{i∈A} y_i = c`, each rebuilt from
/// its integer points. Fails when a half is not a base polytope of the
/// class of `rk`.
pub fn hyperplane_split(rk: &RankFunction, a: Mask, c: i64) -> Result<Vec<RankFunction>> {
    let pts = lattice_points(rk);
    let sum = |y: &Vec<i64>| elements(a).map(|i| y[i]).sum::<i64>();
    let low: Vec<Vec<i64>> = pts.iter().filter(|y| sum(y) <= c).cloned().collect();
    let high: Vec<Vec<i64>> = pts.iter().filter(|y| sum(y) >= c).cloned().collect();
    let class = grid_class(rk);
    let mut out = Vec::new();
    for half in [low, high] {
        match rank_from_points(rk.d(), class, &half)? {
            Some(p) => out.push(p),
            None => return Err(Error::CoverGap(format!("the half-space side of c={c} has no lattice point"))),
        }
    }
    Ok(out)
}

/// Hyperplanes `Σ_A y = c` that meet the relative interior of `Q(rk)`.
pub fn splitting_hyperplanes(rk: &RankFunction) -> Vec<(Mask, i64)> {
    let r = rk.rank();
    let top = full(rk.d());
    let mut out = Vec::new();
    for a in 1..top {
        for c in (r - rk.rk(top & !a) + 1)..rk.rk(a) {
            out.push((a, c));
        }
    }
    out
}

/// `U_{2,4}` cut along `y_1 + y_2 = 1`.
pub fn hypersimplex_split() -> (RankFunction, Vec<RankFunction>) {
    let u = RankFunction::uniform(2, 4);
    let cut = |x: Mask| {
        RankFunction::from_fn(4, Class::Matroid, |a| if a == x { 1 } else { u.rk(a) }).unwrap()
    };
    (u.clone(), vec![cut(0b0011), cut(0b1100)])
}

fn grid_class(rk: &RankFunction) -> Class {
    if rk.class() == Class::Matroid || (0..rk.d()).all(|i| rk.rk(1 << i) <= 1) {
        Class::Matroid
    } else {
        Class::Polymatroid
    }
}

/// Relative interior of `Q(rk)`: strict on every inequality that is not an
/// implicit equality, i.e. every `A` with `rk(A) + rk(X∖A) > rk(X)`.
fn in_relative_interior(rk: &RankFunction, y: &[BigRational]) -> bool {
    if !rk.membership(y) {
        return false;
    }
    let top = full(rk.d());
    let r = rk.rank();
    let sums = subset_sums(y);
    (1..top).all(|a| {
        rk.rk(a) + rk.rk(top & !a) == r
            || sums[a as usize] < BigRational::from_integer(BigInt::from(rk.rk(a)))
    })
}

fn barycenter(rk: &RankFunction) -> Result<Vec<BigRational>> {
    let verts = rk.vertices()?;
    let n = BigRational::from_integer(BigInt::from(verts.len()));
    let mut y = vec![BigRational::zero(); rk.d()];
    for v in &verts {
        for (s, x) in y.iter_mut().zip(v) {
            *s += x;
        }
    }
    Ok(y.into_iter().map(|s| s / &n).collect())
}

fn show_point(y: &[BigRational]) -> String {
    let parts: Vec<String> = y.iter().map(|q| q.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Verify that `pieces` decompose `Q(target)`. Intersections missing from
/// `supplied` are computed from common integer points.
pub fn check_decomposition(
    target: &RankFunction,
    pieces: &[RankFunction],
    supplied: &BTreeMap<Mask, RankFunction>,
) -> Result<ValidDecomposition> {
    let d = target.d();
    if d > MAX_DECOMPOSITION_D {
        return Err(Error::SizeLimitExceeded { what: "check_decomposition", limit: "d <= 5" });
    }
    if pieces.len() > MAX_PIECES {
        return Err(Error::SizeLimitExceeded { what: "check_decomposition", limit: "at most 8 pieces" });
    }
    if !target.is_finite() || pieces.iter().any(|p| !p.is_finite()) {
        return Err(Error::GridUnsupported("decompositions of unbounded polyhedra".into()));
    }
    let top = full(d);
    for (i, p) in pieces.iter().enumerate() {
        if p.d() != d {
            return Err(Error::BlockSizeMismatch(format!("piece {} has d={}, target has d={d}", i + 1, p.d())));
        }
        if p.rank() != target.rank() {
            return Err(Error::ContainmentViolated { piece: i + 1, set: top });
        }
        if let Some(a) = (0..=top).find(|&a| p.rk(a) > target.rk(a)) {
            return Err(Error::ContainmentViolated { piece: i + 1, set: a });
        }
    }
    let class = grid_class(target);
    let grid = VerificationGrid::cached(d, target.rank(), class)?;
    let cells: Vec<&Cell> = grid.cells().iter().filter(|c| c.in_base_polytope(target)).collect();
    let member: Vec<Vec<bool>> = pieces
        .iter()
        .map(|p| cells.iter().map(|c| c.in_base_polytope(p)).collect())
        .collect();

    if let Some(k) = (0..cells.len()).find(|&k| member.iter().all(|m| !m[k])) {
        return Err(Error::CoverGap(cells[k].witness().to_string()));
    }

    let n = pieces.len();
    let points: Vec<Vec<Vec<i64>>> = pieces.iter().map(lattice_points).collect();
    let mut intersections = BTreeMap::new();
    for set in 1..(1u32 << n) {
        if card(set) < 2 {
            continue;
        }
        let idx: Vec<usize> = elements(set).collect();
        let (rk, explicit) = match supplied.get(&set) {
            Some(rk) => (Some(rk.clone()), true),
            None => {
                let common: Vec<Vec<i64>> = points[idx[0]]
                    .iter()
                    .filter(|y| idx[1..].iter().all(|&i| fits(&pieces[i], y)))
                    .cloned()
                    .collect();
                let rk = rank_from_points(d, class, &common).map_err(|e| Error::IntersectionRequired {
                    set,
                    reason: e.to_string(),
                })?;
                (rk, false)
            }
        };
        let bad = (0..cells.len()).find(|&k| {
            let both = idx.iter().all(|&i| member[i][k]);
            let got = rk.as_ref().is_some_and(|q| cells[k].in_base_polytope(q));
            both != got
        });
        if let Some(k) = bad {
            let point = cells[k].witness().to_string();
            return Err(if explicit {
                Error::IntersectionMismatch { set, point }
            } else {
                Error::IntersectionRequired { set, reason: format!("not integral near {point}") }
            });
        }
        intersections.insert(set, rk);
    }

    for i in 0..n {
        for j in i + 1..n {
            let Some(Some(rk)) = intersections.get(&(1 << i | 1 << j)) else { continue };
            let y = barycenter(rk)?;
            if in_relative_interior(&pieces[i], &y) || in_relative_interior(&pieces[j], &y) {
                return Err(Error::OverlapInterior { i: i + 1, j: j + 1, point: show_point(&y) });
            }
        }
    }

    Ok(ValidDecomposition { target: target.clone(), pieces: pieces.to_vec(), intersections })
}
