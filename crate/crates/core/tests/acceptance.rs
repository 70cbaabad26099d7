//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! `VALUATIVE_SEED` overrides the seed for the random hyperplane splits.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use valuative::chain::{enumerate_p, ChainScheme};
use valuative::decomposition::{check_decomposition, hyperplane_split, hypersimplex_split, splitting_hyperplanes};
use valuative::expansion::evaluate_expansion;
use valuative::grid::{CellTable, VerificationGrid};
use valuative::hopf::{antipode_left_defect, antipode_right_defect, bialgebra_defect, polymatroid_classes, matroid_classes};
use valuative::invariants::{g_invariant, tutte_direct, tutte_from_g};
use valuative::lyndon::{lyndon_words, show_word};
use valuative::rankfn::{enumerate_matroids, enumerate_polymatroids};
use valuative::tables::{series_check, table_p, table_t, TMode, Table, SERIES_IDS};
use valuative::words::lyndon_bracket;
use valuative::{expand, Class, ExpansionVector, RankFunction};

type Grid7 = [[u64; 7]; 7];

// Published tables, rows d = 0..6, columns r = 0..6, blanks as 0.
const PUBLISHED_P_PM: Grid7 = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1],
    [1, 3, 5, 7, 9, 11, 13],
    [1, 7, 19, 37, 61, 91, 127],
    [1, 15, 65, 175, 369, 671, 1105],
    [1, 31, 211, 781, 2101, 4651, 9031],
    [1, 63, 665, 3367, 11529, 31031, 70993],
];
const PUBLISHED_P_M: Grid7 = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 3, 1, 0, 0, 0, 0],
    [1, 7, 7, 1, 0, 0, 0],
    [1, 15, 33, 15, 1, 0, 0],
    [1, 31, 131, 131, 31, 1, 0],
    [1, 63, 473, 883, 473, 63, 1],
];
const PUBLISHED_PSYM_PM: Grid7 = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1],
    [1, 2, 3, 4, 5, 6, 7],
    [1, 3, 6, 10, 15, 21, 28],
    [1, 4, 10, 20, 35, 56, 84],
    [1, 5, 15, 35, 70, 126, 210],
    [1, 6, 21, 56, 126, 252, 462],
];
const PUBLISHED_PSYM_M: Grid7 = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 2, 1, 0, 0, 0, 0],
    [1, 3, 3, 1, 0, 0, 0],
    [1, 4, 6, 4, 1, 0, 0],
    [1, 5, 10, 10, 5, 1, 0],
    [1, 6, 15, 20, 15, 6, 1],
];
const PUBLISHED_T_PM: Grid7 = [
    [0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1],
    [0, 1, 2, 3, 4, 5, 6],
    [0, 1, 4, 9, 16, 25, 36],
    [0, 1, 8, 27, 64, 125, 216],
    [0, 1, 16, 81, 256, 625, 1296],
    // The printed r = 3 entry of this row reads 343; the row is r^5 and
    // lies outside the range checked below.
    [0, 1, 32, 243, 1024, 3125, 7776],
];
const PUBLISHED_T_M: Grid7 = [
    [0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0],
    [0, 1, 4, 1, 0, 0, 0],
    [0, 1, 11, 11, 1, 0, 0],
    [0, 1, 26, 66, 26, 1, 0],
];
const PUBLISHED_TSYM_PM: Grid7 = [
    [0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 3, 3],
    [0, 1, 2, 3, 5, 7, 9],
    [0, 1, 2, 5, 8, 14, 20],
    [0, 1, 3, 7, 14, 25, 42],
    [0, 1, 3, 9, 20, 42, 75],
];
const PUBLISHED_TSYM_M: Grid7 = [
    [0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0],
    [0, 1, 2, 2, 1, 0, 0],
    [0, 1, 2, 3, 2, 1, 0],
];

type Check = std::result::Result<String, String>;

#[allow(clippy::needless_range_loop)]
fn compare(table: &Table, published: &Grid7) -> std::result::Result<(), String> {
    for d in 0..=table.dmax {
        for r in 0..=table.rmax {
            if table.get(d, r) != published[d][r] {
                return Err(format!(
                    "{}({d},{r}) = {}, published {}",
                    table.name(),
                    table.get(d, r),
                    published[d][r]
                ));
            }
        }
    }
    let bad = table.closed_form_mismatches();
    if !bad.is_empty() {
        return Err(format!("{} disagrees with its closed form at {bad:?}", table.name()));
    }
    Ok(())
}

fn within(start: Instant, limit: Duration) -> std::result::Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {t:.1?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let cases = [
        (Class::Polymatroid, false, &PUBLISHED_P_PM),
        (Class::Matroid, false, &PUBLISHED_P_M),
        (Class::Polymatroid, true, &PUBLISHED_PSYM_PM),
        (Class::Matroid, true, &PUBLISHED_PSYM_M),
    ];
    for (class, sym, want) in cases {
        let t = table_p(6, 6, class, sym).map_err(|e| e.to_string())?;
        compare(&t, want)?;
    }
    within(start, Duration::from_secs(60))?;
    Ok("p_PM, p_M, p^sym_PM, p^sym_M for d, r <= 6; p_M(6,3)=883, p_PM(6,6)=70993".into())
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let cases = [
        (Class::Matroid, false, 5, &PUBLISHED_T_M),
        (Class::Polymatroid, false, 4, &PUBLISHED_T_PM),
        (Class::Matroid, true, 6, &PUBLISHED_TSYM_M),
        (Class::Polymatroid, true, 6, &PUBLISHED_TSYM_PM),
    ];
    for (class, sym, dmax, want) in cases {
        // Linear algebra and index sets together; any difference is an error.
        let t = table_t(dmax, 6, class, sym, TMode::Both).map_err(|e| e.to_string())?;
        compare(&t, want)?;
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "t_M d<=5, t_PM d<=4, t^sym d<=6 by linear algebra, index mode agrees ({:.1?})",
        start.elapsed()
    ))
}

fn criterion_3() -> Check {
    for id in SERIES_IDS {
        let rep = series_check(id, 6).map_err(|e| e.to_string())?;
        if let Some((d, r, want, got)) = rep.mismatch {
            return Err(format!("{id}: series gives {want} at d={d} r={r}, table has {got}"));
        }
    }
    Ok(format!("{} identities to total degree 6", SERIES_IDS.len()))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let (mut matroids, mut cells, mut points) = (0usize, 0usize, 0u64);
    for d in 0..=5 {
        for r in 0..=d {
            let grid = VerificationGrid::cached(d, r as i64, Class::Matroid).map_err(|e| e.to_string())?;
            let keys = enumerate_p(d, r as i64, Class::Matroid).map_err(|e| e.to_string())?;
            if !grid.separates(&keys) {
                return Err(format!("grid for d={d} r={r} does not separate the cone indicators"));
            }
            let table = CellTable::new(&grid, keys);
            for rk in enumerate_matroids(d, r).map_err(|e| e.to_string())? {
                let v = expand(&rk).map_err(|e| e.to_string())?;
                let coeffs: Vec<(ChainScheme, i64)> = v.coords().iter().map(|(k, &c)| (k.clone(), c)).collect();
                if let Some(p) = table.first_mismatch(&coeffs, &rk) {
                    return Err(format!("{rk}: expansion differs from membership at {p}"));
                }
                // Unperturbed representatives again, straight from the
                // rational coordinates.
                for cell in grid.cells().iter().filter(|c| !c.witness().perturbed) {
                    let y = cell.witness().coords();
                    if evaluate_expansion(&v, &y) != i64::from(rk.membership(&y)) {
                        return Err(format!("{rk}: pointwise mismatch at {}", cell.witness()));
                    }
                }
                matroids += 1;
            }
            cells += grid.cells().len();
            points += grid.points();
        }
    }
    within(start, Duration::from_secs(900))?;
    Ok(format!("{matroids} matroids, {points} grid points in {cells} cells ({:.1?})", start.elapsed()))
}

fn criterion_5() -> Check {
    let mut n = 0;
    for class in [Class::Matroid, Class::Polymatroid] {
        for d in 0..=4 {
            let rmax = if class == Class::Matroid { d } else { 6 };
            for r in 0..=rmax {
                for key in enumerate_p(d, r as i64, class).map_err(|e| e.to_string())? {
                    let rk = key.cone_rank_fn().map_err(|e| e.to_string())?;
                    let v = expand(&rk).map_err(|e| e.to_string())?;
                    if v != ExpansionVector::unit(&key).map_err(|e| e.to_string())? {
                        return Err(format!("expand(cone({key})) is not the unit vector"));
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} keys of p_M (d<=4) and p_PM (d<=4, r<=6)"))
}

fn criterion_6() -> Check {
    let mut n = 0;
    for d in 0..=5 {
        for r in 0..=d {
            for rk in enumerate_matroids(d, r).map_err(|e| e.to_string())? {
                let direct = tutte_direct(&rk).map_err(|e| e.to_string())?;
                let via_g = tutte_from_g(&g_invariant(&rk).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                if direct != via_g {
                    return Err(format!("{rk}: direct {direct}, from g {via_g}"));
                }
                let t11 = direct.eval(&1.into(), &1.into());
                if t11 != (rk.bases().len() as i64).into() {
                    return Err(format!("{rk}: T(1,1) = {t11}, {} bases", rk.bases().len()));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} labeled matroids on d <= 5"))
}

fn g_alternating_sum(terms: &[(i64, &RankFunction)]) -> std::result::Result<bool, String> {
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (sign, rk) in terms {
        let g = g_invariant(rk).map_err(|e| e.to_string())?;
        for (w, &c) in &g.coeffs {
            *acc.entry(w.clone()).or_insert(0) += sign * c as i64;
        }
    }
    Ok(acc.values().all(|&c| c == 0))
}

fn criterion_7(seed: u64) -> Check {
    let (u24, pieces) = hypersimplex_split();
    let v = check_decomposition(&u24, &pieces, &BTreeMap::new()).map_err(|e| format!("hypersimplex: {e}"))?;
    let middle = RankFunction::from_bases(4, &[0b0101, 0b1001, 0b0110, 0b1010]).unwrap();
    if v.intersections.get(&0b11) != Some(&Some(middle)) {
        return Err("hypersimplex: intersection is not the matroid with bases 13,14,23,24".into());
    }
    if !g_alternating_sum(&v.signed_terms())? {
        return Err("hypersimplex: alternating sum of g is nonzero".into());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pools: Vec<(usize, Vec<RankFunction>)> = Vec::new();
    for d in [4usize, 5] {
        let mut pool = Vec::new();
        for r in 1..d {
            pool.extend(enumerate_matroids(d, r).map_err(|e| e.to_string())?);
        }
        if d == 4 {
            pool.extend(enumerate_polymatroids(4, 2).map_err(|e| e.to_string())?);
        }
        pools.push((d, pool));
    }
    let (mut valid, mut rejected, mut attempts) = (0, 0, 0);
    for (d, pool) in &pools {
        let mut found = 0;
        while found < 5 {
            attempts += 1;
            if attempts > 5000 {
                return Err(format!("only {valid} valid splits in {attempts} attempts"));
            }
            let rk = pool.choose(&mut rng).unwrap();
            let a = rng.gen_range(1..(1u32 << d) - 1);
            let c = rng.gen_range(0..=rk.rank());
            let interior = splitting_hyperplanes(rk).contains(&(a, c));
            let halves = match hyperplane_split(rk, a, c) {
                Ok(h) => h,
                Err(e) => {
                    // A half that is not a base polytope of the class.
                    if e.to_string().is_empty() {
                        return Err("rejection without a witness".into());
                    }
                    rejected += 1;
                    continue;
                }
            };
            match check_decomposition(rk, &halves, &BTreeMap::new()) {
                Ok(v) if interior => {
                    if !g_alternating_sum(&v.signed_terms())? {
                        return Err(format!("{rk} cut at sum over {a:b} = {c}: g is not valuative"));
                    }
                    // The same split with a piece missing must fail.
                    match check_decomposition(rk, &halves[..1], &BTreeMap::new()) {
                        Err(e) if e.to_string().starts_with("CoverGap") => {}
                        other => return Err(format!("{rk}: dropped piece not caught: {other:?}")),
                    }
                    valid += 1;
                    found += 1;
                }
                Ok(_) => return Err(format!("{rk}: non-splitting hyperplane {a:b} = {c} accepted")),
                Err(e) if interior => return Err(format!("{rk}: valid split {a:b} = {c} rejected: {e}")),
                Err(e) => {
                    if !e.to_string().contains(':') {
                        return Err(format!("rejection without a witness: {e}"));
                    }
                    rejected += 1;
                }
            }
        }
    }
    if rejected == 0 {
        return Err("no invalid candidate was generated".into());
    }
    Ok(format!(
        "hypersimplex VALID with zero alternating g; {valid} random splits at d=4,5 VALID, \
         {rejected} invalid candidates rejected with witnesses (seed {seed})"
    ))
}

fn criterion_8() -> Check {
    let mut n = 0;
    for d in 0..=3 {
        for r in 0..=2 {
            for rk in polymatroid_classes(d, r).map_err(|e| e.to_string())? {
                let l = antipode_left_defect(&rk).map_err(|e| e.to_string())?;
                let rt = antipode_right_defect(&rk).map_err(|e| e.to_string())?;
                if !l.is_zero() || !rt.is_zero() {
                    return Err(format!("antipode axiom fails on {rk}: {l} / {rt}"));
                }
                n += 1;
            }
        }
    }
    let mut classes: Vec<RankFunction> = Vec::new();
    for d in 0..=4 {
        for r in 0..=2 {
            classes.extend(polymatroid_classes(d, r).map_err(|e| e.to_string())?);
        }
    }
    let mut pairs = 0;
    for a in &classes {
        for b in classes.iter().filter(|b| a.d() + b.d() <= 4) {
            let defect = bialgebra_defect(a, b).map_err(|e| e.to_string())?;
            if !defect.is_zero() {
                return Err(format!("bialgebra fails on {a}, {b}: {defect}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("antipode on {n} classes (d<=3, r<=2); bialgebra on {pairs} pairs (total d<=4, r<=2 each)"))
}

#[allow(clippy::needless_range_loop)]
fn criterion_9() -> Check {
    let mut pairings = 0;
    let classes = |d: usize, class: Class, rmax: usize| -> Vec<RankFunction> {
        (0..=rmax)
            .flat_map(|r| match class {
                Class::Matroid => matroid_classes(d, r).unwrap(),
                _ => polymatroid_classes(d, r).unwrap(),
            })
            .collect()
    };
    for (class, rmax) in [(Class::Matroid, 5), (Class::Polymatroid, 2)] {
        for d in 2..=5 {
            for d1 in 1..=d / 2 {
                let left = classes(d1, class, rmax);
                let right = classes(d - d1, class, rmax);
                for a in &left {
                    for b in &right {
                        let r = (a.rank() + b.rank()) as u32;
                        if class == Class::Polymatroid && r > 2 {
                            continue;
                        }
                        let sum = a.direct_sum(b).map_err(|e| e.to_string())?;
                        let g = g_invariant(&sum).map_err(|e| e.to_string())?;
                        for w in lyndon_words(d, r, class) {
                            let p = lyndon_bracket(&w).map_err(|e| e.to_string())?.pair(&g);
                            if !p.is_zero() {
                                return Err(format!("b({}) pairs to {p} with g({a} + {b})", show_word(&w)));
                            }
                            pairings += 1;
                        }
                    }
                }
            }
        }
    }
    // Not vacuous: b(01) sees the connected U_{1,2}.
    let g = g_invariant(&RankFunction::uniform(1, 2)).unwrap();
    if lyndon_bracket(&[0, 1]).unwrap().pair(&g) == BigRational::zero() {
        return Err("b(01) vanishes on U_{1,2}".into());
    }
    for (class, sym_table) in [(Class::Matroid, &PUBLISHED_TSYM_M), (Class::Polymatroid, &PUBLISHED_TSYM_PM)] {
        let t = table_t(6, 6, class, true, TMode::LinearAlgebra).map_err(|e| e.to_string())?;
        for d in 1..=6 {
            for r in 0..=6 {
                let n = lyndon_words(d, r as u32, class).len() as u64;
                if n != t.get(d, r) || n != sym_table[d][r] {
                    return Err(format!("{} Lyndon words for ({d},{r}), t^sym = {}", n, t.get(d, r)));
                }
            }
        }
    }
    Ok(format!("{pairings} bracket pairings vanish on direct sums; Lyndon counts equal t^sym for d, r <= 6"))
}

fn orbit_sizes(d: usize, r: i64, class: Class) -> std::result::Result<Vec<u64>, String> {
    let mut orbits: BTreeMap<ChainScheme, u64> = BTreeMap::new();
    for k in enumerate_p(d, r, class).map_err(|e| e.to_string())? {
        *orbits.entry(k.symmetric()).or_insert(0) += 1;
    }
    for (rep, &n) in &orbits {
        if rep.orbit_size() != n {
            return Err(format!("orbit of {rep} has {n} keys, orbit_size says {}", rep.orbit_size()));
        }
    }
    let mut sizes: Vec<u64> = orbits.into_values().collect();
    sizes.sort_unstable();
    Ok(sizes)
}

fn criterion_10() -> Check {
    let pm = orbit_sizes(3, 2, Class::Polymatroid)?;
    if pm != [1, 3, 3, 3, 3, 6] {
        return Err(format!("p_PM(3,2) orbits {pm:?}"));
    }
    let m = orbit_sizes(4, 2, Class::Matroid)?;
    if m != [1, 4, 4, 6, 6, 12] {
        return Err(format!("p_M(4,2) orbits {m:?}"));
    }
    let show = |class| lyndon_words(6, 3, class).iter().map(|w| show_word(w)).collect::<Vec<_>>();
    let want_m = ["000111", "001011", "001101"];
    let want_pm = ["000003", "000012", "000021", "000102", "000111", "000201", "001002", "001011", "001101"];
    if show(Class::Matroid) != want_m {
        return Err(format!("t^sym_M(6,3) = {:?}", show(Class::Matroid)));
    }
    if show(Class::Polymatroid) != want_pm {
        return Err(format!("t^sym_PM(6,3) = {:?}", show(Class::Polymatroid)));
    }
    Ok("|p_PM(3,2)| = 19 as 1+3+3+3+3+6; |p_M(4,2)| = 33 as 1+4+4+6+6+12; both (6,3) word lists".into())
}

fn main() -> ExitCode {
    let seed = std::env::var("VALUATIVE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20_141_007);
    println!("acceptance: random splits use seed {seed}");
    let criteria: Vec<(usize, Box<dyn Fn() -> Check>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(criterion_5)),
        (6, Box::new(criterion_6)),
        (7, Box::new(move || criterion_7(seed))),
        (8, Box::new(criterion_8)),
        (9, Box::new(criterion_9)),
        (10, Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        let start = Instant::now();
        let (tag, msg) = match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
            Ok(Ok(msg)) => ("PASS", msg),
            Ok(Err(msg)) => ("FAIL", msg),
            Err(_) => ("FAIL", "panicked".to_string()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} criterion {n}: {msg} [{:.2?}]", start.elapsed());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
