//! Lyndon words over `{0..k}` and their standard factorization.

use crate::error::{Error, Result};
use crate::rankfn::Class;

/// A composition word `α = (α_1, …, α_d)`.
pub type Word = Vec<u32>;

/// Strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[u32]) -> bool {
    let n = w.len();
    n > 0 && (1..n).all(|i| w < &[&w[i..], &w[..i]].concat()[..])
}

/// Lyndon words of length exactly `d` and digit sum `r`, in lexicographic
/// order. The alphabet is `{0,1}` for matroids and `{0..r}` otherwise.
pub fn lyndon_words(d: usize, r: u32, class: Class) -> Vec<Word> {
    let top = if class == Class::Matroid { 1 } else { r };
    if d == 0 {
        return vec![];
    }
    // Duval's generation of all Lyndon words of length ≤ d.
    let mut out = Vec::new();
    let mut w: Vec<u32> = vec![0];
    loop {
        if w.len() == d && w.iter().sum::<u32>() == r {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < d {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => return out,
        }
    }
}

/// `α = βγ` with `γ` the longest proper suffix that is Lyndon.
pub fn standard_factorization(a: &[u32]) -> Result<(Word, Word)> {
    if !is_lyndon(a) || a.len() < 2 {
        return Err(Error::NotLyndon(format!("{a:?} has no standard factorization")));
    }
    let i = (1..a.len()).find(|&i| is_lyndon(&a[i..])).unwrap();
    Ok((a[..i].to_vec(), a[i..].to_vec()))
}

pub fn show_word(w: &[u32]) -> String {
    if w.iter().all(|&c| c < 10) {
        w.iter().map(|c| c.to_string()).collect()
    } else {
        let parts: Vec<String> = w.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(d: usize, r: u32, class: Class) -> Vec<String> {
        lyndon_words(d, r, class).iter().map(|w| show_word(w)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(words(6, 3, Class::Matroid), ["000111", "001011", "001101"]);
        assert_eq!(
            words(6, 3, Class::Polymatroid),
            ["000003", "000012", "000021", "000102", "000111", "000201", "001002", "001011", "001101"]
        );
        assert_eq!(words(1, 5, Class::Polymatroid), ["5"]);
        assert_eq!(words(1, 0, Class::Matroid), ["0"]);
        assert!(words(0, 0, Class::Matroid).is_empty());
        assert!(words(2, 0, Class::Polymatroid).is_empty());
    }

    #[test]
    fn generation_matches_definition() {
        for d in 1..=6 {
            for r in 0..=4u32 {
                let got = lyndon_words(d, r, Class::Polymatroid);
                let mut want = Vec::new();
                let mut w = vec![0u32; d];
                loop {
                    if w.iter().sum::<u32>() == r && is_lyndon(&w) {
                        want.push(w.clone());
                    }
                    let Some(i) = (0..d).rev().find(|&i| w[i] < r) else { break };
                    w[i] += 1;
                    w[i + 1..].iter_mut().for_each(|v| *v = 0);
                }
                assert_eq!(got, want, "d={d} r={r}");
            }
        }
    }

    #[test]
    fn factorization() {
        assert_eq!(standard_factorization(&[0, 1]).unwrap(), (vec![0], vec![1]));
        assert_eq!(standard_factorization(&[0, 0, 1, 0, 1]).unwrap(), (vec![0, 0, 1], vec![0, 1]));
        assert_eq!(standard_factorization(&[0, 1, 1]).unwrap(), (vec![0, 1], vec![1]));
        assert!(standard_factorization(&[1, 0]).is_err());
        assert!(standard_factorization(&[3]).is_err());
    }
}
