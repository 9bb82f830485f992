//! Brute-force pumping-lemma checks.
//!
//! For a string `s` and pumping length `p`, every split `s = r v w x y` with
//! `|vwx| <= p` and `|vx| >= 1` is tried; a split is refuted when some pump
//! count `n` sends `r v^n w x^n y` out of the language. If every split is
//! refuted, `s` is a certificate that the language has no pumping length `p`.

use std::time::Instant;

use rayon::prelude::*;

use super::language::in_lcc_prime;
use super::report::{CaseOutcome, Tally, UnknownPolicy, VerificationReport};
use crate::builders::well_formed_input;

/// A split `s = r v w x y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub r: String,
    pub v: String,
    pub w: String,
    pub x: String,
    pub y: String,
}

impl Decomposition {
    /// `r v^n w x^n y`.
    pub fn pumped(&self, n: usize) -> String {
        let mut s = String::with_capacity(
            self.r.len() + n * (self.v.len() + self.x.len()) + self.w.len() + self.y.len(),
        );
        s.push_str(&self.r);
        for _ in 0..n {
            s.push_str(&self.v);
        }
        s.push_str(&self.w);
        for _ in 0..n {
            s.push_str(&self.x);
        }
        s.push_str(&self.y);
        s
    }

    /// Character lengths of `(r, v, w, x)`.
    pub fn lengths(&self) -> (usize, usize, usize, usize) {
        let len = |s: &String| s.chars().count();
        (len(&self.r), len(&self.v), len(&self.w), len(&self.x))
    }
}

/// Every split satisfying the side conditions, each once, ordered by
/// `(|r|, |v|, |w|, |x|)`.
pub fn enumerate_decompositions(s: &str, p: usize) -> impl Iterator<Item = Decomposition> {
    let chars: Vec<char> = s.chars().collect();
    let len = chars.len();
    let splits = (0..=len).flat_map(move |r| {
        let room = p.min(len - r);
        (0..=room).flat_map(move |v| {
            (0..=room - v).flat_map(move |w| {
                (0..=room - v - w)
                    .filter(move |&x| v + x >= 1)
                    .map(move |x| (r, v, w, x))
            })
        })
    });
    splits.map(move |(r, v, w, x)| {
        let cuts = [0, r, r + v, r + v + w, r + v + w + x, len];
        let part = |i: usize| chars[cuts[i]..cuts[i + 1]].iter().collect::<String>();
        Decomposition {
            r: part(0),
            v: part(1),
            w: part(2),
            x: part(3),
            y: part(4),
        }
    })
}

/// Smallest `n <= n_max` with `r v^n w x^n y` outside `u^n 0^m h, n >= 2^m - 1`.
pub fn find_pump_witness(d: &Decomposition, n_max: usize) -> Option<usize> {
    (0..=n_max).find(|&n| !in_lcc_prime(&d.pumped(n)))
}

/// `u^(2^p - 1) 0^p h`, the string the non-context-freeness argument pumps.
pub fn pump_string(p: usize) -> String {
    well_formed_input((1usize << p) - 1, p)
}

/// Checks that every split of [`pump_string`]`(p)` is refuted with a pump
/// count of at most `n_max`.
pub fn verify_lemma_notcf(p: usize, n_max: usize) -> VerificationReport {
    assert!(p >= 1, "pumping length must be positive");
    let start = Instant::now();
    let s = pump_string(p);
    let splits: Vec<Decomposition> = enumerate_decompositions(&s, p).collect();
    let tally = splits
        .par_iter()
        .map(|d| {
            let (r, v, w, x) = d.lengths();
            let case = format!("r={r} v={v} w={w} x={x}");
            let outcome = match find_pump_witness(d, n_max) {
                Some(_) => CaseOutcome::Pass,
                None => CaseOutcome::Fail(format!(
                    "v={:?} x={:?} stays in the language for n=0..={n_max}",
                    d.v, d.x
                )),
            };
            Tally::single(case, outcome)
        })
        .reduce(Tally::default, Tally::merge);
    VerificationReport::new(
        "pumping",
        vec![
            ("p", p.to_string()),
            ("witness_max", n_max.to_string()),
            ("string_length", s.len().to_string()),
        ],
        tally,
        UnknownPolicy::Strict,
        start.elapsed(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent count: choose the window start and its length, then the
    /// split of the window into v, w, x with v or x non-empty.
    fn count_by_windows(len: usize, p: usize) -> usize {
        let mut count = 0;
        for start in 0..=len {
            for width in 0..=p.min(len - start) {
                // (v, w, x) with v + w + x = width, minus the all-in-w split
                let splits = (width + 1) * (width + 2) / 2;
                count += splits - 1;
            }
        }
        count
    }

    #[test]
    fn two_letter_string() {
        let all: Vec<_> = enumerate_decompositions("ab", 2).collect();
        assert_eq!(all.len(), count_by_windows(2, 2));
        assert_eq!(all.len(), 9);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 9);
        for d in &all {
            assert_eq!(format!("{}{}{}{}{}", d.r, d.v, d.w, d.x, d.y), "ab");
        }
    }

    #[test]
    fn pumping_length_one() {
        for d in enumerate_decompositions("uuu0h", 1) {
            let (_, v, w, x) = d.lengths();
            assert_eq!(w, 0);
            assert_eq!(v + x, 1);
        }
    }

    #[test]
    fn lexicographic_order() {
        let keys: Vec<_> = enumerate_decompositions("uuuuuuu000h", 3)
            .map(|d| d.lengths())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys.len(), count_by_windows(11, 3));
    }

    #[test]
    fn counts_match_brute_force() {
        // brute force over all cut points 0 <= a <= b <= c <= d <= len
        for len in 0..=12usize {
            let s: String = (0..len)
                .map(|i| if i % 2 == 0 { 'u' } else { '0' })
                .collect();
            for p in 1..=4 {
                let mut brute = 0;
                for a in 0..=len {
                    for b in a..=len {
                        for c in b..=len {
                            for d in c..=len {
                                if d - a <= p && (b - a) + (d - c) >= 1 {
                                    brute += 1;
                                }
                            }
                        }
                    }
                }
                assert_eq!(
                    enumerate_decompositions(&s, p).count(),
                    brute,
                    "len {len} p {p}"
                );
            }
        }
    }

    fn split(s: &str, r: usize, v: usize, w: usize, x: usize) -> Decomposition {
        enumerate_decompositions(s, 3)
            .find(|d| d.lengths() == (r, v, w, x))
            .unwrap()
    }

    #[test]
    fn witnesses_for_the_three_cases() {
        let s = pump_string(3);
        assert_eq!(s, "uuuuuuu000h");
        // window inside the u block: pumping down leaves too few u's
        assert_eq!(find_pump_witness(&split(&s, 2, 1, 1, 1), 8), Some(0));
        // window inside the 0 block: pumping up needs more u's
        assert_eq!(find_pump_witness(&split(&s, 7, 1, 0, 1), 8), Some(2));
        assert_eq!(find_pump_witness(&split(&s, 8, 1, 0, 0), 8), Some(2));
        // straddling, v = u^2 and x = 0
        let d = split(&s, 5, 2, 0, 1);
        assert_eq!((d.v.as_str(), d.x.as_str()), ("uu", "0"));
        assert_eq!(find_pump_witness(&d, 8), Some(2));
        // n = 1 always reproduces s, which is in the language
        assert!(in_lcc_prime(&d.pumped(1)));
    }

    #[test]
    fn small_certificates() {
        for p in 1..=4 {
            let report = verify_lemma_notcf(p, 8);
            assert!(report.holds(), "{}", report.summary());
            assert_eq!(
                report.total() as usize,
                count_by_windows(pump_string(p).len(), p)
            );
        }
        assert_eq!(pump_string(1), "u0h");
    }
}
