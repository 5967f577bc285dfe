//! m-Dyck words and their area / dinv statistics.
//!
//! An m-Dyck word of length n is a sequence gamma with gamma[0] = 0,
//! nonnegative entries, and gamma[i] <= gamma[i-1] + m. The generating
//! function summing q^area t^dinv over all such words is the higher
//! q,t-Catalan polynomial computed by [`genfun`].

use std::fmt;

use crate::poly::QtPoly;
use crate::{Error, Result};

/// An m-Dyck word. Ordered lexicographically by gamma.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MDyckWord {
    gamma: Vec<u32>,
    m: u32,
}

impl MDyckWord {
    pub fn new(m: u32, gamma: Vec<u32>) -> Result<Self> {
        if m == 0 || gamma.is_empty() {
            return Err(Error::BadParameters("need m >= 1 and n >= 1".into()));
        }
        if gamma[0] != 0 {
            return Err(Error::BadParameters("gamma[0] must be 0".into()));
        }
        for i in 1..gamma.len() {
            if gamma[i] > gamma[i - 1] + m {
                return Err(Error::BadParameters(format!(
                    "gamma[{i}] exceeds gamma[{}] + {m}",
                    i - 1
                )));
            }
        }
        Ok(MDyckWord { gamma, m })
    }

    pub fn n(&self) -> usize {
        self.gamma.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    pub fn area(&self) -> u32 {
        self.gamma.iter().sum()
    }

    pub fn dinv(&self) -> u32 {
        let g = &self.gamma;
        let mut d = 0;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                d += sc(self.m, g[i] as i64 - g[j] as i64);
            }
        }
        d
    }

    pub fn stats(&self) -> (u32, u32) {
        (self.area(), self.dinv())
    }

    /// Full unambiguous form including the leading zero: "0,2,4,6".
    pub fn full_form(&self) -> String {
        self.gamma
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Compact form drops gamma[0]: "246" when all entries are single
    /// digits, comma-separated otherwise.
    pub fn compact_form(&self) -> String {
        let rest = &self.gamma[1..];
        if self.gamma.iter().all(|&x| x <= 9) {
            rest.iter().map(|x| x.to_string()).collect()
        } else {
            rest.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for MDyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact_form())
    }
}

impl fmt::Debug for MDyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MDyckWord[m={}]({})", self.m, self.full_form())
    }
}

/// The scoring function behind dinv:
/// sc_m(p) = m+1-p for 1 <= p <= m, m+p for -m <= p <= 0, else 0.
pub fn sc(m: u32, p: i64) -> u32 {
    let m = m as i64;
    let v = if (1..=m).contains(&p) {
        m + 1 - p
    } else if (-m..=0).contains(&p) {
        m + p
    } else {
        0
    };
    v as u32
}

/// All m-Dyck words of length n in lexicographic order of gamma.
pub fn enumerate_words(n: usize, m: u32) -> Vec<MDyckWord> {
    assert!(n >= 1 && m >= 1, "need n >= 1 and m >= 1");
    let mut out = Vec::new();
    let mut gamma = vec![0u32; n];
    fn rec(gamma: &mut Vec<u32>, i: usize, n: usize, m: u32, out: &mut Vec<MDyckWord>) {
        if i == n {
            out.push(MDyckWord { gamma: gamma.clone(), m });
            return;
        }
        for v in 0..=gamma[i - 1] + m {
            gamma[i] = v;
            rec(gamma, i + 1, n, m, out);
        }
        gamma[i] = 0;
    }
    if n == 1 {
        out.push(MDyckWord { gamma, m });
    } else {
        rec(&mut gamma, 1, n, m, &mut out);
    }
    out
}

/// Number of m-Dyck words of length n counted by dynamic programming on
/// the last entry, without materializing the words.
pub fn count_words(n: usize, m: u32) -> u128 {
    // counts[h] = number of prefixes ending at height h
    let mut counts = vec![1u128];
    for i in 1..n {
        let max_h = (i as u32 * m) as usize;
        let mut next = vec![0u128; max_h + 1];
        // gamma[i] = v is allowed after height h iff v <= h + m
        for (v, slot) in next.iter_mut().enumerate() {
            *slot = counts
                .iter()
                .enumerate()
                .filter(|(h, _)| v as u32 <= *h as u32 + m)
                .map(|(_, c)| c)
                .sum();
        }
        counts = next;
    }
    counts.iter().sum()
}

/// The higher q,t-Catalan polynomial: sum of q^area t^dinv over all
/// m-Dyck words of length n.
pub fn genfun(n: usize, m: u32) -> QtPoly {
    let mut p = QtPoly::zero();
    for w in enumerate_words(n, m) {
        p = p + QtPoly::monomial(w.area(), w.dinv(), 1);
    }
    p
}

/// Fuss-Catalan number binom((m+1)n, n) / (mn + 1), the count of m-Dyck
/// words of length n.
pub fn fuss_catalan(n: u64, m: u64) -> u128 {
    let top = (m + 1) * n;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..n as u128 {
        num *= top as u128 - i;
        den *= i + 1;
        let g = gcd_u128(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1);
    num / (m as u128 * n as u128 + 1)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Parse a full-form word string like "0,2,4,6".
pub fn parse_full_form(m: u32, s: &str) -> Result<MDyckWord> {
    let gamma = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::BadParameters(format!("bad word {s:?}: {e}")))?;
    MDyckWord::new(m, gamma)
}
