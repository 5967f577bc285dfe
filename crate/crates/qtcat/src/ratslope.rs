//! Rational-slope q,t-Catalan combinatorics: r x s Dyck paths with the
//! h+/h- cell statistics, the word encodings and chain constructions for
//! the (4m+2) x 4, (4m-1) x 4 and (3m-1) x 3 triangles, closed
//! coefficient formulas, and the two-row construction for r x 3 paths.
//!
//! Slope comparisons are exact integer cross-multiplications; a cell with
//! leg zero has upper bound +infinity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::chains::ChainSystem;
use crate::poly::QtPoly;
use crate::{Error, Result};

/// Number of lattice squares of row i (0 = bottom) lying entirely above
/// the diagonal of the r x s triangle.
fn diag_cells(r: u32, s: u32, i: u32) -> u32 {
    (r as u64 * i as u64 / s as u64) as u32
}

/// An r x s Dyck path, stored as the per-row count of full squares
/// between the diagonal and the path.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RsDyckPath {
    r: u32,
    s: u32,
    row_cells: Vec<u32>,
}

impl RsDyckPath {
    pub fn new(r: u32, s: u32, row_cells: Vec<u32>) -> Result<Self> {
        if r == 0 || s == 0 || row_cells.len() != s as usize {
            return Err(Error::BadParameters("need r,s >= 1 and one cell count per row".into()));
        }
        let mut prev_above = 0;
        for (i, &cells) in row_cells.iter().enumerate() {
            let avail = diag_cells(r, s, i as u32);
            if cells > avail {
                return Err(Error::BadParameters(format!(
                    "row {i} holds at most {avail} cells above the diagonal"
                )));
            }
            // cells above the path must weakly grow with the row index
            let above = avail - cells;
            if above < prev_above {
                return Err(Error::BadParameters(format!(
                    "row {i} breaks the lattice-path staircase"
                )));
            }
            prev_above = above;
        }
        Ok(RsDyckPath { r, s, row_cells })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn row_cells(&self) -> &[u32] {
        &self.row_cells
    }

    /// Squares entirely above the diagonal and below the path.
    pub fn area(&self) -> u32 {
        self.row_cells.iter().sum()
    }

    /// Per-row counts of cells above the path (a partition read top row
    /// first).
    fn above_counts(&self) -> Vec<u32> {
        (0..self.s)
            .map(|i| diag_cells(self.r, self.s, i) - self.row_cells[i as usize])
            .collect()
    }

    /// (arm, leg) of every cell of the partition diagram above the path.
    pub fn diagram_cells(&self) -> Vec<(u32, u32)> {
        let above = self.above_counts();
        let mut out = Vec::new();
        for i in 0..above.len() {
            for j in 0..above[i] {
                let arm = above[i] - 1 - j;
                let leg = (0..i).filter(|&ip| above[ip] > j).count() as u32;
                out.push((arm, leg));
            }
        }
        out
    }
}

impl fmt::Display for RsDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.row_cells.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Area together with both slope statistics of a path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathStats {
    pub area: u32,
    pub h_plus: u32,
    pub h_minus: u32,
}

/// Statistics of a path at slope num/den: h+ counts cells with
/// arm/(leg+1) <= num/den < (arm+1)/leg, h- the variant with the strict
/// and weak comparisons exchanged; (arm+1)/leg is +infinity when leg = 0.
pub fn path_stats(p: &RsDyckPath, slope_num: u32, slope_den: u32) -> PathStats {
    let (num, den) = (slope_num as u64, slope_den as u64);
    let mut h_plus = 0;
    let mut h_minus = 0;
    for (arm, leg) in p.diagram_cells() {
        let (a, l) = (arm as u64, leg as u64);
        let low_weak = a * den <= num * (l + 1);
        let low_strict = a * den < num * (l + 1);
        let high_strict = l == 0 || num * l < (a + 1) * den;
        let high_weak = l == 0 || num * l <= (a + 1) * den;
        if low_weak && high_strict {
            h_plus += 1;
        }
        if low_strict && high_weak {
            h_minus += 1;
        }
    }
    PathStats { area: p.area(), h_plus, h_minus }
}

/// All r x s Dyck paths, ordered lexicographically by their cells-above
/// profile.
pub fn enumerate_paths(r: u32, s: u32) -> Vec<RsDyckPath> {
    let mut out = Vec::new();
    let mut above = vec![0u32; s as usize];
    fn rec(r: u32, s: u32, i: u32, above: &mut Vec<u32>, out: &mut Vec<RsDyckPath>) {
        if i == s {
            let row_cells = (0..s)
                .map(|i| diag_cells(r, s, i) - above[i as usize])
                .collect();
            out.push(RsDyckPath { r, s, row_cells });
            return;
        }
        let lo = if i == 0 { 0 } else { above[i as usize - 1] };
        for a in lo..=diag_cells(r, s, i) {
            above[i as usize] = a;
            rec(r, s, i + 1, above, out);
        }
        above[i as usize] = 0;
    }
    rec(r, s, 0, &mut above, &mut out);
    out
}

/// The rational q,t-Catalan polynomial: sum of q^area t^{h+_{r/s}} over
/// all r x s Dyck paths.
pub fn rs_genfun(r: u32, s: u32) -> QtPoly {
    let mut p = QtPoly::zero();
    for path in enumerate_paths(r, s) {
        let st = path_stats(&path, r, s);
        p = p + QtPoly::monomial(st.area, st.h_plus, 1);
    }
    p
}

/// The three triangle families whose chain constructions are implemented.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum RsCase {
    /// (4m+2) x 4 paths.
    FourMPlus2,
    /// (4m-1) x 4 paths.
    FourMMinus1,
    /// (3m-1) x 3 paths.
    ThreeMMinus1,
}

impl RsCase {
    pub fn dims(&self, m: u32) -> (u32, u32) {
        match self {
            RsCase::FourMPlus2 => (4 * m + 2, 4),
            RsCase::FourMMinus1 => (4 * m - 1, 4),
            RsCase::ThreeMMinus1 => (3 * m - 1, 3),
        }
    }
}

impl fmt::Display for RsCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RsCase::FourMPlus2 => write!(f, "(4m+2)x4"),
            RsCase::FourMMinus1 => write!(f, "(4m-1)x4"),
            RsCase::ThreeMMinus1 => write!(f, "(3m-1)x3"),
        }
    }
}

/// Word encoding of a path in one of the three families: row i holds
/// m*i - gamma[i] cells above the path, so entries may dip below zero
/// where the triangle is wider than the m-Dyck one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RsWord {
    case: RsCase,
    m: u32,
    gamma: Vec<i64>,
}

impl RsWord {
    pub fn new(case: RsCase, m: u32, gamma: Vec<i64>) -> Result<Self> {
        if m == 0 || (case == RsCase::FourMMinus1 && 4 * m < 1) {
            return Err(Error::BadParameters("need m >= 1".into()));
        }
        let (r, s) = case.dims(m);
        if gamma.len() != s as usize {
            return Err(Error::CaseMismatch);
        }
        if gamma[0] != 0 {
            return Err(Error::BadParameters("gamma[0] must be 0".into()));
        }
        for i in 1..gamma.len() {
            let lower = m as i64 * i as i64 - diag_cells(r, s, i as u32) as i64;
            if gamma[i] < lower || gamma[i] > gamma[i - 1] + m as i64 {
                return Err(Error::BadParameters(format!("gamma[{i}] out of range")));
            }
        }
        Ok(RsWord { case, m, gamma })
    }

    pub fn case(&self) -> RsCase {
        self.case
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn to_path(&self) -> RsDyckPath {
        let (r, s) = self.case.dims(self.m);
        let row_cells = (0..s)
            .map(|i| {
                let above = self.m as i64 * i as i64 - self.gamma[i as usize];
                (diag_cells(r, s, i) as i64 - above) as u32
            })
            .collect();
        RsDyckPath { r, s, row_cells }
    }

    pub fn from_path(p: &RsDyckPath, case: RsCase, m: u32) -> Result<RsWord> {
        if case.dims(m) != (p.r, p.s) {
            return Err(Error::CaseMismatch);
        }
        let gamma = p
            .above_counts()
            .iter()
            .enumerate()
            .map(|(i, &above)| m as i64 * i as i64 - above as i64)
            .collect();
        RsWord::new(case, m, gamma)
    }

    pub fn area(&self) -> u32 {
        self.to_path().area()
    }

    /// The h+ statistic at integer slope m, the weight the chain maps
    /// shift by +1.
    pub fn hplus_m(&self) -> u32 {
        path_stats(&self.to_path(), self.m, 1).h_plus
    }

    pub fn stats(&self) -> (u32, u32) {
        let st = path_stats(&self.to_path(), self.m, 1);
        (st.area, st.h_plus)
    }
}

impl fmt::Display for RsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rest = &self.gamma[1..];
        if self.gamma.iter().all(|&x| (0..=9).contains(&x)) {
            for x in rest {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let joined =
                rest.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            write!(f, "{joined}")
        }
    }
}

/// All words of the family, in lexicographic gamma order.
pub fn enumerate_rs_words(case: RsCase, m: u32) -> Vec<RsWord> {
    let (r, s) = case.dims(m);
    let mut out = Vec::new();
    let mut gamma = vec![0i64; s as usize];
    fn rec(
        case: RsCase,
        m: u32,
        r: u32,
        s: u32,
        i: u32,
        gamma: &mut Vec<i64>,
        out: &mut Vec<RsWord>,
    ) {
        if i == s {
            out.push(RsWord { case, m, gamma: gamma.clone() });
            return;
        }
        let lower = m as i64 * i as i64 - diag_cells(r, s, i) as i64;
        for v in lower..=gamma[i as usize - 1] + m as i64 {
            gamma[i as usize] = v;
            rec(case, m, r, s, i + 1, gamma, out);
        }
        gamma[i as usize] = 0;
    }
    rec(case, m, r, s, 1, &mut gamma, &mut out);
    out
}

/// Is the word terminal for its family's chain decomposition?
pub fn rs_is_terminal(w: &RsWord) -> bool {
    let g = w.gamma();
    let m = w.m as i64;
    match w.case {
        RsCase::FourMPlus2 => g[2] == -1,
        RsCase::FourMMinus1 => g[1] == 1 && g[2] <= m,
        RsCase::ThreeMMinus1 => g[1] == 1 && g[2] <= m + 1,
    }
}

/// Smallest index i >= 2 with gamma[i] - gamma[i-2] <= m, or s if none.
fn q_index(w: &RsWord) -> usize {
    let g = w.gamma();
    let m = w.m as i64;
    for i in 2..g.len() {
        if g[i] - g[i - 2] <= m {
            return i;
        }
    }
    g.len()
}

fn rs_in_a0(w: &RsWord) -> bool {
    let g = w.gamma();
    let m = w.m as i64;
    let n = g.len();
    let qi = q_index(w);
    let head_ok = g[qi - 1] - 1 <= g[n - 1] + m;
    match w.case {
        RsCase::FourMPlus2 => head_ok && g[qi - 1] >= 0 && g[2] != -1,
        RsCase::FourMMinus1 => head_ok && g[qi - 1] > 1,
        // the explicit complement of D1' and D2'
        RsCase::ThreeMMinus1 => !(g[1] == 1 && g[2] <= m + 1),
    }
}

fn rs_f0(w: &RsWord) -> Result<RsWord> {
    let g = w.gamma();
    let qi = q_index(w);
    let mut out = Vec::with_capacity(g.len());
    out.extend_from_slice(&g[..qi - 1]);
    out.extend_from_slice(&g[qi..]);
    out.push(g[qi - 1] - 1);
    RsWord::new(w.case, w.m, out).map_err(|_| Error::NotInDomain)
}

fn rs_in_a1(w: &RsWord) -> bool {
    let g = w.gamma();
    w.case != RsCase::ThreeMMinus1 && g[2] - g[3] > w.m as i64 + 1
}

fn rs_f1(w: &RsWord) -> Result<RsWord> {
    let g = w.gamma();
    RsWord::new(w.case, w.m, vec![0, g[3] + 1, g[1] - 1, g[2] - 1]).map_err(|_| Error::NotInDomain)
}

/// The chain map of the family: shifts (area, h+_m) by (-1, +1) outside
/// the terminal set.
pub fn rs_chain_map(w: &RsWord) -> Result<RsWord> {
    if rs_is_terminal(w) {
        return Err(Error::NotInDomain);
    }
    if rs_in_a0(w) {
        rs_f0(w)
    } else if rs_in_a1(w) {
        rs_f1(w)
    } else {
        unreachable!("non-terminal word {w:?} outside A0 and A1")
    }
}

pub use crate::mchains::PartLabel;

/// Endpoint sets of the family's chain decomposition with the named
/// parts of its head/tail analysis.
#[derive(Clone, Debug)]
pub struct RsEndpointSets {
    pub initial: Vec<RsWord>,
    pub terminal: Vec<RsWord>,
    pub named_parts: BTreeMap<PartLabel, Vec<RsWord>>,
}

fn rsw(case: RsCase, m: u32, gamma: Vec<i64>) -> RsWord {
    RsWord::new(case, m, gamma).expect("constructed word is valid")
}

/// Endpoint sets from the closed-form descriptions, checked against the
/// complement of the chain-map image.
pub fn rs_endpoint_sets(case: RsCase, m: u32) -> RsEndpointSets {
    let m_i = m as i64;
    let words = enumerate_rs_words(case, m);
    let terminal: Vec<RsWord> = words.iter().filter(|w| rs_is_terminal(w)).cloned().collect();
    let mut named: BTreeMap<PartLabel, Vec<RsWord>> = BTreeMap::new();
    match case {
        RsCase::FourMPlus2 => {
            let mut d1 = Vec::new();
            for g1 in 0..=m_i {
                for g2 in m_i..=g1 + m_i {
                    d1.push(rsw(case, m, vec![0, g1, g2, g2 + m_i]));
                }
            }
            let mut d2 = Vec::new();
            for g1 in 0..m_i {
                for g3 in g1 + m_i..=2 * m_i - 1 {
                    d2.push(rsw(case, m, vec![0, g1, m_i, g3]));
                }
            }
            named.insert(PartLabel::D1, d1);
            named.insert(PartLabel::D2, d2);
            named.insert(PartLabel::D3, Vec::new());
            let (mut d1p, mut d2p) = (Vec::new(), Vec::new());
            for w in &terminal {
                if w.gamma()[1] > w.gamma()[3] {
                    d1p.push(w.clone());
                } else {
                    d2p.push(w.clone());
                }
            }
            named.insert(PartLabel::D1Prime, d1p);
            named.insert(PartLabel::D2Prime, d2p);
            named.insert(PartLabel::D3Prime, Vec::new());
        }
        RsCase::FourMMinus1 => {
            let mut d1 = Vec::new();
            for g1 in 2..=m_i {
                for g2 in m_i..=g1 + m_i {
                    d1.push(rsw(case, m, vec![0, g1, g2, g2 + m_i]));
                }
            }
            d1.push(rsw(case, m, vec![0, 1, m_i + 1, 2 * m_i + 1]));
            let mut d2 = Vec::new();
            for g1 in 2..=m_i {
                for g3 in g1 + m_i..=2 * m_i - 1 {
                    d2.push(rsw(case, m, vec![0, g1, m_i, g3]));
                }
            }
            let mut d3 = Vec::new();
            for g2 in 1..=m_i {
                for g3 in m_i + 1..=g2 + m_i {
                    d3.push(rsw(case, m, vec![0, 1, g2, g3]));
                }
            }
            named.insert(PartLabel::D1, d1);
            named.insert(PartLabel::D2, d2);
            named.insert(PartLabel::D3, d3);
            let (mut d1p, mut d2p, mut d3p) = (Vec::new(), Vec::new(), Vec::new());
            for w in &terminal {
                let g = w.gamma();
                if g[3] > m_i {
                    d3p.push(w.clone());
                } else if g[3] < g[2] {
                    d1p.push(w.clone());
                } else {
                    d2p.push(w.clone());
                }
            }
            named.insert(PartLabel::D1Prime, d1p);
            named.insert(PartLabel::D2Prime, d2p);
            named.insert(PartLabel::D3Prime, d3p);
        }
        RsCase::ThreeMMinus1 => {
            let d1: Vec<RsWord> =
                (1..=m_i).map(|g1| rsw(case, m, vec![0, g1, g1 + m_i])).collect();
            let d2 = vec![rsw(case, m, vec![0, 1, m_i])];
            named.insert(PartLabel::D1, d1);
            named.insert(PartLabel::D2, d2);
            named.insert(PartLabel::D3, Vec::new());
            let d1p: Vec<RsWord> =
                (1..=m_i).map(|g2| rsw(case, m, vec![0, 1, g2])).collect();
            let d2p = vec![rsw(case, m, vec![0, 1, m_i + 1])];
            named.insert(PartLabel::D1Prime, d1p);
            named.insert(PartLabel::D2Prime, d2p);
            named.insert(PartLabel::D3Prime, Vec::new());
        }
    }
    let mut initial: Vec<RsWord> = named[&PartLabel::D1]
        .iter()
        .chain(&named[&PartLabel::D2])
        .chain(&named[&PartLabel::D3])
        .cloned()
        .collect();
    initial.sort();
    // the closed form must agree with the complement of the image
    let image: BTreeSet<RsWord> =
        words.iter().filter_map(|w| rs_chain_map(w).ok()).collect();
    let complement: Vec<RsWord> =
        words.iter().filter(|w| !image.contains(*w)).cloned().collect();
    assert_eq!(initial, complement, "closed-form I disagrees with the image complement");
    // the D' parts partition the terminal set
    let mut primes: Vec<RsWord> = named[&PartLabel::D1Prime]
        .iter()
        .chain(&named[&PartLabel::D2Prime])
        .chain(&named[&PartLabel::D3Prime])
        .cloned()
        .collect();
    primes.sort();
    let mut term_sorted = terminal.clone();
    term_sorted.sort();
    assert_eq!(primes, term_sorted, "D' parts must partition the terminal set");
    RsEndpointSets { initial, terminal, named_parts: named }
}

/// Closed per-part (area, h+_m) formulas of the three families.
pub fn rs_part_stats(label: PartLabel, w: &RsWord) -> Result<(u32, u32)> {
    let sets = rs_endpoint_sets(w.case, w.m);
    if !sets.named_parts.get(&label).is_some_and(|part| part.contains(w)) {
        return Err(Error::WrongPart(label.to_string()));
    }
    let g = w.gamma();
    let m = w.m as i64;
    let (area, h) = match (w.case, label) {
        (RsCase::FourMPlus2, PartLabel::D1) => {
            // the published area formula omits the +m term
            (g[1] + 2 * g[2] + m + 2, 2 * m - g[2])
        }
        (RsCase::FourMPlus2, PartLabel::D2) => (g[1] + g[3] + m + 2, 3 * m - g[3]),
        (RsCase::FourMPlus2, PartLabel::D1Prime) => {
            (g[1] + g[3] + 1, 6 * m + 1 - 3 * g[1] - g[3])
        }
        (RsCase::FourMPlus2, PartLabel::D2Prime) => {
            (g[1] + g[3] + 1, 6 * m - g[1] - 3 * g[3])
        }
        (RsCase::FourMMinus1, PartLabel::D1) => (g[1] + 2 * g[2] + m - 3, 2 * m - g[2]),
        (RsCase::FourMMinus1, PartLabel::D2) => (g[1] + g[3] + m - 3, 3 * m - g[3]),
        (RsCase::FourMMinus1, PartLabel::D3)
        | (RsCase::FourMMinus1, PartLabel::D3Prime) => {
            (g[2] + g[3] - 2, 4 * m - g[2] - g[3])
        }
        (RsCase::FourMMinus1, PartLabel::D1Prime) => {
            (g[2] + g[3] - 2, 6 * m + 2 - 3 * g[2] - g[3])
        }
        (RsCase::FourMMinus1, PartLabel::D2Prime) => {
            (g[2] + g[3] - 2, 6 * m + 1 - g[2] - 3 * g[3])
        }
        (RsCase::ThreeMMinus1, PartLabel::D1) => (2 * g[1] + m - 2, m - g[1]),
        (RsCase::ThreeMMinus1, PartLabel::D2) => (m - 1, m),
        (RsCase::ThreeMMinus1, PartLabel::D1Prime) => (g[2] - 1, 3 * m - 2 * g[2]),
        (RsCase::ThreeMMinus1, PartLabel::D2Prime) => (m, m - 1),
        _ => return Err(Error::WrongPart(label.to_string())),
    };
    Ok((area as u32, h as u32))
}

/// The validated chain system of the family under (area, h+_m).
pub fn rs_chain_system(case: RsCase, m: u32) -> Result<ChainSystem<RsWord>> {
    let words = enumerate_rs_words(case, m);
    let stats: BTreeMap<RsWord, (u32, u32)> =
        words.iter().map(|w| (w.clone(), w.stats())).collect();
    let terminal: BTreeSet<RsWord> =
        words.iter().filter(|w| rs_is_terminal(w)).cloned().collect();
    let mut next = BTreeMap::new();
    for w in &words {
        if !terminal.contains(w) {
            next.insert(w.clone(), rs_chain_map(w)?);
        }
    }
    ChainSystem::new(stats, terminal, next)
}

/// The two rational-slope coefficient formulas.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RsCoeffCase {
    /// C_{2m+1,2,2}, the (4m+2) x 4 family.
    C2m122,
    /// C_{4m-1,4,1}, the (4m-1) x 4 family.
    C4m141,
}

fn floor_half_plus(x: i64) -> u64 {
    std::cmp::max(x.div_euclid(2), 0) as u64
}

/// Closed coefficient of q^j t^k for the family's generating function.
pub fn closed_coeff_rs(case: RsCoeffCase, m: u32, j: u32, k: u32) -> u64 {
    let (m, j, k) = (m as i64, j as i64, k as i64);
    let s = j + k;
    match case {
        RsCoeffCase::C2m122 => {
            if 4 * m + 2 <= s && s <= 6 * m + 2 {
                floor_half_plus(-6 * m + 3 * j + k)
                    .min(floor_half_plus(6 * m + 4 - j - k))
                    .min(floor_half_plus(-6 * m + j + 3 * k))
            } else {
                0
            }
        }
        RsCoeffCase::C4m141 => {
            if 4 * m - 1 <= s && s <= 6 * m - 3 {
                floor_half_plus(-6 * m + 5 + 3 * j + k)
                    .min(floor_half_plus(6 * m - 1 - j - k))
                    .min(floor_half_plus(-6 * m + 5 + j + 3 * k))
            } else if s == 4 * m - 2 {
                floor_half_plus(-m + 2 + j).min(floor_half_plus(-m + 2 + k))
            } else {
                0
            }
        }
    }
}

/// One X-point of the two-row construction for r x 3 paths.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GmRow {
    pub c: u32,
    pub d: u32,
    pub region: u8,
    pub a: u32,
    pub b: u32,
    pub wt1: u32,
    pub wt2: u32,
    pub area: u32,
    pub h_plus: u32,
}

/// The full two-row construction: X-points with their images under f,
/// the involution g on X, and the target set Y.
#[derive(Clone, Debug)]
pub struct GmTables {
    pub r: u32,
    pub k: u32,
    pub rows: Vec<GmRow>,
    pub g: BTreeMap<(u32, u32), (u32, u32)>,
    pub y: BTreeSet<(u32, u32)>,
}

fn gm_area(r: u32, c: u32, d: u32) -> u32 {
    r - 1 - c - d
}

/// h+ of the two-row partition (d, c) at slope r/3: cells x with
/// 3 arm(x) - r leg(x) in {-2, ..., r}.
fn gm_hplus(r: u32, c: u32, d: u32) -> u32 {
    let r = r as i64;
    let mut count = 0;
    for j in 0..d {
        let arm = (d - 1 - j) as i64;
        let leg = i64::from(j < c);
        if (-2..=r).contains(&(3 * arm - r * leg)) {
            count += 1;
        }
    }
    for j in 0..c {
        let arm = (c - 1 - j) as i64;
        if (-2..=r).contains(&(3 * arm)) {
            count += 1;
        }
    }
    count
}

/// Build the r x 3 construction (requires gcd(r,3) = 1 and r > 3) and
/// verify on the way that f is a bijection onto Y, that the reflection of
/// Y is an involution swapping the weights, and that the conjugated map g
/// exchanges area and h+.
pub fn gm_construct(r: u32) -> Result<GmTables> {
    if r <= 3 || r % 3 == 0 {
        return Err(Error::BadParameters("need r > 3 with gcd(r,3) = 1".into()));
    }
    let k = r / 3;
    let dmax = 2 * r / 3;
    let mut x_points = Vec::new();
    for c in 0..=k {
        for d in c..=dmax {
            x_points.push((c, d));
        }
    }
    let y: BTreeSet<(u32, u32)> = (0..r)
        .flat_map(|a| (0..r / 3 + 1).map(move |b| (a, b)))
        .filter(|&(a, b)| a + 3 * b <= r - 1)
        .collect();
    let mut f_map: BTreeMap<(u32, u32), (u32, u32)> = BTreeMap::new();
    let mut rows = Vec::new();
    for &(c, d) in &x_points {
        let (region, a, b) = if d <= k {
            (1u8, d - c, c)
        } else if d - c <= k {
            (2, 3 * d - 2 * k - c, c + k - d)
        } else {
            (3, 3 * c + 2 * k + 2 - d, d - c - k - 1)
        };
        let (wt1, wt2) = (r - 1 - a - 2 * b, a + b);
        let (area, h_plus) = (gm_area(r, c, d), gm_hplus(r, c, d));
        assert!(y.contains(&(a, b)), "f image ({a},{b}) of ({c},{d}) escapes Y");
        assert!(f_map.insert((c, d), (a, b)).is_none());
        assert_eq!((area, h_plus), (wt1, wt2), "f must send (area, h+) to (wt1, wt2)");
        rows.push(GmRow { c, d, region, a, b, wt1, wt2, area, h_plus });
    }
    let image: BTreeSet<(u32, u32)> = f_map.values().copied().collect();
    assert_eq!(image, y, "f must be a bijection onto Y");
    let f_inv: BTreeMap<(u32, u32), (u32, u32)> =
        f_map.iter().map(|(&x, &y)| (y, x)).collect();
    // I(a,b) = (r-1-a-3b, b) swaps wt1 and wt2; g = f^{-1} o I o f
    let mut g = BTreeMap::new();
    for (&x, &(a, b)) in &f_map {
        let ia = r - 1 - a - 3 * b;
        assert!(y.contains(&(ia, b)), "reflection leaves Y at ({a},{b})");
        g.insert(x, f_inv[&(ia, b)]);
    }
    for (&x, &gx) in &g {
        assert_eq!(g[&gx], x, "g must be an involution");
        let (c, d) = x;
        let (gc, gd) = gx;
        assert_eq!(gm_area(r, gc, gd), gm_hplus(r, c, d), "g must swap area and h+");
        assert_eq!(gm_hplus(r, gc, gd), gm_area(r, c, d), "g must swap area and h+");
    }
    Ok(GmTables { r, k, rows, g, y })
}

impl GmTables {
    /// Generating function sum of q^area t^{h+} over X; equals the r x 3
    /// path polynomial.
    pub fn genfun(&self) -> QtPoly {
        let mut p = QtPoly::zero();
        for row in &self.rows {
            p = p + QtPoly::monomial(row.area, row.h_plus, 1);
        }
        p
    }

    /// CSV table "c,d,region,a,b,wt1,wt2".
    pub fn to_csv(&self) -> String {
        let mut out = String::from("c,d,region,a,b,wt1,wt2\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                row.c, row.d, row.region, row.a, row.b, row.wt1, row.wt2
            ));
        }
        out
    }
}
