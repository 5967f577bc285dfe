//! Integer partitions, cell statistics, and the Garsia-Haiman rational
//! sum for the algebraic higher q,t-Catalan polynomials.
//!
//! The sum runs over partitions mu of n; each summand is
//! T^{m+1} (1-q)(1-t) B Pi / w with the four mu-quantities built from
//! arm/coarm/leg/coleg data. The poles cancel only across the whole sum,
//! so everything stays symbolic: summands are assembled over a common
//! denominator kept as a multiset of small factors, and one exact
//! division at the end produces the polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::dyck::genfun;
use crate::poly::{Mono, QtPoly};
use crate::ratfun::QtFrac;
use crate::ratslope::rs_genfun;
use crate::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadParameters("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParameters("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// One record per cell of the diagram, row-major from the top row.
    pub fn cells(&self) -> Vec<CellData> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &row_len) in self.parts.iter().enumerate() {
            for j in 1..=row_len {
                let col_len = conj.parts[(j - 1) as usize];
                out.push(CellData {
                    row: i as u32 + 1,
                    col: j,
                    arm: row_len - j,
                    coarm: j - 1,
                    leg: col_len - (i as u32 + 1),
                    coleg: i as u32,
                });
            }
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Arm, coarm, leg, coleg of one diagram cell (1-indexed row and column,
/// row 1 at the top).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CellData {
    pub row: u32,
    pub col: u32,
    pub arm: u32,
    pub coarm: u32,
    pub leg: u32,
    pub coleg: u32,
}

/// All partitions of n in reverse-lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: stack.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
        }
    }
    rec(n, n, &mut stack, &mut out);
    out
}

/// The four quantities attached to a partition.
#[derive(Clone, Debug)]
pub struct MuQuantities {
    /// T = prod over cells of q^coarm t^coleg (a monomial).
    pub t: QtPoly,
    /// B = sum over cells of q^coarm t^coleg.
    pub b: QtPoly,
    /// Pi = prod over cells except (1,1) of (1 - q^coarm t^coleg).
    pub pi: QtPoly,
    /// w = prod over cells of (q^arm - t^{leg+1})(t^leg - q^{arm+1}).
    pub w: QtPoly,
}

/// The two factors of w contributed by one cell.
fn w_factors(cell: &CellData) -> [QtPoly; 2] {
    [
        QtPoly::q_pow(cell.arm) - QtPoly::t_pow(cell.leg + 1),
        QtPoly::t_pow(cell.leg) - QtPoly::q_pow(cell.arm + 1),
    ]
}

pub fn mu_quantities(mu: &Partition) -> MuQuantities {
    let cells = mu.cells();
    let mut b = QtPoly::zero();
    let mut pi = QtPoly::one();
    let mut w = QtPoly::one();
    let (mut tq, mut tt) = (0u32, 0u32);
    for c in &cells {
        tq += c.coarm;
        tt += c.coleg;
        b = b + QtPoly::monomial(c.coarm, c.coleg, 1);
        if (c.row, c.col) != (1, 1) {
            pi = pi * (QtPoly::one() - QtPoly::monomial(c.coarm, c.coleg, 1));
        }
        for f in w_factors(c) {
            w = w * f;
        }
    }
    MuQuantities { t: QtPoly::monomial(tq, tt, 1), b, pi, w }
}

/// Numerator of the Garsia-Haiman summand for mu: T^{m+1}(1-q)(1-t)B Pi.
fn summand_numerator(mu: &Partition, m: u32) -> QtPoly {
    let q = mu_quantities(mu);
    q.t.pow(m + 1)
        * (QtPoly::one() - QtPoly::var_q())
        * (QtPoly::one() - QtPoly::var_t())
        * q.b
        * q.pi
}

type FactorKey = Vec<(Mono, BigInt)>;

fn poly_key(p: &QtPoly) -> FactorKey {
    p.terms().map(|(m, c)| (*m, c.clone())).collect()
}

/// Normalize a w-factor so its graded-lex leading coefficient is
/// positive; returns the canonical factor and whether a sign was flipped.
fn normalize_factor(f: QtPoly) -> (QtPoly, bool) {
    let (_, lead) = f.leading().expect("w factors are nonzero");
    if lead.is_negative() {
        (-&f, true)
    } else {
        (f, false)
    }
}

/// The algebraic higher q,t-Catalan polynomial: the Garsia-Haiman sum
/// over partitions of n, evaluated exactly and converted to a polynomial.
/// The result is checked to have nonnegative coefficients.
pub fn ac_genfun(n: u32, m: u32) -> Result<QtPoly> {
    if n == 0 || m == 0 {
        return Err(Error::BadParameters("ac_genfun needs n >= 1 and m >= 1".into()));
    }
    // distinct normalized denominator factors and per-summand multiplicities
    let mut factor_of: BTreeMap<FactorKey, usize> = BTreeMap::new();
    let mut factors: Vec<QtPoly> = Vec::new();
    let mut summands: Vec<(QtPoly, Vec<u32>, bool)> = Vec::new();
    for mu in partitions(n) {
        let mut mult: Vec<u32> = vec![0; factors.len()];
        let mut negate = false;
        for cell in mu.cells() {
            for raw in w_factors(&cell) {
                let (canon, flipped) = normalize_factor(raw);
                negate ^= flipped;
                let idx = *factor_of.entry(poly_key(&canon)).or_insert_with(|| {
                    factors.push(canon);
                    factors.len() - 1
                });
                if idx >= mult.len() {
                    mult.resize(factors.len(), 0);
                }
                mult[idx] += 1;
            }
        }
        summands.push((summand_numerator(&mu, m), mult, negate));
    }
    // common denominator: per-factor maximum multiplicity
    let mut common = vec![0u32; factors.len()];
    for (_, mult, _) in &summands {
        for (i, &e) in mult.iter().enumerate() {
            common[i] = common[i].max(e);
        }
    }
    let mut total = QtPoly::zero();
    for (num, mult, negate) in summands {
        let mut scaled = num;
        for (i, factor) in factors.iter().enumerate() {
            let deficit = common[i] - mult.get(i).copied().unwrap_or(0);
            for _ in 0..deficit {
                scaled = scaled * factor;
            }
        }
        if negate {
            scaled = -&scaled;
        }
        total = total + scaled;
    }
    let mut result = total;
    for (i, factor) in factors.iter().enumerate() {
        for _ in 0..common[i] {
            result = result.div_exact(factor)?;
        }
    }
    assert!(
        result.terms().all(|(_, c)| !c.is_negative()),
        "Garsia-Haiman sum produced a negative coefficient"
    );
    Ok(result)
}

/// Same sum evaluated naively as pairwise fraction arithmetic, foldable
/// in either association order. Much slower than [`ac_genfun`] for large
/// n; used to cross-check the assembled evaluation.
pub fn ac_genfun_fractions(n: u32, m: u32, reverse: bool) -> Result<QtPoly> {
    let mut mus = partitions(n);
    if reverse {
        mus.reverse();
    }
    let mut total = QtFrac::zero();
    for mu in mus {
        let q = mu_quantities(&mu);
        total = total + QtFrac::new(summand_numerator(&mu, m), q.w)?;
    }
    total.to_poly()
}

/// The closed sigma-form expressions for specific generating functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SigmaFormCase {
    /// n = 3 m-Dyck.
    C3,
    /// n = 4 m-Dyck.
    Ac4,
    /// (4m+2) x 4 rational slope, C_{2m+1,2,2}.
    C2m122,
    /// (4m-1) x 4 rational slope, C_{4m-1,4,1}.
    C4m141,
}

fn frac(num: QtPoly, den: QtPoly) -> QtFrac {
    QtFrac::new(num, den).expect("denominator is nonzero")
}

/// Build the quoted closed expression for the case and convert it to a
/// polynomial by exact division.
pub fn sigma_form(case: SigmaFormCase, m: u32) -> Result<QtPoly> {
    let q = QtPoly::var_q;
    let t = QtPoly::var_t;
    let one = QtPoly::one;
    let qmt = || q() - t();
    let q2mt = || QtPoly::q_pow(2) - t();
    let q3mt = || QtPoly::q_pow(3) - t();
    let expr = match case {
        SigmaFormCase::C3 => {
            // sigma(q^{3m} / ((1 - t/q^2)(1 - t/q)))
            //   + q^m t^m (1 + q + t) / ((1 - t^2/q)(1 - q^2/t))
            let head = frac(QtPoly::monomial(3 * m + 3, 0, 1), q2mt() * qmt()).sigma();
            let tail = frac(
                QtPoly::monomial(m + 1, m + 1, 1) * (one() + q() + t()),
                (q() - QtPoly::t_pow(2)) * (t() - QtPoly::q_pow(2)),
            );
            head + tail
        }
        SigmaFormCase::Ac4 => {
            // sigma(q^{6m} / ((1-t/q)(1-t/q^2)(1-t/q^3)))
            //   - sigma(q^{3m} t^m (t/q + t/q^2 + t/q^3 + t^2/q^3)
            //           / ((1-t^2/q^2)(1-t/q)(1-t/q^3)))
            //   + q^{2m} t^{2m} q^2 t^2 (1-qt) / ((q-t^2)(t-q^2)(q-t)(t-q))
            let head = frac(QtPoly::monomial(6 * m + 6, 0, 1), qmt() * q2mt() * q3mt()).sigma();
            let mid_num = QtPoly::monomial(3 * m + 3, m + 1, 1)
                * (QtPoly::q_pow(2) + q() + one() + t());
            let mid =
                frac(mid_num, (QtPoly::q_pow(2) - QtPoly::t_pow(2)) * qmt() * q3mt()).sigma();
            let tail_num = QtPoly::monomial(2 * m + 2, 2 * m + 2, 1) * (one() - q() * t());
            let tail = frac(
                tail_num,
                (q() - QtPoly::t_pow(2)) * (t() - QtPoly::q_pow(2)) * qmt() * (t() - q()),
            );
            head - mid + tail
        }
        SigmaFormCase::C2m122 => {
            // sigma(q^{6m} q^8 / ((q-t)(q^2-t)(q^3-t))
            //       - q^{3m} t^m q^4 t (1+q) / ((q-t)^2 (q^3-t)))
            //   + q^{2m} t^{2m} q^2 t^2 (q^2 t + q t^2 - q^2 - t^2)
            //     / ((q-t)^2 (q^2-t)(t^2-q))
            let head = frac(QtPoly::monomial(6 * m + 8, 0, 1), qmt() * q2mt() * q3mt());
            let mid = frac(
                QtPoly::monomial(3 * m + 4, m + 1, 1) * (one() + q()),
                qmt() * qmt() * q3mt(),
            );
            let tail_num = QtPoly::monomial(2 * m + 2, 2 * m + 2, 1)
                * (QtPoly::monomial(2, 1, 1) + QtPoly::monomial(1, 2, 1)
                    - QtPoly::q_pow(2)
                    - QtPoly::t_pow(2));
            let tail = frac(tail_num, qmt() * qmt() * q2mt() * (QtPoly::t_pow(2) - q()));
            (head - mid).sigma() + tail
        }
        SigmaFormCase::C4m141 => {
            // sigma(q^{6m} q^3 / ((q-t)(q^2-t)(q^3-t))
            //       - q^{3m} t^m q (t + qt + q^2 + q^2 t) / ((q-t)(q^2-t^2)(q^3-t)))
            //   + q^{2m} t^{2m} q t (qt - 1) / ((q-t)^2 (q^2-t)(t^2-q))
            let head = frac(QtPoly::monomial(6 * m + 3, 0, 1), qmt() * q2mt() * q3mt());
            let mid_num = QtPoly::monomial(3 * m + 1, m, 1)
                * (t() + q() * t() + QtPoly::q_pow(2) + QtPoly::monomial(2, 1, 1));
            let mid = frac(mid_num, qmt() * (QtPoly::q_pow(2) - QtPoly::t_pow(2)) * q3mt());
            let tail_num = QtPoly::monomial(2 * m + 1, 2 * m + 1, 1) * (q() * t() - one());
            let tail = frac(tail_num, qmt() * qmt() * q2mt() * (QtPoly::t_pow(2) - q()));
            (head - mid).sigma() + tail
        }
    };
    expr.to_poly()
}

/// Which brute-force polynomial a sigma-form case must reproduce.
pub fn sigma_form_reference(case: SigmaFormCase, m: u32) -> QtPoly {
    match case {
        SigmaFormCase::C3 => genfun(3, m),
        SigmaFormCase::Ac4 => genfun(4, m),
        SigmaFormCase::C2m122 => rs_genfun(4 * m + 2, 4),
        SigmaFormCase::C4m141 => rs_genfun(4 * m - 1, 4),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_enumeration() {
        let p3: Vec<_> = partitions(3).iter().map(|mu| mu.parts().to_vec()).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(1), vec![p(&[1])]);
        assert_eq!(partitions(8).len(), 22);
    }

    #[test]
    fn cell_statistics() {
        let mu = p(&[4, 4, 3, 1]);
        let cell = mu.cells().into_iter().find(|c| (c.row, c.col) == (2, 1)).unwrap();
        assert_eq!((cell.arm, cell.coarm, cell.leg, cell.coleg), (3, 0, 2, 1));

        let single = p(&[1]);
        let c = single.cells()[0];
        assert_eq!((c.arm, c.coarm, c.leg, c.coleg), (0, 0, 0, 0));

        let sq = p(&[2, 2]);
        let c = sq.cells().into_iter().find(|c| (c.row, c.col) == (1, 1)).unwrap();
        assert_eq!((c.arm, c.coarm, c.leg, c.coleg), (1, 0, 1, 0));
    }

    #[test]
    fn mu_quantities_small() {
        let one = QtPoly::one();
        let q = QtPoly::var_q();
        let t = QtPoly::var_t();

        let m1 = mu_quantities(&p(&[1]));
        assert_eq!(m1.t, one);
        assert_eq!(m1.b, one);
        assert_eq!(m1.pi, one);
        assert_eq!(m1.w, (&one - &t) * (&one - &q));

        let m2 = mu_quantities(&p(&[2]));
        assert_eq!(m2.t, q);
        assert_eq!(m2.b, &one + &q);
        assert_eq!(m2.pi, &one - &q);
        let w = (&q - &t) * (&one - &QtPoly::q_pow(2)) * (&one - &t) * (&one - &q);
        assert_eq!(m2.w, w);
    }

    #[test]
    fn conjugation_identities() {
        for n in 1..=8u32 {
            for mu in partitions(n) {
                let a = mu_quantities(&mu);
                let b = mu_quantities(&mu.conjugate());
                assert_eq!(b.t, a.t.swap_qt(), "T at {mu}");
                assert_eq!(b.b, a.b.swap_qt(), "B at {mu}");
                assert_eq!(a.pi, b.pi.swap_qt(), "Pi at {mu}");
                assert_eq!(b.w, a.w.swap_qt(), "w at {mu}");
            }
        }
    }

    #[test]
    fn ac_small_values() {
        for m in 1..=5 {
            assert_eq!(ac_genfun(1, m).unwrap(), QtPoly::one(), "m={m}");
        }
        let want = QtPoly::q_pow(2) + QtPoly::monomial(1, 1, 1) + QtPoly::t_pow(2);
        assert_eq!(ac_genfun(2, 2).unwrap(), want);
        assert_eq!(ac_genfun(3, 1).unwrap(), genfun(3, 1));
    }

    #[test]
    fn ac_matches_combinatorial_small() {
        for n in 1..=4u32 {
            for m in 1..=3u32 {
                assert_eq!(ac_genfun(n, m).unwrap(), genfun(n as usize, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn ac_closed_form_for_n2() {
        for m in 1..=10u32 {
            let num = QtPoly::q_pow(m + 1) - QtPoly::t_pow(m + 1);
            let want = num.div_exact(&(QtPoly::var_q() - QtPoly::var_t())).unwrap();
            assert_eq!(ac_genfun(2, m).unwrap(), want, "m={m}");
        }
    }

    #[test]
    fn association_orders_agree() {
        for n in 1..=4u32 {
            for m in 1..=2u32 {
                let forward = ac_genfun_fractions(n, m, false).unwrap();
                let backward = ac_genfun_fractions(n, m, true).unwrap();
                assert_eq!(forward, backward, "n={n} m={m}");
                assert_eq!(forward, ac_genfun(n, m).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn ac_is_jointly_symmetric() {
        for n in 1..=5u32 {
            for m in 1..=2u32 {
                assert!(ac_genfun(n, m).unwrap().is_symmetric(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn sigma_forms_for_m_dyck() {
        for m in 1..=3 {
            assert_eq!(sigma_form(SigmaFormCase::C3, m).unwrap(), genfun(3, m), "C3 m={m}");
            assert_eq!(sigma_form(SigmaFormCase::Ac4, m).unwrap(), genfun(4, m), "AC4 m={m}");
        }
    }
}
