//! Sparse bivariate polynomials in q and t with arbitrary-precision
//! integer coefficients.
//!
//! The term map is keyed by [`Mono`], whose `Ord` is graded lexicographic
//! with q > t; that order drives the long-division used by
//! [`QtPoly::div_exact`] and makes leading-term lookups O(log n).
//! Stored coefficients are never zero, so map equality is polynomial
//! equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Monomial q^j t^k. Ordered graded-lexicographically with q > t.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Mono {
    pub q: u32,
    pub t: u32,
}

impl Mono {
    pub fn new(q: u32, t: u32) -> Self {
        Mono { q, t }
    }

    pub fn total_degree(&self) -> u32 {
        self.q + self.t
    }

    pub fn swap(&self) -> Self {
        Mono { q: self.t, t: self.q }
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono { q: self.q + other.q, t: self.t + other.t }
    }

    fn divides(&self, other: &Mono) -> bool {
        self.q <= other.q && self.t <= other.t
    }

    fn div(&self, other: &Mono) -> Mono {
        Mono { q: self.q - other.q, t: self.t - other.t }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total_degree(), self.q).cmp(&(other.total_degree(), other.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse exact polynomial in Z[q,t].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QtPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QtPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        QtPoly::monomial(0, 0, c)
    }

    /// c * q^j t^k (the zero polynomial when c = 0).
    pub fn monomial<C: Into<BigInt>>(j: u32, k: u32, c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(j, k), c);
        }
        QtPoly { terms }
    }

    pub fn var_q() -> Self {
        QtPoly::monomial(1, 0, 1)
    }

    pub fn var_t() -> Self {
        QtPoly::monomial(0, 1, 1)
    }

    pub fn q_pow(j: u32) -> Self {
        QtPoly::monomial(j, 0, 1)
    }

    pub fn t_pow(k: u32) -> Self {
        QtPoly::monomial(0, k, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, j: u32, k: u32) -> BigInt {
        self.terms.get(&Mono::new(j, k)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading term under graded-lex order, if nonzero.
    pub fn leading(&self) -> Option<(Mono, &BigInt)> {
        self.terms.last_key_value().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.total_degree())
    }

    fn insert_add(terms: &mut BTreeMap<Mono, BigInt>, m: Mono, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Every q^j t^k becomes q^k t^j. Involutive.
    pub fn swap_qt(&self) -> QtPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.swap(), c.clone())).collect();
        QtPoly { terms }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(m, c)| self.terms.get(&m.swap()) == Some(c))
    }

    /// Coefficients (c(d,0), c(d-1,1), ..., c(0,d)) of the antidiagonal of
    /// total degree d, zeros included.
    pub fn antidiagonal(&self, d: u32) -> Vec<BigInt> {
        (0..=d).map(|k| self.coeff(d - k, k)).collect()
    }

    /// Coefficient vector of p(q, 1), indexed by q-degree.
    pub fn eval_t_one(&self) -> Vec<BigInt> {
        self.collapse(|m| m.q)
    }

    /// Coefficient vector of p(1, t), indexed by t-degree.
    pub fn eval_q_one(&self) -> Vec<BigInt> {
        self.collapse(|m| m.t)
    }

    fn collapse<F: Fn(&Mono) -> u32>(&self, idx: F) -> Vec<BigInt> {
        let n = self.terms.keys().map(&idx).max().map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::zero(); n];
        for (m, c) in &self.terms {
            out[idx(m) as usize] += c;
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn eval_one_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, e: u32) -> QtPoly {
        let mut acc = QtPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the absolute values of all coefficients; zero for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, s: &BigInt) -> QtPoly {
        assert!(!s.is_zero(), "scalar division by zero");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (q, r) = c.div_rem(s);
                assert!(r.is_zero(), "scalar division is not exact");
                (*m, q)
            })
            .collect();
        QtPoly { terms }
    }

    /// Exact quotient self / divisor via multivariate long division under
    /// graded-lex order; `Err(NotPolynomial)` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &QtPoly) -> Result<QtPoly> {
        let (dm, dc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(&rm) {
                return Err(Error::NotPolynomial);
            }
            let (qc, qr) = rc.div_rem(dc);
            if !qr.is_zero() {
                return Err(Error::NotPolynomial);
            }
            let qm = rm.div(&dm);
            // rem -= (qc * qm) * divisor
            for (m, c) in &divisor.terms {
                let prod = c * &qc;
                Self::insert_add(&mut rem.terms, m.mul(&qm), &(-prod));
            }
            quot.insert(qm, qc);
        }
        Ok(QtPoly { terms: quot })
    }

    /// Terms sorted by (q desc, t asc), the canonical JSON order.
    fn json_sorted(&self) -> Vec<(&Mono, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.q.cmp(&a.q).then(a.t.cmp(&b.t)));
        v
    }

    /// Canonical JSON form: {"terms":[{"q":j,"t":k,"c":"<decimal>"}, ...]}
    /// with terms sorted by (q desc, t asc).
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .json_sorted()
            .into_iter()
            .map(|(m, c)| {
                serde_json::json!({"q": m.q, "t": m.t, "c": c.to_string()})
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(v: &serde_json::Value) -> Option<QtPoly> {
        let mut p = QtPoly::zero();
        for term in v.get("terms")?.as_array()? {
            let j = u32::try_from(term.get("q")?.as_u64()?).ok()?;
            let k = u32::try_from(term.get("t")?.as_u64()?).ok()?;
            let c: BigInt = term.get("c")?.as_str()?.parse().ok()?;
            Self::insert_add(&mut p.terms, Mono::new(j, k), &c);
        }
        Some(p)
    }

    /// CSV rows "q,t,c" in the canonical order, with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,t,c\n");
        for (m, c) in self.json_sorted() {
            out.push_str(&format!("{},{},{}\n", m.q, m.t, c));
        }
        out
    }
}

impl fmt::Display for QtPoly {
    /// Deterministic text form, terms sorted by (q desc, t desc),
    /// e.g. "q^3 + q^2 t + q t^2 + q t + t^3".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.q.cmp(&a.q).then(b.t.cmp(&a.t)));
        for (i, (m, c)) in v.into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (m.q == 0 && m.t == 0) {
                parts.push(mag.to_string());
            }
            match m.q {
                0 => {}
                1 => parts.push("q".into()),
                j => parts.push(format!("q^{j}")),
            }
            match m.t {
                0 => {}
                1 => parts.push("t".into()),
                k => parts.push(format!("t^{k}")),
            }
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPoly({self})")
    }
}

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            QtPoly::insert_add(&mut terms, *m, c);
        }
        QtPoly { terms }
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            QtPoly::insert_add(&mut terms, *m, &(-c));
        }
        QtPoly { terms }
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut terms = BTreeMap::new();
        // iterate the smaller factor in the outer loop
        let (small, large) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                QtPoly::insert_add(&mut terms, ma.mul(mb), &(ca * cb));
            }
        }
        QtPoly { terms }
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        QtPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: QtPoly) -> QtPoly { (&self).$method(&rhs) }
        }
        impl $trait<&QtPoly> for QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: &QtPoly) -> QtPoly { (&self).$method(rhs) }
        }
        impl $trait<QtPoly> for &QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: QtPoly) -> QtPoly { self.$method(&rhs) }
        }
    )*};
}
forward_owned_binop!(Add, add; Sub, sub; Mul, mul);

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> QtPoly {
        QtPoly::var_q()
    }

    fn t() -> QtPoly {
        QtPoly::var_t()
    }

    /// t^3 + qt + qt^2 + q^2 t + q^3
    fn c3_m1() -> QtPoly {
        crate::verify::c3_m1_golden()
    }

    #[test]
    fn ring_identities() {
        assert_eq!(&(q() + t()) + &(q() - t()), QtPoly::monomial(1, 0, 2));
        let one = QtPoly::one();
        assert_eq!((&one - &q()) * (&one + &q()), &one - &QtPoly::q_pow(2));
        assert_eq!((q() - t()) * (q() + t()), QtPoly::q_pow(2) - QtPoly::t_pow(2));
    }

    #[test]
    fn swap_examples() {
        let p = QtPoly::q_pow(3) + QtPoly::monomial(1, 1, 1);
        assert_eq!(p.swap_qt(), QtPoly::t_pow(3) + QtPoly::monomial(1, 1, 1));
        assert_eq!(c3_m1().swap_qt(), c3_m1());
        assert_eq!(QtPoly::zero().swap_qt(), QtPoly::zero());
        assert!(c3_m1().is_symmetric());
    }

    #[test]
    fn antidiagonals_of_c3() {
        let c3 = c3_m1();
        let one = BigInt::from(1);
        let zero = BigInt::zero();
        // all four degree-3 monomials of C_3 are present with coefficient 1
        assert_eq!(c3.antidiagonal(3), vec![one.clone(), one.clone(), one.clone(), one.clone()]);
        assert_eq!(c3.antidiagonal(2), vec![zero.clone(), one, zero.clone()]);
        assert_eq!(QtPoly::zero().antidiagonal(2), vec![zero.clone(), zero.clone(), zero]);
    }

    #[test]
    fn exact_division() {
        let q2t2 = QtPoly::q_pow(2) - QtPoly::t_pow(2);
        assert_eq!(q2t2.div_exact(&(q() - t())).unwrap(), q() + t());

        // (q^{m+1}-t^{m+1})/(q-t) with m=2
        let num = QtPoly::q_pow(3) - QtPoly::t_pow(3);
        let want = QtPoly::q_pow(2) + QtPoly::monomial(1, 1, 1) + QtPoly::t_pow(2);
        assert_eq!(num.div_exact(&(q() - t())).unwrap(), want);

        let bad = (QtPoly::one() + q()).div_exact(&(QtPoly::one() - t()));
        assert_eq!(bad, Err(Error::NotPolynomial));
    }

    #[test]
    fn text_format_matches_fixed_order() {
        assert_eq!(c3_m1().to_string(), "q^3 + q^2 t + q t^2 + q t + t^3");
        assert_eq!(QtPoly::zero().to_string(), "0");
        assert_eq!((QtPoly::constant(-2) * q()).to_string(), "-2 q");
    }

    #[test]
    fn json_round_trip_and_order() {
        let p = c3_m1();
        let s = p.to_json_string();
        assert!(s.starts_with(r#"{"terms":[{"c":"1","q":3,"t":0}"#));
        assert_eq!(QtPoly::from_json(&serde_json::from_str(&s).unwrap()).unwrap(), p);
    }

    fn arb_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec(((0u32..6, 0u32..6), -4i64..5), 0..8).prop_map(|v| {
            let mut p = QtPoly::zero();
            for ((j, k), c) in v {
                p = p + QtPoly::monomial(j, k, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn swap_is_ring_homomorphism_and_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).swap_qt(), a.swap_qt() * b.swap_qt());
            prop_assert_eq!(a.swap_qt().swap_qt(), a.clone());
            prop_assert_eq!((&a + &b).swap_qt(), a.swap_qt() + b.swap_qt());
        }

        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.div_exact(&b).unwrap(), a);
        }
    }
}
