//! Truncated power series in `x` whose coefficients are integer combinations
//! of monomials `ζ^l y^r`.
//!
//! This is the ring `Z[ζ][y, y⁻¹][[x]]` cut off at `x^N`, restricted to the
//! monomials that actually occur. A coefficient is a sparse map from
//! [`TermKey`] `(l mod 6, r ∈ Z)` to a nonzero big integer.
//!
//! `ζ` is a number, not an indeterminate: `ζ³ = -1` and `ζ² = ζ - 1`. Terms
//! are therefore stored over the basis `{1, ζ}` of `Z[ζ]`, so that two
//! coefficients are equal as complex polynomials in `y` exactly when their
//! stored maps are equal.
//!
//! Invariants:
//! - no zero coefficient is ever stored;
//! - stored keys have `l ∈ {0, 1}`;
//! - every stored power lies in `1..=N`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{CycloError, CycloNum};
use crate::lattice::Direction;
use crate::winding::Winding;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("power x^{power} is outside 1..={order}")]
    PowerOutOfRange { power: usize, order: usize },
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

/// The monomial `ζ^l y^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TermKey {
    pub l: Direction,
    pub r: Winding,
}

impl TermKey {
    pub const fn new(l: Direction, r: Winding) -> Self {
        Self { l, r }
    }
}

impl fmt::Display for TermKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ^{} y^{}", self.l.exponent(), self.r)
    }
}

/// A multiplication by `sign · x^dn ζ^dl y^dr`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub dn: usize,
    pub dl: i64,
    pub dr: Winding,
    pub negate: bool,
}

impl Monomial {
    pub const IDENTITY: Monomial = Monomial::new(0, 0, 0);

    pub const fn new(dn: usize, dl: i64, dr: Winding) -> Self {
        Self {
            dn,
            dl,
            dr,
            negate: false,
        }
    }

    pub const fn negated(self) -> Self {
        Self {
            negate: !self.negate,
            ..self
        }
    }

    /// Product of two monomials.
    pub const fn then(self, other: Monomial) -> Self {
        Self {
            dn: self.dn + other.dn,
            dl: self.dl + other.dl,
            dr: self.dr + other.dr,
            negate: self.negate ^ other.negate,
        }
    }
}

/// Sparse coefficient of one power of `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentCoeff {
    terms: BTreeMap<TermKey, BigInt>,
}

impl LaurentCoeff {
    /// Adds `count · ζ^l y^r`, rewritten over the basis `{1, ζ}`.
    pub fn add(&mut self, key: TermKey, count: &BigInt) {
        if count.is_zero() {
            return;
        }
        let one = TermKey::new(Direction::new(0), key.r);
        let zeta = TermKey::new(Direction::new(1), key.r);
        match key.l.exponent() {
            0 => self.add_canonical(one, count),
            1 => self.add_canonical(zeta, count),
            // ζ² = ζ - 1
            2 => {
                self.add_canonical(zeta, count);
                self.add_canonical(one, &-count);
            }
            3 => self.add_canonical(one, &-count),
            4 => self.add_canonical(zeta, &-count),
            // ζ⁵ = 1 - ζ
            _ => {
                self.add_canonical(one, count);
                self.add_canonical(zeta, &-count);
            }
        }
    }

    fn add_canonical(&mut self, key: TermKey, count: &BigInt) {
        let entry = self.terms.entry(key).or_default();
        *entry += count;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Stored multiplicity of a basis monomial (`l` is 0 or 1).
    pub fn get(&self, key: TermKey) -> BigInt {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TermKey, &BigInt)> {
        self.terms.iter()
    }
}

impl fmt::Display for LaurentCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c}·{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A power series known exactly up to `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    // index i holds the coefficient of x^(i+1)
    coeffs: Vec<LaurentCoeff>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![LaurentCoeff::default(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_term(
        &mut self,
        power: usize,
        key: TermKey,
        count: &BigInt,
    ) -> Result<(), SeriesError> {
        if power == 0 || power > self.order {
            return Err(SeriesError::PowerOutOfRange {
                power,
                order: self.order,
            });
        }
        self.coeffs[power - 1].add(key, count);
        Ok(())
    }

    /// Coefficient of `x^power`; zero outside `1..=order`.
    pub fn coeff(&self, power: usize) -> Option<&LaurentCoeff> {
        power.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentCoeff::is_zero)
    }

    /// Iterates over `(power, key, count)` with nonzero count.
    pub fn terms(&self) -> impl Iterator<Item = (usize, TermKey, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |(k, v)| (i + 1, *k, v)))
    }

    /// Multiplies by a monomial, dropping anything pushed past the order.
    pub fn mul_monomial(&self, m: Monomial) -> Self {
        let mut out = Self::zero(self.order);
        out.add_shifted(self, m);
        out
    }

    /// `self += m · other`.
    pub fn add_shifted(&mut self, other: &TruncatedSeries, m: Monomial) {
        for (power, key, count) in other.terms() {
            let target = power + m.dn;
            if target > self.order {
                continue;
            }
            let shifted = TermKey::new(key.l.shift(m.dl), key.r + m.dr);
            if m.negate {
                self.coeffs[target - 1].add(shifted, &-count);
            } else {
                self.coeffs[target - 1].add(shifted, count);
            }
        }
    }

    /// Termwise sum; both series must share the same order.
    pub fn merge(&mut self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch(self.order, other.order));
        }
        self.add_shifted(other, Monomial::IDENTITY);
        Ok(())
    }

    /// The first power at which two series differ.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Option<usize> {
        let n = self.order.max(other.order);
        let empty = LaurentCoeff::default();
        (1..=n).find(|&p| self.coeff(p).unwrap_or(&empty) != other.coeff(p).unwrap_or(&empty))
    }

    /// Substitutes `y := y_j` and evaluates `ζ^l y_j^r` in `Q(ζ₄₈)`.
    /// Element `i` of the result is the coefficient of `x^(i+1)`.
    pub fn specialize(&self, j: i64) -> Result<Vec<CycloNum>, SeriesError> {
        if !(0..=7).contains(&j) {
            return Err(CycloError::OutOfRange(j).into());
        }
        Ok(self
            .coeffs
            .iter()
            .map(|c| {
                let mut z = CycloNum::zero();
                for (key, count) in c.iter() {
                    let k = 8 * key.l.exponent() as i64 + (6 * j + 1) * key.r as i64;
                    z.add_root_multiple(k, &BigRational::from_integer(count.clone()));
                }
                z
            })
            .collect())
    }

    /// The series `-x`, i.e. `ζ^3 y^0 x`.
    pub fn minus_x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[0].add(TermKey::new(Direction::new(3), 0), &BigInt::one());
        }
        s
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if any {
                    write!(f, " + ")?;
                }
                write!(f, "({c})x^{}", i + 1)?;
                any = true;
            }
        }
        if !any {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{root48, y, zeta6};
    use proptest::prelude::*;

    fn key(l: i64, r: i32) -> TermKey {
        TermKey::new(Direction::new(l), r)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((1..=order, 0i64..6, -8i32..8, -5i64..5), 0..20).prop_map(
            move |terms| {
                let mut s = TruncatedSeries::zero(order);
                for (n, l, r, c) in terms {
                    s.add_term(n, key(l, r), &big(c)).unwrap();
                }
                s
            },
        )
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        (0usize..3, -6i64..6, -5i32..5, any::<bool>()).prop_map(|(dn, dl, dr, neg)| {
            let m = Monomial::new(dn, dl, dr);
            if neg {
                m.negated()
            } else {
                m
            }
        })
    }

    #[test]
    fn add_term_examples() {
        let mut s = TruncatedSeries::zero(4);
        let orig = s.clone();
        s.add_term(2, key(1, 3), &big(1)).unwrap();
        s.add_term(2, key(1, 3), &big(-1)).unwrap();
        assert_eq!(s, orig);
        assert!(s.coeff(2).unwrap().is_empty());

        let mut once = TruncatedSeries::zero(4);
        once.add_term(3, key(0, -2), &big(2)).unwrap();
        let mut twice = TruncatedSeries::zero(4);
        twice.add_term(3, key(0, -2), &big(1)).unwrap();
        twice.add_term(3, key(0, -2), &big(1)).unwrap();
        assert_eq!(once, twice);

        let mut noop = TruncatedSeries::zero(4);
        noop.add_term(1, key(0, 0), &big(0)).unwrap();
        assert_eq!(noop, TruncatedSeries::zero(4));
        assert!(noop.coeff(1).unwrap().is_empty());
    }

    #[test]
    fn sixth_roots_reduce() {
        let mut c = LaurentCoeff::default();
        for l in 0..3 {
            c.add(key(l, 2), &big(1));
            c.add(key(l + 3, 2), &big(1));
        }
        assert!(c.is_zero());
        // 1 - ζ + ζ² = 0
        c.add(key(0, 1), &big(1));
        c.add(key(1, 1), &big(-1));
        c.add(key(2, 1), &big(1));
        assert!(c.is_zero());
        c.add(key(5, 0), &big(2));
        assert_eq!(c.get(key(0, 0)), big(2));
        assert_eq!(c.get(key(1, 0)), big(-2));
        assert!(c.iter().all(|(k, _)| k.l.exponent() < 2));
    }

    #[test]
    fn add_term_range() {
        let mut s = TruncatedSeries::zero(3);
        assert_eq!(
            s.add_term(0, key(0, 0), &big(1)),
            Err(SeriesError::PowerOutOfRange { power: 0, order: 3 })
        );
        assert!(s.add_term(4, key(0, 0), &big(1)).is_err());
        assert!(s.add_term(3, key(0, 0), &big(1)).is_ok());
    }

    #[test]
    fn monomial_shift_by_hand() {
        // s = 2 ζ^3 x + ζ^1 y^2 x^2, times x ζ^{-2} y
        let mut s = TruncatedSeries::zero(3);
        s.add_term(1, key(3, 0), &big(2)).unwrap();
        s.add_term(2, key(1, 2), &big(1)).unwrap();
        let shifted = s.mul_monomial(Monomial::new(1, -2, 1));
        let mut expected = TruncatedSeries::zero(3);
        expected.add_term(2, key(1, 1), &big(2)).unwrap();
        expected.add_term(3, key(5, 3), &big(1)).unwrap();
        assert_eq!(shifted, expected);
        assert_eq!(s.mul_monomial(Monomial::IDENTITY), s);
        // pushed past the order: dropped
        assert!(s.mul_monomial(Monomial::new(3, 0, 0)).is_zero());
    }

    #[test]
    fn specialize_examples() {
        let mut s = TruncatedSeries::zero(2);
        s.add_term(1, key(3, 0), &big(1)).unwrap();
        for j in 0..8 {
            let v = s.specialize(j).unwrap();
            assert_eq!(v[0], -CycloNum::one());
            assert!(v[1].is_zero());
        }
        assert!(TruncatedSeries::zero(5)
            .specialize(3)
            .unwrap()
            .iter()
            .all(CycloNum::is_zero));
        assert!(s.specialize(8).is_err());
    }

    #[test]
    fn specialize_uses_both_roots() {
        let mut s = TruncatedSeries::zero(1);
        s.add_term(1, key(2, -5), &big(3)).unwrap();
        let expected = (&zeta6(2) * &y(4).unwrap().pow(5).inverse().unwrap())
            .scale(&BigRational::from_integer(big(3)));
        assert_eq!(s.specialize(4).unwrap()[0], expected);
    }

    proptest! {
        #[test]
        fn shifts_compose(s in arb_series(6), a in arb_monomial(), b in arb_monomial()) {
            prop_assert_eq!(
                s.mul_monomial(a).mul_monomial(b),
                s.mul_monomial(a.then(b))
            );
            prop_assert_eq!(
                s.mul_monomial(a).mul_monomial(b),
                s.mul_monomial(b).mul_monomial(a)
            );
        }

        #[test]
        fn specialize_is_linear(s in arb_series(5), n in 1usize..=5, l in 0i64..6, r in -8i32..8, c in -4i64..4, j in 0i64..8) {
            let mut t = s.clone();
            t.add_term(n, key(l, r), &big(c)).unwrap();
            let before = s.specialize(j).unwrap();
            let after = t.specialize(j).unwrap();
            let term = root48(8 * l + (6 * j + 1) * r as i64).scale(&BigRational::from_integer(big(c)));
            for p in 0..5 {
                let want = if p + 1 == n { &before[p] + &term } else { before[p].clone() };
                prop_assert_eq!(&after[p], &want);
            }
        }

        #[test]
        fn specialize_respects_monomials(s in arb_series(5), m in arb_monomial(), j in 0i64..8) {
            let shifted = s.mul_monomial(m).specialize(j).unwrap();
            let plain = s.specialize(j).unwrap();
            let factor = {
                let z = root48(8 * m.dl + (6 * j + 1) * m.dr as i64);
                if m.negate { -z } else { z }
            };
            for p in 0..5 {
                let want = if p >= m.dn { &plain[p - m.dn] * &factor } else { CycloNum::zero() };
                prop_assert_eq!(&shifted[p], &want);
            }
        }
    }
}
