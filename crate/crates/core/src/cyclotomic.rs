//! Exact arithmetic in the cyclotomic field `Q(ζ₄₈)`.
//!
//! Elements are written in the power basis `1, ζ₄₈, …, ζ₄₈^15` with rational
//! coordinates. The 48th cyclotomic polynomial is `X^16 - X^8 + 1`, so
//! products are reduced with the single rule `ζ₄₈^16 = ζ₄₈^8 - 1`.
//!
//! Every constant the identities need lives here: the sixth root `ζ = ζ₄₈^8`,
//! the eight parameters `y_j = ζ₄₈^{6j+1}`, and `x_c = 1 / (ζ₄₈^3 + ζ₄₈^{-3})`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Degree of the field over `Q`.
pub const DEGREE: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter index {0} is outside 0..=7")]
    OutOfRange(i64),
}

/// An element of `Q(ζ₄₈)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    coords: [BigRational; DEGREE],
}

impl CycloNum {
    pub fn zero() -> Self {
        Self {
            coords: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut z = Self::zero();
        z.coords[0] = c;
        z
    }

    /// Builds an element from power-basis coordinates.
    pub fn from_coords(coords: [BigRational; DEGREE]) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[BigRational; DEGREE] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Adds `c · ζ₄₈^k` in place, for any integer `k`.
    pub fn add_root_multiple(&mut self, k: i64, c: &BigRational) {
        for (i, m) in root_table()[k.rem_euclid(48) as usize].iter().enumerate() {
            match m {
                0 => {}
                1 => self.coords[i] += c,
                -1 => self.coords[i] -= c,
                _ => unreachable!("roots of unity have coordinates in {{-1, 0, 1}}"),
            }
        }
    }

    /// Multiplies by `ζ₄₈^k`. Cheaper than a general product.
    pub fn mul_root(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_multiple(i as i64 + k, c);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coords: std::array::from_fn(|i| &self.coords[i] * c),
        }
    }

    /// Complex conjugation, the automorphism `ζ₄₈ ↦ ζ₄₈^{-1}`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out.add_root_multiple(-(i as i64), c);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse, found by solving `self · x = 1` as a 16×16
    /// rational linear system.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        // Column i of the multiplication matrix is self · ζ₄₈^i.
        let columns: Vec<CycloNum> = (0..DEGREE).map(|i| self.mul_root(i as i64)).collect();
        let mut rows: Vec<Vec<BigRational>> = (0..DEGREE)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    columns.iter().map(|col| col.coords[r].clone()).collect();
                row.push(if r == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();

        for col in 0..DEGREE {
            let pivot = (col..DEGREE)
                .find(|&r| !rows[r][col].is_zero())
                .ok_or(CycloError::DivisionByZero)?;
            rows.swap(col, pivot);
            let inv = rows[col][col].recip();
            for x in rows[col].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
        }
        Ok(Self {
            coords: std::array::from_fn(|i| rows[i][DEGREE].clone()),
        })
    }

    /// Floating-point value, for display and sanity checks only.
    pub fn to_complex(&self) -> Complex64 {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = 2.0 * std::f64::consts::PI * i as f64 / 48.0;
                Complex64::from_polar(1.0, angle) * rational_to_f64(c)
            })
            .sum()
    }
}

fn rational_to_f64(c: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or_else(|| {
        // numerator or denominator beyond f64 range: divide in log space
        let n = c.numer().abs().to_string();
        let d = c.denom().to_string();
        let ln = |s: &str| {
            let head: f64 = s[..s.len().min(17)].parse().unwrap();
            head.ln() + (s.len().saturating_sub(17)) as f64 * std::f64::consts::LN_10
        };
        let mag = (ln(&n) - ln(&d)).exp();
        if c.is_negative() {
            -mag
        } else {
            mag
        }
    })
}

/// Power-basis coordinates of `ζ₄₈^k` for `k = 0..48`.
fn root_table() -> &'static [[i8; DEGREE]; 48] {
    static TABLE: std::sync::OnceLock<[[i8; DEGREE]; 48]> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[0i8; DEGREE]; 48];
        let mut cur = [0i8; DEGREE];
        cur[0] = 1;
        for row in table.iter_mut() {
            *row = cur;
            // multiply by ζ₄₈ and reduce the overflow term ζ₄₈^16 = ζ₄₈^8 - 1
            let top = cur[DEGREE - 1];
            for i in (1..DEGREE).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = -top;
            cur[8] += top;
        }
        table
    })
}

/// `ζ₄₈^k`.
pub fn root48(k: i64) -> CycloNum {
    let mut z = CycloNum::zero();
    z.add_root_multiple(k, &BigRational::one());
    z
}

/// The sixth root of unity `ζ = exp(2πi/6)` raised to `l`.
pub fn zeta6(l: i64) -> CycloNum {
    root48(8 * l)
}

/// `y_j = exp(2πi(6j+1)/48)`, `0 ≤ j ≤ 7`.
pub fn y(j: i64) -> Result<CycloNum, CycloError> {
    if !(0..=7).contains(&j) {
        return Err(CycloError::OutOfRange(j));
    }
    Ok(root48(6 * j + 1))
}

/// `2cos(π/8) = ζ₄₈^3 + ζ₄₈^{-3}`.
pub fn two_cos_pi_8() -> CycloNum {
    root48(3) + root48(45)
}

/// `x_c = 1 / (2cos(π/8))`.
pub fn x_c() -> CycloNum {
    two_cos_pi_8().inverse().expect("2cos(π/8) is nonzero")
}

/// `cos(3π/8) = (ζ₄₈^9 + ζ₄₈^{39}) / 2`.
pub fn cos_3pi_8() -> CycloNum {
    half(root48(9) + root48(39))
}

/// `cos(π/4) = (ζ₄₈^6 + ζ₄₈^{42}) / 2`.
pub fn cos_pi_4() -> CycloNum {
    half(root48(6) + root48(42))
}

fn half(z: CycloNum) -> CycloNum {
    z.scale(&BigRational::new(1.into(), 2.into()))
}

impl Default for CycloNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        CycloNum {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(mut self, rhs: CycloNum) -> CycloNum {
        self += &rhs;
        self
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }
}

impl Sub<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        CycloNum {
            coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]),
        }
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(mut self, rhs: CycloNum) -> CycloNum {
        self -= &rhs;
        self
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, rhs: &CycloNum) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a -= b;
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            coords: std::array::from_fn(|i| -&self.coords[i]),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl Mul<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        let mut wide: Vec<BigRational> = vec![BigRational::zero(); 2 * DEGREE - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        // ζ^k = ζ^{k-8} - ζ^{k-16} for k ≥ 16, applied from the top down
        for k in (DEGREE..2 * DEGREE - 1).rev() {
            let c = std::mem::take(&mut wide[k]);
            if !c.is_zero() {
                wide[k - 8] += &c;
                wide[k - 16] -= &c;
            }
        }
        wide.truncate(DEGREE);
        let mut it = wide.into_iter();
        CycloNum {
            coords: std::array::from_fn(|_| it.next().unwrap()),
        }
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        &self * &rhs
    }
}
