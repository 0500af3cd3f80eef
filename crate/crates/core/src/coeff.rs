//! Exact scalars in the cyclotomic field Q(ζ_r) for r ∈ {1, 2, 3}.
//!
//! An element is stored as `a + b·ω` with rational `a`, `b`. For r ≤ 2 the
//! field is Q itself (ω = 1 or ω = −1) and `b` is always zero; for r = 3 the
//! basis {1, ω} is reduced with ω² = −1 − ω.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    order: u8,
    a: Rational,
    b: Rational,
}

impl CycNum {
    fn raw(order: u8, a: Rational, b: Rational) -> Self {
        debug_assert!(order == 3 || b.is_zero());
        CycNum { order, a, b }
    }

    pub fn check_order(order: u8) -> Result<u8> {
        match order {
            1..=3 => Ok(order),
            other => Err(Error::UnsupportedOrder(other)),
        }
    }

    pub fn zero(order: u8) -> Self {
        Self::raw(order, Rational::zero(), Rational::zero())
    }

    pub fn one(order: u8) -> Self {
        Self::raw(order, Rational::one(), Rational::zero())
    }

    pub fn from_int(v: i64, order: u8) -> Self {
        Self::raw(order, rat_int(v), Rational::zero())
    }

    pub fn from_rational(q: Rational, order: u8) -> Self {
        Self::raw(order, q, Rational::zero())
    }

    /// `a + b·ω`; for orders 1 and 2 the ω-part is folded into the rational part.
    pub fn from_coords(a: Rational, b: Rational, order: u8) -> Self {
        match order {
            1 => Self::raw(1, a + b, Rational::zero()),
            2 => Self::raw(2, a - b, Rational::zero()),
            _ => Self::raw(order, a, b),
        }
    }

    /// The primitive root ω = e^{2πi/r}.
    pub fn omega(order: u8) -> Self {
        Self::from_coords(Rational::zero(), Rational::one(), order)
    }

    /// ω^k, depending only on k mod r.
    pub fn omega_pow(k: i64, order: u8) -> Self {
        match (k.rem_euclid(order as i64), order) {
            (0, _) => Self::one(order),
            (1, 2) => Self::from_int(-1, 2),
            (1, 3) => Self::omega(3),
            (2, 3) => Self::from_coords(rat_int(-1), rat_int(-1), 3),
            _ => unreachable!(),
        }
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn coords(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Re-reads the coordinates in another order. Only valid for rational values.
    pub fn with_order(&self, order: u8) -> Result<Self> {
        match self.as_rational() {
            Some(q) => Ok(Self::from_rational(q.clone(), order)),
            None => Err(Error::OrderMismatch(self.order, order)),
        }
    }

    fn same_order(&self, other: &Self) -> Result<u8> {
        if self.order == other.order {
            Ok(self.order)
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        Ok(Self::raw(order, &self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        Ok(Self::raw(order, &self.a - &other.a, &self.b - &other.b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        if order != 3 {
            return Ok(Self::raw(order, &self.a * &other.a, Rational::zero()));
        }
        // (a + bω)(c + dω) = ac − bd + (ad + bc − bd)ω
        let bd = &self.b * &other.b;
        let a = &self.a * &other.a - &bd;
        let b = &self.a * &other.b + &self.b * &other.a - bd;
        Ok(Self::raw(3, a, b))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::raw(self.order, &self.a * q, &self.b * q)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        if k == 1 {
            return self.clone();
        }
        let k = BigInt::from(k);
        Self::raw(self.order, &self.a * &k, &self.b * &k)
    }

    /// Complex conjugate; ω̄ = ω² = −1 − ω.
    pub fn conj(&self) -> Self {
        if self.order != 3 {
            return self.clone();
        }
        Self::raw(3, &self.a - &self.b, -self.b.clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.order != 3 {
            return Ok(Self::raw(self.order, self.a.recip(), Rational::zero()));
        }
        // N(a + bω) = a² − ab + b²
        let norm = &self.a * &self.a - &self.a * &self.b + &self.b * &self.b;
        Ok(self.conj().scale(&norm.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycNum> for &CycNum {
            type Output = CycNum;
            /// Panics on mismatched orders; use the `try_` form to get a `Result`.
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $trait<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::raw(self.order, -self.a, -self.b)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -(self.clone())
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycNum {
    /// `p/q`, `p/q*w`, or `p/q+p'/q'*w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let w = fmt_rational(&self.b.abs());
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{w}*w");
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{w}*w", fmt_rational(&self.a))
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (r={})", self.order)
    }
}
