//! Arithmetic in prime fields `F_p` with a runtime modulus.
//!
//! Elements carry their modulus, so combining elements of different fields
//! is caught at the point of use. The arithmetic operators panic on a
//! mismatch; the `checked_*` methods report it as an error instead.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements from F_{0} and F_{1} cannot be combined")]
    FieldMismatch(u64, u64),
}

/// The field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Element with residue `v mod p`.
    pub fn elem(&self, v: u64) -> FieldElement {
        FieldElement { value: v % self.p, p: self.p }
    }

    /// Element with residue `v mod p`, for signed `v`.
    pub fn from_i64(&self, v: i64) -> FieldElement {
        let r = (v as i128).rem_euclid(self.p as i128) as u64;
        self.elem(r)
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// All elements `0, 1, ..., p-1`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).map(move |v| self.elem(v))
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// An element of `F_p`, stored as its canonical residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u64,
    p: u64,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// Representative in `(-p/2, p/2]`, convenient for display.
    pub fn signed(&self) -> i64 {
        if self.value > self.p / 2 {
            self.value as i64 - self.p as i64
        } else {
            self.value as i64
        }
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.p, other.p))
        }
    }

    fn same(&self, other: &Self) {
        if let Err(e) = self.check(other) {
            panic!("{e}");
        }
    }

    pub fn checked_add(self, o: Self) -> Result<Self, FieldError> {
        self.check(&o)?;
        Ok(self + o)
    }

    pub fn checked_sub(self, o: Self) -> Result<Self, FieldError> {
        self.check(&o)?;
        Ok(self - o)
    }

    pub fn checked_mul(self, o: Self) -> Result<Self, FieldError> {
        self.check(&o)?;
        Ok(self * o)
    }

    pub fn checked_div(self, o: Self) -> Result<Self, FieldError> {
        self.check(&o)?;
        Ok(self * o.inv()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i128, self.value as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        let v = s0.rem_euclid(self.p as i128) as u64;
        Ok(Self { value: v, p: self.p })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self { value: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.same(&o);
        Self { value: add_mod(self.value, o.value, self.p), p: self.p }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.same(&o);
        Self { value: sub_mod(self.value, o.value, self.p), p: self.p }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.same(&o);
        Self { value: mul_mod(self.value, o.value, self.p), p: self.p }
    }
}

impl Div for FieldElement {
    type Output = Self;
    /// Panics on division by zero; use [`FieldElement::checked_div`] otherwise.
    fn div(self, o: Self) -> Self {
        self.checked_div(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: sub_mod(0, self.value, self.p), p: self.p }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve primes as bases suffice below 2^64.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_examples() {
        let f7 = f(7);
        assert_eq!((f7.elem(5) + f7.elem(4)).value(), 2);
        assert_eq!((f7.elem(3) * f7.elem(5)).value(), 1);
        assert_eq!(f7.elem(3).inv().unwrap().value(), 5);
        assert_eq!(f7.elem(1).inv().unwrap().value(), 1);
        let f2 = f(2);
        assert_eq!((f2.one() + f2.one()).value(), 0);
        assert_eq!(f(13).elem(2).inv().unwrap().value(), 7);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(f(11).zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rejects_composites_and_mixing() {
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(91), Err(FieldError::NotPrime(91)));
        assert!(PrimeField::new(18446744073709551557).is_ok());
        let a = f(7).elem(1);
        let b = f(11).elem(1);
        assert_eq!(a.checked_add(b), Err(FieldError::FieldMismatch(7, 11)));
    }

    #[test]
    #[should_panic]
    fn operator_mixing_panics() {
        let _ = f(7).elem(1) + f(5).elem(1);
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..5000u64 {
            let slow = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), slow, "{n}");
        }
    }

    #[test]
    fn signed_negative_input() {
        assert_eq!(f(7).from_i64(-1).value(), 6);
        assert_eq!(f(7).from_i64(-15).value(), 6);
    }

    proptest! {
        #[test]
        fn field_laws(a in 0u64..1_000_003, b in 0u64..1_000_003, c in 0u64..1_000_003) {
            let fl = f(1_000_003);
            let (a, b, c) = (fl.elem(a), fl.elem(b), fl.elem(c));
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a - a, fl.zero());
            prop_assert!((a * b).value() < fl.p());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), fl.one());
            }
        }

        #[test]
        fn large_modulus_stays_canonical(a: u64, b: u64) {
            let fl = f(18446744073709551557);
            let (x, y) = (fl.elem(a), fl.elem(b));
            prop_assert!((x + y).value() < fl.p());
            prop_assert!((x - y).value() < fl.p());
            prop_assert!((x * y).value() < fl.p());
            prop_assert_eq!((x + y) - y, x);
        }
    }
}
