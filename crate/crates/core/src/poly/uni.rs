use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{MultiPoly, PolyError};
use crate::ffield::{FieldElement, PrimeField};

/// Univariate polynomial with coefficients stored low to high.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(field: PrimeField) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// `Z`.
    pub fn identity(field: PrimeField) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn new(field: PrimeField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn from_values(field: PrimeField, coeffs: &[u64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `Z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, &c| acc * z + c)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, d: &UniPoly) -> Option<(UniPoly, UniPoly)> {
        let dd = d.degree()?;
        let lead_inv = d.coeffs[dd].inv().ok()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top] * lead_inv;
            let shift = top - dd;
            quot[shift] = c;
            for (i, &a) in d.coeffs.iter().enumerate() {
                rem[shift + i] -= c * a;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Some((UniPoly::new(self.field, quot), UniPoly::new(self.field, rem)))
    }

    /// As a one-variable [`MultiPoly`].
    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.field,
            1,
            self.coeffs.iter().enumerate().map(|(i, &c)| (vec![i as u32], c)),
        )
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(self.field, (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(self.field, (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(self.field, out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "Z")?,
                (1, false) => write!(f, "{c}*Z")?,
                (_, true) => write!(f, "Z^{i}")?,
                (_, false) => write!(f, "{c}*Z^{i}")?,
            }
        }
        Ok(())
    }
}

/// Lagrange interpolation through pairs with distinct abscissae.
pub fn interpolate_univariate(
    field: PrimeField,
    points: &[(FieldElement, FieldElement)],
) -> Result<UniPoly, PolyError> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(PolyError::RepeatedAbscissa(x.value()));
        }
    }
    let mut acc = UniPoly::zero(field);
    for (i, &(xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::constant(field.one());
        let mut denom = field.one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &UniPoly::new(field, vec![-xj, field.one()]);
                denom *= xi - xj;
            }
        }
        let c = yi * denom.inv().expect("distinct abscissae");
        acc = &acc + &basis.scale(c);
    }
    Ok(acc)
}
