use std::fmt;

use super::MultiPoly;
use crate::ffield::{FieldElement, PrimeField};

/// `a0 + a1*X1 + ... + am*Xm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    constant: FieldElement,
    coeffs: Vec<FieldElement>,
}

impl AffineForm {
    pub fn new(constant: FieldElement, coeffs: Vec<FieldElement>) -> Self {
        Self { constant, coeffs }
    }

    pub fn from_values(field: PrimeField, constant: u64, coeffs: &[u64]) -> Self {
        Self::new(field.elem(constant), coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    /// The coordinate function `X_i` in `nvars` variables.
    pub fn coordinate(field: PrimeField, nvars: usize, i: usize) -> Self {
        let mut coeffs = vec![field.zero(); nvars];
        coeffs[i] = field.one();
        Self::new(field.zero(), coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.constant.field()
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn constant(&self) -> FieldElement {
        self.constant
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs[i]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &[FieldElement]) -> FieldElement {
        assert_eq!(x.len(), self.coeffs.len(), "point dimension mismatch");
        self.coeffs.iter().zip(x).fold(self.constant, |acc, (&a, &b)| acc + a * b)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        Self::new(self.constant * c, self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn add(&self, o: &AffineForm) -> Self {
        assert_eq!(self.nvars(), o.nvars());
        Self::new(
            self.constant + o.constant,
            self.coeffs.iter().zip(&o.coeffs).map(|(&a, &b)| a + b).collect(),
        )
    }

    pub fn to_poly(&self) -> MultiPoly {
        let n = self.nvars();
        let field = self.field();
        let mut terms = vec![(vec![0u32; n], self.constant)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0u32; n];
            e[i] = 1;
            terms.push((e, c));
        }
        MultiPoly::from_terms(field, n, terms)
    }

    /// Composition with an affine map given by one form per variable of `self`.
    pub fn compose(&self, maps: &[AffineForm]) -> AffineForm {
        assert_eq!(maps.len(), self.nvars());
        let k = maps.first().map_or(0, |m| m.nvars());
        let field = self.field();
        let mut out = AffineForm::new(self.constant, vec![field.zero(); k]);
        for (a, m) in self.coeffs.iter().zip(maps) {
            out = out.add(&m.scale(*a));
        }
        out
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}
