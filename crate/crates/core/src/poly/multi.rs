use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AffineForm, Monomial, PolyError, UniPoly};
use crate::ffield::{add_mod, mul_mod, sub_mod, FieldElement, PrimeField};

/// Sparse polynomial in `nvars` variables.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so the zero polynomial has no terms and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    field: PrimeField,
    nvars: usize,
    terms: Vec<(Monomial, u64)>,
}

impl MultiPoly {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        assert!(nvars <= super::MAX_VARS, "at most {} variables are supported", super::MAX_VARS);
        Self { field, nvars, terms: Vec::new() }
    }

    pub fn constant(c: FieldElement, nvars: usize) -> Self {
        let mut p = Self::zero(c.field(), nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::ONE, c.value()));
        }
        p
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::constant(field.one(), nvars)
    }

    /// The variable `X_{i+1}` (zero-based index `i`).
    pub fn var(field: PrimeField, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(field, nvars);
        p.terms.push((Monomial::var(i, 1), 1 % field.p()));
        p
    }

    /// `c * X^e`.
    pub fn monomial(c: FieldElement, exps: &[u32]) -> Self {
        Self::from_terms(c.field(), exps.len(), [(exps.to_vec(), c)])
    }

    /// Sums the given terms; repeated exponent vectors are combined.
    pub fn from_terms<I>(field: PrimeField, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, FieldElement)>,
    {
        let raw = terms
            .into_iter()
            .map(|(e, c)| {
                assert_eq!(e.len(), nvars, "exponent vector length");
                assert_eq!(c.field(), field, "coefficient field");
                (Monomial::new(&e), c.value())
            })
            .collect();
        Self::from_raw(field, nvars, raw)
    }

    pub(crate) fn from_raw(field: PrimeField, nvars: usize, mut raw: Vec<(Monomial, u64)>) -> Self {
        let p = field.p();
        raw.sort_unstable_by_key(|t| t.0);
        let mut terms: Vec<(Monomial, u64)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == m => last.1 = add_mod(last.1, c, p),
                _ => terms.push((m, c % p)),
            }
        }
        terms.retain(|t| t.1 != 0);
        Self { field, nvars, terms }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, FieldElement)> + '_ {
        self.terms.iter().map(|&(m, c)| (m, self.field.elem(c)))
    }

    pub fn coeff(&self, exps: &[u32]) -> FieldElement {
        self.coeff_of(&Monomial::new(exps))
    }

    pub fn coeff_of(&self, m: &Monomial) -> FieldElement {
        match self.terms.binary_search_by_key(m, |t| t.0) {
            Ok(i) => self.field.elem(self.terms[i].1),
            Err(_) => self.field.zero(),
        }
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.last().map_or(0, |t| t.0.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(var)).max().unwrap_or(0)
    }

    /// Largest term under graded-lex order.
    pub fn leading_term(&self) -> Option<(Monomial, FieldElement)> {
        self.terms.last().map(|&(m, c)| (m, self.field.elem(c)))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, self.nvars);
        }
        let p = self.field.p();
        Self {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|&(m, a)| (m, mul_mod(a, c.value(), p))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        let p = self.field.p();
        let maxdeg = self.degree() as usize;
        let powers: Vec<Vec<u64>> = point
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(maxdeg + 1);
                let mut acc = 1 % p;
                for _ in 0..=maxdeg {
                    v.push(acc);
                    acc = mul_mod(acc, x.value(), p);
                }
                v
            })
            .collect();
        let mut sum = 0u64;
        for &(m, c) in &self.terms {
            let mut t = c;
            for (i, pw) in powers.iter().enumerate() {
                t = mul_mod(t, pw[m.exp(i) as usize], p);
            }
            sum = add_mod(sum, t, p);
        }
        Ok(self.field.elem(sum))
    }

    /// Evaluation at a point of matching dimension; panics on mismatch.
    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        self.evaluate(point).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Replaces `X_i` by `forms[i]`; all forms share the new variable count.
    pub fn substitute_affine(&self, forms: &[AffineForm]) -> MultiPoly {
        assert_eq!(forms.len(), self.nvars, "one form per variable");
        let k = forms.first().map_or(0, |f| f.nvars());
        let polys: Vec<MultiPoly> = forms.iter().map(|f| f.to_poly()).collect();
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(self.nvars);
        for (i, g) in polys.iter().enumerate() {
            let top = self.degree_in(i);
            let mut v = vec![MultiPoly::one(self.field, k)];
            for j in 1..=top as usize {
                let next = &v[j - 1] * g;
                v.push(next);
            }
            powers.push(v);
        }
        let mut raw = Vec::new();
        for (m, c) in self.terms() {
            let mut t = MultiPoly::constant(c, k);
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = &t * &pw[e];
                }
            }
            raw.extend(t.terms);
        }
        MultiPoly::from_raw(self.field, k, raw)
    }

    /// `f(X1, ..., X_{m-1}, L(X1, ..., X_{m-1}))`.
    pub fn restrict_to_hyperplane(&self, l: &AffineForm) -> Result<MultiPoly, PolyError> {
        if self.nvars < 1 || l.nvars() + 1 != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars.saturating_sub(1),
                got: l.nvars(),
            });
        }
        let n = l.nvars();
        let mut forms: Vec<AffineForm> =
            (0..n).map(|i| AffineForm::coordinate(self.field, n, i)).collect();
        forms.push(l.clone());
        Ok(self.substitute_affine(&forms))
    }

    /// `g(Z) = f(base + Z * dir)`.
    pub fn restrict_to_line(
        &self,
        base: &[FieldElement],
        dir: &[FieldElement],
    ) -> Result<UniPoly, PolyError> {
        for v in [base, dir] {
            if v.len() != self.nvars {
                return Err(PolyError::DimensionMismatch { expected: self.nvars, got: v.len() });
            }
        }
        if dir.iter().all(|c| c.is_zero()) {
            return Err(PolyError::ZeroDirection);
        }
        let forms: Vec<AffineForm> =
            base.iter().zip(dir).map(|(&b, &d)| AffineForm::new(b, vec![d])).collect();
        Ok(self.substitute_affine(&forms).to_uni())
    }

    /// Coefficient of `X_{var+1}^k`, as a polynomial in the remaining variables.
    pub fn coeff_extract(&self, var: usize, k: u32) -> Result<MultiPoly, PolyError> {
        if var >= self.nvars {
            return Err(PolyError::VariableOutOfRange { index: var, nvars: self.nvars });
        }
        let raw = self
            .terms
            .iter()
            .filter(|t| t.0.exp(var) == k)
            .map(|&(m, c)| (m.drop_var(var, self.nvars), c))
            .collect();
        Ok(MultiPoly::from_raw(self.field, self.nvars - 1, raw))
    }

    /// Converts a polynomial in one variable (or a constant) to [`UniPoly`].
    pub fn to_uni(&self) -> UniPoly {
        assert!(self.nvars <= 1, "not univariate");
        let mut c = vec![self.field.zero(); self.degree() as usize + 1];
        for (m, v) in self.terms() {
            c[m.degree() as usize] = v;
        }
        UniPoly::new(self.field, c)
    }

    /// Same polynomial viewed in `nvars` variables, padding new trailing variables.
    pub fn extend_vars(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars);
        Self { field: self.field, nvars, terms: self.terms.clone() }
    }

    fn combine(&self, o: &MultiPoly, negate: bool) -> MultiPoly {
        assert_eq!(self.field, o.field, "polynomials over different fields");
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let p = self.field.p();
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let take_left = j == o.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < o.terms[j].0);
            let take_right =
                i == self.terms.len() || (j < o.terms.len() && o.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i]);
                i += 1;
            } else if take_right {
                let c = if negate { sub_mod(0, o.terms[j].1, p) } else { o.terms[j].1 };
                out.push((o.terms[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    sub_mod(self.terms[i].1, o.terms[j].1, p)
                } else {
                    add_mod(self.terms[i].1, o.terms[j].1, p)
                };
                if c != 0 {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { field: self.field, nvars: self.nvars, terms: out }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.combine(o, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.combine(o, true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::zero(self.field, self.nvars).combine(self, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.field, o.field, "polynomials over different fields");
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let p = self.field.p();
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &o.terms {
                raw.push((ma.mul(&mb), mul_mod(ca, cb, p)));
            }
        }
        MultiPoly::from_raw(self.field, self.nvars, raw)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, o: MultiPoly) -> MultiPoly {
                (&self).$f(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// Exact division: `Some(Q)` with `P = E*Q`, or `None` when `E` does not divide `P`.
///
/// Long division in graded-lex order. Because a single divisor is used, the
/// remainder is unique, so the first leading term not divisible by `LT(E)`
/// proves non-divisibility.
pub fn poly_divide(p: &MultiPoly, e: &MultiPoly) -> Result<Option<MultiPoly>, PolyError> {
    let (lm, lc) = e.leading_term().ok_or(PolyError::DivisionByZero)?;
    assert_eq!(p.field, e.field, "polynomials over different fields");
    if p.nvars != e.nvars {
        return Err(PolyError::DimensionMismatch { expected: p.nvars, got: e.nvars });
    }
    let q_mod = p.field.p();
    let lc_inv = lc.inv().expect("leading coefficient is nonzero").value();
    let mut rem: BTreeMap<Monomial, u64> = p.terms.iter().copied().collect();
    let mut quot = Vec::new();
    let mut last: Option<Monomial> = None;
    while let Some((&m, &c)) = rem.iter().next_back() {
        if let Some(prev) = last {
            assert!(m < prev, "leading monomial failed to decrease during division");
        }
        last = Some(m);
        if !lm.divides(&m) {
            return Ok(None);
        }
        let qm = lm.quotient_of(&m);
        let qc = mul_mod(c, lc_inv, q_mod);
        quot.push((qm, qc));
        for &(em, ec) in &e.terms {
            let key = em.mul(&qm);
            let sub = mul_mod(ec, qc, q_mod);
            let entry = rem.entry(key).or_insert(0);
            *entry = sub_mod(*entry, sub, q_mod);
            if *entry == 0 {
                rem.remove(&key);
            }
        }
    }
    Ok(Some(MultiPoly::from_raw(p.field, p.nvars, quot)))
}
