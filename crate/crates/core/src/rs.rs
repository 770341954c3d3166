//! Reed-Solomon codes over `F_p` and over polynomial rings, with
//! Berlekamp-Welch errors-and-erasures decoding.
//!
//! Erased coordinates are dropped before decoding and the error radius is
//! reduced accordingly. A decoder answers only inside the unique decoding
//! radius: it returns `f` when `2*errors + erasures < n - d` and `None`
//! otherwise.

use thiserror::Error;

use crate::ffield::{FieldElement, PrimeField};
use crate::linalg::kernel_vector;
use crate::poly::{poly_divide, AffineForm, MultiPoly, UniPoly};

/// A received coordinate: a symbol or an erasure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Symbol<T> {
    Value(T),
    Erased,
}

impl<T> Symbol<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Symbol::Value(v) => Some(v),
            Symbol::Erased => None,
        }
    }

    pub fn is_erased(&self) -> bool {
        matches!(self, Symbol::Erased)
    }
}

impl<T> From<T> for Symbol<T> {
    fn from(v: T) -> Self {
        Symbol::Value(v)
    }
}

/// Wraps a codeword as an erasure-free received word.
pub fn to_received<T: Clone>(word: &[T]) -> Vec<Symbol<T>> {
    word.iter().cloned().map(Symbol::Value).collect()
}

/// `2 * errors + erasures` of `received` relative to `codeword`.
pub fn weight<T: PartialEq>(received: &[Symbol<T>], codeword: &[T]) -> usize {
    assert_eq!(received.len(), codeword.len(), "length mismatch");
    received
        .iter()
        .zip(codeword)
        .map(|(r, c)| match r {
            Symbol::Erased => 1,
            Symbol::Value(v) if v != c => 2,
            _ => 0,
        })
        .sum()
}

/// Number of non-erased coordinates where `received` and `codeword` differ.
pub fn disagreements<T: PartialEq>(received: &[Symbol<T>], codeword: &[T]) -> usize {
    received
        .iter()
        .zip(codeword)
        .filter(|(r, c)| matches!(r, Symbol::Value(v) if v != *c))
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RsError {
    #[error("block length {n} must exceed the degree bound {d}")]
    TooShort { n: usize, d: usize },
    #[error("evaluation points must be distinct")]
    RepeatedPoint,
    #[error("message degree {degree} exceeds {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
    #[error("received word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("entry {index} is malformed: {reason}")]
    MalformedEntry { index: usize, reason: String },
    #[error("kernel coordinate of degree {degree} exceeds the bound {bound}")]
    KernelDegreeBound { degree: u32, bound: u32 },
}

/// `RS_{d,n}`: evaluations of univariate polynomials of degree at most `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCode {
    field: PrimeField,
    degree: usize,
    points: Vec<FieldElement>,
}

impl RsCode {
    pub fn new(field: PrimeField, degree: usize, points: Vec<FieldElement>) -> Result<Self, RsError> {
        if points.len() <= degree {
            return Err(RsError::TooShort { n: points.len(), d: degree });
        }
        for (i, a) in points.iter().enumerate() {
            if points[..i].contains(a) {
                return Err(RsError::RepeatedPoint);
            }
        }
        Ok(Self { field, degree, points })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn distance(&self) -> usize {
        self.points.len() - self.degree
    }

    pub fn encode(&self, f: &UniPoly) -> Result<Vec<FieldElement>, RsError> {
        if let Some(k) = f.degree() {
            if k > self.degree {
                return Err(RsError::DegreeTooHigh { degree: k, bound: self.degree });
            }
        }
        Ok(self.points.iter().map(|&a| f.eval(a)).collect())
    }

    /// Berlekamp-Welch; `None` outside the unique decoding radius.
    pub fn decode(&self, r: &[Symbol<FieldElement>]) -> Option<UniPoly> {
        assert_eq!(r.len(), self.len(), "received word length");
        let known: Vec<(FieldElement, FieldElement)> = self
            .points
            .iter()
            .zip(r)
            .filter_map(|(&a, s)| s.value().map(|&v| (a, v)))
            .collect();
        let d = self.degree;
        if known.len() <= d {
            return None;
        }
        let e = (known.len() - d - 1) / 2;
        // Unknowns: N_0..N_{e+d}, E_0..E_e with N(a) - y E(a) = 0.
        let rows: Vec<Vec<FieldElement>> = known
            .iter()
            .map(|&(a, y)| {
                let mut row = Vec::with_capacity(2 * e + d + 2);
                let mut pw = self.field.one();
                for _ in 0..=e + d {
                    row.push(pw);
                    pw *= a;
                }
                let mut pw = self.field.one();
                for _ in 0..=e {
                    row.push(-(y * pw));
                    pw *= a;
                }
                row
            })
            .collect();
        let v = kernel_vector(&rows)?;
        let n = UniPoly::new(self.field, v[..=e + d].to_vec());
        let loc = UniPoly::new(self.field, v[e + d + 1..].to_vec());
        if loc.is_zero() {
            return None;
        }
        let (f, rem) = n.divrem(&loc)?;
        if !rem.is_zero() || f.degree().is_some_and(|k| k > d) {
            return None;
        }
        let cw = self.encode(&f).ok()?;
        (weight(r, &cw) < self.distance()).then_some(f)
    }
}

/// Reed-Solomon code over `F_p[X1..X_k]`: a message `f(X, Y)` in `k+1`
/// variables is sent as `(f(X, L_1(X)), ..., f(X, L_t(X)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRingRsCode {
    field: PrimeField,
    nvars: usize,
    degree: usize,
    forms: Vec<AffineForm>,
}

impl PolyRingRsCode {
    pub fn new(field: PrimeField, degree: usize, forms: Vec<AffineForm>) -> Result<Self, RsError> {
        if forms.len() <= degree {
            return Err(RsError::TooShort { n: forms.len(), d: degree });
        }
        let nvars = forms[0].nvars();
        for (i, l) in forms.iter().enumerate() {
            if l.nvars() != nvars {
                return Err(RsError::MalformedEntry { index: i, reason: "variable count".into() });
            }
            if forms[..i].contains(l) {
                return Err(RsError::RepeatedPoint);
            }
        }
        Ok(Self { field, nvars, degree, forms })
    }

    /// Variables of the coefficient ring (one less than the message).
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn distance(&self) -> usize {
        self.forms.len() - self.degree
    }

    pub fn encode(&self, f: &MultiPoly) -> Result<Vec<MultiPoly>, RsError> {
        if f.nvars() != self.nvars + 1 {
            return Err(RsError::MalformedEntry { index: 0, reason: "message variable count".into() });
        }
        if f.degree() as usize > self.degree && !f.is_zero() {
            return Err(RsError::DegreeTooHigh { degree: f.degree() as usize, bound: self.degree });
        }
        Ok(self
            .forms
            .iter()
            .map(|l| f.restrict_to_hyperplane(l).expect("dimensions checked"))
            .collect())
    }

    /// Berlekamp-Welch over the polynomial ring.
    ///
    /// The error-locator size is raised from 0 to its maximum, stopping at the
    /// first candidate inside the radius; each candidate is verified, so the
    /// answer is the unique codeword within weight `< t - d`.
    pub fn decode(&self, r: &[Symbol<MultiPoly>]) -> Result<Option<MultiPoly>, RsError> {
        if r.len() != self.len() {
            return Err(RsError::LengthMismatch { expected: self.len(), got: r.len() });
        }
        for (i, s) in r.iter().enumerate() {
            if let Symbol::Value(g) = s {
                if g.nvars() != self.nvars || g.field() != self.field {
                    return Err(RsError::MalformedEntry { index: i, reason: "wrong ring".into() });
                }
                if g.degree() as usize > self.degree {
                    return Err(RsError::MalformedEntry {
                        index: i,
                        reason: format!("degree {} exceeds {}", g.degree(), self.degree),
                    });
                }
            }
        }
        let known: Vec<(usize, &MultiPoly)> =
            r.iter().enumerate().filter_map(|(i, s)| s.value().map(|g| (i, g))).collect();
        let d = self.degree;
        if known.len() <= d {
            return Ok(None);
        }
        let e_max = (known.len() - d - 1) / 2;
        let lpolys: Vec<MultiPoly> = self.forms.iter().map(|l| l.to_poly()).collect();
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(self.len());
        for lp in &lpolys {
            let mut v = vec![MultiPoly::one(self.field, self.nvars)];
            for j in 1..=e_max + d {
                let next = &v[j - 1] * lp;
                v.push(next);
            }
            powers.push(v);
        }
        for e in 0..=e_max {
            let rows: Vec<Vec<MultiPoly>> = known
                .iter()
                .map(|&(i, g)| {
                    let mut row: Vec<MultiPoly> = powers[i][..=e + d].to_vec();
                    row.extend(powers[i][..=e].iter().map(|pw| -&(g * pw)));
                    row
                })
                .collect();
            let entry_bound = (d + e) as u32;
            let Some(v) = kernel_vector_polyring(&rows, entry_bound)? else {
                continue;
            };
            if let Some(f) = self.candidate(&v, e, r)? {
                return Ok(Some(f));
            }
        }
        Ok(None)
    }

    fn candidate(
        &self,
        v: &[MultiPoly],
        e: usize,
        r: &[Symbol<MultiPoly>],
    ) -> Result<Option<MultiPoly>, RsError> {
        let d = self.degree;
        let m = self.nvars + 1;
        let y = MultiPoly::var(self.field, m, self.nvars);
        let lift = |coeffs: &[MultiPoly]| {
            let mut acc = MultiPoly::zero(self.field, m);
            let mut ypow = MultiPoly::one(self.field, m);
            for c in coeffs {
                acc = &acc + &(&c.extend_vars(m) * &ypow);
                ypow = &ypow * &y;
            }
            acc
        };
        let num = lift(&v[..=e + d]);
        let loc = lift(&v[e + d + 1..]);
        if loc.is_zero() {
            return Ok(None);
        }
        let Some(f) = poly_divide(&num, &loc).expect("nonzero divisor") else {
            return Ok(None);
        };
        if f.degree() as usize > d {
            return Ok(None);
        }
        let cw = self.encode(&f)?;
        Ok((weight(r, &cw) < self.distance()).then_some(f))
    }
}

/// Nonzero kernel vector of a polynomial matrix with entries of degree at most
/// `entry_degree`, or `None` when the columns are independent over the
/// fraction field. Coordinates are checked against the `N * D` degree bound.
pub fn kernel_vector_polyring(
    m: &[Vec<MultiPoly>],
    entry_degree: u32,
) -> Result<Option<Vec<MultiPoly>>, RsError> {
    let n = m.len().max(m.first().map_or(0, |r| r.len())) as u32;
    for (i, row) in m.iter().enumerate() {
        if let Some(bad) = row.iter().find(|x| x.degree() > entry_degree) {
            return Err(RsError::MalformedEntry {
                index: i,
                reason: format!("entry of degree {} exceeds {entry_degree}", bad.degree()),
            });
        }
    }
    let Some(v) = kernel_vector(m) else {
        return Ok(None);
    };
    let bound = n * entry_degree;
    if let Some(bad) = v.iter().find(|x| x.degree() > bound) {
        return Err(RsError::KernelDegreeBound { degree: bad.degree(), bound });
    }
    Ok(Some(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn elems(f: PrimeField, v: &[u64]) -> Vec<FieldElement> {
        v.iter().map(|&x| f.elem(x)).collect()
    }

    fn rs(f: PrimeField, d: usize, n: u64) -> RsCode {
        RsCode::new(f, d, (0..n).map(|x| f.elem(x)).collect()).unwrap()
    }

    /// Nearest codeword by enumerating every message of degree <= d.
    fn nearest(code: &RsCode, r: &[Symbol<FieldElement>]) -> Vec<(usize, UniPoly)> {
        let f = code.field();
        let k = code.degree() + 1;
        let total = f.p().pow(k as u32);
        let mut out = Vec::new();
        for idx in 0..total {
            let mut c = Vec::with_capacity(k);
            let mut x = idx;
            for _ in 0..k {
                c.push(f.elem(x % f.p()));
                x /= f.p();
            }
            let g = UniPoly::new(f, c);
            out.push((weight(r, &code.encode(&g).unwrap()), g));
        }
        out.sort_by_key(|t| t.0);
        out
    }

    #[test]
    fn encode_examples() {
        let f = f7();
        let code = rs(f, 1, 4);
        assert_eq!(code.encode(&UniPoly::from_values(f, &[1, 2])).unwrap(), elems(f, &[1, 3, 5, 0]));
        assert_eq!(code.encode(&UniPoly::zero(f)).unwrap(), elems(f, &[0, 0, 0, 0]));
        assert!(code.encode(&UniPoly::from_values(f, &[0, 0, 1])).is_err());
        assert!(RsCode::new(f, 1, elems(f, &[1, 1, 2])).is_err());
        assert!(RsCode::new(f, 2, elems(f, &[1, 2])).is_err());
    }

    #[test]
    fn decode_examples() {
        let f = f7();
        let code = rs(f, 1, 4);
        let target = UniPoly::from_values(f, &[1, 2]);
        let r = to_received(&elems(f, &[6, 3, 5, 0]));
        assert_eq!(code.decode(&r), Some(target.clone()));
        let best = nearest(&code, &r);
        assert_eq!(best[0], (2, target.clone()));
        assert!(best[1].0 > 2);
        let r = vec![Symbol::Erased, f.elem(3).into(), f.elem(5).into(), Symbol::Erased];
        assert_eq!(code.decode(&r), Some(target.clone()));
        let r = to_received(&code.encode(&target).unwrap());
        assert_eq!(code.decode(&r), Some(target));
    }

    #[test]
    fn answers_exactly_inside_the_radius() {
        // All 7^4 words of length 4: decode succeeds iff the nearest codeword
        // is within weight < 3, and then returns it.
        let f = f7();
        let code = rs(f, 1, 4);
        for idx in 0..7u64.pow(4) {
            let word: Vec<u64> = (0..4).map(|i| (idx / 7u64.pow(i)) % 7).collect();
            let r = to_received(&elems(f, &word));
            let best = nearest(&code, &r);
            match code.decode(&r) {
                Some(g) => {
                    assert!(best[0].0 < 3);
                    assert_eq!(g, best[0].1);
                }
                None => assert!(best[0].0 >= 3, "{word:?}"),
            }
        }
        assert_eq!(code.decode(&vec![Symbol::Erased; 4]), None);
    }

    #[test]
    fn exhaustive_round_trip_small() {
        // Every pattern of weight < n - d on codes with n <= 6 over F_5 and F_7.
        for p in [5u64, 7] {
            let f = PrimeField::new(p).unwrap();
            for n in 1..=6u64.min(p) {
                for d in 0..n as usize {
                    let code = rs(f, d, n);
                    let msg = UniPoly::new(f, (0..=d as u64).map(|i| f.elem(i * 3 + 1)).collect());
                    let cw = code.encode(&msg).unwrap();
                    let mut count = 0;
                    for pattern in 0..3usize.pow(n as u32) {
                        let mut r = to_received(&cw);
                        let mut x = pattern;
                        for (i, s) in r.iter_mut().enumerate() {
                            match x % 3 {
                                1 => *s = Symbol::Value(cw[i] + f.elem(1 + (i as u64 % (p - 1)))),
                                2 => *s = Symbol::Erased,
                                _ => {}
                            }
                            x /= 3;
                        }
                        if weight(&r, &cw) < code.distance() {
                            count += 1;
                            assert_eq!(code.decode(&r).as_ref(), Some(&msg), "p={p} n={n} d={d}");
                        }
                    }
                    assert!(count > 0);
                }
            }
        }
    }

    fn ring_code() -> PolyRingRsCode {
        let f = f7();
        let forms = vec![
            AffineForm::from_values(f, 0, &[1]),
            AffineForm::from_values(f, 1, &[1]),
            AffineForm::from_values(f, 0, &[2]),
            AffineForm::from_values(f, 1, &[2]),
        ];
        PolyRingRsCode::new(f, 1, forms).unwrap()
    }

    #[test]
    fn polyring_examples() {
        let f = f7();
        let code = ring_code();
        let msg = MultiPoly::parse(f, 2, "X1 + 3*X2").unwrap();
        let cw = code.encode(&msg).unwrap();
        assert_eq!(code.decode(&to_received(&cw)).unwrap(), Some(msg.clone()));
        let mut r = to_received(&cw);
        r[2] = Symbol::Value(MultiPoly::parse(f, 1, "5*X1 + 2").unwrap());
        let out = code.decode(&r).unwrap().unwrap();
        assert_eq!(out, msg);
        assert!(weight(&r, &code.encode(&out).unwrap()) < code.distance());
        let mut r = to_received(&cw);
        r[0] = Symbol::Erased;
        r[3] = Symbol::Erased;
        assert_eq!(code.decode(&r).unwrap(), Some(msg));
    }

    #[test]
    fn polyring_rejects_malformed() {
        let f = f7();
        let code = ring_code();
        let mut r = vec![Symbol::Value(MultiPoly::zero(f, 1)); 4];
        r[1] = Symbol::Value(MultiPoly::parse(f, 1, "X1^2").unwrap());
        assert!(matches!(code.decode(&r), Err(RsError::MalformedEntry { index: 1, .. })));
        r[1] = Symbol::Value(MultiPoly::zero(f, 2));
        assert!(code.decode(&r).is_err());
        assert!(code.decode(&r[..3]).is_err());
    }

    /// Every message of degree <= d in two variables over F_5, with the
    /// nearest-codeword distances to `r`.
    fn polyring_nearest(code: &PolyRingRsCode, r: &[Symbol<MultiPoly>]) -> Vec<(usize, MultiPoly)> {
        let f = PrimeField::new(5).unwrap();
        let monos = crate::poly::monomials_up_to(2, code.degree() as u32);
        let total = 5u64.pow(monos.len() as u32);
        let mut out = Vec::new();
        for idx in 0..total {
            let mut x = idx;
            let g = MultiPoly::from_terms(
                f,
                2,
                monos.iter().map(|m| {
                    let c = f.elem(x % 5);
                    x /= 5;
                    (m.clone(), c)
                }),
            );
            out.push((weight(r, &code.encode(&g).unwrap()), g));
        }
        out.sort_by_key(|t| t.0);
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn polyring_agrees_with_brute_force(
            d in 0usize..=2,
            msg in proptest::collection::vec(0u64..5, 6),
            corrupt in proptest::collection::vec((0usize..3, 0u64..5, 0u64..5), 5),
        ) {
            let f = PrimeField::new(5).unwrap();
            let forms: Vec<AffineForm> = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
                .iter().map(|&(a, b)| AffineForm::from_values(f, a, &[b])).collect();
            let code = PolyRingRsCode::new(f, d, forms).unwrap();
            let monos = crate::poly::monomials_up_to(2, d as u32);
            let g = MultiPoly::from_terms(f, 2, monos.iter().cloned().zip(&msg).map(|(m, &c)| (m, f.elem(c))));
            let cw = code.encode(&g).unwrap();
            let mut r = to_received(&cw);
            for (i, &(kind, a, b)) in corrupt.iter().enumerate() {
                match kind {
                    1 => r[i] = Symbol::Erased,
                    2 => r[i] = Symbol::Value(&cw[i] + &truncate(MultiPoly::parse(f, 1, &format!("{a} + {b}*X1")).unwrap(), d)),
                    _ => {}
                }
            }
            let best = polyring_nearest(&code, &r);
            let out = code.decode(&r).unwrap();
            if best[0].0 < code.distance() {
                prop_assert_eq!(out, Some(best[0].1.clone()));
            } else {
                prop_assert_eq!(out, None);
            }
        }
    }

    /// Drops terms above degree `d` so corrupted entries stay well formed.
    fn truncate(g: MultiPoly, d: usize) -> MultiPoly {
        MultiPoly::from_terms(
            g.field(),
            g.nvars(),
            g.terms().filter(|(m, _)| m.degree() as usize <= d).map(|(m, c)| (m.exponents(1), c)),
        )
    }
}
