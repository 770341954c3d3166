//! Codes evaluating polynomials of degree at most `d` on the combinatorial
//! simplex `{(a_{x_1}, ..., a_{x_m}) : x_1 + ... + x_m < l}`.
//!
//! Decoding peels coefficients off one monomial at a time. Writing
//! `f = sum_v c_v(X_m) X^v` with `v` over the first `m - 1` variables, the
//! restriction of the still-unknown part of `f` to the block `x_m = i` is a
//! polynomial of degree `deg v` on a smaller simplex. Each block is decoded
//! recursively and its `X^v` coefficient read off; those values form a
//! Reed-Solomon codeword of `c_v`, recovered by GMD decoding with uneven
//! inner distances.

use thiserror::Error;

use crate::combin::{binom, simplex_points, simplex_size};
use crate::ffield::{FieldElement, PrimeField};
use crate::gmd::{gmd_decode, ConcatenationSpec, InnerBlock, InnerDecoder, InnerDecoding, OuterDecoder, OuterDecoding};
use crate::poly::{graded_lex_prev, Monomial, MultiPoly, UniPoly};
use crate::rs::{disagreements, weight, RsCode, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CapError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeTooHigh { degree: u32, bound: u32 },
    #[error("polynomial has {got} variables, the code has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("received word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapCode {
    field: PrimeField,
    m: usize,
    d: u32,
    labels: Vec<FieldElement>,
    points: Vec<Vec<u32>>,
}

impl CapCode {
    pub fn new(field: PrimeField, m: usize, d: u32, labels: Vec<FieldElement>) -> Result<Self, CapError> {
        if m == 0 {
            return Err(CapError::InvalidParameters("m must be at least 1".into()));
        }
        if m > crate::poly::MAX_VARS {
            return Err(CapError::InvalidParameters(format!("at most {} variables", crate::poly::MAX_VARS)));
        }
        let l = labels.len();
        if l as u64 <= d as u64 {
            return Err(CapError::InvalidParameters(format!("need l > d (l={l}, d={d})")));
        }
        if labels.iter().any(|a| a.field() != field) {
            return Err(CapError::InvalidParameters(format!("labels must lie in F_{}", field.p())));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != l {
            return Err(CapError::InvalidParameters("labels must be distinct".into()));
        }
        let points = simplex_points(m, l as u32);
        Ok(Self { field, m, d, labels, points })
    }

    /// Labels `0, 1, ..., l - 1`.
    pub fn with_default_labels(field: PrimeField, m: usize, d: u32, l: u32) -> Result<Self, CapError> {
        if l as u64 > field.p() {
            return Err(CapError::InvalidParameters(format!("l={l} exceeds p={}", field.p())));
        }
        Self::new(field, m, d, (0..l as u64).map(|v| field.elem(v)).collect())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn side(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[FieldElement] {
        &self.labels
    }

    /// Index vectors in lexicographic order; codewords follow this order.
    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn index_of(&self, x: &[u32]) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_slice().cmp(x)).ok()
    }

    pub fn point_coords(&self, x: &[u32]) -> Vec<FieldElement> {
        x.iter().map(|&i| self.labels[i as usize]).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dimension(&self) -> u64 {
        binom(self.d as u64 + self.m as u64, self.m as u64)
    }

    /// `binom(l - d + m - 1, m)`.
    pub fn design_distance(&self) -> usize {
        simplex_size(self.m, self.side() as i64 - self.d as i64) as usize
    }

    pub fn encode(&self, f: &MultiPoly) -> Result<Vec<FieldElement>, CapError> {
        if f.nvars() != self.m {
            return Err(CapError::DimensionMismatch { expected: self.m, got: f.nvars() });
        }
        if f.degree() > self.d {
            return Err(CapError::DegreeTooHigh { degree: f.degree(), bound: self.d });
        }
        Ok(eval_on(f, &self.points, &self.labels))
    }

    fn check_len(&self, r: &[Symbol<FieldElement>]) -> Result<(), CapError> {
        if r.len() != self.len() {
            return Err(CapError::LengthMismatch { expected: self.len(), got: r.len() });
        }
        Ok(())
    }

    /// Unique decoding up to half the design distance; `Ok(None)` is FAIL.
    pub fn decode(&self, r: &[Symbol<FieldElement>]) -> Result<Option<MultiPoly>, CapError> {
        let mut top = vec![0u32; self.m - 1];
        if let Some(x) = top.first_mut() {
            *x = self.d;
        }
        self.decode_simplex(r, &top)
    }

    /// Peeling decoder started at monomial `X^v` in the first `m - 1`
    /// variables; every coefficient above `v` in graded lexicographic order
    /// is assumed to be zero.
    pub fn decode_simplex(&self, r: &[Symbol<FieldElement>], v: &[u32]) -> Result<Option<MultiPoly>, CapError> {
        self.check_len(r)?;
        if v.len() != self.m - 1 {
            return Err(CapError::DimensionMismatch { expected: self.m - 1, got: v.len() });
        }
        let f = simplex_decode(self.field, self.m, self.d, &self.labels, r, v);
        Ok(f.filter(|f| self.accepts(r, f)))
    }

    /// Bivariate peeling with blocks indexed by the first coordinate: returns
    /// `[c_0, ..., c_k]` with `f = sum_j c_j(X) Y^j`, assuming `deg_Y f <= k`.
    pub fn decode_bivariate(&self, r: &[Symbol<FieldElement>], k: u32) -> Result<Option<Vec<UniPoly>>, CapError> {
        self.check_len(r)?;
        if self.m != 2 {
            return Err(CapError::DimensionMismatch { expected: 2, got: self.m });
        }
        if k > self.d {
            return Err(CapError::InvalidParameters(format!("k={k} exceeds d={}", self.d)));
        }
        // swap coordinates so that the first coordinate indexes blocks
        let swapped: Vec<Symbol<FieldElement>> = self
            .points
            .iter()
            .map(|p| r[self.index_of(&[p[1], p[0]]).expect("simplex is symmetric")].clone())
            .collect();
        let Some(g) = simplex_decode(self.field, 2, self.d, &self.labels, &swapped, &[k]) else {
            return Ok(None);
        };
        let f = MultiPoly::from_terms(
            self.field,
            2,
            g.terms().map(|(mono, c)| (vec![mono.exp(1), mono.exp(0)], c)),
        );
        if !self.accepts(r, &f) {
            return Ok(None);
        }
        let coeffs = (0..=k).map(|j| f.coeff_extract(1, j).expect("two variables").to_uni()).collect();
        Ok(Some(coeffs))
    }

    fn accepts(&self, r: &[Symbol<FieldElement>], f: &MultiPoly) -> bool {
        f.degree() <= self.d && weight(r, &eval_on(f, &self.points, &self.labels)) < self.design_distance()
    }
}

fn eval_on(f: &MultiPoly, points: &[Vec<u32>], labels: &[FieldElement]) -> Vec<FieldElement> {
    let mut x = Vec::with_capacity(f.nvars());
    points
        .iter()
        .map(|p| {
            x.clear();
            x.extend(p.iter().map(|&i| labels[i as usize]));
            f.eval(&x)
        })
        .collect()
}

fn simplex_decode(
    field: PrimeField,
    m: usize,
    d: u32,
    labels: &[FieldElement],
    r: &[Symbol<FieldElement>],
    v: &[u32],
) -> Option<MultiPoly> {
    let l = labels.len();
    if m == 1 {
        let code = RsCode::new(field, d as usize, labels.to_vec()).ok()?;
        return code.decode(r).map(|g| g.to_multi());
    }
    let points = simplex_points(m, l as u32);
    debug_assert_eq!(points.len(), r.len());
    let mut block_of: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (j, p) in points.iter().enumerate() {
        block_of[p[m - 1] as usize].push(j);
    }
    let inner_points: Vec<Vec<Vec<u32>>> = (0..l).map(|i| simplex_points(m - 1, (l - i) as u32)).collect();

    let mut work = r.to_vec();
    let mut acc = MultiPoly::zero(field, m);
    let mut v = v.to_vec();
    loop {
        let k: u32 = v.iter().sum();
        if k <= d {
            let outer = RsCode::new(field, (d - k) as usize, labels.to_vec()).ok()?;
            let mut seed = vec![0u32; m - 2];
            if let Some(s) = seed.first_mut() {
                *s = k;
            }
            let inner: Vec<InnerBlock<'_, FieldElement, FieldElement>> = (0..l)
                .map(|i| {
                    let li = l - i;
                    let distance = simplex_size(m - 1, li as i64 - k as i64) as usize;
                    let sub_labels = &labels[..li];
                    let pts = &inner_points[i];
                    let (v, seed) = (&v, &seed);
                    let decoder: InnerDecoder<'_, FieldElement, FieldElement> = Box::new(move |blk| {
                        if distance == 0 {
                            return None;
                        }
                        let g = simplex_decode(field, m - 1, k, sub_labels, blk, seed)?;
                        let cw = eval_on(&g, pts, sub_labels);
                        Some(InnerDecoding { symbol: g.coeff(v), disagreements: disagreements(blk, &cw) })
                    });
                    InnerBlock { distance, decoder }
                })
                .collect();
            let outer_dec: OuterDecoder<'_, FieldElement, UniPoly> = Box::new(|z| {
                let c = outer.decode(z)?;
                let codeword = outer.encode(&c).ok()?;
                Some(OuterDecoding { message: c, codeword })
            });
            let spec = ConcatenationSpec { inner, outer_distance: outer.distance(), outer: outer_dec };
            let blocks: Vec<Vec<Symbol<FieldElement>>> =
                block_of.iter().map(|idx| idx.iter().map(|&j| work[j].clone()).collect()).collect();
            let c = gmd_decode(&blocks, &spec)?.message;

            // subtract c(X_m) X^v from the working word and the accumulator
            let mut e = v.clone();
            let mut term_raw = Vec::new();
            for (deg, &coef) in c.coeffs().iter().enumerate() {
                if !coef.is_zero() {
                    e.push(deg as u32);
                    term_raw.push((e.clone(), coef));
                    e.pop();
                }
            }
            let term = MultiPoly::from_terms(field, m, term_raw);
            let mono = Monomial::new(&v);
            for (j, p) in points.iter().enumerate() {
                if let Symbol::Value(val) = &mut work[j] {
                    let mut t = c.eval(labels[p[m - 1] as usize]);
                    for (t_idx, &xi) in p[..m - 1].iter().enumerate() {
                        t *= labels[xi as usize].pow(mono.exp(t_idx) as u64);
                    }
                    *val -= t;
                }
            }
            acc = &acc + &term;
        }
        match graded_lex_prev(&v) {
            Some(w) => v = w,
            None => break,
        }
    }
    Some(acc)
}
