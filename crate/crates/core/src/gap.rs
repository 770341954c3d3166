//! Codes evaluating polynomials on the `m`-wise intersections of `t`
//! hyperplanes in general position.
//!
//! Points are indexed by `m`-subsets of hyperplane indices (0-based, in
//! lexicographic order), lines by `(m-1)`-subsets and planes by
//! `(m-2)`-subsets. The line `J` contains the points `J ∪ {i}` for `i ∉ J`.
//!
//! Decoding follows the intermediate concatenated code: block `i` collects
//! the received values on hyperplane `H_i`, which form a word of the same kind
//! of code one dimension down. Each block is decoded recursively to a
//! polynomial on `H_i`, and these restrictions form a Reed-Solomon codeword
//! over the polynomial ring when every `H_i` is written as the graph
//! `X_m = L_i(X_1, ..., X_{m-1})`. If some hyperplane does not have this form
//! the decoder first applies one invertible linear change of coordinates to
//! the whole family.

use std::collections::HashMap;
use std::sync::OnceLock;

use itertools::Itertools;
use thiserror::Error;

use crate::combin::binom;
use crate::ffield::{FieldElement, PrimeField};
use crate::gmd::{gmd_decode, ConcatenationSpec, InnerBlock, InnerDecoder, InnerDecoding, OuterDecoder, OuterDecoding};
use crate::linalg::{invert, null_space, solve};
use crate::poly::{AffineForm, MultiPoly};
use crate::rs::{disagreements, weight, PolyRingRsCode, RsCode, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GapError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("hyperplanes {0:?} do not meet in exactly one point")]
    Singular(Vec<usize>),
    #[error("hyperplane {extra} passes through the intersection of {subset:?}")]
    NotGeneralPosition { subset: Vec<usize>, extra: usize },
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeTooHigh { degree: u32, bound: u32 },
    #[error("expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("received word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("interpolation needs t = d + m (t={t}, d={d}, m={m})")]
    NotInterpolating { t: usize, d: u32, m: usize },
    #[error("no coordinate change makes every hyperplane a graph over the first m-1 coordinates")]
    NoGraphCoordinates,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Vandermonde(Vec<FieldElement>),
    Explicit,
}

/// `t` hyperplanes `H_i = {H_i(x) = 0}` in general position in `F_p^m`,
/// together with their `m`-wise intersection points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneFamily {
    field: PrimeField,
    m: usize,
    forms: Vec<AffineForm>,
    provenance: Provenance,
    subsets: Vec<Vec<usize>>,
    coords: Vec<Vec<FieldElement>>,
    index: HashMap<Vec<usize>, usize>,
}

/// Common zero of `m` affine forms in `m` variables.
pub fn intersect(forms: &[AffineForm]) -> Result<Vec<FieldElement>, GapError> {
    let m = forms.len();
    if let Some(f) = forms.iter().find(|f| f.nvars() != m) {
        return Err(GapError::DimensionMismatch { expected: m, got: f.nvars() });
    }
    let a: Vec<Vec<FieldElement>> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
    let b: Vec<FieldElement> = forms.iter().map(|f| -f.constant()).collect();
    solve(&a, &b).ok_or_else(|| GapError::Singular((0..m).collect()))
}

impl HyperplaneFamily {
    /// Checks general position exhaustively.
    pub fn new(field: PrimeField, m: usize, forms: Vec<AffineForm>) -> Result<Self, GapError> {
        Self::build(field, m, forms, Provenance::Explicit)
    }

    fn build(field: PrimeField, m: usize, forms: Vec<AffineForm>, provenance: Provenance) -> Result<Self, GapError> {
        if m == 0 {
            return Err(GapError::InvalidParameters("m must be at least 1".into()));
        }
        if m > crate::poly::MAX_VARS {
            return Err(GapError::InvalidParameters(format!("at most {} variables", crate::poly::MAX_VARS)));
        }
        if forms.len() < m {
            return Err(GapError::InvalidParameters(format!("need t >= m (t={}, m={m})", forms.len())));
        }
        for f in &forms {
            if f.nvars() != m {
                return Err(GapError::DimensionMismatch { expected: m, got: f.nvars() });
            }
            if f.field() != field {
                return Err(GapError::InvalidParameters(format!("form {f} is not over F_{}", field.p())));
            }
        }
        let t = forms.len();
        let mut subsets = Vec::new();
        let mut coords = Vec::new();
        let mut index = HashMap::new();
        for s in (0..t).combinations(m) {
            let sel: Vec<AffineForm> = s.iter().map(|&i| forms[i].clone()).collect();
            let x = intersect(&sel).map_err(|_| GapError::Singular(s.clone()))?;
            if let Some(extra) = (0..t).find(|j| !s.contains(j) && forms[*j].eval(&x).is_zero()) {
                return Err(GapError::NotGeneralPosition { subset: s, extra });
            }
            index.insert(s.clone(), subsets.len());
            subsets.push(s);
            coords.push(x);
        }
        Ok(Self { field, m, forms, provenance, subsets, coords, index })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `m`-subsets indexing the points, in lexicographic order.
    pub fn point_subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn point_coords(&self) -> &[Vec<FieldElement>] {
        &self.coords
    }

    pub fn point_index(&self, subset: &[usize]) -> Option<usize> {
        self.index.get(subset).copied()
    }

    pub fn num_points(&self) -> usize {
        self.subsets.len()
    }

    /// Restriction to `H_i`, parametrized by the coordinates other than the
    /// last one with a nonzero coefficient in `H_i`.
    pub fn restrict_to_hyperplane(&self, i: usize) -> Result<RestrictedFamily, GapError> {
        if self.m < 2 {
            return Err(GapError::InvalidParameters("cannot restrict a one-dimensional family".into()));
        }
        if i >= self.len() {
            return Err(GapError::InvalidParameters(format!("no hyperplane {i}")));
        }
        let h = &self.forms[i];
        let pivot = (0..self.m).rev().find(|&k| !h.coeff(k).is_zero()).ok_or(GapError::Singular(vec![i]))?;
        let k = self.m - 1;
        let inv = -h.coeff(pivot).inv().expect("nonzero pivot");
        // the pivot coordinate solved from H_i = 0
        let mut solved = vec![self.field.zero(); k];
        let mut pos = 0;
        let mut embedding = Vec::with_capacity(self.m);
        for c in 0..self.m {
            if c == pivot {
                embedding.push(None);
            } else {
                solved[pos] = h.coeff(c) * inv;
                embedding.push(Some(AffineForm::coordinate(self.field, k, pos)));
                pos += 1;
            }
        }
        let graph = AffineForm::new(h.constant() * inv, solved);
        let embedding: Vec<AffineForm> = embedding.into_iter().map(|e| e.unwrap_or_else(|| graph.clone())).collect();
        let others: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
        let forms = others.iter().map(|&j| self.forms[j].compose(&embedding)).collect();
        let family = HyperplaneFamily::new(self.field, k, forms)?;
        Ok(RestrictedFamily { family, others, embedding, pivot, graph })
    }

    /// Lines `ℓ_J` for all `(m-1)`-subsets `J`, in lexicographic order.
    pub fn lines(&self) -> Vec<Line> {
        let t = self.len();
        (0..t)
            .combinations(self.m - 1)
            .map(|j| {
                let rows: Vec<Vec<FieldElement>> = j.iter().map(|&k| self.forms[k].coeffs().to_vec()).collect();
                let dir = null_space(&rows, self.m, self.field).remove(0);
                let points: Vec<usize> = (0..t)
                    .filter(|i| !j.contains(i))
                    .map(|i| self.point_index(&sorted_with(&j, i)).expect("point exists"))
                    .collect();
                let base = self.coords[points[0]].clone();
                let k = dir.iter().position(|c| !c.is_zero()).expect("nonzero direction");
                let dk = dir[k].inv().expect("nonzero");
                let params = points.iter().map(|&p| (self.coords[p][k] - base[k]) * dk).collect();
                Line { hyperplanes: j, points, base, dir, params }
            })
            .collect()
    }

    /// Planes `P_K` for all `(m-2)`-subsets `K`; needs `m >= 2`.
    pub fn planes(&self) -> Result<Vec<Plane>, GapError> {
        if self.m < 2 {
            return Err(GapError::InvalidParameters("planes need m >= 2".into()));
        }
        let t = self.len();
        let line_index: HashMap<Vec<usize>, usize> =
            (0..t).combinations(self.m - 1).enumerate().map(|(n, j)| (j, n)).collect();
        let mut out = Vec::new();
        for kset in (0..t).combinations(self.m - 2) {
            let rows: Vec<Vec<FieldElement>> = kset.iter().map(|&k| self.forms[k].coeffs().to_vec()).collect();
            let dirs = null_space(&rows, self.m, self.field);
            let (u, v) = (dirs[0].clone(), dirs[1].clone());
            let rest: Vec<usize> = (0..t).filter(|i| !kset.contains(i)).collect();
            let mut points = Vec::new();
            let mut local = Vec::new();
            for (a, b) in rest.iter().enumerate().tuple_combinations() {
                let s = sorted_with(&sorted_with(&kset, *a.1), *b.1);
                points.push(self.point_index(&s).expect("point exists"));
                local.push(vec![a.0, b.0]);
            }
            let lines = rest.iter().map(|&i| line_index[&sorted_with(&kset, i)]).collect();
            let base = self.coords[points[0]].clone();
            let (r0, r1) = (0..self.m)
                .tuple_combinations()
                .find(|&(r0, r1)| !(u[r0] * v[r1] - u[r1] * v[r0]).is_zero())
                .expect("independent directions");
            let mat = vec![vec![u[r0], v[r0]], vec![u[r1], v[r1]]];
            let coords = points
                .iter()
                .map(|&p| {
                    let x = &self.coords[p];
                    let z = solve(&mat, &[x[r0] - base[r0], x[r1] - base[r1]]).expect("invertible");
                    [z[0], z[1]]
                })
                .collect();
            let embed: Vec<AffineForm> =
                (0..self.m).map(|c| AffineForm::new(base[c], vec![u[c], v[c]])).collect();
            let forms = rest.iter().map(|&j| self.forms[j].compose(&embed)).collect();
            let family = HyperplaneFamily::new(self.field, 2, forms)?;
            out.push(Plane { hyperplanes: kset, others: rest, points, local, lines, base, dirs: [u, v], coords, family });
        }
        Ok(out)
    }
}

fn sorted_with(s: &[usize], i: usize) -> Vec<usize> {
    let mut v = s.to_vec();
    let pos = v.partition_point(|&x| x < i);
    v.insert(pos, i);
    v
}

/// `L_a(X) = a^m - a^{m-1} X_1 + a^{m-2} X_2 - ... + (-1)^m X_m` for each `a`.
/// The hyperplanes of `a_1, ..., a_m` meet at the signed elementary symmetric
/// functions of the `a_i`.
pub fn vandermonde_family(alphas: &[FieldElement], m: usize) -> Result<HyperplaneFamily, GapError> {
    let field = alphas
        .first()
        .map(|a| a.field())
        .ok_or_else(|| GapError::InvalidParameters("empty alpha list".into()))?;
    if alphas.iter().any(|a| a.field() != field) {
        return Err(GapError::InvalidParameters("alphas from different fields".into()));
    }
    if alphas.iter().tuple_combinations().any(|(a, b)| a == b) {
        return Err(GapError::InvalidParameters("alphas must be distinct".into()));
    }
    let forms = alphas
        .iter()
        .map(|&a| {
            let coeffs = (1..=m)
                .map(|j| {
                    let c = a.pow((m - j) as u64);
                    if j % 2 == 1 { -c } else { c }
                })
                .collect();
            AffineForm::new(a.pow(m as u64), coeffs)
        })
        .collect();
    HyperplaneFamily::build(field, m, forms, Provenance::Vandermonde(alphas.to_vec()))
}

/// A family restricted to one of its hyperplanes `H_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedFamily {
    /// The forms `H_j ∘ φ` for `j != i`, in `m - 1` variables.
    pub family: HyperplaneFamily,
    /// Original index of each restricted form.
    pub others: Vec<usize>,
    /// `φ`: ambient coordinates as affine functions of the parameters.
    pub embedding: Vec<AffineForm>,
    /// The ambient coordinate solved for.
    pub pivot: usize,
    /// That coordinate as a function of the parameters.
    pub graph: AffineForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub hyperplanes: Vec<usize>,
    /// Indices of the member points, by increasing omitted hyperplane.
    pub points: Vec<usize>,
    pub base: Vec<FieldElement>,
    pub dir: Vec<FieldElement>,
    /// Parameter `z` with `point = base + z * dir`, per member point.
    pub params: Vec<FieldElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub hyperplanes: Vec<usize>,
    /// Hyperplanes not containing the plane, in increasing order.
    pub others: Vec<usize>,
    pub points: Vec<usize>,
    /// For each member point, its pair of positions in `others`.
    pub local: Vec<Vec<usize>>,
    /// Indices into [`HyperplaneFamily::lines`] of the member lines.
    pub lines: Vec<usize>,
    pub base: Vec<FieldElement>,
    pub dirs: [Vec<FieldElement>; 2],
    /// Plane coordinates of each member point.
    pub coords: Vec<[FieldElement; 2]>,
    /// The other hyperplanes restricted to the plane, as lines in `F_p^2`.
    pub family: HyperplaneFamily,
}

#[derive(Debug, Clone)]
enum Decoder {
    Line(RsCode),
    Graph {
        outer: PolyRingRsCode,
        inner: Vec<(GapCode, Vec<usize>)>,
    },
    Changed {
        code: Box<GapCode>,
        back: Vec<AffineForm>,
    },
}

#[derive(Debug, Clone)]
pub struct GapCode {
    family: HyperplaneFamily,
    d: u32,
    decoder: OnceLock<Result<Decoder, GapError>>,
}

impl PartialEq for GapCode {
    fn eq(&self, o: &Self) -> bool {
        self.family == o.family && self.d == o.d
    }
}

impl GapCode {
    /// Requires `t >= d + m`.
    pub fn new(family: HyperplaneFamily, d: u32) -> Result<Self, GapError> {
        let (t, m) = (family.len(), family.nvars());
        if t < d as usize + m {
            return Err(GapError::InvalidParameters(format!("need t >= d + m (t={t}, d={d}, m={m})")));
        }
        Ok(Self { family, d, decoder: OnceLock::new() })
    }

    /// Vandermonde family on `alphas`.
    pub fn vandermonde(alphas: &[FieldElement], m: usize, d: u32) -> Result<Self, GapError> {
        Self::new(vandermonde_family(alphas, m)?, d)
    }

    pub fn family(&self) -> &HyperplaneFamily {
        &self.family
    }

    pub fn field(&self) -> PrimeField {
        self.family.field
    }

    pub fn nvars(&self) -> usize {
        self.family.m
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.family.len()
    }

    pub fn len(&self) -> usize {
        self.family.num_points()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dimension(&self) -> u64 {
        binom(self.d as u64 + self.nvars() as u64, self.nvars() as u64)
    }

    /// `binom(t - d, m)`.
    pub fn design_distance(&self) -> usize {
        binom((self.num_hyperplanes() - self.d as usize) as u64, self.nvars() as u64) as usize
    }

    pub fn encode(&self, f: &MultiPoly) -> Result<Vec<FieldElement>, GapError> {
        if f.nvars() != self.nvars() {
            return Err(GapError::DimensionMismatch { expected: self.nvars(), got: f.nvars() });
        }
        if f.degree() > self.d {
            return Err(GapError::DegreeTooHigh { degree: f.degree(), bound: self.d });
        }
        Ok(self.family.coords.iter().map(|x| f.eval(x)).collect())
    }

    /// The unique polynomial of degree at most `d` with the given values,
    /// when `t = d + m`.
    pub fn interpolate(&self, values: &[FieldElement]) -> Result<MultiPoly, GapError> {
        let (t, m) = (self.num_hyperplanes(), self.nvars());
        if t != self.d as usize + m {
            return Err(GapError::NotInterpolating { t, d: self.d, m });
        }
        if values.len() != self.len() {
            return Err(GapError::LengthMismatch { expected: self.len(), got: values.len() });
        }
        let field = self.field();
        let mut acc = MultiPoly::zero(field, m);
        for ((s, x), &v) in self.family.subsets.iter().zip(&self.family.coords).zip(values) {
            if v.is_zero() {
                continue;
            }
            let mut p = MultiPoly::one(field, m);
            for j in (0..t).filter(|j| !s.contains(j)) {
                p = &p * &self.family.forms[j].to_poly();
            }
            let scale = v * p.eval(x).inv().expect("general position");
            acc = &acc + &p.scale(scale);
        }
        Ok(acc)
    }

    /// Block `i` lists the received values at `{i} ∪ J` for the
    /// `(m-1)`-subsets `J` of the other hyperplanes, in lexicographic order.
    /// Each point appears in `m` blocks.
    pub fn intermediate_word<T: Clone>(&self, r: &[T]) -> Vec<Vec<T>> {
        let t = self.num_hyperplanes();
        (0..t)
            .map(|i| {
                let others: Vec<usize> = (0..t).filter(|&j| j != i).collect();
                others
                    .into_iter()
                    .combinations(self.nvars() - 1)
                    .map(|j| r[self.family.point_index(&sorted_with(&j, i)).expect("point")].clone())
                    .collect()
            })
            .collect()
    }

    /// Unique decoding up to half the design distance; `Ok(None)` is FAIL.
    pub fn decode(&self, r: &[Symbol<FieldElement>]) -> Result<Option<MultiPoly>, GapError> {
        if r.len() != self.len() {
            return Err(GapError::LengthMismatch { expected: self.len(), got: r.len() });
        }
        let f = self.decode_unchecked(r)?;
        Ok(f.filter(|f| weight(r, &self.encode(f).expect("degree checked")) < self.design_distance()))
    }

    fn decoder(&self) -> Result<&Decoder, GapError> {
        self.decoder.get_or_init(|| self.build_decoder()).as_ref().map_err(|e| e.clone())
    }

    fn build_decoder(&self) -> Result<Decoder, GapError> {
        let fam = &self.family;
        let (m, field) = (fam.m, fam.field);
        if m == 1 {
            let roots = fam.coords.iter().map(|x| x[0]).collect();
            let rs = RsCode::new(field, self.d as usize, roots).map_err(|e| GapError::InvalidParameters(e.to_string()))?;
            return Ok(Decoder::Line(rs));
        }
        if fam.forms.iter().any(|h| h.coeff(m - 1).is_zero()) {
            let (forms, back) = graph_coordinates(fam)?;
            let code = GapCode::new(HyperplaneFamily::new(field, m, forms)?, self.d)?;
            return Ok(Decoder::Changed { code: Box::new(code), back });
        }
        let mut graphs = Vec::with_capacity(fam.len());
        let mut inner = Vec::with_capacity(fam.len());
        for i in 0..fam.len() {
            let rf = fam.restrict_to_hyperplane(i)?;
            debug_assert_eq!(rf.pivot, m - 1);
            let map = rf
                .family
                .subsets
                .iter()
                .map(|s| {
                    let amb: Vec<usize> = s.iter().map(|&k| rf.others[k]).collect();
                    fam.point_index(&sorted_with(&amb, i)).expect("point")
                })
                .collect();
            graphs.push(rf.graph);
            inner.push((GapCode::new(rf.family, self.d)?, map));
        }
        let outer = PolyRingRsCode::new(field, self.d as usize, graphs).map_err(|e| GapError::InvalidParameters(e.to_string()))?;
        Ok(Decoder::Graph { outer, inner })
    }

    fn decode_unchecked(&self, r: &[Symbol<FieldElement>]) -> Result<Option<MultiPoly>, GapError> {
        match self.decoder()? {
            Decoder::Line(rs) => Ok(rs.decode(r).map(|g| g.to_multi())),
            Decoder::Changed { code, back } => Ok(code.decode_unchecked(r)?.map(|g| g.substitute_affine(back))),
            Decoder::Graph { outer, inner } => {
                let mut specs = Vec::with_capacity(inner.len());
                for (code, _) in inner {
                    code.decoder()?;
                    let decoder: InnerDecoder<'_, FieldElement, MultiPoly> = Box::new(move |blk| {
                        let g = code.decode_unchecked(blk).ok()??;
                        let cw = code.encode(&g).ok()?;
                        Some(InnerDecoding { disagreements: disagreements(blk, &cw), symbol: g })
                    });
                    specs.push(InnerBlock { distance: code.design_distance(), decoder });
                }
                let outer_dec: OuterDecoder<'_, MultiPoly, MultiPoly> = Box::new(|z| {
                    let f = outer.decode(z).ok()??;
                    let codeword = outer.encode(&f).ok()?;
                    Some(OuterDecoding { message: f, codeword })
                });
                let spec = ConcatenationSpec { inner: specs, outer_distance: outer.distance(), outer: outer_dec };
                let blocks: Vec<Vec<Symbol<FieldElement>>> =
                    inner.iter().map(|(_, map)| map.iter().map(|&j| r[j].clone()).collect()).collect();
                Ok(gmd_decode(&blocks, &spec).map(|o| o.message))
            }
        }
    }
}

/// Forms of the family after the substitution `x = B x'`, where the last
/// column of `B` has a nonzero product with every form, and the forms giving
/// `x'` in terms of `x`.
fn graph_coordinates(fam: &HyperplaneFamily) -> Result<(Vec<AffineForm>, Vec<AffineForm>), GapError> {
    let (m, field) = (fam.m, fam.field);
    let p = field.p();
    let limit = p.checked_pow(m as u32).unwrap_or(u64::MAX).min(1 << 20);
    let dot = |h: &AffineForm, u: &[FieldElement]| h.coeffs().iter().zip(u).fold(field.zero(), |a, (&c, &x)| a + c * x);
    let u = (1..limit)
        .map(|mut n| {
            (0..m)
                .map(|_| {
                    let d = n % p;
                    n /= p;
                    field.elem(d)
                })
                .collect::<Vec<_>>()
        })
        .find(|u| fam.forms.iter().all(|h| !dot(h, u).is_zero()))
        .ok_or(GapError::NoGraphCoordinates)?;
    let j = u.iter().position(|c| !c.is_zero()).expect("nonzero");
    // columns of B: e_k for k != j, then u
    let mut cols: Vec<Vec<FieldElement>> = (0..m)
        .filter(|&k| k != j)
        .map(|k| (0..m).map(|r| if r == k { field.one() } else { field.zero() }).collect())
        .collect();
    cols.push(u);
    let b: Vec<Vec<FieldElement>> = (0..m).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    let binv = invert(&b).expect("invertible by construction");
    let forms = fam
        .forms
        .iter()
        .map(|h| AffineForm::new(h.constant(), cols.iter().map(|c| dot(h, c)).collect()))
        .collect();
    let back = binv.into_iter().map(|row| AffineForm::new(field.zero(), row)).collect();
    Ok((forms, back))
}

/// Unique decoder for `m = 2`.
pub fn decode_bivariate_geometric(code: &GapCode, r: &[Symbol<FieldElement>]) -> Result<Option<MultiPoly>, GapError> {
    if code.nvars() != 2 {
        return Err(GapError::DimensionMismatch { expected: 2, got: code.nvars() });
    }
    code.decode(r)
}

/// Unique decoder for any `m >= 2`, recursing one dimension at a time.
pub fn decode_multivariate_geometric(code: &GapCode, r: &[Symbol<FieldElement>]) -> Result<Option<MultiPoly>, GapError> {
    if code.nvars() < 2 {
        return Err(GapError::InvalidParameters("needs m >= 2".into()));
    }
    code.decode(r)
}
