//! Local tests for GAP codes: the line-point and plane-point tests, the
//! local characterization by line polynomials and the divisibility
//! experiment on hyperplane restrictions.
//!
//! Lines and planes are those of [`HyperplaneFamily::lines`] and
//! [`HyperplaneFamily::planes`]; a line polynomial `g_l` is written in the
//! line parameter `z` with `x = base + z * dir`.

use std::collections::HashMap;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ffield::{FieldElement, PrimeField};
use crate::gap::{GapCode, GapError, HyperplaneFamily, Line, Plane};
use crate::poly::{interpolate_univariate, monomials_up_to, poly_divide, AffineForm, MultiPoly, UniPoly};
use crate::rs::{to_received, RsCode};

/// Upper limit on the number of messages enumerated by exhaustive searches.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LtcError {
    #[error(transparent)]
    Gap(#[from] GapError),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestKind {
    LinePoint,
    PlanePoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestMode {
    /// Every (object, point) incidence once.
    Exact,
    Sampled { trials: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjectTally {
    /// Hyperplane indices defining the line or plane.
    pub object: Vec<usize>,
    pub points: usize,
    pub rejections: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub mode: TestKind,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub rejections: u64,
    /// Incidences enumerated (exact) or sampled.
    pub incidences: u64,
    pub p_reject: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Vec<ObjectTally>>,
}

/// A closest polynomial of degree at most `d` to `(z_i, y_i)`.
///
/// Within half the distance the Berlekamp-Welch answer is the unique closest
/// one. Otherwise all `p^(d+1)` polynomials are searched when that is at most
/// [`EXHAUSTIVE_LIMIT`], keeping the lexicographically least coefficient
/// vector `(c_0, ..., c_d)` among the closest; beyond that the polynomial
/// through the first `d + 1` points is returned.
pub fn nearest_line_codeword(params: &[FieldElement], word: &[FieldElement], d: usize) -> Result<UniPoly, LtcError> {
    if params.len() != word.len() {
        return Err(LtcError::LengthMismatch { expected: params.len(), got: word.len() });
    }
    let field = params
        .first()
        .map(|z| z.field())
        .ok_or_else(|| LtcError::InvalidParameters("empty line".into()))?;
    let rs = RsCode::new(field, d, params.to_vec()).map_err(|e| LtcError::InvalidParameters(e.to_string()))?;
    if let Some(g) = rs.decode(&to_received(word)) {
        return Ok(g);
    }
    let p = field.p();
    if p.checked_pow(d as u32 + 1).is_some_and(|n| n <= EXHAUSTIVE_LIMIT) {
        let mut best: Option<(usize, Vec<u64>)> = None;
        let mut c = vec![0u64; d + 1];
        loop {
            let g = UniPoly::new(field, c.iter().map(|&v| field.elem(v)).collect());
            let dist = params.iter().zip(word).filter(|(&z, &y)| g.eval(z) != y).count();
            if best.as_ref().is_none_or(|(b, _)| dist < *b) {
                best = Some((dist, c.clone()));
            }
            // next vector in lexicographic order, last coordinate fastest
            let mut k = d + 1;
            loop {
                if k == 0 {
                    let (_, c) = best.expect("at least one candidate");
                    return Ok(UniPoly::new(field, c.into_iter().map(|v| field.elem(v)).collect()));
                }
                k -= 1;
                c[k] += 1;
                if c[k] < p {
                    break;
                }
                c[k] = 0;
            }
        }
    }
    let pts: Vec<(FieldElement, FieldElement)> = params.iter().copied().zip(word.iter().copied()).take(d + 1).collect();
    interpolate_univariate(field, &pts).map_err(|e| LtcError::Internal(e.to_string()))
}

fn check_word(code: &GapCode, word: &[FieldElement]) -> Result<(), LtcError> {
    if word.len() != code.len() {
        return Err(LtcError::LengthMismatch { expected: code.len(), got: word.len() });
    }
    if code.nvars() < 2 {
        return Err(LtcError::InvalidParameters("local tests need m >= 2".into()));
    }
    Ok(())
}

fn line_rejections(code: &GapCode, line: &Line, word: &[FieldElement]) -> Result<Vec<bool>, LtcError> {
    let vals: Vec<FieldElement> = line.points.iter().map(|&p| word[p]).collect();
    let g = nearest_line_codeword(&line.params, &vals, code.degree() as usize)?;
    Ok(line.params.iter().zip(&vals).map(|(&z, &y)| g.eval(z) != y).collect())
}

/// A closest bivariate polynomial to the word restricted to `plane`, in
/// plane coordinates.
pub fn nearest_plane_codeword(code: &GapCode, plane: &Plane, word: &[FieldElement]) -> Result<MultiPoly, LtcError> {
    let d = code.degree();
    let local = GapCode::new(plane.family.clone(), d)?;
    let vals: Vec<FieldElement> = plane.points.iter().map(|&p| word[p]).collect();
    if let Some(g) = local.decode(&to_received(&vals))? {
        return Ok(g);
    }
    if let Some((_, g)) = nearest_by_enumeration(&local, &vals) {
        return Ok(g);
    }
    // interpolate on the first d + 2 lines of the plane
    let field = code.field();
    let sub = HyperplaneFamily::new(field, 2, plane.family.forms()[..d as usize + 2].to_vec())?;
    let sub = GapCode::new(sub, d)?;
    let sub_vals: Vec<FieldElement> = sub
        .family()
        .point_subsets()
        .iter()
        .map(|s| vals[plane.family.point_index(s).expect("subfamily point")])
        .collect();
    Ok(sub.interpolate(&sub_vals)?)
}

/// Distance from `word` to the code and a closest message with the least
/// coefficient vector (monomials in ascending order), by enumerating all
/// messages. `None` if there are more than [`EXHAUSTIVE_LIMIT`].
pub fn nearest_by_enumeration(code: &GapCode, word: &[FieldElement]) -> Option<(usize, MultiPoly)> {
    let field = code.field();
    let p = field.p();
    let monos = monomials_up_to(code.nvars(), code.degree());
    let total = p.checked_pow(monos.len() as u32).filter(|&n| n <= EXHAUSTIVE_LIMIT)?;
    let cols: Vec<Vec<FieldElement>> = monos
        .iter()
        .map(|e| code.encode(&MultiPoly::monomial(field.one(), e)).expect("degree within bound"))
        .collect();
    let mut best: Option<(usize, u64)> = None;
    let k = monos.len();
    let mut acc = vec![field.zero(); word.len()];
    let mut digits = vec![0u64; k];
    for n in 0..total {
        if n > 0 {
            // mixed-radix increment, last monomial fastest
            let mut j = k;
            loop {
                j -= 1;
                for (a, &c) in acc.iter_mut().zip(&cols[j]) {
                    *a += c;
                }
                digits[j] += 1;
                if digits[j] < p {
                    break;
                }
                digits[j] = 0;
            }
        }
        let dist = acc.iter().zip(word).filter(|(a, b)| a != b).count();
        if best.is_none_or(|(b, _)| dist < b) {
            best = Some((dist, n));
        }
    }
    let (dist, mut n) = best?;
    let mut coeffs = vec![0u64; k];
    for c in coeffs.iter_mut().rev() {
        *c = n % p;
        n /= p;
    }
    let g = MultiPoly::from_terms(field, code.nvars(), monos.into_iter().zip(coeffs).map(|(e, c)| (e, field.elem(c))));
    Some((dist, g))
}

fn plane_rejections(code: &GapCode, plane: &Plane, word: &[FieldElement]) -> Result<Vec<bool>, LtcError> {
    let g = nearest_plane_codeword(code, plane, word)?;
    Ok(plane.points.iter().zip(&plane.coords).map(|(&p, z)| g.eval(z) != word[p]).collect())
}

fn run_test(
    kind: TestKind,
    objects: Vec<(Vec<usize>, usize)>,
    mode: TestMode,
    mut reject: impl FnMut(usize) -> Result<Vec<bool>, LtcError>,
) -> Result<TestReport, LtcError> {
    match mode {
        TestMode::Exact => {
            let mut breakdown = Vec::with_capacity(objects.len());
            let (mut rej, mut inc) = (0u64, 0u64);
            for (n, (object, points)) in objects.into_iter().enumerate() {
                let r = reject(n)?.iter().filter(|&&b| b).count();
                rej += r as u64;
                inc += points as u64;
                breakdown.push(ObjectTally { object, points, rejections: r });
            }
            Ok(TestReport {
                mode: kind,
                exact: true,
                trials: None,
                seed: None,
                rejections: rej,
                incidences: inc,
                p_reject: if inc == 0 { 0.0 } else { rej as f64 / inc as f64 },
                breakdown: Some(breakdown),
            })
        }
        TestMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut cache: HashMap<usize, Vec<bool>> = HashMap::new();
            let mut rej = 0u64;
            for _ in 0..trials {
                let n = rng.gen_range(0..objects.len());
                let x = rng.gen_range(0..objects[n].1);
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(n) {
                    e.insert(reject(n)?);
                }
                if cache[&n][x] {
                    rej += 1;
                }
            }
            Ok(TestReport {
                mode: kind,
                exact: false,
                trials: Some(trials),
                seed: Some(seed),
                rejections: rej,
                incidences: trials as u64,
                p_reject: if trials == 0 { 0.0 } else { rej as f64 / trials as f64 },
                breakdown: None,
            })
        }
    }
}

/// Pick a line and a point on it; reject if the word differs there from the
/// closest line polynomial.
pub fn line_point_test(code: &GapCode, word: &[FieldElement], mode: TestMode) -> Result<TestReport, LtcError> {
    check_word(code, word)?;
    if code.num_hyperplanes() < code.nvars() - 1 + code.degree() as usize + 1 {
        return Err(LtcError::InvalidParameters("lines must have more than d points".into()));
    }
    let lines = code.family().lines();
    let objects = lines.iter().map(|l| (l.hyperplanes.clone(), l.points.len())).collect();
    run_test(TestKind::LinePoint, objects, mode, |n| line_rejections(code, &lines[n], word))
}

/// Pick a plane and a point on it; reject if the word differs there from the
/// closest bivariate polynomial on the plane. For `m = 2` the only plane is
/// the whole domain and the rejection probability is the relative distance
/// to the closest codeword found.
pub fn plane_point_test(code: &GapCode, word: &[FieldElement], mode: TestMode) -> Result<TestReport, LtcError> {
    check_word(code, word)?;
    if code.num_hyperplanes() < code.degree() as usize + code.nvars() {
        return Err(LtcError::InvalidParameters("needs t >= d + m".into()));
    }
    let planes = code.family().planes()?;
    let objects = planes.iter().map(|p| (p.hyperplanes.clone(), p.points.len())).collect();
    run_test(TestKind::PlanePoint, objects, mode, |n| plane_rejections(code, &planes[n], word))
}

/// One univariate polynomial per line, in the order of [`HyperplaneFamily::lines`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePolySystem {
    pub polys: Vec<UniPoly>,
}

impl LinePolySystem {
    /// Restrictions of `f` to every line.
    pub fn from_poly(family: &HyperplaneFamily, f: &MultiPoly) -> Result<Self, LtcError> {
        let polys = family
            .lines()
            .iter()
            .map(|l| f.restrict_to_line(&l.base, &l.dir).map_err(|e| LtcError::InvalidParameters(e.to_string())))
            .collect::<Result<_, _>>()?;
        Ok(Self { polys })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Characterization {
    Global(MultiPoly),
    /// Two lines through `point` whose polynomials disagree there.
    Counterexample { line_a: usize, line_b: usize, point: usize },
}

/// Either the unique polynomial of degree at most `d` restricting to every
/// line polynomial, or two lines disagreeing at a common point.
pub fn local_characterization_check(code: &GapCode, system: &LinePolySystem) -> Result<Characterization, LtcError> {
    let fam = code.family();
    let (m, t, d) = (code.nvars(), code.num_hyperplanes(), code.degree() as usize);
    if m < 2 || t < d + m {
        return Err(LtcError::InvalidParameters("needs m >= 2 and t >= d + m".into()));
    }
    let lines = fam.lines();
    if system.polys.len() != lines.len() {
        return Err(LtcError::LengthMismatch { expected: lines.len(), got: system.polys.len() });
    }
    if let Some(g) = system.polys.iter().find(|g| g.degree().unwrap_or(0) > d) {
        return Err(LtcError::InvalidParameters(format!("line polynomial {g} has degree above {d}")));
    }
    let line_index: HashMap<&[usize], usize> = lines.iter().enumerate().map(|(n, l)| (l.hyperplanes.as_slice(), n)).collect();
    // value of each line polynomial at each of its points, keyed by point
    let mut at_point: Vec<Vec<(usize, FieldElement)>> = vec![Vec::new(); fam.num_points()];
    for (n, l) in lines.iter().enumerate() {
        for (&p, &z) in l.points.iter().zip(&l.params) {
            at_point[p].push((n, system.polys[n].eval(z)));
        }
    }
    let mut values = Vec::with_capacity(fam.num_points());
    for (p, vals) in at_point.iter().enumerate() {
        let (a, va) = vals[0];
        if let Some(&(b, _)) = vals.iter().find(|(_, v)| *v != va) {
            return Ok(Characterization::Counterexample { line_a: a, line_b: b, point: p });
        }
        values.push(va);
    }
    debug_assert!(line_index.len() == lines.len());

    let sub = HyperplaneFamily::new(code.field(), m, fam.forms()[..d + m].to_vec())?;
    let sub = GapCode::new(sub, d as u32)?;
    let sub_vals: Vec<FieldElement> =
        sub.family().point_subsets().iter().map(|s| values[fam.point_index(s).expect("subfamily point")]).collect();
    let f = sub.interpolate(&sub_vals)?;
    for (n, l) in lines.iter().enumerate() {
        let r = f.restrict_to_line(&l.base, &l.dir).map_err(|e| LtcError::Internal(e.to_string()))?;
        if r != system.polys[n] {
            return Err(LtcError::Internal(format!("interpolant disagrees with line {:?}", l.hyperplanes)));
        }
    }
    Ok(Characterization::Global(f))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityReport {
    /// Whether `E|_H` divides `P|_H`, per hyperplane.
    pub restricted: Vec<bool>,
    pub all_restricted: bool,
    pub global: bool,
    pub quotient: Option<MultiPoly>,
}

fn divides(e: &MultiPoly, p: &MultiPoly) -> Result<Option<MultiPoly>, LtcError> {
    if e.is_zero() {
        return Ok(p.is_zero().then(|| p.clone()));
    }
    poly_divide(p, e).map_err(|err| LtcError::Internal(err.to_string()))
}

/// Compares divisibility of `P` by `E` on each hyperplane with divisibility
/// in `F_p[X_1, ..., X_m]`.
pub fn divisibility_experiment(e: &MultiPoly, p: &MultiPoly, family: &HyperplaneFamily) -> Result<DivisibilityReport, LtcError> {
    if e.is_zero() {
        return Err(LtcError::InvalidParameters("E must be nonzero".into()));
    }
    let m = family.nvars();
    if e.nvars() != m || p.nvars() != m {
        return Err(LtcError::InvalidParameters(format!("polynomials must have {m} variables")));
    }
    let mut restricted = Vec::with_capacity(family.len());
    for i in 0..family.len() {
        let rf = family.restrict_to_hyperplane(i)?;
        let (er, pr) = (e.substitute_affine(&rf.embedding), p.substitute_affine(&rf.embedding));
        restricted.push(divides(&er, &pr)?.is_some());
    }
    let quotient = divides(e, p)?;
    Ok(DivisibilityReport {
        all_restricted: restricted.iter().all(|&b| b),
        restricted,
        global: quotient.is_some(),
        quotient,
    })
}

/// `E = X1`, `P = prod_{i=1..d} (X2 - i^2)` and the `2d` lines
/// `X2 = i X1 + i^2` for `i = ±1, ..., ±d`: every restriction of `P` is
/// divisible by that of `E`, yet `E` does not divide `P`.
pub fn tight_example(field: PrimeField, d: u32) -> Result<(MultiPoly, MultiPoly, HyperplaneFamily), LtcError> {
    if d == 0 || 2 * d as u64 >= field.p() {
        return Err(LtcError::InvalidParameters(format!("need 1 <= d and 2d < p (d={d}, p={})", field.p())));
    }
    let e = MultiPoly::var(field, 2, 0);
    let y = MultiPoly::var(field, 2, 1);
    let mut p = MultiPoly::one(field, 2);
    for i in 1..=d as u64 {
        p = &p * &(&y - &MultiPoly::constant(field.elem(i * i), 2));
    }
    let forms = (1..=d as i64)
        .flat_map(|i| [i, -i])
        .map(|i| {
            let i = field.from_i64(i);
            AffineForm::new(i * i, vec![i, -field.one()])
        })
        .collect();
    let fam = HyperplaneFamily::new(field, 2, forms)?;
    Ok((e, p, fam))
}

/// Pairs of lines sharing a point: `|J1 ∪ J2| = m`.
pub fn intersecting_line_pairs(family: &HyperplaneFamily) -> Vec<(usize, usize)> {
    let lines = family.lines();
    let m = family.nvars();
    (0..lines.len())
        .tuple_combinations()
        .filter(|&(a, b)| {
            let mut u = lines[a].hyperplanes.clone();
            u.extend(&lines[b].hyperplanes);
            u.sort_unstable();
            u.dedup();
            u.len() == m
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SoundnessPoint {
    pub flips: usize,
    /// Relative distance to the code, by enumeration.
    pub delta_c: f64,
    pub p_reject: f64,
    /// `delta_c / p_reject`; `None` when both vanish, infinite when only the
    /// rejection probability does.
    pub ratio: Option<f64>,
}

/// Corrupts random codewords in `flips` random positions for every
/// `flips <= max_flips` and records the exact rejection probability of the
/// chosen test next to the true relative distance.
pub fn soundness_sweep(
    code: &GapCode,
    kind: TestKind,
    max_flips: usize,
    words_per_step: usize,
    seed: u64,
) -> Result<Vec<SoundnessPoint>, LtcError> {
    let field = code.field();
    let p = field.p();
    let monos = monomials_up_to(code.nvars(), code.degree());
    if p.checked_pow(monos.len() as u32).is_none_or(|n| n > EXHAUSTIVE_LIMIT) {
        return Err(LtcError::InvalidParameters("code too large for exhaustive distance".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for flips in 0..=max_flips.min(code.len()) {
        for _ in 0..words_per_step {
            let f = MultiPoly::from_terms(field, code.nvars(), monos.iter().map(|e| (e.clone(), field.elem(rng.gen_range(0..p)))));
            let mut w = code.encode(&f)?;
            for i in rand::seq::index::sample(&mut rng, code.len(), flips) {
                w[i] += field.elem(rng.gen_range(1..p));
            }
            let (dist, _) = nearest_by_enumeration(code, &w).expect("size checked above");
            let report = match kind {
                TestKind::LinePoint => line_point_test(code, &w, TestMode::Exact)?,
                TestKind::PlanePoint => plane_point_test(code, &w, TestMode::Exact)?,
            };
            let delta_c = dist as f64 / code.len() as f64;
            let ratio = match (dist, report.rejections) {
                (0, 0) => None,
                (_, 0) => Some(f64::INFINITY),
                _ => Some(delta_c / report.p_reject),
            };
            out.push(SoundnessPoint { flips, delta_c, p_reject: report.p_reject, ratio });
        }
    }
    Ok(out)
}
