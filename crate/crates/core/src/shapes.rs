//! Downward-closed evaluation shapes in `N^m`, their `d`-robustness, the
//! shifting operators and brute-force checks of the Schwartz-Zippel bound
//! for shapes.
//!
//! A point `x` of a shape is evaluated at `(a_{x_1}, ..., a_{x_m})` for a
//! label set `a_0, a_1, ...` of distinct field elements; the default labels
//! are `0, 1, 2, ...`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

use crate::combin::compositions;
use crate::ffield::{FieldElement, PrimeField};
use crate::poly::{monomials_up_to, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("point set is not downward closed (missing {0:?})")]
    NotDownwardClosed(Vec<u32>),
    #[error("axis {axis} out of range for dimension {m}")]
    AxisOutOfRange { axis: usize, m: usize },
    #[error("instance too large: {size} exceeds the limit {limit}")]
    TooLarge { size: u128, limit: u128 },
    #[error("the zero polynomial has no zero pattern")]
    ZeroPolynomial,
    #[error("labels: {0}")]
    Labels(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    Grid,
    Simplex,
    Step,
    Explicit,
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeKind::Grid => "grid",
            ShapeKind::Simplex => "simplex",
            ShapeKind::Step => "step",
            ShapeKind::Explicit => "explicit",
        })
    }
}

/// A finite downward-closed subset of `N^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    m: usize,
    kind: ShapeKind,
    side: Option<u32>,
    points: BTreeSet<Vec<u32>>,
    labels: Option<Vec<FieldElement>>,
}

pub fn make_grid(m: usize, l: u32) -> Result<Shape, ShapeError> {
    if m == 0 || l == 0 {
        return Err(ShapeError::InvalidParameters(format!("grid needs m, l >= 1 (got m={m}, l={l})")));
    }
    let mut points = BTreeSet::new();
    let mut x = vec![0u32; m];
    loop {
        points.insert(x.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(Shape { m, kind: ShapeKind::Grid, side: Some(l), points, labels: None });
            }
            i -= 1;
            x[i] += 1;
            if x[i] < l {
                break;
            }
            x[i] = 0;
        }
    }
}

pub fn make_simplex(m: usize, l: u32) -> Result<Shape, ShapeError> {
    if m == 0 || l == 0 {
        return Err(ShapeError::InvalidParameters(format!("simplex needs m, l >= 1 (got m={m}, l={l})")));
    }
    let points = crate::combin::simplex_points(m, l).into_iter().collect();
    Ok(Shape { m, kind: ShapeKind::Simplex, side: Some(l), points, labels: None })
}

/// `{(x, y) in [l]^2 : x < l/2 or y < l/2}` for even `l`.
pub fn make_step(l: u32) -> Result<Shape, ShapeError> {
    if l == 0 || !l.is_multiple_of(2) {
        return Err(ShapeError::InvalidParameters(format!("step needs an even side (got {l})")));
    }
    let h = l / 2;
    let mut points = BTreeSet::new();
    for x in 0..l {
        for y in 0..l {
            if x < h || y < h {
                points.insert(vec![x, y]);
            }
        }
    }
    Ok(Shape { m: 2, kind: ShapeKind::Step, side: Some(l), points, labels: None })
}

/// True iff `x <= y` coordinatewise and `y` in the set imply `x` in the set.
/// It suffices to check the unit decrements of each point.
pub fn is_downward_closed(points: &BTreeSet<Vec<u32>>) -> bool {
    first_missing(points).is_none()
}

fn first_missing(points: &BTreeSet<Vec<u32>>) -> Option<Vec<u32>> {
    for p in points {
        for i in 0..p.len() {
            if p[i] > 0 {
                let mut q = p.clone();
                q[i] -= 1;
                if !points.contains(&q) {
                    return Some(q);
                }
            }
        }
    }
    None
}

impl Shape {
    /// An explicit shape; the point set must be downward closed.
    pub fn from_points(m: usize, points: impl IntoIterator<Item = Vec<u32>>) -> Result<Shape, ShapeError> {
        let points: BTreeSet<Vec<u32>> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.len() != m) {
            return Err(ShapeError::InvalidParameters(format!("point {p:?} is not in N^{m}")));
        }
        if let Some(q) = first_missing(&points) {
            return Err(ShapeError::NotDownwardClosed(q));
        }
        Ok(Shape { m, kind: ShapeKind::Explicit, side: None, points, labels: None })
    }

    /// Attaches labels; index `k` is evaluated at `labels[k]`.
    pub fn with_labels(mut self, labels: Vec<FieldElement>) -> Result<Shape, ShapeError> {
        let need = self.max_coordinate().map_or(0, |c| c as usize + 1);
        if labels.len() < need {
            return Err(ShapeError::Labels(format!("{} labels for coordinates up to {}", labels.len(), need - 1)));
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(ShapeError::Labels("labels must be distinct".into()));
        }
        if let Some(w) = labels.windows(2).find(|w| w[0].field() != w[1].field()) {
            return Err(ShapeError::Labels(format!("labels from F_{} and F_{}", w[0].field().p(), w[1].field().p())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    /// Side length `l` for grid, simplex and step shapes.
    pub fn side(&self) -> Option<u32> {
        self.side
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &BTreeSet<Vec<u32>> {
        &self.points
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.points.contains(x)
    }

    pub fn max_coordinate(&self) -> Option<u32> {
        self.points.iter().flat_map(|p| p.iter().copied()).max()
    }

    pub fn labels(&self) -> Option<&[FieldElement]> {
        self.labels.as_deref()
    }

    /// The labels to use over `field`: the attached ones, or `0, 1, ...`.
    pub fn labels_in(&self, field: PrimeField) -> Result<Vec<FieldElement>, ShapeError> {
        if let Some(l) = &self.labels {
            if l.first().is_some_and(|a| a.field() != field) {
                return Err(ShapeError::Labels(format!("labels are not in F_{}", field.p())));
            }
            return Ok(l.clone());
        }
        let need = self.max_coordinate().map_or(0, |c| c as u64 + 1);
        if need > field.p() {
            return Err(ShapeError::Labels(format!("default labels need p >= {need}")));
        }
        Ok((0..need).map(|v| field.elem(v)).collect())
    }
}

/// Number of points with `x_i >= d_i` for all `i`.
pub fn high_count(s: &Shape, d: &[u32]) -> usize {
    s.points.iter().filter(|x| x.iter().zip(d).all(|(a, b)| a >= b)).count()
}

/// `x` lies in `L(d)` iff some coordinate has `x_i < d_i`.
pub fn in_low(x: &[u32], d: &[u32]) -> bool {
    x.iter().zip(d).any(|(a, b)| a < b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Robustness {
    pub value: usize,
    /// First minimizing composition in ascending lexicographic order.
    pub composition: Vec<u32>,
    pub size: usize,
}

impl Robustness {
    pub fn relative(&self) -> Ratio<u64> {
        Ratio::new(self.value as u64, self.size.max(1) as u64)
    }
}

/// `min over compositions d of |H(d) ∩ S|`.
pub fn robustness(s: &Shape, d: u32) -> Robustness {
    let mut best: Option<(usize, Vec<u32>)> = None;
    for c in compositions(s.m, d) {
        let v = high_count(s, &c);
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, c));
        }
    }
    let (value, composition) = best.expect("at least one composition");
    Robustness { value, composition, size: s.len() }
}

/// Compacts every slice in direction `axis` (0-based) to an initial segment.
pub fn shift(z: &BTreeSet<Vec<u32>>, axis: usize) -> Result<BTreeSet<Vec<u32>>, ShapeError> {
    let m = z.first().map_or(0, |p| p.len());
    if z.is_empty() {
        return Ok(BTreeSet::new());
    }
    if axis >= m {
        return Err(ShapeError::AxisOutOfRange { axis, m });
    }
    let mut slices: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for p in z {
        let mut key = p.clone();
        key.remove(axis);
        *slices.entry(key).or_default() += 1;
    }
    let mut out = BTreeSet::new();
    for (key, n) in slices {
        for v in 0..n {
            let mut p = key.clone();
            p.insert(axis, v);
            out.insert(p);
        }
    }
    Ok(out)
}

/// `sigma_1 ∘ ... ∘ sigma_m`: shifts along the last axis first.
pub fn shift_all(z: &BTreeSet<Vec<u32>>) -> BTreeSet<Vec<u32>> {
    let m = z.first().map_or(0, |p| p.len());
    let mut cur = z.clone();
    for axis in (0..m).rev() {
        cur = shift(&cur, axis).expect("axis in range");
    }
    cur
}

pub const ENUMERATION_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinNonzeros {
    pub count: usize,
    pub witness: MultiPoly,
}

/// Minimum of `|N(f) ∩ S|` over nonzero `f` of degree at most `d` over `F_p`,
/// by enumerating all coefficient vectors.
pub fn min_nonzeros_bruteforce(m: usize, d: u32, s: &Shape, p: u64) -> Result<MinNonzeros, ShapeError> {
    if s.dimension() != m {
        return Err(ShapeError::InvalidParameters(format!("shape has dimension {}, not {m}", s.dimension())));
    }
    let field = PrimeField::new(p).map_err(|e| ShapeError::InvalidParameters(e.to_string()))?;
    let labels = s.labels_in(field)?;
    let monos = monomials_up_to(m, d);
    let k = monos.len();
    let total = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total - 1 > ENUMERATION_LIMIT {
        return Err(ShapeError::TooLarge { size: total - 1, limit: ENUMERATION_LIMIT });
    }
    // cols[j][s] = value of monomial j at point s
    let pts: Vec<&Vec<u32>> = s.points.iter().collect();
    let cols: Vec<Vec<u32>> = monos
        .iter()
        .map(|e| {
            pts.iter()
                .map(|x| {
                    let v = x.iter().zip(e).fold(field.one(), |acc, (&xi, &ei)| acc * labels[xi as usize].pow(ei as u64));
                    v.value() as u32
                })
                .collect()
        })
        .collect();
    let p32 = p as u32;
    let mut vals = vec![0u32; pts.len()];
    let mut digits = vec![0u32; k];
    let mut best = usize::MAX;
    let mut best_digits = digits.clone();
    let add = |vals: &mut [u32], col: &[u32]| {
        for (v, &c) in vals.iter_mut().zip(col) {
            *v += c;
            if *v >= p32 {
                *v -= p32;
            }
        }
    };
    'outer: loop {
        let mut j = 0;
        loop {
            if j == k {
                break 'outer;
            }
            add(&mut vals, &cols[j]);
            digits[j] += 1;
            if digits[j] < p32 {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        let nz = vals.iter().filter(|&&v| v != 0).count();
        if nz < best {
            best = nz;
            best_digits = digits.clone();
        }
    }
    let witness = MultiPoly::from_terms(
        field,
        m,
        monos.into_iter().zip(best_digits).map(|(e, c)| (e, field.elem(c as u64))),
    );
    Ok(MinNonzeros { count: best, witness })
}

/// Checks that the zeros of `f` on the grid `labels^m`, shifted along every
/// axis, fit inside `L(d)` for a composition `d` of `deg f`. Returns the first
/// such composition; `None` would mean the shifted zero set escapes every `L(d)`.
pub fn zero_pattern_check(f: &MultiPoly, labels: &[FieldElement]) -> Result<Option<Vec<u32>>, ShapeError> {
    if f.is_zero() {
        return Err(ShapeError::ZeroPolynomial);
    }
    let m = f.nvars();
    let l = labels.len() as u32;
    let grid = make_grid(m, l)?;
    let zeros: BTreeSet<Vec<u32>> = grid
        .points
        .iter()
        .filter(|x| {
            let pt: Vec<FieldElement> = x.iter().map(|&i| labels[i as usize]).collect();
            f.eval(&pt).is_zero()
        })
        .cloned()
        .collect();
    let shifted = shift_all(&zeros);
    Ok(compositions(m, f.degree()).into_iter().find(|c| shifted.iter().all(|x| in_low(x, c))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSizeResult {
    pub size: usize,
    pub witness: Shape,
    pub robustness: Robustness,
    /// Whether the witness contains `(d, d)`.
    pub contains_dd: bool,
    /// `|S| >= (sqrt(delta |S| + d^2/4) + d/2)^2`, equivalently `(1 - delta)^2 |S| >= d^2`.
    pub high_distance_bound: bool,
    /// `|S| - d^2/2 + d >= d sqrt(2 delta |S|)`.
    pub low_distance_bound: bool,
}

pub const MAX_SEARCH_BOX: u32 = 6;

/// Smallest downward-closed `S` inside the `b x b` box with relative
/// `d`-robustness at least `delta`. Ties go to the first staircase in
/// reverse-lexicographic order of column heights. `None` if no shape in
/// the box qualifies.
pub fn min_size_search(d: u32, delta: Ratio<u64>, b: u32) -> Result<Option<MinSizeResult>, ShapeError> {
    if b > MAX_SEARCH_BOX {
        return Err(ShapeError::TooLarge { size: b as u128, limit: MAX_SEARCH_BOX as u128 });
    }
    if b == 0 || delta > Ratio::from_integer(1) {
        return Err(ShapeError::InvalidParameters("box side >= 1 and delta <= 1 required".into()));
    }
    let mut best: Option<(Shape, Robustness)> = None;
    let mut heights = vec![0u32; b as usize];
    staircases(0, b, &mut heights, &mut |h| {
        let size: u32 = h.iter().sum();
        if size == 0 || best.as_ref().is_some_and(|(s, _)| s.len() as u32 <= size) {
            return;
        }
        let pts = h.iter().enumerate().flat_map(|(x, &hx)| (0..hx).map(move |y| vec![x as u32, y]));
        let s = Shape::from_points(2, pts).expect("staircases are downward closed");
        let r = robustness(&s, d);
        if r.relative() >= delta {
            best = Some((s, r));
        }
    });
    Ok(best.map(|(witness, robustness)| {
        let n = witness.len() as u64;
        let dd = d as u64;
        let one = Ratio::from_integer(1u64);
        let gap = one - delta;
        let high = gap * gap * Ratio::from_integer(n) >= Ratio::from_integer(dd * dd);
        // (n - d^2/2 + d)^2 >= 2 delta n d^2 with a non-negative left side
        let lhs = Ratio::from_integer(n + dd) - Ratio::new(dd * dd, 2);
        let low = lhs * lhs >= delta * Ratio::from_integer(2 * n * dd * dd);
        MinSizeResult {
            size: witness.len(),
            contains_dd: witness.contains(&[d, d]),
            witness,
            robustness,
            high_distance_bound: high,
            low_distance_bound: low,
        }
    }))
}

/// Non-increasing column heights `h_0 >= h_1 >= ...` bounded by `b`.
fn staircases(col: usize, cap: u32, h: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if col == h.len() {
        visit(h);
        return;
    }
    for v in (0..=cap).rev() {
        h[col] = v;
        staircases(col + 1, v, h, visit);
    }
    h[col] = 0;
}

/// Text form: a header `m l kind` for grid, simplex or step, or `m explicit`
/// followed by one point per line. `#` starts a comment.
impl FromStr for Shape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header: Vec<&str> = lines.next().ok_or_else(|| ShapeError::Parse("empty shape file".into()))?.split_whitespace().collect();
        let num = |t: &str| t.parse::<u32>().map_err(|_| ShapeError::Parse(format!("expected an integer, got {t:?}")));
        match header.as_slice() {
            [m, "explicit"] => {
                let m = num(m)? as usize;
                let mut pts = Vec::new();
                for l in lines {
                    let p = l.split_whitespace().map(num).collect::<Result<Vec<_>, _>>()?;
                    pts.push(p);
                }
                Shape::from_points(m, pts)
            }
            [m, l, kind] => {
                let (m, l) = (num(m)? as usize, num(l)?);
                if lines.next().is_some() {
                    return Err(ShapeError::Parse("unexpected lines after a named shape".into()));
                }
                match *kind {
                    "grid" => make_grid(m, l),
                    "simplex" => make_simplex(m, l),
                    "step" if m == 2 => make_step(l),
                    "step" => Err(ShapeError::InvalidParameters("step shapes are two-dimensional".into())),
                    k => Err(ShapeError::Parse(format!("unknown shape kind {k:?}"))),
                }
            }
            _ => Err(ShapeError::Parse(format!("bad header {:?}", header.join(" ")))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.side) {
            (ShapeKind::Explicit, _) | (_, None) => {
                writeln!(f, "{} explicit", self.m)?;
                for p in &self.points {
                    let s: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                    writeln!(f, "{}", s.join(" "))?;
                }
                Ok(())
            }
            (k, Some(l)) => writeln!(f, "{} {} {}", self.m, l, k),
        }
    }
}
