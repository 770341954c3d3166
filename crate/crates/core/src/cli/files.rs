//! Line-oriented file formats. Every file starts with `key value...` header
//! lines, then a `data` line, then records. `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use itertools::Itertools;

use crate::cap::CapCode;
use crate::ffield::{FieldElement, PrimeField};
use crate::gap::{vandermonde_family, GapCode, HyperplaneFamily, Provenance};
use crate::poly::{AffineForm, MultiPoly};
use crate::rs::Symbol;

/// Evaluation code on the full grid `{0, ..., l-1}^m`.
#[derive(Debug, Clone)]
pub struct GridCode {
    pub field: PrimeField,
    pub m: usize,
    pub d: u32,
    pub l: u32,
    pub points: Vec<Vec<u32>>,
}

impl GridCode {
    pub fn new(field: PrimeField, m: usize, d: u32, l: u32) -> Result<Self> {
        if m == 0 || l as u64 > field.p() || d >= l {
            bail!("grid code needs m >= 1, d < l <= p");
        }
        let points = (0..m).map(|_| 0..l).multi_cartesian_product().collect();
        Ok(Self { field, m, d, l, points })
    }

    pub fn encode(&self, f: &MultiPoly) -> Vec<FieldElement> {
        self.points.iter().map(|x| f.eval(&x.iter().map(|&v| self.field.elem(v as u64)).collect::<Vec<_>>())).collect()
    }

    /// `(l - d) l^(m-1)`.
    pub fn design_distance(&self) -> usize {
        ((self.l - self.d) as usize) * (self.l as usize).pow(self.m as u32 - 1)
    }
}

#[derive(Debug, Clone)]
pub enum Code {
    Cap(CapCode),
    Gap(GapCode),
    Grid(GridCode),
}

impl Code {
    pub fn field(&self) -> PrimeField {
        match self {
            Code::Cap(c) => c.field(),
            Code::Gap(c) => c.field(),
            Code::Grid(c) => c.field,
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            Code::Cap(c) => c.nvars(),
            Code::Gap(c) => c.nvars(),
            Code::Grid(c) => c.m,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Code::Cap(c) => c.degree(),
            Code::Gap(c) => c.degree(),
            Code::Grid(c) => c.d,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Code::Cap(c) => c.len(),
            Code::Gap(c) => c.len(),
            Code::Grid(c) => c.points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn design_distance(&self) -> usize {
        match self {
            Code::Cap(c) => c.design_distance(),
            Code::Gap(c) => c.design_distance(),
            Code::Grid(c) => c.design_distance(),
        }
    }

    /// Coordinates written in front of each value: simplex points, hyperplane
    /// index subsets or grid points.
    pub fn keys(&self) -> Vec<Vec<usize>> {
        match self {
            Code::Cap(c) => c.points().iter().map(|x| x.iter().map(|&v| v as usize).collect()).collect(),
            Code::Gap(c) => c.family().point_subsets().to_vec(),
            Code::Grid(c) => c.points.iter().map(|x| x.iter().map(|&v| v as usize).collect()).collect(),
        }
    }

    /// Rejects any monomial above the degree bound, naming it.
    pub fn encode(&self, f: &MultiPoly) -> Result<Vec<FieldElement>> {
        if f.nvars() != self.nvars() {
            bail!("message has {} variables, code has {}", f.nvars(), self.nvars());
        }
        if let Some((mono, _)) = f.terms().find(|(mono, _)| mono.degree() > self.degree()) {
            bail!(
                "monomial {} has degree {} > d = {}",
                MultiPoly::monomial(self.field().one(), &mono.exponents(self.nvars())),
                mono.degree(),
                self.degree()
            );
        }
        Ok(match self {
            Code::Cap(c) => c.encode(f)?,
            Code::Gap(c) => c.encode(f)?,
            Code::Grid(c) => c.encode(f),
        })
    }

    pub fn decode(&self, r: &[Symbol<FieldElement>]) -> Result<Option<MultiPoly>> {
        Ok(match self {
            Code::Cap(c) => c.decode(r)?,
            Code::Gap(c) => crate::gap::decode_multivariate_geometric(c, r)?,
            Code::Grid(_) => bail!("no decoder for grid codes"),
        })
    }

    pub fn header(&self) -> String {
        let mut h = String::new();
        let f = self.field();
        match self {
            Code::Cap(c) => {
                let labels: Vec<String> = c.labels().iter().map(|a| a.value().to_string()).collect();
                let _ = write!(h, "code cap\np {}\nm {}\nd {}\nl {}\nlabels {}\n", f.p(), c.nvars(), c.degree(), c.side(), labels.join(" "));
            }
            Code::Gap(c) => {
                let fam = c.family();
                let _ = write!(h, "code gap\np {}\nm {}\nd {}\nt {}\n", f.p(), c.nvars(), c.degree(), fam.len());
                match fam.provenance() {
                    Provenance::Vandermonde(a) => {
                        let a: Vec<String> = a.iter().map(|v| v.value().to_string()).collect();
                        let _ = writeln!(h, "alphas {}", a.join(" "));
                    }
                    Provenance::Explicit => {
                        for form in fam.forms() {
                            let cs: Vec<String> = form.coeffs().iter().map(|v| v.value().to_string()).collect();
                            let _ = writeln!(h, "form {} {}", form.constant().value(), cs.join(" "));
                        }
                    }
                }
            }
            Code::Grid(c) => {
                let _ = write!(h, "code rm-grid\np {}\nm {}\nd {}\nl {}\n", f.p(), c.m, c.d, c.l);
            }
        }
        h
    }
}

/// Header key/value pairs plus data records, comments stripped.
#[derive(Debug, Default)]
pub struct Parsed {
    pub header: Vec<(String, Vec<String>)>,
    pub records: Vec<Vec<String>>,
}

impl Parsed {
    pub fn get(&self, key: &str) -> Option<&[String]> {
        self.header.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_slice())
    }

    pub fn all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a [String]> + 'a {
        self.header.iter().filter(move |(k, _)| k == key).map(|(_, v)| v.as_slice())
    }

    pub fn scalar<T: std::str::FromStr>(&self, key: &str) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        let v = self.get(key).and_then(|v| v.first()).ok_or_else(|| anyhow!("missing header field `{key}`"))?;
        v.parse().map_err(|e| anyhow!("bad value for `{key}`: {e}"))
    }
}

pub fn parse(text: &str) -> Parsed {
    let mut out = Parsed::default();
    let mut in_data = false;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if in_data {
            out.records.push(toks);
        } else if toks[0] == "data" {
            in_data = true;
        } else {
            out.header.push((toks[0].clone(), toks[1..].to_vec()));
        }
    }
    out
}

fn nums(v: &[String]) -> Result<Vec<u64>> {
    v.iter().map(|s| s.parse::<u64>().with_context(|| format!("not a number: {s}"))).collect()
}

/// Builds the code described by a header.
pub fn code_from_header(h: &Parsed) -> Result<Code> {
    let kind: String = h.scalar("code")?;
    let field = PrimeField::new(h.scalar("p")?)?;
    let m: usize = h.scalar("m")?;
    let d: u32 = h.scalar("d")?;
    Ok(match kind.as_str() {
        "cap" => {
            let labels = match h.get("labels") {
                Some(l) => nums(l)?,
                None => (0..h.scalar::<u64>("l")?).collect(),
            };
            Code::Cap(CapCode::new(field, m, d, labels.into_iter().map(|v| field.elem(v)).collect())?)
        }
        "gap" => {
            let fam = if let Some(a) = h.get("alphas") {
                vandermonde_family(&nums(a)?.into_iter().map(|v| field.elem(v)).collect::<Vec<_>>(), m)?
            } else {
                let forms = h
                    .all("form")
                    .map(|v| {
                        let v = nums(v)?;
                        if v.len() != m + 1 {
                            bail!("form needs a constant and {m} coefficients");
                        }
                        Ok(AffineForm::from_values(field, v[0], &v[1..]))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if forms.is_empty() {
                    bail!("gap header needs `alphas` or `form` lines");
                }
                HyperplaneFamily::new(field, m, forms)?
            };
            if let Ok(t) = h.scalar::<usize>("t") {
                if t != fam.len() {
                    bail!("t = {t} but the family has {} hyperplanes", fam.len());
                }
            }
            Code::Gap(GapCode::new(fam, d)?)
        }
        "rm-grid" => Code::Grid(GridCode::new(field, m, d, h.scalar("l")?)?),
        other => bail!("unknown code kind `{other}`"),
    })
}

pub fn write_word(code: &Code, word: &[Symbol<FieldElement>], title: &str) -> String {
    let mut s = format!("# {title}\n{}n {}\ndata\n", code.header(), code.len());
    for (key, sym) in code.keys().iter().zip(word) {
        for k in key {
            let _ = write!(s, "{k} ");
        }
        match sym {
            Symbol::Value(v) => {
                let _ = writeln!(s, "{}", v.value());
            }
            Symbol::Erased => s.push_str("?\n"),
        }
    }
    s
}

pub fn read_word(text: &str) -> Result<(Code, Vec<Symbol<FieldElement>>)> {
    let parsed = parse(text);
    let code = code_from_header(&parsed)?;
    let field = code.field();
    let keys = code.keys();
    let index: HashMap<&[usize], usize> = keys.iter().enumerate().map(|(i, k)| (k.as_slice(), i)).collect();
    let mut word: Vec<Option<Symbol<FieldElement>>> = vec![None; code.len()];
    for rec in &parsed.records {
        let (val, key) = rec.split_last().ok_or_else(|| anyhow!("empty record"))?;
        let key: Vec<usize> = key.iter().map(|s| s.parse()).collect::<Result<_, _>>().context("bad coordinate")?;
        let &i = index.get(key.as_slice()).ok_or_else(|| anyhow!("unknown point {key:?}"))?;
        if word[i].is_some() {
            bail!("point {key:?} listed twice");
        }
        word[i] = Some(if val == "?" {
            Symbol::Erased
        } else {
            let v: u64 = val.parse().with_context(|| format!("bad value `{val}`"))?;
            if v >= field.p() {
                bail!("value {v} is not reduced mod {}", field.p());
            }
            Symbol::Value(field.elem(v))
        });
    }
    let word = word
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| anyhow!("missing point {:?}", keys[i])))
        .collect::<Result<Vec<_>>>()?;
    Ok((code, word))
}

/// Polynomial text; `#` comments and blank lines are ignored.
pub fn read_message(text: &str, field: PrimeField, nvars: usize) -> Result<MultiPoly> {
    let body: Vec<&str> = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).collect();
    if body.is_empty() {
        bail!("empty message file");
    }
    Ok(MultiPoly::parse(field, nvars, &body.join(" "))?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Change {
    Error { index: usize, original: u64, new: u64 },
    Erasure { index: usize, original: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diff {
    pub seed: u64,
    pub length: usize,
    pub changes: Vec<Change>,
}

impl Diff {
    pub fn errors(&self) -> usize {
        self.changes.iter().filter(|c| matches!(c, Change::Error { .. })).count()
    }

    pub fn erasures(&self) -> usize {
        self.changes.len() - self.errors()
    }

    pub fn weight(&self) -> usize {
        2 * self.errors() + self.erasures()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "# channel pattern\nseed {}\nlength {}\nerrors {}\nerasures {}\nweight {}\ndata\n",
            self.seed,
            self.length,
            self.errors(),
            self.erasures(),
            self.weight()
        );
        for c in &self.changes {
            let _ = match c {
                Change::Error { index, original, new } => writeln!(s, "{index} error {original} {new}"),
                Change::Erasure { index, original } => writeln!(s, "{index} erasure {original}"),
            };
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let p = parse(text);
        let changes = p
            .records
            .iter()
            .map(|r| {
                let n = |i: usize| -> Result<u64> {
                    r.get(i).ok_or_else(|| anyhow!("short diff record"))?.parse().context("bad diff record")
                };
                Ok(match r.get(1).map(String::as_str) {
                    Some("error") => Change::Error { index: n(0)? as usize, original: n(2)?, new: n(3)? },
                    Some("erasure") => Change::Erasure { index: n(0)? as usize, original: n(2)? },
                    _ => bail!("bad diff record {r:?}"),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { seed: p.scalar("seed")?, length: p.scalar("length")?, changes })
    }

    /// The transmitted word, recovered from the received one.
    pub fn original(&self, received: &[Symbol<FieldElement>], field: PrimeField) -> Result<Vec<FieldElement>> {
        if received.len() != self.length {
            bail!("diff is for length {}, word has {}", self.length, received.len());
        }
        let mut w: Vec<Option<FieldElement>> = received.iter().map(|s| s.value().copied()).collect();
        for c in &self.changes {
            let (i, o) = match *c {
                Change::Error { index, original, .. } | Change::Erasure { index, original } => (index, original),
            };
            *w.get_mut(i).ok_or_else(|| anyhow!("diff index {i} out of range"))? = Some(field.elem(o));
        }
        w.into_iter().map(|v| v.ok_or_else(|| anyhow!("erasure not recorded in diff"))).collect()
    }
}
