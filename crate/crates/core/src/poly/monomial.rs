//! Exponent vectors packed into a single `u64`.
//!
//! The top byte holds the total degree and byte `6 - i` holds the exponent of
//! variable `i`, so integer comparison of the packed words is exactly the
//! graded lexicographic order: total degree first, then the exponent of `X1`,
//! then `X2`, and so on.

use std::fmt;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 7;
/// Largest supported total degree.
pub const MAX_DEGREE: u32 = 255;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u64);

const DEG_SHIFT: u32 = 56;

fn shift(i: usize) -> u32 {
    8 * (6 - i as u32)
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// Panics if there are more than [`MAX_VARS`] variables or the degree exceeds [`MAX_DEGREE`].
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        let deg: u32 = exps.iter().sum();
        assert!(deg <= MAX_DEGREE, "total degree {deg} exceeds {MAX_DEGREE}");
        let mut w = (deg as u64) << DEG_SHIFT;
        for (i, &e) in exps.iter().enumerate() {
            w |= (e as u64) << shift(i);
        }
        Monomial(w)
    }

    /// `X_i^e`.
    pub fn var(i: usize, e: u32) -> Self {
        assert!(i < MAX_VARS && e <= MAX_DEGREE);
        Monomial(((e as u64) << DEG_SHIFT) | ((e as u64) << shift(i)))
    }

    pub fn degree(&self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn exp(&self, i: usize) -> u32 {
        ((self.0 >> shift(i)) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        assert!(
            self.degree() + o.degree() <= MAX_DEGREE,
            "total degree exceeds {MAX_DEGREE}"
        );
        Monomial(self.0 + o.0)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        (0..8).all(|b| (self.0 >> (8 * b)) & 0xff <= (o.0 >> (8 * b)) & 0xff)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        debug_assert!(self.divides(o));
        Monomial(o.0 - self.0)
    }

    /// This monomial with variable `i` removed and later variables shifted down.
    pub(crate) fn drop_var(&self, i: usize, nvars: usize) -> Monomial {
        let mut e = self.exponents(nvars);
        e.remove(i);
        Monomial::new(&e)
    }

    /// Exponent vector as text, e.g. `[1,0,2]`.
    pub fn display(&self, nvars: usize) -> impl fmt::Display {
        let e = self.exponents(nvars);
        DisplayExps(e)
    }
}

struct DisplayExps(Vec<u32>);

impl fmt::Display for DisplayExps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Immediate predecessor of `v` in graded lexicographic order, or `None` for the zero vector.
pub fn graded_lex_prev(v: &[u32]) -> Option<Vec<u32>> {
    let n = v.len();
    let k: u32 = v.iter().sum();
    if k == 0 {
        return None;
    }
    // Rightmost position (excluding the last) that can still be decreased.
    match (0..n.saturating_sub(1)).rev().find(|&j| v[j] > 0) {
        Some(j) => {
            let mut w = v.to_vec();
            let tail = v[n - 1];
            w[j] -= 1;
            for x in w.iter_mut().skip(j + 1) {
                *x = 0;
            }
            w[j + 1] = tail + 1;
            Some(w)
        }
        None => {
            let mut w = vec![0; n];
            w[0] = k - 1;
            Some(w)
        }
    }
}

/// All exponent vectors in `nvars` variables of total degree at most `d`, ascending.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if nvars == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut v = vec![0u32; nvars];
    v[0] = d;
    out.push(v.clone());
    while let Some(w) = graded_lex_prev(&v) {
        out.push(w.clone());
        v = w;
    }
    out.reverse();
    out
}
