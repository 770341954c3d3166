//! Brute-force minimum distance of small linear codes and the exact
//! rate/distance table for CAP and GAP codes.

use itertools::Itertools;
use num_rational::Ratio;
use serde::Serialize;

use crate::cap::CapCode;
use crate::combin::binom;
use crate::ffield::{FieldElement, PrimeField};
use crate::gap::GapCode;
use crate::linalg::{null_space, rank_mod_p};
use crate::poly::{monomials_up_to, MultiPoly};

/// Rows are the encodings of the monomials of degree at most `d`.
pub fn cap_generator(code: &CapCode) -> Vec<Vec<FieldElement>> {
    monomials_up_to(code.nvars(), code.degree())
        .iter()
        .map(|e| code.encode(&MultiPoly::monomial(code.field().one(), e)).expect("degree within bound"))
        .collect()
}

pub fn gap_generator(code: &GapCode) -> Vec<Vec<FieldElement>> {
    monomials_up_to(code.nvars(), code.degree())
        .iter()
        .map(|e| code.encode(&MultiPoly::monomial(code.field().one(), e)).expect("degree within bound"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    /// A codeword of that weight.
    pub witness: Vec<FieldElement>,
}

fn column_rank(g: &[Vec<FieldElement>], cols: &[usize], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = cols.iter().map(|&c| g.iter().map(|r| r[c].value()).collect()).collect();
    rank_mod_p(&mut rows, p)
}

/// Minimum weight of the code spanned by the rows of `g` (which must be
/// linearly independent), via the largest set of coordinates on which some
/// nonzero codeword vanishes: those are the column sets of rank below `k`.
pub fn min_weight_support_rank(field: PrimeField, g: &[Vec<FieldElement>]) -> MinWeight {
    let k = g.len();
    let n = g.first().map_or(0, |r| r.len());
    assert!(k > 0 && column_rank(g, &(0..n).collect::<Vec<_>>(), field.p()) == k, "rows must be independent");
    // deficiency is inherited by subsets, so grow the size until none is deficient
    let mut best: Vec<usize> = (0..k - 1).collect();
    for s in k..=n {
        match (0..n).combinations(s).find(|z| column_rank(g, z, field.p()) < k) {
            Some(z) => best = z,
            None => break,
        }
    }
    let a: Vec<Vec<FieldElement>> = best.iter().map(|&c| g.iter().map(|r| r[c]).collect()).collect();
    let x = if a.is_empty() {
        let mut e = vec![field.zero(); k];
        e[0] = field.one();
        e
    } else {
        null_space(&a, k, field).into_iter().next().expect("deficient column set has a kernel")
    };
    let witness: Vec<FieldElement> =
        (0..n).map(|c| x.iter().zip(g).fold(field.zero(), |acc, (&xi, row)| acc + xi * row[c])).collect();
    let weight = witness.iter().filter(|v| !v.is_zero()).count();
    MinWeight { weight, witness }
}

/// Minimum weight over all `p^k - 1` nonzero messages, or `None` above `limit`.
pub fn min_weight_enumeration(field: PrimeField, g: &[Vec<FieldElement>], limit: u64) -> Option<usize> {
    let p = field.p();
    let k = g.len();
    let n = g.first().map_or(0, |r| r.len());
    let total = p.checked_pow(k as u32).filter(|&t| t <= limit)?;
    let mut acc = vec![field.zero(); n];
    let mut digits = vec![0u64; k];
    let mut best = usize::MAX;
    for _ in 1..total {
        let mut j = k;
        loop {
            j -= 1;
            for (a, &c) in acc.iter_mut().zip(&g[j]) {
                *a += c;
            }
            digits[j] += 1;
            if digits[j] < p {
                break;
            }
            digits[j] = 0;
        }
        best = best.min(acc.iter().filter(|v| !v.is_zero()).count());
    }
    Some(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeFamily {
    Cap,
    Gap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RateRow {
    pub family: CodeFamily,
    pub m: usize,
    pub eps: Ratio<u64>,
    pub d: u64,
    /// `l` for CAP, `t` for GAP.
    pub size_param: u64,
    pub length: u64,
    pub dimension: u64,
    pub distance: u64,
    pub rate: Ratio<u64>,
    pub delta: Ratio<u64>,
    /// Reed-Muller rate `(1 - delta)^m / m!` at the same relative distance.
    pub rm_rate: Ratio<u64>,
}

impl RateRow {
    /// `R >= (1/(1+eps))^m` and `delta >= (eps/(1+eps))^m`.
    pub fn meets_bounds(&self) -> bool {
        let one = Ratio::from_integer(1u64);
        let r0 = (one / (one + self.eps)).pow(self.m as i32);
        let d0 = (self.eps / (one + self.eps)).pow(self.m as i32);
        self.rate >= r0 && self.delta >= d0
    }

    pub fn beats_rm_ceiling(&self) -> bool {
        self.rate > rm_ceiling(self.m)
    }
}

/// `1/m!`, the rate ceiling of Reed-Muller grid codes.
pub fn rm_ceiling(m: usize) -> Ratio<u64> {
    Ratio::new(1, (1..=m as u64).product())
}

/// Rows for `l = d + eps d` (CAP) and `t = m + d + eps d` (GAP). Pairs where
/// `eps d` is not an integer are skipped.
pub fn rate_frontier(ms: &[usize], eps: &[Ratio<u64>], ds: &[u64]) -> Vec<RateRow> {
    let mut rows = Vec::new();
    for &m in ms {
        let mu = m as u64;
        for &e in eps {
            for &d in ds {
                let ed = e * Ratio::from_integer(d);
                if !ed.is_integer() || d == 0 {
                    continue;
                }
                let ed = ed.to_integer();
                let dim = binom(d + mu, mu);
                let l = d + ed;
                let t = mu + d + ed;
                for (family, size_param, length, distance) in [
                    (CodeFamily::Cap, l, binom(l + mu - 1, mu), binom(l - d + mu - 1, mu)),
                    (CodeFamily::Gap, t, binom(t, mu), binom(t - d, mu)),
                ] {
                    let delta = Ratio::new(distance, length);
                    let one = Ratio::from_integer(1u64);
                    rows.push(RateRow {
                        family,
                        m,
                        eps: e,
                        d,
                        size_param,
                        length,
                        dimension: dim,
                        distance,
                        rate: Ratio::new(dim, length),
                        delta,
                        rm_rate: (one - delta).pow(m as i32) * rm_ceiling(m),
                    });
                }
            }
        }
    }
    rows
}

/// CSV with exact fractions and decimal approximations.
pub fn frontier_csv(rows: &[RateRow]) -> String {
    let mut out = String::from("family,m,eps,d,l_or_t,n,k,dist,rate,delta,rate_f,delta_f,rm_grid_rate,rm_ceiling,beats_ceiling\n");
    let f = |r: Ratio<u64>| *r.numer() as f64 / *r.denom() as f64;
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{:.4},{:.4},{:.4},{},{}\n",
            match r.family {
                CodeFamily::Cap => "cap",
                CodeFamily::Gap => "gap",
            },
            r.m,
            r.eps,
            r.d,
            r.size_param,
            r.length,
            r.dimension,
            r.distance,
            r.rate,
            r.delta,
            f(r.rate),
            f(r.delta),
            f(r.rm_rate),
            rm_ceiling(r.m),
            r.beats_rm_ceiling()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rs::RsCode;

    #[test]
    fn rs_is_mds() {
        let f = PrimeField::new(7).unwrap();
        let pts: Vec<_> = (0..6).map(|v| f.elem(v)).collect();
        let rs = RsCode::new(f, 2, pts).unwrap();
        let g: Vec<Vec<_>> = (0..3)
            .map(|i| {
                let mut c = vec![0; i + 1];
                c[i] = 1;
                rs.encode(&crate::poly::UniPoly::from_values(f, &c)).unwrap()
            })
            .collect();
        let mw = min_weight_support_rank(f, &g);
        assert_eq!(mw.weight, 4);
        assert_eq!(min_weight_enumeration(f, &g, 1_000_000), Some(4));
    }

    #[test]
    fn repetition_and_full_space() {
        let f = PrimeField::new(3).unwrap();
        let rep = vec![vec![f.one(); 5]];
        assert_eq!(min_weight_support_rank(f, &rep).weight, 5);
        let id: Vec<Vec<_>> = (0..3).map(|i| (0..3).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect();
        assert_eq!(min_weight_support_rank(f, &id).weight, 1);
        assert_eq!(min_weight_enumeration(f, &id, 100), Some(1));
    }

    #[test]
    fn small_cap_distance() {
        let c = CapCode::with_default_labels(PrimeField::new(7).unwrap(), 2, 1, 4).unwrap();
        let g = cap_generator(&c);
        assert_eq!(min_weight_support_rank(c.field(), &g).weight, 6);
    }

    #[test]
    fn frontier_rows() {
        let rows = rate_frontier(&[2, 3], &[Ratio::new(1, 4)], &[4, 8]);
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(RateRow::meets_bounds));
        // m = 2, d = 4, l = 5: k = 15, n = 15, so rate 1
        assert_eq!(rows[0].rate, Ratio::from_integer(1));
        assert!(rows.iter().all(RateRow::beats_rm_ceiling));
        assert!(frontier_csv(&rows).lines().count() == 9);
    }
}
