//! Dense linear algebra over `F_p` and fraction-free kernels over exact rings.

use crate::ffield::{mul_mod, sub_mod, FieldElement, PrimeField};
use crate::poly::{poly_divide, MultiPoly};

/// A commutative ring in which exact division can be carried out.
pub trait ExactRing: Clone {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self {
        self.zero_like().sub(self)
    }
    /// `self / o` when `o` divides `self`.
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

impl ExactRing for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn mul(&self, o: &Self) -> Self {
        *self * *o
    }
    fn sub(&self, o: &Self) -> Self {
        *self - *o
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.checked_div(*o).ok()
    }
}

impl ExactRing for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.field(), self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.field(), self.nvars())
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        poly_divide(self, o).ok().flatten()
    }
}

/// Row echelon form by Bareiss fraction-free elimination.
///
/// Returns the reduced rows and the pivot column of each nonzero row. Every
/// entry stays in the ring: after `k` pivots, entries are `(k+1) x (k+1)`
/// minors of the input, and the last pivot is the determinant of the pivot
/// minor up to sign.
pub fn bareiss_echelon<R: ExactRing>(rows: &[Vec<R>]) -> (Vec<Vec<R>>, Vec<usize>) {
    let mut a: Vec<Vec<R>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    if nrows == 0 || ncols == 0 {
        return (a, pivots);
    }
    let mut prev = a[0][0].one_like();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let num = prow[c].mul(&row[j]).sub(&lead.mul(&prow[j]));
                row[j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            row[c] = lead.zero_like();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A nonzero kernel vector, or `None` when the columns are independent.
///
/// The first free column receives the determinant of the pivot minor and the
/// pivot coordinates follow by back substitution with exact divisions (they
/// are the Cramer numerators, hence ring elements). Other free columns are 0.
pub fn kernel_vector<R: ExactRing>(rows: &[Vec<R>]) -> Option<Vec<R>> {
    let ncols = rows.first().map(|r| r.len())?;
    let (u, pivots) = bareiss_echelon(rows);
    if pivots.len() == ncols {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c)).expect("a free column exists");
    let zero = rows[0][0].zero_like();
    let scale = match pivots.last() {
        Some(&c) => u[pivots.len() - 1][c].clone(),
        None => zero.one_like(),
    };
    let mut x = vec![zero.clone(); ncols];
    x[free] = scale.clone();
    for k in (0..pivots.len()).rev() {
        let row = &u[k];
        let mut acc = row[free].mul(&scale);
        for &c in &pivots[k + 1..] {
            acc = acc.sub(&row[c].neg().mul(&x[c]));
        }
        x[pivots[k]] = acc.neg().div_exact(&row[pivots[k]]).expect("back substitution divides exactly");
    }
    Some(x)
}

/// Rank of a matrix with entries reduced mod `p`; the rows are overwritten.
pub fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let f = PrimeField::new(p).expect("prime modulus");
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.elem(rows[r][c]).inv().expect("nonzero pivot").value();
        for j in c..ncols {
            rows[r][j] = mul_mod(rows[r][j], inv, p);
        }
        let (top, rest) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c];
            if lead != 0 {
                for j in c..ncols {
                    row[j] = sub_mod(row[j], mul_mod(lead, prow[j], p), p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Unique solution of the square system `a x = b`, or `None` if `a` is singular.
pub fn solve(a: &[Vec<FieldElement>], b: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<FieldElement>> =
        a.iter().zip(b).map(|(row, &bi)| {
            assert_eq!(row.len(), n, "square system");
            let mut r = row.clone();
            r.push(bi);
            r
        }).collect();
    for c in 0..n {
        let pr = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, pr);
        let inv = m[c][c].inv().ok()?;
        for j in c..=n {
            m[c][j] *= inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let lead = m[i][c];
                for j in c..=n {
                    let v = m[c][j];
                    m[i][j] -= lead * v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n]).collect())
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(a: &[Vec<FieldElement>]) -> Option<Vec<Vec<FieldElement>>> {
    let n = a.len();
    let f = a.first()?.first()?.field();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<FieldElement> = (0..n).map(|i| if i == k { f.one() } else { f.zero() }).collect();
        cols.push(solve(a, &e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect())
}

/// Basis of the right null space of `a` (rows of length `ncols`).
pub fn null_space(a: &[Vec<FieldElement>], ncols: usize, f: PrimeField) -> Vec<Vec<FieldElement>> {
    let mut m: Vec<Vec<FieldElement>> = a.to_vec();
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in 0..ncols {
            m[r][j] *= inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let lead = m[i][c];
                for j in 0..ncols {
                    let v = m[r][j];
                    m[i][j] -= lead * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (k, &c) in pivots.iter().enumerate() {
            v[c] = -m[k][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fl(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mat_vec<R: ExactRing>(m: &[Vec<R>], v: &[R]) -> Vec<R> {
        m.iter()
            .map(|row| {
                row.iter().zip(v).fold(v[0].zero_like(), |acc, (a, b)| {
                    acc.sub(&a.mul(b).neg())
                })
            })
            .collect()
    }

    #[test]
    fn polynomial_kernel_examples() {
        let f = fl(7);
        let x = MultiPoly::var(f, 1, 0);
        let m = vec![vec![x.clone(), x.clone()], vec![x.clone(), x.clone()]];
        let v = kernel_vector(&m).unwrap();
        assert!(mat_vec(&m, &v).iter().all(|e| e.is_zero()));
        assert_eq!(poly_divide(&v[0], &v[1]).unwrap(), Some(MultiPoly::constant(-f.one(), 1)));
        let one = MultiPoly::one(f, 1);
        let zero = MultiPoly::zero(f, 1);
        let id = vec![vec![one.clone(), zero.clone()], vec![zero, one]];
        assert!(kernel_vector(&id).is_none());
    }

    #[test]
    fn rank_and_solve() {
        let mut m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_mod_p(&mut m, 7), 2);
        let f = fl(7);
        let e = |r: &[u64]| r.iter().map(|&v| f.elem(v)).collect::<Vec<_>>();
        let a = vec![e(&[1, 1]), e(&[1, 6])];
        let x = solve(&a, &e(&[3, 6])).unwrap();
        assert_eq!(x, e(&[1, 2]));
        assert!(solve(&[e(&[1, 2]), e(&[2, 4])], &e(&[0, 0])).is_none());
        let inv = invert(&a).unwrap();
        assert_eq!(solve(&inv, &e(&[1, 2])).unwrap(), e(&[3, 6]));
    }

    fn arb_linear(p: u64) -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(0..p, 3).prop_map(move |c| {
            let f = PrimeField::new(p).unwrap();
            MultiPoly::from_terms(
                f,
                2,
                [(vec![0, 0], f.elem(c[0])), (vec![1, 0], f.elem(c[1])), (vec![0, 1], f.elem(c[2]))],
            )
        })
    }

    proptest! {
        #[test]
        fn rank_deficient_polynomial_kernel(
            a in proptest::collection::vec(arb_linear(5), 6),
            mix in proptest::collection::vec(0u64..5, 2),
        ) {
            // Third row is a combination of the first two.
            let f = fl(5);
            let r0 = a[0..3].to_vec();
            let r1 = a[3..6].to_vec();
            let r2: Vec<MultiPoly> = r0.iter().zip(&r1)
                .map(|(x, y)| &x.scale(f.elem(mix[0])) + &y.scale(f.elem(mix[1])))
                .collect();
            let m = vec![r0, r1, r2];
            let v = kernel_vector(&m).expect("rank deficient");
            prop_assert!(v.iter().any(|e| !e.is_zero()));
            prop_assert!(mat_vec(&m, &v).iter().all(|e| e.is_zero()));
            prop_assert!(v.iter().all(|e| e.degree() <= 3));
        }

        #[test]
        fn rectangular_field_kernel(entries in proptest::collection::vec(0u64..11, 12)) {
            let f = fl(11);
            let m: Vec<Vec<FieldElement>> = entries.chunks(4).map(|r| r.iter().map(|&v| f.elem(v)).collect()).collect();
            let v = kernel_vector(&m).expect("3x4 always has a kernel");
            prop_assert!(v.iter().any(|e| !e.is_zero()));
            prop_assert!(mat_vec(&m, &v).iter().all(|e| e.is_zero()));
            let ns = null_space(&m, 4, f);
            prop_assert!(!ns.is_empty());
            for b in ns {
                prop_assert!(mat_vec(&m, &b).iter().all(|e| e.is_zero()));
            }
        }
    }
}
