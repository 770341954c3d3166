//! Small counting helpers.

/// `binom(n, k)`, zero when `k > n`. Panics on overflow.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Number of points of `Simplex(m, l)`, i.e. `binom(l + m - 1, m)`, or 0 when `l <= 0`.
pub fn simplex_size(m: usize, l: i64) -> u64 {
    if l <= 0 {
        0
    } else {
        binom(l as u64 + m as u64 - 1, m as u64)
    }
}

/// Vectors of `m` non-negative integers summing to `d`, in ascending lexicographic order.
pub fn compositions(m: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=d {
            prefix.push(a);
            rec(m - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, d, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Points of `{x in N^m : x_1 + ... + x_m < l}` in lexicographic order.
pub fn simplex_points(m: usize, l: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        for a in 0..budget {
            prefix.push(a);
            rec(m - 1, budget - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if l > 0 {
        rec(m, l, &mut Vec::with_capacity(m), &mut out);
    }
    out
}
