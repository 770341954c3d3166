//! End-to-end acceptance checks, one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_rational::Ratio;
use polycodes::cap::CapCode;
use polycodes::ffield::{FieldElement, PrimeField};
use polycodes::gap::{decode_multivariate_geometric, vandermonde_family, GapCode, HyperplaneFamily};
use polycodes::gmd::{gmd_decode, ConcatenationSpec, InnerBlock, InnerDecoding, OuterDecoding};
use polycodes::ltc::{
    divisibility_experiment, line_point_test, local_characterization_check, plane_point_test, tight_example,
    Characterization, LinePolySystem, TestMode,
};
use polycodes::oracle::{cap_generator, gap_generator, min_weight_enumeration, min_weight_support_rank, rate_frontier, rm_ceiling};
use polycodes::poly::{monomials_up_to, AffineForm, MultiPoly, UniPoly};
use polycodes::rs::{RsCode, Symbol};
use polycodes::shapes::{make_grid, make_simplex, make_step, min_nonzeros_bruteforce, robustness, Shape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn random_poly(f: PrimeField, m: usize, d: u32, rng: &mut ChaCha8Rng) -> MultiPoly {
    MultiPoly::from_terms(f, m, monomials_up_to(m, d).into_iter().map(|e| (e, f.elem(rng.gen_range(0..f.p())))))
}

/// Adds random forms one at a time, keeping those that preserve general position.
fn random_family(f: PrimeField, m: usize, t: usize, rng: &mut ChaCha8Rng) -> Option<HyperplaneFamily> {
    let mut forms: Vec<AffineForm> = Vec::with_capacity(t);
    let mut fam = None;
    for _ in 0..t {
        let next = (0..500).find_map(|_| {
            let form = AffineForm::new(f.elem(rng.gen_range(0..f.p())), (0..m).map(|_| f.elem(rng.gen_range(0..f.p()))).collect());
            let mut trial = forms.clone();
            trial.push(form.clone());
            if trial.len() < m {
                // fewer than m forms meet in no point yet
                return Some((form, None));
            }
            HyperplaneFamily::new(f, m, trial).ok().map(|h| (form, Some(h)))
        })?;
        forms.push(next.0);
        fam = next.1;
    }
    fam
}

fn vand(f: PrimeField, m: usize, t: usize) -> HyperplaneFamily {
    let alphas: Vec<FieldElement> = (0..t as u64).map(|a| f.elem(a)).collect();
    vandermonde_family(&alphas, m).unwrap()
}

/// Position states of a pattern: 0 intact, 1 error, 2 erasure.
fn for_each_pattern(n: usize, bound: usize, visit: &mut impl FnMut(&[u8])) {
    fn rec(i: usize, w: usize, bound: usize, st: &mut Vec<u8>, visit: &mut impl FnMut(&[u8])) {
        if i == st.len() {
            visit(st);
            return;
        }
        for (s, cost) in [(0u8, 0usize), (1, 2), (2, 1)] {
            if w + cost < bound {
                st[i] = s;
                rec(i + 1, w + cost, bound, st, visit);
            }
        }
        st[i] = 0;
    }
    rec(0, 0, bound, &mut vec![0; n], visit);
}

fn corrupt(word: &[FieldElement], states: &[u8], f: PrimeField, rng: &mut ChaCha8Rng) -> Vec<Symbol<FieldElement>> {
    word.iter()
        .zip(states)
        .map(|(&v, &s)| match s {
            0 => Symbol::Value(v),
            1 => Symbol::Value(v + f.elem(rng.gen_range(1..f.p()))),
            _ => Symbol::Erased,
        })
        .collect()
}

fn random_states(n: usize, w: usize, rng: &mut ChaCha8Rng) -> Vec<u8> {
    let lo = w.saturating_sub(n);
    let e = rng.gen_range(lo..=w / 2);
    let s = w - 2 * e;
    let mut st = vec![0u8; n];
    for (k, i) in rand::seq::index::sample(rng, n, e + s).into_iter().enumerate() {
        st[i] = if k < e { 1 } else { 2 };
    }
    st
}

fn c1_cap_distance() -> Outcome {
    let mut checked = 0;
    for p in [2, 3, 5, 7] {
        let f = fp(p);
        for m in 1..=3usize {
            for l in 1..=p as u32 {
                if binom(l as u64 + m as u64 - 1, m as u64) > 20 {
                    continue;
                }
                for d in 0..l {
                    let code = CapCode::with_default_labels(f, m, d, l).unwrap();
                    let g = cap_generator(&code);
                    let expected = binom((l - d) as u64 + m as u64 - 1, m as u64) as usize;
                    let mw = min_weight_support_rank(f, &g);
                    ensure!(mw.weight == expected, "CAP m={m} d={d} l={l} p={p}: min weight {} != {expected}", mw.weight);
                    if let Some(w) = min_weight_enumeration(f, &g, 200_000) {
                        ensure!(w == expected, "CAP m={m} d={d} l={l} p={p}: enumeration gives {w}");
                    }
                    // prod_{j<d} (X1 - a_j) vanishes exactly where x_1 < d
                    let mut prod = MultiPoly::one(f, m);
                    for j in 0..d as usize {
                        prod = &prod * &(&MultiPoly::var(f, m, 0) - &MultiPoly::constant(code.labels()[j], m));
                    }
                    let nz = code.encode(&prod).unwrap().iter().filter(|v| !v.is_zero()).count();
                    ensure!(nz == expected, "CAP witness has weight {nz}, expected {expected}");
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} codes"))
}

fn c2_gap_distance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for p in [2u64, 3, 5, 7] {
        let f = fp(p);
        for m in 1..=3usize {
            for t in m + 1..=p as usize {
                if binom(t as u64, m as u64) > 20 {
                    continue;
                }
                for d in 0..(t - m) as u32 {
                    let mut fams = vec![vand(f, m, t)];
                    if p == 7 {
                        fams.extend(random_family(f, m, t, &mut rng));
                    }
                    for fam in fams {
                        let code = GapCode::new(fam, d).unwrap();
                        let g = gap_generator(&code);
                        let expected = binom((t as u64) - d as u64, m as u64) as usize;
                        let mw = min_weight_support_rank(f, &g);
                        ensure!(mw.weight == expected, "GAP m={m} d={d} t={t} p={p}: min weight {} != {expected}", mw.weight);
                        if let Some(w) = min_weight_enumeration(f, &g, 200_000) {
                            ensure!(w == expected, "GAP m={m} d={d} t={t} p={p}: enumeration gives {w}");
                        }
                        // product of d of the forms: nonzero exactly off their hyperplanes
                        let prod = code.family().forms()[..d as usize].iter().fold(MultiPoly::one(f, m), |acc, l| &acc * &l.to_poly());
                        let nz = code.encode(&prod).unwrap().iter().filter(|v| !v.is_zero()).count();
                        ensure!(nz == expected, "GAP witness has weight {nz}, expected {expected}");
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} codes"))
}

fn c3_cap_decoding() -> Outcome {
    let mut patterns = 0u64;
    for p in [2u64, 3, 5] {
        let f = fp(p);
        for m in 1..=3usize {
            for l in 1..=p as u32 {
                if binom(l as u64 + m as u64 - 1, m as u64) > 12 {
                    continue;
                }
                for d in 0..l {
                    let code = CapCode::with_default_labels(f, m, d, l).unwrap();
                    let dd = code.design_distance();
                    let mut rng = ChaCha8Rng::seed_from_u64(p * 1000 + m as u64 * 100 + l as u64 * 10 + d as u64);
                    let mut failure = None;
                    for_each_pattern(code.len(), dd, &mut |st| {
                        if failure.is_some() {
                            return;
                        }
                        let msg = random_poly(f, m, d, &mut rng);
                        let r = corrupt(&code.encode(&msg).unwrap(), st, f, &mut rng);
                        patterns += 1;
                        if code.decode(&r).unwrap().as_ref() != Some(&msg) {
                            failure = Some(format!("CAP m={m} d={d} l={l} p={p} pattern {st:?}"));
                        }
                    });
                    if let Some(e) = failure {
                        return Err(e);
                    }
                }
            }
        }
    }
    let f = fp(11);
    let code = CapCode::with_default_labels(f, 3, 2, 5).unwrap();
    let dd = code.design_distance();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for trial in 0..500 {
        let msg = random_poly(f, 3, 2, &mut rng);
        let st = random_states(code.len(), rng.gen_range(0..dd), &mut rng);
        let r = corrupt(&code.encode(&msg).unwrap(), &st, f, &mut rng);
        ensure!(code.decode(&r).unwrap() == Some(msg), "CAP m=3 d=2 l=5 p=11 trial {trial} failed");
    }
    Ok(format!("{patterns} exhaustive patterns, 500 random trials"))
}

/// The geometric decoder for `m >= 2`; a line is a Reed-Solomon code.
fn gap_decode(code: &GapCode, r: &[Symbol<FieldElement>]) -> Option<MultiPoly> {
    if code.nvars() == 1 {
        code.decode(r).unwrap()
    } else {
        decode_multivariate_geometric(code, r).unwrap()
    }
}

fn c4_gap_decoding() -> Outcome {
    let mut patterns = 0u64;
    for p in [2u64, 3, 5] {
        let f = fp(p);
        for m in 1..=3usize {
            for t in m..=p as usize {
                if binom(t as u64, m as u64) > 12 {
                    continue;
                }
                for d in 0..=(t - m) as u32 {
                    let code = GapCode::new(vand(f, m, t), d).unwrap();
                    let dd = code.design_distance();
                    let mut rng = ChaCha8Rng::seed_from_u64(p * 1000 + m as u64 * 100 + t as u64 * 10 + d as u64);
                    let mut failure = None;
                    for_each_pattern(code.len(), dd, &mut |st| {
                        if failure.is_some() {
                            return;
                        }
                        let msg = random_poly(f, m, d, &mut rng);
                        let r = corrupt(&code.encode(&msg).unwrap(), st, f, &mut rng);
                        patterns += 1;
                        if gap_decode(&code, &r).as_ref() != Some(&msg) {
                            failure = Some(format!("GAP m={m} d={d} t={t} p={p} pattern {st:?}"));
                        }
                    });
                    if let Some(e) = failure {
                        return Err(e);
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let f = fp(11);
    let alphas: Vec<FieldElement> = (1..=7).map(|a| f.elem(a)).collect();
    let vcode = GapCode::vandermonde(&alphas, 3, 2).unwrap();
    let f13 = fp(13);
    let rcode = GapCode::new(random_family(f13, 3, 6, &mut rng).unwrap(), 1).unwrap();
    for (code, trials) in [(&vcode, 500), (&rcode, 200)] {
        let f = code.field();
        let dd = code.design_distance();
        for trial in 0..trials {
            let msg = random_poly(f, code.nvars(), code.degree(), &mut rng);
            let st = random_states(code.len(), rng.gen_range(0..dd), &mut rng);
            let r = corrupt(&code.encode(&msg).unwrap(), &st, f, &mut rng);
            ensure!(
                gap_decode(code, &r) == Some(msg),
                "GAP m=3 d={} t={} p={} trial {trial} failed",
                code.degree(),
                code.num_hyperplanes(),
                f.p()
            );
        }
    }
    Ok(format!("{patterns} exhaustive patterns, 700 random trials"))
}

/// Repetition inner codes of lengths `dist` under an outer Reed-Solomon code
/// over F_5 with distance `outer_d`.
fn c5_gmd() -> Outcome {
    let f = fp(5);
    let mut patterns = 0u64;
    let configs: &[&[usize]] = &[&[1], &[2, 3], &[1, 2], &[1, 2, 3], &[2, 1, 3], &[1, 2, 3, 4], &[3, 1, 2, 2], &[4, 4, 1, 2]];
    for &dist in configs {
        let n = dist.len();
        for outer_d in 1..=n {
            let k = n - outer_d + 1;
            let rs = RsCode::new(f, k - 1, (0..n as u64).map(|v| f.elem(v)).collect()).unwrap();
            let inner = dist
                .iter()
                .map(|&d| InnerBlock::<FieldElement, FieldElement> {
                    distance: d,
                    decoder: Box::new(move |b: &[Symbol<FieldElement>]| {
                        let vals: Vec<FieldElement> = b.iter().filter_map(|s| s.value().copied()).collect();
                        let (best, count) = vals
                            .iter()
                            .map(|v| (*v, vals.iter().filter(|u| *u == v).count()))
                            .max_by_key(|&(v, c)| (c, std::cmp::Reverse(v.value())))?;
                        let _ = d;
                        Some(InnerDecoding { symbol: best, disagreements: vals.len() - count })
                    }),
                })
                .collect();
            let rs_ref = &rs;
            let spec = ConcatenationSpec {
                inner,
                outer_distance: outer_d,
                outer: Box::new(move |r: &[Symbol<FieldElement>]| {
                    let g = rs_ref.decode(r)?;
                    Some(OuterDecoding { codeword: rs_ref.encode(&g).unwrap(), message: g })
                }),
            };
            let design = spec.design_distance();
            let mut sorted = dist.to_vec();
            sorted.sort_unstable();
            ensure!(design == sorted[..outer_d].iter().sum::<usize>(), "design distance mismatch");
            let total: usize = dist.iter().sum();
            let mut rng = ChaCha8Rng::seed_from_u64(5 + outer_d as u64 * 17 + total as u64);
            let msg = UniPoly::new(f, (0..k).map(|_| f.elem(rng.gen_range(0..5))).collect());
            let outer_cw = rs.encode(&msg).unwrap();
            let cw: Vec<FieldElement> = outer_cw.iter().zip(dist).flat_map(|(&a, &d)| std::iter::repeat_n(a, d)).collect();
            // colluding errors (all +1) and independent random errors
            for colluding in [true, false] {
                let mut failure = None;
                for_each_pattern(total, design, &mut |st| {
                    if failure.is_some() {
                        return;
                    }
                    let r: Vec<Symbol<FieldElement>> = if colluding {
                        cw.iter()
                            .zip(st)
                            .map(|(&v, &s)| match s {
                                0 => Symbol::Value(v),
                                1 => Symbol::Value(v + f.one()),
                                _ => Symbol::Erased,
                            })
                            .collect()
                    } else {
                        corrupt(&cw, st, f, &mut rng)
                    };
                    let mut blocks = Vec::with_capacity(n);
                    let mut at = 0;
                    for &d in dist {
                        blocks.push(r[at..at + d].to_vec());
                        at += d;
                    }
                    patterns += 1;
                    match gmd_decode(&blocks, &spec) {
                        Some(out) if out.message == msg => {}
                        _ => failure = Some(format!("inner {dist:?}, outer distance {outer_d}, pattern {st:?}")),
                    }
                });
                if let Some(e) = failure {
                    return Err(e);
                }
            }
        }
    }
    Ok(format!("{patterns} patterns"))
}

fn c6_schwartz_zippel() -> Outcome {
    let p = 5;
    let mut checked = 0;
    let mut shapes: Vec<(String, Shape)> = Vec::new();
    for m in 1..=3usize {
        for l in 1..=5u32 {
            shapes.push((format!("grid m={m} l={l}"), make_grid(m, l).unwrap()));
            shapes.push((format!("simplex m={m} l={l}"), make_simplex(m, l).unwrap()));
        }
    }
    for l in [2, 4] {
        shapes.push((format!("step l={l}"), make_step(l).unwrap()));
    }
    for (name, s) in &shapes {
        let m = s.dimension();
        let l = s.side().unwrap() as u64;
        for d in 0u32.. {
            if binom(d as u64 + m as u64, m as u64) > 6 {
                break;
            }
            let r = robustness(s, d);
            let mn = min_nonzeros_bruteforce(m, d, s, p).map_err(|e| e.to_string())?;
            ensure!(mn.count >= r.value, "{name} d={d}: {} nonzeros below robustness {}", mn.count, r.value);
            let dd = d as u64;
            if name.starts_with("grid") {
                ensure!(mn.count == r.value, "{name} d={d}: grid not tight ({} vs {})", mn.count, r.value);
                if dd < l {
                    ensure!(r.relative() == Ratio::new(l - dd, l), "{name} d={d}: relative {}", r.relative());
                }
            } else if name.starts_with("simplex") {
                ensure!(mn.count == r.value, "{name} d={d}: simplex not tight ({} vs {})", mn.count, r.value);
                let closed = if dd < l { binom(m as u64 + l - dd - 1, m as u64) } else { 0 };
                ensure!(r.value as u64 == closed, "{name} d={d}: robustness {} != {closed}", r.value);
            } else if dd < l {
                ensure!(r.relative() >= Ratio::new(2 * (l - dd), 3 * l), "{name} d={d}: relative {}", r.relative());
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (shape, d) pairs"))
}

fn c7_interpolation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = fp(13);
    let mut runs = 0;
    for m in 1..=3usize {
        for d in 0..=3u32 {
            let t = d as usize + m;
            let mut fams = vec![vand(f, m, t)];
            fams.extend(random_family(f, m, t, &mut rng));
            for fam in fams {
                let code = GapCode::new(fam, d).unwrap();
                for _ in 0..100 {
                    let msg = random_poly(f, m, d, &mut rng);
                    let back = code.interpolate(&code.encode(&msg).unwrap()).map_err(|e| e.to_string())?;
                    ensure!(back == msg, "m={m} d={d}: interpolation returned {back}, expected {msg}");
                    runs += 1;
                }
            }
        }
    }
    Ok(format!("{runs} messages"))
}

fn c8_ltc_completeness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let f = fp(13);
    let mut configs = 0;
    for m in 2..=3usize {
        for d in 0..=2u32 {
            for t in d as usize + m..=8 {
                let code = GapCode::new(vand(f, m, t), d).unwrap();
                for _ in 0..50 {
                    let w = code.encode(&random_poly(f, m, d, &mut rng)).unwrap();
                    let a = line_point_test(&code, &w, TestMode::Exact).map_err(|e| e.to_string())?;
                    let b = plane_point_test(&code, &w, TestMode::Exact).map_err(|e| e.to_string())?;
                    ensure!(a.p_reject == 0.0 && b.p_reject == 0.0, "m={m} d={d} t={t}: codeword rejected");
                }
                configs += 1;
            }
        }
    }
    Ok(format!("{configs} configurations x 50 codewords"))
}

fn c9_local_characterization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let f = fp(13);
    let configs = [(2usize, 1u32, 4usize), (2, 2, 5), (2, 2, 6), (3, 1, 5), (3, 2, 6), (3, 1, 6)];
    for trial in 0..100 {
        let (m, d, t) = configs[trial % configs.len()];
        let fam = if trial % 2 == 0 { vand(f, m, t) } else { random_family(f, m, t, &mut rng).unwrap() };
        let code = GapCode::new(fam, d).unwrap();
        let g = random_poly(f, m, d, &mut rng);
        let mut sys = LinePolySystem::from_poly(code.family(), &g).map_err(|e| e.to_string())?;
        match local_characterization_check(&code, &sys).map_err(|e| e.to_string())? {
            Characterization::Global(h) => {
                ensure!(h == g, "trial {trial}: recovered {h}, expected {g}");
                let again = LinePolySystem::from_poly(code.family(), &h).map_err(|e| e.to_string())?;
                ensure!(again == sys, "trial {trial}: restrictions differ");
            }
            other => return Err(format!("trial {trial}: consistent system gave {other:?}")),
        }
        let n = rng.gen_range(0..sys.polys.len());
        sys.polys[n] = &sys.polys[n] + &UniPoly::constant(f.one());
        match local_characterization_check(&code, &sys).map_err(|e| e.to_string())? {
            Characterization::Counterexample { line_a, line_b, .. } => {
                ensure!(line_a == n || line_b == n, "trial {trial}: counterexample misses line {n}")
            }
            other => return Err(format!("trial {trial}: perturbed system gave {other:?}")),
        }
    }
    Ok("100 systems".into())
}

fn c10_divisibility() -> Outcome {
    for (p, d) in [(13, 2), (29, 3)] {
        let (e, q, fam) = tight_example(fp(p), d).map_err(|e| e.to_string())?;
        let r = divisibility_experiment(&e, &q, &fam).map_err(|e| e.to_string())?;
        ensure!(fam.len() == 2 * d as usize, "tight example has {} lines", fam.len());
        ensure!(r.all_restricted, "d={d}: some line restriction not divisible: {:?}", r.restricted);
        ensure!(!r.global, "d={d}: P divisible by E globally");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let f = fp(31);
    let (mut implied, mut trials) = (0, 0);
    for trial in 0..120 {
        let m = 2 + trial % 2;
        let e_deg = 1 + (trial / 2) % 2;
        let q_deg = 1usize;
        let multiple = trial % 3 != 0;
        let e = random_poly(f, m, e_deg as u32, &mut rng);
        if e.degree() != e_deg as u32 {
            continue;
        }
        let p_poly = if multiple { &e * &random_poly(f, m, q_deg as u32, &mut rng) } else { random_poly(f, m, (e_deg + q_deg) as u32, &mut rng) };
        let t = 2 * p_poly.degree() as usize + e_deg + 1;
        let Some(fam) = random_family(f, m, t.max(m + 1), &mut rng) else { continue };
        let r = divisibility_experiment(&e, &p_poly, &fam).map_err(|e| e.to_string())?;
        trials += 1;
        if multiple {
            ensure!(r.all_restricted && r.global, "trial {trial}: multiple of E not detected");
        }
        if r.all_restricted {
            ensure!(r.global, "trial {trial}: all {t} restrictions divisible but P not divisible by E");
            implied += 1;
        }
    }
    Ok(format!("tight examples reproduced; {implied}/{trials} random cases with every restriction divisible, all globally divisible"))
}

fn c11_rate_frontier() -> Outcome {
    let eps = [Ratio::new(1u64, 1), Ratio::new(1, 2), Ratio::new(1, 4)];
    let rows = rate_frontier(&[2, 3], &eps, &[4, 8, 16, 32]);
    let mut beats = [false; 2];
    println!("    family m  eps  d   n      k     rate      delta     rm-grid");
    for r in &rows {
        let m = r.m as u64;
        let e = r.eps * Ratio::from_integer(r.d);
        ensure!(e.is_integer(), "eps d not integral");
        let e = e.to_integer();
        let (n, dist) = match r.family {
            polycodes::oracle::CodeFamily::Cap => (binom(r.d + e + m - 1, m), binom(e + m - 1, m)),
            polycodes::oracle::CodeFamily::Gap => (binom(m + r.d + e, m), binom(m + e, m)),
        };
        let k = binom(r.d + m, m);
        ensure!(r.rate == Ratio::new(k, n) && r.delta == Ratio::new(dist, n), "row {r:?} disagrees with the binomials");
        ensure!(r.meets_bounds(), "row {r:?} below (1/(1+eps))^m or (eps/(1+eps))^m");
        let rf = *r.rate.numer() as f64 / *r.rate.denom() as f64;
        let df = *r.delta.numer() as f64 / *r.delta.denom() as f64;
        ensure!(rf.powf(1.0 / m as f64) + df.powf(1.0 / m as f64) >= 1.0 - 1e-12, "row {r:?}: R^(1/m) + delta^(1/m) < 1");
        ensure!(r.rm_rate < rm_ceiling(r.m), "grid rate not below 1/m!");
        // the lower bound alone already clears 1/m! here
        let bound = (Ratio::from_integer(1u64) / (Ratio::from_integer(1) + r.eps)).pow(r.m as i32);
        if bound > rm_ceiling(r.m) {
            ensure!(r.beats_rm_ceiling(), "row {r:?} does not beat 1/m!");
        }
        if r.beats_rm_ceiling() {
            beats[r.m - 2] = true;
        }
        println!(
            "    {:<6} {} {:>4} {:>3} {:>6} {:>5} {:>9} {:>9} {:.4}",
            format!("{:?}", r.family).to_lowercase(),
            r.m,
            r.eps.to_string(),
            r.d,
            r.length,
            r.dimension,
            r.rate.to_string(),
            r.delta.to_string(),
            *r.rm_rate.numer() as f64 / *r.rm_rate.denom() as f64
        );
    }
    ensure!(beats == [true, true], "no row beats 1/m! for some m");
    Ok(format!("{} rows", rows.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("CAP distance exactness", c1_cap_distance),
        ("GAP distance exactness", c2_gap_distance),
        ("CAP decoding", c3_cap_decoding),
        ("GAP decoding", c4_gap_decoding),
        ("uneven GMD", c5_gmd),
        ("generalized Schwartz-Zippel", c6_schwartz_zippel),
        ("interpolation", c7_interpolation),
        ("local test completeness", c8_ltc_completeness),
        ("local characterization", c9_local_characterization),
        ("divisibility tight example", c10_divisibility),
        ("rate frontier", c11_rate_frontier),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
