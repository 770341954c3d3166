//! Generalized minimum distance decoding of concatenated codes whose inner
//! codes may have different distances.
//!
//! Block `i` is decoded once by its inner decoder, which reports a symbol
//! `a_i` and the number `x_i` of non-erased disagreements with its codeword.
//! With `s_i` erasures in the block, the block's reliability is
//! `w_i = d_i - 2 x_i - s_i`; a failed block counts as `x_i = d_i`. For each
//! distinct reliability `t`, from the highest down, blocks with `w_i < t` are
//! erased and the outer decoder is run. The design distance is the sum of the
//! `D` smallest inner distances, where `D` is the outer distance.
//!
//! A candidate outer codeword `c` is accepted when the lower bound
//!
//! ```text
//! LB(c) = sum_i  d_i - w_i   if block i decoded to c_i
//!                d_i + w_i   if block i decoded to another symbol
//!                d_i         if block i failed
//! ```
//!
//! on the error weight of any concatenated codeword with outer part `c` is
//! below the design distance. The transmitted codeword satisfies
//! `LB <= wt(e)`, and two distinct outer codewords have bounds summing to at
//! least twice the design distance, so at most one candidate can pass. The
//! bound needs only the inner decoder outputs, which matters when the inner
//! codes depend on data the decoder has not recovered yet.

use crate::rs::Symbol;

/// Output of an inner decoder on one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDecoding<A> {
    pub symbol: A,
    /// Non-erased coordinates where the decoded inner codeword differs from the block.
    pub disagreements: usize,
}

/// Output of the outer decoder: the message and its outer codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterDecoding<A, M> {
    pub message: M,
    pub codeword: Vec<A>,
}

pub type InnerDecoder<'a, S, A> = Box<dyn Fn(&[Symbol<S>]) -> Option<InnerDecoding<A>> + 'a>;
pub type OuterDecoder<'a, A, M> = Box<dyn Fn(&[Symbol<A>]) -> Option<OuterDecoding<A, M>> + 'a>;

pub struct InnerBlock<'a, S, A> {
    pub distance: usize,
    pub decoder: InnerDecoder<'a, S, A>,
}

/// A concatenated code described by its decoders.
pub struct ConcatenationSpec<'a, S, A, M> {
    pub inner: Vec<InnerBlock<'a, S, A>>,
    pub outer_distance: usize,
    pub outer: OuterDecoder<'a, A, M>,
}

impl<S, A, M> ConcatenationSpec<'_, S, A, M> {
    pub fn design_distance(&self) -> usize {
        let d: Vec<usize> = self.inner.iter().map(|b| b.distance).collect();
        design_distance(&d, self.outer_distance)
    }
}

/// Sum of the `outer_distance` smallest inner distances.
pub fn design_distance(inner: &[usize], outer_distance: usize) -> usize {
    let mut d = inner.to_vec();
    d.sort_unstable();
    d.iter().take(outer_distance).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmdDecoding<A, M> {
    pub message: M,
    pub codeword: Vec<A>,
    /// Reliability threshold at which the accepted candidate was found.
    pub threshold: i64,
    pub outer_calls: usize,
    pub reliabilities: Vec<i64>,
}

/// Decodes `blocks` (one received block per inner code); `None` is FAIL.
pub fn gmd_decode<S, A, M>(
    blocks: &[Vec<Symbol<S>>],
    spec: &ConcatenationSpec<'_, S, A, M>,
) -> Option<GmdDecoding<A, M>>
where
    A: Clone + PartialEq,
{
    assert_eq!(blocks.len(), spec.inner.len(), "one block per inner code");
    let design = spec.design_distance();
    let mut decoded: Vec<Option<A>> = Vec::with_capacity(blocks.len());
    let mut w: Vec<i64> = Vec::with_capacity(blocks.len());
    for (block, inner) in blocks.iter().zip(&spec.inner) {
        let s = block.iter().filter(|x| x.is_erased()).count() as i64;
        let d = inner.distance as i64;
        let out = (inner.decoder)(block).filter(|o| 2 * o.disagreements as i64 + s < d);
        match out {
            Some(o) => {
                w.push(d - 2 * o.disagreements as i64 - s);
                decoded.push(Some(o.symbol));
            }
            None => {
                w.push(-d - s);
                decoded.push(None);
            }
        }
    }

    let mut thresholds: Vec<i64> =
        w.iter().zip(&decoded).filter(|(_, a)| a.is_some()).map(|(&x, _)| x).collect();
    thresholds.sort_unstable_by(|a, b| b.cmp(a));
    thresholds.dedup();

    let mut outer_calls = 0;
    for &t in &thresholds {
        let z: Vec<Symbol<A>> = decoded
            .iter()
            .zip(&w)
            .map(|(a, &wi)| match a {
                Some(a) if wi >= t => Symbol::Value(a.clone()),
                _ => Symbol::Erased,
            })
            .collect();
        outer_calls += 1;
        let Some(cand) = (spec.outer)(&z) else {
            continue;
        };
        assert_eq!(cand.codeword.len(), blocks.len(), "outer codeword length");
        let bound: i64 = spec
            .inner
            .iter()
            .zip(&decoded)
            .zip(&w)
            .zip(&cand.codeword)
            .map(|(((inner, a), &wi), c)| {
                let d = inner.distance as i64;
                match a {
                    Some(a) if a == c => d - wi,
                    Some(_) => d + wi,
                    None => d,
                }
            })
            .sum();
        if bound < design as i64 {
            return Some(GmdDecoding {
                message: cand.message,
                codeword: cand.codeword,
                threshold: t,
                outer_calls,
                reliabilities: w,
            });
        }
    }
    None
}
