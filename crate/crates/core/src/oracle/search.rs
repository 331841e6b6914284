use rayon::prelude::*;
use serde::Serialize;

use super::{word_from_gray, BinarySpan, MAX_ENUM_K};
use crate::error::{Error, Result};
use crate::polyring::PolyS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Empty,
    /// All `2^k - 1` nonzero words in reflected Gray-code order.
    Gray,
    /// Sums of `j` basis rows for `j = 1, 2, ...`; a sum of `j` rows of an
    /// echelon basis has weight at least `j`, which ends the search.
    Layered,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub d_lee: u32,
    pub d_hamming: u32,
    pub witness_lee: PolyS,
    pub witness_hamming: PolyS,
    pub k: u32,
    pub enumerated: u64,
    pub method: SearchMethod,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    d_lee: u32,
    d_hamming: u32,
    witness_lee: Vec<[String; 3]>,
    witness_hamming: Vec<[String; 3]>,
    k: u32,
    enumerated: u64,
    method: &'a SearchMethod,
}

impl OracleReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            d_lee: self.d_lee,
            d_hamming: self.d_hamming,
            witness_lee: self.witness_lee.to_json_triples(),
            witness_hamming: self.witness_hamming.to_json_triples(),
            k: self.k,
            enumerated: self.enumerated,
            method: &self.method,
        })
        .expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }
}

/// `(weight, position)`; the smaller pair wins, so ties go to the earlier word.
type Best = (u32, u64, u128);

fn better(a: Best, b: Best) -> Best {
    if (b.0, b.1) < (a.0, a.1) {
        b
    } else {
        a
    }
}

struct Weigher {
    block: u32,
    starts: u128,
}

impl Weigher {
    fn new(span: &BinarySpan) -> Self {
        let block = 3 * span.m();
        let starts = (0..span.n() as u32).fold(0u128, |acc, i| acc | 1u128 << (block * i));
        Self { block, starts }
    }

    fn hamming(&self, w: u128) -> u32 {
        let mut acc = w;
        for j in 1..self.block {
            acc |= w >> j;
        }
        (acc & self.starts).count_ones()
    }
}

/// Exact minimum Lee and Hamming weights of the nonzero words of the span.
pub fn min_weights(span: &BinarySpan) -> Result<OracleReport> {
    min_weights_with_budget(span, MAX_ENUM_K)
}

/// As [`min_weights`], enumerating in Gray-code order up to dimension
/// `max_k`. Larger spans fall back to the layered search, which is refused
/// once it would visit more than `2^max_k` words.
pub fn min_weights_with_budget(span: &BinarySpan, max_k: u32) -> Result<OracleReport> {
    let k = span.k();
    let weigher = Weigher::new(span);
    let (lee, ham, enumerated, method) = if k == 0 {
        let z = PolyS::zero(span.tob().ctx(), span.sigma())?;
        return Ok(OracleReport {
            d_lee: 0,
            d_hamming: 0,
            witness_lee: z.clone(),
            witness_hamming: z,
            k,
            enumerated: 0,
            method: SearchMethod::Empty,
        });
    } else if k <= max_k.min(63) {
        let (l, h) = gray_scan(span.rows(), &weigher);
        (l, h, (1u64 << k) - 1, SearchMethod::Gray)
    } else {
        let limit = 1u64 << max_k.min(63);
        let (l, h, count) = layered(span.rows(), &weigher, limit).ok_or_else(|| {
            Error::Capacity(format!(
                "minimum search over a span of dimension k = {k} needs more than 2^{max_k} words"
            ))
        })?;
        (l, h, count, SearchMethod::Layered)
    };
    Ok(OracleReport {
        d_lee: lee.0,
        d_hamming: ham.0,
        witness_lee: word_from_gray(lee.2, span.sigma(), span.tob())?,
        witness_hamming: word_from_gray(ham.2, span.sigma(), span.tob())?,
        k,
        enumerated,
        method,
    })
}

fn word_at(rows: &[u128], index: u64) -> u128 {
    let g = index ^ (index >> 1);
    rows.iter()
        .enumerate()
        .filter(|(j, _)| g >> j & 1 == 1)
        .fold(0, |acc, (_, r)| acc ^ r)
}

fn gray_scan(rows: &[u128], weigher: &Weigher) -> (Best, Best) {
    let k = rows.len() as u32;
    let seg_bits = k.saturating_sub(12).min(10);
    let seg_len = 1u64 << (k - seg_bits);
    let worst = (u32::MAX, u64::MAX, 0);
    (0..1u64 << seg_bits)
        .into_par_iter()
        .map(|seg| {
            let start = seg * seg_len;
            let mut word = word_at(rows, start);
            let (mut lee, mut ham) = (worst, worst);
            let mut visit = |i: u64, w: u128| {
                let l = w.count_ones();
                if l < lee.0 {
                    lee = (l, i, w);
                }
                let h = weigher.hamming(w);
                if h < ham.0 {
                    ham = (h, i, w);
                }
            };
            if start != 0 {
                visit(start, word);
            }
            for i in start + 1..start + seg_len {
                word ^= rows[i.trailing_zeros() as usize];
                visit(i, word);
            }
            (lee, ham)
        })
        .reduce(|| (worst, worst), |a, b| (better(a.0, b.0), better(a.1, b.1)))
}

fn layered(rows: &[u128], weigher: &Weigher, limit: u64) -> Option<(Best, Best, u64)> {
    struct State<'a> {
        rows: &'a [u128],
        weigher: &'a Weigher,
        lee: Best,
        ham: Best,
        seen: u64,
        limit: u64,
    }
    fn dfs(st: &mut State, from: usize, left: usize, acc: u128) -> bool {
        if left == 0 {
            st.seen += 1;
            if st.seen > st.limit {
                return false;
            }
            let seq = st.seen;
            st.lee = better(st.lee, (acc.count_ones(), seq, acc));
            st.ham = better(st.ham, (st.weigher.hamming(acc), seq, acc));
            return true;
        }
        for i in from..=st.rows.len() - left {
            if !dfs(st, i + 1, left - 1, acc ^ st.rows[i]) {
                return false;
            }
        }
        true
    }
    let worst = (u32::MAX, u64::MAX, 0);
    let mut st = State {
        rows,
        weigher,
        lee: worst,
        ham: worst,
        seen: 0,
        limit,
    };
    for j in 1..=rows.len() {
        let j32 = j as u32;
        if j32 > st.lee.0 && j32.div_ceil(weigher.block) > st.ham.0 {
            break;
        }
        if !dfs(&mut st, 0, j, 0) {
            return None;
        }
    }
    Some((st.lee, st.ham, st.seen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codespec::{CodeKind, CodeSpec, TrivialIdeal, UnitPoly};
    use crate::gf2m::{find_tob, FieldCtx};
    use crate::oracle::build_span;

    fn report(sigma: u32, m: u32, kind: impl Fn(FieldCtx) -> CodeKind) -> OracleReport {
        let ctx = FieldCtx::new(m).unwrap();
        let tob = find_tob(ctx).unwrap();
        min_weights(&build_span(&CodeSpec::new(sigma, ctx, kind(ctx)), &tob).unwrap()).unwrap()
    }

    #[test]
    fn trivial_ideals() {
        let r = report(2, 1, |_| CodeKind::Type1(TrivialIdeal::Zero));
        assert_eq!((r.d_lee, r.d_hamming, r.k, r.method), (0, 0, 0, SearchMethod::Empty));
        let r = report(2, 1, |_| CodeKind::Type1(TrivialIdeal::One));
        assert_eq!((r.d_lee, r.d_hamming, r.k), (1, 1, 12));
        let r = report(3, 2, |_| CodeKind::Type1(TrivialIdeal::One));
        assert_eq!((r.d_lee, r.d_hamming, r.k, r.method), (1, 1, 48, SearchMethod::Layered));
    }

    #[test]
    fn type2_example() {
        let r = report(2, 1, |_| CodeKind::Type2 { l: 1 });
        assert_eq!(r.d_lee, 4);
        assert_eq!(r.d_hamming, 2);
        assert_eq!(r.witness_lee.lee_weight(&find_tob(FieldCtx::new(1).unwrap()).unwrap()), 4);
        assert_eq!(r.witness_hamming.hamming_weight(), 2);
    }

    #[test]
    fn witnesses_are_members() {
        let ctx = FieldCtx::new(1).unwrap();
        let tob = find_tob(ctx).unwrap();
        let s = CodeSpec::new(3, ctx, CodeKind::Type3 { l: 5, t: 1, z: UnitPoly::one(ctx) });
        let span = build_span(&s, &tob).unwrap();
        let r = min_weights(&span).unwrap();
        assert!(span.contains(&r.witness_lee).unwrap());
        assert!(span.contains(&r.witness_hamming).unwrap());
        assert!(!r.witness_lee.is_zero());
        assert_eq!(r.witness_lee.lee_weight(&tob), r.d_lee);
        assert_eq!(r.witness_hamming.hamming_weight(), r.d_hamming);
        assert!(r.d_hamming <= r.d_lee);
        assert!(r.witness_lee.hamming_weight() <= r.d_lee);
    }

    #[test]
    fn layered_agrees_with_gray() {
        let ctx = FieldCtx::new(1).unwrap();
        let tob = find_tob(ctx).unwrap();
        for l in 0..8 {
            for kind in [
                CodeKind::Type2 { l },
                CodeKind::Type3 { l, t: 0, z: UnitPoly::one(ctx) },
            ] {
                let s = CodeSpec::new(3, ctx, kind);
                if s.validate().is_err() {
                    continue;
                }
                let span = build_span(&s, &tob).unwrap();
                let w = Weigher::new(&span);
                let a = gray_scan(span.rows(), &w);
                let (bl, bh, _) = layered(span.rows(), &w, u64::MAX).unwrap();
                let (a, b) = ((a.0 .0, a.1 .0), (bl.0, bh.0));
                assert_eq!(a, b, "l={l}");
            }
        }
    }

    #[test]
    fn layered_budget_is_enforced() {
        let ctx = FieldCtx::new(1).unwrap();
        let tob = find_tob(ctx).unwrap();
        let s = CodeSpec::new(3, ctx, CodeKind::Type2 { l: 0 });
        let span = build_span(&s, &tob).unwrap();
        assert!(matches!(min_weights_with_budget(&span, 2), Err(Error::Capacity(_))));
    }

    #[test]
    fn segmentation_is_deterministic() {
        let ctx = FieldCtx::new(1).unwrap();
        let tob = find_tob(ctx).unwrap();
        let s = CodeSpec::new(3, ctx, CodeKind::Type1(TrivialIdeal::One));
        let span = build_span(&s, &tob).unwrap();
        let a = min_weights(&span).unwrap();
        let b = min_weights(&span).unwrap();
        assert_eq!(a.witness_lee, b.witness_lee);
        assert_eq!(a.enumerated, (1 << 24) - 1);
        // first word in reflected order is row 0
        assert_eq!(super::super::gray_word(&a.witness_lee, &tob).count_ones(), 1);
    }
}
