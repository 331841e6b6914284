//! A second, deliberately naive oracle: grow the ideal element by element
//! with ring arithmetic only, never touching the binary span.

use std::collections::{HashSet, VecDeque};

use crate::chain_ring::RingElement;
use crate::codespec::CodeSpec;
use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, TraceOrthogonalBasis};
use crate::polyring::PolyS;

/// Largest binary dimension the closure oracle will build.
pub const CLOSURE_MAX_K: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub size: u64,
    pub d_lee: u32,
    pub d_hamming: u32,
}

/// Every element of the ideal generated by `gens`, found by closing under
/// addition and multiplication by `x`, `u` and a field generator.
#[allow(clippy::mutable_key_type)]
pub fn closure_elements(ctx: FieldCtx, sigma: u32, gens: &[PolyS]) -> Result<Vec<PolyS>> {
    let mut mults = vec![RingElement::u(ctx)];
    if ctx.m() > 1 {
        mults.push(RingElement::scalar(ctx.element(0b10)?));
    }
    let cap = 1usize << CLOSURE_MAX_K;
    let mut elems: Vec<PolyS> = Vec::new();
    let mut seen: HashSet<PolyS> = HashSet::new();
    let mut queue: VecDeque<PolyS> = VecDeque::new();
    queue.push_back(PolyS::zero(ctx, sigma)?);
    queue.extend(gens.iter().cloned());
    while let Some(f) = queue.pop_front() {
        if seen.contains(&f) {
            continue;
        }
        if seen.len() == cap {
            return Err(Error::Capacity(format!(
                "ideal has more than 2^{CLOSURE_MAX_K} elements"
            )));
        }
        for g in &elems {
            let s = &f + g;
            if !seen.contains(&s) {
                queue.push_back(s);
            }
        }
        queue.push_back(f.shift(1));
        for r in &mults {
            queue.push_back(f.scale(*r));
        }
        seen.insert(f.clone());
        elems.push(f);
    }
    Ok(elems)
}

/// Minimum weights over the nonzero elements of [`closure_elements`].
pub fn closure_min_lee(spec: &CodeSpec, tob: &TraceOrthogonalBasis) -> Result<ClosureReport> {
    let elems = closure_elements(spec.ctx, spec.sigma, &spec.generators()?)?;
    let nonzero = elems.iter().filter(|f| !f.is_zero());
    let d_lee = nonzero.clone().map(|f| f.lee_weight(tob)).min().unwrap_or(0);
    let d_hamming = nonzero.map(PolyS::hamming_weight).min().unwrap_or(0);
    Ok(ClosureReport {
        size: elems.len() as u64,
        d_lee,
        d_hamming,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codespec::{CodeKind, TrivialIdeal};
    use crate::gf2m::{find_tob, FieldCtx};

    #[test]
    fn small_ideals() {
        let ctx = FieldCtx::new(1).unwrap();
        let tob = find_tob(ctx).unwrap();
        let zero = CodeSpec::new(2, ctx, CodeKind::Type1(TrivialIdeal::Zero));
        assert_eq!(
            closure_min_lee(&zero, &tob).unwrap(),
            ClosureReport { size: 1, d_lee: 0, d_hamming: 0 }
        );
        let s = CodeSpec::new(2, ctx, CodeKind::Type2 { l: 1 });
        assert_eq!(
            closure_min_lee(&s, &tob).unwrap(),
            ClosureReport { size: 8, d_lee: 4, d_hamming: 2 }
        );
        let one = CodeSpec::new(2, ctx, CodeKind::Type1(TrivialIdeal::One));
        assert!(matches!(closure_min_lee(&one, &tob), Err(Error::Capacity(_))));
    }
}
