use proptest::prelude::*;

use lee_cyclic::chain_ring::RingElement;
use lee_cyclic::codespec::{enumerate_specs, CodeSpec, EnumOptions};
use lee_cyclic::gf2m::{find_tob, FieldCtx};
use lee_cyclic::oracle::{
    build_span, closure_min_lee, gray_word, membership, min_weights, word_from_gray, CLOSURE_MAX_K,
};
use lee_cyclic::polyring::PolyS;

fn ring_el(ctx: FieldCtx) -> impl Strategy<Value = RingElement> {
    let q = ctx.order();
    (0..q, 0..q, 0..q).prop_map(move |(a, b, c)| {
        RingElement::new(
            ctx.element(a).unwrap(),
            ctx.element(b).unwrap(),
            ctx.element(c).unwrap(),
        )
        .unwrap()
    })
}

fn poly(ctx: FieldCtx, sigma: u32) -> impl Strategy<Value = PolyS> {
    proptest::collection::vec(ring_el(ctx), 1usize << sigma)
        .prop_map(move |c| PolyS::from_coeffs(ctx, c).unwrap())
}

fn specs(sigma: u32, m: u32) -> Vec<CodeSpec> {
    let ctx = FieldCtx::new(m).unwrap();
    let opts = EnumOptions {
        max_unit_combos: 8,
        ..EnumOptions::default()
    };
    enumerate_specs(sigma, ctx, &[1, 2, 3, 4, 5, 6, 7, 8], &opts)
}

proptest! {
    #[test]
    fn gray_is_additive_and_weight_preserving(
        (f, g) in (1u32..=3).prop_flat_map(|m| {
            let ctx = FieldCtx::new(m).unwrap();
            (poly(ctx, 2), poly(ctx, 2))
        })
    ) {
        let tob = find_tob(f.ctx()).unwrap();
        let (wf, wg) = (gray_word(&f, &tob), gray_word(&g, &tob));
        prop_assert_eq!(gray_word(&(&f + &g), &tob), wf ^ wg);
        prop_assert_eq!(wf.count_ones(), f.lee_weight(&tob));
        prop_assert_eq!(word_from_gray(wf, 2, &tob).unwrap(), f);
    }

    #[test]
    fn hamming_weight_bounds_lee_weight(f in poly(FieldCtx::new(2).unwrap(), 3)) {
        let tob = find_tob(f.ctx()).unwrap();
        let (h, l) = (f.hamming_weight(), f.lee_weight(&tob));
        prop_assert!(h <= l && l <= 6 * h);
    }

    #[test]
    fn spans_are_ideals(idx in any::<prop::sample::Index>(), seed in any::<u64>(), m in 1u32..=2) {
        let all = specs(2, m);
        let s = &all[idx.index(all.len())];
        let tob = find_tob(s.ctx).unwrap();
        let span = build_span(s, &tob).unwrap();
        // A random member: XOR of a seeded subset of rows.
        let bits = span.rows().iter().enumerate()
            .filter(|(i, _)| seed >> (i % 64) & 1 == 1)
            .fold(0u128, |acc, (_, r)| acc ^ r);
        let f = word_from_gray(bits, s.sigma, &tob).unwrap();
        prop_assert!(membership(&f, &span).unwrap());
        prop_assert!(membership(&f.shift(1), &span).unwrap());
        prop_assert!(membership(&f.scale(RingElement::u(s.ctx)), &span).unwrap());
        for g in s.generators().unwrap() {
            prop_assert!(membership(&g, &span).unwrap());
        }
    }

    #[test]
    fn oracles_agree_on_small_codes(idx in any::<prop::sample::Index>()) {
        let all: Vec<_> = specs(2, 1);
        let s = &all[idx.index(all.len())];
        let tob = find_tob(s.ctx).unwrap();
        let span = build_span(s, &tob).unwrap();
        prop_assume!(span.k() <= CLOSURE_MAX_K);
        let fast = min_weights(&span).unwrap();
        let slow = closure_min_lee(s, &tob).unwrap();
        prop_assert_eq!(slow.size, 1u64 << span.k());
        prop_assert_eq!((slow.d_lee, slow.d_hamming), (fast.d_lee, fast.d_hamming));
    }

    #[test]
    fn oracle_weights_are_consistent(idx in any::<prop::sample::Index>(), m in 1u32..=2) {
        let all = specs(2, m);
        let s = &all[idx.index(all.len())];
        let tob = find_tob(s.ctx).unwrap();
        let span = build_span(s, &tob).unwrap();
        let d = min_weights(&span).unwrap();
        prop_assert!(d.d_hamming <= d.d_lee && d.d_lee <= 3 * m * d.d_hamming);
        prop_assert_eq!(d.witness_lee.lee_weight(&tob), d.d_lee);
        prop_assert!(membership(&d.witness_lee, &span).unwrap());
    }
}
