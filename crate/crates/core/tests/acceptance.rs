//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::time::{Duration, Instant};

use lee_cyclic::chain_ring::RingElement;
use lee_cyclic::codespec::{enumerate_specs, CodeKind, CodeSpec, EnumOptions, TrivialIdeal, UnitPoly};
use lee_cyclic::formulas::{base_lee, lee_distance, DistanceKind};
use lee_cyclic::gf2m::{all_tob_sets, find_tob, FieldCtx, TraceOrthogonalBasis};
use lee_cyclic::oracle::{
    build_span, closure_min_lee, gray_word, membership, min_weights, min_weights_multibasis,
    CLOSURE_MAX_K,
};
use lee_cyclic::polyring::PolyS;
use lee_cyclic::sweep::{evaluate, SweepRow, Verdict};

type Check = Result<String, String>;

/// Exhaustive coefficient enumeration (no sampling).
const EXHAUSTIVE: EnumOptions = EnumOptions {
    max_unit_combos: u64::MAX,
    seed: 0x5eed,
};
const SAMPLED: EnumOptions = EnumOptions {
    max_unit_combos: 256,
    seed: 0x5eed,
};
/// How many counterexamples a failing line lists.
const SHOW: usize = 3;

fn ctx_tob(m: u32) -> (FieldCtx, TraceOrthogonalBasis) {
    let ctx = FieldCtx::new(m).expect("field");
    (ctx, find_tob(ctx).expect("basis"))
}

fn rows_for(sigma: u32, m: u32, types: &[u8], opts: &EnumOptions) -> Vec<SweepRow> {
    use rayon::prelude::*;
    let (ctx, tob) = ctx_tob(m);
    enumerate_specs(sigma, ctx, types, opts)
        .par_iter()
        .map(|s| evaluate(s, &tob, 26).expect("row evaluates"))
        .collect()
}

fn describe(r: &SweepRow) -> String {
    format!(
        "{} formula={} oracle={:?}",
        r.spec.to_json(),
        r.formula,
        r.oracle.map(|o| o.d_lee)
    )
}

/// Collects failures; passes when there are none.
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, label: &str) -> Check {
        if self.failures.is_empty() {
            Ok(format!("{} {label} checks", self.checked))
        } else {
            let shown: Vec<&String> = self.failures.iter().take(SHOW).collect();
            Err(format!(
                "{} of {} {label} checks failed; e.g. {}",
                self.failures.len(),
                self.checked,
                shown.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" | ")
            ))
        }
    }
}

fn ac1() -> Check {
    let mut t = Tally::new();
    for sigma in [2, 3] {
        for m in [1, 2] {
            let (ctx, tob) = ctx_tob(m);
            for (ideal, want) in [(TrivialIdeal::Zero, 0), (TrivialIdeal::One, 1)] {
                let s = CodeSpec::new(sigma, ctx, CodeKind::Type1(ideal));
                let f = lee_distance(&s).map_err(|e| e.to_string())?;
                let o = min_weights(&build_span(&s, &tob).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                t.check(f.value == Some(want) && o.d_lee as u64 == want, || {
                    format!("sigma={sigma} m={m} {ideal:?}: formula {f}, oracle {}", o.d_lee)
                });
            }
        }
    }
    t.finish("trivial-ideal")
}

fn ac2() -> Check {
    let mut t = Tally::new();
    for sigma in [2u32, 3] {
        for m in [1, 2] {
            let (ctx, tob) = ctx_tob(m);
            for l in 0..1u32 << sigma {
                let s = CodeSpec::new(sigma, ctx, CodeKind::Type2 { l });
                let f = lee_distance(&s).map_err(|e| e.to_string())?;
                let base = base_lee(l, sigma).map_err(|e| e.to_string())?;
                let o = min_weights(&build_span(&s, &tob).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let d = u64::from(o.d_lee);
                t.check(
                    f.kind == DistanceKind::Exact
                        && f.value == Some(d)
                        && base.value.map(|b| 2 * b) == Some(d),
                    || format!("sigma={sigma} m={m} l={l}: formula {f}, base {base}, oracle {d}"),
                );
            }
        }
    }
    t.finish("Type 2")
}

fn source_is(r: &SweepRow, id: &str) -> bool {
    r.formula.source.split('/').next() == Some(id)
}

fn ac3(store: &mut Vec<SweepRow>) -> Check {
    let mut t = Tally::new();
    let mut rows = rows_for(2, 1, &[3], &EXHAUSTIVE);
    rows.extend(rows_for(3, 1, &[3], &SAMPLED));
    for r in &rows {
        let z_zero = matches!(r.spec.kind, CodeKind::Type3 { ref z, .. } if z.is_zero());
        let t0 = matches!(r.spec.kind, CodeKind::Type3 { t: 0, .. });
        if z_zero {
            t.check(source_is(r, "thm7") && r.verdict == Verdict::Match, || describe(r));
        } else if t0 && r.spec.sigma == 2 {
            t.check(
                source_is(r, "thm9") && r.oracle.map(|o| o.d_lee) == Some(4),
                || describe(r),
            );
        } else if source_is(r, "thm8") {
            let ok = match r.formula.kind {
                DistanceKind::Exact => r.formula.value == Some(4) && r.verdict == Verdict::Match,
                DistanceKind::Bounds => r.verdict == Verdict::WithinBounds,
                DistanceKind::NotCovered => true,
            };
            t.check(ok, || describe(r));
        }
    }
    store.extend(rows);
    t.finish("Type 3")
}

fn ac4(store: &mut Vec<SweepRow>) -> Check {
    let mut t = Tally::new();
    let mut rows = rows_for(2, 1, &[4, 5, 6, 7], &EXHAUSTIVE);
    rows.extend(rows_for(3, 1, &[4, 5, 6, 7], &SAMPLED));
    for r in &rows {
        t.check(r.verdict != Verdict::Mismatch, || format!("MISMATCH {}", describe(r)));
        if r.formula.kind == DistanceKind::Exact {
            let v = r.formula.value.unwrap_or(0);
            t.check(
                r.sandwich.admits(v) == Some(true) && r.sandwich_holds() == Some(true),
                || format!("outside sandwich {}: {}", r.sandwich, describe(r)),
            );
        }
    }
    store.extend(rows);
    t.finish("Types 4-7")
}

fn ac5(store: &mut Vec<SweepRow>) -> Check {
    let mut t = Tally::new();
    let rows = rows_for(3, 1, &[8], &SAMPLED);
    let named = |r: &SweepRow| ["type8a", "type8b", "type8c"].iter().any(|id| source_is(r, id));
    for r in &rows {
        match r.formula.kind {
            DistanceKind::Exact | DistanceKind::Bounds if named(r) => t.check(
                matches!(r.verdict, Verdict::Match | Verdict::WithinBounds),
                || describe(r),
            ),
            DistanceKind::NotCovered => t.check(r.sandwich_holds() == Some(true), || {
                format!("outside {}: {}", r.sandwich, describe(r))
            }),
            _ => t.check(false, || format!("unexpected source {}", describe(r))),
        }
    }
    store.extend(rows);
    t.finish("Type 8")
}

fn ac6(rows: &[SweepRow]) -> Check {
    let mut t = Tally::new();
    for r in rows {
        t.check(r.params_agree() == Some(true), || {
            format!(
                "{} closed form {:?} definitional {:?}",
                r.spec.to_json(),
                r.params,
                r.oracle_params
            )
        });
    }
    t.finish("smallest-exponent")
}

fn ac7(rows: &[SweepRow]) -> Check {
    let mut t = Tally::new();
    for r in rows.iter().filter(|r| r.hamming.kind == DistanceKind::Exact) {
        t.check(r.hamming_agrees() == Some(true), || {
            format!(
                "{} reduction {} oracle {:?}",
                r.spec.to_json(),
                r.hamming,
                r.oracle.map(|o| o.d_hamming)
            )
        });
    }
    t.finish("Hamming-reduction")
}

fn ac8() -> Check {
    let mut t = Tally::new();
    // GF(4) has a single orthonormal set, so compare its two orderings; GF(16)
    // has two different sets.
    let (ctx2, tob2) = ctx_tob(2);
    let mut swapped = tob2.elems().to_vec();
    swapped.reverse();
    let bases2 = vec![
        tob2.clone(),
        TraceOrthogonalBasis::new(ctx2, swapped).map_err(|e| e.to_string())?,
    ];
    let ctx4 = FieldCtx::new(4).map_err(|e| e.to_string())?;
    let bases4 = all_tob_sets(ctx4).map_err(|e| e.to_string())?;
    if bases4.len() < 2 {
        return Err("GF(16) should have two orthonormal sets".into());
    }
    for (ctx, bases) in [(ctx2, &bases2), (ctx4, &bases4)] {
        for s in enumerate_specs(2, ctx, &[2, 3], &SAMPLED) {
            let k = build_span(&s, &bases[0]).map_err(|e| e.to_string())?.k();
            if k > 26 {
                continue;
            }
            let d = min_weights_multibasis(&s, bases).map_err(|e| e.to_string())?;
            t.check(d.windows(2).all(|w| w[0] == w[1]), || format!("{} -> {d:?}", s.to_json()));
        }
    }
    t.finish("basis-invariance")
}

fn ac9() -> Check {
    let mut t = Tally::new();
    for m in [1, 2] {
        let (ctx, tob) = ctx_tob(m);
        let zeta = RingElement::scalar(tob.elems()[0]);
        for sigma in [2u32, 3] {
            let half = 1usize << (sigma - 1);
            let wp = PolyS::x_plus_one_pow(ctx, sigma, half)
                .unwrap()
                .scale(RingElement::u2(ctx) * zeta);
            // u(x+1)^l + u^2(x+1)^t with 1 < l <= 2^(s-1), 0 < t < L
            let l = if sigma == 2 { 2 } else { 3 };
            let c3 = CodeSpec::new(sigma, ctx, CodeKind::Type3 { l, t: 1, z: UnitPoly::one(ctx) });
            let span3 = build_span(&c3, &tob).map_err(|e| e.to_string())?;
            t.check(
                wp.lee_weight(&tob) == 4 && membership(&wp, &span3).unwrap_or(false),
                || format!("m={m} sigma={sigma}: zeta u^2 (x+1)^half weight {}", wp.lee_weight(&tob)),
            );
            let chi = (&PolyS::x_plus_one_pow(ctx, sigma, half).unwrap()
                + &PolyS::constant(ctx, sigma, RingElement::u(ctx)).unwrap())
                .scale(zeta);
            let c5 = CodeSpec::new(
                sigma,
                ctx,
                CodeKind::Type5 {
                    alpha: half as u32,
                    t1: 0,
                    t2: 0,
                    z1: UnitPoly::one(ctx),
                    z2: UnitPoly::Zero,
                },
            );
            let span5 = build_span(&c5, &tob).map_err(|e| e.to_string())?;
            t.check(
                chi.lee_weight(&tob) == 3 && membership(&chi, &span5).unwrap_or(false),
                || format!("m={m} sigma={sigma}: zeta((x+1)^half + u) weight {}", chi.lee_weight(&tob)),
            );
        }
    }
    t.finish("witness")
}

fn ac10() -> Check {
    let mut t = Tally::new();
    for m in 1..=3 {
        let ctx = FieldCtx::new(m).map_err(|e| e.to_string())?;
        let els: Vec<_> = ctx.elements().collect();
        for &a in &els {
            t.check(a.is_zero() || a.inverse().map(|i| (a * i).is_one()) == Some(true), || {
                format!("m={m}: inverse of {a}")
            });
            for &b in &els {
                t.check(a + b == b + a && a * b == b * a, || format!("m={m}: commutativity {a} {b}"));
                for &c in &els {
                    t.check(
                        (a * b) * c == a * (b * c)
                            && (a + b) + c == a + (b + c)
                            && a * (b + c) == a * b + a * c,
                        || format!("m={m}: ring laws at {a} {b} {c}"),
                    );
                }
            }
        }
    }
    for m in 1..=2 {
        let (ctx, tob) = ctx_tob(m);
        let all: Vec<_> = RingElement::all(ctx).collect();
        for &x in &all {
            t.check(x.lee_weight(&tob) == x.gray_packed(&tob).count_ones(), || {
                format!("m={m}: weight identity at {x}")
            });
            for &y in &all {
                t.check(
                    (x + y).gray_packed(&tob) == x.gray_packed(&tob) ^ y.gray_packed(&tob),
                    || format!("m={m}: additivity at {x}, {y}"),
                );
            }
        }
    }
    for m in [1, 2] {
        let (ctx, tob) = ctx_tob(m);
        for s in enumerate_specs(2, ctx, &[1, 2, 3, 4, 5, 6, 7, 8], &SAMPLED) {
            let span = build_span(&s, &tob).map_err(|e| e.to_string())?;
            for f in span.row_words().map_err(|e| e.to_string())? {
                let x_ok = span.contains_bits(gray_word(&f.shift(1), &tob));
                let u_ok = span.contains_bits(gray_word(&f.scale(RingElement::u(ctx)), &tob));
                t.check(x_ok && u_ok, || format!("closure fails for {} at {f}", s.to_json()));
            }
            if span.k() <= CLOSURE_MAX_K {
                let o = min_weights(&span).map_err(|e| e.to_string())?;
                let c = closure_min_lee(&s, &tob).map_err(|e| e.to_string())?;
                t.check(
                    c.size == 1 << span.k() && c.d_lee == o.d_lee && c.d_hamming == o.d_hamming,
                    || format!("double oracle disagrees on {}: {c:?} vs {}", s.to_json(), o.d_lee),
                );
            }
        }
    }
    t.finish("property")
}

fn run(id: &str, name: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let res = f();
    let took = start.elapsed();
    let (ok, detail) = match res {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}, but took longer than {limit:?}")),
        Err(d) => (false, d),
    };
    println!(
        "{} {id} {name} ({:.2}s): {detail}",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64()
    );
    ok
}

fn main() {
    let secs = Duration::from_secs;
    let mut swept = Vec::new();
    let mut results = vec![
        run("AC1", "trivial ideals", secs(1), ac1),
        run("AC2", "Type 2 table", secs(30), ac2),
        run("AC3", "Type 3 theorems", secs(300), || ac3(&mut swept)),
        run("AC4", "Types 4-7 sweep", secs(1800), || ac4(&mut swept)),
        run("AC5", "Type 8 sweep", secs(600), || ac5(&mut swept)),
    ];
    results.push(run("AC6", "smallest-exponent audit", secs(1800), || ac6(&swept)));
    results.push(run("AC7", "Hamming reductions", secs(1800), || ac7(&swept)));
    results.push(run("AC8", "basis invariance", secs(120), ac8));
    results.push(run("AC9", "witness regression", secs(1), ac9));
    results.push(run("AC10", "property suites", secs(120), ac10));
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
