//! Closed-form Hamming and Lee distances.
//!
//! Every Lee-distance theorem is a [`Theorem`] record: a z-pattern, a
//! hypothesis, and an ordered list of [`Clause`]s, each a guard plus a
//! result expression. [`lee_distance`] finds the theorem for a spec's
//! family and z-pattern and returns the first clause whose guard holds.
//! Specs outside every displayed region come back as
//! [`DistanceKind::NotCovered`].
//!
//! Guards with halves (`alpha <= 2^(s-2) + T/2`) are compared after
//! scaling both sides by 2 or 4, so no rounding is ever chosen.

mod table;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::codespec::{CodeKind, CodeSpec, DerivedParams, TrivialIdeal, UnitPoly};
use crate::error::{Error, Result};
use crate::polyring::MAX_SIGMA;

pub use table::theorems;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    Exact,
    Bounds,
    NotCovered,
}

/// A formula outcome. `value` is set for `Exact`, `lo`/`hi` for `Bounds`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DistanceResult {
    pub kind: DistanceKind,
    pub value: Option<u64>,
    pub lo: Option<u64>,
    pub hi: Option<u64>,
    pub source: String,
    pub gamma: Option<u32>,
    /// Further clauses whose guards also held; a non-empty list means the
    /// displayed regions overlap at this spec.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub also_matched: Vec<String>,
}

impl DistanceResult {
    pub fn exact(value: u64, source: impl Into<String>, gamma: Option<u32>) -> Self {
        Self {
            kind: DistanceKind::Exact,
            value: Some(value),
            lo: None,
            hi: None,
            source: source.into(),
            gamma,
            also_matched: Vec::new(),
        }
    }

    pub fn bounds(lo: u64, hi: u64, source: impl Into<String>, gamma: Option<u32>) -> Self {
        Self {
            kind: DistanceKind::Bounds,
            value: None,
            lo: Some(lo),
            hi: Some(hi),
            source: source.into(),
            gamma,
            also_matched: Vec::new(),
        }
    }

    pub fn not_covered(source: impl Into<String>) -> Self {
        Self {
            kind: DistanceKind::NotCovered,
            value: None,
            lo: None,
            hi: None,
            source: source.into(),
            gamma: None,
            also_matched: Vec::new(),
        }
    }

    /// Whether `d` is consistent with this result; `None` when not covered.
    pub fn admits(&self, d: u64) -> Option<bool> {
        match self.kind {
            DistanceKind::Exact => Some(self.value == Some(d)),
            DistanceKind::Bounds => Some(self.lo.is_some_and(|l| l <= d) && self.hi.is_some_and(|h| d <= h)),
            DistanceKind::NotCovered => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

impl fmt::Display for DistanceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DistanceKind::Exact => write!(f, "exact {}", self.value.unwrap_or(0))?,
            DistanceKind::Bounds => write!(f, "bounds [{}, {}]", self.lo.unwrap_or(0), self.hi.unwrap_or(0))?,
            DistanceKind::NotCovered => write!(f, "not covered")?,
        }
        write!(f, " ({})", self.source)?;
        if let Some(g) = self.gamma {
            write!(f, " gamma={g}")?;
        }
        Ok(())
    }
}

/// Shape of one unit slot as a theorem sees it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Zero,
    /// Nonzero unit with companion exponent 0.
    T0,
    /// Nonzero unit with positive companion exponent.
    TPos,
    /// Slot unused by the family.
    Any,
}

impl Slot {
    fn admits(self, actual: Slot) -> bool {
        self == Slot::Any || self == actual
    }
}

/// Everything a guard may read. A zero unit's companion exponent reads as 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Env {
    pub s: i64,
    pub n: i64,
    pub h: i64,
    pub l: i64,
    pub t: i64,
    pub mu: i64,
    pub a: i64,
    pub b: i64,
    pub w: i64,
    pub t1: i64,
    pub t2: i64,
    pub t3: i64,
    pub cl: i64,
    pub cu: i64,
    pub cv: i64,
    pub cw: i64,
    pub cl1: i64,
    pub z1_one: bool,
    pub z2_one: bool,
    pub z3_one: bool,
    pub slots: [Slot; 3],
}

impl Env {
    fn p2(&self, g: i64) -> i64 {
        1i64 << (self.s - g)
    }

    /// Lower end of the gamma-window, `2^s - 2^(s-g) + 1`.
    pub fn win_lo(&self, g: i64) -> i64 {
        self.n - self.p2(g) + 1
    }

    /// Upper end of the gamma-window, `2^s - 2^(s-g) + 2^(s-g-1)`.
    pub fn win_hi(&self, g: i64) -> i64 {
        self.n - self.p2(g) + self.p2(g) / 2
    }

    pub fn win(&self, g: i64, x: i64) -> bool {
        self.win_lo(g) <= x && x <= self.win_hi(g)
    }

    /// `x <= 2^(s-1) - 2^(s-g-1) + 2^(s-g-2) + tt/2`, scaled by 4.
    pub fn b_ok(&self, g: i64, x: i64, tt: i64) -> bool {
        4 * x <= 2 * self.n - self.p2(g) + 2 * tt
    }

    /// `x <= 2^(s-2) + tt/2`, scaled by 2.
    pub fn q_ok(&self, x: i64, tt: i64) -> bool {
        2 * x <= self.h + tt
    }

    /// `x <= 2^(s-1) + tt/2`, scaled by 2.
    pub fn hh_ok(&self, x: i64, tt: i64) -> bool {
        2 * x <= self.n + tt
    }

    /// `3x <= 2^s - 2^(s-g) + 2^(s-g-1) + 2 tt`.
    pub fn three_ok(&self, g: i64, x: i64, tt: i64) -> bool {
        3 * x <= self.win_hi(g) + 2 * tt
    }
}

fn slot_of(z: &UnitPoly, t: u32) -> Slot {
    match (z.is_zero(), t) {
        (true, _) => Slot::Zero,
        (false, 0) => Slot::T0,
        (false, _) => Slot::TPos,
    }
}

/// Builds the guard environment for a validated spec.
pub fn env_for(spec: &CodeSpec, d: &DerivedParams) -> Env {
    let s = i64::from(spec.sigma);
    let n = 1i64 << s;
    let g = |o: Option<u32>| i64::from(o.unwrap_or(0));
    let eff = |z: &UnitPoly, t: u32| if z.is_zero() { 0 } else { i64::from(t) };
    let mut e = Env {
        s,
        n,
        h: n / 2,
        l: 0,
        t: 0,
        mu: 0,
        a: 0,
        b: 0,
        w: 0,
        t1: 0,
        t2: 0,
        t3: 0,
        cl: g(d.l),
        cu: g(d.u),
        cv: g(d.v),
        cw: g(d.w),
        cl1: g(d.l1),
        z1_one: false,
        z2_one: false,
        z3_one: false,
        slots: [Slot::Any; 3],
    };
    let [z1, z2, z3] = spec.units();
    e.z1_one = z1.is_one();
    e.z2_one = z2.is_one();
    e.z3_one = z3.is_one();
    match &spec.kind {
        CodeKind::Type1(_) => {}
        CodeKind::Type2 { l } => e.l = i64::from(*l),
        CodeKind::Type3 { l, t, z } => {
            e.l = i64::from(*l);
            e.t = eff(z, *t);
            e.slots[0] = slot_of(z, *t);
        }
        CodeKind::Type4 { l, t, mu, z } => {
            e.l = i64::from(*l);
            e.t = eff(z, *t);
            e.mu = i64::from(*mu);
            e.slots[0] = slot_of(z, *t);
        }
        CodeKind::Type5 { alpha, t1, t2, z1, z2 } | CodeKind::Type6 { alpha, t1, t2, z1, z2, .. } => {
            e.a = i64::from(*alpha);
            e.t1 = eff(z1, *t1);
            e.t2 = eff(z2, *t2);
            e.slots[0] = slot_of(z1, *t1);
            e.slots[1] = slot_of(z2, *t2);
            if let CodeKind::Type6 { omega, .. } = &spec.kind {
                e.w = i64::from(*omega);
            }
        }
        CodeKind::Type7 {
            alpha, beta, t1, t2, t3, z1, z2, z3,
        }
        | CodeKind::Type8 {
            alpha, beta, t1, t2, t3, z1, z2, z3, ..
        } => {
            e.a = i64::from(*alpha);
            e.b = i64::from(*beta);
            e.t1 = eff(z1, *t1);
            e.t2 = eff(z2, *t2);
            e.t3 = eff(z3, *t3);
            e.slots = [slot_of(z1, *t1), slot_of(z2, *t2), slot_of(z3, *t3)];
            if let CodeKind::Type8 { omega, .. } = &spec.kind {
                e.w = i64::from(*omega);
            }
        }
    }
    e
}

/// `mult * 2^(gamma + plus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Val {
    Const(u64),
    Pow2Gamma { mult: u64, plus: u32 },
}

impl Val {
    fn eval(self, gamma: Option<i64>) -> u64 {
        match self {
            Val::Const(v) => v,
            Val::Pow2Gamma { mult, plus } => {
                let g = gamma.expect("gamma clause evaluated with gamma") as u32;
                mult << (g + plus)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Exact(Val),
    Bounds(Val, Val),
}

#[derive(Clone, Copy)]
pub enum Guard {
    Plain(fn(&Env) -> bool),
    /// Holds when the predicate holds for some `1 <= gamma <= s-1`.
    Gamma(fn(&Env, i64) -> bool),
    /// Holds when no other clause of the theorem does.
    Otherwise,
}

impl fmt::Debug for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Guard::Plain(_) => "Plain",
            Guard::Gamma(_) => "Gamma",
            Guard::Otherwise => "Otherwise",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Clause {
    pub guard: Guard,
    pub outcome: Outcome,
}

#[derive(Debug, Clone)]
pub struct Theorem {
    pub id: &'static str,
    pub type_tag: u8,
    pub pattern: [Slot; 3],
    /// Hypotheses stated by the theorem beyond the family's own inequalities.
    pub hypothesis: fn(&Env) -> bool,
    pub clauses: Vec<Clause>,
}

/// One clause that held, with the gamma that satisfied it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClauseMatch {
    pub index: usize,
    pub gamma: Option<i64>,
}

impl Theorem {
    pub fn admits(&self, type_tag: u8, slots: &[Slot; 3]) -> bool {
        self.type_tag == type_tag && self.pattern.iter().zip(slots).all(|(p, s)| p.admits(*s))
    }

    /// Every clause whose guard holds, in listed order.
    pub fn matches(&self, e: &Env) -> Vec<ClauseMatch> {
        let mut out = Vec::new();
        for (index, c) in self.clauses.iter().enumerate() {
            match c.guard {
                Guard::Plain(p) => {
                    if p(e) {
                        out.push(ClauseMatch { index, gamma: None });
                    }
                }
                Guard::Gamma(p) => {
                    if let Some(g) = (1..e.s).find(|&g| p(e, g)) {
                        out.push(ClauseMatch { index, gamma: Some(g) });
                    }
                }
                Guard::Otherwise => {}
            }
        }
        if out.is_empty() {
            if let Some(index) = self.clauses.iter().position(|c| matches!(c.guard, Guard::Otherwise)) {
                out.push(ClauseMatch { index, gamma: None });
            }
        }
        out
    }

    pub fn source(&self, index: usize) -> String {
        format!("{}/clause{}", self.id, index + 1)
    }

    fn result(&self, m: ClauseMatch) -> DistanceResult {
        let src = self.source(m.index);
        let gamma = m.gamma.map(|g| g as u32);
        match self.clauses[m.index].outcome {
            Outcome::Exact(v) => DistanceResult::exact(v.eval(m.gamma), src, gamma),
            Outcome::Bounds(lo, hi) => DistanceResult::bounds(lo.eval(m.gamma), hi.eval(m.gamma), src, gamma),
        }
    }
}

fn check_sigma(sigma: u32) -> Result<()> {
    if sigma == 0 || sigma > MAX_SIGMA {
        return Err(Error::Usage(format!("sigma must be in 1..={MAX_SIGMA}, got {sigma}")));
    }
    Ok(())
}

/// Clause index (0-based) and gamma of the base table for `0 <= l <= 2^s`.
fn base_clause(l: u32, sigma: u32) -> (usize, Option<u32>) {
    let n = 1u32 << sigma;
    let h = n / 2;
    if l == 0 {
        return (0, None);
    }
    if l == n {
        return (3, None);
    }
    if l <= h {
        return (1, None);
    }
    for g in 1..sigma {
        let lo = n - (1 << (sigma - g)) + 1;
        let hi = n - (1 << (sigma - g)) + (1 << (sigma - g - 1));
        if lo <= l && l <= hi {
            return (2, Some(g));
        }
    }
    unreachable!("base table tiles 1..2^s-1")
}

/// Every `l` in `1..2^s-1` falls in exactly one of the middle clauses.
pub fn base_table_tiles(sigma: u32) -> bool {
    let n = 1u32 << sigma;
    (1..n).all(|l| {
        let mid = u32::from(l <= n / 2);
        let windows = (1..sigma)
            .filter(|&g| {
                let lo = n - (1 << (sigma - g)) + 1;
                let hi = n - (1 << (sigma - g)) + (1 << (sigma - g - 1));
                lo <= l && l <= hi
            })
            .count() as u32;
        mid + windows == 1
    })
}

fn assert_tiling() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        for s in 1..=MAX_SIGMA {
            assert!(base_table_tiles(s), "base distance table leaves a gap at sigma = {s}");
        }
    });
}

fn base(l: u32, sigma: u32, id: &str) -> Result<DistanceResult> {
    check_sigma(sigma)?;
    assert_tiling();
    let n = 1u32 << sigma;
    if l > n {
        return Err(Error::Usage(format!("exponent {l} exceeds 2^sigma = {n}")));
    }
    let (idx, gamma) = base_clause(l, sigma);
    let v = match idx {
        0 => 1,
        1 => 2,
        2 => 2u64 << gamma.expect("window clause has gamma"),
        _ => 0,
    };
    Ok(DistanceResult::exact(v, format!("{id}/clause{}", idx + 1), gamma))
}

/// `d_H(<(x+1)^l>)` over `GF(2^m)[x]/(x^(2^s) - 1)`.
pub fn base_hamming(l: u32, sigma: u32) -> Result<DistanceResult> {
    base(l, sigma, "thm3")
}

/// `d_L(<(x+1)^l>)`; numerically the same table as [`base_hamming`].
pub fn base_lee(l: u32, sigma: u32) -> Result<DistanceResult> {
    base(l, sigma, "thm4")
}

/// Exponent `e` with `d_H(C) = d_H(<(x+1)^e>)`, and the theorem giving it.
pub fn hamming_reduction(spec: &CodeSpec, d: &DerivedParams) -> Option<(u32, &'static str)> {
    let g = |o: Option<u32>| o.unwrap_or(0);
    match &spec.kind {
        CodeKind::Type1(_) => None,
        CodeKind::Type2 { l } => Some((*l, "thm5")),
        CodeKind::Type3 { .. } => Some((g(d.l), "thm6")),
        CodeKind::Type4 { mu, .. } => Some((*mu, "thm10")),
        CodeKind::Type5 { .. } => Some((g(d.v), "thm14")),
        CodeKind::Type6 { omega, .. } => Some((*omega, "thm24")),
        CodeKind::Type7 { .. } => Some((g(d.w), "thm34")),
        CodeKind::Type8 { omega, .. } => Some((*omega, "thm62")),
    }
}

pub fn hamming_distance(spec: &CodeSpec) -> Result<DistanceResult> {
    let d = spec.validated()?;
    match (&spec.kind, hamming_reduction(spec, &d)) {
        (CodeKind::Type1(TrivialIdeal::Zero), _) => Ok(DistanceResult::exact(0, "type1/zero", None)),
        (CodeKind::Type1(TrivialIdeal::One), _) => Ok(DistanceResult::exact(1, "type1/one", None)),
        (_, Some((e, id))) => {
            let b = base_hamming(e, spec.sigma)?;
            Ok(DistanceResult {
                source: format!("{id}+{}", b.source),
                ..b
            })
        }
        (_, None) => Err(Error::Internal("family without a Hamming reduction".into())),
    }
}

/// `[d_H(<(x+1)^e>), 2 d_H(<(x+1)^e>)]` for the family's reduction exponent.
pub fn lee_bounds_sandwich(spec: &CodeSpec) -> Result<DistanceResult> {
    let d = spec.validated()?;
    match (&spec.kind, hamming_reduction(spec, &d)) {
        (CodeKind::Type1(TrivialIdeal::Zero), _) => Ok(DistanceResult::bounds(0, 0, "sandwich/type1", None)),
        (CodeKind::Type1(TrivialIdeal::One), _) => Ok(DistanceResult::bounds(1, 2, "sandwich/type1", None)),
        (_, Some((e, id))) => {
            let b = base_hamming(e, spec.sigma)?;
            let v = b.value.unwrap_or(0);
            Ok(DistanceResult::bounds(v, 2 * v, format!("sandwich/{id}"), b.gamma))
        }
        (_, None) => Err(Error::Internal("family without a Hamming reduction".into())),
    }
}

/// Evaluates the displayed Lee-distance theorems.
pub fn lee_distance(spec: &CodeSpec) -> Result<DistanceResult> {
    let d = spec.validated()?;
    if let CodeKind::Type1(which) = spec.kind {
        return Ok(match which {
            TrivialIdeal::Zero => DistanceResult::exact(0, "type1/zero", None),
            TrivialIdeal::One => DistanceResult::exact(1, "type1/one", None),
        });
    }
    let e = env_for(spec, &d);
    let tag = spec.type_tag();
    let Some(th) = theorems().iter().find(|t| t.admits(tag, &e.slots)) else {
        return Ok(DistanceResult::not_covered(format!("type{tag}/remaining")));
    };
    if !(th.hypothesis)(&e) {
        return Ok(DistanceResult::not_covered(format!("{}/hypothesis", th.id)));
    }
    let ms = th.matches(&e);
    let Some(first) = ms.first() else {
        return Ok(DistanceResult::not_covered(format!("{}/gap", th.id)));
    };
    let mut r = th.result(*first);
    r.also_matched = ms[1..].iter().map(|m| th.source(m.index)).collect();
    Ok(r)
}

/// Clause-tiling audit for one spec: how many clauses held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingRecord {
    pub theorem: Option<&'static str>,
    pub hypothesis_holds: bool,
    pub matched: Vec<String>,
}

pub fn tiling_record(spec: &CodeSpec) -> Result<TilingRecord> {
    let d = spec.validated()?;
    let e = env_for(spec, &d);
    let Some(th) = theorems().iter().find(|t| t.admits(spec.type_tag(), &e.slots)) else {
        return Ok(TilingRecord {
            theorem: None,
            hypothesis_holds: false,
            matched: Vec::new(),
        });
    };
    Ok(TilingRecord {
        theorem: Some(th.id),
        hypothesis_holds: (th.hypothesis)(&e),
        matched: th.matches(&e).iter().map(|m| th.source(m.index)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codespec::{enumerate_specs, EnumOptions};
    use crate::gf2m::FieldCtx;

    fn f1() -> FieldCtx {
        FieldCtx::new(1).unwrap()
    }

    #[test]
    fn base_examples() {
        assert_eq!(base_hamming(0, 3).unwrap().value, Some(1));
        assert_eq!(base_hamming(4, 3).unwrap().value, Some(2));
        let r = base_hamming(7, 3).unwrap();
        assert_eq!((r.value, r.gamma), (Some(8), Some(2)));
        assert_eq!(base_lee(3, 3).unwrap().value, Some(2));
        assert_eq!(base_lee(8, 3).unwrap().value, Some(0));
        assert_eq!(base_lee(0, 2).unwrap().source, "thm4/clause1");
        assert!(base_lee(9, 3).is_err());
        assert!(base_lee(1, 0).is_err());
    }

    #[test]
    fn base_table_tiles_every_sigma() {
        for s in 1..=MAX_SIGMA {
            assert!(base_table_tiles(s));
        }
    }

    #[test]
    fn lee_examples() {
        let ctx = f1();
        let one = || UnitPoly::one(ctx);
        let r = lee_distance(&CodeSpec::new(3, ctx, CodeKind::Type2 { l: 0 })).unwrap();
        assert_eq!((r.value, r.source.as_str()), (Some(2), "thm5/clause1"));
        let r = lee_distance(&CodeSpec::new(3, ctx, CodeKind::Type3 { l: 2, t: 0, z: UnitPoly::Zero })).unwrap();
        assert_eq!((r.value, r.source.as_str()), (Some(6), "thm7/clause2"));
        let r = lee_distance(&CodeSpec::new(3, ctx, CodeKind::Type3 { l: 7, t: 1, z: one() })).unwrap();
        assert_eq!((r.kind, r.value, r.source.as_str()), (DistanceKind::Exact, Some(4), "thm8/clause2"));
        assert!(r.also_matched.is_empty());
        let r = lee_distance(&CodeSpec::new(
            3,
            ctx,
            CodeKind::Type5 { alpha: 4, t1: 0, t2: 0, z1: UnitPoly::Zero, z2: one() },
        ))
        .unwrap();
        assert_eq!((r.value, r.source.as_str()), (Some(2), "thm16/clause2"));
        let r = lee_distance(&CodeSpec::new(3, ctx, CodeKind::Type4 { l: 2, t: 0, mu: 0, z: UnitPoly::Zero })).unwrap();
        assert_eq!((r.value, r.source.as_str()), (Some(2), "thm11/clause1"));
    }

    #[test]
    fn thm8_interval_and_gap() {
        let ctx = f1();
        // l = 6 sits in the gamma = 1 window [5, 6]; with t = 3, L = min(6, 5) = 5
        // and 6 <= 4 + 3/2 fails while 6 >= 4 + 3 fails too: a gap.
        let z = UnitPoly::Unit(vec![ctx.one(); 2]);
        let s = CodeSpec::new(3, ctx, CodeKind::Type3 { l: 6, t: 3, z });
        let r = lee_distance(&s).unwrap();
        assert_eq!(r.kind, DistanceKind::NotCovered);
        assert_eq!(r.source, "thm8/gap");
        // l = 5, t = 2: L = 5, 5 <= 4 + 1 gives the interval [4, 8].
        let z = UnitPoly::Unit(vec![ctx.one(); 3]);
        let s = CodeSpec::new(3, ctx, CodeKind::Type3 { l: 5, t: 2, z });
        let r = lee_distance(&s).unwrap();
        assert_eq!((r.kind, r.lo, r.hi, r.gamma), (DistanceKind::Bounds, Some(4), Some(8), Some(1)));
    }

    #[test]
    fn hamming_examples() {
        let ctx = f1();
        let s = CodeSpec::new(
            3,
            ctx,
            CodeKind::Type6 { alpha: 3, t1: 0, t2: 0, omega: 0, z1: UnitPoly::Zero, z2: UnitPoly::Zero },
        );
        assert_eq!(hamming_distance(&s).unwrap().value, Some(1));
        let sw = lee_bounds_sandwich(&s).unwrap();
        assert_eq!((sw.lo, sw.hi), (Some(1), Some(2)));
        let s = CodeSpec::new(
            3,
            ctx,
            CodeKind::Type8 {
                alpha: 6, beta: 4, omega: 1, t1: 0, t2: 0, t3: 0,
                z1: UnitPoly::Zero, z2: UnitPoly::Zero, z3: UnitPoly::Zero,
            },
        );
        assert_eq!(hamming_distance(&s).unwrap().value, Some(2));
    }

    #[test]
    fn every_nontrivial_pattern_has_one_theorem() {
        let pats = [Slot::Zero, Slot::T0, Slot::TPos];
        for tag in 2..=8u8 {
            let used = match tag {
                2 => 0,
                3 | 4 => 1,
                5 | 6 => 2,
                _ => 3,
            };
            let mut combos = vec![[Slot::Any; 3]];
            for k in 0..used {
                combos = combos
                    .into_iter()
                    .flat_map(|c| {
                        pats.iter().map(move |&p| {
                            let mut c = c;
                            c[k] = p;
                            c
                        })
                    })
                    .collect();
            }
            for c in combos {
                let n = theorems().iter().filter(|t| t.admits(tag, &c)).count();
                let want = if tag == 8 && c[1..] != [Slot::Zero; 2] {
                    0
                } else {
                    1
                };
                assert_eq!(n, want, "type {tag} pattern {c:?}");
            }
        }
    }

    #[test]
    fn exact_results_are_positive_and_bounds_ordered() {
        let ctx = f1();
        for sigma in 2..=3 {
            let specs = enumerate_specs(sigma, ctx, &[2, 3, 4, 5, 6, 7, 8], &EnumOptions { max_unit_combos: 4, seed: 1 });
            for s in &specs {
                let r = lee_distance(s).unwrap();
                match r.kind {
                    DistanceKind::Exact => assert!(r.value.unwrap() > 0, "{s}"),
                    DistanceKind::Bounds => assert!(r.lo.unwrap() <= r.hi.unwrap()),
                    DistanceKind::NotCovered => {}
                }
            }
        }
    }

    #[test]
    fn type2_is_twice_base_lee() {
        let ctx = f1();
        for sigma in 1..=5 {
            for l in 0..(1u32 << sigma) {
                let s = CodeSpec::new(sigma, ctx, CodeKind::Type2 { l });
                let r = lee_distance(&s).unwrap();
                assert_eq!(r.value, base_lee(l, sigma).unwrap().value.map(|v| 2 * v), "s={sigma} l={l}");
            }
        }
    }

    #[test]
    fn type3_zero_unit_is_thrice_base_lee() {
        let ctx = f1();
        for sigma in 1..=5 {
            for l in 0..(1u32 << sigma) {
                let s = CodeSpec::new(sigma, ctx, CodeKind::Type3 { l, t: 0, z: UnitPoly::Zero });
                let r = lee_distance(&s).unwrap();
                assert_eq!(r.value, base_lee(l, sigma).unwrap().value.map(|v| 3 * v));
            }
        }
    }

    #[test]
    fn json_shape() {
        let r = DistanceResult::exact(4, "thm8/clause2", None);
        assert_eq!(
            r.to_json(),
            r#"{"kind":"exact","value":4,"lo":null,"hi":null,"source":"thm8/clause2","gamma":null}"#
        );
        let back: DistanceResult = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
