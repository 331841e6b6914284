//! Brute-force ground truth over the Gray image.
//!
//! A code is held as the binary row space of the Gray images of its
//! elements. Coordinate `i` of a word of `S` occupies bits
//! `[3m*i, 3m*(i+1))`, holding the basis coordinates of `a+b+c`, `b+c` and
//! `b` in that order.

mod closure;
mod search;

use std::fmt;

use serde::Serialize;

use crate::chain_ring::RingElement;
use crate::codespec::{CodeKind, CodeSpec, DerivedParams};
use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, TraceOrthogonalBasis};
use crate::polyring::PolyS;

pub use closure::{closure_elements, closure_min_lee, ClosureReport, CLOSURE_MAX_K};
pub use search::{min_weights, min_weights_with_budget, OracleReport, SearchMethod};

/// Largest Gray image length handled by the oracle.
pub const MAX_NBITS: u32 = 96;
/// Largest dimension enumerated in Gray-code order.
pub const MAX_ENUM_K: u32 = 26;
pub const LAYOUT: &str = "coord-major";

/// Gray image of a word of `S` under `tob`.
pub fn gray_word(f: &PolyS, tob: &TraceOrthogonalBasis) -> u128 {
    let block = 3 * tob.m();
    f.coeffs()
        .iter()
        .enumerate()
        .fold(0u128, |acc, (i, c)| {
            acc | u128::from(c.gray_packed(tob)) << (block * i as u32)
        })
}

/// Preimage of a Gray word.
pub fn word_from_gray(bits: u128, sigma: u32, tob: &TraceOrthogonalBasis) -> Result<PolyS> {
    let block = 3 * tob.m();
    let mask = (1u128 << block) - 1;
    let coeffs = (0..1u32 << sigma)
        .map(|i| RingElement::from_gray_packed((bits >> (block * i) & mask) as u64, tob))
        .collect();
    PolyS::from_coeffs(tob.ctx(), coeffs)
}

/// Binary row space in reduced row-echelon form.
///
/// Each row's pivot is its highest set bit; rows are sorted by decreasing
/// pivot and every pivot column is clear in all other rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySpan {
    sigma: u32,
    tob: TraceOrthogonalBasis,
    rows: Vec<u128>,
}

impl BinarySpan {
    pub fn empty(sigma: u32, tob: TraceOrthogonalBasis) -> Result<Self> {
        let nbits = 3 * tob.m() * (1 << sigma);
        if nbits > MAX_NBITS {
            return Err(Error::Capacity(format!(
                "Gray image length 3*m*n = {nbits} exceeds {MAX_NBITS}"
            )));
        }
        Ok(Self {
            sigma,
            tob,
            rows: Vec::new(),
        })
    }

    /// Span of `{gray(beta * u^e * x^i * g)}` over the given generators,
    /// with `beta` running over the polynomial basis of the field.
    pub fn from_generators(
        sigma: u32,
        tob: &TraceOrthogonalBasis,
        gens: &[PolyS],
    ) -> Result<Self> {
        let mut span = Self::empty(sigma, tob.clone())?;
        let ctx = tob.ctx();
        let scalars = field_basis(ctx)?;
        for g in gens {
            if g.ctx() != ctx || g.sigma() != sigma {
                return Err(Error::Shape("generator does not live in this ring".into()));
            }
            let mut layer = g.clone();
            for _ in 0..3 {
                for i in 0..span.n() {
                    let shifted = layer.shift(i);
                    for beta in &scalars {
                        span.insert(gray_word(&shifted.scale(*beta), tob));
                    }
                }
                layer = layer.scale(RingElement::u(ctx));
            }
        }
        span.check_closure()?;
        Ok(span)
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn n(&self) -> usize {
        1 << self.sigma
    }

    pub fn m(&self) -> u32 {
        self.tob.m()
    }

    pub fn nbits(&self) -> u32 {
        3 * self.m() * (1 << self.sigma)
    }

    pub fn k(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn tob(&self) -> &TraceOrthogonalBasis {
        &self.tob
    }

    /// `v` reduced against the basis; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: u128) -> u128 {
        for &r in &self.rows {
            let pivot = 127 - r.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: u128) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let pivot = 127 - v.leading_zeros();
        for r in &mut self.rows {
            if *r >> pivot & 1 == 1 {
                *r ^= v;
            }
        }
        let at = self
            .rows
            .iter()
            .position(|r| 127 - r.leading_zeros() < pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        true
    }

    pub fn contains_bits(&self, v: u128) -> bool {
        self.reduce(v) == 0
    }

    pub fn contains(&self, f: &PolyS) -> Result<bool> {
        if f.ctx() != self.tob.ctx() || f.sigma() != self.sigma {
            return Err(Error::Shape(format!(
                "word over (sigma = {}, m = {}) tested against a span over (sigma = {}, m = {})",
                f.sigma(),
                f.ctx().m(),
                self.sigma,
                self.m()
            )));
        }
        Ok(self.contains_bits(gray_word(f, &self.tob)))
    }

    /// Preimages of the basis rows.
    pub fn row_words(&self) -> Result<Vec<PolyS>> {
        self.rows
            .iter()
            .map(|&r| word_from_gray(r, self.sigma, &self.tob))
            .collect()
    }

    /// Multiplication by `x`, `u` and a primitive field element maps every
    /// row back into the span.
    pub fn check_closure(&self) -> Result<()> {
        let ctx = self.tob.ctx();
        let mut mults = vec![("u", RingElement::u(ctx))];
        if ctx.m() > 1 {
            mults.push(("a field generator", RingElement::scalar(ctx.element(0b10)?)));
        }
        for f in self.row_words()? {
            if !self.contains_bits(gray_word(&f.shift(1), &self.tob)) {
                return Err(Error::Internal(format!("span not closed under x at {f}")));
            }
            for (name, r) in &mults {
                if !self.contains_bits(gray_word(&f.scale(*r), &self.tob)) {
                    return Err(Error::Internal(format!(
                        "span not closed under multiplication by {name} at {f}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The span modulo its `u^2`-layer: each coordinate keeps `(a | b)`,
    /// read off the Gray block as `(p xor q | r)`.
    pub fn project_mod_u2(&self) -> ProjectedSpan {
        let m = self.m();
        let mut out = ProjectedSpan {
            block: 2 * m,
            rows: Vec::new(),
        };
        for &r in &self.rows {
            out.insert(project_word(r, m, self.n()));
        }
        out
    }

    pub fn serialize(&self) -> String {
        let digits = self.nbits().div_ceil(4) as usize;
        let tob: Vec<String> = self.tob.elems().iter().map(|e| e.to_string()).collect();
        let mut s = format!(
            "span sigma={} m={} layout={} tob={} k={}\n",
            self.sigma,
            self.m(),
            LAYOUT,
            tob.join(","),
            self.k()
        );
        for r in &self.rows {
            s.push_str(&format!("{r:0digits$x}\n"));
        }
        s
    }

    pub fn deserialize(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty span file".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("span") {
            return Err(Error::Parse("span header must start with 'span'".into()));
        }
        let (mut sigma, mut m, mut tob, mut k) = (None, None, None, None);
        for kv in fields {
            let (key, val) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("malformed header field '{kv}'")))?;
            let num = |v: &str| {
                v.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("header field {key}: bad number '{v}'")))
            };
            match key {
                "sigma" => sigma = Some(num(val)?),
                "m" => m = Some(num(val)?),
                "k" => k = Some(num(val)?),
                "tob" => tob = Some(val.to_string()),
                "layout" if val == LAYOUT => {}
                "layout" => return Err(Error::Parse(format!("unsupported layout '{val}'"))),
                _ => return Err(Error::Parse(format!("unknown header field '{key}'"))),
            }
        }
        let missing = |f: &str| Error::Parse(format!("span header lacks '{f}'"));
        let (sigma, m, k) = (
            sigma.ok_or_else(|| missing("sigma"))?,
            m.ok_or_else(|| missing("m"))?,
            k.ok_or_else(|| missing("k"))?,
        );
        let ctx = FieldCtx::new(m)?;
        let elems = tob
            .ok_or_else(|| missing("tob"))?
            .split(',')
            .map(|e| ctx.parse_element(e))
            .collect::<Result<Vec<_>>>()?;
        let mut span = Self::empty(sigma, TraceOrthogonalBasis::new(ctx, elems)?)?;
        let nbits = span.nbits();
        for line in lines {
            let v = u128::from_str_radix(line.trim(), 16)
                .map_err(|_| Error::Parse(format!("bad span row '{line}'")))?;
            if nbits < 128 && v >> nbits != 0 {
                return Err(Error::Parse(format!("span row '{line}' exceeds {nbits} bits")));
            }
            span.insert(v);
        }
        if span.k() != k {
            return Err(Error::Parse(format!(
                "header says k = {k} but the rows have rank {}",
                span.k()
            )));
        }
        Ok(span)
    }
}

impl fmt::Display for BinarySpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

fn field_basis(ctx: FieldCtx) -> Result<Vec<RingElement>> {
    (0..ctx.m())
        .map(|j| Ok(RingElement::scalar(ctx.element(1 << j)?)))
        .collect()
}

fn project_word(v: u128, m: u32, n: usize) -> u128 {
    let mask = (1u128 << m) - 1;
    let mut out = 0u128;
    for i in 0..n as u32 {
        let blk = v >> (3 * m * i);
        let (p, q, r) = (blk & mask, blk >> m & mask, blk >> (2 * m) & mask);
        out |= ((p ^ q) | r << m) << (2 * m * i);
    }
    out
}

/// Row space of the `(a | b)` parts of a code.
#[derive(Debug, Clone)]
pub struct ProjectedSpan {
    block: u32,
    rows: Vec<u128>,
}

impl ProjectedSpan {
    fn reduce(&self, mut v: u128) -> u128 {
        for &r in &self.rows {
            if v >> (127 - r.leading_zeros()) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    fn insert(&mut self, v: u128) {
        let v = self.reduce(v);
        if v == 0 {
            return;
        }
        let pivot = 127 - v.leading_zeros();
        for r in &mut self.rows {
            if *r >> pivot & 1 == 1 {
                *r ^= v;
            }
        }
        self.rows.push(v);
    }

    pub fn k(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Whether some codeword has `(a, b)` parts `(0, b)` coordinatewise,
    /// with `b` given by its basis coordinates packed per coordinate.
    fn contains_b_part(&self, b_coords: &[u32]) -> bool {
        let m = self.block / 2;
        let v = b_coords
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &c)| acc | u128::from(c) << (self.block * i as u32 + m));
        self.reduce(v) == 0
    }
}

/// The two shapes of smallest-exponent question asked about a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentForm {
    /// `u^2 (x+1)^e` lies in the code.
    U2,
    /// `u (x+1)^e + u^2 g(x)` lies in the code for some `g`.
    UPlusFree,
}

/// Least `e` in `[0, n]` for which the form holds; `e = n` always does,
/// since `(x+1)^n = 0`.
pub fn smallest_exponent(span: &BinarySpan, form: ExponentForm) -> Result<u32> {
    let ctx = span.tob.ctx();
    let n = span.n();
    match form {
        ExponentForm::U2 => {
            for e in 0..n {
                let f = PolyS::x_plus_one_pow(ctx, span.sigma, e)?.scale(RingElement::u2(ctx));
                if span.contains(&f)? {
                    return Ok(e as u32);
                }
            }
        }
        ExponentForm::UPlusFree => {
            let proj = span.project_mod_u2();
            let one = span.tob.coords_packed(ctx.one());
            for e in 0..n {
                let f = PolyS::x_plus_one_pow(ctx, span.sigma, e)?;
                let b: Vec<u32> = f
                    .coeffs()
                    .iter()
                    .map(|c| if c.a.is_zero() { 0 } else { one })
                    .collect();
                if proj.contains_b_part(&b) {
                    return Ok(e as u32);
                }
            }
        }
    }
    Ok(n as u32)
}

/// Span of the whole code described by `spec`.
pub fn build_span(spec: &CodeSpec, tob: &TraceOrthogonalBasis) -> Result<BinarySpan> {
    if tob.ctx() != spec.ctx {
        return Err(Error::ContextMismatch {
            left: spec.ctx.m(),
            right: tob.m(),
        });
    }
    BinarySpan::from_generators(spec.sigma, tob, &spec.generators()?)
}

pub fn membership(f: &PolyS, span: &BinarySpan) -> Result<bool> {
    span.contains(f)
}

/// The parameters `L, U, V, W, L1` recomputed from their definitions, each
/// against the sub-ideal it is defined on.
pub fn smallest_params_oracle(spec: &CodeSpec, tob: &TraceOrthogonalBasis) -> Result<DerivedParams> {
    spec.validated()?;
    let g = spec.raw_generators()?;
    let sub = |range: std::ops::Range<usize>| BinarySpan::from_generators(spec.sigma, tob, &g[range]);
    let u2 = |s: &BinarySpan| smallest_exponent(s, ExponentForm::U2).map(Some);
    let uf = |s: &BinarySpan| smallest_exponent(s, ExponentForm::UPlusFree).map(Some);
    let mut d = DerivedParams::default();
    match &spec.kind {
        CodeKind::Type1(_) | CodeKind::Type2 { .. } => {}
        CodeKind::Type3 { .. } | CodeKind::Type4 { .. } => {
            d.l = u2(&sub(0..1)?)?;
        }
        CodeKind::Type5 { .. } | CodeKind::Type6 { .. } => {
            let c5 = sub(0..1)?;
            d.u = uf(&c5)?;
            d.v = u2(&c5)?;
        }
        CodeKind::Type7 { .. } => {
            d.u = uf(&sub(0..1)?)?;
            d.w = u2(&sub(0..2)?)?;
        }
        CodeKind::Type8 { .. } => {
            d.u = uf(&sub(0..1)?)?;
            d.w = u2(&sub(0..2)?)?;
            d.l1 = u2(&sub(1..2)?)?;
        }
    }
    Ok(d)
}

/// Minimum Lee weight of the code under each basis in turn.
pub fn min_weights_multibasis(spec: &CodeSpec, bases: &[TraceOrthogonalBasis]) -> Result<Vec<u32>> {
    bases
        .iter()
        .map(|b| Ok(min_weights(&build_span(spec, b)?)?.d_lee))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SpanSummary {
    pub sigma: u32,
    pub m: u32,
    pub nbits: u32,
    pub k: u32,
}

impl From<&BinarySpan> for SpanSummary {
    fn from(s: &BinarySpan) -> Self {
        Self {
            sigma: s.sigma,
            m: s.m(),
            nbits: s.nbits(),
            k: s.k(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codespec::{smallest_params_formula, EnumOptions, TrivialIdeal, UnitPoly};
    use crate::gf2m::find_tob;

    fn setup(m: u32) -> (FieldCtx, TraceOrthogonalBasis) {
        let ctx = FieldCtx::new(m).unwrap();
        (ctx, find_tob(ctx).unwrap())
    }

    #[test]
    fn dimensions() {
        let (ctx, tob) = setup(1);
        let zero = CodeSpec::new(2, ctx, CodeKind::Type1(TrivialIdeal::Zero));
        assert_eq!(build_span(&zero, &tob).unwrap().k(), 0);
        let one = CodeSpec::new(2, ctx, CodeKind::Type1(TrivialIdeal::One));
        assert_eq!(build_span(&one, &tob).unwrap().k(), 12);
        let u2 = CodeSpec::new(2, ctx, CodeKind::Type2 { l: 0 });
        assert_eq!(build_span(&u2, &tob).unwrap().k(), 4);
        // |<u^2 (x+1)^l>| = q^(n-l)
        let (ctx2, tob2) = setup(2);
        for l in 0..8 {
            let s = CodeSpec::new(3, ctx2, CodeKind::Type2 { l });
            assert_eq!(build_span(&s, &tob2).unwrap().k(), 2 * (8 - l));
        }
    }

    #[test]
    fn rref_is_canonical() {
        let (ctx, tob) = setup(1);
        let s = CodeSpec::new(2, ctx, CodeKind::Type3 { l: 1, t: 0, z: UnitPoly::one(ctx) });
        let a = build_span(&s, &tob).unwrap();
        let mut b = BinarySpan::empty(2, tob.clone()).unwrap();
        for &r in a.rows().iter().rev() {
            b.insert(r ^ a.rows()[0]);
        }
        b.insert(a.rows()[0]);
        assert_eq!(a, b);
        for (i, &r) in a.rows().iter().enumerate() {
            let p = 127 - r.leading_zeros();
            for (j, &o) in a.rows().iter().enumerate() {
                assert_eq!(o >> p & 1 == 1, i == j);
            }
        }
    }

    #[test]
    fn gray_word_roundtrip() {
        let (ctx, tob) = setup(2);
        let f = PolyS::parse(ctx, 2, "(0x1+u*0x1)*x^0 + (u^2*0x2)*x^1 + (0x3+u*0x1)*x^3").unwrap();
        let w = gray_word(&f, &tob);
        assert_eq!(w.count_ones(), f.lee_weight(&tob));
        assert_eq!(word_from_gray(w, 2, &tob).unwrap(), f);
    }

    #[test]
    fn membership_examples() {
        let (ctx, tob) = setup(1);
        let s = CodeSpec::new(2, ctx, CodeKind::Type2 { l: 0 });
        let span = build_span(&s, &tob).unwrap();
        for g in s.generators().unwrap() {
            assert!(membership(&g, &span).unwrap());
        }
        let one = PolyS::constant(ctx, 2, RingElement::one(ctx)).unwrap();
        assert!(!membership(&one, &span).unwrap());
        let wrong = PolyS::zero(ctx, 3).unwrap();
        assert!(membership(&wrong, &span).is_err());
    }

    #[test]
    fn smallest_exponent_examples() {
        let (ctx, tob) = setup(1);
        let s = CodeSpec::new(3, ctx, CodeKind::Type3 { l: 5, t: 1, z: UnitPoly::one(ctx) });
        assert_eq!(smallest_params_oracle(&s, &tob).unwrap().l, Some(4));
        let s = CodeSpec::new(
            3,
            ctx,
            CodeKind::Type5 { alpha: 3, t1: 0, t2: 0, z1: UnitPoly::Zero, z2: UnitPoly::Zero },
        );
        let d = smallest_params_oracle(&s, &tob).unwrap();
        assert_eq!((d.u, d.v), (Some(3), Some(3)));
        let s = CodeSpec::new(2, ctx, CodeKind::Type2 { l: 0 });
        let span = build_span(&s, &tob).unwrap();
        assert_eq!(smallest_exponent(&span, ExponentForm::U2).unwrap(), 0);
        assert_eq!(smallest_exponent(&span, ExponentForm::UPlusFree).unwrap(), 4);
    }

    #[test]
    fn exponents_agree_with_closure() {
        let (ctx, tob) = setup(1);
        let specs = crate::codespec::enumerate_specs(2, ctx, &[3, 4, 5, 6, 7, 8], &EnumOptions::default());
        let mut checked = 0;
        for s in &specs {
            let g = s.generators().unwrap();
            let ranges: &[(usize, usize)] = match s.type_tag() {
                3..=6 => &[(0, 1)],
                _ => &[(0, 1), (0, 2), (1, 2)],
            };
            for &(a, b) in ranges {
                let Ok(set) = closure_elements(ctx, 2, &g[a..b]) else { continue };
                let span = BinarySpan::from_generators(2, &tob, &g[a..b]).unwrap();
                assert_eq!(set.len() as u64, 1u64 << span.k());
                let by_set = (0..=4)
                    .find(|&e| {
                        let f = PolyS::x_plus_one_pow(ctx, 2, e).unwrap().scale(RingElement::u2(ctx));
                        set.contains(&f)
                    })
                    .unwrap() as u32;
                assert_eq!(smallest_exponent(&span, ExponentForm::U2).unwrap(), by_set);
                let by_set = (0..=4)
                    .find(|&e| {
                        let f = PolyS::x_plus_one_pow(ctx, 2, e).unwrap().scale(RingElement::u(ctx));
                        set.iter().any(|c| {
                            let d = &f + c;
                            d.coeffs().iter().all(|x| x.a.is_zero() && x.b.is_zero())
                        })
                    })
                    .unwrap() as u32;
                assert_eq!(smallest_exponent(&span, ExponentForm::UPlusFree).unwrap(), by_set);
                checked += 1;
            }
        }
        assert!(checked > 50, "{checked}");
    }

    #[test]
    fn closed_forms_l_u_l1_match_definitions() {
        let (ctx, tob) = setup(1);
        for sigma in [2, 3] {
            let specs = crate::codespec::enumerate_specs(sigma, ctx, &[3, 4, 5, 6, 7, 8], &EnumOptions::default());
            for s in &specs {
                let (a, b) = (smallest_params_oracle(s, &tob).unwrap(), smallest_params_formula(s));
                assert_eq!((a.l, a.u, a.l1), (b.l, b.u, b.l1), "{}", s.to_json());
            }
        }
    }

    // u*g - (x+1)^2*g = u^2 for g = (x+1)^2 + u at n = 4, so V = 0 here,
    // below the closed form min{alpha, n + T1 - alpha} = 2.
    #[test]
    fn v_counterexample() {
        let (ctx, tob) = setup(1);
        let s = CodeSpec::new(
            2,
            ctx,
            CodeKind::Type5 { alpha: 2, t1: 0, t2: 0, z1: UnitPoly::one(ctx), z2: UnitPoly::Zero },
        );
        let g = &s.generators().unwrap()[0];
        let xp2 = PolyS::x_plus_one_pow(ctx, 2, 2).unwrap();
        let u2 = PolyS::constant(ctx, 2, RingElement::u2(ctx)).unwrap();
        assert_eq!(&g.scale(RingElement::u(ctx)) + &(&xp2 * g), u2);
        assert_eq!(smallest_params_oracle(&s, &tob).unwrap().v, Some(0));
        assert_eq!(smallest_params_formula(&s).v, Some(2));
    }

    #[test]
    fn serialization_roundtrip() {
        let (ctx, tob) = setup(2);
        let s = CodeSpec::new(2, ctx, CodeKind::Type3 { l: 1, t: 0, z: UnitPoly::one(ctx) });
        let span = build_span(&s, &tob).unwrap();
        let text = span.serialize();
        assert!(text.starts_with("span sigma=2 m=2 layout=coord-major tob=0x2,0x3 k="));
        assert_eq!(BinarySpan::deserialize(&text).unwrap(), span);
        assert!(BinarySpan::deserialize("span sigma=2 m=1 layout=row tob=0x1 k=0").is_err());
        assert!(BinarySpan::deserialize("span sigma=2 m=1 layout=coord-major tob=0x1 k=1").is_err());
    }

    #[test]
    fn capacity() {
        let (_, tob) = setup(2);
        assert!(matches!(BinarySpan::empty(5, tob), Err(Error::Capacity(_))));
    }
}
