//! Arithmetic in GF(2^m), the absolute trace, and trace-orthogonal bases.
//!
//! Elements use the polynomial basis: bit `i` of [`FieldElement::bits`] is the
//! coefficient of `x^i` modulo the context's irreducible polynomial. Every
//! context for a given `m` uses the same modulus (see [`MODULI`]), so two
//! elements are compatible exactly when their degrees agree.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_M: u32 = 16;

/// Lexicographically least irreducible polynomial over F_2 of each degree
/// `1..=16`, top bit included.
pub const MODULI: [u32; 16] = [
    0x2, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b,
];

/// The field GF(2^m) together with its defining polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    m: u32,
    modulus: u32,
}

fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let d = poly_degree(p);
    for q in 2u32..(1 << (d / 2 + 1)) {
        let dq = poly_degree(q);
        if dq >= 1 && dq <= d / 2 && poly_rem(p, q) == 0 {
            return false;
        }
    }
    true
}

impl FieldCtx {
    /// The context for GF(2^m) with the shipped modulus.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > MAX_M {
            return Err(Error::Usage(format!(
                "extension degree m must lie in 1..={MAX_M}, got {m}"
            )));
        }
        Ok(Self {
            m,
            modulus: MODULI[(m - 1) as usize],
        })
    }

    /// A context with a caller-chosen modulus, checked for irreducibility.
    pub fn with_modulus(modulus: u32) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Usage(format!("modulus {modulus:#x} has degree 0")));
        }
        let m = poly_degree(modulus);
        if m > MAX_M {
            return Err(Error::Usage(format!("modulus degree {m} exceeds {MAX_M}")));
        }
        if !is_irreducible(modulus) {
            return Err(Error::Usage(format!("modulus {modulus:#b} is reducible")));
        }
        Ok(Self { m, modulus })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements.
    pub fn order(&self) -> u32 {
        1 << self.m
    }

    /// Modulus rendered as a bit string, most significant coefficient first.
    pub fn modulus_bits(&self) -> String {
        format!("{:b}", self.modulus)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { bits: 0, ctx: *self }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { bits: 1, ctx: *self }
    }

    /// Element from its polynomial-basis bit pattern.
    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if bits >= self.order() {
            return Err(Error::Usage(format!(
                "element {bits:#x} does not fit in GF(2^{})",
                self.m
            )));
        }
        Ok(FieldElement { bits, ctx: *self })
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |bits| FieldElement { bits, ctx: *self })
    }

    /// Parses the textual form `0x..` (hex) into an element.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let t = s.trim();
        let digits = t
            .strip_prefix("0x")
            .or_else(|| t.strip_prefix("0X"))
            .ok_or_else(|| Error::Parse(format!("field element {t:?} lacks 0x prefix")))?;
        let bits = u32::from_str_radix(digits, 16)
            .map_err(|e| Error::Parse(format!("field element {t:?}: {e}")))?;
        self.element(bits)
    }

    fn mul_bits(&self, a: u32, b: u32) -> u32 {
        let mut acc: u64 = 0;
        let a = a as u64;
        let mut b = b;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        let m = self.m as u64;
        let modulus = self.modulus as u64;
        for d in (m..(2 * m)).rev() {
            if acc >> d & 1 == 1 {
                acc ^= modulus << (d - m);
            }
        }
        acc as u32
    }

    /// Bit mask `t` with `Tr(y) = parity(y & t)`.
    pub fn trace_mask(&self) -> u32 {
        (0..self.m)
            .filter(|&i| self.trace_bits(1 << i) == 1)
            .fold(0, |acc, i| acc | 1 << i)
    }

    fn trace_bits(&self, x: u32) -> u32 {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.m {
            acc ^= y;
            y = self.mul_bits(y, y);
        }
        debug_assert!(acc <= 1, "trace left the prime field");
        acc
    }
}

/// An element of GF(2^m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    bits: u32,
    ctx: FieldCtx,
}

impl FieldElement {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.m,
                right: other.ctx.m,
            });
        }
        Ok(())
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        self.check(&other)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            ctx: self.ctx,
        })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        self.check(&other)?;
        Ok(Self {
            bits: self.ctx.mul_bits(self.bits, other.bits),
            ctx: self.ctx,
        })
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `x^(2^m - 2)`; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(self.pow((1u64 << self.ctx.m) - 2))
    }

    /// `Tr(x) = x + x^2 + ... + x^(2^(m-1))`, an element of the prime field.
    pub fn trace(self) -> Self {
        Self {
            bits: self.ctx.trace_bits(self.bits),
            ctx: self.ctx,
        }
    }
}

impl Add for FieldElement {
    type Output = Self;

    /// Panics when the operands come from different fields.
    fn add(self, rhs: Self) -> Self {
        match self.checked_add(rhs) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Mul for FieldElement {
    type Output = Self;

    /// Panics when the operands come from different fields.
    fn mul(self, rhs: Self) -> Self {
        match self.checked_mul(rhs) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.bits)
    }
}

/// A basis `{z_1, ..., z_m}` of GF(2^m) over F_2 with `Tr(z_i z_j) = [i = j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TraceOrthogonalBasis {
    elems: Vec<FieldElement>,
    // masks[i] has Tr(y * z_i) = parity(y & masks[i])
    masks: Vec<u32>,
    ctx: FieldCtx,
}

impl TraceOrthogonalBasis {
    /// Checks both basis invariants and builds the coordinate masks.
    pub fn new(ctx: FieldCtx, elems: Vec<FieldElement>) -> Result<Self> {
        if elems.len() != ctx.m as usize {
            return Err(Error::Usage(format!(
                "a basis of GF(2^{}) needs {} elements, got {}",
                ctx.m,
                ctx.m,
                elems.len()
            )));
        }
        for (i, zi) in elems.iter().enumerate() {
            zi.check(&ctx.one())?;
            for (j, zj) in elems.iter().enumerate() {
                let want = u32::from(i == j);
                if (*zi * *zj).trace().bits != want {
                    return Err(Error::Usage(format!(
                        "Tr({zi} * {zj}) != {want}: not trace orthogonal"
                    )));
                }
            }
        }
        // Orthonormal under a nondegenerate form implies independence; checked
        // anyway so a bad input can never produce a singular coordinate map.
        if gf2_rank(elems.iter().map(|e| e.bits)) != ctx.m as usize {
            return Err(Error::Usage("basis elements are dependent".into()));
        }
        let tmask = ctx.trace_mask();
        let masks = elems
            .iter()
            .map(|z| {
                (0..ctx.m)
                    .filter(|&i| (ctx.mul_bits(1 << i, z.bits) & tmask).count_ones() % 2 == 1)
                    .fold(0, |acc, i| acc | 1 << i)
            })
            .collect();
        Ok(Self { elems, masks, ctx })
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn elems(&self) -> &[FieldElement] {
        &self.elems
    }

    pub fn m(&self) -> u32 {
        self.ctx.m
    }

    /// Coordinates of `x`, packed: bit `i` is the coefficient of `z_(i+1)`.
    pub fn coords_packed(&self, x: FieldElement) -> u32 {
        debug_assert_eq!(x.ctx, self.ctx);
        self.masks
            .iter()
            .enumerate()
            .filter(|(_, &mask)| (x.bits & mask).count_ones() % 2 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Inverse of [`coords_packed`](Self::coords_packed).
    pub fn from_coords_packed(&self, coords: u32) -> FieldElement {
        self.elems
            .iter()
            .enumerate()
            .filter(|(i, _)| coords >> i & 1 == 1)
            .fold(self.ctx.zero(), |acc, (_, z)| acc + *z)
    }

    /// Coordinate vector of `x`; `coords[i] = Tr(x z_(i+1))`.
    pub fn coords(&self, x: FieldElement) -> Vec<u8> {
        let packed = self.coords_packed(x);
        (0..self.ctx.m).map(|i| (packed >> i & 1) as u8).collect()
    }

    pub fn from_coords(&self, coords: &[u8]) -> FieldElement {
        let packed = coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i);
        self.from_coords_packed(packed)
    }

    /// Lee weight of a field element: the number of nonzero coordinates.
    pub fn lee_weight(&self, x: FieldElement) -> u32 {
        self.coords_packed(x).count_ones()
    }

    /// Gram matrix `[Tr(z_i z_j)]` as rows of 0/1.
    pub fn gram(&self) -> Vec<Vec<u8>> {
        self.elems
            .iter()
            .map(|zi| {
                self.elems
                    .iter()
                    .map(|zj| (*zi * *zj).trace().bits as u8)
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for TraceOrthogonalBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn gf2_rank(rows: impl Iterator<Item = u32>) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for mut r in rows {
        for b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Deterministic search for a trace-orthogonal basis.
///
/// Greedy: each step takes the smallest element with trace one that is
/// orthogonal to everything chosen so far. If the remaining complement turns
/// alternating the search backtracks, so the result is the lexicographically
/// first orthonormal sequence.
pub fn find_tob(ctx: FieldCtx) -> Result<TraceOrthogonalBasis> {
    let tmask = ctx.trace_mask();
    let m = ctx.m as usize;
    // pair_mask[z] for chosen z: Tr(y z) = parity(y & pair_mask)
    let pair_mask = |z: u32| -> u32 {
        (0..ctx.m)
            .filter(|&i| (ctx.mul_bits(1 << i, z) & tmask).count_ones() % 2 == 1)
            .fold(0, |acc, i| acc | 1 << i)
    };

    fn dfs(
        ctx: &FieldCtx,
        m: usize,
        tmask: u32,
        chosen: &mut Vec<u32>,
        masks: &mut Vec<u32>,
        pair_mask: &dyn Fn(u32) -> u32,
        budget: &mut u64,
    ) -> bool {
        if chosen.len() == m {
            return true;
        }
        let start = chosen.last().map_or(1, |&z| z + 1);
        for y in start..ctx.order() {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            // Tr(y^2) = Tr(y)
            if (y & tmask).count_ones() % 2 == 0 {
                continue;
            }
            if masks.iter().any(|&mk| (y & mk).count_ones() % 2 == 1) {
                continue;
            }
            chosen.push(y);
            masks.push(pair_mask(y));
            if dfs(ctx, m, tmask, chosen, masks, pair_mask, budget) {
                return true;
            }
            chosen.pop();
            masks.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(m);
    let mut masks = Vec::with_capacity(m);
    let mut budget: u64 = 1 << 32;
    if !dfs(&ctx, m, tmask, &mut chosen, &mut masks, &pair_mask, &mut budget) {
        return Err(Error::Internal(format!(
            "no trace-orthogonal basis found for GF(2^{})",
            ctx.m
        )));
    }
    let elems = chosen.into_iter().map(|b| FieldElement { bits: b, ctx }).collect();
    TraceOrthogonalBasis::new(ctx, elems)
}

/// Every trace-orthogonal basis as a sorted element set, for small fields.
pub fn all_tob_sets(ctx: FieldCtx) -> Result<Vec<TraceOrthogonalBasis>> {
    if ctx.m > 5 {
        return Err(Error::Capacity(format!(
            "exhaustive basis listing is limited to m <= 5, got {}",
            ctx.m
        )));
    }
    let tmask = ctx.trace_mask();
    let ones: Vec<u32> = (1..ctx.order())
        .filter(|&y| (y & tmask).count_ones() % 2 == 1)
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(
        ctx: &FieldCtx,
        ones: &[u32],
        from: usize,
        stack: &mut Vec<u32>,
        out: &mut Vec<TraceOrthogonalBasis>,
    ) {
        if stack.len() == ctx.m as usize {
            let elems = stack.iter().map(|&b| FieldElement { bits: b, ctx: *ctx }).collect();
            if let Ok(tob) = TraceOrthogonalBasis::new(*ctx, elems) {
                out.push(tob);
            }
            return;
        }
        for i in from..ones.len() {
            let y = ones[i];
            if stack
                .iter()
                .all(|&z| ctx.trace_bits(ctx.mul_bits(y, z)) == 0)
            {
                stack.push(y);
                rec(ctx, ones, i + 1, stack, out);
                stack.pop();
            }
        }
    }
    rec(&ctx, &ones, 0, &mut stack, &mut out);
    Ok(out)
}
