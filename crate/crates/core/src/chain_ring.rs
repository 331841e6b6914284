//! The chain ring `R = GF(2^m)[u]/(u^3)`, its units, Lee weight and Gray image.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, FieldElement, TraceOrthogonalBasis};

/// `a + u*b + u^2*c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

impl RingElement {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement) -> Result<Self> {
        a.checked_add(b)?;
        a.checked_add(c)?;
        Ok(Self { a, b, c })
    }

    pub fn zero(ctx: FieldCtx) -> Self {
        Self {
            a: ctx.zero(),
            b: ctx.zero(),
            c: ctx.zero(),
        }
    }

    pub fn one(ctx: FieldCtx) -> Self {
        Self::scalar(ctx.one())
    }

    /// The nilpotent generator `u`.
    pub fn u(ctx: FieldCtx) -> Self {
        Self {
            a: ctx.zero(),
            b: ctx.one(),
            c: ctx.zero(),
        }
    }

    pub fn u2(ctx: FieldCtx) -> Self {
        Self {
            a: ctx.zero(),
            b: ctx.zero(),
            c: ctx.one(),
        }
    }

    /// Embeds a field element as `a + u*0 + u^2*0`.
    pub fn scalar(a: FieldElement) -> Self {
        let z = a.ctx().zero();
        Self { a, b: z, c: z }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.a.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// R is local with maximal ideal `<u>`.
    pub fn is_unit(&self) -> bool {
        !self.a.is_zero()
    }

    pub fn checked_mul(self, y: Self) -> Result<Self> {
        self.a.checked_mul(y.a)?;
        Ok(self * y)
    }

    /// `a^-1 * (1 + u*b/a + u^2*c/a)^-1`, the series truncated at `u^2`.
    pub fn inverse(self) -> Result<Self> {
        let ainv = self
            .a
            .inverse()
            .ok_or_else(|| Error::Domain(format!("{self} lies in <u> and is not a unit")))?;
        // (1 + u p + u^2 q)^-1 = 1 - u p + u^2 (p^2 - q); signs vanish in char 2
        let p = self.b * ainv;
        let q = self.c * ainv;
        Ok(Self {
            a: ainv,
            b: ainv * p,
            c: ainv * (p * p + q),
        })
    }

    /// The Gray triple `(a+b+c, b+c, b)`.
    pub fn gray_triple(&self) -> [FieldElement; 3] {
        [self.a + self.b + self.c, self.b + self.c, self.b]
    }

    /// `wt(a+b+c) + wt(b+c) + wt(b)` with respect to `tob`.
    pub fn lee_weight(&self, tob: &TraceOrthogonalBasis) -> u32 {
        self.gray_triple().iter().map(|&x| tob.lee_weight(x)).sum()
    }

    /// Gray image packed into the low `3m` bits: block 0 holds the
    /// coordinates of `a+b+c`, block 1 of `b+c`, block 2 of `b`.
    pub fn gray_packed(&self, tob: &TraceOrthogonalBasis) -> u64 {
        let m = tob.m();
        let [p, q, r] = self.gray_triple();
        u64::from(tob.coords_packed(p))
            | u64::from(tob.coords_packed(q)) << m
            | u64::from(tob.coords_packed(r)) << (2 * m)
    }

    /// Gray image as a bit vector of length `3m`.
    pub fn gray_map(&self, tob: &TraceOrthogonalBasis) -> Vec<u8> {
        let packed = self.gray_packed(tob);
        (0..3 * tob.m()).map(|i| (packed >> i & 1) as u8).collect()
    }

    /// Inverse of [`gray_packed`](Self::gray_packed).
    pub fn from_gray_packed(bits: u64, tob: &TraceOrthogonalBasis) -> Self {
        let m = tob.m();
        let mask = (1u64 << m) - 1;
        let p = tob.from_coords_packed((bits & mask) as u32);
        let q = tob.from_coords_packed((bits >> m & mask) as u32);
        let r = tob.from_coords_packed((bits >> (2 * m) & mask) as u32);
        Self {
            a: p + q,
            b: r,
            c: q + r,
        }
    }

    /// Every element of R, ordered by `(a, b, c)` bits.
    pub fn all(ctx: FieldCtx) -> impl Iterator<Item = Self> {
        let q = ctx.order();
        (0..q * q * q).map(move |i| Self {
            a: ctx.element(i % q).expect("in range"),
            b: ctx.element(i / q % q).expect("in range"),
            c: ctx.element(i / (q * q)).expect("in range"),
        })
    }

    /// Parses `a+u*b+u^2*c`; terms may be omitted, reordered or repeated
    /// (repeats add), and `u`/`u^2` alone mean coefficient one.
    pub fn parse(ctx: FieldCtx, s: &str) -> Result<Self> {
        let mut out = Self::zero(ctx);
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty ring element".into()));
        }
        for term in t.split('+') {
            let term = term.trim();
            let (power, coeff) = if let Some(rest) = term.strip_prefix("u^2") {
                (2, rest)
            } else if let Some(rest) = term.strip_prefix('u') {
                (1, rest)
            } else {
                (0, term)
            };
            let coeff = coeff.trim();
            let value = if power > 0 && coeff.is_empty() {
                ctx.one()
            } else if power > 0 {
                let c = coeff.strip_prefix('*').ok_or_else(|| {
                    Error::Parse(format!("expected '*' after u-power in term {term:?}"))
                })?;
                ctx.parse_element(c)?
            } else {
                ctx.parse_element(coeff)?
            };
            match power {
                0 => out.a += value,
                1 => out.b += value,
                _ => out.c += value,
            }
        }
        Ok(out)
    }
}

impl Add for RingElement {
    type Output = Self;

    fn add(self, y: Self) -> Self {
        Self {
            a: self.a + y.a,
            b: self.b + y.b,
            c: self.c + y.c,
        }
    }
}

impl AddAssign for RingElement {
    fn add_assign(&mut self, y: Self) {
        *self = *self + y;
    }
}

impl Mul for RingElement {
    type Output = Self;

    fn mul(self, y: Self) -> Self {
        Self {
            a: self.a * y.a,
            b: self.a * y.b + self.b * y.a,
            c: self.a * y.c + self.b * y.b + self.c * y.a,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+u*{}+u^2*{}", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::find_tob;

    fn setup(m: u32) -> (FieldCtx, TraceOrthogonalBasis) {
        let ctx = FieldCtx::new(m).unwrap();
        (ctx, find_tob(ctx).unwrap())
    }

    #[test]
    fn mul_examples() {
        let (f, _) = setup(1);
        let u = RingElement::u(f);
        let u2 = RingElement::u2(f);
        let one = RingElement::one(f);
        assert_eq!(u * u, u2);
        assert!((u * u2).is_zero());
        assert_eq!((one + u) * (one + u), one + u2);
    }

    #[test]
    fn inverse_examples() {
        let (f, _) = setup(1);
        let one = RingElement::one(f);
        let u = RingElement::u(f);
        assert_eq!(one.inverse().unwrap(), one);
        assert_eq!((one + u).inverse().unwrap(), one + u + RingElement::u2(f));
        assert!(matches!(u.inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn inverse_exhaustive() {
        for m in 1..=3 {
            let (f, _) = setup(m);
            for x in RingElement::all(f) {
                match x.inverse() {
                    Ok(y) => assert_eq!(x * y, RingElement::one(f)),
                    Err(_) => assert!(!x.is_unit()),
                }
                assert_eq!(x.is_unit(), !x.a.is_zero());
            }
        }
    }

    #[test]
    fn lee_weight_examples() {
        let (f, t) = setup(1);
        assert_eq!(RingElement::one(f).lee_weight(&t), 1);
        assert_eq!(RingElement::u(f).lee_weight(&t), 3);
        assert_eq!(RingElement::u2(f).lee_weight(&t), 2);
    }

    #[test]
    fn gray_map_examples() {
        let (f, t) = setup(1);
        assert_eq!(RingElement::zero(f).gray_map(&t), [0, 0, 0]);
        assert_eq!(RingElement::u2(f).gray_map(&t), [1, 1, 0]);
        for m in 1..=3 {
            let (f, t) = setup(m);
            let z1 = t.elems()[0];
            let x = RingElement { a: z1, b: z1, c: f.zero() };
            let mut want = vec![0u8; m as usize];
            want.extend(t.coords(z1));
            want.extend(t.coords(z1));
            assert_eq!(x.gray_map(&t), want);
            assert_eq!(x.lee_weight(&t), 2);
        }
    }

    #[test]
    fn gray_map_is_additive_and_weight_preserving() {
        for m in 1..=2 {
            let (f, t) = setup(m);
            let all: Vec<_> = RingElement::all(f).collect();
            for x in &all {
                let gx = x.gray_packed(&t);
                assert_eq!(gx.count_ones(), x.lee_weight(&t));
                assert_eq!(RingElement::from_gray_packed(gx, &t), *x);
                assert_eq!(x.lee_weight(&t) == 0, x.is_zero());
                assert!(x.lee_weight(&t) <= 3 * m);
                for y in &all {
                    assert_eq!((*x + *y).gray_packed(&t), gx ^ y.gray_packed(&t));
                }
            }
        }
    }

    #[test]
    fn weights_inside_maximal_ideal() {
        // For a = 0 the triple is (b+c, b+c, b): weight >= 3 needs c != b.
        // u + u^2 (b = c = 1) has weight 1.
        for m in 1..=2 {
            let (f, t) = setup(m);
            for x in RingElement::all(f).filter(|x| x.a.is_zero() && !x.b.is_zero()) {
                let w = x.lee_weight(&t);
                if x.c != x.b {
                    assert!(w >= 3, "{x}");
                } else {
                    assert_eq!(w, t.lee_weight(x.b), "{x}");
                }
            }
        }
        let (f, t) = setup(1);
        assert_eq!((RingElement::u(f) + RingElement::u2(f)).lee_weight(&t), 1);
    }

    #[test]
    fn parse_display_roundtrip() {
        let (f, _) = setup(2);
        let x = RingElement::parse(f, "0x1+u*0x2+u^2*0x3").unwrap();
        assert_eq!(x.to_string(), "0x1+u*0x2+u^2*0x3");
        assert_eq!(RingElement::parse(f, "u").unwrap(), RingElement::u(f));
        assert_eq!(RingElement::parse(f, " u^2 + 0x1 ").unwrap(), RingElement::one(f) + RingElement::u2(f));
        assert!(RingElement::parse(f, "u0x1").is_err());
        assert!(RingElement::parse(f, "0x9").is_err());
    }
}
