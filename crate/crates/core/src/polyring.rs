//! The ambient ring `S = R[x]/(x^n - 1)` with `n = 2^sigma`.
//!
//! Polynomials are stored in the power basis. The `(x+1)`-adic coefficients
//! are computed on demand and cached; since `C(j, k)` is odd exactly when the
//! bits of `k` are a subset of those of `j`, both directions of the change of
//! basis are the same superset-XOR transform.

use std::fmt;
use std::ops::{Add, Mul};
use std::sync::OnceLock;

use crate::chain_ring::RingElement;
use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, TraceOrthogonalBasis};

/// Largest `sigma` accepted by the constructors (`n <= 32`).
pub const MAX_SIGMA: u32 = 5;

/// Element of `S`.
#[derive(Debug, Clone)]
pub struct PolyS {
    ctx: FieldCtx,
    coeffs: Vec<RingElement>,
    xp1: OnceLock<Vec<RingElement>>,
}

/// Coefficients in the basis `{(x+1)^k : 0 <= k < n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XPlusOneCoeffs {
    ctx: FieldCtx,
    coeffs: Vec<RingElement>,
}

/// In-place superset-XOR transform; an involution.
fn sierpinski(v: &mut [RingElement]) {
    let n = v.len();
    let mut bit = 1;
    while bit < n {
        for i in 0..n {
            if i & bit == 0 {
                let hi = v[i | bit];
                v[i] += hi;
            }
        }
        bit <<= 1;
    }
}

fn check_len(len: usize) -> Result<u32> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::Shape(format!(
            "code length must be 2^sigma with sigma >= 1, got {len}"
        )));
    }
    let sigma = len.trailing_zeros();
    if sigma > MAX_SIGMA {
        return Err(Error::Capacity(format!(
            "sigma = {sigma} exceeds the supported maximum {MAX_SIGMA}"
        )));
    }
    Ok(sigma)
}

impl PolyS {
    pub fn from_coeffs(ctx: FieldCtx, coeffs: Vec<RingElement>) -> Result<Self> {
        check_len(coeffs.len())?;
        if let Some(bad) = coeffs.iter().find(|c| c.ctx() != ctx) {
            return Err(Error::ContextMismatch {
                left: ctx.m(),
                right: bad.ctx().m(),
            });
        }
        Ok(Self {
            ctx,
            coeffs,
            xp1: OnceLock::new(),
        })
    }

    pub fn zero(ctx: FieldCtx, sigma: u32) -> Result<Self> {
        Self::from_coeffs(ctx, vec![RingElement::zero(ctx); 1usize << sigma.min(31)])
    }

    /// `coef * x^k` (exponent reduced mod n).
    pub fn monomial(ctx: FieldCtx, sigma: u32, coef: RingElement, k: usize) -> Result<Self> {
        let mut p = Self::zero(ctx, sigma)?;
        let n = p.n();
        p.coeffs[k % n] = coef;
        Ok(p)
    }

    pub fn constant(ctx: FieldCtx, sigma: u32, coef: RingElement) -> Result<Self> {
        Self::monomial(ctx, sigma, coef, 0)
    }

    /// `(x+1)^k`; zero once `k >= n`.
    pub fn x_plus_one_pow(ctx: FieldCtx, sigma: u32, k: usize) -> Result<Self> {
        let n = 1usize << sigma.min(31);
        let mut xp1 = vec![RingElement::zero(ctx); n];
        if k < n {
            xp1[k] = RingElement::one(ctx);
        }
        Self::from_xp1(&XPlusOneCoeffs::new(ctx, xp1)?)
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn sigma(&self) -> u32 {
        self.coeffs.len().trailing_zeros()
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElement::is_zero)
    }

    fn check_compat(&self, g: &Self) -> Result<()> {
        if self.ctx != g.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.m(),
                right: g.ctx.m(),
            });
        }
        if self.n() != g.n() {
            return Err(Error::Shape(format!(
                "length mismatch: {} vs {}",
                self.n(),
                g.n()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, g: &Self) -> Result<Self> {
        self.check_compat(g)?;
        Ok(self.add_unchecked(g))
    }

    fn add_unchecked(&self, g: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&g.coeffs)
            .map(|(x, y)| *x + *y)
            .collect();
        Self {
            ctx: self.ctx,
            coeffs,
            xp1: OnceLock::new(),
        }
    }

    /// Cyclic convolution: exponents wrap modulo n.
    pub fn checked_mul(&self, g: &Self) -> Result<Self> {
        self.check_compat(g)?;
        Ok(self.mul_unchecked(g))
    }

    fn mul_unchecked(&self, g: &Self) -> Self {
        let n = self.n();
        let mut out = vec![RingElement::zero(self.ctx); n];
        for (i, x) in self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in g.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[(i + j) % n] += *x * *y;
            }
        }
        Self {
            ctx: self.ctx,
            coeffs: out,
            xp1: OnceLock::new(),
        }
    }

    /// Multiplication by `x^k`, i.e. a cyclic shift.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.n();
        let mut out = vec![RingElement::zero(self.ctx); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(i + k) % n] = *c;
        }
        Self {
            ctx: self.ctx,
            coeffs: out,
            xp1: OnceLock::new(),
        }
    }

    pub fn scale(&self, r: RingElement) -> Self {
        Self {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| r * *c).collect(),
            xp1: OnceLock::new(),
        }
    }

    pub fn to_xp1(&self) -> XPlusOneCoeffs {
        let coeffs = self
            .xp1
            .get_or_init(|| {
                let mut v = self.coeffs.clone();
                sierpinski(&mut v);
                v
            })
            .clone();
        XPlusOneCoeffs {
            ctx: self.ctx,
            coeffs,
        }
    }

    pub fn from_xp1(x: &XPlusOneCoeffs) -> Result<Self> {
        let mut v = x.coeffs.clone();
        sierpinski(&mut v);
        let p = Self::from_coeffs(x.ctx, v)?;
        let _ = p.xp1.set(x.coeffs.clone());
        Ok(p)
    }

    /// Unit test in `S`: the image modulo `<x - 1, u>`, i.e. the sum of the
    /// field parts of all coefficients, is nonzero.
    pub fn is_unit(&self) -> bool {
        let s = self
            .coeffs
            .iter()
            .fold(self.ctx.zero(), |acc, c| acc + c.a);
        !s.is_zero()
    }

    pub fn lee_weight(&self, tob: &TraceOrthogonalBasis) -> u32 {
        self.coeffs.iter().map(|c| c.lee_weight(tob)).sum()
    }

    pub fn hamming_weight(&self) -> u32 {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() as u32
    }

    /// Compact JSON form: one `[a, b, c]` hex triple per power-basis coefficient.
    pub fn to_json_triples(&self) -> Vec<[String; 3]> {
        self.coeffs
            .iter()
            .map(|c| [c.a.to_string(), c.b.to_string(), c.c.to_string()])
            .collect()
    }

    pub fn from_json_triples(ctx: FieldCtx, triples: &[[String; 3]]) -> Result<Self> {
        let coeffs = triples
            .iter()
            .map(|[a, b, c]| {
                Ok(RingElement {
                    a: ctx.parse_element(a)?,
                    b: ctx.parse_element(b)?,
                    c: ctx.parse_element(c)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(ctx, coeffs)
    }

    /// Parses `"(a+u*b+u^2*c)*x^k + ..."`; `x` alone means `x^1`, a term
    /// without `*x` is a constant, and `"0"` is the zero polynomial.
    pub fn parse(ctx: FieldCtx, sigma: u32, s: &str) -> Result<Self> {
        let mut p = Self::zero(ctx, sigma)?;
        let t = s.trim();
        if t == "0" {
            return Ok(p);
        }
        let n = p.n();
        let mut depth = 0i32;
        let mut start = 0;
        let mut terms = Vec::new();
        for (i, ch) in t.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' if depth == 0 => {
                    terms.push(&t[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push(&t[start..]);
        for term in terms {
            let term = term.trim();
            let (coef_str, power) = match term.rfind(")*x") {
                Some(pos) => {
                    let rest = &term[pos + 3..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("{term:?}: {e}")))?
                    };
                    (&term[..=pos], k)
                }
                None => (term, 0),
            };
            let inner = coef_str
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .unwrap_or(coef_str);
            let coef = RingElement::parse(ctx, inner)?;
            p.coeffs[power % n] += coef;
        }
        Ok(p)
    }
}

impl PartialEq for PolyS {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}

impl Eq for PolyS {}

impl std::hash::Hash for PolyS {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.hash(state);
        self.coeffs.hash(state);
    }
}

impl Add for &PolyS {
    type Output = PolyS;

    /// Panics on length or field mismatch.
    fn add(self, g: &PolyS) -> PolyS {
        self.checked_add(g).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &PolyS {
    type Output = PolyS;

    /// Panics on length or field mismatch.
    fn mul(self, g: &PolyS) -> PolyS {
        self.checked_mul(g).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for PolyS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*x^{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl XPlusOneCoeffs {
    pub fn new(ctx: FieldCtx, coeffs: Vec<RingElement>) -> Result<Self> {
        check_len(coeffs.len())?;
        Ok(Self { ctx, coeffs })
    }

    /// Field-valued coefficients `z_0, z_1, ...` padded with zeros to length n.
    pub fn from_field_coeffs(
        ctx: FieldCtx,
        sigma: u32,
        coeffs: &[crate::gf2m::FieldElement],
    ) -> Result<Self> {
        let n = 1usize << sigma.min(31);
        if coeffs.len() > n {
            return Err(Error::Shape(format!(
                "{} coefficients do not fit in length {n}",
                coeffs.len()
            )));
        }
        let mut v = vec![RingElement::zero(ctx); n];
        for (slot, c) in v.iter_mut().zip(coeffs) {
            *slot = RingElement::scalar(*c);
        }
        Self::new(ctx, v)
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }
}
