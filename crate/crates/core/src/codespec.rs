//! The eight families of ideals of `S` and their structural parameters.
//!
//! A [`CodeSpec`] names one ideal by its family, exponents and unit
//! polynomials. Unit polynomials are given in the `(x+1)`-basis, as
//! `z(x) = z_0 + z_1 (x+1) + ...` with `z_0 != 0`.
//!
//! The smallest-exponent parameters `L, U, V, W, L1` come from the closed
//! forms in [`smallest_params_formula`]; the oracle recomputes them from
//! membership tests.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chain_ring::RingElement;
use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, FieldElement};
use crate::polyring::{PolyS, XPlusOneCoeffs, MAX_SIGMA};

/// A unit polynomial slot: either absent (zero) or `sum z_k (x+1)^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnitPoly {
    Zero,
    Unit(Vec<FieldElement>),
}

impl UnitPoly {
    pub fn one(ctx: FieldCtx) -> Self {
        UnitPoly::Unit(vec![ctx.one()])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, UnitPoly::Zero)
    }

    /// Equal to the constant polynomial 1 (trailing zero coefficients allowed).
    pub fn is_one(&self) -> bool {
        match self {
            UnitPoly::Zero => false,
            UnitPoly::Unit(c) => {
                c.first().is_some_and(FieldElement::is_one) && c[1..].iter().all(|x| x.is_zero())
            }
        }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        match self {
            UnitPoly::Zero => &[],
            UnitPoly::Unit(c) => c,
        }
    }

    fn to_json(&self) -> UnitJson {
        match self {
            UnitPoly::Zero => UnitJson::Zero("zero".into()),
            UnitPoly::Unit(c) => UnitJson::Coeffs(c.iter().map(|x| x.to_string()).collect()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrivialIdeal {
    Zero,
    One,
}

/// The family of an ideal together with its exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CodeKind {
    /// `<0>` or `<1>`.
    Type1(TrivialIdeal),
    /// `<u^2 (x+1)^l>`.
    Type2 { l: u32 },
    /// `<u (x+1)^l + u^2 (x+1)^t z>`.
    Type3 { l: u32, t: u32, z: UnitPoly },
    /// Type 3 plus `u^2 (x+1)^mu`.
    Type4 { l: u32, t: u32, mu: u32, z: UnitPoly },
    /// `<(x+1)^alpha + u (x+1)^t1 z1 + u^2 (x+1)^t2 z2>`.
    Type5 {
        alpha: u32,
        t1: u32,
        t2: u32,
        z1: UnitPoly,
        z2: UnitPoly,
    },
    /// Type 5 plus `u^2 (x+1)^omega`.
    Type6 {
        alpha: u32,
        t1: u32,
        t2: u32,
        omega: u32,
        z1: UnitPoly,
        z2: UnitPoly,
    },
    /// Type 5 generator plus `u (x+1)^beta + u^2 (x+1)^t3 z3`.
    Type7 {
        alpha: u32,
        beta: u32,
        t1: u32,
        t2: u32,
        t3: u32,
        z1: UnitPoly,
        z2: UnitPoly,
        z3: UnitPoly,
    },
    /// Type 7 plus `u^2 (x+1)^omega`.
    Type8 {
        alpha: u32,
        beta: u32,
        omega: u32,
        t1: u32,
        t2: u32,
        t3: u32,
        z1: UnitPoly,
        z2: UnitPoly,
        z3: UnitPoly,
    },
}

/// One ideal of `S = R[x]/(x^(2^sigma) - 1)` over `GF(2^m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeSpec {
    pub sigma: u32,
    pub ctx: FieldCtx,
    pub kind: CodeKind,
}

/// Smallest-exponent parameters; only the ones meaningful for the family are set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DerivedParams {
    #[serde(rename = "L")]
    pub l: Option<u32>,
    #[serde(rename = "U")]
    pub u: Option<u32>,
    #[serde(rename = "V")]
    pub v: Option<u32>,
    #[serde(rename = "W")]
    pub w: Option<u32>,
    #[serde(rename = "L1")]
    pub l1: Option<u32>,
}

/// A violated inequality, both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub relation: String,
    pub lhs: i64,
    pub rhs: i64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated (lhs = {}, rhs = {})", self.relation, self.lhs, self.rhs)
    }
}

#[derive(Default)]
struct Checker {
    out: Vec<Violation>,
}

impl Checker {
    fn le(&mut self, ln: &str, l: i64, rn: &str, r: i64) {
        if l > r {
            self.out.push(Violation {
                relation: format!("{ln} <= {rn}"),
                lhs: l,
                rhs: r,
            });
        }
    }

    fn lt(&mut self, ln: &str, l: i64, rn: &str, r: i64) {
        if l >= r {
            self.out.push(Violation {
                relation: format!("{ln} < {rn}"),
                lhs: l,
                rhs: r,
            });
        }
    }

    /// `z` is zero, or its coefficient count fits `bound` and `z_0 != 0`.
    fn unit(&mut self, name: &str, z: &UnitPoly, bound_name: &str, bound: i64) {
        if let UnitPoly::Unit(c) = z {
            if c.is_empty() || c[0].is_zero() {
                self.out.push(Violation {
                    relation: format!("{name}[0] != 0"),
                    lhs: c.first().map_or(0, |x| i64::from(x.bits())),
                    rhs: 0,
                });
            }
            self.le(&format!("len({name})"), c.len() as i64, bound_name, bound);
        }
    }
}

fn zmin(first: i64, rest: &[i64]) -> i64 {
    rest.iter().copied().fold(first, i64::min)
}

/// `U` for a Type 5-style generator.
fn formula_u(n: i64, alpha: i64, t1: i64, z1: &UnitPoly) -> i64 {
    if z1.is_zero() {
        alpha
    } else {
        zmin(alpha, &[n + t1 - alpha])
    }
}

fn formula_v(n: i64, alpha: i64, t1: i64, t2: i64, z1: &UnitPoly, z2: &UnitPoly) -> i64 {
    match (z1.is_zero(), z2.is_zero()) {
        (true, true) => alpha,
        (true, false) => zmin(alpha, &[n + t2 - alpha]),
        (false, _) => zmin(alpha, &[n + t1 - alpha]),
    }
}

/// `W`, with the branches tried in the order they are displayed.
#[allow(clippy::too_many_arguments)]
fn formula_w(
    n: i64,
    alpha: i64,
    beta: i64,
    t2: i64,
    t3: i64,
    z1: &UnitPoly,
    z2: &UnitPoly,
    z3: &UnitPoly,
) -> i64 {
    let (z1z, z2z, z3z) = (z1.is_zero(), z2.is_zero(), z3.is_zero());
    if (z1z && z2z && z3z) || (!z1z && z3z) {
        beta
    } else if z1z && z3z && !z2z {
        zmin(beta, &[n + t2 - alpha])
    } else if (z1z && z2z && !z3z) || (!z1z && !z3z) {
        zmin(beta, &[n + t3 - beta])
    } else {
        // z1 = 0, z2 != 0, z3 != 0
        zmin(beta, &[n + t2 - alpha, n + t3 - beta])
    }
}

fn formula_l(n: i64, l: i64, t: i64, z: &UnitPoly) -> i64 {
    if z.is_zero() {
        l
    } else {
        zmin(l, &[n + t - l])
    }
}

/// Closed-form smallest-exponent parameters for the spec's family.
pub fn smallest_params_formula(spec: &CodeSpec) -> DerivedParams {
    let n = 1i64 << spec.sigma;
    let c = |v: i64| Some(v.max(0) as u32);
    let i = i64::from;
    let mut d = DerivedParams::default();
    match &spec.kind {
        CodeKind::Type1(_) | CodeKind::Type2 { .. } => {}
        CodeKind::Type3 { l, t, z } | CodeKind::Type4 { l, t, z, .. } => {
            d.l = c(formula_l(n, i(*l), i(*t), z));
        }
        CodeKind::Type5 { alpha, t1, t2, z1, z2 }
        | CodeKind::Type6 { alpha, t1, t2, z1, z2, .. } => {
            d.u = c(formula_u(n, i(*alpha), i(*t1), z1));
            d.v = c(formula_v(n, i(*alpha), i(*t1), i(*t2), z1, z2));
        }
        CodeKind::Type7 {
            alpha, beta, t1, t2, t3, z1, z2, z3,
        } => {
            d.u = c(formula_u(n, i(*alpha), i(*t1), z1));
            d.w = c(formula_w(n, i(*alpha), i(*beta), i(*t2), i(*t3), z1, z2, z3));
        }
        CodeKind::Type8 {
            alpha, beta, t1, t2, t3, z1, z2, z3, ..
        } => {
            d.u = c(formula_u(n, i(*alpha), i(*t1), z1));
            d.w = c(formula_w(n, i(*alpha), i(*beta), i(*t2), i(*t3), z1, z2, z3));
            d.l1 = c(formula_l(n, i(*beta), i(*t3), z3));
        }
    }
    d
}

fn xp1_term(
    ctx: FieldCtx,
    sigma: u32,
    offset: u32,
    coeffs: &[FieldElement],
    scale: RingElement,
) -> Result<PolyS> {
    let n = 1usize << sigma;
    let mut v = vec![RingElement::zero(ctx); n];
    for (k, c) in coeffs.iter().enumerate() {
        let idx = offset as usize + k;
        if idx < n {
            v[idx] += scale * RingElement::scalar(*c);
        }
    }
    PolyS::from_xp1(&XPlusOneCoeffs::new(ctx, v)?)
}

impl CodeSpec {
    pub fn new(sigma: u32, ctx: FieldCtx, kind: CodeKind) -> Self {
        Self { sigma, ctx, kind }
    }

    pub fn n(&self) -> u32 {
        1 << self.sigma
    }

    pub fn m(&self) -> u32 {
        self.ctx.m()
    }

    pub fn type_tag(&self) -> u8 {
        match self.kind {
            CodeKind::Type1(_) => 1,
            CodeKind::Type2 { .. } => 2,
            CodeKind::Type3 { .. } => 3,
            CodeKind::Type4 { .. } => 4,
            CodeKind::Type5 { .. } => 5,
            CodeKind::Type6 { .. } => 6,
            CodeKind::Type7 { .. } => 7,
            CodeKind::Type8 { .. } => 8,
        }
    }

    /// Unit slots in order `z1, z2, z3`; Types 3 and 4 put `z` first.
    pub fn units(&self) -> [&UnitPoly; 3] {
        const Z: &UnitPoly = &UnitPoly::Zero;
        match &self.kind {
            CodeKind::Type1(_) | CodeKind::Type2 { .. } => [Z, Z, Z],
            CodeKind::Type3 { z, .. } | CodeKind::Type4 { z, .. } => [z, Z, Z],
            CodeKind::Type5 { z1, z2, .. } | CodeKind::Type6 { z1, z2, .. } => [z1, z2, Z],
            CodeKind::Type7 { z1, z2, z3, .. } | CodeKind::Type8 { z1, z2, z3, .. } => [z1, z2, z3],
        }
    }

    /// Checks every inequality of the family; returns the derived parameters.
    pub fn validate(&self) -> std::result::Result<DerivedParams, Vec<Violation>> {
        let mut ck = Checker::default();
        if self.sigma == 0 || self.sigma > MAX_SIGMA {
            ck.out.push(Violation {
                relation: format!("1 <= sigma <= {MAX_SIGMA}"),
                lhs: i64::from(self.sigma),
                rhs: i64::from(MAX_SIGMA),
            });
            return Err(ck.out);
        }
        for z in self.units() {
            if z.coeffs().iter().any(|c| c.ctx() != self.ctx) {
                ck.out.push(Violation {
                    relation: "unit coefficients live in GF(2^m)".into(),
                    lhs: 0,
                    rhs: i64::from(self.ctx.m()),
                });
            }
        }
        let d = smallest_params_formula(self);
        let top = i64::from(self.n()) - 1;
        let i = i64::from;
        let g = |o: Option<u32>| i64::from(o.unwrap_or(0));
        const TOP: &str = "2^sigma-1";
        match &self.kind {
            CodeKind::Type1(_) => {}
            CodeKind::Type2 { l } => ck.le("l", i(*l), TOP, top),
            CodeKind::Type3 { l, t, z } => {
                let cl = g(d.l);
                ck.le("L", cl, "l", i(*l));
                ck.le("l", i(*l), TOP, top);
                if !z.is_zero() {
                    ck.lt("t", i(*t), "L", cl);
                    ck.unit("z", z, "L-t", cl - i(*t));
                }
            }
            CodeKind::Type4 { l, t, mu, z } => {
                let cl = g(d.l);
                ck.lt("mu", i(*mu), "L", cl);
                ck.le("L", cl, "l", i(*l));
                ck.le("l", i(*l), TOP, top);
                if !z.is_zero() {
                    ck.lt("t", i(*t), "mu", i(*mu));
                    ck.unit("z", z, "mu-t", i(*mu) - i(*t));
                }
            }
            CodeKind::Type5 { alpha, t1, t2, z1, z2 } => {
                let (u, v) = (g(d.u), g(d.v));
                ck.lt("0", 0, "V", v);
                ck.le("V", v, "U", u);
                ck.le("U", u, "alpha", i(*alpha));
                ck.le("alpha", i(*alpha), TOP, top);
                if !z1.is_zero() {
                    ck.lt("T1", i(*t1), "U", u);
                    ck.unit("z1", z1, "U-T1", u - i(*t1));
                }
                if !z2.is_zero() {
                    ck.lt("T2", i(*t2), "V", v);
                    ck.unit("z2", z2, "V-T2", v - i(*t2));
                }
            }
            CodeKind::Type6 {
                alpha, t1, t2, omega, z1, z2,
            } => {
                let (u, v) = (g(d.u), g(d.v));
                ck.lt("omega", i(*omega), "V", v);
                ck.le("V", v, "U", u);
                ck.le("U", u, "alpha", i(*alpha));
                ck.le("alpha", i(*alpha), TOP, top);
                if !z1.is_zero() {
                    ck.lt("T1", i(*t1), "U", u);
                    ck.unit("z1", z1, "U-T1", u - i(*t1));
                }
                if !z2.is_zero() {
                    ck.lt("T2", i(*t2), "omega", i(*omega));
                    ck.unit("z2", z2, "omega-T2", i(*omega) - i(*t2));
                }
            }
            CodeKind::Type7 {
                alpha, beta, t1, t2, t3, z1, z2, z3,
            } => {
                let (u, w) = (g(d.u), g(d.w));
                ck.le("W", w, "beta", i(*beta));
                ck.lt("beta", i(*beta), "U", u);
                ck.le("U", u, "alpha", i(*alpha));
                ck.le("alpha", i(*alpha), TOP, top);
                if !z1.is_zero() {
                    ck.lt("T1", i(*t1), "beta", i(*beta));
                    ck.unit("z1", z1, "beta-T1", i(*beta) - i(*t1));
                }
                if !z2.is_zero() {
                    ck.lt("T2", i(*t2), "W", w);
                    ck.unit("z2", z2, "W-T2", w - i(*t2));
                }
                if !z3.is_zero() {
                    ck.lt("T3", i(*t3), "W", w);
                    ck.unit("z3", z3, "W-T3", w - i(*t3));
                }
            }
            CodeKind::Type8 {
                alpha, beta, omega, t1, t2, t3, z1, z2, z3,
            } => {
                let (u, w, l1) = (g(d.u), g(d.w), g(d.l1));
                ck.lt("omega", i(*omega), "W", w);
                ck.le("W", w, "L1", l1);
                ck.le("L1", l1, "beta", i(*beta));
                ck.lt("beta", i(*beta), "U", u);
                ck.le("U", u, "alpha", i(*alpha));
                ck.le("alpha", i(*alpha), TOP, top);
                if !z1.is_zero() {
                    ck.lt("T1", i(*t1), "beta", i(*beta));
                    ck.unit("z1", z1, "beta-T1", i(*beta) - i(*t1));
                }
                if !z2.is_zero() {
                    ck.lt("T2", i(*t2), "omega", i(*omega));
                    ck.unit("z2", z2, "omega-T2", i(*omega) - i(*t2));
                }
                if !z3.is_zero() {
                    ck.lt("T3", i(*t3), "omega", i(*omega));
                    ck.unit("z3", z3, "omega-T3", i(*omega) - i(*t3));
                }
            }
        }
        if ck.out.is_empty() {
            Ok(d)
        } else {
            Err(ck.out)
        }
    }

    /// Validates, mapping violations into an error.
    pub fn validated(&self) -> Result<DerivedParams> {
        self.validate()
            .map_err(|v| Error::InvalidSpec(v.iter().map(|x| x.to_string()).collect()))
    }

    /// The generators in the power basis.
    pub fn generators(&self) -> Result<Vec<PolyS>> {
        self.validated()?;
        self.raw_generators()
    }

    /// Generators without validation, grouped as the families nest:
    /// the Type 5 generator first, then the `u`-generator, then the `u^2` one.
    pub(crate) fn raw_generators(&self) -> Result<Vec<PolyS>> {
        let (ctx, s) = (self.ctx, self.sigma);
        let one = RingElement::one(ctx);
        let u = RingElement::u(ctx);
        let u2 = RingElement::u2(ctx);
        let onec = [ctx.one()];
        let pow = |k: u32, scale: RingElement| xp1_term(ctx, s, k, &onec, scale);
        let zterm = |k: u32, z: &UnitPoly, scale: RingElement| xp1_term(ctx, s, k, z.coeffs(), scale);
        let g = match &self.kind {
            CodeKind::Type1(TrivialIdeal::Zero) => vec![PolyS::zero(ctx, s)?],
            CodeKind::Type1(TrivialIdeal::One) => vec![PolyS::constant(ctx, s, one)?],
            CodeKind::Type2 { l } => vec![pow(*l, u2)?],
            CodeKind::Type3 { l, t, z } => vec![&pow(*l, u)? + &zterm(*t, z, u2)?],
            CodeKind::Type4 { l, t, mu, z } => {
                vec![&pow(*l, u)? + &zterm(*t, z, u2)?, pow(*mu, u2)?]
            }
            CodeKind::Type5 { alpha, t1, t2, z1, z2 } => {
                vec![&(&pow(*alpha, one)? + &zterm(*t1, z1, u)?) + &zterm(*t2, z2, u2)?]
            }
            CodeKind::Type6 {
                alpha, t1, t2, omega, z1, z2,
            } => vec![
                &(&pow(*alpha, one)? + &zterm(*t1, z1, u)?) + &zterm(*t2, z2, u2)?,
                pow(*omega, u2)?,
            ],
            CodeKind::Type7 {
                alpha, beta, t1, t2, t3, z1, z2, z3,
            } => vec![
                &(&pow(*alpha, one)? + &zterm(*t1, z1, u)?) + &zterm(*t2, z2, u2)?,
                &pow(*beta, u)? + &zterm(*t3, z3, u2)?,
            ],
            CodeKind::Type8 {
                alpha, beta, omega, t1, t2, t3, z1, z2, z3,
            } => vec![
                &(&pow(*alpha, one)? + &zterm(*t1, z1, u)?) + &zterm(*t2, z2, u2)?,
                &pow(*beta, u)? + &zterm(*t3, z3, u2)?,
                pow(*omega, u2)?,
            ],
        };
        Ok(g)
    }

    pub fn to_json_value(&self) -> SpecJson {
        let mut p = ParamsJson::default();
        let mut units = BTreeMap::new();
        match &self.kind {
            CodeKind::Type1(which) => {
                p.ideal = Some(match which {
                    TrivialIdeal::Zero => "zero".into(),
                    TrivialIdeal::One => "one".into(),
                })
            }
            CodeKind::Type2 { l } => p.l = Some(*l),
            CodeKind::Type3 { l, t, z } => {
                p.l = Some(*l);
                p.t = Some(*t);
                units.insert("z".to_string(), z.to_json());
            }
            CodeKind::Type4 { l, t, mu, z } => {
                p.l = Some(*l);
                p.t = Some(*t);
                p.mu = Some(*mu);
                units.insert("z".to_string(), z.to_json());
            }
            CodeKind::Type5 { alpha, t1, t2, z1, z2 } => {
                p.alpha = Some(*alpha);
                p.t1 = Some(*t1);
                p.t2 = Some(*t2);
                units.insert("z1".to_string(), z1.to_json());
                units.insert("z2".to_string(), z2.to_json());
            }
            CodeKind::Type6 {
                alpha, t1, t2, omega, z1, z2,
            } => {
                p.alpha = Some(*alpha);
                p.omega = Some(*omega);
                p.t1 = Some(*t1);
                p.t2 = Some(*t2);
                units.insert("z1".to_string(), z1.to_json());
                units.insert("z2".to_string(), z2.to_json());
            }
            CodeKind::Type7 {
                alpha, beta, t1, t2, t3, z1, z2, z3,
            } => {
                p.alpha = Some(*alpha);
                p.beta = Some(*beta);
                p.t1 = Some(*t1);
                p.t2 = Some(*t2);
                p.t3 = Some(*t3);
                units.insert("z1".to_string(), z1.to_json());
                units.insert("z2".to_string(), z2.to_json());
                units.insert("z3".to_string(), z3.to_json());
            }
            CodeKind::Type8 {
                alpha, beta, omega, t1, t2, t3, z1, z2, z3,
            } => {
                p.alpha = Some(*alpha);
                p.beta = Some(*beta);
                p.omega = Some(*omega);
                p.t1 = Some(*t1);
                p.t2 = Some(*t2);
                p.t3 = Some(*t3);
                units.insert("z1".to_string(), z1.to_json());
                units.insert("z2".to_string(), z2.to_json());
                units.insert("z3".to_string(), z3.to_json());
            }
        }
        SpecJson {
            sigma: self.sigma,
            m: self.ctx.m(),
            type_tag: self.type_tag(),
            params: p,
            units,
        }
    }

    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(s);
        let raw: SpecJson = serde_path_to_error::deserialize(de).map_err(|e| {
            Error::Parse(format!("spec JSON at '{}': {}", e.path(), e.inner()))
        })?;
        Self::from_json_value(&raw)
    }

    pub fn from_json_value(raw: &SpecJson) -> Result<Self> {
        let ctx = FieldCtx::new(raw.m)?;
        let p = &raw.params;
        let need = |v: Option<u32>, name: &str| {
            v.ok_or_else(|| Error::Parse(format!("type {} spec lacks params.{name}", raw.type_tag)))
        };
        let unit = |name: &str| -> Result<UnitPoly> {
            match raw.units.get(name) {
                None => Ok(UnitPoly::Zero),
                Some(UnitJson::Zero(s)) if s == "zero" => Ok(UnitPoly::Zero),
                Some(UnitJson::Zero(s)) => {
                    Err(Error::Parse(format!("units.{name}: expected \"zero\" or a list, got {s:?}")))
                }
                Some(UnitJson::Coeffs(c)) => Ok(UnitPoly::Unit(
                    c.iter()
                        .map(|x| ctx.parse_element(x))
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| Error::Parse(format!("units.{name}: {e}")))?,
                )),
            }
        };
        let allowed: &[&str] = match raw.type_tag {
            1 | 2 => &[],
            3 | 4 => &["z"],
            5 | 6 => &["z1", "z2"],
            7 | 8 => &["z1", "z2", "z3"],
            _ => &[],
        };
        if let Some(k) = raw.units.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::Parse(format!(
                "units.{k} is not used by type {}",
                raw.type_tag
            )));
        }
        let kind = match raw.type_tag {
            1 => match p.ideal.as_deref() {
                Some("zero") => CodeKind::Type1(TrivialIdeal::Zero),
                Some("one") => CodeKind::Type1(TrivialIdeal::One),
                other => {
                    return Err(Error::Parse(format!(
                        "params.ideal must be \"zero\" or \"one\", got {other:?}"
                    )))
                }
            },
            2 => CodeKind::Type2 { l: need(p.l, "l")? },
            3 => CodeKind::Type3 {
                l: need(p.l, "l")?,
                t: p.t.unwrap_or(0),
                z: unit("z")?,
            },
            4 => CodeKind::Type4 {
                l: need(p.l, "l")?,
                t: p.t.unwrap_or(0),
                mu: need(p.mu, "mu")?,
                z: unit("z")?,
            },
            5 => CodeKind::Type5 {
                alpha: need(p.alpha, "alpha")?,
                t1: p.t1.unwrap_or(0),
                t2: p.t2.unwrap_or(0),
                z1: unit("z1")?,
                z2: unit("z2")?,
            },
            6 => CodeKind::Type6 {
                alpha: need(p.alpha, "alpha")?,
                t1: p.t1.unwrap_or(0),
                t2: p.t2.unwrap_or(0),
                omega: need(p.omega, "omega")?,
                z1: unit("z1")?,
                z2: unit("z2")?,
            },
            7 => CodeKind::Type7 {
                alpha: need(p.alpha, "alpha")?,
                beta: need(p.beta, "beta")?,
                t1: p.t1.unwrap_or(0),
                t2: p.t2.unwrap_or(0),
                t3: p.t3.unwrap_or(0),
                z1: unit("z1")?,
                z2: unit("z2")?,
                z3: unit("z3")?,
            },
            8 => CodeKind::Type8 {
                alpha: need(p.alpha, "alpha")?,
                beta: need(p.beta, "beta")?,
                omega: need(p.omega, "omega")?,
                t1: p.t1.unwrap_or(0),
                t2: p.t2.unwrap_or(0),
                t3: p.t3.unwrap_or(0),
                z1: unit("z1")?,
                z2: unit("z2")?,
                z3: unit("z3")?,
            },
            t => return Err(Error::Parse(format!("type must be 1..=8, got {t}"))),
        };
        Ok(Self {
            sigma: raw.sigma,
            ctx,
            kind,
        })
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Wire form of a [`CodeSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub sigma: u32,
    pub m: u32,
    #[serde(rename = "type")]
    pub type_tag: u8,
    #[serde(default)]
    pub params: ParamsJson,
    #[serde(default)]
    pub units: BTreeMap<String, UnitJson>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t3: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnitJson {
    Zero(String),
    Coeffs(Vec<String>),
}

/// Controls how unit-polynomial coefficients are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Exhaustive when an exponent tuple has at most this many coefficient
    /// combinations, otherwise this many are sampled (the all-ones
    /// combination always included).
    pub max_unit_combos: u64,
    pub seed: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            max_unit_combos: 256,
            seed: 0x5eed,
        }
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Decodes a combination index into one coefficient vector per slot.
/// Index 0 is the all-constant-one combination.
fn decode_combo(ctx: FieldCtx, lens: &[usize], mut idx: u64) -> Vec<Vec<FieldElement>> {
    let q = u64::from(ctx.order());
    lens.iter()
        .map(|&d| {
            let mut v = Vec::with_capacity(d);
            for k in 0..d {
                let digit = if k == 0 {
                    let r = idx % (q - 1);
                    idx /= q - 1;
                    r + 1
                } else {
                    let r = idx % q;
                    idx /= q;
                    r
                };
                v.push(ctx.element(digit as u32).expect("digit < q"));
            }
            v
        })
        .collect()
}

/// Exponent/pattern skeleton: the spec with each nonzero unit slot holding
/// a placeholder of its maximal length.
fn expand_units(spec: CodeSpec, opts: &EnumOptions, out: &mut Vec<CodeSpec>) {
    let Ok(d) = spec.validate() else { return };
    let _ = d;
    let lens: Vec<usize> = spec
        .units()
        .iter()
        .filter(|z| !z.is_zero())
        .map(|z| z.coeffs().len())
        .collect();
    let q = u64::from(spec.ctx.order());
    let total = lens.iter().try_fold(1u64, |acc, &d| {
        let per = (q - 1).checked_mul(q.checked_pow(d as u32 - 1)?)?;
        acc.checked_mul(per)
    });
    let picks: Vec<u64> = match total {
        Some(t) if t <= opts.max_unit_combos => (0..t).collect(),
        _ => {
            let t = total.unwrap_or(u64::MAX).min(usize::MAX as u64);
            let mut h = splitmix(opts.seed);
            h = splitmix(h ^ spec.to_json().bytes().fold(0u64, |a, b| a.rotate_left(5) ^ u64::from(b)));
            let mut rng = ChaCha8Rng::seed_from_u64(h);
            let want = opts.max_unit_combos.max(1).min(t) as usize;
            let mut v: Vec<u64> = index::sample(&mut rng, (t - 1) as usize, want - 1)
                .into_iter()
                .map(|i| i as u64 + 1)
                .collect();
            v.push(0);
            v.sort_unstable();
            v
        }
    };
    for idx in picks {
        let mut coeffs = decode_combo(spec.ctx, &lens, idx).into_iter();
        let mut s = spec.clone();
        let fill = |z: &mut UnitPoly, it: &mut std::vec::IntoIter<Vec<FieldElement>>| {
            if !z.is_zero() {
                *z = UnitPoly::Unit(it.next().expect("one vector per slot"));
            }
        };
        match &mut s.kind {
            CodeKind::Type3 { z, .. } | CodeKind::Type4 { z, .. } => fill(z, &mut coeffs),
            CodeKind::Type5 { z1, z2, .. } | CodeKind::Type6 { z1, z2, .. } => {
                fill(z1, &mut coeffs);
                fill(z2, &mut coeffs);
            }
            CodeKind::Type7 { z1, z2, z3, .. } | CodeKind::Type8 { z1, z2, z3, .. } => {
                fill(z1, &mut coeffs);
                fill(z2, &mut coeffs);
                fill(z3, &mut coeffs);
            }
            _ => {}
        }
        debug_assert!(s.validate().is_ok());
        out.push(s);
    }
}

/// Placeholder of the given length (all-ones coefficient pattern is irrelevant;
/// only the length and nonzero-ness matter until [`expand_units`] fills it).
fn placeholder(ctx: FieldCtx, len: i64) -> Option<UnitPoly> {
    (len >= 1).then(|| UnitPoly::Unit(vec![ctx.one(); len as usize]))
}

/// Every valid spec of the requested families, in a fixed order.
///
/// Exponents are enumerated exhaustively. A zero unit slot always carries
/// exponent 0 for its companion `t`/`T_i`, so no ideal is emitted twice for
/// that reason alone.
pub fn enumerate_specs(sigma: u32, ctx: FieldCtx, types: &[u8], opts: &EnumOptions) -> Vec<CodeSpec> {
    let mut out = Vec::new();
    if sigma == 0 || sigma > MAX_SIGMA {
        return out;
    }
    let n = 1u32 << sigma;
    let ni = i64::from(n);
    let mk = |kind| CodeSpec::new(sigma, ctx, kind);
    // (is_zero, t) choices for a unit slot
    let slot = || {
        std::iter::once((true, 0u32)).chain((0..n).map(|t| (false, t)))
    };
    let z = |zero: bool| if zero { UnitPoly::Zero } else { UnitPoly::one(ctx) };
    // Fix the placeholder length to the degree bound implied by the skeleton.
    let sized = |zero: bool, bound: i64| -> Option<UnitPoly> {
        if zero {
            Some(UnitPoly::Zero)
        } else {
            placeholder(ctx, bound)
        }
    };
    for &ty in types {
        match ty {
            1 => {
                out.push(mk(CodeKind::Type1(TrivialIdeal::Zero)));
                out.push(mk(CodeKind::Type1(TrivialIdeal::One)));
            }
            2 => out.extend((0..n).map(|l| mk(CodeKind::Type2 { l }))),
            3 => {
                for l in 0..n {
                    for (zz, t) in slot() {
                        let cl = formula_l(ni, i64::from(l), i64::from(t), &z(zz));
                        let Some(zu) = sized(zz, cl - i64::from(t)) else { continue };
                        expand_units(mk(CodeKind::Type3 { l, t, z: zu }), opts, &mut out);
                    }
                }
            }
            4 => {
                for l in 0..n {
                    for mu in 0..n {
                        for (zz, t) in slot() {
                            let Some(zu) = sized(zz, i64::from(mu) - i64::from(t)) else { continue };
                            expand_units(mk(CodeKind::Type4 { l, t, mu, z: zu }), opts, &mut out);
                        }
                    }
                }
            }
            5 | 6 => {
                let omegas: Vec<Option<u32>> = if ty == 5 {
                    vec![None]
                } else {
                    (0..n).map(Some).collect()
                };
                for alpha in 0..n {
                    for &omega in &omegas {
                        for (z1z, t1) in slot() {
                            for (z2z, t2) in slot() {
                                let (a, t1i, t2i) = (i64::from(alpha), i64::from(t1), i64::from(t2));
                                let u = formula_u(ni, a, t1i, &z(z1z));
                                let v = formula_v(ni, a, t1i, t2i, &z(z1z), &z(z2z));
                                let b2 = match omega {
                                    None => v - t2i,
                                    Some(w) => i64::from(w) - t2i,
                                };
                                let (Some(z1), Some(z2)) = (sized(z1z, u - t1i), sized(z2z, b2)) else {
                                    continue;
                                };
                                let kind = match omega {
                                    None => CodeKind::Type5 { alpha, t1, t2, z1, z2 },
                                    Some(omega) => CodeKind::Type6 {
                                        alpha, t1, t2, omega, z1, z2,
                                    },
                                };
                                expand_units(mk(kind), opts, &mut out);
                            }
                        }
                    }
                }
            }
            7 | 8 => {
                let omegas: Vec<Option<u32>> = if ty == 7 {
                    vec![None]
                } else {
                    (0..n).map(Some).collect()
                };
                for alpha in 0..n {
                    for beta in 0..alpha {
                        for &omega in &omegas {
                            for (z1z, t1) in slot() {
                                for (z2z, t2) in slot() {
                                    for (z3z, t3) in slot() {
                                        let (a, b) = (i64::from(alpha), i64::from(beta));
                                        let (t1i, t2i, t3i) =
                                            (i64::from(t1), i64::from(t2), i64::from(t3));
                                        let w = formula_w(ni, a, b, t2i, t3i, &z(z1z), &z(z2z), &z(z3z));
                                        let cap = omega.map_or(w, i64::from);
                                        let (Some(z1), Some(z2), Some(z3)) = (
                                            sized(z1z, b - t1i),
                                            sized(z2z, cap - t2i),
                                            sized(z3z, cap - t3i),
                                        ) else {
                                            continue;
                                        };
                                        let kind = match omega {
                                            None => CodeKind::Type7 {
                                                alpha, beta, t1, t2, t3, z1, z2, z3,
                                            },
                                            Some(omega) => CodeKind::Type8 {
                                                alpha, beta, omega, t1, t2, t3, z1, z2, z3,
                                            },
                                        };
                                        expand_units(mk(kind), opts, &mut out);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            _ => {}
        }
    }
    out
}
