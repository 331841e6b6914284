//! The Lee-distance theorems as data.
//!
//! Clauses are listed in display order. Typos in the displayed conditions
//! are kept as printed; see the comments at the affected clauses.

use std::sync::OnceLock;

use super::{Clause, Env, Guard, Outcome, Slot, Theorem, Val};

const Z: Slot = Slot::Zero;
const O: Slot = Slot::T0;
const P: Slot = Slot::TPos;
const A: Slot = Slot::Any;

fn ex(p: fn(&Env) -> bool, v: u64) -> Clause {
    Clause {
        guard: Guard::Plain(p),
        outcome: Outcome::Exact(Val::Const(v)),
    }
}

/// Exact `mult * 2^(gamma + plus)` on a gamma-indexed region.
fn exg(p: fn(&Env, i64) -> bool, mult: u64, plus: u32) -> Clause {
    Clause {
        guard: Guard::Gamma(p),
        outcome: Outcome::Exact(Val::Pow2Gamma { mult, plus }),
    }
}

/// Exact constant on a gamma-indexed region.
fn exgc(p: fn(&Env, i64) -> bool, v: u64) -> Clause {
    Clause {
        guard: Guard::Gamma(p),
        outcome: Outcome::Exact(Val::Const(v)),
    }
}

/// `2^(gamma+1) <= d <= 2^(gamma+2)`.
fn bdg(p: fn(&Env, i64) -> bool) -> Clause {
    Clause {
        guard: Guard::Gamma(p),
        outcome: Outcome::Bounds(
            Val::Pow2Gamma { mult: 1, plus: 1 },
            Val::Pow2Gamma { mult: 1, plus: 2 },
        ),
    }
}

fn otherwise(v: u64) -> Clause {
    Clause {
        guard: Guard::Otherwise,
        outcome: Outcome::Exact(Val::Const(v)),
    }
}

fn th(
    id: &'static str,
    type_tag: u8,
    pattern: [Slot; 3],
    hypothesis: fn(&Env) -> bool,
    clauses: Vec<Clause>,
) -> Theorem {
    Theorem {
        id,
        type_tag,
        pattern,
        hypothesis,
        clauses,
    }
}

// Region shorthands.
fn low(e: &Env, x: i64) -> bool {
    1 < x && x <= e.h
}
fn low1(e: &Env, x: i64) -> bool {
    1 <= x && x <= e.h
}
fn high(e: &Env, x: i64) -> bool {
    e.h < x && x < e.n
}
/// `lo_g <= x < y <= hi_g`.
fn win2(e: &Env, g: i64, x: i64, y: i64) -> bool {
    e.win_lo(g) <= x && x < y && y <= e.win_hi(g)
}

/// The three shared `>= 2^(s-1)+1` clauses of the `1 < W` Type 7 theorems.
fn w_tail(tail: fn(&Env) -> bool) -> [Clause; 3] {
    [
        ex(|e| high(e, e.a) && 1 < e.cw && e.cw <= e.b && e.b <= e.h, 4),
        ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && 1 < e.cw && e.cw <= e.h, 4),
        ex(tail, 4),
    ]
}

fn with_tail(mut head: Vec<Clause>, tail: fn(&Env) -> bool, rest: Vec<Clause>) -> Vec<Clause> {
    head.extend(w_tail(tail));
    head.extend(rest);
    head
}

fn h_cw_b_a(e: &Env) -> bool {
    e.h < e.cw && e.cw <= e.b && e.b < e.a && e.a < e.n
}

fn build() -> Vec<Theorem> {
    vec![
        // Type 2
        th("thm5", 2, [A, A, A], |_| true, vec![
            ex(|e| e.l == 0, 2),
            ex(|e| low1(e, e.l), 4),
            exg(|e, g| e.win(g, e.l), 1, 2),
        ]),
        // Type 3
        th("thm7", 3, [Z, A, A], |_| true, vec![
            ex(|e| e.l == 0, 3),
            ex(|e| low1(e, e.l), 6),
            exg(|e, g| e.win(g, e.l), 3, 1),
        ]),
        th("thm8", 3, [P, A, A], |e| 0 < e.cl && 0 < e.t && e.t < e.cl, vec![
            ex(|e| low(e, e.l), 4),
            ex(|e| high(e, e.l) && e.l >= e.h + e.t, 4),
            bdg(|e, g| e.win(g, e.l) && e.hh_ok(e.l, e.t)),
        ]),
        th("thm9", 3, [O, A, A], |e| 1 <= e.l, vec![ex(|_| true, 4)]),
        // Type 4
        th("thm11", 4, [Z, A, A], |_| true, vec![
            ex(|e| low1(e, e.l) && e.mu == 0, 2),
            ex(|e| 1 <= e.mu && e.mu < e.l && e.l <= e.h, 4),
            ex(|e| high(e, e.l) && e.mu == 0, 2),
            ex(|e| high(e, e.l) && low1(e, e.mu), 4),
            bdg(|e, g| win2(e, g, e.mu, e.l)),
        ]),
        th("thm12", 4, [P, A, A], |e| 1 < e.mu && 0 < e.t && e.t < e.mu, vec![
            ex(|e| 1 < e.mu && e.mu < e.l && e.l <= e.h, 4),
            ex(|e| high(e, e.l) && low(e, e.mu), 4),
            ex(|e| e.h < e.mu && e.mu < e.l && e.l < e.n && e.l >= e.h + e.t, 4),
            bdg(|e, g| win2(e, g, e.mu, e.l)),
        ]),
        th("thm13", 4, [O, A, A], |e| 0 < e.mu, vec![ex(|_| true, 4)]),
        // Type 5
        th("thm15", 5, [Z, Z, A], |e| 1 <= e.a, vec![
            ex(|e| low1(e, e.a), 2),
            exg(|e, g| e.win(g, e.a), 1, 1),
        ]),
        th("thm16", 5, [Z, O, A], |e| 0 < e.cv, vec![
            ex(|e| 1 <= e.a && 4 * e.a <= e.n, 2),
            ex(|e| e.z2_one && e.a == e.h, 2),
            otherwise(4),
        ]),
        th("thm17", 5, [Z, P, A], |e| 1 < e.cv && 0 < e.t2 && e.t2 < e.cv, vec![
            ex(|e| low(e, e.a) && e.q_ok(e.a, e.t2), 2),
            ex(|e| low(e, e.a) && !e.q_ok(e.a, e.t2), 4),
            ex(|e| high(e, e.a) && e.a >= e.h + e.t2, 4),
            exg(|e, g| e.win(g, e.a) && e.b_ok(g, e.a, e.t2), 1, 1),
        ]),
        th("thm18", 5, [O, Z, A], |e| 0 < e.cv, vec![
            ex(|e| e.h >= 3 * e.a, 2),
            ex(|e| e.z1_one && e.a == e.h, 3),
            otherwise(4),
        ]),
        th("thm19", 5, [P, Z, A], |e| 0 < e.cv && 0 < e.t1 && e.t1 < e.cu, vec![
            ex(|e| low(e, e.a) && e.q_ok(e.a, e.t1) && 3 * e.a <= e.h + 2 * e.t1, 2),
            ex(|e| low(e, e.a) && (!e.q_ok(e.a, e.t1) || 3 * e.a > e.h + 2 * e.t1), 4),
            ex(|e| high(e, e.a) && e.a >= e.h + e.t1, 4),
            exg(|e, g| e.win(g, e.a) && e.b_ok(g, e.a, e.t1) && e.three_ok(g, e.a, e.t1), 1, 1),
        ]),
        th("thm20", 5, [O, O, A], |e| 0 < e.cv, vec![
            ex(|e| 3 * e.a <= e.h, 2),
            ex(|e| e.z1_one && e.z2_one && e.a == e.h, 3),
            otherwise(4),
        ]),
        th("thm21", 5, [P, O, A], |e| 0 < e.cv && 0 < e.t1 && e.t1 < e.cu, vec![
            ex(|e| low(e, e.a) && 3 * e.a <= e.h + 2 * e.t1, 2),
            ex(|e| low(e, e.a) && 3 * e.a > e.h + 2 * e.t1, 4),
            ex(|e| high(e, e.a) && e.a >= e.h + e.t1, 4),
            exg(|e, g| e.win(g, e.a) && e.three_ok(g, e.a, e.t1) && e.hh_ok(e.a, e.t1), 1, 1),
        ]),
        th("thm22", 5, [O, P, A], |e| 1 < e.cv && 0 < e.t2 && e.t2 < e.cv, vec![
            ex(|e| e.h >= 3 * e.a && e.q_ok(e.a, e.t2), 2),
            otherwise(4),
        ]),
        th(
            "thm23",
            5,
            [P, P, A],
            |e| 1 < e.cv && 0 < e.t1 && e.t1 < e.cu && 0 < e.t2 && e.t2 < e.cv,
            vec![
                ex(|e| low(e, e.a) && 3 * e.a <= e.h + 2 * e.t1 && e.q_ok(e.a, e.t2), 2),
                ex(|e| low(e, e.a) && (e.h + 2 * e.t1 < 3 * e.a || !e.q_ok(e.a, e.t2)), 4),
                ex(|e| high(e, e.a) && e.a >= e.h + e.t1, 4),
                exg(
                    |e, g| {
                        e.win(g, e.a)
                            && e.three_ok(g, e.a, e.t1)
                            && 2 * e.a <= e.win_hi(g) + e.t1
                            && e.b_ok(g, e.a, e.t2)
                            && e.hh_ok(e.a, e.t1)
                    },
                    1,
                    1,
                ),
            ],
        ),
        // Type 6
        th("thm25", 6, [Z, Z, A], |_| true, vec![
            ex(|e| low1(e, e.a), 2),
            ex(|e| high(e, e.a) && e.w == 0, 2),
            ex(|e| high(e, e.a) && low1(e, e.w), 4),
            exg(|e, g| win2(e, g, e.w, e.a), 1, 1),
        ]),
        th("thm26", 6, [Z, O, A], |e| 0 < e.w, vec![
            ex(|e| e.w + e.a <= e.h, 2),
            ex(|e| e.z2_one && e.a == e.h, 2),
            otherwise(4),
        ]),
        th("thm27", 6, [Z, P, A], |e| 1 < e.w && 0 < e.t2 && e.t2 < e.w, vec![
            ex(|e| low(e, e.a) && e.w <= e.h - e.a + e.t2, 2),
            ex(|e| low(e, e.a) && e.w > e.h - e.a + e.t2, 4),
            ex(|e| high(e, e.a) && low(e, e.w), 4),
            ex(|e| e.h < e.w && e.w < e.a && e.a < e.n && e.a >= e.h + e.t2, 4),
            exg(|e, g| win2(e, g, e.w, e.a) && e.b_ok(g, e.a, e.t2), 1, 1),
        ]),
        th("thm28", 6, [O, Z, A], |_| true, vec![
            ex(|e| e.w == 0, 2),
            ex(|e| low1(e, e.w) && e.w + 2 * e.a <= e.h, 2),
            ex(|e| low1(e, e.w) && e.z1_one && e.a == e.h, 3),
            ex(|e| low1(e, e.w) && e.w + 2 * e.a > e.h && (!e.z1_one || e.a != e.h), 4),
        ]),
        th("thm29", 6, [P, Z, A], |e| 0 < e.t1 && e.t1 < e.cu, vec![
            ex(|e| low(e, e.a) && e.w == 0, 2),
            ex(|e| {
                1 <= e.w && e.w < e.a && e.a <= e.h
                    && e.w <= e.h - 2 * e.a + 2 * e.t1
                    && e.q_ok(e.a, e.t1)
            }, 2),
            ex(|e| {
                1 <= e.w && e.w < e.a && e.a <= e.h
                    && (e.w > e.h - 2 * e.a + 2 * e.t1 || !e.q_ok(e.a, e.t1))
            }, 4),
            ex(|e| high(e, e.a) && e.w == 0, 2),
            ex(|e| high(e, e.a) && low1(e, e.w), 4),
            ex(|e| e.h < e.w && e.w < e.a && e.a < e.n && e.a >= e.h + e.t1, 4),
            // printed with T2, which is absent from this family
            exg(|e, g| win2(e, g, e.w, e.a) && e.b_ok(g, e.a, e.t2) && e.three_ok(g, e.a, e.t1), 1, 1),
        ]),
        th("thm30", 6, [O, O, A], |e| 0 < e.w, vec![
            ex(|e| e.w + 2 * e.a <= e.h, 2),
            ex(|e| e.z1_one && e.z2_one && e.a == e.h, 3),
            otherwise(4),
        ]),
        th("thm31", 6, [P, O, A], |e| 0 < e.w && 0 < e.t1 && e.t1 < e.cu, vec![
            ex(|e| {
                1 <= e.w && e.w < e.a && e.a <= e.h
                    && 2 * e.a <= e.h + e.t1
                    && e.a + e.w <= e.h
                    && 2 * e.a + e.w <= e.h + 2 * e.t1
            }, 2),
            ex(|e| {
                1 <= e.w && e.w < e.a && e.a <= e.h
                    && (2 * e.a > e.h + e.t1 || e.a + e.w > e.h || 2 * e.a + e.w > e.h + 2 * e.t1)
            }, 4),
            ex(|e| high(e, e.a) && low1(e, e.w), 4),
            exg(|e, g| win2(e, g, e.w, e.a) && e.three_ok(g, e.a, e.t1) && e.hh_ok(e.a, e.t1), 1, 1),
        ]),
        th("thm32", 6, [O, P, A], |e| 1 < e.w && 0 < e.t2 && e.t2 < e.w, vec![
            ex(|e| e.w + 2 * e.a <= e.h && e.w + e.a <= e.h + e.t2, 2),
            otherwise(4),
        ]),
        th(
            "thm33",
            6,
            [P, P, A],
            |e| 1 < e.w && 0 < e.t1 && e.t1 < e.cu && 0 < e.t2 && e.t2 < e.w,
            vec![
                ex(|e| {
                    low(e, e.a)
                        && e.w <= e.h - e.a + 2 * e.t2
                        && 2 * e.a <= e.h + e.t1
                        && e.w <= e.h - 2 * e.a + 2 * e.t1
                }, 2),
                // the middle disjunct is printed as "2a <= h + T1"
                ex(|e| {
                    low(e, e.a)
                        && (e.w > e.h - e.a + 2 * e.t2
                            || 2 * e.a <= e.h + e.t1
                            || e.w > e.h - 2 * e.a + 2 * e.t1)
                }, 4),
                ex(|e| high(e, e.a) && low(e, e.w), 4),
                ex(|e| e.h < e.w && e.w < e.a && e.a < e.n && e.a >= e.h + e.t1, 4),
                exg(
                    |e, g| {
                        win2(e, g, e.w, e.a)
                            && e.three_ok(g, e.a, e.t1)
                            && e.b_ok(g, e.a, e.t2)
                            && e.hh_ok(e.a, e.t1)
                    },
                    1,
                    1,
                ),
            ],
        ),
        // Type 7
        th("thm35", 7, [Z, Z, Z], |_| true, vec![
            ex(|e| low1(e, e.a), 2),
            ex(|e| high(e, e.a) && e.b == 0, 2),
            ex(|e| high(e, e.a) && low1(e, e.b), 4),
            exg(|e, g| win2(e, g, e.b, e.a), 1, 1),
        ]),
        th("thm36", 7, [O, Z, Z], |e| 0 < e.b, vec![
            ex(|e| low(e, e.a) && e.a + e.b <= e.h, 2),
            ex(|e| low(e, e.a) && e.z1_one && e.a == e.h, 3),
            ex(|e| low(e, e.a) && e.a + e.b > e.h && (!e.z1_one || e.a != e.h), 4),
            ex(|e| high(e, e.a) && low1(e, e.b), 4),
            exgc(|e, g| win2(e, g, e.b, e.a), 4),
        ]),
        th("thm37", 7, [P, Z, Z], |e| 0 < e.t1 && e.t1 < e.b, vec![
            ex(|e| low(e, e.a) && e.b <= e.h - e.a + e.t1, 2),
            ex(|e| low(e, e.a) && e.b > e.h - e.a + e.t1, 4),
            ex(|e| high(e, e.a) && low(e, e.b), 4),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && e.a >= e.h + e.t1, 4),
            exg(|e, g| win2(e, g, e.b, e.a) && e.b_ok(g, e.a, e.t1) && e.three_ok(g, e.a, e.t1), 1, 1),
        ]),
        th("thm38", 7, [Z, O, Z], |e| 0 < e.cw, vec![
            ex(|e| e.b + e.a <= e.h, 2),
            ex(|e| e.z2_one && e.a == e.h, 2),
            otherwise(4),
        ]),
        th("thm39", 7, [Z, P, Z], |e| 1 < e.cw && 0 < e.t2 && e.t2 < e.cw, {
            let head = vec![
                ex(|e| low(e, e.a) && e.q_ok(e.a, e.t2), 2),
                ex(|e| low(e, e.a) && !e.q_ok(e.a, e.t2), 4),
            ];
            // the window clause also asks a <= 2^s - 2^(s-g), below its own window
            with_tail(head, |e| h_cw_b_a(e) && e.a >= e.h + e.t2, vec![exg(
                |e, g| {
                    e.win_lo(g) <= e.cw
                        && win2(e, g, e.b, e.a)
                        && e.cw <= e.b
                        && e.a <= e.n - (1 << (e.s - g))
                        && e.hh_ok(e.a, e.t2)
                },
                1,
                1,
            )])
        }),
        th("thm40", 7, [Z, Z, O], |e| 0 < e.cw, vec![
            ex(|e| low(e, e.a), 2),
            ex(|e| high(e, e.a), 4),
        ]),
        th("thm41", 7, [Z, Z, P], |e| 1 < e.cw && 0 < e.t3 && e.t3 < e.cw, {
            with_tail(
                vec![ex(|e| low(e, e.a), 2)],
                |e| h_cw_b_a(e) && e.b >= e.h + e.t3,
                vec![exg(|e, g| e.win_lo(g) <= e.cw && e.cw <= e.b && win2(e, g, e.b, e.a), 1, 1)],
            )
        }),
        th("thm42", 7, [O, O, Z], |e| 0 < e.cw && 0 < e.b, vec![
            // "b < a < h" together with "a = h" leaves the second clause empty
            ex(|e| {
                1 <= e.b && e.b < e.a && e.a < e.h
                    && 2 * e.a <= e.h + e.t1
                    && e.a + e.b <= e.h
                    && 2 * e.a + e.b <= e.h + 2 * e.t1
            }, 2),
            ex(|e| 1 <= e.b && e.b < e.a && e.a < e.h && e.z1_one && e.z2_one && e.a == e.h, 3),
            ex(|e| {
                1 <= e.b && e.b < e.a && e.a < e.h
                    && (2 * e.a > e.h + e.t1 || e.a + e.b > e.h || 2 * e.a + e.b > e.h + 2 * e.t1)
                    && (!e.z1_one || !e.z2_one || e.a != e.h)
            }, 4),
            ex(|e| high(e, e.a) && low1(e, e.b), 4),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n, 4),
        ]),
        th("thm43", 7, [P, O, Z], |e| 0 < e.cw && 0 < e.t1 && e.t1 < e.b, vec![
            ex(|e| {
                low(e, e.a) && e.a + e.b <= e.h && e.q_ok(e.a, e.t1) && 2 * e.a + e.b <= e.h + 2 * e.t1
            }, 2),
            ex(|e| {
                low(e, e.a)
                    && (e.a + e.b > e.h || !e.q_ok(e.a, e.t1) || 2 * e.a + e.b > e.h + 2 * e.t1)
            }, 4),
            ex(|e| high(e, e.a) && low(e, e.b), 4),
            exg(|e, g| win2(e, g, e.b, e.a) && e.three_ok(g, e.a, e.t1) && e.hh_ok(e.a, e.t1), 1, 1),
        ]),
        th("thm44", 7, [O, P, Z], |e| 1 < e.cw && 0 < e.b && 0 < e.t2 && e.t2 < e.cw, vec![
            ex(|e| {
                1 < e.b && e.b < e.a && e.a <= e.h
                    && 2 * e.a <= e.h
                    && e.a + e.b <= e.h + e.t2
                    && 2 * e.a + e.b <= e.h
            }, 2),
            ex(|e| {
                1 < e.b && e.b < e.a && e.a <= e.h
                    && (2 * e.a > e.h || e.a + e.b > e.h + e.t2 || 2 * e.a + e.b > e.h)
            }, 4),
            ex(|e| high(e, e.a) && low(e, e.b), 4),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n, 4),
        ]),
        th(
            "thm45",
            7,
            [P, P, Z],
            |e| 0 < e.cw && 0 < e.t1 && e.t1 < e.b && 0 < e.t2 && e.t2 < e.cw,
            vec![
                ex(|e| {
                    1 < e.b && e.b < e.a && e.a <= e.h
                        && 2 * e.a <= e.h + e.t1
                        && e.a + e.b <= e.h + e.t2
                        && 2 * e.a + e.b <= e.h + 2 * e.t1
                }, 2),
                ex(|e| {
                    1 < e.b && e.b < e.a && e.a <= e.h
                        && (2 * e.a > e.h + e.t1
                            || e.a + e.b > e.h + e.t2
                            || 2 * e.a + e.b > e.h + 2 * e.t1)
                }, 4),
                ex(|e| high(e, e.a) && low(e, e.b), 4),
                exg(
                    |e, g| {
                        e.win(g, e.a)
                            && e.three_ok(g, e.a, e.t1)
                            && e.b_ok(g, e.a, e.t2)
                            && e.hh_ok(e.a, e.t1)
                    },
                    1,
                    1,
                ),
            ],
        ),
        th("thm46", 7, [Z, O, O], |e| 0 < e.cw, vec![
            ex(|e| e.b + e.a <= e.h, 2),
            ex(|e| e.z2_one && e.a == e.h, 2),
            otherwise(4),
        ]),
        th("thm47", 7, [Z, P, O], |e| 1 < e.cw && 0 < e.t2 && e.t2 < e.cw, thm47_clauses()),
        th("thm48", 7, [Z, O, P], |e| 1 < e.cw && 0 < e.t3 && e.t3 < e.cw, vec![
            ex(|e| e.b + e.a <= e.h, 2),
            ex(|e| e.z2_one && e.a == e.h, 2),
            otherwise(4),
        ]),
        th(
            "thm49",
            7,
            [Z, P, P],
            |e| 1 < e.cw && 0 < e.t2 && e.t2 < e.cw && 0 < e.t3 && e.t3 < e.cw,
            thm47_clauses(),
        ),
        th("thm50", 7, [O, Z, O], |e| 0 < e.cw && 0 < e.b, vec![
            ex(|e| 2 * e.a + e.b <= e.h, 2),
            ex(|e| e.z1_one && e.a == e.h, 3),
            otherwise(4),
        ]),
        th("thm51", 7, [P, Z, O], |e| 0 < e.cw && 0 < e.t1 && e.t1 < e.b, vec![
            ex(|e| e.h >= e.a && e.h + e.t1 >= 2 * e.a && e.h + 2 * e.t1 >= 2 * e.a + e.b, 2),
            otherwise(4),
        ]),
        th("thm52", 7, [O, Z, P], |e| 1 < e.cw && 0 < e.b && 0 < e.t3 && e.t3 < e.cw, {
            let head = vec![
                ex(|e| low(e, e.a) && 2 * e.a <= e.h && 2 * e.a + e.b <= e.h, 2),
                ex(|e| low(e, e.a) && e.z1_one && e.a == e.h, 3),
                // first disjunct printed as "2a <= h"
                ex(|e| {
                    low(e, e.a)
                        && (2 * e.a <= e.h || 2 * e.a + e.b > e.h)
                        && (!e.z1_one || e.a != e.h)
                }, 4),
            ];
            with_tail(head, |e| h_cw_b_a(e) && e.b >= e.h + e.t3, vec![])
        }),
        th(
            "thm53",
            7,
            [P, Z, P],
            |e| 1 < e.cw && 0 < e.t1 && e.t1 < e.b && 0 < e.t3 && e.t3 < e.cw,
            {
                let head = vec![
                    ex(|e| low(e, e.a) && 2 * e.a <= e.h + e.t1 && 2 * e.a + e.b <= e.h + e.t1, 2),
                    // first disjunct printed as "2a <= h + T1"
                    ex(|e| low(e, e.a) && (2 * e.a <= e.h + e.t1 || 2 * e.a + e.b > e.h + e.t1), 4),
                ];
                with_tail(
                    head,
                    |e| h_cw_b_a(e) && (e.b >= e.h + e.t3 || e.a >= e.h + e.t1),
                    vec![exg(
                        |e, g| {
                            e.win_lo(g) <= e.cw
                                && e.cw <= e.b
                                && win2(e, g, e.b, e.a)
                                && e.b_ok(g, e.a, e.t1)
                                && e.three_ok(g, e.a, e.t1)
                        },
                        1,
                        1,
                    )],
                )
            },
        ),
        th("thm54", 7, [O, O, O], |e| 0 < e.cw && 0 < e.b, vec![
            ex(|e| e.h >= 2 * e.a && e.a + e.b <= e.h && 2 * e.a + e.b <= e.h, 2),
            ex(|e| e.z1_one && e.z2_one && e.a == e.h, 3),
            otherwise(4),
        ]),
        th("thm55", 7, [P, O, O], |e| 0 < e.cw && 0 < e.t1 && e.t1 < e.b, vec![
            ex(|e| e.h >= 2 * e.a && e.a + e.b <= e.h && 2 * e.a + e.b <= e.h, 2),
            otherwise(4),
        ]),
        th("thm56", 7, [O, P, O], |e| 1 < e.cw && 0 < e.b && 0 < e.t2 && e.t2 < e.cw, vec![
            ex(|e| e.h >= 2 * e.a && e.a + e.b <= e.h + e.t2 && 2 * e.a + e.b <= e.h, 2),
            otherwise(4),
        ]),
        th("thm57", 7, [O, O, P], |e| 1 < e.cw && 0 < e.b && 0 < e.t3 && e.t3 < e.cw, {
            let head = vec![
                ex(|e| low(e, e.a) && 2 * e.a <= e.h && e.a + e.b <= e.h && 2 * e.a + e.b <= e.h, 2),
                ex(|e| low(e, e.a) && e.a == e.h && e.z1_one && e.z2_one, 3),
                ex(|e| {
                    low(e, e.a)
                        && (2 * e.a > e.h || e.a + e.b > e.h || 2 * e.a + e.b > e.h)
                        && (!e.z1_one || !e.z2_one || e.a != e.h)
                }, 4),
            ];
            with_tail(head, h_cw_b_a, vec![])
        }),
        th(
            "thm58",
            7,
            [P, P, O],
            |e| 1 < e.cw && 0 < e.t1 && e.t1 < e.b && 0 < e.t2 && e.t2 < e.cw,
            vec![
                ex(|e| e.h >= 2 * e.a && e.a + e.b <= e.h && 2 * e.a + e.b <= e.h, 2),
                otherwise(4),
            ],
        ),
        th(
            "thm59",
            7,
            [O, P, P],
            |e| 1 < e.cw && 0 < e.b && 0 < e.t2 && e.t2 < e.cw && 0 < e.t3 && e.t3 < e.cw,
            {
                let head = vec![
                    ex(|e| {
                        low(e, e.a) && 2 * e.a <= e.h && e.a + e.b <= e.h + e.t2 && 2 * e.a + e.b <= e.h
                    }, 2),
                    ex(|e| {
                        low(e, e.a)
                            && (2 * e.a > e.h || e.a + e.b > e.h + e.t2 || 2 * e.a + e.b > e.h)
                    }, 4),
                ];
                with_tail(head, h_cw_b_a, vec![])
            },
        ),
        th(
            "thm60",
            7,
            [P, O, P],
            |e| 1 < e.cw && 0 < e.t1 && e.t1 < e.b && 0 < e.t3 && e.t3 < e.cw,
            {
                let head = vec![
                    ex(|e| {
                        low(e, e.a)
                            && 2 * e.a <= e.h + e.t1
                            && e.a + e.b <= e.h
                            && 2 * e.a + e.b <= e.h + e.t1
                    }, 2),
                    ex(|e| {
                        low(e, e.a)
                            && (2 * e.a > e.h + e.t1 || e.a + e.b > e.h || 2 * e.a + e.b > e.h + e.t1)
                    }, 4),
                ];
                with_tail(head, |e| h_cw_b_a(e) && e.b >= e.h + e.t3, vec![exg(
                    |e, g| {
                        e.win_lo(g) <= e.cw
                            && e.cw <= e.b
                            && win2(e, g, e.b, e.a)
                            && e.three_ok(g, e.a, e.t1)
                            && e.hh_ok(e.a, e.t1)
                    },
                    1,
                    1,
                )])
            },
        ),
        th(
            "thm61",
            7,
            [P, P, P],
            |e| {
                1 < e.cw && 0 < e.t1 && e.t1 < e.b && 0 < e.t2 && e.t2 < e.cw && 0 < e.t3 && e.t3 < e.cw
            },
            {
                let head = vec![
                    ex(|e| {
                        low(e, e.a)
                            && 2 * e.a <= e.h + e.t1
                            && e.a + e.b <= e.h + e.t2
                            && 2 * e.a + e.b <= e.h + e.t1
                    }, 2),
                    ex(|e| {
                        low(e, e.a)
                            && (2 * e.a > e.h + e.t1
                                || e.a + e.b > e.h + e.t2
                                || 2 * e.a + e.b > e.h + e.t1)
                    }, 4),
                ];
                with_tail(head, |e| h_cw_b_a(e) && e.b >= e.h + e.t3, vec![exg(
                    |e, g| {
                        e.win_lo(g) <= e.cw
                            && e.cw <= e.b
                            && win2(e, g, e.b, e.a)
                            && e.three_ok(g, e.a, e.t1)
                            && e.b_ok(g, e.a, e.t2)
                            && e.hh_ok(e.a, e.t1)
                    },
                    1,
                    1,
                )])
            },
        ),
        // Type 8: the three displayed z-patterns
        th("type8a", 8, [Z, Z, Z], |_| true, vec![
            ex(|e| 1 < e.b && e.b < e.a && e.a < e.h && e.w == 0, 2),
            ex(|e| high(e, e.a) && low(e, e.b) && e.w == 0, 2),
            ex(|e| high(e, e.a) && 1 <= e.w && e.w < e.b && e.b <= e.h, 4),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && e.w == 0, 2),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && low1(e, e.w), 4),
            exg(|e, g| e.win_lo(g) <= e.w && e.w < e.b && win2(e, g, e.b, e.a), 1, 1),
        ]),
        th("type8b", 8, [O, Z, Z], |e| 0 < e.b, vec![
            ex(|e| 1 < e.b && e.b < e.a && e.a < e.h && e.w == 0, 2),
            ex(|e| 1 <= e.w && e.w < e.b && e.b < e.a && e.a < e.h && e.b + e.a <= e.h, 2),
            ex(|e| 1 <= e.w && e.w < e.b && e.b < e.a && e.a < e.h && e.b + e.a > e.h, 4),
            ex(|e| e.a == e.h && e.z1_one && e.w == 0, 2),
            ex(|e| e.a == e.h && e.z1_one && e.w > 0, 4),
            ex(|e| high(e, e.a) && low(e, e.b) && e.w == 0, 2),
            ex(|e| high(e, e.a) && 1 <= e.w && e.w < e.b && e.b <= e.h, 4),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && e.w == 0, 2),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && low1(e, e.w), 4),
            ex(|e| e.h < e.w && e.w < e.b && e.b < e.a && e.a < e.n, 4),
        ]),
        th("type8c", 8, [P, Z, Z], |_| true, vec![
            ex(|e| 1 < e.b && e.b < e.a && e.a <= e.h && e.w == 0, 2),
            ex(|e| 1 <= e.w && e.w < e.b && e.b < e.a && e.a <= e.h && e.b + e.a <= e.h + e.t1, 2),
            ex(|e| 1 <= e.w && e.w < e.b && e.b < e.a && e.a <= e.h && e.b + e.a > e.h + e.t1, 4),
            ex(|e| high(e, e.a) && low(e, e.b) && e.w == 0, 2),
            ex(|e| high(e, e.a) && 1 <= e.w && e.w < e.b && e.b <= e.h, 4),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && e.w == 0, 2),
            ex(|e| e.h < e.b && e.b < e.a && e.a < e.n && low1(e, e.w), 4),
            exg(
                |e, g| {
                    e.win_lo(g) <= e.w
                        && e.w < e.b
                        && win2(e, g, e.b, e.a)
                        && e.b_ok(g, e.a, e.t1)
                        && e.three_ok(g, e.a, e.t1)
                },
                1,
                1,
            ),
        ]),
    ]
}

fn thm47_clauses() -> Vec<Clause> {
    with_tail(
        vec![
            ex(|e| low(e, e.a) && e.a + e.b <= e.h + e.t2, 2),
            ex(|e| low(e, e.a) && e.a + e.b > e.h + e.t2, 4),
        ],
        |e| h_cw_b_a(e) && e.a >= e.h + e.t2,
        vec![exg(
            |e, g| e.win_lo(g) <= e.cw && e.cw <= e.b && win2(e, g, e.b, e.a) && e.b_ok(g, e.a, e.t2),
            1,
            1,
        )],
    )
}

/// All Lee-distance theorems, built once.
pub fn theorems() -> &'static [Theorem] {
    static T: OnceLock<Vec<Theorem>> = OnceLock::new();
    T.get_or_init(build)
}
