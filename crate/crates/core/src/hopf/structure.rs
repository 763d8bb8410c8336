//! Coproduct, counit, antipode and star.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::superalg::{Element, Gen, Monomial, Ring, Rules};

use super::tensor::{Factor, TensorElement};

type Key = (Ring, Rules, Monomial);

fn delta_cache() -> &'static RwLock<HashMap<Key, TensorElement>> {
    static C: OnceLock<RwLock<HashMap<Key, TensorElement>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn antipode_cache() -> &'static RwLock<HashMap<Key, Element>> {
    static C: OnceLock<RwLock<HashMap<Key, Element>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn pair(ring: Ring, rules: Rules, terms: &[(Gen, Gen)]) -> TensorElement {
    let mut t = TensorElement::zero(ring).with_rules(rules);
    for &(x, y) in terms {
        t.add_term(vec![Factor::Alg(Monomial::gen(x)), Factor::Alg(Monomial::gen(y))], Scalar::one());
    }
    t
}

fn delta_gen(g: Gen, ring: Ring, rules: Rules) -> TensorElement {
    use Gen::*;
    match g {
        A => pair(ring, rules, &[(A, A), (B, C)]),
        B => pair(ring, rules, &[(A, B), (B, D)]),
        C => pair(ring, rules, &[(C, A), (D, C)]),
        D => pair(ring, rules, &[(C, B), (D, D)]),
        Sigma => pair(ring, rules, &[(Sigma, Sigma)]),
    }
}

/// Split a nontrivial monomial into the monomial of its word minus the last
/// letter, and that letter.
fn split_last(m: Monomial) -> (Monomial, Gen) {
    let mut p = m;
    let g = if p.s == 1 {
        p.s = 0;
        Gen::Sigma
    } else if p.d > 0 {
        p.d -= 1;
        Gen::D
    } else if p.c > 0 {
        p.c -= 1;
        Gen::C
    } else if p.b > 0 {
        p.b -= 1;
        Gen::B
    } else {
        p.a -= 1;
        Gen::A
    };
    (p, g)
}

/// `Delta` on a normal monomial, built letter by letter and memoized.
pub fn coproduct_mono(m: Monomial, ring: Ring, rules: Rules) -> TensorElement {
    if m == Monomial::ONE {
        return TensorElement::one(ring, 2).with_rules(rules);
    }
    let key = (ring, rules, m);
    if let Some(t) = delta_cache().read().unwrap().get(&key) {
        return t.clone();
    }
    let (p, g) = split_last(m);
    let t = coproduct_mono(p, ring, rules).mul(&delta_gen(g, ring, rules));
    crate::cache::insert(&mut delta_cache().write().unwrap(), key, t.clone());
    t
}

pub fn coproduct(x: &Element) -> TensorElement {
    let mut out = TensorElement::zero(x.ring()).with_rules(x.rules());
    for (m, c) in x.terms() {
        out = out.add(&coproduct_mono(*m, x.ring(), x.rules()).scale(c));
    }
    out
}

pub fn counit_mono(m: Monomial) -> Scalar {
    if m.b == 0 && m.c == 0 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub fn counit(x: &Element) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in x.terms() {
        if m.b == 0 && m.c == 0 {
            acc = acc.add(c);
        }
    }
    acc
}

fn require_asigma(ring: Ring, op: &'static str) -> Result<()> {
    if ring != Ring::Asigma {
        return Err(Error::NotInRing { op, ring });
    }
    Ok(())
}

/// The images of the generators under `S` (`star == false`) or `*`.
fn gen_image(g: Gen, star: bool, rules: Rules) -> Element {
    let r = Ring::Asigma;
    let mono =
        |a, b, c, d, s, coef: Scalar| Element::monomial_with(r, Monomial::new(a, b, c, d, s), coef).with_rules(rules);
    let t = Scalar::t();
    let mt_inv = Scalar::t_pow(-1).neg();
    match (g, star) {
        (Gen::A, _) => mono(0, 0, 0, 1, 1, Scalar::one()),
        (Gen::D, _) => mono(1, 0, 0, 0, 1, Scalar::one()),
        (Gen::Sigma, _) => mono(0, 0, 0, 0, 1, Scalar::one()),
        (Gen::B, false) => mono(0, 1, 0, 0, 1, mt_inv),
        (Gen::C, false) => mono(0, 0, 1, 0, 1, t),
        (Gen::B, true) => mono(0, 0, 1, 0, 1, t),
        (Gen::C, true) => mono(0, 1, 0, 0, 1, mt_inv),
    }
}

/// Reversed product of generator images; `graded` adds the sign
/// `(-1)^(o(o-1)/2)` where `o` counts the odd letters.
fn anti_mono(m: Monomial, star: bool, rules: Rules) -> Element {
    let mut acc = Element::one(Ring::Asigma).with_rules(rules);
    for g in m.word().into_iter().rev() {
        acc = acc.mul(&gen_image(g, star, rules));
    }
    let o = m.b + m.c;
    if !star && (o * o.saturating_sub(1) / 2) % 2 == 1 {
        acc = acc.neg();
    }
    acc
}

pub fn antipode_mono(m: Monomial, rules: Rules) -> Element {
    let key = (Ring::Asigma, rules, m);
    if let Some(e) = antipode_cache().read().unwrap().get(&key) {
        return e.clone();
    }
    let e = anti_mono(m, false, rules);
    crate::cache::insert(&mut antipode_cache().write().unwrap(), key, e.clone());
    e
}

/// The antipode, a graded anti-automorphism: `S(xy) = (-1)^(p(x)p(y)) S(y)S(x)`.
pub fn antipode(x: &Element) -> Result<Element> {
    require_asigma(x.ring(), "antipode")?;
    let mut out = Element::zero(Ring::Asigma).with_rules(x.rules());
    for (m, c) in x.terms() {
        out = out.add(&antipode_mono(*m, x.rules()).scale(c));
    }
    Ok(out)
}

/// The star: anti-linear, `(xy)* = y* x*` with no sign.
pub fn star(x: &Element) -> Result<Element> {
    require_asigma(x.ring(), "star")?;
    let mut out = Element::zero(Ring::Asigma).with_rules(x.rules());
    for (m, c) in x.terms() {
        out = out.add(&anti_mono(*m, true, x.rules()).scale(&c.conj()));
    }
    Ok(out)
}

/// `(* (x) *)` on a 2-tensor of algebra legs, including the sign
/// `(-1)^(p(x)p(y))` required for compatibility with the coproduct.
pub fn star_tensor(t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(t.ring()).with_rules(t.rules());
    for (legs, c) in t.terms() {
        let (Factor::Alg(x), Factor::Alg(y)) = (legs[0], legs[1]) else {
            panic!("star_tensor needs algebra legs");
        };
        let sx = anti_mono(x, true, t.rules());
        let sy = anti_mono(y, true, t.rules());
        let mut p = TensorElement::from_pair(&sx, &sy).scale(&c.conj());
        if x.parity() * y.parity() == 1 {
            p = p.scale(&Scalar::int(-1));
        }
        out = out.add(&p);
    }
    out
}
