//! The quantum super plane `xy = t yx` with `x` even and `y` odd, and the
//! left and right coactions of the algebra on it.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Scalar;
use crate::superalg::{Gen, Monomial, Ring};

use super::tensor::{Factor, TensorElement};

/// `x^x y^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneMono {
    pub x: u32,
    pub y: u32,
}

impl PlaneMono {
    pub const ONE: PlaneMono = PlaneMono { x: 0, y: 0 };
    pub const X: PlaneMono = PlaneMono { x: 1, y: 0 };
    pub const Y: PlaneMono = PlaneMono { x: 0, y: 1 };

    pub fn new(x: u32, y: u32) -> Self {
        PlaneMono { x, y }
    }

    pub fn parity(&self) -> u8 {
        (self.y % 2) as u8
    }
}

impl fmt::Display for PlaneMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                e => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// `x^m y^n x^p y^r = t^(-np) x^(m+p) y^(n+r)`; `None` when `y^2 = 0` kills it.
pub(crate) fn plane_mul(a: PlaneMono, b: PlaneMono, nilpotent: bool) -> Option<(PlaneMono, Scalar)> {
    let m = PlaneMono::new(a.x + b.x, a.y + b.y);
    if nilpotent && m.y >= 2 {
        return None;
    }
    Some((m, Scalar::t_pow(-((a.y * b.x) as i64))))
}

/// An element of the plane in normal order (`x` before `y`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneElement {
    pub nilpotent: bool,
    terms: BTreeMap<PlaneMono, Scalar>,
}

impl PlaneElement {
    pub fn monomial(m: PlaneMono) -> Self {
        let mut p = PlaneElement::default();
        p.terms.insert(m, Scalar::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlaneMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, o: &PlaneElement) -> PlaneElement {
        let mut out = PlaneElement { nilpotent: self.nilpotent || o.nilpotent, terms: BTreeMap::new() };
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if let Some((m, c)) = plane_mul(*a, *b, out.nilpotent) {
                    let v = out.terms.remove(&m).unwrap_or_default().add(&c.mul(ca).mul(cb));
                    if !v.is_zero() {
                        out.terms.insert(m, v);
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn alg(g: Gen) -> Factor {
    Factor::Alg(Monomial::gen(g))
}

/// The coaction on a generator: `psi_L(x) = a(x)x + b(x)y`, `psi_L(y) = c(x)x + d(x)y`,
/// `psi_R(x) = x(x)a + y(x)c`, `psi_R(y) = x(x)b + y(x)d`.
fn coact_gen(side: Side, ring: Ring, nil: bool, is_y: bool) -> TensorElement {
    let (g1, g2) = match (side, is_y) {
        (Side::Left, false) => (Gen::A, Gen::B),
        (Side::Left, true) => (Gen::C, Gen::D),
        (Side::Right, false) => (Gen::A, Gen::C),
        (Side::Right, true) => (Gen::B, Gen::D),
    };
    let x = Factor::Plane(PlaneMono::X);
    let y = Factor::Plane(PlaneMono::Y);
    let mut t = TensorElement::zero(ring).with_nilpotent_plane(nil);
    match side {
        Side::Left => {
            t.add_term(vec![alg(g1), x], Scalar::one());
            t.add_term(vec![alg(g2), y], Scalar::one());
        }
        Side::Right => {
            t.add_term(vec![x, alg(g1)], Scalar::one());
            t.add_term(vec![y, alg(g2)], Scalar::one());
        }
    }
    t
}

/// The coaction on a plane monomial, extended multiplicatively.
pub fn coaction_mono(side: Side, ring: Ring, m: PlaneMono, nilpotent: bool) -> TensorElement {
    let unit = match side {
        Side::Left => vec![Factor::Alg(Monomial::ONE), Factor::Plane(PlaneMono::ONE)],
        Side::Right => vec![Factor::Plane(PlaneMono::ONE), Factor::Alg(Monomial::ONE)],
    };
    let mut acc = TensorElement::pure(ring, unit, Scalar::one()).with_nilpotent_plane(nilpotent);
    let gx = coact_gen(side, ring, nilpotent, false);
    let gy = coact_gen(side, ring, nilpotent, true);
    for _ in 0..m.x {
        acc = acc.mul(&gx);
    }
    for _ in 0..m.y {
        acc = acc.mul(&gy);
    }
    acc
}

pub fn coaction(side: Side, ring: Ring, p: &PlaneElement) -> TensorElement {
    let mut out = TensorElement::zero(ring).with_nilpotent_plane(p.nilpotent);
    for (m, c) in p.terms() {
        out = out.add(&coaction_mono(side, ring, *m, p.nilpotent).scale(c));
    }
    out
}
