//! Finite tensors whose legs are monomials of the algebra or of the
//! quantum plane, multiplied with Koszul signs.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::scalars::Scalar;
use crate::superalg::{coeff_prefix, Element, Monomial, Ring, Rules};

use super::plane::{plane_mul, PlaneMono};

/// One tensor leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Alg(Monomial),
    Plane(PlaneMono),
}

impl Factor {
    pub fn parity(&self) -> u8 {
        match self {
            Factor::Alg(m) => m.parity(),
            Factor::Plane(p) => p.parity(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Alg(m) => write!(f, "{m}"),
            Factor::Plane(p) => write!(f, "{p}"),
        }
    }
}

/// A linear combination of pure tensors `f_1 (x) ... (x) f_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    ring: Ring,
    rules: Rules,
    /// Impose `y^2 = 0` on plane legs.
    plane_nilpotent: bool,
    terms: BTreeMap<Vec<Factor>, Scalar>,
}

impl TensorElement {
    pub fn zero(ring: Ring) -> Self {
        TensorElement { ring, rules: Rules::default(), plane_nilpotent: false, terms: BTreeMap::new() }
    }

    pub fn with_rules(mut self, rules: Rules) -> Self {
        self.rules = rules;
        self
    }

    pub fn with_nilpotent_plane(mut self, on: bool) -> Self {
        self.plane_nilpotent = on;
        self
    }

    fn empty_like(&self) -> Self {
        TensorElement {
            ring: self.ring,
            rules: self.rules,
            plane_nilpotent: self.plane_nilpotent,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of the `n`-fold tensor power of the algebra.
    pub fn one(ring: Ring, n: usize) -> Self {
        let mut t = TensorElement::zero(ring);
        t.add_term(vec![Factor::Alg(Monomial::ONE); n], Scalar::one());
        t
    }

    pub fn pure(ring: Ring, legs: Vec<Factor>, c: Scalar) -> Self {
        let mut t = TensorElement::zero(ring);
        t.add_term(legs, c);
        t
    }

    /// `x (x) y` for two algebra elements.
    pub fn from_pair(x: &Element, y: &Element) -> Self {
        let mut t = TensorElement::zero(x.ring()).with_rules(x.rules());
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                t.add_term(vec![Factor::Alg(*m1), Factor::Alg(*m2)], c1.mul(c2));
            }
        }
        t
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rules(&self) -> Rules {
        self.rules
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Factor>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, legs: &[Factor]) -> Scalar {
        self.terms.get(legs).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, legs: Vec<Factor>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(legs) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = self.empty_like();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.mul(c));
        }
        out
    }

    fn leg_product(&self, x: Factor, y: Factor) -> Vec<(Factor, Scalar)> {
        match (x, y) {
            (Factor::Alg(a), Factor::Alg(b)) => {
                let e = Element::monomial(self.ring, a)
                    .with_rules(self.rules)
                    .mul(&Element::monomial(self.ring, b).with_rules(self.rules));
                e.terms().map(|(m, c)| (Factor::Alg(*m), c.clone())).collect()
            }
            (Factor::Plane(a), Factor::Plane(b)) => match plane_mul(a, b, self.plane_nilpotent) {
                Some((m, c)) => vec![(Factor::Plane(m), c)],
                None => vec![],
            },
            _ => panic!("tensor legs of different kinds"),
        }
    }

    /// Product with `(x_1..x_n)(y_1..y_n) = (-1)^(sum_{i>j} p(x_i) p(y_j)) x_1y_1 .. x_ny_n`.
    pub fn mul(&self, o: &TensorElement) -> TensorElement {
        let mut out = self.empty_like();
        for (xs, cx) in &self.terms {
            for (ys, cy) in &o.terms {
                assert_eq!(xs.len(), ys.len(), "tensor arity mismatch");
                let mut sign = 0u32;
                for (i, x) in xs.iter().enumerate() {
                    for y in &ys[..i] {
                        sign += (x.parity() * y.parity()) as u32;
                    }
                }
                let mut partial: Vec<(Vec<Factor>, Scalar)> = vec![(Vec::with_capacity(xs.len()), cx.mul(cy))];
                for (x, y) in xs.iter().zip(ys) {
                    let prods = self.leg_product(*x, *y);
                    let mut next = Vec::with_capacity(partial.len() * prods.len());
                    for (legs, c) in &partial {
                        for (f, fc) in &prods {
                            let mut l = legs.clone();
                            l.push(*f);
                            next.push((l, c.mul(fc)));
                        }
                    }
                    partial = next;
                }
                for (legs, c) in partial {
                    let c = if sign % 2 == 1 { c.neg() } else { c };
                    out.add_term(legs, c);
                }
            }
        }
        out
    }

    /// Replace leg `k` by the tensor `f(leg)`, which may have any arity.
    /// `f` must be even, so no sign arises.
    pub fn map_leg(&self, k: usize, f: impl Fn(Factor) -> TensorElement) -> TensorElement {
        let mut out = self.empty_like();
        for (legs, c) in &self.terms {
            let img = f(legs[k]);
            for (mid, c2) in img.terms() {
                let mut l = Vec::with_capacity(legs.len() + mid.len());
                l.extend_from_slice(&legs[..k]);
                l.extend_from_slice(mid);
                l.extend_from_slice(&legs[k + 1..]);
                out.add_term(l, c.mul(c2));
            }
        }
        out
    }

    /// Apply a linear map `Monomial -> Element` to algebra leg `k`.
    pub fn map_alg_leg(&self, k: usize, f: impl Fn(Monomial) -> Element) -> TensorElement {
        let ring = self.ring;
        let rules = self.rules;
        self.map_leg(k, |x| match x {
            Factor::Alg(m) => {
                let e = f(m);
                let mut t = TensorElement::zero(ring).with_rules(rules);
                for (mm, c) in e.terms() {
                    t.add_term(vec![Factor::Alg(*mm)], c.clone());
                }
                t
            }
            Factor::Plane(_) => panic!("expected an algebra leg"),
        })
    }

    /// Multiply the two algebra legs of a 2-tensor.
    pub fn multiply_out(&self) -> Element {
        let mut out = Element::zero(self.ring).with_rules(self.rules);
        for (legs, c) in &self.terms {
            match legs.as_slice() {
                [Factor::Alg(x), Factor::Alg(y)] => {
                    let p = Element::monomial(self.ring, *x)
                        .with_rules(self.rules)
                        .mul(&Element::monomial(self.ring, *y).with_rules(self.rules));
                    out = out.add(&p.scale(c));
                }
                _ => panic!("multiply_out needs two algebra legs"),
            }
        }
        out
    }

    /// Collapse a 1-tensor with an algebra leg to an element.
    pub fn to_element(&self) -> Element {
        let mut out = Element::zero(self.ring).with_rules(self.rules);
        for (legs, c) in &self.terms {
            match legs.as_slice() {
                [Factor::Alg(m)] => out = out.add(&Element::monomial_with(self.ring, *m, c.clone())),
                _ => panic!("to_element needs a single algebra leg"),
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> TensorElement {
        let mut out = self.empty_like();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(legs, c)| {
                let legs: Vec<Value> = legs
                    .iter()
                    .map(|f| match f {
                        Factor::Alg(m) => json!(m.powers()),
                        Factor::Plane(p) => json!({"x": p.x, "y": p.y}),
                    })
                    .collect();
                json!({"legs": legs, "coeff": c.to_json()})
            })
            .collect();
        json!({"terms": terms, "ring": self.ring.name()})
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (legs, c)) in self.terms.iter().enumerate() {
            let (neg, body) = coeff_prefix(c);
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let pure = legs.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" (x) ");
            if body == "1" {
                write!(f, "{pure}")?;
            } else {
                write!(f, "{body}*{pure}")?;
            }
        }
        Ok(())
    }
}
