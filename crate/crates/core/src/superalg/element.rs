use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::monomial::{Gen, Monomial, Ring};
use super::rewrite::{mul_monomials, reduce_asigma, Rules};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// A finite linear combination of normal-form monomials.
///
/// Zero coefficients are never stored, so two elements are equal exactly
/// when their term maps coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    ring: Ring,
    rules: Rules,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero(ring: Ring) -> Self {
        Element { ring, rules: Rules::default(), terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Element::scalar(ring, Scalar::one())
    }

    pub fn scalar(ring: Ring, c: Scalar) -> Self {
        Element::monomial_with(ring, Monomial::ONE, c)
    }

    /// A single generator; `sigma` is rejected in ring `B`.
    pub fn gen(ring: Ring, g: Gen) -> Result<Self> {
        if g == Gen::Sigma && !ring.has_sigma() {
            return Err(Error::NotInRing { op: "sigma", ring });
        }
        Ok(Element::monomial(ring, Monomial::gen(g)))
    }

    /// Shorthand for generators that always exist; panics on `sigma` in `B`.
    pub fn g(ring: Ring, g: Gen) -> Self {
        Element::gen(ring, g).expect("generator not in ring")
    }

    /// A monomial brought into normal form (it need not be a basis monomial).
    pub fn monomial(ring: Ring, m: Monomial) -> Self {
        Element::monomial_with(ring, m, Scalar::one())
    }

    pub fn monomial_with(ring: Ring, m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero(ring);
        if c.is_zero() {
            return e;
        }
        if m.is_normal_in(ring) {
            e.terms.insert(m, c);
        } else if ring == Ring::Asigma {
            for (mm, rc) in reduce_asigma(m) {
                e.add_term(mm, Scalar::from(rc).mul(&c));
            }
        } else {
            panic!("monomial {m} has sigma in ring B");
        }
        e
    }

    /// `zeta = t b c sigma`.
    pub fn zeta() -> Self {
        Element::monomial_with(Ring::Asigma, Monomial::new(0, 1, 1, 0, 1), Scalar::t())
    }

    pub fn with_rules(mut self, rules: Rules) -> Self {
        self.rules = rules;
        self
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    fn check_ring(&self, o: &Element) -> Result<()> {
        if self.ring != o.ring {
            return Err(Error::RingMismatch(self.ring, o.ring));
        }
        Ok(())
    }

    pub fn add(&self, o: &Element) -> Element {
        assert_eq!(self.ring, o.ring, "ring mismatch in add");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero(self.ring).with_rules(self.rules);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(*m, x.mul(c));
        }
        out
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut out = Element::zero(self.ring).with_rules(self.rules);
        for (m, x) in &self.terms {
            out.add_term(*m, f(x));
        }
        out
    }

    /// Normal form of the product; fails when the rings differ.
    pub fn try_mul(&self, o: &Element) -> Result<Element> {
        self.check_ring(o)?;
        let rules = self.rules;
        let mut out = Element::zero(self.ring).with_rules(rules);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1.mul(c2);
                for (m, rc) in mul_monomials(*m1, *m2, self.ring, rules) {
                    out.add_term(m, c.mul(&Scalar::from(rc)));
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Element) -> Element {
        self.try_mul(o).expect("ring mismatch in mul")
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = Element::one(self.ring).with_rules(self.rules);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Homogeneous parity, or `None` for mixed (or zero) elements.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let p = it.next()?;
        it.all(|q| q == p).then_some(p)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Re-tag an element of `B` or `Bsigma` as an element of `Asigma`.
    pub fn to_asigma(&self) -> Element {
        let mut out = Element::zero(Ring::Asigma);
        for (m, c) in &self.terms {
            for (mm, rc) in reduce_asigma(*m) {
                out.add_term(mm, Scalar::from(rc).mul(c));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(m, c)| json!({"powers": m.powers(), "coeff": c.to_json()})).collect();
        json!({"terms": terms, "ring": self.ring.name()})
    }
}

/// Render a coefficient so that it can sit in front of a monomial.
pub(crate) fn coeff_prefix(c: &Scalar) -> (bool, String) {
    let s = c.to_string();
    let simple = !s[1..].contains(" + ") && !s[1..].contains(" - ");
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) if simple => (true, rest.to_string()),
        _ => (false, s.clone()),
    };
    let body = if body.contains(' ') || body.contains('/') { format!("({body})") } else { body };
    (neg, body)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = coeff_prefix(c);
            let term = if *m == Monomial::ONE {
                body
            } else if body == "1" {
                m.to_string()
            } else {
                format!("{body}*{m}")
            };
            match (idx, neg) {
                (0, true) => write!(f, "-{term}")?,
                (0, false) => write!(f, "{term}")?,
                (_, true) => write!(f, " - {term}")?,
                (_, false) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

/// Normal form of a word of generators.
pub fn normal_form(word: &[Gen], ring: Ring) -> Result<Element> {
    let mut acc = Element::one(ring);
    for &g in word {
        acc = acc.mul(&Element::gen(ring, g)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: Gen) -> Element {
        Element::g(Ring::Asigma, x)
    }

    #[test]
    fn da_in_b() {
        let da = normal_form(&[Gen::D, Gen::A], Ring::B).unwrap();
        let expect = Element::monomial(Ring::B, Monomial::new(1, 0, 0, 1, 0)).sub(
            &Element::monomial(Ring::B, Monomial::new(0, 1, 1, 0, 0)).scale(&Scalar::laurent(&[(-1, 1), (1, -1)])),
        );
        assert_eq!(da, expect);
    }

    #[test]
    fn cb_anticommutes() {
        let cb = normal_form(&[Gen::C, Gen::B], Ring::B).unwrap();
        assert_eq!(cb, Element::monomial(Ring::B, Monomial::new(0, 1, 1, 0, 0)).neg());
    }

    #[test]
    fn ad_is_sigma_minus_tbc() {
        let ad = g(Gen::A).mul(&g(Gen::D));
        let expect = g(Gen::Sigma).sub(&g(Gen::B).mul(&g(Gen::C)).scale(&Scalar::t()));
        assert_eq!(ad, expect);
    }

    #[test]
    fn sigma_b() {
        assert_eq!(g(Gen::Sigma).mul(&g(Gen::B)), g(Gen::B).mul(&g(Gen::Sigma)).neg());
        assert!(g(Gen::Sigma).mul(&g(Gen::Sigma)) == Element::one(Ring::Asigma));
    }

    #[test]
    fn empty_word_is_one() {
        assert_eq!(normal_form(&[], Ring::Asigma).unwrap(), Element::one(Ring::Asigma));
    }

    #[test]
    fn sigma_rejected_in_b() {
        assert!(Element::gen(Ring::B, Gen::Sigma).is_err());
    }

    #[test]
    fn ring_mismatch() {
        let x = Element::one(Ring::B);
        let y = Element::one(Ring::Asigma);
        assert!(matches!(x.try_mul(&y), Err(Error::RingMismatch(_, _))));
    }

    #[test]
    fn no_nilpotency() {
        let b2 = g(Gen::B).mul(&g(Gen::B));
        assert_eq!(b2, Element::monomial(Ring::Asigma, Monomial::new(0, 2, 0, 0, 0)));
    }

    #[test]
    fn group_like_anticommutes_with_b_and_c() {
        let r = Ring::B;
        let gl = Element::g(r, Gen::A)
            .mul(&Element::g(r, Gen::D))
            .add(&Element::g(r, Gen::B).mul(&Element::g(r, Gen::C)).scale(&Scalar::t()));
        for x in [Gen::B, Gen::C] {
            let x = Element::g(r, x);
            assert_eq!(x.mul(&gl), gl.mul(&x).neg());
        }
        for x in [Gen::A, Gen::D] {
            let x = Element::g(r, x);
            assert_eq!(x.mul(&gl), gl.mul(&x));
        }
    }

    #[test]
    fn associativity_sample() {
        let r = super::super::verify_associativity(50, 3, 7);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, 300);
    }

    #[test]
    fn square_of_ad() {
        // (sigma - t bc)^2 = 1 - 2t bc sigma + t^2 (bc)^2, with (bc)^2 = -b^2 c^2
        let ad = g(Gen::A).mul(&g(Gen::D));
        let sq = ad.mul(&ad);
        let bc_s = Element::monomial(Ring::Asigma, Monomial::new(0, 1, 1, 0, 1));
        let b2c2 = Element::monomial(Ring::Asigma, Monomial::new(0, 2, 2, 0, 0));
        let expect = Element::one(Ring::Asigma)
            .sub(&bc_s.scale(&Scalar::laurent(&[(1, 2)])))
            .sub(&b2c2.scale(&Scalar::laurent(&[(2, 1)])));
        assert_eq!(sq, expect);
    }
}
