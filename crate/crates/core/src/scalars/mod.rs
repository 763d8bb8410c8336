//! Exact coefficient field: rational functions in `t` over `Q(i)`, extended
//! by a fixed pair of formal square roots.
//!
//! The deformation parameter `q` is never stored; it is always `-t^2`.
//! Three radicands are accepted on input: `1 + t^2`, `1 + t^-2` and
//! `(t + t^-1)/(t - t^-1)`. Since `1 + t^-2 = t^-2 (1 + t^2)`, the second is
//! stored as `t^-1 * sqrt(1 + t^2)`; the field therefore carries two
//! independent radicals and every element has a unique representation.

mod gauss;
mod poly;
mod ratfunc;

use std::fmt;

use num_complex::Complex64;
use serde_json::{json, Value};

pub use gauss::Gauss;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Radicands accepted by [`Scalar::sqrt_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Radicand {
    /// `1 + t^2`, i.e. `1 - q`.
    OnePlusT2,
    /// `1 + t^-2`, i.e. `1 - q^-1`.
    OnePlusTInv2,
    /// `(t + t^-1)/(t - t^-1)`, the square of kappa.
    Kappa,
}

impl Radicand {
    pub fn value(self) -> RatFunc {
        match self {
            Radicand::OnePlusT2 => RatFunc::laurent(&[(0, 1), (2, 1)]),
            Radicand::OnePlusTInv2 => RatFunc::laurent(&[(0, 1), (-2, 1)]),
            Radicand::Kappa => {
                RatFunc::laurent(&[(1, 1), (-1, 1)]).mul(&RatFunc::laurent(&[(1, 1), (-1, -1)]).inv().unwrap())
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Radicand::OnePlusT2 => "1 + t^2",
            Radicand::OnePlusTInv2 => "1 + t^-2",
            Radicand::Kappa => "(t + t^-1)/(t - t^-1)",
        }
    }

    /// Recognize a radicand by value; anything else is unsupported.
    pub fn recognize(r: &RatFunc) -> Option<Radicand> {
        [Radicand::OnePlusT2, Radicand::OnePlusTInv2, Radicand::Kappa].into_iter().find(|k| &k.value() == r)
    }
}

const RADICAL_BITS: [u8; 2] = [0b01, 0b10];

fn stored_radicand(bit: u8) -> RatFunc {
    match bit {
        0b01 => Radicand::OnePlusT2.value(),
        0b10 => Radicand::Kappa.value(),
        _ => unreachable!(),
    }
}

fn radical_names(mask: u8) -> Vec<&'static str> {
    let mut v = Vec::new();
    if mask & 0b01 != 0 {
        v.push(Radicand::OnePlusT2.name());
    }
    if mask & 0b10 != 0 {
        v.push(Radicand::Kappa.name());
    }
    v
}

/// An element of `Q(i)(t)[sqrt(1+t^2), kappa]`.
///
/// Stored as `sum_mask coeff_mask * radical_monomial(mask)` with masks sorted
/// and zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: Vec<(u8, RatFunc)>,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<RatFunc> for Scalar {
    fn from(r: RatFunc) -> Self {
        if r.is_zero() {
            Scalar::zero()
        } else {
            Scalar { terms: vec![(0, r)] }
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from(RatFunc::from_int(n))
    }
}

impl From<Gauss> for Scalar {
    fn from(g: Gauss) -> Self {
        Scalar::from(RatFunc::constant(g))
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    pub fn int(n: i64) -> Self {
        Scalar::from(n)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from(Gauss::from_ratio(n, d))
    }

    pub fn i() -> Self {
        Scalar::from(Gauss::i())
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        Scalar::from(Gauss::i_pow(k))
    }

    pub fn t() -> Self {
        Scalar::t_pow(1)
    }

    pub fn t_pow(e: i64) -> Self {
        Scalar::from(RatFunc::t_pow(e))
    }

    /// `q = -t^2`.
    pub fn q() -> Self {
        Scalar::from(RatFunc::monomial(Gauss::from_int(-1), 2))
    }

    /// `q^e = (-1)^e t^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        Scalar::from(RatFunc::monomial(Gauss::from_int(sign), 2 * e))
    }

    /// A Laurent polynomial in `t` with integer coefficients.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        Scalar::from(RatFunc::laurent(terms))
    }

    /// The formal square root of one of the supported radicands.
    pub fn sqrt_of(r: Radicand) -> Self {
        match r {
            Radicand::OnePlusT2 => Scalar { terms: vec![(0b01, RatFunc::one())] },
            Radicand::OnePlusTInv2 => Scalar { terms: vec![(0b01, RatFunc::t_pow(-1))] },
            Radicand::Kappa => Scalar { terms: vec![(0b10, RatFunc::one())] },
        }
    }

    /// Square root of an arbitrary radical-free value; only the fixed
    /// radicands (times a perfect square monomial `t^2k`) are supported.
    pub fn sqrt(&self) -> Result<Scalar> {
        let r = self.radical_free().ok_or_else(|| Error::UnsupportedRadical(self.to_string()))?;
        if r.is_zero() {
            return Ok(Scalar::zero());
        }
        if r.is_one() {
            return Ok(Scalar::one());
        }
        match Radicand::recognize(&r) {
            Some(k) => Ok(Scalar::sqrt_of(k)),
            None => Err(Error::UnsupportedRadical(self.to_string())),
        }
    }

    pub fn kappa() -> Self {
        Scalar::sqrt_of(Radicand::Kappa)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The value as a plain rational function, if no radical occurs.
    pub fn radical_free(&self) -> Option<RatFunc> {
        match self.terms.as_slice() {
            [] => Some(RatFunc::zero()),
            [(0, r)] => Some(r.clone()),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<Gauss> {
        self.radical_free().and_then(|r| r.as_constant())
    }

    pub fn terms(&self) -> &[(u8, RatFunc)] {
        &self.terms
    }

    fn from_terms(mut terms: Vec<(u8, RatFunc)>) -> Self {
        terms.retain(|(_, r)| !r.is_zero());
        terms.sort_by_key(|(m, _)| *m);
        Scalar { terms }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.terms.len() == 1 && o.terms.len() == 1 && self.terms[0].0 == o.terms[0].0 {
            let s = self.terms[0].1.add(&o.terms[0].1);
            return Scalar::from_terms(vec![(self.terms[0].0, s)]);
        }
        let mut out: Vec<(u8, RatFunc)> = self.terms.clone();
        for (m, r) in &o.terms {
            match out.iter_mut().find(|(k, _)| k == m) {
                Some(slot) => slot.1 = slot.1.add(r),
                None => out.push((*m, r.clone())),
            }
        }
        Scalar::from_terms(out)
    }

    pub fn neg(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, r)| (*m, r.neg())).collect() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.terms.len() == 1 && o.terms.len() == 1 && self.terms[0].0 == 0 {
            return Scalar { terms: vec![(o.terms[0].0, self.terms[0].1.mul(&o.terms[0].1))] };
        }
        let mut out: Vec<(u8, RatFunc)> = Vec::new();
        for (m1, r1) in &self.terms {
            for (m2, r2) in &o.terms {
                let mut c = r1.mul(r2);
                let common = m1 & m2;
                for bit in RADICAL_BITS {
                    if common & bit != 0 {
                        c = c.mul(&stored_radicand(bit));
                    }
                }
                let m = m1 ^ m2;
                match out.iter_mut().find(|(k, _)| *k == m) {
                    Some(slot) => slot.1 = slot.1.add(&c),
                    None => out.push((m, c)),
                }
            }
        }
        Scalar::from_terms(out)
    }

    /// Flip the sign of one radical (a field automorphism).
    fn flip(&self, bit: u8) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, r)| (*m, if m & bit != 0 { r.neg() } else { r.clone() })).collect() }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.radical_free() {
            return Ok(Scalar::from(r.inv().unwrap()));
        }
        // multiply by the conjugate in the highest radical present
        let top = RADICAL_BITS.iter().rev().copied().find(|b| self.terms.iter().any(|(m, _)| m & b != 0)).unwrap();
        let c = self.flip(top);
        let n = self.mul(&c);
        Ok(c.mul(&n.inv()?))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Scalar> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Anti-linear conjugation: `i -> -i`, `t` and the radicals fixed.
    pub fn conj(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, r)| (*m, r.conj())).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        self.mul(&Scalar::from(n))
    }

    /// Exact value at a Gaussian rational `t`, for radical-free scalars.
    pub fn eval_exact(&self, t: &Gauss) -> Option<Gauss> {
        self.radical_free()?.eval_exact(t)
    }

    /// Numeric value at a given `q`.
    ///
    /// `t = i * sqrt(q)` with the principal square root; for real `q < 0`
    /// this is `t = -sqrt(-q)`. Stored radicals use the principal branch.
    pub fn eval_numeric(&self, q: Complex64) -> Result<Complex64> {
        let t = t_from_q(q)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, r) in &self.terms {
            let mut v = r.eval(t).ok_or(Error::Pole)?;
            for bit in RADICAL_BITS {
                if m & bit != 0 {
                    let rad = stored_radicand(bit).eval(t).ok_or(Error::Pole)?;
                    v *= rad.sqrt();
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let comp = |m: u8, r: &RatFunc| {
            let (num, den) = r.integer_parts();
            let enc = |v: Vec<(i64, num_bigint::BigInt, num_bigint::BigInt)>| -> Value {
                Value::Array(
                    v.into_iter()
                        .map(|(e, re, im)| json!({"exp": e, "re": re.to_string(), "im": im.to_string()}))
                        .collect(),
                )
            };
            json!({"num": enc(num), "den": enc(den), "radicals": radical_names(m)})
        };
        match self.terms.as_slice() {
            [] => comp(0, &RatFunc::zero()),
            [(m, r)] => comp(*m, r),
            many => json!({"sum": many.iter().map(|(m, r)| comp(*m, r)).collect::<Vec<_>>()}),
        }
    }
}

/// `t = i * sqrt(q)` (principal branch).
pub fn t_from_q(q: Complex64) -> Result<Complex64> {
    if q.norm() == 0.0 {
        return Err(Error::InvalidParameter("q must be nonzero".into()));
    }
    if (q.norm() - 1.0).abs() < 1e-12 {
        let mut p = Complex64::new(1.0, 0.0);
        for _ in 1..=48 {
            p *= q;
            if (p - 1.0).norm() < 1e-12 {
                return Err(Error::InvalidParameter("q must not be a root of unity".into()));
            }
        }
    }
    if q.im == 0.0 && q.re < 0.0 {
        return Ok(Complex64::new(-(-q.re).sqrt(), 0.0));
    }
    Ok(Complex64::new(0.0, 1.0) * q.sqrt())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, r)| {
                let mut s = r.to_string();
                let rads: Vec<String> = radical_names(*m)
                    .into_iter()
                    .map(|n| if n.starts_with('(') { "kappa".to_string() } else { format!("sqrt({n})") })
                    .collect();
                if !rads.is_empty() {
                    if s == "1" {
                        s = rads.join("*");
                    } else {
                        s = format!("({s})*{}", rads.join("*"));
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
