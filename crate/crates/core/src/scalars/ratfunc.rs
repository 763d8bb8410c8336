//! Rational functions in `t` over the Gaussian rationals, kept in a
//! canonical form so that equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::Gauss;
use super::poly::Poly;

/// `(exponent, real part, imaginary part)` of one integer coefficient.
pub type IntTerm = (i64, BigInt, BigInt);

/// `t^shift * num(t) / den(t)`.
///
/// Canonical form: `num` and `den` have nonzero constant terms, `den` is
/// monic, `gcd(num, den) = 1`. Zero is `num = 0, shift = 0, den = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: 0, num: Poly(vec![c]), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::constant(Gauss::from_int(n))
    }

    /// `c * t^e`.
    pub fn monomial(c: Gauss, e: i64) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: e, num: Poly(vec![c]), den: Poly::one() }
    }

    pub fn t_pow(e: i64) -> Self {
        RatFunc::monomial(Gauss::one(), e)
    }

    /// A Laurent polynomial from `(exponent, integer coefficient)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        let mut acc = RatFunc::zero();
        for &(e, c) in terms {
            acc = acc.add(&RatFunc::monomial(Gauss::from_int(c), e));
        }
        acc
    }

    /// Build `t^shift * num / den` and bring it to canonical form.
    pub fn from_parts(shift: i64, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let vn = num.valuation();
        let vd = den.valuation();
        let num = num.shift_down(vn);
        let den = den.shift_down(vd);
        let shift = shift + vn as i64 - vd as i64;
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        let (den, lead) = den.make_monic();
        let num = if lead.is_one() { num } else { num.scale(&lead.inv().unwrap()) };
        RatFunc { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// The constant value, when this is a constant.
    pub fn as_constant(&self) -> Option<Gauss> {
        if self.is_zero() {
            return Some(Gauss::zero());
        }
        if self.shift == 0 && self.den.is_one() && self.num.0.len() == 1 {
            Some(self.num.0[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.shift.min(o.shift);
        let a = self.num.shift_up((self.shift - e) as usize);
        let b = o.num.shift_up((o.shift - e) as usize);
        if self.den == o.den {
            let n = a.add(&b);
            if self.den.is_one() {
                if n.is_zero() {
                    return RatFunc::zero();
                }
                let v = n.valuation();
                return RatFunc { shift: e + v as i64, num: n.shift_down(v), den: Poly::one() };
            }
            return RatFunc::from_parts(e, n, self.den.clone());
        }
        let n = a.mul(&o.den).add(&b.mul(&self.den));
        RatFunc::from_parts(e, n, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { shift, num: self.num.mul(&o.num), den: Poly::one() };
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.exact_div(&g1) };
        let d2 = if g1.is_one() { o.den.clone() } else { o.den.exact_div(&g1) };
        let n2 = if g2.is_one() { o.num.clone() } else { o.num.exact_div(&g2) };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.exact_div(&g2) };
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let (den, lead) = den.make_monic();
        let num = if lead.is_one() { num } else { num.scale(&lead.inv().unwrap()) };
        RatFunc { shift, num, den }
    }

    pub fn scale(&self, c: &Gauss) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift: self.shift, num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        let (num, lead) = self.num.make_monic();
        let li = lead.inv().unwrap();
        Some(RatFunc { shift: -self.shift, num: self.den.scale(&li), den: num })
    }

    pub fn pow(&self, n: i64) -> Option<RatFunc> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = RatFunc::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }

    /// Complex conjugation of the coefficients; `t` is fixed.
    pub fn conj(&self) -> RatFunc {
        RatFunc { shift: self.shift, num: self.num.conj(), den: self.den.conj() }
    }

    /// Substitute `t -> 1/t`.
    pub fn invert_variable(&self) -> RatFunc {
        let rev = |p: &Poly| Poly::from_coeffs(p.0.iter().rev().cloned().collect());
        let dn = self.num.degree().unwrap_or(0) as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        RatFunc::from_parts(-self.shift - dn + dd, rev(&self.num), rev(&self.den))
    }

    /// Exact value at a Gaussian rational `t`; `None` at a pole.
    pub fn eval_exact(&self, t: &Gauss) -> Option<Gauss> {
        let d = self.den.eval_exact(t);
        let tp = if self.shift >= 0 {
            (0..self.shift).fold(Gauss::one(), |a, _| &a * t)
        } else {
            (0..-self.shift).fold(Gauss::one(), |a, _| &a * t).inv()?
        };
        Some(&(&self.num.eval_exact(t) * &d.inv()?) * &tp)
    }

    pub fn eval(&self, t: Complex64) -> Option<Complex64> {
        let d = self.den.eval_complex(t);
        if d.norm() < 1e-12 || (t.norm() == 0.0 && self.shift < 0) {
            return None;
        }
        Some(self.num.eval_complex(t) / d * t.powi(self.shift as i32))
    }

    /// Integer-coefficient numerator and denominator as `(exponent, re, im)`
    /// triples, with the `t^shift` factor folded in.
    pub fn integer_parts(&self) -> (Vec<IntTerm>, Vec<IntTerm>) {
        let mut l = BigInt::one();
        for c in self.num.0.iter().chain(self.den.0.iter()) {
            l = l.lcm(&c.denom_lcm());
        }
        let lr = BigRational::from_integer(l);
        let conv = |p: &Poly, base: i64| -> Vec<(i64, BigInt, BigInt)> {
            p.0.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    let s = c.scale(&lr);
                    (k as i64 + base, s.re.to_integer(), s.im.to_integer())
                })
                .collect()
        };
        let (nb, db) = if self.shift >= 0 { (self.shift, 0) } else { (0, -self.shift) };
        (conv(&self.num, nb), conv(&self.den, db))
    }
}

fn render_poly(terms: &[(i64, BigInt, BigInt)]) -> String {
    // descending exponent
    let mut out = String::new();
    for (idx, (e, re, im)) in terms.iter().rev().enumerate() {
        let coeff = Gauss::new(BigRational::from_integer(re.clone()), BigRational::from_integer(im.clone()));
        let negative = coeff.is_negative_real() || (re.is_zero() && *im < BigInt::zero());
        let body_coeff = if negative { -coeff.clone() } else { coeff.clone() };
        let var = match *e {
            0 => String::new(),
            1 => "t".to_string(),
            e => format!("t^{e}"),
        };
        let body = if var.is_empty() {
            body_coeff.to_string()
        } else if body_coeff.is_one() {
            var
        } else {
            format!("{body_coeff}*{var}")
        };
        if idx == 0 {
            if negative {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (num, den) = self.integer_parts();
        let n = render_poly(&num);
        let single_den = den.len() == 1 && den[0].0 == 0 && den[0].2.is_zero();
        if single_den && den[0].1.is_one() {
            return write!(f, "{n}");
        }
        let n = if num.len() > 1 { format!("({n})") } else { n };
        let d = render_poly(&den);
        let d = if den.len() > 1 || den[0].1.is_negative() || den[0].0 != 0 && !den[0].1.is_one() {
            format!("({d})")
        } else {
            d
        };
        write!(f, "{n}/{d}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_of_quotient() {
        // (1 - t^-2)/(1 - t^-4) = 1/(1 + t^-2)
        let a = RatFunc::laurent(&[(0, 1), (-2, -1)]);
        let b = RatFunc::laurent(&[(0, 1), (-4, -1)]);
        let q = a.mul(&b.inv().unwrap());
        let expect = RatFunc::laurent(&[(0, 1), (-2, 1)]).inv().unwrap();
        assert_eq!(q, expect);
        assert_eq!(q.to_string(), "t^2/(t^2 + 1)");
    }

    #[test]
    fn laurent_sum_cancels() {
        let a = RatFunc::laurent(&[(-1, 1), (1, -1)]);
        let b = RatFunc::laurent(&[(-1, -1), (1, 1)]);
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn invert_variable_is_involution() {
        let a = RatFunc::laurent(&[(0, 1), (-2, 3)]).mul(&RatFunc::laurent(&[(1, 1), (0, 2)]).inv().unwrap());
        assert_eq!(a.invert_variable().invert_variable(), a);
    }
}
