//! q-shifted factorials, Gauss binomials and little q-Jacobi polynomials.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::hopf::{coproduct, TensorElement};
use crate::report::Report;
use crate::scalars::Scalar;
use crate::superalg::{coeff_prefix, Element, Gen, Ring};

/// `(u; v)_m = prod_{k<m} (1 - u v^k)`.
pub fn pochhammer(u: &Scalar, v: &Scalar, m: u32) -> Scalar {
    let mut acc = Scalar::one();
    let mut uk = u.clone();
    for _ in 0..m {
        acc = acc.mul(&Scalar::one().sub(&uk));
        uk = uk.mul(v);
    }
    acc
}

/// Gauss binomial `(v;v)_m / ((v;v)_n (v;v)_(m-n))`; zero when `n < 0` or `n > m`.
pub fn gauss_binomial(m: i64, n: i64, v: &Scalar) -> Scalar {
    if n < 0 || m < 0 || n > m {
        return Scalar::zero();
    }
    let n = n.min(m - n);
    // prod_{k=1}^{n} (1 - v^(m-n+k)) / (1 - v^k)
    let mut num = Scalar::one();
    let mut den = Scalar::one();
    for k in 1..=n {
        num = num.mul(&Scalar::one().sub(&v.pow(m - n + k).expect("v is invertible")));
        den = den.mul(&Scalar::one().sub(&v.pow(k).expect("v is invertible")));
    }
    num.div(&den).expect("v is not a root of unity")
}

/// A polynomial in a commuting variable `z`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, Scalar>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = QPolynomial::zero();
        p.add_term(0, c);
        p
    }

    pub fn add_term(&mut self, e: u32, c: Scalar) {
        let v = self.coeffs.remove(&e).unwrap_or_default().add(&c);
        if !v.is_zero() {
            self.coeffs.insert(e, v);
        }
    }

    pub fn coeff(&self, e: u32) -> Scalar {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (e, c) in &o.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, o: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e, x) in &self.coeffs {
            out.add_term(*e, x.mul(c));
        }
        out
    }

    /// Substitute an algebra element for `z`.
    pub fn eval_element(&self, z: &Element) -> Element {
        let mut out = Element::zero(z.ring()).with_rules(z.rules());
        let mut pow = Element::one(z.ring()).with_rules(z.rules());
        let mut k = 0;
        for (e, c) in &self.coeffs {
            while k < *e {
                pow = pow.mul(z);
                k += 1;
            }
            out = out.add(&pow.scale(c));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.coeffs.iter().map(|(e, c)| json!({"power": e, "coeff": c.to_json()})).collect();
        json!({"variable": "z", "terms": terms})
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let (neg, body) = coeff_prefix(c);
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let var = match e {
                0 => String::new(),
                1 => "z".to_string(),
                e => format!("z^{e}"),
            };
            match (var.is_empty(), body.as_str()) {
                (true, _) => write!(f, "{body}")?,
                (false, "1") => write!(f, "{var}")?,
                _ => write!(f, "{body}*{var}")?,
            }
        }
        Ok(())
    }
}

/// Little q-Jacobi polynomial
/// `P_n^(alpha,beta)(z; v) = sum_r (v^-n; v)_r (v^(alpha+beta+n+1); v)_r / ((v; v)_r (v^(alpha+1); v)_r) (v z)^r`.
pub fn little_jacobi(n: u32, alpha: i64, beta: i64, v: &Scalar) -> QPolynomial {
    let vp = |e: i64| v.pow(e).expect("v is invertible");
    let a = vp(-(n as i64));
    let b = vp(alpha + beta + n as i64 + 1);
    let c = vp(alpha + 1);
    let mut p = QPolynomial::zero();
    for r in 0..=n {
        let num = pochhammer(&a, v, r).mul(&pochhammer(&b, v, r));
        let den = pochhammer(v, v, r).mul(&pochhammer(&c, v, r));
        let coeff = num.div(&den).expect("nonvanishing Pochhammer denominator").mul(&vp(r as i64));
        p.add_term(r, coeff);
    }
    p
}

fn tpow(x: &TensorElement, n: u32, ring: Ring) -> TensorElement {
    let mut acc = TensorElement::one(ring, 2);
    for _ in 0..n {
        acc = acc.mul(x);
    }
    acc
}

/// The q-binomial theorem `(x+y)^m = sum_k binom(m,k)_(v^-1) x^k y^(m-k)` for
/// `xy = v yx`, with `(x, y)` the two summands of `Delta(a)` and of
/// `Delta(c)`, together with the closed forms of `Delta(a^m)`, `Delta(c^m)`.
pub fn qbinomial_theorem_check(m: u32) -> Report {
    let ring = Ring::Asigma;
    let mut r = Report::new("q-binomial");
    let g = |x| Element::g(ring, x);
    let pairs = [
        ("Delta(a)", g(Gen::A), g(Gen::A), g(Gen::B), g(Gen::C)),
        ("Delta(c)", g(Gen::C), g(Gen::A), g(Gen::D), g(Gen::C)),
    ];
    let t2 = Scalar::t_pow(2);
    let t_2 = Scalar::t_pow(-2);
    for (name, x1, x2, y1, y2) in pairs {
        let x = TensorElement::from_pair(&x1, &x2);
        let y = TensorElement::from_pair(&y1, &y2);
        r.check_eq(format!("{name}: xy = t^2 yx"), &x.mul(&y), &y.mul(&x).scale(&t2));
        let sum = x.add(&y);
        let lhs = tpow(&sum, m, ring);
        let mut rhs = TensorElement::zero(ring);
        for k in 0..=m {
            let term = tpow(&x, k, ring).mul(&tpow(&y, m - k, ring));
            rhs = rhs.add(&term.scale(&gauss_binomial(m as i64, k as i64, &t_2)));
        }
        r.check_eq(format!("{name}: (x+y)^{m}"), &lhs, &rhs);
    }
    // closed forms of Delta(a^m) and Delta(c^m)
    let mono = |a, b, c, d| Element::monomial(ring, crate::superalg::Monomial::new(a, b, c, d, 0));
    let mut da = TensorElement::zero(ring);
    let mut dc = TensorElement::zero(ring);
    for k in 0..=m {
        let bin = gauss_binomial(m as i64, k as i64, &t_2);
        let sign = if (k / 2) % 2 == 1 { Scalar::int(-1) } else { Scalar::one() };
        da = da.add(&TensorElement::from_pair(&mono(m - k, k, 0, 0), &mono(m - k, 0, k, 0)).scale(&bin.mul(&sign)));
        dc = dc.add(&TensorElement::from_pair(&mono(0, 0, m - k, k), &mono(m - k, 0, k, 0)).scale(&bin));
    }
    r.check_eq(format!("Delta(a^{m}) closed form"), &coproduct(&g(Gen::A).pow(m)), &da);
    r.check_eq(format!("Delta(c^{m}) closed form"), &coproduct(&g(Gen::C).pow(m)), &dc);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v() -> Scalar {
        Scalar::t_pow(-2)
    }

    #[test]
    fn pochhammer_examples() {
        assert!(pochhammer(&Scalar::t(), &v(), 0).is_one());
        let p = pochhammer(&v(), &v(), 2);
        let expect = Scalar::laurent(&[(0, 1), (-2, -1)]).mul(&Scalar::laurent(&[(0, 1), (-4, -1)]));
        assert_eq!(p, expect);
    }

    #[test]
    fn binomial_examples() {
        let v = Scalar::t();
        assert!(gauss_binomial(5, 0, &v).is_one());
        assert_eq!(gauss_binomial(2, 1, &v), Scalar::laurent(&[(0, 1), (1, 1)]));
        assert_eq!(gauss_binomial(3, 2, &v), Scalar::laurent(&[(0, 1), (1, 1), (2, 1)]));
        assert!(gauss_binomial(3, 4, &v).is_zero());
        assert!(gauss_binomial(3, -1, &v).is_zero());
    }

    #[test]
    fn pascal_rule() {
        let v = v();
        for m in 0..10i64 {
            for n in 0..m {
                let lhs = gauss_binomial(m + 1, n + 1, &v);
                let rhs = gauss_binomial(m, n, &v).mul(&v.pow(m - n).unwrap()).add(&gauss_binomial(m, n + 1, &v));
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn factorial_identity() {
        let v = v();
        let b = |m, n| gauss_binomial(m, n, &v);
        for two_l in 0..=6i64 {
            for ti in (-two_l..=two_l).step_by(2) {
                for tj in (-two_l..=ti).step_by(2) {
                    // l+i = (two_l+ti)/2 etc., with i >= j
                    let (lpi, lmj, imj) = ((two_l + ti) / 2, (two_l - tj) / 2, (ti - tj) / 2);
                    let lpj = (two_l + tj) / 2;
                    let lhs = b(two_l, lpi).mul(&b(lpi, imj)).mul(&b(lmj, imj)).div(&b(two_l, lpj)).unwrap();
                    assert_eq!(lhs, b(lmj, imj).pow(2).unwrap());
                }
            }
        }
    }

    #[test]
    fn jacobi_examples() {
        let v = Scalar::t();
        assert_eq!(little_jacobi(0, 3, -2, &v), QPolynomial::constant(Scalar::one()));
        let p = little_jacobi(1, 0, 0, &v);
        assert!(p.coeff(0).is_one());
        assert_eq!(p.coeff(1), Scalar::laurent(&[(0, -1), (1, -1)]));
        let p = little_jacobi(1, 1, 0, &v);
        let expect = Scalar::laurent(&[(0, 1), (3, -1)]).div(&Scalar::laurent(&[(0, 1), (2, -1)])).unwrap().neg();
        assert_eq!(p.coeff(1), expect);
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn qbinomial_small() {
        for m in 1..=4 {
            let r = qbinomial_theorem_check(m);
            assert!(r.passed(), "{r}");
        }
    }

    proptest! {
        #[test]
        fn binomial_symmetry(m in 0i64..9, n in 0i64..9) {
            let v = Scalar::t_pow(-2);
            prop_assert_eq!(gauss_binomial(m, n, &v), gauss_binomial(m, m - n, &v));
        }
    }
}
