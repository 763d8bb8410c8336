//! Dense univariate polynomials in `t` over the Gaussian rationals.

use super::gauss::Gauss;

/// Coefficients in ascending degree; never carries trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(pub Vec<Gauss>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Gauss::one()])
    }

    pub fn constant(c: Gauss) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<Gauss>) -> Self {
        let mut p = Poly(c);
        p.trim();
        p
    }

    /// Build from `(exponent, integer coefficient)` pairs.
    pub fn from_int_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|&(e, _)| e).max().unwrap_or(0);
        let mut c = vec![Gauss::zero(); deg + 1];
        for &(e, v) in terms {
            c[e] = &c[e] + &Gauss::from_int(v);
        }
        Poly::from_coeffs(c)
    }

    pub fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn lead(&self) -> Option<&Gauss> {
        self.0.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by `t^k`, assuming the low coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Poly {
        Poly(self.0[k..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![Gauss::zero(); k];
        c.extend(self.0.iter().cloned());
        Poly(c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            match (self.0.get(k), o.0.get(k)) {
                (Some(x), Some(y)) => c.push(x + y),
                (Some(x), None) => c.push(x.clone()),
                (None, Some(y)) => c.push(y.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut c = vec![Gauss::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                c[i + j] = &c[i + j] + &(x * y);
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, s: &Gauss) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|c| c * s).collect())
    }

    pub fn conj(&self) -> Poly {
        Poly(self.0.iter().map(Gauss::conj).collect())
    }

    /// Scale so that the leading coefficient is 1; returns the factor removed.
    pub fn make_monic(&self) -> (Poly, Gauss) {
        match self.lead() {
            None => (Poly::zero(), Gauss::one()),
            Some(l) if l.is_one() => (self.clone(), Gauss::one()),
            Some(l) => {
                let li = l.inv().expect("nonzero lead");
                (self.scale(&li), l.clone())
            }
        }
    }

    /// Euclidean division; `d` must be nonzero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        if self.0.len() < d.0.len() {
            return (Poly::zero(), self.clone());
        }
        let li = d.lead().unwrap().inv().unwrap();
        let mut r = self.0.clone();
        let mut q = vec![Gauss::zero(); self.0.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &li;
            if c.is_zero() {
                continue;
            }
            for (j, y) in d.0.iter().enumerate() {
                if !y.is_zero() {
                    r[k + j] = &r[k + j] - &(&c * y);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.make_monic().0;
        let mut b = o.make_monic().0;
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.make_monic().0;
        }
        a
    }

    /// Exact quotient; panics in debug builds if the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn eval_exact(&self, t: &Gauss) -> Gauss {
        let mut acc = Gauss::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn eval_complex(&self, t: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for c in self.0.iter().rev() {
            let (re, im) = c.to_f64_pair();
            acc = acc * t + num_complex::Complex64::new(re, im);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_shared_factor() {
        // (t-1)(t+1) and (t-1)(t+2)
        let p = Poly::from_int_terms(&[(0, -1), (2, 1)]);
        let q = Poly::from_int_terms(&[(0, -2), (1, 1), (2, 1)]);
        assert_eq!(p.gcd(&q), Poly::from_int_terms(&[(0, -1), (1, 1)]));
    }

    #[test]
    fn divrem_recovers_dividend() {
        let p = Poly::from_int_terms(&[(0, 3), (1, -2), (4, 5)]);
        let d = Poly::from_int_terms(&[(0, 1), (2, 1)]);
        let (q, r) = p.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), p);
    }
}
