//! The functionals `k^{+-1}, e, f` on `A(sigma)`, their convolution
//! products and the relations of `U_q(osp(1,2))`.
//!
//! Products are evaluated through iterated coproducts with
//! `(f (x) g)(x (x) y) = (-1)^(p(x) p(g)) f(x) g(y)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{antipode, coproduct_mono, counit_mono, Factor};
use crate::linalg;
use crate::report::Report;
use crate::scalars::{Gauss, Scalar};
use crate::superalg::{Element, Gen, Monomial, Ring, Rules};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    K,
    KInv,
    E,
    F,
}

impl Letter {
    pub fn parity(self) -> u8 {
        match self {
            Letter::K | Letter::KInv => 0,
            Letter::E | Letter::F => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::K => "k",
            Letter::KInv => "K",
            Letter::E => "e",
            Letter::F => "f",
        }
    }
}

pub type Word = Vec<Letter>;

fn word_parity(w: &[Letter]) -> u8 {
    w.iter().map(|l| l.parity()).sum::<u8>() % 2
}

/// A linear combination of words; the empty word is the counit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Functional {
    pub terms: Vec<(Word, Scalar)>,
}

impl Functional {
    pub fn word(w: Word) -> Self {
        Functional { terms: vec![(w, Scalar::one())] }
    }

    pub fn letter(l: Letter) -> Self {
        Functional::word(vec![l])
    }

    pub fn unit() -> Self {
        Functional::word(vec![])
    }

    pub fn add(&self, o: &Functional) -> Functional {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Functional { terms }
    }

    pub fn scale(&self, c: &Scalar) -> Functional {
        Functional { terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect() }
    }

    /// Concatenation product.
    pub fn mul(&self, o: &Functional) -> Functional {
        let mut terms = Vec::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                terms.push((w, c1.mul(c2)));
            }
        }
        Functional { terms }
    }

    /// Homogeneous parity of the words, if they agree.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.iter().map(|(w, _)| word_parity(w));
        let p = it.next()?;
        it.all(|x| x == p).then_some(p)
    }

    /// Parse words like `k e f K` (`K` or `k^-1` is the inverse of `k`),
    /// juxtaposed or separated by `*`/spaces, e.g. `"ef+fe"` or `"k*e*k^-1"`.
    pub fn parse(s: &str) -> Result<Functional> {
        let mut out = Functional::default();
        let cleaned = s.replace("k^-1", "K").replace("k^{-1}", "K");
        let mut sign = Scalar::one();
        let mut cur: Word = Vec::new();
        let mut any = false;
        let flush = |out: &mut Functional, cur: &mut Word, sign: &Scalar| {
            out.terms.push((std::mem::take(cur), sign.clone()));
        };
        for (pos, ch) in cleaned.char_indices() {
            match ch {
                'k' => cur.push(Letter::K),
                'K' => cur.push(Letter::KInv),
                'e' => cur.push(Letter::E),
                'f' => cur.push(Letter::F),
                '1' if cur.is_empty() => {}
                '*' | ' ' => continue,
                '+' | '-' => {
                    if any {
                        flush(&mut out, &mut cur, &sign);
                    }
                    sign = if ch == '-' { Scalar::int(-1) } else { Scalar::one() };
                    any = false;
                    continue;
                }
                _ => return Err(Error::InvalidParameter(format!("unexpected '{ch}' at offset {pos} in functional"))),
            }
            any = true;
        }
        if !any {
            return Err(Error::InvalidParameter("empty functional".into()));
        }
        flush(&mut out, &mut cur, &sign);
        Ok(out)
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})")?;
            }
            if w.is_empty() {
                write!(f, "1")?;
            }
            for l in w {
                write!(f, "{}", l.symbol())?;
            }
        }
        Ok(())
    }
}

/// The pairing with a fixed sign `e_sign` multiplying the value `e(b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pairing {
    pub e_sign: i64,
}

type EvalKey = (i64, Word, Monomial);
type Pair = (Functional, Functional);

fn eval_cache() -> &'static RwLock<HashMap<EvalKey, Scalar>> {
    static C: OnceLock<RwLock<HashMap<EvalKey, Scalar>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn sign(n: u32) -> Scalar {
    if n % 2 == 1 {
        Scalar::int(-1)
    } else {
        Scalar::one()
    }
}

/// `(t - t^-1)/(q - q^-1) = -1/(t + t^-1)`.
pub fn e_of_b_unsigned() -> Scalar {
    let num = Scalar::laurent(&[(1, 1), (-1, -1)]);
    let den = Scalar::q().sub(&Scalar::q_pow(-1));
    num.div(&den).unwrap()
}

impl Pairing {
    /// The sign making `ef + fe = (k - k^-1)/(q - q^-1)` hold at `a`.
    pub fn calibrated() -> Pairing {
        static P: OnceLock<Pairing> = OnceLock::new();
        *P.get_or_init(|| Pairing { e_sign: calibrate_e_sign().expect("one sign works") })
    }

    /// The values on the printed generator matrix, without calibration.
    pub fn uncalibrated() -> Pairing {
        Pairing { e_sign: 1 }
    }

    fn k_pow(m: Monomial, inverse: bool) -> Scalar {
        if m.b + m.c > 0 {
            return Scalar::zero();
        }
        let e = if inverse { -1 } else { 1 };
        // k(a) = t^{+-1}, k(d) = -t^{-+1}, k(sigma) = -1
        Scalar::t_pow(e * (m.a as i64 - m.d as i64)).mul(&sign(m.d + m.s as u32))
    }

    fn gen_value(&self, l: Letter, g: Gen) -> Scalar {
        match (l, g) {
            (Letter::K, _) | (Letter::KInv, _) => Pairing::k_pow(Monomial::gen(g), l == Letter::KInv),
            (Letter::E, Gen::B) => e_of_b_unsigned().scale_int(self.e_sign),
            (Letter::F, Gen::C) => Scalar::one(),
            _ => Scalar::zero(),
        }
    }

    /// A single generator on a normal monomial, via the twisted derivation
    /// rules `e(xy) = e(x)eps(y) + (-1)^p(x) k(x)e(y)` and
    /// `f(xy) = f(x)k^-1(y) + (-1)^p(x) eps(x)f(y)`.
    pub fn eval_letter(&self, l: Letter, m: Monomial) -> Scalar {
        match l {
            Letter::K => return Pairing::k_pow(m, false),
            Letter::KInv => return Pairing::k_pow(m, true),
            _ => {}
        }
        let word = m.word();
        let Some((&g, rest)) = word.split_first() else {
            return Scalar::zero();
        };
        let rest_m = word_monomial(rest);
        let pg = sign(g.parity() as u32);
        let gm = Monomial::gen(g);
        match l {
            Letter::E => self
                .gen_value(l, g)
                .mul(&counit_mono(rest_m))
                .add(&pg.mul(&Pairing::k_pow(gm, false)).mul(&self.eval_letter(l, rest_m))),
            _ => self
                .gen_value(l, g)
                .mul(&Pairing::k_pow(rest_m, true))
                .add(&pg.mul(&counit_mono(gm)).mul(&self.eval_letter(l, rest_m))),
        }
    }

    /// A word on a normal monomial of `A(sigma)` (or `B`).
    pub fn eval_word(&self, w: &[Letter], m: Monomial, ring: Ring) -> Scalar {
        match w.len() {
            0 => return counit_mono(m),
            1 => return self.eval_letter(w[0], m),
            _ => {}
        }
        let key = (self.e_sign, w.to_vec(), m);
        if let Some(v) = eval_cache().read().unwrap().get(&key) {
            return v.clone();
        }
        let rest = &w[1..];
        let prest = word_parity(rest) as u32;
        let mut acc = Scalar::zero();
        for (legs, c) in coproduct_mono(m, ring, Rules::default()).terms() {
            let (Factor::Alg(x1), Factor::Alg(x2)) = (legs[0], legs[1]) else { unreachable!() };
            let v1 = self.eval_letter(w[0], x1);
            if v1.is_zero() {
                continue;
            }
            let v2 = self.eval_word(rest, x2, ring);
            if v2.is_zero() {
                continue;
            }
            let s = sign(x1.parity() as u32 * prest);
            acc = acc.add(&c.mul(&v1).mul(&v2).mul(&s));
        }
        crate::cache::insert(&mut eval_cache().write().unwrap(), key, acc.clone());
        acc
    }

    pub fn eval(&self, phi: &Functional, x: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in &phi.terms {
            for (m, xc) in x.terms() {
                acc = acc.add(&c.mul(xc).mul(&self.eval_word(w, *m, x.ring())));
            }
        }
        acc
    }

    /// `(F G)(x)` through one coproduct, for arbitrary functionals.
    pub fn eval_product(&self, f: &Functional, g: &Functional, m: Monomial, ring: Ring) -> Scalar {
        let pg = g.parity().unwrap_or(0) as u32;
        let mut acc = Scalar::zero();
        for (legs, c) in coproduct_mono(m, ring, Rules::default()).terms() {
            let (Factor::Alg(x1), Factor::Alg(x2)) = (legs[0], legs[1]) else { unreachable!() };
            let e1 = Element::monomial(ring, x1);
            let e2 = Element::monomial(ring, x2);
            let v = self.eval(f, &e1).mul(&self.eval(g, &e2));
            acc = acc.add(&c.mul(&v).mul(&sign(x1.parity() as u32 * pg)));
        }
        acc
    }
}

fn word_monomial(w: &[Gen]) -> Monomial {
    let mut m = Monomial::ONE;
    for g in w {
        match g {
            Gen::A => m.a += 1,
            Gen::B => m.b += 1,
            Gen::C => m.c += 1,
            Gen::D => m.d += 1,
            Gen::Sigma => m.s ^= 1,
        }
    }
    m
}

/// `(k - k^-1)/(q - q^-1)`.
pub fn casimir_rhs() -> Functional {
    let den = Scalar::q().sub(&Scalar::q_pow(-1)).inv().unwrap();
    Functional::letter(Letter::K).add(&Functional::letter(Letter::KInv).scale(&Scalar::int(-1))).scale(&den)
}

fn ef_plus_fe() -> Functional {
    let e = Functional::letter(Letter::E);
    let f = Functional::letter(Letter::F);
    e.mul(&f).add(&f.mul(&e))
}

/// Solve `(ef + fe)(a) = ((k - k^-1)/(q - q^-1))(a)` for the sign of `e(b)`.
pub fn calibrate_e_sign() -> Result<i64> {
    let a = Element::g(Ring::Asigma, Gen::A);
    let target = Pairing::uncalibrated().eval(&casimir_rhs(), &a);
    for s in [1, -1] {
        let p = Pairing { e_sign: s };
        if p.eval(&ef_plus_fe(), &a) == target {
            return Ok(s);
        }
    }
    Err(Error::Inconsistent("no sign of e(b) satisfies ef + fe = (k - k^-1)/(q - q^-1)".into()))
}

/// The relations of `U_q(osp(1,2))` as equalities of functionals on every
/// basis monomial of `A(sigma)` of degree at most `max_degree`.
pub fn verify_uq_relations(max_degree: u32) -> Report {
    verify_uq_relations_with(Pairing::calibrated(), max_degree)
}

pub fn verify_uq_relations_with(p: Pairing, max_degree: u32) -> Report {
    use Letter::*;
    let mut r = Report::new("uq-relations");
    let w = |l: &[Letter]| Functional::word(l.to_vec());
    let q = Scalar::q();
    let relations = [
        ("k k^-1 = 1", w(&[K, KInv]), Functional::unit()),
        ("k^-1 k = 1", w(&[KInv, K]), Functional::unit()),
        ("k e k^-1 = q e", w(&[K, E, KInv]), w(&[E]).scale(&q)),
        ("k f k^-1 = q^-1 f", w(&[K, F, KInv]), w(&[F]).scale(&q.inv().unwrap())),
        ("ef + fe = (k - k^-1)/(q - q^-1)", ef_plus_fe(), casimir_rhs()),
    ];
    for m in Monomial::basis(Ring::Asigma, max_degree) {
        let x = Element::monomial(Ring::Asigma, m);
        for (name, lhs, rhs) in &relations {
            let (l, rr) = (p.eval(lhs, &x), p.eval(rhs, &x));
            r.check_eq(format!("{name} at {m}"), &l, &rr);
        }
    }
    r
}

/// Hopf structure of the dual against the algebra: `Delta(phi)(x (x) y) = phi(xy)`,
/// `S(phi)(x) = phi(S(x))`, `eps(phi) = phi(1)`, on `samples` random pairs of
/// monomials of degree at most 3, plus associativity of convolution.
pub fn verify_dual_hopf(samples: usize) -> Report {
    use Letter::*;
    let p = Pairing::calibrated();
    let ring = Ring::Asigma;
    let mut r = Report::new("dual-hopf");
    let basis = Monomial::basis(ring, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let w = |l: &[Letter]| Functional::word(l.to_vec());
    let one = Functional::unit();
    // Delta(phi) as a list of (left, right) pairs
    let coproducts: Vec<(&str, Functional, Vec<Pair>)> = vec![
        ("k", w(&[K]), vec![(w(&[K]), w(&[K]))]),
        ("k^-1", w(&[KInv]), vec![(w(&[KInv]), w(&[KInv]))]),
        ("e", w(&[E]), vec![(w(&[E]), one.clone()), (w(&[K]), w(&[E]))]),
        ("f", w(&[F]), vec![(w(&[F]), w(&[KInv])), (one.clone(), w(&[F]))]),
    ];
    let antipodes = [
        ("k", w(&[K]), w(&[KInv])),
        ("k^-1", w(&[KInv]), w(&[K])),
        ("e", w(&[E]), w(&[KInv, E]).scale(&Scalar::int(-1))),
        ("f", w(&[F]), w(&[F, K]).scale(&Scalar::int(-1))),
    ];
    for _ in 0..samples {
        let x = *basis.choose(&mut rng).unwrap();
        let y = *basis.choose(&mut rng).unwrap();
        let (ex, ey) = (Element::monomial(ring, x), Element::monomial(ring, y));
        let xy = ex.mul(&ey);
        for (name, phi, delta) in &coproducts {
            let lhs = p.eval(phi, &xy);
            let mut rhs = Scalar::zero();
            for (l, rt) in delta {
                let s = sign(x.parity() as u32 * rt.parity().unwrap_or(0) as u32);
                rhs = rhs.add(&p.eval(l, &ex).mul(&p.eval(rt, &ey)).mul(&s));
            }
            r.check_eq(format!("Delta({name})({x} (x) {y})"), &lhs, &rhs);
        }
        for (name, phi, s_phi) in &antipodes {
            let lhs = p.eval(s_phi, &ex);
            let rhs = p.eval(phi, &antipode(&ex).unwrap());
            r.check_eq(format!("S({name})({x})"), &lhs, &rhs);
        }
        let (f, g, h) = (w(&[E]), w(&[F]), w(&[K]));
        let lhs = p.eval_product(&f.mul(&g), &h, x, ring);
        let rhs = p.eval_product(&f, &g.mul(&h), x, ring);
        r.check_eq(format!("((ef)k)({x}) = (e(fk))({x})"), &lhs, &rhs);
    }
    let unit = Element::one(ring);
    for (name, phi, expect) in [("k", w(&[K]), 1), ("k^-1", w(&[KInv]), 1), ("e", w(&[E]), 0), ("f", w(&[F]), 0)] {
        r.check_eq(format!("eps({name})"), &p.eval(&phi, &unit), &Scalar::int(expect));
    }
    r
}

/// Rank of the evaluation matrix of the words `f^a k^b e^c`
/// (`0 <= a, c <= word_bound`, `|b| <= word_bound`) against the basis of `B`
/// in degree at most `degree_bound`.
#[derive(Clone, Debug, Serialize)]
pub struct GramRank {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub zero_rows: usize,
    /// Whether `rank` is certified exact. The rank is computed at rational
    /// specializations of `t`, which can only lower it, so it is exact when
    /// it reaches `min(rows, cols)`.
    pub exact: bool,
}

pub fn pairing_gram_matrix(word_bound: u32, degree_bound: u32) -> (Vec<Word>, Vec<Monomial>, linalg::Matrix) {
    let p = Pairing::calibrated();
    let wb = word_bound as i64;
    let mut words = Vec::new();
    for a in 0..=word_bound {
        for b in -wb..=wb {
            for c in 0..=word_bound {
                let mut w = vec![Letter::F; a as usize];
                let kl = if b < 0 { Letter::KInv } else { Letter::K };
                w.extend(std::iter::repeat_n(kl, b.unsigned_abs() as usize));
                w.extend(std::iter::repeat_n(Letter::E, c as usize));
                words.push(w);
            }
        }
    }
    let cols = Monomial::basis(Ring::B, degree_bound);
    let m: linalg::Matrix = words.iter().map(|w| cols.iter().map(|x| p.eval_word(w, *x, Ring::B)).collect()).collect();
    (words, cols, m)
}

pub fn pairing_gram_rank(word_bound: u32, degree_bound: u32) -> GramRank {
    let (words, cols, m) = pairing_gram_matrix(word_bound, degree_bound);
    let zero_rows = m.iter().filter(|r| r.iter().all(|x| x.is_zero())).count();
    let rank = [(2, 1), (3, 1), (5, 3)]
        .iter()
        .filter_map(|&(n, d)| linalg::rank_at(&m, &Gauss::from_ratio(n, d)))
        .max()
        .unwrap_or(0);
    GramRank { rows: words.len(), cols: cols.len(), rank, zero_rows, exact: rank == words.len().min(cols.len()) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: Gen) -> Element {
        Element::g(Ring::Asigma, x)
    }

    #[test]
    fn generator_values() {
        let p = Pairing::calibrated();
        let l = Functional::letter;
        assert_eq!(p.eval(&l(Letter::K), &g(Gen::A)), Scalar::t());
        assert!(p.eval(&l(Letter::F), &g(Gen::C)).is_one());
        assert_eq!(p.eval(&l(Letter::K), &g(Gen::Sigma)), Scalar::int(-1));
        assert_eq!(p.eval(&l(Letter::KInv), &g(Gen::D)), Scalar::t().neg());
        assert!(p.eval(&ef_plus_fe(), &g(Gen::B)).is_zero());
    }

    #[test]
    fn calibration_sign() {
        assert_eq!(calibrate_e_sign().unwrap(), -1);
        let p = Pairing::calibrated();
        let d = g(Gen::D);
        assert_eq!(p.eval(&ef_plus_fe(), &d), p.eval(&casimir_rhs(), &d));
    }

    #[test]
    fn relations_hold_after_calibration() {
        let r = verify_uq_relations(3);
        assert!(r.passed(), "{r}");
        let bad = verify_uq_relations_with(Pairing::uncalibrated(), 1);
        assert!(bad.failures.iter().any(|f| f.input.contains("ef + fe") && f.input.ends_with(" a")));
    }

    #[test]
    fn dual_hopf_samples() {
        let r = verify_dual_hopf(40);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn parse_words() {
        let f = Functional::parse("ef+fe").unwrap();
        assert_eq!(f, ef_plus_fe());
        let f = Functional::parse("k*e*k^-1").unwrap();
        assert_eq!(f.terms[0].0, vec![Letter::K, Letter::E, Letter::KInv]);
        assert!(Functional::parse("kx").is_err());
    }

    #[test]
    fn small_gram_rank() {
        let g = pairing_gram_rank(1, 2);
        assert_eq!(g.zero_rows, 0);
        assert_eq!(g.rank, g.rows.min(g.cols));
        assert!(g.exact);
        let (_, _, m) = pairing_gram_matrix(1, 2);
        assert_eq!(linalg::rank(&m), g.rank);
    }
}
