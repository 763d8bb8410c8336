//! Irreducible comodules `V_l sigma^s` and their matrix coefficients.
//!
//! Everything here lives in the unnormalized basis
//! `xi'_i = a^(l-i) c^(l+i)`, `eta'_i = a^(l-i) b^(l+i)`; the normalized
//! vectors are `n_i xi'_i` with `n_i^2 = (-1)^[(l+i)/2] binom(2l, l+i)_(t^-2)`.
//! Matrix coefficients in this basis are `m'_ij = (n_j / n_i) m_ij`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::{coproduct, coproduct_mono, counit, Factor, TensorElement};
use crate::qfun::{gauss_binomial, little_jacobi};
use crate::report::{Report, Route};
use crate::scalars::Scalar;
use crate::superalg::{bigrade, BiDegree, Element, Monomial, Ring};

/// Default largest `2l` for which matrices are built.
pub const DEFAULT_MAX_TWO_L: i64 = 6;

/// `(l, i, j, s)` stored as `(2l, 2i, 2j, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CorepIndex {
    pub two_l: i64,
    pub two_i: i64,
    pub two_j: i64,
    pub s: u8,
}

impl CorepIndex {
    pub fn new(two_l: i64, two_i: i64, two_j: i64, s: u8) -> Result<Self> {
        let ok = two_l >= 0
            && two_i.abs() <= two_l
            && two_j.abs() <= two_l
            && (two_l - two_i) % 2 == 0
            && (two_l - two_j) % 2 == 0
            && s <= 1;
        if !ok {
            return Err(Error::InvalidIndex(format!("(2l,2i,2j,s) = ({two_l},{two_i},{two_j},{s})")));
        }
        Ok(CorepIndex { two_l, two_i, two_j, s })
    }

    /// All indices with the given `2l` and `s`, row-major.
    pub fn all(two_l: i64, s: u8) -> Vec<CorepIndex> {
        let mut out = Vec::new();
        for ti in (-two_l..=two_l).step_by(2) {
            for tj in (-two_l..=two_l).step_by(2) {
                out.push(CorepIndex { two_l, two_i: ti, two_j: tj, s });
            }
        }
        out
    }

    /// `l + i`, `l - i`, `l + j`, `l - j`.
    fn parts(&self) -> (i64, i64, i64, i64) {
        let (l, i, j) = (self.two_l, self.two_i, self.two_j);
        ((l + i) / 2, (l - i) / 2, (l + j) / 2, (l - j) / 2)
    }
}

impl fmt::Display for CorepIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = |x: i64| if x % 2 == 0 { format!("{}", x / 2) } else { format!("{x}/2") };
        write!(f, "(l={}, i={}, j={}, s={})", h(self.two_l), h(self.two_i), h(self.two_j), self.s)
    }
}

fn v() -> Scalar {
    Scalar::t_pow(-2)
}

fn binom(m: i64, n: i64) -> Scalar {
    gauss_binomial(m, n, &v())
}

fn neg_one_pow(e: i64) -> Scalar {
    if e.rem_euclid(2) == 1 {
        Scalar::int(-1)
    } else {
        Scalar::one()
    }
}

/// `n_i^2 = (-1)^[(l+i)/2] binom(2l, l+i)_(t^-2)`.
pub fn norm_sq(two_l: i64, two_i: i64) -> Scalar {
    let lpi = (two_l + two_i) / 2;
    neg_one_pow(lpi.div_euclid(2)).mul(&binom(two_l, lpi))
}

/// `|n_i|^2 = binom(2l, l+i)_(t^-2)` for real `t`.
pub fn norm_abs_sq(two_l: i64, two_i: i64) -> Scalar {
    binom(two_l, (two_l + two_i) / 2)
}

fn sigma_pow(s: i64) -> Monomial {
    Monomial::new(0, 0, 0, 0, (s.rem_euclid(2)) as u8)
}

/// The unnormalized comodule vectors `a^(l-i) c^(l+i) sigma^s` (left) and
/// `a^(l-i) b^(l+i) sigma^s` (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    L,
    R,
}

/// `xi` (side L) or `eta` (side R) at `idx.two_i`. The normalized vector is
/// only returned when `n_i^2` has a square root in the scalar field.
pub fn comodule_vector(side: Side, idx: &CorepIndex, normalized: bool) -> Result<Element> {
    let x = bare_vector(side, idx.two_l, idx.two_i, idx.s)?;
    if !normalized {
        return Ok(x);
    }
    let n = norm_sq(idx.two_l, idx.two_i).sqrt()?;
    Ok(x.scale(&n))
}

fn bare_vector(side: Side, two_l: i64, two_i: i64, s: u8) -> Result<Element> {
    CorepIndex::new(two_l, two_i, two_i, s)?;
    let (lmi, lpi) = (((two_l - two_i) / 2) as u32, ((two_l + two_i) / 2) as u32);
    let m = match side {
        Side::L => Monomial::new(lmi, 0, lpi, 0, s),
        Side::R => Monomial::new(lmi, lpi, 0, 0, s),
    };
    Ok(Element::monomial(Ring::Asigma, m))
}

/// The matrix `(m'_ij sigma^s)` indexed by `I_l x I_l` (position `k` is
/// `i = -l + k`) with the squared normalizations `n_i^2`.
#[derive(Clone, Debug)]
pub struct CorepMatrix {
    pub two_l: i64,
    pub s: u8,
    pub entries: Vec<Vec<Element>>,
    pub norms_sq: Vec<Scalar>,
}

impl CorepMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn pos(&self, two_i: i64) -> usize {
        ((two_i + self.two_l) / 2) as usize
    }

    pub fn entry(&self, two_i: i64, two_j: i64) -> &Element {
        &self.entries[self.pos(two_i)][self.pos(two_j)]
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> =
            self.entries.iter().map(|row| Value::Array(row.iter().map(|e| json!(e.to_string())).collect())).collect();
        json!({
            "twoL": self.two_l,
            "s": self.s,
            "basis": "unnormalized",
            "entries": entries,
            "norms_sq": self.norms_sq.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        })
    }
}

type MatrixKey = (i64, u8);

fn matrix_cache() -> &'static RwLock<HashMap<MatrixKey, Arc<CorepMatrix>>> {
    static C: OnceLock<RwLock<HashMap<MatrixKey, Arc<CorepMatrix>>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn matrix_coefficients(two_l: i64, s: u8) -> Result<Arc<CorepMatrix>> {
    matrix_coefficients_bounded(two_l, s, DEFAULT_MAX_TWO_L)
}

/// Read the coefficients off `Delta(xi'_i sigma^s) = sum_j m'_ij sigma^s (x) xi'_j sigma^s`,
/// then check the corepresentation laws before returning.
pub fn matrix_coefficients_bounded(two_l: i64, s: u8, bound: i64) -> Result<Arc<CorepMatrix>> {
    if two_l > bound {
        return Err(Error::BoundExceeded(format!("2l = {two_l} exceeds {bound}")));
    }
    CorepIndex::new(two_l, two_l, two_l, s)?;
    if let Some(m) = matrix_cache().read().unwrap().get(&(two_l, s)) {
        return Ok(m.clone());
    }
    let n = (two_l + 1) as usize;
    let idx = |k: usize| -two_l + 2 * k as i64;
    let mut entries = vec![vec![Element::zero(Ring::Asigma); n]; n];
    for (r, row) in entries.iter_mut().enumerate() {
        let xi = bare_vector(Side::L, two_l, idx(r), s)?;
        let (m, _) = xi.terms().next().unwrap();
        for (legs, c) in coproduct_mono(*m, Ring::Asigma, Default::default()).terms() {
            let (Factor::Alg(left), Factor::Alg(right)) = (legs[0], legs[1]) else { unreachable!() };
            // right leg must be some xi'_j sigma^s
            let col = (0..n).find(|&k| {
                bare_vector(Side::L, two_l, idx(k), s).unwrap().terms().next().map(|(x, _)| *x) == Some(right)
            });
            let Some(col) = col else {
                return Err(Error::Inconsistent(format!("Delta(xi) has right leg {right} outside V_l")));
            };
            row[col] = row[col].add(&Element::monomial_with(Ring::Asigma, left, c.clone()));
        }
    }
    let norms_sq = (0..n).map(|k| norm_sq(two_l, idx(k))).collect();
    let mat = CorepMatrix { two_l, s, entries, norms_sq };
    let rep = verify_corep(&mat);
    if !rep.passed() {
        return Err(Error::Inconsistent(format!("corepresentation laws fail:\n{rep}")));
    }
    let mat = Arc::new(mat);
    crate::cache::insert(&mut matrix_cache().write().unwrap(), (two_l, s), mat.clone());
    Ok(mat)
}

/// `Delta(m'_ij) = sum_k m'_ik (x) m'_kj`, `eps(m'_ij) = delta_ij`, the dual
/// expansion of `eta'`, and the bigrade `(-2i, -2j)` of each entry.
pub fn verify_corep(m: &CorepMatrix) -> Report {
    let mut r = Report::new(format!("corep 2l={} s={}", m.two_l, m.s));
    let n = m.dim();
    let idx = |k: usize| -m.two_l + 2 * k as i64;
    for i in 0..n {
        for j in 0..n {
            let e = &m.entries[i][j];
            let mut rhs = TensorElement::zero(Ring::Asigma);
            for k in 0..n {
                rhs = rhs.add(&TensorElement::from_pair(&m.entries[i][k], &m.entries[k][j]));
            }
            r.check_eq(format!("Delta(m'[{i}][{j}])"), &coproduct(e), &rhs);
            let eps = if i == j { Scalar::one() } else { Scalar::zero() };
            r.check_eq(format!("eps(m'[{i}][{j}])"), &counit(e), &eps);
            let g = bigrade(e);
            let ok = g == BiDegree::Homogeneous(-idx(i), -idx(j)) || e.is_zero();
            r.check(ok, format!("bigrade(m'[{i}][{j}])"), format!("{g:?}"), format!("({}, {})", -idx(i), -idx(j)));
        }
    }
    // Delta(eta'_i) = sum_j (n_j^2 / n_i^2) eta'_j (x) m'_ji
    for i in 0..n {
        let eta = bare_vector(Side::R, m.two_l, idx(i), m.s).unwrap();
        let mut rhs = TensorElement::zero(Ring::Asigma);
        for j in 0..n {
            let etaj = bare_vector(Side::R, m.two_l, idx(j), m.s).unwrap();
            let ratio = m.norms_sq[j].div(&m.norms_sq[i]).unwrap();
            rhs = rhs.add(&TensorElement::from_pair(&etaj, &m.entries[j][i]).scale(&ratio));
        }
        r.check_eq(format!("Delta(eta'[{i}])"), &coproduct(&eta), &rhs);
    }
    r
}

/// Which of the four closed-form cases apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// `i + j <= 0`, `i >= j`
    One,
    /// `i + j <= 0`, `j >= i`
    Two,
    /// `i + j >= 0`, `j >= i`
    Three,
    /// `i + j >= 0`, `i >= j`
    Four,
}

pub fn cases(idx: &CorepIndex) -> Vec<Case> {
    let (i, j) = (idx.two_i, idx.two_j);
    let mut out = Vec::new();
    if i + j <= 0 && i >= j {
        out.push(Case::One);
    }
    if i + j <= 0 && j >= i {
        out.push(Case::Two);
    }
    if i + j >= 0 && j >= i {
        out.push(Case::Three);
    }
    if i + j >= 0 && i >= j {
        out.push(Case::Four);
    }
    out
}

fn jacobi_at_zeta(n: i64, alpha: i64, beta: i64) -> Element {
    little_jacobi(n as u32, alpha, beta, &v()).eval_element(&Element::zeta())
}

/// The closed form of `m'_ij sigma^s` in one case. The radicals of the
/// stated prefactor and of `n_j / n_i` combine into a perfect square, whose
/// root is checked and used.
///
/// [`Route::Stated`] keeps the stated powers of `i` and signs; the derived
/// route uses the units the coproduct produces: case one unchanged, case two
/// without `(-1)^([(l+j)/2]-[(l+i)/2])`, cases three and four without powers
/// of `i`.
pub fn closed_form_case(idx: &CorepIndex, case: Case, route: Route) -> Result<Element> {
    if !cases(idx).contains(&case) {
        return Err(Error::InvalidIndex(format!("{idx} is not in case {case:?}")));
    }
    let (lpi, lmi, lpj, lmj) = idx.parts();
    let (imj, jmi) = (lpi - lpj, lpj - lpi);
    let fl = |x: i64| x.div_euclid(2);
    // exponent of i coming from n_j / n_i
    let e_norm = fl(lpj) - fl(lpi);
    // (i-exponent, t-exponent, B1, B2, sign exponent, root)
    let (e_n, tp, b1, b2, sgn, root) = match case {
        Case::One => (fl(lpi) - fl(lpj), lpj * imj, binom(lpi, imj), binom(lmj, imj), 0, binom(lpi, imj)),
        Case::Two => (fl(lpj) - fl(lpi), lpi * jmi, binom(lpj, jmi), binom(lmi, jmi), fl(jmi), binom(lmi, jmi)),
        Case::Three => (fl(lmi) - fl(lmj), lmj * jmi, binom(lmi, jmi), binom(lpj, jmi), fl(jmi), binom(lmi, jmi)),
        Case::Four => (fl(lmj) - fl(lmi), lmi * imj, binom(lmj, imj), binom(lpi, imj), 0, binom(lpi, imj)),
    };
    let radicand = b1.mul(&b2).mul(&norm_abs_sq(idx.two_l, idx.two_j)).div(&norm_abs_sq(idx.two_l, idx.two_i))?;
    if radicand != root.mul(&root) {
        return Err(Error::Inconsistent(format!("prefactor of {idx} is not a perfect square")));
    }
    let unit = match route {
        Route::Stated => Scalar::i_pow(e_n + e_norm),
        Route::Derived => Scalar::one(),
    };
    let coeff = unit.mul(&Scalar::t_pow(tp)).mul(&root).mul(&neg_one_pow(sgn));
    Ok(assemble(idx, case, coeff))
}

fn assemble(idx: &CorepIndex, case: Case, coeff: Scalar) -> Element {
    let (lpi, lmi, lpj, lmj) = idx.parts();
    let (ipj, imj) = ((idx.two_i + idx.two_j) / 2, (idx.two_i - idx.two_j) / 2);
    let mono = |a: i64, b: i64, c: i64, d: i64, s: i64| {
        Element::monomial(Ring::Asigma, Monomial::new(a as u32, b as u32, c as u32, d as u32, 0))
            .mul(&Element::monomial(Ring::Asigma, sigma_pow(s)))
    };
    let sig = Element::monomial(Ring::Asigma, sigma_pow(idx.s as i64));
    let body = match case {
        Case::One => mono(-ipj, 0, imj, 0, lpj).mul(&jacobi_at_zeta(lpj, imj, -ipj)),
        Case::Two => mono(-ipj, -imj, 0, 0, lpi).mul(&jacobi_at_zeta(lpi, -imj, -ipj)),
        Case::Three => jacobi_at_zeta(lmj, -imj, ipj).mul(&mono(0, -imj, 0, ipj, lmj)),
        Case::Four => jacobi_at_zeta(lmi, imj, ipj).mul(&mono(0, 0, imj, ipj, lmi)),
    };
    body.mul(&sig).scale(&coeff)
}

/// `m'_ij sigma^s` from the first applicable case.
pub fn closed_form(idx: &CorepIndex) -> Result<Element> {
    let idx = CorepIndex::new(idx.two_l, idx.two_i, idx.two_j, idx.s)?;
    closed_form_case(&idx, cases(&idx)[0], Route::Derived)
}

/// Closed forms against the coproduct-derived coefficients for every entry
/// with `2l <= two_l_max`, both `s`; overlapping cases are compared too.
pub fn verify_closed_forms(two_l_max: i64, route: Route) -> Report {
    let mut r = Report::new(format!("closed forms ({route:?})"));
    for two_l in 0..=two_l_max {
        for s in 0..=1u8 {
            let m = match matrix_coefficients_bounded(two_l, s, two_l_max.max(DEFAULT_MAX_TWO_L)) {
                Ok(m) => m,
                Err(e) => {
                    r.check(false, format!("2l={two_l} s={s}"), e, "matrix");
                    continue;
                }
            };
            for idx in CorepIndex::all(two_l, s) {
                let derived = m.entry(idx.two_i, idx.two_j);
                for case in cases(&idx) {
                    let cf = closed_form_case(&idx, case, route).unwrap();
                    r.check_eq(format!("{idx} case {case:?}"), &cf, derived);
                }
            }
        }
    }
    r
}

/// For each entry where the stated form disagrees with the coproduct, the
/// unit `derived / stated`.
pub fn stated_unit_discrepancies(two_l_max: i64) -> Result<Vec<(CorepIndex, Case, Scalar)>> {
    let mut out = Vec::new();
    for two_l in 0..=two_l_max {
        let m = matrix_coefficients_bounded(two_l, 0, two_l_max.max(DEFAULT_MAX_TWO_L))?;
        for idx in CorepIndex::all(two_l, 0) {
            let derived = m.entry(idx.two_i, idx.two_j);
            for case in cases(&idx) {
                let cf = closed_form_case(&idx, case, Route::Stated)?;
                let (mono, x) = cf.terms().next().expect("closed forms are nonzero");
                let unit = derived.coeff(mono).div(x)?;
                if !unit.is_one() {
                    out.push((idx, case, unit));
                }
            }
        }
    }
    Ok(out)
}
