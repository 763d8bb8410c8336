//! The Haar functional, the decomposition into matrix coefficients, and
//! the two hermitian forms.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use super::corep::{closed_form, matrix_coefficients_bounded, norm_abs_sq, CorepIndex, DEFAULT_MAX_TWO_L};
use crate::error::{Error, Result};
use crate::hopf::{antipode, coproduct, star, Factor};
use crate::linalg::{solve, Matrix};
use crate::qfun::{pochhammer, QPolynomial};
use crate::report::{Report, Route};
use crate::scalars::Scalar;
use crate::superalg::{Element, Monomial, Ring};

fn v() -> Scalar {
    Scalar::t_pow(-2)
}

/// `h(zeta^n) = (1 - t^-2) / (1 - t^(-2(n+1)))`.
pub fn haar_zeta(n: u32) -> Scalar {
    let num = Scalar::one().sub(&v());
    let den = Scalar::one().sub(&Scalar::t_pow(-2 * (n as i64 + 1)));
    num.div(&den).expect("nonzero denominator")
}

/// `h(zeta^n sigma)`: expand `zeta^n sigma` in the closed forms
/// `m'_00^(l) sigma^s` (`l <= n`) and sum the `l = 0` coefficients.
pub fn haar_zeta_sigma(n: u32) -> Result<Scalar> {
    let x = Element::zeta().pow(n).mul(&Element::g(Ring::Asigma, crate::superalg::Gen::Sigma));
    haar_by_closed_forms(&x, n)
}

/// `h(x)` for `x` in `C<zeta, sigma>` of `zeta`-degree at most `n`, read off
/// from the expansion in `m'_00^(l) sigma^s`, `l <= n`.
pub fn haar_by_closed_forms(x: &Element, n: u32) -> Result<Scalar> {
    let mut cols = Vec::new();
    let mut labels = Vec::new();
    for l in 0..=n as i64 {
        for s in 0..=1u8 {
            cols.push(closed_form(&CorepIndex::new(2 * l, 0, 0, s)?)?);
            labels.push((l, s));
        }
    }
    let coeffs = expand(x, &cols)?;
    Ok(labels.iter().zip(&coeffs).filter(|((l, _), _)| *l == 0).fold(Scalar::zero(), |acc, (_, c)| acc.add(c)))
}

/// Coefficients of `x` in the span of `cols`, or an error when `x` is not in it.
fn expand(x: &Element, cols: &[Element]) -> Result<Vec<Scalar>> {
    let mut rows: BTreeSet<Monomial> = x.terms().map(|(m, _)| *m).collect();
    for c in cols {
        rows.extend(c.terms().map(|(m, _)| *m));
    }
    let m: Matrix = rows.iter().map(|r| cols.iter().map(|c| c.coeff(r)).collect()).collect();
    let b: Vec<Scalar> = rows.iter().map(|r| x.coeff(r)).collect();
    solve(&m, &b)
}

fn bc_cache() -> &'static RwLock<HashMap<(u32, u8), Scalar>> {
    static C: OnceLock<RwLock<HashMap<(u32, u8), Scalar>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `h(b^n c^n sigma^s)`, by writing the monomial in powers of `zeta` times
/// `sigma^u` and applying `h(zeta^k)` and `h(zeta^k sigma)`.
fn haar_bc(n: u32, s: u8) -> Result<Scalar> {
    if let Some(x) = bc_cache().read().unwrap().get(&(n, s)) {
        return Ok(x.clone());
    }
    let sigma = Element::g(Ring::Asigma, crate::superalg::Gen::Sigma);
    let mut cols = Vec::new();
    let mut vals = Vec::new();
    let mut z = Element::one(Ring::Asigma);
    for k in 0..=n {
        cols.push(z.clone());
        vals.push(haar_zeta(k));
        cols.push(z.mul(&sigma));
        vals.push(haar_zeta_sigma(k)?);
        z = z.mul(&Element::zeta());
    }
    let target = Element::monomial(Ring::Asigma, Monomial::new(0, n, n, 0, s));
    let coeffs = expand(&target, &cols)?;
    let h = coeffs.iter().zip(&vals).fold(Scalar::zero(), |acc, (c, h)| acc.add(&c.mul(h)));
    crate::cache::insert(&mut bc_cache().write().unwrap(), (n, s), h.clone());
    Ok(h)
}

/// The Haar functional. Only the `(0,0)` component contributes.
pub fn haar(x: &Element) -> Result<Scalar> {
    if x.ring() != Ring::Asigma {
        return Err(Error::NotInRing { op: "haar", ring: x.ring() });
    }
    let mut acc = Scalar::zero();
    for (m, c) in x.terms() {
        if m.bigrade() != (0, 0) {
            continue;
        }
        let [a, b, cc, d, s] = m.powers();
        if a != 0 || d != 0 || b != cc {
            return Err(Error::Inconsistent(format!("unexpected (0,0) monomial {m}")));
        }
        acc = acc.add(&c.mul(&haar_bc(b, s as u8)?));
    }
    Ok(acc)
}

/// Which hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Form {
    /// `<x, y> = h(x y*)`
    R,
    /// `<x, y> = h(x* y)`
    L,
}

pub fn inner(form: Form, x: &Element, y: &Element) -> Result<Scalar> {
    match form {
        Form::R => haar(&x.mul(&star(y)?)),
        Form::L => haar(&star(x)?.mul(y)),
    }
}

/// Coefficients of `x` in the matrix coefficients with `2l <= two_l_max`,
/// solved block by block in the bigrading.
pub fn decompose(x: &Element, two_l_max: i64) -> Result<BTreeMap<CorepIndex, Scalar>> {
    let x = x.to_asigma();
    let mut blocks: BTreeMap<(i64, i64), Element> = BTreeMap::new();
    for (m, c) in x.terms() {
        blocks.entry(m.bigrade()).or_insert_with(|| Element::zero(Ring::Asigma)).add_term(*m, c.clone());
    }
    let bound = two_l_max.max(DEFAULT_MAX_TWO_L);
    let mut out = BTreeMap::new();
    for ((gm, gn), part) in blocks {
        let (two_i, two_j) = (-gm, -gn);
        let mut idxs = Vec::new();
        let mut cols = Vec::new();
        let lo = two_i.abs().max(two_j.abs());
        for two_l in (lo..=two_l_max).step_by(2) {
            for s in 0..=1u8 {
                let mat = matrix_coefficients_bounded(two_l, s, bound)?;
                idxs.push(CorepIndex::new(two_l, two_i, two_j, s)?);
                cols.push(mat.entry(two_i, two_j).clone());
            }
        }
        let coeffs = expand(&part, &cols).map_err(|_| {
            Error::Inconsistent(format!("block ({gm},{gn}) is not spanned by entries with 2l <= {two_l_max}"))
        })?;
        for (i, c) in idxs.into_iter().zip(coeffs) {
            if !c.is_zero() {
                out.insert(i, c);
            }
        }
    }
    Ok(out)
}

/// Left and right integral laws, S-invariance and star compatibility on all
/// basis monomials of degree `<= max_degree`. The integral laws are checked
/// in the form `(id (x) h) Delta(x) - h(x) 1 = c_sigma (sigma - 1)`, where
/// `c_sigma` is the coefficient of `sigma` in the decomposition of `x`; the
/// printed form fails exactly on the sigma line.
pub fn verify_integral(max_degree: u32) -> Report {
    let basis = Monomial::basis(Ring::Asigma, max_degree);
    let parts: Vec<Report> = basis
        .par_iter()
        .map(|m| {
            let mut r = Report::new("integral");
            if let Err(e) = integral_at(*m, &mut r) {
                r.check(false, m.to_string(), e, "no error");
            }
            r
        })
        .collect();
    let mut r = Report::new(format!("haar integral, degree <= {max_degree}"));
    let mut sigma_line = 0;
    for p in parts {
        sigma_line += p.notes.len();
        r.merge(p);
    }
    r.notes.clear();
    r.note(format!("{sigma_line} monomials have a nonzero sigma component"));
    r
}

fn integral_at(m: Monomial, r: &mut Report) -> Result<()> {
    let x = Element::monomial(Ring::Asigma, m);
    let hx = haar(&x)?;
    let dec = decompose(&x, m.degree() as i64)?;
    let c_sigma = dec.get(&CorepIndex::new(0, 0, 0, 1)?).cloned().unwrap_or_else(Scalar::zero);
    let one = Element::one(Ring::Asigma);
    let sigma = Element::g(Ring::Asigma, crate::superalg::Gen::Sigma);
    let expected = sigma.sub(&one).scale(&c_sigma);
    let delta = coproduct(&x);
    let mut left = Element::zero(Ring::Asigma);
    let mut right = Element::zero(Ring::Asigma);
    for (legs, c) in delta.terms() {
        let (Factor::Alg(p), Factor::Alg(q)) = (legs[0], legs[1]) else { unreachable!() };
        let hq = haar(&Element::monomial(Ring::Asigma, q))?;
        if !hq.is_zero() {
            left = left.add(&Element::monomial_with(Ring::Asigma, p, c.mul(&hq)));
        }
        let hp = haar(&Element::monomial(Ring::Asigma, p))?;
        if !hp.is_zero() {
            right = right.add(&Element::monomial_with(Ring::Asigma, q, c.mul(&hp)));
        }
    }
    let hone = one.scale(&hx);
    r.check_eq(format!("(id(x)h)Delta({m})"), &left.sub(&hone), &expected);
    r.check_eq(format!("(h(x)id)Delta({m})"), &right.sub(&hone), &expected);
    r.check_eq(format!("h(S({m}))"), &haar(&antipode(&x)?)?, &hx);
    r.check_eq(format!("h({m}*)"), &haar(&star(&x)?)?, &hx.conj());
    if !c_sigma.is_zero() {
        r.note(m.to_string());
    }
    Ok(())
}

/// `h` takes the value 1 on `m'_00^(0) sigma^s` and vanishes on every other
/// matrix coefficient with `2l <= two_l_max`.
pub fn verify_haar_on_entries(two_l_max: i64) -> Report {
    let mut r = Report::new(format!("haar on matrix coefficients, 2l <= {two_l_max}"));
    for two_l in 0..=two_l_max {
        for s in 0..=1u8 {
            let mat = match matrix_coefficients_bounded(two_l, s, two_l_max.max(DEFAULT_MAX_TWO_L)) {
                Ok(m) => m,
                Err(e) => {
                    r.check(false, format!("2l={two_l}"), e, "matrix");
                    continue;
                }
            };
            for idx in CorepIndex::all(two_l, s) {
                let expect = if two_l == 0 { Scalar::one() } else { Scalar::zero() };
                match haar(mat.entry(idx.two_i, idx.two_j)) {
                    Ok(h) => r.check_eq(format!("h{idx}"), &h, &expect),
                    Err(e) => r.check(false, format!("h{idx}"), e, expect),
                }
            }
        }
    }
    r
}

/// `h(zeta^n)` by the closed formula and by the expansion in the closed
/// forms `m'_00^(l)`, for `n <= n_max`.
pub fn verify_haar_zeta(n_max: u32) -> Report {
    let mut r = Report::new(format!("h(zeta^n), n <= {n_max}"));
    for n in 0..=n_max {
        let z = Element::zeta().pow(n);
        match haar_by_closed_forms(&z, n) {
            Ok(h) => r.check_eq(format!("h(zeta^{n})"), &h, &haar_zeta(n)),
            Err(e) => r.check(false, format!("h(zeta^{n})"), e, haar_zeta(n)),
        }
        match haar_zeta_sigma(n) {
            Ok(h) => r.check_eq(format!("h(zeta^{n} sigma)"), &h, &haar_zeta(n)),
            Err(e) => r.check(false, format!("h(zeta^{n} sigma)"), e, haar_zeta(n)),
        }
    }
    r
}

/// Every basis monomial of degree `<= max_degree` lies in the span of the
/// matrix coefficients with `2l <= two_l_max`.
pub fn verify_completeness(max_degree: u32, two_l_max: i64) -> Report {
    let basis = Monomial::basis(Ring::Asigma, max_degree);
    let results: Vec<(Monomial, Result<Element>)> = basis
        .par_iter()
        .map(|m| {
            let x = Element::monomial(Ring::Asigma, *m);
            let rebuilt = decompose(&x, two_l_max).and_then(|dec| {
                let mut acc = Element::zero(Ring::Asigma);
                for (idx, c) in dec {
                    let mat = matrix_coefficients_bounded(idx.two_l, idx.s, two_l_max.max(DEFAULT_MAX_TWO_L))?;
                    acc = acc.add(&mat.entry(idx.two_i, idx.two_j).scale(&c));
                }
                Ok(acc)
            });
            (*m, rebuilt)
        })
        .collect();
    let mut r = Report::new(format!("completeness, degree <= {max_degree}, 2l <= {two_l_max}"));
    for (m, res) in results {
        match res {
            Ok(y) => r.check_eq(format!("{m}"), &y, &Element::monomial(Ring::Asigma, m)),
            Err(e) => r.check(false, m.to_string(), e, "expansion"),
        }
    }
    r
}

/// `[n]_t = (t^n - t^-n) / (t - t^-1)`.
pub fn quantum_integer(n: i64) -> Scalar {
    let num = Scalar::t_pow(n).sub(&Scalar::t_pow(-n));
    let den = Scalar::t().sub(&Scalar::t_pow(-1));
    num.div(&den).expect("t - 1/t is nonzero")
}

/// The stated value of `<m_ij sigma^s, m_ij sigma^s'>` in the normalized
/// basis: `[2l+1]_t^-1 t^(2j)` for R and `[2l+1]_t^-1 t^(-2i)` for L.
pub fn stated_norm(form: Form, idx: &CorepIndex) -> Scalar {
    let q = quantum_integer(idx.two_l + 1).inv().expect("nonzero");
    match form {
        Form::R => q.mul(&Scalar::t_pow(idx.two_j)),
        Form::L => q.mul(&Scalar::t_pow(-idx.two_i)),
    }
}

/// `|n_j / n_i|^2`: the factor between the unnormalized and normalized forms.
pub fn rescale(idx: &CorepIndex) -> Scalar {
    norm_abs_sq(idx.two_l, idx.two_j).div(&norm_abs_sq(idx.two_l, idx.two_i)).expect("nonzero")
}

#[derive(Clone, Debug)]
pub struct GramEntry {
    pub form: Form,
    pub left: CorepIndex,
    pub right: CorepIndex,
    pub value: Scalar,
}

/// All inner products between matrix coefficients with `2l <= two_l_max`,
/// both `s`, both forms.
pub fn gram_entries(two_l_max: i64) -> Result<Vec<GramEntry>> {
    let bound = two_l_max.max(DEFAULT_MAX_TWO_L);
    let mut entries = Vec::new();
    for two_l in 0..=two_l_max {
        for s in 0..=1u8 {
            let mat = matrix_coefficients_bounded(two_l, s, bound)?;
            for idx in CorepIndex::all(two_l, s) {
                let e = mat.entry(idx.two_i, idx.two_j).clone();
                let es = star(&e)?;
                entries.push((idx, e, es));
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..entries.len()).flat_map(|a| (0..entries.len()).map(move |b| (a, b))).collect();
    let out: Result<Vec<Vec<GramEntry>>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (ia, xa, sa) = &entries[a];
            let (ib, xb, sb) = &entries[b];
            Ok(vec![
                GramEntry { form: Form::R, left: *ia, right: *ib, value: haar(&xa.mul(sb))? },
                GramEntry { form: Form::L, left: *ia, right: *ib, value: haar(&sa.mul(xb))? },
            ])
        })
        .collect();
    Ok(out?.into_iter().flatten().collect())
}

/// The stated norms on pairs with equal `s`: for equal `(l, i, j)` the
/// unnormalized inner product equals the stated value times `|n_j / n_i|^2`,
/// otherwise it vanishes. Pairs with different `s` are left to
/// [`verify_cross_sigma_orthogonality`].
pub fn verify_peter_weyl_formula(two_l_max: i64) -> Report {
    let mut r = Report::new(format!("inner product formula, 2l <= {two_l_max}"));
    match gram_entries(two_l_max) {
        Ok(g) => {
            for e in g.into_iter().filter(|e| e.left.s == e.right.s) {
                let same = (e.left.two_l, e.left.two_i, e.left.two_j) == (e.right.two_l, e.right.two_i, e.right.two_j);
                let expect = if same { stated_norm(e.form, &e.left).mul(&rescale(&e.left)) } else { Scalar::zero() };
                r.check_eq(format!("<{}, {}>_{:?}", e.left, e.right, e.form), &e.value, &expect);
            }
        }
        Err(e) => r.check(false, "gram", e, "values"),
    }
    r
}

/// Orthogonality of `M_l` and `M_l sigma`: every inner product between
/// entries with different `s` should vanish.
pub fn verify_cross_sigma_orthogonality(two_l_max: i64) -> Report {
    let mut r = Report::new(format!("orthogonality of M_l and M_l sigma, 2l <= {two_l_max}"));
    match gram_entries(two_l_max) {
        Ok(g) => {
            for e in g.into_iter().filter(|e| e.left.s != e.right.s) {
                r.check_eq(format!("<{}, {}>_{:?}", e.left, e.right, e.form), &e.value, &Scalar::zero());
            }
        }
        Err(e) => r.check(false, "gram", e, "values"),
    }
    r
}

/// The full orthogonality statement: the formula, cross-`l` and cross-`s`
/// orthogonality, and the `e_mn e_mn*` products for `|m|, |n| <= 3`.
pub fn verify_peter_weyl(two_l_max: i64) -> Report {
    let mut r = Report::new(format!("peter-weyl, 2l <= {two_l_max}"));
    r.merge(verify_peter_weyl_formula(two_l_max));
    r.merge(verify_cross_sigma_orthogonality(two_l_max));
    r.merge(super::formulas::verify_e_products(3, Route::Stated));
    r
}

/// Which moment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// `h(zeta^r (zeta; t^2)_s)`
    Ascending,
    /// `h(zeta^r (t^-2 zeta; t^-2)_s)`
    Descending,
}

#[derive(Clone, Debug, Serialize)]
pub struct Moment {
    pub r: u32,
    pub s: u32,
    pub variant: Variant,
    #[serde(serialize_with = "ser_scalar")]
    pub oracle: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub printed: Scalar,
    pub matches: bool,
    /// The printed formula with `t^(-2(r+1))` replaced by `t^(-2s(r+1))` in
    /// the ascending case.
    #[serde(serialize_with = "ser_scalar")]
    pub corrected: Scalar,
}

fn ser_scalar<S: serde::Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `prod_{k<n} (1 - u v^k z)`.
pub fn pochhammer_poly(u: &Scalar, v: &Scalar, n: u32) -> QPolynomial {
    let mut acc = QPolynomial::constant(Scalar::one());
    let mut uk = u.clone();
    for _ in 0..n {
        let mut f = QPolynomial::constant(Scalar::one());
        f.add_term(1, uk.neg());
        acc = acc.mul(&f);
        uk = uk.mul(v);
    }
    acc
}

/// The moment computed by applying `h` to the expanded element, next to the
/// printed closed formula.
pub fn moments(r: u32, s: u32, variant: Variant) -> Result<Moment> {
    if r > 8 || s > 8 {
        return Err(Error::BoundExceeded(format!("moments need r, s <= 8, got ({r}, {s})")));
    }
    let poly = match variant {
        Variant::Ascending => pochhammer_poly(&Scalar::one(), &Scalar::t_pow(2), s),
        Variant::Descending => pochhammer_poly(&v(), &v(), s),
    };
    let x = Element::zeta().pow(r).mul(&poly.eval_element(&Element::zeta()));
    let oracle = haar(&x)?;
    let vv = v();
    let base = pochhammer(&vv, &vv, r).mul(&pochhammer(&vv, &vv, s)).mul(&pochhammer(&vv, &vv, 1)).div(&pochhammer(
        &vv,
        &vv,
        r + s + 1,
    ))?;
    let (printed, corrected) = match variant {
        Variant::Ascending => {
            (base.mul(&Scalar::t_pow(-2 * (r as i64 + 1))), base.mul(&Scalar::t_pow(-2 * s as i64 * (r as i64 + 1))))
        }
        Variant::Descending => (base.clone(), base),
    };
    let matches = oracle == printed;
    Ok(Moment { r, s, variant, oracle, printed, matches, corrected })
}
