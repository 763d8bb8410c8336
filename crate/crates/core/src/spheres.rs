//! Quantum super spheres: the 3x3 corepresentation `M`, the generator
//! triples `x(alpha)` and `x(infinity)`, relation solving and the characters
//! of `S_infinity`.

use std::fmt;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hopf::{antipode, coproduct, counit, star, TensorElement};
use crate::linalg::{nullspace, rank_gauss, Matrix};
use crate::report::{Report, Route};
use crate::scalars::{Gauss, Radicand, Scalar};
use crate::superalg::{Element, Gen, Monomial, Ring};

fn g(x: Gen) -> Element {
    Element::g(Ring::Asigma, x)
}

fn q() -> Scalar {
    Scalar::q()
}

/// `sqrt(1 - q^-1) = sqrt(1 + t^-2)`.
fn root_minus() -> Scalar {
    Scalar::sqrt_of(Radicand::OnePlusTInv2)
}

/// `sqrt(1 - q) = sqrt(1 + t^2)`.
fn root_plus() -> Scalar {
    Scalar::sqrt_of(Radicand::OnePlusT2)
}

/// `M`, indexed by `{-1, 0, 1}` in both slots (stored at `i + 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct SphereMatrix {
    pub entries: [[Element; 3]; 3],
}

impl SphereMatrix {
    pub fn get(&self, i: i64, j: i64) -> &Element {
        &self.entries[(i + 1) as usize][(j + 1) as usize]
    }

    pub fn to_json(&self) -> Value {
        json!(self.entries.iter().map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
    }
}

pub fn build_m() -> SphereMatrix {
    let (a, b, c, d) = (g(Gen::A), g(Gen::B), g(Gen::C), g(Gen::D));
    let i = Scalar::i();
    let center = a.mul(&d).add(&c.mul(&b).scale(&Scalar::t_pow(-1)));
    SphereMatrix {
        entries: [
            [a.mul(&a), a.mul(&b).scale(&root_minus()), b.mul(&b).scale(&i)],
            [a.mul(&c).scale(&root_minus()), center, d.mul(&b).scale(&i.mul(&root_plus()))],
            [c.mul(&c).scale(&i), d.mul(&c).scale(&i.mul(&root_plus()).neg()), d.mul(&d)],
        ],
    }
}

/// `Delta(M) = M (x) M`, `eps(M) = I` and `S(M) = (M*)^T` exactly; unitarity
/// `M (M*)^T = I` numerically at each `q`.
pub fn verify_m(q_samples: &[f64]) -> Report {
    let m = build_m();
    let mut r = Report::new("sphere matrix");
    let idx = [-1i64, 0, 1];
    for &i in &idx {
        for &j in &idx {
            let mut rhs = TensorElement::zero(Ring::Asigma);
            for &k in &idx {
                rhs = rhs.add(&TensorElement::from_pair(m.get(i, k), m.get(k, j)));
            }
            r.check_eq(format!("Delta(M[{i}][{j}])"), &coproduct(m.get(i, j)), &rhs);
            let e = if i == j { Scalar::one() } else { Scalar::zero() };
            r.check_eq(format!("eps(M[{i}][{j}])"), &counit(m.get(i, j)), &e);
            let s = antipode(m.get(i, j)).expect("A(sigma)");
            let st = star(m.get(j, i)).expect("A(sigma)");
            r.check_eq(format!("S(M[{i}][{j}])"), &s, &st);
        }
    }
    for &qv in q_samples {
        match unitarity_residual(&m, qv) {
            Ok(res) => r.check(res < 1e-9, format!("unitarity at q = {qv}"), res, "< 1e-9"),
            Err(e) => r.check(false, format!("unitarity at q = {qv}"), e, "a value"),
        }
    }
    r
}

/// Largest coefficient of `M (M*)^T - I` after evaluating at `q`.
pub fn unitarity_residual(m: &SphereMatrix, qv: f64) -> Result<f64> {
    let idx = [-1i64, 0, 1];
    let mut worst: f64 = 0.0;
    for &i in &idx {
        for &j in &idx {
            let mut acc = Element::zero(Ring::Asigma);
            for &k in &idx {
                acc = acc.add(&m.get(i, k).mul(&star(m.get(j, k))?));
            }
            if i == j {
                acc = acc.sub(&Element::one(Ring::Asigma));
            }
            for (_, c) in acc.terms() {
                worst = worst.max(c.eval_numeric(Complex64::new(qv, 0.0))?.norm());
            }
        }
    }
    Ok(worst)
}

/// A point of `CP^2`, or infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum SphereParams {
    Alpha([Scalar; 3]),
    Infinity,
}

impl SphereParams {
    /// Projective `alpha`, scaled so that its first nonzero entry is 1.
    pub fn alpha(v: [Scalar; 3]) -> Result<Self> {
        let Some(lead) = v.iter().find(|x| !x.is_zero()) else {
            return Err(Error::InvalidParameter("alpha must be nonzero".into()));
        };
        let inv = lead.inv()?;
        Ok(SphereParams::Alpha([v[0].mul(&inv), v[1].mul(&inv), v[2].mul(&inv)]))
    }

    pub fn alpha_int(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::alpha([Scalar::int(a), Scalar::int(b), Scalar::int(c)])
    }
}

impl fmt::Display for SphereParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereParams::Alpha([a, b, c]) => write!(f, "({a}, {b}, {c})"),
            SphereParams::Infinity => write!(f, "infinity"),
        }
    }
}

/// `x(alpha) = alpha M`, or the triple `(kappa ac, ad + t^-1 cb, kappa db)`.
pub fn x_vector(p: &SphereParams) -> [Element; 3] {
    match p {
        SphereParams::Alpha(al) => {
            let m = build_m();
            let col = |j: i64| {
                (0..3).fold(Element::zero(Ring::Asigma), |acc, i| acc.add(&m.get(i as i64 - 1, j).scale(&al[i])))
            };
            [col(-1), col(0), col(1)]
        }
        SphereParams::Infinity => {
            let k = Scalar::kappa();
            let center = build_m().get(0, 0).clone();
            [g(Gen::A).mul(&g(Gen::C)).scale(&k), center, g(Gen::D).mul(&g(Gen::B)).scale(&k)]
        }
    }
}

/// `x(infinity) = x(0,1,0) D` with `D` diagonal.
fn infinity_scaling() -> [Scalar; 3] {
    let k = Scalar::kappa();
    [k.div(&root_minus()).expect("nonzero"), Scalar::one(), k.div(&Scalar::i().mul(&root_plus())).expect("nonzero")]
}

/// `Delta(x_j) = sum_k x_k (x) M_kj`; for infinity `M` is conjugated by the
/// diagonal rescaling that relates `x(infinity)` to the middle row of `M`.
pub fn verify_coideal(p: &SphereParams) -> Report {
    let m = build_m();
    let x = x_vector(p);
    let dd = match p {
        SphereParams::Infinity => infinity_scaling(),
        SphereParams::Alpha(_) => [Scalar::one(), Scalar::one(), Scalar::one()],
    };
    let mut r = Report::new(format!("coideal {p}"));
    for j in -1..=1i64 {
        let mut rhs = TensorElement::zero(Ring::Asigma);
        for k in -1..=1i64 {
            let f = dd[(j + 1) as usize].div(&dd[(k + 1) as usize]).expect("nonzero");
            rhs = rhs.add(&TensorElement::from_pair(&x[(k + 1) as usize], &m.get(k, j).scale(&f)));
        }
        r.check_eq(format!("Delta(x[{j}])"), &coproduct(&x[(j + 1) as usize]), &rhs);
    }
    r
}

/// The four families of quadratic relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum RelationKind {
    /// `c1 x_-1 x_1 + c2 x_1 x_-1 + c3 x_0^2 = b1`
    Quadratic,
    /// `c4 x_-1 x_1 + c5 x_1 x_-1 + c6 x_0^2 = b2 sigma x_0 + b3`
    QuadraticSigma,
    /// `m1 x_-1 x_0 + m2 x_0 x_-1 = m3 sigma x_-1`
    Lower,
    /// `n1 x_1 x_0 + n2 x_0 x_1 = n3 sigma x_1`
    Upper,
}

impl RelationKind {
    pub const ALL: [RelationKind; 4] =
        [RelationKind::Quadratic, RelationKind::QuadraticSigma, RelationKind::Lower, RelationKind::Upper];

    pub fn unknowns(self) -> &'static [&'static str] {
        match self {
            RelationKind::Quadratic => &["c1", "c2", "c3", "b1"],
            RelationKind::QuadraticSigma => &["c4", "c5", "c6", "b2", "b3"],
            RelationKind::Lower => &["m1", "m2", "m3"],
            RelationKind::Upper => &["n1", "n2", "n3"],
        }
    }

    /// Elements `e_k` such that the relation reads `sum_k u_k e_k = 0`.
    fn terms(self, x: &[Element; 3]) -> Vec<Element> {
        let [xm, x0, xp] = x;
        let sigma = g(Gen::Sigma);
        let one = Element::one(Ring::Asigma);
        match self {
            RelationKind::Quadratic => vec![xm.mul(xp), xp.mul(xm), x0.mul(x0), one.neg()],
            RelationKind::QuadraticSigma => vec![xm.mul(xp), xp.mul(xm), x0.mul(x0), sigma.mul(x0).neg(), one.neg()],
            RelationKind::Lower => vec![xm.mul(x0), x0.mul(xm), sigma.mul(xm).neg()],
            RelationKind::Upper => vec![xp.mul(x0), x0.mul(xp), sigma.mul(xp).neg()],
        }
    }
}

impl std::str::FromStr for RelationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quadratic" => Ok(RelationKind::Quadratic),
            "quadratic-sigma" => Ok(RelationKind::QuadraticSigma),
            "lower" => Ok(RelationKind::Lower),
            "upper" => Ok(RelationKind::Upper),
            _ => Err(Error::InvalidParameter(format!("unknown relation kind {s}"))),
        }
    }
}

/// The solution space of one relation family, and a solution with every
/// coefficient nonzero when one exists.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationWitness {
    pub kind: RelationKind,
    /// A basis of all coefficient vectors, including degenerate ones.
    pub solutions: Vec<Vec<Scalar>>,
    pub witness: Option<Vec<Scalar>>,
}

impl RelationWitness {
    fn new(kind: RelationKind, solutions: Vec<Vec<Scalar>>) -> Self {
        let n = kind.unknowns().len();
        // a coordinate that vanishes on every basis vector vanishes everywhere
        let admissible = (0..n).all(|k| solutions.iter().any(|v| !v[k].is_zero()));
        let witness = if admissible { nowhere_zero_combination(&solutions, n) } else { None };
        RelationWitness { kind, solutions, witness }
    }

    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }

    pub fn to_json(&self) -> Value {
        let named = |v: &Vec<Scalar>| -> Value {
            let obj: serde_json::Map<String, Value> =
                self.kind.unknowns().iter().zip(v).map(|(n, x)| (n.to_string(), json!(x.to_string()))).collect();
            Value::Object(obj)
        };
        json!({
            "kind": self.kind,
            "exists": self.exists(),
            "witness": self.witness.as_ref().map(named),
            "solutions": self.solutions.iter().map(named).collect::<Vec<_>>(),
        })
    }
}

fn nowhere_zero_combination(basis: &[Vec<Scalar>], n: usize) -> Option<Vec<Scalar>> {
    for attempt in 0..16i64 {
        let mut v = vec![Scalar::zero(); n];
        for (k, b) in basis.iter().enumerate() {
            let w = Scalar::int(1 + (attempt + 1) * k as i64);
            for (x, y) in v.iter_mut().zip(b) {
                *x = x.add(&y.mul(&w));
            }
        }
        if v.iter().all(|x| !x.is_zero()) {
            return Some(v);
        }
    }
    None
}

fn named(kind: RelationKind, v: &[Scalar]) -> String {
    kind.unknowns().iter().zip(v).map(|(n, x)| format!("{n} = {x}")).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for RelationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => writeln!(f, "{:?}: {}", self.kind, named(self.kind, w))?,
            None => writeln!(f, "{:?}: none exists", self.kind)?,
        }
        for v in &self.solutions {
            writeln!(f, "  solution: {}", named(self.kind, v))?;
        }
        Ok(())
    }
}

fn coefficient_matrix(cols: &[Element]) -> Matrix {
    let mut rows: Vec<Monomial> = cols.iter().flat_map(|c| c.terms().map(|(m, _)| *m)).collect();
    rows.sort();
    rows.dedup();
    rows.iter().map(|r| cols.iter().map(|c| c.coeff(r)).collect()).collect()
}

pub fn find_relations(p: &SphereParams, kind: RelationKind) -> RelationWitness {
    let x = x_vector(p);
    let cols = kind.terms(&x);
    let m = coefficient_matrix(&cols);
    RelationWitness::new(kind, nullspace(&m, cols.len()))
}

/// Substituting a witness back gives zero.
pub fn check_witness(p: &SphereParams, w: &RelationWitness) -> Report {
    let x = x_vector(p);
    let cols = w.kind.terms(&x);
    let mut r = Report::new(format!("witness {:?} at {p}", w.kind));
    for v in w.solutions.iter().chain(&w.witness) {
        let sum = cols.iter().zip(v).fold(Element::zero(Ring::Asigma), |acc, (e, c)| acc.add(&e.scale(c)));
        r.check(sum.is_zero(), format!("{v:?}"), &sum, "0");
    }
    r
}

/// The four relations of `S_infinity`, exactly. The derived route reverses
/// the signs of both cross terms in the first relation and multiplies both
/// cross coefficients of the second by `q`:
/// `x0^2 + x-1 x1 - x1 x-1 = sigma x0` and
/// `x0^2 + (1+q^-1) x-1 x1 - (1+q) x1 x-1 = 1`.
pub fn verify_infinity_relations(route: Route) -> Report {
    let [xm, x0, xp] = x_vector(&SphereParams::Infinity);
    let sigma = g(Gen::Sigma);
    let one = Element::one(Ring::Asigma);
    let q = q();
    let qi = q.inv().expect("q is nonzero");
    let one_qi = Scalar::one().add(&qi);
    let one_q = Scalar::one().add(&q);
    let (cross, c1, c2) = match route {
        Route::Stated => (Scalar::int(-1), qi.mul(&one_qi), one_qi.clone()),
        Route::Derived => (Scalar::one(), one_qi.clone(), one_q.clone()),
    };
    let mut r = Report::new(format!("relations of S_infinity ({route:?})"));
    let lhs = x0.mul(&x0).add(&xm.mul(&xp).sub(&xp.mul(&xm)).scale(&cross));
    r.check_eq(format!("x0^2 + ({cross})(x-1 x1 - x1 x-1) = sigma x0"), &lhs, &sigma.mul(&x0));
    let lhs = x0.mul(&x0).add(&xm.mul(&xp).scale(&c1)).sub(&xp.mul(&xm).scale(&c2));
    r.check_eq(format!("x0^2 + ({c1}) x-1 x1 - ({c2}) x1 x-1 = 1"), &lhs, &one);
    let lhs = x0.mul(&xm).scale(&q).sub(&xm.mul(&x0));
    r.check_eq("q x0 x-1 - x-1 x0 = (1+q) sigma x-1", &lhs, &sigma.mul(&xm).scale(&one_q));
    let lhs = x0.mul(&xp).sub(&xp.mul(&x0).scale(&q));
    r.check_eq("x0 x1 - q x1 x0 = (1+q) sigma x1", &lhs, &sigma.mul(&xp).scale(&one_q));
    r
}

/// Evaluate at `t = t0` with `sqrt(1+t^2) = r0`; `None` when a `kappa` or a
/// pole appears.
fn specialize(s: &Scalar, t0: &Gauss, r0: &Gauss) -> Option<Gauss> {
    let mut acc = Gauss::zero();
    for (mask, f) in s.terms() {
        if mask & 0b10 != 0 {
            return None;
        }
        let mut v = f.eval_exact(t0)?;
        if mask & 0b01 != 0 {
            v = &v * r0;
        }
        acc = &acc + &v;
    }
    Some(acc)
}

/// Values of `t` where `1 + t^2` is a rational square.
const PYTHAGOREAN: [(i64, i64, i64, i64); 3] = [(3, 4, 5, 4), (4, 3, 5, 3), (5, 12, 13, 12)];

/// The spanning monomials `x0^m x-1^n sigma^s` and `x0^m x1^n sigma^s`
/// (`n >= 1` in the second family) of total degree `<= max_degree` are
/// linearly independent in `A(sigma)`.
///
/// The scale of `x_-1` and `x_1` does not affect independence, so for
/// infinity the `kappa` factors are dropped. Rank is computed exactly after
/// specializing `t` at points where `sqrt(1+t^2)` is rational; full rank at
/// one point certifies independence.
pub fn sphere_basis_check(p: &SphereParams, max_degree: u32) -> Report {
    let mut x = x_vector(p);
    if *p == SphereParams::Infinity {
        let k = Scalar::kappa().inv().expect("kappa is nonzero");
        x[0] = x[0].scale(&k);
        x[2] = x[2].scale(&k);
    }
    let sigma = g(Gen::Sigma);
    let mut cols = Vec::new();
    let mut labels = Vec::new();
    for deg in 0..=max_degree {
        for n in 0..=deg {
            let m = deg - n;
            for s in 0..=1u32 {
                cols.push(x[1].pow(m).mul(&x[0].pow(n)).mul(&sigma.pow(s)));
                labels.push(format!("x0^{m} x-1^{n} s^{s}"));
                if n >= 1 {
                    cols.push(x[1].pow(m).mul(&x[2].pow(n)).mul(&sigma.pow(s)));
                    labels.push(format!("x0^{m} x1^{n} s^{s}"));
                }
            }
        }
    }
    let m = coefficient_matrix(&cols);
    let mut best = 0;
    for (tn, td, rn, rd) in PYTHAGOREAN {
        let t0 = Gauss::from_ratio(tn, td);
        let r0 = Gauss::from_ratio(rn, rd);
        let values: Option<Vec<Vec<Gauss>>> =
            m.iter().map(|row| row.iter().map(|x| specialize(x, &t0, &r0)).collect()).collect();
        if let Some(g) = values {
            best = best.max(rank_gauss(g));
        }
        if best == cols.len() {
            break;
        }
    }
    let mut r = Report::new(format!("sphere basis {p}, degree <= {max_degree}"));
    r.check(
        best == cols.len(),
        format!("{} monomials", cols.len()),
        format!("rank {best}"),
        format!("rank {}", cols.len()),
    );
    r
}

/// A character of `S_infinity`: the values `(y_-1, y_0, y_1)`.
pub type Character = [Scalar; 3];

/// Characters of `S_infinity`, by case analysis on the relations.
///
/// A character sends `x_i` to `y_i` and `sigma x_i` to some `z_i`; since
/// `(sigma x_i)^2 = e_i x_i^2` with signs `e_i` computed here, `z_i^2 = e_i y_i^2`.
/// The cross terms of the first relation cancel in a commutative target, so
/// `z_0 = y_0^2` and `y_0^4 = e_0 y_0^2`. A nonzero `y_-1` forces
/// `z_-1 = y_0 y_-1 (q-1)/(q+1)`, hence `y_0^2 ((q-1)/(q+1))^2 = e_-1`;
/// likewise for `y_1`. With `y_-1 = y_1 = 0` the second relation reads
/// `y_0^2 = 1` whichever version of its cross coefficients is used.
pub fn characters_of_s_infinity() -> Result<Vec<Character>> {
    let x = x_vector(&SphereParams::Infinity);
    let sigma = g(Gen::Sigma);
    let mut e = Vec::new();
    for xi in &x {
        let sq = sigma.mul(xi).mul(&sigma.mul(xi));
        let x2 = xi.mul(xi);
        if sq == x2 {
            e.push(Scalar::one());
        } else if sq == x2.neg() {
            e.push(Scalar::int(-1));
        } else {
            return Err(Error::Inconsistent("(sigma x)^2 is not +-x^2".into()));
        }
    }
    let q = q();
    // y0 candidates: 0, and the square roots of e_0 when they are rational
    let mut y0s = vec![Scalar::zero()];
    if e[1].is_one() {
        y0s.push(Scalar::one());
        y0s.push(Scalar::int(-1));
    } else {
        y0s.push(Scalar::i());
        y0s.push(Scalar::i().neg());
    }
    let ratio_m = q.sub(&Scalar::one()).div(&q.add(&Scalar::one()))?;
    let ratio_p = Scalar::one().sub(&q).div(&q.add(&Scalar::one()))?;
    let mut out = Vec::new();
    for y0 in y0s {
        let y02 = y0.mul(&y0);
        // nonzero y_-1 / y_1 allowed only if the squared constraint holds
        let lower_ok = y02.mul(&ratio_m).mul(&ratio_m) == e[0];
        let upper_ok = y02.mul(&ratio_p).mul(&ratio_p) == e[2];
        if lower_ok || upper_ok {
            return Err(Error::Inconsistent(format!("unexpected nonzero branch at y0 = {y0}")));
        }
        // with y_-1 = y_1 = 0 the second relation reads y0^2 = 1
        if y02.is_one() {
            out.push([Scalar::zero(), y0, Scalar::zero()]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_entries() {
        let m = build_m();
        assert_eq!(m.get(-1, -1), &g(Gen::A).pow(2));
        let expect = g(Gen::Sigma).sub(&g(Gen::B).mul(&g(Gen::C)).scale(&Scalar::t().add(&Scalar::t_pow(-1))));
        assert_eq!(m.get(0, 0), &expect);
        let r = verify_m(&[-0.5, -2.0]);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn x_vectors() {
        let x = x_vector(&SphereParams::alpha_int(1, 0, 0).unwrap());
        assert_eq!(x[0], g(Gen::A).pow(2));
        assert_eq!(x[2], g(Gen::B).pow(2).scale(&Scalar::i()));
        let x = x_vector(&SphereParams::alpha_int(0, 1, 0).unwrap());
        assert_eq!(x[1], build_m().get(0, 0).clone());
        assert!(SphereParams::alpha_int(0, 0, 0).is_err());
        assert_eq!(SphereParams::alpha_int(0, 2, 4).unwrap(), SphereParams::alpha_int(0, 1, 2).unwrap());
        for p in [SphereParams::Infinity, SphereParams::alpha_int(1, 2, 3).unwrap()] {
            let r = verify_coideal(&p);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn relations_at_infinity() {
        let r = verify_infinity_relations(Route::Derived);
        assert!(r.passed(), "{r}");
        let r = verify_infinity_relations(Route::Stated);
        assert_eq!(r.failed, 2, "{r}");
        let p = SphereParams::Infinity;
        for kind in RelationKind::ALL {
            let w = find_relations(&p, kind);
            assert!(!w.solutions.is_empty(), "{kind:?}");
            assert!(check_witness(&p, &w).passed());
        }
        // q x0 x-1 - x-1 x0 = (1+q) sigma x-1
        let w = find_relations(&p, RelationKind::Lower);
        assert!(w.exists());
        let q = Scalar::q();
        let expect = vec![Scalar::int(-1), q.clone(), q.add(&Scalar::one())];
        assert!(crate::linalg::in_span(&w.solutions, &expect));
    }

    #[test]
    fn no_mixed_relation_without_middle_coordinate() {
        let p = SphereParams::alpha_int(1, 0, 1).unwrap();
        let w = find_relations(&p, RelationKind::Lower);
        assert!(!w.exists());
        // only the degenerate x0 x-1 = t^-2 x-1 x0 survives
        assert_eq!(w.solutions, vec![vec![Scalar::t_pow(-2).neg(), Scalar::one(), Scalar::zero()]]);
        assert!(!find_relations(&p, RelationKind::Upper).exists());
        let p = SphereParams::alpha_int(0, 1, 0).unwrap();
        for kind in RelationKind::ALL {
            let w = find_relations(&p, kind);
            assert!(w.exists(), "{kind:?}");
            assert!(check_witness(&p, &w).passed());
        }
    }

    #[test]
    fn basis_and_characters() {
        let r = sphere_basis_check(&SphereParams::Infinity, 3);
        assert!(r.passed(), "{r}");
        let r = sphere_basis_check(&SphereParams::Infinity, 0);
        assert!(r.passed(), "{r}");
        let ch = characters_of_s_infinity().unwrap();
        assert_eq!(ch.len(), 2);
        assert!(ch.contains(&[Scalar::zero(), Scalar::one(), Scalar::zero()]));
        assert!(ch.contains(&[Scalar::zero(), Scalar::int(-1), Scalar::zero()]));
    }
}
