//! Product and power formulas in `A(sigma)[0,0]`.

use super::haar::pochhammer_poly;
use crate::hopf::{coproduct, star, TensorElement};
use crate::qfun::{gauss_binomial, qbinomial_theorem_check};
use crate::report::{Report, Route};
use crate::scalars::Scalar;
use crate::superalg::{e_basis, project_00, Element, Gen, Ring};

fn g(x: Gen) -> Element {
    Element::g(Ring::Asigma, x)
}

fn v() -> Scalar {
    Scalar::t_pow(-2)
}

/// `(u zeta; v)_n` as an element.
fn poch(u: &Scalar, v: &Scalar, n: i64) -> Element {
    pochhammer_poly(u, v, n as u32).eval_element(&Element::zeta())
}

fn asc(n: i64) -> Element {
    poch(&Scalar::one(), &Scalar::t_pow(2), n)
}

fn desc(n: i64) -> Element {
    poch(&v(), &v(), n)
}

/// The expansions of `a^m d^m` and `d^m a^m` in `cb`, `sigma` and in `zeta`,
/// together with the coproducts of `a^m` and `c^m`, for `m <= max_m`.
pub fn verify_power_formulas(max_m: u32) -> Report {
    let mut r = Report::new(format!("power formulas, m <= {max_m}"));
    let sigma = g(Gen::Sigma);
    let cb = g(Gen::C).mul(&g(Gen::B));
    let cbs = cb.mul(&sigma);
    for m in 0..=max_m {
        r.merge(qbinomial_theorem_check(m));
        let mi = m as i64;
        let ad = g(Gen::A).pow(m).mul(&g(Gen::D).pow(m));
        let da = g(Gen::D).pow(m).mul(&g(Gen::A).pow(m));
        let sm = sigma.pow(m);
        let mut first = Element::zero(Ring::Asigma);
        let mut second = Element::zero(Ring::Asigma);
        let mut third = Element::zero(Ring::Asigma);
        for k in 0..=mi {
            let b = gauss_binomial(mi, k, &v());
            let c1 = b.mul(&Scalar::t_pow(2 * k * mi - k * k));
            first = first.add(&cb.pow(k as u32).mul(&sigma.pow((mi - k) as u32)).scale(&c1));
            second = second.add(&cbs.pow(k as u32).mul(&sm).scale(&c1));
            third = third.add(&cbs.pow(k as u32).mul(&sm).scale(&b.mul(&Scalar::t_pow(-k * k))));
        }
        r.check_eq(format!("a^{m} d^{m} in (cb)^k sigma^(m-k)"), &ad, &first);
        r.check_eq(format!("a^{m} d^{m} in (cb sigma)^k sigma^m"), &ad, &second);
        r.check_eq(format!("d^{m} a^{m} in (cb sigma)^k sigma^m"), &da, &third);
        r.check_eq(format!("a^{m} d^{m} = (zeta; t^2)_{m} sigma^{m}"), &ad, &asc(mi).mul(&sm));
        r.check_eq(format!("d^{m} a^{m} = (t^-2 zeta; t^-2)_{m} sigma^{m}"), &da, &desc(mi).mul(&sm));
    }
    r
}

/// `(id (x) P) Delta(zeta^n)` against its expansion, `P` the projection onto
/// `A(sigma)[0,0]`.
pub fn verify_projection_formula(n_max: u32) -> Report {
    let mut r = Report::new(format!("projected coproduct of zeta^n, n <= {n_max}"));
    for n in 0..=n_max {
        let ni = n as i64;
        let lhs =
            coproduct(&Element::zeta().pow(n)).map_alg_leg(1, |m| project_00(&Element::monomial(Ring::Asigma, m)));
        let mut rhs = TensorElement::zero(Ring::Asigma);
        for j in 0..=ni {
            let b = gauss_binomial(ni, j, &v());
            let c = b.mul(&b).mul(&Scalar::t_pow(2 * j * (ni - j)));
            let left = Element::zeta().pow((ni - j) as u32).mul(&asc(j));
            let right = Element::zeta().pow(j as u32).mul(&desc(ni - j));
            rhs = rhs.add(&TensorElement::from_pair(&left, &right).scale(&c));
        }
        r.check_eq(format!("(id(x)P)Delta(zeta^{n})"), &lhs, &rhs);
    }
    r
}

/// `e_mn e_mn*` for `|m|, |n| <= max` with `m = n mod 2`, each applicable
/// case separately.
pub fn verify_e_products(max: i64, route: Route) -> Report {
    let mut r = Report::new(format!("e_mn e_mn* ({route:?}), |m|,|n| <= {max}"));
    for m in -max..=max {
        for n in -max..=max {
            if (m - n).rem_euclid(2) != 0 {
                continue;
            }
            let e = e_basis(m, n).expect("parity checked");
            let lhs = e.mul(&star(&e).expect("A(sigma)"));
            for (case, rhs) in e_product_cases(m, n, route) {
                r.check_eq(format!("e_({m},{n}) case {case}"), &lhs, &rhs);
            }
        }
    }
    r
}

/// The right-hand sides that apply to `(m, n)`, labelled 1 to 4. The derived
/// route uses `t^((m-n)(m+n)/2)` in case 2 in place of `t^((m-n)(m+n-2)/2)`.
pub fn e_product_cases(m: i64, n: i64, route: Route) -> Vec<(u8, Element)> {
    let z = Element::zeta();
    let mut out = Vec::new();
    if m + n >= 0 && m <= n {
        let c = Scalar::t_pow((n - m) * (n + m - 2) / 2);
        out.push((1, z.pow(((n - m) / 2) as u32).mul(&asc((m + n) / 2)).scale(&c)));
    }
    if m + n >= 0 && m >= n {
        let shift = if route == Route::Stated { 2 } else { 0 };
        let c = Scalar::t_pow((m - n) * (n + m - shift) / 2);
        out.push((2, z.pow(((m - n) / 2) as u32).mul(&asc((m + n) / 2)).scale(&c)));
    }
    if m + n <= 0 && m >= n {
        out.push((3, z.pow(((m - n) / 2) as u32).mul(&desc((-m - n) / 2))));
    }
    if m + n <= 0 && m <= n {
        let c = Scalar::t_pow(m - n);
        out.push((4, z.pow(((n - m) / 2) as u32).mul(&desc((-m - n) / 2)).scale(&c)));
    }
    out
}
