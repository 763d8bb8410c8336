//! Axiom checks over all basis monomials up to a degree.

use rayon::prelude::*;

use crate::report::Report;
use crate::scalars::Scalar;
use crate::superalg::{Element, Gen, Monomial, Ring, Rules};

use super::plane::{coaction_mono, PlaneMono, Side};
use super::structure::{antipode_mono, coproduct, coproduct_mono, counit, counit_mono, star, star_tensor};
use super::tensor::{Factor, TensorElement};

const GENS: [Gen; 5] = [Gen::A, Gen::B, Gen::C, Gen::D, Gen::Sigma];

fn delta_leg(t: &TensorElement, k: usize) -> TensorElement {
    let (ring, rules) = (t.ring(), t.rules());
    t.map_leg(k, |f| match f {
        Factor::Alg(m) => coproduct_mono(m, ring, rules),
        Factor::Plane(_) => panic!("coproduct on a plane leg"),
    })
}

fn eps_leg(t: &TensorElement, k: usize) -> TensorElement {
    let ring = t.ring();
    t.map_leg(k, |f| match f {
        Factor::Alg(m) => TensorElement::pure(ring, vec![], counit_mono(m)),
        Factor::Plane(_) => panic!("counit on a plane leg"),
    })
}

fn single(ring: Ring, rules: Rules, m: Monomial) -> TensorElement {
    TensorElement::pure(ring, vec![Factor::Alg(m)], Scalar::one()).with_rules(rules)
}

fn checks_for(m: Monomial, rules: Rules) -> Report {
    let ring = Ring::Asigma;
    let mut r = Report::new("hopf");
    let x = Element::monomial(ring, m).with_rules(rules);
    let dm = coproduct_mono(m, ring, rules);

    r.check_eq(format!("coassociativity {m}"), &delta_leg(&dm, 0), &delta_leg(&dm, 1));

    let id = single(ring, rules, m);
    r.check_eq(format!("(eps x id)Delta {m}"), &eps_leg(&dm, 0), &id);
    r.check_eq(format!("(id x eps)Delta {m}"), &eps_leg(&dm, 1), &id);

    let unit = Element::one(ring).with_rules(rules).scale(&counit_mono(m));
    let left = dm.map_alg_leg(0, |y| antipode_mono(y, rules)).multiply_out();
    let right = dm.map_alg_leg(1, |y| antipode_mono(y, rules)).multiply_out();
    r.check_eq(format!("m(S x id)Delta {m}"), &left, &unit);
    r.check_eq(format!("m(id x S)Delta {m}"), &right, &unit);

    let sx = antipode_mono(m, rules);
    for g in GENS {
        let ge = Element::monomial(ring, Monomial::gen(g)).with_rules(rules);
        let sg = antipode_mono(Monomial::gen(g), rules);
        let sign = if g.parity() * m.parity() == 1 { Scalar::int(-1) } else { Scalar::one() };

        let gx = ge.mul(&x);
        let s_gx = super::structure::antipode(&gx).unwrap();
        r.check_eq(format!("S({g:?}*{m})"), &s_gx, &sx.mul(&sg).scale(&sign));
        let xg = x.mul(&ge);
        let s_xg = super::structure::antipode(&xg).unwrap();
        r.check_eq(format!("S({m}*{g:?})"), &s_xg, &sg.mul(&sx).scale(&sign));

        r.check_eq(format!("Delta({g:?}*{m})"), &coproduct(&gx), &coproduct(&ge).mul(&dm));
        r.check_eq(format!("Delta({m}*{g:?})"), &coproduct(&xg), &dm.mul(&coproduct(&ge)));
        r.check_eq(format!("eps({g:?}*{m})"), &counit(&gx), &counit(&ge).mul(&counit(&x)));

        let st = |e: &Element| star(e).unwrap();
        r.check_eq(format!("star({g:?}*{m})"), &st(&gx), &st(&x).mul(&st(&ge)));
    }

    let xs = star(&x).unwrap();
    r.check_eq(format!("star^2 {m}"), &star(&xs).unwrap(), &x);
    r.check_eq(format!("(* x *)Delta = Delta * {m}"), &star_tensor(&dm), &coproduct(&xs));
    r.check_eq(format!("eps(x*) {m}"), &counit(&xs), &counit(&x).conj());
    let s = |e: &Element| super::structure::antipode(e).unwrap();
    r.check_eq(format!("*S*S {m}"), &star(&s(&star(&s(&x)).unwrap())).unwrap(), &x);
    r.check_eq(format!("S*S* {m}"), &s(&star(&s(&xs)).unwrap()), &x);
    r
}

/// Hopf and star axioms on every basis monomial of `A(sigma)` of degree at
/// most `max_degree`.
pub fn verify_hopf(max_degree: u32) -> Report {
    verify_hopf_with(max_degree, Rules::default())
}

pub fn verify_hopf_with(max_degree: u32, rules: Rules) -> Report {
    let basis = Monomial::basis(Ring::Asigma, max_degree);
    let parts: Vec<Report> = basis.par_iter().map(|m| checks_for(*m, rules)).collect();
    let mut r = Report::new("hopf");
    for p in parts {
        r.merge(p);
    }
    r
}

/// Comodule axioms for both coactions on plane monomials of degree at most
/// `max_degree`, plus multiplicativity on pairs.
pub fn verify_coactions(max_degree: u32) -> Report {
    let ring = Ring::Bsigma;
    let mut r = Report::new("coaction");
    let monos: Vec<PlaneMono> = (0..=max_degree).flat_map(|d| (0..=d).map(move |y| PlaneMono::new(d - y, y))).collect();
    for side in [Side::Left, Side::Right] {
        let (alg, pl) = match side {
            Side::Left => (0, 1),
            Side::Right => (1, 0),
        };
        for &m in &monos {
            let psi = coaction_mono(side, ring, m, false);
            let ident = {
                let legs = vec![Factor::Plane(m)];
                TensorElement::pure(ring, legs, Scalar::one())
            };
            r.check_eq(format!("{side:?} counit {m}"), &eps_leg(&psi, alg), &ident);
            let twice = psi.map_leg(pl, |f| match f {
                Factor::Plane(p) => coaction_mono(side, ring, p, false),
                Factor::Alg(_) => unreachable!(),
            });
            let via_delta = delta_leg(&psi, alg);
            r.check_eq(format!("{side:?} coassociativity {m}"), &twice, &via_delta);
        }
        for &m in &monos {
            for &n in &monos {
                if m.x + m.y + n.x + n.y > max_degree {
                    continue;
                }
                let (prod, c) = super::plane::plane_mul(m, n, false).unwrap();
                let lhs = coaction_mono(side, ring, prod, false).scale(&c);
                let rhs = coaction_mono(side, ring, m, false).mul(&coaction_mono(side, ring, n, false));
                r.check_eq(format!("{side:?} psi({m}*{n})"), &lhs, &rhs);
            }
        }
        // psi(x)psi(y) = t psi(y)psi(x) packages the relations among a, b, c, d
        let px = coaction_mono(side, ring, PlaneMono::X, false);
        let py = coaction_mono(side, ring, PlaneMono::Y, false);
        r.check_eq(format!("{side:?} psi(x)psi(y) = t psi(y)psi(x)"), &px.mul(&py), &py.mul(&px).scale(&Scalar::t()));
    }
    r
}

/// The negative control: with `y^2 = 0` imposed on the plane, the left
/// coaction is no longer multiplicative, since `psi(y)psi(y)` is nonzero while
/// `psi(y^2) = 0`. The returned report is expected to fail.
pub fn verify_nilpotent_coaction() -> Report {
    let mut r = Report::new("coaction with y^2 = 0");
    let ring = Ring::Bsigma;
    for side in [Side::Left, Side::Right] {
        let py = coaction_mono(side, ring, PlaneMono::Y, true);
        let zero = TensorElement::zero(ring).with_nilpotent_plane(true);
        r.check_eq(format!("{side:?} psi(y*y) = psi(y)psi(y)"), &zero, &py.mul(&py));
    }
    r
}
