//! The `(m, n)` bigrading coming from the torus coactions, and the
//! rank-one generators `e_mn` of each graded piece.

use serde::Serialize;

use super::element::Element;
use super::monomial::{Monomial, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BiDegree {
    Homogeneous(i64, i64),
    Mixed,
}

/// `a -> (1,1)`, `b -> (1,-1)`, `c -> (-1,1)`, `d -> (-1,-1)`, `sigma -> (0,0)`.
/// The zero element is reported as `(0,0)`.
pub fn bigrade(x: &Element) -> BiDegree {
    let mut it = x.terms().map(|(m, _)| m.bigrade());
    let Some(first) = it.next() else {
        return BiDegree::Homogeneous(0, 0);
    };
    if it.all(|g| g == first) {
        BiDegree::Homogeneous(first.0, first.1)
    } else {
        BiDegree::Mixed
    }
}

/// The basis element `e_mn` of `A(sigma)[m, n]` over `A(sigma)[0, 0]`.
pub fn e_basis(m: i64, n: i64) -> Result<Element> {
    if (m - n).rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch(m, n));
    }
    let (p, d) = (m + n, m - n);
    let mono = if p >= 0 && d <= 0 {
        Monomial::new((p / 2) as u32, 0, (-d / 2) as u32, 0, 0)
    } else if p >= 0 {
        Monomial::new((p / 2) as u32, (d / 2) as u32, 0, 0, 0)
    } else if d >= 0 {
        Monomial::new(0, (d / 2) as u32, 0, (-p / 2) as u32, 0)
    } else {
        Monomial::new(0, 0, (-d / 2) as u32, (-p / 2) as u32, 0)
    };
    Ok(Element::monomial(Ring::Asigma, mono))
}

/// Projection onto `A(sigma)[0,0]` along the bigrading.
pub fn project_00(x: &Element) -> Element {
    let mut out = Element::zero(x.ring()).with_rules(x.rules());
    for (m, c) in x.terms() {
        if m.bigrade() == (0, 0) {
            out.add_term(*m, c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::Gen;

    #[test]
    fn e_basis_cases() {
        let g = |x| Element::g(Ring::Asigma, x);
        assert_eq!(e_basis(2, 0).unwrap(), g(Gen::A).mul(&g(Gen::B)));
        assert_eq!(e_basis(0, 0).unwrap(), Element::one(Ring::Asigma));
        assert_eq!(e_basis(-1, 1).unwrap(), g(Gen::C));
        assert!(matches!(e_basis(1, 0), Err(Error::ParityMismatch(1, 0))));
        for m in -4..=4i64 {
            for n in -4..=4i64 {
                if (m - n) % 2 == 0 {
                    assert_eq!(bigrade(&e_basis(m, n).unwrap()), BiDegree::Homogeneous(m, n));
                }
            }
        }
    }

    #[test]
    fn grading_examples() {
        let a = Element::g(Ring::Asigma, Gen::A);
        let b = Element::g(Ring::Asigma, Gen::B);
        assert_eq!(bigrade(&a), BiDegree::Homogeneous(1, 1));
        assert_eq!(bigrade(&Element::zeta()), BiDegree::Homogeneous(0, 0));
        assert_eq!(bigrade(&a.add(&b)), BiDegree::Mixed);
    }

    #[test]
    fn projection_examples() {
        let a = Element::g(Ring::Asigma, Gen::A);
        let d = Element::g(Ring::Asigma, Gen::D);
        assert!(project_00(&a).is_zero());
        let ad = a.mul(&d);
        assert_eq!(project_00(&ad), ad);
        let z3 = Element::zeta().pow(3);
        assert_eq!(project_00(&z3), z3);
    }
}
