//! Hopf and star structure of `A(sigma)` and its coactions on the quantum
//! super plane.
//!
//! ```text
//! Delta(a) = a(x)a + b(x)c   Delta(b) = a(x)b + b(x)d   Delta(sigma) = sigma(x)sigma
//! Delta(c) = c(x)a + d(x)c   Delta(d) = c(x)b + d(x)d
//! S(a) = d sigma   S(b) = -t^-1 b sigma   S(c) = t c sigma   S(d) = a sigma
//! a* = d sigma     b* = t c sigma         c* = -t^-1 b sigma d* = a sigma
//! ```

mod plane;
mod structure;
mod tensor;
mod verify;

pub use plane::{coaction, coaction_mono, PlaneElement, PlaneMono, Side};
pub use structure::{antipode, antipode_mono, coproduct, coproduct_mono, counit, counit_mono, star, star_tensor};
pub use tensor::{Factor, TensorElement};
pub use verify::{verify_coactions, verify_hopf, verify_hopf_with, verify_nilpotent_coaction};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;
    use crate::superalg::{Element, Gen, Monomial, Ring, Rules};

    fn g(x: Gen) -> Element {
        Element::g(Ring::Asigma, x)
    }

    fn mono(a: u32, b: u32, c: u32, d: u32, s: u8) -> Factor {
        Factor::Alg(Monomial::new(a, b, c, d, s))
    }

    #[test]
    fn coproduct_of_a_squared() {
        let d = coproduct(&g(Gen::A).pow(2));
        let mut expect = TensorElement::zero(Ring::Asigma);
        expect.add_term(vec![mono(2, 0, 0, 0, 0), mono(2, 0, 0, 0, 0)], Scalar::one());
        expect.add_term(vec![mono(1, 1, 0, 0, 0), mono(1, 0, 1, 0, 0)], Scalar::laurent(&[(0, 1), (-2, 1)]));
        expect.add_term(vec![mono(0, 2, 0, 0, 0), mono(0, 0, 2, 0, 0)], Scalar::int(-1));
        assert_eq!(d, expect);
        assert_eq!(coproduct(&Element::one(Ring::Asigma)), TensorElement::one(Ring::Asigma, 2));
    }

    #[test]
    fn counit_values() {
        assert!(counit(&g(Gen::A)).is_one());
        assert!(counit(&g(Gen::B).mul(&g(Gen::C))).is_zero());
        assert!(counit(&g(Gen::Sigma)).is_one());
    }

    #[test]
    fn antipode_and_star_on_generators() {
        let ds = g(Gen::D).mul(&g(Gen::Sigma));
        assert_eq!(antipode(&g(Gen::A)).unwrap(), ds);
        assert_eq!(star(&g(Gen::A)).unwrap(), ds);
        let bs = g(Gen::B).mul(&g(Gen::Sigma)).scale(&Scalar::t_pow(-1).neg());
        assert_eq!(antipode(&g(Gen::B)).unwrap(), bs);
        assert_eq!(star(&star(&g(Gen::B)).unwrap()).unwrap(), g(Gen::B));
        assert!(antipode(&Element::g(Ring::B, Gen::A)).is_err());
        assert!(star(&Element::g(Ring::Bsigma, Gen::A)).is_err());
        // a a* = 1 - t bc sigma
        let aas = g(Gen::A).mul(&star(&g(Gen::A)).unwrap());
        let expect = Element::one(Ring::Asigma).sub(&Element::zeta());
        assert_eq!(aas, expect);
    }

    #[test]
    fn antipode_convolution_on_a() {
        let t = coproduct(&g(Gen::A)).map_alg_leg(0, |m| antipode_mono(m, Rules::default()));
        assert!(t.multiply_out().sub(&Element::one(Ring::Asigma)).is_zero());
    }

    #[test]
    fn hopf_axioms_low_degree() {
        let r = verify_hopf(2);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn broken_sigma_is_detected() {
        let r = verify_hopf_with(1, Rules { broken_sigma: true });
        assert!(!r.passed());
    }

    #[test]
    fn coaction_examples() {
        let psi = coaction_mono(Side::Left, Ring::Bsigma, PlaneMono::X, false);
        let mut expect = TensorElement::zero(Ring::Bsigma);
        expect.add_term(vec![mono(1, 0, 0, 0, 0), Factor::Plane(PlaneMono::X)], Scalar::one());
        expect.add_term(vec![mono(0, 1, 0, 0, 0), Factor::Plane(PlaneMono::Y)], Scalar::one());
        assert_eq!(psi, expect);
        let r = verify_coactions(3);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn nilpotent_plane_is_not_a_comodule() {
        let py = coaction_mono(Side::Left, Ring::Bsigma, PlaneMono::Y, true);
        assert!(!py.mul(&py).is_zero());
        let mut y = PlaneElement::monomial(PlaneMono::Y);
        y.nilpotent = true;
        assert!(y.mul(&y).is_zero());
        let r = verify_nilpotent_coaction();
        assert_eq!(r.failed, 2, "{r}");
    }
}
