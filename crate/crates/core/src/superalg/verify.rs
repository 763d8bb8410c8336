use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::element::{normal_form, Element};
use super::monomial::{Monomial, Ring};
use crate::report::Report;

/// Associativity of `multiply` on `samples` random triples of basis monomials
/// of degree at most `max_degree` in each ring, plus idempotence of
/// `normal_form`: rewriting the words of a normal form reproduces it.
pub fn verify_associativity(samples: usize, max_degree: u32, seed: u64) -> Report {
    let mut r = Report::new("associativity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for ring in [Ring::B, Ring::Bsigma, Ring::Asigma] {
        let basis = Monomial::basis(ring, max_degree);
        let pick = |rng: &mut ChaCha8Rng| Element::monomial(ring, basis[rng.gen_range(0..basis.len())]);
        for _ in 0..samples {
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let input = format!("{} ({x}, {y}, {z})", ring.name());
            r.check_eq(input, &x.mul(&y).mul(&z), &x.mul(&y.mul(&z)));
            let p = x.mul(&y).mul(&z);
            let mut again = Element::zero(ring);
            for (m, c) in p.terms() {
                again = again.add(&normal_form(&m.word(), ring).expect("generators of the ring").scale(c));
            }
            r.check_eq(format!("{} nf(nf({x}*{y}*{z}))", ring.name()), &again, &p);
        }
    }
    r
}
