use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The three graded algebras sharing the generators `a, b, c, d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    /// Generators `a, b, c, d` only.
    B,
    /// `B` with the group-like `sigma` adjoined.
    Bsigma,
    /// The quotient of `Bsigma` by `ad + t bc = sigma`.
    Asigma,
}

impl Ring {
    pub fn has_sigma(self) -> bool {
        !matches!(self, Ring::B)
    }

    pub fn name(self) -> &'static str {
        match self {
            Ring::B => "B",
            Ring::Bsigma => "Bsigma",
            Ring::Asigma => "Asigma",
        }
    }

    pub fn from_name(s: &str) -> Option<Ring> {
        match s {
            "B" => Some(Ring::B),
            "Bsigma" => Some(Ring::Bsigma),
            "Asigma" => Some(Ring::Asigma),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    A,
    B,
    C,
    D,
    Sigma,
}

impl Gen {
    pub fn parity(self) -> u8 {
        match self {
            Gen::B | Gen::C => 1,
            _ => 0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
            Gen::Sigma => 's',
        }
    }
}

/// `a^a b^b c^c d^d sigma^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub s: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0, d: 0, s: 0 };

    pub fn new(a: u32, b: u32, c: u32, d: u32, s: u8) -> Self {
        Monomial { a, b, c, d, s: s & 1 }
    }

    pub fn gen(g: Gen) -> Self {
        let mut m = Monomial::ONE;
        match g {
            Gen::A => m.a = 1,
            Gen::B => m.b = 1,
            Gen::C => m.c = 1,
            Gen::D => m.d = 1,
            Gen::Sigma => m.s = 1,
        }
        m
    }

    pub fn powers(&self) -> [u32; 5] {
        [self.a, self.b, self.c, self.d, self.s as u32]
    }

    /// Total degree in `a, b, c, d` (sigma has degree zero).
    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    pub fn parity(&self) -> u8 {
        ((self.b + self.c) % 2) as u8
    }

    pub fn bigrade(&self) -> (i64, i64) {
        let (a, b, c, d) = (self.a as i64, self.b as i64, self.c as i64, self.d as i64);
        (a + b - c - d, a - b + c - d)
    }

    /// Whether the monomial belongs to the normal-form basis of `ring`.
    pub fn is_normal_in(&self, ring: Ring) -> bool {
        match ring {
            Ring::B => self.s == 0,
            Ring::Bsigma => true,
            Ring::Asigma => self.a == 0 || self.d == 0,
        }
    }

    /// The generator word `a..a b..b c..c d..d sigma^s`.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize + 1);
        w.extend(std::iter::repeat_n(Gen::A, self.a as usize));
        w.extend(std::iter::repeat_n(Gen::B, self.b as usize));
        w.extend(std::iter::repeat_n(Gen::C, self.c as usize));
        w.extend(std::iter::repeat_n(Gen::D, self.d as usize));
        if self.s == 1 {
            w.push(Gen::Sigma);
        }
        w
    }

    /// All basis monomials of `ring` with total degree at most `max_degree`.
    pub fn basis(ring: Ring, max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let svals: &[u8] = if ring.has_sigma() { &[0, 1] } else { &[0] };
        for deg in 0..=max_degree {
            for a in 0..=deg {
                for b in 0..=deg - a {
                    for c in 0..=deg - a - b {
                        let d = deg - a - b - c;
                        for &s in svals {
                            let m = Monomial::new(a, b, c, d, s);
                            if m.is_normal_in(ring) {
                                out.push(m);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl Ord for Monomial {
    /// Degree-lexicographic with `a < b < c < d < sigma`.
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| o.a.cmp(&self.a))
            .then_with(|| o.b.cmp(&self.b))
            .then_with(|| o.c.cmp(&self.c))
            .then_with(|| o.d.cmp(&self.d))
            .then_with(|| self.s.cmp(&o.s))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, e) in [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d), ("s", self.s as u32)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                e => parts.push(format!("{sym}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        // (n+1)^2 monomials of degree n with a = 0 or d = 0, doubled by sigma
        let n4 = Monomial::basis(Ring::Asigma, 4).len();
        assert_eq!(n4, 2 * (1 + 4 + 9 + 16 + 25));
        assert_eq!(Monomial::basis(Ring::B, 2).len(), 1 + 4 + 10);
    }

    #[test]
    fn bigrades_of_generators() {
        assert_eq!(Monomial::gen(Gen::A).bigrade(), (1, 1));
        assert_eq!(Monomial::gen(Gen::B).bigrade(), (1, -1));
        assert_eq!(Monomial::gen(Gen::C).bigrade(), (-1, 1));
        assert_eq!(Monomial::gen(Gen::D).bigrade(), (-1, -1));
        assert_eq!(Monomial::gen(Gen::Sigma).bigrade(), (0, 0));
    }
}
