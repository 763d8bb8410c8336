//! The rewriting engine behind multiplication.
//!
//! Products of normal monomials are computed by right-multiplying with one
//! generator at a time. Each step applies the commutation rules
//!
//! ```text
//! ba -> t^-1 ab   ca -> t^-1 ac   cb -> -bc
//! db -> -t^-1 bd  dc -> -t^-1 cd  da -> ad - (t^-1 - t) bc
//! sigma x -> (-1)^p(x) x sigma    sigma^2 -> 1
//! ```
//!
//! in closed form, followed in `Asigma` by the elimination of coexisting
//! `a` and `d` through `a b^j c^k d = t^(j+k) b^j c^k (sigma - t bc)`.
//! Every elimination step lowers `min(#a, #d)`, so the process terminates.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::monomial::{Gen, Monomial, Ring};
use crate::scalars::RatFunc;

/// Variations of the rewrite system, used for negative controls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rules {
    /// Replace `sigma b = -b sigma` (and for `c`) by the commuting rule.
    pub broken_sigma: bool,
}

pub(crate) type Terms = Vec<(Monomial, RatFunc)>;

type ProductKey = (Ring, Rules, Monomial, Monomial);

fn product_cache() -> &'static RwLock<HashMap<ProductKey, Terms>> {
    static CACHE: OnceLock<RwLock<HashMap<ProductKey, Terms>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn neg_t_inv_pow(l: u32) -> RatFunc {
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    RatFunc::monomial(crate::scalars::Gauss::from_int(sign), -(l as i64))
}

/// `(t^-1 - t) * sum_{m<l} t^-2m`.
fn da_gamma(l: u32) -> RatFunc {
    let mut terms = Vec::new();
    for m in 0..l as i64 {
        terms.push((-1 - 2 * m, 1));
        terms.push((1 - 2 * m, -1));
    }
    RatFunc::laurent(&terms)
}

fn push(out: &mut Terms, m: Monomial, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    if let Some(slot) = out.iter_mut().find(|(k, _)| *k == m) {
        slot.1 = slot.1.add(&c);
    } else {
        out.push((m, c));
    }
}

fn collect(terms: Terms) -> Terms {
    let mut out: Terms = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        push(&mut out, m, c);
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Bring a monomial in which `a` and `d` may coexist to `Asigma` normal form.
pub(crate) fn reduce_asigma(m: Monomial) -> Terms {
    if m.a == 0 || m.d == 0 {
        return vec![(m, RatFunc::one())];
    }
    let jk = (m.b + m.c) as i64;
    let first = Monomial::new(m.a - 1, m.b, m.c, m.d - 1, m.s ^ 1);
    let second = Monomial::new(m.a - 1, m.b + 1, m.c + 1, m.d - 1, m.s);
    let sign = if m.c.is_multiple_of(2) { -1 } else { 1 };
    let mut out = Terms::new();
    for (mm, c) in reduce_asigma(first) {
        push(&mut out, mm, c.mul(&RatFunc::t_pow(jk)));
    }
    for (mm, c) in reduce_asigma(second) {
        push(&mut out, mm, c.mul(&RatFunc::monomial(crate::scalars::Gauss::from_int(sign), jk + 1)));
    }
    collect(out)
}

/// `m * g` for a normal monomial `m`, in normal form.
pub(crate) fn mul_gen(m: Monomial, g: Gen, ring: Ring, rules: Rules) -> Terms {
    let sgn: i64 = if m.s == 1 && g.parity() == 1 && !rules.broken_sigma { -1 } else { 1 };
    let sc = |r: RatFunc| if sgn == 1 { r } else { r.neg() };
    let raw: Terms = match g {
        Gen::Sigma => vec![(Monomial { s: m.s ^ 1, ..m }, RatFunc::one())],
        Gen::D => vec![(Monomial { d: m.d + 1, ..m }, sc(RatFunc::one()))],
        Gen::C => vec![(Monomial { c: m.c + 1, ..m }, sc(neg_t_inv_pow(m.d)))],
        Gen::B => {
            let mut c = neg_t_inv_pow(m.d);
            if m.c % 2 == 1 {
                c = c.neg();
            }
            vec![(Monomial { b: m.b + 1, ..m }, sc(c))]
        }
        Gen::A => {
            let mut v = vec![(Monomial { a: m.a + 1, ..m }, sc(RatFunc::t_pow(-((m.b + m.c) as i64))))];
            if m.d > 0 {
                let mut c = da_gamma(m.d);
                if m.c.is_multiple_of(2) {
                    c = c.neg();
                }
                v.push((Monomial::new(m.a, m.b + 1, m.c + 1, m.d - 1, m.s), sc(c)));
            }
            v
        }
    };
    if ring != Ring::Asigma {
        return raw;
    }
    let mut out = Terms::new();
    for (mm, c) in raw {
        for (r, rc) in reduce_asigma(mm) {
            push(&mut out, r, rc.mul(&c));
        }
    }
    collect(out)
}

/// Normal form of `m1 * m2`.
pub(crate) fn mul_monomials(m1: Monomial, m2: Monomial, ring: Ring, rules: Rules) -> Terms {
    if m2 == Monomial::ONE {
        return vec![(m1, RatFunc::one())];
    }
    if m1 == Monomial::ONE {
        return vec![(m2, RatFunc::one())];
    }
    let key = (ring, rules, m1, m2);
    if let Some(v) = product_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let mut cur: Terms = vec![(m1, RatFunc::one())];
    for g in m2.word() {
        let mut next = Terms::new();
        for (m, c) in &cur {
            for (r, rc) in mul_gen(*m, g, ring, rules) {
                push(&mut next, r, rc.mul(c));
            }
        }
        cur = collect(next);
    }
    crate::cache::insert(&mut product_cache().write().unwrap(), key, cur.clone());
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn da_gamma_at_one() {
        assert_eq!(da_gamma(1), RatFunc::laurent(&[(-1, 1), (1, -1)]));
    }

    #[test]
    fn ad_reduces_in_asigma() {
        let r = reduce_asigma(Monomial::new(1, 0, 0, 1, 0));
        assert_eq!(r.len(), 2);
        assert!(r.contains(&(Monomial::new(0, 0, 0, 0, 1), RatFunc::one())));
        assert!(r.contains(&(Monomial::new(0, 1, 1, 0, 0), RatFunc::laurent(&[(1, -1)]))));
    }
}
