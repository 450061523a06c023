//! Localisation of a finite ring at one element.
//!
//! In a finite ring the powers of `a` eventually cycle, and the cycle contains
//! exactly one idempotent `e`. Inverting `a` is then the same as inverting
//! `e`, and `A{e^-1} = A/(1-e)`.

use std::collections::HashMap;

use super::{quotient_ring, FiniteRing, Ideal, RingExpr, RingHom};
use crate::error::Result;

/// The unique idempotent among `a, a^2, a^3, ..`.
pub fn idempotent_power(ring: &FiniteRing, a: usize) -> usize {
    let mut x = a;
    loop {
        if ring.is_idempotent(x) {
            return x;
        }
        x = ring.mul(x, a);
    }
}

/// `A{a^-1}` realised as `A/(1-e)` for the idempotent power `e` of `a`,
/// with the unit map `η_a`.
pub fn localize_at_element(ring: &FiniteRing, a: usize) -> Result<(FiniteRing, RingHom)> {
    ring.check_element(a)?;
    let e = idempotent_power(ring, a);
    let ideal = Ideal::closure(ring, &[ring.sub(ring.one(), e)])?;
    Ok(quotient_ring(&ideal))
}

/// Classical fractions `r / s` with `s` a power of `a`, where
/// `r/s = r'/s'` iff `u (r s' - r' s) = 0` for some power `u`.
///
/// Independent of [`localize_at_element`]; the two are compared in tests.
pub fn localize_by_fractions(ring: &FiniteRing, a: usize) -> Result<(FiniteRing, RingHom)> {
    ring.check_element(a)?;
    let mut powers = vec![ring.one()];
    loop {
        let next = ring.mul(*powers.last().unwrap(), a);
        if powers.contains(&next) {
            break;
        }
        powers.push(next);
    }
    let pos: HashMap<usize, usize> = powers.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let n = ring.card();
    let k = powers.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..k).map(move |s| (r, s))).collect();
    let equivalent = |(r, s): (usize, usize), (r2, s2): (usize, usize)| {
        let diff = ring.sub(ring.mul(r, powers[s2]), ring.mul(r2, powers[s]));
        powers.iter().any(|&u| ring.mul(u, diff) == 0)
    };
    // classes in order of their first pair, (0, 1) first
    let mut class = vec![usize::MAX; pairs.len()];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for (i, &p) in pairs.iter().enumerate() {
        if class[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(p);
        for (j, &q) in pairs.iter().enumerate().skip(i) {
            if class[j] == usize::MAX && equivalent(p, q) {
                class[j] = c;
            }
        }
    }
    let class_of = |r: usize, s_val: usize| class[r * k + pos[&s_val]];
    let card = reps.len();
    let mut add = Vec::with_capacity(card * card);
    let mut mul = Vec::with_capacity(card * card);
    for &(r, s) in &reps {
        for &(r2, s2) in &reps {
            let den = ring.mul(powers[s], powers[s2]);
            let num = ring.add(ring.mul(r, powers[s2]), ring.mul(r2, powers[s]));
            add.push(class_of(num, den));
            mul.push(class_of(ring.mul(r, r2), den));
        }
    }
    let labels = reps
        .iter()
        .map(|&(r, s)| format!("{}/{}", ring.format_element(r), ring.format_element(powers[s])))
        .collect();
    let one = class_of(ring.one(), ring.one());
    let expr = RingExpr::Fractions { base: Box::new(ring.expr().clone()), element: a };
    let local = FiniteRing::from_tables(expr, add, mul, one, labels)?;
    let table = ring.elements().map(|r| class_of(r, ring.one())).collect();
    let unit = RingHom::new(ring.clone(), local.clone(), table)?;
    Ok((local, unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{enumerate_homs, find_isomorphism};

    #[test]
    fn idempotent_powers() {
        let z12 = FiniteRing::zmod(12).unwrap();
        assert_eq!(idempotent_power(&z12, 2), 4);
        assert_eq!(idempotent_power(&z12, 1), 1);
        assert_eq!(idempotent_power(&FiniteRing::zmod(4).unwrap(), 2), 0);
    }

    #[test]
    fn localization_examples() {
        let z12 = FiniteRing::zmod(12).unwrap();
        let (l, eta) = localize_at_element(&z12, 2).unwrap();
        assert_eq!(l.card(), 3);
        assert_eq!(eta.kernel().elements(), &[0, 3, 6, 9]);
        assert!(find_isomorphism(&l, &FiniteRing::zmod(3).unwrap()).unwrap().is_some());

        let (t, _) = localize_at_element(&FiniteRing::zmod(4).unwrap(), 2).unwrap();
        assert!(t.is_trivial());

        let z6 = FiniteRing::zmod(6).unwrap();
        let (same, eta1) = localize_at_element(&z6, 1).unwrap();
        assert_eq!(same.card(), 6);
        assert!(eta1.is_isomorphism());
    }

    #[test]
    fn fractions_agree_with_idempotent_route() {
        for n in [4usize, 6, 8, 12, 18, 20, 24] {
            let r = FiniteRing::zmod(n as u64).unwrap();
            for a in r.elements() {
                let (l1, e1) = localize_at_element(&r, a).unwrap();
                let (l2, e2) = localize_by_fractions(&r, a).unwrap();
                assert_eq!(l1.card(), l2.card(), "Z/{n} at {a}");
                assert_eq!(e1.kernel(), e2.kernel(), "Z/{n} at {a}");
            }
        }
    }

    #[test]
    fn universal_property_of_localization() {
        let z12 = FiniteRing::zmod(12).unwrap();
        let targets = [FiniteRing::zmod(3).unwrap(), FiniteRing::zmod(4).unwrap(), FiniteRing::zmod(6).unwrap()];
        for a in z12.elements() {
            let (l, eta) = localize_at_element(&z12, a).unwrap();
            for b in &targets {
                for f in enumerate_homs(&z12, b).unwrap() {
                    let count = enumerate_homs(&l, b)
                        .unwrap()
                        .into_iter()
                        .filter(|g| g.compose(&eta).unwrap() == f)
                        .count();
                    let expected = usize::from(b.is_unit(f.apply(a)));
                    assert_eq!(count, expected, "a = {a}, target {b}");
                }
            }
        }
    }
}
