//! The Boolean algebra of idempotents and its comparison with clopen sets of
//! the spectrum.

use crate::error::{Error, Result};
use crate::lattice::{BooleanHom, FiniteBooleanAlgebra};
use crate::ring::{FiniteRing, Ideal, RingHom};
use crate::spectrum::{spectral_map, spectrum, PointSet, PrimeSpectrum};

/// All `e` with `e^2 = e`, by canonical index.
pub fn idempotents(ring: &FiniteRing) -> Vec<usize> {
    ring.idempotents().to_vec()
}

/// `B(A)`: carrier position `i` is the idempotent `carrier[i]`.
#[derive(Clone, Debug)]
pub struct IdempotentBooleanAlgebra {
    pub ring: FiniteRing,
    pub carrier: Vec<usize>,
    pub algebra: FiniteBooleanAlgebra,
}

impl IdempotentBooleanAlgebra {
    /// Position of an idempotent in the carrier.
    pub fn position(&self, e: usize) -> Option<usize> {
        self.carrier.binary_search(&e).ok()
    }

    pub fn element(&self, i: usize) -> usize {
        self.carrier[i]
    }

    /// `e <= e'` iff `e e' = e`.
    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.ring.mul(e, f) == e
    }
}

/// Builds `B(A)` from `ee'`, `e + e' - ee'` and `1 - e`, then runs the full
/// axiom scan.
pub fn boolean_algebra_of(ring: &FiniteRing) -> Result<IdempotentBooleanAlgebra> {
    let carrier = idempotents(ring);
    let pos = |x: usize| {
        carrier
            .binary_search(&x)
            .map_err(|_| Error::AxiomViolation(format!("idempotents not closed: {}", ring.format_element(x))))
    };
    let n = carrier.len();
    let mut meet = Vec::with_capacity(n * n);
    let mut join = Vec::with_capacity(n * n);
    for &e in &carrier {
        for &f in &carrier {
            let ef = ring.mul(e, f);
            meet.push(pos(ef)?);
            join.push(pos(ring.sub(ring.add(e, f), ef))?);
        }
    }
    let complement = carrier.iter().map(|&e| pos(ring.sub(ring.one(), e))).collect::<Result<Vec<_>>>()?;
    let labels = carrier.iter().map(|&e| ring.format_element(e)).collect();
    let algebra =
        FiniteBooleanAlgebra::from_tables(meet, join, complement, pos(0)?, pos(ring.one())?, labels)
            .map_err(|e| Error::AxiomViolation(format!("B({ring}): {e}")))?;
    Ok(IdempotentBooleanAlgebra { ring: ring.clone(), carrier, algebra })
}

/// `B(f)`: the restriction of `f` to idempotents.
pub fn bool_functor_on_hom(f: &RingHom) -> Result<BooleanHom> {
    let src = boolean_algebra_of(f.domain())?;
    let dst = boolean_algebra_of(f.codomain())?;
    bool_functor_between(f, &src, &dst)
}

pub(crate) fn bool_functor_between(
    f: &RingHom,
    src: &IdempotentBooleanAlgebra,
    dst: &IdempotentBooleanAlgebra,
) -> Result<BooleanHom> {
    let table = src
        .carrier
        .iter()
        .map(|&e| dst.position(f.apply(e)).ok_or_else(|| Error::NotAHomomorphism("idempotent not preserved".into())))
        .collect::<Result<Vec<_>>>()?;
    BooleanHom::new(src.algebra.clone(), dst.algebra.clone(), table)
}

/// The powerset of the points of `spec`, labelled by prime generators.
pub fn clopen_algebra_of_spectrum(spec: &PrimeSpectrum) -> FiniteBooleanAlgebra {
    let names: Vec<String> = spec.primes().iter().map(|p| prime_label(p)).collect();
    FiniteBooleanAlgebra::powerset_named(&names)
}

/// `(g1,..)` from greedy generators, or `(0)`.
pub fn prime_label(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let gens = ideal.small_generators();
    let parts: Vec<String> = gens.iter().map(|&g| ring.format_element(g)).collect();
    format!("({})", if parts.is_empty() { "0".to_string() } else { parts.join(",") })
}

/// `j_A : B(A) -> Clopen(Spec A), e |-> D(e)`.
#[derive(Clone, Debug)]
pub struct JMap {
    pub boolean: IdempotentBooleanAlgebra,
    pub spectrum: PrimeSpectrum,
    pub hom: BooleanHom,
}

impl JMap {
    pub fn is_isomorphism(&self) -> bool {
        self.hom.is_isomorphism()
    }
}

pub fn j_map(ring: &FiniteRing) -> Result<JMap> {
    let boolean = boolean_algebra_of(ring)?;
    let spec = spectrum(ring);
    let clopens = clopen_algebra_of_spectrum(&spec);
    let table = boolean.carrier.iter().map(|&e| spec.basic_open(e).bits() as usize).collect();
    let hom = BooleanHom::new(boolean.algebra.clone(), clopens, table)?;
    Ok(JMap { boolean, spectrum: spec, hom })
}

/// `Clopen(Spec f)`: preimage along `Spec f`, from subsets of `Spec A` to
/// subsets of `Spec B`.
pub fn clopen_pullback(f: &RingHom) -> Result<BooleanHom> {
    let m = spectral_map(f);
    let from = clopen_algebra_of_spectrum(&m.target);
    let to = clopen_algebra_of_spectrum(&m.source);
    let table = from.elements().map(|s| m.preimage(PointSet::from_bits(s as u64)).bits() as usize).collect();
    BooleanHom::new(from, to, table)
}

/// `Clopen(Spec f) ∘ j_A = j_B ∘ B(f)`, compared as tables.
pub fn naturality_check(f: &RingHom) -> Result<bool> {
    let ja = j_map(f.domain())?;
    let jb = j_map(f.codomain())?;
    let bf = bool_functor_between(f, &ja.boolean, &jb.boolean)?;
    let pull = clopen_pullback(f)?;
    let left = pull.compose(&ja.hom)?;
    let right = jb.hom.compose(&bf)?;
    Ok(left.table() == right.table())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{enumerate_homs, pairing};

    fn z(n: u64) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    #[test]
    fn idempotent_examples() {
        let scan = |n: u64| -> Vec<usize> {
            let r = z(n);
            r.elements().filter(|&e| r.mul(e, e) == e).collect()
        };
        assert_eq!(idempotents(&z(6)), scan(6));
        assert_eq!(idempotents(&z(6)), vec![0, 1, 3, 4]);
        assert_eq!(idempotents(&z(12)), vec![0, 1, 4, 9]);
        assert_eq!(idempotents(&FiniteRing::galois_field(9).unwrap()), vec![0, 1]);
    }

    #[test]
    fn algebra_examples() {
        let b6 = boolean_algebra_of(&z(6)).unwrap();
        assert_eq!(b6.algebra.card(), 4);
        assert_eq!(b6.algebra.atoms().len(), 2);
        // CRT: Z/30 has 2^3 idempotents
        let b30 = boolean_algebra_of(&z(30)).unwrap();
        assert_eq!(b30.algebra.card(), 8);
        assert_eq!(b30.algebra.atoms().len(), 3);
        let bt = boolean_algebra_of(&FiniteRing::trivial()).unwrap();
        assert!(bt.algebra.is_degenerate());
    }

    #[test]
    fn distributive_laws_agree() {
        for n in 1..=40u64 {
            let b = boolean_algebra_of(&z(n)).unwrap();
            let r = b.algebra.axioms();
            assert_eq!(r.meet_distributes_over_join, r.join_distributes_over_meet);
            assert!(r.all());
        }
    }

    #[test]
    fn functor_examples() {
        let z12 = z(12);
        let red = RingHom::new(z12.clone(), z(2), (0..12).map(|a| a % 2).collect()).unwrap();
        let h = bool_functor_on_hom(&red).unwrap();
        let src = boolean_algebra_of(&z12).unwrap();
        let images: Vec<usize> = src.carrier.iter().map(|&e| red.apply(e)).collect();
        assert_eq!(images, vec![0, 1, 0, 1]);
        assert_eq!(h.table().len(), 4);

        let id = bool_functor_on_hom(&RingHom::identity(&z12)).unwrap();
        assert_eq!(id, BooleanHom::identity(&src.algebra));

        let z6 = z(6);
        let sq = FiniteRing::product(&[z6.clone(), z6.clone()], crate::ring::EmptyProduct::Reject).unwrap();
        let diag = pairing(&[RingHom::identity(&z6), RingHom::identity(&z6)], &sq).unwrap();
        let bd = bool_functor_on_hom(&diag).unwrap();
        assert!(bd.is_injective());
        assert_eq!(bd.codomain().card(), 16);
    }

    #[test]
    fn functor_composition() {
        let z12 = z(12);
        for g in enumerate_homs(&z12, &z(6)).unwrap() {
            for f in enumerate_homs(&z(6), &z(3)).unwrap() {
                let gf = f.compose(&g).unwrap();
                let lhs = bool_functor_on_hom(&gf).unwrap();
                let rhs = bool_functor_on_hom(&f).unwrap().compose(&bool_functor_on_hom(&g).unwrap()).unwrap();
                assert_eq!(lhs.table(), rhs.table());
            }
        }
    }

    #[test]
    fn j_examples() {
        let j = j_map(&z(6)).unwrap();
        assert!(j.is_isomorphism());
        let spec = &j.spectrum;
        let two = spec.index_of(&Ideal::closure(&z(6), &[2]).unwrap()).unwrap();
        let pos3 = j.boolean.position(3).unwrap();
        assert_eq!(j.hom.apply(pos3), 1 << two);
        assert_eq!(j.hom.apply(j.boolean.position(1).unwrap()), 3);
        assert_eq!(j.hom.apply(j.boolean.position(0).unwrap()), 0);

        // Z/4 is not regular, yet both sides have two elements
        let j4 = j_map(&z(4)).unwrap();
        assert_eq!(j4.boolean.algebra.card(), 2);
        assert!(j4.is_isomorphism());
    }

    #[test]
    fn j_isomorphism_on_regular_rings() {
        for n in [1u64, 2, 6, 10, 15, 30, 42, 210] {
            assert!(j_map(&z(n)).unwrap().is_isomorphism(), "Z/{n}");
        }
    }

    #[test]
    fn naturality_examples() {
        let red = RingHom::new(z(6), z(2), (0..6).map(|a| a % 2).collect()).unwrap();
        assert!(naturality_check(&red).unwrap());
        assert!(naturality_check(&RingHom::identity(&z(30))).unwrap());
    }

    #[test]
    fn idempotent_generators_are_unique() {
        for n in [6u64, 12, 30, 36] {
            let r = z(n);
            let idem = r.idempotents();
            for &e in idem {
                for &f in idem {
                    if Ideal::closure(&r, &[e]).unwrap() == Ideal::closure(&r, &[f]).unwrap() {
                        assert_eq!(e, f);
                    }
                }
            }
        }
    }
}
