//! The von Neumann regular hull `η_A : A -> vN(A) = ∏_p k_p(A)`.

use crate::error::{Error, Result};
use crate::ring::{
    localize_at_element, pairing_from, product_ring, quotient_ring, EmptyProduct, FiniteRing, Ideal, RingHom,
};
use crate::spectrum::{induced_residue_hom, preimage_ideal, residue_field, spectral_map, spectrum, PrimeSpectrum, ResidueField};
use crate::vn_regular::{decompose_into_fields, is_vn_regular};

#[derive(Clone, Debug)]
pub struct VnHull {
    pub source: FiniteRing,
    pub spectrum: PrimeSpectrum,
    /// Factor `i` of the hull is the residue field at prime `i`.
    pub residue_fields: Vec<ResidueField>,
    pub hull: FiniteRing,
    pub projections: Vec<RingHom>,
    pub eta: RingHom,
}

/// Outcome of the structural checks on a hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullInvariants {
    pub hull_is_regular: bool,
    pub kernel_is_nilradical: bool,
    pub spectral_bijection: bool,
    pub gamma_inverse: bool,
    pub residue_isomorphisms: bool,
}

impl HullInvariants {
    pub fn all(&self) -> bool {
        self.hull_is_regular
            && self.kernel_is_nilradical
            && self.spectral_bijection
            && self.gamma_inverse
            && self.residue_isomorphisms
    }
}

pub fn vn_hull(ring: &FiniteRing) -> Result<VnHull> {
    let spec = spectrum(ring);
    let residue_fields = spec.primes().iter().map(|p| residue_field(ring, p)).collect::<Result<Vec<_>>>()?;
    let fields: Vec<FiniteRing> = residue_fields.iter().map(|k| k.field.clone()).collect();
    let (hull, projections) = product_ring(&fields, EmptyProduct::Trivial)?;
    let alphas: Vec<RingHom> = residue_fields.iter().map(|k| k.alpha.clone()).collect();
    let eta = pairing_from(ring, &alphas, &hull)?;
    Ok(VnHull { source: ring.clone(), spectrum: spec, residue_fields, hull, projections, eta })
}

impl VnHull {
    /// `γ_A : Spec A -> Spec vN(A)`, prime `i` goes to the kernel of the `i`-th projection.
    pub fn gamma(&self) -> Vec<Ideal> {
        self.projections.iter().map(RingHom::kernel).collect()
    }

    pub fn invariants(&self) -> Result<HullInvariants> {
        let hull_is_regular = is_vn_regular(&self.hull).is_regular();
        let kernel_is_nilradical = self.eta.kernel() == self.source.nilradical();
        let m = spectral_map(&self.eta);
        let spectral_bijection = m.is_bijective();
        let gamma: Vec<usize> = self
            .gamma()
            .iter()
            .map(|q| m.source.index_of(q).ok_or_else(|| Error::AxiomViolation("γ lands outside the spectrum".into())))
            .collect::<Result<_>>()?;
        let gamma_inverse = gamma.iter().enumerate().all(|(i, &g)| m.map[g] == i)
            && m.map.iter().enumerate().all(|(j, &p)| gamma[p] == j);
        let mut residue_isomorphisms = true;
        for q in m.source.primes() {
            residue_isomorphisms &= induced_residue_hom(&self.eta, q)?.is_isomorphism();
        }
        Ok(HullInvariants {
            hull_is_regular,
            kernel_is_nilradical,
            spectral_bijection,
            gamma_inverse,
            residue_isomorphisms,
        })
    }

    /// The unique `g : vN(A) -> V` with `g ∘ η = f`, built one field of `V`
    /// at a time.
    pub fn factorize(&self, f: &RingHom) -> Result<RingHom> {
        if f.domain() != &self.source {
            return Err(Error::Mismatch("map does not start at the hull's source".into()));
        }
        let target = f.codomain();
        let decomposition = decompose_into_fields(target)?;
        let mut components = Vec::with_capacity(decomposition.residue_fields.len());
        for k in &decomposition.residue_fields {
            let to_field = k.alpha.compose(f)?;
            let p = preimage_ideal(f, &k.prime);
            let i = self
                .spectrum
                .index_of(&p)
                .ok_or_else(|| Error::NoFactorization("pulled-back kernel is not a prime".into()))?;
            // k_p(A) -> k_q(V), then precompose the hull projection
            let residue = RingHom::factor_through(&self.residue_fields[i].alpha, &to_field)?;
            components.push(residue.compose(&self.projections[i])?);
        }
        let into_fields = pairing_from(&self.hull, &components, &decomposition.product)?;
        let g = decomposition.inverse().compose(&into_fields)?;
        if &g.compose(&self.eta)? != f {
            return Err(Error::NoFactorization("componentwise map does not restrict to f".into()));
        }
        Ok(g)
    }

    /// `Z/p` or `GF(q)` per factor, joined by ` x `; the trivial ring is `0`.
    pub fn describe(&self) -> String {
        describe_fields(self.residue_fields.iter().map(|k| k.field.card()))
    }

    /// Factor position of each prime of the source (the identity, by construction).
    pub fn prime_index(&self) -> Vec<usize> {
        (0..self.spectrum.len()).collect()
    }
}

pub(crate) fn describe_fields(cards: impl Iterator<Item = usize>) -> String {
    let parts: Vec<String> = cards
        .map(|q| if crate::ring::is_prime_number(q as u64) { format!("Z/{q}") } else { format!("GF({q})") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" x ")
    }
}

pub fn hull_factorize(hull: &VnHull, f: &RingHom) -> Result<RingHom> {
    hull.factorize(f)
}

/// `η` of the hull of the hull is an isomorphism.
pub fn hull_idempotent_check(ring: &FiniteRing) -> Result<bool> {
    let h = vn_hull(ring)?;
    Ok(vn_hull(&h.hull)?.eta.is_isomorphism())
}

/// A construction whose hull is compared with the hull of its inputs.
#[derive(Clone, Debug)]
pub enum PreservationInstance {
    Product(FiniteRing, FiniteRing),
    Quotient(FiniteRing, Vec<usize>),
    Localization(FiniteRing, usize),
}

#[derive(Clone, Debug)]
pub struct PreservationOutcome {
    pub description: String,
    pub comparison: RingHom,
    pub isomorphism: bool,
    /// For quotients: whether the kernel of `vN(A) -> vN(A/I)` is `Ī`.
    pub kernel_formula: Option<bool>,
}

impl PreservationOutcome {
    pub fn passed(&self) -> bool {
        self.isomorphism && self.kernel_formula != Some(false)
    }
}

/// `vN(A1 x A2) -> vN(A1) x vN(A2)`, factoring `η1 x η2` through `η`.
pub fn product_preservation(a1: &FiniteRing, a2: &FiniteRing) -> Result<PreservationOutcome> {
    let (prod, proj) = product_ring(&[a1.clone(), a2.clone()], EmptyProduct::Reject)?;
    let h1 = vn_hull(a1)?;
    let h2 = vn_hull(a2)?;
    let target = FiniteRing::product(&[h1.hull.clone(), h2.hull.clone()], EmptyProduct::Reject)?;
    let eta_pair = pairing_from(&prod, &[h1.eta.compose(&proj[0])?, h2.eta.compose(&proj[1])?], &target)?;
    let h = vn_hull(&prod)?;
    let comparison = h.factorize(&eta_pair)?;
    Ok(PreservationOutcome {
        description: format!("vN({prod}) vs vN({a1}) x vN({a2})"),
        isomorphism: comparison.is_isomorphism(),
        comparison,
        kernel_formula: None,
    })
}

/// `Ī = {v : v_p = 0 for every prime p ⊇ I}`.
pub fn hull_ideal_of(hull: &VnHull, ideal: &Ideal) -> Result<Ideal> {
    let over = hull.spectrum.containing(ideal);
    let members: Vec<usize> = hull
        .hull
        .elements()
        .filter(|&v| over.iter().all(|i| hull.hull.product_component(v, i) == Some(0)))
        .collect();
    Ideal::from_elements(&hull.hull, &members)
}

/// `vN(A)/Ī -> vN(A/I)`, induced by factoring `η_{A/I} ∘ q` through `η_A`.
pub fn quotient_preservation(ring: &FiniteRing, generators: &[usize]) -> Result<PreservationOutcome> {
    let ideal = Ideal::closure(ring, generators)?;
    let (quot, q) = quotient_ring(&ideal);
    let ha = vn_hull(ring)?;
    let hq = vn_hull(&quot)?;
    let g = ha.factorize(&hq.eta.compose(&q)?)?;
    let bar = hull_ideal_of(&ha, &ideal)?;
    let kernel_formula = g.kernel() == bar;
    let (_, to_bar) = quotient_ring(&bar);
    let comparison = RingHom::factor_through(&to_bar, &g)?;
    Ok(PreservationOutcome {
        description: format!("vN({ring} / {:?}) vs vN({ring}) / Ī", ideal.elements()),
        isomorphism: comparison.is_isomorphism(),
        comparison,
        kernel_formula: Some(kernel_formula),
    })
}

/// `vN(A){η(a)^-1} -> vN(A{a^-1})`, induced by factoring `η_L ∘ λ` through `η_A`.
pub fn localization_preservation(ring: &FiniteRing, a: usize) -> Result<PreservationOutcome> {
    let (local, lambda) = localize_at_element(ring, a)?;
    let ha = vn_hull(ring)?;
    let hl = vn_hull(&local)?;
    let g = ha.factorize(&hl.eta.compose(&lambda)?)?;
    let (_, ell) = localize_at_element(&ha.hull, ha.eta.apply(a))?;
    let comparison = RingHom::factor_through(&ell, &g)?;
    Ok(PreservationOutcome {
        description: format!("vN({ring}[1/{}]) vs vN({ring})[1/η({})]", ring.format_element(a), ring.format_element(a)),
        isomorphism: comparison.is_isomorphism(),
        comparison,
        kernel_formula: None,
    })
}

pub fn preservation_suite(instances: &[PreservationInstance]) -> Result<Vec<PreservationOutcome>> {
    instances
        .iter()
        .map(|inst| match inst {
            PreservationInstance::Product(a, b) => product_preservation(a, b),
            PreservationInstance::Quotient(a, gens) => quotient_preservation(a, gens),
            PreservationInstance::Localization(a, x) => localization_preservation(a, *x),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, enumerate_homs, find_isomorphism};

    fn z(n: u64) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    #[test]
    fn hull_examples() {
        let h4 = vn_hull(&z(4)).unwrap();
        assert_eq!(h4.hull.card(), 2);
        assert_eq!(h4.eta.kernel().elements(), &[0, 2]);
        assert_eq!(h4.describe(), "Z/2");

        let h12 = vn_hull(&z(12)).unwrap();
        assert_eq!(h12.hull.card(), 6);
        assert_eq!(h12.eta.kernel().elements(), &[0, 6]);
        assert!(find_isomorphism(&h12.hull, &z(6)).unwrap().is_some());

        assert!(vn_hull(&z(6)).unwrap().eta.is_isomorphism());
        assert!(vn_hull(&FiniteRing::trivial()).unwrap().hull.is_trivial());
        assert_eq!(vn_hull(&z(360)).unwrap().hull.card(), 30);
    }

    #[test]
    fn invariants_on_small_rings() {
        for n in 1..=64u64 {
            assert!(vn_hull(&z(n)).unwrap().invariants().unwrap().all(), "Z/{n}");
        }
        let g = build_ring("GF(4) x Z/4").unwrap();
        assert!(vn_hull(&g).unwrap().invariants().unwrap().all());
    }

    #[test]
    fn factorization_examples() {
        let h4 = vn_hull(&z(4)).unwrap();
        let f = RingHom::new(z(4), z(2), vec![0, 1, 0, 1]).unwrap();
        let g = h4.factorize(&f).unwrap();
        assert_eq!(g.table(), &[0, 1]);

        let h12 = vn_hull(&z(12)).unwrap();
        let red3 = RingHom::new(z(12), z(3), (0..12).map(|a| a % 3).collect()).unwrap();
        let g = h12.factorize(&red3).unwrap();
        let proj = &h12.projections[1];
        assert_eq!(h12.residue_fields[1].field.card(), 3);
        assert_eq!(g.table(), proj.table());

        let id = h12.factorize(&h12.eta).unwrap();
        assert_eq!(id, RingHom::identity(&h12.hull));
    }

    #[test]
    fn factorization_is_unique() {
        let targets: Vec<FiniteRing> = ["Z/2", "Z/3", "Z/6", "GF(4)", "Z/2 x Z/2", "Z/10"]
            .iter()
            .map(|s| build_ring(s).unwrap())
            .collect();
        for n in [4u64, 8, 12, 18, 24, 36] {
            let h = vn_hull(&z(n)).unwrap();
            for v in &targets {
                let candidates = enumerate_homs(&h.hull, v).unwrap();
                for f in enumerate_homs(&z(n), v).unwrap() {
                    let g = h.factorize(&f).unwrap();
                    let matching: Vec<&RingHom> =
                        candidates.iter().filter(|c| &c.compose(&h.eta).unwrap() == &f).collect();
                    assert_eq!(matching, vec![&g]);
                }
            }
        }
    }

    #[test]
    fn idempotency() {
        for n in [12u64, 8, 5, 1, 360] {
            assert!(hull_idempotent_check(&z(n)).unwrap(), "Z/{n}");
        }
    }

    #[test]
    fn preservation_examples() {
        let p = product_preservation(&z(4), &z(9)).unwrap();
        assert!(p.passed());
        assert_eq!(p.comparison.codomain().card(), 6);

        let q = quotient_preservation(&z(12), &[4]).unwrap();
        assert!(q.passed());
        assert_eq!(q.comparison.codomain().card(), 2);
        let ha = vn_hull(&z(12)).unwrap();
        let bar = hull_ideal_of(&ha, &Ideal::closure(&z(12), &[4]).unwrap()).unwrap();
        // 0 x F3 inside F2 x F3
        assert_eq!(bar.card(), 3);
        assert!(bar.elements().iter().all(|&v| ha.hull.product_component(v, 0) == Some(0)));

        let nil = hull_ideal_of(&ha, &Ideal::closure(&z(12), &[6]).unwrap()).unwrap();
        assert!(nil.is_zero());

        let l = localization_preservation(&z(12), 2).unwrap();
        assert!(l.passed());
        assert_eq!(l.comparison.domain().card(), 3);
    }
}
