//! The residue-field presheaf on the constructible basis, its stalks and
//! sheafified global sections, and the affine sheaf `Σ_A(D(a)) = A{a^-1}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{
    equalizer, localize_at_element, pairing_from, product_ring, quotient_ring, EmptyProduct, FiniteRing, Ideal, RingHom,
};
use crate::spectrum::{residue_field, spectrum, PointSet, PrimeSpectrum};
use crate::vn_hull::vn_hull;
use crate::vn_regular::vn_ring;

/// A presentation `D(a) ∩ Z(b)` together with its point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisOpen {
    pub a: usize,
    pub b: usize,
    pub points: PointSet,
}

impl BasisOpen {
    pub fn new(spec: &PrimeSpectrum, a: usize, b: usize) -> BasisOpen {
        BasisOpen { a, b, points: spec.constructible(a, b) }
    }
}

/// `F_A(U) = (A/√(b)){a^-1}` with `t_{a,b} : A -> F_A(U)`.
#[derive(Clone, Debug)]
pub struct Section {
    pub open: BasisOpen,
    pub ring: FiniteRing,
    pub t: RingHom,
}

fn radical_in(spec: &PrimeSpectrum, ideal: &Ideal) -> Ideal {
    let ring = spec.ring();
    let over = spec.containing(ideal);
    let members: Vec<usize> =
        ring.elements().filter(|&x| over.iter().all(|i| spec.primes()[i].contains(x))).collect();
    Ideal::from_elements(ring, &members).expect("intersections of primes are ideals")
}

fn section_in(spec: &PrimeSpectrum, a: usize, b: usize) -> Result<Section> {
    let ring = spec.ring();
    ring.check_element(a)?;
    ring.check_element(b)?;
    let rad = radical_in(spec, &Ideal::closure(ring, &[b])?);
    let (quot, pi) = quotient_ring(&rad);
    let (local, lambda) = localize_at_element(&quot, pi.apply(a))?;
    let t = lambda.compose(&pi)?;
    Ok(Section { open: BasisOpen::new(spec, a, b), ring: local, t })
}

pub fn section_ring(ring: &FiniteRing, a: usize, b: usize) -> Result<Section> {
    section_in(&spectrum(ring), a, b)
}

/// `F(outer) -> F(inner)`, the unique map under `A`.
pub fn restriction_hom(inner: &Section, outer: &Section) -> Result<RingHom> {
    if !inner.open.points.is_subset(outer.open.points) {
        return Err(Error::ContainmentViolated {
            inner: inner.open.points.iter().collect(),
            outer: outer.open.points.iter().collect(),
        });
    }
    RingHom::factor_through(&outer.t, &inner.t)
}

/// Every presentation `(a, b)` of a basis open, with one representative per point set.
#[derive(Clone, Debug)]
pub struct PresheafOnBasis {
    pub spectrum: PrimeSpectrum,
    /// Indexed by `a * card + b`.
    pub sections: Vec<Section>,
    pub representatives: BTreeMap<u64, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresheafLaws {
    pub identity: bool,
    pub composition: bool,
    pub same_open_isomorphic: bool,
}

impl PresheafLaws {
    pub fn all(&self) -> bool {
        self.identity && self.composition && self.same_open_isomorphic
    }
}

impl PresheafOnBasis {
    pub fn build(ring: &FiniteRing) -> Result<PresheafOnBasis> {
        let spec = spectrum(ring);
        let n = ring.card();
        let mut sections = Vec::with_capacity(n * n);
        let mut representatives = BTreeMap::new();
        for a in ring.elements() {
            for b in ring.elements() {
                let s = section_in(&spec, a, b)?;
                representatives.entry(s.open.points.bits()).or_insert(a * n + b);
                sections.push(s);
            }
        }
        Ok(PresheafOnBasis { spectrum: spec, sections, representatives })
    }

    pub fn ring(&self) -> &FiniteRing {
        self.spectrum.ring()
    }

    pub fn section(&self, a: usize, b: usize) -> &Section {
        &self.sections[a * self.ring().card() + b]
    }

    pub fn representative(&self, points: PointSet) -> Option<&Section> {
        self.representatives.get(&points.bits()).map(|&i| &self.sections[i])
    }

    pub fn check_laws(&self) -> Result<PresheafLaws> {
        let mut identity = true;
        let mut same_open_isomorphic = true;
        for s in &self.sections {
            identity &= restriction_hom(s, s)? == RingHom::identity(&s.ring);
            let rep = self.representative(s.open.points).expect("every point set has a representative");
            let there = restriction_hom(rep, s)?;
            let back = restriction_hom(s, rep)?;
            same_open_isomorphic &= there.is_isomorphism()
                && back.compose(&there)? == RingHom::identity(&s.ring)
                && there.compose(&back)? == RingHom::identity(&rep.ring);
        }
        let reps: Vec<&Section> = self.representatives.values().map(|&i| &self.sections[i]).collect();
        let mut composition = true;
        for u in &reps {
            for v in reps.iter().filter(|v| v.open.points.is_subset(u.open.points)) {
                let uv = restriction_hom(v, u)?;
                for w in reps.iter().filter(|w| w.open.points.is_subset(v.open.points)) {
                    let direct = restriction_hom(w, u)?;
                    composition &= restriction_hom(w, v)?.compose(&uv)? == direct;
                }
            }
        }
        Ok(PresheafLaws { identity, composition, same_open_isomorphic })
    }

    /// The germs of all sections over opens containing point `p` cover the stalk.
    pub fn collectively_surjective(&self, p: usize) -> Result<bool> {
        let stalk = self.representative(PointSet::singleton(p)).expect("singletons are basic");
        let mut hit = vec![false; stalk.ring.card()];
        for s in self.sections.iter().filter(|s| s.open.points.contains(p)) {
            let germ = restriction_hom(stalk, s)?;
            for x in germ.image() {
                hit[x] = true;
            }
        }
        Ok(hit.iter().all(|&h| h))
    }
}

/// The stalk at prime `p`: the section ring over the first presentation of `{p}`,
/// with its comparison to the residue field.
#[derive(Clone, Debug)]
pub struct Stalk {
    pub point: usize,
    pub section: Section,
    pub to_residue_field: RingHom,
}

pub fn stalk(ring: &FiniteRing, p: &Ideal) -> Result<Stalk> {
    let spec = spectrum(ring);
    stalk_in(&spec, p)
}

fn stalk_in(spec: &PrimeSpectrum, p: &Ideal) -> Result<Stalk> {
    let ring = spec.ring();
    let point = spec.index_of(p).ok_or(Error::NotPrimeIdeal)?;
    let target = PointSet::singleton(point);
    let (a, b) = ring
        .elements()
        .flat_map(|a| ring.elements().map(move |b| (a, b)))
        .find(|&(a, b)| spec.constructible(a, b) == target)
        .ok_or_else(|| Error::AxiomViolation("no basic open isolates the point".into()))?;
    let section = section_in(spec, a, b)?;
    let k = residue_field(ring, p)?;
    let to_residue_field = RingHom::factor_through(&section.t, &k.alpha)?;
    if !to_residue_field.is_isomorphism() {
        return Err(Error::AxiomViolation(format!("stalk at {p:?} is not the residue field")));
    }
    Ok(Stalk { point, section, to_residue_field })
}

/// `H_A(Spec A) = ∏_p F_{A,p}` with the diagonal `μ_A`, and the comparison
/// with the hull.
#[derive(Clone, Debug)]
pub struct GlobalSections {
    pub stalks: Vec<Stalk>,
    pub ring: FiniteRing,
    pub mu: RingHom,
    /// `vN(A) -> H_A(Spec A)` through which `μ_A` factors.
    pub from_hull: RingHom,
}

impl GlobalSections {
    pub fn agrees_with_hull(&self) -> bool {
        self.from_hull.is_isomorphism()
    }
}

pub fn global_sections_sheafified(ring: &FiniteRing) -> Result<GlobalSections> {
    let spec = spectrum(ring);
    let stalks = spec.primes().iter().map(|p| stalk_in(&spec, p)).collect::<Result<Vec<_>>>()?;
    let factors: Vec<FiniteRing> = stalks.iter().map(|s| s.section.ring.clone()).collect();
    let product = FiniteRing::product(&factors, EmptyProduct::Trivial)?;
    let maps: Vec<RingHom> = stalks.iter().map(|s| s.section.t.clone()).collect();
    let mu = pairing_from(ring, &maps, &product)?;
    let from_hull = vn_hull(ring)?.factorize(&mu)?;
    Ok(GlobalSections { stalks, ring: product, mu, from_hull })
}

/// `Σ_A(U)` glued from `A{a_i^-1}` over a cover `U = ⋃ D(a_i)`.
#[derive(Clone, Debug)]
pub struct AffineSections {
    pub open: PointSet,
    pub cover: Vec<usize>,
    pub ring: FiniteRing,
    /// `A -> Σ_A(U)`.
    pub canonical: RingHom,
}

/// For each point of `U`, the first `a` with the fewest points such that
/// `p ∈ D(a) ⊆ U`; duplicates by point set are dropped.
pub fn minimal_cover(spec: &PrimeSpectrum, open: PointSet) -> Vec<usize> {
    let ring = spec.ring();
    let mut cover: Vec<usize> = Vec::new();
    for p in open.iter() {
        let best = ring
            .elements()
            .filter(|&a| spec.basic_open(a).contains(p) && spec.basic_open(a).is_subset(open))
            .min_by_key(|&a| (spec.basic_open(a).len(), a))
            .expect("some D(a) isolates each point");
        if !cover.iter().any(|&c| spec.basic_open(c) == spec.basic_open(best)) {
            cover.push(best);
        }
    }
    cover
}

pub fn affine_sections(ring: &FiniteRing, open: PointSet) -> Result<AffineSections> {
    let spec = spectrum(ring);
    let cover = minimal_cover(&spec, open);
    affine_sections_with_cover(&spec, open, &cover)
}

/// Equalizer of `∏_i Σ(D(a_i)) ⇉ ∏_{i<j} Σ(D(a_i a_j))`.
pub fn affine_sections_with_cover(spec: &PrimeSpectrum, open: PointSet, cover: &[usize]) -> Result<AffineSections> {
    let ring = spec.ring();
    let union = cover.iter().fold(PointSet::EMPTY, |acc, &a| acc.union(spec.basic_open(a)));
    if union != open {
        return Err(Error::Mismatch(format!("cover {cover:?} has union {union:?}, not {open:?}")));
    }
    let pieces = cover.iter().map(|&a| localize_at_element(ring, a)).collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> =
        (0..cover.len()).flat_map(|i| (i + 1..cover.len()).map(move |j| (i, j))).collect();
    let overlaps = pairs
        .iter()
        .map(|&(i, j)| localize_at_element(ring, ring.mul(cover[i], cover[j])))
        .collect::<Result<Vec<_>>>()?;
    let (big, big_proj) = product_ring(&pieces.iter().map(|p| p.0.clone()).collect::<Vec<_>>(), EmptyProduct::Trivial)?;
    let (small, _) = product_ring(&overlaps.iter().map(|p| p.0.clone()).collect::<Vec<_>>(), EmptyProduct::Trivial)?;
    let side = |left: bool| -> Result<RingHom> {
        let maps = pairs
            .iter()
            .zip(&overlaps)
            .map(|(&(i, j), (_, eta_ij))| {
                let k = if left { i } else { j };
                RingHom::factor_through(&pieces[k].1, eta_ij)?.compose(&big_proj[k])
            })
            .collect::<Result<Vec<_>>>()?;
        pairing_from(&big, &maps, &small)
    };
    let (glued, inclusion) = equalizer(&side(true)?, &side(false)?)?;
    let etas: Vec<RingHom> = pieces.iter().map(|p| p.1.clone()).collect();
    let into_big = pairing_from(ring, &etas, &big)?;
    let table = ring
        .elements()
        .map(|a| {
            let v = into_big.apply(a);
            inclusion.table().binary_search(&v).map_err(|_| Error::AxiomViolation("A does not land in the equalizer".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let canonical = RingHom::new(ring.clone(), glued.clone(), table)?;
    Ok(AffineSections { open, cover: cover.to_vec(), ring: glued, canonical })
}

/// One row of the comparison between the two presentations of a basis open.
#[derive(Clone, Debug)]
pub struct AgreementRow {
    pub open: BasisOpen,
    pub idempotent: usize,
    pub rewriting_holds: bool,
    pub isomorphic: bool,
}

/// For regular `A`: `D(a) ∩ Z(b) = D(e(1-f))` with `e, f` the idempotent
/// generators of `a, b`, and `F_A(U) ≅ Σ_A(U)` under `A`.
pub fn affine_agreement(ring: &FiniteRing) -> Result<Vec<AgreementRow>> {
    let v = vn_ring(ring)?;
    let spec = spectrum(ring);
    let mut rows = Vec::new();
    let mut cache: BTreeMap<u64, AffineSections> = BTreeMap::new();
    for a in ring.elements() {
        for b in ring.elements() {
            let e = v.idempotent_generator(a)?;
            let f = v.idempotent_generator(b)?;
            let g = ring.mul(e, ring.sub(ring.one(), f));
            let section = section_in(&spec, a, b)?;
            let open = section.open;
            let rewriting_holds = spec.basic_open(g) == open.points;
            let affine = match cache.get(&open.points.bits()) {
                Some(s) => s.clone(),
                None => {
                    let s = affine_sections_with_cover(&spec, open.points, &minimal_cover(&spec, open.points))?;
                    cache.insert(open.points.bits(), s.clone());
                    s
                }
            };
            let isomorphic = section.t.kernel() == affine.canonical.kernel()
                && affine.canonical.is_surjective()
                && RingHom::factor_through(&section.t, &affine.canonical)?.is_isomorphism();
            rows.push(AgreementRow { open, idempotent: g, rewriting_holds, isomorphic });
        }
    }
    Ok(rows)
}

pub fn affine_agreement_check(ring: &FiniteRing) -> Result<bool> {
    Ok(affine_agreement(ring)?.iter().all(|r| r.rewriting_holds && r.isomorphic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, enumerate_homs, find_isomorphism};

    fn z(n: u64) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    #[test]
    fn section_examples() {
        let z12 = z(12);
        let s = section_ring(&z12, 1, 2).unwrap();
        assert_eq!(s.open.points.len(), 1);
        assert!(find_isomorphism(&s.ring, &z(2)).unwrap().is_some());
        let whole = section_ring(&z12, 1, 0).unwrap();
        assert!(find_isomorphism(&whole.ring, &z(6)).unwrap().is_some());
        assert!(section_ring(&z12, 0, 5).unwrap().ring.is_trivial());
    }

    #[test]
    fn restriction_examples() {
        let z12 = z(12);
        let whole = section_ring(&z12, 1, 0).unwrap();
        let two = section_ring(&z12, 1, 2).unwrap();
        let r = restriction_hom(&two, &whole).unwrap();
        assert_eq!(r.codomain().card(), 2);
        // the only map F(whole) -> F({(2)}) under A
        let under: Vec<RingHom> = enumerate_homs(&whole.ring, &two.ring)
            .unwrap()
            .into_iter()
            .filter(|h| h.compose(&whole.t).unwrap() == two.t)
            .collect();
        assert_eq!(under, vec![r.clone()]);
        assert!(matches!(restriction_hom(&whole, &two), Err(Error::ContainmentViolated { .. })));
        // D(5) ∩ Z(2) is the same open as D(1) ∩ Z(2)
        let other = section_ring(&z12, 5, 2).unwrap();
        assert!(restriction_hom(&other, &two).unwrap().is_isomorphism());
        assert_eq!(restriction_hom(&two, &two).unwrap(), RingHom::identity(&two.ring));
    }

    #[test]
    fn presheaf_laws() {
        for src in ["Z/12", "Z/30", "Z/8", "GF(4) x Z/3", "Z/2 x Z/2 x Z/2"] {
            let f = PresheafOnBasis::build(&build_ring(src).unwrap()).unwrap();
            assert!(f.check_laws().unwrap().all(), "{src}");
            for p in 0..f.spectrum.len() {
                assert!(f.collectively_surjective(p).unwrap());
            }
        }
    }

    #[test]
    fn stalk_examples() {
        let z12 = z(12);
        let s2 = stalk(&z12, &Ideal::closure(&z12, &[2]).unwrap()).unwrap();
        assert_eq!(s2.section.ring.card(), 2);
        let s3 = stalk(&z12, &Ideal::closure(&z12, &[3]).unwrap()).unwrap();
        assert_eq!(s3.section.ring.card(), 3);
        let k = FiniteRing::galois_field(8).unwrap();
        assert_eq!(stalk(&k, &Ideal::zero(&k)).unwrap().section.ring.card(), 8);
        assert!(matches!(stalk(&z12, &Ideal::closure(&z12, &[4]).unwrap()), Err(Error::NotPrimeIdeal)));
    }

    #[test]
    fn global_sections_match_hull() {
        for n in [1u64, 4, 12, 30, 36, 60] {
            let g = global_sections_sheafified(&z(n)).unwrap();
            assert!(g.agrees_with_hull(), "Z/{n}");
        }
        assert_eq!(global_sections_sheafified(&z(4)).unwrap().ring.card(), 2);
        assert_eq!(global_sections_sheafified(&z(12)).unwrap().ring.card(), 6);
    }

    #[test]
    fn affine_examples() {
        let z12 = z(12);
        let spec = spectrum(&z12);
        let whole = affine_sections(&z12, spec.points()).unwrap();
        assert!(whole.canonical.is_isomorphism());
        // D(3) = {(2)} gives Z/4 and D(4) = {(3)} gives Z/3
        let glued = affine_sections_with_cover(&spec, spec.points(), &[3, 4]).unwrap();
        assert_eq!(glued.ring.card(), 12);
        assert!(glued.canonical.is_isomorphism());
        assert_eq!(localize_at_element(&z12, 3).unwrap().0.card(), 4);
        let empty = affine_sections(&z12, PointSet::EMPTY).unwrap();
        assert!(empty.ring.is_trivial());

        let z6 = z(6);
        let s6 = spectrum(&z6);
        let d4 = affine_sections(&z6, s6.basic_open(4)).unwrap();
        let (quot, _) = quotient_ring(&Ideal::closure(&z6, &[z6.sub(1, 4)]).unwrap());
        assert!(find_isomorphism(&d4.ring, &quot).unwrap().is_some());
    }

    #[test]
    fn global_affine_sections_reconstitute_the_ring() {
        for n in 1..=36u64 {
            let r = z(n);
            let spec = spectrum(&r);
            assert!(affine_sections(&r, spec.points()).unwrap().canonical.is_isomorphism(), "Z/{n}");
        }
    }

    #[test]
    fn agreement_examples() {
        assert!(affine_agreement_check(&z(6)).unwrap());
        assert!(affine_agreement_check(&FiniteRing::galois_field(5).unwrap()).unwrap());
        assert!(affine_agreement_check(&build_ring("Z/2 x Z/2 x Z/3").unwrap()).unwrap());
        assert!(matches!(affine_agreement_check(&z(4)), Err(Error::NotVnRegular { .. })));
    }
}
