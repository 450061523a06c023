//! Prime spectra of finite rings.
//!
//! In a finite commutative ring every prime is maximal, the Zariski topology on
//! `Spec A` is discrete, and the primes are in bijection with the primitive
//! idempotents: `A = ∏ A e_i` with each `A e_i` local, and the prime belonging
//! to `e_i` is `{a : a e_i nilpotent}`. [`spectrum`] uses that description;
//! [`primes_by_ideal_scan`] is the exhaustive cross-check.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{quotient_ring, FiniteRing, Ideal, RingHom};

/// A set of spectrum points, as a bit mask over point indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        assert!(n <= 64, "point sets hold at most 64 points");
        if n == 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> PointSet {
        PointSet(1 << i)
    }

    pub fn from_bits(bits: u64) -> PointSet {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// The primes of a finite ring with its basic-open table `a |-> D(a)`.
#[derive(Clone, Debug)]
pub struct PrimeSpectrum {
    ring: FiniteRing,
    primes: Vec<Ideal>,
    basic_opens: Vec<PointSet>,
}

impl PrimeSpectrum {
    fn new(ring: &FiniteRing, mut primes: Vec<Ideal>) -> PrimeSpectrum {
        primes.sort_by(|p, q| p.elements().cmp(q.elements()));
        primes.dedup();
        let basic_opens = ring
            .elements()
            .map(|a| primes.iter().enumerate().filter(|(_, p)| !p.contains(a)).map(|(i, _)| i).collect())
            .collect();
        PrimeSpectrum { ring: ring.clone(), primes, basic_opens }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Primes in canonical order (lexicographic in their sorted elements).
    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.primes.len())
    }

    /// `D(a) = {p : a ∉ p}`.
    pub fn basic_open(&self, a: usize) -> PointSet {
        self.basic_opens[a]
    }

    /// `Z(b) = {p : b ∈ p}`.
    pub fn zero_set(&self, b: usize) -> PointSet {
        self.basic_opens[b].complement(self.len())
    }

    /// `D(a) ∩ Z(b)`, the basic constructible sets.
    pub fn constructible(&self, a: usize, b: usize) -> PointSet {
        self.basic_open(a).intersection(self.zero_set(b))
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.primes.iter().position(|p| p == ideal)
    }

    /// Primes containing `ideal`.
    pub fn containing(&self, ideal: &Ideal) -> PointSet {
        self.primes.iter().enumerate().filter(|(_, p)| ideal.is_subset(p)).map(|(i, _)| i).collect()
    }
}

/// Idempotents `e ≠ 0` with no idempotent strictly between `0` and `e`.
pub fn primitive_idempotents(ring: &FiniteRing) -> Vec<usize> {
    let idem = ring.idempotents();
    idem.iter()
        .copied()
        .filter(|&e| e != 0 && idem.iter().all(|&f| f == 0 || f == e || ring.mul(f, e) != f))
        .collect()
}

/// Complete list of primes of `ring`.
pub fn spectrum(ring: &FiniteRing) -> PrimeSpectrum {
    let primes = primitive_idempotents(ring)
        .into_iter()
        .map(|e| {
            let members: Vec<usize> = ring.elements().filter(|&a| ring.is_nilpotent(ring.mul(a, e))).collect();
            Ideal::from_elements(ring, &members).expect("preimage of the maximal ideal of a local factor")
        })
        .collect();
    PrimeSpectrum::new(ring, primes)
}

/// Every ideal of `ring`, as sums of principal ideals. Sorted canonically.
pub fn all_ideals(ring: &FiniteRing) -> Vec<Ideal> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut found: Vec<Ideal> = Vec::new();
    let principal: Vec<Ideal> = {
        let mut out: Vec<Ideal> = Vec::new();
        for a in ring.elements() {
            let i = Ideal::closure(ring, &[a]).expect("element of ring");
            if !out.contains(&i) {
                out.push(i);
            }
        }
        out
    };
    let mut queue = principal.clone();
    while let Some(i) = queue.pop() {
        if !seen.insert(i.elements().to_vec()) {
            continue;
        }
        for p in &principal {
            if !p.is_subset(&i) {
                queue.push(i.sum(p));
            }
        }
        found.push(i);
    }
    found.sort_by(|p, q| p.elements().cmp(q.elements()));
    found
}

/// The primes among [`all_ideals`].
pub fn primes_by_ideal_scan(ring: &FiniteRing) -> Vec<Ideal> {
    let mut primes: Vec<Ideal> = all_ideals(ring).into_iter().filter(Ideal::is_prime).collect();
    primes.sort_by(|p, q| p.elements().cmp(q.elements()));
    primes
}

/// Intersection of the primes containing `ideal` (the whole ring when none do).
pub fn radical_of_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<Ideal> {
    if ideal.ring() != ring {
        return Err(Error::Mismatch("ideal of a different ring".into()));
    }
    let spec = spectrum(ring);
    let over = spec.containing(ideal);
    let members: Vec<usize> =
        ring.elements().filter(|&a| over.iter().all(|i| spec.primes()[i].contains(a))).collect();
    Ideal::from_elements(ring, &members)
}

/// `{x : x^n ∈ I for some n}`.
pub fn radical_by_powers(ring: &FiniteRing, ideal: &Ideal) -> Ideal {
    let members: Vec<usize> = ring
        .elements()
        .filter(|&a| {
            let mut x = a;
            (0..=ring.card()).any(|_| {
                let hit = ideal.contains(x);
                x = ring.mul(x, a);
                hit
            })
        })
        .collect();
    Ideal::from_elements(ring, &members).expect("radicals are ideals")
}

/// `k_p(A) = A/p` with the projection `α_p`.
#[derive(Clone, Debug)]
pub struct ResidueField {
    pub prime: Ideal,
    pub field: FiniteRing,
    pub alpha: RingHom,
}

pub fn residue_field(ring: &FiniteRing, prime: &Ideal) -> Result<ResidueField> {
    if prime.ring() != ring {
        return Err(Error::Mismatch("ideal of a different ring".into()));
    }
    let (field, alpha) = quotient_ring(prime);
    if !field.is_field() {
        return Err(Error::NotPrimeIdeal);
    }
    Ok(ResidueField { prime: prime.clone(), field, alpha })
}

/// `Spec f : Spec B -> Spec A, q |-> f^-1[q]` for `f : A -> B`.
#[derive(Clone, Debug)]
pub struct SpectralMap {
    /// Spectrum of the codomain of `f` (where points are mapped from).
    pub source: PrimeSpectrum,
    /// Spectrum of the domain of `f`.
    pub target: PrimeSpectrum,
    pub map: Vec<usize>,
}

impl SpectralMap {
    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &i in &self.map {
            hit[i] = true;
        }
        self.source.len() == self.target.len() && hit.iter().all(|&h| h)
    }

    pub fn is_surjective(&self) -> bool {
        let image: PointSet = self.map.iter().copied().collect();
        image == self.target.points()
    }

    /// Preimage of a point set of the target.
    pub fn preimage(&self, set: PointSet) -> PointSet {
        self.map.iter().enumerate().filter(|(_, &t)| set.contains(t)).map(|(s, _)| s).collect()
    }
}

pub fn preimage_ideal(f: &RingHom, q: &Ideal) -> Ideal {
    let members: Vec<usize> = f.domain().elements().filter(|&a| q.contains(f.apply(a))).collect();
    Ideal::from_elements(f.domain(), &members).expect("preimages of ideals are ideals")
}

pub fn spectral_map(f: &RingHom) -> SpectralMap {
    let source = spectrum(f.codomain());
    let target = spectrum(f.domain());
    let map = source
        .primes()
        .iter()
        .map(|q| {
            let pulled = preimage_ideal(f, q);
            target.index_of(&pulled).expect("preimage of a prime is prime")
        })
        .collect();
    SpectralMap { source, target, map }
}

/// `k_{f*(q)}(A) -> k_q(B), [a] |-> [f(a)]`.
pub fn induced_residue_hom(f: &RingHom, q: &Ideal) -> Result<RingHom> {
    let kq = residue_field(f.codomain(), q)?;
    let p = preimage_ideal(f, q);
    let kp = residue_field(f.domain(), &p)?;
    let through = kq.alpha.compose(f)?;
    RingHom::factor_through(&kp.alpha, &through)
}

/// A finite spectrum is Boolean exactly when it is discrete, i.e. no prime
/// strictly contains another.
pub fn is_boolean_space(spec: &PrimeSpectrum) -> bool {
    let ps = spec.primes();
    ps.iter().enumerate().all(|(i, p)| ps.iter().enumerate().all(|(j, q)| i == j || !p.is_subset(q)))
}
