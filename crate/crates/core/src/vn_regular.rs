//! Von Neumann regularity: detection, witnesses, idempotent splitting and
//! decomposition into fields.

use crate::error::{Error, Result};
use crate::ring::{
    corner_ring, localize_by_fractions, pairing_from, product_ring, quotient_ring, EmptyProduct, FiniteRing, Ideal,
    RingHom,
};
use crate::spectrum::{residue_field, spectrum, ResidueField};

/// The three equivalent forms of regularity, evaluated at one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Characterizations {
    /// `a = a^2 x` for some `x`.
    pub square_divides: bool,
    /// `(a) = (e)` for some idempotent `e`.
    pub idempotent_principal: bool,
    /// Exactly one `b` with `a = a^2 b` and `b = b^2 a`.
    pub unique_quasi_inverse: bool,
}

impl Characterizations {
    pub fn agree(&self) -> bool {
        self.square_divides == self.idempotent_principal && self.idempotent_principal == self.unique_quasi_inverse
    }
}

/// Exhaustive evaluation of all three forms at `a`.
pub fn characterizations(ring: &FiniteRing, a: usize) -> Characterizations {
    let a2 = ring.mul(a, a);
    let square_divides = ring.elements().any(|x| ring.mul(a2, x) == a);
    let principal = Ideal::closure(ring, &[a]).expect("element of ring");
    let idempotent_principal =
        ring.idempotents().iter().any(|&e| Ideal::closure(ring, &[e]).expect("element of ring") == principal);
    let solutions = ring
        .elements()
        .filter(|&b| ring.mul(a2, b) == a && ring.mul(ring.mul(b, b), a) == b)
        .count();
    Characterizations { square_divides, idempotent_principal, unique_quasi_inverse: solutions == 1 }
}

/// Per-element witnesses: `a = a^2 x`, `e = a x`, `b = a x^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VnWitness {
    pub x: usize,
    pub e: usize,
    pub b: usize,
}

/// A ring known to be von Neumann regular, with its witnesses.
#[derive(Clone, Debug)]
pub struct VnRing {
    ring: FiniteRing,
    witnesses: Vec<VnWitness>,
}

#[derive(Clone, Debug)]
pub enum Regularity {
    Regular(VnRing),
    NotRegular { counterexample: usize },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }

    pub fn ring(self) -> Result<VnRing> {
        match self {
            Regularity::Regular(r) => Ok(r),
            Regularity::NotRegular { counterexample } => Err(Error::NotVnRegular { counterexample }),
        }
    }
}

/// Exhaustive search for `x` with `a = a^2 x` at every `a`; the first failure
/// is the counterexample.
pub fn is_vn_regular(ring: &FiniteRing) -> Regularity {
    let mut witnesses = Vec::with_capacity(ring.card());
    for a in ring.elements() {
        let a2 = ring.mul(a, a);
        let Some(x) = ring.elements().find(|&x| ring.mul(a2, x) == a) else {
            return Regularity::NotRegular { counterexample: a };
        };
        let e = ring.mul(a, x);
        let b = ring.mul(e, x);
        witnesses.push(VnWitness { x, e, b });
    }
    Regularity::Regular(VnRing { ring: ring.clone(), witnesses })
}

pub fn vn_ring(ring: &FiniteRing) -> Result<VnRing> {
    is_vn_regular(ring).ring()
}

/// Runs [`characterizations`] at every element; returns the first element
/// where they disagree.
pub fn tri_equivalence(ring: &FiniteRing) -> std::result::Result<(), usize> {
    match ring.elements().find(|&a| !characterizations(ring, a).agree()) {
        Some(a) => Err(a),
        None => Ok(()),
    }
}

impl VnRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn witness(&self, a: usize) -> VnWitness {
        self.witnesses[a]
    }

    pub fn witnesses(&self) -> &[VnWitness] {
        &self.witnesses
    }

    /// `b = a x^2`, checked to be the same for every solution `x` and to be
    /// the only element with `a = a^2 b`, `b = b^2 a`.
    pub fn quasi_inverse(&self, a: usize) -> Result<usize> {
        self.ring.check_element(a)?;
        let r = &self.ring;
        let b = self.witnesses[a].b;
        let a2 = r.mul(a, a);
        for x in r.elements().filter(|&x| r.mul(a2, x) == a) {
            if r.mul(a, r.mul(x, x)) != b {
                return Err(Error::AxiomViolation(format!("quasi-inverse of {a} depends on the solution")));
            }
        }
        let all: Vec<usize> = r.elements().filter(|&c| r.mul(a2, c) == a && r.mul(r.mul(c, c), a) == c).collect();
        if all != [b] {
            return Err(Error::AxiomViolation(format!("quasi-inverse of {a} is not unique: {all:?}")));
        }
        Ok(b)
    }

    /// `e = a x`, the only idempotent generating `(a)`.
    pub fn idempotent_generator(&self, a: usize) -> Result<usize> {
        self.ring.check_element(a)?;
        let r = &self.ring;
        let e = self.witnesses[a].e;
        let principal = Ideal::closure(r, &[a])?;
        let generators: Vec<usize> =
            r.idempotents().iter().copied().filter(|&f| Ideal::closure(r, &[f]).unwrap() == principal).collect();
        if generators != [e] {
            return Err(Error::AxiomViolation(format!("idempotent generators of ({a}): {generators:?}")));
        }
        Ok(e)
    }
}

pub fn quasi_inverse(ring: &FiniteRing, a: usize) -> Result<usize> {
    vn_ring(ring)?.quasi_inverse(a)
}

pub fn idempotent_generator(ring: &FiniteRing, a: usize) -> Result<usize> {
    vn_ring(ring)?.idempotent_generator(a)
}

/// `A{e^-1} ≅ A/(1-e) ≅ A e` with all maps out of `A` and between the three.
#[derive(Clone, Debug)]
pub struct IdempotentSplitting {
    pub e: usize,
    pub fractions: FiniteRing,
    pub eta: RingHom,
    pub quotient: FiniteRing,
    pub q: RingHom,
    pub corner: FiniteRing,
    pub m_e: RingHom,
    /// `A/(1-e) -> A e`, induced by `m_e`.
    pub quotient_to_corner: RingHom,
    /// `A/(1-e) -> A{e^-1}`, induced by `η_e`.
    pub quotient_to_fractions: RingHom,
    /// `A{e^-1} -> A/(1-e)`, from the universal property of `η_e`.
    pub fractions_to_quotient: RingHom,
    /// `A e -> A/(1-e)`, `a e |-> a e + (1-e)`.
    pub corner_to_quotient: RingHom,
}

impl IdempotentSplitting {
    /// Each pair of opposite maps composes to identity tables both ways, and
    /// the triangles over `A` commute.
    pub fn verify(&self) -> Result<()> {
        let ident = |h: &RingHom, on: &FiniteRing, what: &str| {
            if h == &RingHom::identity(on) {
                Ok(())
            } else {
                Err(Error::AxiomViolation(format!("{what} is not the identity")))
            }
        };
        ident(&self.fractions_to_quotient.compose(&self.quotient_to_fractions)?, &self.quotient, "ψφ")?;
        ident(&self.quotient_to_fractions.compose(&self.fractions_to_quotient)?, &self.fractions, "φψ")?;
        ident(&self.corner_to_quotient.compose(&self.quotient_to_corner)?, &self.quotient, "quotient round trip")?;
        ident(&self.quotient_to_corner.compose(&self.corner_to_quotient)?, &self.corner, "corner round trip")?;
        let commutes = self.quotient_to_corner.compose(&self.q)? == self.m_e
            && self.quotient_to_fractions.compose(&self.q)? == self.eta
            && self.fractions_to_quotient.compose(&self.eta)? == self.q;
        if !commutes {
            return Err(Error::AxiomViolation("splitting triangles do not commute".into()));
        }
        Ok(())
    }
}

/// Builds the three presentations and the maps between them, then verifies.
pub fn split_by_idempotent(ring: &FiniteRing, e: usize) -> Result<IdempotentSplitting> {
    ring.check_element(e)?;
    if !ring.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let (fractions, eta) = localize_by_fractions(ring, e)?;
    let (quotient, q) = quotient_ring(&Ideal::closure(ring, &[ring.sub(ring.one(), e)])?);
    let (corner, m_e) = corner_ring(ring, e)?;
    let quotient_to_corner = RingHom::factor_through(&q, &m_e)?;
    let quotient_to_fractions = RingHom::factor_through(&q, &eta)?;
    let fractions_to_quotient = RingHom::factor_through(&eta, &q)?;
    let corner_to_quotient = RingHom::factor_through(&m_e, &q)?;
    let split = IdempotentSplitting {
        e,
        fractions,
        eta,
        quotient,
        q,
        corner,
        m_e,
        quotient_to_corner,
        quotient_to_fractions,
        fractions_to_quotient,
        corner_to_quotient,
    };
    split.verify()?;
    Ok(split)
}

/// `δ : A -> ∏_p k_p(A)`, an isomorphism exactly for regular `A`.
#[derive(Clone, Debug)]
pub struct FieldDecomposition {
    pub residue_fields: Vec<ResidueField>,
    pub product: FiniteRing,
    pub projections: Vec<RingHom>,
    pub delta: RingHom,
}

impl FieldDecomposition {
    pub fn inverse(&self) -> RingHom {
        self.delta.inverse().expect("δ is bijective")
    }
}

pub fn decompose_into_fields(ring: &FiniteRing) -> Result<FieldDecomposition> {
    let spec = spectrum(ring);
    let residue_fields =
        spec.primes().iter().map(|p| residue_field(ring, p)).collect::<Result<Vec<_>>>()?;
    let fields: Vec<FiniteRing> = residue_fields.iter().map(|k| k.field.clone()).collect();
    let (product, projections) = product_ring(&fields, EmptyProduct::Trivial)?;
    let alphas: Vec<RingHom> = residue_fields.iter().map(|k| k.alpha.clone()).collect();
    let delta = pairing_from(ring, &alphas, &product)?;
    if !delta.is_injective() {
        let counterexample = delta.kernel().elements().iter().copied().find(|&a| a != 0).unwrap_or(0);
        return Err(Error::NotVnRegular { counterexample });
    }
    if product.card() != ring.card() {
        return Err(Error::AxiomViolation("δ injective but not surjective".into()));
    }
    Ok(FieldDecomposition { residue_fields, product, projections, delta })
}

/// Exactly one maximal ideal.
pub fn is_local(ring: &FiniteRing) -> bool {
    spectrum(ring).len() == 1
}
