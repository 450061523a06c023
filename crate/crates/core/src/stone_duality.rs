//! Finite Stone duality, representation of Boolean algebras by rings of
//! `K`-valued functions, and finite inverse systems.

use std::collections::BTreeMap;

use crate::boolean_idempotents::{bool_functor_between, boolean_algebra_of, j_map, IdempotentBooleanAlgebra};
use crate::error::{Error, Result};
use crate::lattice::{default_atom_names, BooleanHom, FiniteBooleanAlgebra};
use crate::ring::{EmptyProduct, FiniteRing, RingHom};
use crate::spectrum::{spectral_map, spectrum, PointSet};

/// A finite discrete space; every subset is clopen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBooleanSpace {
    pub names: Vec<String>,
}

impl FiniteBooleanSpace {
    pub fn with_points(n: usize) -> Self {
        FiniteBooleanSpace { names: default_atom_names(n) }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// Atom names with the set braces of their labels removed.
pub fn atom_names(algebra: &FiniteBooleanAlgebra) -> Vec<String> {
    algebra
        .atoms()
        .into_iter()
        .map(|a| {
            let l = algebra.label(a);
            l.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(l).to_string()
        })
        .collect()
}

/// One point per atom (the principal ultrafilters).
pub fn stone_space(algebra: &FiniteBooleanAlgebra) -> FiniteBooleanSpace {
    FiniteBooleanSpace { names: atom_names(algebra) }
}

/// `t_B(b)`: the atoms below `b`, as positions in the atom list.
pub fn basis_map(algebra: &FiniteBooleanAlgebra, b: usize) -> PointSet {
    algebra.atoms().into_iter().enumerate().filter(|&(_, a)| algebra.leq(a, b)).map(|(i, _)| i).collect()
}

pub fn clopen_algebra(space: &FiniteBooleanSpace) -> FiniteBooleanAlgebra {
    FiniteBooleanAlgebra::powerset_named(&space.names)
}

/// `B -> Clopen(Stone B), b |-> t_B(b)`.
pub fn duality_roundtrip(algebra: &FiniteBooleanAlgebra) -> Result<BooleanHom> {
    let clopens = clopen_algebra(&stone_space(algebra));
    let table = algebra.elements().map(|b| basis_map(algebra, b).bits() as usize).collect();
    BooleanHom::new(algebra.clone(), clopens, table)
}

/// `X -> Stone(Clopen X)`: `x` goes to the atom `{x}`.
pub fn duality_roundtrip_space(space: &FiniteBooleanSpace) -> Vec<usize> {
    let clopens = clopen_algebra(space);
    let atoms = clopens.atoms();
    (0..space.len()).map(|x| atoms.iter().position(|&a| a == 1 << x).expect("singletons are atoms")).collect()
}

/// `Stone(h) : Stone(B') -> Stone(B)`.
pub fn stone_map(h: &BooleanHom) -> Vec<usize> {
    h.atom_map()
}

/// `Clopen(f) : Clopen(Y) -> Clopen(X)`, preimage along `f : X -> Y`.
pub fn clopen_map(f: &[usize], x: &FiniteBooleanSpace, y: &FiniteBooleanSpace) -> Result<BooleanHom> {
    if f.len() != x.len() || f.iter().any(|&v| v >= y.len()) {
        return Err(Error::Mismatch("function does not match the spaces".into()));
    }
    let from = clopen_algebra(y);
    let to = clopen_algebra(x);
    let table = from
        .elements()
        .map(|s| (0..x.len()).filter(|&i| s >> f[i] & 1 == 1).fold(0, |acc, i| acc | 1 << i))
        .collect();
    BooleanHom::new(from, to, table)
}

/// `roundtrip_{B'} ∘ h = Clopen(Stone h) ∘ roundtrip_B`.
pub fn roundtrip_naturality(h: &BooleanHom) -> Result<bool> {
    let rb = duality_roundtrip(h.domain())?;
    let rb2 = duality_roundtrip(h.codomain())?;
    let dual = stone_map(h);
    let c = clopen_map(&dual, &stone_space(h.codomain()), &stone_space(h.domain()))?;
    Ok(rb2.compose(h)?.table() == c.compose(&rb)?.table())
}

/// `K^n`.
pub fn function_ring(field: &FiniteRing, n: usize) -> Result<FiniteRing> {
    if !field.is_field() {
        return Err(Error::NotAField);
    }
    FiniteRing::product(&vec![field.clone(); n], EmptyProduct::Trivial)
}

fn coordinates(ring: &FiniteRing, v: usize, n: usize) -> Vec<usize> {
    (0..n).map(|i| ring.product_component(v, i).expect("element of a product")).collect()
}

/// `K^m -> K^n, v |-> v ∘ f` for `f : n -> m`.
pub fn function_ring_map(field: &FiniteRing, f: &[usize], m: usize) -> Result<RingHom> {
    let n = f.len();
    let src = function_ring(field, m)?;
    let dst = function_ring(field, n)?;
    let table = src
        .elements()
        .map(|v| {
            let c = coordinates(&src, v, m);
            let pulled: Vec<usize> = f.iter().map(|&j| c[j]).collect();
            dst.product_element(&pulled).expect("components of a product")
        })
        .collect();
    RingHom::new(src, dst, table)
}

/// `ε : X -> Spec(K^X)`, the point `x` goes to the prime `{v : v_x = 0}`.
pub fn epsilon(field: &FiniteRing, n: usize) -> Result<Vec<usize>> {
    let ring = function_ring(field, n)?;
    let spec = spectrum(&ring);
    (0..n)
        .map(|x| {
            let members: Vec<usize> = ring.elements().filter(|&v| ring.product_component(v, x) == Some(0)).collect();
            let p = crate::ring::Ideal::from_elements(&ring, &members)?;
            spec.index_of(&p).ok_or_else(|| Error::AxiomViolation(format!("coordinate {x} kernel is not prime")))
        })
        .collect()
}

/// `ε` is a bijection onto the spectrum.
pub fn spec_of_function_ring_check(field: &FiniteRing, n: usize) -> Result<bool> {
    let eps = epsilon(field, n)?;
    let primes = spectrum(&function_ring(field, n)?).len();
    let mut sorted = eps.clone();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(primes == n && sorted.len() == n)
}

/// `Spec(K^f) ∘ ε_X = ε_Y ∘ f` for `f : X -> Y`.
pub fn epsilon_naturality(field: &FiniteRing, f: &[usize], m: usize) -> Result<bool> {
    let hom = function_ring_map(field, f, m)?;
    let sm = spectral_map(&hom);
    let ex = epsilon(field, f.len())?;
    let ey = epsilon(field, m)?;
    Ok((0..f.len()).all(|x| sm.map[ex[x]] == ey[f[x]]))
}

/// `K^{Stone B}` and `θ_B : B -> B(K^{Stone B})`, `b |-> 1_{t_B(b)}`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub field: FiniteRing,
    pub ring: FiniteRing,
    pub boolean: IdempotentBooleanAlgebra,
    pub theta: BooleanHom,
}

pub fn represent_boolean_algebra(algebra: &FiniteBooleanAlgebra, field: &FiniteRing) -> Result<Representation> {
    let n = algebra.atoms().len();
    let ring = function_ring(field, n)?;
    let boolean = boolean_algebra_of(&ring)?;
    let table = algebra
        .elements()
        .map(|b| {
            let t = basis_map(algebra, b);
            let indicator: Vec<usize> = (0..n).map(|i| if t.contains(i) { field.one() } else { 0 }).collect();
            let v = ring.product_element(&indicator).expect("components of a product");
            boolean.position(v).ok_or_else(|| Error::AxiomViolation("indicator is not idempotent".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let theta = BooleanHom::new(algebra.clone(), boolean.algebra.clone(), table)?;
    if !theta.is_isomorphism() {
        return Err(Error::AxiomViolation("θ is not bijective".into()));
    }
    Ok(Representation { field: field.clone(), ring, boolean, theta })
}

/// `Ǩ(h) : K^{Stone B} -> K^{Stone B'}`, precomposition with the dual atom
/// map, and whether its restriction to idempotents is `h` under `θ`.
#[derive(Clone, Debug)]
pub struct RepresentedHom {
    pub domain: Representation,
    pub codomain: Representation,
    pub ring_hom: RingHom,
    pub square_commutes: bool,
}

pub fn represent_boolean_hom(h: &BooleanHom, field: &FiniteRing) -> Result<RepresentedHom> {
    let domain = represent_boolean_algebra(h.domain(), field)?;
    let codomain = represent_boolean_algebra(h.codomain(), field)?;
    let dual = h.atom_map();
    let m = h.domain().atoms().len();
    let generic = function_ring_map(field, &dual, m)?;
    // same tables, rebased onto the representation rings
    let ring_hom = RingHom::new(domain.ring.clone(), codomain.ring.clone(), generic.table().to_vec())?;
    let bh = bool_functor_between(&ring_hom, &domain.boolean, &codomain.boolean)?;
    let square_commutes = codomain.theta.compose(h)?.table() == bh.compose(&domain.theta)?.table();
    Ok(RepresentedHom { domain, codomain, ring_hom, square_commutes })
}

/// `j ∘ θ : B -> Clopen(Spec K^{Stone B})` is an isomorphism.
pub fn composite_duality_check(algebra: &FiniteBooleanAlgebra, field: &FiniteRing) -> Result<bool> {
    let rep = represent_boolean_algebra(algebra, field)?;
    let j = j_map(&rep.ring)?;
    Ok(j.hom.compose(&rep.theta)?.is_isomorphism())
}

/// Finite sets `X_i` with maps `μ_{j,i} : X_j -> X_i` whenever `j <= i`.
#[derive(Clone, Debug)]
pub struct InverseSystem {
    sizes: Vec<usize>,
    maps: BTreeMap<(usize, usize), Vec<usize>>,
}

impl InverseSystem {
    /// Requires `μ_{i,i} = id` for every index and `μ_{k,i} ∘ μ_{j,k} = μ_{j,i}`
    /// whenever all three are present; the order is read off the keys.
    pub fn new(sizes: Vec<usize>, maps: BTreeMap<(usize, usize), Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidInverseSystem(m));
        let k = sizes.len();
        for (&(j, i), m) in &maps {
            if j >= k || i >= k || m.len() != sizes[j] || m.iter().any(|&x| x >= sizes[i]) {
                return bad(format!("map {j} -> {i} has the wrong shape"));
            }
        }
        for i in 0..k {
            match maps.get(&(i, i)) {
                Some(m) if m.iter().enumerate().all(|(x, &y)| x == y) => {}
                _ => return bad(format!("index {i} lacks the identity map")),
            }
        }
        for (&(j, kk), m1) in &maps {
            for (&(k2, i), m2) in maps.range((kk, 0)..(kk + 1, 0)) {
                debug_assert_eq!(k2, kk);
                match maps.get(&(j, i)) {
                    Some(direct) if m1.iter().map(|&x| m2[x]).eq(direct.iter().copied()) => {}
                    Some(_) => return bad(format!("composite {j} -> {kk} -> {i} disagrees")),
                    None => return bad(format!("{j} <= {kk} <= {i} but no map {j} -> {i}")),
                }
            }
        }
        Ok(InverseSystem { sizes, maps })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn map(&self, j: usize, i: usize) -> Option<&[usize]> {
        self.maps.get(&(j, i)).map(Vec::as_slice)
    }

    /// Any two indices have a common lower bound.
    pub fn is_directed(&self) -> bool {
        let k = self.sizes.len();
        (0..k).all(|a| (0..k).all(|b| (0..k).any(|c| self.maps.contains_key(&(c, a)) && self.maps.contains_key(&(c, b)))))
    }
}

/// Compatible threads `(x_i)` with `μ_{j,i}(x_j) = x_i`, in lexicographic order;
/// the projections are the coordinates.
pub fn inverse_limit(system: &InverseSystem) -> Vec<Vec<usize>> {
    let k = system.sizes.len();
    let mut out = Vec::new();
    let mut thread = Vec::with_capacity(k);
    fn go(sys: &InverseSystem, thread: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = thread.len();
        if i == sys.sizes.len() {
            out.push(thread.clone());
            return;
        }
        for x in 0..sys.sizes[i] {
            let ok = (0..i).all(|j| {
                sys.maps.get(&(j, i)).is_none_or(|m| m[thread[j]] == x)
                    && sys.maps.get(&(i, j)).is_none_or(|m| m[x] == thread[j])
            });
            if ok {
                thread.push(x);
                go(sys, thread, out);
                thread.pop();
            }
        }
    }
    if k > 0 {
        go(system, &mut thread, &mut out);
    } else {
        out.push(Vec::new());
    }
    out
}

/// Every set partition of `0..n`, as class labels in first-occurrence order.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |m| m + 1);
        for c in 0..=next {
            cur.push(c);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// The system of all quotients `X/R` of an `n`-point discrete space, with
/// `R_j <= R_i` when `R_j` refines `R_i`.
pub fn quotient_system(n: usize) -> Result<(Vec<Vec<usize>>, InverseSystem)> {
    let parts = set_partitions(n);
    let sizes: Vec<usize> = parts.iter().map(|p| p.iter().max().map_or(0, |m| m + 1)).collect();
    let mut maps = BTreeMap::new();
    for (j, fine) in parts.iter().enumerate() {
        for (i, coarse) in parts.iter().enumerate() {
            let mut m = vec![usize::MAX; sizes[j]];
            let refines = (0..n).all(|x| {
                let slot = &mut m[fine[x]];
                if *slot == usize::MAX {
                    *slot = coarse[x];
                    true
                } else {
                    *slot == coarse[x]
                }
            });
            if refines {
                maps.insert((j, i), m);
            }
        }
    }
    Ok((parts.clone(), InverseSystem::new(sizes, maps)?))
}

/// `δ : X -> lim X/R`, `x |-> ([x]_R)_R`, is a bijection.
pub fn delta_check(n: usize) -> Result<bool> {
    let (parts, system) = quotient_system(n)?;
    let limit = inverse_limit(&system);
    let delta: Vec<Vec<usize>> = (0..n).map(|x| parts.iter().map(|p| p[x]).collect()).collect();
    let mut sorted = delta.clone();
    sorted.sort();
    sorted.dedup();
    Ok(sorted.len() == n && delta.iter().all(|t| limit.contains(t)) && limit.len() == n)
}

/// `2^n` or an explicit atom list `{a,b,c}`.
pub fn parse_boolean_algebra(text: &str) -> Result<FiniteBooleanAlgebra> {
    let s = text.trim();
    let err = |m: &str| Error::Parse { offset: 0, message: m.to_string() };
    if let Some(rest) = s.strip_prefix("2^") {
        let n: usize = rest.trim().parse().map_err(|_| err("expected `2^n`"))?;
        if n > 12 {
            return Err(Error::SizeBound { card: 1u128 << n.min(127), bound: 1 << 12 });
        }
        return Ok(FiniteBooleanAlgebra::powerset(n));
    }
    if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        let names: Vec<String> =
            inner.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() || names.iter().any(|n| n.contains(['{', '}', ':', '*'])) {
            return Err(err("atom names must be distinct and plain"));
        }
        if names.len() > 12 {
            return Err(Error::SizeBound { card: 1u128 << names.len(), bound: 1 << 12 });
        }
        return Ok(FiniteBooleanAlgebra::powerset_named(&names));
    }
    Err(err("expected `2^n` or `{atom,..}`"))
}

/// `atom-map{x:y,..}` (the prefix is optional) sending each atom `x` of the
/// codomain to an atom `y` of the domain; `*` names the only atom of a
/// one-atom algebra.
pub fn parse_atom_map(text: &str, domain: &FiniteBooleanAlgebra, codomain: &FiniteBooleanAlgebra) -> Result<BooleanHom> {
    let s = text.trim();
    let s = s.strip_prefix("atom-map").unwrap_or(s).trim();
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::InvalidAtomMap("expected `{x:y,..}`".into()))?;
    let src = atom_names(codomain);
    let dst = atom_names(domain);
    let lookup = |names: &[String], key: &str| -> Result<usize> {
        if key == "*" && names.len() == 1 {
            return Ok(0);
        }
        names.iter().position(|n| n == key).ok_or_else(|| Error::InvalidAtomMap(format!("unknown atom `{key}`")))
    };
    let mut dual = vec![usize::MAX; src.len()];
    for entry in inner.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (k, v) = entry.split_once(':').ok_or_else(|| Error::InvalidAtomMap(format!("entry `{entry}` lacks `:`")))?;
        let i = lookup(&src, k.trim())?;
        if dual[i] != usize::MAX {
            return Err(Error::InvalidAtomMap(format!("atom `{}` assigned twice", k.trim())));
        }
        dual[i] = lookup(&dst, v.trim())?;
    }
    if let Some(i) = dual.iter().position(|&d| d == usize::MAX) {
        return Err(Error::InvalidAtomMap(format!("atom `{}` is not assigned", src[i])));
    }
    BooleanHom::from_atom_map(domain.clone(), codomain.clone(), &dual)
}

/// Every Boolean hom `2^m -> 2^n`, one per dual map `n -> m`.
pub fn all_boolean_homs(domain: &FiniteBooleanAlgebra, codomain: &FiniteBooleanAlgebra) -> Result<Vec<BooleanHom>> {
    let m = domain.atoms().len();
    let n = codomain.atoms().len();
    if m == 0 {
        // only the degenerate codomain receives a map from the degenerate algebra
        return Ok(if codomain.is_degenerate() {
            vec![BooleanHom::new(domain.clone(), codomain.clone(), vec![codomain.bottom()])?]
        } else {
            Vec::new()
        });
    }
    let total = (m as u64).pow(n as u32);
    (0..total)
        .map(|code| {
            let mut c = code;
            let dual: Vec<usize> = (0..n)
                .map(|_| {
                    let d = (c % m as u64) as usize;
                    c /= m as u64;
                    d
                })
                .collect();
            BooleanHom::from_atom_map(domain.clone(), codomain.clone(), &dual)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FiniteRing {
        FiniteRing::galois_field(q).unwrap()
    }

    /// Ultrafilters by exhaustive subset scan.
    fn ultrafilter_count(b: &FiniteBooleanAlgebra) -> usize {
        let n = b.card();
        (0u32..1 << n)
            .filter(|&s| {
                let has = |x: usize| s >> x & 1 == 1;
                !has(b.bottom())
                    && b.elements().all(|x| has(x) != has(b.complement(x)))
                    && b.elements().all(|x| {
                        b.elements().all(|y| (!has(x) || !b.leq(x, y) || has(y)) && (!(has(x) && has(y)) || has(b.meet(x, y))))
                    })
            })
            .count()
    }

    #[test]
    fn stone_space_examples() {
        assert_eq!(stone_space(&FiniteBooleanAlgebra::powerset(2)).len(), 2);
        assert!(stone_space(&FiniteBooleanAlgebra::powerset(0)).is_empty());
        let b3 = FiniteBooleanAlgebra::powerset(3);
        assert_eq!(stone_space(&b3).len(), 3);
        assert_eq!(ultrafilter_count(&b3), 3);
        assert_eq!(ultrafilter_count(&FiniteBooleanAlgebra::powerset(4)), 4);
    }

    #[test]
    fn clopen_examples() {
        assert_eq!(clopen_algebra(&FiniteBooleanSpace::with_points(3)).card(), 8);
        assert!(clopen_algebra(&FiniteBooleanSpace::with_points(0)).is_degenerate());
        let j = j_map(&FiniteRing::zmod(30).unwrap()).unwrap();
        assert!(j.is_isomorphism());
        assert_eq!(j.hom.codomain().card(), 8);
    }

    #[test]
    fn roundtrips() {
        for n in 0..=4 {
            let b = FiniteBooleanAlgebra::powerset(n);
            let r = duality_roundtrip(&b).unwrap();
            assert!(r.is_isomorphism());
            let x = FiniteBooleanSpace::with_points(n);
            let s = duality_roundtrip_space(&x);
            assert_eq!(s, (0..n).collect::<Vec<_>>());
        }
        let b2 = FiniteBooleanAlgebra::powerset(2);
        let b3 = FiniteBooleanAlgebra::powerset(3);
        for h in all_boolean_homs(&b2, &b3).unwrap() {
            assert!(roundtrip_naturality(&h).unwrap());
        }
    }

    #[test]
    fn function_ring_examples() {
        let r = function_ring(&gf(2), 2).unwrap();
        assert_eq!(r.card(), 4);
        assert_eq!(boolean_algebra_of(&r).unwrap().algebra.card(), 4);
        assert_eq!(function_ring(&gf(3), 1).unwrap().card(), 3);
        assert!(function_ring(&gf(2), 0).unwrap().is_trivial());
        assert!(matches!(function_ring(&FiniteRing::zmod(4).unwrap(), 2), Err(Error::NotAField)));
    }

    #[test]
    fn spec_of_function_rings() {
        assert!(spec_of_function_ring_check(&gf(2), 3).unwrap());
        assert!(spec_of_function_ring_check(&gf(5), 1).unwrap());
        assert!(spec_of_function_ring_check(&gf(3), 4).unwrap());
        assert!(epsilon_naturality(&gf(2), &[0, 0, 1], 2).unwrap());
        assert!(epsilon_naturality(&gf(3), &[1, 0], 3).unwrap());
    }

    #[test]
    fn representation_examples() {
        let r = represent_boolean_algebra(&FiniteBooleanAlgebra::powerset(2), &gf(2)).unwrap();
        assert_eq!(r.ring.card(), 4);
        let r7 = represent_boolean_algebra(&FiniteBooleanAlgebra::powerset(1), &gf(7)).unwrap();
        assert_eq!(r7.ring.card(), 7);
        let top = r7.theta.apply(r7.theta.domain().top());
        assert_eq!(r7.boolean.element(top), r7.ring.one());
        let r3 = represent_boolean_algebra(&FiniteBooleanAlgebra::powerset(3), &gf(3)).unwrap();
        assert_eq!(r3.ring.card(), 27);
    }

    #[test]
    fn hom_representation_examples() {
        let b1 = FiniteBooleanAlgebra::powerset(1);
        let b2 = FiniteBooleanAlgebra::powerset(2);
        let k = gf(3);
        let up = all_boolean_homs(&b1, &b2).unwrap();
        assert_eq!(up.len(), 1);
        let rep = represent_boolean_hom(&up[0], &k).unwrap();
        assert!(rep.square_commutes);
        let diag: Vec<usize> = (0..3).map(|x| rep.codomain.ring.product_element(&[x, x]).unwrap()).collect();
        assert_eq!(rep.ring_hom.table(), diag.as_slice());

        let h = parse_atom_map("atom-map{*:a}", &b2, &b1).unwrap();
        let rep = represent_boolean_hom(&h, &k).unwrap();
        assert!(rep.square_commutes);
        let proj: Vec<usize> =
            rep.domain.ring.elements().map(|v| rep.domain.ring.product_component(v, 0).unwrap()).collect();
        assert_eq!(rep.ring_hom.table(), proj.as_slice());

        let id = represent_boolean_hom(&BooleanHom::identity(&b2), &k).unwrap();
        assert_eq!(id.ring_hom, RingHom::identity(&id.domain.ring));
    }

    #[test]
    fn atom_map_parse_errors() {
        let b1 = FiniteBooleanAlgebra::powerset(1);
        let b2 = FiniteBooleanAlgebra::powerset(2);
        assert!(matches!(parse_atom_map("{a:c}", &b2, &b1), Err(Error::InvalidAtomMap(_))));
        assert!(matches!(parse_atom_map("{}", &b2, &b1), Err(Error::InvalidAtomMap(_))));
        assert!(matches!(parse_atom_map("{a:a,a:b}", &b2, &b1), Err(Error::InvalidAtomMap(_))));
        assert!(parse_atom_map("{a:b, b:a}", &b2, &b2).unwrap().is_isomorphism());
    }

    #[test]
    fn algebra_parsing() {
        assert_eq!(parse_boolean_algebra("2^3").unwrap().card(), 8);
        let named = parse_boolean_algebra("{x, y}").unwrap();
        assert_eq!(atom_names(&named), vec!["x", "y"]);
        assert!(parse_boolean_algebra("3^2").is_err());
        assert!(parse_boolean_algebra("{x,x}").is_err());
    }

    #[test]
    fn inverse_limits() {
        let mut maps = BTreeMap::new();
        maps.insert((0, 0), vec![0, 1]);
        maps.insert((1, 1), vec![0, 1]);
        maps.insert((0, 1), vec![0, 1]);
        let constant = InverseSystem::new(vec![2, 2], maps).unwrap();
        assert_eq!(inverse_limit(&constant).len(), 2);

        assert!(delta_check(3).unwrap());
        assert!(delta_check(0).unwrap());
        assert_eq!(set_partitions(4).len(), 15);

        // a cospan 0 -> 2 <- 1 with disjoint images
        let mut maps = BTreeMap::new();
        for (i, size) in [1usize, 1, 2].into_iter().enumerate() {
            maps.insert((i, i), (0..size).collect());
        }
        maps.insert((0, 2), vec![0]);
        maps.insert((1, 2), vec![1]);
        let sys = InverseSystem::new(vec![1, 1, 2], maps).unwrap();
        assert!(!sys.is_directed());
        assert!(inverse_limit(&sys).is_empty());
    }

    #[test]
    fn inverse_system_validation() {
        let mut maps = BTreeMap::new();
        maps.insert((0, 0), vec![1, 0]);
        assert!(matches!(InverseSystem::new(vec![2], maps), Err(Error::InvalidInverseSystem(_))));
    }
}
