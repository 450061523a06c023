use std::fmt;
use std::ops::ControlFlow;

use super::{FiniteRing, Ideal};
use crate::error::{Error, Result};

/// A unital ring homomorphism stored as its element table.
#[derive(Clone, PartialEq, Eq)]
pub struct RingHom {
    domain: FiniteRing,
    codomain: FiniteRing,
    table: Vec<usize>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHom({} -> {}: {:?})", self.domain, self.codomain, self.table)
    }
}

impl RingHom {
    /// Validates additivity, multiplicativity and `1 |-> 1` exhaustively.
    pub fn new(domain: FiniteRing, codomain: FiniteRing, table: Vec<usize>) -> Result<RingHom> {
        let bad = |m: String| Err(Error::NotAHomomorphism(m));
        if table.len() != domain.card() {
            return bad(format!("table has {} entries for a domain of {}", table.len(), domain.card()));
        }
        if let Some(&x) = table.iter().find(|&&x| x >= codomain.card()) {
            return bad(format!("image {x} outside the codomain"));
        }
        if table[domain.one()] != codomain.one() {
            return bad("1 is not sent to 1".into());
        }
        for a in domain.elements() {
            for b in a..domain.card() {
                if table[domain.add(a, b)] != codomain.add(table[a], table[b]) {
                    return bad(format!("not additive at ({a}, {b})"));
                }
                if table[domain.mul(a, b)] != codomain.mul(table[a], table[b]) {
                    return bad(format!("not multiplicative at ({a}, {b})"));
                }
            }
        }
        Ok(RingHom { domain, codomain, table })
    }

    pub(crate) fn from_table_unchecked(domain: FiniteRing, codomain: FiniteRing, table: Vec<usize>) -> RingHom {
        debug_assert_eq!(table.len(), domain.card());
        RingHom { domain, codomain, table }
    }

    pub fn identity(ring: &FiniteRing) -> RingHom {
        RingHom { domain: ring.clone(), codomain: ring.clone(), table: ring.elements().collect() }
    }

    pub fn domain(&self) -> &FiniteRing {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteRing {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RingHom) -> Result<RingHom> {
        if inner.codomain != self.domain {
            return Err(Error::Mismatch(format!("{} is not {}", inner.codomain, self.domain)));
        }
        let table = inner.table.iter().map(|&x| self.table[x]).collect();
        Ok(RingHom { domain: inner.domain.clone(), codomain: self.codomain.clone(), table })
    }

    pub fn kernel(&self) -> Ideal {
        let ker: Vec<usize> = self.domain.elements().filter(|&a| self.table[a] == 0).collect();
        Ideal::from_elements(&self.domain, &ker).expect("kernels are ideals")
    }

    /// The distinct images, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut im = self.table.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.table.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.codomain.card()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.card() == self.codomain.card() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<RingHom> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut inv = vec![0; self.codomain.card()];
        for (a, &b) in self.table.iter().enumerate() {
            inv[b] = a;
        }
        Some(RingHom { domain: self.codomain.clone(), codomain: self.domain.clone(), table: inv })
    }

    /// The unique `g` with `g ∘ surjection = f`, when `ker surjection ⊆ ker f`.
    pub fn factor_through(surjection: &RingHom, f: &RingHom) -> Result<RingHom> {
        if surjection.domain != f.domain {
            return Err(Error::Mismatch("factorisation needs a common domain".into()));
        }
        let mut table = vec![usize::MAX; surjection.codomain.card()];
        for a in f.domain.elements() {
            let slot = &mut table[surjection.table[a]];
            if *slot == usize::MAX {
                *slot = f.table[a];
            } else if *slot != f.table[a] {
                return Err(Error::NoFactorization(format!(
                    "element {a} is identified by the surjection but not by the map"
                )));
            }
        }
        if table.contains(&usize::MAX) {
            return Err(Error::NoFactorization("first map is not surjective".into()));
        }
        RingHom::new(surjection.codomain.clone(), f.codomain.clone(), table)
    }
}

/// Limits for [`enumerate_homs_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomSearch {
    /// Largest generating set (beyond the prime subring) to look for.
    pub max_generators: usize,
}

impl Default for HomSearch {
    fn default() -> Self {
        HomSearch { max_generators: 3 }
    }
}

/// Worklist extension of a partial map along subring generation.
/// Returns `false` on a conflict.
struct PartialMap<'a> {
    domain: &'a FiniteRing,
    codomain: &'a FiniteRing,
    image: Vec<usize>,
    known: Vec<usize>,
}

impl<'a> PartialMap<'a> {
    fn new(domain: &'a FiniteRing, codomain: &'a FiniteRing) -> Option<Self> {
        let mut m = PartialMap { domain, codomain, image: vec![usize::MAX; domain.card()], known: Vec::new() };
        (m.assign(0, 0) && m.assign(domain.one(), codomain.one())).then_some(m)
    }

    fn assign(&mut self, a: usize, b: usize) -> bool {
        if self.image[a] != usize::MAX {
            return self.image[a] == b;
        }
        self.image[a] = b;
        let mut queue = vec![a];
        while let Some(u) = queue.pop() {
            let fu = self.image[u];
            self.known.push(u);
            for i in 0..self.known.len() {
                let v = self.known[i];
                let fv = self.image[v];
                for (w, fw) in [
                    (self.domain.add(u, v), self.codomain.add(fu, fv)),
                    (self.domain.mul(u, v), self.codomain.mul(fu, fv)),
                ] {
                    if self.image[w] == usize::MAX {
                        self.image[w] = fw;
                        queue.push(w);
                    } else if self.image[w] != fw {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn snapshot(&self) -> (Vec<usize>, Vec<usize>) {
        (self.image.clone(), self.known.clone())
    }

    fn restore(&mut self, s: (Vec<usize>, Vec<usize>)) {
        self.image = s.0;
        self.known = s.1;
    }
}

fn subring_closure(ring: &FiniteRing, seeds: &[usize]) -> Vec<bool> {
    let n = ring.card();
    let mut inside = vec![false; n];
    let mut known: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = vec![0, ring.one()];
    queue.extend_from_slice(seeds);
    while let Some(u) = queue.pop() {
        if inside[u] {
            continue;
        }
        inside[u] = true;
        known.push(u);
        for i in 0..known.len() {
            let v = known[i];
            for w in [ring.add(u, v), ring.mul(u, v)] {
                if !inside[w] {
                    queue.push(w);
                }
            }
        }
    }
    inside
}

/// A small set of elements which, with `1`, generates `ring` as a ring.
/// Greedy: structural hints first, then any element, each step taking the one
/// that enlarges the generated subring most.
pub fn generating_set(ring: &FiniteRing, max: usize) -> Result<Vec<usize>> {
    let mut gens = Vec::new();
    let mut inside = subring_closure(ring, &gens);
    let hints = ring.structural_generators();
    while inside.iter().any(|&x| !x) {
        if gens.len() == max {
            return Err(Error::NoSmallGeneratingSet(max));
        }
        let pick = |pool: &mut dyn Iterator<Item = usize>, gens: &Vec<usize>| {
            let mut best: Option<(usize, usize, Vec<bool>)> = None;
            for g in pool {
                let mut trial = gens.clone();
                trial.push(g);
                let cl = subring_closure(ring, &trial);
                let size = cl.iter().filter(|&&x| x).count();
                if best.as_ref().map_or(true, |b| size > b.1) {
                    best = Some((g, size, cl));
                }
            }
            best
        };
        let mut hinted = hints.iter().copied().filter(|&g| !inside[g]);
        let choice = match pick(&mut hinted, &gens) {
            Some(c) => Some(c),
            None => {
                // bounded scan keeps this quadratic-ish on large carriers
                let mut rest = ring.elements().filter(|&g| !inside[g]).take(64);
                pick(&mut rest, &gens)
            }
        };
        let (g, _, cl) = choice.expect("some element lies outside the generated subring");
        gens.push(g);
        inside = cl;
    }
    Ok(gens)
}

/// Calls `visit` on every unital homomorphism `A -> B` until it breaks.
pub fn for_each_hom<F>(domain: &FiniteRing, codomain: &FiniteRing, opts: &HomSearch, mut visit: F) -> Result<()>
where
    F: FnMut(RingHom) -> ControlFlow<()>,
{
    let gens = generating_set(domain, opts.max_generators)?;
    let Some(mut map) = PartialMap::new(domain, codomain) else {
        return Ok(());
    };
    // candidate images must have additive order dividing the generator's
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let ord = domain.additive_order(g);
            codomain.elements().filter(|&y| ord % codomain.additive_order(y) == 0).collect()
        })
        .collect();
    let mut stop = false;
    extend(&mut map, &gens, &candidates, 0, &mut visit, &mut stop);
    Ok(())
}

fn extend<F>(
    map: &mut PartialMap<'_>,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    visit: &mut F,
    stop: &mut bool,
) where
    F: FnMut(RingHom) -> ControlFlow<()>,
{
    if *stop {
        return;
    }
    if depth == gens.len() {
        debug_assert!(map.image.iter().all(|&x| x != usize::MAX));
        let hom = RingHom::from_table_unchecked(map.domain.clone(), map.codomain.clone(), map.image.clone());
        if visit(hom).is_break() {
            *stop = true;
        }
        return;
    }
    for &y in &candidates[depth] {
        let saved = map.snapshot();
        if map.assign(gens[depth], y) {
            extend(map, gens, candidates, depth + 1, visit, stop);
        }
        map.restore(saved);
        if *stop {
            return;
        }
    }
}

/// Every unital homomorphism `A -> B`, in lexicographic order of their tables.
pub fn enumerate_homs(domain: &FiniteRing, codomain: &FiniteRing) -> Result<Vec<RingHom>> {
    enumerate_homs_with(domain, codomain, &HomSearch::default())
}

pub fn enumerate_homs_with(domain: &FiniteRing, codomain: &FiniteRing, opts: &HomSearch) -> Result<Vec<RingHom>> {
    let mut out = Vec::new();
    for_each_hom(domain, codomain, opts, |h| {
        out.push(h);
        ControlFlow::Continue(())
    })?;
    out.sort_by(|a, b| a.table.cmp(&b.table));
    Ok(out)
}

/// Some isomorphism `A -> B`, if one exists.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Result<Option<RingHom>> {
    if a.card() != b.card() {
        return Ok(None);
    }
    let mut found = None;
    for_each_hom(a, b, &HomSearch::default(), |h| {
        if h.is_injective() {
            found = Some(h);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
