use std::fmt;

use super::FiniteRing;
use crate::error::{Error, Result};

/// An ideal of a finite ring, stored as its full element set.
#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    generators: Vec<usize>,
    members: Vec<bool>,
    elements: Vec<usize>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.members == other.members
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?} in {}", self.elements, self.ring)
    }
}

impl Ideal {
    /// Smallest ideal containing `gens`: the additive closure of all multiples `r g`.
    pub fn closure(ring: &FiniteRing, gens: &[usize]) -> Result<Ideal> {
        for &g in gens {
            ring.check_element(g)?;
        }
        let n = ring.card();
        let mut multiples = Vec::new();
        let mut seen = vec![false; n];
        for &g in gens {
            for r in ring.elements() {
                let m = ring.mul(r, g);
                if !seen[m] {
                    seen[m] = true;
                    multiples.push(m);
                }
            }
        }
        if gens.len() == 1 {
            // {r g} is already closed under addition
            multiples.sort_unstable();
            return Ok(Ideal { ring: ring.clone(), generators: gens.to_vec(), members: seen, elements: multiples });
        }
        let mut members = vec![false; n];
        members[0] = true;
        let mut elements = vec![0];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            i += 1;
            for &m in &multiples {
                let y = ring.add(x, m);
                if !members[y] {
                    members[y] = true;
                    elements.push(y);
                }
            }
        }
        elements.sort_unstable();
        Ok(Ideal { ring: ring.clone(), generators: gens.to_vec(), members, elements })
    }

    /// Checks the ideal laws for an explicit subset.
    pub fn from_elements(ring: &FiniteRing, elements: &[usize]) -> Result<Ideal> {
        let n = ring.card();
        let mut members = vec![false; n];
        for &e in elements {
            ring.check_element(e)?;
            members[e] = true;
        }
        if !members[0] {
            return Err(Error::NotAnIdeal("does not contain zero".into()));
        }
        let mut sorted: Vec<usize> = (0..n).filter(|&x| members[x]).collect();
        sorted.dedup();
        for &a in &sorted {
            for &b in &sorted {
                if !members[ring.add(a, b)] {
                    return Err(Error::NotAnIdeal(format!("{a} + {b} escapes")));
                }
            }
            for r in ring.elements() {
                if !members[ring.mul(r, a)] {
                    return Err(Error::NotAnIdeal(format!("{r} * {a} escapes")));
                }
            }
        }
        Ok(Ideal { ring: ring.clone(), generators: sorted.clone(), members, elements: sorted })
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal::closure(ring, &[]).expect("zero ideal")
    }

    pub fn unit(ring: &FiniteRing) -> Ideal {
        Ideal::closure(ring, &[ring.one()]).expect("unit ideal")
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn card(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.get(a).copied().unwrap_or(false)
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }

    /// Proper, and `ab in p` forces `a in p` or `b in p` (exhaustive).
    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let n = self.ring.card();
        for a in 0..n {
            if self.contains(a) {
                continue;
            }
            for b in 0..n {
                if !self.contains(b) && self.contains(self.ring.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.elements.clone();
        gens.extend_from_slice(&other.elements);
        Ideal::closure(&self.ring, &gens).expect("members of the same ring")
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let common: Vec<usize> = self.elements.iter().copied().filter(|&a| other.contains(a)).collect();
        Ideal::from_elements(&self.ring, &common).expect("intersections of ideals are ideals")
    }

    /// Greedy generators: scan members upward, keeping each one not yet covered.
    pub fn small_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut covered = Ideal::zero(&self.ring);
        for &a in &self.elements {
            if !covered.contains(a) {
                gens.push(a);
                covered = Ideal::closure(&self.ring, &gens).expect("members of the ring");
            }
        }
        gens
    }

    pub fn membership(&self) -> &[bool] {
        &self.members
    }
}

/// Free-function form of [`Ideal::closure`].
pub fn ideal_closure(ring: &FiniteRing, gens: &[usize]) -> Result<Ideal> {
    Ideal::closure(ring, gens)
}
