//! Finite Boolean algebras given by operation tables, and their homomorphisms.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A finite Boolean algebra on carrier `0..card`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBooleanAlgebra {
    card: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    complement: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Vec<String>,
}

/// Outcome of the exhaustive axiom scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub meet_distributes_over_join: bool,
    pub join_distributes_over_meet: bool,
    pub bounded_lattice: bool,
    pub complemented: bool,
    pub order_bounds: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.meet_distributes_over_join
            && self.join_distributes_over_meet
            && self.bounded_lattice
            && self.complemented
            && self.order_bounds
    }
}

impl FiniteBooleanAlgebra {
    /// Builds from tables and rejects anything that fails [`Self::axioms`].
    pub fn from_tables(
        meet: Vec<usize>,
        join: Vec<usize>,
        complement: Vec<usize>,
        bottom: usize,
        top: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let card = labels.len();
        if card == 0
            || meet.len() != card * card
            || join.len() != card * card
            || complement.len() != card
            || meet.iter().chain(&join).chain(&complement).any(|&x| x >= card)
            || bottom >= card
            || top >= card
        {
            return Err(Error::InvalidBooleanAlgebra("table shape does not match carrier".into()));
        }
        let algebra = FiniteBooleanAlgebra { card, meet, join, complement, bottom, top, labels };
        let report = algebra.axioms();
        if !report.all() {
            return Err(Error::InvalidBooleanAlgebra(format!("{report:?}")));
        }
        Ok(algebra)
    }

    /// The powerset of `names.len()` atoms; element `i` is the subset with bit mask `i`.
    pub fn powerset_named(names: &[String]) -> Self {
        let n = names.len();
        assert!(n < 20, "powerset too large");
        let card = 1usize << n;
        let full = card - 1;
        let mut meet = Vec::with_capacity(card * card);
        let mut join = Vec::with_capacity(card * card);
        for a in 0..card {
            for b in 0..card {
                meet.push(a & b);
                join.push(a | b);
            }
        }
        let complement = (0..card).map(|a| full & !a).collect();
        let labels = (0..card)
            .map(|m| {
                let parts: Vec<&str> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| names[i].as_str()).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        FiniteBooleanAlgebra { card, meet, join, complement, bottom: 0, top: full, labels }
    }

    /// `2^n` with atoms named `a, b, c, ..`.
    pub fn powerset(n: usize) -> Self {
        Self::powerset_named(&default_atom_names(n))
    }

    pub fn card(&self) -> usize {
        self.card
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.card
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.card + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.card + b]
    }

    pub fn complement(&self, a: usize) -> usize {
        self.complement[a]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.card);
        self.labels = labels;
        self
    }

    /// `a <= b` iff `a ∧ b = a`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn is_degenerate(&self) -> bool {
        self.bottom == self.top
    }

    /// Minimal non-bottom elements, in carrier order.
    pub fn atoms(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| {
                a != self.bottom && self.elements().all(|b| b == self.bottom || b == a || !self.leq(b, a))
            })
            .collect()
    }

    pub fn atoms_below(&self, b: usize) -> Vec<usize> {
        self.atoms().into_iter().filter(|&a| self.leq(a, b)).collect()
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Both distributive laws are checked separately so that their agreement
    /// can be observed.
    pub fn axioms(&self) -> AxiomReport {
        let n = self.card;
        let els = || 0..n;
        let mut lattice = true;
        let mut complemented = true;
        let mut order = true;
        for a in els() {
            lattice &= self.meet(a, a) == a && self.join(a, a) == a;
            lattice &= self.meet(a, self.top) == a && self.join(a, self.bottom) == a;
            complemented &= self.join(a, self.complement(a)) == self.top
                && self.meet(a, self.complement(a)) == self.bottom;
            for b in els() {
                lattice &= self.meet(a, b) == self.meet(b, a) && self.join(a, b) == self.join(b, a);
                lattice &= self.meet(a, self.join(a, b)) == a && self.join(a, self.meet(a, b)) == a;
                // join is the least upper bound, meet the greatest lower bound
                let (j, m) = (self.join(a, b), self.meet(a, b));
                order &= self.leq(a, j) && self.leq(b, j) && self.leq(m, a) && self.leq(m, b);
                for c in els() {
                    if self.leq(a, c) && self.leq(b, c) {
                        order &= self.leq(j, c);
                    }
                    if self.leq(c, a) && self.leq(c, b) {
                        order &= self.leq(c, m);
                    }
                    lattice &= self.meet(self.meet(a, b), c) == self.meet(a, self.meet(b, c));
                    lattice &= self.join(self.join(a, b), c) == self.join(a, self.join(b, c));
                }
            }
        }
        let mut mdj = true;
        let mut jdm = true;
        for a in els() {
            for b in els() {
                for c in els() {
                    mdj &= self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c));
                    jdm &= self.join(a, self.meet(b, c)) == self.meet(self.join(a, b), self.join(a, c));
                }
            }
        }
        AxiomReport {
            meet_distributes_over_join: mdj,
            join_distributes_over_meet: jdm,
            bounded_lattice: lattice,
            complemented,
            order_bounds: order,
        }
    }

    /// Hasse diagram (covering relation) in DOT syntax.
    pub fn hasse_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(out, "  rankdir=BT;");
        for a in self.elements() {
            let _ = writeln!(out, "  n{a} [label=\"{}\"];", self.labels[a].replace('"', "'"));
        }
        for a in self.elements() {
            for b in self.elements() {
                if a != b
                    && self.leq(a, b)
                    && !self.elements().any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    let _ = writeln!(out, "  n{a} -> n{b};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Atom names `a, b, .., z, a1, b1, ..`.
pub fn default_atom_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            let letter = (b'a' + (i % 26) as u8) as char;
            if i < 26 {
                letter.to_string()
            } else {
                format!("{letter}{}", i / 26)
            }
        })
        .collect()
}

/// A homomorphism of Boolean algebras, stored as its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanHom {
    domain: FiniteBooleanAlgebra,
    codomain: FiniteBooleanAlgebra,
    table: Vec<usize>,
}

impl BooleanHom {
    /// Checks preservation of meet, join, complement, bottom and top.
    pub fn new(domain: FiniteBooleanAlgebra, codomain: FiniteBooleanAlgebra, table: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::NotABooleanHom(m));
        if table.len() != domain.card() || table.iter().any(|&x| x >= codomain.card()) {
            return bad("table shape".into());
        }
        if table[domain.bottom()] != codomain.bottom() || table[domain.top()] != codomain.top() {
            return bad("bounds not preserved".into());
        }
        for a in domain.elements() {
            if table[domain.complement(a)] != codomain.complement(table[a]) {
                return bad(format!("complement of {} not preserved", domain.label(a)));
            }
            for b in domain.elements() {
                if table[domain.meet(a, b)] != codomain.meet(table[a], table[b])
                    || table[domain.join(a, b)] != codomain.join(table[a], table[b])
                {
                    return bad(format!("lattice operations not preserved at ({}, {})", domain.label(a), domain.label(b)));
                }
            }
        }
        Ok(BooleanHom { domain, codomain, table })
    }

    pub fn identity(algebra: &FiniteBooleanAlgebra) -> Self {
        BooleanHom { domain: algebra.clone(), codomain: algebra.clone(), table: algebra.elements().collect() }
    }

    /// From the dual atom map `Atoms(codomain) -> Atoms(domain)`, given as
    /// positions in the respective [`FiniteBooleanAlgebra::atoms`] lists:
    /// `h(b) = ⋁ { a' : dual(a') <= b }`.
    pub fn from_atom_map(domain: FiniteBooleanAlgebra, codomain: FiniteBooleanAlgebra, dual: &[usize]) -> Result<Self> {
        let src_atoms = codomain.atoms();
        let dst_atoms = domain.atoms();
        if dual.len() != src_atoms.len() || dual.iter().any(|&d| d >= dst_atoms.len()) {
            return Err(Error::InvalidAtomMap(format!(
                "expected {} entries into {} atoms",
                src_atoms.len(),
                dst_atoms.len()
            )));
        }
        let table = domain
            .elements()
            .map(|b| {
                codomain.join_all(
                    src_atoms.iter().zip(dual).filter(|(_, &d)| domain.leq(dst_atoms[d], b)).map(|(&a, _)| a),
                )
            })
            .collect();
        BooleanHom::new(domain, codomain, table)
    }

    /// The dual map on atoms: each atom `a'` of the codomain goes to the unique
    /// atom `a` of the domain with `a' <= h(a)`.
    pub fn atom_map(&self) -> Vec<usize> {
        let dst_atoms = self.domain.atoms();
        self.codomain
            .atoms()
            .into_iter()
            .map(|a2| {
                dst_atoms
                    .iter()
                    .position(|&a| self.codomain.leq(a2, self.table[a]))
                    .expect("atoms of the codomain sit below exactly one image atom")
            })
            .collect()
    }

    pub fn domain(&self) -> &FiniteBooleanAlgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteBooleanAlgebra {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &BooleanHom) -> Result<BooleanHom> {
        if inner.codomain.card() != self.domain.card() {
            return Err(Error::Mismatch("Boolean homs do not compose".into()));
        }
        Ok(BooleanHom {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            table: inner.table.iter().map(|&x| self.table[x]).collect(),
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        let mut t = self.table.clone();
        t.sort_unstable();
        t.dedup();
        self.domain.card() == self.codomain.card() && t.len() == self.table.len()
    }

    pub fn is_injective(&self) -> bool {
        let mut t = self.table.clone();
        t.sort_unstable();
        t.dedup();
        t.len() == self.table.len()
    }
}
