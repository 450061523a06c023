//! Finite commutative unital rings with canonical element encodings.
//!
//! Every ring has carrier `0..card`. Index `0` is always the zero element.
//! Constructors fix the encoding:
//!
//! * `Z/n`: residues `0..n`.
//! * `GF(p^k)`: coefficient tuples in base `p`, lowest coefficient first.
//! * products: mixed-radix tuples, first factor most significant.
//! * quotients: cosets ordered by their minimal base representative.
//! * sub-carrier rings: members in increasing base order.

mod expr;
mod galois;
mod hom;
mod ideal;
mod localize;

pub use expr::{build_ring, build_ring_with, parse_ring_expr, RingExpr};
pub use hom::{
    enumerate_homs, enumerate_homs_with, find_isomorphism, for_each_hom, generating_set, HomSearch,
    RingHom,
};
pub use ideal::{ideal_closure, Ideal};
pub use localize::{idempotent_power, localize_at_element, localize_by_fractions};
pub(crate) use galois::is_prime as is_prime_number;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use galois::GaloisArith;

/// Default upper bound on ring cardinality accepted by the builders.
pub const DEFAULT_MAX_CARD: usize = 4096;

/// Rings up to this size get the cubic (associativity, distributivity) scan
/// when built from an expression.
pub const DEFAULT_CUBIC_VALIDATION_CARD: usize = 128;

/// Rings up to this size cache full operation tables.
const TABLE_CARD: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_card: usize,
    pub cubic_validation_card: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_card: DEFAULT_MAX_CARD, cubic_validation_card: DEFAULT_CUBIC_VALIDATION_CARD }
    }
}

/// What an empty list of factors should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmptyProduct {
    Reject,
    Trivial,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Debug)]
enum Arith {
    ZMod(usize),
    Galois(GaloisArith),
    Product { factors: Vec<FiniteRing>, strides: Vec<usize> },
    Quotient { base: FiniteRing, reps: Vec<usize>, class_of: Vec<u32> },
    Subring { base: FiniteRing, members: Vec<usize>, position: Vec<u32> },
    Explicit { labels: Vec<String> },
}

#[derive(Debug)]
struct RingInner {
    expr: RingExpr,
    card: usize,
    one: usize,
    arith: Arith,
    tables: Option<Tables>,
    idempotents: OnceLock<Vec<usize>>,
    nilradical: OnceLock<Vec<usize>>,
}

/// A finite commutative unital ring. Cheap to clone and safe to share.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.card == other.inner.card
                && self.inner.one == other.inner.one
                && self.inner.expr == other.inner.expr)
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, card {})", self.inner.expr, self.inner.card)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.expr.fmt(f)
    }
}

impl FiniteRing {
    fn from_arith(expr: RingExpr, card: usize, one: usize, arith: Arith) -> FiniteRing {
        let mut inner = RingInner {
            expr,
            card,
            one,
            arith,
            tables: None,
            idempotents: OnceLock::new(),
            nilradical: OnceLock::new(),
        };
        if card <= TABLE_CARD && !matches!(inner.arith, Arith::Explicit { .. }) {
            let mut add = Vec::with_capacity(card * card);
            let mut mul = Vec::with_capacity(card * card);
            for a in 0..card {
                for b in 0..card {
                    add.push(raw_add(&inner.arith, a, b) as u32);
                    mul.push(raw_mul(&inner.arith, a, b) as u32);
                }
            }
            let neg = (0..card).map(|a| raw_neg(&inner.arith, a) as u32).collect();
            inner.tables = Some(Tables { add, mul, neg });
        }
        FiniteRing { inner: Arc::new(inner) }
    }

    /// `Z/n`. `Z/1` is the trivial ring.
    pub fn zmod(n: u64) -> Result<FiniteRing> {
        Self::zmod_with(n, &BuildOptions::default())
    }

    pub fn zmod_with(n: u64, opts: &BuildOptions) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::ZeroModulus(n));
        }
        check_bound(n as u128, opts)?;
        let n = n as usize;
        Ok(Self::from_arith(RingExpr::ZMod(n as u64), n, 1 % n, Arith::ZMod(n)))
    }

    /// The trivial ring `{0}` in which `0 = 1`.
    pub fn trivial() -> FiniteRing {
        Self::zmod(1).expect("Z/1 is always constructible")
    }

    /// `GF(q)` using the lexicographically smallest monic irreducible modulus.
    pub fn galois_field(q: u64) -> Result<FiniteRing> {
        Self::galois_field_with(q, &BuildOptions::default())
    }

    pub fn galois_field_with(q: u64, opts: &BuildOptions) -> Result<FiniteRing> {
        let (p, k) = galois::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        check_bound(q as u128, opts)?;
        Self::galois_field_with_modulus(p, galois::smallest_irreducible(p as usize, k))
    }

    /// `(Z/p)[x] / (f)` for a monic irreducible `f`, given lowest coefficient first.
    pub fn galois_field_with_modulus(p: u64, modulus: Vec<usize>) -> Result<FiniteRing> {
        let arith = GaloisArith::new(p, modulus)?;
        let card = arith.card();
        let expr = RingExpr::GaloisField { order: card as u64, modulus: arith.modulus.clone() };
        Ok(Self::from_arith(expr, card, 1, Arith::Galois(arith)))
    }

    /// Componentwise product. An empty list yields the trivial ring only
    /// with [`EmptyProduct::Trivial`].
    pub fn product(factors: &[FiniteRing], empty: EmptyProduct) -> Result<FiniteRing> {
        Self::product_with(factors, empty, &BuildOptions::default())
    }

    pub fn product_with(factors: &[FiniteRing], empty: EmptyProduct, opts: &BuildOptions) -> Result<FiniteRing> {
        if factors.is_empty() {
            return match empty {
                EmptyProduct::Reject => Err(Error::EmptyProduct),
                EmptyProduct::Trivial => Ok(Self::from_arith(
                    RingExpr::Product(Vec::new()),
                    1,
                    0,
                    Arith::Product { factors: Vec::new(), strides: Vec::new() },
                )),
            };
        }
        let card = factors.iter().try_fold(1u128, |acc, f| {
            let next = acc * f.card() as u128;
            check_bound(next, opts).map(|_| next)
        })? as usize;
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].card();
        }
        let one = factors.iter().zip(&strides).map(|(f, s)| f.one() * s).sum();
        let expr = RingExpr::Product(factors.iter().map(|f| f.expr().clone()).collect());
        Ok(Self::from_arith(expr, card, one, Arith::Product { factors: factors.to_vec(), strides }))
    }

    /// `A / I` together with the coset map; cosets are indexed by increasing
    /// minimal representative.
    pub(crate) fn quotient_by(ideal: &Ideal) -> (FiniteRing, Vec<u32>, Vec<usize>) {
        let base = ideal.ring().clone();
        let n = base.card();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &i in ideal.elements() {
                class_of[base.add(x, i)] = c;
            }
        }
        let one = class_of[base.one()] as usize;
        let expr = RingExpr::Quotient { base: Box::new(base.expr().clone()), generators: ideal.generators().to_vec() };
        let ring = Self::from_arith(
            expr,
            reps.len(),
            one,
            Arith::Quotient { base, reps: reps.clone(), class_of: class_of.clone() },
        );
        (ring, class_of, reps)
    }

    /// A ring carried by a subset of `base` with the inherited operations and
    /// the given unit (which need not be the unit of `base`, as for `A e`).
    pub fn sub_carrier(base: &FiniteRing, members: &[usize], unit: usize) -> Result<FiniteRing> {
        let n = base.card();
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| m >= n) {
            return Err(Error::NotAnElement { index: bad, card: n });
        }
        let mut position = vec![u32::MAX; n];
        for (i, &m) in members.iter().enumerate() {
            position[m] = i as u32;
        }
        let inside = |x: usize| position[x] != u32::MAX;
        if !inside(0) || !inside(unit) {
            return Err(Error::AxiomViolation("sub-carrier must contain zero and its unit".into()));
        }
        for &a in &members {
            if !inside(base.neg(a)) {
                return Err(Error::AxiomViolation(format!("sub-carrier not closed under negation at {a}")));
            }
            if base.mul(unit, a) != a {
                return Err(Error::AxiomViolation(format!("{unit} is not a unit for member {a}")));
            }
            for &b in &members {
                if !inside(base.add(a, b)) || !inside(base.mul(a, b)) {
                    return Err(Error::AxiomViolation(format!("sub-carrier not closed at ({a}, {b})")));
                }
            }
        }
        let one = position[unit] as usize;
        let expr = RingExpr::Subring { base: Box::new(base.expr().clone()), members: members.clone(), unit };
        Ok(Self::from_arith(expr, members.len(), one, Arith::Subring { base: base.clone(), members, position }))
    }

    /// A ring given directly by operation tables. Validated exhaustively.
    pub fn from_tables(
        expr: RingExpr,
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
        labels: Vec<String>,
    ) -> Result<FiniteRing> {
        let card = labels.len();
        if add.len() != card * card || mul.len() != card * card || one >= card.max(1) {
            return Err(Error::AxiomViolation("table shape does not match carrier".into()));
        }
        if add.iter().chain(&mul).any(|&x| x >= card) {
            return Err(Error::AxiomViolation("table entry outside carrier".into()));
        }
        let neg = (0..card)
            .map(|a| (0..card).find(|&b| add[a * card + b] == 0).map(|b| b as u32))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| Error::AxiomViolation("missing additive inverse".into()))?;
        let inner = RingInner {
            expr,
            card,
            one,
            arith: Arith::Explicit { labels },
            tables: Some(Tables {
                add: add.into_iter().map(|x| x as u32).collect(),
                mul: mul.into_iter().map(|x| x as u32).collect(),
                neg,
            }),
            idempotents: OnceLock::new(),
            nilradical: OnceLock::new(),
        };
        let ring = FiniteRing { inner: Arc::new(inner) };
        ring.validate_axioms()?;
        Ok(ring)
    }

    pub fn expr(&self) -> &RingExpr {
        &self.inner.expr
    }

    pub fn card(&self) -> usize {
        self.inner.card
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.inner.one
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.card == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.card
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.inner.card
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotAnElement { index: a, card: self.card() })
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.inner.tables {
            Some(t) => t.add[a * self.inner.card + b] as usize,
            None => raw_add(&self.inner.arith, a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.inner.tables {
            Some(t) => t.mul[a * self.inner.card + b] as usize,
            None => raw_mul(&self.inner.arith, a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        match &self.inner.tables {
            Some(t) => t.neg[a] as usize,
            None => raw_neg(&self.inner.arith, a),
        }
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `k * a` for a non-negative integer `k`.
    pub fn scale(&self, k: usize, a: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, a))
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    /// Additive order of `1`.
    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one())
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.elements().find(|&b| self.mul(a, b) == self.one())
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.inverse(a).is_some()
    }

    /// Units, by exhaustive inverse search.
    pub fn units(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// All `e` with `e^2 = e`, in canonical order.
    pub fn idempotents(&self) -> &[usize] {
        self.inner
            .idempotents
            .get_or_init(|| self.elements().filter(|&e| self.is_idempotent(e)).collect())
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut x = a;
        for _ in 0..=self.card() {
            if x == 0 {
                return true;
            }
            x = self.mul(x, a);
        }
        false
    }

    /// `{x : x^n = 0 for some n <= card}`, by power iteration.
    pub fn nilradical_elements(&self) -> &[usize] {
        self.inner
            .nilradical
            .get_or_init(|| self.elements().filter(|&a| self.is_nilpotent(a)).collect())
    }

    pub fn nilradical(&self) -> Ideal {
        Ideal::from_elements(self, self.nilradical_elements()).expect("nilpotent elements form an ideal")
    }

    pub fn is_reduced(&self) -> bool {
        self.nilradical_elements() == [0]
    }

    /// Non-trivial and every non-zero element invertible.
    pub fn is_field(&self) -> bool {
        !self.is_trivial() && (1..self.card()).all(|a| self.is_unit(a))
    }

    /// The factors when this ring was built as a product.
    pub fn product_factors(&self) -> Option<&[FiniteRing]> {
        match &self.inner.arith {
            Arith::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// Index of the tuple with the given components; `None` unless this is a product.
    pub fn product_element(&self, components: &[usize]) -> Option<usize> {
        match &self.inner.arith {
            Arith::Product { factors, strides } if factors.len() == components.len() => {
                Some(components.iter().zip(strides).map(|(c, s)| c * s).sum())
            }
            _ => None,
        }
    }

    pub fn product_component(&self, a: usize, i: usize) -> Option<usize> {
        match &self.inner.arith {
            Arith::Product { factors, strides } => factors.get(i).map(|f| (a / strides[i]) % f.card()),
            _ => None,
        }
    }

    /// For sub-carrier rings, the base element carried by `a`.
    pub fn sub_carrier_member(&self, a: usize) -> Option<usize> {
        match &self.inner.arith {
            Arith::Subring { members, .. } => members.get(a).copied(),
            _ => None,
        }
    }

    /// Canonical base element for quotient rings.
    pub fn coset_representative(&self, a: usize) -> Option<usize> {
        match &self.inner.arith {
            Arith::Quotient { reps, .. } => reps.get(a).copied(),
            _ => None,
        }
    }

    /// Element generators hinted by the construction, used to seed
    /// generating-set searches.
    pub(crate) fn structural_generators(&self) -> Vec<usize> {
        match &self.inner.arith {
            Arith::ZMod(_) | Arith::Explicit { .. } => Vec::new(),
            Arith::Galois(g) => {
                if g.degree > 1 {
                    vec![g.p]
                } else {
                    Vec::new()
                }
            }
            Arith::Product { factors, strides } => {
                let mut out = Vec::new();
                for (i, f) in factors.iter().enumerate() {
                    out.push(f.one() * strides[i]);
                    out.extend(f.structural_generators().into_iter().map(|g| g * strides[i]));
                }
                out
            }
            Arith::Quotient { base, class_of, .. } => {
                base.structural_generators().into_iter().map(|g| class_of[g] as usize).collect()
            }
            Arith::Subring { .. } => Vec::new(),
        }
    }

    /// Human-readable rendering of an element in the constructor's notation.
    pub fn format_element(&self, a: usize) -> String {
        match &self.inner.arith {
            Arith::ZMod(_) => a.to_string(),
            Arith::Galois(g) => {
                if g.degree == 1 {
                    a.to_string()
                } else {
                    let d: Vec<String> = g.digits(a).iter().map(|c| c.to_string()).collect();
                    format!("[{}]", d.join(","))
                }
            }
            Arith::Product { factors, strides } => {
                let parts: Vec<String> =
                    factors.iter().zip(strides).map(|(f, s)| f.format_element((a / s) % f.card())).collect();
                format!("({})", parts.join(","))
            }
            Arith::Quotient { base, reps, .. } => base.format_element(reps[a]),
            Arith::Subring { base, members, .. } => base.format_element(members[a]),
            Arith::Explicit { labels } => labels[a].clone(),
        }
    }

    /// Parses an element literal: a canonical index, a tuple `(x,y,..)` for
    /// products, or a coefficient list `[c0,c1,..]` for Galois fields.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        let bad = |m: &str| Error::Parse { offset: 0, message: format!("element `{t}`: {m}") };
        if let Ok(k) = t.parse::<usize>() {
            self.check_element(k)?;
            return Ok(k);
        }
        match &self.inner.arith {
            Arith::Product { factors, .. } if t.starts_with('(') && t.ends_with(')') => {
                let parts = split_top_level(&t[1..t.len() - 1]);
                if parts.len() != factors.len() {
                    return Err(bad("wrong tuple length"));
                }
                let comps = factors
                    .iter()
                    .zip(&parts)
                    .map(|(f, p)| f.parse_element(p))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.product_element(&comps).expect("product"))
            }
            Arith::Galois(g) if t.starts_with('[') && t.ends_with(']') => {
                let coeffs = t[1..t.len() - 1]
                    .split(',')
                    .map(|c| c.trim().parse::<usize>().map_err(|_| bad("bad coefficient")))
                    .collect::<Result<Vec<_>>>()?;
                if coeffs.len() > g.degree || coeffs.iter().any(|&c| c >= g.p) {
                    return Err(bad("coefficient list does not fit the field"));
                }
                let mut d = coeffs;
                d.resize(g.degree, 0);
                Ok(g.from_digits(&d))
            }
            Arith::Quotient { base, class_of, .. } => Ok(class_of[base.parse_element(t)?] as usize),
            _ => Err(bad("unrecognised literal")),
        }
    }

    /// Exhaustive check of every ring axiom.
    pub fn validate_axioms(&self) -> Result<()> {
        self.validate_axioms_up_to(usize::MAX)
    }

    /// Binary laws always; the cubic laws only when `card <= cubic_card`.
    pub fn validate_axioms_up_to(&self, cubic_card: usize) -> Result<()> {
        let n = self.card();
        let one = self.one();
        let fail = |m: String| Err(Error::AxiomViolation(m));
        if n == 1 && one != 0 {
            return fail("unit outside carrier".into());
        }
        for a in 0..n {
            if self.add(a, 0) != a {
                return fail(format!("{a} + 0 != {a}"));
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail(format!("{a} + (-{a}) != 0"));
            }
            if self.mul(one, a) != a {
                return fail(format!("1 * {a} != {a}"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a}, {b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("multiplication not commutative at ({a}, {b})"));
                }
            }
        }
        if n > cubic_card {
            return Ok(());
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                let a_plus_b = self.add(a, b);
                for c in 0..n {
                    if self.add(a_plus_b, c) != self.add(a, self.add(b, c)) {
                        return fail(format!("addition not associative at ({a}, {b}, {c})"));
                    }
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!("multiplication not associative at ({a}, {b}, {c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab, self.mul(a, c)) {
                        return fail(format!("distributivity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_bound(card: u128, opts: &BuildOptions) -> Result<()> {
    if card > opts.max_card as u128 {
        Err(Error::SizeBound { card, bound: opts.max_card })
    } else {
        Ok(())
    }
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    parts.push(cur);
    parts
}

fn product_op(factors: &[FiniteRing], strides: &[usize], a: usize, b: usize, op: impl Fn(&FiniteRing, usize, usize) -> usize) -> usize {
    factors
        .iter()
        .zip(strides)
        .map(|(f, &s)| op(f, (a / s) % f.card(), (b / s) % f.card()) * s)
        .sum()
}

fn raw_add(arith: &Arith, a: usize, b: usize) -> usize {
    match arith {
        Arith::ZMod(n) => (a + b) % n,
        Arith::Galois(g) => g.add(a, b),
        Arith::Product { factors, strides } => product_op(factors, strides, a, b, FiniteRing::add),
        Arith::Quotient { base, reps, class_of } => class_of[base.add(reps[a], reps[b])] as usize,
        Arith::Subring { base, members, position } => position[base.add(members[a], members[b])] as usize,
        Arith::Explicit { .. } => unreachable!("explicit rings always carry tables"),
    }
}

fn raw_mul(arith: &Arith, a: usize, b: usize) -> usize {
    match arith {
        Arith::ZMod(n) => (a * b) % n,
        Arith::Galois(g) => g.mul(a, b),
        Arith::Product { factors, strides } => product_op(factors, strides, a, b, FiniteRing::mul),
        Arith::Quotient { base, reps, class_of } => class_of[base.mul(reps[a], reps[b])] as usize,
        Arith::Subring { base, members, position } => position[base.mul(members[a], members[b])] as usize,
        Arith::Explicit { .. } => unreachable!("explicit rings always carry tables"),
    }
}

fn raw_neg(arith: &Arith, a: usize) -> usize {
    match arith {
        Arith::ZMod(n) => (n - a) % n,
        Arith::Galois(g) => g.neg(a),
        Arith::Product { factors, strides } => {
            factors.iter().zip(strides).map(|(f, &s)| f.neg((a / s) % f.card()) * s).sum()
        }
        Arith::Quotient { base, reps, class_of } => class_of[base.neg(reps[a])] as usize,
        Arith::Subring { base, members, position } => position[base.neg(members[a])] as usize,
        Arith::Explicit { .. } => unreachable!("explicit rings always carry tables"),
    }
}

/// `A / I` with its projection; `ker` of the projection is exactly `I`.
pub fn quotient_ring(ideal: &Ideal) -> (FiniteRing, RingHom) {
    let (ring, class_of, _) = FiniteRing::quotient_by(ideal);
    let table = class_of.into_iter().map(|c| c as usize).collect();
    let q = RingHom::from_table_unchecked(ideal.ring().clone(), ring.clone(), table);
    (ring, q)
}

/// The product ring and its projections.
pub fn product_ring(factors: &[FiniteRing], empty: EmptyProduct) -> Result<(FiniteRing, Vec<RingHom>)> {
    let ring = FiniteRing::product(factors, empty)?;
    let projections = (0..factors.len())
        .map(|i| {
            let table = ring.elements().map(|a| ring.product_component(a, i).unwrap()).collect();
            RingHom::from_table_unchecked(ring.clone(), factors[i].clone(), table)
        })
        .collect();
    Ok((ring, projections))
}

/// `x |-> (f_1(x), .., f_k(x))` into a product ring built from the codomains.
pub fn pairing(maps: &[RingHom], target: &FiniteRing) -> Result<RingHom> {
    let domain = maps
        .first()
        .map(|f| f.domain().clone())
        .ok_or_else(|| Error::Mismatch("pairing needs a common domain; use pairing_from for empty lists".into()))?;
    pairing_from(&domain, maps, target)
}

/// [`pairing`] with an explicit domain, so an empty list maps into the trivial product.
pub fn pairing_from(domain: &FiniteRing, maps: &[RingHom], target: &FiniteRing) -> Result<RingHom> {
    let factors = target.product_factors().ok_or_else(|| Error::Mismatch("pairing target is not a product".into()))?;
    if factors.len() != maps.len()
        || maps.iter().zip(factors).any(|(f, c)| f.codomain() != c || f.domain() != domain)
    {
        return Err(Error::Mismatch("pairing components do not match the product factors".into()));
    }
    let table = domain
        .elements()
        .map(|a| {
            let comps: Vec<usize> = maps.iter().map(|f| f.apply(a)).collect();
            target.product_element(&comps).unwrap()
        })
        .collect();
    RingHom::new(domain.clone(), target.clone(), table)
}

/// The sub-carrier ring `A e = {a e}` with unit `e`, and the surjection `a |-> a e`.
pub fn corner_ring(ring: &FiniteRing, e: usize) -> Result<(FiniteRing, RingHom)> {
    ring.check_element(e)?;
    if !ring.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let members: Vec<usize> = ring.elements().map(|a| ring.mul(a, e)).collect();
    let corner = FiniteRing::sub_carrier(ring, &members, e)?;
    let mut sorted = members.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let table = members.iter().map(|m| sorted.binary_search(m).unwrap()).collect();
    let m_e = RingHom::new(ring.clone(), corner.clone(), table)?;
    Ok((corner, m_e))
}

/// The equalizer subring `{a : f(a) = g(a)}` with its inclusion.
pub fn equalizer(f: &RingHom, g: &RingHom) -> Result<(FiniteRing, RingHom)> {
    if f.domain() != g.domain() || f.codomain() != g.codomain() {
        return Err(Error::Mismatch("equalizer of maps with different ends".into()));
    }
    let dom = f.domain();
    let members: Vec<usize> = dom.elements().filter(|&a| f.apply(a) == g.apply(a)).collect();
    let sub = FiniteRing::sub_carrier(dom, &members, dom.one())?;
    let inclusion = RingHom::new(sub.clone(), dom.clone(), members)?;
    Ok((sub, inclusion))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_basics() {
        let r = FiniteRing::zmod(6).unwrap();
        assert_eq!(r.card(), 6);
        assert_eq!(r.add(4, 5), 3);
        assert_eq!(r.mul(4, 5), 2);
        assert_eq!(r.neg(2), 4);
        assert!(r.validate_axioms().is_ok());
        assert_eq!(r.units(), vec![1, 5]);
        assert!(matches!(FiniteRing::zmod(0), Err(Error::ZeroModulus(0))));
    }

    #[test]
    fn trivial_ring_permitted() {
        let t = FiniteRing::trivial();
        assert_eq!(t.card(), 1);
        assert_eq!(t.one(), t.zero());
        assert!(t.validate_axioms().is_ok());
        assert!(!t.is_field());
        assert!(t.is_reduced());
    }

    #[test]
    fn nilradicals() {
        let r = FiniteRing::zmod(12).unwrap();
        assert_eq!(r.nilradical_elements(), &[0, 6]);
        assert!(!r.is_reduced());
        assert!(FiniteRing::zmod(6).unwrap().is_reduced());
        assert_eq!(FiniteRing::galois_field(8).unwrap().nilradical_elements(), &[0]);
    }

    #[test]
    fn galois_fields_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FiniteRing::galois_field(q).unwrap();
            assert_eq!(f.card() as u64, q);
            assert!(f.is_field(), "GF({q})");
            f.validate_axioms().unwrap();
        }
        assert!(matches!(FiniteRing::galois_field(6), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn product_is_componentwise() {
        let (p, proj) = product_ring(
            &[FiniteRing::zmod(2).unwrap(), FiniteRing::zmod(3).unwrap()],
            EmptyProduct::Reject,
        )
        .unwrap();
        assert_eq!(p.card(), 6);
        p.validate_axioms().unwrap();
        // (1,1) is the unit, encoded 1*3 + 1
        assert_eq!(p.one(), 4);
        assert!(proj.iter().all(|q| q.is_surjective()));
        assert_eq!(p.format_element(5), "(1,2)");
        assert_eq!(p.parse_element("(1,2)").unwrap(), 5);
    }

    #[test]
    fn empty_product_needs_flag() {
        assert!(matches!(FiniteRing::product(&[], EmptyProduct::Reject), Err(Error::EmptyProduct)));
        let t = FiniteRing::product(&[], EmptyProduct::Trivial).unwrap();
        assert!(t.is_trivial());
    }

    #[test]
    fn corner_ring_has_unit_e() {
        let r = FiniteRing::zmod(6).unwrap();
        let (c, m) = corner_ring(&r, 4).unwrap();
        assert_eq!(c.card(), 3);
        assert_eq!(c.sub_carrier_member(c.one()), Some(4));
        assert!(m.is_surjective());
        assert!(matches!(corner_ring(&r, 2), Err(Error::NotIdempotent(2))));
    }

    #[test]
    fn equalizer_of_automorphisms() {
        // Frobenius and identity on GF(4) agree exactly on GF(2)
        let f = FiniteRing::galois_field(4).unwrap();
        let frob = RingHom::new(f.clone(), f.clone(), f.elements().map(|a| f.mul(a, a)).collect()).unwrap();
        let (eq, inc) = equalizer(&frob, &RingHom::identity(&f)).unwrap();
        assert_eq!(eq.card(), 2);
        assert!(inc.is_injective());
    }

    #[test]
    fn size_bound_enforced() {
        let opts = BuildOptions { max_card: 10, ..BuildOptions::default() };
        assert!(matches!(FiniteRing::zmod_with(11, &opts), Err(Error::SizeBound { .. })));
        let z4 = FiniteRing::zmod(4).unwrap();
        assert!(FiniteRing::product_with(&[z4.clone(), z4], EmptyProduct::Reject, &opts).is_err());
    }
}
