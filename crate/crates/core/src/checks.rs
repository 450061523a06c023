//! Invariant suites over a corpus of small rings.

use crate::boolean_idempotents::{boolean_algebra_of, j_map, naturality_check};
use crate::error::Result;
use crate::ring::{build_ring, enumerate_homs, FiniteRing, RingHom};
use crate::spectral_sheaf::{affine_agreement_check, affine_sections, global_sections_sheafified, stalk, PresheafOnBasis};
use crate::spectrum::{is_boolean_space, primes_by_ideal_scan, spectrum};
use crate::vn_hull::{hull_idempotent_check, vn_hull};
use crate::vn_regular::{is_vn_regular, split_by_idempotent, tri_equivalence};

/// Field orders up to 16.
const SMALL_FIELDS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

fn field_expr(q: u64) -> String {
    if crate::ring::is_prime_number(q) {
        format!("Z/{q}")
    } else {
        format!("GF({q})")
    }
}

/// `Z/n` for `n <= min(max_card, 64)` and a few products and extension fields.
pub fn corpus(max_card: usize) -> Vec<(String, FiniteRing)> {
    let mut out: Vec<(String, FiniteRing)> = (1..=max_card.min(64) as u64)
        .map(|n| (format!("Z/{n}"), FiniteRing::zmod(n).unwrap()))
        .collect();
    let extra = [
        "GF(4)",
        "GF(8)",
        "GF(9)",
        "GF(16)",
        "GF(25)",
        "GF(27)",
        "GF(32)",
        "GF(49)",
        "GF(64)",
        "Z/2 x Z/2",
        "Z/2 x Z/2 x Z/2",
        "Z/2 x Z/2 x Z/2 x Z/2",
        "Z/4 x Z/2",
        "Z/4 x Z/4",
        "Z/4 x Z/3",
        "Z/3 x Z/3",
        "Z/3 x Z/9",
        "GF(4) x Z/2",
        "GF(4) x Z/3",
        "GF(4) x Z/4",
        "GF(4) x GF(4)",
        "GF(8) x Z/2",
        "GF(9) x Z/2",
        "GF(9) x Z/3",
        "Z/8 x Z/2",
        "Z/2 x Z/2 x Z/3",
        "Z/2 x Z/3 x Z/5",
        "Z/4 x Z/2 x Z/2",
        "Z/8 / (4)",
        "(Z/4 x Z/4) / (5)",
        "(Z/2 x Z/2 x Z/2) / (1)",
    ];
    for src in extra {
        if let Ok(r) = build_ring(src) {
            if r.card() <= max_card {
                out.push((src.to_string(), r));
            }
        }
    }
    out
}

/// Every product of fields with total order at most `max_card`, including the
/// empty product, in a fixed order.
pub fn vn_targets(max_card: usize) -> Vec<(String, FiniteRing)> {
    fn go(start: usize, card: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        for (i, &q) in SMALL_FIELDS.iter().enumerate().skip(start) {
            if card * q <= max {
                cur.push(q);
                go(i, card * q, max, cur, out);
                cur.pop();
            }
        }
    }
    let mut shapes = Vec::new();
    go(0, 1, max_card as u64, &mut Vec::new(), &mut shapes);
    shapes
        .into_iter()
        .map(|shape| {
            if shape.is_empty() {
                return ("0".to_string(), FiniteRing::trivial());
            }
            let src = shape.iter().map(|&q| field_expr(q)).collect::<Vec<_>>().join(" x ");
            let r = build_ring(&src).expect("fields build");
            (src, r)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckOutcome {
        CheckOutcome { name, passed, detail: detail.into() }
    }
}

/// Size limits for the heavier suites.
#[derive(Clone, Copy, Debug)]
pub struct CheckLimits {
    /// Largest target for hom enumeration.
    pub target_card: usize,
    /// Largest ring for the per-presentation sheaf checks.
    pub sheaf_card: usize,
    /// Largest ring for the exhaustive ideal scan.
    pub ideal_scan_card: usize,
}

impl Default for CheckLimits {
    fn default() -> Self {
        CheckLimits { target_card: 16, sheaf_card: 36, ideal_scan_card: 128 }
    }
}

/// Number of `g : vN(A) -> V` with `g ∘ η = f`, for every `f : A -> V`;
/// returns the first `f` whose count is not one, or whose componentwise
/// factorization differs from the unique one.
pub fn factorization_failures(ring: &FiniteRing, targets: &[(String, FiniteRing)]) -> Result<Vec<String>> {
    let h = vn_hull(ring)?;
    let mut failures = Vec::new();
    for (name, v) in targets {
        let candidates = enumerate_homs(&h.hull, v)?;
        for f in enumerate_homs(ring, v)? {
            let matching: Vec<&RingHom> = candidates.iter().filter(|g| g.compose(&h.eta).unwrap() == f).collect();
            let built = h.factorize(&f);
            let ok = matching.len() == 1 && built.as_ref().is_ok_and(|g| g == matching[0]);
            if !ok {
                failures.push(format!("{name}: {:?} has {} factorizations", f.table(), matching.len()));
            }
        }
    }
    Ok(failures)
}

/// Runs every invariant that applies to `ring`.
pub fn check_ring(ring: &FiniteRing, limits: &CheckLimits) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let regular = is_vn_regular(ring);
    let is_regular = regular.is_regular();

    out.push(CheckOutcome::new("ring axioms", ring.validate_axioms().is_ok(), ""));
    let tri = tri_equivalence(ring);
    out.push(CheckOutcome::new(
        "characterizations agree",
        tri.is_ok(),
        tri.err().map(|a| format!("element {}", ring.format_element(a))).unwrap_or_default(),
    ));
    out.push(CheckOutcome::new(
        "regular iff reduced",
        is_regular == ring.is_reduced(),
        format!("regular={is_regular}, reduced={}", ring.is_reduced()),
    ));
    let spec = spectrum(ring);
    out.push(CheckOutcome::new("regular spectrum is discrete", !is_regular || is_boolean_space(&spec), ""));
    if ring.card() <= limits.ideal_scan_card {
        let scan = primes_by_ideal_scan(ring);
        out.push(CheckOutcome::new(
            "spectrum matches ideal scan",
            scan.as_slice() == spec.primes(),
            format!("{} primes", spec.len()),
        ));
    }

    let boolean = boolean_algebra_of(ring)?;
    let axioms = boolean.algebra.axioms();
    out.push(CheckOutcome::new(
        "idempotents form a Boolean algebra",
        axioms.all() && axioms.meet_distributes_over_join == axioms.join_distributes_over_meet,
        format!("{} idempotents", boolean.carrier.len()),
    ));
    let j = j_map(ring)?;
    out.push(CheckOutcome::new("j is an isomorphism on regular rings", !is_regular || j.is_isomorphism(), ""));

    let mut split_failures = Vec::new();
    for &e in ring.idempotents() {
        if let Err(err) = split_by_idempotent(ring, e) {
            split_failures.push(format!("{}: {err}", ring.format_element(e)));
        }
    }
    out.push(CheckOutcome::new("idempotent splitting", split_failures.is_empty(), split_failures.join("; ")));

    let hull = vn_hull(ring)?;
    let inv = hull.invariants()?;
    out.push(CheckOutcome::new("hull invariants", inv.all(), format!("{inv:?}")));
    out.push(CheckOutcome::new("hull is idempotent", hull_idempotent_check(ring)?, hull.describe()));

    let targets = vn_targets(limits.target_card);
    let failures = factorization_failures(ring, &targets)?;
    out.push(CheckOutcome::new("unique factorization through the hull", failures.is_empty(), failures.join("; ")));
    if is_regular {
        let mut bad = Vec::new();
        for (name, v) in &targets {
            for f in enumerate_homs(ring, v)? {
                if !naturality_check(&f)? {
                    bad.push(format!("{name}: {:?}", f.table()));
                }
            }
        }
        out.push(CheckOutcome::new("j is natural", bad.is_empty(), bad.join("; ")));
    }

    let mut stalk_failures = Vec::new();
    for p in spec.primes() {
        if let Err(err) = stalk(ring, p) {
            stalk_failures.push(format!("{p:?}: {err}"));
        }
    }
    out.push(CheckOutcome::new("stalks are residue fields", stalk_failures.is_empty(), stalk_failures.join("; ")));
    out.push(CheckOutcome::new(
        "sheafified global sections match the hull",
        global_sections_sheafified(ring)?.agrees_with_hull(),
        "",
    ));
    if ring.card() <= limits.sheaf_card {
        let presheaf = PresheafOnBasis::build(ring)?;
        let laws = presheaf.check_laws()?;
        out.push(CheckOutcome::new("presheaf laws", laws.all(), format!("{laws:?}")));
        let mut cs = true;
        for p in 0..spec.len() {
            cs &= presheaf.collectively_surjective(p)?;
        }
        out.push(CheckOutcome::new("stalk cone is collectively surjective", cs, ""));
        out.push(CheckOutcome::new(
            "affine global sections recover the ring",
            affine_sections(ring, spec.points())?.canonical.is_isomorphism(),
            "",
        ));
        if is_regular {
            out.push(CheckOutcome::new("residue and affine sheaves agree", affine_agreement_check(ring)?, ""));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_cover_small_regular_rings() {
        let t = vn_targets(16);
        assert!(t.iter().all(|(_, r)| r.card() <= 16 && is_vn_regular(r).is_regular()));
        assert!(t.iter().any(|(n, _)| n == "Z/2 x Z/2 x Z/2 x Z/2"));
        assert!(t.iter().any(|(n, _)| n == "0"));
        // 16 = 2*2*2*2 = 2*2*4 = 4*4 = 2*8 = 16 and so on; no duplicates
        let mut names: Vec<&String> = t.iter().map(|(n, _)| n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), t.len());
    }

    #[test]
    fn checks_pass_on_small_rings() {
        let limits = CheckLimits { target_card: 6, ..CheckLimits::default() };
        for src in ["Z/9", "Z/12", "Z/1", "GF(4) x Z/2"] {
            let r = build_ring(src).unwrap();
            for c in check_ring(&r, &limits).unwrap() {
                assert!(c.passed, "{src}: {} {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn corpus_respects_bound() {
        assert!(corpus(36).iter().all(|(_, r)| r.card() <= 36));
        assert_eq!(corpus(10).iter().filter(|(n, _)| n.strip_prefix("Z/").is_some_and(|d| d.parse::<u64>().is_ok())).count(), 10);
    }
}
