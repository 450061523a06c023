use serde_json::{json, Value};

use regulus::boolean_idempotents::{boolean_algebra_of, j_map, prime_label};
use regulus::checks::{check_ring, corpus, CheckLimits};
use regulus::lattice::FiniteBooleanAlgebra;
use regulus::ring::{build_ring_with, BuildOptions, FiniteRing, RingHom};
use regulus::spectral_sheaf::{global_sections_sheafified, stalk, PresheafOnBasis};
use regulus::spectrum::{is_boolean_space, spectral_map, spectrum, PointSet, PrimeSpectrum};
use regulus::stone_duality::{
    atom_names, parse_atom_map, parse_boolean_algebra, represent_boolean_algebra, represent_boolean_hom, stone_space,
};
use regulus::vn_hull::{hull_idempotent_check, vn_hull};
use regulus::vn_regular::{is_vn_regular, Regularity};
use regulus::Error;

use crate::report::Report;

pub struct Settings {
    pub max_card: Option<usize>,
    pub field: Option<String>,
}

impl Settings {
    fn build(&self, src: &str) -> Result<FiniteRing, Error> {
        let mut opts = BuildOptions::default();
        if let Some(m) = self.max_card {
            opts.max_card = m;
        }
        build_ring_with(src, &opts)
    }

    fn field(&self) -> Result<FiniteRing, Error> {
        let src = self.field.as_deref().unwrap_or("GF(2)");
        let k = self.build(src)?;
        if k.is_field() {
            Ok(k)
        } else {
            Err(Error::NotAField)
        }
    }
}

fn elems(ring: &FiniteRing, items: impl IntoIterator<Item = usize>) -> Value {
    items.into_iter().map(|a| Value::String(ring.format_element(a))).collect()
}

fn points(spec: &PrimeSpectrum, set: PointSet) -> Value {
    set.iter().map(|i| Value::String(prime_label(&spec.primes()[i]))).collect()
}

fn hom_table(f: &RingHom) -> Value {
    f.domain()
        .elements()
        .map(|a| json!({ "a": f.domain().format_element(a), "image": f.codomain().format_element(f.apply(a)) }))
        .collect()
}

fn spectrum_summary(spec: &PrimeSpectrum) -> Value {
    json!({
        "count": spec.len(),
        "discrete": is_boolean_space(spec),
        "primes": spec.primes().iter().map(|p| json!({ "label": prime_label(p), "card": p.card() })).collect::<Vec<_>>(),
    })
}

pub fn analyze(s: &Settings, src: &str) -> Result<Report, Error> {
    let r = s.build(src)?;
    let spec = spectrum(&r);
    let mut rep = Report::new("analyze", r.to_string());
    rep.put("card", r.card());
    rep.put("characteristic", r.characteristic());
    rep.put("units", elems(&r, r.units()));
    rep.put("idempotents", elems(&r, r.idempotents().iter().copied()));
    rep.put("nilradical", elems(&r, r.nilradical_elements().iter().copied()));
    rep.put("reduced", r.is_reduced());
    rep.put("field", r.is_field());
    match is_vn_regular(&r) {
        Regularity::Regular(v) => {
            rep.put("vn_regular", true);
            let w: Vec<Value> = r
                .elements()
                .map(|a| {
                    let t = v.witness(a);
                    json!({
                        "a": r.format_element(a),
                        "x": r.format_element(t.x),
                        "e": r.format_element(t.e),
                        "b": r.format_element(t.b),
                    })
                })
                .collect();
            rep.put("witness", w);
        }
        Regularity::NotRegular { counterexample } => {
            rep.put("vn_regular", false);
            rep.put("counterexample", r.format_element(counterexample));
        }
    }
    rep.put("spectrum", spectrum_summary(&spec));
    Ok(rep)
}

pub fn hull(s: &Settings, src: &str) -> Result<Report, Error> {
    let r = s.build(src)?;
    let h = vn_hull(&r)?;
    let inv = h.invariants()?;
    let idem = hull_idempotent_check(&r)?;
    let m = spectral_map(&h.eta);
    let mut rep = Report::new("hull", r.to_string());
    rep.put("hull", h.describe());
    rep.put("hull_card", h.hull.card());
    rep.put("eta_is_isomorphism", h.eta.is_isomorphism());
    rep.put("eta", hom_table(&h.eta));
    rep.put("kernel", elems(&r, h.eta.kernel().elements().iter().copied()));
    let bijection: Vec<Value> = m
        .map
        .iter()
        .enumerate()
        .map(|(q, &p)| {
            json!({ "hull_prime": prime_label(&m.source.primes()[q]), "source_prime": prime_label(&m.target.primes()[p]) })
        })
        .collect();
    rep.put("spectral_bijection", bijection);
    rep.put(
        "checks",
        json!({
            "hull_is_regular": inv.hull_is_regular,
            "kernel_is_nilradical": inv.kernel_is_nilradical,
            "spectral_bijection": inv.spectral_bijection,
            "gamma_inverse": inv.gamma_inverse,
            "residue_isomorphisms": inv.residue_isomorphisms,
            "idempotent": idem,
        }),
    );
    rep.failed = !(inv.all() && idem);
    Ok(rep)
}

pub fn boolean(s: &Settings, src: &str) -> Result<Report, Error> {
    let r = s.build(src)?;
    let b = boolean_algebra_of(&r)?;
    let j = j_map(&r)?;
    let alg = &b.algebra;
    let mut rep = Report::new("bool", r.to_string());
    rep.put("card", alg.card());
    rep.put("elements", elems(&r, b.carrier.iter().copied()));
    rep.put("atoms", elems(&r, alg.atoms().into_iter().map(|i| b.carrier[i])));
    let ax = alg.axioms();
    rep.put(
        "axioms",
        json!({
            "meet_distributes_over_join": ax.meet_distributes_over_join,
            "join_distributes_over_meet": ax.join_distributes_over_meet,
            "bounded_lattice": ax.bounded_lattice,
            "complemented": ax.complemented,
            "order_bounds": ax.order_bounds,
        }),
    );
    let jt: Vec<Value> = b
        .carrier
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            json!({ "e": r.format_element(e), "D(e)": points(&j.spectrum, PointSet::from_bits(j.hom.apply(i) as u64)) })
        })
        .collect();
    rep.put("j", jt);
    rep.put("j_is_isomorphism", j.is_isomorphism());
    rep.set_dot(alg.hasse_dot(&format!("B({r})")));
    rep.failed = !ax.all();
    Ok(rep)
}

pub fn sheaf(s: &Settings, src: &str) -> Result<Report, Error> {
    let r = s.build(src)?;
    let f = PresheafOnBasis::build(&r)?;
    let spec = &f.spectrum;
    let laws = f.check_laws()?;
    let mut rep = Report::new("sheaf", r.to_string());
    let opens: Vec<Value> = f
        .representatives
        .values()
        .map(|&i| {
            let sec = &f.sections[i];
            json!({
                "a": r.format_element(sec.open.a),
                "b": r.format_element(sec.open.b),
                "points": points(spec, sec.open.points),
                "section_card": sec.ring.card(),
            })
        })
        .collect();
    rep.put("basis_opens", opens);
    let stalks: Vec<Value> = spec
        .primes()
        .iter()
        .map(|p| {
            stalk(&r, p).map(|st| json!({ "prime": prime_label(p), "card": st.section.ring.card() }))
        })
        .collect::<Result<_, _>>()?;
    rep.put("stalks", stalks);
    let g = global_sections_sheafified(&r)?;
    rep.put("global_sections_card", g.ring.card());
    rep.put(
        "checks",
        json!({
            "identity": laws.identity,
            "composition": laws.composition,
            "same_open_isomorphic": laws.same_open_isomorphic,
            "global_sections_match_hull": g.agrees_with_hull(),
        }),
    );
    rep.failed = !(laws.all() && g.agrees_with_hull());
    Ok(rep)
}

fn algebra_json(b: &FiniteBooleanAlgebra) -> Value {
    json!({ "card": b.card(), "atoms": atom_names(b) })
}

pub fn stone(s: &Settings, src: &str) -> Result<Report, Error> {
    let b = parse_boolean_algebra(src)?;
    let k = s.field()?;
    let x = stone_space(&b);
    let rep_b = represent_boolean_algebra(&b, &k)?;
    let mut rep = Report::new("stone", src.trim());
    rep.put("algebra", algebra_json(&b));
    rep.put("stone_space", x.names.clone());
    rep.put("field", k.to_string());
    rep.put("ring", rep_b.ring.to_string());
    rep.put("ring_card", rep_b.ring.card());
    let theta: Vec<Value> = b
        .elements()
        .map(|e| {
            let idem = rep_b.boolean.element(rep_b.theta.apply(e));
            json!({ "b": b.label(e), "theta": rep_b.ring.format_element(idem) })
        })
        .collect();
    rep.put("theta", theta);
    rep.put("theta_is_isomorphism", rep_b.theta.is_isomorphism());
    rep.set_dot(b.hasse_dot(src.trim()));
    Ok(rep)
}

pub fn represent_hom(s: &Settings, domain: &str, codomain: &str, map: &str) -> Result<Report, Error> {
    let b = parse_boolean_algebra(domain)?;
    let b2 = parse_boolean_algebra(codomain)?;
    let h = parse_atom_map(map, &b, &b2)?;
    let k = s.field()?;
    let r = represent_boolean_hom(&h, &k)?;
    let mut rep = Report::new("represent-hom", format!("{} -> {}", domain.trim(), codomain.trim()));
    let src_atoms = atom_names(&b2);
    let dst_atoms = atom_names(&b);
    let dual = h.atom_map();
    rep.put(
        "atom_map",
        dual.iter()
            .enumerate()
            .map(|(i, &d)| json!({ "from": src_atoms[i], "to": dst_atoms[d] }))
            .collect::<Vec<_>>(),
    );
    rep.put(
        "boolean_hom",
        b.elements().map(|e| json!({ "b": b.label(e), "image": b2.label(h.apply(e)) })).collect::<Vec<_>>(),
    );
    rep.put("field", k.to_string());
    rep.put("ring_hom", hom_table(&r.ring_hom));
    rep.put("square_commutes", r.square_commutes);
    let mut dot = String::from("digraph atom_map {\n  rankdir=LR;\n");
    for (i, &d) in dual.iter().enumerate() {
        dot.push_str(&format!("  \"{}'\" -> \"{}\";\n", src_atoms[i], dst_atoms[d]));
    }
    dot.push_str("}\n");
    rep.set_dot(dot);
    rep.failed = !r.square_commutes;
    Ok(rep)
}

pub fn check(s: &Settings, ring: Option<&str>, all: bool) -> Result<Report, Error> {
    let rings: Vec<(String, FiniteRing)> = match ring {
        Some(src) if !all => vec![(src.to_string(), s.build(src)?)],
        _ => corpus(s.max_card.unwrap_or(64)),
    };
    let limits = CheckLimits::default();
    let mut rep = Report::new("check", if all || ring.is_none() { "suite all".to_string() } else { rings[0].0.clone() });
    let mut results = Vec::new();
    let mut failures = 0usize;
    let mut total = 0usize;
    for (name, r) in &rings {
        let outcomes = check_ring(r, &limits)?;
        let regular = is_vn_regular(r).is_regular();
        let list: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                total += 1;
                if !o.passed {
                    failures += 1;
                }
                let mut v = json!({ "check": o.name, "passed": o.passed });
                if !o.passed && !o.detail.is_empty() {
                    v["counterexample"] = o.detail.clone().into();
                }
                v
            })
            .collect();
        results.push(json!({ "ring": name, "vn_regular": regular, "checks": list }));
    }
    rep.put("rings", rings.len());
    rep.put("checks_run", total);
    rep.put("failures", failures);
    rep.put("results", results);
    rep.failed = failures > 0;
    Ok(rep)
}
