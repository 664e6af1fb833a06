use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{
    allowed_j2_values, check_maximal, deduce_epsilon_sequence, deduce_frobenius_dimension,
    padic_admissible, Check, Coverage,
};
use crate::curves::{
    divisor_of_monomial, genus_plane_smooth, gk_unramified_contact_orders, maximal_n,
    weierstrass_nongaps_from_monomials, CurveDescriptor, CurveFamily, CurveModel, Monomial,
    NongapWitness, Place, PlaceCensus, PlaceClass,
};
use crate::numsg::{genus_via_apery, NumericalSemigroup, OrderRole};

/// Bumped only for incompatible changes; fields are added without a bump.
pub const SCHEMA_VERSION: u32 = 1;

/// Gap lists longer than this are left out of reports.
const GAP_LIST_LIMIT: usize = 64;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GenusSection {
    pub formula: u64,
    /// Independent routes to the genus, by name.
    pub cross_checks: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusSection {
    pub total: u64,
    pub expected: u64,
    pub counts: BTreeMap<PlaceClass, u64>,
    pub split_fibers: u64,
    pub inert_fibers: u64,
    pub condition_violations: u64,
    #[serde(default)]
    pub base_total: Option<u64>,
    /// Non-split places plus a few split samples.
    pub places: Vec<Place>,
}

impl CensusSection {
    fn new(census: &PlaceCensus, expected: u64) -> Self {
        CensusSection {
            total: census.total(),
            expected,
            counts: census.counts.clone(),
            split_fibers: census.split_fibers,
            inert_fibers: census.inert_fibers,
            condition_violations: census.condition_violations,
            base_total: census.base_total,
            places: census.places.clone(),
        }
    }
}

/// Report view of a numerical semigroup, optionally at a place.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemigroupFragment {
    pub place: Option<String>,
    pub generators: Vec<u64>,
    pub genus: u64,
    /// Omitted when longer than 64 entries.
    pub gaps: Option<Vec<u64>>,
    pub conductor: u64,
    #[serde(default)]
    pub nongaps_upto: Option<(u64, Vec<u64>)>,
    #[serde(default)]
    pub r: Option<usize>,
    #[serde(default)]
    pub orders: Option<Vec<u64>>,
    #[serde(default)]
    pub witnesses: BTreeMap<u64, NongapWitness>,
}

impl SemigroupFragment {
    /// Fragment for `s`; with `q`, also the non-gaps up to `q+1`, the
    /// Frobenius dimension and the rational-place orders when defined.
    pub fn new(place: Option<String>, s: &NumericalSemigroup, q: Option<u64>) -> Self {
        let gaps = (s.gaps().len() <= GAP_LIST_LIMIT).then(|| s.gaps().to_vec());
        let mut frag = SemigroupFragment {
            place,
            generators: s.generators().to_vec(),
            genus: s.genus(),
            gaps,
            conductor: s.conductor(),
            nongaps_upto: None,
            r: None,
            orders: None,
            witnesses: BTreeMap::new(),
        };
        if let Some(q) = q {
            frag.nongaps_upto = Some((q + 1, s.nongaps_upto(q + 1)));
            frag.r = s.frobenius_dimension(q).ok();
            frag.orders = s.rational_point_orders(q).ok().map(|o| o.orders().to_vec());
        }
        frag
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaceOrders {
    pub place_class: String,
    pub orders: Vec<u64>,
    pub role: OrderRole,
    /// How the sequence was obtained.
    pub source: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DimensionSection {
    pub from_semigroup: Option<usize>,
    pub from_bound: Vec<u64>,
    /// A single value is established by at least one route and consistent
    /// with the other.
    pub conclusive: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub curve: CurveDescriptor,
    pub q: u64,
    pub p: u64,
    pub genus: Option<GenusSection>,
    pub census: Option<CensusSection>,
    pub semigroups: Vec<SemigroupFragment>,
    pub order_sequences: Vec<PlaceOrders>,
    pub frobenius_dimension: Option<DimensionSection>,
    pub epsilon: Option<Vec<u64>>,
    pub checks: Vec<Check>,
    pub assumptions: Vec<String>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(curve: &CurveModel) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            curve: curve.descriptor(),
            q: curve.q(),
            p: curve.characteristic(),
            genus: None,
            census: None,
            semigroups: Vec::new(),
            order_sequences: Vec::new(),
            frobenius_dimension: None,
            epsilon: None,
            checks: Vec::new(),
            assumptions: Vec::new(),
            passed: false,
        }
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    fn fail(&mut self, name: &str, err: impl std::fmt::Display) {
        self.push(Check::new(name, false, err.to_string()));
    }

    fn finish(mut self) -> Self {
        self.passed = self.all_checks_pass();
        self
    }

    pub fn all_checks_pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Knobs for report generation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// Added to the affine-split census count before the maximality check.
    /// Debugging aid for exercising failure paths.
    pub census_delta: i64,
}

/// Runs the full pipeline for a catalog curve: genus, census, maximality,
/// semigroups at distinguished places, order sequences, Frobenius dimension,
/// the generic order sequence and the admissible-`j_2` validation.
///
/// Stage failures become failed checks; the function never errors.
pub fn theorem_report(curve: &CurveModel, options: &ReportOptions) -> VerificationReport {
    let mut report = VerificationReport::new(curve);

    let g = match curve.genus() {
        Ok(g) => g,
        Err(e) => {
            report.fail("genus", e);
            return report.finish();
        }
    };
    report.genus = Some(GenusSection { formula: g, cross_checks: BTreeMap::new() });

    let mut census = match curve.census() {
        Ok(c) => c,
        Err(e) => {
            report.fail("census", e);
            return report.finish();
        }
    };
    if options.census_delta != 0 {
        census.perturb(PlaceClass::AffineSplit, options.census_delta);
        report.assumptions.push(format!("census perturbed by {:+} for testing", options.census_delta));
    }
    let q = curve.q();
    report.census = Some(CensusSection::new(&census, maximal_n(q, g)));
    report.push(check_maximal(&census, g, q));
    report.push(Check::equal("fiber-law-violations", census.condition_violations, 0));

    match curve.family() {
        CurveFamily::Gk { qbar } => gk_pipeline(&mut report, curve, qbar, g, &census),
        CurveFamily::Gsx49 => gsx49_pipeline(&mut report, curve, g),
        CurveFamily::Fk { q } => fk_pipeline(&mut report, curve, q, g, &census),
    }

    if let Some(eps) = &report.epsilon {
        let ok = padic_admissible(eps, report.p);
        report.push(Check::new("epsilon-padic-admissible", ok, format!("{eps:?} at p = {}", report.p)));
    }
    report.finish()
}

fn record_dimension(report: &mut VerificationReport, from_semigroup: Option<usize>, q: u64, g: u64) -> Option<u64> {
    let from_bound: Vec<u64> = deduce_frobenius_dimension(q, g).into_iter().collect();
    let resolved = match from_semigroup {
        Some(r) => from_bound.contains(&(r as u64)).then_some(r as u64),
        None => (from_bound.len() == 1).then(|| from_bound[0]),
    };
    report.push(Check::new(
        "frobenius-dimension-consistent",
        resolved.is_some(),
        format!("semigroup route {from_semigroup:?}, bound route {from_bound:?}"),
    ));
    report.frobenius_dimension =
        Some(DimensionSection { from_semigroup, from_bound, conclusive: resolved.is_some() });
    if let Some(r) = resolved {
        report.push(Check::equal("frobenius-dimension", r, 3));
    }
    resolved
}

fn push_j2_validation(report: &mut VerificationReport, epsilon2: u64, j2: &[(String, u64)], q: u64) {
    if epsilon2 != 2 {
        report.assumptions.push(format!("j_2 list not applicable: ε_2 = {epsilon2}"));
        return;
    }
    let allowed = allowed_j2_values(q);
    for (class, j) in j2 {
        report.push(
            Check::new(
                &format!("j2-allowed[{class}]"),
                allowed.contains(j),
                format!("j_2 = {j}, allowed {allowed:?}"),
            )
            .with_witness(json!({ "j2": j, "allowed": allowed })),
        );
    }
}

fn gk_pipeline(report: &mut VerificationReport, curve: &CurveModel, qbar: u64, g: u64, census: &PlaceCensus) {
    let q = curve.q();
    let d = qbar * qbar - qbar + 1;
    let gens = [qbar.pow(3) - qbar * qbar + qbar, qbar.pow(3), qbar.pow(3) + 1];

    let s = match NumericalSemigroup::from_generators(&gens) {
        Ok(s) => s,
        Err(e) => return report.fail("ramified-semigroup", e),
    };
    let apery = genus_via_apery(&gens).unwrap_or(0);
    if let Some(gs) = report.genus.as_mut() {
        gs.cross_checks.insert("ramified-semigroup-sieve".into(), s.genus());
        gs.cross_checks.insert("ramified-semigroup-apery".into(), apery);
    }
    report.push(Check::equal("ramified-semigroup-genus", s.genus(), g));
    report.push(Check::equal("ramified-semigroup-apery-genus", apery, g));
    report.semigroups.push(SemigroupFragment::new(Some("ramified (P0 and zeros of z)".into()), &s, Some(q)));
    report.assumptions.push(format!(
        "the Weierstrass semigroup at ramified places is <{}, {}, {}>; only its gap count is checked",
        gens[0], gens[1], gens[2]
    ));

    let r = match s.frobenius_dimension(q) {
        Ok(r) => r,
        Err(e) => return report.fail("frobenius-dimension", e),
    };
    let ramified = s.rational_point_orders(q).expect("dimension already validated");
    report.push(Check::equal("ramified-orders", ramified.orders().to_vec(), vec![0, 1, d, q + 1]));
    report.order_sequences.push(PlaceOrders {
        place_class: "ramified".into(),
        orders: ramified.orders().to_vec(),
        role: OrderRole::RationalPlace,
        source: "q+1 minus non-gaps of the ramified semigroup".into(),
    });

    let Some(r) = record_dimension(report, Some(r), q, g) else { return };

    let contacts = match gk_unramified_contact_orders(curve) {
        Ok(h) => h,
        Err(e) => return report.fail("unramified-contact", e),
    };
    let split_points = census.split_fibers;
    let uniform = contacts.len() == 1 && contacts.values().sum::<u64>() == split_points;
    let contact = *contacts.keys().next().unwrap_or(&0);
    report.push(
        Check::new(
            "unramified-tangent-contact",
            uniform && contact == qbar,
            format!("contact orders over {split_points} split fibers: {contacts:?}"),
        )
        .with_witness(json!({ "histogram": contacts })),
    );
    if !(uniform && r == 3 && contact > 1 && contact < q + 1) {
        return;
    }
    let unramified = vec![0, 1, contact, q + 1];
    report.order_sequences.push(PlaceOrders {
        place_class: "unramified".into(),
        orders: unramified.clone(),
        role: OrderRole::RationalPlace,
        source: "tangent line to the Hermitian base has contact q̄; Frobenius dimension 3".into(),
    });
    report.push(Check::equal("unramified-orders", unramified, vec![0, 1, qbar, q + 1]));

    match deduce_epsilon_sequence(&[d, contact], q, curve.characteristic(), Coverage::AllPlaceClasses) {
        Ok(eps) => {
            let seq = eps.sequence.orders().to_vec();
            report.push(Check::equal("epsilon-sequence", seq.clone(), vec![0, 1, qbar, q]));
            push_j2_validation(report, seq[2], &[("ramified".into(), d), ("unramified".into(), contact)], q);
            report.epsilon = Some(seq);
        }
        Err(e) => report.fail("epsilon-sequence", e),
    }
}

fn certified_semigroup(
    report: &mut VerificationReport,
    curve: &CurveModel,
    g: u64,
) -> Option<(NumericalSemigroup, BTreeMap<u64, NongapWitness>)> {
    let q = curve.q();
    let table = curve.divisor_table()?;
    let target = curve.distinguished_place()?;
    let ranges = curve.monomial_ranges(g);
    let certs = match weierstrass_nongaps_from_monomials(&table, &target, &ranges, q) {
        Ok(c) => c,
        Err(e) => {
            report.fail("monomial-scan", e);
            return None;
        }
    };
    let gens: Vec<u64> = certs.keys().copied().filter(|&v| v > 0).collect();
    match NumericalSemigroup::from_generators(&gens).and_then(|s| {
        let minimal: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&v| !s.nongaps_upto(v - 1).iter().any(|&a| a > 0 && s.contains((v - a) as i64)))
            .collect();
        NumericalSemigroup::from_generators(&minimal)
    }) {
        Ok(s) => {
            let mut frag = SemigroupFragment::new(Some(target.to_string()), &s, Some(q));
            frag.witnesses = certs.clone();
            report.semigroups.push(frag);
            Some((s, certs))
        }
        Err(e) => {
            report.fail("certified-semigroup", e);
            None
        }
    }
}

fn gsx49_pipeline(report: &mut VerificationReport, curve: &CurveModel, g: u64) {
    let q = curve.q();
    let Some((s, certs)) = certified_semigroup(report, curve, g) else { return };

    for v in [5u64, 10, 12, 13] {
        let witness = certs.get(&v);
        let ok = match witness {
            Some(NongapWitness::Monomial { exponents }) => {
                let i = exponents.get("z").copied().unwrap_or(0);
                let j = -exponents.get("t+1").copied().unwrap_or(0);
                i >= 0 && j >= 0 && 3 * i >= 8 * j && 7 * i - 16 * j == v as i64
            }
            _ => false,
        };
        report.push(
            Check::new(&format!("monomial-nongap[{v}]"), ok, format!("witness {}", json!(witness)))
                .with_witness(json!(witness)),
        );
    }
    if let Some(gs) = report.genus.as_mut() {
        gs.cross_checks.insert("certified-semigroup-gaps".into(), s.genus());
    }
    report.push(Check::equal("certified-semigroup-genus", s.genus(), g));
    report.push(Check::equal("nongaps-upto-8", s.nongaps_upto(8), vec![0, 5, 7, 8]));
    report.assumptions.push(
        "monomial pole orders form a subsemigroup of H(Pbar_inf); equal gap counts force equality".into(),
    );

    let r = s.frobenius_dimension(q).ok();
    let Some(r) = record_dimension(report, r, q, g) else { return };
    if r != 3 {
        return;
    }
    let orders = match s.rational_point_orders(q) {
        Ok(o) => o.orders().to_vec(),
        Err(e) => return report.fail("orders-at-Pbar_inf", e),
    };
    report.order_sequences.push(PlaceOrders {
        place_class: "Pbar_inf".into(),
        orders: orders.clone(),
        role: OrderRole::RationalPlace,
        source: "q+1 minus non-gaps of the certified semigroup".into(),
    });
    report.push(Check::equal("orders-at-Pbar_inf", orders.clone(), vec![0, 1, 3, 8]));
    let j2 = orders[2];
    report.push(Check::equal("j2-equals-two-thirds-value", j2, q + 1 - 2 * (q + 1) / 3));

    let naive = [0, 1, j2, q];
    report.push(Check::new(
        "padic-rejects-observed-j2",
        !padic_admissible(&naive, curve.characteristic()),
        format!("{naive:?} at p = {}", curve.characteristic()),
    ));
    match deduce_epsilon_sequence(&[j2], q, curve.characteristic(), Coverage::Partial) {
        Ok(eps) => {
            let seq = eps.sequence.orders().to_vec();
            report.push(Check::equal("epsilon-sequence", seq.clone(), vec![0, 1, 2, 7]));
            push_j2_validation(report, seq[2], &[("Pbar_inf".into(), j2)], q);
            report.epsilon = Some(seq);
        }
        Err(e) => report.fail("epsilon-sequence", e),
    }
}

fn fk_pipeline(report: &mut VerificationReport, curve: &CurveModel, q: u64, g: u64, census: &PlaceCensus) {
    let base_genus = genus_plane_smooth((q + 1) / 3).unwrap_or(0);
    if let Some(gs) = report.genus.as_mut() {
        let hurwitz = 1 + 3 * (base_genus as i64 - 1) + (q as i64 + 1);
        gs.cross_checks.insert("riemann-hurwitz".into(), hurwitz as u64);
    }
    report.push(Check::equal("base-curve-maximal", census.base_total, Some(maximal_n(q, base_genus))));
    report.push(Check::equal("ramified-places", census.ramified_total(), q + 1));

    let Some(r) = record_dimension(report, None, q, g) else { return };
    if r != 3 {
        return;
    }

    let (Some(table), Some(target), Some(line)) =
        (curve.divisor_table(), curve.distinguished_place(), curve.distinguished_symbol())
    else {
        return report.fail("divisor-table", "FK table unavailable");
    };
    let ratio: Monomial = [("x".to_string(), 1), (line, -1)].into();
    match divisor_of_monomial(&table, &ratio) {
        Ok(d) => {
            let poles = d.pole_part();
            let base_pole = poles.valuation(&target);
            let only_target = poles.support().all(|p| *p == target);
            let upstairs = base_pole as u64 * table.ramification_at(&target);
            report.push(
                Check::new(
                    "pole-order-x-over-line",
                    only_target && upstairs == q - 2,
                    format!("(x/(y-β))_∞ = {base_pole}·{target} on the base, pole order {upstairs} upstairs"),
                )
                .with_witness(json!({ "base_pole": base_pole, "upstairs": upstairs })),
            );
        }
        Err(e) => return report.fail("pole-order-x-over-line", e),
    }

    let Some((s, _)) = certified_semigroup(report, curve, g) else { return };
    let nongaps = s.nongaps_upto(q + 1);
    report.push(Check::equal("certified-nongaps-upto-q+1", nongaps, vec![0, q - 2, q, q + 1]));
    report.assumptions.push(
        "with r = 3 exactly four non-gaps lie in [0, q+1], so certified ones exhaust them".into(),
    );
    let orders = match s.rational_point_orders(q) {
        Ok(o) => o.orders().to_vec(),
        Err(e) => return report.fail("orders-at-distinguished-place", e),
    };
    report.order_sequences.push(PlaceOrders {
        place_class: format!("over {target}"),
        orders: orders.clone(),
        role: OrderRole::RationalPlace,
        source: "q+1 minus certified non-gaps".into(),
    });
    report.push(Check::equal("orders-at-distinguished-place", orders.clone(), vec![0, 1, 3, q + 1]));

    let j2 = orders[2];
    match deduce_epsilon_sequence(&[j2], q, curve.characteristic(), Coverage::Partial) {
        Ok(eps) => {
            let seq = eps.sequence.orders().to_vec();
            report.push(Check::equal("epsilon-sequence", seq.clone(), vec![0, 1, 2, q]));
            push_j2_validation(report, seq[2], &[("distinguished".into(), j2)], q);
            report.epsilon = Some(seq);
        }
        Err(e) => report.fail("epsilon-sequence", e),
    }
}

/// Human-readable summary of a report.
pub fn render_text(report: &VerificationReport, verbose: bool) -> String {
    let mut out = String::new();
    let c = &report.curve;
    let _ = writeln!(out, "curve      {}  over F_{}^{}  (q = {}, p = {})", c.name, c.field.p, c.field.k, report.q, report.p);
    for eq in &c.equations {
        let _ = writeln!(out, "           {eq}");
    }
    if let Some(g) = &report.genus {
        let _ = write!(out, "genus      {}", g.formula);
        for (k, v) in &g.cross_checks {
            let _ = write!(out, "  [{k}: {v}]");
        }
        let _ = writeln!(out);
    }
    if let Some(cs) = &report.census {
        let _ = writeln!(out, "places     N = {} (maximal bound {})", cs.total, cs.expected);
        for (class, n) in &cs.counts {
            let _ = writeln!(out, "           {class:<24} {n}");
        }
        let _ = writeln!(
            out,
            "           split fibers {}, inert fibers {}, violations {}",
            cs.split_fibers, cs.inert_fibers, cs.condition_violations
        );
        if verbose {
            for p in &cs.places {
                let _ = writeln!(out, "           {} {} e={}", p.id, p.class, p.ramification);
            }
        }
    }
    for s in &report.semigroups {
        let _ = writeln!(
            out,
            "semigroup  {} <{}> genus {} conductor {}",
            s.place.as_deref().unwrap_or("-"),
            join(&s.generators),
            s.genus,
            s.conductor
        );
        if let Some((b, ng)) = &s.nongaps_upto {
            let _ = writeln!(out, "           non-gaps <= {b}: {}", join(ng));
        }
    }
    for o in &report.order_sequences {
        let _ = writeln!(out, "orders     {:<24} ({})", o.place_class, join(&o.orders));
    }
    if let Some(d) = &report.frobenius_dimension {
        let _ = writeln!(
            out,
            "dimension  semigroup {:?}, bound {:?}, conclusive {}",
            d.from_semigroup, d.from_bound, d.conclusive
        );
    }
    if let Some(e) = &report.epsilon {
        let _ = writeln!(out, "epsilon    ({})", join(e));
    }
    for ch in &report.checks {
        let mark = if ch.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{mark}] {:<32} {}", ch.name, ch.detail);
    }
    if verbose {
        for a in &report.assumptions {
            let _ = writeln!(out, "assume     {a}");
        }
    }
    let _ = writeln!(out, "result     {}", if report.passed { "PASS" } else { "FAIL" });
    out
}

fn join(v: &[u64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gsx49_report_passes() {
        let curve = CurveModel::gsx49().unwrap();
        let r = theorem_report(&curve, &ReportOptions::default());
        let failed: Vec<_> = r.failed_checks().collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(r.epsilon, Some(vec![0, 1, 2, 7]));
    }

    #[test]
    fn injected_delta_fails_report() {
        let curve = CurveModel::gsx49().unwrap();
        let r = theorem_report(&curve, &ReportOptions { census_delta: 1 });
        assert!(!r.passed);
        assert!(!r.check("maximal").unwrap().passed);
    }

    #[test]
    fn fk_report_passes() {
        let curve = CurveModel::fk(5).unwrap();
        let r = theorem_report(&curve, &ReportOptions::default());
        let failed: Vec<_> = r.failed_checks().collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn gk_report_passes() {
        let curve = CurveModel::gk(2).unwrap();
        let r = theorem_report(&curve, &ReportOptions::default());
        let failed: Vec<_> = r.failed_checks().collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(r.epsilon, Some(vec![0, 1, 2, 8]));
        assert!(render_text(&r, true).contains("result     PASS"));
    }
}
