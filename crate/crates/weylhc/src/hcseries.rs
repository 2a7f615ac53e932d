//! The restriction-ambiguity checker: find all unordered pairs of distinct
//! irreducible characters that agree on every proper parabolic subgroup,
//! then separate them by degree or by Hecke-algebra Schur elements where
//! those are implemented, and compare the outcome against the expected
//! pattern for each Cartan type (empty for the classical families, a single
//! Schur-resolved pair for A1 and G2, documented exceptional families for
//! E7 and E8).

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::Serialize;

use crate::chartab::{char_table, CharacterTable, IrrLabel};
use crate::coxeter::{CoxeterGroup, DEFAULT_BOUND};
use crate::error::Result;
use crate::hecke::attach_phi_labels;
use crate::hecke::{schur_a1, schur_dihedral, HeckeParams, SchurElement};
use crate::par;
use crate::rootdata::{CartanType, SimpleType};

/// Documented data for the E7/E8 exceptional families, which are never
/// recomputed (the groups are refused by the enumeration bound).
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalFamilyRecord {
    pub ambient: String,
    pub dimension: u32,
    pub citation: &'static str,
}

pub const EXCEPTIONAL_CITATION: &str =
    "Geck & Pfeiffer, Characters of Finite Coxeter Groups and Iwahori-Hecke Algebras, 6.3.6";

pub fn exceptional_family(t: SimpleType) -> Option<ExceptionalFamilyRecord> {
    match t {
        SimpleType::E(7) => Some(ExceptionalFamilyRecord {
            ambient: "E7".into(),
            dimension: 512,
            citation: EXCEPTIONAL_CITATION,
        }),
        SimpleType::E(8) => Some(ExceptionalFamilyRecord {
            ambient: "E8".into(),
            dimension: 4096,
            citation: EXCEPTIONAL_CITATION,
        }),
        _ => None,
    }
}

/// How a (1')-pair was told apart, if at all.
#[derive(Clone, Debug)]
pub enum Separation {
    /// Different degrees already separate the pair.
    Degree,
    /// Distinct Schur elements, with the two witnesses.
    Schur {
        witness: Box<(SchurElement, SchurElement)>,
    },
    /// No discriminator available (e.g. no Hecke parameters supplied).
    Unresolved,
}

impl Separation {
    pub fn resolved(&self) -> bool {
        !matches!(self, Separation::Unresolved)
    }
}

#[derive(Clone, Debug)]
pub struct PairReport {
    /// Row indices into the table.
    pub members: (usize, usize),
    pub labels: (String, String),
    pub degree_equal: bool,
    pub separation: Separation,
}

/// Expected checker outcome per Cartan type: empty for the classical
/// families, a single Schur-resolved pair for A1 and G2, stored
/// exceptional-family data for E7/E8.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Empty,
    SinglePairA1,
    SinglePairG2,
    DocumentedException,
}

pub struct AmbiguityReport {
    pub ctype: CartanType,
    pub table: Option<CharacterTable>,
    pub pairs: Vec<PairReport>,
    pub documented: Option<ExceptionalFamilyRecord>,
    pub expectation: Expectation,
    pub matches_expectation: bool,
    pub error: Option<String>,
}

/// The union of parent classes meeting any proper standard parabolic; the
/// maximal proper subsets suffice since restriction factors through them.
pub fn classes_meeting_proper_parabolics(group: &CoxeterGroup) -> BTreeSet<u32> {
    let r = group.rank();
    let mut union = BTreeSet::new();
    for leave_out in 0..r {
        let j: Vec<usize> = (0..r).filter(|&i| i != leave_out).collect();
        union.extend(group.classes_meeting(&j));
    }
    if r == 0 {
        union.insert(0);
    }
    union
}

/// All unordered pairs of distinct irreducibles with equal restriction to
/// every proper standard parabolic subgroup, i.e. equal values on every
/// class meeting one.
pub fn pairs_equal_on_proper_parabolics(table: &CharacterTable) -> Vec<(usize, usize)> {
    let u: Vec<u32> = classes_meeting_proper_parabolics(&table.group)
        .into_iter()
        .collect();
    let k = table.irreducibles.len();
    let mut order: Vec<usize> = (0..k).collect();
    let restricted = |i: usize| -> Vec<crate::field::AlgNum> {
        u.iter()
            .map(|&c| table.irreducibles[i].values[c as usize].clone())
            .collect()
    };
    order.sort_by(|&a, &b| restricted(a).cmp(&restricted(b)));
    let mut pairs = Vec::new();
    let mut start = 0;
    while start < k {
        let mut end = start + 1;
        while end < k && restricted(order[start]) == restricted(order[end]) {
            end += 1;
        }
        for a in start..end {
            for b in a + 1..end {
                let (i, j) = (order[a].min(order[b]), order[a].max(order[b]));
                pairs.push((i, j));
            }
        }
        start = end;
    }
    pairs.sort_unstable();
    pairs
}

/// Hecke parameters to use for a given irreducible type and family parameter
/// `k`: `q^k` for A1, `(q, q^{2k-1})` for even dihedral groups including G2,
/// equal parameters `q^k` for odd dihedral groups.
pub fn params_for(t: SimpleType, k: i64) -> Option<HeckeParams> {
    match t {
        SimpleType::A(1) => Some(HeckeParams::equal(1, k)),
        SimpleType::G2 => Some(HeckeParams::g2_family(k)),
        SimpleType::I2(m) if m % 2 == 0 => Some(HeckeParams::g2_family(k)),
        SimpleType::I2(_) => Some(HeckeParams::equal(2, k)),
        _ => None,
    }
}

/// Apply degree comparison, then Schur-element comparison where implemented.
pub fn separate_pair(
    table: &CharacterTable,
    pair: (usize, usize),
    params: Option<&HeckeParams>,
) -> Result<Separation> {
    let (i, j) = pair;
    let a = &table.irreducibles[i];
    let b = &table.irreducibles[j];
    if a.degree() != b.degree() {
        return Ok(Separation::Degree);
    }
    let Some(params) = params else {
        return Ok(Separation::Unresolved);
    };
    let ctype = &table.group.datum.ctype;
    if !ctype.is_irreducible() {
        return Ok(Separation::Unresolved);
    }
    let schur: Vec<SchurElement> = match ctype.components[0] {
        SimpleType::A(1) => {
            let (t, s) = schur_a1(params.exponents[0])?;
            vec![t, s]
        }
        SimpleType::G2 => schur_dihedral(6, params)?,
        SimpleType::I2(m) => schur_dihedral(m, params)?,
        _ => return Ok(Separation::Unresolved),
    };
    let find = |label: &IrrLabel| schur.iter().find(|s| &s.label == label).cloned();
    let (Some(ca), Some(cb)) = (find(&a.label), find(&b.label)) else {
        return Ok(Separation::Unresolved);
    };
    if ca.value != cb.value {
        Ok(Separation::Schur {
            witness: Box::new((ca, cb)),
        })
    } else {
        Ok(Separation::Unresolved)
    }
}

fn expectation_for(ctype: &CartanType) -> Expectation {
    if ctype.is_irreducible() {
        match ctype.components[0] {
            SimpleType::A(1) => Expectation::SinglePairA1,
            SimpleType::G2 => Expectation::SinglePairG2,
            SimpleType::E(n) if n >= 7 => Expectation::DocumentedException,
            _ => Expectation::Empty,
        }
    } else {
        Expectation::Empty
    }
}

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub bound: u64,
    /// Family parameter `k` for the Hecke data; when absent pairs stay unresolved.
    pub k: Option<i64>,
    pub include_e6: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            bound: DEFAULT_BOUND,
            k: None,
            include_e6: false,
        }
    }
}

/// Run the checker on one type.
pub fn check_type(ctype: &CartanType, cfg: &CheckConfig) -> AmbiguityReport {
    let expectation = expectation_for(ctype);
    if let Some(doc) = ctype
        .is_irreducible()
        .then(|| exceptional_family(ctype.components[0]))
        .flatten()
    {
        return AmbiguityReport {
            ctype: ctype.clone(),
            table: None,
            pairs: Vec::new(),
            documented: Some(doc),
            expectation,
            matches_expectation: true,
            error: None,
        };
    }
    if !cfg.include_e6
        && ctype
            .components
            .iter()
            .any(|c| matches!(c, SimpleType::E(6)))
    {
        return AmbiguityReport {
            ctype: ctype.clone(),
            table: None,
            pairs: Vec::new(),
            documented: None,
            expectation,
            matches_expectation: false,
            error: Some(
                "E6 is excluded from the default run; enable it explicitly to compute it".into(),
            ),
        };
    }
    let run = || -> Result<(CharacterTable, Vec<PairReport>)> {
        let group = CoxeterGroup::build(ctype, cfg.bound)?;
        let mut table = char_table(&group)?;
        attach_phi_labels(&mut table)?;
        let params = if ctype.is_irreducible() {
            cfg.k.and_then(|k| params_for(ctype.components[0], k))
        } else {
            None
        };
        let pairs = pairs_equal_on_proper_parabolics(&table);
        let mut reports = Vec::new();
        for pair in pairs {
            let separation = separate_pair(&table, pair, params.as_ref())?;
            let a = &table.irreducibles[pair.0];
            let b = &table.irreducibles[pair.1];
            reports.push(PairReport {
                members: pair,
                labels: (a.display_label(), b.display_label()),
                degree_equal: a.degree() == b.degree(),
                separation,
            });
        }
        Ok((table, reports))
    };
    match run() {
        Ok((table, pairs)) => {
            let matches = match expectation {
                Expectation::Empty => pairs.is_empty(),
                Expectation::SinglePairA1 => {
                    pairs.len() == 1 && (cfg.k.is_none() || pairs[0].separation.resolved())
                }
                Expectation::SinglePairG2 => {
                    pairs.len() == 1
                        && table.irreducibles[pairs[0].members.0].degree() == 2u32.into()
                        && (cfg.k.is_none() || pairs[0].separation.resolved())
                }
                Expectation::DocumentedException => true,
            };
            AmbiguityReport {
                ctype: ctype.clone(),
                table: Some(table),
                pairs,
                documented: None,
                expectation,
                matches_expectation: matches,
                error: None,
            }
        }
        Err(e) => AmbiguityReport {
            ctype: ctype.clone(),
            table: None,
            pairs: Vec::new(),
            documented: None,
            expectation,
            matches_expectation: false,
            error: Some(e.to_string()),
        },
    }
}

/// Run the checker over a batch of types; per-type errors are aggregated in
/// the reports without aborting the batch. Types are processed in parallel
/// but reported in request order.
pub fn run_proposition_check(types: &[CartanType], cfg: &CheckConfig) -> Vec<AmbiguityReport> {
    par::par_map(types, |t| check_type(t, cfg))
}

/// For a reducible type, verify the componentwise reduction: every
/// (1')-pair of the product must agree component by component (hence there
/// are none), and report each component's own pair list.
pub struct FactorCheckReport {
    pub decomposes: bool,
    pub product_pairs: Vec<(String, String)>,
    pub component_pairs: Vec<(CartanType, Vec<(String, String)>)>,
}

pub fn reducible_factor_check(ctype: &CartanType, cfg: &CheckConfig) -> Result<FactorCheckReport> {
    let group = CoxeterGroup::build(ctype, cfg.bound)?;
    let table = char_table(&group)?;
    let pairs = pairs_equal_on_proper_parabolics(&table);
    let mut decomposes = true;
    let mut product_pairs = Vec::new();
    for (i, j) in &pairs {
        let (a, b) = (&table.irreducibles[*i].label, &table.irreducibles[*j].label);
        product_pairs.push((a.to_string(), b.to_string()));
        if let (IrrLabel::Tensor(pa), IrrLabel::Tensor(pb)) = (a, b) {
            // The componentwise reduction demands equality factor by factor;
            // distinct characters always differ somewhere, so any survivor
            // falsifies the reduction.
            if pa != pb {
                decomposes = false;
            }
        }
    }
    let mut component_pairs = Vec::new();
    for comp in &ctype.components {
        let sub = CartanType::simple(*comp);
        let sub_report = check_type(&sub, cfg);
        let list = sub_report
            .pairs
            .iter()
            .map(|p| (p.labels.0.clone(), p.labels.1.clone()))
            .collect();
        component_pairs.push((sub, list));
    }
    Ok(FactorCheckReport {
        decomposes,
        product_pairs,
        component_pairs,
    })
}

/// Numeric Schur separation for G2: both symbolic inequality and evaluation
/// at every prime power q <= qmax (including q = 2).
pub fn g2_schur_separation_numeric(k: i64, qmax: u64) -> Result<bool> {
    let c1 = crate::hecke::schur_g2(k, 1)?;
    let c2 = crate::hecke::schur_g2(k, 2)?;
    if c1.value == c2.value {
        return Ok(false);
    }
    for q in prime_powers_up_to(qmax) {
        let x = BigRational::from_integer(q.into());
        if c1.value.eval(&x) == c2.value.eval(&x) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn prime_powers_up_to(max: u64) -> Vec<u64> {
    let is_prime = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
    let mut out = Vec::new();
    for p in 2..=max {
        if is_prime(p) {
            let mut q = p;
            while q <= max {
                out.push(q);
                match q.checked_mul(p) {
                    Some(next) => q = next,
                    None => break,
                }
            }
        }
    }
    out.sort_unstable();
    out
}

// ---------------------------------------------------------------------------
// Serialization (hcreport-v1).
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct HcReportJson {
    pub format: &'static str,
    pub cartan_type: String,
    pub expectation: Expectation,
    pub matches_expectation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pairs: Vec<PairJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub documented_exception: Option<ExceptionalFamilyRecord>,
}

#[derive(Serialize)]
pub struct PairJson {
    pub labels: (String, String),
    pub degree_equal: bool,
    pub separation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur_witnesses: Option<(String, String)>,
    pub resolved: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restrictions: Option<Vec<RestrictionJson>>,
}

#[derive(Serialize)]
pub struct RestrictionJson {
    /// 1-based generator indices of the parabolic.
    pub j: Vec<usize>,
    /// Common restriction values of the pair on the classes meeting W_J, as
    /// (class index, value) pairs.
    pub values: Vec<(u32, String)>,
}

impl AmbiguityReport {
    pub fn to_json(&self, emit_restriction_vectors: bool) -> HcReportJson {
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                let (separation, schur_witnesses) = match &p.separation {
                    Separation::Degree => ("degree".to_string(), None),
                    Separation::Schur { witness } => (
                        "schur".to_string(),
                        Some((witness.0.value.to_string(), witness.1.value.to_string())),
                    ),
                    Separation::Unresolved => ("unresolved".to_string(), None),
                };
                let restrictions = if emit_restriction_vectors {
                    self.table.as_ref().map(|table| {
                        let group = &table.group;
                        let r = group.rank();
                        (0..r)
                            .map(|leave_out| {
                                let j: Vec<usize> = (0..r).filter(|&i| i != leave_out).collect();
                                let classes = group.classes_meeting(&j);
                                RestrictionJson {
                                    j: j.iter().map(|&x| x + 1).collect(),
                                    values: classes
                                        .iter()
                                        .map(|&c| {
                                            (
                                                c,
                                                table.irreducibles[p.members.0].values[c as usize]
                                                    .to_exact_string(),
                                            )
                                        })
                                        .collect(),
                                }
                            })
                            .collect()
                    })
                } else {
                    None
                };
                PairJson {
                    labels: p.labels.clone(),
                    degree_equal: p.degree_equal,
                    separation,
                    schur_witnesses,
                    resolved: p.separation.resolved(),
                    restrictions,
                }
            })
            .collect();
        HcReportJson {
            format: "hcreport-v1",
            cartan_type: self.ctype.to_string(),
            expectation: self.expectation,
            matches_expectation: self.matches_expectation,
            error: self.error.clone(),
            pairs,
            documented_exception: self.documented.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str) -> CharacterTable {
        let group = CoxeterGroup::build_default(&s.parse().unwrap()).unwrap();
        char_table(&group).unwrap()
    }

    #[test]
    fn a1_unique_pair_is_triv_sign() {
        let t = table("A1");
        let pairs = pairs_equal_on_proper_parabolics(&t);
        assert_eq!(pairs.len(), 1);
        let (i, j) = pairs[0];
        let labels: BTreeSet<String> = [i, j]
            .iter()
            .map(|&x| t.irreducibles[x].label.to_string())
            .collect();
        assert_eq!(
            labels,
            BTreeSet::from(["[2]".to_string(), "[1,1]".to_string()])
        );
    }

    #[test]
    fn a2_pairs_empty() {
        assert!(pairs_equal_on_proper_parabolics(&table("A2")).is_empty());
    }

    #[test]
    fn g2_unique_pair_is_two_dimensionals() {
        let t = table("G2");
        let pairs = pairs_equal_on_proper_parabolics(&t);
        assert_eq!(pairs.len(), 1);
        let (i, j) = pairs[0];
        assert_eq!(t.irreducibles[i].degree(), 2u32.into());
        assert_eq!(t.irreducibles[j].degree(), 2u32.into());
    }

    #[test]
    fn separate_a1_pair_by_schur() {
        let t = table("A1");
        let pairs = pairs_equal_on_proper_parabolics(&t);
        let params = HeckeParams::equal(1, 1);
        let sep = separate_pair(&t, pairs[0], Some(&params)).unwrap();
        match sep {
            Separation::Schur { witness } => {
                // witnesses Phi_2(q) and q^-1 Phi_2(q)
                let w1 = witness.0.as_q_laurent().unwrap();
                let w2 = witness.1.as_q_laurent().unwrap();
                assert_ne!(w1, w2);
            }
            other => panic!("expected Schur separation, got {other:?}"),
        }
    }

    #[test]
    fn separate_g2_pair_without_params_is_unresolved() {
        let t = table("G2");
        let pairs = pairs_equal_on_proper_parabolics(&t);
        let sep = separate_pair(&t, pairs[0], None).unwrap();
        assert!(!sep.resolved());
    }

    #[test]
    fn check_types_batch() {
        let types: Vec<CartanType> = ["A2", "A3", "B2", "B3", "D4", "G2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let cfg = CheckConfig {
            k: Some(1),
            ..Default::default()
        };
        let reports = run_proposition_check(&types, &cfg);
        for r in &reports {
            assert!(r.matches_expectation, "{}: {:?}", r.ctype, r.error);
        }
        // G2's single pair is Schur-resolved for k = 1.
        let g2 = &reports[5];
        assert_eq!(g2.pairs.len(), 1);
        assert!(g2.pairs[0].separation.resolved());
    }

    #[test]
    fn e8_documented_exception() {
        let r = check_type(&"E8".parse().unwrap(), &CheckConfig::default());
        assert!(r.matches_expectation);
        let doc = r.documented.unwrap();
        assert_eq!(doc.dimension, 4096);
        let r = check_type(&"E7".parse().unwrap(), &CheckConfig::default());
        assert_eq!(r.documented.unwrap().dimension, 512);
    }

    #[test]
    fn e6_needs_flag() {
        let r = check_type(&"E6".parse().unwrap(), &CheckConfig::default());
        assert!(!r.matches_expectation);
        assert!(r.error.is_some());
    }

    #[test]
    fn g2_numeric_separation() {
        for k in [1, 2, 5] {
            assert!(g2_schur_separation_numeric(k, 100).unwrap(), "k={k}");
        }
    }

    #[test]
    fn reducible_factor_checks() {
        let cfg = CheckConfig::default();
        let r = reducible_factor_check(&"A1xA1".parse().unwrap(), &cfg).unwrap();
        assert!(r.decomposes);
        assert!(r.product_pairs.is_empty());
        // The A1 factors each carry their own {triv, sign} pair.
        assert_eq!(r.component_pairs.len(), 2);
        assert_eq!(r.component_pairs[0].1.len(), 1);

        let r = reducible_factor_check(&"A2xA1".parse().unwrap(), &cfg).unwrap();
        assert!(r.decomposes);
        assert!(r.product_pairs.is_empty());
        assert_eq!(r.component_pairs[0].1.len(), 0);
        assert_eq!(r.component_pairs[1].1.len(), 1);
    }

    #[test]
    fn i2_5_has_ambiguous_two_dimensional_pair() {
        // The two 2-dimensional characters of I2(5) agree on every proper
        // parabolic (both restrict to triv + sign on each reflection
        // subgroup), so the checker must report the pair.
        let t = table("I2(5)");
        let pairs = pairs_equal_on_proper_parabolics(&t);
        assert_eq!(pairs.len(), 1);
        // With equal Hecke parameters the Schur elements still separate it.
        let params = HeckeParams::equal(2, 1);
        let sep = separate_pair(&t, pairs[0], Some(&params)).unwrap();
        assert!(sep.resolved());
    }

    #[test]
    fn single_component_factor_check_is_vacuous() {
        let cfg = CheckConfig::default();
        let r = reducible_factor_check(&"A2".parse().unwrap(), &cfg).unwrap();
        assert!(r.decomposes);
    }

    #[test]
    fn hcreport_json_format_tag() {
        let r = check_type(
            &"G2".parse().unwrap(),
            &CheckConfig {
                k: Some(1),
                ..Default::default()
            },
        );
        let doc = r.to_json(true);
        assert_eq!(doc.format, "hcreport-v1");
        assert_eq!(doc.pairs.len(), 1);
        assert!(doc.pairs[0].restrictions.is_some());
    }

    #[test]
    fn conjugate_parabolics_hit_the_same_classes() {
        // Standard parabolics suffice for the (1')-condition: every parabolic
        // subgroup is conjugate to a standard one, and a subgroup and its
        // conjugates meet exactly the same conjugacy classes. Brute-forced
        // here over all conjugators for the small types.
        for t in ["A3", "B2"] {
            let w = CoxeterGroup::build_default(&t.parse().unwrap()).unwrap();
            let r = w.rank();
            for mask in 1u32..(1 << r) - 1 {
                let j: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
                let wj = w.subgroup_closure(&j);
                let standard: BTreeSet<u32> = wj.iter().map(|&x| w.class_of[x as usize]).collect();
                for g in 0..w.order() as u32 {
                    let conj: BTreeSet<u32> = wj
                        .iter()
                        .map(|&x| w.class_of[w.conjugate_idx(g, x) as usize])
                        .collect();
                    assert_eq!(conj, standard, "{t} J={j:?} conjugator {g}");
                }
            }
        }
    }

    #[test]
    fn prime_power_list() {
        let pp = prime_powers_up_to(32);
        assert_eq!(
            pp,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }
}
