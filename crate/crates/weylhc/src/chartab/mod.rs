//! Exact character tables of finite Coxeter groups, class fusion into
//! overgroups, restriction and induction of class functions, and inner
//! products. Combinatorial constructions (types A, B/C, D and the dihedral
//! closed forms) coexist with an exact class-matrix eigenvector algorithm
//! that serves F4, E6, H3, H4 and acts as a cross-check oracle everywhere.

pub mod partitions;

mod classical;
mod dihedral;
mod generic;

pub use classical::{
    char_table_demihyperoctahedral, char_table_hyperoctahedral, char_table_symmetric,
};
pub use dihedral::char_table_dihedral;
pub use generic::char_table_generic;
pub use generic::{class_matrices, class_matrices_seq};

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coxeter::{CoxeterGroup, ParabolicSubgroup};
use crate::error::{Error, Result};
use crate::field::AlgNum;
use crate::rootdata::SimpleType;

/// Combinatorial label of an irreducible character.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum IrrLabel {
    /// Type A: partition of n+1.
    Partition(Vec<u32>),
    /// Types B/C: ordered bipartition.
    Bipartition(Vec<u32>, Vec<u32>),
    /// Type D, non-degenerate: unordered pair, stored sorted.
    DPair(Vec<u32>, Vec<u32>),
    /// Type D, degenerate pair split in two.
    DSplit(Vec<u32>, bool),
    /// Dihedral linear characters by generator signs (eps_s, eps_t).
    DihedralLinear(bool, bool),
    /// Dihedral two-dimensional character of rotation index j.
    DihedralTwoDim(u32),
    /// Generic-algorithm row (canonical position).
    Generic(usize),
    /// Product types: one label per component.
    Tensor(Vec<IrrLabel>),
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn plist(p: &[u32]) -> String {
            let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            format!("[{}]", inner.join(","))
        }
        match self {
            IrrLabel::Partition(p) => write!(f, "{}", plist(p)),
            IrrLabel::Bipartition(l, m) => write!(f, "({},{})", plist(l), plist(m)),
            IrrLabel::DPair(l, m) => write!(f, "{{{},{}}}", plist(l), plist(m)),
            IrrLabel::DSplit(l, pos) => {
                write!(f, "{{{};{}}}", plist(l), if *pos { "+" } else { "-" })
            }
            IrrLabel::DihedralLinear(es, et) => {
                let sgn = |b: bool| if b { "1" } else { "-1" };
                write!(f, "lin({},{})", sgn(*es), sgn(*et))
            }
            IrrLabel::DihedralTwoDim(j) => write!(f, "chi[{j}]"),
            IrrLabel::Generic(i) => write!(f, "X{i}"),
            IrrLabel::Tensor(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", inner.join("⊗"))
            }
        }
    }
}

/// Universal label `(degree, b-invariant, tiebreak)` in the `phi_{d,b}`
/// convention; attached by the Hecke module via fake degrees.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PhiLabel {
    pub degree: u64,
    pub b: u32,
    /// Lexicographic tiebreak among equal `(degree, b)` pairs.
    pub tie: u32,
}

impl fmt::Display for PhiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tie == 0 {
            write!(f, "phi{{{},{}}}", self.degree, self.b)
        } else {
            write!(f, "phi{{{},{}}}#{}", self.degree, self.b, self.tie + 1)
        }
    }
}

#[derive(Clone, Debug)]
pub struct Irreducible {
    pub label: IrrLabel,
    pub phi: Option<PhiLabel>,
    /// Values indexed by the group's canonical class order.
    pub values: Vec<AlgNum>,
}

impl Irreducible {
    pub fn degree(&self) -> BigUint {
        self.values[0]
            .as_rational()
            .expect("degrees are rational integers")
            .to_integer()
            .to_biguint()
            .expect("degrees are positive")
    }

    pub fn display_label(&self) -> String {
        match &self.phi {
            Some(phi) => phi.to_string(),
            None => self.label.to_string(),
        }
    }
}

/// An exact character table over the group's canonical conjugacy classes.
pub struct CharacterTable {
    pub group: Arc<CoxeterGroup>,
    pub irreducibles: Vec<Irreducible>,
}

impl fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CharacterTable({}, {} irreducibles)",
            self.group.datum.ctype,
            self.irreducibles.len()
        )
    }
}

/// Dispatch on the Cartan type: combinatorial families where available, the
/// generic algorithm for F4/E6/H3/H4, tensor products for reducible types.
pub fn char_table(group: &Arc<CoxeterGroup>) -> Result<CharacterTable> {
    let ctype = group.datum.ctype.clone();
    if ctype.components.len() > 1 {
        return tensor_table(group);
    }
    match ctype.components[0] {
        SimpleType::A(n) => char_table_symmetric(group, n),
        SimpleType::B(n) | SimpleType::C(n) => char_table_hyperoctahedral(group, n),
        SimpleType::D(n) => char_table_demihyperoctahedral(group, n),
        SimpleType::G2 => char_table_dihedral(group, 6),
        SimpleType::I2(m) => char_table_dihedral(group, m),
        SimpleType::F4 | SimpleType::E(_) | SimpleType::H(_) => char_table_generic(group),
    }
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.group.num_classes()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.group.classes.iter().map(|c| c.size).collect()
    }

    /// Exact inner product `(1/|W|) sum_C |C| f(C) g(C^{-1})`.
    pub fn inner_product(&self, f: &[AlgNum], g: &[AlgNum]) -> AlgNum {
        inner_product_on(&self.group, f, g)
    }

    /// Row orthogonality, column orthogonality and the degree-square sum,
    /// all exact.
    pub fn verify(&self) -> Result<()> {
        let k = self.num_classes();
        if self.irreducibles.len() != k {
            return Err(Error::Internal(format!(
                "{} irreducibles vs {} classes",
                self.irreducibles.len(),
                k
            )));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let ip = self.inner_product(&a.values, &b.values);
                let expected = if i == j { 1 } else { 0 };
                if ip != AlgNum::int(expected) {
                    return Err(Error::Internal(format!(
                        "row orthogonality fails at ({i},{j}): got {ip}"
                    )));
                }
            }
        }
        // Column orthogonality: sum_chi chi(a) chi(b^{-1}) = delta |W|/|C_a|.
        let order = BigRational::from_integer(BigInt::from(self.group.order()));
        for a in 0..k {
            for b in 0..k {
                let binv = self.group.inverse_class(b);
                let mut acc = self.irreducibles[0].values[0].field.zero();
                for irr in &self.irreducibles {
                    acc = acc.add(&irr.values[a].mul(&irr.values[binv]));
                }
                let expected = if a == b {
                    let ca = BigRational::from_integer(BigInt::from(self.group.classes[a].size));
                    AlgNum::rational(&order / ca)
                } else {
                    AlgNum::int(0)
                };
                if acc != expected {
                    return Err(Error::Internal(format!(
                        "column orthogonality fails at ({a},{b})"
                    )));
                }
            }
        }
        let mut sq = BigUint::zero();
        for irr in &self.irreducibles {
            let d = irr.degree();
            sq += &d * &d;
        }
        if sq != BigUint::from(self.group.order()) {
            return Err(Error::Internal("degree squares do not sum to |W|".into()));
        }
        Ok(())
    }

    /// Index of the trivial character.
    pub fn trivial_index(&self) -> usize {
        self.irreducibles
            .iter()
            .position(|irr| irr.values.iter().all(|v| *v == AlgNum::int(1)))
            .expect("trivial character present")
    }

    /// Index of the sign character `w -> (-1)^{l(w)}`.
    pub fn sign_index(&self) -> usize {
        self.irreducibles
            .iter()
            .position(|irr| {
                irr.values.iter().zip(&self.group.classes).all(|(v, c)| {
                    let expect = if c.min_length % 2 == 0 { 1 } else { -1 };
                    *v == AlgNum::int(expect)
                })
            })
            .expect("sign character present")
    }

    /// Rows compared as multisets (same group, hence same classes). This is
    /// the "equal up to row permutation" comparison for cross-oracle checks.
    pub fn same_rows(&self, other: &CharacterTable) -> bool {
        if self.irreducibles.len() != other.irreducibles.len() {
            return false;
        }
        let canon = |t: &CharacterTable| {
            let mut rows: Vec<Vec<AlgNum>> =
                t.irreducibles.iter().map(|i| i.values.clone()).collect();
            rows.sort();
            rows
        };
        canon(self) == canon(other)
    }
}

pub(crate) fn inner_product_on(group: &CoxeterGroup, f: &[AlgNum], g: &[AlgNum]) -> AlgNum {
    let mut acc = f[0].field.zero();
    for (l, class) in group.classes.iter().enumerate() {
        let linv = group.inverse_class(l);
        let term = f[l]
            .mul(&g[linv])
            .scale(&BigRational::from_integer(BigInt::from(class.size)));
        acc = acc.add(&term);
    }
    acc.scale(&BigRational::new(
        BigInt::one(),
        BigInt::from(group.order()),
    ))
}

// ---------------------------------------------------------------------------
// Class fusion, restriction, induction.
// ---------------------------------------------------------------------------

/// Everything restriction and induction need to know about how a subgroup's
/// classes sit inside the parent group.
pub struct FusionData {
    pub sub_order: u64,
    pub sub_class_sizes: Vec<u64>,
    /// Subgroup class index -> parent class index.
    pub fusion: Vec<u32>,
    pub sub_inverse_class: Vec<u32>,
}

impl FusionData {
    /// Fusion of a standard parabolic subgroup.
    pub fn from_parabolic(parent: &CoxeterGroup, sub: &ParabolicSubgroup) -> FusionData {
        let fusion = sub
            .group
            .classes
            .iter()
            .map(|c| parent.class_of[sub.to_parent[c.rep as usize] as usize])
            .collect();
        FusionData {
            sub_order: sub.group.order(),
            sub_class_sizes: sub.group.classes.iter().map(|c| c.size).collect(),
            fusion,
            sub_inverse_class: (0..sub.group.num_classes())
                .map(|c| sub.group.inverse_class(c) as u32)
                .collect(),
        }
    }

    /// The trivial subgroup (J empty).
    pub fn trivial(_parent: &CoxeterGroup) -> FusionData {
        FusionData {
            sub_order: 1,
            sub_class_sizes: vec![1],
            fusion: vec![0],
            sub_inverse_class: vec![0],
        }
    }
}

/// Pull a parent class function back along the fusion map.
pub fn restrict(chi: &[AlgNum], fusion: &FusionData) -> Vec<AlgNum> {
    fusion
        .fusion
        .iter()
        .map(|&c| chi[c as usize].clone())
        .collect()
}

/// Induce a subgroup class function to the parent:
/// `Ind(C) = |W| / (|W_J| |C|) * sum_{d -> C} |d| phi(d)`.
pub fn induce(phi: &[AlgNum], fusion: &FusionData, parent: &CoxeterGroup) -> Vec<AlgNum> {
    let k = parent.num_classes();
    let field = &phi[0].field;
    let mut out = vec![field.zero(); k];
    for (d, &c) in fusion.fusion.iter().enumerate() {
        let term = phi[d].scale(&BigRational::from_integer(BigInt::from(
            fusion.sub_class_sizes[d],
        )));
        out[c as usize] = out[c as usize].add(&term);
    }
    for (c, v) in out.iter_mut().enumerate() {
        let scale = BigRational::new(
            BigInt::from(parent.order()),
            BigInt::from(fusion.sub_order) * BigInt::from(parent.classes[c].size),
        );
        *v = v.scale(&scale);
    }
    out
}

/// Decompose a class function into irreducibles of the given table;
/// multiplicities must come out as non-negative integers.
pub fn decompose(table: &CharacterTable, values: &[AlgNum]) -> Result<Vec<(usize, BigUint)>> {
    let mut out = Vec::new();
    for (i, irr) in table.irreducibles.iter().enumerate() {
        let m = table.inner_product(values, &irr.values);
        let m = m
            .as_rational()
            .ok_or_else(|| Error::Internal("irrational multiplicity in decomposition".into()))?;
        if !m.is_integer() || m.is_negative() {
            return Err(Error::Internal(format!(
                "multiplicity {m} is not a non-negative integer"
            )));
        }
        let m = m.to_integer().to_biguint().unwrap();
        if !m.is_zero() {
            out.push((i, m));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Tensor products for reducible types.
// ---------------------------------------------------------------------------

fn tensor_table(group: &Arc<CoxeterGroup>) -> Result<CharacterTable> {
    let ctype = &group.datum.ctype;
    let ranges = ctype.component_ranges();
    // Standalone component groups and tables.
    let mut comp_groups = Vec::new();
    let mut comp_tables = Vec::new();
    for comp in &ctype.components {
        let g = CoxeterGroup::build(&crate::rootdata::CartanType::simple(*comp), u64::MAX)?;
        let t = char_table(&g)?;
        comp_groups.push(g);
        comp_tables.push(t);
    }
    // Map each parent positive root to (component, component root index).
    let nroots = group.datum.positive_roots.len();
    let mut root_map = vec![(0usize, 0usize); nroots];
    for (ridx, root) in group.datum.positive_roots.iter().enumerate() {
        let comp = ranges
            .iter()
            .position(|r| {
                root.iter()
                    .enumerate()
                    .any(|(i, x)| r.contains(&i) && !x.is_zero())
            })
            .expect("every root is supported in one component");
        let range = &ranges[comp];
        let cg: &Arc<CoxeterGroup> = &comp_groups[comp];
        let target_field = &cg.datum.field;
        // Slice and re-express in the component's own field.
        let key: Vec<AlgNum> = root[range.clone()]
            .iter()
            .map(|x| reexpress(x, target_field))
            .collect();
        let cidx = cg
            .datum
            .positive_roots
            .iter()
            .position(|v| v == &key)
            .expect("sliced root is a component root");
        root_map[ridx] = (comp, cidx);
    }
    // Parent class -> tuple of component classes.
    let k = group.num_classes();
    let mut class_tuples: Vec<Vec<u32>> = Vec::with_capacity(k);
    for class in &group.classes {
        let perm = &group.elements[class.rep as usize];
        let mut tuple = Vec::with_capacity(ctype.components.len());
        for (comp, cg) in comp_groups.iter().enumerate() {
            let n_c = cg.datum.positive_roots.len();
            let mut sub = vec![0i16; n_c];
            for (ridx, &(c, cidx)) in root_map.iter().enumerate() {
                if c != comp {
                    continue;
                }
                let v = perm.0[ridx];
                let m = v.unsigned_abs() as usize - 1;
                let (tc, tcidx) = root_map[m];
                debug_assert_eq!(tc, comp, "components are permutation-invariant");
                sub[cidx] = if v > 0 {
                    tcidx as i16 + 1
                } else {
                    -(tcidx as i16 + 1)
                };
            }
            let sp = crate::coxeter::SignedPerm(sub.into_boxed_slice());
            let idx = cg
                .element_index(&sp)
                .expect("projection lands in the component group");
            tuple.push(cg.class_of[idx as usize]);
        }
        class_tuples.push(tuple);
    }
    // Cartesian product of irreducibles.
    let field = &group.datum.field;
    let mut irreducibles = Vec::new();
    let mut stack: Vec<usize> = vec![0; comp_tables.len()];
    'outer: loop {
        let labels: Vec<IrrLabel> = stack
            .iter()
            .zip(&comp_tables)
            .map(|(&i, t)| t.irreducibles[i].label.clone())
            .collect();
        let values: Vec<AlgNum> = class_tuples
            .iter()
            .map(|tuple| {
                let mut acc = AlgNum::from_int(field, 1);
                for ((&i, t), &c) in stack.iter().zip(&comp_tables).zip(tuple) {
                    let v = reexpress(&t.irreducibles[i].values[c as usize], field);
                    acc = acc.mul(&v);
                }
                acc
            })
            .collect();
        irreducibles.push(Irreducible {
            label: IrrLabel::Tensor(labels),
            phi: None,
            values,
        });
        // Advance the product counter.
        for pos in 0..stack.len() {
            stack[pos] += 1;
            if stack[pos] < comp_tables[pos].irreducibles.len() {
                continue 'outer;
            }
            stack[pos] = 0;
        }
        break;
    }
    let table = CharacterTable {
        group: Arc::clone(group),
        irreducibles,
    };
    table.verify()?;
    Ok(table)
}

/// Re-express a value in another real cyclotomic field (used between a
/// product group's field and its components' fields, whose conductors divide
/// it in at least one direction).
pub(crate) fn reexpress(x: &AlgNum, target: &Arc<crate::field::RealCycField>) -> AlgNum {
    if x.field.conductor == target.conductor {
        return x.clone();
    }
    if let Some(r) = x.as_rational() {
        return AlgNum::from_rational(target, r);
    }
    assert_eq!(
        target.conductor % x.field.conductor,
        0,
        "no embedding from conductor {} into {}",
        x.field.conductor,
        target.conductor
    );
    let theta_image = target.two_cos_multiple((target.conductor / x.field.conductor) as i64);
    let mut acc = target.zero();
    for c in x.coeffs.iter().rev() {
        acc = acc
            .mul(&theta_image)
            .add(&AlgNum::from_rational(target, c.clone()));
    }
    acc
}

// ---------------------------------------------------------------------------
// Abstract table comparison across different realizations of isomorphic
// groups (exceptional isomorphisms like D3 = A3, I2(3) = A2).
// ---------------------------------------------------------------------------

/// Whether two tables agree up to a bijection of classes (preserving size,
/// representative order and minimal length) and a bijection of rows.
pub fn tables_abstractly_equal(t1: &CharacterTable, t2: &CharacterTable) -> bool {
    let k = t1.num_classes();
    if k != t2.num_classes() || t1.irreducibles.len() != t2.irreducibles.len() {
        return false;
    }
    let invariant = |t: &CharacterTable, c: usize| {
        (
            t.group.classes[c].size,
            t.group.classes[c].min_length,
            t.group.element_order(t.group.classes[c].rep),
        )
    };
    // Group class indices of t2 by invariant.
    let mut blocks: HashMap<(u64, u32, u32), Vec<usize>> = HashMap::new();
    for c in 0..k {
        blocks.entry(invariant(t2, c)).or_default().push(c);
    }
    let mut assignment = vec![usize::MAX; k];
    let mut used = vec![false; k];
    fn backtrack(
        t1: &CharacterTable,
        t2: &CharacterTable,
        blocks: &HashMap<(u64, u32, u32), Vec<usize>>,
        invariant: &dyn Fn(&CharacterTable, usize) -> (u64, u32, u32),
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        c: usize,
    ) -> bool {
        let k = assignment.len();
        if c == k {
            // Check row multisets under the assignment.
            let mut rows1: Vec<Vec<AlgNum>> = t1
                .irreducibles
                .iter()
                .map(|irr| irr.values.clone())
                .collect();
            let mut rows2: Vec<Vec<AlgNum>> = t2
                .irreducibles
                .iter()
                .map(|irr| {
                    (0..k)
                        .map(|c1| irr.values[assignment[c1]].clone())
                        .collect()
                })
                .collect();
            rows1.sort();
            rows2.sort();
            return rows1 == rows2;
        }
        let Some(cands) = blocks.get(&invariant(t1, c)) else {
            return false;
        };
        for &cand in cands {
            if used[cand] {
                continue;
            }
            assignment[c] = cand;
            used[cand] = true;
            if backtrack(t1, t2, blocks, invariant, assignment, used, c + 1) {
                return true;
            }
            used[cand] = false;
            assignment[c] = usize::MAX;
        }
        false
    }
    backtrack(t1, t2, &blocks, &invariant, &mut assignment, &mut used, 0)
}

// ---------------------------------------------------------------------------
// Serialization (chartab-v1).
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct ChartabJson {
    pub format: &'static str,
    pub cartan_type: String,
    pub group_order: String,
    pub field: FieldJson,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<IrrJson>,
}

#[derive(Serialize)]
pub struct FieldJson {
    pub conductor: u32,
    pub degree: usize,
    pub generator: String,
    pub min_poly: Vec<String>,
}

#[derive(Serialize)]
pub struct ClassJson {
    pub index: usize,
    pub rep_word: Vec<usize>,
    pub size: String,
    pub min_length: u32,
    pub rep_order: u32,
}

#[derive(Serialize)]
pub struct IrrJson {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    pub degree: String,
    pub values: Vec<String>,
}

impl CharacterTable {
    pub fn to_json(&self) -> ChartabJson {
        let g = &self.group;
        ChartabJson {
            format: "chartab-v1",
            cartan_type: g.datum.ctype.to_string(),
            group_order: g.order().to_string(),
            field: FieldJson {
                conductor: g.datum.field.conductor,
                degree: g.datum.field.degree,
                generator: format!("2*cos(2*pi/{})", g.datum.field.conductor),
                min_poly: g
                    .datum
                    .field
                    .modulus
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
            },
            classes: g
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| ClassJson {
                    index: i,
                    rep_word: g.reduced_word(c.rep).iter().map(|&x| x + 1).collect(),
                    size: c.size.to_string(),
                    min_length: c.min_length,
                    rep_order: g.element_order(c.rep),
                })
                .collect(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|irr| IrrJson {
                    label: irr.label.to_string(),
                    phi: irr.phi.map(|p| p.to_string()),
                    degree: irr.degree().to_string(),
                    values: irr.values.iter().map(|v| v.to_exact_string()).collect(),
                })
                .collect(),
        }
    }

    /// Tab-separated matrix: one row per irreducible.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("label");
        for (i, c) in self.group.classes.iter().enumerate() {
            out.push_str(&format!("\tC{}(size {})", i, c.size));
        }
        out.push('\n');
        for irr in &self.irreducibles {
            out.push_str(&irr.display_label());
            for v in &irr.values {
                out.push('\t');
                out.push_str(&v.to_exact_string());
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> Arc<CoxeterGroup> {
        CoxeterGroup::build_default(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn fusion_a1_into_a2_hits_distinct_classes() {
        let a2 = group("A2");
        let sub = crate::coxeter::parabolic_subgroup(&a2, &[0]).unwrap();
        let fusion = FusionData::from_parabolic(&a2, &sub);
        assert_eq!(fusion.fusion.len(), 2);
        assert_ne!(fusion.fusion[0], fusion.fusion[1]);
        // Identity class maps to the identity class.
        assert_eq!(fusion.fusion[0], 0);
    }

    #[test]
    fn crystallographic_tables_have_integer_values() {
        for t in ["A3", "B3", "D4", "G2", "F4", "B2xA1"] {
            let table = char_table(&group(t)).unwrap();
            for irr in &table.irreducibles {
                for v in &irr.values {
                    let r = v.as_rational().expect("crystallographic value is rational");
                    assert!(r.is_integer(), "{t}: non-integer value {r}");
                }
            }
        }
    }

    #[test]
    fn tensor_product_table_b2xa1() {
        let table = char_table(&group("B2xA1")).unwrap();
        assert_eq!(table.irreducibles.len(), 10);
        let mut degs: Vec<u64> = table
            .irreducibles
            .iter()
            .map(|i| u64::try_from(i.degree()).unwrap())
            .collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2]);
    }


    #[test]
    fn tensor_products_with_split_and_irrational_components() {
        // D4 x A1 exercises the split characters inside a product; I2(5) x A1
        // exercises component values in an irrational field.
        for (t, count) in [("D4xA1", 26), ("G2xA1", 12), ("I2(5)xA1", 8)] {
            let table = char_table(&group(t)).unwrap();
            assert_eq!(table.irreducibles.len(), count, "{t}");
        }
    }

    #[test]
    fn json_format_tag() {
        let table = char_table(&group("A2")).unwrap();
        let doc = table.to_json();
        assert_eq!(doc.format, "chartab-v1");
        assert_eq!(doc.classes.len(), 3);
    }
}
