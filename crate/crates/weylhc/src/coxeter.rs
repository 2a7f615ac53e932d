//! Finite Coxeter groups realised as signed permutations of their positive
//! roots: enumeration, length, conjugacy classes, parabolic subgroups,
//! normalizers and relative Weyl groups N_W(W_J)/W_J.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::AlgNum;
use crate::rootdata::{build_root_datum, classify_subdiagram, CartanType, RootDatum};

/// Default enumeration bound (number of group elements).
pub const DEFAULT_BOUND: u64 = 200_000;
/// Hard cap for the configurable bound; E7 and E8 stay out of reach.
pub const MAX_BOUND: u64 = 10_000_000;

/// A group element as the signed permutation it induces on positive roots:
/// entry `k` is `+-(m+1)` when the element maps positive root `k` to
/// `+-beta_m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm(pub Box<[i16]>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i16).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k as i16 + 1)
    }

    /// `self` composed after `other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let out = other
            .0
            .iter()
            .map(|&v| {
                let m = v.unsigned_abs() as usize - 1;
                if v > 0 {
                    self.0[m]
                } else {
                    -self.0[m]
                }
            })
            .collect();
        SignedPerm(out)
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0i16; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            let m = v.unsigned_abs() as usize - 1;
            out[m] = if v > 0 { k as i16 + 1 } else { -(k as i16 + 1) };
        }
        SignedPerm(out.into_boxed_slice())
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> u32 {
        self.0.iter().filter(|&&v| v < 0).count() as u32
    }
}

/// One conjugacy class: canonical representative (minimal length, then
/// lexicographically minimal permutation), size, and minimal length.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: u32,
    pub size: u64,
    pub min_length: u32,
}

/// A finite Coxeter group with all elements enumerated.
pub struct CoxeterGroup {
    pub datum: RootDatum,
    pub gens: Vec<SignedPerm>,
    pub elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, u32>,
    pub lengths: Vec<u32>,
    /// BFS provenance: for each non-identity element, (previous element,
    /// generator) with `elements[k] = elements[prev] * gen`.
    bfs_prev: Vec<(u32, u8)>,
    pub inverses: Vec<u32>,
    gen_index: Vec<u32>,
    pub classes: Vec<ConjClass>,
    pub class_of: Vec<u32>,
}

impl std::fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CoxeterGroup({}, order {})",
            self.datum.ctype,
            self.order()
        )
    }
}

impl CoxeterGroup {
    /// Build the group of a Cartan type: root datum, full enumeration and
    /// conjugacy classes.
    pub fn build(ctype: &CartanType, bound: u64) -> Result<Arc<CoxeterGroup>> {
        let datum = build_root_datum(ctype)?;
        Self::enumerate(datum, bound)
    }

    pub fn build_default(ctype: &CartanType) -> Result<Arc<CoxeterGroup>> {
        Self::build(ctype, DEFAULT_BOUND)
    }

    /// Enumerate all elements of the reflection group of `datum`.
    pub fn enumerate(datum: RootDatum, bound: u64) -> Result<Arc<CoxeterGroup>> {
        let order = datum.ctype.group_order();
        // E7 and E8 are refused outright: their orders are the point of the
        // desk-scale guarantee, independent of any configured bound.
        let has_huge_e = datum
            .ctype
            .components
            .iter()
            .any(|c| matches!(c, crate::rootdata::SimpleType::E(n) if *n >= 7));
        if has_huge_e || order > BigUint::from(bound.min(MAX_BOUND)) {
            return Err(Error::BoundExceeded {
                order,
                bound: bound.min(MAX_BOUND),
            });
        }
        let n = datum.positive_roots.len();
        let r = datum.rank();

        // Generator permutations from the exact reflection action.
        let mut root_lookup: HashMap<String, usize> = HashMap::new();
        let root_key = |v: &[AlgNum]| {
            v.iter()
                .map(|x| x.to_exact_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        for (k, v) in datum.positive_roots.iter().enumerate() {
            root_lookup.insert(root_key(v), k);
        }
        let mut gens = Vec::with_capacity(r);
        for i in 0..r {
            let mut perm = vec![0i16; n];
            for k in 0..n {
                if k == i {
                    perm[k] = -(i as i16 + 1);
                } else {
                    let w = datum.reflect(&datum.positive_roots[k], i);
                    let m = *root_lookup
                        .get(&root_key(&w))
                        .expect("s_i permutes the positive roots other than alpha_i");
                    perm[k] = m as i16 + 1;
                }
            }
            gens.push(SignedPerm(perm.into_boxed_slice()));
        }

        // Breadth-first enumeration by right multiplication.
        let mut elements = vec![SignedPerm::identity(n)];
        let mut index: HashMap<SignedPerm, u32> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut lengths = vec![0u32];
        let mut bfs_prev = vec![(0u32, 0u8)];
        let mut queue = VecDeque::from([0u32]);
        while let Some(w) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let ws = elements[w as usize].compose(g);
                if !index.contains_key(&ws) {
                    let id = elements.len() as u32;
                    index.insert(ws.clone(), id);
                    elements.push(ws);
                    lengths.push(lengths[w as usize] + 1);
                    bfs_prev.push((w, i as u8));
                    queue.push_back(id);
                }
            }
        }
        debug_assert_eq!(BigUint::from(elements.len()), order);
        debug_assert!(elements.iter().zip(&lengths).all(|(e, &l)| e.length() == l));

        let inverses: Vec<u32> = elements.iter().map(|e| index[&e.inverse()]).collect();
        let gen_index: Vec<u32> = gens.iter().map(|g| index[g]).collect();

        let mut group = CoxeterGroup {
            datum,
            gens,
            elements,
            index,
            lengths,
            bfs_prev,
            inverses,
            gen_index,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.compute_classes();
        Ok(Arc::new(group))
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn element_index(&self, p: &SignedPerm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn compose_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].compose(&self.elements[b as usize]);
        self.index[&p]
    }

    pub fn conjugate_idx(&self, g: u32, x: u32) -> u32 {
        let gi = self.inverses[g as usize];
        self.compose_idx(self.compose_idx(g, x), gi)
    }

    pub fn generator_index(&self, i: usize) -> u32 {
        self.gen_index[i]
    }

    /// Conjugacy classes by orbit closure under conjugation by generators,
    /// canonically ordered by (minimal class length, lexicographically
    /// minimal representative permutation).
    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut raw: Vec<(u32, u64, u32)> = Vec::new(); // (rep, size, min_length)
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let cid = raw.len() as u32;
            class_of[start as usize] = cid;
            let mut orbit = vec![start];
            let mut head = 0;
            let mut best = start;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in 0..self.gens.len() {
                    let gi = self.gen_index[g];
                    let y = self.compose_idx(self.compose_idx(gi, x), gi);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = cid;
                        orbit.push(y);
                        let yb = (self.lengths[y as usize], &self.elements[y as usize].0);
                        let bb = (self.lengths[best as usize], &self.elements[best as usize].0);
                        if yb < bb {
                            best = y;
                        }
                    }
                }
            }
            raw.push((best, orbit.len() as u64, self.lengths[best as usize]));
        }
        // Canonical class order.
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| {
            let ka = (raw[a].2, &self.elements[raw[a].0 as usize].0);
            let kb = (raw[b].2, &self.elements[raw[b].0 as usize].0);
            ka.cmp(&kb)
        });
        let mut relabel = vec![0u32; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        self.classes = order
            .iter()
            .map(|&o| ConjClass {
                rep: raw[o].0,
                size: raw[o].1,
                min_length: raw[o].2,
            })
            .collect();
        self.class_of = class_of.into_iter().map(|c| relabel[c as usize]).collect();
        debug_assert_eq!(
            self.classes.iter().map(|c| c.size).sum::<u64>(),
            self.order()
        );
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        let rep = self.classes[c].rep;
        self.class_of[self.inverses[rep as usize] as usize] as usize
    }

    /// All element indices of the subgroup generated by the given simple
    /// reflections, in ascending index order.
    pub fn subgroup_closure(&self, j: &[usize]) -> Vec<u32> {
        let mut seen = vec![false; self.elements.len()];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for &i in j {
                let y = self.compose_idx(x, self.gen_index[i]);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The set of conjugacy classes of `self` meeting the standard parabolic
    /// subgroup W_J.
    pub fn classes_meeting(&self, j: &[usize]) -> BTreeSet<u32> {
        self.subgroup_closure(j)
            .iter()
            .map(|&x| self.class_of[x as usize])
            .collect()
    }

    /// Longest element.
    pub fn longest_element(&self) -> u32 {
        (0..self.elements.len() as u32)
            .max_by_key(|&i| self.lengths[i as usize])
            .unwrap()
    }

    /// `l(s_i w) < l(w)`.
    pub fn left_descent(&self, w: u32, i: usize) -> bool {
        let winv = self.inverses[w as usize];
        self.elements[winv as usize].0[i] < 0
    }

    /// `l(w s_i) < l(w)`.
    pub fn right_descent(&self, w: u32, i: usize) -> bool {
        self.elements[w as usize].0[i] < 0
    }

    /// A reduced word for `w`, as simple-reflection indices.
    pub fn reduced_word(&self, w: u32) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.lengths[w as usize] as usize);
        let mut cur = w;
        while cur != 0 {
            let i = (0..self.rank())
                .find(|&i| self.left_descent(cur, i))
                .expect("non-identity elements have a left descent");
            word.push(i);
            cur = self.compose_idx(self.gen_index[i], cur);
        }
        word
    }

    /// Minimal-length coset representatives for W_J \ W.
    pub fn min_coset_reps(&self, j: &[usize]) -> Vec<u32> {
        (0..self.elements.len() as u32)
            .filter(|&w| j.iter().all(|&i| !self.left_descent(w, i)))
            .collect()
    }

    /// Element order.
    pub fn element_order(&self, w: u32) -> u32 {
        let mut x = w;
        let mut k = 1;
        while x != 0 {
            x = self.compose_idx(x, w);
            k += 1;
        }
        k
    }

    /// Matrix of `w` in the reflection representation (columns are the images
    /// of the simple roots, in simple-root coordinates).
    pub fn reflection_matrix(&self, w: u32) -> Vec<Vec<AlgNum>> {
        let r = self.rank();
        let perm = &self.elements[w as usize];
        let mut cols = Vec::with_capacity(r);
        for i in 0..r {
            let v = perm.0[i];
            let m = v.unsigned_abs() as usize - 1;
            let root = &self.datum.positive_roots[m];
            let col: Vec<AlgNum> = if v > 0 {
                root.clone()
            } else {
                root.iter().map(|x| x.neg()).collect()
            };
            cols.push(col);
        }
        // Transpose to row-major M[row][col].
        (0..r)
            .map(|row| (0..r).map(|col| cols[col][row].clone()).collect())
            .collect()
    }

    /// Poincaré polynomial `sum_w q^{l(w)}` as exponent-indexed coefficients.
    pub fn length_distribution(&self) -> Vec<u64> {
        let max = *self.lengths.iter().max().unwrap() as usize;
        let mut out = vec![0u64; max + 1];
        for &l in &self.lengths {
            out[l as usize] += 1;
        }
        out
    }
}

/// A standard parabolic subgroup W_J together with a standalone realization
/// on the canonical root datum of its own Cartan type.
pub struct ParabolicSubgroup {
    pub j: Vec<usize>,
    pub sub_type: CartanType,
    /// Standalone group on the canonical datum of `sub_type`.
    pub group: Arc<CoxeterGroup>,
    /// Standalone generator position -> parent simple-reflection index.
    pub gen_map: Vec<usize>,
    /// Standalone element index -> parent element index.
    pub to_parent: Vec<u32>,
}

/// Build the standard parabolic subgroup generated by the simple reflections
/// in `j` (0-based indices into the parent's generators).
pub fn parabolic_subgroup(parent: &Arc<CoxeterGroup>, j: &[usize]) -> Result<ParabolicSubgroup> {
    let mut j: Vec<usize> = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.iter().any(|&i| i >= parent.rank()) {
        return Err(Error::Domain(format!(
            "parabolic indices {:?} out of range for rank {}",
            j,
            parent.rank()
        )));
    }
    if j.is_empty() {
        return Err(Error::Domain(
            "empty parabolic has no standalone realization; use FusionData::trivial".into(),
        ));
    }
    let (sub_type, gen_map) = classify_subdiagram(&parent.datum.coxeter, &j)?;
    let datum = build_root_datum(&sub_type)?;
    let group = CoxeterGroup::enumerate(datum, parent.order())?;

    // Replay the standalone BFS inside the parent.
    let mut to_parent = vec![0u32; group.elements.len()];
    for k in 1..group.elements.len() {
        let (prev, gen) = group.bfs_prev[k];
        let pgen = parent.gen_index[gen_map[gen as usize]];
        to_parent[k] = parent.compose_idx(to_parent[prev as usize], pgen);
    }
    debug_assert_eq!(
        {
            let mut sorted = to_parent.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len()
        },
        group.elements.len()
    );

    Ok(ParabolicSubgroup {
        j,
        sub_type,
        group,
        gen_map,
        to_parent,
    })
}

/// The relative Weyl group N_W(W_J)/W_J as a finite group on coset
/// representatives.
pub struct RelativeWeylGroup {
    pub j: Vec<usize>,
    /// Minimal-length representative of each coset; index 0 is the identity
    /// coset.
    pub coset_reps: Vec<u32>,
    /// `table[a][b]` = coset index of `reps[a] * reps[b]` (present when the
    /// quotient is small enough to materialise).
    pub table: Option<Vec<Vec<u32>>>,
    pub normalizer_order: u64,
    pub subgroup_order: u64,
    coset_key: HashMap<u32, u32>,
}

impl RelativeWeylGroup {
    pub fn order(&self) -> u64 {
        self.coset_reps.len() as u64
    }

    /// Coset index of an arbitrary normalizer element.
    pub fn coset_of(&self, n: u32) -> Option<u32> {
        self.coset_key.get(&n).copied()
    }

    pub fn mult(&self, w: &CoxeterGroup, a: usize, b: usize) -> u32 {
        let prod = w.compose_idx(self.coset_reps[a], self.coset_reps[b]);
        self.coset_key[&prod]
    }
}

pub fn relative_weyl_group(parent: &Arc<CoxeterGroup>, j: &[usize]) -> Result<RelativeWeylGroup> {
    let mut j: Vec<usize> = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.iter().any(|&i| i >= parent.rank()) {
        return Err(Error::Domain(format!(
            "indices {:?} out of range for rank {}",
            j,
            parent.rank()
        )));
    }
    let wj = parent.subgroup_closure(&j);
    let wj_set: Vec<bool> = {
        let mut v = vec![false; parent.elements.len()];
        for &x in &wj {
            v[x as usize] = true;
        }
        v
    };
    // Normalizer: w s_j w^-1 in W_J for every j in J.
    let mut normalizer = Vec::new();
    for w in 0..parent.elements.len() as u32 {
        let ok = j.iter().all(|&i| {
            let c = parent.conjugate_idx(w, parent.gen_index[i]);
            wj_set[c as usize]
        });
        if ok {
            normalizer.push(w);
        }
    }
    // Cosets n W_J keyed by their minimal element index.
    let mut coset_key: HashMap<u32, u32> = HashMap::new();
    let mut coset_min: Vec<u32> = Vec::new();
    let mut pending: Vec<(u32, u32)> = Vec::new(); // (element, raw key)
    for &n in &normalizer {
        let key = wj.iter().map(|&x| parent.compose_idx(n, x)).min().unwrap();
        pending.push((n, key));
        if !coset_min.contains(&key) {
            coset_min.push(key);
        }
    }
    // Canonical coset order: by (length, index) of the minimal-length element.
    let mut reps: Vec<u32> = coset_min
        .iter()
        .map(|&key| {
            pending
                .iter()
                .filter(|&&(_, k)| k == key)
                .map(|&(n, _)| n)
                .min_by_key(|&n| (parent.lengths[n as usize], n))
                .unwrap()
        })
        .collect();
    reps.sort_by_key(|&n| (parent.lengths[n as usize], n));
    let rep_key: HashMap<u32, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, &rep)| {
            let key = wj
                .iter()
                .map(|&x| parent.compose_idx(rep, x))
                .min()
                .unwrap();
            (key, i as u32)
        })
        .collect();
    for (n, key) in pending {
        coset_key.insert(n, rep_key[&key]);
    }
    let q = reps.len();
    let table = if (q * q) as u64 <= 10_000_000 {
        let mut t = vec![vec![0u32; q]; q];
        for a in 0..q {
            for b in 0..q {
                let prod = parent.compose_idx(reps[a], reps[b]);
                t[a][b] = coset_key[&prod];
            }
        }
        Some(t)
    } else {
        None
    };
    Ok(RelativeWeylGroup {
        j,
        coset_reps: reps,
        table,
        normalizer_order: normalizer.len() as u64,
        subgroup_order: wj.len() as u64,
        coset_key,
    })
}

/// Result of the exhaustive complement search for
/// `1 -> W_J -> N_W(W_J) -> N_W(W_J)/W_J -> 1`.
pub struct SplitCheck {
    pub split: bool,
    /// A set of coset representatives closed under multiplication, when one
    /// exists.
    pub section: Option<Vec<u32>>,
}

pub fn normalizer_splitting_check(parent: &Arc<CoxeterGroup>, j: &[usize]) -> Result<SplitCheck> {
    let mut j: Vec<usize> = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.is_empty() {
        // 1 -> 1 -> W -> W -> 1 splits with section W.
        let section: Vec<u32> = (0..parent.elements.len() as u32).collect();
        return Ok(SplitCheck {
            split: true,
            section: Some(section),
        });
    }
    if j.len() == parent.rank() {
        return Ok(SplitCheck {
            split: true,
            section: Some(vec![0]),
        });
    }
    let rw = relative_weyl_group(parent, &j)?;
    let q = rw.coset_reps.len();
    if q == 1 {
        return Ok(SplitCheck {
            split: true,
            section: Some(vec![0]),
        });
    }
    let table = rw
        .table
        .as_ref()
        .ok_or_else(|| Error::Domain("quotient too large for complement search".to_string()))?;

    // Fast path: the minimal-length transversal is often already a subgroup.
    let transversal_closed = (0..q).all(|a| {
        (0..q).all(|b| {
            let prod = parent.compose_idx(rw.coset_reps[a], rw.coset_reps[b]);
            rw.coset_reps.contains(&prod)
        })
    });
    if transversal_closed {
        return Ok(SplitCheck {
            split: true,
            section: Some(rw.coset_reps.clone()),
        });
    }

    // Greedy minimal generating set of the quotient.
    let mut gens: Vec<u32> = Vec::new();
    let mut closure = quotient_closure(table, &gens);
    while closure.len() < q {
        let next = (0..q as u32).find(|c| !closure.contains(c)).unwrap();
        gens.push(next);
        closure = quotient_closure(table, &gens);
    }

    // Lift candidates: all elements of each generating coset.
    let wj = parent.subgroup_closure(&j);
    let coset_members: Vec<Vec<u32>> = gens
        .iter()
        .map(|&c| {
            let rep = rw.coset_reps[c as usize];
            wj.iter().map(|&x| parent.compose_idx(rep, x)).collect()
        })
        .collect();
    let combos: u64 = coset_members.iter().map(|m| m.len() as u64).product();
    if combos > 2_000_000 {
        return Err(Error::Domain(format!(
            "complement search space too large ({combos} lift tuples)"
        )));
    }
    let wj_set: Vec<bool> = {
        let mut v = vec![false; parent.elements.len()];
        for &x in &wj {
            v[x as usize] = true;
        }
        v
    };
    let mut choice = vec![0usize; gens.len()];
    loop {
        let lifts: Vec<u32> = choice
            .iter()
            .zip(&coset_members)
            .map(|(&c, m)| m[c])
            .collect();
        if let Some(section) = try_complement(parent, &lifts, &wj_set, q) {
            return Ok(SplitCheck {
                split: true,
                section: Some(section),
            });
        }
        // Next tuple.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(SplitCheck {
                    split: false,
                    section: None,
                });
            }
            choice[i] += 1;
            if choice[i] < coset_members[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn quotient_closure(table: &[Vec<u32>], gens: &[u32]) -> BTreeSet<u32> {
    let mut closure = BTreeSet::from([0u32]);
    let mut queue: Vec<u32> = vec![0];
    while let Some(a) = queue.pop() {
        for &g in gens {
            let b = table[a as usize][g as usize];
            if closure.insert(b) {
                queue.push(b);
            }
        }
    }
    closure
}

/// Close the lifts under multiplication; succeed iff the subgroup has the
/// quotient's order and meets W_J only in the identity.
fn try_complement(
    parent: &CoxeterGroup,
    lifts: &[u32],
    wj_set: &[bool],
    q: usize,
) -> Option<Vec<u32>> {
    let mut seen = BTreeSet::from([0u32]);
    let mut queue: Vec<u32> = vec![0];
    while let Some(x) = queue.pop() {
        for &g in lifts {
            let y = parent.compose_idx(x, g);
            if seen.contains(&y) {
                continue;
            }
            if y != 0 && wj_set[y as usize] {
                return None;
            }
            if seen.len() >= q {
                return None;
            }
            seen.insert(y);
            queue.push(y);
        }
    }
    if seen.len() == q {
        Some(seen.into_iter().collect())
    } else {
        None
    }
}
