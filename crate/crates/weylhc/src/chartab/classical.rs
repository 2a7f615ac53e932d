//! Character tables of the classical families: type A via the
//! Murnaghan–Nakayama rule on partitions, types B/C via the wreath-product
//! rule on bipartitions, and type D by restriction-and-split from B.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::field::AlgNum;
use crate::rootdata::SimpleType;

use super::partitions::{bipartitions, mn_hyperoctahedral, mn_symmetric, partitions, MnBMemo};
use super::{CharacterTable, IrrLabel, Irreducible};

/// alpha-coordinates of the image of the i-th simple root under `w`, as
/// exact rationals (crystallographic types only).
fn image_vector(group: &CoxeterGroup, w: u32, i: usize) -> Vec<BigRational> {
    let v = group.elements[w as usize].0[i];
    let m = v.unsigned_abs() as usize - 1;
    let root = &group.datum.positive_roots[m];
    root.iter()
        .map(|x| {
            let r = x
                .as_rational()
                .expect("crystallographic root coordinates are rational");
            if v > 0 {
                r
            } else {
                -r
            }
        })
        .collect()
}

/// The permutation of {0..n} induced by an element of W(A_n) on the standard
/// basis of R^{n+1}, recovered by chaining the images of the simple roots
/// alpha_i = e_i - e_{i+1}.
fn permutation_a(group: &CoxeterGroup, w: u32) -> Vec<usize> {
    let n = group.rank();
    // e-coordinates of an alpha-coordinate vector.
    let to_e = |v: &[BigRational]| {
        let mut u = vec![BigRational::from_integer(BigInt::from(0)); n + 1];
        for (i, c) in v.iter().enumerate() {
            u[i] += c;
            u[i + 1] -= c;
        }
        u
    };
    let one = BigRational::one();
    let mut pi = vec![usize::MAX; n + 1];
    for i in 0..n {
        let u = to_e(&image_vector(group, w, i));
        let a = u
            .iter()
            .position(|x| *x == one)
            .expect("image is e_a - e_b");
        let b = u
            .iter()
            .position(|x| *x == -one.clone())
            .expect("image is e_a - e_b");
        if i == 0 {
            pi[0] = a;
        } else {
            debug_assert_eq!(pi[i], a);
        }
        pi[i + 1] = b;
    }
    pi
}

/// The signed permutation on {e_1..e_n} induced by an element of W(B_n),
/// W(C_n) or W(D_n): entry i is `+-(m+1)` when `w(e_i) = +-e_m`.
fn signed_permutation(group: &CoxeterGroup, w: u32, family: SimpleType) -> Vec<i32> {
    let n = group.rank();
    let zero = BigRational::from_integer(BigInt::from(0));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    // e_i as a rational combination of simple roots.
    let e_in_alpha = |i: usize| -> Vec<BigRational> {
        let mut c = vec![zero.clone(); n];
        match family {
            SimpleType::B(_) => {
                for item in c.iter_mut().take(n).skip(i) {
                    *item = BigRational::one();
                }
            }
            SimpleType::C(_) => {
                for item in c.iter_mut().take(n - 1).skip(i) {
                    *item = BigRational::one();
                }
                c[n - 1] = half.clone();
            }
            SimpleType::D(_) => {
                if i <= n - 2 {
                    for item in c.iter_mut().take(n - 2).skip(i) {
                        *item = BigRational::one();
                    }
                    c[n - 2] = half.clone();
                    c[n - 1] = half.clone();
                } else {
                    c[n - 2] = -half.clone();
                    c[n - 1] = half.clone();
                }
            }
            _ => unreachable!(),
        }
        c
    };
    // alpha-coordinates of w(e_i), then convert to e-coordinates.
    let to_e = |v: &[BigRational]| -> Vec<BigRational> {
        let mut u = vec![zero.clone(); n];
        match family {
            SimpleType::B(_) => {
                for (k, c) in v.iter().enumerate() {
                    if k < n - 1 {
                        u[k] += c;
                        u[k + 1] -= c;
                    } else {
                        u[n - 1] += c;
                    }
                }
            }
            SimpleType::C(_) => {
                for (k, c) in v.iter().enumerate() {
                    if k < n - 1 {
                        u[k] += c;
                        u[k + 1] -= c;
                    } else {
                        u[n - 1] += c + c;
                    }
                }
            }
            SimpleType::D(_) => {
                for (k, c) in v.iter().enumerate() {
                    if k < n - 1 {
                        u[k] += c;
                        u[k + 1] -= c;
                    } else {
                        u[n - 2] += c;
                        u[n - 1] += c;
                    }
                }
            }
            _ => unreachable!(),
        }
        u
    };
    let mut out = vec![0i32; n];
    for i in 0..n {
        let coeffs = e_in_alpha(i);
        let mut acc = vec![zero.clone(); n];
        for (k, c) in coeffs.iter().enumerate() {
            if c == &zero {
                continue;
            }
            let img = image_vector(group, w, k);
            for (t, x) in img.iter().enumerate() {
                acc[t] += c * x;
            }
        }
        let u = to_e(&acc);
        let one = BigRational::one();
        let m = u
            .iter()
            .position(|x| *x == one || *x == -one.clone())
            .expect("w(e_i) is a signed basis vector");
        debug_assert!(u.iter().enumerate().all(|(t, x)| t == m || *x == zero));
        out[i] = if u[m] == one {
            m as i32 + 1
        } else {
            -(m as i32 + 1)
        };
    }
    out
}

/// Signed cycle type: positive-cycle parts and negative-cycle parts, each
/// sorted descending.
fn signed_cycle_type(sp: &[i32]) -> (Vec<u32>, Vec<u32>) {
    let n = sp.len();
    let mut seen = vec![false; n];
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut sign = 1i32;
        let mut cur = start;
        loop {
            seen[cur] = true;
            len += 1;
            let v = sp[cur];
            sign *= v.signum();
            let next = v.unsigned_abs() as usize - 1;
            if next == start {
                break;
            }
            cur = next;
        }
        if sign > 0 {
            alpha.push(len);
        } else {
            beta.push(len);
        }
    }
    alpha.sort_unstable_by(|a, b| b.cmp(a));
    beta.sort_unstable_by(|a, b| b.cmp(a));
    (alpha, beta)
}

fn cycle_type_a(pi: &[usize]) -> Vec<u32> {
    let n = pi.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            len += 1;
            cur = pi[cur];
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Character table of W(A_n) = S_{n+1}, irreducibles labeled by partitions
/// of n+1, via the Murnaghan–Nakayama recursion.
pub fn char_table_symmetric(group: &Arc<CoxeterGroup>, n: u32) -> Result<CharacterTable> {
    if !(1..=11).contains(&n) {
        return Err(Error::Domain(format!("type A rank {n} outside 1..=11")));
    }
    if group.datum.ctype.components != [SimpleType::A(n)] {
        return Err(Error::Domain(
            "group is not a canonical A_n realization".into(),
        ));
    }
    let class_types: Vec<Vec<u32>> = group
        .classes
        .iter()
        .map(|c| cycle_type_a(&permutation_a(group, c.rep)))
        .collect();
    let field = &group.datum.field;
    let mut memo = MnBMemo::new();
    let irreducibles = partitions(n + 1)
        .into_iter()
        .map(|lam| {
            let values = class_types
                .iter()
                .map(|alpha| {
                    let v = mn_hyperoctahedral(&lam, &[], alpha, &[], &mut memo);
                    AlgNum::from_rational(field, BigRational::from_integer(v))
                })
                .collect();
            Irreducible {
                label: IrrLabel::Partition(lam),
                phi: None,
                values,
            }
        })
        .collect();
    let table = CharacterTable {
        group: Arc::clone(group),
        irreducibles,
    };
    table.verify()?;
    Ok(table)
}

/// Character table of W(B_n) = W(C_n), irreducibles labeled by ordered
/// bipartitions.
pub fn char_table_hyperoctahedral(group: &Arc<CoxeterGroup>, n: u32) -> Result<CharacterTable> {
    if !(2..=6).contains(&n) {
        return Err(Error::Domain(format!("type B/C rank {n} outside 2..=6")));
    }
    let family = group.datum.ctype.components[0];
    if group.datum.ctype.components != [SimpleType::B(n)]
        && group.datum.ctype.components != [SimpleType::C(n)]
    {
        return Err(Error::Domain(
            "group is not a canonical B_n/C_n realization".into(),
        ));
    }
    let class_types: Vec<(Vec<u32>, Vec<u32>)> = group
        .classes
        .iter()
        .map(|c| signed_cycle_type(&signed_permutation(group, c.rep, family)))
        .collect();
    let field = &group.datum.field;
    let mut memo = MnBMemo::new();
    let irreducibles = bipartitions(n)
        .into_iter()
        .map(|(lam, mu)| {
            let values = class_types
                .iter()
                .map(|(alpha, beta)| {
                    let v = mn_hyperoctahedral(&lam, &mu, alpha, beta, &mut memo);
                    AlgNum::from_rational(field, BigRational::from_integer(v))
                })
                .collect();
            Irreducible {
                label: IrrLabel::Bipartition(lam, mu),
                phi: None,
                values,
            }
        })
        .collect();
    let table = CharacterTable {
        group: Arc::clone(group),
        irreducibles,
    };
    table.verify()?;
    Ok(table)
}

/// Character table of W(D_n) by restriction from W(B_n): unordered
/// bipartitions, with degenerate pairs split into two characters whose
/// values on the split classes are fixed by the pure-permutation anchor.
pub fn char_table_demihyperoctahedral(group: &Arc<CoxeterGroup>, n: u32) -> Result<CharacterTable> {
    if !(3..=6).contains(&n) {
        return Err(Error::Domain(format!("type D rank {n} outside 3..=6")));
    }
    if group.datum.ctype.components != [SimpleType::D(n)] {
        return Err(Error::Domain(
            "group is not a canonical D_n realization".into(),
        ));
    }
    let nu = n as usize;
    // Signed cycle types of all classes; beta always has an even number of
    // parts inside D_n.
    let class_types: Vec<(Vec<u32>, Vec<u32>)> = group
        .classes
        .iter()
        .map(|c| signed_cycle_type(&signed_permutation(group, c.rep, SimpleType::D(n))))
        .collect();
    for (_, beta) in &class_types {
        debug_assert_eq!(beta.len() % 2, 0);
    }
    // Split classes: all-even alpha, empty beta. Exactly one class of each
    // such type contains pure permutations (elements of the A_{n-1}
    // parabolic on the chain generators 0..n-2).
    let pure_elements = group.subgroup_closure(&(0..nu - 1).collect::<Vec<_>>());
    let mut pure_classes = vec![false; group.num_classes()];
    for &x in &pure_elements {
        pure_classes[group.class_of[x as usize] as usize] = true;
    }
    let is_split_type =
        |t: &(Vec<u32>, Vec<u32>)| t.1.is_empty() && t.0.iter().all(|&a| a % 2 == 0);
    let field = &group.datum.field;
    let mut memo = MnBMemo::new();
    let mut irreducibles = Vec::new();
    // Non-degenerate pairs.
    let mut seen_pairs: HashMap<(Vec<u32>, Vec<u32>), ()> = HashMap::new();
    for (lam, mu) in bipartitions(n) {
        if lam == mu {
            continue;
        }
        let (a, b) = if lam <= mu {
            (lam.clone(), mu.clone())
        } else {
            (mu.clone(), lam.clone())
        };
        if seen_pairs.insert((a.clone(), b.clone()), ()).is_some() {
            continue;
        }
        let values = class_types
            .iter()
            .map(|(alpha, beta)| {
                let v = mn_hyperoctahedral(&a, &b, alpha, beta, &mut memo);
                AlgNum::from_rational(field, BigRational::from_integer(v))
            })
            .collect();
        irreducibles.push(Irreducible {
            label: IrrLabel::DPair(a, b),
            phi: None,
            values,
        });
    }
    // Degenerate pairs (n even): split into two rows.
    if n % 2 == 0 {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        for lam in partitions(n / 2) {
            for positive in [true, false] {
                let values: Vec<AlgNum> = class_types
                    .iter()
                    .enumerate()
                    .map(|(c, (alpha, beta))| {
                        let base = BigRational::from_integer(mn_hyperoctahedral(
                            &lam, &lam, alpha, beta, &mut memo,
                        )) * &half;
                        let mut v = base;
                        if is_split_type(&class_types[c]) {
                            // Difference term: +-(1/2) 2^{l(gamma)} chi_lam(gamma)
                            // on the split pair, anchored at the pure class.
                            let gamma: Vec<u32> = alpha.iter().map(|a| a / 2).collect();
                            let mut delta = BigRational::from_integer(
                                mn_symmetric(&lam, &gamma) * BigInt::from(1u32 << gamma.len()),
                            ) * &half;
                            if !pure_classes[c] {
                                delta = -delta;
                            }
                            if !positive {
                                delta = -delta;
                            }
                            v += delta;
                        }
                        AlgNum::from_rational(field, v)
                    })
                    .collect();
                irreducibles.push(Irreducible {
                    label: IrrLabel::DSplit(lam.clone(), positive),
                    phi: None,
                    values,
                });
            }
        }
    }
    let table = CharacterTable {
        group: Arc::clone(group),
        irreducibles,
    };
    table.verify()?;
    Ok(table)
}
