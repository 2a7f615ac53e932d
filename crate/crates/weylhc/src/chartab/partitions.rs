//! Partition and bipartition combinatorics: rim hooks via beta-numbers and
//! the Murnaghan–Nakayama recursions for the symmetric and hyperoctahedral
//! groups.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// All partitions of `n`, each as a descending part list, in reverse
/// lexicographic order starting from `[n]`.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = n.min(max);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    if n == 0 {
        out.push(Vec::new());
    }
    out.dedup();
    out
}

/// Ordered bipartitions `(lambda, mu)` with `|lambda| + |mu| = n`, in the
/// canonical order: `|lambda|` descending, then each factor in partition
/// order.
pub fn bipartitions(n: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for lam in partitions(a) {
            for mu in partitions(n - a) {
                out.push((lam.clone(), mu));
            }
        }
    }
    out
}

/// Number of elements of the symmetric group S_n with cycle type `alpha`
/// divided into... returns the centralizer order z_alpha; |class| = n!/z.
pub fn centralizer_order(alpha: &[u32]) -> BigInt {
    let mut mult: HashMap<u32, u32> = HashMap::new();
    for &a in alpha {
        *mult.entry(a).or_insert(0) += 1;
    }
    let mut z = BigInt::one();
    for (a, m) in mult {
        for _ in 0..m {
            z *= BigInt::from(a);
        }
        for k in 1..=m {
            z *= BigInt::from(k);
        }
    }
    z
}

/// Beta-numbers of a partition: `{lambda_i + (k - i)}` for a fixed number of
/// rows `k` (the partition padded with zeros).
fn beta_numbers(lam: &[u32], rows: usize) -> Vec<i64> {
    let mut beta = Vec::with_capacity(rows);
    for i in 0..rows {
        let part = if i < lam.len() { lam[i] as i64 } else { 0 };
        beta.push(part + (rows - 1 - i) as i64);
    }
    beta
}

fn partition_from_beta(mut beta: Vec<i64>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let rows = beta.len();
    let mut out = Vec::new();
    for (i, b) in beta.iter().enumerate() {
        let part = b - (rows - 1 - i) as i64;
        debug_assert!(part >= 0);
        if part > 0 {
            out.push(part as u32);
        }
    }
    out
}

/// All ways to remove a rim hook of length `len` from `lam`:
/// `(resulting partition, leg-length sign)`.
pub fn remove_rim_hooks(lam: &[u32], len: u32) -> Vec<(Vec<u32>, i32)> {
    if len == 0 || lam.is_empty() {
        return Vec::new();
    }
    let rows = lam.len();
    let beta = beta_numbers(lam, rows);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let target = b - len as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // Leg length = number of beta-numbers strictly between target and b.
        let leg = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        let sign = if leg % 2 == 0 { 1 } else { -1 };
        out.push((partition_from_beta(nb), sign));
    }
    out
}

/// Murnaghan–Nakayama for the symmetric group: character of `lam` at cycle
/// type `alpha`.
pub fn mn_symmetric(lam: &[u32], alpha: &[u32]) -> BigInt {
    let mut memo = HashMap::new();
    mn_a_rec(lam, alpha, &mut memo)
}

fn mn_a_rec(
    lam: &[u32],
    alpha: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>,
) -> BigInt {
    if alpha.is_empty() {
        return if lam.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (lam.to_vec(), alpha.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let a = alpha[0];
    let rest = &alpha[1..];
    let mut acc = BigInt::zero();
    for (sub, sign) in remove_rim_hooks(lam, a) {
        acc += BigInt::from(sign) * mn_a_rec(&sub, rest, memo);
    }
    memo.insert(key, acc.clone());
    acc
}

/// Shared memo table for hyperoctahedral character computation.
pub type MnBMemo = HashMap<(Vec<u32>, Vec<u32>, Vec<u32>, Vec<u32>), BigInt>;

/// Murnaghan–Nakayama for the hyperoctahedral group (Z/2 wreath S_n):
/// character labeled by the ordered bipartition `(lam, mu)` at the class of
/// signed cycle type `(alpha, beta)` (positive cycles `alpha`, negative
/// cycles `beta`). Stripping a negative cycle weights mu-hooks by -1.
pub fn mn_hyperoctahedral(
    lam: &[u32],
    mu: &[u32],
    alpha: &[u32],
    beta: &[u32],
    memo: &mut MnBMemo,
) -> BigInt {
    if alpha.is_empty() && beta.is_empty() {
        return if lam.is_empty() && mu.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (lam.to_vec(), mu.to_vec(), alpha.to_vec(), beta.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = BigInt::zero();
    if !alpha.is_empty() {
        let a = alpha[0];
        let rest = &alpha[1..];
        for (sub, sign) in remove_rim_hooks(lam, a) {
            acc += BigInt::from(sign) * mn_hyperoctahedral(&sub, mu, rest, beta, memo);
        }
        for (sub, sign) in remove_rim_hooks(mu, a) {
            acc += BigInt::from(sign) * mn_hyperoctahedral(lam, &sub, rest, beta, memo);
        }
    } else {
        let b = beta[0];
        let rest = &beta[1..];
        for (sub, sign) in remove_rim_hooks(lam, b) {
            acc += BigInt::from(sign) * mn_hyperoctahedral(&sub, mu, alpha, rest, memo);
        }
        for (sub, sign) in remove_rim_hooks(mu, b) {
            acc -= BigInt::from(sign) * mn_hyperoctahedral(lam, &sub, alpha, rest, memo);
        }
    }
    memo.insert(key, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(bipartitions(2).len(), 5);
        assert_eq!(bipartitions(3).len(), 10);
        assert_eq!(bipartitions(6).len(), 65);
    }

    #[test]
    fn rim_hooks_of_staircase() {
        // From (2,1): removing a 3-hook leaves the empty partition with leg 1.
        let hooks = remove_rim_hooks(&[2, 1], 3);
        assert_eq!(hooks, vec![(vec![], -1)]);
        // Removing 1-hooks from (2,1): two corners.
        let hooks = remove_rim_hooks(&[2, 1], 1);
        assert_eq!(hooks.len(), 2);
    }

    #[test]
    fn symmetric_group_s3_table() {
        // S_3: classes (1,1,1), (2,1), (3); irreducibles (3), (2,1), (1,1,1).
        let classes: [&[u32]; 3] = [&[1, 1, 1], &[2, 1], &[3]];
        let expect: [(&[u32], [i64; 3]); 3] = [
            (&[3], [1, 1, 1]),
            (&[2, 1], [2, 0, -1]),
            (&[1, 1, 1], [1, -1, 1]),
        ];
        for (lam, vals) in expect {
            for (c, v) in classes.iter().zip(vals) {
                assert_eq!(
                    mn_symmetric(lam, c),
                    BigInt::from(v),
                    "lam={lam:?} alpha={c:?}"
                );
            }
        }
    }

    #[test]
    fn symmetric_group_s4_degrees() {
        let id = [1u32, 1, 1, 1];
        let degs: Vec<BigInt> = partitions(4)
            .iter()
            .map(|lam| mn_symmetric(lam, &id))
            .collect();
        let mut d: Vec<i64> = degs.iter().map(|x| i64::try_from(x).unwrap()).collect();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn hyperoctahedral_b2_table() {
        // B2 classes: (11;), (1;1), (2;), (;11), (;2) and the five
        // irreducibles (2;), (11;), (1;1), (;2), (;11).
        let mut memo = MnBMemo::new();
        let val = |l: &[u32], m: &[u32], a: &[u32], b: &[u32], memo: &mut MnBMemo| {
            i64::try_from(&mn_hyperoctahedral(l, m, a, b, memo)).unwrap()
        };
        // Trivial character (2;) is 1 everywhere.
        for (a, b) in [
            (vec![1, 1], vec![]),
            (vec![1], vec![1]),
            (vec![2], vec![]),
            (vec![], vec![1, 1]),
            (vec![], vec![2]),
        ] {
            assert_eq!(val(&[2], &[], &a, &b, &mut memo), 1);
        }
        // (;11) is the sign character: parity of length.
        assert_eq!(val(&[], &[1, 1], &[1, 1], &[], &mut memo), 1);
        assert_eq!(val(&[], &[1, 1], &[1], &[1], &mut memo), -1);
        assert_eq!(val(&[], &[1, 1], &[2], &[], &mut memo), -1);
        assert_eq!(val(&[], &[1, 1], &[], &[1, 1], &mut memo), 1);
        assert_eq!(val(&[], &[1, 1], &[], &[2], &mut memo), 1);
        // The two-dimensional character (1;1).
        assert_eq!(val(&[1], &[1], &[1, 1], &[], &mut memo), 2);
        assert_eq!(val(&[1], &[1], &[1], &[1], &mut memo), 0);
        assert_eq!(val(&[1], &[1], &[2], &[], &mut memo), 0);
        assert_eq!(val(&[1], &[1], &[], &[1, 1], &mut memo), -2);
        assert_eq!(val(&[1], &[1], &[], &[2], &mut memo), 0);
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer_order(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(centralizer_order(&[2, 1]), BigInt::from(2));
        assert_eq!(centralizer_order(&[3]), BigInt::from(3));
    }
}
