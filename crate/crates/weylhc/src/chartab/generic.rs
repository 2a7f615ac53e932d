//! Exact character tables from class-multiplication matrices.
//!
//! The central characters are the common eigenvectors of the class matrices
//! `M_j[l][k] = #{(x,y) in C_j x C_l : xy = g_k}`. The classical approach
//! finds them modulo a large prime; here everything is done in exact
//! arithmetic instead: minimal polynomials over `Q`, their roots in the
//! group's real cyclotomic field (located by Hensel lifting and exact
//! verification), and kernel splitting over that field. Orthogonality of the
//! result is verified before it is returned.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::field::{poly_divrem_q, poly_gcd_q, poly_mul_q, AlgNum, RealCycField};
use crate::par;

use super::{CharacterTable, IrrLabel, Irreducible};

/// Integer class matrices; `out[j][l][k]` counts products landing on the
/// representative of class `k`. Parallel over elements when enabled.
pub fn class_matrices(group: &CoxeterGroup) -> Vec<Vec<Vec<i64>>> {
    let k = group.num_classes();
    let n = group.elements.len();
    // Below a few thousand elements the per-chunk accumulators cost more
    // than the counting; keep small groups in one chunk.
    let chunk = (n / 16).max(4096);
    let partials = par::fold_range_chunks(
        n,
        chunk,
        || vec![vec![vec![0i64; k]; k]; k],
        |acc, x| {
            let j = group.class_of[x] as usize;
            let xinv = group.inverses[x];
            for (kc, class) in group.classes.iter().enumerate() {
                let y = group.compose_idx(xinv, class.rep);
                let l = group.class_of[y as usize] as usize;
                acc[j][l][kc] += 1;
            }
        },
    );
    let mut out = vec![vec![vec![0i64; k]; k]; k];
    for part in partials {
        for j in 0..k {
            for l in 0..k {
                for kc in 0..k {
                    out[j][l][kc] += part[j][l][kc];
                }
            }
        }
    }
    out
}

/// Sequential variant, kept callable for benchmarking the two code paths.
#[doc(hidden)]
pub fn class_matrices_seq(group: &CoxeterGroup) -> Vec<Vec<Vec<i64>>> {
    let k = group.num_classes();
    let mut out = vec![vec![vec![0i64; k]; k]; k];
    for x in 0..group.elements.len() {
        let j = group.class_of[x] as usize;
        let xinv = group.inverses[x];
        for (kc, class) in group.classes.iter().enumerate() {
            let y = group.compose_idx(xinv, class.rep);
            let l = group.class_of[y as usize] as usize;
            out[j][l][kc] += 1;
        }
    }
    out
}

fn matvec(m: &[Vec<i64>], v: &[BigRational]) -> Vec<BigRational> {
    let k = v.len();
    let mut out = vec![BigRational::zero(); k];
    for (l, row) in m.iter().enumerate() {
        let mut acc = BigRational::zero();
        for (kc, &c) in row.iter().enumerate() {
            if c != 0 {
                acc += &v[kc] * BigRational::from_integer(BigInt::from(c));
            }
        }
        out[l] = acc;
    }
    out
}

/// Monic minimal polynomial of an integer matrix over `Q`, ascending
/// coefficients, via per-vector annihilators and lcm.
fn min_poly(m: &[Vec<i64>]) -> Vec<BigRational> {
    let k = m.len();
    let mut acc = vec![BigRational::one()];
    for start in 0..k {
        if acc.len() == k + 1 {
            break;
        }
        let mut e0 = vec![BigRational::zero(); k];
        e0[start] = BigRational::one();
        let p = vector_annihilator(m, e0);
        // lcm(acc, p) = acc * p / gcd
        let g = poly_gcd_q(&acc, &p);
        let (q, r) = poly_divrem_q(&p, &g);
        debug_assert!(r.is_empty());
        acc = poly_mul_q(&acc, &q);
    }
    // Normalise monic.
    let lead = acc.last().unwrap().clone();
    acc.iter().map(|c| c / &lead).collect()
}

/// Minimal annihilating polynomial of a single vector under the matrix.
fn vector_annihilator(m: &[Vec<i64>], v0: Vec<BigRational>) -> Vec<BigRational> {
    let k = v0.len();
    // Row-echelon basis with tracked combinations in terms of iterates.
    let mut rows: Vec<(Vec<BigRational>, usize, Vec<BigRational>)> = Vec::new();
    let mut iterate = v0;
    let mut t = 0usize;
    loop {
        let mut vec = iterate.clone();
        let mut combo = vec![BigRational::zero(); t + 1];
        combo[t] = BigRational::one();
        // Reduce against existing rows.
        for (row, pivot, rcombo) in &rows {
            if !vec[*pivot].is_zero() {
                let c = vec[*pivot].clone();
                for (x, y) in vec.iter_mut().zip(row) {
                    *x -= &c * y;
                }
                for (i, y) in rcombo.iter().enumerate() {
                    combo[i] -= &c * y;
                }
            }
        }
        match vec.iter().position(|x| !x.is_zero()) {
            None => return combo,
            Some(pivot) => {
                let c = vec[pivot].clone();
                let vec: Vec<BigRational> = vec.iter().map(|x| x / &c).collect();
                let combo: Vec<BigRational> = combo.iter().map(|x| x / &c).collect();
                rows.push((vec, pivot, combo));
            }
        }
        debug_assert!(t <= k, "annihilator must appear within k+1 iterates");
        iterate = matvec(m, &iterate);
        t += 1;
    }
}

// ---------------------------------------------------------------------------
// Roots of an integer polynomial inside a real cyclotomic field.
// ---------------------------------------------------------------------------

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    })
}

fn poly_eval_mod(p: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn poly_derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Hensel-lift a simple root of `p` from mod q to mod q^L (L doublings until
/// the modulus exceeds `target`).
fn hensel_lift(
    p: &[BigInt],
    dp: &[BigInt],
    root: u64,
    q: u64,
    target: &BigInt,
) -> (BigInt, BigInt) {
    let mut modulus = BigInt::from(q);
    let mut r = BigInt::from(root);
    while &modulus <= target {
        modulus = &modulus * &modulus;
        let fr = poly_eval_mod(p, &r, &modulus);
        let dr = poly_eval_mod(dp, &r, &modulus);
        let inv = mod_inverse(&dr, &modulus).expect("simple root stays simple");
        r = (&r - fr * inv).mod_floor(&modulus);
    }
    (r, modulus)
}

fn roots_mod_q(p: &[BigInt], q: u64) -> Vec<u64> {
    let qb = BigInt::from(q);
    (0..q)
        .filter(|&x| poly_eval_mod(p, &BigInt::from(x), &qb).is_zero())
        .collect()
}

/// Exact roots of a squarefree monic integer polynomial inside the real
/// cyclotomic field, assuming all of its roots lie there (true for minimal
/// polynomials of class matrices). Deterministic: finds every root and
/// verifies each candidate exactly.
fn roots_in_field(p_rat: &[BigRational], field: &Arc<RealCycField>) -> Result<Vec<AlgNum>> {
    // The minimal polynomial of an integer matrix is monic with integer
    // coefficients; clearing denominators also covers rational inputs.
    let denom_lcm = p_rat
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let p: Vec<BigInt> = p_rat
        .iter()
        .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let deg = p.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let dp = poly_derivative(&p);
    // Cauchy bound on root magnitude (all conjugates of every root of p are
    // again roots of p).
    let lead = p.last().unwrap().magnitude().clone();
    let maxc = p.iter().map(|c| c.magnitude().clone()).max().unwrap();
    let bound = BigInt::from(maxc.div_ceil(&lead)) + BigInt::from(2);
    let d = field.degree;

    if d == 1 {
        // Rational (hence integer) roots.
        let q = primes_from(3)
            .find(|&q| {
                let qb = BigInt::from(q);
                if (p.last().unwrap() % &qb).is_zero() {
                    return false;
                }
                squarefree_mod(&p, q)
            })
            .unwrap();
        let target = BigInt::from(2) * &bound;
        let mut out = Vec::new();
        for r0 in roots_mod_q(&p, q) {
            let (r, modulus) = hensel_lift(&p, &dp, r0, q, &target);
            let half = &modulus / BigInt::from(2);
            let r = if r > half { r - &modulus } else { r };
            if poly_eval_exact(&p, &r).is_zero() {
                out.push(AlgNum::from_rational(field, BigRational::from_integer(r)));
            }
        }
        out.sort();
        out.dedup();
        if out.len() != deg {
            return Err(Error::Internal(format!(
                "expected {deg} rational eigenvalues, found {}",
                out.len()
            )));
        }
        return Ok(out);
    }

    // Field case: a completely split prime q = +-1 mod conductor.
    let n = field.conductor as u64;
    let psi: Vec<BigInt> = field
        .modulus
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    let dpsi = poly_derivative(&psi);
    let q = primes_from(3)
        .filter(|&q| q % n == 1 || q % n == n - 1)
        .find(|&q| {
            squarefree_mod(&p, q)
                && squarefree_mod(&psi, q)
                && roots_mod_q(&psi, q).len() == d
                && roots_mod_q(&p, q).len() == deg
        })
        .ok_or_else(|| Error::Internal("no split prime found".into()))?;
    // Conjugate-coefficient bound: |c_i| <= d (d-1)! 2^{d-1} B.
    let mut cb = BigInt::from(d as u64) * &bound;
    for t in 1..d as u64 {
        cb *= BigInt::from(t);
    }
    cb <<= d - 1;
    let target = BigInt::from(2) * cb;
    let lifted_psi: Vec<(BigInt, BigInt)> = roots_mod_q(&psi, q)
        .into_iter()
        .map(|r| hensel_lift(&psi, &dpsi, r, q, &target))
        .collect();
    let modulus = lifted_psi[0].1.clone();
    let embeddings: Vec<BigInt> = lifted_psi.into_iter().map(|(r, _)| r).collect();
    let lifted_roots: Vec<BigInt> = roots_mod_q(&p, q)
        .into_iter()
        .map(|r| hensel_lift(&p, &dp, r, q, &target).0)
        .collect();

    // Vandermonde of the lifted embeddings, inverted once mod q^L.
    let vander: Vec<Vec<BigInt>> = embeddings
        .iter()
        .map(|y| {
            let mut row = Vec::with_capacity(d);
            let mut acc = BigInt::one();
            for _ in 0..d {
                row.push(acc.clone());
                acc = (acc * y).mod_floor(&modulus);
            }
            row
        })
        .collect();
    let vinv = invert_mod(&vander, &modulus)
        .ok_or_else(|| Error::Internal("Vandermonde not invertible mod q^L".into()))?;

    let mut out: Vec<AlgNum> = Vec::new();
    let mut tuple = vec![0usize; d];
    'tuples: loop {
        // Solve for the coefficient vector of a candidate root.
        let half = &modulus / BigInt::from(2);
        let mut coeffs = Vec::with_capacity(d);
        for i in 0..d {
            let mut acc = BigInt::zero();
            for (t, &rt) in tuple.iter().enumerate() {
                acc += &vinv[i][t] * &lifted_roots[rt];
            }
            let mut c = acc.mod_floor(&modulus);
            if c > half {
                c -= &modulus;
            }
            coeffs.push(c);
        }
        let cand = AlgNum {
            field: Arc::clone(field),
            coeffs: coeffs.into_iter().map(BigRational::from_integer).collect(),
        };
        if poly_eval_alg(p_rat, &cand).is_zero() && !out.contains(&cand) {
            out.push(cand);
        }
        // Next tuple.
        for pos in 0..d {
            tuple[pos] += 1;
            if tuple[pos] < lifted_roots.len() {
                continue 'tuples;
            }
            tuple[pos] = 0;
        }
        break;
    }
    out.sort();
    if out.len() != deg {
        return Err(Error::Internal(format!(
            "expected {deg} eigenvalues in conductor-{} field, found {}",
            field.conductor,
            out.len()
        )));
    }
    Ok(out)
}

fn squarefree_mod(p: &[BigInt], q: u64) -> bool {
    // gcd(p, p') constant mod q.
    let qb = BigInt::from(q);
    let reduce = |p: &[BigInt]| -> Vec<u64> {
        let mut v: Vec<u64> = p
            .iter()
            .map(|c| {
                let r = c.mod_floor(&qb);
                u64::try_from(&r).unwrap()
            })
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let mut a = reduce(p);
    let mut b = reduce(&poly_derivative(p));
    // Euclid over F_q.
    let inv = |x: u64| -> u64 {
        // Fermat.
        let mut acc = 1u64;
        let mut base = x % q;
        let mut e = q - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            e >>= 1;
        }
        acc
    };
    while !b.is_empty() {
        // a mod b
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let c = *a.last().unwrap() % q * inv(*b.last().unwrap()) % q;
            for (i, &bc) in b.iter().enumerate() {
                let idx = i + shift;
                a[idx] = (a[idx] + q * q - c * bc % q) % q;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

fn poly_eval_exact(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_eval_alg(p: &[BigRational], x: &AlgNum) -> AlgNum {
    let mut acc = x.field.zero();
    for c in p.iter().rev() {
        acc = acc.mul(x).add(&AlgNum::from_rational(&x.field, c.clone()));
    }
    acc
}

fn invert_mod(m: &[Vec<BigInt>], modulus: &BigInt) -> Option<Vec<Vec<BigInt>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(modulus)).collect())
        .collect();
    let mut inv: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        // Find a row with invertible pivot.
        let pivot = (col..n).find(|&r| mod_inverse(&a[r][col], modulus).is_some())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pinv = mod_inverse(&a[col][col], modulus)?;
        for j in 0..n {
            a[col][j] = (&a[col][j] * &pinv).mod_floor(modulus);
            inv[col][j] = (&inv[col][j] * &pinv).mod_floor(modulus);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for j in 0..n {
                    let t = (&a[col][j] * &c).mod_floor(modulus);
                    a[r][j] = (&a[r][j] - t).mod_floor(modulus);
                    let t = (&inv[col][j] * &c).mod_floor(modulus);
                    inv[r][j] = (&inv[r][j] - t).mod_floor(modulus);
                }
            }
        }
    }
    Some(inv)
}

// ---------------------------------------------------------------------------
// Subspace splitting over the field.
// ---------------------------------------------------------------------------

/// Reduced row-echelon basis of a subspace of K^k.
#[derive(Clone)]
struct Subspace {
    rows: Vec<Vec<AlgNum>>,
    pivots: Vec<usize>,
}

fn echelonize(mut rows: Vec<Vec<AlgNum>>) -> Subspace {
    let mut out: Vec<Vec<AlgNum>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in rows.drain(..) {
        for (row, &p) in out.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let c = v[p].inv();
            let v: Vec<AlgNum> = v.iter().map(|x| x.mul(&c)).collect();
            // Eliminate the new pivot from earlier rows to reach RREF.
            for (row, _) in out.iter_mut().zip(&pivots) {
                if !row[p].is_zero() {
                    let c = row[p].clone();
                    for (x, y) in row.iter_mut().zip(&v) {
                        *x = x.sub(&c.mul(y));
                    }
                }
            }
            out.push(v);
            pivots.push(p);
        }
    }
    // Canonical order by pivot column.
    let mut order: Vec<usize> = (0..out.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    let rows = order.iter().map(|&i| out[i].clone()).collect();
    let pivots = order.iter().map(|&i| pivots[i]).collect();
    Subspace { rows, pivots }
}

impl Subspace {
    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Coefficients of a vector of the subspace in the RREF basis.
    fn coords(&self, v: &[AlgNum]) -> Vec<AlgNum> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }
}

fn mat_apply_alg(m: &[Vec<i64>], v: &[AlgNum]) -> Vec<AlgNum> {
    let field = &v[0].field;
    m.iter()
        .map(|row| {
            let mut acc = field.zero();
            for (kc, &c) in row.iter().enumerate() {
                if c != 0 {
                    acc = acc.add(&v[kc].scale(&BigRational::from_integer(BigInt::from(c))));
                }
            }
            acc
        })
        .collect()
}

/// Split a subspace into eigenspaces of `m` for the given eigenvalues.
fn split_subspace(m: &[Vec<i64>], space: &Subspace, eigenvalues: &[AlgNum]) -> Vec<Subspace> {
    let d = space.dim();
    let field = &space.rows[0][0].field;
    // Restriction matrix A with columns = coords of M * basis row.
    let images: Vec<Vec<AlgNum>> = space.rows.iter().map(|b| mat_apply_alg(m, b)).collect();
    let a: Vec<Vec<AlgNum>> = images.iter().map(|img| space.coords(img)).collect();
    // a[i][j]: coefficient of basis j in image of basis i; we need the action
    // on coordinate vectors: (c_j) -> sum_i c_i a[i][j].
    let mut pieces = Vec::new();
    let mut total = 0;
    for omega in eigenvalues {
        // Kernel of (A^T - omega I) acting on coordinates.
        let mut mat: Vec<Vec<AlgNum>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        let mut x = a[c][r].clone();
                        if r == c {
                            x = x.sub(omega);
                        }
                        x
                    })
                    .collect()
            })
            .collect();
        let kernel = kernel_basis(&mut mat, field);
        if kernel.is_empty() {
            continue;
        }
        total += kernel.len();
        let lifted: Vec<Vec<AlgNum>> = kernel
            .iter()
            .map(|coeffs| {
                let mut v = vec![field.zero(); space.rows[0].len()];
                for (ci, b) in coeffs.iter().zip(&space.rows) {
                    if !ci.is_zero() {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x = x.add(&ci.mul(y));
                        }
                    }
                }
                v
            })
            .collect();
        pieces.push(echelonize(lifted));
    }
    assert_eq!(
        total, d,
        "class matrices are semisimple: eigenspaces fill the space"
    );
    pieces
}

/// Kernel basis of a square matrix over the field (rows are equations).
fn kernel_basis(mat: &mut [Vec<AlgNum>], field: &Arc<RealCycField>) -> Vec<Vec<AlgNum>> {
    let n = mat.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0usize;
    for col in 0..n {
        let mut sel = None;
        for (r, row) in mat.iter().enumerate().skip(rank) {
            if !row[col].is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        mat.swap(rank, sel);
        let inv = mat[rank][col].inv();
        for x in mat[rank].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r != rank && !mat[r][col].is_zero() {
                let c = mat[r][col].clone();
                let (head, tail) = if r < rank {
                    let (a, b) = mat.split_at_mut(rank);
                    (&mut a[r], &b[0])
                } else {
                    let (a, b) = mat.split_at_mut(r);
                    (&mut b[0], &a[rank])
                };
                for (x, y) in head.iter_mut().zip(tail.iter()) {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    let mut out = Vec::new();
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (col, pr) in pivot_of_col.iter().enumerate() {
            if let Some(pr) = pr {
                v[col] = mat[*pr][free].neg();
            }
        }
        out.push(v);
    }
    out
}

/// Exact Burnside-style character table from class matrices.
pub fn char_table_generic(group: &Arc<CoxeterGroup>) -> Result<CharacterTable> {
    let k = group.num_classes();
    if k > 120 {
        return Err(Error::Domain(format!(
            "{k} classes exceed the generic-table bound of 120"
        )));
    }
    let field = &group.datum.field;
    let mats = class_matrices(group);
    let full = echelonize(
        (0..k)
            .map(|i| {
                let mut v = vec![field.zero(); k];
                v[i] = field.one();
                v
            })
            .collect(),
    );
    let mut spaces = vec![full];
    for j in 1..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m = &mats[j];
        let eigenvalues = roots_in_field(&min_poly(m), field)?;
        let next: Vec<Vec<Subspace>> = par::par_map(&spaces, |space| {
            if space.dim() == 1 {
                vec![space.clone()]
            } else {
                split_subspace(m, space, &eigenvalues)
            }
        });
        spaces = next.into_iter().flatten().collect();
    }
    if spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::Internal(
            "class matrices failed to separate eigenvectors".into(),
        ));
    }

    // Recover the characters from the central-character vectors.
    let order = BigRational::from_integer(BigInt::from(group.order()));
    let mut rows: Vec<Vec<AlgNum>> = Vec::with_capacity(k);
    for space in &spaces {
        let u = &space.rows[0];
        if u[0].is_zero() {
            return Err(Error::Internal(
                "eigenvector vanishes at the identity class".into(),
            ));
        }
        let norm = u[0].inv();
        let v: Vec<AlgNum> = u.iter().map(|x| x.mul(&norm)).collect();
        // chi(1)^2 = |W| / sum_l v_l v_{l*} / |C_l|
        let mut s = field.zero();
        for (l, class) in group.classes.iter().enumerate() {
            let linv = group.inverse_class(l);
            let term = v[l]
                .mul(&v[linv])
                .scale(&BigRational::new(BigInt::one(), BigInt::from(class.size)));
            s = s.add(&term);
        }
        let s = s
            .as_rational()
            .ok_or_else(|| Error::Internal("norm sum is not rational".into()))?;
        let deg_sq = (&order / s).to_integer();
        let deg = deg_sq.sqrt();
        if &deg * &deg != deg_sq {
            return Err(Error::Internal("degree^2 is not a perfect square".into()));
        }
        let row: Vec<AlgNum> = v
            .iter()
            .zip(&group.classes)
            .map(|(x, class)| x.scale(&BigRational::new(deg.clone(), BigInt::from(class.size))))
            .collect();
        rows.push(row);
    }
    rows.sort_by(|a, b| {
        let da = a[0].as_rational().unwrap();
        let db = b[0].as_rational().unwrap();
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    let irreducibles = rows
        .into_iter()
        .enumerate()
        .map(|(i, values)| Irreducible {
            label: IrrLabel::Generic(i),
            phi: None,
            values,
        })
        .collect();
    let table = CharacterTable {
        group: Arc::clone(group),
        irreducibles,
    };
    table.verify()?;
    let mut sq = BigUint::zero();
    for irr in &table.irreducibles {
        let d = irr.degree();
        sq += &d * &d;
    }
    debug_assert_eq!(sq, BigUint::from(group.order()));
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::char_table;

    fn group(s: &str) -> Arc<CoxeterGroup> {
        CoxeterGroup::build_default(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn generic_matches_symmetric_a2_a3() {
        for t in ["A2", "A3"] {
            let g = group(t);
            let comb = char_table(&g).unwrap();
            let gen = char_table_generic(&g).unwrap();
            assert!(comb.same_rows(&gen), "{t}");
        }
    }

    #[test]
    fn generic_matches_dihedral_g2() {
        let g = group("G2");
        let comb = char_table(&g).unwrap();
        let gen = char_table_generic(&g).unwrap();
        assert!(comb.same_rows(&gen));
    }

    #[test]
    fn f4_table() {
        let g = group("F4");
        let t = char_table_generic(&g).unwrap();
        assert_eq!(t.irreducibles.len(), 25);
        let mut degs: Vec<u64> = t
            .irreducibles
            .iter()
            .map(|i| u64::try_from(i.degree()).unwrap())
            .collect();
        degs.sort_unstable();
        assert_eq!(
            degs,
            vec![1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 8, 8, 8, 8, 9, 9, 9, 9, 12, 16]
        );
        let sq: u64 = degs.iter().map(|d| d * d).sum();
        assert_eq!(sq, 1152);
    }

    #[test]
    fn h3_table_in_sqrt5_field() {
        let g = group("H3");
        let t = char_table_generic(&g).unwrap();
        assert_eq!(t.irreducibles.len(), 10);
        // Some values are irrational.
        assert!(t
            .irreducibles
            .iter()
            .any(|i| i.values.iter().any(|v| v.as_rational().is_none())));
    }

    #[test]
    fn i2_5_generic_matches_dihedral() {
        let g = group("I2(5)");
        let comb = char_table(&g).unwrap();
        let gen = char_table_generic(&g).unwrap();
        assert!(comb.same_rows(&gen));
    }

    #[test]
    fn i2_7_generic_matches_dihedral_cubic_field() {
        let g = group("I2(7)");
        let comb = char_table(&g).unwrap();
        let gen = char_table_generic(&g).unwrap();
        assert!(comb.same_rows(&gen));
    }
}
