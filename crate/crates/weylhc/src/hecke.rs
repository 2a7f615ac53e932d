//! Iwahori–Hecke Schur elements for the algebras this library needs (type A1
//! with parameter q^k, dihedral I2(m) with unequal parameters, specialising
//! to G2 with (q, q^{2k-1})), fake degrees and b-invariants via exact Molien
//! sums, Poincaré index polynomials, and the principal-series degree formula.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chartab::{CharacterTable, IrrLabel, PhiLabel};
use crate::coxeter::CoxeterGroup;
use crate::cyclo::{cyclotomic, factor_cyclotomic_substitution, CyclotomicProduct, LaurentPoly};
use crate::error::{Error, Result};
use crate::field::{AlgNum, RealCycField};
use crate::par;
use crate::rootdata::SimpleType;

// ---------------------------------------------------------------------------
// Laurent polynomials in t = q^{1/2} with algebraic coefficients.
//
// Unequal dihedral parameters force sqrt(uv) into the two-dimensional
// representations; with monomial parameters u = q^a, v = q^b this is t^{a+b},
// so all Schur arithmetic happens in integer powers of t.
// ---------------------------------------------------------------------------

/// Laurent polynomial in `t = q^{1/2}` over a real cyclotomic field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLaurent {
    pub field: Arc<RealCycField>,
    coeffs: BTreeMap<i64, AlgNum>,
}

impl TLaurent {
    pub fn zero(field: &Arc<RealCycField>) -> Self {
        Self {
            field: Arc::clone(field),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(field: &Arc<RealCycField>, exp: i64, coeff: AlgNum) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn one(field: &Arc<RealCycField>) -> Self {
        Self::monomial(field, 0, field.one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(|| self.field.zero());
            *entry = entry.add(c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, AlgNum> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1 + e2;
                let prod = c1.mul(c2);
                let entry = coeffs.entry(e).or_insert_with(|| self.field.zero());
                *entry = entry.add(&prod);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    /// Divide by the monomial `t^exp`.
    pub fn shift(&self, by: i64) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    /// Exact division, or `None` when the remainder is nonzero.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(&self.field));
        }
        let sval = *self.coeffs.keys().next().unwrap();
        let oval = *other.coeffs.keys().next().unwrap();
        let mut rem = self.shift(-sval);
        let b = other.shift(-oval);
        let bdeg = *b.coeffs.keys().next_back().unwrap();
        let blead = b.coeffs[&bdeg].clone();
        let mut quot = Self::zero(&self.field);
        while !rem.is_zero() {
            let rdeg = *rem.coeffs.keys().next_back().unwrap();
            if rdeg < bdeg {
                return None;
            }
            let c = rem.coeffs[&rdeg].div(&blead);
            let t = Self::monomial(&self.field, rdeg - bdeg, c);
            rem = rem.sub(&t.mul(&b));
            quot = quot.add(&t);
        }
        Some(quot.shift(sval - oval))
    }

    /// Evaluate at an exact rational t-value.
    pub fn eval_rational(&self, t: &BigRational) -> AlgNum {
        let mut acc = self.field.zero();
        for (e, c) in &self.coeffs {
            let mut p = BigRational::one();
            let base = if *e >= 0 { t.clone() } else { t.recip() };
            for _ in 0..e.unsigned_abs() {
                p *= &base;
            }
            acc = acc.add(&c.scale(&p));
        }
        acc
    }

    /// Reinterpret as a Laurent polynomial in `q = t^2`: requires all
    /// exponents even and all coefficients rational.
    pub fn as_q_laurent(&self) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.coeffs {
            if e % 2 != 0 {
                return None;
            }
            let r = c.as_rational()?;
            out = out.add(&LaurentPoly::monomial(e / 2, r));
        }
        Some(out)
    }

    /// Lift a q-Laurent polynomial into t (exponents doubled).
    pub fn from_q_laurent(field: &Arc<RealCycField>, p: &LaurentPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in p.terms() {
            coeffs.insert(2 * e, AlgNum::from_rational(field, c.clone()));
        }
        Self {
            field: Arc::clone(field),
            coeffs,
        }
    }
}

impl fmt::Display for TLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_q_laurent() {
            return write!(f, "{p}");
        }
        // Even exponents print as q-powers with algebraic coefficients;
        // genuine half-integer powers fall back to the t-variable.
        let all_even = self.coeffs.keys().all(|e| e % 2 == 0);
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(e, c)| {
                if all_even {
                    match e / 2 {
                        0 => format!("({})", c.to_exact_string()),
                        1 => format!("({})*q", c.to_exact_string()),
                        h => format!("({})*q^{}", c.to_exact_string(), h),
                    }
                } else {
                    format!("({})*t^{}", c.to_exact_string(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// Hecke parameters.
// ---------------------------------------------------------------------------

/// Monomial Hecke parameters `q^{a_i}` per simple reflection; generators that
/// are conjugate in W must carry equal exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeParams {
    pub exponents: Vec<i64>,
}

impl HeckeParams {
    pub fn equal(rank: usize, k: i64) -> Self {
        Self {
            exponents: vec![k; rank],
        }
    }

    /// The G2 parameter family `(q, q^{2k-1})`, k in {1, 2, 5}.
    pub fn g2_family(k: i64) -> Self {
        Self {
            exponents: vec![1, 2 * k - 1],
        }
    }

    /// Check the conjugacy constraint against a Coxeter matrix: generators
    /// joined by an odd bond are conjugate and must have equal exponents.
    pub fn validate(&self, coxeter: &[Vec<u32>]) -> Result<()> {
        let r = self.exponents.len();
        if coxeter.len() != r {
            return Err(Error::Domain("parameter count differs from rank".into()));
        }
        for i in 0..r {
            for j in 0..r {
                if i != j && coxeter[i][j] % 2 == 1 && self.exponents[i] != self.exponents[j] {
                    return Err(Error::Domain(format!(
                        "generators {i} and {j} are conjugate (odd bond) but carry \
                         different parameter exponents"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A Schur element, tagged with the character it belongs to.
#[derive(Clone, Debug)]
pub struct SchurElement {
    pub label: IrrLabel,
    pub value: TLaurent,
}

impl SchurElement {
    pub fn as_q_laurent(&self) -> Option<LaurentPoly> {
        self.value.as_q_laurent()
    }
}

// ---------------------------------------------------------------------------
// Type A1.
// ---------------------------------------------------------------------------

/// Schur elements of the A1 Hecke algebra with parameter `q^k`:
/// `c_triv = Phi_2(q^k)` and `c_sign = q^{-k} Phi_2(q^k)`.
pub fn schur_a1(k: i64) -> Result<(SchurElement, SchurElement)> {
    if k < 1 {
        return Err(Error::Domain(format!(
            "A1 parameter exponent k={k} must be >= 1"
        )));
    }
    let field = RealCycField::rationals();
    let phi2_qk = cyclotomic(2).substitute_power(k as u32);
    let c_triv = TLaurent::from_q_laurent(&field, &phi2_qk);
    let c_sign = TLaurent::from_q_laurent(&field, &phi2_qk.shift(-k));
    Ok((
        SchurElement {
            label: IrrLabel::Partition(vec![2]),
            value: c_triv,
        },
        SchurElement {
            label: IrrLabel::Partition(vec![1, 1]),
            value: c_sign,
        },
    ))
}

// ---------------------------------------------------------------------------
// Dihedral Schur elements by the symmetrising-trace sum over explicit
// representations.
// ---------------------------------------------------------------------------

struct DihedralWords {
    /// Reduced words for all 2m elements.
    words: Vec<Vec<usize>>,
    /// Index of each element's inverse.
    inverse: Vec<usize>,
}

fn dihedral_words(m: u32) -> DihedralWords {
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    // Alternating words of length 1..m-1 from each generator, then the
    // longest element once.
    for l in 1..m {
        for start in [0usize, 1] {
            let word: Vec<usize> = (0..l as usize).map(|i| (start + i) % 2).collect();
            words.push(word);
        }
    }
    words.push((0..m as usize).map(|i| i % 2).collect());
    let index_of = |start: usize, l: u32| -> usize {
        if l == 0 {
            0
        } else if l == m {
            (2 * m - 1) as usize
        } else {
            1 + 2 * (l as usize - 1) + start
        }
    };
    let mut inverse = vec![0usize; 2 * m as usize];
    for (idx, w) in words.iter().enumerate() {
        let l = w.len() as u32;
        if l == 0 || l == m {
            inverse[idx] = idx;
        } else {
            // The inverse of the alternating word is the alternating word of
            // the same length starting from its last letter.
            let start = *w.last().unwrap();
            inverse[idx] = index_of(start, l);
        }
    }
    DihedralWords { words, inverse }
}

type Mat2 = [[TLaurent; 2]; 2];

fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let f = &a[0][0].field;
    let mut out: Mat2 = [
        [TLaurent::zero(f), TLaurent::zero(f)],
        [TLaurent::zero(f), TLaurent::zero(f)],
    ];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = TLaurent::zero(f);
            for (kk, bk) in b.iter().enumerate() {
                acc = acc.add(&a[i][kk].mul(&bk[j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Schur elements of the dihedral Hecke algebra H(I2(m)) with monomial
/// parameters `(q^a, q^b)` (equal when m is odd), computed from the
/// symmetrising trace: `c_chi chi(1) = sum_w chi(T_w) chi(T_{w^{-1}}) / ind(T_w)`.
pub fn schur_dihedral(m: u32, params: &HeckeParams) -> Result<Vec<SchurElement>> {
    if m < 3 {
        return Err(Error::Domain("dihedral m must be >= 3".into()));
    }
    if params.exponents.len() != 2 {
        return Err(Error::Domain(
            "dihedral Hecke algebra takes two parameters".into(),
        ));
    }
    let (a, b) = (params.exponents[0], params.exponents[1]);
    if m % 2 == 1 && a != b {
        return Err(Error::Domain(
            "odd dihedral groups have conjugate generators; parameters must be equal".into(),
        ));
    }
    if a < 1 || b < 1 {
        return Err(Error::Domain("parameter exponents must be >= 1".into()));
    }
    let field = RealCycField::new(2 * m);
    let words = dihedral_words(m);
    let u = TLaurent::monomial(&field, 2 * a, field.one());
    let v = TLaurent::monomial(&field, 2 * b, field.one());
    let minus_one = TLaurent::monomial(&field, 0, AlgNum::from_int(&field, -1));
    let one = TLaurent::one(&field);
    let zero = TLaurent::zero(&field);

    // ind(T_w) = t^{2(a #s + b #t)}.
    let ind_exp: Vec<i64> = words
        .words
        .iter()
        .map(|w| {
            let s_count = w.iter().filter(|&&g| g == 0).count() as i64;
            let t_count = w.len() as i64 - s_count;
            2 * (a * s_count + b * t_count)
        })
        .collect();

    let mut out = Vec::new();

    // One-dimensional characters.
    let linear: &[(bool, bool)] = if m % 2 == 0 {
        &[(true, true), (false, false), (true, false), (false, true)]
    } else {
        &[(true, true), (false, false)]
    };
    for &(s_pos, t_pos) in linear {
        let sval = if s_pos { u.clone() } else { minus_one.clone() };
        let tval = if t_pos { v.clone() } else { minus_one.clone() };
        let chi: Vec<TLaurent> = words
            .words
            .iter()
            .map(|w| {
                let mut acc = one.clone();
                for &g in w {
                    acc = acc.mul(if g == 0 { &sval } else { &tval });
                }
                acc
            })
            .collect();
        let mut total = TLaurent::zero(&field);
        for (idx, x) in chi.iter().enumerate() {
            let term = x.mul(&chi[words.inverse[idx]]).shift(-ind_exp[idx]);
            total = total.add(&term);
        }
        out.push(SchurElement {
            label: IrrLabel::DihedralLinear(s_pos, t_pos),
            value: total,
        });
    }

    // Two-dimensional characters rho_j with tr rho_j(T_s T_t) =
    // sqrt(uv) (zeta^j + zeta^{-j}).
    let two_dim_count = if m % 2 == 0 { m / 2 - 1 } else { (m - 1) / 2 };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for j in 1..=two_dim_count {
        let mu_j = field.two_cos_multiple(2 * j as i64); // 2cos(2 pi j / m)
        let gamma = u.add(&v).add(&TLaurent::monomial(&field, a + b, mu_j));
        let mat_s: Mat2 = [[minus_one.clone(), one.clone()], [zero.clone(), u.clone()]];
        let mat_t: Mat2 = [[v.clone(), zero.clone()], [gamma, minus_one.clone()]];
        // Braid relation check: alternating products of length m agree.
        let prod = |start: usize| -> Mat2 {
            let mut acc: Mat2 = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
            for i in 0..m as usize {
                let g = (start + i) % 2;
                acc = mat2_mul(&acc, if g == 0 { &mat_s } else { &mat_t });
            }
            acc
        };
        let ps = prod(0);
        let pt = prod(1);
        for r in 0..2 {
            for c in 0..2 {
                if ps[r][c] != pt[r][c] {
                    return Err(Error::Internal(format!(
                        "braid relation fails for dihedral representation j={j}"
                    )));
                }
            }
        }
        let chi: Vec<TLaurent> = words
            .words
            .iter()
            .map(|w| {
                let mut acc: Mat2 = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
                for &g in w {
                    acc = mat2_mul(&acc, if g == 0 { &mat_s } else { &mat_t });
                }
                acc[0][0].add(&acc[1][1])
            })
            .collect();
        let mut total = TLaurent::zero(&field);
        for (idx, x) in chi.iter().enumerate() {
            let term = x.mul(&chi[words.inverse[idx]]).shift(-ind_exp[idx]);
            total = total.add(&term);
        }
        // Divide by chi(1) = 2.
        let total = TLaurent {
            field: Arc::clone(&field),
            coeffs: total
                .coeffs
                .iter()
                .map(|(e, c)| (*e, c.scale(&half)))
                .collect(),
        };
        out.push(SchurElement {
            label: IrrLabel::DihedralTwoDim(j),
            value: total,
        });
    }
    Ok(out)
}

/// The G2 Schur elements of the two-dimensional characters for the
/// parameters `(q, q^{2k-1})`, in closed form:
/// `c_{phi_{2,b}} = 2 q^{-2k+1} Phi_3(q^{k+b-2}) Phi_6(q^{k-b+1})`.
pub struct G2Schur {
    pub k: i64,
    pub b: u8,
    /// The cyclotomic factorisation of `Phi_3(q^{k+b-2}) Phi_6(q^{k-b+1})`.
    pub factors: CyclotomicProduct,
    /// Power of q in the prefactor (`1 - 2k`).
    pub q_shift: i64,
    /// Constant prefactor (2).
    pub prefactor: BigRational,
    /// Fully expanded value.
    pub value: LaurentPoly,
}

pub fn schur_g2(k: i64, b: u8) -> Result<G2Schur> {
    if ![1, 2, 5].contains(&k) {
        return Err(Error::Domain(format!(
            "G2 parameter k={k} must be one of 1, 2, 5"
        )));
    }
    if !(b == 1 || b == 2) {
        return Err(Error::Domain(format!("b={b} must be 1 or 2")));
    }
    let e3 = k + b as i64 - 2;
    let e6 = k - b as i64 + 1;
    debug_assert!(e3 >= 0 && e6 >= 0);
    let f3 = factor_cyclotomic_substitution(3, e3 as u32);
    let f6 = factor_cyclotomic_substitution(6, e6 as u32);
    let factors = f3.mul(&f6);
    let prefactor = BigRational::from_integer(BigInt::from(2));
    let q_shift = 1 - 2 * k;
    let value = factors.expand().scale(&prefactor).shift(q_shift);
    Ok(G2Schur {
        k,
        b,
        factors,
        q_shift,
        prefactor,
        value,
    })
}

// ---------------------------------------------------------------------------
// Degrees, Poincaré polynomials and fake degrees.
// ---------------------------------------------------------------------------

/// Poincaré polynomial of the group as a Laurent polynomial in q.
pub fn poincare_polynomial(group: &CoxeterGroup) -> LaurentPoly {
    let dist = group.length_distribution();
    let mut p = LaurentPoly::zero();
    for (l, &count) in dist.iter().enumerate() {
        p = p.add(&LaurentPoly::monomial(
            l as i64,
            BigRational::from_integer(BigInt::from(count)),
        ));
    }
    p
}

/// The index polynomial `sum q^{l(w)}` over minimal coset representatives of
/// `W_J \ W`; evaluates to [W : W_J] at q = 1.
pub fn poincare_index(group: &CoxeterGroup, j: &[usize]) -> LaurentPoly {
    let reps = group.min_coset_reps(j);
    let mut p = LaurentPoly::zero();
    for &w in &reps {
        p = p.add(&LaurentPoly::monomial(
            group.lengths[w as usize] as i64,
            BigRational::one(),
        ));
    }
    p
}

/// The degrees d_1 <= ... <= d_r of the group, obtained by factoring the
/// Poincaré polynomial as a product of q-integers `[d]_q`, greedily from the
/// largest degree. Cross-checked against `prod d_i = |W|`.
pub fn reflection_degrees(group: &CoxeterGroup) -> Result<Vec<u32>> {
    let mut p = poincare_polynomial(group);
    let rank = group.rank();
    let mut degrees = Vec::new();
    let max_deg = p.degree().unwrap_or(0);
    let mut d = max_deg + 1;
    while d >= 2 {
        let q_int = {
            // [d]_q = 1 + q + ... + q^{d-1}
            let mut s = LaurentPoly::zero();
            for e in 0..d {
                s = s.add(&LaurentPoly::monomial(e, BigRational::one()));
            }
            s
        };
        while let Some(quot) = p.div_exact(&q_int) {
            degrees.push(d as u32);
            p = quot;
            if degrees.len() > rank {
                return Err(Error::Internal(
                    "factored more degrees than the rank".into(),
                ));
            }
        }
        d -= 1;
    }
    if !p.is_one() || degrees.len() != rank {
        return Err(Error::Internal(
            "Poincaré polynomial did not factor into q-integers".into(),
        ));
    }
    degrees.sort_unstable();
    let product: u64 = degrees.iter().map(|&d| d as u64).product();
    if product != group.order() {
        return Err(Error::Internal("degree product does not equal |W|".into()));
    }
    Ok(degrees)
}

/// Fake degree of one character: polynomial and b-invariant.
#[derive(Clone, Debug)]
pub struct FakeDegree {
    pub label: IrrLabel,
    pub poly: LaurentPoly,
    pub b_invariant: u32,
}

/// Characteristic polynomial det(qI - M) of a small matrix over the field,
/// by Faddeev–LeVerrier; ascending coefficients.
fn char_poly_alg(m: &[Vec<AlgNum>], field: &Arc<RealCycField>) -> Vec<AlgNum> {
    let n = m.len();
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    let mut a: Vec<Vec<AlgNum>> = m.to_vec();
    let mut c_prev;
    for k in 1..=n {
        let mut tr = field.zero();
        for (i, row) in a.iter().enumerate() {
            tr = tr.add(&row[i]);
        }
        let ck = tr.scale(&BigRational::new(BigInt::from(-1), BigInt::from(k as i64)));
        coeffs[n - k] = ck.clone();
        c_prev = ck;
        if k == n {
            break;
        }
        // a <- m (a + c_k I)
        let mut shifted = a.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = row[i].add(&c_prev);
        }
        let mut next = vec![vec![field.zero(); n]; n];
        for i in 0..n {
            for jj in 0..n {
                let mut acc = field.zero();
                for (kk, srow) in shifted.iter().enumerate() {
                    if !m[i][kk].is_zero() && !srow[jj].is_zero() {
                        acc = acc.add(&m[i][kk].mul(&srow[jj]));
                    }
                }
                next[i][jj] = acc;
            }
        }
        a = next;
    }
    coeffs
}

// Dense polynomial helpers over the field (ascending coefficients).
fn fpoly_trim(p: &mut Vec<AlgNum>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn fpoly_mul(a: &[AlgNum], b: &[AlgNum], field: &Arc<RealCycField>) -> Vec<AlgNum> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    fpoly_trim(&mut out);
    out
}

fn fpoly_divrem(
    a: &[AlgNum],
    b: &[AlgNum],
    field: &Arc<RealCycField>,
) -> (Vec<AlgNum>, Vec<AlgNum>) {
    let mut r = a.to_vec();
    fpoly_trim(&mut r);
    let mut bb = b.to_vec();
    fpoly_trim(&mut bb);
    assert!(!bb.is_empty());
    let db = bb.len() - 1;
    let lead = bb.last().unwrap().clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![field.zero(); r.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top].div(&lead);
        q[top - db] = c.clone();
        for (i, m) in bb.iter().enumerate() {
            let idx = top - db + i;
            r[idx] = r[idx].sub(&c.mul(m));
        }
        r.pop();
        fpoly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    fpoly_trim(&mut q);
    (q, r)
}

fn fpoly_gcd(a: &[AlgNum], b: &[AlgNum], field: &Arc<RealCycField>) -> Vec<AlgNum> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    fpoly_trim(&mut r0);
    fpoly_trim(&mut r1);
    while !r1.is_empty() {
        let (_, r) = fpoly_divrem(&r0, &r1, field);
        r0 = r1;
        r1 = r;
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.inv();
        for c in &mut r0 {
            *c = c.mul(&inv);
        }
    }
    r0
}

/// Exact fake degrees by the Molien-type sum
/// `R_chi(q) = (1/|W|) sum_C |C| chi(C) prod_i (1 - q^{d_i}) / det(1 - q w_C)`,
/// cleared over a common denominator and divided out exactly.
pub fn fake_degrees(table: &CharacterTable) -> Result<Vec<FakeDegree>> {
    let group = &table.group;
    let field = &group.datum.field;
    let degrees = reflection_degrees(group)?;
    // prod (1 - q^{d_i}) as a field polynomial.
    let mut d_poly = vec![field.one()];
    for &d in &degrees {
        let mut f = vec![field.zero(); d as usize + 1];
        f[0] = field.one();
        f[d as usize] = AlgNum::from_int(field, -1);
        d_poly = fpoly_mul(&d_poly, &f, field);
    }
    // det(1 - q w) per class: the reversed characteristic polynomial of the
    // reflection representation.
    let char_polys: Vec<Vec<AlgNum>> = par::par_map_range(group.num_classes(), |c| {
        let m = group.reflection_matrix(group.classes[c].rep);
        let mut p = char_poly_alg(&m, field);
        p.reverse();
        p
    });
    // Common denominator L = lcm of the char polys, then per-class numerators
    // A_C = D * L / p_C.
    let mut l_poly = vec![field.one()];
    for p in &char_polys {
        let g = fpoly_gcd(&l_poly, p, field);
        let (q, r) = fpoly_divrem(p, &g, field);
        debug_assert!(r.is_empty());
        l_poly = fpoly_mul(&l_poly, &q, field);
    }
    let numerators: Vec<Vec<AlgNum>> = par::par_map(&char_polys, |p| {
        let (q, r) = fpoly_divrem(&l_poly, p, field);
        debug_assert!(r.is_empty());
        fpoly_mul(&d_poly, &q, field)
    });
    let denom = {
        let scale = BigRational::from_integer(BigInt::from(group.order()));
        let mut d = l_poly.clone();
        for c in &mut d {
            *c = c.scale(&scale);
        }
        d
    };

    let mut out = Vec::new();
    for irr in &table.irreducibles {
        let mut num: Vec<AlgNum> = Vec::new();
        for (c, class) in group.classes.iter().enumerate() {
            let weight = irr.values[c].scale(&BigRational::from_integer(BigInt::from(class.size)));
            if weight.is_zero() {
                continue;
            }
            let mut term = numerators[c].clone();
            for x in &mut term {
                *x = x.mul(&weight);
            }
            if num.len() < term.len() {
                num.resize(term.len(), field.zero());
            }
            for (i, x) in term.into_iter().enumerate() {
                num[i] = num[i].add(&x);
            }
        }
        fpoly_trim(&mut num);
        let (quot, rem) = fpoly_divrem(&num, &denom, field);
        if !rem.is_empty() {
            return Err(Error::Internal(format!(
                "fake-degree denominator does not clear for {}",
                irr.label
            )));
        }
        // The quotient must be a polynomial with non-negative integer
        // rational coefficients.
        let mut poly = LaurentPoly::zero();
        for (e, c) in quot.iter().enumerate() {
            let r = c
                .as_rational()
                .ok_or_else(|| Error::Internal("fake degree has irrational coefficients".into()))?;
            if r.is_zero() {
                continue;
            }
            if !r.is_integer() || r.is_negative() {
                return Err(Error::Internal(format!(
                    "fake degree of {} has a bad coefficient {r}",
                    irr.label
                )));
            }
            poly = poly.add(&LaurentPoly::monomial(e as i64, r));
        }
        let b = poly.valuation().unwrap_or(0);
        out.push(FakeDegree {
            label: irr.label.clone(),
            poly,
            b_invariant: b as u32,
        });
    }
    Ok(out)
}

/// Attach universal `phi_{d,b}` labels (degree, b-invariant, lexicographic
/// tiebreak) to every irreducible of the table.
pub fn attach_phi_labels(table: &mut CharacterTable) -> Result<()> {
    let fds = fake_degrees(table)?;
    let mut keyed: Vec<(u64, u32, usize)> = table
        .irreducibles
        .iter()
        .enumerate()
        .map(|(i, irr)| {
            let d: u64 = u64::try_from(irr.degree()).expect("degree fits u64");
            (d, fds[i].b_invariant, i)
        })
        .collect();
    // Tiebreak within equal (d, b) groups by value-vector order.
    keyed.sort_by(|a, b| {
        (a.0, a.1).cmp(&(b.0, b.1)).then_with(|| {
            table.irreducibles[a.2]
                .values
                .cmp(&table.irreducibles[b.2].values)
        })
    });
    let mut tie = 0u32;
    for w in 0..keyed.len() {
        if w > 0 && (keyed[w].0, keyed[w].1) == (keyed[w - 1].0, keyed[w - 1].1) {
            tie += 1;
        } else {
            tie = 0;
        }
        let idx = keyed[w].2;
        table.irreducibles[idx].phi = Some(PhiLabel {
            degree: keyed[w].0,
            b: keyed[w].1,
            tie,
        });
    }
    Ok(())
}

/// One verified cell of the G2 cyclotomic-factorisation table: for the
/// parameter pair (k, b), `Phi_3(q^{k+b-2}) Phi_6(q^{k-b+1})` equals the
/// claimed product of cyclotomic polynomials in q.
pub struct Table1Identity {
    pub k: i64,
    pub b: u8,
    /// Direct expansion of the left-hand side.
    pub lhs: LaurentPoly,
    /// The claimed factorisation.
    pub claimed: CyclotomicProduct,
    /// Factorisation recomputed through `factor_cyclotomic_substitution`.
    pub computed: CyclotomicProduct,
    pub holds: bool,
}

/// The six claimed factorisations of `Phi_3(q^{k+b-2}) Phi_6(q^{k-b+1})`
/// for k in {1,2,5}, b in {1,2}, each checked as an exact polynomial
/// identity and as a factor-multiset equality.
pub fn table1_identities(k_filter: Option<i64>) -> Result<Vec<Table1Identity>> {
    let claims: [(i64, u8, i64, Vec<(u32, u32)>); 6] = [
        (1, 1, 3, vec![(6, 1)]),
        (1, 2, 1, vec![(3, 1)]),
        (2, 1, 1, vec![(3, 1), (12, 1)]),
        (2, 2, 1, vec![(3, 1), (6, 2)]),
        (5, 1, 1, vec![(3, 1), (6, 2), (12, 1), (30, 1)]),
        (5, 2, 1, vec![(3, 1), (15, 1), (24, 1)]),
    ];
    let mut out = Vec::new();
    for (k, b, scalar, factors) in claims {
        if let Some(kf) = k_filter {
            if kf != k {
                continue;
            }
        }
        let e3 = (k + b as i64 - 2) as u32;
        let e6 = (k - b as i64 + 1) as u32;
        let lhs_3 = if e3 == 0 {
            LaurentPoly::constant(cyclotomic(3).eval(&BigRational::one()))
        } else {
            cyclotomic(3).substitute_power(e3)
        };
        let lhs_6 = if e6 == 0 {
            LaurentPoly::constant(cyclotomic(6).eval(&BigRational::one()))
        } else {
            cyclotomic(6).substitute_power(e6)
        };
        let lhs = lhs_3.mul(&lhs_6);
        let claimed =
            CyclotomicProduct::new(BigRational::from_integer(BigInt::from(scalar)), factors);
        let computed =
            factor_cyclotomic_substitution(3, e3).mul(&factor_cyclotomic_substitution(6, e6));
        let holds = claimed.expand() == lhs && computed == claimed;
        out.push(Table1Identity {
            k,
            b,
            lhs,
            claimed,
            computed,
            holds,
        });
    }
    if out.is_empty() {
        return Err(Error::Domain(format!(
            "k filter {k_filter:?} matches no row; rows exist for k in {{1, 2, 5}}"
        )));
    }
    Ok(out)
}

/// Principal-series degree `phi(1) [G^F : B^F] c_phi^{-1} = phi(1) c_triv / c_phi`
/// for the families where Schur elements are implemented (A1, I2(m)/G2).
pub fn principal_series_degree(
    ctype: &SimpleType,
    params: &HeckeParams,
    label: &IrrLabel,
) -> Result<LaurentPoly> {
    let schur = match ctype {
        SimpleType::A(1) => {
            let k = params.exponents[0];
            let (t, s) = schur_a1(k)?;
            vec![t, s]
        }
        SimpleType::G2 => schur_dihedral(6, params)?,
        SimpleType::I2(m) => schur_dihedral(*m, params)?,
        other => {
            return Err(Error::NotImplemented(format!(
                "principal-series degrees are implemented for A1 and I2(m) only, not {other}"
            )))
        }
    };
    let c_triv = schur
        .iter()
        .find(|s| {
            matches!(&s.label, IrrLabel::DihedralLinear(true, true))
                || matches!(&s.label, IrrLabel::Partition(p) if p.len() == 1)
        })
        .ok_or_else(|| Error::Internal("trivial Schur element missing".into()))?
        .value
        .clone();
    let c_phi = schur
        .iter()
        .find(|s| &s.label == label)
        .ok_or_else(|| Error::Domain(format!("no Schur element labeled {label}")))?;
    let dim: i64 = match label {
        IrrLabel::DihedralTwoDim(_) => 2,
        _ => 1,
    };
    let ratio = c_triv.div_exact(&c_phi.value).ok_or_else(|| {
        Error::NotImplemented(
            "c_triv / c_phi is not a Laurent polynomial for these parameters; the degree \
             formula needs the ambient parabolic index, which is not determined by (W, k)"
                .into(),
        )
    })?;
    let scaled = TLaurent {
        field: ratio.field.clone(),
        coeffs: ratio
            .coeffs
            .iter()
            .map(|(e, c)| (*e, c.scale(&BigRational::from_integer(BigInt::from(dim)))))
            .collect(),
    };
    let out = scaled.as_q_laurent().ok_or_else(|| {
        Error::NotImplemented(
            "principal-series degrees with irrational coefficients (non-crystallographic \
             dihedral types) are not exposed as q-polynomials"
                .into(),
        )
    })?;
    // Character degrees evaluate to integers at prime powers, but as
    // polynomials they may carry rational coefficients (G2 has denominator
    // 3). Non-negativity holds for the equal-parameter series; unequal
    // parameters can break it, in which case the ratio is not a degree and
    // is declined rather than returned.
    if !out.has_nonneg_coeffs() {
        return Err(Error::NotImplemented(
            "the ratio phi(1) c_triv / c_phi has negative coefficients for these unequal \
             parameters; the true degree needs the ambient parabolic index"
                .into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::char_table;

    fn group(s: &str) -> Arc<CoxeterGroup> {
        CoxeterGroup::build_default(&s.parse().unwrap()).unwrap()
    }

    fn q_poly(s: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(e, c) in s {
            p = p.add(&LaurentPoly::monomial(
                e,
                BigRational::from_integer(BigInt::from(c)),
            ));
        }
        p
    }

    #[test]
    fn schur_a1_closed_forms() {
        let (t, s) = schur_a1(1).unwrap();
        assert_eq!(t.as_q_laurent().unwrap(), q_poly(&[(1, 1), (0, 1)]));
        assert_eq!(s.as_q_laurent().unwrap(), q_poly(&[(0, 1), (-1, 1)]));
        let (t2, _) = schur_a1(2).unwrap();
        assert_eq!(t2.as_q_laurent().unwrap(), q_poly(&[(2, 1), (0, 1)]));
        // c_triv / c_sign = q^k for any k.
        for k in 1..=6 {
            let (t, s) = schur_a1(k).unwrap();
            let ratio = t.value.div_exact(&s.value).unwrap();
            assert_eq!(ratio.as_q_laurent().unwrap(), q_poly(&[(k, 1)]));
        }
    }

    #[test]
    fn g2_schur_closed_forms() {
        // (k=1,b=1): 2 q^-1 * 3 * Phi_6(q)
        let s = schur_g2(1, 1).unwrap();
        let expect = cyclotomic(6)
            .scale(&BigRational::from_integer(BigInt::from(6)))
            .shift(-1);
        assert_eq!(s.value, expect);
        // (k=2,b=1): 2 q^-3 Phi_3 Phi_12
        let s = schur_g2(2, 1).unwrap();
        let expect = cyclotomic(3)
            .mul(&cyclotomic(12))
            .scale(&BigRational::from_integer(BigInt::from(2)))
            .shift(-3);
        assert_eq!(s.value, expect);
        assert_eq!(s.factors.factors, vec![(3, 1), (12, 1)]);
        // (k=5,b=2): 2 q^-9 Phi_3 Phi_15 Phi_24
        let s = schur_g2(5, 2).unwrap();
        let expect = cyclotomic(3)
            .mul(&cyclotomic(15))
            .mul(&cyclotomic(24))
            .scale(&BigRational::from_integer(BigInt::from(2)))
            .shift(-9);
        assert_eq!(s.value, expect);
    }

    #[test]
    fn dihedral_schur_specialises_to_g2() {
        for k in [1i64, 2, 5] {
            let schur = schur_dihedral(6, &HeckeParams::g2_family(k)).unwrap();
            for b in [1u8, 2] {
                let closed = schur_g2(k, b).unwrap();
                let computed = schur
                    .iter()
                    .find(|s| s.label == IrrLabel::DihedralTwoDim(b as u32))
                    .unwrap();
                assert_eq!(
                    computed.as_q_laurent().unwrap(),
                    closed.value,
                    "k={k} b={b}"
                );
            }
        }
    }

    #[test]
    fn dihedral_equal_parameters_distinct_two_dims() {
        let schur = schur_dihedral(6, &HeckeParams::equal(2, 1)).unwrap();
        let c1 = schur
            .iter()
            .find(|s| s.label == IrrLabel::DihedralTwoDim(1))
            .unwrap();
        let c2 = schur
            .iter()
            .find(|s| s.label == IrrLabel::DihedralTwoDim(2))
            .unwrap();
        assert_ne!(c1.value, c2.value);
    }

    #[test]
    fn dihedral_schur_generic_degree_identity() {
        // sum_chi chi(1) P / c_chi = P, i.e. sum chi(1) D_chi = P where
        // D_chi = c_triv / c_chi must divide exactly.
        for (m, params) in [
            (3, HeckeParams::equal(2, 1)),
            (4, HeckeParams::equal(2, 2)),
            (6, HeckeParams::g2_family(2)),
            (5, HeckeParams::equal(2, 3)),
        ] {
            let schur = schur_dihedral(m, &params).unwrap();
            let c_triv = schur
                .iter()
                .find(|s| s.label == IrrLabel::DihedralLinear(true, true))
                .unwrap()
                .value
                .clone();
            let mut total = TLaurent::zero(&c_triv.field);
            for s in &schur {
                let d = c_triv
                    .div_exact(&s.value)
                    .expect("generic degree is polynomial");
                let dim = match s.label {
                    IrrLabel::DihedralTwoDim(_) => 2,
                    _ => 1,
                };
                let scaled = TLaurent {
                    field: d.field.clone(),
                    coeffs: d
                        .coeffs
                        .iter()
                        .map(|(e, c)| (*e, c.scale(&BigRational::from_integer(BigInt::from(dim)))))
                        .collect(),
                };
                total = total.add(&scaled);
            }
            assert_eq!(total, c_triv, "m={m}");
        }
    }

    #[test]
    fn a2_schur_matches_dihedral_3() {
        // I2(3) = A2 with equal parameters: Schur elements from the trace
        // formula must match the classical A2 generic-degree data:
        // c_triv = P(q) = (1+q)(1+q+q^2), c_sign = q^-3 P, c_2dim = q^-1(2+q+q^-1)...
        let schur = schur_dihedral(3, &HeckeParams::equal(2, 1)).unwrap();
        let p = q_poly(&[(0, 1), (1, 2), (2, 2), (3, 1)]);
        let c_triv = schur
            .iter()
            .find(|s| s.label == IrrLabel::DihedralLinear(true, true))
            .unwrap();
        assert_eq!(c_triv.as_q_laurent().unwrap(), p);
        let c_sign = schur
            .iter()
            .find(|s| s.label == IrrLabel::DihedralLinear(false, false))
            .unwrap();
        assert_eq!(c_sign.as_q_laurent().unwrap(), p.shift(-3));
    }

    #[test]
    fn poincare_index_examples() {
        let a1 = group("A1");
        assert_eq!(poincare_index(&a1, &[]), q_poly(&[(0, 1), (1, 1)]));
        let a2 = group("A2");
        assert_eq!(poincare_index(&a2, &[0]), q_poly(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(poincare_index(&a2, &[0, 1]), q_poly(&[(0, 1)]));
        // Evaluates to the index at q = 1; J = {0,1} is the A2 end of B3.
        let b3 = group("B3");
        let p = poincare_index(&b3, &[0, 1]);
        assert_eq!(
            p.eval(&BigRational::one()),
            BigRational::from_integer(BigInt::from(48 / 6))
        );
    }

    #[test]
    fn reflection_degrees_examples() {
        assert_eq!(reflection_degrees(&group("A2")).unwrap(), vec![2, 3]);
        assert_eq!(reflection_degrees(&group("B3")).unwrap(), vec![2, 4, 6]);
        assert_eq!(reflection_degrees(&group("G2")).unwrap(), vec![2, 6]);
        assert_eq!(reflection_degrees(&group("D4")).unwrap(), vec![2, 4, 4, 6]);
        assert_eq!(reflection_degrees(&group("H3")).unwrap(), vec![2, 6, 10]);
        assert_eq!(reflection_degrees(&group("F4")).unwrap(), vec![2, 6, 8, 12]);
        assert_eq!(reflection_degrees(&group("B2xA1")).unwrap(), vec![2, 2, 4]);
    }

    #[test]
    fn fake_degree_identities_small() {
        for t in ["A1", "A2", "B2", "G2", "A3"] {
            let g = group(t);
            let table = char_table(&g).unwrap();
            let fds = fake_degrees(&table).unwrap();
            let n = g.datum.positive_roots.len() as i64;
            let triv = table.trivial_index();
            let sign = table.sign_index();
            assert!(fds[triv].poly.is_one(), "{t}: R_triv = 1");
            assert_eq!(
                fds[sign].poly,
                LaurentPoly::monomial(n, BigRational::one()),
                "{t}: R_sign = q^N"
            );
            // sum R_chi(q) chi(1) = Poincaré polynomial.
            let mut total = LaurentPoly::zero();
            for (irr, fd) in table.irreducibles.iter().zip(&fds) {
                let d =
                    BigRational::from_integer(BigInt::from(u64::try_from(irr.degree()).unwrap()));
                total = total.add(&fd.poly.scale(&d));
            }
            assert_eq!(total, poincare_polynomial(&g), "{t}: Molien identity");
        }
    }

    #[test]
    fn g2_b_invariants_of_two_dimensionals() {
        let g = group("G2");
        let table = char_table(&g).unwrap();
        let fds = fake_degrees(&table).unwrap();
        let mut twos: Vec<(u32, IrrLabel)> = table
            .irreducibles
            .iter()
            .zip(&fds)
            .filter(|(irr, _)| irr.degree() == 2u32.into())
            .map(|(irr, fd)| (fd.b_invariant, irr.label.clone()))
            .collect();
        twos.sort_by_key(|x| x.0);
        assert_eq!(twos.len(), 2);
        assert_eq!(twos[0].0, 1);
        assert_eq!(twos[1].0, 2);
        // The rotation-index labels line up with the b-invariants.
        assert_eq!(twos[0].1, IrrLabel::DihedralTwoDim(1));
        assert_eq!(twos[1].1, IrrLabel::DihedralTwoDim(2));
    }

    #[test]
    fn principal_series_degrees_a1() {
        let params = HeckeParams::equal(1, 1);
        let triv =
            principal_series_degree(&SimpleType::A(1), &params, &IrrLabel::Partition(vec![2]))
                .unwrap();
        assert!(triv.is_one());
        let sign =
            principal_series_degree(&SimpleType::A(1), &params, &IrrLabel::Partition(vec![1, 1]))
                .unwrap();
        assert_eq!(sign, LaurentPoly::q());
    }

    #[test]
    fn phi_labels_on_g2() {
        let g = group("G2");
        let mut table = char_table(&g).unwrap();
        attach_phi_labels(&mut table).unwrap();
        let mut labels: Vec<String> = table
            .irreducibles
            .iter()
            .map(|i| i.phi.unwrap().to_string())
            .collect();
        labels.sort();
        let expect: Vec<String> = [
            "phi{1,0}",
            "phi{1,3}",
            "phi{1,3}#2",
            "phi{1,6}",
            "phi{2,1}",
            "phi{2,2}",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(labels, expect);
    }

    #[test]
    fn table1_all_six_identities_hold() {
        let rows = table1_identities(None).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.holds));
        // Row (k=2, b=2) displays the squared factor.
        let row = rows.iter().find(|r| r.k == 2 && r.b == 2).unwrap();
        assert_eq!(row.claimed.to_string(), "Φ3(q)^1 · Φ6(q)^2");
        let rows = table1_identities(Some(2)).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(table1_identities(Some(3)).is_err());
    }

    #[test]
    fn h3_fake_degrees_are_rational_polynomials() {
        // Values live in Q(sqrt 5) but every fake degree clears to an
        // integer polynomial; R_sign = q^15.
        let g = group("H3");
        let table = char_table(&g).unwrap();
        let fds = fake_degrees(&table).unwrap();
        assert!(fds[table.trivial_index()].poly.is_one());
        assert_eq!(
            fds[table.sign_index()].poly,
            LaurentPoly::monomial(15, BigRational::one())
        );
        let mut total = LaurentPoly::zero();
        for (irr, fd) in table.irreducibles.iter().zip(&fds) {
            let d = BigRational::from_integer(BigInt::from(u64::try_from(irr.degree()).unwrap()));
            total = total.add(&fd.poly.scale(&d));
        }
        assert_eq!(total, poincare_polynomial(&g));
    }

    #[test]
    fn dihedral_two_dim_b_invariants_equal_rotation_index() {
        // Fake degree of chi_j in I2(m) is q^j + q^{m-j}, so b = j.
        for m in [5u32, 6, 7, 8, 9] {
            let g = group(&format!("I2({m})"));
            let table = char_table(&g).unwrap();
            let fds = fake_degrees(&table).unwrap();
            for (irr, fd) in table.irreducibles.iter().zip(&fds) {
                if let crate::chartab::IrrLabel::DihedralTwoDim(j) = irr.label {
                    assert_eq!(fd.b_invariant, j, "m={m}");
                    let expect = LaurentPoly::monomial(j as i64, BigRational::one())
                        .add(&LaurentPoly::monomial((m - j) as i64, BigRational::one()));
                    assert_eq!(fd.poly, expect, "m={m} j={j}");
                }
            }
        }
    }

    #[test]
    fn g2_principal_series_degrees_equal_parameters() {
        // Equal parameters (k = 1): genuine degree polynomials with
        // non-negative coefficients and integer values at prime powers.
        let params = HeckeParams::g2_family(1);
        for j in [1u32, 2] {
            let d = principal_series_degree(&SimpleType::G2, &params, &IrrLabel::DihedralTwoDim(j))
                .unwrap();
            assert!(d.has_nonneg_coeffs(), "j={j}: {d}");
            for qv in [2i64, 3, 4, 5, 7, 8, 9] {
                let v = d.eval(&BigRational::from_integer(BigInt::from(qv)));
                assert!(v.is_integer(), "j={j} q={qv}: degree value {v}");
            }
            // Degree formula at q = 1: phi(1) |W| / c_phi(1).
            let at_one = d.eval(&BigRational::one());
            let c = schur_g2(1, j as u8)
                .unwrap()
                .value
                .eval(&BigRational::one());
            let w = BigRational::from_integer(BigInt::from(12));
            assert_eq!(at_one, BigRational::from_integer(BigInt::from(2)) * w / c);
        }
        // For unequal parameters the rearranged identity
        // degree * c_phi = phi(1) * c_triv still holds exactly, even where
        // the ratio itself is not a polynomial; check it at q = 1.
        for k in [2i64, 5] {
            let schur = schur_dihedral(6, &HeckeParams::g2_family(k)).unwrap();
            let one = BigRational::one();
            let c_triv = schur
                .iter()
                .find(|s| s.label == IrrLabel::DihedralLinear(true, true))
                .unwrap()
                .value
                .eval_rational(&one);
            for j in [1u32, 2] {
                let c = schur
                    .iter()
                    .find(|s| s.label == IrrLabel::DihedralTwoDim(j))
                    .unwrap()
                    .value
                    .eval_rational(&one);
                // phi(1)(c_triv/c_phi) at q=1 equals phi(1)[W : 1]/c_phi(1).
                let lhs =
                    c_triv.as_rational().unwrap() * BigRational::from_integer(BigInt::from(2));
                let rhs = c.as_rational().unwrap();
                assert_eq!(
                    lhs / rhs.clone(),
                    BigRational::from_integer(BigInt::from(24)) / rhs
                );
            }
        }
        // Non-crystallographic dihedral degrees are declined, not mangled.
        let err = principal_series_degree(
            &SimpleType::I2(5),
            &HeckeParams::equal(2, 1),
            &IrrLabel::DihedralTwoDim(1),
        )
        .unwrap_err();
        assert!(matches!(err, crate::error::Error::NotImplemented(_)));
    }

    #[test]
    fn hecke_params_validate_conjugacy() {
        let g2cox = "G2"
            .parse::<crate::rootdata::CartanType>()
            .unwrap()
            .coxeter_matrix();
        assert!(HeckeParams::g2_family(2).validate(&g2cox).is_ok());
        let a2cox = "A2"
            .parse::<crate::rootdata::CartanType>()
            .unwrap()
            .coxeter_matrix();
        assert!(HeckeParams {
            exponents: vec![1, 2]
        }
        .validate(&a2cox)
        .is_err());
        assert!(HeckeParams::equal(2, 3).validate(&a2cox).is_ok());
    }
}
