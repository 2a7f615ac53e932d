//! Exact univariate Laurent-polynomial arithmetic over arbitrary-precision
//! rationals, cyclotomic polynomials, factorisation of `Phi_n(q^m)` into
//! cyclotomics, and Zsigmondy primitive prime divisors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Univariate Laurent polynomial with exact rational coefficients.
///
/// Exponents may be negative; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int_coeffs(ascending_from_zero: &[i64]) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, &c) in ascending_from_zero.iter().enumerate() {
            if c != 0 {
                coeffs.insert(i as i64, BigRational::from_integer(BigInt::from(c)));
            }
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Highest exponent, if nonzero.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent, if nonzero.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.degree()
            .map(|d| self.coeff(d))
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1 + e2;
                let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute `q -> q^m` (exponent scaling), `m >= 1`.
    pub fn substitute_power(&self, m: u32) -> Self {
        assert!(m >= 1, "substitute_power needs m >= 1");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e * m as i64, c.clone()))
                .collect(),
        }
    }

    /// Evaluate at an exact rational point (nonzero when negative exponents occur).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            acc += c * rational_pow(x, *e);
        }
        acc
    }

    /// Exact division; `None` if the remainder is nonzero.
    ///
    /// Laurent division: both operands are shifted to ordinary polynomials
    /// first, so a monomial divisor is always exact.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sval = self.valuation().unwrap();
        let oval = other.valuation().unwrap();
        let a = self.shift(-sval);
        let b = other.shift(-oval);
        let q = poly_div_exact(&a, &b)?;
        Some(q.shift(sval - oval))
    }

    /// True if every coefficient is a non-negative integer.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// True if every coefficient is non-negative.
    pub fn has_nonneg_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn is_integer_poly(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let base = if e > 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Ordinary polynomial exact division (no negative exponents in inputs).
fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    let bdeg = b.degree()?;
    let blead = b.leading_coeff();
    while !rem.is_zero() {
        let rdeg = rem.degree().unwrap();
        if rdeg < bdeg {
            return None;
        }
        let c = rem.coeff(rdeg) / blead.clone();
        let t = LaurentPoly::monomial(rdeg - bdeg, c);
        rem = rem.sub(&t.mul(b));
        quot = quot.add(&t);
    }
    Some(quot)
}

impl fmt::Display for LaurentPoly {
    /// Canonical descending-exponent form with explicit signs, e.g. `q^4 - q^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Product of cyclotomic polynomials with an exact rational scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicProduct {
    /// `(n, multiplicity)` pairs, sorted by `n`.
    pub factors: Vec<(u32, u32)>,
    pub scalar: BigRational,
}

impl CyclotomicProduct {
    pub fn new(scalar: BigRational, mut factors: Vec<(u32, u32)>) -> Self {
        factors.retain(|&(_, m)| m > 0);
        factors.sort_unstable();
        Self { factors, scalar }
    }

    pub fn expand(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::constant(self.scalar.clone());
        for &(n, mult) in &self.factors {
            acc = acc.mul(&cyclotomic(n).pow(mult));
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for &(n, m) in self.factors.iter().chain(other.factors.iter()) {
            *map.entry(n).or_insert(0) += m;
        }
        Self {
            factors: map.into_iter().collect(),
            scalar: &self.scalar * &other.scalar,
        }
    }
}

impl fmt::Display for CyclotomicProduct {
    /// Example output: `2 · Φ3(q)^1 · Φ6(q)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.scalar.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.scalar)?;
            wrote = true;
        }
        for &(n, m) in &self.factors {
            if wrote {
                write!(f, " · ")?;
            }
            write!(f, "Φ{}(q)^{}", n, m)?;
            wrote = true;
        }
        Ok(())
    }
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// The `n`-th cyclotomic polynomial, monic of degree `phi(n)`, by iterated
/// exact division of `x^n - 1`.
pub fn cyclotomic(n: u32) -> LaurentPoly {
    assert!(n >= 1);
    let mut cache: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
    for d in divisors(n) {
        let mut num = LaurentPoly::monomial(d as i64, BigRational::one()).sub(&LaurentPoly::one());
        for (e, phi_e) in &cache {
            if d % e == 0 {
                num = num
                    .div_exact(phi_e)
                    .expect("cyclotomic recursion division is exact");
            }
        }
        cache.insert(d, num);
    }
    cache.remove(&n).unwrap()
}

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Factor `Phi_n(q^m)` as a product of cyclotomic polynomials in `q`.
///
/// For `m >= 1` the factor indices are exactly the `d | nm` with
/// `d / gcd(d, m) = n`; for `m = 0` the result is the scalar `Phi_n(1)`.
pub fn factor_cyclotomic_substitution(n: u32, m: u32) -> CyclotomicProduct {
    assert!(n >= 1);
    if m == 0 {
        let one = BigRational::one();
        let value = cyclotomic(n).eval(&one);
        return CyclotomicProduct::new(value, Vec::new());
    }
    let mut factors = Vec::new();
    for d in divisors(n * m) {
        if d / d.gcd(&m) == n {
            factors.push((d, 1));
        }
    }
    CyclotomicProduct::new(BigRational::one(), factors)
}

// ---------------------------------------------------------------------------
// Integer factorisation helpers (trial division + Pollard rho) and Zsigmondy.
// ---------------------------------------------------------------------------

/// Miller–Rabin with the deterministic base set for `n < 3.3 * 10^24`;
/// for larger inputs the same bases make this a strong pseudoprime check.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (&*n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    // Brent's variant with batched gcds; n must be odd and composite.
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let mut y = BigUint::from(2u32);
        let m = 128u64;
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k = 0u64;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = (&y * &y + &c) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * &diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            // Backtrack one step at a time.
            loop {
                ys = (&ys * &ys + &c) % n;
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g > one && &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Full factorisation by trial division with a Pollard-rho fallback.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    let mut n = n.clone();
    let one = BigUint::one();
    if n <= one {
        return out;
    }
    for p in 2u64..=100_000 {
        let p = BigUint::from(p);
        if &p * &p > n {
            break;
        }
        while (&n % &p).is_zero() {
            *out.entry(p.clone()).or_insert(0) += 1;
            n /= &p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == one {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
        } else {
            let d = pollard_rho(&m);
            let q = &m / &d;
            stack.push(d);
            stack.push(q);
        }
    }
    out
}

/// Whether the multiplicative order of `q` modulo the prime `r` is exactly `n`.
fn order_is_exactly(q: &BigUint, r: &BigUint, n: u32) -> bool {
    let one = BigUint::one();
    if q.modpow(&BigUint::from(n), r) != one {
        return false;
    }
    let mut m = n;
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for p in primes {
        if q.modpow(&BigUint::from(n / p), r) == one {
            return false;
        }
    }
    true
}

/// A primitive prime divisor of `q^n - 1`: a prime `r | Phi_n(q)` dividing no
/// `q^m - 1` for `1 <= m < n`. Returns `None` exactly in the classical
/// exception cases (`n = 1, q = 2`; `n = 2` with `q + 1` a power of two;
/// `(q, n) = (2, 6)`).
///
/// A prime dividing `Phi_n(q)` without being primitive must divide `n`, so
/// stripping the primes of `n` leaves the primitive part; its smallest prime
/// factor is returned. The order of the result is re-verified.
pub fn zsigmondy(q: u64, n: u32) -> Result<Option<BigUint>, Error> {
    if q < 2 || n < 1 {
        return Err(Error::Domain(format!(
            "zsigmondy requires q >= 2 and n >= 1, got q={q}, n={n}"
        )));
    }
    let qi = BigRational::from_integer(BigInt::from(q));
    let value = cyclotomic(n).eval(&qi);
    debug_assert!(value.is_integer());
    let mut primitive_part = value
        .to_integer()
        .to_biguint()
        .expect("Phi_n(q) > 0 for q >= 2");
    let mut m = n;
    let mut p = 2u32;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            let pb = BigUint::from(p);
            while (&primitive_part % &pb).is_zero() {
                primitive_part /= &pb;
            }
        }
        p += 1;
    }
    if m > 1 {
        let pb = BigUint::from(m);
        while (&primitive_part % &pb).is_zero() {
            primitive_part /= &pb;
        }
    }
    if primitive_part.is_one() {
        return Ok(None);
    }
    let r = smallest_prime_factor(&primitive_part);
    let qb = BigUint::from(q);
    if !order_is_exactly(&qb, &r, n) {
        return Err(Error::Internal(format!(
            "prime {r} from the primitive part of Phi_{n}({q}) failed the order check"
        )));
    }
    Ok(Some(r))
}

/// Smallest prime factor: trial division by small primes, then Miller–Rabin,
/// then Pollard rho with full recursion.
fn smallest_prime_factor(n: &BigUint) -> BigUint {
    debug_assert!(!n.is_one());
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if (n % BigUint::from(p)).is_zero() {
            return BigUint::from(p);
        }
    }
    let mut p = 49u64;
    while p <= 10_000 {
        if (n % BigUint::from(p)).is_zero() {
            return BigUint::from(p);
        }
        p += 2;
    }
    if is_probable_prime(n) {
        return n.clone();
    }
    let d = pollard_rho(n);
    let q = n / &d;
    let a = smallest_prime_factor(&d);
    let b = smallest_prime_factor(&q);
    a.min(b)
}

/// The classical Zsigmondy exception set, kept explicit so the
/// factorisation-based search can be cross-checked against it.
pub fn zsigmondy_exception(q: u64, n: u32) -> bool {
    match n {
        1 => q == 2,
        2 => (q + 1).is_power_of_two(),
        6 => q == 2,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn cyclotomic_small_values() {
        assert_eq!(cyclotomic(1), LaurentPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic(2), LaurentPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(cyclotomic(3), LaurentPoly::from_int_coeffs(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), LaurentPoly::from_int_coeffs(&[1, -1, 1]));
        assert_eq!(
            cyclotomic(12),
            LaurentPoly::from_int_coeffs(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for n in 1..=60 {
            let phi = cyclotomic(n);
            assert_eq!(phi.degree(), Some(euler_phi(n) as i64), "n={n}");
            assert!(phi.leading_coeff().is_one());
            assert!(phi.is_integer_poly());
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=200u32 {
            let mut prod = LaurentPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic(d));
            }
            let target =
                LaurentPoly::monomial(n as i64, BigRational::one()).sub(&LaurentPoly::one());
            assert_eq!(prod, target, "n={n}");
        }
    }

    #[test]
    fn substitution_factorisations() {
        // Phi_3(q^2) = Phi_3(q) Phi_6(q)
        let f = factor_cyclotomic_substitution(3, 2);
        assert_eq!(f.factors, vec![(3, 1), (6, 1)]);
        assert_eq!(f.expand(), cyclotomic(3).substitute_power(2));
        // Phi_6(q^2) = Phi_12(q)
        let f = factor_cyclotomic_substitution(6, 2);
        assert_eq!(f.factors, vec![(12, 1)]);
        assert_eq!(f.expand(), cyclotomic(6).substitute_power(2));
        // Phi_3(q^0) = 3
        let f = factor_cyclotomic_substitution(3, 0);
        assert!(f.factors.is_empty());
        assert_eq!(f.scalar, int(3));
    }

    #[test]
    fn substitution_roundtrip_up_to_120() {
        for n in 1..=24u32 {
            for m in 1..=120 / n {
                let f = factor_cyclotomic_substitution(n, m);
                assert_eq!(
                    f.expand(),
                    cyclotomic(n).substitute_power(m),
                    "Phi_{n}(q^{m})"
                );
            }
        }
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(cyclotomic(12).to_string(), "q^4 - q^2 + 1");
        assert_eq!(cyclotomic(6).to_string(), "q^2 - q + 1");
        let p = LaurentPoly::monomial(-1, int(1)).add(&LaurentPoly::one());
        assert_eq!(p.to_string(), "1 + q^-1");
        let f = CyclotomicProduct::new(int(2), vec![(3, 1), (6, 2)]);
        assert_eq!(f.to_string(), "2 · Φ3(q)^1 · Φ6(q)^2");
    }

    #[test]
    fn laurent_div_exact() {
        let p = cyclotomic(3).mul(&cyclotomic(6)).shift(-2);
        assert_eq!(p.div_exact(&cyclotomic(6)), Some(cyclotomic(3).shift(-2)));
        assert_eq!(cyclotomic(3).div_exact(&cyclotomic(6)), None);
    }

    #[test]
    fn zsigmondy_examples() {
        // (2,6): Phi_6(2) = 3 divides Phi_2(2) = 3 -> none
        assert_eq!(zsigmondy(2, 6).unwrap(), None);
        // (2,12): Phi_12(2) = 13
        assert_eq!(zsigmondy(2, 12).unwrap(), Some(BigUint::from(13u32)));
        // (3,2): q+1 = 4 a power of two -> none
        assert_eq!(zsigmondy(3, 2).unwrap(), None);
        assert_eq!(zsigmondy(2, 1).unwrap(), None);
        assert_eq!(zsigmondy(3, 1).unwrap(), Some(BigUint::from(2u32)));
        assert_eq!(zsigmondy(2, 2).unwrap(), Some(BigUint::from(3u32)));
    }

    #[test]
    fn zsigmondy_result_is_one_mod_n() {
        for q in 2..=8u64 {
            for n in 2..=16u32 {
                if let Some(r) = zsigmondy(q, n).unwrap() {
                    assert!((&r % BigUint::from(n)).is_one(), "q={q} n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn factorize_small() {
        let f = factorize(&BigUint::from(2u32 * 2 * 3 * 13 * 13));
        assert_eq!(f.get(&BigUint::from(2u32)), Some(&2));
        assert_eq!(f.get(&BigUint::from(3u32)), Some(&1));
        assert_eq!(f.get(&BigUint::from(13u32)), Some(&2));
    }
}
