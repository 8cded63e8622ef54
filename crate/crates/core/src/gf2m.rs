//! Arithmetic in GF(2^m) over the polynomial basis `{1, π, …, π^(m-1)}`.
//!
//! Field elements and polynomials are packed into `u32` bitmasks: bit `i`
//! holds the coefficient of `π^i` (or `x^i`). Degrees up to 24 are supported,
//! which keeps every carry-less product of two reduced elements inside a
//! `u64`.
//!
//! A [`FieldContext`] is only ever built from a polynomial that has been
//! checked to be irreducible *and* primitive, so `π` (the class of `x`)
//! always generates the multiplicative group.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 24;

/// A monic polynomial over GF(2), coefficient of `x^i` at bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial(u32);

impl Polynomial {
    /// Wraps a coefficient bitmask. The top set bit is the (monic) leading term.
    pub const fn from_bits(bits: u32) -> Self {
        Polynomial(bits)
    }

    pub fn from_exponents(exponents: &[u32]) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePolynomial {
            input: format!("{exponents:?}"),
            reason: reason.to_string(),
        };
        if exponents.is_empty() {
            return Err(fail("empty exponent list"));
        }
        let mut bits = 0u32;
        for &e in exponents {
            if e > MAX_DEGREE {
                return Err(fail("exponent exceeds 24"));
            }
            if bits >> e & 1 == 1 {
                return Err(fail("repeated exponent"));
            }
            bits |= 1 << e;
        }
        Ok(Polynomial(bits))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(self) -> u32 {
        31u32.saturating_sub(self.0.leading_zeros())
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn coefficient(self, i: u32) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    /// Exponents of the nonzero terms, highest first.
    pub fn exponents(self) -> Vec<u32> {
        (0..32).rev().filter(|&i| self.coefficient(i)).collect()
    }

    /// Exponent-list text form, e.g. `"3,1,0"`.
    pub fn to_exponent_list(self) -> String {
        self.exponents()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Hex bitmask form, e.g. `0xb` for `x^3 + x + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Accepts either a hex bitmask (`"0xB"`) or an exponent list (`"3,1,0"`).
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let fail = |reason: &str| Error::ParsePolynomial {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
            let bits = u32::from_str_radix(hex, 16).map_err(|e| fail(&e.to_string()))?;
            if bits == 0 {
                return Err(fail("zero polynomial"));
            }
            if bits >> (MAX_DEGREE + 1) != 0 {
                return Err(fail("degree exceeds 24"));
            }
            return Ok(Polynomial(bits));
        }
        let exponents = text
            .split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| fail(&e.to_string()))?;
        Polynomial::from_exponents(&exponents).map_err(|_| fail("invalid exponent list"))
    }
}

// --- GF(2)[x] helpers on u64 bitmasks -------------------------------------

fn clmul(mut a: u64, mut b: u64) -> u64 {
    let mut r = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    r
}

fn deg64(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

fn poly_rem(mut a: u64, f: u64) -> u64 {
    let df = deg64(f);
    while a != 0 && deg64(a) >= df {
        a ^= f << (deg64(a) - df);
    }
    a
}

fn poly_mulmod(a: u64, b: u64, f: u64) -> u64 {
    poly_rem(clmul(a, b), f)
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `x^(2^k) mod f` by k successive squarings.
fn x_pow_two_pow(k: u32, f: u64) -> u64 {
    let mut r = poly_rem(2, f);
    for _ in 0..k {
        r = poly_mulmod(r, r, f);
    }
    r
}

fn x_pow(mut k: u64, f: u64) -> u64 {
    let mut base = poly_rem(2, f);
    let mut r = poly_rem(1, f);
    while k != 0 {
        if k & 1 == 1 {
            r = poly_mulmod(r, base, f);
        }
        base = poly_mulmod(base, base, f);
        k >>= 1;
    }
    r
}

/// Distinct prime divisors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a polynomial of degree ≥ 1.
pub fn is_irreducible(poly: Polynomial) -> bool {
    let f = poly.bits() as u64;
    let m = poly.degree();
    if m == 0 {
        return false;
    }
    if x_pow_two_pow(m, f) != poly_rem(2, f) {
        return false;
    }
    prime_factors(m as u64).into_iter().all(|p| {
        let h = x_pow_two_pow(m / p as u32, f) ^ poly_rem(2, f);
        deg64(poly_gcd(f, h)) == 0
    })
}

/// Whether `x` has multiplicative order exactly `2^m - 1` modulo an
/// irreducible `poly`.
pub fn has_full_order(poly: Polynomial) -> bool {
    let f = poly.bits() as u64;
    let n = (1u64 << poly.degree()) - 1;
    x_pow(n, f) == 1 && prime_factors(n).into_iter().all(|p| x_pow(n / p, f) != 1)
}

pub fn is_primitive(poly: Polynomial) -> bool {
    poly.degree() >= 1 && is_irreducible(poly) && has_full_order(poly)
}

/// Monic degree-`m` polynomials with nonzero constant term, ordered by weight
/// and then by bitmask value.
pub fn candidates(m: u32) -> impl Iterator<Item = Polynomial> {
    let mut all: Vec<u32> = (0..1u32 << (m - 1))
        .map(|mid| (1 << m) | (mid << 1) | 1)
        .collect();
    all.sort_by_key(|&bits| (bits.count_ones(), bits));
    all.into_iter().map(Polynomial)
}

/// All primitive polynomials of degree `m`, lowest weight first, then
/// lexicographically least bitmask.
pub fn primitive_polynomials(m: u32) -> impl Iterator<Item = Polynomial> {
    candidates(m).filter(|&p| is_primitive(p))
}

/// The first three primitive polynomials per degree in the order produced by
/// [`primitive_polynomials`] (fewer where fewer exist). The first entry is the
/// default polynomial for that degree.
const BUILTIN_TABLE: &[&[u32]] = &[
    &[0x7],
    &[0xb, 0xd],
    &[0x13, 0x19],
    &[0x25, 0x29, 0x2f],
    &[0x43, 0x61, 0x5b],
    &[0x83, 0x89, 0x91],
    &[0x11d, 0x12b, 0x12d],
    &[0x211, 0x221, 0x21b],
    &[0x409, 0x481, 0x41b],
    &[0x805, 0xa01, 0x817],
    &[0x1053, 0x1069, 0x1099],
    &[0x201b, 0x2027, 0x2035],
    &[0x402b, 0x4039, 0x4053],
    &[0x8003, 0x8011, 0x8081],
    &[0x1002d, 0x10039, 0x10053],
];

pub const BUILTIN_MAX_DEGREE: u32 = 16;

/// Built-in primitive polynomials of degree `m` (empty outside 2..=16).
pub fn builtin_polynomials(m: u32) -> Vec<Polynomial> {
    if !(MIN_DEGREE..=BUILTIN_MAX_DEGREE).contains(&m) {
        return Vec::new();
    }
    BUILTIN_TABLE[(m - MIN_DEGREE) as usize]
        .iter()
        .map(|&b| Polynomial(b))
        .collect()
}

pub fn default_polynomial(m: u32) -> Option<Polynomial> {
    builtin_polynomials(m).first().copied()
}

/// An element of GF(2^m); coefficient of `π^i` at bit `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub const fn from_bits(bits: u32) -> Self {
        FieldElement(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn coefficient(self, i: u32) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;

    // characteristic 2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

/// Polynomial-basis expansion `b_0 + b_1 π + … + b_(e-1) π^(e-1) + π^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseExpansion {
    /// Index of the top nonzero coefficient.
    pub e: u32,
    /// The `e` coefficients below the leading one, `b[0]` is the constant term.
    pub b: Vec<bool>,
}

impl InverseExpansion {
    pub fn b0(&self) -> bool {
        self.b.first().copied().unwrap_or(true)
    }
}

/// GF(2^m) defined by a verified primitive polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    m: u32,
    modulus: Polynomial,
    n: u32,
    /// Bit `i` is `T(π^i)`.
    trace_mask: u32,
}

impl FieldContext {
    /// Validates `poly` and builds the field. Fails unless `poly` has degree
    /// `m` and is primitive.
    pub fn new(m: u32, poly: Polynomial) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange { m });
        }
        if poly.degree() != m {
            return Err(Error::DegreeMismatch {
                expected: m,
                actual: poly.degree(),
            });
        }
        if !poly.coefficient(0) || !is_irreducible(poly) {
            return Err(Error::NotIrreducible(poly.to_string()));
        }
        if !has_full_order(poly) {
            return Err(Error::NotPrimitive(poly.to_string()));
        }
        Ok(FieldContext {
            m,
            modulus: poly,
            n: (1 << m) - 1,
            trace_mask: newton_trace_mask(poly),
        })
    }

    /// The field for degree `m` built from the built-in default polynomial.
    pub fn builtin(m: u32) -> Result<Self> {
        let poly = default_polynomial(m).ok_or(Error::DegreeOutOfRange { m })?;
        FieldContext::new(m, poly)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> Polynomial {
        self.modulus
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Size of the field, `2^m`.
    pub fn order(&self) -> u32 {
        self.n + 1
    }

    pub fn trace_mask(&self) -> u32 {
        self.trace_mask
    }

    pub fn pi(&self) -> FieldElement {
        FieldElement(2)
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 >> self.m == 0
    }

    /// All field elements in bitmask order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(FieldElement)
    }

    /// `a · π`: one shift and a conditional reduction.
    pub fn mul_by_pi(&self, a: FieldElement) -> FieldElement {
        let shifted = a.0 << 1;
        if shifted >> self.m & 1 == 1 {
            FieldElement(shifted ^ self.modulus.0)
        } else {
            FieldElement(shifted)
        }
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut acc = 0u32;
        let mut x = a;
        let mut rest = b.0;
        while rest != 0 {
            if rest & 1 == 1 {
                acc ^= x.0;
            }
            x = self.mul_by_pi(x);
            rest >>= 1;
        }
        FieldElement(acc)
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Square-and-multiply; `a^0 = 1` for every `a`, including zero.
    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k != 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            k >>= 1;
        }
        acc
    }

    pub fn pi_pow(&self, k: u64) -> FieldElement {
        self.pow(self.pi(), k % self.n as u64)
    }

    /// `a^(2^m - 2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.n as u64 - 1))
    }

    /// Absolute trace as an inner product with the trace-of-basis mask.
    pub fn trace(&self, a: FieldElement) -> bool {
        (a.0 & self.trace_mask).count_ones() & 1 == 1
    }

    /// Absolute trace by its definition, `a + a^2 + … + a^(2^(m-1))`.
    pub fn trace_by_squaring(&self, a: FieldElement) -> bool {
        let mut sum = a;
        let mut x = a;
        for _ in 1..self.m {
            x = self.square(x);
            sum = sum + x;
        }
        debug_assert!(sum.0 <= 1, "trace must land in GF(2)");
        sum.0 == 1
    }

    /// Expansion of `(1 + π^τ)^(-1)` for `1 ≤ τ ≤ n - 1`.
    pub fn expand_inverse_one_plus_pi_tau(&self, tau: usize) -> Result<InverseExpansion> {
        let n = self.n as usize;
        if tau == 0 || tau >= n {
            return Err(Error::TauOutOfRange {
                tau,
                min: 1,
                max: n - 1,
            });
        }
        let denom = FieldElement::ONE + self.pi_pow(tau as u64);
        let inverse = self.inv(denom)?;
        let e = 31 - inverse.0.leading_zeros();
        if e == 0 || e >= self.m {
            return Err(Error::Internal(format!(
                "(1+π^{tau})^-1 = {:#x} has leading index {e}",
                inverse.0
            )));
        }
        let b = (0..e).map(|i| inverse.coefficient(i)).collect();
        Ok(InverseExpansion { e, b })
    }
}

/// Traces of the basis `π^0 … π^(m-1)` as the power sums of the roots of the
/// modulus, via Newton's identities reduced mod 2.
fn newton_trace_mask(poly: Polynomial) -> u32 {
    let m = poly.degree();
    // e_k is the coefficient of x^(m-k)
    let esym = |k: u32| poly.coefficient(m - k);
    let mut p = vec![false; m as usize];
    p[0] = m % 2 == 1;
    for k in 1..m {
        let mut acc = k % 2 == 1 && esym(k);
        for i in 1..k {
            acc ^= esym(i) & p[(k - i) as usize];
        }
        p[k as usize] = acc;
    }
    p.iter()
        .enumerate()
        .fold(0, |mask, (i, &bit)| mask | (bit as u32) << i)
}

/// Validating constructor; the free-function form of [`FieldContext::new`].
pub fn make_field(m: u32, poly: Polynomial) -> Result<FieldContext> {
    FieldContext::new(m, poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldContext {
        FieldContext::new(3, Polynomial::from_bits(0xb)).unwrap()
    }

    #[test]
    fn powers_of_x_mod_x3_x_1_cover_the_group() {
        let ctx = gf8();
        let mut seen: Vec<u32> = (0..7).map(|k| ctx.pi_pow(k).bits()).collect();
        seen.sort_unstable();
        assert_eq!(seen, (1..8).collect::<Vec<_>>());
        assert_eq!(ctx.n(), 7);
    }

    #[test]
    fn make_field_rejects_bad_polynomials() {
        assert_eq!(
            FieldContext::new(4, Polynomial::from_bits(0b10101)),
            Err(Error::NotIrreducible("0x15".into()))
        );
        // x^4+x^3+x^2+x+1 is irreducible, order 5
        assert_eq!(
            FieldContext::new(4, Polynomial::from_bits(0x1f)),
            Err(Error::NotPrimitive("0x1f".into()))
        );
        assert!(matches!(
            FieldContext::new(4, "3,1,0".parse().unwrap()),
            Err(Error::DegreeMismatch {
                expected: 4,
                actual: 3
            })
        ));
        assert!(matches!(
            FieldContext::new(1, Polynomial::from_bits(0x3)),
            Err(Error::DegreeOutOfRange { m: 1 })
        ));
        assert!(matches!(
            FieldContext::new(25, Polynomial::from_bits(1 << 25 | 1)),
            Err(Error::DegreeOutOfRange { m: 25 })
        ));
        assert!(matches!(
            FieldContext::new(3, Polynomial::from_bits(0b1010)),
            Err(Error::NotIrreducible(_))
        ));
        let gf4 = FieldContext::new(2, Polynomial::from_bits(0x7)).unwrap();
        assert_eq!(gf4.n(), 3);
    }

    #[test]
    fn parse_both_text_forms() {
        let a: Polynomial = "0xB".parse().unwrap();
        let b: Polynomial = "3,1,0".parse().unwrap();
        let c: Polynomial = " 0, 1 ,3 ".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.to_string(), "0xb");
        assert_eq!(a.to_exponent_list(), "3,1,0");
        assert!("".parse::<Polynomial>().is_err());
        assert!("3,3,0".parse::<Polynomial>().is_err());
        assert!("0xzz".parse::<Polynomial>().is_err());
        assert!("0x0".parse::<Polynomial>().is_err());
        assert!("30,0".parse::<Polynomial>().is_err());
    }

    #[test]
    fn multiplication_examples() {
        let ctx = gf8();
        let pi = ctx.pi();
        let pi2 = ctx.square(pi);
        assert_eq!(ctx.mul(pi, pi2), FieldElement::from_bits(0b011));
        for a in ctx.elements() {
            assert_eq!(ctx.mul(a, FieldElement::ONE), a);
            assert_eq!(ctx.mul(a, FieldElement::ZERO), FieldElement::ZERO);
        }
    }

    #[test]
    fn inverse_examples() {
        let ctx = gf8();
        let one_plus_pi = FieldElement::from_bits(0b011);
        assert_eq!(
            ctx.inv(one_plus_pi).unwrap(),
            FieldElement::from_bits(0b110)
        );
        assert_eq!(ctx.inv(FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert_eq!(ctx.inv(FieldElement::ZERO), Err(Error::ZeroInverse));

        let gf4 = FieldContext::new(2, Polynomial::from_bits(0x7)).unwrap();
        assert_eq!(gf4.inv(gf4.pi()).unwrap(), FieldElement::from_bits(0b11));
    }

    #[test]
    fn trace_examples() {
        let ctx = gf8();
        assert!(ctx.trace(FieldElement::ONE));
        assert!(!ctx.trace(ctx.pi()));
        assert!(!ctx.trace(FieldElement::ZERO));
        assert_eq!(ctx.trace_mask(), 0b001);
    }

    #[test]
    fn pow_examples() {
        let ctx = gf8();
        assert_eq!(ctx.pow(ctx.pi(), 7), FieldElement::ONE);
        assert_eq!(ctx.pow(ctx.pi(), 3), FieldElement::from_bits(0b011));
        assert_eq!(ctx.pow(FieldElement::ZERO, 0), FieldElement::ONE);
        assert_eq!(ctx.pow(FieldElement::from_bits(5), 0), FieldElement::ONE);
    }

    #[test]
    fn inverse_expansion_examples() {
        let ctx = gf8();
        let ex = |tau| ctx.expand_inverse_one_plus_pi_tau(tau).unwrap();
        assert_eq!(
            ex(1),
            InverseExpansion {
                e: 2,
                b: vec![false, true]
            }
        );
        assert_eq!(
            ex(5),
            InverseExpansion {
                e: 1,
                b: vec![true]
            }
        );
        assert_eq!(
            ex(3),
            InverseExpansion {
                e: 2,
                b: vec![true, false]
            }
        );
        assert!(matches!(
            ctx.expand_inverse_one_plus_pi_tau(0),
            Err(Error::TauOutOfRange { tau: 0, .. })
        ));
        assert!(ctx.expand_inverse_one_plus_pi_tau(7).is_err());
    }

    #[test]
    fn prime_factors_by_trial_division() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(255), vec![3, 5, 17]);
        assert_eq!(prime_factors((1 << 24) - 1), vec![3, 5, 7, 13, 17, 241]);
        assert_eq!(prime_factors(8191), vec![8191]);
    }

    #[test]
    fn builtin_table_is_canonical() {
        for m in MIN_DEGREE..=BUILTIN_MAX_DEGREE {
            let table = builtin_polynomials(m);
            let expected: Vec<Polynomial> = primitive_polynomials(m).take(3).collect();
            assert_eq!(table, expected, "degree {m}");
            for p in table {
                assert!(FieldContext::new(m, p).is_ok());
            }
        }
        assert!(builtin_polynomials(17).is_empty());
        assert_eq!(default_polynomial(3), Some(Polynomial::from_bits(0xb)));
    }

    #[test]
    fn primitive_counts_match_euler_phi() {
        // phi(2^m - 1) / m
        for (m, count) in [(2, 1), (3, 2), (4, 2), (5, 6), (6, 6), (7, 18), (8, 16)] {
            assert_eq!(primitive_polynomials(m).count(), count, "degree {m}");
        }
    }

    #[test]
    fn large_degree_field_builds() {
        // x^24 + x^7 + x^2 + x + 1
        let poly = Polynomial::from_exponents(&[24, 7, 2, 1, 0]).unwrap();
        let ctx = FieldContext::new(24, poly).unwrap();
        assert_eq!(ctx.pow(ctx.pi(), ctx.n() as u64), FieldElement::ONE);
        let a = FieldElement::from_bits(0x00ab_cdef);
        assert_eq!(ctx.trace(a), ctx.trace_by_squaring(a));
    }
}
