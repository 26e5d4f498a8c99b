//! Univariate polynomial arithmetic over GF(2) and the elementary number
//! theory used by the factorisation machinery.
//!
//! Polynomials are stored as machine-word-packed coefficient bit vectors
//! indexed by exponent, so addition is a word-wise XOR and division is a
//! shift-and-XOR loop. The zero polynomial is the empty support.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{words_for, WORD_BITS};

/// A univariate polynomial over GF(2).
///
/// Bit `i` of the packed words is the coefficient of `z^i`. The word
/// vector never carries trailing zero words, so `==` and `Ord` compare
/// representations directly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UniPoly {
    words: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    DivisionByZero,
    ZeroModulus,
    /// gcd(0, 0) is undefined.
    GcdOfZeros,
    /// Reciprocal of the zero polynomial is undefined.
    ZeroPolynomial,
    /// Polynomial order requires a nonzero constant term.
    OrderUndefined,
    /// The linear order search passed its `2^deg - 1` iteration cap.
    OrderSearchExceeded,
    /// Multiplicative order requires coprime arguments.
    NotCoprime { base: u64, modulus: u64 },
    /// The input was required to be odd.
    EvenInput { n: u64 },
    /// Unparseable polynomial text.
    Parse(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DivisionByZero => write!(f, "polynomial division by zero"),
            PolyError::ZeroModulus => write!(f, "zero modulus"),
            PolyError::GcdOfZeros => write!(f, "gcd(0, 0) is undefined"),
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            PolyError::OrderUndefined => {
                write!(f, "polynomial order requires a nonzero constant term")
            }
            PolyError::OrderSearchExceeded => write!(f, "order search exceeded its iteration cap"),
            PolyError::NotCoprime { base, modulus } => {
                write!(f, "gcd({base}, {modulus}) != 1")
            }
            PolyError::EvenInput { n } => write!(f, "{n} must be odd"),
            PolyError::Parse(msg) => write!(f, "polynomial parse error: {msg}"),
        }
    }
}

impl core::error::Error for PolyError {}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { words: vec![1] }
    }

    /// The monomial `z^e`.
    pub fn monomial(e: usize) -> Self {
        let mut words = vec![0u64; words_for(e + 1)];
        words[e / WORD_BITS] = 1 << (e % WORD_BITS);
        UniPoly { words }
    }

    /// `z^n - 1` (equivalently `z^n + 1` over GF(2)); the cyclic modulus.
    pub fn zn_minus_1(n: usize) -> Self {
        assert!(n >= 1);
        let mut p = UniPoly::monomial(n);
        p.words[0] ^= 1;
        p
    }

    /// Build from the exponents of the nonzero coefficients; duplicate
    /// exponents cancel in pairs.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut words: Vec<u64> = Vec::new();
        for e in exponents {
            let wi = e / WORD_BITS;
            if wi >= words.len() {
                words.resize(wi + 1, 0);
            }
            words[wi] ^= 1 << (e % WORD_BITS);
        }
        let mut p = UniPoly { words };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (63 - last.leading_zeros() as usize))
    }

    /// Coefficient of `z^i`.
    pub fn coeff(&self, i: usize) -> bool {
        let wi = i / WORD_BITS;
        wi < self.words.len() && self.words[wi] >> (i % WORD_BITS) & 1 == 1
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents of the nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    fn add_assign(&mut self, other: &UniPoly) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= b;
        }
        self.trim();
    }

    /// XOR `other << shift` into `self` (i.e. add `z^shift * other`).
    fn add_shifted_assign(&mut self, other: &UniPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let deg = other.degree().unwrap() + shift;
        if words_for(deg + 1) > self.words.len() {
            self.words.resize(words_for(deg + 1), 0);
        }
        let (wshift, bshift) = (shift / WORD_BITS, shift % WORD_BITS);
        if bshift == 0 {
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + wshift] ^= w;
            }
        } else {
            let mut carry = 0u64;
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + wshift] ^= (w << bshift) | carry;
                carry = w >> (WORD_BITS - bshift);
            }
            if carry != 0 {
                self.words[other.words.len() + wshift] ^= carry;
            }
        }
        self.trim();
    }

    /// Carry-less (schoolbook) product.
    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = UniPoly::zero();
        for e in self.support() {
            out.add_shifted_assign(other, e);
        }
        out
    }

    pub fn square(&self) -> UniPoly {
        // (sum z^e)^2 = sum z^{2e} in characteristic 2.
        UniPoly::from_exponents(self.support().into_iter().map(|e| 2 * e))
    }

    /// Quotient and remainder with `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot.add_shifted_assign(&UniPoly::one(), shift);
            rem.add_shifted_assign(divisor, shift);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, modulus: &UniPoly) -> Result<UniPoly, PolyError> {
        Ok(self.divrem(modulus)?.1)
    }

    /// `self * other mod modulus`.
    pub fn mul_mod(&self, other: &UniPoly, modulus: &UniPoly) -> Result<UniPoly, PolyError> {
        if modulus.is_zero() {
            return Err(PolyError::ZeroModulus);
        }
        self.mul(other).rem(modulus)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &UniPoly) -> Result<UniPoly, PolyError> {
        if modulus.is_zero() {
            return Err(PolyError::ZeroModulus);
        }
        let mut base = self.rem(modulus)?;
        let mut acc = UniPoly::one().rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square().rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Monic greatest common divisor (monic is automatic over GF(2)).
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Extended Euclid: returns `(g, s, t)` with `g = s*self + t*other`.
    pub fn egcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly), PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            r0 = core::mem::replace(&mut r1, r);
            let s = {
                let mut s = s0.clone();
                s.add_assign(&q.mul(&s1));
                s
            };
            s0 = core::mem::replace(&mut s1, s);
            let t = {
                let mut t = t0.clone();
                t.add_assign(&q.mul(&t1));
                t
            };
            t0 = core::mem::replace(&mut t1, t);
        }
        Ok((r0, s0, t0))
    }

    /// The reciprocal `p*(z) = z^deg(p) p(1/z)`: exponent `i` maps to
    /// `deg(p) - i`.
    pub fn reciprocal(&self) -> Result<UniPoly, PolyError> {
        let d = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(UniPoly::from_exponents(
            self.support().into_iter().map(|e| d - e),
        ))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        match self.reciprocal() {
            Ok(r) => r == *self,
            Err(_) => false,
        }
    }

    /// `self * z^e` with exponents reduced mod `z^n - 1`.
    pub fn shift_mod_n(&self, e: usize, n: usize) -> UniPoly {
        UniPoly::from_exponents(self.support().into_iter().map(|i| (i + e) % n))
    }

    /// The least `e >= 1` with `p | z^e - 1`.
    ///
    /// Requires a nonzero constant term. For `deg p <= 32` the order is
    /// resolved by repeated squaring over the divisors of `2^deg - 1`
    /// whenever that exponent annihilates `z`; otherwise a linear step
    /// walk is used, capped at `2^deg - 1` iterations.
    pub fn order(&self) -> Result<u64, PolyError> {
        if self.is_zero() || !self.coeff(0) {
            return Err(PolyError::OrderUndefined);
        }
        let d = self.degree().unwrap();
        if d == 0 {
            return Ok(1);
        }
        let z = UniPoly::monomial(1);
        if d <= 32 {
            let group = (1u64 << d) - 1;
            if z.pow_mod(group, self)?.is_one() {
                let mut e = group;
                for (q, _) in prime_factorization(group) {
                    while e % q == 0 && z.pow_mod(e / q, self)?.is_one() {
                        e /= q;
                    }
                }
                return Ok(e);
            }
        }
        let cap = if d >= 64 { u64::MAX } else { (1u64 << d) - 1 };
        let mut r = z.rem(self)?;
        let mut e = 1u64;
        while !r.is_one() {
            if e >= cap {
                return Err(PolyError::OrderSearchExceeded);
            }
            r = r.mul(&z).rem(self)?;
            e += 1;
        }
        Ok(e)
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let z = UniPoly::monomial(1);
        // z^{2^d} == z mod self, and gcd(z^{2^{d/q}} - z, self) == 1 for
        // every prime divisor q of d.
        let mut pow = z.clone();
        let mut exponents_to_check: Vec<usize> =
            prime_factorization(d as u64).iter().map(|&(q, _)| d / q as usize).collect();
        exponents_to_check.sort_unstable();
        let mut step = 0usize;
        while step < d {
            pow = pow.square().rem(self).expect("nonzero modulus");
            step += 1;
            if exponents_to_check.contains(&step) {
                let mut diff = pow.clone();
                diff.add_assign(&z);
                let g = match diff.gcd(self) {
                    Ok(g) => g,
                    Err(_) => continue, // diff == 0 => gcd is self, reducible unless d == step
                };
                if !g.is_one() {
                    return false;
                }
            }
        }
        let mut diff = pow;
        diff.add_assign(&z);
        diff.is_zero()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl core::ops::Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl core::ops::Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.mul(rhs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.support(), "z")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, support: &[usize], var: &str) -> fmt::Result {
    if support.is_empty() {
        return f.write_str("0");
    }
    for (i, e) in support.iter().enumerate() {
        if i > 0 {
            f.write_str("+")?;
        }
        match e {
            0 => f.write_str("1")?,
            1 => f.write_str(var)?,
            _ => write!(f, "{var}^{e}")?,
        }
    }
    Ok(())
}

impl core::str::FromStr for UniPoly {
    type Err = PolyError;

    /// Parses the text grammar shared with the CLI: terms joined by `+`,
    /// each term `1`, `z` or `z^K`; whitespace ignored; duplicate
    /// exponents cancel. `0` denotes the zero polynomial.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(UniPoly::zero());
        }
        let mut exponents = Vec::new();
        for term in compact.split('+') {
            exponents.push(parse_uni_term(term, 'z')?);
        }
        Ok(UniPoly::from_exponents(exponents))
    }
}

pub(crate) fn parse_uni_term(term: &str, var: char) -> Result<usize, PolyError> {
    if term == "1" {
        return Ok(0);
    }
    let mut chars = term.chars();
    if chars.next() != Some(var) {
        return Err(PolyError::Parse(alloc::format!(
            "expected `1`, `{var}` or `{var}^K`, got `{term}`"
        )));
    }
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok(1);
    }
    let Some(exp) = rest.strip_prefix('^') else {
        return Err(PolyError::Parse(alloc::format!("malformed term `{term}`")));
    };
    exp.parse::<usize>()
        .map_err(|_| PolyError::Parse(alloc::format!("bad exponent in `{term}`")))
}

// ---------------------------------------------------------------------------
// Integer helpers.

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn prime_factorization(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut mult = 0;
        while *n % p == 0 {
            *n /= p;
            mult += 1;
        }
        if mult > 0 {
            out.push((p, mult));
        }
    };
    push(2, &mut n);
    let mut p = 3u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= n) {
        push(p, &mut n);
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    prime_factorization(n) == [(n, 1)]
}

/// Least `e >= 1` with `base^e = 1 (mod modulus)`.
pub fn multiplicative_order(base: u64, modulus: u64) -> Result<u64, PolyError> {
    if modulus == 0 {
        return Err(PolyError::NotCoprime { base, modulus });
    }
    if modulus == 1 {
        return Ok(1);
    }
    if gcd_u64(base, modulus) != 1 {
        return Err(PolyError::NotCoprime { base, modulus });
    }
    let b = base % modulus;
    let mut cur = b;
    let mut e = 1u64;
    while cur != 1 {
        cur = (u128::from(cur) * u128::from(b) % u128::from(modulus)) as u64;
        e += 1;
        debug_assert!(e <= modulus);
    }
    Ok(e)
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut phi = n;
    for (p, _) in prime_factorization(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, mult) in prime_factorization(n) {
        let base = out.clone();
        let mut pk = 1u64;
        for _ in 0..mult {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// The number of irreducible factors of `z^n - 1` over GF(2) for odd `n`:
/// `eta = sum over d | n of phi(d) / ord_d(2)`.
pub fn eta_count(n: u64) -> Result<u64, PolyError> {
    if n % 2 == 0 {
        return Err(PolyError::EvenInput { n });
    }
    let mut eta = 0;
    for d in divisors(n) {
        eta += euler_phi(d) / multiplicative_order(2, d)?;
    }
    Ok(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels_in_characteristic_2() {
        assert!((&p("1+z") + &p("1+z")).is_zero());
        assert_eq!(&p("1+z+z^2") + &p("z+z^3"), p("1+z^2+z^3"));
        assert_eq!(&p("1+z^4") + &UniPoly::zero(), p("1+z^4"));
    }

    #[test]
    fn mul_mod_wraps_cyclically() {
        let m = UniPoly::zn_minus_1(15);
        let prod = UniPoly::monomial(1)
            .mul_mod(&UniPoly::monomial(14), &m)
            .unwrap();
        assert!(prod.is_one());
        let q = p("1+z^2+z^7");
        assert_eq!(q.mul_mod(&UniPoly::one(), &m).unwrap(), q);
        assert_eq!(
            UniPoly::one().mul_mod(&q, &UniPoly::zero()),
            Err(PolyError::ZeroModulus)
        );
    }

    #[test]
    fn recipe_product_identity() {
        // 1+z+z^8 = (1+z+z^2)(1+z^2+z^3+z^5+z^6)
        let prod = p("1+z+z^2").mul(&p("1+z^2+z^3+z^5+z^6"));
        assert_eq!(prod, p("1+z+z^8"));
    }

    #[test]
    fn divrem_exact_and_small() {
        let (q, r) = p("1+z+z^8").divrem(&p("1+z+z^2")).unwrap();
        assert_eq!(q, p("1+z^2+z^3+z^5+z^6"));
        assert!(r.is_zero());

        let (q, r) = p("1+z^5+z^9").divrem(&UniPoly::one()).unwrap();
        assert_eq!(q, p("1+z^5+z^9"));
        assert!(r.is_zero());

        let (q, r) = UniPoly::monomial(2).divrem(&UniPoly::monomial(3)).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, UniPoly::monomial(2));

        assert_eq!(
            p("z").divrem(&UniPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn divrem_recombines() {
        let a = p("1+z^3+z^7+z^11");
        let b = p("1+z+z^4");
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&q.mul(&b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_examples() {
        // gcd(1+z^3+z^9, Phi_21) = 1+z^2+z^4+z^5+z^6
        let phi21 = p("1+z+z^2+z^4+z^6").mul(&p("1+z^2+z^4+z^5+z^6"));
        let g = p("1+z^3+z^9").gcd(&phi21).unwrap();
        assert_eq!(g, p("1+z^2+z^4+z^5+z^6"));

        assert_eq!(p("1+z^2").gcd(&UniPoly::zero()).unwrap(), p("1+z^2"));
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), Err(PolyError::GcdOfZeros));

        // Three-way gcd in the z^25-1 context.
        let g3 = p("1+z+z^3")
            .gcd(&p("1+z+z^5"))
            .unwrap()
            .gcd(&UniPoly::zn_minus_1(25))
            .unwrap();
        assert!(g3.is_one());
    }

    #[test]
    fn gcd_divides_and_is_symmetric() {
        let a = p("1+z^2+z^6+z^9");
        let b = p("1+z+z^2+z^5");
        let g = a.gcd(&b).unwrap();
        assert!(a.rem(&g).unwrap().is_zero());
        assert!(b.rem(&g).unwrap().is_zero());
        assert_eq!(g, b.gcd(&a).unwrap());
    }

    #[test]
    fn egcd_bezout() {
        let a = p("1+z+z^4");
        let b = p("1+z^2+z^3");
        let (g, s, t) = a.egcd(&b).unwrap();
        assert_eq!(&s.mul(&a) + &t.mul(&b), g);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("1+z+z^3").reciprocal().unwrap(), p("1+z^2+z^3"));
        assert_eq!(p("1+z+z^2").reciprocal().unwrap(), p("1+z+z^2"));
        assert!(p("1+z+z^2").is_self_reciprocal());
        let q = p("1+z^2+z^7");
        assert_eq!(q.reciprocal().unwrap().reciprocal().unwrap(), q);
        assert!(UniPoly::zero().reciprocal().is_err());
    }

    #[test]
    fn reciprocal_distributes_over_products() {
        let a = p("1+z+z^4");
        let b = p("1+z^2+z^3+z^5");
        let lhs = a.mul(&b).reciprocal().unwrap();
        let rhs = a.reciprocal().unwrap().mul(&b.reciprocal().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_examples() {
        assert_eq!(p("1+z+z^2").order().unwrap(), 3);
        assert_eq!(p("1+z+z^3").order().unwrap(), 7);
        assert_eq!(p("1+z").order().unwrap(), 1);
        assert_eq!(p("1+z^3+z^6").order().unwrap(), 9);
        // product of factors of distinct orders
        assert_eq!(p("1+z+z^2").mul(&p("1+z+z^3")).order().unwrap(), 21);
        assert!(p("z+z^2").order().is_err());
    }

    #[test]
    fn order_divides_exponent_of_multiples() {
        // If p | q then order(p) | order(q).
        let pp = p("1+z+z^2");
        let q = pp.mul(&p("1+z^3+z^6"));
        let (ep, eq) = (pp.order().unwrap(), q.order().unwrap());
        assert_eq!(eq % ep, 0);
    }

    #[test]
    fn irreducibility() {
        assert!(p("1+z+z^2").is_irreducible());
        assert!(p("1+z+z^3").is_irreducible());
        assert!(p("1+z^3+z^6").is_irreducible());
        assert!(!p("1+z^2").is_irreducible()); // (1+z)^2
        assert!(!p("1+z+z^8").is_irreducible());
        assert!(!UniPoly::one().is_irreducible());
    }

    #[test]
    fn multiplicative_order_examples() {
        assert_eq!(multiplicative_order(2, 9).unwrap(), 6);
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(2, 1).unwrap(), 1);
        assert!(multiplicative_order(2, 6).is_err());
    }

    #[test]
    fn euler_phi_examples() {
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_count(9).unwrap(), 3);
        assert_eq!(eta_count(1).unwrap(), 1);
        assert_eq!(eta_count(15).unwrap(), 5);
        assert!(eta_count(6).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1", "z", "1+z^2+z^16", "z^3+z^7"] {
            let q: UniPoly = s.parse().unwrap();
            let back: UniPoly = q.to_string().parse().unwrap();
            assert_eq!(q, back);
        }
        assert_eq!(p(" 1 + z + z^2 "), p("1+z+z^2"));
        // duplicate exponents cancel
        assert_eq!(p("z^2+z^2"), UniPoly::zero());
        assert!("1+w".parse::<UniPoly>().is_err());
        assert!("z^".parse::<UniPoly>().is_err());
    }
}
