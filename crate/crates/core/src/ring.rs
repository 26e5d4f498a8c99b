//! The bivariate quotient ring `S = F2[x,y]/<x^l - 1, y^m - 1>`, free
//! bivariate polynomials under the lexicographic order `x > y`,
//! polynomial reduction and Buchberger's algorithm, and the coprime
//! univariate isomorphism `psi`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::words_for;
use crate::poly::{PolyError, UniPoly};

/// Defensive bound on free bivariate exponents.
const MAX_FREE_EXPONENT: u32 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    MismatchedDims,
    ZeroPolynomial,
    /// `psi` requires odd, coprime side lengths.
    NotCoprime { ell: usize, m: usize },
    EvenSide { side: usize },
    /// The staircase of the leading-monomial ideal is unbounded.
    NotZeroDimensional,
    Parse(String),
    Poly(PolyError),
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::MismatchedDims => write!(f, "mismatched ring dimensions"),
            RingError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            RingError::NotCoprime { ell, m } => {
                write!(f, "psi requires odd coprime sides, got ({ell}, {m})")
            }
            RingError::EvenSide { side } => write!(f, "side {side} must be odd"),
            RingError::NotZeroDimensional => {
                write!(f, "leading-monomial staircase is unbounded")
            }
            RingError::Parse(msg) => write!(f, "bivariate parse error: {msg}"),
            RingError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RingError {}

impl From<PolyError> for RingError {
    fn from(e: PolyError) -> Self {
        RingError::Poly(e)
    }
}

/// An element of `F2[x,y]/<x^l - 1, y^m - 1>` stored as an `l x m` bit
/// grid; bit `(i, j)` is the coefficient of `x^i y^j`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiPoly {
    ell: usize,
    m: usize,
    bits: Vec<u64>,
}

impl BiPoly {
    pub fn zero(ell: usize, m: usize) -> Self {
        assert!(ell >= 1 && m >= 1);
        BiPoly {
            ell,
            m,
            bits: vec![0; words_for(ell * m)],
        }
    }

    pub fn one(ell: usize, m: usize) -> Self {
        Self::monomial(ell, m, 0, 0)
    }

    /// The monomial `x^i y^j` (exponents reduced mod `l`, `m`).
    pub fn monomial(ell: usize, m: usize, i: usize, j: usize) -> Self {
        let mut p = Self::zero(ell, m);
        p.toggle(i % ell, j % m);
        p
    }

    /// Build from monomial exponent pairs; duplicates cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize)>>(
        ell: usize,
        m: usize,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(ell, m);
        for (i, j) in terms {
            p.toggle(i % ell, j % m);
        }
        p
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.ell && j < self.m);
        i * self.m + j
    }

    fn toggle(&mut self, i: usize, j: usize) {
        let idx = self.index(i, j);
        self.bits[idx / 64] ^= 1 << (idx % 64);
    }

    pub fn coeff(&self, i: usize, j: usize) -> bool {
        let idx = self.index(i, j);
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponent pairs of the nonzero coefficients, in `(i, j)` order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.bits.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let idx = wi * 64 + w.trailing_zeros() as usize;
                out.push((idx / self.m, idx % self.m));
                w &= w - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &BiPoly) -> Result<BiPoly, RingError> {
        if (self.ell, self.m) != (other.ell, other.m) {
            return Err(RingError::MismatchedDims);
        }
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(other.bits.iter()) {
            *a ^= b;
        }
        Ok(out)
    }

    /// Product in the quotient ring: 2D cyclic convolution of the grids.
    pub fn mul(&self, other: &BiPoly) -> Result<BiPoly, RingError> {
        if (self.ell, self.m) != (other.ell, other.m) {
            return Err(RingError::MismatchedDims);
        }
        let mut out = Self::zero(self.ell, self.m);
        let other_support = other.support();
        for (i, j) in self.support() {
            for &(u, v) in &other_support {
                out.toggle((i + u) % self.ell, (j + v) % self.m);
            }
        }
        Ok(out)
    }

    pub fn square(&self) -> BiPoly {
        Self::from_terms(
            self.ell,
            self.m,
            self.support().into_iter().map(|(i, j)| (2 * i, 2 * j)),
        )
    }

    /// Multiplication by the monomial `x^u y^v`.
    pub fn shifted(&self, u: usize, v: usize) -> BiPoly {
        Self::from_terms(
            self.ell,
            self.m,
            self.support().into_iter().map(|(i, j)| (i + u, j + v)),
        )
    }

    /// The transpose map `x^i -> x^{l-i}`, `y^j -> y^{m-j}`; involutive.
    pub fn transpose(&self) -> BiPoly {
        Self::from_terms(
            self.ell,
            self.m,
            self.support()
                .into_iter()
                .map(|(i, j)| ((self.ell - i) % self.ell, (self.m - j) % self.m)),
        )
    }

    /// Equality up to multiplication by a monomial `x^u y^v`.
    ///
    /// Polynomials from different rings are never equivalent.
    pub fn equivalent(&self, other: &BiPoly) -> bool {
        if (self.ell, self.m) != (other.ell, other.m) {
            return false;
        }
        if self.weight() != other.weight() {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        for u in 0..self.ell {
            for v in 0..self.m {
                if &self.shifted(u, v) == other {
                    return true;
                }
            }
        }
        false
    }

    /// The lexicographically smallest grid among all `l*m` monomial
    /// shifts; a canonical representative of the equivalence class.
    pub fn canonical_form(&self) -> Result<BiPoly, RingError> {
        if self.is_zero() {
            return Err(RingError::ZeroPolynomial);
        }
        let mut best: Option<BiPoly> = None;
        for u in 0..self.ell {
            for v in 0..self.m {
                let cand = self.shifted(u, v);
                if best.as_ref().is_none_or(|b| cand.bits < b.bits) {
                    best = Some(cand);
                }
            }
        }
        Ok(best.expect("nonzero polynomial has shifts"))
    }

    /// Coefficient polynomials in `x`, indexed by the `y` exponent.
    pub fn x_coefficient_polys(&self) -> Vec<UniPoly> {
        (0..self.m)
            .map(|j| UniPoly::from_exponents((0..self.ell).filter(|&i| self.coeff(i, j))))
            .collect()
    }

    /// Coefficient polynomials in `y`, indexed by the `x` exponent.
    pub fn y_coefficient_polys(&self) -> Vec<UniPoly> {
        (0..self.ell)
            .map(|i| UniPoly::from_exponents((0..self.m).filter(|&j| self.coeff(i, j))))
            .collect()
    }

    pub(crate) fn grid_words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, j)) in support.iter().enumerate() {
            if n > 0 {
                f.write_str("+")?;
            }
            write_bi_term(f, *i, *j)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({}, {}; {self})", self.ell, self.m)
    }
}

fn write_bi_term(f: &mut fmt::Formatter<'_>, i: usize, j: usize) -> fmt::Result {
    match (i, j) {
        (0, 0) => f.write_str("1"),
        (1, 0) => f.write_str("x"),
        (0, 1) => f.write_str("y"),
        (i, 0) => write!(f, "x^{i}"),
        (0, j) => write!(f, "y^{j}"),
        (1, 1) => f.write_str("xy"),
        (1, j) => write!(f, "xy^{j}"),
        (i, 1) => write!(f, "x^{i}y"),
        (i, j) => write!(f, "x^{i}y^{j}"),
    }
}

/// Parse the bivariate text grammar: terms joined by `+`, each a product
/// of `1`, `x`, `x^K`, `y`, `y^K`; whitespace ignored.
pub fn parse_bipoly(s: &str, ell: usize, m: usize) -> Result<BiPoly, RingError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(BiPoly::zero(ell, m));
    }
    let mut terms = Vec::new();
    for term in compact.split('+') {
        terms.push(parse_bi_term(term)?);
    }
    Ok(BiPoly::from_terms(ell, m, terms))
}

fn parse_bi_term(term: &str) -> Result<(usize, usize), RingError> {
    if term == "1" {
        return Ok((0, 0));
    }
    let bytes = term.as_bytes();
    let mut pos = 0usize;
    let mut exp_of = |var: u8| -> Result<usize, RingError> {
        if pos >= bytes.len() || bytes[pos] != var {
            return Ok(0);
        }
        pos += 1;
        if pos >= bytes.len() || bytes[pos] != b'^' {
            return Ok(1);
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(RingError::Parse(alloc::format!("bad exponent in `{term}`")));
        }
        core::str::from_utf8(&bytes[start..pos])
            .unwrap()
            .parse()
            .map_err(|_| RingError::Parse(alloc::format!("bad exponent in `{term}`")))
    };
    let i = exp_of(b'x')?;
    let j = exp_of(b'y')?;
    if pos != bytes.len() || (i == 0 && j == 0) {
        return Err(RingError::Parse(alloc::format!(
            "expected a product of `1`, `x`, `x^K`, `y`, `y^K`, got `{term}`"
        )));
    }
    Ok((i, j))
}

// ---------------------------------------------------------------------------
// Free bivariate polynomials and Buchberger's algorithm.

/// A monomial `x^i y^j` of `F2[x,y]`; `Ord` is the lexicographic order
/// with `x > y`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono {
    pub x: u32,
    pub y: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { x: 0, y: 0 };

    pub fn divides(&self, other: &Mono) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono {
            x: self.x.max(other.x),
            y: self.y.max(other.y),
        }
    }

    fn quotient(&self, divisor: &Mono) -> Mono {
        debug_assert!(divisor.divides(self));
        Mono {
            x: self.x - divisor.x,
            y: self.y - divisor.y,
        }
    }

    fn is_coprime_to(&self, other: &Mono) -> bool {
        self.x.min(other.x) == 0 && self.y.min(other.y) == 0
    }
}

/// A polynomial of `F2[x,y]` as its monomial support set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct FreeBiPoly {
    terms: BTreeSet<Mono>,
}

impl FreeBiPoly {
    pub fn zero() -> Self {
        FreeBiPoly::default()
    }

    pub fn one() -> Self {
        Self::from_monos([Mono::ONE])
    }

    pub fn from_monos<I: IntoIterator<Item = Mono>>(monos: I) -> Self {
        let mut p = Self::zero();
        for mono in monos {
            assert!(
                mono.x <= MAX_FREE_EXPONENT && mono.y <= MAX_FREE_EXPONENT,
                "free exponent out of range"
            );
            p.toggle(mono);
        }
        p
    }

    pub fn from_exponent_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        Self::from_monos(pairs.into_iter().map(|(x, y)| Mono { x, y }))
    }

    /// Lift an element of the quotient ring to its free representative.
    pub fn from_bipoly(p: &BiPoly) -> Self {
        Self::from_exponent_pairs(
            p.support()
                .into_iter()
                .map(|(i, j)| (i as u32, j as u32)),
        )
    }

    /// `x^l - 1` as a free polynomial.
    pub fn x_order_relation(ell: usize) -> Self {
        Self::from_exponent_pairs([(ell as u32, 0), (0, 0)])
    }

    /// `y^m - 1` as a free polynomial.
    pub fn y_order_relation(m: usize) -> Self {
        Self::from_exponent_pairs([(0, m as u32), (0, 0)])
    }

    fn toggle(&mut self, mono: Mono) {
        if !self.terms.remove(&mono) {
            self.terms.insert(mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&Mono::ONE)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Mono> {
        self.terms.iter()
    }

    /// Leading monomial under lex `x > y`.
    pub fn leading_monomial(&self) -> Option<Mono> {
        self.terms.last().copied()
    }

    fn add_assign(&mut self, other: &FreeBiPoly) {
        for &mono in &other.terms {
            self.toggle(mono);
        }
    }

    /// Multiply by a monomial.
    fn shifted(&self, by: Mono) -> FreeBiPoly {
        FreeBiPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Mono {
                    x: t.x + by.x,
                    y: t.y + by.y,
                })
                .collect(),
        }
    }
}

impl fmt::Display for FreeBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, mono) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                f.write_str("+")?;
            }
            write_bi_term(f, mono.x as usize, mono.y as usize)?;
        }
        Ok(())
    }
}

/// Normal form of `f` modulo `basis`: no monomial of the result is
/// divisible by any leading monomial of `basis`.
///
/// Reduction always rewrites the largest reducible monomial by the first
/// matching basis element, so the result is deterministic. Panics if
/// `basis` contains the zero polynomial.
pub fn reduce(f: &FreeBiPoly, basis: &[FreeBiPoly]) -> FreeBiPoly {
    let lms: Vec<Mono> = basis
        .iter()
        .map(|g| g.leading_monomial().expect("reducer must be nonzero"))
        .collect();
    let mut out = f.clone();
    loop {
        let mut target = None;
        'outer: for mono in out.terms.iter().rev() {
            for (gi, lm) in lms.iter().enumerate() {
                if lm.divides(mono) {
                    target = Some((*mono, gi));
                    break 'outer;
                }
            }
        }
        let Some((mono, gi)) = target else {
            return out;
        };
        out.add_assign(&basis[gi].shifted(mono.quotient(&lms[gi])));
    }
}

/// An inter-reduced Groebner basis under lex `x > y`, sorted by leading
/// monomial. Over GF(2) the reduced basis is unique for the ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    gens: Vec<FreeBiPoly>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[FreeBiPoly] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }
}

/// Buchberger's algorithm with the normal (smallest-lcm-first) selection
/// strategy and the product/chain pair criteria, followed by full
/// inter-reduction.
pub fn buchberger(gens: &[FreeBiPoly]) -> GroebnerBasis {
    let mut basis: Vec<FreeBiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    assert!(!basis.is_empty(), "need at least one nonzero generator");

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pending.insert((j, i));
        }
    }

    while !pending.is_empty() {
        let lm = |i: usize| basis[i].leading_monomial().expect("nonzero");
        // Normal strategy: smallest lcm first, ties by index.
        let &(i, j) = pending
            .iter()
            .min_by_key(|&&(i, j)| (lm(i).lcm(&lm(j)), i, j))
            .expect("nonempty queue");
        pending.remove(&(i, j));
        done.insert((i, j));

        let (lmi, lmj) = (lm(i), lm(j));
        if lmi.is_coprime_to(&lmj) {
            continue; // product criterion
        }
        let lcm = lmi.lcm(&lmj);
        // Chain criterion: some k with LM(k) | lcm and both side pairs
        // already treated.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(k).divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let mut spoly = basis[i].shifted(lcm.quotient(&lmi));
        spoly.add_assign(&basis[j].shifted(lcm.quotient(&lmj)));
        let nf = reduce(&spoly, &basis);
        if !nf.is_zero() {
            let new = basis.len();
            for k in 0..new {
                pending.insert((k, new));
            }
            basis.push(nf);
        }
    }

    // Drop generators whose leading monomial is divisible by another's.
    let mut keep: Vec<FreeBiPoly> = Vec::new();
    let mut sorted = basis.clone();
    sorted.sort_unstable_by_key(|g| g.leading_monomial().expect("nonzero"));
    for (idx, g) in sorted.iter().enumerate() {
        let lm = g.leading_monomial().expect("nonzero");
        let redundant = sorted.iter().enumerate().any(|(k, other)| {
            k != idx && {
                let olm = other.leading_monomial().expect("nonzero");
                olm.divides(&lm) && (olm != lm || k < idx)
            }
        });
        if !redundant {
            keep.push(g.clone());
        }
    }

    // Tail-reduce each survivor against the others.
    let mut reduced: Vec<FreeBiPoly> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<FreeBiPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        if others.is_empty() {
            reduced.push(keep[i].clone());
        } else {
            reduced.push(reduce(&keep[i], &others));
        }
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_unstable_by_key(|g| g.leading_monomial().expect("nonzero"));
    GroebnerBasis { gens: reduced }
}

/// The monomials `x^i y^j` with `i < l`, `j < m` outside the
/// leading-monomial ideal of `basis`; their count is the dimension of the
/// quotient.
///
/// Errors if the staircase is unbounded (the ideal is not
/// zero-dimensional), which cannot happen when `x^l - 1` and `y^m - 1`
/// are in the ideal.
pub fn standard_monomials(
    basis: &GroebnerBasis,
    ell: usize,
    m: usize,
) -> Result<Vec<(usize, usize)>, RingError> {
    let lms = basis.leading_monomials();
    let has_pure_x = lms.iter().any(|lm| lm.y == 0);
    let has_pure_y = lms.iter().any(|lm| lm.x == 0);
    if !has_pure_x || !has_pure_y {
        return Err(RingError::NotZeroDimensional);
    }
    let mut out = Vec::new();
    for i in 0..ell {
        for j in 0..m {
            let mono = Mono {
                x: i as u32,
                y: j as u32,
            };
            if !lms.iter().any(|lm| lm.divides(&mono)) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The coprime univariate isomorphism.

/// The ring isomorphism `psi: S -> F2[z]/<z^{lm} - 1>` for odd coprime
/// `(l, m)`, determined by `x -> z^{e_x}`, `y -> z^{e_y}` with
/// `e_x = (m^-1 mod l) m` and `e_y = (l^-1 mod m) l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoprimePsi {
    pub ell: usize,
    pub m: usize,
    pub e_x: usize,
    pub e_y: usize,
}

fn mod_inverse(a: usize, n: usize) -> Option<usize> {
    if n == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (n as i64, (a % n) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i64) as usize)
}

impl CoprimePsi {
    pub fn new(ell: usize, m: usize) -> Result<Self, RingError> {
        if ell % 2 == 0 {
            return Err(RingError::EvenSide { side: ell });
        }
        if m % 2 == 0 {
            return Err(RingError::EvenSide { side: m });
        }
        let (Some(m_inv), Some(ell_inv)) = (mod_inverse(m, ell), mod_inverse(ell, m)) else {
            return Err(RingError::NotCoprime { ell, m });
        };
        Ok(CoprimePsi {
            ell,
            m,
            e_x: m_inv * m % (ell * m),
            e_y: ell_inv * ell % (ell * m),
        })
    }

    pub fn modulus_exponent(&self) -> usize {
        self.ell * self.m
    }

    /// Image of the monomial `x^i y^j` as an exponent of `z`.
    pub fn image_exponent(&self, i: usize, j: usize) -> usize {
        (i * self.e_x + j * self.e_y) % (self.ell * self.m)
    }

    /// Apply `psi` to a ring element. Panics if `p` does not live in the
    /// `(l, m)` ring.
    pub fn apply(&self, p: &BiPoly) -> UniPoly {
        assert_eq!((p.ell(), p.m()), (self.ell, self.m), "ring mismatch");
        UniPoly::from_exponents(
            p.support()
                .into_iter()
                .map(|(i, j)| self.image_exponent(i, j)),
        )
    }

    /// Apply `psi^-1`: `z^k` maps to `x^{k mod l} y^{k mod m}`.
    ///
    /// Exponents of `p` are first reduced mod `z^{lm} - 1`.
    pub fn inverse(&self, p: &UniPoly) -> BiPoly {
        let n = self.ell * self.m;
        BiPoly::from_terms(
            self.ell,
            self.m,
            p.support().into_iter().map(|e| (e % n % self.ell, e % n % self.m)),
        )
    }
}
