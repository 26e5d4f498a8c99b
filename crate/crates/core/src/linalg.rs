//! GF(2) matrix machinery: parity-check construction from ring elements,
//! rank and kernel computation, logical-operator bases, and the alist
//! interchange format.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{weight_words, words_for, xor_words, BitVec};
use crate::poly::UniPoly;
use crate::ring::{BiPoly, CoprimePsi, RingError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    LengthMismatch { expected: usize, got: usize },
    DimensionMismatch,
    /// Constructor polynomial exponents exceed the ring periods.
    ExponentOutOfRange,
    AlistParse(String),
    Ring(RingError),
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::LengthMismatch { expected, got } => {
                write!(f, "vector length {got}, expected {expected}")
            }
            LinalgError::DimensionMismatch => write!(f, "matrix dimension mismatch"),
            LinalgError::ExponentOutOfRange => write!(f, "constructor exponent out of range"),
            LinalgError::AlistParse(msg) => write!(f, "alist parse error: {msg}"),
            LinalgError::Ring(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LinalgError {}

impl From<RingError> for LinalgError {
    fn from(e: RingError) -> Self {
        LinalgError::Ring(e)
    }
}

/// A dense bit-packed matrix over GF(2), row major.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols).max(1);
        F2Matrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    #[inline]
    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.row(r)[c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.row_mut(r)[c / 64];
        let mask = 1u64 << (c % 64);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    fn flip(&mut self, r: usize, c: usize) {
        self.row_mut(r)[c / 64] ^= 1u64 << (c % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn row_vec(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row(r).to_vec())
    }

    pub fn row_weight(&self, r: usize) -> usize {
        weight_words(self.row(r))
    }

    pub fn col_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_vec(r).ones() {
                out.set(c, r, true);
            }
        }
        out
    }

    /// Horizontal stacking `[self | other]`.
    pub fn hstack(&self, other: &F2Matrix) -> Result<F2Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in self.row_vec(r).ones() {
                out.set(r, c, true);
            }
            for c in other.row_vec(r).ones() {
                out.set(r, self.cols + c, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = vec![0u64; out.wpr];
            for c in self.row_vec(r).ones() {
                xor_words(&mut acc, other.row(c));
            }
            out.row_mut(r).copy_from_slice(&acc);
        }
        Ok(out)
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row(r)
                .iter()
                .zip(v.words())
                .fold(0u64, |acc, (a, b)| acc ^ (a & b))
                .count_ones()
                & 1;
            if parity == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        Echelon::from_matrix(self).rank()
    }

    /// Basis of the right null space; its size is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let ech = Echelon::from_matrix(self);
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - ech.rank());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in ech.rows.iter().zip(ech.pivots.iter()) {
                if row[free / 64] >> (free % 64) & 1 == 1 {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Membership of `v` in the row space.
    ///
    /// Builds an echelon form per call; batch callers should construct an
    /// [`Echelon`] once and use [`Echelon::contains`].
    pub fn in_row_space(&self, v: &BitVec) -> Result<bool, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(Echelon::from_matrix(self).contains(v))
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            writeln!(f, "{:?}", self.row_vec(r))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a matrix's row space, with pivot columns
/// sorted ascending. Supports fast repeated membership tests.
#[derive(Clone)]
pub struct Echelon {
    cols: usize,
    wpr: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<u64>>,
}

impl Echelon {
    pub fn from_matrix(m: &F2Matrix) -> Self {
        let mut ech = Echelon {
            cols: m.cols,
            wpr: m.wpr,
            pivots: Vec::new(),
            rows: Vec::new(),
        };
        for r in 0..m.rows {
            ech.insert(m.row(r));
        }
        ech
    }

    pub fn from_bitvecs(cols: usize, vecs: &[BitVec]) -> Self {
        let mut ech = Echelon {
            cols,
            wpr: words_for(cols).max(1),
            pivots: Vec::new(),
            rows: Vec::new(),
        };
        for v in vecs {
            assert_eq!(v.len(), cols);
            ech.insert(v.words());
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn reduce_words(&self, words: &mut [u64]) {
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if words[p / 64] >> (p % 64) & 1 == 1 {
                xor_words(words, row);
            }
        }
    }

    /// Reduce a copy of `row` and, if a residue survives, add it as a new
    /// echelon row. Returns the residue when the row enlarged the space.
    pub fn insert(&mut self, row: &[u64]) -> Option<BitVec> {
        debug_assert_eq!(row.len(), self.wpr);
        let mut cur = row.to_vec();
        self.reduce_words(&mut cur);
        let pivot = cur
            .iter()
            .enumerate()
            .find(|&(_, &w)| w != 0)
            .map(|(wi, &w)| wi * 64 + w.trailing_zeros() as usize)?;
        // Back-eliminate to keep the form reduced.
        for row in self.rows.iter_mut() {
            if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                xor_words(row, &cur);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, cur.clone());
        Some(BitVec::from_words(self.cols, cur))
    }

    /// Row-space membership.
    pub fn contains(&self, v: &BitVec) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        let mut cur = v.words().to_vec();
        self.reduce_words(&mut cur);
        cur.iter().all(|&w| w == 0)
    }

    pub(crate) fn contains_words(&self, words: &[u64]) -> bool {
        let mut cur = words.to_vec();
        self.reduce_words(&mut cur);
        cur.iter().all(|&w| w == 0)
    }
}

// ---------------------------------------------------------------------------
// BB codes.

/// A bivariate bicycle code: side lengths `(l, m)` and the two
/// constructor polynomials `a, b` of the quotient ring.
///
/// The trinomial ansatz reads `a = x^{a1} + y^{a2} + y^{a3}` and
/// `b = y^{b1} + x^{b2} + x^{b3}`; degenerate octets with cancelling
/// terms remain representable, the builders simply report what is there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BBCode {
    pub ell: usize,
    pub m: usize,
    pub a: BiPoly,
    pub b: BiPoly,
}

impl BBCode {
    pub fn new(ell: usize, m: usize, a: BiPoly, b: BiPoly) -> Result<Self, LinalgError> {
        if (a.ell(), a.m()) != (ell, m) || (b.ell(), b.m()) != (ell, m) {
            return Err(LinalgError::DimensionMismatch);
        }
        Ok(BBCode { ell, m, a, b })
    }

    /// Build from the constructor octet `{l, m, a1, a2, a3, b1, b2, b3}`.
    pub fn from_octet(octet: [usize; 8]) -> Result<Self, LinalgError> {
        let [ell, m, a1, a2, a3, b1, b2, b3] = octet;
        if ell == 0 || m == 0 {
            return Err(LinalgError::ExponentOutOfRange);
        }
        let a = BiPoly::from_terms(ell, m, [(a1, 0), (0, a2), (0, a3)]);
        let b = BiPoly::from_terms(ell, m, [(0, b1), (b2, 0), (b3, 0)]);
        Ok(BBCode { ell, m, a, b })
    }

    /// Build a coprime code from univariate constructors via `psi^-1`.
    pub fn from_univariate(
        ell: usize,
        m: usize,
        a: &UniPoly,
        b: &UniPoly,
    ) -> Result<Self, LinalgError> {
        let psi = CoprimePsi::new(ell, m)?;
        Ok(BBCode {
            ell,
            m,
            a: psi.inverse(a),
            b: psi.inverse(b),
        })
    }

    /// Physical qubit count `n = 2 l m`.
    pub fn n(&self) -> usize {
        2 * self.ell * self.m
    }

    /// The univariate images of `a` and `b` when the code is coprime.
    pub fn univariate(&self) -> Option<(UniPoly, UniPoly)> {
        let psi = CoprimePsi::new(self.ell, self.m).ok()?;
        Some((psi.apply(&self.a), psi.apply(&self.b)))
    }
}

/// The `lm x lm` matrix of multiplication by `p` in the monomial basis:
/// the sum of `S_l^i (x) S_m^j` over the support. Ring-to-matrix
/// homomorphism.
pub fn matrix_of(p: &BiPoly) -> F2Matrix {
    let (ell, m) = (p.ell(), p.m());
    let n = ell * m;
    let mut out = F2Matrix::zeros(n, n);
    let support = p.support();
    for i in 0..ell {
        for j in 0..m {
            let r = i * m + j;
            for &(u, v) in &support {
                out.flip(r, (i + u) % ell * m + (j + v) % m);
            }
        }
    }
    out
}

/// The parity-check pair `H_X = [A | B]`, `H_Z = [B^T | A^T]`.
pub fn build_checks(code: &BBCode) -> (F2Matrix, F2Matrix) {
    let a = matrix_of(&code.a);
    let b = matrix_of(&code.b);
    let at = matrix_of(&code.a.transpose());
    let bt = matrix_of(&code.b.transpose());
    let hx = a.hstack(&b).expect("equal row counts");
    let hz = bt.hstack(&at).expect("equal row counts");
    (hx, hz)
}

/// Coset representatives of the logical operator classes:
/// `Hom_X = ker H_Z \ im H_X^T` and `Hom_Z = ker H_X \ im H_Z^T`.
/// Both lists carry exactly `k` independent classes.
pub fn logical_basis(code: &BBCode) -> (Vec<BitVec>, Vec<BitVec>) {
    let (hx, hz) = build_checks(code);
    let extract = |kernel_of: &F2Matrix, image_rows: &F2Matrix| {
        let mut ech = Echelon::from_matrix(image_rows);
        let mut logicals = Vec::new();
        for v in kernel_of.kernel_basis() {
            if let Some(residue) = ech.insert(v.words()) {
                logicals.push(residue);
            }
        }
        logicals
    };
    let x_logicals = extract(&hz, &hx);
    let z_logicals = extract(&hx, &hz);
    (x_logicals, z_logicals)
}

// ---------------------------------------------------------------------------
// alist interchange format.

/// Serialise a matrix in the alist sparse format: `cols rows`, the max
/// column/row weights, per-column and per-row weight lists, then
/// 1-indexed support lists, one line per column then per row.
pub fn export_alist(m: &F2Matrix) -> String {
    let mut cols_support: Vec<Vec<usize>> = vec![Vec::new(); m.cols()];
    let mut rows_support: Vec<Vec<usize>> = vec![Vec::new(); m.rows()];
    for r in 0..m.rows() {
        for c in m.row_vec(r).ones() {
            cols_support[c].push(r + 1);
            rows_support[r].push(c + 1);
        }
    }
    let max_col = cols_support.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows_support.iter().map(Vec::len).max().unwrap_or(0);

    let join = |v: &[usize]| -> String {
        let mut s = String::new();
        for (i, x) in v.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&format!("{x}"));
        }
        s
    };

    let mut out = String::new();
    out.push_str(&format!("{} {}\n", m.cols(), m.rows()));
    out.push_str(&format!("{max_col} {max_row}\n"));
    out.push_str(&join(&cols_support.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    out.push_str(&join(&rows_support.iter().map(Vec::len).collect::<Vec<_>>()));
    out.push('\n');
    for col in &cols_support {
        out.push_str(&join(col));
        out.push('\n');
    }
    for row in &rows_support {
        out.push_str(&join(row));
        out.push('\n');
    }
    out
}

/// Parse the alist format emitted by [`export_alist`].
pub fn parse_alist(text: &str) -> Result<F2Matrix, LinalgError> {
    let bad = |msg: &str| LinalgError::AlistParse(String::from(msg));
    let mut lines = text.lines();
    let mut next_numbers = |expect: Option<usize>| -> Result<Vec<usize>, LinalgError> {
        let line = lines.next().ok_or_else(|| bad("unexpected end of file"))?;
        let nums: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let nums = nums.map_err(|_| bad("non-numeric token"))?;
        if let Some(n) = expect {
            if nums.len() != n {
                return Err(bad("wrong count on line"));
            }
        }
        Ok(nums)
    };

    let dims = next_numbers(Some(2))?;
    let (cols, rows) = (dims[0], dims[1]);
    let _max = next_numbers(Some(2))?;
    let col_weights = next_numbers(Some(cols))?;
    let row_weights = next_numbers(Some(rows))?;

    let mut m = F2Matrix::zeros(rows, cols);
    for (c, &w) in col_weights.iter().enumerate() {
        let entries = next_numbers(Some(w))?;
        for r in entries {
            if r == 0 || r > rows {
                return Err(bad("row index out of range"));
            }
            m.set(r - 1, c, true);
        }
    }
    for (r, &w) in row_weights.iter().enumerate() {
        let entries = next_numbers(Some(w))?;
        for c in entries {
            if c == 0 || c > cols || !m.get(r, c - 1) {
                return Err(bad("row list disagrees with column lists"));
            }
        }
        if m.row_weight(r) != w {
            return Err(bad("row weight mismatch"));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_bipoly;
    use rand_core::{RngCore, SeedableRng};

    fn random_bipoly(ell: usize, m: usize, rng: &mut impl RngCore) -> BiPoly {
        BiPoly::from_terms(
            ell,
            m,
            (0..ell * m)
                .filter_map(|idx| (rng.next_u64() & 1 == 1).then_some((idx / m, idx % m))),
        )
    }

    fn random_octet(rng: &mut impl RngCore, lo: usize, hi: usize) -> BBCode {
        let span = (hi - lo + 1) as u64;
        let ell = lo + (rng.next_u64() % span) as usize;
        let m = lo + (rng.next_u64() % span) as usize;
        let r = |n: usize, rng: &mut dyn RngCore| (rng.next_u64() % n as u64) as usize;
        BBCode::from_octet([
            ell,
            m,
            r(ell, rng),
            r(m, rng),
            r(m, rng),
            r(m, rng),
            r(ell, rng),
            r(ell, rng),
        ])
        .unwrap()
    }

    #[test]
    fn matrix_of_identity_and_shifts() {
        let one = BiPoly::one(3, 4);
        assert_eq!(matrix_of(&one), F2Matrix::identity(12));

        let x = BiPoly::monomial(3, 4, 1, 0);
        let xinv = BiPoly::monomial(3, 4, 2, 0);
        let prod = matrix_of(&x).mul(&matrix_of(&xinv)).unwrap();
        assert_eq!(prod, F2Matrix::identity(12));
    }

    #[test]
    fn matrix_of_is_a_ring_homomorphism() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..15 {
            let p = random_bipoly(3, 5, &mut rng);
            let q = random_bipoly(3, 5, &mut rng);
            let lhs = matrix_of(&p.mul(&q).unwrap());
            let rhs = matrix_of(&p).mul(&matrix_of(&q)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn matrix_of_respects_transpose() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for _ in 0..15 {
            let p = random_bipoly(4, 5, &mut rng);
            assert_eq!(matrix_of(&p.transpose()), matrix_of(&p).transpose());
        }
    }

    #[test]
    fn checks_are_orthogonal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let code = random_octet(&mut rng, 2, 8);
            let (hx, hz) = build_checks(&code);
            assert!(hx.mul(&hz.transpose()).unwrap().is_zero(), "{code:?}");
        }
        // degenerate 1x1 ring
        let tiny = BBCode::from_octet([1, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        let (hx, hz) = build_checks(&tiny);
        assert_eq!((hx.rows(), hx.cols()), (1, 2));
        assert!(hx.mul(&hz.transpose()).unwrap().is_zero());
    }

    #[test]
    fn weight_six_stabilisers() {
        let code = BBCode::from_octet([6, 9, 3, 1, 2, 3, 1, 2]).unwrap();
        let (hx, hz) = build_checks(&code);
        for r in 0..hx.rows() {
            assert_eq!(hx.row_weight(r), 6);
            assert_eq!(hz.row_weight(r), 6);
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(F2Matrix::identity(17).rank(), 17);
        assert_eq!(F2Matrix::zeros(5, 9).rank(), 0);

        // {6,9,3,1,2,3,1,2}: rank H_X = lm - k/2 = 54 - 4 = 50
        let code = BBCode::from_octet([6, 9, 3, 1, 2, 3, 1, 2]).unwrap();
        let (hx, hz) = build_checks(&code);
        assert_eq!(hx.rank(), 50);
        assert_eq!(hz.rank(), 50);
    }

    #[test]
    fn kernels() {
        assert!(F2Matrix::identity(6).kernel_basis().is_empty());

        // {6,6,3,1,2,3,1,2}: k = 12, so dim ker H_X = 2lm - rank = lm + k/2 = 42
        let code = BBCode::from_octet([6, 6, 3, 1, 2, 3, 1, 2]).unwrap();
        let (hx, _) = build_checks(&code);
        let kernel = hx.kernel_basis();
        assert_eq!(kernel.len(), 42);
        for v in &kernel {
            assert!(hx.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn row_space_membership() {
        let code = BBCode::from_octet([3, 3, 0, 1, 2, 1, 0, 1]).unwrap();
        let (hx, _) = build_checks(&code);
        for r in 0..hx.rows() {
            assert!(hx.in_row_space(&hx.row_vec(r)).unwrap());
        }
        assert!(hx.in_row_space(&BitVec::zeros(hx.cols())).unwrap());
        assert!(matches!(
            hx.in_row_space(&BitVec::zeros(3)),
            Err(LinalgError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn logicals_sizes_and_classes() {
        // k = 8 paper example
        let code = BBCode::from_octet([6, 9, 3, 1, 2, 3, 1, 2]).unwrap();
        let (hx, hz) = build_checks(&code);
        let (xl, zl) = logical_basis(&code);
        assert_eq!(xl.len(), 8);
        assert_eq!(zl.len(), 8);
        let hx_space = Echelon::from_matrix(&hx);
        for v in &xl {
            assert!(hz.mul_vec(v).unwrap().is_zero());
            assert!(!hx_space.contains(v));
        }

        // trivial code has no logicals
        let trivial = BBCode::from_octet([5, 5, 1, 0, 1, 0, 1, 2]).unwrap();
        let (xl, zl) = logical_basis(&trivial);
        assert!(xl.is_empty());
        assert!(zl.is_empty());
    }

    #[test]
    fn alist_smallest_case_is_bit_exact() {
        let mut m = F2Matrix::zeros(1, 2);
        m.set(0, 0, true);
        m.set(0, 1, true);
        assert_eq!(export_alist(&m), "2 1\n1 2\n1 1\n2\n1\n1\n1 2\n");
    }

    #[test]
    fn alist_round_trips() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let rows = 1 + (rng.next_u64() % 12) as usize;
            let cols = 1 + (rng.next_u64() % 12) as usize;
            let mut m = F2Matrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.next_u64() & 3 == 0 {
                        m.set(r, c, true);
                    }
                }
            }
            let parsed = parse_alist(&export_alist(&m)).unwrap();
            assert_eq!(parsed, m);
        }
        assert!(parse_alist("garbage").is_err());
    }

    #[test]
    fn univariate_codes_round_trip() {
        let a: UniPoly = "1+z+z^2".parse().unwrap();
        let b: UniPoly = "1+z^2+z^16".parse().unwrap();
        let code = BBCode::from_univariate(3, 25, &a, &b).unwrap();
        let (ua, ub) = code.univariate().unwrap();
        assert_eq!(ua, a);
        assert_eq!(ub, b);
        assert!(BBCode::from_univariate(3, 9, &a, &b).is_err());

        // structured octets agree with parsed text
        let code = BBCode::from_octet([7, 7, 4, 1, 3, 4, 1, 3]).unwrap();
        assert_eq!(code.a, parse_bipoly("x^4+y+y^3", 7, 7).unwrap());
        assert_eq!(code.b, parse_bipoly("y^4+x+x^3", 7, 7).unwrap());
    }
}
