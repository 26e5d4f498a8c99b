//! Factorisation of `z^n - 1` over GF(2), cyclotomic cosets and
//! polynomials, trinomial-divisibility predicates, and the
//! Mersenne/outlier prime classification.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::{RngCore, SeedableRng};

use crate::poly::{is_prime, prime_factorization, PolyError, UniPoly};

/// Default seed for the randomised equal-degree splitting. Any fixed
/// value keeps the factor ordering reproducible across runs.
pub const DEFAULT_FACTOR_SEED: u64 = 0;

/// The known "outlier" primes below the verified bound: primes that are
/// not Mersenne yet whose cyclotomic factors divide trinomials.
pub const OUTLIER_PRIMES: [u64; 5] = [73, 121_369, 178_481, 262_657, 599_479];

/// The outlier list is only known to be complete below this bound.
pub const OUTLIER_VERIFIED_BOUND: u64 = 3_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorError {
    EvenInput { n: u64 },
    /// `trinomial_divisor` requires an irreducible input.
    Reducible,
    /// The outlier list is complete only below [`OUTLIER_VERIFIED_BOUND`].
    BeyondVerifiedRange { p: u64 },
    Poly(PolyError),
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::EvenInput { n } => write!(f, "{n} must be odd"),
            FactorError::Reducible => write!(f, "input polynomial is reducible"),
            FactorError::BeyondVerifiedRange { p } => {
                write!(f, "{p} is beyond the verified outlier range")
            }
            FactorError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FactorError {}

impl From<PolyError> for FactorError {
    fn from(e: PolyError) -> Self {
        FactorError::Poly(e)
    }
}

/// Complete factorisation of `z^n - 1` into distinct irreducibles with
/// multiplicities. With `n = 2^v * n_odd` every multiplicity is `2^v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    /// Multiply the factorisation back together.
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::one();
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                acc = acc.mul(f);
            }
        }
        acc
    }

    pub fn distinct_count(&self) -> usize {
        self.factors.len()
    }
}

/// The orbit of `s` under multiplication by 2 modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub representative: usize,
    /// Members sorted ascending; the representative is the minimum.
    pub members: Vec<usize>,
}

/// Partition of `Z_n` into cyclotomic cosets, smallest representative
/// first.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<CyclotomicCoset>, FactorError> {
    if n % 2 == 0 {
        return Err(FactorError::EvenInput { n: n as u64 });
    }
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut members = Vec::new();
        let mut cur = s;
        while !seen[cur] {
            seen[cur] = true;
            members.push(cur);
            cur = cur * 2 % n;
        }
        members.sort_unstable();
        cosets.push(CyclotomicCoset {
            representative: s,
            members,
        });
    }
    Ok(cosets)
}

/// Factor `z^n - 1` with the default splitting seed.
pub fn factor_zn_minus_1(n: usize) -> Factorization {
    factor_zn_minus_1_seeded(n, DEFAULT_FACTOR_SEED)
}

/// Factor `z^n - 1` over GF(2).
///
/// Writes `n = 2^v * n_odd`, factors the square-free `z^{n_odd} - 1` by
/// distinct-degree factorisation followed by randomised equal-degree
/// splitting, and assigns every irreducible the multiplicity `2^v`.
pub fn factor_zn_minus_1_seeded(n: usize, seed: u64) -> Factorization {
    assert!(n >= 1);
    let v = n.trailing_zeros();
    let n_odd = n >> v;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();

    // Distinct-degree pass on the square-free z^{n_odd} - 1.
    let z = UniPoly::monomial(1);
    let mut g = UniPoly::zn_minus_1(n_odd);
    let mut h = z.rem(&g).expect("nonzero modulus");
    let mut d = 0usize;
    while let Some(dg) = g.degree() {
        if dg == 0 {
            break;
        }
        if 2 * (d + 1) > dg {
            factors.push(g.clone());
            break;
        }
        d += 1;
        h = h.square().rem(&g).expect("nonzero modulus");
        let diff = &h + &z;
        let gd = if diff.is_zero() {
            g.clone()
        } else {
            diff.gcd(&g).expect("inputs not both zero")
        };
        if !gd.is_one() {
            equal_degree_split(&gd, d, &mut factors, &mut rng);
            g = g.divrem(&gd).expect("nonzero divisor").0;
            if g.degree() == Some(0) {
                break;
            }
            h = h.rem(&g).expect("nonzero modulus");
        }
    }

    factors.sort_unstable_by_key(|f| (f.degree(), f.support()));
    Factorization {
        n,
        factors: factors.into_iter().map(|f| (f, 1u32 << v)).collect(),
    }
}

/// Split a product of distinct irreducibles of equal degree `d` using the
/// GF(2) trace map `u + u^2 + ... + u^{2^{d-1}}`.
fn equal_degree_split(c: &UniPoly, d: usize, out: &mut Vec<UniPoly>, rng: &mut impl RngCore) {
    let dc = c.degree().expect("nonzero product");
    if dc == d {
        out.push(c.clone());
        return;
    }
    loop {
        let u = random_poly_below(dc, rng);
        if u.is_zero() {
            continue;
        }
        let mut t = u.clone();
        let mut trace = u.clone();
        for _ in 1..d {
            t = t.square().rem(c).expect("nonzero modulus");
            trace = &trace + &t;
        }
        if trace.is_zero() {
            continue;
        }
        let w = trace.gcd(c).expect("inputs not both zero");
        let dw = w.degree().expect("gcd of nonzero inputs");
        if dw == 0 || dw == dc {
            continue;
        }
        equal_degree_split(&w, d, out, rng);
        let rest = c.divrem(&w).expect("nonzero divisor").0;
        equal_degree_split(&rest, d, out, rng);
        return;
    }
}

fn random_poly_below(degree_bound: usize, rng: &mut impl RngCore) -> UniPoly {
    let words = degree_bound.div_ceil(64);
    let mut exps = Vec::new();
    for w in 0..words {
        let mut r = rng.next_u64();
        if (w + 1) * 64 > degree_bound {
            r &= (1u64 << (degree_bound - w * 64)) - 1;
        }
        while r != 0 {
            exps.push(w * 64 + r.trailing_zeros() as usize);
            r &= r - 1;
        }
    }
    UniPoly::from_exponents(exps)
}

/// The cyclotomic polynomial `Phi_n` over GF(2), for odd `n`; computed by
/// dividing `z^n - 1` by `Phi_d` for every proper divisor `d | n`.
pub fn cyclotomic_polynomial(n: usize) -> Result<UniPoly, FactorError> {
    if n % 2 == 0 {
        return Err(FactorError::EvenInput { n: n as u64 });
    }
    let mut num = UniPoly::zn_minus_1(n);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d)?;
            let (q, r) = num.divrem(&phi_d).expect("nonzero divisor");
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    Ok(num)
}

/// Outcome of the trinomial-divisor search for an irreducible polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrinomialSearch {
    /// `f | 1 + z^s + z^t` with `0 < s < t < order(f)`.
    Found { s: usize, t: usize },
    /// Exhaustive: no trinomial below the order is divisible by `f`.
    NotFound,
    /// `order(f)` exceeds the memory cap, so the search was not run.
    NotComputed,
}

/// Memory cap for the trinomial-divisor power table.
pub const TRINOMIAL_ORDER_CAP: u64 = 1 << 20;

/// Search for exponents `0 < s < t < order(f)` with `f | 1 + z^s + z^t`.
///
/// Tabulates the powers `alpha^s` of the residue class of `z` in
/// `GF(2)[z]/<f>` and tests `1 + alpha^s` against the table. Orders above
/// [`TRINOMIAL_ORDER_CAP`] report [`TrinomialSearch::NotComputed`]
/// instead of allocating the table.
pub fn trinomial_divisor(f: &UniPoly) -> Result<TrinomialSearch, FactorError> {
    if !f.coeff(0) || !f.is_irreducible() {
        return Err(FactorError::Reducible);
    }
    let e = f.order()?;
    if e > TRINOMIAL_ORDER_CAP {
        return Ok(TrinomialSearch::NotComputed);
    }
    let e = e as usize;
    let deg = f.degree().expect("irreducible is nonzero");
    let z = UniPoly::monomial(1);

    if deg <= 127 {
        // Residues fit in a u128 key; use a sorted table.
        let key = |p: &UniPoly| -> u128 {
            let w = p.words();
            let lo = w.first().copied().unwrap_or(0) as u128;
            let hi = w.get(1).copied().unwrap_or(0) as u128;
            lo | hi << 64
        };
        let mut table: Vec<(u128, u32)> = Vec::with_capacity(e);
        let mut cur = UniPoly::one();
        for s in 0..e {
            table.push((key(&cur), s as u32));
            cur = cur.mul(&z).rem(f).expect("nonzero modulus");
        }
        table.sort_unstable();
        let mut cur = UniPoly::one();
        for s in 1..e {
            cur = cur.mul(&z).rem(f).expect("nonzero modulus");
            let probe = key(&cur) ^ 1; // 1 + alpha^s flips the constant bit
            if let Ok(idx) = table.binary_search_by_key(&probe, |&(k, _)| k) {
                let t = table[idx].1 as usize;
                debug_assert!(t != 0 && t != s);
                if t > s {
                    return Ok(TrinomialSearch::Found { s, t });
                }
            }
        }
    } else {
        let mut table: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let mut cur = UniPoly::one();
        for s in 0..e {
            table.insert(cur.words().to_vec(), s);
            cur = cur.mul(&z).rem(f).expect("nonzero modulus");
        }
        let mut cur = UniPoly::one();
        for s in 1..e {
            cur = cur.mul(&z).rem(f).expect("nonzero modulus");
            let probe = (&cur + &UniPoly::one()).words().to_vec();
            if let Some(&t) = table.get(&probe) {
                if t > s {
                    return Ok(TrinomialSearch::Found { s, t });
                }
            }
        }
    }
    Ok(TrinomialSearch::NotFound)
}

/// True iff `p` is prime and `p + 1` is a power of two.
pub fn is_mersenne_prime(p: u64) -> bool {
    p >= 3 && (p + 1).is_power_of_two() && is_prime(p)
}

/// Membership in the known outlier list.
///
/// The list is complete only below [`OUTLIER_VERIFIED_BOUND`]; larger
/// inputs report [`FactorError::BeyondVerifiedRange`] rather than a
/// silent `false`.
pub fn is_outlier(p: u64) -> Result<bool, FactorError> {
    if OUTLIER_PRIMES.contains(&p) {
        return Ok(true);
    }
    if p > OUTLIER_VERIFIED_BOUND {
        return Err(FactorError::BeyondVerifiedRange { p });
    }
    Ok(false)
}

/// True iff some prime divisor of `n` is a Mersenne prime or an outlier.
///
/// Prime divisors beyond the verified outlier range count as not-good;
/// at the code lengths this crate targets they do not occur.
pub fn has_good_prime_divisor(n: u64) -> bool {
    assert!(n >= 1);
    prime_factorization(n)
        .iter()
        .any(|&(p, _)| is_mersenne_prime(p) || is_outlier(p).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::eta_count;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    #[test]
    fn cosets_partition() {
        let c9 = cyclotomic_cosets(9).unwrap();
        assert_eq!(c9.len(), 3);
        assert_eq!(c9[0].members, vec![0]);
        assert_eq!(c9[1].members, vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(c9[2].members, vec![3, 6]);

        assert_eq!(cyclotomic_cosets(1).unwrap()[0].members, vec![0]);

        let c7 = cyclotomic_cosets(7).unwrap();
        assert_eq!(c7[1].members, vec![1, 2, 4]);
        assert_eq!(c7[2].members, vec![3, 5, 6]);

        assert!(cyclotomic_cosets(8).is_err());
    }

    #[test]
    fn factor_x9_minus_1() {
        let f = factor_zn_minus_1(9);
        let polys: Vec<&UniPoly> = f.factors.iter().map(|(f, _)| f).collect();
        assert_eq!(polys, vec![&p("1+z"), &p("1+z+z^2"), &p("1+z^3+z^6")]);
        assert!(f.factors.iter().all(|&(_, m)| m == 1));
    }

    #[test]
    fn factor_x15_minus_1() {
        let f = factor_zn_minus_1(15);
        let polys: Vec<UniPoly> = f.factors.iter().map(|(f, _)| f.clone()).collect();
        assert!(polys.contains(&p("1+z+z^4")));
        assert!(polys.contains(&p("1+z^3+z^4")));
        assert_eq!(polys.len(), 5);
    }

    #[test]
    fn factor_x6_minus_1_has_multiplicity_2() {
        let f = factor_zn_minus_1(6);
        assert_eq!(f.factors, vec![(p("1+z"), 2), (p("1+z+z^2"), 2)]);
    }

    #[test]
    fn factorization_reconstructs() {
        for n in [1, 2, 6, 9, 12, 15, 20, 21, 35, 48, 63] {
            let f = factor_zn_minus_1(n);
            assert_eq!(f.product(), UniPoly::zn_minus_1(n), "n={n}");
            for (g, _) in &f.factors {
                assert!(g.is_irreducible(), "n={n} factor {g} reducible");
            }
        }
    }

    #[test]
    fn factorization_is_seed_independent_as_a_set() {
        let a = factor_zn_minus_1_seeded(105, 1);
        let b = factor_zn_minus_1_seeded(105, 99);
        assert_eq!(a, b); // sorted canonically
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), p("1+z"));
        assert_eq!(cyclotomic_polynomial(3).unwrap(), p("1+z+z^2"));
        let phi21 = p("1+z+z^2+z^4+z^6").mul(&p("1+z^2+z^4+z^5+z^6"));
        assert_eq!(cyclotomic_polynomial(21).unwrap(), phi21);
        assert!(cyclotomic_polynomial(4).is_err());
    }

    #[test]
    fn trinomial_divisor_examples() {
        assert_eq!(
            trinomial_divisor(&p("1+z+z^2")).unwrap(),
            TrinomialSearch::Found { s: 1, t: 2 }
        );

        // Phi_5 has order 5 and divides no trinomial.
        let phi5 = cyclotomic_polynomial(5).unwrap();
        assert_eq!(trinomial_divisor(&phi5).unwrap(), TrinomialSearch::NotFound);

        // Degree-6 factor of Phi_21 divides a trinomial with s, t < 21.
        let f = p("1+z^2+z^4+z^5+z^6");
        match trinomial_divisor(&f).unwrap() {
            TrinomialSearch::Found { s, t } => {
                assert!(0 < s && s < t && t < 21);
                let tri = UniPoly::from_exponents([0, s, t]);
                assert!(tri.rem(&f).unwrap().is_zero());
            }
            other => panic!("expected divisor, got {other:?}"),
        }

        assert_eq!(trinomial_divisor(&p("1+z^3")), Err(FactorError::Reducible));
    }

    #[test]
    fn mersenne_and_outliers() {
        assert!(is_mersenne_prime(3));
        assert!(is_mersenne_prime(7));
        assert!(is_mersenne_prime(31));
        assert!(is_mersenne_prime(127));
        assert!(!is_mersenne_prime(11));
        assert!(!is_mersenne_prime(2047)); // 23 * 89

        assert_eq!(is_outlier(73), Ok(true));
        assert_eq!(is_outlier(599_479), Ok(true));
        assert_eq!(is_outlier(127), Ok(false));
        assert!(matches!(
            is_outlier(3_000_001),
            Err(FactorError::BeyondVerifiedRange { .. })
        ));
    }

    #[test]
    fn good_prime_divisors() {
        assert!(has_good_prime_divisor(21));
        assert!(!has_good_prime_divisor(25));
        assert!(has_good_prime_divisor(438)); // 2 * 3 * 73
        assert!(!has_good_prime_divisor(50)); // 2 * 5^2
    }

    #[test]
    fn eta_matches_factor_count_and_coset_sizes() {
        for n in (1..=51usize).step_by(2) {
            let f = factor_zn_minus_1(n);
            assert_eq!(
                f.distinct_count() as u64,
                eta_count(n as u64).unwrap(),
                "n={n}"
            );
            let mut degrees: Vec<usize> =
                f.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
            let mut sizes: Vec<usize> = cyclotomic_cosets(n)
                .unwrap()
                .iter()
                .map(|c| c.members.len())
                .collect();
            degrees.sort_unstable();
            sizes.sort_unstable();
            assert_eq!(degrees, sizes, "n={n}");
        }
    }

    #[test]
    fn mersenne_prime_factors_all_divide_trinomials() {
        // Every irreducible factor of Phi_p for Mersenne p admits a
        // trinomial divisor.
        for pprime in [3usize, 7, 31] {
            let phi = cyclotomic_polynomial(pprime).unwrap();
            let full = factor_zn_minus_1(pprime);
            for (f, _) in &full.factors {
                if phi.rem(f).unwrap().is_zero() && f.degree() != Some(1) {
                    assert!(
                        matches!(trinomial_divisor(f).unwrap(), TrinomialSearch::Found { .. }),
                        "factor {f} of Phi_{pprime}"
                    );
                }
            }
        }
    }

    #[test]
    fn trinomial_uniformity_for_primes() {
        // For prime p, either every factor of Phi_p divides a trinomial
        // or none does.
        for pprime in [5usize, 7, 11, 13, 17, 23, 31] {
            let phi = cyclotomic_polynomial(pprime).unwrap();
            let full = factor_zn_minus_1(pprime);
            let verdicts: Vec<bool> = full
                .factors
                .iter()
                .filter(|(f, _)| phi.rem(f).unwrap().is_zero())
                .map(|(f, _)| {
                    matches!(trinomial_divisor(f).unwrap(), TrinomialSearch::Found { .. })
                })
                .collect();
            assert!(
                verdicts.iter().all(|&v| v == verdicts[0]),
                "p={pprime}: {verdicts:?}"
            );
        }
    }
}
