//! The BB code dimension `k` by every applicable strategy: the coprime
//! gcd theorem, the one-sided CRT over extension fields, the Groebner
//! route, and the CSS matrix-rank formula, plus a harness that runs all
//! of them and insists they agree.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::factor::{factor_zn_minus_1, FactorError};
use crate::linalg::{build_checks, BBCode};
use crate::poly::{PolyError, UniPoly};
use crate::ring::{buchberger, standard_monomials, CoprimePsi, FreeBiPoly, RingError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimensionError {
    /// The coprime strategy needs odd coprime sides.
    CoprimeNotApplicable { ell: usize, m: usize },
    /// The one-sided CRT strategy needs at least one odd side.
    BothSidesEven { ell: usize, m: usize },
    /// Strategies disagreed; this is a bug trap, never expected.
    Inconsistent { values: Vec<(Method, usize)> },
    Poly(PolyError),
    Ring(RingError),
    Factor(FactorError),
}

impl fmt::Display for DimensionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionError::CoprimeNotApplicable { ell, m } => write!(
                f,
                "coprime strategy needs odd coprime sides, got ({ell}, {m}); \
                 use the one-sided or groebner strategy"
            ),
            DimensionError::BothSidesEven { ell, m } => write!(
                f,
                "one-sided strategy needs an odd side, got ({ell}, {m}); \
                 use the groebner strategy"
            ),
            DimensionError::Inconsistent { values } => {
                write!(f, "dimension strategies disagree:")?;
                for (method, k) in values {
                    write!(f, " {method:?}={k}")?;
                }
                Ok(())
            }
            DimensionError::Poly(e) => write!(f, "{e}"),
            DimensionError::Ring(e) => write!(f, "{e}"),
            DimensionError::Factor(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DimensionError {}

impl From<PolyError> for DimensionError {
    fn from(e: PolyError) -> Self {
        DimensionError::Poly(e)
    }
}

impl From<RingError> for DimensionError {
    fn from(e: RingError) -> Self {
        DimensionError::Ring(e)
    }
}

impl From<FactorError> for DimensionError {
    fn from(e: FactorError) -> Self {
        DimensionError::Factor(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    CoprimeGcd,
    OneSidedCrt,
    Groebner,
    MatrixRank,
}

/// Which side's cyclotomic modulus was CRT-factored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactoredSide {
    X,
    Y,
}

/// One CRT component: the irreducible `f_j` and the gcd generator
/// `g_j = gcd(psi_j(a), psi_j(b), u^M - 1)` over `F2[t]/<f_j(t)>[u]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSidedFactor {
    pub modulus: UniPoly,
    pub generator: ExtPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    CoprimeGenerator(UniPoly),
    OneSided {
        factored_side: FactoredSide,
        factors: Vec<OneSidedFactor>,
    },
    StandardMonomials(Vec<(usize, usize)>),
    Ranks {
        rank_hx: usize,
        rank_hz: usize,
    },
}

/// The dimension result of one strategy, with the witness that produced
/// it. `k` is even in every theorem used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub k: usize,
    pub method: Method,
    pub witness: Witness,
}

// ---------------------------------------------------------------------------
// Extension-field polynomial arithmetic.

/// The field `F2[t]/<f(t)>` for an irreducible `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    pub modulus: UniPoly,
}

impl ExtField {
    pub fn new(modulus: UniPoly) -> Self {
        debug_assert!(!modulus.is_zero());
        ExtField { modulus }
    }

    fn reduce(&self, v: &UniPoly) -> UniPoly {
        v.rem(&self.modulus).expect("nonzero modulus")
    }

    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.mul_mod(b, &self.modulus).expect("nonzero modulus")
    }

    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &UniPoly) -> UniPoly {
        let (g, s, _) = a.egcd(&self.modulus).expect("nonzero element");
        debug_assert!(g.is_one(), "element not invertible: modulus reducible?");
        self.reduce(&s)
    }
}

/// A polynomial over an extension field, in the variable that was not
/// factored; `coeffs[i]` is the coefficient of `u^i`, reduced mod the
/// field modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtPoly {
    pub coeffs: Vec<UniPoly>,
}

impl ExtPoly {
    pub fn zero() -> Self {
        ExtPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExtPoly {
            coeffs: vec![UniPoly::one()],
        }
    }

    /// `u^period - 1`.
    pub fn un_minus_1(period: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); period + 1];
        coeffs[0] = UniPoly::one();
        coeffs[period] = UniPoly::one();
        ExtPoly { coeffs }
    }

    pub fn from_coeffs(field: &ExtField, coeffs: Vec<UniPoly>) -> Self {
        let mut p = ExtPoly {
            coeffs: coeffs.iter().map(|c| field.reduce(c)).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(UniPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn leading(&self) -> &UniPoly {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// Scale by the inverse of the leading coefficient.
    fn monic(&self, field: &ExtField) -> ExtPoly {
        if self.is_zero() || self.leading().is_one() {
            return self.clone();
        }
        let inv = field.inv(self.leading());
        let mut out = ExtPoly {
            coeffs: self.coeffs.iter().map(|c| field.mul(c, &inv)).collect(),
        };
        out.trim();
        out
    }

    /// Remainder of `self` by a nonzero `divisor`, with monic
    /// normalisation at every step so degrees strictly decrease.
    fn rem(&self, divisor: &ExtPoly, field: &ExtField) -> ExtPoly {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead_inv = field.inv(divisor.leading());
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = field.mul(rem.leading(), &lead_inv);
            let shift = dr - dd;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let term = field.mul(dc, &factor);
                let slot = &mut rem.coeffs[i + shift];
                *slot = &*slot + &term;
            }
            rem.trim();
        }
        rem
    }

    /// Monic gcd by the Euclidean algorithm over the field.
    pub fn gcd(&self, other: &ExtPoly, field: &ExtField) -> ExtPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, field);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Render with `outer` as the polynomial variable and `inner` as the
    /// field variable, e.g. `(1+x)y^2+y+1`.
    pub fn display_with(&self, outer: char, inner: char) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                out.push('+');
            }
            first = false;
            let coeff = if c.is_one() {
                None
            } else {
                let rendered = format!("{c}");
                Some(rendered.replace('z', &inner.to_string()))
            };
            match (coeff, i) {
                (None, 0) => out.push('1'),
                (None, 1) => out.push(outer),
                (None, e) => write!(out, "{outer}^{e}").unwrap(),
                (Some(cs), 0) => write!(out, "({cs})").unwrap(),
                (Some(cs), 1) => write!(out, "({cs}){outer}").unwrap(),
                (Some(cs), e) => write!(out, "({cs}){outer}^{e}").unwrap(),
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Strategies.

/// `k = 2 deg gcd(a(z), b(z), z^{lm} - 1)` for odd coprime sides.
pub fn k_coprime(code: &BBCode) -> Result<DimensionReport, DimensionError> {
    let psi = CoprimePsi::new(code.ell, code.m).map_err(|_| {
        DimensionError::CoprimeNotApplicable {
            ell: code.ell,
            m: code.m,
        }
    })?;
    let az = psi.apply(&code.a);
    let bz = psi.apply(&code.b);
    let modulus = UniPoly::zn_minus_1(code.ell * code.m);
    let g = if az.is_zero() && bz.is_zero() {
        modulus
    } else {
        az.gcd(&bz)?.gcd(&modulus)?
    };
    Ok(DimensionReport {
        k: 2 * g.degree().expect("divisor of z^n - 1 is nonzero"),
        method: Method::CoprimeGcd,
        witness: Witness::CoprimeGenerator(g),
    })
}

/// `k = 2 sum_j deg g_j deg f_j` by CRT-factoring one odd side.
///
/// When both sides are odd the larger one is factored (fewer
/// extension-field gcd steps); the choice shows only in the witnesses,
/// never in `k`.
pub fn k_one_sided(code: &BBCode) -> Result<DimensionReport, DimensionError> {
    let (ell, m) = (code.ell, code.m);
    let factored_side = match (ell % 2 == 1, m % 2 == 1) {
        (true, true) => {
            if ell >= m {
                FactoredSide::X
            } else {
                FactoredSide::Y
            }
        }
        (true, false) => FactoredSide::X,
        (false, true) => FactoredSide::Y,
        (false, false) => return Err(DimensionError::BothSidesEven { ell, m }),
    };
    let (factored_period, other_period) = match factored_side {
        FactoredSide::X => (ell, m),
        FactoredSide::Y => (m, ell),
    };

    let project = |p: &crate::ring::BiPoly, field: &ExtField| -> ExtPoly {
        let coeffs = match factored_side {
            FactoredSide::X => p.x_coefficient_polys(),
            FactoredSide::Y => p.y_coefficient_polys(),
        };
        ExtPoly::from_coeffs(field, coeffs)
    };

    let factorization = factor_zn_minus_1(factored_period);
    let modulus_poly = ExtPoly::un_minus_1(other_period);
    let mut k = 0usize;
    let mut factors = Vec::new();
    for (f, mult) in &factorization.factors {
        debug_assert_eq!(*mult, 1, "odd-side modulus is square-free");
        let field = ExtField::new(f.clone());
        let pa = project(&code.a, &field);
        let pb = project(&code.b, &field);
        let g = match (pa.is_zero(), pb.is_zero()) {
            (true, true) => modulus_poly.monic(&field),
            (true, false) => pb.gcd(&modulus_poly, &field),
            (false, true) => pa.gcd(&modulus_poly, &field),
            (false, false) => pa.gcd(&pb, &field).gcd(&modulus_poly, &field),
        };
        k += 2 * g.degree().expect("gcd with u^M - 1 is nonzero")
            * f.degree().expect("irreducible factor");
        factors.push(OneSidedFactor {
            modulus: f.clone(),
            generator: g,
        });
    }
    Ok(DimensionReport {
        k,
        method: Method::OneSidedCrt,
        witness: Witness::OneSided {
            factored_side,
            factors,
        },
    })
}

/// `k = 2 dim(m)` from the Groebner basis of `{a, b, x^l-1, y^m-1}`.
pub fn k_groebner(code: &BBCode) -> DimensionReport {
    let mut gens = Vec::with_capacity(4);
    for p in [&code.a, &code.b] {
        if !p.is_zero() {
            gens.push(FreeBiPoly::from_bipoly(p));
        }
    }
    gens.push(FreeBiPoly::x_order_relation(code.ell));
    gens.push(FreeBiPoly::y_order_relation(code.m));
    let basis = buchberger(&gens);
    let monomials = standard_monomials(&basis, code.ell, code.m)
        .expect("order relations keep the ideal zero-dimensional");
    DimensionReport {
        k: 2 * monomials.len(),
        method: Method::Groebner,
        witness: Witness::StandardMonomials(monomials),
    }
}

/// `k = n - rank H_X - rank H_Z`.
pub fn k_rank(code: &BBCode) -> DimensionReport {
    let (hx, hz) = build_checks(code);
    let (rank_hx, rank_hz) = (hx.rank(), hz.rank());
    DimensionReport {
        k: code.n() - rank_hx - rank_hz,
        method: Method::MatrixRank,
        witness: Witness::Ranks { rank_hx, rank_hz },
    }
}

/// Every applicable strategy, cross-checked.
#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub k: usize,
    pub reports: Vec<DimensionReport>,
}

impl CrossCheck {
    /// The most structure-aware report (coprime, then one-sided, then
    /// Groebner); useful for witness extraction.
    pub fn primary(&self) -> &DimensionReport {
        &self.reports[0]
    }

    pub fn report_for(&self, method: Method) -> Option<&DimensionReport> {
        self.reports.iter().find(|r| r.method == method)
    }
}

/// Run every applicable strategy plus the matrix-rank method; the common
/// `k` is returned, and any disagreement is a hard error.
pub fn k_cross_check(code: &BBCode) -> Result<CrossCheck, DimensionError> {
    let mut reports = Vec::new();
    if let Ok(r) = k_coprime(code) {
        reports.push(r);
    }
    match k_one_sided(code) {
        Ok(r) => reports.push(r),
        Err(DimensionError::BothSidesEven { .. }) => {}
        Err(e) => return Err(e),
    }
    reports.push(k_groebner(code));
    reports.push(k_rank(code));

    let k = reports[0].k;
    if reports.iter().any(|r| r.k != k) {
        return Err(DimensionError::Inconsistent {
            values: reports.iter().map(|r| (r.method, r.k)).collect(),
        });
    }
    Ok(CrossCheck { k, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::{RngCore, SeedableRng};

    fn uni(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn coprime_code(ell: usize, m: usize, a: &str, b: &str) -> BBCode {
        BBCode::from_univariate(ell, m, &uni(a), &uni(b)).unwrap()
    }

    #[test]
    fn worked_example_one_sided() {
        // octet {6,9,3,1,2,3,1,2}: k = 8 with g over F4 equal to 1+u+u^2
        let code = BBCode::from_octet([6, 9, 3, 1, 2, 3, 1, 2]).unwrap();
        let report = k_one_sided(&code).unwrap();
        assert_eq!(report.k, 8);
        let Witness::OneSided {
            factored_side,
            factors,
        } = &report.witness
        else {
            panic!("wrong witness kind");
        };
        assert_eq!(*factored_side, FactoredSide::Y);
        // factors of z^9-1: 1+z, 1+z+z^2, 1+z^3+z^6
        assert_eq!(factors.len(), 3);
        let quadratic = factors
            .iter()
            .find(|f| f.modulus == uni("1+z+z^2"))
            .expect("Phi_3 component");
        assert_eq!(
            quadratic.generator,
            ExtPoly {
                coeffs: vec![UniPoly::one(), UniPoly::one(), UniPoly::one()]
            }
        );
        for f in factors {
            if f.modulus != uni("1+z+z^2") {
                assert!(f.generator.is_one(), "unexpected generator for {}", f.modulus);
            }
        }
    }

    #[test]
    fn worked_example_groebner() {
        let code = BBCode::from_octet([6, 6, 3, 1, 2, 3, 1, 2]).unwrap();
        let report = k_groebner(&code);
        assert_eq!(report.k, 12);
        let Witness::StandardMonomials(m) = &report.witness else {
            panic!("wrong witness kind");
        };
        assert_eq!(m.as_slice(), &[(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1)]);

        let report = k_groebner(&BBCode::from_octet([6, 9, 3, 1, 2, 3, 1, 2]).unwrap());
        assert_eq!(report.k, 8);
    }

    #[test]
    fn coprime_table_rows() {
        let code = coprime_code(3, 25, "1+z+z^2", "1+z^2+z^16");
        let report = k_coprime(&code).unwrap();
        assert_eq!(report.k, 4);
        assert_eq!(
            report.witness,
            Witness::CoprimeGenerator(uni("1+z+z^2"))
        );

        let code = coprime_code(3, 31, "1+z^2+z^5", "1+z^2+z^36");
        assert_eq!(k_coprime(&code).unwrap().k, 10);

        let code = coprime_code(3, 5, "1+z+z^3", "1+z^2+z^3");
        assert_eq!(k_coprime(&code).unwrap().k, 0);

        // strategy agreement across both CRT routes
        let code = coprime_code(3, 25, "1+z+z^2", "1+z^2+z^16");
        assert_eq!(k_one_sided(&code).unwrap().k, 4);
        assert_eq!(k_rank(&code).k, 4);
    }

    #[test]
    fn coprime_strategy_rejects_bad_sides() {
        let code = BBCode::from_octet([6, 9, 3, 1, 2, 3, 1, 2]).unwrap();
        assert!(matches!(
            k_coprime(&code),
            Err(DimensionError::CoprimeNotApplicable { .. })
        ));
        let code = BBCode::from_octet([6, 6, 3, 1, 2, 3, 1, 2]).unwrap();
        assert!(matches!(
            k_one_sided(&code),
            Err(DimensionError::BothSidesEven { .. })
        ));
    }

    #[test]
    fn one_sided_zero_when_projections_coprime() {
        // all projections coprime to u^m - 1 force k = 0
        let code = BBCode::from_octet([5, 5, 1, 0, 1, 0, 1, 2]).unwrap();
        let report = k_one_sided(&code).unwrap();
        assert_eq!(report.k, 0);
        let Witness::OneSided { factors, .. } = &report.witness else {
            panic!();
        };
        assert!(factors.iter().all(|f| f.generator.is_one()));
    }

    #[test]
    fn cross_check_worked_examples() {
        let cross = k_cross_check(&BBCode::from_octet([6, 9, 3, 1, 2, 3, 1, 2]).unwrap()).unwrap();
        assert_eq!(cross.k, 8);
        assert_eq!(cross.reports.len(), 3); // one-sided, groebner, rank

        let cross =
            k_cross_check(&coprime_code(3, 25, "1+z+z^2", "1+z^2+z^16")).unwrap();
        assert_eq!(cross.k, 4);
        assert_eq!(cross.reports.len(), 4); // all strategies
        assert_eq!(cross.primary().method, Method::CoprimeGcd);
    }

    #[test]
    fn cross_check_random_octets_agree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..40 {
            let ell = 2 + (rng.next_u64() % 7) as usize;
            let m = 2 + (rng.next_u64() % 7) as usize;
            let r = |n: usize, rng: &mut dyn RngCore| (rng.next_u64() % n as u64) as usize;
            let code = BBCode::from_octet([
                ell,
                m,
                r(ell, &mut rng),
                r(m, &mut rng),
                r(m, &mut rng),
                r(m, &mut rng),
                r(ell, &mut rng),
                r(ell, &mut rng),
            ])
            .unwrap();
            let cross = k_cross_check(&code).unwrap();
            assert_eq!(cross.k % 2, 0, "{code:?}");
        }
    }

    #[test]
    fn ext_poly_rendering() {
        let field = ExtField::new(uni("1+z+z^2"));
        let g = ExtPoly::from_coeffs(
            &field,
            vec![UniPoly::one(), uni("1+z"), UniPoly::one()],
        );
        assert_eq!(g.display_with('y', 'x'), "1+(1+x)y+y^2");
    }
}
