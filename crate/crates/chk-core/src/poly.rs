//! ChK polynomials U_{k,l}(z, z̄) as exact bivariate polynomials.
//!
//! The family is generated by the coupled three-term recurrences
//!
//! ```text
//!   z  U_{k,l} = U_{k+1,l} + U_{k,l-1} + U_{k-1,l+1}
//!   z̄ U_{k,l} = U_{k,l+1} + U_{k-1,l} + U_{k+1,l-1}
//! ```
//!
//! with U_{0,0} = 1 and out-of-range indices contributing zero. Each U_{k,l}
//! is monic with leading monomial z^k z̄^l, so expansion of a graded
//! polynomial in the family is an exact upper-triangular solve.
//!
//! The module also applies the ladder operators' differential
//! representations (finite sums of U·D_{m,n}/(m! n!) terms) and evaluates
//! truncated Poisson kernels.

use crate::field::{FieldElem, Rational};
use num::complex::Complex64;
use num::{BigInt, One};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("index ({0},{1}) outside table of max degree {2}")]
    OutOfTable(u32, u32, u32),
    #[error("polynomial is not in the degree-graded span of the table")]
    NotInSpan,
}

/// Bivariate polynomial in the commuting symbols z, z̄ with exact
/// field coefficients. Keys are (z-exponent, z̄-exponent); no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), FieldElem>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, FieldElem::one())
    }

    pub fn monomial(a: u32, b: u32, coeff: FieldElem) -> Self {
        let mut p = Self::default();
        if !coeff.is_zero() {
            p.terms.insert((a, b), coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> FieldElem {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    fn insert_add(&mut self, key: (u32, u32), val: FieldElem) {
        if val.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &val;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, val);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert_add(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert_add(*k, -v);
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let mut out = Self::default();
        for (k, v) in &self.terms {
            out.insert_add(*k, v.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a1, b1), v1) in &self.terms {
            for (&(a2, b2), v2) in &other.terms {
                out.insert_add((a1 + a2, b1 + b2), v1.mul_ref(v2));
            }
        }
        out
    }

    /// Multiplication by z (shifts the first exponent).
    pub fn mul_z(&self) -> Self {
        let mut out = Self::default();
        for (&(a, b), v) in &self.terms {
            out.terms.insert((a + 1, b), v.clone());
        }
        out
    }

    /// Multiplication by z̄.
    pub fn mul_zbar(&self) -> Self {
        let mut out = Self::default();
        for (&(a, b), v) in &self.terms {
            out.terms.insert((a, b + 1), v.clone());
        }
        out
    }

    /// Exact m-fold ∂/∂z and n-fold ∂/∂z̄.
    pub fn partial_derivative(&self, m: u32, n: u32) -> Self {
        let mut out = Self::default();
        for (&(a, b), v) in &self.terms {
            if a < m || b < n {
                continue;
            }
            let mut factor = Rational::one();
            for j in 0..m {
                factor *= Rational::from(BigInt::from(a - j));
            }
            for j in 0..n {
                factor *= Rational::from(BigInt::from(b - j));
            }
            out.insert_add((a - m, b - n), v.scale(&factor));
        }
        out
    }

    /// Substitute a complex value for z (and its conjugate for z̄).
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let zb = z.conj();
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(a, b), v) in &self.terms {
            let (re, im) = v.to_complex(64);
            acc += Complex64::new(re, im) * z.powu(a) * zb.powu(b);
        }
        acc
    }

    /// Termwise complex conjugation combined with the swap z ↔ z̄.
    pub fn conj_swap(&self) -> Self {
        let mut out = Self::default();
        for (&(a, b), v) in &self.terms {
            out.terms.insert((b, a), v.conj());
        }
        out
    }
}

/// The family {U_{k,l} : k+l ≤ max_degree}, built once and then immutable.
#[derive(Debug, Clone)]
pub struct PolyTable {
    max_degree: u32,
    entries: BTreeMap<(u32, u32), BiPoly>,
}

impl PolyTable {
    /// Degree-ascending construction: level N+1 from levels N and N-1 via
    /// the z-recurrence for U_{k+1,l} and the z̄-recurrence for U_{0,N+1}.
    pub fn build(max_degree: u32) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0u32, 0u32), BiPoly::one());
        for n in 0..max_degree {
            // U_{k+1,l} = z U_{k,l} - U_{k,l-1} - U_{k-1,l+1}, k+l = n.
            for k in 0..=n {
                let l = n - k;
                let u = entries[&(k, l)].clone();
                let mut next = u.mul_z();
                if l >= 1 {
                    next = next.sub(&entries[&(k, l - 1)]);
                }
                if k >= 1 {
                    next = next.sub(&entries[&(k - 1, l + 1)]);
                }
                entries.insert((k + 1, l), next);
            }
            // U_{0,n+1} = z̄ U_{0,n} - U_{1,n-1}.
            let u = entries[&(0, n)].clone();
            let mut next = u.mul_zbar();
            if n >= 1 {
                next = next.sub(&entries[&(1, n - 1)]);
            }
            entries.insert((0, n + 1), next);
        }
        PolyTable { max_degree, entries }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn get(&self, k: u32, l: u32) -> Result<&BiPoly, PolyError> {
        self.entries
            .get(&(k, l))
            .ok_or(PolyError::OutOfTable(k, l, self.max_degree))
    }

    /// Signed index access: negative indices yield the zero polynomial.
    pub fn get_signed(&self, k: i64, l: i64) -> Result<BiPoly, PolyError> {
        if k < 0 || l < 0 {
            return Ok(BiPoly::zero());
        }
        self.get(k as u32, l as u32).cloned()
    }

    pub fn indices(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.keys().copied()
    }

    /// Both recurrence residuals at (k,l); exact zero when the table is
    /// consistent with the defining recurrences.
    pub fn recurrence_residual(&self, k: u32, l: u32) -> Result<(BiPoly, BiPoly), PolyError> {
        if k + l + 1 > self.max_degree {
            return Err(PolyError::OutOfTable(k + 1, l, self.max_degree));
        }
        let u = self.get(k, l)?;
        let mut rz = u.mul_z().sub(self.get(k + 1, l)?);
        if l >= 1 {
            rz = rz.sub(self.get(k, l - 1)?);
        }
        if k >= 1 {
            rz = rz.sub(self.get(k - 1, l + 1)?);
        }
        let mut rzb = u.mul_zbar().sub(self.get(k, l + 1)?);
        if k >= 1 {
            rzb = rzb.sub(self.get(k - 1, l)?);
        }
        if l >= 1 {
            rzb = rzb.sub(self.get(k + 1, l - 1)?);
        }
        Ok((rz, rzb))
    }

    /// Coefficient-level check of conj(U_{k,l})(z,z̄) = U_{l,k}(z,z̄).
    pub fn conjugation_symmetry_check(&self, k: u32, l: u32) -> Result<bool, PolyError> {
        let a = self.get(k, l)?;
        let b = self.get(l, k)?;
        Ok(a.conj_swap() == *b)
    }

    /// Leading monomial of U_{k,l} is z^k z̄^l with coefficient exactly 1,
    /// and no other monomial of total degree k+l appears.
    pub fn leading_monomial_check(&self, k: u32, l: u32) -> Result<bool, PolyError> {
        let u = self.get(k, l)?;
        let top = k + l;
        for (&(a, b), v) in u.terms() {
            if a + b == top && (a, b) != (k, l) {
                return Ok(false);
            }
            if (a, b) == (k, l) && !v.is_one() {
                return Ok(false);
            }
        }
        Ok(!u.coeff(k, l).is_zero() || top == 0 && u.coeff(0, 0).is_one())
    }

    /// Exact expansion of `p` in the U-basis (upper-triangular solve by
    /// leading monomials). Fails when `p` needs indices beyond the table.
    pub fn expand_in_basis(
        &self,
        p: &BiPoly,
    ) -> Result<BTreeMap<(u32, u32), FieldElem>, PolyError> {
        let mut rest = p.clone();
        let mut coords = BTreeMap::new();
        while let Some(top) = rest.total_degree() {
            if top > self.max_degree {
                return Err(PolyError::NotInSpan);
            }
            let (&(a, b), c) = rest
                .terms()
                .find(|(&(a, b), _)| a + b == top)
                .expect("degree witness");
            let c = c.clone();
            rest = rest.sub(&self.get(a, b)?.scale(&c));
            coords.insert((a, b), c);
        }
        coords.retain(|_, v| !v.is_zero());
        Ok(coords)
    }

    /// Deterministic CSV dump: one row per term, columns `k,l,a,b,coeff`,
    /// rows in lexicographic (k,l,a,b) order, coefficients in exact text form.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,l,a,b,coeff\n");
        for (&(k, l), poly) in &self.entries {
            for (&(a, b), v) in poly.terms() {
                writeln!(out, "{k},{l},{a},{b},{}", v.to_text()).expect("string write");
            }
        }
        out
    }
}

/// Differential representations of the ladder operators restricted to the
/// level-N subspace. All of them are finite sums of terms
/// `U_{·,·} · D_{m,n}/(m! n!)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffRep {
    /// a_sect^+: (1/√10) Σ_m U_{m-1,N-m+1} D_{m,N-m}/(m!(N-m)!)
    SectRaise,
    /// a_sect^-: (1/√10) Σ_m U_{m+1,N-m-1} D_{m,N-m}/(m!(N-m)!)
    SectLower,
    /// a_rad^+: √(2/5) Σ_m U_{m+1,N-m+1} D_{m,N-m}/(m!(N-m)!)
    RadRaise,
    /// a_rad^-: √(2/5) Σ_m U_{m-1,N-m-1} D_{m,N-m}/(m!(N-m)!)
    RadLower,
    /// a_{•,0}^+: U_{N+1,0} D_{N,0}/N!
    RowRaise,
    /// a_{•,0}^-: U_{N-1,0} D_{N,0}/N!
    RowLower,
    /// a_{0,•}^+: U_{0,N+1} D_{0,N}/N!
    ColRaise,
    /// a_{0,•}^-: U_{0,N-1} D_{0,N}/N!
    ColLower,
}

fn factorial(n: u32) -> Rational {
    let mut f = Rational::one();
    for j in 2..=n {
        f *= Rational::from(BigInt::from(j));
    }
    f
}

/// One term `U_{uk,ul} · D_{m,n}/(m! n!)` applied to `p`; negative target
/// indices make the term vanish.
fn dterm(
    table: &PolyTable,
    uk: i64,
    ul: i64,
    m: u32,
    n: u32,
    p: &BiPoly,
) -> Result<BiPoly, PolyError> {
    let u = table.get_signed(uk, ul)?;
    if u.is_zero() {
        return Ok(BiPoly::zero());
    }
    let d = p.partial_derivative(m, n);
    if d.is_zero() {
        return Ok(BiPoly::zero());
    }
    let inv = (factorial(m) * factorial(n)).recip();
    Ok(u.mul(&d.scale(&FieldElem::from_rational(inv))))
}

/// Apply a ladder operator's differential representation to `p`, which must
/// lie in the span of {U_{k,l} : k+l = N} (verified by exact expansion).
pub fn diff_rep_apply(
    table: &PolyTable,
    rep: DiffRep,
    p: &BiPoly,
    level: u32,
) -> Result<BiPoly, PolyError> {
    let coords = table.expand_in_basis(p)?;
    if coords.keys().any(|&(k, l)| k + l != level) {
        return Err(PolyError::NotInSpan);
    }
    let n = level;
    let mut acc = BiPoly::zero();
    match rep {
        DiffRep::SectRaise | DiffRep::SectLower | DiffRep::RadRaise | DiffRep::RadLower => {
            let (dk, dl, scalar) = match rep {
                DiffRep::SectRaise => (-1i64, 1i64, FieldElem::inv_sqrt10()),
                DiffRep::SectLower => (1, -1, FieldElem::inv_sqrt10()),
                DiffRep::RadRaise => (1, 1, FieldElem::sqrt_two_fifths()),
                DiffRep::RadLower => (-1, -1, FieldElem::sqrt_two_fifths()),
                _ => unreachable!(),
            };
            for m in 0..=n {
                let term = dterm(
                    table,
                    m as i64 + dk,
                    (n - m) as i64 + dl,
                    m,
                    n - m,
                    p,
                )?;
                acc = acc.add(&term);
            }
            Ok(acc.scale(&scalar))
        }
        DiffRep::RowRaise => dterm(table, n as i64 + 1, 0, n, 0, p),
        DiffRep::RowLower => dterm(table, n as i64 - 1, 0, n, 0, p),
        DiffRep::ColRaise => dterm(table, 0, n as i64 + 1, 0, n, p),
        DiffRep::ColLower => dterm(table, 0, n as i64 - 1, 0, n, p),
    }
}

/// Which boundary position-operator display, in which reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryAxis {
    /// a_{•,0}^+ + a_{•,0}^- on the row {U_{k,0}}.
    Row,
    /// a_{0,•}^+ + a_{0,•}^- on the column {U_{0,l}}.
    Col,
}

/// Truncated Poisson kernel: partial sum over k+l ≤ cutoff of
/// phase(k+l) · conj(U_{k,l}(z)) · U_{k,l}(ζ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    /// phase (−1)^{k+l}
    Sectorial,
    /// phase e^{iπ(k+l)/4}
    Radial,
}

pub fn poisson_kernel(
    table: &PolyTable,
    kind: KernelKind,
    z: Complex64,
    zeta: Complex64,
    cutoff: u32,
) -> Result<Complex64, PolyError> {
    if cutoff > table.max_degree() {
        return Err(PolyError::OutOfTable(cutoff, 0, table.max_degree()));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, l) in table.indices().collect::<Vec<_>>() {
        let n = k + l;
        if n > cutoff {
            continue;
        }
        let phase = match kind {
            KernelKind::Sectorial => {
                if n % 2 == 0 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(-1.0, 0.0)
                }
            }
            KernelKind::Radial => {
                let (re, im) = FieldElem::eighth_root_pow(n as i64).to_complex(64);
                Complex64::new(re, im)
            }
        };
        let u = table.get(k, l)?;
        acc += phase * u.evaluate(z).conj() * u.evaluate(zeta);
    }
    Ok(acc)
}
