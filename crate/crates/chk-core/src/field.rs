//! Exact arithmetic in the degree-8 number field Q(i, √2, √5).
//!
//! Every scalar the oscillator catalog needs — 1/√10, √(2/5), e^{±iπ/4},
//! (−1)^N — lies in this field, so operator algebra never rounds.
//! Elements are coordinate vectors over the fixed basis
//!
//! ```text
//!   e0 = 1,  e1 = √2,  e2 = √5,  e3 = √10,
//!   e4 = i,  e5 = i√2, e6 = i√5, e7 = i√10,
//! ```
//!
//! with arbitrary-precision rational coordinates (always reduced).
//! Serialization and iteration order follow this basis order everywhere.

use num::bigint::BigInt;

use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced arbitrary-precision rational.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Multiplication of the real radicals: RTAB[a][b] = (c, s) with
/// e_a · e_b = s · e_c for a, b, c in {1, √2, √5, √10}.
const RTAB: [[(usize, i64); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, 2), (3, 1), (2, 2)],
    [(2, 1), (3, 1), (0, 5), (1, 5)],
    [(3, 1), (2, 2), (1, 5), (0, 10)],
];

/// An element of Q(i, √2, √5) as coordinates over the fixed 8-element basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    c: [Rational; 8],
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem {
            c: Default::default(),
        }
    }

    /// Build from explicit basis coordinates (basis order {1,√2,√5,√10,i,i√2,i√5,i√10}).
    pub fn make(coeffs: [Rational; 8]) -> Self {
        FieldElem { c: coeffs }
    }

    /// Build from (numerator, denominator) pairs in basis order.
    ///
    /// Returns an error if any denominator is zero.
    pub fn make_ratios(pairs: [(i64, i64); 8]) -> Result<Self, FieldError> {
        let mut c: [Rational; 8] = Default::default();
        for (i, (n, d)) in pairs.iter().enumerate() {
            if *d == 0 {
                return Err(FieldError::ZeroDenominator);
            }
            c[i] = rat(*n, *d);
        }
        Ok(FieldElem { c })
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut e = Self::zero();
        e.c[0] = rat(n, 1);
        e
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let mut e = Self::zero();
        e.c[0] = rat(n, d);
        e
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut e = Self::zero();
        e.c[0] = r;
        e
    }

    pub fn i() -> Self {
        let mut e = Self::zero();
        e.c[4] = Rational::one();
        e
    }

    pub fn sqrt2() -> Self {
        let mut e = Self::zero();
        e.c[1] = Rational::one();
        e
    }

    pub fn sqrt5() -> Self {
        let mut e = Self::zero();
        e.c[2] = Rational::one();
        e
    }

    pub fn sqrt10() -> Self {
        let mut e = Self::zero();
        e.c[3] = Rational::one();
        e
    }

    /// 1/√10 = √10/10.
    pub fn inv_sqrt10() -> Self {
        let mut e = Self::zero();
        e.c[3] = rat(1, 10);
        e
    }

    /// 1/√40 = √10/20.
    pub fn inv_sqrt40() -> Self {
        let mut e = Self::zero();
        e.c[3] = rat(1, 20);
        e
    }

    /// √(2/5) = √10/5.
    pub fn sqrt_two_fifths() -> Self {
        let mut e = Self::zero();
        e.c[3] = rat(1, 5);
        e
    }

    /// 2/√5 = 2√5/5.
    pub fn two_over_sqrt5() -> Self {
        let mut e = Self::zero();
        e.c[2] = rat(2, 5);
        e
    }

    /// e^{iπ/4} = (√2/2)(1 + i).
    pub fn eighth_root() -> Self {
        let mut e = Self::zero();
        e.c[1] = rat(1, 2);
        e.c[5] = rat(1, 2);
        e
    }

    /// e^{iπn/4} for any integer n.
    pub fn eighth_root_pow(n: i64) -> Self {
        let r = n.rem_euclid(8) as u32;
        Self::eighth_root().pow(r)
    }

    pub fn coeff(&self, idx: usize) -> &Rational {
        &self.c[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// True when all four imaginary coordinates vanish.
    pub fn is_real(&self) -> bool {
        self.c[4..].iter().all(|x| x.is_zero())
    }

    /// Complex conjugation: negates the i-components, fixes the real ones.
    pub fn conj(&self) -> Self {
        let mut c = self.c.clone();
        for x in &mut c[4..8] {
            *x = -x.clone();
        }
        FieldElem { c }
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (a, b) in self.c.iter_mut().zip(other.c.iter()) {
            *a += b;
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out: [Rational; 8] = Default::default();
        for (a, ca) in self.c.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.c.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let (rc, s) = RTAB[a & 3][b & 3];
                let ia = a >= 4;
                let ib = b >= 4;
                let mut sign = s;
                if ia && ib {
                    sign = -sign;
                }
                let idx = if ia ^ ib { rc + 4 } else { rc };
                out[idx] += ca * cb * rat(sign, 1);
            }
        }
        FieldElem { c: out }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut c = self.c.clone();
        for x in &mut c {
            *x *= r;
        }
        FieldElem { c }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, by solving the 8×8 rational system x·a = 1
    /// over the multiplication table.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // Column j of the matrix is the coordinate vector of a·e_j.
        let mut m: [[Rational; 8]; 8] = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
        for j in 0..8 {
            let mut ej = Self::zero();
            ej.c[j] = Rational::one();
            let col = self.mul_ref(&ej);
            for i in 0..8 {
                m[i][j] = col.c[i].clone();
            }
        }
        let mut rhs: [Rational; 8] = Default::default();
        rhs[0] = Rational::one();
        solve8(&mut m, &mut rhs).ok_or(FieldError::DivisionByZero)?;
        Ok(FieldElem { c: rhs })
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.mul_ref(&other.inverse()?))
    }

    /// Approximate complex value with the radicals computed to
    /// `precision_bits` bits (≥ 53) before the final rounding to f64.
    pub fn to_complex(&self, precision_bits: u32) -> (f64, f64) {
        assert!(precision_bits >= 53, "precision_bits must be at least 53");
        let s2 = sqrt_int_bits(2, precision_bits);
        let s5 = sqrt_int_bits(5, precision_bits);
        let s10 = sqrt_int_bits(10, precision_bits);
        let re = &self.c[0] + &self.c[1] * &s2 + &self.c[2] * &s5 + &self.c[3] * &s10;
        let im = &self.c[4] + &self.c[5] * &s2 + &self.c[6] * &s5 + &self.c[7] * &s10;
        (
            re.to_f64().unwrap_or(f64::NAN),
            im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// |x| as f64, adequate for reporting residual magnitudes.
    pub fn abs_approx(&self) -> f64 {
        let (re, im) = self.to_complex(64);
        re.hypot(im)
    }

    /// Canonical text form
    /// `a0 + a1*r2 + a2*r5 + a3*r10 + i*(a4 + a5*r2 + a6*r5 + a7*r10)`,
    /// zero terms omitted, rationals as `p` or `p/q`. Round-trips exactly
    /// through [`FieldElem::parse`].
    pub fn to_text(&self) -> String {
        let real = part_text(&self.c[0..4]);
        if self.is_real() {
            return real;
        }
        let imag = part_text(&self.c[4..8]);
        format!("{} + i*({})", real, imag)
    }

    /// Parse the canonical text form produced by [`FieldElem::to_text`].
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        let (real_str, imag_str) = match s.find("i*(") {
            Some(pos) => {
                if !s.ends_with(')') {
                    return Err(FieldError::Parse(format!("unclosed imaginary part: {s}")));
                }
                let imag = &s[pos + 3..s.len() - 1];
                let real = s[..pos].trim().trim_end_matches('+').trim();
                (if real.is_empty() { "0" } else { real }, Some(imag))
            }
            None => (s, None),
        };
        let mut c: [Rational; 8] = Default::default();
        parse_part(real_str, &mut c, 0)?;
        if let Some(im) = imag_str {
            parse_part(im, &mut c, 4)?;
        }
        Ok(FieldElem { c })
    }
}

fn part_text(coeffs: &[Rational]) -> String {
    const SYMS: [&str; 4] = ["", "r2", "r5", "r10"];
    let mut terms = Vec::new();
    for (k, x) in coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if k == 0 {
            terms.push(rat_text(x));
        } else {
            terms.push(format!("{}*{}", rat_text(x), SYMS[k]));
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn rat_text(x: &Rational) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn parse_rat(s: &str) -> Result<Rational, FieldError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n
        .parse()
        .map_err(|_| FieldError::Parse(format!("bad numerator: {n}")))?;
    let den: BigInt = d
        .parse()
        .map_err(|_| FieldError::Parse(format!("bad denominator: {d}")))?;
    if den.is_zero() {
        return Err(FieldError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

fn parse_part(s: &str, c: &mut [Rational; 8], offset: usize) -> Result<(), FieldError> {
    for term in s.split(" + ") {
        let term = term.trim();
        if term.is_empty() || term == "0" {
            continue;
        }
        let (coeff_str, idx) = match term.rsplit_once('*') {
            Some((a, "r2")) => (a, 1),
            Some((a, "r5")) => (a, 2),
            Some((a, "r10")) => (a, 3),
            Some(_) => return Err(FieldError::Parse(format!("bad symbol in term: {term}"))),
            None => (term, 0),
        };
        c[offset + idx] = &c[offset + idx] + parse_rat(coeff_str)?;
    }
    Ok(())
}

/// √n to `bits` fractional bits, as an exact rational lower bound.
fn sqrt_int_bits(n: u64, bits: u32) -> Rational {
    let scaled = BigInt::from(n) << (2 * bits as usize);
    let root = scaled.sqrt();
    Rational::new(root, BigInt::one() << bits as usize)
}

/// In-place Gaussian elimination for an 8×8 rational system; returns None
/// when singular. On success `rhs` holds the solution.
fn solve8(m: &mut [[Rational; 8]; 8], rhs: &mut [Rational; 8]) -> Option<()> {
    for col in 0..8 {
        let pivot = (col..8).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        rhs[col] /= &p;
        for r in 0..8 {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for cc in 0..8 {
                let t = &m[col][cc] * &f;
                m[r][cc] -= t;
            }
            let t = &rhs[col] * &f;
            rhs[r] -= t;
        }
    }
    Some(())
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        let mut out = self.clone();
        for (a, b) in out.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
        out
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.mul_ref(rhs)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let mut out = self.clone();
        for x in &mut out.c {
            *x = -x.clone();
        }
        out
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_elem(rng: &mut ChaCha8Rng) -> FieldElem {
        let mut c: [Rational; 8] = Default::default();
        for x in &mut c {
            if rng.gen_bool(0.6) {
                *x = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
            }
        }
        FieldElem { c }
    }

    #[test]
    fn basis_constants() {
        assert!(FieldElem::make_ratios([(1, 0); 8]).is_err());
        assert!(FieldElem::from_int(1).is_one());
        let s2 = FieldElem::sqrt2();
        assert_eq!(s2.mul_ref(&s2), FieldElem::from_int(2));
        let s5 = FieldElem::sqrt5();
        assert_eq!(s5.mul_ref(&s5), FieldElem::from_int(5));
        assert_eq!(s2.mul_ref(&s5), FieldElem::sqrt10());
        assert_eq!(
            FieldElem::sqrt10().mul_ref(&FieldElem::sqrt10()),
            FieldElem::from_int(10)
        );
        let i = FieldElem::i();
        assert_eq!(i.mul_ref(&i), FieldElem::from_int(-1));
    }

    #[test]
    fn eighth_root_has_order_eight() {
        let w = FieldElem::eighth_root();
        assert_eq!(w.pow(8), FieldElem::one());
        assert_ne!(w.pow(4), FieldElem::one());
        assert_eq!(w.pow(4), FieldElem::from_int(-1));
        assert_eq!(FieldElem::eighth_root_pow(-1), w.conj());
    }

    #[test]
    fn difference_of_squares() {
        let a = &FieldElem::one() + &FieldElem::sqrt5();
        let b = &FieldElem::one() - &FieldElem::sqrt5();
        assert_eq!(a.mul_ref(&b), FieldElem::from_int(-4));
    }

    #[test]
    fn inv_sqrt10_squares_to_tenth() {
        let x = FieldElem::inv_sqrt10();
        assert_eq!(x.mul_ref(&x), FieldElem::from_ratio(1, 10));
        assert_eq!(
            x.mul_ref(&FieldElem::sqrt10()),
            FieldElem::one(),
            "1/√10 · √10 = 1"
        );
    }

    #[test]
    fn divide_one_by_i() {
        let out = FieldElem::one().div(&FieldElem::i()).unwrap();
        assert_eq!(out, (-&FieldElem::i()));
        assert!(FieldElem::one().div(&FieldElem::zero()).is_err());
    }

    #[test]
    fn conj_examples() {
        assert_eq!(FieldElem::i().conj(), -&FieldElem::i());
        assert_eq!(FieldElem::sqrt10().conj(), FieldElem::sqrt10());
        assert_eq!(
            FieldElem::eighth_root().conj(),
            FieldElem::eighth_root_pow(-1)
        );
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            let c = random_elem(&mut rng);
            assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
            assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
            assert_eq!(a.mul_ref(&(&b + &c)), &a.mul_ref(&b) + &a.mul_ref(&c));
            assert_eq!(a.conj().conj(), a);
            assert_eq!(a.mul_ref(&b).conj(), a.conj().mul_ref(&b.conj()));
            if !a.is_zero() {
                assert_eq!(a.mul_ref(&a.inverse().unwrap()), FieldElem::one());
            }
        }
    }

    #[test]
    fn to_complex_known_constants() {
        let (re, im) = FieldElem::one().to_complex(53);
        assert_eq!((re, im), (1.0, 0.0));
        let (re, _) = FieldElem::sqrt2().to_complex(64);
        assert!((re - std::f64::consts::SQRT_2).abs() < 1e-15);
        let (re, im) = FieldElem::eighth_root().to_complex(64);
        assert!((re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((im - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn to_complex_multiplicative_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            let (ar, ai) = a.to_complex(64);
            let (br, bi) = b.to_complex(64);
            let (pr, pi) = a.mul_ref(&b).to_complex(64);
            let qr = ar * br - ai * bi;
            let qi = ar * bi + ai * br;
            let err = (pr - qr).hypot(pi - qi);
            let bound = (2.0f64).powi(4 - 53) * a.abs_approx() * b.abs_approx() + 1e-300;
            assert!(err <= bound, "err {err} vs bound {bound}");
        }
    }

    #[test]
    fn text_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = random_elem(&mut rng);
            let s = a.to_text();
            let back = FieldElem::parse(&s).unwrap();
            assert_eq!(back, a, "round trip through {s}");
        }
        assert_eq!(FieldElem::parse("0").unwrap(), FieldElem::zero());
        assert_eq!(
            FieldElem::parse("1/2*r2 + i*(1/2*r2)").unwrap(),
            FieldElem::eighth_root()
        );
    }
}
