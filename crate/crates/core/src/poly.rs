//! Sparse integer Laurent polynomials in one and two variables, exact
//! division, the `≐` relation (equality up to `±t^k`) and reduction modulo
//! cyclotomic polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer Laurent polynomial in `t`. Zero coefficients are never stored, so
/// the zero polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

fn add_term(map: &mut BTreeMap<i64, BigInt>, e: i64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        add_term(&mut coeffs, e, c.into());
        Self { coeffs }
    }

    /// `t^e - 1`.
    pub fn t_pow_minus_one(e: i64) -> Self {
        Self::from_terms([(e, 1), (0, -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            add_term(&mut coeffs, e, c.into());
        }
        Self { coeffs }
    }

    /// Coefficients listed from exponent `low` upwards.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// `max exponent - min exponent`, `None` for the zero polynomial.
    pub fn degree_span(&self) -> Option<u64> {
        Some((self.max_exp()? - self.min_exp()?) as u64)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitution `t -> t^k`; `k = 0` evaluates at `t = 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    /// Substitution `t -> t^{-1}`.
    pub fn reversed(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact quotient `self / divisor`, failing with [`Error::NotDivisible`]
    /// whenever the remainder over the integers is nonzero.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (d_max, d_lead) = match divisor.coeffs.iter().next_back() {
            Some((&e, c)) => (e, c.clone()),
            None => return Err(Error::ZeroPolynomial),
        };
        let d_min = divisor.min_exp().unwrap();
        let Some(a_min) = self.min_exp() else {
            return Ok(LaurentPoly::zero());
        };
        // Lowest exponent a quotient term can have.
        let floor = a_min - d_min;

        let mut rem = self.coeffs.clone();
        let mut quot = BTreeMap::new();
        while let Some((&e, c)) = rem.iter().next_back() {
            let qe = e - d_max;
            if qe < floor {
                return Err(Error::NotDivisible);
            }
            let (q, r) = c.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (&de, dc) in &divisor.coeffs {
                add_term(&mut rem, qe + de, -(&q * dc));
            }
            quot.insert(qe, q);
        }
        Ok(LaurentPoly { coeffs: quot })
    }

    /// Divides by each factor in turn; the factors of every in-scope rational
    /// expression make each intermediate quotient exact.
    pub fn div_exact_all<'a>(&self, divisors: impl IntoIterator<Item = &'a LaurentPoly>) -> Result<LaurentPoly> {
        divisors.into_iter().try_fold(self.clone(), |acc, d| acc.div_exact(d))
    }

    /// Representative of the `≐` class: lowest exponent 0 and a positive
    /// leading coefficient.
    pub fn normalize_doteq(&self) -> Result<LaurentPoly> {
        let low = self.min_exp().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(-low);
        if shifted.leading_coeff().unwrap().is_negative() {
            Ok(-shifted)
        } else {
            Ok(shifted)
        }
    }

    /// `self ≐ other`, i.e. `self = ±t^k other` for some `k`.
    pub fn doteq_eq(&self, other: &LaurentPoly) -> bool {
        match (self.normalize_doteq(), other.normalize_doteq()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Whether the polynomial is symmetric under `t -> t^{-1}` up to `≐`.
    pub fn is_palindromic(&self) -> bool {
        self.doteq_eq(&self.reversed())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = e == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            add_term(&mut coeffs, e, c.clone());
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            add_term(&mut coeffs, e, -c.clone());
        }
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                add_term(&mut coeffs, ea + eb, ca * cb);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

/// Integer Laurent polynomial in `t` and `x`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePoly {
    /// Builds from `((t exponent, x exponent), coefficient)` terms, summing repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((i64, i64), C)>) -> Self {
        let mut coeffs: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for (k, c) in terms {
            let entry = coeffs.entry(k).or_default();
            *entry += c.into();
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, et: i64, ex: i64) -> BigInt {
        self.coeffs.get(&(et, ex)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Substitutes `t -> t^et` and `x -> t^ex`.
    pub fn substitute_powers(&self, et: i64, ex: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&(a, b), c)| (a * et + b * ex, c.clone())))
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(a, b), c)| format!("{c}*t^{a}*x^{b}"))
            .collect();
        write!(f, "BivariatePoly({})", terms.join(" + "))
    }
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, Arc<LaurentPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<LaurentPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cyclotomic_shared(d: u64) -> Arc<LaurentPoly> {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(phi) = cyclotomic_cache().lock().unwrap().get(&d) {
        return phi.clone();
    }
    let mut acc = LaurentPoly::t_pow_minus_one(d as i64);
    for e in crate::arith::divisors(d) {
        if e < d {
            acc = acc
                .div_exact(&cyclotomic_shared(e))
                .expect("t^d - 1 is the product of its cyclotomic factors");
        }
    }
    let phi = Arc::new(acc);
    cyclotomic_cache().lock().unwrap().insert(d, phi.clone());
    phi
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `t^d - 1` by every
/// `Φ_e` with `e` a proper divisor of `d`.
pub fn cyclotomic_poly(d: u64) -> LaurentPoly {
    (*cyclotomic_shared(d)).clone()
}

/// An element of `Z[t]/Φ_d(t)`, i.e. an integer combination of powers of a
/// primitive `d`-th root of unity.
#[derive(Clone)]
pub struct CyclotomicElement {
    modulus: u64,
    residue: LaurentPoly,
    phi: Arc<LaurentPoly>,
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.residue == other.residue
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) mod Φ_{}", self.residue, self.modulus)
    }
}

/// Reduces `a` modulo `Φ_d`. Negative exponents are folded with `t^d = 1`,
/// which holds exactly in the quotient ring, so no unit is introduced.
pub fn reduce_mod_cyclotomic(a: &LaurentPoly, d: u64) -> CyclotomicElement {
    let phi = cyclotomic_shared(d);
    let mut dense = vec![BigInt::zero(); d as usize];
    for (e, c) in a.terms() {
        dense[e.rem_euclid(d as i64) as usize] += c;
    }
    CyclotomicElement::from_dense(d, dense, phi)
}

impl CyclotomicElement {
    fn from_dense(d: u64, mut dense: Vec<BigInt>, phi: Arc<LaurentPoly>) -> Self {
        let deg = phi.max_exp().unwrap() as usize;
        for i in (deg..dense.len()).rev() {
            if dense[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[i]);
            for (e, pc) in phi.terms() {
                let idx = i - deg + e as usize;
                if idx != i {
                    dense[idx] -= &c * pc;
                }
            }
        }
        dense.truncate(deg);
        let residue = LaurentPoly::from_terms(dense.into_iter().enumerate().map(|(i, c)| (i as i64, c)));
        Self { modulus: d, residue, phi }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> &LaurentPoly {
        &self.residue
    }

    pub fn cyclotomic(&self) -> &LaurentPoly {
        &self.phi
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn mul(&self, other: &CyclotomicElement) -> CyclotomicElement {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        reduce_mod_cyclotomic(&(&self.residue * &other.residue), self.modulus)
    }

    pub fn neg(&self) -> CyclotomicElement {
        Self {
            modulus: self.modulus,
            residue: -&self.residue,
            phi: self.phi.clone(),
        }
    }

    pub fn mul_t_pow(&self, k: i64) -> CyclotomicElement {
        reduce_mod_cyclotomic(&self.residue.shift(k), self.modulus)
    }

    fn to_dense(&self) -> Vec<BigInt> {
        let deg = self.phi.max_exp().unwrap() as usize;
        let mut v = vec![BigInt::zero(); deg];
        for (e, c) in self.residue.terms() {
            v[e as usize] = c.clone();
        }
        v
    }

    /// Returns `(sign, k)` with `self = sign · t^k · other`, `0 <= k < d`.
    pub fn associate_witness(&self, other: &CyclotomicElement) -> Option<(i8, u64)> {
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        let deg = self.phi.max_exp().unwrap() as usize;
        let phi_low: Vec<BigInt> = (0..deg as i64).map(|e| self.phi.coeff(e)).collect();
        let target = self.to_dense();
        let neg_target: Vec<BigInt> = target.iter().map(|c| -c).collect();
        let mut cur = other.to_dense();
        for k in 0..self.modulus {
            if cur == target {
                return Some((1, k));
            }
            if cur == neg_target {
                return Some((-1, k));
            }
            if deg == 0 {
                break;
            }
            // multiply by t, then rewrite t^deg = -(lower part of Φ_d)
            let top = cur.pop().unwrap();
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(&phi_low) {
                    *c -= &top * p;
                }
            }
        }
        None
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn associate_eq(&self, other: &CyclotomicElement) -> bool {
        self.associate_witness(other).is_some()
    }
}
