//! Alexander polynomials and genera of the two-component link `A_{m,n}`, the
//! Berge knots `b^±(m, n)`, torus knots and cables.

use std::fmt;

use crate::arith::gcd;
use crate::poly::{BivariatePoly, LaurentPoly};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` for [`Sign::Plus`], `-1` for [`Sign::Minus`].
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Standard parameter `(ε, m, n)` of `b^ε(m, n)`: `1 <= m <= n`, `gcd(m, n) = 1`.
/// Ordering is `(sign, m, n)` with `+` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardParam {
    sign: Sign,
    m: u64,
    n: u64,
}

impl StandardParam {
    pub fn new(sign: Sign, m: u64, n: u64) -> Result<Self> {
        if m == 0 || m > n || gcd(m, n) != 1 {
            return Err(Error::InvalidParameter { sign: sign.as_char(), m, n });
        }
        Ok(Self { sign, m, n })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `m = 1` parameters name torus knots.
    pub fn is_trivial(&self) -> bool {
        self.m == 1
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.m >= 2
    }

    pub(crate) fn require_nontrivial(&self) -> Result<()> {
        if self.is_trivial() {
            Err(Error::TrivialParameter { sign: self.sign.as_char(), n: self.n })
        } else {
            Ok(())
        }
    }

    /// The torus knot `T(r, s)`, `r <= s`, equal to `b^ε(1, n)`.
    pub fn torus_type(&self) -> Option<(u64, u64)> {
        match (self.is_trivial(), self.sign) {
            (false, _) => None,
            (true, Sign::Plus) => Some((self.n, self.n + 1)),
            (true, Sign::Minus) => Some((self.n + 1, self.n + 2)),
        }
    }

    /// Surgery coefficient `p = (m+n)^2 ∓ mn`.
    pub fn p(&self) -> u64 {
        let s = self.m + self.n;
        ((s * s) as i64 - self.sign.as_i64() * (self.m * self.n) as i64) as u64
    }

    /// Twice the genus, `(m+n-1)^2 ∓ mn`.
    pub fn two_g(&self) -> u64 {
        let s = self.m + self.n - 1;
        ((s * s) as i64 - self.sign.as_i64() * (self.m * self.n) as i64) as u64
    }

    /// Every standard parameter of either sign with surgery coefficient `p <= max_p`,
    /// sorted by `(p, sign, m)`.
    pub fn all_up_to(max_p: u64) -> Vec<StandardParam> {
        let mut out = Vec::new();
        let mut m = 1;
        // p >= m^2 + m n + n^2 >= 3 m^2
        while 3 * m * m <= max_p {
            let mut n = m;
            while m * m + m * n + n * n <= max_p {
                if gcd(m, n) == 1 {
                    for sign in Sign::both() {
                        let par = StandardParam { sign, m, n };
                        if par.p() <= max_p {
                            out.push(par);
                        }
                    }
                }
                n += 1;
            }
            m += 1;
        }
        out.sort_by_key(|par| (par.p(), par.sign, par.m));
        out
    }
}

impl fmt::Display for StandardParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.sign, self.m, self.n)
    }
}

fn require_coprime(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 || gcd(a, b) != 1 {
        Err(Error::NotCoprime(a as i64, b as i64))
    } else {
        Ok(())
    }
}

/// The sorted set of multiples of `m` or of `n` in `[0, mn]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    m: u64,
    n: u64,
    ks: Vec<u64>,
}

pub fn staircase(m: u64, n: u64) -> Result<Staircase> {
    require_coprime(m, n)?;
    let mut ks: Vec<u64> = (0..=n).map(|j| j * m).chain((0..=m).map(|j| j * n)).collect();
    ks.sort_unstable();
    ks.dedup();
    Ok(Staircase { m, n, ks })
}

impl Staircase {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ks(&self) -> &[u64] {
        &self.ks
    }

    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    /// Position of `j·m` in the staircase, `0 <= j <= n`.
    pub fn u_index(&self, j: u64) -> Result<u64> {
        if j > self.n {
            return Err(Error::IndexOutOfRange { index: j, max: self.n });
        }
        Ok(self.ks.binary_search(&(j * self.m)).expect("multiple of m") as u64)
    }

    /// Position of `j·n` in the staircase, `0 <= j <= m`.
    pub fn w_index(&self, j: u64) -> Result<u64> {
        if j > self.m {
            return Err(Error::IndexOutOfRange { index: j, max: self.m });
        }
        Ok(self.ks.binary_search(&(j * self.n)).expect("multiple of n") as u64)
    }
}

/// `Δ_{A_{m,n}}(t, x) = Σ_i t^{k_i} x^i` over the staircase `k_0 < … < k_{m+n-1}`.
pub fn alexander_amn(m: u64, n: u64) -> Result<BivariatePoly> {
    let st = staircase(m, n)?;
    Ok(BivariatePoly::from_terms(
        st.ks.iter().enumerate().map(|(i, &k)| ((k as i64, i as i64), 1)),
    ))
}

/// Alexander polynomial of `b^ε(m, n)` without ordering `m` and `n`.
pub(crate) fn berge_polynomial(sign: Sign, m: u64, n: u64) -> Result<LaurentPoly> {
    let st = staircase(m, n)?;
    let s = (m + n) as i64;
    let eps = sign.as_i64();
    let sum = LaurentPoly::from_terms(
        st.ks.iter().enumerate().map(|(i, &k)| (k as i64 - eps * i as i64 * s, 1)),
    );
    let numer = &sum * &LaurentPoly::t_pow_minus_one(1);
    numer.div_exact(&LaurentPoly::t_pow_minus_one(s))?.normalize_doteq()
}

/// `Δ_{b^ε(m,n)}(t) ≐ (t-1)/(t^{m+n}-1) · Σ t^{k_i ∓ i(m+n)}`, normalized.
pub fn alexander_berge(par: &StandardParam) -> Result<LaurentPoly> {
    berge_polynomial(par.sign, par.m, par.n)
}

/// Genus `((m+n-1)^2 ∓ mn) / 2` from the closed form.
pub fn genus_berge(par: &StandardParam) -> u64 {
    par.two_g() / 2
}

/// `(t^{ab}-1)(t-1) / ((t^a-1)(t^b-1))`, the torus knot factor of the cable formula.
fn torus_factor(a: u64, b: u64) -> Result<LaurentPoly> {
    let (a, b) = (a as i64, b as i64);
    let numer = &LaurentPoly::t_pow_minus_one(a * b) * &LaurentPoly::t_pow_minus_one(1);
    numer.div_exact_all([&LaurentPoly::t_pow_minus_one(a), &LaurentPoly::t_pow_minus_one(b)])
}

pub fn alexander_torus(r: u64, s: u64) -> Result<LaurentPoly> {
    require_coprime(r, s)?;
    torus_factor(r, s)?.normalize_doteq()
}

/// Seifert's formula for the `(r, s)`-cable of a knot with polynomial `k`.
pub fn alexander_cable(k: &LaurentPoly, r: u64, s: u64) -> Result<LaurentPoly> {
    require_coprime(r, s)?;
    let companion = k.substitute_power(r as i64);
    (&torus_factor(r, s)? * &companion).normalize_doteq()
}

/// Alexander polynomial of the `(2, 2rs±1)`-cable of `T(r, s)`.
pub fn alexander_gw_cable(r: u64, s: u64, sign: Sign) -> Result<LaurentPoly> {
    require_coprime(r, s)?;
    let (r, s) = (r as i64, s as i64);
    let q = 2 * r * s + sign.as_i64();
    let numer: LaurentPoly = [2 * q, 2 * r * s, 1]
        .into_iter()
        .map(LaurentPoly::t_pow_minus_one)
        .product();
    let denoms = [q, 2 * r, 2 * s].map(LaurentPoly::t_pow_minus_one);
    numer.div_exact_all(&denoms)?.normalize_doteq()
}
