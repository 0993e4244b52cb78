//! Arithmetic in `ℤ[ω₊]` (`ω² = ω - 1`) and `ℤ[ω₋]` (`ω² = ω + 1`), integer
//! factorization, and which surgery coefficients come from Berge knots.

use std::fmt;

use crate::arith::{exact_sqrt, gcd};
use crate::knot::Sign;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadRing {
    /// Eisenstein-type ring, norm `b² + bc + c²`, six units.
    Plus,
    /// Golden ring, norm `b² + bc - c²`, infinitely many units.
    Minus,
}

impl QuadRing {
    /// Coefficient `κ` in `ω² = ω + κ`.
    fn kappa(self) -> i128 {
        match self {
            QuadRing::Plus => -1,
            QuadRing::Minus => 1,
        }
    }
}

impl From<Sign> for QuadRing {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => QuadRing::Plus,
            Sign::Minus => QuadRing::Minus,
        }
    }
}

/// `b + cω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub ring: QuadRing,
    pub b: i64,
    pub c: i64,
}

impl QuadInt {
    pub fn new(ring: QuadRing, b: i64, c: i64) -> Self {
        Self { ring, b, c }
    }

    pub fn omega(ring: QuadRing) -> Self {
        Self { ring, b: 0, c: 1 }
    }

    fn from_wide(ring: QuadRing, b: i128, c: i128) -> Self {
        Self {
            ring,
            b: i64::try_from(b).expect("coefficient overflow"),
            c: i64::try_from(c).expect("coefficient overflow"),
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c < 0 {
            write!(f, "{} - {}w", self.b, -self.c)
        } else {
            write!(f, "{} + {}w", self.b, self.c)
        }
    }
}

pub fn qmul(x: &QuadInt, y: &QuadInt) -> Result<QuadInt> {
    if x.ring != y.ring {
        return Err(Error::RingMismatch);
    }
    let (b, c, b2, c2) = (x.b as i128, x.c as i128, y.b as i128, y.c as i128);
    let cc = c * c2;
    Ok(QuadInt::from_wide(x.ring, b * b2 + x.ring.kappa() * cc, b * c2 + c * b2 + cc))
}

/// `(b + c) - cω`; `ω̄ = 1 - ω` in both rings.
pub fn qconj(x: &QuadInt) -> QuadInt {
    QuadInt { ring: x.ring, b: x.b + x.c, c: -x.c }
}

pub fn qnorm(x: &QuadInt) -> i64 {
    let (b, c) = (x.b as i128, x.c as i128);
    i64::try_from(b * b + b * c - x.ring.kappa() * c * c).expect("norm overflow")
}

/// Fibonacci numbers `a_1 = a_2 = 1` extended to negative indices by
/// `a_{-k} = (-1)^{k+1} a_k`. Panics for `|k| > 184`, where `a_k` leaves `i128`.
pub fn fibonacci(k: i64) -> i128 {
    assert!(k.unsigned_abs() <= 184, "fibonacci index {k} out of i128 range");
    let n = k.unsigned_abs();
    let (mut a, mut b) = (0i128, 1i128);
    for _ in 1..n {
        (a, b) = (b, a + b);
    }
    let a = if n == 0 { 0 } else { b };
    if k < 0 && n % 2 == 0 {
        -a
    } else {
        a
    }
}

/// `ω^k`. In the plus ring `ω³ = -1`; in the minus ring `ω^k = a_{k-1} + a_k ω`.
pub fn unit_pow_omega(ring: QuadRing, k: i64) -> QuadInt {
    match ring {
        QuadRing::Plus => {
            let (b, c) = match k.rem_euclid(6) {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 1),
                3 => (-1, 0),
                4 => (0, -1),
                _ => (1, -1),
            };
            QuadInt::new(ring, b, c)
        }
        QuadRing::Minus => QuadInt::from_wide(ring, fibonacci(k - 1), fibonacci(k)),
    }
}

pub fn is_primitive(x: &QuadInt) -> bool {
    gcd(x.b.unsigned_abs(), x.c.unsigned_abs()) == 1
}

/// The standard pair `(m, n)`, `1 <= m <= n`, labelling the orbit of `x` under
/// units and conjugation: `m + nω₊` in the plus ring, `(m+n) + nω₋` in the minus ring.
pub fn canonical_rep(x: &QuadInt) -> Result<(u64, u64)> {
    if !is_primitive(x) {
        return Err(Error::NotPrimitive(x.b, x.c));
    }
    if qnorm(x).abs() <= 1 {
        return Err(Error::UnitElement(x.b, x.c));
    }
    let found = match x.ring {
        QuadRing::Plus => canonical_plus(x),
        QuadRing::Minus => canonical_minus(x),
    };
    Ok(found.expect("every primitive non-unit orbit has a canonical element"))
}

fn canonical_plus(x: &QuadInt) -> Option<(u64, u64)> {
    let w = QuadInt::omega(QuadRing::Plus);
    let mut hits = [*x, qconj(x)].into_iter().flat_map(|start| {
        std::iter::successors(Some(start), move |y| qmul(y, &w).ok()).take(6)
    });
    hits.find(|y| 1 <= y.b && y.b <= y.c)
        .map(|y| (y.b as u64, y.c as u64))
}

/// Multiplying by `ω₋` shifts the Fibonacci-type sequence `b_k` with seeds
/// `b_1 = b`, `b_2 = c` (`x ω^{k-1} = b_k + b_{k+1} ω`). The canonical element
/// `(B, C)` has `C < B <= 2C` and `C² < |N(x)|`, so it sits where the sequence
/// is smallest. Away from there the terms grow geometrically in both
/// directions, so `O(log max(|b|, |c|, |N|))` steps each way reach it.
fn canonical_minus(x: &QuadInt) -> Option<(u64, u64)> {
    let size = (x.b.unsigned_abs() + x.c.unsigned_abs() + qnorm(x).unsigned_abs() + 2) as f64;
    let steps = 8 + 3 * (size.ln() / 1.618f64.ln()).ceil() as usize;
    let is_canonical = |bk: i128, bk1: i128| 1 <= bk1 && bk1 < bk && bk <= 2 * bk1;
    for start in [*x, qconj(x)] {
        let (b, c) = (start.b as i128, start.c as i128);
        // forward: (b_k, b_{k+1}) -> (b_{k+1}, b_k + b_{k+1})
        // backward: (b_k, b_{k+1}) -> (b_{k+1} - b_k, b_k)
        for forward in [true, false] {
            let (mut u, mut v) = (b, c);
            for _ in 0..steps {
                for s in [1, -1] {
                    if is_canonical(s * u, s * v) {
                        let (bb, cc) = (s * u, s * v);
                        return Some(((bb - cc) as u64, cc as u64));
                    }
                }
                let next = if forward {
                    u.checked_add(v).map(|w| (v, w))
                } else {
                    v.checked_sub(u).map(|w| (w, u))
                };
                match next {
                    Some(pair) => (u, v) = pair,
                    None => break,
                }
            }
        }
    }
    None
}

/// Prime factorization with primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    pub fn exponent_of(&self, q: u64) -> u32 {
        self.factors.iter().find(|&&(r, _)| r == q).map_or(0, |&(_, e)| e)
    }
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod_u64(r, a, m);
        }
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin; the first twelve prime witnesses suffice below 2⁶⁴.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; `n` odd composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| ((mulmod_u64(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut primes = Vec::new();
    let mut rest = n;
    for q in 2..1000u64 {
        if q * q > rest {
            break;
        }
        while rest % q == 0 {
            primes.push(q);
            rest /= q;
        }
    }
    split_into(rest, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match factors.last_mut() {
            Some((r, e)) if *r == q => *e += 1,
            _ => factors.push((q, 1)),
        }
    }
    Factorization { n, factors }
}

/// Outcome of Berge's criterion for one sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Realizability {
    pub realizable: bool,
    /// Number of standard parameters `(m, n)` (including `m = 1`) with this coefficient.
    pub count: u64,
    /// False when the closed count `2^{r-1}` does not apply (`r = 0`); `count`
    /// is then the brute-force value.
    pub formula_applicable: bool,
}

/// Berge's criterion: `+` needs `ord₃(p) <= 1` and every other prime `≡ 1 (3)`;
/// `-` needs `ord₅(p) <= 1` and every other prime `≡ ±1 (5)`. There are then
/// `2^{r-1}` parameters, `r` the number of other primes.
pub fn berge_realizable(p: u64, sign: Sign) -> Realizability {
    let f = factorize(p);
    let (special, ok): (u64, fn(u64) -> bool) = match sign {
        Sign::Plus => (3, |q| q % 3 == 1),
        Sign::Minus => (5, |q| q % 5 == 1 || q % 5 == 4),
    };
    let realizable =
        f.exponent_of(special) <= 1 && f.primes().filter(|&q| q != special).all(ok);
    let r = f.primes().filter(|&q| q != special).count() as u32;
    if !realizable {
        return Realizability { realizable, count: 0, formula_applicable: true };
    }
    if r == 0 {
        let count = enumerate_preimages(p, sign).len() as u64;
        return Realizability { realizable, count, formula_applicable: false };
    }
    Realizability { realizable, count: 1 << (r - 1), formula_applicable: true }
}

/// Realizable by both signs iff every prime factor is `≡ 1` or `4 (mod 15)`.
pub fn berge_realizable_both(p: u64) -> bool {
    p >= 2 && factorize(p).primes().all(|q| q % 15 == 1 || q % 15 == 4)
}

/// All coprime `1 <= m <= n` with `m² + mn + n² = p` (`+`) or `m² + 3mn + n² = p` (`-`),
/// sorted by `m`.
pub fn enumerate_preimages(p: u64, sign: Sign) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let p = p as u128;
    let mut m: u128 = 1;
    loop {
        // n >= m gives p >= 3m² (plus) or 5m² (minus)
        let (lead, disc, shift) = match sign {
            Sign::Plus => (3, 4 * p as i128 - 3 * (m * m) as i128, m),
            Sign::Minus => (5, 4 * p as i128 + 5 * (m * m) as i128, 3 * m),
        };
        if lead * m * m > p {
            break;
        }
        if disc >= 0 {
            if let Some(root) = exact_sqrt(disc as u128) {
                if root > shift && (root - shift) % 2 == 0 {
                    let n = (root - shift) / 2;
                    if n >= m && gcd(m as u64, n as u64) == 1 {
                        out.push((m as u64, n as u64));
                    }
                }
            }
        }
        m += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    use QuadRing::{Minus, Plus};

    fn q(ring: QuadRing, b: i64, c: i64) -> QuadInt {
        QuadInt::new(ring, b, c)
    }

    #[test]
    fn omega_times_conjugate() {
        let w = QuadInt::omega(Plus);
        assert_eq!(qmul(&w, &qconj(&w)).unwrap(), q(Plus, 1, 0));
        let w = QuadInt::omega(Minus);
        assert_eq!(qmul(&w, &qconj(&w)).unwrap(), q(Minus, -1, 0));
        assert_eq!(qnorm(&q(Minus, 3, 2)), 11);
        assert_eq!(qmul(&q(Plus, 1, 1), &q(Minus, 1, 1)), Err(Error::RingMismatch));
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(10), 55);
        assert_eq!(fibonacci(-3), 2);
        assert_eq!(fibonacci(-4), -3);
        assert_eq!(fibonacci(0), 0);
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(184), 127127879743834334146972278486287885163);
    }

    #[test]
    fn unit_powers() {
        assert_eq!(unit_pow_omega(Plus, 3), q(Plus, -1, 0));
        assert_eq!(unit_pow_omega(Plus, 6), q(Plus, 1, 0));
        assert_eq!(unit_pow_omega(Minus, 3), q(Minus, 1, 2));
        assert_eq!(unit_pow_omega(Minus, -1), q(Minus, -1, 1));
        for ring in [Plus, Minus] {
            let w = QuadInt::omega(ring);
            let mut acc = q(ring, 1, 0);
            for k in 0..20 {
                assert_eq!(unit_pow_omega(ring, k), acc);
                assert_eq!(qmul(&unit_pow_omega(ring, -k), &acc).unwrap(), q(ring, 1, 0));
                acc = qmul(&acc, &w).unwrap();
            }
        }
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&q(Plus, 2, 3)));
        assert!(!is_primitive(&q(Plus, 2, 4)));
        assert!(is_primitive(&q(Plus, 0, 1)));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_rep(&q(Plus, 5, -2)), Ok((2, 3)));
        assert_eq!(canonical_rep(&q(Minus, 2, 5)), Ok((1, 2)));
        assert_eq!(canonical_rep(&q(Plus, 1, 1)), Ok((1, 1)));
        assert_eq!(canonical_rep(&q(Minus, 2, 1)), Ok((1, 1)));
        assert_eq!(canonical_rep(&q(Plus, 2, 4)), Err(Error::NotPrimitive(2, 4)));
        assert_eq!(canonical_rep(&q(Minus, 1, 1)), Err(Error::UnitElement(1, 1)));
        assert_eq!(canonical_rep(&q(Plus, 0, 1)), Err(Error::UnitElement(0, 1)));
    }

    #[test]
    fn canonical_far_out_in_the_orbit() {
        let x = q(Minus, 5, 3); // (2 + 3) + 3w
        assert_eq!(canonical_rep(&x), Ok((2, 3)));
        for k in [-40, -17, 0, 23, 40] {
            let y = qmul(&x, &unit_pow_omega(Minus, k)).unwrap();
            assert_eq!(canonical_rep(&y), Ok((2, 3)), "k = {k}");
            assert_eq!(canonical_rep(&qconj(&y)), Ok((2, 3)), "conj, k = {k}");
            let neg = q(Minus, -y.b, -y.c);
            assert_eq!(canonical_rep(&neg), Ok((2, 3)), "neg, k = {k}");
        }
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(91).factors, vec![(7, 1), (13, 1)]);
        assert_eq!(factorize(499).factors, vec![(499, 1)]);
        assert_eq!(factorize(225).factors, vec![(3, 2), (5, 2)]);
        assert_eq!(factorize(1).factors, vec![]);
        let big = 4_294_967_291u64 * 4_294_967_279;
        assert_eq!(factorize(big).factors, vec![(4_294_967_279, 1), (4_294_967_291, 1)]);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn realizability() {
        assert_eq!(
            berge_realizable(91, Sign::Plus),
            Realizability { realizable: true, count: 2, formula_applicable: true }
        );
        assert_eq!(berge_realizable(209, Sign::Minus).count, 2);
        assert_eq!(berge_realizable(217, Sign::Plus).count, 2);
        assert!(!berge_realizable(23, Sign::Plus).realizable);
        assert_eq!(berge_realizable(23, Sign::Plus).count, 0);
        assert_eq!(
            berge_realizable(3, Sign::Plus),
            Realizability { realizable: true, count: 1, formula_applicable: false }
        );
        assert!(!berge_realizable(9, Sign::Plus).realizable);
        assert!(berge_realizable_both(19));
        assert!(berge_realizable_both(61));
        assert!(!berge_realizable_both(91));
    }

    #[test]
    fn preimages() {
        assert_eq!(enumerate_preimages(19, Sign::Plus), vec![(2, 3)]);
        assert_eq!(enumerate_preimages(217, Sign::Plus), vec![(3, 13), (8, 9)]);
        assert_eq!(enumerate_preimages(20, Sign::Plus), vec![]);
        assert_eq!(enumerate_preimages(209, Sign::Minus), vec![(1, 13), (5, 8)]);
        assert_eq!(enumerate_preimages(3, Sign::Plus), vec![(1, 1)]);
        assert_eq!(enumerate_preimages(5, Sign::Minus), vec![(1, 1)]);
    }
}
