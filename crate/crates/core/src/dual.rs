//! Dual knots `K(L(p, q), k)` in lens spaces and their Alexander polynomials.
//!
//! Presentation convention: the dual of `b^±(m, n)` is described in
//! `L(p, n·m⁻¹)`, the inverse of the residue returned by
//! [`crate::lens::lens_from_berge`]. With it, `k = -n(m+n)⁻¹` reproduces the
//! `b^+(m, n)` polynomial.

use crate::arith::{gcd, inv_mod, modp, mul_mod};
use crate::knot::{alexander_berge, Sign, StandardParam};
use crate::poly::LaurentPoly;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SaitoDescription {
    p: u64,
    q: u64,
    k: u64,
}

impl SaitoDescription {
    pub fn new(p: u64, q: i64, k: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        let q = modp(q as i128, p);
        if gcd(q, p) != 1 {
            return Err(Error::NotCoprime(q as i64, p as i64));
        }
        if k == 0 || k >= p {
            return Err(Error::InvalidSaitoParameter { p, k });
        }
        if gcd(k, p) != 1 {
            return Err(Error::NotCoprime(k as i64, p as i64));
        }
        Ok(Self { p, q, k })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `k² ≡ ±q^{±1} (mod p)`. Reported, not enforced.
    pub fn satisfies_square_congruence(&self) -> bool {
        square_congruence(self.p, self.q, self.k)
    }
}

fn square_congruence(p: u64, q: u64, k: u64) -> bool {
    let k2 = mul_mod(k, k, p);
    let q_inv = inv_mod(q as i128, p).expect("q is a unit");
    [q, p - q, q_inv, p - q_inv].contains(&k2)
}

/// Lift of `i·q⁻¹ mod p` to `[1, p]`.
pub fn psi(i: i64, p: u64, q: i64) -> Result<u64> {
    let q_inv = inv_mod(q as i128, p)?;
    let r = mul_mod(modp(i as i128, p), q_inv, p);
    Ok(if r == 0 { p } else { r })
}

/// `#{ j : 1 <= j <= k-1, Ψ(j) < Ψ(i) }`.
pub fn phi(i: i64, p: u64, q: i64, k: u64) -> Result<u64> {
    let target = psi(i, p, q)?;
    let mut count = 0;
    for j in 1..k as i64 {
        if psi(j, p, q)? < target {
            count += 1;
        }
    }
    Ok(count)
}

/// `(t - 1)/(t^k - 1) · Σ_{i<k} t^{Φ(i)p - Ψ(i)k}` without the `gcd(k, p) = 1`
/// check; the division fails exactly when the description is impossible.
pub fn dual_alexander_sum(p: u64, q: i64, k: u64) -> Result<LaurentPoly> {
    if k == 0 || k >= p {
        return Err(Error::InvalidSaitoParameter { p, k });
    }
    let psis: Vec<u64> = (0..k as i64).map(|i| psi(i, p, q)).collect::<Result<_>>()?;
    let mut sorted: Vec<u64> = psis[1..].to_vec();
    sorted.sort_unstable();
    let (p_i, k_i) = (p as i64, k as i64);
    let sum = LaurentPoly::from_terms(psis.iter().map(|&ps| {
        let phi = sorted.partition_point(|&x| x < ps) as i64;
        (phi * p_i - ps as i64 * k_i, 1)
    }));
    let num = &sum * &LaurentPoly::t_pow_minus_one(1);
    num.div_exact(&LaurentPoly::t_pow_minus_one(k_i))?.normalize_doteq()
}

pub fn alexander_dual(desc: &SaitoDescription) -> Result<LaurentPoly> {
    dual_alexander_sum(desc.p, desc.q as i64, desc.k)
}

/// `-n·(m+n)⁻¹ mod p` for `p = (m+n)² - mn`.
pub fn saito_k_for_berge_plus(m: u64, n: u64) -> Result<u64> {
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    let s = m + n;
    let p = s * s - m * n;
    Ok(saito_k_formula(p, m, n))
}

fn saito_k_formula(p: u64, m: u64, n: u64) -> u64 {
    let inv = inv_mod((m + n) as i128, p).expect("m + n is a unit mod p");
    modp(-(mul_mod(n % p, inv, p) as i128), p)
}

/// `n·m⁻¹ mod p`, the residue the dual knot's lens space is presented with.
pub fn dual_presentation_q(par: &StandardParam) -> u64 {
    let p = par.p();
    let m_inv = inv_mod(par.m() as i128, p).expect("m is a unit mod p");
    mul_mod(par.n() % p, m_inv, p)
}

/// Every `k` for which `K(L(p, n·m⁻¹), k)` has the Alexander polynomial of
/// `b^±(m, n)`. The square congruence only prunes candidates.
pub fn find_saito_parameters(par: &StandardParam) -> Result<Vec<u64>> {
    let p = par.p();
    let q = dual_presentation_q(par);
    let target = alexander_berge(par)?.normalize_doteq()?;
    let mut out = Vec::new();
    for k in 1..p {
        if gcd(k, p) != 1 || !square_congruence(p, q, k) {
            continue;
        }
        if dual_alexander_sum(p, q as i64, k)? == target {
            out.push(k);
        }
    }
    Ok(out)
}

/// One line of the search report for the Saito parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaitoObservation {
    pub param: StandardParam,
    pub q: u64,
    pub found: Vec<u64>,
    /// Whether `-n(m+n)⁻¹` is among the survivors (the closed form known for `+`).
    pub plus_formula_hit: bool,
}

pub fn saito_report(params: &[StandardParam]) -> Result<Vec<SaitoObservation>> {
    params
        .iter()
        .map(|par| {
            let found = find_saito_parameters(par)?;
            let guess = saito_k_formula(par.p(), par.m(), par.n());
            Ok(SaitoObservation {
                param: *par,
                q: dual_presentation_q(par),
                plus_formula_hit: found.contains(&guess),
                found,
            })
        })
        .collect()
}

/// Convenience for the `+` family: the description the closed form predicts.
pub fn berge_plus_description(par: &StandardParam) -> Result<SaitoDescription> {
    if par.sign() != Sign::Plus {
        return Err(Error::InvalidParameter { sign: '-', m: par.m(), n: par.n() });
    }
    let k = saito_k_for_berge_plus(par.m(), par.n())?;
    SaitoDescription::new(par.p(), dual_presentation_q(par) as i64, k)
}
