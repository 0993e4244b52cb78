//! Certificates that `b^±(m, n)`, `2 <= m < n`, is neither a torus knot nor a
//! cable knot.
//!
//! A knot with a lens surgery that is a torus knot must be `T(r, s)` with
//! surgery coefficient `rs ± 1`; a satellite must be a `(2, 2rs ± 1)`-cable of
//! `T(r, s)` with coefficient `4rs ± 1`. Each such candidate is enumerated and
//! every check that rules it out is recorded, so a certificate can be
//! re-verified independently.

use crate::arith::{divisors, gcd, inv_mod, modp, mul_mod};
use crate::knot::{alexander_berge, alexander_gw_cable, alexander_torus, Sign, StandardParam};
use crate::lens::{gw_cable_lens, lens_equivalent, lens_from_berge, moser_lens};
use crate::torsion::{franz_equivalent, torsion_cable_surgery, torsion_torus_surgery, TorsionMultiset};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Twice the genus of the candidate differs from that of the Berge knot.
    GenusMismatch { expected: u64, found: u64 },
    /// Torsions of the surgered manifolds are not Franz equivalent.
    FranzMismatch,
    /// The lens spaces differ even up to orientation.
    LensMismatch,
    /// Franz equivalence would force an odd `U = (2r±1)(2s±1)` to equal the even `p ± 1`.
    ParityContradiction { u: [u64; 4] },
    /// None of the congruences a lens-like torsion imposes hold mod `p`.
    CongruenceFilter,
    /// The size bound on `p` forced by the congruences contradicts `p - 2g = 2(m+n) - 1`.
    GapBound,
    AlexanderMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCandidate {
    pub r: u64,
    pub s: u64,
    pub rejections: Vec<Rejection>,
}

/// The `(2, 2rs ± 1)`-cable of `T(r, s)`; `sign` is the `±`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CableCandidate {
    pub r: u64,
    pub s: u64,
    pub sign: Sign,
    pub rejections: Vec<Rejection>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Torsion,
    Alexander,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicityCertificate {
    pub param: StandardParam,
    pub method: Method,
    pub torus: Vec<TorusCandidate>,
    pub cable: Vec<CableCandidate>,
    /// Primeness is not computed: every tunnel number one knot is prime (Norwood).
    pub prime_cited: bool,
}

impl HyperbolicityCertificate {
    /// Every candidate has at least one recorded failing check.
    pub fn is_valid(&self) -> bool {
        self.prime_cited
            && self.torus.iter().all(|c| !c.rejections.is_empty())
            && self.cable.iter().all(|c| !c.rejections.is_empty())
    }
}

/// `{m·(m+n)⁻¹, n·(m+n)⁻¹}` mod `p`: the Berge torsion with the meridian sent to `ζ_p`.
pub fn berge_residue_pair(par: &StandardParam) -> TorsionMultiset {
    let p = par.p();
    let inv = inv_mod((par.m() + par.n()) as i128, p).expect("m + n is a unit mod p");
    let a = mul_mod(par.m() % p, inv, p) as i64;
    let b = mul_mod(par.n() % p, inv, p) as i64;
    TorsionMultiset::new(p, &[a, b]).expect("residues are units")
}

/// Coprime `2 <= r < s` with `rs = target`.
fn coprime_splits(target: u64) -> impl Iterator<Item = (u64, u64)> {
    divisors(target)
        .into_iter()
        .map(move |r| (r, target / r))
        .filter(|&(r, s)| r >= 2 && r < s && gcd(r, s) == 1)
}

fn torus_candidates(par: &StandardParam) -> Vec<TorusCandidate> {
    let p = par.p();
    let two_g = par.two_g();
    let residues = berge_residue_pair(par);
    let berge_lens = lens_from_berge(par);
    let mut out = Vec::new();
    for rs in [p - 1, p + 1] {
        for (r, s) in coprime_splits(rs) {
            let mut rejections = Vec::new();
            let found = (r - 1) * (s - 1);
            if found != two_g {
                rejections.push(Rejection::GenusMismatch { expected: two_g, found });
            }
            let t = torsion_torus_surgery(r, s, p).expect("p = rs ± 1");
            if !franz_equivalent(&t, &residues).expect("same modulus") {
                rejections.push(Rejection::FranzMismatch);
            }
            let lens = moser_lens(r, s, p as i64, 1).expect("p = rs ± 1");
            if !lens_equivalent(&lens, &berge_lens, false) {
                rejections.push(Rejection::LensMismatch);
            }
            out.push(TorusCandidate { r, s, rejections });
        }
    }
    out.sort_by_key(|c| (c.r * c.s, c.r));
    out
}

/// `2g` of the `(2, 2rs ± 1)`-cable of `T(r, s)`.
pub fn cable_two_genus(r: u64, s: u64, sign: Sign) -> u64 {
    (4 * (r * s) as i64 + 1 + sign.as_i64() - 2 * r as i64 - 2 * s as i64) as u64
}

fn cable_candidates(par: &StandardParam) -> Vec<CableCandidate> {
    let p = par.p();
    let two_g = par.two_g();
    let residues = berge_residue_pair(par);
    let berge_lens = lens_from_berge(par);
    let mut out = Vec::new();
    for (target, sign) in [(p - 1, Sign::Plus), (p + 1, Sign::Minus)] {
        if target % 4 != 0 {
            continue;
        }
        for (r, s) in coprime_splits(target / 4) {
            let mut rejections = Vec::new();
            let found = cable_two_genus(r, s, sign);
            if found != two_g {
                rejections.push(Rejection::GenusMismatch { expected: two_g, found });
            }
            let t = torsion_cable_surgery(r, s, sign).expect("coprime");
            if !franz_equivalent(&t, &residues).expect("same modulus") {
                rejections.push(Rejection::FranzMismatch);
            }
            let (_, lens) = gw_cable_lens(r, s, sign).expect("coprime");
            if !lens_equivalent(&lens, &berge_lens, false) {
                rejections.push(Rejection::LensMismatch);
            }
            let u = [
                (2 * r - 1) * (2 * s - 1),
                (2 * r - 1) * (2 * s + 1),
                (2 * r + 1) * (2 * s - 1),
                (2 * r + 1) * (2 * s + 1),
            ];
            if p % 2 == 1 && u.iter().all(|&x| x % 2 == 1) {
                rejections.push(Rejection::ParityContradiction { u });
            }
            out.push(CableCandidate { r, s, sign, rejections });
        }
    }
    out
}

/// Torus knots `T(r, s)`, `2 <= r < s`, with `rs = p ± 1`, each with the checks that exclude it.
pub fn verify_non_torus(par: &StandardParam) -> Result<Vec<TorusCandidate>> {
    par.require_nontrivial()?;
    Ok(torus_candidates(par))
}

/// Cables `(2, 2rs ± 1)` of `T(r, s)` with `4rs ± 1 = p`, each with the checks that exclude it.
/// Also meaningful for `m = 1`: torus knots are not satellites.
pub fn verify_non_satellite(par: &StandardParam) -> Result<Vec<CableCandidate>> {
    Ok(cable_candidates(par))
}

pub fn verify_hyperbolic(par: &StandardParam) -> Result<HyperbolicityCertificate> {
    Ok(HyperbolicityCertificate {
        param: *par,
        method: Method::Torsion,
        torus: verify_non_torus(par)?,
        cable: verify_non_satellite(par)?,
        prime_cited: true,
    })
}

fn is_pm_one(x: u64, p: u64) -> bool {
    let x = x % p;
    x == 1 || x == p - 1
}

/// Torus knots whose Alexander polynomial has the Berge knot's degree, with the
/// checks that exclude them.
fn alexander_torus_candidates(par: &StandardParam) -> Result<Vec<TorusCandidate>> {
    let p = par.p();
    let two_g = par.two_g();
    let delta = alexander_berge(par)?;
    let residues = berge_residue_pair(par);
    let mut out = Vec::new();
    if two_g == 0 {
        return Ok(out);
    }
    for d in divisors(two_g) {
        let (r, s) = (d + 1, two_g / d + 1);
        if r >= s || gcd(r, s) != 1 {
            continue;
        }
        let mut rejections = Vec::new();
        if !(is_pm_one(r, p) || is_pm_one(s, p) || is_pm_one(r * s, p)) {
            rejections.push(Rejection::CongruenceFilter);
        }
        // Otherwise p = rs ± 1, or p <= (rs+1)/2, or r = 2 and p = s + 1; the
        // last two give p - 2g <= 3.
        let surgery_case = p + 1 == r * s || p == r * s + 1;
        if !surgery_case && p - two_g > 3 {
            rejections.push(Rejection::GapBound);
        }
        // p = rs ± 1 is the torus-knot surgery itself; the torsion argument applies
        if surgery_case && !franz_equivalent(&torsion_torus_surgery(r, s, p)?, &residues)? {
            rejections.push(Rejection::FranzMismatch);
        }
        if !alexander_torus(r, s)?.doteq_eq(&delta) {
            rejections.push(Rejection::AlexanderMismatch);
        }
        out.push(TorusCandidate { r, s, rejections });
    }
    Ok(out)
}

fn alexander_cable_candidates(par: &StandardParam) -> Result<Vec<CableCandidate>> {
    let p = par.p();
    let two_g = par.two_g();
    let delta = alexander_berge(par)?;
    let residues = berge_residue_pair(par);
    let mut out = Vec::new();
    for sign in Sign::both() {
        let eps = sign.as_i64();
        // 2g = 4rs - 2r - 2s + 1 + ε  =>  s = (2g + 2r - 1 - ε) / (4r - 2)
        let mut r = 2u64;
        while cable_two_genus(r, r + 1, sign) <= two_g {
            let num = two_g as i64 + 2 * r as i64 - 1 - eps;
            let den = 4 * r as i64 - 2;
            if num % den == 0 {
                let s = (num / den) as u64;
                if s > r && gcd(r, s) == 1 {
                    let mut rejections = Vec::new();
                    let cable_p = (4 * (r * s) as i64 + eps) as u64;
                    let congruent = is_pm_one(r, p)
                        || is_pm_one(s, p)
                        || is_pm_one(2 * r * s, p)
                        || modp(cable_p as i128, p) == 0;
                    if !congruent {
                        rejections.push(Rejection::CongruenceFilter);
                    }
                    // Otherwise p = 4rs ± 1 or p <= 2rs + 1, and the latter gives p - 2g <= -1.
                    if p != cable_p {
                        rejections.push(Rejection::GapBound);
                    } else if !franz_equivalent(&torsion_cable_surgery(r, s, sign)?, &residues)? {
                        rejections.push(Rejection::FranzMismatch);
                    }
                    if !alexander_gw_cable(r, s, sign)?.doteq_eq(&delta) {
                        rejections.push(Rejection::AlexanderMismatch);
                    }
                    out.push(CableCandidate { r, s, sign, rejections });
                }
            }
            r += 1;
        }
    }
    Ok(out)
}

/// No torus knot `T(r, s)`, `2 <= r < s`, shares the Alexander polynomial.
/// False for `m = 1`, where the knot is itself a torus knot.
pub fn alexander_excludes_torus(par: &StandardParam) -> Result<bool> {
    Ok(alexander_torus_candidates(par)?
        .iter()
        .all(|c| c.rejections.contains(&Rejection::AlexanderMismatch)))
}

/// No `(2, 2rs ± 1)`-cable of a torus knot shares the Alexander polynomial.
pub fn alexander_excludes_cable(par: &StandardParam) -> Result<bool> {
    Ok(alexander_cable_candidates(par)?
        .iter()
        .all(|c| c.rejections.contains(&Rejection::AlexanderMismatch)))
}

pub fn alexander_certificate(par: &StandardParam) -> Result<HyperbolicityCertificate> {
    par.require_nontrivial()?;
    Ok(HyperbolicityCertificate {
        param: *par,
        method: Method::Alexander,
        torus: alexander_torus_candidates(par)?,
        cable: alexander_cable_candidates(par)?,
        prime_cited: true,
    })
}
