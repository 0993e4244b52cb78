//! Lens spaces produced by surgery on Berge knots, torus knots and cables,
//! and the identification maps back to standard parameters.

use std::fmt;

use crate::arith::{exact_sqrt, gcd, inv_mod, modp, mul_mod};
use crate::knot::{Sign, StandardParam};
use crate::quad::enumerate_preimages;
use crate::{Error, Result};

/// `L(p, q)` with `p >= 2` and `q` stored in `[1, p-1]` (`q = 1` when `p = 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        let q = modp(q as i128, p);
        if gcd(q, p) != 1 {
            return Err(Error::NotCoprime(q as i64, p as i64));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `L(p, -q)`, the same manifold with the opposite orientation.
    pub fn reversed(&self) -> Self {
        Self { p: self.p, q: modp(-(self.q as i128), self.p) }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {})", self.p, self.q)
    }
}

/// A lens space as presented by a positive coefficient, with a flag recording
/// that the surgery itself produced the opposite orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedLens {
    pub lens: LensSpace,
    pub reversed: bool,
}

pub fn surgery_coefficient(par: &StandardParam) -> u64 {
    par.p()
}

/// `L(p, m·n⁻¹)` for `p = (m+n)^2 ∓ mn`.
pub fn lens_from_berge(par: &StandardParam) -> LensSpace {
    let p = par.p();
    let n_inv = inv_mod(par.n() as i128, p).expect("gcd(n, p) = gcd(n, m^2) = 1");
    LensSpace { p, q: mul_mod(par.m() % p, n_inv, p) }
}

/// `(A_{m,n}; mn, r)`, which is `L(rmn - (m+n)^2, m·n⁻¹)`.
pub fn lens_from_amn(m: u64, n: u64, r: i64) -> Result<OrientedLens> {
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m as i64, n as i64));
    }
    let s = (m + n) as i128;
    let signed_p = r as i128 * (m * n) as i128 - s * s;
    if signed_p.abs() <= 1 {
        return Err(Error::DegenerateSurgery(signed_p as i64));
    }
    let p = signed_p.unsigned_abs() as u64;
    let q = mul_mod(m % p, inv_mod(n as i128, p)?, p);
    let lens = LensSpace::new(p, q as i64)?;
    if signed_p < 0 {
        Ok(OrientedLens { lens: lens.reversed(), reversed: true })
    } else {
        Ok(OrientedLens { lens, reversed: false })
    }
}

/// Homeomorphism test. Oriented: `q' ≡ q^{±1}`; unoriented also allows `q' ≡ -q^{±1}`.
pub fn lens_equivalent(a: &LensSpace, b: &LensSpace, oriented: bool) -> bool {
    if a.p != b.p {
        return false;
    }
    let p = a.p;
    let prod = mul_mod(a.q, b.q, p);
    if a.q == b.q || prod == 1 % p {
        return true;
    }
    !oriented && (modp(a.q as i128 + b.q as i128, p) == 0 || prod == p - 1)
}

/// `F(ε, m, n) = (p, 2g)`.
pub fn map_f(par: &StandardParam) -> (u64, u64) {
    (par.p(), par.two_g())
}

/// Inverts [`map_f`]: `p - 2g = 2(m+n) - 1` fixes `m + n`, then `p - (m+n)^2 = -ε mn`
/// fixes `mn`.
pub fn identify_from_pg(p: u64, two_g: u64) -> Option<StandardParam> {
    if p < 2 || two_g >= p || (p - two_g) % 2 == 0 {
        return None;
    }
    let s = (p - two_g + 1) / 2;
    let s2 = (s as i128) * (s as i128);
    let mut found = None;
    for sign in Sign::both() {
        let prod = sign.as_i64() as i128 * (s2 - p as i128);
        if prod <= 0 {
            continue;
        }
        let disc = s2 - 4 * prod;
        let Some(root) = (disc >= 0).then(|| exact_sqrt(disc as u128)).flatten() else {
            continue;
        };
        let root = root as i128;
        if (s as i128 - root) % 2 != 0 {
            continue;
        }
        let m = ((s as i128 - root) / 2) as u64;
        let n = ((s as i128 + root) / 2) as u64;
        if let Ok(par) = StandardParam::new(sign, m, n) {
            debug_assert!(found.is_none(), "F is injective");
            found = Some(par);
        }
    }
    found
}

/// Every standard parameter (including `m = 1`) whose surgery gives a lens space
/// homeomorphic to `lens` up to orientation. Among parameters with `m >= 2`
/// there is at most one.
///
/// Candidates come from the exact solutions of `m^2 ± mn + n^2 = p` (resp.
/// `m^2 + 3mn + n^2 = p`), which bounds the search by `m + n <= sqrt(4p/3)`.
pub fn identify_from_lens(lens: &LensSpace) -> Vec<StandardParam> {
    let mut out = Vec::new();
    for sign in Sign::both() {
        for (m, n) in enumerate_preimages(lens.p(), sign) {
            let par = StandardParam::new(sign, m, n).expect("preimages are standard");
            if lens_equivalent(&lens_from_berge(&par), lens, false) {
                out.push(par);
            }
        }
    }
    out.sort();
    out
}

/// Lens space from `p/q` surgery on `T(r, s)`, defined when `|p - qrs| = 1`.
pub fn moser_lens(r: u64, s: u64, p: i64, q: i64) -> Option<LensSpace> {
    if gcd(r, s) != 1 || p < 2 {
        return None;
    }
    let rs = (r * s) as i128;
    if (p as i128 - q as i128 * rs).abs() != 1 {
        return None;
    }
    let p_u = p as u64;
    let q_lens = modp(-(q as i128) * (r * r) as i128, p_u);
    LensSpace::new(p_u, q_lens as i64).ok()
}

/// Surgery coefficient `4rs ± 1` and lens space `L(4rs ± 1, ∓4r^2)` of the
/// `(2, 2rs ± 1)`-cable of `T(r, s)`.
pub fn gw_cable_lens(r: u64, s: u64, sign: Sign) -> Result<(u64, LensSpace)> {
    if gcd(r, s) != 1 {
        return Err(Error::NotCoprime(r as i64, s as i64));
    }
    let eps = sign.as_i64() as i128;
    let p = (4 * (r * s) as i128 + eps) as u64;
    let q = modp(-eps * 4 * (r * r) as i128, p);
    Ok((p, LensSpace::new(p, q as i64)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn par(sign: Sign, m: u64, n: u64) -> StandardParam {
        StandardParam::new(sign, m, n).unwrap()
    }

    fn lens(p: u64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn coefficients() {
        assert_eq!(surgery_coefficient(&par(Sign::Plus, 2, 3)), 19);
        assert_eq!(surgery_coefficient(&par(Sign::Minus, 1, 3)), 19);
        assert_eq!(surgery_coefficient(&par(Sign::Plus, 7, 18)), 499);
    }

    #[test]
    fn berge_lens_spaces() {
        assert_eq!(lens_from_berge(&par(Sign::Plus, 1, 2)), lens(7, 4));
        assert_eq!(lens_from_berge(&par(Sign::Plus, 2, 3)), lens(19, 7));
        assert_eq!(lens_from_berge(&par(Sign::Minus, 1, 2)), lens(11, 6));
    }

    #[test]
    fn amn_lens_spaces() {
        let a = lens_from_amn(2, 3, 1).unwrap();
        assert!(a.reversed);
        assert_eq!(a.lens, lens(19, -7));
        // r = 1 reproduces b^+(2,3) surgery up to orientation
        assert!(lens_equivalent(&a.lens, &lens_from_berge(&par(Sign::Plus, 2, 3)), false));
        let b = lens_from_amn(2, 3, 5).unwrap();
        assert_eq!(b.lens, lens(5, 2 * 2));
        assert!(!b.reversed);
        assert_eq!(lens_from_amn(1, 2, 6).unwrap().lens.p(), 3);
        assert_eq!(lens_from_amn(1, 2, 4), Err(Error::DegenerateSurgery(-1)));
        assert_eq!(lens_from_amn(1, 1, 4), Err(Error::DegenerateSurgery(0)));
        // r = -1 is b^-(2,3)
        let c = lens_from_amn(2, 3, -1).unwrap();
        assert!(lens_equivalent(&c.lens, &lens_from_berge(&par(Sign::Minus, 2, 3)), false));
    }

    #[test]
    fn equivalence() {
        assert!(lens_equivalent(&lens(7, 4), &lens(7, 2), true));
        assert!(!lens_equivalent(&lens(7, 3), &lens(7, 4), true));
        assert!(lens_equivalent(&lens(7, 3), &lens(7, 4), false));
        assert!(!lens_equivalent(&lens(5, 1), &lens(7, 1), false));
        assert!(!lens_equivalent(&lens(5, 1), &lens(7, 1), true));
        assert!(lens_equivalent(&lens(2, 1), &lens(2, 1), true));
    }

    #[test]
    fn map_f_examples() {
        assert_eq!(map_f(&par(Sign::Plus, 2, 3)), (19, 10));
        assert_eq!(map_f(&par(Sign::Minus, 9, 11)), (499, 460));
        assert_eq!(map_f(&par(Sign::Plus, 1, 1)), (3, 0));
    }

    #[test]
    fn identify_pg() {
        assert_eq!(identify_from_pg(19, 10), Some(par(Sign::Plus, 2, 3)));
        assert_eq!(identify_from_pg(499, 450), Some(par(Sign::Plus, 7, 18)));
        assert_eq!(identify_from_pg(19, 11), None);
        assert_eq!(identify_from_pg(3, 0), Some(par(Sign::Plus, 1, 1)));
        assert_eq!(identify_from_pg(5, 2), Some(par(Sign::Minus, 1, 1)));
        assert_eq!(identify_from_pg(23, 10), None);
        assert_eq!(identify_from_pg(10, 20), None);
    }

    #[test]
    fn identify_lens() {
        assert_eq!(identify_from_lens(&lens(19, 7)), vec![par(Sign::Plus, 2, 3)]);
        // 7 ≡ -12 and 7·11 ≡ 1 mod 19
        assert_eq!(identify_from_lens(&lens(19, 11)), vec![par(Sign::Plus, 2, 3)]);
        assert_eq!(identify_from_lens(&lens(19, 13)), vec![par(Sign::Minus, 1, 3)]);
        assert_eq!(identify_from_lens(&lens(19, 4)), vec![]);
        assert_eq!(identify_from_lens(&lens(23, 7)), vec![]);
    }

    #[test]
    fn moser_examples() {
        assert_eq!(moser_lens(2, 3, 7, 1), Some(lens(7, 3)));
        assert_eq!(moser_lens(2, 3, 6, 1), None);
        assert_eq!(moser_lens(3, 4, 13, 1), Some(lens(13, 4)));
        assert_eq!(moser_lens(2, 4, 9, 1), None);
    }

    #[test]
    fn gw_cable_examples() {
        assert_eq!(gw_cable_lens(2, 3, Sign::Plus).unwrap(), (25, lens(25, 9)));
        assert_eq!(gw_cable_lens(2, 3, Sign::Minus).unwrap(), (23, lens(23, 16)));
        assert_eq!(gw_cable_lens(2, 5, Sign::Plus).unwrap(), (41, lens(41, 25)));
    }
}
