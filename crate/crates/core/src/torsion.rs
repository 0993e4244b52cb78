//! Reidemeister–Franz torsion of lens spaces, recorded as multisets of residues.
//!
//! A multiset `{a_1, ..., a_k}` mod `p` stands for `∏ (t^{a_i} - 1)` in
//! `ℤ[ℤ/p]`, evaluated at `ζ_p` after sending the meridian to `t`. With the
//! meridian fixed, two torsions agree iff their sign-closed multisets agree.

use crate::arith::{gcd, inv_mod, modp, mul_mod};
use crate::knot::{Sign, StandardParam};
use crate::poly::{reduce_mod_cyclotomic, LaurentPoly};
use crate::{Error, Result};

/// Largest modulus accepted by [`cyclotomic_torsion_oracle`].
pub const ORACLE_MAX_MODULUS: u64 = 200;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionMultiset {
    modulus: u64,
    residues: Vec<u64>,
    meridian: u64,
}

impl TorsionMultiset {
    /// Torsion with respect to the generator `t`; residues must be units mod `p`.
    pub fn new(modulus: u64, residues: &[i64]) -> Result<Self> {
        Self::with_meridian(modulus, residues, 1)
    }

    /// As [`TorsionMultiset::new`], but the presentation's generator is the
    /// class `meridian` rather than `1`.
    pub fn with_meridian(modulus: u64, residues: &[i64], meridian: i64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        let mut rs = Vec::with_capacity(residues.len());
        for &a in residues {
            let r = modp(a as i128, modulus);
            if gcd(r, modulus) != 1 {
                return Err(Error::NotCoprime(a, modulus as i64));
            }
            rs.push(r);
        }
        rs.sort_unstable();
        let meridian = modp(meridian as i128, modulus);
        if gcd(meridian, modulus) != 1 {
            return Err(Error::NotCoprime(meridian as i64, modulus as i64));
        }
        Ok(Self { modulus, residues: rs, meridian })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn meridian(&self) -> u64 {
        self.meridian
    }

    /// Same torsion written with the meridian as generator.
    pub fn rebased(&self) -> Self {
        let inv = inv_mod(self.meridian as i128, self.modulus).expect("meridian is a unit");
        let mut residues: Vec<u64> =
            self.residues.iter().map(|&a| mul_mod(a, inv, self.modulus)).collect();
        residues.sort_unstable();
        Self { modulus: self.modulus, residues, meridian: 1 }
    }

    /// `{±a_i}` after rebasing; the invariant the Franz test compares.
    fn sign_closed(&self) -> Vec<u64> {
        let b = self.rebased();
        let mut v: Vec<u64> = b
            .residues
            .iter()
            .map(|&a| a.min(self.modulus - a))
            .collect();
        v.sort_unstable();
        v
    }

    fn scaled(&self, u: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .sign_closed()
            .into_iter()
            .map(|a| {
                let b = mul_mod(a, u, self.modulus);
                b.min(self.modulus - b)
            })
            .collect();
        v.sort_unstable();
        v
    }
}

/// `{1, q⁻¹}` for `L(p, q)`.
pub fn torsion_lens(p: u64, q: i64) -> Result<TorsionMultiset> {
    let q_inv = inv_mod(q as i128, p)? as i64;
    TorsionMultiset::new(p, &[1, q_inv])
}

/// `{m, n}` mod `p`, with the knot's meridian sent to `m + n`.
pub fn torsion_berge(par: &StandardParam) -> TorsionMultiset {
    let (m, n) = (par.m() as i64, par.n() as i64);
    TorsionMultiset::with_meridian(par.p(), &[m, n], m + n)
        .expect("m, n and m+n are units mod p")
}

/// Torsion of `p`-surgery on `T(r, s)`, requires `rs ≡ ±1 mod p`: `{r, s}`.
pub fn torsion_torus_surgery(r: u64, s: u64, p: u64) -> Result<TorsionMultiset> {
    let rs = modp((r * s) as i128, p.max(1));
    if p < 2 || gcd(r, s) != 1 || !(rs == 1 || rs == p - 1) {
        return Err(Error::InvalidCoefficient { r, s, p });
    }
    TorsionMultiset::new(p, &[r as i64, s as i64])
}

/// Torsion of `(4rs ± 1)`-surgery on the `(2, 2rs ± 1)`-cable of `T(r, s)`: `{2r, 2s}`.
pub fn torsion_cable_surgery(r: u64, s: u64, sign: Sign) -> Result<TorsionMultiset> {
    if gcd(r, s) != 1 || r == 0 || s == 0 {
        return Err(Error::NotCoprime(r as i64, s as i64));
    }
    let p = (4 * (r * s) as i64 + sign.as_i64()) as u64;
    TorsionMultiset::new(p, &[2 * r as i64, 2 * s as i64])
}

fn same_modulus(a: &TorsionMultiset, b: &TorsionMultiset) -> Result<u64> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch(a.modulus, b.modulus));
    }
    Ok(a.modulus)
}

/// Smallest unit `u` in `[1, p/2]` with `u · {±a_i} = {±b_i}`, if any. Needed
/// when the two presentations send the meridian to different roots of unity.
pub fn torsion_equivalent_up_to_unit(
    a: &TorsionMultiset,
    b: &TorsionMultiset,
) -> Result<Option<u64>> {
    let p = same_modulus(a, b)?;
    if a.residues.len() != b.residues.len() {
        return Ok(None);
    }
    let target = b.sign_closed();
    Ok((1..=p / 2)
        .filter(|&u| gcd(u, p) == 1)
        .find(|&u| a.scaled(u) == target))
}

/// Franz's criterion with both meridians sent to the same `ζ_p`:
/// `∏ (ζ^{a_i} - 1) ≐ ∏ (ζ^{b_i} - 1)` iff `{±a_i} = {±b_i}`.
pub fn franz_equivalent(a: &TorsionMultiset, b: &TorsionMultiset) -> Result<bool> {
    same_modulus(a, b)?;
    Ok(a.residues.len() == b.residues.len() && a.sign_closed() == b.sign_closed())
}

/// Independent check of [`franz_equivalent`]: compare `∏ (t^{a_i} - 1)` and
/// `∏ (t^{b_i} - 1)` in `ℤ[t]/Φ_p` up to `±t^k`. Only for `p` up to
/// [`ORACLE_MAX_MODULUS`].
pub fn cyclotomic_torsion_oracle(a: &TorsionMultiset, b: &TorsionMultiset) -> Result<bool> {
    let p = same_modulus(a, b)?;
    if p > ORACLE_MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p, ORACLE_MAX_MODULUS));
    }
    if a.residues.len() != b.residues.len() {
        return Ok(false);
    }
    let product = |m: &TorsionMultiset| -> LaurentPoly {
        m.rebased().residues.iter().map(|&e| LaurentPoly::t_pow_minus_one(e as i64)).product()
    };
    let x = reduce_mod_cyclotomic(&product(a), p);
    let y = reduce_mod_cyclotomic(&product(b), p);
    Ok(x.associate_eq(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(p: u64, rs: &[i64]) -> TorsionMultiset {
        TorsionMultiset::new(p, rs).unwrap()
    }

    #[test]
    fn lens_torsion() {
        assert_eq!(torsion_lens(7, 2).unwrap().residues(), &[1, 4]);
        assert_eq!(torsion_lens(7, 3).unwrap().residues(), &[1, 5]);
        assert!(torsion_lens(6, 2).is_err());
    }

    #[test]
    fn berge_torsion_matches_its_lens() {
        let par = StandardParam::new(Sign::Plus, 2, 3).unwrap();
        let t = torsion_berge(&par);
        assert_eq!(t.residues(), &[2, 3]);
        assert_eq!(t.meridian(), 5);
        let l = crate::lens::lens_from_berge(&par);
        let tl = torsion_lens(l.p(), l.q() as i64).unwrap();
        assert!(torsion_equivalent_up_to_unit(&t.rebased(), &tl).unwrap().is_some());
        assert_eq!(t.rebased().residues(), &[8, 12]);
    }

    #[test]
    fn classical_lens_classification() {
        // 2·3 ≡ -1 mod 7, so L(7,2) ≅ L(7,3); L(7,1) is different
        let l71 = torsion_lens(7, 1).unwrap();
        let l72 = torsion_lens(7, 2).unwrap();
        let l73 = torsion_lens(7, 3).unwrap();
        assert_eq!(torsion_equivalent_up_to_unit(&l71, &l72).unwrap(), None);
        assert!(torsion_equivalent_up_to_unit(&l72, &l73).unwrap().is_some());
        // with the generator fixed the presentations differ
        assert!(!franz_equivalent(&l72, &l73).unwrap());
        assert!(!cyclotomic_torsion_oracle(&l72, &l73).unwrap());
    }

    #[test]
    fn surgery_torsions() {
        assert_eq!(torsion_torus_surgery(2, 3, 7).unwrap().residues(), &[2, 3]);
        assert!(torsion_torus_surgery(2, 3, 8).is_err());
        let c = torsion_cable_surgery(2, 3, Sign::Plus).unwrap();
        assert_eq!(c.modulus(), 25);
        assert_eq!(c.residues(), &[4, 6]);
    }

    #[test]
    fn franz_examples() {
        assert!(franz_equivalent(&ms(19, &[2, 3]), &ms(19, &[17, 16])).unwrap());
        assert!(franz_equivalent(&ms(19, &[2, 3]), &ms(19, &[3, 2])).unwrap());
        assert!(!franz_equivalent(&ms(19, &[2, 3]), &ms(19, &[2, 5])).unwrap());
        assert!(cyclotomic_torsion_oracle(&ms(7, &[2, 3]), &ms(7, &[3, 2])).unwrap());
        assert!(!cyclotomic_torsion_oracle(&ms(19, &[2, 3]), &ms(19, &[2, 5])).unwrap());
        assert!(cyclotomic_torsion_oracle(&ms(7, &[1, 2]), &ms(7, &[1, -2])).unwrap());
    }

    #[test]
    fn smallest_unit() {
        assert_eq!(
            torsion_equivalent_up_to_unit(&ms(19, &[2, 3]), &ms(19, &[10, 15])).unwrap(),
            Some(5)
        );
        assert_eq!(torsion_equivalent_up_to_unit(&ms(7, &[1, 1]), &ms(7, &[1, 2])).unwrap(), None);
        let a = ms(11, &[1, 2]);
        let b = ms(11, &[3, 6]);
        assert_eq!(torsion_equivalent_up_to_unit(&a, &b).unwrap(), Some(3));
        assert_eq!(torsion_equivalent_up_to_unit(&a, &a).unwrap(), Some(1));
    }

    #[test]
    fn errors() {
        assert_eq!(
            franz_equivalent(&ms(7, &[1]), &ms(11, &[1])),
            Err(Error::ModulusMismatch(7, 11))
        );
        assert_eq!(
            cyclotomic_torsion_oracle(&ms(211, &[1]), &ms(211, &[1])),
            Err(Error::ModulusTooLarge(211, ORACLE_MAX_MODULUS))
        );
        assert!(TorsionMultiset::new(6, &[2]).is_err());
        assert!(TorsionMultiset::new(1, &[]).is_err());
    }

    #[test]
    fn oracle_agrees_on_small_prime_moduli() {
        for p in [5u64, 7, 11] {
            let all: Vec<TorsionMultiset> = (1..p as i64)
                .flat_map(|a| (a..p as i64).map(move |b| (a, b)))
                .map(|(a, b)| ms(p, &[a, b]))
                .collect();
            for x in &all {
                for y in &all {
                    assert_eq!(
                        franz_equivalent(x, y).unwrap(),
                        cyclotomic_torsion_oracle(x, y).unwrap(),
                        "{x:?} {y:?}"
                    );
                }
            }
        }
    }
}
