use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratfun::{int, serde_rat, BigRat};

/// Position of `v_i` in the stored triple `(v1, v2, v3)`.
///
/// The distinct-index statements are instantiated with `(i, j, k) = (2, 1, 3)`.
pub const I: usize = 1;
/// Position of `v_j`.
pub const J: usize = 0;
/// Position of `v_k`.
pub const K: usize = 2;

/// Root-system parameters `(v1, v2, v3)` with `v1 + v2 + v3 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VTriple {
    v: [BigRat; 3],
}

impl VTriple {
    pub fn new(v1: BigRat, v2: BigRat, v3: BigRat) -> Result<Self> {
        if !(&v1 + &v2 + &v3).is_zero() {
            return Err(Error::Domain(format!(
                "v-parameters must sum to zero, got ({v1}, {v2}, {v3})"
            )));
        }
        Ok(VTriple { v: [v1, v2, v3] })
    }

    pub(crate) fn from_array_unchecked(v: [BigRat; 3]) -> Self {
        debug_assert!((&v[0] + &v[1] + &v[2]).is_zero());
        VTriple { v }
    }

    /// Solves `mu = v_i - v_j`, `nu = -3 v_k`, `v_i + v_j + v_k = 0`.
    pub fn from_mu_nu(mu: &BigRat, nu: &BigRat) -> Self {
        let third = nu / int(3);
        let mut v: [BigRat; 3] = Default::default();
        v[K] = -&third;
        v[I] = (&third + mu) / int(2);
        v[J] = (&third - mu) / int(2);
        VTriple { v }
    }

    /// Inverts [`VTriple::alphas`].
    pub fn from_alphas(alpha: &[BigRat; 3]) -> Result<Self> {
        if !(&alpha[0] + &alpha[1] + &alpha[2] + int(2)).is_zero() {
            return Err(Error::Domain("alpha0 + alpha1 + alpha2 must equal -2".into()));
        }
        // alpha1 = 2(v_j - v_i), alpha2 = 2(v_i - v_k), sum zero.
        let a1 = &alpha[1] / int(2);
        let a2 = &alpha[2] / int(2);
        let vi = (&a2 - &a1) / int(3);
        let vj = &vi + &a1;
        let vk = &vi - &a2;
        let mut v: [BigRat; 3] = Default::default();
        v[I] = vi;
        v[J] = vj;
        v[K] = vk;
        Ok(VTriple { v })
    }

    pub fn as_array(&self) -> &[BigRat; 3] {
        &self.v
    }

    /// `v_n` for the literal label `n ∈ {1, 2, 3}`.
    pub fn get(&self, n: usize) -> &BigRat {
        &self.v[n - 1]
    }

    pub fn vi(&self) -> &BigRat {
        &self.v[I]
    }

    pub fn vj(&self) -> &BigRat {
        &self.v[J]
    }

    pub fn vk(&self) -> &BigRat {
        &self.v[K]
    }

    /// `mu = v_i - v_j`.
    pub fn mu(&self) -> BigRat {
        self.vi() - self.vj()
    }

    /// `nu = -3 v_k`.
    pub fn nu(&self) -> BigRat {
        -(self.vk() * int(3))
    }

    /// `(alpha0, alpha1, alpha2) = (2(v_k - v_j) - 2, 2(v_j - v_i), 2(v_i - v_k))`.
    pub fn alphas(&self) -> [BigRat; 3] {
        [
            (self.vk() - self.vj()) * int(2) - int(2),
            (self.vj() - self.vi()) * int(2),
            (self.vi() - self.vk()) * int(2),
        ]
    }

    /// Adds `d[n]` to each coordinate.
    pub(crate) fn shifted(&self, d: [BigRat; 3]) -> VTriple {
        let [a, b, c] = d;
        VTriple::from_array_unchecked([&self.v[0] + a, &self.v[1] + b, &self.v[2] + c])
    }
}

impl fmt::Display for VTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.v[0], self.v[1], self.v[2])
    }
}

impl Serialize for VTriple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            #[serde(with = "serde_rat")]
            v1: &'a BigRat,
            #[serde(with = "serde_rat")]
            v2: &'a BigRat,
            #[serde(with = "serde_rat")]
            v3: &'a BigRat,
        }
        Raw {
            v1: &self.v[0],
            v2: &self.v[1],
            v3: &self.v[2],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VTriple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(with = "serde_rat")]
            v1: BigRat,
            #[serde(with = "serde_rat")]
            v2: BigRat,
            #[serde(with = "serde_rat")]
            v3: BigRat,
        }
        let r = Raw::deserialize(d)?;
        VTriple::new(r.v1, r.v2, r.v3).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::rat;

    #[test]
    fn mu_nu_round_trip() {
        let v = VTriple::from_mu_nu(&rat(2, 3), &int(0));
        assert_eq!(v.mu(), rat(2, 3));
        assert_eq!(v.nu(), int(0));
        assert!((v.vi() + v.vj() + v.vk()).is_zero());
        let a = v.alphas();
        assert_eq!(&a[0] + &a[1] + &a[2], int(-2));
        assert_eq!(VTriple::from_alphas(&a).unwrap(), v);
    }

    #[test]
    fn rejects_nonzero_sum() {
        assert!(VTriple::new(int(1), int(0), int(0)).is_err());
    }
}
