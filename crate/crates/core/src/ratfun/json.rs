//! JSON value forms: a rational is the string `"p/q"` (or `"p"` when `q = 1`),
//! a polynomial is an ascending array of such strings and a rational function
//! is `{"num": [...], "den": [...]}`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::{BigRat, Poly, RatFun};
use crate::error::{Error, Result};

pub fn rat_to_string(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"` or `"p/q"`. Non-canonical input such as `"2/4"` is accepted and
/// reduced.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRat::new(n, d))
}

/// `#[serde(with = "...")]` adapter for [`BigRat`] fields.
pub mod serde_rat {
    use super::*;

    pub fn serialize<S: Serializer>(q: &BigRat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(de::Error::custom)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs().iter().map(rat_to_string))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Ok(Poly::new(coeffs))
    }
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFun", 2)?;
        st.serialize_field("num", self.num())?;
        st.serialize_field("den", self.den())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            num: Poly,
            den: Poly,
        }
        let raw = Raw::deserialize(d)?;
        RatFun::new(raw.num, raw.den).map_err(de::Error::custom)
    }
}

impl FromStr for RatFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn scalar_forms() {
        assert_eq!(rat_to_string(&rat(-4, 3)), "-4/3");
        assert_eq!(rat_to_string(&int(7)), "7");
        assert_eq!(parse_rat("8/27").unwrap(), rat(8, 27));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn ratfun_form() {
        let f = RatFun::new(Poly::from_ints(&[0, 8]), Poly::from_ints(&[1, 0, 2])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":["0","4"],"den":["1/2","0","1"]}"#);
        assert_eq!(s.parse::<RatFun>().unwrap(), f);
        assert!(r#"{"num":["1"],"den":[]}"#.parse::<RatFun>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-50i64..50, 1i64..20), 0..6)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn json_round_trip_is_bit_exact(n in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let f = RatFun::new(n, d).unwrap();
            let text = serde_json::to_string(&f).unwrap();
            let back: RatFun = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }
}
