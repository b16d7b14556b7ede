//! Exact integers travel through JSON as decimal strings.

use num_bigint::BigInt;
use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let raw = String::deserialize(d)?;
    raw.trim()
        .parse::<BigInt>()
        .map_err(|e| D::Error::custom(format!("bad integer {raw:?}: {e}")))
}

pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|r| {
            r.trim()
                .parse::<BigInt>()
                .map_err(|e| D::Error::custom(format!("bad integer {r:?}: {e}")))
        })
        .transpose()
    }
}

/// `(x, y)` as a two-element array of strings.
pub mod pair {
    use super::*;
    use serde::ser::SerializeTuple;

    pub fn serialize<S: Serializer>(v: &(BigInt, BigInt), s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&v.0.to_string())?;
        t.serialize_element(&v.1.to_string())?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(BigInt, BigInt), D::Error> {
        let (x, y): (String, String) = Deserialize::deserialize(d)?;
        let int = |r: &str| {
            r.trim()
                .parse::<BigInt>()
                .map_err(|e| D::Error::custom(format!("bad integer {r:?}: {e}")))
        };
        Ok((int(&x)?, int(&y)?))
    }
}
