//! Serialize [`BigCount`] as a decimal string.

use serde::{Deserialize, Deserializer, Serializer};

use crate::graph::BigCount;

pub fn serialize<S: Serializer>(v: &BigCount, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigCount, D::Error> {
    let text = String::deserialize(d)?;
    text.parse().map_err(serde::de::Error::custom)
}
