//! Serde helpers that render big counts as decimal strings, since they
//! overflow every native JSON number type.

use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::invariants::BigCount;

pub(crate) fn one<S: Serializer>(value: &BigCount, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub(crate) fn many<S: Serializer>(values: &[BigCount], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

pub(crate) fn optional<S: Serializer>(value: &Option<BigCount>, serializer: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => serializer.collect_str(v),
        None => serializer.serialize_none(),
    }
}
