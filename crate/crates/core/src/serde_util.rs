use serde::Serializer;

use crate::linalg::Rational;

pub(crate) fn opt_rational<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}
