//! Small serialization helpers shared by the JSON export surfaces.

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::cyclo::Rational;
use crate::{Error, Result};

/// Renders an exact rational as the `[num, den]` pair used by every JSON
/// interface of this crate. All quantities in the artifact are tiny, so a
/// value outside i64 range indicates a bug upstream.
pub fn rational_value(r: &Rational) -> Result<Value> {
    let num = r.numer().to_i64().ok_or_else(|| {
        Error::Internal(format!("rational numerator {} exceeds i64", r.numer()))
    })?;
    let den = r.denom().to_i64().ok_or_else(|| {
        Error::Internal(format!("rational denominator {} exceeds i64", r.denom()))
    })?;
    Ok(json!([num, den]))
}
