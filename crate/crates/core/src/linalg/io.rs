//! JSON forms for scalars and vectors.
//!
//! A component is a `[re, im]` pair. Exact parts are strings (`"p"` or
//! `"p/q"`); float parts are plain numbers. A vector's mode is inferred
//! from its components, and mixing the two forms in one vector is a
//! deserialization error.

use num_complex::Complex64;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::exact::{format_rational, parse_rational, ExactComplex};
use super::{Scalar, Vector, VectorData};

/// One half of a serialized `[re, im]` pair.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RawComponent {
    Num(f64),
    Str(String),
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(z) => {
                [format_rational(&z.re), format_rational(&z.im)].serialize(serializer)
            }
            Scalar::Float(z) => [z.re, z.im].serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: [RawComponent; 2] = Deserialize::deserialize(deserializer)?;
        pair_to_scalar(&raw).map_err(de::Error::custom)
    }
}

fn pair_to_scalar(pair: &[RawComponent; 2]) -> Result<Scalar, String> {
    match (&pair[0], &pair[1]) {
        (RawComponent::Str(re), RawComponent::Str(im)) => {
            let re = parse_rational(re).ok_or_else(|| format!("bad rational: {re:?}"))?;
            let im = parse_rational(im).ok_or_else(|| format!("bad rational: {im:?}"))?;
            Ok(Scalar::Exact(ExactComplex::new(re, im)))
        }
        (RawComponent::Num(re), RawComponent::Num(im)) => {
            Ok(Scalar::Float(Complex64::new(*re, *im)))
        }
        _ => Err("component mixes a rational string with a float number".to_string()),
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.data {
            VectorData::Exact(v) => {
                let items: Vec<[String; 2]> = v
                    .iter()
                    .map(|z| [format_rational(&z.re), format_rational(&z.im)])
                    .collect();
                items.serialize(serializer)
            }
            VectorData::Float(v) => {
                let items: Vec<[f64; 2]> = v.iter().map(|z| [z.re, z.im]).collect();
                items.serialize(serializer)
            }
        }
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<[RawComponent; 2]> = Deserialize::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(de::Error::custom("vector must have dimension >= 1"));
        }
        let mut scalars = Vec::with_capacity(raw.len());
        for pair in &raw {
            scalars.push(pair_to_scalar(pair).map_err(de::Error::custom)?);
        }
        let exact = scalars.iter().all(|s| matches!(s, Scalar::Exact(_)));
        let float = scalars.iter().all(|s| matches!(s, Scalar::Float(_)));
        if exact {
            Ok(Vector::exact(
                scalars
                    .into_iter()
                    .map(|s| match s {
                        Scalar::Exact(z) => z,
                        Scalar::Float(_) => unreachable!(),
                    })
                    .collect(),
            ))
        } else if float {
            Ok(Vector::float(
                scalars
                    .into_iter()
                    .map(|s| match s {
                        Scalar::Float(z) => z,
                        Scalar::Exact(_) => unreachable!(),
                    })
                    .collect(),
            ))
        } else {
            Err(de::Error::custom(
                "vector mixes exact (string) and float (number) components",
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_roundtrip() {
        let v = Vector::exact(vec![
            ExactComplex::from_ints(1, 0),
            ExactComplex::new(
                parse_rational("-4/3").unwrap(),
                parse_rational("2").unwrap(),
            ),
        ]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"[["1","0"],["-4/3","2"]]"#);
        let back: Vector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn float_roundtrip() {
        let v = Vector::float(vec![Complex64::new(0.5, -1.25), Complex64::new(3.0, 0.0)]);
        let json = serde_json::to_string(&v).unwrap();
        let back: Vector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn rejects_mixed_and_malformed() {
        assert!(serde_json::from_str::<Vector>(r#"[["1","0"],[1.0,0.0]]"#).is_err());
        assert!(serde_json::from_str::<Vector>(r#"[]"#).is_err());
        assert!(serde_json::from_str::<Vector>(r#"[["1/0","0"]]"#).is_err());
        assert!(serde_json::from_str::<Vector>(r#"[["abc","0"]]"#).is_err());
    }
}
