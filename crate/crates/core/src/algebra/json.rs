//! JSON form of a polynomial: a list of `{"coeff": "<decimal>", "exps": {var: int}}`
//! in descending graded-lex order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, Polynomial, Var};

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: String,
    exps: BTreeMap<String, i64>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms()
            .rev()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                exps: m
                    .exponents()
                    .iter()
                    .map(|(v, e)| (v.name().to_string(), *e))
                    .collect(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Polynomial, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut out = Polynomial::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            if t.exps.keys().any(String::is_empty) {
                return Err(serde::de::Error::custom("empty variable name"));
            }
            let m = Monomial::from_exponents(t.exps.iter().map(|(v, e)| (Var::new(v), *e)));
            out.add_term(m, c);
        }
        Ok(out)
    }
}
