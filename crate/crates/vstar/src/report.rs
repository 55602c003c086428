//! Order reports: the serializable result of any order computation.
//!
//! JSON schema:
//! `{ "group": str, "field_k": int, "order": str(decimal), "n": int|null,
//!    "method": str, "steps": [...], "hypotheses": {...} }`
//! with orders as decimal strings to stay width-safe.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::gf2k::FieldSpec;
use crate::group::GroupTable;

/// One entry of the reduction/derivation chain, top-down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    /// `"brute"`, `"norm-quotient"`, `"central-reduction"` or `"formula:*"`.
    pub kind: String,
    pub group: String,
    pub group_order: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub central_element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kernel: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub quotient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub norm_subgroup_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub norm_subgroup_central: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub child_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl StepRecord {
    pub fn new(kind: impl Into<String>, group: &GroupTable) -> Self {
        StepRecord {
            kind: kind.into(),
            group: group.name().to_string(),
            group_order: group.order() as u64,
            central_element: None,
            kernel: None,
            quotient: None,
            norm_subgroup_order: None,
            norm_subgroup_central: None,
            child_order: None,
            detail: None,
        }
    }
}

/// Result of an order computation for the unitary subgroup of FG.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub group: String,
    pub field_k: u32,
    #[serde(with = "biguint_decimal")]
    pub order: BigUint,
    /// Multiplier n with order = n * |F|^((|G| + |G_T|)/2 - 1), when the
    /// order is an exact multiple of that power.
    pub n: Option<u64>,
    pub method: String,
    pub steps: Vec<StepRecord>,
    pub hypotheses: BTreeMap<String, bool>,
}

impl OrderReport {
    /// Assembles a report, deriving the multiplier and recording the
    /// divisibility property of the order as a hypothesis flag.
    pub fn build(
        group: &GroupTable,
        field: FieldSpec,
        order: BigUint,
        method: impl Into<String>,
        steps: Vec<StepRecord>,
        mut hypotheses: BTreeMap<String, bool>,
    ) -> Self {
        let base = conjecture_power(group, field);
        let (n, divisible) = if (&order % &base) == BigUint::from(0u32) {
            let q = &order / &base;
            (q.try_into().ok(), true)
        } else {
            (None, false)
        };
        hypotheses.insert("order_divisible_by_conjectured_power".to_string(), divisible);
        OrderReport {
            group: group.name().to_string(),
            field_k: field.k(),
            order,
            n,
            method: method.into(),
            steps,
            hypotheses,
        }
    }

    pub fn all_hypotheses_hold(&self) -> bool {
        self.hypotheses.values().all(|&v| v)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(json: &str) -> crate::error::Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    /// CSV row mirroring the JSON schema minus steps.
    pub fn to_csv_row(&self) -> String {
        let n = self.n.map_or("".to_string(), |n| n.to_string());
        let hyp: Vec<String> = self
            .hypotheses
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "{},{},{},{},{},{}",
            self.group,
            self.field_k,
            self.order,
            n,
            self.method,
            hyp.join(";")
        )
    }

    pub const CSV_HEADER: &'static str = "group,field_k,order,n,method,hypotheses";
}

/// `(|G| + |G_T|)/2 - 1`, the exponent in the divisibility property.
pub fn conjecture_exponent(group: &GroupTable) -> u64 {
    ((group.order() + group.torsion_set().len()) / 2 - 1) as u64
}

/// `|F|^((|G| + |G_T|)/2 - 1)`.
pub fn conjecture_power(group: &GroupTable, field: FieldSpec) -> BigUint {
    BigUint::from(field.order()).pow(conjecture_exponent(group) as u32)
}

mod biguint_decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse::<BigUint>()
            .map_err(|e| serde::de::Error::custom(format!("bad decimal bigint: {e}")))
    }
}
