//! Multisets of correlation values.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Correlation value → multiplicity, kept sorted by value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DistributionTable {
    entries: BTreeMap<i64, u64>,
}

impl DistributionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: i64, count: u64) {
        if count > 0 {
            *self.entries.entry(value).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, value: i64) -> u64 {
        self.entries.get(&value).copied().unwrap_or(0)
    }

    /// `(value, multiplicity)` pairs in ascending value order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.entries.iter().map(|(&v, &c)| (v, c))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries().all(|(v, c)| self.multiplicity(-v) == c)
    }

    pub fn max_abs(&self) -> Option<i64> {
        self.entries.keys().map(|v| v.abs()).max()
    }

    /// `{"value": multiplicity}` with keys in ascending numeric order.
    pub fn to_json_value(&self) -> Value {
        let map: Map<String, Value> = self
            .entries()
            .map(|(v, c)| (v.to_string(), Value::from(c)))
            .collect();
        Value::Object(map)
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Internal(format!("malformed distribution JSON: {msg}"));
        let value: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let object = value
            .as_object()
            .ok_or_else(|| bad("expected an object".into()))?;
        let mut table = DistributionTable::new();
        for (key, count) in object {
            let v = key
                .trim_start_matches('+')
                .parse::<i64>()
                .map_err(|e| bad(format!("key {key:?}: {e}")))?;
            let c = count
                .as_u64()
                .ok_or_else(|| bad(format!("multiplicity for {key:?}")))?;
            table.add(v, c);
        }
        Ok(table)
    }

    /// `value,multiplicity` lines.
    pub fn to_csv(&self) -> String {
        self.entries().map(|(v, c)| format!("{v},{c}\n")).collect()
    }
}

impl FromIterator<i64> for DistributionTable {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut table = DistributionTable::new();
        for v in iter {
            table.add(v, 1);
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_follow_numeric_order() {
        let table: DistributionTable = [3, -1, 1, -3, 1, -1].into_iter().collect();
        assert_eq!(table.to_json(), r#"{"-3":1,"-1":2,"1":2,"3":1}"#);
        assert_eq!(
            DistributionTable::from_json(&table.to_json()).unwrap(),
            table
        );
        assert_eq!(table.to_csv(), "-3,1\n-1,2\n1,2\n3,1\n");
        assert!(table.is_symmetric());
        assert_eq!(table.total(), 6);
        assert_eq!(table.max_abs(), Some(3));
    }

    #[test]
    fn from_json_accepts_explicit_plus_and_rejects_garbage() {
        let t = DistributionTable::from_json(r#"{"+1":1,"-1":1}"#).unwrap();
        assert_eq!(t.multiplicity(1), 1);
        assert!(DistributionTable::from_json("[1]").is_err());
        assert!(DistributionTable::from_json(r#"{"x":1}"#).is_err());
        assert!(DistributionTable::from_json(r#"{"1":-1}"#).is_err());
    }

    #[test]
    fn asymmetric_table_detected() {
        let t: DistributionTable = [1, 1, -1].into_iter().collect();
        assert!(!t.is_symmetric());
    }
}
