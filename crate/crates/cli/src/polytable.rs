//! Polynomial selection: `--poly`, the optional user table named by
//! `ARITHCORR_POLY_TABLE`, and the built-in table, in that order.

use std::collections::BTreeMap;
use std::path::Path;

use arithcorr::gf2m::{builtin_polynomials, Polynomial};

use crate::UsageError;

pub const TABLE_ENV: &str = "ARITHCORR_POLY_TABLE";

/// User polynomials keyed by degree, in file order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyTable {
    entries: BTreeMap<u32, Vec<Polynomial>>,
}

impl PolyTable {
    /// Parses lines of the form `m,<polynomial>` where the polynomial is a
    /// hex mask (`4,0x13`) or an exponent list (`4,4,1,0`). Blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, UsageError> {
        let mut entries: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad =
                |msg: String| UsageError(format!("polynomial table line {}: {msg}", lineno + 1));
            let (m, rest) = line
                .split_once(',')
                .ok_or_else(|| bad("expected `m,polynomial`".into()))?;
            let m: u32 = m.trim().parse().map_err(|e| bad(format!("degree: {e}")))?;
            let poly: Polynomial = rest.parse().map_err(|e| bad(format!("{e}")))?;
            if poly.degree() != m {
                return Err(bad(format!("{poly} has degree {}, not {m}", poly.degree())));
            }
            let list = entries.entry(m).or_default();
            if !list.contains(&poly) {
                list.push(poly);
            }
        }
        Ok(PolyTable { entries })
    }

    pub fn load(path: &Path) -> Result<Self, UsageError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Loads the table named by the environment, or an empty one.
    pub fn from_env() -> Result<Self, UsageError> {
        match std::env::var_os(TABLE_ENV) {
            Some(path) if !path.is_empty() => Self::load(Path::new(&path)),
            _ => Ok(PolyTable::default()),
        }
    }

    pub fn get(&self, m: u32) -> &[Polynomial] {
        self.entries.get(&m).map(Vec::as_slice).unwrap_or(&[])
    }

    /// User entries first, then built-in ones, without duplicates.
    pub fn all_for(&self, m: u32) -> Vec<Polynomial> {
        let mut out = self.get(m).to_vec();
        for p in builtin_polynomials(m) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    pub fn default_for(&self, m: u32) -> Option<Polynomial> {
        self.all_for(m).first().copied()
    }
}

/// The polynomial to use for degree `m`: explicit text if given, else the
/// table default.
pub fn resolve(
    m: u32,
    explicit: Option<&str>,
    table: &PolyTable,
) -> Result<Polynomial, UsageError> {
    match explicit {
        Some(text) => text.parse().map_err(|e| UsageError(format!("{e}"))),
        None => table
            .default_for(m)
            .ok_or_else(|| UsageError(format!("no polynomial known for degree {m}; pass --poly"))),
    }
}
