//! Line-oriented model files and CSV level lists.
//!
//! ```text
//! # comment
//! name ClOH
//! modes 3
//! order 8
//! delta 0
//! reference 2867
//! omega 1 739.685
//! coef 2 0 0 -3.517
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::counting::MonomialSignature;

use super::{EnergyLevel, MoleculeModel, SpectrumError};

fn parse_error(line: usize, message: impl Into<String>) -> SpectrumError {
    SpectrumError::Parse {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, what: &str, text: &str) -> Result<T, SpectrumError> {
    text.parse()
        .map_err(|_| parse_error(line, format!("invalid {what} `{text}`")))
}

/// Parses a model file. Structural problems are errors; semantic checks
/// (distinct frequencies, degree bounds) are left to `validate_model`.
pub fn parse_model(text: &str) -> Result<MoleculeModel, SpectrumError> {
    let mut name = None;
    let mut modes: Option<usize> = None;
    let mut order = None;
    let mut delta = None;
    let mut reference = None;
    let mut omega: BTreeMap<usize, f64> = BTreeMap::new();
    let mut coefficients = BTreeMap::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, rest) = trimmed
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((trimmed, ""));
        let fields: Vec<&str> = rest.split_whitespace().collect();
        let single = |what: &str| -> Result<&str, SpectrumError> {
            match fields.as_slice() {
                [value] => Ok(value),
                _ => Err(parse_error(
                    line,
                    format!("`{what}` takes exactly one value"),
                )),
            }
        };
        let duplicate = |what: &str| parse_error(line, format!("duplicate `{what}`"));
        let need_modes =
            |what: &str| modes.ok_or_else(|| parse_error(line, format!("`{what}` before `modes`")));
        match key {
            "name" => {
                if rest.is_empty() {
                    return Err(parse_error(line, "`name` needs a value"));
                }
                if name.replace(rest.to_string()).is_some() {
                    return Err(duplicate(key));
                }
            }
            "modes" => {
                let n: usize = number(line, "mode count", single(key)?)?;
                if n == 0 {
                    return Err(parse_error(line, "mode count must be at least 1"));
                }
                if modes.replace(n).is_some() {
                    return Err(duplicate(key));
                }
            }
            "order" => {
                if order
                    .replace(number::<u32>(line, "order", single(key)?)?)
                    .is_some()
                {
                    return Err(duplicate(key));
                }
            }
            "delta" => {
                if delta
                    .replace(number::<f64>(line, "delta", single(key)?)?)
                    .is_some()
                {
                    return Err(duplicate(key));
                }
            }
            "reference" => {
                let value = number::<f64>(line, "reference energy", single(key)?)?;
                if reference.replace(value).is_some() {
                    return Err(duplicate(key));
                }
            }
            "omega" => {
                let n = need_modes(key)?;
                let [k, value] = fields.as_slice() else {
                    return Err(parse_error(line, "`omega` takes a mode index and a value"));
                };
                let k: usize = number(line, "mode index", k)?;
                if k == 0 || k > n {
                    return Err(parse_error(line, format!("mode index {k} outside 1..={n}")));
                }
                let value = number::<f64>(line, "frequency", value)?;
                if omega.insert(k, value).is_some() {
                    return Err(parse_error(line, format!("duplicate `omega {k}`")));
                }
            }
            "coef" => {
                let n = need_modes(key)?;
                if fields.len() != n + 1 {
                    return Err(parse_error(
                        line,
                        format!(
                            "`coef` takes {n} powers and a value, got {} fields",
                            fields.len()
                        ),
                    ));
                }
                let powers = fields[..n]
                    .iter()
                    .map(|f| number::<u32>(line, "power", f))
                    .collect::<Result<Vec<_>, _>>()?;
                let value = number::<f64>(line, "coefficient", fields[n])?;
                let sig = MonomialSignature::new(powers);
                if coefficients.contains_key(&sig) {
                    return Err(parse_error(
                        line,
                        format!("duplicate coefficient for {sig}"),
                    ));
                }
                coefficients.insert(sig, value);
            }
            other => return Err(parse_error(line, format!("unknown key `{other}`"))),
        }
    }

    let end = text.lines().count() + 1;
    let n = modes.ok_or_else(|| parse_error(end, "missing `modes`"))?;
    let order = order.ok_or_else(|| parse_error(end, "missing `order`"))?;
    let name = name.ok_or_else(|| parse_error(end, "missing `name`"))?;
    if let Some(k) = (1..=n).find(|k| !omega.contains_key(k)) {
        return Err(parse_error(end, format!("missing `omega {k}`")));
    }
    Ok(MoleculeModel {
        name,
        n,
        omega: omega.into_values().collect(),
        coefficients,
        order,
        delta: delta.unwrap_or(0.0),
        reference_energy: reference.unwrap_or(0.0),
    })
}

/// Serializes a model; coefficients are written in graded-lex order and
/// numbers in shortest round-trip form, so parsing the output reproduces
/// the model exactly.
pub fn write_model(model: &MoleculeModel) -> String {
    let mut out = String::new();
    writeln!(out, "name {}", model.name).unwrap();
    writeln!(out, "modes {}", model.n).unwrap();
    writeln!(out, "order {}", model.order).unwrap();
    writeln!(out, "delta {}", model.delta).unwrap();
    writeln!(out, "reference {}", model.reference_energy).unwrap();
    for (k, w) in model.omega.iter().enumerate() {
        writeln!(out, "omega {} {}", k + 1, w).unwrap();
    }
    for (sig, value) in &model.coefficients {
        out.push_str("coef");
        for r in sig.powers() {
            write!(out, " {r}").unwrap();
        }
        writeln!(out, " {value}").unwrap();
    }
    out
}

/// CSV with header `n1,...,nn,energy_cm1`; energies to 4 decimals.
pub fn write_levels_csv(levels: &[EnergyLevel], n: usize) -> String {
    let mut out = String::new();
    for k in 1..=n {
        write!(out, "n{k},").unwrap();
    }
    out.push_str("energy_cm1\n");
    for level in levels {
        for q in level.state.quanta() {
            write!(out, "{q},").unwrap();
        }
        writeln!(out, "{:.4}", level.energy).unwrap();
    }
    out
}
