//! Report rendering: every subcommand produces a JSON value; the CSV
//! renderer flattens it per operation. All numbers are exact — counts as
//! decimal strings, rationals as `p/q` (the `/q` dropped when q = 1).

use num_rational::BigRational;
use num_traits::One;

pub fn rational_string(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn render_json(report: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports are serializable");
    text.push('\n');
    text
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn value_to_field(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::Null => String::new(),
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Key/value listing, one `field,value` row per entry, in the order given.
pub fn csv_fields(rows: &[(&str, &serde_json::Value)]) -> String {
    let mut out = String::from("field,value\n");
    for (name, value) in rows {
        out.push_str(&format!(
            "{},{}\n",
            name,
            csv_escape(&value_to_field(value))
        ));
    }
    out
}

/// Table with a header row and homogeneous records.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.iter().map(|f| csv_escape(f)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}
