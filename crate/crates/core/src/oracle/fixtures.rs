//! Operations read off the contour-plot figures.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::chain::{BinaryOperation, Element};
use crate::error::{Error, Result};
use crate::format;
use crate::order::LinearOrder;

const FIGURES: &str = include_str!("../../fixtures/figures.txt");

struct Entry {
    caption: String,
    op: BinaryOperation,
}

fn catalog() -> &'static BTreeMap<String, Entry> {
    static CATALOG: OnceLock<BTreeMap<String, Entry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(FIGURES).expect("checked-in fixture file parses"))
}

/// Records are introduced by a `# name: caption` comment line.
fn parse_catalog(text: &str) -> Result<BTreeMap<String, Entry>> {
    let mut entries = BTreeMap::new();
    let mut current: Option<(String, String, String)> = None;
    let mut flush = |current: Option<(String, String, String)>| -> Result<()> {
        if let Some((name, caption, body)) = current {
            let op = format::table_from_text(&body)?;
            entries.insert(name, Entry { caption, op });
        }
        Ok(())
    };
    for line in text.lines() {
        let header = line
            .strip_prefix("# ")
            .and_then(|rest| rest.split_once(": "))
            .filter(|(name, _)| !name.contains(' '));
        match header {
            Some((name, caption)) => {
                flush(current.take())?;
                current = Some((name.to_string(), caption.to_string(), String::new()));
            }
            None => {
                if let Some((_, _, body)) = current.as_mut() {
                    body.push_str(line);
                    body.push('\n');
                }
            }
        }
    }
    flush(current)?;
    Ok(entries)
}

pub fn fixture(name: &str) -> Result<BinaryOperation> {
    catalog()
        .get(name)
        .map(|e| e.op.clone())
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn fixture_caption(name: &str) -> Result<&'static str> {
    catalog()
        .get(name)
        .map(|e| e.caption.as_str())
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

/// Fixture names in catalog order.
pub fn fixture_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = catalog().keys().map(String::as_str).collect();
    // fig2 before fig11
    names.sort_by_key(|name| {
        let digits: String = name.chars().filter(char::is_ascii_digit).collect();
        (digits.parse::<u32>().unwrap_or(0), *name)
    });
    names
}

/// The two orderings drawn as profiles: one single-peaked, one with two
/// peaks.
pub const PROFILE_FIXTURES: &[(&str, &[Element])] = &[
    ("peaked", &[2, 3, 4, 1, 5]),
    ("two-peaks", &[5, 2, 1, 3, 4]),
];

pub fn profile_fixture(name: &str) -> Result<LinearOrder> {
    PROFILE_FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, seq)| LinearOrder::new(seq.to_vec()).expect("fixture orders are permutations"))
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete() {
        let names = fixture_names();
        assert_eq!(
            names,
            vec![
                "fig1", "fig2", "fig3", "fig4", "fig5a", "fig5b", "fig6a", "fig6b", "fig6c",
                "fig6d", "fig7", "fig8", "fig9", "fig11a", "fig11b", "fig12", "fig13", "fig14"
            ]
        );
        assert!(fixture_caption("fig13")
            .unwrap()
            .contains("not bisymmetric"));
    }

    #[test]
    fn unknown_names() {
        assert_eq!(fixture("fig10"), Err(Error::UnknownFixture("fig10".into())));
        assert!(profile_fixture("nope").is_err());
    }

    #[test]
    fn fig1_reads_correctly() {
        let f = fixture("fig1").unwrap();
        assert_eq!(f.get(1, 2), 1);
        assert_eq!([f.get(1, 1), f.get(2, 1), f.get(2, 2)], [2, 2, 2]);
    }
}
