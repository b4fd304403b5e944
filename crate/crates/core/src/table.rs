//! Text export of the multiplication table.

use std::fmt::Write;
use std::str::FromStr;

use thiserror::Error;

use crate::basis::{basis_product, BasisUnit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown table format `{0}` (expected csv or markdown)")]
pub struct UnknownFormat(pub String);

impl FromStr for TableFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "markdown" | "md" => Ok(Self::Markdown),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

/// Full 16×16 table. Row/column headers are unit tokens; cells are signed
/// tokens such as `+i3` or `-1`. CSV leaves the corner field empty.
pub fn export_table(format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let header: Vec<&str> = BasisUnit::ALL.iter().map(|u| u.token()).collect();
            writeln!(out, ",{}", header.join(",")).unwrap();
            for a in BasisUnit::ALL {
                out.push_str(a.token());
                for b in BasisUnit::ALL {
                    write!(out, ",{}", basis_product(a, b)).unwrap();
                }
                out.push('\n');
            }
        }
        TableFormat::Markdown => {
            out.push_str("|   |");
            for u in BasisUnit::ALL {
                write!(out, " {u} |").unwrap();
            }
            out.push_str("\n|---|");
            out.push_str(&"---|".repeat(16));
            out.push('\n');
            for a in BasisUnit::ALL {
                write!(out, "| **{a}** |").unwrap();
                for b in BasisUnit::ALL {
                    write!(out, " {} |", basis_product(a, b)).unwrap();
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_shape() {
        let csv = export_table(TableFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 17);
        assert!(lines.iter().all(|l| l.split(',').count() == 17));
        // e7·e7
        assert_eq!(lines[16].split(',').nth(16), Some("+1"));
    }

    #[test]
    fn markdown_cell() {
        let md = export_table(TableFormat::Markdown);
        let row = md.lines().find(|l| l.starts_with("| **i2** |")).unwrap();
        let cells: Vec<&str> = row.split('|').map(str::trim).collect();
        // cells[0] is empty, cells[1] is the row header, cells[2] is column `1`
        assert_eq!(cells[3], "-i3");
    }

    #[test]
    fn unknown_format() {
        assert!("xml".parse::<TableFormat>().is_err());
        assert_eq!("CSV".parse(), Ok(TableFormat::Csv));
    }
}
