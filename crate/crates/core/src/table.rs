//! Distance-table layout: split text tables and the labelled CSV format
//! shared by the emitter and the fixture loader.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::ladder::LadderSpec;
use crate::metrics::{Distance, DistanceMatrix};

/// Column ranges of at most `width` columns each.
pub fn split_ranges(side: usize, width: usize) -> Result<Vec<Range<usize>>> {
    if width == 0 {
        return Err(Error::ZeroSplitWidth);
    }
    Ok((0..side).step_by(width).map(|start| start..(start + width).min(side)).collect())
}

/// Renders the matrix as aligned sub-tables, each holding every row and at
/// most `split_width` columns, in label order.
pub fn sub_tables(matrix: &DistanceMatrix, split_width: usize) -> Result<Vec<String>> {
    let spec = matrix.spec();
    let labels: Vec<String> = spec.vertices().map(|v| spec.label(v)).collect();
    let label_w = labels.iter().map(String::len).max().unwrap_or(1);
    let cell_w = label_w.max(matrix.diameter().to_string().len());
    let ranges = split_ranges(matrix.side(), split_width)?;
    let mut tables = Vec::with_capacity(ranges.len());
    for cols in ranges {
        let mut out = format!("{:label_w$} |", "");
        for label in &labels[cols.clone()] {
            out.push_str(&format!(" {label:>cell_w$}"));
        }
        out.push('\n');
        out.push_str(&format!("{}-+{}\n", "-".repeat(label_w), "-".repeat((cell_w + 1) * cols.len())));
        for (label, row) in labels.iter().zip(matrix.rows()) {
            out.push_str(&format!("{label:<label_w$} |"));
            for d in &row[cols.clone()] {
                out.push_str(&format!(" {d:>cell_w$}"));
            }
            out.push('\n');
        }
        tables.push(out);
    }
    Ok(tables)
}

pub fn emit_table(matrix: &DistanceMatrix, split_width: usize) -> Result<String> {
    Ok(sub_tables(matrix, split_width)?.join("\n"))
}

/// A square table parsed from labelled CSV; the ladder is inferred from the
/// header labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTable {
    pub spec: LadderSpec,
    pub entries: Vec<Vec<Distance>>,
}

fn parse_err(row: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { row, column, message: message.into() }
}

fn loose_label(text: &str) -> Option<(usize, usize)> {
    let body = text.trim().strip_prefix('v').unwrap_or(text.trim());
    if let Some((a, b)) = body.split_once(':').or_else(|| body.split_once('_')) {
        return Some((a.parse().ok()?, b.parse().ok()?));
    }
    let b = body.as_bytes();
    if b.len() == 2 && b.iter().all(u8::is_ascii_digit) {
        return Some(((b[0] - b'0') as usize, (b[1] - b'0') as usize));
    }
    None
}

/// Parses the labelled CSV layout written by [`DistanceMatrix::to_csv`].
/// Rows and columns in errors are 1-based file positions.
pub fn parse_table(text: &str) -> Result<LabeledTable> {
    let mut reader =
        csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut records = Vec::new();
    for (line, rec) in reader.records().enumerate() {
        records.push(rec.map_err(|e| parse_err(line + 1, 1, e.to_string()))?);
    }
    let header = records.first().ok_or_else(|| parse_err(1, 1, "empty table"))?;
    if header.len() < 2 {
        return Err(parse_err(1, 1, "header has no vertex labels"));
    }
    let mut cells = Vec::with_capacity(header.len() - 1);
    for (c, label) in header.iter().enumerate().skip(1) {
        let cell = loose_label(label).ok_or_else(|| parse_err(1, c + 1, format!("bad vertex label `{label}`")))?;
        cells.push(cell);
    }
    let m = cells.iter().map(|c| c.0).max().unwrap_or(0) + 1;
    let n = cells.iter().map(|c| c.1).max().unwrap_or(0);
    let spec = LadderSpec::new(m, n).map_err(|e| parse_err(1, 1, e.to_string()))?;
    let side = spec.vertex_count();
    if cells.len() != side {
        return Err(parse_err(1, 1, format!("header has {} labels, {spec} needs {side}", cells.len())));
    }
    for (v, (c, label)) in spec.vertices().zip(header.iter().enumerate().skip(1)) {
        let parsed = spec.parse_label(label).map_err(|e| parse_err(1, c + 1, e.to_string()))?;
        if parsed != v {
            return Err(parse_err(1, c + 1, format!("expected {} but found `{label}`", spec.label(v))));
        }
    }

    let mut entries = Vec::with_capacity(side);
    for v in spec.vertices() {
        let row = v.idx + 2;
        let rec =
            records.get(v.idx + 1).ok_or_else(|| parse_err(row, 1, format!("missing row for {}", spec.label(v))))?;
        let label = rec.get(0).unwrap_or("");
        if spec.parse_label(label).ok() != Some(v) {
            return Err(parse_err(row, 1, format!("expected row label {} but found `{label}`", spec.label(v))));
        }
        if rec.len() != side + 1 {
            return Err(parse_err(
                row,
                rec.len().min(side + 1),
                format!("row has {} cells, expected {side}", rec.len() - 1),
            ));
        }
        let mut values = Vec::with_capacity(side);
        for (c, cell) in rec.iter().enumerate().skip(1) {
            let value: i64 = cell.parse().map_err(|_| parse_err(row, c + 1, format!("`{cell}` is not an integer")))?;
            if value < 0 {
                return Err(parse_err(row, c + 1, format!("negative value {value}")));
            }
            let value =
                Distance::try_from(value).map_err(|_| parse_err(row, c + 1, format!("value {value} is too large")))?;
            values.push(value);
        }
        entries.push(values);
    }
    if records.len() > side + 1 {
        return Err(parse_err(side + 2, 1, "unexpected extra row"));
    }
    Ok(LabeledTable { spec, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::Ladder;

    fn matrix(m: usize, n: usize) -> DistanceMatrix {
        DistanceMatrix::all_pairs(&Ladder::build(LadderSpec::new(m, n).unwrap()))
    }

    fn body_rows(table: &str) -> usize {
        table.lines().count() - 2
    }

    #[test]
    fn example_splits() {
        let t = sub_tables(&matrix(7, 4), 12).unwrap();
        assert_eq!(t.len(), 2);
        for sub in &t {
            assert_eq!(body_rows(sub), 24);
            assert_eq!(sub.lines().next().unwrap().split_whitespace().count(), 13);
        }
        let t = sub_tables(&matrix(10, 2), 9).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|s| body_rows(s) == 18));
        assert!(t[1].lines().next().unwrap().trim_start().starts_with("| v52"));
    }

    #[test]
    fn wide_split_is_one_table() {
        let d = matrix(5, 3);
        assert_eq!(sub_tables(&d, 12).unwrap().len(), 1);
        assert_eq!(sub_tables(&d, 100).unwrap().len(), 1);
        assert_eq!(emit_table(&d, 0).unwrap_err(), Error::ZeroSplitWidth);
    }

    #[test]
    fn csv_round_trip_large_labels() {
        let d = matrix(12, 3);
        let t = parse_table(&d.to_csv()).unwrap();
        assert_eq!(t.spec, d.spec());
        assert!(t.entries.iter().zip(d.rows()).all(|(a, b)| a.as_slice() == b));
    }

    #[test]
    fn parse_errors_carry_locations() {
        let csv = matrix(3, 2).to_csv();
        let truncated: String = csv.lines().take(4).map(|l| format!("{l}\n")).collect();
        let err = parse_table(&truncated).unwrap_err();
        assert_eq!(err, Error::Parse { row: 5, column: 1, message: "missing row for v22".into() });

        let bad = csv.replace("v12,1,0,1,1", "v12,1,0,x,1");
        assert!(matches!(parse_table(&bad).unwrap_err(), Error::Parse { row: 3, column: 4, .. }));
        let neg = csv.replace("v12,1,0,1,1", "v12,1,0,-1,1");
        let err = parse_table(&neg).unwrap_err();
        assert!(err.to_string().contains("negative"), "{err}");
        let short = csv.replace("v12,1,0,1,1", "v12,1,0,1");
        assert!(matches!(parse_table(&short).unwrap_err(), Error::Parse { row: 3, .. }));
    }
}
