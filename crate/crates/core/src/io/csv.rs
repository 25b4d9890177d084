//! CSV interchange for [`CurveTable`].
//!
//! Header cells are `name (units)`. Values use 17 significant digits in
//! exponent form so every `f64` survives a write/parse cycle exactly;
//! absent cells are empty. Lines end with a single line feed.

use csv::{QuoteStyle, ReaderBuilder, Terminator, WriterBuilder};

use crate::error::{Error, Result};
use crate::statics::{Column, CurveTable};

/// `{:.16e}`: one leading digit plus sixteen decimals.
pub fn format_value(value: f64) -> String {
    format!("{value:.16e}")
}

fn header_cell(column: &Column) -> String {
    format!("{} ({})", column.name, column.units)
}

fn parse_header_cell(cell: &str) -> Option<Column> {
    let body = cell.strip_suffix(')')?;
    let split = body.rfind(" (")?;
    Some(Column::new(&body[..split], &body[split + 2..]))
}

pub fn emit_csv(table: &CurveTable) -> String {
    let mut writer = WriterBuilder::new()
        .terminator(Terminator::Any(b'\n'))
        .quote_style(QuoteStyle::Necessary)
        .from_writer(Vec::new());
    let write = |writer: &mut csv::Writer<Vec<u8>>| -> csv::Result<()> {
        writer.write_record(table.columns().iter().map(header_cell))?;
        for row in table.rows() {
            writer.write_record(row.iter().map(|cell| cell.map(format_value).unwrap_or_default()))?;
        }
        writer.flush()?;
        Ok(())
    };
    // writing into a Vec cannot fail
    write(&mut writer).expect("in-memory CSV write");
    let bytes = writer.into_inner().expect("in-memory CSV flush");
    String::from_utf8(bytes).expect("CSV output is UTF-8")
}

pub fn parse_csv(text: &str) -> Result<CurveTable> {
    let mut reader = ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let csv_error = |e: csv::Error| Error::Csv {
        line: e.position().map_or(0, |p| p.line()),
        message: e.to_string(),
    };
    let headers = reader.headers().map_err(csv_error)?.clone();
    let columns = headers
        .iter()
        .map(|cell| {
            parse_header_cell(cell).ok_or_else(|| Error::Csv {
                line: 1,
                message: format!("header cell {cell:?} is not of the form `name (units)`"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = CurveTable::new(columns)?;
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line());
        let row = record
            .iter()
            .map(|cell| {
                if cell.is_empty() {
                    Ok(None)
                } else {
                    cell.parse::<f64>().map(Some).map_err(|e| Error::Csv {
                        line,
                        message: format!("{cell:?}: {e}"),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        table.push_row(row).map_err(|e| Error::Csv {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(table)
}
