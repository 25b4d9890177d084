use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Column {
    pub name: String,
    pub units: String,
}

impl Column {
    pub fn new(name: impl Into<String>, units: impl Into<String>) -> Self {
        Column {
            name: name.into(),
            units: units.into(),
        }
    }
}

/// Named numeric columns sampled on a shared abscissa (the first column).
///
/// Cells may be absent, e.g. for sweep points that failed to solve. The
/// abscissa itself is always present and strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveTable {
    columns: Vec<Column>,
    rows: Vec<Vec<Option<f64>>>,
}

impl CurveTable {
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::invalid("table.columns", 0, "a table needs at least one column"));
        }
        Ok(CurveTable {
            columns,
            rows: Vec::new(),
        })
    }

    pub fn push_row(&mut self, row: Vec<Option<f64>>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(Error::invalid(
                "table.row",
                row.len(),
                format!("expected {} cells", self.columns.len()),
            ));
        }
        if row.iter().flatten().any(|v| v.is_nan()) {
            return Err(Error::invalid("table.row", "NaN", "use an absent cell instead of NaN"));
        }
        let x = match row[0] {
            Some(x) if x.is_finite() => x,
            other => {
                return Err(Error::invalid(
                    format!("table.{}", self.columns[0].name),
                    format!("{other:?}"),
                    "abscissa must be present and finite",
                ))
            }
        };
        if let Some(prev) = self.rows.last().and_then(|r| r[0]) {
            if x <= prev {
                return Err(Error::invalid(
                    format!("table.{}", self.columns[0].name),
                    x,
                    "abscissa must be strictly increasing",
                ));
            }
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Option<f64>>] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// All cells of the named column, top to bottom.
    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    /// The named column with absent cells treated as an error.
    pub fn values(&self, name: &str) -> Option<Vec<f64>> {
        self.column(name)?.into_iter().collect()
    }
}
