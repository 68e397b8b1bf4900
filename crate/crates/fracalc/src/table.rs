use std::io::{self, Write};

use fracalc_core::format_number;

use crate::failure::Failure;

/// `(x, value)` rows with strictly increasing `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalTable {
    header: [String; 2],
    rows: Vec<(f64, f64)>,
}

impl EvalTable {
    pub fn new(rows: Vec<(f64, f64)>) -> Result<Self, Failure> {
        if rows
            .windows(2)
            .any(|w| w[0].0.partial_cmp(&w[1].0) != Some(std::cmp::Ordering::Less))
        {
            return Err(Failure::Domain(
                "table x values must be strictly increasing".into(),
            ));
        }
        Ok(EvalTable {
            header: ["x".into(), "value".into()],
            rows,
        })
    }

    pub fn rows(&self) -> &[(f64, f64)] {
        &self.rows
    }

    /// Writes the header and one `x,value` line per row, LF-terminated.
    /// Non-finite values appear as `NaN`, `inf` or `-inf`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{},{}", self.header[0], self.header[1])?;
        for &(x, value) in &self.rows {
            writeln!(out, "{},{}", format_number(x), format_number(value))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }
}
