//! CSV and JSON writers. Numbers are printed with 17 significant digits in
//! scientific notation so that every value round-trips exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::CliError;

/// `v` with 17 significant digits.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Joins `cells` with commas and ends the line.
fn row(out: &mut String, cells: impl IntoIterator<Item = String>) {
    let mut first = true;
    for c in cells {
        if !first {
            out.push(',');
        }
        out.push_str(&c);
        first = false;
    }
    out.push('\n');
}

/// Output directory; created on demand.
pub struct Sink {
    dir: PathBuf,
    written: Vec<PathBuf>,
}

impl Sink {
    pub fn new(dir: &Path) -> Result<Self, CliError> {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            written: Vec::new(),
        })
    }

    pub fn written(&self) -> &[PathBuf] {
        &self.written
    }

    fn put(&mut self, name: &str, text: &str) -> Result<(), CliError> {
        let path = self.dir.join(name);
        fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        self.written.push(path);
        Ok(())
    }

    pub fn json<S: Serialize>(&mut self, name: &str, value: &S) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value)
            .map_err(|e| CliError::Io(format!("cannot serialize {name}: {e}")))?;
        text.push('\n');
        self.put(name, &text)
    }

    /// Header `t, x_0, x_1, ...`, one row per time node.
    pub fn field_csv(&mut self, name: &str, x: &[f64], t: &[f64], values: &[Vec<f64>]) -> Result<(), CliError> {
        let mut s = String::new();
        row(&mut s, std::iter::once("t".to_string()).chain(x.iter().map(|&v| num(v))));
        for (tj, vals) in t.iter().zip(values) {
            row(&mut s, std::iter::once(num(*tj)).chain(vals.iter().map(|&v| num(v))));
        }
        self.put(name, &s)
    }

    /// Header `k, lambda, x_0, x_1, ...`, one row per mode with `k` from 1.
    pub fn eigen_csv(&mut self, name: &str, x: &[f64], lambdas: &[f64], values: &[Vec<f64>]) -> Result<(), CliError> {
        let mut s = String::new();
        row(
            &mut s,
            ["k".to_string(), "lambda".to_string()]
                .into_iter()
                .chain(x.iter().map(|&v| num(v))),
        );
        for (k, (l, vals)) in lambdas.iter().zip(values).enumerate() {
            row(
                &mut s,
                [(k + 1).to_string(), num(*l)]
                    .into_iter()
                    .chain(vals.iter().map(|&v| num(v))),
            );
        }
        self.put(name, &s)
    }

    /// Named columns; the first column holds integers.
    pub fn table_csv(&mut self, name: &str, header: &[&str], rows: &[(usize, Vec<f64>)]) -> Result<(), CliError> {
        let mut s = String::new();
        row(&mut s, header.iter().map(|h| h.to_string()));
        for (key, vals) in rows {
            row(&mut s, std::iter::once(key.to_string()).chain(vals.iter().map(|&v| num(v))));
        }
        self.put(name, &s)
    }
}

/// One-line summary of a list of numbers for the terminal.
pub fn brief(values: &[f64], take: usize) -> String {
    let mut s = String::new();
    for (i, v) in values.iter().take(take).enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{v:.6}");
    }
    if values.len() > take {
        s.push_str(", ...");
    }
    s
}
