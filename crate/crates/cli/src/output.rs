//! Output plumbing: RFC-4180 style CSV assembly (LF line endings) and
//! atomic file writes.
//!
//! Invariants:
//!
//! * emitted CSV uses LF newlines, '.' as the decimal separator, and
//!   quotes a field only when it contains a comma, quote, or newline;
//! * `write_output` either replaces the target file atomically (temp file
//!   plus rename in the same directory) or leaves the old content intact.

use std::io::{self, Write};
use std::path::Path;

/// Quotes a single CSV field if needed, doubling embedded quotes.
pub fn csv_field(field: &str) -> String {
    if field.contains(['"', ',', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Joins fields into one CSV record (no trailing newline).
pub fn csv_record<S: AsRef<str>>(fields: &[S]) -> String {
    fields.iter().map(|f| csv_field(f.as_ref())).collect::<Vec<_>>().join(",")
}

/// Assembles a whole CSV document: header plus rows, LF endings, trailing
/// newline.
pub fn csv_table<S: AsRef<str>>(header: &[S], rows: &[Vec<String>]) -> String {
    let mut out = csv_record(header);
    out.push('\n');
    for row in rows {
        out.push_str(&csv_record(row));
        out.push('\n');
    }
    out
}

/// Writes `content` to stdout, or atomically to `path` when given.
pub fn write_output(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        None => {
            io::stdout().write_all(content.as_bytes())?;
            io::stdout().flush()
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(content.as_bytes())?;
            tmp.flush()?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}
