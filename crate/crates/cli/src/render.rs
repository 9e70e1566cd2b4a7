//! Markdown, CSV and JSON output shared by the subcommands.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

/// Rows that render as a flat table.
pub trait Tabular {
    fn header() -> Vec<&'static str>;
    fn fields(&self) -> Vec<String>;
}

pub fn markdown_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", header.join(" | ")));
    out.push_str(&format!("|{}\n", header.iter().map(|_| "---|").collect::<String>()));
    for r in rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    out
}

pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

#[derive(Serialize)]
struct Envelope<'a, M: Serialize, R: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    meta: M,
    rows: &'a [R],
}

/// JSON document `{schema_version, command, ..meta, rows}`.
pub fn json_document<M: Serialize, R: Serialize>(command: &str, meta: M, rows: &[R]) -> String {
    let doc = Envelope { schema_version: crate::SCHEMA_VERSION, command, meta, rows };
    let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn render_rows<T: Tabular + Serialize, M: Serialize>(format: Format, command: &str, meta: M, rows: &[T]) -> String {
    match format {
        Format::Md => markdown_table(&T::header(), rows.iter().map(Tabular::fields)),
        Format::Csv => csv_table(&T::header(), rows.iter().map(Tabular::fields)),
        Format::Json => json_document(command, meta, rows),
    }
}
