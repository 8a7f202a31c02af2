//! Plain-text reports: a `# key: value` preamble followed by tables.
//! Everything is rendered into a buffer first so a failing command prints nothing.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

/// Pass/fail status of a verification, mapped to exit codes 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
        }
    }
}

#[derive(Debug, Default)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, header: &[&str]) -> Self {
        Self { title: title.into(), header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

#[derive(Debug)]
pub struct Report {
    preamble: Vec<(String, String)>,
    tables: Vec<Table>,
    outcome: Outcome,
}

impl Report {
    pub fn new() -> Self {
        Self { preamble: Vec::new(), tables: Vec::new(), outcome: Outcome::Pass }
    }

    pub fn kv(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.preamble.push((key.into(), value.to_string()));
        self
    }

    pub fn table(&mut self, t: Table) -> &mut Self {
        self.tables.push(t);
        self
    }

    /// A failing check anywhere makes the whole report fail.
    pub fn check(&mut self, key: &str, ok: bool, detail: impl AsRef<str>) -> &mut Self {
        let outcome = Outcome::from_bool(ok);
        let detail = detail.as_ref();
        let value = if detail.is_empty() { outcome.word().to_string() } else { format!("{} ({detail})", outcome.word()) };
        self.kv(key, value);
        if outcome == Outcome::Fail {
            self.outcome = Outcome::Fail;
        }
        self
    }

    pub fn outcome(&self) -> Outcome {
        self.outcome
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (k, v) in &self.preamble {
            let _ = writeln!(out, "# {k}: {v}");
        }
        for t in &self.tables {
            out.push('\n');
            let _ = writeln!(out, "## {}", t.title);
            match format {
                Format::Tsv => {
                    let _ = writeln!(out, "{}", t.header.join("\t"));
                    for r in &t.rows {
                        let _ = writeln!(out, "{}", r.join("\t"));
                    }
                }
                Format::Text => {
                    let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
                    for r in &t.rows {
                        for (w, c) in widths.iter_mut().zip(r) {
                            *w = (*w).max(c.chars().count());
                        }
                    }
                    let line = |cells: &[String]| -> String {
                        let padded: Vec<String> =
                            cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
                        padded.join("  ").trim_end().to_string()
                    };
                    let _ = writeln!(out, "{}", line(&t.header));
                    for r in &t.rows {
                        let _ = writeln!(out, "{}", line(r));
                    }
                }
            }
        }
        out
    }
}
