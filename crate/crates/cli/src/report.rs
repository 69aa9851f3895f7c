//! Deterministic plain-text reports with a line-oriented machine rendering.
//!
//! A report is an ordered list of sections holding key/value rows. The text
//! rendering prints section titles as `#` comment lines, so command output
//! that doubles as an input file (decompositions emit triple syntax) stays
//! parseable. The machine rendering drops titles and prints `key=value`.

/// One output row. `arrow` rows render as `key -> value` in text mode,
/// matching the triple-file syntax.
pub struct Row {
    pub key: String,
    pub value: String,
    pub arrow: bool,
}

pub struct Section {
    pub title: String,
    pub rows: Vec<Row>,
}

#[derive(Default)]
pub struct Report {
    sections: Vec<Section>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn section(&mut self, title: &str) -> &mut Section {
        self.sections.push(Section {
            title: title.to_string(),
            rows: Vec::new(),
        });
        self.sections.last_mut().unwrap()
    }

    pub fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if !machine {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("# {}\n", section.title));
            }
            for row in &section.rows {
                if machine {
                    out.push_str(&format!("{}={}\n", row.key, row.value));
                } else if row.arrow {
                    out.push_str(&format!("{} -> {}\n", row.key, row.value));
                } else {
                    out.push_str(&format!("{} = {}\n", row.key, row.value));
                }
            }
        }
        out
    }
}

impl Section {
    pub fn row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push(Row {
            key: key.into(),
            value: value.to_string(),
            arrow: false,
        });
        self
    }

    pub fn arrow_row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push(Row {
            key: key.into(),
            value: value.to_string(),
            arrow: true,
        });
        self
    }
}
