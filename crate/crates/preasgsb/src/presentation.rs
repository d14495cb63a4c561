//! The presentation file format: a versioned header, a generator list, an
//! optional pointer to a multiplication table, and relation lines.
//!
//! ```text
//! preasgsb-format 1
//! alphabet: x, y
//! rel: x*y - (x y) - (y x)
//! ```
//!
//! `#` comments and blank lines are ignored.  Relations are normalised on
//! load — made monic and sorted ascending by leading word — so a
//! presentation prints in a canonical form that parses back to itself.  The
//! `table:` line records which multiplication table a generated presentation
//! came from; it is carried through verbatim and not interpreted.

use std::fmt;

use crate::parse::{is_valid_name, parse_poly, rebase};
use crate::rewrite::{Relation, RewriteSystem};
use crate::words::Alphabet;
use crate::{Error, Result};

const HEADER: &str = "preasgsb-format 1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    /// Provenance note for generated presentations; not interpreted.
    pub table_path: Option<String>,
    relations: Vec<Relation>,
}

impl Presentation {
    /// Assemble a presentation, sorting the relations ascending by leading
    /// word.
    pub fn new(
        alphabet: Alphabet,
        table_path: Option<String>,
        mut relations: Vec<Relation>,
    ) -> Presentation {
        relations.sort_by(|a, b| a.leading().cmp(b.leading()));
        Presentation {
            alphabet,
            table_path,
            relations,
        }
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn to_system(&self) -> RewriteSystem {
        RewriteSystem::new(self.relations.clone())
    }

    pub fn parse(text: &str) -> Result<Presentation> {
        let mut header_seen = false;
        let mut alphabet: Option<Alphabet> = None;
        let mut table_path: Option<String> = None;
        let mut relations = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !header_seen {
                if line != HEADER {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: format!("expected header '{}'", HEADER),
                    });
                }
                header_seen = true;
                continue;
            }
            let indent = raw.chars().count() - raw.trim_start().chars().count();
            if let Some(rest) = line.strip_prefix("alphabet:") {
                if alphabet.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: "duplicate alphabet line".into(),
                    });
                }
                let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                for n in &names {
                    if !is_valid_name(n) {
                        return Err(Error::Parse {
                            line: lineno,
                            col: 1,
                            msg: format!("invalid generator name {:?}", n),
                        });
                    }
                }
                alphabet = Some(Alphabet::new(names)?);
            } else if let Some(rest) = line.strip_prefix("table:") {
                if table_path.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: "duplicate table line".into(),
                    });
                }
                let path = rest.trim();
                if path.is_empty() {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: "empty table path".into(),
                    });
                }
                table_path = Some(path.to_string());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let Some(a) = &alphabet else {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: "alphabet must be declared before relations".into(),
                    });
                };
                let offset = indent + "rel:".chars().count();
                let poly = parse_poly(rest, a).map_err(|e| rebase(e, lineno, offset))?;
                if poly.is_zero() {
                    return Err(Error::ZeroRelation { line: lineno });
                }
                relations.push(Relation::new(poly)?);
            } else {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: format!(
                        "unknown directive {:?}",
                        line.split(':').next().unwrap_or(line)
                    ),
                });
            }
        }
        if !header_seen {
            return Err(Error::Parse {
                line: last_line + 1,
                col: 1,
                msg: format!("expected header '{}'", HEADER),
            });
        }
        let Some(alphabet) = alphabet else {
            return Err(Error::Parse {
                line: last_line + 1,
                col: 1,
                msg: "missing alphabet declaration".into(),
            });
        };
        Ok(Presentation::new(alphabet, table_path, relations))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", HEADER)?;
        writeln!(f, "alphabet: {}", self.alphabet.names().join(", "))?;
        if let Some(path) = &self.table_path {
            writeln!(f, "table: {}", path)?;
        }
        for r in &self.relations {
            writeln!(f, "rel: {}", r.poly().display(&self.alphabet))?;
        }
        Ok(())
    }
}
