use super::eval::Env;
use crate::error::{Error, Result};
use crate::freealg::{Gen, Presentation, Relation};
use crate::scalar::FieldContext;

#[derive(Clone, Debug)]
pub struct Line {
    pub num: usize,
    pub text: String,
}

#[derive(Clone, Debug)]
pub struct Section {
    pub name: String,
    pub line: usize,
    pub lines: Vec<Line>,
}

/// A sectioned text file: `[name]` headers, one entry per line, `#` comments.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub sections: Vec<Section>,
}

impl Document {
    pub fn parse(src: &str) -> Result<Self> {
        let mut sections: Vec<Section> = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let num = i + 1;
            let text = raw.split('#').next().unwrap().trim();
            if text.is_empty() {
                continue;
            }
            if let Some(name) = text.strip_prefix('[') {
                let Some(name) = name.strip_suffix(']') else {
                    return Err(Error::Parse { line: num, col: 1, msg: "unterminated section header".into() });
                };
                sections.push(Section { name: name.trim().to_string(), line: num, lines: Vec::new() });
                continue;
            }
            match sections.last_mut() {
                Some(s) => s.lines.push(Line { num, text: text.to_string() }),
                None => return Err(Error::Parse { line: num, col: 1, msg: "entry before any section".into() }),
            }
        }
        Ok(Document { sections })
    }

    pub fn get(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn lines(&self, name: &str) -> &[Line] {
        self.get(name).map(|s| s.lines.as_slice()).unwrap_or(&[])
    }

    pub fn has(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    pub fn field(&self) -> Result<FieldContext> {
        match self.lines("field").first() {
            None => Ok(FieldContext::Transcendental),
            Some(l) => FieldContext::parse(&l.text).ok_or_else(|| Error::Parse {
                line: l.num,
                col: 1,
                msg: format!("unknown field `{}`", l.text),
            }),
        }
    }

    /// Reads `[generators]` and `[relations]`.
    pub fn presentation(&self, field: FieldContext) -> Result<Presentation> {
        let mut names = Vec::new();
        let mut pairs = Vec::new();
        for l in self.lines("generators") {
            if let Some(rest) = l.text.strip_prefix("invertible") {
                let ws: Vec<&str> = rest.split([' ', ',']).filter(|s| !s.is_empty()).collect();
                if ws.len() != 2 {
                    return Err(Error::Parse { line: l.num, col: 1, msg: "expected `invertible g g'`".into() });
                }
                pairs.push((ws[0].to_string(), ws[1].to_string(), l.num));
                continue;
            }
            for n in l.text.split([' ', ',']).filter(|s| !s.is_empty()) {
                if n == "q" {
                    return Err(Error::Parse { line: l.num, col: 1, msg: "`q` is reserved".into() });
                }
                names.push(n.to_string());
            }
        }
        let mut inverses: Vec<(Gen, Gen)> = Vec::new();
        for (a, b, line) in pairs {
            let idx = |s: &str| {
                names.iter().position(|n| n == s).map(|i| i as Gen).ok_or(Error::Parse {
                    line,
                    col: 1,
                    msg: format!("unknown generator `{s}`"),
                })
            };
            inverses.push((idx(&a)?, idx(&b)?));
        }
        let free = Presentation::new(names.clone(), field, Vec::new(), Vec::new())?;
        let mut relations = Vec::new();
        for l in self.lines("relations") {
            let (lhs, rhs, oriented) = split_definition(&l.text).ok_or_else(|| Error::Parse {
                line: l.num,
                col: 1,
                msg: "expected `lhs = rhs`".into(),
            })?;
            let env = Env::new(vec![&free]).at_line(l.num);
            relations.push(Relation {
                lhs: env.parse_poly(lhs)?,
                rhs: env.parse_poly(rhs)?,
                oriented,
                text: l.text.clone(),
            });
        }
        Presentation::new(names, field, inverses, relations)
    }
}

/// Splits `lhs = rhs` or `lhs -> rhs`; the flag is true for the arrow form.
pub fn split_definition(text: &str) -> Option<(&str, &str, bool)> {
    if let Some(i) = text.find("->") {
        return Some((text[..i].trim(), text[i + 2..].trim(), true));
    }
    let i = text.find('=')?;
    Some((text[..i].trim(), text[i + 1..].trim(), false))
}

/// Splits a pair-table key `a, b = expr` into `(a, b, expr)`.
pub fn split_pair(text: &str) -> Option<(&str, &str, &str)> {
    let (lhs, rhs, _) = split_definition(text)?;
    let (a, b) = lhs.split_once(',')?;
    Some((a.trim(), b.trim(), rhs))
}
