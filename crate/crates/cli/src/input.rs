//! Input documents: a header-based text form and an equivalent JSON form.
//!
//! ```text
//! # generators, one per line
//! A:
//! 4 0 0
//! 3 1 0
//! B:
//! 3 3 0
//! k1: 1
//! k2: 1
//! ```

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(rename = "A", default, skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<Vec<i64>>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k1: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kmax: Option<u64>,
    /// 1-based index for `embed-glue`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    /// A binomial over `x1..xp, y1..yq`, for `level`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
    /// Target vector for `membership`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_a: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_b: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub work_limit: Option<usize>,
}

#[derive(Debug, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn err<T>(line: usize, msg: impl std::fmt::Display) -> Result<T, InputError> {
    Err(InputError(format!("line {line}: {msg}")))
}

fn ints<T: std::str::FromStr>(text: &str, line: usize) -> Result<Vec<T>, InputError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<T>()
                .or_else(|_| err(line, format!("not an integer: {t:?}")))
        })
        .collect()
}

fn single<T: std::str::FromStr>(text: &str, line: usize) -> Result<T, InputError> {
    let t = text.trim();
    t.parse()
        .or_else(|_| err(line, format!("expected one integer, got {t:?}")))
}

enum Section {
    None,
    A,
    B,
}

impl InputDocument {
    /// JSON when the first non-blank character is `{`, text otherwise.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let doc = if text.trim_start().starts_with('{') {
            serde_json::from_str(text)
                .map_err(|e| InputError(format!("invalid JSON input: {e}")))?
        } else {
            Self::parse_text(text)?
        };
        doc.validate()?;
        Ok(doc)
    }

    fn parse_text(text: &str) -> Result<Self, InputError> {
        let mut doc = InputDocument::default();
        let mut section = Section::None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some((key, value)) = content.split_once(':') {
                let value = value.trim();
                section = Section::None;
                match key.trim() {
                    "A" | "B" => {
                        if !value.is_empty() {
                            return err(line, "put generators on the lines after the header");
                        }
                        if key.trim() == "A" {
                            if !doc.a.is_empty() {
                                return err(line, "A given twice");
                            }
                            section = Section::A;
                        } else {
                            if doc.b.is_some() {
                                return err(line, "B given twice");
                            }
                            doc.b = Some(Vec::new());
                            section = Section::B;
                        }
                    }
                    "k1" => doc.k1 = Some(single(value, line)?),
                    "k2" => doc.k2 = Some(single(value, line)?),
                    "kmax" => doc.kmax = Some(single(value, line)?),
                    "i" => doc.i = Some(single(value, line)?),
                    "w" => doc.w = Some(value.to_string()),
                    "v" => doc.v = Some(ints(value, line)?),
                    "betti_a" => doc.betti_a = Some(ints(value, line)?),
                    "betti_b" => doc.betti_b = Some(ints(value, line)?),
                    "degree_bound" => doc.degree_bound = Some(ints(value, line)?),
                    "work_limit" => doc.work_limit = Some(single(value, line)?),
                    other => return err(line, format!("unknown header {other:?}")),
                }
                continue;
            }
            let row: Vec<i64> = ints(content, line)?;
            match section {
                Section::A => doc.a.push(row),
                Section::B => doc.b.as_mut().expect("B section open").push(row),
                Section::None => return err(line, "generator outside an A: or B: section"),
            }
        }
        Ok(doc)
    }

    fn validate(&self) -> Result<(), InputError> {
        let mut n = None;
        for (name, set) in [("A", Some(&self.a)), ("B", self.b.as_ref())] {
            let Some(set) = set else { continue };
            for (j, v) in set.iter().enumerate() {
                if v.is_empty() {
                    return Err(InputError(format!("{name}: generator {} is empty", j + 1)));
                }
                if let Some(&x) = v.iter().find(|&&x| x < 0) {
                    return Err(InputError(format!(
                        "{name}: generator {} has negative entry {x}",
                        j + 1
                    )));
                }
                match n {
                    None => n = Some(v.len()),
                    Some(m) if m != v.len() => {
                        return Err(InputError(format!(
                            "{name}: generator {} has length {}, expected {m}",
                            j + 1,
                            v.len()
                        )))
                    }
                    _ => {}
                }
            }
        }
        for (name, k) in [("k1", self.k1), ("k2", self.k2), ("kmax", self.kmax)] {
            if k == Some(0) {
                return Err(InputError(format!("{name} must be positive")));
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let rows = |out: &mut String, name: &str, set: &[Vec<i64>]| {
            out.push_str(name);
            out.push_str(":\n");
            for v in set {
                out.push_str(&join(v));
                out.push('\n');
            }
        };
        if !self.a.is_empty() {
            rows(&mut out, "A", &self.a);
        }
        if let Some(b) = &self.b {
            rows(&mut out, "B", b);
        }
        let mut field = |key: &str, value: Option<String>| {
            if let Some(v) = value {
                out.push_str(&format!("{key}: {v}\n"));
            }
        };
        field("k1", self.k1.map(|k| k.to_string()));
        field("k2", self.k2.map(|k| k.to_string()));
        field("kmax", self.kmax.map(|k| k.to_string()));
        field("i", self.i.map(|k| k.to_string()));
        field("w", self.w.clone());
        field("v", self.v.as_deref().map(join));
        field("betti_a", self.betti_a.as_deref().map(join));
        field("betti_b", self.betti_b.as_deref().map(join));
        field("degree_bound", self.degree_bound.as_deref().map(join));
        field("work_limit", self.work_limit.map(|k| k.to_string()));
        out
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two blocks
A:
4 0 0
3 1 0   # trailing comment
B:
3 3 0
k1: 2
k2: 1
w: x1 - y1
betti_a: 1 3 2
";

    #[test]
    fn text_form() {
        let d = InputDocument::parse(SAMPLE).unwrap();
        assert_eq!(d.a, vec![vec![4, 0, 0], vec![3, 1, 0]]);
        assert_eq!(d.b, Some(vec![vec![3, 3, 0]]));
        assert_eq!((d.k1, d.k2), (Some(2), Some(1)));
        assert_eq!(d.w.as_deref(), Some("x1 - y1"));
        assert_eq!(d.betti_a, Some(vec![1, 3, 2]));
    }

    #[test]
    fn text_and_json_round_trip() {
        let d = InputDocument::parse(SAMPLE).unwrap();
        assert_eq!(InputDocument::parse(&d.to_text()).unwrap(), d);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(InputDocument::parse(&json).unwrap(), d);
    }

    #[test]
    fn rejections() {
        let bad = [
            "A:\n1 2\n1 2 3\n",
            "A:\n1 -2\n",
            "A:\n1 x\n",
            "1 2\n",
            "A:\n1 2\nfoo: 3\n",
            "A:\n1\nk1: 0\n",
            "A: 1 2\n",
            "{\"A\": [[1, 2]], \"C\": 3}",
        ];
        for text in bad {
            assert!(InputDocument::parse(text).is_err(), "{text:?}");
        }
        let e = InputDocument::parse("A:\n1 2\nB:\n1 2 3\n").unwrap_err();
        assert!(e.0.contains("length 3, expected 2"), "{e}");
    }
}
