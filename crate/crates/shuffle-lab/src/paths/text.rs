//! Path text format and JSON export.
//!
//! Text: the step word over `{N, E}` with a `*` suffix on decorated E steps
//! and a parenthesized label on N steps, e.g. `N(1)EEN(2)N(4)E*E`; barred
//! labels are written `N(2bar)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::path::{Label, Path, Step};
use super::stats::{area_profile, cdinv_c, dinv, tdinv};
use crate::error::{Error, Result};

pub fn path_to_text(p: &Path) -> String {
    let mut out = String::new();
    let mut v_pos = 0usize;
    for (i, step) in p.steps().iter().enumerate() {
        match step {
            Step::E => {
                out.push('E');
                if p.is_decorated(i) {
                    out.push('*');
                }
            }
            Step::N => {
                out.push('N');
                if let Some(labels) = p.labels() {
                    match labels[v_pos] {
                        Label::Small(v) => out.push_str(&format!("({v})")),
                        Label::Big(v) => out.push_str(&format!("({v}bar)")),
                    }
                }
                v_pos += 1;
            }
        }
    }
    out
}

pub fn parse_path(text: &str) -> Result<Path> {
    let mut steps = Vec::new();
    let mut decorations = Vec::new();
    let mut labels: Vec<Label> = Vec::new();
    let mut saw_label = false;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'E' => {
                steps.push(Step::E);
                if chars.peek() == Some(&'*') {
                    chars.next();
                    decorations.push(steps.len() - 1);
                }
            }
            'N' => {
                steps.push(Step::N);
                if chars.peek() == Some(&'(') {
                    chars.next();
                    let mut body = String::new();
                    loop {
                        match chars.next() {
                            Some(')') => break,
                            Some(c) => body.push(c),
                            None => {
                                return Err(Error::MalformedPath(
                                    "unterminated label".into(),
                                ))
                            }
                        }
                    }
                    let label = if let Some(v) = body.strip_suffix("bar") {
                        Label::Big(parse_label_value(v)?)
                    } else {
                        Label::Small(parse_label_value(&body)?)
                    };
                    labels.push(label);
                    saw_label = true;
                } else if saw_label {
                    return Err(Error::MalformedPath(
                        "either all N steps or none must be labeled".into(),
                    ));
                }
            }
            ' ' => {}
            other => {
                return Err(Error::MalformedPath(format!("unexpected character `{other}`")));
            }
        }
    }
    if saw_label && labels.len() != steps.iter().filter(|s| **s == Step::N).count() {
        return Err(Error::MalformedPath(
            "either all N steps or none must be labeled".into(),
        ));
    }
    Path::new(steps, decorations, saw_label.then_some(labels))
}

fn parse_label_value(s: &str) -> Result<u32> {
    let v: u32 = s
        .parse()
        .map_err(|_| Error::MalformedPath(format!("bad label `{s}`")))?;
    if v == 0 {
        return Err(Error::MalformedPath("labels are positive".into()));
    }
    Ok(v)
}

/// JSON shape for a path and its statistics.
#[derive(Serialize, Deserialize, Debug)]
pub struct PathJson {
    pub width: u32,
    pub height: u32,
    pub steps: Vec<String>,
    pub decorations: Vec<usize>,
    pub labels: BTreeMap<usize, String>,
    pub stats: PathStatsJson,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct PathStatsJson {
    pub area: u64,
    pub shift: String,
    pub tdinv: Option<u64>,
    pub cdinv: i64,
    pub dinv: Option<i64>,
}

pub fn path_to_json(p: &Path) -> PathJson {
    let profile = area_profile(p);
    let labeled = p.labels().is_some();
    let mut labels = BTreeMap::new();
    if labeled {
        let mut v_pos = 0usize;
        for (i, step) in p.steps().iter().enumerate() {
            if *step == Step::N {
                let text = match p.labels().unwrap()[v_pos] {
                    Label::Small(v) => v.to_string(),
                    Label::Big(v) => format!("{v}bar"),
                };
                labels.insert(i, text);
                v_pos += 1;
            }
        }
    }
    PathJson {
        width: p.width(),
        height: p.height(),
        steps: p
            .steps()
            .iter()
            .map(|s| if *s == Step::E { "E".into() } else { "N".into() })
            .collect(),
        decorations: p.decorations().to_vec(),
        labels,
        stats: PathStatsJson {
            area: profile.area,
            shift: profile.shift.to_string(),
            tdinv: labeled.then(|| tdinv(p).unwrap()),
            cdinv: cdinv_c(p),
            dinv: labeled.then(|| dinv(p).unwrap()),
        },
    }
}
