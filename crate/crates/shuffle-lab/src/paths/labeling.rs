//! Fall-labelings: assignments of barred labels `1..=k` to the decorated
//! falls, their star words, contents and signs.

use super::path::Path;
use super::stats::vertical_distances;
use crate::error::{Error, Result};
use crate::symfunc::Composition;

/// Barred labels on the decorated falls, stored in path order (aligned with
/// `path.decorations()`). Labels along a streak of consecutive decorated
/// falls must strictly increase.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FallLabeling {
    labels: Vec<u32>,
}

impl FallLabeling {
    pub fn new(path: &Path, labels: Vec<u32>) -> Result<FallLabeling> {
        let k = path.k() as usize;
        if labels.len() != k {
            return Err(Error::InvalidParameter(format!(
                "{} fall labels for {} decorated steps",
                labels.len(),
                k
            )));
        }
        if labels.iter().any(|&l| l == 0 || l as usize > k) {
            return Err(Error::InvalidParameter(
                "fall labels must lie in 1..=k".into(),
            ));
        }
        let decs = path.decorations();
        for w in decs.windows(2) {
            if w[1] == w[0] + 1 {
                let a = decs.iter().position(|&d| d == w[0]).unwrap();
                if labels[a] >= labels[a + 1] {
                    return Err(Error::InvalidParameter(
                        "fall labels must increase along a streak".into(),
                    ));
                }
            }
        }
        Ok(FallLabeling { labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Content as a length-`k` weak composition: entry `i` counts the falls
    /// labeled `i+1`.
    pub fn content(&self) -> Composition {
        let k = self.labels.len();
        let mut c = vec![0u32; k];
        for &l in &self.labels {
            c[l as usize - 1] += 1;
        }
        Composition::new(c)
    }

    pub fn sign(&self) -> i8 {
        sign_of_content(self.content().parts())
    }
}

/// `(-1)^(number of zero entries)`.
pub fn sign_of_content(content: &[u32]) -> i8 {
    if content.iter().filter(|&&c| c == 0).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Allowability: the first entry is positive and every positive entry is
/// followed by exactly one fewer zeros within the vector.
pub fn is_allowable_content(content: &[u32]) -> bool {
    let k = content.len();
    if k == 0 {
        return true;
    }
    if content[0] == 0 {
        return false;
    }
    let mut i = 0;
    while i < k {
        let a = content[i] as usize;
        if a == 0 || i + a > k {
            return false;
        }
        if content[i + 1..i + a].iter().any(|&z| z != 0) {
            return false;
        }
        i += a;
    }
    true
}

/// Positions into `path.decorations()` in star-word reading order: by
/// decreasing vertical distance, reading top to bottom on ties (a tied later
/// step sits higher, so ties break to the larger step index first).
pub fn star_order(path: &Path) -> Vec<usize> {
    let v = vertical_distances(path);
    let decs = path.decorations();
    let mut order: Vec<usize> = (0..decs.len()).collect();
    order.sort_by(|&a, &b| {
        v[decs[b]]
            .cmp(&v[decs[a]])
            .then_with(|| decs[b].cmp(&decs[a]))
    });
    order
}

/// The star word: fall labels read in star order.
pub fn star_word(path: &Path, labeling: &FallLabeling) -> Vec<u32> {
    star_order(path).into_iter().map(|i| labeling.labels()[i]).collect()
}

/// All fall-labelings of the path, optionally restricted to allowable
/// content or to one exact content.
pub fn fall_labelings(
    path: &Path,
    allowable_only: bool,
    content: Option<&[u32]>,
) -> Vec<FallLabeling> {
    let k = path.k() as usize;
    let decs = path.decorations().to_vec();
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(k);
    fn rec(
        pos: usize,
        k: usize,
        decs: &[usize],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == decs.len() {
            out.push(cur.clone());
            return;
        }
        let lower = if pos > 0 && decs[pos] == decs[pos - 1] + 1 { cur[pos - 1] } else { 0 };
        for v in lower + 1..=k as u32 {
            cur.push(v);
            rec(pos + 1, k, decs, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(0, k, &decs, &mut cur, &mut raw);
    for labels in raw {
        let labeling = FallLabeling { labels };
        let c = labeling.content();
        if let Some(want) = content {
            if c.parts() != want {
                continue;
            }
        }
        if allowable_only && !is_allowable_content(c.parts()) {
            continue;
        }
        out.push(labeling);
    }
    out
}

/// The unique fall-labeling whose star word is `1 2 ... k`.
pub fn fixed_point_labeling(path: &Path) -> FallLabeling {
    let order = star_order(path);
    let mut labels = vec![0u32; order.len()];
    for (value, position) in order.into_iter().enumerate() {
        labels[position] = value as u32 + 1;
    }
    FallLabeling { labels }
}
