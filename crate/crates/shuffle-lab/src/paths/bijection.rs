//! The bijection between big-labeled rectangular paths and fall-labeled
//! decorated paths, together with the dinv contribution of the big labels.
//!
//! Forward direction: delete the big-labeled N steps; a run of `a` of them in
//! front of an E step becomes `k - a` decorated falls, labeled by the
//! complementary subset of the barred alphabet. The inverse replaces each run
//! of decorated falls by the complementary big labels, restoring the taller
//! path.

use super::labeling::FallLabeling;
use super::path::{Label, Path, Step};
use super::stats::{attacks, vertical_distances};
use crate::error::{Error, Result};

/// Forward map. The input must be an undecorated labeled path whose big
/// labels lie in `1..=k` and sit, strictly increasing, directly under an E
/// step; the total big-label count must be `k * (width - 1)` so that exactly
/// `k` decorated falls come out.
pub fn psi(tall: &Path, k: u32) -> Result<(Path, FallLabeling)> {
    if tall.k() != 0 {
        return Err(Error::MalformedPath("the forward map expects no decorations".into()));
    }
    let labels = tall
        .labels()
        .ok_or_else(|| Error::MalformedPath("the forward map expects a labeled path".into()))?;

    let mut steps: Vec<Step> = Vec::new();
    let mut decorations: Vec<usize> = Vec::new();
    let mut fall_labels: Vec<u32> = Vec::new();
    let mut small_labels: Vec<Label> = Vec::new();
    let mut pending: Vec<u32> = Vec::new();

    let mut v_pos = 0usize;
    for step in tall.steps() {
        match step {
            Step::N => {
                let label = labels[v_pos];
                v_pos += 1;
                match label {
                    Label::Big(b) => {
                        if b == 0 || b > k {
                            return Err(Error::MalformedPath(format!(
                                "big label {b} outside 1..={k}"
                            )));
                        }
                        pending.push(b);
                    }
                    Label::Small(_) => {
                        if !pending.is_empty() {
                            return Err(Error::MalformedPath(
                                "big labels must sit at the top of their column".into(),
                            ));
                        }
                        steps.push(Step::N);
                        small_labels.push(label);
                    }
                }
            }
            Step::E => {
                // complement of the column's big labels becomes decorated falls
                for value in 1..=k {
                    if !pending.contains(&value) {
                        decorations.push(steps.len());
                        fall_labels.push(value);
                        steps.push(Step::E);
                    }
                }
                steps.push(Step::E);
                pending.clear();
            }
        }
    }

    if decorations.len() as u32 != k {
        return Err(Error::MalformedPath(format!(
            "big-label content yields {} decorated falls instead of {k}",
            decorations.len()
        )));
    }
    let path = Path::new(steps, decorations, Some(small_labels))?;
    let labeling = FallLabeling::new(&path, fall_labels)?;
    Ok((path, labeling))
}

/// Inverse map: each run of decorated falls is replaced by N steps carrying
/// the complementary big labels.
pub fn psi_inverse(path: &Path, labeling: &FallLabeling) -> Result<Path> {
    let k = path.k();
    let small_labels = path
        .labels()
        .ok_or_else(|| Error::MalformedPath("the inverse map expects a labeled path".into()))?;

    let mut steps: Vec<Step> = Vec::new();
    let mut labels: Vec<Label> = Vec::new();
    let mut pending: Vec<u32> = Vec::new();

    let mut v_pos = 0usize;
    let mut d_pos = 0usize;
    for (i, step) in path.steps().iter().enumerate() {
        match step {
            Step::N => {
                steps.push(Step::N);
                labels.push(small_labels[v_pos]);
                v_pos += 1;
            }
            Step::E if path.is_decorated(i) => {
                pending.push(labeling.labels()[d_pos]);
                d_pos += 1;
            }
            Step::E => {
                for value in 1..=k {
                    if !pending.contains(&value) {
                        steps.push(Step::N);
                        labels.push(Label::Big(value));
                    }
                }
                steps.push(Step::E);
                pending.clear();
            }
        }
    }
    Path::new(steps, Vec::new(), Some(labels))
}

/// Attack-pair contributions of the big-labeled steps in the taller preimage:
/// pairs `(i, j)` with `j` big-labeled, `w_i < w_j`, `i -> j`.
pub fn falldinv(path: &Path, labeling: &FallLabeling) -> Result<u64> {
    let tall = psi_inverse(path, labeling)?;
    let labels = tall.labels().unwrap();
    let v = vertical_distances(&tall);
    let ns = tall.n_steps();
    let mut count = 0u64;
    for (a, &i) in ns.iter().enumerate() {
        for (b, &j) in ns.iter().enumerate() {
            if a != b && labels[b].is_big() && labels[a] < labels[b] && attacks(&v, i, j) {
                count += 1;
            }
        }
    }
    Ok(count)
}
