//! The ENS representation: a re-drawing in which every decorated E step
//! becomes a decorated South step, landing on the plain `base_width x
//! base_height` rectangle. Vertical distances of the surviving steps match
//! the broken-diagonal distances of the standard representation.

use num_rational::Rational64;

use super::path::{Label, Path, Step};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnsStep {
    E,
    N,
    S { decorated: bool },
}

/// An ENS word. `origin[i]` points back to the standard-representation step
/// that produced step `i` (inserted steps have no origin).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EnsPath {
    pub steps: Vec<EnsStep>,
    pub origin: Vec<Option<usize>>,
}

impl EnsPath {
    /// Every maximal run of decorated S steps must be followed by an E step.
    pub fn runs_end_in_east(&self) -> bool {
        for (i, s) in self.steps.iter().enumerate() {
            if matches!(s, EnsStep::S { decorated: true })
                && !matches!(self.steps.get(i + 1), Some(EnsStep::S { .. }) | Some(EnsStep::E))
            {
                return false;
            }
        }
        true
    }

    /// Signed vertical distances from the main diagonal of the target
    /// rectangle: E steps at their right endpoint, N and S steps at their
    /// bottom endpoint.
    pub fn vertical_distances(&self, width: u32, height: u32) -> Vec<Rational64> {
        let slope = Rational64::new(height as i64, width as i64);
        let mut out = Vec::with_capacity(self.steps.len());
        let (mut x, mut y) = (0i64, 0i64);
        for s in &self.steps {
            match s {
                EnsStep::E => {
                    x += 1;
                    out.push(Rational64::from_integer(y) - slope * x);
                }
                EnsStep::N => {
                    out.push(Rational64::from_integer(y) - slope * x);
                    y += 1;
                }
                EnsStep::S { .. } => {
                    y -= 1;
                    out.push(Rational64::from_integer(y) - slope * x);
                }
            }
        }
        out
    }
}

/// ENS representation of a fall-decorated path.
pub fn ens(p: &Path) -> EnsPath {
    let mut steps = Vec::with_capacity(p.steps().len());
    let mut origin = Vec::with_capacity(p.steps().len());
    for (i, s) in p.steps().iter().enumerate() {
        let e = match s {
            Step::N => EnsStep::N,
            Step::E if p.is_decorated(i) => EnsStep::S { decorated: true },
            Step::E => EnsStep::E,
        };
        steps.push(e);
        origin.push(Some(i));
    }
    EnsPath { steps, origin }
}

/// Rebuild the standard representation from an ENS word.
pub fn from_ens(e: &EnsPath, labels: Option<Vec<Label>>) -> Result<Path> {
    let mut steps = Vec::with_capacity(e.steps.len());
    let mut decorations = Vec::new();
    for s in &e.steps {
        match s {
            EnsStep::N => steps.push(Step::N),
            EnsStep::E => steps.push(Step::E),
            EnsStep::S { decorated } => {
                if !decorated {
                    return Err(Error::MalformedPath(
                        "plain South steps do not correspond to standard steps".into(),
                    ));
                }
                decorations.push(steps.len());
                steps.push(Step::E);
            }
        }
    }
    Path::new(steps, decorations, labels)
}

/// ENS representation of a big-labeled path: before every E step, `k` South
/// steps are inserted, the first matching the column's big labels (plain) and
/// the rest decorated.
pub fn ens_big(p: &Path, k: u32) -> Result<EnsPath> {
    if p.k() != 0 {
        return Err(Error::MalformedPath("expected an undecorated big-labeled path".into()));
    }
    let labels = p
        .labels()
        .ok_or_else(|| Error::MalformedPath("expected a labeled path".into()))?;
    let mut steps = Vec::new();
    let mut origin = Vec::new();
    let mut pending_bigs = 0u32;
    let mut v_pos = 0usize;
    for (i, s) in p.steps().iter().enumerate() {
        match s {
            Step::N => {
                if labels[v_pos].is_big() {
                    pending_bigs += 1;
                }
                steps.push(EnsStep::N);
                origin.push(Some(i));
                v_pos += 1;
            }
            Step::E => {
                if pending_bigs > k {
                    return Err(Error::MalformedPath(
                        "more big labels in a column than the decoration count".into(),
                    ));
                }
                for j in 0..k {
                    steps.push(EnsStep::S { decorated: j >= pending_bigs });
                    origin.push(None);
                }
                steps.push(EnsStep::E);
                origin.push(Some(i));
                pending_bigs = 0;
            }
        }
    }
    Ok(EnsPath { steps, origin })
}
