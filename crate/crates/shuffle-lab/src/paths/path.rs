use crate::error::{Error, Result};

/// A lattice step: north or east.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    N,
    E,
}

/// A vertical-step label: a plain positive integer, or a barred one (every
/// barred label is larger than every plain label).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Label {
    Small(u32),
    Big(u32),
}

impl Label {
    pub fn is_big(self) -> bool {
        matches!(self, Label::Big(_))
    }

    pub fn value(self) -> u32 {
        match self {
            Label::Small(v) | Label::Big(v) => v,
        }
    }
}

/// A rectangular path: unit N/E steps ending with an E step, possibly with
/// decorated falls (E steps immediately followed by another E step) and an
/// optional labeling of the N steps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    width: u32,
    height: u32,
    steps: Vec<Step>,
    /// Sorted indices of decorated steps; each is a fall.
    decorations: Vec<usize>,
    /// One label per N step, in path order.
    labels: Option<Vec<Label>>,
}

impl Path {
    pub fn new(
        steps: Vec<Step>,
        decorations: Vec<usize>,
        labels: Option<Vec<Label>>,
    ) -> Result<Path> {
        let width = steps.iter().filter(|s| **s == Step::E).count() as u32;
        let height = steps.len() as u32 - width;
        if width == 0 {
            return Err(Error::MalformedPath("a path needs at least one E step".into()));
        }
        if *steps.last().unwrap() != Step::E {
            return Err(Error::MalformedPath("a path must end with an E step".into()));
        }
        let mut decorations = decorations;
        decorations.sort_unstable();
        decorations.dedup();
        for &d in &decorations {
            if d + 1 >= steps.len() || steps[d] != Step::E || steps[d + 1] != Step::E {
                return Err(Error::MalformedPath(format!(
                    "decoration at {d} is not on a fall"
                )));
            }
        }
        let k = decorations.len() as u32;
        if k > 0 && (k >= width || k > height) {
            return Err(Error::MalformedPath(format!(
                "{k} decorations do not fit a {width}x{height} path"
            )));
        }
        if let Some(ref labels) = labels {
            if labels.len() as u32 != height {
                return Err(Error::MalformedPath(format!(
                    "{} labels for {} vertical steps",
                    labels.len(),
                    height
                )));
            }
            // consecutive N steps carry strictly increasing labels
            let mut v_pos = 0usize;
            for w in steps.windows(2) {
                if w[0] == Step::N {
                    if w[1] == Step::N && labels[v_pos] >= labels[v_pos + 1] {
                        return Err(Error::MalformedPath(
                            "labels must strictly increase along vertical runs".into(),
                        ));
                    }
                    v_pos += 1;
                }
            }
        }
        Ok(Path { width, height, steps, decorations, labels })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn decorations(&self) -> &[usize] {
        &self.decorations
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    /// Number of decorated falls.
    pub fn k(&self) -> u32 {
        self.decorations.len() as u32
    }

    /// Width of the underlying rectangle once decorated columns are removed.
    pub fn base_width(&self) -> u32 {
        self.width - self.k()
    }

    /// Height of the underlying rectangle once decorated columns are removed.
    pub fn base_height(&self) -> u32 {
        self.height - self.k()
    }

    pub fn is_decorated(&self, step: usize) -> bool {
        self.decorations.binary_search(&step).is_ok()
    }

    /// Indices of N steps, in path order.
    pub fn n_steps(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter_map(|(i, s)| (*s == Step::N).then_some(i))
            .collect()
    }

    /// Indices of all E steps, in path order.
    pub fn e_steps(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter_map(|(i, s)| (*s == Step::E).then_some(i))
            .collect()
    }

    /// The label on the N step with the given step index.
    pub fn label_at(&self, step: usize) -> Option<Label> {
        let labels = self.labels.as_ref()?;
        let v_pos = self.steps[..step].iter().filter(|s| **s == Step::N).count();
        (self.steps[step] == Step::N).then(|| labels[v_pos])
    }

    pub fn with_labels(&self, labels: Option<Vec<Label>>) -> Result<Path> {
        Path::new(self.steps.clone(), self.decorations.clone(), labels)
    }

    pub fn strip_labels(&self) -> Path {
        Path {
            width: self.width,
            height: self.height,
            steps: self.steps.clone(),
            decorations: self.decorations.clone(),
            labels: None,
        }
    }
}
