//! Statistics on (decorated, labeled) rectangular paths: vertical distances
//! from the broken diagonal, area, the attack relation, and the dinv family.
//!
//! All vertical distances are exact rationals with denominator dividing the
//! base width, so boundary comparisons in the attack and correction sets are
//! decided exactly.

use num_rational::Rational64;

use super::path::{Path, Step};
use crate::error::{Error, Result};
use crate::symfunc::Composition;

/// Vertical area word (one entry per non-decorated E step, in path order),
/// the shift, and the area.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaProfile {
    pub word: Vec<Rational64>,
    pub shift: Rational64,
    pub area: u64,
}

/// Heights of the broken diagonal at integer abscissas `0..=width`. The
/// diagonal climbs with slope `base_height/base_width` across plain columns
/// and slope 1 across decorated columns.
pub fn diagonal_heights(p: &Path) -> Vec<Rational64> {
    let slope = Rational64::new(p.base_height() as i64, p.base_width() as i64);
    let one = Rational64::from_integer(1);
    let mut heights = Vec::with_capacity(p.width() as usize + 1);
    let mut h = Rational64::from_integer(0);
    heights.push(h);
    for &e in &p.e_steps() {
        h += if p.is_decorated(e) { one } else { slope };
        heights.push(h);
    }
    heights
}

/// Signed vertical distances of every step: E steps are measured at their
/// right endpoint, N steps at their bottom endpoint.
pub fn vertical_distances(p: &Path) -> Vec<Rational64> {
    let diag = diagonal_heights(p);
    let mut out = Vec::with_capacity(p.steps().len());
    let (mut x, mut y) = (0usize, 0i64);
    for step in p.steps() {
        match step {
            Step::E => {
                out.push(Rational64::from_integer(y) - diag[x + 1]);
                x += 1;
            }
            Step::N => {
                out.push(Rational64::from_integer(y) - diag[x]);
                y += 1;
            }
        }
    }
    out
}

pub fn area_profile(p: &Path) -> AreaProfile {
    let v = vertical_distances(p);
    let word: Vec<Rational64> = p
        .e_steps()
        .into_iter()
        .filter(|&e| !p.is_decorated(e))
        .map(|e| v[e])
        .collect();
    let shift = -word.iter().min().copied().unwrap_or_default();
    let area = word
        .iter()
        .map(|w| {
            let shifted = w + shift;
            debug_assert!(shifted >= Rational64::from_integer(0));
            (shifted.numer().div_euclid(*shifted.denom())) as u64
        })
        .sum();
    AreaProfile { word, shift, area }
}

/// Whether the path stays weakly above its broken diagonal.
pub fn is_dyck(p: &Path) -> bool {
    let v = vertical_distances(p);
    let zero = Rational64::from_integer(0);
    p.e_steps().into_iter().all(|e| v[e] >= zero)
}

/// The attack relation between two N steps:
/// `(v_i, i) < (v_j, j) < (v_i + 1, i)` lexicographically.
pub fn attacks(v: &[Rational64], i: usize, j: usize) -> bool {
    let one = Rational64::from_integer(1);
    (v[i], i) < (v[j], j) && (v[j], j) < (v[i] + one, i)
}

/// Number of attacking pairs with increasing labels. Requires labels.
pub fn tdinv(p: &Path) -> Result<u64> {
    let labels = p
        .labels()
        .ok_or_else(|| Error::InvalidParameter("tdinv needs a labeled path".into()))?;
    let v = vertical_distances(p);
    let ns = p.n_steps();
    let mut count = 0u64;
    for (a, &i) in ns.iter().enumerate() {
        for (b, &j) in ns.iter().enumerate() {
            if a != b && labels[a] < labels[b] && attacks(&v, i, j) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Number of decorated falls immediately preceding step `j`.
fn run_before(p: &Path, j: usize) -> u32 {
    let mut r = 0;
    let mut i = j;
    while i > 0 && p.is_decorated(i - 1) {
        r += 1;
        i -= 1;
    }
    r
}

/// The dinv correction in its set-by-set form: signed counts over the pairs
/// `D+`, `D-`, `D+*`, `D-*` plus the below-diagonal counts `B` and `B*`.
pub fn cdinv_d(p: &Path) -> i64 {
    let v = vertical_distances(p);
    let slope = Rational64::new(p.base_height() as i64, p.base_width() as i64);
    let one = Rational64::from_integer(1);
    let zero = Rational64::from_integer(0);
    let ns = p.n_steps();
    let hs: Vec<usize> =
        p.e_steps().into_iter().filter(|&e| !p.is_decorated(e)).collect();
    let ds = p.decorations();

    let mut total = 0i64;
    for &i in &ns {
        for &j in &hs {
            if j < i && v[i] < v[j] && v[j] <= v[i] + one - slope {
                total += 1; // D+
            }
            if j < i && v[j] <= v[i] && v[i] < v[j] + slope - one {
                total -= 1; // D-
            }
        }
        if v[i] < zero {
            total += 1; // B
        }
    }
    for &i in ds {
        for &j in &hs {
            if i < j && v[i] <= v[j] && v[j] < v[i] + one - slope {
                total += 1; // D+*
            }
            if i < j && v[j] < v[i] && v[i] <= v[j] - one + slope {
                total -= 1; // D-*
            }
        }
        if v[i] <= zero {
            total -= 1; // B*
        }
    }
    total
}

/// The dinv correction in its compact form: `#C+ - #C- + #C* + #B`, where
/// `C*` measures the left endpoint of the later step against the broken
/// diagonal.
pub fn cdinv_c(p: &Path) -> i64 {
    let v = vertical_distances(p);
    let slope = Rational64::new(p.base_height() as i64, p.base_width() as i64);
    let one = Rational64::from_integer(1);
    let zero = Rational64::from_integer(0);
    let ns = p.n_steps();
    let es = p.e_steps();
    let hs: Vec<usize> = es.iter().copied().filter(|&e| !p.is_decorated(e)).collect();
    let ds = p.decorations();

    let mut total = 0i64;
    for &i in &ns {
        for &j in &hs {
            if j >= i {
                continue;
            }
            let r_j = run_before(p, j) as i64;
            if r_j == 0 && v[i] < v[j] && v[j] <= v[i] + one - slope {
                total += 1; // C+
            }
            if v[j] <= v[i] && v[i] < v[j] + slope + Rational64::from_integer(r_j) - one {
                total -= 1; // C-
            }
        }
        if v[i] < zero {
            total += 1; // B
        }
    }
    // C*: decorated step i against any later-but-not-adjacent E step j,
    // with the left endpoint of j projecting onto i.
    for &i in ds {
        for &j in &es {
            if i + 1 >= j {
                continue;
            }
            let v_plus = v[j] + if p.is_decorated(j) { one } else { slope };
            if v[i] <= v_plus && v_plus < v[i] + one {
                total += 1;
            }
        }
    }
    total
}

/// `dinv = tdinv + cdinv` (via the compact correction).
pub fn dinv(p: &Path) -> Result<i64> {
    Ok(tdinv(p)? as i64 + cdinv_c(p))
}

/// The fall-composition: the run of decorated falls in front of each
/// non-decorated E step, in path order.
pub fn beta(p: &Path) -> Composition {
    Composition::new(
        p.e_steps()
            .into_iter()
            .filter(|&e| !p.is_decorated(e))
            .map(|e| run_before(p, e))
            .collect(),
    )
}
