//! The sign-reversing involution on words with allowable content, and its
//! lift to fall-labelings through the star word.

use super::labeling::{is_allowable_content, star_order, FallLabeling};
use super::path::Path;
use crate::error::{Error, Result};

/// One application of the involution to a word with allowable content.
///
/// Let `p` be the largest entry occurring exactly once such that the largest
/// smaller entry `q` exists and every occurrence of `q` lies to the right of
/// `p`; let `r` be the largest repeated entry, and `s` the smallest entry
/// greater than `r` (or `k+1` when `r` is the maximum). If `r` is absent or
/// `p > r`, the single `p` becomes another occurrence of `q`; if `p` is
/// absent or `p < r`, the first `r` becomes `s - 1`; with neither present the
/// word is the fixed point `1 2 ... k`.
pub fn phi_word(word: &[u32]) -> Vec<u32> {
    let k = word.len() as u32;
    let count = |v: u32| word.iter().filter(|&&x| x == v).count();

    // candidate p with its replacement value q
    let mut p_choice: Option<(u32, u32)> = None;
    for &x in word {
        if count(x) != 1 {
            continue;
        }
        let q = word.iter().copied().filter(|&y| y < x).max();
        let Some(q) = q else { continue };
        let x_pos = word.iter().position(|&y| y == x).unwrap();
        let left_of_all_q = word
            .iter()
            .enumerate()
            .all(|(i, &y)| y != q || i > x_pos);
        if left_of_all_q && p_choice.map(|(best, _)| x > best).unwrap_or(true) {
            p_choice = Some((x, q));
        }
    }

    let r = word.iter().copied().filter(|&x| count(x) >= 2).max();

    match (p_choice, r) {
        (Some((p, q)), r) if r.map(|r| p > r).unwrap_or(true) => {
            // the unique p becomes another q
            let mut out = word.to_vec();
            let pos = out.iter().position(|&x| x == p).unwrap();
            out[pos] = q;
            out
        }
        (p, Some(r)) if p.map(|(p, _)| p < r).unwrap_or(true) => {
            // the first r becomes s - 1
            let s = word.iter().copied().filter(|&x| x > r).min().unwrap_or(k + 1);
            let mut out = word.to_vec();
            let pos = out.iter().position(|&x| x == r).unwrap();
            out[pos] = s - 1;
            out
        }
        _ => word.to_vec(),
    }
}

/// The involution lifted to fall-labelings: apply [`phi_word`] to the star
/// word and write the result back along the star order. Errors on
/// non-allowable content.
pub fn phi(path: &Path, labeling: &FallLabeling) -> Result<FallLabeling> {
    if !is_allowable_content(labeling.content().parts()) {
        return Err(Error::NotAllowable);
    }
    let order = star_order(path);
    let word: Vec<u32> = order.iter().map(|&i| labeling.labels()[i]).collect();
    let new_word = phi_word(&word);
    let mut labels = vec![0u32; order.len()];
    for (w_pos, &lab_pos) in order.iter().enumerate() {
        labels[lab_pos] = new_word[w_pos];
    }
    FallLabeling::new(path, labels).map_err(|_| {
        Error::Internal("involution produced an invalid fall-labeling".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::labeling::{fall_labelings, sign_of_content, star_word};
    use crate::paths::text::parse_path;
    use crate::symfunc::allowable_compositions;

    /// Distinct arrangements of the multiset with the given content.
    fn words_with_content(content: &[u32]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut left = content.to_vec();
        let total: u32 = content.iter().sum();
        let mut cur = Vec::with_capacity(total as usize);
        fn rec(left: &mut Vec<u32>, cur: &mut Vec<u32>, total: u32, out: &mut Vec<Vec<u32>>) {
            if cur.len() as u32 == total {
                out.push(cur.clone());
                return;
            }
            for v in 0..left.len() {
                if left[v] > 0 {
                    left[v] -= 1;
                    cur.push(v as u32 + 1);
                    rec(left, cur, total, out);
                    cur.pop();
                    left[v] += 1;
                }
            }
        }
        rec(&mut left, &mut cur, total, &mut out);
        out
    }

    fn content_of(word: &[u32], k: usize) -> Vec<u32> {
        let mut c = vec![0u32; k];
        for &x in word {
            c[x as usize - 1] += 1;
        }
        c
    }

    #[test]
    fn frozen_word_cases() {
        // fixed point
        assert_eq!(phi_word(&[1, 2, 3]), vec![1, 2, 3]);
        // repeated-entry case: 1 1 -> 2 1 (k = 2, s = 3)
        assert_eq!(phi_word(&[1, 1]), vec![2, 1]);
        // unique-entry case closes the involution: 2 1 -> 1 1
        assert_eq!(phi_word(&[2, 1]), vec![1, 1]);
    }

    #[test]
    fn involution_sign_reversal_and_unique_fixed_point() {
        for k in 0..=6u32 {
            let mut fixed_points = 0usize;
            for (alpha, sign) in allowable_compositions(k) {
                for word in words_with_content(alpha.parts()) {
                    let image = phi_word(&word);
                    let image_content = content_of(&image, k as usize);
                    assert!(
                        is_allowable_content(&image_content),
                        "image content not allowable: {word:?} -> {image:?}"
                    );
                    // involution
                    assert_eq!(phi_word(&image), word, "not an involution on {word:?}");
                    if image == word {
                        fixed_points += 1;
                        assert_eq!(word, (1..=k).collect::<Vec<_>>());
                        assert_eq!(sign, 1);
                    } else {
                        // sign reverses
                        assert_eq!(
                            sign_of_content(&image_content),
                            -sign,
                            "sign not reversed on {word:?}"
                        );
                    }
                    // tied inversions are preserved
                    for i in 0..word.len() {
                        for j in i + 1..word.len() {
                            assert_eq!(
                                word[i] >= word[j],
                                image[i] >= image[j],
                                "tied inversion broken at ({i},{j}) on {word:?}"
                            );
                        }
                    }
                }
            }
            assert_eq!(fixed_points, 1, "k = {k}");
        }
    }

    #[test]
    fn lift_to_fall_labelings() {
        let p = parse_path("NE*ENE*EE").unwrap();
        for labeling in fall_labelings(&p, true, None) {
            let image = phi(&p, &labeling).unwrap();
            let back = phi(&p, &image).unwrap();
            assert_eq!(back, labeling);
            // star words transform by the word-level map
            assert_eq!(star_word(&p, &image), phi_word(&star_word(&p, &labeling)));
        }
        // non-allowable content is rejected
        let bad = fall_labelings(&p, false, Some(&[0, 2]));
        assert_eq!(bad.len(), 1);
        assert!(matches!(phi(&p, &bad[0]), Err(Error::NotAllowable)));
    }
}
