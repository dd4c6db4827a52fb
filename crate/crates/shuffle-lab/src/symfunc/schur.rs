//! Jacobi-Trudi determinants and the rectangular-Schur alternating
//! h-expansion indexed by allowable compositions.

use std::collections::{BTreeMap, HashMap};

use super::partition::{compositions_of, Composition, Partition};
use super::symf::{Basis, SymF};
use crate::qtring::QtRat;

/// `s_lambda` as the Jacobi-Trudi determinant `det(h_{lambda_i - i + j})`,
/// returned in the homogeneous basis.
pub fn jacobi_trudi(lambda: &Partition) -> SymF {
    SymF::from_terms(
        Basis::Homogeneous,
        jacobi_trudi_h_coeffs(lambda)
            .into_iter()
            .map(|(p, c)| (p, QtRat::from_int(c))),
    )
}

/// The h-expansion of the Jacobi-Trudi determinant as index -> coefficient.
pub(crate) fn jacobi_trudi_h_coeffs(lambda: &Partition) -> BTreeMap<Partition, i64> {
    let l = lambda.len();
    if l == 0 {
        return BTreeMap::from([(Partition::empty(), 1)]);
    }
    // Entry (i, j) is h_{lambda_i - i + j}; expand along rows with a memo on
    // the remaining column set.
    let full_mask: u32 = (1 << l) - 1;
    let mut memo: HashMap<u32, BTreeMap<Partition, i64>> = HashMap::new();
    memo.insert(0, BTreeMap::from([(Partition::empty(), 1)]));

    fn det(
        mask: u32,
        lambda: &Partition,
        l: usize,
        memo: &mut HashMap<u32, BTreeMap<Partition, i64>>,
    ) -> BTreeMap<Partition, i64> {
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let row = l - mask.count_ones() as usize;
        let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
        let mut sign = 1i64;
        for j in 0..l {
            if mask & (1 << j) == 0 {
                continue;
            }
            let a = lambda.parts()[row] as i64 - row as i64 + j as i64;
            if a >= 0 {
                let sub = det(mask & !(1 << j), lambda, l, memo);
                for (p, c) in sub {
                    let key = if a == 0 { p } else { p.merge(&Partition::single(a as u32)) };
                    *acc.entry(key).or_insert(0) += sign * c;
                }
            }
            sign = -sign;
        }
        acc.retain(|_, c| *c != 0);
        memo.insert(mask, acc.clone());
        acc
    }

    det(full_mask, lambda, l, &mut memo)
}

/// All allowable weak compositions of `k` (each positive entry followed by
/// exactly that many minus one zeros within the first `k` slots), paired with
/// the sign `(-1)^(number of zero entries)`.
pub fn allowable_compositions(k: u32) -> Vec<(Composition, i8)> {
    compositions_of(k)
        .into_iter()
        .map(|comp| {
            let mut alpha = vec![0u32; k as usize];
            let mut pos = 0usize;
            for part in &comp {
                alpha[pos] = *part;
                pos += *part as usize;
            }
            let zeros = k as usize - comp.len();
            let sign = if zeros % 2 == 0 { 1 } else { -1 };
            (Composition::new(alpha), sign)
        })
        .collect()
}

/// The alternating h-expansion of `s_{(m-1)^k}` over allowable compositions:
/// the sum of `(-1)^sgn(alpha) h_{m - alpha}`, which agrees with the
/// Jacobi-Trudi expansion modulo the ideal spanned by `h_j` with `j > m`.
pub fn schur_rect_h_expansion(m: u32, k: u32) -> SymF {
    let mut out = SymF::zero(Basis::Homogeneous);
    for (alpha, sign) in allowable_compositions(k) {
        if alpha.parts().iter().any(|&a| a > m) {
            continue;
        }
        let index = Partition::new(alpha.parts().iter().map(|&a| m - a).collect());
        out.add_term(index, QtRat::from_int(sign as i64));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn jacobi_trudi_small() {
        // single row: h_n
        assert_eq!(jacobi_trudi(&h(&[3])), SymF::basis_elem(Basis::Homogeneous, h(&[3])));
        // column (1,1): h_11 - h_2
        let s11 = jacobi_trudi(&h(&[1, 1]));
        assert_eq!(s11.coeff(&h(&[1, 1])), QtRat::from_int(1));
        assert_eq!(s11.coeff(&h(&[2])), QtRat::from_int(-1));
        assert_eq!(s11.num_terms(), 2);
        // square (2,2): h_22 - h_31
        let s22 = jacobi_trudi(&h(&[2, 2]));
        assert_eq!(s22.coeff(&h(&[2, 2])), QtRat::from_int(1));
        assert_eq!(s22.coeff(&h(&[3, 1])), QtRat::from_int(-1));
        assert_eq!(s22.num_terms(), 2);
        // empty partition: the constant 1
        assert_eq!(jacobi_trudi(&Partition::empty()), SymF::one(Basis::Homogeneous));
    }

    /// Brute-force filter of all weak compositions per the definition.
    fn allowable_oracle(k: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for alpha in crate::symfunc::partition::weak_compositions(k, k as usize) {
            if k == 0 {
                out.push(alpha);
                continue;
            }
            if alpha[0] == 0 {
                continue;
            }
            let mut ok = true;
            for i in 0..k as usize {
                let a = alpha[i];
                if a == 0 {
                    continue;
                }
                // exactly a-1 zeros follow within the first k slots
                if i + a as usize > k as usize {
                    ok = false;
                    break;
                }
                for j in i + 1..i + a as usize {
                    if alpha[j] != 0 {
                        ok = false;
                        break;
                    }
                }
                if i + (a as usize) < k as usize && alpha[i + a as usize] == 0 {
                    ok = false;
                }
                if !ok {
                    break;
                }
            }
            if ok {
                out.push(alpha);
            }
        }
        out
    }

    #[test]
    fn allowable_matches_brute_force() {
        for k in 0..=7 {
            let fast: Vec<Vec<u32>> =
                allowable_compositions(k).into_iter().map(|(c, _)| c.parts().to_vec()).collect();
            let mut slow = allowable_oracle(k);
            let mut sorted = fast.clone();
            sorted.sort();
            slow.sort();
            assert_eq!(sorted, slow, "k = {k}");
        }
    }

    #[test]
    fn allowable_frozen_values() {
        let k0 = allowable_compositions(0);
        assert_eq!(k0.len(), 1);
        assert!(k0[0].0.is_empty());
        assert_eq!(k0[0].1, 1);

        let k2: Vec<(Vec<u32>, i8)> =
            allowable_compositions(2).into_iter().map(|(c, s)| (c.parts().to_vec(), s)).collect();
        let mut k2s = k2.clone();
        k2s.sort();
        assert_eq!(k2s, vec![(vec![1, 1], 1), (vec![2, 0], -1)]);

        let mut k3: Vec<(Vec<u32>, i8)> =
            allowable_compositions(3).into_iter().map(|(c, s)| (c.parts().to_vec(), s)).collect();
        k3.sort();
        assert_eq!(
            k3,
            vec![
                (vec![1, 1, 1], 1),
                (vec![1, 2, 0], -1),
                (vec![2, 0, 1], -1),
                (vec![3, 0, 0], 1),
            ]
        );
    }

    #[test]
    fn rect_expansion_small() {
        // m=2, k=2: h_11 - h_2, same as the Jacobi-Trudi expansion of s_11
        let f = schur_rect_h_expansion(2, 2);
        assert_eq!(f, jacobi_trudi(&h(&[1, 1])));
        // k=0: the constant 1
        assert_eq!(schur_rect_h_expansion(3, 0), SymF::one(Basis::Homogeneous));
        // m=1: only the all-ones composition survives, total 1
        for k in 0..=4 {
            assert_eq!(schur_rect_h_expansion(1, k), SymF::one(Basis::Homogeneous));
        }
    }
}
