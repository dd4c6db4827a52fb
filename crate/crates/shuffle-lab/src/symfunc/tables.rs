//! Transition tables between the classical bases and the monomial basis,
//! built per degree by expanding in `n` variables (enough to determine a
//! symmetric function of degree `n`).

use std::collections::HashMap;

use num_traits::Zero;

use super::partition::{partitions_of, Partition};
use super::schur::jacobi_trudi_h_coeffs;
use super::symf::Basis;
use crate::linalg;
use crate::qtring::Coeff;

pub(crate) struct ClassicalTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `to_m[basis][mu][lambda]` is the coefficient of `m_mu` in `X_lambda`.
    to_m: HashMap<Basis, Vec<Vec<Coeff>>>,
    /// Inverse of `to_m`, mapping monomial coordinates to `X` coordinates.
    from_m: HashMap<Basis, Vec<Vec<Coeff>>>,
}

const CLASSICAL: [Basis; 4] =
    [Basis::Elementary, Basis::Homogeneous, Basis::Power, Basis::Schur];

impl ClassicalTables {
    pub fn build(degree: u32) -> Self {
        let parts = partitions_of(degree);
        let index: HashMap<Partition, usize> =
            parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let dim = parts.len();
        let n_vars = degree.max(1) as usize;

        let mut to_m = HashMap::new();
        let mut from_m = HashMap::new();

        // e, h, p columns by direct expansion.
        for basis in [Basis::Elementary, Basis::Homogeneous, Basis::Power] {
            let mut cols: Vec<Vec<Coeff>> = Vec::with_capacity(dim);
            for lambda in &parts {
                cols.push(expand_product(basis, lambda, n_vars, &parts, &index));
            }
            to_m.insert(basis, transpose(&cols));
        }

        // Schur columns through the Jacobi-Trudi expansion in the h basis.
        {
            let h_cols = {
                let m = &to_m[&Basis::Homogeneous];
                (0..dim).map(|j| (0..dim).map(|i| m[i][j].clone()).collect::<Vec<_>>()).collect::<Vec<_>>()
            };
            let mut cols: Vec<Vec<Coeff>> = Vec::with_capacity(dim);
            for lambda in &parts {
                let mut col = vec![Coeff::zero(); dim];
                for (h_index, c) in jacobi_trudi_h_coeffs(lambda) {
                    let j = index[&h_index];
                    let c = Coeff::from_integer(c.into());
                    for (row, v) in col.iter_mut().enumerate() {
                        *v += &h_cols[j][row] * &c;
                    }
                }
                cols.push(col);
            }
            to_m.insert(Basis::Schur, transpose(&cols));
        }

        for basis in CLASSICAL {
            let inv = linalg::invert(&to_m[&basis])
                .expect("classical transition matrices are invertible");
            from_m.insert(basis, inv);
        }

        ClassicalTables { parts, index, to_m, from_m }
    }

    pub fn to_monomial_matrix(&self, basis: Basis) -> &Vec<Vec<Coeff>> {
        &self.to_m[&basis]
    }

    pub fn from_monomial_matrix(&self, basis: Basis) -> &Vec<Vec<Coeff>> {
        &self.from_m[&basis]
    }
}

fn transpose(cols: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    let dim = cols.len();
    (0..dim)
        .map(|row| (0..dim).map(|col| cols[col][row].clone()).collect())
        .collect()
}

/// Expand `X_lambda` (X one of e/h/p) in `n_vars` variables and read off the
/// monomial coordinates.
fn expand_product(
    basis: Basis,
    lambda: &Partition,
    n_vars: usize,
    parts: &[Partition],
    _index: &HashMap<Partition, usize>,
) -> Vec<Coeff> {
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    acc.insert(vec![0; n_vars], 1);
    for &part in lambda.parts() {
        let gen = generator_monomials(basis, part, n_vars);
        let mut next: HashMap<Vec<u32>, i64> = HashMap::with_capacity(acc.len() * 2);
        for (exps, c) in &acc {
            for g in &gen {
                let mut e = exps.clone();
                for (i, gi) in g.iter().enumerate() {
                    e[i] += gi;
                }
                *next.entry(e).or_insert(0) += c;
            }
        }
        acc = next;
    }
    let mut coords = vec![Coeff::zero(); parts.len()];
    for (i, mu) in parts.iter().enumerate() {
        let mut key = mu.parts().to_vec();
        key.resize(n_vars, 0);
        if let Some(&c) = acc.get(&key) {
            coords[i] = Coeff::from_integer(c.into());
        }
    }
    coords
}

/// Monomials of the degree-`r` generator in `n_vars` variables.
fn generator_monomials(basis: Basis, r: u32, n_vars: usize) -> Vec<Vec<u32>> {
    match basis {
        Basis::Power => (0..n_vars)
            .map(|i| {
                let mut v = vec![0; n_vars];
                v[i] = r;
                v
            })
            .collect(),
        Basis::Elementary => {
            let mut out = Vec::new();
            let mut cur = vec![0u32; n_vars];
            fn rec(start: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if left == 0 {
                    out.push(cur.clone());
                    return;
                }
                for i in start..cur.len() {
                    if cur.len() - i < left as usize {
                        break;
                    }
                    cur[i] = 1;
                    rec(i + 1, left - 1, cur, out);
                    cur[i] = 0;
                }
            }
            rec(0, r, &mut cur, &mut out);
            out
        }
        Basis::Homogeneous => {
            let mut out = Vec::new();
            let mut cur = vec![0u32; n_vars];
            fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if pos + 1 == cur.len() {
                    cur[pos] = left;
                    out.push(cur.clone());
                    cur[pos] = 0;
                    return;
                }
                for v in (0..=left).rev() {
                    cur[pos] = v;
                    rec(pos + 1, left - v, cur, out);
                }
                cur[pos] = 0;
            }
            rec(0, r, &mut cur, &mut out);
            out
        }
        _ => unreachable!("only generator bases are expanded directly"),
    }
}
