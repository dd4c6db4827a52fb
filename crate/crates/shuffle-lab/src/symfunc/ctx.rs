use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use super::partition::Partition;
use super::symf::{Basis, SymF};
use super::tables::ClassicalTables;
use crate::error::{Error, Result};
use crate::qtring::{Coeff, QtRat};

/// Shared computation context: the degree bound, the lazily built transition
/// tables, and the operator caches.
///
/// All cached values are immutable once inserted; concurrent readers are fine
/// and a duplicated computation of the same key is harmless (last write wins
/// with an equal value).
pub struct SymCtx {
    bound: u32,
    cache_dir: Option<PathBuf>,
    classical: RwLock<HashMap<u32, Arc<ClassicalTables>>>,
    pub(crate) mac: RwLock<HashMap<u32, Arc<crate::macdonald::MacTable>>>,
    pub(crate) ehall_values: RwLock<HashMap<(char, u32, u32), SymF>>,
    e_power: RwLock<HashMap<u32, Arc<Vec<(Partition, Coeff)>>>>,
}

pub const DEFAULT_DEGREE_BOUND: u32 = 8;

impl SymCtx {
    pub fn new(degree_bound: u32) -> Self {
        SymCtx {
            bound: degree_bound,
            cache_dir: None,
            classical: RwLock::new(HashMap::new()),
            mac: RwLock::new(HashMap::new()),
            ehall_values: RwLock::new(HashMap::new()),
            e_power: RwLock::new(HashMap::new()),
        }
    }

    /// Power-sum coordinates of `e_r`, cached (the coefficients are plain
    /// rationals).
    pub(crate) fn elementary_in_power(&self, r: u32) -> Result<Arc<Vec<(Partition, Coeff)>>> {
        if let Some(hit) = self.e_power.read().unwrap().get(&r) {
            return Ok(Arc::clone(hit));
        }
        let tables = self.classical(r)?;
        let e_index = tables.index[&Partition::single(r)];
        let dim = tables.parts.len();
        let m_coords: Vec<Coeff> = (0..dim)
            .map(|row| tables.to_monomial_matrix(Basis::Elementary)[row][e_index].clone())
            .collect();
        let p_coords = crate::linalg::mat_vec(tables.from_monomial_matrix(Basis::Power), &m_coords);
        let list: Vec<(Partition, Coeff)> = tables
            .parts
            .iter()
            .cloned()
            .zip(p_coords)
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .collect();
        let arc = Arc::new(list);
        let mut w = self.e_power.write().unwrap();
        Ok(Arc::clone(w.entry(r).or_insert(arc)))
    }

    /// Like [`SymCtx::new`], with Macdonald tables persisted under `dir`.
    pub fn with_cache_dir(degree_bound: u32, dir: PathBuf) -> Self {
        let mut ctx = Self::new(degree_bound);
        ctx.cache_dir = Some(dir);
        ctx
    }

    pub fn degree_bound(&self) -> u32 {
        self.bound
    }

    pub fn cache_dir(&self) -> Option<&PathBuf> {
        self.cache_dir.as_ref()
    }

    pub(crate) fn check_degree(&self, needed: u32) -> Result<()> {
        if needed > self.bound {
            return Err(Error::DegreeOverflow {
                needed: needed as usize,
                bound: self.bound as usize,
            });
        }
        Ok(())
    }

    pub(crate) fn classical(&self, degree: u32) -> Result<Arc<ClassicalTables>> {
        self.check_degree(degree)?;
        if let Some(t) = self.classical.read().unwrap().get(&degree) {
            return Ok(Arc::clone(t));
        }
        let built = Arc::new(ClassicalTables::build(degree));
        let mut w = self.classical.write().unwrap();
        Ok(Arc::clone(w.entry(degree).or_insert(built)))
    }

    /// Partitions of `degree` in table order.
    pub fn partitions(&self, degree: u32) -> Result<Vec<Partition>> {
        Ok(self.classical(degree)?.parts.clone())
    }

    // -- coordinates ---------------------------------------------------------

    /// Coordinates of a homogeneous component in its own basis.
    fn coords(&self, f: &SymF, degree: u32) -> Result<Vec<QtRat>> {
        let tables = self.classical(degree)?;
        let mut v = vec![QtRat::zero(); tables.parts.len()];
        for (p, c) in f.terms() {
            if p.size() == degree {
                v[tables.index[p]] = c.clone();
            }
        }
        Ok(v)
    }

    /// Monomial coordinates of one homogeneous component.
    pub(crate) fn monomial_coords(&self, f: &SymF, degree: u32) -> Result<Vec<QtRat>> {
        let coords = self.coords(f, degree)?;
        match f.basis() {
            Basis::Monomial => Ok(coords),
            Basis::Macdonald => {
                let mac = crate::macdonald::mac_table(self, degree)?;
                Ok(mac.substitute(&coords))
            }
            basis => {
                let tables = self.classical(degree)?;
                Ok(lift_matvec(tables.to_monomial_matrix(basis), &coords))
            }
        }
    }

    fn from_monomial_coords(
        &self,
        m_coords: Vec<QtRat>,
        degree: u32,
        target: Basis,
    ) -> Result<SymF> {
        let tables = self.classical(degree)?;
        let coords = match target {
            Basis::Monomial => m_coords,
            Basis::Macdonald => {
                let mac = crate::macdonald::mac_table(self, degree)?;
                mac.expand(&m_coords)
            }
            basis => lift_matvec(tables.from_monomial_matrix(basis), &m_coords),
        };
        Ok(SymF::from_terms(
            target,
            tables.parts.iter().cloned().zip(coords),
        ))
    }

    // -- basis conversion ----------------------------------------------------

    /// Re-expresses `f` in `target`; exact, componentwise.
    pub fn to_basis(&self, f: &SymF, target: Basis) -> Result<SymF> {
        if f.basis() == target {
            return Ok(f.clone());
        }
        let mut out = SymF::zero(target);
        for degree in f.component_degrees() {
            let m = self.monomial_coords(f, degree)?;
            let converted = self.from_monomial_coords(m, degree, target)?;
            out = out.add(&converted);
        }
        Ok(out)
    }

    // -- multiplicative structure (through the power basis) ------------------

    /// Product, returned in the basis of `f`.
    pub fn mul(&self, f: &SymF, g: &SymF) -> Result<SymF> {
        if f.is_zero() || g.is_zero() {
            return Ok(SymF::zero(f.basis()));
        }
        self.check_degree(f.degree() + g.degree())?;
        let fp = self.to_basis(f, Basis::Power)?;
        let gp = self.to_basis(g, Basis::Power)?;
        let mut prod = SymF::zero(Basis::Power);
        for (a, ca) in fp.terms() {
            for (b, cb) in gp.terms() {
                prod.add_term(a.merge(b), ca * cb);
            }
        }
        self.to_basis(&prod, f.basis())
    }

    /// Hall scalar product (Schur functions orthonormal); bilinear, exact,
    /// zero across different degrees.
    pub fn hall_inner(&self, f: &SymF, g: &SymF) -> Result<QtRat> {
        let fp = self.to_basis(f, Basis::Power)?;
        let gp = self.to_basis(g, Basis::Power)?;
        let mut acc = QtRat::zero();
        for (p, a) in fp.terms() {
            let b = gp.coeff(p);
            if !b.is_zero() {
                let z = QtRat::from_rational(Coeff::from_integer(p.z().into()));
                acc = &acc + &(&(a * &b) * &z);
            }
        }
        Ok(acc)
    }

    /// The skewing operator `f^perp g`, adjoint to multiplication by `f`.
    pub fn perp(&self, f: &SymF, g: &SymF) -> Result<SymF> {
        let fp = self.to_basis(f, Basis::Power)?;
        let gp = self.to_basis(g, Basis::Power)?;
        let mut out = SymF::zero(Basis::Power);
        for (nu, a) in fp.terms() {
            'term: for (lambda, b) in gp.terms() {
                // remove the parts of nu from lambda with multiplicity factors
                let mut remaining = lambda.clone();
                let mut factor = a * b;
                for &v in nu.parts() {
                    let mult = remaining.multiplicity(v);
                    if mult == 0 {
                        continue 'term;
                    }
                    factor = &factor * &QtRat::from_int(v as i64 * mult as i64);
                    remaining = remaining.remove_part(v).unwrap();
                }
                out.add_term(remaining, factor);
            }
        }
        self.to_basis(&out, g.basis())
    }

    /// The involution sending `p_k` to `(-1)^(k-1) p_k` (so `e` to `h`).
    pub fn omega(&self, f: &SymF) -> Result<SymF> {
        let fp = self.to_basis(f, Basis::Power)?;
        let scaled = SymF::from_terms(
            Basis::Power,
            fp.terms().map(|(p, c)| {
                let sign = if (p.size() as i64 - p.len() as i64) % 2 == 0 { 1 } else { -1 };
                (p.clone(), c * &QtRat::from_int(sign))
            }),
        );
        self.to_basis(&scaled, f.basis())
    }

    /// Plethystic evaluation: expand in power sums and substitute
    /// `p_k -> alphabet(k)`.
    pub fn pleth_eval(&self, f: &SymF, alphabet: &dyn Fn(u32) -> QtRat) -> Result<QtRat> {
        let fp = self.to_basis(f, Basis::Power)?;
        let mut acc = QtRat::zero();
        for (p, c) in fp.terms() {
            let mut term = c.clone();
            for &part in p.parts() {
                term = &term * &alphabet(part);
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Plethystic alphabet scaling: `p_k -> rule(k) * p_k`, extended as an
    /// algebra map. `rule` may fail (e.g. at a pole).
    pub fn pleth_transform(
        &self,
        f: &SymF,
        rule: &dyn Fn(u32) -> Result<QtRat>,
    ) -> Result<SymF> {
        let fp = self.to_basis(f, Basis::Power)?;
        let mut out = SymF::zero(Basis::Power);
        for (p, c) in fp.terms() {
            let mut term = c.clone();
            for &part in p.parts() {
                term = &term * &rule(part)?;
            }
            out.add_term(p.clone(), term);
        }
        self.to_basis(&out, f.basis())
    }

    /// Exact equality as symmetric functions, decided in the monomial basis.
    pub fn equal(&self, f: &SymF, g: &SymF) -> Result<bool> {
        Ok(self.to_basis(f, Basis::Monomial)? == self.to_basis(g, Basis::Monomial)?)
    }
}

pub(crate) fn lift_matvec(mat: &[Vec<Coeff>], v: &[QtRat]) -> Vec<QtRat> {
    mat.iter()
        .map(|row| {
            let mut acc = QtRat::zero();
            for (m, x) in row.iter().zip(v) {
                if !num_traits::Zero::is_zero(m) && !x.is_zero() {
                    acc = &acc + &(x * &QtRat::from_rational(m.clone()));
                }
            }
            acc
        })
        .collect()
}
