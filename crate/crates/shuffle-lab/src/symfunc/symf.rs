use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::Partition;
use crate::qtring::QtRat;

/// The supported expansion bases.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
    Homogeneous,
    Elementary,
    Power,
    Macdonald,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::Homogeneous => "h",
            Basis::Elementary => "e",
            Basis::Power => "p",
            Basis::Macdonald => "H",
        }
    }
}

/// A symmetric function of bounded degree, stored as a basis-tagged expansion
/// with coefficients in Q(q,t).
///
/// Mixed-degree values are allowed; each indexing partition contributes to the
/// homogeneous component of its own size. No zero coefficients are stored, so
/// equality of expansions in the same basis is equality of functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymF {
    basis: Basis,
    terms: BTreeMap<Partition, QtRat>,
}

impl SymF {
    pub fn zero(basis: Basis) -> Self {
        SymF { basis, terms: BTreeMap::new() }
    }

    /// The constant 1 (coefficient on the empty partition).
    pub fn one(basis: Basis) -> Self {
        Self::basis_elem(basis, Partition::empty())
    }

    pub fn constant(basis: Basis, c: QtRat) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn basis_elem(basis: Basis, index: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(index, QtRat::one());
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, QtRat)>) -> Self {
        let mut f = Self::zero(basis);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QtRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> QtRat {
        self.terms.get(p).cloned().unwrap_or_else(QtRat::zero)
    }

    /// Maximum degree of a nonzero component (0 for the zero function).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|p| p.size()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(|p| p.size());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// Degrees of the nonzero homogeneous components, ascending.
    pub fn component_degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|p| p.size()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn homogeneous_component(&self, degree: u32) -> SymF {
        SymF {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, p: Partition, c: QtRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Sum; both operands must carry the same basis tag.
    pub fn add(&self, other: &SymF) -> SymF {
        assert_eq!(self.basis, other.basis, "basis mismatch in SymF::add");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymF) -> SymF {
        self.add(&other.scale(&QtRat::from_int(-1)))
    }

    pub fn scale(&self, c: &QtRat) -> SymF {
        if c.is_zero() {
            return SymF::zero(self.basis);
        }
        SymF {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QtRat) -> QtRat) -> SymF {
        let mut out = SymF::zero(self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    /// Term list in serialization order: degree ascending, then partitions in
    /// reverse-lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &QtRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts()))
        });
        v
    }
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (p, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{sym}{p}")?;
        }
        Ok(())
    }
}

impl Serialize for SymF {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a [u32],
            coeff: String,
        }
        let terms: Vec<Term> = self
            .sorted_terms()
            .into_iter()
            .map(|(p, c)| Term { partition: p.parts(), coeff: c.to_string() })
            .collect();
        let mut s = serializer.serialize_struct("SymF", 3)?;
        s.serialize_field("degree", &self.degree())?;
        s.serialize_field("basis", &self.basis)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SymF {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            partition: Vec<u32>,
            coeff: String,
        }
        #[derive(Deserialize)]
        struct Raw {
            #[allow(dead_code)]
            degree: u32,
            basis: Basis,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut f = SymF::zero(raw.basis);
        for term in raw.terms {
            let coeff: QtRat = term.coeff.parse().map_err(D::Error::custom)?;
            f.add_term(Partition::new(term.partition), coeff);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_degree_components() {
        let mut f = SymF::zero(Basis::Elementary);
        f.add_term(Partition::single(1), QtRat::from_int(2));
        f.add_term(Partition::new(vec![2, 1]), QtRat::var_q());
        assert!(!f.is_homogeneous());
        assert_eq!(f.degree(), 3);
        assert_eq!(f.component_degrees(), vec![1, 3]);
        assert_eq!(f.homogeneous_component(1).num_terms(), 1);
    }

    #[test]
    fn add_cancels_to_zero() {
        let f = SymF::basis_elem(Basis::Schur, Partition::new(vec![2, 1]));
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let mut f = SymF::zero(Basis::Monomial);
        f.add_term(Partition::new(vec![2, 1]), QtRat::var_q() + QtRat::var_t());
        f.add_term(Partition::single(3), QtRat::from_int(1) / (QtRat::from_int(1) - QtRat::var_t()));
        let json = serde_json::to_string(&f).unwrap();
        let back: SymF = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        // reverse-lexicographic term order within a degree: (3) before (2,1)
        assert!(json.find("[3]").unwrap() < json.find("[2,1]").unwrap());
    }
}
