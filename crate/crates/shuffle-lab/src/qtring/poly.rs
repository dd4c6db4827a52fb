use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Coeff;

/// Exponent pair of a `q^a t^b` monomial.
///
/// The derived ordering (t-degree major, then q-degree) is the canonical term
/// order used everywhere: serialization, leading-term extraction, division.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Exp {
    pub t: u32,
    pub q: u32,
}

impl Exp {
    pub fn new(q: u32, t: u32) -> Self {
        Exp { t, q }
    }
}

/// A polynomial in `q` and `t` with arbitrary-precision rational coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QtPoly {
    terms: BTreeMap<Exp, Coeff>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::new(0, 0), c);
        }
        QtPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Coeff::from_integer(BigInt::from(n)))
    }

    pub fn monomial(c: Coeff, q: u32, t: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::new(q, t), c);
        }
        QtPoly { terms }
    }

    pub fn var_q() -> Self {
        Self::monomial(Coeff::one(), 1, 0)
    }

    pub fn var_t() -> Self {
        Self::monomial(Coeff::one(), 0, 1)
    }

    /// `(1 - q^k)(1 - t^k)`, the plethystic factor written `M` evaluated at
    /// the k-th power alphabet; `big_m(1)` is `M` itself.
    pub fn big_m(k: u32) -> Self {
        let one_minus_qk = Self::one() - Self::monomial(Coeff::one(), k, 0);
        let one_minus_tk = Self::one() - Self::monomial(Coeff::one(), 0, k);
        &one_minus_qk * &one_minus_tk
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, Coeff)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Exp::new(0, 0)))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        if self.is_zero() {
            Some(Coeff::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, q: u32, t: u32) -> Coeff {
        self.terms.get(&Exp::new(q, t)).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.keys().map(|e| e.q).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.keys().map(|e| e.t).max().unwrap_or(0)
    }

    /// Largest term in the canonical order, i.e. the last one serialized.
    pub fn leading(&self) -> Option<(Exp, &Coeff)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, e: Exp, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QtPoly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn mul_monomial(&self, c: &Coeff, q: u32, t: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (Exp::new(e.q + q, e.t + t), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `q -> q^k`, `t -> t^k`.
    pub fn substitute_powers(&self, k: u32) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp::new(e.q * k, e.t * k), c.clone()))
                .collect(),
        }
    }

    pub fn swap_qt(&self) -> Self {
        QtPoly {
            terms: self.terms.iter().map(|(e, c)| (Exp::new(e.t, e.q), c.clone())).collect(),
        }
    }

    /// Substitute exact rational values for `q` and/or `t`; `None` keeps the
    /// variable symbolic.
    pub fn eval_partial(&self, q0: Option<&Coeff>, t0: Option<&Coeff>) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut q_exp = e.q;
            let mut t_exp = e.t;
            if let Some(qv) = q0 {
                coeff *= pow_rat(qv, e.q);
                q_exp = 0;
            }
            if let Some(tv) = t0 {
                coeff *= pow_rat(tv, e.t);
                t_exp = 0;
            }
            out.add_term(Exp::new(q_exp, t_exp), coeff);
        }
        out
    }

    /// Signed content: the positive rational `c` with `self / c` a primitive
    /// integer polynomial, carrying the sign of the leading coefficient.
    /// Zero for the zero polynomial.
    pub fn content_signed(&self) -> Coeff {
        let Some((_, lead)) = self.leading() else {
            return Coeff::zero();
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mag = Coeff::new(num_gcd, den_lcm);
        if lead.is_negative() {
            -mag
        } else {
            mag
        }
    }

    /// `self / content_signed()`: primitive integer coefficients, positive
    /// leading coefficient. Zero maps to zero.
    pub fn primitive_signed(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content_signed();
        self.scale(&c.recip())
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &QtPoly) -> QtPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if let Some(c) = d.as_constant() {
            return self.scale(&c.recip());
        }
        let mut rem = self.clone();
        let mut quot = QtPoly::zero();
        let (d_lead_exp, d_lead_c) = d.leading().expect("nonzero divisor");
        while !rem.is_zero() {
            let (r_exp, r_c) = rem.leading().expect("nonzero remainder");
            assert!(
                r_exp.q >= d_lead_exp.q && r_exp.t >= d_lead_exp.t,
                "inexact polynomial division"
            );
            let e = Exp::new(r_exp.q - d_lead_exp.q, r_exp.t - d_lead_exp.t);
            let c = r_c / d_lead_c;
            quot.add_term(e, c.clone());
            let piece = d.mul_monomial(&c, e.q, e.t);
            rem = &rem - &piece;
        }
        quot
    }

    /// Polynomial gcd, returned primitive with positive leading coefficient
    /// (`1` for coprime inputs up to scalars). `gcd(0, b) = primitive(b)`.
    pub fn gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
        if a.is_zero() {
            return b.primitive_signed();
        }
        if b.is_zero() {
            return a.primitive_signed();
        }
        // Common monomial factor first; it also covers the monomial inputs.
        let min_q = |p: &QtPoly| p.terms.keys().map(|e| e.q).min().unwrap();
        let min_t = |p: &QtPoly| p.terms.keys().map(|e| e.t).min().unwrap();
        let mq = min_q(a).min(min_q(b));
        let mt = min_t(a).min(min_t(b));
        let a1 = a.shift_down(mq, mt).primitive_signed();
        let b1 = b.shift_down(mq, mt).primitive_signed();
        let core = if a1.is_monomial() || b1.is_monomial() {
            QtPoly::one()
        } else if a1 == b1 {
            a1
        } else {
            biv_gcd(&a1, &b1)
        };
        core.mul_monomial(&Coeff::one(), mq, mt).primitive_signed()
    }

    fn shift_down(&self, q: u32, t: u32) -> QtPoly {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp::new(e.q - q, e.t - t), c.clone()))
                .collect(),
        }
    }

    /// View as a univariate polynomial in `t` with integer coefficients in
    /// Z[q]; requires integer coefficients (use on primitive parts).
    fn to_itq(&self) -> Vec<IPoly> {
        let mut rows: Vec<IPoly> = vec![Vec::new(); self.deg_t() as usize + 1];
        for (e, c) in &self.terms {
            debug_assert!(c.is_integer(), "to_itq on a non-integer polynomial");
            let row = &mut rows[e.t as usize];
            if row.len() <= e.q as usize {
                row.resize(e.q as usize + 1, BigInt::zero());
            }
            row[e.q as usize] = c.to_integer();
        }
        rows
    }

    fn from_itq(rows: &[IPoly]) -> QtPoly {
        let mut p = QtPoly::zero();
        for (t, row) in rows.iter().enumerate() {
            for (q, c) in row.iter().enumerate() {
                p.add_term(Exp::new(q as u32, t as u32), Coeff::from_integer(c.clone()));
            }
        }
        p
    }
}

fn pow_rat(c: &Coeff, n: u32) -> Coeff {
    let mut acc = Coeff::one();
    for _ in 0..n {
        acc *= c;
    }
    acc
}

// ---------------------------------------------------------------------------
// Gcd machinery over Z[q] and Z[q][t], using the subresultant PRS so that
// intermediate degrees and coefficient sizes stay polynomially bounded.
// ---------------------------------------------------------------------------

type IPoly = Vec<BigInt>;

fn ip_trim(p: &mut IPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn ip_is_zero(p: &[BigInt]) -> bool {
    p.is_empty()
}

fn ip_deg(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

fn ip_is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

fn ip_mul(a: &[BigInt], b: &[BigInt]) -> IPoly {
    if ip_is_zero(a) || ip_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    ip_trim(&mut out);
    out
}

fn ip_sub(a: &[BigInt], b: &[BigInt]) -> IPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    ip_trim(&mut out);
    out
}

fn ip_scale(a: &[BigInt], c: &BigInt) -> IPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn ip_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn ip_primitive(p: &[BigInt]) -> IPoly {
    if ip_is_zero(p) {
        return Vec::new();
    }
    let mut c = ip_content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

fn ip_div_scalar_exact(p: &[BigInt], c: &BigInt) -> IPoly {
    debug_assert!(!c.is_zero());
    p.iter()
        .map(|x| {
            let (quot, rem) = x.div_rem(c);
            debug_assert!(rem.is_zero(), "inexact scalar division");
            quot
        })
        .collect()
}

/// Exact division in Z[q]; panics in debug builds if inexact.
fn ip_div_exact(a: &[BigInt], b: &[BigInt]) -> IPoly {
    if ip_is_zero(a) {
        return Vec::new();
    }
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    while !ip_is_zero(&r) {
        debug_assert!(ip_deg(&r) >= ip_deg(b), "inexact division in Z[q]");
        let shift = ip_deg(&r) - ip_deg(b);
        let (c, rem) = r.last().unwrap().div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact division in Z[q]");
        q[shift] = c.clone();
        let mut shifted = vec![BigInt::zero(); shift];
        shifted.extend(ip_scale(b, &c));
        r = ip_sub(&r, &shifted);
    }
    ip_trim(&mut q);
    q
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b` in Z[q].
fn ip_prem(a: &[BigInt], b: &[BigInt]) -> IPoly {
    let lb = b.last().unwrap().clone();
    let mut r = a.to_vec();
    let mut steps = ip_deg(a) - ip_deg(b) + 1;
    while !ip_is_zero(&r) && ip_deg(&r) >= ip_deg(b) {
        let shift = ip_deg(&r) - ip_deg(b);
        let lr = r.last().unwrap().clone();
        let mut shifted = vec![BigInt::zero(); shift];
        shifted.extend(ip_scale(b, &lr));
        r = ip_sub(&ip_scale(&r, &lb), &shifted);
        steps -= 1;
    }
    // Match the official normalization lc(b)^(delta+1) * a mod b.
    for _ in 0..steps {
        r = ip_scale(&r, &lb);
    }
    r
}

/// Subresultant-PRS gcd in Z[q]; result is primitive with positive leading
/// coefficient.
fn ip_gcd(a: &[BigInt], b: &[BigInt]) -> IPoly {
    let mut a = ip_primitive(a);
    let mut b = ip_primitive(b);
    if ip_is_zero(&a) {
        return b;
    }
    if ip_is_zero(&b) {
        return a;
    }
    if ip_deg(&a) < ip_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = ip_deg(&a) - ip_deg(&b);
        let r = ip_prem(&a, &b);
        if ip_is_zero(&r) {
            break;
        }
        if ip_deg(&r) == 0 {
            return vec![BigInt::one()];
        }
        a = b;
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor *= &h;
        }
        b = ip_div_scalar_exact(&r, &divisor);
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut num = g.clone();
                for _ in 1..delta {
                    num *= &g;
                }
                let mut den = BigInt::one();
                for _ in 1..delta {
                    den *= &h;
                }
                let (quot, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                quot
            }
        };
    }
    if ip_deg(&b) == 0 {
        vec![BigInt::one()]
    } else {
        ip_primitive(&b)
    }
}

// --- same construction one level up: Z[q][t] -------------------------------

type TPoly = Vec<IPoly>;

fn tq_trim(p: &mut TPoly) {
    while p.last().map(|r| ip_is_zero(r)).unwrap_or(false) {
        p.pop();
    }
}

fn tq_is_zero(p: &[IPoly]) -> bool {
    p.is_empty()
}

fn tq_deg(p: &[IPoly]) -> usize {
    p.len().saturating_sub(1)
}

fn tq_content(p: &[IPoly]) -> IPoly {
    let mut g: IPoly = Vec::new();
    for row in p {
        if ip_is_zero(row) {
            continue;
        }
        g = if ip_is_zero(&g) { ip_primitive(row) } else { ip_gcd(&g, row) };
        if ip_is_one(&g) {
            break;
        }
    }
    g
}

fn tq_primitive(p: &[IPoly]) -> TPoly {
    if tq_is_zero(p) {
        return Vec::new();
    }
    let c = tq_content(p);
    if ip_is_one(&c) {
        return p.to_vec();
    }
    p.iter()
        .map(|row| if ip_is_zero(row) { Vec::new() } else { ip_div_exact(row, &c) })
        .collect()
}

fn tq_scale(p: &[IPoly], c: &[BigInt]) -> TPoly {
    p.iter().map(|row| ip_mul(row, c)).collect()
}

fn tq_div_scalar_exact(p: &[IPoly], c: &[BigInt]) -> TPoly {
    p.iter()
        .map(|row| if ip_is_zero(row) { Vec::new() } else { ip_div_exact(row, c) })
        .collect()
}

fn tq_prem(a: &[IPoly], b: &[IPoly]) -> TPoly {
    let lb = b.last().unwrap().clone();
    let mut r: TPoly = a.to_vec();
    let mut steps = tq_deg(a) - tq_deg(b) + 1;
    while !tq_is_zero(&r) && tq_deg(&r) >= tq_deg(b) {
        let shift = tq_deg(&r) - tq_deg(b);
        let lr = r.last().unwrap().clone();
        let mut next = tq_scale(&r, &lb);
        for (i, row) in b.iter().enumerate() {
            next[i + shift] = ip_sub(&next[i + shift], &ip_mul(row, &lr));
        }
        tq_trim(&mut next);
        r = next;
        steps -= 1;
    }
    for _ in 0..steps {
        r = tq_scale(&r, &lb);
    }
    r
}

/// Subresultant-PRS gcd in Z[q][t] of primitive-in-t inputs.
fn tq_gcd_primitive(mut a: TPoly, mut b: TPoly) -> TPoly {
    if tq_deg(&a) < tq_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g: IPoly = vec![BigInt::one()];
    let mut h: IPoly = vec![BigInt::one()];
    loop {
        let delta = tq_deg(&a) - tq_deg(&b);
        let r = tq_prem(&a, &b);
        if tq_is_zero(&r) {
            break;
        }
        if tq_deg(&r) == 0 {
            return vec![vec![BigInt::one()]];
        }
        a = b;
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor = ip_mul(&divisor, &h);
        }
        b = tq_div_scalar_exact(&r, &divisor);
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut num = g.clone();
                for _ in 1..delta {
                    num = ip_mul(&num, &g);
                }
                let mut den: IPoly = vec![BigInt::one()];
                for _ in 1..delta {
                    den = ip_mul(&den, &h);
                }
                ip_div_exact(&num, &den)
            }
        };
    }
    if tq_deg(&b) == 0 {
        vec![vec![BigInt::one()]]
    } else {
        tq_primitive(&b)
    }
}

fn biv_gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    // Inputs are primitive integer polynomials here.
    let ta = a.to_itq();
    let tb = b.to_itq();
    let ca = tq_content(&ta);
    let cb = tq_content(&tb);
    let content_gcd = ip_gcd(&ca, &cb);
    let pa = tq_primitive(&ta);
    let pb = tq_primitive(&tb);
    let prim = tq_gcd_primitive(pa, pb);
    let combined: TPoly = prim.iter().map(|row| ip_mul(row, &content_gcd)).collect();
    QtPoly::from_itq(&combined)
}

// ---------------------------------------------------------------------------
// Operators and num-traits instances.
// ---------------------------------------------------------------------------

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(Exp::new(ea.q + eb.q, ea.t + eb.t), ca * cb);
            }
        }
        out
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(QtPoly, Add, add);
forward_owned_binop!(QtPoly, Sub, sub);
forward_owned_binop!(QtPoly, Mul, mul);

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Zero for QtPoly {
    fn zero() -> Self {
        QtPoly::zero()
    }
    fn is_zero(&self) -> bool {
        QtPoly::is_zero(self)
    }
}

impl One for QtPoly {
    fn one() -> Self {
        QtPoly::one()
    }
    fn is_one(&self) -> bool {
        QtPoly::is_one(self)
    }
}
