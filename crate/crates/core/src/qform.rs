//! Diagonal quadratic forms over the rationals with complete local-global
//! invariants: discriminant, Hasse-Witt place set, signature, isotropy,
//! Witt equivalence, anisotropic kernels, Pfister forms and the quadratic
//! trace transfer.
//!
//! The `hasse` field of [`WittInvariants`] records the dimension-adjusted
//! Witt invariant (the Clifford invariant), not the naive product of
//! symbols of a particular diagonalization: the naive product is not
//! constant on Witt classes, while the adjusted one is, vanishes on
//! hyperbolic forms, and satisfies e2 of a 2-fold Pfister form = its symbol.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::arith::{
    self, hilbert_symbol, is_local_square, square_class, Place, Rational, SquareClass,
};
use crate::error::{Error, Result};
use crate::linalg;

/// A diagonal quadratic form <a1,...,an> with nonzero rational entries.
/// The empty form is the zero Witt class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    entries: Vec<Rational>,
}

/// Combination of quadratic forms.
#[derive(Debug, Clone)]
pub enum Combine {
    Sum,
    Tensor,
    Scale(Rational),
}

/// Complete invariant set of a form over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittInvariants {
    pub dim: usize,
    pub signature: i64,
    pub disc: SquareClass,
    /// Places where the Witt (Clifford) invariant is -1; finite support,
    /// even cardinality including the real place.
    pub hasse: BTreeSet<Place>,
}

impl QuadraticForm {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().any(|e| e.is_zero()) {
            return Err(Error::ZeroInput);
        }
        Ok(QuadraticForm { entries })
    }

    pub fn empty() -> Self {
        QuadraticForm { entries: Vec::new() }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        QuadraticForm::new(entries.iter().map(|&n| crate::rint(n)).collect())
            .expect("nonzero integer entries")
    }

    /// k copies of the hyperbolic plane <1,-1>.
    pub fn hyperbolic(k: usize) -> Self {
        let mut entries = Vec::with_capacity(2 * k);
        for _ in 0..k {
            entries.push(crate::rint(1));
            entries.push(crate::rint(-1));
        }
        QuadraticForm { entries }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn signature(&self) -> i64 {
        let pos = self.entries.iter().filter(|e| e.is_positive()).count() as i64;
        pos - (self.dim() as i64 - pos)
    }

    pub fn sum(&self, other: &QuadraticForm) -> QuadraticForm {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        QuadraticForm { entries }
    }

    pub fn tensor(&self, other: &QuadraticForm) -> QuadraticForm {
        let mut entries = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        QuadraticForm { entries }
    }

    pub fn scale(&self, lambda: &Rational) -> Result<QuadraticForm> {
        if lambda.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(QuadraticForm {
            entries: self.entries.iter().map(|e| e * lambda).collect(),
        })
    }

    pub fn neg(&self) -> QuadraticForm {
        QuadraticForm {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Signed discriminant (-1)^(n(n-1)/2) * det, a Witt-class invariant.
    pub fn signed_disc(&self) -> SquareClass {
        let n = self.dim();
        let mut d: Rational = self.entries.iter().product();
        if d.is_zero() {
            d = Rational::one(); // empty form
        }
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            d = -d;
        }
        square_class(&d).expect("entries nonzero")
    }

    /// Places that can carry a nontrivial local invariant of this form.
    fn support(&self) -> Vec<Place> {
        let mut primes: BTreeSet<u64> = BTreeSet::new();
        primes.insert(2);
        for e in &self.entries {
            for n in [e.numer(), e.denom()] {
                for (p, _) in arith::factor(n).expect("nonzero entry") {
                    primes.insert(p);
                }
            }
        }
        let mut out: Vec<Place> = primes.into_iter().map(Place::Finite).collect();
        out.push(Place::Infinity);
        out
    }

    /// Naive Hasse product of this diagonalization at v.
    fn raw_hasse(&self, v: Place) -> i32 {
        let mut s = 1;
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                s *= hilbert_symbol(&self.entries[i], &self.entries[j], v).expect("nonzero");
            }
        }
        s
    }

    /// Dimension-adjusted Witt invariant at v.
    fn witt_invariant(&self, v: Place) -> i32 {
        let d = Rational::from(self.signed_disc().representative().clone());
        let minus_one = crate::rint(-1);
        let correction = match self.dim() % 8 {
            1 | 2 => 1,
            3 => hilbert_symbol(&d, &minus_one, v).unwrap(),
            4 => hilbert_symbol(&(-d), &minus_one, v).unwrap(),
            5 | 6 => hilbert_symbol(&minus_one, &minus_one, v).unwrap(),
            7 => hilbert_symbol(&(-d), &minus_one, v).unwrap(),
            0 => {
                if self.dim() == 0 {
                    1
                } else {
                    hilbert_symbol(&d, &minus_one, v).unwrap()
                }
            }
            _ => unreachable!(),
        };
        self.raw_hasse(v) * correction
    }

    pub fn invariants(&self) -> WittInvariants {
        let mut hasse = BTreeSet::new();
        for v in self.support() {
            if self.witt_invariant(v) == -1 {
                hasse.insert(v);
            }
        }
        WittInvariants {
            dim: self.dim(),
            signature: self.signature(),
            disc: self.signed_disc(),
            hasse,
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.dim() % 2 == 0
            && self.signature() == 0
            && self.signed_disc().is_one()
            && self.invariants().hasse.is_empty()
    }
}

impl std::fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if e.denom().is_one() {
                write!(f, "{}", e.numer())?;
            } else {
                write!(f, "{}/{}", e.numer(), e.denom())?;
            }
        }
        write!(f, ">")
    }
}

/// Diagonalize a symmetric nondegenerate Gram matrix into an equivalent
/// diagonal form; the pivots are returned as they fall out of symmetric
/// Gaussian elimination.
pub fn diagonalize(gram: &[Vec<Rational>]) -> Result<QuadraticForm> {
    let pivots = linalg::congruent_diagonal(&gram.to_vec())?;
    QuadraticForm::new(pivots)
}

/// Sum, tensor product or scaling of diagonal forms.
pub fn combine(op: Combine, q1: &QuadraticForm, q2: Option<&QuadraticForm>) -> Result<QuadraticForm> {
    match op {
        Combine::Sum => Ok(q1.sum(q2.ok_or(Error::ZeroInput)?)),
        Combine::Tensor => Ok(q1.tensor(q2.ok_or(Error::ZeroInput)?)),
        Combine::Scale(lambda) => q1.scale(&lambda),
    }
}

/// n-fold Pfister form <<a1,...,an>> = <1,-a1> x ... x <1,-an>.
pub fn pfister(scalars: &[Rational]) -> Result<QuadraticForm> {
    if scalars.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroInput);
    }
    let mut acc = QuadraticForm::new(vec![crate::rint(1)]).unwrap();
    for a in scalars {
        let factor = QuadraticForm::new(vec![crate::rint(1), -a.clone()]).unwrap();
        acc = factor.tensor(&acc);
    }
    Ok(acc)
}

/// Isotropy over Q_2 by exhaustive primitive-solution search modulo 2^k
/// with a Hensel-liftability screen. Entries are first reduced to their
/// square classes, so k stays small.
fn isotropic_2adic(entries: &[Rational]) -> bool {
    let mut ints: Vec<i64> = entries
        .iter()
        .map(|e| {
            let sc = square_class(e).expect("nonzero");
            num_traits::ToPrimitive::to_i64(sc.representative()).expect("desk scale")
        })
        .collect();
    if ints.iter().all(|a| a % 2 == 0) {
        for a in ints.iter_mut() {
            *a /= 2;
        }
    }
    let maxval = ints.iter().map(|a| a.trailing_zeros()).max().unwrap_or(0);
    let k = 2 * maxval + 3;
    let modulus: u64 = 1 << k;
    let half = (k - 1) / 2;
    let n = ints.len();
    let cs: Vec<u64> = ints.iter().map(|&a| (a.rem_euclid(modulus as i64)) as u64).collect();
    let mut x = vec![0u64; n];
    loop {
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            x[i] += 1;
            if x[i] < modulus {
                break;
            }
            x[i] = 0;
            i += 1;
        }
        if x.iter().all(|&xi| xi % 2 == 0) {
            continue;
        }
        let q: u64 = x
            .iter()
            .zip(&cs)
            .fold(0u64, |acc, (&xi, &ci)| {
                acc.wrapping_add(ci.wrapping_mul(xi.wrapping_mul(xi))) % modulus
            });
        if q != 0 {
            continue;
        }
        let liftable = x.iter().zip(&cs).any(|(&xi, &ci)| {
            let d = (2u64.wrapping_mul(ci).wrapping_mul(xi)) % modulus;
            d != 0 && d.trailing_zeros() <= half
        });
        if liftable {
            return true;
        }
    }
}

/// Local isotropy at an odd prime from the standard rank-3/4 criteria.
fn isotropic_at_odd(entries: &[Rational], p: u64) -> bool {
    let v = Place::Finite(p);
    let n = entries.len();
    let d: Rational = entries.iter().product();
    let eps = {
        let mut s = 1;
        for i in 0..n {
            for j in (i + 1)..n {
                s *= hilbert_symbol(&entries[i], &entries[j], v).unwrap();
            }
        }
        s
    };
    match n {
        3 => eps == hilbert_symbol(&crate::rint(-1), &(-d.clone()), v).unwrap(),
        4 => !is_local_square(&d, v) || eps == hilbert_symbol(&crate::rint(-1), &crate::rint(-1), v).unwrap(),
        _ => true,
    }
}

/// Whether the form has a nontrivial rational zero (Hasse-Minkowski).
pub fn is_isotropic(q: &QuadraticForm) -> bool {
    let n = q.dim();
    if n <= 1 {
        return false;
    }
    let indefinite = q.signature().unsigned_abs() as usize != n;
    if n == 2 {
        let d: Rational = q.entries().iter().product();
        return square_class(&(-d)).unwrap().is_one();
    }
    if !indefinite {
        return false;
    }
    if n >= 5 {
        // a 5-dimensional form over a p-adic field is always isotropic
        return true;
    }
    if !isotropic_2adic(q.entries()) {
        return false;
    }
    for v in q.support() {
        if let Place::Finite(p) = v {
            if p != 2 && !isotropic_at_odd(q.entries(), p) {
                return false;
            }
        }
    }
    true
}

/// q1 and q2 represent the same Witt class iff q1 + (-q2) is hyperbolic.
pub fn witt_equal(q1: &QuadraticForm, q2: &QuadraticForm) -> bool {
    q1.sum(&q2.neg()).is_hyperbolic()
}

/// Local anisotropic dimension of the Witt class of (n, det, hasse) data
/// at a finite place, by peeling hyperbolic planes with the standard
/// isotropy criteria.
fn local_aniso_dim(q: &QuadraticForm, v: Place) -> usize {
    if v == Place::Infinity {
        return q.signature().unsigned_abs() as usize;
    }
    let mut n = q.dim();
    let mut d: Rational = q.entries().iter().product();
    if n == 0 {
        return 0;
    }
    let mut eps = q.raw_hasse(v);
    let minus_one = crate::rint(-1);
    loop {
        let isotropic = match n {
            0 | 1 => false,
            2 => is_local_square(&(-d.clone()), v),
            3 => eps == hilbert_symbol(&minus_one, &(-d.clone()), v).unwrap(),
            4 => {
                !is_local_square(&d, v)
                    || eps == hilbert_symbol(&minus_one, &minus_one, v).unwrap()
            }
            _ => true,
        };
        if !isotropic {
            return n;
        }
        // remove a hyperbolic plane: det divides by -1, and the Hasse
        // invariant of the smaller representative satisfies
        // eps(q0) = eps(q) * (det q0, -1)
        d = -d;
        eps *= hilbert_symbol(&d, &minus_one, v).unwrap();
        n -= 2;
        if n == 0 {
            return 0;
        }
    }
}

/// Dimension of the anisotropic kernel of the Witt class of q.
pub fn anisotropic_dim(q: &QuadraticForm) -> usize {
    let mut best = q.signature().unsigned_abs() as usize;
    for v in q.support() {
        if v != Place::Infinity {
            best = best.max(local_aniso_dim(q, v));
        }
    }
    best
}

/// Candidate square-free first entries for anisotropic representatives,
/// built from the primes relevant to the form plus a few auxiliaries.
fn candidate_pool(q: &QuadraticForm) -> Vec<Rational> {
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    primes.insert(2);
    for e in q.entries() {
        for n in [e.numer(), e.denom()] {
            for (p, _) in arith::factor(n).expect("nonzero") {
                primes.insert(p);
            }
        }
    }
    for p in [3u64, 5, 7] {
        primes.insert(p);
        if primes.len() >= 9 {
            break;
        }
    }
    let primes: Vec<u64> = primes.into_iter().take(9).collect();
    let mut pool: Vec<i128> = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let mut v: i128 = 1;
        for (idx, &p) in primes.iter().enumerate() {
            if mask & (1 << idx) != 0 {
                v = v.saturating_mul(p as i128);
            }
        }
        pool.push(v);
        pool.push(-v);
    }
    pool.sort_by_key(|v| v.abs());
    pool.into_iter()
        .map(|v| Rational::from_integer(v.into()))
        .collect()
}

fn construct_anisotropic(q: &QuadraticForm, n0: usize, pool: &[Rational]) -> Option<QuadraticForm> {
    if n0 == 0 {
        return Some(QuadraticForm::empty());
    }
    if n0 == 1 {
        let d = q.signed_disc();
        return Some(QuadraticForm::new(vec![Rational::from(d.representative().clone())]).unwrap());
    }
    for c in pool {
        let shrunk = q.sum(&QuadraticForm::new(vec![-c.clone()]).unwrap());
        if anisotropic_dim(&shrunk) == n0 - 1 {
            if let Some(rest) = construct_anisotropic(&shrunk, n0 - 1, pool) {
                let mut entries = vec![c.clone()];
                entries.extend(rest.entries().iter().cloned());
                return Some(QuadraticForm { entries });
            }
        }
    }
    None
}

/// Anisotropic Witt-class representative, computed from local data without
/// any rational isotropic-vector search.
pub fn anisotropic_part(q: &QuadraticForm) -> Result<QuadraticForm> {
    let n0 = anisotropic_dim(q);
    if n0 == q.dim() {
        return Ok(q.clone());
    }
    if n0 == 0 {
        return Ok(QuadraticForm::empty());
    }
    let pool = candidate_pool(q);
    let part = construct_anisotropic(q, n0, &pool)
        .ok_or_else(|| Error::Internal("anisotropic representative search exhausted".into()))?;
    debug_assert!(witt_equal(&part, q));
    debug_assert_eq!(anisotropic_dim(&part), part.dim());
    Ok(part)
}

/// Transfer of the rank-1 form <a> along the trace of Q(sqrt(d))/Q, where
/// a = a0 + a1 sqrt(d). The result is hyperbolic when a0 = 0, and
/// <2 a0> <1, d N(a)> otherwise.
pub fn trace_transfer_quadratic(d: &Rational, a0: &Rational, a1: &Rational) -> Result<QuadraticForm> {
    if d.is_zero() || square_class(d)?.is_one() {
        return Err(Error::NotANonSquare(format!("{d}")));
    }
    if a0.is_zero() && a1.is_zero() {
        return Err(Error::ZeroInput);
    }
    if a0.is_zero() {
        return Ok(QuadraticForm::hyperbolic(1));
    }
    let norm = a0 * a0 - d * a1 * a1;
    let two_a0 = crate::rint(2) * a0;
    QuadraticForm::new(vec![two_a0.clone(), two_a0 * d * norm])
}

/// Membership of the Witt class in the fundamental-ideal power I^n, n <= 3.
pub fn in_fundamental_power(q: &QuadraticForm, n: u32) -> Result<bool> {
    if n > 3 {
        return Err(Error::UnsupportedDepth(n));
    }
    if n == 0 {
        return Ok(true);
    }
    if q.dim() % 2 != 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    if !q.signed_disc().is_one() {
        return Ok(false);
    }
    if n == 2 {
        return Ok(true);
    }
    Ok(q.invariants().hasse.is_empty() && q.signature().rem_euclid(8) == 0)
}

/// Grothendieck-Witt class: a virtual dimension together with the
/// anisotropic representative of the Witt class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GWClass {
    pub virtual_dim: i64,
    pub witt: QuadraticForm,
}

impl GWClass {
    pub fn zero() -> Self {
        GWClass { virtual_dim: 0, witt: QuadraticForm::empty() }
    }

    pub fn one() -> Self {
        GWClass::from_form(&QuadraticForm::from_ints(&[1]))
    }

    pub fn from_form(q: &QuadraticForm) -> Self {
        GWClass {
            virtual_dim: q.dim() as i64,
            witt: anisotropic_part(q).expect("class representative"),
        }
    }

    pub fn hyperbolic(k: i64) -> Self {
        GWClass { virtual_dim: 2 * k, witt: QuadraticForm::empty() }
    }

    pub fn is_zero(&self) -> bool {
        self.virtual_dim == 0 && self.witt.is_empty()
    }

    pub fn add(&self, other: &GWClass) -> GWClass {
        GWClass {
            virtual_dim: self.virtual_dim + other.virtual_dim,
            witt: anisotropic_part(&self.witt.sum(&other.witt)).expect("class"),
        }
    }

    pub fn neg(&self) -> GWClass {
        GWClass { virtual_dim: -self.virtual_dim, witt: self.witt.neg() }
    }

    pub fn sub(&self, other: &GWClass) -> GWClass {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &GWClass) -> GWClass {
        GWClass {
            virtual_dim: self.virtual_dim * other.virtual_dim,
            witt: anisotropic_part(&self.witt.tensor(&other.witt)).expect("class"),
        }
    }

    pub fn scale(&self, lambda: &Rational) -> Result<GWClass> {
        Ok(GWClass {
            virtual_dim: self.virtual_dim,
            witt: self.witt.scale(lambda)?,
        })
    }

    pub fn signature(&self) -> i64 {
        self.witt.signature()
    }

    /// Equality in GW(Q): equal virtual dimensions and equal Witt classes.
    pub fn equal(&self, other: &GWClass) -> bool {
        self.virtual_dim == other.virtual_dim && witt_equal(&self.witt, &other.witt)
    }

    /// Equality in W(Q) only.
    pub fn witt_equal(&self, other: &GWClass) -> bool {
        witt_equal(&self.witt, &other.witt)
    }

    /// Entries of a positive (actual-form) representative, if the class
    /// is positive.
    pub fn positive_entries(&self) -> Option<Vec<Rational>> {
        let pad = self.virtual_dim - self.witt.dim() as i64;
        if pad < 0 || pad % 2 != 0 {
            return None;
        }
        let mut entries = self.witt.entries().to_vec();
        for _ in 0..(pad / 2) {
            entries.push(crate::rint(1));
            entries.push(crate::rint(-1));
        }
        Some(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    fn qf(v: &[i64]) -> QuadraticForm {
        QuadraticForm::from_ints(v)
    }

    #[test]
    fn diagonalize_examples() {
        let id = vec![vec![rint(1), rint(0)], vec![rint(0), rint(1)]];
        assert_eq!(diagonalize(&id).unwrap(), qf(&[1, 1]));

        let hyp = vec![vec![rint(0), rint(1)], vec![rint(1), rint(0)]];
        let d = diagonalize(&hyp).unwrap();
        assert_eq!(d, qf(&[2, -2]));
        assert!(witt_equal(&d, &qf(&[1, -1])));

        let m = vec![vec![rint(2), rint(1)], vec![rint(1), rint(2)]];
        assert_eq!(
            diagonalize(&m).unwrap(),
            QuadraticForm::new(vec![rint(2), rat(3, 2)]).unwrap()
        );

        let asym = vec![vec![rint(0), rint(1)], vec![rint(2), rint(0)]];
        assert_eq!(diagonalize(&asym), Err(Error::NonSymmetric));
        let sing = vec![vec![rint(1), rint(0)], vec![rint(0), rint(0)]];
        assert_eq!(diagonalize(&sing), Err(Error::Singular { radical_dim: 1 }));
    }

    #[test]
    fn invariants_examples() {
        let h = qf(&[1, -1]).invariants();
        assert_eq!((h.dim, h.signature), (2, 0));
        assert!(h.disc.is_one());
        assert!(h.hasse.is_empty());

        let q = qf(&[1, 1]).invariants();
        assert_eq!((q.dim, q.signature), (2, 2));
        assert_eq!(*q.disc.representative(), (-1).into());
        assert!(q.hasse.is_empty());

        let p = qf(&[1, -2, -3, 6]).invariants();
        assert_eq!((p.dim, p.signature), (4, 0));
        assert!(p.disc.is_one());
        let expect: BTreeSet<Place> = [Place::Finite(2), Place::Finite(3)].into();
        assert_eq!(p.hasse, expect);
    }

    #[test]
    fn combine_examples() {
        assert_eq!(
            combine(Combine::Sum, &qf(&[1]), Some(&qf(&[-1]))).unwrap(),
            qf(&[1, -1])
        );
        assert_eq!(
            combine(Combine::Tensor, &qf(&[1, -2]), Some(&qf(&[1, -3]))).unwrap(),
            qf(&[1, -3, -2, 6])
        );
        assert_eq!(
            combine(Combine::Scale(rint(2)), &qf(&[1, 3]), None).unwrap(),
            qf(&[2, 6])
        );
    }

    #[test]
    fn pfister_examples() {
        assert_eq!(pfister(&[rint(2), rint(3)]).unwrap(), qf(&[1, -2, -3, 6]));
        assert!(pfister(&[rint(1)]).unwrap().is_hyperbolic());
    }

    #[test]
    fn pfister_clifford_invariant_is_the_symbol() {
        // e2(<<a,b>>) = symbol (a,b) as place sets, on a grid of pairs
        for a in [-6i64, -5, -3, -2, -1, 2, 3, 5, 7, 10] {
            for b in [-7i64, -3, -1, 2, 5, 6, 11, 15] {
                let p = pfister(&[rint(a), rint(b)]).unwrap();
                let inv = p.invariants();
                let symbol: BTreeSet<Place> = arith::symbol_support(&rint(a), &rint(b))
                    .into_iter()
                    .filter(|&v| hilbert_symbol(&rint(a), &rint(b), v).unwrap() == -1)
                    .collect();
                assert_eq!(inv.hasse, symbol, "pfister({a},{b})");
            }
        }
    }

    #[test]
    fn isotropy_examples() {
        assert!(is_isotropic(&qf(&[1, -1])));
        assert!(!is_isotropic(&qf(&[1, 1, 1])));
        assert!(is_isotropic(&qf(&[1, 1, 1, 1, -7])));
        assert!(!is_isotropic(&qf(&[1, 1])));
        // the norm form of the rational Hamilton quaternions is anisotropic
        assert!(!is_isotropic(&qf(&[1, 1, 1, 1])));
        // <1,1,-7> : x^2+y^2 = 7 z^2 has no rational point (7 = 3 mod 4)
        assert!(!is_isotropic(&qf(&[1, 1, -7])));
        // <1,1,-2> : 1 + 1 = 2
        assert!(is_isotropic(&qf(&[1, 1, -2])));
    }

    #[test]
    fn witt_equal_examples() {
        assert!(witt_equal(&qf(&[2, -2]), &qf(&[1, -1])));
        assert!(witt_equal(&qf(&[2, 2]), &qf(&[1, 1])));
        assert!(!witt_equal(&pfister(&[rint(2), rint(3)]).unwrap(), &QuadraticForm::empty()));
        assert!(!witt_equal(&qf(&[1, 1]), &qf(&[1, -1])));
    }

    #[test]
    fn anisotropic_part_examples() {
        assert_eq!(anisotropic_part(&qf(&[1, -1, 3])).unwrap(), qf(&[3]));
        assert!(anisotropic_part(&qf(&[2, 2, -1, -1])).unwrap().is_empty());
        assert_eq!(anisotropic_part(&qf(&[1, 1, 1, 1])).unwrap(), qf(&[1, 1, 1, 1]));
    }

    #[test]
    fn anisotropic_part_roundtrip() {
        let samples = [
            vec![1i64, -2, 3, 5],
            vec![2, 3, -6, 1, 1],
            vec![1, 1, 1, -7],
            vec![-1, -1, 2, 2, 3],
            vec![5, -5, 7, -7],
            vec![1, 2, 3, 4, 5, 6],
        ];
        for s in samples {
            let q = qf(&s);
            let a = anisotropic_part(&q).unwrap();
            assert!(witt_equal(&a, &q));
            assert_eq!(anisotropic_dim(&a), a.dim());
            let index = (q.dim() - a.dim()) / 2;
            let rebuilt = a.sum(&QuadraticForm::hyperbolic(index));
            assert!(witt_equal(&rebuilt, &q));
        }
    }

    #[test]
    fn trace_transfer_examples() {
        // a = sqrt(2): hyperbolic
        let t = trace_transfer_quadratic(&rint(2), &rint(0), &rint(1)).unwrap();
        assert!(t.is_hyperbolic());
        // a = 1: <2,4> ~ <2,1>
        let t = trace_transfer_quadratic(&rint(2), &rint(1), &rint(0)).unwrap();
        assert_eq!(t, qf(&[2, 4]));
        assert!(witt_equal(&t, &qf(&[2, 1])));
        // a = 1 + sqrt(2): <2,-4> ~ <2,-1>
        let t = trace_transfer_quadratic(&rint(2), &rint(1), &rint(1)).unwrap();
        assert_eq!(t, qf(&[2, -4]));
        assert!(witt_equal(&t, &qf(&[2, -1])));
        // matches the Gram matrix [[2a0, 2da1],[2da1, 2da0]] route
        let gram = vec![vec![rint(2), rint(4)], vec![rint(4), rint(4)]];
        assert!(witt_equal(&diagonalize(&gram).unwrap(), &t));
        // square d rejected
        assert!(trace_transfer_quadratic(&rint(4), &rint(1), &rint(0)).is_err());
    }

    #[test]
    fn fundamental_filtration_examples() {
        let p23 = pfister(&[rint(2), rint(3)]).unwrap();
        assert!(in_fundamental_power(&p23, 2).unwrap());
        assert!(!in_fundamental_power(&qf(&[1, 1]), 2).unwrap());
        let p3 = pfister(&[rint(-1), rint(-1), rint(-1)]).unwrap();
        assert!(in_fundamental_power(&p3, 3).unwrap());
        assert!(!in_fundamental_power(&p23, 3).unwrap());
        assert_eq!(in_fundamental_power(&p23, 4), Err(Error::UnsupportedDepth(4)));
    }

    #[test]
    fn hasse_product_formula_on_samples() {
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..200 {
            let dim = 1 + (next() % 5) as usize;
            let mut entries = Vec::new();
            for _ in 0..dim {
                let mut v = (next() % 21) as i64 - 10;
                if v == 0 {
                    v = 1;
                }
                entries.push(rint(v));
            }
            let q = QuadraticForm::new(entries).unwrap();
            let inv = q.invariants();
            assert_eq!(inv.hasse.len() % 2, 0, "even support for {q}");
            assert!(inv.signature.unsigned_abs() as usize <= inv.dim);
            assert_eq!(inv.signature.rem_euclid(2), (inv.dim % 2) as i64);
        }
    }

    #[test]
    fn e2_additive_on_squares_of_fundamental_ideal() {
        let pairs = [
            ([2i64, 3], [5i64, 7]),
            ([-1, -1], [2, 5]),
            ([3, 5], [-1, 6]),
            ([2, 7], [2, 7]),
        ];
        for (x, y) in pairs {
            let qx = pfister(&[rint(x[0]), rint(x[1])]).unwrap();
            let qy = pfister(&[rint(y[0]), rint(y[1])]).unwrap();
            let sum = qx.sum(&qy);
            let sx = qx.invariants().hasse;
            let sy = qy.invariants().hasse;
            let ss = sum.invariants().hasse;
            let symdiff: BTreeSet<Place> = sx.symmetric_difference(&sy).cloned().collect();
            assert_eq!(ss, symdiff);
        }
    }

    #[test]
    fn witt_class_invariants_do_not_depend_on_representative() {
        let q = qf(&[3, -5, 7, 2]);
        let padded = q.sum(&QuadraticForm::hyperbolic(3));
        assert_eq!(q.signed_disc(), padded.signed_disc());
        assert_eq!(q.invariants().hasse, padded.invariants().hasse);
    }

    #[test]
    fn gw_class_arithmetic() {
        let a = GWClass::from_form(&qf(&[1, 2]));
        let b = GWClass::from_form(&qf(&[3]));
        let ab = a.mul(&b);
        assert_eq!(ab.virtual_dim, 2);
        assert!(witt_equal(&ab.witt, &qf(&[3, 6])));
        let diff = a.sub(&a);
        assert!(diff.is_zero());
        assert!(GWClass::hyperbolic(2).witt.is_empty());
    }
}
