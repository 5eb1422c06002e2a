//! Quaternion algebras (a,b) over the rationals with involutions of the
//! first kind: element arithmetic, reduced trace and norm, ramification,
//! symmetric/skew decompositions, the Goldman element of A x A under the
//! twisted sandwich action, and the explicit splitting of the (1,b) family.

use num_traits::{One, Signed, Zero};

use crate::arith::{hilbert_symbol, symbol_support, Place, Rational};
use crate::error::{Error, Result};
use crate::linalg;

/// The quaternion algebra with i^2 = a, j^2 = b, ij = -ji = k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionAlgebra {
    pub a: Rational,
    pub b: Rational,
}

impl QuaternionAlgebra {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(QuaternionAlgebra { a, b })
    }

    pub fn hamilton() -> Self {
        QuaternionAlgebra { a: crate::rint(-1), b: crate::rint(-1) }
    }

    pub fn zero(&self) -> Quat {
        Quat::new(self.clone(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn one(&self) -> Quat {
        Quat::scalar(self.clone(), Rational::one())
    }

    pub fn basis(&self) -> [Quat; 4] {
        let z = Rational::zero();
        let o = Rational::one();
        [
            Quat::new(self.clone(), o.clone(), z.clone(), z.clone(), z.clone()),
            Quat::new(self.clone(), z.clone(), o.clone(), z.clone(), z.clone()),
            Quat::new(self.clone(), z.clone(), z.clone(), o.clone(), z.clone()),
            Quat::new(self.clone(), z.clone(), z.clone(), z.clone(), o),
        ]
    }

    /// Places where the algebra is division; empty iff split. The set has
    /// even cardinality by the product formula.
    pub fn ramified_places(&self) -> std::collections::BTreeSet<Place> {
        symbol_support(&self.a, &self.b)
            .into_iter()
            .filter(|&v| hilbert_symbol(&self.a, &self.b, v).unwrap() == -1)
            .collect()
    }

    pub fn is_split(&self) -> bool {
        self.ramified_places().is_empty()
    }

    /// Reduced norm form <1, -a, -b, ab> as a quadratic form.
    pub fn norm_form(&self) -> crate::qform::QuadraticForm {
        crate::qform::pfister(&[self.a.clone(), self.b.clone()]).expect("nonzero constants")
    }
}

/// Element w + x i + y j + z k of a quaternion algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quat {
    pub algebra: QuaternionAlgebra,
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quat {
    pub fn new(algebra: QuaternionAlgebra, w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quat { algebra, w, x, y, z }
    }

    pub fn scalar(algebra: QuaternionAlgebra, w: Rational) -> Self {
        let z = Rational::zero();
        Quat::new(algebra, w, z.clone(), z.clone(), z)
    }

    pub fn from_coeffs(algebra: &QuaternionAlgebra, c: [Rational; 4]) -> Self {
        let [w, x, y, z] = c;
        Quat::new(algebra.clone(), w, x, y, z)
    }

    pub fn coeffs(&self) -> [Rational; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }

    pub fn add(&self, other: &Quat) -> Quat {
        Quat::new(
            self.algebra.clone(),
            &self.w + &other.w,
            &self.x + &other.x,
            &self.y + &other.y,
            &self.z + &other.z,
        )
    }

    pub fn sub(&self, other: &Quat) -> Quat {
        Quat::new(
            self.algebra.clone(),
            &self.w - &other.w,
            &self.x - &other.x,
            &self.y - &other.y,
            &self.z - &other.z,
        )
    }

    pub fn neg(&self) -> Quat {
        Quat::new(self.algebra.clone(), -self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    pub fn scale(&self, c: &Rational) -> Quat {
        Quat::new(self.algebra.clone(), &self.w * c, &self.x * c, &self.y * c, &self.z * c)
    }

    pub fn mul(&self, q: &Quat) -> Quat {
        let a = &self.algebra.a;
        let b = &self.algebra.b;
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&q.w, &q.x, &q.y, &q.z);
        let ab = a * b;
        Quat::new(
            self.algebra.clone(),
            w1 * w2 + a * (x1 * x2) + b * (y1 * y2) - &ab * (z1 * z2),
            w1 * x2 + x1 * w2 - b * (y1 * z2) + b * (z1 * y2),
            w1 * y2 + y1 * w2 + a * (x1 * z2) - a * (z1 * x2),
            w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
        )
    }

    /// Canonical (quaternion) conjugation.
    pub fn conj(&self) -> Quat {
        Quat::new(self.algebra.clone(), self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    pub fn trd(&self) -> Rational {
        &self.w + &self.w
    }

    pub fn nrd(&self) -> Rational {
        let a = &self.algebra.a;
        let b = &self.algebra.b;
        &self.w * &self.w - a * (&self.x * &self.x) - b * (&self.y * &self.y)
            + a * b * (&self.z * &self.z)
    }

    pub fn inverse(&self) -> Result<Quat> {
        let n = self.nrd();
        if n.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj().scale(&(Rational::one() / n)))
    }
}

impl std::fmt::Display for Quat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (c, sym) in [(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_zero() {
                continue;
            }
            if wrote && c.is_positive() {
                write!(f, "+")?;
            }
            if sym.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{sym}")?;
            } else if (-c.clone()).is_one() {
                write!(f, "-{sym}")?;
            } else {
                write!(f, "{c}{sym}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An involution of the first kind on a quaternion algebra: the canonical
/// (symplectic) involution, or Int(u) composed with it (orthogonal) for a
/// pure invertible u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionSpec {
    Canonical,
    Inner(Quat),
}

/// Type of an involution: orthogonal or symplectic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvolutionType {
    Orthogonal,
    Symplectic,
}

impl InvolutionType {
    pub fn sign(self) -> i8 {
        match self {
            InvolutionType::Orthogonal => 1,
            InvolutionType::Symplectic => -1,
        }
    }

    pub fn from_sign(s: i8) -> Self {
        if s >= 0 {
            InvolutionType::Orthogonal
        } else {
            InvolutionType::Symplectic
        }
    }

    pub fn flip(self) -> Self {
        match self {
            InvolutionType::Orthogonal => InvolutionType::Symplectic,
            InvolutionType::Symplectic => InvolutionType::Orthogonal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InvolutionType::Orthogonal => "orthogonal",
            InvolutionType::Symplectic => "symplectic",
        }
    }
}

impl InvolutionSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            InvolutionSpec::Canonical => Ok(()),
            InvolutionSpec::Inner(u) => {
                if !u.is_pure() {
                    return Err(Error::WrongSymmetry);
                }
                if u.nrd().is_zero() {
                    return Err(Error::ZeroDivisor);
                }
                Ok(())
            }
        }
    }

    pub fn kind(&self) -> InvolutionType {
        match self {
            InvolutionSpec::Canonical => InvolutionType::Symplectic,
            InvolutionSpec::Inner(_) => InvolutionType::Orthogonal,
        }
    }

    /// Apply the involution to an element.
    pub fn apply(&self, q: &Quat) -> Quat {
        match self {
            InvolutionSpec::Canonical => q.conj(),
            InvolutionSpec::Inner(u) => {
                let inv = u.inverse().expect("u invertible by invariant");
                inv.mul(&q.conj()).mul(u)
            }
        }
    }

    /// Bases of the symmetric and skew-symmetric subspaces: (sym, skew).
    pub fn sym_skew_basis(&self, alg: &QuaternionAlgebra) -> (Vec<Quat>, Vec<Quat>) {
        let basis = alg.basis();
        let mut minus = vec![vec![Rational::zero(); 4]; 4];
        let mut plus = vec![vec![Rational::zero(); 4]; 4];
        for (col, e) in basis.iter().enumerate() {
            let s = self.apply(e).coeffs();
            let ec = e.coeffs();
            for r in 0..4 {
                minus[r][col] = &s[r] - &ec[r];
                plus[r][col] = &s[r] + &ec[r];
            }
        }
        let sym = linalg::kernel_basis(&minus)
            .into_iter()
            .map(|v| coeff_vec_to_quat(alg, &v))
            .collect();
        let skew = linalg::kernel_basis(&plus)
            .into_iter()
            .map(|v| coeff_vec_to_quat(alg, &v))
            .collect();
        (sym, skew)
    }
}

fn coeff_vec_to_quat(alg: &QuaternionAlgebra, v: &[Rational]) -> Quat {
    Quat::new(alg.clone(), v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
}

/// Element of A x A over the basis {1,i,j,k} x {1,i,j,k}; coefficient
/// coeffs[s][u] sits on e_s (x) e_u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    pub algebra: QuaternionAlgebra,
    pub coeffs: [[Rational; 4]; 4],
}

impl TensorElement {
    pub fn zero(alg: &QuaternionAlgebra) -> Self {
        TensorElement {
            algebra: alg.clone(),
            coeffs: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())),
        }
    }

    pub fn unit(alg: &QuaternionAlgebra) -> Self {
        let mut t = TensorElement::zero(alg);
        t.coeffs[0][0] = Rational::one();
        t
    }

    /// Simple tensor x (x) y.
    pub fn simple(x: &Quat, y: &Quat) -> Self {
        let mut t = TensorElement::zero(&x.algebra);
        let xc = x.coeffs();
        let yc = y.coeffs();
        for s in 0..4 {
            for u in 0..4 {
                t.coeffs[s][u] = &xc[s] * &yc[u];
            }
        }
        t
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut t = TensorElement::zero(&self.algebra);
        for s in 0..4 {
            for u in 0..4 {
                t.coeffs[s][u] = &self.coeffs[s][u] + &other.coeffs[s][u];
            }
        }
        t
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut t = TensorElement::zero(&self.algebra);
        for s in 0..4 {
            for u in 0..4 {
                t.coeffs[s][u] = &self.coeffs[s][u] - &other.coeffs[s][u];
            }
        }
        t
    }

    /// Product in the 16-dimensional algebra A x A.
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let alg = &self.algebra;
        let basis = alg.basis();
        let mut t = TensorElement::zero(alg);
        for s in 0..4 {
            for u in 0..4 {
                if self.coeffs[s][u].is_zero() {
                    continue;
                }
                for s2 in 0..4 {
                    for u2 in 0..4 {
                        if other.coeffs[s2][u2].is_zero() {
                            continue;
                        }
                        let c = &self.coeffs[s][u] * &other.coeffs[s2][u2];
                        let left = basis[s].mul(&basis[s2]).coeffs();
                        let right = basis[u].mul(&basis[u2]).coeffs();
                        for m in 0..4 {
                            if left[m].is_zero() {
                                continue;
                            }
                            for n in 0..4 {
                                if right[n].is_zero() {
                                    continue;
                                }
                                let add = &c * &left[m] * &right[n];
                                t.coeffs[m][n] = &t.coeffs[m][n] + &add;
                            }
                        }
                    }
                }
            }
        }
        t
    }

    /// Apply maps slotwise: (f (x) g)(Sum t_{su} e_s (x) e_u).
    pub fn map_slots(
        &self,
        f: impl Fn(&Quat) -> Quat,
        g: impl Fn(&Quat) -> Quat,
    ) -> TensorElement {
        let alg = &self.algebra;
        let basis = alg.basis();
        let mut t = TensorElement::zero(alg);
        for s in 0..4 {
            for u in 0..4 {
                if self.coeffs[s][u].is_zero() {
                    continue;
                }
                let fs = f(&basis[s]).coeffs();
                let gu = g(&basis[u]).coeffs();
                for m in 0..4 {
                    if fs[m].is_zero() {
                        continue;
                    }
                    for n in 0..4 {
                        if gu[n].is_zero() {
                            continue;
                        }
                        let add = &self.coeffs[s][u] * &fs[m] * &gu[n];
                        t.coeffs[m][n] = &t.coeffs[m][n] + &add;
                    }
                }
            }
        }
        t
    }
}

/// The Goldman element g = (1(x)1)/2 + (i(x)i)/(2a) + (j(x)j)/(2b)
/// - (k(x)k)/(2ab), built from the reduced-trace-dual basis.
pub fn goldman_element(alg: &QuaternionAlgebra) -> TensorElement {
    let mut t = TensorElement::zero(alg);
    let two = crate::rint(2);
    let a = &alg.a;
    let b = &alg.b;
    t.coeffs[0][0] = Rational::one() / &two;
    t.coeffs[1][1] = Rational::one() / (&two * a);
    t.coeffs[2][2] = Rational::one() / (&two * b);
    t.coeffs[3][3] = -(Rational::one() / (&two * a * b));
    t
}

/// Twisted sandwich action: t . x = Sum t_{su} e_s x sigma(e_u).
pub fn twisted_sandwich(t: &TensorElement, x: &Quat, sigma: &InvolutionSpec) -> Quat {
    let alg = &t.algebra;
    let basis = alg.basis();
    let mut acc = alg.zero();
    for s in 0..4 {
        for u in 0..4 {
            if t.coeffs[s][u].is_zero() {
                continue;
            }
            let term = basis[s].mul(x).mul(&sigma.apply(&basis[u])).scale(&t.coeffs[s][u]);
            acc = acc.add(&term);
        }
    }
    acc
}

/// 2x2 rational matrix, the target of the explicit splitting of (1,b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub e: [[Rational; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let mut r: [[Rational; 2]; 2] = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = &self.e[i][0] * &o.e[0][j] + &self.e[i][1] * &o.e[1][j];
            }
        }
        Mat2 { e: r }
    }

    pub fn trace(&self) -> Rational {
        &self.e[0][0] + &self.e[1][1]
    }

    pub fn det(&self) -> Rational {
        &self.e[0][0] * &self.e[1][1] - &self.e[0][1] * &self.e[1][0]
    }

    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(
            self.e[1][1].clone(),
            -self.e[0][1].clone(),
            -self.e[1][0].clone(),
            self.e[0][0].clone(),
        )
    }
}

/// Explicit algebra map (1,b) -> M_2(Q): 1 -> I, i -> diag(1,-1),
/// j -> [[0,b],[1,0]], k -> [[0,b],[-1,0]]. Only the a = 1 family is
/// supported; general rational splitting is out of scope.
pub fn split_morita(alg: &QuaternionAlgebra, q: &Quat) -> Result<Mat2> {
    if !alg.a.is_one() {
        return Err(Error::UnsupportedSplitting);
    }
    let b = &alg.b;
    Ok(Mat2::new(
        &q.w + &q.x,
        b * (&q.y + &q.z),
        &q.y - &q.z,
        &q.w - &q.x,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    fn hamilton() -> QuaternionAlgebra {
        QuaternionAlgebra::hamilton()
    }

    fn rng_quat(alg: &QuaternionAlgebra, seed: &mut u64) -> Quat {
        let mut next = |s: &mut u64| {
            *s ^= *s << 13;
            *s ^= *s >> 7;
            *s ^= *s << 17;
            ((*s % 11) as i64) - 5
        };
        Quat::new(
            alg.clone(),
            rint(next(seed)),
            rint(next(seed)),
            rint(next(seed)),
            rint(next(seed)),
        )
    }

    #[test]
    fn hamilton_structure_constants() {
        let h = hamilton();
        let [_, i, j, k] = h.basis();
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(k.nrd(), rint(1));
        assert_eq!(i.mul(&i), Quat::scalar(h.clone(), rint(-1)));
    }

    #[test]
    fn trace_of_conj_times_self_is_twice_norm() {
        let mut seed = 7u64;
        for alg in [hamilton(), QuaternionAlgebra::new(rint(2), rint(5)).unwrap()] {
            for _ in 0..100 {
                let q = rng_quat(&alg, &mut seed);
                let lhs = q.conj().mul(&q);
                assert_eq!(lhs.trd(), rint(2) * q.nrd());
                let p = rng_quat(&alg, &mut seed);
                assert_eq!(p.mul(&q).nrd(), p.nrd() * q.nrd());
            }
        }
    }

    #[test]
    fn invertibility_in_indefinite_algebra() {
        let alg = QuaternionAlgebra::new(rint(2), rint(5)).unwrap();
        let one_plus_i = Quat::new(alg.clone(), rint(1), rint(1), rint(0), rint(0));
        assert_eq!(one_plus_i.nrd(), rint(-1));
        let inv = one_plus_i.inverse().unwrap();
        assert_eq!(one_plus_i.mul(&inv), alg.one());
        // 1 + i in (1,1) has reduced norm zero
        let split = QuaternionAlgebra::new(rint(1), rint(1)).unwrap();
        let zd = Quat::new(split, rint(1), rint(1), rint(0), rint(0));
        assert_eq!(zd.inverse(), Err(Error::ZeroDivisor));
    }

    #[test]
    fn ramified_places_examples() {
        let split = QuaternionAlgebra::new(rint(1), rint(7)).unwrap();
        assert!(split.is_split());
        let h = hamilton();
        let expect: std::collections::BTreeSet<Place> =
            [Place::Finite(2), Place::Infinity].into();
        assert_eq!(h.ramified_places(), expect);
        let q23 = QuaternionAlgebra::new(rint(2), rint(3)).unwrap();
        let expect: std::collections::BTreeSet<Place> =
            [Place::Finite(2), Place::Finite(3)].into();
        assert_eq!(q23.ramified_places(), expect);
        for (a, b) in [(-1i64, 3), (5, 7), (-2, -5), (6, 10), (-1, -3)] {
            let alg = QuaternionAlgebra::new(rint(a), rint(b)).unwrap();
            assert_eq!(alg.ramified_places().len() % 2, 0);
        }
    }

    #[test]
    fn involution_examples() {
        let h = hamilton();
        let [_, i, j, k] = h.basis();
        assert_eq!(InvolutionSpec::Canonical.apply(&i), i.neg());
        let inner_i = InvolutionSpec::Inner(i.clone());
        inner_i.validate().unwrap();
        assert_eq!(inner_i.apply(&i), i.neg());
        assert_eq!(inner_i.apply(&j), j);
        assert_eq!(inner_i.apply(&k), k);
        let mut seed = 99u64;
        for sigma in [InvolutionSpec::Canonical, inner_i] {
            for _ in 0..100 {
                let q = rng_quat(&h, &mut seed);
                assert_eq!(sigma.apply(&sigma.apply(&q)), q);
            }
        }
    }

    #[test]
    fn involution_is_antimultiplicative() {
        let alg = QuaternionAlgebra::new(rint(2), rint(-3)).unwrap();
        let [_, i, _, _] = alg.basis();
        let mut seed = 31u64;
        for sigma in [InvolutionSpec::Canonical, InvolutionSpec::Inner(i)] {
            for _ in 0..50 {
                let p = rng_quat(&alg, &mut seed);
                let q = rng_quat(&alg, &mut seed);
                assert_eq!(sigma.apply(&p.mul(&q)), sigma.apply(&q).mul(&sigma.apply(&p)));
            }
        }
    }

    #[test]
    fn sym_skew_dimensions() {
        let h = hamilton();
        let (sym, skew) = InvolutionSpec::Canonical.sym_skew_basis(&h);
        assert_eq!((sym.len(), skew.len()), (1, 3));
        assert!(sym[0].is_scalar());
        let [_, i, _, _] = h.basis();
        let (sym, skew) = InvolutionSpec::Inner(i.clone()).sym_skew_basis(&h);
        assert_eq!((sym.len(), skew.len()), (3, 1));
        // the skew line of Inner(i) is spanned by i
        assert!(skew[0].w.is_zero() && skew[0].y.is_zero() && skew[0].z.is_zero());
    }

    #[test]
    fn goldman_square_is_one_and_symmetric() {
        for (a, b) in [(-1i64, -1), (2, 5), (-1, -3), (1, 7), (3, -2)] {
            let alg = QuaternionAlgebra::new(rint(a), rint(b)).unwrap();
            let g = goldman_element(&alg);
            assert_eq!(g.mul(&g), TensorElement::unit(&alg));
            let [_, i, _, _] = alg.basis();
            for sigma in [InvolutionSpec::Canonical, InvolutionSpec::Inner(i)] {
                let mapped = g.map_slots(|q| sigma.apply(q), |q| sigma.apply(q));
                assert_eq!(mapped, g, "(sigma x sigma)(g) = g for ({a},{b})");
            }
        }
    }

    #[test]
    fn goldman_hamilton_has_half_coefficients() {
        let g = goldman_element(&hamilton());
        assert_eq!(g.coeffs[0][0], rat(1, 2));
        assert_eq!(g.coeffs[1][1], rat(-1, 2));
        assert_eq!(g.coeffs[2][2], rat(-1, 2));
        assert_eq!(g.coeffs[3][3], rat(-1, 2));
    }

    #[test]
    fn goldman_exchange_identity() {
        // (x (x) y) g = g (y (x) x)
        let alg = QuaternionAlgebra::new(rint(2), rint(-3)).unwrap();
        let g = goldman_element(&alg);
        let mut seed = 5u64;
        for _ in 0..50 {
            let x = rng_quat(&alg, &mut seed);
            let y = rng_quat(&alg, &mut seed);
            let lhs = TensorElement::simple(&x, &y).mul(&g);
            let rhs = g.mul(&TensorElement::simple(&y, &x));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn twisted_action_goldman_identities() {
        let mut seed = 17u64;
        for (a, b) in [(-1i64, -1), (2, 5), (-1, -3), (1, 3)] {
            let alg = QuaternionAlgebra::new(rint(a), rint(b)).unwrap();
            let g = goldman_element(&alg);
            let [_, i, _, _] = alg.basis();
            for sigma in [InvolutionSpec::Canonical, InvolutionSpec::Inner(i)] {
                let eps = rint(sigma.kind().sign() as i64);
                for _ in 0..25 {
                    let x = rng_quat(&alg, &mut seed);
                    // g . x = eps sigma(x)
                    assert_eq!(twisted_sandwich(&g, &x, &sigma), sigma.apply(&x).scale(&eps));
                    // (Id (x) sigma)(g) . x = Trd(x)
                    let g_id_sigma = g.map_slots(|q| q.clone(), |q| sigma.apply(q));
                    assert_eq!(
                        twisted_sandwich(&g_id_sigma, &x, &sigma),
                        Quat::scalar(alg.clone(), x.trd())
                    );
                    // (sigma (x) Id)(g) . x = Trd(x)
                    let g_sigma_id = g.map_slots(|q| sigma.apply(q), |q| q.clone());
                    assert_eq!(
                        twisted_sandwich(&g_sigma_id, &x, &sigma),
                        Quat::scalar(alg.clone(), x.trd())
                    );
                    // (sigma (x) sigma)(g) . x = eps sigma(x)
                    let g_both = g.map_slots(|q| sigma.apply(q), |q| sigma.apply(q));
                    assert_eq!(
                        twisted_sandwich(&g_both, &x, &sigma),
                        sigma.apply(&x).scale(&eps)
                    );
                    // unit acts as identity
                    assert_eq!(twisted_sandwich(&TensorElement::unit(&alg), &x, &sigma), x);
                }
            }
        }
    }

    #[test]
    fn split_morita_is_multiplicative() {
        let alg = QuaternionAlgebra::new(rint(1), rint(7)).unwrap();
        let basis = alg.basis();
        for p in &basis {
            for q in &basis {
                let lhs = split_morita(&alg, &p.mul(q)).unwrap();
                let rhs = split_morita(&alg, p).unwrap().mul(&split_morita(&alg, q).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        let mut seed = 23u64;
        for _ in 0..100 {
            let q = rng_quat(&alg, &mut seed);
            let m = split_morita(&alg, &q).unwrap();
            assert_eq!(m.det(), q.nrd());
            assert_eq!(m.trace(), q.trd());
            assert_eq!(split_morita(&alg, &q.conj()).unwrap(), m.adjugate());
        }
        let other = QuaternionAlgebra::new(rint(4), rint(7)).unwrap();
        assert_eq!(split_morita(&other, &other.one()), Err(Error::UnsupportedSplitting));
    }

    #[test]
    fn norm_form_detects_splitting() {
        for (a, b, split) in [(1i64, 7i64, true), (-1, -1, false), (2, 3, false), (1, 1, true)] {
            let alg = QuaternionAlgebra::new(rint(a), rint(b)).unwrap();
            assert_eq!(alg.is_split(), split);
            assert_eq!(alg.norm_form().is_hyperbolic(), split);
        }
    }
}
