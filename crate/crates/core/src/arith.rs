//! Number-theoretic substrate: factorization at desk scale, square classes
//! of rationals, Legendre symbols and Hilbert symbols at every place of the
//! rationals.
//!
//! All computations are exact. Factorization is trial division with a
//! Pollard-rho fallback and is documented for inputs below 2^64 after
//! reduction; larger inputs return [`Error::TooLarge`] instead of running
//! for an unbounded time.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number; reduced, positive denominator.
pub type Rational = num_rational::BigRational;

/// A place of the rationals: a finite prime or the real place.
///
/// The derived order puts finite primes first in increasing order, with the
/// real place last, which is the order used when printing place sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(u64),
    Infinity,
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Canonical representative of a class in Q*/Q*^2: a square-free integer
/// with the sign of the original number.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(BigInt);

impl SquareClass {
    /// The square-free representative, sign included.
    pub fn representative(&self) -> &BigInt {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Product in Q*/Q*^2.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let q = Rational::from_integer(&self.0 * &other.0);
        square_class(&q).expect("nonzero by construction")
    }

    /// Odd primes dividing the representative.
    pub fn odd_primes(&self) -> Vec<u64> {
        let fs = factor(&self.0).expect("representative is canonical");
        fs.into_iter().map(|(p, _)| p).filter(|&p| p != 2).collect()
    }
}

impl std::fmt::Display for SquareClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Factor a nonzero integer into primes with exponents, primes strictly
/// increasing. The sign is not part of the result.
pub fn factor(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut m = n.abs().to_u64().ok_or(Error::TooLarge)?;
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        push_prime_power(&mut out, p, divide_out(&mut m, p));
    }
    let mut d = 53u64;
    while d * d <= m && d < 1 << 16 {
        push_prime_power(&mut out, d, divide_out(&mut m, d));
        d += 2;
    }
    if m > 1 {
        let mut stack = vec![m];
        let mut found: Vec<u64> = Vec::new();
        while let Some(v) = stack.pop() {
            if v == 1 {
                continue;
            }
            if is_prime_u64(v) {
                found.push(v);
            } else {
                let f = pollard_rho(v);
                stack.push(f);
                stack.push(v / f);
            }
        }
        found.sort_unstable();
        for p in found {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, e)) => *e += 1,
                None => out.push((p, 1)),
            }
        }
    }
    out.sort_unstable_by_key(|&(p, _)| p);
    Ok(out)
}

fn divide_out(m: &mut u64, p: u64) -> u32 {
    let mut e = 0;
    while *m % p == 0 {
        *m /= p;
        e += 1;
    }
    e
}

fn push_prime_power(out: &mut Vec<(u64, u32)>, p: u64, e: u32) {
    if e > 0 {
        out.push((p, e));
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Square class of a nonzero rational: sign times the product of primes
/// appearing with odd total exponent in numerator and denominator.
pub fn square_class(q: &Rational) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = q.numer() * q.denom();
    let fs = factor(&n)?;
    let mut rep = BigInt::one();
    for (p, e) in fs {
        if e % 2 == 1 {
            rep *= BigInt::from(p);
        }
    }
    if n.is_negative() {
        rep = -rep;
    }
    Ok(SquareClass(rep))
}

/// Legendre symbol (a/p) for an odd prime p.
pub fn legendre(a: &BigInt, p: u64) -> Result<i32> {
    if p == 2 || !is_prime_u64(p) {
        return Err(Error::NotOddPrime(p));
    }
    let pp = BigInt::from(p);
    let r = a.mod_floor(&pp).to_u64().expect("residue fits");
    if r == 0 {
        return Ok(0);
    }
    let s = pow_mod(r, (p - 1) / 2, p);
    Ok(if s == 1 { 1 } else { -1 })
}

/// 2-adic valuation and odd part of a nonzero rational, as (valuation, odd
/// unit) where the unit is a quotient of odd integers.
fn p_parts(q: &Rational, p: u64) -> (i64, BigInt, BigInt) {
    let pp = BigInt::from(p);
    let mut num = q.numer().clone();
    let mut den = q.denom().clone();
    let mut v: i64 = 0;
    while (&num % &pp).is_zero() {
        num /= &pp;
        v += 1;
    }
    while (&den % &pp).is_zero() {
        den /= &pp;
        v -= 1;
    }
    (v, num, den)
}

/// Residue of an odd rational unit u modulo 8 (for p = 2 bookkeeping).
fn unit_mod8(num: &BigInt, den: &BigInt) -> u64 {
    let n = num.mod_floor(&BigInt::from(8)).to_u64().unwrap();
    let d = den.mod_floor(&BigInt::from(8)).to_u64().unwrap();
    // invert d mod 8: odd residues are self-inverse mod 8
    (n * d) % 8
}

fn eps_mod2(u_mod8: u64) -> u64 {
    // (u - 1)/2 mod 2: 1 for u = 3,5? careful: 3 -> 1, 5 -> 2 = 0, 7 -> 3 = 1, 1 -> 0
    match u_mod8 {
        1 | 5 => 0,
        3 | 7 => 1,
        _ => unreachable!("unit is odd"),
    }
}

fn omega_mod2(u_mod8: u64) -> u64 {
    // (u^2 - 1)/8 mod 2: 0 for u = 1,7; 1 for u = 3,5
    match u_mod8 {
        1 | 7 => 0,
        3 | 5 => 1,
        _ => unreachable!("unit is odd"),
    }
}

/// Hilbert symbol (a,b)_v computed by the closed formulas in terms of
/// valuations and Legendre symbols.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    match v {
        Place::Infinity => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Finite(2) => {
            let (alpha, un, ud) = p_parts(a, 2);
            let (beta, vn, vd) = p_parts(b, 2);
            let u8 = unit_mod8(&un, &ud);
            let v8 = unit_mod8(&vn, &vd);
            let e = eps_mod2(u8) * eps_mod2(v8)
                + (alpha.rem_euclid(2) as u64) * omega_mod2(v8)
                + (beta.rem_euclid(2) as u64) * omega_mod2(u8);
            Ok(if e % 2 == 0 { 1 } else { -1 })
        }
        Place::Finite(p) => {
            if !is_prime_u64(p) {
                return Err(Error::NotOddPrime(p));
            }
            let (alpha, un, ud) = p_parts(a, p);
            let (beta, vn, vd) = p_parts(b, p);
            let lu = legendre(&(un * mod_inverse(&ud, p)), p)?;
            let lv = legendre(&(vn * mod_inverse(&vd, p)), p)?;
            let lm1 = legendre(&BigInt::from(-1), p)?;
            let mut s = 1i32;
            if alpha.rem_euclid(2) == 1 && beta.rem_euclid(2) == 1 {
                s *= lm1;
            }
            if beta.rem_euclid(2) == 1 {
                s *= lu;
            }
            if alpha.rem_euclid(2) == 1 {
                s *= lv;
            }
            Ok(s)
        }
    }
}

fn mod_inverse(d: &BigInt, p: u64) -> BigInt {
    let pp = BigInt::from(p);
    let r = d.mod_floor(&pp).to_u64().unwrap();
    BigInt::from(pow_mod(r, p - 2, p))
}

/// The finite set of places where the symbol (a,b) can be nontrivial:
/// 2, the real place, and the odd primes dividing a or b.
pub fn symbol_support(a: &Rational, b: &Rational) -> Vec<Place> {
    let mut primes = std::collections::BTreeSet::new();
    primes.insert(2u64);
    for q in [a, b] {
        for n in [q.numer(), q.denom()] {
            if let Ok(fs) = factor(n) {
                for (p, _) in fs {
                    primes.insert(p);
                }
            }
        }
    }
    let mut out: Vec<Place> = primes.into_iter().map(Place::Finite).collect();
    out.push(Place::Infinity);
    out
}

/// Whether a nonzero rational is a square in the completion at v.
pub fn is_local_square(q: &Rational, v: Place) -> bool {
    match v {
        Place::Infinity => q.is_positive(),
        Place::Finite(2) => {
            let (val, num, den) = p_parts(q, 2);
            val % 2 == 0 && unit_mod8(&num, &den) == 1
        }
        Place::Finite(p) => {
            let (val, num, den) = p_parts(q, p);
            val % 2 == 0 && legendre(&(num * mod_inverse(&den, p)), p).unwrap() == 1
        }
    }
}
