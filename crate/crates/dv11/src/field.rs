//! Exact arithmetic in Q, Q(zeta_11), and prime fields F_p with a designated
//! 11th root of unity, together with the reduction maps between them.
//!
//! Elements of Q(zeta_11) are stored as coefficient vectors of length 10 over
//! the power basis 1, zeta, ..., zeta^9; the relation
//! 1 + zeta + ... + zeta^10 = 0 eliminates zeta^10, which makes the
//! representation canonical: two elements are equal iff their vectors are.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator not invertible modulo {0}")]
    BadDenominator(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} admits no element of multiplicative order 11 (need p = 1 mod 11)")]
    NoEleventhRoot(u64),
    #[error("mixed moduli {0} and {1}")]
    ModulusMismatch(u64, u64),
}

/// Commutative ring operations on values that carry their own context
/// (e.g. an FpNum knows its modulus), so constants are derived from an
/// existing element rather than from thin air.
pub trait Ring: Sized + Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

pub trait Field: Ring {
    fn try_inv(&self) -> Result<Self, FieldError>;
    fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&rhs.try_inv()?))
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for BigRational {
    fn try_inv(&self) -> Result<Self, FieldError> {
        if Zero::is_zero(self) {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.recip())
    }
}

/// Element of Q(zeta_11) in canonical form: c0 + c1*zeta + ... + c9*zeta^9.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    c: Box<[BigRational; 10]>,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum {
            c: Box::new(std::array::from_fn(|_| BigRational::zero())),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut z = Self::zero();
        z.c[0] = BigRational::from_integer(BigInt::from(n));
        z
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut z = Self::zero();
        z.c[0] = r;
        z
    }

    /// zeta^k for any integer k, in canonical form.
    pub fn zeta(k: i64) -> Self {
        let k = k.rem_euclid(11) as usize;
        let mut z = Self::zero();
        if k < 10 {
            z.c[k] = BigRational::one();
        } else {
            // zeta^10 = -(1 + zeta + ... + zeta^9)
            for j in 0..10 {
                z.c[j] = -BigRational::one();
            }
        }
        z
    }

    pub fn from_coeffs(c: [BigRational; 10]) -> Self {
        CycloNum { c: Box::new(c) }
    }

    /// Integer coefficient vector shortcut.
    pub fn from_int_coeffs(c: [i64; 10]) -> Self {
        CycloNum {
            c: Box::new(c.map(|n| BigRational::from_integer(BigInt::from(n)))),
        }
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[BigRational; 10] {
        &self.c
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloNum {
            c: Box::new(std::array::from_fn(|i| &self.c[i] * r)),
        }
    }

    /// Image under the Galois automorphism zeta -> zeta^j, gcd(j, 11) = 1.
    pub fn galois(&self, j: u64) -> Self {
        assert!(j % 11 != 0, "zeta -> zeta^{j} is not an automorphism");
        let mut acc = [(); 11].map(|_| BigRational::zero());
        for k in 0..10 {
            if !Zero::is_zero(&self.c[k]) {
                let target = (k as u64 * j % 11) as usize;
                acc[target] = &acc[target] + &self.c[k];
            }
        }
        let mut out = Self::zero();
        for k in 0..10 {
            out.c[k] = &acc[k] - &acc[10];
        }
        out
    }

    /// Complex conjugation zeta -> zeta^10.
    pub fn conjugate(&self) -> Self {
        self.galois(10)
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| Zero::is_zero(x))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Evaluate at zeta -> g under a reduction map; a ring homomorphism into
    /// F_p whenever no coefficient denominator is divisible by p.
    pub fn reduce(&self, m: &ReductionMap) -> Result<FpNum, FieldError> {
        let p = m.prime();
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        let mut gk = 1u64; // g^k
        for k in 0..10 {
            let num = self.c[k].numer().mod_floor(&pb).to_u64().unwrap();
            let den = self.c[k].denom().mod_floor(&pb).to_u64().unwrap();
            if den == 0 {
                return Err(FieldError::BadDenominator(p));
            }
            let den_inv = pow_mod(den, p - 2, p);
            let coeff = mul_mod(num, den_inv, p);
            acc = (acc + mul_mod(coeff, gk, p)) % p;
            gk = mul_mod(gk, m.root(), p);
        }
        Ok(FpNum::new(acc, p))
    }
}

impl Ring for CycloNum {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_int(n)
    }

    fn add(&self, rhs: &Self) -> Self {
        CycloNum {
            c: Box::new(std::array::from_fn(|i| &self.c[i] + &rhs.c[i])),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        CycloNum {
            c: Box::new(std::array::from_fn(|i| &self.c[i] - &rhs.c[i])),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut acc = [(); 19].map(|_| BigRational::zero());
        for i in 0..10 {
            if Zero::is_zero(&self.c[i]) {
                continue;
            }
            for j in 0..10 {
                if Zero::is_zero(&rhs.c[j]) {
                    continue;
                }
                acc[i + j] = &acc[i + j] + &self.c[i] * &rhs.c[j];
            }
        }
        // zeta^k = zeta^(k-11) for k >= 11, then zeta^10 = -(1 + ... + zeta^9)
        for k in 11..19 {
            let v = std::mem::replace(&mut acc[k], BigRational::zero());
            acc[k - 11] = &acc[k - 11] + v;
        }
        let top = std::mem::replace(&mut acc[10], BigRational::zero());
        let mut out = Self::zero();
        for k in 0..10 {
            out.c[k] = std::mem::replace(&mut acc[k], BigRational::zero()) - &top;
        }
        out
    }

    fn neg(&self) -> Self {
        CycloNum {
            c: Box::new(std::array::from_fn(|i| -&self.c[i])),
        }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| Zero::is_zero(x))
    }
}

impl Field for CycloNum {
    /// Exact inverse via the product of Galois conjugates: with
    /// b = prod_(j=2..10) sigma_j(a) the product a b is the field norm, a
    /// rational number, so 1/a = b / N(a).  Unlike a rational extended
    /// Euclidean algorithm this keeps intermediate coefficients polynomially
    /// sized.
    fn try_inv(&self) -> Result<Self, FieldError> {
        if Ring::is_zero(self) {
            return Err(FieldError::DivisionByZero);
        }
        let mut b = self.galois(2);
        for j in 3..=10 {
            b = b.mul(&self.galois(j));
        }
        let n = self.mul(&b);
        let norm = n
            .as_rational()
            .expect("product over the full Galois orbit is rational")
            .clone();
        if Zero::is_zero(&norm) {
            return Err(FieldError::DivisionByZero);
        }
        Ok(b.scale(&norm.recip()))
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Ring::is_zero(self) {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in self.c.iter().enumerate() {
            if Zero::is_zero(v) {
                continue;
            }
            if !first {
                write!(f, " {} ", if v.is_negative() { "-" } else { "+" })?;
            } else if v.is_negative() {
                write!(f, "-")?;
            }
            let a = v.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else if One::is_one(&a) {
                write!(f, "z^{k}")?;
            } else {
                write!(f, "{a}*z^{k}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Serialized as an array of 10 strings "num/den", zeta^0 coefficient first.
impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self
            .c
            .iter()
            .map(|r| format!("{}/{}", r.numer(), r.denom()))
            .collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs: Vec<String> = Vec::deserialize(d)?;
        if strs.len() != 10 {
            return Err(D::Error::custom("expected 10 coefficients"));
        }
        let mut out = CycloNum::zero();
        for (k, s) in strs.iter().enumerate() {
            out.c[k] = parse_rational(s).ok_or_else(|| D::Error::custom("bad rational"))?;
        }
        Ok(out)
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = n.trim().parse().ok()?;
    let den: BigInt = d.trim().parse().ok()?;
    if Zero::is_zero(&den) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Residue in a prime field F_p; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpNum {
    v: u64,
    p: u64,
}

impl FpNum {
    pub fn new(v: u64, p: u64) -> Self {
        FpNum { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Self {
        FpNum {
            v: v.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.v;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            e >>= 1;
        }
        FpNum { v: acc, p: self.p }
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.p, rhs.p,
            "mixed moduli {} and {} in F_p arithmetic",
            self.p, rhs.p
        );
    }
}

impl fmt::Debug for FpNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for FpNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Ring for FpNum {
    fn zero_like(&self) -> Self {
        FpNum { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        FpNum { v: 1 % self.p, p: self.p }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        FpNum::from_i64(n, self.p)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FpNum {
            v: (self.v + rhs.v) % self.p,
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FpNum {
            v: (self.v + self.p - rhs.v) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        FpNum {
            v: mul_mod(self.v, rhs.v, self.p),
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        FpNum {
            v: (self.p - self.v) % self.p,
            p: self.p,
        }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl Field for FpNum {
    fn try_inv(&self) -> Result<Self, FieldError> {
        if self.v == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(self.p - 2))
    }
}

/// Reduction Q(zeta_11) -> F_p given by zeta -> g, where g is the smallest
/// element of [2, p) of multiplicative order exactly 11.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMap {
    p: u64,
    g: u64,
}

impl ReductionMap {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p % 11 != 1 {
            return Err(FieldError::NoEleventhRoot(p));
        }
        for g in 2..p {
            if pow_mod(g, 11, p) == 1 {
                // order divides 11 and g != 1, so order is exactly 11
                return Ok(ReductionMap { p, g });
            }
        }
        Err(FieldError::NoEleventhRoot(p))
    }

    pub fn with_root(p: u64, g: u64) -> Result<Self, FieldError> {
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if g % p <= 1 || pow_mod(g % p, 11, p) != 1 {
            return Err(FieldError::NoEleventhRoot(p));
        }
        Ok(ReductionMap { p, g: g % p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn root(&self) -> u64 {
        self.g
    }

    /// The reduction map sending zeta -> g^j instead (j a unit mod 11); used
    /// to read off all Galois-conjugate evaluations modulo one prime.
    pub fn twist(&self, j: u64) -> Self {
        assert!(j % 11 != 0);
        ReductionMap {
            p: self.p,
            g: pow_mod(self.g, j % 11, self.p),
        }
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
