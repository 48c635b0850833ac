//! The order-660 simple group PSL(2, F_11), its five- and ten-dimensional
//! representations over Q(zeta_11), and its character theory.
//!
//! The group is generated by two elements `a` (order 2) and `b` (order 3)
//! subject to (ab)^11 = [a, babab]^2 = 1.  A Borel subgroup of order 55 is
//! generated by p = ab and r = bbabababbabababb; on the five-dimensional
//! representation p acts diagonally by eleventh roots of unity and r by a
//! cyclic basis permutation.  The involution `a` is pinned down by solving a
//! polynomial system over Q(zeta_11) rather than copied from a table.
//!
//! Three parallel models of each group element are kept in sync: a word in
//! the generators, a 2x2 matrix over F_11 modulo +-1 (fast, canonical, used
//! for enumeration and conjugacy), and the 5x5 matrix over Q(zeta_11).  The
//! 10x10 exterior-square matrix is derived on demand.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{CycloNum, Field, Ring};
use crate::linalg::Mat;
use crate::polysys::{solve_unique_by_crt, MPoly, PolysysError, SPECIALIZATION_PRIMES};
use crate::trivector::{act_precomposed, Trivector};

/// Errors from group construction and character arithmetic.
#[derive(Debug, Error)]
pub enum GroupError {
    /// The involution system had no solution in Q(zeta_11).
    #[error("no candidate involution satisfies the defining system")]
    NoSolution,
    /// A modular specialization of the involution system was degenerate.
    #[error("specialization mod {p} at root exponent {j} has {count} solutions, expected 1")]
    AmbiguousSpecialization { p: u64, j: u64, count: usize },
    /// Closure under the generators produced more elements than the group order.
    #[error("generator closure exceeded {0} elements")]
    ClosureExceeded(usize),
    /// Conjugacy class structure did not match the expected shape.
    #[error("unexpected class structure: {0}")]
    ClassStructure(String),
    /// A character decomposition produced a non-integral multiplicity.
    #[error("non-integral multiplicity for constituent {0}")]
    NonIntegralMultiplicity(String),
    /// An underlying polynomial-system computation failed.
    #[error(transparent)]
    Polysys(#[from] PolysysError),
    /// An underlying field computation failed.
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// Diagonal exponents of p on the five-dimensional representation:
/// rho(p) = diag(zeta^1, zeta^9, zeta^4, zeta^3, zeta^5).
pub const P_EXPONENTS: [i64; 5] = [1, 9, 4, 3, 5];

/// Oriented coordinate pairs identifying the ten exterior-square basis
/// vectors x_0..x_9 with y_i wedge y_j.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 0),
    (0, 2),
    (1, 3),
    (2, 4),
    (3, 0),
    (4, 1),
];

const MODULUS: u64 = 11;
const GROUP_ORDER: usize = 660;

/// A 2x2 matrix over F_11 of determinant one, stored modulo the sign so that
/// equal projective elements compare equal.  The canonical representative has
/// its first nonzero entry in 1..=5.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sl2 {
    m: [[u64; 2]; 2],
}

impl Sl2 {
    /// Builds from entries given as signed integers; panics unless det = 1 mod 11.
    pub fn new(e: [[i64; 2]; 2]) -> Self {
        let r = |x: i64| x.rem_euclid(MODULUS as i64) as u64;
        let m = [[r(e[0][0]), r(e[0][1])], [r(e[1][0]), r(e[1][1])]];
        let det = (m[0][0] * m[1][1] + MODULUS * MODULUS - m[0][1] % MODULUS * (m[1][0] % MODULUS))
            % MODULUS;
        assert_eq!(det % MODULUS, 1, "determinant must be 1 mod 11");
        Self { m }.canonical()
    }

    fn canonical(self) -> Self {
        let flat = [self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]];
        for &x in &flat {
            if x != 0 {
                if x > MODULUS / 2 {
                    let n = |v: u64| (MODULUS - v) % MODULUS;
                    return Self {
                        m: [
                            [n(self.m[0][0]), n(self.m[0][1])],
                            [n(self.m[1][0]), n(self.m[1][1])],
                        ],
                    };
                }
                return self;
            }
        }
        unreachable!("zero matrix has determinant 0")
    }

    pub fn identity() -> Self {
        Self::new([[1, 0], [0, 1]])
    }

    pub fn entries(&self) -> [[u64; 2]; 2] {
        self.m
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.m;
        let b = &other.m;
        let mut m = [[0u64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % MODULUS;
            }
        }
        (Self { m }).canonical()
    }

    pub fn inv(&self) -> Self {
        let m = &self.m;
        Self::new([
            [m[1][1] as i64, -(m[0][1] as i64)],
            [-(m[1][0] as i64), m[0][0] as i64],
        ])
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Order as an element of PSL(2, F_11).
    pub fn order(&self) -> u64 {
        let id = Self::identity();
        let mut acc = *self;
        for k in 1..=12 {
            if acc == id {
                return k;
            }
            acc = acc.mul(self);
        }
        unreachable!("element order in PSL(2,11) divides 660 and is at most 11")
    }
}

impl fmt::Debug for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} {}; {} {}]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// A group element carried in all models at once.  The exterior-square
/// matrix is recomputed from `mat5` when needed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupElem {
    /// Word in the generators 'a' and 'b'; empty for the identity.
    pub word: String,
    /// Projective 2x2 model over F_11.
    pub mat2: Sl2,
    /// Five-dimensional representation over Q(zeta_11).
    pub mat5: Mat<CycloNum>,
}

impl GroupElem {
    pub fn identity() -> Self {
        let ctx = CycloNum::one();
        Self {
            word: String::new(),
            mat2: Sl2::identity(),
            mat5: Mat::identity_like(&ctx, 5),
        }
    }

    /// Exterior square acting on x_0..x_9.
    pub fn mat10(&self) -> Mat<CycloNum> {
        lambda2(&self.mat5)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            word: format!("{}{}", self.word, other.word),
            mat2: self.mat2.mul(&other.mat2),
            mat5: self.mat5.mul(&other.mat5),
        }
    }
}

/// Exterior square of a 5x5 matrix in the oriented pair basis.
pub fn lambda2(m5: &Mat<CycloNum>) -> Mat<CycloNum> {
    assert_eq!((m5.rows, m5.cols), (5, 5));
    let ctx = m5.ctx();
    let mut out = Mat::zero_like(ctx, 10, 10);
    for (row, &(x, y)) in PAIRS.iter().enumerate() {
        for (col, &(c, d)) in PAIRS.iter().enumerate() {
            let v = m5
                .at(x, c)
                .mul(m5.at(y, d))
                .sub(&m5.at(y, c).mul(m5.at(x, d)));
            *out.at_mut(row, col) = v;
        }
    }
    out
}

fn rho_p() -> Mat<CycloNum> {
    let ctx = CycloNum::one();
    let mut m = Mat::zero_like(&ctx, 5, 5);
    for (i, &e) in P_EXPONENTS.iter().enumerate() {
        *m.at_mut(i, i) = CycloNum::zeta(e);
    }
    m
}

fn rho_r() -> Mat<CycloNum> {
    let ctx = CycloNum::one();
    let mut m = Mat::zero_like(&ctx, 5, 5);
    for j in 0..5 {
        *m.at_mut((j + 1) % 5, j) = CycloNum::one();
    }
    m
}

/// Word in a, b evaluating to p = ab.
pub const P_WORD: &str = "ab";
/// Word in a, b evaluating to the order-5 normalizer element r.
pub const R_WORD: &str = "bbabababbabababb";

/// The Borel generators (p, r): p of order 11 acting diagonally, r of order 5
/// permuting the eigenlines, with r p r^-1 = p^3.
pub fn build_borel() -> (GroupElem, GroupElem) {
    let p = GroupElem {
        word: P_WORD.to_string(),
        mat2: Sl2::new([[1, 1], [0, 1]]),
        mat5: rho_p(),
    };
    let r = GroupElem {
        word: R_WORD.to_string(),
        mat2: Sl2::new([[4, 0], [0, 3]]),
        mat5: rho_r(),
    };
    (p, r)
}

/// Result of solving for the involution: the surviving candidate matrices
/// (expected: exactly one), plus the generators a and b = a^-1 p built from
/// the first candidate under a deterministic ordering.
#[derive(Clone, Debug)]
pub struct ASolution {
    /// All in-field solutions of the defining system that pass the filters.
    pub candidates: Vec<Mat<CycloNum>>,
    /// Generator of order 2.
    pub a: GroupElem,
    /// Generator of order 3.
    pub b: GroupElem,
}

/// The defining system for the involution coefficients c_0..c_4.
///
/// The ansatz A[j][k] = c_((j+k) mod 5) already enforces A rho(r) = rho(r)^-1 A.
/// A^2 = 1 collapses by the Hankel structure to three equations
/// sum_m c_m c_(m+s) = [s = 0] for s = 0, 1, 2.  Given A^2 = 1 the cubic
/// relation (A rho(p))^3 = 1 is equivalent to p A p A p = A, which is
/// quadratic: zeta^(e_j + e_k) sum_m c_(j+m) c_(m+k) zeta^(e_m) = c_(j+k)
/// with e_i the diagonal exponents of p.
pub fn involution_system() -> Vec<MPoly<CycloNum>> {
    let ctx = CycloNum::one();
    let nvars = 5;
    let var = |i: usize| MPoly::var(nvars, i, &ctx);

    let mut gens: Vec<MPoly<CycloNum>> = Vec::new();
    let one_poly = MPoly::constant(nvars, ctx.one_like());
    for s in 0..3usize {
        let mut e = MPoly::zero(nvars);
        for m in 0..5 {
            e = e.add(&var(m).mul(&var((m + s) % 5)));
        }
        if s == 0 {
            e = e.sub(&one_poly);
        }
        gens.push(e);
    }
    for j in 0..5 {
        for k in 0..5 {
            let mut e = MPoly::zero(nvars);
            for m in 0..5 {
                let z = CycloNum::zeta(P_EXPONENTS[j] + P_EXPONENTS[k] + P_EXPONENTS[m]);
                e = e.add(&var((j + m) % 5).mul(&var((m + k) % 5)).scale(&z));
            }
            e = e.sub(&var((j + k) % 5));
            if !e.is_zero() && !gens.contains(&e) {
                gens.push(e);
            }
        }
    }
    gens
}

/// Solves for the 5x5 involution completing the Borel pair to the full group.
///
/// Candidates come from modular specializations of the quadratic system (see
/// [`involution_system`] and [`solve_unique_by_crt`]): the system is solved
/// over F_p at all ten choices of eleventh root for several primes
/// p = 1 mod 11 and the coefficients are reconstructed by CRT.  The
/// reconstruction is verified exactly over Q(zeta_11): it satisfies every
/// generator of the system, the relations A^2 = (A rho(p))^3 = 1 and
/// A rho(r) = rho(r)^-1 A, the presentation of the full group, and
/// invariance of the Klein cubic.  Each specialization having exactly one
/// solution is what makes a second in-field solution impossible to miss: it
/// would survive reduction at some tested prime.
pub fn solve_generator_a() -> Result<ASolution, GroupError> {
    let ctx = CycloNum::one();
    let gens = involution_system();

    let rp = rho_p();
    let rr = rho_r();
    let rr_inv = rr.inverse().expect("rho(r) is invertible");
    let id5 = Mat::identity_like(&ctx, 5);

    let sol = solve_unique_by_crt(&gens, &SPECIALIZATION_PRIMES, 11)?;
    if let Some(&(p, j, count)) = sol.ambiguous.first() {
        return Err(GroupError::AmbiguousSpecialization { p, j, count });
    }
    let point = sol.point;

    let mut candidates: Vec<Mat<CycloNum>> = Vec::new();
    let mut m = Mat::zero_like(&ctx, 5, 5);
    for j in 0..5 {
        for k in 0..5 {
            *m.at_mut(j, k) = point[(j + k) % 5].clone();
        }
    }
    let square_ok = m.mul(&m) == id5;
    let ap = m.mul(&rp);
    let cube_ok = ap.mul(&ap).mul(&ap) == id5;
    let twist_ok = m.mul(&rr) == rr_inv.mul(&m);
    // b = a^-1 p = a p since a is an involution.
    let b5 = m.mul(&rp);
    if square_ok && cube_ok && twist_ok && relations_hold(&m, &b5) && fixes_klein_cubic(&m) {
        candidates.push(m);
    }
    if candidates.is_empty() {
        return Err(GroupError::NoSolution);
    }

    let a5 = candidates[0].clone();
    let b5 = a5.mul(&rho_p());
    let a = GroupElem {
        word: "a".to_string(),
        mat2: Sl2::new([[0, -1], [1, 0]]),
        mat5: a5,
    };
    let b = GroupElem {
        word: "b".to_string(),
        mat2: Sl2::new([[0, 1], [-1, -1]]),
        mat5: b5,
    };
    Ok(ASolution { candidates, a, b })
}

/// Checks the presentation a^2 = b^3 = (ab)^11 = [a, babab]^2 = 1 on 5x5
/// matrices.
pub fn relations_hold(a5: &Mat<CycloNum>, b5: &Mat<CycloNum>) -> bool {
    let ctx = CycloNum::one();
    let id = Mat::identity_like(&ctx, 5);
    if a5.mul(a5) != id {
        return false;
    }
    if b5.mul(b5).mul(b5) != id {
        return false;
    }
    let ab = a5.mul(b5);
    let mut acc = id.clone();
    for _ in 0..11 {
        acc = acc.mul(&ab);
    }
    if acc != id {
        return false;
    }
    let w = b5.mul(a5).mul(b5).mul(a5).mul(b5);
    let comm = a5.mul(&w).mul(a5).mul(&w.inverse().expect("group element"));
    comm.mul(&comm) == id
}

/// The Klein cubic y0^2 y1 + y1^2 y2 + y2^2 y3 + y3^2 y4 + y4^2 y0.
pub fn klein_cubic() -> MPoly<CycloNum> {
    let ctx = CycloNum::one();
    let y = |i: usize| MPoly::var(5, i, &ctx);
    let mut f = MPoly::zero(5);
    for i in 0..5 {
        let t = y(i).mul(&y(i)).mul(&y((i + 1) % 5));
        f = f.add(&t);
    }
    f
}

/// Substitutes y_i -> sum_j m[i][j] y_j into f.
pub fn apply_linear(f: &MPoly<CycloNum>, m: &Mat<CycloNum>) -> MPoly<CycloNum> {
    let n = m.rows;
    assert_eq!(f.nvars(), n);
    assert_eq!(m.cols, n);
    let ctx = m.ctx();
    let forms: Vec<MPoly<CycloNum>> = (0..n)
        .map(|i| {
            let mut l = MPoly::zero(n);
            for j in 0..n {
                if !m.at(i, j).is_zero() {
                    l = l.add(&MPoly::var(n, j, ctx).scale(m.at(i, j)));
                }
            }
            l
        })
        .collect();
    let mut out = MPoly::zero(n);
    for (mono, coeff) in f.terms() {
        let mut term = MPoly::constant(n, coeff.clone());
        for (i, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&forms[i]);
            }
        }
        out = out.add(&term);
    }
    out
}

/// Whether the substitution y -> m y leaves the Klein cubic exactly invariant.
pub fn fixes_klein_cubic(m: &Mat<CycloNum>) -> bool {
    let f = klein_cubic();
    apply_linear(&f, m) == f
}

/// Enumerates all 660 group elements by closing {a, b} under right
/// multiplication, deduplicating in the projective 2x2 model.  Words are
/// breadth-first, so each element carries a shortest-known word.
pub fn enumerate_group(a: &GroupElem, b: &GroupElem) -> Result<Vec<GroupElem>, GroupError> {
    let mut elems = vec![GroupElem::identity()];
    let mut seen: HashMap<Sl2, usize> = HashMap::new();
    seen.insert(elems[0].mat2, 0);
    let mut next = 0;
    while next < elems.len() {
        let cur = elems[next].clone();
        next += 1;
        for g in [a, b] {
            let m2 = cur.mat2.mul(&g.mat2);
            if seen.contains_key(&m2) {
                continue;
            }
            if elems.len() == GROUP_ORDER {
                return Err(GroupError::ClosureExceeded(GROUP_ORDER));
            }
            let e = GroupElem {
                word: format!("{}{}", cur.word, g.word),
                mat2: m2,
                mat5: cur.mat5.mul(&g.mat5),
            };
            seen.insert(m2, elems.len());
            elems.push(e);
        }
    }
    if elems.len() != GROUP_ORDER {
        return Err(GroupError::ClassStructure(format!(
            "closure has {} elements, expected {}",
            elems.len(),
            GROUP_ORDER
        )));
    }
    Ok(elems)
}

/// Conjugacy data in the fixed column order
/// [1, 11a, 11b, 2, 3, 6, 5a, 5b], where 11a contains p, 11b contains p^2,
/// 5a contains r and 5b contains r^2.
#[derive(Clone, Debug)]
pub struct ClassData {
    /// One representative per class, in table order.
    pub reps: [Sl2; 8],
    /// Class sizes, in table order.
    pub sizes: [u64; 8],
    /// Canonical 2x2 element to class index.
    pub class_of: HashMap<Sl2, usize>,
}

impl ClassData {
    /// Class index of the square of each class representative.
    pub fn square_map(&self) -> [usize; 8] {
        let mut out = [0; 8];
        for (i, r) in self.reps.iter().enumerate() {
            out[i] = self.class_of[&r.mul(r)];
        }
        out
    }

    /// Class index of the cube of each class representative.
    pub fn cube_map(&self) -> [usize; 8] {
        let mut out = [0; 8];
        for (i, r) in self.reps.iter().enumerate() {
            out[i] = self.class_of[&r.mul(r).mul(r)];
        }
        out
    }
}

/// Partitions the enumerated group into its eight conjugacy classes and
/// checks the sizes (1, 60, 60, 55, 110, 110, 132, 132).
pub fn classify(elems: &[GroupElem]) -> Result<ClassData, GroupError> {
    let all: Vec<Sl2> = elems.iter().map(|e| e.mat2).collect();
    let mut class_of: HashMap<Sl2, usize> = HashMap::new();
    let mut classes: Vec<Vec<Sl2>> = Vec::new();
    for &x in &all {
        if class_of.contains_key(&x) {
            continue;
        }
        let idx = classes.len();
        let mut members = Vec::new();
        for &g in &all {
            let y = g.mul(&x).mul(&g.inv());
            if !class_of.contains_key(&y) {
                class_of.insert(y, idx);
                members.push(y);
            }
        }
        classes.push(members);
    }
    if classes.len() != 8 {
        return Err(GroupError::ClassStructure(format!(
            "{} conjugacy classes, expected 8",
            classes.len()
        )));
    }

    let p2 = Sl2::new([[1, 1], [0, 1]]);
    let r2 = Sl2::new([[4, 0], [0, 3]]);
    let find_by = |pred: &dyn Fn(&Sl2) -> bool| -> Option<usize> {
        let mut hit = None;
        for (i, c) in classes.iter().enumerate() {
            if pred(&c[0]) {
                if hit.is_some() {
                    return None;
                }
                hit = Some(i);
            }
        }
        hit
    };
    let order_is = |k: u64| move |s: &Sl2| s.order() == k;
    let ordered: [Option<usize>; 8] = [
        find_by(&order_is(1)),
        Some(class_of[&p2]),
        Some(class_of[&p2.mul(&p2)]),
        find_by(&order_is(2)),
        find_by(&order_is(3)),
        find_by(&order_is(6)),
        Some(class_of[&r2]),
        Some(class_of[&r2.mul(&r2)]),
    ];
    let mut reps = [Sl2::identity(); 8];
    let mut sizes = [0u64; 8];
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    for (slot, maybe) in ordered.iter().enumerate() {
        let idx = maybe.ok_or_else(|| {
            GroupError::ClassStructure("missing or ambiguous class by order".to_string())
        })?;
        if relabel.insert(idx, slot).is_some() {
            return Err(GroupError::ClassStructure(
                "two table columns map to one class".to_string(),
            ));
        }
        reps[slot] = classes[idx][0];
        sizes[slot] = classes[idx].len() as u64;
    }
    let expected = [1u64, 60, 60, 55, 110, 110, 132, 132];
    if sizes != expected {
        return Err(GroupError::ClassStructure(format!(
            "class sizes {:?}, expected {:?}",
            sizes, expected
        )));
    }
    let class_of = class_of
        .into_iter()
        .map(|(k, v)| (k, relabel[&v]))
        .collect();
    Ok(ClassData {
        reps,
        sizes,
        class_of,
    })
}

/// A character value a + b sqrt(5) with a, b in Q(zeta_11).  The golden-ratio
/// entries of the degree-12 characters live outside Q(zeta_11), so values are
/// kept in the quadratic extension by sqrt(5).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharValue {
    pub a: CycloNum,
    pub b: CycloNum,
}

impl CharValue {
    pub fn zero() -> Self {
        Self {
            a: CycloNum::zero(),
            b: CycloNum::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            a: CycloNum::from_int(n),
            b: CycloNum::zero(),
        }
    }

    pub fn from_cyclo(a: CycloNum) -> Self {
        Self {
            a,
            b: CycloNum::zero(),
        }
    }

    /// (n + m sqrt(5)) / 2.
    pub fn half(n: i64, m: i64) -> Self {
        let two = BigRational::from_integer(2.into());
        Self {
            a: CycloNum::from_int(n).scale(&two.recip()),
            b: CycloNum::from_int(m).scale(&two.recip()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            a: self.a.sub(&other.a),
            b: self.b.sub(&other.b),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let five = CycloNum::from_int(5);
        Self {
            a: self.a.mul(&other.a).add(&five.mul(&self.b).mul(&other.b)),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.a)),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            a: self.a.scale(r),
            b: self.b.scale(r),
        }
    }

    /// Complex conjugation; sqrt(5) is real, so it acts on coefficients only.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.conjugate(),
            b: self.b.conjugate(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The value as a plain rational, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.b.is_zero() {
            self.a.as_rational().cloned()
        } else {
            None
        }
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({}) + ({})*sqrt5", self.a, self.b)
        }
    }
}

/// A class function given by its values on the eight classes in table order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Character {
    pub values: Vec<CharValue>,
}

impl Character {
    pub fn from_ints(v: [i64; 8]) -> Self {
        Self {
            values: v.iter().map(|&n| CharValue::from_int(n)).collect(),
        }
    }
}

/// The character table: eight irreducible characters against the eight
/// classes, together with class sizes.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub sizes: [u64; 8],
    pub rows: Vec<(String, Character)>,
}

/// Sum of zeta^r over the quadratic residues mod 11; equals (sqrt(-11)-1)/2.
pub fn residue_sum() -> CycloNum {
    let mut s = CycloNum::zero();
    for r in [1i64, 3, 4, 5, 9] {
        s = s.add(&CycloNum::zeta(r));
    }
    s
}

impl CharacterTable {
    /// The full table over Q(zeta_11)(sqrt 5).  Column order
    /// [1, 11a, 11b, 2, 3, 6, 5a, 5b]; the unipotent class of p is 11a and
    /// the diagonal class of r is 5a.
    pub fn standard() -> Self {
        let s = residue_sum();
        let sbar = s.conjugate();
        let cv = CharValue::from_cyclo;
        let ci = CharValue::from_int;
        let golden_plus = CharValue::half(-1, 1);
        let golden_minus = CharValue::half(-1, -1);
        let rows = vec![
            ("C".to_string(), Character::from_ints([1, 1, 1, 1, 1, 1, 1, 1])),
            (
                "V5".to_string(),
                Character {
                    values: vec![
                        ci(5),
                        cv(s.clone()),
                        cv(sbar.clone()),
                        ci(1),
                        ci(-1),
                        ci(1),
                        ci(0),
                        ci(0),
                    ],
                },
            ),
            (
                "V5*".to_string(),
                Character {
                    values: vec![ci(5), cv(sbar), cv(s), ci(1), ci(-1), ci(1), ci(0), ci(0)],
                },
            ),
            (
                "V10".to_string(),
                Character::from_ints([10, -1, -1, -2, 1, 1, 0, 0]),
            ),
            (
                "V10'".to_string(),
                Character::from_ints([10, -1, -1, 2, 1, -1, 0, 0]),
            ),
            (
                "V11".to_string(),
                Character::from_ints([11, 0, 0, -1, -1, -1, 1, 1]),
            ),
            (
                "V12".to_string(),
                Character {
                    values: vec![
                        ci(12),
                        ci(1),
                        ci(1),
                        ci(0),
                        ci(0),
                        ci(0),
                        golden_plus.clone(),
                        golden_minus.clone(),
                    ],
                },
            ),
            (
                "V12'".to_string(),
                Character {
                    values: vec![
                        ci(12),
                        ci(1),
                        ci(1),
                        ci(0),
                        ci(0),
                        ci(0),
                        golden_minus,
                        golden_plus,
                    ],
                },
            ),
        ];
        Self {
            sizes: [1, 60, 60, 55, 110, 110, 132, 132],
            rows,
        }
    }

    /// Hermitian inner product (1/660) sum over classes of
    /// size * chi * conj(psi).
    pub fn inner_product(&self, chi: &Character, psi: &Character) -> CharValue {
        let mut acc = CharValue::zero();
        for c in 0..8 {
            let w = BigRational::from_integer((self.sizes[c] as i64).into());
            let term = chi.values[c].mul(&psi.values[c].conjugate()).scale(&w);
            acc = acc.add(&term);
        }
        acc.scale(&BigRational::new(1.into(), (GROUP_ORDER as i64).into()))
    }

    /// First orthogonality: distinct rows pair to 0, each row to 1.
    pub fn verify_orthogonality(&self) -> bool {
        let one = CharValue::from_int(1);
        for (i, (_, chi)) in self.rows.iter().enumerate() {
            for (j, (_, psi)) in self.rows.iter().enumerate() {
                let ip = self.inner_product(chi, psi);
                let expect = if i == j { one.clone() } else { CharValue::zero() };
                if ip != expect {
                    return false;
                }
            }
        }
        true
    }

    /// Expresses a class function as a non-negative integer combination of
    /// the rows.  Fails if any multiplicity is not a non-negative integer or
    /// the combination does not reconstruct the input.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<(String, u64)>, GroupError> {
        let mut out = Vec::new();
        let mut recon = Character {
            values: vec![CharValue::zero(); 8],
        };
        for (name, row) in &self.rows {
            let ip = self.inner_product(chi, row);
            let r = ip
                .as_rational()
                .filter(|r| r.is_integer() && *r.numer() >= 0.into())
                .ok_or_else(|| GroupError::NonIntegralMultiplicity(name.clone()))?;
            let m: u64 = r.to_integer().try_into().map_err(|_| {
                GroupError::NonIntegralMultiplicity(name.clone())
            })?;
            if m > 0 {
                out.push((name.clone(), m));
                let w = BigRational::from_integer((m as i64).into());
                for c in 0..8 {
                    recon.values[c] = recon.values[c].add(&row.values[c].scale(&w));
                }
            }
        }
        if recon != *chi {
            return Err(GroupError::NonIntegralMultiplicity(
                "reconstruction mismatch".to_string(),
            ));
        }
        Ok(out)
    }
}

/// Character of the third exterior power:
/// (chi(g)^3 - 3 chi(g) chi(g^2) + 2 chi(g^3)) / 6.
pub fn lambda3_character(chi: &Character, classes: &ClassData) -> Character {
    let sq = classes.square_map();
    let cu = classes.cube_map();
    let six = BigRational::from_integer(6.into());
    let values = (0..8)
        .map(|c| {
            let x = &chi.values[c];
            let x2 = &chi.values[sq[c]];
            let x3 = &chi.values[cu[c]];
            let cube = x.mul(x).mul(x);
            let mid = x.mul(x2).scale(&BigRational::from_integer(3.into()));
            let tail = x3.scale(&BigRational::from_integer(2.into()));
            cube.sub(&mid).add(&tail).scale(&six.recip())
        })
        .collect();
    Character { values }
}

/// Character of a matrix representation, evaluated by tracing one enumerated
/// element per class.
pub fn trace_character<FM>(elems: &[GroupElem], classes: &ClassData, mat_of: FM) -> Character
where
    FM: Fn(&GroupElem) -> Mat<CycloNum>,
{
    let mut values = vec![CharValue::zero(); 8];
    let mut done = [false; 8];
    for e in elems {
        let c = classes.class_of[&e.mat2];
        if done[c] {
            continue;
        }
        done[c] = true;
        let m = mat_of(e);
        let mut tr = CycloNum::zero();
        for i in 0..m.rows {
            tr = tr.add(m.at(i, i));
        }
        values[c] = CharValue::from_cyclo(tr);
        if done.iter().all(|&d| d) {
            break;
        }
    }
    Character { values }
}

fn all_triples() -> Vec<[usize; 3]> {
    let mut v = Vec::with_capacity(120);
    for i in 0..10 {
        for j in i + 1..10 {
            for k in j + 1..10 {
                v.push([i, j, k]);
            }
        }
    }
    v
}

/// Basis of the subspace of trivectors fixed by every listed element.
/// Refines the full 120-dimensional space one generator at a time, so cheap
/// (diagonal or permutation) generators should come first.
pub fn invariant_trivectors(gens: &[GroupElem]) -> Vec<Trivector<CycloNum>> {
    let ctx = CycloNum::one();
    let triples = all_triples();
    let index_of: HashMap<[usize; 3], usize> =
        triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut basis: Vec<Trivector<CycloNum>> = triples
        .iter()
        .map(|&t| Trivector::unit(t, &ctx))
        .collect();
    for g in gens {
        if basis.is_empty() {
            break;
        }
        let h = g
            .mat10()
            .inverse()
            .expect("group elements act invertibly");
        let mut m = Mat::zero_like(&ctx, 120, basis.len());
        for (col, t) in basis.iter().enumerate() {
            let diff = act_precomposed(&h, t).sub(t);
            for (triple, coeff) in diff.entries() {
                *m.at_mut(index_of[triple], col) = coeff.clone();
            }
        }
        let ker = m.kernel();
        basis = ker
            .iter()
            .map(|v| {
                let mut acc: Trivector<CycloNum> = Trivector::zero();
                for (c, t) in v.iter().zip(basis.iter()) {
                    if !c.is_zero() {
                        acc = acc.add(&t.scale_by(c));
                    }
                }
                acc
            })
            .collect();
    }
    for t in &mut basis {
        let lead = t
            .entries()
            .next()
            .map(|(_, c)| c.clone())
            .expect("kernel vectors are nonzero");
        let inv = lead.try_inv().expect("leading coefficient is nonzero");
        *t = t.scale_by(&inv);
    }
    basis
}

/// Checks that every element of the list fixes the trivector exactly.
pub fn all_fix_trivector(elems: &[GroupElem], t: &Trivector<CycloNum>) -> bool {
    elems.iter().all(|g| {
        let h = g.mat10().inverse().expect("group element");
        act_precomposed(&h, t) == *t
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trivector::{build_sigma, sigma, SIGMA_COMPONENTS};

    fn ctx() -> CycloNum {
        CycloNum::one()
    }

    #[test]
    fn sl2_canonicalization_and_orders() {
        let a = Sl2::new([[0, -1], [1, 0]]);
        assert_eq!(a.entries(), [[0, 1], [10, 0]]);
        assert_eq!(a.order(), 2);
        let b = Sl2::new([[0, 1], [-1, -1]]);
        assert_eq!(b.order(), 3);
        let p = a.mul(&b);
        assert_eq!(p, Sl2::new([[1, 1], [0, 1]]));
        assert_eq!(p.order(), 11);
        let r = Sl2::new([[4, 0], [0, 3]]);
        assert_eq!(r.order(), 5);
        // a r a^-1 = r^-1 in the 2x2 model.
        assert_eq!(a.mul(&r).mul(&a.inv()), r.inv());
    }

    #[test]
    fn borel_relations() {
        let (p, r) = build_borel();
        let id = Mat::identity_like(&ctx(), 5);
        let mut p11 = id.clone();
        for _ in 0..11 {
            p11 = p11.mul(&p.mat5);
        }
        assert_eq!(p11, id);
        let mut r5 = id.clone();
        for _ in 0..5 {
            r5 = r5.mul(&r.mat5);
        }
        assert_eq!(r5, id);
        // r p r^-1 = p^5: conjugation multiplies the diagonal exponents by 9,
        // and 5 * 9 = 45 = 1 mod 11.
        let lhs = r.mat5.mul(&p.mat5).mul(&r.mat5.inverse().unwrap());
        let mut p5 = id.clone();
        for _ in 0..5 {
            p5 = p5.mul(&p.mat5);
        }
        assert_eq!(lhs, p5);
        assert_eq!(r.mat2.mul(&p.mat2).mul(&r.mat2.inv()), p.mat2.pow(5));
    }

    #[test]
    fn lambda2_of_p_is_diagonal_with_pair_sums() {
        let (p, _) = build_borel();
        let m10 = p.mat10();
        let expected = [10i64, 2, 7, 8, 6, 5, 1, 9, 4, 3];
        for i in 0..10 {
            for j in 0..10 {
                let want = if i == j {
                    CycloNum::zeta(expected[i])
                } else {
                    CycloNum::zero()
                };
                assert_eq!(*m10.at(i, j), want, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn lambda2_of_r_is_signless_double_cycle() {
        let (_, r) = build_borel();
        let m10 = r.mat10();
        // x0 -> x1 -> x2 -> x3 -> x4 -> x0 and x5 -> ... -> x9 -> x5.
        for j in 0..10 {
            let img = if j < 5 { (j + 1) % 5 } else { 5 + (j - 4) % 5 };
            for i in 0..10 {
                let want = if i == img {
                    CycloNum::one()
                } else {
                    CycloNum::zero()
                };
                assert_eq!(*m10.at(i, j), want, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn involution_solution_is_unique_and_matches_gauss_sum_formula() {
        let sol = solve_generator_a().unwrap();
        assert_eq!(sol.candidates.len(), 1);
        // c_m = (zeta^(2*3^m) - zeta^(-2*3^m)) * g / 11 with g the quadratic
        // Gauss sum; frozen as the independent closed form.
        let mut g = CycloNum::zero();
        let qr = [1i64, 3, 4, 5, 9];
        for t in 1..=10i64 {
            let z = CycloNum::zeta(t);
            if qr.contains(&(t % 11)) {
                g = g.add(&z);
            } else {
                g = g.sub(&z);
            }
        }
        let eleventh = BigRational::new(1.into(), 11.into());
        let mut pow3 = 1i64;
        for m in 0..5 {
            let e = 2 * pow3 % 11;
            let c = CycloNum::zeta(e)
                .sub(&CycloNum::zeta(-e))
                .mul(&g)
                .scale(&eleventh);
            for j in 0..5 {
                let k = (5 + m - j) % 5;
                assert_eq!(*sol.a.mat5.at(j, k % 5), c, "c_{m} at ({j},{k})");
            }
            pow3 = pow3 * 3 % 11;
        }
        // The Gauss sum squares to -11.
        assert_eq!(g.mul(&g), CycloNum::from_int(-11));
    }

    #[test]
    fn involution_first_entry_has_negative_real_part() {
        // The sign is forced by (a p)^3 = 1; the surviving matrix has
        // c_0 = (zeta^2 - zeta^9) g / 11 whose real part is negative, so no
        // sign convention is ever consulted.
        let sol = solve_generator_a().unwrap();
        let c0 = sol.a.mat5.at(0, 0);
        let re_twice = c0.add(&c0.conjugate());
        // 2 Re(c0) = sum of coefficients after conjugation pairing; evaluate
        // numerically via the embedding zeta -> exp(2 pi i / 11).
        let mut val = 0.0f64;
        for (k, coeff) in re_twice.coeffs().iter().enumerate() {
            let c = rational_to_f64(coeff);
            val += c * (2.0 * std::f64::consts::PI * k as f64 / 11.0).cos();
        }
        assert!(val < -0.5, "2 Re(c0) = {val}");
    }

    fn rational_to_f64(r: &BigRational) -> f64 {
        let n: f64 = r.numer().to_string().parse().unwrap();
        let d: f64 = r.denom().to_string().parse().unwrap();
        n / d
    }

    #[test]
    fn word_models_agree() {
        let sol = solve_generator_a().unwrap();
        let (p, r) = build_borel();
        // ab = p in both models.
        let prod = sol.a.mul(&sol.b);
        assert_eq!(prod.mat2, p.mat2);
        assert_eq!(prod.mat5, p.mat5);
        // The long word evaluates to r in both models.
        let mut acc = GroupElem::identity();
        for ch in R_WORD.chars() {
            acc = acc.mul(if ch == 'a' { &sol.a } else { &sol.b });
        }
        assert_eq!(acc.mat2, r.mat2);
        assert_eq!(acc.mat5, r.mat5);
    }

    #[test]
    fn presentation_relations_hold() {
        let sol = solve_generator_a().unwrap();
        assert!(relations_hold(&sol.a.mat5, &sol.b.mat5));
    }

    #[test]
    fn klein_cubic_is_invariant() {
        let sol = solve_generator_a().unwrap();
        assert!(fixes_klein_cubic(&sol.a.mat5));
        let (p, r) = build_borel();
        assert!(fixes_klein_cubic(&p.mat5));
        assert!(fixes_klein_cubic(&r.mat5));
    }

    #[test]
    fn group_has_660_elements_and_expected_classes() {
        let sol = solve_generator_a().unwrap();
        let elems = enumerate_group(&sol.a, &sol.b).unwrap();
        assert_eq!(elems.len(), 660);
        let classes = classify(&elems).unwrap();
        assert_eq!(classes.sizes, [1, 60, 60, 55, 110, 110, 132, 132]);
        assert_eq!(classes.reps[0], Sl2::identity());
        // Table order pins the class orders.
        let orders: Vec<u64> = classes.reps.iter().map(|r| r.order()).collect();
        assert_eq!(orders, vec![1, 11, 11, 2, 3, 6, 5, 5]);
    }

    #[test]
    fn character_table_is_orthonormal() {
        let table = CharacterTable::standard();
        assert!(table.verify_orthogonality());
        // First column lists the degrees.
        let degrees: Vec<CharValue> = table
            .rows
            .iter()
            .map(|(_, chi)| chi.values[0].clone())
            .collect();
        let expect: Vec<CharValue> = [1i64, 5, 5, 10, 10, 11, 12, 12]
            .iter()
            .map(|&n| CharValue::from_int(n))
            .collect();
        assert_eq!(degrees, expect);
    }

    #[test]
    fn traces_match_table_rows() {
        let sol = solve_generator_a().unwrap();
        let elems = enumerate_group(&sol.a, &sol.b).unwrap();
        let classes = classify(&elems).unwrap();
        let table = CharacterTable::standard();
        let chi5 = trace_character(&elems, &classes, |e| e.mat5.clone());
        let want5 = &table.rows.iter().find(|(n, _)| n == "V5").unwrap().1;
        assert_eq!(&chi5, want5);
        let chi10 = trace_character(&elems, &classes, |e| e.mat10());
        let want10 = &table.rows.iter().find(|(n, _)| n == "V10").unwrap().1;
        assert_eq!(&chi10, want10);
    }

    #[test]
    fn lambda3_character_of_v10_dual() {
        let sol = solve_generator_a().unwrap();
        let elems = enumerate_group(&sol.a, &sol.b).unwrap();
        let classes = classify(&elems).unwrap();
        let table = CharacterTable::standard();
        // V10 is self-dual (all values real), so Lambda^3 of the dual has the
        // same character.
        let chi10 = &table.rows.iter().find(|(n, _)| n == "V10").unwrap().1;
        let l3 = lambda3_character(chi10, &classes);
        let want = Character::from_ints([120, -1, -1, 8, 3, -1, 0, 0]);
        assert_eq!(l3, want);
        // The trivial constituent appears exactly once.
        let ip = table.inner_product(&l3, &table.rows[0].1);
        assert_eq!(ip, CharValue::from_int(1));
        let decomp = table.decompose(&l3).unwrap();
        let total: u64 = decomp
            .iter()
            .map(|(name, m)| {
                let deg = match name.as_str() {
                    "C" => 1,
                    "V5" | "V5*" => 5,
                    "V10" | "V10'" => 10,
                    "V11" => 11,
                    _ => 12,
                };
                deg * m
            })
            .sum();
        assert_eq!(total, 120);
        assert!(decomp.iter().any(|(n, m)| n == "C" && *m == 1));
    }

    #[test]
    fn power_maps_in_table_order() {
        let sol = solve_generator_a().unwrap();
        let elems = enumerate_group(&sol.a, &sol.b).unwrap();
        let classes = classify(&elems).unwrap();
        // Squaring sends 11a (k=1) to 11b (k=2, a non-residue); cubing keeps
        // 11a (k=3 is a residue).
        assert_eq!(classes.square_map()[1], 2);
        assert_eq!(classes.cube_map()[1], 1);
        // An order-6 element squares into the order-3 class and cubes into
        // the involution class.
        assert_eq!(classes.square_map()[5], 4);
        assert_eq!(classes.cube_map()[5], 3);
    }

    #[test]
    fn invariants_of_borel_and_full_group() {
        let sol = solve_generator_a().unwrap();
        let (p, r) = build_borel();
        let c = ctx();
        let borel = invariant_trivectors(&[p.clone(), r.clone()]);
        assert_eq!(borel.len(), 2);
        let full = invariant_trivectors(&[p, r, sol.a.clone()]);
        assert_eq!(full.len(), 1);
        // The Borel invariants span the two halves of sigma; the full
        // invariant is sigma itself up to scale.
        let sigma1 = build_sigma(&SIGMA_COMPONENTS[..5], &c).unwrap();
        let sigma2 = build_sigma(&SIGMA_COMPONENTS[5..], &c).unwrap();
        assert!(same_span(&borel, &[sigma1, sigma2]));
        assert!(same_span(&full, &[sigma(&c)]));
    }

    fn same_span(xs: &[Trivector<CycloNum>], ys: &[Trivector<CycloNum>]) -> bool {
        let c = ctx();
        let triples = all_triples();
        let index_of: HashMap<[usize; 3], usize> =
            triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let fill = |list: &[Trivector<CycloNum>], m: &mut Mat<CycloNum>, base: usize| {
            for (col, t) in list.iter().enumerate() {
                for (triple, coeff) in t.entries() {
                    *m.at_mut(index_of[triple], base + col) = coeff.clone();
                }
            }
        };
        let mut mx = Mat::zero_like(&c, 120, xs.len());
        fill(xs, &mut mx, 0);
        let mut all = Mat::zero_like(&c, 120, xs.len() + ys.len());
        fill(xs, &mut all, 0);
        fill(ys, &mut all, xs.len());
        xs.len() == ys.len() && mx.rank() == xs.len() && all.rank() == xs.len()
    }

    #[test]
    fn identity_fixes_everything() {
        let id = GroupElem::identity();
        let inv = invariant_trivectors(&[id]);
        assert_eq!(inv.len(), 120);
    }

    #[test]
    fn generators_fix_sigma() {
        let sol = solve_generator_a().unwrap();
        let (p, r) = build_borel();
        let s = sigma(&ctx());
        assert!(all_fix_trivector(&[p, r, sol.a.clone(), sol.b.clone()], &s));
    }
}
