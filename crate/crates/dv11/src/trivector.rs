//! Exterior algebra on a 10-dimensional space: trivectors, contraction to
//! skew-symmetric matrices, Pfaffians, rank loci, restriction to subspaces,
//! and the pullback action of GL(10).

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, Ring};
use crate::linalg::Mat;
use crate::polysys::MPoly;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TrivectorError {
    #[error("index {0} repeated within a triple")]
    RepeatedIndex(usize),
    #[error("index {0} outside 0..=9")]
    IndexOutOfRange(usize),
    #[error("Pfaffian needs an even index subset, got {0} rows")]
    OddSubset(usize),
    #[error("subspace basis rows are linearly dependent")]
    DependentBasis,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("vector has length {0}, expected 10")]
    BadLength(usize),
    #[error("rank bound {0} not in {{2, 4, 6}}")]
    BadRankBound(usize),
}

/// The ten components of the invariant trivector, coefficient +1 each in
/// this listed order; sorting the unordered ones introduces signs.
pub const SIGMA_COMPONENTS: [[usize; 3]; 10] = [
    [0, 2, 5],
    [1, 3, 6],
    [2, 4, 7],
    [3, 0, 8],
    [4, 1, 9],
    [0, 9, 7],
    [1, 5, 8],
    [2, 6, 9],
    [3, 7, 5],
    [4, 8, 6],
];

/// Alternating 3-form on a 10-dimensional space, stored as coefficients on
/// sorted index triples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trivector<F> {
    coeffs: BTreeMap<[usize; 3], F>,
}

impl<F: Field> Trivector<F> {
    pub fn zero() -> Self {
        Trivector {
            coeffs: BTreeMap::new(),
        }
    }

    /// Basis trivector e_i ^ e_j ^ e_k for a sorted triple.
    pub fn unit(triple: [usize; 3], ctx: &F) -> Self {
        assert!(triple[0] < triple[1] && triple[1] < triple[2] && triple[2] < 10);
        let mut t = Self::zero();
        t.coeffs.insert(triple, ctx.one_like());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_components(&self) -> usize {
        self.coeffs.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &F)> {
        self.coeffs.iter()
    }

    fn insert(&mut self, triple: [usize; 3], c: F) {
        if c.is_zero() {
            self.coeffs.remove(&triple);
        } else {
            self.coeffs.insert(triple, c);
        }
    }

    /// Coefficient on a sorted triple (zero if absent).
    pub fn coeff_sorted(&self, triple: [usize; 3], ctx: &F) -> F {
        self.coeffs
            .get(&triple)
            .cloned()
            .unwrap_or_else(|| ctx.zero_like())
    }

    /// t(e_i, e_j, e_k) for arbitrary index order, with the permutation sign;
    /// zero when an index repeats.
    pub fn coeff(&self, i: usize, j: usize, k: usize, ctx: &F) -> F {
        let (triple, sign) = match sort3(i, j, k) {
            None => return ctx.zero_like(),
            Some(x) => x,
        };
        let c = self.coeff_sorted(triple, ctx);
        if sign < 0 {
            c.neg()
        } else {
            c
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &rhs.coeffs {
            let s = match out.coeffs.get(t) {
                Some(old) => old.add(c),
                None => c.clone(),
            };
            out.insert(*t, s);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &rhs.coeffs {
            let s = match out.coeffs.get(t) {
                Some(old) => old.sub(c),
                None => c.neg(),
            };
            out.insert(*t, s);
        }
        out
    }

    pub fn scale_by(&self, s: &F) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.coeffs {
            out.insert(*t, c.mul(s));
        }
        out
    }

    /// Full evaluation t(u, v, w).
    pub fn eval(&self, u: &[F], v: &[F], w: &[F], ctx: &F) -> F {
        assert!(u.len() == 10 && v.len() == 10 && w.len() == 10);
        let mut acc = ctx.zero_like();
        for ([a, b, c], coeff) in &self.coeffs {
            let d = det3(
                [&u[*a], &u[*b], &u[*c]],
                [&v[*a], &v[*b], &v[*c]],
                [&w[*a], &w[*b], &w[*c]],
            );
            acc = acc.add(&coeff.mul(&d));
        }
        acc
    }
}

fn sort3(i: usize, j: usize, k: usize) -> Option<([usize; 3], i32)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut t = [i, j, k];
    let mut sign = 1;
    if t[0] > t[1] {
        t.swap(0, 1);
        sign = -sign;
    }
    if t[1] > t[2] {
        t.swap(1, 2);
        sign = -sign;
    }
    if t[0] > t[1] {
        t.swap(0, 1);
        sign = -sign;
    }
    Some((t, sign))
}

fn det3<F: Ring>(r0: [&F; 3], r1: [&F; 3], r2: [&F; 3]) -> F {
    let m01 = r1[1].mul(r2[2]).sub(&r1[2].mul(r2[1]));
    let m11 = r1[0].mul(r2[2]).sub(&r1[2].mul(r2[0]));
    let m21 = r1[0].mul(r2[1]).sub(&r1[1].mul(r2[0]));
    r0[0].mul(&m01).sub(&r0[1].mul(&m11)).add(&r0[2].mul(&m21))
}

/// Builds a trivector from index triples, each contributing +1 on the triple
/// as listed (so an unsorted listing stores the sorting sign).
pub fn build_sigma<F: Field>(
    components: &[[usize; 3]],
    ctx: &F,
) -> Result<Trivector<F>, TrivectorError> {
    let mut t: Trivector<F> = Trivector::zero();
    for &[i, j, k] in components {
        for x in [i, j, k] {
            if x > 9 {
                return Err(TrivectorError::IndexOutOfRange(x));
            }
        }
        let (triple, sign) = match sort3(i, j, k) {
            None => {
                let dup = if i == j || i == k { i } else { j };
                return Err(TrivectorError::RepeatedIndex(dup));
            }
            Some(x) => x,
        };
        let add = ctx.from_i64_like(sign as i64);
        let s = match t.coeffs.get(&triple) {
            Some(old) => old.add(&add),
            None => add,
        };
        t.insert(triple, s);
    }
    Ok(t)
}

/// The invariant trivector itself.
pub fn sigma<F: Field>(ctx: &F) -> Trivector<F> {
    build_sigma(&SIGMA_COMPONENTS, ctx).expect("canonical components are valid")
}

/// Skew-symmetric matrix storing the strict upper triangle; entries may be
/// field elements or linear forms.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SkewMatrix<T> {
    m: usize,
    upper: Vec<T>,
}

impl<T: Ring> SkewMatrix<T> {
    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(m >= 2, "skew matrices of interest have size at least 2");
        let mut upper = Vec::with_capacity(m * (m - 1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { m, upper }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        i * (2 * self.m - i - 1) / 2 + (j - i - 1)
    }

    /// Entry (i, j) with antisymmetry applied.
    pub fn at(&self, i: usize, j: usize) -> T {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.idx(i, j)].clone(),
            Greater => self.upper[self.idx(j, i)].neg(),
            Equal => self.upper[0].zero_like(),
        }
    }

    pub fn to_mat(&self) -> Mat<T> {
        let rows = (0..self.m)
            .map(|i| (0..self.m).map(|j| self.at(i, j)).collect())
            .collect();
        Mat::from_rows(rows)
    }
}

impl<F: Field> SkewMatrix<F> {
    /// Rank over the coefficient field; always even for a skew form.
    pub fn rank(&self) -> usize {
        let r = self.to_mat().rank();
        assert!(r % 2 == 0, "skew-symmetric rank must be even");
        r
    }
}

/// Contraction t(v, -, -) as a skew matrix.
pub fn contract<F: Field>(t: &Trivector<F>, v: &[F]) -> Result<SkewMatrix<F>, TrivectorError> {
    if v.len() != 10 {
        return Err(TrivectorError::BadLength(v.len()));
    }
    let ctx = &v[0];
    Ok(SkewMatrix::from_fn(10, |i, j| {
        let mut acc = ctx.zero_like();
        for k in 0..10 {
            if v[k].is_zero() {
                continue;
            }
            let c = t.coeff(k, i, j, ctx);
            if !c.is_zero() {
                acc = acc.add(&v[k].mul(&c));
            }
        }
        acc
    }))
}

/// Pfaffian of the principal submatrix on `rows` (all rows when None), by
/// first-row expansion with memoization on index subsets.
pub fn pfaffian<T: Ring>(
    a: &SkewMatrix<T>,
    rows: Option<&[usize]>,
) -> Result<T, TrivectorError> {
    let mut idx: Vec<usize> = match rows {
        Some(r) => r.to_vec(),
        None => (0..a.size()).collect(),
    };
    idx.sort_unstable();
    idx.dedup();
    if idx.len() % 2 != 0 {
        return Err(TrivectorError::OddSubset(idx.len()));
    }
    if idx.is_empty() {
        return Ok(a.upper[0].one_like());
    }
    assert!(idx.len() <= 16, "subset fits in the bitmask");
    let mut memo: HashMap<u16, T> = HashMap::new();
    Ok(pf_rec(a, &idx, (1u16 << idx.len()) - 1, &mut memo))
}

fn pf_rec<T: Ring>(
    a: &SkewMatrix<T>,
    idx: &[usize],
    mask: u16,
    memo: &mut HashMap<u16, T>,
) -> T {
    let members: Vec<usize> = (0..idx.len()).filter(|&b| mask >> b & 1 == 1).collect();
    if members.len() == 2 {
        return a.at(idx[members[0]], idx[members[1]]);
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let first = members[0];
    let mut acc: Option<T> = None;
    for (t, &other) in members[1..].iter().enumerate() {
        let entry = a.at(idx[first], idx[other]);
        if entry.is_zero() {
            continue;
        }
        let sub = pf_rec(a, idx, mask & !(1 << first) & !(1 << other), memo);
        let term = entry.mul(&sub);
        let term = if t % 2 == 0 { term } else { term.neg() };
        acc = Some(match acc {
            None => term,
            Some(s) => s.add(&term),
        });
    }
    let result = acc.unwrap_or_else(|| a.upper[0].zero_like());
    memo.insert(mask, result.clone());
    result
}

/// The symbolic skew matrix of t: entries are the linear forms
/// t(x, e_i, e_j) in variables x_0..x_9.
pub fn symbolic_skew<F: Field>(t: &Trivector<F>, ctx: &F) -> SkewMatrix<MPoly<F>> {
    SkewMatrix::from_fn(10, |i, j| {
        let mut p = MPoly::zero(10);
        for k in 0..10 {
            let c = t.coeff(k, i, j, ctx);
            if c.is_zero() {
                continue;
            }
            let mut mono = vec![0u16; 10];
            mono[k] = 1;
            p = p.add(&MPoly::from_terms(10, [(mono, c)]));
        }
        p
    })
}

/// Generators of the locus where contract(t, x) has rank at most `bound`:
/// all (bound+2)-sized principal sub-Pfaffians of the symbolic skew matrix,
/// in lexicographic subset order.
pub fn rank_locus_ideal<F: Field>(
    t: &Trivector<F>,
    bound: usize,
    ctx: &F,
) -> Result<Vec<MPoly<F>>, TrivectorError> {
    if !matches!(bound, 2 | 4 | 6) {
        return Err(TrivectorError::BadRankBound(bound));
    }
    let skew = symbolic_skew(t, ctx);
    let size = bound + 2;
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        out.push(pfaffian(&skew, Some(&subset))?);
        // next lexicographic subset of {0..9}
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if subset[i] < 10 - (size - i) {
                subset[i] += 1;
                for k in i + 1..size {
                    subset[k] = subset[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Basis of a subspace of the 10-dimensional space, rows independent.
#[derive(Clone, PartialEq, Debug)]
pub struct SubspaceBasis<F> {
    rows: Vec<Vec<F>>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn new(rows: Vec<Vec<F>>) -> Result<Self, TrivectorError> {
        for r in &rows {
            if r.len() != 10 {
                return Err(TrivectorError::BadLength(r.len()));
            }
        }
        let m = Mat::from_rows(rows.clone());
        if m.rank() != rows.len() {
            return Err(TrivectorError::DependentBasis);
        }
        Ok(SubspaceBasis { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Span of coordinate vectors e_i for i in the set.
    pub fn coordinate(indices: &[usize], ctx: &F) -> Self {
        let rows = indices
            .iter()
            .map(|&i| {
                let mut v = vec![ctx.zero_like(); 10];
                v[i] = ctx.one_like();
                v
            })
            .collect();
        SubspaceBasis { rows }
    }
}

/// True iff t vanishes identically on the subspace.
pub fn restrict_vanishes<F: Field>(
    t: &Trivector<F>,
    v: &SubspaceBasis<F>,
) -> Result<bool, TrivectorError> {
    let k = v.dim();
    if k < 3 {
        return Err(TrivectorError::DependentBasis);
    }
    let ctx = &v.rows[0][0];
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                if !t.eval(&v.rows[a], &v.rows[b], &v.rows[c], ctx).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Pullback action (g . t)(u, v, w) = t(g^-1 u, g^-1 v, g^-1 w).
pub fn act<F: Field>(g10: &Mat<F>, t: &Trivector<F>) -> Result<Trivector<F>, TrivectorError> {
    assert_eq!((g10.rows, g10.cols), (10, 10));
    let h = g10.inverse().ok_or(TrivectorError::SingularMatrix)?;
    Ok(act_precomposed(&h, t))
}

/// Same action with the inverse already at hand, for callers applying one
/// group element to many trivectors.
pub fn act_precomposed<F: Field>(h: &Mat<F>, t: &Trivector<F>) -> Trivector<F> {
    let ctx = h.ctx();
    let mut out = Trivector::zero();
    for i in 0..10 {
        for j in i + 1..10 {
            for k in j + 1..10 {
                let mut acc = ctx.zero_like();
                for ([a, b, c], coeff) in &t.coeffs {
                    // 3x3 minor of h on rows (a,b,c), columns (i,j,k)
                    let d = det3(
                        [h.at(*a, i), h.at(*a, j), h.at(*a, k)],
                        [h.at(*b, i), h.at(*b, j), h.at(*b, k)],
                        [h.at(*c, i), h.at(*c, j), h.at(*c, k)],
                    );
                    if !d.is_zero() {
                        acc = acc.add(&coeff.mul(&d));
                    }
                }
                out.insert([i, j, k], acc);
            }
        }
    }
    out
}

/// JSON form: a list of (sorted triple, coefficient) pairs.
impl<F: Serialize> Serialize for Trivector<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(&[usize; 3], &F)> = self.coeffs.iter().collect();
        pairs.serialize(s)
    }
}

impl<'de, F: Deserialize<'de> + Field> Deserialize<'de> for Trivector<F> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<([usize; 3], F)> = Vec::deserialize(d)?;
        let mut t = Trivector::zero();
        for (triple, c) in pairs {
            t.insert(triple, c);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FpNum, Rational};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> Rational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn sigma_q() -> Trivector<Rational> {
        sigma(&q(1))
    }

    #[test]
    fn sigma_coefficients() {
        let s = sigma_q();
        assert_eq!(s.coeff_sorted([0, 2, 5], &q(0)), q(1));
        assert_eq!(s.coeff_sorted([0, 3, 8], &q(0)), q(-1));
        assert_eq!(s.num_components(), 10);
        // full signed expansion on sorted triples
        let expect: [([usize; 3], i64); 10] = [
            ([0, 2, 5], 1),
            ([1, 3, 6], 1),
            ([2, 4, 7], 1),
            ([0, 3, 8], -1),
            ([1, 4, 9], -1),
            ([0, 7, 9], -1),
            ([1, 5, 8], 1),
            ([2, 6, 9], 1),
            ([3, 5, 7], -1),
            ([4, 6, 8], -1),
        ];
        for (t, c) in expect {
            assert_eq!(s.coeff_sorted(t, &q(0)), q(c), "triple {t:?}");
        }
    }

    #[test]
    fn build_rejects_repeats() {
        assert!(matches!(
            build_sigma(&[[1, 1, 2]], &q(1)),
            Err(TrivectorError::RepeatedIndex(1))
        ));
        assert!(matches!(
            build_sigma(&[[0, 2, 11]], &q(1)),
            Err(TrivectorError::IndexOutOfRange(11))
        ));
    }

    #[test]
    fn alternation_of_lookup() {
        let s = sigma_q();
        assert_eq!(s.coeff(2, 0, 5, &q(0)), q(-1));
        assert_eq!(s.coeff(5, 0, 2, &q(0)), q(1));
        assert_eq!(s.coeff(0, 0, 5, &q(0)), q(0));
    }

    #[test]
    fn contraction_at_e0() {
        let s = sigma_q();
        let mut e0 = vec![q(0); 10];
        e0[0] = q(1);
        let m = contract(&s, &e0).unwrap();
        let mut nonzero = Vec::new();
        for i in 0..10 {
            for j in i + 1..10 {
                let v = m.at(i, j);
                if !Ring::is_zero(&v) {
                    nonzero.push(((i, j), v));
                }
            }
        }
        assert_eq!(
            nonzero,
            vec![((2, 5), q(1)), ((3, 8), q(-1)), ((7, 9), q(-1))]
        );
        assert_eq!(m.rank(), 6);
        assert_eq!(pfaffian(&m, None).unwrap(), q(0));
    }

    #[test]
    fn contraction_of_zero_vector() {
        let s = sigma_q();
        let m = contract(&s, &vec![q(0); 10]).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(m.at(i, j), q(0));
            }
        }
    }

    #[test]
    fn pfaffian_base_case() {
        let a = SkewMatrix::from_fn(2, |_, _| q(7));
        assert_eq!(pfaffian(&a, None).unwrap(), q(7));
        assert!(matches!(
            pfaffian(&a, Some(&[0])),
            Err(TrivectorError::OddSubset(1))
        ));
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        // deterministic pseudo-random skew matrices over F_23
        let p = 23u64;
        let mut state = 11u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            FpNum::new(state >> 33, p)
        };
        for m in [4usize, 6, 8] {
            for _ in 0..5 {
                let a = SkewMatrix::from_fn(m, |_, _| rnd());
                let pf = pfaffian(&a, None).unwrap();
                let det = a.to_mat().det();
                assert_eq!(pf.mul(&pf), det, "size {m}");
            }
        }
    }

    #[test]
    fn rank_locus_shapes() {
        let s = sigma_q();
        let i6 = rank_locus_ideal(&s, 6, &q(1)).unwrap();
        assert_eq!(i6.len(), 45);
        assert!(i6.iter().all(|f| f.total_degree() == Some(4) && f.is_homogeneous()));
        let i4 = rank_locus_ideal(&s, 4, &q(1)).unwrap();
        assert_eq!(i4.len(), 210);
        assert!(i4.iter().all(|f| f.total_degree() == Some(3) && f.is_homogeneous()));
        assert!(matches!(
            rank_locus_ideal(&s, 5, &q(1)),
            Err(TrivectorError::BadRankBound(5))
        ));
    }

    #[test]
    fn restriction_examples() {
        let s = sigma_q();
        let good = SubspaceBasis::coordinate(&[2, 3, 4, 5, 8, 9], &q(1));
        assert!(restrict_vanishes(&s, &good).unwrap());
        let bad = SubspaceBasis::coordinate(&[0, 1, 2, 3, 4, 5], &q(1));
        assert!(!restrict_vanishes(&s, &bad).unwrap());
        let dep = SubspaceBasis::new(vec![
            {
                let mut v = vec![q(0); 10];
                v[0] = q(1);
                v
            },
            {
                let mut v = vec![q(0); 10];
                v[1] = q(1);
                v
            },
            {
                let mut v = vec![q(0); 10];
                v[0] = q(1);
                v[1] = q(1);
                v
            },
        ]);
        assert!(matches!(dep, Err(TrivectorError::DependentBasis)));
    }

    #[test]
    fn action_identity_and_cycle() {
        let s = sigma_q();
        let id = Mat::identity_like(&q(1), 10);
        assert_eq!(act(&id, &s).unwrap(), s);

        // the order-5 monomial symmetry: x_i -> x_{i+1 mod 5} in both blocks
        let mut r10 = Mat::zero_like(&q(1), 10, 10);
        for i in 0..5 {
            *r10.at_mut((i + 1) % 5, i) = q(1);
            *r10.at_mut(5 + (i + 1) % 5, 5 + i) = q(1);
        }
        assert_eq!(act(&r10, &s).unwrap(), s);
        let sigma1 = build_sigma(&SIGMA_COMPONENTS[..5], &q(1)).unwrap();
        let sigma2 = build_sigma(&SIGMA_COMPONENTS[5..], &q(1)).unwrap();
        assert_eq!(act(&r10, &sigma1).unwrap(), sigma1);
        assert_eq!(act(&r10, &sigma2).unwrap(), sigma2);
        assert_eq!(act(&id, &sigma2).unwrap(), sigma2);

        let singular = Mat::zero_like(&q(1), 10, 10);
        assert!(matches!(
            act(&singular, &s),
            Err(TrivectorError::SingularMatrix)
        ));
    }

    #[test]
    fn eval_alternates() {
        let s = sigma_q();
        let mut state = 5u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            q((state >> 33) as i64 % 7 - 3)
        };
        let u: Vec<Rational> = (0..10).map(|_| rnd()).collect();
        let v: Vec<Rational> = (0..10).map(|_| rnd()).collect();
        let w: Vec<Rational> = (0..10).map(|_| rnd()).collect();
        let a = s.eval(&u, &v, &w, &q(1));
        let b = s.eval(&v, &u, &w, &q(1));
        assert_eq!(a, b.neg());
        let c = s.eval(&u, &u, &w, &q(1));
        assert!(Ring::is_zero(&c));
    }

    #[test]
    fn generic_contraction_rank_is_eight() {
        let s = sigma_q();
        let v: Vec<Rational> = (1..=10).map(q).collect();
        let m = contract(&s, &v).unwrap();
        assert_eq!(m.rank(), 8);
    }

    #[test]
    fn serde_round_trip() {
        let s = sigma_q();
        let js = serde_json::to_string(&s).unwrap();
        let back: Trivector<Rational> = serde_json::from_str(&js).unwrap();
        assert_eq!(s, back);
    }
}
