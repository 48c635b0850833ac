//! Multivariate polynomials over an abstract coefficient field, term orders,
//! Buchberger's algorithm with the Gebauer-Moller pair criteria, normal
//! forms, and combinatorial dimension/degree of homogeneous ideals via
//! Hilbert series of the leading-term ideal.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{CycloNum, Field, FpNum, Ring};

pub type Mono = Vec<u16>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PolysysError {
    #[error("reduction budget exhausted after {spent} steps")]
    BudgetExceeded { spent: u64 },
    #[error("generators live in different polynomial rings ({0} vs {1} variables)")]
    MixedRings(usize, usize),
    #[error("empty generator list denotes the zero ideal; refusing")]
    EmptyGenerators,
    #[error("non-homogeneous generator (degrees {0} and {1} in one polynomial)")]
    NonHomogeneous(usize, usize),
    #[error("ideal is not zero-dimensional (variable x{0} unbounded)")]
    PositiveDimensional(usize),
    #[error("specialization at p={p}, root index {j} has {count} solutions, expected exactly 1")]
    AmbiguousSpecialization { p: u64, j: u64, count: usize },
    #[error("CRT reconstruction failed after {tried} primes ({ambiguous} ambiguous specializations)")]
    ReconstructionFailed { tried: usize, ambiguous: usize },
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// Shared step budget for Groebner runs; cloning shares the same pool, so
/// concurrent computations can draw from one global allowance.
#[derive(Clone, Debug)]
pub struct Budget {
    remaining: Arc<AtomicU64>,
    limited: bool,
    spent: Arc<AtomicU64>,
}

impl Budget {
    pub fn limit(steps: u64) -> Self {
        Budget {
            remaining: Arc::new(AtomicU64::new(steps)),
            limited: true,
            spent: Arc::new(AtomicU64::new(0)),
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            remaining: Arc::new(AtomicU64::new(u64::MAX)),
            limited: false,
            spent: Arc::new(AtomicU64::new(0)),
        }
    }

    pub fn charge(&self, steps: u64) -> Result<(), PolysysError> {
        self.spent.fetch_add(steps, AtomicOrdering::Relaxed);
        if !self.limited {
            return Ok(());
        }
        let prev = self.remaining.fetch_sub(steps, AtomicOrdering::Relaxed);
        if prev < steps {
            self.remaining.store(0, AtomicOrdering::Relaxed);
            Err(PolysysError::BudgetExceeded {
                spent: self.spent.load(AtomicOrdering::Relaxed),
            })
        } else {
            Ok(())
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent.load(AtomicOrdering::Relaxed)
    }

    pub fn exhausted(&self) -> bool {
        self.limited && self.remaining.load(AtomicOrdering::Relaxed) == 0
    }
}

// Monomial helpers -----------------------------------------------------------

pub fn mono_deg(m: &[u16]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

pub fn mono_mul(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// b / a, assuming divisibility.
pub fn mono_quot(b: &[u16], a: &[u16]) -> Mono {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

pub fn mono_lcm(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TermOrder {
    GrevLex,
    Lex,
    /// Compare by weight first, ties by grevlex; zero weights on a leading
    /// block of variables make this an elimination order for the rest.
    Weighted(Vec<u64>),
}

impl TermOrder {
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            TermOrder::GrevLex => grevlex(a, b),
            TermOrder::Lex => a.cmp(b),
            TermOrder::Weighted(w) => {
                let wa: u64 = a.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum();
                let wb: u64 = b.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum();
                wa.cmp(&wb).then_with(|| grevlex(a, b))
            }
        }
    }

    /// Encode a monomial as a vector whose lexicographic comparison agrees
    /// with this order, so sorted maps can track leading terms cheaply.
    fn sort_key(&self, m: &[u16]) -> Vec<u64> {
        match self {
            TermOrder::Lex => m.iter().map(|&e| e as u64).collect(),
            TermOrder::GrevLex => grevlex_key(m),
            TermOrder::Weighted(w) => {
                let wm: u64 = m.iter().zip(w).map(|(&e, &wi)| e as u64 * wi).sum();
                let mut key = vec![wm];
                key.extend(grevlex_key(m));
                key
            }
        }
    }
}

fn grevlex_key(m: &[u16]) -> Vec<u64> {
    let mut key = Vec::with_capacity(m.len() + 1);
    key.push(mono_deg(m) as u64);
    for &e in m.iter().rev() {
        key.push(u16::MAX as u64 - e as u64);
    }
    key
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da = mono_deg(a);
    let db = mono_deg(b);
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing slot wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// Multivariate polynomial: a map from exponent vectors to nonzero
/// coefficients. The map's key order is storage-only; term orders are
/// applied on demand.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MPoly<F> {
    n: usize,
    terms: BTreeMap<Mono, F>,
}

impl<F: Ring> MPoly<F> {
    pub fn zero(n: usize) -> Self {
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: F) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn var(n: usize, i: usize, ctx: &F) -> Self {
        assert!(i < n);
        let mut m = vec![0u16; n];
        m[i] = 1;
        let mut p = Self::zero(n);
        p.terms.insert(m, ctx.one_like());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, F)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in it {
            assert_eq!(m.len(), n);
            p.add_term(&m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &[u16]) -> Option<&F> {
        self.terms.get(m)
    }

    fn add_term(&mut self, m: &[u16], c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(old) => {
                let s = old.add(c);
                if s.is_zero() {
                    self.terms.remove(m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m.to_vec(), c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(&mono_mul(ma, mb), &ca.mul(cb));
            }
        }
        out
    }

    /// self * c * x^m.
    pub fn mono_scaled(&self, m: &[u16], c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mono_mul(mm, m), cc.mul(c)))
                .collect(),
        }
    }

    pub fn leading<'a>(&'a self, order: &TermOrder) -> Option<(&'a Mono, &'a F)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| mono_deg(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| mono_deg(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm[i] -= 1;
            let k = c.from_i64_like(m[i] as i64);
            out.add_term(&mm, &c.mul(&k));
        }
        out
    }

    /// Substitute field values for selected variables.
    pub fn substitute(&self, fixed: &[(usize, F)]) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mm = m.clone();
            for (i, v) in fixed {
                let e = mm[*i];
                if e > 0 {
                    let mut pw = v.one_like();
                    for _ in 0..e {
                        pw = pw.mul(v);
                    }
                    coeff = coeff.mul(&pw);
                    mm[*i] = 0;
                }
            }
            out.add_term(&mm, &coeff);
        }
        out
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.n);
        let ctx = point
            .first()
            .cloned()
            .expect("evaluation in a ring with at least one variable");
        let mut acc = ctx.zero_like();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn used_vars(&self) -> Vec<bool> {
        let mut used = vec![false; self.n];
        for m in self.terms.keys() {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used
    }

    pub fn map_vars(&self, new_n: usize, map: &[Option<usize>]) -> Self {
        let mut out = Self::zero(new_n);
        for (m, c) in &self.terms {
            let mut mm = vec![0u16; new_n];
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let j = map[i].expect("dropped variable still used");
                    mm[j] = e;
                }
            }
            out.add_term(&mm, c);
        }
        out
    }
}

/// Polynomials form a ring; contextual constants are derived from the first
/// stored coefficient, so they cannot be conjured from the zero polynomial.
impl<F: Ring> Ring for MPoly<F> {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.n)
    }
    fn one_like(&self) -> Self {
        let ctx = self
            .terms
            .values()
            .next()
            .expect("no coefficient context on the zero polynomial");
        MPoly::constant(self.n, ctx.one_like())
    }
    fn from_i64_like(&self, k: i64) -> Self {
        let ctx = self
            .terms
            .values()
            .next()
            .expect("no coefficient context on the zero polynomial");
        MPoly::constant(self.n, ctx.from_i64_like(k))
    }
    fn add(&self, rhs: &Self) -> Self {
        MPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| mono_deg(m) == 0 && c.is_one())
    }
}

/// Coefficient fields usable in Groebner computations: a hook for keeping
/// representations small after each reduction.
pub trait GbField: Field {
    /// Multiply the polynomial through by a nonzero scalar of choice
    /// (content removal); must not change the ideal membership semantics.
    fn content_normalize(_f: &mut MPoly<Self>) {}
}

impl GbField for FpNum {}

impl GbField for BigRational {
    fn content_normalize(f: &mut MPoly<Self>) {
        rescale_by_rational_content(f, |c| std::slice::from_ref(c));
    }
}

impl GbField for CycloNum {
    fn content_normalize(f: &mut MPoly<Self>) {
        rescale_by_rational_content(f, |c| c.coeffs().as_slice());
    }
}

fn rescale_by_rational_content<F, G>(f: &mut MPoly<F>, parts: G)
where
    F: Field,
    G: Fn(&F) -> &[BigRational],
{
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for (_, c) in f.terms() {
        for r in parts(c) {
            if Zero::is_zero(r) {
                continue;
            }
            num_gcd = num_gcd.gcd(r.numer());
            den_lcm = den_lcm.lcm(r.denom());
        }
    }
    if num_gcd.is_zero() {
        return;
    }
    let scale = BigRational::new(den_lcm, num_gcd);
    if One::is_one(&scale) {
        return;
    }
    let sf = {
        let any = f.terms().next().map(|(_, c)| c.clone()).unwrap();
        let one = any.one_like();
        scale_of(&one, &scale)
    };
    *f = f.scale(&sf);
}

fn scale_of<F: Field>(one: &F, r: &BigRational) -> F {
    use num_traits::ToPrimitive;
    // exact construction of a rational multiple of 1 in F
    let num = big_to_field(one, r.numer());
    let den = big_to_field(one, r.denom());
    return num.mul(&den.try_inv().expect("nonzero denominator"));

    fn big_to_field<F: Field>(one: &F, x: &num_bigint::BigInt) -> F {
        if let Some(v) = x.to_i64() {
            return one.from_i64_like(v);
        }
        let half: num_bigint::BigInt = x / 2;
        let rest = x - &half;
        big_to_field(one, &half).add(&big_to_field(one, &rest))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroebnerBasis<F> {
    pub gens: Vec<MPoly<F>>,
    pub order: TermOrder,
}

struct BasisEntry<F> {
    poly: MPoly<F>,
    lm: Mono,
    lc_inv: F,
    redundant: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    deg: usize,
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger<F: GbField>(
    gens: &[MPoly<F>],
    order: TermOrder,
) -> Result<GroebnerBasis<F>, PolysysError> {
    buchberger_budgeted(gens, order, &Budget::unlimited())
}

pub fn buchberger_budgeted<F: GbField>(
    gens: &[MPoly<F>],
    order: TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis<F>, PolysysError> {
    let live: Vec<&MPoly<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    if live.is_empty() {
        return Ok(GroebnerBasis {
            gens: Vec::new(),
            order,
        });
    }
    let n = live[0].nvars();
    for g in &live {
        if g.nvars() != n {
            return Err(PolysysError::MixedRings(n, g.nvars()));
        }
    }

    let mut basis: Vec<BasisEntry<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in live {
        let nf = reduce_full(g, &basis, &order, budget, true)?;
        if nf.is_zero() {
            continue;
        }
        if let Some(unit) = unit_basis(&nf, n) {
            return Ok(GroebnerBasis {
                gens: vec![unit],
                order,
            });
        }
        install(&mut basis, &mut pairs, nf, &order);
    }

    while let Some(best) = select_pair(&pairs, &order) {
        let pair = pairs.swap_remove(best);
        budget.charge(1)?;
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let nf = reduce_full(&s, &basis, &order, budget, true)?;
        if nf.is_zero() {
            continue;
        }
        if let Some(unit) = unit_basis(&nf, n) {
            return Ok(GroebnerBasis {
                gens: vec![unit],
                order,
            });
        }
        install(&mut basis, &mut pairs, nf, &order);
    }

    // minimal basis, then inter-reduce to the canonical reduced form
    let mut fin: Vec<MPoly<F>> = basis
        .iter()
        .filter(|e| !e.redundant)
        .map(|e| e.poly.scale(&e.lc_inv))
        .collect();
    loop {
        let mut changed = false;
        for i in 0..fin.len() {
            let others: Vec<BasisEntry<F>> = fin
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| entry_of(g.clone(), &order))
                .collect();
            let red = reduce_full(&fin[i], &others, &order, budget, false)?;
            let red = monic(&red, &order);
            if red != fin[i] {
                fin[i] = red;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    fin.retain(|g| !g.is_zero());
    fin.sort_by(|a, b| {
        let la = a.leading(&order).unwrap().0;
        let lb = b.leading(&order).unwrap().0;
        order.cmp(la, lb)
    });
    Ok(GroebnerBasis { gens: fin, order })
}

fn unit_basis<F: GbField>(nf: &MPoly<F>, n: usize) -> Option<MPoly<F>> {
    let (lm, lc) = nf.leading(&TermOrder::GrevLex)?;
    if mono_deg(lm) == 0 {
        Some(MPoly::constant(n, lc.one_like()))
    } else {
        None
    }
}

fn entry_of<F: GbField>(poly: MPoly<F>, order: &TermOrder) -> BasisEntry<F> {
    let (lm, lc) = poly.leading(order).expect("nonzero basis polynomial");
    let lm = lm.clone();
    let lc_inv = lc.try_inv().expect("invertible leading coefficient");
    BasisEntry {
        poly,
        lm,
        lc_inv,
        redundant: false,
    }
}

fn monic<F: GbField>(f: &MPoly<F>, order: &TermOrder) -> MPoly<F> {
    match f.leading(order) {
        None => f.clone(),
        Some((_, lc)) => f.scale(&lc.try_inv().expect("nonzero leading coefficient")),
    }
}

fn s_polynomial<F: GbField>(a: &BasisEntry<F>, b: &BasisEntry<F>, lcm: &Mono) -> MPoly<F> {
    let ma = mono_quot(lcm, &a.lm);
    let mb = mono_quot(lcm, &b.lm);
    let fa = a.poly.mono_scaled(&ma, &a.lc_inv);
    let fb = b.poly.mono_scaled(&mb, &b.lc_inv);
    fa.sub(&fb)
}

fn reduce_full<F: GbField>(
    f: &MPoly<F>,
    basis: &[BasisEntry<F>],
    order: &TermOrder,
    budget: &Budget,
    normalize: bool,
) -> Result<MPoly<F>, PolysysError> {
    // working remainder keyed so the map's last entry is the leading term
    let mut work: BTreeMap<Vec<u64>, (Mono, F)> = f
        .terms()
        .map(|(m, c)| (order.sort_key(m), (m.clone(), c.clone())))
        .collect();
    let mut out = MPoly::zero(f.nvars());
    'outer: while let Some((_, (lm, lc))) = work.pop_last() {
        for e in basis {
            if e.redundant || !mono_divides(&e.lm, &lm) {
                continue;
            }
            budget.charge(1)?;
            let q = mono_quot(&lm, &e.lm);
            let factor = lc.mul(&e.lc_inv);
            for (m2, c2) in e.poly.terms() {
                if *m2 == e.lm {
                    continue; // cancels the leading term exactly
                }
                let mono = mono_mul(m2, &q);
                let key = order.sort_key(&mono);
                let delta = factor.mul(c2).neg();
                match work.get_mut(&key) {
                    Some((_, c)) => {
                        let s = c.add(&delta);
                        if s.is_zero() {
                            work.remove(&key);
                        } else {
                            *c = s;
                        }
                    }
                    None => {
                        work.insert(key, (mono, delta));
                    }
                }
            }
            continue 'outer;
        }
        // irreducible leading term: move it to the result
        out.add_term(&lm, &lc);
    }
    if normalize {
        F::content_normalize(&mut out);
    }
    Ok(out)
}

fn select_pair(pairs: &[Pair], order: &TermOrder) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.deg
                .cmp(&b.deg)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
        })
        .map(|(k, _)| k)
}

/// Pair-set update with the Gebauer-Moller criteria.
fn install<F: GbField>(
    basis: &mut Vec<BasisEntry<F>>,
    pairs: &mut Vec<Pair>,
    mut poly: MPoly<F>,
    order: &TermOrder,
) {
    F::content_normalize(&mut poly);
    let h = entry_of(poly, order);
    let t = basis.len();

    // candidate pairs with h, pruned among themselves
    let cand: Vec<Pair> = basis
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.redundant)
        .map(|(i, g)| {
            let lcm = mono_lcm(&g.lm, &h.lm);
            let deg = mono_deg(&lcm);
            Pair { i, j: t, lcm, deg }
        })
        .collect();
    // keep a pair unless another candidate's lcm divides it (later ones win
    // ties) or its leading monomials are coprime (first Buchberger criterion)
    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in cand.iter().enumerate() {
        let coprime = mono_coprime(&basis[p.i].lm, &h.lm);
        let dominated = cand
            .iter()
            .enumerate()
            .any(|(k2, p2)| k2 > k && mono_divides(&p2.lcm, &p.lcm))
            || kept.iter().any(|p2| mono_divides(&p2.lcm, &p.lcm));
        if !coprime && !dominated {
            kept.push(p.clone());
        }
    }

    // prune old pairs made redundant by h
    pairs.retain(|p| {
        let lij = &p.lcm;
        if !mono_divides(&h.lm, lij) {
            return true;
        }
        let li = mono_lcm(&basis[p.i].lm, &h.lm);
        let lj = mono_lcm(&basis[p.j].lm, &h.lm);
        li == *lij || lj == *lij
    });
    pairs.extend(kept);

    // mark basis elements whose leading monomial h now covers
    for g in basis.iter_mut() {
        if !g.redundant && mono_divides(&h.lm, &g.lm) {
            g.redundant = true;
        }
    }
    basis.push(h);
}

/// Remainder of `f` on division by the basis; zero iff `f` is in the ideal.
pub fn normal_form<F: GbField>(f: &MPoly<F>, gb: &GroebnerBasis<F>) -> MPoly<F> {
    let basis: Vec<BasisEntry<F>> = gb
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| entry_of(g.clone(), &gb.order))
        .collect();
    reduce_full(f, &basis, &gb.order, &Budget::unlimited(), false).expect("unlimited budget")
}

// ---------------------------------------------------------------------------
// Dimension and degree from the leading-term ideal
// ---------------------------------------------------------------------------

/// Projective dimension (-1 for the empty scheme) and degree of the
/// homogeneous ideal with the given reduced basis, read off from the Hilbert
/// series of its leading-term ideal.
pub fn dim_degree<F: GbField>(gb: &GroebnerBasis<F>) -> Result<(i64, u64), PolysysError> {
    if gb.gens.is_empty() {
        return Err(PolysysError::EmptyGenerators);
    }
    for g in &gb.gens {
        if !g.is_homogeneous() {
            let mut degs: Vec<usize> = g.terms().map(|(m, _)| mono_deg(m)).collect();
            degs.sort_unstable();
            return Err(PolysysError::NonHomogeneous(
                degs[0],
                *degs.last().unwrap(),
            ));
        }
    }
    let n = gb.gens[0].nvars();
    let lts: Vec<Mono> = gb
        .gens
        .iter()
        .map(|g| g.leading(&gb.order).expect("nonzero generator").0.clone())
        .collect();
    if lts.iter().any(|m| mono_deg(m) == 0) {
        return Ok((-1, 0));
    }
    let mut memo: HashMap<Vec<Mono>, Vec<i128>> = HashMap::new();
    let mut num = hilbert_numerator(minimalize(lts), &mut memo);
    // strip the t = 1 root with its multiplicity
    let mut mult = 0usize;
    while num.iter().sum::<i128>() == 0 && num.iter().any(|&c| c != 0) {
        num = divide_by_one_minus_t(&num);
        mult += 1;
    }
    if num.iter().all(|&c| c == 0) {
        return Ok((-1, 0));
    }
    let degree: i128 = num.iter().sum();
    debug_assert!(degree > 0);
    let cone_dim = n as i64 - mult as i64;
    Ok((cone_dim - 1, degree as u64))
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Mono> = Vec::new();
    gens.sort_by_key(|m| mono_deg(m));
    for m in gens {
        if !out.iter().any(|g| mono_divides(g, &m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

fn hilbert_numerator(gens: Vec<Mono>, memo: &mut HashMap<Vec<Mono>, Vec<i128>>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| mono_deg(m) == 0) {
        return vec![0];
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let n = gens[0].len();
    let pairwise_coprime = (0..gens.len()).all(|i| {
        (i + 1..gens.len()).all(|j| mono_coprime(&gens[i], &gens[j]))
    });
    let result = if pairwise_coprime {
        let mut acc = vec![1i128];
        for m in &gens {
            let d = mono_deg(m);
            let mut f = vec![0i128; d + 1];
            f[0] = 1;
            f[d] = -1;
            acc = poly_mul_i128(&acc, &f);
        }
        acc
    } else {
        // pivot on the most frequent variable
        let mut freq = vec![0usize; n];
        for m in &gens {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    freq[i] += 1;
                }
            }
        }
        let x = (0..n).max_by_key(|&i| freq[i]).unwrap();

        // I + (x)
        let mut plus: Vec<Mono> = gens.iter().filter(|m| m[x] == 0).cloned().collect();
        let mut xm = vec![0u16; n];
        xm[x] = 1;
        plus.push(xm);
        let plus = minimalize(plus);

        // I : x
        let colon: Vec<Mono> = gens
            .iter()
            .map(|m| {
                let mut mm = m.clone();
                if mm[x] > 0 {
                    mm[x] -= 1;
                }
                mm
            })
            .collect();
        let colon = minimalize(colon);

        let a = hilbert_numerator(plus, memo);
        let b = hilbert_numerator(colon, memo);
        let mut shifted = vec![0i128];
        shifted.extend(b);
        poly_add_i128(&a, &shifted)
    };
    memo.insert(gens, result.clone());
    result
}

fn poly_mul_i128(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_i128(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn divide_by_one_minus_t(a: &[i128]) -> Vec<i128> {
    // a(t) = (1 - t) q(t) with a(1) = 0: q via prefix sums
    let mut out = Vec::with_capacity(a.len().saturating_sub(1));
    let mut acc = 0i128;
    for i in 0..a.len().saturating_sub(1) {
        acc += a[i];
        out.push(acc);
    }
    out
}

// ---------------------------------------------------------------------------
// Zero-dimensional solving
// ---------------------------------------------------------------------------

/// Root extraction for univariate polynomials over a field: all roots lying
/// in the field, plus the leftover factors that do not split.
pub trait RootScan: Field {
    /// coeffs is little-endian, nonzero; returns (roots with multiplicity
    /// stripped, unsplit factors of degree >= 1).
    fn univariate_roots(coeffs: &[Self]) -> (Vec<Self>, Vec<Vec<Self>>);
}

impl RootScan for FpNum {
    fn univariate_roots(coeffs: &[Self]) -> (Vec<Self>, Vec<Vec<Self>>) {
        let p = coeffs[0].modulus();
        let mut rem = upoly_trim(coeffs.to_vec());
        let mut roots = Vec::new();
        if p > 1_000_000 {
            return (roots, vec![rem]);
        }
        for v in 0..p {
            let cand = FpNum::new(v, p);
            while upoly_deg(&rem) >= 1 && upoly_eval(&rem, &cand).is_zero() {
                rem = upoly_div_linear(&rem, &cand);
                if !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
        let unsplit = if upoly_deg(&rem) >= 1 { vec![rem] } else { Vec::new() };
        (roots, unsplit)
    }
}

impl RootScan for BigRational {
    fn univariate_roots(coeffs: &[Self]) -> (Vec<Self>, Vec<Vec<Self>>) {
        linear_roots_only(coeffs)
    }
}

impl RootScan for CycloNum {
    fn univariate_roots(coeffs: &[Self]) -> (Vec<Self>, Vec<Vec<Self>>) {
        linear_roots_only(coeffs)
    }
}

/// Splits off linear factors connected to rational root candidates read from
/// the polynomial itself: only degree-1 remainders are resolved; anything of
/// higher degree is reported unsplit rather than factored heuristically.
fn linear_roots_only<F: Field>(coeffs: &[F]) -> (Vec<F>, Vec<Vec<F>>) {
    let rem = upoly_trim(coeffs.to_vec());
    if upoly_deg(&rem) == 1 {
        let root = rem[0].neg().div(&rem[1]).expect("nonzero leading coefficient");
        (vec![root], Vec::new())
    } else if upoly_deg(&rem) == 0 {
        (Vec::new(), Vec::new())
    } else {
        (Vec::new(), vec![rem])
    }
}

// univariate helpers, little-endian coefficient vectors

fn upoly_trim<F: Ring>(mut v: Vec<F>) -> Vec<F> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn upoly_deg<F: Ring>(v: &[F]) -> usize {
    v.len() - 1
}

fn upoly_eval<F: Ring>(v: &[F], x: &F) -> F {
    let mut acc = v.last().unwrap().clone();
    for c in v.iter().rev().skip(1) {
        acc = acc.mul(x).add(c);
    }
    acc
}

fn upoly_div_linear<F: Field>(v: &[F], root: &F) -> Vec<F> {
    // synthetic division by (x - root)
    let mut out = vec![v[0].zero_like(); v.len() - 1];
    let mut carry = v.last().unwrap().clone();
    for i in (0..v.len() - 1).rev() {
        out[i] = carry.clone();
        carry = v[i].add(&carry.mul(root));
    }
    debug_assert!(carry.is_zero());
    upoly_trim(out)
}

fn upoly_rem<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r = upoly_trim(a.to_vec());
    let b = upoly_trim(b.to_vec());
    let db = upoly_deg(&b);
    if db == 0 {
        return vec![a[0].zero_like()];
    }
    let lead_inv = b.last().unwrap().try_inv().expect("nonzero divisor");
    while !r.iter().all(|c| c.is_zero()) && upoly_deg(&r) >= db {
        let dr = upoly_deg(&r);
        let f = r.last().unwrap().mul(&lead_inv);
        for k in 0..=db {
            let t = r[dr - db + k].sub(&f.mul(&b[k]));
            r[dr - db + k] = t;
        }
        r = upoly_trim(r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    r
}

fn upoly_gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = upoly_trim(a.to_vec());
    let mut y = upoly_trim(b.to_vec());
    while !y.iter().all(|c| c.is_zero()) {
        let r = upoly_rem(&x, &y);
        x = y;
        y = r;
    }
    // monic gcd
    let lead = x.last().unwrap().clone();
    if !lead.is_zero() && !lead.is_one() {
        let inv = lead.try_inv().unwrap();
        for c in x.iter_mut() {
            *c = c.mul(&inv);
        }
    }
    x
}

#[derive(Clone, Debug)]
pub struct ZeroDimSolutions<F> {
    /// Full-length coordinate vectors, fixed variables included.
    pub points: Vec<Vec<F>>,
    /// Univariate factors (in the original ring) that do not split over the
    /// coefficient field; nonempty means the variety has further points in
    /// an extension field.
    pub unsplit: Vec<MPoly<F>>,
}

/// All solutions of a zero-dimensional system with coordinates in the field.
///
/// `fixed` declares values for variables eliminated before the basis was
/// computed; remaining variables must all be constrained or the input is
/// rejected as positive-dimensional.
pub fn solve_zero_dim<F: GbField + RootScan>(
    gb: &GroebnerBasis<F>,
    fixed: &[(usize, F)],
) -> Result<ZeroDimSolutions<F>, PolysysError> {
    if gb.gens.is_empty() {
        return Err(PolysysError::EmptyGenerators);
    }
    let n = gb.gens[0].nvars();
    let gens: Vec<MPoly<F>> = gb
        .gens
        .iter()
        .map(|g| g.substitute(fixed))
        .filter(|g| !g.is_zero())
        .collect();
    if gens.iter().any(|g| g.total_degree() == Some(0)) {
        // a nonzero constant: inconsistent system, no solutions
        return Ok(ZeroDimSolutions {
            points: Vec::new(),
            unsplit: Vec::new(),
        });
    }

    // compress to the variables that actually appear
    let mut used = vec![false; n];
    for g in &gens {
        for (i, u) in g.used_vars().into_iter().enumerate() {
            used[i] |= u;
        }
    }
    for (i, &u) in used.iter().enumerate() {
        if !u && !fixed.iter().any(|(j, _)| *j == i) {
            return Err(PolysysError::PositiveDimensional(i));
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&i| used[i]).collect();
    let m = keep.len();
    if m == 0 {
        // every variable fixed, system consistent: the single fixed point
        let mut pt = vec![gb.gens[0].terms().next().unwrap().1.zero_like(); n];
        for (i, v) in fixed {
            pt[*i] = v.clone();
        }
        return Ok(ZeroDimSolutions {
            points: vec![pt],
            unsplit: Vec::new(),
        });
    }
    let mut map = vec![None; n];
    for (j, &i) in keep.iter().enumerate() {
        map[i] = Some(j);
    }
    let small: Vec<MPoly<F>> = gens.iter().map(|g| g.map_vars(m, &map)).collect();

    let lex = buchberger(&small, TermOrder::Lex)?;
    if lex.gens.len() == 1 && lex.gens[0].total_degree() == Some(0) {
        return Ok(ZeroDimSolutions {
            points: Vec::new(),
            unsplit: Vec::new(),
        });
    }
    // zero-dimensionality: every variable has a pure-power leading monomial
    for v in 0..m {
        let ok = lex.gens.iter().any(|g| {
            let lm = g.leading(&TermOrder::Lex).unwrap().0;
            lm[v] > 0 && lm.iter().enumerate().all(|(i, &e)| i == v || e == 0)
        });
        if !ok {
            return Err(PolysysError::PositiveDimensional(keep[v]));
        }
    }

    let zero = lex.gens[0].terms().next().unwrap().1.zero_like();
    let mut partials: Vec<Vec<F>> = vec![Vec::new()]; // assignments for vars v+1..m, reversed storage
    let mut unsplit: Vec<MPoly<F>> = Vec::new();
    for v in (0..m).rev() {
        let mut next: Vec<Vec<F>> = Vec::new();
        for tail in &partials {
            // tail[k] is the value of variable v+1+k
            let subst: Vec<(usize, F)> = tail
                .iter()
                .enumerate()
                .map(|(k, val)| (v + 1 + k, val.clone()))
                .collect();
            let mut uni: Option<Vec<F>> = None;
            for g in &lex.gens {
                let uv = g.used_vars();
                if uv.iter().take(v).any(|&b| b) {
                    continue;
                }
                let sub = g.substitute(&subst);
                if sub.is_zero() {
                    continue;
                }
                // now univariate in x_v (or constant)
                let d = sub
                    .terms()
                    .map(|(mm, _)| mm[v] as usize)
                    .max()
                    .unwrap();
                let mut coeffs = vec![zero.clone(); d + 1];
                for (mm, c) in sub.terms() {
                    coeffs[mm[v] as usize] = c.clone();
                }
                let coeffs = upoly_trim(coeffs);
                uni = Some(match uni {
                    None => coeffs,
                    Some(acc) => upoly_gcd(&acc, &coeffs),
                });
                if uni.as_ref().map(|u| upoly_deg(u)) == Some(0) {
                    break;
                }
            }
            let Some(u) = uni else {
                return Err(PolysysError::PositiveDimensional(keep[v]));
            };
            if upoly_deg(&u) == 0 {
                // inconsistent branch
                continue;
            }
            let (roots, stuck) = F::univariate_roots(&u);
            for f in stuck {
                let poly = MPoly::from_terms(
                    n,
                    f.iter().enumerate().map(|(k, c)| {
                        let mut mono = vec![0u16; n];
                        mono[keep[v]] = k as u16;
                        (mono, c.clone())
                    }),
                );
                if !unsplit.contains(&poly) {
                    unsplit.push(poly);
                }
            }
            for r in roots {
                let mut t = vec![r];
                t.extend(tail.iter().cloned());
                next.push(t);
            }
        }
        partials = next;
    }

    let mut points = Vec::new();
    for sol in partials {
        let mut pt = vec![zero.clone(); n];
        for (k, val) in sol.into_iter().enumerate() {
            pt[keep[k]] = val;
        }
        for (i, v) in fixed {
            pt[*i] = v.clone();
        }
        points.push(pt);
    }
    Ok(ZeroDimSolutions { points, unsplit })
}

/// Primes p = 1 mod 11, smallest first, recruited for modular specialization
/// of systems over Q(zeta_11).
pub const SPECIALIZATION_PRIMES: [u64; 8] = [23, 67, 89, 199, 331, 353, 397, 419];

/// Outcome of a CRT reconstruction: the exact solution together with the
/// primes that contributed and any primes skipped because some specialization
/// had more or fewer than one solution.
#[derive(Clone, Debug)]
pub struct CrtSolution {
    pub point: Vec<CycloNum>,
    pub primes_used: Vec<u64>,
    pub ambiguous: Vec<(u64, u64, usize)>,
}

/// What a per-root specialization solver reports back to the CRT driver.
pub enum RootOutcome {
    /// Exactly one solution over F_p at this embedding.
    Unique(Vec<FpNum>),
    /// Zero or several solutions; the whole prime is set aside.
    Ambiguous(usize),
}

/// Solves a system over Q(zeta_11) with a unique solution whose coordinates
/// lie in (1/denom) Z[zeta_11], by modular specialization with a
/// caller-supplied per-root solver.
///
/// For each prime p in the pool and each of the ten embeddings zeta -> g^j,
/// the system is reduced to F_p and handed to `solve_root`; every
/// specialization must report exactly one solution, otherwise the prime is
/// set aside.  The ten values per coordinate determine the zeta-expansion
/// mod p through a Vandermonde solve at the powers of g^j, and the integers
/// denom * a_k are combined across primes by the Chinese remainder theorem
/// with a centered lift.  After every recruited prime the candidate is
/// tested exactly over Q(zeta_11) against all generators; the first
/// candidate that passes is returned.  The exact check carries the entire
/// proof burden: the modular arithmetic only proposes.
///
/// Every variable must occur in some generator; callers with a partially
/// substituted system should compress it first (see [`MPoly::map_vars`]).
pub fn solve_unique_by_crt_with<S>(
    gens: &[MPoly<CycloNum>],
    prime_pool: &[u64],
    denom: u64,
    mut solve_root: S,
) -> Result<CrtSolution, PolysysError>
where
    S: FnMut(&crate::field::ReductionMap, &[MPoly<FpNum>]) -> Result<RootOutcome, PolysysError>,
{
    use num_bigint::BigInt;

    if gens.is_empty() {
        return Err(PolysysError::EmptyGenerators);
    }
    let n = gens[0].nvars();
    for g in gens {
        if g.nvars() != n {
            return Err(PolysysError::MixedRings(n, g.nvars()));
        }
    }
    let mut used = vec![false; n];
    for g in gens {
        for (i, u) in g.used_vars().into_iter().enumerate() {
            used[i] = used[i] || u;
        }
    }
    if let Some(i) = used.iter().position(|u| !u) {
        return Err(PolysysError::PositiveDimensional(i));
    }
    assert!(denom > 0, "denominator scale must be positive");

    // residues[i][k]: accumulated CRT value of denom * (coefficient k of x_i)
    let mut residues: Vec<Vec<BigInt>> = vec![vec![BigInt::from(0); 10]; n];
    let mut modulus = BigInt::from(1);
    let mut primes_used = Vec::new();
    let mut ambiguous = Vec::new();
    let denom_big = BigInt::from(denom);

    'pool: for &p in prime_pool {
        let base = crate::field::ReductionMap::new(p)?;
        let mut mat = crate::linalg::Mat::zero_like(&FpNum::new(0, p), 10, 10);
        let mut rhs: Vec<Vec<FpNum>> = vec![Vec::with_capacity(10); n];
        for j in 1..=10u64 {
            let tw = base.twist(j);
            let mut gens_p = Vec::with_capacity(gens.len());
            for g in gens {
                let mut terms: Vec<(Mono, FpNum)> = Vec::new();
                for (mono, coeff) in g.terms() {
                    let c = coeff.reduce(&tw)?;
                    if !Ring::is_zero(&c) {
                        terms.push((mono.clone(), c));
                    }
                }
                let red = MPoly::from_terms(n, terms);
                if red.num_terms() > 0 {
                    gens_p.push(red);
                }
            }
            if gens_p.is_empty() {
                ambiguous.push((p, j, usize::MAX));
                continue 'pool;
            }
            let point = match solve_root(&tw, &gens_p)? {
                RootOutcome::Unique(v) => v,
                RootOutcome::Ambiguous(count) => {
                    ambiguous.push((p, j, count));
                    continue 'pool;
                }
            };
            debug_assert_eq!(point.len(), n);
            let row = (j - 1) as usize;
            let mut pw = FpNum::new(1, p);
            let node = FpNum::new(tw.root(), p);
            for k in 0..10 {
                *mat.at_mut(row, k) = pw;
                pw = pw.mul(&node);
            }
            for i in 0..n {
                rhs[i].push(point[i]);
            }
        }
        let scale = FpNum::new(denom % p, p);
        for i in 0..n {
            let a = mat
                .solve(&rhs[i])
                .expect("Vandermonde matrix at distinct roots is invertible");
            for k in 0..10 {
                let scaled = a[k].mul(&scale);
                residues[i][k] = crt_step(
                    &residues[i][k],
                    &modulus,
                    &BigInt::from(scaled.value()),
                    &BigInt::from(p),
                );
            }
        }
        modulus *= BigInt::from(p);
        primes_used.push(p);

        // centered lift, divide back by denom, test exactness
        let half: BigInt = &modulus >> 1;
        let point: Vec<CycloNum> = (0..n)
            .map(|i| {
                let mut coeffs = [(); 10].map(|_| BigRational::from_integer(0.into()));
                for (k, c) in coeffs.iter_mut().enumerate() {
                    let mut v = residues[i][k].clone();
                    if v > half {
                        v -= &modulus;
                    }
                    *c = BigRational::new(v, denom_big.clone());
                }
                CycloNum::from_coeffs(coeffs)
            })
            .collect();
        if gens.iter().all(|g| g.eval(&point).is_zero()) {
            return Ok(CrtSolution {
                point,
                primes_used,
                ambiguous,
            });
        }
    }
    Err(PolysysError::ReconstructionFailed {
        tried: prime_pool.len(),
        ambiguous: ambiguous.len(),
    })
}

/// [`solve_unique_by_crt_with`] driven by a Groebner basis at each root:
/// suitable when the specialized systems are small enough to solve outright.
pub fn solve_unique_by_crt(
    gens: &[MPoly<CycloNum>],
    prime_pool: &[u64],
    denom: u64,
) -> Result<CrtSolution, PolysysError> {
    solve_unique_by_crt_with(gens, prime_pool, denom, |_, gens_p| {
        let gb = buchberger(gens_p, TermOrder::GrevLex)?;
        let sols = solve_zero_dim(&gb, &[])?;
        if sols.points.len() == 1 && sols.unsplit.is_empty() {
            Ok(RootOutcome::Unique(sols.points[0].clone()))
        } else {
            Ok(RootOutcome::Ambiguous(sols.points.len() + sols.unsplit.len()))
        }
    })
}

/// Combines x = r1 mod m1 (m1 may be 1) with x = r2 mod m2 into x mod m1 m2.
fn crt_step(
    r1: &num_bigint::BigInt,
    m1: &num_bigint::BigInt,
    r2: &num_bigint::BigInt,
    m2: &num_bigint::BigInt,
) -> num_bigint::BigInt {
    use num_integer::Integer;
    let e = m1.extended_gcd(m2);
    debug_assert!(e.gcd == num_bigint::BigInt::from(1));
    // x = r1 + m1 * t with t = (r2 - r1) / m1 mod m2
    let t = ((r2 - r1) * &e.x).mod_floor(m2);
    (r1 + m1 * t).mod_floor(&(m1 * m2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FpNum;
    use num_bigint::BigInt;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn qpoly(n: usize, terms: &[(&[u16], i64)]) -> MPoly<BigRational> {
        MPoly::from_terms(n, terms.iter().map(|(m, c)| (m.to_vec(), q(*c))))
    }

    fn fpoly(n: usize, p: u64, terms: &[(&[u16], i64)]) -> MPoly<FpNum> {
        MPoly::from_terms(
            n,
            terms.iter().map(|(m, c)| (m.to_vec(), FpNum::from_i64(*c, p))),
        )
    }

    #[test]
    fn inconsistent_system_collapses_to_one() {
        // {x - 1, x - 2}
        let g1 = qpoly(1, &[(&[1], 1), (&[0], -1)]);
        let g2 = qpoly(1, &[(&[1], 1), (&[0], -2)]);
        let gb = buchberger(&[g1, g2], TermOrder::Lex).unwrap();
        assert_eq!(gb.gens.len(), 1);
        assert_eq!(gb.gens[0], qpoly(1, &[(&[0], 1)]));
        let nf = normal_form(&qpoly(1, &[(&[0], 1)]), &gb);
        assert!(nf.is_zero());
    }

    #[test]
    fn spolynomial_reduces_to_zero() {
        // {x^2, xy} under lex is already a reduced basis
        let g1 = qpoly(2, &[(&[2, 0], 1)]);
        let g2 = qpoly(2, &[(&[1, 1], 1)]);
        let gb = buchberger(&[g1.clone(), g2.clone()], TermOrder::Lex).unwrap();
        assert_eq!(gb.gens, vec![g2, g1]);
    }

    #[test]
    fn normal_form_membership() {
        let gb = buchberger(&[qpoly(2, &[(&[1, 0], 1)])], TermOrder::Lex).unwrap();
        assert!(normal_form(&qpoly(2, &[(&[2, 0], 1)]), &gb).is_zero());
        let y = qpoly(2, &[(&[0, 1], 1)]);
        assert_eq!(normal_form(&y, &gb), y);
    }

    #[test]
    fn fixed_point_of_buchberger() {
        // x^2 + y^2 - 1 and x y - 1 over F_23
        let p = 23;
        let g1 = fpoly(2, p, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -1)]);
        let g2 = fpoly(2, p, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let gb = buchberger(&[g1, g2], TermOrder::GrevLex).unwrap();
        let again = buchberger(&gb.gens, TermOrder::GrevLex).unwrap();
        assert_eq!(gb.gens, again.gens);
    }

    #[test]
    fn budget_exhaustion_reported() {
        let g1 = qpoly(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -1)]);
        let g2 = qpoly(2, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let tiny = Budget::limit(2);
        match buchberger_budgeted(&[g1, g2], TermOrder::GrevLex, &tiny) {
            Err(PolysysError::BudgetExceeded { spent }) => assert!(spent >= 2),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn dim_degree_points_and_curves() {
        // V(x) in P^1: one point
        let gb = buchberger(&[qpoly(2, &[(&[1, 0], 1)])], TermOrder::GrevLex).unwrap();
        assert_eq!(dim_degree(&gb).unwrap(), (0, 1));
        // V(x^2): a double point
        let gb = buchberger(&[qpoly(2, &[(&[2, 0], 1)])], TermOrder::GrevLex).unwrap();
        assert_eq!(dim_degree(&gb).unwrap(), (0, 2));
        // twisted cubic in P^3: dimension 1, degree 3
        let gens = vec![
            qpoly(4, &[(&[1, 0, 1, 0], 1), (&[0, 2, 0, 0], -1)]),
            qpoly(4, &[(&[0, 1, 0, 1], 1), (&[0, 0, 2, 0], -1)]),
            qpoly(4, &[(&[1, 0, 0, 1], 1), (&[0, 1, 1, 0], -1)]),
        ];
        let gb = buchberger(&gens, TermOrder::GrevLex).unwrap();
        assert_eq!(dim_degree(&gb).unwrap(), (1, 3));
        // unit ideal: empty scheme
        let gb = buchberger(&[qpoly(2, &[(&[0, 0], 5)])], TermOrder::GrevLex).unwrap();
        assert_eq!(dim_degree(&gb).unwrap(), (-1, 0));
    }

    #[test]
    fn dim_degree_rejects_bad_input() {
        let gb = GroebnerBasis::<BigRational> {
            gens: vec![],
            order: TermOrder::GrevLex,
        };
        assert!(matches!(dim_degree(&gb), Err(PolysysError::EmptyGenerators)));
        let gb = buchberger(
            &[qpoly(2, &[(&[1, 0], 1), (&[0, 0], -1)])],
            TermOrder::GrevLex,
        )
        .unwrap();
        assert!(matches!(dim_degree(&gb), Err(PolysysError::NonHomogeneous(_, _))));
    }

    #[test]
    fn solve_square_roots_of_one() {
        let p = 23;
        let g = fpoly(1, p, &[(&[2], 1), (&[0], -1)]);
        let gb = buchberger(&[g], TermOrder::Lex).unwrap();
        let sols = solve_zero_dim(&gb, &[]).unwrap();
        let mut vals: Vec<u64> = sols.points.iter().map(|pt| pt[0].value()).collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![1, 22]);
        assert!(sols.unsplit.is_empty());
    }

    #[test]
    fn solve_linear_system() {
        let p = 23;
        let g1 = fpoly(2, p, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let g2 = fpoly(2, p, &[(&[0, 1], 1), (&[0, 0], -3)]);
        let gb = buchberger(&[g1, g2], TermOrder::Lex).unwrap();
        let sols = solve_zero_dim(&gb, &[]).unwrap();
        assert_eq!(sols.points.len(), 1);
        assert_eq!(sols.points[0][0].value(), 3);
        assert_eq!(sols.points[0][1].value(), 3);
    }

    #[test]
    fn solve_reports_unsplit_factors() {
        // x^2 - 5 has no root mod 23
        let p = 23;
        let g = fpoly(1, p, &[(&[2], 1), (&[0], -5)]);
        let gb = buchberger(&[g], TermOrder::Lex).unwrap();
        let sols = solve_zero_dim(&gb, &[]).unwrap();
        assert!(sols.points.is_empty());
        assert_eq!(sols.unsplit.len(), 1);
        assert_eq!(sols.unsplit[0].total_degree(), Some(2));
    }

    #[test]
    fn solve_rejects_positive_dimensional() {
        let g = qpoly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let gb = buchberger(&[g], TermOrder::Lex).unwrap();
        assert!(matches!(
            solve_zero_dim(&gb, &[]),
            Err(PolysysError::PositiveDimensional(_))
        ));
    }

    #[test]
    fn weighted_order_eliminates() {
        // x = t^2, y = t^3; eliminating t must reveal y^2 - x^3
        let t = 0usize;
        let gens = vec![
            qpoly(3, &[(&[0, 1, 0], 1), (&[2, 0, 0], -1)]), // x - t^2
            qpoly(3, &[(&[0, 0, 1], 1), (&[3, 0, 0], -1)]), // y - t^3
        ];
        let order = TermOrder::Weighted(vec![1, 0, 0]);
        let gb = buchberger(&gens, order).unwrap();
        let cuspidal = qpoly(3, &[(&[0, 0, 2], 1), (&[0, 3, 0], -1)]);
        assert!(normal_form(&cuspidal, &gb).is_zero());
        assert!(gb
            .gens
            .iter()
            .any(|g| !g.used_vars()[t] && g.num_terms() > 1));
    }

    #[test]
    fn substitution_and_partials() {
        // f = x^2 y + 3 z
        let f = qpoly(3, &[(&[2, 1, 0], 1), (&[0, 0, 1], 3)]);
        let fx = f.partial(0);
        assert_eq!(fx, qpoly(3, &[(&[1, 1, 0], 2)]));
        let sub = f.substitute(&[(0, q(2))]);
        assert_eq!(sub, qpoly(3, &[(&[0, 1, 0], 4), (&[0, 0, 1], 3)]));
        assert_eq!(f.eval(&[q(1), q(2), q(3)]), q(11));
    }

    #[test]
    fn content_normalization_keeps_ideal() {
        let mut f = qpoly(2, &[(&[1, 0], 4), (&[0, 1], 6)]);
        BigRational::content_normalize(&mut f);
        assert_eq!(f, qpoly(2, &[(&[1, 0], 2), (&[0, 1], 3)]));
    }

    #[test]
    fn solve_with_all_vars_fixed() {
        let p = 23;
        let g = fpoly(1, p, &[(&[1], 1), (&[0], -7)]);
        let gb = buchberger(&[g], TermOrder::Lex).unwrap();
        let sols = solve_zero_dim(&gb, &[(0, FpNum::new(7, p))]).unwrap();
        assert_eq!(sols.points.len(), 1);
        assert_eq!(sols.points[0][0].value(), 7);
    }
}
