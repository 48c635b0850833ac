//! The fifty-five isolated singular points of the Peskine variety: exact
//! coordinates over Q(zeta_11), orbit structure, and distinctness.
//!
//! The singular locus is where the contraction sigma(x, -, -) drops to rank
//! four.  One distinguished seed lies on the hyperplane x0 + ... + x4 = 0
//! with x1/x0 = zeta^7 + zeta^6 + zeta^5 + zeta^4, and all its coordinates
//! are real.  The Borel subgroup sweeps out the remaining fifty-four points:
//! R permutes coordinates by a double five-cycle and P scales them by
//! eleventh roots of unity.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{CycloNum, Field, FieldError, FpNum, ReductionMap, Ring};
use crate::grouprep::{P_EXPONENTS, PAIRS};
use crate::linalg::Mat;
use crate::polysys::{
    buchberger_budgeted, solve_unique_by_crt_with, solve_zero_dim, Budget, MPoly, PolysysError,
    RootOutcome, TermOrder, SPECIALIZATION_PRIMES,
};
use crate::trivector::{contract, rank_locus_ideal, sigma, Trivector, TrivectorError};

/// Errors from locating and certifying the singular points.
#[derive(Debug, Error)]
pub enum SingError {
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("point has {0} coordinates, expected 10")]
    BadLength(usize),
    #[error("expected a unique seed point, found {0} candidates")]
    SeedCount(usize),
    #[error("seed postcondition violated: {0}")]
    Postcondition(&'static str),
    #[error("contraction at p_({i},{j}) has rank {rank}, expected 4")]
    WrongRank { i: usize, j: usize, rank: usize },
    #[error("points p_({0},{1}) and p_({2},{3}) coincide")]
    Duplicate(usize, usize, usize, usize),
    #[error("{0} real points among the 55, expected 5")]
    RealCount(usize),
    #[error("elimination ideal contains no univariate in the kept variable")]
    NoEliminant,
    #[error(transparent)]
    Polysys(#[from] PolysysError),
    #[error(transparent)]
    Trivector(#[from] TrivectorError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A point of P^9 over Q(zeta_11), stored with its first nonzero coordinate
/// scaled to 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ProjPoint {
    coords: Vec<CycloNum>,
}

impl ProjPoint {
    /// Normalizes homogeneous coordinates; fails on the zero vector.
    pub fn new(coords: Vec<CycloNum>) -> Result<Self, SingError> {
        if coords.len() != 10 {
            return Err(SingError::BadLength(coords.len()));
        }
        let lead = coords
            .iter()
            .position(|c| !Ring::is_zero(c))
            .ok_or(SingError::ZeroPoint)?;
        let inv = coords[lead].try_inv()?;
        let coords = coords.iter().map(|c| c.mul(&inv)).collect();
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[CycloNum] {
        &self.coords
    }

    /// Every coordinate fixed by complex conjugation zeta -> zeta^10.
    pub fn is_real(&self) -> bool {
        self.coords.iter().all(|c| c.galois(10) == *c)
    }

    /// Image under an invertible linear map, renormalized.
    pub fn apply(&self, m: &Mat<CycloNum>) -> Result<Self, SingError> {
        ProjPoint::new(m.apply(&self.coords))
    }

    /// Normalized coordinate tuple over F_p at the canonical embedding.
    pub fn reduce(&self, map: &ReductionMap) -> Result<[u64; 10], SingError> {
        let p = map.prime();
        let mut v = [0u64; 10];
        for (k, c) in self.coords.iter().enumerate() {
            v[k] = c.reduce(map)?.value();
        }
        let lead = v.iter().position(|&x| x != 0).ok_or(SingError::ZeroPoint)?;
        let inv = FpNum::new(v[lead], p).try_inv()?;
        for x in v.iter_mut() {
            *x = FpNum::new(*x, p).mul(&inv).value();
        }
        Ok(v)
    }

    fn key(&self) -> String {
        format!("{:?}", self.coords)
    }
}

/// Serialized shape of one indexed point.
#[derive(Clone, Serialize, Deserialize)]
struct PointRecord {
    i: usize,
    j: usize,
    coords: Vec<CycloNum>,
}

/// The 55 singular points indexed by (i, j) with 0 <= i <= 4, 0 <= j <= 10:
/// row i is the P-orbit of p_{i,0} = R^i(seed).
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<PointRecord>", into = "Vec<PointRecord>")]
pub struct SingularSet {
    points: Vec<ProjPoint>,
}

impl SingularSet {
    pub fn point(&self, i: usize, j: usize) -> &ProjPoint {
        assert!(i < 5 && j < 11, "index ({i},{j}) out of range");
        &self.points[i * 11 + j]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &ProjPoint)> {
        self.points
            .iter()
            .enumerate()
            .map(|(k, p)| (k / 11, k % 11, p))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl From<SingularSet> for Vec<PointRecord> {
    fn from(s: SingularSet) -> Self {
        s.points
            .into_iter()
            .enumerate()
            .map(|(k, p)| PointRecord {
                i: k / 11,
                j: k % 11,
                coords: p.coords,
            })
            .collect()
    }
}

impl TryFrom<Vec<PointRecord>> for SingularSet {
    type Error = String;

    fn try_from(recs: Vec<PointRecord>) -> Result<Self, String> {
        if recs.len() != 55 {
            return Err(format!("expected 55 points, got {}", recs.len()));
        }
        let mut slots: Vec<Option<ProjPoint>> = vec![None; 55];
        for rec in recs {
            if rec.i > 4 || rec.j > 10 {
                return Err(format!("index ({}, {}) out of range", rec.i, rec.j));
            }
            let slot = &mut slots[rec.i * 11 + rec.j];
            if slot.is_some() {
                return Err(format!("index ({}, {}) repeated", rec.i, rec.j));
            }
            *slot = Some(ProjPoint::new(rec.coords).map_err(|e| e.to_string())?);
        }
        Ok(SingularSet {
            points: slots.into_iter().map(|s| s.unwrap()).collect(),
        })
    }
}

/// The distinguished ratio x1/x0 of the seed point:
/// zeta^7 + zeta^6 + zeta^5 + zeta^4.
pub fn seed_ratio() -> CycloNum {
    CycloNum::zeta(7)
        .add(&CycloNum::zeta(6))
        .add(&CycloNum::zeta(5))
        .add(&CycloNum::zeta(4))
}

/// Minimal polynomial of the seed ratio over Q, constant term first:
/// X^5 + 2X^4 - 5X^3 - 2X^2 + 4X - 1.
pub const SEED_QUINTIC: [i64; 6] = [-1, 4, -2, -5, 2, 1];

/// Exact evaluation of the seed quintic at the seed ratio; must vanish.
pub fn quintic_annihilates_ratio() -> bool {
    let r = seed_ratio();
    let mut acc = CycloNum::zero();
    let mut pw = CycloNum::one();
    for &c in SEED_QUINTIC.iter() {
        acc = acc.add(&pw.scale(&BigRational::from_integer(c.into())));
        pw = pw.mul(&r);
    }
    Ring::is_zero(&acc)
}

/// zeta-exponents of the exterior-square action of P: coordinate k (the
/// pair (a, b)) is scaled by zeta to the sum of the two eigenvalue
/// exponents of P on a and b.
pub const P_SCALING: [i64; 10] = p_scaling();

const fn p_scaling() -> [i64; 10] {
    let mut out = [0i64; 10];
    let mut k = 0;
    while k < 10 {
        let (a, b) = PAIRS[k];
        out[k] = (P_EXPONENTS[a] + P_EXPONENTS[b]) % 11;
        k += 1;
    }
    out
}

/// Applies the exterior square of P^j: x_k -> zeta^{j t_k} x_k, then
/// renormalizes.
pub fn apply_p(p: &ProjPoint, j: i64) -> Result<ProjPoint, SingError> {
    let coords = p
        .coords()
        .iter()
        .enumerate()
        .map(|(k, c)| c.mul(&CycloNum::zeta(P_SCALING[k] * j)))
        .collect();
    ProjPoint::new(coords)
}

/// Applies the exterior square of R: the coordinate permutation
/// (x0 x1 x2 x3 x4)(x5 x6 x7 x8 x9), then renormalizes.
pub fn apply_r(p: &ProjPoint) -> Result<ProjPoint, SingError> {
    let c = p.coords();
    let mut out = vec![CycloNum::zero(); 10];
    for k in 0..5 {
        out[(k + 1) % 5] = c[k].clone();
        out[5 + (k + 1) % 5] = c[5 + k].clone();
    }
    ProjPoint::new(out)
}

/// The hyperplane form x0 + x1 + x2 + x3 + x4 in the 10-variable ring.
fn hyperplane() -> MPoly<CycloNum> {
    let ctx = CycloNum::one();
    let mut h = MPoly::zero(10);
    for i in 0..5 {
        h = h.add(&MPoly::var(10, i, &ctx));
    }
    h
}

/// The seed system: all 210 rank-four Pfaffian cubics plus the hyperplane,
/// with x0 = 1 and x1 = seed_ratio() substituted in.
fn seed_system(t: &Trivector<CycloNum>) -> Result<Vec<MPoly<CycloNum>>, SingError> {
    let ctx = CycloNum::one();
    let mut gens = rank_locus_ideal(t, 4, &ctx)?;
    gens.push(hyperplane());
    let fixed = [(0, CycloNum::one()), (1, seed_ratio())];
    let mut sys: Vec<MPoly<CycloNum>> = gens.iter().map(|g| g.substitute(&fixed)).collect();
    sys.retain(|g| g.num_terms() > 0);
    Ok(sys)
}

fn exact_path(
    sys: &[MPoly<CycloNum>],
    fixed: &[(usize, CycloNum)],
    budget: &Budget,
) -> Result<Vec<CycloNum>, SingError> {
    let gb = buchberger_budgeted(sys, TermOrder::GrevLex, budget)?;
    let sols = solve_zero_dim(&gb, fixed)?;
    if sols.points.len() != 1 || !sols.unsplit.is_empty() {
        return Err(SingError::SeedCount(sols.points.len() + sols.unsplit.len()));
    }
    Ok(sols.points.into_iter().next().unwrap())
}

fn modular_path(sys: &[MPoly<CycloNum>]) -> Result<Vec<CycloNum>, SingError> {
    // compress away the two substituted coordinates before specializing
    let mut used = vec![false; 10];
    for g in sys {
        for (i, u) in g.used_vars().into_iter().enumerate() {
            used[i] = used[i] || u;
        }
    }
    let keep: Vec<usize> = (0..10).filter(|&i| used[i]).collect();
    let mut map = vec![None; 10];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    if keep != [2, 3, 4, 5, 6, 7, 8, 9] {
        return Err(SingError::Postcondition(
            "substituted system does not involve exactly x2..x9",
        ));
    }
    let small: Vec<MPoly<CycloNum>> = sys.iter().map(|g| g.map_vars(keep.len(), &map)).collect();

    // Candidates come from the real slice x_{5+k} = -x_{(k+4) mod 5}: with
    // x0 = 1 and x1 fixed, the hyperplane determines x4 from (x2, x3), so a
    // specialization reduces to a two-variable scan over F_p.  The scan is a
    // search heuristic, not a completeness argument; the exact verification
    // inside the CRT driver is what certifies the lifted point.
    let sol = solve_unique_by_crt_with(&small, &SPECIALIZATION_PRIMES, 1, |map, gens_p| {
        let p = map.prime();
        let rhat = seed_ratio().reduce(map)?;
        let one = FpNum::new(1, p);
        let mut found: Option<Vec<FpNum>> = None;
        let mut count = 0usize;
        for a in 0..p {
            let x2 = FpNum::new(a, p);
            for b in 0..p {
                let x3 = FpNum::new(b, p);
                let x4 = one.add(&rhat).add(&x2).add(&x3).neg();
                let cand = vec![
                    x2,
                    x3,
                    x4,
                    x4.neg(),
                    one.neg(),
                    rhat.neg(),
                    x2.neg(),
                    x3.neg(),
                ];
                if gens_p.iter().all(|g| Ring::is_zero(&g.eval(&cand))) {
                    count += 1;
                    if found.is_none() {
                        found = Some(cand);
                    }
                }
            }
        }
        match (found, count) {
            (Some(v), 1) => Ok(RootOutcome::Unique(v)),
            (_, c) => Ok(RootOutcome::Ambiguous(c)),
        }
    })?;
    let mut coords = vec![CycloNum::zero(); 10];
    coords[0] = CycloNum::one();
    coords[1] = seed_ratio();
    for (new, &old) in keep.iter().enumerate() {
        coords[old] = sol.point[new].clone();
    }
    Ok(coords)
}

/// Finds the unique rank-four point with x0 = 1, x1 = seed_ratio() on the
/// hyperplane x0 + ... + x4 = 0, with all coordinates real.
///
/// The primary path substitutes the two fixed coordinates into the rank
/// ideal plus the hyperplane and runs a budgeted Groebner computation over
/// Q(zeta_11).  When the budget runs out, the system is re-solved by modular
/// specialization and CRT reconstruction ([`solve_unique_by_crt_with`]),
/// which verifies the lifted point against every generator exactly; the
/// postconditions below are checked either way.
pub fn seed_point(budget: &Budget) -> Result<ProjPoint, SingError> {
    let ctx = CycloNum::one();
    let t = sigma(&ctx);
    let sys = seed_system(&t)?;
    let fixed = [(0, CycloNum::one()), (1, seed_ratio())];
    let coords = match exact_path(&sys, &fixed, budget) {
        Ok(c) => c,
        Err(SingError::Polysys(PolysysError::BudgetExceeded { .. })) => modular_path(&sys)?,
        Err(e) => return Err(e),
    };
    let p = ProjPoint::new(coords)?;

    let sum = (0..5).fold(CycloNum::zero(), |acc, i| acc.add(&p.coords()[i]));
    if !Ring::is_zero(&sum) {
        return Err(SingError::Postcondition("hyperplane sum is nonzero"));
    }
    if !p.is_real() {
        return Err(SingError::Postcondition("coordinates are not all real"));
    }
    let rank = contract(&t, p.coords())?.rank();
    if rank != 4 {
        return Err(SingError::WrongRank { i: 0, j: 0, rank });
    }
    Ok(p)
}

/// Sweeps out the full orbit p_{i,j} = P^j(R^i(seed)) and certifies it:
/// 55 pairwise distinct points, contraction rank exactly four at every one,
/// and exactly five real points (the j = 0 column).
pub fn generate_orbit(seed: &ProjPoint) -> Result<SingularSet, SingError> {
    let mut points = Vec::with_capacity(55);
    let mut row = seed.clone();
    for _ in 0..5 {
        for j in 0..11 {
            points.push(apply_p(&row, j)?);
        }
        row = apply_r(&row)?;
    }

    let mut seen: HashMap<String, (usize, usize)> = HashMap::new();
    for (k, p) in points.iter().enumerate() {
        if let Some(&(pi, pj)) = seen.get(&p.key()) {
            return Err(SingError::Duplicate(pi, pj, k / 11, k % 11));
        }
        seen.insert(p.key(), (k / 11, k % 11));
    }

    let ctx = CycloNum::one();
    let t = sigma(&ctx);
    let ranks: Vec<usize> = points
        .par_iter()
        .map(|p| contract(&t, p.coords()).map(|m| m.rank()))
        .collect::<Result<_, _>>()?;
    for (k, rank) in ranks.into_iter().enumerate() {
        if rank != 4 {
            return Err(SingError::WrongRank {
                i: k / 11,
                j: k % 11,
                rank,
            });
        }
    }

    let reals = points.iter().filter(|p| p.is_real()).count();
    if reals != 5 {
        return Err(SingError::RealCount(reals));
    }
    Ok(SingularSet { points })
}

/// True when the given 10x10 matrix maps the 55-point set into itself as
/// projective points.  Applied to the exterior square of the solved
/// involution this closes the Borel orbit up to the whole group.
pub fn full_group_closure(s: &SingularSet, m: &Mat<CycloNum>) -> Result<bool, SingError> {
    let keys: HashSet<String> = s.points.iter().map(|p| p.key()).collect();
    let images: Vec<ProjPoint> = s
        .points
        .par_iter()
        .map(|p| p.apply(m))
        .collect::<Result<_, _>>()?;
    Ok(images.iter().all(|q| keys.contains(&q.key())))
}

/// Number of matrices in the list fixing the point projectively.
pub fn stabilizer_order(p: &ProjPoint, mats: &[Mat<CycloNum>]) -> Result<usize, SingError> {
    let fixing: Vec<bool> = mats
        .par_iter()
        .map(|m| p.apply(m).map(|q| q == *p))
        .collect::<Result<_, _>>()?;
    Ok(fixing.into_iter().filter(|&b| b).count())
}

/// Checks that reduction at the canonical embedding into F_p keeps the 55
/// points distinct as projective points.
pub fn distinct_mod(s: &SingularSet, p: u64) -> Result<bool, SingError> {
    let map = ReductionMap::new(p)?;
    let mut seen = HashSet::new();
    for (_, _, pt) in s.iter() {
        if !seen.insert(pt.reduce(&map)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Restricts the rank system mod p to the real slice x0 = 1,
/// x_{5+k} = -x_{(k+4) mod 5} (plus the hyperplane), eliminates x2, x3, x4
/// by a lexicographic Groebner basis, and returns the monic generator of
/// the resulting ideal in F_p[x1], coefficients constant-first.
pub fn real_slice_eliminant(p: u64) -> Result<Vec<u64>, SingError> {
    let ctx = CycloNum::one();
    let t = sigma(&ctx);
    let mut gens = rank_locus_ideal(&t, 4, &ctx)?;
    gens.push(hyperplane());
    let map = ReductionMap::new(p)?;

    // variable order for elimination: x2, x3, x4 ahead of x1
    let var_of = |v: usize| -> Option<(usize, bool)> {
        match v {
            0 => None,              // x0 = 1
            1 => Some((3, false)),  // kept variable, last in the order
            2..=4 => Some((v - 2, false)),
            5 => Some((2, true)),   // x5 = -x4
            6 => None,              // x6 = -x0 = -1, sign handled below
            7 => Some((3, true)),   // x7 = -x1
            8 => Some((0, true)),   // x8 = -x2
            9 => Some((1, true)),   // x9 = -x3
            _ => unreachable!(),
        }
    };

    let mut slice: Vec<MPoly<FpNum>> = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut terms: Vec<(Vec<u16>, FpNum)> = Vec::new();
        for (mono, coeff) in g.terms() {
            let mut c = coeff.reduce(&map)?;
            let mut m = vec![0u16; 4];
            for (v, &e) in mono.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let flip = match var_of(v) {
                    Some((nv, flip)) => {
                        m[nv] += e;
                        flip
                    }
                    None => v == 6,
                };
                if flip && e % 2 == 1 {
                    c = c.neg();
                }
            }
            if !Ring::is_zero(&c) {
                terms.push((m, c));
            }
        }
        let poly = MPoly::from_terms(4, terms);
        if poly.num_terms() > 0 {
            slice.push(poly);
        }
    }

    // The slice polynomials have degree <= 3 in four variables, so they
    // span a subspace of dimension <= 35; interreducing them linearly
    // before Buchberger keeps the pair queue small.
    let mut monos: Vec<Vec<u16>> = slice
        .iter()
        .flat_map(|g| g.terms().map(|(m, _)| m.clone()))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    monos.sort();
    monos.reverse();
    let col: HashMap<Vec<u16>, usize> =
        monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let zero = FpNum::new(0, p);
    let rows: Vec<Vec<FpNum>> = slice
        .iter()
        .map(|g| {
            let mut row = vec![zero; monos.len()];
            for (m, c) in g.terms() {
                row[col[m]] = *c;
            }
            row
        })
        .collect();
    let (red, pivots) = Mat::from_rows(rows).rref();
    let slice: Vec<MPoly<FpNum>> = (0..pivots.len())
        .map(|r| {
            let terms: Vec<(Vec<u16>, FpNum)> = (0..monos.len())
                .filter(|&c| !Ring::is_zero(red.at(r, c)))
                .map(|c| (monos[c].clone(), *red.at(r, c)))
                .collect();
            MPoly::from_terms(4, terms)
        })
        .collect();

    let gb = crate::polysys::buchberger(&slice, TermOrder::Lex)?;
    let mut best: Option<Vec<u64>> = None;
    for g in &gb.gens {
        let used = g.used_vars();
        if used[0] || used[1] || used[2] {
            continue;
        }
        let deg = g.total_degree().unwrap_or(0);
        let mut coeffs = vec![0u64; deg + 1];
        for (mono, c) in g.terms() {
            coeffs[mono[3] as usize] = c.value();
        }
        if best.as_ref().map_or(true, |b| coeffs.len() < b.len()) {
            best = Some(coeffs);
        }
    }
    let mut coeffs = best.ok_or(SingError::NoEliminant)?;
    let lead = FpNum::new(*coeffs.last().unwrap(), p);
    let inv = lead.try_inv()?;
    for c in coeffs.iter_mut() {
        *c = FpNum::new(*c, p).mul(&inv).value();
    }
    Ok(coeffs)
}

/// True when the seed quintic divides the given univariate over F_p
/// (coefficients constant-first).
pub fn quintic_divides(elim: &[u64], p: u64) -> bool {
    let quintic: Vec<FpNum> = SEED_QUINTIC
        .iter()
        .map(|&c| FpNum::new(c.rem_euclid(p as i64) as u64, p))
        .collect();
    let mut rem: Vec<FpNum> = elim.iter().map(|&c| FpNum::new(c, p)).collect();
    let lead_inv = quintic
        .last()
        .unwrap()
        .try_inv()
        .expect("quintic is monic");
    while rem.len() >= quintic.len() {
        let k = rem.len() - quintic.len();
        let factor = rem.last().unwrap().mul(&lead_inv);
        for (i, q) in quintic.iter().enumerate() {
            let t = rem[k + i].sub(&q.mul(&factor));
            rem[k + i] = t;
        }
        while rem.last().is_some_and(|x| Ring::is_zero(x)) {
            rem.pop();
        }
    }
    rem.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprep::{build_borel, enumerate_group, lambda2, solve_generator_a};
    use once_cell::sync::Lazy;

    static ORBIT: Lazy<SingularSet> = Lazy::new(|| generate_orbit(&frozen_seed()).unwrap());

    fn frozen_seed() -> ProjPoint {
        let z = CycloNum::zeta;
        let x1 = seed_ratio();
        let x2 = z(3)
            .add(&z(4))
            .add(&z(5))
            .add(&z(6))
            .add(&z(7))
            .add(&z(8))
            .sub(&CycloNum::one());
        let x3 = CycloNum::zero()
            .sub(&CycloNum::one())
            .sub(&z(2))
            .sub(&z(3))
            .sub(&z(4).scale(&BigRational::from_integer(2.into())))
            .sub(&z(5).scale(&BigRational::from_integer(2.into())))
            .sub(&z(6).scale(&BigRational::from_integer(2.into())))
            .sub(&z(7).scale(&BigRational::from_integer(2.into())))
            .sub(&z(8))
            .sub(&z(9));
        let x4 = CycloNum::one().add(&z(2)).add(&z(9));
        let coords = vec![
            CycloNum::one(),
            x1.clone(),
            x2.clone(),
            x3.clone(),
            x4.clone(),
            x4.neg(),
            CycloNum::one().neg(),
            x1.neg(),
            x2.neg(),
            x3.neg(),
        ];
        ProjPoint::new(coords).unwrap()
    }

    #[test]
    fn p_scaling_exponents() {
        assert_eq!(P_SCALING, [10, 2, 7, 8, 6, 5, 1, 9, 4, 3]);
    }

    #[test]
    fn seed_found_by_modular_fallback_matches_frozen_form() {
        // a tiny budget forces the primary Groebner path to bail out
        let budget = Budget::limit(10);
        let seed = seed_point(&budget).unwrap();
        assert_eq!(seed, frozen_seed());
    }

    #[test]
    fn seed_postconditions() {
        let seed = frozen_seed();
        assert!(Ring::is_one(&seed.coords()[0]));
        assert_eq!(seed.coords()[1], seed_ratio());
        let sum = (0..5).fold(CycloNum::zero(), |acc, i| acc.add(&seed.coords()[i]));
        assert!(Ring::is_zero(&sum));
        assert!(seed.is_real());
        let t = sigma(&CycloNum::one());
        assert_eq!(contract(&t, seed.coords()).unwrap().rank(), 4);
    }

    #[test]
    fn seed_is_the_only_orbit_point_with_its_ratio() {
        // certifies the uniqueness claim behind the two-coordinate pinning
        let r = seed_ratio();
        let hits = ORBIT
            .points
            .iter()
            .filter(|p| Ring::is_one(&p.coords()[0]) && p.coords()[1] == r)
            .count();
        assert_eq!(hits, 1);
    }

    #[test]
    fn exact_path_recovers_point_from_linear_system() {
        let seed = frozen_seed();
        let ctx = CycloNum::one();
        let fixed = [(0, CycloNum::one()), (1, seed_ratio())];
        let sys: Vec<MPoly<CycloNum>> = (2..10)
            .map(|i| {
                MPoly::var(10, i, &ctx).sub(&MPoly::constant(10, seed.coords()[i].clone()))
            })
            .collect();
        let got = exact_path(&sys, &fixed, &Budget::unlimited()).unwrap();
        assert_eq!(ProjPoint::new(got).unwrap(), seed);
    }

    #[test]
    fn scaling_and_permutation_match_exterior_squares() {
        let (p, r) = build_borel();
        let seed = frozen_seed();
        let via_mat_p = seed.apply(&lambda2(&p.mat5)).unwrap();
        assert_eq!(apply_p(&seed, 1).unwrap(), via_mat_p);
        let via_mat_r = seed.apply(&lambda2(&r.mat5)).unwrap();
        assert_eq!(apply_r(&seed).unwrap(), via_mat_r);
    }

    #[test]
    fn orbit_has_55_distinct_rank_four_points_five_real() {
        let set = &*ORBIT;
        assert_eq!(set.len(), 55);
        for i in 0..5 {
            assert!(set.point(i, 0).is_real());
            for j in 1..11 {
                assert!(!set.point(i, j).is_real());
            }
        }
    }

    #[test]
    fn row_actions_have_orders_eleven_and_five() {
        let seed = frozen_seed();
        let mut q = seed.clone();
        for step in 1..=11 {
            q = apply_p(&q, 1).unwrap();
            assert_eq!(q == seed, step == 11, "P-orbit period at step {step}");
        }
        let mut q = seed.clone();
        for step in 1..=5 {
            q = apply_r(&q).unwrap();
            assert_eq!(q == seed, step == 5, "R-orbit period at step {step}");
        }
    }

    #[test]
    fn all_rank_cubics_vanish_on_the_orbit() {
        let ctx = CycloNum::one();
        let t = sigma(&ctx);
        let gens = rank_locus_ideal(&t, 4, &ctx).unwrap();
        assert_eq!(gens.len(), 210);
        let set = &*ORBIT;
        let bad: usize = set
            .points
            .par_iter()
            .map(|p| gens.iter().filter(|g| !g.eval(p.coords()).is_zero()).count())
            .sum();
        assert_eq!(bad, 0);
    }

    #[test]
    fn rank_two_test_fails_everywhere() {
        // a rank-4 skew form has some nonzero 4x4 sub-Pfaffian
        let ctx = CycloNum::one();
        let t = sigma(&ctx);
        for (i, j, p) in ORBIT.iter() {
            let m = contract(&t, p.coords()).unwrap();
            let mut nonzero = false;
            'outer: for a in 0..10 {
                for b in a + 1..10 {
                    for c in b + 1..10 {
                        for d in c + 1..10 {
                            if !crate::trivector::pfaffian(&m, Some(&[a, b, c, d]))
                                .unwrap()
                                .is_zero()
                            {
                                nonzero = true;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            assert!(nonzero, "all 4x4 sub-Pfaffians vanish at p_({i},{j})");
        }
    }

    #[test]
    fn closure_under_identity_and_solved_involution() {
        let id = Mat::identity_like(&CycloNum::one(), 10);
        assert!(full_group_closure(&ORBIT, &id).unwrap());
        let sol = solve_generator_a().unwrap();
        let a10 = sol.a.mat10();
        assert!(full_group_closure(&ORBIT, &a10).unwrap());
    }

    #[test]
    fn seed_stabilizer_has_order_twelve() {
        let sol = solve_generator_a().unwrap();
        let elems = enumerate_group(&sol.a, &sol.b).unwrap();
        let mats: Vec<Mat<CycloNum>> = elems.par_iter().map(|g| g.mat10()).collect();
        assert_eq!(stabilizer_order(&frozen_seed(), &mats).unwrap(), 12);
    }

    #[test]
    fn points_stay_distinct_mod_23_and_67() {
        assert!(distinct_mod(&ORBIT, 23).unwrap());
        assert!(distinct_mod(&ORBIT, 67).unwrap());
    }

    #[test]
    fn quintic_vanishes_at_ratio_but_not_at_one() {
        assert!(quintic_annihilates_ratio());
        let at_one: i64 = SEED_QUINTIC.iter().sum();
        assert_ne!(at_one, 0);
    }

    #[test]
    fn real_slice_eliminant_is_divisible_by_quintic_mod_23() {
        let elim = real_slice_eliminant(23).unwrap();
        assert!(quintic_divides(&elim, 23), "eliminant {elim:?}");
    }

    #[test]
    fn orbit_rejects_a_wrong_seed() {
        let mut coords = vec![CycloNum::zero(); 10];
        coords[0] = CycloNum::one();
        let bogus = ProjPoint::new(coords).unwrap();
        assert!(generate_orbit(&bogus).is_err());
    }

    #[test]
    fn zero_vector_is_rejected() {
        assert!(matches!(
            ProjPoint::new(vec![CycloNum::zero(); 10]),
            Err(SingError::ZeroPoint)
        ));
        assert!(matches!(
            ProjPoint::new(vec![CycloNum::zero(); 3]),
            Err(SingError::BadLength(3))
        ));
    }

    #[test]
    fn serialization_roundtrip_preserves_the_set() {
        let set = &*ORBIT;
        let json = serde_json::to_string(set).unwrap();
        let back: SingularSet = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, set);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let arr = value.as_array().unwrap();
        assert_eq!(arr.len(), 55);
        assert_eq!(arr[13]["i"], 1);
        assert_eq!(arr[13]["j"], 2);
        assert_eq!(arr[13]["coords"].as_array().unwrap().len(), 10);
    }
}
