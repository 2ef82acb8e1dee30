//! Brute-force enumeration of all structures with a given rank profile over a
//! small finite ring, filtered by the tiered verifier, plus isomorphism
//! deduplication.
//!
//! A census query fixes the coefficient ring (which must be `Z/n`), the grading
//! group rank, the rank profile, and the tier to verify against. Every
//! assignment of structure constants in the resulting finite space is tested;
//! exactly those passing the tier's verifier are returned, sorted by their
//! serialized form so that runs are deterministic. The search space size is
//! computed up front and the query refused if it exceeds the bound — the search
//! is honest brute force and does not scale past desk-size profiles.
//!
//! The enumeration is staged to prune early: unit digits and multiplication
//! digits are enumerated first and the unit law checked; for each survivor the
//! pairing digits are enumerated and the unit-determinant, associativity, and
//! pairing-associativity checks applied; then the action digits against the
//! crossed tier; finally the crosscap and involution digits against the
//! extended tier. Outer slices run in parallel and are merged in order.
//!
//! [`dedup_isomorphism`] quotients a list of same-profile algebras by
//! grade-preserving basis changes (one invertible matrix per grade), realized
//! by exhaustively applying every basis-change tuple. The canonical
//! representative of each orbit is the one with the lexicographically least
//! serialized form.

use crate::algebra::AlgebraData;
use crate::axioms::{self, Tier};
use crate::codec;
use crate::group::{GroupElement, GroupError, MAX_RANK};
use crate::linalg::{Matrix, Vector};
use crate::ring::{RingDesc, Scalar};
use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

/// Default cap on brute-force spaces (raw candidate count or basis-change
/// tuple count).
pub const DEFAULT_SEARCH_BOUND: u64 = 100_000_000;

/// Renders a candidate count exactly when small, as a power of ten otherwise,
/// so refusal messages stay readable for astronomically large spaces.
fn approx(size: &BigUint) -> String {
    let digits = size.to_string();
    if digits.len() <= 20 {
        digits
    } else {
        format!("about 10^{}", digits.len() - 1)
    }
}

/// Errors from census queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    /// The coefficient ring is not finite.
    #[error("census requires a finite coefficient ring Z/n, got {0}")]
    InfiniteRing(RingDesc),
    /// The modulus is below 2.
    #[error("invalid modulus {0}: the census ring must be Z/n with n >= 2")]
    BadModulus(u64),
    /// The rank profile does not list one rank per grade.
    #[error("rank profile has {found} entries, expected {expected} (one per grade of a rank-{pi_rank} group)")]
    RankProfile {
        /// The grading-group rank of the query.
        pi_rank: u8,
        /// Number of entries required.
        expected: usize,
        /// Number of entries supplied.
        found: usize,
    },
    /// The search space (or basis-change space) exceeds the configured bound.
    #[error("search space holds {} candidates, over the bound {bound}; refusing", approx(size))]
    SearchSpaceTooLarge {
        /// Exact candidate count.
        size: BigUint,
        /// The configured bound.
        bound: u64,
    },
    /// A single grade's rank exceeds the determinant-routine cap, so its
    /// pairing could never be verified.
    #[error("rank {rank} at grade {grade} exceeds the per-grade cap {cap}")]
    RankCap {
        /// Label of the offending grade.
        grade: String,
        /// The requested rank.
        rank: usize,
        /// The cap ([`crate::linalg::MAX_DET_DIM`]).
        cap: usize,
    },
    /// The input list mixes rings or rank profiles.
    #[error("isomorphism deduplication requires all algebras to share one ring and rank profile")]
    MixedProfile,
    /// An underlying label operation failed.
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A census query: the finite ring, the grading-group rank, the rank profile
/// (indexed by grade bitmask), and the verification tier to filter by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusQuery {
    /// Coefficient ring; must be `Z/n`.
    pub ring: RingDesc,
    /// Rank of the grading group.
    pub pi_rank: u8,
    /// Free rank of each graded piece, indexed by grade bitmask.
    pub ranks: Vec<usize>,
    /// The tier whose verifier filters the enumeration.
    pub tier: Tier,
}

fn finite_modulus(ring: RingDesc) -> Result<u64, CensusError> {
    match ring {
        RingDesc::IntegersMod(n) if n >= 2 => Ok(n),
        RingDesc::IntegersMod(n) => Err(CensusError::BadModulus(n)),
        other => Err(CensusError::InfiniteRing(other)),
    }
}

/// The digit layout of one candidate: how many base-`n` digits each structure
/// segment occupies. Digit order within a candidate: unit coordinates, then
/// multiplication blocks in lexicographic grade-pair order (row-major within a
/// block), then pairing blocks by grade, then action blocks (actor outer,
/// grade inner), then crosscap coordinates by label, then involution blocks by
/// grade.
struct Layout {
    n: u64,
    ranks: Vec<usize>,
    unit_len: usize,
    mult_len: usize,
    eta_len: usize,
    phi_len: usize,
    tf_len: usize,
}

impl Layout {
    fn new(q: &CensusQuery, n: u64) -> Self {
        let grades: Vec<usize> = q.ranks.clone();
        let count = grades.len();
        let r = |bits: usize| grades[bits];
        let identity = 0usize;
        let mut mult_len = 0;
        let mut phi_len = 0;
        for a in 0..count {
            for b in 0..count {
                mult_len += r(a ^ b) * r(a) * r(b);
                phi_len += r(b) * r(b);
            }
        }
        let sq: usize = (0..count).map(|g| r(g) * r(g)).sum();
        Layout {
            n,
            ranks: grades.clone(),
            unit_len: r(identity),
            mult_len,
            eta_len: sq,
            phi_len,
            tf_len: count * r(identity) + sq,
        }
    }

    fn total_digits(&self) -> usize {
        self.unit_len + self.mult_len + self.eta_len + self.phi_len + self.tf_len
    }

    /// `n^len`; only called after the bound check, so the result fits `u64`.
    fn count(&self, len: usize) -> u64 {
        let mut out: u64 = 1;
        for _ in 0..len {
            out *= self.n;
        }
        out
    }

    /// A zeroed algebra with the query's shape.
    fn template(&self, q: &CensusQuery) -> AlgebraData {
        let ring = q.ring;
        let grades: Vec<GroupElement> = GroupElement::all(q.pi_rank).collect();
        let r = |g: GroupElement| self.ranks[g.bits() as usize];
        let e = grades[0];
        let mut mult = Vec::new();
        let mut phi = Vec::new();
        for &a in &grades {
            for &b in &grades {
                mult.push(Matrix::zeros(ring, r(a * b), r(a) * r(b)));
                phi.push(Matrix::zeros(ring, r(b), r(b)));
            }
        }
        AlgebraData {
            ring,
            pi_rank: q.pi_rank,
            ranks: self.ranks.clone(),
            mult,
            unit: Vector::zeros(ring, r(e)),
            eta: grades.iter().map(|&g| Matrix::zeros(ring, r(g), r(g))).collect(),
            phi,
            theta: grades.iter().map(|_| Vector::zeros(ring, r(e))).collect(),
            invol: grades.iter().map(|&g| Matrix::zeros(ring, r(g), r(g))).collect(),
        }
    }

    fn fill_unit_mult(&self, alg: &mut AlgebraData, idx: u64) {
        let mut digits = DigitStream { idx, n: self.n };
        for i in 0..alg.unit.len() {
            alg.unit.set(i, Scalar::Mod(digits.next()));
        }
        for block in &mut alg.mult {
            fill_matrix(block, &mut digits);
        }
    }

    fn fill_eta(&self, alg: &mut AlgebraData, idx: u64) {
        let mut digits = DigitStream { idx, n: self.n };
        for block in &mut alg.eta {
            fill_matrix(block, &mut digits);
        }
    }

    fn fill_phi(&self, alg: &mut AlgebraData, idx: u64) {
        let mut digits = DigitStream { idx, n: self.n };
        for block in &mut alg.phi {
            fill_matrix(block, &mut digits);
        }
    }

    fn fill_theta_invol(&self, alg: &mut AlgebraData, idx: u64) {
        let mut digits = DigitStream { idx, n: self.n };
        for vec in &mut alg.theta {
            for i in 0..vec.len() {
                vec.set(i, Scalar::Mod(digits.next()));
            }
        }
        for block in &mut alg.invol {
            fill_matrix(block, &mut digits);
        }
    }
}

struct DigitStream {
    idx: u64,
    n: u64,
}

impl DigitStream {
    fn next(&mut self) -> u64 {
        let d = self.idx % self.n;
        self.idx /= self.n;
        d
    }
}

fn fill_matrix(m: &mut Matrix, digits: &mut DigitStream) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            m.set(i, j, Scalar::Mod(digits.next()));
        }
    }
}

fn validate_query(q: &CensusQuery) -> Result<u64, CensusError> {
    let n = finite_modulus(q.ring)?;
    if q.pi_rank > MAX_RANK {
        return Err(CensusError::Group(GroupError::RankTooLarge(q.pi_rank)));
    }
    let expected = 1usize << q.pi_rank;
    if q.ranks.len() != expected {
        return Err(CensusError::RankProfile {
            pi_rank: q.pi_rank,
            expected,
            found: q.ranks.len(),
        });
    }
    for g in GroupElement::all(q.pi_rank) {
        let rank = q.ranks[g.bits() as usize];
        if rank > crate::linalg::MAX_DET_DIM {
            return Err(CensusError::RankCap {
                grade: g.to_string(),
                rank,
                cap: crate::linalg::MAX_DET_DIM,
            });
        }
    }
    Ok(n)
}

/// The exact number of raw candidates the query would test.
pub fn search_space_size(q: &CensusQuery) -> Result<BigUint, CensusError> {
    let n = validate_query(q)?;
    let digits = Layout::new(q, n).total_digits();
    Ok(BigUint::from(n).pow(digits as u32))
}

/// Enumerates every structure-constant assignment for the query's profile and
/// returns exactly those passing the tier's verifier, in lexicographic order
/// of their serialized form. Refuses with [`CensusError::SearchSpaceTooLarge`]
/// when the space exceeds `bound`.
pub fn enumerate(q: &CensusQuery, bound: u64) -> Result<Vec<AlgebraData>, CensusError> {
    let n = validate_query(q)?;
    let size = search_space_size(q)?;
    if size > BigUint::from(bound) {
        return Err(CensusError::SearchSpaceTooLarge { size, bound });
    }
    let lay = Layout::new(q, n);
    debug_assert_eq!(BigUint::from(n).pow(lay.total_digits() as u32), size);

    let um_count = lay.count(lay.unit_len + lay.mult_len);
    let eta_count = lay.count(lay.eta_len);
    let phi_count = lay.count(lay.phi_len);
    let tf_count = lay.count(lay.tf_len);

    let slices: Vec<Vec<AlgebraData>> = (0..um_count)
        .into_par_iter()
        .map(|um| {
            let mut found = Vec::new();
            let mut alg = lay.template(q);
            lay.fill_unit_mult(&mut alg, um);
            if !passes(&alg, axioms::check_unit_law) {
                return found;
            }
            for e in 0..eta_count {
                lay.fill_eta(&mut alg, e);
                if !passes(&alg, axioms::check_eta_nondegenerate)
                    || !passes(&alg, axioms::check_associativity)
                    || !passes(&alg, axioms::check_eta_associative)
                {
                    continue;
                }
                for p in 0..phi_count {
                    lay.fill_phi(&mut alg, p);
                    if q.tier >= Tier::Crossed && !passes(&alg, axioms::check_crossed) {
                        continue;
                    }
                    for tf in 0..tf_count {
                        lay.fill_theta_invol(&mut alg, tf);
                        if q.tier >= Tier::Extended && !passes(&alg, axioms::check_extended) {
                            continue;
                        }
                        found.push(alg.clone());
                    }
                }
            }
            found
        })
        .collect();

    let mut flat: Vec<AlgebraData> = slices.into_iter().flatten().collect();
    flat.sort_by_cached_key(codec::serialize_algebra);
    Ok(flat)
}

fn passes(alg: &AlgebraData, check: fn(&AlgebraData, &mut Vec<axioms::Violation>)) -> bool {
    let mut v = Vec::new();
    check(alg, &mut v);
    v.is_empty()
}

/// All invertible `r × r` matrices over `Z/n`, by brute force.
fn invertible_matrices(ring: RingDesc, n: u64, r: usize) -> Vec<Matrix> {
    let digits = r * r;
    let mut count: u64 = 1;
    for _ in 0..digits {
        count *= n;
    }
    let mut out = Vec::new();
    for idx in 0..count {
        let mut stream = DigitStream { idx, n };
        let mut m = Matrix::zeros(ring, r, r);
        fill_matrix(&mut m, &mut stream);
        if m.det().map(|d| ring.is_unit(&d)).unwrap_or(false) {
            out.push(m);
        }
    }
    out
}

/// Applies a grade-preserving basis change (one invertible matrix per grade)
/// to all structure data. Verification status is preserved.
fn transform(alg: &AlgebraData, change: &[Matrix]) -> AlgebraData {
    let grades: Vec<GroupElement> = alg.grades().collect();
    let p = |g: GroupElement| &change[g.bits() as usize];
    let p_inv: Vec<Matrix> = grades
        .iter()
        .map(|&g| p(g).inverse().expect("unit determinant"))
        .collect();
    let pi = |g: GroupElement| &p_inv[g.bits() as usize];
    let e = alg.identity_grade();

    let mut mult = Vec::new();
    let mut phi = Vec::new();
    for &a in &grades {
        for &b in &grades {
            let m = alg.mult_block(a, b);
            let twist = pi(a).tensor(pi(b)).expect("same ring");
            mult.push(
                p(a * b)
                    .matmul(m)
                    .and_then(|x| x.matmul(&twist))
                    .expect("conforming shapes"),
            );
            let f = alg.phi_block(a, b);
            phi.push(
                p(b).matmul(f)
                    .and_then(|x| x.matmul(pi(b)))
                    .expect("conforming shapes"),
            );
        }
    }
    let eta = grades
        .iter()
        .map(|&g| {
            pi(g).transpose()
                .matmul(alg.eta_block(g))
                .and_then(|x| x.matmul(pi(g)))
                .expect("conforming shapes")
        })
        .collect();
    let invol = grades
        .iter()
        .map(|&g| {
            p(g).matmul(alg.invol_block(g))
                .and_then(|x| x.matmul(pi(g)))
                .expect("conforming shapes")
        })
        .collect();
    let theta = grades
        .iter()
        .map(|&g| p(e).apply(alg.theta_vec(g)).expect("conforming shapes"))
        .collect();
    let unit = p(e).apply(alg.unit_vec()).expect("conforming shapes");

    AlgebraData {
        ring: alg.ring(),
        pi_rank: alg.pi_rank(),
        ranks: grades.iter().map(|&g| alg.rank_of(g)).collect(),
        mult,
        unit,
        eta,
        phi,
        theta,
        invol,
    }
}

/// Quotients a list of same-profile algebras by grade-preserving basis changes.
/// Each orbit is represented by its lexicographically least serialized member;
/// the output is sorted by that form. Refuses when the basis-change space
/// exceeds `bound`.
pub fn dedup_isomorphism(
    list: &[AlgebraData],
    bound: u64,
) -> Result<Vec<AlgebraData>, CensusError> {
    let Some(first) = list.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring();
    let n = finite_modulus(ring)?;
    let grades: Vec<GroupElement> = first.grades().collect();
    let profile: Vec<usize> = grades.iter().map(|&g| first.rank_of(g)).collect();
    for alg in list {
        let same = alg.ring() == ring
            && alg.pi_rank() == first.pi_rank()
            && grades.iter().all(|&g| alg.rank_of(g) == first.rank_of(g));
        if !same {
            return Err(CensusError::MixedProfile);
        }
    }

    let mut space = BigUint::one();
    for &r in &profile {
        space *= BigUint::from(n).pow((r * r) as u32);
    }
    if space > BigUint::from(bound) {
        return Err(CensusError::SearchSpaceTooLarge { size: space, bound });
    }

    let per_grade: Vec<Vec<Matrix>> = profile
        .iter()
        .map(|&r| invertible_matrices(ring, n, r))
        .collect();

    let mut classes: BTreeMap<String, AlgebraData> = BTreeMap::new();
    for alg in list {
        let mut best: Option<(String, AlgebraData)> = None;
        let mut indices = vec![0usize; per_grade.len()];
        loop {
            let change: Vec<Matrix> = indices
                .iter()
                .zip(&per_grade)
                .map(|(&i, ms)| ms[i].clone())
                .collect();
            let image = transform(alg, &change);
            let key = codec::serialize_algebra(&image);
            if best.as_ref().map(|(k, _)| key < *k).unwrap_or(true) {
                best = Some((key, image));
            }
            // Odometer over the basis-change tuples.
            let mut pos = 0;
            loop {
                if pos == indices.len() {
                    break;
                }
                indices[pos] += 1;
                if indices[pos] < per_grade[pos].len() {
                    break;
                }
                indices[pos] = 0;
                pos += 1;
            }
            if pos == indices.len() {
                break;
            }
        }
        let (key, canon) = best.expect("at least the identity change");
        classes.entry(key).or_insert(canon);
    }
    Ok(classes.into_values().collect())
}
