//! The structure-constant data type for crossed graded Frobenius algebras with
//! crosscap structure, and the operations derived from it.
//!
//! An [`AlgebraData`] records, over a fixed coefficient ring and grading group
//! `π = (ℤ/2)^k`:
//!
//! * the rank of each graded piece `L_α` (each piece is free with a fixed basis),
//! * multiplication blocks `L_α ⊗ L_β → L_αβ`,
//! * the unit vector `1_L ∈ L_1` (where `1` denotes the identity grade),
//! * Gram matrices `G_α` of the pairing `η` on `L_α ⊗ L_α` — because every grade
//!   squares to the identity, the pairing is supported on equal-grade pairs,
//! * action blocks `φ_β : L_α → L_α`, one per (actor, grade) pair,
//! * crosscap vectors `θ_α ∈ L_1`, one per grade label, and
//! * involution blocks `Φ : L_α → L_α` (again grade-preserving by 2-torsion).
//!
//! Whether this data satisfies the axioms is a separate question answered by
//! [`crate::axioms`]; this module only enforces *shape* validity and implements
//! the operations every consumer shares. The derived operations are:
//!
//! * [`AlgebraData::comult_matrix`] — the comultiplication `Δ_{α,β} : L_{αβ} → L_α ⊗ L_β`
//!   dual to multiplication under `η`, computed by exact linear solve,
//! * [`AlgebraData::copair`] — the copairing element of `L_α ⊗ L_α` with inverse-Gram
//!   coordinates,
//! * [`AlgebraData::q_element`] — the distinguished element `q ∈ L_1` that measures the
//!   failure of three crosscaps to reduce to one (it multiplies the triple crosscap
//!   relation), computed from a dual-basis expansion of a holonomy action,
//! * [`AlgebraData::counit`] — pairing against the unit.
//!
//! Tensor coordinates follow the crate-wide convention: in `L_α ⊗ L_β` the left
//! factor varies slowest, so basis vector `e_i ⊗ e_j` has index `i·rank(L_β) + j`.

use std::fmt;

use thiserror::Error;

use crate::group::{GroupElement, GroupError, MAX_RANK};
use crate::linalg::{LinalgError, Matrix, Vector};
use crate::ring::{RingDesc, RingError, Scalar};

/// Errors from constructing or operating on algebra data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A structure component has the wrong shape for the declared ranks.
    #[error("shape error: {0}")]
    Shape(String),
    /// An element's grade does not fit the requested operation.
    #[error("grade error: {0}")]
    Grade(String),
    /// A constructor parameter fails its defining constraint.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// An underlying ring operation failed.
    #[error(transparent)]
    Ring(#[from] RingError),
    /// An underlying linear-algebra operation failed.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// An underlying group-label operation failed.
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A homogeneous element: a grade label together with coordinates in the fixed
/// basis of that graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    /// The grade of the piece this element lives in.
    pub grade: GroupElement,
    /// Coordinates in the piece's fixed basis.
    pub coords: Vector,
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.coords, self.grade)
    }
}

/// Structure constants for a crossed `(ℤ/2)^k`-graded Frobenius algebra with
/// crosscap elements and involution. See the module docs for the component list.
///
/// Construct instances through [`crate::codec::parse_algebra`], the built-in
/// families ([`rank_one_cocycle_algebra`], [`ground_ring_algebra`]), or
/// [`crate::census`]; all of them guarantee [`AlgebraData::validate`] passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    pub(crate) ring: RingDesc,
    pub(crate) pi_rank: u8,
    /// Rank of `L_α`, indexed by the grade's bitmask.
    pub(crate) ranks: Vec<usize>,
    /// Multiplication blocks `L_α ⊗ L_β → L_αβ`, indexed by `(α, β)` (see `mult_block`);
    /// each is `rank(L_αβ) × (rank(L_α)·rank(L_β))`.
    pub(crate) mult: Vec<Matrix>,
    /// Coordinates of `1_L` in `L_1`.
    pub(crate) unit: Vector,
    /// Gram matrices `G_α` with `η(v, w) = vᵀ G_α w` for `v, w ∈ L_α`.
    pub(crate) eta: Vec<Matrix>,
    /// Action blocks: `phi[(β, α)]` is the matrix of `φ_β` on `L_α`.
    pub(crate) phi: Vec<Matrix>,
    /// Crosscap vectors `θ_α ∈ L_1`, indexed by the label `α`.
    pub(crate) theta: Vec<Vector>,
    /// Involution blocks: the matrix of `Φ` on `L_α`.
    pub(crate) invol: Vec<Matrix>,
}

impl AlgebraData {
    /// The coefficient ring.
    pub fn ring(&self) -> RingDesc {
        self.ring
    }

    /// The rank `k` of the grading group `(ℤ/2)^k`.
    pub fn pi_rank(&self) -> u8 {
        self.pi_rank
    }

    /// The identity grade.
    pub fn identity_grade(&self) -> GroupElement {
        GroupElement::identity(self.pi_rank).expect("validated rank")
    }

    /// All grades in increasing bitmask order.
    pub fn grades(&self) -> impl Iterator<Item = GroupElement> {
        GroupElement::all(self.pi_rank)
    }

    /// The rank of the graded piece `L_g`.
    pub fn rank_of(&self, g: GroupElement) -> usize {
        self.ranks[self.gi(g)]
    }

    /// The multiplication block `L_a ⊗ L_b → L_ab`.
    pub fn mult_block(&self, a: GroupElement, b: GroupElement) -> &Matrix {
        &self.mult[self.pair_idx(a, b)]
    }

    /// The Gram matrix of `η` on `L_g`.
    pub fn eta_block(&self, g: GroupElement) -> &Matrix {
        &self.eta[self.gi(g)]
    }

    /// The matrix of `φ_actor` on `L_on`.
    pub fn phi_block(&self, actor: GroupElement, on: GroupElement) -> &Matrix {
        &self.phi[self.pair_idx(actor, on)]
    }

    /// The matrix of the involution `Φ` on `L_g`.
    pub fn invol_block(&self, g: GroupElement) -> &Matrix {
        &self.invol[self.gi(g)]
    }

    /// The coordinates of the crosscap element `θ_g` (a vector in `L_1`).
    pub fn theta_vec(&self, g: GroupElement) -> &Vector {
        &self.theta[self.gi(g)]
    }

    /// The coordinates of `1_L`.
    pub fn unit_vec(&self) -> &Vector {
        &self.unit
    }

    fn gi(&self, g: GroupElement) -> usize {
        debug_assert_eq!(g.rank(), self.pi_rank);
        g.bits() as usize
    }

    fn pair_idx(&self, a: GroupElement, b: GroupElement) -> usize {
        debug_assert_eq!(a.rank(), self.pi_rank);
        debug_assert_eq!(b.rank(), self.pi_rank);
        ((a.bits() << self.pi_rank) | b.bits()) as usize
    }

    /// Checks that every component has the shape and ring demanded by `ranks`.
    ///
    /// This is about well-formedness only; the axioms are checked by
    /// [`crate::axioms::verify_frobenius`] and friends.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        if self.pi_rank > MAX_RANK {
            return Err(GroupError::RankTooLarge(self.pi_rank).into());
        }
        let n_grades = 1usize << self.pi_rank;
        if self.ranks.len() != n_grades {
            return Err(AlgebraError::Shape(format!(
                "expected {n_grades} ranks for group rank {}, found {}",
                self.pi_rank,
                self.ranks.len()
            )));
        }
        let expect_lens = [
            ("mult", self.mult.len(), n_grades * n_grades),
            ("eta", self.eta.len(), n_grades),
            ("phi", self.phi.len(), n_grades * n_grades),
            ("theta", self.theta.len(), n_grades),
            ("Phi", self.invol.len(), n_grades),
        ];
        for (name, found, want) in expect_lens {
            if found != want {
                return Err(AlgebraError::Shape(format!(
                    "component {name}: expected {want} blocks, found {found}"
                )));
            }
        }
        let r1 = self.ranks[0];
        if self.unit.ring() != self.ring || self.unit.len() != r1 {
            return Err(AlgebraError::Shape(format!(
                "unit: expected a length-{r1} vector over {}, found length {} over {}",
                self.ring,
                self.unit.len(),
                self.unit.ring()
            )));
        }
        for a in self.grades() {
            let ra = self.rank_of(a);
            for b in self.grades() {
                let rb = self.rank_of(b);
                let rab = self.rank_of(a * b);
                let m = self.mult_block(a, b);
                if m.ring() != self.ring || m.rows() != rab || m.cols() != ra * rb {
                    return Err(AlgebraError::Shape(format!(
                        "mult block ({a}, {b}): expected {rab}x{} over {}, found {}x{} over {}",
                        ra * rb,
                        self.ring,
                        m.rows(),
                        m.cols(),
                        m.ring()
                    )));
                }
                let p = self.phi_block(a, b);
                if p.ring() != self.ring || p.rows() != rb || p.cols() != rb {
                    return Err(AlgebraError::Shape(format!(
                        "phi block for actor {a} on grade {b}: expected {rb}x{rb} over {}, \
                         found {}x{} over {}",
                        self.ring,
                        p.rows(),
                        p.cols(),
                        p.ring()
                    )));
                }
            }
            let g = self.eta_block(a);
            if g.ring() != self.ring || g.rows() != ra || g.cols() != ra {
                return Err(AlgebraError::Shape(format!(
                    "eta block for grade {a}: expected {ra}x{ra} over {}, found {}x{} over {}",
                    self.ring,
                    g.rows(),
                    g.cols(),
                    g.ring()
                )));
            }
            let f = self.invol_block(a);
            if f.ring() != self.ring || f.rows() != ra || f.cols() != ra {
                return Err(AlgebraError::Shape(format!(
                    "involution block for grade {a}: the involution must preserve each grade, \
                     so its block on this piece must be {ra}x{ra} over {}; found {}x{} over {}",
                    self.ring,
                    f.rows(),
                    f.cols(),
                    f.ring()
                )));
            }
            let t = self.theta_vec(a);
            if t.ring() != self.ring || t.len() != r1 {
                return Err(AlgebraError::Shape(format!(
                    "theta vector for label {a}: crosscap elements live in the identity-grade \
                     piece, so expected a length-{r1} vector over {}; found length {} over {}",
                    self.ring,
                    t.len(),
                    t.ring()
                )));
            }
        }
        Ok(())
    }

    /// The zero element of `L_g`.
    pub fn zero_element(&self, g: GroupElement) -> GradedElement {
        GradedElement {
            grade: g,
            coords: Vector::zeros(self.ring, self.rank_of(g)),
        }
    }

    /// Basis element `e_i` of `L_g`.
    pub fn basis_element(&self, g: GroupElement, i: usize) -> GradedElement {
        let mut coords = Vector::zeros(self.ring, self.rank_of(g));
        coords.set(i, self.ring.one());
        GradedElement { grade: g, coords }
    }

    /// The unit `1_L` as a graded element.
    pub fn unit_element(&self) -> GradedElement {
        GradedElement {
            grade: self.identity_grade(),
            coords: self.unit.clone(),
        }
    }

    /// The crosscap element `θ_g` as a graded element (of identity grade).
    pub fn theta_element(&self, g: GroupElement) -> GradedElement {
        GradedElement {
            grade: self.identity_grade(),
            coords: self.theta_vec(g).clone(),
        }
    }

    fn expect_grade_rank(&self, v: &GradedElement) -> Result<(), AlgebraError> {
        if v.grade.rank() != self.pi_rank {
            return Err(AlgebraError::Grade(format!(
                "element grade {} has group rank {}, algebra has rank {}",
                v.grade,
                v.grade.rank(),
                self.pi_rank
            )));
        }
        if v.coords.ring() != self.ring || v.coords.len() != self.rank_of(v.grade) {
            return Err(AlgebraError::Shape(format!(
                "element of grade {} must have {} coordinates over {}, found {} over {}",
                v.grade,
                self.rank_of(v.grade),
                self.ring,
                v.coords.len(),
                v.coords.ring()
            )));
        }
        Ok(())
    }

    /// The product `v·w`, of grade `v.grade · w.grade`.
    pub fn multiply(
        &self,
        v: &GradedElement,
        w: &GradedElement,
    ) -> Result<GradedElement, AlgebraError> {
        self.expect_grade_rank(v)?;
        self.expect_grade_rank(w)?;
        let grade = v.grade * w.grade;
        let coords = self
            .mult_block(v.grade, w.grade)
            .apply(&v.coords.tensor(&w.coords)?)?;
        Ok(GradedElement { grade, coords })
    }

    /// The pairing `η(v, w)`; both elements must share a grade.
    pub fn pair(&self, v: &GradedElement, w: &GradedElement) -> Result<Scalar, AlgebraError> {
        self.expect_grade_rank(v)?;
        self.expect_grade_rank(w)?;
        if v.grade != w.grade {
            return Err(AlgebraError::Grade(format!(
                "pairing is supported on equal grades; got {} and {}",
                v.grade, w.grade
            )));
        }
        Ok(v.coords.dot(&self.eta_block(v.grade).apply(&w.coords)?)?)
    }

    /// The counit `ε(v) = η(v, 1_L)`, defined on the identity grade.
    pub fn counit(&self, v: &GradedElement) -> Result<Scalar, AlgebraError> {
        self.expect_grade_rank(v)?;
        if !v.grade.is_identity() {
            return Err(AlgebraError::Grade(format!(
                "counit is defined on the identity grade, got {}",
                v.grade
            )));
        }
        self.pair(v, &self.unit_element())
    }

    /// Applies the action `φ_actor` to `v` (grade unchanged).
    pub fn apply_phi(
        &self,
        actor: GroupElement,
        v: &GradedElement,
    ) -> Result<GradedElement, AlgebraError> {
        self.expect_grade_rank(v)?;
        Ok(GradedElement {
            grade: v.grade,
            coords: self.phi_block(actor, v.grade).apply(&v.coords)?,
        })
    }

    /// Applies the involution `Φ` to `v` (grade unchanged).
    pub fn apply_invol(&self, v: &GradedElement) -> Result<GradedElement, AlgebraError> {
        self.expect_grade_rank(v)?;
        Ok(GradedElement {
            grade: v.grade,
            coords: self.invol_block(v.grade).apply(&v.coords)?,
        })
    }

    /// The matrix of left multiplication by `c` as a map `L_on → L_{c.grade·on}`.
    pub fn left_mult_matrix(
        &self,
        c: &GradedElement,
        on: GroupElement,
    ) -> Result<Matrix, AlgebraError> {
        self.expect_grade_rank(c)?;
        let out_rank = self.rank_of(c.grade * on);
        let mut m = Matrix::zeros(self.ring, out_rank, self.rank_of(on));
        for j in 0..self.rank_of(on) {
            let col = self.multiply(c, &self.basis_element(on, j))?;
            for i in 0..out_rank {
                m.set(i, j, col.coords.get(i).clone());
            }
        }
        Ok(m)
    }

    /// The matrix of the comultiplication `Δ_{a,b} : L_{ab} → L_a ⊗ L_b`, the map
    /// dual to multiplication under `η`. Its defining property is
    ///
    /// ```text
    /// (id_L_a ⊗ η) ∘ (Δ_{a,b}(v) ⊗ w)  =  v·w      for all v ∈ L_ab, w ∈ L_b,
    /// ```
    ///
    /// which in coordinates says the coefficient matrix `C_s` of `Δ(e_s)` solves
    /// `C_s · G_b = R_s`, where `R_s[i][m]` is coordinate `i` (in `L_a`) of
    /// `e_s · e_m`. Requires `G_b` to be invertible over the ring.
    ///
    /// Output shape: `(rank(L_a)·rank(L_b)) × rank(L_ab)`, rows in tensor order
    /// (left factor slowest).
    pub fn comult_matrix(&self, a: GroupElement, b: GroupElement) -> Result<Matrix, AlgebraError> {
        let ab = a * b;
        let (ra, rb, rab) = (self.rank_of(a), self.rank_of(b), self.rank_of(ab));
        let g_b = self.eta_block(b);
        let mult_ab_b = self.mult_block(ab, b);
        let mut out = Matrix::zeros(self.ring, ra * rb, rab);
        for s in 0..rab {
            // R_s[i][m] = coord i of e_s·e_m ∈ L_a (note ab·b = a since grades square
            // to the identity).
            let mut r_s = Matrix::zeros(self.ring, ra, rb);
            for i in 0..ra {
                for m in 0..rb {
                    r_s.set(i, m, mult_ab_b.get(i, s * rb + m).clone());
                }
            }
            // Solve C_s·G = R_s as Gᵀ·C_sᵀ = R_sᵀ.
            let c_s = g_b
                .transpose()
                .solve_right(&r_s.transpose())?
                .transpose();
            for i in 0..ra {
                for l in 0..rb {
                    out.set(i * rb + l, s, c_s.get(i, l).clone());
                }
            }
        }
        Ok(out)
    }

    /// Applies `Δ_{a,b}` to `v ∈ L_ab`, returning tensor coordinates in
    /// `L_a ⊗ L_b` (left factor slowest).
    pub fn comultiply(
        &self,
        a: GroupElement,
        b: GroupElement,
        v: &GradedElement,
    ) -> Result<Vector, AlgebraError> {
        self.expect_grade_rank(v)?;
        if v.grade != a * b {
            return Err(AlgebraError::Grade(format!(
                "comultiplication Δ_({a}, {b}) expects an element of grade {}, got {}",
                a * b,
                v.grade
            )));
        }
        Ok(self.comult_matrix(a, b)?.apply(&v.coords)?)
    }

    /// The copairing element of `L_a ⊗ L_a`: with `K = G_a⁻¹`, the tensor
    /// coordinate of `e_i ⊗ e_j` is `K[j][i]`. Requires `G_a` invertible.
    pub fn copair(&self, a: GroupElement) -> Result<Vector, AlgebraError> {
        let k = self.eta_block(a).inverse()?;
        let ra = self.rank_of(a);
        let mut out = Vector::zeros(self.ring, ra * ra);
        for i in 0..ra {
            for j in 0..ra {
                out.set(i * ra + j, k.get(j, i).clone());
            }
        }
        Ok(out)
    }

    /// The element `q = q(a, b, c) ∈ L_1` that scales the triple-crosscap
    /// reduction: writing `δ = ab` and expanding the action of `φ_bc` on `L_δ`
    /// against dual bases, `q = Σ_i e_i·b_i` where the columns `b_i` of `B` solve
    /// `Bᵀ·G_δ = M` and `M` is the matrix of `φ_bc` on `L_δ`.
    ///
    /// The result in principle depends on the triple; the extended-tier verifier
    /// checks that it does not for algebras satisfying the axioms.
    pub fn q_element(
        &self,
        a: GroupElement,
        b: GroupElement,
        c: GroupElement,
    ) -> Result<GradedElement, AlgebraError> {
        let delta = a * b;
        let m = self.phi_block(b * c, delta);
        let g = self.eta_block(delta);
        // Bᵀ·G = M  ⇔  Gᵀ·B = Mᵀ.
        let b_mat = g.transpose().solve_right(&m.transpose())?;
        let mut acc = self.zero_element(self.identity_grade());
        for i in 0..self.rank_of(delta) {
            let b_i = GradedElement {
                grade: delta,
                coords: b_mat.col(i),
            };
            let term = self.multiply(&self.basis_element(delta, i), &b_i)?;
            acc = GradedElement {
                grade: acc.grade,
                coords: acc.coords.add(&term.coords)?,
            };
        }
        Ok(acc)
    }
}

/// The one-parameter family of rank-one examples over any ring: every graded
/// piece of `L = ⊕_{α ∈ ℤ/2} L_α` is free of rank one on a generator `l_α`, with
///
/// * `l_1·l_1 = l_1`, `l_1·l_g = l_g·l_1 = l_g`, `l_g·l_g = t·l_1` for a unit `t`,
/// * `η(l_1, l_1) = 1`, `η(l_g, l_g) = t`,
/// * trivial action `φ`,
/// * `θ_1 = θ_g = a·l_1` for a square root of unity `a` (i.e. `a² = 1`), and
/// * identity involution.
///
/// Rejects non-unit `t` and parameters with `a² ≠ 1`.
pub fn rank_one_cocycle_algebra(
    ring: RingDesc,
    t: &Scalar,
    a: &Scalar,
) -> Result<AlgebraData, AlgebraError> {
    if !ring.is_unit(t) {
        return Err(AlgebraError::InvalidParameter(format!(
            "t = {} must be a unit in {ring}",
            ring.format_scalar(t)
        )));
    }
    if ring.mul(a, a) != ring.one() {
        return Err(AlgebraError::InvalidParameter(format!(
            "a = {} must square to 1 in {ring}",
            ring.format_scalar(a)
        )));
    }
    let one = || Matrix::identity(ring, 1);
    let scalar_block = |s: &Scalar| Matrix::new(ring, 1, 1, vec![s.clone()]);
    let alg = AlgebraData {
        ring,
        pi_rank: 1,
        ranks: vec![1, 1],
        // Blocks in (α, β) order: (1,1), (1,g), (g,1), (g,g).
        mult: vec![one(), one(), one(), scalar_block(t)],
        unit: Vector::new(ring, vec![ring.one()]),
        eta: vec![one(), scalar_block(t)],
        phi: vec![one(), one(), one(), one()],
        theta: vec![
            Vector::new(ring, vec![a.clone()]),
            Vector::new(ring, vec![a.clone()]),
        ],
        invol: vec![one(), one()],
    };
    alg.validate()?;
    Ok(alg)
}

/// The ground ring itself, seen as the trivial example: `π` trivial, one graded
/// piece of rank one, all structure maps identities, `θ = 1_L`.
pub fn ground_ring_algebra(ring: RingDesc) -> AlgebraData {
    let one = || Matrix::identity(ring, 1);
    let alg = AlgebraData {
        ring,
        pi_rank: 0,
        ranks: vec![1],
        mult: vec![one()],
        unit: Vector::new(ring, vec![ring.one()]),
        eta: vec![one()],
        phi: vec![one()],
        theta: vec![Vector::new(ring, vec![ring.one()])],
        invol: vec![one()],
    };
    alg.validate().expect("the trivial example is well-formed");
    alg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z5() -> RingDesc {
        RingDesc::IntegersMod(5)
    }

    /// The standing example: t = 2, a = 4 ≡ -1 over ℤ/5.
    fn sample() -> AlgebraData {
        rank_one_cocycle_algebra(z5(), &Scalar::Mod(2), &Scalar::Mod(4)).unwrap()
    }

    fn g0() -> GroupElement {
        GroupElement::identity(1).unwrap()
    }

    fn g1() -> GroupElement {
        GroupElement::parse("1", 1).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        // t must be a unit.
        assert!(matches!(
            rank_one_cocycle_algebra(RingDesc::Integers, &Scalar::Int(2.into()), &Scalar::Int(1.into())),
            Err(AlgebraError::InvalidParameter(_))
        ));
        // a must square to 1.
        assert!(matches!(
            rank_one_cocycle_algebra(z5(), &Scalar::Mod(2), &Scalar::Mod(2)),
            Err(AlgebraError::InvalidParameter(_))
        ));
        // a = 2 is fine mod 3 (4 ≡ 1), so the constraint is ring-sensitive.
        assert!(rank_one_cocycle_algebra(
            RingDesc::IntegersMod(3),
            &Scalar::Mod(1),
            &Scalar::Mod(2)
        )
        .is_ok());
    }

    #[test]
    fn multiplication_table_of_the_sample() {
        let alg = sample();
        let l0 = alg.basis_element(g0(), 0);
        let l1 = alg.basis_element(g1(), 0);
        assert_eq!(alg.multiply(&l0, &l0).unwrap(), l0);
        assert_eq!(alg.multiply(&l0, &l1).unwrap(), l1);
        assert_eq!(alg.multiply(&l1, &l0).unwrap(), l1);
        // l_g·l_g = t·l_1 with t = 2.
        let sq = alg.multiply(&l1, &l1).unwrap();
        assert_eq!(sq.grade, g0());
        assert_eq!(sq.coords, Vector::from_i64(z5(), &[2]));
    }

    #[test]
    fn unit_acts_as_identity() {
        let alg = sample();
        let one = alg.unit_element();
        for g in alg.grades() {
            let e = alg.basis_element(g, 0);
            assert_eq!(alg.multiply(&one, &e).unwrap(), e);
            assert_eq!(alg.multiply(&e, &one).unwrap(), e);
        }
    }

    #[test]
    fn pairing_and_counit_values() {
        let alg = sample();
        let l0 = alg.basis_element(g0(), 0);
        let l1 = alg.basis_element(g1(), 0);
        assert_eq!(alg.pair(&l0, &l0).unwrap(), Scalar::Mod(1));
        assert_eq!(alg.pair(&l1, &l1).unwrap(), Scalar::Mod(2));
        assert_eq!(alg.counit(&l0).unwrap(), Scalar::Mod(1));
        // ε(θ) = a·ε(1) = 4.
        assert_eq!(alg.counit(&alg.theta_element(g0())).unwrap(), Scalar::Mod(4));
        // Counit rejects non-identity grades; pairing rejects mixed grades.
        assert!(matches!(alg.counit(&l1), Err(AlgebraError::Grade(_))));
        assert!(matches!(alg.pair(&l0, &l1), Err(AlgebraError::Grade(_))));
    }

    #[test]
    fn comultiplication_coefficients_of_the_sample() {
        // Δ_{a,b}(l_ab) = κ_{ab,b}·(G_b)⁻¹ · (l_a ⊗ l_b) in rank one; for the
        // sample this gives coefficients 1, 1, 1, 3 on the four grade pairs
        // (the last is 1·inv(2) = 3 mod 5).
        let alg = sample();
        let cases = [
            (g0(), g0(), 1i64),
            (g0(), g1(), 1),
            (g1(), g0(), 1),
            (g1(), g1(), 3),
        ];
        for (a, b, coeff) in cases {
            let v = alg.basis_element(a * b, 0);
            let t = alg.comultiply(a, b, &v).unwrap();
            assert_eq!(t, Vector::from_i64(z5(), &[coeff]), "Δ_({a}, {b})");
        }
        // Wrong input grade is a grade error.
        let bad = alg.basis_element(g1(), 0);
        assert!(matches!(
            alg.comultiply(g0(), g0(), &bad),
            Err(AlgebraError::Grade(_))
        ));
    }

    #[test]
    fn comultiplication_satisfies_its_defining_identity() {
        // (id ⊗ η)(Δ(v) ⊗ w) = v·w, checked on all grade pairs of the sample.
        let alg = sample();
        for a in alg.grades() {
            for b in alg.grades() {
                let v = alg.basis_element(a * b, 0);
                let t = alg.comultiply(a, b, &v).unwrap();
                for m in 0..alg.rank_of(b) {
                    let w = alg.basis_element(b, m);
                    let prod = alg.multiply(&v, &w).unwrap();
                    for i in 0..alg.rank_of(a) {
                        // Σ_l t[i·rb + l]·η(e_l, w)
                        let mut acc = z5().zero();
                        for l in 0..alg.rank_of(b) {
                            let pairing =
                                alg.pair(&alg.basis_element(b, l), &w).unwrap();
                            acc = z5().add(
                                &acc,
                                &z5().mul(t.get(i * alg.rank_of(b) + l), &pairing),
                            );
                        }
                        assert_eq!(&acc, prod.coords.get(i));
                    }
                }
            }
        }
    }

    #[test]
    fn copairing_is_inverse_gram() {
        let alg = sample();
        assert_eq!(alg.copair(g0()).unwrap(), Vector::from_i64(z5(), &[1]));
        // G_g = [2], so the copairing coordinate is inv(2) = 3.
        assert_eq!(alg.copair(g1()).unwrap(), Vector::from_i64(z5(), &[3]));
    }

    #[test]
    fn q_element_of_the_sample_is_the_unit() {
        let alg = sample();
        for a in alg.grades() {
            for b in alg.grades() {
                for c in alg.grades() {
                    let q = alg.q_element(a, b, c).unwrap();
                    assert_eq!(q, alg.unit_element(), "q({a}, {b}, {c})");
                }
            }
        }
    }

    #[test]
    fn action_and_involution_apply() {
        let alg = sample();
        let l1 = alg.basis_element(g1(), 0);
        assert_eq!(alg.apply_phi(g1(), &l1).unwrap(), l1);
        assert_eq!(alg.apply_invol(&l1).unwrap(), l1);
    }

    #[test]
    fn left_mult_matrix_matches_multiply() {
        let alg = sample();
        let th = alg.theta_element(g0());
        let m = alg.left_mult_matrix(&th, g1()).unwrap();
        assert_eq!(m, Matrix::from_i64(z5(), &[&[4]]));
        let l1 = alg.basis_element(g1(), 0);
        assert_eq!(
            m.apply(&l1.coords).unwrap(),
            alg.multiply(&th, &l1).unwrap().coords
        );
    }

    #[test]
    fn ground_ring_multiplies_like_the_ring() {
        let alg = ground_ring_algebra(RingDesc::Rationals);
        let e = alg.identity_grade();
        let two = GradedElement {
            grade: e,
            coords: Vector::from_i64(RingDesc::Rationals, &[2]),
        };
        let three = GradedElement {
            grade: e,
            coords: Vector::from_i64(RingDesc::Rationals, &[3]),
        };
        assert_eq!(
            alg.multiply(&two, &three).unwrap().coords,
            Vector::from_i64(RingDesc::Rationals, &[6])
        );
        assert_eq!(alg.counit(&two).unwrap(), RingDesc::Rationals.from_i64(2));
    }

    #[test]
    fn integer_instance_with_negative_parameters() {
        let z = RingDesc::Integers;
        let alg =
            rank_one_cocycle_algebra(z, &Scalar::Int((-1).into()), &Scalar::Int((-1).into()))
                .unwrap();
        let l1 = alg.basis_element(GroupElement::parse("1", 1).unwrap(), 0);
        let sq = alg.multiply(&l1, &l1).unwrap();
        assert_eq!(sq.coords, Vector::from_i64(z, &[-1]));
        // Copairing over the non-field ring Z still works because t = -1 is a unit.
        assert_eq!(
            alg.copair(GroupElement::parse("1", 1).unwrap()).unwrap(),
            Vector::from_i64(z, &[-1])
        );
    }

    #[test]
    fn validate_rejects_malformed_components() {
        let mut alg = sample();
        alg.theta[1] = Vector::from_i64(z5(), &[1, 2]);
        let err = alg.validate().unwrap_err();
        assert!(err.to_string().contains("theta"), "{err}");

        let mut alg = sample();
        alg.invol[1] = Matrix::from_i64(z5(), &[&[1, 0]]);
        let err = alg.validate().unwrap_err();
        assert!(err.to_string().contains("preserve each grade"), "{err}");

        let mut alg = sample();
        alg.mult[3] = Matrix::from_i64(z5(), &[&[1], &[0]]);
        assert!(alg.validate().is_err());

        let mut alg = sample();
        alg.eta[0] = Matrix::from_i64(RingDesc::Integers, &[&[1]]);
        let err = alg.validate().unwrap_err();
        assert!(err.to_string().contains("eta"), "{err}");
    }
}
