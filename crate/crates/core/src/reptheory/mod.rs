//! Matrix representations built from multivector actions, characters, and
//! the class-algebra route to full character tables and McKay graphs.

mod chartable;
mod mckay;

pub use chartable::{character_table, CharacterTable, Entry, DEFAULT_SEED};
pub use mckay::{
    affine_diagram, irrep_labels, mckay_graph, minus_one_class, natural_spinor_irrep, AffineType, McKayGraph,
};

use thiserror::Error;

use crate::clifford::{CliffordError, Multivector, Parity, Versor};
use crate::field::{FieldScalar, Rational};
use crate::induction::{InductionError, SpinorAs4DVector};
use crate::linalg::Matrix;
use crate::versorgroup::{GroupKind, VersorGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("spinor is not of unit norm")]
    NotUnit,
    #[error("expected an even element of Cl(3)")]
    NotASpinor,
    #[error("representation needs a {0} group")]
    WrongKind(GroupKind),
    #[error("character table extraction failed: {0}")]
    CharacterTable(String),
    #[error("no degree-2 irreducible character matches the natural spinor character")]
    NoSpinorIrrep,
    #[error("group has no central -1 and so is not a binary group")]
    NotBinary,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

impl From<InductionError> for RepError {
    fn from(e: InductionError) -> Self {
        match e {
            InductionError::Clifford(c) => RepError::Clifford(c),
            _ => RepError::NotASpinor,
        }
    }
}

fn unit_spinor(r: &Multivector) -> Result<Versor, RepError> {
    if r.dimension() != 3 || r.parity() == Some(Parity::Odd) {
        return Err(RepError::NotASpinor);
    }
    let v = Versor::new(r.clone()).map_err(|_| RepError::NotUnit)?;
    if v.parity() != Parity::Even {
        return Err(RepError::NotASpinor);
    }
    if !v.is_unit() {
        return Err(RepError::NotUnit);
    }
    Ok(v)
}

/// Rotation matrix of `x ↦ R̃ x R`; column `j` is the image of `e_{j+1}`.
///
/// Note that `R ↦ M(R)` reverses products: `M(R1 R2) = M(R2) M(R1)`.
pub fn spinor_to_so3(r: &Multivector) -> Result<Matrix, RepError> {
    Ok(unit_spinor(r)?.orthogonal_matrix()?)
}

/// Rotation matrix of `x ↦ R x R̃`, which is `spinor_to_so3(R)ᵀ` and
/// respects products.
pub fn contragredient_action(r: &Multivector) -> Result<Matrix, RepError> {
    spinor_to_so3(&r.reverse())
}

/// `3a0² − a1² − a2² − a3²`, the trace of the rotation.
pub fn so3_character(r: &Multivector) -> Result<FieldScalar, RepError> {
    unit_spinor(r)?;
    let [a0, a1, a2, a3] = SpinorAs4DVector::from_spinor(r)?.0;
    Ok(&(&(&a0 * &a0).scale(&Rational::from_int(3)) - &(&a1 * &a1)) - &(&(&a2 * &a2) + &(&a3 * &a3)))
}

/// Matrix of `S ↦ R·S` on spinor coordinates `(1, e2e3, e3e1, e1e2)`.
pub fn left_mult_matrix(r: &Multivector) -> Result<Matrix, RepError> {
    unit_spinor(r)?;
    let cols = (0..4)
        .map(|k| {
            let mut basis = [
                FieldScalar::zero(),
                FieldScalar::zero(),
                FieldScalar::zero(),
                FieldScalar::zero(),
            ];
            basis[k] = FieldScalar::one();
            let s = SpinorAs4DVector(basis).to_spinor();
            Ok(SpinorAs4DVector::from_spinor(&(r * &s))?.to_vector())
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    Ok(Matrix::from_columns(cols))
}

/// A matrix representation with one image per group element and its
/// character on each conjugacy class.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub degree: usize,
    pub images: Vec<Matrix>,
    pub character: Vec<FieldScalar>,
}

impl MatrixRep {
    fn from_images(group: &VersorGroup, images: Vec<Matrix>) -> Self {
        let degree = images.first().map_or(0, Matrix::rows);
        let character = group.conjugacy_classes().iter().map(|c| images[c[0]].trace()).collect();
        MatrixRep {
            degree,
            images,
            character,
        }
    }

    /// Whether `image(g)·image(h) = image(gh)` for the given index pairs.
    pub fn is_homomorphic_on(&self, group: &VersorGroup, pairs: &[(usize, usize)]) -> bool {
        pairs
            .iter()
            .all(|&(g, h)| &self.images[g] * &self.images[h] == self.images[group.mul(g, h)])
    }

    /// Whether the trace of every image equals the character of its class.
    pub fn is_class_function(&self, group: &VersorGroup) -> bool {
        group
            .conjugacy_classes()
            .iter()
            .enumerate()
            .all(|(k, c)| c.iter().all(|&g| self.images[g].trace() == self.character[k]))
    }
}

/// 3×3 rotations of a rotation quotient (or of a spin group), by the
/// product-respecting action `x ↦ R x R̃`.
pub fn so3_rep(group: &VersorGroup) -> Result<MatrixRep, RepError> {
    if group.kind() == GroupKind::Pin {
        return Err(RepError::WrongKind(GroupKind::Spin));
    }
    let images = group
        .elements()
        .iter()
        .map(contragredient_action)
        .collect::<Result<_, _>>()?;
    Ok(MatrixRep::from_images(group, images))
}

/// 4×4 left multiplication on spinors, for a spin group.
pub fn left_mult_rep(group: &VersorGroup) -> Result<MatrixRep, RepError> {
    if group.kind() != GroupKind::Spin {
        return Err(RepError::WrongKind(GroupKind::Spin));
    }
    let images = group
        .elements()
        .iter()
        .map(left_mult_matrix)
        .collect::<Result<_, _>>()?;
    Ok(MatrixRep::from_images(group, images))
}

/// `x ↦ R x R̃` on scalars for spinors.
pub fn trivial_rep(group: &VersorGroup) -> MatrixRep {
    let images = vec![Matrix::identity(1); group.order()];
    MatrixRep::from_images(group, images)
}

/// `x ↦ ±A x Ã` on scalars: +1 for even, −1 for odd versors.
pub fn parity_rep(group: &VersorGroup) -> MatrixRep {
    let images = group
        .elements()
        .iter()
        .map(|e| {
            let s = if e.parity() == Some(Parity::Odd) { -1 } else { 1 };
            Matrix::identity(1).scaled(&FieldScalar::from_int(s))
        })
        .collect();
    MatrixRep::from_images(group, images)
}

/// `(1/|G|) Σ_g χ(g)²`; real characters only, so this is `‖χ‖²`.
pub fn rep_norm_squared(rep: &MatrixRep, group: &VersorGroup) -> FieldScalar {
    let total: FieldScalar = group
        .conjugacy_classes()
        .iter()
        .zip(&rep.character)
        .map(|(c, chi)| (chi * chi).scale(&Rational::from_int(c.len() as i64)))
        .sum();
    total.scale(&Rational::new(1, group.order() as i64))
}
