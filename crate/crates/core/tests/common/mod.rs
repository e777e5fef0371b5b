//! Strategies shared by the property and acceptance suites.
#![allow(dead_code)]

use cliffcox::clifford::Multivector;
use cliffcox::field::{FieldScalar, Rational};
use cliffcox::induction::SpinorAs4DVector;
use cliffcox::rootsystem::Family;
use cliffcox::versorgroup::{VersorGroup, DEFAULT_GROUP_CEILING};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn scalar() -> impl Strategy<Value = FieldScalar> {
    [rational(), rational(), rational(), rational()].prop_map(|[a, b, c, d]| FieldScalar::new(a, b, c, d))
}

pub fn nonzero_scalar() -> impl Strategy<Value = FieldScalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

/// Mostly sparse coefficients so products in Cl(4) stay cheap.
pub fn sparse_scalar() -> impl Strategy<Value = FieldScalar> {
    prop_oneof![
        2 => Just(FieldScalar::zero()),
        1 => scalar(),
    ]
}

pub fn multivector(dim: usize) -> impl Strategy<Value = Multivector> {
    proptest::collection::vec(sparse_scalar(), 1 << dim).prop_map(move |c| Multivector::from_coeffs(dim, c).unwrap())
}

pub fn vector(dim: usize) -> impl Strategy<Value = Multivector> {
    proptest::collection::vec(scalar(), dim).prop_map(|c| Multivector::vector(&c))
}

pub fn nonzero_vector(dim: usize) -> impl Strategy<Value = Multivector> {
    vector(dim).prop_filter("nonzero", |v| !v.is_zero())
}

pub fn even_spinor() -> impl Strategy<Value = SpinorAs4DVector> {
    [scalar(), scalar(), scalar(), scalar()].prop_map(SpinorAs4DVector)
}

pub fn spin(family: Family) -> VersorGroup {
    VersorGroup::pin(&family.simple_roots(), DEFAULT_GROUP_CEILING)
        .unwrap()
        .even_subgroup()
        .unwrap()
}
