//! Four-dimensional root systems read off from the spinors of a
//! three-dimensional reflection group.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::clifford::{CliffordError, Multivector};
use crate::field::{FieldScalar, Rational};
use crate::linalg::{self, Matrix, Vector};
use crate::rootsystem::{find_isometry, GramTable, RootSystem, RootSystemError};
use crate::versorgroup::{GroupError, VersorGroup, DEFAULT_GROUP_CEILING};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InductionError {
    #[error("expected an even element of Cl(3)")]
    NotASpinor,
    #[error("induction needs a root system in three dimensions, got {0}")]
    WrongDimension(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

// Blade masks of e2e3, e3e1 (stored as e13) and e1e2.
const E23: usize = 0b110;
const E13: usize = 0b101;
const E12: usize = 0b011;

/// Coordinates of `a0 + a1·e2e3 + a2·e3e1 + a3·e1e2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinorAs4DVector(pub [FieldScalar; 4]);

impl SpinorAs4DVector {
    pub fn from_spinor(r: &Multivector) -> Result<Self, InductionError> {
        if r.dimension() != 3 {
            return Err(InductionError::NotASpinor);
        }
        if r.support().any(|b| b.count_ones() % 2 == 1) {
            return Err(InductionError::NotASpinor);
        }
        Ok(SpinorAs4DVector([
            r.coeff(0).clone(),
            r.coeff(E23).clone(),
            -r.coeff(E13),
            r.coeff(E12).clone(),
        ]))
    }

    pub fn to_spinor(&self) -> Multivector {
        let [a0, a1, a2, a3] = &self.0;
        let mut m = Multivector::scalar(3, a0.clone());
        m.set_coeff(E23, a1.clone());
        m.set_coeff(E13, -a2);
        m.set_coeff(E12, a3.clone());
        m
    }

    pub fn coords(&self) -> &[FieldScalar] {
        &self.0
    }

    pub fn to_vector(&self) -> Vector {
        self.0.to_vec()
    }

    pub fn from_vector(v: &[FieldScalar]) -> Option<Self> {
        let a: [FieldScalar; 4] = v.to_vec().try_into().ok()?;
        Some(SpinorAs4DVector(a))
    }

    pub fn norm_squared(&self) -> FieldScalar {
        linalg::dot(&self.0, &self.0)
    }
}

/// `½(R1 R̃2 + R2 R̃1)`, which is a scalar for spinors of Cl(3).
pub fn spinor_inner(r1: &SpinorAs4DVector, r2: &SpinorAs4DVector) -> FieldScalar {
    let (a, b) = (r1.to_spinor(), r2.to_spinor());
    let sum = &(&a * &b.reverse()) + &(&b * &a.reverse());
    debug_assert!(sum.is_scalar());
    sum.scalar_part().scale(&Rational::new(1, 2))
}

/// Euclidean dot product of the coordinate quadruples.
pub fn coordinate_inner(r1: &SpinorAs4DVector, r2: &SpinorAs4DVector) -> FieldScalar {
    linalg::dot(&r1.0, &r2.0)
}

/// The spin group of a 3D root system: generated by its simple roots when
/// known, otherwise by all of its roots.
pub fn spin_group(phi: &RootSystem, ceiling: usize) -> Result<VersorGroup, InductionError> {
    if phi.dimension() != 3 {
        return Err(InductionError::WrongDimension(phi.dimension()));
    }
    let gens = phi.simple_roots().unwrap_or(phi.roots());
    Ok(VersorGroup::pin(gens, ceiling)?.even_subgroup()?)
}

/// Spinors of a spin group as 4D vectors, in group-element order.
pub fn spinor_vectors(group: &VersorGroup) -> Result<Vec<Vector>, InductionError> {
    group
        .elements()
        .iter()
        .map(|e| SpinorAs4DVector::from_spinor(e).map(|s| s.to_vector()))
        .collect()
}

/// The 4D root system formed by the spinors of `phi`'s spin group.
pub fn induce(phi: &RootSystem) -> Result<RootSystem, InductionError> {
    let group = spin_group(phi, DEFAULT_GROUP_CEILING)?;
    induce_from_group(&group)
}

pub fn induce_from_group(group: &VersorGroup) -> Result<RootSystem, InductionError> {
    let rs = RootSystem::from_roots(4, spinor_vectors(group)?)?;
    let name = identify(&rs);
    Ok(if name == Identified::Unknown {
        rs
    } else {
        rs.with_name(name.to_string())
    })
}

/// Reflection closure phrased in the group: reflecting `R2` in `R1` gives
/// `−R1 R̃2 R1`, which must again be an element. Returns failing pairs.
pub fn spinorial_reflection_failures(group: &VersorGroup) -> Vec<(usize, usize)> {
    let mut failures = Vec::new();
    for (i, r1) in group.elements().iter().enumerate() {
        for (j, r2) in group.elements().iter().enumerate() {
            let image = -&(&(r1 * &r2.reverse()) * r1);
            if group.index_of(&image).is_none() {
                failures.push((i, j));
            }
        }
    }
    failures
}

/// Root systems the catalog can recognize in four dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identified {
    A1Fourth,
    D4,
    F4,
    H4,
    Unknown,
}

impl fmt::Display for Identified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identified::A1Fourth => "A1^4",
            Identified::D4 => "D4",
            Identified::F4 => "F4",
            Identified::H4 => "H4",
            Identified::Unknown => "unknown",
        })
    }
}

impl std::str::FromStr for Identified {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A1^4" => Ok(Identified::A1Fourth),
            "D4" => Ok(Identified::D4),
            "F4" => Ok(Identified::F4),
            "H4" => Ok(Identified::H4),
            _ => Err(format!("unknown 4D root system `{s}` (expected A1^4, D4, F4 or H4)")),
        }
    }
}

fn signed_vectors(pattern: &[FieldScalar], even_permutations_only: bool, out: &mut HashSet<Vector>) {
    let perms: Vec<[usize; 4]> = permutations4()
        .into_iter()
        .filter(|p| !even_permutations_only || is_even(p))
        .collect();
    for p in perms {
        for signs in 0..16u32 {
            let v: Vector = (0..4)
                .map(|k| {
                    let x = pattern[p[k]].clone();
                    if signs & (1 << k) != 0 {
                        -x
                    } else {
                        x
                    }
                })
                .collect();
            out.insert(v);
        }
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn is_even(p: &[usize; 4]) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Standard coordinates of a catalog root system.
pub fn catalog_roots(name: Identified) -> Vec<Vector> {
    let int = |x: i64| FieldScalar::from_int(x);
    let half = FieldScalar::from_ratio(1, 2);
    let mut set = HashSet::new();
    let axis = [int(1), int(0), int(0), int(0)];
    let halves = [half.clone(), half.clone(), half.clone(), half.clone()];
    let pair = [int(1), int(1), int(0), int(0)];
    match name {
        Identified::A1Fourth => signed_vectors(&axis, false, &mut set),
        Identified::D4 => signed_vectors(&pair, false, &mut set),
        Identified::F4 => {
            signed_vectors(&axis, false, &mut set);
            signed_vectors(&halves, false, &mut set);
            signed_vectors(&pair, false, &mut set);
        }
        Identified::H4 => {
            signed_vectors(&axis, false, &mut set);
            signed_vectors(&halves, false, &mut set);
            let tau = FieldScalar::tau();
            let golden = [
                tau.scale(&Rational::new(1, 2)),
                half.clone(),
                (&tau - &FieldScalar::one()).scale(&Rational::new(1, 2)),
                int(0),
            ];
            signed_vectors(&golden, true, &mut set);
        }
        Identified::Unknown => {}
    }
    let mut roots: Vec<Vector> = set.into_iter().collect();
    roots.sort_by(|a, b| linalg::cmp_desc(a, b));
    roots
}

/// Multiset of signed squared cosines between all ordered pairs. It does
/// not see per-root rescaling.
fn angle_profile(roots: &[Vector]) -> Option<HashMap<(i8, FieldScalar), usize>> {
    let norms: Vec<FieldScalar> = roots.iter().map(|r| linalg::dot(r, r)).collect();
    let mut profile = HashMap::new();
    for (i, a) in roots.iter().enumerate() {
        for (j, b) in roots.iter().enumerate() {
            let d = linalg::dot(a, b);
            let sign = match d.sign() {
                crate::field::Sign::Negative => -1,
                crate::field::Sign::Zero => 0,
                crate::field::Sign::Positive => 1,
            };
            let cos2 = (&d * &d).div(&(&norms[i] * &norms[j])).ok()?;
            *profile.entry((sign, cos2)).or_insert(0) += 1;
        }
    }
    Some(profile)
}

/// Names a 4D root set by its size and its multiset of angles, which
/// determines each catalog entry up to rotation and rescaling of roots.
pub fn identify(phi: &RootSystem) -> Identified {
    if phi.dimension() != 4 {
        return Identified::Unknown;
    }
    let Some(profile) = angle_profile(phi.roots()) else {
        return Identified::Unknown;
    };
    for name in [Identified::A1Fourth, Identified::D4, Identified::F4, Identified::H4] {
        let reference = catalog_roots(name);
        if reference.len() == phi.len() && angle_profile(&reference).as_ref() == Some(&profile) {
            return name;
        }
    }
    Identified::Unknown
}

fn unit_vectors(roots: &[Vector]) -> Option<Vec<Vector>> {
    roots
        .iter()
        .map(|r| {
            let n = linalg::dot(r, r).sqrt()?;
            Some(linalg::scale(r, &n.invert().ok()?))
        })
        .collect()
}

/// An explicit match of `phi` (roots rescaled to unit length) onto the
/// unit-rescaled catalog entry: the catalog index of each root.
pub fn isometry_certificate(phi: &RootSystem, name: Identified) -> Option<Vec<usize>> {
    let a = unit_vectors(phi.roots())?;
    let b = unit_vectors(&catalog_roots(name))?;
    find_isometry(&a, &b)
}

/// Result of sweeping the maps `x ↦ R1·x·R2` over all pairs of a spin group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinorialAutomorphismReport {
    pub group_order: usize,
    pub pairs_checked: usize,
    /// Pairs whose map permutes the roots and preserves inner products.
    pub pairs_preserving: usize,
    /// Distinct maps `x ↦ R1·x·R2`.
    pub distinct_maps: usize,
    /// Distinct maps once `x ↦ R1·x̃·R2` are included as well.
    pub distinct_maps_with_reversal: usize,
}

impl SpinorialAutomorphismReport {
    pub fn all_preserve(&self) -> bool {
        self.pairs_preserving == self.pairs_checked
    }
}

/// Checks every pair of a spin group against its induced root system.
/// Each map is linear, so preserving inner products between a spanning
/// set of roots and all roots is enough.
pub fn check_spinorial_automorphisms(group: &VersorGroup) -> Result<SpinorialAutomorphismReport, InductionError> {
    let vectors = spinor_vectors(group)?;
    let n = vectors.len();
    let gram = GramTable::new(&vectors);
    let mut base = Vec::new();
    for i in 0..n {
        let mut rows: Vec<Vector> = base.iter().map(|&b: &usize| vectors[b].clone()).collect();
        rows.push(vectors[i].clone());
        if Matrix::from_rows(rows).rank() == base.len() + 1 {
            base.push(i);
        }
    }
    group.cayley_table();
    let reversed: Vec<usize> = (0..n).map(|k| group.inverse(k)).collect();
    let mut maps: HashSet<Vec<usize>> = HashSet::new();
    let mut maps_with_reversal: HashSet<Vec<usize>> = HashSet::new();
    let mut preserving = 0;
    let mut image = vec![0usize; n];
    for left in 0..n {
        for right in 0..n {
            for (k, slot) in image.iter_mut().enumerate() {
                *slot = group.mul(group.mul(left, k), right);
            }
            let ok = base
                .iter()
                .all(|&b| (0..n).all(|r| gram.get(image[b], image[r]) == gram.get(b, r)));
            if ok {
                preserving += 1;
            }
            let key: Vec<usize> = base.iter().map(|&b| image[b]).collect();
            maps.insert(key.clone());
            maps_with_reversal.insert(key);
            let key_rev: Vec<usize> = base.iter().map(|&b| image[reversed[b]]).collect();
            maps_with_reversal.insert(key_rev);
        }
    }
    Ok(SpinorialAutomorphismReport {
        group_order: n,
        pairs_checked: n * n,
        pairs_preserving: preserving,
        distinct_maps: maps.len(),
        distinct_maps_with_reversal: maps_with_reversal.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{automorphism_order, family_root_system, verify, Family};

    fn spin(f: Family) -> VersorGroup {
        spin_group(&family_root_system(f).unwrap(), DEFAULT_GROUP_CEILING).unwrap()
    }

    #[test]
    fn basis_coordinates() {
        let one = SpinorAs4DVector::from_spinor(&Multivector::one(3)).unwrap();
        assert_eq!(one.to_vector(), vec![1.into(), 0.into(), 0.into(), 0.into()]);
        let e23 = Multivector::blade(3, E23, FieldScalar::one());
        assert_eq!(
            SpinorAs4DVector::from_spinor(&e23).unwrap().to_vector()[1],
            FieldScalar::one()
        );
        let e31 = &Multivector::basis_vector(3, 3) * &Multivector::basis_vector(3, 1);
        assert_eq!(
            SpinorAs4DVector::from_spinor(&e31).unwrap().to_vector()[2],
            FieldScalar::one()
        );
        assert!(SpinorAs4DVector::from_spinor(&Multivector::basis_vector(3, 1)).is_err());
    }

    #[test]
    fn inner_products_agree() {
        let g = spin(Family::H3);
        let v: Vec<SpinorAs4DVector> = g
            .elements()
            .iter()
            .map(|e| SpinorAs4DVector::from_spinor(e).unwrap())
            .collect();
        for a in v.iter().step_by(7) {
            for b in v.iter().step_by(5) {
                assert_eq!(spinor_inner(a, b), coordinate_inner(a, b));
            }
            assert_eq!(a.norm_squared(), FieldScalar::one());
        }
    }

    #[test]
    fn induced_systems() {
        let expect = [
            (Family::A1Cubed, 8, Identified::A1Fourth),
            (Family::A3, 24, Identified::D4),
            (Family::B3, 48, Identified::F4),
            (Family::H3, 120, Identified::H4),
        ];
        for (family, n, name) in expect {
            let phi = induce(&family_root_system(family).unwrap()).unwrap();
            assert_eq!(phi.len(), n, "{family}");
            assert_eq!(identify(&phi), name, "{family}");
            assert!(verify(&phi).passes(), "{family}");
            assert!(spinorial_reflection_failures(&spin(family)).is_empty());
        }
    }

    #[test]
    fn catalog_sizes_and_orders() {
        let sizes = [
            (Identified::A1Fourth, 8),
            (Identified::D4, 24),
            (Identified::F4, 48),
            (Identified::H4, 120),
        ];
        for (name, n) in sizes {
            let roots = catalog_roots(name);
            assert_eq!(roots.len(), n);
            let rs = RootSystem::from_roots(4, roots).unwrap();
            assert!(verify(&rs).passes(), "{name}");
        }
        let d4 = RootSystem::from_roots(4, catalog_roots(Identified::D4)).unwrap();
        assert_eq!(automorphism_order(&d4), 1152);
    }

    #[test]
    fn simplex_is_unknown() {
        let e = |i: usize| -> Vector { (0..4).map(|k| FieldScalar::from_int((k == i) as i64)).collect() };
        let rs = RootSystem::from_roots(4, (0..4).map(e).collect()).unwrap();
        assert_eq!(identify(&rs), Identified::Unknown);
    }

    #[test]
    fn certificate_for_induced_f4() {
        let phi = induce(&family_root_system(Family::B3).unwrap()).unwrap();
        let cert = isometry_certificate(&phi, Identified::F4).unwrap();
        assert_eq!(cert.len(), 48);
        assert!(isometry_certificate(&phi, Identified::D4).is_none());
    }

    #[test]
    fn sweep_on_binary_tetrahedral() {
        let report = check_spinorial_automorphisms(&spin(Family::A3)).unwrap();
        assert!(report.all_preserve());
        assert_eq!(report.pairs_checked, 576);
        assert_eq!(report.distinct_maps, 288);
        assert_eq!(report.distinct_maps_with_reversal, 576);
    }
}
