//! Root systems: generation by reflection closure, axiom checks, Cartan
//! matrices and automorphism counting.

mod automorphism;
pub mod diagram;
mod families;

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::field::{FieldError, FieldScalar};
use crate::linalg::{self, Matrix, Vector};

pub use automorphism::{automorphism_order, find_isometry, GramTable};
pub use diagram::{named_family, parse_diagram, CoxeterDiagram, DiagramError};
pub use families::{resolve_simple_roots, simple_roots, Family};

/// Largest root system [`generate`] will build by default.
pub const DEFAULT_ROOT_CEILING: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("unknown family `{0}` (expected one of A1^3, A3, B3, H3, E8)")]
    UnknownFamily(String),
    #[error("no built-in coordinates realize the diagram `{0}`")]
    NoCoordinates(String),
    #[error("simple roots are linearly dependent")]
    DependentRoots,
    #[error("roots have mismatched dimensions")]
    DimensionMismatch,
    #[error("zero vector cannot be a root")]
    ZeroRoot,
    #[error("no roots given")]
    Empty,
    #[error("non-finite or too large: more than {0} roots")]
    CeilingExceeded(usize),
    #[error("angle between simple roots {0} and {1} is not of the form pi/m")]
    NotSimple(usize, usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A finite set of roots, deduplicated and sorted in descending
/// lexicographic order of coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    dimension: usize,
    roots: Vec<Vector>,
    index: HashMap<Vector, usize>,
    simple: Option<Vec<Vector>>,
    name: Option<String>,
}

impl RootSystem {
    /// Builds a root set from arbitrary vectors; nothing is verified.
    pub fn from_roots(dimension: usize, roots: Vec<Vector>) -> Result<Self, RootSystemError> {
        if roots.iter().any(|r| r.len() != dimension) {
            return Err(RootSystemError::DimensionMismatch);
        }
        let mut seen = HashSet::new();
        let mut roots: Vec<Vector> = roots.into_iter().filter(|r| seen.insert(r.clone())).collect();
        roots.sort_by(|a, b| linalg::cmp_desc(a, b));
        let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Ok(RootSystem {
            dimension,
            roots,
            index,
            simple: None,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn simple_roots(&self) -> Option<&[Vector]> {
        self.simple.as_deref()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn index_of(&self, v: &[FieldScalar]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &[FieldScalar]) -> bool {
        self.index.contains_key(v)
    }

    /// Squared lengths that occur, ascending.
    pub fn norm_spectrum(&self) -> Vec<FieldScalar> {
        let mut norms: Vec<FieldScalar> = self
            .roots
            .iter()
            .map(|r| linalg::dot(r, r))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        norms.sort_by(|a, b| a.numeric_cmp(b));
        norms
    }

    /// Coefficients of `root` on the simple roots, if these are known.
    pub fn simple_root_coefficients(&self, root: &[FieldScalar]) -> Option<Vector> {
        let simple = self.simple.as_ref()?;
        Matrix::from_columns(simple.clone()).solve(root)
    }
}

/// Reflection of `v` in the hyperplane orthogonal to `alpha`, given
/// `two_over_norm = 2 / (alpha|alpha)`.
pub(crate) fn reflect_coords(alpha: &[FieldScalar], two_over_norm: &FieldScalar, v: &[FieldScalar]) -> Vector {
    let k = &linalg::dot(v, alpha) * two_over_norm;
    if k.is_zero() {
        return v.to_vec();
    }
    linalg::sub(v, &linalg::scale(alpha, &k))
}

fn two_over_norm(alpha: &[FieldScalar]) -> Result<FieldScalar, RootSystemError> {
    let n = linalg::dot(alpha, alpha);
    if n.is_zero() {
        return Err(RootSystemError::ZeroRoot);
    }
    Ok(FieldScalar::from_int(2).div(&n)?)
}

/// `A_ij = 2(α_i|α_j)/(α_j|α_j)`.
pub fn cartan_matrix(simple: &[Vector]) -> Result<Matrix, RootSystemError> {
    let n = simple.len();
    if n == 0 {
        return Err(RootSystemError::Empty);
    }
    let dim = simple[0].len();
    if simple.iter().any(|r| r.len() != dim) {
        return Err(RootSystemError::DimensionMismatch);
    }
    if Matrix::from_rows(simple.to_vec()).rank() < n {
        return Err(RootSystemError::DependentRoots);
    }
    let factors = simple.iter().map(|a| two_over_norm(a)).collect::<Result<Vec<_>, _>>()?;
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = &linalg::dot(&simple[i], &simple[j]) * &factors[j];
        }
    }
    Ok(m)
}

/// Recovers Coxeter labels from simple roots through `A_ij·A_ji = 4cos²(π/m)`.
pub fn diagram_of(simple: &[Vector]) -> Result<CoxeterDiagram, RootSystemError> {
    let a = cartan_matrix(simple)?;
    let n = simple.len();
    let tau = FieldScalar::tau();
    let table: [(FieldScalar, u32); 5] = [
        (FieldScalar::zero(), 2),
        (FieldScalar::one(), 3),
        (FieldScalar::from_int(2), 4),
        (&tau + &FieldScalar::one(), 5),
        (FieldScalar::from_int(3), 6),
    ];
    let mut labels = vec![vec![1u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            // Obtuse (or right) angles only.
            if a[(i, j)].is_positive() {
                return Err(RootSystemError::NotSimple(i + 1, j + 1));
            }
            let p = &a[(i, j)] * &a[(j, i)];
            labels[i][j] = table
                .iter()
                .find(|(v, _)| *v == p)
                .map(|(_, m)| *m)
                .ok_or(RootSystemError::NotSimple(i + 1, j + 1))?;
        }
    }
    Ok(CoxeterDiagram::from_matrix(&labels)?)
}

/// Orbit of the given roots under the group generated by their reflections.
pub fn generate(simple: &[Vector], ceiling: usize) -> Result<RootSystem, RootSystemError> {
    let first = simple.first().ok_or(RootSystemError::Empty)?;
    let dim = first.len();
    if simple.iter().any(|r| r.len() != dim) {
        return Err(RootSystemError::DimensionMismatch);
    }
    let reflections: Vec<(&Vector, FieldScalar)> = simple
        .iter()
        .map(|a| two_over_norm(a).map(|k| (a, k)))
        .collect::<Result<_, _>>()?;
    let mut seen: HashSet<Vector> = HashSet::new();
    let mut queue: VecDeque<Vector> = VecDeque::new();
    for r in simple {
        if seen.insert(r.clone()) {
            queue.push_back(r.clone());
        }
    }
    while let Some(r) = queue.pop_front() {
        for (alpha, k) in &reflections {
            let image = reflect_coords(alpha, k, &r);
            if !seen.contains(&image) {
                if seen.len() >= ceiling {
                    return Err(RootSystemError::CeilingExceeded(ceiling));
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    let mut rs = RootSystem::from_roots(dim, seen.into_iter().collect())?;
    rs.simple = Some(simple.to_vec());
    Ok(rs)
}

/// Root system of a built-in family.
pub fn family_root_system(family: Family) -> Result<RootSystem, RootSystemError> {
    Ok(generate(&family.simple_roots(), DEFAULT_ROOT_CEILING)?.with_name(family.name()))
}

/// Outcome of checking the two root-system axioms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Roots whose negative is absent.
    pub missing_negatives: Vec<usize>,
    /// Pairs `(i, j)` where root `j` is a multiple of root `i` other than ±1.
    pub forbidden_multiples: Vec<(usize, usize)>,
    /// Pairs `(i, j)` where reflecting root `j` in root `i` leaves the set.
    pub reflection_failures: Vec<(usize, usize)>,
}

impl VerifyReport {
    pub fn axiom1_holds(&self) -> bool {
        self.missing_negatives.is_empty() && self.forbidden_multiples.is_empty()
    }

    pub fn axiom2_holds(&self) -> bool {
        self.reflection_failures.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.axiom1_holds() && self.axiom2_holds()
    }
}

/// Direction key: the vector divided by its first nonzero coordinate.
fn direction_key(v: &[FieldScalar]) -> Result<Vector, FieldError> {
    let lead = v.iter().find(|x| !x.is_zero()).ok_or(FieldError::DivisionByZero)?;
    let inv = lead.invert()?;
    Ok(linalg::scale(v, &inv))
}

/// Checks closure under negation (with no other multiples) and under every
/// reflection, listing each violation.
pub fn verify(rs: &RootSystem) -> VerifyReport {
    let mut report = VerifyReport::default();
    let roots = rs.roots();
    let mut by_direction: HashMap<Vector, Vec<usize>> = HashMap::new();
    for (i, r) in roots.iter().enumerate() {
        if !rs.contains(&linalg::neg(r)) {
            report.missing_negatives.push(i);
        }
        match direction_key(r) {
            Ok(key) => by_direction.entry(key).or_default().push(i),
            // The zero vector is never allowed.
            Err(_) => report.forbidden_multiples.push((i, i)),
        }
    }
    for members in by_direction.values() {
        for &i in members {
            let neg = linalg::neg(&roots[i]);
            for &j in members {
                if j != i && roots[j] != neg {
                    report.forbidden_multiples.push((i, j));
                }
            }
        }
    }
    report.forbidden_multiples.sort_unstable();
    for (i, alpha) in roots.iter().enumerate() {
        let Ok(k) = two_over_norm(alpha) else { continue };
        for (j, v) in roots.iter().enumerate() {
            if !rs.contains(&reflect_coords(alpha, &k, v)) {
                report.reflection_failures.push((i, j));
            }
        }
    }
    report
}

/// `true` when every root is a combination of the simple roots with
/// coefficients of one sign drawn from ℤ (or ℤ[τ] when `golden` is set).
pub fn has_integral_simple_coefficients(rs: &RootSystem, golden: bool) -> bool {
    let integral = |x: &FieldScalar| {
        let c = x.coeffs();
        c[1].is_zero() && c[3].is_zero() && c[0].is_integer() && c[2].is_integer() && (golden || c[2].is_zero())
    };
    rs.roots().iter().all(|r| match rs.simple_root_coefficients(r) {
        Some(coeffs) => {
            coeffs.iter().all(integral)
                && (coeffs.iter().all(|x| !x.is_negative()) || coeffs.iter().all(|x| !x.is_positive()))
        }
        None => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vector {
        x.iter().map(|&c| FieldScalar::from_int(c)).collect()
    }

    #[test]
    fn family_counts() {
        let expect = [
            (Family::A1Cubed, 6),
            (Family::A3, 12),
            (Family::B3, 18),
            (Family::H3, 30),
            (Family::E8, 240),
        ];
        for (family, n) in expect {
            let rs = family_root_system(family).unwrap();
            assert_eq!(rs.len(), n, "{family}");
        }
    }

    #[test]
    fn single_root() {
        let rs = generate(&[v(&[1, 0])], 10).unwrap();
        assert_eq!(rs.roots(), &[v(&[1, 0]), v(&[-1, 0])]);
    }

    #[test]
    fn builtin_coordinates_match_diagrams() {
        for family in Family::ALL {
            assert_eq!(
                diagram_of(&family.simple_roots()).unwrap(),
                family.diagram(),
                "{family}"
            );
        }
    }

    #[test]
    fn h3_cartan_entries() {
        let a = cartan_matrix(&Family::H3.simple_roots()).unwrap();
        for i in 0..3 {
            assert_eq!(a[(i, i)], FieldScalar::from_int(2));
        }
        assert_eq!(a[(1, 2)], -FieldScalar::tau());
        assert_eq!(&a[(1, 2)] * &a[(2, 1)], &FieldScalar::tau() + &FieldScalar::one());
        assert_eq!(a[(0, 1)], FieldScalar::from_int(-1));
    }

    #[test]
    fn a1_cubed_cartan_is_twice_identity() {
        let a = cartan_matrix(&Family::A1Cubed.simple_roots()).unwrap();
        assert_eq!(a, Matrix::identity(3).scaled(&FieldScalar::from_int(2)));
    }

    #[test]
    fn e8_cartan_is_the_folding_diagram() {
        let a = cartan_matrix(&Family::E8.simple_roots()).unwrap();
        let d = Family::E8.diagram();
        for i in 0..8 {
            for j in 0..8 {
                let expected = match (i == j, d.label(i, j)) {
                    (true, _) => 2,
                    (false, 3) => -1,
                    _ => 0,
                };
                assert_eq!(a[(i, j)], FieldScalar::from_int(expected), "({i},{j})");
            }
        }
    }

    #[test]
    fn dependent_roots_rejected() {
        assert_eq!(
            cartan_matrix(&[v(&[1, 0]), v(&[2, 0])]).unwrap_err(),
            RootSystemError::DependentRoots
        );
    }

    #[test]
    fn verify_detects_violations() {
        let bad = RootSystem::from_roots(1, vec![v(&[1]), v(&[-1]), v(&[2])]).unwrap();
        let report = verify(&bad);
        assert!(!report.axiom1_holds());
        assert!(!report.passes());

        let a1a1 = RootSystem::from_roots(2, vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])]).unwrap();
        assert!(verify(&a1a1).passes());

        let skew = RootSystem::from_roots(2, vec![v(&[1, 0]), v(&[-1, 0]), v(&[1, 1]), v(&[-1, -1])]).unwrap();
        let report = verify(&skew);
        assert!(report.axiom1_holds());
        assert!(!report.axiom2_holds());
    }

    #[test]
    fn ceiling_is_enforced() {
        assert_eq!(
            generate(&Family::E8.simple_roots(), 100).unwrap_err(),
            RootSystemError::CeilingExceeded(100)
        );
    }

    #[test]
    fn generation_is_idempotent() {
        let rs = family_root_system(Family::H3).unwrap();
        let again = generate(rs.roots(), DEFAULT_ROOT_CEILING).unwrap();
        assert_eq!(again.roots(), rs.roots());
    }

    #[test]
    fn resolve_subdiagrams() {
        let (family, roots) = resolve_simple_roots(&parse_diagram("rank=2; edges: 1-2:5").unwrap()).unwrap();
        assert_eq!(family, Family::H3);
        assert_eq!(generate(&roots, 1000).unwrap().len(), 10);
        let (family, roots) = resolve_simple_roots(&parse_diagram("D4").unwrap()).unwrap();
        assert_eq!(family, Family::E8);
        assert_eq!(generate(&roots, 1000).unwrap().len(), 24);
        assert!(matches!(
            resolve_simple_roots(&parse_diagram("G2").unwrap()),
            Err(RootSystemError::NoCoordinates(_))
        ));
    }
}
