//! Coordinates for the built-in families and resolution of arbitrary
//! diagrams onto them.

use std::fmt;
use std::str::FromStr;

use crate::field::{FieldScalar, Rational};
use crate::linalg::Vector;

use super::diagram::{named_family, CoxeterDiagram};
use super::RootSystemError;

/// Families with fixed simple-root coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A1Cubed,
    A3,
    B3,
    H3,
    E8,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A1Cubed, Family::A3, Family::B3, Family::H3, Family::E8];

    pub fn name(self) -> &'static str {
        match self {
            Family::A1Cubed => "A1^3",
            Family::A3 => "A3",
            Family::B3 => "B3",
            Family::H3 => "H3",
            Family::E8 => "E8",
        }
    }

    pub fn diagram(self) -> CoxeterDiagram {
        named_family(self.name()).expect("built-in family names parse")
    }

    pub fn dimension(self) -> usize {
        match self {
            Family::E8 => 8,
            _ => 3,
        }
    }

    /// Simple roots in diagram node order.
    ///
    /// A3 uses the D3 coordinates `±e_i ± e_j` so that it lives in three
    /// dimensions. E8 uses the even coordinate system, labelled so that
    /// nodes 1–7 form a chain and node 8 hangs off node 5.
    pub fn simple_roots(self) -> Vec<Vector> {
        let i = |v: &[i64]| -> Vector { v.iter().map(|&x| FieldScalar::from_int(x)).collect() };
        match self {
            Family::A1Cubed => vec![i(&[1, 0, 0]), i(&[0, 1, 0]), i(&[0, 0, 1])],
            Family::A3 => vec![i(&[0, 1, -1]), i(&[1, -1, 0]), i(&[0, 1, 1])],
            Family::B3 => vec![i(&[1, -1, 0]), i(&[0, 1, -1]), i(&[0, 0, 1])],
            Family::H3 => {
                let half = Rational::new(-1, 2);
                let tau = FieldScalar::tau();
                let alpha2 = vec![
                    (&tau - &FieldScalar::one()).scale(&half),
                    FieldScalar::from_rational(half.clone()),
                    tau.scale(&half),
                ];
                vec![i(&[0, 1, 0]), alpha2, i(&[0, 0, 1])]
            }
            Family::E8 => {
                let h = |v: [i64; 8]| -> Vector { v.iter().map(|&x| FieldScalar::from_ratio(x, 2)).collect() };
                vec![
                    i(&[0, 0, 0, 0, 0, -1, 1, 0]),
                    i(&[0, 0, 0, 0, -1, 1, 0, 0]),
                    i(&[0, 0, 0, -1, 1, 0, 0, 0]),
                    i(&[0, 0, -1, 1, 0, 0, 0, 0]),
                    i(&[0, -1, 1, 0, 0, 0, 0, 0]),
                    i(&[-1, 1, 0, 0, 0, 0, 0, 0]),
                    h([1, -1, -1, -1, -1, -1, -1, 1]),
                    i(&[1, 1, 0, 0, 0, 0, 0, 0]),
                ]
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| RootSystemError::UnknownFamily(s.trim().to_string()))
    }
}

/// Simple roots of a built-in family given by name.
pub fn simple_roots(name: &str) -> Result<Vec<Vector>, RootSystemError> {
    Ok(name.parse::<Family>()?.simple_roots())
}

/// Coordinates for any diagram that occurs as a labelled subdiagram of a
/// built-in family, searched in order of ambient dimension. The returned
/// roots follow the node order of `diagram`.
pub fn resolve_simple_roots(diagram: &CoxeterDiagram) -> Result<(Family, Vec<Vector>), RootSystemError> {
    for family in Family::ALL {
        let host = family.diagram();
        if let Some(map) = diagram.embeddings_into(&host).into_iter().next() {
            let roots = family.simple_roots();
            return Ok((family, map.into_iter().map(|k| roots[k].clone()).collect()));
        }
    }
    Err(RootSystemError::NoCoordinates(diagram.to_dsl()))
}
