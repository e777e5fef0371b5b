//! McKay graphs: irreducibles joined according to their multiplicity in
//! the tensor product with the natural two-dimensional spinor character.

use std::fmt;

use num_complex::Complex64;

use crate::versorgroup::VersorGroup;

use super::{CharacterTable, RepError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AffineType {
    D4,
    E6,
    E7,
    E8,
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AffineType::D4 => "affine D4",
            AffineType::E6 => "affine E6",
            AffineType::E7 => "affine E7",
            AffineType::E8 => "affine E8",
        })
    }
}

/// Affine diagram with nodes labelled by the degrees of the corresponding
/// irreducibles (the marks of the extended diagram).
pub fn affine_diagram(kind: AffineType) -> (Vec<usize>, Vec<(usize, usize)>) {
    match kind {
        AffineType::D4 => (vec![2, 1, 1, 1, 1], vec![(0, 1), (0, 2), (0, 3), (0, 4)]),
        AffineType::E6 => (
            vec![3, 2, 1, 2, 1, 2, 1],
            vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
        ),
        AffineType::E7 => (
            vec![1, 2, 3, 4, 3, 2, 1, 2],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
        ),
        AffineType::E8 => (
            vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayGraph {
    /// Degree of each node, in character-table row order.
    pub degrees: Vec<usize>,
    /// Display label of each node, e.g. `2s` or `3'`.
    pub labels: Vec<String>,
    /// Edges `(i, j, multiplicity)` with `i < j`, plus loops as `(i, i, m)`.
    pub edges: Vec<(usize, usize, usize)>,
    /// Node of the natural spinor irreducible.
    pub spinor: usize,
}

impl McKayGraph {
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        let (a, b) = (i.min(j), i.max(j));
        self.edges.iter().find(|e| e.0 == a && e.1 == b).map_or(0, |e| e.2)
    }

    pub fn has_only_simple_edges(&self) -> bool {
        self.edges.iter().all(|&(i, j, m)| i != j && m == 1)
    }

    /// Isomorphism to a degree-labelled simple graph by backtracking.
    pub fn matches(&self, degrees: &[usize], edges: &[(usize, usize)]) -> bool {
        let n = degrees.len();
        if n != self.degrees.len() || edges.len() != self.edges.len() || !self.has_only_simple_edges() {
            return false;
        }
        let mut adjacent = vec![vec![false; n]; n];
        for &(a, b) in edges {
            adjacent[a][b] = true;
            adjacent[b][a] = true;
        }
        let mut map = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend(degrees, &adjacent, &mut map, &mut used)
    }

    fn extend(&self, degrees: &[usize], adjacent: &[Vec<bool>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = map.len();
        if k == degrees.len() {
            return true;
        }
        for t in 0..degrees.len() {
            if used[t] || degrees[t] != self.degrees[k] {
                continue;
            }
            let consistent = (0..k).all(|j| adjacent[t][map[j]] == (self.multiplicity(k, j) > 0));
            if consistent {
                map.push(t);
                used[t] = true;
                if self.extend(degrees, adjacent, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }

    pub fn matches_affine(&self, kind: AffineType) -> bool {
        let (d, e) = affine_diagram(kind);
        self.matches(&d, &e)
    }

    /// The affine type this graph realizes, if any.
    pub fn affine_type(&self) -> Option<AffineType> {
        [AffineType::D4, AffineType::E6, AffineType::E7, AffineType::E8]
            .into_iter()
            .find(|&k| self.matches_affine(k))
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph mckay {\n");
        for (i, label) in self.labels.iter().enumerate() {
            let mark = if i == self.spinor { ", style=bold" } else { "" };
            s.push_str(&format!("  n{i} [label=\"{label}\"{mark}];\n"));
        }
        for &(i, j, m) in &self.edges {
            if m == 1 {
                s.push_str(&format!("  n{i} -- n{j};\n"));
            } else {
                s.push_str(&format!("  n{i} -- n{j} [label=\"{m}\"];\n"));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Natural spinor character `2·a0` on each class.
fn natural_character(group: &VersorGroup) -> Vec<Complex64> {
    group
        .conjugacy_classes()
        .iter()
        .map(|c| Complex64::new(2.0 * group.element(c[0]).scalar_part().to_f64(), 0.0))
        .collect()
}

/// Labels from degrees: an `s` marks irreducibles where −1 acts as −1 and
/// primes separate repeats; the natural spinor irreducible is `2s`.
pub fn irrep_labels(table: &CharacterTable, minus_one_class: Option<usize>, spinor: Option<usize>) -> Vec<String> {
    let mut order: Vec<usize> = (0..table.degrees.len()).collect();
    if let Some(s) = spinor {
        // The natural one is named first among its kind.
        order.sort_by_key(|&i| (i != s, i));
    }
    let mut labels = vec![String::new(); table.degrees.len()];
    let mut used: Vec<String> = Vec::new();
    for i in order {
        let spinorial = minus_one_class.is_some_and(|k| table.value(i, k).re < 0.0);
        let mut base = table.degrees[i].to_string();
        if spinorial {
            base.push('s');
        }
        let mut label = base.clone();
        while used.contains(&label) {
            label.push('\'');
        }
        used.push(label.clone());
        labels[i] = label;
    }
    labels
}

/// Class containing −1, when −1 is an element.
pub fn minus_one_class(group: &VersorGroup) -> Option<usize> {
    let m = group.index_of(&-crate::clifford::Multivector::one(group.dimension()))?;
    (m != group.identity()).then(|| group.class_of(m))
}

/// Row of the degree-2 irreducible whose character is `2·a0`.
pub fn natural_spinor_irrep(group: &VersorGroup, table: &CharacterTable) -> Option<usize> {
    let natural = natural_character(group);
    (0..table.degrees.len()).find(|&i| {
        table.degrees[i] == 2
            && table.rows[i]
                .iter()
                .zip(&natural)
                .all(|(e, z)| (e.value - z).norm() < 1e-9)
    })
}

/// McKay graph of a binary group from its character table.
pub fn mckay_graph(group: &VersorGroup, table: &CharacterTable) -> Result<McKayGraph, RepError> {
    let minus_one = minus_one_class(group).ok_or(RepError::NotBinary)?;
    let spinor = natural_spinor_irrep(group, table).ok_or(RepError::NoSpinorIrrep)?;
    let chi_s = table.row_values(spinor);
    let r = table.degrees.len();
    let mut edges = Vec::new();
    for i in 0..r {
        let product: Vec<Complex64> = (0..table.num_classes()).map(|k| chi_s[k] * table.value(i, k)).collect();
        for j in i..r {
            let m = table.inner(&product, &table.row_values(j));
            let rounded = m.re.round();
            if (m.re - rounded).abs() > 1e-6 || m.im.abs() > 1e-6 {
                return Err(RepError::CharacterTable(format!("non-integral multiplicity {m}")));
            }
            if rounded > 0.0 {
                edges.push((i, j, rounded as usize));
            }
        }
    }
    Ok(McKayGraph {
        degrees: table.degrees.clone(),
        labels: irrep_labels(table, Some(minus_one), Some(spinor)),
        edges,
        spinor,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{character_table, DEFAULT_SEED};
    use super::*;
    use crate::rootsystem::Family;
    use crate::versorgroup::DEFAULT_GROUP_CEILING;

    fn spin(f: Family) -> VersorGroup {
        VersorGroup::pin(&f.simple_roots(), DEFAULT_GROUP_CEILING)
            .unwrap()
            .even_subgroup()
            .unwrap()
    }

    #[test]
    fn affine_types() {
        let expect = [
            (Family::A1Cubed, AffineType::D4),
            (Family::A3, AffineType::E6),
            (Family::B3, AffineType::E7),
            (Family::H3, AffineType::E8),
        ];
        for (family, kind) in expect {
            let g = spin(family);
            let t = character_table(&g, DEFAULT_SEED).unwrap();
            let graph = mckay_graph(&g, &t).unwrap();
            assert!(graph.has_only_simple_edges(), "{family}");
            assert_eq!(graph.affine_type(), Some(kind), "{family}");
            // The trivial irreducible only meets the spinor one.
            let trivial = t.degrees.iter().position(|&d| d == 1).unwrap();
            let neighbours: Vec<usize> = (0..t.degrees.len())
                .filter(|&j| graph.multiplicity(trivial, j) > 0)
                .collect();
            assert_eq!(neighbours, vec![graph.spinor]);
        }
    }

    #[test]
    fn labels_for_binary_icosahedral() {
        let g = spin(Family::H3);
        let t = character_table(&g, DEFAULT_SEED).unwrap();
        let graph = mckay_graph(&g, &t).unwrap();
        let mut labels = graph.labels.clone();
        labels.sort();
        assert_eq!(labels, vec!["1", "2s", "2s'", "3", "3'", "4", "4s", "5", "6s"]);
        assert_eq!(graph.labels[graph.spinor], "2s");
    }

    #[test]
    fn rotation_groups_are_rejected() {
        let q = spin(Family::H3).rotation_quotient().unwrap();
        let t = character_table(&q, DEFAULT_SEED).unwrap();
        assert_eq!(mckay_graph(&q, &t).unwrap_err(), RepError::NotBinary);
    }

    #[test]
    fn wrong_diagram_does_not_match() {
        let g = spin(Family::A3);
        let t = character_table(&g, DEFAULT_SEED).unwrap();
        let graph = mckay_graph(&g, &t).unwrap();
        assert!(!graph.matches_affine(AffineType::E7));
        assert!(graph.to_dot().starts_with("graph mckay {"));
    }
}
