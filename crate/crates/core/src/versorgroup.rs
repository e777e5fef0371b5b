//! Finite groups of unit versors: Pin and Spin groups generated by simple
//! roots, their conjugacy classes, and the quotient by ±1.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::clifford::{normalize_vector, CliffordError, Multivector, Parity};
use crate::linalg::Vector;

pub const DEFAULT_GROUP_CEILING: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error("non-finite or too large: more than {0} elements")]
    CeilingExceeded(usize),
    #[error("no generators given")]
    Empty,
    #[error("expected a {expected} group, found {found}")]
    WrongKind { expected: GroupKind, found: GroupKind },
    #[error("-1 is not in the group")]
    NoMinusOne,
    #[error("element is not in the group")]
    NotAnElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Pin,
    Spin,
    /// Spin elements up to sign, i.e. the rotations themselves.
    RotationQuotient,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Pin => "pin",
            GroupKind::Spin => "spin",
            GroupKind::RotationQuotient => "rotation-quotient",
        })
    }
}

#[derive(Debug)]
pub struct VersorGroup {
    dim: usize,
    kind: GroupKind,
    elements: Vec<Multivector>,
    index: HashMap<Multivector, usize>,
    generators: Vec<usize>,
    classes: OnceLock<Vec<Vec<usize>>>,
    table: OnceLock<Vec<u32>>,
}

impl Clone for VersorGroup {
    fn clone(&self) -> Self {
        Self::assemble(self.dim, self.kind, self.elements.clone(), self.generators.clone())
    }
}

fn canonical(kind: GroupKind, m: Multivector) -> Multivector {
    match kind {
        GroupKind::RotationQuotient => m.sign_canonical(),
        _ => m,
    }
}

/// Multiplicative closure of `gens` (canonicalized for the given kind),
/// multiplying on both sides.
fn closure(dim: usize, kind: GroupKind, gens: &[Multivector], ceiling: usize) -> Result<Vec<Multivector>, GroupError> {
    let one = Multivector::one(dim);
    let mut seen: HashSet<Multivector> = HashSet::from([one.clone()]);
    let mut order = vec![one.clone()];
    let mut queue = VecDeque::from([one]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            for y in [x.geometric_product(g)?, g.geometric_product(&x)?] {
                let y = canonical(kind, y);
                if seen.contains(&y) {
                    continue;
                }
                if seen.len() >= ceiling {
                    return Err(GroupError::CeilingExceeded(ceiling));
                }
                seen.insert(y.clone());
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

impl VersorGroup {
    fn assemble(dim: usize, kind: GroupKind, mut elements: Vec<Multivector>, generator_values: Vec<usize>) -> Self {
        let gens: Vec<Multivector> = generator_values.iter().map(|&i| elements[i].clone()).collect();
        elements.sort_by(|a, b| a.cmp_desc(b));
        let index: HashMap<Multivector, usize> = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut generators: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        generators.sort_unstable();
        generators.dedup();
        VersorGroup {
            dim,
            kind,
            elements,
            index,
            generators,
            classes: OnceLock::new(),
            table: OnceLock::new(),
        }
    }

    fn from_generators(
        dim: usize,
        kind: GroupKind,
        gens: Vec<Multivector>,
        ceiling: usize,
    ) -> Result<Self, GroupError> {
        let gens: Vec<Multivector> = gens.into_iter().map(|g| canonical(kind, g)).collect();
        let mut elements = closure(dim, kind, &gens, ceiling)?;
        let mut positions = Vec::with_capacity(gens.len());
        for g in &gens {
            match elements.iter().position(|e| e == g) {
                Some(p) => positions.push(p),
                None => {
                    // Only possible for a generator equal to 1.
                    elements.push(g.clone());
                    positions.push(elements.len() - 1);
                }
            }
        }
        Ok(Self::assemble(dim, kind, elements, positions))
    }

    /// The group generated by the unit reflections `±α_i`.
    pub fn pin(roots: &[Vector], ceiling: usize) -> Result<Self, GroupError> {
        let first = roots.first().ok_or(GroupError::Empty)?;
        let dim = first.len();
        let mut gens = Vec::with_capacity(2 * roots.len());
        for r in roots {
            if r.len() != dim {
                return Err(CliffordError::DimensionMismatch(dim, r.len()).into());
            }
            let u = normalize_vector(&Multivector::vector(r))?;
            gens.push(-&u);
            gens.push(u);
        }
        Self::from_generators(dim, GroupKind::Pin, gens, ceiling)
    }

    /// The even elements of a Pin group, generated by products of pairs of
    /// its generators.
    pub fn even_subgroup(&self) -> Result<Self, GroupError> {
        if self.kind != GroupKind::Pin {
            return Err(GroupError::WrongKind {
                expected: GroupKind::Pin,
                found: self.kind,
            });
        }
        let elements: Vec<Multivector> = self
            .elements
            .iter()
            .filter(|e| e.parity() == Some(Parity::Even))
            .cloned()
            .collect();
        let odd: Vec<&Multivector> = self.generators.iter().map(|&i| &self.elements[i]).collect();
        let mut gens = HashSet::new();
        for a in &odd {
            for b in &odd {
                gens.insert(a.geometric_product(b)?);
            }
        }
        let positions = elements
            .iter()
            .enumerate()
            .filter(|(_, e)| gens.contains(*e))
            .map(|(i, _)| i)
            .collect();
        Ok(Self::assemble(self.dim, GroupKind::Spin, elements, positions))
    }

    /// Spin elements modulo ±1, each represented by the sign choice whose
    /// first nonzero coefficient is positive.
    pub fn rotation_quotient(&self) -> Result<Self, GroupError> {
        if self.kind != GroupKind::Spin {
            return Err(GroupError::WrongKind {
                expected: GroupKind::Spin,
                found: self.kind,
            });
        }
        let minus_one = -Multivector::one(self.dim);
        if !self.index.contains_key(&minus_one) {
            return Err(GroupError::NoMinusOne);
        }
        let mut seen = HashSet::new();
        let elements: Vec<Multivector> = self
            .elements
            .iter()
            .map(|e| e.sign_canonical())
            .filter(|e| seen.insert(e.clone()))
            .collect();
        let gens: HashSet<Multivector> = self
            .generators
            .iter()
            .map(|&i| self.elements[i].sign_canonical())
            .collect();
        let positions = elements
            .iter()
            .enumerate()
            .filter(|(_, e)| gens.contains(*e))
            .map(|(i, _)| i)
            .collect();
        Ok(Self::assemble(
            self.dim,
            GroupKind::RotationQuotient,
            elements,
            positions,
        ))
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Multivector] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Multivector {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Index of a multivector, after sign canonicalization for quotients.
    pub fn index_of(&self, m: &Multivector) -> Option<usize> {
        match self.kind {
            GroupKind::RotationQuotient => self.index.get(&m.sign_canonical()).copied(),
            _ => self.index.get(m).copied(),
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `g_i · g_j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        if let Some(t) = self.table.get() {
            return t[i * self.order() + j] as usize;
        }
        self.product_index(i, j)
    }

    fn product_index(&self, i: usize, j: usize) -> usize {
        let p = &self.elements[i] * &self.elements[j];
        self.index_of(&p).expect("group is closed under products")
    }

    /// Full multiplication table, computed once.
    pub fn cayley_table(&self) -> &[u32] {
        self.table.get_or_init(|| {
            let n = self.order();
            let mut t = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    t.push(self.product_index(i, j) as u32);
                }
            }
            t
        })
    }

    /// Index of the inverse, which for unit versors is the reverse.
    pub fn inverse(&self, i: usize) -> usize {
        self.index_of(&self.elements[i].reverse())
            .expect("group is closed under reversal")
    }

    /// `reverse(g_h) · g_i · g_h`.
    pub fn conjugate(&self, i: usize, h: usize) -> usize {
        self.mul(self.mul(self.inverse(h), i), h)
    }

    /// Least `k ≥ 1` with `g^k = 1`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != self.identity() {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Order of an arbitrary unit versor under repeated multiplication, or
    /// `None` if the powers do not return to 1 within `limit` steps.
    pub fn versor_order(g: &Multivector, limit: usize) -> Option<usize> {
        let one = Multivector::one(g.dimension());
        let mut x = g.clone();
        for k in 1..=limit {
            if x == one {
                return Some(k);
            }
            x = &x * g;
        }
        None
    }

    /// Conjugacy classes, ordered by element order and then by smallest
    /// member; each class is sorted.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut classes: Vec<Vec<usize>> = Vec::new();
            let conjugators: Vec<usize> = if self.generators.is_empty() {
                (0..n).collect()
            } else {
                self.generators.clone()
            };
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut members = vec![start];
                class_of[start] = id;
                let mut k = 0;
                while k < members.len() {
                    let x = members[k];
                    for &h in &conjugators {
                        let y = self.conjugate(x, h);
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            members.push(y);
                        }
                    }
                    k += 1;
                }
                members.sort_unstable();
                classes.push(members);
            }
            classes.sort_by_key(|c| (self.element_order(c[0]), c[0]));
            classes
        })
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.conjugacy_classes().iter().map(Vec::len).collect()
    }

    /// Index of the class containing element `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.binary_search(&i).is_ok())
            .expect("classes cover the group")
    }

    pub fn centralizer_order(&self, i: usize) -> usize {
        (0..self.order()).filter(|&h| self.mul(h, i) == self.mul(i, h)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Family;

    fn pin(f: Family) -> VersorGroup {
        VersorGroup::pin(&f.simple_roots(), DEFAULT_GROUP_CEILING).unwrap()
    }

    #[test]
    fn orders() {
        for (family, n) in [
            (Family::A1Cubed, 16),
            (Family::A3, 48),
            (Family::B3, 96),
            (Family::H3, 240),
        ] {
            let p = pin(family);
            assert_eq!(p.order(), n, "{family}");
            let s = p.even_subgroup().unwrap();
            assert_eq!(s.order(), n / 2);
            assert_eq!(s.rotation_quotient().unwrap().order(), n / 4);
        }
    }

    #[test]
    fn identity_is_first_and_minus_one_present() {
        let s = pin(Family::H3).even_subgroup().unwrap();
        assert_eq!(s.element(0), &Multivector::one(3));
        let m = s.index_of(&-Multivector::one(3)).unwrap();
        assert_eq!(s.element_order(m), 2);
        assert_eq!(s.element_order(0), 1);
    }

    #[test]
    fn binary_icosahedral_classes() {
        let s = pin(Family::H3).even_subgroup().unwrap();
        let mut sizes = s.class_sizes();
        assert_eq!(sizes.len(), 9);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 12, 12, 12, 12, 20, 20, 30]);
        let q = s.rotation_quotient().unwrap();
        let mut sizes = q.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn quaternion_group_from_orthogonal_roots() {
        let s = pin(Family::A1Cubed).even_subgroup().unwrap();
        assert_eq!(s.order(), 8);
        let expected = [0b000, 0b011, 0b110, 0b101];
        for e in s.elements() {
            assert!(expected.iter().any(|&b| !e.coeff(b).is_zero()));
        }
        assert_eq!(s.class_sizes(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn generated_subgroups_are_the_whole_group() {
        for family in [Family::A1Cubed, Family::A3, Family::B3, Family::H3] {
            let s = pin(family).even_subgroup().unwrap();
            let gens: Vec<Multivector> = s.generators().iter().map(|&i| s.element(i).clone()).collect();
            let closed = closure(3, GroupKind::Spin, &gens, DEFAULT_GROUP_CEILING).unwrap();
            assert_eq!(closed.len(), s.order(), "{family}");
        }
    }

    #[test]
    fn wrong_kinds_rejected() {
        let p = pin(Family::A3);
        assert!(matches!(p.rotation_quotient(), Err(GroupError::WrongKind { .. })));
        let s = p.even_subgroup().unwrap();
        assert!(matches!(s.even_subgroup(), Err(GroupError::WrongKind { .. })));
    }

    #[test]
    fn ceiling() {
        let e8 = Family::E8.simple_roots();
        assert_eq!(
            VersorGroup::pin(&e8, 500).unwrap_err(),
            GroupError::CeilingExceeded(500)
        );
    }
}
