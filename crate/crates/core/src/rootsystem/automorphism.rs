//! Counting orthogonal symmetries of a finite root set by backtracking over
//! images of a base, pruned by inner products.

use std::collections::{HashMap, HashSet};

use crate::field::FieldScalar;
use crate::linalg::{self, Matrix, Vector};

use super::RootSystem;

/// Inner products of a root set, interned to small integer ids so that
/// comparisons during the search are integer compares.
#[derive(Debug, Clone)]
pub struct GramTable {
    n: usize,
    ids: Vec<u32>,
}

#[derive(Default)]
struct Interner {
    ids: HashMap<FieldScalar, u32>,
}

impl Interner {
    fn id(&mut self, x: FieldScalar) -> u32 {
        let next = self.ids.len() as u32;
        *self.ids.entry(x).or_insert(next)
    }
}

impl GramTable {
    fn build(roots: &[Vector], interner: &mut Interner) -> Self {
        let n = roots.len();
        let mut ids = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let id = interner.id(linalg::dot(&roots[i], &roots[j]));
                ids[i * n + j] = id;
                ids[j * n + i] = id;
            }
        }
        GramTable { n, ids }
    }

    pub fn new(roots: &[Vector]) -> Self {
        Self::build(roots, &mut Interner::default())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Interned id of `(r_i | r_j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.ids[i * self.n + j]
    }
}

/// Greedy base: repeatedly take the independent root with the most nonzero
/// inner products against those already chosen.
fn choose_base(roots: &[Vector], gram: &GramTable, zero_id: Option<u32>) -> Vec<usize> {
    let mut base: Vec<usize> = Vec::new();
    let mut rows: Vec<Vector> = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (i, r) in roots.iter().enumerate() {
            if base.contains(&i) {
                continue;
            }
            let links = base.iter().filter(|&&b| Some(gram.get(i, b)) != zero_id).count();
            if best.is_some_and(|(_, l)| l >= links) {
                continue;
            }
            rows.push(r.clone());
            let independent = Matrix::from_rows(rows.clone()).rank() == rows.len();
            rows.pop();
            if independent {
                best = Some((i, links));
            }
        }
        match best {
            Some((i, _)) => {
                base.push(i);
                rows.push(roots[i].clone());
            }
            None => return base,
        }
    }
}

struct Search<'a> {
    src: &'a GramTable,
    dst: &'a GramTable,
    base: &'a [usize],
    /// Signature of every source root against the base.
    src_signatures: Vec<Vec<u32>>,
}

impl<'a> Search<'a> {
    fn new(src: &'a GramTable, dst: &'a GramTable, base: &'a [usize]) -> Self {
        let src_signatures = (0..src.len())
            .map(|r| base.iter().map(|&b| src.get(r, b)).collect())
            .collect();
        Search {
            src,
            dst,
            base,
            src_signatures,
        }
    }

    fn candidate_ok(&self, level: usize, c: usize, images: &[usize]) -> bool {
        let b = self.base[level];
        if self.dst.get(c, c) != self.src.get(b, b) {
            return false;
        }
        images
            .iter()
            .enumerate()
            .all(|(j, &img)| self.dst.get(c, img) == self.src.get(b, self.base[j]))
    }

    /// Whether the base images extend to a bijection of the root sets; if so
    /// returns the image of each source root.
    fn complete(&self, images: &[usize]) -> Option<Vec<usize>> {
        let mut by_signature: HashMap<Vec<u32>, usize> = HashMap::with_capacity(self.dst.len());
        for s in 0..self.dst.len() {
            let sig: Vec<u32> = images.iter().map(|&b| self.dst.get(s, b)).collect();
            by_signature.insert(sig, s);
        }
        let mut used = HashSet::with_capacity(self.src.len());
        let mut map = Vec::with_capacity(self.src.len());
        for sig in &self.src_signatures {
            let &s = by_signature.get(sig)?;
            if !used.insert(s) {
                return None;
            }
            map.push(s);
        }
        Some(map)
    }

    fn first_extension(&self, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        let level = images.len();
        if level == self.base.len() {
            return self.complete(images);
        }
        for c in 0..self.dst.len() {
            if self.candidate_ok(level, c, images) {
                images.push(c);
                let found = self.first_extension(images);
                images.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
}

/// Order of the group of orthogonal maps of the span of `rs` that permute
/// its roots. Counted as a product of orbit lengths down a stabilizer chain
/// on the base, so only one extension per candidate needs to be found.
pub fn automorphism_order(rs: &RootSystem) -> u128 {
    let roots = rs.roots();
    if roots.is_empty() {
        return 1;
    }
    let mut interner = Interner::default();
    let zero_id = interner.id(FieldScalar::zero());
    let gram = GramTable::build(roots, &mut interner);
    let base = choose_base(roots, &gram, Some(zero_id));
    let search = Search::new(&gram, &gram, &base);
    let mut order: u128 = 1;
    for level in 0..base.len() {
        let fixed: Vec<usize> = base[..level].to_vec();
        let mut orbit = 0u128;
        for c in 0..gram.len() {
            if !search.candidate_ok(level, c, &fixed) {
                continue;
            }
            let mut images = fixed.clone();
            images.push(c);
            if search.first_extension(&mut images).is_some() {
                orbit += 1;
            }
        }
        order *= orbit;
    }
    order
}

/// A bijection `a → b` of root sets induced by an orthogonal map of the
/// spans, given as the index in `b` of each root of `a`.
pub fn find_isometry(a: &[Vector], b: &[Vector]) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    let mut interner = Interner::default();
    let zero_id = interner.id(FieldScalar::zero());
    let src = GramTable::build(a, &mut interner);
    let dst = GramTable::build(b, &mut interner);
    let base = choose_base(a, &src, Some(zero_id));
    let rank_b = Matrix::from_rows(b.to_vec()).rank();
    if rank_b != base.len() {
        return None;
    }
    Search::new(&src, &dst, &base).first_extension(&mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::super::{family_root_system, generate, Family, DEFAULT_ROOT_CEILING};
    use super::*;

    fn v(x: &[i64]) -> Vector {
        x.iter().map(|&c| FieldScalar::from_int(c)).collect()
    }

    #[test]
    fn a1_a1_has_eight() {
        let rs = generate(&[v(&[1, 0]), v(&[0, 1])], 100).unwrap();
        assert_eq!(automorphism_order(&rs), 8);
    }

    #[test]
    fn three_dimensional_families() {
        // Weyl group orders times diagram symmetries; -1 is already in W
        // for B3 and H3 but not for A3.
        let expect = [
            (Family::A1Cubed, 48),
            (Family::A3, 48),
            (Family::B3, 48),
            (Family::H3, 120),
        ];
        for (family, n) in expect {
            assert_eq!(automorphism_order(&family_root_system(family).unwrap()), n, "{family}");
        }
    }

    #[test]
    fn e8_is_its_weyl_group() {
        let rs = family_root_system(Family::E8).unwrap();
        assert_eq!(automorphism_order(&rs), 696_729_600);
    }

    #[test]
    fn isometry_between_rotated_copies() {
        let rs = family_root_system(Family::A3).unwrap();
        let swapped: Vec<Vector> = rs
            .roots()
            .iter()
            .map(|r| vec![r[2].clone(), r[0].clone(), r[1].clone()])
            .collect();
        let map = find_isometry(rs.roots(), &swapped).unwrap();
        for (i, &j) in map.iter().enumerate() {
            for (k, &l) in map.iter().enumerate() {
                assert_eq!(
                    linalg::dot(&rs.roots()[i], &rs.roots()[k]),
                    linalg::dot(&swapped[j], &swapped[l])
                );
            }
        }
        let b3 = generate(&Family::B3.simple_roots(), DEFAULT_ROOT_CEILING).unwrap();
        assert!(find_isometry(rs.roots(), b3.roots()).is_none());
    }
}
