//! Folding the E8 diagram onto H4 inside Cl(8): products of orthogonal
//! pairs of E8 simple roots generate an H4 Coxeter group, and the Coxeter
//! versors of both agree up to sign.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::clifford::{normalize_vector, vector_inner, CliffordError, Multivector, Versor};
use crate::linalg::Matrix;
use crate::rootsystem::{family_root_system, named_family, Family, RootSystemError};

/// Node pairs (1-based) folded together.
pub const FOLDING_PAIRS: [(usize, usize); 4] = [(1, 7), (2, 6), (3, 5), (4, 8)];

const ORDER_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error("folded roots {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("no power up to {0} returns to ±1")]
    OrderNotFound(usize),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Debug, Clone)]
pub struct FoldingConfiguration {
    /// Unit E8 simple roots as vectors of Cl(8).
    pub roots: Vec<Multivector>,
    pub pairs: [(usize, usize); 4],
    /// `a_k = α_i α_j` for the k-th pair.
    pub generators: Vec<Versor>,
}

pub fn build_folding() -> Result<FoldingConfiguration, FoldError> {
    let roots = Family::E8
        .simple_roots()
        .iter()
        .map(|r| normalize_vector(&Multivector::vector(r)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut generators = Vec::with_capacity(4);
    for &(i, j) in &FOLDING_PAIRS {
        if !vector_inner(&roots[i - 1], &roots[j - 1])?.is_zero() {
            return Err(FoldError::NotOrthogonal(i, j));
        }
        generators.push(Versor::new(roots[i - 1].geometric_product(&roots[j - 1])?)?);
    }
    Ok(FoldingConfiguration {
        roots,
        pairs: FOLDING_PAIRS,
        generators,
    })
}

/// Least `k ≥ 1` with `g^k = 1` and least `k ≥ 1` with `g^k = ±1`; the
/// second is the order of the orthogonal map.
pub fn versor_and_map_order(g: &Multivector) -> Result<(usize, usize), FoldError> {
    let one = Multivector::one(g.dimension());
    let minus_one = -&one;
    let mut x = g.clone();
    let mut map_order = None;
    for k in 1..=ORDER_LIMIT {
        if x == minus_one && map_order.is_none() {
            map_order = Some(k);
        }
        if x == one {
            return Ok((k, map_order.unwrap_or(k)));
        }
        x = x.geometric_product(g)?;
    }
    Err(FoldError::OrderNotFound(ORDER_LIMIT))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    /// Whether each `(α_i | α_j)` over the folding pairs vanishes.
    pub pairs_orthogonal: bool,
    /// `a_k² = −1` for each generator.
    pub squares_minus_one: Vec<bool>,
    /// Whether each sandwich map `s_{a_k}` squares to the identity.
    pub involutions: Vec<bool>,
    /// Least `k` with `(a_i a_j)^k = 1`.
    pub versor_orders: Vec<Vec<usize>>,
    /// Least `k` with `(a_i a_j)^k = ±1`, i.e. the order of `s_{a_i} s_{a_j}`.
    pub map_orders: Vec<Vec<usize>>,
    /// Coxeter matrix of the H4 diagram with the 5 on the last pair.
    pub expected: Vec<Vec<usize>>,
}

impl RelationReport {
    pub fn matches_h4(&self) -> bool {
        self.pairs_orthogonal
            && self.squares_minus_one.iter().all(|&b| b)
            && self.involutions.iter().all(|&b| b)
            && self.map_orders == self.expected
    }
}

pub fn verify_h4_relations(cfg: &FoldingConfiguration) -> Result<RelationReport, FoldError> {
    let minus_one = -Multivector::one(8);
    let pairs_orthogonal = cfg
        .pairs
        .iter()
        .map(|&(i, j)| vector_inner(&cfg.roots[i - 1], &cfg.roots[j - 1]))
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .all(|x| x.is_zero());
    let mut squares_minus_one = Vec::new();
    let mut involutions = Vec::new();
    for a in &cfg.generators {
        squares_minus_one.push(a.value() * a.value() == minus_one);
        let m = a.orthogonal_matrix()?;
        involutions.push((&m * &m).is_identity());
    }
    let n = cfg.generators.len();
    let mut versor_orders = vec![vec![0; n]; n];
    let mut map_orders = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = cfg.generators[i].value() * cfg.generators[j].value();
            let (v, m) = versor_and_map_order(&p)?;
            versor_orders[i][j] = v;
            map_orders[i][j] = m;
        }
    }
    let h4 = named_family("H4").expect("H4 is a named family");
    let expected = (0..n)
        .map(|i| (0..n).map(|j| h4.label(i, j) as usize).collect())
        .collect();
    Ok(RelationReport {
        pairs_orthogonal,
        squares_minus_one,
        involutions,
        versor_orders,
        map_orders,
        expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterReport {
    /// `W = α1 α2 … α8`.
    pub w: Multivector,
    pub w_is_unit: bool,
    /// Least `h` with `W^h = ±1`.
    pub coxeter_number: usize,
    /// Least `k` with `W^k = 1`.
    pub versor_order: usize,
    /// `a1 a2 a3 a4`.
    pub w_h4: Multivector,
    pub h4_coxeter_number: usize,
    /// `+1` or `−1` when `W_H4 = ±W`, else 0.
    pub h4_sign: i8,
    /// Simple roots `α_{c1}, …, α_{ck}` (1-based) whose product `C`
    /// satisfies `C̃ W_H4 C = ±W`.
    pub conjugator: Vec<usize>,
    /// The sign in `C̃ W_H4 C = ±W`, or 0 if no conjugator was found.
    pub conjugate_sign: i8,
    /// Whether the sandwich of `W` maps the 240 roots onto themselves.
    pub permutes_roots: bool,
}

pub fn coxeter_versor(cfg: &FoldingConfiguration) -> Result<CoxeterReport, FoldError> {
    let mut w = Multivector::one(8);
    for r in &cfg.roots {
        w = w.geometric_product(r)?;
    }
    let mut w_h4 = Multivector::one(8);
    for a in &cfg.generators {
        w_h4 = w_h4.geometric_product(a.value())?;
    }
    let (versor_order, coxeter_number) = versor_and_map_order(&w)?;
    let (_, h4_coxeter_number) = versor_and_map_order(&w_h4)?;
    let sign_of = |x: &Multivector| {
        if *x == w {
            1
        } else if *x == -&w {
            -1
        } else {
            0
        }
    };
    let order: Vec<usize> = cfg.pairs.iter().flat_map(|&(i, j)| [i - 1, j - 1]).collect();
    let (conjugator, conjugate_sign) = match conjugating_word(&cfg.roots, &order)? {
        Some(word) => {
            let mut c = Multivector::one(8);
            for &k in &word {
                c = c.geometric_product(&cfg.roots[k])?;
            }
            let conjugated = c.reverse().geometric_product(&w_h4)?.geometric_product(&c)?;
            (word.iter().map(|k| k + 1).collect(), sign_of(&conjugated))
        }
        None => (Vec::new(), 0),
    };
    let h4_sign = sign_of(&w_h4);
    let versor = Versor::new(w.clone())?;
    let w_is_unit = versor.is_unit();
    let matrix: Matrix = versor.orthogonal_matrix()?;
    let e8 = family_root_system(Family::E8)?;
    let permutes_roots = e8.roots().iter().all(|r| e8.contains(&matrix.mul_vec(r)));
    Ok(CoxeterReport {
        w,
        w_is_unit,
        coxeter_number,
        versor_order,
        w_h4,
        h4_coxeter_number,
        h4_sign,
        conjugator,
        conjugate_sign,
        permutes_roots,
    })
}

/// Breadth-first search from the ordering `start` of the simple roots to
/// the natural ordering. Swapping adjacent orthogonal roots only changes
/// the sign of the product; moving the first root to the end conjugates
/// the product by that root. Returns the roots moved, in order.
fn conjugating_word(roots: &[Multivector], start: &[usize]) -> Result<Option<Vec<usize>>, FoldError> {
    let n = roots.len();
    let mut orthogonal = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            orthogonal[i][j] = vector_inner(&roots[i], &roots[j])?.is_zero();
        }
    }
    let target: Vec<usize> = (0..n).collect();
    let mut previous: HashMap<Vec<usize>, (Vec<usize>, Option<usize>)> = HashMap::new();
    previous.insert(start.to_vec(), (Vec::new(), None));
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(state) = queue.pop_front() {
        if state == target {
            let mut word = Vec::new();
            let mut s = state;
            while s != start {
                let (p, moved) = previous[&s].clone();
                word.extend(moved);
                s = p;
            }
            word.reverse();
            return Ok(Some(word));
        }
        let mut next = Vec::new();
        let mut rotated = state[1..].to_vec();
        rotated.push(state[0]);
        next.push((rotated, Some(state[0])));
        for k in 0..n - 1 {
            if orthogonal[state[k]][state[k + 1]] {
                let mut swapped = state.clone();
                swapped.swap(k, k + 1);
                next.push((swapped, None));
            }
        }
        for (s, moved) in next {
            if !previous.contains_key(&s) {
                previous.insert(s.clone(), (state.clone(), moved));
                queue.push_back(s);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldScalar;

    #[test]
    fn folding_generators() {
        let cfg = build_folding().unwrap();
        assert_eq!(vector_inner(&cfg.roots[0], &cfg.roots[6]).unwrap(), FieldScalar::zero());
        for a in &cfg.generators {
            assert!(a.is_unit());
            assert_eq!(a.value() * a.value(), -Multivector::one(8));
        }
    }

    #[test]
    fn relations_are_h4() {
        let report = verify_h4_relations(&build_folding().unwrap()).unwrap();
        assert!(report.matches_h4(), "{report:?}");
        assert_eq!(report.map_orders[2][3], 5);
        assert_eq!(report.map_orders[0][1], 3);
        assert_eq!(report.map_orders[0][3], 2);
    }

    #[test]
    fn coxeter_number_thirty() {
        let report = coxeter_versor(&build_folding().unwrap()).unwrap();
        assert!(report.w_is_unit);
        assert_eq!(report.coxeter_number, 30);
        assert_eq!(report.h4_coxeter_number, 30);
        // a1a2a3a4 orders α7 before α6, which do not anticommute, so it is
        // a conjugate of ±W rather than ±W itself.
        assert_eq!(report.h4_sign, 0);
        assert_ne!(report.conjugate_sign, 0);
        assert!(!report.conjugator.is_empty());
        assert!(report.permutes_roots);
    }

    #[test]
    fn orders_of_small_versors() {
        let e12 = &Multivector::basis_vector(2, 1) * &Multivector::basis_vector(2, 2);
        assert_eq!(versor_and_map_order(&e12).unwrap(), (4, 2));
        assert_eq!(versor_and_map_order(&Multivector::one(2)).unwrap(), (1, 1));
    }
}
