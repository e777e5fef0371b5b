//! Character tables from the class algebra: the central characters are the
//! common eigenvectors of the class-multiplication matrices.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::FieldScalar;
use crate::versorgroup::VersorGroup;

use super::RepError;

pub const DEFAULT_SEED: u64 = 0x5eed_c1a55;

const TOLERANCE: f64 = 1e-9;
const RETRIES: usize = 32;

/// One character value: numeric, plus the exact value when it was
/// recognized as `p + qτ` or `p + q√2` with `p, q ∈ ½ℤ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub value: Complex64,
    pub exact: Option<FieldScalar>,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_order: usize,
    pub class_sizes: Vec<usize>,
    /// Element order of each class.
    pub class_orders: Vec<usize>,
    /// Irreducible degrees, ascending.
    pub degrees: Vec<usize>,
    /// `rows[i][k]` is the `i`-th irreducible character on class `k`.
    pub rows: Vec<Vec<Entry>>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn value(&self, irrep: usize, class: usize) -> Complex64 {
        self.rows[irrep][class].value
    }

    /// `(1/|G|) Σ_k |C_k| a_k conj(b_k)` for class functions `a`, `b`.
    pub fn inner(&self, a: &[Complex64], b: &[Complex64]) -> Complex64 {
        let s: Complex64 = (0..self.num_classes())
            .map(|k| a[k] * b[k].conj() * self.class_sizes[k] as f64)
            .sum();
        s / self.group_order as f64
    }

    pub fn row_values(&self, irrep: usize) -> Vec<Complex64> {
        self.rows[irrep].iter().map(|e| e.value).collect()
    }

    /// Largest deviation from row orthonormality and from column
    /// orthogonality.
    pub fn orthogonality_residual(&self) -> f64 {
        let r = self.rows.len();
        let mut worst: f64 = 0.0;
        for i in 0..r {
            for j in 0..r {
                let target = if i == j { 1.0 } else { 0.0 };
                let d = self.inner(&self.row_values(i), &self.row_values(j)) - target;
                worst = worst.max(d.norm());
            }
        }
        let n = self.num_classes();
        for k in 0..n {
            for l in 0..n {
                let s: Complex64 = (0..r).map(|i| self.value(i, k) * self.value(i, l).conj()).sum();
                let target = if k == l {
                    self.group_order as f64 / self.class_sizes[k] as f64
                } else {
                    0.0
                };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    pub fn all_exact(&self) -> bool {
        self.rows.iter().flatten().all(|e| e.exact.is_some())
    }
}

/// Recognizes `x` as `p + qτ` or `p + q√2` with halves `p, q`, |q| ≤ 10.
pub fn recognize_real(x: f64) -> Option<FieldScalar> {
    let tau = FieldScalar::tau();
    let sqrt2 = FieldScalar::sqrt2();
    let mut best: Option<(u32, FieldScalar)> = None;
    for q2 in -20i64..=20 {
        for surd in [&tau, &sqrt2] {
            if q2 == 0 && std::ptr::eq(surd, &sqrt2) {
                continue;
            }
            let q = FieldScalar::from_ratio(q2, 2);
            let rest = x - q2 as f64 / 2.0 * surd.to_f64();
            let p2 = (2.0 * rest).round();
            if (2.0 * rest - p2).abs() < 2.0 * TOLERANCE && p2.abs() < 1e12 {
                let candidate = &FieldScalar::from_ratio(p2 as i64, 2) + &(&q * surd);
                let cost = q2.unsigned_abs() as u32;
                if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                    best = Some((cost, candidate));
                }
            }
        }
    }
    best.map(|(_, v)| v)
}

fn class_coefficients(group: &VersorGroup) -> Vec<Vec<Vec<i64>>> {
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let mut class_of = vec![0usize; group.order()];
    for (k, c) in classes.iter().enumerate() {
        for &g in c {
            class_of[g] = k;
        }
    }
    group.cayley_table();
    // counts[i][j][k]: pairs (x ∈ C_i, y ∈ C_j) with xy ∈ C_k.
    let mut coeffs = vec![vec![vec![0i64; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for &x in &classes[i] {
                for &y in &classes[j] {
                    coeffs[i][j][class_of[group.mul(x, y)]] += 1;
                }
            }
            for k in 0..r {
                debug_assert_eq!(coeffs[i][j][k] % classes[k].len() as i64, 0);
                coeffs[i][j][k] /= classes[k].len() as i64;
            }
        }
    }
    coeffs
}

/// Characteristic polynomial coefficients, highest degree first, by the
/// Faddeev–LeVerrier recursion in exact arithmetic.
fn characteristic_polynomial(m: &[Vec<i64>]) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(1))];
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{k−1}·I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &a[i][l] * &mk[l][j];
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[k - 1];
        }
        mk = next;
        let mut trace = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &a[i][l] * &mk[l][i];
            }
        }
        coeffs.push(-trace / BigRational::from_integer(BigInt::from(k as i64)));
    }
    coeffs
}

fn eval(poly: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in poly {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of a monic polynomial by Aberth iteration.
fn polynomial_roots(poly: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = poly.len() - 1;
    if n == 0 {
        return Some(Vec::new());
    }
    let bound = 1.0 + poly[1..].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.5, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = eval(poly, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[k] -= step;
            moved = moved.max(step.norm() / (1.0 + z[k].norm()));
        }
        if moved < 1e-15 {
            return Some(z);
        }
    }
    // Accept if residuals are small even without full convergence.
    let scale = bound.powi(n as i32).max(1.0);
    z.iter().all(|&x| eval(poly, x).0.norm() < 1e-6 * scale).then_some(z)
}

/// Null vector of the nearly singular `a`, by elimination with complete
/// pivoting and back-substitution from the smallest pivot.
fn null_vector(mut a: Vec<Vec<Complex64>>) -> Vec<Complex64> {
    let n = a.len();
    let mut col_perm: Vec<usize> = (0..n).collect();
    for step in 0..n {
        let (mut pr, mut pc, mut best) = (step, step, -1.0);
        for (r, row) in a.iter().enumerate().skip(step) {
            for (c, x) in row.iter().enumerate().skip(step) {
                if x.norm() > best {
                    best = x.norm();
                    pr = r;
                    pc = c;
                }
            }
        }
        a.swap(step, pr);
        for row in a.iter_mut() {
            row.swap(step, pc);
        }
        col_perm.swap(step, pc);
        if step == n - 1 {
            break;
        }
        let pivot = a[step][step];
        for r in step + 1..n {
            let f = a[r][step] / pivot;
            if f.norm() == 0.0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (x, &p) in bottom[0][step..].iter_mut().zip(&top[step][step..]) {
                *x -= f * p;
            }
        }
    }
    // The last pivot is ~0; set that unknown to 1 and solve upwards.
    let mut y = vec![Complex64::new(0.0, 0.0); n];
    y[n - 1] = Complex64::new(1.0, 0.0);
    for i in (0..n - 1).rev() {
        let s: Complex64 = (i + 1..n).map(|c| a[i][c] * y[c]).sum();
        y[i] = -s / a[i][i];
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for (k, &c) in col_perm.iter().enumerate() {
        x[c] = y[k];
    }
    x
}

fn attempt(
    coeffs: &[Vec<Vec<i64>>],
    sizes: &[usize],
    order: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<(usize, Vec<Complex64>)>, String> {
    let r = sizes.len();
    let weights: Vec<i64> = (0..r).map(|_| rng.gen_range(1..=7)).collect();
    // (M)_{jk} = Σ_i w_i c_ij^k; right eigenvectors are central characters.
    let m: Vec<Vec<i64>> = (0..r)
        .map(|j| {
            (0..r)
                .map(|k| (0..r).map(|i| weights[i] * coeffs[i][j][k]).sum())
                .collect()
        })
        .collect();
    let poly: Vec<Complex64> = characteristic_polynomial(&m)
        .iter()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect();
    let roots = polynomial_roots(&poly).ok_or("eigenvalue iteration did not converge")?;
    let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for a in 0..r {
        for b in a + 1..r {
            if (roots[a] - roots[b]).norm() < 1e-7 * scale {
                return Err("eigenvalues not separated".into());
            }
        }
    }
    let mut characters = Vec::with_capacity(r);
    for lambda in roots {
        let shifted: Vec<Vec<Complex64>> = (0..r)
            .map(|j| {
                (0..r)
                    .map(|k| {
                        let d = if j == k { lambda } else { Complex64::new(0.0, 0.0) };
                        Complex64::new(m[j][k] as f64, 0.0) - d
                    })
                    .collect()
            })
            .collect();
        let v = null_vector(shifted);
        if v[0].norm() < 1e-12 {
            return Err("central character vanishes on the identity".into());
        }
        let omega: Vec<Complex64> = v.iter().map(|x| x / v[0]).collect();
        // Σ_k |C_k||χ_k|² = |G| with χ_k = d·ω_k/|C_k|.
        let s: f64 = (0..r).map(|k| omega[k].norm_sqr() / sizes[k] as f64).sum();
        let d = (order as f64 / s).sqrt();
        let degree = d.round();
        if (d - degree).abs() > 1e-6 || degree < 1.0 {
            return Err(format!("degree {d} is not an integer"));
        }
        let chi: Vec<Complex64> = (0..r).map(|k| omega[k] * degree / sizes[k] as f64).collect();
        characters.push((degree as usize, chi));
    }
    let sum_sq: usize = characters.iter().map(|(d, _)| d * d).sum();
    if sum_sq != order {
        return Err(format!("squared degrees sum to {sum_sq}, not {order}"));
    }
    Ok(characters)
}

fn clean(x: f64) -> f64 {
    if x.abs() < TOLERANCE {
        0.0
    } else {
        x
    }
}

/// Character table of a finite versor group, rows sorted by degree and then
/// by character values; seeded so runs are reproducible.
pub fn character_table(group: &VersorGroup, seed: u64) -> Result<CharacterTable, RepError> {
    let classes = group.conjugacy_classes();
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let class_orders: Vec<usize> = classes.iter().map(|c| group.element_order(c[0])).collect();
    let coeffs = class_coefficients(group);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_error = String::new();
    for _ in 0..RETRIES {
        match attempt(&coeffs, &sizes, group.order(), &mut rng) {
            Ok(mut characters) => {
                for (_, chi) in characters.iter_mut() {
                    for z in chi.iter_mut() {
                        *z = Complex64::new(clean(z.re), clean(z.im));
                    }
                }
                characters.sort_by(|(da, a), (db, b)| {
                    da.cmp(db).then_with(|| {
                        for (x, y) in a.iter().zip(b) {
                            let o = y.re.total_cmp(&x.re).then(y.im.total_cmp(&x.im));
                            if (x - y).norm() > 1e-6 && o != std::cmp::Ordering::Equal {
                                return o;
                            }
                        }
                        std::cmp::Ordering::Equal
                    })
                });
                let degrees = characters.iter().map(|(d, _)| *d).collect();
                let rows = characters
                    .into_iter()
                    .map(|(_, chi)| {
                        chi.into_iter()
                            .map(|z| Entry {
                                value: z,
                                exact: if z.im == 0.0 { recognize_real(z.re) } else { None },
                            })
                            .collect()
                    })
                    .collect();
                return Ok(CharacterTable {
                    group_order: group.order(),
                    class_sizes: sizes,
                    class_orders,
                    degrees,
                    rows,
                });
            }
            Err(e) => last_error = e,
        }
    }
    Err(RepError::CharacterTable(last_error))
}
