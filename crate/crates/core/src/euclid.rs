//! Coordinate realizations of the root systems that admit one in a standard
//! orthonormal basis. Everything here is computed from explicit vectors and
//! inner products, independently of the Cartan-matrix pipeline, so it can be
//! used to cross-check Koszul numbers.

use num_rational::Ratio;

use crate::rootsys::{Family, LieType, RootSystemError};

pub type Q = Ratio<i64>;

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn half(n: i64) -> Q {
    Q::new(n, 2)
}

#[derive(Debug, Clone)]
pub struct EuclideanRealization {
    lie_type: LieType,
    dim: usize,
    simple_roots: Vec<Vec<Q>>,
    positive_roots: Vec<Vec<Q>>,
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(q(0), |acc, (x, y)| acc + *x * *y)
}

fn e(dim: usize, terms: &[(usize, i64)]) -> Vec<Q> {
    let mut v = vec![q(0); dim];
    for &(i, c) in terms {
        v[i] += q(c);
    }
    v
}

/// Ambient dimension, simple roots, all roots, positivity functional.
type Layout = (usize, Vec<Vec<Q>>, Vec<Vec<Q>>, Vec<i64>);

pub fn euclidean_realization(lt: LieType) -> Result<EuclideanRealization, RootSystemError> {
    let n = lt.rank();
    let (dim, simple, candidates, functional): Layout =
        match lt.family() {
            Family::A => {
                let dim = n + 1;
                let simple = (0..n).map(|i| e(dim, &[(i, 1), (i + 1, -1)])).collect();
                let mut roots = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            roots.push(e(dim, &[(i, 1), (j, -1)]));
                        }
                    }
                }
                (dim, simple, roots, (0..dim as i64).rev().collect())
            }
            Family::B | Family::C | Family::D => {
                let dim = n;
                let mut simple: Vec<Vec<Q>> =
                    (0..n - 1).map(|i| e(dim, &[(i, 1), (i + 1, -1)])).collect();
                simple.push(match lt.family() {
                    Family::B => e(dim, &[(n - 1, 1)]),
                    Family::C => e(dim, &[(n - 1, 2)]),
                    _ => e(dim, &[(n - 2, 1), (n - 1, 1)]),
                });
                let mut roots = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            roots.push(e(dim, &[(i, 1), (j, -1)]));
                            roots.push(e(dim, &[(i, 1), (j, 1)]));
                            roots.push(e(dim, &[(i, -1), (j, -1)]));
                        }
                    }
                    match lt.family() {
                        Family::B => {
                            roots.push(e(dim, &[(i, 1)]));
                            roots.push(e(dim, &[(i, -1)]));
                        }
                        Family::C => {
                            roots.push(e(dim, &[(i, 2)]));
                            roots.push(e(dim, &[(i, -2)]));
                        }
                        _ => {}
                    }
                }
                (dim, simple, roots, (1..=dim as i64).rev().collect())
            }
            Family::G2 => {
                let dim = 3;
                let simple = vec![e(dim, &[(0, -2), (1, 1), (2, 1)]), e(dim, &[(0, 1), (1, -1)])];
                let mut roots = Vec::new();
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            roots.push(e(dim, &[(i, 1), (j, -1)]));
                        }
                    }
                    let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
                    roots.push(e(dim, &[(i, 2), (others[0], -1), (others[1], -1)]));
                    roots.push(e(dim, &[(i, -2), (others[0], 1), (others[1], 1)]));
                }
                (dim, simple, roots, vec![-1, -2, 3])
            }
            Family::F4 => {
                let dim = 4;
                let simple = vec![
                    e(dim, &[(1, 1), (2, -1)]),
                    e(dim, &[(2, 1), (3, -1)]),
                    e(dim, &[(3, 1)]),
                    vec![half(1), half(-1), half(-1), half(-1)],
                ];
                let mut roots = Vec::new();
                for i in 0..4 {
                    roots.push(e(dim, &[(i, 1)]));
                    roots.push(e(dim, &[(i, -1)]));
                    for j in 0..4 {
                        if i != j {
                            roots.push(e(dim, &[(i, 1), (j, -1)]));
                            roots.push(e(dim, &[(i, 1), (j, 1)]));
                            roots.push(e(dim, &[(i, -1), (j, -1)]));
                        }
                    }
                }
                for signs in 0..16u32 {
                    roots.push(
                        (0..4)
                            .map(|b| if signs >> b & 1 == 1 { half(-1) } else { half(1) })
                            .collect(),
                    );
                }
                (dim, simple, roots, vec![8, 3, 2, 1])
            }
            _ => return Err(RootSystemError::Unsupported(lt)),
        };
    let f: Vec<Q> = functional.into_iter().map(q).collect();
    let mut positive: Vec<Vec<Q>> = Vec::new();
    for r in candidates {
        if dot(&r, &f) > q(0) && !positive.contains(&r) {
            positive.push(r);
        }
    }
    Ok(EuclideanRealization {
        lie_type: lt,
        dim,
        simple_roots: simple,
        positive_roots: positive,
    })
}

impl EuclideanRealization {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn simple_roots(&self) -> &[Vec<Q>] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vec<Q>] {
        &self.positive_roots
    }

    pub fn squared_lengths(&self) -> Vec<Q> {
        self.positive_roots.iter().map(|r| dot(r, r)).collect()
    }

    /// `2 (a_i, a_j) / (a_j, a_j)` from the simple roots.
    pub fn cartan_from_inner_products(&self) -> Vec<Vec<Q>> {
        let s = &self.simple_roots;
        s.iter()
            .map(|ai| s.iter().map(|aj| q(2) * dot(ai, aj) / dot(aj, aj)).collect())
            .collect()
    }

    /// Sum of the positive roots outside the span of the white simple roots.
    pub fn koszul_vector_sum(&self, white: &[usize]) -> Vec<Q> {
        let basis: Vec<Vec<Q>> = white.iter().map(|&w| self.simple_roots[w - 1].clone()).collect();
        let base_rank = rank(&basis);
        let mut sum = vec![q(0); self.dim];
        for r in &self.positive_roots {
            let mut ext = basis.clone();
            ext.push(r.clone());
            if rank(&ext) > base_rank {
                for (s, x) in sum.iter_mut().zip(r) {
                    *s += *x;
                }
            }
        }
        sum
    }

    /// `2 (sigma, a_j) / (a_j, a_j)` for every node `j`, where `sigma` is the
    /// Koszul sum for the given white nodes.
    pub fn koszul_weights(&self, white: &[usize]) -> Vec<Q> {
        let sigma = self.koszul_vector_sum(white);
        self.simple_roots
            .iter()
            .map(|a| q(2) * dot(&sigma, a) / dot(a, a))
            .collect()
    }
}

/// Rank of a list of rational vectors by Gaussian elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != q(0)) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != q(0) {
                let factor = m[i][c] / m[r][c];
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= factor * *y;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}
