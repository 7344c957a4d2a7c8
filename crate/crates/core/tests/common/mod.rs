//! Test-only oracles that never touch the Cartan-string machinery.
//!
//! `LatticeOracle` realizes E6, E7 and E8 inside the E8 lattice with all
//! coordinates doubled so everything stays integral. Positive roots come from
//! a linear functional, simple-root coordinates from walking up by simple
//! roots inside the explicit root set.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;
use std::sync::Arc;

use flagspin::rootsys::cartan_matrix;
use flagspin::{Family, LieType, RootSystem};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

pub fn system(lt: LieType) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(lt).expect("supported type"))
}

type V = [i64; 8];

fn dot(a: &V, b: &V) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &V, b: &V) -> V {
    std::array::from_fn(|i| a[i] + b[i])
}

/// Doubled E8 roots: `2(±e_i ± e_j)` and `(±1, ..., ±1)` with an even
/// number of minus signs.
fn e8_roots() -> Vec<V> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = [0; 8];
                v[i] = si;
                v[j] = sj;
                out.push(v);
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 }));
        }
    }
    out
}

/// Bourbaki simple roots of E8, doubled.
fn e8_simple() -> Vec<V> {
    let mut s = vec![[1, -1, -1, -1, -1, -1, -1, 1], [2, 2, 0, 0, 0, 0, 0, 0]];
    for k in 0..6 {
        let mut v = [0; 8];
        v[k] = -2;
        v[k + 1] = 2;
        s.push(v);
    }
    s
}

pub struct LatticeOracle {
    pub lie_type: LieType,
    /// `node_map[i]` is the Bourbaki index (0-based) of library node `i + 1`.
    pub node_map: Vec<usize>,
    /// Positive roots with their Bourbaki simple-root coordinates.
    positive: Vec<(V, Vec<i64>)>,
    simple: Vec<V>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleFlag {
    pub b2: usize,
    pub d: usize,
    pub dim: usize,
    /// Koszul numbers on black nodes, ascending library node order.
    pub koszul: Vec<i64>,
}

impl LatticeOracle {
    pub fn new(lt: LieType) -> Self {
        let rank = lt.rank();
        assert!(matches!(lt.family(), Family::E6 | Family::E7 | Family::E8));
        let simple: Vec<V> = e8_simple().into_iter().take(rank).collect();
        // E7 lives in the complement of e7 + e8, E6 also of e6 - e7.
        let mut walls: Vec<V> = Vec::new();
        if rank <= 7 {
            walls.push([0, 0, 0, 0, 0, 0, 1, 1]);
        }
        if rank == 6 {
            walls.push([0, 0, 0, 0, 0, 1, -1, 0]);
        }
        let functional: V = [0, 1, 2, 3, 4, 5, 6, 23];
        let roots: Vec<V> = e8_roots()
            .into_iter()
            .filter(|r| walls.iter().all(|w| dot(r, w) == 0))
            .collect();
        assert!(simple.iter().all(|s| dot(s, &functional) > 0 && roots.contains(s)));
        let positive_set: BTreeSet<V> =
            roots.iter().copied().filter(|r| dot(r, &functional) > 0).collect();
        assert_eq!(positive_set.len(), lt.positive_root_count());

        let mut coords: HashMap<V, Vec<i64>> = HashMap::new();
        let mut frontier: Vec<V> = Vec::new();
        for (i, s) in simple.iter().enumerate() {
            let mut c = vec![0; rank];
            c[i] = 1;
            coords.insert(*s, c);
            frontier.push(*s);
        }
        while let Some(r) = frontier.pop() {
            for (i, s) in simple.iter().enumerate() {
                let next = add(&r, s);
                if positive_set.contains(&next) && !coords.contains_key(&next) {
                    let mut c = coords[&r].clone();
                    c[i] += 1;
                    coords.insert(next, c);
                    frontier.push(next);
                }
            }
        }
        assert_eq!(coords.len(), positive_set.len(), "every positive root reached");
        let positive: Vec<(V, Vec<i64>)> = positive_set.iter().map(|r| (*r, coords[r].clone())).collect();

        let bourbaki: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * dot(&simple[i], &simple[j]) / dot(&simple[j], &simple[j])).collect())
            .collect();
        let node_map = match_diagrams(&cartan_matrix(lt), &bourbaki)
            .expect("diagrams are isomorphic");
        LatticeOracle { lie_type: lt, node_map, positive, simple }
    }

    /// `2 sigma_G` over library simple roots.
    pub fn two_sigma(&self) -> Vec<i64> {
        self.node_map.iter().map(|&b| self.positive.iter().map(|(_, c)| c[b]).sum()).collect()
    }

    /// Invariants of the painting whose white nodes (library numbering) are `white`.
    pub fn flag(&self, white: &[usize]) -> OracleFlag {
        let rank = self.node_map.len();
        let black: Vec<usize> = (1..=rank).filter(|j| !white.contains(j)).collect();
        let black_b: Vec<usize> = black.iter().map(|&j| self.node_map[j - 1]).collect();
        let complementary: Vec<&(V, Vec<i64>)> = self
            .positive
            .iter()
            .filter(|(_, c)| black_b.iter().any(|&b| c[b] != 0))
            .collect();
        let sigma = complementary.iter().fold([0; 8], |acc, (r, _)| add(&acc, r));
        let koszul = black_b
            .iter()
            .map(|&b| {
                let a = &self.simple[b];
                let num = 2 * dot(&sigma, a);
                let den = dot(a, a);
                assert_eq!(num % den, 0);
                num / den
            })
            .collect();
        let t_roots: BTreeSet<Vec<i64>> = complementary
            .iter()
            .map(|(_, c)| black_b.iter().map(|&b| c[b]).collect())
            .collect();
        OracleFlag { b2: black.len(), d: t_roots.len(), dim: 2 * complementary.len(), koszul }
    }
}

/// Some `p` with `lib[i][j] == other[p[i]][p[j]]`, by backtracking.
pub fn match_diagrams(lib: &[Vec<i64>], other: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn extend(lib: &[Vec<i64>], other: &[Vec<i64>], p: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = p.len();
        if i == lib.len() {
            return true;
        }
        for cand in 0..lib.len() {
            if used[cand] {
                continue;
            }
            if (0..i).all(|k| lib[i][k] == other[cand][p[k]] && lib[k][i] == other[p[k]][cand]) {
                p.push(cand);
                used[cand] = true;
                if extend(lib, other, p, used) {
                    return true;
                }
                p.pop();
                used[cand] = false;
            }
        }
        false
    }
    let mut p = Vec::new();
    let mut used = vec![false; lib.len()];
    extend(lib, other, &mut p, &mut used).then_some(p)
}
