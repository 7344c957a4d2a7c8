//! C-spaces: torus bundles over flag manifolds, given by integer generators
//! of a subalgebra `t0` of the center of the stabilizer.
//!
//! Coordinates: the T-weight lattice is `Z^v` on the black fundamental
//! weights, `t` carries the dual basis, and a row of `t0_rows` is an element
//! of `t` in that dual basis.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::flag::Painting;
use crate::intlat::{self, IntMatrix, LatticeBasis, LatticeError};
use crate::rootsys::LieType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CSpaceError {
    #[error("t0 row has length {got}, base has b2 = {expected}")]
    RowLength { expected: usize, got: usize },
    #[error("t0 rows are linearly dependent")]
    DependentRows,
    #[error("fiber dimension {0} is odd")]
    OddFiber(usize),
    #[error("{0} rows exceed b2 = {1}")]
    TooManyRows(usize, usize),
    #[error("base {0} is not spin")]
    BaseNotSpin(String),
    #[error("construction needs b2 >= 2, base has b2 = {0}")]
    BettiTooSmall(usize),
    #[error("painting {0} does not belong to {1}")]
    WrongGroup(String, LieType),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone)]
pub struct CSpace {
    base: Painting,
    t0_rows: IntMatrix,
    p1: LatticeBasis,
}

pub fn make_cspace(base: &Painting, rows: &[Vec<i64>]) -> Result<CSpace, CSpaceError> {
    let v = base.second_betti();
    if let Some(r) = rows.iter().find(|r| r.len() != v) {
        return Err(CSpaceError::RowLength { expected: v, got: r.len() });
    }
    if rows.len() > v {
        return Err(CSpaceError::TooManyRows(rows.len(), v));
    }
    let t0_rows = IntMatrix::from_rows(v, rows)?;
    if intlat::rank(&t0_rows)? != rows.len() {
        return Err(CSpaceError::DependentRows);
    }
    if !(v - rows.len()).is_multiple_of(2) {
        return Err(CSpaceError::OddFiber(v - rows.len()));
    }
    let p1 = intlat::kernel_lattice(&t0_rows)?;
    Ok(CSpace { base: base.clone(), t0_rows, p1 })
}

impl CSpace {
    pub fn base(&self) -> &Painting {
        &self.base
    }

    pub fn t0_rows(&self) -> &IntMatrix {
        &self.t0_rows
    }

    pub fn p1(&self) -> &LatticeBasis {
        &self.p1
    }

    pub fn fiber_dim(&self) -> usize {
        self.base.second_betti() - self.t0_rows.rows()
    }

    pub fn second_betti(&self) -> usize {
        self.t0_rows.rows()
    }

    pub fn is_m_space(&self) -> bool {
        self.t0_rows.rows() == 0
    }

    /// The Koszul vector of the base is even modulo `P_1`.
    pub fn is_spin(&self) -> Result<bool, CSpaceError> {
        Ok(intlat::member_mod2(self.base.koszul_vector(), &self.p1)?)
    }

    /// The Koszul vector of the base lies in `P_1`.
    pub fn has_trivial_c1(&self) -> Result<bool, CSpaceError> {
        Ok(intlat::member(&self.p1, self.base.koszul_vector())?)
    }
}

pub fn is_spin_cspace(cs: &CSpace) -> Result<bool, CSpaceError> {
    cs.is_spin()
}

pub fn has_trivial_c1(cs: &CSpace) -> Result<bool, CSpaceError> {
    cs.has_trivial_c1()
}

pub fn cspace_second_betti(cs: &CSpace) -> usize {
    cs.second_betti()
}

/// Fixed seed used by [`base_spin_implies_cspace_spin`].
pub const DEFAULT_SEED: u64 = 0x5eed_f1a9;

pub fn base_spin_implies_cspace_spin(base: &Painting, trials: usize) -> Result<bool, CSpaceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    base_spin_implies_cspace_spin_with(base, trials, &mut rng)
}

/// Builds `trials` random C-spaces over a spin base, cycling through every
/// admissible number of rows, and checks that each is spin.
pub fn base_spin_implies_cspace_spin_with<R: Rng>(
    base: &Painting,
    trials: usize,
    rng: &mut R,
) -> Result<bool, CSpaceError> {
    if !base.is_spin() {
        return Err(CSpaceError::BaseNotSpin(base.to_string()));
    }
    let v = base.second_betti();
    let sizes: Vec<usize> = (0..=v).filter(|m| (v - m).is_multiple_of(2)).collect();
    let mut all = true;
    for t in 0..trials {
        let rows = random_t0_rows(v, sizes[t % sizes.len()], rng)?;
        let cs = make_cspace(base, &rows)?;
        all &= cs.is_spin()?;
    }
    Ok(all)
}

/// `m` random rows of length `v` with entries in `[-5, 5]`, independent over
/// the rationals.
pub fn random_t0_rows<R: Rng>(v: usize, m: usize, rng: &mut R) -> Result<Vec<Vec<i64>>, CSpaceError> {
    loop {
        let rows: Vec<Vec<i64>> =
            (0..m).map(|_| (0..v).map(|_| rng.random_range(-5..=5)).collect()).collect();
        if intlat::rank(&IntMatrix::from_rows(v, &rows)?)? == m {
            return Ok(rows);
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpinCSpaceReport {
    pub pi0: Vec<usize>,
    pub pi1: Vec<usize>,
    pub fiber_dim: usize,
    pub cspace: CSpace,
}

/// Spin C-spaces over `base` obtained by killing the black nodes of `pi0`:
/// every Koszul number over `pi0` even, `pi1` of positive even size.
pub fn construct_spin_cspaces(base: &Painting) -> Result<Vec<SpinCSpaceReport>, CSpaceError> {
    let black = base.black();
    let v = black.len();
    if v < 2 {
        return Err(CSpaceError::BettiTooSmall(v));
    }
    let k = base.koszul_vector();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << v) {
        let in_pi0 = |i: usize| mask >> i & 1 == 1;
        let pi1_len = (0..v).filter(|&i| !in_pi0(i)).count();
        if pi1_len == 0 || pi1_len % 2 != 0 || (0..v).any(|i| in_pi0(i) && k[i] % 2 != 0) {
            continue;
        }
        let rows: Vec<Vec<i64>> = (0..v)
            .filter(|&i| in_pi0(i))
            .map(|i| (0..v).map(|j| i64::from(i == j)).collect())
            .collect();
        let cspace = make_cspace(base, &rows)?;
        if !cspace.is_spin()? {
            return Err(CSpaceError::Inconsistent(format!(
                "construction over {base} produced a non-spin C-space"
            )));
        }
        out.push(SpinCSpaceReport {
            pi0: (0..v).filter(|&i| in_pi0(i)).map(|i| black[i]).collect(),
            pi1: (0..v).filter(|&i| !in_pi0(i)).map(|i| black[i]).collect(),
            fiber_dim: pi1_len,
            cspace,
        });
    }
    out.sort_by(|a, b| a.pi0.cmp(&b.pi0));
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Fibration {
    pub base: Painting,
    pub fiber_dim: usize,
}

/// One fibration `T^{2k} -> M -> F` per spin base `F` and every even
/// `2 <= 2k <= b2(F)`.
pub fn enumerate_spin_fibrations(
    group: LieType,
    spin_flags: &[Painting],
) -> Result<Vec<Fibration>, CSpaceError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in spin_flags {
        if p.root_system().lie_type() != group {
            return Err(CSpaceError::WrongGroup(p.to_string(), group));
        }
        if !p.is_spin() {
            return Err(CSpaceError::BaseNotSpin(p.to_string()));
        }
        if !seen.insert(p.canonical_white()) {
            continue;
        }
        for fiber_dim in (2..=p.second_betti()).step_by(2) {
            out.push(Fibration { base: p.clone(), fiber_dim });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use std::sync::Arc;

    fn paint(lt: LieType, white: &[usize]) -> Painting {
        Painting::new(&Arc::new(RootSystem::new(lt).unwrap()), white.iter().copied()).unwrap()
    }

    #[test]
    fn e7_worked_example() {
        let base = paint(LieType::E7, &[1, 2, 3, 5]);
        assert_eq!(base.koszul_vector(), &[6, 3, 2]);
        let cs = make_cspace(&base, &[vec![1, 0, 0]]).unwrap();
        assert_eq!(cs.fiber_dim(), 2);
        assert_eq!(cs.p1().vectors(), &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(cs.is_spin().unwrap());
        assert_eq!(cspace_second_betti(&cs), 1);
    }

    #[test]
    fn validation() {
        let base = paint(LieType::E7, &[1, 2, 3, 5]);
        assert_eq!(
            make_cspace(&base, &[vec![1, 0, 0], vec![2, 0, 0]]).unwrap_err(),
            CSpaceError::DependentRows
        );
        assert_eq!(make_cspace(&base, &[]).unwrap_err(), CSpaceError::OddFiber(3));
        assert_eq!(
            make_cspace(&base, &[vec![1, 0]]).unwrap_err(),
            CSpaceError::RowLength { expected: 3, got: 2 }
        );
    }

    #[test]
    fn m_spaces() {
        let base = paint(LieType::E6, &[]);
        let cs = make_cspace(&base, &[]).unwrap();
        assert!(cs.is_m_space());
        assert_eq!(cs.fiber_dim(), 6);
        assert_eq!(cs.second_betti(), 0);
        assert_eq!(cs.p1(), &LatticeBasis::full(6));
        assert!(cs.is_spin().unwrap() && cs.has_trivial_c1().unwrap());
    }

    #[test]
    fn f4_examples() {
        let base = paint(LieType::F4, &[1]);
        assert_eq!(base.koszul_vector(), &[3, 2, 2]);
        let cs = make_cspace(&base, &[vec![0, 1, 1]]).unwrap();
        assert!(cs.is_spin().unwrap());
        let cs = make_cspace(&base, &[vec![2, -3, 0]]).unwrap();
        assert!(cs.has_trivial_c1().unwrap());
        assert!(cs.is_spin().unwrap());
    }

    #[test]
    fn constructions() {
        let reports = construct_spin_cspaces(&paint(LieType::E7, &[1, 2, 3, 5])).unwrap();
        let pi0: Vec<Vec<usize>> = reports.iter().map(|r| r.pi0.clone()).collect();
        assert_eq!(pi0, vec![vec![4], vec![7]]);
        assert!(reports.iter().all(|r| r.fiber_dim == 2));
        let g2 = construct_spin_cspaces(&paint(LieType::G2, &[])).unwrap();
        assert_eq!(g2.len(), 1);
        assert!(g2[0].pi0.is_empty() && g2[0].cspace.is_m_space());
        assert!(construct_spin_cspaces(&paint(LieType::E8, &[1, 2, 4, 6, 8])).unwrap().is_empty());
        assert_eq!(
            construct_spin_cspaces(&paint(LieType::F4, &[2, 3, 4])).unwrap_err(),
            CSpaceError::BettiTooSmall(1)
        );
    }

    #[test]
    fn random_lifts() {
        assert!(base_spin_implies_cspace_spin(&paint(LieType::F4, &[]), 50).unwrap());
        assert!(base_spin_implies_cspace_spin(&paint(LieType::E6, &[4, 5]), 50).unwrap());
        assert!(base_spin_implies_cspace_spin(&paint(LieType::E8, &[1, 2]), 50).unwrap());
        assert!(matches!(
            base_spin_implies_cspace_spin(&paint(LieType::G2, &[2]), 5),
            Err(CSpaceError::BaseNotSpin(_))
        ));
    }

    #[test]
    fn fibrations() {
        let g2 = paint(LieType::G2, &[]);
        let f = enumerate_spin_fibrations(LieType::G2, std::slice::from_ref(&g2)).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].fiber_dim, 2);
        assert!(enumerate_spin_fibrations(LieType::G2, &[paint(LieType::G2, &[1])]).is_err());
        assert!(enumerate_spin_fibrations(LieType::F4, &[g2]).is_err());
    }
}
