//! Workloads shared by the criterion benches.

use std::sync::Arc;

use flagspin::classical::{enumerate_params, ClassicalFamily, ClassicalParams};
use flagspin::{IntMatrix, LieType, RootSystem};

pub fn root_system(lt: LieType) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(lt).expect("supported type"))
}

/// All classical parameter sets up to `max_rank`, every family.
pub fn classical_sweep(max_rank: usize) -> Vec<ClassicalParams> {
    ClassicalFamily::ALL
        .iter()
        .flat_map(|&f| enumerate_params(f, max_rank))
        .collect()
}

/// Deterministic dense matrices with small entries.
pub fn sample_matrices(count: usize, rows: usize, cols: usize) -> Vec<IntMatrix> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 19) as i64 - 9
    };
    (0..count)
        .map(|_| {
            let data = (0..rows * cols).map(|_| next()).collect();
            IntMatrix::new(rows, cols, data).expect("shape matches")
        })
        .collect()
}
