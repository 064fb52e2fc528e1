//! Double shuffle relations `D(u,v,w) = u*(v⧢w) − v⧢(u*w)` on h0 and the
//! rank of their span in each weight.

mod eliminate;
mod exact;
mod generators;
mod modp;
mod table;

pub use eliminate::ModEliminator;
pub use exact::{rank_exact, ExactEliminator, DEFAULT_EXACT_BOUND};
pub use generators::{d_generator, enumerate_generators, generator_count, h0_dim, row_of, RowEngine};
pub use modp::{is_prime, ModP, DEFAULT_PRIMES, SPARE_PRIMES};
pub use table::{conjecture_table, rank_mod_p, rank_mod_primes, RankOptions, TableRow};

/// `d_0, …, d_K` with `d_0 = 1`, `d_1 = 0`, `d_2 = 1` and
/// `d_k = d_{k-2} + d_{k-3}`.
pub fn d_sequence(k_max: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let v = match k {
            0 => 1,
            1 => 0,
            2 => 1,
            _ => d[k - 2] + d[k - 3],
        };
        d.push(v);
    }
    d
}

/// Conjectured rank `2^{k-1} − d_k − d_{k-1}` of the relation space in weight `k ≥ 1`.
pub fn expected_rank(k: usize) -> u64 {
    assert!(k >= 1, "weight must be positive");
    let d = d_sequence(k);
    (1u64 << (k - 1)) - d[k] - d[k - 1]
}
