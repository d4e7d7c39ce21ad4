//! Exact number-theoretic kernels.

mod factor;
mod functions;
mod kloosterman;
mod ramanujan;
mod table;

pub use factor::{factorize, is_prime, FactoredInteger, MAX_INPUT, SIEVE_LIMIT};
pub use functions::{
    carmichael_lambda, euler_totient, has_primitive_root, mangoldt, mangoldt_b, moebius, multiplicative_order,
    power_cycle, primitive_root, CycleTable,
};
pub use kloosterman::{
    kloosterman_pairs, kloosterman_sum, mod_inverse, KloostermanPair, KloostermanTable, KloostermanValue,
};
pub use ramanujan::{ramanujan_sum, ramanujan_sum_bruteforce, RamanujanOracle};
pub use table::{tabulate, TableFunction};
