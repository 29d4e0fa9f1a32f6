/// Size guards for the structural brute-force operations.
///
/// All bounds are on exact group-theoretic quantities (orders, indices,
/// orbit sizes); exceeding one raises a dedicated error rather than
/// degrading to an approximate answer.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Maximum coset-space size for transversals and Mackey sums.
    pub coset_bound: u128,
    /// Maximum character-orbit size in orbit/stabilizer computations.
    pub orbit_bound: u128,
    /// Maximum group order for element-by-element brute force
    /// (center, centralizer, normal core, subnormal chains).
    pub brute_force_bound: u128,
    /// Maximum abelianization size in `lin_all` and extension fibers.
    pub lin_bound: u128,
    /// Maximum group order the exhaustive irreducible oracle accepts.
    pub oracle_max_order: u128,
    /// Maximum exponent k with |G| = p^k for full subgroup enumeration.
    pub enumerate_max_exponent: usize,
    /// Maximum group order for the naive induced-character inner product.
    pub naive_bound: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            coset_bound: 100_000,
            orbit_bound: 100_000,
            brute_force_bound: 1_000_000,
            lin_bound: 100_000,
            oracle_max_order: 243,
            enumerate_max_exponent: 5,
            naive_bound: 10_000,
        }
    }
}

impl Limits {
    /// Default limits with a different oracle order bound (e.g. 5^4 = 625).
    pub fn with_oracle_order(max_order: u128) -> Self {
        Limits {
            oracle_max_order: max_order,
            ..Limits::default()
        }
    }
}
