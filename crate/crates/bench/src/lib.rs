//! Shared inputs for the benchmarks.

use eulerlab_core::{CharF2, Monomial, Poly, RepE, Result, TriangularSystem, F2};

/// `g_j = T_j^d + T_1 T_j^{d-1} + 1` in `l` variables.
pub fn dense_system(l: usize, d: u32) -> Result<TriangularSystem<F2>> {
    let gens = (0..l)
        .map(|j| {
            let mut g = Poly::term(Monomial::var_power(l, j, d), F2::ONE);
            let mut e = vec![0u32; l];
            e[j] = d - 1;
            e[0] += 1;
            if j > 0 {
                g = &g + &Poly::term(Monomial::new(e), F2::ONE);
            }
            &g + &Poly::one(l)
        })
        .collect();
    TriangularSystem::new(gens)
}

/// `(T_1 + ... + T_l)^k`.
pub fn power_of_sum(l: usize, k: u32) -> Poly<F2> {
    Poly::linear(&vec![F2::ONE; l]).pow(k)
}

/// Every nontrivial character of `(Z/2)^l` with multiplicity `m`.
pub fn regular_part(l: usize, m: u64) -> Result<RepE> {
    let chars = (1..1u64 << l)
        .map(|b| CharF2::new(l, b))
        .collect::<Result<Vec<_>>>()?;
    RepE::from_entries(l, chars.into_iter().map(|a| (a, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(dense_system(3, 4).unwrap().quotient_dimension(), 64);
        assert_eq!(power_of_sum(2, 3).len(), 4);
        assert_eq!(regular_part(3, 2).unwrap().dim(), 14);
    }
}
