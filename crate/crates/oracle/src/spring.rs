use crate::OracleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Series,
    Parallel,
}

/// An ordered list of individual spring stiffnesses joined in one topology.
#[derive(Debug, Clone, PartialEq)]
pub struct SpringChain {
    elements: Vec<f64>,
    topology: Topology,
}

impl SpringChain {
    pub fn new(elements: Vec<f64>, topology: Topology) -> Result<Self, OracleError> {
        if elements.is_empty() {
            return Err(OracleError::InvalidChain("no elements".into()));
        }
        if let Some(bad) = elements.iter().find(|k| !(k.is_finite() && **k > 0.0)) {
            return Err(OracleError::InvalidChain(format!(
                "element stiffness must be finite and positive, got {bad}"
            )));
        }
        Ok(Self { elements, topology })
    }

    pub fn series(elements: Vec<f64>) -> Result<Self, OracleError> {
        Self::new(elements, Topology::Series)
    }

    pub fn parallel(elements: Vec<f64>) -> Result<Self, OracleError> {
        Self::new(elements, Topology::Parallel)
    }

    pub fn elements(&self) -> &[f64] {
        &self.elements
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }
}

/// Equivalent stiffness of the chain: `1 / Σ 1/k` in series, `Σ k` in
/// parallel.
///
/// Terms are sorted before a Neumaier-compensated sum, so the result is
/// bit-identical under any permutation of the elements.
pub fn reduce(chain: &SpringChain) -> f64 {
    let mut terms: Vec<f64> = match chain.topology {
        Topology::Series => chain.elements.iter().map(|k| 1.0 / k).collect(),
        Topology::Parallel => chain.elements.clone(),
    };
    terms.sort_by(f64::total_cmp);
    let total = neumaier_sum(&terms);
    match chain.topology {
        Topology::Series => 1.0 / total,
        Topology::Parallel => total,
    }
}

fn neumaier_sum(terms: &[f64]) -> f64 {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for &x in terms {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_identical_in_series_halve() {
        let k = 37.5;
        let chain = SpringChain::series(vec![k, k]).unwrap();
        assert_eq!(reduce(&chain), k / 2.0);
    }

    #[test]
    fn parallel_sums() {
        let chain = SpringChain::parallel(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(reduce(&chain), 6.0);
    }

    #[test]
    fn series_harmonic() {
        let chain = SpringChain::series(vec![1.0, 2.0, 3.0]).unwrap();
        let got = reduce(&chain);
        assert!((got - 6.0 / 11.0).abs() <= 1e-15 * (6.0 / 11.0));
    }

    #[test]
    fn rejects_bad_chains() {
        assert!(SpringChain::series(vec![]).is_err());
        assert!(SpringChain::parallel(vec![1.0, 0.0]).is_err());
        assert!(SpringChain::parallel(vec![1.0, -2.0]).is_err());
        assert!(SpringChain::series(vec![f64::NAN]).is_err());
    }

    fn stiffness_list() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(1e-6_f64..1e6, 1..64)
    }

    proptest! {
        #[test]
        fn series_never_exceeds_weakest(ks in stiffness_list()) {
            let min = ks.iter().cloned().fold(f64::INFINITY, f64::min);
            let k = reduce(&SpringChain::series(ks).unwrap());
            prop_assert!(k <= min * (1.0 + 1e-15));
        }

        #[test]
        fn permutation_is_bit_stable(ks in stiffness_list(), seed in any::<u64>()) {
            let mut shuffled = ks.clone();
            // Fisher-Yates driven by a simple LCG.
            let mut state = seed;
            for i in (1..shuffled.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
            }
            for topology in [Topology::Series, Topology::Parallel] {
                let a = reduce(&SpringChain::new(ks.clone(), topology).unwrap());
                let b = reduce(&SpringChain::new(shuffled.clone(), topology).unwrap());
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
        }

        #[test]
        fn parallel_matches_exact_integer_sum(ks in prop::collection::vec(1u32..1_000_000, 1..64)) {
            let exact: u64 = ks.iter().map(|&k| k as u64).sum();
            let chain = SpringChain::parallel(ks.iter().map(|&k| k as f64).collect()).unwrap();
            prop_assert_eq!(reduce(&chain), exact as f64);
        }
    }
}
