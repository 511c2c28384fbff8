use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial: one nonnegative exponent per variable.
///
/// Ordering is graded lexicographic (total degree first, then lex), which
/// fixes the canonical term order everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Expt(Vec<u32>);

impl Expt {
    pub fn new(entries: Vec<u32>) -> Self {
        Expt(entries)
    }

    /// All-zero exponent (the constant monomial) in `n` variables.
    pub fn zeros(n: usize) -> Self {
        Expt(vec![0; n])
    }

    /// Unit exponent for variable `var` (0-indexed) in `n` variables.
    pub fn unit(n: usize, var: usize) -> Self {
        let mut e = vec![0; n];
        e[var] = 1;
        Expt(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum (monomial product).
    pub fn add(&self, other: &Expt) -> Expt {
        debug_assert_eq!(self.0.len(), other.0.len());
        Expt(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise scalar multiple.
    pub fn scaled(&self, k: u32) -> Expt {
        Expt(self.0.iter().map(|a| a * k).collect())
    }

    /// Exact componentwise division, or `None` if any entry is not divisible.
    pub fn divided_exactly(&self, k: u32) -> Option<Expt> {
        if k == 0 {
            return None;
        }
        let mut out = Vec::with_capacity(self.0.len());
        for &e in &self.0 {
            if e % k != 0 {
                return None;
            }
            out.push(e / k);
        }
        Some(Expt(out))
    }
}

impl Ord for Expt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Expt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Expt {
    fn from(v: Vec<u32>) -> Self {
        Expt(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_orders_by_degree_first() {
        let a = Expt::new(vec![2, 0]); // deg 2
        let b = Expt::new(vec![0, 3]); // deg 3
        assert!(a < b);
    }

    #[test]
    fn graded_lex_ties_break_lexicographically() {
        let a = Expt::new(vec![2, 1]);
        let b = Expt::new(vec![1, 2]);
        assert!(b < a);
    }

    #[test]
    fn exact_division() {
        let e = Expt::new(vec![4, 2]);
        assert_eq!(e.divided_exactly(2), Some(Expt::new(vec![2, 1])));
        assert_eq!(e.divided_exactly(3), None);
    }
}
