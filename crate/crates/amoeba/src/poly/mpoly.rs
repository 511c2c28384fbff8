use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;

use super::coeff::{Coeff, ComplexCoeff, GaussRational};
use super::expt::Expt;
use super::PolyError;

/// Relative threshold below which floating coefficients are dropped after
/// arithmetic. Keeps cyclic products sparse and output deterministic.
pub const ZERO_PRUNE_REL: f64 = 1e-12;

/// Default budget for `cyclic_product`: the product is rejected when
/// r^n times the term count of the input exceeds this.
pub const DEFAULT_CYCLIC_BUDGET: usize = 100_000;

/// Sparse multivariate polynomial with `n` variables and coefficients in `C`.
///
/// Terms are keyed by exponent vector in graded-lex order, which makes
/// iteration, printing and equality canonical.
#[derive(Clone, PartialEq)]
pub struct MPoly<C: Coeff> {
    n: usize,
    terms: BTreeMap<Expt, C>,
}

/// Polynomial over double-precision complex coefficients.
pub type ComplexPoly = MPoly<Complex64>;
/// Polynomial over double-precision real coefficients. Realified
/// polynomials live in `2n` variables ordered `X1..Xn, Y1..Yn`.
pub type RealPoly = MPoly<f64>;
/// Exact-mode complex polynomial (Gaussian rational coefficients).
pub type GaussPoly = MPoly<GaussRational>;
/// Exact-mode real polynomial.
pub type RatPoly = MPoly<BigRational>;

impl<C: Coeff> MPoly<C> {
    pub fn zero(n: usize) -> Self {
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(Expt::zeros(n), c);
        }
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    /// Monomial `c * vars^e`.
    pub fn monomial(n: usize, e: Expt, c: C) -> Self {
        assert_eq!(e.len(), n, "exponent length must match variable count");
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable `X_var` (0-indexed).
    pub fn variable(n: usize, var: usize) -> Self {
        Self::monomial(n, Expt::unit(n, var), C::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Expt, C)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent length must match variable count");
            p.accumulate(e, c);
        }
        p.prune();
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Expt, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Expt) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Expt::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn support(&self) -> Vec<Expt> {
        self.terms.keys().cloned().collect()
    }

    pub fn max_coeff_modulus(&self) -> f64 {
        self.terms
            .values()
            .map(Coeff::modulus)
            .fold(0.0, f64::max)
    }

    fn accumulate(&mut self, e: Expt, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    /// Drop negligible coefficients. Exact coefficients are removed only
    /// when zero; floating ones when below `ZERO_PRUNE_REL` relative to the
    /// largest modulus.
    fn prune(&mut self) {
        if C::EXACT {
            self.terms.retain(|_, c| !c.is_zero());
            return;
        }
        let max = self.max_coeff_modulus();
        if max == 0.0 {
            self.terms.clear();
            return;
        }
        let cut = ZERO_PRUNE_REL * max;
        self.terms.retain(|_, c| c.modulus() >= cut);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable counts must agree");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out.prune();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable counts must agree");
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.accumulate(ea.add(eb), ca.mul(cb));
            }
        }
        out.prune();
        out
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        let mut out = MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, t)| (e.clone(), t.mul(c)))
                .collect(),
        };
        out.prune();
        out
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Evaluate at a point with coordinates in the coefficient ring.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.n, "point length must equal nvars");
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, &exp) in e.entries().iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&point[k]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Diagonal substitution `Z_k -> s_k * Z_k` with positive scalars:
    /// the coefficient of exponent `a` picks up the factor `s^a`.
    pub fn scale_substitute(&self, scales: &[C::Scalar]) -> Result<Self, PolyError> {
        if scales.len() != self.n {
            return Err(PolyError::DimensionMismatch {
                expected: self.n,
                got: scales.len(),
            });
        }
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            for (k, &exp) in e.entries().iter().enumerate() {
                if exp > 0 {
                    let factor = C::scalar_pow(&scales[k], exp);
                    coeff = coeff.scale(&factor);
                }
            }
            out.accumulate(e.clone(), coeff);
        }
        out.prune();
        Ok(out)
    }

    /// Substitute a polynomial for every variable. `images[k]` replaces
    /// variable `k`; all images must share a variable count.
    pub fn substitute(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.n, "one image per variable required");
        let m = images.first().map(|p| p.n).unwrap_or(0);
        let mut out = Self::zero(m);
        // memoized powers per variable, index = exponent
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(m), p.clone()]) .collect();
        for (e, c) in &self.terms {
            let mut term = Self::constant(m, c.clone());
            for (k, &exp) in e.entries().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                while powers[k].len() <= exp as usize {
                    let next = powers[k].last().unwrap().mul(&images[k]);
                    powers[k].push(next);
                }
                term = term.mul(&powers[k][exp as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Substitute monomials for variables: column `i` of `map` is the
    /// exponent vector (in `m` new variables) of the monomial replacing
    /// variable `i`.
    pub fn monomial_pullback(&self, map: &[Expt]) -> Result<Self, PolyError> {
        if map.len() != self.n {
            return Err(PolyError::DimensionMismatch {
                expected: self.n,
                got: map.len(),
            });
        }
        let m = map.first().map(Expt::len).unwrap_or(0);
        if map.iter().any(|col| col.len() != m) {
            return Err(PolyError::RaggedMap);
        }
        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            let mut img = Expt::zeros(m);
            for (k, &exp) in e.entries().iter().enumerate() {
                if exp > 0 {
                    img = img.add(&map[k].scaled(exp));
                }
            }
            out.accumulate(img, c.clone());
        }
        out.prune();
        Ok(out)
    }
}

impl<C: ComplexCoeff> MPoly<C> {
    /// Split into real and imaginary parts under `Z_k = X_k + i Y_k`.
    ///
    /// Both returned polynomials live in `2n` variables ordered
    /// `X1..Xn, Y1..Yn`.
    pub fn realify(&self) -> (MPoly<C::Real>, MPoly<C::Real>) {
        let v = 2 * self.n;
        let mut acc: MPoly<C> = MPoly::zero(v);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(v, c.clone());
            for (k, &exp) in e.entries().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                // X_k + i Y_k
                let mut zk = MPoly::zero(v);
                zk.accumulate(Expt::unit(v, k), C::one());
                zk.accumulate(
                    Expt::unit(v, self.n + k),
                    C::from_parts(<C::Real as Coeff>::zero(), <C::Real as Coeff>::one()),
                );
                term = term.mul(&zk.pow(exp));
            }
            acc = acc.add(&term);
        }
        let mut re = MPoly::zero(v);
        let mut im = MPoly::zero(v);
        for (e, c) in &acc.terms {
            re.accumulate(e.clone(), c.re());
            im.accumulate(e.clone(), c.im());
        }
        re.prune();
        im.prune();
        (re, im)
    }
}

impl ComplexPoly {
    /// Phase rotation `Z_k -> Z_k e^{i mu_k}`: the coefficient of exponent
    /// `a` is multiplied by `e^{i <a, mu>}`.
    pub fn phase_substitute(&self, mu: &[f64]) -> Result<Self, PolyError> {
        if mu.len() != self.n {
            return Err(PolyError::DimensionMismatch {
                expected: self.n,
                got: mu.len(),
            });
        }
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let angle: f64 = e
                .entries()
                .iter()
                .zip(mu)
                .map(|(&a, &m)| a as f64 * m)
                .sum();
            out.accumulate(e.clone(), c * Complex64::from_polar(1.0, angle));
        }
        out.prune();
        Ok(out)
    }

    /// Product of `f` over all coordinatewise `r`-th root of unity
    /// rotations. Grows the total degree by the factor `r^n`.
    pub fn cyclic_product(&self, r: u32) -> Result<Self, PolyError> {
        self.cyclic_product_with_budget(r, DEFAULT_CYCLIC_BUDGET)
    }

    pub fn cyclic_product_with_budget(&self, r: u32, budget: usize) -> Result<Self, PolyError> {
        if r == 0 {
            return Err(PolyError::InvalidRotationOrder);
        }
        let copies = (r as usize).checked_pow(self.n as u32);
        let cost = copies.and_then(|c| c.checked_mul(self.terms.len().max(1)));
        match cost {
            Some(c) if c <= budget => {}
            _ => return Err(PolyError::CyclicBudgetExceeded { r, budget }),
        }
        let mut acc = Self::one(self.n);
        let mut ks = vec![0u32; self.n];
        loop {
            let mu: Vec<f64> = ks
                .iter()
                .map(|&k| 2.0 * std::f64::consts::PI * k as f64 / r as f64)
                .collect();
            acc = acc.mul(&self.phase_substitute(&mu)?);
            // odometer over {0..r-1}^n
            let mut idx = 0;
            loop {
                if idx == self.n {
                    return Ok(acc);
                }
                ks[idx] += 1;
                if ks[idx] < r {
                    break;
                }
                ks[idx] = 0;
                idx += 1;
            }
        }
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        self.eval(z)
    }

    /// Largest term-coefficient modulus; 0 for the zero polynomial.
    pub fn coeff_scale(&self) -> f64 {
        self.max_coeff_modulus()
    }
}

impl RealPoly {
    /// Substitute `X_k -> X_k^2` for the first `n` of `2n` variables,
    /// leaving the `Y` block alone. Used by the coamoeba construction.
    pub fn square_x_block(&self) -> Self {
        assert!(self.n % 2 == 0, "expected realified polynomial in 2n vars");
        let half = self.n / 2;
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut entries = e.entries().to_vec();
            for x in entries.iter_mut().take(half) {
                *x *= 2;
            }
            out.accumulate(Expt::new(entries), *c);
        }
        out.prune();
        out
    }
}

impl RatPoly {
    pub fn square_x_block_exact(&self) -> Self {
        assert!(self.n % 2 == 0, "expected realified polynomial in 2n vars");
        let half = self.n / 2;
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut entries = e.entries().to_vec();
            for x in entries.iter_mut().take(half) {
                *x *= 2;
            }
            out.accumulate(Expt::new(entries), c.clone());
        }
        out.prune();
        out
    }
}

/// Downgrade an exact polynomial to floating point.
pub fn rat_to_real(p: &RatPoly) -> RealPoly {
    use num_traits::ToPrimitive;
    RealPoly::from_terms(
        p.nvars(),
        p.terms().map(|(e, c)| (e.clone(), c.to_f64().unwrap_or(0.0))),
    )
}

/// Downgrade an exact complex polynomial to floating point.
pub fn gauss_to_complex(p: &GaussPoly) -> ComplexPoly {
    use num_traits::ToPrimitive;
    ComplexPoly::from_terms(
        p.nvars(),
        p.terms().map(|(e, c)| {
            (
                e.clone(),
                Complex64::new(
                    c.re.to_f64().unwrap_or(0.0),
                    c.im.to_f64().unwrap_or(0.0),
                ),
            )
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn z(n: usize, k: usize) -> ComplexPoly {
        ComplexPoly::variable(n, k)
    }

    #[test]
    fn realify_single_variable() {
        let (re, im) = z(1, 0).realify();
        assert_eq!(re, RealPoly::variable(2, 0));
        assert_eq!(im, RealPoly::variable(2, 1));
    }

    #[test]
    fn realify_square() {
        // Z^2 -> (X^2 - Y^2, 2XY)
        let (re, im) = z(1, 0).square().realify();
        let x = RealPoly::variable(2, 0);
        let y = RealPoly::variable(2, 1);
        assert_eq!(re, x.square().sub(&y.square()));
        assert_eq!(im, x.mul(&y).mul_coeff(&2.0));
    }

    #[test]
    fn realify_z1_squared_z2() {
        // Z1^2 Z2: re = X1^2 X2 - 2 X1 Y1 Y2 - Y1^2 X2,
        //          im = X1^2 Y2 + 2 X1 Y1 X2 - Y1^2 Y2
        let f = z(2, 0).square().mul(&z(2, 1));
        let (re, im) = f.realify();
        let x1 = RealPoly::variable(4, 0);
        let x2 = RealPoly::variable(4, 1);
        let y1 = RealPoly::variable(4, 2);
        let y2 = RealPoly::variable(4, 3);
        let want_re = x1
            .square()
            .mul(&x2)
            .sub(&x1.mul(&y1).mul(&y2).mul_coeff(&2.0))
            .sub(&y1.square().mul(&x2));
        let want_im = x1
            .square()
            .mul(&y2)
            .add(&x1.mul(&y1).mul(&x2).mul_coeff(&2.0))
            .sub(&y1.square().mul(&y2));
        assert_eq!(re, want_re);
        assert_eq!(im, want_im);
    }

    #[test]
    fn scale_substitute_multiplies_by_lambda_power() {
        // Z1^2 Z2 at lambda = (2, 3) -> 12 Z1^2 Z2
        let f = z(2, 0).square().mul(&z(2, 1));
        let g = f.scale_substitute(&[2.0, 3.0]).unwrap();
        let coeff = g.coefficient(&Expt::new(vec![2, 1]));
        assert!((coeff - Complex64::new(12.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn phase_pi_negates_variable() {
        let f = z(1, 0);
        let g = f.phase_substitute(&[std::f64::consts::PI]).unwrap();
        let coeff = g.coefficient(&Expt::new(vec![1]));
        assert!((coeff - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cyclic_product_degree_one_example() {
        // (Z - 1)(-Z - 1) = 1 - Z^2, frozen by hand
        let f = z(1, 0).sub(&ComplexPoly::one(1));
        let g = f.cyclic_product(2).unwrap();
        assert_eq!(g.term_count(), 2);
        assert!((g.coefficient(&Expt::new(vec![0])) - Complex64::one()).norm() < 1e-12);
        assert!((g.coefficient(&Expt::new(vec![2])) + Complex64::one()).norm() < 1e-12);
    }

    #[test]
    fn cyclic_product_r1_is_identity() {
        let f = z(2, 0).add(&z(2, 1).mul_coeff(&Complex64::new(2.0, 0.0)));
        let g = f.cyclic_product(1).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn cyclic_budget_rejects_oversized() {
        let f = z(2, 0).add(&ComplexPoly::one(2));
        let err = f.cyclic_product_with_budget(100, 10).unwrap_err();
        assert!(matches!(err, PolyError::CyclicBudgetExceeded { .. }));
    }

    #[test]
    fn pullback_identity_map() {
        let f = z(2, 0).mul(&z(2, 1)).add(&ComplexPoly::one(2));
        let id = vec![Expt::unit(2, 0), Expt::unit(2, 1)];
        assert_eq!(f.monomial_pullback(&id).unwrap(), f);
    }

    #[test]
    fn pullback_merges_colliding_terms() {
        // Z1 + Z2 with both variables mapped to Y1 gives 2 Y1
        let f = z(2, 0).add(&z(2, 1));
        let map = vec![Expt::unit(1, 0), Expt::unit(1, 0)];
        let g = f.monomial_pullback(&map).unwrap();
        assert_eq!(g.term_count(), 1);
        assert!((g.coefficient(&Expt::new(vec![1])) - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn pruning_drops_relative_dust() {
        let p = ComplexPoly::from_terms(
            1,
            vec![
                (Expt::new(vec![0]), Complex64::new(1.0, 0.0)),
                (Expt::new(vec![1]), Complex64::new(1e-15, 0.0)),
            ],
        );
        assert_eq!(p.term_count(), 1);
    }

    #[test]
    fn exact_mode_keeps_tiny_coefficients() {
        let tiny = BigRational::new(1.into(), 1_000_000_000_000_000i64.into());
        let p = RatPoly::from_terms(
            1,
            vec![
                (Expt::new(vec![0]), <BigRational as Coeff>::one()),
                (Expt::new(vec![1]), tiny),
            ],
        );
        assert_eq!(p.term_count(), 2);
    }
}
