use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial `x^b` (or a dual monomial `∂^a`).
///
/// Ordered graded-lexicographically: lower total degree first, and within a
/// degree `x0^d` comes first, `x_{n-1}^d` last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    /// Product of `b_i! / (b_i - a_i)!` over the variables: the scalar produced
    /// when `∂^a` acts on `x^b`. Zero when `a` does not divide `b`.
    pub fn falling_factor(b: &Monomial, a: &Monomial) -> u64 {
        let mut acc: u64 = 1;
        for (&bi, &ai) in b.exps.iter().zip(&a.exps) {
            if ai > bi {
                return 0;
            }
            for j in 0..ai {
                acc *= u64::from(bi - j);
            }
        }
        acc
    }

    /// Product of factorials of the exponents, the Gram diagonal of the pairing.
    pub fn factorial_weight(&self) -> u64 {
        self.exps.iter().map(|&e| (1..=u64::from(e)).product::<u64>()).product()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `nvars` variables, in graded-lex order.
pub fn monomial_basis(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut [u32], idx: usize, remaining: u32) {
    let n = current.len();
    if idx == n - 1 {
        current[idx] = remaining;
        out.push(Monomial::new(current.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[idx] = e;
        fill(out, current, idx + 1, remaining - e);
    }
    current[idx] = 0;
}

/// `binom(nvars + d - 1, d)`, the dimension of the degree-`d` piece.
pub fn basis_len(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return 0;
    }
    binomial((nvars as u64) + u64::from(d) - 1, u64::from(d)) as usize
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_cubic_basis_order() {
        let b = monomial_basis(2, 3);
        let exps: Vec<_> = b.iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(exps, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn basis_lengths() {
        assert_eq!(monomial_basis(3, 2).len(), 6);
        assert_eq!(monomial_basis(5, 3).len(), 35);
        assert_eq!(basis_len(5, 3), 35);
        for n in 1..7 {
            for d in 0..5 {
                assert_eq!(monomial_basis(n, d).len(), basis_len(n, d));
            }
        }
    }

    #[test]
    fn basis_is_sorted() {
        let b = monomial_basis(4, 3);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn falling_factor_matches_derivative() {
        // ∂0 on x0^2 gives 2
        let b = Monomial::new(vec![2, 0]);
        let a = Monomial::new(vec![1, 0]);
        assert_eq!(Monomial::falling_factor(&b, &a), 2);
        assert_eq!(Monomial::falling_factor(&a, &b), 0);
        assert_eq!(Monomial::new(vec![2, 1]).factorial_weight(), 2);
    }
}
