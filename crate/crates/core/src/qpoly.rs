use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// A polynomial in `q` with exact integer coefficients; index `d` holds the
/// coefficient of `q^d`. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coefficients: Vec<u64>,
}

impl QPolynomial {
    pub fn new(mut coefficients: Vec<u64>) -> Self {
        while coefficients.len() > 1 && coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(0);
        }
        QPolynomial { coefficients }
    }

    pub fn one() -> Self {
        QPolynomial { coefficients: vec![1] }
    }

    /// `[m]_q = 1 + q + ... + q^(m-1)`.
    pub fn q_integer(m: usize) -> Self {
        assert!(m >= 1, "[0]_q is the zero polynomial");
        QPolynomial { coefficients: vec![1; m] }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        c.iter().eq(c.iter().rev())
    }

    /// Weakly increasing up to some peak, weakly decreasing after it.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coefficients;
        let peak = c.windows(2).take_while(|w| w[0] <= w[1]).count();
        c[peak..].windows(2).all(|w| w[0] >= w[1])
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = vec![0u64; self.coefficients.len() + rhs.coefficients.len() - 1];
        for (a, &x) in self.coefficients.iter().enumerate() {
            for (b, &y) in rhs.coefficients.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        QPolynomial::new(out)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (d, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, 1) => write!(f, "q^{d}")?,
                _ => write!(f, "{c}q^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_of_q_integers() {
        let p = &QPolynomial::q_integer(4) * &QPolynomial::q_integer(5);
        assert_eq!(p.coefficients(), &[1, 2, 3, 4, 4, 3, 2, 1]);
        assert_eq!(p.to_string(), "1+2q+3q^2+4q^3+4q^4+3q^5+2q^6+q^7");
        assert!(p.is_palindromic() && p.is_unimodal());
        assert_eq!(p.eval_at_one(), 20);
        assert_eq!(&QPolynomial::one() * &p, p);
    }

    #[test]
    fn shape_predicates() {
        assert!(!QPolynomial::new(vec![1, 2]).is_palindromic());
        assert!(!QPolynomial::new(vec![2, 1, 2]).is_unimodal());
        assert!(QPolynomial::new(vec![1, 1, 2, 2, 1]).is_unimodal());
        assert_eq!(QPolynomial::new(vec![1, 0, 0]).degree(), 0);
        assert_eq!(QPolynomial::one().to_string(), "1");
    }
}
