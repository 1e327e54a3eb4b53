//! Exact rational arithmetic and polynomials in the dimension parameter r.

use num_rational::Ratio;
use std::fmt;
use std::ops::{Add, AddAssign};

/// Exact rational number. Numerators and denominators arising here stay far
/// below the i128 range (worst case is the augmented Zagreb sum on the
/// largest benchmark graph, around 1e27 over a denominator near 1e18).
pub type Rat = Ratio<i128>;

pub fn rat(numer: i128, denom: i128) -> Rat {
    Ratio::new(numer, denom)
}

pub fn rat_int(n: i128) -> Rat {
    Ratio::from_integer(n)
}

pub fn rat_to_f64(x: Rat) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Polynomial with exact rational coefficients, stored in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| *c == rat_int(0)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Integer coefficients `[c0, c1, c2, ...]` meaning c0 + c1*r + c2*r^2 + ...
    pub fn from_ints(coeffs: &[i128]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Integer coefficients over a common denominator.
    pub fn from_ints_over(coeffs: &[i128], denom: i128) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c, denom)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).copied().unwrap_or_else(|| rat_int(0))
    }

    pub fn eval(&self, r: i64) -> Rat {
        let x = rat_int(r as i128);
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * r + rat_to_f64(*c);
        }
        acc
    }

    pub fn scale(&self, k: Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

fn fmt_rat_abs(c: Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let n = c.numer().abs();
    let d = *c.denom();
    if d == 1 {
        write!(f, "{n}")
    } else {
        write!(f, "{n}/{d}")
    }
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `6216r^2 - 20096r + 16526`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeff(k);
            if c == rat_int(0) {
                continue;
            }
            if first {
                if c < rat_int(0) {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < rat_int(0) {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = c.numer().abs() == 1 && *c.denom() == 1;
            if k == 0 || !unit {
                fmt_rat_abs(c, f)?;
            }
            match k {
                0 => {}
                1 => write!(f, "r")?,
                _ => write!(f, "r^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_matches_termwise_expansion() {
        let p = Poly::from_ints(&[16526, -20096, 6216]);
        for r in -5..20i64 {
            let direct = rat_int(16526) + rat_int(-20096 * r as i128) + rat_int(6216 * (r as i128) * (r as i128));
            assert_eq!(p.eval(r), direct);
        }
    }

    #[test]
    fn half_integer_coefficients() {
        // (3r^2 - 21r + 36) / 2 is integral at every integer r
        let p = Poly::from_ints_over(&[36, -21, 3], 2);
        assert_eq!(p.eval(4), rat_int(0));
        assert_eq!(p.eval(5), rat_int(3));
        assert_eq!(p.eval(12), rat_int(108));
    }

    #[test]
    fn display_descending() {
        assert_eq!(
            Poly::from_ints(&[16526, -20096, 6216]).to_string(),
            "6216r^2 - 20096r + 16526"
        );
        assert_eq!(Poly::from_ints(&[-15, 3]).to_string(), "3r - 15");
        assert_eq!(Poly::from_ints(&[0, 1]).to_string(), "r");
        assert_eq!(Poly::from_ints(&[7]).to_string(), "7");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(
            Poly::new(vec![rat(3, 2), rat(-1, 2)]).to_string(),
            "-1/2r + 3/2"
        );
    }

    #[test]
    fn addition_trims() {
        let p = Poly::from_ints(&[1, 2, 3]);
        let q = Poly::from_ints(&[0, 0, -3]);
        assert_eq!((&p + &q), Poly::from_ints(&[1, 2]));
    }
}
