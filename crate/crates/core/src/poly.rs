use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: BTreeMap<i32, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (e, c) in other.terms() {
            p.add_term(e, c);
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (e, c) in other.terms() {
            p.add_term(e, -c);
        }
        p
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.terms()
            .map(|(e, c)| {
                assert!(e >= 0, "cannot evaluate negative powers at an integer");
                c * x.pow(e as u32)
            })
            .sum()
    }
}

impl fmt::Display for Polynomial {
    /// Ascending exponents, e.g. `1 + 3t + 2t^2`, `t^-1 - 2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if e == 0 || mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{var}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_coeffs([(0, 1), (1, 3), (2, 2)]).to_string(), "1 + 3t + 2t^2");
        assert_eq!(Polynomial::from_coeffs([(3, 1), (2, -3), (1, 2)]).to_string(), "2t - 3t^2 + t^3");
        assert_eq!(Polynomial::monomial(-1, 1).to_string(), "t^-1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::monomial(0, -2).to_string(), "-2");
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::from_coeffs([(0, 1), (1, 1)]);
        let b = a.mul(&a);
        assert_eq!(b, Polynomial::from_coeffs([(0, 1), (1, 2), (2, 1)]));
        assert!(b.sub(&b).is_zero());
        assert_eq!(b.eval(2), 9);
    }
}
