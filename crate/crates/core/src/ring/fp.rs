use std::fmt;

use num::{BigInt, BigRational, Integer, ToPrimitive};

use crate::error::{Error, Result};

use super::poly::Poly;

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Checks that `p` is an odd prime.
pub fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    Ok(())
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero in F_{p}");
    pow_mod(a, p - 2, p)
}

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub value: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(value: u64, p: u64) -> Self {
        Self {
            value: value % p,
            p,
        }
    }

    /// Reduction of a rational; fails when `p` divides the denominator.
    pub fn from_rational(q: &BigRational, p: u64) -> Result<Self> {
        let reduce = |n: &BigInt| {
            n.mod_floor(&BigInt::from(p))
                .to_u64()
                .expect("residue fits")
        };
        let den = reduce(q.denom());
        if den == 0 {
            return Err(Error::Incompatible(format!(
                "denominator of {q} vanishes mod {p}"
            )));
        }
        Ok(Self::new(mul_mod(reduce(q.numer()), inv_mod(den, p), p), p))
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, o: Self) -> Self {
        Self::new(self.value + o.value, self.p)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, o: Self) -> Self {
        Self::new(self.value + self.p - o.value, self.p)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, o: Self) -> Self {
        Self::new(mul_mod(self.value, o.value, self.p), self.p)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        Self::new(self.p - self.value, self.p)
    }

    pub fn inv(self) -> Self {
        Self::new(inv_mod(self.value, self.p), self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Polynomial over `F_p`, trimmed, increasing degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    pub coeffs: Vec<u64>,
    pub p: u64,
}

impl FpPoly {
    pub fn zero(p: u64) -> Self {
        Self {
            coeffs: Vec::new(),
            p,
        }
    }

    fn trimmed(mut coeffs: Vec<u64>, p: u64) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs, p }
    }

    pub fn from_poly(a: &Poly, p: u64) -> Result<Self> {
        let coeffs = a
            .coeffs()
            .iter()
            .map(|c| Fp::from_rational(c, p).map(|v| v.value))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::trimmed(coeffs, p))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Self::trimmed(
            (0..n)
                .map(|i| (get(&self.coeffs, i) + get(&o.coeffs, i)) % self.p)
                .collect(),
            self.p,
        )
    }

    pub fn neg(&self) -> Self {
        Self::trimmed(
            self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect(),
            self.p,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::trimmed(out, self.p)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let p = self.p;
        let inv_lead = inv_mod(d.coeffs[dd], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = mul_mod(rem[top], inv_lead, p);
            let shift = top - dd;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + p - mul_mod(c, dc, p)) % p;
            }
            quot[shift] = c;
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Self::trimmed(quot, p), Self::trimmed(rem, p))
    }

    pub fn eval(&self, x: Fp) -> Fp {
        self.coeffs
            .iter()
            .rev()
            .fold(Fp::new(0, self.p), |acc, &c| {
                acc.mul(x).add(Fp::new(c, self.p))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(check_odd_prime(3).is_ok());
        assert!(check_odd_prime(10007).is_ok());
        assert_eq!(check_odd_prime(2), Err(Error::UnsupportedCharacteristic(2)));
        assert_eq!(check_odd_prime(9), Err(Error::UnsupportedCharacteristic(9)));
    }

    #[test]
    fn field_ops() {
        let a = Fp::new(3, 5);
        assert_eq!(a.mul(a.inv()), Fp::new(1, 5));
        assert_eq!(a.add(Fp::new(4, 5)), Fp::new(2, 5));
        assert_eq!(
            Fp::from_rational(&BigRational::new((-1).into(), 2.into()), 5).unwrap(),
            Fp::new(2, 5)
        );
        assert!(Fp::from_rational(&BigRational::new(1.into(), 5.into()), 5).is_err());
    }

    #[test]
    fn poly_eval() {
        let p = FpPoly::from_poly(&Poly::x(), 5).unwrap();
        assert_eq!(p.eval(Fp::new(3, 5)), Fp::new(3, 5));
        let a = FpPoly::from_poly(&Poly::from_ints(&[0, -1, 0, 1]), 7).unwrap();
        let b = FpPoly::from_poly(&Poly::from_ints(&[-1, 1]), 7).unwrap();
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q.mul(&b), a);
    }
}
