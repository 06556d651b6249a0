use crate::{Error, Result};

/// The prime field `F_p` for `p ∈ {2, 3, 5}`; elements are `u8` in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub const F2: PrimeField = PrimeField { p: 2 };
    pub const F3: PrimeField = PrimeField { p: 3 };
    pub const F5: PrimeField = PrimeField { p: 5 };

    pub fn new(p: u32) -> Result<Self> {
        match p {
            2 | 3 | 5 => Ok(PrimeField { p: p as u8 }),
            _ => Err(Error::UnsupportedField(p)),
        }
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn reduce(self, a: i64) -> u8 {
        a.rem_euclid(self.p as i64) as u8
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u8) -> u8 {
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a * b) % self.p
    }

    /// Multiplicative inverse; `a` must be non-zero.
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a % self.p != 0);
        (1..self.p).find(|&b| self.mul(a, b) == 1).expect("non-zero element")
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.p
    }

    /// Number of vectors in `F_p^n`, or `None` past `u64`.
    pub fn vector_count(self, n: usize) -> Option<u64> {
        (self.p as u64).checked_pow(n as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        for f in [PrimeField::F2, PrimeField::F3, PrimeField::F5] {
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(f.sub(a, b), b), a);
                }
            }
        }
        assert_eq!(PrimeField::new(4), Err(Error::UnsupportedField(4)));
        assert_eq!(PrimeField::F3.reduce(-1), 2);
    }
}
