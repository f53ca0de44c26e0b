//! Dense cycles indexed by the canonical (sorted) vertex order of a graph.

use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Q = num_rational::BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` text form used in reports (the denominator is always written).
pub fn q_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn q_is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn q_to_i64(x: &Q) -> Option<i64> {
    if !q_is_integer(x) {
        return None;
    }
    i64::try_from(x.numer().clone()).ok()
}

/// An element of the lattice `L`: integer coefficients of the `E_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntCycle(pub Vec<i64>);

/// An element of `L ⊗ Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatCycle(pub Vec<Q>);

impl IntCycle {
    pub fn zero(n: usize) -> Self {
        IntCycle(vec![0; n])
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut c = vec![0; n];
        c[v] = 1;
        IntCycle(c)
    }

    /// `E_I = Σ_{v ∈ I} E_v`.
    pub fn indicator(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut c = vec![0; n];
        for v in vs {
            c[v] = 1;
        }
        IntCycle(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] != 0).collect()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &IntCycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &IntCycle) -> IntCycle {
        IntCycle(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn meet(&self, other: &IntCycle) -> IntCycle {
        IntCycle(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn scaled(&self, k: i64) -> IntCycle {
        IntCycle(self.0.iter().map(|c| c * k).collect())
    }

    pub fn with(&self, v: usize, value: i64) -> IntCycle {
        let mut c = self.clone();
        c.0[v] = value;
        c
    }

    pub fn plus_unit(&self, v: usize, k: i64) -> IntCycle {
        let mut c = self.clone();
        c.0[v] += k;
        c
    }

    /// Keeps only the coordinates in `keep`, zeroing the rest.
    pub fn restricted(&self, keep: &[bool]) -> IntCycle {
        IntCycle(self.0.iter().zip(keep).map(|(c, k)| if *k { *c } else { 0 }).collect())
    }

    pub fn to_rat(&self) -> RatCycle {
        RatCycle(self.0.iter().map(|&c| q(c)).collect())
    }
}

impl Index<usize> for IntCycle {
    type Output = i64;
    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl Add for &IntCycle {
    type Output = IntCycle;
    fn add(self, rhs: &IntCycle) -> IntCycle {
        IntCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntCycle {
    type Output = IntCycle;
    fn sub(self, rhs: &IntCycle) -> IntCycle {
        IntCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntCycle {
    type Output = IntCycle;
    fn neg(self) -> IntCycle {
        IntCycle(self.0.iter().map(|a| -a).collect())
    }
}

impl From<&IntCycle> for RatCycle {
    fn from(c: &IntCycle) -> Self {
        c.to_rat()
    }
}

impl RatCycle {
    pub fn zero(n: usize) -> Self {
        RatCycle(vec![Q::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: &Q) -> RatCycle {
        RatCycle(self.0.iter().map(|c| c * k).collect())
    }

    /// Integer cycle if every coordinate is integral.
    pub fn to_int(&self) -> Option<IntCycle> {
        self.0.iter().map(q_to_i64).collect::<Option<Vec<_>>>().map(IntCycle)
    }

    pub fn floor(&self) -> IntCycle {
        IntCycle(
            self.0
                .iter()
                .map(|c| i64::try_from(c.numer().div_floor(c.denom())).expect("coordinate fits i64"))
                .collect(),
        )
    }

    /// Componentwise `self ≤ 0`.
    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|c| !c.is_positive())
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn le(&self, other: &RatCycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add_int(&self, l: &IntCycle) -> RatCycle {
        RatCycle(self.0.iter().zip(&l.0).map(|(a, &b)| a + q(b)).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(q_to_string).collect()
    }
}

impl Index<usize> for RatCycle {
    type Output = Q;
    fn index(&self, v: usize) -> &Q {
        &self.0[v]
    }
}

impl Add for &RatCycle {
    type Output = RatCycle;
    fn add(self, rhs: &RatCycle) -> RatCycle {
        RatCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatCycle {
    type Output = RatCycle;
    fn sub(self, rhs: &RatCycle) -> RatCycle {
        RatCycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatCycle {
    type Output = RatCycle;
    fn neg(self) -> RatCycle {
        RatCycle(self.0.iter().map(|a| -a).collect())
    }
}
