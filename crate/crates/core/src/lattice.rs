//! Frequency points on `(Z_n)^3`, the thirteen queen directions, the
//! orthogonality count `mu` and the action of the signed permutation group.
//!
//! Points are always stored as canonical residues in `[0, n)`. Dot products
//! are formed over the integers and reduced once.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The modulus `n` of the torus `(Z_n)^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus(0));
        }
        Ok(Modulus(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `n^3`, the number of frequency points (and of vertices).
    pub fn volume(self) -> u64 {
        let n = u64::from(self.0);
        n * n * n
    }

    /// n odd, 3 does not divide n, and n >= 5.
    pub fn is_generic_odd(self) -> bool {
        let n = self.0;
        n % 2 == 1 && !n.is_multiple_of(3) && n >= 5
    }

    pub fn regime(self) -> Regime {
        if self.is_generic_odd() {
            Regime::GenericOdd
        } else {
            Regime::NonGeneric
        }
    }

    /// Fails with [`Error::NonGenericModulus`] outside the generic odd regime.
    pub fn require_generic(self) -> Result<Self> {
        if self.is_generic_odd() {
            Ok(self)
        } else {
            Err(Error::NonGenericModulus { n: self.0 })
        }
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.0)) as u32
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic class of a modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    GenericOdd,
    NonGeneric,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::GenericOdd => "generic_odd",
            Regime::NonGeneric => "non_generic",
        }
    }
}

/// A frequency `a` in `(Z_n)^3`, stored as canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FrequencyPoint([u32; 3]);

impl FrequencyPoint {
    pub const ZERO: FrequencyPoint = FrequencyPoint([0, 0, 0]);

    /// Reduces arbitrary integer coordinates mod `n`.
    pub fn new(coords: [i64; 3], n: Modulus) -> Self {
        FrequencyPoint(coords.map(|c| n.reduce(c)))
    }

    /// Builds a point from coordinates already in `[0, n)`.
    ///
    /// Debug builds assert the range.
    pub fn from_residues(coords: [u32; 3], n: Modulus) -> Self {
        debug_assert!(coords.iter().all(|&c| c < n.get()));
        FrequencyPoint(coords)
    }

    #[inline]
    pub fn coords(&self) -> [u32; 3] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn neg(&self, n: Modulus) -> Self {
        FrequencyPoint(self.0.map(|c| n.reduce(-i64::from(c))))
    }

    pub fn add(&self, other: &FrequencyPoint, n: Modulus) -> Self {
        let m = n.get();
        FrequencyPoint([0, 1, 2].map(|i| (self.0[i] + other.0[i]) % m))
    }

    /// Vertex index `a1 + n*a2 + n^2*a3`.
    #[inline]
    pub fn index(&self, n: Modulus) -> usize {
        let m = n.get() as usize;
        self.0[0] as usize + m * (self.0[1] as usize + m * self.0[2] as usize)
    }

    pub fn from_index(idx: usize, n: Modulus) -> Self {
        let m = n.get() as usize;
        FrequencyPoint([idx % m, (idx / m) % m, idx / (m * m)].map(|c| c as u32))
    }

    /// Every point of `(Z_n)^3` in index order.
    pub fn all(n: Modulus) -> impl Iterator<Item = FrequencyPoint> {
        (0..n.volume() as usize).map(move |i| FrequencyPoint::from_index(i, n))
    }

    /// Balanced representative with coordinates in `(-n/2, n/2]`.
    pub fn balanced(&self, n: Modulus) -> [i64; 3] {
        let m = i64::from(n.get());
        self.0.map(|c| {
            let c = i64::from(c);
            if 2 * c > m {
                c - m
            } else {
                c
            }
        })
    }
}

impl fmt::Display for FrequencyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// A queen direction: a vector in `{-1,0,1}^3`, nonzero, whose first
/// nonzero component is `+1`. Also names the hyperplane `a . u = 0 (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Direction([i8; 3]);

/// The 13 queen directions in their canonical listing order.
pub const DIRECTIONS: [Direction; 13] = [
    Direction([1, 0, 0]),
    Direction([0, 1, 0]),
    Direction([0, 0, 1]),
    Direction([1, 1, 0]),
    Direction([1, -1, 0]),
    Direction([1, 0, 1]),
    Direction([1, 0, -1]),
    Direction([0, 1, 1]),
    Direction([0, 1, -1]),
    Direction([1, 1, 1]),
    Direction([1, 1, -1]),
    Direction([1, -1, 1]),
    Direction([1, -1, -1]),
];

/// The direction set `U`, in listing order.
pub fn direction_set() -> &'static [Direction; 13] {
    &DIRECTIONS
}

impl Direction {
    /// Canonical direction for `v` (or `-v`), if `v` is a nonzero vector in
    /// `{-1,0,1}^3`.
    pub fn from_vector(v: [i64; 3]) -> Option<Direction> {
        if v.iter().any(|c| c.abs() > 1) || v == [0, 0, 0] {
            return None;
        }
        let lead = v.iter().copied().find(|&c| c != 0)?;
        Some(Direction(v.map(|c| (c * lead) as i8)))
    }

    #[inline]
    pub fn components(&self) -> [i8; 3] {
        self.0
    }

    pub fn as_vector(&self) -> [i64; 3] {
        self.0.map(i64::from)
    }

    /// Position of this direction in [`DIRECTIONS`].
    pub fn index(&self) -> usize {
        DIRECTIONS
            .iter()
            .position(|d| d == self)
            .expect("canonical directions are all listed")
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// `a . u mod n`.
#[inline]
pub fn dot_mod(a: &FrequencyPoint, u: &Direction, n: Modulus) -> u32 {
    let a = a.coords();
    let u = u.components();
    let s: i64 = (0..3).map(|i| i64::from(a[i]) * i64::from(u[i])).sum();
    n.reduce(s)
}

/// Orthogonality count: the number of directions `u` with `a . u = 0 (mod n)`.
pub fn mu(a: &FrequencyPoint, n: Modulus) -> u32 {
    DIRECTIONS
        .iter()
        .filter(|u| dot_mod(a, u, n) == 0)
        .count() as u32
}

/// A signed coordinate permutation (an element of the hyperoctahedral
/// group of order 48).
///
/// Coordinate `i` of the image is `signs[i] * x[perm^-1(i)]`, i.e. source
/// coordinate `j` lands in slot `perm[j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    perm: [usize; 3],
    signs: [i8; 3],
}

impl SignedPermutation {
    pub const IDENTITY: SignedPermutation = SignedPermutation {
        perm: [0, 1, 2],
        signs: [1, 1, 1],
    };

    /// Returns `None` unless `perm` is a bijection of `{0,1,2}` and every
    /// sign is `+1` or `-1`.
    pub fn new(perm: [usize; 3], signs: [i8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return None;
        }
        Some(SignedPermutation { perm, signs })
    }

    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    pub fn signs(&self) -> [i8; 3] {
        self.signs
    }

    fn inverse_perm(&self) -> [usize; 3] {
        let mut inv = [0; 3];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p] = j;
        }
        inv
    }

    /// Acts on an integer vector.
    pub fn apply_vector(&self, x: [i64; 3]) -> [i64; 3] {
        let inv = self.inverse_perm();
        [0, 1, 2].map(|i| i64::from(self.signs[i]) * x[inv[i]])
    }

    /// Acts on a frequency point.
    pub fn apply(&self, a: &FrequencyPoint, n: Modulus) -> FrequencyPoint {
        FrequencyPoint::new(self.apply_vector(a.coords().map(i64::from)), n)
    }

    /// Acts on a direction, re-normalizing to the canonical representative.
    pub fn apply_direction(&self, u: &Direction) -> Direction {
        Direction::from_vector(self.apply_vector(u.as_vector()))
            .expect("signed permutations map {-1,0,1}^3 \\ 0 to itself")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let inv = self.inverse_perm();
        let perm = other.perm.map(|p| self.perm[p]);
        let signs = [0, 1, 2].map(|i| self.signs[i] * other.signs[inv[i]]);
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let perm = self.inverse_perm();
        // x[j] = signs[perm[j]] * y[perm[j]]
        let signs = [0, 1, 2].map(|j| self.signs[self.perm[j]]);
        SignedPermutation { perm, signs }
    }
}

/// All 48 signed coordinate permutations; the identity comes first.
pub fn signed_permutation_group() -> Vec<SignedPermutation> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::with_capacity(48);
    for perm in PERMS {
        for mask in 0..8u8 {
            let signs = [0, 1, 2].map(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
            out.push(SignedPermutation { perm, signs });
        }
    }
    out
}
