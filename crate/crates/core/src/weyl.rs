//! Exact weight-lattice arithmetic for the root systems `A_m`, `B_n`, `D_n`.
//!
//! Weights are stored with doubled coordinates so that the half-integral
//! lattice of `Spin` groups stays in integer arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagrams::YoungDiagram;
use crate::error::{ensure, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

/// A root system of type `A_rank`, `B_rank` or `D_rank`.
///
/// Type `A_m` weights have `m + 1` coordinates and the Weyl group acts by
/// permutations. `B_n` and `D_n` weights have `n` coordinates; the Weyl group
/// also changes signs (an even number of them in type `D`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: u32,
}

impl LieType {
    pub fn a(rank: u32) -> Self {
        Self {
            family: Family::A,
            rank,
        }
    }

    pub fn b(rank: u32) -> Self {
        Self {
            family: Family::B,
            rank,
        }
    }

    pub fn d(rank: u32) -> Self {
        Self {
            family: Family::D,
            rank,
        }
    }

    /// `Spin(V)` for `dim V = n`: `B_{(n-1)/2}` when odd, `D_{n/2}` when even.
    pub fn spin(dim_v: u32) -> Self {
        if dim_v % 2 == 1 {
            Self::b(dim_v / 2)
        } else {
            Self::d(dim_v / 2)
        }
    }

    /// `GL(n)`, i.e. `A_{n-1}` with `n` coordinates.
    pub fn gl(n: u32) -> Self {
        Self::a(n - 1)
    }

    pub fn coord_len(&self) -> usize {
        match self.family {
            Family::A => self.rank as usize + 1,
            Family::B | Family::D => self.rank as usize,
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        self.family != Family::A
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad type tag {s:?}"));
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('D') => Family::D,
            _ => return Err(bad()),
        };
        let rank: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if rank == 0 {
            return Err(bad());
        }
        Ok(Self { family, rank })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    pub fn parity(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        }
    }
}

impl From<Sign> for String {
    fn from(s: Sign) -> Self {
        s.symbol().to_string()
    }
}

impl TryFrom<String> for Sign {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// An element of the weight lattice, coordinates stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    ty: LieType,
    doubled: Vec<i64>,
}

impl Weight {
    /// Builds a weight from doubled coordinates, checking lattice membership.
    pub fn from_doubled(ty: LieType, doubled: Vec<i64>) -> Result<Self> {
        let w = Self { ty, doubled };
        w.check()?;
        Ok(w)
    }

    pub fn from_integers(ty: LieType, coords: &[i64]) -> Result<Self> {
        Self::from_doubled(ty, coords.iter().map(|c| 2 * c).collect())
    }

    pub fn zero(ty: LieType) -> Self {
        Self {
            ty,
            doubled: vec![0; ty.coord_len()],
        }
    }

    fn check(&self) -> Result<()> {
        if self.doubled.len() != self.ty.coord_len() {
            return Err(Error::NotInLattice(self.to_string()));
        }
        let ok = match self.ty.family {
            Family::A => self.doubled.iter().all(|c| c % 2 == 0),
            Family::B | Family::D => {
                let first = self.doubled.first().map_or(0, |c| c.rem_euclid(2));
                self.doubled.iter().all(|c| c.rem_euclid(2) == first)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotInLattice(self.to_string()))
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&c| c == 0)
    }

    /// Parses `"5/2,3/2,1/2"` or `"3,2,0"`.
    pub fn parse(ty: LieType, s: &str) -> Result<Self> {
        let doubled = s
            .split(',')
            .map(|p| parse_half(p.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_doubled(ty, doubled)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.ty, other.ty, "weights of different types");
        Self {
            ty: self.ty,
            doubled: self
                .doubled
                .iter()
                .zip(&other.doubled)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn coords_string(&self) -> String {
        self.doubled
            .iter()
            .map(|&c| format_half(c))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_half(p: &str) -> Result<i64> {
    let bad = || Error::Parse(format!("bad coordinate {p:?}"));
    match p.strip_suffix("/2") {
        Some(num) => num.trim().parse::<i64>().map_err(|_| bad()),
        None => p.parse::<i64>().map(|v| 2 * v).map_err(|_| bad()),
    }
}

fn format_half(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coords_string())
    }
}

/// Half the sum of the positive roots.
///
/// For `B_n`/`D_n` this is `(n-1+ε, …, 1+ε, ε)` with `ε = 1/2` in type `B`
/// and `0` in type `D`; for `A_m` it is the staircase `(m, m-1, …, 0)`.
pub fn rho(ty: LieType) -> Weight {
    let len = ty.coord_len() as i64;
    let eps = match ty.family {
        Family::B => 1,
        Family::A | Family::D => 0,
    };
    let doubled = (0..len).map(|i| 2 * (len - 1 - i) + eps).collect();
    Weight { ty, doubled }
}

/// Whether a nontrivial Weyl group element fixes the weight.
pub fn is_singular(mu: &Weight) -> bool {
    let c = &mu.doubled;
    match mu.ty.family {
        Family::A => has_repeat(c.iter().copied()),
        Family::B => c.contains(&0) || has_repeat(c.iter().map(|x| x.abs())),
        Family::D => has_repeat(c.iter().map(|x| x.abs())),
    }
}

fn has_repeat(values: impl Iterator<Item = i64>) -> bool {
    let mut v: Vec<i64> = values.collect();
    v.sort_unstable();
    v.windows(2).any(|w| w[0] == w[1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dominantization {
    Singular,
    Regular {
        /// The representative in the dominant chamber.
        dominant: Weight,
        /// Length of the Weyl group element taking the input to `dominant`.
        length: u32,
        /// Type `D` only: sign of the last coordinate of `dominant`.
        spin_sign: Option<Sign>,
    },
}

/// Moves a weight into the dominant chamber, counting reflections.
///
/// For a regular weight the length of the unique element `w` with `w·μ`
/// dominant equals the number of positive roots pairing negatively with `μ`.
pub fn dominantize(mu: &Weight) -> Dominantization {
    if is_singular(mu) {
        return Dominantization::Singular;
    }
    let c = &mu.doubled;
    let n = c.len();
    let mut length = 0u32;
    for i in 0..n {
        for j in i + 1..n {
            if c[i] < c[j] {
                length += 1;
            }
            if mu.ty.is_orthogonal() && c[i] + c[j] < 0 {
                length += 1;
            }
        }
        if mu.ty.family == Family::B && c[i] < 0 {
            length += 1;
        }
    }
    let mut dominant: Vec<i64> = match mu.ty.family {
        Family::A => c.clone(),
        Family::B | Family::D => c.iter().map(|x| x.abs()).collect(),
    };
    dominant.sort_unstable_by(|a, b| b.cmp(a));
    let spin_sign = (mu.ty.family == Family::D).then(|| {
        let negatives = c.iter().filter(|&&x| x < 0).count() as u64;
        let sign = if c.contains(&0) {
            Sign::Plus
        } else {
            Sign::parity(negatives)
        };
        if sign == Sign::Minus {
            if let Some(last) = dominant.last_mut() {
                *last = -*last;
            }
        }
        sign
    });
    Dominantization::Regular {
        dominant: Weight {
            ty: mu.ty,
            doubled: dominant,
        },
        length,
        spin_sign,
    }
}

/// Whether `λ` lies in the closed dominant chamber.
pub fn is_dominant(lambda: &Weight) -> bool {
    let c = &lambda.doubled;
    let decreasing = c.windows(2).all(|w| w[0] >= w[1]);
    match lambda.ty.family {
        Family::A => decreasing,
        Family::B => decreasing && c.last().is_none_or(|&x| x >= 0),
        Family::D => {
            let n = c.len();
            decreasing_except_last(c) && (n < 2 || c[n - 2] >= c[n - 1].abs())
        }
    }
}

fn decreasing_except_last(c: &[i64]) -> bool {
    let n = c.len();
    n < 2 || c[..n - 1].windows(2).all(|w| w[0] >= w[1])
}

/// Exact rational product accumulator with gcd reduction.
struct Ratio {
    num: u128,
    den: u128,
}

impl Ratio {
    fn one() -> Self {
        Self { num: 1, den: 1 }
    }

    fn mul(&mut self, a: u128, b: u128) -> Result<()> {
        debug_assert!(b > 0);
        let g = gcd(a, b);
        let (a, b) = (a / g, b / g);
        let g1 = gcd(a, self.den);
        let g2 = gcd(b, self.num);
        let num = (self.num / g2)
            .checked_mul(a / g1)
            .ok_or(Error::Overflow("dimension formula"))?;
        let den = (self.den / g1)
            .checked_mul(b / g2)
            .ok_or(Error::Overflow("dimension formula"))?;
        self.num = num;
        self.den = den;
        Ok(())
    }

    fn into_integer(self) -> u128 {
        assert_eq!(self.den, 1, "Weyl dimension formula must give an integer");
        self.num
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Weyl dimension formula `∏_{α>0} ⟨λ+ρ,α⟩ / ⟨ρ,α⟩` for a dominant weight.
pub fn weyl_dimension(lambda: &Weight) -> Result<u128> {
    ensure!(
        is_dominant(lambda),
        "weight {lambda} of type {} is not dominant",
        lambda.ty
    );
    let shifted = lambda + &rho(lambda.ty);
    let r = rho(lambda.ty);
    let (x, y) = (&shifted.doubled, &r.doubled);
    let n = x.len();
    let mut acc = Ratio::one();
    let mut factor = |a: i64, b: i64| -> Result<()> {
        if b == 0 {
            return Ok(());
        }
        acc.mul(a as u128, b as u128)
    };
    for i in 0..n {
        for j in i + 1..n {
            factor(x[i] - x[j], y[i] - y[j])?;
            if lambda.ty.is_orthogonal() {
                factor(x[i] + x[j], y[i] + y[j])?;
            }
        }
        if lambda.ty.family == Family::B {
            factor(x[i], y[i])?;
        }
    }
    Ok(acc.into_integer())
}

/// `dim Σ^α W` for `dim W = m`.
pub fn dim_schur(alpha: &YoungDiagram, m: u32) -> Result<u128> {
    ensure!(m >= 1, "dimension must be positive");
    ensure!(
        alpha.height() <= m as usize,
        "diagram {alpha} has more than {m} rows"
    );
    let coords: Vec<i64> = alpha.padded(m as usize).iter().map(|&r| r as i64).collect();
    weyl_dimension(&Weight::from_integers(LieType::gl(m), &coords)?)
}

/// Dimension of a half-spinor representation: `2^{n-1}` for `D_n`, `2^n` for `B_n`.
pub fn dim_half_spinor(ty: LieType) -> Result<u128> {
    spinor_bundle_rank(ty, 0)
}

/// Rank of a spinor bundle on `OGr(k, V)`: `2^{n-1-k}` (type `D_n`) or
/// `2^{n-k}` (type `B_n`).
pub fn spinor_bundle_rank(ty: LieType, k: u32) -> Result<u128> {
    let n = ty.rank;
    match ty.family {
        Family::A => Err(Error::Precondition("spinors need type B or D".into())),
        Family::B => {
            ensure!(k <= n, "k = {k} exceeds rank {n}");
            Ok(1u128 << (n - k))
        }
        Family::D => {
            ensure!(k < n, "k = {k} exceeds rank {n} - 1");
            Ok(1u128 << (n - 1 - k))
        }
    }
}

/// An irreducible representation as reported by a cohomology computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RepLabel {
    /// The one-dimensional trivial representation.
    Trivial,
    /// A half-spinor representation; the sign is `None` in type `B`.
    HalfSpinor(Option<Sign>),
    HighestWeight(Weight),
}

impl RepLabel {
    /// Names the irreducible representation with highest weight `λ`.
    pub fn from_highest_weight(lambda: Weight) -> Self {
        if lambda.is_zero() {
            return RepLabel::Trivial;
        }
        let c = &lambda.doubled;
        if lambda.ty.is_orthogonal() {
            let n = c.len();
            let spinor_head = c[..n - 1].iter().all(|&x| x == 1);
            match (lambda.ty.family, c[n - 1]) {
                (Family::B, 1) if spinor_head => return RepLabel::HalfSpinor(None),
                (Family::D, 1) if spinor_head => return RepLabel::HalfSpinor(Some(Sign::Plus)),
                (Family::D, -1) if spinor_head => return RepLabel::HalfSpinor(Some(Sign::Minus)),
                _ => {}
            }
        }
        RepLabel::HighestWeight(lambda)
    }

    pub fn dimension(&self, ty: LieType) -> Result<u128> {
        match self {
            RepLabel::Trivial => Ok(1),
            RepLabel::HalfSpinor(_) => dim_half_spinor(ty),
            RepLabel::HighestWeight(w) => weyl_dimension(w),
        }
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Trivial => f.write_str("k"),
            RepLabel::HalfSpinor(None) => f.write_str("S"),
            RepLabel::HalfSpinor(Some(s)) => write!(f, "S{s}"),
            RepLabel::HighestWeight(w) => write!(f, "V_{}({})", w.ty, w),
        }
    }
}

impl FromStr for RepLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "k" => Ok(RepLabel::Trivial),
            "S" => Ok(RepLabel::HalfSpinor(None)),
            "S+" => Ok(RepLabel::HalfSpinor(Some(Sign::Plus))),
            "S-" => Ok(RepLabel::HalfSpinor(Some(Sign::Minus))),
            other => {
                let bad = || Error::Parse(format!("bad representation label {other:?}"));
                let body = other.strip_prefix("V_").ok_or_else(bad)?;
                let (tag, rest) = body.split_once('(').ok_or_else(bad)?;
                let coords = rest.strip_suffix(')').ok_or_else(bad)?;
                Ok(RepLabel::HighestWeight(Weight::parse(
                    tag.parse()?,
                    coords,
                )?))
            }
        }
    }
}

impl From<RepLabel> for String {
    fn from(r: RepLabel) -> Self {
        r.to_string()
    }
}

impl TryFrom<String> for RepLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
