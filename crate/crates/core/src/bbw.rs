//! Borel–Bott–Weil cohomology of the homogeneous bundles that appear on
//! `Gr(k, V)` and `OGr(k, V)`.
//!
//! The orthogonal computations are done twice: once by adding `ρ` and
//! dominantizing, once by the closed formulas for horizontally expanded
//! symmetric diagrams. The public entry points refuse to answer if the two
//! disagree.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{Rectangle, YoungDiagram};
use crate::error::{ensure, Error, Result};
use crate::weyl::{dominantize, rho, Dominantization, Family, LieType, RepLabel, Sign, Weight};

/// `dim V = N` and the rank `k` of the (isotropic) subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceParams {
    pub dim: u32,
    pub k: u32,
}

impl SpaceParams {
    pub fn new(dim: u32, k: u32) -> Result<Self> {
        ensure!(k >= 1, "k must be positive");
        ensure!(k < dim, "k = {k} must be below dim V = {dim}");
        Ok(Self { dim, k })
    }

    /// `n = ⌊N/2⌋`.
    pub fn n(&self) -> u32 {
        self.dim / 2
    }

    pub fn is_odd(&self) -> bool {
        self.dim % 2 == 1
    }

    /// Type of `Spin(V)`.
    pub fn spin_type(&self) -> LieType {
        LieType::spin(self.dim)
    }

    /// `g` with `N = 2g + 2`, for even `N ≥ 4`.
    pub fn genus(&self) -> Option<u32> {
        (!self.is_odd() && self.dim >= 4).then(|| self.dim / 2 - 1)
    }

    /// Same `k`, `dim V` lowered by one (the space `V_P` at a branching point).
    pub fn reduced(&self) -> Result<Self> {
        Self::new(self.dim - 1, self.k)
    }

    /// `k(k+1)/2`, the rank of `Sym²U`.
    pub fn sym2_rank(&self) -> u32 {
        self.k * (self.k + 1) / 2
    }
}

impl fmt::Display for SpaceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} k={}", self.dim, self.k)
    }
}

/// Points of `P¹` under a smooth (non-branching) or corank-one (branching)
/// quadric of the pencil.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointType {
    NonBranching,
    Branching,
}

impl PointType {
    pub const ALL: [PointType; 2] = [PointType::NonBranching, PointType::Branching];
}

impl fmt::Display for PointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointType::NonBranching => "non-branching",
            PointType::Branching => "branching",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradedEntry {
    pub degree: u32,
    pub rep: RepLabel,
    pub mult: u64,
}

/// Graded list of irreducible representations; empty means acyclic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<GradedEntry>", into = "Vec<GradedEntry>")]
pub struct GradedRepList {
    entries: BTreeMap<(u32, RepLabel), u64>,
}

impl GradedRepList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(degree: u32, rep: RepLabel) -> Self {
        let mut g = Self::new();
        g.push(degree, rep, 1);
        g
    }

    pub fn push(&mut self, degree: u32, rep: RepLabel, mult: u64) {
        if mult > 0 {
            *self.entries.entry((degree, rep)).or_insert(0) += mult;
        }
    }

    pub fn extend(&mut self, other: &GradedRepList) {
        for e in other.entries() {
            self.push(e.degree, e.rep, e.mult);
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries ordered by degree, then representation.
    pub fn entries(&self) -> Vec<GradedEntry> {
        self.entries
            .iter()
            .map(|((degree, rep), &mult)| GradedEntry {
                degree: *degree,
                rep: rep.clone(),
                mult,
            })
            .collect()
    }

    /// Every entry moved up by `by` degrees.
    pub fn shifted(&self, by: u32) -> Self {
        let mut out = Self::new();
        for e in self.entries() {
            out.push(e.degree + by, e.rep, e.mult);
        }
        out
    }

    /// Every entry's multiplicity scaled by `factor`.
    pub fn scaled(&self, factor: u64) -> Self {
        let mut out = Self::new();
        for e in self.entries() {
            out.push(e.degree, e.rep, e.mult * factor);
        }
        out
    }

    /// Degrees carrying at least one entry.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.entries.keys().map(|(d, _)| *d).collect();
        d.dedup();
        d
    }
}

impl From<Vec<GradedEntry>> for GradedRepList {
    fn from(v: Vec<GradedEntry>) -> Self {
        let mut g = Self::new();
        for e in v {
            g.push(e.degree, e.rep, e.mult);
        }
        g
    }
}

impl From<GradedRepList> for Vec<GradedEntry> {
    fn from(g: GradedRepList) -> Self {
        g.entries()
    }
}

impl fmt::Display for GradedRepList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_acyclic() {
            return writeln!(f, "acyclic");
        }
        for e in self.entries() {
            writeln!(f, "H^{} = {} (x{})", e.degree, e.rep, e.mult)?;
        }
        Ok(())
    }
}

/// Which tautological bundle a Schur functor is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Carrier {
    U,
    UPerp,
}

/// Homogeneous space on which a bundle lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Gr,
    Ogr,
}

/// Symbolic equivariant bundle `Σ^shape(carrier) ⊗ O(twist·H) ⊗ [S^∨] ⊗ [S']`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleExpr {
    pub carrier: Carrier,
    pub shape: YoungDiagram,
    pub twist: i64,
    /// Left spinor factor: `(dual, sign)`.
    pub spinor_left: Option<(bool, Sign)>,
    pub spinor_right: Option<Sign>,
}

impl BundleExpr {
    pub fn schur(carrier: Carrier, shape: YoungDiagram) -> Self {
        Self {
            carrier,
            shape,
            twist: 0,
            spinor_left: None,
            spinor_right: None,
        }
    }

    pub fn twisted(mut self, twist: i64) -> Self {
        self.twist = twist;
        self
    }

    pub fn with_spinor(mut self, sign: Sign) -> Self {
        self.spinor_right = Some(sign);
        self
    }

    pub fn with_dual_spinor(mut self, sign: Sign) -> Self {
        self.spinor_left = Some((true, sign));
        self
    }

    /// Dispatches to the cohomology computation matching the bundle's shape.
    pub fn cohomology(&self, space: Space, sp: SpaceParams) -> Result<GradedRepList> {
        match (space, self.carrier, self.spinor_left, self.spinor_right) {
            (Space::Gr, Carrier::UPerp, None, None) => {
                cohomology_gr(sp.dim, sp.k, &self.shape, self.twist)
            }
            (Space::Ogr, Carrier::U, None, Some(sign)) if self.twist == 0 => {
                cohomology_ogr_schur_spinor(sp, &self.shape, sign)
            }
            (Space::Ogr, Carrier::U, Some((true, left)), Some(right)) if self.twist == 0 => {
                cohomology_ogr_hom_spinors(sp, &self.shape, left, right)
            }
            _ => Err(Error::Precondition(format!(
                "no cohomology rule for {self} on {space:?}"
            ))),
        }
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let carrier = match self.carrier {
            Carrier::U => "U",
            Carrier::UPerp => "U^perp",
        };
        write!(f, "Sigma^({}) {}", self.shape, carrier)?;
        if self.twist != 0 {
            write!(f, " (x) O({})", self.twist)?;
        }
        if let Some((dual, s)) = self.spinor_left {
            write!(f, " (x) S{}{}", s, if dual { "^v" } else { "" })?;
        }
        if let Some(s) = self.spinor_right {
            write!(f, " (x) S{s}")?;
        }
        Ok(())
    }
}

fn label_of(dominant: &Weight) -> RepLabel {
    RepLabel::from_highest_weight(dominant - &rho(dominant.lie_type()))
}

fn half_spinor(ty: LieType, sign: Sign) -> RepLabel {
    match ty.family {
        Family::D => RepLabel::HalfSpinor(Some(sign)),
        _ => RepLabel::HalfSpinor(None),
    }
}

fn check_schur_spinor(sp: SpaceParams, beta: &YoungDiagram) -> Result<()> {
    ensure!(sp.dim >= 2 * sp.k + 2, "need N >= 2k+2, got {sp}");
    ensure!(
        Rectangle::new(sp.dim - sp.k, sp.k).contains(beta),
        "{beta} not in Y_{{{},{}}}",
        sp.dim - sp.k,
        sp.k
    );
    Ok(())
}

/// Generic path for `H^•(OGr(k,V), Σ^β U ⊗ S_sign)`: form the weight of the
/// bundle, add `ρ` and dominantize.
pub fn ogr_schur_spinor_generic(
    sp: SpaceParams,
    beta: &YoungDiagram,
    right_sign: Sign,
) -> Result<GradedRepList> {
    check_schur_spinor(sp, beta)?;
    let ty = sp.spin_type();
    let (n, k) = (sp.n() as usize, sp.k as usize);
    let rows = beta.padded(k);
    let mut delta: Vec<i64> = rows.iter().rev().map(|&b| 1 - 2 * b as i64).collect();
    delta.resize(n, 1);
    if ty.family == Family::D && right_sign == Sign::Minus {
        delta[n - 1] = -1;
    }
    let mu = &Weight::from_doubled(ty, delta)? + &rho(ty);
    Ok(match dominantize(&mu) {
        Dominantization::Singular => GradedRepList::new(),
        Dominantization::Regular {
            dominant, length, ..
        } => GradedRepList::single(length, label_of(&dominant)),
    })
}

/// Closed form: nonzero only for `β = exp^{N-2k,0} ν` with `ν` symmetric, and
/// then `S_{(-1)^s}` in degree `s(N-2k) + (|ν|-s)/2` where `s = diag_len(ν)`.
pub fn ogr_schur_spinor_closed(
    sp: SpaceParams,
    beta: &YoungDiagram,
    right_sign: Sign,
) -> Result<GradedRepList> {
    check_schur_spinor(sp, beta)?;
    let p = sp.dim - 2 * sp.k;
    let Some(nu) = beta.contract_horizontal(p).filter(|nu| nu.is_symmetric()) else {
        return Ok(GradedRepList::new());
    };
    let s = nu.diag_len() as u32;
    let degree = s * p + (nu.size() - s) / 2;
    let sign = right_sign * Sign::parity(s as u64);
    Ok(GradedRepList::single(
        degree,
        half_spinor(sp.spin_type(), sign),
    ))
}

/// `H^•(OGr(k,V), Σ^β U ⊗ S)`, both paths computed and compared.
pub fn cohomology_ogr_schur_spinor(
    sp: SpaceParams,
    beta: &YoungDiagram,
    right_sign: Sign,
) -> Result<GradedRepList> {
    let generic = ogr_schur_spinor_generic(sp, beta, right_sign)?;
    let closed = ogr_schur_spinor_closed(sp, beta, right_sign)?;
    if generic != closed {
        return Err(Error::Mismatch(format!(
            "Sigma^({beta}) U (x) S{right_sign} on OGr({}, {}): generic {generic:?} vs closed {closed:?}",
            sp.k, sp.dim
        )));
    }
    Ok(generic)
}

fn check_hom_spinors(sp: SpaceParams, beta: &YoungDiagram) -> Result<()> {
    ensure!(sp.dim >= 2 * sp.k + 3, "need N >= 2k+3, got {sp}");
    ensure!(
        beta.height() <= sp.k as usize,
        "{beta} has more than k = {} rows",
        sp.k
    );
    ensure!(
        beta.width() as usize <= beta.height() + 1,
        "{beta} violates w <= h + 1"
    );
    Ok(())
}

/// Generic path for `H^•(OGr(k,V), Σ^β U ⊗ S_left^∨ ⊗ S_right)`.
///
/// `S^∨ ⊗ S'` is split into the summands with weights
/// `δ_t = (-β_k, …, -β_1; 1^t, 0^{n-k-t})`, `0 ≤ t ≤ n-k`, each taken with
/// multiplicity one; in type `D` only `t` with `(-1)^t = left·right` occur.
pub fn ogr_hom_spinors_generic(
    sp: SpaceParams,
    beta: &YoungDiagram,
    left: Sign,
    right: Sign,
) -> Result<GradedRepList> {
    check_hom_spinors(sp, beta)?;
    let ty = sp.spin_type();
    let (n, k) = (sp.n() as usize, sp.k as usize);
    let r = rho(ty);
    let head: Vec<i64> = beta
        .padded(k)
        .iter()
        .rev()
        .map(|&b| -2 * b as i64)
        .collect();
    let mut out = GradedRepList::new();
    for t in 0..=(n - k) {
        if ty.family == Family::D && Sign::parity(t as u64) != left * right {
            continue;
        }
        let mut delta = head.clone();
        delta.extend(std::iter::repeat_n(2, t));
        delta.resize(n, 0);
        let mu = &Weight::from_doubled(ty, delta)? + &r;
        if let Dominantization::Regular {
            dominant, length, ..
        } = dominantize(&mu)
        {
            out.push(length, label_of(&dominant), 1);
        }
    }
    Ok(out)
}

/// Closed form: `k[-t]` exactly when `β = (t)` with `t ≤ 2` and, in type `D`,
/// `right = left·(-1)^t`.
pub fn ogr_hom_spinors_closed(
    sp: SpaceParams,
    beta: &YoungDiagram,
    left: Sign,
    right: Sign,
) -> Result<GradedRepList> {
    check_hom_spinors(sp, beta)?;
    let t = beta.width();
    let signs_ok = sp.spin_type().family != Family::D || Sign::parity(t as u64) == left * right;
    Ok(if beta.height() <= 1 && t <= 2 && signs_ok {
        GradedRepList::single(t, RepLabel::Trivial)
    } else {
        GradedRepList::new()
    })
}

/// `H^•(OGr(k,V), Σ^β U ⊗ S_left^∨ ⊗ S_right)`, both paths compared.
pub fn cohomology_ogr_hom_spinors(
    sp: SpaceParams,
    beta: &YoungDiagram,
    left: Sign,
    right: Sign,
) -> Result<GradedRepList> {
    let generic = ogr_hom_spinors_generic(sp, beta, left, right)?;
    let closed = ogr_hom_spinors_closed(sp, beta, left, right)?;
    if generic != closed {
        return Err(Error::Mismatch(format!(
            "Sigma^({beta}) U (x) S{left}^v (x) S{right} on OGr({}, {}): generic {generic:?} vs closed {closed:?}",
            sp.k, sp.dim
        )));
    }
    Ok(generic)
}

/// `H^•(Gr(k,V), Σ^γ U^⊥ ⊗ O(twist))` for `dim V = N`.
///
/// The `GL(N)` weight is `τ = (N-1+d+1, …, N-k+d+1; N-k+γ_1, …, 1+γ_{N-k})`
/// with `d = twist`, i.e. `ρ + (1, …, 1) + (d^k; γ)`.
pub fn cohomology_gr(dim: u32, k: u32, gamma: &YoungDiagram, twist: i64) -> Result<GradedRepList> {
    ensure!(k >= 1 && k < dim, "need 1 <= k < N, got N={dim} k={k}");
    let rest = (dim - k) as usize;
    ensure!(
        gamma.height() <= rest,
        "{gamma} has more than N-k = {rest} rows"
    );
    let n = dim as i64;
    let k = k as i64;
    let mut tau: Vec<i64> = (1..=k).map(|i| n - i + twist + 1).collect();
    tau.extend(
        gamma
            .padded(rest)
            .iter()
            .enumerate()
            .map(|(i, &g)| n - k - i as i64 + g as i64),
    );
    let ty = LieType::gl(dim);
    let tau = Weight::from_integers(ty, &tau)?;
    Ok(match dominantize(&tau) {
        Dominantization::Singular => GradedRepList::new(),
        Dominantization::Regular {
            dominant, length, ..
        } => {
            let shift = &rho(ty) + &Weight::from_integers(ty, &vec![1; dim as usize])?;
            GradedRepList::single(length, RepLabel::from_highest_weight(&dominant - &shift))
        }
    })
}

/// Pushforward of a dual spinor bundle to `Gr(k,V)` rewritten as a twist of a
/// spinor pushforward: returns the new sign and the twist `-1`.
///
/// At non-branching points the sign is kept when `g-k` is odd and flipped
/// when it is even (`N = 2g+2`); branching points carry a single spinor bundle.
pub fn dual_spinor_relabel(
    sp: SpaceParams,
    point: PointType,
    sign: Option<Sign>,
) -> Result<(Option<Sign>, i64)> {
    let g = sp
        .genus()
        .ok_or_else(|| Error::Precondition(format!("need even N >= 4, got {sp}")))?;
    match point {
        PointType::Branching => Ok((None, -1)),
        PointType::NonBranching => {
            let sign = sign.ok_or_else(|| {
                Error::Precondition("non-branching points need a spinor sign".into())
            })?;
            let odd = (g as i64 - sp.k as i64).rem_euclid(2) == 1;
            Ok((Some(if odd { sign } else { -sign }), -1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::from_rows(rows)
    }

    fn sp(n: u32, k: u32) -> SpaceParams {
        SpaceParams::new(n, k).unwrap()
    }

    #[test]
    fn schur_spinor_examples() {
        for (n, k) in [(6, 1), (8, 2), (9, 2), (10, 3), (7, 1)] {
            let s = sp(n, k);
            let ty = s.spin_type();
            for sign in [Sign::Plus, Sign::Minus] {
                let h0 = cohomology_ogr_schur_spinor(s, &YoungDiagram::empty(), sign).unwrap();
                assert_eq!(h0, GradedRepList::single(0, half_spinor(ty, sign)));
                let b = YoungDiagram::row(n - 2 * k + 1);
                let h = cohomology_ogr_schur_spinor(s, &b, sign).unwrap();
                assert_eq!(h, GradedRepList::single(n - 2 * k, half_spinor(ty, -sign)));
                let h = cohomology_ogr_schur_spinor(s, &d(&[1]), sign).unwrap();
                assert!(h.is_acyclic());
            }
        }
    }

    #[test]
    fn schur_spinor_rejects_bad_input() {
        assert!(cohomology_ogr_schur_spinor(sp(5, 2), &YoungDiagram::empty(), Sign::Plus).is_err());
        assert!(cohomology_ogr_schur_spinor(sp(6, 1), &d(&[6]), Sign::Plus).is_err());
        assert!(cohomology_ogr_schur_spinor(sp(6, 1), &d(&[1, 1]), Sign::Plus).is_err());
    }

    #[test]
    fn hom_spinor_examples() {
        let s = sp(8, 2);
        let h =
            cohomology_ogr_hom_spinors(s, &YoungDiagram::empty(), Sign::Plus, Sign::Plus).unwrap();
        assert_eq!(h, GradedRepList::single(0, RepLabel::Trivial));
        let h = cohomology_ogr_hom_spinors(s, &d(&[1]), Sign::Plus, Sign::Minus).unwrap();
        assert_eq!(h, GradedRepList::single(1, RepLabel::Trivial));
        for (l, r) in [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus)] {
            let h = cohomology_ogr_hom_spinors(s, &d(&[1, 1]), l, r).unwrap();
            assert!(h.is_acyclic());
        }
        // Type B ignores signs.
        let h = cohomology_ogr_hom_spinors(sp(7, 2), &d(&[2]), Sign::Plus, Sign::Plus).unwrap();
        assert_eq!(h, GradedRepList::single(2, RepLabel::Trivial));
    }

    #[test]
    fn hom_spinor_preconditions() {
        assert!(cohomology_ogr_hom_spinors(sp(7, 2), &d(&[3]), Sign::Plus, Sign::Plus).is_err());
        assert!(cohomology_ogr_hom_spinors(sp(6, 2), &d(&[1]), Sign::Plus, Sign::Plus).is_err());
        assert!(
            cohomology_ogr_hom_spinors(sp(9, 2), &d(&[1, 1, 1]), Sign::Plus, Sign::Plus).is_err()
        );
    }

    #[test]
    fn grassmannian_examples() {
        let h = cohomology_gr(6, 2, &YoungDiagram::empty(), 0).unwrap();
        assert_eq!(h, GradedRepList::single(0, RepLabel::Trivial));
        assert!(cohomology_gr(6, 2, &YoungDiagram::empty(), -1)
            .unwrap()
            .is_acyclic());
        // Canonical bundle O(-N) sits in top degree k(N-k).
        let h = cohomology_gr(6, 2, &YoungDiagram::empty(), -6).unwrap();
        assert_eq!(h.degrees(), vec![8]);
        // det U^perp = O(-1): Σ^{1^{N-k}} U^⊥ is acyclic as well.
        assert!(cohomology_gr(6, 1, &YoungDiagram::column(5), 0)
            .unwrap()
            .is_acyclic());
        // H^0(O(1)) = Λ^k of the standard representation.
        let h = cohomology_gr(5, 2, &YoungDiagram::empty(), 1).unwrap();
        let e = &h.entries()[0];
        assert_eq!(e.degree, 0);
        assert_eq!(e.rep.dimension(LieType::gl(5)).unwrap(), 10);
        assert!(cohomology_gr(5, 2, &YoungDiagram::column(4), 0).is_err());
    }

    #[test]
    fn dual_relabel() {
        assert_eq!(
            dual_spinor_relabel(sp(6, 1), PointType::NonBranching, Some(Sign::Plus)).unwrap(),
            (Some(Sign::Plus), -1)
        );
        assert_eq!(
            dual_spinor_relabel(sp(8, 1), PointType::NonBranching, Some(Sign::Plus)).unwrap(),
            (Some(Sign::Minus), -1)
        );
        assert_eq!(
            dual_spinor_relabel(sp(8, 2), PointType::Branching, None).unwrap(),
            (None, -1)
        );
        assert!(dual_spinor_relabel(sp(7, 1), PointType::Branching, None).is_err());
    }

    #[test]
    fn bundle_dispatch() {
        let s = sp(8, 2);
        let b = BundleExpr::schur(Carrier::U, d(&[1]))
            .with_dual_spinor(Sign::Plus)
            .with_spinor(Sign::Minus);
        assert_eq!(
            b.cohomology(Space::Ogr, s).unwrap(),
            GradedRepList::single(1, RepLabel::Trivial)
        );
        let b = BundleExpr::schur(Carrier::UPerp, YoungDiagram::empty()).twisted(-1);
        assert!(b.cohomology(Space::Gr, s).unwrap().is_acyclic());
        assert!(BundleExpr::schur(Carrier::U, d(&[1]))
            .cohomology(Space::Gr, s)
            .is_err());
    }

    #[test]
    fn graded_list_merges_and_renders() {
        let mut g = GradedRepList::new();
        g.push(1, RepLabel::Trivial, 1);
        g.push(0, RepLabel::HalfSpinor(Some(Sign::Plus)), 1);
        g.push(1, RepLabel::Trivial, 2);
        assert_eq!(g.len(), 2);
        assert_eq!(g.to_string(), "H^0 = S+ (x1)\nH^1 = k (x3)\n");
        assert_eq!(GradedRepList::new().to_string(), "acyclic\n");
    }
}
