//! Mechanical checks of the vanishing lemmas and the Ext computations that
//! feed the Bondal–Orlov criterion for the spinor embedding of a
//! hyperelliptic curve of genus `g` (`N = 2g + 2`).

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bbw::{
    cohomology_gr, cohomology_ogr_hom_spinors, cohomology_ogr_schur_spinor, dual_spinor_relabel,
    GradedRepList, PointType, SpaceParams,
};
use crate::diagrams::{DiagramFilter, Rectangle, YoungDiagram};
use crate::error::{ensure, Error, Result};
use crate::resolution::{build_resolution, classical_terms, spinor_subcat_generators};
use crate::tensor::{cauchy_one_plus, lr_product, pushforward_p2, wedge_sym2};
use crate::weyl::{Family, RepLabel, Sign};

/// Graded dimensions of an Ext group: sorted `(degree, multiplicity)` pairs,
/// zero multiplicities dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<ExtEntry>", into = "Vec<ExtEntry>")]
pub struct ExtTable {
    total: BTreeMap<i64, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtEntry {
    pub degree: i64,
    pub mult: u64,
}

impl ExtTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, degree: i64, mult: u64) {
        if mult > 0 {
            *self.total.entry(degree).or_insert(0) += mult;
        }
    }

    pub fn get(&self, degree: i64) -> u64 {
        self.total.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.total.is_empty()
    }

    pub fn entries(&self) -> Vec<ExtEntry> {
        self.total
            .iter()
            .map(|(&degree, &mult)| ExtEntry { degree, mult })
            .collect()
    }

    /// `k ⊕ k[-1]`.
    pub fn point_and_tangent() -> Self {
        [(0, 1), (1, 1)].into_iter().collect()
    }
}

impl FromIterator<(i64, u64)> for ExtTable {
    fn from_iter<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        let mut t = ExtTable::new();
        for (d, m) in iter {
            t.add(d, m);
        }
        t
    }
}

impl From<Vec<ExtEntry>> for ExtTable {
    fn from(v: Vec<ExtEntry>) -> Self {
        v.into_iter().map(|e| (e.degree, e.mult)).collect()
    }
}

impl From<ExtTable> for Vec<ExtEntry> {
    fn from(t: ExtTable) -> Self {
        t.entries()
    }
}

impl fmt::Display for ExtTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .total
            .iter()
            .map(|(&d, &m)| {
                let k = if m == 1 {
                    "k".to_string()
                } else {
                    format!("k^{m}")
                };
                if d == 0 {
                    k
                } else {
                    format!("{k}[{}]", -d)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn check_square(sp: SpaceParams, d: &YoungDiagram) -> Result<()> {
    ensure!(
        Rectangle::new(sp.k, sp.k).contains(d),
        "{d} not in Y_{{{0},{0}}}",
        sp.k
    );
    Ok(())
}

/// Whether `μ, ν` satisfy either hypothesis of the vanishing lemma: different
/// diagonal lengths, or equal ones with `|head μ| + |head ν| ≤ |tail μ| + |tail ν|`.
pub fn lemma_hypotheses_hold(mu: &YoungDiagram, nu: &YoungDiagram) -> bool {
    if mu.diag_len() != nu.diag_len() {
        return true;
    }
    let (hm, tm) = mu.head_tail();
    let (hn, tn) = nu.head_tail();
    hm.size() + hn.size() <= tm.size() + tn.size()
}

/// Whether `H^•(Gr(k,V), Σ^{μ̂} U^⊥ ⊗ Σ^{ν̂} U^⊥ ⊗ O(-1))` vanishes, where
/// `μ̂ = exp^{0,N-2k} μ` and likewise for `ν`.
///
/// Fails with [`Error::Counterexample`] when the lemma's hypotheses hold but
/// some summand has cohomology.
pub fn check_vanishing_pair(sp: SpaceParams, mu: &YoungDiagram, nu: &YoungDiagram) -> Result<bool> {
    ensure!(sp.dim >= 2 * sp.k + 2, "need N >= 2k+2, got {sp}");
    check_square(sp, mu)?;
    check_square(sp, nu)?;
    let p = sp.dim - 2 * sp.k;
    let rest = (sp.dim - sp.k) as usize;
    let product = lr_product(&mu.expand_vertical(p), &nu.expand_vertical(p), rest);
    for (gamma, _) in product.iter() {
        let h = cohomology_gr(sp.dim, sp.k, gamma, -1)?;
        if !h.is_acyclic() {
            if lemma_hypotheses_hold(mu, nu) {
                return Err(Error::Counterexample(format!(
                    "{sp}: mu = {mu}, nu = {nu}, summand gamma = {gamma} has {}",
                    h.to_string().trim_end()
                )));
            }
            return Ok(false);
        }
    }
    Ok(true)
}

/// `H^•(Gr(k,V), j_{1*}S_1 ⊗ j_{2*}S_2 ⊗ O(-1)) = 0` for spinor pushforwards
/// at distinct points of the given types.
///
/// The left factor comes from `j_{1*}(S^∨) ≅ j_{1*}(S')(-1)`; the relabelled
/// sign does not change the generating shapes, and the twist is the `O(-1)`
/// already present. The vanishing is checked on every pair of generators.
pub fn check_corollary_vanishing(
    sp: SpaceParams,
    first: PointType,
    second: PointType,
) -> Result<bool> {
    ensure!(!sp.is_odd(), "need even N, got {sp}");
    ensure!(sp.dim >= 2 * sp.k + 2, "need N >= 2k+2, got {sp}");
    let sign = (first == PointType::NonBranching).then_some(Sign::Plus);
    let (_, twist) = dual_spinor_relabel(sp, first, sign)?;
    ensure!(twist == -1, "unexpected twist {twist}");
    let left = spinor_subcat_generators(sp, first)?;
    let right = spinor_subcat_generators(sp, second)?;
    let pairs: Vec<(&YoungDiagram, &YoungDiagram)> = left
        .nus
        .iter()
        .flat_map(|m| right.nus.iter().map(move |n| (m, n)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|(m, n)| check_vanishing_pair(sp, m, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(results.into_iter().all(|v| v))
}

/// Koszul-graded cohomology: `per_m[m]` holds the cohomology of the term
/// `Λ^m(Sym²U)`, `total` its assembly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamePointExt {
    pub per_m: Vec<GradedRepList>,
    pub total: ExtTable,
}

/// `k[-2m]` for `m = 0, 1`, zero for larger `m`.
fn expected_same_point(m: usize) -> GradedRepList {
    match m {
        0 | 1 => GradedRepList::single(2 * m as u32, RepLabel::Trivial),
        _ => GradedRepList::new(),
    }
}

fn check_per_m(
    what: &str,
    per_m: &[GradedRepList],
    expect: impl Fn(usize) -> GradedRepList,
) -> Result<()> {
    for (m, table) in per_m.iter().enumerate() {
        let e = expect(m);
        if *table != e {
            return Err(Error::Counterexample(format!(
                "{what}, m = {m}: got {:?}, expected {:?}",
                table.entries(),
                e.entries()
            )));
        }
    }
    Ok(())
}

/// `Ext^•(S_{s1}, S_{s2} ⊗ Λ^m(Sym²U))` on `OGr(k, V)`, `dim V = 2n`,
/// `k ≤ n-2`, for every `m`, plus the Koszul assembly.
///
/// Fails with [`Error::Counterexample`] unless the per-`m` groups are
/// `k[-2m]` for `m ≤ 1` and zero otherwise (equal signs), or all zero
/// (opposite signs).
pub fn ext_same_point_d(sp: SpaceParams, s1: Sign, s2: Sign) -> Result<SamePointExt> {
    ensure!(!sp.is_odd(), "need even N, got {sp}");
    ensure!(sp.k + 2 <= sp.n(), "need k <= n-2, got {sp}");
    let per_m = (0..=sp.sym2_rank())
        .map(|m| {
            let mut out = GradedRepList::new();
            for (beta, mult) in wedge_sym2(m, sp.k)?.iter() {
                out.extend(&cohomology_ogr_hom_spinors(sp, beta, s1, s2)?.scaled(mult));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let what = format!(
        "Ext(S{s1}, S{s2} (x) L^m Sym^2 U) on OGr({}, {})",
        sp.k, sp.dim
    );
    if s1 == s2 {
        check_per_m(&what, &per_m, expected_same_point)?;
    } else {
        check_per_m(&what, &per_m, |_| GradedRepList::new())?;
    }
    let total = assemble_koszul(&per_m)?;
    Ok(SamePointExt { per_m, total })
}

/// `Ext^•(S, S ⊗ p_{2*}Λ^m(Sym²U_k))` on `OGr(k, V_P)` for odd `dim V_P`.
///
/// Each `Σ^{exp^{1,0}ν} U_k` is pushed forward to `Σ^{exp^{0,1}ν}(O ⊕ U')`
/// in homological degree `diag_len(ν)`, split over `U'` and paired with
/// `S^∨ ⊗ S`; the pushforward shift adds to the cohomological degree.
pub fn ext_same_point_b(reduced: SpaceParams) -> Result<SamePointExt> {
    ensure!(reduced.is_odd(), "need odd dim V_P, got {reduced}");
    ensure!(
        reduced.dim >= 2 * reduced.k + 3,
        "need dim V_P >= 2k+3, got {reduced}"
    );
    let k = reduced.k;
    let per_m = (0..=reduced.sym2_rank())
        .map(|m| {
            let mut out = GradedRepList::new();
            for (beta, mult) in wedge_sym2(m, k)?.iter() {
                let Some(pushed) = pushforward_p2(beta, k)? else {
                    continue;
                };
                for (beta_prime, m2) in pushed.terms.iter() {
                    for (gamma, m3) in cauchy_one_plus(beta_prime, k)?.iter() {
                        let h = cohomology_ogr_hom_spinors(reduced, gamma, Sign::Plus, Sign::Plus)?;
                        out.extend(&h.shifted(pushed.shift).scaled(mult * m2 * m3));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let what = format!(
        "Ext(S, S (x) p_2* L^m Sym^2 U) on OGr({}, {})",
        k, reduced.dim
    );
    check_per_m(&what, &per_m, expected_same_point)?;
    let total = assemble_koszul(&per_m)?;
    Ok(SamePointExt { per_m, total })
}

/// Places the degree-`q` part of `per_m[m]` in total degree `q - m`.
///
/// The Koszul spectral sequence has `E_1^{-m,q}` and differentials
/// `d_r: E_r^{p,q} → E_r^{p+r,q-r+1}`. The sum is returned only when at most
/// two classes are present and no pair of them can be joined by a
/// differential; otherwise the result is [`Error::Indeterminate`].
pub fn assemble_koszul(per_m: &[GradedRepList]) -> Result<ExtTable> {
    let cells: Vec<(i64, i64, u64)> = per_m
        .iter()
        .enumerate()
        .flat_map(|(m, table)| {
            table
                .entries()
                .into_iter()
                .map(move |e| (-(m as i64), e.degree as i64, e.mult))
        })
        .collect();
    let classes: u64 = cells.iter().map(|c| c.2).sum();
    if classes > 2 {
        return Err(Error::Indeterminate(format!(
            "{classes} classes on the first page, degeneration not forced"
        )));
    }
    for &(p, q, _) in &cells {
        for &(p2, q2, _) in &cells {
            let r = p2 - p;
            if r >= 1 && q2 == q - r + 1 {
                return Err(Error::Indeterminate(format!(
                    "possible differential d_{r} from E^({p},{q}) to E^({p2},{q2})"
                )));
            }
        }
    }
    Ok(cells
        .into_iter()
        .map(|(p, q, mult)| (q + p, mult))
        .collect())
}

/// The four cases of the criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    DifferentFibers,
    SameFiberDistinct,
    SamePointNonbranching,
    SamePointBranching,
}

impl CaseKind {
    pub const ALL: [CaseKind; 4] = [
        CaseKind::DifferentFibers,
        CaseKind::SameFiberDistinct,
        CaseKind::SamePointNonbranching,
        CaseKind::SamePointBranching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseKind::DifferentFibers => "different-fibers",
            CaseKind::SameFiberDistinct => "same-fiber-distinct",
            CaseKind::SamePointNonbranching => "same-point-nonbranching",
            CaseKind::SamePointBranching => "same-point-branching",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

impl Status {
    /// `0`, `1` or `2`.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Indeterminate => 2,
        }
    }

    /// Fail dominates indeterminate, which dominates pass.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Indeterminate, _) | (_, Status::Indeterminate) => Status::Indeterminate,
            _ => Status::Pass,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: CaseKind,
    pub ext: ExtTable,
    pub expected: ExtTable,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub genus: u32,
    pub k: u32,
    pub cases: Vec<CaseResult>,
    pub verdict: Status,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "genus {} k {} (N = {})",
            self.genus,
            self.k,
            2 * self.genus + 2
        )?;
        for c in &self.cases {
            write!(
                f,
                "  {:<24} Ext = {:<10} expected {:<10} {}",
                c.case.name(),
                c.ext,
                c.expected,
                c.status
            )?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "verdict: {}", self.verdict)
    }
}

fn case_result(
    case: CaseKind,
    expected: ExtTable,
    computed: Result<ExtTable>,
) -> Result<CaseResult> {
    let (ext, status, detail) = match computed {
        Ok(ext) if ext == expected => (ext, Status::Pass, None),
        Ok(ext) => (ext, Status::Fail, Some("unexpected Ext".to_string())),
        Err(Error::Counterexample(d) | Error::Mismatch(d)) => {
            (ExtTable::new(), Status::Fail, Some(d))
        }
        Err(Error::Indeterminate(d)) => (ExtTable::new(), Status::Indeterminate, Some(d)),
        Err(e) => return Err(e),
    };
    Ok(CaseResult {
        case,
        ext,
        expected,
        status,
        detail,
    })
}

fn different_fibers(sp: SpaceParams) -> Result<ExtTable> {
    for a in PointType::ALL {
        for b in PointType::ALL {
            if !check_corollary_vanishing(sp, a, b)? {
                return Err(Error::Counterexample(format!(
                    "{sp}: no vanishing for point types {a} and {b}"
                )));
            }
        }
    }
    Ok(ExtTable::new())
}

/// Every cohomological input of the Bondal–Orlov criterion for the curve
/// of genus `g` and level `k`: vanishing across fibers, vanishing for the
/// two points of a fiber, and `k ⊕ k[-1]` for a point against itself.
pub fn bondal_orlov_report(g: u32, k: u32) -> Result<CriterionReport> {
    ensure!(g >= 2, "genus must be at least 2, got {g}");
    ensure!(k >= 1 && k < g, "need 1 <= k <= g-1, got g={g} k={k}");
    let sp = SpaceParams::new(2 * g + 2, k)?;
    let cases = CaseKind::ALL
        .par_iter()
        .map(|&case| {
            let (expected, computed) = match case {
                CaseKind::DifferentFibers => (ExtTable::new(), different_fibers(sp)),
                CaseKind::SameFiberDistinct => (
                    ExtTable::new(),
                    ext_same_point_d(sp, Sign::Plus, Sign::Minus).map(|e| e.total),
                ),
                CaseKind::SamePointNonbranching => (
                    ExtTable::point_and_tangent(),
                    ext_same_point_d(sp, Sign::Plus, Sign::Plus).map(|e| e.total),
                ),
                CaseKind::SamePointBranching => (
                    ExtTable::point_and_tangent(),
                    sp.reduced().and_then(ext_same_point_b).map(|e| e.total),
                ),
            };
            case_result(case, expected, computed)
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = cases
        .iter()
        .fold(Status::Pass, |acc, c| acc.combine(c.status));
    Ok(CriterionReport {
        genus: g,
        k,
        cases,
        verdict,
    })
}

/// Lemmas that can be swept over ranges of `(N, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    CohomologyUalpha,
    Wt,
    VanishingTerms,
    SamePD,
    SamePB,
    ResolutionExample,
}

impl Lemma {
    pub const ALL: [Lemma; 6] = [
        Lemma::CohomologyUalpha,
        Lemma::Wt,
        Lemma::VanishingTerms,
        Lemma::SamePD,
        Lemma::SamePB,
        Lemma::ResolutionExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::CohomologyUalpha => "cohomology-ualpha",
            Lemma::Wt => "wt",
            Lemma::VanishingTerms => "vanishing-terms",
            Lemma::SamePD => "same-p-D",
            Lemma::SamePB => "same-p-B",
            Lemma::ResolutionExample => "resolution-example",
        }
    }

    /// Whether `(N, k)` lies in the lemma's range. For `same-p-B`, `N` is
    /// `dim V` and the computation runs on `V_P` of dimension `N - 1`.
    pub fn applies(self, dim: u32, k: u32) -> bool {
        if k == 0 || k >= dim {
            return false;
        }
        match self {
            Lemma::CohomologyUalpha | Lemma::VanishingTerms => dim >= 2 * k + 2,
            Lemma::Wt => dim >= 2 * k + 3,
            Lemma::SamePD | Lemma::SamePB => dim.is_multiple_of(2) && k + 2 <= dim / 2,
            Lemma::ResolutionExample => k <= 3 && dim >= 2 * k + 2,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown lemma '{s}'")))
    }
}

/// Result of a sweep: instances checked, counterexamples and undecided cases.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub instances: u64,
    pub counterexamples: Vec<String>,
    pub indeterminate: Vec<String>,
}

impl SweepOutcome {
    pub fn status(&self) -> Status {
        if !self.counterexamples.is_empty() {
            Status::Fail
        } else if !self.indeterminate.is_empty() {
            Status::Indeterminate
        } else {
            Status::Pass
        }
    }

    fn record(&mut self, r: Result<()>) -> Result<()> {
        self.instances += 1;
        match r {
            Ok(()) => Ok(()),
            Err(Error::Counterexample(d) | Error::Mismatch(d)) => {
                self.counterexamples.push(d);
                Ok(())
            }
            Err(Error::Indeterminate(d)) => {
                self.indeterminate.push(d);
                Ok(())
            }
            Err(e) => Err(e),
        }
    }

    fn merge(&mut self, other: SweepOutcome) {
        self.instances += other.instances;
        self.counterexamples.extend(other.counterexamples);
        self.indeterminate.extend(other.indeterminate);
    }
}

/// Runs `lemma` over every `(N, k)` in the ranges it applies to. Parameter
/// points run in parallel; results are merged in input order.
pub fn sweep(lemma: Lemma, dims: &[u32], ks: &[u32]) -> Result<SweepOutcome> {
    let points: Vec<(u32, u32)> = dims
        .iter()
        .flat_map(|&n| ks.iter().map(move |&k| (n, k)))
        .filter(|&(n, k)| lemma.applies(n, k))
        .collect();
    let parts = points
        .par_iter()
        .map(|&(n, k)| sweep_point(lemma, SpaceParams::new(n, k)?))
        .collect::<Result<Vec<_>>>()?;
    let mut out = SweepOutcome::default();
    for p in parts {
        out.merge(p);
    }
    Ok(out)
}

fn sign_pairs(sp: SpaceParams) -> Vec<(Sign, Sign)> {
    match sp.spin_type().family {
        Family::D => vec![
            (Sign::Plus, Sign::Plus),
            (Sign::Plus, Sign::Minus),
            (Sign::Minus, Sign::Plus),
            (Sign::Minus, Sign::Minus),
        ],
        _ => vec![(Sign::Plus, Sign::Plus)],
    }
}

/// Sweep of a single parameter point.
pub fn sweep_point(lemma: Lemma, sp: SpaceParams) -> Result<SweepOutcome> {
    let mut out = SweepOutcome::default();
    match lemma {
        Lemma::CohomologyUalpha => {
            for beta in Rectangle::new(sp.dim - sp.k, sp.k).diagrams() {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.record(cohomology_ogr_schur_spinor(sp, &beta, sign).map(|_| ()))?;
                }
            }
        }
        Lemma::Wt => {
            let mut survivors = std::collections::BTreeSet::new();
            let admissible = Rectangle::new(sp.k + 1, sp.k)
                .diagrams()
                .into_iter()
                .filter(|b| b.width() as usize <= b.height() + 1);
            for beta in admissible {
                for (l, r) in sign_pairs(sp) {
                    let h = cohomology_ogr_hom_spinors(sp, &beta, l, r);
                    if let Ok(h) = &h {
                        if !h.is_acyclic() {
                            survivors.insert(beta.clone());
                        }
                    }
                    out.record(h.map(|_| ()))?;
                }
            }
            let expected: std::collections::BTreeSet<YoungDiagram> = [
                YoungDiagram::empty(),
                YoungDiagram::row(1),
                YoungDiagram::row(2),
            ]
            .into();
            if survivors != expected {
                let list: Vec<String> = survivors.iter().map(|s| format!("({s})")).collect();
                out.counterexamples
                    .push(format!("{sp}: survivors {}", list.join(" ")));
            }
        }
        Lemma::VanishingTerms => {
            let square = Rectangle::new(sp.k, sp.k).diagrams();
            for mu in &square {
                for nu in &square {
                    if lemma_hypotheses_hold(mu, nu) {
                        out.record(check_vanishing_pair(sp, mu, nu).and_then(|v| {
                            if v {
                                Ok(())
                            } else {
                                Err(Error::Counterexample(format!("{sp}: mu = {mu}, nu = {nu}")))
                            }
                        }))?;
                    }
                }
            }
        }
        Lemma::SamePD => {
            for (l, r) in sign_pairs(sp) {
                out.record(ext_same_point_d(sp, l, r).and_then(|e| {
                    let expect = if l == r {
                        ExtTable::point_and_tangent()
                    } else {
                        ExtTable::new()
                    };
                    ensure_table(sp, &e.total, &expect)
                }))?;
            }
        }
        Lemma::SamePB => {
            out.record(
                sp.reduced()
                    .and_then(ext_same_point_b)
                    .and_then(|e| ensure_table(sp, &e.total, &ExtTable::point_and_tangent())),
            )?;
        }
        Lemma::ResolutionExample => {
            for sign in [Sign::Plus, Sign::Minus] {
                out.record(resolution_example(sp, sign))?;
            }
        }
    }
    Ok(out)
}

fn ensure_table(sp: SpaceParams, got: &ExtTable, expect: &ExtTable) -> Result<()> {
    if got == expect {
        Ok(())
    } else {
        Err(Error::Counterexample(format!(
            "{sp}: assembled Ext {got}, expected {expect}"
        )))
    }
}

/// Built resolution equals the classical small-`k` complex and has Euler rank zero.
pub fn resolution_example(sp: SpaceParams, sign: Sign) -> Result<()> {
    let r = build_resolution(sp, sign)?;
    let classical = classical_terms(sp, sign)?
        .ok_or_else(|| Error::Precondition(format!("no classical complex for k = {}", sp.k)))?;
    if r.terms != classical {
        return Err(Error::Counterexample(format!(
            "{sp} sign {sign}: built {:?}, classical {classical:?}",
            r.terms
        )));
    }
    let euler = r.euler_rank()?;
    if euler != 0 {
        return Err(Error::Counterexample(format!("{sp}: Euler rank {euler}")));
    }
    Ok(())
}

/// Diagrams of `Y_{k,k}`, optionally symmetric only.
pub fn square_diagrams(k: u32, symmetric: bool) -> Vec<YoungDiagram> {
    let filter = if symmetric {
        DiagramFilter::symmetric()
    } else {
        DiagramFilter::default()
    };
    crate::diagrams::enumerate(Rectangle::new(k, k), filter)
}
