//! Locally free resolutions of `j_* S` on `Gr(k, V)` for the embedding
//! `j: OGr(k, V) → Gr(k, V)`, and the generating sets for spinor
//! pushforwards from degenerate quadrics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bbw::{cohomology_ogr_schur_spinor, ogr_schur_spinor_closed, PointType, SpaceParams};
use crate::diagrams::{enumerate, DiagramFilter, Rectangle, YoungDiagram};
use crate::error::{ensure, Error, Result};
use crate::tensor::{cauchy_one_plus, pushforward_p2};
use crate::weyl::{dim_half_spinor, dim_schur, Family, RepLabel, Sign};

/// `S_sign ⊗ Σ^shape U^⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub sign: Sign,
    pub shape: YoungDiagram,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub t: u32,
    pub summands: Vec<Summand>,
}

/// `0 → F_{k(k+1)/2} → … → F_1 → F_0 → j_* S → 0`.
///
/// `F_t` is the sum of `S_{base·(-1)^s} ⊗ Σ^{exp^{0,N-2k} ν} U^⊥` over
/// symmetric `ν ∈ Y_{k,k}` with `|ν| + s = 2t`, `s = diag_len(ν)`. In type
/// `B` the signs are formal: there is a single spinor representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub params: SpaceParams,
    pub base_sign: Sign,
    pub terms: Vec<ResolutionTerm>,
}

fn terms_from_map(len: u32, map: BTreeMap<u32, BTreeSet<Summand>>) -> Vec<ResolutionTerm> {
    (0..=len)
        .map(|t| ResolutionTerm {
            t,
            summands: map
                .get(&t)
                .map(|s| s.iter().cloned().collect())
                .unwrap_or_default(),
        })
        .collect()
}

/// Terms assembled from the closed description.
pub fn direct_terms(sp: SpaceParams, base_sign: Sign) -> Vec<ResolutionTerm> {
    let p = sp.dim - 2 * sp.k;
    let mut map: BTreeMap<u32, BTreeSet<Summand>> = BTreeMap::new();
    for nu in enumerate(Rectangle::new(sp.k, sp.k), DiagramFilter::symmetric()) {
        let s = nu.diag_len() as u32;
        let t = (nu.size() + s) / 2;
        map.entry(t).or_default().insert(Summand {
            sign: base_sign * Sign::parity(s as u64),
            shape: nu.expand_vertical(p),
        });
    }
    terms_from_map(sp.sym2_rank(), map)
}

/// Terms read off the Kapranov-collection spectral sequence: for each
/// `α ∈ Y_{k,N-k}`, `Ext^q(Σ^{α^T} U^∨, j_*S) = H^q(OGr, Σ^{α^T} U ⊗ S)`
/// contributes `Σ^α U^⊥` to `F_t` with `t = |α| - q`.
pub fn spectral_terms(sp: SpaceParams, base_sign: Sign) -> Result<Vec<ResolutionTerm>> {
    let kapranov = Rectangle::new(sp.k, sp.dim - sp.k).diagrams();
    let contributions = kapranov
        .par_iter()
        .map(|alpha| -> Result<Vec<(u32, Summand)>> {
            let h = cohomology_ogr_schur_spinor(sp, &alpha.transpose(), base_sign)?;
            h.entries()
                .into_iter()
                .map(|e| {
                    let sign = match e.rep {
                        RepLabel::HalfSpinor(Some(s)) => s,
                        // Type B: a single spinor, keep the formal sign.
                        RepLabel::HalfSpinor(None) => {
                            base_sign * Sign::parity(alpha.diag_len() as u64)
                        }
                        other => {
                            return Err(Error::Mismatch(format!(
                                "unexpected representation {other} for alpha = {alpha}"
                            )))
                        }
                    };
                    let t = alpha.size().checked_sub(e.degree).ok_or_else(|| {
                        Error::Mismatch(format!("negative term index for alpha = {alpha}"))
                    })?;
                    let summands = std::iter::repeat(Summand {
                        sign,
                        shape: alpha.clone(),
                    });
                    Ok(summands
                        .take(e.mult as usize)
                        .map(|s| (t, s))
                        .collect::<Vec<_>>())
                })
                .collect::<Result<Vec<_>>>()
                .map(|v| v.into_iter().flatten().collect())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut map: BTreeMap<u32, BTreeSet<Summand>> = BTreeMap::new();
    for (t, s) in contributions.into_iter().flatten() {
        if !map.entry(t).or_default().insert(s.clone()) {
            return Err(Error::Mismatch(format!(
                "summand {s:?} appears twice in F_{t}"
            )));
        }
    }
    if let Some(&top) = map.keys().next_back() {
        ensure!(top <= sp.sym2_rank(), "term F_{top} beyond k(k+1)/2");
    }
    Ok(terms_from_map(sp.sym2_rank(), map))
}

/// Builds the resolution both ways and checks they agree.
pub fn build_resolution(sp: SpaceParams, base_sign: Sign) -> Result<Resolution> {
    ensure!(sp.dim >= 2 * sp.k + 2, "need N >= 2k+2, got {sp}");
    let direct = direct_terms(sp, base_sign);
    let spectral = spectral_terms(sp, base_sign)?;
    if direct != spectral {
        return Err(Error::Mismatch(format!(
            "resolution for {sp}: direct {direct:?} vs spectral sequence {spectral:?}"
        )));
    }
    Ok(Resolution {
        params: sp,
        base_sign,
        terms: direct,
    })
}

impl Resolution {
    /// Largest `t` with `F_t ≠ 0`.
    pub fn length(&self) -> u32 {
        self.terms
            .iter()
            .rev()
            .find(|t| !t.summands.is_empty())
            .map_or(0, |t| t.t)
    }

    /// `Σ_t (-1)^t rank F_t`; zero since `j_*S` is supported in positive codimension.
    pub fn euler_rank(&self) -> Result<i128> {
        let spin = dim_half_spinor(self.params.spin_type())? as i128;
        let r = self.params.dim - self.params.k;
        let mut total = 0i128;
        for term in &self.terms {
            let rank: i128 = term
                .summands
                .iter()
                .map(|s| dim_schur(&s.shape, r).map(|d| d as i128 * spin))
                .sum::<Result<i128>>()?;
            total += if term.t % 2 == 0 { rank } else { -rank };
        }
        Ok(total)
    }

    /// Every shape that occurs, with multiplicity ignored.
    pub fn shapes(&self) -> BTreeSet<YoungDiagram> {
        self.terms
            .iter()
            .flat_map(|t| t.summands.iter().map(|s| s.shape.clone()))
            .collect()
    }

    fn spinor_name(&self, sign: Sign) -> String {
        match self.params.spin_type().family {
            Family::D => format!("S{sign}"),
            _ => "S".to_string(),
        }
    }

    fn bundle_name(&self, shape: &YoungDiagram) -> String {
        let r = (self.params.dim - self.params.k) as usize;
        let full_rectangle = shape.height() == r
            && shape.rows().iter().all(|&x| x == shape.width())
            || shape.is_empty();
        match (full_rectangle, shape.width()) {
            (true, 0) => "O".to_string(),
            (true, d) => format!("O(-{d})"),
            _ => format!("Sigma^({shape}) U^perp"),
        }
    }
}

impl fmt::Display for Resolution {
    /// `0 -> F_top -> … -> F_0 -> j_*S -> 0`, with `Σ^{(d^{N-k})} U^⊥`
    /// written as `O(-d)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec!["0".to_string()];
        for term in self.terms.iter().rev() {
            let pieces: Vec<String> = term
                .summands
                .iter()
                .map(|s| {
                    format!(
                        "{} (x) {}",
                        self.spinor_name(s.sign),
                        self.bundle_name(&s.shape)
                    )
                })
                .collect();
            parts.push(match pieces.len() {
                0 => "0".to_string(),
                1 => pieces[0].clone(),
                _ => format!("({})", pieces.join(" (+) ")),
            });
        }
        parts.push(format!("j_*{}", self.spinor_name(self.base_sign)));
        parts.push("0".to_string());
        f.write_str(&parts.join(" -> "))
    }
}

/// Classical factors appearing in hand-written small-`k` resolutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalFactor {
    O,
    UPerp,
    /// `V/U ≅ (U^⊥)^∨`.
    VModU,
    Wedge2UPerp,
    Wedge2VModU,
    Sym2UPerp,
    Sym2VModU,
    /// `Σ^{1,0,…,0,-1} U^⊥`.
    AdUPerp,
}

impl ClassicalFactor {
    /// `GL(U^⊥)` weight of the factor, `r = rank U^⊥`.
    fn weight(self, r: usize) -> Vec<i64> {
        let mut w = vec![0i64; r];
        match self {
            ClassicalFactor::O => {}
            ClassicalFactor::UPerp => w[0] = 1,
            ClassicalFactor::VModU => w[r - 1] = -1,
            ClassicalFactor::Wedge2UPerp => {
                w[0] = 1;
                w[1] = 1;
            }
            ClassicalFactor::Wedge2VModU => {
                w[r - 2] = -1;
                w[r - 1] = -1;
            }
            ClassicalFactor::Sym2UPerp => w[0] = 2,
            ClassicalFactor::Sym2VModU => w[r - 1] = -2,
            ClassicalFactor::AdUPerp => {
                w[0] = 1;
                w[r - 1] = -1;
            }
        }
        w
    }
}

/// `S_sign ⊗ factor ⊗ O(twist)` in the classical presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalSummand {
    pub sign: Sign,
    pub factor: ClassicalFactor,
    pub twist: i64,
}

impl ClassicalSummand {
    /// Rewrites the summand as an unsplit `Σ^α U^⊥`, using
    /// `det U^⊥ = O(-1)`.
    pub fn normalize(&self, rank_u_perp: usize) -> Result<Summand> {
        let w = self.factor.weight(rank_u_perp);
        let rows: Vec<i64> = w.iter().map(|x| x - self.twist).collect();
        ensure!(
            rows.iter().all(|&x| x >= 0),
            "{self:?} is not polynomial in U^perp"
        );
        let rows: Vec<u32> = rows.into_iter().map(|x| x as u32).collect();
        Ok(Summand {
            sign: self.sign,
            shape: YoungDiagram::new(rows)?,
        })
    }
}

/// The resolutions of `j_*S_+` for `k = 1, 2, 3` written with `O(-d)`,
/// `V/U`, `Sym²`, `Λ²` and `ad` factors, indexed by `t`.
pub fn classical_form(k: u32) -> Option<Vec<Vec<ClassicalSummand>>> {
    use ClassicalFactor::*;
    use Sign::{Minus as M, Plus as P};
    let s = |sign, factor, twist| ClassicalSummand {
        sign,
        factor,
        twist,
    };
    Some(match k {
        1 => vec![vec![s(P, O, 0)], vec![s(M, O, -1)]],
        2 => vec![
            vec![s(P, O, 0)],
            vec![s(M, VModU, -1)],
            vec![s(M, UPerp, -1)],
            vec![s(P, O, -2)],
        ],
        3 => vec![
            vec![s(P, O, 0)],
            vec![s(M, Wedge2VModU, -1)],
            vec![s(M, AdUPerp, -1)],
            vec![s(M, Sym2UPerp, -1), s(P, Sym2VModU, -2)],
            vec![s(P, AdUPerp, -2)],
            vec![s(P, Wedge2UPerp, -2)],
            vec![s(M, O, -3)],
        ],
        _ => return None,
    })
}

/// Normalizes [`classical_form`] for `sp` and the given base sign.
pub fn classical_terms(sp: SpaceParams, base_sign: Sign) -> Result<Option<Vec<ResolutionTerm>>> {
    let Some(form) = classical_form(sp.k) else {
        return Ok(None);
    };
    let r = (sp.dim - sp.k) as usize;
    let terms = form
        .iter()
        .enumerate()
        .map(|(t, summands)| {
            let mut out = summands
                .iter()
                .map(|c| {
                    let mut s = c.normalize(r)?;
                    s.sign = s.sign * base_sign;
                    Ok(s)
                })
                .collect::<Result<Vec<_>>>()?;
            out.sort();
            Ok(ResolutionTerm {
                t: t as u32,
                summands: out,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(terms))
}

/// Shapes `exp^{0,N-2k} ν` generating a subcategory that contains the
/// spinor pushforward at a point of the given type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub point: PointType,
    /// The diagrams `ν ∈ Y_{k,k}`.
    pub nus: BTreeSet<YoungDiagram>,
    /// The corresponding shapes on `U^⊥`.
    pub shapes: BTreeSet<YoungDiagram>,
}

/// `|head ν| ≤ |tail ν|`.
pub fn head_at_most_tail(nu: &YoungDiagram) -> bool {
    let (h, t) = nu.head_tail();
    h.size() <= t.size()
}

/// Generators for `tj_{P*} S_P`.
///
/// At a non-branching point these are the shapes of the resolution. At a
/// branching point every `β ∈ Y_{N-k,k}` is pushed through
/// `p_{2*}`, restricted to `U'` and tested against the vanishing criterion
/// on `OGr(k, V_P)`; surviving `β = exp^{N-2k,0} ν'` contribute `ν = ν'^T`.
pub fn spinor_subcat_generators(sp: SpaceParams, point: PointType) -> Result<GeneratorSet> {
    ensure!(!sp.is_odd(), "need even N, got {sp}");
    ensure!(sp.dim >= 2 * sp.k + 2, "need N >= 2k+2, got {sp}");
    let p = sp.dim - 2 * sp.k;
    let nus: BTreeSet<YoungDiagram> = match point {
        PointType::NonBranching => build_resolution(sp, Sign::Plus)?
            .shapes()
            .into_iter()
            .map(|a| {
                a.contract_vertical(p)
                    .ok_or_else(|| Error::Mismatch(format!("{a} is not a vertical expansion")))
            })
            .collect::<Result<_>>()?,
        PointType::Branching => {
            ensure!(
                sp.dim >= 2 * sp.k + 3,
                "need N >= 2k+3 at a branching point, got {sp}"
            );
            let reduced = sp.reduced()?;
            let betas = Rectangle::new(sp.dim - sp.k, sp.k).diagrams();
            let hits = betas
                .par_iter()
                .map(|beta| -> Result<Option<YoungDiagram>> {
                    if !may_contribute(sp, reduced, beta)? {
                        return Ok(None);
                    }
                    let nu_prime = beta.contract_horizontal(p).ok_or_else(|| {
                        Error::Mismatch(format!("{beta} contributes but is not exp^{{{p},0}}"))
                    })?;
                    let nu = nu_prime.transpose();
                    if !head_at_most_tail(&nu) {
                        return Err(Error::Mismatch(format!(
                            "generator {nu} has |head| > |tail|"
                        )));
                    }
                    Ok(Some(nu))
                })
                .collect::<Result<Vec<_>>>()?;
            hits.into_iter().flatten().collect()
        }
    };
    let shapes = nus.iter().map(|nu| nu.expand_vertical(p)).collect();
    Ok(GeneratorSet { point, nus, shapes })
}

/// Whether `H^•(OGr(k, V_P), p_{2*}(Σ^β U) ⊗ S)` has a nonzero summand.
fn may_contribute(sp: SpaceParams, reduced: SpaceParams, beta: &YoungDiagram) -> Result<bool> {
    let Some(pushed) = pushforward_p2(beta, sp.k)? else {
        return Ok(false);
    };
    let box_reduced = Rectangle::new(reduced.dim - reduced.k, reduced.k);
    for (beta_prime, _) in pushed.terms.iter() {
        for (gamma, _) in cauchy_one_plus(beta_prime, sp.k)?.iter() {
            if box_reduced.contains(gamma)
                && !ogr_schur_spinor_closed(reduced, gamma, Sign::Plus)?.is_acyclic()
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All `ν ∈ Y_{k,k}` with `|head ν| ≤ |tail ν|`.
pub fn head_tail_bound(k: u32) -> BTreeSet<YoungDiagram> {
    Rectangle::new(k, k)
        .diagrams()
        .into_iter()
        .filter(head_at_most_tail)
        .collect()
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
    fn k1_resolution() {
        for n in [4, 5, 6, 7, 10] {
            let r = build_resolution(sp(n, 1), Sign::Plus).unwrap();
            assert_eq!(r.terms.len(), 2);
            assert_eq!(
                r.terms[0].summands,
                vec![Summand {
                    sign: Sign::Plus,
                    shape: YoungDiagram::empty()
                }]
            );
            assert_eq!(
                r.terms[1].summands,
                vec![Summand {
                    sign: Sign::Minus,
                    shape: YoungDiagram::column(n - 1)
                }]
            );
            assert_eq!(r.euler_rank().unwrap(), 0);
        }
    }

    #[test]
    fn text_rendering() {
        let r = build_resolution(sp(6, 1), Sign::Plus).unwrap();
        assert_eq!(r.to_string(), "0 -> S- (x) O(-1) -> S+ (x) O -> j_*S+ -> 0");
        let r = build_resolution(sp(7, 1), Sign::Plus).unwrap();
        assert_eq!(r.to_string(), "0 -> S (x) O(-1) -> S (x) O -> j_*S -> 0");
    }

    #[test]
    fn rejects_small_n() {
        assert!(build_resolution(sp(5, 2), Sign::Plus).is_err());
    }

    #[test]
    fn lengths_and_euler_rank() {
        for n in 4..=11 {
            for k in 1..=3 {
                if n < 2 * k + 2 {
                    continue;
                }
                for sign in [Sign::Plus, Sign::Minus] {
                    let r = build_resolution(sp(n, k), sign).unwrap();
                    assert_eq!(r.length(), k * (k + 1) / 2, "N={n} k={k}");
                    assert_eq!(r.terms[0].summands.len(), 1);
                    assert_eq!(r.terms[0].summands[0].sign, sign);
                    assert_eq!(r.euler_rank().unwrap(), 0, "N={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn classical_forms_match() {
        for n in [8, 9, 10, 11] {
            for k in 1..=3 {
                if n < 2 * k + 2 {
                    continue;
                }
                for sign in [Sign::Plus, Sign::Minus] {
                    let r = build_resolution(sp(n, k), sign).unwrap();
                    assert_eq!(
                        Some(r.terms),
                        classical_terms(sp(n, k), sign).unwrap(),
                        "N={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn generator_examples() {
        let g = spinor_subcat_generators(sp(6, 1), PointType::NonBranching).unwrap();
        assert_eq!(
            g.shapes,
            BTreeSet::from([YoungDiagram::empty(), d(&[1, 1, 1, 1, 1])])
        );
        let g = spinor_subcat_generators(sp(6, 1), PointType::Branching).unwrap();
        assert_eq!(g.nus, BTreeSet::from([YoungDiagram::empty(), d(&[1])]));
        let g = spinor_subcat_generators(sp(8, 2), PointType::Branching).unwrap();
        let expect: BTreeSet<_> = [d(&[]), d(&[1]), d(&[1, 1]), d(&[2, 1]), d(&[2, 2])]
            .into_iter()
            .collect();
        assert_eq!(g.nus, expect);
        assert_eq!(head_tail_bound(2), expect);
        assert!(spinor_subcat_generators(sp(7, 1), PointType::Branching).is_err());
    }

    #[test]
    fn branching_generators_within_bound() {
        for n in [6, 8, 10, 12] {
            for k in 1..=3 {
                if n < 2 * k + 4 {
                    continue;
                }
                let nb = spinor_subcat_generators(sp(n, k), PointType::NonBranching).unwrap();
                let b = spinor_subcat_generators(sp(n, k), PointType::Branching).unwrap();
                assert!(b.nus.is_subset(&head_tail_bound(k)), "N={n} k={k}");
                assert!(nb.nus.is_subset(&b.nus), "N={n} k={k}");
            }
        }
    }
}
