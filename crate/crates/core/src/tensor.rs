//! Schur functor calculus: Littlewood–Richardson products, branching from
//! `O ⊕ U'` to `U'`, the plethysm `Λ^m(Sym² U)`, and the relative
//! Borel–Bott–Weil pushforward along `Gr_X(k, O ⊕ U') → X`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{enumerate, DiagramFilter, Rectangle, YoungDiagram};
use crate::error::{ensure, Result};
use crate::weyl::dim_schur;

/// A formal sum `⊕ Σ^λ` with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SchurSum {
    terms: BTreeMap<YoungDiagram, u64>,
}

impl SchurSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(shape: YoungDiagram) -> Self {
        let mut s = Self::new();
        s.add(shape, 1);
        s
    }

    pub fn add(&mut self, shape: YoungDiagram, mult: u64) {
        if mult > 0 {
            *self.terms.entry(shape).or_insert(0) += mult;
        }
    }

    pub fn get(&self, shape: &YoungDiagram) -> u64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&YoungDiagram, u64)> {
        self.terms.iter().map(|(d, &m)| (d, m))
    }

    pub fn shapes(&self) -> impl Iterator<Item = &YoungDiagram> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term with more than `max_height` rows.
    pub fn truncated(mut self, max_height: usize) -> Self {
        self.terms.retain(|d, _| d.height() <= max_height);
        self
    }

    /// `Σ mult · dim Σ^λ W` for `dim W = m`.
    pub fn dimension(&self, m: u32) -> Result<u128> {
        self.iter().try_fold(0u128, |acc, (d, mult)| {
            Ok(acc + mult as u128 * dim_schur(d, m)?)
        })
    }
}

impl fmt::Display for SchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(d, m)| {
                if m == 1 {
                    format!("({d})")
                } else {
                    format!("{m}*({d})")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A Schur sum placed in homological degree `shift`, i.e. `F[-shift]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedSchurSum {
    pub terms: SchurSum,
    pub shift: u32,
}

/// `Σ^μ ⊗ Σ^ν = ⊕ c^λ_{μν} Σ^λ`, keeping `λ` with at most `max_height` rows.
///
/// Enumerates Littlewood–Richardson tableaux of shape `λ/μ` and content `ν`
/// as a sequence of horizontal strips, one per row of `ν`, whose reading word
/// (rows top to bottom, each right to left) is a lattice word.
pub fn lr_product(mu: &YoungDiagram, nu: &YoungDiagram, max_height: usize) -> SchurSum {
    let mut out = SchurSum::new();
    let mut shape = mu.rows().to_vec();
    let mut counts: Vec<Vec<u32>> = Vec::with_capacity(nu.height());
    add_strips(nu.rows(), 0, &mut shape, &mut counts, &mut out);
    out.truncated(max_height)
}

fn add_strips(
    content: &[u32],
    label: usize,
    shape: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    out: &mut SchurSum,
) {
    if label == content.len() {
        out.add(
            YoungDiagram::new(shape.clone()).expect("strips keep the shape a partition"),
            1,
        );
        return;
    }
    let old = shape.clone();
    let rows = old.len() + 1;
    let mut placed = vec![0u32; rows];
    place_row(
        content,
        label,
        0,
        content[label],
        &old,
        &mut placed,
        shape,
        counts,
        out,
    );
}

/// Chooses how many boxes of `label` go in row `row` and recurses downward.
#[allow(clippy::too_many_arguments)]
fn place_row(
    content: &[u32],
    label: usize,
    row: usize,
    remaining: u32,
    old: &[u32],
    placed: &mut Vec<u32>,
    shape: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    out: &mut SchurSum,
) {
    if remaining == 0 {
        let mut next = old.to_vec();
        next.resize(placed.len(), 0);
        for (r, &p) in next.iter_mut().zip(placed.iter()) {
            *r += p;
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        let saved = std::mem::replace(shape, next);
        counts.push(placed.clone());
        add_strips(content, label + 1, shape, counts, out);
        counts.pop();
        *shape = saved;
        return;
    }
    if row >= placed.len() {
        return;
    }
    let current = old.get(row).copied().unwrap_or(0);
    // Horizontal strip: the new row may not overhang the old row above.
    let room = if row == 0 {
        remaining
    } else {
        old[row - 1] - current
    };
    // Lattice word: label boxes in rows ..=row may not exceed the previous
    // label's boxes in rows strictly above.
    let bound = if label == 0 {
        remaining
    } else {
        let above: u32 = counts[label - 1][..row.min(counts[label - 1].len())]
            .iter()
            .sum();
        let so_far: u32 = placed[..row].iter().sum();
        above.saturating_sub(so_far)
    };
    let max_here = remaining.min(room).min(bound);
    for a in (0..=max_here).rev() {
        placed[row] = a;
        place_row(
            content,
            label,
            row + 1,
            remaining - a,
            old,
            placed,
            shape,
            counts,
            out,
        );
    }
    placed[row] = 0;
}

/// `Σ^{β'}(O ⊕ U')` restricted to `U'` of rank `k`: all `γ` interlacing
/// `β'_1 ≥ γ_1 ≥ β'_2 ≥ … ≥ γ_k ≥ β'_{k+1}`, each once.
pub fn cauchy_one_plus(beta_prime: &YoungDiagram, k: u32) -> Result<SchurSum> {
    ensure!(
        beta_prime.height() <= k as usize + 1,
        "{beta_prime} has more than k+1 = {} rows",
        k + 1
    );
    let b = beta_prime.padded(k as usize + 1);
    let mut out = SchurSum::new();
    let mut gamma = Vec::with_capacity(k as usize);
    interlace(&b, &mut gamma, &mut out);
    Ok(out)
}

fn interlace(b: &[u32], gamma: &mut Vec<u32>, out: &mut SchurSum) {
    let i = gamma.len();
    if i + 1 == b.len() {
        out.add(
            YoungDiagram::new(gamma.clone()).expect("interlacing gives a partition"),
            1,
        );
        return;
    }
    for g in b[i + 1]..=b[i] {
        gamma.push(g);
        interlace(b, gamma, out);
        gamma.pop();
    }
}

/// `Λ^m(Sym² U)` for `rank U = k`: `⊕ Σ^{exp^{1,0} ν} U` over symmetric
/// `ν ∈ Y_{k,k}` with `|ν| + diag_len(ν) = 2m`.
pub fn wedge_sym2(m: u32, k: u32) -> Result<SchurSum> {
    ensure!(
        m <= k * (k + 1) / 2,
        "m = {m} exceeds rank of Sym^2 U = {}",
        k * (k + 1) / 2
    );
    let filter = DiagramFilter::symmetric().with_size_plus_diag(2 * m);
    let mut out = SchurSum::new();
    for nu in enumerate(Rectangle::new(k, k), filter) {
        out.add(nu.expand_horizontal(1), 1);
    }
    Ok(out)
}

/// Relative Borel–Bott–Weil along `p: Gr_X(k, O ⊕ U') → X`.
///
/// `p_*(Σ^β U) = Σ^{exp^{0,1} τ}(O ⊕ U')[-diag_len(τ)]` when
/// `β = exp^{1,0} τ`, and zero otherwise. `τ` may be wider than `k`.
pub fn pushforward_p2(beta: &YoungDiagram, k: u32) -> Result<Option<ShiftedSchurSum>> {
    ensure!(
        beta.height() <= k as usize,
        "{beta} has more than k = {k} rows"
    );
    Ok(beta.contract_horizontal(1).map(|tau| ShiftedSchurSum {
        terms: SchurSum::single(tau.expand_vertical(1)),
        shift: tau.diag_len() as u32,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{dominantize, rho, Dominantization, LieType, Weight};

    fn d(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::from_rows(rows)
    }

    fn sum(pairs: &[(&[u32], u64)]) -> SchurSum {
        let mut s = SchurSum::new();
        for (rows, m) in pairs {
            s.add(d(rows), *m);
        }
        s
    }

    #[test]
    fn lr_examples() {
        let mu = d(&[3, 1]);
        assert_eq!(
            lr_product(&mu, &YoungDiagram::empty(), usize::MAX),
            SchurSum::single(mu.clone())
        );
        assert_eq!(
            lr_product(&YoungDiagram::empty(), &mu, usize::MAX),
            SchurSum::single(mu)
        );
        assert_eq!(
            lr_product(&d(&[1]), &d(&[1]), usize::MAX),
            sum(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            lr_product(&d(&[2, 1]), &d(&[1]), usize::MAX),
            sum(&[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2 is the smallest coefficient above 1.
        assert_eq!(
            lr_product(&d(&[2, 1]), &d(&[2, 1]), usize::MAX).get(&d(&[3, 2, 1])),
            2
        );
        assert_eq!(lr_product(&d(&[1]), &d(&[1]), 1), sum(&[(&[2], 1)]));
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(
            cauchy_one_plus(&d(&[1]), 1).unwrap(),
            sum(&[(&[], 1), (&[1], 1)])
        );
        assert_eq!(
            cauchy_one_plus(&d(&[2, 1]), 1).unwrap(),
            sum(&[(&[1], 1), (&[2], 1)])
        );
        assert_eq!(
            cauchy_one_plus(&YoungDiagram::empty(), 3).unwrap(),
            SchurSum::single(YoungDiagram::empty())
        );
        assert!(cauchy_one_plus(&d(&[1, 1, 1]), 1).is_err());
    }

    #[test]
    fn wedge_sym2_examples() {
        assert_eq!(
            wedge_sym2(0, 3).unwrap(),
            SchurSum::single(YoungDiagram::empty())
        );
        assert_eq!(wedge_sym2(1, 3).unwrap(), SchurSum::single(d(&[2])));
        let w = wedge_sym2(2, 2).unwrap();
        assert_eq!(w, SchurSum::single(d(&[3, 1])));
        assert_eq!(w.dimension(2).unwrap(), 3);
        assert!(wedge_sym2(4, 2).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let p = pushforward_p2(&YoungDiagram::empty(), 2).unwrap().unwrap();
        assert_eq!(
            p,
            ShiftedSchurSum {
                terms: SchurSum::single(YoungDiagram::empty()),
                shift: 0
            }
        );
        assert_eq!(pushforward_p2(&d(&[1]), 2).unwrap(), None);
        let p = pushforward_p2(&d(&[2]), 2).unwrap().unwrap();
        assert_eq!(
            p,
            ShiftedSchurSum {
                terms: SchurSum::single(d(&[1, 1])),
                shift: 1
            }
        );
        assert!(pushforward_p2(&d(&[1, 1, 1]), 2).is_err());
    }

    /// Relative BBW on `Gr(k, W)`, `rank W = k+1`: the bundle `Σ^β U` has
    /// `GL(W)` weight `(0; β_1, …, β_k)`.
    fn relative_bbw(beta: &YoungDiagram, k: u32) -> Option<(YoungDiagram, u32)> {
        let ty = LieType::gl(k + 1);
        let mut lambda = vec![0i64];
        lambda.extend(beta.padded(k as usize).iter().map(|&b| b as i64));
        let mu = &Weight::from_integers(ty, &lambda).unwrap() + &rho(ty);
        match dominantize(&mu) {
            Dominantization::Singular => None,
            Dominantization::Regular {
                dominant, length, ..
            } => {
                let hw = &dominant - &rho(ty);
                let rows: Vec<u32> = hw.doubled().iter().map(|&c| (c / 2) as u32).collect();
                Some((YoungDiagram::new(rows).unwrap(), length))
            }
        }
    }

    #[test]
    fn pushforward_matches_relative_bbw() {
        for k in 1..=4 {
            for beta in Rectangle::new(9, k).diagrams() {
                let got = pushforward_p2(&beta, k)
                    .unwrap()
                    .map(|p| (p.terms.shapes().next().unwrap().clone(), p.shift));
                assert_eq!(got, relative_bbw(&beta, k), "beta = {beta}, k = {k}");
            }
        }
    }

    // ---- independent LR oracle: Jacobi–Trudi expansion + Pieri rule ----

    /// `s_λ · h_a` by the Pieri rule.
    fn pieri(lambda: &[u32], a: u32) -> Vec<Vec<u32>> {
        fn go(lambda: &[u32], row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if row == lambda.len() + 1 {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let base = lambda.get(row).copied().unwrap_or(0);
            let cap = if row == 0 {
                left
            } else {
                (lambda[row - 1] - base).min(left)
            };
            for x in 0..=cap {
                cur.push(base + x);
                go(lambda, row + 1, left - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(lambda, 0, a, &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|mut v| {
                while v.last() == Some(&0) {
                    v.pop();
                }
                v
            })
            .collect()
    }

    fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
        if n == 0 {
            return vec![(vec![], 1)];
        }
        let mut out = Vec::new();
        for (p, s) in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
                out.push((q, sign));
            }
        }
        out
    }

    /// `s_μ · s_ν = Σ_σ sgn(σ) s_μ ∏_j h_{ν_j - j + σ(j)}`.
    fn lr_oracle(mu: &YoungDiagram, nu: &YoungDiagram) -> BTreeMap<YoungDiagram, i64> {
        let l = nu.height();
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (sigma, sign) in permutations(l) {
            let degrees: Option<Vec<u32>> = (0..l)
                .map(|j| {
                    let v = nu.rows()[j] as i64 - j as i64 + sigma[j] as i64;
                    (v >= 0).then_some(v as u32)
                })
                .collect();
            let Some(degrees) = degrees else { continue };
            let mut current: BTreeMap<Vec<u32>, i64> = BTreeMap::from([(mu.rows().to_vec(), 1)]);
            for a in degrees {
                let mut next = BTreeMap::new();
                for (lam, c) in current {
                    for p in pieri(&lam, a) {
                        *next.entry(p).or_insert(0) += c;
                    }
                }
                current = next;
            }
            for (lam, c) in current {
                *acc.entry(lam).or_insert(0) += sign * c;
            }
        }
        acc.into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(v, c)| (YoungDiagram::new(v).unwrap(), c))
            .collect()
    }

    fn small_diagrams(max_size: u32) -> Vec<YoungDiagram> {
        Rectangle::new(max_size, max_size)
            .diagrams()
            .into_iter()
            .filter(|d| d.size() <= max_size)
            .collect()
    }

    #[test]
    fn lr_matches_jacobi_trudi_pieri() {
        let ds = small_diagrams(4);
        for mu in &ds {
            for nu in &ds {
                let got: BTreeMap<YoungDiagram, i64> = lr_product(mu, nu, usize::MAX)
                    .iter()
                    .map(|(d, m)| (d.clone(), m as i64))
                    .collect();
                assert_eq!(got, lr_oracle(mu, nu), "{mu} * {nu}");
            }
        }
    }

    #[test]
    fn lr_is_symmetric_and_size_additive() {
        let ds = small_diagrams(5);
        for mu in &ds {
            for nu in &ds {
                let a = lr_product(mu, nu, usize::MAX);
                assert_eq!(a, lr_product(nu, mu, usize::MAX), "{mu} * {nu}");
                assert!(a.shapes().all(|l| l.size() == mu.size() + nu.size()
                    && mu.is_contained_in(l)
                    && nu.is_contained_in(l)));
            }
        }
    }

    #[test]
    fn lr_dimension_identity() {
        let ds = small_diagrams(5);
        for m in 2..=4u32 {
            for mu in ds.iter().filter(|d| d.height() <= m as usize) {
                for nu in ds.iter().filter(|d| d.height() <= m as usize) {
                    let prod = lr_product(mu, nu, m as usize);
                    assert_eq!(
                        dim_schur(mu, m).unwrap() * dim_schur(nu, m).unwrap(),
                        prod.dimension(m).unwrap(),
                        "{mu} * {nu} in dim {m}"
                    );
                }
            }
        }
    }

    fn binomial(n: u128, r: u128) -> u128 {
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn wedge_sym2_binomial_identity() {
        for k in 1..=4u32 {
            let rank = k * (k + 1) / 2;
            for m in 0..=rank {
                let w = wedge_sym2(m, k).unwrap();
                assert_eq!(
                    w.dimension(k).unwrap(),
                    binomial(rank as u128, m as u128),
                    "k={k} m={m}"
                );
            }
        }
    }

    #[test]
    fn cauchy_dimension_identity() {
        for k in 1..=4u32 {
            for beta in Rectangle::new(5, k + 1).diagrams() {
                let c = cauchy_one_plus(&beta, k).unwrap();
                assert_eq!(
                    dim_schur(&beta, k + 1).unwrap(),
                    c.dimension(k).unwrap(),
                    "{beta} k={k}"
                );
            }
        }
    }
}
