//! Randomized invariants across modules.

use bbw_core::bbw::GradedRepList;
use bbw_core::tensor::lr_product;
use bbw_core::verify::assemble_koszul;
use bbw_core::weyl::dim_schur;
use bbw_core::{Error, RepLabel, Resolution, SpaceParams, YoungDiagram};
use proptest::prelude::*;

fn diagram(max_rows: usize, max_part: u32) -> impl Strategy<Value = YoungDiagram> {
    proptest::collection::vec(0..=max_part, 0..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram::new(v).unwrap()
    })
}

fn graded(max_deg: u32) -> impl Strategy<Value = GradedRepList> {
    proptest::collection::vec((0..=max_deg, 1u64..=2), 0..=2).prop_map(|v| {
        let mut t = GradedRepList::new();
        for (d, m) in v {
            t.push(d, RepLabel::Trivial, m);
        }
        t
    })
}

proptest! {
    #[test]
    fn lr_commutes_and_preserves_dimension(mu in diagram(3, 3), nu in diagram(3, 3), m in 1u32..=4) {
        let a = lr_product(&mu, &nu, m as usize);
        let b = lr_product(&nu, &mu, m as usize);
        prop_assert_eq!(&a, &b);
        if mu.height() <= m as usize && nu.height() <= m as usize {
            let lhs = dim_schur(&mu, m).unwrap() * dim_schur(&nu, m).unwrap();
            prop_assert_eq!(a.dimension(m).unwrap(), lhs);
        }
    }

    #[test]
    fn koszul_assembly_is_brute_force_sum(per_m in proptest::collection::vec(graded(5), 0..=4)) {
        match assemble_koszul(&per_m) {
            Ok(total) => {
                for deg in -5i64..=6 {
                    let brute: u64 = per_m
                        .iter()
                        .enumerate()
                        .flat_map(|(m, t)| t.entries().into_iter().map(move |e| (m, e)))
                        .filter(|(m, e)| e.degree as i64 - *m as i64 == deg)
                        .map(|(_, e)| e.mult)
                        .sum();
                    prop_assert_eq!(total.get(deg), brute);
                }
            }
            Err(Error::Indeterminate(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn resolution_json_round_trips(n in 4u32..=10, k in 1u32..=3, plus in any::<bool>()) {
        prop_assume!(n >= 2 * k + 2);
        let sign = if plus { bbw_core::Sign::Plus } else { bbw_core::Sign::Minus };
        let r: Resolution = bbw_core::resolution::build_resolution(SpaceParams::new(n, k).unwrap(), sign).unwrap();
        let json = serde_json::to_string(&r.terms).unwrap();
        let back: Vec<bbw_core::ResolutionTerm> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, r.terms);
    }
}
