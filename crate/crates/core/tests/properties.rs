use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use fivesplit::kirchhoff;
use fivesplit::minors;
use fivesplit::poly::MultiPoly;
use fivesplit::splitting::{self, EnhancedGraph};
use fivesplit::{EdgeSet, MultiGraph};

fn simple_connected() -> impl Strategy<Value = MultiGraph> {
    (4usize..=6).prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))).prop_filter_map(
        "connected, at least five edges",
        |(n, bits)| {
            let mut g = MultiGraph::with_vertices(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.push_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            (g.is_connected() && g.num_edges() >= 5).then_some(g)
        },
    )
}

/// `g` with vertices and edges renumbered by random permutations.
fn shuffled(g: &MultiGraph, seed: u64) -> (MultiGraph, Vec<usize>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut vperm: Vec<usize> = (0..g.num_vertices()).collect();
    let mut eperm: Vec<usize> = (0..g.num_edges()).collect();
    vperm.shuffle(&mut rng);
    eperm.shuffle(&mut rng);
    let h = g.relabel(&|v| vperm[v], &|e| eperm[e]).unwrap();
    (h, eperm)
}

fn config(g: &MultiGraph, pick: u64) -> EdgeSet {
    let all: Vec<EdgeSet> = g.edges().combinations(5).collect();
    all[(pick % all.len() as u64) as usize]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdicts_survive_relabelling(g in simple_connected(), seed in any::<u64>(), pick in any::<u64>()) {
        let s = config(&g, pick);
        let (h, eperm) = shuffled(&g, seed);
        let t: EdgeSet = s.iter().map(|e| eperm[e]).collect();
        prop_assert_eq!(splitting::config_splits(&g, s).unwrap().splits, splitting::config_splits(&h, t).unwrap().splits);
        let a = minors::canonical_form(&EnhancedGraph::new(g, s, EdgeSet::EMPTY).unwrap()).unwrap();
        let b = minors::canonical_form(&EnhancedGraph::new(h, t, EdgeSet::EMPTY).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn kirchhoff_deletion_contraction(g in simple_connected(), pick in any::<u64>()) {
        let edges = g.edges().to_vec();
        let e = edges[(pick % edges.len() as u64) as usize];
        let whole = kirchhoff::kirchhoff_poly(&g);
        let deleted = kirchhoff::kirchhoff_poly(&g.delete_edge(e).unwrap());
        let contracted = kirchhoff::kirchhoff_poly(&g.contract_edge(e).unwrap());
        prop_assert_eq!(&whole, &(&(&MultiPoly::var(e) * &deleted) + &contracted));
        prop_assert_eq!(whole, kirchhoff::kirchhoff_poly_via_trees(&g));
    }

    #[test]
    fn protection_only_hinders_splitting(g in simple_connected(), pick in any::<u64>(), marks in any::<u16>()) {
        let s = config(&g, pick);
        let members = s.to_vec();
        let c: EdgeSet = members.iter().enumerate().filter(|(i, _)| marks >> i & 1 == 1).map(|(_, &e)| e).collect();
        let d: EdgeSet = members.iter().enumerate().filter(|(i, _)| marks >> (i + 5) & 1 == 1).map(|(_, &e)| e).collect();
        let splits = |c, d| splitting::enhanced_config_splits(&EnhancedGraph::new(g, c, d).unwrap(), s).unwrap().splits;
        let base = splits(c, d);
        for e in members {
            if !base {
                prop_assert!(!splits(c.with(e), d) && !splits(c, d.with(e)));
            }
            if splits(c.with(e), d.with(e)) {
                prop_assert!(base);
            }
        }
    }

    #[test]
    fn association_preserves_verdict(g in simple_connected(), pick in any::<u64>()) {
        let s = config(&g, pick);
        if !splitting::config_splits(&g, s).unwrap().splits {
            let (enhanced, t) = splitting::to_enhanced(&g, s).unwrap();
            prop_assert!(!splitting::enhanced_config_splits(&enhanced, t).unwrap().splits);
            let (plain, u) = splitting::from_enhanced(&enhanced, t).unwrap();
            prop_assert!(!splitting::config_splits(&plain, u).unwrap().splits);
        }
    }
}
