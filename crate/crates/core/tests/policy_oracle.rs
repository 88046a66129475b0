mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use seating::grid::{feasible_placements, min_distance_to_seated, Distance};
use seating::policy::{candidates, select_placement};
use seating::{Auditorium, Policy, RandomSource};

use common::*;

fn grid_strategy() -> impl Strategy<Value = Auditorium> {
    (1usize..=5, 1usize..=9).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop::bool::weighted(0.3), c), r)
            .prop_map(|rows| Auditorium::from_rows(&rows).unwrap())
    })
}

proptest! {
    #[test]
    fn candidates_equal_oracle(aud in grid_strategy(), size in 1usize..=4) {
        for p in Policy::ALL {
            let got: BTreeSet<_> = candidates(p, &aud, size).into_iter().collect();
            prop_assert_eq!(got, oracle_candidates(p, &aud, size), "policy {}", p);
        }
    }

    #[test]
    fn choice_is_feasible_and_deterministic(aud in grid_strategy(), size in 1usize..=3, seed in any::<u64>()) {
        let feasible: BTreeSet<_> = feasible_placements(&aud, size).into_iter().collect();
        for p in Policy::ALL {
            let a = select_placement(p, &aud, size, &mut RandomSource::from_seed(seed));
            let b = select_placement(p, &aud, size, &mut RandomSource::from_seed(seed));
            prop_assert_eq!(&a, &b);
            match a {
                Ok(pl) => prop_assert!(feasible.contains(&pl)),
                Err(_) => prop_assert!(feasible.is_empty()),
            }
        }
    }

    #[test]
    fn max_candidates_mirror(aud in grid_strategy(), size in 1usize..=3) {
        let m = aud.mirrored();
        let mirrored: BTreeSet<_> = candidates(Policy::Max, &aud, size)
            .into_iter()
            .map(|pl| aud.mirror_placement(pl))
            .collect();
        let direct: BTreeSet<_> = candidates(Policy::Max, &m, size).into_iter().collect();
        prop_assert_eq!(mirrored, direct);
    }

    #[test]
    fn simple_pool_within_center_filter(aud in grid_strategy(), size in 1usize..=3) {
        for pl in feasible_placements(&aud, size) {
            let d = min_distance_to_seated(&aud, pl);
            if d.is_at_least(3) {
                prop_assert!(d.is_at_least(2));
            }
        }
    }

    /// With anyone seated, a placement beyond the preferred band implies a
    /// placement inside it, so the space policy's middle tier is reached
    /// only in an empty hall.
    #[test]
    fn far_placement_implies_band_placement(aud in grid_strategy(), size in 1usize..=3) {
        prop_assume!(aud.occupied_count() > 0);
        let ds: Vec<_> = feasible_placements(&aud, size)
            .into_iter()
            .map(|pl| min_distance_to_seated(&aud, pl))
            .collect();
        if ds.iter().any(|d| d.is_at_least(5)) {
            prop_assert!(ds.iter().any(|d| d.is_within(2, 4)));
        }
        prop_assert!(!ds.contains(&Distance::Infinite));
    }
}

#[test]
fn empirical_support_matches_oracle_on_small_instances() {
    for seed in 0..40 {
        let (aud, size) = random_instance(seed);
        for p in Policy::ALL {
            let want = oracle_candidates(p, &aud, size);
            let seen: BTreeSet<_> = (0..300)
                .filter_map(|s| select_placement(p, &aud, size, &mut RandomSource::from_seed(s)).ok())
                .collect();
            if want.len() <= 20 {
                assert_eq!(seen, want, "seed {seed} policy {p}");
            } else {
                assert!(seen.is_subset(&want), "seed {seed} policy {p}");
            }
        }
    }
}
