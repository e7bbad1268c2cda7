use bar_homotopy::sample::{generator_simplices, random_free_simplex, random_surface_simplex, two_generators};
use bar_homotopy::{check_simplicial_identities, degenerate_image, is_degenerate, CorruptedFace, TruncatedSimplicialObject};
use free_properad::sample::enumerate_nested;
use free_properad::{IoSequence, LabeledGraph};
use properad_core::{Bar, FreeProperad};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use surface_properads::{ProperadName, SurfaceProperad};

#[test]
fn free_bar_satisfies_the_identities() {
    let bar = Bar::new(two_generators(), 3);
    let mut samples = Vec::new();
    for level in 0..=3 {
        for x in generator_simplices(&bar.properad, level, 3, 3, 3) {
            samples.push((level, x));
        }
    }
    let exhaustive = samples.len();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..500 {
        let level = k % 4;
        samples.push((level, random_free_simplex(&mut rng, &bar.properad, level, 4, 2)));
    }
    let report = check_simplicial_identities(&bar, &samples);
    assert!(exhaustive > 50, "{exhaustive}");
    assert!(report.passed(), "{report}\n{}", report.counterexamples.first().cloned().unwrap_or_default());
}

#[test]
fn surface_bar_satisfies_the_identities() {
    let bar = Bar::new(SurfaceProperad::new(ProperadName::Mhat), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let samples: Vec<_> = (0..500)
        .map(|k| {
            let level = k % 4;
            (level, random_surface_simplex(&mut rng, level, 4))
        })
        .collect();
    let report = check_simplicial_identities(&bar, &samples);
    assert!(report.passed(), "{report}\n{}", report.counterexamples.first().cloned().unwrap_or_default());
}

#[test]
fn corrupted_face_is_caught() {
    let bar = CorruptedFace { inner: Bar::new(two_generators(), 3), level: 2 };
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let samples: Vec<_> = (0..40).map(|k| (k % 3, random_free_simplex(&mut rng, &bar.inner.properad, k % 3, 4, 2))).collect();
    let report = check_simplicial_identities(&bar, &samples);
    assert!(!report.passed());
}

fn singleton_bar() -> Bar<FreeProperad> {
    Bar::new(FreeProperad::new(IoSequence::singleton(&[(1, 1), (1, 2), (2, 1)]).unwrap()), 2)
}

#[test]
fn latching_matches_the_union_of_degeneracy_images() {
    let bar = singleton_bar();
    let p = &bar.properad;
    let base: Vec<LabeledGraph<LabeledGraph<free_properad::Label>>> =
        free_properad::sample::enumerate_labeled(&p.generators, 3, 3, 3).into_iter().map(|g| g.map(|&l| p.generator(l))).collect();
    for n in 0..bar.truncation() {
        let below = enumerate_nested(&base, n + 1);
        let above: HashSet<_> = enumerate_nested(&base, n + 2).iter().map(|x| bar.normalize(x).unwrap()).collect();
        let image = degenerate_image(&bar, n, &below).unwrap();
        assert!(image.is_subset(&above));
        let mut degenerate = 0;
        for x in &above {
            let d = is_degenerate(&bar, n + 1, x).unwrap();
            assert_eq!(d, image.contains(x), "{x:?}");
            degenerate += usize::from(d);
        }
        assert!(degenerate > 0 && degenerate < above.len());
    }
}

#[test]
fn level_zero_has_no_degenerate_simplices() {
    let bar = singleton_bar();
    let base = generator_simplices(&bar.properad, 0, 2, 2, 3);
    assert!(base.iter().all(|x| !is_degenerate(&bar, 0, x).unwrap()));
}

#[test]
fn identities_respect_the_truncation() {
    let bar = Bar::new(two_generators(), 1);
    let x = generator_simplices(&bar.properad, 1, 1, 0, 3).pop().unwrap();
    assert!(TruncatedSimplicialObject::degeneracy(&bar, 1, 0, &x).is_err());
    assert!(TruncatedSimplicialObject::face(&bar, 1, 2, &x).is_err());
}
