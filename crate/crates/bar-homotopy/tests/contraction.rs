use bar_homotopy::sample::{generator_simplices, random_free_simplex, random_surface_simplex, two_generators};
use bar_homotopy::{
    build_contraction, check_contraction, check_homotopy, eta_contraction, grouped_contraction, oracle_grouping,
    BarError, ContractionData, CutMap, GeneratorOracle, NodeCutOracle, RefinementOracle, TruncatedSimplicialObject,
};
use free_properad::{eta, LabeledGraph, Nested};
use properad_core::Bar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use surface_properads::{ProperadName, SurfaceProperad};

fn free_samples(bar: &Bar<properad_core::FreeProperad>, seed: u64) -> Vec<(usize, Nested<LabeledGraph<free_properad::Label>>)> {
    let mut samples = Vec::new();
    for level in 0..=2 {
        samples.extend(generator_simplices(&bar.properad, level, 2, 2, 3).into_iter().map(|x| (level, x)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..200 {
        let level = k % 3;
        samples.push((level, random_free_simplex(&mut rng, &bar.properad, level, 4, 2)));
    }
    samples
}

fn level_zero<T: Clone>(samples: &[(usize, T)]) -> Vec<T> {
    samples.iter().filter(|s| s.0 == 0).map(|s| s.1.clone()).collect()
}

#[test]
fn eta_is_an_extra_degeneracy_and_psi_a_homotopy() {
    let bar = Bar::new(two_generators(), 3);
    let samples = free_samples(&bar, 11);
    let data = eta_contraction(&bar);
    let base: Vec<_> = level_zero(&samples).iter().map(|x| (data.augment)(x).unwrap()).collect();
    let report = check_contraction(&bar, &data, &base, &samples);
    assert!(report.passed(), "{report}");
    let psi = build_contraction(&bar, data, &base, &samples).unwrap();
    let report = check_homotopy(&bar, &psi, &samples);
    assert!(report.passed(), "{report}");
}

#[test]
fn generator_grouping_on_cut_simplices() {
    let bar = Bar::new(two_generators(), 3);
    let cut = CutMap::new(&bar.properad, &GeneratorOracle);
    let samples: Vec<_> = free_samples(&bar, 12).into_iter().map(|(r, x)| (r, cut.apply(&x).unwrap())).collect();
    let data = grouped_contraction(&bar, oracle_grouping(&bar.properad, &GeneratorOracle));
    let base: Vec<_> = level_zero(&samples).iter().map(|x| (data.augment)(x).unwrap()).collect();
    let report = check_contraction(&bar, &data, &base, &samples);
    assert!(report.passed(), "{report}");
    let psi = build_contraction(&bar, data, &base, &samples).unwrap();
    let report = check_homotopy(&bar, &psi, &samples);
    assert!(report.passed(), "{report}");
}

#[test]
fn node_grouping_on_the_surface_bar() {
    let bar = Bar::new(SurfaceProperad::new(ProperadName::Mhat), 3);
    let oracle = NodeCutOracle::new(ProperadName::Mhat);
    let cut = CutMap::new(&bar.properad, &oracle);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut samples = Vec::new();
    for k in 0..200 {
        let level = k % 3;
        let x = random_surface_simplex(&mut rng, level, 3);
        samples.push((level, cut.apply(&x).unwrap()));
    }
    let base: Vec<_> = (0..50)
        .map(|_| {
            let s = bar_homotopy::composite(&bar.properad, &random_surface_simplex(&mut rng, 0, 3)).unwrap();
            Nested::Graph(oracle.refine(&s).unwrap().map(|l| Nested::Leaf(l.clone()))).canonical()
        })
        .collect();
    let data = grouped_contraction(&bar, oracle_grouping(&bar.properad, &oracle));
    let report = check_contraction(&bar, &data, &base, &samples);
    assert!(report.passed(), "{report}\n{}", report.counterexamples.iter().take(3).cloned().collect::<Vec<_>>().join("\n\n"));
    let psi = build_contraction(&bar, data, &base, &samples).unwrap();
    let report = check_homotopy(&bar, &psi, &samples);
    assert!(report.passed(), "{report}\n{}", report.counterexamples.join("\n"));
}

#[test]
fn node_grouping_refuses_simplices_with_uncut_nodes() {
    let bar = Bar::new(SurfaceProperad::new(ProperadName::Mhat), 3);
    let oracle = NodeCutOracle::new(ProperadName::Mhat);
    let data = grouped_contraction(&bar, oracle_grouping(&bar.properad, &oracle));
    let s = surface_properads::SurfaceType {
        genera: vec![1, 0],
        nodes: vec![(0, 1)],
        inputs: vec![],
        outputs: vec![0, 1],
        marks: vec![],
        unit: false,
    }
    .canonical();
    let x = eta(Nested::Leaf(s)).unwrap();
    assert!(matches!((data.extra)(0, &x), Err(BarError::NotInSubcomplex(_))));
}

#[test]
fn bad_extra_degeneracy_is_rejected_with_a_witness() {
    let bar = Bar::new(two_generators(), 3);
    let samples = free_samples(&bar, 14);
    let bogus: ContractionData<'_, _> = ContractionData {
        name: "bogus".into(),
        extra: Box::new(|r, x: &Nested<LabeledGraph<free_properad::Label>>| {
            let mut y = Nested::Leaf(bar_homotopy::composite(&bar.properad, x)?);
            for _ in 0..r + 2 {
                y = eta(y)?;
            }
            Ok(y.canonical())
        }),
        augment: Box::new(|x| Ok(bar.face(1, 1, &eta(x.clone())?.canonical())?)),
        include: Box::new(|x| Ok(x.clone())),
    };
    match build_contraction(&bar, bogus, &[], &samples) {
        Err(BarError::Contraction { identity, witness }) => {
            assert!(identity.starts_with("d0 s-1 = id"), "{identity}");
            assert!(!witness.is_empty());
        }
        other => panic!("accepted: {:?}", other.is_ok()),
    };
}

#[test]
fn grouping_that_does_not_reassemble_is_rejected() {
    let bar = Bar::new(two_generators(), 3);
    let split = |_: usize, x: &Nested<LabeledGraph<free_properad::Label>>| -> Result<Vec<Vec<usize>>, BarError> {
        let n = x.vertex_count();
        Ok(vec![(0..n).step_by(2).collect(), (1..n).step_by(2).collect()])
    };
    let data = grouped_contraction(&bar, split);
    let samples = free_samples(&bar, 15);
    let report = check_contraction(&bar, &data, &[], &samples);
    assert!(!report.passed());
    assert!(TruncatedSimplicialObject::truncation(&bar) == 3);
}
