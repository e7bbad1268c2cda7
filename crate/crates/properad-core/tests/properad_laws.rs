use free_properad::sample::{random_label, random_labeled, random_nested};
use free_properad::{HasArity, IoSequence, Label, LabeledGraph, Nested};
use graph_core::{IodaGraph, Item};
use properad_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lab(a: usize, b: usize, id: u32) -> Label {
    Label { arity: (a, b), id }
}

fn alphabet() -> IoSequence {
    IoSequence::new([((0, 1), 1), ((1, 0), 1), ((1, 1), 2), ((2, 1), 1), ((1, 2), 1)]).unwrap()
}

fn free() -> FreeProperad {
    FreeProperad::new(alphabet())
}

fn random_elem(rng: &mut ChaCha8Rng, max_vertices: usize) -> LabeledGraph<Label> {
    let a = alphabet();
    random_labeled(rng, max_vertices, |r| random_label(r, &a)).canonical()
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

#[test]
fn corolla_evaluates_to_its_label() {
    let p = free();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let x = random_elem(&mut rng, 5);
        assert_eq!(evaluate(&p, &LabeledGraph::corolla(x.clone()).unwrap()).unwrap(), x);
    }
}

#[test]
fn algebra_laws_hold_for_free() {
    let p = free();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let elems: Vec<_> = (0..100).map(|_| random_elem(&mut rng, 4)).collect();
    let depth_two: Vec<Nested<LabeledGraph<Label>>> =
        (0..200).map(|_| random_nested(&mut rng, 2, 4, |r| random_elem(r, 3))).collect();
    let report = check_algebra_laws(&p, &elems, &depth_two);
    assert!(report.passed(), "{report}");
}

#[test]
fn compose_along_both_legs_matches_direct_graph() {
    let p = free();
    let a = p.generator(lab(1, 2, 0));
    let b = p.generator(lab(2, 1, 0));
    let composed = partial_compose(&p, &a, &b, &[(0, 0), (1, 1)]).unwrap();
    // a above b, two parallel edges, one input into a, one output from b
    let direct = LabeledGraph {
        shape: IodaGraph {
            vertex_count: 2,
            edges: vec![(0, 1), (0, 1)],
            inputs: vec![0],
            outputs: vec![1],
            in_order: vec![vec![Item::In(0)], vec![Item::Edge(0), Item::Edge(1)]],
            out_order: vec![vec![Item::Edge(0), Item::Edge(1)], vec![Item::Out(0)]],
        },
        labels: vec![lab(1, 2, 0), lab(2, 1, 0)],
    };
    assert_eq!(composed, direct.canonical());
    let crossed = partial_compose(&p, &a, &b, &[(0, 1), (1, 0)]).unwrap();
    assert_ne!(crossed, composed);
}

#[test]
fn cup_into_cap_is_rejected() {
    let p = free();
    let cup = p.generator(lab(0, 1, 0));
    let cap = p.generator(lab(1, 0, 0));
    assert_eq!(partial_compose(&p, &cup, &cap, &[(0, 0)]), Err(ProperadError::IoViolation));
    assert_eq!(partial_compose(&p, &cup, &cap, &[]), Err(ProperadError::EmptyMatching));
}

#[test]
fn unit_generator_of_a_unital_presentation() {
    // a presented properad with a (1,1) unit e: e∘x = x = x∘e for generators x
    let gens = alphabet();
    let free = FreeProperad::new(gens.clone());
    let e = free.generator(lab(1, 1, 1));
    let mut relations = Vec::new();
    for l in gens.all_labels() {
        let x = free.generator(l);
        let (a, b) = l.arity;
        if b > 0 {
            relations.push((partial_compose(&free, &x, &e, &[(0, 0)]).unwrap(), x.clone()));
        }
        if a > 0 {
            relations.push((partial_compose(&free, &e, &x, &[(0, 0)]).unwrap(), x.clone()));
        }
    }
    let p = PresentedProperad::new(gens, relations).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let x = random_elem(&mut rng, 3);
        if x.labels.contains(&lab(1, 1, 1)) || x.arity().1 == 0 {
            continue;
        }
        let out = rng.gen_range(0..x.arity().1);
        let y = partial_compose(&p, &x, &e, &[(out, 0)]).unwrap();
        // unit composed on the output side returns x, up to moving the output to the end
        let mut sigma: Vec<usize> = (0..x.arity().1).collect();
        let moved = sigma.remove(out);
        sigma.push(moved);
        let mut inv = vec![0; sigma.len()];
        for (pos, &k) in sigma.iter().enumerate() {
            inv[k] = pos;
        }
        let expected = act_sigma(&p, &x, &(0..x.arity().0).collect::<Vec<_>>(), &inv).unwrap();
        assert_eq!(p.equal(&y, &expected, 1000).unwrap(), Verdict::Yes);
    }
}

/// Leg permutation by direct index rewriting, independent of substitution.
fn relabel_legs(x: &LabeledGraph<Label>, si: &[usize], so: &[usize]) -> LabeledGraph<Label> {
    let mut g = x.clone();
    let mut inputs = vec![0; si.len()];
    for (k, &v) in x.shape.inputs.iter().enumerate() {
        inputs[si[k]] = v;
    }
    let mut outputs = vec![0; so.len()];
    for (k, &v) in x.shape.outputs.iter().enumerate() {
        outputs[so[k]] = v;
    }
    g.shape.inputs = inputs;
    g.shape.outputs = outputs;
    for order in g.shape.in_order.iter_mut().chain(g.shape.out_order.iter_mut()) {
        for it in order.iter_mut() {
            *it = match *it {
                Item::In(k) => Item::In(si[k]),
                Item::Out(k) => Item::Out(so[k]),
                e => e,
            };
        }
    }
    g.canonical()
}

#[test]
fn action_matches_direct_relabeling_and_group_law() {
    let p = free();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let x = random_elem(&mut rng, 4);
        let (a, b) = x.arity();
        let id_in: Vec<usize> = (0..a).collect();
        let id_out: Vec<usize> = (0..b).collect();
        assert_eq!(act_sigma(&p, &x, &id_in, &id_out).unwrap(), x);
        let (s1, t1) = (random_perm(&mut rng, a), random_perm(&mut rng, b));
        let (s2, t2) = (random_perm(&mut rng, a), random_perm(&mut rng, b));
        let acted = act_sigma(&p, &x, &s1, &t1).unwrap();
        assert_eq!(acted, relabel_legs(&x, &s1, &t1));
        let compose = |s: &[usize], t: &[usize]| t.iter().map(|&k| s[k]).collect::<Vec<_>>();
        let twice = act_sigma(&p, &acted, &s2, &t2).unwrap();
        let once = act_sigma(&p, &x, &compose(&s2, &s1), &compose(&t2, &t1)).unwrap();
        assert_eq!(twice, once);
    }
    let x = p.generator(lab(2, 1, 0));
    assert!(matches!(act_sigma(&p, &x, &[0], &[0]), Err(ProperadError::BadPermutation(_))));
}

/// Rank of each element of `set` within `set` sorted by `key`.
fn ranks(set: &[usize], key: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut sorted = set.to_vec();
    sorted.sort_by_key(|&k| key(k));
    set.iter().map(|k| sorted.iter().position(|s| s == k).unwrap()).collect()
}

#[test]
fn composition_is_equivariant() {
    let p = free();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 200 {
        let x = random_elem(&mut rng, 3);
        let y = random_elem(&mut rng, 3);
        let (xa, xb) = x.arity();
        let (ya, yb) = y.arity();
        if xb == 0 || ya == 0 {
            continue;
        }
        let k = rng.gen_range(1..=xb.min(ya));
        let outs: Vec<usize> = random_perm(&mut rng, xb).into_iter().take(k).collect();
        let ins: Vec<usize> = random_perm(&mut rng, ya).into_iter().take(k).collect();
        let phi: Vec<(usize, usize)> = outs.iter().copied().zip(ins.iter().copied()).collect();
        let Ok(base) = partial_compose(&p, &x, &y, &phi) else { continue };
        let sigma = random_perm(&mut rng, xb);
        let tau = random_perm(&mut rng, ya);
        let sx = act_sigma(&p, &x, &(0..xa).collect::<Vec<_>>(), &sigma).unwrap();
        let ty = act_sigma(&p, &y, &tau, &(0..yb).collect::<Vec<_>>()).unwrap();
        let phi2: Vec<(usize, usize)> = phi.iter().map(|&(o, i)| (sigma[o], tau[i])).collect();
        let moved = partial_compose(&p, &sx, &ty, &phi2).unwrap();
        // free outputs of x and free inputs of y are reordered by sigma and tau
        let free_out: Vec<usize> = (0..xb).filter(|o| !outs.contains(o)).collect();
        let free_in: Vec<usize> = (0..ya).filter(|i| !ins.contains(i)).collect();
        let out_rank = ranks(&free_out, |o| sigma[o]);
        let in_rank = ranks(&free_in, |i| tau[i]);
        let res_in: Vec<usize> = (0..xa).chain(in_rank.iter().map(|r| xa + r)).collect();
        let res_out: Vec<usize> = out_rank.iter().copied().chain((0..yb).map(|j| free_out.len() + j)).collect();
        assert_eq!(moved, act_sigma(&p, &base, &res_in, &res_out).unwrap());
        checked += 1;
    }
}

#[test]
fn associativity_instance() {
    let p = free();
    let a = p.generator(lab(1, 2, 0));
    let b = p.generator(lab(2, 1, 0));
    let c = p.generator(lab(1, 1, 0));
    let left = partial_compose(&p, &partial_compose(&p, &a, &b, &[(0, 0), (1, 1)]).unwrap(), &c, &[(0, 0)]).unwrap();
    let right = partial_compose(&p, &a, &partial_compose(&p, &b, &c, &[(0, 0)]).unwrap(), &[(0, 0), (1, 1)]).unwrap();
    assert_eq!(left, right);
}

fn alpha(counts: &[((usize, usize), u32)]) -> IoSequence {
    IoSequence::new(counts.iter().copied()).unwrap()
}

#[test]
fn pushout_along_identity_is_the_right_side() {
    let x = alpha(&[((1, 1), 1), ((2, 1), 1)]);
    let y = alpha(&[((1, 1), 2), ((1, 2), 1)]);
    let px = FreeProperad::new(x.clone());
    let qy = FreeProperad::new(y);
    let gens: Vec<LabeledGraph<Label>> = x.all_labels().into_iter().map(|l| px.generator(l)).collect();
    let to_q = |g: &LabeledGraph<Label>| g.clone();
    let po = pushout_construct(px.clone(), &px, qy.clone(), |g: &LabeledGraph<Label>| g.clone(), to_q, &gens, &[]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..30 {
        let t = random_labeled(&mut rng, 4, |r| {
            if r.gen_bool(0.5) {
                Side::Left(px.generator(random_label(r, &x)))
            } else {
                Side::Right(qy.generator(random_label(r, &qy.generators)))
            }
        });
        let pure_q = t.map(|l| match l {
            Side::Left(g) => Side::Right(g.clone()),
            r => r.clone(),
        });
        assert_eq!(po.equal(&t, &pure_q, 5000).unwrap(), Verdict::Yes);
    }
}

#[test]
fn pushout_identifies_i_and_j_images() {
    let z = alpha(&[((1, 1), 1)]);
    let x = alpha(&[((1, 1), 1)]);
    let y = alpha(&[((1, 1), 2)]);
    let (pz, px, qy) = (FreeProperad::new(z), FreeProperad::new(x), FreeProperad::new(y));
    let r = pz.generator(lab(1, 1, 0));
    let i = |g: &LabeledGraph<Label>| g.clone();
    let j = |g: &LabeledGraph<Label>| g.map(|l| Label { arity: l.arity, id: 1 });
    let samples = vec![LabeledGraph::corolla(r.clone()).unwrap()];
    let po = pushout_construct(px.clone(), &pz, qy.clone(), i, j, &[r], &samples).unwrap();
    let a = po.from_left(px.generator(lab(1, 1, 0))).unwrap();
    let b = po.from_right(qy.generator(lab(1, 1, 1))).unwrap();
    let c = po.from_right(qy.generator(lab(1, 1, 0))).unwrap();
    assert_eq!(po.equal(&a, &b, 100).unwrap(), Verdict::Yes);
    assert_eq!(po.equal(&a, &c, 100).unwrap(), Verdict::No);
    assert_eq!(po.equal(&a, &a, 0).unwrap(), Verdict::Yes);
    assert_eq!(po.equal(&a, &b, 0).unwrap(), Verdict::Unknown);
}

#[test]
fn collapse_expand_roundtrips_are_equal() {
    let x = alpha(&[((1, 1), 2), ((2, 1), 1), ((1, 2), 1)]);
    let px = FreeProperad::new(x.clone());
    let qy = FreeProperad::new(x.clone());
    let po = pushout_construct(px.clone(), &px, qy.clone(), |g: &LabeledGraph<Label>| g.clone(), |g: &LabeledGraph<Label>| g.clone(), &[], &[])
        .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let t = random_labeled(&mut rng, 4, |r| Side::Left(px.generator(random_label(r, &x)))).canonical();
        for u in po.moves(&t) {
            assert_eq!(po.equal(&t, &u, 2000).unwrap(), Verdict::Yes);
        }
    }
}

#[test]
fn distinct_free_elements_with_empty_apex_differ() {
    let x = alpha(&[((1, 1), 2)]);
    let px = FreeProperad::new(x.clone());
    let po = pushout_construct(px.clone(), &px, px.clone(), |g: &LabeledGraph<Label>| g.clone(), |g: &LabeledGraph<Label>| g.clone(), &[], &[])
        .unwrap();
    let ab = partial_compose(&px, &px.generator(lab(1, 1, 0)), &px.generator(lab(1, 1, 1)), &[(0, 0)]).unwrap();
    let ba = partial_compose(&px, &px.generator(lab(1, 1, 1)), &px.generator(lab(1, 1, 0)), &[(0, 0)]).unwrap();
    let (a, b) = (po.from_left(ab).unwrap(), po.from_left(ba).unwrap());
    assert_eq!(po.equal(&a, &b, 1000).unwrap(), Verdict::No);
}

#[test]
fn bad_properad_map_is_detected() {
    let x = alpha(&[((1, 1), 2)]);
    let px = FreeProperad::new(x);
    // sends every element to the first generator: not compatible with composition
    let collapse_all = |g: &LabeledGraph<Label>| px.generator(Label { arity: g.arity(), id: 0 });
    let a = px.generator(lab(1, 1, 0));
    let aa = LabeledGraph::new(IodaGraph::partially_grafted((1, 1), (1, 1), &[(0, 0)]).unwrap(), vec![a.clone(), a.clone()]).unwrap();
    let r = pushout_construct(px.clone(), &px, px.clone(), collapse_all, |g: &LabeledGraph<Label>| g.clone(), &[a], &[aa]);
    assert!(matches!(r, Err(ProperadError::NotAProperadMap(_))));
}

#[test]
fn associativity_relation_search() {
    let m = lab(2, 1, 0);
    let free = FreeProperad::new(alpha(&[((2, 1), 1)]));
    let g = free.generator(m);
    // (xy)z and x(yz)
    let left = partial_compose(&free, &g, &g, &[(0, 0)]).unwrap();
    let right = partial_compose(&free, &g, &g, &[(0, 1)]).unwrap();
    let p = PresentedProperad::new(free.generators.clone(), vec![(left.clone(), right.clone())]).unwrap();
    assert_eq!(p.equal(&left, &right, 10).unwrap(), Verdict::Yes);
    // four inputs: all bracketings agree
    let l3 = partial_compose(&p, &left, &g, &[(0, 0)]).unwrap();
    let r3 = partial_compose(&p, &g, &right, &[(0, 1)]).unwrap();
    assert_eq!(p.equal(&l3, &r3, 1000).unwrap(), Verdict::Yes);
    // no commutativity: swapping two inputs is a different class
    let swapped = act_sigma(&p, &left, &[1, 0, 2], &[0]).unwrap();
    assert_eq!(p.equal(&left, &swapped, 1000).unwrap(), Verdict::No);
}

#[test]
fn bar_faces_and_degeneracies() {
    let p = free();
    let bar = Bar::new(p.clone(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let a = alphabet();
    let x: Nested<LabeledGraph<Label>> = random_nested(&mut rng, 3, 5, |r| p.generator(random_label(r, &a)));
    assert_eq!(x.depth(), 3);
    let d0 = bar.face(2, 0, &x).unwrap();
    let d2 = bar.face(2, 2, &x).unwrap();
    assert_eq!(d0.depth(), 2);
    assert_eq!(d2.depth(), 2);
    // the last face composes inside the properad, the first only forgets nesting
    assert_eq!(d2.vertex_count(), x.vertex_count());
    assert!(bar.degeneracy(2, 0, &x).is_ok());
    assert!(matches!(bar.degeneracy(3, 0, &bar.degeneracy(2, 0, &x).unwrap()), Err(ProperadError::Truncation { .. })));
    assert!(bar.face(2, 3, &x).is_err());
}
