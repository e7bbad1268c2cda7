use free_properad::sample::{random_label, random_labeled, random_nested};
use free_properad::{HasArity, IoSequence, Label, LabeledGraph, Nested};
use graph_core::Item;
use properad_core::{act_sigma, normal_form, Bar, FreeProperad};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn free() -> FreeProperad {
    FreeProperad::new(IoSequence::new([((0, 1), 1), ((1, 1), 2), ((2, 1), 1), ((1, 2), 1)]).unwrap())
}

fn perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Input `k` of the graph becomes input `si[k]`, and likewise for outputs.
fn permute_legs<L: Clone>(g: &LabeledGraph<L>, si: &[usize], so: &[usize]) -> LabeledGraph<L> {
    let mut h = g.clone();
    for (k, &t) in si.iter().enumerate() {
        h.shape.inputs[t] = g.shape.inputs[k];
    }
    for (k, &t) in so.iter().enumerate() {
        h.shape.outputs[t] = g.shape.outputs[k];
    }
    let rename = |item: &Item| match *item {
        Item::In(k) => Item::In(si[k]),
        Item::Out(k) => Item::Out(so[k]),
        e => e,
    };
    h.shape.in_order = g.shape.in_order.iter().map(|o| o.iter().map(rename).collect()).collect();
    h.shape.out_order = g.shape.out_order.iter().map(|o| o.iter().map(rename).collect()).collect();
    h
}

/// The same value written differently: vertices renumbered at every level,
/// and every label's legs permuted with the slots of its vertex permuted
/// to match.
fn rewrite(p: &FreeProperad, rng: &mut ChaCha8Rng, x: &Nested<LabeledGraph<Label>>) -> Nested<LabeledGraph<Label>> {
    let Nested::Graph(g) = x else { return x.clone() };
    let mut labels = Vec::with_capacity(g.labels.len());
    let mut shape = g.shape.clone();
    for (v, l) in g.labels.iter().enumerate() {
        let (a, b) = l.arity();
        let (si, so) = (perm(rng, a), perm(rng, b));
        let twisted = match rewrite(p, rng, l) {
            Nested::Leaf(e) => Nested::Leaf(act_sigma(p, &e, &si, &so).unwrap()),
            Nested::Graph(h) => Nested::Graph(permute_legs(&h, &si, &so)),
        };
        for (k, &t) in si.iter().enumerate() {
            shape.in_order[v][t] = g.shape.in_order[v][k];
        }
        for (k, &t) in so.iter().enumerate() {
            shape.out_order[v][t] = g.shape.out_order[v][k];
        }
        labels.push(twisted);
    }
    let vperm = perm(rng, shape.vertex_count);
    let eperm = perm(rng, shape.edges.len());
    let mut relabeled = vec![labels[0].clone(); labels.len()];
    for (v, l) in labels.into_iter().enumerate() {
        relabeled[vperm[v]] = l;
    }
    Nested::Graph(LabeledGraph { shape: shape.relabel(&vperm, &eperm), labels: relabeled })
}

proptest! {
    #[test]
    fn normal_form_forgets_the_presentation(seed in any::<u64>(), depth in 1usize..4) {
        let p = free();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = p.generators.clone();
        let x = random_nested(&mut rng, depth, 3, |r| random_labeled(r, 2, |r| random_label(r, &a)).canonical());
        let y = rewrite(&p, &mut rng, &x);
        let nx = normal_form(&p, &x).unwrap();
        prop_assert_eq!(&nx, &normal_form(&p, &y).unwrap());
        prop_assert_eq!(&nx, &normal_form(&p, &nx).unwrap());
        if rng.gen_bool(0.5) {
            let bar = Bar::new(p, 3);
            prop_assert_eq!(bar.normalize(&x).unwrap(), nx);
        }
    }
}
