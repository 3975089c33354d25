//! Rebuilds the resolution tree for the branched double cover of 9_42 and
//! prints it as JSON.
//!
//!     cargo run --example prop_tree > data/prop_tree_9_42.json

use slicetorus::diagram::{parse_pd, torus_knot, CrossingSite, PlanarDiagram};
use slicetorus::exec::Mode;
use slicetorus::invariants::{determinant, jones_polynomial};
use slicetorus::lspace::{
    qa_certify, verify_lspace_tree, Justification, QaOutcome, ResolutionTree,
};

const K9_42: &str = "PD[X(1,5,2,4), X(5,11,6,10), X(3,8,4,9), X(9,2,10,3), X(16,11,17,12), X(14,8,15,7), X(6,16,7,15), X(18,13,1,14), X(12,17,13,18)]";

fn res(d: &PlanarDiagram, x: usize, l: usize) -> PlanarDiagram {
    d.resolve(CrossingSite::new(x, l as u8))
        .expect("valid site")
}

fn det(d: &PlanarDiagram) -> u64 {
    determinant(d).expect("determinant")
}

/// Crossing and label at which `d` splits into a 2-component unlink and a
/// link with `comps` components and determinant `target`.
fn unlink_split(d: &PlanarDiagram, comps: usize, target: u64) -> Vec<(usize, usize)> {
    let mut out = vec![];
    for x in 0..d.crossing_count() {
        for l in 0..2 {
            let (u, o) = (res(d, x, l), res(d, x, 1 - l));
            if u.is_unlink_diagram(2) && o.component_count() == comps && det(&o) == target {
                out.push((x, l));
            }
        }
    }
    out
}

fn main() {
    let k = parse_pd(K9_42).unwrap().with_name("9_42");
    let t34 = torus_knot(3, 4).unwrap();
    let jt = [
        jones_polynomial(&t34, Mode::Sequential),
        jones_polynomial(&t34.mirror(), Mode::Sequential),
    ];

    for a in 0..k.crossing_count() {
        for la in 0..2 {
            let (t, l7) = (res(&k, a, la), res(&k, a, 1 - la));
            if t.component_count() != 1
                || det(&t) != 3
                || !jt.contains(&jones_polynomial(&t, Mode::Sequential))
            {
                continue;
            }
            if l7.component_count() != 2 || det(&l7) != 4 {
                continue;
            }
            for (b, lb) in unlink_split(&l7, 3, 4) {
                let edges: Vec<u32> = l7.edges().into_iter().collect();
                for n in 1..=3 {
                    for dots in subsets(&edges, n) {
                        let mut json = slicetorus::diagram::DiagramJson::from_diagram(&l7);
                        json.dot_edges = dots.clone();
                        let l7d = json.to_diagram().unwrap().with_name("7n1");
                        let (u1, l6) = (res(&l7d, b, lb), res(&l7d, b, 1 - lb));
                        if !u1.all_components_dotted() {
                            continue;
                        }
                        for (c, lc) in unlink_split(&l6, 2, 4) {
                            let (u2, l4) = (res(&l6, c, lc), res(&l6, c, 1 - lc));
                            if !u2.all_components_dotted() {
                                continue;
                            }
                            let QaOutcome::Certified(mut l4t) = qa_certify(&l4).unwrap() else {
                                continue;
                            };
                            l4t.diagram = l4.with_name("L4a1");
                            l4t.justification = Justification::QuasiAlternating;
                            let tree = build(&k, a, la, t, l7d, b, lb, u1, l6, c, lc, u2, l4t);
                            let v = verify_lspace_tree(&tree).expect("tree verifies");
                            assert!(v.is_lspace_over_f2);
                            print!("{}", tree.to_json());
                            eprintln!("A = {a}, B = {b}, C = {c}, dots on 7n1 edges {dots:?}");
                            return;
                        }
                    }
                }
            }
        }
    }
    panic!("no tree found");
}

#[allow(clippy::too_many_arguments)]
fn build(
    k: &PlanarDiagram,
    a: usize,
    la: usize,
    t: PlanarDiagram,
    l7: PlanarDiagram,
    b: usize,
    lb: usize,
    u1: PlanarDiagram,
    l6: PlanarDiagram,
    c: usize,
    lc: usize,
    u2: PlanarDiagram,
    l4: ResolutionTree,
) -> ResolutionTree {
    let tqa = || {
        Justification::AssertedTqa(
            "two-fold quasi-alternating, branched cover is an L-space".into(),
        )
    };
    let u =
        |d: PlanarDiagram| ResolutionTree::leaf(d.with_name("U2"), Justification::Unknot).unwrap();
    let order =
        |l: usize, x: ResolutionTree, y: ResolutionTree| if l == 0 { [x, y] } else { [y, x] };
    let l6t = ResolutionTree::branch(l6.with_name("L6n1"), tqa(), c, order(lc, u(u2), l4)).unwrap();
    let l7t = ResolutionTree::branch(l7, tqa(), b, order(lb, u(u1), l6t)).unwrap();
    let tt = ResolutionTree::leaf(
        t.with_name("8_19"),
        Justification::KnownLSpaceCover(
            "T(3,4), branched cover Sigma(2,3,4) has positive scalar curvature".into(),
        ),
    )
    .unwrap();
    ResolutionTree::branch(k.clone(), Justification::Branch, a, order(la, tt, l7t)).unwrap()
}

fn subsets(xs: &[u32], n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for i in 0..xs.len() {
        for mut rest in subsets(&xs[i + 1..], n - 1) {
            rest.insert(0, xs[i]);
            out.push(rest);
        }
    }
    out
}
