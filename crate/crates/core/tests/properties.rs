use proptest::prelude::*;

use twisted_rb::deform::{equivalence_check, nijenhuis_element_check};
use twisted_rb::exactlin::{int, unit_vec, vec_add, vec_sub, zero_vec, Matrix, Scalar, Vector};
use twisted_rb::gen::{conjugate_rep, Gen};
use twisted_rb::liealg::{coadjoint_rep, is_two_cocycle, validate_rep, LieAlgebra, Representation};
use twisted_rb::linfty::d_t;
use twisted_rb::multilin::{Bilinear, Cochain};
use twisted_rb::nslie::{ns_check, NsLie};
use twisted_rb::tgcs::{tgcs_check_components, tgcs_check_direct};
use twisted_rb::twistrb::{check_trb, inverse_cochain_setup, morphism_check, TrbSetup};

/// `x∘y = ρ(x)y` and `x⋎y = [x,y] − ρ(x)y + ρ(y)x`, so that the adjacent bracket is `[·,·]`.
fn ns_candidate(l: &LieAlgebra, rep: &Representation) -> NsLie {
    let n = l.dim();
    let circ = Bilinear::from_fn(n, n, |i, j| rep.act(&unit_vec(n, i), &unit_vec(n, j)));
    let vee = Cochain::from_fn(2, n, n, |p| {
        let (x, y) = (unit_vec(n, p[0]), unit_vec(n, p[1]));
        vec_add(&vec_sub(&l.bracket(&x, &y), &rep.act(&x, &y)), &rep.act(&y, &x))
    });
    NsLie::new(circ, vee).unwrap()
}

/// `*` satisfies Jacobi, `∘` represents `(L, *)` and `⋎` is a 2-cocycle, each checked on basis triples.
fn adjacent_oracle(ns: &NsLie) -> bool {
    let n = ns.dim();
    let e = |i: usize| unit_vec(n, i);
    let mut jacobi = true;
    let mut rep = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let cyc = [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)]
                    .iter()
                    .fold(zero_vec(n), |acc, (a, b, c)| vec_add(&acc, &ns.star(&ns.star(a, b), c)));
                jacobi &= cyc.iter().all(|v| *v == int(0));
                let lhs = ns.circ_apply(&ns.star(&x, &y), &z);
                let rhs =
                    vec_sub(&ns.circ_apply(&x, &ns.circ_apply(&y, &z)), &ns.circ_apply(&y, &ns.circ_apply(&x, &z)));
                rep &= lhs == rhs;
            }
        }
    }
    if !(jacobi && rep) {
        return false;
    }
    let star = Cochain::from_fn(2, n, n, |p| ns.star(&e(p[0]), &e(p[1])));
    let adj = LieAlgebra::from_cochain(star).unwrap();
    let action = (0..n)
        .map(|i| Matrix::from_columns(n, &(0..n).map(|j| ns.circ_apply(&e(i), &e(j))).collect::<Vec<_>>()))
        .collect();
    let module = validate_rep(&adj, action).unwrap();
    is_two_cocycle(&adj, &module, ns.vee()).holds
}

fn plane_setups() -> Vec<(TrbSetup, Matrix)> {
    let l = LieAlgebra::r2();
    let mut out = Vec::new();
    for rep in [Representation::adjoint(&l), coadjoint_rep(&l), Representation::trivial(&l, 2)] {
        for h in [Matrix::from_i64(&[&[1, 1], &[0, 1]]), Matrix::from_i64(&[&[2, 0], &[1, 1]]), Matrix::identity(2)] {
            out.push(inverse_cochain_setup(&l, &rep, &h).unwrap());
        }
    }
    out
}

/// `(id + t ad_x, id + t(x• + H(x, T·)))` from `T + tT₁` to `T + tT₁′` at `t = 1, 2`.
fn morphism_oracle(s: &TrbSetup, t: &Matrix, t1: &Matrix, t1p: &Matrix, x: &[Scalar]) -> bool {
    let (n, m) = (s.lie_dim(), s.module_dim());
    let ad = Matrix::from_columns(n, &(0..n).map(|j| s.algebra().bracket(x, &unit_vec(n, j))).collect::<Vec<_>>());
    let twist = Matrix::from_columns(
        m,
        &(0..m)
            .map(|i| {
                let u = unit_vec(m, i);
                let a = s.rep().act(x, &u);
                a.iter().zip(s.h(x, &t.mul_vec(&u))).map(|(p, q)| p + q).collect()
            })
            .collect::<Vec<Vector>>(),
    );
    [1, 2].iter().all(|&c| {
        let c = int(c);
        let phi = &Matrix::identity(n) + &ad.scale(&c);
        let psi = &Matrix::identity(m) + &twist.scale(&c);
        let (a, b) = (t + &t1.scale(&c), t + &t1p.scale(&c));
        morphism_check(s, &a, s, &b, &phi, &psi).unwrap().holds()
    })
}

fn coboundary(s: &TrbSetup, t: &Matrix, x: &[Scalar]) -> Matrix {
    d_t(s, t, &Cochain::constant(s.module_dim(), x.to_vec())).unwrap().matrix().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ns_identities_match_the_adjacent_structure(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let l = g.lie_algebra(3);
        let n = l.dim();
        let base = match g.below(3) {
            0 => Representation::adjoint(&l),
            1 => coadjoint_rep(&l),
            _ => Representation::trivial(&l, n),
        };
        let rep = conjugate_rep(&l, &base, &g.invertible(n, 1));
        let ns = ns_candidate(&l, &rep);
        let ns = match g.below(3) {
            0 => ns,
            1 => {
                let (a, b, k, c) = (g.below(n), g.below(n), g.below(n), g.scalar(1));
                let bump = Bilinear::from_fn(n, n, |i, j| if (i, j) == (a, b) { unit_vec(n, k).iter().map(|v| v * &c).collect() } else { zero_vec(n) });
                NsLie::new(ns.circ().add(&bump), ns.vee().clone()).unwrap()
            }
            _ => {
                let v = g.cochain(2, n, n, 1);
                NsLie::new(ns.circ().clone(), ns.vee().add(&v)).unwrap()
            }
        };
        prop_assert_eq!(ns_check(&ns).holds(), adjacent_oracle(&ns));
    }

    #[test]
    fn equivalences_are_morphisms(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let setups = plane_setups();
        let (s, t) = &setups[g.below(setups.len())];
        let x = g.vector(2, 2);
        let dx = coboundary(s, t, &x);
        let t1p = if g.coin() { Matrix::zeros(2, 2) } else { g.operator(s, 1) };
        let t1 = if g.coin() { &dx + &t1p } else { g.operator(s, 1) };
        let report = equivalence_check(s, t, &t1, &t1p, &x).unwrap();
        prop_assert_eq!(report.holds(), morphism_oracle(s, t, &t1, &t1p, &x));
    }

    #[test]
    fn tgcs_equations_match_definition(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (s, j) = g.gcs_sample(3);
        let eqs = tgcs_check_components(&s, &j).unwrap().holds();
        prop_assert_eq!(eqs, tgcs_check_direct(&s, &j).unwrap().holds());
    }
}

#[test]
fn nijenhuis_elements_on_the_plane_grid() {
    let (mut yes, mut no) = (0, 0);
    for (s, t) in plane_setups() {
        assert!(check_trb(&s, &t).unwrap().holds);
        for a in -2..=2 {
            for b in -2..=2 {
                let x = vec![int(a), int(b)];
                let dx = coboundary(&s, &t, &x);
                let zero = Matrix::zeros(2, 2);
                let nij = nijenhuis_element_check(&s, &t, &x).unwrap().holds();
                assert_eq!(nij, morphism_oracle(&s, &t, &dx, &zero, &x), "x = ({a}, {b})");
                if nij {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
        }
    }
    assert!(yes > 9 && no > 0, "{yes} Nijenhuis elements, {no} others");
}
