use proptest::prelude::*;
use qsk::poly::invariants::is_invariant;
use qsk::poly::{demazure_simple, rat, Frame};
use qsk::schur::{Graded, Realization, SchurAlgebra};
use qsk::weyl::{kinds, Partitioning};
use qsk::{Comp, DimVector, Perm, Polynomial, Quiver, SignedPerm, Var, WeylElement};

fn x(k: usize) -> Polynomial {
    Polynomial::var(Var::new(0, k))
}

/// Polynomials in `x[1,1..=n]` with small integer coefficients and exponents.
fn poly_in(n: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -4i64..=4), 0..5).prop_map(move |terms| {
        let mut p = Polynomial::zero();
        for (exps, c) in terms {
            let mut t = Polynomial::int(c);
            for (k, e) in exps.into_iter().enumerate() {
                t = &t * &x(k + 1).pow(e);
            }
            p = &p + &t;
        }
        p
    })
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n as u16).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_one_line(v).unwrap())
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPerm> {
    (Just((1..=n as i16).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(|(v, signs)| {
        let v = v.into_iter().zip(signs).map(|(k, s)| if s { -k } else { k }).collect();
        SignedPerm::from_one_line(v).unwrap()
    })
}

/// A composition of `n` from a list of cut points.
fn comp_of(n: u32) -> impl Strategy<Value = Comp> {
    prop::collection::vec(any::<bool>(), n.saturating_sub(1) as usize).prop_map(move |cuts| {
        let mut parts = Vec::new();
        let mut run = 1;
        for cut in cuts {
            if cut {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Comp::ints(&parts).unwrap()
    })
}

fn fixed_vertex(sigma: i8) -> Quiver {
    Quiver::a1().with_involution(&[], &[], &[("1", sigma)], &[]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly_in(3, 3), g in poly_in(3, 3), h in poly_in(3, 3)) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn printed_polynomials_reparse(f in poly_in(3, 4)) {
        let names = vec!["1".to_string()];
        prop_assert_eq!(Polynomial::parse(&f.to_text(&names), &names).unwrap(), f);
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly_in(2, 3), g in poly_in(2, 2)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn permutation_words_and_inverses(w in perm(6), v in perm(6)) {
        prop_assert!(w.compose(&w.inverse()).is_identity());
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Perm::from_word(6, &word), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        // ℓ(wv) ≡ ℓ(w) + ℓ(v) mod 2 and ℓ(wv) ≤ ℓ(w) + ℓ(v).
        let l = w.compose(&v).length();
        prop_assert_eq!(l % 2, (w.length() + v.length()) % 2);
        prop_assert!(l <= w.length() + v.length());
    }

    #[test]
    fn signed_permutation_words_and_inverses(w in signed_perm(4)) {
        prop_assert!(w.compose(&w.inverse()).is_identity());
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(SignedPerm::from_word(4, &word), w.clone());
        for j in 1..=4 {
            let s = SignedPerm::simple(4, j);
            prop_assert_eq!(w.compose(&s).length() < w.length(), w.has_right_descent(j));
        }
    }

    #[test]
    fn type_a_nil_hecke_relations(f in poly_in(3, 3), g in poly_in(3, 2)) {
        let c = DimVector(vec![3]);
        let frame = Frame::ordinary(&c);
        let d = |j: usize, p: &Polynomial| demazure_simple(&frame, 0, j, p).unwrap();
        for j in 1..=2 {
            prop_assert!(d(j, &d(j, &f)).is_zero());
            let s = WeylElement::simple(&kinds(&c), 0, j);
            prop_assert_eq!(s.act(&d(j, &f)), d(j, &f));
            // ∂(fg) = ∂(f)·g + s(f)·∂(g).
            prop_assert_eq!(d(j, &(&f * &g)), &(&d(j, &f) * &g) + &(&s.act(&f) * &d(j, &g)));
        }
        prop_assert_eq!(d(1, &d(2, &d(1, &f))), d(2, &d(1, &d(2, &f))));
    }

    #[test]
    fn signed_nil_hecke_relations(f in poly_in(2, 4), sigma in prop::sample::select(vec![1i8, -1])) {
        // Rank 2 of type B (σ = 1, c = 5) or C (σ = −1, c = 4).
        let q = fixed_vertex(sigma);
        let c = DimVector(vec![if sigma == 1 { 5 } else { 4 }]);
        let frame = Frame::theta(&q, &c).unwrap();
        let d = |j: usize, p: &Polynomial| demazure_simple(&frame, 0, j, p).unwrap();
        for j in 1..=2 {
            prop_assert!(d(j, &d(j, &f)).is_zero());
        }
        prop_assert_eq!(d(1, &d(2, &d(1, &d(2, &f)))), d(2, &d(1, &d(2, &d(1, &f)))));
    }

    #[test]
    fn compositions_reparse_and_partition(d in (1u32..=7).prop_flat_map(comp_of)) {
        prop_assert_eq!(Comp::parse(&d.to_text(), 1).unwrap(), d.clone());
        prop_assert_eq!(Partitioning::of_comp(&d).to_comp(), d.clone());
        prop_assert_eq!(d.total(), DimVector(vec![d.parts().iter().map(|p| p.0[0]).sum()]));
    }

    #[test]
    fn merges_are_linear_and_land_in_invariants(
        (d, f, g) in (2u32..=4).prop_flat_map(|n| (comp_of(n), poly_in(n as usize, 2), poly_in(n as usize, 2)))
    ) {
        let z = SchurAlgebra::new(&Quiver::a1(), &d.total()).unwrap();
        let p = z.parabolic(&d).unwrap();
        // Symmetrize the inputs onto Λ_d by summing over W_d.
        let sym = |h: &Polynomial| {
            let mut out = Polynomial::zero();
            for w in p.elements() {
                out = &out + &w.act(h);
            }
            out
        };
        let (f, g) = (sym(&f), sym(&g));
        let e = Comp::ints(&[d.total().0[0]]).unwrap();
        let m = |h: &Polynomial| z.apply_merge(&d, &e, &Graded::single(d.clone(), h.clone())).unwrap().component(&e);
        let two = rat(2);
        prop_assert_eq!(m(&(&f + &g.scale(&two))), &m(&f) + &m(&g).scale(&two));
        prop_assert!(is_invariant(&m(&f), &z.parabolic(&e).unwrap()));
    }

    #[test]
    fn graded_elements_round_trip_through_json(f in poly_in(2, 3), g in poly_in(2, 3)) {
        let z = SchurAlgebra::new(&Quiver::a1(), &DimVector(vec![2])).unwrap();
        let names = vec!["1".to_string()];
        let mut x = Graded::single(Comp::ints(&[1, 1]).unwrap(), f);
        x.add(Comp::ints(&[2]).unwrap(), &g);
        let back = Graded::from_json(&x.to_json(&names), &names, |s| z.parse_key(s)).unwrap();
        prop_assert_eq!(back, x);
    }
}
