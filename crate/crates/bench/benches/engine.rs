use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qsk::hall::Coha;
use qsk::poly::invariants::invariant_basis;
use qsk::poly::{DemazureSum, Frame};
use qsk::schur::{Graded, Realization, SchurAlgebra};
use qsk::weyl::{kinds, min_double_coset_reps, parabolic, GroupTable, Parabolic};
use qsk::{Comp, DimVector, Polynomial, Quiver, Var};
use std::hint::black_box;

fn staircase(n: usize) -> Polynomial {
    let mut f = Polynomial::one();
    for k in 1..=n {
        f = &f * &Polynomial::var(Var::new(0, k)).pow(k as u32 - 1);
    }
    f
}

fn polynomial_product(c: &mut Criterion) {
    let mut g = c.benchmark_group("polynomial_product");
    for n in [3usize, 4, 5] {
        let mut f = Polynomial::zero();
        for k in 1..=n {
            f = &f + &Polynomial::var(Var::new(0, k));
        }
        let p = f.pow(4);
        g.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| b.iter(|| black_box(p * p)));
    }
    g.finish();
}

fn demazure_sum(c: &mut Criterion) {
    let mut g = c.benchmark_group("demazure_longest_element");
    for n in [3usize, 4, 5] {
        let frame = Frame::ordinary(&DimVector(vec![n as u32]));
        let op = DemazureSum::new(&frame, &frame.whole());
        let f = staircase(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| black_box(op.apply(f).unwrap())));
    }
    g.finish();
}

fn double_cosets(c: &mut Criterion) {
    let mut g = c.benchmark_group("double_cosets");
    let total = DimVector(vec![7]);
    let whole = Parabolic::whole(&kinds(&total));
    let e = parabolic(&Comp::ints(&[3, 2, 2]).unwrap());
    let d = parabolic(&Comp::ints(&[2, 4, 1]).unwrap());
    g.bench_function("descents_n7", |b| b.iter(|| black_box(min_double_coset_reps(&whole, &e, &d))));
    let table = GroupTable::new(&whole);
    g.bench_function("brute_force_n7", |b| b.iter(|| black_box(table.double_coset_reps(&e, &d))));
    g.finish();
}

fn merges(c: &mut Criterion) {
    let mut g = c.benchmark_group("merge_on_basis");
    for n in [3u32, 4] {
        let z = SchurAlgebra::new(&Quiver::jordan(), &DimVector(vec![n])).unwrap();
        let d = Comp::ints(&vec![1; n as usize]).unwrap();
        let e = Comp::ints(&[n]).unwrap();
        let basis = invariant_basis(z.frame(), &z.parabolic(&d).unwrap(), 4);
        g.bench_with_input(BenchmarkId::from_parameter(n), &basis, |b, basis| {
            b.iter(|| {
                for f in basis {
                    black_box(z.apply_merge(&d, &e, &Graded::single(d.clone(), f.clone())).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn coha_product(c: &mut Criterion) {
    let coha = Coha::new(&Quiver::jordan());
    let (a, b) = (DimVector(vec![2]), DimVector(vec![2]));
    let f = &Polynomial::var(Var::new(0, 1)) * &Polynomial::var(Var::new(0, 2));
    let g = &Polynomial::var(Var::new(0, 1)) + &Polynomial::var(Var::new(0, 2));
    c.bench_function("coha_mul_jordan_2x2", |bch| bch.iter(|| black_box(coha.mul(&a, &f, &b, &g).unwrap())));
}

criterion_group!(benches, polynomial_product, demazure_sum, double_cosets, merges, coha_product);
criterion_main!(benches);
