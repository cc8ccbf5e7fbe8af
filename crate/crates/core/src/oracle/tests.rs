use super::*;
use crate::linalg::rat;
use crate::partition::partitions_of;
use crate::werner::{dual_trace, dual_twirl_cycle, trace_out_sym, twirl_power};

fn oracle() -> Oracle {
    Oracle::default()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn binom(n: usize, k: usize) -> Rational {
    int_rat(falling_factorial(n as i64, k) / factorial(k))
}

/// `A_1 ⊗ … ⊗ A_n` for small dense factors.
fn kron(shape: TensorShape, factors: &[Vec<Vec<Rational>>]) -> TensorOperator {
    let dim = shape.dim().unwrap();
    let mut m = TensorOperator::zero_unchecked(shape, dim);
    for r in 0..dim {
        for c in 0..dim {
            let (rd, cd) = (shape.digits(r), shape.digits(c));
            let v: Rational = factors.iter().enumerate().map(|(k, a)| a[rd[k]][cd[k]].clone()).product();
            m.add_entry(r, c, v);
        }
    }
    m
}

fn small_matrix(d: usize, seed: i64) -> Vec<Vec<Rational>> {
    (0..d)
        .map(|i| (0..d).map(|j| rat((i as i64 * 3 + j as i64 * 5 + seed) % 7 - 3, 1 + seed.abs() % 3)).collect())
        .collect()
}

#[test]
fn permutation_traces() {
    for d in 1..=3 {
        for perm in all_permutations(3) {
            let m = oracle().permutation_operator(&perm, d).unwrap();
            let cycles = Partition::cycle_type(&perm).rows();
            assert_eq!(m.trace(), int_rat(BigInt::from(d).pow(cycles as u32)));
        }
        let id = oracle().permutation_operator(&[0, 1, 2], d).unwrap();
        assert_eq!(id, TensorOperator::identity(TensorShape::plain(3, d), d * d * d));
    }
    let swap = oracle().permutation_operator(&[1, 0], 2).unwrap();
    assert_eq!(swap.trace(), rat(2, 1));
    assert!(oracle().permutation_operator(&[0, 0], 2).is_err());
}

#[test]
fn permutation_operators_compose() {
    let o = oracle();
    let perms = all_permutations(3);
    for a in &perms {
        for b in &perms {
            let ab: Vec<usize> = (0..3).map(|k| a[b[k]]).collect();
            let lhs = o.permutation_operator(a, 2).unwrap().matmul(&o.permutation_operator(b, 2).unwrap()).unwrap();
            assert_eq!(lhs, o.permutation_operator(&ab, 2).unwrap());
        }
    }
}

#[test]
fn size_cap_is_enforced() {
    let o = Oracle::new(64);
    assert!(matches!(o.schur_weyl_projector(&p(&[2, 1]), 5), Err(Error::SizeCap { dim: 125, cap: 64 })));
    assert!(o.schur_weyl_projector(&p(&[2, 1]), 4).is_ok());
}

#[test]
fn projector_family_resolves_identity() {
    let o = oracle();
    for (d, n) in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2), (6, 2), (4, 3)] {
        let shape = TensorShape::plain(n, d);
        let dim = shape.dim().unwrap();
        let labels = partitions_of(n, d);
        let projectors: Vec<_> = labels.iter().map(|l| o.schur_weyl_projector(l, d).unwrap()).collect();
        let mut sum = TensorOperator::zero_unchecked(shape, dim);
        for (i, pi) in projectors.iter().enumerate() {
            assert_eq!(pi.trace(), int_rat(dim_unitary(&labels[i], d) * dim_sym(&labels[i])), "d={d} n={n}");
            assert!(pi.is_symmetric());
            for (j, pj) in projectors.iter().enumerate() {
                let prod = pi.matmul(pj).unwrap();
                if i == j {
                    assert_eq!(&prod, pi);
                } else {
                    assert!(prod.is_zero(), "P{} P{} != 0", labels[i], labels[j]);
                }
            }
            sum = sum.add(pi).unwrap();
        }
        assert_eq!(sum, TensorOperator::identity(shape, dim));
    }
}

#[test]
fn projector_examples() {
    let o = oracle();
    for d in 1..=4 {
        for n in 1..=3 {
            let sym = o.schur_weyl_projector(&Partition::row(n), d).unwrap();
            assert_eq!(sym.trace(), binom(d + n - 1, n));
        }
    }
    assert_eq!(o.schur_weyl_projector(&p(&[2, 1]), 2).unwrap().trace(), rat(4, 1));
    assert!(o.schur_weyl_projector(&p(&[1, 1, 1]), 2).unwrap().is_zero());
}

#[test]
fn young_projector_examples() {
    let o = oracle();
    for d in 1..=4 {
        for n in 1..=3 {
            let row = o.young_projector(&TableauLabel::row_reading(&Partition::row(n)), d).unwrap();
            assert_eq!(row, o.schur_weyl_projector(&Partition::row(n), d).unwrap());
            let col = o.young_projector(&TableauLabel::row_reading(&Partition::column(n)), d).unwrap();
            assert_eq!(col.trace(), binom(d, n));
        }
    }
    let t1 = TableauLabel::new(vec![vec![1, 2], vec![3]]).unwrap();
    assert_eq!(o.young_projector(&t1, 2).unwrap().trace(), rat(2, 1));
}

#[test]
fn young_projectors_are_single_irreps() {
    let o = oracle();
    for n in 1..=3 {
        for d in 1..=3 {
            for l in partitions_of(n, d) {
                let p_l = o.schur_weyl_projector(&l, d).unwrap();
                for t in standard_tableaux(&l) {
                    let y = o.young_projector(&t, d).unwrap();
                    assert!(y.is_symmetric());
                    assert_eq!(y.matmul(&y).unwrap(), y, "{t} d={d}");
                    // rank of an orthogonal projector is its trace
                    assert_eq!(y.trace(), int_rat(dim_unitary(&l, d)), "{t} d={d}");
                    assert_eq!(p_l.matmul(&y).unwrap(), y);
                }
            }
        }
    }
}

#[test]
fn young_projector_commutes_with_local_unitaries() {
    // a real rotation by the Pythagorean angle (3/5, 4/5) applied to every factor
    let o = oracle();
    let rot = vec![vec![rat(3, 5), rat(-4, 5)], vec![rat(4, 5), rat(3, 5)]];
    let shape = TensorShape::plain(3, 2);
    let u = kron(shape, &[rot.clone(), rot.clone(), rot]);
    let t = TableauLabel::new(vec![vec![1, 3], vec![2]]).unwrap();
    let y = o.young_projector(&t, 2).unwrap();
    assert_eq!(u.matmul(&y).unwrap(), y.matmul(&u).unwrap());
}

#[test]
fn symmetric_average_of_single_irrep() {
    let o = oracle();
    for d in 2..=3 {
        let l = p(&[2, 1]);
        let expect = o.schur_weyl_projector(&l, d).unwrap().scale(&rat(1, 2));
        for t in standard_tableaux(&l) {
            let y = o.young_projector(&t, d).unwrap();
            assert_eq!(o.symmetric_average(&y).unwrap(), expect);
        }
    }
}

#[test]
fn symmetric_average_properties() {
    let o = oracle();
    let shape = TensorShape::plain(3, 2);
    let m = kron(shape, &[small_matrix(2, 1), small_matrix(2, 2), small_matrix(2, 4)]);
    let s = o.symmetric_average(&m).unwrap();
    assert_eq!(o.symmetric_average(&s).unwrap(), s);
    assert_eq!(s.trace(), m.trace());
    for perm in all_permutations(3) {
        let t = o.permutation_operator(&perm, 2).unwrap();
        assert_eq!(t.matmul(&s).unwrap(), s.matmul(&t).unwrap());
    }
    let inv = o.schur_weyl_projector(&p(&[2, 1]), 2).unwrap();
    assert_eq!(o.symmetric_average(&inv).unwrap(), inv);
}

#[test]
fn dual_twirl_matches_symmetrized_permutations() {
    let o = oracle();
    for d in 2..=3 {
        for perm in all_permutations(3) {
            let alpha = Partition::cycle_type(&perm);
            let dn = BigInt::from(d).pow(3);
            let m = o.permutation_operator(&perm, d).unwrap().scale(&Rational::new(BigInt::one(), dn));
            let s = o.symmetric_average(&m).unwrap();
            let w = dual_twirl_cycle(&alpha, d).unwrap();
            assert_eq!(o.schur_weyl_coefficients(&s).unwrap(), w);
            assert_eq!(o.werner_operator(&w).unwrap(), s);
        }
    }
    let w = dual_twirl_cycle(&p(&[2, 1]), 3).unwrap();
    assert_eq!(w.get(&p(&[3])), rat(10, 27));
    assert_eq!(w.get(&p(&[2, 1])), rat(0, 1));
    assert_eq!(w.get(&p(&[1, 1, 1])), rat(-1, 27));
    assert_eq!(w.total(), rat(1, 3));
}

#[test]
fn partial_trace_subsystems_basics() {
    let o = oracle();
    let shape = TensorShape::plain(3, 2);
    let (a, b, c) = (small_matrix(2, 1), small_matrix(2, 2), small_matrix(2, 5));
    let m = kron(shape, &[a.clone(), b.clone(), c.clone()]);
    assert_eq!(partial_trace_subsystems(&m, 3).unwrap(), m);
    let tr = |x: &Vec<Vec<Rational>>| x[0][0].clone() + &x[1][1];
    let kept = partial_trace_subsystems(&m, 1).unwrap();
    let expect = kron(TensorShape::plain(1, 2), &[a.clone()]).scale(&(tr(&b) * tr(&c)));
    assert_eq!(kept, expect);
    assert_eq!(partial_trace_subsystems(&m, 0).unwrap().trace(), m.trace());
    assert!(partial_trace_subsystems(&m, 4).is_err());

    let rho = o.werner_state_on(&p(&[2, 1]), TensorShape::plain(3, 2)).unwrap();
    let reduced = partial_trace_subsystems(&rho, 2).unwrap();
    let w = o.schur_weyl_coefficients(&reduced).unwrap();
    assert_eq!(w.get(&p(&[2])), rat(1, 2));
    assert_eq!(w.get(&p(&[1, 1])), rat(1, 2));
}

#[test]
fn partial_trace_inner_basics() {
    let shape = TensorShape::bipartite(2, 2, 3);
    let a1 = small_matrix(2, 1);
    let b1 = small_matrix(3, 2);
    let a2 = small_matrix(2, 3);
    let b2 = small_matrix(3, 4);
    let local = |a: &Vec<Vec<Rational>>, b: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        (0..6).map(|x| (0..6).map(|y| &a[x / 3][y / 3] * &b[x % 3][y % 3]).collect()).collect()
    };
    let m = kron(shape, &[local(&a1, &b1), local(&a2, &b2)]);
    let tr3 = |b: &Vec<Vec<Rational>>| (0..3).map(|i| b[i][i].clone()).sum::<Rational>();
    let expect = kron(TensorShape::plain(2, 2), &[a1, a2]).scale(&(tr3(&b1) * tr3(&b2)));
    let reduced = partial_trace_inner(&m, 2, 3).unwrap();
    assert_eq!(reduced, expect);
    assert_eq!(reduced.trace(), m.trace());
    assert!(partial_trace_inner(&m, 3, 3).is_err());
}

#[test]
fn dual_example_n2() {
    let o = oracle();
    for (pp, qq) in [(2usize, 2usize), (2, 3)] {
        let rho = o.werner_state_on(&Partition::row(2), TensorShape::bipartite(2, pp, qq)).unwrap();
        let reduced = partial_trace_inner(&rho, pp, qq).unwrap();
        let w = o.schur_weyl_coefficients(&reduced).unwrap();
        let (pi, qi) = (pp as i64, qq as i64);
        assert_eq!(w.get(&p(&[2])), rat((pi + 1) * (qi + 1), 2 * (pi * qi + 1)));
        assert_eq!(w.get(&p(&[1, 1])), rat((pi - 1) * (qi - 1), 2 * (pi * qi + 1)));
        assert_eq!(o.werner_operator(&w).unwrap(), reduced);
    }
}

#[test]
fn trace_norms() {
    let o = oracle();
    let proj = o.schur_weyl_projector(&p(&[2, 1]), 3).unwrap();
    assert!((trace_norm(&proj).unwrap() - 16.0).abs() < 1e-9);
    let a = o.werner_state_on(&p(&[2]), TensorShape::plain(2, 2)).unwrap();
    let b = o.werner_state_on(&p(&[1, 1]), TensorShape::plain(2, 2)).unwrap();
    let diff = a.sub(&b).unwrap();
    assert!((trace_norm(&diff).unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(trace_norm_exact(&o, &diff).unwrap(), Some(rat(2, 1)));

    let rho = o.werner_state_on(&Partition::row(2), TensorShape::bipartite(2, 2, 2)).unwrap();
    let reduced = partial_trace_inner(&rho, 2, 2).unwrap();
    let mixed = TensorOperator::identity(reduced.shape(), 4).scale(&rat(1, 4));
    let diff = reduced.sub(&mixed).unwrap();
    assert!((trace_norm(&diff).unwrap() - 0.3).abs() < 1e-9);
    assert_eq!(trace_norm_exact(&o, &diff).unwrap(), Some(rat(3, 10)));

    let shape = TensorShape::plain(1, 2);
    let mut skew = TensorOperator::zero_unchecked(shape, 2);
    skew.add_entry(0, 1, rat(1, 1));
    assert!(trace_norm(&skew).is_err());
}

#[test]
fn standard_trace_oracle_small() {
    let o = oracle();
    for d in 1..=2 {
        for n in 1..=3 {
            for l in partitions_of(n, d) {
                let rho = o.werner_state_on(&l, TensorShape::plain(n, d)).unwrap();
                for k in 1..=n {
                    let reduced = partial_trace_subsystems(&rho, k).unwrap();
                    let w = trace_out_sym(&l, k, d).unwrap();
                    assert_eq!(o.schur_weyl_coefficients(&reduced).unwrap(), w, "{l} k={k} d={d}");
                    assert_eq!(o.werner_operator(&w).unwrap(), reduced);
                }
            }
        }
    }
}

#[test]
fn dual_trace_oracle_small() {
    let o = oracle();
    for l in partitions_of(2, 4) {
        let rho = o.werner_state_on(&l, TensorShape::bipartite(2, 2, 2)).unwrap();
        let reduced = partial_trace_inner(&rho, 2, 2).unwrap();
        assert_eq!(o.schur_weyl_coefficients(&reduced).unwrap(), dual_trace(&l, 2, 2).unwrap());
        let t = TableauLabel::row_reading(&l);
        let single = o.young_projector_on(&t, TensorShape::bipartite(2, 2, 2)).unwrap();
        let single = single.scale(&Rational::new(BigInt::one(), dim_unitary(&l, 4)));
        let reduced = partial_trace_inner(&single, 2, 2).unwrap();
        assert_eq!(o.schur_weyl_coefficients(&reduced).unwrap(), dual_trace(&l, 2, 2).unwrap());
    }
}

#[test]
fn twirl_of_diagonal_powers() {
    let o = oracle();
    let r = Spectrum::new(vec![rat(2, 3), rat(1, 3)]).unwrap();
    for k in 1..=3 {
        let power = o.power_state(&r, k).unwrap();
        let s = o.symmetric_average(&power).unwrap();
        let projected = o.schur_weyl_coefficients(&s).unwrap();
        let w = twirl_power(&r, k).unwrap();
        assert_eq!(projected, w);
        for (mu, a) in w.weights() {
            assert!((to_f64(a) - to_f64(&projected.get(mu))).abs() < 1e-9);
        }
    }
}

#[test]
fn general_dual_worked_example() {
    let o = oracle();
    let t1 = TableauLabel::new(vec![vec![1, 2], vec![3]]).unwrap();
    let report = o.verify_general_dual(&t1, 2, 3).unwrap();
    assert!(report.passed, "{:?}", report);
    assert_eq!(report.beta, rat(8, 35));
    assert_eq!(report.bound, rat(52, 27));
    assert!(report.distinct_block_exact);
    assert!(report.remainder_min_eigenvalue >= -INEQUALITY_SLACK);
    assert!(matches!(o.verify_general_dual(&t1, 2, 2), Err(Error::OutOfDomain(_))));
}

#[test]
fn general_dual_symmetric_tableau_and_sweep() {
    let o = oracle();
    let sym = TableauLabel::row_reading(&Partition::row(2));
    let mut last = f64::INFINITY;
    for q in 2..=6 {
        let r = o.verify_general_dual(&sym, 2, q).unwrap();
        assert!(r.passed);
        // the one-row case reduces to the closed form (p²−1)/(p²q+p)
        let exact = 3.0 / (4.0 * q as f64 + 2.0);
        assert!((r.distance - exact).abs() < 1e-9);
        assert!(r.distance < last);
        last = r.distance;
    }
    let t = TableauLabel::new(vec![vec![1, 3], vec![2]]).unwrap();
    let mut last = f64::INFINITY;
    for q in 3..=4 {
        let r = o.verify_general_dual(&t, 2, q).unwrap();
        assert!(r.passed);
        assert!(r.distance < last);
        last = r.distance;
    }
}
