//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime (`cargo test --test acceptance -- --nocapture` shows them
//! all). Every tolerance is exact; runtime budgets are asserted.

use homspace::embeddings::fixtures as efix;
use homspace::exactalg::{ExactAlgError, IntPoly};
use homspace::fq_oracle::{
    enumerate_order, homogeneous_count, order_formula, realize, ClassicalKind,
    MatrixGroupEquations,
};
use homspace::homogeneous::{
    chain_check, fixtures as hfix, CheckStatus, GroupSpec, HomogeneousError, HomogeneousPair,
    SubgroupSpec,
};
use homspace::weylcore::{
    molien_series, weyl_enumerate, Family, ReductiveType, SimpleType,
};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use std::time::{Duration, Instant};

fn ladder(top: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); top + 1])
}

fn simple(family: Family, rank: usize) -> ReductiveType {
    ReductiveType::simple(SimpleType::new(family, rank).unwrap())
}

fn budget(t0: Instant, limit: Duration, label: &str) {
    let elapsed = t0.elapsed();
    println!("criterion {label}: PASS in {elapsed:.2?} (budget {limit:.0?})");
    assert!(elapsed < limit, "{label} exceeded its runtime budget");
}

#[test]
fn criterion_1_projective_space_family() {
    let t0 = Instant::now();
    for m in 1..=3usize {
        let pair = HomogeneousPair::connected(
            GroupSpec::reductive(simple(Family::D, m + 1)),
            GroupSpec::reductive(simple(Family::B, m)),
        )
        .unwrap();
        assert_eq!(pair.q_poly().unwrap(), ladder(m), "Q at m = {m}");
        let open = &IntPoly::var_pow(m) * &(&IntPoly::var_pow(m + 1) - &IntPoly::one());
        assert_eq!(pair.half_poincare().unwrap(), open, "open orbit at m = {m}");

        let odd = efix::projective_odd(m);
        assert_eq!(
            odd.r_poly().unwrap(),
            &IntPoly::var_pow(m + 1) + &IntPoly::one(),
            "R at m = {m}"
        );

        let even = efix::projective_even(m);
        assert_eq!(even.open_q().unwrap(), IntPoly::one(), "even Q at m = {m}");
        assert_eq!(even.r_poly().unwrap(), ladder(2 * m));
    }
    budget(t0, Duration::from_secs(1), "1 (projective-space family)");
}

#[test]
fn criterion_2_counterexample() {
    let t0 = Instant::now();
    let x = efix::sl2xsl2_counterexample();
    let pair = hfix::flip_pair();

    match pair.subgroup() {
        SubgroupSpec::Disconnected(d) => {
            let num = IntPoly::from_i64s(&[1, 0, 1]);
            let den = IntPoly::from_i64s(&[1, 0, -2, 0, 1]);
            assert_eq!(
                d.hilbert_series(),
                &homspace::exactalg::RatFunc::new(num, den).unwrap()
            );
        }
        _ => panic!("fixture subgroup must be disconnected"),
    }
    assert_eq!(
        pair.half_poincare().unwrap(),
        IntPoly::from_i64s(&[0, 0, 1, 0, 1])
    );
    assert_eq!(pair.q_poly().unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
    assert_eq!(x.total_half_poincare(), IntPoly::from_i64s(&[1, 3, 6, 3, 1]));
    assert!(matches!(
        x.r_poly(),
        Err(homspace::embeddings::EmbedError::Exact(
            ExactAlgError::NotDivisible
        ))
    ));
    assert_eq!(
        x.open_q().unwrap().gcd(&x.total_half_poincare()),
        IntPoly::one()
    );
    budget(t0, Duration::from_secs(1), "2 (disconnected counterexample)");
}

fn degree_table_types() -> Vec<ReductiveType> {
    let mut types = Vec::new();
    for rank in 1..=4 {
        types.push(simple(Family::A, rank));
        types.push(simple(Family::B, rank));
        types.push(simple(Family::C, rank));
        if rank >= 2 {
            types.push(simple(Family::D, rank));
        }
    }
    types.push(simple(Family::G, 2));
    types.push(simple(Family::F, 4));
    types.push(simple(Family::A, 5));
    types.push(simple(Family::D, 5));
    types
}

#[test]
fn criterion_3_degree_table_validation() {
    let t0 = Instant::now();
    for t in degree_table_types() {
        let w = weyl_enumerate(&t, 4000).unwrap();
        assert_eq!(BigInt::from(w.order()), t.weyl_order(), "order of W({t})");
        assert_eq!(molien_series(&w), t.f_series(), "Molien series of {t}");
    }
    budget(t0, Duration::from_secs(60), "3 (degree-table validation)");
}

#[test]
fn criterion_4_molien_limit_and_degree() {
    let t0 = Instant::now();
    for t in degree_table_types() {
        let w = weyl_enumerate(&t, 4000).unwrap();
        let f = molien_series(&w);
        let expected = BigRational::new(BigInt::one(), t.weyl_order());
        assert_eq!(f.cancel_eval_at_one(t.rank()).unwrap(), expected, "{t}");
        let degree_sum: i64 = t.degrees().iter().map(|&d| d as i64).sum();
        assert_eq!(f.degree(), Some(-degree_sum), "{t}");
    }
    budget(t0, Duration::from_secs(65), "4 (Molien limit and degree)");
}

#[test]
fn criterion_5_point_count_oracle() {
    let t0 = Instant::now();
    let a = |n| simple(Family::A, n);
    let torus = ReductiveType::torus;
    let pairs = vec![
        ("sl2/torus", a(1), torus(1)),
        ("sl3/torus", a(2), torus(2)),
        ("sp4/torus", simple(Family::C, 2), torus(2)),
        ("so5/torus", simple(Family::B, 2), torus(2)),
        ("sl3/levi", a(2), a(1).product(&torus(1))),
    ];
    for p in [2u64, 3] {
        for (name, g, h) in &pairs {
            let pair = HomogeneousPair::connected(
                GroupSpec::reductive(g.clone()),
                GroupSpec::reductive(h.clone()),
            )
            .unwrap();
            let counted = homogeneous_count(&pair, p).unwrap();
            let predicted = pair.point_count(p).unwrap();
            assert_eq!(counted, predicted, "{name} at p = {p}");

            let (g_eq, h_eq) = realize(&pair).unwrap();
            assert_eq!(
                BigInt::from(enumerate_order(&g_eq, p).unwrap()),
                order_formula(g, 0, p),
                "{name}: ambient order at p = {p}"
            );
            assert_eq!(
                BigInt::from(enumerate_order(&h_eq, p).unwrap()),
                order_formula(h, 0, p),
                "{name}: subgroup order at p = {p}"
            );
        }
    }
    // the torus models themselves, spelled explicitly
    for (ambient, n, rank) in [
        (ClassicalKind::SpecialLinear, 3, 2),
        (ClassicalKind::Symplectic, 4, 2),
        (ClassicalKind::SplitOrthogonal, 5, 2),
    ] {
        for p in [2u64, 3] {
            let eq = MatrixGroupEquations::diagonal_torus(ambient, n).unwrap();
            assert_eq!(
                BigInt::from(enumerate_order(&eq, p).unwrap()),
                order_formula(&ReductiveType::torus(rank), 0, p)
            );
        }
    }
    budget(t0, Duration::from_secs(120), "5 (point-count oracle)");
}

#[test]
fn criterion_6_structural_property_suite() {
    let t0 = Instant::now();
    let pairs = hfix::standard_pairs();
    assert!(pairs.len() >= 10, "need at least 10 fixture pairs");
    for (name, pair) in &pairs {
        let report = pair.verify();
        for item in &report.items {
            assert_ne!(
                item.status,
                CheckStatus::Fail,
                "{name}: {} — {}",
                item.name,
                item.detail
            );
        }
        let q = pair.q_poly().unwrap();
        assert!(q.has_nonnegative_coeffs(), "{name}");
        assert_eq!(
            q.sum_of_coeffs() * pair.subgroup().weyl_order(),
            pair.group().weyl_order(),
            "{name}: Q(1)"
        );
        let expected_deg = pair.group().u_red() - pair.subgroup().u_red();
        assert_eq!(q.degree(), Some(expected_deg), "{name}: deg Q");
        assert!(q.leading_coeff().unwrap().is_one(), "{name}: monic");
        if pair.subgroup().is_connected() {
            assert!(q.coeff(0).is_one(), "{name}: Q(0)");
            assert!(q.is_palindromic(expected_deg), "{name}: palindromic");
        }
    }
    budget(t0, Duration::from_secs(10), "6 (structural property suite)");
}

#[test]
fn criterion_7_chain_multiplicativity() {
    let t0 = Instant::now();
    let g = |t: ReductiveType| GroupSpec::reductive(t);
    let chains = [
        (
            simple(Family::A, 2),
            simple(Family::A, 1).product(&ReductiveType::torus(1)),
            ReductiveType::torus(2),
        ),
        (simple(Family::D, 3), simple(Family::B, 2), simple(Family::D, 2)),
        (
            simple(Family::B, 3),
            simple(Family::B, 2).product(&ReductiveType::torus(1)),
            ReductiveType::torus(3),
        ),
    ];
    for (big, mid, small) in chains {
        let name = format!("{big} > {mid} > {small}");
        assert!(
            chain_check(&g(big.clone()), &g(mid.clone()), &g(small.clone())).unwrap(),
            "{name}"
        );
    }
    budget(t0, Duration::from_secs(1), "7 (chain multiplicativity)");
}

#[test]
fn criterion_8_torus_quotient_duality() {
    let t0 = Instant::now();
    let mut reductive_pairs = 0usize;
    for (name, pair) in hfix::standard_pairs() {
        if !(pair.group().is_reductive() && pair.subgroup().is_reductive()) {
            continue;
        }
        reductive_pairs += 1;
        let zp = pair.z_poincare().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(zp.has_nonnegative_coeffs(), "{name}");
        let rank_drop = pair.group().rank() - pair.subgroup().rank();
        let dim_base = pair.dim_quotient() - rank_drop;
        let dual = zp.reversed(dim_base).unwrap_or_else(|| {
            panic!("{name}: base polynomial degree exceeds the base dimension")
        });
        let u_drop = pair.group().u_total() - pair.subgroup().u_total();
        let expected = &IntPoly::var_pow(u_drop) * &pair.q_poly().unwrap();
        assert_eq!(dual, expected, "{name}: duality");
    }
    assert!(reductive_pairs >= 10);
    budget(t0, Duration::from_secs(5), "8 (torus-quotient duality)");
}

#[test]
fn criterion_9_group_completion_divisibility() {
    let t0 = Instant::now();
    let x = efix::pgl2_wonderful();
    let check = x.group_completion_check(&simple(Family::A, 1));
    assert!(check.divides);
    assert_eq!(check.quotient.unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
    budget(t0, Duration::from_secs(1), "9 (group-completion divisibility)");
}

#[test]
fn internal_route_consistency_on_the_verification_reports() {
    // every standard pair also reports exact agreement of its two
    // computation routes (criterion 6, item 5)
    for (name, pair) in hfix::standard_pairs() {
        let report = pair.verify();
        let routes = report
            .items
            .iter()
            .find(|i| i.name.contains("routes agree"))
            .unwrap_or_else(|| panic!("{name}: missing routes item"));
        assert_eq!(routes.status, CheckStatus::Pass, "{name}");
    }
}

#[test]
fn point_counts_check_out_on_a_prime_square() {
    // polynomiality in q: the identity holds at the prime power 4 as well
    let pair = HomogeneousPair::connected(
        GroupSpec::reductive(simple(Family::A, 1)),
        GroupSpec::reductive(ReductiveType::torus(1)),
    )
    .unwrap();
    assert_eq!(pair.point_count(4).unwrap(), BigInt::from(20));
}

#[test]
fn homogeneous_count_rejects_disconnected_subgroups() {
    let pair = hfix::flip_pair();
    assert!(matches!(
        homspace::fq_oracle::realize(&pair),
        Err(homspace::fq_oracle::OracleError::NotRealizable { .. })
    ));
    let _ = HomogeneousError::InvalidPair {
        reason: String::new(),
    };
}
