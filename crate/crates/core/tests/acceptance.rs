//! End-to-end acceptance suite: ten numbered criteria, each printing one
//! PASS line (run with `--nocapture` to see them on success). Every test
//! asserts both the mathematical content and its wall-clock budget.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::Instant;

use supernormal::chamber::chamber_complex;
use supernormal::cone::in_cone_of;
use supernormal::fixtures::by_id;
use supernormal::hilbert::hilbert_basis;
use supernormal::ideal::{
    buchberger_reduced, groebner_cone, initial_ideal, lattice_ideal, Binomial, MonomialIdeal,
    WeightOrder,
};
use supernormal::limits::Limits;
use supernormal::linear::{q_from_bigints, Q};
use supernormal::matrix::{lattice_index, IntMatrix};
use supernormal::polygon::{cone_over_polygon, polygon_chamber_complex, LatticePolygon};
use supernormal::polyhedron::{is_feasible, is_integral, is_tight, tighten};
use supernormal::supernormal::{
    is_normal, is_pointed, is_supernormal, is_tdi, planar_consecutive_criterion,
    supernormal_by_definition,
};
use supernormal::virtualch::{
    section_for_chamber, verify_bijection, virtual_chambers, virtual_initial_ideal,
};

fn lim() -> Limits {
    Limits::default()
}

fn fixture(id: &str) -> IntMatrix {
    by_id(id).unwrap_or_else(|| panic!("fixture {id} missing")).matrix
}

fn bi(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn bin(plus: &[i64], minus: &[i64]) -> Binomial {
    Binomial { plus: plus.to_vec(), minus: minus.to_vec() }
}

fn pass(n: usize, elapsed: std::time::Duration, budget_s: u64, desc: &str) {
    assert!(
        elapsed.as_secs_f64() < budget_s as f64,
        "criterion {n} exceeded its {budget_s}s budget: {elapsed:?}"
    );
    println!("ACCEPTANCE {n} PASS — {desc} ({elapsed:.2?})");
}

#[test]
fn criterion_01_supernormality_catalog() {
    let t0 = Instant::now();
    struct Case {
        id: &'static str,
        pointed: bool,
        normal: bool,
        supernormal: bool,
    }
    let cases = [
        Case { id: "b_neg2_3", pointed: false, normal: true, supernormal: false },
        Case { id: "b_2_3", pointed: true, normal: false, supernormal: false },
        Case { id: "quadrant3", pointed: true, normal: true, supernormal: false },
        Case { id: "hilbert3d", pointed: true, normal: true, supernormal: false },
        Case { id: "hilbert3d+", pointed: true, normal: true, supernormal: true },
        Case { id: "cube26", pointed: false, normal: true, supernormal: true },
        Case { id: "cube4d", pointed: true, normal: true, supernormal: false },
        Case { id: "cube4d+", pointed: true, normal: true, supernormal: true },
    ];
    for case in &cases {
        let each = Instant::now();
        let b = fixture(case.id);
        assert_eq!(is_pointed(&b), case.pointed, "{}: pointedness", case.id);
        assert_eq!(
            is_normal(&b, &lim()).unwrap().normal,
            case.normal,
            "{}: normality",
            case.id
        );
        let sr = is_supernormal(&b, &lim()).unwrap();
        assert_eq!(sr.supernormal, case.supernormal, "{}: supernormality", case.id);
        if case.id == "hilbert3d" {
            assert_eq!(sr.witness.as_ref().unwrap().point, bi(&[1, 2, 2]));
        }
        if case.id == "cube4d" {
            assert_eq!(sr.witness.as_ref().unwrap().point, bi(&[2, 1, 1, 1]));
        }
        assert!(
            each.elapsed().as_secs_f64() < 1.0,
            "{} verdict exceeded 1s: {:?}",
            case.id,
            each.elapsed()
        );
    }
    pass(1, t0.elapsed(), 8, "supernormality catalog verdicts, each within 1s");
}

#[test]
fn criterion_02_halving_recursion() {
    let t0 = Instant::now();
    // Closed form: P_{2i} = (0,1,i−1), P_{2i+1} = (1,0,i−1) for i ≥ 1,
    // seeded by P0 = (−1,1,2), P1 = (1,−1,1).
    let p = |i: usize| -> Vec<BigInt> {
        match i {
            0 => bi(&[-1, 1, 2]),
            1 => bi(&[1, -1, 1]),
            _ if i % 2 == 0 => bi(&[0, 1, (i as i64) / 2 - 1]),
            _ => bi(&[1, 0, (i as i64 - 1) / 2 - 1]),
        }
    };
    for i in 4..=12usize {
        let triple = vec![p(i - 2), p(i - 1), p(i % 2)];
        let half_sum: Vec<BigInt> = (0..3)
            .map(|c| {
                let s = &triple[0][c] + &triple[1][c] + &triple[2][c];
                assert!((&s % BigInt::from(2)).is_zero(), "triple sum even at {i}");
                s / 2
            })
            .collect();
        assert_eq!(half_sum, p(i), "recursion closed form at {i}");
        let index = lattice_index(&IntMatrix::from_cols(&triple), &[0, 1, 2]);
        assert_eq!(index, BigInt::from(2), "lattice index 2 at {i}");
        let hb = hilbert_basis(&triple, 3, &lim()).unwrap();
        let mut expect = triple.clone();
        expect.push(p(i));
        expect.sort();
        assert_eq!(hb, expect, "Hilbert-basis completion is exactly P_{i}");
    }
    pass(2, t0.elapsed(), 5, "halving recursion i = 4..12: closed form, index 2, completion");
}

#[test]
fn criterion_03_planar_criterion_matches_definition() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE55);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(2..=8usize);
        let mut cols: Vec<Vec<i64>> = Vec::new();
        let mut attempts = 0;
        while cols.len() < n && attempts < 200 {
            attempts += 1;
            let v = vec![rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64)];
            if v == [0, 0] {
                continue;
            }
            // Pairwise non-parallel (in either direction): the consecutive
            // criterion is only defined there.
            if cols.iter().any(|c| c[0] * v[1] - c[1] * v[0] == 0) {
                continue;
            }
            cols.push(v);
        }
        if cols.len() < n {
            continue;
        }
        let b = IntMatrix::from_rows(&[
            cols.iter().map(|c| c[0]).collect(),
            cols.iter().map(|c| c[1]).collect(),
        ]);
        let by_criterion = planar_consecutive_criterion(&b).unwrap();
        let by_definition = supernormal_by_definition(&b, &lim()).unwrap();
        assert_eq!(
            by_criterion, by_definition,
            "criterion and definition disagree on {b:?}"
        );
        done += 1;
    }
    pass(3, t0.elapsed(), 30, "consecutive-determinant criterion ≡ definition on 100 planar configurations");
}

#[test]
fn criterion_04_polygon_censuses_and_mu() {
    let t0 = Instant::now();
    let square = LatticePolygon::new(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    let pcc = polygon_chamber_complex(&square, &lim()).unwrap();
    assert_eq!(pcc.census, [(3usize, 4usize)].into_iter().collect());
    assert_eq!(pcc.mu, 3);

    let rect = LatticePolygon::new(&[(0, 0), (2, 0), (2, 1), (0, 1)]).unwrap();
    let pcc = polygon_chamber_complex(&rect, &lim()).unwrap();
    assert_eq!(pcc.census.values().sum::<usize>(), 16, "1x2 rectangle has 16 chambers");

    let quad = LatticePolygon::new(&[(1, 0), (0, 1), (2, 3), (3, 1)]).unwrap();
    let pcc = polygon_chamber_complex(&quad, &lim()).unwrap();
    assert_eq!(
        pcc.census,
        [(3usize, 26usize), (4, 5), (5, 1)].into_iter().collect(),
        "quadrilateral census: 26 triangles, 5 quadrilaterals, 1 pentagon"
    );
    assert_eq!(pcc.mu, 5);

    // Sub-rectangle μ values cross-checked against the independent conical
    // construction (cross-section arrangement of the cone configuration).
    // Rectangles up to 12 lattice points keep the conical oracle, which is
    // far more expensive than the planar construction, inside the budget.
    let mut recorded = Vec::new();
    for (a, b) in [(1i64, 1i64), (1, 2), (2, 2), (1, 3), (2, 3)] {
        let poly = LatticePolygon::new(&[(0, 0), (a, 0), (a, b), (0, b)]).unwrap();
        let planar = polygon_chamber_complex(&poly, &lim()).unwrap();
        let conical = chamber_complex(&cone_over_polygon(&poly), &lim()).unwrap();
        assert_eq!(planar.census, conical.census(), "census mismatch for {a}x{b}");
        recorded.push(((a, b), planar.mu));
    }
    println!("recorded sub-rectangle mu values: {recorded:?}");
    pass(4, t0.elapsed(), 10, "polygon censuses (square, 1x2, quadrilateral) and sub-rectangle mu cross-checks");
}

#[test]
fn criterion_05_reduced_basis_golden() {
    let t0 = Instant::now();
    let b = fixture("quad51");
    let ideal = lattice_ideal(&b, &lim()).unwrap();
    let ord = WeightOrder::from_omega(&b, &[0, 0, 0, 0, 1, 4, 1, 0]);
    let gb = buchberger_reduced(&ideal, &ord, &lim()).unwrap();
    let expected: BTreeSet<Binomial> = [
        bin(&[0, 4, 1, 0, 0, 2, 0, 0], &[0, 0, 0, 2, 5, 0, 1, 0]),
        bin(&[0, 0, 0, 0, 1, 0, 1, 2], &[2, 2, 1, 0, 0, 0, 0, 0]),
        bin(&[0, 1, 0, 0, 0, 1, 0, 1], &[1, 0, 0, 1, 2, 0, 0, 0]),
        bin(&[0, 0, 0, 0, 0, 0, 1, 3], &[4, 3, 2, 1, 0, 0, 0, 0]),
        bin(&[0, 0, 0, 0, 0, 1, 0, 2], &[3, 0, 1, 2, 3, 0, 0, 0]),
        bin(&[0, 0, 0, 1, 2, 0, 1, 1], &[0, 1, 0, 0, 0, 0, 0, 0]),
        bin(&[1, 2, 1, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0, 0, 0]),
        bin(&[1, 0, 0, 2, 4, 0, 1, 0], &[0, 2, 0, 0, 0, 1, 0, 0]),
        bin(&[2, 1, 1, 1, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 0, 0, 1]),
        bin(&[2, 0, 1, 2, 3, 0, 1, 0], &[0, 0, 0, 0, 0, 0, 0, 0]),
    ]
    .into_iter()
    .collect();
    assert_eq!(gb.element_set(), expected, "the ten printed binomials, as a set");
    let cone = groebner_cone(&gb, &b).unwrap();
    let starred: BTreeSet<Binomial> = gb
        .elements
        .iter()
        .zip(&cone.flippable)
        .filter(|(_, f)| **f)
        .map(|(g, _)| g.clone())
        .collect();
    let expected_starred: BTreeSet<Binomial> = [
        bin(&[0, 4, 1, 0, 0, 2, 0, 0], &[0, 0, 0, 2, 5, 0, 1, 0]),
        bin(&[0, 0, 0, 0, 0, 0, 1, 3], &[4, 3, 2, 1, 0, 0, 0, 0]),
        bin(&[0, 0, 0, 0, 0, 1, 0, 2], &[3, 0, 1, 2, 3, 0, 0, 0]),
        bin(&[1, 0, 0, 2, 4, 0, 1, 0], &[0, 2, 0, 0, 0, 1, 0, 0]),
        bin(&[2, 1, 1, 1, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 0, 0, 1]),
    ]
    .into_iter()
    .collect();
    assert_eq!(starred, expected_starred, "exactly the five underlined elements are flippable");
    pass(5, t0.elapsed(), 10, "ten-element reduced basis golden with five flippable elements");
}

#[test]
fn criterion_06_mixed_initial_ideal_golden() {
    let t0 = Instant::now();
    let b = fixture("rect61");
    let ideal = lattice_ideal(&b, &lim()).unwrap();
    let w: Vec<Q> = [2i64, 2, 1].iter().map(|x| Q::from(BigInt::from(*x))).collect();
    let init = initial_ideal(&ideal, &w, &lim()).unwrap();
    assert!(!init.is_monomial());
    let monomials: BTreeSet<Vec<i64>> = init.monomials.iter().cloned().collect();
    assert_eq!(
        monomials,
        [vec![1, 1, 1, 0, 0, 0], vec![0, 0, 0, 1, 1, 1], vec![0, 0, 1, 0, 1, 2]]
            .into_iter()
            .collect()
    );
    let binomials: BTreeSet<Binomial> = init.binomials.iter().cloned().collect();
    let expected: BTreeSet<Binomial> = [
        bin(&[2, 1, 0, 0, 0, 0], &[0, 0, 0, 0, 1, 2]),
        bin(&[0, 1, 2, 0, 0, 0], &[0, 0, 0, 2, 1, 0]),
        bin(&[1, 0, 0, 1, 0, 0], &[0, 0, 1, 0, 0, 1]),
    ]
    .into_iter()
    .collect();
    assert_eq!(binomials, expected);

    // Replace each binomial by one designated term (golden data: the first
    // factor of each printed product); the minimal primes of the resulting
    // monomial ideal are exactly the index sets of a known nonregular
    // virtual chamber.
    let first_terms: [Vec<i64>; 3] =
        [vec![2, 1, 0, 0, 0, 0], vec![0, 0, 0, 2, 1, 0], vec![0, 0, 1, 0, 0, 1]];
    // Pair each binomial with its designated term by content.
    let designated: Vec<Vec<i64>> = init
        .binomials
        .iter()
        .map(|g| {
            first_terms
                .iter()
                .find(|t| g.plus == **t || g.minus == **t)
                .unwrap_or_else(|| panic!("no designated term for {g:?}"))
                .clone()
        })
        .collect();
    let mut gens: Vec<Vec<i64>> = init.monomials.clone();
    gens.extend(designated.iter().cloned());
    let m = MonomialIdeal::new(gens);
    let mut primes = m.minimal_primes();
    for p in &mut primes {
        p.sort_unstable();
    }
    primes.sort();
    let chamber_one = vec![
        vec![0, 2, 3],
        vec![0, 2, 4],
        vec![0, 3, 5],
        vec![0, 4, 5],
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 5],
        vec![1, 4, 5],
    ];
    assert_eq!(primes, chamber_one);

    // Exactly eight virtual chambers are adjacent to the weight vector (it
    // lies in every defining cone). The virtual initial ideal of each
    // contains the three monomial generators and exactly one term of each
    // binomial (a monomial lies in the ideal exactly when the chamber's
    // section does not return it as the standard representative of its
    // degree), so each adjacent chamber reads off a one-term-per-binomial
    // choice; the eight choices are pairwise distinct, and the designated
    // first terms read off the chamber above.
    let all_chambers = virtual_chambers(&b, &lim()).unwrap();
    let cols = b.columns();
    let w_q: Vec<Q> = w.clone();
    let adjacent: Vec<usize> = all_chambers
        .iter()
        .enumerate()
        .filter(|(_, vc)| {
            vc.cells.iter().all(|cell| {
                let gens: Vec<Vec<BigInt>> = cell.iter().map(|&j| cols[j].clone()).collect();
                in_cone_of(&w_q, &gens)
            })
        })
        .map(|(i, _)| i)
        .collect();
    assert_eq!(adjacent.len(), 8, "eight virtual chambers touch the weight vector");

    let dual = b.gale_dual();
    let degree_of = |c: &[i64]| -> Vec<Q> {
        (0..dual.nrows())
            .map(|i| {
                let s: BigInt =
                    (0..dual.ncols()).map(|j| dual.get(i, j) * BigInt::from(c[j])).sum();
                Q::from(s)
            })
            .collect()
    };
    let mut masks = BTreeSet::new();
    let mut designated_chamber = None;
    for &k in &adjacent {
        let vc = &all_chambers[k];
        let section = section_for_chamber(&b, vc);
        let in_ideal = |c: &[i64]| -> bool {
            match section.evaluate(&degree_of(c)) {
                Ok(v) => !(0..c.len()).all(|j| v[j] == Q::from(BigInt::from(c[j]))),
                Err(_) => true,
            }
        };
        for mono in &init.monomials {
            assert!(in_ideal(mono), "monomial generator escapes an adjacent chamber's ideal");
        }
        let mut mask = 0u32;
        for (i, g) in init.binomials.iter().enumerate() {
            let plus_in = in_ideal(&g.plus);
            let minus_in = in_ideal(&g.minus);
            assert!(
                plus_in != minus_in,
                "an adjacent chamber must keep exactly one term of each binomial"
            );
            let kept = if plus_in { &g.plus } else { &g.minus };
            if *kept != designated[i] {
                mask |= 1 << i;
            }
        }
        if mask == 0 {
            designated_chamber = Some(k);
        }
        masks.insert(mask);
    }
    assert_eq!(masks.len(), 8, "the eight adjacent chambers read off eight distinct choices");
    let designated_chamber = designated_chamber.expect("some chamber keeps the first terms");
    assert_eq!(
        all_chambers[designated_chamber].cells, chamber_one,
        "the designated term choice belongs to the chamber above"
    );
    pass(6, t0.elapsed(), 5, "mixed initial ideal golden; adjacent chambers read off the term choices");
}

/// A second interior point of the chamber: a small rational perturbation
/// of the sample, verified to lie in every defining cone of the chamber
/// and outside some defining cone of every other chamber.
fn second_interior_point(
    b: &IntMatrix,
    chambers: &[supernormal::chamber::Chamber],
    k: usize,
) -> Vec<Q> {
    let cols = b.columns();
    let cone_of = |subset: &[usize]| -> Vec<Vec<BigInt>> {
        subset.iter().map(|&j| cols[j].clone()).collect()
    };
    let sample = &chambers[k].sample;
    for denom in [101i64, 1009, 10007, 100003] {
        let eps = Q::new(BigInt::from(1), BigInt::from(denom));
        let w2: Vec<Q> = sample
            .iter()
            .enumerate()
            .map(|(i, x)| x + &eps * Q::from(BigInt::from((i as i64 % 3) - 1)))
            .collect();
        let inside =
            chambers[k].defining.iter().all(|s| in_cone_of(&w2, &cone_of(s)));
        let outside_others = chambers.iter().enumerate().all(|(j, other)| {
            j == k || other.defining.iter().any(|s| !in_cone_of(&w2, &cone_of(s)))
        });
        if inside && outside_others && w2 != *sample {
            return w2;
        }
    }
    panic!("no interior perturbation found for chamber {k}");
}

#[test]
fn criterion_07_chambers_match_initial_ideals() {
    let t0 = Instant::now();
    for (id, expected_count) in [("rect61", Some(16usize)), ("quad51", None)] {
        let b = fixture(id);
        let cc = chamber_complex(&b, &lim()).unwrap();
        if let Some(count) = expected_count {
            assert_eq!(cc.chambers.len(), count, "{id} chamber count");
        }
        let ideal = lattice_ideal(&b, &lim()).unwrap();
        let mut per_chamber = Vec::new();
        for (k, ch) in cc.chambers.iter().enumerate() {
            let w1 = &ch.sample;
            let w2 = second_interior_point(&b, &cc.chambers, k);
            let i1 = initial_ideal(&ideal, w1, &lim()).unwrap();
            let i2 = initial_ideal(&ideal, &w2, &lim()).unwrap();
            assert_eq!(i1, i2, "{id} chamber {k}: the two interior points disagree");
            let m = i1.monomial_ideal().unwrap_or_else(|| {
                panic!("{id} chamber {k}: interior point gave a non-monomial initial ideal")
            });
            per_chamber.push(m);
        }
        for i in 0..per_chamber.len() {
            for j in i + 1..per_chamber.len() {
                assert_ne!(
                    per_chamber[i], per_chamber[j],
                    "{id}: chambers {i} and {j} share an initial ideal"
                );
            }
        }
    }
    pass(7, t0.elapsed(), 60, "initial ideals constant on chambers, distinct across chambers; 16 chambers");
}

#[test]
fn criterion_08_tight_implies_tdi_on_supernormal_configurations() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7D1);
    let mut checked = 0;
    for id in ["hilbert3d+", "cube4d+", "rect61", "square2d"] {
        let b = fixture(id);
        let n = b.ncols();
        let mut sampled = 0;
        while sampled < 50 {
            let c: Vec<BigInt> =
                (0..n).map(|_| BigInt::from(rng.gen_range(-4..=6i64))).collect();
            if !is_feasible(&b, &c) {
                continue;
            }
            let tight = tighten(&b, &c).unwrap();
            assert!(is_tight(&b, &tight));
            let rep = is_tdi(&b, &tight, &lim()).unwrap();
            assert!(rep.tdi, "{id}: tight bound {tight:?} is not TDI");
            sampled += 1;
            checked += 1;
        }
    }
    assert_eq!(checked, 200);

    // The skew quadrant admits a tight bound that is not TDI; exhaustive
    // search over the small box finds one.
    let b = fixture("quadrant3");
    let mut witness = None;
    'outer: for x in -3..=3i64 {
        for y in -3..=3i64 {
            for z in -3..=3i64 {
                let c = bi(&[x, y, z]);
                if is_feasible(&b, &c) && is_tight(&b, &c) && !is_tdi(&b, &c, &lim()).unwrap().tdi
                {
                    witness = Some(c);
                    break 'outer;
                }
            }
        }
    }
    let w = witness.expect("a tight non-TDI bound exists in the search box");
    println!("tight non-TDI witness for quadrant3: {w:?}");
    pass(8, t0.elapsed(), 60, "200 sampled tight bounds all TDI; tight non-TDI witness found");
}

#[test]
fn criterion_09_virtual_chamber_bijection() {
    let t0 = Instant::now();
    let b = fixture("rect61");
    let vcs = virtual_chambers(&b, &lim()).unwrap();
    assert_eq!(vcs.len(), 18, "18 triangulations of the dual");
    assert_eq!(vcs.iter().filter(|vc| vc.regular).count(), 16, "16 regular");
    let nonregular: BTreeSet<Vec<Vec<usize>>> =
        vcs.iter().filter(|vc| !vc.regular).map(|vc| vc.cells.clone()).collect();
    let printed1 = vec![
        vec![0, 2, 3],
        vec![0, 2, 4],
        vec![0, 3, 5],
        vec![0, 4, 5],
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 5],
        vec![1, 4, 5],
    ];
    let printed2 = vec![
        vec![0, 1, 4],
        vec![0, 1, 5],
        vec![0, 2, 4],
        vec![0, 2, 5],
        vec![1, 3, 4],
        vec![1, 3, 5],
        vec![2, 3, 4],
        vec![2, 3, 5],
    ];
    assert_eq!(
        nonregular,
        [printed1, printed2].into_iter().collect::<BTreeSet<_>>(),
        "the two non-regular virtual chambers match the printed listings"
    );
    let report = verify_bijection(&b, 8, &lim()).unwrap();
    assert_eq!(report.chamber_count, 18);
    assert_eq!(report.ideal_count, 18, "all 18 ideals constructed: {:?}", report.errors);
    assert!(report.distinct_ideals, "the 18 ideals are pairwise distinct");
    assert!(
        report.round_trip_failures.is_empty(),
        "chamber → ideal → chamber round trips: {:?}",
        report.round_trip_failures
    );
    assert!(report.passed());
    pass(9, t0.elapsed(), 120, "18 virtual chambers (16 regular), 18 distinct ideals, exact round trips");
}

#[test]
fn criterion_10_lemma_suite() {
    let t0 = Instant::now();
    // TDI bounds describe integral polyhedra: 100 sampled TDI systems.
    let mut rng = ChaCha8Rng::seed_from_u64(0x404);
    let mut tdi_checked = 0;
    'outer: for id in ["hilbert3d+", "rect61", "square2d", "quadrant3", "hilbert3d"] {
        let b = fixture(id);
        let n = b.ncols();
        let mut guard = 0;
        while guard < 400 {
            guard += 1;
            let c: Vec<BigInt> =
                (0..n).map(|_| BigInt::from(rng.gen_range(-4..=6i64))).collect();
            if !is_feasible(&b, &c) {
                continue;
            }
            if !is_tdi(&b, &c, &lim()).unwrap().tdi {
                continue;
            }
            assert!(
                is_integral(&b, &c),
                "{id}: TDI bound {c:?} describes a non-integral polyhedron"
            );
            tdi_checked += 1;
            if tdi_checked == 100 {
                break 'outer;
            }
        }
    }
    assert_eq!(tdi_checked, 100, "one hundred TDI systems sampled");

    // Fiber uniqueness and vertex choice on all enumerated degrees ≤ 6.
    let b = fixture("rect61");
    let bt = b.transpose();
    let a = b.gale_dual();
    let vcs = virtual_chambers(&b, &lim()).unwrap();
    let degree6: Vec<Vec<i64>> = {
        fn rec(v: &mut Vec<i64>, idx: usize, budget: i64, out: &mut Vec<Vec<i64>>) {
            if idx == v.len() {
                out.push(v.clone());
                return;
            }
            for e in 0..=budget {
                v[idx] = e;
                rec(v, idx + 1, budget - e, out);
            }
            v[idx] = 0;
        }
        let mut out = Vec::new();
        rec(&mut vec![0i64; 6], 0, 6, &mut out);
        out
    };
    let integral: Vec<bool> = degree6.iter().map(|c| is_integral(&b, &bi(c))).collect();
    let mut vertex_checks = 0;
    for vc in &vcs {
        // Exactly one standard monomial per enumerated fiber.
        let vii = virtual_initial_ideal(&b, vc, 6, &lim()).unwrap();
        assert_eq!(vii.certified_to_degree, 6);
        let s = section_for_chamber(&b, vc);
        for (c, is_int) in degree6.iter().zip(&integral) {
            if !*is_int {
                continue;
            }
            let deg: Vec<Q> = (0..a.nrows())
                .map(|i| {
                    Q::from((0..6).map(|j| a.get(i, j) * c[j]).sum::<BigInt>())
                })
                .collect();
            let v = s.evaluate(&deg).unwrap();
            if !v.iter().all(|x| x.is_integer()) {
                continue;
            }
            // The chosen fiber member corresponds to a lattice point z of
            // the polyhedron with c − Bᵀz = v; when the polyhedron equals
            // its integer hull, z must be one of its vertices.
            let rhs: Vec<BigInt> =
                c.iter().zip(&v).map(|(ci, vi)| BigInt::from(*ci) - vi.to_integer()).collect();
            let z = bt.solve_integer(&rhs).expect("fiber member has an integral point");
            let active: Vec<usize> =
                (0..6).filter(|&i| v[i].is_integer() && v[i].to_integer().is_zero()).collect();
            assert!(
                b.select_cols(&active).rank() == b.nrows(),
                "chosen point {z:?} of degree {c:?} is not a vertex"
            );
            vertex_checks += 1;
        }
    }
    assert!(vertex_checks > 100, "vertex condition exercised ({vertex_checks} checks)");

    // Divisibility is preserved after stripping the degree-wise common
    // factor: componentwise tightening is monotone. 200 sampled pairs.
    let mut pair_rng = ChaCha8Rng::seed_from_u64(0x68);
    let mut pairs = 0;
    for id in ["rect61", "quad51"] {
        let b = fixture(id);
        let n = b.ncols();
        while pairs < if id == "rect61" { 100 } else { 200 } {
            let u: Vec<i64> = (0..n).map(|_| pair_rng.gen_range(0..=4i64)).collect();
            let v: Vec<i64> =
                u.iter().map(|x| x + pair_rng.gen_range(0..=3i64)).collect();
            let tu = tighten(&b, &bi(&u)).unwrap();
            let tv = tighten(&b, &bi(&v)).unwrap();
            for i in 0..n {
                assert!(
                    tu[i] <= tv[i],
                    "{id}: gcd-stripped divisibility fails for {u:?} ≤ {v:?}"
                );
            }
            pairs += 1;
        }
    }
    assert_eq!(pairs, 200);
    pass(10, t0.elapsed(), 60, "TDI ⇒ integral on 100 systems; fiber uniqueness, vertex choice, divisibility");
}
