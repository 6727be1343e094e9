//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its headline numbers (run with `--nocapture` to see them).
//!
//! Criterion 1 compares the analytic step-potential table against the
//! published reference digits cell by cell. Three published cells of the
//! Dirichlet row are inconsistent with the operator they describe (see the
//! failure message for the variational argument), so that test documents
//! the mismatch and fails; every other criterion passes.

use std::time::Instant;

use spectral_core::domain::{
    make_named_potential, AnyPotential, BoundaryKind2D, BoundaryPair, ConvexPolygonDomain,
    DomainSpec, IntervalDomain, Potential1D, Potential2D,
};
use spectral_core::fem2d;
use spectral_core::perturbation;
use spectral_core::report::Verdict;
use spectral_core::step_analytic::{self, TableSolver};
use spectral_core::verify1d;
use spectral_core::{eig1d, SpectralError};
use spectral_oracles::families;

const SEED: u64 = 0x5EED;

fn interval(a: f64, b: f64) -> IntervalDomain {
    IntervalDomain::new(a, b).unwrap()
}

fn named_1d(name: &str, params: &[f64], a: f64, b: f64) -> Potential1D {
    match make_named_potential(name, params, &DomainSpec::Interval(interval(a, b))).unwrap() {
        AnyPotential::OneD(p) => p,
        _ => unreachable!(),
    }
}

fn named_2d(name: &str, params: &[f64], poly: &ConvexPolygonDomain) -> Potential2D {
    match make_named_potential(name, params, &DomainSpec::Polygon(poly.clone())).unwrap() {
        AnyPotential::TwoD(p) => p,
        _ => unreachable!(),
    }
}

#[test]
fn c01_table_reproduction() {
    let start = Instant::now();
    let (mu_fd, lam_fd) = step_analytic::reference_table(TableSolver::FiniteDifference).unwrap();
    let (mu_an, lam_an) = step_analytic::reference_table(TableSolver::Analytic).unwrap();

    // finite-difference solver reproduces the analytic table within 1e-3
    // in the square roots
    for (fd, an) in mu_fd.iter().chain(&lam_fd).zip(mu_an.iter().chain(&lam_an)) {
        assert!(
            (fd.computed_sqrt - an.computed_sqrt).abs() <= 1e-3,
            "solver disagreement at c={}: {} vs {}",
            fd.c,
            fd.computed_sqrt,
            an.computed_sqrt
        );
    }

    let mut mismatches = Vec::new();
    for cell in mu_an.iter().chain(&lam_an) {
        println!(
            "  c={:<8} computed {:<12.6} published {:<12.6} ({} d.p.) {}",
            cell.c,
            cell.computed_sqrt,
            cell.published_sqrt,
            cell.decimals,
            if cell.matches_published { "match" } else { "MISMATCH" }
        );
        if !cell.matches_published {
            mismatches.push(format!(
                "c={}: computed {:.4} vs published {:.4}",
                cell.c, cell.computed_sqrt, cell.published_sqrt
            ));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "runtime {elapsed:.1}s exceeds 10s");
    if mismatches.is_empty() {
        println!("criterion 1: PASS — all 12 cells match the published digits ({elapsed:.1}s)");
    } else {
        println!("criterion 1: FAIL — {} of 12 cells mismatch", mismatches.len());
        panic!(
            "published reference digits are inconsistent with the operator for the \
             sqrt(lambda_1) row at three heights [{}]. A test function supported in \
             (1,2) where the potential vanishes bounds lambda_1 <= pi^2, i.e. \
             sqrt(lambda_1) <= 3.1416, for every step height, which the published \
             4.0270 and 10.3793 violate; those equal the 2nd and 4th secular roots \
             (the sub-barrier roots were evidently missed), and the published 1.5724 \
             at c=1e-4 exceeds the bound sqrt(lambda_1(0) + 1e-4) = 1.570829. The \
             computed row satisfies the secular equations with transfer-matrix \
             residual < 1e-9 and matches the independent finite-difference solver \
             to 1e-3. The intact 9 cells match the published digits exactly.",
            mismatches.join("; ")
        );
    }
}

#[test]
fn c02_free_operator_identity() {
    let start = Instant::now();
    let domains = [interval(0.0, std::f64::consts::PI), interval(0.0, 1.0), interval(-1.5, 2.5)];
    for dom in domains {
        let v = Potential1D::constant(dom, 0.0).unwrap();
        let mu = eig1d::solve(&v, dom, BoundaryPair::NN, 7, 1e-9).unwrap();
        let lam = eig1d::solve(&v, dom, BoundaryPair::DD, 6, 1e-9).unwrap();
        let l = dom.length();
        for k in 1..=6usize {
            let exact = (k as f64 * std::f64::consts::PI / l).powi(2);
            assert!(
                (mu.nth(k + 1) - lam.nth(k)).abs() <= 1e-8,
                "L={l}, k={k}: mu_k+1={} lambda_k={}",
                mu.nth(k + 1),
                lam.nth(k)
            );
            assert!(
                (lam.nth(k) - exact).abs() <= 1e-6,
                "L={l}, k={k}: lambda={} exact={exact}",
                lam.nth(k)
            );
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "runtime {elapsed:.1}s exceeds 5s");
    println!(
        "criterion 2: PASS — mu_(k+1) = lambda_k = (k pi / L)^2 on 3 intervals, \
         k <= 6 ({elapsed:.1}s)"
    );
}

#[test]
fn c03_derivative_consistency() {
    let start = Instant::now();
    // positive potentials keep the derivative bounded away from zero, so
    // the relative comparison is meaningful
    let (xs, vs) = families::bounded_random(SEED, 7, 0.0, 2.0);
    let shifted: Vec<f64> = vs.iter().map(|v| v + 6.0).collect();
    let potentials = vec![
        named_1d("poly", &[0.5, 0.0, 1.0], 0.0, std::f64::consts::PI),
        named_1d("exp", &[1.0, 1.0], 0.0, std::f64::consts::PI),
        named_1d("poly", &[2.0, 1.0, 0.0, 0.2], -1.0, 1.0),
        named_1d("gauss_rising", &[3.0], -1.0, 1.0)
            .scale_shift(1.0, 2.0)
            .unwrap(),
        Potential1D::tabulated(interval(0.0, 2.0), xs, shifted).unwrap(),
    ];
    let bcs = [
        BoundaryPair::DD,
        BoundaryPair::NN,
        BoundaryPair::DN,
        BoundaryPair::ND,
    ];
    let delta = 1e-4;
    let mut worst: f64 = 0.0;
    let mut cases = 0usize;
    for v in &potentials {
        let dom = v.domain();
        for bc in bcs {
            for k in 1..=3usize {
                for tau in [0.0, 0.5, -0.5, 1.0, -1.0] {
                    let hf = perturbation::hf_derivative(v, dom, bc, k, tau).unwrap();
                    let plus = v.scale_shift(tau + delta, 0.0).unwrap();
                    let minus = v.scale_shift(tau - delta, 0.0).unwrap();
                    let lp = eig1d::solve(&plus, dom, bc, k, 1e-10).unwrap();
                    let lm = eig1d::solve(&minus, dom, bc, k, 1e-10).unwrap();
                    let fd = (lp.nth(k) - lm.nth(k)) / (2.0 * delta);
                    let rel = (hf - fd).abs() / fd.abs().max(1e-3);
                    worst = worst.max(rel);
                    cases += 1;
                    assert!(
                        rel <= 1e-4,
                        "bc {bc}, k={k}, tau={tau}: analytic {hf} vs centered {fd} (rel {rel:.2e})"
                    );
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "runtime {elapsed:.1}s exceeds 60s");
    println!(
        "criterion 3: PASS — {cases} derivative pairs agree, worst relative \
         deviation {worst:.2e} ({elapsed:.1}s)"
    );
}

#[test]
fn c04_initial_gap_slopes() {
    let v = named_1d("poly", &[0.0, 0.0, 1.0], 0.0, std::f64::consts::PI);
    for k in 1..=4usize {
        let s = perturbation::prop31_initial_slope(&v, k).unwrap();
        let want = -1.0 / (k * k) as f64;
        assert!(
            (s.slope() - want).abs() <= 1e-6,
            "k={k}: slope {} vs {want}",
            s.slope()
        );
    }
    let convex = [
        named_1d("exp", &[1.0, 1.0], 0.0, std::f64::consts::PI),
        named_1d("poly", &[0.0, 0.0, 1.0, 0.0, 0.5], -1.0, 1.0),
        named_1d("exp", &[0.5, 2.0], -1.0, 1.5),
        named_1d("poly", &[1.0, -1.0, 2.0], 0.0, 2.0),
        Potential1D::from_closure_with_d2(interval(0.0, 2.0), |x| x.cosh(), |x| x.cosh(), None)
            .unwrap(),
    ];
    for (i, v) in convex.iter().enumerate() {
        for k in 1..=5usize {
            let s = perturbation::prop31_initial_slope(v, k).unwrap();
            assert!(s.slope() < 0.0, "potential {i}, k={k}: slope {}", s.slope());
        }
    }
    println!(
        "criterion 4: PASS — quadratic slopes equal -1/k^2 to 1e-6 and 5 convex \
         potentials have negative slopes for k <= 5"
    );
}

#[test]
fn c05_symmetric_ordering_suite() {
    let start = Instant::now();
    let mut strict = 0usize;
    let mut check = |v: &Potential1D, expect_mu_below: bool, label: &str| {
        let r = verify1d::check_thm33(v, v.domain()).unwrap();
        assert_eq!(
            r.inequality.verdict,
            Verdict::HoldsStrictly,
            "{label}: {:?}",
            r.inequality
        );
        assert!(
            r.inequality.margin > r.inequality.error_budget,
            "{label}: margin {} vs budget {}",
            r.inequality.margin,
            r.inequality.error_budget
        );
        if expect_mu_below {
            assert!(r.mu2 < r.lambda1, "{label}");
        } else {
            assert!(r.lambda1 < r.mu2, "{label}");
        }
        assert!(r.routes_agree, "{label}: mixed-BC route disagrees");
        strict += 1;
    };

    check(&named_1d("gauss_rising", &[3.0], -1.0, 1.0), false, "rising");
    check(&named_1d("gauss_falling", &[3.0], -1.0, 1.0), true, "falling");
    check(&named_1d("poly", &[0.0, 0.0, 1.0], -1.0, 1.0), false, "+x^2");
    check(&named_1d("poly", &[0.0, 0.0, -1.0], -1.0, 1.0), true, "-x^2");
    for idx in 0..20u64 {
        let fam = families::symmetric_monotone_half(SEED, idx);
        let d = interval(fam.xs[0], *fam.xs.last().unwrap());
        let v = Potential1D::tabulated(d, fam.xs.clone(), fam.vs.clone()).unwrap();
        check(&v, fam.non_increasing_right, &format!("seeded {idx}"));
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 120.0, "runtime {elapsed:.1}s exceeds 120s");
    println!(
        "criterion 5: PASS — {strict} potentials produce the predicted strict \
         orderings, zero violated verdicts ({elapsed:.1}s)"
    );
}

#[test]
fn c06_quotient_diagnostic() {
    for idx in 0..20u64 {
        let (xs, vs) = families::monotone_on_interval(SEED, idx, true);
        let d = interval(xs[0], *xs.last().unwrap());
        let v = Potential1D::tabulated(d, xs, vs).unwrap();
        let r = verify1d::quotient_diagnostic(&v, d, 1.0).unwrap();
        assert!(r.precondition_holds, "case {idx}");
        assert_eq!(r.monotone_decreasing, Some(true), "case {idx}");
        assert_eq!(r.violations, 0, "case {idx}");
        assert_eq!(r.crossing_count, 1, "case {idx}");
        assert!(r.crossing.is_some(), "case {idx}");
    }
    println!(
        "criterion 6: PASS — quotient strictly decreasing with a unique \
         squared-eigenfunction crossing for 20 seeded potentials"
    );
}

#[test]
fn c07_square_spectra() {
    let start = Instant::now();
    let nm = fem2d::square_tensor_spectrum(0.0, 10, BoundaryKind2D::Neumann);
    assert_eq!(
        nm.eigenvalues,
        vec![0.0, 1.0, 1.0, 2.0, 4.0, 4.0, 5.0, 5.0, 8.0, 9.0]
    );
    let dd = fem2d::square_tensor_spectrum(0.0, 10, BoundaryKind2D::Dirichlet);
    assert_eq!(
        dd.eigenvalues,
        vec![2.0, 5.0, 5.0, 8.0, 10.0, 10.0, 13.0, 13.0, 17.0, 17.0]
    );
    let mu = fem2d::square_tensor_spectrum(0.0, 42, BoundaryKind2D::Neumann);
    let lam = fem2d::square_tensor_spectrum(0.0, 40, BoundaryKind2D::Dirichlet);
    for k in 1..=40usize {
        assert!(lam.nth(k) - mu.nth(k + 2) >= 1.0, "gap failure at k={k}");
    }

    let sq = ConvexPolygonDomain::square(0.0, std::f64::consts::PI).unwrap();
    let v = Potential2D::constant(sq.clone(), 0.0).unwrap();
    for bc in [BoundaryKind2D::Neumann, BoundaryKind2D::Dirichlet] {
        let fem = fem2d::solve_polygon(&v, &sq, bc, 8, 5).unwrap();
        let exact = fem2d::square_tensor_spectrum(0.0, 8, bc);
        for k in 1..=8usize {
            let denom = exact.nth(k).abs().max(1.0);
            let rel = (fem.nth(k) - exact.nth(k)) / denom;
            assert!(
                rel.abs() <= 0.01,
                "{bc} k={k}: FEM {} vs exact {} (rel {rel:.3e})",
                fem.nth(k),
                exact.nth(k)
            );
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 7: PASS — exact tensor lists, gap >= 1 for k <= 40, level-5 \
         FEM within 1% on both boundary conditions ({elapsed:.1}s)"
    );
}

#[test]
fn c08_index_shift_bound() {
    let start = Instant::now();
    let sq = ConvexPolygonDomain::square(0.0, 1.0).unwrap();
    let v = named_2d("exp", &[1.0, 1.0], &sq);
    let reports = fem2d::check_thm42(&v, &sq, 4, 4).unwrap();
    for rep in &reports {
        assert!(rep.applicable, "{}", rep.label);
        assert!(
            rep.margin > -rep.error_budget,
            "{}: margin {} budget {}",
            rep.label,
            rep.margin,
            rep.error_budget
        );
    }

    // x-only potential against the 1D tensor oracle
    let pi = std::f64::consts::PI;
    let sq_pi = ConvexPolygonDomain::square(0.0, pi).unwrap();
    let vx = named_2d("sin_x", &[1.0], &sq_pi);
    let lam2d = fem2d::solve_polygon(&vx, &sq_pi, BoundaryKind2D::Dirichlet, 4, 4).unwrap();
    let d1 = interval(0.0, pi);
    let v1 = Potential1D::from_closure(d1, |x| x.sin(), None).unwrap();
    let x_dd = eig1d::solve(&v1, d1, BoundaryPair::DD, 4, 1e-9).unwrap();
    let mut tensor: Vec<f64> = (1..=4)
        .flat_map(|i| (1..=4).map(move |j| (i, j)))
        .map(|(i, j)| x_dd.nth(i) + (j * j) as f64)
        .collect();
    tensor.sort_by(f64::total_cmp);
    for k in 1..=4usize {
        let budget = 10.0 * lam2d.nth_error(k) + 1e-6;
        assert!(
            (lam2d.nth(k) - tensor[k - 1]).abs() <= budget.max(0.02 * tensor[k - 1]),
            "tensor check k={k}: {} vs {}",
            lam2d.nth(k),
            tensor[k - 1]
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 8: PASS — mu_(k+1) <= lambda_k for k <= 4 with positive margins, \
         and the x-only case matches the 1D tensor oracle ({elapsed:.1}s)"
    );
}

#[test]
fn c09_concave_bounds_stability() {
    let start = Instant::now();
    let sq = ConvexPolygonDomain::square(-1.0, 1.0).unwrap();
    let v = named_2d("radial_concave", &[1.0], &sq);
    let mut margins = Vec::new();
    for level in [4u32, 5u32] {
        let mu = fem2d::solve_polygon(&v, &sq, BoundaryKind2D::Neumann, 3, level).unwrap();
        let lam = fem2d::solve_polygon(&v, &sq, BoundaryKind2D::Dirichlet, 1, level).unwrap();
        let m2 = lam.nth(1) - mu.nth(2);
        let m3 = lam.nth(1) - mu.nth(3);
        let budget2 = 10.0 * (mu.nth_error(2) + lam.nth_error(1));
        let budget3 = 10.0 * (mu.nth_error(3) + lam.nth_error(1));
        assert!(m2 > budget2, "level {level}: mu_2 margin {m2} vs {budget2}");
        assert!(m3 > budget3, "level {level}: mu_3 margin {m3} vs {budget3}");
        margins.push((m2, m3));
    }
    let (c2, c3) = margins[0];
    let (f2, f3) = margins[1];
    assert!(c2.signum() == f2.signum() && c3.signum() == f3.signum());
    assert!(
        (f2 - c2).abs() <= 0.2 * f2.abs().max(c2.abs()),
        "mu_2 margin drift: {c2} -> {f2}"
    );
    assert!(
        (f3 - c3).abs() <= 0.2 * f3.abs().max(c3.abs()),
        "mu_3 margin drift: {c3} -> {f3}"
    );
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 120.0, "runtime {elapsed:.1}s exceeds 120s");
    println!(
        "criterion 9: PASS — mu_2 < lambda_1 and mu_3 < lambda_1 with margins \
         {f2:.3} / {f3:.3}, drift within 20% across levels 4-5 ({elapsed:.1}s)"
    );
}

#[test]
fn c10_property_suites() {
    let start = Instant::now();
    let mut cases = 0usize;

    // constant-shift exactness over a seeded family: exact to 1e-10 on
    // identical grids, and to 1e-10 relative through the adaptive solver
    // (whose grids reach the scale where representing 2/h^2 + V already
    // rounds at the 1e-10 level)
    for idx in 0..10u64 {
        let (xs, vs) = families::bounded_random(SEED, idx, -1.0, 1.0);
        let d = interval(-1.0, 1.0);
        let v = Potential1D::tabulated(d, xs, vs).unwrap();
        let shift = 1.0 + idx as f64 * 0.37;
        let vc = v.scale_shift(1.0, shift).unwrap();
        let sys_a = eig1d::assemble(&v, d, BoundaryPair::DD, 512).unwrap();
        let sys_b = eig1d::assemble(&vc, d, BoundaryPair::DD, 512).unwrap();
        let ga = eig1d::lowest_eigenvalues(&sys_a, 3).unwrap();
        let gb = eig1d::lowest_eigenvalues(&sys_b, 3).unwrap();
        let a = eig1d::solve(&v, d, BoundaryPair::DD, 3, 1e-7).unwrap();
        let b = eig1d::solve(&vc, d, BoundaryPair::DD, 3, 1e-7).unwrap();
        for k in 1..=3 {
            assert!(
                (gb.nth(k) - ga.nth(k) - shift).abs() <= 1e-10,
                "case {idx}, k={k}: grid-level shift defect {}",
                (gb.nth(k) - ga.nth(k) - shift).abs()
            );
            let defect = (b.nth(k) - a.nth(k) - shift).abs();
            assert!(
                defect <= 1e-10 * (1.0 + a.nth(k).abs()),
                "case {idx}, k={k}: solver-level shift defect {defect}"
            );
        }
        cases += 1;
    }

    // potential monotonicity at the matrix level
    for idx in 0..15u64 {
        let (xs, vs) = families::bounded_random(SEED, 100 + idx, 0.0, 2.0);
        let d = interval(0.0, 2.0);
        let bigger: Vec<f64> = vs.iter().map(|v| v + 0.3 + (idx as f64) * 0.1).collect();
        let v = Potential1D::tabulated(d, xs.clone(), vs).unwrap();
        let w = Potential1D::tabulated(d, xs, bigger).unwrap();
        let sv = eig1d::assemble(&v, d, BoundaryPair::NN, 256).unwrap();
        let sw = eig1d::assemble(&w, d, BoundaryPair::NN, 256).unwrap();
        let ev = eig1d::lowest_eigenvalues(&sv, 5).unwrap();
        let ew = eig1d::lowest_eigenvalues(&sw, 5).unwrap();
        for k in 1..=5 {
            assert!(ev.nth(k) <= ew.nth(k) + 1e-9, "case {idx}, k={k}");
        }
        cases += 1;
    }

    // Galerkin refinement monotonicity on three polygons
    let polys = [
        ConvexPolygonDomain::square(0.0, std::f64::consts::PI).unwrap(),
        ConvexPolygonDomain::regular(6, 1.3).unwrap(),
        ConvexPolygonDomain::new(vec![[0.0, 0.0], [2.0, 0.0], [2.5, 1.5], [0.5, 2.0]]).unwrap(),
    ];
    for poly in &polys {
        let v = Potential2D::constant(poly.clone(), 0.5).unwrap();
        let mut prev: Option<Vec<f64>> = None;
        for level in 2..=4u32 {
            let mesh = fem2d::mesh_polygon(poly, level).unwrap();
            let pencil = fem2d::assemble2d(&mesh, &v, BoundaryKind2D::Dirichlet).unwrap();
            let vals = fem2d::generalized_eigs(&pencil, 4).unwrap();
            if let Some(p) = &prev {
                for (a, b) in vals.iter().zip(p) {
                    assert!(*a <= b + 1e-10, "refinement raised an eigenvalue");
                }
                cases += 1;
            }
            prev = Some(vals);
        }
    }

    // symmetric even/odd decomposition equality
    for idx in 0..20u64 {
        let fam = families::symmetric_monotone_half(SEED, 200 + idx);
        let r = *fam.xs.last().unwrap();
        let d = interval(-r, r);
        let v = Potential1D::tabulated(d, fam.xs.clone(), fam.vs.clone()).unwrap();
        let half_d = interval(0.0, r);
        let half = v.restrict(half_d).unwrap();
        let full_mu = eig1d::solve(&v, d, BoundaryPair::NN, 4, 1e-8).unwrap();
        let full_lam = eig1d::solve(&v, d, BoundaryPair::DD, 4, 1e-8).unwrap();
        let nn = eig1d::solve(&half, half_d, BoundaryPair::NN, 4, 1e-8).unwrap();
        let dn = eig1d::solve(&half, half_d, BoundaryPair::DN, 4, 1e-8).unwrap();
        let nd = eig1d::solve(&half, half_d, BoundaryPair::ND, 4, 1e-8).unwrap();
        let dd = eig1d::solve(&half, half_d, BoundaryPair::DD, 4, 1e-8).unwrap();
        let mut merged_mu: Vec<(f64, f64)> = nn
            .eigenvalues
            .iter()
            .zip(&nn.error_estimate)
            .chain(dn.eigenvalues.iter().zip(&dn.error_estimate))
            .map(|(l, e)| (*l, *e))
            .collect();
        merged_mu.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut merged_lam: Vec<(f64, f64)> = nd
            .eigenvalues
            .iter()
            .zip(&nd.error_estimate)
            .chain(dd.eigenvalues.iter().zip(&dd.error_estimate))
            .map(|(l, e)| (*l, *e))
            .collect();
        merged_lam.sort_by(|x, y| x.0.total_cmp(&y.0));
        for k in 1..=4usize {
            let bud_mu = 10.0 * (full_mu.nth_error(k) + merged_mu[k - 1].1) + 1e-9;
            assert!(
                (full_mu.nth(k) - merged_mu[k - 1].0).abs() <= bud_mu,
                "case {idx}: Neumann decomposition k={k}"
            );
            let bud_lam = 10.0 * (full_lam.nth_error(k) + merged_lam[k - 1].1) + 1e-9;
            assert!(
                (full_lam.nth(k) - merged_lam[k - 1].0).abs() <= bud_lam,
                "case {idx}: Dirichlet decomposition k={k}"
            );
        }
        cases += 1;
    }

    assert!(cases >= 50, "only {cases} property cases ran");
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 10: PASS — {cases} seeded property cases: shift exactness, \
         eigenvalue monotonicity, Galerkin refinement, even/odd decomposition \
         ({elapsed:.1}s)"
    );
}

#[test]
fn solver_error_paths_stay_reported() {
    // grid ceiling reached: the best estimate is carried in the error
    let d = interval(0.0, 1.0);
    let v = Potential1D::constant(d, 0.0).unwrap();
    std::env::set_var("SPECTRAL_GAP_NMAX", "256");
    let res = eig1d::solve(&v, d, BoundaryPair::DD, 1, 1e-10);
    std::env::remove_var("SPECTRAL_GAP_NMAX");
    match res {
        Err(SpectralError::NoConvergence { best, .. }) => {
            assert!((best[0] - std::f64::consts::PI.powi(2)).abs() < 1e-3);
        }
        other => panic!("expected NoConvergence, got {other:?}"),
    }
}
