use morse_nu::oracle::{self, RadialGrid};
use morse_nu::{spectrum, units, MoleculeParams};

fn molecules() -> [MoleculeParams; 2] {
    [
        MoleculeParams::carbon_monoxide(),
        MoleculeParams::lithium_hydride(),
    ]
}

fn morse_l0(p: &MoleculeParams, n: u32) -> f64 {
    let h2 = units::hbar2();
    let v = f64::from(n) + 0.5;
    -p.d + p.a * (2.0 * p.d * h2 / p.mu).sqrt() * v - h2 * p.a * p.a / (2.0 * p.mu) * v * v
}

#[test]
fn l_zero_oracle_matches_closed_form() {
    for p in molecules() {
        for n in [0, 2, 9] {
            let r = oracle::solve_level(&p, n, 0, oracle::DEFAULT_TOL).unwrap();
            assert!(r.converged);
            assert_eq!(r.node_count, n as usize);
            assert!(
                (r.energy - morse_l0(&p, n)).abs() < 1e-6,
                "{} n={n}: {}",
                p.name,
                r.energy
            );
        }
    }
}

#[test]
fn co_ground_state() {
    let p = MoleculeParams::carbon_monoxide();
    let r = oracle::solve_level(&p, 0, 0, oracle::DEFAULT_TOL).unwrap();
    assert!((r.energy - -11.0915).abs() < 5e-4);
    let nu = spectrum::energy_level(&p, 0, 0).unwrap().energy;
    assert!((r.energy - nu).abs() < 0.002);
}

#[test]
fn lih_rotating_ground_state_near_table() {
    let p = MoleculeParams::lithium_hydride();
    let r = oracle::solve_level(&p, 0, 10, oracle::DEFAULT_TOL).unwrap();
    assert!((r.energy - -2.3287).abs() < 0.003, "{}", r.energy);
}

#[test]
fn analytic_ground_state_brackets_zero_residual() {
    // one bisection-step-wide window around the analytic l = 0 level flips the tail
    let p = MoleculeParams::lithium_hydride();
    let g = RadialGrid::default_for(&p);
    let e = morse_l0(&p, 0);
    let below = oracle::numerov_integrate(&p, 0, e - 1e-6, &g);
    let above = oracle::numerov_integrate(&p, 0, e + 1e-6, &g);
    assert!(below.boundary_residual > 0.0);
    assert!(above.boundary_residual < 0.0 || above.node_count == 1);
}

#[test]
fn grid_refinement_is_converged() {
    for p in molecules() {
        let g = RadialGrid::default_for(&p);
        let fine = g.with_step(g.step / 2.0).unwrap();
        for (n, l) in [(0, 0), (5, 10), (7, 5)] {
            let a = oracle::solve_level_on(&p, n, l, 1e-10, &g).unwrap().energy;
            let b = oracle::solve_level_on(&p, n, l, 1e-10, &fine)
                .unwrap()
                .energy;
            assert!((a - b).abs() < 1e-6, "{} ({n},{l}): {a} vs {b}", p.name);
        }
    }
}

#[test]
fn observed_order_is_fourth() {
    for p in molecules() {
        let order = oracle::richardson_order(&p, 3, 5, RadialGrid::de_broglie_step(&p)).unwrap();
        assert!(order >= 3.5, "{}: order {order}", p.name);
    }
}

#[test]
fn pekeris_error_is_small_at_low_n() {
    for p in molecules() {
        for (n, bound) in [(0, 0.01), (5, 0.05), (7, 0.05)] {
            for l in [0, 5, 10] {
                let o = oracle::solve_level(&p, n, l, oracle::DEFAULT_TOL)
                    .unwrap()
                    .energy;
                let a = spectrum::energy_level(&p, n, l).unwrap().energy;
                assert!(
                    (a - o).abs() <= bound,
                    "{} ({n},{l}) delta {}",
                    p.name,
                    a - o
                );
            }
        }
    }
}

#[test]
fn eigenfunction_overlap_and_nodes() {
    for p in molecules() {
        let g = RadialGrid::default_for(&p);
        for (n, l) in [(0, 0), (0, 10), (2, 3), (5, 5)] {
            let r = oracle::solve_level(&p, n, l, 1e-10).unwrap();
            let ef = oracle::eigenfunction_on(&p, l, r.energy, &g);
            assert_eq!(ef.node_count, n as usize);
            let wf = spectrum::radial_wavefunction(&p, n, l).unwrap();
            let prod: Vec<f64> = ef
                .radii
                .iter()
                .zip(&ef.values)
                .map(|(&x, &u)| wf.eval(x) * u)
                .collect();
            let overlap = oracle::simpson(&prod, g.step).abs();
            assert!(overlap >= 0.999, "{} ({n},{l}) overlap {overlap}", p.name);
        }
    }
}
