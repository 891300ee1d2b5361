//! Acceptance suite. One test per criterion; each prints a PASS line when
//! its assertions hold (run with `--nocapture` to see them).

use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use multigame_core::double::{mixed_interpolate, AxisCell};
use multigame_core::game::{prisoners_dilemma, social_game, NormalFormGame, PureProfile};
use multigame_core::mixed::mixed_nash_2x2;
use multigame_core::regularity::{
    certificate_is_sound, completely_pure_regular, verify_bayes_ne, TypePrior,
};
use multigame_core::tournament::{
    builtin_factory, play_match, run_tournament, strategies, InfoMode, Strategy, StrategyFactory,
    TournamentConfig,
};
use multigame_core::{DoubleGame, ExampleVariant, Rational, SocialParams, TypeGrid};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn labels(dg: &DoubleGame, nes: &[PureProfile]) -> Vec<String> {
    let mut out: Vec<String> = nes
        .iter()
        .map(|p| {
            p.0.iter()
                .enumerate()
                .map(|(player, &a)| dg.action_labels(player)[a].clone())
                .collect::<Vec<_>>()
                .join("")
        })
        .collect();
    out.sort();
    out
}

fn cell_set(names: &str) -> Vec<String> {
    let mut out: Vec<String> = names.split_whitespace().map(str::to_string).collect();
    out.sort();
    out
}

/// Compares a full type-grid equilibrium table, rows given with gamma
/// ascending, against the engine.
fn assert_table(dg: &DoubleGame, grid: &TypeGrid, expected: &[&[&str]]) {
    assert_eq!(expected.len(), grid.gamma().len());
    for (n, row) in expected.iter().enumerate() {
        assert_eq!(row.len(), grid.lambda().len());
        for (m, cell) in row.iter().enumerate() {
            let nes = dg.local_ne(&grid.lambda()[m], &grid.gamma()[n]).unwrap();
            assert_eq!(
                labels(dg, &nes),
                cell_set(cell),
                "cell at lambda index {m}, gamma index {n}"
            );
        }
    }
}

#[test]
fn criterion_01_pd_and_sg_equilibria() {
    let pd = prisoners_dilemma(
        &Rational::from_int(5),
        &Rational::from_int(3),
        &Rational::from_int(1),
        &Rational::from_int(0),
    );
    let sg = social_game(&rat(5, 2), &rat(5, 2), &Rational::zero(), &Rational::zero());
    let start = Instant::now();
    let pd_ne = pd.pure_nash();
    let sg_ne = sg.pure_nash();
    let elapsed = start.elapsed();
    assert_eq!(pd_ne, vec![PureProfile(vec![1, 1])]); // (D,D)
    assert_eq!(sg_ne, vec![PureProfile(vec![0, 0])]); // (C,C)
    assert!(elapsed.as_micros() < 1000, "took {elapsed:?}");
    println!("ACCEPTANCE 1 PASS: PD -> (D,D), SG -> (C,C) in {elapsed:?}");
}

#[test]
fn criterion_02_crossing_points() {
    let cp = SocialParams::standard().crossing_points();
    assert_eq!((&cp.a1, &cp.b1, &cp.c1), (&rat(2, 7), &rat(4, 9), &rat(2, 3)));
    assert_eq!((&cp.a2, &cp.b2, &cp.c2), (&rat(2, 7), &rat(4, 9), &rat(2, 3)));
    assert_eq!(cp.a1.to_decimal(2), "0.29");
    assert_eq!(cp.b1.to_decimal(2), "0.44");
    println!("ACCEPTANCE 2 PASS: a=2/7 (0.29), b=4/9 (0.44), c=2/3");
}

/// The 25-cell region table of the a<b case (rows gamma ascending, from
/// "0<=gamma<a2" up to "b2<gamma<=1").
const TABLE_A_LT_B: [[&str; 5]; 5] = [
    ["DD", "DD CD", "CD", "CD", "CD"],
    ["DD DC", "DD DC CD", "CD DC", "CD DC", "CD"],
    ["DC", "CD DC", "CD DC", "CD DC", "CD"],
    ["DC", "CD DC", "CD DC", "CC CD DC", "CC CD"],
    ["DC", "DC", "DC", "CC DC", "CC"],
];

/// The b<a case. Four printed cells of the published table contradict its
/// own boundary-union rule; the union-consistent sets are used here (they
/// are forced by weak best responses: a tied alternative stays a best
/// response on the boundary).
const TABLE_B_LT_A: [[&str; 5]; 5] = [
    ["DD", "DD", "DD", "CD DD", "CD"],
    ["DD", "DD CC", "DD CC", "CD DD CC", "CD CC"],
    ["DD", "DD CC", "DD CC", "DD CC", "CC"],
    ["DC DD", "DC DD CC", "DD CC", "DD CC", "CC"],
    ["DC", "DC CC", "CC", "CC", "CC"],
];

#[test]
fn criterion_03_region_tables() {
    let params = SocialParams::standard();
    let dg = params.build_dg();
    let diagram = dg.region_diagram();
    assert_eq!(diagram.lambda_cells.len(), 5);
    assert_eq!(diagram.gamma_cells.len(), 5);
    for (gi, row) in TABLE_A_LT_B.iter().enumerate() {
        for (li, cell) in row.iter().enumerate() {
            assert_eq!(
                labels(&dg, diagram.cell(li, gi)),
                cell_set(cell),
                "a<b cell ({li},{gi})"
            );
        }
    }

    let reversed = SocialParams::new(
        Rational::from_int(5),
        Rational::from_int(4),
        Rational::from_int(2),
        Rational::from_int(0),
        rat(7, 2),
        rat(7, 2),
        Rational::zero(),
        Rational::zero(),
    )
    .unwrap();
    let cp = reversed.crossing_points();
    assert!(cp.b1 < cp.a1, "derived instance must be the b<a case");
    let dg_rev = reversed.build_dg();
    let diagram_rev = dg_rev.region_diagram();
    assert_eq!(diagram_rev.lambda_cells.len(), 5);
    for (gi, row) in TABLE_B_LT_A.iter().enumerate() {
        for (li, cell) in row.iter().enumerate() {
            assert_eq!(
                labels(&dg_rev, diagram_rev.cell(li, gi)),
                cell_set(cell),
                "b<a cell ({li},{gi})"
            );
        }
    }

    // boundary cells equal the union of the adjacent generic cells
    for (dg, diagram) in [(&dg, &diagram), (&dg_rev, &diagram_rev)] {
        let neighbours = |cells: &[AxisCell], i: usize| -> Vec<usize> {
            match cells[i] {
                AxisCell::Span { .. } => vec![i],
                AxisCell::Point { .. } => vec![i - 1, i + 1],
            }
        };
        for gi in 0..diagram.gamma_cells.len() {
            for li in 0..diagram.lambda_cells.len() {
                let g_spans = neighbours(&diagram.gamma_cells, gi);
                let l_spans = neighbours(&diagram.lambda_cells, li);
                if (g_spans.len(), l_spans.len()) == (1, 1) {
                    continue;
                }
                let mut union = Vec::new();
                for &g in &g_spans {
                    for &l in &l_spans {
                        for ne in diagram.cell(l, g) {
                            if !union.contains(ne) {
                                union.push(ne.clone());
                            }
                        }
                    }
                }
                union.sort();
                assert_eq!(diagram.cell(li, gi).to_vec(), union, "union at ({li},{gi})");
            }
        }
        let _ = dg;
    }
    println!("ACCEPTANCE 3 PASS: both 25-cell region tables reproduced; boundaries are unions");
}

/// The 4-type example table (rows gamma ascending).
const TABLE_FOUR_TYPES: [[&str; 4]; 4] = [
    ["DD", "DD CD", "CD", "CD"],
    ["DD DC", "DD DC CD", "CD DC", "CD"],
    ["DC", "CD DC", "CD DC CC", "CC CD"],
    ["DC", "DC", "CC DC", "CC"],
];

/// The selected equilibria: row n, column m holds (s_m, u_n) of the
/// certificate.
const TABLE_SELECTED: [[&str; 4]; 4] = [
    ["DD", "DD", "CD", "CD"],
    ["DD", "DD", "CD", "CD"],
    ["DC", "DC", "CC", "CC"],
    ["DC", "DC", "CC", "CC"],
];

fn random_prior(rng: &mut ChaCha12Rng, k: usize, l: usize) -> TypePrior {
    let mut weights = vec![vec![0i64; l]; k];
    let mut total = 0i64;
    for row in &mut weights {
        for w in row.iter_mut() {
            *w = (rng.next_u32() % 10) as i64;
            total += *w;
        }
    }
    if total == 0 {
        weights[0][0] = 1;
        total = 1;
    }
    TypePrior::joint(
        weights
            .iter()
            .map(|row| row.iter().map(|&w| Rational::new(w, total)).collect())
            .collect(),
    )
    .expect("normalized by construction")
}

#[test]
fn criterion_04_example_one() {
    let params = SocialParams::standard();
    let dg = params.build_dg();
    let grid = params.example_grid(ExampleVariant::I).unwrap();
    let rows: Vec<&[&str]> = TABLE_FOUR_TYPES.iter().map(|r| r.as_slice()).collect();
    assert_table(&dg, &grid, &rows);

    let outcome = completely_pure_regular(&dg, &grid);
    let cert = outcome.certificate.clone().expect("completely pure regular");
    assert_eq!(cert.label(&dg), "(DDCC,DDCC)");

    // the certificate picks one equilibrium from every multi-equilibrium
    // cell, matching the selected table
    for (n, row) in TABLE_SELECTED.iter().enumerate() {
        for (m, want) in row.iter().enumerate() {
            let chosen = format!(
                "{}{}",
                dg.action_labels(0)[cert.p1_actions[m]],
                dg.action_labels(1)[cert.p2_actions[n]]
            );
            assert_eq!(&chosen, want, "selected cell ({m},{n})");
            let nes = dg.local_ne(&grid.lambda()[m], &grid.gamma()[n]).unwrap();
            assert!(labels(&dg, &nes).contains(&chosen), "chosen NE must be in the cell");
        }
    }

    let mut rng = ChaCha12Rng::seed_from_u64(404);
    for trial in 0..100 {
        let prior = random_prior(&mut rng, 4, 4);
        let verdict = verify_bayes_ne(&dg, &grid, &cert, &prior).unwrap();
        assert!(verdict.is_ne, "prior #{trial} must accept the certificate");
    }
    println!("ACCEPTANCE 4 PASS: (DDCC,DDCC) certified, table reproduced, 100 priors accepted");
}

/// The 5-type example table (rows gamma ascending).
const TABLE_FIVE_TYPES: [[&str; 5]; 5] = [
    ["DD", "DD CD", "CD", "CD", "CD"],
    ["DD DC", "DD DC CD", "CD DC", "CD DC", "CD"],
    ["DC", "CD DC", "CD DC", "CD DC", "CD"],
    ["DC", "CD DC", "CD DC", "CD DC CC", "CC CD"],
    ["DC", "DC", "DC", "CC DC", "CC"],
];

#[test]
fn criterion_05_example_two() {
    let params = SocialParams::standard();
    let dg = params.build_dg();
    let grid = params.example_grid(ExampleVariant::II).unwrap();
    let rows: Vec<&[&str]> = TABLE_FIVE_TYPES.iter().map(|r| r.as_slice()).collect();
    assert_table(&dg, &grid, &rows);
    let outcome = completely_pure_regular(&dg, &grid);
    assert!(outcome.certificate.is_none());

    // no per-type assignment over the quadruple's actions survives every
    // point-mass prior: each candidate is broken by some single type pair
    let (k, l) = (grid.k(), grid.l());
    let mut broken = 0usize;
    for p1_bits in 0..(1u32 << k) {
        for p2_bits in 0..(1u32 << l) {
            let profile = multigame_core::regularity::BayesianPureProfile {
                p1_actions: (0..k).map(|m| ((p1_bits >> m) & 1) as usize).collect(),
                p2_actions: (0..l).map(|n| ((p2_bits >> n) & 1) as usize).collect(),
            };
            let mut breaking_prior = None;
            'search: for m in 0..k {
                for n in 0..l {
                    let prior = TypePrior::point_mass(k, l, m, n);
                    if !verify_bayes_ne(&dg, &grid, &profile, &prior).unwrap().is_ne {
                        breaking_prior = Some((m, n));
                        break 'search;
                    }
                }
            }
            assert!(
                breaking_prior.is_some(),
                "profile {:?}/{:?} should fail under some point mass",
                profile.p1_actions,
                profile.p2_actions
            );
            broken += 1;
        }
    }
    assert_eq!(broken, 1 << (k + l));
    println!("ACCEPTANCE 5 PASS: not completely pure regular; every candidate is refuted by a point-mass prior");
}

#[test]
fn criterion_06_linear_time_contract() {
    let dg = SocialParams::standard().build_dg();
    let grid_of = |k: usize| {
        let values: Vec<Rational> =
            (0..k).map(|i| Rational::new(i as i64, (k - 1) as i64)).collect();
        TypeGrid::new(values.clone(), values).unwrap()
    };
    let count = |k: usize| -> (u64, std::time::Duration) {
        let grid = grid_of(k);
        let start = Instant::now();
        let outcome = completely_pure_regular(&dg, &grid);
        (outcome.stats.ne_condition_evals, start.elapsed())
    };
    let (n8, _) = count(8);
    let (n64, _) = count(64);
    let (n512, elapsed) = count(512);
    let c1 = (n64 - n8) as f64 / (128.0 - 16.0);
    let c2 = (n512 - n64) as f64 / (1024.0 - 128.0);
    assert!((c1 - c2).abs() / c2 < 0.2, "slopes {c1} vs {c2}");
    let intercept = n8 as f64 - c1 * 16.0;
    for (k, n) in [(8u64, n8), (64, n64), (512, n512)] {
        assert!(
            n as f64 <= c1.max(c2) * (2 * k) as f64 + intercept.abs() + 1.0,
            "count {n} exceeds the affine bound at k={k}"
        );
    }
    assert!(elapsed.as_millis() < 1000, "512-type run took {elapsed:?}");
    println!(
        "ACCEPTANCE 6 PASS: evals {n8}/{n64}/{n512} fit {c2:.1}*(k+l)+{intercept:.0}; 512 types in {elapsed:?}"
    );
}

#[test]
fn criterion_07_mixed_interpolation() {
    // player 1 earns 0 on C and 1 on D in g1, the reverse in g2, so at
    // lambda = 1/2 it is indifferent everywhere and sigma = (1/2, 1/2)
    // supports a coherent pair; player 2 strictly prefers C against sigma at
    // both extremes (A = B = 2), so p0 = p1 = 1.
    let g1 = NormalFormGame::from_rows(
        &["C", "D"],
        &["C", "D"],
        &[
            vec![(rat(0, 1), rat(3, 1)), (rat(0, 1), rat(1, 1))],
            vec![(rat(1, 1), rat(2, 1)), (rat(1, 1), rat(0, 1))],
        ],
    )
    .unwrap();
    let g2 = NormalFormGame::from_rows(
        &["C", "D"],
        &["C", "D"],
        &[
            vec![(rat(1, 1), rat(4, 1)), (rat(1, 1), rat(1, 1))],
            vec![(rat(0, 1), rat(1, 1)), (rat(0, 1), rat(0, 1))],
        ],
    )
    .unwrap();
    let dg = DoubleGame::new(g1, g2).unwrap();
    let lambda = rat(1, 2);
    let sigma = vec![rat(1, 2), rat(1, 2)];
    let (p, p0, p1) = (rat(1, 2), Rational::one(), Rational::one());

    let entries = |gamma: &Rational| -> [Rational; 4] {
        let game = dg.instantiate(&lambda, gamma).unwrap();
        let mut out = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                out.push(game.payoff(&PureProfile(vec![a, b]), 1).unwrap().clone());
            }
        }
        out.try_into().unwrap()
    };
    let e0 = entries(&Rational::zero());
    let e1 = entries(&Rational::one());

    // the coherent pair really is one: (sigma, C) is an equilibrium at both
    // opponent extremes
    for gamma in [Rational::zero(), Rational::one()] {
        let oracle = mixed_nash_2x2(&dg.instantiate(&lambda, &gamma).unwrap()).unwrap();
        assert!(oracle.contains(&sigma, &vec![Rational::one(), Rational::zero()]));
    }

    for gamma in [rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)] {
        let p_gamma = mixed_interpolate(&p, &p0, &p1, &gamma, &e0, &e1).unwrap();
        let opp_mix = vec![p_gamma.clone(), Rational::one() - &p_gamma];
        let oracle = mixed_nash_2x2(&dg.instantiate(&lambda, &gamma).unwrap()).unwrap();
        assert!(
            oracle.contains(&sigma, &opp_mix),
            "interpolated profile must be an oracle equilibrium at gamma={gamma}"
        );
        if gamma.is_zero() {
            assert_eq!(p_gamma, p0);
        } else if gamma == Rational::one() {
            assert_eq!(p_gamma, p1);
        }
    }
    println!("ACCEPTANCE 7 PASS: interpolation matches the support-enumeration oracle at 5 weights");
}

#[test]
fn criterion_08_tournament_benchmark_scores() {
    let params = SocialParams::standard();
    let dg = params.build_dg();
    let grid = params.example_grid(ExampleVariant::II).unwrap();
    let config = TournamentConfig::default();

    struct FixedFactory(&'static str, strategies::InitialIndex, &'static str);
    impl StrategyFactory for FixedFactory {
        fn name(&self) -> &str {
            self.0
        }
        fn create(&self, _rng: ChaCha12Rng) -> Box<dyn Strategy> {
            Box::new(strategies::Fixed::new(self.0, self.1, self.2))
        }
    }

    let alld = builtin_factory("ALLD").unwrap();
    let record = play_match(alld.as_ref(), alld.as_ref(), &dg, &grid, &config, 0).unwrap();
    assert_eq!((record.total1, record.total2), (Rational::from_int(200), Rational::from_int(200)));

    let coop0 = FixedFactory("COOP0", strategies::InitialIndex::Bottom, "C");
    let record = play_match(&coop0, &coop0, &dg, &grid, &config, 0).unwrap();
    assert_eq!((record.total1, record.total2), (Rational::from_int(600), Rational::from_int(600)));

    let seg = builtin_factory("SEG").unwrap();
    let allc = builtin_factory("ALLC").unwrap();
    let record = play_match(seg.as_ref(), allc.as_ref(), &dg, &grid, &config, 0).unwrap();
    assert_eq!((record.total1, record.total2), (Rational::from_int(1000), Rational::from_int(500)));

    let defect1 = FixedFactory("DEFECT1", strategies::InitialIndex::Top, "D");
    for other in ["SEG", "ALLC", "ALLD", "TFT"] {
        let record = play_match(
            &defect1,
            builtin_factory(other).unwrap().as_ref(),
            &dg,
            &grid,
            &config,
            0,
        )
        .unwrap();
        assert_eq!(record.total1, Rational::zero(), "vs {other}");
    }
    println!("ACCEPTANCE 8 PASS: 200/200, 600/600, 1000/500 and the 0 benchmark all exact");
}

#[test]
fn criterion_09_seg_properties() {
    let params = SocialParams::standard();
    let dg = params.build_dg();
    let grid = params.example_grid(ExampleVariant::II).unwrap();
    let config = TournamentConfig::default();
    let ladder = grid.ladder(0);

    let moves = |a: &str, b: &str| {
        let record = play_match(
            builtin_factory(a).unwrap().as_ref(),
            builtin_factory(b).unwrap().as_ref(),
            &dg,
            &grid,
            &config,
            0,
        )
        .unwrap();
        record
    };

    let vs_alld = moves("SEG", "ALLD");
    assert_eq!(vs_alld.rounds[0].action1, "D", "round-1 action is D");
    for r in &vs_alld.rounds[6..] {
        assert_eq!(r.action1, "C", "round {}", r.round);
    }

    let vs_tft = moves("SEG", "TFT");
    for r in &vs_tft.rounds[5..] {
        assert_eq!((r.action1.as_str(), r.action2.as_str()), ("C", "C"), "round {}", r.round);
    }

    let vs_allc = moves("SEG", "ALLC");
    assert_eq!(vs_allc.rounds.len(), 200);
    assert!(vs_allc.rounds.iter().all(|r| r.action1 == "D"));

    for record in [&vs_alld, &vs_tft, &vs_allc] {
        let indices: Vec<usize> = record
            .rounds
            .iter()
            .map(|r| ladder.iter().position(|v| v == &r.coeff1).unwrap())
            .collect();
        assert!(indices.windows(2).all(|w| w[0].abs_diff(w[1]) <= 1));
    }

    let factories: Vec<Box<dyn StrategyFactory>> =
        ["SEG", "ALLC", "ALLD", "TFT"].iter().map(|n| builtin_factory(n).unwrap()).collect();
    let result = run_tournament(&factories, &dg, &grid, &config).unwrap();
    assert_eq!(result.rankings[0].strategy, "SEG");
    assert!(result.rankings[0].average > result.rankings[1].average);
    println!("ACCEPTANCE 9 PASS: SEG steady states hold and SEG ranks first on average");
}

fn random_rational(rng: &mut ChaCha12Rng) -> Rational {
    let numer = (rng.next_u32() % 25) as i64 - 12;
    let denom = (rng.next_u32() % 4) as i64 + 1;
    Rational::new(numer, denom)
}

fn random_game(rng: &mut ChaCha12Rng, sizes: [usize; 2]) -> NormalFormGame {
    let names: Vec<Vec<String>> = sizes
        .iter()
        .map(|&n| (0..n).map(|i| ["C", "D", "E"][i].to_string()).collect())
        .collect();
    let mut table = std::collections::BTreeMap::new();
    for a in 0..sizes[0] {
        for b in 0..sizes[1] {
            table.insert(vec![a, b], vec![random_rational(rng), random_rational(rng)]);
        }
    }
    NormalFormGame::new(names, |p| table[&p.to_vec()].clone()).unwrap()
}

fn random_grid(rng: &mut ChaCha12Rng) -> TypeGrid {
    let mut axis = |max_types: usize| {
        let interior = (rng.next_u32() as usize) % (max_types - 1);
        let mut values: Vec<i64> = Vec::new();
        while values.len() < interior {
            let candidate = (rng.next_u32() % 11) as i64 + 1;
            if !values.contains(&candidate) {
                values.push(candidate);
            }
        }
        values.sort_unstable();
        let mut ladder = vec![Rational::zero()];
        ladder.extend(values.into_iter().map(|n| Rational::new(n, 12)));
        ladder.push(Rational::one());
        ladder
    };
    TypeGrid::new(axis(5), axis(5)).unwrap()
}

#[test]
fn criterion_10_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha12Rng::seed_from_u64(2718);
    let mut certificates = 0usize;
    for case in 0..200 {
        let size = if case % 2 == 0 { 2 } else { 3 };
        let dg = DoubleGame::new(
            random_game(&mut rng, [size, size]),
            random_game(&mut rng, [size, size]),
        )
        .unwrap();
        let grid = random_grid(&mut rng);
        for l in grid.lambda() {
            for g in grid.gamma() {
                let fast = dg.local_ne(l, g).unwrap();
                let oracle = dg.instantiate(l, g).unwrap().pure_nash();
                assert_eq!(fast, oracle, "case {case} at ({l},{g})");
            }
        }
        let outcome = completely_pure_regular(&dg, &grid);
        if let Some(cert) = &outcome.certificate {
            assert!(certificate_is_sound(&dg, &grid, cert).unwrap(), "case {case}");
            certificates += 1;
        }
        for cert in outcome.all_certificates() {
            assert!(certificate_is_sound(&dg, &grid, &cert).unwrap(), "case {case}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "suite took {elapsed:?}");
    println!(
        "ACCEPTANCE 10 PASS: 200 random double games agree with the oracle ({certificates} certified) in {elapsed:?}"
    );
}

#[test]
fn criterion_11_tournament_determinism() {
    let params = SocialParams::standard();
    let dg = params.build_dg();
    let grid = params.example_grid(ExampleVariant::II).unwrap();
    let config = TournamentConfig { rounds: 200, mode: InfoMode::Complete, seed: 42 };
    let run = || {
        let factories: Vec<Box<dyn StrategyFactory>> = ["SEG", "ALLC", "ALLD", "TFT"]
            .iter()
            .map(|n| builtin_factory(n).unwrap())
            .collect();
        let result = run_tournament(&factories, &dg, &grid, &config).unwrap();
        serde_json::to_string_pretty(&result).unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first.as_bytes(), second.as_bytes());
    println!("ACCEPTANCE 11 PASS: seed-42 tournaments serialize byte-identically");
}
