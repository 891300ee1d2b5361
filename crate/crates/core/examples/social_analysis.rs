//! Walks through the social double game: crossing points, the region
//! table over the weight square, the regularity verdicts for the two
//! example type grids, and a small tournament.
//!
//! ```bash
//! cargo run -p multigame-core --example social_analysis
//! ```

use multigame_core::regularity::completely_pure_regular;
use multigame_core::tournament::{builtin_factory, run_tournament, StrategyFactory, TournamentConfig};
use multigame_core::{ExampleVariant, SocialParams};

fn main() {
    let params = SocialParams::standard();
    let dg = params.build_dg();
    let cp = params.crossing_points();
    println!("crossing points: a = {} ({}), b = {} ({}), c = {}", cp.a1, cp.a1.to_decimal(2), cp.b1, cp.b1.to_decimal(2), cp.c1);
    println!("case: {:?}\n", params.classify_case());

    println!("equilibrium regions (rows: gamma descending):");
    let diagram = dg.region_diagram();
    for gi in (0..diagram.gamma_cells.len()).rev() {
        let row: Vec<String> = (0..diagram.lambda_cells.len())
            .map(|li| {
                diagram
                    .cell(li, gi)
                    .iter()
                    .map(|p| dg.profile_label(p))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        println!("  {:12} | {}", diagram.gamma_cells[gi].describe('g'), row.join(" | "));
    }
    println!();

    for (name, variant) in [("four types", ExampleVariant::I), ("five types", ExampleVariant::II)] {
        let grid = params.example_grid(variant).unwrap();
        let outcome = completely_pure_regular(&dg, &grid);
        match &outcome.certificate {
            Some(cert) => println!("{name}: completely pure regular, certificate {}", cert.label(&dg)),
            None => println!("{name}: not completely pure regular"),
        }
    }
    println!();

    let grid = params.example_grid(ExampleVariant::II).unwrap();
    let factories: Vec<Box<dyn StrategyFactory>> = ["SEG", "ALLC", "ALLD", "TFT"]
        .iter()
        .map(|n| builtin_factory(n).unwrap())
        .collect();
    let result = run_tournament(&factories, &dg, &grid, &TournamentConfig::default()).unwrap();
    println!("round robin, 200 rounds:");
    for row in &result.rankings {
        println!(
            "  {}. {:5} total {:10} average {} ({})",
            row.rank,
            row.strategy,
            row.total.to_string(),
            row.average,
            row.average.to_decimal(2),
        );
    }
}
