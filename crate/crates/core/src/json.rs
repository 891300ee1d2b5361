//! File formats: games, double games, type grids, priors.
//!
//! A game file looks like
//!
//! ```json
//! {
//!   "players": 2,
//!   "actions": [["C", "D"], ["C", "D"]],
//!   "payoffs": { "C,C": ["3", "3"], "C,D": ["0", "5"], ... }
//! }
//! ```
//!
//! Profile keys join action labels with commas in player order. Payoff
//! entries may be integers, decimal strings or "p/q" strings; all convert
//! exactly. Serialization is canonical (profile keys in index order,
//! rationals in lowest terms), so a canonical file round-trips byte for
//! byte.

use serde_json::{json, Map, Value};

use crate::double::{DoubleGame, TypeGrid};
use crate::error::{Error, Result};
use crate::game::{NormalFormGame, PureProfile};
use crate::rational::Rational;
use crate::regularity::{BayesianPureProfile, TypePrior};

fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_int(i))
            } else {
                Err(Error::Parse(format!(
                    "non-integer numeric payoff {n}; quote it (\"{n}\") so it converts exactly"
                )))
            }
        }
        other => Err(Error::Parse(format!("expected a number or string, got {other}"))),
    }
}

fn rationals_from_value(v: &Value) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array, got {v}")))?
        .iter()
        .map(rational_from_value)
        .collect()
}

fn rationals_to_value(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|r| Value::String(r.to_string())).collect())
}

pub fn game_to_value(game: &NormalFormGame) -> Value {
    let mut payoffs = Map::new();
    for profile in game.profiles() {
        let key: Vec<String> = profile
            .0
            .iter()
            .enumerate()
            .map(|(p, &a)| game.action_labels(p)[a].clone())
            .collect();
        payoffs.insert(
            key.join(","),
            rationals_to_value(game.payoff_vector(&profile).expect("iterated profile")),
        );
    }
    json!({
        "players": game.num_players(),
        "actions": game.all_action_labels(),
        "payoffs": Value::Object(payoffs),
    })
}

pub fn game_from_value(v: &Value) -> Result<NormalFormGame> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("game file must be an object".into()))?;
    let players = obj
        .get("players")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing integer field \"players\"".into()))? as usize;
    let actions: Vec<Vec<String>> = obj
        .get("actions")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing array field \"actions\"".into()))?
        .iter()
        .map(|set| {
            set.as_array()
                .ok_or_else(|| Error::Parse("each action set must be an array".into()))?
                .iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("action labels must be strings".into()))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if actions.len() != players {
        return Err(Error::Parse(format!(
            "\"players\" says {players} but \"actions\" lists {} strategy sets",
            actions.len()
        )));
    }
    let payoffs = obj
        .get("payoffs")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("missing object field \"payoffs\"".into()))?;

    let mut table: std::collections::BTreeMap<Vec<usize>, Vec<Rational>> =
        std::collections::BTreeMap::new();
    for (key, value) in payoffs {
        let labels: Vec<&str> = key.split(',').collect();
        if labels.len() != players {
            return Err(Error::Parse(format!(
                "payoff key {key:?} names {} actions for {players} players",
                labels.len()
            )));
        }
        let profile: Vec<usize> = labels
            .iter()
            .enumerate()
            .map(|(p, label)| {
                actions[p].iter().position(|l| l == label).ok_or_else(|| {
                    Error::Parse(format!("payoff key {key:?}: player {p} has no action {label:?}"))
                })
            })
            .collect::<Result<_>>()?;
        let row = rationals_from_value(value)?;
        if row.len() != players {
            return Err(Error::Parse(format!(
                "payoff entry {key:?} has {} values for {players} players",
                row.len()
            )));
        }
        if table.insert(profile, row).is_some() {
            return Err(Error::Parse(format!("duplicate payoff key {key:?}")));
        }
    }
    let expected: usize = actions.iter().map(Vec::len).product();
    if table.len() != expected {
        return Err(Error::Parse(format!(
            "payoffs list {} profiles, the strategy sets require {expected}",
            table.len()
        )));
    }
    NormalFormGame::new(actions, |profile| table[&profile.to_vec()].clone())
}

pub fn dg_to_value(dg: &DoubleGame) -> Value {
    json!({ "g1": game_to_value(dg.g1()), "g2": game_to_value(dg.g2()) })
}

pub fn dg_from_value(v: &Value) -> Result<DoubleGame> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("double-game file must be an object".into()))?;
    let g1 = game_from_value(
        obj.get("g1").ok_or_else(|| Error::Parse("missing field \"g1\"".into()))?,
    )?;
    let g2 = game_from_value(
        obj.get("g2").ok_or_else(|| Error::Parse("missing field \"g2\"".into()))?,
    )?;
    DoubleGame::new(g1, g2)
}

pub fn grid_to_value(grid: &TypeGrid) -> Value {
    json!({
        "lambda": rationals_to_value(grid.lambda()),
        "gamma": rationals_to_value(grid.gamma()),
    })
}

pub fn grid_from_value(v: &Value) -> Result<TypeGrid> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("grid file must be an object".into()))?;
    let lambda = rationals_from_value(
        obj.get("lambda").ok_or_else(|| Error::Parse("missing field \"lambda\"".into()))?,
    )?;
    let gamma = rationals_from_value(
        obj.get("gamma").ok_or_else(|| Error::Parse("missing field \"gamma\"".into()))?,
    )?;
    TypeGrid::new(lambda, gamma)
}

pub fn prior_to_value(prior: &TypePrior) -> Value {
    json!({
        "joint": prior.matrix().iter().map(|row| rationals_to_value(row)).collect::<Vec<_>>(),
    })
}

/// Accepts `{"joint": [[...], ...]}` or
/// `{"independent": {"p1": [...], "p2": [...]}}`.
pub fn prior_from_value(v: &Value) -> Result<TypePrior> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("prior file must be an object".into()))?;
    if let Some(joint) = obj.get("joint") {
        let matrix = joint
            .as_array()
            .ok_or_else(|| Error::Parse("\"joint\" must be an array of rows".into()))?
            .iter()
            .map(rationals_from_value)
            .collect::<Result<Vec<_>>>()?;
        return TypePrior::joint(matrix);
    }
    if let Some(indep) = obj.get("independent").and_then(Value::as_object) {
        let p1 = rationals_from_value(
            indep.get("p1").ok_or_else(|| Error::Parse("missing field \"p1\"".into()))?,
        )?;
        let p2 = rationals_from_value(
            indep.get("p2").ok_or_else(|| Error::Parse("missing field \"p2\"".into()))?,
        )?;
        return TypePrior::independent(&p1, &p2);
    }
    Err(Error::Parse("prior file needs a \"joint\" or \"independent\" field".into()))
}

/// Pure-equilibrium list as label arrays, e.g. `{"equilibria": [["D","D"]]}`.
pub fn pure_nash_to_value(game: &NormalFormGame, equilibria: &[PureProfile]) -> Value {
    json!({
        "equilibria": equilibria
            .iter()
            .map(|p| {
                p.0.iter()
                    .enumerate()
                    .map(|(player, &a)| game.action_labels(player)[a].clone())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    })
}

/// Parses a per-type action assignment. Two forms are accepted:
/// `"DDCC,DDCC"` (single-character labels concatenated) and
/// `"D,D,C,C;D,D,C,C"` (labels comma-separated, sides split by `;`).
pub fn parse_bayes_profile(dg: &DoubleGame, s: &str) -> Result<BayesianPureProfile> {
    let (side1, side2) = if let Some((a, b)) = s.split_once(';') {
        (a.to_string(), b.to_string())
    } else {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("profile {s:?} needs two comma-separated sides")))?;
        (a.to_string(), b.to_string())
    };
    let parse_side = |player: usize, side: &str| -> Result<Vec<usize>> {
        let labels: Vec<String> = if side.contains(',') {
            side.split(',').map(|l| l.trim().to_string()).collect()
        } else {
            side.trim().chars().map(|c| c.to_string()).collect()
        };
        labels
            .iter()
            .map(|label| {
                dg.action_index(player, label).ok_or_else(|| {
                    Error::Parse(format!("player {} has no action {label:?}", player + 1))
                })
            })
            .collect()
    };
    Ok(BayesianPureProfile {
        p1_actions: parse_side(0, &side1)?,
        p2_actions: parse_side(1, &side2)?,
    })
}

pub fn to_pretty_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

pub fn from_str(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::prisoners_dilemma;
    use crate::rational::rat;
    use crate::social::SocialParams;

    fn pd() -> NormalFormGame {
        prisoners_dilemma(
            &Rational::from_int(5),
            &Rational::from_int(3),
            &Rational::from_int(1),
            &Rational::from_int(0),
        )
    }

    #[test]
    fn canonical_game_round_trip_is_byte_exact() {
        let text = to_pretty_string(&game_to_value(&pd()));
        let parsed = game_from_value(&from_str(&text).unwrap()).unwrap();
        assert_eq!(parsed, pd());
        assert_eq!(to_pretty_string(&game_to_value(&parsed)), text);
    }

    #[test]
    fn accepts_integers_fractions_and_decimal_strings() {
        let text = r#"{
            "players": 2,
            "actions": [["C", "D"], ["C", "D"]],
            "payoffs": {
                "C,C": [3, "3"],
                "C,D": ["0.5", "5"],
                "D,C": ["5", "1/2"],
                "D,D": [1, 1]
            }
        }"#;
        let game = game_from_value(&from_str(text).unwrap()).unwrap();
        assert_eq!(
            game.payoff(&PureProfile(vec![0, 1]), 0).unwrap(),
            &rat(1, 2)
        );
        assert_eq!(
            game.payoff(&PureProfile(vec![1, 0]), 1).unwrap(),
            &rat(1, 2)
        );
    }

    #[test]
    fn rejects_missing_and_duplicate_profiles() {
        let missing = r#"{
            "players": 2,
            "actions": [["C", "D"], ["C", "D"]],
            "payoffs": { "C,C": [3, 3] }
        }"#;
        assert!(game_from_value(&from_str(missing).unwrap()).is_err());
        let bad_label = r#"{
            "players": 2,
            "actions": [["C", "D"], ["C", "D"]],
            "payoffs": { "C,X": [3, 3], "C,D": [0,5], "D,C": [5,0], "D,D": [1,1] }
        }"#;
        assert!(game_from_value(&from_str(bad_label).unwrap()).is_err());
        let float = r#"{
            "players": 2,
            "actions": [["C", "D"], ["C", "D"]],
            "payoffs": { "C,C": [2.5, 3], "C,D": [0,5], "D,C": [5,0], "D,D": [1,1] }
        }"#;
        assert!(game_from_value(&from_str(float).unwrap()).is_err());
    }

    #[test]
    fn dg_grid_and_prior_round_trips() {
        let params = SocialParams::standard();
        let dg = params.build_dg();
        let back = dg_from_value(&dg_to_value(&dg)).unwrap();
        assert_eq!(back.g1(), dg.g1());
        assert_eq!(back.g2(), dg.g2());

        let grid = params.example_grid(crate::social::ExampleVariant::II).unwrap();
        assert_eq!(grid_from_value(&grid_to_value(&grid)).unwrap(), grid);

        let prior = TypePrior::uniform(2, 3);
        assert_eq!(prior_from_value(&prior_to_value(&prior)).unwrap(), prior);
        let indep = from_str(r#"{"independent": {"p1": ["1/2", "1/2"], "p2": ["1", "0"]}}"#).unwrap();
        let prior = prior_from_value(&indep).unwrap();
        assert_eq!(prior.matrix()[0][0], rat(1, 2));
    }

    #[test]
    fn bayes_profile_parsing() {
        let dg = SocialParams::standard().build_dg();
        let p = parse_bayes_profile(&dg, "DDCC,DDCC").unwrap();
        assert_eq!(p.p1_actions, vec![1, 1, 0, 0]);
        let p = parse_bayes_profile(&dg, "D,D,C,C;D,D,C,C").unwrap();
        assert_eq!(p.p2_actions, vec![1, 1, 0, 0]);
        assert!(parse_bayes_profile(&dg, "DDXX,DDCC").is_err());
    }
}
