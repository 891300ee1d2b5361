//! Double games: two basic 2-player games with shared strategy sets,
//! parameterized by each player's investment weight.
//!
//! Player 1 with weight `l` earns `(1-l)*pi11 + l*pi21` and player 2 with
//! weight `g` earns `(1-g)*pi12 + g*pi22`, so each player's payoff is affine
//! in its own weight. Every weak best-response condition therefore cuts a
//! closed interval out of [0, 1], and a profile's equilibrium region is the
//! product of two intervals. The region diagram and the equilibrium lookup
//! both run on that structure and are verified against the exhaustive pure
//! Nash scan.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{NormalFormGame, PureProfile};
use crate::multigame::{MultiGame, WeightVector};
use crate::rational::Rational;

/// Two 2-player basic games forming a uniform multi-game.
#[derive(Clone, Debug)]
pub struct DoubleGame {
    g1: NormalFormGame,
    g2: NormalFormGame,
}

impl DoubleGame {
    pub fn new(g1: NormalFormGame, g2: NormalFormGame) -> Result<Self> {
        if g1.num_players() != 2 || g2.num_players() != 2 {
            return Err(Error::InvalidGame("double games are 2-player".into()));
        }
        for p in 0..2 {
            if g1.action_labels(p) != g2.action_labels(p) {
                return Err(Error::NotUniform(format!(
                    "player {p} has different strategy sets in the two basic games"
                )));
            }
        }
        Ok(DoubleGame { g1, g2 })
    }

    pub fn g1(&self) -> &NormalFormGame {
        &self.g1
    }

    pub fn g2(&self) -> &NormalFormGame {
        &self.g2
    }

    pub fn num_actions(&self, player: usize) -> usize {
        self.g1.num_actions(player)
    }

    pub fn action_labels(&self, player: usize) -> &[String] {
        self.g1.action_labels(player)
    }

    pub fn action_index(&self, player: usize, label: &str) -> Option<usize> {
        self.g1.action_index(player, label)
    }

    /// All pure profiles, in lexicographic order.
    pub fn profiles(&self) -> impl Iterator<Item = PureProfile> + '_ {
        self.g1.profiles()
    }

    pub fn profile_label(&self, profile: &PureProfile) -> String {
        self.g1.profile_label(profile)
    }

    /// Payoff of `player` at a pure profile when its own weight is `w`.
    /// Affine in `w`; the opponent's weight does not enter.
    pub fn weighted_payoff(&self, player: usize, profile: &PureProfile, w: &Rational) -> Rational {
        let base = self.g1.payoff(profile, player).expect("validated profile");
        let alt = self.g2.payoff(profile, player).expect("validated profile");
        (Rational::one() - w) * base + w.clone() * alt
    }

    /// The concrete game at weights `(lambda, gamma)`.
    pub fn instantiate(&self, lambda: &Rational, gamma: &Rational) -> Result<NormalFormGame> {
        check_weight(lambda)?;
        check_weight(gamma)?;
        let mg = MultiGame::new(vec![self.g1.clone(), self.g2.clone()])?;
        let w = WeightVector::new(vec![
            vec![Rational::one() - lambda, lambda.clone()],
            vec![Rational::one() - gamma, gamma.clone()],
        ])?;
        mg.compose(&w)
    }

    /// The exact set of own weights at which `own` is a weak best response
    /// to the opponent playing `opp`, as a closed sub-interval of [0, 1].
    pub fn br_interval(&self, player: usize, own: usize, opp: usize) -> Interval {
        let mut interval = Interval::unit();
        for alt in 0..self.num_actions(player) {
            if alt == own {
                continue;
            }
            let (profile_own, profile_alt) = if player == 0 {
                (PureProfile(vec![own, opp]), PureProfile(vec![alt, opp]))
            } else {
                (PureProfile(vec![opp, own]), PureProfile(vec![opp, alt]))
            };
            // f(w) = payoff(own) - payoff(alt) = c0 + (c1 - c0) w >= 0
            let c0 = self.g1.payoff(&profile_own, player).unwrap()
                - self.g1.payoff(&profile_alt, player).unwrap();
            let c1 = self.g2.payoff(&profile_own, player).unwrap()
                - self.g2.payoff(&profile_alt, player).unwrap();
            interval = interval.intersect(&Interval::from_affine_nonneg(&c0, &c1));
            if interval.is_empty() {
                break;
            }
        }
        interval
    }

    /// The rectangle of weight pairs at which `profile` is a pure local
    /// equilibrium: player 1's interval times player 2's interval.
    pub fn ne_region(&self, profile: &PureProfile) -> (Interval, Interval) {
        (
            self.br_interval(0, profile.0[0], profile.0[1]),
            self.br_interval(1, profile.0[1], profile.0[0]),
        )
    }

    /// Pure Nash equilibria of the instantiated game, computed from the
    /// region rectangles. Agrees with `instantiate(..).pure_nash()`.
    pub fn local_ne(&self, lambda: &Rational, gamma: &Rational) -> Result<Vec<PureProfile>> {
        check_weight(lambda)?;
        check_weight(gamma)?;
        Ok(self
            .profiles()
            .filter(|p| {
                let (i1, i2) = self.ne_region(p);
                i1.contains(lambda) && i2.contains(gamma)
            })
            .collect())
    }

    /// Partitions the unit square into cells of constant equilibrium set.
    pub fn region_diagram(&self) -> RegionDiagram {
        let lambda_cells = axis_cells(self.axis_breakpoints(0));
        let gamma_cells = axis_cells(self.axis_breakpoints(1));
        let mut rows = Vec::with_capacity(gamma_cells.len());
        for gc in &gamma_cells {
            let mut row = Vec::with_capacity(lambda_cells.len());
            for lc in &lambda_cells {
                row.push(
                    self.local_ne(&lc.sample(), &gc.sample())
                        .expect("samples lie in [0,1]"),
                );
            }
            rows.push(row);
        }
        RegionDiagram { lambda_cells, gamma_cells, rows }
    }

    /// Distinct weights at which some best-response interval starts or ends.
    /// 0 and 1 only count when an interval degenerates to that single point;
    /// otherwise they are just the domain bounds.
    fn axis_breakpoints(&self, player: usize) -> Vec<Rational> {
        let mut points = Vec::new();
        for own in 0..self.num_actions(player) {
            for opp in 0..self.num_actions(1 - player) {
                if let Some((lo, hi)) = self.br_interval(player, own, opp).bounds() {
                    let degenerate = lo == hi;
                    for p in [lo, hi] {
                        let at_bound = p.is_zero() || p == Rational::one();
                        if (!at_bound || degenerate) && !points.contains(&p) {
                            points.push(p);
                        }
                    }
                }
            }
        }
        points.sort();
        points
    }
}

fn check_weight(w: &Rational) -> Result<()> {
    if !w.in_unit_interval() {
        return Err(Error::InvalidWeights(format!("weight {w} outside [0, 1]")));
    }
    Ok(())
}

/// Finite, strictly increasing weight values per player. The extreme types 0
/// and 1 are always present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeGrid {
    lambda: Vec<Rational>,
    gamma: Vec<Rational>,
}

impl TypeGrid {
    pub fn new(lambda: Vec<Rational>, gamma: Vec<Rational>) -> Result<Self> {
        for (name, values) in [("lambda", &lambda), ("gamma", &gamma)] {
            if values.len() < 2 {
                return Err(Error::InvalidGrid(format!("{name} needs at least the two extreme types")));
            }
            if values.first() != Some(&Rational::zero()) || values.last() != Some(&Rational::one()) {
                return Err(Error::InvalidGrid(format!(
                    "{name} must start at 0 and end at 1 (the extreme types)"
                )));
            }
            if values.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidGrid(format!("{name} values must be strictly increasing")));
            }
        }
        Ok(TypeGrid { lambda, gamma })
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    pub fn gamma(&self) -> &[Rational] {
        &self.gamma
    }

    /// Number of player-1 types (`k`).
    pub fn k(&self) -> usize {
        self.lambda.len()
    }

    /// Number of player-2 types (`l`).
    pub fn l(&self) -> usize {
        self.gamma.len()
    }

    /// The ladder of the given player (0 or 1).
    pub fn ladder(&self, player: usize) -> &[Rational] {
        if player == 0 {
            &self.lambda
        } else {
            &self.gamma
        }
    }
}

/// A closed sub-interval of [0, 1], possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval(Option<(Rational, Rational)>);

impl Interval {
    pub fn empty() -> Self {
        Interval(None)
    }

    pub fn unit() -> Self {
        Interval(Some((Rational::zero(), Rational::one())))
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        if lo <= hi {
            Interval(Some((lo, hi)))
        } else {
            Interval(None)
        }
    }

    /// Solution of `c0 + (c1 - c0) w >= 0` within [0, 1].
    fn from_affine_nonneg(c0: &Rational, c1: &Rational) -> Self {
        let slope = c1 - c0;
        if slope.is_zero() {
            return if c0.is_negative() { Interval::empty() } else { Interval::unit() };
        }
        let root = -c0 / &slope;
        if slope.is_positive() {
            Interval::new(root.max(Rational::zero()), Rational::one())
        } else {
            Interval::new(Rational::zero(), root.min(Rational::one()))
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn bounds(&self) -> Option<(Rational, Rational)> {
        self.0.clone()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match &self.0 {
            Some((lo, hi)) => lo <= x && x <= hi,
            None => false,
        }
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        match (&self.0, &other.0) {
            (Some((a, b)), Some((c, d))) => {
                Interval::new(a.clone().max(c.clone()), b.clone().min(d.clone()))
            }
            _ => Interval::empty(),
        }
    }
}

/// One cell of an axis partition: either a single breakpoint or a span
/// between neighbours (closed exactly at the domain bounds 0 and 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxisCell {
    Point { at: Rational },
    Span { lo: Rational, hi: Rational, closed_lo: bool, closed_hi: bool },
}

impl AxisCell {
    /// A weight inside the cell, used to evaluate its equilibrium set.
    pub fn sample(&self) -> Rational {
        match self {
            AxisCell::Point { at } => at.clone(),
            AxisCell::Span { lo, hi, .. } => (lo + hi) / Rational::from_int(2),
        }
    }

    /// Renders the cell as e.g. `l=4/9` or `2/7<l<4/9`.
    pub fn describe(&self, var: char) -> String {
        match self {
            AxisCell::Point { at } => format!("{var}={at}"),
            AxisCell::Span { lo, hi, closed_lo, closed_hi } => format!(
                "{lo}{}{var}{}{hi}",
                if *closed_lo { "<=" } else { "<" },
                if *closed_hi { "<=" } else { "<" }
            ),
        }
    }
}

fn axis_cells(breakpoints: Vec<Rational>) -> Vec<AxisCell> {
    let mut cells = Vec::new();
    let mut cursor = Rational::zero();
    let mut cursor_open = false; // span start excluded once a point cell was emitted
    for p in breakpoints {
        if cursor < p {
            cells.push(AxisCell::Span {
                lo: cursor.clone(),
                hi: p.clone(),
                closed_lo: !cursor_open,
                closed_hi: false,
            });
        }
        cells.push(AxisCell::Point { at: p.clone() });
        cursor = p;
        cursor_open = true;
    }
    if cursor < Rational::one() || cells.is_empty() {
        cells.push(AxisCell::Span {
            lo: cursor,
            hi: Rational::one(),
            closed_lo: !cursor_open,
            closed_hi: true,
        });
    }
    cells
}

/// The unit square partitioned into cells of constant equilibrium set.
/// Rows run over player 2's cells from low to high weight; each row lists
/// player 1's cells from low to high.
#[derive(Clone, Debug)]
pub struct RegionDiagram {
    pub lambda_cells: Vec<AxisCell>,
    pub gamma_cells: Vec<AxisCell>,
    pub rows: Vec<Vec<Vec<PureProfile>>>,
}

impl RegionDiagram {
    pub fn cell(&self, lambda_index: usize, gamma_index: usize) -> &[PureProfile] {
        &self.rows[gamma_index][lambda_index]
    }

    /// Presentation form with profiles rendered through the game's labels.
    pub fn report(&self, dg: &DoubleGame) -> RegionReport {
        RegionReport {
            lambda_cells: self.lambda_cells.clone(),
            gamma_cells: self.gamma_cells.clone(),
            cells: self
                .rows
                .iter()
                .enumerate()
                .flat_map(|(gi, row)| {
                    row.iter().enumerate().map(move |(li, nes)| RegionCell {
                        lambda: self.lambda_cells[li].describe('l'),
                        gamma: self.gamma_cells[gi].describe('g'),
                        equilibria: nes.iter().map(|p| dg.profile_label(p)).collect(),
                    })
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionCell {
    pub lambda: String,
    pub gamma: String,
    pub equilibria: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionReport {
    pub lambda_cells: Vec<AxisCell>,
    pub gamma_cells: Vec<AxisCell>,
    pub cells: Vec<RegionCell>,
}

/// Interpolated opponent mixture of a coherent pair of mixed equilibria.
///
/// `p` is the weight player 1 puts on its first action; `p0` and `p1` are the
/// opponent's first-action weights at the opponent extremes; `g1_entries` and
/// `g2_entries` are the opponent's payoff entries (CC, CD, DC, DD order) of
/// the games at opponent weight 0 and 1. A zero denominator means the
/// opponent is indifferent at this weight and no single mixture is selected;
/// that is reported as an error rather than a silent division.
pub fn mixed_interpolate(
    p: &Rational,
    p0: &Rational,
    p1: &Rational,
    gamma: &Rational,
    g1_entries: &[Rational; 4],
    g2_entries: &[Rational; 4],
) -> Result<Rational> {
    for prob in [p, p0, p1] {
        if !prob.in_unit_interval() {
            return Err(Error::InvalidDistribution(format!("probability {prob} outside [0, 1]")));
        }
    }
    check_weight(gamma)?;
    let q = Rational::one() - p;
    let a = p * &(&g1_entries[0] - &g1_entries[1]) + &q * &(&g1_entries[2] - &g1_entries[3]);
    let b = p * &(&g2_entries[0] - &g2_entries[1]) + &q * &(&g2_entries[2] - &g2_entries[3]);
    let one_m_g = Rational::one() - gamma;
    let denom = &one_m_g * &a + gamma * &b;
    if denom.is_zero() {
        return Err(Error::DegenerateInterpolation);
    }
    Ok((one_m_g * p0 * a + gamma.clone() * p1.clone() * b) / denom)
}

/// Renders a region diagram as a standalone SVG of the unit square.
pub fn region_svg(dg: &DoubleGame, diagram: &RegionDiagram) -> String {
    let size = 640.0;
    let margin = 60.0;
    let side = size - 2.0 * margin;
    let x = |v: f64| margin + v * side;
    let y = |v: f64| size - margin - v * side;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\" font-family=\"monospace\" font-size=\"12\">\n"
    ));
    out.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{side}\" height=\"{side}\" fill=\"white\" stroke=\"black\"/>\n",
        x(0.0),
        y(1.0)
    ));
    let grid_lines = |cells: &[AxisCell]| -> Vec<(f64, String)> {
        cells
            .iter()
            .filter_map(|c| match c {
                AxisCell::Point { at } => Some((at.to_f64(), at.to_string())),
                AxisCell::Span { .. } => None,
            })
            .collect()
    };
    for (v, label) in grid_lines(&diagram.lambda_cells) {
        out.push_str(&format!(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"grey\" stroke-dasharray=\"4 3\"/>\n",
            x(v),
            y(0.0),
            y(1.0)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{label}</text>\n",
            x(v),
            y(0.0) + 18.0
        ));
    }
    for (v, label) in grid_lines(&diagram.gamma_cells) {
        out.push_str(&format!(
            "<line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"grey\" stroke-dasharray=\"4 3\"/>\n",
            x(0.0),
            x(1.0),
            y(v)
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{label}</text>\n",
            x(0.0) - 8.0,
            y(v) + 4.0
        ));
    }
    // label the span-by-span cells; point rows and columns are too thin
    for (gi, gc) in diagram.gamma_cells.iter().enumerate() {
        for (li, lc) in diagram.lambda_cells.iter().enumerate() {
            if let (AxisCell::Span { lo: llo, hi: lhi, .. }, AxisCell::Span { lo: glo, hi: ghi, .. }) =
                (lc, gc)
            {
                let cx = x((llo.to_f64() + lhi.to_f64()) / 2.0);
                let cy = y((glo.to_f64() + ghi.to_f64()) / 2.0);
                let text: Vec<String> =
                    diagram.rows[gi][li].iter().map(|p| dg.profile_label(p)).collect();
                let text = if text.is_empty() { "-".to_string() } else { text.join(" ") };
                out.push_str(&format!(
                    "<text x=\"{cx}\" y=\"{cy}\" text-anchor=\"middle\">{text}</text>\n"
                ));
            }
        }
    }
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">lambda</text>\n",
        x(0.5),
        y(0.0) + 40.0
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 {} {})\">gamma</text>\n",
        x(0.0) - 42.0,
        y(0.5),
        x(0.0) - 42.0,
        y(0.5)
    ));
    out.push_str("</svg>\n");
    out
}
