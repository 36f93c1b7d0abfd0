//! Discriminating a family of intervals or axis-aligned rectangles by a
//! finite point set.
//!
//! The sorted region coordinates cut the plane (or line) into open grid
//! cells. Each cell lies inside a fixed set of regions, so cells with the
//! same incidence form the vertex classes of a reduced hypergraph whose
//! edge `i` is region `i`. An optimal class labeling is realized by putting
//! that many points inside one cell of each class. All arithmetic is exact;
//! membership is strict, so no point ever sits on a region boundary.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use num_rational::Rational64;
use thiserror::Error;

use crate::hypergraph::Weight;
use crate::reduce::{IncidenceVector, ReduceError, ReducedHypergraph, MAX_EDGES};
use crate::solver::{solve_reduced, SolveError, SolverConfig};

pub type Coord = Rational64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("region {0} has zero or negative extent")]
    Degenerate(usize),
    #[error("region {index} is {found}-dimensional, expected {expected}")]
    MixedDimensions {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("no regions given")]
    Empty,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// An open interval `(a, b)` or open rectangle `(x0, x1) × (y0, y1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    Interval { a: Coord, b: Coord },
    Rect { x0: Coord, y0: Coord, x1: Coord, y1: Coord },
}

impl Region {
    pub fn interval(a: impl Into<Coord>, b: impl Into<Coord>) -> Self {
        Region::Interval {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn rect(x0: impl Into<Coord>, y0: impl Into<Coord>, x1: impl Into<Coord>, y1: impl Into<Coord>) -> Self {
        Region::Rect {
            x0: x0.into(),
            y0: y0.into(),
            x1: x1.into(),
            y1: y1.into(),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Region::Interval { .. } => 1,
            Region::Rect { .. } => 2,
        }
    }

    /// `(low, high)` per axis.
    pub fn extent(&self) -> Vec<(Coord, Coord)> {
        match *self {
            Region::Interval { a, b } => vec![(a, b)],
            Region::Rect { x0, y0, x1, y1 } => vec![(x0, x1), (y0, y1)],
        }
    }

    pub fn contains_strictly(&self, point: &[Coord]) -> bool {
        self.extent().iter().zip(point).all(|(&(lo, hi), &p)| lo < p && p < hi)
    }
}

fn check_family(regions: &[Region]) -> Result<usize, GeometryError> {
    let first = regions.first().ok_or(GeometryError::Empty)?;
    let dim = first.dimension();
    for (index, r) in regions.iter().enumerate() {
        if r.dimension() != dim {
            return Err(GeometryError::MixedDimensions {
                index,
                expected: dim,
                found: r.dimension(),
            });
        }
        if r.extent().iter().any(|(lo, hi)| lo >= hi) {
            return Err(GeometryError::Degenerate(index));
        }
    }
    if regions.len() > MAX_EDGES {
        return Err(ReduceError::TooManyEdges(regions.len()).into());
    }
    Ok(dim)
}

/// Parses a coordinate: integer, decimal (`-1.25`) or fraction (`3/4`).
pub fn parse_coord(token: &str) -> Option<Coord> {
    if let Some((p, q)) = token.split_once('/') {
        let (p, q): (i64, i64) = (p.parse().ok()?, q.parse().ok()?);
        return (q != 0).then(|| Coord::new(p, q));
    }
    let (negative, digits) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let scale = 10i64.checked_pow(frac.len() as u32)?;
    let whole: i64 = format!("{int}{frac}").parse().ok()?;
    let value = Coord::new(whole, scale);
    Some(if negative { -value } else { value })
}

/// Parses `.rg` text: `interval a b` or `rect x0 y0 x1 y1` per line, `#`
/// comments and blank lines ignored.
pub fn parse_regions(text: &str) -> Result<Vec<Region>, GeometryError> {
    let mut regions = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut parts = t.split_whitespace();
        let kind = parts.next().unwrap_or_default();
        let coords = parts
            .map(|tok| {
                parse_coord(tok).ok_or_else(|| GeometryError::Parse {
                    line,
                    message: format!("bad coordinate `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let region = match (kind, coords.as_slice()) {
            ("interval", &[a, b]) => Region::Interval { a, b },
            ("rect", &[x0, y0, x1, y1]) => Region::Rect { x0, y0, x1, y1 },
            ("interval" | "rect", _) => {
                return Err(GeometryError::Parse {
                    line,
                    message: format!("wrong number of coordinates for `{kind}`"),
                })
            }
            _ => {
                return Err(GeometryError::Parse {
                    line,
                    message: format!("unknown region kind `{kind}`"),
                })
            }
        };
        regions.push(region);
    }
    check_family(&regions)?;
    Ok(regions)
}

/// An open grid box and the regions containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub bounds: Vec<(Coord, Coord)>,
    pub incidence: IncidenceVector,
}

impl Cell {
    pub fn midpoint(&self) -> Vec<Coord> {
        self.bounds.iter().map(|&(lo, hi)| (lo + hi) / 2).collect()
    }
}

/// Grid cells lying in at least one region, ordered by x then y.
pub fn arrangement_cells(regions: &[Region]) -> Result<Vec<Cell>, GeometryError> {
    let dim = check_family(regions)?;
    let axes: Vec<Vec<Coord>> = (0..dim)
        .map(|axis| {
            let mut cs: Vec<Coord> = regions
                .iter()
                .flat_map(|r| {
                    let (lo, hi) = r.extent()[axis];
                    [lo, hi]
                })
                .collect();
            cs.sort();
            cs.dedup();
            cs
        })
        .collect();
    let slabs: Vec<Vec<(Coord, Coord)>> = axes
        .iter()
        .map(|cs| cs.windows(2).map(|w| (w[0], w[1])).collect())
        .collect();
    let mut boxes: Vec<Vec<(Coord, Coord)>> = vec![Vec::new()];
    for axis in &slabs {
        boxes = boxes
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&s| {
                    let mut b = prefix.clone();
                    b.push(s);
                    b
                })
            })
            .collect();
    }
    Ok(boxes
        .into_iter()
        .filter_map(|bounds| {
            let mid: Vec<Coord> = bounds.iter().map(|&(lo, hi)| (lo + hi) / 2).collect();
            let incidence = IncidenceVector::from_edges(
                regions
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.contains_strictly(&mid))
                    .map(|(i, _)| i),
            );
            (!incidence.is_empty()).then_some(Cell { bounds, incidence })
        })
        .collect())
}

/// The reduced hypergraph of a region family with its cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricHypergraph {
    pub reduced: ReducedHypergraph,
    pub cells: Vec<Cell>,
    /// Class of each cell.
    pub cell_class: Vec<usize>,
    /// One cell index per class: the first cell seen with that incidence.
    pub representatives: Vec<usize>,
}

pub fn geometric_hypergraph(regions: &[Region]) -> Result<GeometricHypergraph, GeometryError> {
    let cells = arrangement_cells(regions)?;
    let mut class_of: HashMap<IncidenceVector, usize> = HashMap::new();
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    let mut cell_class = Vec::with_capacity(cells.len());
    for (k, cell) in cells.iter().enumerate() {
        let c = *class_of.entry(cell.incidence).or_insert_with(|| {
            classes.push(cell.incidence);
            representatives.push(k);
            classes.len() - 1
        });
        cell_class.push(c);
    }
    let reduced = ReducedHypergraph::from_classes(regions.len(), classes)?;
    Ok(GeometricHypergraph {
        reduced,
        cells,
        cell_class,
        representatives,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacedPoint {
    pub coords: Vec<Coord>,
    /// Vertex class (zero-based) of the cell holding the point.
    pub class: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointPlacement {
    pub points: Vec<PlacedPoint>,
    /// Points strictly inside each region, by region index.
    pub per_region_count: Vec<Weight>,
}

impl PointPlacement {
    pub fn total(&self) -> usize {
        self.points.len()
    }
}

/// `k` distinct points strictly inside `cell`, evenly spaced along its
/// longer axis (x on ties) at the midpoint of the other.
fn spread(cell: &Cell, k: Weight) -> Vec<Vec<Coord>> {
    let widths: Vec<Coord> = cell.bounds.iter().map(|&(lo, hi)| hi - lo).collect();
    let long = (0..widths.len()).fold(0, |best, a| if widths[a] > widths[best] { a } else { best });
    let mid = cell.midpoint();
    let (lo, _) = cell.bounds[long];
    let step = widths[long] / Coord::from_integer(k as i64 + 1);
    (1..=k as i64)
        .map(|j| {
            let mut p = mid.clone();
            p[long] = lo + step * Coord::from_integer(j);
            p
        })
        .collect()
}

/// Minimum point set whose counts inside the regions are positive and
/// pairwise distinct.
pub fn geometric_discriminator(regions: &[Region]) -> Result<PointPlacement, GeometryError> {
    geometric_discriminator_with(regions, &SolverConfig::default())
}

pub fn geometric_discriminator_with(
    regions: &[Region],
    config: &SolverConfig,
) -> Result<PointPlacement, GeometryError> {
    let g = geometric_hypergraph(regions)?;
    let solution = solve_reduced(&g.reduced, config)?;
    let mut points = Vec::new();
    for (class, &k) in solution.class_values.iter().enumerate() {
        let cell = &g.cells[g.representatives[class]];
        points.extend(spread(cell, k).into_iter().map(|coords| PlacedPoint { coords, class }));
    }
    Ok(PointPlacement {
        points,
        per_region_count: g.reduced.edge_weights(&solution.class_values),
    })
}

/// Counts, for each region, the points strictly inside it.
pub fn count_points_in_regions(regions: &[Region], points: &[PlacedPoint]) -> Vec<Weight> {
    regions
        .iter()
        .map(|r| points.iter().filter(|p| r.contains_strictly(&p.coords)).count() as Weight)
        .collect()
}

/// Exact decimal when the denominator divides a power of ten, else `p/q`.
pub struct Decimal(pub Coord);

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (numer, denom) = (*self.0.numer(), *self.0.denom());
        let (mut rest, mut twos, mut fives) = (denom, 0u32, 0u32);
        while rest % 2 == 0 {
            rest /= 2;
            twos += 1;
        }
        while rest % 5 == 0 {
            rest /= 5;
            fives += 1;
        }
        if rest != 1 {
            return write!(f, "{numer}/{denom}");
        }
        let places = twos.max(fives);
        if places == 0 {
            return write!(f, "{numer}");
        }
        let unit = 10u64.pow(places);
        let scaled = numer.unsigned_abs() * (unit / denom as u64);
        let sign = if numer < 0 { "-" } else { "" };
        write!(
            f,
            "{sign}{}.{:0width$}",
            scaled / unit,
            scaled % unit,
            width = places as usize
        )
    }
}

/// `point <coords…> cell=<class>` lines (class one-based), then
/// `region <i> count=<k>` and `total <points>`.
pub fn format_placement(placement: &PointPlacement) -> String {
    let mut out = String::new();
    for p in &placement.points {
        out.push_str("point");
        for &c in &p.coords {
            write!(out, " {}", Decimal(c)).unwrap();
        }
        writeln!(out, " cell={}", p.class + 1).unwrap();
    }
    for (i, k) in placement.per_region_count.iter().enumerate() {
        writeln!(out, "region {} count={}", i + 1, k).unwrap();
    }
    writeln!(out, "total {}", placement.total()).unwrap();
    out
}

/// `n` pairwise disjoint unit squares along the x axis.
pub fn disjoint_squares(n: usize) -> Vec<Region> {
    (0..n as i64).map(|i| Region::rect(2 * i, 0, 2 * i + 1, 1)).collect()
}

/// `S_1 ⊂ S_2 ⊂ … ⊂ S_n`, concentric squares.
pub fn nested_squares(n: usize) -> Vec<Region> {
    (1..=n as i64).map(|i| Region::rect(-i, -i, i, i)).collect()
}

/// `n − 2` disjoint squares followed by a square `S_{n−1}` inside `S_n`,
/// both disjoint from the rest.
pub fn chain_squares(n: usize) -> Vec<Region> {
    assert!(n >= 2, "the chain needs at least two squares");
    let mut regions = disjoint_squares(n - 2);
    let x = 2 * (n as i64 - 2);
    regions.push(Region::rect(x + 1, 1, x + 2, 2));
    regions.push(Region::rect(x, 0, x + 3, 3));
    regions
}
