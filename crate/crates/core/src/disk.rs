//! Exact measures on the unit disk, discretized as a polar grid.
//!
//! Cells are annular sectors: ring `r` spans squared radii
//! `[ring_bounds_sq[r], ring_bounds_sq[r + 1]]` and sector `s` spans the
//! angular fraction `[s / n, (s + 1) / n]` of a full turn. Measures store a
//! mass per cell rather than a density, so normalized Lebesgue measure is
//! `(r²_hi - r²_lo) / n` per cell and no factor of π ever appears.
//!
//! The bullseye is the disk of squared radius `1/4`. With that radius the
//! uniform measure gives it mass `1/4`, which is what the conditional factors
//! `4` and `4/3` and the identity `μ_L = μℓ` require.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, Event, MAX_ATOMS};
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::rational::{self, Rational};

pub fn bullseye_radius_sq() -> Rational {
    rational::ratio(1, 4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarGrid {
    ring_bounds_sq: Vec<Rational>,
    n_sectors: usize,
    bullseye_rings: usize,
}

impl PolarGrid {
    pub fn new(ring_bounds_sq: Vec<Rational>, n_sectors: usize) -> Result<Self> {
        if n_sectors == 0 {
            return Err(Error::Grid("need at least one sector".into()));
        }
        if ring_bounds_sq.len() < 2 {
            return Err(Error::Grid("need at least two ring bounds".into()));
        }
        if !ring_bounds_sq[0].is_zero() || !ring_bounds_sq.last().unwrap().is_one() {
            return Err(Error::Grid("ring bounds must run from 0 to 1".into()));
        }
        if ring_bounds_sq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Grid("ring bounds must be strictly increasing".into()));
        }
        let bullseye_rings = ring_bounds_sq
            .iter()
            .position(|b| *b == bullseye_radius_sq())
            .ok_or_else(|| Error::Grid("ring bounds must include the bullseye boundary 1/4".into()))?;
        Ok(Self {
            ring_bounds_sq,
            n_sectors,
            bullseye_rings,
        })
    }

    /// Squared-radius bounds `{0, 1/4, 1}` with four sectors: eight cells.
    pub fn default_grid() -> Self {
        Self::new(
            vec![rational::zero(), bullseye_radius_sq(), rational::one()],
            4,
        )
        .expect("default grid is valid")
    }

    pub fn ring_bounds_sq(&self) -> &[Rational] {
        &self.ring_bounds_sq
    }

    pub fn n_sectors(&self) -> usize {
        self.n_sectors
    }

    pub fn ring_count(&self) -> usize {
        self.ring_bounds_sq.len() - 1
    }

    pub fn cell_count(&self) -> usize {
        self.ring_count() * self.n_sectors
    }

    pub fn cell_index(&self, ring: usize, sector: usize) -> Result<usize> {
        if ring >= self.ring_count() || sector >= self.n_sectors {
            return Err(Error::Grid(format!(
                "cell [{ring}, {sector}] is outside a grid of {} rings and {} sectors",
                self.ring_count(),
                self.n_sectors
            )));
        }
        Ok(ring * self.n_sectors + sector)
    }

    /// `(ring, sector)` of a cell index.
    pub fn cell_position(&self, cell: usize) -> (usize, usize) {
        (cell / self.n_sectors, cell % self.n_sectors)
    }

    pub fn cell_label(&self, cell: usize) -> String {
        let (r, s) = self.cell_position(cell);
        format!("r{r}s{s}")
    }

    /// Normalized Lebesgue mass of a cell.
    pub fn cell_area(&self, cell: usize) -> Rational {
        let (r, _) = self.cell_position(cell);
        (&self.ring_bounds_sq[r + 1] - &self.ring_bounds_sq[r]) / rational::int(self.n_sectors as i64)
    }

    pub fn region<I: IntoIterator<Item = (usize, usize)>>(&self, cells: I) -> Result<Region> {
        let cells = cells
            .into_iter()
            .map(|(r, s)| self.cell_index(r, s))
            .collect::<Result<BTreeSet<usize>>>()?;
        Ok(Region {
            n_cells: self.cell_count(),
            cells,
        })
    }

    pub fn empty(&self) -> Region {
        Region {
            n_cells: self.cell_count(),
            cells: BTreeSet::new(),
        }
    }

    pub fn full(&self) -> Region {
        Region {
            n_cells: self.cell_count(),
            cells: (0..self.cell_count()).collect(),
        }
    }

    /// The bullseye `B`.
    pub fn bullseye(&self) -> Region {
        Region {
            n_cells: self.cell_count(),
            cells: (0..self.bullseye_rings * self.n_sectors).collect(),
        }
    }

    /// `S \ B`.
    pub fn outside_bullseye(&self) -> Region {
        self.bullseye().complement()
    }

    /// The finite algebra whose atoms are this grid's cells.
    pub fn cell_algebra(&self) -> Result<Algebra> {
        Algebra::new((0..self.cell_count()).map(|c| self.cell_label(c)))
    }

    fn check_region(&self, r: &Region) -> Result<()> {
        if r.n_cells != self.cell_count() {
            return Err(Error::Grid(format!(
                "region built for {} cells used on a grid of {} cells",
                r.n_cells,
                self.cell_count()
            )));
        }
        Ok(())
    }
}

/// A union of grid cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    n_cells: usize,
    cells: BTreeSet<usize>,
}

impl Region {
    pub fn cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: usize) -> bool {
        self.cells.contains(&cell)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn complement(&self) -> Region {
        Region {
            n_cells: self.n_cells,
            cells: (0..self.n_cells).filter(|c| !self.cells.contains(c)).collect(),
        }
    }

    pub fn union(&self, other: &Region) -> Region {
        Region {
            n_cells: self.n_cells,
            cells: self.cells.union(&other.cells).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &Region) -> Region {
        Region {
            n_cells: self.n_cells,
            cells: self.cells.intersection(&other.cells).copied().collect(),
        }
    }

    pub fn is_disjoint(&self, other: &Region) -> bool {
        self.cells.is_disjoint(&other.cells)
    }

    /// The region as an event of the grid's cell algebra.
    pub fn to_event(&self) -> Result<Event> {
        if self.n_cells > MAX_ATOMS {
            return Err(Error::Capacity {
                what: "grid cells for export",
                actual: self.n_cells,
                cap: MAX_ATOMS,
            });
        }
        Ok(Event::from_atoms(self.cells()))
    }

    pub fn from_event(grid: &PolarGrid, e: Event) -> Region {
        Region {
            n_cells: grid.cell_count(),
            cells: e.atoms().filter(|&c| c < grid.cell_count()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskMeasure {
    grid: PolarGrid,
    cell_mass: Vec<Rational>,
}

impl DiskMeasure {
    pub fn new(grid: PolarGrid, cell_mass: Vec<Rational>) -> Result<Self> {
        if cell_mass.len() != grid.cell_count() {
            return Err(Error::Grid(format!(
                "{} cell masses for a grid of {} cells",
                cell_mass.len(),
                grid.cell_count()
            )));
        }
        Ok(Self { grid, cell_mass })
    }

    /// Normalized Lebesgue measure `μℓ`.
    pub fn lebesgue(grid: &PolarGrid) -> Self {
        let cell_mass = (0..grid.cell_count()).map(|c| grid.cell_area(c)).collect();
        Self {
            grid: grid.clone(),
            cell_mass,
        }
    }

    pub fn grid(&self) -> &PolarGrid {
        &self.grid
    }

    pub fn cell_mass(&self) -> &[Rational] {
        &self.cell_mass
    }

    pub fn measure_of(&self, r: &Region) -> Result<Rational> {
        self.grid.check_region(r)?;
        Ok(r.cells().map(|c| &self.cell_mass[c]).sum())
    }

    pub fn total(&self) -> Rational {
        self.cell_mass.iter().sum()
    }

    pub fn is_non_negative(&self) -> bool {
        self.cell_mass.iter().all(|m| !m.is_negative())
    }

    fn same_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::Grid("measures are defined on different grids".into()));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            grid: self.grid.clone(),
            cell_mass: self.cell_mass.iter().map(|m| m * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        Ok(Self {
            grid: self.grid.clone(),
            cell_mass: self.cell_mass.iter().zip(&other.cell_mass).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        Ok(Self {
            grid: self.grid.clone(),
            cell_mass: self.cell_mass.iter().zip(&other.cell_mass).map(|(a, b)| a - b).collect(),
        })
    }

    /// `(1 - t)·self + t·other`.
    pub fn mix(&self, other: &Self, t: &Rational) -> Result<Self> {
        self.scale(&(Rational::one() - t)).add(&other.scale(t))
    }

    /// Masses outside `r` set to zero.
    pub fn restrict(&self, r: &Region) -> Result<Self> {
        self.grid.check_region(r)?;
        let cell_mass = self
            .cell_mass
            .iter()
            .enumerate()
            .map(|(c, m)| if r.contains(c) { m.clone() } else { Rational::zero() })
            .collect();
        Ok(Self {
            grid: self.grid.clone(),
            cell_mass,
        })
    }

    /// Bayesian conditioning: restrict to `e` and divide by `m(e)`.
    pub fn bayes_condition(&self, e: &Region) -> Result<Self> {
        let mass = self.measure_of(e)?;
        if mass.is_zero() {
            return Err(Error::NullConditioning("the conditioning region has zero mass".into()));
        }
        Ok(self.restrict(e)?.scale(&mass.recip()))
    }

    /// Jeffrey conditionalization: `e` gets probability `new_mass`, and the
    /// measure is conditioned within `e` and within its complement.
    pub fn jeffrey(&self, e: &Region, new_mass: &Rational) -> Result<Self> {
        let mass = self.measure_of(e)?;
        if !rational::in_open_unit(&mass) {
            return Err(Error::Contract(format!(
                "Jeffrey update needs m(e) in (0,1), got {}",
                rational::format(&mass)
            )));
        }
        if new_mass.is_negative() || *new_mass > Rational::one() {
            return Err(Error::Contract(format!(
                "new mass {} is outside [0,1]",
                rational::format(new_mass)
            )));
        }
        let inside = self.bayes_condition(e)?;
        let outside = self.bayes_condition(&e.complement())?;
        outside.mix(&inside, new_mass)
    }

    /// The same masses as a signed measure on the grid's cell algebra.
    pub fn export_to_algebra(&self) -> Result<SignedMeasure> {
        SignedMeasure::new(self.grid.cell_algebra()?, self.cell_mass.clone())
    }
}

/// The seven measures of the drunk-archer example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcheryMeasures {
    /// `μℓ`, uniform.
    pub lebesgue: DiskMeasure,
    /// `μ_B`: `μℓ` conditioned on the bullseye.
    pub bullseye: DiskMeasure,
    /// `μ_{S\B}`: `μℓ` conditioned on the complement of the bullseye.
    pub outside: DiskMeasure,
    pub very_high: DiskMeasure,
    pub high: DiskMeasure,
    pub low: DiskMeasure,
    pub very_low: DiskMeasure,
}

pub fn archery_measures(grid: &PolarGrid) -> Result<ArcheryMeasures> {
    let lebesgue = DiskMeasure::lebesgue(grid);
    let b = grid.bullseye();
    let bullseye = lebesgue.restrict(&b)?.scale(&rational::int(4));
    let outside = lebesgue.restrict(&b.complement())?.scale(&rational::ratio(4, 3));
    // mix(x, y, t) = (1 - t)·x + t·y, so t is the weight outside the bullseye
    let very_high = bullseye.mix(&outside, &rational::ratio(1, 10))?;
    let high = bullseye.mix(&outside, &rational::ratio(23, 100))?;
    let low = bullseye.mix(&outside, &rational::ratio(3, 4))?;
    let very_low = outside.clone();
    Ok(ArcheryMeasures {
        lebesgue,
        bullseye,
        outside,
        very_high,
        high,
        low,
        very_low,
    })
}

impl ArcheryMeasures {
    /// `μ_VL - μ_H`: the inference's scores.
    pub fn score_measure(&self) -> Result<DiskMeasure> {
        self.very_low.sub(&self.high)
    }

    pub fn score(&self, r: &Region) -> Result<Rational> {
        Ok(self.very_low.measure_of(r)? - self.high.measure_of(r)?)
    }

    /// `μ_L - μ_H`, the second scenario's inference.
    pub fn low_minus_high(&self) -> Result<DiskMeasure> {
        self.low.sub(&self.high)
    }

    pub fn named(&self) -> [(&'static str, &DiskMeasure); 7] {
        [
            ("μℓ", &self.lebesgue),
            ("μ_B", &self.bullseye),
            ("μ_S\\B", &self.outside),
            ("μ_VH", &self.very_high),
            ("μ_H", &self.high),
            ("μ_L", &self.low),
            ("μ_VL", &self.very_low),
        ]
    }
}

/// The part of `base` swept by a ray turning counterclockwise from angle 0
/// to `angle`, a fraction of the full turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweptRegion {
    pub base: Region,
    pub angle: Rational,
}

impl SweptRegion {
    /// Mass under `m`. Within a cell mass is uniform in angle, so a cell
    /// contributes its mass times the covered fraction of its sector.
    pub fn measure_under(&self, m: &DiskMeasure) -> Result<Rational> {
        let grid = m.grid();
        grid.check_region(&self.base)?;
        let n = rational::int(grid.n_sectors() as i64);
        let sweep = &self.angle * &n;
        let mut total = Rational::zero();
        for c in self.base.cells() {
            let (_, s) = grid.cell_position(c);
            let covered = &sweep - rational::int(s as i64);
            let covered = covered.clamp(Rational::zero(), Rational::one());
            total += &m.cell_mass()[c] * covered;
        }
        Ok(total)
    }

    /// Same base and no larger angle.
    pub fn is_within(&self, other: &SweptRegion) -> bool {
        self.base == other.base && self.angle <= other.angle
    }
}

/// A knife for `a` under `m`: the swept part of `a` with mass exactly `v`.
/// The sweep angle inverts the piecewise-linear map from angle to swept mass,
/// whose breakpoints are the sector boundaries.
pub fn knife(m: &DiskMeasure, a: &Region, v: &Rational) -> Result<SweptRegion> {
    if !m.is_non_negative() {
        return Err(Error::Contract("knives need non-negative cell masses".into()));
    }
    let grid = m.grid();
    let total = m.measure_of(a)?;
    if v.is_negative() || *v > total {
        return Err(Error::Contract(format!(
            "v = {} is outside [0, {}]",
            rational::format(v),
            rational::format(&total)
        )));
    }
    if v.is_zero() {
        return Ok(SweptRegion {
            base: a.clone(),
            angle: Rational::zero(),
        });
    }
    if *v == total {
        return Ok(SweptRegion {
            base: a.clone(),
            angle: Rational::one(),
        });
    }
    let mut per_sector = vec![Rational::zero(); grid.n_sectors()];
    for c in a.cells() {
        per_sector[grid.cell_position(c).1] += &m.cell_mass()[c];
    }
    let n = rational::int(grid.n_sectors() as i64);
    let mut swept = Rational::zero();
    for (s, mass) in per_sector.iter().enumerate() {
        let next = &swept + mass;
        if next >= *v && mass.is_positive() {
            let within = (v - &swept) / mass;
            return Ok(SweptRegion {
                base: a.clone(),
                angle: (rational::int(s as i64) + within) / &n,
            });
        }
        swept = next;
    }
    unreachable!("v < m(a) is reached inside some sector")
}

/// Sweeps `a_plus` until its score mass cancels `a_minus`, so that the swept
/// part together with `a_minus` is null under `diff`.
pub fn annulment_by_knife(diff: &DiskMeasure, a_plus: &Region, a_minus: &Region) -> Result<SweptRegion> {
    let grid = diff.grid();
    grid.check_region(a_plus)?;
    grid.check_region(a_minus)?;
    if !a_plus.is_disjoint(a_minus) {
        return Err(Error::Contract("a_plus and a_minus must be disjoint".into()));
    }
    if a_plus.cells().any(|c| diff.cell_mass()[c].is_negative()) {
        return Err(Error::Contract("a_plus must be purely non-negative".into()));
    }
    if a_minus.cells().any(|c| diff.cell_mass()[c].is_positive()) {
        return Err(Error::Contract("a_minus must be purely non-positive".into()));
    }
    if diff.measure_of(&a_plus.union(a_minus))?.is_negative() {
        return Err(Error::Contract(
            "diff(a_plus ∪ a_minus) is negative: a_plus cannot annul a_minus".into(),
        ));
    }
    let target = -diff.measure_of(a_minus)?;
    knife(&diff.restrict(a_plus)?, a_plus, &target)
}
