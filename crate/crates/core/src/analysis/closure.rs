//! Truncated submodule generation and simplicity probes.

use std::fmt;

use rayon::prelude::*;

use super::echelon::Echelon;
use crate::algebra::{witt_embed, AlgebraElement, BasisElement, BasisKind};
use crate::expr::render_vector;
use crate::repr::{
    act, Family, Letter, ModuleSpec, ModuleVector, PolyVector, ReprError, UPoly, WeightVector,
};
use crate::scalar::{Coefficient, HalfInt};

/// A coordinate of a finite grid of basis vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    /// `u^degree` in the even or odd component.
    Poly {
        odd: bool,
        degree: usize,
    },
    Weight {
        k: HalfInt,
        letter: Letter,
    },
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Poly { odd, degree } => {
                write!(f, "{} u^{degree}", if *odd { "odd" } else { "even" })
            }
            Coord::Weight { k, letter } => write!(f, "{}_{{{k}}}", letter.symbol()),
        }
    }
}

impl Coord {
    pub fn vector(&self, c: Coefficient) -> ModuleVector {
        match self {
            Coord::Poly { odd: false, degree } => ModuleVector::even(UPoly::monomial(*degree, c)),
            Coord::Poly { odd: true, degree } => ModuleVector::odd(UPoly::monomial(*degree, c)),
            Coord::Weight { k, letter } => ModuleVector::Weight(WeightVector::term(*k, *letter, c)),
        }
    }
}

/// An ordered list of coordinates spanning a finite piece of a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    cells: Vec<Coord>,
}

impl Grid {
    pub fn from_cells(cells: Vec<Coord>) -> Self {
        Grid { cells }
    }

    /// `u^j` in both components for `j <= deg_cap`, even before odd.
    pub fn polynomial(deg_cap: usize) -> Self {
        let mut cells = Vec::new();
        for degree in 0..=deg_cap {
            cells.push(Coord::Poly { odd: false, degree });
            cells.push(Coord::Poly { odd: true, degree });
        }
        Grid { cells }
    }

    /// Even monomials only, for the Witt modules.
    pub fn even_polynomial(deg_cap: usize) -> Self {
        Grid {
            cells: (0..=deg_cap)
                .map(|degree| Coord::Poly { odd: false, degree })
                .collect(),
        }
    }

    /// `x_k`, `y_k` for `|2k| <= window`, ascending in `k`, x before y.
    pub fn weights(window: i64) -> Self {
        let mut cells = Vec::new();
        for k in HalfInt::window(window) {
            cells.push(Coord::Weight {
                k,
                letter: Letter::X,
            });
            cells.push(Coord::Weight {
                k,
                letter: Letter::Y,
            });
        }
        Grid { cells }
    }

    /// The grid a probe of `spec` runs on.
    pub fn for_family(family: Family, deg_cap: usize, weight_window: i64) -> Self {
        match family {
            Family::A => Self::weights(weight_window),
            Family::Omega | Family::OmegaDeformed => Self::even_polynomial(deg_cap),
            _ => Self::polynomial(deg_cap),
        }
    }

    pub fn cells(&self) -> &[Coord] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn position(&self, c: &Coord) -> Option<usize> {
        self.cells.iter().position(|x| x == c)
    }

    pub fn monomials(&self) -> Vec<ModuleVector> {
        self.cells
            .iter()
            .map(|c| c.vector(Coefficient::one()))
            .collect()
    }

    /// Assembles a vector from grid coordinates.
    pub fn vector(&self, coords: &[Coefficient]) -> ModuleVector {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        let mut w = WeightVector::zero();
        let mut is_weight = false;
        for (cell, c) in self.cells.iter().zip(coords) {
            match cell {
                Coord::Poly { odd: o, degree } => {
                    let target = if *o { &mut odd } else { &mut even };
                    if target.len() <= *degree {
                        target.resize(degree + 1, Coefficient::zero());
                    }
                    target[*degree] = c.clone();
                }
                Coord::Weight { k, letter } => {
                    is_weight = true;
                    w.add_term(*k, *letter, c);
                }
            }
        }
        if is_weight {
            ModuleVector::Weight(w)
        } else {
            ModuleVector::Poly(PolyVector::new(
                UPoly::from_coeffs(even),
                UPoly::from_coeffs(odd),
            ))
        }
    }

    /// Splits a vector into its grid coordinates and the nonzero components
    /// outside the grid.
    pub fn coordinates(&self, v: &ModuleVector) -> (Vec<Coefficient>, Vec<(Coord, Coefficient)>) {
        let mut inside = vec![Coefficient::zero(); self.cells.len()];
        let mut outside = Vec::new();
        for (coord, c) in components(v) {
            match self.position(&coord) {
                Some(i) => inside[i] = c,
                None => outside.push((coord, c)),
            }
        }
        (inside, outside)
    }
}

/// Nonzero components of a vector in the monomial or weight basis.
pub fn components(v: &ModuleVector) -> Vec<(Coord, Coefficient)> {
    match v {
        ModuleVector::Poly(p) => {
            let mut out = Vec::new();
            for (odd, poly) in [(false, &p.even), (true, &p.odd)] {
                for (degree, c) in poly.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        out.push((Coord::Poly { odd, degree }, c.clone()));
                    }
                }
            }
            out
        }
        ModuleVector::Weight(w) => w
            .terms()
            .map(|((k, letter), c)| {
                (
                    Coord::Weight {
                        k: *k,
                        letter: *letter,
                    },
                    c.clone(),
                )
            })
            .collect(),
        ModuleVector::Scalar(_) => Vec::new(),
    }
}

/// The generators of `spec` with `|2·index| <= window`.
pub fn generators(spec: &ModuleSpec, window: i64) -> Vec<AlgebraElement> {
    let basis = BasisElement::window(window);
    match spec.family() {
        Family::Omega => basis
            .into_iter()
            .filter(|b| b.kind() == BasisKind::L)
            .map(AlgebraElement::basis)
            .collect(),
        Family::OmegaDeformed => basis
            .into_iter()
            .filter(|b| b.kind() == BasisKind::L)
            .map(|b| witt_embed(b.index().as_integer().unwrap(), &spec.params().mu))
            .collect(),
        _ => basis.into_iter().map(AlgebraElement::basis).collect(),
    }
}

/// A subspace of the span of a grid, in reduced echelon form over the grid
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSubspace {
    pub grid: Grid,
    pub basis: Echelon,
    /// Some generated vectors had components outside the grid that could
    /// not be cancelled back into it.
    pub truncation_loss: bool,
    /// The generation process ran out of new vectors before `max_rounds`.
    pub converged: bool,
    pub rounds: usize,
}

impl TruncatedSubspace {
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn is_full(&self) -> bool {
        self.basis.rank() == self.grid.len()
    }

    pub fn contains(&self, v: &ModuleVector) -> bool {
        let (inside, outside) = self.grid.coordinates(v);
        outside.is_empty() && self.basis.contains(&inside)
    }

    pub fn basis_vectors(&self) -> Vec<ModuleVector> {
        self.basis.rows().map(|r| self.grid.vector(r)).collect()
    }

    /// The span of `vectors` (all of which must lie in the grid).
    pub fn span(grid: &Grid, vectors: &[ModuleVector]) -> TruncatedSubspace {
        let mut basis = Echelon::new(grid.len());
        for v in vectors {
            let (inside, outside) = grid.coordinates(v);
            assert!(outside.is_empty(), "vector outside the grid");
            basis.insert(&inside);
        }
        TruncatedSubspace {
            grid: grid.clone(),
            basis,
            truncation_loss: false,
            converged: true,
            rounds: 0,
        }
    }
}

/// Generates the part inside `grid` of the submodule spanned by `seeds`.
///
/// The span of everything generated is kept over the grid coordinates plus
/// overflow coordinates, with overflow columns eliminated first; the rows
/// whose pivot lies in the grid then span exactly the intersection of the
/// generated space with the grid. Only those vectors are acted on again.
/// Images with components beyond the overflow band are dropped, which can
/// only shrink the result.
pub fn closure(
    spec: &ModuleSpec,
    seeds: &[ModuleVector],
    grid: &Grid,
    window: i64,
    max_rounds: usize,
) -> Result<TruncatedSubspace, ReprError> {
    let gens = generators(spec, window);
    let overflow = overflow_band(grid, window);
    let n_over = overflow.len();
    let mut ech = Echelon::new(n_over + grid.len());
    let mut dropped = false;

    let embed = |v: &ModuleVector| -> Option<Vec<Coefficient>> {
        let (inside, outside) = grid.coordinates(v);
        let mut row = vec![Coefficient::zero(); n_over];
        for (coord, c) in outside {
            let i = overflow.iter().position(|x| *x == coord)?;
            row[i] = c;
        }
        row.extend(inside);
        Some(row)
    };

    let mut queue = Vec::new();
    for s in seeds {
        match embed(s) {
            Some(row) => {
                if let Some((p, r)) = ech.insert(&row) {
                    if p >= n_over {
                        queue.push(grid.vector(&r[n_over..]));
                    }
                }
            }
            None => dropped = true,
        }
    }

    let grid_rank = |e: &Echelon| e.pivots().filter(|&p| p >= n_over).count();
    let mut rounds = 0;
    while !queue.is_empty() && rounds < max_rounds && grid_rank(&ech) < grid.len() {
        rounds += 1;
        let mut next = Vec::new();
        'outer: for v in &queue {
            for x in &gens {
                let img = act(spec, x, v)?;
                if img.is_zero() {
                    continue;
                }
                match embed(&img) {
                    Some(row) => {
                        if let Some((p, r)) = ech.insert(&row) {
                            if p >= n_over {
                                next.push(grid.vector(&r[n_over..]));
                                if grid_rank(&ech) == grid.len() {
                                    break 'outer;
                                }
                            }
                        }
                    }
                    None => dropped = true,
                }
            }
        }
        queue = next;
    }

    let full = grid_rank(&ech) == grid.len();
    let mut basis = Echelon::new(grid.len());
    let mut high_rows = false;
    for row in ech.rows() {
        let p = row.iter().position(|c| !c.is_zero()).unwrap();
        if p >= n_over {
            basis.insert(&row[n_over..]);
        } else {
            high_rows = true;
        }
    }
    Ok(TruncatedSubspace {
        grid: grid.clone(),
        basis,
        truncation_loss: !full && (dropped || high_rows),
        converged: full || queue.is_empty(),
        rounds,
    })
}

/// Coordinates just outside `grid` reachable by one generator of the window.
fn overflow_band(grid: &Grid, window: i64) -> Vec<Coord> {
    let mut out = Vec::new();
    let max_degree = grid
        .cells()
        .iter()
        .filter_map(|c| match c {
            Coord::Poly { degree, .. } => Some(*degree),
            _ => None,
        })
        .max();
    if let Some(d) = max_degree {
        // every generator raises the u-degree by at most one
        let has_odd = grid
            .cells()
            .iter()
            .any(|c| matches!(c, Coord::Poly { odd: true, .. }));
        out.push(Coord::Poly {
            odd: false,
            degree: d + 1,
        });
        if has_odd {
            out.push(Coord::Poly {
                odd: true,
                degree: d + 1,
            });
        }
    }
    let weights: Vec<HalfInt> = grid
        .cells()
        .iter()
        .filter_map(|c| match c {
            Coord::Weight { k, .. } => Some(*k),
            _ => None,
        })
        .collect();
    if let Some(bound) = weights.iter().map(|k| k.twice().abs()).max() {
        for k in HalfInt::window(bound + window) {
            if k.twice().abs() > bound {
                out.push(Coord::Weight {
                    k,
                    letter: Letter::X,
                });
                out.push(Coord::Weight {
                    k,
                    letter: Letter::Y,
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub window: i64,
    pub deg_cap: usize,
    pub weight_window: i64,
    pub max_rounds: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            window: 2,
            deg_cap: 6,
            weight_window: 4,
            max_rounds: 24,
        }
    }
}

/// Outcome of a simplicity probe. This is evidence from a finite
/// truncation, not a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NoProperInvariantFound,
    ProperInvariantFound(TruncatedSubspace),
    Inconclusive(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::NoProperInvariantFound => "no-proper-invariant-found",
            Verdict::ProperInvariantFound(_) => "proper-invariant-found",
            Verdict::Inconclusive(_) => "inconclusive",
        }
    }
}

enum SeedOutcome {
    Full,
    Proper(TruncatedSubspace),
    Unsettled(String),
}

/// Runs a closure from every monomial of the probe grid.
///
/// A closure that stops below the full grid without truncation loss is a
/// proper invariant subspace of the truncation. If loss occurred, the same
/// seed is rerun on a grid enlarged by two steps and the result is cut back
/// to the original grid; an unchanged dimension confirms the subspace,
/// anything else leaves the seed unsettled. When several proper subspaces
/// are found, the smallest is reported.
pub fn simplicity_probe(spec: &ModuleSpec, cfg: &ProbeConfig) -> Result<Verdict, ReprError> {
    let grid = Grid::for_family(spec.family(), cfg.deg_cap, cfg.weight_window);
    let big = Grid::for_family(spec.family(), cfg.deg_cap + 2, cfg.weight_window + 2);
    let seeds = grid.monomials();
    let outcomes: Vec<SeedOutcome> = seeds
        .par_iter()
        .map(|seed| -> Result<SeedOutcome, ReprError> {
            let sub = closure(
                spec,
                std::slice::from_ref(seed),
                &grid,
                cfg.window,
                cfg.max_rounds,
            )?;
            if sub.is_full() {
                return Ok(SeedOutcome::Full);
            }
            if !sub.converged {
                return Ok(SeedOutcome::Unsettled(format!(
                    "closure of {} did not stabilize",
                    render_vector(spec.family(), seed)
                )));
            }
            if !sub.truncation_loss {
                return Ok(SeedOutcome::Proper(sub));
            }
            let wide = closure(
                spec,
                std::slice::from_ref(seed),
                &big,
                cfg.window,
                cfg.max_rounds,
            )?;
            let cut = restrict(&wide, &grid);
            if wide.converged && cut.basis == sub.basis {
                Ok(SeedOutcome::Proper(sub))
            } else {
                Ok(SeedOutcome::Unsettled(format!(
                    "truncation loss and the enlarged grid changed the span ({} vs {})",
                    sub.dim(),
                    cut.dim()
                )))
            }
        })
        .collect::<Result<_, _>>()?;

    let mut best: Option<TruncatedSubspace> = None;
    let mut unsettled = None;
    for o in outcomes {
        match o {
            SeedOutcome::Full => {}
            SeedOutcome::Proper(sub) => {
                if best.as_ref().is_none_or(|b| sub.dim() < b.dim()) {
                    best = Some(sub);
                }
            }
            SeedOutcome::Unsettled(why) => {
                unsettled.get_or_insert(why);
            }
        }
    }
    Ok(match (best, unsettled) {
        (Some(sub), _) => Verdict::ProperInvariantFound(sub),
        (None, None) => Verdict::NoProperInvariantFound,
        (None, Some(why)) => Verdict::Inconclusive(why),
    })
}

/// The intersection of `sub` with the span of a smaller grid.
pub fn restrict(sub: &TruncatedSubspace, small: &Grid) -> TruncatedSubspace {
    let big = &sub.grid;
    // columns outside the small grid first, so pivots in the small part
    // mark rows lying entirely inside it
    let outside: Vec<usize> = (0..big.len())
        .filter(|&i| small.position(&big.cells()[i]).is_none())
        .collect();
    let inside: Vec<usize> = small
        .cells()
        .iter()
        .map(|c| {
            big.position(c)
                .expect("small grid is contained in the large one")
        })
        .collect();
    let order: Vec<usize> = outside.iter().chain(&inside).copied().collect();
    let mut ech = Echelon::new(order.len());
    for row in sub.basis.rows() {
        let permuted: Vec<Coefficient> = order.iter().map(|&i| row[i].clone()).collect();
        ech.insert(&permuted);
    }
    let mut basis = Echelon::new(small.len());
    for row in ech.rows() {
        if row[..outside.len()].iter().all(Coefficient::is_zero) {
            basis.insert(&row[outside.len()..]);
        }
    }
    TruncatedSubspace {
        grid: small.clone(),
        basis,
        truncation_loss: sub.truncation_loss,
        converged: sub.converged,
        rounds: sub.rounds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Assignment, Sign, Var};

    fn at(var: Var, value: Coefficient) -> Assignment {
        [(var, value)].into_iter().collect()
    }

    #[test]
    fn generic_seed_reaches_constant() {
        let spec = ModuleSpec::m(Sign::Plus);
        let grid = Grid::polynomial(6);
        let seed = ModuleVector::even(UPoly::monomial(2, Coefficient::one()));
        let sub = closure(&spec, &[seed], &grid, 2, 24).unwrap();
        assert!(sub.contains(&ModuleVector::even(UPoly::one())));
        assert!(sub.is_full());
    }

    #[test]
    fn upsilon_seed_stays_inside() {
        let spec = ModuleSpec::m(Sign::Plus)
            .specialize(&at(Var::A, Coefficient::zero()))
            .unwrap();
        let grid = Grid::polynomial(6);
        let sub = closure(&spec, &[ModuleVector::odd(UPoly::one())], &grid, 2, 24).unwrap();
        assert!(!sub.contains(&ModuleVector::even(UPoly::one())));
        assert_eq!(sub.dim(), grid.len() - 1);
    }

    #[test]
    fn empty_seed_list() {
        let sub = closure(&ModuleSpec::m(Sign::Plus), &[], &Grid::polynomial(2), 2, 4).unwrap();
        assert_eq!(sub.dim(), 0);
    }

    #[test]
    fn restrict_cuts_to_smaller_grid() {
        let big = Grid::polynomial(2);
        let small = Grid::polynomial(1);
        let v = |odd: bool, degree: usize| Coord::Poly { odd, degree }.vector(Coefficient::one());
        let sub = TruncatedSubspace::span(
            &big,
            &[v(false, 0), v(false, 1).add(&v(false, 2)), v(true, 1)],
        );
        let cut = restrict(&sub, &small);
        assert_eq!(cut.dim(), 2);
        assert!(cut.contains(&v(true, 1)));
    }
}
