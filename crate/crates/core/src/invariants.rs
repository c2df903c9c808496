//! Link invariants computed from braid words and planar diagrams.
//!
//! The Alexander polynomial comes from the reduced Burau representation:
//! with D(t) = det(I - rho(w)) for a braid word w on n strands, the closure
//! satisfies Delta(t) * (1 - t^n) = D(t) * (1 - t) up to units, and the
//! division on the right is exact in integer Laurent arithmetic. The
//! Kauffman bracket is the full 2^c state sum; exceeding the crossing cap
//! yields an explicit skip marker, never a truncated value.

use crate::braid::BraidWord;
use crate::grid::GridDiagram;
use crate::laurent::LaurentPoly;
use crate::planar::{Dsu, PlanarDiagram};
use crate::Error;
use serde::{Deserialize, Serialize};

pub const DEFAULT_BRACKET_CROSSING_LIMIT: usize = 22;

// ---- Burau and Alexander ----

/// Reduced Burau matrix of the word: the generator s_i maps to the
/// identity except for row i, which has t at column i-1, -t at column i,
/// and 1 at column i+1 (1-based, size (n-1) x (n-1)). Inverse letters use
/// the inverse matrix.
pub fn burau_reduced(w: &BraidWord) -> Result<Vec<Vec<LaurentPoly>>, Error> {
    let n = w.strands();
    if n < 2 {
        return Err(Error::TooFewStrands(n));
    }
    let m = n - 1;
    let t = LaurentPoly::var();
    let t_inv = LaurentPoly::monomial(1, -1);
    // Right-multiplying by a generator only touches columns i-1, i, i+1.
    let mut rows: Vec<Vec<LaurentPoly>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    for &l in w.word() {
        let i = l.unsigned_abs() as usize; // letter index, 1-based
        let col = i - 1; // 0-based column of the pivot
        for row in rows.iter_mut() {
            let c = row[col].clone();
            if c.is_zero() {
                continue;
            }
            if l > 0 {
                // columns: i-1 += t*c, i+1 += c, i = -t*c
                if col >= 1 {
                    row[col - 1] = &row[col - 1] + &(&t * &c);
                }
                if col + 1 < m {
                    row[col + 1] = &row[col + 1] + &c;
                }
                row[col] = -&(&t * &c);
            } else {
                // inverse generator: i-1 += c, i+1 += t^-1*c, i = -t^-1*c
                if col >= 1 {
                    row[col - 1] = &row[col - 1] + &c;
                }
                if col + 1 < m {
                    row[col + 1] = &row[col + 1] + &(&t_inv * &c);
                }
                row[col] = -&(&t_inv * &c);
            }
        }
    }
    Ok(rows)
}

/// Fraction-free determinant (Bareiss); every interior division is exact.
pub fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly, Error> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// Alexander polynomial of the braid closure, canonicalized to minimum
/// degree 0 with positive lowest coefficient. The zero polynomial comes
/// back for split closures such as unlinks.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly, Error> {
    let n = w.strands();
    if n == 1 {
        // a one-strand braid is the empty word; its closure is the unknot
        return Ok(LaurentPoly::one());
    }
    let burau = burau_reduced(w)?;
    let mut mat = burau;
    for (i, row) in mat.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let neg = -&*entry;
            *entry = if i == j {
                &LaurentPoly::one() + &neg
            } else {
                neg
            };
        }
    }
    let d = determinant(mat)?;
    let one = LaurentPoly::one();
    let t = LaurentPoly::var();
    let numer = &d * &(&one - &t);
    let denom = &one - &LaurentPoly::monomial(1, n as i64);
    if numer.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let delta = numer.div_exact(&denom)?;
    Ok(delta.canonical_unit_form())
}

// ---- Kauffman bracket ----

/// Either a computed polynomial or a marker explaining why the state sum
/// was not run. A `limit` of 0 records an explicitly disabled computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bracket {
    Computed(LaurentPoly),
    Skipped { crossings: usize, limit: usize },
}

impl Bracket {
    pub fn computed(&self) -> Option<&LaurentPoly> {
        match self {
            Bracket::Computed(p) => Some(p),
            Bracket::Skipped { .. } => None,
        }
    }
}

/// Kauffman bracket in the variable A via the 2^c state sum with
/// delta = -A^2 - A^-2. At a positive crossing the A-smoothing joins
/// over-in with under-out and over-out with under-in; at a negative
/// crossing the pairings swap. Diagrams beyond the crossing cap are
/// reported as skipped.
pub fn kauffman_bracket(d: &PlanarDiagram, limit: usize) -> Bracket {
    let c = d.crossing_count();
    if c > limit {
        return Bracket::Skipped {
            crossings: c,
            limit,
        };
    }
    if c == 0 {
        if d.free_loops == 0 {
            return Bracket::Computed(LaurentPoly::one());
        }
        let delta = delta_poly();
        return Bracket::Computed(delta.pow(d.free_loops as u32 - 1));
    }
    // Tally states by (A-count minus B-count, loop count), then expand.
    let max_loops = d.num_arcs + d.free_loops;
    let mut counts = vec![vec![0i64; max_loops + 1]; 2 * c + 1];
    let mut dsu = Dsu::new(d.num_arcs);
    for state in 0u64..(1u64 << c) {
        dsu.reset();
        let mut a_count = 0usize;
        for (idx, cr) in d.crossings.iter().enumerate() {
            let a_here = state >> idx & 1 == 0;
            if a_here {
                a_count += 1;
            }
            // positive-A and negative-B share a pairing, and vice versa
            if a_here == (cr.sign > 0) {
                dsu.union(cr.over_in, cr.under_out);
                dsu.union(cr.over_out, cr.under_in);
            } else {
                dsu.union(cr.over_in, cr.under_in);
                dsu.union(cr.over_out, cr.under_out);
            }
        }
        let loops = dsu.class_count() + d.free_loops;
        counts[a_count][loops] += 1;
    }
    let delta = delta_poly();
    let mut delta_pows = Vec::with_capacity(max_loops);
    delta_pows.push(LaurentPoly::one());
    for _ in 1..max_loops {
        delta_pows.push(&delta * delta_pows.last().unwrap());
    }
    let mut total = LaurentPoly::zero();
    for (a_count, by_loops) in counts.iter().enumerate() {
        for (loops, &cnt) in by_loops.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            let exp = 2 * a_count as i64 - c as i64; // a - b
            let term = &LaurentPoly::monomial(cnt, exp) * &delta_pows[loops - 1];
            total = &total + &term;
        }
    }
    Bracket::Computed(total)
}

fn delta_poly() -> LaurentPoly {
    // -A^2 - A^-2
    LaurentPoly::from_coeffs(-2, vec![-1, 0, 0, 0, -1])
}

/// Substitutes t = A^-4 into a normalized bracket, giving the Jones
/// polynomial in t. Only defined when every exponent is divisible by 4;
/// links with an even component count land on half-integer powers and
/// return None.
pub fn jones_in_t(f: &LaurentPoly) -> Option<LaurentPoly> {
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let Some(min) = f.min_degree() else {
        return Some(LaurentPoly::zero());
    };
    for (i, &c) in f.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let e = min + i as i64;
        if e % 4 != 0 {
            return None;
        }
        terms.push((-e / 4, c));
    }
    let lo = terms.iter().map(|&(d, _)| d).min().unwrap();
    let hi = terms.iter().map(|&(d, _)| d).max().unwrap();
    let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
    for (d, c) in terms {
        coeffs[(d - lo) as usize] = c;
    }
    Some(LaurentPoly::from_coeffs(lo, coeffs))
}

/// Writhe-normalized bracket f = (-A^3)^(-w) * <D>, an invariant of the
/// oriented link. Equals the Jones polynomial after t = A^-4.
pub fn normalized_f(d: &PlanarDiagram, limit: usize) -> Bracket {
    match kauffman_bracket(d, limit) {
        Bracket::Computed(p) => {
            let w = d.writhe();
            let sign = if w % 2 == 0 { 1 } else { -1 };
            let factor = LaurentPoly::monomial(sign, -3 * w);
            Bracket::Computed(&factor * &p)
        }
        skipped => skipped,
    }
}

// ---- genus ----

/// Genus of a connected Seifert surface with the given Euler
/// characteristic and boundary-component count: g = (2 - mu - chi) / 2.
pub fn genus_from_euler(chi: i64, components: usize) -> Result<i64, Error> {
    let num = 2 - components as i64 - chi;
    if num % 2 != 0 {
        return Err(Error::GenusFormula {
            chi,
            components,
            reason: "odd",
        });
    }
    if num < 0 {
        return Err(Error::GenusFormula {
            chi,
            components,
            reason: "negative",
        });
    }
    Ok(num / 2)
}

// ---- reports ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Source {
    #[serde(rename = "lorenz-braid")]
    LorenzBraid,
    #[serde(rename = "t-braid")]
    TBraid,
    #[serde(rename = "grid")]
    Grid,
}

impl Source {
    pub fn label(&self) -> &'static str {
        match self {
            Source::LorenzBraid => "lorenz-braid",
            Source::TBraid => "t-braid",
            Source::Grid => "grid",
        }
    }
}

/// One representation of an instance, ready for invariant extraction.
pub enum ReportSource {
    LorenzBraid(BraidWord),
    TBraid(BraidWord),
    Grid(GridDiagram),
}

#[derive(Clone, Copy, Debug)]
pub struct InvariantOptions {
    pub max_bracket_crossings: usize,
    pub skip_jones: bool,
    pub skip_alexander: bool,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions {
            max_bracket_crossings: DEFAULT_BRACKET_CROSSING_LIMIT,
            skip_jones: false,
            skip_alexander: false,
        }
    }
}

/// Invariants of one representation. Braid sources carry the surface data
/// and the Alexander polynomial; the grid source only has a diagram, so it
/// reports components and the normalized bracket.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub source: Source,
    pub components: usize,
    pub euler_characteristic: Option<i64>,
    pub genus: Option<i64>,
    pub alexander: Option<LaurentPoly>,
    pub kauffman_f: Bracket,
}

pub fn full_report(src: &ReportSource, opts: &InvariantOptions) -> Result<InvariantReport, Error> {
    let (source, diagram, components, chi, alex) = match src {
        ReportSource::LorenzBraid(w) | ReportSource::TBraid(w) => {
            let source = match src {
                ReportSource::LorenzBraid(_) => Source::LorenzBraid,
                _ => Source::TBraid,
            };
            let chi = if w.is_positive() {
                Some(w.positive_euler_characteristic()?)
            } else {
                None
            };
            let alex = if opts.skip_alexander {
                None
            } else {
                Some(alexander(w)?)
            };
            (
                source,
                w.closure_planar(),
                w.closure_components(),
                chi,
                alex,
            )
        }
        ReportSource::Grid(g) => (Source::Grid, g.to_planar(), g.components(), None, None),
    };
    let genus = match chi {
        Some(chi) => Some(genus_from_euler(chi, components)?),
        None => None,
    };
    let kauffman_f = if opts.skip_jones {
        Bracket::Skipped {
            crossings: diagram.crossing_count(),
            limit: 0,
        }
    } else {
        normalized_f(&diagram, opts.max_bracket_crossings)
    };
    Ok(InvariantReport {
        source,
        components,
        euler_characteristic: chi,
        genus,
        alexander: alex,
        kauffman_f,
    })
}
