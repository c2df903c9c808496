//! Planar link diagrams as 4-valent graphs.
//!
//! An arc is an edge segment running from one crossing slot to another;
//! every arc id appears exactly twice across all crossing slots (once
//! leaving a crossing, once entering one). Closed components that meet no
//! crossing are tallied separately in `free_loops`.

use serde::{Deserialize, Serialize};

pub type ArcId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub over_in: ArcId,
    pub over_out: ArcId,
    pub under_in: ArcId,
    pub under_out: ArcId,
    /// +1 or -1; positive means rotating the under direction a quarter turn
    /// counterclockwise gives the over direction.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub num_arcs: usize,
    pub crossings: Vec<Crossing>,
    pub free_loops: usize,
}

impl PlanarDiagram {
    /// A diagram with no crossings: `loops` disjoint circles.
    pub fn unknotted_loops(loops: usize) -> Self {
        PlanarDiagram {
            num_arcs: 0,
            crossings: Vec::new(),
            free_loops: loops,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Checks 4-valence: every arc id below `num_arcs`, each appearing in
    /// exactly two slots.
    pub fn is_well_formed(&self) -> bool {
        let mut uses = vec![0usize; self.num_arcs];
        for c in &self.crossings {
            for arc in [c.over_in, c.over_out, c.under_in, c.under_out] {
                if arc >= self.num_arcs {
                    return false;
                }
                uses[arc] += 1;
            }
            if c.sign != 1 && c.sign != -1 {
                return false;
            }
        }
        uses.iter().all(|&u| u == 2)
    }

    /// Number of link components: arcs connected through crossings, plus
    /// the crossing-free loops.
    pub fn components(&self) -> usize {
        let mut dsu = Dsu::new(self.num_arcs);
        for c in &self.crossings {
            dsu.union(c.over_in, c.over_out);
            dsu.union(c.under_in, c.under_out);
        }
        dsu.class_count() + self.free_loops
    }
}

/// Disjoint-set union with path halving.
pub(crate) struct Dsu {
    parent: Vec<usize>,
    classes: usize,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            classes: n,
        }
    }

    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.classes = self.parent.len();
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
            self.classes -= 1;
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }
}
