//! Braid words and the two canonical positive words of a Lorenz link.
//!
//! Letters are nonzero integers: `i` is the positive generator crossing
//! strands i and i+1, `-i` its inverse. Strand positions are 1-based.

use crate::lorenz::{Shuffle, TLinkParams};
use crate::permutation::Permutation;
use crate::planar::{Crossing, PlanarDiagram};
use crate::Error;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    word: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;
    fn try_from(raw: RawBraid) -> Result<Self, Error> {
        BraidWord::new(raw.strands, raw.word)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> RawBraid {
        RawBraid {
            strands: b.strands,
            word: b.word,
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, Error> {
        if strands < 1 {
            return Err(Error::InvalidBraid("need at least one strand".into()));
        }
        for &l in &word {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > strands - 1 {
                return Err(Error::InvalidBraid(format!(
                    "letter {} out of range for {} strands",
                    l, strands
                )));
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.word.iter().all(|&l| l > 0)
    }

    /// Sum of letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.word.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Where each strand ends: the letter at index i swaps the strands
    /// currently occupying positions i and i+1, read left to right.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        // at_pos[p] = strand currently at position p+1
        let mut at_pos: Vec<usize> = (1..=n).collect();
        for &l in &self.word {
            let i = l.unsigned_abs() as usize;
            at_pos.swap(i - 1, i);
        }
        let mut images = vec![0; n];
        for (pos, &strand) in at_pos.iter().enumerate() {
            images[strand - 1] = pos + 1;
        }
        Permutation::new(images).expect("position tracking yields a bijection")
    }

    /// Component count of the closed braid.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Euler characteristic of the surface obtained from the closure of a
    /// positive word: one disk per strand, one band per letter.
    pub fn positive_euler_characteristic(&self) -> Result<i64, Error> {
        if !self.is_positive() {
            return Err(Error::NegativeLetter);
        }
        Ok(self.strands as i64 - self.word.len() as i64)
    }

    /// Planar diagram of the braid closure: one crossing per letter, signs
    /// taken from the letters, strands closed off position-wise.
    pub fn closure_planar(&self) -> PlanarDiagram {
        let n = self.strands;
        if self.word.is_empty() {
            return PlanarDiagram::unknotted_loops(n);
        }
        // Arc ids are handed out as the word is scanned; closure then
        // renames each top arc to the bottom arc at the same position.
        let mut next_arc = n; // arcs 0..n are the bottom segments
        let mut current: Vec<usize> = (0..n).collect();
        struct SlotRec {
            over_in: usize,
            over_out: usize,
            under_in: usize,
            under_out: usize,
            sign: i8,
        }
        let mut recs: Vec<SlotRec> = Vec::with_capacity(self.word.len());
        for &l in &self.word {
            let i = l.unsigned_abs() as usize; // positions i, i+1
            let (x, y) = (current[i - 1], current[i]);
            let (u, v) = (next_arc, next_arc + 1);
            next_arc += 2;
            current[i - 1] = u;
            current[i] = v;
            if l > 0 {
                // positive: the strand entering at position i+1 is on top
                recs.push(SlotRec {
                    over_in: y,
                    over_out: u,
                    under_in: x,
                    under_out: v,
                    sign: 1,
                });
            } else {
                recs.push(SlotRec {
                    over_in: x,
                    over_out: v,
                    under_in: y,
                    under_out: u,
                    sign: -1,
                });
            }
        }
        // Close up: the arc leaving the top at position p is the same arc
        // as the one entering the bottom at position p.
        let mut rename: Vec<usize> = (0..next_arc).collect();
        for p in 0..n {
            rename[current[p]] = p;
        }
        // A strand position never touched by a letter closes into a loop
        // with no crossings on it.
        let mut touched = vec![false; n];
        for &l in &self.word {
            let i = l.unsigned_abs() as usize;
            touched[i - 1] = true;
            touched[i] = true;
        }
        let free_loops = touched.iter().filter(|&&t| !t).count();

        // Compact arc ids to 0..num_arcs over the used arcs.
        let mut compact = vec![usize::MAX; next_arc];
        let mut num_arcs = 0;
        let mut crossings = Vec::with_capacity(recs.len());
        {
            let mut id = |arc: usize, compact: &mut Vec<usize>| {
                let a = rename[arc];
                if compact[a] == usize::MAX {
                    compact[a] = num_arcs;
                    num_arcs += 1;
                }
                compact[a]
            };
            for r in &recs {
                crossings.push(Crossing {
                    over_in: id(r.over_in, &mut compact),
                    over_out: id(r.over_out, &mut compact),
                    under_in: id(r.under_in, &mut compact),
                    under_out: id(r.under_out, &mut compact),
                    sign: r.sign,
                });
            }
        }
        let d = PlanarDiagram {
            num_arcs,
            crossings,
            free_loops,
        };
        debug_assert!(d.is_well_formed());
        d
    }

    /// Text form `s1 s2 s1`, with a `'` suffix marking an inverse letter.
    pub fn text(&self) -> String {
        self.word
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("s{}", l)
                } else {
                    format!("s{}'", -l)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The T-link braid word on p_s strands:
/// `(s1...s(p1-1))^q1 ... (s1...s(ps-1))^qs`.
pub fn tlink_word(t: &TLinkParams) -> BraidWord {
    let strands = t.p_max() as usize;
    let mut word = Vec::new();
    for &(p, q) in t.pairs() {
        for _ in 0..q {
            for i in 1..p {
                word.push(i as i32);
            }
        }
    }
    BraidWord::new(strands, word).expect("T-link letters stay in range")
}

/// The Lorenz braid word on n strands: for i = k down to 1 emit
/// `s_i s_(i+1) ... s_(sigma(i)-1)`. Its permutation is the shuffle itself
/// and every pair of strands crosses at most once.
pub fn lorenz_word(s: &Shuffle) -> BraidWord {
    let mut word = Vec::new();
    for i in (1..=s.k()).rev() {
        for j in i..s.apply(i) {
            word.push(j as i32);
        }
    }
    BraidWord::new(s.n(), word).expect("Lorenz letters stay in range")
}
