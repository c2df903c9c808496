//! Lorenz vectors, T-link parameters, and the shuffles behind them.
//!
//! A shuffle is a permutation of {1,...,n} that is increasing on 1..=k and
//! on k+1..=n and fixes no point; equivalently sigma(i) > i exactly on the
//! first block. Its Lorenz vector is `<sigma(1)-1, ..., sigma(k)-k>`, a
//! nondecreasing list of positive integers, and run-length encoding that
//! vector gives the T-link parameters `((p_1,q_1),...,(p_s,q_s))`.

use crate::permutation::Permutation;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Nondecreasing positive entries; always nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct LorenzVector {
    entries: Vec<u32>,
}

impl TryFrom<Vec<u32>> for LorenzVector {
    type Error = Error;
    fn try_from(entries: Vec<u32>) -> Result<Self, Error> {
        LorenzVector::new(entries)
    }
}

impl From<LorenzVector> for Vec<u32> {
    fn from(v: LorenzVector) -> Vec<u32> {
        v.entries
    }
}

impl LorenzVector {
    pub fn new(entries: Vec<u32>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::InvalidVector("no entries".into()));
        }
        if entries.iter().any(|&e| e == 0) {
            return Err(Error::InvalidVector("entries must be positive".into()));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidVector(format!(
                "entries {:?} are not nondecreasing",
                entries
            )));
        }
        Ok(LorenzVector { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Block count k (number of entries).
    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn sum(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Run-length encoding: `<3,3,3,3,5,5,5>` becomes `((3,4),(5,3))`.
    pub fn compress(&self) -> TLinkParams {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for &e in &self.entries {
            match pairs.last_mut() {
                Some((p, q)) if *p == e => *q += 1,
                _ => pairs.push((e, 1)),
            }
        }
        TLinkParams::new(pairs).expect("run-length encoding of a valid vector")
    }

    /// The shuffle with this Lorenz vector: sigma(i) = i + v_i on the first
    /// block, and the complement listed in increasing order after it.
    pub fn shuffle(&self) -> Shuffle {
        let k = self.k();
        let n = k + self.entries[k - 1] as usize;
        let mut images = Vec::with_capacity(n);
        let mut taken = vec![false; n + 1];
        for (i, &v) in self.entries.iter().enumerate() {
            let im = i + 1 + v as usize;
            images.push(im);
            taken[im] = true;
        }
        for im in 1..=n {
            if !taken[im] {
                images.push(im);
            }
        }
        Shuffle::new(images, k).expect("a valid vector always yields a shuffle")
    }

    /// Compressed text form, e.g. `3^4,5^3`.
    pub fn spec_string(&self) -> String {
        self.compress()
            .pairs()
            .iter()
            .map(|&(p, q)| {
                if q == 1 {
                    p.to_string()
                } else {
                    format!("{}^{}", p, q)
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for LorenzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// T-link parameters: strictly increasing p, multiplicities q >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct TLinkParams {
    pairs: Vec<(u32, u32)>,
}

impl TryFrom<Vec<(u32, u32)>> for TLinkParams {
    type Error = Error;
    fn try_from(pairs: Vec<(u32, u32)>) -> Result<Self, Error> {
        TLinkParams::new(pairs)
    }
}

impl From<TLinkParams> for Vec<(u32, u32)> {
    fn from(t: TLinkParams) -> Vec<(u32, u32)> {
        t.pairs
    }
}

impl TLinkParams {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self, Error> {
        if pairs.is_empty() {
            return Err(Error::InvalidTLink("no pairs".into()));
        }
        if pairs.iter().any(|&(p, _)| p == 0) {
            return Err(Error::InvalidTLink("p values must be positive".into()));
        }
        if pairs.iter().any(|&(_, q)| q == 0) {
            return Err(Error::InvalidTLink("q values must be at least 1".into()));
        }
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidTLink(format!(
                "p values in {:?} must be strictly increasing",
                pairs
            )));
        }
        Ok(TLinkParams { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Expands back to the vector: each (p,q) contributes q copies of p.
    pub fn decompress(&self) -> LorenzVector {
        let mut entries = Vec::new();
        for &(p, q) in &self.pairs {
            entries.extend(std::iter::repeat(p).take(q as usize));
        }
        LorenzVector::new(entries).expect("decompression of valid parameters")
    }

    /// k = sum of the multiplicities.
    pub fn k(&self) -> usize {
        self.pairs.iter().map(|&(_, q)| q as usize).sum()
    }

    pub fn p_max(&self) -> u32 {
        self.pairs.last().unwrap().0
    }

    /// Strand count of the Lorenz braid: k + p_s.
    pub fn lorenz_strand_count(&self) -> usize {
        self.k() + self.p_max() as usize
    }

    pub fn spec_string(&self) -> String {
        self.pairs
            .iter()
            .map(|&(p, q)| format!("({},{})", p, q))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for TLinkParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

/// A fixpoint-free two-block shuffle together with its block split k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawShuffle", into = "RawShuffle")]
pub struct Shuffle {
    perm: Permutation,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct RawShuffle {
    images: Vec<usize>,
    k: usize,
}

impl TryFrom<RawShuffle> for Shuffle {
    type Error = Error;
    fn try_from(raw: RawShuffle) -> Result<Self, Error> {
        Shuffle::new(raw.images, raw.k)
    }
}

impl From<Shuffle> for RawShuffle {
    fn from(s: Shuffle) -> RawShuffle {
        RawShuffle {
            images: s.perm.images().to_vec(),
            k: s.k,
        }
    }
}

impl Shuffle {
    pub fn new(images: Vec<usize>, k: usize) -> Result<Self, Error> {
        let perm = Permutation::new(images)?;
        let n = perm.n();
        if k < 1 || k >= n {
            return Err(Error::InvalidShuffle(format!(
                "block split k={} out of range for n={}",
                k, n
            )));
        }
        for i in 1..=n {
            if perm.apply(i) == i {
                return Err(Error::InvalidShuffle(format!("fixpoint at {}", i)));
            }
        }
        for i in 1..n {
            if i != k && perm.apply(i) > perm.apply(i + 1) {
                return Err(Error::InvalidShuffle(format!(
                    "images must increase within each block; descent at {}",
                    i
                )));
            }
        }
        // With both blocks increasing and no fixpoints, sigma(i) > i holds
        // exactly on the first block; check it anyway.
        for i in 1..=n {
            let up = perm.apply(i) > i;
            if up != (i <= k) {
                return Err(Error::InvalidShuffle(format!(
                    "sigma({}) = {} on the wrong side of the diagonal for k={}",
                    i,
                    perm.apply(i),
                    k
                )));
            }
        }
        Ok(Shuffle { perm, k })
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm.apply(i)
    }

    pub fn images(&self) -> &[usize] {
        self.perm.images()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// Reads the Lorenz vector off the first block.
    pub fn vector(&self) -> LorenzVector {
        let entries = (1..=self.k).map(|i| (self.apply(i) - i) as u32).collect();
        LorenzVector::new(entries).expect("first block of a shuffle is nondecreasing")
    }
}
