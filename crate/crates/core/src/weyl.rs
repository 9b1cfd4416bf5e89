//! Weyl-group operations on weights in Dynkin labels: simple reflections,
//! dominant representatives, orbits and the duality involution.

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Result of moving a weight to the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantRep {
    pub weight: Weight,
    /// Number of simple reflections applied.
    pub length: usize,
    /// `(-1)^length`, or `0` if the dominant representative lies on a wall.
    pub sign: i64,
}

impl RootSystem {
    /// Simple reflection `s_i` (0-based index) acting on Dynkin labels.
    pub fn reflect(&self, w: &Weight, i: usize) -> Result<Weight> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        let mut out = w.0.clone();
        let li = w.0[i];
        if li != 0 {
            for (j, x) in out.iter_mut().enumerate() {
                *x -= li * self.cartan[i][j];
            }
        }
        Ok(Weight(out))
    }

    /// The dominant representative of the Weyl orbit of `w`, with the
    /// number of reflections used and the associated sign.
    pub fn to_dominant(&self, w: &Weight) -> DominantRep {
        let mut cur = w.0.clone();
        let mut length = 0usize;
        loop {
            // most negative label, lowest index on ties
            let mut best: Option<(usize, i64)> = None;
            for (i, &x) in cur.iter().enumerate() {
                if x < 0 && best.map_or(true, |(_, b)| x < b) {
                    best = Some((i, x));
                }
            }
            let Some((i, li)) = best else { break };
            for (j, x) in cur.iter_mut().enumerate() {
                *x -= li * self.cartan[i][j];
            }
            length += 1;
        }
        let sign = if cur.contains(&0) {
            0
        } else if length % 2 == 0 {
            1
        } else {
            -1
        };
        DominantRep { weight: Weight(cur), length, sign }
    }

    /// The duality involution: the dominant representative of `-w`.
    /// For a dominant `w` this is the highest weight of the dual of the
    /// irreducible with highest weight `w`.
    pub fn dagger(&self, w: &Weight) -> Weight {
        let neg = Weight(w.0.iter().map(|&x| -x).collect());
        self.to_dominant(&neg).weight
    }

    /// Full Weyl orbit of a weight, failing once it would exceed `cap`.
    pub fn orbit(&self, w: &Weight, cap: usize) -> Result<Vec<Weight>> {
        let start = self.to_dominant(w).weight;
        let mut seen = std::collections::HashSet::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(start.0.clone());
        queue.push_back(start.0.clone());
        let mut out = Vec::new();
        while let Some(cur) = queue.pop_front() {
            out.push(Weight(cur.clone()));
            for i in 0..self.rank {
                let li = cur[i];
                if li != 0 {
                    let mut next = cur.clone();
                    for (j, x) in next.iter_mut().enumerate() {
                        *x -= li * self.cartan[i][j];
                    }
                    if !seen.contains(&next) {
                        if seen.len() >= cap {
                            return Err(Error::OrbitCapExceeded { cap });
                        }
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(out)
    }
}
