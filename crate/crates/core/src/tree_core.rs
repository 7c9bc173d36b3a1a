// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Layered truncations of homogeneous trees.
//!
//! A [`LayeredTree`] keeps levels `0..=layers` of the rooted tree in which
//! every vertex has `branching` successors. The fixed end of the infinite
//! tree is the direction of predecessors continued past the root, so the
//! confluent of two vertices is their nearest common ancestor and every
//! Busemann value is an exact integer.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the number of vertices in the top level of a tree.
pub const DEFAULT_LEVEL_CAP: u64 = 1 << 20;

/// Vertex `index` (counted left to right) at horocycle `level`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct TreeAddress {
    pub level: u32,
    pub index: u64,
}

impl TreeAddress {
    pub const ROOT: TreeAddress = TreeAddress { level: 0, index: 0 };

    pub const fn new(level: u32, index: u64) -> Self {
        TreeAddress { level, index }
    }
}

impl fmt::Display for TreeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.index)
    }
}

/// Value of the Busemann function, in edge-length units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BusemannValue(pub i64);

impl BusemannValue {
    pub fn value(self) -> i64 {
        self.0
    }
}

/// `branching^exp`, or `None` on overflow.
pub(crate) fn checked_power(branching: u64, exp: u32) -> Option<u64> {
    branching.checked_pow(exp)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LayeredTree {
    branching: u64,
    layers: u32,
}

impl LayeredTree {
    pub fn new(branching: u64, layers: u32) -> Result<Self> {
        Self::with_level_cap(branching, layers, DEFAULT_LEVEL_CAP)
    }

    /// Like [`LayeredTree::new`] but rejects trees whose top level holds
    /// more than `cap` vertices.
    pub fn with_level_cap(branching: u64, layers: u32, cap: u64) -> Result<Self> {
        if branching < 2 {
            return Err(Error::InvalidBranching(branching));
        }
        if layers < 1 {
            return Err(Error::InvalidLayers(layers));
        }
        match checked_power(branching, layers) {
            Some(top) if top <= cap => Ok(LayeredTree { branching, layers }),
            count => Err(Error::CapExceeded {
                what: "tree level size",
                count,
                cap,
            }),
        }
    }

    pub fn branching(&self) -> u64 {
        self.branching
    }

    pub fn layers(&self) -> u32 {
        self.layers
    }

    /// Number of vertices at `level`; zero above the top level.
    pub fn level_size(&self, level: u32) -> u64 {
        if level > self.layers {
            0
        } else {
            // cannot overflow: bounded by the top level checked at construction
            self.branching.pow(level)
        }
    }

    pub fn vertex_count(&self) -> u64 {
        (0..=self.layers).map(|h| self.level_size(h)).sum()
    }

    pub fn contains(&self, a: TreeAddress) -> bool {
        a.level <= self.layers && a.index < self.level_size(a.level)
    }

    fn check(&self, a: TreeAddress) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::InvalidAddress {
                level: a.level,
                index: a.index,
            })
        }
    }

    /// All addresses in lexicographic `(level, index)` order.
    pub fn addresses(&self) -> impl Iterator<Item = TreeAddress> + '_ {
        (0..=self.layers)
            .flat_map(move |h| (0..self.level_size(h)).map(move |k| TreeAddress::new(h, k)))
    }

    /// The unique neighbour one level closer to the fixed end, or `None` at
    /// the root of the truncation.
    pub fn predecessor(&self, a: TreeAddress) -> Result<Option<TreeAddress>> {
        self.check(a)?;
        Ok(self.parent_unchecked(a))
    }

    fn parent_unchecked(&self, a: TreeAddress) -> Option<TreeAddress> {
        (a.level > 0).then(|| TreeAddress::new(a.level - 1, a.index / self.branching))
    }

    /// Successors of `a` from left to right; empty at the top level.
    pub fn successors(&self, a: TreeAddress) -> Result<Vec<TreeAddress>> {
        self.check(a)?;
        if a.level == self.layers {
            return Ok(Vec::new());
        }
        let first = a.index * self.branching;
        Ok((0..self.branching)
            .map(|c| TreeAddress::new(a.level + 1, first + c))
            .collect())
    }

    /// Ancestor of `a` at `level`, which must not exceed `a.level`.
    fn lift(&self, a: TreeAddress, level: u32) -> TreeAddress {
        debug_assert!(level <= a.level);
        let steps = a.level - level;
        // b^steps can overflow u64 only beyond the top-level cap
        let index = match checked_power(self.branching, steps) {
            Some(div) => a.index / div,
            None => 0,
        };
        TreeAddress::new(level, index)
    }

    /// Vertex where the geodesics from `a` and `b` towards the fixed end
    /// meet: the deepest common vertex of both predecessor chains.
    pub fn confluent(&self, a: TreeAddress, b: TreeAddress) -> Result<TreeAddress> {
        self.check(a)?;
        self.check(b)?;
        let level = a.level.min(b.level);
        let (mut x, mut y) = (self.lift(a, level), self.lift(b, level));
        while x != y {
            // both are non-root here: distinct vertices at level 0 do not exist
            x = self.parent_unchecked(x).expect("chains meet at the root");
            y = self.parent_unchecked(y).expect("chains meet at the root");
        }
        Ok(x)
    }

    pub fn distance(&self, a: TreeAddress, b: TreeAddress) -> Result<u32> {
        let c = self.confluent(a, b)?;
        Ok((a.level - c.level) + (b.level - c.level))
    }

    /// `d(x, x⋏o) − d(o, x⋏o)` for basepoint `o`.
    pub fn busemann(&self, x: TreeAddress, o: TreeAddress) -> Result<BusemannValue> {
        let c = self.confluent(x, o)?;
        let up = self.distance(x, c)?;
        let down = self.distance(o, c)?;
        Ok(BusemannValue(i64::from(up) - i64::from(down)))
    }

    /// Every truncation vertex on the horocycle `H_k` relative to `o`,
    /// sorted by `(level, index)`.
    pub fn horocycle(&self, o: TreeAddress, k: i64) -> Result<Vec<TreeAddress>> {
        self.check(o)?;
        let mut out = Vec::new();
        for x in self.addresses() {
            if self.busemann(x, o)?.value() == k {
                out.push(x);
            }
        }
        Ok(out)
    }
}
