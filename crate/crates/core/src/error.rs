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

use thiserror::Error;

use crate::dl_graph::DLVertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("branching must be at least 2, got {0}")]
    InvalidBranching(u64),
    #[error("layers must be at least 1, got {0}")]
    InvalidLayers(u32),
    /// `count` is `None` when the count does not even fit in a `u64`.
    #[error("{what} ({}) exceeds the cap of {cap}", count.map_or_else(|| "overflow".to_string(), |c| c.to_string()))]
    CapExceeded {
        what: &'static str,
        count: Option<u64>,
        cap: u64,
    },
    #[error("tree address (level {level}, index {index}) is outside the truncation")]
    InvalidAddress { level: u32, index: u64 },
    #[error("vertex {0} is outside the truncation")]
    InvalidVertex(DLVertex),
    #[error("ball radius {radius} needs at least {} layers, graph has {layers}", 2 * radius)]
    RadiusTooLarge { radius: u32, layers: u32 },
    #[error("ball radius must be between 1 and {max}, got {radius}")]
    InvalidRadius { radius: u32, max: u32 },
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
