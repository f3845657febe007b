use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::Partition;
use crate::error::{Error, Result};
use crate::params::GlobalParams;

/// A tuple of partitions `(λ^(0), ..., λ^(ell))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>, params: &GlobalParams) -> Result<Self> {
        if components.len() != params.ell + 1 {
            return Err(Error::ComponentCount {
                got: components.len(),
                expected: params.ell + 1,
            });
        }
        Ok(Self(components))
    }

    pub(crate) fn from_components(components: Vec<Partition>) -> Self {
        Self(components)
    }

    pub fn empty(params: &GlobalParams) -> Self {
        Self(vec![Partition::empty(); params.ell + 1])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn with_component(&self, i: usize, part: Partition) -> Self {
        let mut c = self.0.clone();
        c[i] = part;
        Self(c)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// The 0th component has distinct parts.
    pub fn is_strict(&self) -> bool {
        self.0[0].is_strict()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(Partition::to_string).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// `|`-separated partitions; the component count is checked by
    /// [`Multipartition::new`] when parameters are known.
    fn from_str(s: &str) -> Result<Self> {
        let comps = s.split('|').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        Ok(Self(comps))
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A composition `μ = (μ_1, ..., μ_n)` whose parts carry colors `j_r ∈ J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredComposition {
    mu: Vec<u32>,
    colors: Vec<usize>,
}

impl ColoredComposition {
    pub fn new(mu: Vec<u32>, colors: Vec<usize>, params: &GlobalParams) -> Result<Self> {
        if mu.len() != colors.len() {
            return Err(Error::InvalidComposition(format!(
                "{} parts but {} colors",
                mu.len(),
                colors.len()
            )));
        }
        for &j in &colors {
            params.check_color(j)?;
        }
        Ok(Self { mu, colors })
    }

    /// `ω_d = (1, ..., 1)` with the given colors.
    pub fn omega(colors: Vec<usize>, params: &GlobalParams) -> Result<Self> {
        Self::new(vec![1; colors.len()], colors, params)
    }

    /// Parses `"2,1/0,1"`.
    pub fn parse(s: &str, params: &GlobalParams) -> Result<Self> {
        let bad = || Error::Parse {
            what: "colored composition",
            input: s.to_string(),
        };
        let (m, c) = s.split_once('/').ok_or_else(bad)?;
        let mu = parse_list::<u32>(m).ok_or_else(bad)?;
        let colors = parse_list::<usize>(c).ok_or_else(bad)?;
        Self::new(mu, colors, params)
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn d(&self) -> u32 {
        self.mu.iter().sum()
    }

    pub fn parts(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.mu.iter().copied().zip(self.colors.iter().copied())
    }

    /// `Σ_{j_r = ell - 1} μ_r`
    pub fn top_color_weight(&self, params: &GlobalParams) -> u32 {
        self.parts()
            .filter(|&(_, j)| j + 1 == params.ell)
            .map(|(m, _)| m)
            .sum()
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.mu.iter().map(u32::to_string).collect();
        let c: Vec<String> = self.colors.iter().map(usize::to_string).collect();
        write!(f, "{}/{}", m.join(","), c.join(","))
    }
}

pub(crate) fn parse_list<T: FromStr>(s: &str) -> Option<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}
