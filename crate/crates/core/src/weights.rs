use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, Element};
use crate::rational::{self, Rational};

/// Exact rational weight per ground-set element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMap {
    assoc: BTreeMap<Element, Rational>,
}

impl WeightMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(ground: &[Element], gamma: &Rational) -> Self {
        WeightMap {
            assoc: ground.iter().map(|&e| (e, gamma.clone())).collect(),
        }
    }

    /// Weights listed in ground-set order.
    pub fn from_values(ground: &[Element], values: Vec<Rational>) -> Result<Self> {
        if ground.len() != values.len() {
            return Err(Error::input(format!(
                "{} weights for {} elements",
                values.len(),
                ground.len()
            )));
        }
        Ok(WeightMap {
            assoc: ground.iter().copied().zip(values).collect(),
        })
    }

    /// One rational per line, column order; blank and `#` lines ignored.
    pub fn parse(ground: &[Element], text: &str) -> Result<Self> {
        let values = crate::gf2::content_lines(text)
            .map(rational::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::from_values(ground, values)
    }

    pub fn get(&self, e: Element) -> Option<&Rational> {
        self.assoc.get(&e)
    }

    pub fn insert(&mut self, e: Element, w: Rational) {
        self.assoc.insert(e, w);
    }

    pub fn remove(&mut self, e: Element) -> Option<Rational> {
        self.assoc.remove(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, &Rational)> {
        self.assoc.iter()
    }

    /// Weights of `m`'s columns in column order; fails unless total on the ground set.
    pub fn column_weights(&self, m: &BinaryMatroid) -> Result<Vec<Rational>> {
        self.for_elements(m.ground())
    }

    pub fn for_elements(&self, ground: &[Element]) -> Result<Vec<Rational>> {
        ground
            .iter()
            .map(|e| {
                self.assoc
                    .get(e)
                    .cloned()
                    .ok_or_else(|| Error::input(format!("no weight for element {e}")))
            })
            .collect()
    }

    /// The common weight if every listed element carries the same one.
    pub fn constant_on(&self, ground: &[Element]) -> Option<Rational> {
        let first = self.assoc.get(ground.first()?)?;
        ground
            .iter()
            .all(|e| self.assoc.get(e) == Some(first))
            .then(|| first.clone())
    }

    pub fn product_on(&self, ground: &[Element]) -> Result<Rational> {
        Ok(self
            .for_elements(ground)?
            .iter()
            .fold(Rational::one(), |acc, w| acc * w))
    }

    /// Maps every weight through `f`.
    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        WeightMap {
            assoc: self.assoc.iter().map(|(e, w)| (*e, f(w))).collect(),
        }
    }

    pub fn has_zero(&self) -> bool {
        self.assoc.values().any(Zero::is_zero)
    }

    pub fn to_text(&self, ground: &[Element]) -> Result<String> {
        Ok(self
            .for_elements(ground)?
            .iter()
            .map(|w| rational::format(w) + "\n")
            .collect())
    }
}
