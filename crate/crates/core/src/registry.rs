//! Shared cache of constructed root systems and algebras. Construction is
//! deterministic and the values are immutable, so caching is transparent;
//! it just avoids rebuilding E₈ for every check that touches it.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::chevalley::{chevalley_algebra, compact_form, LieAlgebra};
use crate::error::Result;
use crate::rootsystem::{build_root_system, cartan_matrix, RootSystem, TypeLetter};

#[derive(Default)]
pub struct AlgebraCache {
    systems: RwLock<HashMap<(char, usize), Arc<RootSystem>>>,
    chevalley: RwLock<HashMap<(char, usize), Arc<LieAlgebra>>>,
    compact: RwLock<HashMap<(char, usize), Arc<LieAlgebra>>>,
}

/// The valid simple types with rank at most `ceiling`, plus the
/// exceptional types: the working set of the verification suites.
pub fn standard_types(ceiling: usize) -> Vec<(TypeLetter, usize)> {
    let mut out = Vec::new();
    for r in 1..=ceiling {
        out.push((TypeLetter::A, r));
    }
    for r in 2..=ceiling {
        out.push((TypeLetter::B, r));
    }
    for r in 3..=ceiling {
        out.push((TypeLetter::C, r));
        out.push((TypeLetter::D, r));
    }
    out.extend([
        (TypeLetter::E, 6),
        (TypeLetter::E, 7),
        (TypeLetter::E, 8),
        (TypeLetter::F, 4),
        (TypeLetter::G, 2),
    ]);
    out
}

impl AlgebraCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn root_system(&self, letter: TypeLetter, rank: usize) -> Result<Arc<RootSystem>> {
        let key = (letter.as_char(), rank);
        if let Some(rs) = self.systems.read().unwrap().get(&key) {
            return Ok(Arc::clone(rs));
        }
        let rs = Arc::new(build_root_system(cartan_matrix(letter, rank)?)?);
        let mut guard = self.systems.write().unwrap();
        Ok(Arc::clone(guard.entry(key).or_insert(rs)))
    }

    pub fn chevalley(&self, letter: TypeLetter, rank: usize) -> Result<Arc<LieAlgebra>> {
        let key = (letter.as_char(), rank);
        if let Some(l) = self.chevalley.read().unwrap().get(&key) {
            return Ok(Arc::clone(l));
        }
        let rs = self.root_system(letter, rank)?;
        let l = Arc::new(chevalley_algebra(rs));
        let mut guard = self.chevalley.write().unwrap();
        Ok(Arc::clone(guard.entry(key).or_insert(l)))
    }

    pub fn compact(&self, letter: TypeLetter, rank: usize) -> Result<Arc<LieAlgebra>> {
        let key = (letter.as_char(), rank);
        if let Some(l) = self.compact.read().unwrap().get(&key) {
            return Ok(Arc::clone(l));
        }
        let chev = self.chevalley(letter, rank)?;
        let l = Arc::new(compact_form(&chev)?);
        let mut guard = self.compact.write().unwrap();
        Ok(Arc::clone(guard.entry(key).or_insert(l)))
    }
}
