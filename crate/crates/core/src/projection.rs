//! Validated sphere-realizable projections.

use serde::{Deserialize, Serialize};

use crate::embedding::{faces, realize, FaceInventory, RotationChoice};
use crate::error::{Error, Result};
use crate::word::DoubleOccurrenceWord;

/// A word together with its first sphere-realizing rotation choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotProjection {
    pub word: DoubleOccurrenceWord,
    pub embedding: RotationChoice,
    pub canonical: DoubleOccurrenceWord,
}

impl KnotProjection {
    pub fn new(word: DoubleOccurrenceWord) -> Result<Self> {
        let embedding = realize(&word).ok_or(Error::NotRealizable)?;
        let canonical = word.canonicalize();
        Ok(Self {
            word,
            embedding,
            canonical,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(DoubleOccurrenceWord::parse(text)?)
    }

    pub fn crossing_count(&self) -> usize {
        self.word.crossing_count()
    }

    pub fn faces(&self) -> FaceInventory {
        faces(&self.word, self.embedding).expect("stored embedding is spherical")
    }
}
