//! Binary character matrices: each taxon is identified with the subset of
//! characters it possesses.

use std::collections::HashMap;

use crate::error::CoreError;

/// A rectangular 0/1 matrix of taxa (rows) by characters (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterMatrix {
    taxa: Vec<String>,
    characters: Vec<String>,
    presence: Vec<Vec<bool>>,
    taxon_index: HashMap<String, usize>,
    character_index: HashMap<String, usize>,
}

impl CharacterMatrix {
    /// Builds a matrix, checking name uniqueness and rectangularity.
    pub fn new(
        taxa: Vec<String>,
        characters: Vec<String>,
        presence: Vec<Vec<bool>>,
    ) -> Result<Self, CoreError> {
        let mut taxon_index = HashMap::new();
        for (i, t) in taxa.iter().enumerate() {
            if taxon_index.insert(t.clone(), i).is_some() {
                return Err(CoreError::DuplicateName { name: t.clone() });
            }
        }
        let mut character_index = HashMap::new();
        for (i, c) in characters.iter().enumerate() {
            if character_index.insert(c.clone(), i).is_some() {
                return Err(CoreError::DuplicateName { name: c.clone() });
            }
        }
        if presence.len() != taxa.len() {
            return Err(CoreError::NotRectangular);
        }
        if presence.iter().any(|row| row.len() != characters.len()) {
            return Err(CoreError::NotRectangular);
        }
        Ok(CharacterMatrix { taxa, characters, presence, taxon_index, character_index })
    }

    pub fn taxa(&self) -> &[String] {
        &self.taxa
    }

    pub fn characters(&self) -> &[String] {
        &self.characters
    }

    pub fn taxon_count(&self) -> usize {
        self.taxa.len()
    }

    pub fn character_count(&self) -> usize {
        self.characters.len()
    }

    pub fn has(&self, taxon: usize, character: usize) -> bool {
        self.presence[taxon][character]
    }

    pub fn taxon_id(&self, name: &str) -> Option<usize> {
        self.taxon_index.get(name).copied()
    }

    pub fn character_id(&self, name: &str) -> Option<usize> {
        self.character_index.get(name).copied()
    }

    pub fn character_name(&self, id: usize) -> &str {
        &self.characters[id]
    }

    /// Character ids possessed by the named taxon.
    pub fn characters_of(&self, taxon: &str) -> Option<Vec<usize>> {
        let row = *self.taxon_index.get(taxon)?;
        Some((0..self.characters.len()).filter(|&c| self.presence[row][c]).collect())
    }

    /// Taxa (row indices) that possess the character.
    pub fn taxa_with(&self, character: usize) -> Vec<usize> {
        (0..self.taxa.len()).filter(|&t| self.presence[t][character]).collect()
    }

    /// Taxa whose rows are identical to an earlier row. Duplicate rows are
    /// legal (they must still map to distinct leaves) but worth flagging.
    pub fn duplicate_rows(&self) -> Vec<String> {
        let mut seen: HashMap<&Vec<bool>, usize> = HashMap::new();
        let mut dups = Vec::new();
        for (i, row) in self.presence.iter().enumerate() {
            if let Some(&first) = seen.get(row) {
                dups.push(format!(
                    "taxon {:?} has the same characters as {:?}",
                    self.taxa[i], self.taxa[first]
                ));
            } else {
                seen.insert(row, i);
            }
        }
        dups
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(taxa: &[&str], chars: &[&str], rows: &[&[u8]]) -> Result<CharacterMatrix, CoreError> {
        CharacterMatrix::new(
            taxa.iter().map(|s| s.to_string()).collect(),
            chars.iter().map(|s| s.to_string()).collect(),
            rows.iter().map(|r| r.iter().map(|&b| b == 1).collect()).collect(),
        )
    }

    #[test]
    fn lookups() {
        let mx = m(&["X", "Y"], &["a", "b"], &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(mx.taxon_id("Y"), Some(1));
        assert!(mx.has(0, 0) && !mx.has(0, 1));
        assert_eq!(mx.characters_of("X").unwrap(), vec![0]);
        assert_eq!(mx.taxa_with(1), vec![1]);
    }

    #[test]
    fn rejects_duplicates_and_ragged_rows() {
        assert!(matches!(
            m(&["X", "X"], &["a"], &[&[1], &[0]]),
            Err(CoreError::DuplicateName { .. })
        ));
        assert!(matches!(
            m(&["X", "Y"], &["a", "a"], &[&[1, 0], &[0, 1]]),
            Err(CoreError::DuplicateName { .. })
        ));
        assert!(matches!(m(&["X"], &["a", "b"], &[&[1]]), Err(CoreError::NotRectangular)));
    }

    #[test]
    fn duplicate_rows_are_reported_not_rejected() {
        let mx = m(&["X", "Y", "Z"], &["a"], &[&[1], &[1], &[0]]).unwrap();
        let dups = mx.duplicate_rows();
        assert_eq!(dups.len(), 1);
        assert!(dups[0].contains("\"Y\""));
    }
}
