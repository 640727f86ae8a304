//! Rotation input for the CLI: a --rotation argument, a batch file, or
//! standard input. Batch files hold one rotation per line; blank lines and
//! lines starting with '#' are ignored. A malformed line fails the whole
//! run with its line number.

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use petrial_core::rotation::{RotationError, SignedRotation};

#[derive(Clone, Debug)]
pub enum Source {
    Rotation(String),
    File(PathBuf),
    Stdin,
}

#[derive(Debug)]
pub enum InputError {
    Io(std::io::Error),
    Parse { line: usize, error: RotationError },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(e) => write!(f, "input error: {e}"),
            InputError::Parse { line, error } => write!(f, "line {line}: {error}"),
        }
    }
}

impl std::error::Error for InputError {}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> InputError {
        InputError::Io(e)
    }
}

/// Reads every rotation from the source; all lines parse or the whole run
/// fails.
pub fn read_rotations(source: &Source) -> Result<Vec<SignedRotation>, InputError> {
    let text = match source {
        Source::Rotation(text) => {
            return text
                .parse()
                .map(|r| vec![r])
                .map_err(|error| InputError::Parse { line: 1, error });
        }
        Source::File(path) => fs::read_to_string(path)?,
        Source::Stdin => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    parse_batch(&text)
}

/// Parses batch text; line numbers are 1-based over the raw input.
pub fn parse_batch(text: &str) -> Result<Vec<SignedRotation>, InputError> {
    let mut rotations = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let rotation = trimmed.parse().map_err(|error| InputError::Parse {
            line: index + 1,
            error,
        })?;
        rotations.push(rotation);
    }
    Ok(rotations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_skips_comments_and_blanks() {
        let text = "# header\n1 1\n\n  1 2 1 2  \n# trailing\n";
        let rotations = parse_batch(text).unwrap();
        assert_eq!(rotations.len(), 2);
        assert_eq!(rotations[1].to_string(), "1 2 1 2");
    }

    #[test]
    fn malformed_line_reports_number() {
        let text = "1 1\n# ok\n1 2 3\n";
        let err = parse_batch(text).unwrap_err();
        match err {
            InputError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
