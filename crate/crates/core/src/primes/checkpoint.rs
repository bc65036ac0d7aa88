//! Plain-text persistence of exact π(x) values: one `x<TAB>pi<TAB>method`
//! line per checkpoint.

use super::count::PiCheckpoint;
use crate::error::{Error, Result};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

pub const CHECKPOINT_FILE: &str = "pi_checkpoints.tsv";

pub fn format_line(c: &PiCheckpoint) -> String {
    format!("{}\t{}\t{}", c.x, c.pi, c.method)
}

pub fn parse_line(line: &str, lineno: usize) -> Result<PiCheckpoint> {
    let bad = |detail: String| Error::Checkpoint { line: lineno, detail };
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 3 {
        return Err(bad(format!("expected 3 tab-separated fields, found {}", fields.len())));
    }
    let x = fields[0].parse().map_err(|e| bad(format!("x: {e}")))?;
    let pi = fields[1].parse().map_err(|e| bad(format!("pi: {e}")))?;
    let method = fields[2].parse().map_err(bad)?;
    Ok(PiCheckpoint { x, pi, method })
}

/// A checkpoint file inside a directory.
#[derive(Clone, Debug)]
pub struct CheckpointStore {
    path: PathBuf,
}

impl CheckpointStore {
    pub fn in_dir(dir: impl AsRef<Path>) -> Self {
        Self { path: dir.as_ref().join(CHECKPOINT_FILE) }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All stored checkpoints; a missing file is an empty store.
    pub fn load(&self) -> Result<Vec<PiCheckpoint>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            out.push(parse_line(&line, i + 1)?);
        }
        Ok(out)
    }

    pub fn lookup(&self, x: u64) -> Result<Option<PiCheckpoint>> {
        Ok(self.load()?.into_iter().find(|c| c.x == x))
    }

    pub fn append(&self, c: &PiCheckpoint) -> Result<()> {
        if let Some(dir) = self.path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(f, "{}", format_line(c))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::PiMethod;

    #[test]
    fn line_format_is_tab_separated() {
        let c = PiCheckpoint { x: 1_000_000, pi: 78_498, method: PiMethod::Sieve };
        assert_eq!(format_line(&c), "1000000\t78498\tsieve");
        assert_eq!(parse_line("1000000\t78498\tsieve", 1).unwrap(), c);
    }

    #[test]
    fn malformed_lines_name_the_line() {
        let err = parse_line("10 4 sieve", 7).unwrap_err();
        assert!(matches!(err, Error::Checkpoint { line: 7, .. }));
        assert!(parse_line("10\tfour\tsieve", 1).is_err());
        assert!(parse_line("10\t4\tguess", 1).is_err());
    }

    #[test]
    fn store_round_trip() {
        let dir = std::env::temp_dir().join(format!("pntlab-ckpt-{}", std::process::id()));
        let store = CheckpointStore::in_dir(&dir);
        let _ = std::fs::remove_file(store.path());
        assert!(store.load().unwrap().is_empty());
        let a = PiCheckpoint { x: 100, pi: 25, method: PiMethod::Sieve };
        let b = PiCheckpoint { x: 100_000_000, pi: 5_761_455, method: PiMethod::Sublinear };
        store.append(&a).unwrap();
        store.append(&b).unwrap();
        assert_eq!(store.load().unwrap(), vec![a, b]);
        assert_eq!(store.lookup(100_000_000).unwrap(), Some(b));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
