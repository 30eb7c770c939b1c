use std::fs;
use std::path::Path;

use crate::error::{HgsError, Result};

const MAGIC: &str = "hgs-checkpoint 1";

/// Progress of a regular-subgroup count, one field per line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub g_digest: String,
    pub n_digest: String,
    pub convention: String,
    /// Index of the last homomorphism `f` whose crossed homomorphisms have
    /// all been counted; `None` before the first one completes.
    pub last_f: Option<usize>,
    pub pair_count: u64,
}

impl Checkpoint {
    pub fn render(&self) -> String {
        let last = self.last_f.map_or("none".to_string(), |i| i.to_string());
        format!(
            "{MAGIC}\ng_digest {}\nn_digest {}\nconvention {}\nlast_f {last}\npair_count {}\n",
            self.g_digest, self.n_digest, self.convention, self.pair_count
        )
    }

    pub fn parse(text: &str) -> Result<Checkpoint> {
        let mut lines = text.lines();
        if lines.next() != Some(MAGIC) {
            return Err(HgsError::Checkpoint("missing header line".into()));
        }
        let mut field = |name: &str| -> Result<String> {
            let line = lines
                .next()
                .ok_or_else(|| HgsError::Checkpoint(format!("missing field `{name}`")))?;
            line.strip_prefix(name)
                .and_then(|r| r.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| HgsError::Checkpoint(format!("expected `{name}`, got `{line}`")))
        };
        let g_digest = field("g_digest")?;
        let n_digest = field("n_digest")?;
        let convention = field("convention")?;
        let last = field("last_f")?;
        let last_f = match last.as_str() {
            "none" => None,
            s => Some(s.parse().map_err(|_| HgsError::Checkpoint(format!("bad last_f `{s}`")))?),
        };
        let pair_count = field("pair_count")?
            .parse()
            .map_err(|_| HgsError::Checkpoint("bad pair_count".into()))?;
        Ok(Checkpoint {
            g_digest,
            n_digest,
            convention,
            last_f,
            pair_count,
        })
    }

    pub fn load(path: &Path) -> Result<Checkpoint> {
        Checkpoint::parse(&fs::read_to_string(path)?)
    }

    /// Writes through a temporary file and a rename so an interrupted
    /// write never leaves a truncated checkpoint behind.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, self.render())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Short identifier used in reports.
    pub fn id(&self) -> String {
        let last = self.last_f.map_or("none".to_string(), |i| i.to_string());
        format!("{}-{}@{last}", &self.g_digest[..8.min(self.g_digest.len())], &self.n_digest[..8.min(self.n_digest.len())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = Checkpoint {
            g_digest: "ab".repeat(32),
            n_digest: "cd".repeat(32),
            convention: super::super::CONVENTION.into(),
            last_f: Some(17),
            pair_count: 4800,
        };
        assert_eq!(Checkpoint::parse(&c.render()).unwrap(), c);
        let none = Checkpoint { last_f: None, ..c.clone() };
        assert_eq!(Checkpoint::parse(&none.render()).unwrap(), none);
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("run.ckpt");
        c.save(&p).unwrap();
        assert_eq!(Checkpoint::load(&p).unwrap(), c);
    }

    #[test]
    fn rejects_corrupt_files() {
        assert!(Checkpoint::parse("").is_err());
        assert!(Checkpoint::parse("hgs-checkpoint 1\ng_digest x\n").is_err());
        assert!(Checkpoint::parse("hgs-checkpoint 1\ng_digest x\nn_digest y\nconvention z\nlast_f q\npair_count 1\n").is_err());
    }
}
