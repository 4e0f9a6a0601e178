//! Output files that disappear again unless the command completes.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

/// Tracks the files a command writes. Dropping the set without calling
/// [`OutputSet::commit`] removes them, together with the output directory
/// if this set created it.
#[derive(Debug)]
pub struct OutputSet {
    dir: Option<PathBuf>,
    created_dir: bool,
    files: Vec<PathBuf>,
    committed: bool,
}

impl OutputSet {
    /// Output files go into `dir`, which is created if needed.
    pub fn in_dir(dir: &Path) -> Result<Self> {
        let created_dir = !dir.exists();
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        Ok(OutputSet {
            dir: Some(dir.to_path_buf()),
            created_dir,
            files: Vec::new(),
            committed: false,
        })
    }

    /// For commands that write standalone files.
    pub fn loose() -> Self {
        OutputSet {
            dir: None,
            created_dir: false,
            files: Vec::new(),
            committed: false,
        }
    }

    /// Registers `name` (relative to the output directory, if any) and
    /// returns its full path.
    pub fn file(&mut self, name: impl AsRef<Path>) -> PathBuf {
        let path = match &self.dir {
            Some(d) => d.join(name),
            None => name.as_ref().to_path_buf(),
        };
        self.files.push(path.clone());
        path
    }

    pub fn files(&self) -> &[PathBuf] {
        &self.files
    }

    pub fn commit(mut self) -> Vec<PathBuf> {
        self.committed = true;
        std::mem::take(&mut self.files)
    }
}

impl Drop for OutputSet {
    fn drop(&mut self) {
        if self.committed {
            return;
        }
        for f in &self.files {
            let _ = fs::remove_file(f);
        }
        if let (true, Some(d)) = (self.created_dir, &self.dir) {
            let _ = fs::remove_dir(d);
        }
    }
}
