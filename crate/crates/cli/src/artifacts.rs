use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use tempfile::NamedTempFile;

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp =
        NamedTempFile::new_in(dir).with_context(|| format!("creating temporary file in {}", dir.display()))?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Output directory of one invocation.
pub struct OutDir {
    root: PathBuf,
    plots: bool,
    written: Vec<PathBuf>,
}

impl OutDir {
    pub fn create(root: &Path, plots: bool) -> Result<Self> {
        std::fs::create_dir_all(root).with_context(|| format!("creating {}", root.display()))?;
        Ok(Self {
            root: root.to_path_buf(),
            plots,
            written: Vec::new(),
        })
    }

    pub fn write(&mut self, name: &str, contents: impl AsRef<[u8]>) -> Result<()> {
        let path = self.root.join(name);
        write_atomic(&path, contents.as_ref())?;
        self.written.push(path);
        Ok(())
    }

    pub fn write_json(&mut self, name: &str, value: &impl serde::Serialize) -> Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write(name, text)
    }

    /// Gnuplot data file, written only with `--emit-plots`.
    pub fn plot(&mut self, name: &str, header: &str, rows: impl IntoIterator<Item = String>) -> Result<()> {
        if !self.plots {
            return Ok(());
        }
        let mut text = format!("# {header}\n");
        for row in rows {
            text.push_str(&row);
            text.push('\n');
        }
        self.write(name, text)
    }

    pub fn written(&self) -> &[PathBuf] {
        &self.written
    }
}
