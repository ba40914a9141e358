use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

use projclose::PointStore;

/// Points as CSV rows `level,x1,x2,x3`, coordinates in decimal.
pub fn points_csv(store: &PointStore) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["level", "x1", "x2", "x3"])?;
    for (p, level) in store.iter() {
        let [x1, x2, x3] = p.coords();
        w.write_record([
            level.to_string(),
            x1.to_string(),
            x2.to_string(),
            x3.to_string(),
        ])?;
    }
    Ok(w.into_inner()?)
}

/// Writes `bytes` next to `path` and renames it into place, so readers never
/// see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .with_context(|| format!("{} is not a file path", path.display()))?;
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        name.to_string_lossy(),
        std::process::id()
    ));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.with_context(|| format!("writing {}", path.display()))
}

/// Where the points CSV goes when the main report is JSON in a file.
pub fn sibling_csv_path(report: &Path) -> PathBuf {
    report.with_extension("points.csv")
}
