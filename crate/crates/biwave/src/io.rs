//! Field dump formats: a bit-exact binary container and a CSV view.
//!
//! The binary layout is the magic `BQF1`, a little-endian `u64` header
//! length, a JSON header describing the grid, and the payload: eight `f64`
//! components per node (scalar re/im, then x/y/z re/im pairs) in row-major
//! node order, all little-endian. The CSV view carries the same header on a
//! `#BQF1 <json>` comment line followed by one row per node.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Biquaternion, CVec3, Complex};
use crate::grid::{GridError, GridField};

pub const MAGIC: &[u8; 4] = b"BQF1";
pub const FORMAT_VERSION: u32 = 1;
/// f64 components per grid node.
pub const NODE_WIDTH: usize = 8;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("not a field dump: bad magic")]
    BadMagic,
    #[error("unsupported format version {found} (supported: {supported})")]
    FormatVersionMismatch { found: u32, supported: u32 },
    #[error("malformed header: {0}")]
    BadHeader(#[from] serde_json::Error),
    #[error("header promises {expected} payload values, found {found}")]
    HeaderPayloadMismatch { expected: usize, found: usize },
    #[error("malformed csv row {line}: {reason}")]
    BadCsvRow { line: usize, reason: String },
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldDumpHeader {
    pub version: u32,
    pub dims: [usize; 4],
    pub origin: [f64; 4],
    pub spacing: [f64; 4],
    pub layout: String,
    pub generator: String,
}

impl FieldDumpHeader {
    pub fn for_grid(grid: &GridField, generator: &str) -> Self {
        FieldDumpHeader {
            version: FORMAT_VERSION,
            dims: grid.dims,
            origin: grid.origin,
            spacing: grid.spacing,
            layout: "scalar_re,scalar_im,x_re,x_im,y_re,y_im,z_re,z_im".to_string(),
            generator: generator.to_string(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.dims.iter().product()
    }
}

fn node_components(b: &Biquaternion) -> [f64; NODE_WIDTH] {
    [
        b.s.re, b.s.im, b.v.x.re, b.v.x.im, b.v.y.re, b.v.y.im,
        b.v.z.re, b.v.z.im,
    ]
}

fn node_from_components(v: &[f64]) -> Biquaternion {
    Biquaternion::new(
        Complex::new(v[0], v[1]),
        CVec3::new(
            Complex::new(v[2], v[3]),
            Complex::new(v[4], v[5]),
            Complex::new(v[6], v[7]),
        ),
    )
}

/// Write the binary dump. The payload is the exact bit pattern of the grid
/// values; a write/read round trip reproduces them bit for bit.
pub fn write_binary(path: &Path, grid: &GridField, generator: &str) -> Result<(), IoError> {
    let header = FieldDumpHeader::for_grid(grid, generator);
    let header_json = serde_json::to_vec(&header)?;
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&(header_json.len() as u64).to_le_bytes())?;
    w.write_all(&header_json)?;
    for b in &grid.data {
        for comp in node_components(b) {
            w.write_all(&comp.to_le_bytes())?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_binary(path: &Path) -> Result<(FieldDumpHeader, GridField), IoError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(IoError::BadMagic);
    }
    let mut len_bytes = [0u8; 8];
    r.read_exact(&mut len_bytes)?;
    let header_len = u64::from_le_bytes(len_bytes) as usize;
    let mut header_json = vec![0u8; header_len];
    r.read_exact(&mut header_json)?;
    let header: FieldDumpHeader = serde_json::from_slice(&header_json)?;
    if header.version != FORMAT_VERSION {
        return Err(IoError::FormatVersionMismatch {
            found: header.version,
            supported: FORMAT_VERSION,
        });
    }
    let expected = header.node_count() * NODE_WIDTH;
    let mut payload = Vec::new();
    r.read_to_end(&mut payload)?;
    if payload.len() != expected * 8 {
        return Err(IoError::HeaderPayloadMismatch {
            expected,
            found: payload.len() / 8,
        });
    }
    let mut grid = GridField::new(header.origin, header.spacing, header.dims)?;
    for (i, node) in grid.data.iter_mut().enumerate() {
        let mut comps = [0.0f64; NODE_WIDTH];
        for (k, comp) in comps.iter_mut().enumerate() {
            let off = (i * NODE_WIDTH + k) * 8;
            *comp = f64::from_le_bytes(payload[off..off + 8].try_into().unwrap());
        }
        *node = node_from_components(&comps);
    }
    Ok((header, grid))
}

/// Format a float with the shortest representation that round-trips.
fn fmt_f64(x: f64) -> String {
    let mut buf = ryu_like(x);
    if !buf.contains('.') && !buf.contains('e') && !buf.contains("inf") && !buf.contains("NaN") {
        buf.push_str(".0");
    }
    buf
}

/// Rust's Display for f64 is already shortest-round-trip.
fn ryu_like(x: f64) -> String {
    format!("{x}")
}

pub fn write_csv(path: &Path, grid: &GridField, generator: &str) -> Result<(), IoError> {
    let header = FieldDumpHeader::for_grid(grid, generator);
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "#BQF1 {}", serde_json::to_string(&header)?)?;
    writeln!(
        w,
        "tau,x,y,z,scalar_re,scalar_im,x_re,x_im,y_re,y_im,z_re,z_im"
    )?;
    for it in 0..grid.dims[0] {
        for ix in 0..grid.dims[1] {
            for iy in 0..grid.dims[2] {
                for iz in 0..grid.dims[3] {
                    let idx = [it, ix, iy, iz];
                    let (tau, x) = grid.node_coords(idx);
                    let b = grid.at(idx);
                    let mut row = vec![fmt_f64(tau), fmt_f64(x[0]), fmt_f64(x[1]), fmt_f64(x[2])];
                    row.extend(node_components(b).iter().map(|c| fmt_f64(*c)));
                    writeln!(w, "{}", row.join(","))?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(path: &Path) -> Result<(FieldDumpHeader, GridField), IoError> {
    let r = BufReader::new(File::open(path)?);
    let mut lines = r.lines();
    let first = lines.next().ok_or(IoError::BadMagic)??;
    let json = first.strip_prefix("#BQF1 ").ok_or(IoError::BadMagic)?;
    let header: FieldDumpHeader = serde_json::from_str(json)?;
    if header.version != FORMAT_VERSION {
        return Err(IoError::FormatVersionMismatch {
            found: header.version,
            supported: FORMAT_VERSION,
        });
    }
    let mut grid = GridField::new(header.origin, header.spacing, header.dims)?;
    let mut count = 0usize;
    for (lineno, line) in lines.enumerate() {
        let line = line?;
        if lineno == 0 && line.starts_with("tau,") {
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 + NODE_WIDTH {
            return Err(IoError::BadCsvRow {
                line: lineno + 2,
                reason: format!("expected {} fields, got {}", 4 + NODE_WIDTH, fields.len()),
            });
        }
        let mut comps = [0.0f64; NODE_WIDTH];
        for (k, comp) in comps.iter_mut().enumerate() {
            *comp = fields[4 + k].parse().map_err(|e| IoError::BadCsvRow {
                line: lineno + 2,
                reason: format!("bad float `{}`: {e}", fields[4 + k]),
            })?;
        }
        if count >= grid.data.len() {
            return Err(IoError::HeaderPayloadMismatch {
                expected: grid.data.len() * NODE_WIDTH,
                found: (count + 1) * NODE_WIDTH,
            });
        }
        grid.data[count] = node_from_components(&comps);
        count += 1;
    }
    if count != grid.data.len() {
        return Err(IoError::HeaderPayloadMismatch {
            expected: grid.data.len() * NODE_WIDTH,
            found: count * NODE_WIDTH,
        });
    }
    Ok((header, grid))
}

/// Sample a field function onto a grid described by origin/spacing/dims.
pub fn sample_to_grid<F>(
    origin: [f64; 4],
    spacing: [f64; 4],
    dims: [usize; 4],
    f: F,
) -> Result<GridField, GridError>
where
    F: Fn(f64, crate::algebra::Real3) -> Biquaternion,
{
    GridField::sample(origin, spacing, dims, f)
}
