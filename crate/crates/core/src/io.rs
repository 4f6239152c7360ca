//! Plain-text serialization: row-major matrices, named matrix bundles and curvature tensors.
//!
//! Matrix: a `rows cols` line followed by one line per row. Rational entries are written
//! `p/q` (or `p`), floating entries in shortest round-trip form.

use crate::algebra::parse_rational;
use crate::curvature::CurvatureTensor;
use crate::error::{PqError, Result};
use crate::linalg::HermitianStructure;
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};
use std::fmt::Write;

/// Scalars with a lossless text form.
pub trait TextScalar: Scalar {
    const MODE: &'static str;
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Result<Self>;
}

impl TextScalar for f64 {
    const MODE: &'static str = "float";
    fn to_text(&self) -> String {
        format!("{self:?}")
    }
    fn from_text(s: &str) -> Result<Self> {
        s.trim().parse().map_err(|_| PqError::Parse(format!("bad float '{s}'")))
    }
}

impl TextScalar for Rational {
    const MODE: &'static str = "exact";
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn from_text(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

pub fn write_matrix<S: TextScalar>(m: &Matrix<S>) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m[(r, c)].to_text()).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

fn next_line<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Result<&'a str> {
    lines.find(|l| !l.trim().is_empty()).ok_or_else(|| PqError::Parse("unexpected end of input".into()))
}

fn parse_dims(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(r)), Some(Ok(c)), None) => Ok((r, c)),
        _ => Err(PqError::Parse(format!("bad matrix header '{line}'"))),
    }
}

fn read_matrix_from<'a, S: TextScalar>(lines: &mut impl Iterator<Item = &'a str>) -> Result<Matrix<S>> {
    let (rows, cols) = parse_dims(next_line(lines)?)?;
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let line = next_line(lines)?;
        let row: Vec<S> = line.split_whitespace().map(S::from_text).collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(PqError::Parse(format!("expected {cols} entries, got {}", row.len())));
        }
        data.extend(row);
    }
    Ok(Matrix::from_vec(rows, cols, data))
}

pub fn read_matrix<S: TextScalar>(text: &str) -> Result<Matrix<S>> {
    read_matrix_from(&mut text.lines())
}

/// Named matrices, each introduced by a `name` line.
pub fn write_bundle<S: TextScalar>(items: &[(&str, &Matrix<S>)]) -> String {
    let mut s = String::new();
    for (name, m) in items {
        writeln!(s, "{name}").unwrap();
        s.push_str(&write_matrix(m));
    }
    s
}

pub fn read_bundle<S: TextScalar>(text: &str) -> Result<Vec<(String, Matrix<S>)>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty()).peekable();
    let mut out = Vec::new();
    while let Some(name) = lines.next() {
        out.push((name.trim().to_string(), read_matrix_from(&mut lines)?));
    }
    Ok(out)
}

pub fn write_structure<S: TextScalar>(h: &HermitianStructure<S>) -> String {
    write_bundle(&[("J1", &h.j[0]), ("J2", &h.j[1]), ("J3", &h.j[2]), ("g", &h.g)])
}

pub fn read_structure<S: TextScalar>(text: &str) -> Result<HermitianStructure<S>> {
    let mut items = read_bundle::<S>(text)?;
    let mut take = |name: &str| {
        let pos = items.iter().position(|(n, _)| n == name).ok_or_else(|| PqError::Parse(format!("missing {name}")))?;
        Ok::<_, PqError>(items.remove(pos).1)
    };
    let j = [take("J1")?, take("J2")?, take("J3")?];
    Ok(HermitianStructure::new(j, take("g")?))
}

pub const CURVATURE_CONVENTION: &str = "w-component-of-R(e_x,e_y)e_z";

/// Header `curvature n=… convention=… mode=…`, the metric, then the flat array in index order
/// `((x·d + y)·d + z)·d + w`, one `d`-block per line.
pub fn write_curvature<S: TextScalar>(r: &CurvatureTensor<S>) -> String {
    let d = r.dim();
    let mut s = format!("curvature n={} convention={CURVATURE_CONVENTION} mode={}\n", d / 4, S::MODE);
    s.push_str(&write_matrix(&r.g));
    for chunk in r.data().chunks(d) {
        let row: Vec<String> = chunk.iter().map(|v| v.to_text()).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

pub fn read_curvature<S: TextScalar>(text: &str) -> Result<CurvatureTensor<S>> {
    let mut lines = text.lines();
    let header = next_line(&mut lines)?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("curvature") {
        return Err(PqError::Parse("missing curvature header".into()));
    }
    let mut n = None;
    for f in fields {
        match f.split_once('=') {
            Some(("n", v)) => n = v.parse::<usize>().ok(),
            Some(("convention", v)) if v != CURVATURE_CONVENTION => {
                return Err(PqError::Parse(format!("unknown convention '{v}'")));
            }
            Some(("mode", v)) if v != S::MODE => {
                return Err(PqError::Parse(format!("mode '{v}' does not match the requested scalar field")));
            }
            _ => {}
        }
    }
    let n = n.ok_or_else(|| PqError::Parse("missing n".into()))?;
    let g: Matrix<S> = read_matrix_from(&mut lines)?;
    let d = g.rows();
    if d != 4 * n {
        return Err(PqError::Parse(format!("metric of size {d} for n={n}")));
    }
    let data: Vec<S> = lines.flat_map(|l| l.split_whitespace()).map(S::from_text).collect::<Result<_>>()?;
    if data.len() != d.pow(4) {
        return Err(PqError::Parse(format!("expected {} entries, got {}", d.pow(4), data.len())));
    }
    Ok(CurvatureTensor::from_data(&g, data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::hpn_curvature;

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::from_vec(2, 3, vec![Rational::new(1.into(), 3.into()), Rational::from_i64(-2), Rational::from_i64(0), Rational::new((-7).into(), 5.into()), Rational::from_i64(4), Rational::from_i64(1)]);
        let text = write_matrix(&m);
        assert_eq!(text, "2 3\n1/3 -2 0\n-7/5 4 1\n");
        assert_eq!(read_matrix::<Rational>(&text).unwrap(), m);
        let f = Matrix::from_vec(1, 2, vec![0.1, -1e-300]);
        assert_eq!(read_matrix::<f64>(&write_matrix(&f)).unwrap(), f);
        assert!(read_matrix::<Rational>("2 2\n1 2\n3\n").is_err());
        assert!(read_matrix::<Rational>("1 1\n1/0\n").is_err());
    }

    #[test]
    fn structure_and_curvature_round_trip() {
        let h = HermitianStructure::<Rational>::standard(1);
        let back = read_structure::<Rational>(&write_structure(&h)).unwrap();
        assert_eq!(back.j, h.j);
        assert_eq!(back.g, h.g);
        let r = hpn_curvature(&h);
        let text = write_curvature(&r);
        assert!(text.starts_with("curvature n=1 "));
        let back = read_curvature::<Rational>(&text).unwrap();
        assert_eq!(back.data(), r.data());
        assert!(read_curvature::<f64>(&text).is_err());
    }
}
