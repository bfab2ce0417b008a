//! JSON records written by the command-line tool. Floats are printed with
//! 17 significant digits so every value reads back bit for bit.

use std::io;

use cfk_core::{GeometricFrame, KernelValue};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelReport {
    pub m: usize,
    pub p: f64,
    pub u: f64,
    pub v: f64,
    pub t: f64,
    pub rep: String,
    pub scalar_re: f64,
    pub scalar_im: f64,
    pub bivec_re: f64,
    pub bivec_im: f64,
    pub err_est: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<f64>>,
}

impl KernelReport {
    pub fn new(m: usize, p: f64, frame: &GeometricFrame, k: &KernelValue) -> Self {
        Self {
            m,
            p,
            u: frame.u,
            v: frame.v,
            t: frame.t,
            rep: k.strategy.to_string(),
            scalar_re: k.value.scalar.re,
            scalar_im: k.value.scalar.im,
            bivec_re: k.value.bivector.re,
            bivec_im: k.value.bivector.im,
            err_est: k.err_est,
            x: None,
            y: None,
        }
    }
}

/// Compact JSON formatter printing `f64` as `d.dddddddddddddddde±x`.
struct Sig17;

impl serde_json::ser::Formatter for Sig17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

/// A float for text and CSV output, 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}
