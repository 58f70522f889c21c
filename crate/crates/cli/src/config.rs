use std::path::Path;

use serde::{Deserialize, Serialize};

/// Environment variable holding the default precision in bits.
pub const PRECISION_ENV: &str = "BRAIDGT_PRECISION";

pub const DEFAULT_PRECISION: u32 = 256;

/// Inputs shared by all commands. Flags override the config file, which
/// overrides the environment, which overrides the defaults.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub n: Option<usize>,
    pub degree: Option<usize>,
    pub precision: Option<u32>,
    pub tolerance: Option<f64>,
    pub ell: Option<u64>,
    pub k: Option<u32>,
    pub quick: Option<bool>,
}

impl Overrides {
    pub fn from_file(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// `self` where set, else `base`.
    pub fn over(&self, base: &Overrides) -> Overrides {
        Overrides {
            n: self.n.or(base.n),
            degree: self.degree.or(base.degree),
            precision: self.precision.or(base.precision),
            tolerance: self.tolerance.or(base.tolerance),
            ell: self.ell.or(base.ell),
            k: self.k.or(base.k),
            quick: self.quick.or(base.quick),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Params {
    pub n: usize,
    pub degree: usize,
    pub precision: u32,
    /// Numeric tolerance; exact checks ignore it.
    pub tolerance: f64,
    pub ell: u64,
    pub k: u32,
    pub quick: bool,
}

impl Params {
    pub fn resolve(o: &Overrides, env_precision: Option<&str>) -> Result<Params, String> {
        let env = match env_precision {
            Some(s) => Some(s.trim().parse::<u32>().map_err(|_| format!("{PRECISION_ENV}={s} is not a bit count"))?),
            None => None,
        };
        let precision = o.precision.or(env).unwrap_or(DEFAULT_PRECISION);
        if precision < 64 {
            return Err(format!("precision {precision} is below 64 bits"));
        }
        let p = Params {
            n: o.n.unwrap_or(4),
            degree: o.degree.unwrap_or(4),
            precision,
            tolerance: o.tolerance.unwrap_or_else(|| braid_gt::reps::default_tolerance(precision)),
            ell: o.ell.unwrap_or(5),
            k: o.k.unwrap_or(3),
            quick: o.quick.unwrap_or(false),
        };
        if !(p.tolerance >= 0.0) {
            return Err(format!("tolerance {} is not a non-negative number", p.tolerance));
        }
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("params serialize")
    }
}
