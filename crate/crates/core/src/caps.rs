//! Enumeration caps. Defaults can be overridden through the `TWISTLIE_CAPS`
//! environment variable, e.g. `TWISTLIE_CAPS=partitions=12,fb=7`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Ground-set size for enumerating set partitions.
    pub partitions: usize,
    /// Largest finite set in the FB engines.
    pub fb: usize,
    /// Largest ground set in the collision-structure engines.
    pub cs: usize,
    /// Largest weight truncation for Lie and coalgebra constructions.
    pub weight: usize,
    /// Vertex count for chromatic polynomials.
    pub graph: usize,
    /// Configuration size for the braid oracle.
    pub braid: usize,
    /// Point count of the discrete configuration coalgebra.
    pub points: usize,
    /// Target size for pointwise diagonal checks.
    pub points_check: usize,
    /// Dimension of a single weight piece.
    pub block_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            partitions: 10,
            fb: 6,
            cs: 4,
            weight: 8,
            graph: 10,
            braid: 7,
            points: 6,
            points_check: 4,
            block_dim: 200_000,
        }
    }
}

pub const ENV_VAR: &str = "TWISTLIE_CAPS";

impl Caps {
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::arg(format!("cap override {item:?} is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::arg(format!("cap override {item:?} has a non-integer value")))?;
            let slot = match key.trim() {
                "partitions" => &mut caps.partitions,
                "fb" => &mut caps.fb,
                "cs" => &mut caps.cs,
                "weight" => &mut caps.weight,
                "graph" => &mut caps.graph,
                "braid" => &mut caps.braid,
                "points" => &mut caps.points,
                "points_check" => &mut caps.points_check,
                "block_dim" => &mut caps.block_dim,
                other => return Err(Error::arg(format!("unknown cap {other:?}"))),
            };
            *slot = value;
        }
        if caps.partitions > 16 || caps.cs > 16 || caps.fb > 12 {
            return Err(Error::arg("cap overrides beyond the mask width are not supported"));
        }
        Ok(caps)
    }

    pub fn from_env() -> Result<Caps> {
        match std::env::var(ENV_VAR) {
            Ok(s) => Caps::parse(&s),
            Err(_) => Ok(Caps::default()),
        }
    }
}

static CAPS: OnceLock<Caps> = OnceLock::new();

/// Process-wide caps, read from the environment on first use. A malformed
/// override falls back to the defaults; the CLI validates it up front.
pub fn caps() -> Caps {
    *CAPS.get_or_init(|| Caps::from_env().unwrap_or_default())
}

pub fn check(what: &str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::size(what, value, cap))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let c = Caps::parse("partitions=12, fb=7").unwrap();
        assert_eq!(c.partitions, 12);
        assert_eq!(c.fb, 7);
        assert_eq!(c.cs, Caps::default().cs);
        assert!(Caps::parse("bogus=1").is_err());
        assert!(Caps::parse("fb").is_err());
    }
}
