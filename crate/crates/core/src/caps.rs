use std::str::FromStr;

use crate::error::{Error, Result};

/// Work bounds for the exhaustive kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest ring that may be built or enumerated.
    pub ring: u32,
    /// Largest ring fed to triple-scan predicates.
    pub cubic: u32,
    /// Largest lattice for predicates quantified over pairs or triples of ideals.
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring: 4096,
            cubic: 1024,
            lattice: 128,
        }
    }
}

impl Caps {
    pub fn check_cubic(&self, size: u32) -> Result<()> {
        if size > self.cubic {
            return Err(Error::CapExceeded {
                what: "ring for triple scans",
                size: size as u64,
                cap: self.cubic as u64,
            });
        }
        Ok(())
    }

    pub fn check_lattice(&self, len: usize) -> Result<()> {
        if len > self.lattice {
            return Err(Error::CapExceeded {
                what: "ideal lattice",
                size: len as u64,
                cap: self.lattice as u64,
            });
        }
        Ok(())
    }

    pub fn check_ring(&self, size: u64) -> Result<()> {
        if size > self.ring as u64 {
            return Err(Error::CapExceeded {
                what: "ring",
                size,
                cap: self.ring as u64,
            });
        }
        Ok(())
    }

    /// Applies `key=value` overrides such as `cubic=1024,lattice=32`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Caps> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::parse(spec, 0, format!("expected key=value, got `{part}`")))?;
            let n: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::parse(spec, 0, format!("`{value}` is not a number")))?;
            if n == 0 {
                return Err(Error::parse(spec, 0, "caps must be positive"));
            }
            match key.trim() {
                "ring" => self.ring = n.min(u16::MAX as u64) as u32,
                "cubic" => self.cubic = n as u32,
                "lattice" => self.lattice = n as usize,
                other => return Err(Error::parse(spec, 0, format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }
}

impl FromStr for Caps {
    type Err = Error;

    fn from_str(s: &str) -> Result<Caps> {
        Caps::default().with_overrides(s)
    }
}
