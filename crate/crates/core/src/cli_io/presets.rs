use crate::error::{Error, Result};
use crate::models::GeneratorMatrix;

/// How a preset picks its edge count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRule {
    /// `factor * 2^levels` insertions.
    PerVertex(u64),
    /// A fixed count, the size of the graph the parameters were fitted to.
    Fixed(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Preset {
    pub name: &'static str,
    pub generator: GeneratorMatrix,
    pub levels: u32,
    pub edges: EdgeRule,
    /// Noise level used when the noisy model is requested without one.
    pub noise: Option<f64>,
    pub description: &'static str,
}

impl Preset {
    pub fn edges_for(&self, levels: u32) -> u64 {
        match self.edges {
            EdgeRule::PerVertex(f) => f << levels,
            EdgeRule::Fixed(m) => m,
        }
    }

    pub fn edge_count(&self) -> u64 {
        self.edges_for(self.levels)
    }
}

/// Level counts of the Graph500 problem classes; 18 is the desk-scale default.
pub const GRAPH500_LEVELS: [u32; 7] = [18, 26, 29, 32, 36, 39, 42];

/// Published fits are rounded to a few digits and may not sum to exactly one.
fn matrix(t1: f64, t2: f64, t3: f64, t4: f64) -> GeneratorMatrix {
    let s = t1 + t2 + t3 + t4;
    GeneratorMatrix::new(t1 / s, t2 / s, t3 / s, t4 / s).expect("preset generators are valid")
}

/// All built-in presets.
pub fn presets() -> Vec<Preset> {
    vec![
        Preset {
            name: "graph500",
            generator: matrix(0.57, 0.19, 0.19, 0.05),
            levels: 18,
            edges: EdgeRule::PerVertex(16),
            noise: Some(0.1),
            description: "Graph500 benchmark generator, 16 edges per vertex",
        },
        Preset {
            name: "soc-epinions",
            generator: matrix(0.4668, 0.2486, 0.2243, 0.0603),
            levels: 17,
            edges: EdgeRule::Fixed(811_480),
            noise: None,
            description: "fit to soc-Epinions (75,879 vertices, 811,480 edges)",
        },
        Preset {
            name: "ca-hepth",
            generator: matrix(0.469455, 0.127350, 0.127350, 0.275846),
            levels: 14,
            edges: EdgeRule::Fixed(51_946),
            noise: None,
            description: "fit to ca-HepTh (9,875 vertices, 51,946 edges)",
        },
        Preset {
            name: "cit-hepph",
            generator: matrix(0.429559, 0.189715, 0.153414, 0.227312),
            levels: 15,
            edges: EdgeRule::Fixed(841_754),
            noise: None,
            description: "fit to cit-HepPh (34,546 vertices, 841,754 edges)",
        },
    ]
}

/// Looks up a preset by name. `graph500-<levels>` selects one of the
/// Graph500 problem classes.
pub fn find_preset(name: &str) -> Result<Preset> {
    let lower = name.to_ascii_lowercase();
    if let Some(levels) = lower.strip_prefix("graph500-") {
        let levels: u32 = levels
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad preset {name:?}")))?;
        if !GRAPH500_LEVELS.contains(&levels) {
            return Err(Error::InvalidArgument(format!(
                "graph500 levels must be one of {GRAPH500_LEVELS:?}"
            )));
        }
        let mut p = find_preset("graph500")?;
        p.levels = levels;
        return Ok(p);
    }
    presets()
        .into_iter()
        .find(|p| p.name == lower)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown preset {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::validate_generator;

    #[test]
    fn presets_are_valid() {
        for p in presets() {
            let [a, b, c, d] = p.generator.entries();
            assert!(validate_generator(a, b, c, d).is_ok(), "{}", p.name);
        }
    }

    #[test]
    fn graph500_classes() {
        let p = find_preset("graph500-18").unwrap();
        assert_eq!(p.edge_count(), 4_194_304);
        assert_eq!(find_preset("graph500-26").unwrap().levels, 26);
        assert!(find_preset("graph500-20").is_err());
        assert_eq!(find_preset("CA-HepTh").unwrap().levels, 14);
        assert!(find_preset("nope").is_err());
    }
}
