//! Knot sources registered by name and selected from the spec string.

use super::{
    parse_braid, parse_torus, parse_two_bridge, presentation_torus, presentation_two_bridge,
    KnotError, KnotPresentation, PresentationJson,
};

/// One way of turning a knot description into a presentation.
pub trait KnotSource: Send + Sync {
    fn name(&self) -> &'static str;
    /// Cheap syntactic test; the first accepting source wins.
    fn accepts(&self, spec: &str) -> bool;
    fn build(&self, spec: &str) -> Result<KnotPresentation, KnotError>;
}

struct TwoBridgeSource;

impl KnotSource for TwoBridgeSource {
    fn name(&self) -> &'static str {
        "two-bridge"
    }
    fn accepts(&self, spec: &str) -> bool {
        spec.contains('/') && !spec.contains(':') && !spec.ends_with(".json")
    }
    fn build(&self, spec: &str) -> Result<KnotPresentation, KnotError> {
        Ok(presentation_two_bridge(&parse_two_bridge(spec)?))
    }
}

struct TorusSource;

impl KnotSource for TorusSource {
    fn name(&self) -> &'static str {
        "torus"
    }
    fn accepts(&self, spec: &str) -> bool {
        spec.starts_with("torus:")
    }
    fn build(&self, spec: &str) -> Result<KnotPresentation, KnotError> {
        Ok(presentation_torus(&parse_torus(spec)?))
    }
}

struct BraidSource;

impl KnotSource for BraidSource {
    fn name(&self) -> &'static str {
        "braid"
    }
    fn accepts(&self, spec: &str) -> bool {
        spec.starts_with("braid:")
    }
    fn build(&self, spec: &str) -> Result<KnotPresentation, KnotError> {
        parse_braid(spec)
    }
}

/// A presentation stored as JSON, `json:<path>` or any path ending in `.json`.
struct JsonFileSource;

impl KnotSource for JsonFileSource {
    fn name(&self) -> &'static str {
        "json"
    }
    fn accepts(&self, spec: &str) -> bool {
        spec.starts_with("json:") || spec.ends_with(".json")
    }
    fn build(&self, spec: &str) -> Result<KnotPresentation, KnotError> {
        let path = spec.strip_prefix("json:").unwrap_or(spec);
        let io = |reason: String| KnotError::Io {
            path: path.to_string(),
            reason,
        };
        let text = std::fs::read_to_string(path).map_err(|e| io(e.to_string()))?;
        let doc: PresentationJson = serde_json::from_str(&text).map_err(|e| io(e.to_string()))?;
        KnotPresentation::from_json(&doc)
    }
}

pub struct KnotRegistry {
    sources: Vec<Box<dyn KnotSource>>,
}

impl Default for KnotRegistry {
    fn default() -> Self {
        Self {
            sources: vec![
                Box::new(TorusSource),
                Box::new(BraidSource),
                Box::new(JsonFileSource),
                Box::new(TwoBridgeSource),
            ],
        }
    }
}

impl KnotRegistry {
    pub fn empty() -> Self {
        Self { sources: vec![] }
    }

    pub fn register(&mut self, source: Box<dyn KnotSource>) {
        self.sources.push(source);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.sources.iter().map(|s| s.name()).collect()
    }

    pub fn resolve(&self, spec: &str) -> Result<KnotPresentation, KnotError> {
        let spec = spec.trim();
        self.sources
            .iter()
            .find(|s| s.accepts(spec))
            .ok_or_else(|| KnotError::UnknownSpec(spec.to_string()))?
            .build(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_by_syntax() {
        let r = KnotRegistry::default();
        assert_eq!(r.resolve("3/1").unwrap().label(), "3/1");
        assert_eq!(r.resolve("torus:2,3").unwrap().label(), "torus:2,3");
        assert_eq!(r.resolve("braid:aaa").unwrap().label(), "braid:aaa");
        assert!(matches!(
            r.resolve("trefoil"),
            Err(KnotError::UnknownSpec(_))
        ));
    }
}
