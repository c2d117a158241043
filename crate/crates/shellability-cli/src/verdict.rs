//! The uniform result record every command emits: a named predicate, an
//! input digest, the boolean outcome, an optional certificate and witness,
//! and wall-clock timing.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use serde_json::{json, Value};

/// One predicate evaluation over one input.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub predicate: String,
    /// Hex digest of the raw input text, to tie output lines to inputs.
    pub input: String,
    pub holds: bool,
    /// Evidence for a positive answer (an order, an elimination order, a
    /// layout, …) that re-verifies under the matching checker.
    pub certificate: Option<String>,
    /// Evidence for a negative answer (a violating pair, a bad minor, …).
    pub witness: Option<String>,
    pub ms: u128,
}

/// Digest used in the `input` field.
pub fn digest(text: &str) -> String {
    let mut hasher = DefaultHasher::new();
    text.hash(&mut hasher);
    format!("{:016x}", hasher.finish())
}

impl Verdict {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{}: {} ({} ms)",
            self.predicate,
            if self.holds { "holds" } else { "does not hold" },
            self.ms
        );
        if let Some(cert) = &self.certificate {
            out.push_str(&format!("\n  certificate: {cert}"));
        }
        if let Some(witness) = &self.witness {
            out.push_str(&format!("\n  witness: {witness}"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "predicate": self.predicate,
            "input": self.input,
            "holds": self.holds,
            "certificate": self.certificate,
            "witness": self.witness,
            "ms": self.ms,
        })
    }
}
