//! Vertex labelings: the bridge between human-readable vertex names and the
//! 0-based indices used by [`VertexSet`](super::VertexSet).

use std::collections::HashMap;
use std::sync::Arc;

use crate::base::vset::{VertexSet, MAX_UNIVERSE};
use crate::error::{Error, Result};

#[derive(Debug)]
struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered list of distinct vertex labels.  Cloning is cheap (shared
/// storage), and all derived structures carry the labeling they were built
/// against so rendered output always uses the caller's names.
#[derive(Clone, Debug)]
pub struct Labeling {
    inner: Arc<Inner>,
}

impl Labeling {
    /// Validate and intern a list of labels.  Labels must be non-empty,
    /// whitespace-free, pairwise distinct, and at most [`MAX_UNIVERSE`] many.
    pub fn new<I, S>(labels: I) -> Result<Labeling>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(labels.len(), MAX_UNIVERSE));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidLabel(label.clone(), "empty".into()));
            }
            if label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel(
                    label.clone(),
                    "contains whitespace".into(),
                ));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Labeling {
            inner: Arc::new(Inner { labels, index }),
        })
    }

    /// The labeling `"1", "2", …, "n"`.
    pub fn numeric(n: usize) -> Result<Labeling> {
        Labeling::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    /// 0-based index of a label.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Label of a 0-based index.
    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    /// Check that an index is a valid vertex of this universe.
    pub fn check_vertex(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(index, self.len()))
        }
    }

    /// The full vertex set of this universe.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    /// Check that a set only uses vertices of this universe.
    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.is_subset_of(self.full_set()) {
            Ok(())
        } else {
            Err(Error::SetOutsideUniverse(format!("{set:?}")))
        }
    }

    /// Parse a set from labels.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for label in labels {
            s = s.insert(self.index_of(label)?);
        }
        Ok(s)
    }

    /// The restricted labeling keeping exactly the vertices of `keep`, in
    /// the same relative order.  Pairs with
    /// [`VertexSet::compress_into`](super::VertexSet::compress_into).
    pub fn restrict(&self, keep: VertexSet) -> Labeling {
        let labels: Vec<String> = keep.iter().map(|i| self.inner.labels[i].clone()).collect();
        Labeling::new(labels).expect("restriction of a valid labeling stays valid")
    }

    /// Render a set as `{a,b,c}` using this labeling, ascending indices.
    pub fn render_set(&self, set: VertexSet) -> String {
        let mut out = String::from("{");
        for (pos, i) in set.iter().enumerate() {
            if pos > 0 {
                out.push(',');
            }
            out.push_str(self.label(i));
        }
        out.push('}');
        out
    }
}

impl PartialEq for Labeling {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for Labeling {}
