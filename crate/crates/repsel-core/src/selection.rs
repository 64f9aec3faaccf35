use alloc::vec::Vec;

use crate::properties::Certificate;

/// A chosen subset of metrics plus the certificate that it satisfies the
/// requested property.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Selection {
    /// Ascending metric indices.
    pub members: Vec<usize>,
    pub certificate: Certificate,
    /// Seed used, when the selection was sampled.
    #[cfg_attr(
        feature = "serde",
        serde(skip_serializing_if = "Option::is_none", default)
    )]
    pub seed: Option<u64>,
    /// 1-based index of the sampling attempt that succeeded.
    #[cfg_attr(
        feature = "serde",
        serde(skip_serializing_if = "Option::is_none", default)
    )]
    pub attempts: Option<u32>,
}

impl Selection {
    pub(crate) fn deterministic(members: Vec<usize>, certificate: Certificate) -> Self {
        Selection {
            members,
            certificate,
            seed: None,
            attempts: None,
        }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}
