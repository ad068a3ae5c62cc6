//! Community-existence tests and the divisive CLECC extraction.

mod conditions;
mod method;

pub use conditions::{is_strong_community, is_weak_community, member_degrees, satisfies, CommunityCondition};
pub use method::{clecc_method, clecc_plus, ExtractionTrace, FrozenGroup, MethodOptions, Removal};
