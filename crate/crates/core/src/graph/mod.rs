//! Network model: multi-layered networks, dynamic networks and partitions.

mod dsn;
mod msn;
mod partition;

pub use dsn::{load_dsn, Dsn, Frame};
pub use msn::{load_msn, natural_cmp, LayerIx, Msn, MsnBuilder, NodeIx};
pub use partition::{Group, Partition};
