//! Reading and writing graphs and result reports.
//!
//! Two graph formats are supported: the compact graph6 line format
//! ([`graph6`]) and a plain edge list with an explicit vertex count
//! ([`edgelist`]), so graphs with isolated vertices survive a round trip in
//! either. [`report`] serializes a bound computation to JSON with a stable
//! field order.

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use edgelist::{encode_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use report::{encode_report, ReportDocument, ReportError};
