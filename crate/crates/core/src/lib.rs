//! Polynomial evaluation codes on simplices (CAP) and on hyperplane
//! arrangements (GAP), with unique decoders, robustness analysis of
//! evaluation shapes and local tests.

pub mod combin;
pub mod ffield;
pub mod poly;
pub mod linalg;
pub mod rs;
pub mod gmd;
pub mod shapes;
pub mod cap;
pub mod gap;
pub mod ltc;
pub mod oracle;
pub mod cli;
