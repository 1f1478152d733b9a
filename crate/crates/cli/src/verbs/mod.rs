pub mod embed;
pub mod folkman;
pub mod omega;
pub mod poly;
pub mod rado;
pub mod search;
