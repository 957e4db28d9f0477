pub mod jet;
pub mod quad;
pub mod real;
pub mod sum;
