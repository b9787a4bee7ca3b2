//! f4, e6 and e7 in structural form.

pub mod e6;
pub mod e7;
pub mod f4;
pub mod structure;

pub use e6::{vee, E6};
pub use e7::E7;
pub use f4::F4;
