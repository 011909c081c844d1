pub mod algebra;
pub mod cli;
pub mod cochains;
pub mod cs;
pub mod format;
pub mod groups;
pub mod ops;
pub mod verify;
