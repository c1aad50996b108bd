//! C ABI for the secrelay simulator. Placeholder; filled in alongside the
//! generated header.
