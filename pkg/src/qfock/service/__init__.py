"""HTTP compute service wrapping the core library."""
