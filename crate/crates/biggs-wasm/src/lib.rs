// Filled in once the core library settles.
