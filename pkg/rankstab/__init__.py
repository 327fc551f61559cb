"""rankstab package marker for module-based execution."""
