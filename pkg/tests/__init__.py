"""Test package for the sheaf cohomology toolkit."""
