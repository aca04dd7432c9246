"""Tests that drive the sheaf toolkit through the MCP client."""
