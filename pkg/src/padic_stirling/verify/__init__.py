"""Batch verification commands, result cache and the CLI."""
