"""Scenario runner, figure presets, export and CLI."""
