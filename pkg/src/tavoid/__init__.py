"""Exact tools for T-avoiding spherical codes, designs and energy bounds."""

__version__ = "0.1.0"
