"""Super weight functions and super stable envelopes over Grassmannians."""

__version__ = "0.1.0"
