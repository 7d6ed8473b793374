"""cylq: exact-arithmetic verification engine for cylindric-partition q-series."""

__version__ = "0.1.0"
