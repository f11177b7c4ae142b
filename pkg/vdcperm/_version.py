"""
Version module for vdcperm.
"""

__version__ = "0.3.0"
