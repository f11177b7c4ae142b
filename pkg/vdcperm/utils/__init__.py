"""
Utility functions for vdcperm. Configuration, logging, argument parsing
and the formatting used by every command.
"""
