"""
Main module for vdcperm. Exports version and main function.
"""

from vdcperm._version import __version__
from vdcperm.console import console_entry_point

if __name__ == "__main__":
    console_entry_point()
