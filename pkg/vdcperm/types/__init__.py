"""
Types for the vdcperm package.
"""
