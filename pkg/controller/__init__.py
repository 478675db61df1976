"""
Controller module for LCD Code Lab
"""
