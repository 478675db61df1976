"""
Modules package for LCD Code Lab
"""
