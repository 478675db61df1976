"""
Utils package for LCD Code Lab
"""
