"""
__init__.py file for semichain folder
"""
