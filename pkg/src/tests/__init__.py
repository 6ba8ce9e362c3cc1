"""
Test suite for the houghton toolkit.
"""
