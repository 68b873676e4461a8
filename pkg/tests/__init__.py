"""
Tests Module - Unit and Integration Tests

Oracle, bounds, analysis and command-line tests.
"""
