"""
Test suite for the circumradius toolkit.

Structure:
- unit/: per-package tests of core
- integration/: command line runs and full classifier sweeps
"""
