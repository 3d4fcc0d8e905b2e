"""
Quiver DT engine.

This package contains the library and command-line front end responsible for:
- quiver mutation and principal extensions
- maximal green sequences from the mutation method
- refined DT invariants as ordered quantum dilogarithm products

No side effects should occur at import time.
"""

__version__ = "0.3.0"
