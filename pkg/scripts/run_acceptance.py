#!/usr/bin/env python3
"""Run the acceptance checklist and show one line per criterion.

Equivalent to `pytest tests/test_acceptance.py -v -s`; kept as a script
so the checklist can be run without remembering the pytest flags.
"""

import os
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
TESTS = os.path.join(HERE, os.pardir, "tests", "test_acceptance.py")

if __name__ == "__main__":
    sys.exit(pytest.main([TESTS, "-v", "-s"] + sys.argv[1:]))
