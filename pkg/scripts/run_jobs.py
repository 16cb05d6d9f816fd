#!/usr/bin/env python3
"""Run a job file through the batch engine.

Usage: python scripts/run_jobs.py --jobs scripts/sample_jobs.json [--out results.json]
"""

import sys

from tautchi.cli import main

if __name__ == "__main__":
    sys.exit(main())
