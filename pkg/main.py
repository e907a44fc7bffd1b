#!/usr/bin/env python3
"""
Bidiophantine toolkit - Main entry point
Certifies lattice configurations, enumerates the k = 3, 4 families, runs the searches
and reproduces the acceptance ledger.
"""
from src.cli import main

if __name__ == "__main__":
    main()
