"""
rpgraph command-line entry point
Run: python rpgraph.py <verb> [options]
"""
import sys

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
