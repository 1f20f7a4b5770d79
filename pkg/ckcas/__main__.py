"""
Main entry point when running ckcas as a module.
"""

from ckcas.main import main

if __name__ == "__main__":
    main()
