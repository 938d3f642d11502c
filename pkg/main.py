"""Runs echoloc from a source checkout.

Run as `python main.py count --model square --point 0.2,0.4 --cutoff 30`"""
from echoloc.cli import main

if __name__ == "__main__":
    main()
