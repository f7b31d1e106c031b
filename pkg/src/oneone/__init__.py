"""(1,1) knot diagrams on the torus, their L-space verdicts, and 1-bridge braids."""
__version__ = "0.1.0"
