"""stlrss: offline STL robustness monitoring and RSS-guided highway
scenario generation, classification, and falsification."""

__version__ = "0.1.0"
