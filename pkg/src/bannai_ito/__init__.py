"""Exact operator calculus for centralizer elements of osp(1,2) realizations by Dunkl operators."""

__version__ = "0.1.0"
