"""quadclass: class-number divisibility checks for Q(sqrt(x^2 - 4k^n))."""

__version__ = "0.3.0"
