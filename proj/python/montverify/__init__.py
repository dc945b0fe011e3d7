"""Exact verifier for boundary slopes of 3-string Montesinos knots.

All arithmetic is exact (big rationals and Laurent polynomials); every value
returned here is either a Python int/bool or a string rendering of an exact
quantity, so round-tripping is lossless.
"""

from _montverify import degree, jones, report_json, surface, verify

__all__ = ["degree", "jones", "report_json", "surface", "verify"]
