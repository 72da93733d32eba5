"""
Election Control Lab
Heuristic and exhaustive solvers for Bucklin, fallback and plurality control,
with a Monte-Carlo experiment harness
"""

__version__ = "1.0.0"
__description__ = "Experimental study of election control under Bucklin, fallback and plurality voting"
