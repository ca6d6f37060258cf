"""
Shifted-power toolkit
Exact linear independence, annihilating equations, Waring ranks and Polya combinatorics
for families of shifted powers (x - a)^e
"""

__version__ = "1.0.0"
__description__ = "Exact analysis of shifted-power families over Q and cyclotomic fields"
