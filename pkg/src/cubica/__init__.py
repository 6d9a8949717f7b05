"""cubica: exact construction, counting, twisting and verification of cubic
covers of the projective line with prescribed ramification, plus Parshin
covers of genus-1 and genus-2 curves."""

__version__ = "0.1.0"
