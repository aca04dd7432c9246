"""
Sheaf Cohomology Toolkit

Exact computation of Möbius functions, Čech and nerve cohomology of (co)presheaves on
finite posets, interaction decompositions and marginal-problem dimension formulas,
available as a command-line tool and as an MCP server.
"""

__version__ = "0.1.0"
