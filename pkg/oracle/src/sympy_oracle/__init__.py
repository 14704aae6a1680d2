"""SymPy-backed oracle for the gbcert task protocol.

One task JSON document on stdin, one result JSON document on stdout. The
oracle is an independent implementation: it shares no code with the gbcert
package and is only trusted as far as its answers survive gbcert's checkers.
"""

from .main import oracle_main

__all__ = ["oracle_main"]
