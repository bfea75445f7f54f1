"""Solve DIMACS files with pysat; prints '<path> SAT|UNSAT' per file."""
import sys

from pysat.formula import CNF
from pysat.solvers import Minisat22

for path in sys.argv[1:]:
    with Minisat22(bootstrap_with=CNF(from_file=path).clauses) as solver:
        print(path, "SAT" if solver.solve() else "UNSAT")
