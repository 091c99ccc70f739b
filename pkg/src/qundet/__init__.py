"""Stabilizer codewords and their reduced density matrices.

qundet decides whether the two codewords of a stabilizer code (pure
k=1 pairs, or mixed pairs built from k=2 codes) can be told apart
after tracing out qubits.  The symbolic engine works on the binary
symplectic representation and is exact; a dense numpy oracle verifies
every verdict independently on small systems.
"""

from qundet.pauli import PauliOperator, parse_pauli
from qundet.stabilizer import (
    StabilizerGroup,
    logical_x_set,
    in_logical_x_set,
    code_distance,
)
from qundet.codes import CodeSpec, catalog, validate, load_spec, save_spec
from qundet.undetermined import (
    reduced_equal_on,
    unconditional_D,
    conditional_scan,
    undetected_error_cover,
    necessary_ED,
    mixed_tracedown_check,
    mixed_pair_n2,
    analyze_code,
)

__version__ = "0.1.0"
