"""Independent dense reference for the Pauli algebra tests.

Built from literal 2x2 matrices and Kronecker products, on purpose:
the package's own dense module shares bit conventions with the
symbolic code, so these helpers are the conventions' outside check.
"""

import numpy as np

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)

LETTER = {"I": I2, "X": X2, "Y": Y2, "Z": Z2}

# per-qubit X^x Z^z products, the raw symplectic factors
XZ = {(0, 0): I2, (1, 0): X2, (0, 1): Z2, (1, 1): X2 @ Z2}

SIGN = {"": 1, "+": 1, "-": -1, "+i": 1j, "-i": -1j}


def kron_all(mats):
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def matrix_from_bits(n, x_bits, z_bits, phase_exp):
    """i^phase * product of per-qubit X^x Z^z, qubit 1 leftmost."""
    mats = [XZ[(x_bits >> i & 1, z_bits >> i & 1)] for i in range(n)]
    return (1j ** phase_exp) * kron_all(mats)


def matrix_from_string(text):
    """Sign prefix times the literal letter matrices."""
    body = text.lstrip("+-i")
    prefix = text[: len(text) - len(body)]
    return SIGN[prefix] * kron_all([LETTER[ch] for ch in body])


def matrix_of(p):
    """Dense form of a PauliOperator via the bit definition."""
    return matrix_from_bits(p.n, p.x_bits, p.z_bits, p.phase_exp)
