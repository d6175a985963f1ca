"""State-vector quantum algorithm simulator.

Thin Python layer over the native module: state vectors and gates, the
Fourier transform circuit, Shor factoring, Grover search and 3-qubit
repetition-code error correction.
"""

from qsim._qsim import *  # noqa: F401,F403
from qsim._qsim import __version__  # noqa: F401
