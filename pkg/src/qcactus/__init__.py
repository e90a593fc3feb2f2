"""Exact braidings and cactus commutors for quantized sl2 and its crystals.

The package has four layers:

  qexact   -- exact arithmetic in the rational functions of q^(1/2);
  groups   -- braid and cactus words, their symmetric group images, and
              a generic relation verifier for concrete actions;
  crystals -- sl2 chain crystals, tensor words, the two commutors, the
              cactus group action, coboundary checks, and the braiding
              obstruction;
  uqsl2    -- symbolic modules, the R-matrix braiding, Drinfel'd style
              unitarization, and the reduction at q = infinity that
              recovers the signed crystal commutor.

The command line entry point lives in qcactus.cli.
"""

from .qexact import (
    HalfLaurent,
    QRational,
    Qpow,
    qpow,
    quantum_int,
    quantum_factorial,
    is_regular_at_infinity,
    reduce_mod_qhalf,
    monomial_sqrt,
    parse_qrational,
)
from .groups import (
    Permutation,
    BraidWord,
    CactusWord,
    s_hat,
    cactus_relation_instances,
    project_to_symmetric,
    verify_action,
)
from .crystals import (
    ChainElement,
    TensorWord,
    CrystalMap,
    chain_crystal,
    words,
    tensor_e,
    tensor_f,
    decompose,
    schutzenberger,
    commutor_S,
    commutor_c,
    cactus_action,
    check_coboundary,
    braiding_obstruction,
    crystal_dot,
)
from .uqsl2 import (
    QMatrix,
    UqModule,
    irreducible,
    tensor_module,
    braiding_matrix,
    unitarized_matrix,
    lattice_check_and_reduce,
    verify_kt07,
)

__version__ = "0.1.0"
