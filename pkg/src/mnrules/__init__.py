"""Exact Murnaghan–Nakayama rules in the Schur, Schubert, and quantum Schubert bases.

The package computes power-sum products three ways and lets each check the
others:

- ``symfun.mn_classical``: p_r * s_lambda by signed rim-hook additions,
  truncated to k variables.
- ``schubert.mn_schubert``: p_r(x_1..x_k) * S_w as a signed sum of Schubert
  polynomials indexed by (r+1)-cycles, found by walking labeled chains in the
  k-Bruhat order.
- ``quantum.quantum_mn``: p_r * sigma_lambda in the quantum cohomology of a
  Grassmannian, with the q-terms produced by removing (n-r)-rim hooks.

Supporting layers: ``partitions`` (rim hooks, strips, n-cores),
``poly`` (exact sparse integer polynomials), ``perm`` (Lehmer codes, k-Bruhat
covers), plus independent brute-force oracles used by the test suite and the
``mnrules`` command-line tool (see ``cli``).
"""

from .partitions import (
    CoreResult,
    Partition,
    RimHookRecord,
    add_rim_hooks,
    box_partition,
    is_rim_hook,
    n_core,
    remove_rim_hooks,
    rim_hook_height,
    strips,
    validate_partition,
)
from .perm import (
    LabeledCover,
    Permutation,
    canonical,
    compose,
    inverse,
    k_bruhat_covers,
    lehmer_code,
    length,
)
from .poly import SparsePoly
from .quantum import GrContext, psi_reduce, quantum_mn, quantum_mn_extended
from .schubert import (
    expand_in_schubert,
    grassmannian_permutation,
    mn_schubert,
    monk,
    schubert_poly,
)
from .symfun import grassmannian_project, mn_classical, pieri_e, pieri_h

__version__ = "0.1.0"

__all__ = [
    "CoreResult",
    "GrContext",
    "LabeledCover",
    "Partition",
    "Permutation",
    "RimHookRecord",
    "SparsePoly",
    "add_rim_hooks",
    "box_partition",
    "canonical",
    "compose",
    "expand_in_schubert",
    "grassmannian_permutation",
    "grassmannian_project",
    "inverse",
    "is_rim_hook",
    "k_bruhat_covers",
    "lehmer_code",
    "length",
    "mn_classical",
    "mn_schubert",
    "monk",
    "n_core",
    "pieri_e",
    "pieri_h",
    "psi_reduce",
    "quantum_mn",
    "quantum_mn_extended",
    "remove_rim_hooks",
    "rim_hook_height",
    "schubert_poly",
    "strips",
    "validate_partition",
    "__version__",
]
