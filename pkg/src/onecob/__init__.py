"""Oriented 1-cobordisms, the Brauerian matrix functor, and strict 1-TQFTs."""

from .brauer import (
    ColorIndex,
    DimensionBaseError,
    SizeCapError,
    brauer_image,
    coloring_matrix,
    decode,
    encode,
    verify_faithfulness,
    verify_faithfulness_all,
    verify_functoriality,
    verify_functoriality_all,
    verify_functoriality_random,
)
from .cobordism import (
    Cobordism,
    CobordismError,
    CompositionError,
    Endpoint,
    Generator,
    In,
    Out,
    Side,
    SignedObject,
    compose,
    enumerate_homset,
    equivalent,
    generator,
    identity,
    obj,
    permutation_cobordism,
    tau,
    tensor,
)
from .matrix import (
    DimensionError,
    ExactMatrix,
    SingularMatrixError,
    commutation_matrix,
    inverse,
    kron,
    matmul,
    vec_col,
    vec_row,
)
from .report import Report
from .serialize import dump_cobordism, parse_cobordism
from .tqft import (
    InvalidTqftError,
    StrictTqft,
    check_axioms,
    eval_via_theta,
    theta,
    tqft_eval,
    tqft_new,
)
from .words import Atom, AtomLayer, GeneratorWord, PermutationLayer, decompose, recompose

__version__ = "0.1.0"
