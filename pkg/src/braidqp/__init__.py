"""Garside-theory engines for braid groups.

Normal forms over the standard and dual Garside structures, conjugacy via
sliding circuits, membership in products of conjugacy classes of atom powers,
and a complete quasipositivity decision for 3-strand braids.
"""

from .artin import ArtinStructure, artin_structure
from .conjugacy import (
    Arrow,
    ResourceCapExceeded,
    SlidingCircuits,
    are_conjugate,
    cycling,
    cycling_orbit,
    cycling_transport,
    cyclic_sliding,
    decycling,
    decycling_orbit,
    final_factor,
    in_sliding_circuit,
    initial_factor,
    min_sc_conjugator,
    preferred_prefix,
    slide_to_circuit,
    sliding_circuits,
    sliding_transport,
    summit_inf_sup,
)
from .core import GarsideStructure, NormalForm, Simple, inverse_perm, mult
from .dual import DualStructure, dual_structure
from .qp3 import (
    PAForm,
    f_i,
    is_almost_reduced,
    is_quasipositive_3braid,
    is_reduced,
    pa_form_element,
    qp3,
    qp_half_twist_power,
    reduce,
    signature_nullity,
    to_pa_form,
)
from .recognition import (
    FormWitness,
    RecognitionQuery,
    RecognitionResult,
    conjugate_atoms,
    match_power_form,
    match_product_form,
    rebuild_witness,
    recognize,
    recognize_dual,
    recognize_standard,
    structure_for,
    summit_length_filter,
    verify_witness,
)
from .words import (
    BraidWord,
    StructureId,
    StructureKind,
    WordSyntaxError,
    algebraic_length,
    parse_word,
    word_to_text,
)

__all__ = [
    "Arrow",
    "ArtinStructure",
    "BraidWord",
    "DualStructure",
    "FormWitness",
    "GarsideStructure",
    "NormalForm",
    "PAForm",
    "RecognitionQuery",
    "RecognitionResult",
    "ResourceCapExceeded",
    "Simple",
    "SlidingCircuits",
    "StructureId",
    "StructureKind",
    "WordSyntaxError",
    "algebraic_length",
    "are_conjugate",
    "artin_structure",
    "conjugate_atoms",
    "cycling",
    "cycling_orbit",
    "cycling_transport",
    "cyclic_sliding",
    "decycling",
    "decycling_orbit",
    "dual_structure",
    "f_i",
    "final_factor",
    "in_sliding_circuit",
    "initial_factor",
    "inverse_perm",
    "is_almost_reduced",
    "is_quasipositive_3braid",
    "is_reduced",
    "match_power_form",
    "match_product_form",
    "min_sc_conjugator",
    "mult",
    "pa_form_element",
    "parse_word",
    "preferred_prefix",
    "qp3",
    "qp_half_twist_power",
    "rebuild_witness",
    "recognize",
    "recognize_dual",
    "recognize_standard",
    "reduce",
    "signature_nullity",
    "slide_to_circuit",
    "sliding_circuits",
    "sliding_transport",
    "structure_for",
    "summit_inf_sup",
    "summit_length_filter",
    "to_pa_form",
    "verify_witness",
    "word_to_text",
]
