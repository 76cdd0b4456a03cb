"""Neural codes, neural ideals over GF(2), and the ring homomorphisms that preserve them."""

from .codes import (
    Code,
    Flip,
    Permutation,
    Permute,
    Restrict,
    bitflip_code,
    permute_code,
    restrict_code,
    transform_code,
)
from .errors import NeuralError
from .homs import (
    Decomposition,
    NipHom,
    VarImage,
    cf_transport,
    hom_apply_code,
    hom_apply_ideal,
    hom_apply_pm,
    hom_compose,
    hom_decompose,
    hom_preimage_ideal,
    hom_validate,
)
from .ideals import (
    CanonicalForm,
    GeneratorSet,
    NeuralIdeal,
    canonical_form,
    code_of_generators,
    ideal_equal,
    ideal_of_code,
    membership_certificate,
    pm_in_ideal,
)
from .pseudo import (
    ZERO,
    MultilinearPoly,
    Pseudomonomial,
    indicator,
    mlp_expand,
    pm_divides,
    pm_eval,
    pm_expand_indicators,
    pm_make,
)
from .realize import (
    Cover,
    IntervalCover,
    codeword_region,
    compatible_region,
    cover_code,
    intervals_to_cover,
    is_convex_1d,
    realize_transform,
)

__version__ = "0.1.0"
