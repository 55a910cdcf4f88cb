"""Prime-power orders of automorphisms of smooth projective hypersurfaces."""

__version__ = "0.1.0"

from .family import Case, HypersurfaceFamily, InvalidFamily, classify  # noqa: E402
from .numtheory import PrimePower, factorize, mult_order  # noqa: E402
from .autos import Signature, gl_order, pgl_order, semi_invariance_exponent  # noqa: E402
from .forms import ChainSumForm, MonomialForm, format_form, witness  # noqa: E402
from .smoothness import is_smooth_chain_sum  # noqa: E402
from .criterion import OrderCertificate, all_admissible, brute_force_admissible, factor_table, is_admissible  # noqa: E402
from .sylow import SylowStatus, SylowVerdict, exponent_report, p_squared_excluded  # noqa: E402

__all__ = [
    "Case", "ChainSumForm", "HypersurfaceFamily", "InvalidFamily", "MonomialForm", "OrderCertificate",
    "PrimePower", "Signature", "SylowStatus", "SylowVerdict", "all_admissible", "brute_force_admissible",
    "classify", "exponent_report", "factor_table", "factorize", "format_form", "gl_order", "is_admissible",
    "is_smooth_chain_sum", "mult_order", "p_squared_excluded", "pgl_order", "semi_invariance_exponent",
    "witness",
]
