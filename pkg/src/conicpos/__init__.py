"""Relative position of a parabola or hyperbola and an ellipse from invariant signs."""

from .classify_hyperbola import (
    CanonicalHyperbolaCircle,
    HyperbolaEllipsePosition,
    HyperbolaSignData,
)
from .classify_hyperbola import classify_canonical as classify_hyperbola_canonical
from .classify_hyperbola import classify_general as classify_hyperbola_ellipse
from .classify_parabola import (
    CanonicalParabolaCircle,
    ParabolaEllipsePosition,
    ParabolaSignData,
)
from .classify_parabola import classify_canonical as classify_parabola_canonical
from .classify_parabola import classify_general as classify_parabola_ellipse
from .conic import Conic, ConicClass, classify_type, conic_from_equation, normalize
from .decision import Verdict
from .errors import (
    AllZero,
    CaseOverlap,
    CommonComponent,
    ConicError,
    DegenerateInput,
    IndeterminateSign,
    InvalidParams,
    LeadingZero,
    NegativeRadicand,
    NoCaseMatched,
    NotFinite,
    ParseError,
    PatternUnmatched,
    RoleMismatch,
)
from .numeric import ApproxScalar, QuadExt, Sign, sign_exact
from .pencil import Cubic, PencilInvariants, char_poly, invariants

__all__ = [
    "AllZero", "ApproxScalar", "CanonicalHyperbolaCircle", "CanonicalParabolaCircle",
    "CaseOverlap", "CommonComponent", "Conic", "ConicClass", "ConicError", "Cubic",
    "DegenerateInput", "HyperbolaEllipsePosition", "HyperbolaSignData", "IndeterminateSign",
    "InvalidParams", "LeadingZero", "NegativeRadicand", "NoCaseMatched", "NotFinite",
    "ParabolaEllipsePosition", "ParabolaSignData", "ParseError", "PatternUnmatched",
    "PencilInvariants", "QuadExt", "RoleMismatch", "Sign", "Verdict", "char_poly",
    "classify_hyperbola_canonical", "classify_hyperbola_ellipse", "classify_parabola_canonical",
    "classify_parabola_ellipse", "classify_type", "conic_from_equation", "invariants",
    "normalize", "sign_exact",
]
