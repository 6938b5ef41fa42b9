"""quadkit: exact signed-area identities for planar quadruples.

For any four points A, B, C, D in the plane, with K the signed triangle
areas (counterclockwise positive, vertex omitted from the subscript):

    K_BCD * A - K_ACD * B + K_ABD * C - K_ABC * D = 0

as position vectors.  This package exposes that identity and each lemma
behind it as residual operations over exact-rational or float arithmetic,
derives barycentric coordinates from it, and ships a small identity
language with a randomized exact verifier plus a batch CLI.
"""

from .barycentric import (
    BaryCoords,
    DegenerateTriangleError,
    Location,
    Region,
    area_weights,
    barycentric_of,
    classify,
    reconstruct,
)
from .dsl import (
    IdentityAst,
    IdentitySyntaxError,
    IdentityTypeError,
    MissingAssignmentError,
    VerifyReport,
    affine_balanced,
    eval_identity,
    parse_identity,
    print_identity,
    verify_identity,
)
from .generators import KINDS, GeneratorSpec, generate_quads
from .geometry import (
    ORIGIN,
    Point2,
    Vec2,
    Vec3,
    cross3,
    dot2,
    embed,
    embed_vec,
    perp,
    quad_signed_area,
    signed_area,
)
from .identities import (
    AreaQuadruple,
    QuadConfig,
    area_quadruple,
    cross_magnitude_residual,
    decomposition_residual,
    jacobi_residual,
    rotation_lemma_residual,
    translation_invariance_residual,
    triple_product_residual,
)
from .records import RecordError, format_record, parse_record
from .scalar import (
    BACKENDS,
    EXACT,
    FLOAT,
    ScalarParseError,
    ToleranceSpec,
    format_scalar,
    parse_scalar,
)

__version__ = "0.1.0"
