"""Exact arithmetic and certified constructions for sums of two cubes.

The package ties together five layers: exact point arithmetic on the cubic
x^3 + y^3 = m0 z^3 and its Weierstrass twin, canonical heights with rigorous
interval radii, a construction that manufactures integers with prescribed
numbers of coprime cube-sum representations, machine-checkable JSON
certificates for those runs, and an independent brute-force census oracle.
"""

from .certificate import (
    CertificateFormatError,
    VerifyReport,
    certificate_to_json,
    parse_certificate,
    verify_certificate,
    write_certificate,
)
from .construct import (
    Certificate,
    ChainConstants,
    DivisorCheck,
    GeneratorDependenceError,
    build_certificate,
    chain_constants,
    density_constant,
    divisor_check,
    generate_lattice_points,
    lattice_height_bound_check,
    minimal_box_size,
    z_size_constant,
)
from .curves import (
    CUBIC_IDENTITY,
    CubicPoint,
    CurveConfig,
    INFINITY,
    WeierstrassPoint,
    add,
    cubic_add,
    cubic_smul,
    from_weierstrass,
    on_cubic,
    on_weierstrass,
    smul,
    to_weierstrass,
)
from .heights import (
    GramMatrix,
    PrecisionBudgetError,
    canonical_height,
    independence,
    naive_height,
    offset_window,
    offset_window_holds,
    pairing,
)
from .numeric import ApproxReal, gcd3, icbrt, log_abs, to_primitive
from .oracle import (
    HAVE_COMPILED_KERNEL,
    RepCensus,
    count_reps,
    search_points,
    torsion_probe,
)

__version__ = "0.1.0"
