"""Cohomology of homogeneous bundles on Grassmannians and checks of exceptional collections."""

from .bbw import GrassmannianSpec, bbw_gr, kapranov_pairing, sp_acyclic
from .bundles import normalize, parse
from .certificate import SCHEMA, Certificate, Verdict
from .oddvanish import certify_acyclic_submaximal, cohomology_on_X

__version__ = "0.1.0"

__all__ = [
    "SCHEMA", "Certificate", "GrassmannianSpec", "Verdict", "bbw_gr", "certify_acyclic_submaximal",
    "cohomology_on_X", "kapranov_pairing", "normalize", "parse", "sp_acyclic",
]
