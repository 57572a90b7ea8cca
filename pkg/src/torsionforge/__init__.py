"""torsionforge: 2-dimensional simplicial complexes with large torsion in
first homology, built from integer matrices and certified by exact
Smith-normal-form homology."""

from .disc_complex import DiscComplexSpec, cellular_homology, from_matrix
from .exactmat import (
    AbelianGroup,
    IntMatrix,
    SnfResult,
    det_bareiss,
    free_group,
    group_from_factors,
    smith_normal_form,
)
from .hadamard import augment, hadamard_snf_closed_form, is_hadamard, sylvester_double, walsh
from .hmt_builder import build_hmt, hmt_certificate, hmt_face_vector, hmt_torsion_group
from .homology import HomologyResult, boundary_matrices, simplicial_homology
from .speyer import build_speyer_complex, speyer_matrix
from .triangulation import (
    FaceVector,
    SimplicialComplex2,
    ValidationReport,
    euler_characteristic,
    face_vector,
    triangulate_generic,
    validate_complex,
)
from .valid_sequences import ValidSequence, ValidityReport, check_valid, extend_sequence, valid_sequence

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "DiscComplexSpec",
    "FaceVector",
    "HomologyResult",
    "IntMatrix",
    "SimplicialComplex2",
    "SnfResult",
    "ValidSequence",
    "ValidationReport",
    "ValidityReport",
    "augment",
    "boundary_matrices",
    "build_hmt",
    "build_speyer_complex",
    "cellular_homology",
    "check_valid",
    "det_bareiss",
    "euler_characteristic",
    "extend_sequence",
    "face_vector",
    "free_group",
    "from_matrix",
    "group_from_factors",
    "hadamard_snf_closed_form",
    "hmt_certificate",
    "hmt_face_vector",
    "hmt_torsion_group",
    "is_hadamard",
    "simplicial_homology",
    "smith_normal_form",
    "speyer_matrix",
    "sylvester_double",
    "triangulate_generic",
    "valid_sequence",
    "validate_complex",
    "walsh",
]
