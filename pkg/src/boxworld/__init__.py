"""Exact-arithmetic toolkit for the non-local box operational theory.

States, effects and boxes with dyadic-rational entries; the reversible group
and its orbits; perfect discrimination; purification scans; and runnable
bit-commitment protocols with full cheating and impossibility audits.
"""

from .dyadic import Dyadic, dy
from .tensors import (
    GptTensor,
    Role,
    Validity,
    add_effects,
    affine_combination,
    effect,
    is_valid_effect,
    is_valid_state,
    marginalize,
    pair,
    scale_effect,
    state,
    subtract_effect,
    tensor_product,
)
from .tables import BoxTable, chsh_value, is_no_signalling, uniform_table
from .catalog import (
    bipartite_state,
    box_table_local,
    box_table_nonlocal,
    box_table_single,
    deterministic_effect,
    extremal_effect,
    maximally_mixed,
    pure_state,
    tripartite_class_table,
)
from .fiducial import (
    CLOSED_FORM_CONVENTION,
    DEFAULT_CONVENTION,
    FiducialConvention,
    state_to_table,
    table_to_state,
    tripartite_class_state,
    valid_conventions,
)
from .transforms import (
    Relabelling,
    ReversibleTransform,
    SingleSiteTransform,
    SiteRelabelling,
    apply,
    compose,
    enumerate_group,
    identity_transform,
    invert,
    locally_connected,
    orbit,
    relabel_table,
    site_transform,
    subgroup_on_sites,
    swap_transform,
)
from .discrimination import (
    TwoOutcomePovm,
    closed_form_nonlocal_effect,
    discriminating_povm,
    find_separating_input,
    output_parity,
    verify_perfect_discrimination,
)
from .purification import (
    PurificationReport,
    find_purifications,
    is_internal_single,
    is_purification,
    tripartite_uniqueness_counterexample,
)
from .commitment import (
    AuditReport,
    CheatParams,
    SweepSummary,
    Transcript,
    audit_protocol,
    count_11_odd,
    impossibility_sweep,
    run_buhrman,
    run_single_box,
    solve_cheat,
    verify_transcript,
)

__version__ = "0.1.0"
