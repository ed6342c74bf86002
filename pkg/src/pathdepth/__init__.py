"""Depth of powers of edge ideals of increasing weighted paths.

The package has three layers: exact monomial ideal arithmetic, the
combinatorial depth formula for weighted paths (with witness monomials and
closed-form colon ideals), and an independent depth oracle that computes
Koszul strand homology for arbitrary monomial ideals.  A campaign harness
cross-checks the formula against the oracle and verifies every colon
identity on enumerated or sampled instances.
"""

from .monomials import DimensionMismatch, Monomial, MonomialIdeal, minimalize
from .weighted_paths import (
    Block,
    DeltaProfile,
    ExtendedBlock,
    WeightVector,
    abc_partition,
    block_counts,
    delta_set,
    depth_drop_bounds,
    depth_formula,
    extended_blocks,
    gluable,
    maximal_blocks,
    mu_labels,
    path_ideal,
    piecewise_depth,
    subpath_ideal,
)
from .witnesses import (
    Factor,
    FactorIdeals,
    WitnessMismatch,
    WitnessSet,
    colon_by_g,
    colon_by_rho,
    colon_x2_identity,
    edge_monomial,
    factor_ideals,
    first_power_witness,
    leaf_colon_identity,
    modified_edge_monomial,
    padded_witness,
    witness_product,
    witness_report,
)
from .oracle import (
    BudgetExceeded,
    DepthReport,
    InvalidIdeal,
    depth_oracle,
    koszul_homology_dims,
    lcm_closure,
)
from .campaign import (
    CampaignConfig,
    CampaignResult,
    enumerate_weights,
    run_campaign,
    sample_weights,
)

__version__ = "0.1.0"
