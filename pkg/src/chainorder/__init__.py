"""Order parameters and Omega-information of balanced binary chains."""

__version__ = "0.1.0"

from .chain import (
    Block,
    BlockDecomposition,
    Chain,
    CutSpec,
    PairCounts,
    Topology,
    block_decompose,
    bond,
    canonical_rotation,
    make_near_periodic_G,
    make_near_separation_E,
    make_nA,
    make_S1,
    make_S2,
    pair_counts,
    parse_chain,
)
from .classical import (
    EpsilonModel,
    connection_F,
    connection_F_closed_form,
    gamma_bond,
    k_markov,
    markov_epsilons,
    shannon_H,
)
from .errors import *  # noqa: F401,F403
from .metrics import (
    ChaosClass,
    OrderReport,
    omega2_K_closed,
    omega3_distance,
    order_report,
    t_minus_omega1,
    t_minus_omega1_closed,
    t_minus_omega2,
    t_plus_blockcount,
)
from .oracle import (
    StateSpace,
    bfs_distance,
    bfs_to_pole_set,
    enumerate_states,
    one_step_neighbors,
    verify_suite,
)
from .poles import Omega, PoleKind, classify_pole, pole_distance, pole_minus, pole_plus
