"""Exact counting of su(3) representations by dimension.

Irrep census, module totals with and without singlets, noiseless-subsystem
size distributions, and the growth / inverted-beta fits over them.
"""

from .fitstats import (
    FitConfig,
    FitError,
    GrowthFit,
    InvBetaFit,
    SeriesPoints,
    delta_f,
    fit_growth,
    fit_invbeta,
    invbeta_pdf,
    mod_series,
    peak_location,
    singlet_series,
)
from .irreps import (
    DimensionCensus,
    RealThreshold,
    YoungDiagram,
    build_census,
    count_irreps_upto,
    weyl_dim,
    xi,
    xi_bruteforce,
)
from .modcount import (
    InsufficientCensusError,
    ModuleTable,
    NssDistribution,
    gf_oracle,
    gf_table,
    mod_singlet,
    mod_total,
    module_table,
    multiset_count,
    nss_distribution,
    shape_count,
    singlet_fraction,
)
from .partitions import (
    PartSet,
    count_partitions_exact,
    count_restricted,
    enumerate_restricted,
    hardy_ramanujan_estimate,
    to_shape,
)

__version__ = "0.1.0"
