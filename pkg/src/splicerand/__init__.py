from .combiner import (
    ExtendedGenerator,
    ExtendedSample,
    GridRange,
    PairInput,
    ResolutionParam,
    combine,
    compose_index,
    decode_index,
    index_to_unit,
    is_accepted,
    lattice_size,
    next_extended,
    normalize_continuous,
    normalize_discrete,
    normalize_unit,
    open_unit,
    prngd_next,
    rejection_bounds,
    uniform_interval,
    validators,
)
from .sources import (
    CounterSource,
    Mrg32k3a,
    RangeReducer,
    SourceKind,
    UniformSource,
    XorShift32,
    build_source,
    derive_seed,
    reduce_to_width,
    seed_expand,
)
from .stats import (
    OracleResult,
    TestReport,
    chi_square_uniformity,
    exhaustive_oracle,
    ks_uniformity,
    low_bits_uniformity,
    rejection_rate,
)
from .archive import ReportArchive
from . import errors

__all__ = [
    "ExtendedGenerator",
    "ExtendedSample",
    "GridRange",
    "PairInput",
    "ResolutionParam",
    "combine",
    "compose_index",
    "decode_index",
    "index_to_unit",
    "is_accepted",
    "lattice_size",
    "next_extended",
    "normalize_continuous",
    "normalize_discrete",
    "normalize_unit",
    "open_unit",
    "prngd_next",
    "rejection_bounds",
    "uniform_interval",
    "validators",
    "CounterSource",
    "Mrg32k3a",
    "RangeReducer",
    "SourceKind",
    "UniformSource",
    "XorShift32",
    "build_source",
    "derive_seed",
    "reduce_to_width",
    "seed_expand",
    "OracleResult",
    "TestReport",
    "chi_square_uniformity",
    "exhaustive_oracle",
    "ks_uniformity",
    "low_bits_uniformity",
    "rejection_rate",
    "ReportArchive",
    "errors",
]
