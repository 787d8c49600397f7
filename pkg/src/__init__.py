from .splicerand import (
    ExtendedGenerator,
    ExtendedSample,
    GridRange,
    PairInput,
    ResolutionParam,
    ReportArchive,
    OracleResult,
    TestReport,
    SourceKind,
    build_source,
    exhaustive_oracle,
    validators,
    errors,
)

# Explicitly define the public API
__all__ = [
    "ExtendedGenerator",
    "ExtendedSample",
    "GridRange",
    "PairInput",
    "ResolutionParam",
    "ReportArchive",
    "OracleResult",
    "TestReport",
    "SourceKind",
    "build_source",
    "exhaustive_oracle",
    "validators",
    "errors",
]
