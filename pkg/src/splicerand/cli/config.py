import argparse
from pathlib import Path
from typing import Literal, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_validator,
    model_validator,
)

from ..combiner import ResolutionParam
from ..combiner import validators as v
from ..sources import SourceKind
from ..sources.seeding import MASK64
from ..stats import DEFAULT_P_BAND
from ..stats.report import validate_p_band

Subcommand = Literal["gen", "test", "oracle", "bench"]
StreamFormat = Literal["bin", "text", "hex"]
TestSelection = Literal["chi2", "ks", "lowbits", "all"]


class RunConfig(BaseModel):
    """Validated settings of one CLI invocation."""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    source: SourceKind = SourceKind.MRG32K3A
    seed: int = Field(default=0, ge=0, le=MASK64)
    n: int = Field(default=1_000_000, ge=1)
    w: int = Field(default=26, ge=v.MIN_WORD_SIZE, le=v.MAX_WORD_SIZE)
    m: int | None = None
    format: StreamFormat = "bin"
    open_interval: bool = False
    test: TestSelection = "all"
    bins: int = Field(default=1024, ge=2)
    p_band: tuple[float, float] = DEFAULT_P_BAND
    out: Path | None = None
    input: Path | None = None
    shards: int = Field(default=1, ge=1)
    store: Path | None = None

    check_band = field_validator("p_band")(validate_p_band)

    @model_validator(mode="after")
    def _check_modulus(self) -> Self:
        v.validate_modulus(self.modulus, self.w)
        return self

    @computed_field
    @property
    def modulus(self) -> int:
        return self.m if self.m is not None else 1 << self.w

    @property
    def resolution(self) -> ResolutionParam:
        return ResolutionParam.from_bits(self.w)

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> Self:
        """Build from parsed flags, leaving unset flags at their defaults."""
        fields = {
            k: val
            for k, val in vars(ns).items()
            if k in cls.model_fields and val is not None
        }
        return cls(**fields)
