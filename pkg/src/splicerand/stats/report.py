from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

DEFAULT_P_BAND = (0.001, 0.999)


def validate_p_band(band: tuple[float, float]) -> tuple[float, float]:
    lo, hi = band
    if not 0.0 <= lo < hi <= 1.0:
        raise ValueError(f"p-value band must satisfy 0 <= lo < hi <= 1, got {band}.")
    return band


class TestReport(BaseModel):
    """Outcome of one uniformity test.

    The verdict passes iff the p-value lies inside the two-sided band.
    """

    __test__ = False
    model_config = ConfigDict(frozen=True)

    test_name: str
    statistic: float
    p_value: float = Field(ge=0.0, le=1.0)
    n: int = Field(ge=0)
    p_band: tuple[float, float] = DEFAULT_P_BAND

    check_band = field_validator("p_band")(validate_p_band)

    @computed_field
    @property
    def verdict(self) -> Literal["pass", "fail"]:
        lo, hi = self.p_band
        return "pass" if lo <= self.p_value <= hi else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


class OracleResult(BaseModel):
    """Multiset summary of every output the construction can produce."""

    model_config = ConfigDict(frozen=True)

    m: int
    w: int
    distinct_count: int
    min_value: float
    max_value: float
    max_multiplicity: int

    @computed_field
    @property
    def uniform(self) -> bool:
        return (
            self.distinct_count == (self.m - 2) * self.m and self.max_multiplicity == 1
        )

    def summary(self) -> str:
        return (
            f"distinct={self.distinct_count} min={self.min_value:.17g} "
            f"max={self.max_value:.17g} uniform={str(self.uniform).lower()}"
        )
