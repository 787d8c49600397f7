import logging

import numpy as np

from ..combiner import GridRange, ResolutionParam, is_accepted, normalize_discrete
from ..combiner import validators as v
from ..errors import OracleSizeError
from .report import OracleResult

logger = logging.getLogger(__name__)

MAX_ORACLE_M = 4096


def exhaustive_oracle(m: int, p: ResolutionParam) -> OracleResult:
    """Enumerate all m^2 grid pairs and summarise the accepted outputs.

    Both draws range over {0, k, ..., (m - 1)k}. ``uniform`` certifies that
    every accepted pair lands on its own value, so uniform inputs give
    exactly equiprobable outputs.

    Raises:
        InvalidRangeError: If m < 4 or m * k > 1.
        OracleSizeError: If m > 4096.
    """
    if m > MAX_ORACLE_M:
        raise OracleSizeError(
            f"Refusing to enumerate {m}^2 pairs; the oracle is limited to m <= {MAX_ORACLE_M}."
        )
    v.validate_modulus(m, p.w)
    r = GridRange.span(m, p)
    grid = np.arange(m, dtype=np.int64) * p.k
    x1, x2 = np.meshgrid(grid, grid, indexing="ij")
    accepted = is_accepted(x1, r)
    logger.info(
        "oracle m=%d w=%d: %d pairs, %d accepted", m, p.w, m * m, accepted.sum()
    )
    values = normalize_discrete(x1[accepted], x2[accepted], r, r, p)
    distinct, counts = np.unique(values, return_counts=True)
    return OracleResult(
        m=m,
        w=p.w,
        distinct_count=len(distinct),
        min_value=float(distinct[0]),
        max_value=float(distinct[-1]),
        max_multiplicity=int(counts.max()),
    )
