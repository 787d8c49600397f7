from . import validators as validators
from .params import ResolutionParam as ResolutionParam
from .params import GridRange as GridRange
from .params import PairInput as PairInput
from .params import ExtendedSample as ExtendedSample
from .formulas import combine as combine
from .formulas import uniform_interval as uniform_interval
from .formulas import is_accepted as is_accepted
from .formulas import rejection_bounds as rejection_bounds
from .formulas import normalize_continuous as normalize_continuous
from .formulas import normalize_discrete as normalize_discrete
from .formulas import normalize_unit as normalize_unit
from .formulas import lattice_size as lattice_size
from .formulas import compose_index as compose_index
from .formulas import decode_index as decode_index
from .formulas import index_to_unit as index_to_unit
from .formulas import open_unit as open_unit
from .generator import PrngdBounds as PrngdBounds
from .generator import prngd_next as prngd_next
from .generator import next_extended as next_extended
from .generator import ExtendedGenerator as ExtendedGenerator
