from .base import UniformSource as UniformSource
from .base import FractionSource as FractionSource
from .counter import CounterSource as CounterSource
from .counter import ConstantSource as ConstantSource
from .counter import SequenceSource as SequenceSource
from .counter import FractionSequence as FractionSequence
from .counter import counter_next as counter_next
from .mrg32k3a import Mrg32k3a as Mrg32k3a
from .mrg32k3a import mrg32k3a_next as mrg32k3a_next
from .xorshift import XorShift32 as XorShift32
from .xorshift import xorshift32_next as xorshift32_next
from .reducer import RangeReducer as RangeReducer
from .reducer import reduce_to_modulus as reduce_to_modulus
from .reducer import reduce_to_width as reduce_to_width
from .seeding import Seed as Seed
from .seeding import seed_expand as seed_expand
from .seeding import derive_seed as derive_seed
from .factory import SourceKind as SourceKind
from .factory import build_source as build_source
