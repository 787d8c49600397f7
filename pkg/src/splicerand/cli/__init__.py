from .config import RunConfig as RunConfig
from .bench import BenchResult as BenchResult
from .bench import run_benchmark as run_benchmark
from .main import main as main
from .main import run_gen as run_gen
from .main import run_test as run_test
from .main import run_oracle as run_oracle
from .main import run_bench as run_bench
