from .report import TestReport as TestReport
from .report import OracleResult as OracleResult
from .report import DEFAULT_P_BAND as DEFAULT_P_BAND
from .oracle import exhaustive_oracle as exhaustive_oracle
from .oracle import MAX_ORACLE_M as MAX_ORACLE_M
from .uniformity import chi_square_pvalue as chi_square_pvalue
from .uniformity import kolmogorov_pvalue as kolmogorov_pvalue
from .uniformity import chi_square_counts as chi_square_counts
from .uniformity import chi_square_uniformity as chi_square_uniformity
from .uniformity import ks_statistic as ks_statistic
from .uniformity import ks_uniformity as ks_uniformity
from .uniformity import low_bits_uniformity as low_bits_uniformity
from .rejection import rejection_rate as rejection_rate
