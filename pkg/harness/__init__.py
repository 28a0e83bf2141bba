from .checks import run_check
from .suite import SuiteSource, run_suite
from .analysis import analyze

__all__ = ['run_check', 'SuiteSource', 'run_suite', 'analyze']
