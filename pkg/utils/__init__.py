from .config import ToolkitConfig, get_config, get_tolerances, get_limits
from .errors import ToolkitError, InputError, CapacityError, NumericalFailure
from .logger import ToolkitLogger, get_core_logger, get_catalog_logger, get_harness_logger, get_system_logger

__all__ = [
    'ToolkitConfig',
    'get_config',
    'get_tolerances',
    'get_limits',
    'ToolkitError',
    'InputError',
    'CapacityError',
    'NumericalFailure',
    'ToolkitLogger',
    'get_core_logger',
    'get_catalog_logger',
    'get_harness_logger',
    'get_system_logger'
]
