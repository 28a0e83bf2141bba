import logging
import sys
import json
import time
import traceback
from functools import wraps
from pathlib import Path
from datetime import datetime, timezone
from typing import Dict, Any, Optional


class JSONFormatter(logging.Formatter):
    """Форматтер для логов в JSON формате"""

    def format(self, record: logging.LogRecord) -> str:
        log_entry = {
            "timestamp": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            "level": record.levelname,
            "logger": record.name,
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
            "process_id": record.process,
        }

        # Экстра-поля
        if hasattr(record, 'extra_data'):
            log_entry.update(record.extra_data)

        if record.exc_info:
            log_entry["exception"] = {
                "type": record.exc_info[0].__name__,
                "message": str(record.exc_info[1]),
                "traceback": self.formatException(record.exc_info)
            }

        return json.dumps(log_entry, ensure_ascii=False, default=str)


class ToolkitLogger:
    """Логгер инструментария: stderr всегда, файлы только если задан log_dir"""

    def __init__(self, name: str = "graph_energy", log_level: str = "WARNING",
                 log_dir: Optional[str] = None):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(getattr(logging, log_level.upper()))
        self.logger.propagate = False

        # Предотвращение дублирования логов
        if not self.logger.handlers:
            self._setup_handlers(log_level, log_dir)

    def _setup_handlers(self, log_level: str, log_dir: Optional[str]):
        detailed_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - [%(module)s:%(funcName)s:%(lineno)d] - %(message)s'
        )

        # stdout занят JSON-lines выводом
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(getattr(logging, log_level.upper()))
        console_handler.setFormatter(detailed_formatter)
        self.logger.addHandler(console_handler)

        if log_dir is None:
            return

        directory = Path(log_dir)
        directory.mkdir(parents=True, exist_ok=True)
        stamp = datetime.now().strftime('%Y%m%d')

        file_handler = logging.FileHandler(directory / f"graph_energy_{stamp}.log")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)

        json_handler = logging.FileHandler(directory / f"graph_energy_json_{stamp}.log")
        json_handler.setLevel(logging.INFO)
        json_handler.setFormatter(JSONFormatter())

        error_handler = logging.FileHandler(directory / f"errors_{stamp}.log")
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(detailed_formatter)

        self.logger.addHandler(file_handler)
        self.logger.addHandler(json_handler)
        self.logger.addHandler(error_handler)

    def log_check_failure(self, theorem_id: str, graph6: str, lhs: Optional[float],
                          rhs: Optional[float], detail: str):
        """Контрпример: проверка не прошла на графе внутри гипотезы"""
        extra_data = {
            "theorem_id": theorem_id,
            "graph6": graph6,
            "lhs": lhs,
            "rhs": rhs,
            "detail": detail,
            "event_type": "check_failed"
        }
        self.logger.error(f"{theorem_id} failed on {graph6}: {detail}",
                          extra={'extra_data': extra_data})

    def log_suite_summary(self, summary: Dict[str, Any]):
        extra_data = {"summary": summary, "event_type": "suite_summary"}
        self.logger.info(
            f"Suite finished: {summary.get('passed')} passed, "
            f"{summary.get('failed')} failed, {summary.get('errored')} errored",
            extra={'extra_data': extra_data})

    def log_error(self, error_type: str, message: str, graph6: str = None,
                  exception: Exception = None, context: Dict[str, Any] = None):
        extra_data = {
            "error_type": error_type,
            "graph6": graph6,
            "context": context or {},
            "event_type": "error"
        }

        if exception:
            extra_data["exception"] = {
                "type": type(exception).__name__,
                "message": str(exception)
            }

        self.logger.error(f"{error_type}: {message}", extra={'extra_data': extra_data})

    def log_system_event(self, event_type: str, component: str, message: str,
                         details: Dict[str, Any] = None):
        extra_data = {
            "event_type": event_type,
            "component": component,
            "details": details or {},
            "system_event": True
        }
        self.logger.info(f"System event [{component}]: {message}",
                         extra={'extra_data': extra_data})

    def log_performance_metric(self, metric_name: str, value: float,
                               tags: Dict[str, str] = None):
        extra_data = {
            "metric_name": metric_name,
            "value": value,
            "tags": tags or {},
            "event_type": "performance_metric"
        }
        self.logger.info(f"Performance metric: {metric_name} = {value}",
                         extra={'extra_data': extra_data})

    def debug(self, msg: str, **fields):
        self.logger.debug(msg, extra={"extra_data": fields})

    def info(self, msg: str, **fields):
        self.logger.info(msg, extra={"extra_data": fields})


# Инстансы логгеров по компонентам
_loggers: Dict[str, ToolkitLogger] = {}
_settings: Dict[str, Any] = {"log_level": "WARNING", "log_dir": None}


def _get_logger(name: str) -> ToolkitLogger:
    if name not in _loggers:
        _loggers[name] = ToolkitLogger(name, _settings["log_level"], _settings["log_dir"])
    return _loggers[name]


def get_core_logger() -> ToolkitLogger:
    return _get_logger("graph_energy.cores")


def get_catalog_logger() -> ToolkitLogger:
    return _get_logger("graph_energy.catalog")


def get_harness_logger() -> ToolkitLogger:
    return _get_logger("graph_energy.harness")


def get_system_logger() -> ToolkitLogger:
    return _get_logger("graph_energy")


def setup_logging(log_level: str = "WARNING", log_dir: Optional[str] = None):
    """Перенастройка всех логгеров компонентов (уровень и каталог файлов)"""
    _settings["log_level"] = log_level
    _settings["log_dir"] = log_dir
    for name, wrapper in list(_loggers.items()):
        for handler in list(wrapper.logger.handlers):
            wrapper.logger.removeHandler(handler)
            handler.close()
        _loggers[name] = ToolkitLogger(name, log_level, log_dir)


def log_exception(logger: ToolkitLogger, exception: Exception,
                  context: str = "", graph6: str = None):
    """Логирование исключения с контекстом"""
    logger.log_error(
        error_type=type(exception).__name__,
        message=f"{context}: {str(exception)}",
        graph6=graph6,
        exception=exception,
        context={"traceback": traceback.format_exc()}
    )


def log_execution(logger_getter, operation_name: str):
    """Декоратор: время выполнения функции как метрика"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            logger = logger_getter()
            start_time = time.perf_counter()
            logger.debug(f"Starting {operation_name}")

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.log_performance_metric(
                    metric_name=f"{operation_name}_time",
                    value=time.perf_counter() - start_time,
                    tags={"operation": operation_name, "status": "error"}
                )
                log_exception(logger, e, f"Error in {operation_name}")
                raise

            execution_time = time.perf_counter() - start_time
            logger.log_performance_metric(
                metric_name=f"{operation_name}_time",
                value=execution_time,
                tags={"operation": operation_name, "status": "success"}
            )
            return result

        return wrapper
    return decorator
