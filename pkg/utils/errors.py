from typing import Optional


class ToolkitError(Exception):
    """Базовая ошибка инструментария; exit_code используется CLI"""

    exit_code = 1


class InputError(ToolkitError):
    """Некорректный вход: вершина вне диапазона, плохие параметры семейства"""

    exit_code = 2


class Graph6ParseError(InputError):
    """Ошибка разбора graph6 с указанием смещения байта (и строки каталога)"""

    def __init__(self, message: str, offset: int, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        where = f"byte offset {offset}"
        if line is not None:
            where = f"line {line}, {where}"
        super().__init__(f"graph6 parse error at {where}: {message}")

    def at_line(self, line: int) -> "Graph6ParseError":
        reason = str(self).split(": ", 1)[-1]
        return Graph6ParseError(reason, self.offset, line)


class UnsupportedSizeError(InputError):
    pass


class UndefinedProductError(InputError):
    pass


class CapacityError(ToolkitError):
    """Превышен лимит размера или бюджета перебора"""

    exit_code = 3


class ExactArithmeticCapacityError(CapacityError):
    pass


class NumericalFailure(ToolkitError):
    """Собственные значения не сошлись или невязка не прошла сертификацию"""

    exit_code = 3


class ConsistencyError(ToolkitError):
    """Перекрестная проверка отчета не сошлась"""

    exit_code = 1
