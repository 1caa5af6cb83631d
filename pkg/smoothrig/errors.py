"""Исключения пакета"""
from smoothrig.logger.messages import get_message

EXIT_VALIDATION = 2
EXIT_SOLVER = 3


class SmoothRigError(Exception):
    """
    Базовое исключение: kind совпадает с именем ошибки в описании операции,
    details хранит параметры сообщения
    """

    exit_code = 1

    def __init__(self, kind, **details):
        self.kind = kind
        self.details = details
        super().__init__(get_message(kind, **details))


class ValidationError(SmoothRigError, ValueError):
    """Нарушены предусловия: некорректная геометрия, степени, узлы, входные файлы"""

    exit_code = EXIT_VALIDATION


class SolverError(SmoothRigError, RuntimeError):
    """Сбой численного решателя или функции-сэмплера"""

    exit_code = EXIT_SOLVER
