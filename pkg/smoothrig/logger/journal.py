"""Журнал операций поверх стандартного logging"""
import logging
from smoothrig.config import LOG_LEVEL
from smoothrig.logger.messages import get_message

_LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
}


def get_logger():
    """Получить логгер пакета, настроив его при первом обращении"""
    logger = logging.getLogger('smoothrig')
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('%(asctime)s [%(levelname)s] %(message)s'))
        logger.addHandler(handler)
        logger.setLevel(_LEVELS.get(LOG_LEVEL.upper(), logging.INFO))
        logger.propagate = False
    return logger


class OperationLog:
    """Журнал операций: тип операции, этап и уровень"""

    @staticmethod
    def log(operation_type, message, level='INFO', stage=None, **kwargs):
        """
        Записать сообщение в журнал

        Args:
            operation_type: Тип операции (geometry, remez, prooftrace, ...)
            message: Ключ из словаря MESSAGES или готовый текст
            level: Уровень (DEBUG, INFO, WARNING, ERROR)
            stage: Этап внутри операции (опционально)
            **kwargs: Параметры подстановки в шаблон сообщения
        """
        text = get_message(message, **kwargs)
        prefix = f"[{operation_type}/{stage}]" if stage else f"[{operation_type}]"
        get_logger().log(_LEVELS.get(level, logging.INFO), f"{prefix} {text}")
