"""Модуль журналирования"""
from smoothrig.logger.journal import OperationLog, get_logger
from smoothrig.logger.messages import get_message

__all__ = ['OperationLog', 'get_logger', 'get_message']
