"""Точка входа для запуска как модуля"""
from smoothrig.cli import main

if __name__ == '__main__':
    main()
