# errors.py
from __future__ import annotations


class RainbowError(Exception):
    """Базовая ошибка пакета."""


class SpecError(RainbowError, ValueError):
    """Некорректный орграф, набор генераторов, раскраска или файл."""


class NotStronglyConnectedError(RainbowError, ValueError):
    pass


class UnreachableError(RainbowError, ValueError):
    pass


class CapacityError(RainbowError, ValueError):
    """Больше цветов, чем помещается в битовую маску поиска."""


class InapplicableError(RainbowError, ValueError):
    """Формула вызвана вне своих условий применимости."""


class HypothesisError(SpecError):
    """
    Нарушены условия теоремы, на которой стоит конструкция.
    precondition: текст условия, его показывает CLI.
    """

    def __init__(self, message: str, precondition: str = "") -> None:
        super().__init__(message)
        self.precondition = precondition


class RefusalError(HypothesisError):
    """
    Конструкция отказывается строить раскраску, но теорема
    всё равно даёт значение (value).
    """

    def __init__(self, message: str, value: int, precondition: str = "") -> None:
        super().__init__(message, precondition)
        self.value = value
