import logging
from enum import Enum
from typing import Any, Type, TypeVar

logger = logging.getLogger(__name__)

E = TypeVar("E", bound=Enum)


def ensure_enum(value: Any, enum_type: Type[E]) -> E:
    if isinstance(value, enum_type):
        return value
    if isinstance(value, str):
        try:
            return enum_type[value.upper()]
        except KeyError:
            pass
        for member in enum_type:
            if member.value == value:
                return member
        raise ValueError(f"Unexpected enum value {value!r} for {enum_type.__name__}")
    if isinstance(value, int):
        return enum_type(value)
    raise ValueError(f"Unexpected enum type {value} for {enum_type}")


def sign_power(exponent: int) -> int:
    """Return :math:`(-1)^{exponent}` for any integer `exponent`."""
    return -1 if exponent % 2 else 1
