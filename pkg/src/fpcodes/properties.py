from __future__ import annotations

import dataclasses
from collections.abc import Callable, Iterable, MutableMapping

from . import Code, TwoLevelCode
from .errors import ParameterError
from .verdict import Verdict
from .verify_one_level import is_t_fp, is_t_ipp, is_t_sfp, is_t_ta
from .verify_two_level import is_Tt_fp, is_Tt_ipp, is_Tt_sfp, is_Tt_ta


@dataclasses.dataclass(slots=True, frozen=True)
class FingerprintProperty:
    name: str
    title: str
    one_level: Callable[..., Verdict]
    two_level: Callable[..., Verdict]

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"{self.__class__.__name__}({self.name!r}, {self.title!r})"

    def check(self, code: Code | TwoLevelCode, t: int, T: int | None = None,
              **options) -> Verdict:
        """One-level check when T is None, two-level check otherwise."""
        if T is None:
            if isinstance(code, TwoLevelCode):
                code = code.base
            return self.one_level(code, t, **options)
        if not isinstance(code, TwoLevelCode):
            raise ParameterError(
                "a group bound T needs a grouped code"
            )
        return self.two_level(code, T, t, **options)


class PropertyRegistry(MutableMapping[str, FingerprintProperty]):
    """Properties by name. Names are unique and never removed."""

    def __init__(self, properties: Iterable[FingerprintProperty] = ()):
        self._properties: dict[str, FingerprintProperty] = {}
        for prop in properties:
            self.register(prop)

    def register(self, prop: FingerprintProperty) -> FingerprintProperty:
        if not isinstance(prop, FingerprintProperty):
            raise TypeError(
                f"expected a FingerprintProperty, got {type(prop).__name__}"
            )
        self[prop.name] = prop
        return prop

    def __setitem__(self, name, prop):
        if name in self._properties:
            raise ValueError(f"property {name!r} is already registered")
        if name != prop.name:
            raise ValueError(f"cannot register {prop.name!r} as {name!r}")
        self._properties[name] = prop

    def __delitem__(self, name):
        raise TypeError("registered properties cannot be removed")

    def __getitem__(self, name):
        return self._properties[name]

    def lookup(self, name: str) -> FingerprintProperty:
        """Like indexing, but reports an unknown name as a ParameterError."""
        try:
            return self._properties[name]
        except KeyError:
            raise ParameterError(
                f"unknown property {name!r}, "
                f"expected one of {', '.join(self._properties)}"
            ) from None

    def __len__(self):
        return len(self._properties)

    def __iter__(self):
        return iter(self._properties)


# Strongest first: each property implies every one registered after it.
properties = PropertyRegistry([
    FingerprintProperty("ta", "traceability", is_t_ta, is_Tt_ta),
    FingerprintProperty("ipp", "identifiable parent property",
                        is_t_ipp, is_Tt_ipp),
    FingerprintProperty("sfp", "secure frameproof", is_t_sfp, is_Tt_sfp),
    FingerprintProperty("fp", "frameproof", is_t_fp, is_Tt_fp),
])


def verify_all(code: Code | TwoLevelCode, t: int, T: int | None = None,
               **options) -> dict[str, Verdict]:
    """Check every registered property, strongest first."""
    return {
        name: prop.check(code, t, T, **options)
        for name, prop in properties.items()
    }


__all__ = [
    "FingerprintProperty",
    "PropertyRegistry",
    "properties",
    "verify_all",
]
