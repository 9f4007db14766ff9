"""Run-time configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass

HEIGHT_CAP_ENV = "QTWIST_HEIGHT_CAP"


@dataclass
class Settings:
    height_cap: int = 10
    # twists pass through minors D_{w0 lam, lam}, whose height exceeds the input's
    twist_height_cap: int = 40

    @classmethod
    def from_env(cls) -> "Settings":
        s = cls()
        raw = os.environ.get(HEIGHT_CAP_ENV)
        if raw:
            s.height_cap = int(raw)
            s.twist_height_cap = max(s.twist_height_cap, s.height_cap)
        return s


SETTINGS = Settings.from_env()


class HeightCapError(ValueError):
    pass


def check_height(h: int, cap: int | None = None) -> None:
    cap = SETTINGS.height_cap if cap is None else cap
    if h > cap:
        raise HeightCapError(f"weight height {h} exceeds the height cap {cap}")


class height_cap:
    """Context manager that temporarily changes the height cap."""

    def __init__(self, cap: int):
        self.cap = cap
        self.saved = None

    def __enter__(self):
        self.saved = SETTINGS.height_cap
        SETTINGS.height_cap = self.cap
        return SETTINGS

    def __exit__(self, *exc):
        SETTINGS.height_cap = self.saved
        return False
