# src/models/packet.py
from dataclasses import dataclass
from enum import Enum
from math import isfinite, sqrt

from src.utils.errors import DomainError


class BispinorKind(Enum):
    """The four hopfion-like bispinor families."""
    PSI_PLUS = "psi_plus"
    PSI_MINUS = "psi_minus"
    PHI_PLUS = "phi_plus"
    PHI_MINUS = "phi_minus"

    @property
    def is_phi(self) -> bool:
        return self in (BispinorKind.PHI_PLUS, BispinorKind.PHI_MINUS)

    @property
    def sign(self) -> int:
        """+1 for the plus members, -1 for the minus members."""
        return 1 if self in (BispinorKind.PSI_PLUS, BispinorKind.PHI_PLUS) else -1

    @classmethod
    def parse(cls, text: str) -> "BispinorKind":
        key = text.strip().lower()
        aliases = {"psi+": "psi_plus", "psi-": "psi_minus",
                   "phi+": "phi_plus", "phi-": "phi_minus"}
        key = aliases.get(key, key).replace("-", "_")
        for kind in cls:
            if kind.value == key:
                return kind
        raise DomainError(f"Unknown bispinor kind '{text}'")


@dataclass(frozen=True)
class PacketParams:
    """Physical configuration of a packet (natural units, c = hbar = 1)."""
    m: float = 1.0    # mass
    a: float = 1.0    # packet size
    l: int = 0        # winding
    v: float = 0.0    # boost speed along z

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got m={self.m}")
        if not self.a > 0:
            raise DomainError(f"packet size must be positive, got a={self.a}")
        if int(self.l) != self.l or self.l < 0:
            raise DomainError(f"winding must be a non-negative integer, got l={self.l}")
        if not abs(self.v) < 1:
            raise DomainError(f"boost speed must satisfy |v| < 1, got v={self.v}")

    @property
    def gamma(self) -> float:
        return 1.0 / sqrt(1.0 - self.v * self.v)

    @property
    def compton(self) -> float:
        """Reduced Compton wavelength 1/m."""
        return 1.0 / self.m

    def to_dict(self):
        return {"m": float(self.m), "a": float(self.a), "l": int(self.l), "v": float(self.v)}


@dataclass(frozen=True)
class SpaceTimePoint:
    """Event (x, y, z, t)."""
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0
    t: float = 0.0

    def __post_init__(self):
        for name in ("x", "y", "z", "t"):
            value = getattr(self, name)
            if not isfinite(value):
                raise DomainError(f"coordinate {name} must be finite, got {value}")

    @property
    def rho2(self) -> float:
        return self.x * self.x + self.y * self.y

    @property
    def r2(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z

    def shifted(self, axis: str, h: float) -> "SpaceTimePoint":
        values = {"x": self.x, "y": self.y, "z": self.z, "t": self.t}
        values[axis] += h
        return SpaceTimePoint(**values)

    def spatial(self):
        return (self.x, self.y, self.z)
