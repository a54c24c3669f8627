"""Run configurations for the sweep scripts and the CLI."""

from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class SweepConfig:
    nmax: int = 12
    nmin: int = 2
    seed: int = 0

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ChartSweepConfig:
    nmax: int = 8
    samples: int = 20
    seed: int = 0


@dataclass(frozen=True)
class KEConfig:
    space: str = "M"
    threads: int = 1
    certificate: bool = True


@dataclass(frozen=True)
class CritM1Config:
    """The M_{p,p,2p} reference integrals."""
    ps: tuple = (4, 5)
    threads: int = 1


@dataclass(frozen=True)
class PolytopeCheckConfig:
    dmax: int = 5
    cases: int = 20
    seed: int = 0
    entries: tuple = field(default=(-3, 3))
