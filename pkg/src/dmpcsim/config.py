"""Central tolerances and tunable configuration objects.

All hard-coded numeric tolerances of the artifact live here so tests and
scenario files refer to a single source of truth.
"""
from dataclasses import dataclass, field


# Absolute tolerance for set-membership checks.
EPS_SET = 1e-9
# Componentwise slack on `<= 0` constraint checks.
EPS_CON = 1e-8
# Dynamics defect tolerance for trajectory bundles.
EPS_DYN = 1e-7
# Steady-state residual tolerance for registered models.
EPS_EQ = 1e-8


@dataclass
class SolverConfig:
    """SQP and inner-QP tolerances."""

    sqp_max_iter: int = 50
    kkt_tol: float = 1e-6
    step_tol: float = 1e-8
    qp_tol: float = 1e-8
    qp_max_iter: int = 20000
    ls_beta: float = 0.5
    ls_max_steps: int = 30
    merit_margin: float = 10.0

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass
class TerminalConfig:
    """Terminal-ingredient design knobs.

    alpha may be a float > 1 or the string "auto", in which case the
    smallest workable inflation for the scenario's consistency-set guess
    is computed during the design.
    """

    alpha: object = 1.1
    boundary_samples: int = 64
    gamma_lo: float = 1e-6
    gamma_hi: float = 1e6
    kappa_f: float = 1.0
    bisect_steps: int = 60

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass
class SizingConfig:
    """Consistency-set sizing search parameters."""

    rho: float = 2.0
    iota_bounds: tuple = (-40, 40)
    max_rounds: int = 20

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if "iota_bounds" in d:
            d["iota_bounds"] = tuple(d["iota_bounds"])
        return cls(**d)


@dataclass
class TransportConfig:
    round_timeout: float = 30.0
    base_port: int = 0  # 0: let the OS pick
    host: str = "127.0.0.1"
    connect_retries: int = 40
    connect_backoff: float = 0.05

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass
class ProtocolConfig:
    bootstrap_max_sweeps: int = 10
    bootstrap_slack: float = 1e-6
    sizing: SizingConfig = field(default_factory=SizingConfig)
