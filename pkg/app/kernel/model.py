"""
Pydantic models for the explicit-formula kernels
"""

from pydantic import BaseModel, ConfigDict, Field


class KernelValue(BaseModel):
    """N, R and P at a single z, all in nats"""

    model_config = ConfigDict(frozen=True)

    z: float = Field(gt=0)
    N: float
    R: float
    P: float


class MResult(BaseModel):
    """Optimized bound M(n, r, u) and where it is attained"""

    model_config = ConfigDict(frozen=True)

    n: float
    r: float
    u: float
    value: float
    log_value: float
    argmax_z: float
    cap_reached: bool = False
    profile: list[tuple[float, float]] | None = None
