"""
Search Budget - Validated limits for the search engines
"""

from pydantic import BaseModel, ConfigDict, Field


class SearchBudget(BaseModel):
    """Identical budgets with the same seed give identical search outcomes."""

    model_config = ConfigDict(frozen=True)

    max_iterations: int = Field(default=1500, gt=0)
    restarts: int = Field(default=6, gt=0)
    seed: int = Field(default=20240601, gt=0, lt=1 << 64)
    workers: int = Field(default=1, gt=0)
    lcd_probe_limit: int = Field(default=48, gt=0)
    max_sideways: int = Field(default=40, ge=0)


class ExhaustiveLimits(BaseModel):
    """Largest n accepted by the exhaustive enumeration, per dimension."""

    model_config = ConfigDict(frozen=True)

    max_n_k3: int = Field(default=40, gt=0)
    max_n_k4: int = Field(default=20, gt=0)
    max_n_k5: int = Field(default=12, gt=0)
    workers: int = Field(default=1, gt=0)

    def ceiling(self, k: int) -> int:
        if k <= 3:
            return self.max_n_k3
        if k == 4:
            return self.max_n_k4
        if k == 5:
            return self.max_n_k5
        raise ValueError(f"Exhaustive enumeration supports k <= 5, got k={k}")
