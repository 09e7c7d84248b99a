from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, conint, root_validator, validator

from graphs.exceptions import GraphFormatError
from graphs.formats import parse_rational


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class RunConfig(BaseModel):
    """
    One parsed command line. Rationals are exact; alpha and beta must be
    positive for the commands that build a model from them.
    """

    command: str
    action: Optional[str] = None
    n: Optional[conint(ge=1)] = None
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    seed: conint(ge=0, lt=2**64) = 0
    format: OutputFormat = OutputFormat.TEXT
    out: Optional[Path] = None
    threads: conint(ge=1) = 1
    allow_large: bool = False
    brute: bool = False
    graph: Optional[Path] = None
    model_parameters: bool = True

    class Config:
        arbitrary_types_allowed = True

    @validator("alpha", "beta", pre=True)
    def parse_exact(cls, value):
        if value is None:
            return value
        try:
            return parse_rational(value)
        except GraphFormatError as exception:
            raise ValueError(str(exception)) from exception

    @root_validator(skip_on_failure=True)
    def check_positive(cls, values):
        if not values.get("model_parameters"):
            return values
        for name in ("alpha", "beta"):
            value = values.get(name)
            if value is not None and value <= 0:
                raise ValueError(
                    f"{name} must be positive: beta^#G per_alpha(G) only defines "
                    f"probabilities for alpha > 0 and beta > 0, got {name} = {value}"
                )
        return values
