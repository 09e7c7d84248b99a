from dataclasses import dataclass
from fractions import Fraction

from graphs.exceptions import InvalidParameterError


class SampleKind:
    """
    What a CRP draw is reported as
    """

    PERMUTATION = "permutation"
    PARTITION = "partition"

    choices = (PERMUTATION, PARTITION)


@dataclass(frozen=True)
class EwensParams:
    """
    Ewens(alpha) on S_n: P(sigma) = alpha^#sigma / alpha_{n^1}
    """

    n: int
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.n < 0:
            raise InvalidParameterError(f"Size must be nonnegative, got {self.n}")
        if self.alpha <= 0:
            raise InvalidParameterError(
                f"alpha must be positive for Ewens(alpha) to be a distribution, got {self.alpha}"
            )

    def grown(self) -> "EwensParams":
        """
        Same alpha one level up
        """
        return EwensParams(self.n + 1, self.alpha)
