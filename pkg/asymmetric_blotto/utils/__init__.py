"""Utility modules."""

from asymmetric_blotto.utils.files import write_text_atomic
from asymmetric_blotto.utils.logging import get_logger, setup_logging
from asymmetric_blotto.utils.rng import RationalStream

__all__ = ["get_logger", "setup_logging", "RationalStream", "write_text_atomic"]
