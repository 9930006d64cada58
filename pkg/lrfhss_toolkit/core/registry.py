"""Registry of LR-FHSS data-rate profiles."""

import logging
from fractions import Fraction

from .models import (
    DataRate,
    DataRateProfile,
    DataRateNotFoundError,
    HEADER_REPLICAS,
)

logger = logging.getLogger(__name__)

# DR8/DR10/DR5_US code with CR 1/3, DR9/DR11/DR6_US with CR 2/3
_CODE_RATES: dict[DataRate, Fraction] = {
    DataRate.DR8: Fraction(1, 3),
    DataRate.DR9: Fraction(2, 3),
}

_PROFILES: dict[DataRate, DataRateProfile] = {}


def register_profile(dr: DataRate, code_rate: Fraction) -> DataRateProfile:
    """
    Register a data-rate profile.

    Args:
        dr: Data-rate label
        code_rate: Payload code rate; the header-replica count follows from it

    Returns:
        The registered DataRateProfile

    Raises:
        UnsupportedCodeRateError: If the code rate is reserved or does not
            match the data rate

    Note:
        If the data rate already exists, it will be overwritten.
    """
    if dr in _PROFILES:
        logger.warning(f"Profile '{dr.value}' already registered. Overwriting.")

    code_rate = Fraction(code_rate)
    profile = DataRateProfile(
        id=dr,
        code_rate=code_rate,
        header_replicas=HEADER_REPLICAS.get(code_rate, 0),
    )
    _PROFILES[dr] = profile
    logger.debug(f"Registered profile: {dr.value} (CR={code_rate}, N_H={profile.header_replicas})")
    return profile


def get_profile(dr: "DataRate | str") -> DataRateProfile:
    """
    Retrieve the profile of a data rate.

    Args:
        dr: Data-rate label or enum member; aliases resolve to their own
            profile with the DR8/DR9 coding parameters

    Raises:
        DataRateNotFoundError: If the data rate is not registered
    """
    key = DataRate.parse(dr)
    if key not in _PROFILES:
        raise DataRateNotFoundError(f"Data rate '{key.value}' not found in registry")
    return _PROFILES[key]


def list_profiles() -> list[DataRateProfile]:
    """List registered profiles in enum declaration order."""
    order = list(DataRate)
    return sorted(_PROFILES.values(), key=lambda p: order.index(p.id))


def reset_registry() -> None:
    """
    Restore the built-in profiles.

    This is primarily intended for testing.
    """
    _PROFILES.clear()
    for dr in DataRate:
        _PROFILES[dr] = DataRateProfile(
            id=dr,
            code_rate=_CODE_RATES[dr.canonical],
            header_replicas=HEADER_REPLICAS[_CODE_RATES[dr.canonical]],
        )
    logger.debug("Registry reset")


reset_registry()
