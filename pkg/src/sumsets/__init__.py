"""h-fold sumsets of finite integer sets and their size range sets R(h, k)."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    AffineMap,
    CapacityError,
    IntegerSet,
    SumsetValue,
    canonical_form,
    hfold_sumset,
    is_arithmetic_progression,
    is_bh_set,
    max_size,
    min_size,
    normalize,
    sumset_size,
)
from .oracle import enumerate_compositions, interval_set_I, sumset_by_definition  # noqa: E402
from .constructions import (  # noqa: E402
    FamilyMember,
    InvalidSpecError,
    ProgressionOfIntervalsSpec,
    TwoIntervalSpec,
    build_progression_of_intervals,
    build_two_interval,
    members_from_progressions,
    members_from_two_intervals,
    predicted_size_progression,
    predicted_size_two_interval,
    reduce_two_interval,
)
from .rangeset import (  # noqa: E402
    RangeResult,
    SearchConfig,
    closed_form_range,
    completeness_bound,
    merge,
    search_range,
    verify_structure,
)
