from .carlitz import (
    SeriesKind,
    carlitz_exp,
    carlitz_log,
    carlitz_series,
    partial_sum_exp,
    partial_sum_log,
    tail_quotient,
    tail_series,
)
from .htd import (
    ht_at_zero,
    ht_derive,
    ht_product_rule,
    ht_quotient_rule,
    ht_quotient_rule_at_zero,
    ordered_compositions,
)
from .sparse import SparseSeries, series_add, series_inv, series_mul

__all__ = [
    "SeriesKind",
    "SparseSeries",
    "carlitz_exp",
    "carlitz_log",
    "carlitz_series",
    "ht_at_zero",
    "ht_derive",
    "ht_product_rule",
    "ht_quotient_rule",
    "ht_quotient_rule_at_zero",
    "ordered_compositions",
    "partial_sum_exp",
    "partial_sum_log",
    "series_add",
    "series_inv",
    "series_mul",
    "tail_quotient",
    "tail_series",
]
