"""Monthly torrential-rainfall event counts, 12 South Korean regions, 1983-2014.

Each region has 384 months; the columns are the frequencies of 0..6 events.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fit import CountHistogram

__all__ = [
    "RegionRecord",
    "REGIONS",
    "region",
    "region_names",
    "PUBLISHED_COMPARISON",
    "PUBLISHED_BEST",
    "PUBLISHED_VERSATILITY",
]


@dataclass(frozen=True)
class RegionRecord:
    name: str
    slug: str
    annual_mean_rainfall_mm: int
    frequencies: tuple[int, ...]
    months: int = 384

    @property
    def counts(self) -> CountHistogram:
        return CountHistogram.from_frequencies(self.frequencies)


REGIONS: tuple[RegionRecord, ...] = (
    RegionRecord("Daegu", "daegu", 1087, (309, 53, 18, 2, 2, 0, 0)),
    RegionRecord("Busan", "busan", 1344, (275, 67, 32, 5, 4, 0, 1)),
    RegionRecord("Yeongju", "yeongju", 1125, (295, 60, 25, 1, 1, 1, 1)),
    RegionRecord("Mungyeong", "mungyeong", 1095, (297, 57, 22, 3, 2, 2, 1)),
    RegionRecord("Uiseong", "uiseong", 1039, (324, 42, 14, 3, 1, 0, 0)),
    RegionRecord("Gumi", "gumi", 1104, (311, 50, 15, 4, 2, 1, 1)),
    RegionRecord("Yeongcheon", "yeongcheon", 1074, (328, 49, 6, 1, 0, 0, 0)),
    RegionRecord("Geochang", "geochang", 1334, (255, 80, 35, 8, 4, 1, 1)),
    RegionRecord("Hapcheon", "hapcheon", 1317, (260, 87, 32, 4, 1, 0, 0)),
    RegionRecord("Miryang", "miryang", 1249, (267, 81, 27, 4, 3, 1, 1)),
    RegionRecord("Pohang", "pohang", 1274, (281, 69, 29, 2, 2, 0, 1)),
    RegionRecord("Ulsan", "ulsan", 1287, (277, 78, 24, 2, 2, 1, 0)),
)

_BY_SLUG = {r.slug: r for r in REGIONS}


def region_names() -> list[str]:
    return [r.slug for r in REGIONS]


def region(slug: str) -> RegionRecord:
    key = slug.strip().lower()
    if key not in _BY_SLUG:
        raise KeyError(f"unknown region {slug!r}; choose from {', '.join(region_names())}")
    return _BY_SLUG[key]


# published model comparison per region: family -> (chi-square p-value, AIC)
PUBLISHED_COMPARISON: dict[str, dict[str, tuple[float, float]]] = {
    "daegu": {"geometric0": (0.1254, 504.52), "zig0": (0.3856, 503.79), "negbin0": (0.3278, 504.21), "zeta-tail0": (0.4841, 502.38)},
    "busan": {"geometric0": (0.0855, 680.41), "zig0": (0.1446, 679.94), "negbin0": (0.1031, 680.57), "zeta-tail0": (0.1761, 679.10)},
    "yeongju": {"geometric0": (0.0278, 577.83), "zig0": (0.0480, 577.19), "negbin0": (0.0361, 577.30), "zeta-tail0": (0.0768, 575.34)},
    "mungyeong": {"geometric0": (0.0082, 594.26), "zig0": (0.2341, 588.59), "negbin0": (0.2400, 588.23), "zeta-tail0": (0.2480, 587.43)},
    "uiseong": {"geometric0": (0.0648, 439.05), "zig0": (0.7934, 434.82), "negbin0": (0.5981, 435.49), "zeta-tail0": (0.4312, 435.06)},
    "gumi": {"geometric0": (0.0024, 528.90), "zig0": (0.5857, 520.19), "negbin0": (0.7929, 519.43), "zeta-tail0": (0.2708, 520.71)},
    "yeongcheon": {"geometric0": (0.9552, 369.46), "zig0": (0.8498, 371.46), "negbin0": (0.9075, 371.26), "zeta-tail0": (0.6552, 370.98)},
    "geochang": {"geometric0": (0.5674, 754.76), "zig0": (0.4262, 756.48), "negbin0": (0.3959, 756.61), "zeta-tail0": (0.2124, 757.67)},
    "hapcheon": {"geometric0": (0.1102, 678.03), "zig0": (0.0491, 680.03), "negbin0": (0.1887, 676.27), "zeta-tail0": (0.0023, 687.99)},
    "miryang": {"geometric0": (0.4442, 685.15), "zig0": (0.2707, 687.13), "negbin0": (0.2776, 687.08), "zeta-tail0": (0.1710, 687.65)},
    "pohang": {"geometric0": (0.0912, 628.52), "zig0": (0.0556, 630.01), "negbin0": (0.0473, 630.19), "zeta-tail0": (0.0586, 629.61)},
    "ulsan": {"geometric0": (0.3550, 623.36), "zig0": (0.1972, 625.36), "negbin0": (0.1907, 625.21), "zeta-tail0": (0.0849, 627.46)},
}

# region -> (family with the starred p-value, family with the starred AIC)
PUBLISHED_BEST: dict[str, tuple[str, str]] = {
    "daegu": ("zeta-tail0", "zeta-tail0"),
    "busan": ("zeta-tail0", "zeta-tail0"),
    "yeongju": ("zeta-tail0", "zeta-tail0"),
    "mungyeong": ("zeta-tail0", "zeta-tail0"),
    "uiseong": ("zig0", "zig0"),
    "gumi": ("negbin0", "negbin0"),
    "yeongcheon": ("geometric0", "geometric0"),
    "geochang": ("geometric0", "geometric0"),
    "hapcheon": ("negbin0", "negbin0"),
    "miryang": ("geometric0", "geometric0"),
    "pohang": ("geometric0", "geometric0"),
    "ulsan": ("geometric0", "geometric0"),
}

# published versatility values, keyed as in versatility.PARAMETERIZATIONS
PUBLISHED_VERSATILITY: dict[str, float] = {
    "geometric0-m": 2.4981,
    "geometric0-inv": 1.0718,
    "zeta-tail0": 0.2654,
    "zeta0": 2.6981,
    "quadratic0": 0.9423,
    "geometric0-average": 1.7850,
}
