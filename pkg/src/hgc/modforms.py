"""Fourier coefficients of the newforms that appear on right-hand sides.

Two sources: exact eta-product expansions, and a label-keyed JSON cache
(committed fixtures; optional LMFDB download behind ``allow_network``).
"""

from __future__ import annotations

import datetime as dt
import json
import math
import os
import re
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Protocol

from .errors import MissingFixtureError, TransportError

FIXTURE_LABELS: tuple[str, ...] = (
    "8.4.1.a",
    "8.6.1.a",
    "12.4.1.a",
    "24.2.1.a",
    "24.4.1.a",
    "32.3.31.a",
    "36.4.1.a",
    "48.4.1.c",
    "48.6.1.c",
    "64.4.1.b",
    "64.4.1.d",
    "64.6.1.f",
    "72.4.1.b",
)

_LABEL = re.compile(r"^(\d+)\.(\d+)\.(\d+)\.([a-z]+)$")


def legendre(a: int, p: int) -> int:
    """(a/p) by Euler's criterion."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"legendre needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


# -- eta products ---------------------------------------------------------------


@dataclass(frozen=True)
class EtaProduct:
    """sum_j c_j prod_i eta(m_i z)^(r_i), terms given as (c_j, ((m_i, r_i), ...))."""

    terms: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]

    def __post_init__(self) -> None:
        for c, factors in self.terms:
            if sum(m * r for m, r in factors) % 24:
                raise ValueError(f"summand {c}*{factors}: sum m*r is not divisible by 24")


@dataclass(frozen=True)
class QExpansion:
    coefficients: tuple[int, ...]  # a_0, a_1, ..., a_B

    @property
    def bound(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]


def _eta_power_series(m: int, r: int, B: int) -> list[int]:
    """prod_{n>=1} (1 - q^(m n))^r to q^B."""
    series = [0] * (B + 1)
    series[0] = 1
    if r == 0:
        return series
    # multiply one factor (1 - q^k)^(+-1) at a time
    for k in range(m, B + 1, m):
        for _ in range(abs(r)):
            if r > 0:
                for i in range(B, k - 1, -1):
                    series[i] -= series[i - k]
            else:
                for i in range(k, B + 1):
                    series[i] += series[i - k]
    return series


def _mul(a: list[int], b: list[int], B: int) -> list[int]:
    out = [0] * (B + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(B + 1 - i):
                out[i + j] += x * b[j]
    return out


def eta_expansion(e: EtaProduct, B: int) -> QExpansion:
    total = [0] * (B + 1)
    for c, factors in e.terms:
        shift = sum(m * r for m, r in factors) // 24
        s = [0] * (B + 1)
        s[0] = 1
        for m, r in factors:
            s = _mul(s, _eta_power_series(m, r, B), B)
        for i in range(B + 1 - shift):
            total[i + shift] += c * s[i]
    return QExpansion(tuple(total))


F_8_6_1_A = EtaProduct(((1, ((1, 8), (4, 4))), (8, ((4, 12),))))
DELTA = EtaProduct(((1, ((1, 24),)),))

# -- labelled forms -------------------------------------------------------------


@dataclass(frozen=True)
class FormRef:
    label: str
    weight: int
    level: int

    def __post_init__(self) -> None:
        m = _LABEL.match(self.label)
        if m is None:
            raise ValueError(f"not an LMFDB newform label: {self.label!r}")
        if int(m.group(1)) != self.level or int(m.group(2)) != self.weight:
            raise ValueError(f"label {self.label} disagrees with level {self.level}, weight {self.weight}")

    @classmethod
    def from_label(cls, label: str) -> FormRef:
        m = _LABEL.match(label)
        if m is None:
            raise ValueError(f"not an LMFDB newform label: {label!r}")
        return cls(label, int(m.group(2)), int(m.group(1)))


def deligne_ok(ap: int, p: int, weight: int) -> bool:
    # |a_p| <= 2 p^((k-1)/2), squared to stay in integers
    return ap * ap <= 4 * p ** (weight - 1)


def default_fixture_dir() -> Path:
    env = os.environ.get("HGC_FIXTURES")
    return Path(env) if env else Path(__file__).with_name("fixtures")


class LMFDBClient(Protocol):
    def fetch(self, ref: FormRef, primes: list[int]) -> dict[int, int]: ...


class HttpLMFDBClient:
    """The one place that knows the LMFDB API layout."""

    BASE = "https://www.lmfdb.org/api/mf_newforms/"

    def __init__(self, timeout: float = 30.0):
        self.timeout = timeout

    def url(self, ref: FormRef) -> str:
        return f"{self.BASE}?label={ref.label}&_format=json&_fields=label,traces"

    def fetch(self, ref: FormRef, primes: list[int]) -> dict[int, int]:
        import urllib.error
        import urllib.request

        try:
            with urllib.request.urlopen(self.url(ref), timeout=self.timeout) as resp:
                payload = json.loads(resp.read().decode())
        except (urllib.error.URLError, OSError, ValueError) as exc:
            raise TransportError(f"LMFDB request for {ref.label} failed: {exc}") from exc
        return parse_lmfdb_payload(payload, ref, primes)


def parse_lmfdb_payload(payload: dict, ref: FormRef, primes: list[int]) -> dict[int, int]:
    """Rational newforms: the trace form is the q-expansion, traces[n-1] = a_n."""
    try:
        rows = payload["data"]
        row = next(r for r in rows if r.get("label") == ref.label)
        traces = row["traces"]
    except (KeyError, StopIteration, TypeError) as exc:
        raise TransportError(f"unexpected LMFDB payload for {ref.label}") from exc
    out = {}
    for p in primes:
        if p - 1 >= len(traces):
            raise TransportError(f"LMFDB returned only {len(traces)} traces for {ref.label}")
        out[p] = int(traces[p - 1])
    return out


@dataclass
class CoefficientCache:
    """label -> {p: a_p}, persisted as one JSON file per label."""

    directory: Path = field(default_factory=default_fixture_dir)
    _mem: dict[str, dict] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.directory = Path(self.directory)

    def path(self, label: str) -> Path:
        return self.directory / f"{label}.json"

    def load(self, label: str) -> dict | None:
        if label in self._mem:
            return self._mem[label]
        path = self.path(label)
        if not path.exists():
            return None
        doc = json.loads(path.read_text())
        validate_fixture(doc)
        self._mem[label] = doc
        return doc

    def store(self, ref: FormRef, ap: dict[int, int], source: str, fetched: str | None = None) -> Path:
        doc = {
            "label": ref.label,
            "weight": ref.weight,
            "level": ref.level,
            "source": source,
            "fetched": fetched or dt.date.today().isoformat(),
            "ap": {str(p): int(ap[p]) for p in sorted(ap)},
        }
        validate_fixture(doc)
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(ref.label)
        # atomic replace so concurrent readers never see half a file
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=f".{ref.label}.", suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        os.replace(tmp, path)
        self._mem[ref.label] = doc
        return path

    def labels(self) -> list[str]:
        return sorted(p.stem for p in self.directory.glob("*.json"))


def validate_fixture(doc: dict) -> None:
    for key, typ in (("label", str), ("weight", int), ("level", int), ("source", str), ("fetched", str), ("ap", dict)):
        if not isinstance(doc.get(key), typ):
            raise ValueError(f"fixture field {key!r} missing or not {typ.__name__}")
    FormRef(doc["label"], doc["weight"], doc["level"])
    for p, a in doc["ap"].items():
        if not isinstance(a, int):
            raise ValueError(f"{doc['label']}: a_{p} is not an integer")
        if not deligne_ok(a, int(p), doc["weight"]):
            raise ValueError(f"{doc['label']}: a_{p}={a} violates the Deligne bound")


def fetch_ap(
    ref: FormRef | str,
    p: int,
    cache: CoefficientCache | None = None,
    *,
    allow_network: bool = False,
    client: LMFDBClient | None = None,
    prime_bound: int = 101,
) -> int:
    """a_p(ref), from the cache or (when allowed) from LMFDB."""
    if isinstance(ref, str):
        ref = FormRef.from_label(ref)
    cache = cache or _default_cache()
    doc = cache.load(ref.label)
    if doc is not None and str(p) in doc["ap"]:
        return doc["ap"][str(p)]
    if not allow_network:
        where = "no fixture" if doc is None else f"fixture has no a_{p}"
        raise MissingFixtureError(f"{ref.label}: {where} in {cache.directory} (network disabled)")
    client = client or HttpLMFDBClient()
    from .padic import primes_between

    primes = primes_between(2, max(prime_bound, p))
    ap = client.fetch(ref, primes)
    for q, a in ap.items():
        if not deligne_ok(a, q, ref.weight):
            raise TransportError(f"{ref.label}: fetched a_{q}={a} violates the Deligne bound")
    cache.store(ref, ap, source=getattr(client, "url", lambda r: "client")(ref))
    return ap[p]


_CACHE: CoefficientCache | None = None


def _default_cache() -> CoefficientCache:
    global _CACHE
    if _CACHE is None or _CACHE.directory != default_fixture_dir():
        _CACHE = CoefficientCache(default_fixture_dir())
    return _CACHE


def ap_function(label: str, **kw) -> Callable[[int], int]:
    return lambda p: fetch_ap(label, p, **kw)


def eta_ap(e: EtaProduct, p: int) -> int:
    return eta_expansion(e, p)[p]


def is_multiplicative_at(q: QExpansion, m: int, n: int) -> bool:
    return math.gcd(m, n) != 1 or q[m * n] == q[m] * q[n]
