"""Example families: Balog–Wooley sets, geometric progressions, random few-prime sets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ExhaustedSampler
from .factored import FactoredRational, PrimePool, factor, omega
from .setops import FiniteSet

KINDS = ("balog_wooley", "geometric", "random_few_prime", "explicit")


def balog_wooley(M: int, N: int) -> FiniteSet:
    """``{p * M^j : 1 <= p <= M, 1 <= j <= N}`` with duplicates removed."""
    if M < 2 or N < 1:
        raise ValueError("need M >= 2 and N >= 1")
    return FiniteSet({p * M**j for p in range(1, M + 1) for j in range(1, N + 1)})


def geometric(q, n: int) -> FiniteSet:
    """``{q, q^2, ..., q^n}``."""
    fq = q if isinstance(q, FactoredRational) else factor(q)
    if not fq.exps:
        raise ValueError("q must not be +-1")
    if n < 1:
        raise ValueError("n must be >= 1")
    return FiniteSet([fq**j for j in range(1, n + 1)])


def _rng(seed: int) -> np.random.Generator:
    # counter-based bit generator: the stream depends on the seed only
    return np.random.Generator(np.random.Philox(key=seed))


def random_few_prime(
    pool,
    k: int,
    e_max: int,
    size: int,
    seed: int,
    mode: str = "integer",
    signed: bool = False,
    max_attempts: int | None = None,
) -> FiniteSet:
    """Draw ``size`` distinct elements, each a product of at most ``k`` pool primes.

    Every element picks ``j`` uniform in ``1..k`` distinct primes.  Exponents
    lie in ``1..e_max`` (``mode="integer"``) or ``-e_max..e_max`` without 0
    (``mode="rational"``); ``signed`` attaches a random sign.
    """
    primes = tuple(pool.primes if isinstance(pool, PrimePool) else sorted(pool))
    if k < 1 or e_max < 1 or size < 0:
        raise ValueError("need k >= 1, e_max >= 1, size >= 0")
    if len(primes) < k:
        raise ValueError(f"pool has {len(primes)} primes, fewer than k={k}")
    if mode not in ("integer", "rational"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = _rng(seed)
    attempts = max_attempts if max_attempts is not None else 50 * size + 1000
    chosen: dict[FactoredRational, None] = {}
    for _ in range(attempts):
        if len(chosen) == size:
            break
        j = int(rng.integers(1, k + 1))
        idx = sorted(rng.choice(len(primes), size=j, replace=False).tolist())
        if mode == "integer":
            es = rng.integers(1, e_max + 1, size=j).tolist()
        else:
            es = [int(e) if e > 0 else int(e) - 1 for e in rng.integers(-e_max, e_max, size=j)]
        sign = int(rng.choice((-1, 1))) if signed else 1
        x = FactoredRational.from_map(sign, {primes[i]: e for i, e in zip(idx, es)})
        chosen.setdefault(x, None)
    if len(chosen) < size:
        raise ExhaustedSampler(f"only {len(chosen)} distinct elements after {attempts} draws, wanted {size}")
    out = FiniteSet(list(chosen), primes=primes)
    assert max((omega(x) for x in chosen), default=0) <= k
    return out


@dataclass(frozen=True)
class FamilySpec:
    """A recipe for a set; ``params`` depend on ``kind``.

    balog_wooley: M, N.  geometric: q, n.  random_few_prime: pool (a count of
    leading primes or a list), k, e_max, size, seed, mode, signed.  explicit: path.
    """

    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")

    @property
    def seed(self) -> int | None:
        return self.params.get("seed")

    def pool(self) -> PrimePool:
        pool = self.params.get("pool", 10)
        return PrimePool.first(pool) if isinstance(pool, int) else PrimePool(tuple(pool))

    def build(self) -> FiniteSet:
        p = self.params
        if self.kind == "balog_wooley":
            return balog_wooley(int(p["M"]), int(p["N"]))
        if self.kind == "geometric":
            return geometric(p.get("q", 2), int(p["n"]))
        if self.kind == "random_few_prime":
            return random_few_prime(
                self.pool(),
                int(p.get("k", 2)),
                int(p.get("e_max", 3)),
                int(p["size"]),
                int(p.get("seed", 0)),
                p.get("mode", "integer"),
                bool(p.get("signed", False)),
            )
        from .cli import read_set_file

        return read_set_file(p["path"])[0]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": dict(sorted(self.params.items()))}

    @classmethod
    def from_dict(cls, d: dict) -> "FamilySpec":
        return cls(d["kind"], dict(d.get("params", {})))

    @classmethod
    def from_json(cls, text_or_path) -> "FamilySpec":
        text = str(text_or_path)
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_args(cls, kind: str, pairs: list[str]) -> "FamilySpec":
        """Parse ``key=value`` strings; values are JSON when they parse as JSON."""
        params = {}
        for item in pairs:
            key, sep, raw = item.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got {item!r}")
            try:
                params[key] = json.loads(raw)
            except json.JSONDecodeError:
                params[key] = raw
        return cls(kind, params)
