"""Deterministic random instances, directed so that theorem hypotheses hold often.

Rejection sampling alone starves most hypotheses (w-core invertibility,
commuting triples, EP elements), so each generator builds instances with the
required structure and verifies it before returning.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from ..errors import ConfigError, DomainError
from ..geninv import _core, _group, _mp, _one_three, _wcore
from ..matrix import Matrix, identity, inverse, is_unit, rank, star, zeros
from ..scalar import GAUSSIAN, ScalarDomain


def default_pool(domain: ScalarDomain) -> tuple:
    """0, 1, -1, 2, -2, 1/2 and i, keeping whichever exist in the domain."""
    raw = ["0", "1", "-1", "2", "-2", "1/2"]
    if domain.kind == GAUSSIAN:
        raw.append("0+1i")
    pool = []
    for t in raw:
        try:
            s = domain.coerce(t)
        except DomainError:
            continue
        if s not in pool:
            pool.append(s)
    return tuple(pool)


@dataclass(frozen=True)
class TrialConfig:
    domain: ScalarDomain
    dim: int = 2
    trials: int = 100
    seed: int = 0
    entry_pool: tuple | None = None
    exhaustive: bool = False
    min_applicable: int = 0
    budget: int = 10**6

    def __post_init__(self):
        if not 1 <= self.dim <= 6:
            raise ConfigError(f"dim must be in 1..6, got {self.dim}")
        if self.trials < 0:
            raise ConfigError("trials must be non-negative")
        if self.exhaustive and not self.domain.is_finite:
            raise ConfigError(f"exhaustive mode needs a finite domain, not {self.domain.name}")
        if self.entry_pool is not None:
            object.__setattr__(
                self, "entry_pool", tuple(self.domain.coerce(x) for x in self.entry_pool)
            )

    @property
    def pool(self) -> tuple:
        return self.entry_pool if self.entry_pool is not None else default_pool(self.domain)

    def to_json(self) -> dict:
        from ..scalar import render_scalar

        return {
            "domain": self.domain.name,
            "dim": self.dim,
            "trials": self.trials,
            "seed": self.seed,
            "entry_pool": [render_scalar(s, self.domain) for s in self.pool],
            "exhaustive": self.exhaustive,
            "min_applicable": self.min_applicable,
        }


def trial_rng(seed: int, pid: str, index: int) -> random.Random:
    """Independent stream per (seed, property, trial): order of execution never matters."""
    return random.Random(f"{seed}:{pid}:{index}")


@dataclass(frozen=True)
class Instance:
    a: Matrix
    b: Matrix | None = None
    w: Matrix | None = None
    c: Matrix | None = None
    tag: str = ""

    def to_json(self) -> dict:
        out = {"domain": self.a.domain.name, "tag": self.tag}
        for k in ("a", "b", "w", "c"):
            m = getattr(self, k)
            if m is not None:
                out[k] = m.to_strings()
        return out


# -- building blocks ----------------------------------------------------------


def random_matrix(
    cfg: TrialConfig,
    rng: random.Random,
    *,
    rows: int | None = None,
    cols: int | None = None,
    rank_bound: int | None = None,
    diagonal: bool = False,
) -> Matrix:
    """Entries drawn from the pool; ``rank_bound`` draws F (n x r) @ G (r x n) instead."""
    n = cfg.dim
    rows = n if rows is None else rows
    cols = n if cols is None else cols
    pool = cfg.pool
    dom = cfg.domain
    if diagonal:
        zero = dom.zero
        return Matrix._make(
            dom, rows, cols,
            tuple(tuple(rng.choice(pool) if i == j else zero for j in range(cols)) for i in range(rows)),
        )
    if rank_bound is not None and rank_bound < min(rows, cols):
        if rank_bound == 0:
            return zeros(dom, rows, cols)
        F = random_matrix(cfg, rng, rows=rows, cols=rank_bound)
        G = random_matrix(cfg, rng, rows=rank_bound, cols=cols)
        return F @ G
    return Matrix._make(
        dom, rows, cols, tuple(tuple(rng.choice(pool) for _ in range(cols)) for _ in range(rows))
    )


def _nonzero(cfg, rng):
    nz = [s for s in cfg.pool if s]
    return rng.choice(nz) if nz else cfg.domain.one


def random_unit(cfg: TrialConfig, rng: random.Random) -> Matrix:
    for _ in range(20):
        m = random_matrix(cfg, rng)
        if is_unit(m):
            return m
    # unit lower times unit upper triangular is always invertible
    n, dom = cfg.dim, cfg.domain
    one, zero = dom.one, dom.zero
    L = Matrix._make(dom, n, n, tuple(
        tuple(rng.choice(cfg.pool) if j < i else (_nonzero(cfg, rng) if i == j else zero) for j in range(n))
        for i in range(n)))
    U = Matrix._make(dom, n, n, tuple(
        tuple(rng.choice(cfg.pool) if j > i else (one if i == j else zero) for j in range(n))
        for i in range(n)))
    return L @ U


def random_rank(cfg, rng, low: int = 0) -> int:
    return rng.randint(low, cfg.dim)


def random_unitary(cfg: TrialConfig, rng: random.Random) -> Matrix:
    """(1 - K)(1 + K)^-1 for skew-adjoint K; falls back to a permutation."""
    dom, n = cfg.domain, cfg.dim
    one = identity(dom, n)
    for _ in range(10):
        m = random_matrix(cfg, rng)
        k = m - star(m)
        if dom.kind == GAUSSIAN and rng.random() < 0.5:
            k = k + (m + star(m)).scale("0+1i")
        if is_unit(one + k):
            u = (one - k) @ inverse(one + k)
            if u @ star(u) == one:
                return u
    perm = list(range(n))
    rng.shuffle(perm)
    return Matrix._make(dom, n, n, tuple(
        tuple(dom.one if perm[i] == j else dom.zero for j in range(n)) for i in range(n)))


def random_core_invertible(cfg: TrialConfig, rng: random.Random) -> Matrix:
    """a with a^# and a^(1,3): rejection first, then S (C + 0) S^-1 with C invertible."""
    for _ in range(10):
        a = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))
        if _core(a) is not None:
            return a
    for _ in range(10):
        r = random_rank(cfg, rng, 1)
        s = random_unit(cfg, rng)
        c = random_unit(TrialConfig(cfg.domain, r, entry_pool=cfg.pool), rng)
        n = cfg.dim
        blk = Matrix._make(cfg.domain, n, n, tuple(
            tuple(c.data[i][j] if i < r and j < r else cfg.domain.zero for j in range(n))
            for i in range(n)))
        a = s @ blk @ inverse(s)
        if _core(a) is not None:
            return a
    return zeros(cfg.domain, cfg.dim)


def random_ep(cfg: TrialConfig, rng: random.Random) -> Matrix:
    """U (C + 0) U* with U unitary and C invertible: range-Hermitian."""
    from ..geninv import is_ep

    n = cfg.dim
    for _ in range(10):
        r = random_rank(cfg, rng, 1)
        u = random_unitary(cfg, rng)
        c = random_unit(TrialConfig(cfg.domain, r, entry_pool=cfg.pool), rng)
        blk = Matrix._make(cfg.domain, n, n, tuple(
            tuple(c.data[i][j] if i < r and j < r else cfg.domain.zero for j in range(n))
            for i in range(n)))
        a = u @ blk @ star(u)
        if is_ep(a):
            return a
    return identity(cfg.domain, n)


def _kill_star(a: Matrix, m: Matrix) -> Matrix:
    """(1 - a a^(1,3)) m: a matrix n with a* n = 0."""
    x13 = _one_three(a, "first")
    if x13 is None:
        return m
    return (identity(a.domain, a.rows) - a @ x13) @ m


def _kill_right(m: Matrix, c: Matrix) -> Matrix:
    """m (1 - c c^#): a matrix n with n c = 0."""
    g = _group(c)
    if g is None:
        return m
    return m @ (identity(c.domain, c.rows) - c @ g)


def wcore_below(cfg, rng, a: Matrix, w: Matrix) -> Matrix:
    """b = a + n with a*n = 0 and nwa = 0, so that a is below b in the w-core order."""
    m = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng, 1))
    return a + _kill_right(_kill_star(a, m), w @ a)


def _perturb_b(cfg, rng, a: Matrix, w: Matrix) -> tuple[Matrix, str]:
    u = rng.random()
    if u < 0.5:
        return wcore_below(cfg, rng, a, w), "below"
    m = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng, 1))
    if u < 0.62:
        return a + _kill_star(a, m), "star-only"
    if u < 0.74:
        return a + _kill_right(m, w @ a), "right-only"
    if u < 0.8:
        return a, "b=a"
    return random_matrix(cfg, rng), "random"


WCORE_MODES = ("identity", "self", "star", "unit", "random", "lowrank")


def _wcore_pair(cfg, rng, mode: str) -> tuple[Matrix, Matrix] | None:
    dom, n = cfg.domain, cfg.dim
    if mode == "identity":
        return random_core_invertible(cfg, rng), identity(dom, n)
    if mode == "self":
        a = random_core_invertible(cfg, rng)
        return a, a
    if mode == "star":
        a = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))
        return (a, star(a)) if _mp(a, "first") is not None else None
    if mode == "unit":
        w = random_unit(cfg, rng)
        return random_core_invertible(cfg, rng) @ inverse(w), w
    if mode == "lowrank":
        # small-rank a with a higher-rank w leaves room for b above a in R_w
        ra = rng.randint(0, max(0, n - 1))
        a = random_matrix(cfg, rng, rank_bound=ra)
        w = random_matrix(cfg, rng, rank_bound=rng.randint(ra, n))
        return a, w
    a = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))
    return a, random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))


def random_wcore_instance(
    cfg: TrialConfig,
    rng: random.Random,
    mode: str | None = None,
    need_b: bool = False,
    tries: int = 40,
) -> Instance:
    """(a, b, w) with a in R_w^⊕; with ``need_b`` also b in R_w^⊕ when achievable.

    b is a + n with n chosen so the order holds about half the time.
    """
    last = None
    for _ in range(tries):
        m = mode or rng.choice(WCORE_MODES)
        pair = _wcore_pair(cfg, rng, m)
        if pair is None:
            continue
        a, w = pair
        if isinstance(_wcore(a, w), tuple):
            continue
        for _ in range(4):
            b, how = _perturb_b(cfg, rng, a, w)
            last = Instance(a, b, w, tag=f"{m}/{how}")
            if not need_b or not isinstance(_wcore(b, w), tuple):
                return last
    if last is not None:
        return last
    dom, n = cfg.domain, cfg.dim
    z = zeros(dom, n)
    return Instance(z, z, identity(dom, n), tag="fallback")


def chain_instance(cfg: TrialConfig, rng: random.Random) -> Instance:
    """a below b below c in the w-core order, all three in R_w^⊕, when achievable."""
    inst = random_wcore_instance(cfg, rng, need_b=True)
    a, b, w = inst.a, inst.b, inst.w
    if isinstance(_wcore(b, w), tuple):
        return Instance(a, b, w, a, tag=inst.tag + "/c=a")
    for _ in range(6):
        c = wcore_below(cfg, rng, b, w) if rng.random() < 0.75 else random_matrix(cfg, rng)
        if not isinstance(_wcore(c, w), tuple):
            return Instance(a, b, w, c, tag=inst.tag + "/chain")
    return Instance(a, b, w, b, tag=inst.tag + "/c=b")


def unit_w_instance(cfg: TrialConfig, rng: random.Random, need_b: bool = False) -> Instance:
    return random_wcore_instance(cfg, rng, mode="unit", need_b=need_b)


def core_instance(cfg: TrialConfig, rng: random.Random) -> Instance:
    """a core invertible; b = a + n with n making the core order hold about half the time."""
    a = random_core_invertible(cfg, rng)
    u = rng.random()
    m = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng, 1))
    if u < 0.5:
        b, how = a + _kill_right(_kill_star(a, m), a), "below"
    elif u < 0.65:
        b, how = a + _kill_star(a, m), "star-only"
    elif u < 0.8:
        b, how = a + _kill_right(m, a), "right-only"
    elif u < 0.85:
        b, how = a, "b=a"
    else:
        b, how = random_matrix(cfg, rng), "random"
    return Instance(a, b, tag=how)


def _mp_below(cfg, rng, a):
    """b = a + (1 - aa^+) m (1 - a^+a): below a in the star order."""
    x = _mp(a, "first")
    m = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng, 1))
    if x is None:
        return a + m
    one = identity(a.domain, a.rows)
    return a + (one - a @ x) @ m @ (one - x @ a)


def mp_instance(cfg: TrialConfig, rng: random.Random) -> Instance:
    a = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))
    u = rng.random()
    if u < 0.5:
        return Instance(a, _mp_below(cfg, rng, a), tag="below")
    if u < 0.7:
        m = random_matrix(cfg, rng, rank_bound=1)
        return Instance(a, a + _kill_star(a, m), tag="star-only")
    if u < 0.8:
        return Instance(a, a, tag="b=a")
    return Instance(a, random_matrix(cfg, rng), tag="random")


def ep_instance(cfg: TrialConfig, rng: random.Random) -> Instance:
    a = random_ep(cfg, rng)
    u = rng.random()
    if u < 0.55:
        return Instance(a, _mp_below(cfg, rng, a), tag="below")
    if u < 0.75:
        return Instance(a, a + random_matrix(cfg, rng, rank_bound=1), tag="rank1")
    if u < 0.8:
        return Instance(a, a, tag="b=a")
    return Instance(a, random_matrix(cfg, rng), tag="random")


def _diag(cfg, entries) -> Matrix:
    n, dom = cfg.dim, cfg.domain
    return Matrix._make(dom, n, n, tuple(
        tuple(entries[i] if i == j else dom.zero for j in range(n)) for i in range(n)))


def commuting_instance(cfg: TrialConfig, rng: random.Random, w_mode: str = "poly") -> Instance:
    """Simultaneously diagonal (a, b, w) = S(Da, Db, Dw)S^-1, so awb = bwa.

    ``w_mode`` "identity" fixes w = 1, "a" sets w = a (for a^2 b = b a^2).
    With a unitary S and disjoint supports of Da and Db - Da the w-core order holds.
    """
    n, dom = cfg.dim, cfg.domain
    pool = cfg.pool
    nz = [s for s in pool if s] or [dom.one]
    unitary = rng.random() < 0.7
    s = random_unitary(cfg, rng) if unitary else random_unit(cfg, rng)
    s_inv = star(s) if unitary else inverse(s)
    da = [rng.choice(pool) for _ in range(n)]
    if rng.random() < 0.5:
        dn = [rng.choice(nz) if not da[i] and rng.random() < 0.7 else dom.zero for i in range(n)]
        db = [x + y for x, y in zip(da, dn)]
        how = "below"
    else:
        db = [rng.choice(pool) for _ in range(n)]
        how = "random"
    if w_mode == "identity":
        dw = [dom.one] * n
    elif w_mode == "a":
        dw = list(da)
    else:
        supp = [bool(x) or bool(y) for x, y in zip(da, db)]
        dw = [rng.choice(nz) if supp[i] or rng.random() < 0.5 else dom.zero for i in range(n)]
    conj = lambda d: s @ _diag(cfg, d) @ s_inv  # noqa: E731
    tag = f"{'unitary' if unitary else 'similar'}/{how}"
    return Instance(conj(da), conj(db), conj(dw), tag=tag)


def pair_instance(cfg: TrialConfig, rng: random.Random) -> Instance:
    """(a, w) with w-core invertibility roughly half the time."""
    if rng.random() < 0.5:
        inst = random_wcore_instance(cfg, rng)
        return Instance(inst.a, w=inst.w, tag=inst.tag)
    a = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))
    w = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))
    return Instance(a, w=w, tag="random")


GENERATORS: dict[str, Callable[[TrialConfig, random.Random], Instance]] = {
    "wcore_a": lambda cfg, rng: random_wcore_instance(cfg, rng),
    "wcore_ab": lambda cfg, rng: random_wcore_instance(cfg, rng, need_b=True),
    "chain": chain_instance,
    "unit_w": lambda cfg, rng: unit_w_instance(cfg, rng),
    "unit_w_ab": lambda cfg, rng: unit_w_instance(cfg, rng, need_b=True),
    "core_a": core_instance,
    "mp_a": mp_instance,
    "ep_a": ep_instance,
    "pair": pair_instance,
    "commuting": lambda cfg, rng: commuting_instance(cfg, rng),
    "commuting_core": lambda cfg, rng: commuting_instance(cfg, rng, "identity"),
    "commuting_acore": lambda cfg, rng: commuting_instance(cfg, rng, "a"),
}


def random_projection(cfg: TrialConfig, rng: random.Random) -> Matrix | None:
    """q q^(1,3) for random q: the projection onto the column space of q."""
    q = random_matrix(cfg, rng, rank_bound=random_rank(cfg, rng))
    x = _one_three(q, "first")
    return None if x is None else q @ x


def random_idempotent(cfg: TrialConfig, rng: random.Random) -> Matrix:
    """S (1_r + 0) S^-1 for a random unit S."""
    n, dom = cfg.dim, cfg.domain
    r = random_rank(cfg, rng)
    s = random_unit(cfg, rng)
    blk = _diag(cfg, [dom.one if i < r else dom.zero for i in range(n)])
    return s @ blk @ inverse(s)


def pair_with_candidate(cfg: TrialConfig, rng: random.Random, kind: str) -> Instance:
    """(a, w) plus a candidate c: the canonical witness half the time, else random."""
    inst = pair_instance(cfg, rng)
    a, w = inst.a, inst.w
    x = _wcore(a, w)
    u = rng.random()
    if u < 0.4 and not isinstance(x, tuple):
        c = {"p": a @ w @ x, "e": x @ a @ w, "f": w @ x @ a}[kind]
        return Instance(a, w=w, c=c, tag=inst.tag + "/canonical")
    c = random_projection(cfg, rng) if kind == "p" else random_idempotent(cfg, rng)
    return Instance(a, w=w, c=c, tag=inst.tag + "/random-candidate")


GENERATORS["pair_proj"] = lambda cfg, rng: pair_with_candidate(cfg, rng, "p")
GENERATORS["pair_idem"] = lambda cfg, rng: pair_with_candidate(cfg, rng, rng.choice("ef"))
