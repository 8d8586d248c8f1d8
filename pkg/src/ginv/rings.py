"""Enumerable finite *-rings with full operation tables.

Supported specs: "zmod:n" (identity involution), "mat:k:gfp" (k x k matrices
over GF(p), transpose involution), and "prod(spec,spec)" (componentwise).
Elements are indices into the tables; ring axioms and involution laws are
verified at construction (exhaustively up to 256 elements, on a fixed
deterministic sample beyond that).
"""

from __future__ import annotations

import itertools
import random

from .domains import _is_prime
from .errors import PreconditionFailed, TooLarge

DEFAULT_RING_CAP = 6561
_FULL_AXIOM_CHECK_LIMIT = 256
_AXIOM_SAMPLES = 20000


class FiniteStarRing:
    """A finite unital *-ring given by lookup tables over element indices."""

    def __init__(self, spec, size, add, mul, star, zero, one, names):
        self.spec = spec
        self.size = size
        self.add_t = add
        self.mul_t = mul
        self.star_t = star
        self.zero = zero
        self.one = one
        self.names = names
        self.neg_t = self._build_neg()
        self._verify_axioms()
        self._units: dict[int, int] | None = None
        self._right_ideal: list | None = None
        self._left_ideal: list | None = None
        self._right_ann: list | None = None
        self._left_ann: list | None = None
        self._inner: list | None = None
        self._projections: tuple | None = None
        self._memo: dict = {}

    # -- construction helpers --------------------------------------------

    def _build_neg(self):
        neg = [None] * self.size
        for x in range(self.size):
            for y in range(self.size):
                if self.add_t[x][y] == self.zero:
                    neg[x] = y
                    break
            if neg[x] is None:
                raise PreconditionFailed(f"element {self.names[x]} has no negative")
        return neg

    def _verify_axioms(self):
        n = self.size
        add, mul, star = self.add_t, self.mul_t, self.star_t
        zero, one = self.zero, self.one
        for x in range(n):
            if add[x][zero] != x or mul[x][one] != x or mul[one][x] != x:
                raise PreconditionFailed("identity axioms fail")
            if star[star[x]] != x:
                raise PreconditionFailed("involution is not involutive")
            for y in range(n):
                if add[x][y] != add[y][x]:
                    raise PreconditionFailed("addition is not commutative")
                if star[add[x][y]] != add[star[x]][star[y]]:
                    raise PreconditionFailed("involution is not additive")
                if star[mul[x][y]] != mul[star[y]][star[x]]:
                    raise PreconditionFailed("involution is not anti-multiplicative")
        if n <= _FULL_AXIOM_CHECK_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_AXIOM_SAMPLES)
            )
        for x, y, z in triples:
            if add[add[x][y]][z] != add[x][add[y][z]]:
                raise PreconditionFailed("addition is not associative")
            if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                raise PreconditionFailed("multiplication is not associative")
            if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                raise PreconditionFailed("left distributivity fails")
            if mul[add[x][y]][z] != add[mul[x][z]][mul[y][z]]:
                raise PreconditionFailed("right distributivity fails")

    # -- elementary operations ---------------------------------------------

    def add(self, x, y):
        return self.add_t[x][y]

    def sub(self, x, y):
        return self.add_t[x][self.neg_t[y]]

    def mul(self, *xs):
        acc = self.one
        for x in xs:
            acc = self.mul_t[acc][x]
        return acc

    def star(self, x):
        return self.star_t[x]

    def pow(self, a, k):
        acc = self.one
        for _ in range(k):
            acc = self.mul_t[acc][a]
        return acc

    def word(self, word, env):
        acc = self.one
        for sym in word:
            e = self.star_t[env[sym[:-1]]] if sym.endswith("*") else env[sym]
            acc = self.mul_t[acc][e]
        return acc

    def name(self, x):
        return self.names[x]

    # -- derived structure (cached) ------------------------------------------

    def units(self) -> dict[int, int]:
        if self._units is None:
            inv = {}
            for x in range(self.size):
                for y in range(self.size):
                    if self.mul_t[x][y] == self.one and self.mul_t[y][x] == self.one:
                        inv[x] = y
                        break
            self._units = inv
        return self._units

    def is_unit(self, x) -> bool:
        return x in self.units()

    def inv_unit(self, x) -> int:
        return self.units()[x]

    def right_ideal(self, e) -> frozenset:
        if self._right_ideal is None:
            self._right_ideal = [
                frozenset(self.mul_t[x][s] for s in range(self.size))
                for x in range(self.size)
            ]
        return self._right_ideal[e]

    def left_ideal(self, e) -> frozenset:
        if self._left_ideal is None:
            self._left_ideal = [
                frozenset(self.mul_t[s][x] for s in range(self.size))
                for x in range(self.size)
            ]
        return self._left_ideal[e]

    def right_ann(self, e) -> frozenset:
        if self._right_ann is None:
            self._right_ann = [
                frozenset(s for s in range(self.size) if self.mul_t[x][s] == self.zero)
                for x in range(self.size)
            ]
        return self._right_ann[e]

    def left_ann(self, e) -> frozenset:
        if self._left_ann is None:
            self._left_ann = [
                frozenset(s for s in range(self.size) if self.mul_t[s][x] == self.zero)
                for x in range(self.size)
            ]
        return self._left_ann[e]

    def inner_inverses(self, a) -> tuple:
        if self._inner is None:
            self._inner = [None] * self.size
        if self._inner[a] is None:
            mul = self.mul_t
            self._inner[a] = tuple(x for x in range(self.size) if mul[mul[a][x]][a] == a)
        return self._inner[a]

    def is_regular(self, a) -> bool:
        return bool(self.inner_inverses(a))

    def projections(self) -> tuple:
        if self._projections is None:
            self._projections = tuple(
                p
                for p in range(self.size)
                if self.mul_t[p][p] == p and self.star_t[p] == p
            )
        return self._projections

    def leq_L(self, a, b) -> bool:
        return a in self.left_ideal(b)

    def leq_R(self, a, b) -> bool:
        return a in self.right_ideal(b)

    def green(self, a, b) -> dict:
        leql, leqr = self.leq_L(a, b), self.leq_R(a, b)
        gel, ger = self.leq_L(b, a), self.leq_R(b, a)
        return {
            "leqL": leql,
            "leqR": leqr,
            "leqH": leql and leqr,
            "L": leql and gel,
            "R": leqr and ger,
            "H": leql and leqr and gel and ger,
        }

    # -- equation scanning ------------------------------------------------------

    def solve_system(self, system, env, unknown="x") -> list[int]:
        """All ring elements satisfying every word equation of the system."""
        sols = []
        e = dict(env)
        for cand in range(self.size):
            e[unknown] = cand
            if all(self.word(lhs, e) == self.word(rhs, e) for _, lhs, rhs in system):
                sols.append(cand)
        return sols

    def _memoized(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def group_inv(self, a):
        def compute():
            mul = self.mul_t
            for x in range(self.size):
                ax, xa = mul[a][x], mul[x][a]
                if ax == xa and mul[ax][a] == a and mul[xa][x] == x:
                    return x
            return None

        return self._memoized(("group", a), compute)

    def mp_inv(self, a):
        def compute():
            mul, star = self.mul_t, self.star_t
            for x in range(self.size):
                ax, xa = mul[a][x], mul[x][a]
                if (
                    mul[ax][a] == a
                    and mul[xa][x] == x
                    and star[ax] == ax
                    and star[xa] == xa
                ):
                    return x
            return None

        return self._memoized(("mp", a), compute)

    def core_inv(self, a):
        def compute():
            mul, star = self.mul_t, self.star_t
            for x in range(self.size):
                ax = mul[a][x]
                if mul[ax][x] == x and mul[mul[x][a]][a] == a and star[ax] == ax:
                    return x
            return None

        return self._memoized(("core", a), compute)

    def dual_core_inv(self, a):
        def compute():
            mul, star = self.mul_t, self.star_t
            for x in range(self.size):
                xa = mul[x][a]
                if mul[x][xa] == x and mul[a][mul[a][x]] == a and star[xa] == xa:
                    return x
            return None

        return self._memoized(("dual_core", a), compute)

    def one_three_set(self, a) -> tuple:
        def compute():
            mul, star = self.mul_t, self.star_t
            return tuple(
                x
                for x in range(self.size)
                if mul[mul[a][x]][a] == a and star[mul[a][x]] == mul[a][x]
            )

        return self._memoized(("13", a), compute)

    def one_four_set(self, a) -> tuple:
        def compute():
            mul, star = self.mul_t, self.star_t
            return tuple(
                x
                for x in range(self.size)
                if mul[mul[a][x]][a] == a and star[mul[x][a]] == mul[x][a]
            )

        return self._memoized(("14", a), compute)

    def along(self, a, d):
        """Inverse of a along d by definition scan (unique when it exists)."""

        def compute():
            mul = self.mul_t
            ds, sd = self.right_ideal(d), self.left_ideal(d)
            for b in range(self.size):
                if b not in ds or b not in sd:
                    continue
                if mul[mul[b][a]][d] == d and mul[d][mul[a][b]] == d:
                    return b
            return None

        return self._memoized(("along", a, d), compute)

    def wcore_solutions(self, a, w) -> tuple:
        def compute():
            mul, star = self.mul_t, self.star_t
            aw = mul[a][w]
            out = []
            for x in range(self.size):
                awx = mul[aw][x]
                if mul[awx][x] == x and mul[mul[x][aw]][a] == a and star[awx] == awx:
                    out.append(x)
            return tuple(out)

        return self._memoized(("wcore", a, w), compute)

    def wcore(self, a, w):
        sols = self.wcore_solutions(a, w)
        return sols[0] if sols else None

    def dual_vcore_solutions(self, a, v) -> tuple:
        def compute():
            mul, star = self.mul_t, self.star_t
            va = mul[v][a]
            ava = mul[a][va]
            out = []
            for y in range(self.size):
                yva = mul[y][va]
                if mul[y][yva] == y and mul[ava][y] == a and star[yva] == yva:
                    out.append(y)
            return tuple(out)

        return self._memoized(("dvcore", a, v), compute)

    def dual_vcore(self, a, v):
        sols = self.dual_vcore_solutions(a, v)
        return sols[0] if sols else None

    def pseudo_core(self, a):
        """(value, minimal index) of the pseudo-core inverse, or None."""

        def compute():
            mul, star = self.mul_t, self.star_t
            p = a  # a^m
            for m in range(1, self.size + 2):
                pa = mul[p][a]  # a^(m+1)
                for x in range(self.size):
                    ax = mul[a][x]
                    if mul[x][pa] == p and mul[ax][x] == x and star[ax] == ax:
                        return (x, m)
                p = pa
            return None

        return self._memoized(("pseudo_core", a), compute)


# ---------------------------------------------------------------------------
# constructors


def _zmod_ring(n: int) -> FiniteStarRing:
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    mul = [[(x * y) % n for y in range(n)] for x in range(n)]
    star = list(range(n))
    names = [str(x) for x in range(n)]
    return FiniteStarRing(f"zmod:{n}", n, add, mul, star, 0, 1 % n, names)


def _mat_ring(k: int, p: int) -> FiniteStarRing:
    if not _is_prime(p):
        raise PreconditionFailed(f"gf{p}: {p} is not prime")
    size = p ** (k * k)

    def decode(idx):
        digits = []
        for _ in range(k * k):
            digits.append(idx % p)
            idx //= p
        return tuple(tuple(digits[i * k + j] for j in range(k)) for i in range(k))

    def encode(m):
        idx = 0
        for i in reversed(range(k)):
            for j in reversed(range(k)):
                idx = idx * p + m[i][j]
        return idx

    mats = [decode(i) for i in range(size)]
    add = [
        [
            encode(
                tuple(
                    tuple((x[i][j] + y[i][j]) % p for j in range(k)) for i in range(k)
                )
            )
            for y in mats
        ]
        for x in mats
    ]
    mul = []
    for x in mats:
        row = []
        for y in mats:
            prod = tuple(
                tuple(sum(x[i][t] * y[t][j] for t in range(k)) % p for j in range(k))
                for i in range(k)
            )
            row.append(encode(prod))
        mul.append(row)
    star = [
        encode(tuple(tuple(m[j][i] for j in range(k)) for i in range(k))) for m in mats
    ]
    zero = encode(tuple(tuple(0 for _ in range(k)) for _ in range(k)))
    one = encode(tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))
    names = [str([list(r) for r in m]) for m in mats]
    return FiniteStarRing(f"mat:{k}:gf{p}", size, add, mul, star, zero, one, names)


def _product_ring(r1: FiniteStarRing, r2: FiniteStarRing) -> FiniteStarRing:
    n1, n2 = r1.size, r2.size
    size = n1 * n2

    def enc(i, j):
        return i * n2 + j

    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    star = [0] * size
    names = [""] * size
    for i1 in range(n1):
        for i2 in range(n2):
            x = enc(i1, i2)
            star[x] = enc(r1.star_t[i1], r2.star_t[i2])
            names[x] = f"({r1.names[i1]},{r2.names[i2]})"
            for j1 in range(n1):
                for j2 in range(n2):
                    y = enc(j1, j2)
                    add[x][y] = enc(r1.add_t[i1][j1], r2.add_t[i2][j2])
                    mul[x][y] = enc(r1.mul_t[i1][j1], r2.mul_t[i2][j2])
    return FiniteStarRing(
        f"prod({r1.spec},{r2.spec})",
        size,
        add,
        mul,
        star,
        enc(r1.zero, r2.zero),
        enc(r1.one, r2.one),
        names,
    )


def _split_product_args(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise PreconditionFailed(f"malformed product spec {body!r}")


def _spec_size(spec: str) -> int:
    spec = spec.strip()
    if spec.startswith("prod(") and spec.endswith(")"):
        left, right = _split_product_args(spec[5:-1])
        return _spec_size(left) * _spec_size(right)
    parts = spec.split(":")
    if parts[0] == "zmod" and len(parts) == 2:
        n = int(parts[1])
        if n < 2:
            raise PreconditionFailed(f"zmod modulus must be >= 2, got {n}")
        return n
    if parts[0] == "mat" and len(parts) == 3 and parts[2].startswith("gf"):
        k = int(parts[1])
        p = int(parts[2][2:])
        if k < 1:
            raise PreconditionFailed("matrix size must be >= 1")
        return p ** (k * k)
    raise PreconditionFailed(f"unknown ring spec {spec!r}")


def enumerate_ring(spec: str, cap: int = DEFAULT_RING_CAP) -> FiniteStarRing:
    """Build the ring described by spec; refuses rings larger than cap."""
    size = _spec_size(spec)
    if size > cap:
        raise TooLarge(f"ring {spec} has {size} elements, cap is {cap}")
    spec = spec.strip()
    if spec.startswith("prod(") and spec.endswith(")"):
        left, right = _split_product_args(spec[5:-1])
        return _product_ring(enumerate_ring(left, cap), enumerate_ring(right, cap))
    parts = spec.split(":")
    if parts[0] == "zmod":
        return _zmod_ring(int(parts[1]))
    k = int(parts[1])
    p = int(parts[2][2:])
    return _mat_ring(k, p)


def solve_equations(ring: FiniteStarRing, system, env: dict, unknown: str = "x"):
    """Complete solution set of a word-equation system by exhaustive scan."""
    return ring.solve_system(system, env, unknown)


def green_relations(ring: FiniteStarRing, a: int, b: int) -> dict:
    """Green preorder and equivalence flags between two ring elements."""
    return ring.green(a, b)
