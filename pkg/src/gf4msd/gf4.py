"""GF(4) arithmetic and linear codes under the Hermitian inner product.

Field elements are ints 0..3 encoding {0, 1, w, w2} with w2 = w + 1;
addition is XOR and conjugation swaps w and w2.  Pauli letters follow the
fixed convention 1 <-> X, w <-> Z, w2 <-> Y, used consistently everywhere
(any fixed choice works because distillation inputs are twirled).

All types are immutable after construction and safe to share across
threads; codeword enumeration is a deterministic stream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumerators import Enumerator

GF4_CHARS = "01wW"
PAULI_CHARS = "IXZY"  # indexed by field element

MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
CONJ = (0, 1, 3, 2)

DEFAULT_BUDGET = 4**18


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else "line %d: %s" % (line, message))


class BudgetExceededError(RuntimeError):
    pass


class NotM3CodeError(ValueError):
    pass


def gf4_mul(a: int, b: int) -> int:
    return MUL[a][b]


def gf4_conj(a: int) -> int:
    return CONJ[a]


def vec_add(u, v):
    return tuple(a ^ b for a, b in zip(u, v))


def vec_scale(s, v):
    row = MUL[s]
    return tuple(row[a] for a in v)


def weight(v) -> int:
    return sum(1 for a in v if a)


def hermitian_ip(u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc ^= MUL[a][CONJ[b]]
    return acc


def rref(rows, n):
    """Deterministic reduced row echelon form over GF(4).

    Pivots by first nonzero column; returns (rows, pivot_columns).
    """
    rows = [tuple(r) for r in rows]
    out = []
    pivots = []
    col = 0
    remaining = [r for r in rows if any(r)]
    while remaining and col < n:
        pivot_row = None
        for r in remaining:
            if r[col]:
                pivot_row = r
                break
        if pivot_row is None:
            col += 1
            continue
        remaining.remove(pivot_row)
        inv = CONJ[pivot_row[col]] if pivot_row[col] >= 2 else pivot_row[col]
        # inverse in GF(4): 1->1, w->w2, w2->w
        pivot_row = vec_scale(inv, pivot_row)
        out = [
            vec_add(r, vec_scale(r[col], pivot_row)) if r[col] else r for r in out
        ]
        remaining = [
            vec_add(r, vec_scale(r[col], pivot_row)) if r[col] else r for r in remaining
        ]
        remaining = [r for r in remaining if any(r)]
        out.append(pivot_row)
        pivots.append(col)
        col += 1
    # sort rows by pivot column for a canonical form
    order = sorted(range(len(out)), key=lambda i: pivots[i])
    return [out[i] for i in order], sorted(pivots)


def nullspace(rows, n):
    """Basis of {v : sum_i rows[r][i] * v[i] = 0} over GF(4), deterministic."""
    red, pivots = rref(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, pc in zip(red, pivots):
            # pivot entry is 1, so v[pc] = -sum_{c>pc} r[c] v[c] = r[f]
            v[pc] = r[f]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Gf4Code:
    """Linear [n, k] code over GF(4) given by k independent generators."""

    n: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.n:
                raise ValueError("generator length != n")
            if any(a not in (0, 1, 2, 3) for a in g):
                raise ValueError("entries must be GF(4) elements 0..3")
        red, pivots = rref(gens, self.n)
        if len(red) != len(gens):
            raise ValueError("generators are linearly dependent")
        object.__setattr__(self, "_rref", (tuple(red), tuple(pivots)))

    @property
    def k(self) -> int:
        return len(self.generators)

    @classmethod
    def from_strings(cls, rows):
        gens = []
        for row in rows:
            gens.append(tuple(GF4_CHARS.index(ch) for ch in row.strip()))
        n = len(gens[0]) if gens else 0
        return cls(n, tuple(gens))

    @classmethod
    def from_pauli_strings(cls, rows):
        gens = []
        for row in rows:
            gens.append(tuple(PAULI_CHARS.index(ch) for ch in row.strip().upper()))
        n = len(gens[0]) if gens else 0
        return cls(n, tuple(gens))

    def contains(self, v) -> bool:
        red, pivots = self._rref
        v = list(v)
        for row, pc in zip(red, pivots):
            if v[pc]:
                s = v[pc]
                for i in range(self.n):
                    v[i] ^= MUL[s][row[i]]
        return not any(v)

    def to_text(self) -> str:
        lines = ["%d %d" % (self.n, self.k)]
        for g in self.generators:
            lines.append("".join(GF4_CHARS[a] for a in g))
        return "\n".join(lines) + "\n"


def zero_code(n: int) -> Gf4Code:
    return Gf4Code(n, ())


def hermitian_dual(code: Gf4Code) -> Gf4Code:
    """The [n, n-k] code Hermitian-orthogonal to every generator."""
    # v is dual iff sum_i g_i conj(v_i) = 0; conjugating that equation
    # shows v solves the system with conjugated generator rows.
    conj_rows = [tuple(CONJ[a] for a in g) for g in code.generators]
    basis = nullspace(conj_rows, code.n)
    return Gf4Code(code.n, tuple(basis))


def is_self_orthogonal(code: Gf4Code) -> bool:
    gens = code.generators
    for i, u in enumerate(gens):
        for v in gens[i:]:
            if hermitian_ip(u, v):
                return False
    return True


def is_self_dual(code: Gf4Code) -> bool:
    return 2 * code.k == code.n and is_self_orthogonal(code)


def enumerate_codewords(code: Gf4Code, budget: int = DEFAULT_BUDGET):
    """Yield all 4^k codewords exactly once, deterministically."""
    if 4**code.k > budget:
        raise BudgetExceededError("4^%d codewords exceed budget %d" % (code.k, budget))

    def rec(level, acc):
        if level == code.k:
            yield acc
            return
        g = code.generators[level]
        for s in range(4):
            yield from rec(level + 1, vec_add(acc, vec_scale(s, g)) if s else acc)

    yield from rec(0, (0,) * code.n)


def _pack(v) -> int:
    acc = 0
    for i, a in enumerate(v):
        acc |= a << (2 * i)
    return acc


def weight_enumerator(code: Gf4Code, budget: int = DEFAULT_BUDGET) -> Enumerator:
    """Coefficient A_j = number of codewords of Hamming weight j.

    Streams the 4^k span with a packed-bits tally; nothing is materialized.
    """
    if 4**code.k > budget:
        raise BudgetExceededError("4^%d codewords exceed budget %d" % (code.k, budget))
    n, k = code.n, code.k
    lo_mask = int("01" * n, 2) if n else 0
    counts = [0] * (n + 1)
    packed = []
    for g in code.generators:
        p0 = _pack(g)
        lo = p0 & lo_mask
        hi = (p0 >> 1) & lo_mask
        p1 = hi | ((lo ^ hi) << 1)  # multiply by w
        lo, hi = p1 & lo_mask, (p1 >> 1) & lo_mask
        p2 = hi | ((lo ^ hi) << 1)
        packed.append((0, p0, p1, p2))

    def rec(level, acc):
        if level == k:
            counts[((acc | (acc >> 1)) & lo_mask).bit_count()] += 1
            return
        row = packed[level]
        for s in range(4):
            rec(level + 1, acc ^ row[s])

    rec(0, 0)
    return Enumerator(n, tuple(counts))


def shorten(code: Gf4Code, coord: int) -> Gf4Code:
    """Codewords vanishing at `coord`, with that coordinate deleted."""
    if not 0 <= coord < code.n:
        raise IndexError("coordinate out of range")
    gens = list(code.generators)
    pivot = None
    for i, g in enumerate(gens):
        if g[coord]:
            pivot = gens.pop(i)
            break
    if pivot is not None:
        gens = [vec_add(g, vec_scale(MUL[g[coord]][_inv(pivot[coord])], pivot)) if g[coord] else g for g in gens]
    short = [g[:coord] + g[coord + 1 :] for g in gens]
    short = [g for g in short if any(g)]
    return Gf4Code(code.n - 1, tuple(short))


def _inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError
    return 1 if a == 1 else CONJ[a]


@dataclass(frozen=True)
class SignedPauli:
    """A positive Pauli word (as a GF(4) vector) with a sign."""

    word: tuple
    sign: int

    @property
    def pauli(self) -> str:
        return "".join(PAULI_CHARS[a] for a in self.word)

    def __str__(self):
        return ("+" if self.sign > 0 else "-") + self.pauli


def rall_signs(code: Gf4Code, budget: int = DEFAULT_BUDGET):
    """Signed Pauli group of the stabilizer code determined by `code`.

    The sign of a word of weight j is +1 for j = 0 mod 4 and -1 for
    j = 2 mod 4; odd weights mean the code does not define one.
    """
    if not is_self_orthogonal(code):
        raise NotM3CodeError("code is not Hermitian self-orthogonal")
    out = []
    for w in enumerate_codewords(code, budget):
        j = weight(w)
        if j % 2:
            raise NotM3CodeError("odd-weight codeword %s" % (w,))
        out.append(SignedPauli(w, 1 if j % 4 == 0 else -1))
    return out


# ---------------------------------------------------------------------------
# file format: line 1 "n k"; then k rows of n symbols from {0,1,w,W};
# '#' starts a comment; blank lines separate database blocks.


def _clean_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        yield lineno, line


def parse_code(text: str) -> Gf4Code:
    codes = parse_database(text)
    if len(codes) != 1:
        raise ParseError("expected exactly one code block, found %d" % len(codes))
    return codes[0]


def parse_database(text: str):
    """Parse one code per block, blocks separated by blank lines."""
    blocks = []
    current = []
    for lineno, line in _clean_lines(text):
        if not line:
            if current:
                blocks.append(current)
                current = []
            continue
        current.append((lineno, line))
    if current:
        blocks.append(current)

    codes = []
    for block in blocks:
        lineno, header = block[0]
        parts = header.split()
        if len(parts) != 2:
            raise ParseError("expected header 'n k'", lineno)
        try:
            n, k = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("expected integers in header 'n k'", lineno) from None
        if n < 0 or k < 0 or k > n:
            raise ParseError("invalid dimensions n=%d k=%d" % (n, k), lineno)
        if len(block) - 1 != k:
            raise ParseError(
                "expected %d generator rows, found %d" % (k, len(block) - 1), lineno
            )
        gens = []
        for rowno, row in block[1:]:
            row = "".join(row.split())
            if len(row) != n:
                raise ParseError("expected %d symbols" % n, rowno)
            try:
                gens.append(tuple(GF4_CHARS.index(ch) for ch in row))
            except ValueError:
                raise ParseError("symbols must be one of 0,1,w,W", rowno) from None
        try:
            codes.append(Gf4Code(n, tuple(gens)))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return codes


# ---------------------------------------------------------------------------
# randomized corpus helpers (used by the test suite and demos)


def random_self_orthogonal_code(rng, n: int, target_k: int | None = None) -> Gf4Code:
    """Grow a random Hermitian self-orthogonal code of length n.

    Stops at target_k generators (default: a random achievable size).
    """
    if target_k is None:
        target_k = rng.randint(0, n // 2)
    gens: list = []
    attempts = 0
    while len(gens) < target_k and attempts < 400:
        attempts += 1
        dual = hermitian_dual(Gf4Code(n, tuple(gens))) if gens else None
        if dual is None:
            cand = tuple(rng.randrange(4) for _ in range(n))
        else:
            coeffs = [rng.randrange(4) for _ in dual.generators]
            cand = (0,) * n
            for s, g in zip(coeffs, dual.generators):
                cand = vec_add(cand, vec_scale(s, g))
        if not any(cand) or weight(cand) % 2:
            continue
        trial = gens + [cand]
        try:
            code = Gf4Code(n, tuple(trial))
        except ValueError:
            continue
        if is_self_orthogonal(code):
            gens = trial
    return Gf4Code(n, tuple(gens))


def random_maximal_self_orthogonal_code(rng, n: int) -> Gf4Code:
    """Random maximal self-orthogonal code of odd length n (dimension (n-1)/2)."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    want = (n - 1) // 2
    while True:
        code = random_self_orthogonal_code(rng, n, target_k=want)
        if code.k == want:
            return code
