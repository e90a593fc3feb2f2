"""Words in the braid and cactus groups and a generic relation verifier.

The braid group on n strands has generators g1 .. g(n-1) subject to the
commutation and Yang-Baxter relations; the cactus group has an involutive
generator s(p,q) for every interval 1 <= p < q <= n, subject to the
square, disjointness and containment relations.  Both project onto the
symmetric group: g(i) goes to the adjacent transposition and s(p,q) to
the permutation reversing the interval p..q.

Nothing here attempts the word problem.  Equality of words is always
tested through a concrete action: ``verify_action`` takes finite maps
for the generators and checks a list of relations pointwise, reporting
a witness for every violation.
"""

from dataclasses import dataclass
import re

__all__ = [
    "Permutation",
    "BraidWord",
    "CactusWord",
    "s_hat",
    "cactus_relation_instances",
    "project_to_symmetric",
    "RelationFailure",
    "verify_action",
    "shat_images",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, .., n}, stored as the tuple of images."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(x) = p(q(x))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for x in range(1, self.n + 1):
            out[self(x) - 1] = x
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(self(x) == x for x in range(1, self.n + 1))


def s_hat(p: int, q: int, n: int) -> Permutation:
    """The interval-reversing permutation: fixes 1..p-1 and q+1..n,
    sends x in p..q to p+q-x."""
    if not 1 <= p < q <= n:
        raise ValueError(f"need 1 <= p < q <= n, got p={p}, q={q}, n={n}")
    return Permutation(
        tuple(p + q - x if p <= x <= q else x for x in range(1, n + 1))
    )


@dataclass(frozen=True)
class BraidWord:
    """Word in braid generators; letters are (index, +-1) pairs."""

    letters: tuple
    n: int

    def __post_init__(self):
        for i, e in self.letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"generator index {i} out of range for n={self.n}")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {e}")

    @classmethod
    def parse(cls, text: str, n: int) -> "BraidWord":
        """Parse text like ``"g1G2g1"``; capital letters are inverses."""
        letters = []
        for m in re.finditer(r"([gG])(\d+)|(\S)", text.replace(" ", "")):
            if not m.group(1):
                raise ValueError(f"bad braid word syntax near {m.group(3)!r}")
            letters.append((int(m.group(2)), 1 if m.group(1) == "g" else -1))
        return cls(tuple(letters), n)

    def __str__(self):
        return "".join(("g" if e == 1 else "G") + str(i) for i, e in self.letters)


@dataclass(frozen=True)
class CactusWord:
    """Word in cactus generators; letters are (p, q) interval pairs.

    The generators are involutions, so no exponents are stored.
    """

    letters: tuple
    n: int

    def __post_init__(self):
        for p, q in self.letters:
            if not 1 <= p < q <= self.n:
                raise ValueError(f"bad interval ({p},{q}) for n={self.n}")

    @classmethod
    def parse(cls, text: str, n: int) -> "CactusWord":
        """Parse text like ``"s(1,3).s(1,2)"``."""
        text = text.strip()
        if not text:
            return cls((), n)
        letters = []
        for part in text.split("."):
            m = re.fullmatch(r"\s*s\((\d+),(\d+)\)\s*", part)
            if not m:
                raise ValueError(f"bad cactus word syntax: {part!r}")
            letters.append((int(m.group(1)), int(m.group(2))))
        return cls(tuple(letters), n)

    def __str__(self):
        return ".".join(f"s({p},{q})" for p, q in self.letters)


def cactus_relation_instances(n: int):
    """All defining relation instances of the cactus group on n fruits.

    Returns (left, right) pairs of CactusWords: the squares
    s(p,q)s(p,q) = 1, the commutations for disjoint intervals, and
    s(p,q)s(k,l) = s(r,t)s(p,q) for contained intervals, where r and t
    are the images of l and k under the reversal of p..q.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    intervals = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    out = []
    for pq in intervals:
        out.append((CactusWord((pq, pq), n), CactusWord((), n)))
    for p, q in intervals:
        for k, l in intervals:
            if q < k:  # disjoint, each unordered pair listed once
                out.append(
                    (
                        CactusWord(((p, q), (k, l)), n),
                        CactusWord(((k, l), (p, q)), n),
                    )
                )
    for p, q in intervals:
        rev = s_hat(p, q, n)
        for k, l in intervals:
            if (p, q) != (k, l) and p <= k < l <= q:
                r, t = rev(l), rev(k)
                out.append(
                    (
                        CactusWord(((p, q), (k, l)), n),
                        CactusWord(((r, t), (p, q)), n),
                    )
                )
    return out


def project_to_symmetric(word) -> Permutation:
    """Image of a braid or cactus word in the symmetric group.

    This is the word homomorphism sending s(p,q) to the interval
    reversal and g(i)^(+-1) to the transposition (i, i+1); the empty
    word maps to the identity.
    """
    out = Permutation.identity(word.n)
    if isinstance(word, CactusWord):
        for p, q in word.letters:
            out = out * s_hat(p, q, word.n)
        return out
    if isinstance(word, BraidWord):
        for i, _e in word.letters:  # a transposition is its own inverse
            out = out * s_hat(i, i + 1, word.n)
        return out
    raise TypeError(f"expected BraidWord or CactusWord, got {type(word).__name__}")


@dataclass(frozen=True)
class RelationFailure:
    relation: tuple
    witness: object
    left_value: object
    right_value: object

    def as_dict(self):
        return {
            "relation": [
                [list(letter) for letter in self.relation[0]],
                [list(letter) for letter in self.relation[1]],
            ],
            "witness": str(self.witness),
            "left": str(self.left_value),
            "right": str(self.right_value),
        }


def _letters(word):
    letters = getattr(word, "letters", None)
    return letters if letters is not None else tuple(word)


def verify_action(gen_images: dict, relations, equal=None):
    """Check that generator images satisfy a list of relations.

    ``gen_images`` maps generator keys to finite maps (dicts) on a common
    set; ``relations`` is a list of (left word, right word) pairs, each
    word a sequence of generator keys (or an object with ``.letters``).
    Words act on the left, so the last letter is applied first.  Returns
    the list of RelationFailures, one per (relation, witness) pair.
    """
    if equal is None:
        equal = lambda x, y: x == y
    images = dict(gen_images)
    domains = {frozenset(m) for m in images.values()}
    if len(domains) > 1:
        raise ValueError("generator images act on different domains")
    domain = sorted(next(iter(domains)), key=str) if domains else []
    for g, m in images.items():
        if len(set(m.values())) != len(m):
            raise ValueError(f"image of generator {g!r} is not invertible")

    def apply_word(word, x):
        for letter in reversed(_letters(word)):
            try:
                m = images[letter]
            except KeyError:
                raise ValueError(f"no image supplied for generator {letter!r}")
            x = m[x]
        return x

    failures = []
    for left, right in relations:
        rel = (_letters(left), _letters(right))
        for x in domain:
            lhs = apply_word(left, x)
            rhs = apply_word(right, x)
            if not equal(lhs, rhs):
                failures.append(RelationFailure(rel, x, lhs, rhs))
                break  # one witness per violated relation
    return failures


def shat_images(n: int) -> dict:
    """Generator images for the interval reversals acting on {1..n}."""
    return {
        (p, q): {x: s_hat(p, q, n)(x) for x in range(1, n + 1)}
        for p in range(1, n + 1)
        for q in range(p + 1, n + 1)
    }
