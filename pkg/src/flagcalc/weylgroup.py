"""Weyl group elements, enumeration by length, and reflections.

An element is represented canonically by its integer action matrix on weight
coordinates (faithful, since the fundamental weights span).  Each element also
carries its length and its lexicographically minimal reduced word; words use
1-based simple-root indices, matching the usual s_1, ..., s_l labels.
"""

from __future__ import annotations

from .errors import InvalidWordError, NotARootError, OutOfRangeError
from .rootdata import Root, RootDatum, Weight

Matrix = tuple  # tuple of row tuples, integer entries


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _matvec(a: Matrix, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


class WeylElement:
    """One Weyl group element; equality and hashing use the action matrix."""

    __slots__ = ("matrix", "inv_matrix", "length", "word")

    def __init__(self, matrix: Matrix, inv_matrix: Matrix, length: int, word: tuple):
        self.matrix = matrix
        self.inv_matrix = inv_matrix
        self.length = length
        self.word = word

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def word_str(self) -> str:
        if not self.word:
            return "e"
        if max(self.word) <= 9:
            return "".join(str(i) for i in self.word)
        return ",".join(str(i) for i in self.word)

    def __str__(self):
        return self.word_str()

    def __repr__(self):
        return f"WeylElement({self.word_str()})"

    def sort_key(self):
        return (self.length, self.word)


class WeylGroup:
    """The Weyl group of a root datum, enumerated lazily by length.

    Elements are interned: the cache maps action matrices to WeylElement
    instances, and a stratum, once filled, is never mutated again.
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.rank = datum.rank
        n = self.rank
        M = datum.cartan_matrix
        # Column i-1 of the reflection s_i is e_{i-1} minus the i-th simple root.
        self.simple_matrices = {}
        for i in range(1, n + 1):
            cols = []
            for j in range(n):
                col = [1 if r == j else 0 for r in range(n)]
                if j == i - 1:
                    col = [c - M[r][i - 1] for r, c in enumerate(col)]
                cols.append(col)
            self.simple_matrices[i] = tuple(
                tuple(cols[j][r] for j in range(n)) for r in range(n)
            )
        self._root_sign = {
            r.omega: (1 if r.is_positive else -1) for r in datum.all_roots
        }
        self._elements: dict = {}
        ident = _identity(n)
        self.identity = self._element(ident, ident)
        self._strata: list = [{self.identity}]
        self._reflection_cache: dict = {}

    # -- element interning ---------------------------------------------------

    def _element(self, matrix: Matrix, inv_matrix: Matrix) -> WeylElement:
        el = self._elements.get(matrix)
        if el is None:
            length, word = self._length_and_word(inv_matrix)
            el = WeylElement(matrix, inv_matrix, length, word)
            self._elements[matrix] = el
        return el

    def _length_and_word(self, inv_matrix: Matrix) -> tuple:
        """Length and lex-min reduced word, by greedy smallest left descent."""
        word = []
        v = inv_matrix  # matrix of the inverse element
        simples = [self.datum.simple_roots[j].omega for j in range(self.rank)]
        sign = self._root_sign
        while True:
            for i in range(1, self.rank + 1):
                if sign[_matvec(v, simples[i - 1])] < 0:
                    word.append(i)
                    v = _matmul(v, self.simple_matrices[i])
                    break
            else:
                return len(word), tuple(word)

    def known_element(self, matrix: Matrix) -> WeylElement:
        """Look up an already-interned element by its action matrix."""
        return self._elements[matrix]

    # -- basic operations ------------------------------------------------------

    def simple_reflection(self, i: int) -> WeylElement:
        if not 1 <= i <= self.rank:
            raise OutOfRangeError(f"simple index {i} out of range")
        s = self.simple_matrices[i]
        return self._element(s, s)

    def element_from_word(self, word) -> WeylElement:
        """Evaluate any word in the generators (not required to be reduced)."""
        m = _identity(self.rank)
        inv = m
        for i in word:
            if not (isinstance(i, int) and 1 <= i <= self.rank):
                raise InvalidWordError(f"letter {i!r} out of range for rank {self.rank}")
            s = self.simple_matrices[i]
            m = _matmul(m, s)
            inv = _matmul(s, inv)
        return self._element(m, inv)

    def compose(self, w: WeylElement, v: WeylElement) -> WeylElement:
        return self._element(
            _matmul(w.matrix, v.matrix), _matmul(v.inv_matrix, w.inv_matrix)
        )

    def inverse(self, w: WeylElement) -> WeylElement:
        return self._element(w.inv_matrix, w.matrix)

    def act(self, w: WeylElement, lam: Weight) -> Weight:
        return _matvec(w.matrix, lam)

    def descends(self, w: WeylElement, i: int) -> bool:
        """True when l(w s_i) = l(w) - 1, by the sign of w(alpha_i)."""
        alpha = self.datum.simple_roots[i - 1].omega
        return self._root_sign[_matvec(w.matrix, alpha)] < 0

    # -- enumeration -------------------------------------------------------

    @property
    def longest_length(self) -> int:
        return self.datum.num_positive_roots

    def order(self) -> int:
        ct = self.datum.cartan_type
        n = ct.rank
        if ct.family == "B":
            fact = 1
            for k in range(2, n + 1):
                fact *= k
            return (2**n) * fact
        if ct.family == "D":
            fact = 1
            for k in range(2, n + 1):
                fact *= k
            return (2 ** (n - 1)) * fact
        return {"G2": 12, "F4": 1152}[ct.family]

    def elements_of_length(self, k: int) -> frozenset:
        if not 0 <= k <= self.longest_length:
            raise OutOfRangeError(
                f"length {k} out of range 0..{self.longest_length}"
            )
        while len(self._strata) <= k:
            prev = self._strata[-1]
            nxt = set()
            for w in prev:
                for i in range(1, self.rank + 1):
                    if not self.descends(w, i):
                        s = self.simple_matrices[i]
                        m = _matmul(w.matrix, s)
                        el = self._element(m, _matmul(s, w.inv_matrix))
                        nxt.add(el)
            self._strata.append(nxt)
        return frozenset(self._strata[k])

    def sorted_stratum(self, k: int) -> list:
        return sorted(self.elements_of_length(k), key=WeylElement.sort_key)

    def longest_element(self) -> WeylElement:
        top = self.elements_of_length(self.longest_length)
        (w0,) = top
        return w0

    def all_elements(self):
        for k in range(self.longest_length + 1):
            yield from self.sorted_stratum(k)

    # -- reflections -------------------------------------------------------

    def root_reflection(self, beta: Root) -> WeylElement:
        """The reflection in a positive root, as a group element."""
        if not self.datum.is_root(beta.omega):
            raise NotARootError(f"{beta} is not a root")
        if not beta.is_positive:
            raise NotARootError("root reflection expects a positive root")
        el = self._reflection_cache.get(beta.omega)
        if el is None:
            n = self.rank
            cvec = beta.coroot_on_omega
            m = tuple(
                tuple(
                    (1 if r == j else 0) - cvec[j] * beta.omega[r] for j in range(n)
                )
                for r in range(n)
            )
            el = self._element(m, m)
            self._reflection_cache[beta.omega] = el
        return el

    # -- reduced words (used by word-independence checks) -------------------

    def reduced_words(self, w: WeylElement) -> list:
        """All reduced words of w; exponential in the length, keep it small."""
        memo: dict = {}

        def rec(u: WeylElement):
            if u.length == 0:
                return [()]
            got = memo.get(u)
            if got is None:
                got = []
                for i in range(1, self.rank + 1):
                    if self.descends(u, i):
                        s = self.simple_matrices[i]
                        parent = self._element(
                            _matmul(u.matrix, s), _matmul(s, u.inv_matrix)
                        )
                        got.extend(rw + (i,) for rw in rec(parent))
                memo[u] = got
            return got

        return rec(w)
