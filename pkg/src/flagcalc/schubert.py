"""Divided difference operators, Schubert expansions, Chevalley products,
Giambelli representatives and structure constants.

The central object is :class:`SchubertCalc`, one per Cartan type.  It owns
the (immutable) root datum and Weyl group together with two memo caches:

* per-variable tables for the divided difference kernel, and
* the table of Giambelli representatives, filled top-down from the longest
  element.

Both caches are filled idempotently with deterministic values, so concurrent
use only risks duplicated work, never wrong answers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegralExpansionError, OutOfRangeError
from .polyring import Polynomial, Rational, _norm_coeff
from .rootdata import CartanType, RootDatum, Weight, build_root_datum
from .weylgroup import WeylElement, WeylGroup, _matmul


class SchubertExpansion:
    """An integer combination of Schubert classes of one fixed codimension."""

    __slots__ = ("codim", "coeffs")

    def __init__(self, codim: int, coeffs: dict | None = None):
        clean = {}
        if coeffs:
            for w, c in coeffs.items():
                if c:
                    if w.length != codim:
                        raise ValueError(
                            f"class Z_{w} has length {w.length}, expected {codim}"
                        )
                    clean[w] = c
        self.codim = codim
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, SchubertExpansion)
            and self.codim == other.codim
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __add__(self, other):
        if self.codim != other.codim:
            raise ValueError("codimension mismatch")
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return SchubertExpansion(self.codim, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "SchubertExpansion":
        if not c:
            return SchubertExpansion(self.codim)
        return SchubertExpansion(self.codim, {w: v * c for w, v in self.coeffs.items()})

    def items_sorted(self):
        return sorted(self.coeffs.items(), key=lambda wc: wc[0].sort_key())

    def coefficient(self, w: WeylElement) -> int:
        return self.coeffs.get(w, 0)

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for w, c in self.items_sorted():
            name = f"Z_{w.word_str()}"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}*{name}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"SchubertExpansion({self.codim}, {self})"

    def to_json_dict(self) -> dict:
        return {
            "codim": self.codim,
            "coeffs": {w.word_str(): c for w, c in self.items_sorted()},
        }


class SchubertCalc:
    """Schubert calculus engine for one Cartan type."""

    def __init__(self, ct: CartanType, datum: RootDatum | None = None):
        self.cartan_type = ct
        self.datum = datum if datum is not None else build_root_datum(ct)
        self.group = WeylGroup(self.datum)
        self.rank = self.datum.rank
        self.weyl_order = self.group.order()
        self._dd_tables: dict = {}
        self._gtable: dict = {}  # element -> unscaled Giambelli polynomial
        self._d_unscaled: Polynomial | None = None

    # -- divided differences -------------------------------------------------

    def _dd_table(self, i: int, k: int) -> Polynomial:
        """Divided difference of w_i^k, via the telescoped product formula.

        With a = alpha_i the table entry is
        sum_{j=0}^{k-1} w_i^j (w_i - a)^{k-1-j},
        which times a equals w_i^k - (w_i - a)^k exactly.
        """
        table = self._dd_tables.get(i)
        if table is None:
            table = [Polynomial.zero(self.rank)]
            self._dd_tables[i] = table
        while len(table) <= k:
            m = len(table)  # building entry for exponent m
            n = self.rank
            alpha = self.datum.simple_roots[i - 1].omega
            image = Polynomial.linear_form(
                tuple((1 if r == i - 1 else 0) - alpha[r] for r in range(n))
            )  # s_i(w_i) = w_i - alpha_i
            acc = Polynomial.zero(n)
            img_pow = Polynomial.one(n)
            xi_powers = []
            p = Polynomial.one(n)
            for _ in range(m):
                xi_powers.append(p)
                p = p * Polynomial.variable(n, i - 1)
            for j in range(m - 1, -1, -1):
                acc = acc + xi_powers[j] * img_pow
                img_pow = img_pow * image
            table.append(acc)
        return table[k]

    def divided_difference(self, i: int, f: Polynomial) -> Polynomial:
        """Apply the i-th divided difference (f - s_i f) / alpha_i, exactly."""
        if not 1 <= i <= self.rank:
            raise OutOfRangeError(f"simple index {i} out of range")
        out: dict = {}
        for expo, c in f.terms.items():
            k = expo[i - 1]
            if not k:
                continue
            stripped = expo[: i - 1] + (0,) + expo[i:]
            for e, v in self._dd_table(i, k).terms.items():
                key = tuple(x + y for x, y in zip(e, stripped))
                w = out.get(key, 0) + c * v
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
        for e in list(out):
            out[e] = _norm_coeff(out[e])
            if not out[e]:
                del out[e]
        return Polynomial._raw(self.rank, out)

    def delta_word(self, word, f: Polynomial) -> Polynomial:
        """Compose divided differences along an explicit word.

        The word s_{i_1} ... s_{i_k} acts as Delta_{i_1} o ... o Delta_{i_k},
        so the rightmost letter is applied first.
        """
        for i in reversed(tuple(word)):
            if f.is_zero():
                break
            f = self.divided_difference(i, f)
        return f

    def delta_w(self, w: WeylElement, f: Polynomial) -> Polynomial:
        """Divided difference operator of a Weyl element (along its stored word)."""
        return self.delta_word(w.word, f)

    # -- characteristic homomorphism -----------------------------------------

    def _expand_raw(self, f: Polynomial) -> dict:
        """Coefficients Delta_w(f) over all w of length deg(f); exact rationals.

        Computed layer by layer: the value at w is obtained from the value at
        s_i w for the first letter i of w's reduced word, so each element costs
        one divided difference and zero layers prune their whole subtree.
        """
        k = f.degree()
        if k < 0:
            return {}
        if not f.is_homogeneous():
            raise ValueError("schubert expansion needs a homogeneous polynomial")
        if k > self.group.longest_length:
            raise OutOfRangeError(
                f"degree {k} exceeds the number of positive roots"
            )
        level = {self.group.identity: f}
        for step in range(1, k + 1):
            nxt = {}
            for v in self.group.elements_of_length(step):
                i = v.word[0]
                s = self.group.simple_matrices[i]
                parent = self.group.known_element(_matmul(s, v.matrix))
                g = level.get(parent)
                if g is None:
                    continue
                h = self.divided_difference(i, g)
                if not h.is_zero():
                    nxt[v] = h
            level = nxt
            if not level:
                break
        return {w: g.constant_term() for w, g in level.items()}

    def schubert_expand(self, f: Polynomial) -> SchubertExpansion:
        """Expansion of the class of f in the Schubert basis.

        Every coefficient must come out an integer; otherwise f is not an
        integral class and NonIntegralExpansionError is raised.
        """
        k = max(f.degree(), 0)
        raw = self._expand_raw(f)
        coeffs = {}
        for w, c in raw.items():
            if not isinstance(c, int):
                raise NonIntegralExpansionError(
                    f"coefficient of Z_{w} is the non-integer {c}"
                )
            coeffs[w] = c
        return SchubertExpansion(k, coeffs)

    def indicator(self, w: WeylElement) -> SchubertExpansion:
        return SchubertExpansion(w.length, {w: 1})

    # -- Chevalley rule -------------------------------------------------------

    def _covers_with_pairing(self, lam: Weight):
        """Pairs (reflection, pairing) over positive roots with nonzero pairing."""
        out = []
        for beta in self.datum.positive_roots:
            p = _norm_coeff(sum(Fraction(c) * x for c, x in zip(beta.coroot_on_omega, lam)))
            if p:
                out.append((self.group.root_reflection(beta), p))
        return out

    def chevalley_weight(self, lam: Weight, x: SchubertExpansion) -> SchubertExpansion:
        """Multiply by the degree-2 class of a weight, extended linearly.

        For each basis class Z_w the product contributes (beta^vee | lam) Z_{w s_beta}
        over the positive roots beta with l(w s_beta) = l(w) + 1.
        """
        pairs = self._covers_with_pairing(lam)
        out: dict = {}
        for w, c in x.coeffs.items():
            for sref, p in pairs:
                v = self.group.compose(w, sref)
                if v.length == w.length + 1:
                    t = out.get(v, 0) + c * p
                    if t:
                        out[v] = t
                    elif v in out:
                        del out[v]
        for v in list(out):
            if not isinstance(out[v], int):
                c = _norm_coeff(out[v])
                if not isinstance(c, int):
                    raise NonIntegralExpansionError(
                        f"Chevalley coefficient {c} at Z_{v} is not an integer"
                    )
                out[v] = c
        return SchubertExpansion(x.codim + 1, out)

    def chevalley_product(self, alpha: int, w: WeylElement) -> SchubertExpansion:
        """Expansion of Z_{s_alpha} * Z_w by the closed degree-1 rule."""
        if not 1 <= alpha <= self.rank:
            raise OutOfRangeError(f"simple index {alpha} out of range")
        return self.chevalley_weight(
            self.datum.fundamental_weights[alpha - 1], self.indicator(w)
        )

    # -- Giambelli representatives ---------------------------------------------

    def _positive_root_product(self) -> Polynomial:
        if self._d_unscaled is None:
            p = Polynomial.one(self.rank)
            for r in self.datum.positive_roots:
                p = p * Polynomial.linear_form(r.omega)
            self._d_unscaled = p
        return self._d_unscaled

    def _giambelli_unscaled(self, w: WeylElement) -> Polynomial:
        """|W| times the Giambelli representative; integer coefficients.

        Filled by walking an ascent path up to the longest element and applying
        one divided difference per step on the way back down.
        """
        memo = self._gtable
        path = []
        cur = w
        while cur not in memo:
            if cur.length == self.group.longest_length:
                memo[cur] = self._positive_root_product()
                break
            for i in range(1, self.rank + 1):
                if not self.group.descends(cur, i):
                    break
            path.append((cur, i))
            cur = self.group.compose(cur, self.group.simple_reflection(i))
        for v, i in reversed(path):
            parent = self.group.compose(v, self.group.simple_reflection(i))
            memo[v] = self.divided_difference(i, memo[parent])
        return memo[w]

    def giambelli_poly(self, w: WeylElement) -> Polynomial:
        """A degree-l(w) polynomial whose Schubert expansion is exactly Z_w."""
        return self._giambelli_unscaled(w).scale(Fraction(1, self.weyl_order))

    # -- products in the Schubert basis ---------------------------------------

    def _scaled_expand(self, f: Polynomial, scale: Fraction, codim: int) -> SchubertExpansion:
        raw = self._expand_raw(f)
        coeffs = {}
        for w, c in raw.items():
            v = _norm_coeff(c * scale)
            if not isinstance(v, int):
                raise NonIntegralExpansionError(
                    f"coefficient of Z_{w} is the non-integer {v}"
                )
            if v:
                coeffs[w] = v
        return SchubertExpansion(codim, coeffs)

    def structure_constants(self, u: WeylElement, v: WeylElement) -> SchubertExpansion:
        """Expansion of Z_u * Z_v, via the product of Giambelli representatives."""
        k = u.length + v.length
        if k > self.group.longest_length:
            raise OutOfRangeError(
                "product degree exceeds the dimension of the flag manifold"
            )
        prod = self._giambelli_unscaled(u) * self._giambelli_unscaled(v)
        out = self._scaled_expand(prod, Fraction(1, self.weyl_order**2), k)
        for w, c in out.coeffs.items():
            if c < 0:
                raise AssertionError(
                    f"negative structure constant {c} at Z_{w}; positivity violated"
                )
        return out

    def rep_poly(self, x: SchubertExpansion) -> Polynomial:
        """A rational polynomial mapping to x under the characteristic map."""
        p = Polynomial.zero(self.rank)
        for w, c in x.coeffs.items():
            p = p + self._giambelli_unscaled(w).scale(c)
        return p.scale(Fraction(1, self.weyl_order))

    def mul_expansions(self, a: SchubertExpansion, b: SchubertExpansion) -> SchubertExpansion:
        """Bilinear extension of structure constants to two expansions."""
        pa = Polynomial.zero(self.rank)
        for w, c in a.coeffs.items():
            pa = pa + self._giambelli_unscaled(w).scale(c)
        pb = Polynomial.zero(self.rank)
        for w, c in b.coeffs.items():
            pb = pb + self._giambelli_unscaled(w).scale(c)
        return self._scaled_expand(
            pa * pb, Fraction(1, self.weyl_order**2), a.codim + b.codim
        )

    def pow_expansion(self, a: SchubertExpansion, p: int) -> SchubertExpansion:
        """p-th power of a class, one expansion of the p-th power representative."""
        if p == 0:
            return self.indicator(self.group.identity)
        pa = Polynomial.zero(self.rank)
        for w, c in a.coeffs.items():
            pa = pa + self._giambelli_unscaled(w).scale(c)
        return self._scaled_expand(
            pa**p, Fraction(1, self.weyl_order**p), a.codim * p
        )

    def expand_class_poly(self, f: Polynomial, scale: Rational = 1) -> SchubertExpansion:
        """Expansion of scale * f with the integrality check applied after scaling."""
        return self._scaled_expand(f, Fraction(scale), max(f.degree(), 0))


@lru_cache(maxsize=None)
def calculus_for(ct: CartanType) -> SchubertCalc:
    """Shared engine per Cartan type (caches are per engine)."""
    return SchubertCalc(ct)


def divided_difference(calc: SchubertCalc, i: int, f: Polynomial) -> Polynomial:
    return calc.divided_difference(i, f)


def delta_w(calc: SchubertCalc, w: WeylElement, f: Polynomial) -> Polynomial:
    return calc.delta_w(w, f)


def schubert_expand(calc: SchubertCalc, f: Polynomial) -> SchubertExpansion:
    return calc.schubert_expand(f)


def chevalley_product(calc: SchubertCalc, alpha: int, w: WeylElement) -> SchubertExpansion:
    return calc.chevalley_product(alpha, w)


def giambelli_poly(calc: SchubertCalc, w: WeylElement) -> Polynomial:
    return calc.giambelli_poly(w)


def structure_constants(calc: SchubertCalc, u: WeylElement, v: WeylElement) -> SchubertExpansion:
    return calc.structure_constants(u, v)
