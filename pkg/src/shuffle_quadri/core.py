"""Words over a finite alphabet and exact integer linear combinations of them.

A letter is a non-negative ``int`` and a word is a ``tuple`` of letters; the
empty tuple is the unit ``1`` of concatenation.  Letters only acquire
printable names through an :class:`Alphabet`.

:class:`Combination` is an element of the tensor algebra ``H = T(V)``,
:class:`TensorCombination` an element of ``H (x) H`` (or a higher tensor
power).  Both are immutable and kept in normal form: no stored coefficient is
ever zero, so equality is plain dictionary equality.
"""
from __future__ import annotations

import string
from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import UnitNotInHPlus, UnknownLetter

Letter = int
Word = tuple  # tuple[Letter, ...]
EMPTY: Word = ()


class Alphabet:
    """Printable names for the letters ``0 .. size-1``.

    Every symbol is a single alphabetic character, which keeps word literals
    unambiguous next to the integer ``1`` that denotes the empty word.
    """

    def __init__(self, symbols: str):
        if not symbols:
            raise ValueError("an alphabet needs at least one letter")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in alphabet {symbols!r}")
        bad = [s for s in symbols if not s.isalpha()]
        if bad:
            raise ValueError(f"alphabet symbols must be letters, got {bad!r}")
        self.symbols = symbols
        self._index = {s: i for i, s in enumerate(symbols)}

    @classmethod
    def default(cls, size: int = 26) -> Alphabet:
        if not 1 <= size <= 26:
            raise ValueError(f"default alphabets have 1..26 letters, got {size}")
        return cls(string.ascii_lowercase[:size])

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({self.symbols!r})"

    def word(self, text: str) -> Word:
        out = []
        for pos, ch in enumerate(text):
            try:
                out.append(self._index[ch])
            except KeyError:
                raise UnknownLetter(ch, pos) from None
        return tuple(out)

    def format_word(self, word: Word, unit: str = "1") -> str:
        if not word:
            return unit
        try:
            return "".join(self.symbols[i] for i in word)
        except IndexError:
            raise UnknownLetter(max(word)) from None

    def contains(self, word: Word) -> bool:
        return all(0 <= i < len(self.symbols) for i in word)


DEFAULT_ALPHABET = Alphabet.default()


def word_of_string(text: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> Word:
    """``"ab"`` -> ``(0, 1)``; the empty string gives the empty word."""
    return alphabet.word(text)


def _check_coefficient(c):
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"coefficients must be integers, got {c!r}")


def _word_order(word: Word):
    return (len(word), word)


class _Linear:
    """Shared machinery for finite formal sums with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                _check_coefficient(c)
                key = self._check_key(key)
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, acc: dict):
        # acc may hold zeros but its keys are already valid
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in acc.items() if c}
        obj._hash = None
        return obj

    @staticmethod
    def _check_key(key):
        raise NotImplementedError

    @staticmethod
    def _order(key):
        raise NotImplementedError

    def items(self) -> list:
        """Terms as ``(key, coefficient)`` pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda kc: self._order(kc[0]))

    def support(self) -> list:
        return [k for k, _ in self.items()]

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + sign * c
        return self._raw(acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def scale(self, c: int):
        _check_coefficient(c)
        if not c:
            return self._raw({})
        return self._raw({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, int) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented


class Combination(_Linear):
    """A finite sum of words with integer coefficients, i.e. an element of T(V).

    ``x * y`` is the concatenation product, ``n * x`` scales by an integer.
    """

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        word = tuple(key)
        for letter in word:
            if isinstance(letter, bool) or not isinstance(letter, int) or letter < 0:
                raise TypeError(f"letters are non-negative integers, got {letter!r}")
        return word

    _order = staticmethod(_word_order)

    @classmethod
    def word(cls, word: Word, coefficient: int = 1) -> Combination:
        return cls({tuple(word): coefficient})

    @classmethod
    def zero(cls) -> Combination:
        return cls._raw({})

    @classmethod
    def one(cls) -> Combination:
        return cls._raw({EMPTY: 1})

    def __mul__(self, other):
        if isinstance(other, Combination):
            acc: dict = {}
            for u, a in self._terms.items():
                for v, b in other._terms.items():
                    w = u + v
                    acc[w] = acc.get(w, 0) + a * b
            return Combination._raw(acc)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def wrapped(self, left: Word = EMPTY, right: Word = EMPTY) -> Combination:
        """``left . self . right`` for fixed words ``left`` and ``right``."""
        return Combination._raw({left + w + right: c for w, c in self._terms.items()})

    def degrees(self) -> set:
        return {len(w) for w in self._terms}

    def has_unit(self) -> bool:
        return EMPTY in self._terms

    def format(self, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
        return _format_terms(self.items(), lambda w: alphabet.format_word(w))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Combination({self.format()!r})"

    def to_json(self, alphabet: Alphabet = DEFAULT_ALPHABET) -> dict:
        return {"terms": [{"coef": str(c), "word": alphabet.format_word(w, unit="")}
                          for w, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict, alphabet: Alphabet = DEFAULT_ALPHABET) -> Combination:
        return cls((alphabet.word(t["word"]), int(t["coef"])) for t in data["terms"])


class TensorCombination(_Linear):
    """A finite sum of pure tensors ``w1 (x) ... (x) wn`` with integer coefficients.

    Keys are tuples of words of one common arity (2 unless built otherwise).
    ``reduced=True`` marks an element of the modified tensor product
    ``H+ (x)bar H+``, in which the all-units term ``1 (x) 1`` cannot occur.
    """

    __slots__ = ("reduced",)

    def __init__(self, terms=None, reduced: bool = False):
        super().__init__(terms)
        self.reduced = reduced
        self._validate()

    @classmethod
    def _raw(cls, acc, reduced=False):
        obj = super()._raw(acc)
        obj.reduced = reduced
        return obj

    def _validate(self):
        arities = {len(k) for k in self._terms}
        if len(arities) > 1:
            raise ValueError(f"mixed tensor arities {sorted(arities)}")
        if self.reduced and any(not any(k) for k in self._terms):
            raise UnitNotInHPlus("an element of the reduced tensor product")

    @staticmethod
    def _check_key(key):
        return tuple(Combination._check_key(w) for w in key)

    @staticmethod
    def _order(key):
        return tuple(_word_order(w) for w in key)

    @classmethod
    def pure(cls, *words: Word, coefficient: int = 1) -> TensorCombination:
        return cls({tuple(tuple(w) for w in words): coefficient})

    @classmethod
    def zero(cls) -> TensorCombination:
        return cls._raw({})

    @property
    def arity(self):
        for k in self._terms:
            return len(k)
        return None

    def _combine(self, other, sign):
        out = super()._combine(other, sign)
        if out is not NotImplemented:
            out.reduced = self.reduced and other.reduced
            out._validate()
        return out

    def __neg__(self):
        out = super().__neg__()
        out.reduced = self.reduced
        return out

    def scale(self, c):
        out = super().scale(c)
        out.reduced = self.reduced
        return out

    def __mul__(self, other):
        """Componentwise concatenation ``(a (x) b)(c (x) d) = ac (x) bd``."""
        if isinstance(other, TensorCombination):
            acc: dict = {}
            for k1, a in self._terms.items():
                for k2, b in other._terms.items():
                    if len(k1) != len(k2):
                        raise ValueError("componentwise product needs equal arities")
                    k = tuple(x + y for x, y in zip(k1, k2))
                    acc[k] = acc.get(k, 0) + a * b
            return TensorCombination._raw(acc)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def expand(self, slot: int, f: Callable) -> TensorCombination:
        """Apply ``f`` to tensor factor ``slot`` and splice the result in place.

        ``f`` maps a word to a Combination (arity unchanged) or to a
        TensorCombination (arity grows), e.g. ``(Delta (x) id)`` is
        ``t.expand(0, deconcat)``.
        """
        acc: dict = {}
        for key, c in self._terms.items():
            image = f(key[slot])
            for sub, d in image._terms.items():
                inner = sub if isinstance(image, TensorCombination) else (sub,)
                k = key[:slot] + inner + key[slot + 1:]
                acc[k] = acc.get(k, 0) + c * d
        return TensorCombination._raw(acc)

    def format(self, alphabet: Alphabet = DEFAULT_ALPHABET, sep: str = "|") -> str:
        return _format_terms(
            self.items(), lambda k: sep.join(alphabet.format_word(w) for w in k))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"TensorCombination({self.format()!r})"

    def to_json(self, alphabet: Alphabet = DEFAULT_ALPHABET) -> dict:
        terms = []
        for k, c in self.items():
            if len(k) == 2:
                terms.append({"coef": str(c),
                              "left": alphabet.format_word(k[0], unit=""),
                              "right": alphabet.format_word(k[1], unit="")})
            else:
                terms.append({"coef": str(c),
                              "factors": [alphabet.format_word(w, unit="") for w in k]})
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: dict, alphabet: Alphabet = DEFAULT_ALPHABET,
                  reduced: bool = False) -> TensorCombination:
        def key(t):
            names = t["factors"] if "factors" in t else [t["left"], t["right"]]
            return tuple(alphabet.word(n) for n in names)
        return cls(((key(t), int(t["coef"])) for t in data["terms"]), reduced=reduced)


def _format_terms(items, show) -> str:
    if not items:
        return "0"
    parts = []
    for i, (key, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = show(key) if mag == 1 else f"{mag}*{show(key)}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def as_combination(x) -> Combination:
    """Coerce a word (tuple) or Combination to a Combination."""
    if isinstance(x, Combination):
        return x
    if isinstance(x, tuple):
        return Combination.word(x)
    raise TypeError(f"expected a word or a Combination, got {type(x).__name__}")


def linear_extend(f: Callable, x: Combination):
    """Extend a map on words linearly: ``sum coeff(w) * f(w)``."""
    acc: dict = {}
    cls = None
    for w, a in x._terms.items():
        image = f(w)
        cls = type(image)
        for k, c in image._terms.items():
            acc[k] = acc.get(k, 0) + a * c
    return (cls or Combination)._raw(acc)


def bilinear_extend(op_on_words: Callable, x: Combination, y: Combination):
    """``sum coeff_x(u) * coeff_y(v) * op_on_words(u, v)`` in normal form.

    Errors raised by ``op_on_words`` (e.g. on the unit pair) propagate.  The
    result type follows the values of ``op_on_words``; an empty sum is the
    zero Combination.
    """
    acc: dict = {}
    cls = None
    for u, a in x._terms.items():
        for v, b in y._terms.items():
            image = op_on_words(u, v)
            cls = type(image)
            ab = a * b
            for k, c in image._terms.items():
                acc[k] = acc.get(k, 0) + ab * c
    return (cls or Combination)._raw(acc)


def tensor(*xs: Combination) -> TensorCombination:
    """Tensor product ``x1 (x) x2 (x) ...`` of word combinations."""
    acc: dict = {(): 1}
    for x in xs:
        nxt: dict = {}
        for k, a in acc.items():
            for w, b in as_combination(x)._terms.items():
                nxt[k + (w,)] = a * b
        acc = nxt
    return TensorCombination._raw(acc)
