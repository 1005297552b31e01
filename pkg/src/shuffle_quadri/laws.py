"""Exhaustive verification of the shuffle quadri-algebra identities.

Each :class:`Law` is one family of equations between two computable sides,
checked with exact equality over every word tuple of a finite universe
(:class:`InstanceSpec`).  Words are enumerated by total length, then by the
lengths of the slots, then lexicographically, so reports are deterministic.

Laws whose domain is a reduced tensor power ``H+ (x)bar H+ (x)bar H+`` admit
unit-extended tuples; an equation one of whose sides needs a product
``1 op 1`` is undefined there and is skipped for that tuple.
"""
from __future__ import annotations

import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product, repeat
from math import comb
from typing import Callable, Optional

from .core import DEFAULT_ALPHABET, Combination, TensorCombination, Word, tensor
from .errors import AlgebraError, SpecDomainError, UndefinedOnUnitPair
from .hopf import (deconcat, delta, delta_prime, delta_second, sh, shuffle,
                   shuffle_enumerated, splits)
from .quadri import (NE, NW, SE, SW, ne, nw, prec, quadri, quadri_oracle, se,
                     star, succ, sw, sweedler_sum, vee, wedge)


@dataclass(frozen=True)
class InstanceSpec:
    """A finite universe of word tuples.

    ``allow_unit_slots`` may only narrow a law's own domain; asking for the
    empty word in a slot the law restricts to H+ is a :class:`SpecDomainError`.
    """

    alphabet_size: int
    max_total_length: int
    arity: Optional[int] = None
    allow_unit_slots: Optional[tuple] = None

    def __post_init__(self):
        if not 1 <= self.alphabet_size <= len(DEFAULT_ALPHABET):
            raise SpecDomainError(
                f"alphabet_size must be in 1..{len(DEFAULT_ALPHABET)}, got {self.alphabet_size}")
        if self.max_total_length < 1:
            raise SpecDomainError(
                f"max_total_length must be positive, got {self.max_total_length}")
        if self.arity is not None and self.arity not in (1, 2, 3):
            raise SpecDomainError(f"arity must be 1, 2 or 3, got {self.arity}")
        if self.allow_unit_slots is not None:
            object.__setattr__(self, "allow_unit_slots", tuple(self.allow_unit_slots))
            if self.arity is not None and len(self.allow_unit_slots) != self.arity:
                raise SpecDomainError("allow_unit_slots length differs from arity")


@dataclass(frozen=True)
class Law:
    name: str
    anchor: str
    unit_slots: tuple
    equations: Callable
    reduced: bool = False   # the all-units tuple is excluded from the domain
    partial: bool = False   # equations undefined on some unit tuples are skipped
    negative: bool = False  # passes when some instance FAILS to satisfy the equation
    fixed: Optional[Callable] = None  # explicit instance list, ignores the InstanceSpec universe
    notes: Optional[Callable] = None

    @property
    def arity(self) -> int:
        return len(self.unit_slots)


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple
    equation: str
    lhs: object
    rhs: object

    def to_json(self, alphabet=DEFAULT_ALPHABET) -> dict:
        return {"inputs": [alphabet.format_word(w, unit="") for w in self.inputs],
                "equation": self.equation,
                "lhs": _side_json(self.lhs, alphabet),
                "rhs": _side_json(self.rhs, alphabet)}


@dataclass
class LawReport:
    law: str
    instances_checked: int
    passed: bool
    counterexample: Optional[Counterexample] = None
    elapsed: float = 0.0
    skipped: int = 0
    witness: Optional[Counterexample] = None
    notes: tuple = ()
    error: Optional[str] = None

    def to_json(self, alphabet=DEFAULT_ALPHABET) -> dict:
        return {
            "law": self.law,
            "instances": self.instances_checked,
            "passed": self.passed,
            "counterexample": (None if self.counterexample is None
                               else self.counterexample.to_json(alphabet)),
            "ms": round(self.elapsed * 1000, 3),
            "skipped": self.skipped,
            "witness": None if self.witness is None else self.witness.to_json(alphabet),
            "notes": list(self.notes),
            "error": self.error,
        }


def _side_json(x, alphabet):
    if isinstance(x, (Combination, TensorCombination)):
        return x.to_json(alphabet)
    return {"value": str(x)}


CATALOG: list = []
GROUPS: dict = {}


def _register(name, anchor, unit_slots, equations, group=None, **kwargs) -> Law:
    law = Law(name, anchor, tuple(unit_slots), equations, **kwargs)
    CATALOG.append(law)
    if group is not None:
        GROUPS.setdefault(group, []).append(name)
    return law


def law(name, anchor, unit_slots, group=None, **kwargs):
    def decorate(fn):
        _register(name, anchor, unit_slots, fn, group=group, **kwargs)
        return fn
    return decorate


def _eq(label, lhs, rhs):
    return (label, lhs, rhs)


def _split_sum(left, right, u, v, w):
    return lambda: sweedler_sum(left, right, u, v, w)


TRIPLE_REDUCED = dict(unit_slots=(True, True, True), reduced=True, partial=True)
PAIR_REDUCED = dict(unit_slots=(True, True), reduced=True)
U_IN_H = (True, False, False)


# -- dendriform structures --------------------------------------------------

@law("dendriform_h", "dendriform axioms for the horizontal structure (west ≺, east ≻)",
     **TRIPLE_REDUCED)
def _dendriform_h(x, y, z):
    return [
        _eq("(x≺y)≺z = x≺(y⋆z)", lambda: prec(prec(x, y), z), lambda: prec(x, star(y, z))),
        _eq("(x≻y)≺z = x≻(y≺z)", lambda: prec(succ(x, y), z), lambda: succ(x, prec(y, z))),
        _eq("(x⋆y)≻z = x≻(y≻z)", lambda: succ(star(x, y), z), lambda: succ(x, succ(y, z))),
    ]


@law("dendriform_v", "dendriform axioms for the vertical structure (north ∧, south ∨)",
     **TRIPLE_REDUCED)
def _dendriform_v(x, y, z):
    return [
        _eq("(x∧y)∧z = x∧(y⋆z)", lambda: wedge(wedge(x, y), z), lambda: wedge(x, star(y, z))),
        _eq("(x∨y)∧z = x∨(y∧z)", lambda: wedge(vee(x, y), z), lambda: vee(x, wedge(y, z))),
        _eq("(x⋆y)∨z = x∨(y∨z)", lambda: vee(star(x, y), z), lambda: vee(x, vee(y, z))),
    ]


# -- the nine quadri-algebra axioms, as a 3x3 matrix ------------------------

_AXIOMS = {
    "11": ("(x↖y)↖z = x↖(y⋆z)", lambda x, y, z: nw(nw(x, y), z), lambda x, y, z: nw(x, star(y, z))),
    "12": ("(x↗y)↖z = x↗(y≺z)", lambda x, y, z: nw(ne(x, y), z), lambda x, y, z: ne(x, prec(y, z))),
    "13": ("(x∧y)↗z = x↗(y≻z)", lambda x, y, z: ne(wedge(x, y), z), lambda x, y, z: ne(x, succ(y, z))),
    "21": ("(x↙y)↖z = x↙(y∧z)", lambda x, y, z: nw(sw(x, y), z), lambda x, y, z: sw(x, wedge(y, z))),
    "22": ("(x↘y)↖z = x↘(y↖z)", lambda x, y, z: nw(se(x, y), z), lambda x, y, z: se(x, nw(y, z))),
    "23": ("(x∨y)↗z = x↘(y↗z)", lambda x, y, z: ne(vee(x, y), z), lambda x, y, z: se(x, ne(y, z))),
    "31": ("(x≺y)↙z = x↙(y∨z)", lambda x, y, z: sw(prec(x, y), z), lambda x, y, z: sw(x, vee(y, z))),
    "32": ("(x≻y)↙z = x↘(y↙z)", lambda x, y, z: sw(succ(x, y), z), lambda x, y, z: se(x, sw(y, z))),
    "33": ("(x⋆y)↘z = x↘(y↘z)", lambda x, y, z: se(star(x, y), z), lambda x, y, z: se(x, se(y, z))),
}


def _axiom_equations(label, lhs, rhs):
    def equations(x, y, z):
        return [_eq(label, lambda: lhs(x, y, z), lambda: rhs(x, y, z))]
    return equations


for _pos, (_label, _lhs, _rhs) in _AXIOMS.items():
    _register(f"quadri_axiom_{_pos}",
              f"quadri-algebra axiom matrix, row {_pos[0]} column {_pos[1]}: {_label}",
              equations=_axiom_equations(_label, _lhs, _rhs),
              group="quadri_axiom_matrix", **TRIPLE_REDUCED)


@law("star_associative_equals_shuffle",
     "the four products sum to the shuffle, and the sum is associative", **TRIPLE_REDUCED)
def _star(x, y, z):
    return [
        _eq("(x⋆y)⋆z = x⋆(y⋆z)", lambda: star(star(x, y), z), lambda: star(x, star(y, z))),
        _eq("x⋆y = x⧢y", lambda: star(x, y), lambda: sh(x, y)),
        _eq("x≻y + x≺y = x⧢y", lambda: succ(x, y) + prec(x, y), lambda: sh(x, y)),
        _eq("x∨y + x∧y = x⧢y", lambda: vee(x, y) + wedge(x, y), lambda: sh(x, y)),
    ]


@law("quadri_commutativity", "commutativity of the shuffle quadri-algebra", **PAIR_REDUCED)
def _commutativity(u, v):
    return [
        _eq("u↗v = v↙u", lambda: ne(u, v), lambda: sw(v, u)),
        _eq("u↘v = v↖u", lambda: se(u, v), lambda: nw(v, u)),
    ]


def _oracle_equations(tag):
    def equations(u, v):
        return [_eq(f"recursive {tag.value} = constrained shuffle",
                    lambda: quadri(tag, u, v), lambda: quadri_oracle(tag, u, v))]
    return equations


for _tag in (NE, SE, SW, NW):
    _register(f"recursive_vs_oracle_{_tag.value}",
              f"non-recursive description of {_tag.symbol} by constrained shuffles",
              (False, False), _oracle_equations(_tag), group="recursive_vs_oracle")


# -- main theorem and corollaries: u in H, v, w in H+ ------------------------

_THM_MAIN = {
    1: ("↗", ne, (se, wedge), (succ, ne)),
    2: ("↘", se, (se, vee), (succ, se)),
    3: ("↙", sw, (sw, vee), (prec, se)),
    4: ("↖", nw, (sw, wedge), (prec, ne)),
}


def _sym(op):
    return {"ne": "↗", "se": "↘", "sw": "↙", "nw": "↖", "succ": "≻", "prec": "≺",
            "vee": "∨", "wedge": "∧", "sh": "⧢"}[op.__name__]


def _split_equations(lhs_op, rhs_pairs):
    def equations(u, v, w):
        vw = v + w
        return [_eq(f"u{_sym(lhs_op)}(vw) = Σ(u¹{_sym(l)}v)(u²{_sym(r)}w)",
                    lambda: lhs_op(u, vw), _split_sum(l, r, u, v, w))
                for l, r in rhs_pairs]
    return equations


for _i, (_s, _op, _first, _second) in _THM_MAIN.items():
    _register(f"thm_main_{_i}",
              f"main theorem, item {_i}: {_s} of a concatenation, two split-sum forms",
              U_IN_H, _split_equations(_op, [_first, _second]), group="thm_main")


def _cor_equations(lhs_op, parts, rhs):
    def equations(u, v, w):
        vw = v + w
        eqs = [_eq(f"u{_sym(lhs_op)}(vw) = " + " + ".join(f"u{_sym(p)}(vw)" for p in parts),
                   lambda: lhs_op(u, vw),
                   lambda: sum((p(u, vw) for p in parts[1:]), parts[0](u, vw)))]
        return eqs + _split_equations(lhs_op, [rhs])(u, v, w)
    return equations


_COR_ONE = {
    1: (wedge, (ne, nw), (vee, wedge)),
    2: (prec, (nw, sw), (prec, succ)),
    3: (vee, (sw, se), (vee, vee)),
    4: (succ, (se, ne), (succ, succ)),
}

for _i, (_op, _parts, _rhs) in _COR_ONE.items():
    _register(f"cor_one_{_i}",
              f"dendriform corollary, item {_i}: {_sym(_op)} of a concatenation as a split sum",
              U_IN_H, _cor_equations(_op, _parts, _rhs), group="cor_one")

_register("cor_shuffle_concat_1", "shuffle of a concatenation via ∨ and ⧢", U_IN_H,
          _split_equations(sh, [(vee, sh)]), group="cor_shuffle_concat")
_register("cor_shuffle_concat_2", "shuffle of a concatenation via ⧢ and ≻", U_IN_H,
          _split_equations(sh, [(sh, succ)]), group="cor_shuffle_concat")


# -- module structures -------------------------------------------------------

@law("action_vee", "∨ is a left action of (H, ⧢) on H+", group="left_right_actions",
     **TRIPLE_REDUCED)
def _action_vee(x, y, z):
    return [_eq("x∨(y∨z) = (x⧢y)∨z", lambda: vee(x, vee(y, z)), lambda: vee(sh(x, y), z))]


@law("action_wedge", "∧ is a right action of (H, ⧢) on H+", group="left_right_actions",
     **TRIPLE_REDUCED)
def _action_wedge(x, y, z):
    return [_eq("(x∧y)∧z = x∧(y⧢z)", lambda: wedge(wedge(x, y), z), lambda: wedge(x, sh(y, z)))]


@law("action_succ", "≻ is a left action of (H, ⧢) on H+", group="left_right_actions",
     **TRIPLE_REDUCED)
def _action_succ(x, y, z):
    return [_eq("x≻(y≻z) = (x⧢y)≻z", lambda: succ(x, succ(y, z)), lambda: succ(sh(x, y), z))]


@law("action_prec", "≺ is a right action of (H, ⧢) on H+", group="left_right_actions",
     **TRIPLE_REDUCED)
def _action_prec(x, y, z):
    return [_eq("(x≺y)≺z = x≺(y⧢z)", lambda: prec(prec(x, y), z), lambda: prec(x, sh(y, z)))]


_register("module_algebra_vee", "∨ makes H+ an (H, m)-module-algebra", U_IN_H,
          _split_equations(vee, [(vee, vee)]))
_register("module_algebra_succ", "≻ makes H+ an (H, m)-module-algebra", U_IN_H,
          _split_equations(succ, [(succ, succ)]))


@law("delta_prime_vee", "Δ′ of u∨v as a sum over pairs of splits", **PAIR_REDUCED)
def _delta_prime_vee(u, v):
    def rhs():
        total = TensorCombination.zero()
        for u1, u2 in splits(u):
            for v1, v2 in splits(v):
                if u2 or v2:
                    total = total + tensor(sh(u1, v1), vee(u2, v2))
        return total
    return [_eq("Δ′(u∨v) = Σ(u¹⧢v¹)⊗(u²∨v²), (u²,v²)≠(1,1)",
                lambda: delta_prime(vee(u, v)), rhs)]


@law("delta_second_prec", "Δ″ of u≺v as a sum over pairs of splits", **PAIR_REDUCED)
def _delta_second_prec(u, v):
    def rhs():
        total = TensorCombination.zero()
        for u1, u2 in splits(u):
            for v1, v2 in splits(v):
                if u1 or v1:
                    total = total + tensor(prec(u1, v1), sh(u2, v2))
        return total
    return [_eq("Δ″(u≺v) = Σ(u¹≺v¹)⊗(u²⧢v²), (u¹,v¹)≠(1,1)",
                lambda: delta_second(prec(u, v)), rhs)]


# -- Hopf-side structure -----------------------------------------------------

@law("infinitesimal_bialgebra", "infinitesimal compatibility of m and Δ on H+", (False, False))
def _infinitesimal(u, v):
    one = ()
    return [_eq("Δ(uv) = Δ(u)(1⊗v) − u⊗v + (u⊗1)Δ(v)",
                lambda: delta(u + v),
                lambda: (delta(u) * TensorCombination.pure(one, v)
                         - TensorCombination.pure(u, v)
                         + TensorCombination.pure(u, one) * delta(v)))]


@law("hopf_compat_shuffle", "Δ is multiplicative for the shuffle product", (True, True))
def _hopf_compat(u, v):
    def rhs():
        total = TensorCombination.zero()
        for u1, u2 in splits(u):
            for v1, v2 in splits(v):
                total = total + tensor(shuffle(u1, v1), shuffle(u2, v2))
        return total
    return [_eq("Δ(u⧢v) = Σ(u¹⧢v¹)⊗(u²⧢v²)", lambda: delta(sh(u, v)), rhs)]


@law("coassociativity", "coassociativity of the deconcatenation", (True,))
def _coassociativity(u):
    def cuts():
        n = len(u)
        return TensorCombination._raw({(u[:i], u[i:j], u[j:]): 1
                                       for i in range(n + 1) for j in range(i, n + 1)})
    return [
        _eq("(Δ⊗id)Δ = (id⊗Δ)Δ", lambda: deconcat(u).expand(0, deconcat),
            lambda: deconcat(u).expand(1, deconcat)),
        _eq("(Δ⊗id)Δ = all three-part cuts", lambda: deconcat(u).expand(0, deconcat), cuts),
    ]


@law("shuffle_recursive_vs_enumeration",
     "left-recursive shuffle against interleaving enumeration", (True, True))
def _shuffle_oracle(u, v):
    return [
        _eq("recursive u⧢v = enumerated u⧢v", lambda: shuffle(u, v),
            lambda: shuffle_enumerated(u, v)),
        _eq("coefficient sum of u⧢v = C(|u|+|v|, |u|)", lambda: shuffle(u, v).coefficient_sum(),
            lambda: comb(len(u) + len(v), len(u))),
    ]


@law("shuffle_module_algebra_negative",
     "H is NOT a module-algebra over (H, ⧢) under the shuffle: a witness must exist",
     (True, True, True), negative=True)
def _negative(u, v, w):
    return [_eq("Σ(u¹⧢v)(u²⧢w) = u⧢(vw)", _split_sum(sh, sh, u, v, w),
                lambda: sh(u, v + w))]


# -- the worked example ------------------------------------------------------

_EXAMPLE_LETTERS = {"u1": 0, "u2": 1, "v1": 2, "v2": 3, "w": 4}
_EXAMPLE_INSTANCE = ((0, 1), (2, 3), (4,))

# Term lists of the worked example as printed, transcribed verbatim.
PRINTED_EXAMPLE = {
    "u⧢(vw)": [
        "u1u2v1v2w", "u1v1u2v2w", "u1v1v2u2w", "u1u2v1v2w", "u1v1v2wu2",
        "v1v2u1u2w", "v1u1v2u2w", "v1u1v2wu2", "v1v2u1wu2", "v1v2wu1u2"],
    "Σ(u¹∨v)(u²⧢w)": [
        "v1v2u1u2w", "v1v2u1wu2", "v1v2wu1u2", "u1v1v2u2w", "v1u1v2u2w",
        "u1v1v2wu2", "v1u1v2wu2", "u1u2v1v2w", "u1v1u2v2w", "v1u1u2v2w"],
    "Σ(u¹⧢v)(u²≻w)": [
        "v1v2wu1u2", "u1v1v2wu2", "v1u1v2wu2", "v1v2u1wu2", "u1u2v1v2w",
        "u1v1u2v2w", "v1u1u2v2w", "u1v1v2u2w", "v1u1v2u2w", "v1v2u2u2w"],
}


def _example_word(text: str) -> Word:
    return tuple(_EXAMPLE_LETTERS[t] for t in re.findall(r"u1|u2|v1|v2|w", text))


def _example_name(word: Word) -> str:
    names = {i: n for n, i in _EXAMPLE_LETTERS.items()}
    return "".join(names[i] for i in word)


def printed_example(label: str) -> Combination:
    return Combination((_example_word(t), 1) for t in PRINTED_EXAMPLE[label])


def example_sides(u=_EXAMPLE_INSTANCE[0], v=_EXAMPLE_INSTANCE[1], w=_EXAMPLE_INSTANCE[2]):
    """The three expressions of the worked example, in display order."""
    return {
        "u⧢(vw)": sh(u, v + w),
        "Σ(u¹∨v)(u²⧢w)": sweedler_sum(vee, sh, u, v, w),
        "Σ(u¹⧢v)(u²≻w)": sweedler_sum(sh, succ, u, v, w),
    }


def example_discrepancies() -> list:
    """Differences between the printed term lists and the enumerated values."""
    oracle = shuffle_enumerated(_EXAMPLE_INSTANCE[0], _EXAMPLE_INSTANCE[1] + _EXAMPLE_INSTANCE[2])
    notes = []
    for label in PRINTED_EXAMPLE:
        diff = printed_example(label) - oracle
        if not diff:
            continue
        extra = [f"{c}*{_example_name(t)}" for t, c in diff.items() if c > 0]
        missing = [f"{-c}*{_example_name(t)}" for t, c in diff.items() if c < 0]
        notes.append(f"printed expansion of {label} differs from enumeration: "
                     f"extra {', '.join(extra) or 'none'}; missing {', '.join(missing) or 'none'}")
    return notes


@law("paper_example", "worked example for |u| = 2, |v| = 2, |w| = 1 with distinct letters",
     (False, False, False), fixed=lambda: [_EXAMPLE_INSTANCE], notes=example_discrepancies)
def _example(u, v, w):
    sides = lambda: example_sides(u, v, w)  # noqa: E731
    return [
        _eq("u⧢(vw) = enumerated shuffle", lambda: sides()["u⧢(vw)"],
            lambda: shuffle_enumerated(u, v + w)),
        _eq("u⧢(vw) = Σ(u¹∨v)(u²⧢w)", lambda: sides()["u⧢(vw)"],
            lambda: sides()["Σ(u¹∨v)(u²⧢w)"]),
        _eq("u⧢(vw) = Σ(u¹⧢v)(u²≻w)", lambda: sides()["u⧢(vw)"],
            lambda: sides()["Σ(u¹⧢v)(u²≻w)"]),
        _eq("coefficient sum = C(5, 2)", lambda: sides()["u⧢(vw)"].coefficient_sum(),
            lambda: comb(5, 2)),
    ]


LAWS = {law.name: law for law in CATALOG}


# -- enumeration and checking ------------------------------------------------

def _compositions(total, parts):
    for lengths in product(range(total + 1), repeat=parts):
        if sum(lengths) == total:
            yield lengths


def instances(law: Law, spec: InstanceSpec):
    """Word tuples of the law's domain inside ``spec``, in deterministic order."""
    if law.fixed is not None:
        yield from law.fixed()
        return
    slots = _unit_slots(law, spec)
    k = spec.alphabet_size
    for total in range(spec.max_total_length + 1):
        if law.reduced and total == 0:
            continue
        for lengths in _compositions(total, law.arity):
            if any(n == 0 and not ok for n, ok in zip(lengths, slots)):
                continue
            yield from product(*(product(range(k), repeat=n) for n in lengths))


def _unit_slots(law: Law, spec: InstanceSpec) -> tuple:
    if spec.arity is not None and spec.arity != law.arity:
        raise SpecDomainError(f"{law.name} has arity {law.arity}, spec asks for {spec.arity}")
    if spec.allow_unit_slots is None:
        return law.unit_slots
    if len(spec.allow_unit_slots) != law.arity:
        raise SpecDomainError(f"{law.name} has arity {law.arity}, "
                              f"allow_unit_slots has {len(spec.allow_unit_slots)} entries")
    for i, (want, ok) in enumerate(zip(spec.allow_unit_slots, law.unit_slots)):
        if want and not ok:
            raise SpecDomainError(f"slot {i} of {law.name} must lie in H+")
    return tuple(spec.allow_unit_slots)


def _resolve(name) -> Law:
    if isinstance(name, Law):
        return name
    try:
        return LAWS[name]
    except KeyError:
        raise SpecDomainError(f"unknown law {name!r}") from None


def expand_names(names) -> list:
    """Law names with group names (e.g. ``thm_main``) replaced by their members."""
    out = []
    for name in names:
        members = GROUPS.get(name, [name])
        for m in members:
            _resolve(m)
            if m not in out:
                out.append(m)
    return out


def evaluate_equation(law, inputs, equation: Optional[str] = None):
    """Recompute ``(lhs, rhs)`` of one equation of a law at the given inputs."""
    law = _resolve(law)
    for label, lhs, rhs in law.equations(*inputs):
        if equation is None or label == equation:
            return lhs(), rhs()
    raise KeyError(f"{law.name} has no equation {equation!r}")


def check_law(law, spec: InstanceSpec) -> LawReport:
    """Check every equation of ``law`` on every instance of ``spec``.

    A group name (``quadri_axiom_matrix``, ``thm_main``, ...) checks all its
    members and merges the reports.
    """
    if isinstance(law, str) and law in GROUPS:
        return _merge(law, [check_law(m, spec) for m in GROUPS[law]])
    law = _resolve(law)
    start = time.perf_counter()
    checked = skipped = 0
    for inputs in instances(law, spec):
        evaluated = False
        for label, lhs_fn, rhs_fn in law.equations(*inputs):
            try:
                lhs, rhs = lhs_fn(), rhs_fn()
            except UndefinedOnUnitPair:
                if law.partial:
                    continue
                raise
            evaluated = True
            if lhs == rhs:
                continue
            found = Counterexample(tuple(inputs), label, lhs, rhs)
            elapsed = time.perf_counter() - start
            if law.negative:
                return LawReport(law.name, checked + 1, True, None, elapsed, skipped,
                                 witness=found)
            return LawReport(law.name, checked + 1, False, found, elapsed, skipped,
                             notes=_notes(law))
        if evaluated:
            checked += 1
        else:
            skipped += 1
    elapsed = time.perf_counter() - start
    if law.negative:
        return LawReport(law.name, checked, False, None, elapsed, skipped,
                         notes=("no witness found: the universe is too small",))
    return LawReport(law.name, checked, True, None, elapsed, skipped, notes=_notes(law))


def _notes(law: Law) -> tuple:
    return tuple(law.notes()) if law.notes is not None else ()


def _merge(name, reports) -> LawReport:
    failed = next((r for r in reports if not r.passed), None)
    return LawReport(
        name,
        sum(r.instances_checked for r in reports),
        failed is None,
        None if failed is None else failed.counterexample,
        sum(r.elapsed for r in reports),
        sum(r.skipped for r in reports),
        notes=tuple(f"{r.law}: {n}" for r in reports for n in r.notes) +
        (() if failed is None else (f"first failing member: {failed.law}",)),
        error=None if failed is None else failed.error,
    )


def _check_quietly(name, spec) -> LawReport:
    try:
        return check_law(name, spec)
    except AlgebraError as exc:
        return LawReport(name, 0, False, error=f"{type(exc).__name__}: {exc}")


def run_suite(spec: InstanceSpec, laws=None, jobs: int = 1) -> list:
    """Run the selected laws (all by default) and return reports in catalog order.

    With ``spec.arity`` set and no explicit selection, only laws of that arity
    run.  ``jobs > 1`` fans laws out over worker processes.
    """
    if laws is None:
        names = [l.name for l in CATALOG
                 if spec.arity is None or l.arity == spec.arity]
    else:
        names = expand_names(laws)
    order = {l.name: i for i, l in enumerate(CATALOG)}
    names.sort(key=order.__getitem__)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_quietly, names, repeat(spec)))
    return [_check_quietly(n, spec) for n in names]
