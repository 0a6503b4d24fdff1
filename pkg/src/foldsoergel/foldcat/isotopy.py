"""isotopy.py - rotations, orange circles and orange slides as expression text

All builders return expression text for parse_expr; words are over X, Y, Z.
"""

from __future__ import annotations

import random
from typing import Iterator

from . import expr as ex

_COLOR = {"X": "o", "Y": "g", "Z": "b"}
_OVER = {"X": "x_oo", "Y": "x_og", "Z": "x_ob"}
_UNDER = {"X": "x_oo", "Y": "x_go", "Z": "x_bo"}


def ident(word: str) -> str:
    return f"id({word})"


def cup(word: str) -> str:
    """1 -> word reversed(word)."""
    if not word:
        return ident("")
    head, rest = word[0], word[1:]
    base = f"cup_{_COLOR[head]}"
    if not rest:
        return base
    return f"(({ident(head)} x {cup(rest)} x {ident(head)}) . {base})"


def cap(word: str) -> str:
    """word reversed(word) -> 1."""
    if not word:
        return ident("")
    head, rest = word[0], word[1:]
    base = f"cap_{_COLOR[head]}"
    if not rest:
        return base
    return f"({base} . ({ident(head)} x {cap(rest)} x {ident(head)}))"


def rotate(text: str) -> str:
    """Rotate a diagram A -> B by 180 degrees, giving rev(B) -> rev(A)."""
    s = ex.shape(ex.parse_expr(text))
    ra, rb = s.source[::-1], s.target[::-1]
    return (
        f"(({ident(ra)} x {cap(s.target)}) . ({ident(ra)} x ({text}) x {ident(rb)}) "
        f". ({cup(ra)} x {ident(rb)}))"
    )


def cross_over(word: str) -> str:
    """Orange strand from the left of `word` to its right: X word -> word X."""
    if not word:
        return ident("X")
    steps = [
        f"({ident(word[:k])} x {_OVER[c]} x {ident(word[k + 1:])})" for k, c in enumerate(word)
    ]
    return "(" + " . ".join(reversed(steps)) + ")"


def cross_under(word: str) -> str:
    """Orange strand from the right of `word` to its left: word X -> X word."""
    if not word:
        return ident("X")
    steps = [
        f"({ident(word[:k])} x {_UNDER[c]} x {ident(word[k + 1:])})"
        for k, c in reversed(list(enumerate(word)))
    ]
    return "(" + " . ".join(reversed(steps)) + ")"


def encircle(text: str) -> str:
    """Surround a diagram by a closed orange circle."""
    s = ex.shape(ex.parse_expr(text))
    return (
        f"((cap_o x {ident(s.target)}) . (id(X) x {cross_under(s.target)}) "
        f". (id(X) x ({text}) x id(X)) . (id(X) x {cross_over(s.source)}) "
        f". (cup_o x {ident(s.source)}))"
    )


def slide_sides(text: str) -> tuple[str, str]:
    """(orange strand passing left of the diagram, passing right of it)."""
    s = ex.shape(ex.parse_expr(text))
    left = f"({cross_over(s.target)} . (id(X) x ({text})))"
    right = f"((({text}) x id(X)) . {cross_over(s.source)})"
    return left, right


def slide_generators() -> list[str]:
    """Green and brown generators the orange strand is slid across."""
    return sorted(
        name
        for name, (src, tgt, _) in ex.GENERATORS.items()
        if "X" not in src + tgt
    )


def random_expressions(count: int, seed: int = 0, depth: int = 2) -> Iterator[str]:
    """Small well-shaped composites of green and brown generators, reproducible by seed."""
    rng = random.Random(seed)
    names = slide_generators()
    by_source: dict[str, list[str]] = {}
    for name in names:
        by_source.setdefault(ex.GENERATORS[name][0], []).append(name)
    produced = 0
    while produced < count:
        name = rng.choice(names)
        text = name
        target = ex.GENERATORS[name][1]
        for _ in range(rng.randint(0, depth)):
            nxt = by_source.get(target)
            if not nxt:
                break
            step = rng.choice(nxt)
            text = f"{step} . {text}"
            target = ex.GENERATORS[step][1]
        if rng.random() < 0.3:
            text = f"({text}) x id(Y)"
        produced += 1
        yield text
