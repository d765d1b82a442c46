"""Parsing of generator words like "f0 f1^(2) f0".

Tokens are applied rightmost first.  Divided-power suffixes ^(r) with r >= 1
are allowed on e/f generators only.
"""

from __future__ import annotations

import re

from .fock import GENERATORS, SCALAR_TOKENS, Word

_SUFFIX = re.compile(r"^(?P<base>[A-Za-z0-9]+)\^\((?P<r>-?\d+)\)$")


def parse_word(text: str) -> Word:
    """Parse a whitespace-separated generator word; raises ValueError with
    the 1-based position of the offending token."""
    out: list[tuple[str, int]] = []
    for pos, token in enumerate(text.split(), start=1):
        m = _SUFFIX.match(token)
        if m:
            base, r = m.group("base"), int(m.group("r"))
            if base not in GENERATORS:
                if base in SCALAR_TOKENS:
                    raise ValueError(
                        f"token {pos}: divided-power suffix is not allowed on {base!r}"
                    )
                raise ValueError(f"token {pos}: unknown generator {base!r}")
            if r < 1:
                raise ValueError(f"token {pos}: divided power must be >= 1, got {r}")
            out.append((base, r))
        elif token in GENERATORS:
            out.append((token, 1))
        elif token in SCALAR_TOKENS:
            out.append((token, 1))
        else:
            raise ValueError(f"token {pos}: unknown generator {token!r}")
    return tuple(out)


def word_text(word: Word) -> str:
    parts = []
    for token, r in word:
        parts.append(token if r == 1 else f"{token}^({r})")
    return " ".join(parts)
