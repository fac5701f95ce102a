"""Word tokenization for the token-based metrics.

Two schemes: "whitespace-only" splits on whitespace runs, and
"split-punctuation" additionally breaks every punctuation or symbol
character (Unicode categories P* and S*) out as a standalone token,
approximating the common WMT word tokenization.  Scores computed here
can therefore differ in the last digits from toolchains with other
tokenizers.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

SCHEMES = ("split-punctuation", "whitespace-only")


@dataclass(frozen=True)
class TokenizerConfig:
    scheme: str = "split-punctuation"
    lowercase: bool = False

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")

    def to_dict(self) -> dict:
        return {"scheme": self.scheme, "lowercase": self.lowercase}


def _is_separable(ch: str) -> bool:
    return unicodedata.category(ch)[0] in ("P", "S")


def tokenize(text: str, config: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Split a segment into tokens under the configured scheme."""
    if config.lowercase:
        text = text.lower()
    if config.scheme == "whitespace-only":
        return text.split()
    tokens: list[str] = []
    word: list[str] = []
    for ch in text:
        if ch.isspace():
            if word:
                tokens.append("".join(word))
                word = []
        elif _is_separable(ch):
            if word:
                tokens.append("".join(word))
                word = []
            tokens.append(ch)
        else:
            word.append(ch)
    if word:
        tokens.append("".join(word))
    return tokens
