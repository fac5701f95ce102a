"""Translation edit rate.

Edits are insertions, deletions, substitutions and phrase shifts, each
at unit cost; the rate is total edits divided by reference token count
(fraction scale, so 0.51 rather than 51).  The shift search is greedy:
every round tries all moves of spans up to MAX_SHIFT_SPAN tokens and
applies the one that lowers the remaining edit distance the most,
stopping when no move pays for itself or after MAX_SHIFTS rounds.  The
hot loop lives in the _kernels package (compiled when available).
"""

from __future__ import annotations

from dataclasses import dataclass

from .._kernels import shifted_edit_search
from .errors import EmptyReference
from .tokenizer import TokenizerConfig, tokenize

MAX_SHIFT_SPAN = 10
MAX_SHIFTS = 50


@dataclass(frozen=True)
class TerStats:
    """Sufficient statistics for one pair: pooling them over a corpus
    and dividing gives the corpus rate."""

    edits: int
    shifts: int
    ref_len: int

    @property
    def rate(self) -> float:
        return self.edits / self.ref_len


def _to_ids(hyp_tokens: list[str], ref_tokens: list[str]) -> tuple[list[int], list[int]]:
    ids: dict[str, int] = {}
    out = []
    for tokens in (hyp_tokens, ref_tokens):
        out.append([ids.setdefault(t, len(ids)) for t in tokens])
    return out[0], out[1]


def ter_statistics(
    hypothesis: str,
    reference: str,
    tokenizer: TokenizerConfig = TokenizerConfig(),
) -> TerStats:
    """Edit and shift counts for one hypothesis/reference pair."""
    hyp_tokens = tokenize(hypothesis, tokenizer)
    ref_tokens = tokenize(reference, tokenizer)
    if not ref_tokens:
        raise EmptyReference("reference has no tokens")
    hyp_ids, ref_ids = _to_ids(hyp_tokens, ref_tokens)
    edits, shifts = shifted_edit_search(
        hyp_ids, ref_ids, max_span=MAX_SHIFT_SPAN, max_shifts=MAX_SHIFTS
    )
    return TerStats(edits=edits, shifts=shifts, ref_len=len(ref_tokens))


def ter(
    hypothesis: str,
    reference: str,
    tokenizer: TokenizerConfig = TokenizerConfig(),
) -> float:
    """Translation edit rate for one pair; 0 means identical."""
    return ter_statistics(hypothesis, reference, tokenizer).rate
