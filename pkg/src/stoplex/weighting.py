"""TF-IDF weights and their normalization into probabilities.

idf = ln(n/m) with n the document count and m the number of documents
containing the word. A word's weight is its average per-document tf*idf;
by default the average runs over all n documents, with absent documents
contributing zero. Probabilities are weights normalized to sum to one.

All reductions go through math.fsum in first_index order, which keeps the
probability normalization error within 1e-12 and makes results
independent of any evaluation schedule.
"""

from __future__ import annotations

import math
from dataclasses import replace
from enum import Enum

from .corpus import Lexicon, WordEntry
from .errors import AllZeroWeights, DomainError


class AveragingMode(str, Enum):
    """Denominator of the average tf*idf."""

    ALL_DOCS = "all"  # divide by n; documents without the word count as zero
    CONTAINING_DOCS = "containing"  # divide by m; only documents with the word


def inverse_document_frequency(n_docs: int, doc_frequency: int) -> float:
    """ln(n/m); exactly 0.0 for a word present in every document."""
    if n_docs < 1:
        raise DomainError(f"document count must be >= 1, got {n_docs}")
    if doc_frequency < 1 or doc_frequency > n_docs:
        raise DomainError(
            f"doc_frequency must be in 1..{n_docs}, got {doc_frequency}"
        )
    if doc_frequency == n_docs:
        return 0.0
    return math.log(n_docs / doc_frequency)


def word_weight(
    entry: WordEntry,
    n_docs: int,
    mode: AveragingMode | str = AveragingMode.ALL_DOCS,
) -> float:
    """Average tf*idf of one word across the corpus."""
    mode = AveragingMode(mode)
    if len(entry.per_doc_counts) != n_docs:
        raise DomainError(
            f"entry {entry.surface!r} has {len(entry.per_doc_counts)} counts, expected {n_docs}"
        )
    if entry.total_count < 1:
        raise DomainError(f"entry {entry.surface!r} has no occurrences")
    idf = inverse_document_frequency(n_docs, entry.doc_frequency)
    total = math.fsum(count * idf for count in entry.per_doc_counts)
    denominator = n_docs if mode is AveragingMode.ALL_DOCS else entry.doc_frequency
    return total / denominator


def apply_weights(
    lexicon: Lexicon, mode: AveragingMode | str = AveragingMode.ALL_DOCS
) -> Lexicon:
    """Return a new lexicon with idf and weight filled on every entry."""
    mode = AveragingMode(mode)
    if lexicon.size == 0:
        return lexicon
    n_docs = len(lexicon.entries[0].per_doc_counts)
    weighted = []
    for entry in lexicon.entries:
        idf = inverse_document_frequency(n_docs, entry.doc_frequency)
        weighted.append(
            replace(entry, idf=idf, weight=word_weight(entry, n_docs, mode))
        )
    return Lexicon(tuple(weighted))


def probabilities(lexicon: Lexicon) -> Lexicon:
    """Normalize weights into probabilities; order and indices unchanged.

    Raises AllZeroWeights when the weight sum is zero, which happens
    exactly when every word occurs in every document: such a corpus
    carries no tf-idf signal and cannot be analyzed by this method.
    """
    weights = [entry.weight for entry in lexicon.entries]
    if any(w is None for w in weights):
        raise DomainError("weights are unset; call apply_weights first")
    total = math.fsum(weights)
    if total <= 0.0:
        raise AllZeroWeights(
            "all weights are zero (every word occurs in every document)"
        )
    return Lexicon(
        tuple(replace(e, probability=e.weight / total) for e in lexicon.entries)
    )
