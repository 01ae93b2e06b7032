"""Corpus loading, tokenization, and first-appearance lexicon construction.

A token is a maximal run of Unicode letters. A single apostrophe is kept
when it sits between two letters (the Uzbek oʻ/gʻ digraphs); every kept
apostrophe is rewritten to U+02BB so the variants found in real texts
(U+0027, U+2019, U+02BC, U+0060) collapse to one code point and do not
create spurious unique words. Text is NFC-normalized before scanning and
tokens are lowercased afterwards. Digits, punctuation and symbols are
separators, never tokens.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DecodeError, DomainError, EmptyCorpus

#: Canonical word-internal apostrophe (MODIFIER LETTER TURNED COMMA).
CANONICAL_APOSTROPHE = "ʻ"

# U+02BB and U+02BC are Unicode letters (category Lm), so they must be
# claimed by this class before the letter test sees them; otherwise a
# doubled apostrophe could hide inside a letter run.
_APOSTROPHES = frozenset("'’ʼ`ʻ")


def _is_letter(ch: str) -> bool:
    return ch not in _APOSTROPHES and unicodedata.category(ch).startswith("L")


def tokenize(text: str) -> list[str]:
    """Split raw text into normalized word tokens, order preserved.

    Rules:
    - The input is NFC-normalized first.
    - Tokens are maximal runs of Unicode letters; anything else separates.
    - A single apostrophe flanked by letters stays inside the token and is
      rewritten to U+02BB; leading, trailing or doubled apostrophes never
      attach.
    - Tokens are lowercased (and re-normalized, since lowercasing can
      denormalize in rare cases).

    Any input yields a (possibly empty) token list.
    """
    text = unicodedata.normalize("NFC", text)
    tokens: list[str] = []
    run: list[str] = []
    last_was_letter = False
    length = len(text)
    for pos, ch in enumerate(text):
        if _is_letter(ch):
            run.append(ch)
            last_was_letter = True
            continue
        if (
            ch in _APOSTROPHES
            and last_was_letter
            and pos + 1 < length
            and _is_letter(text[pos + 1])
        ):
            run.append(CANONICAL_APOSTROPHE)
            last_was_letter = False
            continue
        if run:
            tokens.append(_finish_token(run))
            run.clear()
        last_was_letter = False
    if run:
        tokens.append(_finish_token(run))
    return tokens


def _finish_token(run: list[str]) -> str:
    return unicodedata.normalize("NFC", "".join(run).lower())


@dataclass(frozen=True)
class Document:
    """One tokenized source text."""

    doc_index: int  # 1-based position within the corpus
    name: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Corpus:
    """An ordered collection of documents."""

    documents: tuple[Document, ...]

    @property
    def doc_count(self) -> int:
        return len(self.documents)

    @property
    def token_total(self) -> int:
        return sum(len(d.tokens) for d in self.documents)


@dataclass(frozen=True)
class WordEntry:
    """One unique word with its corpus statistics.

    ``idf``, ``weight`` and ``probability`` are None until filled in by the
    weighting step.
    """

    surface: str
    first_index: int  # 1-based rank by first appearance
    per_doc_counts: tuple[int, ...]
    doc_frequency: int
    idf: float | None = None
    weight: float | None = None
    probability: float | None = None

    @property
    def total_count(self) -> int:
        return sum(self.per_doc_counts)


@dataclass(frozen=True)
class Lexicon:
    """Unique words ordered by first appearance; entry k has first_index k+1."""

    entries: tuple[WordEntry, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def entry(self, surface: str) -> WordEntry:
        return self._by_surface[surface]

    @cached_property
    def _by_surface(self) -> dict[str, WordEntry]:
        return {e.surface: e for e in self.entries}


def load_corpus(sources: Iterable[tuple[str, str | bytes]]) -> Corpus:
    """Build a corpus from ordered (name, text) pairs.

    Bytes decode as UTF-8; a bad source raises DecodeError naming it.
    Zero sources raise EmptyCorpus.
    """
    documents: list[Document] = []
    for position, (name, blob) in enumerate(sources, start=1):
        if isinstance(blob, bytes):
            try:
                blob = blob.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise DecodeError(name, str(exc)) from exc
        documents.append(Document(position, name, tuple(tokenize(blob))))
    if not documents:
        raise EmptyCorpus("a corpus needs at least one document")
    return Corpus(tuple(documents))


def collect_input_files(inputs: Sequence[str | Path], order: str = "list") -> list[Path]:
    """Expand a mix of files and directories into an ordered file list.

    A directory contributes its regular files (dotfiles excluded) in
    lexicographic name order. With order="list" the given argument order is
    kept; order="lexicographic" re-sorts the whole collection by file name.
    """
    if order not in ("list", "lexicographic"):
        raise DomainError(f"unknown document order {order!r}")
    files: list[Path] = []
    for item in inputs:
        path = Path(item)
        if path.is_dir():
            children = [c for c in path.iterdir() if c.is_file() and not c.name.startswith(".")]
            files.extend(sorted(children, key=lambda c: c.name))
        else:
            files.append(path)
    if order == "lexicographic":
        files.sort(key=lambda c: c.name)
    return files


def load_corpus_from_paths(paths: Sequence[str | Path]) -> Corpus:
    """Read files as UTF-8 documents; the document name is the file stem."""
    sources = []
    for item in paths:
        path = Path(item)
        sources.append((path.stem, path.read_bytes()))
    return load_corpus(sources)


def build_lexicon(corpus: Corpus) -> Lexicon:
    """One entry per distinct token, indexed by order of first appearance.

    Documents are scanned in doc_index order and tokens in sequence order,
    so indices never depend on scheduling. idf, weight and probability stay
    unset; the weighting step fills them.
    """
    n = corpus.doc_count
    slots: dict[str, int] = {}
    counts: list[list[int]] = []
    for doc_pos, doc in enumerate(corpus.documents):
        for token in doc.tokens:
            slot = slots.get(token)
            if slot is None:
                slot = len(slots)
                slots[token] = slot
                counts.append([0] * n)
            counts[slot][doc_pos] += 1
    entries = []
    for surface, slot in slots.items():
        per_doc = tuple(counts[slot])
        doc_frequency = sum(1 for c in per_doc if c)
        entries.append(WordEntry(surface, slot + 1, per_doc, doc_frequency))
    return Lexicon(tuple(entries))
