"""Arabic text preprocessing: normalization, tokenization, stop-word
removal, light and root stemming, and sentence splitting.

The normalizer is idempotent and all packaged word lists are stored in
normalized form, so every later stage can assume normalized input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Sequence

from .errors import ConfigError, EmptyDocument

# Arabic letter block used for tokenization (hamza through yeh). Digits,
# Latin letters and punctuation act as separators.
ARABIC_LETTERS = "ء-ي"

# Tashkeel marks, the dagger alef and tatweel are stripped outright.
_DIACRITICS_RE = re.compile(r"[ً-ٰٟـ]")
_ALEF_VARIANTS_RE = re.compile(r"[آأإ]")  # آ أ إ
_FINAL_ALEF_MAQSURA_RE = re.compile(rf"ى(?![{ARABIC_LETTERS}])")  # word-final ى
_TOKEN_RE = re.compile(rf"[{ARABIC_LETTERS}]+")

DEFAULT_MIN_SENTENCE_TOKENS = 4
STOPWORDS_RESOURCE = "data/stopwords_ar.txt"
MARKERS_RESOURCE = "data/markers_ar.txt"


@dataclass(frozen=True)
class RawDocument:
    """One corpus document: identifier, gold category label and text."""

    doc_id: str
    category: str
    text: str


@dataclass(frozen=True)
class Token:
    """Surface form plus the stem the active stemmer mapped it to."""

    surface: str
    stem: str


@dataclass(frozen=True)
class Sentence:
    """Contiguous token run produced by the sentence splitter.

    As produced by split_sentences the token tuple is never empty; after
    stop-word filtering (prepare_sentences) it may be.
    """

    index: int
    tokens: tuple[Token, ...]


@dataclass(frozen=True)
class MarkerSet:
    """Sentence boundary configuration for split_sentences."""

    punctuation: frozenset[str]
    functional_words: frozenset[str]
    min_sentence_tokens: int = DEFAULT_MIN_SENTENCE_TOKENS


def normalize(text: str) -> str:
    """Return text with diacritics and tatweel removed, alef variants
    collapsed to bare alef, word-final ى mapped to ي and ة mapped to ه.

    All other characters pass through unchanged. Idempotent.
    """
    text = _DIACRITICS_RE.sub("", text)
    text = _ALEF_VARIANTS_RE.sub("ا", text)
    text = _FINAL_ALEF_MAQSURA_RE.sub("ي", text)
    return text.replace("ة", "ه")


def tokenize(text: str) -> list[Token]:
    """Split normalized text into tokens: maximal runs of Arabic letters.

    Each token starts out with its stem equal to its surface form.
    """
    return [Token(s, s) for s in _TOKEN_RE.findall(text)]


def remove_stopwords(tokens: Sequence[Token], stoplist: frozenset[str]) -> list[Token]:
    """Drop tokens whose surface form appears in the stop list."""
    return [t for t in tokens if t.surface not in stoplist]


# Larkey-style light stemming tables. One prefix at most, suffixes stripped
# repeatedly while at least three letters remain.
LIGHT_PREFIXES = ("وال",  # وال
                  "بال",  # بال
                  "كال",  # كال
                  "فال",  # فال
                  "ال",        # ال
                  "لل",        # لل
                  "و")              # و
LIGHT_SUFFIXES = ("ها",  # ها
                  "ان",  # ان
                  "ات",  # ات
                  "ون",  # ون
                  "ين",  # ين
                  "يه",  # يه
                  "ية",  # ية
                  "ه",        # ه
                  "ة",        # ة
                  "ي")        # ي

# Root stemming extends the light tables with conjugation affixes.
ROOT_PREFIXES = ("است",  # است
                 "وال",  # وال
                 "بال",  # بال
                 "كال",  # كال
                 "فال",  # فال
                 "لل",        # لل
                 "ال",        # ال
                 "سي",        # سي
                 "لي",        # لي
                 "و",              # و
                 "ي",              # ي
                 "ت",              # ت
                 "ن")              # ن
ROOT_SUFFIXES = ("ها",  # ها
                 "ان",  # ان
                 "ات",  # ات
                 "ون",  # ون
                 "ين",  # ين
                 "يه",  # يه
                 "ية",  # ية
                 "هم",  # هم
                 "كم",  # كم
                 "هن",  # هن
                 "تم",  # تم
                 "نا",  # نا
                 "وا",  # وا
                 "ه",        # ه
                 "ة",        # ة
                 "ي")        # ي

# Tri-literal patterns for root extraction. ف ع ل mark root letter slots,
# every other character must match literally. Grouped by length; within a
# length the first match wins.
TRILITERAL_PATTERNS = (
    "فاعل",              # فاعل
    "فعال",              # فعال
    "فعيل",              # فعيل
    "فعول",              # فعول
    "مفعل",              # مفعل
    "افعل",              # افعل
    "مفعول",        # مفعول
    "مفاعل",        # مفاعل
    "مفعال",        # مفعال
    "افتعل",        # افتعل
    "انفعل",        # انفعل
    "تفعيل",        # تفعيل
    "مفعله",        # مفعله
    "فواعل",        # فواعل
    "فعائل",        # فعائل
    "مستفعل",  # مستفعل
    "متفاعل",  # متفاعل
    "انفعال",  # انفعال
    "افتعال",  # افتعال
)
_ROOT_SLOTS = frozenset("فعل")


def light_stem(word: str) -> str:
    """Light stemming: strip at most one prefix, then suffixes repeatedly.

    A strip only happens while at least two letters would remain, so the
    result is never shorter than two letters (short inputs pass through).
    """
    stem = word
    for prefix in LIGHT_PREFIXES:
        if stem.startswith(prefix) and len(stem) - len(prefix) >= 2:
            stem = stem[len(prefix):]
            break
    while len(stem) >= 3:
        for suffix in LIGHT_SUFFIXES:
            if stem.endswith(suffix) and len(stem) - len(suffix) >= 2:
                stem = stem[: -len(suffix)]
                break
        else:
            break
    return stem


def _match_triliteral(residue: str) -> str | None:
    for pattern in TRILITERAL_PATTERNS:
        if len(pattern) != len(residue):
            continue
        root = []
        for p_ch, w_ch in zip(pattern, residue):
            if p_ch in _ROOT_SLOTS:
                root.append(w_ch)
            elif p_ch != w_ch:
                break
        else:
            if len(root) == 3:
                return "".join(root)
    return None


def root_stem(word: str) -> str:
    """Reduce a word to a tri-literal root where the pattern table allows.

    Affixes are stripped repeatedly while at least three letters remain,
    then the residue is matched against TRILITERAL_PATTERNS. A three letter
    residue is its own root; an unmatched longer residue comes back as-is.
    """
    stem = word
    changed = True
    while changed:
        changed = False
        for prefix in ROOT_PREFIXES:
            if stem.startswith(prefix) and len(stem) - len(prefix) >= 3:
                stem = stem[len(prefix):]
                changed = True
                break
    changed = True
    while changed:
        changed = False
        for suffix in ROOT_SUFFIXES:
            if stem.endswith(suffix) and len(stem) - len(suffix) >= 3:
                stem = stem[: -len(suffix)]
                changed = True
                break
    if len(stem) == 3:
        return stem
    root = _match_triliteral(stem)
    return root if root is not None else stem


class StemmerMode(Enum):
    """Stemming depth applied to tokens after stop-word removal."""

    NONE = "none"
    LIGHT = "light"
    ROOT = "root"

    def stem(self, word: str) -> str:
        if self is StemmerMode.LIGHT:
            return light_stem(word)
        if self is StemmerMode.ROOT:
            return root_stem(word)
        return word

    @classmethod
    def parse(cls, name: str) -> "StemmerMode":
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ConfigError(f"unknown stemmer {name!r}, expected one of: {valid}") from None


def stem_tokens(tokens: Sequence[Token], mode: StemmerMode) -> list[Token]:
    """Return tokens with stems computed from their surface forms."""
    return [Token(t.surface, mode.stem(t.surface)) for t in tokens]


def split_sentences(document: RawDocument, markers: MarkerSet) -> list[Sentence]:
    """Split a normalized document into sentences.

    Boundaries fall at marker punctuation and before standalone functional
    words (the word stays at the head of the next sentence). Candidate
    segments shorter than min_sentence_tokens are folded into their
    predecessor; a short document start is folded into its successor. Token
    order and multiplicity are preserved exactly.
    """
    punct_class = "".join(re.escape(ch) for ch in sorted(markers.punctuation))
    if punct_class:
        scanner = re.compile(rf"[{ARABIC_LETTERS}]+|[{punct_class}]")
    else:
        scanner = _TOKEN_RE

    candidates: list[list[str]] = []
    current: list[str] = []
    for match in scanner.finditer(document.text):
        piece = match.group()
        if piece in markers.punctuation:
            if current:
                candidates.append(current)
                current = []
        elif piece in markers.functional_words and current:
            candidates.append(current)
            current = [piece]
        else:
            current.append(piece)
    if current:
        candidates.append(current)

    if not candidates:
        raise EmptyDocument(f"document {document.doc_id!r} has no tokens")

    merged: list[list[str]] = []
    pending: list[str] = []
    for candidate in candidates:
        segment = pending + candidate
        pending = []
        if len(segment) < markers.min_sentence_tokens:
            if merged:
                merged[-1].extend(segment)
            else:
                pending = segment
        else:
            merged.append(segment)
    if pending:
        if merged:
            merged[-1].extend(pending)
        else:
            merged.append(pending)

    return [Sentence(i, tuple(Token(s, s) for s in seg)) for i, seg in enumerate(merged)]


def prepare_sentences(sentences: Sequence[Sentence], stoplist: frozenset[str],
                      mode: StemmerMode) -> list[Sentence]:
    """Stop-filter and stem each sentence, keeping indices and order.

    A sentence made entirely of stop words comes back with an empty token
    tuple; it then contributes a zero column to the term-sentence matrix.
    """
    out = []
    for sentence in sentences:
        kept = remove_stopwords(sentence.tokens, stoplist)
        out.append(Sentence(sentence.index, tuple(stem_tokens(kept, mode))))
    return out


def extract_terms(text: str, stoplist: frozenset[str], mode: StemmerMode) -> list[str]:
    """Full-document pipeline: tokenize, stop-filter, stem; returns stems."""
    kept = remove_stopwords(tokenize(text), stoplist)
    return [t.stem for t in stem_tokens(kept, mode)]


def load_wordlist(path: str | Path) -> list[str]:
    """Read a UTF-8 word list, one entry per line, '#' lines ignored."""
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries


def _packaged(resource: str) -> Path:
    return Path(str(resources.files(__package__) / resource))


def load_stoplist(path: str | Path | None = None) -> frozenset[str]:
    """Load a stop list; entries are normalized on load."""
    source = Path(path) if path is not None else _packaged(STOPWORDS_RESOURCE)
    return frozenset(normalize(e) for e in load_wordlist(source))


def load_markers(path: str | Path | None = None,
                 min_sentence_tokens: int = DEFAULT_MIN_SENTENCE_TOKENS) -> MarkerSet:
    """Load a marker set: Arabic-letter entries are functional words, single
    other characters are sentence punctuation."""
    if min_sentence_tokens < 1:
        raise ConfigError("min_sentence_tokens must be at least 1")
    source = Path(path) if path is not None else _packaged(MARKERS_RESOURCE)
    punctuation: set[str] = set()
    functional: set[str] = set()
    for entry in load_wordlist(source):
        if _TOKEN_RE.fullmatch(entry):
            functional.add(normalize(entry))
        elif len(entry) == 1:
            punctuation.add(entry)
        else:
            raise ConfigError(f"marker entry {entry!r} is neither an Arabic word "
                              "nor a single punctuation character")
    return MarkerSet(frozenset(punctuation), frozenset(functional), min_sentence_tokens)


@lru_cache(maxsize=None)
def default_stoplist() -> frozenset[str]:
    return load_stoplist()


@lru_cache(maxsize=None)
def default_markers() -> MarkerSet:
    return load_markers()
