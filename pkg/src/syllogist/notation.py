"""Parsing and rendering of syllogism notation.

Two surface forms are supported:

* compact: ``MOOD-FIGURE`` with an optional ``+S``/``+M``/``+P`` existence
  assumption, for example ``EIO-2`` or ``EAO-4 +M``;
* block: three English propositions separated by ``;`` or newlines, with
  an optional trailing ``assuming some X`` clause, for example
  ``All M is P; All S is M; All S is P``.

Propositions use exactly the four templates ``All X is Y``, ``No X is Y``,
``Some X is Y`` and ``Some X is not Y``.  Keywords are case insensitive;
term tokens are identifiers (letter first, then letters, digits or
underscores) and keep their case.  Reserved words cannot be terms, which
keeps ``is not`` unambiguous.  Corpus files hold one syllogism per block,
blocks separated by blank lines, with ``#`` comments ignored.

Every parse error carries a byte-offset span into the input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .chains import PropKind, Proposition
from .inference import (
    Assumption,
    Figure,
    Mood,
    Syllogism,
    conclusion_of,
    premisses_of,
)


@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets of the offending slice of input."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 0 <= self.start <= self.end:
            raise ValueError(f"bad span {self.start}..{self.end}")


class NotationError(ValueError):
    """Input does not parse; ``span`` locates the problem when known."""

    def __init__(self, message: str, span: SourceSpan | None = None):
        super().__init__(message)
        self.span = span


class BadMoodLetter(NotationError):
    """A mood letter outside A, E, I, O."""


class BadFigure(NotationError):
    """A figure outside 1..4."""


class NotASyllogism(NotationError):
    """Three propositions that do not form a syllogism."""


class AmbiguousTerms(NotationError):
    """Term roles cannot be told apart."""


_KEYWORDS = frozenset({"all", "no", "some", "is", "not", "assuming"})
_TERM_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_COMPACT_RE = re.compile(
    r"\s*([A-Za-z]{3})\s*-\s*([0-9]+)(?:\s*\+\s*([A-Za-z]+))?\s*$"
)
_ASSUMING_RE = re.compile(r"\s*assuming\s+some\s+(\S+)\s*$", re.IGNORECASE)


def looks_compact(text: str) -> bool:
    """Cheap shape test used to route input to the right parser."""
    return _COMPACT_RE.match(text) is not None


def parse_compact(text: str, offset: int = 0) -> Syllogism:
    """Parse ``MOOD-FIGURE`` notation, e.g. ``AAI-3 +M``."""
    m = _COMPACT_RE.match(text)
    if m is None:
        raise NotationError(
            "expected MOOD-FIGURE notation such as 'EIO-2' or 'AAI-3 +M'",
            SourceSpan(offset, offset + len(text)),
        )
    letters = m.group(1)
    kinds = []
    for k, letter in enumerate(letters):
        try:
            kinds.append(PropKind(letter.upper()))
        except ValueError:
            raise BadMoodLetter(
                f"mood letters are A, E, I or O, got {letter!r}",
                SourceSpan(offset + m.start(1) + k, offset + m.start(1) + k + 1),
            ) from None
    digits = m.group(2)
    if len(digits) != 1 or not 1 <= int(digits) <= 4:
        raise BadFigure(
            f"figures are 1 to 4, got {digits!r}",
            SourceSpan(offset + m.start(2), offset + m.end(2)),
        )
    assumption = Assumption.NONE
    if m.group(3) is not None:
        try:
            assumption = Assumption(m.group(3).upper())
        except ValueError:
            raise NotationError(
                f"the assumption names one of the terms S, M or P, got {m.group(3)!r}",
                SourceSpan(offset + m.start(3), offset + m.end(3)),
            ) from None
    return Syllogism(Mood(*kinds), Figure(int(digits)), assumption)


def render_compact(s: Syllogism) -> str:
    return str(s)


def _words(text: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start()) for m in re.finditer(r"\S+", text)]


def _term_token(word: str, start: int, offset: int) -> str:
    if not _TERM_RE.match(word):
        raise NotationError(
            f"term tokens start with a letter and use letters, digits or '_', got {word!r}",
            SourceSpan(offset + start, offset + start + len(word)),
        )
    if word.lower() in _KEYWORDS:
        raise NotationError(
            f"{word!r} is a reserved word, not a term",
            SourceSpan(offset + start, offset + start + len(word)),
        )
    return word


def parse_proposition(text: str, offset: int = 0) -> Proposition:
    """Parse one of the four proposition templates."""
    words = _words(text)

    def fail() -> NotationError:
        span = SourceSpan(offset, offset + len(text))
        if words:
            span = SourceSpan(offset + words[0][1], offset + len(text.rstrip()))
        return NotationError(
            "expected 'All X is Y', 'No X is Y', 'Some X is Y' or 'Some X is not Y'",
            span,
        )

    if len(words) not in (4, 5):
        raise fail()
    head = words[0][0].lower()
    if words[2][0].lower() != "is":
        raise fail()
    if len(words) == 4:
        kind = {"all": PropKind.A, "no": PropKind.E, "some": PropKind.I}.get(head)
        predicate_word = words[3]
    else:
        kind = PropKind.O if head == "some" and words[3][0].lower() == "not" else None
        predicate_word = words[4]
    if kind is None:
        raise fail()
    subject = _term_token(words[1][0], words[1][1], offset)
    predicate = _term_token(predicate_word[0], predicate_word[1], offset)
    return Proposition(kind, subject, predicate)


_TEMPLATES = {
    PropKind.A: "All {0} is {1}",
    PropKind.E: "No {0} is {1}",
    PropKind.I: "Some {0} is {1}",
    PropKind.O: "Some {0} is not {1}",
}


def render_proposition(p: Proposition) -> str:
    return _TEMPLATES[p.kind].format(p.subject, p.predicate)


def _segments(text: str) -> list[tuple[str, int]]:
    """Split on ';' and newlines, dropping '#' comments, keeping offsets."""
    segments = []
    start = 0
    i = 0
    n = len(text)
    while i <= n:
        ch = text[i] if i < n else ";"
        if ch == "#":
            if text[start:i].strip():
                segments.append((text[start:i], start))
            while i < n and text[i] != "\n":
                i += 1
            start = i + 1
        elif ch in ";\n":
            if text[start:i].strip():
                segments.append((text[start:i], start))
            start = i + 1
        i += 1
    return segments


def parse_syllogism_block(text: str, offset: int = 0) -> Syllogism:
    """Parse three propositions (plus optional assumption) into a syllogism.

    The figure is inferred from term positions: the middle term is the one
    shared by the premisses, the conclusion fixes subject and predicate,
    and the first premiss must carry the conclusion's predicate, the
    second its subject.
    """
    segments = _segments(text)
    whole = SourceSpan(offset, offset + len(text))

    assumed_name = None
    assumed_span = None
    if segments:
        m = _ASSUMING_RE.match(segments[-1][0])
        if m is not None:
            seg_text, seg_start = segments.pop()
            assumed_name = m.group(1)
            assumed_span = SourceSpan(
                offset + seg_start + m.start(1), offset + seg_start + m.end(1)
            )

    if len(segments) != 3:
        raise NotASyllogism(
            f"a syllogism block holds exactly three propositions, found {len(segments)}",
            whole,
        )
    (t1, o1), (t2, o2), (t3, o3) = segments
    first = parse_proposition(t1, offset + o1)
    second = parse_proposition(t2, offset + o2)
    conclusion = parse_proposition(t3, offset + o3)

    subject, predicate = conclusion.subject, conclusion.predicate
    if subject == predicate:
        raise AmbiguousTerms(
            "the conclusion's subject and predicate coincide, so the term roles collapse",
            SourceSpan(offset + o3, offset + o3 + len(t3)),
        )
    terms = {subject, predicate} | {
        first.subject, first.predicate, second.subject, second.predicate
    }
    if len(terms) != 3:
        raise NotASyllogism(
            f"a syllogism involves exactly three terms, found {len(terms)}",
            whole,
        )
    (middle,) = terms - {subject, predicate}
    if {first.subject, first.predicate} != {middle, predicate}:
        raise NotASyllogism(
            "the first premiss must relate the middle term and the conclusion's predicate",
            SourceSpan(offset + o1, offset + o1 + len(t1)),
        )
    if {second.subject, second.predicate} != {middle, subject}:
        raise NotASyllogism(
            "the second premiss must relate the middle term and the conclusion's subject",
            SourceSpan(offset + o2, offset + o2 + len(t2)),
        )

    first_mp = first.subject == middle
    second_sm = second.subject == subject
    if first_mp and second_sm:
        figure = Figure.ONE
    elif second_sm:
        figure = Figure.TWO
    elif first_mp:
        figure = Figure.THREE
    else:
        figure = Figure.FOUR

    assumption = Assumption.NONE
    if assumed_name is not None:
        by_name = {subject: Assumption.SOME_S, middle: Assumption.SOME_M, predicate: Assumption.SOME_P}
        if assumed_name not in by_name:
            raise NotASyllogism(
                f"the assumption must name one of the three terms, got {assumed_name!r}",
                assumed_span,
            )
        assumption = by_name[assumed_name]

    return Syllogism(Mood(first.kind, second.kind, conclusion.kind), figure, assumption)


def render_block(s: Syllogism) -> str:
    """The canonical block form over the terms S, M and P."""
    first, second = premisses_of(s)
    parts = [render_proposition(q) for q in (first, second, conclusion_of(s))]
    text = "; ".join(parts)
    if s.assumption is not Assumption.NONE:
        text += f"; assuming some {s.assumption.term}"
    return text


def parse_any(text: str, offset: int = 0) -> Syllogism:
    """Parse either notation, routed on the input's shape."""
    if looks_compact(text):
        return parse_compact(text, offset)
    return parse_syllogism_block(text, offset)


def parse_corpus(text: str) -> list[tuple[Syllogism, SourceSpan]]:
    """Parse a corpus file: one syllogism per blank-line-separated block."""
    results = []
    block_start = None
    pos = 0
    blocks = []
    for line in text.splitlines(keepends=True):
        if line.strip():
            if block_start is None:
                block_start = pos
        else:
            if block_start is not None:
                blocks.append((block_start, pos))
                block_start = None
        pos += len(line)
    if block_start is not None:
        blocks.append((block_start, len(text)))

    for start, end in blocks:
        block = text[start:end]
        clean = re.sub(r"#[^\n]*", "", block)
        if not clean.strip():
            continue  # comment-only block
        if looks_compact(clean.strip()):
            s = parse_compact(clean, start)
        else:
            s = parse_syllogism_block(block, start)
        results.append((s, SourceSpan(start, end)))
    return results
