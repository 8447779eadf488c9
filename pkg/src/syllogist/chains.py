"""Oriented chain diagrams for categorical propositions.

Each of the four categorical proposition kinds is encoded as a short chain
of nodes joined by left- or right-pointing arrows.  Nodes are either term
identifiers or anonymous bullet markers:

    A (All S is P)       S -> P
    E (No S is P)        S -> * <- P
    I (Some S is P)      S <- * -> P
    O (Some S is not P)  S <- * -> * <- P

Chains compose end to end at a shared boundary term, mirror into their
duals (reversed node order, every arrow flipped), and admit splicing of an
existence diagram ``t <- * -> t`` over any occurrence of the term ``t``.

All values are immutable; every operation returns a new chain, so values
can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

TermId = str


class ChainError(ValueError):
    """Malformed chain or illegal chain operation."""


class JunctionMismatch(ChainError):
    """Concatenation endpoints do not name the same term."""


class NoSuchOccurrence(ChainError):
    """The requested occurrence of a term is absent from the chain."""


class _Bullet:
    """The anonymous marker node.  Never equal to any term identifier."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Bullet)

    def __hash__(self) -> int:
        return hash(_Bullet)

    def __repr__(self) -> str:
        return "*"


BULLET = _Bullet()

Node = TermId | _Bullet


def is_bullet(node: object) -> bool:
    return isinstance(node, _Bullet)


def is_term(node: object) -> bool:
    return isinstance(node, str)


def _check_term(name: object) -> None:
    if not isinstance(name, str) or not name:
        raise ChainError(f"term identifiers are non-empty strings, got {name!r}")
    if any(c.isspace() for c in name) or name in ("*", "->", "<-"):
        # must survive the whitespace-separated text rendering
        raise ChainError(f"term identifier {name!r} clashes with chain notation")


class Arrow(Enum):
    """Orientation of one chain edge; the value is its text rendering."""

    RIGHT = "->"
    LEFT = "<-"

    @property
    def flipped(self) -> "Arrow":
        return Arrow.LEFT if self is Arrow.RIGHT else Arrow.RIGHT


class PropKind(Enum):
    """The four kinds of categorical proposition."""

    A = "A"  # universal affirmative: All X is Y
    E = "E"  # universal negative:    No X is Y
    I = "I"  # particular affirmative: Some X is Y
    O = "O"  # particular negative:   Some X is not Y

    @property
    def universal(self) -> bool:
        return self in (PropKind.A, PropKind.E)

    @property
    def particular(self) -> bool:
        return not self.universal

    @property
    def affirmative(self) -> bool:
        return self in (PropKind.A, PropKind.I)

    @property
    def negative(self) -> bool:
        return not self.affirmative


@dataclass(frozen=True)
class Proposition:
    """A categorical proposition: kind plus subject and predicate terms.

    Subject and predicate may coincide; the degenerate forms over a single
    term (All A is A, Some A is A, ...) are first-class citizens of the
    calculus.
    """

    kind: PropKind
    subject: TermId
    predicate: TermId

    def __post_init__(self) -> None:
        _check_term(self.subject)
        _check_term(self.predicate)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.subject},{self.predicate})"


@dataclass(frozen=True)
class Chain:
    """A sequence of nodes joined by oriented arrows.

    ``arrows[i]`` joins ``nodes[i]`` and ``nodes[i + 1]``; RIGHT points at
    the right neighbour, LEFT at the left one.
    """

    nodes: tuple[Node, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if not self.nodes:
            raise ChainError("a chain has at least one node")
        if len(self.arrows) != len(self.nodes) - 1:
            raise ChainError(
                f"{len(self.nodes)} nodes need {len(self.nodes) - 1} arrows, "
                f"got {len(self.arrows)}"
            )
        for node in self.nodes:
            if not is_bullet(node):
                _check_term(node)
        for arrow in self.arrows:
            if not isinstance(arrow, Arrow):
                raise ChainError(f"not an arrow: {arrow!r}")

    def __len__(self) -> int:
        return len(self.nodes)

    def __str__(self) -> str:
        parts = ["*" if is_bullet(self.nodes[0]) else self.nodes[0]]
        for arrow, node in zip(self.arrows, self.nodes[1:]):
            parts.append(arrow.value)
            parts.append("*" if is_bullet(node) else node)
        return " ".join(parts)

    @property
    def left(self) -> Node:
        return self.nodes[0]

    @property
    def right(self) -> Node:
        return self.nodes[-1]

    @property
    def bullet_count(self) -> int:
        return sum(1 for node in self.nodes if is_bullet(node))

    def occurrences(self, term: TermId) -> list[int]:
        """Node indices at which ``term`` occurs, leftmost first."""
        return [i for i, node in enumerate(self.nodes) if node == term]

    def dual(self) -> "Chain":
        """The mirror image: reversed node order with every arrow flipped."""
        return Chain(
            tuple(reversed(self.nodes)),
            tuple(a.flipped for a in reversed(self.arrows)),
        )


def diagram(p: Proposition) -> Chain:
    """The canonical chain of a proposition, subject leftmost."""
    left, right = p.subject, p.predicate
    r, l = Arrow.RIGHT, Arrow.LEFT
    if p.kind is PropKind.A:
        return Chain((left, right), (r,))
    if p.kind is PropKind.E:
        return Chain((left, BULLET, right), (r, l))
    if p.kind is PropKind.I:
        return Chain((left, BULLET, right), (l, r))
    return Chain((left, BULLET, BULLET, right), (l, r, l))


def concat(left: Chain, right: Chain) -> Chain:
    """Join two chains geometrically, left to right, at a shared term.

    The rightmost node of ``left`` and the leftmost node of ``right`` must
    be the same term; it appears once in the result.  Bullet counts add.
    """
    if is_bullet(left.right) or is_bullet(right.left):
        raise JunctionMismatch("chains join on a shared term, not on a bullet")
    if left.right != right.left:
        raise JunctionMismatch(
            f"cannot join {left.right!r} on the left to {right.left!r} on the right"
        )
    return Chain(left.nodes + right.nodes[1:], left.arrows + right.arrows)


def join_premisses(first: Chain, second: Chain) -> Chain:
    """Concatenate two premiss chains with the first premiss on the right.

    Premiss order in a syllogism is read off the junction from right to
    left, so this is ``concat(second, first)``.
    """
    return concat(second, first)


def splice_existence(chain: Chain, term: TermId, occurrence: int = 0) -> Chain:
    """Replace one occurrence of ``term`` by the segment ``term <- * -> term``.

    The arrows formerly incident to that node reattach to the outer copies;
    the bullet count grows by exactly one.
    """
    spots = chain.occurrences(term)
    if occurrence < 0 or occurrence >= len(spots):
        raise NoSuchOccurrence(
            f"occurrence {occurrence} of term {term!r} not found in {chain}"
        )
    i = spots[occurrence]
    nodes = chain.nodes[:i] + (term, BULLET, term) + chain.nodes[i + 1 :]
    arrows = chain.arrows[:i] + (Arrow.LEFT, Arrow.RIGHT) + chain.arrows[i:]
    return Chain(nodes, arrows)


def chain_from_text(text: str) -> Chain:
    """Parse the canonical rendering back into a chain.

    Tokens are whitespace separated: term identifiers, ``*`` for a bullet,
    ``->`` and ``<-`` for arrows, strictly alternating.
    """
    tokens = text.split()
    if not tokens or len(tokens) % 2 == 0:
        raise ChainError(f"not a chain rendering: {text!r}")
    nodes = []
    arrows = []
    for k, token in enumerate(tokens):
        if k % 2 == 0:
            if token in ("->", "<-"):
                raise ChainError(f"expected a node at token {k}, got {token!r}")
            nodes.append(BULLET if token == "*" else token)
        else:
            try:
                arrows.append(Arrow(token))
            except ValueError:
                raise ChainError(f"expected an arrow at token {k}, got {token!r}") from None
    return Chain(tuple(nodes), tuple(arrows))
