"""Brace-and-arrow notation for finite spaces and the maps between them.

Grammar (whitespace is insignificant everywhere)::

    space := '{' [chain (',' chain)*] '}'
    chain := label (rel label)*
    rel   := '>' | '<' | '<->' | '='
    map   := space '->' space
    label := [A-Za-z0-9_'~*-]+

``a>b`` contributes ``b in cl{a}``, ``a<b`` contributes ``a in cl{b}``,
``a<->b`` contributes both, and ``a=b`` glues the two labels into a single
point.  Repeating a label always refers back to the same point, so chains
may revisit points freely.  The optional ``~`` prefix inside a label is the
ASCII rendering of an overbar.  Unicode pen-forms are accepted as aliases:
``↘`` for ``>``, ``↙`` for ``<``, ``↔`` for ``<->``, ``⟶`` for ``->``.

A map expression ``A -> B`` denotes the continuous map induced by label
matching.  Every point and arrow of the domain is implicitly part of the
codomain as well — the codomain expression only has to list what is new
(extra points or arrows, and the gluings it performs), exactly the way the
display ``{a} -> {b}`` names the inclusion of a point into the two-point
discrete space.  One reserved shorthand: a codomain consisting solely of
the label ``*`` (which the domain does not use) denotes the collapse onto a
single point, so ``{a>b} -> {*}`` is the terminal map.  Everywhere else
``*`` is an ordinary label.

The unit interval and its doubled-endpoint variants are not expressible
here; axiom formulas that need them are built-in named models (see
:mod:`finsep.axioms`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .maps import ContinuousMap, check_continuous
from .spaces import FiniteSpace, build_space, canonical_arrows, bit_indices, default_label

LABEL_CHARS = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_'~*-")

_ALIASES = {"↘": ">", "↙": "<", "↔": "<->", "⟶": "->"}


class NotationError(ValueError):
    """Syntax or semantic error in notation input; ``pos`` points at the
    offending character of the normalized (whitespace-free) text."""

    def __init__(self, message: str, pos: int | None = None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


# -- tokens --------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # 'lbrace' | 'rbrace' | 'comma' | 'rel' | 'maparrow' | 'label'
    text: str
    pos: int


def _normalize(text: str) -> str:
    for src, dst in _ALIASES.items():
        text = text.replace(src, dst)
    return re.sub(r"\s+", "", text)


def _tokenize(text: str) -> list[_Token]:
    toks = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "{":
            toks.append(_Token("lbrace", ch, pos))
            pos += 1
        elif ch == "}":
            toks.append(_Token("rbrace", ch, pos))
            pos += 1
        elif ch == ",":
            toks.append(_Token("comma", ch, pos))
            pos += 1
        elif text.startswith("<->", pos):
            toks.append(_Token("rel", "<->", pos))
            pos += 3
        elif text.startswith("->", pos):
            toks.append(_Token("maparrow", "->", pos))
            pos += 2
        elif ch in "<>=":
            toks.append(_Token("rel", ch, pos))
            pos += 1
        elif ch in LABEL_CHARS:
            start = pos
            while pos < len(text) and text[pos] in LABEL_CHARS and not text.startswith("->", pos):
                pos += 1
            toks.append(_Token("label", text[start:pos], start))
        else:
            raise NotationError(f"unexpected character {ch!r}", pos)
    return toks


# -- AST -----------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    labels: tuple[str, ...]
    rels: tuple[str, ...]  # len(rels) == len(labels) - 1


@dataclass(frozen=True)
class SpaceExpr:
    chains: tuple[Chain, ...]

    def label_order(self) -> list[str]:
        seen: dict[str, None] = {}
        for chain in self.chains:
            for lab in chain.labels:
                seen.setdefault(lab)
        return list(seen)


@dataclass(frozen=True)
class MapExpr:
    dom: SpaceExpr
    cod: SpaceExpr


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind: str) -> _Token:
        tok = self.peek()
        if tok is None:
            raise NotationError(f"expected {kind}, found end of input", len(self.text))
        if tok.kind != kind:
            raise NotationError(f"expected {kind}, found {tok.text!r}", tok.pos)
        self.i += 1
        return tok

    def space_expr(self) -> SpaceExpr:
        self.take("lbrace")
        chains: list[Chain] = []
        tok = self.peek()
        if tok is not None and tok.kind == "rbrace":
            self.i += 1
            return SpaceExpr(())
        while True:
            chains.append(self.chain())
            tok = self.peek()
            if tok is None:
                raise NotationError("expected ',' or '}', found end of input", len(self.text))
            if tok.kind == "comma":
                self.i += 1
                continue
            if tok.kind == "rbrace":
                self.i += 1
                return SpaceExpr(tuple(chains))
            raise NotationError(f"expected ',' or '}}', found {tok.text!r}", tok.pos)

    def chain(self) -> Chain:
        labels = [self.take("label").text]
        rels: list[str] = []
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "rel":
                self.i += 1
                rels.append(tok.text)
                labels.append(self.take("label").text)
            else:
                return Chain(tuple(labels), tuple(rels))

    def expect_end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise NotationError(f"unexpected trailing {tok.text!r}", tok.pos)


def parse_space_expr(text: str) -> SpaceExpr:
    p = _Parser(_normalize(text))
    expr = p.space_expr()
    p.expect_end()
    return expr


def parse_map_expr(text: str) -> MapExpr:
    p = _Parser(_normalize(text))
    dom = p.space_expr()
    p.take("maparrow")
    cod = p.space_expr()
    p.expect_end()
    return MapExpr(dom, cod)


# -- realization ---------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def add(self, x: str) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: str) -> str:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _expr_glues_and_arrows(expr: SpaceExpr):
    """Split an expression into glue pairs and arrow pairs over labels."""
    glues: list[tuple[str, str]] = []
    arrows: list[tuple[str, str]] = []
    for chain in expr.chains:
        for (a, b), rel in zip(zip(chain.labels, chain.labels[1:]), chain.rels):
            if rel == "=":
                glues.append((a, b))
            elif rel == ">":
                arrows.append((a, b))
            elif rel == "<":
                arrows.append((b, a))
            else:  # '<->'
                arrows.append((a, b))
                arrows.append((b, a))
    return glues, arrows


def _realize(label_order, glues, arrows):
    """Quotient labels by the glue relation and build the space.

    Returns ``(space, label_to_point)``; point order follows the first
    appearance of each glue class in ``label_order`` and each point keeps
    the first label of its class.
    """
    uf = _UnionFind()
    for lab in label_order:
        uf.add(lab)
    for a, b in glues:
        uf.union(a, b)
    point_of_root: dict[str, int] = {}
    labels: list[str] = []
    label_to_point: dict[str, int] = {}
    for lab in label_order:
        root = uf.find(lab)
        if root not in point_of_root:
            point_of_root[root] = len(labels)
            labels.append(lab)
        label_to_point[lab] = point_of_root[root]
    pt_arrows = [(label_to_point[a], label_to_point[b]) for a, b in arrows]
    space = build_space(len(labels), pt_arrows, labels)
    return space, label_to_point


def space_from_expr(expr: SpaceExpr) -> FiniteSpace:
    glues, arrows = _expr_glues_and_arrows(expr)
    return _realize(expr.label_order(), glues, arrows)[0]


def parse_space(text: str) -> FiniteSpace:
    return space_from_expr(parse_space_expr(text))


def map_from_expr(expr: MapExpr) -> ContinuousMap:
    dom_glues, dom_arrows = _expr_glues_and_arrows(expr.dom)
    dom_order = expr.dom.label_order()
    dom, dom_map = _realize(dom_order, dom_glues, dom_arrows)

    cod_order = expr.cod.label_order()
    if cod_order == ["*"] and "*" not in dom_order:
        # Reserved shorthand: collapse everything onto the single point '*'.
        cod = build_space(1, (), ("*",))
        return check_continuous(dom, cod, (0,) * dom.n)

    cod_glues, cod_arrows = _expr_glues_and_arrows(expr.cod)
    order = list(cod_order)
    seen = set(order)
    for lab in dom_order:
        if lab not in seen:
            order.append(lab)
            seen.add(lab)
    cod, cod_map = _realize(order, cod_glues + dom_glues, cod_arrows + dom_arrows)
    f = tuple(cod_map[dom.labels[p]] for p in range(dom.n))
    # Continuity holds by construction (all domain arrows were transported);
    # run the checker anyway so any internal inconsistency surfaces loudly.
    return check_continuous(dom, cod, f)


def parse_map(text: str) -> ContinuousMap:
    return map_from_expr(parse_map_expr(text))


def parse(text: str):
    """Parse either a space or a map, keyed on the presence of ``->``."""
    p = _Parser(_normalize(text))
    dom = p.space_expr()
    tok = p.peek()
    if tok is None:
        return space_from_expr(dom)
    p.take("maparrow")
    cod = p.space_expr()
    p.expect_end()
    return map_from_expr(MapExpr(dom, cod))


# -- formatting ----------------------------------------------------------


def _fresh_labels(used: set[str]):
    i = 0
    while True:
        lab = default_label(i)
        if lab not in used:
            yield lab
        i += 1


def _merge_chains(chains: list[tuple[str, str, str]]) -> list[str]:
    """Concatenate adjacent chains sharing a junction label (the first
    label of one equals the last of the previous); pure display sugar,
    the arrow/glue content is unchanged."""
    out: list[tuple[str, str, str]] = []
    for text, first, last in chains:
        if out and out[-1][2] == first:
            ptext, pfirst, _ = out[-1]
            out[-1] = (ptext + text[len(first):], pfirst, last)
        else:
            out.append((text, first, last))
    return [text for text, _, _ in out]


def _space_chains(
    space: FiniteSpace,
    labels: list[str],
    intro: dict[int, tuple[str, str, str]] | None = None,
    point_of: dict[str, int] | None = None,
) -> list[str]:
    """Chains describing ``space`` whose label first-appearances follow
    point order, so parsing the result reproduces the space exactly:
    ``<->`` links within indistinguishable classes, one arrow per reduced
    condensation edge, bare labels where nothing else introduces a point.
    ``intro`` optionally supplies the chain that introduces a point (a
    gluing chain when formatting a map's codomain), as a
    (text, first label, last label) triple; ``point_of`` maps every label
    that may appear in a chain (aliases glued away included) to its point,
    so a new chain can continue from the previous tail label."""
    intro = intro or {}
    if point_of is None:
        point_of = {lab: i for i, lab in enumerate(labels)}
    prev_in_class: dict[int, int] = {}
    for cls in space.indistinguishability_classes:
        for a, b in zip(cls, cls[1:]):
            prev_in_class[b] = a
    reps = {cls[0] for cls in space.indistinguishability_classes}
    partners: dict[int, list[int]] = {i: [] for i in range(space.n)}
    for x, y in canonical_arrows(space):
        if x in reps and y in reps and not (space.leq(x, y) and space.leq(y, x)):
            partners[max(x, y)].append(min(x, y))

    chains: list[tuple[str, str, str]] = []  # (text, first label, last label)
    next_new = 0

    def fill(limit: int) -> None:
        nonlocal next_new
        while next_new < limit:
            label = labels[next_new]
            chains.append(intro.get(next_new, (label, label, label)))
            next_new += 1

    def edge_text(i: int, p: int, p_first: bool, lp: str) -> tuple[str, str, str]:
        li = labels[i]
        if space.leq(p, i):
            return (f"{lp}>{li}", lp, li) if p_first else (f"{li}<{lp}", li, lp)
        return (f"{lp}<{li}", lp, li) if p_first else (f"{li}>{lp}", li, lp)

    for i in range(space.n):
        if i in prev_in_class:
            p = prev_in_class[i]
            fill(i)
            chains.append((f"{labels[p]}<->{labels[i]}", labels[p], labels[i]))
        elif partners[i]:
            fill(i)
            prev_last = chains[-1][2] if chains else None
            prev_point = point_of.get(prev_last) if prev_last is not None else None

            def continues(p: int) -> bool:
                # the tail label may stand in for any point of its class
                return prev_point is not None and space.leq(
                    p, prev_point
                ) and space.leq(prev_point, p)

            for k, p in enumerate(
                sorted(partners[i], key=lambda p: (not continues(p), p))
            ):
                lp = prev_last if k == 0 and continues(p) else labels[p]
                chains.append(edge_text(i, p, p_first=(k == 0), lp=lp))
        else:
            fill(i + 1)
            continue
        next_new = i + 1
        if i in intro:
            chains.append(intro[i])
    return _merge_chains(chains)


def format_space(space: FiniteSpace) -> str:
    """Render a space; ``parse_space`` of the result reproduces it (same
    point order and closures, and the same labels when it carries any)."""
    if space.n == 1 and space.labels is None:
        return "{*}"
    labels = [space.label(x) for x in range(space.n)]
    return "{" + ",".join(_space_chains(space, labels)) + "}"


def format_map(m: ContinuousMap) -> str:
    """Render a map as ``DOMAIN -> CODOMAIN`` with matching labels.

    The codomain names each point by the first label of its fibre (fresh
    labels for points outside the image), lists the gluings performed, and
    then describes its own structure; the text parses back to an equivalent
    map and is suitable for feeding to the ``lift`` command.
    """
    dom_labels = [m.dom.label(x) for x in range(m.dom.n)]
    used = set(dom_labels)
    fresh = _fresh_labels(used)
    fibres: list[list[str]] = [[] for _ in range(m.cod.n)]
    for x in range(m.dom.n):
        fibres[m.f[x]].append(dom_labels[x])
    cod_labels = [fibre[0] if fibre else next(fresh) for fibre in fibres]
    dom_text = format_space(
        FiniteSpace(m.dom.n, m.dom.cl, tuple(dom_labels)) if m.dom.n else m.dom
    )
    cod_for_chains = FiniteSpace(m.cod.n, m.cod.cl, tuple(cod_labels)) if m.cod.n else m.cod
    intro = {
        i: ("=".join(fibre), fibre[0], fibre[-1])
        for i, fibre in enumerate(fibres)
        if len(fibre) >= 2
    }
    point_of = {lab: i for i, fibre in enumerate(fibres) for lab in fibre}
    for i, lab in enumerate(cod_labels):
        point_of.setdefault(lab, i)
    chains = _space_chains(cod_for_chains, cod_labels, intro, point_of)
    return f"{dom_text} -> {{{','.join(chains)}}}"


def format_mask(space: FiniteSpace, mask: int) -> str:
    """Render a subset as a label list, e.g. ``{a,c}``."""
    return "{" + ",".join(space.label(x) for x in bit_indices(mask)) + "}"
