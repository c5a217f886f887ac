"""Quadratic presentations and their canonical file format.

A presentation is a named generator list plus quadratic relations, each a
sum of coeff * left * right terms with integer coefficients (exact in the
rationals, reduced mod p when a prime field is selected).  The generator
of interest is ``construct_presentation``, which emits one relation per
chain of a minimum chain cover of the pair poset of an optimal block
partition, so the relation count is exactly the composition minimax and
the quotient algebra is k-step nilpotent.

The file format is a JSON document with fields ``generators``, ``field``
(``"rational"`` or ``{"mod": p}``), ``relations`` (lists of term records
with decimal-string coefficients) and optional ``metadata``.  Serialisation
is canonical: fixed key order, terms sorted by (left, right), two-space
indentation, trailing newline.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from nilquad.chain_poset import DEFAULT_COVER_CAP, BlockPartition, min_chain_cover
from nilquad.minimax import minimax_exact

_TOOL_VERSION = "nilquad 0.1.0"

_COEFF_RE = re.compile(r"^-?[0-9]+$")


class PresentationParseError(ValueError):
    """Malformed presentation document."""


def _is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit integer."""
    if p < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % small == 0:
            return p == small
    d = p - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class QuadraticRelation:
    """Homogeneous degree-2 element: a sum of coeff * left * right terms.

    Terms are stored sorted by (left, right); coefficients are non-zero
    integers and support pairs are distinct within a relation.
    """

    terms: tuple[tuple[int, str, str], ...]

    def __post_init__(self):
        terms = tuple(
            sorted(((int(c), l, r) for c, l, r in self.terms), key=lambda t: (t[1], t[2]))
        )
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("relation needs at least one term")
        if any(c == 0 for c, _, _ in terms):
            raise ValueError("zero coefficient in relation")
        pairs = [(l, r) for _, l, r in terms]
        if len(set(pairs)) != len(pairs):
            raise ValueError(f"duplicate support pair in relation: {pairs}")

    @property
    def support(self) -> frozenset[tuple[str, str]]:
        """The set of (left, right) monomial pairs carrying a coefficient."""
        return frozenset((l, r) for _, l, r in self.terms)


@dataclass(frozen=True)
class Presentation:
    """Generators, quadratic relations, and the coefficient field.

    ``mod`` is None for the rationals or a prime modulus; coefficients are
    stored as integers either way and interpreted in the chosen field.
    """

    generators: tuple[str, ...]
    relations: tuple[QuadraticRelation, ...]
    mod: int | None = None
    metadata: dict | None = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        if any(not g for g in self.generators):
            raise ValueError("generator names must be non-empty")
        known = set(self.generators)
        for idx, rel in enumerate(self.relations, start=1):
            for _, l, r in rel.terms:
                for name in (l, r):
                    if name not in known:
                        raise ValueError(
                            f"relation {idx} uses unknown generator '{name}'"
                        )
        if self.mod is not None and not _is_prime(self.mod):
            raise ValueError(f"modulus must be prime, got {self.mod}")
        if self.metadata is not None:
            declared = self.metadata.get("relations")
            if declared is not None and declared != len(self.relations):
                raise ValueError(
                    f"metadata declares {declared} relations, found {len(self.relations)}"
                )

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def d(self) -> int:
        return len(self.relations)


def construct_presentation(
    n: int, k: int, cover_cap: int = DEFAULT_COVER_CAP
) -> Presentation:
    """Presentation with the fewest chain-supported relations for (n, k).

    Splits the generators x1..xn into k-1 consecutive blocks sized by the
    optimal composition, covers the pair poset with chains, and emits one
    all-coefficients-1 relation per chain.  The supports partition the
    pair set, so the relation count equals the composition minimax and the
    quotient is k-step nilpotent.
    """
    result = minimax_exact(n, k)
    partition = BlockPartition(result.witness.parts)
    cover = min_chain_cover(partition, cap=cover_cap)
    relations = tuple(
        QuadraticRelation(tuple((1, e.left, e.right) for e in chain))
        for chain in cover.chains
    )
    if len(relations) != result.value:  # pragma: no cover - Dilworth equality
        raise AssertionError("relation count differs from the minimax value")
    metadata = {
        "n": n,
        "k": k,
        "partition": list(result.witness.parts),
        "relations": len(relations),
        "tool": _TOOL_VERSION,
    }
    return Presentation(
        generators=partition.names,
        relations=relations,
        mod=None,
        metadata=metadata,
    )


_FIXTURE_RELATIONS = (
    "xc", "xa", "xp+ab", "yz+qc", "pq",
    "yc", "ya", "yp+bb", "yy+qb",
    "zc", "za", "zp+cb", "yx+qa",
    "xb", "xq+ac", "xz+pc", "zz+qq+ca",
    "yb", "yq+bc", "xy+pb", "zy+qp+ba",
    "zb", "zq+cc", "xx+pa", "zx+pp+aa",
)


def fixture_ex8() -> Presentation:
    """Built-in example: 8 generators, 25 relations, 4-step nilpotent.

    Generators split into blocks {a, b, c}, {p, q}, {x, y, z}; every
    relation is a sum of monomials whose pairs form a chain in the block
    pair order, and the supports together cover all 43 descending pairs.
    """
    relations = []
    for text in _FIXTURE_RELATIONS:
        terms = tuple((1, mono[0], mono[1]) for mono in text.split("+"))
        relations.append(QuadraticRelation(terms))
    metadata = {
        "n": 8,
        "k": 4,
        "partition": [3, 2, 3],
        "relations": 25,
        "tool": _TOOL_VERSION,
    }
    return Presentation(
        generators=("a", "b", "c", "p", "q", "x", "y", "z"),
        relations=tuple(relations),
        mod=None,
        metadata=metadata,
    )


def fixture_ex8_partition() -> BlockPartition:
    """The block partition underlying the built-in 8-generator example."""
    return BlockPartition(
        sizes=(3, 2, 3), names=("a", "b", "c", "p", "q", "x", "y", "z")
    )


def serialize(pres: Presentation) -> str:
    """Canonical text form: fixed key order, sorted terms, final newline."""
    doc: dict = {
        "generators": list(pres.generators),
        "field": "rational" if pres.mod is None else {"mod": pres.mod},
        "relations": [
            [{"coeff": str(c), "left": l, "right": r} for c, l, r in rel.terms]
            for rel in pres.relations
        ],
    }
    if pres.metadata is not None:
        doc["metadata"] = pres.metadata
    return json.dumps(doc, indent=2) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PresentationParseError(message)


def parse(text: str) -> Presentation:
    """Parse a presentation document; inverse of serialize up to canon.

    Field order is free on input.  Errors carry the position (line/column
    for syntax, relation/term indices for content) and the cause.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationParseError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    _require(isinstance(doc, dict), "top level must be an object")
    unknown = set(doc) - {"generators", "field", "relations", "metadata"}
    _require(not unknown, f"unknown top-level fields: {sorted(unknown)}")
    for key in ("generators", "field", "relations"):
        _require(key in doc, f"missing required field '{key}'")

    gens = doc["generators"]
    _require(
        isinstance(gens, list) and all(isinstance(g, str) for g in gens),
        "'generators' must be a list of strings",
    )
    known = set(gens)
    _require(len(known) == len(gens), "generator names must be distinct")

    fld = doc["field"]
    if fld == "rational":
        mod = None
    elif isinstance(fld, dict) and set(fld) == {"mod"} and isinstance(fld["mod"], int):
        mod = fld["mod"]
        _require(_is_prime(mod), f"field modulus must be prime, got {mod}")
    else:
        raise PresentationParseError(
            "'field' must be \"rational\" or {\"mod\": <prime>}"
        )

    rels_doc = doc["relations"]
    _require(isinstance(rels_doc, list), "'relations' must be a list")
    relations = []
    for ri, rel_doc in enumerate(rels_doc, start=1):
        _require(isinstance(rel_doc, list), f"relation {ri} must be a list of terms")
        _require(len(rel_doc) > 0, f"relation {ri} has no terms")
        terms = []
        seen_pairs = set()
        for ti, term in enumerate(rel_doc, start=1):
            where = f"relation {ri}, term {ti}"
            _require(isinstance(term, dict), f"{where}: term must be an object")
            _require(
                set(term) == {"coeff", "left", "right"},
                f"{where}: term needs exactly coeff/left/right",
            )
            coeff_str = term["coeff"]
            _require(
                isinstance(coeff_str, str) and _COEFF_RE.match(coeff_str) is not None,
                f"{where}: coefficient must be a decimal integer string",
            )
            coeff = int(coeff_str)
            _require(coeff != 0, f"{where}: zero coefficient")
            left, right = term["left"], term["right"]
            for name in (left, right):
                _require(isinstance(name, str), f"{where}: generator names must be strings")
                _require(name in known, f"{where}: unknown generator '{name}'")
            _require(
                (left, right) not in seen_pairs,
                f"{where}: duplicate support pair ({left}, {right})",
            )
            seen_pairs.add((left, right))
            terms.append((coeff, left, right))
        relations.append(QuadraticRelation(tuple(terms)))

    metadata = doc.get("metadata")
    _require(
        metadata is None or isinstance(metadata, dict),
        "'metadata' must be an object when present",
    )
    try:
        return Presentation(
            generators=tuple(gens),
            relations=tuple(relations),
            mod=mod,
            metadata=metadata,
        )
    except ValueError as exc:
        raise PresentationParseError(str(exc)) from exc
