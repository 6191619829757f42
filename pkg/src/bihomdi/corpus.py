"""Low-dimensional classification tables, transcribed as data.

Each entry lists its nonzero products and structure-map images; everything
not listed is zero.  Coefficients are linear combinations of basis vectors
whose scalars may carry one free parameter, e.g. ``-2a e4`` or ``f e1 + g e4``.
Parameters are instantiated numerically by a profile.

Entries are built without validation so that an inconsistent row surfaces in
the verification report instead of as a constructor error.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .core import Dialgebra, check_axioms, check_multiplicative, is_regular
from .errors import MissingParameter, ParseError, UnknownEntry
from .field import QQ
from .report import SCHEMA_VERSION

PROFILES = ("ones", "twos", "mixed")

_HOM_23 = """
  A e2 = e1
  B e2 = e1
  B e3 = b e3
"""

_BETA_SHIFT = """
  B e1 = e1
  B e2 = e1 + e2
  B e3 = e2 + e3
  B e4 = e3 + e4
"""

_BETA_DOWN = """
  B e2 = e1
  B e3 = e2
  B e4 = e3
"""

# L: -| product, R: |- product, A/B: alpha/beta images.  "!" lines are flags.
_TABLES = f"""
entry dim1/trivial 1

entry dim2/Alg1 2
  L e1 e2 = a e1
  L e2 e1 = b e1
  R e1 e2 = c e1
  R e2 e1 = d e1
  R e2 e2 = f e1
  A e2 = e1
  B e2 = e1

entry dim2/Alg2 2
  L e1 e2 = a e1
  L e2 e1 = a e1
  L e2 e2 = e1
  R e1 e2 = e1
  R e2 e1 = e1
  A e2 = e1
  B e2 = e1

entry dim2/Alg3 2
  L e1 e2 = a e1
  R e1 e2 = b e1
  R e2 e1 = c e1
  R e2 e2 = d e1
  A e2 = e1
  B e2 = e1

entry dim2/Alg4 2
  L e1 e2 = e1
  L e2 e1 = e1
  L e2 e2 = a e1
  R e1 e2 = b e1
  R e2 e1 = c e1
  R e2 e2 = d e1
  A e2 = e1
  B e2 = e1

entry dim3/Alg1 3
  L e1 e2 = e1
  L e2 e1 = e1
  L e2 e2 = a e1
  L e2 e3 = b e1
  L e3 e2 = c e1
  R e2 e1 = e1
  R e2 e2 = d e1
  R e3 e2 = f e1
{_HOM_23}
entry dim3/Alg2 3
  L e1 e2 = e1
  L e2 e1 = e1
  L e2 e2 = e1
  L e2 e3 = e1
  L e3 e2 = e1
  R e1 e2 = e1
  R e2 e1 = e1
  R e2 e2 = e1
  R e3 e2 = e1
{_HOM_23}
entry dim3/Alg3 3
  L e1 e2 = e1
  L e2 e1 = e1
  ! e2 -| e1 has a truncated basis vector in the table; read as e1
  L e2 e2 = e1
  L e2 e3 = e1
  L e3 e2 = e1
  R e1 e2 = e1
  R e2 e2 = e1
  R e2 e3 = e1
  R e3 e2 = e1
{_HOM_23}
entry dim3/Alg4 3
  L e1 e2 = e1
  L e2 e1 = e1
  L e2 e2 = e1
  L e2 e3 = e1
  R e1 e2 = e1
  R e2 e1 = e1
  R e2 e2 = e1
  R e2 e3 = e1
  R e3 e2 = e1
{_HOM_23}
entry dim3/Alg5 3
  L e1 e2 = e1
  L e2 e1 = e1
  L e2 e2 = e1
  L e2 e3 = e1
  R e1 e2 = e1
  R e2 e1 = e1
  R e2 e3 = e1
  R e3 e2 = e1
{_HOM_23}
entry dim4/Alg1 4
  L e2 e1 = e4
  L e2 e3 = e4
  L e3 e1 = e4
  L e3 e2 = e4
  L e4 e4 = e4
  R e1 e2 = e4
  R e2 e2 = c e4
  R e3 e3 = e4
  R e3 e4 = d e3
  A e2 = b e2
{_BETA_DOWN}
entry dim4/Alg2 4
  L e1 e2 = e4
  L e1 e4 = e4
  L e2 e1 = a e4
  L e2 e3 = b e4
  L e3 e1 = -c e4
  L e3 e2 = e4
  R e1 e2 = e4
  R e2 e2 = d e4
  R e3 e3 = f e4
  R e3 e4 = e4
  R e4 e4 = e4
  A e2 = e2
{_BETA_DOWN}
entry dim4/Alg3 4
  L e1 e4 = e4
  L e2 e1 = e4
  L e2 e2 = e4
  L e2 e3 = b e4
  L e3 e1 = c e4
  L e3 e2 = e4
  R e1 e2 = e4
  R e2 e2 = e4
  R e3 e2 = c e4
  R e3 e3 = d e4
  R e4 e4 = e4
  A e2 = e2
  A e3 = e3
{_BETA_DOWN}
entry dim4/Alg4 4
  L e1 e4 = e4
  L e2 e2 = a e4
  L e2 e3 = e4
  L e3 e1 = e4
  L e3 e2 = c e4
  L e3 e3 = e4
  R e1 e2 = e4
  R e2 e2 = e4
  R e3 e3 = e4
  R e4 e4 = e4
  A e2 = e2
  A e3 = e3
{_BETA_DOWN}
entry dim4/Alg5 4
  L e1 e4 = e4
  L e2 e2 = e4
  L e2 e3 = e4
  L e3 e4 = e4
  L e3 e2 = e4
  L e3 e3 = e4
  ! e3 -| e4 = e4 is listed twice in the table; transcribed once
  R e1 e3 = e4
  R e2 e2 = e4
  R e3 e3 = e4
  A e2 = e2
  A e4 = e4
{_BETA_DOWN}
entry dim4/Alg6 4
  L e2 e2 = e4
  L e2 e3 = e4
  L e3 e2 = e4
  L e3 e3 = e4
  L e3 e4 = e4
  R e1 e3 = e4
  R e1 e4 = e4
  R e2 e2 = e4
  R e3 e1 = e4
  R e3 e3 = e4
  A e2 = e2
  A e4 = e4
{_BETA_DOWN}
entry dim4/Alg7 4
  L e1 e2 = e4
  L e1 e4 = e4
  L e2 e2 = e4
  L e2 e4 = f e4
  L e3 e3 = -g e4
  R e1 e4 = e4
  R e2 e2 = e4
  R e2 e3 = e4
  R e3 e1 = e4
  R e3 e2 = -h e4
  R e3 e3 = k e4
  A e3 = e3
  A e4 = e4
{_BETA_DOWN}
entry dim4/Alg8 4
  L e1 e3 = e4
  L e1 e4 = e4
  L e2 e2 = e4
  L e2 e4 = e4
  L e3 e3 = e4
  R e1 e3 = e4
  R e3 e1 = e4
  R e3 e2 = e4
  R e3 e3 = e4
  A e3 = e3
  A e4 = e4
{_BETA_DOWN}
entry dim4/Alg9 4
  L e2 e2 = e1 + e4
  L e2 e3 = e1 + e4
  L e3 e2 = e1 + e4
  L e4 e2 = e1 + e4
  R e1 e2 = -e1 + e4
  R e2 e2 = e1
  R e3 e3 = e1 + e4
  R e4 e2 = e1 + e4
  A e2 = e1
  A e3 = e2
  A e4 = e4
  B e3 = e3
  B e4 = e4

entry dim4/Alg10 4
  L e1 e2 = e4
  L e2 e2 = e1 + e4
  L e2 e3 = e4
  L e3 e2 = e1
  L e3 e3 = e4
  L e4 e2 = e4
  R e1 e2 = e4
  R e2 e2 = e1
  R e3 e3 = e1 + e4
  R e4 e2 = e1 + e4
  A e2 = e1
  A e3 = e2
  A e4 = e4
  B e3 = e3
  B e4 = e4

entry dim4/Alg11 4
  L e2 e2 = f e1 + g e4
  L e2 e3 = e4
  L e3 e2 = e1 + e4
  L e3 e3 = e4
  L e4 e2 = e4
  R e1 e2 = e4
  R e2 e2 = h e1 - k e4
  R e3 e3 = e1 + e4
  R e4 e2 = e1 + e4
  A e2 = e1
  A e3 = e2
  A e4 = e4
  B e3 = e3
  B e4 = e4

entry dim4/Alg12 4
  L e1 e4 = e4
  L e2 e2 = e4
  L e2 e3 = a e4
  L e2 e4 = e4
  L e3 e3 = e4
  R e1 e2 = e4
  R e2 e2 = e4
  R e2 e3 = -b e4
  R e3 e2 = e4
  A e3 = e3
  A e4 = e4
{_BETA_SHIFT}
entry dim4/Alg13 4
  L e1 e2 = e4
  L e1 e3 = e4
  L e2 e1 = e4
  L e2 e2 = e4
  L e2 e3 = e4
  L e3 e1 = e4
  R e1 e2 = e4
  R e2 e2 = e4
  R e2 e3 = e4
  R e3 e3 = e4
  A e2 = e2
  A e3 = e3
{_BETA_SHIFT}
entry dim4/Alg14 4
  L e1 e1 = e4
  L e1 e3 = -c e4
  L e2 e2 = e4
  L e2 e3 = e4
  L e3 e1 = e4
  L e3 e2 = e4
  L e3 e3 = -2a e4
  R e1 e2 = e4
  R e2 e2 = e4
  R e2 e3 = e4
  R e3 e2 = e4
  R e3 e3 = b e4
  A e1 = e1
  A e2 = e2
{_BETA_SHIFT}
entry dim4/Alg15 4
  L e1 e1 = -e4
  L e1 e2 = a e4
  L e2 e3 = b e4
  L e3 e1 = c e4
  L e3 e2 = d e4
  L e3 e3 = e4
  R e1 e2 = f e4
  R e1 e4 = e4
  R e2 e2 = e4
  R e2 e3 = e4
  R e3 e2 = g e4
  R e3 e3 = e4
  R e3 e4 = e4
  A e2 = e2
{_BETA_SHIFT}
entry dim4/Alg16 4
  L e1 e2 = e4
  L e2 e1 = e4
  L e2 e2 = e4
  L e2 e3 = a e4
  L e2 e4 = e4
  L e3 e2 = e4
  R e1 e2 = b e4
  R e2 e2 = c e4
  R e3 e2 = d e4
  R e3 e3 = e4
  R e3 e4 = e4
  A e1 = a e1
{_BETA_SHIFT}
"""

_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*([a-z])?\s*e(\d+)\s*")


@dataclass(frozen=True)
class Term:
    coeff: int
    param: str | None
    basis: int  # 0-based


@dataclass
class CorpusEntry:
    id: str
    dim: int
    left: list = field(default_factory=list)  # (i, j, [Term])
    right: list = field(default_factory=list)
    alpha: list = field(default_factory=list)  # (j, [Term])
    beta: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    source: list = field(default_factory=list)

    @property
    def params(self) -> tuple:
        names = set()
        for rows in (self.left, self.right):
            for _, _, terms in rows:
                names.update(t.param for t in terms if t.param)
        for rows in (self.alpha, self.beta):
            for _, terms in rows:
                names.update(t.param for t in terms if t.param)
        return tuple(sorted(names))


def _parse_terms(text: str, lineno: int) -> list[Term]:
    terms = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot read coefficient expression {text!r}", lineno, pos + 1)
        sign, num, par, k = m.groups()
        if terms and sign is None:
            raise ParseError("missing sign between terms", lineno, pos + 1)
        c = int(num) if num else 1
        terms.append(Term(-c if sign == "-" else c, par, int(k) - 1))
        pos = m.end()
    if not terms:
        raise ParseError("empty right-hand side", lineno, 1)
    return terms


def _basis_index(tok: str, lineno: int) -> int:
    if not re.fullmatch(r"e\d+", tok):
        raise ParseError(f"expected a basis vector, got {tok!r}", lineno)
    return int(tok[1:]) - 1


def parse_tables(text: str) -> dict[str, CorpusEntry]:
    entries: dict[str, CorpusEntry] = {}
    cur = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("!"):
            cur.flags.append(line[1:].strip())
            continue
        head, *rest = line.split()
        if head == "entry":
            cur = CorpusEntry(rest[0], int(rest[1]))
            entries[cur.id] = cur
            continue
        lhs, _, rhs = line.partition("=")
        toks = lhs.split()
        terms = _parse_terms(rhs, lineno)
        cur.source.append(line)
        if head in ("L", "R"):
            key = (_basis_index(toks[1], lineno), _basis_index(toks[2], lineno))
            rows = cur.left if head == "L" else cur.right
            if any((i, j) == key for i, j, _ in rows):
                raise ParseError(f"duplicate product {lhs.strip()} in {cur.id}", lineno)
            rows.append((*key, terms))
        elif head in ("A", "B"):
            (cur.alpha if head == "A" else cur.beta).append((_basis_index(toks[1], lineno), terms))
        else:
            raise ParseError(f"unknown stanza {head!r}", lineno, 1)
    return entries


_ENTRIES = parse_tables(_TABLES)


def corpus_list() -> list[CorpusEntry]:
    return list(_ENTRIES.values())


def corpus_ids() -> list[str]:
    return list(_ENTRIES)


def get_entry(entry_id: str) -> CorpusEntry:
    try:
        return _ENTRIES[entry_id]
    except KeyError:
        raise UnknownEntry(f"no corpus entry {entry_id!r}") from None


def profile_values(entry: CorpusEntry, profile: str = "ones") -> dict:
    names = entry.params
    if profile == "ones":
        return {p: Fraction(1) for p in names}
    if profile == "twos":
        return {p: Fraction(2) for p in names}
    if profile == "mixed":
        return {p: Fraction(i + 1) for i, p in enumerate(names)}
    raise ValueError(f"unknown profile {profile!r}; choose from {PROFILES}")


def _value(terms, params, field):
    out = {}
    for t in terms:
        c = Fraction(t.coeff)
        if t.param:
            c *= params[t.param]
        out[t.basis] = out.get(t.basis, Fraction(0)) + c
    return {k: field(v) for k, v in out.items()}


def corpus_build(entry_id: str, params: dict | None = None, field=QQ, profile: str = "ones") -> Dialgebra:
    """Instantiate an entry; explicit ``params`` override the profile values."""
    entry = get_entry(entry_id)
    values = profile_values(entry, profile)
    if params is not None:
        values = {k: Fraction(v) for k, v in params.items()}
        missing = [p for p in entry.params if p not in values]
        if missing:
            raise MissingParameter(f"{entry_id} needs values for {', '.join(missing)}")
    n = entry.dim
    left = la.zeros((n, n, n), field)
    right = la.zeros((n, n, n), field)
    alpha = la.zeros((n, n), field)
    beta = la.zeros((n, n), field)
    for T, rows in ((left, entry.left), (right, entry.right)):
        for i, j, terms in rows:
            for k, v in _value(terms, values, field).items():
                T[i, j, k] = v
    for M, rows in ((alpha, entry.alpha), (beta, entry.beta)):
        for j, terms in rows:
            for k, v in _value(terms, values, field).items():
                M[k, j] = v
    return Dialgebra(left, right, alpha, beta, entry_id, validate=False)


def _entry_report(entry: CorpusEntry, profile: str, field) -> dict:
    from .cohomology import BiHomModule, cohomology_dims
    from .derivations import derivation_space

    D = corpus_build(entry.id, field=field, profile=profile)
    axioms = check_axioms(D)
    mult = check_multiplicative(D)
    dims = cohomology_dims(D, BiHomModule.trivial(1, field))
    values = profile_values(entry, profile)
    return {
        "id": entry.id,
        "dim": entry.dim,
        "params": {k: str(v) for k, v in values.items()},
        "status": "pass" if axioms.passed else "table discrepancy",
        "axioms": [r.to_json() for r in axioms.results],
        "multiplicative": mult.passed,
        "regular": is_regular(D),
        "alpha_equals_beta": la.equal(D.alpha, D.beta),
        "der00_dim": derivation_space(D, 0, 0).dim,
        "cohomology": {"z2": dims.z2, "b2": dims.b2, "h2": dims.h2},
        "flags": list(entry.flags),
    }


def corpus_verify(profile: str = "ones", field=QQ) -> dict:
    entries = [_entry_report(e, profile, field) for e in corpus_list()]
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "corpus-verify",
        "profile": profile,
        "field": field.name,
        "summary": {
            "entries": len(entries),
            "pass": sum(e["status"] == "pass" for e in entries),
            "table_discrepancy": sum(e["status"] != "pass" for e in entries),
        },
        "entries": entries,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def report_text(report: dict) -> str:
    lines = [f"corpus verify  profile={report['profile']}  field={report['field']}  schema={report['schema_version']}"]
    for e in report["entries"]:
        failed = [a["axiom"] for a in e["axioms"] if not a["pass"]]
        tail = f"  fails {','.join(failed)}" if failed else ""
        c = e["cohomology"]
        lines.append(
            f"{e['id']:<14} {e['status']:<18} mult={int(e['multiplicative'])} reg={int(e['regular'])} "
            f"a=b={int(e['alpha_equals_beta'])} der00={e['der00_dim']} "
            f"H2=({c['z2']},{c['b2']},{c['h2']}){tail}"
        )
        for f in e["flags"]:
            lines.append(f"{'':<14} note: {f}")
    s = report["summary"]
    lines.append(f"{s['entries']} entries, {s['pass']} pass, {s['table_discrepancy']} table discrepancy")
    return "\n".join(lines) + "\n"
