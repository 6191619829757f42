"""Line-oriented text formats for algebras, operators, modules, cochains and actions.

Every file is a sequence of blocks.  A block starts with a header line
(``dialgebra``, ``bracketalgebra``, ``operator``, ``module``, ``cochainpair``
or ``action``) followed by ``dim`` and data stanzas.  Indices are 1-based,
values are integers or ``p/q`` fractions, ``#`` starts a comment and repeated
stanzas accumulate.  Anything not listed is zero.

    dialgebra alg3
    dim 2
    left  1 2 1 1      # e1 -| e2 += 1 e1
    right 2 2 1 1
    alpha 2 1 1        # alpha(e2) += 1 e1
    beta  2 1 1

An action file holds an ``action`` header, then the acting dialgebra block,
then the acted-on one, then ``mixact <dl_l|ld_l|dl_r|ld_r> i j k v`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg as la
from .brackets import KINDS, BracketAlgebra
from .core import Dialgebra
from .errors import AlgebraError, ParseError
from .field import QQ

HEADERS = ("dialgebra", "bracketalgebra", "operator", "module", "cochainpair", "action")

# stanza -> number of index arguments
_STANZAS = {
    "dialgebra": {"left": 3, "right": 3, "alpha": 2, "beta": 2},
    "bracketalgebra": {"bracket": 3, "alpha": 2, "beta": 2},
    "operator": {"entry": 2},
    "module": {"alpha": 2, "beta": 2},
    "cochainpair": {"cochain": 4},
    "action": {},
}
MIXACT_TAGS = ("dl_l", "ld_l", "dl_r", "ld_r")


@dataclass
class Stanza:
    keyword: str
    args: list  # (token, column) pairs
    line: int


@dataclass
class Block:
    kind: str
    label: str
    line: int
    dims: tuple = ()
    stanzas: list = field(default_factory=list)
    kind_tag: str | None = None  # bracketalgebra only


def _tokens(line: str):
    """Split into (token, 1-based column) pairs, dropping comments."""
    out = []
    i = 0
    text = line.split("#", 1)[0]
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((text[i:j], i + 1))
        i = j
    return out


def _scalar(tok, col, lineno, source):
    try:
        if tok.count("/") > 1:
            raise ValueError
        v = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad scalar {tok!r}", lineno, col, source) from None
    if "." in tok or "e" in tok.lower():
        raise ParseError(f"scalars must be integers or p/q fractions, not {tok!r}", lineno, col, source)
    return v


def _index(tok, col, lineno, bound, source):
    if not tok.isdigit():
        raise ParseError(f"expected a 1-based index, got {tok!r}", lineno, col, source)
    k = int(tok)
    if not 1 <= k <= bound:
        raise ParseError(f"index {k} out of range 1..{bound}", lineno, col, source)
    return k - 1


def parse_blocks(text: str, source: str = "<string>") -> list[Block]:
    blocks: list[Block] = []
    action = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokens(raw)
        if not toks:
            continue
        (kw, col), rest = toks[0], toks[1:]
        if kw in HEADERS:
            label = " ".join(t for t, _ in rest)
            blk = Block(kw, label, lineno)
            blocks.append(blk)
            if kw == "action":
                action = blk
            continue
        if not blocks:
            raise ParseError(f"{kw!r} before any header", lineno, col, source)
        if kw == "mixact":
            if action is None:
                raise ParseError("mixact outside an action file", lineno, col, source)
            action.stanzas.append(Stanza(kw, rest, lineno))
            continue
        cur = blocks[-1]
        if kw == "dim":
            if not rest or len(rest) > 2:
                raise ParseError("dim takes one or two sizes", lineno, col, source)
            dims = []
            for t, c in rest:
                if not t.isdigit():
                    raise ParseError(f"bad dimension {t!r}", lineno, c, source)
                dims.append(int(t))
            cur.dims = tuple(dims)
            continue
        if kw == "kind" and cur.kind == "bracketalgebra":
            if len(rest) != 1 or rest[0][0] not in KINDS:
                raise ParseError(f"kind must be one of {KINDS}", lineno, col, source)
            cur.kind_tag = rest[0][0]
            continue
        allowed = _STANZAS[cur.kind]
        if kw not in allowed:
            raise ParseError(f"unknown stanza {kw!r} in a {cur.kind} block", lineno, col, source)
        if len(rest) != allowed[kw] + 1:
            raise ParseError(f"{kw} takes {allowed[kw]} indices and a value", lineno, col, source)
        if not cur.dims:
            raise ParseError("data before dim", lineno, col, source)
        cur.stanzas.append(Stanza(kw, rest, lineno))
    return blocks


def _fill(blk: Block, arrays: dict, bounds: dict, fld, source):
    for st in blk.stanzas:
        target = arrays[st.keyword]
        idx_bounds = bounds[st.keyword]
        *idx, (vt, vc) = st.args
        pos = tuple(_index(t, c, st.line, b, source) for (t, c), b in zip(idx, idx_bounds))
        try:
            target[pos] = target[pos] + fld(_scalar(vt, vc, st.line, source))
        except ZeroDivisionError as exc:
            raise ParseError(str(exc), st.line, vc, source) from None


def _need_dims(blk, count, source):
    if len(blk.dims) != count:
        raise ParseError(f"{blk.kind} needs dim with {count} size(s)", blk.line, 1, source)


def _dialgebra_from(blk: Block, fld, source, validate=True) -> Dialgebra:
    _need_dims(blk, 1, source)
    (n,) = blk.dims
    arrays = {
        "left": la.zeros((n, n, n), fld), "right": la.zeros((n, n, n), fld),
        "alpha": la.zeros((n, n), fld), "beta": la.zeros((n, n), fld),
    }
    # map stanzas are written "j k v" for alpha(e_j) += v e_k, stored at [k, j]
    _fill(blk, arrays, {"left": (n, n, n), "right": (n, n, n), "alpha": (n, n), "beta": (n, n)}, fld, source)
    try:
        return Dialgebra(arrays["left"], arrays["right"], arrays["alpha"].T.copy(), arrays["beta"].T.copy(), blk.label, validate=validate)
    except AlgebraError as exc:
        raise ParseError(str(exc), blk.line, 1, source) from None


def _bracket_from(blk: Block, fld, source) -> BracketAlgebra:
    _need_dims(blk, 1, source)
    (n,) = blk.dims
    arrays = {"bracket": la.zeros((n, n, n), fld), "alpha": la.zeros((n, n), fld), "beta": la.zeros((n, n), fld)}
    _fill(blk, arrays, {"bracket": (n, n, n), "alpha": (n, n), "beta": (n, n)}, fld, source)
    try:
        return BracketAlgebra(
            arrays["bracket"], arrays["alpha"].T.copy(), arrays["beta"].T.copy(), blk.kind_tag or "leibniz", blk.label,
        )
    except AlgebraError as exc:
        raise ParseError(str(exc), blk.line, 1, source) from None


def _operator_from(blk: Block, fld, source) -> np.ndarray:
    if len(blk.dims) not in (1, 2):
        raise ParseError("operator needs dim n or dim n m", blk.line, 1, source)
    n = blk.dims[0]
    m = blk.dims[1] if len(blk.dims) == 2 else n
    arrays = {"entry": la.zeros((n, m), fld)}
    _fill(blk, arrays, {"entry": (n, m)}, fld, source)
    return arrays["entry"].T.copy()


def _module_from(blk: Block, fld, source):
    from .cohomology import BiHomModule

    _need_dims(blk, 1, source)
    (m,) = blk.dims
    arrays = {"alpha": la.zeros((m, m), fld), "beta": la.zeros((m, m), fld)}
    _fill(blk, arrays, {"alpha": (m, m), "beta": (m, m)}, fld, source)
    try:
        return BiHomModule(arrays["alpha"].T.copy(), arrays["beta"].T.copy(), blk.label or "M")
    except AlgebraError as exc:
        raise ParseError(str(exc), blk.line, 1, source) from None


def _cochain_from(blk: Block, fld, source):
    from .cohomology import CochainPair

    _need_dims(blk, 2, source)
    n, m = blk.dims
    arr = la.zeros((2, n, n, m), fld)
    _fill(blk, {"cochain": arr}, {"cochain": (2, n, n, m)}, fld, source)
    return CochainPair(arr[0].copy(), arr[1].copy())


_BUILDERS = {
    "dialgebra": _dialgebra_from,
    "bracketalgebra": _bracket_from,
    "operator": _operator_from,
    "module": _module_from,
    "cochainpair": _cochain_from,
}


def _single(text, kind, fld, source, **kw):
    blocks = parse_blocks(text, source)
    found = [b for b in blocks if b.kind == kind]
    if len(found) != 1:
        raise ParseError(f"expected exactly one {kind} block, found {len(found)}", 1, 1, source)
    return _BUILDERS[kind](found[0], fld, source, **kw)


def parse_dialgebra(text: str, field=QQ, source: str = "<string>", validate: bool = True) -> Dialgebra:
    """With ``validate=False`` non-commuting structure maps are accepted (for checking)."""
    return _single(text, "dialgebra", field, source, validate=validate)


def parse_bracket_algebra(text: str, field=QQ, source: str = "<string>") -> BracketAlgebra:
    return _single(text, "bracketalgebra", field, source)


def parse_operator(text: str, field=QQ, source: str = "<string>") -> np.ndarray:
    """Matrix with column j the image of e_j (``entry j k v``: T(e_j) += v e_k)."""
    return _single(text, "operator", field, source)


def parse_module(text: str, field=QQ, source: str = "<string>"):
    return _single(text, "module", field, source)


def parse_cochain(text: str, field=QQ, source: str = "<string>"):
    return _single(text, "cochainpair", field, source)


def parse_action(text: str, field=QQ, source: str = "<string>", validate: bool = True):
    from .actions import DialgebraAction

    blocks = parse_blocks(text, source)
    heads = [b for b in blocks if b.kind == "action"]
    algs = [b for b in blocks if b.kind == "dialgebra"]
    if len(heads) != 1 or len(algs) != 2:
        raise ParseError("an action file needs one action header and two dialgebra blocks", 1, 1, source)
    D = _dialgebra_from(algs[0], field, source)
    L = _dialgebra_from(algs[1], field, source)
    n, m = D.n, L.n
    arrays = {t: la.zeros((n, m, m) if t.startswith("dl") else (m, n, m), field) for t in MIXACT_TAGS}
    for st in heads[0].stanzas:
        if len(st.args) != 5:
            raise ParseError("mixact takes a tag, three indices and a value", st.line, 1, source)
        (tag, tc), *idx, (vt, vc) = st.args
        if tag not in arrays:
            raise ParseError(f"unknown mixact tag {tag!r}", st.line, tc, source)
        bounds = (n, m, m) if tag.startswith("dl") else (m, n, m)
        pos = tuple(_index(t, c, st.line, b, source) for (t, c), b in zip(idx, bounds))
        arrays[tag][pos] = arrays[tag][pos] + field(_scalar(vt, vc, st.line, source))
    return DialgebraAction(D, L, label=heads[0].label, validate=validate, **arrays)


def parse_any(text: str, field=QQ, source: str = "<string>"):
    """Objects of every block in order (actions are returned whole)."""
    blocks = parse_blocks(text, source)
    if any(b.kind == "action" for b in blocks):
        return [parse_action(text, field, source)]
    return [_BUILDERS[b.kind](b, field, source) for b in blocks]


def read_file(path, kind: str, field=QQ, **kw):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    parser = {
        "dialgebra": parse_dialgebra, "bracketalgebra": parse_bracket_algebra, "operator": parse_operator,
        "module": parse_module, "cochainpair": parse_cochain, "action": parse_action,
    }[kind]
    return parser(text, field, str(path), **kw)


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def _fmt(x) -> str:
    return str(x)


def _tensor_lines(keyword, T):
    out = []
    for idx in np.ndindex(*T.shape):
        v = T[idx]
        if v:
            out.append(f"{keyword} {' '.join(str(i + 1) for i in idx)} {_fmt(v)}")
    return out


def _map_lines(keyword, M):
    # stanza "j k v" means M(e_j) += v e_k, i.e. M[k, j]
    return _tensor_lines(keyword, M.T)


def format_dialgebra(D: Dialgebra, label: str | None = None) -> str:
    lines = [f"dialgebra {label or D.label or 'D'}", f"dim {D.n}"]
    lines += _tensor_lines("left", D.left) + _tensor_lines("right", D.right)
    lines += _map_lines("alpha", D.alpha) + _map_lines("beta", D.beta)
    return "\n".join(lines) + "\n"


def format_bracket_algebra(L: BracketAlgebra) -> str:
    lines = [f"bracketalgebra {L.label or 'L'}", f"dim {L.n}", f"kind {L.kind}"]
    lines += _tensor_lines("bracket", L.bracket) + _map_lines("alpha", L.alpha) + _map_lines("beta", L.beta)
    return "\n".join(lines) + "\n"


def format_operator(T, label: str = "T") -> str:
    T = np.asarray(T, dtype=object)
    m, n = T.shape
    dim = f"dim {n}" if m == n else f"dim {n} {m}"
    return "\n".join([f"operator {label}", dim] + _tensor_lines("entry", T.T)) + "\n"


def format_module(M) -> str:
    lines = [f"module {M.label}", f"dim {M.m}"] + _map_lines("alpha", M.alpha) + _map_lines("beta", M.beta)
    return "\n".join(lines) + "\n"


def format_cochain(T, label: str = "theta") -> str:
    lines = [f"cochainpair {label}", f"dim {T.n} {T.m}"]
    for k, th in ((1, T.theta1), (2, T.theta2)):
        lines += [f"cochain {k} {line.split(' ', 1)[1]}" for line in _tensor_lines("x", th)]
    return "\n".join(lines) + "\n"


def format_action(a) -> str:
    parts = [f"action {a.label or 'action'}\n", format_dialgebra(a.D), format_dialgebra(a.L)]
    lines = []
    for tag in MIXACT_TAGS:
        lines += [f"mixact {tag} {line.split(' ', 1)[1]}" for line in _tensor_lines("x", getattr(a, tag))]
    parts.append("\n".join(lines) + ("\n" if lines else ""))
    return "".join(parts)
