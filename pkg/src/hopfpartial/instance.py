"""Line-oriented instance files: groups, bialgebras, algebras, measurings and maps.

A file is a sequence of sections. A header starts in column 0 and the body
lines below it are indented::

    field Q

    bialgebra H builtin dualgroupalg:K4

    algebra A builtin field

    measuring m H A
      p_e ⊗ 1 -> 1/2
      p_a ⊗ 1 -> 1/2

    cocycle omega m
      p_e ⊗ p_e -> 1/8

Section kinds and their headers:

    group NAME ORDER            rows of the Cayley table, optional ``names`` line
    group NAME builtin SPEC     K4, S3, Z:6, ...
    bialgebra NAME DIM          labels, unit, counit, ``mult i j -> c*k + ...``,
                                ``comult i -> c*(j,k) + ...``, optional antipode rows
    bialgebra NAME builtin SPEC groupalg:G, dualgroupalg:G (G a group section or builtin), sweedler
    algebra NAME DIM            labels, unit, ``mult i j -> c*k + ...``
    algebra NAME builtin SPEC   field, product:N
    measuring NAME H A          ``h ⊗ a -> vector``; ``builtin global`` for h·a = ε(h)a
    cocycle NAME M [inverse-of NAME]    ``h ⊗ k -> vector``; ``builtin trivial``
    wtilde NAME M               same body as cocycle
    map NAME A B                ``a -> vector`` (a linear map between algebras)

Omitted entries are zero. Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .convolution import ConvMap, conv_unit
from .exactlin import QQ, LinMap, LiteralError, VecSpace, field_from_name, zeros
from .groups import FinGroup, GroupError, builtin_group
from .hopf import (FinBialgebra, UnitalAlgebra, field_algebra, hopf_from_spec,
                   product_algebra, tensor_square)
from .partial import MeasuringData, global_measuring
from .twisted import GlobalTwistedAction, TwistedPartialActionData, trivial_partial_cocycle

KINDS = ("group", "bialgebra", "algebra", "measuring", "cocycle", "wtilde", "map")
_TENSOR = re.compile(r"\s*(?:⊗|\(x\))\s*")


class InstanceError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class Section:
    kind: str
    name: str
    args: tuple
    line: int
    body: list = field(default_factory=list)  # (line number, stripped text)
    obj: object = None

    @property
    def builtin(self) -> str | None:
        if len(self.args) >= 2 and self.args[-2] == "builtin":
            return self.args[-1]
        return None


@dataclass
class Instance:
    field: object
    sections: dict  # name -> Section, in file order
    field_line: bool = False

    def __getitem__(self, name):
        return self.sections[name].obj

    def of_kind(self, kind: str) -> list:
        return [s for s in self.sections.values() if s.kind == kind]

    def twisted_data(self, measuring: str | None = None) -> TwistedPartialActionData:
        """The partial data: a measuring with a cocycle (and optional inverse)."""
        cocycles = [s for s in self.of_kind("cocycle")
                    if measuring is None or s.args[0] == measuring]
        omegas = [s for s in cocycles if "inverse-of" not in s.args]
        if measuring is None and len(omegas) > 1:
            omegas = [s for s in omegas if not self.sections[s.args[0]].obj.is_global()]
        if len(omegas) != 1:
            raise InstanceError(f"expected one cocycle on a partial measuring, found {len(omegas)}")
        om = omegas[0]
        inv = [s for s in cocycles if s.args[-2:] == ("inverse-of", om.name)]
        m = self.sections[om.args[0]].obj
        return TwistedPartialActionData(m, om.obj, inv[0].obj if inv else None, om.name)

    def wtilde(self) -> ConvMap:
        ws = self.of_kind("wtilde")
        if len(ws) != 1:
            raise InstanceError(f"expected one wtilde section, found {len(ws)}")
        return ws[0].obj

    def global_action(self):
        """``(GlobalTwistedAction, φ)`` from a global measuring, its cocycle pair and a map."""
        maps = self.of_kind("map")
        if len(maps) != 1:
            raise InstanceError(f"expected one map section, found {len(maps)}")
        target = maps[0].args[1]
        ms = [s for s in self.of_kind("measuring") if s.args[1] == target]
        if len(ms) != 1:
            raise InstanceError(f"expected one measuring on {target!r}")
        cs = [s for s in self.of_kind("cocycle") if s.args[0] == ms[0].name]
        u = [s for s in cs if "inverse-of" not in s.args]
        if len(u) != 1:
            raise InstanceError(f"expected one cocycle on {ms[0].name!r}")
        ui = [s for s in cs if s.args[-2:] == ("inverse-of", u[0].name)]
        if len(ui) != 1:
            raise InstanceError(f"expected the inverse of {u[0].name!r}")
        m = ms[0].obj
        g = GlobalTwistedAction(m.hopf, m.target, m.table, u[0].obj, ui[0].obj)
        return g, maps[0].obj


# ---------------------------------------------------------------- parsing


def parse_instance(path, field=None, context: Instance | None = None) -> Instance:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_text(text, field, context)
    except InstanceError as e:
        err = InstanceError(f"{path}: {e}")
        err.line = e.line
        raise err from None


def parse_text(text: str, field=None, context: Instance | None = None) -> Instance:
    lines = text.splitlines()
    F = None
    field_line = False
    sections: dict = {}
    cur: Section | None = None
    for no, raw in enumerate(lines, 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        if raw[0] in " \t":
            if cur is None:
                raise InstanceError("indented line outside a section", no)
            cur.body.append((no, raw.strip()))
            continue
        words = raw.split()
        if words[0] == "field":
            if sections or F is not None or len(words) != 2:
                raise InstanceError("'field NAME' must be the first line", no)
            try:
                F = field_from_name(words[1])
            except ValueError as e:
                raise InstanceError(str(e), no) from None
            field_line = True
            continue
        if words[0] not in KINDS:
            raise InstanceError(f"unknown section kind {words[0]!r}", no)
        if len(words) < 2:
            raise InstanceError(f"{words[0]} section needs a name", no)
        if words[1] in sections:
            raise InstanceError(f"duplicate section name {words[1]!r}", no)
        cur = Section(words[0], words[1], tuple(words[2:]), no)
        sections[cur.name] = cur
    if F is None:
        F = field or (context.field if context else QQ)
    elif field is not None and field != F:
        raise InstanceError(f"file is over {F.name} but {field.name} was requested")
    if context is not None and context.field != F:
        raise InstanceError("files are over different fields")
    inst = Instance(F, sections, field_line)
    for s in sections.values():
        _build(s, inst, context)
    return inst


def _lookup(inst: Instance, context, name: str, kind: str, line: int):
    for src in (inst, context):
        if src is not None and name in src.sections:
            s = src.sections[name]
            if s.kind != kind:
                raise InstanceError(f"{name!r} is a {s.kind}, expected a {kind}", line)
            if s.obj is None:
                raise InstanceError(f"{kind} {name!r} is used before it is defined", line)
            return s.obj
    raise InstanceError(f"undefined {kind} {name!r}", line)


def _vector(tokens, F, dim, line) -> tuple:
    vals, i = [], 0
    while i < len(tokens):
        t = tokens[i]
        if i + 2 < len(tokens) and tokens[i + 1] == "mod":
            t = f"{t} mod {tokens[i + 2]}"
            i += 2
        i += 1
        try:
            vals.append(F.parse(t))
        except LiteralError as e:
            raise InstanceError(str(e), line) from None
    if dim is not None and len(vals) != dim:
        raise InstanceError(f"expected {dim} entries, got {len(vals)}", line)
    return tuple(vals)


def _literal(text, F, line):
    try:
        return F.parse(text)
    except LiteralError as e:
        raise InstanceError(str(e), line) from None


def _index(text, dim, line) -> int:
    if not re.fullmatch(r"\d+", text) or int(text) >= dim:
        raise InstanceError(f"bad basis index {text!r}", line)
    return int(text)


def _terms(text, line):
    """``c*k + c*k`` or ``c*(j,k) + ...`` split into (coeff text, target text)."""
    out = []
    for part in re.split(r"\s+\+\s+", text.strip()):
        if "*" not in part:
            raise InstanceError(f"expected coeff*target, got {part!r}", line)
        c, _, t = part.partition("*")
        out.append((c.strip(), t.strip()))
    return out


def _build(s: Section, inst: Instance, context) -> None:
    F = inst.field
    b = s.builtin
    try:
        if s.kind == "group":
            s.obj = _build_group(s, b)
        elif s.kind == "bialgebra":
            s.obj = _build_bialgebra(s, b, inst, context, F)
        elif s.kind == "algebra":
            s.obj = _build_algebra(s, b, F)
        elif s.kind == "measuring":
            s.obj = _build_measuring(s, b, inst, context, F)
        elif s.kind in ("cocycle", "wtilde"):
            s.obj = _build_pairmap(s, b, inst, context, F)
        else:
            s.obj = _build_map(s, inst, context, F)
    except InstanceError:
        raise
    except (ValueError, GroupError) as e:
        raise InstanceError(f"{s.kind} {s.name}: {e}", s.line) from None


def _build_group(s, b) -> FinGroup:
    if b:
        return builtin_group(b)
    if len(s.args) != 1 or not s.args[0].isdigit():
        raise InstanceError("expected 'group NAME ORDER'", s.line)
    n = int(s.args[0])
    body = list(s.body)
    names = tuple(str(i) for i in range(n))
    if body and body[0][1].split()[0] == "names":
        names = tuple(body[0][1].split()[1:])
        body = body[1:]
    if len(body) != n:
        raise InstanceError(f"expected {n} Cayley rows, got {len(body)}", s.line)
    rows = tuple(tuple(_index(t, n, no) for t in text.split()) for no, text in body)
    return FinGroup(s.name, rows, names)


def _build_bialgebra(s, b, inst, context, F) -> FinBialgebra:
    if b:
        groups = {}
        kind, _, gname = b.partition(":")
        if gname:
            try:
                groups[gname] = _lookup(inst, context, gname, "group", s.line)
            except InstanceError:
                try:
                    builtin_group(gname)
                except GroupError:
                    raise InstanceError(f"undefined group {gname!r}", s.line) from None
        return hopf_from_spec(b, F, groups)
    if len(s.args) != 1 or not s.args[0].isdigit():
        raise InstanceError("expected 'bialgebra NAME DIM'", s.line)
    n = int(s.args[0])
    labels, unit, counit, antipode = None, None, None, []
    table = [[zeros(n, F) for _ in range(n)] for _ in range(n)]
    comult = [[] for _ in range(n)]
    for no, text in s.body:
        key, _, rest = text.partition(" ")
        if key == "labels":
            labels = tuple(rest.split())
            if len(labels) != n:
                raise InstanceError(f"expected {n} labels", no)
        elif key == "unit":
            unit = _vector(rest.split(), F, n, no)
        elif key == "counit":
            counit = _vector(rest.split(), F, n, no)
        elif key == "antipode":
            antipode.append(_vector(rest.split(), F, n, no))
        elif key == "mult":
            i, j, vec = _mult_line(rest, n, F, no)
            table[i][j] = vec
        elif key == "comult":
            lhs, arrow, rhs = rest.partition("->")
            if not arrow:
                raise InstanceError("expected 'comult i -> c*(j,k) + ...'", no)
            i = _index(lhs.strip(), n, no)
            for c, t in _terms(rhs, no):
                m = re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", t)
                if not m:
                    raise InstanceError(f"expected (j,k), got {t!r}", no)
                comult[i].append((_index(m.group(1), n, no), _index(m.group(2), n, no),
                                  _literal(c, F, no)))
        else:
            raise InstanceError(f"unknown bialgebra line {key!r}", no)
    if labels is None or unit is None or counit is None:
        raise InstanceError("bialgebra needs labels, unit and counit", s.line)
    S = None
    if antipode:
        if len(antipode) != n:
            raise InstanceError(f"antipode needs {n} rows", s.line)
        S = LinMap(VecSpace(labels), VecSpace(labels), tuple(antipode), F)
    return FinBialgebra(labels, tuple(tuple(r) for r in table), unit,
                        tuple(tuple(c) for c in comult), counit, S, F, s.name)


def _mult_line(rest, n, F, no):
    lhs, arrow, rhs = rest.partition("->")
    ij = lhs.split()
    if not arrow or len(ij) != 2:
        raise InstanceError("expected 'mult i j -> c*k + ...'", no)
    i, j = (_index(x, n, no) for x in ij)
    vec = list(zeros(n, F))
    for c, t in _terms(rhs, no):
        k = _index(t, n, no)
        vec[k] = vec[k] + _literal(c, F, no)
    return i, j, tuple(vec)


def _build_algebra(s, b, F) -> UnitalAlgebra:
    if b:
        if b == "field":
            A = field_algebra(F)
        elif b.startswith("product:") and b[8:].isdigit():
            A = product_algebra(int(b[8:]), F)
        else:
            raise InstanceError(f"unknown builtin algebra {b!r}", s.line)
        return UnitalAlgebra(A.labels, A.table, A.unit, F, s.name)
    if len(s.args) != 1 or not s.args[0].isdigit():
        raise InstanceError("expected 'algebra NAME DIM'", s.line)
    n = int(s.args[0])
    labels, unit = None, None
    table = [[zeros(n, F) for _ in range(n)] for _ in range(n)]
    for no, text in s.body:
        key, _, rest = text.partition(" ")
        if key == "labels":
            labels = tuple(rest.split())
            if len(labels) != n:
                raise InstanceError(f"expected {n} labels", no)
        elif key == "unit":
            unit = _vector(rest.split(), F, n, no)
        elif key == "mult":
            i, j, vec = _mult_line(rest, n, F, no)
            table[i][j] = vec
        else:
            raise InstanceError(f"unknown algebra line {key!r}", no)
    if labels is None or unit is None:
        raise InstanceError("algebra needs labels and unit", s.line)
    return UnitalAlgebra(labels, tuple(tuple(r) for r in table), unit, F, s.name)


def _label_index(labels, text, what, no) -> int:
    try:
        return labels.index(text)
    except ValueError:
        raise InstanceError(f"unknown {what} basis label {text!r}", no) from None


def _arrow(text, no):
    lhs, arrow, rhs = text.partition("->")
    if not arrow:
        raise InstanceError("expected '... -> vector'", no)
    return lhs.strip(), rhs.split()


def _build_measuring(s, b, inst, context, F) -> MeasuringData:
    if len(s.args) < 2:
        raise InstanceError("expected 'measuring NAME HOPF ALGEBRA'", s.line)
    H = _lookup(inst, context, s.args[0], "bialgebra", s.line)
    A = _lookup(inst, context, s.args[1], "algebra", s.line)
    if b:
        if b != "global" or len(s.args) != 4:
            raise InstanceError(f"unknown builtin measuring {b!r}", s.line)
        return global_measuring(H, A)
    if len(s.args) != 2:
        raise InstanceError("expected 'measuring NAME HOPF ALGEBRA'", s.line)
    table = [[zeros(A.dim, F) for _ in range(A.dim)] for _ in range(H.dim)]
    for no, text in s.body:
        lhs, vec = _arrow(text, no)
        parts = _TENSOR.split(lhs)
        if len(parts) != 2:
            raise InstanceError("expected 'h ⊗ a -> vector'", no)
        i = _label_index(H.labels, parts[0], "bialgebra", no)
        j = _label_index(A.labels, parts[1], "algebra", no)
        table[i][j] = _vector(vec, F, A.dim, no)
    return MeasuringData(H, A, tuple(tuple(r) for r in table))


def _build_pairmap(s, b, inst, context, F) -> ConvMap:
    if not s.args:
        raise InstanceError(f"expected '{s.kind} NAME MEASURING'", s.line)
    m = _lookup(inst, context, s.args[0], "measuring", s.line)
    rest = s.args[1:]
    if rest[:1] == ("inverse-of",):
        if s.kind != "cocycle" or len(rest) != 2:
            raise InstanceError("expected 'inverse-of NAME'", s.line)
        _lookup(inst, context, rest[1], "cocycle", s.line)
        rest = ()
    H, A = m.hopf, m.target
    if b:
        if rest != ("builtin", b):
            raise InstanceError("unexpected header arguments", s.line)
        if b == "trivial":
            return trivial_partial_cocycle(m)
        if b == "unit":
            return conv_unit(tensor_square(H), A)
        raise InstanceError(f"unknown builtin {s.kind} {b!r}", s.line)
    if rest:
        raise InstanceError("unexpected header arguments", s.line)
    n = H.dim
    vals = [zeros(A.dim, F) for _ in range(n * n)]
    for no, text in s.body:
        lhs, vec = _arrow(text, no)
        parts = _TENSOR.split(lhs)
        if len(parts) != 2:
            raise InstanceError("expected 'h ⊗ k -> vector'", no)
        i = _label_index(H.labels, parts[0], "bialgebra", no)
        k = _label_index(H.labels, parts[1], "bialgebra", no)
        vals[i * n + k] = _vector(vec, F, A.dim, no)
    return ConvMap(tensor_square(H), A, tuple(vals))


def _build_map(s, inst, context, F) -> LinMap:
    if len(s.args) != 2:
        raise InstanceError("expected 'map NAME SOURCE TARGET'", s.line)
    A = _lookup(inst, context, s.args[0], "algebra", s.line)
    B = _lookup(inst, context, s.args[1], "algebra", s.line)
    cols = [zeros(B.dim, F) for _ in range(A.dim)]
    for no, text in s.body:
        lhs, vec = _arrow(text, no)
        cols[_label_index(A.labels, lhs, "algebra", no)] = _vector(vec, F, B.dim, no)
    return LinMap.from_columns(VecSpace(A.labels), VecSpace(B.labels), cols, F)


# ---------------------------------------------------------------- printing


def _fmt(F, x) -> str:
    if F == QQ:
        return F.format(x)
    return str(F(x).v)


def _fmt_vec(F, v) -> str:
    return " ".join(_fmt(F, x) for x in v)


def _fmt_terms(F, vec) -> str:
    return " + ".join(f"{_fmt(F, c)}*{k}" for k, c in enumerate(vec) if c)


def format_section(s: Section) -> str:
    head = " ".join((s.kind, s.name) + s.args)
    if s.builtin:
        return head
    obj = s.obj
    body = []
    if s.kind == "group":
        body.append("names " + " ".join(obj.names))
        body += [" ".join(str(x) for x in row) for row in obj.cayley]
    elif s.kind in ("bialgebra", "algebra"):
        F = obj.field
        body.append("labels " + " ".join(obj.labels))
        body.append("unit " + _fmt_vec(F, obj.unit))
        if s.kind == "bialgebra":
            body.append("counit " + _fmt_vec(F, obj.counit))
        for i, row in enumerate(obj.table):
            for j, vec in enumerate(row):
                if any(vec):
                    body.append(f"mult {i} {j} -> {_fmt_terms(F, vec)}")
        if s.kind == "bialgebra":
            for i, terms in enumerate(obj.comult):
                acc: dict = {}
                for j, k, c in terms:
                    acc[(j, k)] = acc.get((j, k), F.zero) + c
                parts = [f"{_fmt(F, c)}*({j},{k})" for (j, k), c in sorted(acc.items()) if c]
                if parts:
                    body.append(f"comult {i} -> " + " + ".join(parts))
            if obj.antipode is not None:
                body += ["antipode " + _fmt_vec(F, r) for r in obj.antipode.matrix]
    elif s.kind == "measuring":
        H, A, F = obj.hopf, obj.target, obj.field
        for i, row in enumerate(obj.table):
            for j, vec in enumerate(row):
                if any(vec):
                    body.append(f"{H.labels[i]} ⊗ {A.labels[j]} -> {_fmt_vec(F, vec)}")
    elif s.kind in ("cocycle", "wtilde"):
        base = obj.source.labels
        n = int(round(len(base) ** 0.5))
        hl = [base[i * n][1:-1].split("⊗")[0] for i in range(n)]
        for idx, vec in enumerate(obj.values):
            if any(vec):
                body.append(f"{hl[idx // n]} ⊗ {hl[idx % n]} -> {_fmt_vec(obj.field, vec)}")
    else:
        F = obj.field
        for j, lab in enumerate(obj.domain.labels):
            col = obj.column(j)
            if any(col):
                body.append(f"{lab} -> {_fmt_vec(F, col)}")
    return "\n".join([head] + ["  " + line for line in body])


def format_instance(inst: Instance) -> str:
    parts = []
    if inst.field_line or inst.field != QQ:
        parts.append(f"field {inst.field.name}")
    parts += [format_section(s) for s in inst.sections.values()]
    return "\n\n".join(parts) + "\n"


# ---------------------------------------------------------------- building instances


class InstanceBuilder:
    """Assemble an Instance from in-memory objects, for saving."""

    def __init__(self, F=QQ):
        self.inst = Instance(F, {}, F != QQ)

    def add(self, kind: str, name: str, obj, *args, builtin: str | None = None) -> str:
        if kind not in KINDS:
            raise ValueError(kind)
        a = tuple(args) + (("builtin", builtin) if builtin else ())
        self.inst.sections[name] = Section(kind, name, a, 0, [], obj)
        return name

    def text(self) -> str:
        return format_instance(self.inst)
