"""Presentation files and the ``operad-forge`` command-line driver.

A presentation file is UTF-8 text, one entry per line::

    operad-forge 1
    kind: "operad"
    level 2: [[1,2],[2,1]]
    swap 2 1: [[2,1],[1,2]]
    gamma 2 1 1: [[[[1,2],[1],[1]],[1,2]], ...]

Each line is a key, optional integer fields, a colon, and one JSON value.
Labels are JSON with tuples written as arrays.  Blank lines and lines
starting with ``#`` are ignored on load; ``save`` writes no comments, in a
fixed key order, so saving a loaded canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

from . import algebras as al
from . import bar as br
from . import envelope as ev
from . import ground as gd
from . import operads as op
from . import products as pr
from . import seq as sq
from .ground import FINSET, FINVEC, BasedObject, GroundObject
from .operads import Operad
from .seq import LamSeq, Report, TruncationError

MAGIC = "operad-forge 1"
EXIT_OK, EXIT_FAIL, EXIT_TRUNC, EXIT_PARSE, EXIT_USAGE = 0, 2, 3, 65, 64


class PresentationError(ValueError):
    """A malformed presentation file; the message names the line and the entry."""


# labels


def encode(x):
    if isinstance(x, tuple):
        return [encode(y) for y in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


def decode(x):
    if isinstance(x, list):
        return tuple(decode(y) for y in x)
    return x


def dumps(x) -> str:
    return json.dumps(encode(x), separators=(",", ":"), ensure_ascii=False)


# writing


def _seq_lines(D: LamSeq) -> list:
    lines = [f"tag: {dumps(D.tag.value)}", f"N: {D.N}"]
    for n, L in enumerate(D.levels):
        lines.append(f"level {n}: {dumps(L.labels)}")
    for (n, i), f in sorted(D.swaps.items()):
        lines.append(f"swap {n} {i}: {dumps(_data(f))}")
    for (n, i), f in sorted(D.degs.items()):
        lines.append(f"deg {n} {i}: {dumps(_data(f))}")
    lines.append(f"base: {dumps(_data(D.base)) if D.base is not None else 'null'}")
    return lines


def _data(f) -> tuple:
    if f.tag is FINSET:
        return f.data
    return tuple(tuple((y, str(c)) for y, c in col) for col in f.data)


def dump_operad(O: Operad) -> str:
    lines = [MAGIC, 'kind: "operad"', f"name: {dumps(O.name)}"] + _seq_lines(O.C)
    lines.append(f"unit: {dumps(O.unit)}")
    for k, J in O.gamma_keys():
        dom = O.gamma_domain(k, J).labels
        if not dom:
            continue
        rows = tuple((t, O.gamma(t[0], t[1:], J)) for t in dom)
        head = " ".join(str(v) for v in (k,) + tuple(J))
        lines.append(f"gamma {head}: {dumps(rows)}")
    return "\n".join(lines) + "\n"


def dump_seq(D: LamSeq, name: str = "sequence") -> str:
    return "\n".join([MAGIC, 'kind: "sequence"', f"name: {dumps(name)}"] + _seq_lines(D)) + "\n"


def dump_algebra(A: al.AlgebraStructure, operad_ref: str) -> str:
    lines = [MAGIC, 'kind: "algebra"', f"name: {dumps(A.name)}", f"operad: {dumps(operad_ref)}",
             f"N: {A.C.N}", f"carrier: {dumps(A.X.carrier.labels)}", f"point: {dumps(A.X.point)}"]
    rows = tuple((z, A.theta(z)) for z in A.CX.carrier.labels)
    lines.append(f"theta: {dumps(rows)}")
    return "\n".join(lines) + "\n"


def dump_category(E: ev.EnrichedCat, operad_ref: str = "") -> str:
    lines = [MAGIC, 'kind: "category"', f"name: {dumps(E.name)}", f"operad: {dumps(operad_ref)}", f"N: {E.N}"]
    R = E.objects
    for m in R:
        for n in R:
            lines.append(f"hom {m} {n}: {dumps(E.hom[(m, n)].labels)}")
    for n in R:
        lines.append(f"identity {n}: {dumps(E.identity[n])}")
    for m in R:
        for n in R:
            for p in R:
                t = E.compose_table(m, n, p)
                if t:
                    rows = tuple((g, f, t[(g, f)]) for g in E.hom[(n, p)].labels for f in E.hom[(m, n)].labels)
                    lines.append(f"compose {m} {n} {p}: {dumps(rows)}")
    return "\n".join(lines) + "\n"


def save(obj, path: str | Path, operad_ref: str = "") -> None:
    if isinstance(obj, Operad):
        text = dump_operad(obj)
    elif isinstance(obj, al.AlgebraStructure):
        text = dump_algebra(obj, operad_ref or obj.C.name)
    elif isinstance(obj, ev.EnrichedCat):
        text = dump_category(obj, operad_ref)
    elif isinstance(obj, LamSeq):
        text = dump_seq(obj)
    else:
        raise PresentationError(f"cannot save {type(obj).__name__}")
    Path(path).write_text(text, encoding="utf-8")


# reading


def parse(text: str) -> dict:
    """Entries keyed by (key, *ints) with (line number, decoded value)."""
    entries: dict = {}
    lines = text.split("\n")
    first = next((i for i, s in enumerate(lines) if s.strip() and not s.startswith("#")), None)
    if first is None or lines[first].strip() != MAGIC:
        raise PresentationError(f"line {1 if first is None else first + 1}: expected header {MAGIC!r}")
    for i, raw in enumerate(lines[first + 1:], first + 2):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        head, sep, body = s.partition(":")
        if not sep:
            raise PresentationError(f"line {i}: missing ':'")
        words = head.split()
        try:
            key = (words[0],) + tuple(int(w) for w in words[1:])
        except (IndexError, ValueError):
            raise PresentationError(f"line {i}: bad entry name {head!r}") from None
        try:
            value = decode(json.loads(body))
        except json.JSONDecodeError as exc:
            raise PresentationError(f"line {i}: entry {head!r}: {exc.msg}") from None
        if key in entries:
            raise PresentationError(f"line {i}: duplicate entry {head!r}")
        entries[key] = (i, value)
    return entries


def _get(entries: dict, *key, default=...):
    hit = entries.get(tuple(key))
    if hit is None:
        if default is not ...:
            return default
        raise PresentationError(f"missing entry {' '.join(str(k) for k in key)!r}")
    return hit[1]


def _where(entries: dict, *key) -> str:
    hit = entries.get(tuple(key))
    return f"line {hit[0]}" if hit else "file"


def _morphism(entries, src, tgt, tag, *key):
    data = _get(entries, *key)
    if tag is FINVEC:
        data = tuple(tuple((y, Fraction(c)) for y, c in col) for col in data)
    try:
        return gd.GroundMorphism(src, tgt, data)
    except gd.GroundError as exc:
        raise PresentationError(f"{_where(entries, *key)}: entry {' '.join(map(str, key))!r}: {exc}") from None


def _load_seq(entries: dict) -> LamSeq:
    tag = gd.GroundTag(_get(entries, "tag"))
    N = _get(entries, "N")
    levels = [GroundObject(tag, _get(entries, "level", n)) for n in range(N + 1)]
    swaps = {(n, i): _morphism(entries, levels[n], levels[n], tag, "swap", n, i)
             for n in range(2, N + 1) for i in range(1, n)}
    degs = {(n, i): _morphism(entries, levels[n], levels[n - 1], tag, "deg", n, i)
            for n in range(1, N + 1) for i in range(1, n + 1)}
    base = None
    if _get(entries, "base", default=None) is not None:
        base = _morphism(entries, gd.unit(tag), levels[0], tag, "base")
    return LamSeq(tag, N, levels, swaps, degs, base)


def _load_operad(entries: dict) -> Operad:
    C = _load_seq(entries)
    if C.tag is not FINSET:
        raise PresentationError("operads are presented over finset")
    tables: dict = {}
    for key, (line, rows) in entries.items():
        if key[0] != "gamma":
            continue
        k, J = key[1], key[2:]
        name = " ".join(map(str, key))
        if len(J) != k or any(j > C.N for j in J) or k > C.N or sum(J) > C.N:
            raise PresentationError(f"line {line}: entry {name!r}: arity {k} with inputs {list(J)} outside truncation")
        t = {}
        for row in rows:
            if len(row) != 2 or not isinstance(row[0], tuple) or len(row[0]) != k + 1:
                raise PresentationError(f"line {line}: entry {name!r}: row {dumps(row)} needs {k + 1} arguments")
            if row[1] not in C.levels[sum(J)]:
                raise PresentationError(f"line {line}: entry {name!r}: value {dumps(row[1])} not in level {sum(J)}")
            t[row[0]] = row[1]
        tables[(k, tuple(J))] = t
    O = Operad(C, _get(entries, "unit"), tables, _get(entries, "name", default="operad"))
    for k, J in O.gamma_keys():
        dom = O.gamma_domain(k, J).labels
        if dom and set(dom) != set(tables.get((k, J), {})):
            raise PresentationError(f"entry 'gamma {' '.join(map(str, (k,) + J))}': table incomplete")
    return O


def _load_algebra(entries: dict, base_dir: Path) -> al.AlgebraStructure:
    N = _get(entries, "N")
    C = resolve(_get(entries, "operad"), N, base_dir)
    if not isinstance(C, Operad):
        raise PresentationError("algebra files must reference an operad")
    X = gd.based_set(_get(entries, "carrier"), _get(entries, "point"))
    table = dict(_get(entries, "theta"))
    Xw = al.weighted(X, C.N)
    CX = al.Monad(C)(Xw)
    missing = [z for z in CX.carrier.labels if z not in table]
    if missing:
        raise PresentationError(f"{_where(entries, 'theta')}: entry 'theta' has no value at {dumps(missing[0])}")
    try:
        theta = gd.GroundMorphism(CX.carrier, Xw.carrier, [table[z] for z in CX.carrier.labels])
    except gd.GroundError as exc:
        raise PresentationError(f"{_where(entries, 'theta')}: entry 'theta': {exc}") from None
    return al.AlgebraStructure(C, Xw, theta, CX, None, _get(entries, "name", default="algebra"))


def _load_category(entries: dict) -> ev.EnrichedCat:
    N = _get(entries, "N")
    R = range(N + 1)
    hom = {(m, n): gd.finset(_get(entries, "hom", m, n)) for m in R for n in R}
    ident = {n: _get(entries, "identity", n) for n in R}
    tables = {}
    for m in R:
        for n in R:
            for p in R:
                rows = _get(entries, "compose", m, n, p, default=())
                tables[(m, n, p)] = {(g, f): h for g, f, h in rows}

    def comp(g, f, m, n, p):
        try:
            return tables[(m, n, p)][(g, f)]
        except KeyError:
            raise PresentationError(f"entry 'compose {m} {n} {p}': no value for {dumps((g, f))}") from None
    return ev.EnrichedCat(N, hom, comp, ident, name=_get(entries, "name", default="category"))


def loads(text: str, base_dir: Path | None = None):
    entries = parse(text)
    kind = _get(entries, "kind")
    if kind == "operad":
        return _load_operad(entries)
    if kind == "sequence":
        return _load_seq(entries)
    if kind == "algebra":
        return _load_algebra(entries, base_dir or Path("."))
    if kind == "category":
        return _load_category(entries)
    raise PresentationError(f"{_where(entries, 'kind')}: unknown kind {kind!r}")


def load(path: str | Path):
    p = Path(path)
    return loads(p.read_text(encoding="utf-8"), p.parent)


# targets


ALIASES = {"i1": "trivial"}


def resolve(target: str, N: int, base_dir: Path | None = None):
    """A presentation file path, or a builtin name (optionally with '.op'); 'end:a,b' is End of {*,a,b}."""
    for cand in ([base_dir / target] if base_dir else []) + [Path(target)]:
        if cand.is_file():
            return load(cand)
    name = target[:-3] if target.endswith(".op") else target
    name = ALIASES.get(name, name)
    if name.startswith("end:"):
        pts = [p for p in name[4:].split(",") if p]
        return op.end(gd.based_set(["*"] + pts), N)
    if name in op.BUILTINS:
        return op.builtin(name, N)
    raise PresentationError(f"no file or builtin named {target!r}")


def _operad(target: str, N: int) -> Operad:
    obj = resolve(target, N)
    if not isinstance(obj, Operad):
        raise PresentationError(f"{target!r} is not an operad")
    return obj


def _seq(target: str, N: int) -> LamSeq:
    obj = resolve(target, N)
    if isinstance(obj, Operad):
        return obj.C
    if isinstance(obj, LamSeq):
        return obj
    raise PresentationError(f"{target!r} is not a sequence")


def _based(points: str) -> BasedObject:
    return gd.based_set(["*"] + [p for p in points.split(",") if p and p != "*"])


def make_algebra(C: Operad, kind: str, X: str = "a") -> al.AlgebraStructure:
    """Named algebras: free on X, idem / z2 monoids on {*,a}, level0, or a presentation file."""
    base = _based(X)
    if kind == "free":
        return al.free_algebra(C, base)
    if kind == "level0":
        return al.level_zero_algebra(C)
    if kind in ("idem", "z2"):
        sq_val = "a" if kind == "idem" else "*"

        def mult(x, y):
            if x == "*":
                return y
            if y == "*":
                return x
            return sq_val
        return al.monoid_algebra(C, gd.based_set(["*", "a"]), mult, kind)
    obj = load(kind)
    if not isinstance(obj, al.AlgebraStructure):
        raise PresentationError(f"{kind!r} is not an algebra")
    return obj


# commands


class Outcome:
    def __init__(self, command: str):
        self.command = command
        self.reports: list = []
        self.data: dict = {}

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def add(self, rep: Report) -> Report:
        self.reports.append(rep)
        return rep

    def text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.ok else 'FAIL'}"]
        for k, v in self.data.items():
            lines.append(f"  {k}: {_show(v)}")
        for r in self.reports:
            lines.extend("  " + s for s in r.lines())
        return "\n".join(lines)

    def json(self) -> str:
        return json.dumps({"command": self.command, "ok": self.ok, "data": encode_data(self.data),
                           "reports": [r.to_dict() for r in self.reports]}, indent=2, sort_keys=True,
                          ensure_ascii=False)


def _show(v) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_show(x)}" for k, x in v.items())
    return str(v)


def encode_data(v):
    if isinstance(v, dict):
        return {str(k): encode_data(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_data(x) for x in v]
    return v


def _sizes_equal(out: Outcome, a: list, b: list, what: str) -> None:
    rep = out.add(Report(what))
    for n, (x, y) in enumerate(zip(a, b)):
        rep.check(x == y, "levelwise size", (f"n={n}",), f"{x} vs {y}")


def cmd_check(args, out: Outcome) -> None:
    obj = resolve(args.target, args.N)
    if isinstance(obj, Operad):
        out.data["sizes"] = obj.C.sizes()
        out.add(sq.validate(obj.C))
        out.add(op.validate_operad(obj, budget=None))
        if args.oracle:
            M = op.to_monoid(obj)
            out.add(op.validate_monoid(M))
            out.add(op.operads_equal(op.from_monoid(M), obj))
    elif isinstance(obj, LamSeq):
        out.data["sizes"] = obj.sizes()
        out.add(sq.validate(obj))
    elif isinstance(obj, al.AlgebraStructure):
        out.data["carrier"] = obj.X.size
        out.add(al.validate_algebra(obj))
    elif isinstance(obj, ev.EnrichedCat):
        out.data["homs"] = {f"{m},{n}": s for (m, n), s in obj.sizes().items()}
        out.add(ev.validate_category(obj))


def cmd_day(args, out: Outcome) -> None:
    D, E = _seq(args.left, args.N), _seq(args.right, args.N)
    closed = pr.day_closed(D, E)
    out.data["closed"] = closed.sizes()
    rep = out.add(Report("closed-form count Σ_{j+k=n} |D(j)||E(k)| binom(n,j)"))
    for n in range(D.N + 1):
        cnt = sum(D.levels[j].size * E.levels[n - j].size * comb(n, j) for j in range(n + 1))
        if D.tag is FINSET:
            rep.check(cnt == closed.levels[n].size, "count", (f"n={n}",), f"{cnt} vs {closed.levels[n].size}")
    if args.oracle:
        naive = pr.day_naive(D, E)
        out.data["naive"] = naive.sizes()
        _, ok = pr.iota_compare(D, E, closed, naive)
        out.add(Report("ι closed → naive")).check(ok, "ι bijective, natural, inverse well defined", ())


def cmd_kelly(args, out: Outcome) -> None:
    D, E = _seq(args.left, args.N), _seq(args.right, args.N)
    K = pr.kelly(D, E)
    out.data["closed"] = K.sizes()
    if K.approximate:
        out.data["note"] = "top operator levels truncated"
    out.add(sq.validate(K))
    if args.oracle:
        K2 = pr.kelly(D, E, "lambda_naive")
        out.data["naive"] = K2.sizes()
        _sizes_equal(out, K.sizes(), K2.sizes(), "closed vs naive Kelly sizes")


def cmd_power(args, out: Outcome) -> None:
    E = _seq(args.target, args.N)
    P = pr.day_power(E, args.k)
    out.data["closed"] = P.sizes()
    out.add(sq.validate(P))
    if args.oracle:
        Q = pr.naive_power(E, args.k)
        out.data["naive"] = Q.sizes()
        phi = pr.power_to_naive(E, args.k, P, Q)
        out.add(Report("closed power → iterated convolution")).check(pr.levelwise_iso(phi), "levelwise iso", ())


def cmd_monad(args, out: Outcome) -> None:
    C = _operad(args.target, args.N)
    X = _based(args.X)
    CX, _, _ = al.monad(C, X)
    out.data["C̄X"] = CX.size
    if args.oracle:
        T = pr.tensor_lambda(C.C, al.weighted(X, C.N), "naive")
        out.data["naive C⊗_Λ X^⊗*"] = T.size
    out.add(al.validate_monad(C, X))


def _bar_inputs(args):
    C = _operad(args.target, args.N)
    return al.right_regular(C), make_algebra(C, args.algebra, args.X)


def cmd_bar(args, out: Outcome) -> None:
    Mo, A = _bar_inputs(args)
    S = br.bar(Mo, A, args.form, args.Q)
    out.data["form"] = args.form
    out.data["sizes"] = S.sizes()
    out.add(br.validate_simplicial(S))


def cmd_compare_bars(args, out: Outcome) -> None:
    Mo, A = _bar_inputs(args)
    forms = {}
    for f in br.FORMS:
        forms[f] = br.bar(Mo, A, f, args.Q)
        out.add(br.validate_simplicial(forms[f]))
    out.data["sizes"] = {f: S.sizes() for f, S in forms.items()}
    out.add(br.compare_bars(Mo, A, args.Q, forms))


def cmd_chain(args, out: Outcome) -> None:
    Mo, A = _bar_inputs(args)
    S = br.linearize_simplicial(br.bar(Mo, A, args.form, args.Q))
    cc = br.chain_complex(S)
    out.add(cc.check_dd())
    out.data["dims"] = cc.dims()
    out.data["ranks"] = cc.ranks()
    out.data["betti"] = cc.betti()
    e1, e2 = cc.euler(), cc.euler_from_homology()
    out.data["euler"] = e1
    out.add(Report("Euler characteristic")).check(e1 == e2, "alternating dimensions = alternating Betti numbers",
                                                  (), f"{e1} vs {e2}")


def cmd_envelope(args, out: Outcome) -> None:
    C = _operad(args.target, args.N)
    E = ev.envelope(C)
    out.data["homs"] = {f"{m},{n}": s for (m, n), s in E.sizes().items()}
    out.add(ev.validate_category(E))
    out.add(ev.check_envelope(E))
    out.add(ev.validate_pairing(E))
    if args.save:
        save(E, args.save, args.target)


def cmd_operators(args, out: Outcome) -> None:
    C = _operad(args.target, args.N)
    O = ev.cat_of_operators(C)
    out.data["homs"] = {f"{m},{n}": s for (m, n), s in O.sizes().items()}
    out.add(ev.validate_category(O, budget=args.budget))
    out.add(ev.validate_pairing(O))
    out.add(ev.check_ps_restriction(ev.envelope(C), O))


def cmd_omega(args, out: Outcome) -> None:
    C = _operad(args.target, args.N)
    E = ev.envelope(C)
    for m in E.objects:
        for n in E.objects:
            out.add(ev.check_omega(E, m, n))


def cmd_hw(args, out: Outcome) -> None:
    H = ev.HW(ev.FinSetMonoidal(args.tensor), args.N)
    try:
        S = H.seq(args.A, args.B)
        O = H.operad(args.B)
    except ev.EnvelopeError as exc:
        out.add(Report("unit condition")).fail("W(J,B) ≅ I", (f"B={args.B}",), str(exc))
        return
    out.data["H(A,B)"] = S.sizes()
    out.data["H(B,B)"] = O.C.sizes()
    out.add(sq.validate(S))
    out.add(op.validate_operad(O, budget=None))
    try:
        out.add(al.validate_module(H.right_module(args.A, args.B)))
        out.add(al.validate_module(H.left_module(args.A, args.B)))
    except ev.EnvelopeError as exc:
        out.add(Report("unit condition")).fail("W(J,A) ≅ I", (f"A={args.A}",), str(exc))


def cmd_save(args, out: Outcome) -> None:
    obj = resolve(args.target, args.N)
    if args.algebra:
        obj = make_algebra(obj, args.algebra, args.X)
    save(obj, args.path, args.target)
    out.data["written"] = args.path


COMMANDS: dict = {
    "check": cmd_check, "day": cmd_day, "kelly": cmd_kelly, "power": cmd_power, "monad": cmd_monad,
    "bar": cmd_bar, "compare-bars": cmd_compare_bars, "envelope": cmd_envelope, "operators": cmd_operators,
    "omega": cmd_omega, "hw": cmd_hw, "chain": cmd_chain, "save": cmd_save,
}


def default_N() -> int:
    env = os.environ.get("OPERAD_FORGE_N")
    return int(env) if env else sq.DEFAULT_N


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="operad-forge", description="Validate operads, products, bar constructions and envelopes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=default_N(), help="truncation level (default $OPERAD_FORGE_N or 3)")
    common.add_argument("--oracle", action="store_true", help="also run the naive coend comparison")
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, *pos, **extra):
        s = sub.add_parser(name, parents=[common])
        for a in pos:
            s.add_argument(a)
        return s

    add("check", "target")
    add("day", "left", "right")
    add("kelly", "left", "right")
    add("power", "target").add_argument("--k", type=int, default=2)
    add("monad", "target").add_argument("--X", default="a", help="non-base points, comma separated")
    for name in ("bar", "compare-bars", "chain"):
        s = add(name, "target")
        s.add_argument("--algebra", default="idem", help="free, idem, z2, level0 or an algebra file")
        s.add_argument("--X", default="a")
        s.add_argument("--Q", type=int, default=2)
        if name != "compare-bars":
            s.add_argument("--form", choices=br.FORMS, default="monadic")
    add("envelope", "target").add_argument("--save", default=None, help="write the envelope as a presentation file")
    add("operators", "target").add_argument("--budget", type=int, default=None, help="sample size for associativity")
    add("omega", "target")
    s = add("hw")
    s.add_argument("--A", type=int, default=1)
    s.add_argument("--B", type=int, default=1)
    s.add_argument("--tensor", choices=("union", "product"), default="union")
    s = add("save", "target", "path")
    s.add_argument("--algebra", default=None)
    s.add_argument("--X", default="a")
    return p


def run(argv: list, stdout=None) -> int:
    stdout = stdout or sys.stdout
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        print(f"unknown command {argv[0]!r}; expected one of {', '.join(COMMANDS)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad flags, which would read as a validation failure
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    out = Outcome(args.command)
    try:
        COMMANDS[args.command](args, out)
    except TruncationError as exc:
        print(f"{args.command}: truncation exceeded: {exc}", file=stdout)
        return EXIT_TRUNC
    except PresentationError as exc:
        print(f"{args.command}: parse error: {exc}", file=stdout)
        return EXIT_PARSE
    except (op.OperadError, sq.SequenceError, gd.GroundError, al.AlgebraError) as exc:
        print(f"{args.command}: invalid input: {exc}", file=stdout)
        return EXIT_FAIL
    print(out.json() if args.format == "json" else out.text(), file=stdout)
    return EXIT_OK if out.ok else EXIT_FAIL


def main() -> None:
    sys.exit(run(sys.argv[1:]))
