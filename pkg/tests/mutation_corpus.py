"""Twelve single-entry corruptions, two per validator.

Each entry yields ``(validate, clean, mutated)``: the clean object must pass
and the mutated one must fail with a located diagnostic.  Sequence, operad
and algebra fixtures are presentation files under ``fixtures/``; the others
are built by replacing one tabulated value of a builtin structure.
"""

from pathlib import Path

from operad_forge import algebras as al
from operad_forge import bar as br
from operad_forge import cli
from operad_forge import ground as gd
from operad_forge import operads as op
from operad_forge import seq as sq

FIXTURES = Path(__file__).parent / "fixtures"
X2 = gd.based_set(["*", "a"])


def _file(name, validate, clean):
    def build():
        return validate, clean(), cli.load(FIXTURES / name)
    return build


def _other(values, avoid):
    return next(v for v in values if v != avoid)


def _monoid(O, n, index):
    def build():
        M = op.to_monoid(O)
        x = M.product.levels[n].labels[index]
        return op.validate_monoid, M, M.with_mu_entry(n, x, _other(M.C.levels[n].labels, M.mu[n](x)))
    return build


def _defined(Mo, x) -> bool:
    try:
        Mo.act(x)
    except sq.TruncationError:
        return False
    return True


def _module(make, n, arity):
    """Corrupt the last product element of the given arity on which the action is defined."""
    def build():
        Mo = make()
        x = [y for y in Mo.product.levels[n].labels if y[0] == arity and _defined(Mo, y)][-1]
        return al.validate_module, Mo, Mo.with_action_entry(x, _other(Mo.M.levels[n].labels, Mo.act(x)))
    return build


def _simplicial(name, kind, form, q, i):
    def build():
        C = op.builtin(name, 2)
        S = br.bar(al.right_regular(C), cli.make_algebra(C, kind), form, 2)
        x = S.level[q].carrier.labels[-1]
        wrong = _other(S.level[q - 1].carrier.labels, S.face[q][i](x))
        return br.validate_simplicial, S, S.with_face_entry(q, i, x, wrong)
    return build


CORPUS = {
    "sequence/swap": _file("sequence_swap.op", sq.validate, lambda: op.ass(3).C),
    "sequence/degeneracy": _file("sequence_degeneracy.op", sq.validate, lambda: op.ass(3).C),
    "operad/gamma": _file("operad_gamma.op", lambda O: op.validate_operad(O, None), lambda: op.ass(2)),
    "operad/degeneracy": _file("operad_degeneracy.op", lambda O: op.validate_operad(O, None), lambda: op.end(X2, 1)),
    "algebra/associativity": _file("algebra_associativity.op", al.validate_algebra,
                                   lambda: cli.make_algebra(op.com(3), "idem")),
    "algebra/unit": _file("algebra_unit.op", al.validate_algebra, lambda: cli.make_algebra(op.ass(2), "z2")),
    "monoid/ass-2": _monoid(op.ass(2), 2, 0),
    "monoid/ass-3": _monoid(op.ass(3), 3, 7),
    "module/right-regular": _module(lambda: al.right_regular(op.ass(2)), 2, 2),
    "module/i0-algebra": _module(lambda: al.module_from_algebra(cli.make_algebra(op.ass(2), "free")), 0, 1),
    "simplicial/monadic": _simplicial("com", "free", "monadic", 1, 0),
    "simplicial/mixed": _simplicial("ass", "idem", "mixed", 2, 1),
}
