"""
Validators for crossed modules, 2-crossed modules and module complexes.

Every law is checked on all basis tuples with exact arithmetic. Failures
are collected in a ValidationReport naming the law and the basis tuple;
nothing here raises on a mathematically invalid presentation.
"""

import logging
from collections.abc import Callable
from itertools import combinations, product

from simplicial_dgla.models.linear import (
    BilinearMap,
    ExactMatrix,
    Vector,
    add_vectors,
    is_zero_vector,
    sub_vectors,
    unit_vector,
    zero_vector,
)
from simplicial_dgla.models.presentations import (
    CrossedModuleSpec,
    ModuleComplexSpec,
    TwoCrossedModuleSpec,
)
from simplicial_dgla.models.reports import ValidationReport, Violation

logger = logging.getLogger(__name__)

Pairing = Callable[[Vector, Vector], Vector]


class _LawChecker:
    """Collects law instances and their violations for one presentation."""

    def __init__(self, subject: str):
        self.subject = subject
        self.violations: list[Violation] = []
        self.checks = 0

    def expect(
        self, law: str, witness: tuple[int, ...], lhs: Vector, rhs: Vector, detail: str
    ) -> None:
        self.checks += 1
        residual = sub_vectors(lhs, rhs)
        if not is_zero_vector(residual):
            self.violations.append(Violation(law, (), witness, residual, detail))

    def expect_zero_map(self, law: str, m: ExactMatrix, detail: str) -> None:
        for j in range(m.cols):
            self.checks += 1
            column = m.column(j)
            if not is_zero_vector(column):
                self.violations.append(Violation(law, (), (j,), column, detail))

    def report(self) -> ValidationReport:
        report = ValidationReport.build(self.subject, self.violations, self.checks)
        logger.info(
            f"Validated {self.subject}: {len(report.violations)} violation(s) "
            f"in {report.checks} checks"
        )
        return report


def validate_structure_constants(subject: str, table: BilinearMap) -> ValidationReport:
    """
    Check that a structure-constant table defines a Lie algebra.

    Laws:
        lie-antisymmetry: [e_i, e_j] + [e_j, e_i] = 0, including i = j
        lie-jacobi: [[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j] = 0
    """
    checker = _LawChecker(subject)
    dim = table.left_dim
    basis = [unit_vector(dim, i) for i in range(dim)]

    for i in range(dim):
        for j in range(i, dim):
            checker.expect(
                "lie-antisymmetry",
                (i, j),
                add_vectors(table.value(i, j), table.value(j, i)),
                zero_vector(dim),
                "[e_i, e_j] = -[e_j, e_i]",
            )
    for i, j, k in combinations(range(dim), 3):
        cyclic = add_vectors(
            add_vectors(
                table.apply(table.value(i, j), basis[k]),
                table.apply(table.value(j, k), basis[i]),
            ),
            table.apply(table.value(k, i), basis[j]),
        )
        checker.expect("lie-jacobi", (i, j, k), cyclic, zero_vector(dim), "Jacobi identity")
    return checker.report()


def validate_crossed_module(spec: CrossedModuleSpec) -> ValidationReport:
    """
    Check the infinitesimal crossed-module laws.

    Laws:
        CM-equivariance: delta1(x . h) = [x, delta1 h]
        CM-peiffer: delta1(h) . h' = [h, h']
        CM-derivation: x . [h, h'] = [x . h, h'] + [h, x . h']
        CM-action: [x, y] . h = x . (y . h) - y . (x . h)
    """
    checker = _LawChecker("crossed_module")
    d, h = spec.d_algebra, spec.h_algebra
    act, delta = spec.action.apply, spec.delta1.apply
    dx = [d.basis_vector(a) for a in range(d.dim)]
    hx = [h.basis_vector(b) for b in range(h.dim)]

    for a, b in product(range(d.dim), range(h.dim)):
        checker.expect(
            "CM-equivariance",
            (a, b),
            delta(act(dx[a], hx[b])),
            d.bracket(dx[a], delta(hx[b])),
            "delta1(x . h) = [x, delta1 h]",
        )
    for b, c in product(range(h.dim), repeat=2):
        checker.expect(
            "CM-peiffer",
            (b, c),
            act(delta(hx[b]), hx[c]),
            h.bracket(hx[b], hx[c]),
            "delta1(h) . h' = [h, h']",
        )
    for a in range(d.dim):
        for b, c in combinations(range(h.dim), 2):
            checker.expect(
                "CM-derivation",
                (a, b, c),
                act(dx[a], h.bracket(hx[b], hx[c])),
                add_vectors(
                    h.bracket(act(dx[a], hx[b]), hx[c]), h.bracket(hx[b], act(dx[a], hx[c]))
                ),
                "x . [h, h'] = [x . h, h'] + [h, x . h']",
            )
    for (a, a2), b in product(combinations(range(d.dim), 2), range(h.dim)):
        checker.expect(
            "CM-action",
            (a, a2, b),
            act(d.bracket(dx[a], dx[a2]), hx[b]),
            sub_vectors(act(dx[a], act(dx[a2], hx[b])), act(dx[a2], act(dx[a], hx[b]))),
            "[x, y] . h = x . (y . h) - y . (x . h)",
        )
    return checker.report()


def _check_lie_action(
    checker: _LawChecker,
    suffix: str,
    k_basis: list[Vector],
    k_bracket: Pairing,
    algebra_bracket: Pairing,
    act: Pairing,
    basis: list[Vector],
) -> None:
    """Action of k on a Lie algebra is a Lie action by derivations."""
    for (a, b), c in product(combinations(range(len(k_basis)), 2), range(len(basis))):
        y = basis[c]
        checker.expect(
            f"2CM-action-{suffix}",
            (a, b, c),
            act(k_bracket(k_basis[a], k_basis[b]), y),
            sub_vectors(act(k_basis[a], act(k_basis[b], y)), act(k_basis[b], act(k_basis[a], y))),
            f"[k, k'] . y = k . (k' . y) - k' . (k . y) on {suffix}",
        )
    for a in range(len(k_basis)):
        for b, c in combinations(range(len(basis)), 2):
            checker.expect(
                f"2CM-derivation-{suffix}",
                (a, b, c),
                act(k_basis[a], algebra_bracket(basis[b], basis[c])),
                add_vectors(
                    algebra_bracket(act(k_basis[a], basis[b]), basis[c]),
                    algebra_bracket(basis[b], act(k_basis[a], basis[c])),
                ),
                f"k . [y, y'] = [k . y, y'] + [y, k . y'] on {suffix}",
            )


def validate_two_crossed_module(spec: TwoCrossedModuleSpec) -> ValidationReport:
    """
    Check the linearized 2-crossed-module laws 2CM-i ... 2CM-vi.

    Also checks that both k-actions are Lie actions by derivations and that
    delta1, delta2 and the Peiffer bracket are k-equivariant.
    """
    checker = _LawChecker("two_crossed_module")
    k, d, h = spec.k_algebra, spec.d_algebra, spec.h_algebra
    act_d, act_h = spec.action_on_d.apply, spec.action_on_h.apply
    delta1, delta2 = spec.delta1.apply, spec.delta2.apply
    pb = spec.peiffer_bracket.apply
    kx = [k.basis_vector(i) for i in range(k.dim)]
    dx = [d.basis_vector(i) for i in range(d.dim)]
    hx = [h.basis_vector(i) for i in range(h.dim)]

    checker.expect_zero_map("2CM-i", spec.delta1 @ spec.delta2, "delta1 delta2 = 0")

    for x, y in product(range(d.dim), repeat=2):
        checker.expect(
            "2CM-ii",
            (x, y),
            delta2(pb(dx[x], dx[y])),
            sub_vectors(d.bracket(dx[x], dx[y]), act_d(delta1(dx[x]), dx[y])),
            "delta2{x, y} = [x, y] - delta1(x) . y",
        )
    for u, v in product(range(h.dim), repeat=2):
        checker.expect(
            "2CM-iii",
            (u, v),
            pb(delta2(hx[u]), delta2(hx[v])),
            h.bracket(hx[u], hx[v]),
            "{delta2 u, delta2 v} = [u, v]",
        )
    for x, y, z in product(range(d.dim), repeat=3):
        p, q, r = dx[x], dx[y], dx[z]
        rhs = add_vectors(act_h(delta1(p), pb(q, r)), pb(p, d.bracket(q, r)))
        rhs = sub_vectors(rhs, act_h(delta1(q), pb(p, r)))
        rhs = sub_vectors(rhs, pb(q, d.bracket(p, r)))
        checker.expect(
            "2CM-iv",
            (x, y, z),
            pb(d.bracket(p, q), r),
            rhs,
            "{[X,Y],Z} = delta1X.{Y,Z} + {X,[Y,Z]} - delta1Y.{X,Z} - {Y,[X,Z]}",
        )
        checker.expect(
            "2CM-v",
            (x, y, z),
            pb(p, d.bracket(q, r)),
            sub_vectors(pb(delta2(pb(p, q)), r), pb(delta2(pb(p, r)), q)),
            "{X,[Y,Z]} = {delta2{X,Y},Z} - {delta2{X,Z},Y}",
        )
    for u, x in product(range(h.dim), range(d.dim)):
        checker.expect(
            "2CM-vi",
            (u, x),
            add_vectors(pb(delta2(hx[u]), dx[x]), pb(dx[x], delta2(hx[u]))),
            tuple(-c for c in act_h(delta1(dx[x]), hx[u])),
            "{delta2 u, X} + {X, delta2 u} = -delta1(X) . u",
        )

    _check_lie_action(checker, "d", kx, k.bracket, d.bracket, act_d, dx)
    _check_lie_action(checker, "h", kx, k.bracket, h.bracket, act_h, hx)

    for a in range(k.dim):
        for x in range(d.dim):
            checker.expect(
                "2CM-equivariance-delta1",
                (a, x),
                delta1(act_d(kx[a], dx[x])),
                k.bracket(kx[a], delta1(dx[x])),
                "delta1(k . x) = [k, delta1 x]",
            )
        for u in range(h.dim):
            checker.expect(
                "2CM-equivariance-delta2",
                (a, u),
                delta2(act_h(kx[a], hx[u])),
                act_d(kx[a], delta2(hx[u])),
                "delta2(k . u) = k . delta2 u",
            )
        for x, y in product(range(d.dim), repeat=2):
            checker.expect(
                "2CM-equivariance-bracket",
                (a, x, y),
                act_h(kx[a], pb(dx[x], dx[y])),
                add_vectors(pb(act_d(kx[a], dx[x]), dx[y]), pb(dx[x], act_d(kx[a], dx[y]))),
                "k . {x, y} = {k . x, y} + {x, k . y}",
            )
    return checker.report()


def validate_module_complex(spec: ModuleComplexSpec) -> ValidationReport:
    """
    Check that every N_m is a g-module and every delta_n is g-equivariant.

    Laws:
        MC-action: [x, y] . v = x . (y . v) - y . (x . v)
        MC-equivariance: delta_n(x . v) = x . delta_n v
    """
    checker = _LawChecker("module_complex")
    g = spec.algebra
    gx = [g.basis_vector(i) for i in range(g.dim)]
    for m, rep in enumerate(spec.representations, start=1):
        module = [unit_vector(rep.right_dim, c) for c in range(rep.right_dim)]
        for (a, b), c in product(combinations(range(g.dim), 2), range(rep.right_dim)):
            checker.expect(
                "MC-action",
                (m, a, b, c),
                rep.apply(g.bracket(gx[a], gx[b]), module[c]),
                sub_vectors(
                    rep.apply(gx[a], rep.apply(gx[b], module[c])),
                    rep.apply(gx[b], rep.apply(gx[a], module[c])),
                ),
                f"N_{m} is a g-module",
            )
    for n, delta in enumerate(spec.differentials, start=2):
        source, target = spec.representations[n - 1], spec.representations[n - 2]
        for a, c in product(range(g.dim), range(source.right_dim)):
            v = unit_vector(source.right_dim, c)
            checker.expect(
                "MC-equivariance",
                (n, a, c),
                delta.apply(source.apply(gx[a], v)),
                target.apply(gx[a], delta.apply(v)),
                f"delta_{n} is g-equivariant",
            )
    return checker.report()
