"""Structural formula rewrites."""

from __future__ import annotations

from .formula import (
    Always,
    And,
    Eventually,
    Formula,
    Implies,
    Next,
    Not,
    NonStrictRelease,
    Or,
    Release,
    TRUE,
    Until,
)


def _map_children(node: Formula, f) -> Formula:
    if isinstance(node, Not):
        return Not(f(node.child))
    if isinstance(node, Or):
        return Or(f(node.left), f(node.right))
    if isinstance(node, And):
        return And(f(node.left), f(node.right))
    if isinstance(node, Implies):
        return Implies(f(node.left), f(node.right))
    if isinstance(node, Next):
        return Next(f(node.child), node.interval)
    if isinstance(node, Eventually):
        return Eventually(f(node.child), node.interval)
    if isinstance(node, Always):
        return Always(f(node.child), node.interval)
    if isinstance(node, Until):
        return Until(f(node.left), f(node.right), node.interval)
    if isinstance(node, Release):
        return Release(f(node.left), f(node.right), node.interval)
    if isinstance(node, NonStrictRelease):
        return NonStrictRelease(f(node.left), f(node.right), node.interval)
    return node  # atoms, true


def rewrite_nonstrict_release(phi: Formula) -> Formula:
    """Eliminate ``a RW_I b`` nodes via the identity ``a R_I (a \\/ b)``.

    The resulting formula contains no :class:`NonStrictRelease` node and
    has identical robustness at every sample.
    """

    def go(node: Formula) -> Formula:
        if isinstance(node, NonStrictRelease):
            left = go(node.left)
            right = go(node.right)
            return Release(left, Or(left, right), node.interval)
        return _map_children(node, go)

    return go(phi)


def desugar(phi: Formula) -> Formula:
    """Expand abbreviation nodes into the core grammar.

    ``a /\\ b`` becomes ``!(!a \\/ !b)``, ``a -> b`` becomes ``!a \\/ b``,
    ``F_I a`` becomes ``true U_I a``, ``G_I a`` becomes ``!F_I !a`` and
    ``a R_I b`` becomes ``!(!a U_I !b)``.  ``RW`` is left intact (it is a
    primitive of the quantitative semantics); use
    :func:`rewrite_nonstrict_release` first to remove it.
    """

    def go(node: Formula) -> Formula:
        if isinstance(node, And):
            return Not(Or(Not(go(node.left)), Not(go(node.right))))
        if isinstance(node, Implies):
            return Or(Not(go(node.left)), go(node.right))
        if isinstance(node, Eventually):
            return Until(TRUE, go(node.child), node.interval)
        if isinstance(node, Always):
            return Not(Until(TRUE, Not(go(node.child)), node.interval))
        if isinstance(node, Release):
            return Not(Until(Not(go(node.left)), Not(go(node.right)), node.interval))
        return _map_children(node, go)

    return go(phi)
