"""Every Hecke-type instance in the catalog that one of the two conversion theorems covers."""
import math

from qmock import conversion, dsl, registry

REQUIRED_PAIRS = ((1, 1), (1, 2), (1, 4), (3, 2))
REQUIRED_ODD = (1, 3)


def _walk(node):
    yield node
    for name in getattr(node, "__dataclass_fields__", {}):
        v = getattr(node, name)
        if isinstance(v, dsl.Node):
            yield from _walk(v)
        elif isinstance(v, tuple):
            for w in v:
                if isinstance(w, dsl.Node):
                    yield from _walk(w)


def catalog_instances():
    """(variant, n, p, x, y, base) for f_{n,n+p,n} calls and explicit PhiNP/ThetaN2 uses."""
    ev = dsl.Evaluator()
    found = set()
    for e in registry.catalog().identities:
        for side in (e.lhs_expr, e.rhs_expr):
            for node in _walk(side):
                if not isinstance(node, dsl.Call):
                    continue
                try:
                    if node.fn == "f":
                        a, b, c = (ev.integer(z, {}) for z in node.args[:3])
                        x, y, base = (ev.mono_arg(z, {}) for z in node.args[3:])
                        if a != c or a < 1 or b <= a:
                            continue
                        n, p = a, b - a
                        if math.gcd(n, p) == 1:
                            found.add(("coprime", n, p, x, y, base))
                        if p == 2 and n % 2:
                            found.add(("odd", n, 2, x, y, base))
                    elif node.fn == "PhiNP":
                        n, p = (ev.integer(z, {}) for z in node.args[:2])
                        found.add(("coprime", n, p) + tuple(ev.mono_arg(z, {}) for z in node.args[2:]))
                    elif node.fn == "ThetaN2":
                        n = ev.integer(node.args[0], {})
                        found.add(("odd", n, 2) + tuple(ev.mono_arg(z, {}) for z in node.args[1:]))
                except (ValueError, TypeError, dsl.DSLSyntaxError):
                    continue  # arguments that are not literal integers or monomials
    return sorted(found, key=str)


def run_instance(inst, order=60):
    variant, n, p, x, y, base = inst
    if variant == "coprime":
        return conversion.fm_identity_coprime(conversion.ConversionParams(n, p), x, y, base, order)
    return conversion.fm_identity_odd(n, x, y, base, order)


def conversion_outcomes(order=60):
    """{(x, y, base, a, b): [(variant, n, p, report), ...]} over all catalog instances."""
    out = {}
    for inst in catalog_instances():
        variant, n, p, x, y, base = inst
        out.setdefault((x, y, base, n, n + p), []).append((variant, n, p, run_instance(inst, order)))
    return out
