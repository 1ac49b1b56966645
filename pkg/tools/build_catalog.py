"""Generate src/qmock/data/catalog.json from the readable tables below.

Run:  python3 tools/build_catalog.py
"""
from __future__ import annotations

import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "src", "qmock", "data", "catalog.json")

IDENTITIES = []
THEOREMS = []
SPECIALIZATIONS = []
_section = [0]


def section(n):
    _section[0] = n


def ident(id, lhs, rhs, tags=(), ref=None):
    IDENTITIES.append({"id": id, "lhs": lhs, "rhs": rhs, "tags": sorted(set(tags)),
                       "section": _section[0], "paper_ref": ref or id})


def chain(lhs, steps, tags=()):
    """An equality chain lhs = r1 = r2 ...; each labelled step becomes one identity."""
    for step in steps:
        id, rhs = step[0], step[1]
        extra = step[2] if len(step) > 2 else ()
        ident(id, lhs, rhs, tuple(tags) + tuple(extra))


def theorem(id, lhs, rhs, constraints, tags=()):
    THEOREMS.append({"id": id, "lhs": lhs, "rhs": rhs, "constraints": constraints,
                     "tags": sorted(set(tags)), "section": _section[0], "paper_ref": id})


def special(thm, a, b, target, scale="1", offset="0"):
    """specialize(thm, a, b).lhs must equal scale * (lhs(target) + offset)."""
    SPECIALIZATIONS.append({"theorem": thm, "a": a, "b": b, "target": target, "scale": scale,
                            "offset": offset})


def pd(base):
    return "pochdual(a; %s; n)*pochdual(b; %s; n)" % (base, base)


def ab_prefactor(base):
    return ("aqprod(%s; %s; inf)*aqprod(a*b; %s; inf)/(aqprod(a*%s; %s; inf)*aqprod(b*%s; %s; inf))"
            % (base, base, base, base, base, base, base))


def ab_ratio(base):
    return "%s/(aqprod(a*%s; %s; n)*aqprod(b*%s; %s; n))" % (pd(base), base, base, base, base)


def hyp_lhs(base, pre_num, pre_den, uppers, lowers, arg="1"):
    """prod(pre_num; base)_inf/prod(pre_den; base)_inf * 3phi2(base/a, base/b, *uppers; *lowers; base, ab*arg)."""
    pre = "*".join("aqprod(%s; %s; inf)" % (x, base) for x in pre_num)
    den = "*".join("aqprod(%s; %s; inf)" % (x, base) for x in pre_den)
    num = "*".join("aqprod(%s; %s; n)" % (u, base) for u in uppers) or "1"
    low = "*".join(["aqprod(%s; %s; n)" % (base, base)] + ["aqprod(%s; %s; n)" % (l, base) for l in lowers])
    return "%s/(%s)*sum(n, 0, inf, %s*(%s)^n*%s/(%s))" % (pre, den, pd(base), arg, num, low)


def ratio(base, shift):
    """(base/a, base/b; base)_n (ab)^n / (a*shift, b*shift; base)_n."""
    return "%s/(aqprod(a*%s; %s; n)*aqprod(b*%s; %s; n))" % (pd(base), shift, base, shift, base)


def at(expr, new_q):
    """expr with q replaced by new_q, e.g. at(e, "-q")."""
    from qmock import dsl
    return dsl.format_expr(dsl.replace_q(dsl.parse(expr), dsl.parse(new_q)))


def phi_lhs(base, uppers, lowers, arg="1"):
    """(base, ab; base)_inf/(a base, b base; base)_inf * 3phi2(base/a, base/b, *uppers; *lowers; base, ab*arg)."""
    num = "*".join("aqprod(%s; %s; n)" % (u, base) for u in uppers) or "1"
    den = "*".join(["aqprod(%s; %s; n)" % (base, base)] + ["aqprod(%s; %s; n)" % (l, base) for l in lowers])
    return "%s*sum(n, 0, inf, %s*(%s)^n*%s/(%s))" % (ab_prefactor(base), pd(base), arg, num, den)


# ---------------------------------------------------------------------------
section(1)
ident("intro-f(q)", "f3", "2/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(3*n^2/2+n/2)/(1+q^n))",
      ["order3", "appell"])
ident("intro-f0", "f0_5",
      "1/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j*q^(5*n^2/2+n/2-j^2)*(1-q^(4*n+2))))",
      ["order5", "hecke"])
LIU = "sum(n, 0, inf, aqprod(q; q^2; n)*q^n/aqprod(q^2; q^2; n))"
ident("intro-Liu-eq", LIU,
      "aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)*q^(n^2+n-j^2)))",
      ["hecke"])
WY = "sum(n, 1, inf, q^n*aqprod(q; q^2; n)/(aqprod(-q; q^2; n)*(1+q^(2*n))))"
ident("W-Y-eq", WY,
      "sum(n, 1, inf, sum(j, -n, n, (-1)^j*q^(n^2+j^2))) - sum(n, 1, inf, (-1)^n*q^(2*n^2))", ["hecke"])
CL = "sum(n, 1, inf, aqprod(q; q; n)/aqprod(-q; q; n)*(-1)^n*q^(n*(n-1)/2))"
ident("Chan-Liu-eq", CL,
      "sum(n, 1, inf, sum(j, -n+1, n, (1-q^n)^2*(-1)^(n+j+1)*q^(2*n^2-n-j^2)))", ["hecke"])
ident("intro-V1-1", "V1_8",
      "q*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(4*n^2+4*n)*sum(j, -n, n, q^(-2*j^2-j)))",
      ["order8", "hecke"])
ident("example-T8", "sum(n, 0, inf, (-1)^n*aqprod(q^2; q^2; n)/aqprod(q; q^2; n+1)*q^(n*(n+1)))",
      "sum(n, 0, inf, sum(j, -n, n, (1+q^(2*n+1))*q^(4*n^2+3*n-2*j^2-j)))", ["hecke"])
V1_2 = "aqprod(-q^4; q^4; inf)/aqprod(q^4; q^4; inf)*sum(n, -inf, inf, (-1)^n*q^((2*n+1)^2)/(1-q^(4*n+1)))"
V1_3 = "q*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(n^2+2*n)/(1+q^(4*n+2)))"
ident("intro-V1-2", "V1_8", V1_2, ["order8", "appell"])
ident("intro-V1-3", "V1_8", V1_3, ["order8", "appell"])
ident("intro-V1-2~intro-V1-3", V1_2, V1_3, ["order8", "appell", "equivalence"], ref="intro-V1-2, intro-V1-3")

section(2)
ident("j-id-1", "j(q^3*q^(1/2); q)", "(-1)^3*q^(-3)*q^(-3/2)*j(q^(1/2); q)", ["theta"])
ident("j-id-2", "j(q^(1/3); q)", "j(q^(2/3); q)", ["theta"])
ident("j-id-2/2", "j(q^(1/3); q)", "-q^(1/3)*j(q^(-1/3); q)", ["theta"])
ident("reciprocal-Jacobi", "sum(n, -inf, inf, (-1)^n*q^(n*(n+1)/2)/(1-q^n*zeta(3)))", "Jm(1)^3/j(zeta(3); q)",
      ["theta", "appell"])
ident("intro-f(q)-m", "f3", "2*m(-q, q^3, q) + 2*m(-q, q^3, q^2)", ["order3", "m-form"])
ident("intro-f(q)-m/2", "f3", "4*m(-q, q^3, q) + J(3, 6)^2/Jm(1)", ["order3", "m-form"])
ident("intro-f0-f", "f0_5", "1/Jm(1)*(f(3, 7, 3, q^2, q^2, q) + q^3*f(3, 7, 3, q^7, q^7, q))", ["order5", "f-form"])
ident("intro-f0-f/2", "f0_5", "1/Jm(1)*f(3, 7, 3, q^(5/8), -q^(5/8), -q^(1/4))", ["order5", "f-form"])
ident("Kronecker", "f(0, 1, 0, -q^(1/3), -q^(1/4), q)",
      "Jm(1)^3*j(q^(1/3)*q^(1/4); q)/(j(q^(1/3); q)*j(q^(1/4); q))", ["f-form", "theta"])
LIU_H = "sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)*q^(n^2+n-j^2)))"
ident("intro-Liu-eq-H", LIU_H, "1/2*(f(0, 1, 0, -q, -q, q^4) - q^2*f(0, 1, 0, -q^3, -q^3, q^4))", ["f-form"])
ident("intro-Liu-eq-H/2", LIU_H, "Jm(2)^4/Jm(1)^2", ["theta"])
ident("Liu-eq-simplify", LIU, "Jm(2)^2/Jm(1)", ["theta"])
ident("Liu-eq-simplify/2", LIU, "sum(n, 0, inf, q^(n*(n+1)/2))", ["theta"])
# building block properties at fixed generic points
X, Z, Z0 = "zeta(3)*q^(1/2)", "zeta(8)*q^(1/3)", "-q^(1/4)"
ident("m-id-1", "m(%s, q, %s)" % (X, Z), "m(%s, q, q*%s)" % (X, Z), ["appell", "lemma"])
ident("m-id-2", "m(%s, q, %s)" % (X, Z), "(%s)^-1*m((%s)^-1, q, (%s)^-1)" % (X, X, Z), ["appell", "lemma"])
ident("m-id-3", "m(q*%s, q, %s)" % (X, Z), "1 - %s*m(%s, q, %s)" % (X, X, Z), ["appell", "lemma"])
ident("m-minus", "m(%s, q, %s) - m(%s, q, %s)" % (X, Z, X, Z0),
      "%s*Jm(1)^3*j(%s/(%s); q)*j(%s*%s*%s; q)/(j(%s; q)*j(%s; q)*j(%s*%s; q)*j(%s*%s; q))"
      % (Z0, Z, Z0, X, Z0, Z, Z0, Z, X, Z0, X, Z), ["appell", "lemma"])
ident("lem-m-add", "m(%s, q, %s)" % (X, Z),
      "m(-q*(%s)^2, q^4, (%s)^4) - %s/q*m(-(%s)^2/q, q^4, (%s)^4) - Jm(2)*Jm(4)*j(-%s*(%s)^2; q)*j(-%s*(%s)^3; q)"
      "/(%s*j(%s*%s; q)*j((%s)^4; q^4)*j(-q*(%s)^2*(%s)^4; q^2))"
      % (X, Z, X, X, Z, X, Z, X, Z, X, X, Z, Z, X, Z), ["appell", "lemma"])
FX, FY = "q^(1/2)", "-q^(1/3)"
ident("f-id-1", "f(1, 2, 1, %s, %s, q)" % (FX, FY),
      "f(1, 2, 1, -(%s)^2*q, -(%s)^2*q, q^4) - %s*f(1, 2, 1, -(%s)^2*q^3, -(%s)^2*q^5, q^4)"
      " - %s*f(1, 2, 1, -(%s)^2*q^5, -(%s)^2*q^3, q^4) + %s*%s*q^2*f(1, 2, 1, -(%s)^2*q^7, -(%s)^2*q^7, q^4)"
      % (FX, FY, FX, FX, FY, FY, FX, FY, FX, FY, FX, FY), ["f-form", "lemma"])
ident("f-id-2", "f(1, 2, 1, %s, %s, q)" % (FX, FY),
      "-q^4/(%s*%s)*f(1, 2, 1, q^4/(%s), q^4/(%s), q)" % (FX, FY, FX, FY), ["f-form", "lemma"])
ident("f-id-3", "f(1, 2, 1, %s, %s, q)" % (FX, FY),
      "-(%s)*f(1, 2, 1, q^2*%s, q*%s, q) + j(%s; q)" % (FY, FX, FY, FX), ["f-form", "lemma"])
ident("f-id-4", "f(1, 2, 1, %s, %s, q)" % (FX, FY),
      "-(%s)*f(1, 2, 1, q*%s, q^2*%s, q) + j(%s; q)" % (FX, FX, FY, FY), ["f-form", "lemma"])
HX = "zeta(6)*q^(1/3)"
ident("h-m", "h(%s, q)" % HX, "-(%s)^-1*m((%s)^-2*q, q^2, %s)" % (HX, HX, HX), ["appell", "lemma"])
ident("k-id", "%s*k(%s, q)" % (HX, HX), "m(-(%s)^2, q, (%s)^-2) + Jm(1)^4/(2*Jm(2)^2*j((%s)^2; q))" % (HX, HX, HX),
      ["appell", "lemma"])
ident("barf-id-1", "fbar(1, 2, 1, %s, %s, q)" % (FX, FY),
      "fbar(1, 2, 1, -(%s)^2*q, -(%s)^2*q, q^4) - %s*fbar(1, 2, 1, -(%s)^2*q^3, -(%s)^2*q^5, q^4)"
      " - %s*fbar(1, 2, 1, -(%s)^2*q^5, -(%s)^2*q^3, q^4) + %s*%s*q^2*fbar(1, 2, 1, -(%s)^2*q^7, -(%s)^2*q^7, q^4)"
      % (FX, FY, FX, FX, FY, FY, FX, FY, FX, FY, FX, FY), ["barf", "lemma"])
ident("barf-id-2", "fbar(1, 2, 1, %s, %s, q)" % (FX, FY),
      "q^4/(%s*%s)*fbar(1, 2, 1, q^4/(%s), q^4/(%s), q)" % (FX, FY, FX, FY), ["barf", "lemma"])
WYM = "sum(n, 1, inf, (-1)^(n-1)*q^n*aqprod(q^2; q^2; n-1)/aqprod(-q^2; q^2; n))"
ident("W-Y-m-eq", WYM,
      "sum(n, 1, inf, q^(n*(n+1)/2)/(1+q^(2*n))) - sum(n, -inf, -1, q^(n*(n+1)/2)/(1+q^(2*n)))", ["barm"])
ident("pre-example-1", WYM, "mbar(q, q^4, -q^3) + q*mbar(q, q^4, -q^5) - 1/2", ["barm"])
ident("ADH-id", "sigmaADH",
      "sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)*q^(n*(3*n+1)/2-j^2)*(1-q^(2*n+1))))", ["hecke"])
ident("ADH-id-barf", "sigmaADH", "fbar(1, 5, 1, q^(3/8), -q^(3/8), q^(1/4))", ["barf"])
ident("W-Y-eq-new", WY, "1/2*(fbar(1, 0, 1, q^2, q^2, q^4) + q*fbar(1, 0, 1, q^4, q^4, q^4) - 1)", ["barf"])
ident("Chan-Liu-barf", CL,
      "1 + fbar(1, 3, 1, -q, -q, q^2) - fbar(1, 3, 1, -1, -1, q^2) + q*fbar(1, 3, 1, -q^4, -q^4, q^2)"
      " - q^2*fbar(1, 3, 1, -q^5, -q^5, q^2)", ["barf"])
ident("Chan-Liu-barf/2", CL,
      "1 + fbar(1, 3, 1, q^(1/4), -q^(1/4), q^(1/2)) - fbar(1, 3, 1, q^(-1/4), -q^(-1/4), q^(1/2))", ["barf"])

# ---------------------------------------------------------------------------
section(3)
Q2 = "q^2"
theorem("meq:1.1", phi_lhs(Q2, ["q"], ["-q^2", "q^3"], "-1"),
        "(1-q)*sum(n, 0, inf, (-1)^n*(1+q^(2*n+1))*%s*q^(n^2)*sum(j, -n, n, q^(-j^2)))" % ab_ratio(Q2),
        "max(|ab|, |aq^2|, |bq^2|) < 1")
chain("sum(n, 0, inf, (-1)^n*q^(2*n*(n+1))/(aqprod(q^4; q^4; n)*(1-q^(2*n+1))))", [
    ("T1", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^n*(1+q^(2*n+1))*q^(3*n^2+2*n-j^2)))", ["hecke"]),
    ("T1-H", "1/Jm(2)*(f(1, 2, 1, q^4, q^4, q^4) - q^5*f(1, 2, 1, q^10, q^10, q^4))", ["f-form"]),
    ("T1-f-exp", "1/Jm(2)*f(1, 2, 1, q^(3/2), -q^(3/2), -q)", ["f-form"]),
    ("T1-A", "q^(-1/2)*Jm(2)/Jm(4)*(m(-q^(1/2), -q^3, -1) - m(q^(1/2), -q^3, -1))", ["m-form"]),
])
chain("sum(n, 0, inf, q^(n*(n+1))/(aqprod(-q^2; q^2; n)*(1-q^(2*n+1))))", [
    ("T2", "sum(n, 0, inf, sum(j, -n, n, (1+q^(2*n+1))*q^(2*n^2+n-j^2)))", ["hecke"]),
    ("T2-barf-exp", "fbar(1, 3, 1, -q^2, -q^2, q^2) + q^3*fbar(1, 3, 1, -q^6, -q^6, q^2)", ["barf"]),
])
special("meq:1.1", "0", "0", "T1", "(1-q)*aqprod(q^2; q^2; inf)")
special("meq:1.1", "0", "1", "T2", "1-q")

theorem("meq:1.2", phi_lhs(Q2, ["-1"], ["q", "-q^2"], "q^-1"),
        "sum(n, 0, inf, (1-q^(4*n+2))*%s*q^(n^2-n)*sum(j, -n, n, q^(-j^2)))" % ab_ratio(Q2),
        "max(|ab/q|, |aq^2|, |bq^2|) < 1")
chain("1 + 2*sum(n, 1, inf, q^(2*n^2+n)/(aqprod(q; q; 2*n)*(1+q^(2*n))))", [
    ("T3", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (1-q^(4*n+2))*q^(3*n^2+n-j^2)))", ["hecke"]),
    ("T3-f-exp", "1/Jm(2)*(f(1, 2, 1, -q^3, -q^3, q^4) + q^4*f(1, 2, 1, -q^9, -q^9, q^4))", ["f-form"]),
    ("T3-A", "2*Jm(2)/Jm(1)*(m(-q^5, q^12, -1) - q^-1*m(-q, q^12, -1)) + q^-1*Jm(2)^3*Jm(6)^2*Jm(8)^2/(Jm(1)^2*Jm(4)^2*Jm(24)^2)",
     ["m-form"]),
])
chain("1 + 2*sum(n, 1, inf, (-1)^n*q^(n^2)/(aqprod(q; q^2; n)*(1+q^(2*n))))", [
    ("T4", "sum(n, 0, inf, sum(j, -n, n, (-1)^n*(1-q^(4*n+2))*q^(2*n^2-j^2)))", ["hecke"]),
    ("T4-barf-exp", "fbar(1, 3, 1, q, q, q^2) - q^2*fbar(1, 3, 1, q^5, q^5, q^2)", ["barf"]),
])
special("meq:1.2", "0", "0", "T3", "aqprod(q^2; q^2; inf)")
special("meq:1.2", "0", "1", "T4")

theorem("meq:3.1", phi_lhs("q", ["-1"], ["0", "-q"]),
        "sum(n, 0, inf, (1-q^(2*n+1))*%s*q^(n*(n-1)/2)*sum(j, -n, n, (-1)^j*q^(j^2)))" % ab_ratio("q"),
        "max(|ab|, |aq|, |bq|) < 1")
chain("sum(n, 0, inf, q^(n^2+n)/(aqprod(q; q; n)*(1+q^n)))", [
    ("T9", "1/(2*aqprod(q; q; inf))*sum(n, 0, inf, sum(j, -n, n, (-1)^j*(1-q^(2*n+1))*q^(3*n^2/2+n/2+j^2)))", ["hecke"]),
    ("T9-f-exp", "1/(2*Jm(1))*(f(5, 1, 5, q^3, q^3, q) + q^2*f(5, 1, 5, q^6, q^6, q))", ["f-form"]),
])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+1)/2)/(1+q^n))", [
    ("T10", "1/2*sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)*(1-q^(2*n+1))*q^(n^2+j^2)))", ["hecke"]),
    ("T10-barf-exp", "1/2*(fbar(1, 0, 1, -q^2, -q^2, q^4) - q*fbar(1, 0, 1, -q^4, -q^4, q^4))", ["barf"]),
    ("T10-simplify", "1/4*(Jm(1)^4/Jm(2)^2 + 1)", ["theta"]),
    ("reciprocal-apply-2", "1/2*sum(n, -inf, inf, (-1)^n*q^(n*(n+1)/2)/(1+q^n)) + 1/4", ["appell"]),
])
special("meq:3.1", "0", "0", "T9", "2*aqprod(q; q; inf)")
special("meq:3.1", "0", "1", "T10", "2")
LIU412 = "sum(n, 0, inf, q^(n^2)/aqprod(q^2; q^2; n))"
chain(LIU412, [
    ("Liu-Eq412", "1/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j*(1-q^(2*n+1))*q^(n^2+j^2)))", ["hecke"]),
    ("Liu-Eq412-simplify", "1/Jm(1)*(f(1, 0, 1, q^2, q^2, q^4) + q*f(1, 0, 1, q^4, q^4, q^4))", ["f-form"]),
    ("Liu-Eq412-simplify/2", "Jm(2)^2/(Jm(1)*Jm(4))", ["theta"]),
])

theorem("meq:3.2", phi_lhs(Q2, ["q"], ["0", "q^3"]),
        "(1-q)*sum(n, 0, inf, (-1)^n*(1+q^(2*n+1))*%s*q^(n^2)*sum(j, -n, n, q^(2*j^2-j)))" % ab_ratio(Q2),
        "max(|ab|, |aq^2|, |bq^2|) < 1")
chain("sum(n, 0, inf, q^(2*n^2+2*n)/((1-q^(2*n+1))*aqprod(q^2; q^2; n)))", [
    ("T11", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^n*(1+q^(2*n+1))*q^(3*n^2+2*n+2*j^2-j)))", ["hecke"]),
    ("T11-H", "1/Jm(2)*(f(5, 1, 5, q^6, q^8, q^2) - q^5*f(5, 1, 5, q^12, q^14, q^2))", ["f-form"]),
])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+1))/(1-q^(2*n+1)))", [
    ("T12", "sum(n, 0, inf, sum(j, -n, n, (1+q^(2*n+1))*q^(2*n^2+n+2*j^2-j)))", ["hecke"]),
    ("T12-bar-H", "fbar(1, 0, 1, -q^4, -q^6, q^8) + q^3*fbar(1, 0, 1, -q^8, -q^10, q^8)", ["barf"]),
])
special("meq:3.2", "0", "0", "T11", "(1-q)*aqprod(q^2; q^2; inf)")
special("meq:3.2", "0", "1", "T12", "1-q")

theorem("meq:3.3", phi_lhs(Q2, ["q^2"], ["-q^2", "-q^3"]),
        "(1+q)*sum(n, 0, inf, (1-q^(2*n+1))*%s*q^(2*n^2+n)*sum(j, -n, n, (-1)^j*q^(-j^2)))" % ab_ratio(Q2),
        "max(|ab|, |aq^2|, |bq^2|) < 1")
chain("sum(n, 0, inf, q^(2*n^2+2*n)/aqprod(-q; q; 2*n+1))", [
    ("T13", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j*(1-q^(2*n+1))*q^(4*n^2+3*n-j^2)))", ["hecke"]),
    ("T13-H-pre", "1/Jm(2)*(f(3, 5, 3, q^6, q^6, q^2) + q^7*f(3, 5, 3, q^14, q^14, q^2))", ["f-form"]),
    ("T13-H", "1/Jm(2)*f(3, 5, 3, q^(9/4), -q^(9/4), -q^(1/2))", ["f-form"]),
    ("T13-A", "2*q^-1*m(-q^7, q^24, -1) + 2*q^-3*m(-q, q^24, -1) + 1/Jm(2)*PhiNP(3, 2, q^(9/4), -q^(9/4), -q^(1/2))",
     ["m-form"]),
])
chain("sum(n, 0, inf, (-1)^n*aqprod(q^2; q^2; n)/aqprod(-q; q; 2*n+1)*q^(n^2+n))", [
    ("T14", "sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)*(1-q^(2*n+1))*q^(3*n^2+2*n-j^2)))", ["hecke"]),
    ("T14-barf-pre", "fbar(1, 2, 1, -q^4, -q^4, q^4) - q^5*fbar(1, 2, 1, -q^10, -q^10, q^4)", ["barf"]),
    ("T14-barf", "fbar(1, 2, 1, q^(3/2), -q^(3/2), q)", ["barf"]),
])
special("meq:3.3", "0", "0", "T13", "(1+q)*aqprod(q^2; q^2; inf)")
special("meq:3.3", "0", "1", "T14", "1+q")

theorem("T:4.8", phi_lhs(Q2, ["-q"], ["q", "-q^2"]),
        "sum(n, 0, inf, (1-q^(4*n+2))*%s*q^(2*n^2)*sum(j, -n, n, q^(-j^2)))" % ab_ratio(Q2),
        "max(|ab|, |aq^2|, |bq^2|) < 1")
chain("sum(n, 0, inf, aqprod(-q; q^2; n)*q^(2*n^2+2*n)/(aqprod(q; q^2; n)*aqprod(q^4; q^4; n)))", [
    ("T4.8-cor-1", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (1-q^(4*n+2))*q^(4*n^2+2*n-j^2)))", ["hecke"]),
    ("T4.8-cor-1-H", "1/Jm(2)*(f(3, 5, 3, -q^5, -q^5, q^2) + q^6*f(3, 5, 3, -q^13, -q^13, q^2))", ["f-form"]),
    ("T4.8-cor-1-A",
     "2*Jbar(1, 6)/Jm(2)*(m(-q^44, q^96, -1) + q^-2*m(-q^28, q^96, -1) - q^-4*m(-q^20, q^96, -1) - q^-10*m(-q^4, q^96, -1))"
     " - 2*Jbar(3, 6)/Jm(2)*(q^-1*m(-q^36, q^96, -1) - q^-7*m(-q^12, q^96, -1))"
     " + 1/Jm(2)*(PhiNP(3, 2, -q^5, -q^5, q^2) + q^6*PhiNP(3, 2, -q^13, -q^13, q^2))", ["m-form"]),
])
chain("sum(n, 0, inf, aqprod(q; q^2; n)*q^(2*n^2+2*n)/(aqprod(-q; q; 2*n)*aqprod(q^2; q^2; n)))", [
    ("T4.8-cor-2", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (1-q^(4*n+2))*(-1)^j*q^(4*n^2+2*n-j^2)))", ["hecke"]),
    ("T4.8-cor-2-H-pre", "1/Jm(2)*(f(3, 5, 3, q^5, q^5, q^2) + q^6*f(3, 5, 3, q^13, q^13, q^2))", ["f-form"]),
    ("T4.8-cor-2-H", "1/Jm(2)*f(3, 5, 3, q^(7/4), -q^(7/4), -q^(1/2))", ["f-form"]),
    ("T4.8-cor-2-A", "2*J(1, 6)/Jm(2)*(m(-q^10, q^24, -1) + q^-2*m(-q^2, q^24, -1)) + 2*q^-1*J(3, 6)/Jm(2)*m(-q^6, q^24, -1)"
     " + 1/Jm(2)*PhiNP(3, 2, q^(7/4), -q^(7/4), -q^(1/2))", ["m-form"]),
])
chain("sum(n, 0, inf, (-1)^n*aqprod(-q; q^2; n)*q^(n^2+n)/(aqprod(q; q^2; n)*aqprod(-q^2; q^2; n)))", [
    ("T4.8-cor-3", "sum(n, 0, inf, sum(j, -n, n, (1-q^(4*n+2))*(-1)^n*q^(3*n^2+n-j^2)))", ["hecke"]),
    ("T4.8-cor-3-barf-exp", "fbar(1, 2, 1, q^3, q^3, q^4) - q^4*fbar(1, 2, 1, q^9, q^9, q^4)", ["barf"]),
])
chain("sum(n, 0, inf, (-1)^n*aqprod(q; q^2; n)*q^(n^2+n)/aqprod(-q; q; 2*n))", [
    ("T4.8-cor-4", "sum(n, 0, inf, sum(j, -n, n, (1-q^(4*n+2))*(-1)^(n+j)*q^(3*n^2+n-j^2)))", ["hecke"]),
    ("T4.8-cor-4-barf-exp", "fbar(1, 2, 1, -q^3, -q^3, q^4) - q^4*fbar(1, 2, 1, -q^9, -q^9, q^4)", ["barf"]),
])
special("T:4.8", "0", "0", "T4.8-cor-1", "aqprod(q^2; q^2; inf)")
special("T:4.8", "0", "1", "T4.8-cor-3")


# ---------------------------------------------------------------------------
section(4)
ident("mock-2-1", "A2", "q*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(2*n^2+3*n)/(1-q^(2*n+1)))",
      ["order2", "appell"])
ident("mock-2-2", "B2",
      "aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, -inf, inf, (-1)^n*q^(2*n^2+2*n)/(1-q^(2*n+1)))",
      ["order2", "appell"])
ident("mock-2-3", "mu2", "2*aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, -inf, inf, q^(2*n^2+n)/(1+q^(2*n)))",
      ["order2", "appell"])
theorem("thm-ab-2-1-1st", hyp_lhs(Q2, ["q^2", "a*b"], ["a*q^2", "b*q^2"], ["q^2"], ["q^3", "q^3"]),
        "(1-q)^2*sum(n, 0, inf, (1+q^(2*n+1))/(1-q^(2*n+1))*%s*(-1)^n*q^(n^2+n))" % ratio(Q2, "q^2"),
        "max(|ab|, |aq^2|, |bq^2|) < 1", ["order2"])
chain("sum(n, 0, inf, q^(2*n*(n+1))/aqprod(q; q^2; n+1)^2)", [
    ("2-1-cor-3", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*(1+q^(2*n+1))/(1-q^(2*n+1))*q^(3*n^2+3*n))", ["appell"]),
    ("2-1-cor-3-m-exp-pre", "-q^-1*m(q, q^6, q^2) - q^-1*m(q, q^6, q^4)", ["m-form"]),
    ("2-1-cor-3-m-exp", "-2*q^-1*m(q, q^6, q^2) + Jm(6)^3/(Jm(2)*J(3, 6))", ["m-form"]),
], ["order3"])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+1))*aqprod(q^2; q^2; n)/aqprod(q; q^2; n+1)^2)", [
    ("2-1-cor-4", "sum(n, 0, inf, (1+q^(2*n+1))/(1-q^(2*n+1))*q^(2*n^2+2*n))", ["appell"]),
    ("2-1-cor-4-barm-exp", "mbar(-q^2, q^4, -q^4) + q*mbar(-1, q^4, -q^6)", ["barm"]),
])
special("thm-ab-2-1-1st", "-q", "0", "mock-2-1", "(1-q)^2*aqprod(q^2; q^2; inf)/(q*aqprod(-q^3; q^2; inf))")
special("thm-ab-2-1-1st", "0", "-1", "mock-2-2", "(1-q)^2*aqprod(q^2; q^2; inf)/aqprod(-q^2; q^2; inf)")
special("thm-ab-2-1-1st", "0", "0", "2-1-cor-3", "(1-q)^2*aqprod(q^2; q^2; inf)")
special("thm-ab-2-1-1st", "0", "1", "2-1-cor-4", "(1-q)^2")

JSUM = "sum(j, 0, n, q^(-j*(j+1)/2))"
theorem("thm-ab-2-1-2nd", hyp_lhs("q", ["q^2", "a*b*q"], ["a*q^2", "b*q^2"], ["q"], ["q^(3/2)", "-q^(3/2)"], "q"),
        "sum(n, 0, inf, (1-q^(2*n+2))*%s*(-1)^n*q^(n^2+2*n)*%s)" % (ratio("q", "q^2"), JSUM),
        "max(|abq|, |aq^2|, |bq^2|) < 1", ["order2"])
ident("cor-A", "A2", "q*aqprod(-q^2; q^2; inf)/aqprod(q; q; inf)^2*sum(n, 0, inf, (1-q^(2*n+2))/(1+q^(2*n+2))"
      "*(-1)^n*q^(n^2+2*n)*%s)" % JSUM, ["order2", "hecke"])
ident("cor-A-m-exp", "A2", "-m(q, q^4, q^2)", ["order2", "m-form"])
chain("sum(n, 0, inf, q^(n^2+2*n)/aqprod(q; q^2; n+1))", [
    ("2-1-cor-1", "1/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*(1-q^(2*n+2))*q^(2*n^2+3*n)*%s)" % JSUM, ["hecke"]),
    ("2-1-cor-1-H-pre", "1/(2*Jm(1))*(f(3, 5, 3, q^4, q^5, q) - q^5*f(3, 5, 3, q^8, q^9, q) + j(q^4; q^3))", ["f-form"]),
    ("2-1-cor-1-H", "1/Jm(1)*f(3, 5, 3, q^4, q^5, q)", ["f-form"]),
    ("2-1-cor-1-A", "-q^-1*m(-q^22, q^48, -1) - q^-2*m(-q^14, q^48, -1) - q^-3*m(-q^10, q^48, -1)"
     " - q^-6*m(-q^2, q^48, -1) + 1/Jm(1)*PhiNP(3, 2, q^4, q^5, q)", ["m-form"]),
    ("2-1-cor-1-final", "-q^-1*m(q, -q^3, q) + Jm(12)^3/(J(3, 12)*J(4, 12))", ["m-form"]),
], ["order3"])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+3)/2)*aqprod(q; q; n)/aqprod(q; q^2; n+1))", [
    ("2-1-cor-2", "sum(n, 0, inf, (1+q^(n+1))*q^((3*n^2+5*n)/2)*%s)" % JSUM, ["hecke"]),
    ("2-1-cor-2-barf-exp", "1/2*(fbar(1, 2, 1, -q^3, -q^4, q^2) + q^4*fbar(1, 2, 1, -q^6, -q^7, q^2) - q^-1)", ["barf"]),
])
chain("sum(n, 0, inf, q^((n^2+3*n)/2)*aqprod(-q; q; n)/aqprod(q; q^2; n+1))", [
    ("2-1-cor-add-sigma", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*(1-q^(n+1))*q^((3*n^2+5*n)/2)*%s)" % JSUM,
     ["hecke"]),
    ("2-1-cor-add-sigma-H-pre", "Jm(2)/(2*Jm(1)^2)*(f(1, 2, 1, q^3, q^4, q^2) - q^4*f(1, 2, 1, q^6, q^7, q^2) + j(q^3; q^2))",
     ["f-form"]),
    ("2-1-cor-add-sigma-H", "Jm(2)/Jm(1)^2*f(1, 2, 1, q^3, q^4, q^2)", ["f-form"]),
    ("2-1-cor-add-sigma-A", "-q^-1*m(q^2, q^6, -1) + 1/2*q^-1*Jm(2)^4*Jm(6)^5/(Jm(1)^2*Jm(3)^2*Jm(4)^2*Jm(12)^2)", ["m-form"]),
    ("2-1-cor-add-sigma-A-simplify", "-q^-1*m(q^2, q^6, q)", ["m-form"]),
], ["order6"])
special("thm-ab-2-1-2nd", "0", "0", "2-1-cor-1", "aqprod(q; q; inf)")
special("thm-ab-2-1-2nd", "0", "1", "2-1-cor-2", "1-q")
special("thm-ab-2-1-2nd", "0", "-1", "2-1-cor-add-sigma", "(1-q)*aqprod(q^2; q; inf)/aqprod(-q^2; q; inf)")
special("thm-ab-2-1-2nd", "zeta(4)", "-zeta(4)", "cor-A", "(1-q)/q*aqprod(q^2; q; inf)*aqprod(q; q; inf)/aqprod(-q^4; q^2; inf)")

JJ = "sum(j, -n, n, q^(-j*(j+1)/2))"
theorem("thm-ab-2-2", phi_lhs("q", ["q"], ["q^(3/2)", "-q^(3/2)"]),
        "(1-q)*sum(n, 0, inf, sum(j, -n, n, %s*(-1)^n*q^(n^2+n-j*(j+1)/2)))" % ratio("q", "q"),
        "max(|ab|, |aq|, |bq|) < 1", ["order2"])
ident("cor-B", "B2", "aqprod(-q; q^2; inf)/aqprod(q; q; inf)^2*sum(n, 0, inf, (-1)^n*q^(n^2+2*n)/(1+q^(2*n+1))*%s)" % JJ,
      ["order2", "hecke"])
chain("sum(n, 0, inf, q^(n*(n+1))/aqprod(q; q^2; n+1))", [
    ("2-2-cor-1", "1/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^n*q^(2*n^2+2*n-j*(j+1)/2)))", ["hecke"]),
    ("2-2-cor-1-H-pre", "1/(2*Jm(1))*(f(3, 5, 3, q^3, q^4, q) - q^4*f(3, 5, 3, q^7, q^8, q))", ["f-form"]),
    ("2-2-cor-1-H", "1/Jm(1)*f(3, 5, 3, q^3, q^4, q)", ["f-form"]),
    ("2-2-cor-1-A", "-q^-1*m(-q^16, q^48, q^3) - q^-1*m(-q^16, q^48, q^-3) - q^-3*m(-q^8, q^48, q^-3)"
     " - q^-3*m(-q^8, q^48, q^3) - 1/Jm(1)*ThetaN2(3, q^3, q^4, q)", ["m-form"]),
    ("2-2-cor-1-A-simplify", "-2*q^-1*m(-q^16, q^48, q^3) - 2*q^-3*m(-q^8, q^48, q^3)"
     " + q^-4*Jm(48)^3*J(6, 48)*Jbar(16, 48)/(J(-3, 48)*J(3, 48)*Jbar(13, 48)*Jbar(19, 48))"
     " + q^-6*Jm(48)^3*J(6, 48)*Jbar(8, 48)/(J(-3, 48)*J(3, 48)*Jbar(5, 48)*Jbar(11, 48))"
     " - 1/Jm(1)*ThetaN2(3, q^3, q^4, q)", ["m-form"]),
])
ident("HM-nu3-m", "nu3", "2*q^-1*m(q^2, q^12, -q^3) + Jm(1)*J(3, 12)/Jm(2)", ["order3", "m-form"])
ident("Mortenson-nu", "nu3(-q)", "1/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*q^(2*n^2+2*n)*%s)" % JJ, ["order3", "hecke"])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+1)/2)*aqprod(q; q; n)/aqprod(q; q^2; n+1))", [
    ("2-2-cor-2", "sum(n, 0, inf, sum(j, -n, n, q^((3*n^2+3*n)/2-j*(j+1)/2)))", ["hecke"]),
    ("2-2-cor-2-simplify", "1/2*(fbar(1, 2, 1, -q^2, -q^3, q^2) + q^3*fbar(1, 2, 1, -q^5, -q^6, q^2))", ["barf"]),
])
chain("rho6", [
    ("2-2-cor-3-rho", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*q^((3*n^2+3*n)/2)*%s)" % JJ, ["hecke"]),
    ("2-2-cor-3-rho-H-pre", "Jm(2)/(2*Jm(1)^2)*(f(1, 2, 1, q^2, q^3, q^2) - q^3*f(1, 2, 1, q^5, q^6, q^2))", ["f-form"]),
    ("2-2-cor-3-rho-H", "Jm(2)/Jm(1)^2*f(1, 2, 1, q^2, q^3, q^2)", ["f-form"]),
    ("2-2-cor-3-rho-A", "-q^-1*m(1, q^6, -1) + 1/4*q^-1*Jm(2)^6*Jm(3)^4/(Jm(1)^4*Jm(4)^2*Jm(6)*Jm(12)^2)", ["m-form"]),
    ("HM-rho6-m", "-q^-1*m(1, q^6, q)", ["m-form"]),
], ["order6"])
special("thm-ab-2-2", "0", "0", "2-2-cor-1", "(1-q)*aqprod(q; q; inf)")
special("thm-ab-2-2", "0", "1", "2-2-cor-2", "1-q")
special("thm-ab-2-2", "0", "-1", "2-2-cor-3-rho", "(1-q)*aqprod(q; q; inf)/aqprod(-q; q; inf)")
special("thm-ab-2-2", "zeta(4)*q^(1/2)", "-zeta(4)*q^(1/2)", "cor-B", "(1-q)*aqprod(q; q; inf)^2/aqprod(-q^3; q^2; inf)")

MU_PRE = (["q", "a*b/q"], ["a", "b"])
theorem("thm-ab-2-3", hyp_lhs("q", MU_PRE[0], MU_PRE[1], ["q"], ["-q", "-q"], "q^-1"),
        "1 + 4*sum(n, 1, inf, 1/(1+q^n)*%s*(-1)^n*q^((n^2-n)/2))" % ratio("q", "1"),
        "max(|ab/q|, |a|, |b|) < 1", ["order2"])
chain("f3", [
    ("2-3-cor-1", "2/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^((3*n^2+n)/2)/(1+q^n))", ["appell"]),
    ("2-3-cor-1-simplify", "4*m(-q, q^3, q^2) - Jm(3)^4/(Jm(1)*Jm(6)^2)", ["m-form"]),
], ["order3"])
ident("2-3-cor-2", "sum(n, 0, inf, q^((n^2+n)/2)/((1+q^n)*aqprod(-q; q; n)))",
      "2*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(n^2+n)/(1+q^n)^2)", ["appell"])
UNUSUAL = "sum(n, 0, inf, q^((n^2-n)/2)/aqprod(-q; q; n))"
ident("2-3-cor-3-unusual", UNUSUAL, "2", ["constant"])
ident("add-cor5.3-eq", UNUSUAL, "2*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(n^2))", ["theta"])
special("thm-ab-2-3", "0", "0", "2-3-cor-1", "aqprod(q; q; inf)")
special("thm-ab-2-3", "0", "-1", "2-3-cor-3-unusual", "aqprod(q; q; inf)/(2*aqprod(-q; q; inf))")
special("thm-ab-2-3", "-q", "0", "2-3-cor-2", "2*aqprod(q; q; inf)/aqprod(-q; q; inf)")

# ---------------------------------------------------------------------------
section(5)
ident("mock-3-2", "phi3", "1/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*(1+q^n)*q^(n*(3*n+1)/2)/(1+q^(2*n)))",
      ["order3", "appell"])
ident("mock-3-3", "psi3", "q/aqprod(q^4; q^4; inf)*sum(n, -inf, inf, (-1)^n*q^(6*n*(n+1))/(1-q^(4*n+1)))",
      ["order3", "appell"])
ident("mock-3-4", "chi3",
      "1/(2*aqprod(q; q; inf))*sum(n, -inf, inf, (-1)^n*(1+q^n)^2*q^(n*(3*n+1)/2)/(1+q^(3*n)))",
      ["order3", "appell"])
ident("mock-3-5", "omega3",
      "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(3*n*(n+1))*(1+q^(2*n+1))/(1-q^(2*n+1)))", ["order3", "appell"])
ident("mock-3-6", "nu3",
      "1/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*q^(3*n*(n+1)/2)*(1-q^(2*n+1))/(1+q^(2*n+1)))", ["order3", "appell"])
ident("mock-3-7", "rho3", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*(1-q^(4*n+2))*(1-q^(2*n+1))*q^(3*n^2+3*n)"
      "/(1-q^(6*n+3)))", ["order3", "appell"])
ANDREWS_PSI = "1/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*q^(2*n^2+n)*(1-q^(6*n+6))*%s) - 1" % JSUM
MORTENSON_PSI = "1/(2*aqprod(q; q; inf))*sum(n, 0, inf, (-1)^n*q^(2*n^2+n)*(1+q^(2*n+1))*%s) - 1/2" % JJ
AM_PSI = "-1/2 + 1/(2*Jm(1))*(f(3, 5, 3, q^2, q^3, q) - q^3*f(3, 5, 3, q^6, q^7, q))"
ident("Andrews-psi", "psi3", ANDREWS_PSI, ["order3", "hecke"])
ident("Mortenson-psi", "psi3", MORTENSON_PSI, ["order3", "hecke"])
ident("A-M-psi-3-equivalent", "psi3", AM_PSI, ["order3", "f-form"])
theorem("thm-ab-3-2", hyp_lhs("q", MU_PRE[0], MU_PRE[1], ["q"], ["zeta(4)*q", "-zeta(4)*q"], "q^-1"),
        "1 + 2*sum(n, 1, inf, (1+q^n)/(1+q^(2*n))*%s*(-1)^n*q^((n^2-n)/2))" % ratio("q", "1"),
        "max(|ab/q|, |a|, |b|) < 1", ["order3"])
chain("sum(n, 0, inf, aqprod(-q; q; n)*q^((n^2-n)/2)/aqprod(-q^2; q^2; n))", [
    ("3-2-cor-1", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (1+q^n)^2/(1+q^(2*n))*(-1)^n*q^(n^2))", ["appell"]),
    ("3-2-cor-1-simplify", "1 + Jm(2)^5/(Jm(1)^2*Jm(4)^2)", ["theta"]),
])
chain("sum(n, 0, inf, q^((n^2+n)/2)*aqprod(-1; q; n)/aqprod(-q^2; q^2; n))", [
    ("3-2-cor-2", "2*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(n^2+n)/(1+q^(2*n)))", ["appell"]),
    ("3-2-cor-2-simplify", "Jm(2)^5/(Jm(1)^2*Jm(4)^2)", ["theta"]),
])
chain("U0_8", [
    ("3-2-cor-3", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, -inf, inf, (1+q^(2*n))/(1+q^(4*n))*(-1)^n*q^(2*n^2+n))",
     ["appell"]),
    ("3-2-cor-3-simplify", "m(-q, q^4, q^-1) - q^-1*m(-q^-1, q^4, q)", ["m-form"]),
    ("3-2-cor-3-simplify.2", "2*m(-q, q^4, q^3)", ["m-form"]),
    ("HM-U08-m", "2*m(-q, q^4, -1)", ["m-form"]),
], ["order8"])
ident("reciprocal-apply-1", "sum(n, -inf, inf, (-1)^n*q^(n^2+n)/(1+q^(2*n)))", "Jm(2)^4/(2*Jm(4)^2)", ["appell", "theta"])
special("thm-ab-3-2", "0", "0", "mock-3-2", "aqprod(q; q; inf)")
special("thm-ab-3-2", "0", "-1", "3-2-cor-1", "aqprod(q; q; inf)/(2*aqprod(-q; q; inf))")
special("thm-ab-3-2", "0", "-q", "3-2-cor-2", "aqprod(q; q; inf)/aqprod(-q; q; inf)")

GX = "zeta(3)*q^(1/3)"
chain("ug(%s, q)" % GX, [
    ("g-defn", "(%s)^-1*(-1 + sum(n, 0, inf, q^(n^2)/(aqprod(%s; q; n+1)*aqprod(q/(%s); q; n))))" % (GX, GX, GX)),
    ("g-exp", "1/((1-%s)*(1-q/(%s)))*sum(n, 0, inf, q^(n*(n+1))/(aqprod(%s*q; q; n)*aqprod(q^2/(%s); q; n)))"
     % (GX, GX, GX, GX)),
    ("g-last", "1/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*q^((3*n^2+3*n)/2)*(1-q^(2*n+1))/((1-%s*q^n)*(1-q^(n+1)/(%s))))"
     % (GX, GX)),
    ("g-final", "1/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(3*n*(n+1)/2)/((1-%s*q^n)*(1-q^(n+1)/(%s))))" % (GX, GX)),
    ("g-simple", "1/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(3*n*(n+1)/2)/(1-%s*q^n))" % GX),
], ["appell", "universal"])
ident("psi3-g", "psi3", "q*ug(q, q^4)", ["order3", "universal"])

theorem("thm-ab-3-3", hyp_lhs("q", MU_PRE[0], MU_PRE[1], ["q"], ["q^(1/2)", "-q^(1/2)"], "q^-1"),
        "1 + sum(n, 1, inf, (1+q^n)*q^(n^2-2*n)*%s*(-1)^n*(q^(-n*(n+1)/2) - (1-q^n)*%s))" % (ratio("q", "1"), JSUM),
        "max(|ab/q|, |a|, |b|) < 1", ["order3"])
chain("psi3", [
    ("3-3-cor-psi", "-1/aqprod(q; q; inf)*sum(n, 1, inf, (-1)^n*(1-q^(2*n))*q^(2*n^2-n)*sum(j, 0, n-1, q^(-j*(j+1)/2)))",
     ["hecke"]),
    ("3-3-cor-psi-H-pre", "1/(2*Jm(1))*(q*f(3, 5, 3, q^4, q^5, q) - f(3, 5, 3, 1, q, q))", ["f-form"]),
    ("3-3-cor-psi-H", "-1/Jm(1)*f(3, 5, 3, 1, q, q)", ["f-form"]),
    ("3-3-cor-psi-A", "-m(-q^22, q^48, q^3) - q^-1*m(-q^14, q^48, q^-3) - q^-2*m(-q^10, q^48, q^-3)"
     " - q^-5*m(-q^2, q^48, q^3) + 1/Jm(1)*ThetaN2(3, 1, q, q)", ["m-form"]),
    ("3-3-cor-psi-final", "-m(q, -q^3, -q) + q*Jm(12)^3/(J(4, 12)*J(3, 12))", ["m-form"]),
], ["order3"])
chain("sum(n, 0, inf, q^((n^2+n)/2)*aqprod(-1; q; n)/aqprod(q; q^2; n))", [
    ("3-3-cor-1", "aqprod(-q; q; inf)/aqprod(q; q; inf)*(1 + 2*sum(n, 1, inf, (-1)^n*q^((3*n^2-n)/2)*(q^(-n*(n+1)/2)"
     " - (1-q^n)*%s)))" % JSUM, ["hecke"]),
    ("3-3-cor-1-H", "1 - 2*Jm(2)/Jm(1)^2*f(1, 2, 1, q, 1, q^2)", ["f-form"]),
    ("3-3-cor-1-A", "1 - 2*m(q^2, q^6, q)", ["m-form"]),
    ("revise-relation-3", "1 + 2*sigma6", ["order6"]),
])
ident("HM-sigma6-m", "sigma6", "-m(q^2, q^6, q)", ["order6", "m-form"])
special("thm-ab-3-3", "0", "0", "3-3-cor-psi", "aqprod(q; q; inf)", "1")
special("thm-ab-3-3", "0", "-q", "3-3-cor-1", "aqprod(q; q; inf)/aqprod(-q; q; inf)")
# equivalent Hecke-type forms compared directly
ident("Andrews-psi~Mortenson-psi", ANDREWS_PSI, MORTENSON_PSI, ["order3", "equivalence"], ref="Andrews-psi, Mortenson-psi")
ident("Mortenson-psi~A-M-psi-3-equivalent", MORTENSON_PSI, AM_PSI, ["order3", "equivalence"],
      ref="Mortenson-psi, A-M-psi-3-equivalent")
ident("A-M-psi-3-equivalent~3-3-cor-psi", AM_PSI,
      "-1/aqprod(q; q; inf)*sum(n, 1, inf, (-1)^n*(1-q^(2*n))*q^(2*n^2-n)*sum(j, 0, n-1, q^(-j*(j+1)/2)))",
      ["order3", "equivalence"], ref="A-M-psi-3-equivalent, 3-3-cor-psi")

theorem("thm-ab-3-4", hyp_lhs("q", MU_PRE[0], MU_PRE[1], ["q"], ["-zeta(3)*q", "-zeta(3)^2*q"], "q^-1"),
        "1 + sum(n, 1, inf, (1+q^n)/(1-q^n+q^(2*n))*%s*(-1)^n*q^((n^2-n)/2))" % ratio("q", "1"),
        "max(|ab/q|, |a|, |b|) < 1", ["order3"])
Z6M = "(m(zeta(6)^2*q, q^2, -zeta(6)^2) - m(-zeta(6)*q, q^2, zeta(6)))"
CHI1 = "sum(n, 0, inf, q^((n^2+n)/2)*aqprod(-1; q; n)*aqprod(-q; q; n)/aqprod(-q^3; q^3; n))"
CHI2 = "sum(n, 0, inf, q^((n^2-n)/2)*aqprod(-q; q; n)^2/aqprod(-q^3; q^3; n))"
chain(CHI1, [
    ("3-4-cor-1", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(n^2+n)/(1-q^n+q^(2*n)))", ["appell"]),
    ("3-4-cor-1-simplify", "(1-zeta(6))/(1+zeta(6))*%s" % Z6M, ["m-form"]),
])
chain(CHI2, [
    ("3-4-cor-2", "1/2*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(n^2)*(1+q^n)^2/(1-q^n+q^(2*n)))",
     ["appell"]),
    ("3-4-cor-2-simplify", "1/2 + 3*(1-zeta(6))/(2*(1+zeta(6)))*%s" % Z6M, ["m-form"]),
    ("revise-relation-2", "3/2*%s + 1/2" % CHI1),
])
special("thm-ab-3-4", "0", "0", "mock-3-4", "aqprod(q; q; inf)")
special("thm-ab-3-4", "0", "-q", "3-4-cor-1", "aqprod(q; q; inf)/aqprod(-q; q; inf)")
special("thm-ab-3-4", "0", "-1", "3-4-cor-2", "aqprod(q; q; inf)/(2*aqprod(-q; q; inf))")

theorem("thm-ab-3-6", phi_lhs("q", ["q"], ["zeta(4)*q^(3/2)", "-zeta(4)*q^(3/2)"]),
        "(1+q)*sum(n, 0, inf, (1-q^(2*n+1))/(1+q^(2*n+1))*%s*(-1)^n*q^((n^2+n)/2))" % ratio("q", "q"),
        "max(|ab|, |aq|, |bq|) < 1", ["order3"])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+1)/2)*aqprod(q; q; n)/aqprod(-q; q^2; n+1))", [
    ("3-6-cor-1", "sum(n, 0, inf, (1-q^(2*n+1))/(1+q^(2*n+1))*q^(n^2+n))", ["appell"]),
    ("3-6-cor-1-A", "mbar(q, q^2, -q^2)", ["barm"]),
])
chain("sum(n, 0, inf, q^(n*(n+1)/2)*aqprod(-q; q; n)/aqprod(-q; q^2; n+1))", [
    ("3-6-cor-2", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*(1-q^(2*n+1))/(1+q^(2*n+1))*q^(n^2+n))",
     ["appell"]),
    ("3-6-cor-2-simplify", "Jm(4)^2/Jm(2)", ["theta"]),
])
ident("revise-rewrite-1", "sum(n, 0, inf, (-1)^n*(1-q^(2*n+1))/(1+q^(2*n+1))*q^(n^2+n))",
      "sum(n, -inf, inf, (-1)^n*q^(n^2+n)/(1+q^(2*n+1)))", ["appell"])
ident("reciprocal-apply-3", "sum(n, -inf, inf, (-1)^n*q^(n^2+n)/(1+q^(2*n+1)))", "Jm(1)^2*Jm(4)^2/Jm(2)^2",
      ["appell", "theta"])
chain("U1_8", [
    ("3-6-cor-3", "q*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, -inf, inf, (-1)^n*q^(2*n^2+3*n)/(1+q^(4*n+2)))",
     ["appell"]),
    ("3-6-cor-3-simplify", "-m(-q, q^4, q)", ["m-form"]),
    ("HM-U1-m", "-m(-q, q^4, -q^2)", ["m-form"]),
], ["order8"])
chain("sum(n, 0, inf, q^(n+1)*aqprod(-q; q; 2*n)/aqprod(-q^2; q^4; n+1))", [
    ("3-6-cor-4", "q*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*(1-q^(2*n+1))/(1+q^(4*n+2))*q^(n^2+2*n))",
     ["appell"]),
    ("3-6-cor-4-simplify", "-1/2*(1+zeta(4))*m(zeta(4), q^2, q)", ["m-form"]),
    ("3-6-cor-4-V1", "V1_8"),
], ["order8"])
ident("HM-V1-m", "V1_8", "-m(q^2, q^8, q)", ["order8", "m-form"])
ident("nu-Hecke-pre", "nu3",
      "aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (1-q^(2*n+1))*q^(3*n^2+2*n)*sum(j, -n, n, (-1)^j*q^(-j^2)))",
      ["order3", "hecke"])
special("thm-ab-3-6", "0", "0", "mock-3-6", "(1+q)*aqprod(q; q; inf)")
special("thm-ab-3-6", "0", "1", "3-6-cor-1", "1+q")
special("thm-ab-3-6", "0", "-1", "3-6-cor-2", "(1+q)*aqprod(q; q; inf)/aqprod(-q; q; inf)")

theorem("thm-ab-3-7", phi_lhs(Q2, ["q^2"], ["zeta(3)*q^3", "zeta(3)^2*q^3"]),
        "(1+q+q^2)*sum(n, 0, inf, (1-q^(4*n+2))/(1+q^(2*n+1)+q^(4*n+2))*%s*(-1)^n*q^(n^2+n))" % ratio(Q2, "q^2"),
        "max(|ab|, |aq^2|, |bq^2|) < 1", ["order3"])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+1))*aqprod(q; q^2; n+1)*aqprod(q^2; q^2; n)/aqprod(q^3; q^6; n+1))", [
    ("3-7-cor-1", "sum(n, 0, inf, (1-q^(4*n+2))/(1+q^(2*n+1)+q^(4*n+2))*q^(2*n^2+2*n))", ["appell"]),
    ("3-7-cor-1-simplify", "1/(1-zeta(3))*(mbar(-zeta(3)^2*q^2, q^4, -q^4) + zeta(3)*q*mbar(-zeta(3)^2, q^4, -q^6)"
     " - zeta(3)*mbar(-zeta(3)*q^2, q^4, -q^4) - q*mbar(-zeta(3), q^4, -q^6))", ["barm"]),
])
chain("sum(n, 0, inf, (-1)^n*q^(n^2+2*n)*aqprod(q; q^2; n)*aqprod(q; q^2; n+1)/aqprod(q^3; q^6; n+1))", [
    ("3-7-cor-2", "aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (1+q^(2*n+1))/(1+q^(2*n+1)+q^(4*n+2))*q^(2*n^2+3*n))",
     ["appell"]),
    ("3-7-cor-2-simplify", "1/(1-zeta(3))*q^-1*(m(-zeta(3)*q, q^4, -q) - zeta(3)*m(-zeta(3)^2*q, q^4, -q))", ["m-form"]),
])
special("thm-ab-3-7", "0", "0", "mock-3-7", "(1+q+q^2)*aqprod(q^2; q^2; inf)")
special("thm-ab-3-7", "0", "1", "3-7-cor-1", "1+q+q^2")
special("thm-ab-3-7", "0", "q", "3-7-cor-2", "(1+q+q^2)*aqprod(q^2; q^2; inf)/aqprod(q^3; q^2; inf)")


# ---------------------------------------------------------------------------
section(6)
ident("mock-5-1", "f0_5", "1/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j*(1-q^(4*n+2))*q^(n*(5*n+1)/2-j^2)))",
      ["order5", "hecke"])
ident("mock-5-2", "phi0_5", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j"
      "*q^(5*n^2+2*n-3*j^2-j)*(1-q^(6*n+3))))", ["order5", "hecke"])
ident("mock-5-3", "psi0_5", "-aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 1, inf, sum(j, -n, n-1, (1-q^n)*(-1)^j"
      "*q^(n*(5*n-1)/2-j*(3*j+1)/2)))", ["order5", "hecke"])
ident("mock-5-4", "F0_5", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, 0, 2*n, (-1)^n*q^(5*n^2+2*n-j*(j+1)/2)"
      "*(1+q^(6*n+3))))", ["order5", "hecke"])
ident("mock-5-6", "f1_5", "1/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j*q^(n*(5*n+3)/2-j^2)*(1-q^(2*n+1))))",
      ["order5", "hecke"])
ident("mock-5-7", "phi1_5", "q*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j"
      "*q^(5*n^2+4*n-3*j^2-j)*(1-q^(2*n+1))))", ["order5", "hecke"])
ident("mock-5-8", "psi1_5", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^j"
      "*q^(n*(5*n+3)/2-j*(3*j+1)/2)*(1-q^(2*n+1))))", ["order5", "hecke"])
ident("mock-5-9", "F1_5", "1/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, 0, 2*n, (-1)^n*q^(5*n^2+4*n-j*(j+1)/2)"
      "*(1+q^(2*n+1))))", ["order5", "hecke"])
ident("mock-5-chi0", "chi0_5", "2*F0_5 - phi0_5(-q)", ["order5"], ref="chi0-chi1 relations")
ident("mock-5-chi1", "chi1_5", "2*F1_5 + q^-1*phi1_5(-q)", ["order5"], ref="chi0-chi1 relations")

theorem("thm-ab-5-1", hyp_lhs("q", MU_PRE[0], MU_PRE[1], ["q"], ["0", "-q"], "q^-1"),
        "1 + sum(n, 1, inf, %s*(-1)^n*q^((n^2-3*n)/2)*(2*q^n + (-1)^(n-1)*(1-q^n)"
        "*sum(j, -n+1, n-1, (-1)^j*q^(n^2-j^2))))" % ratio("q", "1"),
        "max(|ab/q|, |a|, |b|) < 1", ["order5"])
chain("S0_8", [
    ("5-1-cor-1", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, q^(4*n^2+n)*(1-q^(6*n+3))"
     "*sum(j, -n, n, (-1)^j*q^(-2*j^2)))", ["hecke"]),
    ("5-1-cor-1-H-pre", "Jm(2)/(Jm(1)*Jm(4))*(f(1, 3, 1, q^3, q^3, q^4) + q^5*f(1, 3, 1, q^11, q^11, q^4))", ["f-form"]),
    ("5-1-cor-1-H", "Jm(2)/(Jm(1)*Jm(4))*f(1, 3, 1, q, -q, -q)", ["f-form"]),
    ("5-1-cor-1-A", "2*m(-q^3, q^8, -1) + q*Jbar(1, 8)*J(2, 8)^2/J(3, 8)^2", ["m-form"]),
], ["order8"])
special("thm-ab-5-1", "0", "0", "mock-5-1", "aqprod(q; q; inf)")

LIU_NEW = ("1 + sum(n, 1, inf, (1+q^n)*%s*(-1)^n*q^((n^2-3*n)/2)*(q^n + (-1)^(n-1)*(1-q^n)*q^((3*n^2-n)/2)"
           "*sum(j, -n+1, n-1, (-1)^j*q^(-j*(3*j+1)/2))))" % ratio("q", "1"))
LIU_ORIG = ("sum(n, 0, inf, %s*q^(2*n^2)*(1 - (a-q^(n+1))*(b-q^(n+1))*q^(2*n)/((1-a*q^n)*(1-b*q^n)))"
            "*sum(j, -n, n, (-1)^j*q^(-j*(3*j+1)/2)))" % ratio("q", "1"))
LIU_LHS = hyp_lhs("q", MU_PRE[0], MU_PRE[1], ["q"], [], "q^-1")
theorem("thm-ab-5-2", LIU_LHS, LIU_NEW, "max(|ab/q|, |a|, |b|) < 1", ["order5"])
theorem("Liu-Prop6.10-original", LIU_LHS, LIU_ORIG, "max(|ab/q|, |a|, |b|) < 1", ["order5"])
ident("mock-5-3-new-defn", "1 + 2*psi0_5", "sum(n, 0, inf, aqprod(-1; q; n)*q^(n*(n+1)/2))", ["order5"])
ident("theta-psi-half", "sum(n, 0, inf, q^(n^2))", "1/2 + 1/2*Jm(2)^5/(Jm(1)^2*Jm(4)^2)", ["theta"],
      ref="theta function evaluation")
special("thm-ab-5-2", "0", "-q", "mock-5-3", "2*aqprod(q; q; inf)/aqprod(-q; q; inf)", "1/2")
special("thm-ab-5-2", "0", "0", "theta-psi-half", "aqprod(q; q; inf)")
special("Liu-Prop6.10-original", "0", "-q", "mock-5-3-new-defn", "aqprod(q; q; inf)/aqprod(-q; q; inf)")
special("Liu-Prop6.10-original", "0", "0", "theta-psi-half", "aqprod(q; q; inf)")

J2N = "sum(j, 0, 2*n, q^(-j*(j+1)/2))"
theorem("thm-ab-5-4", hyp_lhs(Q2, ["q^2", "a*b/q^2"], ["a", "b"], ["q^2"], ["0", "q"], "q^-2"),
        "1 + sum(n, 1, inf, %s*(-1)^n*q^(3*n^2-4*n)*(q^(4*n)*%s - sum(j, 0, 2*n-2, q^(-j*(j+1)/2))))"
        % (ratio(Q2, "1"), J2N), "max(|ab/q^2|, |a|, |b|) < 1", ["order5"])
V0_HALF = "sum(n, 0, inf, q^(n^2)*aqprod(-q; q^2; n)/aqprod(q; q^2; n))"
chain(V0_HALF, [
    ("5-4-cor-1", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(4*n^2+2*n)*(1+q^(4*n+2))*%s)" % J2N,
     ["hecke"]),
    ("5-4-cor-1-H", "Jm(2)/(Jm(1)*Jm(4))*(f(1, 3, 1, q^3, q^5, q^4) - q^6*f(1, 3, 1, q^11, q^13, q^4))", ["f-form"]),
    ("5-4-cor-1-A", "m(q^4, q^8, q^(-1/2)) - q^-1*m(1, q^8, q^(1/2)) - q^(-1/2)*J(3/2, 8)^2*J(5/2, 8)*J(4, 8)*Jm(8)^3"
     "/(J(1/2, 8)^2*J(1, 8)*J(2, 8)*J(3, 8)*J(7/2, 8))", ["m-form"]),
    ("5-4-cor-1-V0", "(1 + V0_8)/2", ["order8"]),
])
ident("HM-V08-m", "V0_8", "-2*q^-1*m(1, q^8, q) - Jbar(1, 4)^2/J(2, 8)", ["order8", "m-form"])
ident("eq-fact", "m(q, q^2, -1)", "1/2", ["constant", "appell"])
ident("m-special-value-1", "m(-q, q^2, q)", "1/2", ["constant", "appell"])
T0M = "sum(n, 0, inf, q^(n^2+n)*aqprod(-1; q^2; n)/aqprod(q; q^2; n))"
chain(T0M, [
    ("5-4-cor-2", "aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*(1 + 2*sum(n, 1, inf, (-1)^n*q^(2*n^2-2*n))"
     " - 2*sum(n, 1, inf, (-1)^n*q^(4*n^2-n)*(1-q^(2*n))*%s))" % J2N, ["hecke"]),
    ("5-4-cor-2-H", "1 - 2*Jm(4)/Jm(2)^2*(f(1, 3, 1, 1, q^2, q^4) - q^3*f(1, 3, 1, q^8, q^10, q^4))", ["f-form"]),
    ("5-4-cor-2-A", "1 - 2*m(q^3, q^8, q^(1/2)) - 2*q^(1/2)*J(3/2, 4)*Jm(4)*Jm(8)^2/(J(1/2, 4)*J(3, 8)*Jm(2))", ["m-form"]),
    ("5-4-cor-2-T0", "1 + 2*T0_8(-q)", ["order8"]),
])
ident("HM-T0-m", "T0_8", "-m(-q^3, q^8, q^2)", ["order8", "m-form"])
special("thm-ab-5-4", "0", "0", "mock-5-4", "aqprod(q^2; q^2; inf)")
special("thm-ab-5-4", "0", "-q", "5-4-cor-1", "aqprod(q^2; q^2; inf)/aqprod(-q; q^2; inf)")
special("thm-ab-5-4", "0", "-q^2", "5-4-cor-2", "aqprod(q^2; q^2; inf)/aqprod(-q^2; q^2; inf)")

theorem("meq:2.1", phi_lhs("q", ["q"], ["0", "-q"]),
        "sum(n, 0, inf, sum(j, -n, n, (-1)^j*(1-q^(2*n+1))*%s*q^(n*(3*n+1)/2-j^2)))" % ratio("q", "q"),
        "max(|ab|, |aq|, |bq|) < 1", ["order5"])
chain("sum(n, 0, inf, (-1)^n*aqprod(q; q; n)/aqprod(-q; q; n)*q^(n*(n+1)/2))", [
    ("T6", "sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)*(1-q^(2*n+1))*q^(2*n^2+n-j^2)))", ["hecke"]),
    ("T6-simplify", "fbar(1, 3, 1, -q^2, -q^2, q^2) - q^3*fbar(1, 3, 1, -q^6, -q^6, q^2)", ["barf"]),
])
chain("lambda6", [
    ("5-5-cor-2-lambda", "aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(3*n*(n+1)/2)"
     "*sum(j, -n, n, (-1)^j*q^(-j^2)))", ["hecke"]),
    ("5-5-cor-2-lambda-H-pre", "Jm(1)/(2*Jm(2)^2)*(f(1, 5, 1, -q^2, -q^2, q) - q^3*f(1, 5, 1, -q^5, -q^5, q))", ["f-form"]),
    ("5-5-cor-2-lambda-H", "Jm(1)/Jm(2)^2*f(1, 5, 1, -q^2, -q^2, q)", ["f-form"]),
    ("5-5-cor-2-lambda-A", "4*q^-1*m(-q^6, q^24, -1) + Jm(1)/Jm(2)^2*PhiNP(1, 4, -q^2, -q^2, q)", ["m-form"]),
    ("HM-lambda6-m", "2*q^-1*m(1, q^6, -q^2) + J(1, 2)*Jbar(3, 12)/Jbar(1, 4)", ["m-form"]),
], ["order6"])
chain("sum(n, 0, inf, (-1)^n*q^(n^2+2*n)*aqprod(q; q^2; n)/aqprod(-q^2; q^2; n))", [
    ("5-5-cor-3", "aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*(1+q^(2*n+1))*q^(4*n^2+3*n)"
     "*sum(j, -n, n, (-1)^j*q^(-2*j^2)))", ["hecke"]),
    ("5-5-cor-3-H-pre", "Jm(1)/Jm(2)^2*(f(1, 3, 1, -q^5, -q^5, q^4) - q^7*f(1, 3, 1, -q^13, -q^13, q^4))", ["f-form"]),
    ("5-5-cor-3-H", "Jm(1)/Jm(2)^2*f(1, 3, 1, q^2, -q^2, q)", ["f-form"]),
    ("5-5-cor-3-A", "2*q^-1*m(q, q^8, -1) - q^-1*Jm(1)^2*Jm(8)*J(6, 16)^2/(Jm(2)^2*J(3, 16)*J(5, 16))", ["m-form"]),
    ("5-5-cor-3-S1", "S1_8(-q)", ["order8"]),
])
ident("HM-S18-m", "S1_8", "-2*q^-1*m(-q, q^8, -1) + q^-1*Jbar(3, 8)*J(2, 8)^2/J(1, 8)^2", ["order8", "m-form"])
special("meq:2.1", "0", "0", "mock-5-6", "aqprod(q; q; inf)")
special("meq:2.1", "0", "1", "T6")
special("meq:2.1", "q^(1/2)", "-q^(1/2)", "5-5-cor-2-lambda", "aqprod(q; q; inf)*aqprod(-q; q; inf)/aqprod(q^3; q^2; inf)")

theorem("thm-ab-5-6", hyp_lhs("q", ["q", "a*b"], ["a*q", "b*q"], ["q"], []),
        "sum(n, 0, inf, sum(j, -n, n, (-1)^j*(1-q^(2*n+1))*%s*q^(2*n^2+n-j*(3*j+1)/2)))" % ratio("q", "q"),
        "max(|ab|, |aq|, |bq|) < 1", ["order5"])
ident("theta-psi-q2", "sum(n, 0, inf, q^(n*(n+1)))", "Jm(4)^2/Jm(2)", ["theta"], ref="theta function evaluation")
special("thm-ab-5-6", "0", "-1", "mock-5-8", "aqprod(q; q; inf)/aqprod(-q; q; inf)")
special("thm-ab-5-6", "0", "0", "theta-psi-q2", "aqprod(q; q; inf)")

theorem("thm-ab-5-8", phi_lhs(Q2, ["q^2"], ["0", "q^3"]),
        "(1-q)*sum(n, 0, inf, (1+q^(2*n+1))*%s*(-1)^n*q^(3*n^2+2*n)*sum(j, -n, n, q^(-2*j^2-j)))" % ratio(Q2, "q^2"),
        "max(|ab|, |aq^2|, |bq^2|) < 1", ["order5"])
J2J = "sum(j, -n, n, q^(-2*j^2-j))"
chain("sum(n, 0, inf, (-1)^n*aqprod(q^2; q^2; n)/aqprod(q; q^2; n+1)*q^(n*(n+1)))", [
    ("5-8-cor-1", "sum(n, 0, inf, sum(j, -n, n, (1+q^(2*n+1))*q^(4*n^2+3*n-2*j^2-j)))", ["hecke"]),
    ("5-8-cor-1-simplify", "fbar(1, 3, 1, -q^4, -q^6, q^4) + q^7*fbar(1, 3, 1, -q^12, -q^14, q^4)", ["barf"]),
])
chain("sum(n, 0, inf, q^(n*(n+1))*aqprod(-q^2; q^2; n)/aqprod(q; q^2; n+1))", [
    ("5-8-cor-2", "aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (1+q^(2*n+1))*(-1)^n*q^(4*n^2+3*n)*%s)" % J2J,
     ["hecke"]),
    ("5-8-cor-2-H", "Jm(4)/Jm(2)^2*(f(1, 3, 1, q^4, q^6, q^4) - q^7*f(1, 3, 1, q^12, q^14, q^4))", ["f-form"]),
    ("5-8-cor-2-A", "-q^-1*m(q, q^8, q^(-1/2)) + q^-1*J(3/2, 8)^2*Jm(8)^3/(J(1/2, 8)^2*J(1, 8)*J(2, 8))", ["m-form"]),
    ("5-8-cor-2-T1", "T1_8(-q)", ["order8"]),
])
ident("HM-T1-m", "T1_8", "q^-1*m(-q, q^8, q^6)", ["order8", "m-form"])
chain("psiminus6", [
    ("5-8-cor-3-psi", "q*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*q^(3*n^2+3*n)*%s)" % J2J, ["hecke"]),
    ("5-8-cor-3-psi-H-pre", "1/2*q*Jm(2)/Jm(1)^2*(f(1, 5, 1, q^3, q^5, q^2) - q^6*f(1, 5, 1, q^9, q^11, q^2))", ["f-form"]),
    ("5-8-cor-3-psi-H", "q*Jm(2)/Jm(1)^2*f(1, 5, 1, q^3, q^5, q^2)", ["f-form"]),
    ("5-8-cor-3-psi-A", "-m(-q^18, q^48, -1) + q^-3*m(-q^6, q^48, -1) + q*Jm(2)/Jm(1)^2*PhiNP(1, 4, q^3, q^5, q^2)",
     ["m-form"]),
    ("5-8-cor-3-psi-final", "-m(-q^3, q^12, q) + q^2*Jm(2)^2*Jm(12)*Jm(24)*J(4, 24)^2/(Jm(1)^2*J(1, 24)*J(10, 24)*J(11, 24))",
     ["m-form"]),
    ("HM-psi-minus-m", "-1/2*m(1, q^3, q) + 1/2*q*Jm(6)^3/(Jm(1)*Jm(2))", ["m-form"]),
], ["order6"])
chain("V1_8", [
    ("5-8-cor-4", "q*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(4*n^2+4*n)*%s)" % J2J, ["hecke"]),
    ("5-8-cor-4-H-pre", "1/2*q*Jm(2)/(Jm(1)*Jm(4))*(f(1, 3, 1, q^5, q^7, q^4) - q^8*f(1, 3, 1, q^13, q^15, q^4))", ["f-form"]),
    ("5-8-cor-4-H", "q*Jm(2)/(Jm(1)*Jm(4))*f(1, 3, 1, q^5, q^7, q^4)", ["f-form"]),
    ("5-8-cor-4-A", "-m(q^2, q^8, q^(-1/2)) + J(5/2, 8)*Jm(8)^3/(J(1/2, 8)*J(1, 8)*J(3, 8))", ["m-form"]),
], ["order8"])
special("thm-ab-5-8", "0", "0", "mock-5-9", "(1-q)*aqprod(q^2; q^2; inf)")
special("thm-ab-5-8", "0", "1", "5-8-cor-1", "1-q")
special("thm-ab-5-8", "0", "-1", "5-8-cor-2", "(1-q)*aqprod(q^2; q^2; inf)/aqprod(-q^2; q^2; inf)")
special("thm-ab-5-8", "-q", "-1", "5-8-cor-3-psi",
        "(1-q)/q*aqprod(q^2; q^2; inf)*aqprod(q; q^2; inf)/(aqprod(-q^3; q^2; inf)*aqprod(-q^2; q^2; inf))")
special("thm-ab-5-8", "0", "-q", "5-8-cor-4", "(1-q)/q*aqprod(q^2; q^2; inf)/aqprod(-q^3; q^2; inf)")


# ---------------------------------------------------------------------------
section(7)
SJ = "sum(j, -n, n, (-1)^j*q^(-j^2))"
ident("mock-6-1", "phi6", "aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*(1 + 2*sum(n, 1, inf, q^(2*n^2-n))"
      " + sum(n, 1, inf, (-1)^n*q^(3*n^2-n)*(1-q^(2*n))*sum(j, -n, n, (-1)^(j+1)*q^(-j^2))))", ["order6", "hecke"])
ident("mock-6-2", "psi6", "q*aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)"
      "*q^(3*n^2+3*n-j^2)))", ["order6", "hecke"])
ident("mock-6-3", "rho6", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^n"
      "*q^(3*n*(n+1)/2-j*(j+1)/2)))", ["order6", "hecke"])
ident("mock-6-4", "sigma6", "q*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*(1-q^(n+1))"
      "*q^((3*n^2+5*n)/2)*sum(j, 0, n, q^(-j*(j+1)/2)))", ["order6", "hecke"])
ident("mock-6-5", "lambda6", "aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(3*n*(n+1)/2)*%s)" % SJ,
      ["order6", "hecke"])
ident("mock-6-6", "mu6", "aqprod(q; q^2; inf)/(2*aqprod(q^2; q^2; inf))*sum(n, 0, inf, (-1)^n*q^((3*n^2+n)/2)"
      "*(1+q^(2*n+1))*%s)" % SJ, ["order6", "hecke"])
ident("mock-6-7", "gamma6", "1/aqprod(q; q; inf)*(1 + 3*sum(n, 1, inf, (-1)^n*(1+q^n)/(1+q^n+q^(2*n))*q^((3*n^2+n)/2)))",
      ["order6", "hecke"])
ident("mock-6-8", "phiminus6", "aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (1-q^(2*n+2))*(-1)^n*q^(3*n^2+5*n+1)"
      "*sum(j, 0, n, (1+q^(2*j+1))*q^(-2*j^2-3*j)))", ["order6", "hecke"])
ident("mock-6-9", "psiminus6", "q*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*q^(3*n^2+3*n)"
      "*sum(j, -n, n, q^(-2*j^2-j)))", ["order6", "hecke"])

theorem("thm-ab-6-1", hyp_lhs(Q2, ["q^2", "a*b/q^2"], ["a", "b"], ["q^2"], ["-q", "-q^2"], "q^-2"),
        "1 + sum(n, 1, inf, %s*q^(2*n^2-3*n)*(2*(-1)^n*q^(-n^2) - (1-q^(2*n))*%s))" % (ratio(Q2, "1"), SJ),
        "max(|ab/q^2|, |a|, |b|) < 1", ["order6"])
chain("sum(n, 0, inf, q^(n^2-n)/aqprod(-q; q^2; n))", [
    ("6-1-cor-1", "2*aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*(1 + sum(n, 1, inf, (-1)^n*(1+q^(2*n))*q^(2*n^2-2*n))"
     " - 1/2*sum(n, 1, inf, (1-q^(4*n))*q^(3*n^2-2*n)*%s))" % SJ, ["hecke"]),
    ("6-1-cor-1-H", "1 - Jm(4)/Jm(2)^2*(f(1, 2, 1, 1, 1, q^4) + q*f(1, 2, 1, q^6, q^6, q^4))", ["f-form"]),
    ("6-1-cor-1-A", "1 + 2*q^-1*m(q^2, q^12, -1) - q^-1*Jm(1)*Jm(3)*Jm(8)^2*Jm(12)^2/(Jm(2)*Jm(4)*Jm(6)*Jm(24)^2)",
     ["m-form"]),
    ("6-1-cor-1-nu", "1 + nu3", ["order3"]),
])
chain("phi3", [
    ("6-1-cor-2", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*(1 + 2*sum(n, 1, inf, (-1)^n*q^(2*n^2-n))"
     " - sum(n, 1, inf, (1-q^(2*n))*q^(3*n^2-n)*%s))" % SJ, ["hecke"]),
    ("6-1-cor-2-H", "2 - Jm(2)/(Jm(1)*Jm(4))*(f(1, 2, 1, q, q, q^4) + q^2*f(1, 2, 1, q^7, q^7, q^4))", ["f-form"]),
    ("6-1-cor-2-A", "2 - 2*m(q^7, q^12, -1) + 2*q^-1*m(q, q^12, -1) - q^-1*Jm(1)*Jm(6)^2*Jm(8)^2/(Jm(2)*Jm(4)*Jm(24)^2)",
     ["m-form"]),
    ("6-1-cor-2-final", "2*m(q, -q^3, -1) + 2*q*Jm(12)^3/(J(3, 12)*J(4, 12))", ["m-form"]),
], ["order3"])
ident("revise-Cor7.3-neweq-1", "2 - 2*m(q^7, q^12, -1)", "2*m(q^5, q^12, -1)", ["appell", "lemma"])
special("thm-ab-6-1", "0", "q", "mock-6-1", "aqprod(q^2; q^2; inf)/aqprod(q; q^2; inf)")
special("thm-ab-6-1", "0", "-1", "6-1-cor-1", "aqprod(q^2; q^2; inf)/(2*aqprod(-q^2; q^2; inf))")
special("thm-ab-6-1", "0", "-q", "6-1-cor-2", "aqprod(q^2; q^2; inf)/aqprod(-q; q^2; inf)")

theorem("thm-ab-6-2", hyp_lhs(Q2, ["q^2", "a*b"], ["a*q^2", "b*q^2"], ["q^2"], ["-q^2", "-q^3"]),
        "(1+q)*sum(n, 0, inf, sum(j, -n, n, (1-q^(2*n+1))*%s*(-1)^j*q^(2*n^2+n-j^2)))" % ratio(Q2, "q^2"),
        "max(|ab|, |aq^2|, |bq^2|) < 1", ["order6"])
chain("sum(n, 0, inf, (-1)^n*q^(n*(n+1))*aqprod(q^2; q^2; n)/aqprod(-q; q; 2*n+1))", [
    ("6-2-cor-1", "sum(n, 0, inf, sum(j, -n, n, (-1)^(n+j)*(1-q^(2*n+1))*q^(3*n^2+2*n-j^2)))", ["hecke"]),
    ("6-2-cor-1-H", "fbar(1, 2, 1, -q^4, -q^4, q^4) - q^5*fbar(1, 2, 1, -q^10, -q^10, q^4)", ["barf"]),
    ("6-2-cor-1-combine", "fbar(1, 2, 1, q^(3/2), -q^(3/2), q)", ["barf"]),
])
NU_HECKE_NEW = ("aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (1-q^(2*n+1))*q^(3*n^2+2*n)*%s)" % SJ)
chain("nu3", [
    ("6-2-cor-2-nu", NU_HECKE_NEW, ["hecke"]),
    ("6-2-cor-2-nu-H", "Jm(4)/Jm(2)^2*(f(1, 2, 1, q^4, q^4, q^4) + q^5*f(1, 2, 1, q^10, q^10, q^4))", ["f-form"]),
    ("6-2-cor-2-nu-A", "2*q^-1*m(q^2, q^12, -1) - q^-1*Jm(1)*Jm(3)*Jm(8)^2*Jm(12)^2/(Jm(2)*Jm(4)*Jm(6)*Jm(24)^2)",
     ["m-form"]),
], ["order3"])
special("thm-ab-6-2", "0", "q", "mock-6-2", "(1+q)/q*aqprod(q^2; q^2; inf)/aqprod(q^3; q^2; inf)")
special("thm-ab-6-2", "0", "1", "6-2-cor-1", "1+q")
special("thm-ab-6-2", "0", "-1", "6-2-cor-2-nu", "(1+q)*aqprod(q^2; q^2; inf)/aqprod(-q^2; q^2; inf)")

ident("6-2-cor-2-nu~2-2-cor-1", at(NU_HECKE_NEW, "-q"),
      "1/aqprod(q; q; inf)*sum(n, 0, inf, sum(j, -n, n, (-1)^n*q^(2*n^2+2*n-j*(j+1)/2)))",
      ["order3", "equivalence"], ref="6-2-cor-2-nu, 2-2-cor-1")

H6 = "sum(n, 0, inf, (-1)^n*q^(2*n+1)*aqprod(q; q^2; n)/aqprod(-q; q; n))"
ident("mu-lambda", "2*mu6", "2 + %s - lambda6" % H6, ["order6", "eulerian"])
ident("HM-mu6-m", "mu6", "2*m(q^2, q^6, -1) - 1/2*J(1, 2)*Jbar(1, 3)/Jbar(1, 4)", ["order6", "m-form"])
theorem("thm-ab-6-6", hyp_lhs("q", ["q", "a*b*q"], ["a*q^2", "b*q^2"], ["q"], ["0", "-q"], "q"),
        "sum(n, 0, inf, (1-q^(2*n+2))*%s*q^((3*n^2+5*n)/2)*(2*(-1)^n*q^(-n^2-n) - (1+q^(n+1))*%s))"
        % (ratio("q", "q^2"), SJ), "max(|abq|, |aq^2|, |bq^2|) < 1", ["order6"])
chain(H6, [
    ("revise-H(q)", "-2 + aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^((3*n^2+n)/2)"
     "*(1+q^n+q^(2*n+1))*%s)" % SJ, ["hecke"]),
    ("revise-H(q)-H", "-2 + Jm(1)/Jm(2)^2*(f(1, 5, 1, -q, -q, q) + f(1, 5, 1, -q^2, -q^2, q) + q*f(1, 5, 1, -q^3, -q^3, q))",
     ["f-form"]),
    ("revise-H(q)-A", "-2 + 4*m(-q^10, q^24, -1) + 4*q^-1*m(-q^6, q^24, -1) + 4*q^-2*m(-q^2, q^24, -1)"
     " + Jm(1)/Jm(2)^2*(PhiNP(1, 4, -q, -q, q) + PhiNP(1, 4, -q^2, -q^2, q) + q*PhiNP(1, 4, -q^3, -q^3, q))", ["m-form"]),
    ("revise-H(q)-final", "2*q^-1*m(1, q^6, -q^2) + 4*m(q^2, q^6, -1) - 2 + J(1, 2)*Jbar(3, 12)/Jbar(1, 4)"
     " - J(1, 2)*Jbar(1, 3)/Jbar(1, 4)", ["m-form"]),
], ["order6"])
ident("add-H-use-1", "f(1, 5, 1, -q, -q, q)", "-q^5*f(1, 5, 1, -q^6, -q^6, q)", ["f-form", "lemma"])
ident("add-H-use-2", "f(1, 5, 1, -q^2, -q^2, q)", "-q^3*f(1, 5, 1, -q^5, -q^5, q)", ["f-form", "lemma"])
ident("add-H-use-3", "f(1, 5, 1, -q^3, -q^3, q)", "-q*f(1, 5, 1, -q^4, -q^4, q)", ["f-form", "lemma"])
special("thm-ab-6-6", "q^(1/2)", "-q^(1/2)", "revise-H(q)",
        "aqprod(q; q; inf)*aqprod(-q^2; q; inf)/(q*aqprod(q^5; q^2; inf))")

theorem("thm-ab-6-7", hyp_lhs("q", MU_PRE[0], MU_PRE[1], ["q"], ["zeta(3)*q", "zeta(3)^2*q"], "q^-1"),
        "1 + 3*sum(n, 1, inf, (1+q^n)/(1+q^n+q^(2*n))*%s*(-1)^n*q^((n^2-n)/2))" % ratio("q", "1"),
        "max(|ab/q|, |a|, |b|) < 1", ["order6"])
ZC = "3*(1+zeta(3))/(2*(1-zeta(3)))"
chain("sum(n, 0, inf, q^((n^2-n)/2)*aqprod(q^2; q^2; n)/aqprod(q^3; q^3; n))", [
    ("6-7-cor-1", "3/2*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, -inf, inf, (-1)^n*q^(n^2)*(1+q^n)^2/(1+q^n+q^(2*n)))",
     ["hecke"]),
    ("6-7-cor-1-simplify", "3/2 - %s*(m(zeta(3)^2*q, q^2, zeta(3)^2) - m(zeta(3)*q, q^2, zeta(3)))" % ZC, ["appell"]),
], ["order6"])
chain("sum(n, 0, inf, (-1)^n*q^(n^2)*aqprod(q; q; 2*n)/aqprod(q^6; q^6; n))", [
    ("6-7-cor-2", "3/2*aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, -inf, inf, q^(2*n^2+n)*(1+q^(2*n))"
     "/(1+q^(2*n)+q^(4*n)))", ["hecke"]),
    ("6-7-cor-2-simplify", "3/2 + 1/2*Jm(1)^4/(Jm(2)^2*Jm(3)) + %s*q^-1*(m(-zeta(3)*q^2, q, zeta(3)^2)"
     " - m(-zeta(3)^2*q^2, q, zeta(3)))" % ZC, ["appell"]),
], ["order6"])
special("thm-ab-6-7", "0", "0", "mock-6-7", "aqprod(q; q; inf)")
special("thm-ab-6-7", "0", "-1", "6-7-cor-1", "aqprod(q; q; inf)/(2*aqprod(-q; q; inf))")

theorem("thm-ab-6-8", hyp_lhs(Q2, ["q^2", "a*b*q^2"], ["a*q^4", "b*q^4"], ["q^2"], ["0", "q^3"], "q^2"),
        "(1-q)*sum(n, 0, inf, (1-q^(4*n+4))*%s*(-1)^n*q^(3*n^2+6*n)*sum(j, 0, n, (1+q^(2*j+1))*q^(-2*j^2-3*j)))"
        % ratio(Q2, "q^4"), "max(|abq^2|, |aq^4|, |bq^4|) < 1", ["order6"])
J3J = "sum(j, 0, n, (1+q^(2*j+1))*q^(-2*j^2-3*j))"
chain("sum(n, 0, inf, (-1)^n*q^(n^2+3*n)*aqprod(q^2; q^2; n)/aqprod(q; q^2; n+1))", [
    ("6-8-cor-1", "sum(n, 0, inf, (1+q^(2*n+2))*q^(4*n^2+7*n)*%s)" % J3J, ["hecke"]),
    ("6-8-cor-1-H", "-2*q^-3 + fbar(1, 3, 1, -q^6, -q^12, q^4) + q^11*fbar(1, 3, 1, -q^14, -q^20, q^4)", ["barf"]),
], ["order6"])
chain("sum(n, 0, inf, q^(n^2+3*n)*aqprod(-q^2; q^2; n)/aqprod(q; q^2; n+1))", [
    ("6-8-cor-2", "aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*(1-q^(2*n+2))*q^(4*n^2+7*n)*%s)" % J3J,
     ["hecke"]),
    ("6-8-cor-2-H", "Jm(4)/Jm(2)^2*(f(1, 3, 1, q^6, q^12, q^4) - q^11*f(1, 3, 1, q^14, q^20, q^4))", ["f-form"]),
    ("6-8-cor-2-A", "-q^-2*m(q^3, q^8, q^(-3/2)) + q^-2*J(7/2, 8)^2*Jm(8)^3/(J(3/2, 8)^2*J(2, 8)*J(3, 8))", ["m-form"]),
    ("6-8-cor-2-T0", "q^-2*T0_8(-q)", ["order8"]),
], ["order6"])
ident("revise-6-8-cor-add", "sum(j, 0, 7, (1+q^(2*j+1))*q^(-2*j^2-3*j))",
      "sum(j, -7, 7, q^(-2*j^2-3*j)) + q^(-2*49-7+1)", ["lemma"])
special("thm-ab-6-8", "-1", "-q^(-1)", "mock-6-8", "(1-q)*(1+q^2)/q*aqprod(q; q; inf)/aqprod(-q; q; inf)")
special("thm-ab-6-8", "0", "1", "6-8-cor-1", "(1-q)*(1-q^2)")
special("thm-ab-6-8", "0", "-1", "6-8-cor-2", "(1-q)*(1+q^2)*aqprod(q^2; q^2; inf)/aqprod(-q^2; q^2; inf)")


# ---------------------------------------------------------------------------
section(8)
SJ2 = "sum(j, -n, n, (-1)^j*q^(-2*j^2))"
ident("mock-8-1", "S0_8", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, q^(4*n^2+n)*(1-q^(6*n+3))*%s)" % SJ2,
      ["order8", "hecke"])
ident("mock-8-2", "S1_8", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, q^(4*n^2+3*n)*(1-q^(2*n+1))*%s)" % SJ2,
      ["order8", "hecke"])
ident("mock-8-3", "T0_8", "q^2*aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, q^(4*n^2+7*n)*(1-q^(2*n+2))"
      "*sum(j, -n-1, n, (-1)^j*q^(-2*j^2-3*j)))", ["order8", "hecke"])
ident("mock-8-4", "T1_8", "aqprod(-q^2; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, q^(4*n^2+3*n)*(1-q^(2*n+1))"
      "*sum(j, -n, n, (-1)^j*q^(-2*j^2-j)))", ["order8", "hecke"])
ident("mock-8-5", "U0_8", "aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, -inf, inf, (1+q^(2*n))/(1+q^(4*n))"
      "*(-1)^n*q^(2*n^2+n))", ["order8", "appell"])
ident("mock-8-6", "U1_8", "q*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, -inf, inf, (-1)^n*q^(2*n^2+3*n)"
      "/(1+q^(4*n+2)))", ["order8", "appell"])
ident("mock-8-7-b", "V0_8", "-1 + 2*aqprod(-q^2; q^4; inf)/aqprod(q^4; q^4; inf)*sum(n, -inf, inf, (-1)^n*q^(4*n^2+2*n)"
      "/(1-q^(4*n+1)))", ["order8", "appell"])
ident("mock-8-8-b", "V1_8", "aqprod(-q^4; q^4; inf)/aqprod(q^4; q^4; inf)*sum(n, -inf, inf, (-1)^n*q^((2*n+1)^2)"
      "/(1-q^(4*n+1)))", ["order8", "appell"])
ident("mock-8-7-a-thm", "V0_8", "-1 + 2*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(4*n^2+2*n)"
      "*sum(j, 0, 2*n, q^(-j*(j+1)/2))*(1+q^(4*n+2)))", ["order8", "hecke"])
ident("mock-8-8-a-thm", "V1_8", "q*aqprod(-q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*q^(4*n^2+4*n)"
      "*sum(j, -n, n, q^(-2*j^2-j)))", ["order8", "hecke"])
ident("mock-8-8-c", "V1_8", "q*aqprod(-q; q; inf)/aqprod(q; q; inf)*sum(n, 0, inf, (-1)^n*(1-q^(2*n+1))/(1+q^(4*n+2))"
      "*q^(n^2+2*n))", ["order8", "appell"])
ident("mock-8-5-defn", "U0_8", "S0_8(q^2) + q*S1_8(q^2)", ["order8", "eulerian"])
ident("mock-8-6-defn", "U1_8", "T0_8(q^2) + q*T1_8(q^2)", ["order8", "eulerian"])

theorem("thm-ab-8-3", hyp_lhs(Q2, ["q^2", "a*b*q^2"], ["a*q^4", "b*q^4"], ["q^2"], ["0", "-q^3"], "q^2"),
        "(1+q)*sum(n, 0, inf, (1-q^(4*n+4))*%s*q^(3*n^2+6*n)*sum(j, 0, n, (-1)^j*(1-q^(2*j+1))*q^(-2*j^2-3*j)))"
        % ratio(Q2, "q^4"), "max(|abq^2|, |aq^4|, |bq^4|) < 1", ["order8"])
chain("sum(n, 1, inf, (-1)^n*q^(n^2)*aqprod(q; q^2; n)/aqprod(-q; q^2; n))", [
    ("8-3-cor-1", "-q*aqprod(q; q^2; inf)/aqprod(q^2; q^2; inf)*sum(n, 0, inf, (-1)^n*(1-q^(4*n+4))*q^(4*n^2+6*n)"
     "*sum(j, 0, n, (-1)^j*(1-q^(2*j+1))*q^(-2*j^2-3*j)))", ["hecke"]),
    ("8-3-cor-1-H", "-q*Jm(1)/Jm(2)^2*(f(1, 3, 1, -q^5, -q^11, q^4) - q^10*f(1, 3, 1, -q^13, -q^19, q^4)) + q^-1",
     ["f-form"]),
    ("8-3-cor-1-A", "-m(q^4, q^8, q^(-3/2)) - q^-1*m(q^8, q^8, q^(-3/2)) + q^-1 + J(1, 8)^2*J(3, 8)*J(4, 8)*Jm(8)^3"
     "/(J(1/2, 8)*J(3/2, 8)^2*J(2, 8)^2*J(5/2, 8))", ["m-form"]),
    ("8-3-cor-1-final", "-1/2 + q^-1*m(1, q^8, -q) - 1/2*Jm(1)^2*Jm(4)^3/(Jm(2)^3*Jm(8))", ["m-form"]),
    ("8-3-cor-1-V0", "1/2*V0_8(-q) - 1/2", ["eulerian"]),
], ["order8"])
ident("revise-sec8-T08-cor-neweq-1", "m(q^4, q^8, q^(-3/2))",
      "1/2 + 1/2*Jm(8)^3*J(3, 8)*J(4, 8)/(J(3/2, 8)^2*J(5/2, 8)^2)", ["appell", "lemma"])
ident("revise-sec8-T08-cor-neweq-2", "m(q^8, q^8, q^(-3/2))", "1 - m(1, q^8, q^(-3/2))", ["appell", "lemma"])
ident("revise-sec8-T08-cor-neweq-3", "m(1, q^8, q^(-3/2)) - m(1, q^8, -q)",
      "-q*J(1, 16)^3*J(5, 16)*J(7, 16)^2*Jm(8)*Jm(16)^4/(J(1/2, 16)*J(3/2, 16)^2*J(2, 16)^2*J(5/2, 16)"
      "*J(11/2, 16)*J(13/2, 16)^2*J(15/2, 16))", ["appell", "lemma"])
special("thm-ab-8-3", "0", "-1", "mock-8-3", "(1+q)*(1+q^2)/q^2*aqprod(q^2; q^2; inf)/aqprod(-q^2; q^2; inf)")
special("thm-ab-8-3", "0", "q^(-1)", "8-3-cor-1", "-(1+q)/(q*(1-q))*aqprod(q^2; q^2; inf)/aqprod(q^3; q^2; inf)")

theorem("thm-ab-8-7", hyp_lhs("q^4", ["q^4", "a*b/q^4"], ["a", "b"], ["q^4"], ["q^3", "q^5"], "q^-4"),
        "1 - (1-q)^2*sum(n, 1, inf, (1+q^(4*n))/((1-q^(4*n-1))*(1-q^(4*n+1)))*%s*(-1)^n*q^(2*n^2-2*n-1))"
        % ratio("q^4", "1"), "max(|ab/q^4|, |a|, |b|) < 1", ["order8"])
V0_EUL2 = "sum(n, 0, inf, (-1)^n*q^(2*n^2)*aqprod(q^2; q^4; n)/aqprod(q; q^2; 2*n+1))"
chain(V0_EUL2, [
    ("8-7-cor-1", "aqprod(q^2; q^4; inf)/aqprod(q^4; q^4; inf)*sum(n, -inf, inf, q^(4*n^2+2*n)/(1-q^(4*n+1)))", ["appell"]),
    ("8-7-cor-1-m", "m(-q, q^2, q) + 1/2*Jm(2)^5/(Jm(1)^2*Jm(4)^2)", ["m-form"]),
    ("8-7-cor-1-simplify", "1/2 + 1/2*Jm(2)^5/(Jm(1)^2*Jm(4)^2)", ["theta"]),
], ["order8"])
ident("revise-relation-1", "sum(n, 0, inf, aqprod(-q; q; n)*q^((n^2-n)/2)/aqprod(-q^2; q^2; n))", "2*" + V0_EUL2,
      ["order3", "eulerian"])
special("thm-ab-8-7", "0", "-q^2", "mock-8-7-b", "(1-q)/2*aqprod(q^4; q^4; inf)/aqprod(-q^2; q^4; inf)", "1")
special("thm-ab-8-7", "0", "q^2", "8-7-cor-1", "(1-q)*aqprod(q^4; q^4; inf)/aqprod(q^2; q^4; inf)")

theorem("thm-ab-8-8", hyp_lhs("q^4", ["q^4", "a*b"], ["a*q^4", "b*q^4"], ["q^4"], ["q^5", "q^7"]),
        "(1-q)*(1-q^3)*sum(n, 0, inf, (1-q^(8*n+4))/((1-q^(4*n+1))*(1-q^(4*n+3)))*%s*(-1)^n*q^(2*n^2+2*n))"
        % ratio("q^4", "q^4"), "max(|ab|, |aq^4|, |bq^4|) < 1", ["order8"])
chain("sum(n, 0, inf, (-1)^n*q^(2*n*(n+1))*aqprod(q^4; q^4; n)/aqprod(q; q^2; 2*n+2))", [
    ("8-8-cor-1", "sum(n, 0, inf, q^(4*n^2+4*n)/(1-q^(4*n+1))) - sum(n, -inf, -1, q^(4*n^2+4*n)/(1-q^(4*n+1)))", ["appell"]),
    ("8-8-cor-1-simplify", "mbar(-q^2, q^8, -q^8) + q*mbar(-q^-2, q^8, -q^12)", ["barm"]),
], ["order8"])
V1_EUL_Q3 = "sum(n, 0, inf, (-1)^n*q^(2*n^2+4*n)*aqprod(q^2; q^4; n)/aqprod(q^3; q^2; 2*n+1))"
chain(V1_EUL_Q3, [
    ("8-8-cor-2", "aqprod(q^2; q^4; inf)/aqprod(q^4; q^4; inf)*sum(n, -inf, inf, q^(4*n^2+6*n)/(1-q^(4*n+1)))", ["appell"]),
    ("8-8-cor-2-simplify", "q^-2*m(-1, q^8, -q^2) - q^-1*m(-q^4, q^8, -q^2)", ["m-form"]),
    ("8-8-cor-2-final", "-1/2*q^-1 + 1/2*q^-1*Jm(2)^5/(Jm(1)^2*Jm(4)^2)", ["theta"]),
], ["order8"])
ident("revise-sec8-new-1", V0_EUL2, "q*" + V1_EUL_Q3 + " + 1", ["order8", "eulerian"])
special("thm-ab-8-8", "0", "-1", "mock-8-8-b", "(1-q)*(1-q^3)/q*aqprod(q^4; q^4; inf)/aqprod(-q^4; q^4; inf)")
special("thm-ab-8-8", "0", "1", "8-8-cor-1", "(1-q)*(1-q^3)")
special("thm-ab-8-8", "0", "q^2", "8-8-cor-2", "(1-q^3)*aqprod(q^4; q^4; inf)/aqprod(q^6; q^4; inf)")

NEW_V18 = "Jm(2)/Jm(1)^2*(2*q*Jm(16)^2/Jm(8)*m(q^2, q^8, -1) - Jm(8)^5/(Jm(4)^2*Jm(16)^2)*m(q^2, q^8, -q^4))"
chain("V1_8", [
    ("New-V18-sum", "q*Jm(2)/Jm(1)^2*sum(n, -inf, inf, (-1)^n*q^(n^2+2*n)/(1+q^(4*n+2)))", ["appell"]),
    ("New-V18-split", "q*Jm(2)/Jm(1)^2*(sum(n, -inf, inf, q^(4*n^2+4*n)/(1+q^(8*n+2)))"
     " - sum(n, -inf, inf, q^(4*n^2+8*n+3)/(1+q^(8*n+6))))", ["appell"]),
    ("New-V18", NEW_V18, ["m-form"]),
    ("HM-V18", "-m(q^2, q^8, q)", ["m-form"]),
], ["order8"])
ident("New-V18~HM-V18", NEW_V18, "-m(q^2, q^8, q)", ["order8", "appell", "equivalence"], ref="New-V18, HM-V18")
ident("V18-equiv-1", "m(q^2, q^8, -1) - m(q^2, q^8, q)", "1/2*Jm(2)^4*Jm(8)^4/(Jm(1)^2*Jm(4)^3*Jm(16)^2)",
      ["appell", "lemma"])
ident("V18-equiv-1-pre", "m(q^2, q^8, -1) - m(q^2, q^8, q)",
      "q*Jm(8)^3*Jbar(-1, 8)*Jbar(3, 8)/(J(1, 8)*Jbar(0, 8)*J(3, 8)*Jbar(2, 8))", ["appell", "lemma"])
ident("V18-equiv-2", "m(q^2, q^8, -q^4) - m(q^2, q^8, q)", "q*Jm(2)^4*Jm(16)^2/(Jm(1)^2*Jm(4)*Jm(8)^2)",
      ["appell", "lemma"])
ident("V18-equiv-3", "Jm(8)^5/(Jm(4)^2*Jm(16)^2) - 2*q*Jm(16)^2/Jm(8)", "Jm(1)^2/Jm(2)", ["theta"])


# ---------------------------------------------------------------------------
section(9)
ident("mock-7-1", "F0_7", "1/aqprod(q; q; inf)*(sum(n, 0, inf, sum(j, -n, n, q^(7*n^2+n-j^2)*(1-q^(12*n+6))))"
      " - 2*sum(n, 0, inf, sum(j, 0, n, q^(7*n^2+8*n+2-j^2-j)*(1-q^(12*n+12)))))", ["order7", "hecke"])
ident("mock-7-2", "F1_7", "1/aqprod(q; q; inf)*(-2*sum(n, 0, inf, sum(j, 0, n-1, q^(7*n^2-2*n-j^2-j)*(1-q^(4*n))))"
      " + sum(n, 0, inf, sum(j, -n, n, q^(7*n^2+5*n+1-j^2)*(1-q^(4*n+2)))))", ["order7", "hecke"])
ident("mock-7-3", "F2_7", "1/aqprod(q; q; inf)*(sum(n, 0, inf, sum(j, -n, n, q^(7*n^2+3*n-j^2)*(1-q^(8*n+4))))"
      " - 2*q^3*sum(n, 0, inf, sum(j, 0, n, q^(7*n^2+10*n-j^2-j)*(1-q^(8*n+8)))))", ["order7", "hecke"])
ident("mock-7-1-pre", "F0_7", "sum(n, 0, inf, q^(n^2)/(aqprod(-q; q; n)*aqprod(q^(1/2); q; n)*aqprod(-q^(1/2); q; n)))",
      ["order7", "eulerian"])
ident("mock-10-1", "phi10", "aqprod(q^2; q^2; inf)/aqprod(q; q; inf)^2*(sum(n, 0, inf, sum(j, -n, n, q^(5*n^2+2*n-j^2)"
      "*(1-q^(6*n+3)))) - 2*sum(n, 0, inf, sum(j, 0, n, q^(5*n^2+7*n+2-j^2-j)*(1-q^(6*n+6)))))", ["order10", "hecke"])
ident("mock-10-2", "psi10", "aqprod(q^2; q^2; inf)/aqprod(q; q; inf)^2*(sum(n, 0, inf, sum(j, -n, n, q^(5*n^2+4*n+1-j^2)"
      "*(1-q^(2*n+1)))) - 2*sum(n, 0, inf, sum(j, 0, n, q^(5*n^2+9*n+4-j^2-j)*(1-q^(2*n+2)))))", ["order10", "hecke"])
ident("mock-10-3", "X10", "aqprod(q; q; inf)/aqprod(q^2; q^2; inf)^2*(sum(n, 0, inf, sum(j, -n, n, q^(10*n^2+2*n-2*j^2)"
      "*(1-q^(16*n+8)))) + 2*sum(n, 0, inf, sum(j, 0, n, q^(10*n^2+12*n+3-2*j^2-2*j)*(1-q^(16*n+16)))))",
      ["order10", "hecke"])
ident("mock-10-4", "chi10", "aqprod(q; q; inf)/aqprod(q^2; q^2; inf)^2*(2*sum(n, 0, inf, sum(j, 0, n, q^(10*n^2+16*n+6"
      "-2*j^2-2*j)*(1-q^(8*n+8)))) + sum(n, 0, inf, sum(j, -n, n, q^(10*n^2+6*n+1-2*j^2)*(1-q^(8*n+4)))))",
      ["order10", "hecke"])
ident("mock-10-1-pre", "phi10", "1/(1-q)*sum(n, 0, inf, q^(n*(n+1)/2)/(aqprod(q^(3/2); q; n)*aqprod(-q^(3/2); q; n)))",
      ["order10", "eulerian"])


def annotate_denominators(entries, probe=16):
    """Record each entry's exponent denominator D and the default order that goes with it."""
    from math import lcm

    from qmock.dsl import evaluate

    for e in entries:
        D = lcm(evaluate(e["lhs"], probe).D, evaluate(e["rhs"], probe).D)
        e["D"] = D
        e["default_order"] = 40 if D == 1 else 60 if D == 2 else 80


def main(argv=None):
    ids = [e["id"] for e in IDENTITIES]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        sys.exit("duplicate ids: %s" % sorted(dup))
    annotate_denominators(IDENTITIES)
    data = {"version": 1, "identities": IDENTITIES, "theorems": THEOREMS,
            "specializations": SPECIALIZATIONS}
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("wrote %d identities, %d theorems, %d specializations"
          % (len(IDENTITIES), len(THEOREMS), len(SPECIALIZATIONS)))


if __name__ == "__main__":
    main()
