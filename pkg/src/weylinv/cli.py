"""Command-line front end: ``weylinv <command> <args> [flags]``.

Every command prints one JSON document
``{"command", "input", "result", "certificate"?, "elapsed_ms"}`` with keys in
sorted order.  Exit status is 0 on success, 1 on a domain error and 2 when a
budget or cap is exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import characters, hv, semigroup, spin, weyl
from .errors import BudgetExceeded, WeylInvError
from .rootsystem import FAMILIES, build_root_system, to_epsilon, validate_type, weyl_orbit
from .semigroup import GroupSpec

CACHE_ENV = "WEYLINV_CACHE"


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``FACTOR ("x" FACTOR)*`` with ``FACTOR = [A-G][0-9]+``, case-insensitive."""
    if not text:
        raise WeylInvError("empty group spec")
    factors = []
    pos = 0
    while True:
        if pos >= len(text):
            raise WeylInvError(f"expected a factor at position {pos}")
        ch = text[pos]
        if ch.isspace():
            raise WeylInvError(f"whitespace is not allowed (position {pos})")
        if ch.upper() not in FAMILIES:
            raise WeylInvError(f"unknown family {ch!r} at position {pos}")
        start = pos
        pos += 1
        digits_at = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == digits_at:
            raise WeylInvError(f"expected rank digits at position {digits_at}")
        rank = int(text[digits_at:pos])
        try:
            factors.append(validate_type(ch.upper(), rank))
        except WeylInvError as exc:
            raise WeylInvError(f"{exc} (factor at position {start})") from None
        if pos == len(text):
            return GroupSpec(tuple(factors))
        if text[pos] in "xX":
            pos += 1
            continue
        if text[pos].isspace():
            raise WeylInvError(f"whitespace is not allowed (position {pos})")
        raise WeylInvError(f"unexpected character {text[pos]!r} at position {pos}")


def parse_weight(text: str, rank: int | None = None) -> tuple[int, ...]:
    try:
        w = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise WeylInvError(f"weight {text!r} must be comma-separated integers") from None
    if rank is not None and len(w) != rank:
        raise WeylInvError(f"weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w


def _simple(spec: GroupSpec):
    if len(spec.factors) != 1:
        raise WeylInvError(f"{spec} is not simple; this command takes a single factor")
    return build_root_system(*spec.factors[0])


def _d_rank(text: str) -> int:
    rs = _simple(parse_group_spec(text))
    if rs.family != "D":
        raise WeylInvError("spin commands need a type D_r group spec, e.g. D5")
    return rs.rank


def _per_factor(spec: GroupSpec, fn):
    values = [fn(build_root_system(f, r)) for f, r in spec.factors]
    if len(values) == 1:
        return values[0]
    return [{"factor": f"{f}{r}", "value": v} for (f, r), v in zip(spec.factors, values)]


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _decomposition(result):
    return result.to_json()


# -- commands ----------------------------------------------------------------
# each returns (input, result, certificate-or-None)

def cmd_root_system(a):
    spec = parse_group_spec(a.spec)

    def describe(rs):
        out = {
            "type": rs.name,
            "rank": rs.rank,
            "cartan_matrix": [list(r) for r in rs.cartan_matrix],
            "symmetrizer": list(rs.symmetrizer),
            "num_positive_roots": len(rs.positive_roots),
            "coxeter_number": rs.coxeter_number,
            "positive_roots": [list(r) for r in rs.positive_roots],
            "positive_root_coeffs": [list(r) for r in rs.positive_root_coeffs],
        }
        if a.epsilon and rs.family in "AD":
            out["fundamental_weights_epsilon"] = [
                [str(c) for c in to_epsilon(rs, w)] for w in rs.fundamental_weights]
        return out

    return {"spec": str(spec)}, _per_factor(spec, describe), None


def cmd_order(a):
    spec = parse_group_spec(a.spec)
    result = _per_factor(spec, lambda rs: weyl.element_order(weyl.coxeter_element(rs)))
    cert = _per_factor(spec, lambda rs: weyl.coxeter_element(rs).to_json())
    return {"spec": str(spec)}, result, {"coxeter_element": cert}


def cmd_exponents(a):
    spec = parse_group_spec(a.spec)
    return {"spec": str(spec)}, _per_factor(spec, weyl.exponents), None


def cmd_weyl_order(a):
    spec = parse_group_spec(a.spec)
    total = 1
    for f, r in spec.factors:
        total *= weyl.weyl_group_order(build_root_system(f, r))
    cert = _per_factor(spec, lambda rs: {"exponents": weyl.exponents(rs),
                                         "order": weyl.weyl_group_order(rs)})
    return {"spec": str(spec)}, total, cert


def _block_collection(spec: GroupSpec, m: int):
    """Balanced m-collection of a product, built blockwise from the factors."""
    parts = [weyl.canonical_balanced_collection(build_root_system(f, r), m) for f, r in spec.factors]
    if len(parts) == 1:
        return parts[0].to_json()
    elements = []
    n = sum(r for _, r in spec.factors)
    for i in range(m):
        mat = [[0] * n for _ in range(n)]
        offset = 0
        for part, (_, r) in zip(parts, spec.factors):
            block = part.elements[i].matrix
            for x in range(r):
                for y in range(r):
                    mat[offset + x][offset + y] = block[x][y]
            offset += r
        elements.append({"matrix": mat})
    total = [[sum(e["matrix"][x][y] for e in elements) for y in range(n)] for x in range(n)]
    assert all(v == 0 for row in total for v in row)
    return {"size": m, "elements": elements, "sum": total,
            "factors": [{"factor": f"{f}{r}", "pieces": [{"generator": g, "length": k}
                                                           for g, k in p.pieces]}
                        for p, (f, r) in zip(parts, spec.factors)]}


def cmd_balanced(a):
    spec = parse_group_spec(a.spec)
    coll = _block_collection(spec, a.m)
    return {"spec": str(spec), "m": a.m}, {"balanced": True, "size": a.m}, {"collection": coll}


def cmd_search_balanced(a):
    spec = parse_group_spec(a.spec)
    rs = _simple(spec)
    budget = a.budget if a.budget is not None else weyl.SEARCH_BUDGET
    found = weyl.search_balanced(rs, a.m, budget=budget)
    inp = {"spec": str(spec), "m": a.m, "budget": budget}
    if found is None:
        return inp, {"found": False, "status": "none-exists"}, None
    return inp, {"found": True, "status": "found"}, {"collection": found.to_json()}


def cmd_minus_id(a):
    spec = parse_group_spec(a.spec)
    per = _per_factor(spec, weyl.minus_identity_in_weyl)
    allf = all(weyl.minus_identity_in_weyl(build_root_system(f, r)) for f, r in spec.factors)
    result = per if len(spec.factors) == 1 else {"all": allf, "factors": per}
    cert = _per_factor(spec, lambda rs: {"w0_word": list(weyl.longest_element(rs).word)})
    return {"spec": str(spec)}, result, cert


def _mg_certificate(rs):
    s = semigroup.m_of_simple(rs.family, rs.rank)
    return {
        "center_exponent": semigroup.center_exponent(rs.family, rs.rank),
        "generators": semigroup.generators(s),
        "balanced_collections": {
            str(g): weyl.canonical_balanced_collection(rs, g).to_json()
            for g in semigroup.generators(s)},
    }


def cmd_mg(a):
    spec = parse_group_spec(a.spec)
    s = semigroup.m_of_semisimple(spec)
    result = {"M": str(s), "m": semigroup.min_element(s), "modulus": s.modulus,
              "threshold": s.threshold}
    cert = _per_factor(spec, _mg_certificate)
    return {"spec": str(spec)}, result, cert


def cmd_center_bound(a):
    spec = parse_group_spec(a.spec)
    per = _per_factor(spec, lambda rs: semigroup.center_exponent(rs.family, rs.rank))
    return {"spec": str(spec)}, per, None


def cmd_verify_mg(a):
    spec = parse_group_spec(a.spec)
    rs = _simple(spec)
    bound = a.bound if a.bound is not None else 2
    check = semigroup.verify_membership(rs.family, rs.rank, a.n, bound, cap=a.budget)
    expected = semigroup.contains(semigroup.m_of_simple(rs.family, rs.rank), a.n)
    result = {"holds": check.holds, "checked": check.checked,
              "witness": list(check.witness) if check.witness else None,
              "table_says": expected}
    return {"spec": str(spec), "n": a.n, "bound": bound}, result, None


def _weight_cmd(a):
    spec = parse_group_spec(a.spec)
    rs = _simple(spec)
    return spec, rs, parse_weight(a.weight, rs.rank)


def cmd_dims(a):
    spec, rs, w = _weight_cmd(a)
    return {"spec": str(spec), "weight": list(w)}, characters.irrep_dimension(rs, w), None


def cmd_weights(a):
    spec, rs, w = _weight_cmd(a)
    char = characters.weight_multiplicities(rs, w, cap=a.budget or characters.DIMENSION_CAP)
    result = {"dimension": char.dimension, "weights": char.to_json()}
    if a.epsilon and rs.family in "AD":
        result["epsilon"] = [[[str(c) for c in to_epsilon(rs, x)], m] for x, m in char.to_json()]
    return {"spec": str(spec), "weight": list(w)}, result, None


def cmd_tensor(a):
    spec = parse_group_spec(a.spec)
    rs = _simple(spec)
    w1, w2 = parse_weight(a.w1, rs.rank), parse_weight(a.w2, rs.rank)
    kwargs = {"cap": a.budget} if a.budget else {}
    res = characters.tensor_decompose(rs, w1, w2, **kwargs)
    return ({"spec": str(spec), "weights": [list(w1), list(w2)]},
            {"summands": _decomposition(res), "dimension": res.dimension}, None)


def cmd_invariant_dim(a):
    spec = parse_group_spec(a.spec)
    rs = _simple(spec)
    ws = [parse_weight(w, rs.rank) for w in a.weights]
    kwargs = {"cap": a.budget} if a.budget else {}
    return ({"spec": str(spec), "weights": [list(w) for w in ws]},
            characters.invariant_dimension(rs, ws, **kwargs), None)


def cmd_dual(a):
    spec, rs, w = _weight_cmd(a)
    d = characters.dual_weight(rs, w)
    return ({"spec": str(spec), "weight": list(w)},
            {"dual": list(d), "self_conjugate": d == w}, None)


def cmd_spin_shape(a):
    r = _d_rank(a.spec)
    w = parse_weight(a.weight, r)
    shape = spin.shape_of_weight(r, w)
    rect = shape.rectangle
    return ({"spec": f"D{r}", "weight": list(w)},
            {"partition": list(shape.rows),
             "rectangle": {"rows": rect[0], "columns": rect[1]} if rect else None}, None)


def cmd_spin_tableaux(a):
    r = _d_rank(a.spec)
    tabs = spin.enumerate_standard_tableaux(r, a.q, budget=a.budget or spin.TABLEAU_BUDGET)
    out = [{"rows": [list(row) for row in t.entries],
            "weight_epsilon": [str(c) for c in spin.tableau_weight(t)]} for t in tabs]
    return {"spec": f"D{r}", "q": a.q}, {"count": len(tabs), "tableaux": out}, None


def cmd_spin_lr(a):
    r = _d_rank(a.spec)
    res = spin.lr_tensor_decompose(r, a.p, a.q)
    return ({"spec": f"D{r}", "p": a.p, "q": a.q},
            {"summands": _decomposition(res), "dimension": res.dimension}, None)


def cmd_spin_closed(a):
    res = spin.half_spin_closed_form(a.n, a.p, a.q)
    return ({"n": a.n, "p": a.p, "q": a.q, "spec": f"D{2 * a.n + 1}"},
            {"summands": _decomposition(res), "dimension": res.dimension}, None)


def cmd_invariant_free_triple(a):
    v = spin.is_invariant_free_triple(a.n, a.p, a.q, a.t, oracle=True)
    return ({"n": a.n, "p": a.p, "q": a.q, "t": a.t, "spec": f"D{2 * a.n + 1}"},
            {"invariant_free": v.invariant_free}, v.to_json())


def cmd_minuscule(a):
    spec, rs, w = _weight_cmd(a)
    return {"spec": str(spec), "weight": list(w)}, hv.is_minuscule(rs, w), None


def cmd_hv_dim(a):
    spec, rs, w = _weight_cmd(a)
    return {"spec": str(spec), "weight": list(w)}, hv.hv_dimension(rs, w), None


def cmd_hv_tuple(a):
    spec, rs, w = _weight_cmd(a)
    mus = [parse_weight(m, rs.rank) for m in a.tuple_weights]
    stab = hv.tuple_stabilizer(rs, w, mus)
    return ({"spec": str(spec), "weight": list(w), "tuple": [list(m) for m in mus]},
            {"orbit_dim": rs.dimension - stab.dimension},
            {"stabilizer_dim": stab.dimension, "torus_codim": stab.torus_codim,
             "stabilizer_roots": [list(r) for r in stab.stabilizer_roots]})


def cmd_hv_pair(a):
    spec, rs, w = _weight_cmd(a)
    h = hv.hv_dimension(rs, w)
    witnesses = hv.dense_orbit_witnesses(rs, w) if a.all_witnesses else None
    mu = hv.find_dense_orbit_pair(rs, w)
    if mu is None:
        best = max(hv.tuple_orbit_dimension(rs, w, [w, x]) for x in weyl_orbit(rs, w))
        return ({"spec": str(spec), "weight": list(w)},
                {"dense_orbit": False, "hv_dim": h, "orbit_dim": best}, None)
    stab = hv.tuple_stabilizer(rs, w, [w, mu])
    result = {"dense_orbit": True, "hv_dim": h, "orbit_dim": rs.dimension - stab.dimension,
              "witness": list(mu)}
    if witnesses is not None:
        result["witnesses"] = [list(x) for x in witnesses]
    cert = {"stabilizer_dim": stab.dimension,
            "stabilizer_roots": [list(r) for r in stab.stabilizer_roots]}
    return {"spec": str(spec), "weight": list(w)}, result, cert


def cmd_self_conjugate(a):
    spec = parse_group_spec(a.spec)
    flags = [weyl.minus_identity_in_weyl(build_root_system(f, r)) for f, r in spec.factors]
    return ({"spec": str(spec)},
            {"self_conjugate": all(flags),
             "factors": [{"factor": f"{f}{r}", "minus_identity_in_weyl": v}
                         for (f, r), v in zip(spec.factors, flags)]}, None)


COMMANDS = {
    "root-system": (cmd_root_system, ["spec"]),
    "order": (cmd_order, ["spec"]),
    "exponents": (cmd_exponents, ["spec"]),
    "weyl-order": (cmd_weyl_order, ["spec"]),
    "balanced": (cmd_balanced, ["spec", "m:int"]),
    "search-balanced": (cmd_search_balanced, ["spec", "m:int"]),
    "minus-id": (cmd_minus_id, ["spec"]),
    "mg": (cmd_mg, ["spec"]),
    "center-bound": (cmd_center_bound, ["spec"]),
    "verify-mg": (cmd_verify_mg, ["spec", "n:int"]),
    "dims": (cmd_dims, ["spec", "weight"]),
    "weights": (cmd_weights, ["spec", "weight"]),
    "tensor": (cmd_tensor, ["spec", "w1", "w2"]),
    "invariant-dim": (cmd_invariant_dim, ["spec", "weights+"]),
    "dual": (cmd_dual, ["spec", "weight"]),
    "spin-shape": (cmd_spin_shape, ["spec", "weight"]),
    "spin-tableaux": (cmd_spin_tableaux, ["spec", "q:int"]),
    "spin-lr": (cmd_spin_lr, ["spec", "p:int", "q:int"]),
    "spin-closed": (cmd_spin_closed, ["n:int", "p:int", "q:int"]),
    "invariant-free-triple": (cmd_invariant_free_triple, ["n:int", "p:int", "q:int", "t:int"]),
    "minuscule": (cmd_minuscule, ["spec", "weight"]),
    "hv-dim": (cmd_hv_dim, ["spec", "weight"]),
    "hv-tuple": (cmd_hv_tuple, ["spec", "weight", "tuple_weights+"]),
    "hv-pair": (cmd_hv_pair, ["spec", "weight"]),
    "self-conjugate": (cmd_self_conjugate, ["spec"]),
}


def _common_flags(defaults: bool) -> argparse.ArgumentParser:
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", default=d(False),
                     help="JSON output (default)")
    fmt.add_argument("--text", dest="text", action="store_true", default=d(False),
                     help="plain text output")
    p.add_argument("--budget", type=int, default=d(None), help="search budget / work cap")
    p.add_argument("--bound", type=int, default=d(None), help="coordinate bound for verify-mg")
    p.add_argument("--cache", default=d(None), help=f"character cache file (default ${CACHE_ENV})")
    p.add_argument("--all-witnesses", action="store_true", default=d(False),
                   help="hv-pair: list every dense-orbit witness")
    p.add_argument("--epsilon", action="store_true", default=d(False),
                   help="also print epsilon coordinates (types A and D)")
    p.add_argument("--no-timing", action="store_true", default=d(False),
                   help="omit elapsed_ms so output is byte-reproducible")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylinv",
        description="Tensor-invariant semigroups, Weyl group certificates, Spin tableaux "
                    "and HV-variety orbit dimensions.",
        parents=[_common_flags(True)])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = _common_flags(False)
    for name, (_, params) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=COMMANDS[name][0].__name__[4:].replace("_", " "))
        for param in params:
            pname, _, kind = param.partition(":")
            if pname.endswith("+"):
                sp.add_argument(pname[:-1], nargs="+")
            else:
                sp.add_argument(pname, type=int if kind == "int" else str)
    return parser


def _render_text(doc) -> str:
    lines = [f"command: {doc['command']}"]
    for key in ("input", "result", "certificate", "error"):
        if key in doc:
            lines.append(f"{key}: {json.dumps(doc[key], sort_keys=True)}")
    if "elapsed_ms" in doc:
        lines.append(f"elapsed_ms: {doc['elapsed_ms']}")
    return "\n".join(lines)


def run(argv=None) -> tuple[int, str]:
    """Execute one command; return (exit_code, rendered output)."""
    parser = build_parser()
    a = parser.parse_args(argv)
    func = COMMANDS[a.command][0]
    names = [p.partition(":")[0].rstrip("+") for p in COMMANDS[a.command][1]]
    doc = {"command": a.command, "input": {n: getattr(a, n) for n in names}}
    cache_path = a.cache or os.environ.get(CACHE_ENV)
    code = 0
    start = time.perf_counter()
    try:
        if cache_path and os.path.exists(cache_path):
            characters.CACHE.load(cache_path)
        inp, result, cert = func(a)
        doc["input"] = _jsonable(inp)
        doc["result"] = _jsonable(result)
        if cert is not None:
            doc["certificate"] = _jsonable(cert)
        if cache_path and characters.CACHE.dirty:
            characters.CACHE.save(cache_path)
    except BudgetExceeded as exc:
        code = 2
        doc["error"] = {"type": "budget", "message": str(exc), "used": exc.used,
                        "budget": exc.budget}
        if a.command == "search-balanced":
            doc["result"] = {"found": None, "status": "unknown"}
    except WeylInvError as exc:
        code = 1
        doc["error"] = {"type": "domain", "message": str(exc)}
    if not a.no_timing:
        doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if a.text:
        return code, _render_text(doc)
    return code, json.dumps(doc, sort_keys=True)


def main(argv=None) -> int:
    code, out = run(argv)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
