#!/usr/bin/env python3
"""Generate the embedded representation-ring systems for S3, A4, D5 and A5.

Characters of every subgroup class representative are computed numerically
(class-sum eigenvectors), grouped into real or rational irreducibles, and
restriction/induction multiplicities are read off by inner products. The
subgroup structure (class keys, representatives, Weyl generators, embedding
conjugators) comes from `repfilt skeleton`, so the tables line up with the
engine's canonical class order.

Usage: gen_builtin_systems.py --cli build/repfilt --out include/repfilt/builtin_data.hpp
"""

import argparse
import cmath
import json
import math
import subprocess

import numpy as np

SYSTEMS = [
    # (builtin name, group spec, field)
    ("S3/C", "S3", "C"),
    ("S3/R", "S3", "R"),
    ("A4/Q", "A4", "Q"),
    ("D5/Q", "D5", "Q"),
    ("A5/Q", "A5", "Q"),
]

BASE = {"C": "Complex", "R": "Real", "Q": "Rational"}


def mul(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def power(g, k):
    r = tuple(range(len(g)))
    for _ in range(k):
        r = mul(r, g)
    return r


def order(g):
    e = tuple(range(len(g)))
    k, x = 1, g
    while x != e:
        x, k = mul(x, g), k + 1
    return k


def cycles(p):
    seen, out = set(), ""
    for x in range(len(p)):
        if x in seen or p[x] == x:
            continue
        c, y = [], x
        while y not in seen:
            seen.add(y)
            c.append(str(y))
            y = p[y]
        out += "(" + " ".join(c) + ")"
    return out or "()"


def complex_characters(H):
    """Irreducible complex characters of H as dicts element -> complex."""
    H = sorted(H)
    n = len(H)
    classes, seen = [], set()
    for h in H:
        if h in seen:
            continue
        c = frozenset(mul(mul(g, h), inv(g)) for g in H)
        seen |= c
        classes.append(sorted(c))
    k = len(classes)
    class_of = {x: i for i, c in enumerate(classes) for x in c}
    M = np.zeros((k, k, k))
    for j in range(k):
        for i in range(k):
            for x in classes[i]:
                for y in classes[j]:
                    M[j][i][class_of[mul(x, y)]] += 1
        for i in range(k):
            for l in range(k):
                M[j][i][l] /= len(classes[l])
    rng = np.random.default_rng(1)
    A = sum(rng.normal() * M[j] for j in range(k))
    _, V = np.linalg.eig(A)
    ident = class_of[tuple(range(len(H[0])))]
    chars = []
    for t in range(k):
        v = V[:, t] / V[ident, t]
        ratio = [v[i] / len(classes[i]) for i in range(k)]
        s = sum(len(classes[i]) * abs(ratio[i]) ** 2 for i in range(k))
        d = math.sqrt(n / s.real)
        chars.append({h: complex(d * ratio[class_of[h]]) for h in H})
    return chars


def close(a, b, S):
    return all(abs(a[h] - b[h]) < 1e-6 for h in S)


def field_characters(H, field):
    cx = complex_characters(H)
    if field == "C":
        return cx
    m = 1
    for g in H:
        m = m * order(g) // math.gcd(m, order(g))
    out = []
    for c in cx:
        if field == "Q":
            orbit = []
            for k in range(1, m + 1):
                if math.gcd(k, m) != 1:
                    continue
                ck = {h: c[power(h, k)] for h in H}
                if not any(close(ck, o, H) for o in orbit):
                    orbit.append(ck)
            s = {h: sum(o[h] for o in orbit) for h in H}
        else:
            cb = {h: c[h].conjugate() for h in H}
            s = c if close(c, cb, H) else {h: c[h] + cb[h] for h in H}
        if not any(close(s, o, H) for o in out):
            out.append(s)
    return out


def inner(a, b, H):
    return sum(a[h] * b[h].conjugate() for h in H) / len(H)


def decompose(psi, basis, H):
    out = []
    for r in basis:
        m = inner(psi, r, H) / inner(r, r, H)
        mi = int(round(m.real))
        assert abs(m - mi) < 1e-6, m
        out.append(mi)
    return out


def label_characters(key, H, chars, field, identity):
    """Name each character after the conventions used in the tables."""
    labels = []
    dims = [int(round(c[identity].real)) for c in chars]
    if key.startswith("C") and key[1:].isdigit():
        n = int(key[1:])
        gamma = min(h for h in H if order(h) == n)
        for c, d in zip(chars, dims):
            if close(c, {h: 1 for h in H}, H):
                labels.append("[1]")
            elif n == 2:
                labels.append("[-1]")
            elif field == "C":
                i = int(round(cmath.phase(c[gamma]) / (2 * math.pi) * n)) % n
                labels.append("[eta%d]" % n if i == 1 else "[eta%d^%d]" % (n, i))
            else:
                labels.append("[rho%d]" % n)
        return labels, dims
    if key == "V4":
        subs = sorted([h for h in H if h != identity])
        for c in chars:
            if close(c, {h: 1 for h in H}, H):
                labels.append("[1]")
            else:
                kernel = [h for h in subs if abs(c[h] - 1) < 1e-6][0]
                labels.append("[phi%d]" % (subs.index(kernel) + 1))
        return labels, dims
    names = {
        "e": {1: "[1]"},
        "S3": {1: "[sgn]", 2: "[nu3]"},
        "D5": {1: "[-1]", 4: "[psi]"},
        "A4": {2: "[eta]", 3: "[nu4]"},
        "A5": {4: "[nu5]", 5: "[psi]", 6: "[L2nu5]"},
    }[key]
    for c, d in zip(chars, dims):
        if close(c, {h: 1 for h in H}, H):
            labels.append("[1]")
        else:
            labels.append(names[d])
    assert len(set(labels)) == len(labels), (key, labels)
    return labels, dims


def build_system(name, skeleton, field):
    deg = skeleton["degree"]
    identity = tuple(range(deg))
    classes = skeleton["classes"]
    data = {}
    for c in classes:
        H = [tuple(x) for x in c["elements"]]
        chars = field_characters(H, field)
        labels, dims = label_characters(c["key"], H, chars, field, identity)
        order_key = sorted(range(len(chars)),
                           key=lambda i: (labels[i] != "[1]", dims[i], labels[i]))
        data[c["key"]] = {
            "H": H,
            "chars": [chars[i] for i in order_key],
            "labels": [labels[i] for i in order_key],
            "dims": [dims[i] for i in order_key],
        }

    groups = []
    for c in classes:
        d = data[c["key"]]
        H = d["H"]
        weyl = []
        for w, wc in zip(c["weyl_generators"], c["weyl_generator_cycles"]):
            w = tuple(w)
            wi = inv(w)
            perm = []
            for chi in d["chars"]:
                moved = {h: chi[mul(mul(wi, h), w)] for h in H}
                perm.append([j for j, o in enumerate(d["chars"]) if close(moved, o, H)][0])
            weyl.append({"element": wc, "perm": perm})
        res, ind = {}, {}
        for e in c["embeddings"]:
            sub = data[e["sub"]]
            g = tuple(e["conjugator"])
            gi = inv(g)
            K = sub["H"]
            image = {mul(mul(g, k), gi) for k in K}
            r_rows = []
            for chi in d["chars"]:
                pulled = {k: chi[mul(mul(g, k), gi)] for k in K}
                r_rows.append(decompose(pulled, sub["chars"], K))
            i_rows = []
            for chi in sub["chars"]:
                pushed = {s: chi[mul(mul(gi, s), g)] for s in image}
                induced = {}
                for h in H:
                    v = 0
                    for x in H:
                        y = mul(mul(inv(x), h), x)
                        if y in image:
                            v += pushed[y]
                    induced[h] = v / len(K)
                i_rows.append(decompose(induced, d["chars"], H))
            res.setdefault(e["sub"], []).append(
                {"conjugator": e["conjugator_cycles"], "matrix": r_rows})
            # ind tables live at the smaller class, keyed by the larger one.
            data[e["sub"]].setdefault("ind", {}).setdefault(c["key"], []).append(
                {"conjugator": e["conjugator_cycles"], "matrix": i_rows})
        d["res"] = res
        d["weyl"] = weyl
    for c in classes:
        d = data[c["key"]]
        groups.append({
            "class_key": c["key"],
            "trivial": "[1]",
            "indecomposables": [{"label": l, "dim": n} for l, n in zip(d["labels"], d["dims"])],
            "weyl": d["weyl"],
            "res": {k: (v[0]["matrix"] if len(v) == 1 and v[0]["conjugator"] == "()" else v)
                    for k, v in d["res"].items()},
            "ind": {k: (v[0]["matrix"] if len(v) == 1 and v[0]["conjugator"] == "()" else v)
                    for k, v in d.get("ind", {}).items()},
        })
    return {
        "name": "paper:" + name,
        "base": BASE[field],
        "characteristic": 0,
        "group": skeleton["group"],
        "flags": {"semisimple": True, "frobenius": field == "C", "mackey": True},
        "groups": groups,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cli", required=True, help="path to the repfilt executable")
    ap.add_argument("--out", required=True, help="header to write")
    args = ap.parse_args()
    skeletons = {}
    entries = []
    for name, group, field in SYSTEMS:
        if group not in skeletons:
            out = subprocess.run([args.cli, "skeleton", "--group", group, "--format", "json"],
                                 check=True, capture_output=True, text=True).stdout
            skeletons[group] = json.loads(out)["result"]
        system = build_system(name, skeletons[group], field)
        entries.append((name, json.dumps(system, sort_keys=True, separators=(",", ":"))))
    with open(args.out, "w", encoding="utf-8") as f:
        f.write("#pragma once\n\n")
        f.write("// Generated by tools/gen_builtin_systems.py; do not edit.\n\n")
        f.write("#include <string_view>\n#include <utility>\n\nnamespace repfilt::data {\n\n")
        f.write("inline constexpr std::pair<std::string_view, std::string_view> kBuiltinSystems[] = {\n")
        for name, text in entries:
            f.write('    {"%s", R"json(%s)json"},\n' % (name, text))
        f.write("};\n\n}  // namespace repfilt::data\n")


if __name__ == "__main__":
    main()
