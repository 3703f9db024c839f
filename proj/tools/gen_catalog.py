#!/usr/bin/env python3
"""Writes src/catalog_data.inc: explicit tables for the named algebras.

Each algebra is built here from its textbook description, independently of
the C++ construction code, and emitted in the algebra file format.
"""

import itertools
import sys
from pathlib import Path


class Alg:
    def __init__(self, name, labels, leq, kleene, brouwer):
        self.name = name
        self.labels = labels
        self.leq = leq          # set of (a, b) label pairs, reflexive, transitive
        self.kleene = kleene    # dict label -> label
        self.brouwer = brouwer  # dict label -> label

    def covers(self):
        lt = {(a, b) for (a, b) in self.leq if a != b}
        out = []
        for a, b in lt:
            if not any((a, c) in lt and (c, b) in lt for c in self.labels):
                out.append((a, b))
        pos = {s: i for i, s in enumerate(self.labels)}
        return sorted(out, key=lambda p: (pos[p[0]], pos[p[1]]))

    def bounds(self):
        zero = [a for a in self.labels if all((a, b) in self.leq for b in self.labels)]
        one = [a for a in self.labels if all((b, a) in self.leq for b in self.labels)]
        return zero[0], one[0]

    def text(self):
        zero, one = self.bounds()
        lines = [
            f"algebra {self.name}",
            "elements " + " ".join(self.labels),
            "covers " + " ; ".join(f"{a} < {b}" for a, b in self.covers()),
            "kleene " + " ".join(f"{a}:{self.kleene[a]}" for a in self.labels),
            "brouwer " + " ".join(f"{a}:{self.brouwer[a]}" for a in self.labels),
            f"bounds {zero} {one}",
        ]
        return "\n".join(lines) + "\n"


def closure(labels, pairs):
    leq = {(a, a) for a in labels} | set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), list(leq)):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return leq


def kleene_chain(n):
    """D_n: the n-element chain, order-reversing involution, a~ = 0 iff a > 0."""
    if n == 2:
        labels = ["0", "1"]
    else:
        inner = n - 2
        lower = [chr(ord("a") + i) for i in range(inner // 2)]
        upper = [x + "'" for x in reversed(lower)]
        middle = []
        if inner % 2 == 1:
            middle = ["a"] if not lower else ["c"]
        labels = ["0"] + lower + middle + upper + ["1"]
    assert len(labels) == n
    leq = closure(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])
    kleene = {labels[i]: labels[n - 1 - i] for i in range(n)}
    brouwer = {x: ("1" if x == "0" else "0") for x in labels}
    return Alg(f"D{n}", labels, leq, kleene, brouwer)


def boolean(atoms):
    """Powerset of `atoms`; ' and ~ are both set complement."""
    n = len(atoms)
    full = (1 << n) - 1

    def name(mask):
        if mask == 0:
            return "0"
        if mask == full:
            return "1"
        if n == 2:
            return atoms[0] if mask == 1 else atoms[0] + "'"
        if bin(mask).count("1") == n - 1:
            missing = [atoms[i] for i in range(n) if not mask >> i & 1][0]
            return missing + "'"
        return "".join(atoms[i] for i in range(n) if mask >> i & 1)

    masks = sorted(range(full + 1), key=lambda m: (bin(m).count("1"), m))
    labels = [name(m) for m in masks]
    leq = {(name(a), name(b)) for a in masks for b in masks if a & b == a}
    comp = {name(m): name(full ^ m) for m in masks}
    return Alg(f"B{full + 1}", labels, leq, comp, dict(comp))


def horizontal(name, parts):
    """Glue summands (label lists already disjoint apart from 0 and 1)."""
    labels = ["0"]
    for p in parts:
        labels += [x for x in p.labels if x not in ("0", "1")]
    labels.append("1")
    pairs = [("0", x) for x in labels] + [(x, "1") for x in labels]
    kleene, brouwer = {}, {}
    for p in parts:
        pairs += list(p.leq)
        kleene.update(p.kleene)
        brouwer.update(p.brouwer)
    return Alg(name, labels, closure(labels, pairs), kleene, brouwer)


def relabel(alg, mapping):
    m = lambda x: mapping.get(x, x)
    return Alg(alg.name, [m(x) for x in alg.labels],
               {(m(a), m(b)) for a, b in alg.leq},
               {m(a): m(b) for a, b in alg.kleene.items()},
               {m(a): m(b) for a, b in alg.brouwer.items()})


def twist(name, lat_labels, lat_leq, keep_zero, f_names, zero_name):
    """Dual copy f[L] (or f[L minus 0]) glued below L.

    f_names maps L-labels to labels of their copies; zero_name renames the
    bottom of L.
    """
    bottom = [a for a in lat_labels if all((a, b) in lat_leq for b in lat_labels)][0]
    ren = lambda x: zero_name if x == bottom else x
    upper = [ren(x) for x in lat_labels]
    copied = [x for x in lat_labels if keep_zero or x != bottom]
    lower = [f_names[x] for x in reversed(copied)]
    labels = lower + upper
    pairs = [(f_names[a], f_names[b]) for a in copied for b in copied if (b, a) in lat_leq]
    pairs += [(ren(a), ren(b)) for a, b in lat_leq]
    pairs += [(x, y) for x in lower for y in upper]
    leq = closure(labels, pairs)
    kleene = {}
    for x in copied:
        kleene[f_names[x]] = ren(x)
        kleene[ren(x)] = f_names[x]
    if not keep_zero:
        kleene[zero_name] = zero_name
    least = [a for a in labels if all((a, b) in leq for b in labels)][0]
    top = [a for a in labels if all((b, a) in leq for b in labels)][0]
    brouwer = {x: (top if x == least else least) for x in labels}
    return Alg(name, labels, leq, kleene, brouwer)


def entries():
    out = []
    for n in range(2, 9):
        out.append((kleene_chain(n), [f"D{n}"],
                    "n-element Kleene chain, a~ = 0 iff a > 0"))
    b4 = boolean(["a", "b"])
    out.append((b4, ["B4"], "four-element Boolean algebra, ~ = '"))
    out.append((boolean(["a", "b", "c"]), ["B8"], "eight-element Boolean algebra"))
    out.append((boolean(["a", "b", "c", "d"]), ["B16"], "sixteen-element Boolean algebra"))

    mo2_labels = ["0", "a", "a'", "b", "b'", "1"]
    mo2_leq = closure(mo2_labels, [("0", x) for x in mo2_labels[1:5]] +
                      [(x, "1") for x in mo2_labels[1:5]])
    mo2_comp = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    mo2 = Alg("MO2", mo2_labels, mo2_leq, mo2_comp, dict(mo2_comp))
    out.append((mo2, ["MO2"], "modular ortholattice with four atoms, ~ = '"))

    o6_labels = ["0", "a", "b", "b'", "a'", "1"]
    o6_leq = closure(o6_labels, [("0", "a"), ("a", "b'"), ("b'", "1"),
                                 ("0", "b"), ("b", "a'"), ("a'", "1")])
    o6_comp = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    o6 = Alg("O6", o6_labels, o6_leq, o6_comp, dict(o6_comp))
    out.append((o6, ["O6-benzene", "O6"], "benzene ring ortholattice, ~ = '"))

    d3c = relabel(kleene_chain(3), {"a": "c"})
    d4b = relabel(kleene_chain(4), {"a": "b", "a'": "b'"})
    d5b = relabel(kleene_chain(5), {"a": "b", "a'": "b'"})
    out.append((horizontal("MO2+D3", [mo2, d3c]), ["MO2⊞D3", "MO2+D3"],
                "horizontal sum of MO2 and D3"))
    out.append((horizontal("B4+D3", [b4, d3c]), ["B4⊞D3", "B4+D3"],
                "horizontal sum of B4 and D3"))
    out.append((horizontal("B4+D4", [b4, d4b]), ["B4⊞D4", "B4+D4"],
                "horizontal sum of B4 and D4"))
    out.append((horizontal("B4+D5", [b4, d5b]), ["B4⊞D5", "B4+D5"],
                "horizontal sum of B4 and D5"))

    sq_labels = ["0", "p", "q", "1"]
    sq_leq = closure(sq_labels, [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    t1 = twist("T1(2x2)", sq_labels, sq_leq, False,
               {"p": "p'", "q": "q'", "1": "0"}, "c")
    out.append((t1, ["T1(2x2)"], "first twist of the four-element Boolean lattice"))
    t2 = twist("T2(2x2)", sq_labels, sq_leq, True,
               {"0": "c'", "p": "p'", "q": "q'", "1": "0"}, "c")
    out.append((t2, ["T2(2x2)"], "second twist of the four-element Boolean lattice"))

    # N5 = {0 < x < z < u, 0 < y < u}, then a new top 1 above u
    n5_labels = ["0", "x", "y", "z", "u", "1"]
    n5_leq = closure(n5_labels, [("0", "x"), ("x", "z"), ("z", "u"),
                                 ("0", "y"), ("y", "u"), ("u", "1")])
    t1n5 = twist("T1(N5+1)", n5_labels, n5_leq, False,
                 {"x": "x'", "y": "y'", "z": "z'", "u": "u'", "1": "0"}, "c")
    out.append((t1n5, ["T1(N5⊕1)", "T1(N5+1)"],
                "first twist of the pentagon with a new top"))
    return out


def main():
    dest = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "src" / "catalog_data.inc"
    chunks = ["// Generated by tools/gen_catalog.py; do not edit.\n"]
    for alg, names, note in entries():
        alias_list = ", ".join(f'"{n}"' for n in names)
        chunks.append(f'{{{{{alias_list}}}, "{note}",\n R"pbz({alg.text()})pbz"}},\n')
    dest.write_text("".join(chunks), encoding="utf-8")


if __name__ == "__main__":
    main()
