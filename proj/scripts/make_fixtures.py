#!/usr/bin/env python3
"""Regenerate tests/fixtures/links.tsv from DT codes and named links.

Needs spherogram (pip install snappy). PD codes are written with 1-based arc
labels in KnotTheory order: counterclockwise from the incoming under-strand.
Table links are stored mirrored: spherogram reads these DT codes with the
opposite chirality to the published spectral sequence tables.
"""
import argparse
import random
import sys
import warnings

warnings.filterwarnings("ignore")
import spherogram  # noqa: E402

# Morwen hyperbolic link table entries, DT notation.
TABLE = {
    "2n12_1705": "lbcideGfklIJBCHa",
    "2n13_8862": "mbcjdehkgLajMbcFI",
    "2n14_65798": "nbfhgHkNlIfJEAmdbC",
    "2a11_739": "kbeffghjieabkdc",
    "2a12_2521": "lbegfghijalbckde",
    "2a12_2552": "lbegfghjialbkdce",
    "2a12_2672": "lbffgdhlijakbefc",
    "2n12_5515": "lbegfghlIaekJDbc",
    "2n12_5516": "lbegfGHlIckJDBAe",
    "2n12_5517": "lbegfghlIeakJDbc",
    "2n12_5519": "lbegfgihJealcKDb",
    "2n12_5522": "lbegfgIlJdabKECH",
    "2n12_5538": "lbffgCEhBIJkdLAf",
    "2n12_5546": "lbffgCEHBjfkDlai",
    "2n12_5553": "lbffgCEhBkjadlfi",
    "2n12_5559": "lbffgCEIBkajDlfh",
    "2n12_5563": "lbffgCEIBlafkDhj",
    "2n12_5570": "lbffgCEjBhafkldi",
    "2n12_5600": "lbffgDIFKBjalChE",
    "3a12_2910": "lcbeecehjiklgadbf",
}

NAMED = {
    "hopf_l2a1": "L2a1",
    "trefoil": "K3a1",
    "figure_eight": "K4a1",
    "cinquefoil": "K5a2",
    "knot_6_2": "K6a2",
    "whitehead": "L5a1",
    "solomon": "L4a1",
    "link_6a1": "L6a1",
    "link_6a3": "L6a3",
    "borromean": "L6a4",
    "link_7n1": "L7n1",
    "link_7a6": "L7a6",
}

# (name, source, random seed, extra crossings wanted)
PAIRS = [
    ("trefoil_r", "K3a1", 1, 3),
    ("figure_eight_r", "K4a1", 2, 3),
    ("hopf_r", "L2a1", 3, 4),
    ("whitehead_r", "L5a1", 4, 2),
    ("solomon_r", "L4a1", 5, 3),
    ("link_6a1_r", "L6a1", 6, 2),
]


def pd_string(link):
    return " ".join("X(%d,%d,%d,%d)" % tuple(a + 1 for a in c) for c in link.PD_code())


def enlarged(source, seed, extra):
    random.seed(seed)
    base = spherogram.Link(source)
    target = len(base.crossings) + extra
    for attempt in range(500):
        link = base.copy()
        while len(link.crossings) < target:
            link.backtrack(steps=1, prob_type_1=0.5, prob_type_2=0.5)
        if len(link.crossings) == target and len(link.link_components) == len(base.link_components):
            lk = link.linking_matrix()
            if lk == base.linking_matrix():
                return link
    raise RuntimeError("could not enlarge " + source)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()
    rows = [
        ("unknot", "O"),
        ("unlink_2", "O O"),
        ("unlink_3", "O O O"),
        ("curl_positive", "X(2,2,1,1)"),
        ("curl_negative", "X(1,2,2,1)"),
        ("hopf", "X(1,3,2,4) X(3,1,4,2)"),
        ("hopf_negative", "X(1,4,2,3) X(3,2,4,1)"),
        ("chain_3", pd_string(spherogram.ClosedBraid([1, 1, 2, 2]))),
    ]
    for name, code in NAMED.items():
        rows.append((name, pd_string(spherogram.Link(code))))
    for name, source, seed, extra in PAIRS:
        rows.append((name, pd_string(enlarged(source, seed, extra))))
    for name, dt in TABLE.items():
        rows.append((name, pd_string(spherogram.Link("DT:" + dt).mirror())))
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    out.write("# name\tPD code\n")
    for name, pd in rows:
        out.write("%s\t%s\n" % (name, pd))


if __name__ == "__main__":
    main()
