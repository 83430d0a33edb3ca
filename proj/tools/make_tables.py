#!/usr/bin/env python3
"""Regenerate the bundled knot and link tables from the KnotInfo/LinkInfo CSV dumps.

The CSV files ship with the `database_knotinfo` Python package
(csv_data/knotinfo_data_complete.csv and csv_data/linkinfo_data_complete.csv).

    python3 tools/make_tables.py /path/to/csv_data data/
"""

import argparse
import csv
import json
import pathlib
import re

csv.field_size_limit(10**9)


def read_rows(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        next(reader)  # display names
        for row in reader:
            yield dict(zip(header, row))


def pd_text(crossings):
    return ";".join("X(%d,%d,%d,%d)" % tuple(x) for x in crossings)


def knot_lines(rows, keep):
    for row in rows:
        name = row["name"]
        if not keep(row):
            continue
        pd = json.loads(row["pd_notation"])
        yield name, pd_text(pd)


def ht_name(name):
    m = re.fullmatch(r"11([an])_(\d+)", name)
    return "K11%s%s" % (m.group(1), m.group(2))


# Alternate diagrams appended to the Rolfsen table. 10_161 is the Perko knot;
# the original table drew it twice, once with writhe 8 (one negative crossing),
# which is the closure of the braid below.
ROLFSEN_OVERRIDES = [
    ("10_161",
     "X(10,2,11,1);X(2,12,3,11);X(12,4,13,3);X(17,5,18,4);X(13,18,14,19);"
     "X(5,15,6,14);X(6,20,7,19);X(20,8,1,7);X(15,9,16,8);X(9,17,10,16)",
     "Perko writhe-8 diagram, closure of s1 s1 s1 s2 S1 s2 s1 s1 s2 s2"),
]


def write_table(path, header, lines, overrides=()):
    with open(path, "w") as fh:
        for h in header:
            fh.write("# %s\n" % h)
        for name, notation in lines:
            fh.write("%s %s\n" % (name, notation))
        for name, notation, reason in overrides:
            fh.write("@override %s %s  # %s\n" % (name, notation, reason))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv_dir", type=pathlib.Path)
    ap.add_argument("out_dir", type=pathlib.Path)
    ap.add_argument("--link-crossings", type=int, default=8)
    args = ap.parse_args()

    knots = list(read_rows(args.csv_dir / "knotinfo_data_complete.csv"))

    def cn(row):
        return int(row["crossing_number"]) if row["crossing_number"].isdigit() else -1

    rolfsen = [(n, p) for n, p in knot_lines(knots, lambda r: 3 <= cn(r) <= 10)]
    write_table(
        args.out_dir / "rolfsen_upto10.tbl",
        ["Prime knots through 10 crossings, Rolfsen numbering.",
         "PD codes from KnotInfo (database_knotinfo CSV export).",
         "Alternate diagrams for individual entries follow as @override lines."],
        rolfsen,
        ROLFSEN_OVERRIDES,
    )

    ht = [(ht_name(n), p) for n, p in knot_lines(knots, lambda r: cn(r) == 11)]
    write_table(
        args.out_dir / "ht11.tbl",
        ["Prime knots with 11 crossings, Hoste-Thistlethwaite numbering.",
         "PD codes from KnotInfo (database_knotinfo CSV export)."],
        ht,
    )

    dt = [(n, "DT: " + " ".join(str(v) for v in json.loads(r["dt_notation"])))
          for r in knots if 3 <= cn(r) <= 10 for n in [r["name"]]]
    write_table(
        args.out_dir / "rolfsen_upto10_dt.tbl",
        ["Prime knots through 10 crossings as DT codes (KnotInfo)."],
        dt,
    )

    links = []
    for row in read_rows(args.csv_dir / "linkinfo_data_complete.csv"):
        if not row["crossing_number"].isdigit() or int(row["crossing_number"]) > args.link_crossings:
            continue
        vec = row["pd_notation_vector"].replace("{", "[").replace("}", "]")
        links.append((row["name"], pd_text(json.loads(vec))))
    write_table(
        args.out_dir / "links_upto8.tbl",
        ["Prime links through %d crossings, all orientation classes." % args.link_crossings,
         "PD codes from LinkInfo (database_knotinfo CSV export)."],
        links,
    )


if __name__ == "__main__":
    main()
