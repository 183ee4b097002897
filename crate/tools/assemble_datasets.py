#!/usr/bin/env python3
"""Assemble the final JSON datasets under crates/core/data/ from the raw
extractions (/tmp/*_raw.json, produced by extract_tables.py) plus the
hand-transcribed section-1 claims and the regime registry."""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "data"
OUT.mkdir(parents=True, exist_ok=True)


import math
def g2_scale(pt, target=99.0):
    r = math.hypot(pt[0], pt[1])
    if r <= target:
        return pt
    f = target / r
    return [round(pt[0] * f, 4), round(pt[1] * f, 4)]

g2_raw = json.load(open("/tmp/g2_i5_raw.json"))
for case in g2_raw.values():
    for lab in case["labels"]:
        lab["point"] = g2_scale(lab["point"])

b2_raw = json.load(open("/tmp/b2_i5_raw.json"))
part_raw = json.load(open("/tmp/b2_part_raw.json"))
pc_raw = json.load(open("/tmp/b2_pc_raw.json"))

# ------------------------------------------------------------------ regimes
# weights are [a, b] for g2t (L = (a,b,b)) and [a, b, c] for b2t.
# constraints are integer-linear in (a, b, c): {"lhs":[ca,cb,cc],"op":..,"rhs":0}
# meaning ca*a + cb*b + cc*c OP 0; op in {">", "=", "<"}.
def gt(ca, cb, cc):
    return {"lhs": [ca, cb, cc], "op": ">"}
def eq(ca, cb, cc):
    return {"lhs": [ca, cb, cc], "op": "="}

G2 = [
    # id, (a,b), constraints on (a,b,b), i5 case, partition case tag
    ("r_gt_4",   (9, 2), [gt(1, -4, 0)], "r_gt_2"),
    ("3_lt_r_le_4", (7, 2), [gt(1, -3, 0), {"lhs": [-1, 4, 0], "op": ">=" }], "r_gt_2"),
    ("2_lt_r_le_3", (5, 2), [gt(1, -2, 0), {"lhs": [-1, 3, 0], "op": ">=" }], "r_gt_2"),
    ("r_eq_2",   (2, 1), [eq(1, -2, 0)], "r_eq_2"),
    ("32_lt_r_lt_2", (7, 4), [gt(2, -3, 0), gt(-1, 2, 0)], "r_32_2"),
    ("r_eq_32",  (3, 2), [eq(2, -3, 0)], "r_eq_32"),
    ("1_lt_r_lt_32", (5, 4), [gt(1, -1, 0), gt(-2, 3, 0)], "r_1_32"),
    ("r_eq_1",   (1, 1), [eq(1, -1, 0)], "r_eq_1"),
    ("r_lt_1",   (2, 3), [gt(-1, 1, 0)], "r_lt_1"),
]

# b2: constraints in (a,b,c); regions from the (r1,r2)-plane picture.
B2 = [
    # id, (a,b,c), constraints, sec3 partition case, P_C label fragment
    ("c3", (5, 1, 2), [gt(1, -2, -1), gt(0, -1, 1)], "open_hi", "C_{3}"),
    ("d2_hi", (4, 1, 2), [eq(1, -2, -1), gt(0, -1, 1)], "open_hi", "r_{1}-r_{2}-2=0"),
    ("c2", (7, 2, 4), [gt(1, -1, -1), gt(-1, 2, 1), gt(0, -1, 1)], "open_hi", "C_{2}"),
    ("d1_hi", (3, 1, 2), [eq(1, -1, -1), gt(0, -1, 1)], "open_hi", "r_{1}-r_{2}-1=0"),
    ("c1", (5, 2, 4), [gt(-1, 1, 1), gt(1, 0, -1), gt(0, -1, 1)], "open_hi", "C_{1}"),
    ("r1_eq_r2_gt_1", (3, 2, 3), [eq(1, 0, -1), gt(0, -1, 1)], "eq_gt1", "r_{2}>1"),
    ("r1_gt_3_r2_eq_1", (7, 2, 2), [gt(1, -3, 0), eq(0, -1, 1)], "r2_eq_1", "r_{1}>3"),
    ("r1_eq_3_r2_eq_1", (3, 1, 1), [eq(1, -3, 0), eq(0, -1, 1)], "r2_eq_1", "r_{1}=3"),
    ("r1_in_2_3_r2_eq_1", (5, 2, 2), [gt(-1, 3, 0), gt(1, -2, 0), eq(0, -1, 1)], "r2_eq_1", "3>r_{1}>2"),
    ("r1_eq_2_r2_eq_1", (2, 1, 1), [eq(1, -2, 0), eq(0, -1, 1)], "r2_eq_1", "r_{1}=2"),
    ("r1_in_1_2_r2_eq_1", (3, 2, 2), [gt(-1, 2, 0), gt(1, -1, 0), eq(0, -1, 1)], "r2_eq_1", "2>r_{1}>1"),
    ("a1", (7, 2, 1), [gt(0, 1, -1), gt(1, -2, -1)], "r1_hi_r2_lo", "A_{1}"),
    ("d2_lo", (5, 2, 1), [gt(0, 1, -1), eq(1, -2, -1)], "r1_hi_r2_lo", "r_{1}-r_{2}-2=0"),
    ("a2", (4, 2, 1), [gt(0, 1, -1), gt(1, -1, -1), gt(-1, 2, 1), gt(1, -2, 1)], "r1_hi_r2_lo", "A_{2}"),
    ("s2_hi", (7, 4, 1), [eq(1, -2, 1), gt(1, -1, -1)], "r1_hi_r2_lo", "r_{1}+r_{2}-2=0, r_{1}-r_{2}>1"),
    ("a3", (6, 4, 1), [gt(1, -1, -1), gt(-1, 2, -1)], "r1_hi_r2_lo", "A_{3}"),
    ("d1_lo", (4, 3, 1), [eq(1, -1, -1), gt(-1, 2, -1)], "r1_hi_r2_lo", "r_{1}-r_{2}-1=0, r_{1}+r_{2}<2"),
    ("a4", (5, 4, 2), [gt(1, -1, 0), gt(-1, 1, 1), gt(-1, 2, -1), gt(0, 1, -1)], "r1_hi_r2_lo", "A_{4}"),
    ("s2_lo", (5, 4, 3), [eq(1, -2, 1), gt(-1, 1, 1), gt(1, -1, 0)], "r1_hi_r2_lo", "r_{1}+r_{2}-2=0, r_{1}-r_{2}<1"),
    ("a5", (6, 4, 3), [gt(1, -2, 1), gt(-1, 1, 1), gt(0, 1, -1), gt(1, 0, -1)], "r1_hi_r2_lo", "A_{5}"),
    ("d1_mid", (7, 4, 3), [eq(1, -1, -1), gt(1, -2, 1), gt(0, 1, -1)], "r1_hi_r2_lo", "r_{1}-r_{2}-1=0, r_{1}+r_{2}>2"),
    ("p32_12", (3, 2, 1), [eq(2, -3, 0), eq(0, 1, -2)], "r1_hi_r2_lo", "(3/2,1/2)"),
    ("r1_eq_1_r2_lt_1", (2, 2, 1), [eq(1, -1, 0), gt(0, 1, -1)], "r1_eq_1", "r_{1}=1"),
    ("b1", (3, 4, 2), [gt(-1, 1, 0), gt(1, 0, -1), gt(1, -1, 1)], "both_lo", "B_{1}"),
    ("s1_line", (2, 3, 1), [eq(1, -1, 1), gt(1, 0, -1)], "both_lo", "r_{1}+r_{2}-1=0"),
    ("b2", (2, 5, 1), [gt(-1, 1, -1), gt(1, 0, -1)], "both_lo", "B_{2}"),
    ("r1_eq_r2_in_12_1", (2, 3, 2), [eq(1, 0, -1), gt(-1, 1, 0), gt(2, -1, 0)], "eq_lo", "1>r_{2}>1/2"),
    ("r1_eq_r2_eq_12", (1, 2, 1), [eq(1, 0, -1), eq(2, -1, 0)], "eq_lo", "r_{2}=1/2"),
    ("r1_eq_r2_lt_12", (1, 3, 1), [eq(1, 0, -1), gt(-2, 1, 0)], "eq_lo", "r_{2}<1/2"),
    ("r1_eq_r2_eq_1", (1, 1, 1), [eq(1, 0, -1), eq(0, -1, 1)], "eq_one", "r_{2}=r_{1}=1"),
    ("b_zero", (1, 0, 1), [eq(0, 1, 0)], "zero_b", None),
    ("c_zero", (2, 1, 0), [eq(0, 0, 1)], "zero_c", None),
]

# map regime id -> sec4 I5 case id (None = no table: default I5 everywhere)
B2_I5_CASE = {
    "c3": "c3", "d2_hi": "d2_hi", "c2": "c2", "d1_hi": "d1_hi", "c1": "c1",
    "r1_eq_r2_gt_1": "r1_eq_r2_gt_1",
    "r1_gt_3_r2_eq_1": "r1_gt_3_r2_eq_1",
    "r1_eq_3_r2_eq_1": "r1_eq_3_r2_eq_1",
    "r1_in_2_3_r2_eq_1": "r1_2_3_r2_eq_1",
    "r1_eq_2_r2_eq_1": "r1_eq_2_r2_eq_1",
    "r1_in_1_2_r2_eq_1": "r1_1_2_r2_eq_1",
    "a1": "a1", "d2_lo": "d2_lo", "a2": "a2", "s2_hi": "s2_hi", "a3": "a3",
    "d1_lo": "d1_lo", "a4": "a4", "s2_lo": "s2_lo", "a5": "a5",
    "d1_mid": "d1_mid", "p32_12": "p32_12",
    "r1_eq_1_r2_lt_1": "r1_eq_1_r2_lt_1",
    "b1": "b1", "s1_line": "s1_line", "b2": "b2",
    "r1_eq_r2_in_12_1": "eq_12_1", "r1_eq_r2_eq_12": "eq_half",
    "r1_eq_r2_lt_12": "eq_lt_half", "r1_eq_r2_eq_1": "r1_eq_r2_eq_1",
    "b_zero": None, "c_zero": None,
}

regimes = {"schema": 1, "g2t": [], "b2t": []}
for rid, (a, b), cons, part in G2:
    regimes["g2t"].append({
        "id": rid, "weights": [a, b, b], "constraints": cons,
        "i5_case": part, "partition_case": part,
    })
for rid, w, cons, part, pclabel in B2:
    regimes["b2t"].append({
        "id": rid, "weights": list(w), "constraints": cons,
        "i5_case": B2_I5_CASE[rid], "partition_case": part,
        "pc_label": pclabel,
    })
json.dump(regimes, open(OUT / "regimes.json", "w"), indent=1)

# ------------------------------------------------------------ g2 / b2 I5 data
json.dump(g2_raw, open(OUT / "g2_i5.json", "w"), indent=1)
json.dump(b2_raw, open(OUT / "b2_i5.json", "w"), indent=1)

# -------------------------------------------------------- b2 partition tables
part = {}
for case, data in part_raw.items():
    rows = []
    for blk in data["blocks"]:
        if blk["special"]:
            # b_3 of the equal-one table: the chamber set minus the listed
            # singleton cells; spelled out explicitly here.
            words = ["1", "2", "3", "12", "21", "23", "32", "121", "212", "232", "323"]
        else:
            # longest elements of the parabolic subgroups, as words
            words = [{"w_12": "1212", "w_23": "2323"}.get(w, w) for w in blk["words"]]
        rows.append({
            "name": blk["name"], "words": words, "value": blk["value"],
            "anchor": blk["anchor"],
        })
    part[case] = {"blocks": rows, "pc": pc_raw[case]}

# zero-parameter cases: only the unambiguous short blocks near the origin,
# read from the shaded pictures plus the semidirect-product statement.
part["zero_b"] = {
    "blocks": [
        {"name": "z_e", "words": ["e", "2"], "value": None,
         "anchor": "W=(Z/2Z) semidirect (A1~ x A1~), W_I = {s_2}"},
    ],
    "pc": [{"label": "b=0", "groups": [["z_e"]], "anchor": "case b=0"}],
}
part["zero_c"] = {
    "blocks": [
        {"name": "z_e", "words": ["e", "3"], "value": None,
         "anchor": "W=(Z/2Z) semidirect B2~, W_I = {s_3}"},
    ],
    "pc": [{"label": "c=0", "groups": [["z_e"]], "anchor": "case c=0"}],
}
json.dump(part, open(OUT / "b2_part.json", "w"), indent=1)

# ------------------------------------------------------------- g2 section 1
# Hand transcription of the a/b > 4 computations: the T_{s2} expansions, the
# six-line ladders, Claim 6.6 ladders and Claim 6.8 congruences.
sym = [
    # explicit words from the element list; points from the figure labels
    {"name": "u_1", "word": "12121", "point": [0.433, -5.75]},
    {"name": "v_1", "word": "121212", "point": [-1.5, -4.33]},
    {"name": "v'_1", "word": "12121232121", "point": [1.988, -4.31]},
    {"name": "u_2", "word": "12121321", "point": [5.812, -2.8]},
    {"name": "v_2", "word": "212121321", "point": [5.452, -1.31]},
    {"name": "v'_2", "word": "21212312121321", "point": [5.452, -4.31]},
    {"name": "v_3", "word": "2121213", "point": [2.824, 3.2]},
    # figure-only symbols
    {"name": "u_3", "point": [5.812, 3.8]},
    {"name": "v'_3", "point": [3.69, 1.7]},
    {"name": "u_4", "point": [0.433, 5.75]},
    {"name": "v_4", "point": [-0.23, 4.67]},
    {"name": "v'_4", "point": [1.0104, 5.0833], "pinned": True},
    {"name": "u_5", "point": [-5.812, 3.8]},
    {"name": "v_5", "point": [-2.372, 3.2]},
    {"name": "v'_5", "point": [-3.1754, 1.6667], "pinned": True},
    {"name": "u_6", "point": [-5.812, -2.8]},
    {"name": "v_6", "point": [-4.97, -1.3]},
    {"name": "v'_6", "point": [-3.0311, -1.9167], "pinned": True},
    {"name": "u66", "word": "1321"},
    {"name": "v68", "word": "132123"},
]

def lad(x, u, support, anchor):
    return {"kind": "ladder", "x": x, "u": u, "support": support, "anchor": anchor}

def cong(x, u, rhs, anchor):
    return {"kind": "congruence", "x": {"lit": x} if isinstance(x, str) else x,
            "u": u, "rhs": rhs, "anchor": anchor}

claims = []
# exact T_{s2} C_{u_i} expansions (statement (1) preamble)
for i in ["1", "2", "3", "6"]:
    claims.append({
        "kind": "expansion", "x": "2", "u": f"u_{i}",
        "terms": [{"c": [f"v_{i}"], "coeff": "1"},
                  {"c": [f"u_{i}"], "coeff": "-v^(-b)"}],
        "anchor": "T_{s_{2}}C_{u_{i}}=C_{v_{i}}-v^{-b}C_{u_{i}} for i=1,2,3,6",
    })
claims.append({
    "kind": "expansion", "x": "2", "u": "u_4",
    "terms": [{"c": ["v_4"], "coeff": "1"}, {"c": ["u_4"], "coeff": "-v^(-b)"},
              {"c": ["v_2"], "coeff": "1"}],
    "anchor": "T_{s_{2}}C_{u_{4}}=C_{v_{4}}-v^{-b}C_{u_{4}}+C_{v_{2}}",
})
claims.append({
    "kind": "expansion", "x": "2", "u": "u_5",
    "terms": [{"c": ["v_5"], "coeff": "1"}, {"c": ["u_5"], "coeff": "-v^(-b)"},
              {"c": ["v_1"], "coeff": "1"}],
    "anchor": "T_{s_{2}}C_{u_{5}}=C_{v_{5}}-v^{-b}C_{u_{5}}+C_{v_{1}}",
})

# six-line ladders; [w]u_i denotes the element w*u_i
def six_lines(i, extra23):
    u = f"u_{i}"
    ex = [[f"v_{j}"] for j in extra23]
    return [
        lad("3", u, [["3", u], [u]], f"T_{{3}}C_{{u_{i}}} ladder"),
        lad("23", u, [["23", u], ["3", u], [u], [f"v_{i}"]] + ex,
            f"T_{{23}}C_{{u_{i}}} ladder"),
        lad("123", u, [["123", u], ["23", u], ["3", u], [u], [f"v_{i}"]] + ex,
            f"T_{{123}}C_{{u_{i}}} ladder"),
        lad("2123", u, [["2123", u], ["123", u], ["3", u], [u]],
            f"T_{{2123}}C_{{u_{i}}} ladder"),
        lad("12123", u, [["12123", u], ["2123", u], ["123", u], [u]],
            f"T_{{12123}}C_{{u_{i}}} ladder"),
        lad("212123", u,
            [[f"v'_{i}"], ["12123", u], ["123", u], [u], [f"v_{i}"]] + ex,
            f"T_{{212123}}C_{{u_{i}}} ladder, top C_{{v'_{i}}}"),
    ]

for i in ["1", "2", "3", "6"]:
    claims += six_lines(i, [])
claims += six_lines("4", ["2"])
claims += six_lines("5", ["1"])

# Claim 6.6: u = s1 s3 s2 s1, eleven ladder lines
u = "u66"
claims += [
    lad("2", u, [["2", u], [u]], "6.6: T_{2}C_{u}=C_{2u}+A C_{u}"),
    lad("12", u, [["12", u], ["2", u], [u]], "6.6: T_{12}C_{u}"),
    lad("212", u, [["212", u], ["12", u], [u]], "6.6: T_{212}C_{u}"),
    lad("1212", u, [["u_2"], ["212", u], ["12", u], ["u_1"], ["v_1"]],
        "6.6: T_{1212}C_{u}=C_{u_{2}}+..."),
    lad("2", u, [["2", u], [u]], "6.6: T_{2}C_{u} (second block)"),
    lad("32", u, [["32", u], ["2", u]], "6.6: T_{32}C_{u}"),
    lad("132", u, [["132", u], ["32", u], ["12", u], ["2", u], [u]],
        "6.6: T_{132}C_{u}"),
    lad("2132", u,
        [["2132", u], ["212", u], ["132", u], ["32", u], ["12", u], ["2", u], [u]],
        "6.6: T_{2132}C_{u}"),
    lad("12132", u,
        [["12132", u], ["2132", u], ["212", u], ["32", u], ["12", u], ["2", u],
         [u], ["u_1"], ["v_1"], ["u_2"]],
        "6.6: T_{12132}C_{u}"),
    lad("212132", u,
        [["212132", u], ["12132", u], ["2132", u], ["212", u], ["32", u],
         ["12", u], ["2", u], [u], ["u_1"], ["v_2"], ["u_2"]],
        "6.6: T_{212132}C_{u}"),
    lad("1212132", u,
        [["v'_1"], ["212132", u], ["2132", u], ["212", u], ["32", u], ["2", u],
         ["v_1"], ["v_2"], ["v_3"]],
        "6.6: T_{1212132}C_{u}=C_{v'_{1}}+..."),
]

# Claim 6.8 part (1): ladder lines for v = s1 s3 s2 s1 s2 s3
v = "v68"
claims += [
    lad("2", v, [["2", v], [v]], "6.8(1): T_{2}C_{v}"),
    lad("12", v, [["12", v], ["2", v], [v]], "6.8(1): T_{12}C_{v}"),
    lad("212", v, [["212", v], ["12", v], [v], ["v_3"]], "6.8(1): T_{212}C_{v}"),
    lad("1212", v, [["u_4"], ["212", v], ["12", v], ["v_3"]],
        "6.8(1): T_{1212}C_{v}=C_{u_{4}}+..."),
    lad("32", v, [["32", v], ["2", v]], "6.8(1): T_{32}C_{v}"),
    lad("132", v, [["132", v], ["32", v], ["12", v], ["2", v], [v]],
        "6.8(1): T_{132}C_{v}"),
    lad("2132", v,
        [["2132", v], ["212", v], ["132", v], ["32", v], ["12", v], ["2", v],
         [v], ["v_3"]],
        "6.8(1): T_{2132}C_{v}"),
    lad("12132", v,
        [["12132", v], ["2132", v], ["212", v], ["32", v], ["12", v], ["2", v],
         [v], ["u_4"], ["v_3"]],
        "6.8(1): T_{12132}C_{v}"),
    lad("212132", v,
        [["212132", v], ["12132", v], ["2132", v], ["212", v], ["32", v],
         ["12", v], ["2", v], [v], ["u_4"], ["v_4"], ["v_3"], ["v_2"]],
        "6.8(1): T_{212132}C_{v}"),
]

# Claim 6.8 parts (2)-(3): fourteen printed congruences + family rows
def c68(x, rhs, anchor):
    return cong(x, v, rhs, anchor)

claims += [
    c68("2", [], "6.8: T_{s_2}C_v = T_{s_2 v} mod H_{<0}"),
    c68("2", [], "6.8: T_{s_2}C_v (printed again in the second list)"),
    c68("12", [], "6.8: T_{s_1 s_2}C_v"),
    c68("212", [{"coeff": "1", "t": ["v_3"]}],
        "6.8: T_{s_2s_1s_2}C_{v} = T_{s_2s_1s_2 v}+T_{v_3}"),
    c68("3212", [{"coeff": "1", "t": ["3", "v_3"]}],
        "6.8: T_{s_3s_2s_1s_2}C_{v} = T_{..v}+T_{s_3 v_3}"),
    c68("23212", [{"coeff": "1", "t": ["23", "v_3"]}],
        "6.8: T_{s_2s_3s_2s_1s_2}C_{v} = T_{..v}+T_{s_2s_3 v_3}"),
    c68("123212", [{"coeff": "1", "t": ["123", "v_3"]}],
        "6.8: T_{w_1}C_{v} = T_{w_1 v}+T_{s_1s_2s_3 v_3}"),
    c68("32", [], "6.8: T_{s_3s_2}C_v"),
    c68("132", [], "6.8: T_{s_1s_3s_2}C_v"),
    c68("2132", [], "6.8: T_{s_2s_1s_3s_2}C_v"),
    c68("12132", [], "6.8: T_{s_1s_2s_1s_3s_2}C_v"),
    c68("212132", [], "6.8: T_{s_2s_1s_2s_1s_3s_2}C_v"),
    c68("3212132", [], "6.8: T_{s_3s_2s_1s_2s_1s_3s_2}C_v"),
    # T_{w_2 s_3 s_2} C_v: the correction is T_{s_3s_2s_1s_2s_3 v_3} on top
    # of the standard leading term T_{xv}
    c68("23212132", [{"coeff": "1", "t": ["32123", "v_3"]}],
        "6.8: T_{w_2s_3s_2}C_{v} = T_{w_2 v}+T_{s_3s_2s_1s_2s_3 v_3}"),
    # family rows at n >= 1, standard leading term plus one correction
    cong({"var": "y1", "w": True, "tail": ""}, v,
         [{"coeff": "1", "t": ["$y1", "123", "v_3"]}],
         "6.8: T_{y_1w_1^n}C_v = T_{y_1w_1^{n-1}s_2s_1s_2v}+T_{y_1w_1^{n-1}s_1s_2s_3v_3}"),
    cong({"var": "y2", "w": True, "tail": "32"}, v,
         [{"coeff": "1", "t": ["$y2", "32123", "v_3"]}],
         "6.8: T_{y_2w_2^ns_3s_2}C_v = T_{y_2w_2^{n-1}s_2s_1s_2v}+T_{y_2w_2^{n-1}s_3s_2s_1s_2s_3v_3}"),
]

sec1 = {
    "group": "g2t",
    "weights": [9, 2, 2],
    "resolution_radius": 25,
    "translations": {"w": "1212312123", "w1": "123212", "w2": "232121"},
    "symbols": sym,
    "claims": claims,
}
for s in sym:
    if "point" in s and not s.pop("pinned", False):
        s["point"] = g2_scale(s["point"])
json.dump(sec1, open(OUT / "g2_sec1.json", "w"), indent=1)
print("wrote datasets:",
      [p.name for p in sorted(OUT.glob('*.json'))],
      "| sec1 claims:", len(claims))
